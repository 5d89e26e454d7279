//! The intermediate exchange document between parsing and graph construction.
//!
//! ```json
//! {
//!   "schema_version": 1,
//!   "jobseekers": {
//!     "<jobseeker id>": {
//!       "<organization>": {
//!         "project1": { "title": "...", "duration": "Jan 2020 - Jun 2021", "details": "..." }
//!       }
//!     }
//!   },
//!   "profiles": {
//!     "<jobseeker id>": { "name": "...", "declared_skills": ["c++", "java"] }
//!   }
//! }
//! ```
//!
//! `jobseekers` nests jobseeker -> organization -> project -> fields. Project keys
//! are `project<N>`, where `N` is the 1-based position of the experience in the
//! resume; numbering is per jobseeker, across organizations, so document order
//! survives the grouping. `profiles` carries what the nesting cannot (name and
//! declared skills) and is optional per jobseeker. Durations stay raw strings
//! and are parsed to months when records are loaded.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::parser::{parse_duration_with, DurationOptions, ExperienceEntry, ResumeRecord};

pub const INTERMEDIATE_SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("{path}: {message}")]
    Schema { path: String, message: String },
    #[error("jobseeker `{0}` appears twice")]
    DuplicateJobseeker(String),
}

fn schema(path: impl Into<String>, message: impl Into<String>) -> FormatError {
    FormatError::Schema {
        path: path.into(),
        message: message.into(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProjectDoc {
    pub title: String,
    pub duration: String,
    pub details: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Profile {
    pub name: String,
    pub declared_skills: BTreeSet<String>,
}

/// organization -> project key -> project
pub type Organizations = BTreeMap<String, BTreeMap<String, ProjectDoc>>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntermediateDocument {
    pub schema_version: u32,
    pub jobseekers: BTreeMap<String, Organizations>,
    #[serde(default)]
    pub profiles: BTreeMap<String, Profile>,
}

impl Default for IntermediateDocument {
    fn default() -> Self {
        Self {
            schema_version: INTERMEDIATE_SCHEMA_VERSION,
            jobseekers: BTreeMap::new(),
            profiles: BTreeMap::new(),
        }
    }
}

fn project_ordinal(key: &str) -> Option<usize> {
    key.strip_prefix("project")
        .filter(|n| !n.starts_with('0'))
        .and_then(|n| n.parse().ok())
        .filter(|&n| n > 0)
}

fn as_object<'a>(
    v: &'a Value,
    path: &str,
) -> Result<&'a serde_json::Map<String, Value>, FormatError> {
    v.as_object()
        .ok_or_else(|| schema(path, "expected an object"))
}

fn string_field(
    obj: &serde_json::Map<String, Value>,
    path: &str,
    field: &str,
) -> Result<String, FormatError> {
    match obj.get(field) {
        Some(Value::String(s)) => Ok(s.clone()),
        Some(_) => Err(schema(format!("{path}.{field}"), "expected a string")),
        None => Err(schema(format!("{path}.{field}"), "missing required field")),
    }
}

impl IntermediateDocument {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("document serializes");
        s.push('\n');
        s
    }

    /// Parses and validates a document, reporting violations by JSON path.
    pub fn from_json(source: &str) -> Result<Self, FormatError> {
        let root: Value = serde_json::from_str(source)
            .map_err(|e| schema(format!("line {}", e.line()), e.to_string()))?;
        let root = as_object(&root, "$")?;
        let version = root
            .get("schema_version")
            .and_then(Value::as_u64)
            .ok_or_else(|| schema("$.schema_version", "missing or not an integer"))?;
        if version != u64::from(INTERMEDIATE_SCHEMA_VERSION) {
            return Err(schema(
                "$.schema_version",
                format!("unsupported version {version}"),
            ));
        }
        for key in root.keys() {
            if !matches!(key.as_str(), "schema_version" | "jobseekers" | "profiles") {
                return Err(schema(format!("$.{key}"), "unknown field"));
            }
        }

        let mut doc = Self::default();
        let seekers = root
            .get("jobseekers")
            .ok_or_else(|| schema("$.jobseekers", "missing required field"))?;
        for (js, orgs) in as_object(seekers, "$.jobseekers")? {
            let js_path = format!("$.jobseekers.{js}");
            let mut out_orgs = Organizations::new();
            let mut ordinals = BTreeSet::new();
            for (org, projects) in as_object(orgs, &js_path)? {
                let org_path = format!("{js_path}.{org}");
                let mut out_projects = BTreeMap::new();
                for (pkey, project) in as_object(projects, &org_path)? {
                    let p_path = format!("{org_path}.{pkey}");
                    let ordinal = project_ordinal(pkey).ok_or_else(|| {
                        schema(&p_path, "project keys must be `project<N>` with N >= 1")
                    })?;
                    if !ordinals.insert(ordinal) {
                        return Err(schema(
                            &p_path,
                            format!("project number {ordinal} used twice"),
                        ));
                    }
                    let fields = as_object(project, &p_path)?;
                    for key in fields.keys() {
                        if !matches!(key.as_str(), "title" | "duration" | "details") {
                            return Err(schema(format!("{p_path}.{key}"), "unknown field"));
                        }
                    }
                    out_projects.insert(
                        pkey.clone(),
                        ProjectDoc {
                            title: string_field(fields, &p_path, "title")?,
                            duration: string_field(fields, &p_path, "duration")?,
                            details: string_field(fields, &p_path, "details")?,
                        },
                    );
                }
                out_orgs.insert(org.clone(), out_projects);
            }
            doc.jobseekers.insert(js.clone(), out_orgs);
        }

        if let Some(profiles) = root.get("profiles") {
            for (js, profile) in as_object(profiles, "$.profiles")? {
                let path = format!("$.profiles.{js}");
                if !doc.jobseekers.contains_key(js) {
                    return Err(schema(&path, "profile for a jobseeker not in `jobseekers`"));
                }
                let p: Profile = serde_json::from_value(profile.clone())
                    .map_err(|e| schema(&path, e.to_string()))?;
                doc.profiles.insert(js.clone(), p);
            }
        }
        Ok(doc)
    }
}

pub fn emit_intermediate(records: &[ResumeRecord]) -> Result<IntermediateDocument, FormatError> {
    let mut doc = IntermediateDocument::default();
    for r in records {
        if doc.jobseekers.contains_key(&r.jobseeker_id) {
            return Err(FormatError::DuplicateJobseeker(r.jobseeker_id.clone()));
        }
        let mut orgs = Organizations::new();
        for (i, e) in r.experiences.iter().enumerate() {
            orgs.entry(e.organization.clone()).or_default().insert(
                format!("project{}", i + 1),
                ProjectDoc {
                    title: e.project_title.clone(),
                    duration: e.duration_raw.clone(),
                    details: e.details.clone(),
                },
            );
        }
        doc.jobseekers.insert(r.jobseeker_id.clone(), orgs);
        doc.profiles.insert(
            r.jobseeker_id.clone(),
            Profile {
                name: r.name.clone(),
                declared_skills: r.declared_skills.clone(),
            },
        );
    }
    Ok(doc)
}

pub fn load_intermediate(doc: &IntermediateDocument) -> Result<Vec<ResumeRecord>, FormatError> {
    load_intermediate_with(doc, &DurationOptions::default())
}

pub fn load_intermediate_with(
    doc: &IntermediateDocument,
    durations: &DurationOptions,
) -> Result<Vec<ResumeRecord>, FormatError> {
    let mut records = Vec::with_capacity(doc.jobseekers.len());
    for (js, orgs) in &doc.jobseekers {
        let mut numbered = BTreeMap::new();
        for (org, projects) in orgs {
            for (pkey, p) in projects {
                let path = format!("$.jobseekers.{js}.{org}.{pkey}");
                let n = project_ordinal(pkey).ok_or_else(|| {
                    schema(&path, "project keys must be `project<N>` with N >= 1")
                })?;
                let entry = ExperienceEntry {
                    organization: org.clone(),
                    project_title: p.title.clone(),
                    duration_raw: p.duration.clone(),
                    duration_months: parse_duration_with(&p.duration, durations).months,
                    details: p.details.clone(),
                };
                if numbered.insert(n, entry).is_some() {
                    return Err(schema(path, format!("project number {n} used twice")));
                }
            }
        }
        let profile = doc.profiles.get(js).cloned().unwrap_or_default();
        records.push(ResumeRecord {
            jobseeker_id: js.clone(),
            name: profile.name,
            declared_skills: profile.declared_skills,
            experiences: numbered.into_values().collect(),
        });
    }
    Ok(records)
}

#[cfg(test)]
mod tests {
    use super::*;

    const NESTED: &str = r#"{
  "schema_version": 1,
  "jobseekers": {
    "jobseekerid": {
      "org1": {
        "project1": { "title": "project title", "duration": "2 years", "details": "filtered text" },
        "project2": { "title": "project title 2", "duration": "6 months", "details": "more text" }
      }
    }
  }
}"#;

    #[test]
    fn nested_document_loads() {
        let doc = IntermediateDocument::from_json(NESTED).unwrap();
        let recs = load_intermediate(&doc).unwrap();
        assert_eq!(recs.len(), 1);
        let r = &recs[0];
        assert_eq!(r.jobseeker_id, "jobseekerid");
        assert_eq!(r.experiences.len(), 2);
        assert_eq!(r.experiences[0].organization, "org1");
        assert_eq!(r.experiences[0].duration_months, 24);
        assert_eq!(r.experiences[1].project_title, "project title 2");
        assert_eq!(r.experiences[1].duration_months, 6);
    }

    #[test]
    fn missing_details_names_the_path() {
        let src = NESTED.replace(r#", "details": "more text""#, "");
        assert_eq!(
            IntermediateDocument::from_json(&src).unwrap_err(),
            FormatError::Schema {
                path: "$.jobseekers.jobseekerid.org1.project2.details".into(),
                message: "missing required field".into()
            }
        );
    }

    #[test]
    fn bad_keys_and_versions() {
        assert!(IntermediateDocument::from_json(&NESTED.replace("project2", "p2")).is_err());
        assert!(IntermediateDocument::from_json(
            &NESTED.replace("\"schema_version\": 1", "\"schema_version\": 2")
        )
        .is_err());
        assert!(IntermediateDocument::from_json("[]").is_err());
    }

    #[test]
    fn empty_document() {
        let doc =
            IntermediateDocument::from_json(r#"{"schema_version":1,"jobseekers":{}}"#).unwrap();
        assert!(load_intermediate(&doc).unwrap().is_empty());
        assert_eq!(
            emit_intermediate(&[]).unwrap(),
            IntermediateDocument::default()
        );
    }

    fn rec(id: &str, orgs: &[&str]) -> ResumeRecord {
        ResumeRecord {
            jobseeker_id: id.into(),
            name: "N".into(),
            declared_skills: ["java".to_string()].into(),
            experiences: orgs
                .iter()
                .enumerate()
                .map(|(i, o)| ExperienceEntry {
                    organization: o.to_string(),
                    project_title: format!("t{i}"),
                    duration_raw: "Jan 2020 - Jun 2021".into(),
                    duration_months: 18,
                    details: format!("d{i}"),
                })
                .collect(),
        }
    }

    #[test]
    fn interleaved_orgs_keep_order() {
        let records = vec![rec("a", &["x", "y", "x"]), rec("b", &["z"])];
        let doc = emit_intermediate(&records).unwrap();
        assert_eq!(
            doc.jobseekers["a"]["x"].keys().collect::<Vec<_>>(),
            ["project1", "project3"]
        );
        let json = doc.to_json();
        let back = IntermediateDocument::from_json(&json).unwrap();
        assert_eq!(back, doc);
        assert_eq!(load_intermediate(&back).unwrap(), records);
    }

    #[test]
    fn duplicate_ids_rejected() {
        let r = rec("a", &["x"]);
        assert_eq!(
            emit_intermediate(&[r.clone(), r]).unwrap_err(),
            FormatError::DuplicateJobseeker("a".into())
        );
    }
}
