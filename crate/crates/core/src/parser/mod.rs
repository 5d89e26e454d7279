//! Plain-text resume parsing: sections, identity, skills and experience entries.

mod duration;
mod org;
mod sections;

use std::collections::BTreeSet;
use std::ops::Range;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use duration::{
    find_duration, parse_duration, parse_duration_with, Duration, DurationMatch, DurationOptions,
    YearMonth,
};
pub use org::{normalize_org, ORG_SUFFIXES, UNKNOWN_ORG};
pub use sections::{split_sections, Section, SectionHeaders, SectionKind, SectionMap};

use crate::lexicon::SkillLexicon;

/// Lines at the top of an experience block searched for a date range.
const BLOCK_HEADER_LINES: usize = 4;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("resume text is empty")]
    EmptyInput,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExperienceEntry {
    pub organization: String,
    pub project_title: String,
    /// Duration as written in the resume.
    pub duration_raw: String,
    /// 0 when the duration is unknown.
    pub duration_months: u32,
    pub details: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResumeRecord {
    pub jobseeker_id: String,
    pub name: String,
    pub declared_skills: BTreeSet<String>,
    pub experiences: Vec<ExperienceEntry>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DiagnosticKind {
    UnknownDuration,
    UnmatchedHeader,
    NameLowConfidence,
    MissingName,
    OrphanBlock,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Diagnostic {
    pub kind: DiagnosticKind,
    pub message: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParseReport {
    pub diagnostics: Vec<Diagnostic>,
}

impl ParseReport {
    fn push(&mut self, kind: DiagnosticKind, message: impl Into<String>) {
        self.diagnostics.push(Diagnostic {
            kind,
            message: message.into(),
        });
    }

    pub fn count(&self, kind: DiagnosticKind) -> usize {
        self.diagnostics.iter().filter(|d| d.kind == kind).count()
    }
}

impl std::fmt::Display for ParseReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for d in &self.diagnostics {
            writeln!(f, "{:?}: {}", d.kind, d.message)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ParseOptions {
    pub headers: SectionHeaders,
    pub duration: DurationOptions,
}

/// Canonical skills mentioned in `text`.
pub fn extract_skills(text: &str, lexicon: &SkillLexicon) -> BTreeSet<String> {
    lexicon.match_tokens(&lexicon.tokenizer().tokenize(text))
}

/// `js-0007-jane-doe`
pub fn jobseeker_id(seed: u32, name: &str) -> String {
    let slug = name
        .to_lowercase()
        .split(|c: char| !c.is_alphanumeric())
        .filter(|w| !w.is_empty())
        .collect::<Vec<_>>()
        .join("-");
    let slug = if slug.is_empty() { "anonymous" } else { &slug };
    format!("js-{seed:04}-{slug}")
}

pub fn parse_resume(
    text: &str,
    lexicon: &SkillLexicon,
    id_seed: u32,
) -> Result<(ResumeRecord, ParseReport), ParseError> {
    parse_resume_with(text, lexicon, id_seed, &ParseOptions::default())
}

pub fn parse_resume_with(
    text: &str,
    lexicon: &SkillLexicon,
    id_seed: u32,
    options: &ParseOptions,
) -> Result<(ResumeRecord, ParseReport), ParseError> {
    if text.trim().is_empty() {
        return Err(ParseError::EmptyInput);
    }
    let mut report = ParseReport::default();
    let sections = split_sections(text, &options.headers);
    for h in &sections.unmatched_headers {
        report.push(
            DiagnosticKind::UnmatchedHeader,
            format!("header-like line `{h}` matched no section keyword"),
        );
    }

    let name = find_name(text, &sections, &mut report);
    let declared_skills = extract_skills(&sections.text(SectionKind::Skills, text), lexicon);

    let mut experiences = Vec::new();
    for section in sections.of_kind(SectionKind::Experience) {
        segment_experience(
            text,
            section.span.clone(),
            lexicon,
            options,
            &mut experiences,
            &mut report,
        );
    }

    let record = ResumeRecord {
        jobseeker_id: jobseeker_id(id_seed, &name),
        name,
        declared_skills,
        experiences,
    };
    Ok((record, report))
}

fn first_line(body: &str) -> Option<&str> {
    body.lines().map(str::trim).find(|l| !l.is_empty())
}

fn find_name(text: &str, sections: &SectionMap, report: &mut ParseReport) -> String {
    if let Some(line) = sections
        .of_kind(SectionKind::Identity)
        .find_map(|s| first_line(&text[s.span.clone()]))
    {
        return line.to_string();
    }
    let preamble = sections
        .sections
        .iter()
        .find(|s| s.header.is_none())
        .and_then(|s| first_line(&text[s.span.clone()]));
    match preamble {
        Some(line) => {
            report.push(
                DiagnosticKind::NameLowConfidence,
                format!("name `{line}` taken from the first line outside any section"),
            );
            line.to_string()
        }
        None => {
            report.push(DiagnosticKind::MissingName, "no name line found");
            String::new()
        }
    }
}

/// Non-blank lines with their byte ranges, grouped into blank-line separated blocks.
fn blocks(text: &str, span: Range<usize>) -> Vec<Vec<Range<usize>>> {
    let mut out: Vec<Vec<Range<usize>>> = Vec::new();
    let mut current = Vec::new();
    let mut offset = span.start;
    for line in text[span].split_inclusive('\n') {
        let start = offset;
        offset += line.len();
        let body = line.trim_end_matches(['\n', '\r']);
        if body.trim().is_empty() {
            if !current.is_empty() {
                out.push(std::mem::take(&mut current));
            }
        } else {
            current.push(start..start + body.len());
        }
    }
    if !current.is_empty() {
        out.push(current);
    }
    out
}

fn trim_label(s: &str) -> &str {
    s.trim_matches(|c: char| {
        c.is_whitespace()
            || matches!(
                c,
                '|' | ',' | ';' | ':' | '(' | ')' | '[' | ']' | '-' | '–' | '—' | '@'
            )
    })
}

struct OpenEntry {
    entry: ExperienceEntry,
    details: Option<Range<usize>>,
}

fn segment_experience(
    text: &str,
    span: Range<usize>,
    lexicon: &SkillLexicon,
    options: &ParseOptions,
    out: &mut Vec<ExperienceEntry>,
    report: &mut ParseReport,
) {
    let mut open: Option<OpenEntry> = None;
    let finish = |open: Option<OpenEntry>, out: &mut Vec<ExperienceEntry>| {
        if let Some(mut o) = open {
            if let Some(r) = o.details {
                o.entry.details = text[r].trim().to_string();
            }
            out.push(o.entry);
        }
    };

    for block in blocks(text, span) {
        let dated = block
            .iter()
            .take(BLOCK_HEADER_LINES)
            .enumerate()
            .find_map(|(i, r)| find_duration(&text[r.clone()], &options.duration).map(|m| (i, m)));

        let Some((date_idx, found)) = dated else {
            let (start, end) = (block[0].start, block[block.len() - 1].end);
            match open.as_mut() {
                Some(o) => {
                    o.details = Some(o.details.as_ref().map_or(start, |r| r.start)..end);
                }
                None => report.push(
                    DiagnosticKind::OrphanBlock,
                    format!(
                        "experience block `{}` has no date range and no preceding project",
                        text[block[0].clone()].trim()
                    ),
                ),
            }
            continue;
        };

        finish(open.take(), out);

        let date_line = &text[block[date_idx].clone()];
        let duration_raw = date_line[found.span.clone()].trim().to_string();
        if !found.duration.recognized {
            report.push(
                DiagnosticKind::UnknownDuration,
                format!("could not compute months for `{duration_raw}`"),
            );
        }
        let mut lines: Vec<&str> = block[..date_idx].iter().map(|r| &text[r.clone()]).collect();
        lines.push(&date_line[..found.span.start]);
        lines.push(&date_line[found.span.end..]);
        let labels: Vec<&str> = lines
            .into_iter()
            .flat_map(|l| l.split('|'))
            .map(trim_label)
            .filter(|l| !l.is_empty() && lexicon.normalize_skill(l).is_none())
            .collect();

        let organization = normalize_org(labels.first().copied().unwrap_or(""));
        let project_title = labels.get(1..).map(|t| t.join(" - ")).unwrap_or_default();
        let details = (date_idx + 1 < block.len())
            .then(|| block[date_idx + 1].start..block[block.len() - 1].end);
        open = Some(OpenEntry {
            entry: ExperienceEntry {
                organization,
                project_title,
                duration_raw,
                duration_months: found.duration.months,
                details: String::new(),
            },
            details,
        });
    }
    finish(open, out);
}
