use std::collections::BTreeMap;
use std::ops::Range;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SectionKind {
    Identity,
    Skills,
    Experience,
    Other,
}

/// Header keywords recognized when splitting a resume into sections.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SectionHeaders {
    headers: BTreeMap<String, SectionKind>,
}

impl Default for SectionHeaders {
    fn default() -> Self {
        use SectionKind::*;
        Self::from_pairs([
            ("skills", Skills),
            ("technical skills", Skills),
            ("skill set", Skills),
            ("experience", Experience),
            ("work experience", Experience),
            ("professional experience", Experience),
            ("projects", Experience),
            ("employment history", Experience),
            ("education", Other),
            ("summary", Other),
            ("objective", Other),
        ])
    }
}

impl SectionHeaders {
    pub fn empty() -> Self {
        Self {
            headers: BTreeMap::new(),
        }
    }

    pub fn from_pairs<'a>(pairs: impl IntoIterator<Item = (&'a str, SectionKind)>) -> Self {
        let mut h = Self::empty();
        for (k, v) in pairs {
            h.insert(k, v);
        }
        h
    }

    pub fn insert(&mut self, header: &str, kind: SectionKind) {
        self.headers.insert(header_key(header), kind);
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, SectionKind)> {
        self.headers.iter().map(|(k, v)| (k.as_str(), *v))
    }

    pub fn classify(&self, line: &str) -> Option<SectionKind> {
        self.headers.get(&header_key(line)).copied()
    }
}

/// `"== Technical  Skills: =="` -> `"technical skills"`
fn header_key(line: &str) -> String {
    line.trim_matches(|c: char| !c.is_alphanumeric())
        .split_whitespace()
        .collect::<Vec<_>>()
        .join(" ")
        .to_lowercase()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Section {
    pub kind: SectionKind,
    /// Header line as written; `None` for text before the first header.
    pub header: Option<String>,
    /// Byte range of the (trimmed) section body in the source text.
    pub span: Range<usize>,
}

/// A resume partitioned into sections; bodies are disjoint byte ranges of the source.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SectionMap {
    pub sections: Vec<Section>,
    /// Header-like lines that matched no configured keyword.
    pub unmatched_headers: Vec<String>,
}

impl SectionMap {
    pub fn of_kind(&self, kind: SectionKind) -> impl Iterator<Item = &Section> {
        self.sections.iter().filter(move |s| s.kind == kind)
    }

    /// Bodies of every section of `kind`, in document order, separated by blank lines.
    pub fn text(&self, kind: SectionKind, source: &str) -> String {
        self.of_kind(kind)
            .map(|s| &source[s.span.clone()])
            .collect::<Vec<_>>()
            .join("\n\n")
    }

    pub fn has(&self, kind: SectionKind) -> bool {
        self.of_kind(kind).next().is_some()
    }
}

fn trimmed_range(text: &str, range: Range<usize>) -> Range<usize> {
    let body = &text[range.clone()];
    let lead = body.len() - body.trim_start().len();
    let trail = body.len() - body.trim_end().len();
    if lead == body.len() {
        return range.start..range.start;
    }
    range.start + lead..range.end - trail
}

fn looks_like_header(line: &str) -> bool {
    let t = line.trim();
    if t.is_empty() || t.len() > 40 || t.split_whitespace().count() > 4 {
        return false;
    }
    if let Some(head) = t.strip_suffix(':') {
        return head.chars().any(char::is_alphabetic);
    }
    let letters = t.chars().filter(|c| c.is_alphabetic()).count();
    letters >= 5
        && t.chars()
            .all(|c| c.is_uppercase() || c.is_whitespace() || c == '&' || c == '/')
}

/// Partitions `text` at whole-line header matches. Text before the first header,
/// under headers mapped to [`SectionKind::Other`], or under header-like lines that
/// match no keyword lands in `Other`.
pub fn split_sections(text: &str, headers: &SectionHeaders) -> SectionMap {
    let mut map = SectionMap::default();
    let mut current: (SectionKind, Option<String>, usize) = (SectionKind::Other, None, 0);
    let mut offset = 0;
    let mut seen_content = false;

    let close = |map: &mut SectionMap, cur: &(SectionKind, Option<String>, usize), end: usize| {
        let span = trimmed_range(text, cur.2..end);
        if !span.is_empty() {
            map.sections.push(Section {
                kind: cur.0,
                header: cur.1.clone(),
                span,
            });
        }
    };

    for line in text.split_inclusive('\n') {
        let start = offset;
        offset += line.len();
        if let Some(kind) = headers.classify(line) {
            close(&mut map, &current, start);
            current = (kind, Some(line.trim().to_string()), offset);
            seen_content = true;
            continue;
        }
        if !line.trim().is_empty() {
            if seen_content && looks_like_header(line) {
                map.unmatched_headers.push(line.trim().to_string());
                close(&mut map, &current, start);
                current = (SectionKind::Other, Some(line.trim().to_string()), offset);
                continue;
            }
            seen_content = true;
        }
    }
    close(&mut map, &current, text.len());
    map
}
