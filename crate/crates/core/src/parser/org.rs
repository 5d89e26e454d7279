/// Legal-form suffixes removed by [`normalize_org`].
pub const ORG_SUFFIXES: &[&str] = &[
    "inc",
    "incorporated",
    "ltd",
    "limited",
    "pvt",
    "private",
    "llc",
    "llp",
    "plc",
    "corp",
    "corporation",
    "gmbh",
    "co",
];

pub const UNKNOWN_ORG: &str = "unknown-org";

fn is_trailing_punct(c: char) -> bool {
    matches!(c, '.' | ',' | ';' | ':' | '&' | '-' | '|' | '(' | ')')
}

/// Lowercases, trims and strips legal-form suffixes ("Acme Pvt. Ltd." -> "acme").
pub fn normalize_org(raw: &str) -> String {
    let mut words: Vec<String> = raw
        .to_lowercase()
        .split_whitespace()
        .map(str::to_string)
        .collect();
    while let Some(last) = words.last_mut() {
        let trimmed = last.trim_end_matches(is_trailing_punct).to_string();
        if trimmed.is_empty() || ORG_SUFFIXES.contains(&trimmed.as_str()) {
            words.pop();
        } else if trimmed.len() != last.len() {
            *last = trimmed;
        } else {
            break;
        }
    }
    if words.is_empty() {
        UNKNOWN_ORG.to_string()
    } else {
        words.join(" ")
    }
}
