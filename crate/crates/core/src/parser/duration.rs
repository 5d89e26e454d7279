use std::ops::Range;
use std::sync::LazyLock;

use regex::{Captures, Regex};
use serde::{Deserialize, Serialize};

const MONTH: &str = r"(jan(?:uary)?|feb(?:ruary)?|mar(?:ch)?|apr(?:il)?|may|june?|july?|aug(?:ust)?|sep(?:t(?:ember)?)?|oct(?:ober)?|nov(?:ember)?|dec(?:ember)?)\.?";
const DASH: &str = r"\s*(?:-|–|—|to|until|till)\s*";
const OPEN_END: &str = r"(present|current|now|today|date)";

static MONTH_RANGE: LazyLock<Regex> = LazyLock::new(|| {
    Regex::new(&format!(
        r"(?i)\b{MONTH}\s*,?\s*(\d{{4}}){DASH}(?:{MONTH}\s*,?\s*(\d{{4}})|{OPEN_END})\b"
    ))
    .unwrap()
});
static YEAR_RANGE: LazyLock<Regex> = LazyLock::new(|| {
    Regex::new(&format!(r"(?i)\b(\d{{4}}){DASH}(?:(\d{{4}})|{OPEN_END})\b")).unwrap()
});
static YEARS_MONTHS: LazyLock<Regex> = LazyLock::new(|| {
    Regex::new(
        r"(?i)\b(\d+(?:\.\d+)?)\s*(?:years?|yrs?)\.?,?\s*(?:and\s+)?(\d+)\s*(?:months?|mos?)\b",
    )
    .unwrap()
});
static YEARS: LazyLock<Regex> =
    LazyLock::new(|| Regex::new(r"(?i)\b(\d+(?:\.\d+)?)\s*(?:years?|yrs?)\b").unwrap());
static MONTHS: LazyLock<Regex> =
    LazyLock::new(|| Regex::new(r"(?i)\b(\d+)\s*(?:months?|mos?)\b").unwrap());

/// A calendar month, used as the stand-in for "present" in open-ended ranges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct YearMonth {
    pub year: i32,
    /// 1-based
    pub month: u32,
}

impl YearMonth {
    fn index(self) -> i64 {
        i64::from(self.year) * 12 + i64::from(self.month) - 1
    }
}

impl std::str::FromStr for YearMonth {
    type Err = String;

    /// Accepts `YYYY-MM`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (y, m) = s
            .split_once('-')
            .ok_or_else(|| format!("expected YYYY-MM, got `{s}`"))?;
        let year = y.parse().map_err(|_| format!("bad year in `{s}`"))?;
        let month: u32 = m.parse().map_err(|_| format!("bad month in `{s}`"))?;
        if !(1..=12).contains(&month) {
            return Err(format!("month out of range in `{s}`"));
        }
        Ok(Self { year, month })
    }
}

/// Settings for duration parsing.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct DurationOptions {
    /// Month substituted for "present"/"current". Without it, open-ended ranges
    /// are unrecognized, which keeps parsing independent of the wall clock.
    pub present: Option<YearMonth>,
}

/// Outcome of parsing a duration string.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Duration {
    pub months: u32,
    pub recognized: bool,
}

impl Duration {
    const UNKNOWN: Self = Self {
        months: 0,
        recognized: false,
    };
}

/// A duration pattern located inside a longer line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DurationMatch {
    pub span: Range<usize>,
    pub duration: Duration,
}

fn month_number(name: &str) -> u32 {
    match &name.to_lowercase()[..3] {
        "jan" => 1,
        "feb" => 2,
        "mar" => 3,
        "apr" => 4,
        "may" => 5,
        "jun" => 6,
        "jul" => 7,
        "aug" => 8,
        "sep" => 9,
        "oct" => 10,
        "nov" => 11,
        _ => 12,
    }
}

fn span_months(start: i64, end: i64, inclusive: bool) -> Duration {
    let delta = end - start + i64::from(inclusive);
    if delta < 0 || start > end {
        return Duration::UNKNOWN;
    }
    Duration {
        months: u32::try_from(delta).unwrap_or(u32::MAX),
        recognized: true,
    }
}

fn from_month_range(c: &Captures, opts: &DurationOptions) -> Duration {
    let start = YearMonth {
        year: c[2].parse().unwrap_or(0),
        month: month_number(&c[1]),
    };
    let end = match (c.get(3), c.get(4)) {
        (Some(m), Some(y)) => YearMonth {
            year: y.as_str().parse().unwrap_or(0),
            month: month_number(m.as_str()),
        },
        _ => match opts.present {
            Some(p) => p,
            None => return Duration::UNKNOWN,
        },
    };
    span_months(start.index(), end.index(), true)
}

fn from_year_range(c: &Captures, opts: &DurationOptions) -> Duration {
    let start: i64 = c[1].parse().unwrap_or(0);
    match c.get(2) {
        Some(y) => {
            let end: i64 = y.as_str().parse().unwrap_or(0);
            if end < start {
                return Duration::UNKNOWN;
            }
            Duration {
                months: u32::try_from(12 * (end - start)).unwrap_or(u32::MAX),
                recognized: true,
            }
        }
        None => match opts.present {
            // January of the start year through the present month
            Some(p) => span_months(start * 12, p.index(), true),
            None => Duration::UNKNOWN,
        },
    }
}

fn years_to_months(years: &str) -> u32 {
    let y: f64 = years.parse().unwrap_or(0.0);
    (y * 12.0).round().clamp(0.0, f64::from(u32::MAX)) as u32
}

fn known(months: u32) -> Duration {
    Duration {
        months,
        recognized: true,
    }
}

/// Finds the first duration pattern in `text`, trying the most specific forms first.
pub fn find_duration(text: &str, opts: &DurationOptions) -> Option<DurationMatch> {
    type Convert = fn(&Captures, &DurationOptions) -> Duration;
    let patterns: [(&Regex, Convert); 5] = [
        (&MONTH_RANGE, from_month_range),
        (&YEAR_RANGE, from_year_range),
        (&YEARS_MONTHS, |c, _| {
            known(years_to_months(&c[1]).saturating_add(c[2].parse().unwrap_or(0)))
        }),
        (&YEARS, |c, _| known(years_to_months(&c[1]))),
        (&MONTHS, |c, _| known(c[1].parse().unwrap_or(0))),
    ];
    patterns.iter().find_map(|(re, convert)| {
        re.captures(text).map(|c| DurationMatch {
            span: c.get(0).expect("whole match").range(),
            duration: convert(&c, opts),
        })
    })
}

/// Months covered by `raw`; unrecognized input yields 0 months with `recognized == false`.
pub fn parse_duration_with(raw: &str, opts: &DurationOptions) -> Duration {
    find_duration(raw, opts)
        .map(|m| m.duration)
        .unwrap_or(Duration::UNKNOWN)
}

pub fn parse_duration(raw: &str) -> Duration {
    parse_duration_with(raw, &DurationOptions::default())
}
