//! Tokenization shared by skill extraction, sentiment scoring and query parsing.

use std::collections::BTreeSet;

/// Stop words removed by [`Tokenizer::default`].
pub const DEFAULT_STOP_WORDS: &[&str] = &[
    "a", "an", "the", "and", "or", "of", "in", "on", "at", "to", "for", "with", "by", "as", "is",
    "was", "were", "be", "been", "from",
];

/// Splits text into lowercase tokens.
///
/// Tokens are maximal alphanumeric runs. A configurable set of *protected* tokens
/// (words such as `c++` or `node.js` that contain punctuation) survive intact when
/// they appear delimited by non-alphanumeric characters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tokenizer {
    // longest first, so the greedy match prefers `c++` over `c+`
    protected: Vec<Vec<char>>,
    stop_words: BTreeSet<String>,
}

impl Default for Tokenizer {
    fn default() -> Self {
        Self::new(
            std::iter::empty::<String>(),
            DEFAULT_STOP_WORDS.iter().copied(),
        )
    }
}

impl Tokenizer {
    pub fn new<P, S>(protected: P, stop_words: S) -> Self
    where
        P: IntoIterator,
        P::Item: AsRef<str>,
        S: IntoIterator,
        S::Item: AsRef<str>,
    {
        let mut protected: Vec<Vec<char>> = protected
            .into_iter()
            .map(|p| p.as_ref().to_lowercase())
            .filter(|p| !p.is_empty() && !p.chars().any(char::is_whitespace))
            .collect::<BTreeSet<_>>()
            .into_iter()
            .map(|p| p.chars().collect())
            .collect();
        protected.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        Self {
            protected,
            stop_words: stop_words
                .into_iter()
                .map(|s| s.as_ref().to_lowercase())
                .collect(),
        }
    }

    /// No protected tokens and no stop words.
    pub fn plain() -> Self {
        Self::new(std::iter::empty::<&str>(), std::iter::empty::<&str>())
    }

    /// Same protected tokens, different stop-word list.
    pub fn with_stop_words<S>(mut self, stop_words: S) -> Self
    where
        S: IntoIterator,
        S::Item: AsRef<str>,
    {
        self.stop_words = stop_words
            .into_iter()
            .map(|s| s.as_ref().to_lowercase())
            .collect();
        self
    }

    pub fn stop_words(&self) -> impl Iterator<Item = &str> {
        self.stop_words.iter().map(String::as_str)
    }

    pub fn tokenize(&self, text: &str) -> Vec<String> {
        let lower = text.to_lowercase();
        let chars: Vec<char> = lower.chars().collect();
        let mut tokens = Vec::new();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            if c.is_whitespace() {
                i += 1;
                continue;
            }
            let at_boundary = i == 0 || !chars[i - 1].is_alphanumeric();
            if at_boundary {
                if let Some(len) = self.protected_match(&chars[i..]) {
                    tokens.push(chars[i..i + len].iter().collect::<String>());
                    i += len;
                    continue;
                }
            }
            if c.is_alphanumeric() {
                let start = i;
                while i < chars.len() && chars[i].is_alphanumeric() {
                    i += 1;
                }
                tokens.push(chars[start..i].iter().collect::<String>());
            } else {
                i += 1;
            }
        }
        tokens.retain(|t| !self.stop_words.contains(t));
        tokens
    }

    fn protected_match(&self, rest: &[char]) -> Option<usize> {
        self.protected.iter().find_map(|p| {
            let len = p.len();
            let fits = rest.len() >= len && rest[..len] == p[..];
            let closed = rest.get(len).is_none_or(|c| !c.is_alphanumeric());
            (fits && closed).then_some(len)
        })
    }
}

/// Tokenizes with the default stop words and no protected tokens.
pub fn tokenize(text: &str) -> Vec<String> {
    Tokenizer::default().tokenize(text)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cpp() -> Tokenizer {
        Tokenizer::new(
            ["c++", "node.js", ".net"],
            DEFAULT_STOP_WORDS.iter().copied(),
        )
    }

    #[test]
    fn keeps_protected_tokens_whole() {
        assert_eq!(
            cpp().tokenize("Highly scalable C++ services"),
            ["highly", "scalable", "c++", "services"]
        );
        assert_eq!(cpp().tokenize("C++, Java."), ["c++", "java"]);
        assert_eq!(cpp().tokenize("Node.js/.NET"), ["node.js", ".net"]);
    }

    #[test]
    fn without_protection_punctuation_splits() {
        assert_eq!(tokenize("C++ and C#"), ["c", "c"]);
        assert_eq!(
            Tokenizer::plain().tokenize("java/python-3"),
            ["java", "python", "3"]
        );
    }

    #[test]
    fn protected_token_needs_boundary() {
        assert_eq!(cpp().tokenize("c++11"), ["c", "11"]);
        assert_eq!(cpp().tokenize("abc++"), ["abc"]);
    }

    #[test]
    fn empty_and_stop_words() {
        assert!(tokenize("").is_empty());
        assert!(tokenize("The a AN").is_empty());
        let t = Tokenizer::plain().with_stop_words(["the", "a", "an"]);
        assert!(t.tokenize("the a an").is_empty());
        assert_eq!(Tokenizer::plain().tokenize("the a"), ["the", "a"]);
    }

    #[test]
    fn unicode_letters_are_word_chars() {
        assert_eq!(tokenize("Zürich Müller"), ["zürich", "müller"]);
    }
}
