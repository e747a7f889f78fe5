//! ASJC subject-category codes and the bundled name table.
//!
//! Scopus-style source lists carry 4-digit ASJC codes; SCImago exports carry
//! category names. The table bundled here bridges the two so both input
//! families resolve to the same [`AsjcCode`] keys.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};
use thiserror::Error;

const ASJC_TABLE: &str = include_str!("../data/asjc.csv");

/// A 4-digit All Science Journal Classification code, e.g. 1702.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct AsjcCode(u16);

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AsjcError {
    #[error("ASJC code must be a 4-digit integer in 1000..=9999, got {0:?}")]
    OutOfRange(String),
}

impl AsjcCode {
    pub fn new(code: u16) -> Result<Self, AsjcError> {
        if (1000..=9999).contains(&code) {
            Ok(Self(code))
        } else {
            Err(AsjcError::OutOfRange(code.to_string()))
        }
    }

    pub fn value(self) -> u16 {
        self.0
    }

    /// Category name from the bundled table, if the code is known.
    pub fn name(self) -> Option<&'static str> {
        names().get(&self.0).copied()
    }
}

impl fmt::Display for AsjcCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl FromStr for AsjcCode {
    type Err = AsjcError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let trimmed = s.trim();
        let code: u16 = trimmed
            .parse()
            .map_err(|_| AsjcError::OutOfRange(trimmed.to_string()))?;
        Self::new(code)
    }
}

fn names() -> &'static HashMap<u16, &'static str> {
    static NAMES: OnceLock<HashMap<u16, &'static str>> = OnceLock::new();
    NAMES.get_or_init(|| {
        parse_table()
            .map(|(code, name)| (code, name))
            .collect()
    })
}

fn index() -> &'static HashMap<String, u16> {
    static INDEX: OnceLock<HashMap<String, u16>> = OnceLock::new();
    INDEX.get_or_init(|| {
        let mut map = HashMap::new();
        for (code, name) in parse_table() {
            map.insert(normalize_name(name), code);
            // SCImago and Scopus render the of-the-whole-area category
            // ("XX00") in several ways; accept the common variants.
            if code % 100 == 0 {
                map.insert(normalize_name(&format!("General {name}")), code);
                map.insert(normalize_name(&format!("{name} (all)")), code);
            }
        }
        map
    })
}

fn parse_table() -> impl Iterator<Item = (u16, &'static str)> {
    ASJC_TABLE.lines().skip(1).filter_map(|line| {
        let (code, name) = line.split_once(',')?;
        let name = name.trim().trim_matches('"');
        Some((code.trim().parse().ok()?, name))
    })
}

/// Resolve a category name from an export to its code.
///
/// Matching is case-insensitive and ignores punctuation, so
/// `"artificial intelligence"` and `"Artificial Intelligence"` both
/// resolve to 1702. Returns `None` for names absent from the table.
pub fn code_for_name(name: &str) -> Option<AsjcCode> {
    index()
        .get(&normalize_name(name))
        .map(|&code| AsjcCode(code))
}

fn normalize_name(name: &str) -> String {
    let mut out = String::with_capacity(name.len());
    let mut last_was_space = true;
    for c in name.chars() {
        if c.is_alphanumeric() {
            out.extend(c.to_lowercase());
            last_was_space = false;
        } else if !last_was_space {
            out.push(' ');
            last_was_space = true;
        }
    }
    while out.ends_with(' ') {
        out.pop();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn code_bounds() {
        assert!(AsjcCode::new(1000).is_ok());
        assert!(AsjcCode::new(9999).is_ok());
        assert_eq!(
            AsjcCode::new(999),
            Err(AsjcError::OutOfRange("999".into()))
        );
        assert!(AsjcCode::new(0).is_err());
    }

    #[test]
    fn parse_from_str() {
        assert_eq!(" 1702 ".parse::<AsjcCode>().unwrap().value(), 1702);
        assert!("17x2".parse::<AsjcCode>().is_err());
        assert!("123".parse::<AsjcCode>().is_err());
    }

    #[test]
    fn known_names_resolve() {
        assert_eq!(code_for_name("Artificial Intelligence").unwrap().value(), 1702);
        assert_eq!(code_for_name("artificial intelligence").unwrap().value(), 1702);
        assert_eq!(code_for_name("Applied Mathematics").unwrap().value(), 2604);
        assert_eq!(
            code_for_name("Computer Science (miscellaneous)").unwrap().value(),
            1701
        );
    }

    #[test]
    fn general_area_variants_resolve() {
        assert_eq!(code_for_name("Computer Science").unwrap().value(), 1700);
        assert_eq!(code_for_name("General Computer Science").unwrap().value(), 1700);
        assert_eq!(code_for_name("Computer Science (all)").unwrap().value(), 1700);
    }

    #[test]
    fn unknown_name_is_none() {
        assert_eq!(code_for_name("Astrology"), None);
    }

    #[test]
    fn name_lookup() {
        assert_eq!(AsjcCode::new(1702).unwrap().name(), Some("Artificial Intelligence"));
        assert_eq!(AsjcCode::new(4242).unwrap().name(), None);
    }
}
