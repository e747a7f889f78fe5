//! ISSN parsing and mod-11 check-digit validation.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// A validated ISSN in canonical `NNNN-NNNC` form, where `C` is a digit
/// or `X`.
///
/// Stored hyphen-free; [`fmt::Display`] renders the canonical hyphenated
/// form. Normalization is idempotent: parsing a canonical rendering gives
/// back the same value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Issn([u8; 8]);

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IssnError {
    #[error("malformed ISSN {input:?}: {reason}")]
    Malformed { input: String, reason: &'static str },
    #[error("ISSN {input:?} check digit is {found:?}, expected {expected:?}")]
    ChecksumMismatch { input: String, found: char, expected: char },
}

impl Issn {
    /// Parses and validates `raw`, stripping hyphens and spaces and
    /// uppercasing a trailing `x`.
    pub fn parse(raw: &str) -> Result<Self, IssnError> {
        let malformed = |reason| IssnError::Malformed { input: raw.to_string(), reason };

        let cleaned: Vec<u8> = raw
            .bytes()
            .filter(|b| !matches!(b, b'-' | b' ' | b'\t'))
            .map(|b| if b == b'x' { b'X' } else { b })
            .collect();

        if cleaned.is_empty() {
            return Err(malformed("empty"));
        }
        if cleaned.len() != 8 {
            return Err(malformed("expected 8 significant characters"));
        }
        if !cleaned[..7].iter().all(u8::is_ascii_digit) {
            return Err(malformed("first 7 characters must be digits"));
        }
        let check = cleaned[7];
        if !(check.is_ascii_digit() || check == b'X') {
            return Err(malformed("check character must be a digit or X"));
        }

        let expected = check_char(&cleaned[..7]);
        if check != expected {
            return Err(IssnError::ChecksumMismatch {
                input: raw.to_string(),
                found: check as char,
                expected: expected as char,
            });
        }

        let mut value = [0u8; 8];
        value.copy_from_slice(&cleaned);
        Ok(Self(value))
    }
}

/// Expected check character for the 7 leading digits: weights 8..2,
/// remainder 0 maps to '0', remainder 1 to 'X', anything else to
/// 11 - remainder.
fn check_char(digits: &[u8]) -> u8 {
    let sum: u32 = digits
        .iter()
        .zip((2..=8).rev())
        .map(|(&d, w)| u32::from(d - b'0') * w)
        .sum();
    match sum % 11 {
        0 => b'0',
        1 => b'X',
        r => b'0' + (11 - r) as u8,
    }
}

impl fmt::Display for Issn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = std::str::from_utf8(&self.0).expect("ISSN bytes are ASCII");
        write!(f, "{}-{}", &s[..4], &s[4..])
    }
}

impl FromStr for Issn {
    type Err = IssnError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse(s)
    }
}

impl Serialize for Issn {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Issn {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = String::deserialize(deserializer)?;
        Issn::parse(&raw).map_err(serde::de::Error::custom)
    }
}

/// Canonical hyphenated rendering of `raw`, or the validation error.
pub fn normalize_issn(raw: &str) -> Result<String, IssnError> {
    Issn::parse(raw).map(|issn| issn.to_string())
}
