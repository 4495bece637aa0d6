//! Digit replacement rules.

use super::DiagonalError;

/// A map sending every digit to a different digit in 1..=8.
///
/// Keeping replacements out of {0, 9} means a diagonal built from any list
/// can neither terminate in all 0s nor run into all 9s, so its value has a
/// single canonical expansion and no accidental identity with a listed row
/// can arise from dual representations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReplacementRule {
    map: [u8; 10],
}

impl ReplacementRule {
    pub fn new(map: [u8; 10]) -> Result<Self, DiagonalError> {
        for (digit, &to) in map.iter().enumerate() {
            let digit = digit as u8;
            if to == digit || !(1..=8).contains(&to) {
                return Err(DiagonalError::InvalidRule { digit, to });
            }
        }
        Ok(Self { map })
    }

    /// Ten digits, position a giving the replacement for a.
    pub fn parse(input: &str) -> Result<Self, DiagonalError> {
        let bytes: Vec<u8> = input
            .trim()
            .bytes()
            .map(|b| b.wrapping_sub(b'0'))
            .collect();
        let map: [u8; 10] = bytes.try_into().map_err(|_| DiagonalError::ParseRule {
            input: input.to_string(),
        })?;
        if map.iter().any(|&d| d > 9) {
            return Err(DiagonalError::ParseRule {
                input: input.to_string(),
            });
        }
        Self::new(map)
    }

    pub fn apply(&self, digit: u8) -> u8 {
        self.map[digit as usize]
    }

    pub fn as_string(&self) -> String {
        self.map.iter().map(|d| d.to_string()).collect()
    }
}

impl Default for ReplacementRule {
    /// Everything becomes 1, except 1 which becomes 2.
    fn default() -> Self {
        Self {
            map: [1, 2, 1, 1, 1, 1, 1, 1, 1, 1],
        }
    }
}
