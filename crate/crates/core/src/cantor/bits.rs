use std::fmt;
use std::str::FromStr;

use crate::text::ParseError;

/// A finite binary string `σ ∈ 2^{<ω}`, naming the cylinder `[σ]`.
///
/// The derived order is lexicographic with a prefix sorting before its
/// extensions.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitString(Vec<bool>);

impl BitString {
    pub fn empty() -> Self {
        BitString(Vec::new())
    }

    pub fn from_bits(bits: impl IntoIterator<Item = bool>) -> Self {
        BitString(bits.into_iter().collect())
    }

    /// The low `len` bits of `value`, most significant first.
    pub fn from_index(value: u64, len: usize) -> Self {
        BitString((0..len).rev().map(|k| (value >> k) & 1 == 1).collect())
    }

    pub fn bits(&self) -> &[bool] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn child(&self, bit: bool) -> Self {
        let mut v = self.0.clone();
        v.push(bit);
        BitString(v)
    }

    pub fn concat(&self, other: &BitString) -> Self {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        BitString(v)
    }

    pub fn parent(&self) -> Option<Self> {
        let (_, rest) = self.0.split_last()?;
        Some(BitString(rest.to_vec()))
    }

    pub fn sibling(&self) -> Option<Self> {
        let mut v = self.0.clone();
        let last = v.last_mut()?;
        *last = !*last;
        Some(BitString(v))
    }

    pub fn prefix(&self, len: usize) -> Self {
        BitString(self.0[..len.min(self.0.len())].to_vec())
    }

    /// `self ⊆ other` as functions, i.e. `[other] ⊆ [self]`.
    pub fn is_prefix_of(&self, other: &BitString) -> bool {
        other.0.starts_with(&self.0)
    }

    pub fn comparable(&self, other: &BitString) -> bool {
        self.is_prefix_of(other) || other.is_prefix_of(self)
    }
}

impl fmt::Display for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("e");
        }
        for &b in &self.0 {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `"e"` is the empty string; otherwise a nonempty word over `{0,1}`.
impl FromStr for BitString {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        if s == "e" {
            return Ok(BitString::empty());
        }
        if s.is_empty() {
            return Err(ParseError::new(0, "empty bitstring (write \"e\" for the empty string)"));
        }
        s.char_indices()
            .map(|(i, c)| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(ParseError::new(i, format!("unexpected character {other:?}, expected 0 or 1"))),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(BitString)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prefix_order() {
        let a: BitString = "01".parse().unwrap();
        let b: BitString = "011".parse().unwrap();
        let c: BitString = "00".parse().unwrap();
        assert!(a.is_prefix_of(&b));
        assert!(!b.is_prefix_of(&a));
        assert!(!a.comparable(&c));
        assert!(BitString::empty().is_prefix_of(&c));
        assert!(c < a && a < b);
        assert_eq!(b.sibling().unwrap().to_string(), "010");
        assert_eq!(b.parent().unwrap(), a);
        assert_eq!(BitString::from_index(5, 4).to_string(), "0101");
    }

    #[test]
    fn parse_errors_carry_position() {
        let err = "0120".parse::<BitString>().unwrap_err();
        assert_eq!(err.pos, 2);
        assert_eq!("e".parse::<BitString>().unwrap(), BitString::empty());
    }
}
