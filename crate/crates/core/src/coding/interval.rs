use std::fmt;
use std::str::FromStr;

use crate::dyadic::Dyadic;
use crate::text::ParseError;

/// A half-open interval `[lo, hi)` with dyadic endpoints, or the empty
/// interval.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DyadicInterval(Option<(Dyadic, Dyadic)>);

impl DyadicInterval {
    pub fn empty() -> Self {
        DyadicInterval(None)
    }

    /// `[lo, hi)`; empty when `lo >= hi`.
    pub fn new(lo: Dyadic, hi: Dyadic) -> Self {
        if lo < hi {
            DyadicInterval(Some((lo, hi)))
        } else {
            DyadicInterval(None)
        }
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_none()
    }

    pub fn bounds(&self) -> Option<(&Dyadic, &Dyadic)> {
        self.0.as_ref().map(|(a, b)| (a, b))
    }

    pub fn length(&self) -> Dyadic {
        self.0.as_ref().map_or_else(Dyadic::zero, |(a, b)| b - a)
    }

    pub fn contains(&self, z: &Dyadic) -> bool {
        self.0.as_ref().is_some_and(|(a, b)| a <= z && z < b)
    }
}

/// `[a/2^k, b/2^k)` over the common exponent, or `empty`.
impl fmt::Display for DyadicInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            None => f.write_str("empty"),
            Some((lo, hi)) => {
                let k = lo.exponent().max(hi.exponent());
                let a = lo.scaled_numerator(k).expect("common exponent");
                let b = hi.scaled_numerator(k).expect("common exponent");
                write!(f, "[{a}/2^{k}, {b}/2^{k})")
            }
        }
    }
}

impl fmt::Debug for DyadicInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for DyadicInterval {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        let t = s.trim();
        if t == "empty" {
            return Ok(DyadicInterval::empty());
        }
        let inner = t
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| ParseError::new(0, "expected [lo, hi) or empty"))?;
        let (lo, hi) = inner
            .split_once(',')
            .ok_or_else(|| ParseError::new(1, "expected a comma between the endpoints"))?;
        let lo: Dyadic = lo.parse().map_err(|e: crate::dyadic::ParseDyadicError| ParseError::new(1, e.to_string()))?;
        let hi: Dyadic = hi
            .parse()
            .map_err(|e: crate::dyadic::ParseDyadicError| ParseError::new(inner.find(',').unwrap_or(0) + 2, e.to_string()))?;
        if lo >= hi {
            return Err(ParseError::new(0, "lower endpoint must be below the upper endpoint"));
        }
        Ok(DyadicInterval::new(lo, hi))
    }
}

/// A finite union of half-open intervals, kept sorted, disjoint, and with
/// touching intervals merged.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct IntervalUnion {
    parts: Vec<(Dyadic, Dyadic)>,
}

impl IntervalUnion {
    pub fn empty() -> Self {
        IntervalUnion::default()
    }

    pub fn unit() -> Self {
        IntervalUnion { parts: vec![(Dyadic::zero(), Dyadic::one())] }
    }

    pub fn from_intervals<'a>(items: impl IntoIterator<Item = &'a DyadicInterval>) -> Self {
        let mut u = IntervalUnion::empty();
        for i in items {
            u.insert(i);
        }
        u
    }

    pub fn insert(&mut self, interval: &DyadicInterval) {
        let Some((lo, hi)) = interval.bounds() else {
            return;
        };
        self.parts.push((lo.clone(), hi.clone()));
        self.parts.sort();
        let mut merged: Vec<(Dyadic, Dyadic)> = Vec::with_capacity(self.parts.len());
        for (a, b) in self.parts.drain(..) {
            match merged.last_mut() {
                Some((_, end)) if a <= *end => {
                    if b > *end {
                        *end = b;
                    }
                }
                _ => merged.push((a, b)),
            }
        }
        self.parts = merged;
    }

    pub fn union(&self, other: &IntervalUnion) -> IntervalUnion {
        let mut u = self.clone();
        for i in other.intervals() {
            u.insert(&i);
        }
        u
    }

    pub fn intervals(&self) -> Vec<DyadicInterval> {
        self.parts.iter().map(|(a, b)| DyadicInterval::new(a.clone(), b.clone())).collect()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn length(&self) -> Dyadic {
        self.parts.iter().map(|(a, b)| b - a).sum()
    }

    pub fn contains(&self, z: &Dyadic) -> bool {
        self.parts.iter().any(|(a, b)| a <= z && z < b)
    }

    /// Whether the union is exactly `[0, 1)`.
    pub fn is_unit(&self) -> bool {
        *self == Self::unit()
    }
}

impl fmt::Display for IntervalUnion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("empty");
        }
        let parts: Vec<String> = self.intervals().iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(" U "))
    }
}

impl fmt::Debug for IntervalUnion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> Dyadic {
        s.parse().unwrap()
    }

    fn iv(a: &str, b: &str) -> DyadicInterval {
        DyadicInterval::new(d(a), d(b))
    }

    #[test]
    fn merging_and_length() {
        let u = IntervalUnion::from_intervals(&[iv("0", "1/8"), iv("3/4", "13/16")]);
        assert_eq!(u.length(), d("3/16"));
        assert_eq!(u.intervals().len(), 2);
        let touching = IntervalUnion::from_intervals(&[iv("1/2", "1"), iv("0", "1/2")]);
        assert!(touching.is_unit());
        assert_eq!(touching.intervals().len(), 1);
    }

    #[test]
    fn half_open_membership() {
        assert!(iv("3/4", "13/16").contains(&d("3/4")));
        assert!(!iv("0", "1/2").contains(&d("1/2")));
        assert!(!DyadicInterval::empty().contains(&d("0")));
    }

    #[test]
    fn text_roundtrip() {
        let i = iv("3/4", "1");
        assert_eq!(i.to_string(), "[3/2^2, 4/2^2)");
        assert_eq!(i.to_string().parse::<DyadicInterval>().unwrap(), i);
        assert_eq!("empty".parse::<DyadicInterval>().unwrap(), DyadicInterval::empty());
        assert!("[1/2, 1/4)".parse::<DyadicInterval>().is_err());
    }
}
