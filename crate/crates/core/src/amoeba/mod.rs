//! The Amoeba order on clopen conditions and its stem reformulation.
//!
//! A condition is a clopen set of measure `< 1/2`; stronger conditions are
//! supersets. A [`StemCondition`] additionally freezes the first
//! `stem_depth` levels of the set's level decomposition.

mod embed;
mod meet;
mod project;
mod window;

use std::fmt;
use std::str::FromStr;

pub use embed::{aprime_clauses, densify_aprime, freeze_prefix, phi_embed, AprimeClauses};
pub use meet::{meet_same_stem, MeetOutcome};
pub use project::{projection_search, ProjectionOutcome};
pub use window::{app_witness, densify_app, h_label, h_window, stem_label, AppWindow, LabelFn};

use crate::cantor::{ClopenSet, LevelFunction};
use crate::dyadic::Dyadic;
use crate::text::ParseError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AmoebaError {
    #[error("not an amoeba condition: measure {0} is not below 1/2")]
    NotAmoeba(Dyadic),
    #[error("empty stem: stem depth must be at least 1")]
    EmptyStem,
    #[error("not in A'': no window witnesses the condition")]
    NotInApp,
    #[error("stems differ")]
    StemsDiffer,
    #[error("label mismatch: {target} does not extend the label {label}")]
    LabelMismatch { label: String, target: String },
    #[error("no conditions given")]
    NoConditions,
}

/// A clopen amoeba condition, `μ(set) < 1/2`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct AmoebaCondition(ClopenSet);

impl AmoebaCondition {
    pub fn new(set: ClopenSet) -> Result<Self, AmoebaError> {
        if is_amoeba(&set) {
            Ok(AmoebaCondition(set))
        } else {
            Err(AmoebaError::NotAmoeba(set.measure()))
        }
    }

    pub fn set(&self) -> &ClopenSet {
        &self.0
    }

    pub fn into_set(self) -> ClopenSet {
        self.0
    }
}

pub fn is_amoeba(s: &ClopenSet) -> bool {
    s.measure() < Dyadic::half()
}

/// `p ≤ q`: `p` is the stronger condition, a superset of `q`.
pub fn a_le(p: &AmoebaCondition, q: &AmoebaCondition) -> bool {
    q.0.is_subset(&p.0)
}

/// For clopen conditions a common extension must contain the union.
pub fn a_compatible(p: &AmoebaCondition, q: &AmoebaCondition) -> bool {
    is_amoeba(&p.0.union(&q.0))
}

/// A condition `(u, φ)`: a clopen set together with the length of its
/// frozen initial segment of levels.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StemCondition {
    stem_depth: usize,
    phi: ClopenSet,
}

impl StemCondition {
    pub fn new(stem_depth: usize, phi: ClopenSet) -> Result<Self, AmoebaError> {
        if !is_amoeba(&phi) {
            return Err(AmoebaError::NotAmoeba(phi.measure()));
        }
        Ok(StemCondition { stem_depth, phi })
    }

    pub fn stem_depth(&self) -> usize {
        self.stem_depth
    }

    pub fn phi(&self) -> &ClopenSet {
        &self.phi
    }

    /// `u`: the levels below `stem_depth`.
    pub fn stem(&self) -> LevelFunction {
        self.phi.level_view().truncated(self.stem_depth)
    }

    /// Mass on the levels `< k`, capped at the stem.
    fn mass_below_level(&self, k: usize) -> Dyadic {
        self.phi.level_view().mass_below_level(k.min(self.stem_depth))
    }

    pub fn stem_mass(&self) -> Dyadic {
        self.mass_below_level(self.stem_depth)
    }

    /// Mass on the levels `≥ stem_depth`.
    pub fn tail_mass(&self) -> Dyadic {
        self.phi.measure() - self.stem_mass()
    }
}

/// `p ≤ q` in the stem order: `p`'s stem extends `q`'s, and every cylinder
/// of `q` lies inside a cylinder of `p` of equal or shorter length.
///
/// For canonical sets the cylinder clause is plain containment: if `[σ]`
/// is covered by `p.phi` then some member of `p.phi` is a prefix of `σ`.
pub fn ap_le(p: &StemCondition, q: &StemCondition) -> bool {
    p.stem_depth >= q.stem_depth
        && p.phi.level_view().truncated(q.stem_depth) == q.stem()
        && q.phi.is_subset(&p.phi)
}

/// Whether `p` and `q` have a common lower bound in the stem order.
///
/// If any lower bound exists then the union of the two sets, under the
/// deeper of the two stem depths, is one: enlarging a set can only cover a
/// stem member or merge it upward, and neither is ever undone.
pub fn ap_compatible(p: &StemCondition, q: &StemCondition) -> bool {
    let union = p.phi.union(&q.phi);
    let levels = union.level_view();
    union.measure() < Dyadic::half()
        && levels.truncated(p.stem_depth) == p.stem()
        && levels.truncated(q.stem_depth) == q.stem()
}

impl fmt::Display for StemCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.stem_depth, self.phi)
    }
}

impl fmt::Debug for StemCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl StemCondition {
    /// Parse `d|set`, also reporting whether the set was canonical.
    pub fn parse_reporting(s: &str) -> Result<(Self, bool), ParseError> {
        let (depth, set) = s
            .split_once('|')
            .ok_or_else(|| ParseError::new(0, "expected <stem_depth>|<set>"))?;
        let stem_depth = depth
            .trim()
            .parse::<usize>()
            .map_err(|_| ParseError::new(0, format!("expected a stem depth, got {depth:?}")))?;
        let (phi, canonical) = ClopenSet::parse_reporting(set).map_err(|e| e.offset(depth.len() + 1))?;
        let cond = StemCondition::new(stem_depth, phi).map_err(|e| ParseError::new(depth.len() + 1, e.to_string()))?;
        Ok((cond, canonical))
    }
}

impl FromStr for StemCondition {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        Self::parse_reporting(s).map(|(c, _)| c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(s: &str) -> ClopenSet {
        s.parse().unwrap()
    }

    fn amoeba(s: &str) -> AmoebaCondition {
        AmoebaCondition::new(set(s)).unwrap()
    }

    fn sc(s: &str) -> StemCondition {
        s.parse().unwrap()
    }

    #[test]
    fn amoeba_validity() {
        assert!(is_amoeba(&set("00,010")));
        assert!(!is_amoeba(&set("0")));
        assert!(is_amoeba(&ClopenSet::empty()));
        assert!(AmoebaCondition::new(set("0")).is_err());
    }

    #[test]
    fn amoeba_order_and_compatibility() {
        assert!(a_le(&amoeba("00,010"), &amoeba("00")));
        assert!(!a_le(&amoeba("00"), &amoeba("00,010")));
        assert!(!a_le(&amoeba("00,011"), &amoeba("00,010")));
        assert!(!a_compatible(&amoeba("00"), &amoeba("01")));
        assert!(a_compatible(&amoeba("000"), &amoeba("10")));
        assert!(a_compatible(&amoeba("00,010"), &amoeba("00,010")));
    }

    #[test]
    fn stem_order() {
        let p = sc("3|00,010");
        let q = sc("3|00");
        assert!(ap_le(&p, &q));
        assert!(!ap_le(&sc("2|00,010"), &q));
        assert!(ap_le(&p, &p));
        // the deeper stem of p freezes 010 at level 3, which q's stem lacks
        assert!(!ap_le(&sc("4|00,010"), &sc("4|00")));
    }

    #[test]
    fn stem_compatibility() {
        assert!(ap_compatible(&sc("3|00"), &sc("3|00,0110")));
        // 010 would enter q's frozen level 3
        assert!(!ap_compatible(&sc("4|00"), &sc("3|00,010")));
        assert!(!ap_compatible(&sc("1|00,010"), &sc("1|00,011")));
        assert!(!ap_compatible(&sc("3|000,001"), &sc("3|010,011")));
    }

    #[test]
    fn stem_text() {
        let (p, canonical) = StemCondition::parse_reporting("3|000,001").unwrap();
        assert!(!canonical);
        assert_eq!(p.to_string(), "3|00");
        assert!("x|00".parse::<StemCondition>().is_err());
        assert!("2|0,1".parse::<StemCondition>().is_err());
        let err = "2|0,2".parse::<StemCondition>().unwrap_err();
        assert_eq!(err.pos, 4);
    }

    #[test]
    fn masses() {
        let p = sc("3|00,010,1100");
        assert_eq!(p.stem_mass(), "1/4".parse().unwrap());
        assert_eq!(p.tail_mass(), "3/16".parse().unwrap());
        assert_eq!(p.stem().support(), 3);
    }
}
