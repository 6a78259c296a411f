//! Clopen subsets of Cantor space `2^ω` in canonical antichain form.
//!
//! A [`ClopenSet`] is stored as its minimal covering antichain: no member is
//! a prefix of another and no two members are siblings. That form is
//! unique, so structural equality is set equality, and its level view
//! always satisfies the canonicality property checked by [`check_star`].

mod bits;
pub(crate) mod trie;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

pub use bits::BitString;
use trie::Node;

use crate::dyadic::Dyadic;
use crate::text::{split_with_offsets, ParseError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CantorError {
    #[error("not an antichain: {0} is a prefix of {1}")]
    NotAntichain(BitString, BitString),
    #[error("string {string} has length {} but sits at level {level}", string.len())]
    WrongLevel { level: usize, string: BitString },
}

/// A clopen set given by its canonical antichain of cylinders.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClopenSet {
    members: BTreeSet<BitString>,
}

impl ClopenSet {
    pub fn empty() -> Self {
        ClopenSet::default()
    }

    /// The whole space, `{ε}`.
    pub fn whole() -> Self {
        Self::cylinder(BitString::empty())
    }

    pub fn cylinder(sigma: BitString) -> Self {
        ClopenSet { members: BTreeSet::from([sigma]) }
    }

    /// The unique canonical antichain covering the same union of cylinders.
    pub fn canonicalize<'a>(strings: impl IntoIterator<Item = &'a BitString>) -> Self {
        Self::from_trie(&Node::from_strings(strings))
    }

    pub(crate) fn from_trie(node: &Node) -> Self {
        ClopenSet { members: node.members() }
    }

    pub(crate) fn trie(&self) -> Node {
        Node::from_strings(&self.members)
    }

    pub fn members(&self) -> &BTreeSet<BitString> {
        &self.members
    }

    pub fn into_members(self) -> BTreeSet<BitString> {
        self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Length of the longest member; 0 for the empty set.
    pub fn support_depth(&self) -> usize {
        self.members.iter().map(BitString::len).max().unwrap_or(0)
    }

    /// `Σ 2^-|σ|` over the members.
    pub fn measure(&self) -> Dyadic {
        let depth = self.support_depth() as u32;
        let units: num_bigint::BigInt = self
            .members
            .iter()
            .map(|s| num_bigint::BigInt::from(1) << (depth as usize - s.len()))
            .sum();
        Dyadic::new(units, depth)
    }

    pub fn union(&self, other: &ClopenSet) -> ClopenSet {
        Self::from_trie(&self.trie().union(&other.trie()))
    }

    pub fn intersect(&self, other: &ClopenSet) -> ClopenSet {
        Self::from_trie(&self.trie().intersect(&other.trie()))
    }

    pub fn complement(&self) -> ClopenSet {
        Self::from_trie(&self.trie().complement())
    }

    /// Whether the union of `self`'s cylinders lies inside `other`'s.
    pub fn is_subset(&self, other: &ClopenSet) -> bool {
        self.members.iter().all(|s| other.covers(s))
    }

    /// Whether `[σ]` is entirely covered, i.e. `σ` extends some member.
    pub fn covers(&self, sigma: &BitString) -> bool {
        self.members.iter().any(|m| m.is_prefix_of(sigma))
    }

    /// `μ(S ∩ [σ])`.
    pub fn mass_below(&self, sigma: &BitString) -> Dyadic {
        self.trie().descend(sigma.bits()).relative_measure().shr(sigma.len() as u32)
    }

    /// `m_σ = 2^-|σ| - μ(S ∩ [σ])`, the cost of completing `[σ]`.
    pub fn residual_mass(&self, sigma: &BitString) -> Dyadic {
        Dyadic::pow2_neg(sigma.len() as u32) - self.mass_below(sigma)
    }

    pub fn symdiff_mass(&self, other: &ClopenSet) -> Dyadic {
        self.union(other).measure() - self.intersect(other).measure()
    }

    /// Members regrouped by length.
    pub fn level_view(&self) -> LevelFunction {
        let mut levels = vec![BTreeSet::new(); self.support_depth() + 1];
        for m in &self.members {
            levels[m.len()].insert(m.clone());
        }
        LevelFunction::trimmed(levels)
    }

    /// Rebuild a clopen set from a level function. Sibling pairs are merged,
    /// so only star-true inputs round-trip.
    pub fn from_levels(levels: &LevelFunction) -> Result<ClopenSet, CantorError> {
        let all: Vec<&BitString> = levels.strings().collect();
        for (i, a) in all.iter().enumerate() {
            for b in &all[i + 1..] {
                if a.is_prefix_of(b) {
                    return Err(CantorError::NotAntichain((*a).clone(), (*b).clone()));
                }
                if b.is_prefix_of(a) {
                    return Err(CantorError::NotAntichain((*b).clone(), (*a).clone()));
                }
            }
        }
        Ok(Self::canonicalize(all))
    }

    /// Parse the textual format and report whether the input was already
    /// canonical.
    pub fn parse_reporting(s: &str) -> Result<(ClopenSet, bool), ParseError> {
        let s_trim = s.trim();
        if s_trim == "-" {
            return Ok((ClopenSet::empty(), true));
        }
        if s_trim.is_empty() {
            return Err(ParseError::new(0, "empty input (write \"-\" for the empty set)"));
        }
        let mut strings = Vec::new();
        for (at, piece) in split_with_offsets(s, ',') {
            let bits = piece.trim().parse::<BitString>().map_err(|e| e.offset(at))?;
            strings.push(bits);
        }
        let set = Self::canonicalize(&strings);
        let given: BTreeSet<BitString> = strings.iter().cloned().collect();
        let was_canonical = given == set.members && given.len() == strings.len();
        Ok((set, was_canonical))
    }
}

/// `"-"` for the empty set, otherwise comma-separated members with `e`
/// standing for the empty string.
impl fmt::Display for ClopenSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.members.is_empty() {
            return f.write_str("-");
        }
        for (i, m) in self.members.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for ClopenSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}

impl FromStr for ClopenSet {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        Self::parse_reporting(s).map(|(set, _)| set)
    }
}

/// A level function `i ↦ φ(i) ⊆ 2^i` with finite support.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LevelFunction {
    levels: Vec<BTreeSet<BitString>>,
}

impl LevelFunction {
    fn trimmed(mut levels: Vec<BTreeSet<BitString>>) -> Self {
        while levels.last().is_some_and(BTreeSet::is_empty) {
            levels.pop();
        }
        LevelFunction { levels }
    }

    /// Build from explicit levels, checking that every string at level `i`
    /// has length `i`.
    pub fn new(levels: Vec<BTreeSet<BitString>>) -> Result<Self, CantorError> {
        for (level, set) in levels.iter().enumerate() {
            if let Some(bad) = set.iter().find(|s| s.len() != level) {
                return Err(CantorError::WrongLevel { level, string: bad.clone() });
            }
        }
        Ok(Self::trimmed(levels))
    }

    /// Group arbitrary strings by their length.
    pub fn from_strings<'a>(strings: impl IntoIterator<Item = &'a BitString>) -> Self {
        let mut levels: Vec<BTreeSet<BitString>> = Vec::new();
        for s in strings {
            if levels.len() <= s.len() {
                levels.resize(s.len() + 1, BTreeSet::new());
            }
            levels[s.len()].insert(s.clone());
        }
        Self::trimmed(levels)
    }

    /// `φ(i)`; empty beyond the support.
    pub fn level(&self, i: usize) -> &BTreeSet<BitString> {
        static EMPTY: BTreeSet<BitString> = BTreeSet::new();
        self.levels.get(i).unwrap_or(&EMPTY)
    }

    /// One past the last nonempty level.
    pub fn support(&self) -> usize {
        self.levels.len()
    }

    /// The restriction to levels `< depth`.
    pub fn truncated(&self, depth: usize) -> LevelFunction {
        Self::trimmed(self.levels.iter().take(depth).cloned().collect())
    }

    pub fn strings(&self) -> impl Iterator<Item = &BitString> {
        self.levels.iter().flatten()
    }

    /// Measure of the union of all cylinders at levels `< depth`.
    pub fn mass_below_level(&self, depth: usize) -> Dyadic {
        self.levels
            .iter()
            .take(depth)
            .enumerate()
            .map(|(i, set)| &Dyadic::pow2_neg(i as u32) * set.len() as u64)
            .sum()
    }

    pub fn has_sibling_pair(&self) -> bool {
        self.levels.iter().any(|set| {
            set.iter().any(|s| s.bits().last() == Some(&false) && set.contains(&s.sibling().unwrap()))
        })
    }
}

impl fmt::Debug for LevelFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, set) in self.levels.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            if set.is_empty() {
                f.write_str("∅")?;
            } else {
                let parts: Vec<String> = set.iter().map(ToString::to_string).collect();
                write!(f, "{{{}}}", parts.join(","))?;
            }
        }
        f.write_str(")")
    }
}

/// The canonicality property of a level function: for every `i` and every
/// `σ ∈ 2^i` not in `φ(i)`, the deeper levels cover strictly less than all
/// of `[σ]`.
///
/// Only strict prefixes of listed strings can carry deeper mass, so the
/// check walks the trie of the given strings and rejects any internal node
/// that is completely covered. Expects an antichain.
pub fn check_star(levels: &LevelFunction) -> bool {
    !Node::raw_from_strings(levels.strings()).has_covered_internal_node()
}
