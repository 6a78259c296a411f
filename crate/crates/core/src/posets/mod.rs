//! Cohen, Hechler, eventually-different and localization orders on finitely
//! described conditions.

mod hypothesis;
mod text;

use std::collections::BTreeSet;

use num_bigint::BigUint;

pub use hypothesis::{hypothesis_check, Condition, Failure, HypothesisOutcome, Witness};

use crate::coding::{CohenSeq, FinSeq, FnRep, Natural, Tail};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PosetError {
    #[error("stems differ")]
    StemsDiffer,
    #[error("slots differ")]
    SlotsDiffer,
    #[error("no conditions given")]
    NoConditions,
    #[error("mixed posets: condition {0} belongs to a different poset")]
    MixedPosets(usize),
    #[error("condition {index} is not valid: {reason}")]
    InvalidCondition { index: usize, reason: String },
    #[error("family size must be at least 1")]
    EmptyFamily,
}

/// `s ≤ t` in Cohen forcing: `s` end-extends `t`.
pub fn cohen_le(s: &CohenSeq, t: &CohenSeq) -> bool {
    s.extends(t)
}

/// A Hechler condition: a stem and a side function to dominate.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HechlerCond {
    pub stem: FinSeq,
    pub side: FnRep,
}

/// The usual Hechler order: `p` extends the stem, respects `q`'s side
/// function on the new entries, and dominates it everywhere.
pub fn hechler_le(p: &HechlerCond, q: &HechlerCond) -> bool {
    p.stem.extends(&q.stem)
        && p.side.dominates(&q.side)
        && (q.stem.len()..p.stem.len()).all(|i| p.stem.entries()[i] >= q.side.eval(i))
}

/// An eventually-different condition `(s, G)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EvDiffCond {
    pub stem: FinSeq,
    pub side: BTreeSet<FnRep>,
}

/// `p ≤ q` iff `p` extends the stem and the side set of `q`, and every new
/// stem entry avoids every old side function at its position.
pub fn ev_le(p: &EvDiffCond, q: &EvDiffCond) -> bool {
    p.stem.extends(&q.stem)
        && p.side.is_superset(&q.side)
        && q.side
            .iter()
            .all(|g| (q.stem.len()..p.stem.len()).all(|i| p.stem.entries()[i] != g.eval(i)))
}

/// `(s, ⋃ G)` for conditions sharing the stem `s`.
pub fn ev_stem_meet(ps: &[EvDiffCond]) -> Result<EvDiffCond, PosetError> {
    let first = ps.first().ok_or(PosetError::NoConditions)?;
    if ps.iter().any(|p| p.stem != first.stem) {
        return Err(PosetError::StemsDiffer);
    }
    let side = ps.iter().flat_map(|p| p.side.iter().cloned()).collect();
    Ok(EvDiffCond { stem: first.stem.clone(), side })
}

/// A localization condition: slots with `|σ(i)| = i + 1` and at most
/// `dom(σ) + 1` side functions.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LocCond {
    pub slots: Vec<BTreeSet<BigUint>>,
    pub side: BTreeSet<FnRep>,
}

impl LocCond {
    pub fn side_bound(&self) -> usize {
        self.slots.len() + 1
    }
}

pub fn loc_is_condition(p: &LocCond) -> bool {
    p.slots.iter().enumerate().all(|(i, s)| s.len() == i + 1) && p.side.len() <= p.side_bound()
}

/// `p ≤ q` iff `p` extends the slots and side set of `q`, and each new slot
/// traps every old side function.
pub fn loc_le(p: &LocCond, q: &LocCond) -> bool {
    p.slots.len() >= q.slots.len()
        && p.slots[..q.slots.len()] == q.slots[..]
        && p.side.is_superset(&q.side)
        && q.side
            .iter()
            .all(|g| (q.slots.len()..p.slots.len()).all(|i| p.slots[i].contains(&g.eval(i))))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LocMeet {
    Feasible(LocCond),
    /// The union of the side sets exceeds `dom + 1` by `excess`.
    Infeasible { excess: usize },
}

pub fn loc_stem_meet(ps: &[LocCond]) -> Result<LocMeet, PosetError> {
    let first = ps.first().ok_or(PosetError::NoConditions)?;
    if ps.iter().any(|p| p.slots != first.slots) {
        return Err(PosetError::SlotsDiffer);
    }
    let side: BTreeSet<FnRep> = ps.iter().flat_map(|p| p.side.iter().cloned()).collect();
    let bound = first.side_bound();
    if side.len() > bound {
        return Ok(LocMeet::Infeasible { excess: side.len() - bound });
    }
    Ok(LocMeet::Feasible(LocCond { slots: first.slots.clone(), side }))
}

/// The stem of an L condition as a Cohen condition: each slot, listed in
/// increasing order, replaced by its sequence code.
pub fn loc_stem_code(p: &LocCond) -> CohenSeq {
    CohenSeq(p.slots.iter().map(|s| Natural::code_of(&FinSeq::new(s.iter().cloned().collect()))).collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdMode {
    /// `0, 1, …, k-1`, different everywhere.
    Constant,
    /// `0` at position 0, then `i ↦ i + j + 1` for the `j`-th member: all
    /// agree at 0 and differ from 1 on.
    Staggered,
}

/// `k` pairwise eventually different functions.
pub fn ed_family(k: usize, mode: EdMode) -> Vec<FnRep> {
    (0..k as u64)
        .map(|j| match mode {
            EdMode::Constant => FnRep::constant(j),
            EdMode::Staggered => FnRep::new(vec![BigUint::default()], Tail::IdPlus(BigUint::from(j + 1))),
        })
        .collect()
}
