//! Bounded search witnessing that the labelling is a projection: below any
//! A'' condition there is one whose label extends a prescribed extension of
//! its own label.

use num_traits::ToPrimitive;

use super::window::h_label;
use super::{ap_le, app_witness, AmoebaError, StemCondition};
use crate::cantor::trie::Node;
use crate::cantor::{BitString, ClopenSet};
use crate::coding::{CohenSeq, NatSeq};
use crate::dyadic::Dyadic;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProjectionOutcome {
    /// `q ≤ p` in A'' with `h(q)` extending the target.
    Found(StemCondition),
    /// The bounded search gave up; this says nothing about existence.
    NotFound { reason: String },
}

/// Find `q ≤ p` in A'' whose label extends `t`.
///
/// Label entry `j` is `f(λ + 1)` where `λ` is the level at which the
/// cumulative stem mass first exceeds `1/2 - 2^-j`. For each missing entry
/// the search walks up from the previous crossing and, at the first level
/// `λ` with `f(λ + 1) = t(j)`, adds just enough cylinders at `λ` to cross.
/// Levels are capped by `budget`; the number of cylinders added at level
/// `λ` can be of order `2^λ`.
pub fn projection_search(
    p: &StemCondition,
    t: &CohenSeq,
    f: &dyn NatSeq,
    budget: usize,
) -> Result<ProjectionOutcome, AmoebaError> {
    let label = h_label(p, f)?;
    if !t.extends(&label) {
        return Err(AmoebaError::LabelMismatch { label: label.to_string(), target: t.to_string() });
    }
    if t.len() == label.len() {
        return Ok(ProjectionOutcome::Found(p.clone()));
    }
    let not_found = |reason: String| Ok(ProjectionOutcome::NotFound { reason });

    let last = t.len() - 1;
    let mut cur = p.phi().clone();
    let mut lower = p.stem_depth();
    for j in label.len()..t.len() {
        let threshold = Dyadic::half_minus_pow2(j as u32);
        let want = &t.entries()[j];
        let mut lambda = lower;
        loop {
            if lambda > budget {
                return not_found(format!("entry {j}: no usable level up to the budget {budget}"));
            }
            let reached = cur.level_view().mass_below_level(lambda + 1);
            if reached > threshold {
                if f.at(lambda + 1) == *want {
                    break;
                }
                return not_found(format!("entry {j}: crossing forced at level {lambda} with the wrong value"));
            }
            let closes_tail = j < last || lambda >= cur.support_depth();
            if lambda > j && f.at(lambda + 1) == *want && closes_tail {
                let gap = (&threshold - &reached).floor_units(lambda as u32);
                let count = (gap + 1u32).to_u64().unwrap_or(u64::MAX);
                let mut slots = Vec::new();
                let got = free_slots(&cur.trie(), BitString::empty(), lambda, count, false, &mut slots);
                if got == count {
                    let mut all: Vec<BitString> = cur.members().iter().cloned().collect();
                    all.extend(slots);
                    cur = ClopenSet::canonicalize(&all);
                    break;
                }
            }
            lambda += 1;
        }
        lower = lambda;
    }

    let depth = (lower + 1).max(cur.support_depth());
    let Ok(q) = StemCondition::new(depth, cur) else {
        return not_found("the strengthened set reaches measure 1/2".into());
    };
    if !ap_le(&q, p) || app_witness(&q).is_none() {
        return not_found("the candidate fails the order or window check".into());
    }
    match h_label(&q, f) {
        Ok(l) if l.extends(t) => Ok(ProjectionOutcome::Found(q)),
        _ => not_found("the candidate's label does not extend the target".into()),
    }
}

/// Collect up to `want` uncovered strings of length `level` whose addition
/// merges nothing: inside an empty region only strings ending in `0`, and
/// an empty node at `level` itself only when its sibling is not full.
fn free_slots(
    node: &Node,
    path: BitString,
    level: usize,
    want: u64,
    sibling_full: bool,
    out: &mut Vec<BitString>,
) -> u64 {
    if want == 0 {
        return 0;
    }
    match node {
        Node::Full => 0,
        Node::Empty if path.len() == level => {
            if sibling_full {
                0
            } else {
                out.push(path);
                1
            }
        }
        Node::Empty => {
            let free = level - path.len() - 1;
            let available = if free >= 64 { u64::MAX } else { 1u64 << free };
            let take = available.min(want);
            for k in 0..take {
                out.push(path.concat(&BitString::from_index(k << 1, level - path.len())));
            }
            take
        }
        Node::Split(..) if path.len() >= level => 0,
        Node::Split(a, b) => {
            let got = free_slots(a, path.child(false), level, want, matches!(**b, Node::Full), out);
            got + free_slots(b, path.child(true), level, want - got, matches!(**a, Node::Full), out)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::amoeba::{densify_app, LabelFn};

    fn sc(s: &str) -> StemCondition {
        s.parse().unwrap()
    }

    #[test]
    fn trivial_target() {
        let p = sc("4|00,010");
        let f = LabelFn::TwoAdic;
        let t = h_label(&p, &f).unwrap();
        assert_eq!(projection_search(&p, &t, &f, 12).unwrap(), ProjectionOutcome::Found(p));
    }

    #[test]
    fn one_more_entry() {
        let f = LabelFn::TwoAdic;
        let p = densify_app(&sc("2|-"));
        let label = h_label(&p, &f).unwrap();
        for v in 0..3u64 {
            let mut t = label.clone();
            t.push(v.into());
            match projection_search(&p, &t, &f, 14).unwrap() {
                ProjectionOutcome::Found(q) => {
                    assert!(ap_le(&q, &p));
                    assert!(h_label(&q, &f).unwrap().extends(&t));
                }
                other => panic!("v = {v}: {other:?}"),
            }
        }
    }

    #[test]
    fn mismatched_target() {
        let p = sc("4|00,010");
        let f = LabelFn::TwoAdic;
        let t = CohenSeq::from_u64s(&[1, 2]);
        assert!(matches!(projection_search(&p, &t, &f, 10), Err(AmoebaError::LabelMismatch { .. })));
    }

    #[test]
    fn budget_limits_the_search() {
        let f = LabelFn::TwoAdic;
        let p = sc("4|00,010");
        let mut t = h_label(&p, &f).unwrap();
        // f(i) = 5 first happens at i = 63
        t.push(5u64.into());
        assert!(matches!(projection_search(&p, &t, &f, 10).unwrap(), ProjectionOutcome::NotFound { .. }));
    }

    #[test]
    fn slots_avoid_merges() {
        let set: ClopenSet = "00,011".parse().unwrap();
        let mut out = Vec::new();
        let got = free_slots(&set.trie(), BitString::empty(), 3, 10, false, &mut out);
        let names: Vec<String> = out.iter().map(ToString::to_string).collect();
        assert_eq!(names, ["100", "110"]);
        assert_eq!(got, 2);
        // 01 would complete 0; 10 is allowed next to the partial 11 node
        let set: ClopenSet = "00,110".parse().unwrap();
        let mut out = Vec::new();
        free_slots(&set.trie(), BitString::empty(), 2, 10, false, &mut out);
        let names: Vec<String> = out.iter().map(ToString::to_string).collect();
        assert_eq!(names, ["10"]);
    }
}
