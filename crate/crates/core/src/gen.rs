//! Seeded random instances for the check suites, the examples and the tests.
//! Every generator takes the RNG explicitly, so a seed fixes a whole run.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::amoeba::StemCondition;
use crate::cantor::{BitString, ClopenSet, LevelFunction};
use crate::coding::{CohenSeq, FinSeq, FnRep, Tail};
use crate::dyadic::Dyadic;
use crate::posets::{EvDiffCond, HechlerCond, LocCond};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn bit_string(rng: &mut impl Rng, len: usize) -> BitString {
    BitString::from_bits((0..len).map(|_| rng.gen::<bool>()))
}

/// A nonempty string of length at most `max_depth`.
pub fn short_string(rng: &mut impl Rng, max_depth: usize) -> BitString {
    let len = rng.gen_range(1..=max_depth.max(1));
    bit_string(rng, len)
}

/// Up to `max_members` random strings of length `1..=max_depth`,
/// canonicalized. Sibling pairs are planted now and then so that merging
/// gets exercised.
pub fn clopen(rng: &mut impl Rng, max_depth: usize, max_members: usize) -> ClopenSet {
    let count = rng.gen_range(0..=max_members);
    let mut strings = Vec::with_capacity(count + 1);
    for _ in 0..count {
        let s = short_string(rng, max_depth);
        if rng.gen_ratio(1, 5) {
            if let Some(sib) = s.sibling() {
                strings.push(sib);
            }
        }
        strings.push(s);
    }
    ClopenSet::canonicalize(&strings)
}

/// A clopen set of measure `< 1/2`: random members are dropped until the
/// measure is small enough.
pub fn amoeba_set(rng: &mut impl Rng, max_depth: usize, max_members: usize) -> ClopenSet {
    let set = clopen(rng, max_depth, max_members);
    amoeba_set_within(rng, &set)
}

/// A subset of `within`'s members, shuffled and kept while the measure
/// stays below `1/2`.
pub fn amoeba_set_within(rng: &mut impl Rng, within: &ClopenSet) -> ClopenSet {
    let mut members: Vec<BitString> = within.members().iter().cloned().collect();
    members.shuffle(rng);
    let mut kept = ClopenSet::empty();
    for m in members {
        let next = kept.union(&ClopenSet::cylinder(m));
        if next.measure() < Dyadic::half() {
            kept = next;
        }
    }
    kept
}

/// A random antichain grouped by length, depth `≤ max_depth`. About half
/// of the outputs contain a planted sibling pair.
pub fn level_function(rng: &mut impl Rng, max_depth: usize) -> LevelFunction {
    let mut chosen: Vec<BitString> = Vec::new();
    for _ in 0..rng.gen_range(0..=2 * max_depth) {
        let s = short_string(rng, max_depth);
        if chosen.iter().all(|c| !c.comparable(&s)) {
            chosen.push(s);
        }
    }
    if rng.gen_bool(0.5) {
        let s = short_string(rng, max_depth);
        let sib = s.sibling().expect("nonempty");
        chosen.retain(|c| !c.comparable(&s) && !c.comparable(&sib));
        chosen.push(s);
        chosen.push(sib);
    }
    LevelFunction::from_strings(&chosen)
}

/// A stem condition over a random amoeba set with a stem depth anywhere
/// from 0 to one past the support.
pub fn stem_condition(rng: &mut impl Rng, max_depth: usize, max_members: usize) -> StemCondition {
    let phi = amoeba_set(rng, max_depth, max_members);
    let depth = rng.gen_range(0..=phi.support_depth() + 1);
    StemCondition::new(depth, phi).expect("measure below 1/2")
}

/// A function with a short table and a constant or shifted-identity tail.
pub fn fn_rep(rng: &mut impl Rng, table_len: usize, max_value: u64) -> FnRep {
    let table: Vec<u64> = (0..rng.gen_range(0..=table_len)).map(|_| rng.gen_range(0..=max_value)).collect();
    let tail = if rng.gen_bool(0.5) {
        Tail::Const(BigUint::from(rng.gen_range(0..=max_value)))
    } else {
        Tail::IdPlus(BigUint::from(rng.gen_range(0..=max_value)))
    };
    FnRep::with_table(&table, tail)
}

pub fn fin_seq(rng: &mut impl Rng, max_len: usize, max_value: u64) -> FinSeq {
    FinSeq::from_u64s(&(0..rng.gen_range(0..=max_len)).map(|_| rng.gen_range(0..=max_value)).collect::<Vec<_>>())
}

pub fn cohen_seq(rng: &mut impl Rng, max_len: usize, max_value: u64) -> CohenSeq {
    CohenSeq::from(&fin_seq(rng, max_len, max_value))
}

/// Extend `s` by up to `extra` random entries.
pub fn extend_seq(rng: &mut impl Rng, s: &FinSeq, extra: usize, max_value: u64) -> FinSeq {
    let mut out = s.clone();
    for _ in 0..rng.gen_range(0..=extra) {
        out.0.push(BigUint::from(rng.gen_range(0..=max_value)));
    }
    out
}

pub fn hechler_cond(rng: &mut impl Rng) -> HechlerCond {
    HechlerCond { stem: fin_seq(rng, 3, 4), side: fn_rep(rng, 3, 4) }
}

pub fn ev_cond(rng: &mut impl Rng) -> EvDiffCond {
    let side = (0..rng.gen_range(0..=2)).map(|_| fn_rep(rng, 2, 3)).collect();
    EvDiffCond { stem: fin_seq(rng, 3, 3), side }
}

/// A valid L condition with values drawn from `0..=max_value`.
pub fn loc_cond(rng: &mut impl Rng, max_len: usize, max_value: u64) -> LocCond {
    let len = rng.gen_range(0..=max_len);
    let slots = (0..len).map(|i| random_slot(rng, i + 1, max_value)).collect();
    let side = (0..rng.gen_range(0..=len + 1)).map(|_| fn_rep(rng, 2, max_value)).collect();
    LocCond { slots, side }
}

/// `size` distinct values from `0..=max_value`, plus larger ones if the
/// range is too small.
pub fn random_slot(rng: &mut impl Rng, size: usize, max_value: u64) -> BTreeSet<BigUint> {
    let mut pool: Vec<u64> = (0..=max_value.max(size as u64)).collect();
    pool.shuffle(rng);
    pool.into_iter().take(size).map(BigUint::from).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::amoeba::is_amoeba;
    use crate::posets::loc_is_condition;

    #[test]
    fn generators_respect_their_contracts() {
        let mut r = rng(7);
        for _ in 0..200 {
            assert!(clopen(&mut r, 6, 5).support_depth() <= 6);
            assert!(is_amoeba(&amoeba_set(&mut r, 6, 8)));
            let p = stem_condition(&mut r, 5, 6);
            assert!(p.stem_depth() <= p.phi().support_depth() + 1);
            assert!(loc_is_condition(&loc_cond(&mut r, 3, 5)));
            assert!(level_function(&mut r, 6).support() <= 7);
        }
    }

    #[test]
    fn seeds_reproduce() {
        let a: Vec<ClopenSet> = (0..5).map({
            let mut r = rng(3);
            move |_| clopen(&mut r, 6, 4)
        })
        .collect();
        let mut r = rng(3);
        let b: Vec<ClopenSet> = (0..5).map(|_| clopen(&mut r, 6, 4)).collect();
        assert_eq!(a, b);
    }
}
