//! Test-side oracles. Nothing here calls the library's algorithms: sets are
//! modelled as leaf vectors at a fixed depth, canonical forms are read off
//! the leaves, and the numeric formulas are recomputed from their
//! definitions.

#![allow(dead_code)]

use std::collections::BTreeSet;

use amoeba_forcing::{BitString, ClopenSet, Dyadic};
use num_bigint::BigUint;

/// A clopen set as the set of depth-`d` leaves it covers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Leaves {
    pub d: usize,
    pub bits: Vec<bool>,
}

fn index(bits: &[bool]) -> usize {
    bits.iter().fold(0, |acc, &b| 2 * acc + b as usize)
}

fn range(s: &BitString, d: usize) -> std::ops::Range<usize> {
    assert!(s.len() <= d, "string {s} deeper than the leaf model");
    let shift = d - s.len();
    let lo = index(s.bits()) << shift;
    lo..lo + (1 << shift)
}

impl Leaves {
    pub fn from_strings<'a>(strings: impl IntoIterator<Item = &'a BitString>, d: usize) -> Self {
        let mut bits = vec![false; 1 << d];
        for s in strings {
            bits[range(s, d)].iter_mut().for_each(|b| *b = true);
        }
        Leaves { d, bits }
    }

    pub fn of(set: &ClopenSet, d: usize) -> Self {
        Self::from_strings(set.members(), d)
    }

    pub fn count(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    pub fn measure(&self) -> Dyadic {
        Dyadic::new(self.count() as i64, self.d as u32)
    }

    pub fn zip(&self, other: &Leaves, op: impl Fn(bool, bool) -> bool) -> Leaves {
        assert_eq!(self.d, other.d);
        Leaves { d: self.d, bits: self.bits.iter().zip(&other.bits).map(|(&a, &b)| op(a, b)).collect() }
    }

    pub fn not(&self) -> Leaves {
        Leaves { d: self.d, bits: self.bits.iter().map(|b| !b).collect() }
    }

    pub fn subset_of(&self, other: &Leaves) -> bool {
        self.bits.iter().zip(&other.bits).all(|(&a, &b)| !a || b)
    }

    pub fn mass_below(&self, s: &BitString) -> Dyadic {
        let n = self.bits[range(s, self.d)].iter().filter(|&&b| b).count();
        Dyadic::new(n as i64, self.d as u32)
    }

    pub fn full_below(&self, s: &BitString) -> bool {
        self.bits[range(s, self.d)].iter().all(|&b| b)
    }

    /// Minimal covering strings: a node is emitted when every leaf below it
    /// is set, and split otherwise.
    pub fn canonical(&self) -> BTreeSet<BitString> {
        let mut out = BTreeSet::new();
        self.walk(&BitString::empty(), &mut out);
        out
    }

    fn walk(&self, s: &BitString, out: &mut BTreeSet<BitString>) {
        let r = range(s, self.d);
        if self.bits[r.clone()].iter().all(|&b| b) {
            out.insert(s.clone());
        } else if self.bits[r].iter().any(|&b| b) {
            self.walk(&s.child(false), out);
            self.walk(&s.child(true), out);
        }
    }
}

pub fn strings_of_len(len: usize) -> impl Iterator<Item = BitString> {
    (0..1u64 << len).map(move |v| BitString::from_index(v, len))
}

pub fn strings_up_to(max_len: usize) -> Vec<BitString> {
    (0..=max_len).flat_map(strings_of_len).collect()
}

/// Members grouped by length, padded to `len` levels.
pub fn levels(members: &BTreeSet<BitString>, len: usize) -> Vec<BTreeSet<BitString>> {
    let mut out = vec![BTreeSet::new(); len];
    for m in members {
        out[m.len()].insert(m.clone());
    }
    out
}

/// The first length at which the two antichains have different members.
pub fn first_difference(a: &BTreeSet<BitString>, b: &BTreeSet<BitString>, len: usize) -> Option<usize> {
    let (la, lb) = (levels(a, len), levels(b, len));
    (0..len).find(|&i| la[i] != lb[i])
}

/// Freeze depth by adding one cylinder at a time: every string of length
/// `≤ horizon` that is not already covered is added, and extensions of
/// measure `< 1/2` report the first level of the canonical form that moved.
/// Adding a single cylinder suffices: any extension that moves the levels
/// contains a first new leaf block, and the cylinder for that block alone
/// moves the same level or an earlier one.
pub fn freeze_single_cylinder(s: &ClopenSet, horizon: usize) -> Option<usize> {
    let base = Leaves::of(s, horizon);
    let canon = base.canonical();
    let half = Dyadic::half();
    let mut best: Option<usize> = None;
    for sigma in strings_up_to(horizon) {
        if base.full_below(&sigma) {
            continue;
        }
        let t = base.zip(&Leaves::from_strings([&sigma], horizon), |a, b| a || b);
        if t.measure() >= half {
            continue;
        }
        if let Some(k) = first_difference(&canon, &t.canonical(), horizon + 1) {
            best = Some(best.map_or(k, |b| b.min(k)));
        }
    }
    best
}

/// Freeze depth by enumerating every superset at the leaf depth `horizon`
/// (`2^(2^horizon)` candidates, so only for tiny horizons).
pub fn freeze_exhaustive(s: &ClopenSet, horizon: usize) -> Option<usize> {
    assert!(horizon <= 4);
    let base = Leaves::of(s, horizon);
    let canon = base.canonical();
    let n = 1usize << horizon;
    let base_mask: u32 = (0..n).filter(|&i| base.bits[i]).map(|i| 1 << i).sum();
    let mut best: Option<usize> = None;
    for mask in 0u32..(1 << n) {
        if mask & base_mask != base_mask || mask.count_ones() as usize * 2 >= n {
            continue;
        }
        let t = Leaves { d: horizon, bits: (0..n).map(|i| mask >> i & 1 == 1).collect() };
        if let Some(k) = first_difference(&canon, &t.canonical(), horizon + 1) {
            best = Some(best.map_or(k, |b| b.min(k)));
        }
    }
    best
}

/// The density clauses for `psi` against the stem condition `(depth, phi)`,
/// recomputed on leaves.
#[derive(Debug, PartialEq, Eq)]
pub struct Clauses {
    pub a: Dyadic,
    pub stem_kept: bool,
    pub refines: bool,
    pub measure_window: bool,
    pub slack_kept: bool,
}

impl Clauses {
    pub fn all(&self) -> bool {
        self.stem_kept && self.refines && self.measure_window && self.slack_kept
    }
}

pub fn aprime_clauses(depth: usize, phi: &ClopenSet, psi: &ClopenSet) -> Clauses {
    assert!(depth >= 1);
    let d = phi.support_depth().max(psi.support_depth()).max(depth) + 1;
    let (lp, lq) = (Leaves::of(phi, d), Leaves::of(psi, d));
    let (cp, cq) = (lp.canonical(), lq.canonical());
    let i = depth - 1;
    let stem: Vec<&BitString> = cp.iter().filter(|m| m.len() < depth).collect();
    let open: Vec<BitString> = strings_of_len(i).filter(|s| !stem.iter().any(|m| m.is_prefix_of(s))).collect();
    let width = Dyadic::pow2_neg(i as u32);
    let residual = |l: &Leaves, s: &BitString| &width - &l.mass_below(s);
    let a = open.iter().map(|s| residual(&lp, s)).min().expect("some slot is open below measure 1/2");
    let half_a = a.shr(1);
    let half = Dyadic::half();
    let mu = lq.measure();
    Clauses {
        stem_kept: levels(&cp, d + 1)[..depth] == levels(&cq, d + 1)[..depth],
        refines: cp.iter().all(|m| cq.iter().any(|c| c.is_prefix_of(m))),
        measure_window: mu < half && mu > &half - &half_a,
        slack_kept: open.iter().all(|s| residual(&lq, s) >= half_a),
        a,
    }
}

/// Stem masses of a condition, computed from leaves: mass on lengths
/// `< depth`, on lengths `< depth - 1`, and on lengths `≥ depth`.
pub fn masses(depth: usize, phi: &ClopenSet) -> (Dyadic, Dyadic, Dyadic) {
    let d = phi.support_depth().max(depth);
    let canon = Leaves::of(phi, d).canonical();
    let mass = |keep: &dyn Fn(usize) -> bool| {
        canon.iter().filter(|m| keep(m.len())).fold(Dyadic::zero(), |acc, m| &acc + &Dyadic::pow2_neg(m.len() as u32))
    };
    (mass(&|l| l < depth), mass(&|l| l + 1 < depth), mass(&|l| l >= depth))
}

/// Every `n ≤ 64` with `1/2 - 2^-n < stem ≤ 1/2 - 2^-(n+1)`.
pub fn windows_of(stem: &Dyadic) -> Vec<u32> {
    let half = Dyadic::half();
    (0..=64).filter(|&n| *stem > &half - &Dyadic::pow2_neg(n) && *stem <= &half - &Dyadic::pow2_neg(n + 1)).collect()
}

/// Whether window `n` witnesses A'' membership for the given masses.
pub fn window_ok(n: u32, stem: &Dyadic, penult: &Dyadic, tail: &Dyadic) -> bool {
    let edge = &Dyadic::half() - &Dyadic::pow2_neg(n);
    *stem > edge && *penult <= edge && *tail < Dyadic::pow2_neg(n + 7)
}

/// `ν2(i + 1)`.
pub fn two_adic(i: usize) -> u64 {
    (i + 1).trailing_zeros() as u64
}

/// The label formula, from per-level member counts of the stem.
pub fn label(level_counts: &[usize], f: impl Fn(usize) -> u64) -> Vec<u64> {
    let mass_below = |i: usize| {
        level_counts[..i.min(level_counts.len())]
            .iter()
            .enumerate()
            .fold(Dyadic::zero(), |acc, (l, &c)| &acc + &(&Dyadic::pow2_neg(l as u32) * c as u64))
    };
    let stem = mass_below(level_counts.len());
    let n = windows_of(&stem)[0];
    let half = Dyadic::half();
    (0..=n)
        .map(|j| {
            let threshold = &half - &Dyadic::pow2_neg(j);
            let i = (0..=level_counts.len()).find(|&i| mass_below(i) > threshold).expect("stem exceeds the threshold");
            f(i)
        })
        .collect()
}

pub fn level_counts(depth: usize, phi: &ClopenSet) -> Vec<usize> {
    let d = phi.support_depth().max(depth);
    levels(&Leaves::of(phi, d).canonical(), d + 1)[..depth].iter().map(BTreeSet::len).collect()
}

/// Cantor pairing.
pub fn pi(a: &BigUint, b: &BigUint) -> BigUint {
    let s = a + b;
    (&s * (&s + 1u32)) / 2u32 + b
}

/// Index of a finite sequence: `0` for the empty one, otherwise
/// `1 + π(k, g)` with `g` the right fold of the entries under `π`.
pub fn code(entries: &[BigUint]) -> BigUint {
    match entries.split_last() {
        None => BigUint::from(0u32),
        Some((last, init)) => {
            let g = init.iter().rev().fold(last.clone(), |acc, a| pi(a, &acc));
            pi(&BigUint::from(init.len()), &g) + 1u32
        }
    }
}

pub fn code_u64(entries: &[u64]) -> BigUint {
    code(&entries.iter().map(|&v| BigUint::from(v)).collect::<Vec<_>>())
}

/// Inverse of [`pi`].
pub fn unpi(z: &BigUint) -> (BigUint, BigUint) {
    let w = ((z * 8u32 + 1u32).sqrt() - 1u32) / 2u32;
    let t = &w * (&w + 1u32) / 2u32;
    let b = z - t;
    (&w - &b, b)
}

/// Inverse of [`code`].
pub fn decode(n: &BigUint) -> Vec<BigUint> {
    if *n == BigUint::from(0u32) {
        return Vec::new();
    }
    let (k, mut g) = unpi(&(n - 1u32));
    let k: usize = k.try_into().expect("short sequence");
    let mut out = Vec::with_capacity(k + 1);
    for _ in 0..k {
        let (a, rest) = unpi(&g);
        out.push(a);
        g = rest;
    }
    out.push(g);
    out
}

/// The stem order, from its definition: `p`'s stem is at least as deep,
/// the stems agree below `q`'s depth, and every member of `q`'s set lies
/// under a member of `p`'s set.
pub fn stem_le(p_depth: usize, p_phi: &ClopenSet, q_depth: usize, q_phi: &ClopenSet) -> bool {
    let d = p_phi.support_depth().max(q_phi.support_depth()).max(p_depth) + 1;
    let (cp, cq) = (Leaves::of(p_phi, d).canonical(), Leaves::of(q_phi, d).canonical());
    p_depth >= q_depth
        && levels(&cp, d + 1)[..q_depth] == levels(&cq, d + 1)[..q_depth]
        && cq.iter().all(|m| cp.iter().any(|c| c.is_prefix_of(m)))
}
