//! The seeded suites behind `amoeba check`. Each suite compares library
//! results against brute-force computations on small instances and emits
//! one record per property.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use rand::Rng;

use super::report::{Outcome, Record, Report};
use crate::amoeba::{
    a_compatible, a_le, ap_compatible, ap_le, app_witness, aprime_clauses, densify_aprime, densify_app, freeze_prefix,
    h_label, h_window, meet_same_stem, phi_embed, projection_search, AmoebaCondition, LabelFn, MeetOutcome,
    ProjectionOutcome, StemCondition,
};
use crate::cantor::{check_star, BitString, ClopenSet, LevelFunction};
use crate::coding::{
    avoids, b_tail, cover_witness, enum_seq, interval, seq_code, CohenSeq, FinSeq, FnRep, IntervalUnion, Natural, Tail,
};
use crate::dyadic::Dyadic;
use crate::gen;
use crate::posets::{
    cohen_le, ed_family, ev_le, ev_stem_meet, hechler_le, hypothesis_check, loc_is_condition, loc_le, loc_stem_meet,
    Condition, EdMode, EvDiffCond, HechlerCond, HypothesisOutcome, LocCond, LocMeet,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Clopen,
    Star,
    Embed,
    App,
    Meet,
    Coding,
    Aux,
    All,
}

/// Run `suite` with the given seed. `depth` bounds the stem extensions
/// tried by the hypothesis checks.
pub fn run_suite(suite: Suite, seed: u64, depth: usize) -> Report {
    let mut report = Report::new(seed);
    let all = suite == Suite::All;
    // every suite draws from its own stream so that suites stay
    // reproducible when run alone
    if all || suite == Suite::Clopen {
        clopen_suite(&mut report, seed);
    }
    if all || suite == Suite::Star {
        star_suite(&mut report, seed);
    }
    if all || suite == Suite::Embed {
        embed_suite(&mut report, seed);
    }
    if all || suite == Suite::App {
        app_suite(&mut report, seed);
    }
    if all || suite == Suite::Meet {
        meet_suite(&mut report, seed);
    }
    if all || suite == Suite::Coding {
        coding_suite(&mut report, seed);
    }
    if all || suite == Suite::Aux {
        aux_suite(&mut report, seed, depth);
    }
    report
}

fn stream(seed: u64, suite: u64) -> rand_chacha::ChaCha8Rng {
    gen::rng(seed.wrapping_mul(0x9e37_79b9_7f4a_7c15).wrapping_add(suite))
}

/// Counts agreements for one property and remembers the first miss.
struct Tally {
    name: &'static str,
    params: String,
    checked: usize,
    misses: usize,
    first_miss: Option<String>,
}

impl Tally {
    fn new(name: &'static str, params: impl Into<String>) -> Self {
        Tally { name, params: params.into(), checked: 0, misses: 0, first_miss: None }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.misses += 1;
            if self.first_miss.is_none() {
                self.first_miss = Some(describe());
            }
        }
    }

    fn record(self, seed: u64) -> Record {
        let outcome = Outcome::from_bool(self.misses == 0 && self.checked > 0);
        let mut r = Record::new(self.name, &format!("{} seed={seed}", self.params), outcome)
            .with("checked", self.checked)
            .with("mismatches", self.misses);
        if let Some(m) = self.first_miss {
            r = r.with("first_mismatch", m);
        }
        r
    }
}

// ---- brute-force leaf model -------------------------------------------

/// Leaf `k` of depth `d` is the string spelling `k` in binary.
fn leaf_range(s: &BitString, d: usize) -> std::ops::Range<usize> {
    let idx = s.bits().iter().fold(0usize, |acc, &b| acc * 2 + usize::from(b));
    let width = 1 << (d - s.len());
    idx * width..(idx + 1) * width
}

fn leaves<'a>(strings: impl IntoIterator<Item = &'a BitString>, d: usize) -> Vec<bool> {
    let mut v = vec![false; 1 << d];
    for s in strings {
        v[leaf_range(s, d)].iter_mut().for_each(|x| *x = true);
    }
    v
}

fn leaf_measure(v: &[bool], d: usize) -> Dyadic {
    Dyadic::new(v.iter().filter(|&&x| x).count() as i64, d as u32)
}

fn all_strings(max_len: usize) -> Vec<BitString> {
    (0..=max_len).flat_map(|len| (0..1u64 << len).map(move |k| BitString::from_index(k, len))).collect()
}

/// Prefix free and free of sibling pairs.
fn is_canonical_form(s: &ClopenSet) -> bool {
    let m = s.members();
    m.iter().all(|a| m.iter().all(|b| a == b || !a.comparable(b)))
        && m.iter().all(|a| a.sibling().is_none_or(|sib| !m.contains(&sib)))
}

// ---- suites ------------------------------------------------------------

fn clopen_suite(report: &mut Report, seed: u64) {
    const D: usize = 10;
    const N: usize = 1000;
    let mut rng = stream(seed, 1);
    let params = format!("clopen n={N} depth={D}");
    let mut canon = Tally::new("clopen.canonicalize", &params);
    let mut measure = Tally::new("clopen.measure", &params);
    let mut union = Tally::new("clopen.union", &params);
    let mut inter = Tally::new("clopen.intersect", &params);
    let mut compl = Tally::new("clopen.complement", &params);
    let mut subset = Tally::new("clopen.is_subset", &params);
    let mut below = Tally::new("clopen.mass_below", &params);
    let mut resid = Tally::new("clopen.residual_mass", &params);
    for _ in 0..N {
        let raw: Vec<BitString> = (0..rng.gen_range(0..8)).map(|_| gen::short_string(&mut rng, D)).collect();
        let s = ClopenSet::canonicalize(&raw);
        let ls = leaves(s.members(), D);
        canon.check(ls == leaves(&raw, D) && is_canonical_form(&s), || format!("{raw:?}"));
        measure.check(s.measure() == leaf_measure(&ls, D), || s.to_string());

        let t = if rng.gen_bool(0.3) {
            s.union(&gen::clopen(&mut rng, D, 3))
        } else {
            gen::clopen(&mut rng, D, 6)
        };
        let lt = leaves(t.members(), D);
        let zip = |f: fn(bool, bool) -> bool| -> Vec<bool> { ls.iter().zip(&lt).map(|(&a, &b)| f(a, b)).collect() };
        let u = s.union(&t);
        union.check(leaves(u.members(), D) == zip(|a, b| a || b) && is_canonical_form(&u), || format!("{s} {t}"));
        let i = s.intersect(&t);
        inter.check(leaves(i.members(), D) == zip(|a, b| a && b) && is_canonical_form(&i), || format!("{s} {t}"));
        let c = s.complement();
        let lc: Vec<bool> = ls.iter().map(|&a| !a).collect();
        compl.check(leaves(c.members(), D) == lc && is_canonical_form(&c), || s.to_string());
        let sub = ls.iter().zip(&lt).all(|(&a, &b)| !a || b);
        subset.check(s.is_subset(&t) == sub, || format!("{s} {t}"));

        let len = rng.gen_range(0..=D);
        let sigma = gen::bit_string(&mut rng, len);
        let range = leaf_range(&sigma, D);
        let under = Dyadic::new(ls[range.clone()].iter().filter(|&&x| x).count() as i64, D as u32);
        below.check(s.mass_below(&sigma) == under, || format!("{s} at {sigma}"));
        resid.check(s.residual_mass(&sigma) == Dyadic::pow2_neg(sigma.len() as u32) - under, || format!("{s} at {sigma}"));
    }
    for t in [canon, measure, union, inter, compl, subset, below, resid] {
        report.push(t.record(seed));
    }
}

/// The defining property: no `σ ∉ φ(|σ|)` has `[σ]` covered by deeper
/// levels. Evaluated on the leaves at depth `d`.
fn star_by_definition(l: &LevelFunction, d: usize) -> bool {
    for i in 0..d {
        let deeper: Vec<&BitString> = l.strings().filter(|s| s.len() > i).collect();
        let cover = leaves(deeper.iter().copied(), d);
        for k in 0..1u64 << i {
            let sigma = BitString::from_index(k, i);
            if l.level(i).contains(&sigma) {
                continue;
            }
            if cover[leaf_range(&sigma, d)].iter().all(|&x| x) {
                return false;
            }
        }
    }
    true
}

fn star_suite(report: &mut Report, seed: u64) {
    const D: usize = 8;
    const N: usize = 1000;
    let mut rng = stream(seed, 2);
    let params = format!("star n={N} depth={D}");
    let mut siblings = Tally::new("star.no_sibling_pair", &params);
    let mut definition = Tally::new("star.definition", &params);
    let mut views = Tally::new("star.level_view", &params);
    let mut rejected = 0;
    for _ in 0..N {
        let l = gen::level_function(&mut rng, D);
        let star = check_star(&l);
        rejected += usize::from(!star);
        siblings.check(star == !l.has_sibling_pair(), || format!("{l:?}"));
        definition.check(star == star_by_definition(&l, D), || format!("{l:?}"));
        let s = gen::clopen(&mut rng, D, 8);
        views.check(check_star(&s.level_view()), || s.to_string());
    }
    report.push(siblings.record(seed).with("rejected", rejected));
    report.push(definition.record(seed));
    report.push(views.record(seed));
}

/// The least level at which some amoeba extension of `s` changes the level
/// content, found by trying every single added cylinder of length
/// `≤ horizon`. Any extension changing level `j` first contains one added
/// cylinder whose completion already changes a level `≤ j`.
fn freeze_by_extension(s: &ClopenSet, horizon: usize) -> Option<usize> {
    let base = leaves(s.members(), horizon);
    let half = 1usize << (horizon - 1);
    let mut best: Option<usize> = None;
    for rho in all_strings(horizon) {
        let range = leaf_range(&rho, horizon);
        if base[range.clone()].iter().all(|&x| x) {
            continue;
        }
        let mut grown = base.clone();
        grown[range].iter_mut().for_each(|x| *x = true);
        if grown.iter().filter(|&&x| x).count() >= half {
            continue;
        }
        let level = (0..=rho.len())
            .find(|&k| grown[leaf_range(&rho.prefix(k), horizon)].iter().all(|&x| x))
            .expect("rho itself is covered");
        best = Some(best.map_or(level, |b| b.min(level)));
    }
    best
}

fn embed_suite(report: &mut Report, seed: u64) {
    const PAIRS: usize = 500;
    let mut rng = stream(seed, 3);
    let params = format!("embed pairs={PAIRS} depth=6");
    let mut order = Tally::new("embed.order", &params);
    let mut incompat = Tally::new("embed.incompatibility", &params);
    let (mut comparable, mut incompatible) = (0, 0);
    for _ in 0..PAIRS {
        let q = gen::amoeba_set(&mut rng, 6, 6);
        let p = match rng.gen_range(0..3) {
            0 => {
                let grown = q.union(&gen::clopen(&mut rng, 6, 3));
                if grown.measure() < Dyadic::half() {
                    grown
                } else {
                    q.clone()
                }
            }
            // from the gaps of q, so that the union tends to reach 1/2
            1 => gen::amoeba_set_within(&mut rng, &q.complement()),
            _ => gen::amoeba_set(&mut rng, 6, 6),
        };
        let (ap, aq) = (AmoebaCondition::new(p.clone()).unwrap(), AmoebaCondition::new(q.clone()).unwrap());
        let (fp, fq) = (phi_embed(&p).unwrap(), phi_embed(&q).unwrap());
        if a_le(&ap, &aq) {
            comparable += 1;
            order.check(ap_le(&fp, &fq), || format!("{p} <= {q}"));
        }
        if !a_compatible(&ap, &aq) {
            incompatible += 1;
            incompat.check(!ap_compatible(&fp, &fq), || format!("{p} | {q}"));
        }
    }
    report.push(order.record(seed).with("comparable", comparable));
    report.push(incompat.record(seed).with("incompatible", incompatible));

    // every amoeba set of support depth <= 4, oracle horizon 6
    let mut freeze = Tally::new("embed.freeze_prefix", "embed freeze depth=4 horizon=6");
    for mask in 0u32..1 << 16 {
        if mask.count_ones() >= 8 {
            continue;
        }
        let strings: Vec<BitString> =
            (0..16u64).filter(|k| mask >> k & 1 == 1).map(|k| BitString::from_index(k, 4)).collect();
        let s = ClopenSet::canonicalize(&strings);
        let got = freeze_prefix(&s).ok();
        freeze.check(got == freeze_by_extension(&s, 6), || format!("{s}: {got:?}"));
    }
    report.push(freeze.record(seed));

    let mut dense = Tally::new("embed.densify_aprime", &params);
    for _ in 0..PAIRS {
        let s = gen::amoeba_set(&mut rng, 6, 6);
        let p = phi_embed(&s).unwrap();
        let ok = match densify_aprime(&p) {
            Ok(psi) => {
                aprime_clauses(&p, &psi).is_ok_and(|c| c.all())
                    && is_canonical_form(&psi)
                    && check_star(&psi.level_view())
                    && phi_embed(&psi).is_ok_and(|fpsi| ap_le(&fpsi, &p))
            }
            Err(_) => false,
        };
        dense.check(ok, || p.to_string());
    }
    report.push(dense.record(seed));
}

/// The three window inequalities, recomputed from the levels.
fn window_holds(q: &StemCondition, n: u32) -> bool {
    let levels = q.phi().level_view();
    let d = q.stem_depth();
    let stem = levels.mass_below_level(d);
    let penult = levels.mass_below_level(d.saturating_sub(1));
    let tail = q.phi().measure() - stem.clone();
    let edge = Dyadic::half() - Dyadic::pow2_neg(n);
    stem > edge && penult <= edge && tail < Dyadic::pow2_neg(n + 7)
}

fn app_suite(report: &mut Report, seed: u64) {
    const N: usize = 200;
    let mut rng = stream(seed, 4);
    let params = format!("app n={N}");
    let f = LabelFn::TwoAdic;
    let mut window = Tally::new("app.densify_window", &params);
    let mut unique = Tally::new("app.h_window_unique", &params);
    let mut monotone = Tally::new("app.h_label_order", &params);
    let mut pairs = 0;
    for _ in 0..N {
        let p = gen::stem_condition(&mut rng, 6, 6);
        let q = densify_app(&p);
        let w = app_witness(&q);
        window.check(ap_le(&q, &p) && w.as_ref().is_some_and(|w| window_holds(&q, w.n)), || p.to_string());

        let stem = q.stem_mass();
        let hits: Vec<u32> = (0..64)
            .filter(|&n| stem > Dyadic::half_minus_pow2(n) && stem <= Dyadic::half_minus_pow2(n + 1))
            .collect();
        unique.check(hits.len() == 1 && h_window(&q).ok() == hits.first().copied(), || q.to_string());

        let Ok(label) = h_label(&q, &f) else { continue };
        // a strengthening through the projection search
        let mut t = label.clone();
        t.push(Natural::from(rng.gen_range(0..3u64)));
        if let Ok(ProjectionOutcome::Found(r)) = projection_search(&q, &t, &f, 16) {
            pairs += 1;
            monotone.check(ap_le(&r, &q) && h_label(&r, &f).is_ok_and(|l| l.extends(&label)), || format!("{r} <= {q}"));
        }
        // a strengthening by one deep tail cylinder
        let deep = q.stem_depth() + 10;
        let extra = gen::bit_string(&mut rng, deep);
        if !q.phi().covers(&extra) {
            let r = StemCondition::new(q.stem_depth(), q.phi().union(&ClopenSet::cylinder(extra)));
            if let Ok(r) = r {
                if ap_le(&r, &q) && app_witness(&r).is_some() {
                    pairs += 1;
                    monotone.check(h_label(&r, &f).is_ok_and(|l| l.extends(&label)), || format!("{r} <= {q}"));
                }
            }
        }
    }
    report.push(window.record(seed));
    report.push(unique.record(seed));
    report.push(monotone.record(seed).with("pairs", pairs));

    let worked: StemCondition = "4|00,010".parse().expect("literal");
    let label = h_label(&worked, &f).map(|l| l.to_string()).unwrap_or_else(|e| e.to_string());
    report.push(
        Record::new("app.worked_label", "4|00,010 f=v2", Outcome::from_bool(label == "0,2,0")).with("label", label),
    );
}

/// A stem with window `n`: cylinders `0^j 1` for `1 ≤ j < n` bring the mass
/// to exactly `1/2 - 2^-n`, and `0^(n+1) 1` one level before the stem
/// depth `n + 3` pushes it over.
fn window_base(n: u32) -> StemCondition {
    let n = n as usize;
    let mut strings: Vec<BitString> = (1..n)
        .map(|j| BitString::from_bits(std::iter::repeat_n(false, j).chain([true])))
        .collect();
    strings.push(BitString::from_bits(std::iter::repeat_n(false, n + 1).chain([true])));
    StemCondition::new(n + 3, ClopenSet::canonicalize(&strings)).expect("mass below 1/2")
}

fn meet_suite(report: &mut Report, seed: u64) {
    const TRIALS: usize = 3;
    let mut rng = stream(seed, 5);
    let params = format!("meet n<=6 k<=16 trials={TRIALS}");
    let mut bound = Tally::new("meet.measure_bound", &params);
    let mut sufficient = Tally::new("meet.sufficient_feasible", &params);
    let (mut feasible, mut infeasible) = (0, 0);
    for n in 1..=6u32 {
        let base = window_base(n);
        let stem_mass = base.stem_mass();
        let unit = Dyadic::pow2_neg(n + 7);
        for k in 1..=16u64 {
            for _ in 0..TRIALS {
                // each tail: up to 7 cylinders at level n+10 under 1, mass < 2^-(n+7)
                let ps: Vec<StemCondition> = (0..k)
                    .map(|_| {
                        let tail: Vec<BitString> = (0..rng.gen_range(1..=7))
                            .map(|_| BitString::from_bits([true]).concat(&gen::bit_string(&mut rng, n as usize + 9)))
                            .collect();
                        let phi = base.phi().union(&ClopenSet::canonicalize(&tail));
                        StemCondition::new(base.stem_depth(), phi).expect("small tail")
                    })
                    .collect();
                let windows_ok = ps.iter().all(|p| app_witness(p).is_some_and(|w| w.n == n));
                let budget = &unit * k;
                let outcome = meet_same_stem(&ps);
                match &outcome {
                    Ok(MeetOutcome::Feasible(m)) => {
                        feasible += 1;
                        bound.check(windows_ok && m.phi().measure() < &stem_mass + &budget, || format!("n={n} k={k}"));
                    }
                    _ => infeasible += 1,
                }
                if budget <= Dyadic::half() - stem_mass.clone() {
                    sufficient.check(matches!(outcome, Ok(MeetOutcome::Feasible(_))), || format!("n={n} k={k}"));
                }
            }
        }
    }
    report.push(bound.record(seed).with("feasible", feasible).with("infeasible", infeasible));
    report.push(sufficient.record(seed));
}

fn coding_suite(report: &mut Report, seed: u64) {
    let mut rng = stream(seed, 6);
    let mut roundtrip = Tally::new("coding.enumeration", "coding enum n<10000");
    for n in 0..10_000u64 {
        let s = enum_seq(&BigUint::from(n));
        roundtrip.check(seq_code(&s) == BigUint::from(n), || n.to_string());
    }
    for _ in 0..1000 {
        let s = gen::fin_seq(&mut rng, 3, 6);
        roundtrip.check(enum_seq(&seq_code(&s)) == s, || s.to_string());
    }
    report.push(roundtrip.record(seed));

    let mut tiling = Tally::new("coding.tiling", "coding tiles n<=8");
    for n in 0..=8u32 {
        let tiles: Vec<_> = (0..1u64 << n).map(|i| interval(n, &BigUint::from(i))).collect();
        let adjacent = tiles.windows(2).all(|w| w[0].bounds().map(|b| b.1) == w[1].bounds().map(|b| b.0));
        let total: Dyadic = tiles.iter().map(|t| t.length()).sum();
        let union = IntervalUnion::from_intervals(&tiles);
        let beyond = interval(n, &BigUint::from(1u64 << n)).is_empty();
        tiling.check(adjacent && total == Dyadic::one() && union.is_unit() && beyond, || n.to_string());
    }
    report.push(tiling.record(seed));

    let mut tails = Tally::new("coding.b_tail_length", "coding b_tail n=200");
    for _ in 0..200 {
        let x = gen::fn_rep(&mut rng, 4, 3);
        let y = gen::fn_rep(&mut rng, 6, 4);
        let n = rng.gen_range(0..6usize);
        let big_n = n + rng.gen_range(1..8usize);
        let ok = b_tail(&x, &y, n, big_n).is_ok_and(|u| u.length() < Dyadic::pow2_neg(n as u32));
        tails.check(ok, || format!("{x} {y} {n} {big_n}"));
    }
    report.push(tails.record(seed));

    let mut cover = Tally::new("coding.cover_tiling", "coding cover ell<=6");
    let mut replay = Tally::new("coding.cover_replay", "coding cover ell<=6 z=100");
    for ell in 0..=6usize {
        let count = 1usize << ell;
        // distinct first values guarantee separation
        let mut firsts: Vec<u64> = (0..count as u64 + 4).collect();
        rand::seq::SliceRandom::shuffle(&mut firsts[..], &mut rng);
        let xs: Vec<FnRep> = firsts[..count]
            .iter()
            .map(|&v| {
                let rest: Vec<u64> = (0..rng.gen_range(0..3)).map(|_| rng.gen_range(0..4)).collect();
                let table: Vec<u64> = std::iter::once(v).chain(rest).collect();
                FnRep::with_table(&table, Tail::Const(BigUint::from(rng.gen_range(0..4u64))))
            })
            .collect();
        let s = CohenSeq::from(&gen::fin_seq(&mut rng, ell, 5));
        let s = CohenSeq(s.0.into_iter().take(ell).collect());
        match cover_witness(&xs, ell, &s) {
            Ok(w) => {
                let lengths: Dyadic = w.union.intervals().iter().map(|i| i.length()).sum();
                cover.check(w.union.is_unit() && lengths == Dyadic::one() && w.t.extends(&s), || format!("ell={ell}"));
                for _ in 0..100 {
                    let z = Dyadic::new(rng.gen_range(0..1u64 << 40) as i64, 40);
                    replay.check(!avoids(&z, &w.union), || format!("ell={ell} z={z}"));
                }
            }
            Err(e) => cover.check(false, || format!("ell={ell}: {e}")),
        }
    }
    report.push(cover.record(seed));
    report.push(replay.record(seed));
}

// ---- auxiliary posets ---------------------------------------------------

/// A random extension of `s` by up to `extra` entries, each chosen by `pick`.
fn grow(rng: &mut impl Rng, s: &FinSeq, extra: usize, mut pick: impl FnMut(&mut dyn rand::RngCore, usize) -> u64) -> FinSeq {
    let mut out = s.clone();
    for _ in 0..rng.gen_range(0..=extra) {
        let i = out.len();
        let v = pick(rng, i);
        out.0.push(BigUint::from(v));
    }
    out
}

fn small(v: &BigUint) -> u64 {
    u64::try_from(v).expect("small test values")
}

/// `f + δ` everywhere, for a random `δ ≥ 0` that may grow along the table.
fn dominating(rng: &mut impl Rng, f: &FnRep) -> FnRep {
    let len = f.table().len() + rng.gen_range(0..2);
    let table: Vec<BigUint> = (0..len).map(|i| f.eval(i) + BigUint::from(rng.gen_range(0..2u64))).collect();
    let bump = BigUint::from(rng.gen_range(0..2u64));
    let tail = match f.tail() {
        Tail::Const(c) => Tail::Const(c + bump),
        Tail::IdPlus(k) => Tail::IdPlus(k + bump),
    };
    FnRep::new(table, tail)
}

fn hechler_below(rng: &mut impl Rng, q: &HechlerCond) -> HechlerCond {
    if rng.gen_bool(0.2) {
        return gen::hechler_cond(rng);
    }
    let side = q.side.clone();
    let stem = grow(rng, &q.stem, 2, |r, i| small(&side.eval(i)) + r.gen_range(0..2));
    HechlerCond { stem, side: dominating(rng, &q.side) }
}

fn ev_below(rng: &mut impl Rng, q: &EvDiffCond) -> EvDiffCond {
    if rng.gen_bool(0.2) {
        return gen::ev_cond(rng);
    }
    let side = q.side.clone();
    let stem = grow(rng, &q.stem, 2, |r, i| {
        let used: BTreeSet<u64> = side.iter().map(|g| small(&g.eval(i))).collect();
        let mut v = r.gen_range(0..4);
        while used.contains(&v) {
            v += 1;
        }
        v
    });
    let mut side = q.side.clone();
    if rng.gen_bool(0.5) {
        side.insert(gen::fn_rep(rng, 2, 3));
    }
    EvDiffCond { stem, side }
}

fn loc_below(rng: &mut impl Rng, q: &LocCond) -> LocCond {
    if rng.gen_bool(0.2) {
        return gen::loc_cond(rng, 3, 4);
    }
    let mut p = q.clone();
    for _ in 0..rng.gen_range(0..=2) {
        let i = p.slots.len();
        let mut slot: BTreeSet<BigUint> = q.side.iter().map(|g| g.eval(i)).collect();
        let mut v = 0u64;
        while slot.len() < i + 1 {
            slot.insert(BigUint::from(v + rng.gen_range(0..2)));
            v += 1;
        }
        p.slots.push(slot);
    }
    if p.side.len() < p.side_bound() && rng.gen_bool(0.5) {
        p.side.insert(gen::fn_rep(rng, 2, 4));
    }
    p
}

/// Reflexivity on every element and transitivity on every chain
/// `p ≤ q ≤ r` among `N` generated triples.
fn order_laws<T: std::fmt::Debug>(
    report: &mut Report,
    seed: u64,
    name: &'static str,
    rng: &mut rand_chacha::ChaCha8Rng,
    fresh: impl Fn(&mut rand_chacha::ChaCha8Rng) -> T,
    below: impl Fn(&mut rand_chacha::ChaCha8Rng, &T) -> T,
    le: impl Fn(&T, &T) -> bool,
) {
    const N: usize = 1000;
    let mut tally = Tally::new(name, format!("{name} triples={N}"));
    let mut chains = 0;
    for _ in 0..N {
        let r = fresh(rng);
        let q = below(rng, &r);
        let p = below(rng, &q);
        tally.check(le(&p, &p) && le(&q, &q) && le(&r, &r), || format!("{p:?}"));
        if le(&p, &q) && le(&q, &r) {
            chains += 1;
            tally.check(le(&p, &r), || format!("{p:?} {q:?} {r:?}"));
        }
    }
    report.push(tally.record(seed).with("chains", chains));
}

fn aux_suite(report: &mut Report, seed: u64, depth: usize) {
    let mut rng = stream(seed, 7);
    order_laws(
        report,
        seed,
        "aux.cohen_order",
        &mut rng,
        |r| gen::cohen_seq(r, 3, 4),
        |r, t| {
            let fs = FinSeq(t.0.iter().map(|n| n.as_biguint().expect("small").clone()).collect());
            CohenSeq::from(&gen::extend_seq(r, &fs, 2, 4))
        },
        cohen_le,
    );
    order_laws(report, seed, "aux.hechler_order", &mut rng, |r| gen::hechler_cond(r), |r, q| hechler_below(r, q), hechler_le);
    order_laws(report, seed, "aux.ev_order", &mut rng, |r| gen::ev_cond(r), |r, q| ev_below(r, q), ev_le);
    order_laws(report, seed, "aux.loc_order", &mut rng, |r| gen::loc_cond(r, 3, 4), |r, q| loc_below(r, q), loc_le);

    // glb over a pool of four side functions, all side sets of size <= 3
    let pool: Vec<FnRep> = vec![FnRep::constant(0), FnRep::constant(2), FnRep::identity_plus(0), FnRep::with_table(&[3], Tail::Const(1u32.into()))];
    let subsets: Vec<BTreeSet<FnRep>> = (0u32..16)
        .filter(|m| m.count_ones() <= 3)
        .map(|m| (0..4).filter(|k| m >> k & 1 == 1).map(|k| pool[k].clone()).collect())
        .collect();
    let stem = FinSeq::from_u64s(&[1]);
    let lower_stems: Vec<FinSeq> =
        std::iter::once(stem.clone()).chain((0..4).map(|v| FinSeq::from_u64s(&[1, v]))).collect();
    let all_sides: Vec<BTreeSet<FnRep>> =
        (0u32..16).map(|m| (0..4).filter(|k| m >> k & 1 == 1).map(|k| pool[k].clone()).collect()).collect();
    let mut glb = Tally::new("aux.ev_meet_glb", "aux glb pool=4");
    for a in &subsets {
        for b in &subsets {
            let p = EvDiffCond { stem: stem.clone(), side: a.clone() };
            let q = EvDiffCond { stem: stem.clone(), side: b.clone() };
            let m = ev_stem_meet(&[p.clone(), q.clone()]).expect("same stem");
            glb.check(ev_le(&m, &p) && ev_le(&m, &q), || format!("{p} {q}"));
            for s in &lower_stems {
                for side in &all_sides {
                    let c = EvDiffCond { stem: s.clone(), side: side.clone() };
                    if ev_le(&c, &p) && ev_le(&c, &q) {
                        glb.check(ev_le(&c, &m), || format!("{c} below {p} and {q}"));
                    }
                }
            }
        }
    }
    report.push(glb.record(seed));

    let parse = |s: &str| -> LocCond { s.parse().expect("literal") };
    let feasible = loc_stem_meet(&[parse("{5},{1,3}|;const:0"), parse("{5},{1,3}|;const:1"), parse("{5},{1,3}|;const:0;;const:2")]);
    let infeasible = loc_stem_meet(&[parse("{5}|;const:0"), parse("{5}|;const:1"), parse("{5}|;const:2")]);
    let ceiling_ok = matches!(&feasible, Ok(LocMeet::Feasible(m)) if loc_is_condition(m))
        && matches!(infeasible, Ok(LocMeet::Infeasible { excess: 1 }));
    report.push(Record::new("aux.loc_ceiling", "aux loc ceiling", Outcome::from_bool(ceiling_ok)).with("excess", 1));

    let e_family: Vec<Condition> = ed_family(5, EdMode::Constant)
        .into_iter()
        .map(|f| Condition::E(EvDiffCond { stem: FinSeq::default(), side: [f].into() }))
        .collect();
    let e_ok = match hypothesis_check(&e_family, 5, depth) {
        Ok(HypothesisOutcome::Witness(w)) => {
            matches!(&w.meet, Condition::E(m) if m.side.len() == 5 && e_family.iter().all(|c| matches!(c, Condition::E(p) if ev_le(m, p))))
        }
        _ => false,
    };
    report.push(Record::new("aux.hypothesis_e", &format!("E constant l=5 depth={depth}"), Outcome::from_bool(e_ok)));

    let l_family: Vec<Condition> = (0..3).map(|i| Condition::L(parse(&format!("{{5}}|;const:{i}")))).collect();
    let clause = match hypothesis_check(&l_family, 3, depth) {
        Ok(HypothesisOutcome::Failure(f)) => f.clause().to_string(),
        other => format!("{other:?}"),
    };
    report.push(
        Record::new("aux.hypothesis_l", &format!("L disjoint l=3 depth={depth}"), Outcome::from_bool(clause == "side ceiling"))
            .with("clause", clause),
    );
}
