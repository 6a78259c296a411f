//! Algebraic laws and text round trips under proptest.

mod common;

use amoeba_forcing::amoeba::{ap_le, densify_app, h_label, phi_embed, LabelFn, StemCondition};
use amoeba_forcing::coding::{enum_seq, seq_code, CohenSeq, FinSeq, FnRep};
use amoeba_forcing::gen;
use amoeba_forcing::posets::{EvDiffCond, HechlerCond, LocCond};
use amoeba_forcing::{check_star, BitString, ClopenSet, Dyadic};
use num_bigint::BigUint;
use proptest::prelude::*;

fn strings(max_len: usize, max_count: usize) -> impl Strategy<Value = Vec<BitString>> {
    prop::collection::vec(prop::collection::vec(any::<bool>(), 0..=max_len), 0..=max_count)
        .prop_map(|v| v.into_iter().map(BitString::from_bits).collect())
}

fn clopen() -> impl Strategy<Value = ClopenSet> {
    strings(8, 8).prop_map(|v| ClopenSet::canonicalize(&v))
}

/// Sets of measure below 1/2, built from cylinders of length at least 2.
fn amoeba() -> impl Strategy<Value = ClopenSet> {
    strings(7, 6).prop_map(|v| {
        v.into_iter().filter(|s| s.len() >= 2).fold(ClopenSet::empty(), |acc, s| {
            let next = acc.union(&ClopenSet::cylinder(s));
            if next.measure() < Dyadic::half() {
                next
            } else {
                acc
            }
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn canonicalize_is_idempotent(raw in strings(8, 10)) {
        let s = ClopenSet::canonicalize(&raw);
        prop_assert_eq!(&ClopenSet::canonicalize(s.members()), &s);
        prop_assert!(check_star(&s.level_view()));
    }

    #[test]
    fn union_commutes_and_measures_add(s in clopen(), t in clopen()) {
        prop_assert_eq!(s.union(&t), t.union(&s));
        prop_assert_eq!(s.intersect(&t), t.intersect(&s));
        prop_assert_eq!(s.union(&t).measure() + s.intersect(&t).measure(), s.measure() + t.measure());
    }

    #[test]
    fn complement_is_an_involution(s in clopen()) {
        prop_assert_eq!(s.complement().complement(), s.clone());
        prop_assert_eq!(s.measure() + s.complement().measure(), Dyadic::one());
        prop_assert!(s.intersect(&s.complement()).is_empty());
    }

    #[test]
    fn symdiff_is_a_pseudometric(a in clopen(), b in clopen(), c in clopen()) {
        prop_assert!(a.symdiff_mass(&a).is_zero());
        prop_assert_eq!(a.symdiff_mass(&b), b.symdiff_mass(&a));
        prop_assert!(a.symdiff_mass(&c) <= a.symdiff_mass(&b) + b.symdiff_mass(&c));
    }

    #[test]
    fn subset_agrees_with_union(s in clopen(), t in clopen()) {
        prop_assert_eq!(s.is_subset(&t), s.union(&t) == t);
    }

    #[test]
    fn clopen_text_round_trips(s in clopen()) {
        prop_assert_eq!(s.to_string().parse::<ClopenSet>().unwrap(), s);
    }

    #[test]
    fn embedding_preserves_order(q in amoeba(), extra in strings(7, 3)) {
        let p = extra.iter().fold(q.clone(), |acc, s| {
            let next = acc.union(&ClopenSet::cylinder(s.clone()));
            if next.measure() < Dyadic::half() { next } else { acc }
        });
        let (fp, fq) = (phi_embed(&p).unwrap(), phi_embed(&q).unwrap());
        prop_assert!(ap_le(&fp, &fq));
        prop_assert!(ap_le(&fp, &fp));
    }

    #[test]
    fn stem_condition_text_round_trips(seed in any::<u64>()) {
        let p = gen::stem_condition(&mut gen::rng(seed), 6, 6);
        prop_assert_eq!(p.to_string().parse::<StemCondition>().unwrap(), p);
    }

    #[test]
    fn labels_match_the_formula(seed in any::<u64>()) {
        let q = densify_app(&gen::stem_condition(&mut gen::rng(seed), 6, 6));
        let label = h_label(&q, &LabelFn::TwoAdic).unwrap();
        let want = common::label(&common::level_counts(q.stem_depth(), q.phi()), common::two_adic);
        let got: Vec<u64> = label.entries().iter().map(|n| u64::try_from(n.as_biguint().unwrap()).unwrap()).collect();
        prop_assert_eq!(got, want);
    }

    #[test]
    fn codes_round_trip(entries in prop::collection::vec(0u64..50, 0..6)) {
        let s = FinSeq::from_u64s(&entries);
        let c = seq_code(&s);
        prop_assert_eq!(&c, &common::code_u64(&entries));
        prop_assert_eq!(enum_seq(&c), s);
    }

    #[test]
    fn indices_round_trip(n in 0u64..1 << 32) {
        let n = BigUint::from(n);
        prop_assert_eq!(seq_code(&enum_seq(&n)), n);
    }

    #[test]
    fn sequence_text_round_trips(seed in any::<u64>()) {
        let mut rng = gen::rng(seed);
        let f = gen::fn_rep(&mut rng, 4, 9);
        prop_assert_eq!(f.to_string().parse::<FnRep>().unwrap(), f);
        let s = gen::fin_seq(&mut rng, 5, 9);
        prop_assert_eq!(s.to_string().parse::<FinSeq>().unwrap(), s);
        let c = gen::cohen_seq(&mut rng, 5, 9);
        prop_assert_eq!(c.to_string().parse::<CohenSeq>().unwrap(), c);
    }

    #[test]
    fn poset_text_round_trips(seed in any::<u64>()) {
        let mut rng = gen::rng(seed);
        let h = gen::hechler_cond(&mut rng);
        prop_assert_eq!(h.to_string().parse::<HechlerCond>().unwrap(), h);
        let e = gen::ev_cond(&mut rng);
        prop_assert_eq!(e.to_string().parse::<EvDiffCond>().unwrap(), e);
        let l = gen::loc_cond(&mut rng, 3, 6);
        prop_assert_eq!(l.to_string().parse::<LocCond>().unwrap(), l);
    }
}
