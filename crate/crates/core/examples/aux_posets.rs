//! Cohen, Hechler, eventually-different and localization conditions, and
//! the finite covering-hypothesis check.

use amoeba_forcing::coding::FinSeq;
use amoeba_forcing::posets::{
    ed_family, ev_le, ev_stem_meet, hechler_le, hypothesis_check, loc_le, loc_stem_meet, Condition, EdMode,
    EvDiffCond, HechlerCond, HypothesisOutcome, LocCond,
};

fn main() {
    let p: HechlerCond = "3,9|;const:2".parse().expect("valid condition");
    let q: HechlerCond = "3|;const:2".parse().expect("valid condition");
    println!("Hechler {p} <= {q}: {}", hechler_le(&p, &q));

    let e1: EvDiffCond = "()|;const:0".parse().expect("valid condition");
    let e2: EvDiffCond = "()|;const:1".parse().expect("valid condition");
    let m = ev_stem_meet(&[e1.clone(), e2]).expect("same stem");
    println!("E meet {m}, below the first: {}", ev_le(&m, &e1));

    let l1: LocCond = "{5},{1,3}|;const:3".parse().expect("valid condition");
    let l0: LocCond = "{5}|;const:3".parse().expect("valid condition");
    println!("L {l1} <= {l0}: {}", loc_le(&l1, &l0));
    let crowded: Vec<LocCond> = (0..3).map(|i| format!("{{5}}|;const:{i}").parse().unwrap()).collect();
    println!("three disjoint sides over one slot: {:?}", loc_stem_meet(&crowded).expect("same slots"));

    for (k, mode) in [(3, EdMode::Constant), (3, EdMode::Staggered)] {
        let fs: Vec<String> = ed_family(k, mode).iter().map(ToString::to_string).collect();
        println!("ed_family({k}, {mode:?}) = {}", fs.join(" "));
    }

    let family: Vec<Condition> = ed_family(5, EdMode::Constant)
        .into_iter()
        .map(|f| Condition::E(EvDiffCond { stem: FinSeq::default(), side: [f].into() }))
        .collect();
    match hypothesis_check(&family, 5, 2).expect("homogeneous input") {
        HypothesisOutcome::Witness(w) => {
            println!("E, l = 5: meet {} after {} extensions", w.meet, w.extensions_checked)
        }
        HypothesisOutcome::Failure(f) => println!("E, l = 5: {f}"),
    }
    let family: Vec<Condition> = crowded.into_iter().map(Condition::L).collect();
    match hypothesis_check(&family, 3, 2).expect("homogeneous input") {
        HypothesisOutcome::Witness(w) => println!("L, l = 3: meet {}", w.meet),
        HypothesisOutcome::Failure(f) => println!("L, l = 3: fails the {} clause ({f})", f.clause()),
    }
}
