//! Windows, labels and the projection search into Cohen conditions.

use amoeba_forcing::amoeba::{
    app_witness, densify_app, h_label, meet_same_stem, projection_search, LabelFn, MeetOutcome, ProjectionOutcome,
    StemCondition,
};
use amoeba_forcing::coding::Natural;

fn main() {
    let f = LabelFn::TwoAdic;
    let p: StemCondition = "4|00,010".parse().expect("valid condition");
    println!("window of {p}: {:?}", app_witness(&p));
    println!("label of {p}: {}", h_label(&p, &f).expect("in A''"));

    let q = densify_app(&"2|-".parse().expect("valid condition"));
    let label = h_label(&q, &f).expect("densified into A''");
    println!("densify 2|- -> {q}, label {label}");
    for v in 0..3u64 {
        let mut t = label.clone();
        t.push(Natural::from(v));
        match projection_search(&q, &t, &f, 16) {
            Ok(ProjectionOutcome::Found(r)) => println!("  target {t}: {r} with label {}", h_label(&r, &f).unwrap()),
            Ok(ProjectionOutcome::NotFound { reason }) => println!("  target {t}: not found ({reason})"),
            Err(e) => println!("  target {t}: {e}"),
        }
    }

    let a: StemCondition = "4|00,010,01100".parse().expect("valid condition");
    let b: StemCondition = "4|00,010,01101".parse().expect("valid condition");
    match meet_same_stem(&[a, b]).expect("same stem") {
        MeetOutcome::Feasible(m) => println!("meet {m}, measure {}", m.phi().measure()),
        other => println!("meet {other:?}"),
    }
}
