//! The stem embedding: freeze depth, the embedded condition, and the dense
//! strengthening with its four clauses.

use amoeba_forcing::amoeba::{aprime_clauses, densify_aprime, freeze_prefix, phi_embed};
use amoeba_forcing::ClopenSet;

fn main() {
    for text in ["-", "00", "10", "00,010"] {
        let s: ClopenSet = text.parse().expect("valid set");
        let p = phi_embed(&s).expect("measure below 1/2");
        println!("freeze({text}) = {}, embedded as {p}", freeze_prefix(&s).expect("amoeba set"));

        let psi = densify_aprime(&p).expect("stem depth at least 1");
        let clauses = aprime_clauses(&p, &psi).expect("same condition");
        println!("  densified to {psi} (measure {}), clauses hold: {}", psi.measure(), clauses.all());
        let back = phi_embed(&psi).expect("still below 1/2");
        println!("  re-embedded {back}, below the start: {}", amoeba_forcing::amoeba::ap_le(&back, &p));
    }
}
