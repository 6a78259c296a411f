//! Clopen sets as canonical antichains: parsing, the Boolean operations,
//! exact measures and the level view.

use amoeba_forcing::{check_star, ClopenSet};

fn main() {
    let (s, was_canonical) = ClopenSet::parse_reporting("000,001,010").expect("valid set");
    println!("000,001,010 canonicalizes to {s} (already canonical: {was_canonical})");
    println!("measure {}", s.measure());

    let t: ClopenSet = "01,110".parse().expect("valid set");
    println!("{s} U {t} = {}", s.union(&t));
    println!("{s} n {t} = {}", s.intersect(&t));
    println!("complement of {s} = {}", s.complement());
    println!("symmetric difference mass {}", s.symdiff_mass(&t));

    let sigma = "01".parse().expect("valid string");
    println!("mass of {s} below 01: {}, residual {}", s.mass_below(&sigma), s.residual_mass(&sigma));

    let levels = s.union(&t).level_view();
    println!("level view {levels:?}, star property {}", check_star(&levels));
}
