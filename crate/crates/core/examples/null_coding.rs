//! The sequence enumeration, the intervals B^n_{x,y}, and a covering
//! witness for four ground reals.

use amoeba_forcing::coding::{avoids, b_step, b_tail, cover_witness, enum_seq, seq_code, CohenSeq, FinSeq, FnRep};
use amoeba_forcing::Dyadic;
use num_bigint::BigUint;

fn main() {
    for n in [0u64, 1, 10, 91, 1000] {
        let s = enum_seq(&BigUint::from(n));
        println!("tau_{n} = <{s}>, code back {}", seq_code(&s));
    }
    let s: FinSeq = "2,0,1".parse().expect("valid sequence");
    println!("code(<{s}>) = {}", seq_code(&s));

    let x: FnRep = ";const:0".parse().expect("valid function");
    let y: FnRep = "0,0,10;const:0".parse().expect("valid function");
    println!("B^2 = {}", b_step(&x, &y, 2).expect("small restriction"));
    println!("union over 1 < m <= 4: {}", b_tail(&x, &y, 1, 4).expect("n < N"));

    let xs: Vec<FnRep> = ["0;const:0", "1;const:0", "2;const:5", ";id+3"].iter().map(|t| t.parse().unwrap()).collect();
    let w = cover_witness(&xs, 2, &CohenSeq::default()).expect("separated reals");
    println!("cover: separation {}, t = {}, union {}", w.separation, w.t, w.union);
    let z: Dyadic = "5/8".parse().expect("valid dyadic");
    println!("5/8 avoids the cover: {}", avoids(&z, &w.union));
}
