//! Interval coding of measure-zero sets from a ground real `x` and a
//! parameter real `y`, and the finite covering witness.
//!
//! `B^n_{x,y}` is the dyadic tile `C^n(τ_{y(n)}(code(x ↾ y(n+1))))` when
//! that index lies in the domain of `τ_{y(n)}`, and empty otherwise. The
//! tiles `C^n(i) = [i·2^-n, (i+1)·2^-n)` partition `[0,1)`.

mod fnrep;
mod interval;
mod natural;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

pub use fnrep::{format_fn_list, parse_fn_list, FnRep, NatSeq, Tail};
pub use interval::{DyadicInterval, IntervalUnion};
pub use natural::{enum_seq, pair, seq_code, unpair, CohenSeq, FinSeq, Natural, MATERIALIZE_BITS};

use crate::dyadic::Dyadic;

/// Longest restriction `x ↾ m` that [`b_step`] will materialize.
pub const MAX_RESTRICTION: usize = 1 << 16;
/// Largest tile code [`cover_witness`] will lay out in `τ`.
pub const MAX_TAU_LEN: usize = 1 << 22;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CodingError {
    #[error("ground reals {0} and {1} agree everywhere (not separated)")]
    NotSeparated(usize, usize),
    #[error("ℓ too small: ℓ = {ell} but the Cohen condition has length {len}")]
    EllTooSmall { ell: usize, len: usize },
    #[error("expected 2^ℓ = {expected} ground reals, got {got}")]
    WrongCount { expected: usize, got: usize },
    #[error("empty range: need n < N, got n = {n}, N = {big_n}")]
    EmptyRange { n: usize, big_n: usize },
    #[error("restriction length {0} exceeds the materialization bound")]
    RestrictionTooLong(String),
    #[error("infeasible: {0}")]
    Infeasible(&'static str),
    #[error("covering verification failed: union is {0}")]
    CoverFailed(String),
}

/// `C^n(i)`: the `i`-th dyadic tile of length `2^-n`, empty for `i ≥ 2^n`.
pub fn interval(n: u32, i: &BigUint) -> DyadicInterval {
    if i.bits() > n as u64 {
        return DyadicInterval::empty();
    }
    let lo = Dyadic::new(num_bigint::BigInt::from(i.clone()), n);
    let hi = Dyadic::new(num_bigint::BigInt::from(i + BigUint::one()), n);
    DyadicInterval::new(lo, hi)
}

/// `B^n_{x,y}`.
pub fn b_step(x: &FnRep, y: &dyn NatSeq, n: usize) -> Result<DyadicInterval, CodingError> {
    let m = y.at(n + 1);
    let len = m
        .to_usize()
        .filter(|&l| l <= MAX_RESTRICTION)
        .ok_or_else(|| CodingError::RestrictionTooLong(m.to_string()))?;
    let c = Natural::code_of(&x.restrict(len));
    match y.at(n).seq_entry(&c)? {
        Some(i) => Ok(interval(n as u32, &i)),
        None => Ok(DyadicInterval::empty()),
    }
}

/// `⋃_{n < m ≤ N} B^m_{x,y}`, a finite stage of the tail union whose
/// intersection over `n` is the null set `B_{x,y}`.
pub fn b_tail(x: &FnRep, y: &dyn NatSeq, n: usize, big_n: usize) -> Result<IntervalUnion, CodingError> {
    if n >= big_n {
        return Err(CodingError::EmptyRange { n, big_n });
    }
    let mut u = IntervalUnion::empty();
    for m in n + 1..=big_n {
        u.insert(&b_step(x, y, m)?);
    }
    Ok(u)
}

/// `z ∉ U`.
pub fn avoids(z: &Dyadic, u: &IntervalUnion) -> bool {
    !u.contains(z)
}

/// A Cohen condition `t ≤ s` under which the `2^ℓ` ground reals' level-`ℓ`
/// tiles cover `[0,1)`.
#[derive(Clone, Debug)]
pub struct CoverWitness {
    /// Least `n'` with the ground reals pairwise distinct on `[0, n')`.
    pub separation: usize,
    /// `τ` with `τ(code(x_i ↾ n')) = i`, zero elsewhere.
    pub tau: FinSeq,
    /// `s` padded with zeros to length `ℓ`, then `code(τ)`, then `n'`.
    pub t: CohenSeq,
    /// The verified covering union.
    pub union: IntervalUnion,
}

/// Build and verify the covering witness for `2^ℓ` pairwise distinct
/// ground reals extending the Cohen condition `s`.
pub fn cover_witness(xs: &[FnRep], ell: usize, s: &CohenSeq) -> Result<CoverWitness, CodingError> {
    let expected = 1usize
        .checked_shl(ell as u32)
        .ok_or(CodingError::Infeasible("2^ℓ overflows"))?;
    if xs.len() != expected {
        return Err(CodingError::WrongCount { expected, got: xs.len() });
    }
    if ell < s.len() {
        return Err(CodingError::EllTooSmall { ell, len: s.len() });
    }

    let mut separation = 0;
    for i in 0..xs.len() {
        for j in i + 1..xs.len() {
            let d = xs[i].first_difference(&xs[j]).ok_or(CodingError::NotSeparated(i, j))?;
            separation = separation.max(d + 1);
        }
    }

    let codes: Vec<usize> = xs
        .iter()
        .map(|x| {
            seq_code(&x.restrict(separation))
                .to_usize()
                .filter(|&c| c < MAX_TAU_LEN)
                .ok_or(CodingError::Infeasible("tile code too large to lay out"))
        })
        .collect::<Result<_, _>>()?;
    let tau_len = codes.iter().max().map_or(0, |&c| c + 1);
    let mut tau = vec![BigUint::default(); tau_len];
    for (i, &c) in codes.iter().enumerate() {
        tau[c] = BigUint::from(i);
    }
    let tau = FinSeq::new(tau);

    let mut t = s.clone();
    while t.len() < ell {
        t.push(Natural::zero());
    }
    t.push(Natural::code_of(&tau));
    t.push(Natural::from(separation as u64));

    let union = covering_union(xs, &t, ell)?;
    if !union.is_unit() {
        return Err(CodingError::CoverFailed(union.to_string()));
    }
    Ok(CoverWitness { separation, tau, t, union })
}

/// `⋃_i B^ℓ_{x_i, t}` with `t` read as a zero-padded function.
pub fn covering_union(xs: &[FnRep], t: &CohenSeq, ell: usize) -> Result<IntervalUnion, CodingError> {
    let mut u = IntervalUnion::empty();
    for x in xs {
        u.insert(&b_step(x, t, ell)?);
    }
    Ok(u)
}
