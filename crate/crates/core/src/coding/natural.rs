//! The enumeration `n ↦ τ_n` of finite sequences of naturals and its
//! inverse `code`.
//!
//! Scheme: `⟨⟩ ↦ 0`, and `⟨a_0,…,a_k⟩ ↦ 1 + π(k, g)` where `π` is the Cantor
//! pairing `π(a,b) = (a+b)(a+b+1)/2 + b` and `g = π(a_0, π(a_1, …, π(a_{k-1}, a_k)))`.
//!
//! Codes grow doubly exponentially in the sequence length (each fold step
//! roughly squares), so a [`Natural`] holds large codes symbolically as the
//! sequence they encode.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use super::CodingError;
use crate::text::{split_with_offsets, ParseError};

/// Codes above `2^MATERIALIZE_BITS` stay symbolic.
pub const MATERIALIZE_BITS: u64 = 256;

pub fn pair(a: &BigUint, b: &BigUint) -> BigUint {
    let s = a + b;
    ((&s * (&s + 1u32)) >> 1usize) + b
}

pub fn unpair(z: &BigUint) -> (BigUint, BigUint) {
    let w = (((z << 3usize) + 1u32).sqrt() - 1u32) >> 1usize;
    let t = (&w * (&w + 1u32)) >> 1usize;
    let b = z - t;
    let a = w - &b;
    (a, b)
}

/// A finite sequence of naturals, an element of `ω^{<ω}`.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FinSeq(pub Vec<BigUint>);

impl FinSeq {
    pub fn new(entries: Vec<BigUint>) -> Self {
        FinSeq(entries)
    }

    pub fn from_u64s(entries: &[u64]) -> Self {
        FinSeq(entries.iter().map(|&x| BigUint::from(x)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[BigUint] {
        &self.0
    }

    /// `self ⊇ other`: `other` is an initial segment of `self`.
    pub fn extends(&self, other: &FinSeq) -> bool {
        self.0.starts_with(&other.0)
    }
}

impl fmt::Display for FinSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, self.0.iter())
    }
}

impl fmt::Debug for FinSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨{self}⟩")
    }
}

impl FromStr for FinSeq {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        parse_list(s, |piece| {
            BigUint::from_str(piece).map_err(|_| ParseError::new(0, format!("expected a natural number, got {piece:?}")))
        })
        .map(FinSeq)
    }
}

fn write_list<T: fmt::Display>(f: &mut fmt::Formatter<'_>, items: impl Iterator<Item = T>) -> fmt::Result {
    let mut any = false;
    for (i, x) in items.enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
        any = true;
    }
    if !any {
        f.write_str("()")?;
    }
    Ok(())
}

pub(crate) fn parse_list<T>(
    s: &str,
    mut item: impl FnMut(&str) -> Result<T, ParseError>,
) -> Result<Vec<T>, ParseError> {
    let trimmed = s.trim();
    if trimmed == "()" {
        return Ok(Vec::new());
    }
    if trimmed.is_empty() {
        return Err(ParseError::new(0, "empty sequence (write \"()\")"));
    }
    split_with_offsets(s, ',')
        .map(|(at, piece)| {
            let lead = piece.len() - piece.trim_start().len();
            item(piece.trim()).map_err(|e| e.offset(at + lead))
        })
        .collect()
}

/// `code(s)`, fully materialized. Sequences longer than a couple of dozen
/// entries produce numbers too large to hold; use [`Natural::code_of`].
pub fn seq_code(s: &FinSeq) -> BigUint {
    code_bounded(s, u64::MAX).expect("unbounded code computation")
}

/// `code(s)` if it stays below `2^limit_bits`. Every fold intermediate is a
/// lower bound of the final value, so the computation stops as soon as the
/// bound is exceeded.
fn code_bounded(s: &FinSeq, limit_bits: u64) -> Option<BigUint> {
    let Some((last, init)) = s.0.split_last() else {
        return Some(BigUint::zero());
    };
    let mut g = last.clone();
    for a in init.iter().rev() {
        g = pair(a, &g);
        if g.bits() > limit_bits {
            return None;
        }
    }
    let code = pair(&BigUint::from(init.len()), &g) + 1u32;
    (code.bits() <= limit_bits).then_some(code)
}

/// `τ_n`. The decoded length is about `sqrt(2n)` in the worst case.
pub fn enum_seq(n: &BigUint) -> FinSeq {
    if n.is_zero() {
        return FinSeq::default();
    }
    let (k, mut g) = unpair(&(n - 1u32));
    let k = k.to_usize().expect("sequence length exceeds memory");
    let mut entries = Vec::with_capacity(k + 1);
    for _ in 0..k {
        let (a, rest) = unpair(&g);
        entries.push(a);
        g = rest;
    }
    entries.push(g);
    FinSeq(entries)
}

/// A natural number, held either as an integer or, when it is a code too
/// large to materialize, as the sequence it codes.
#[derive(Clone)]
pub struct Natural(Repr);

#[derive(Clone)]
enum Repr {
    Explicit(BigUint),
    /// Invariant: `code(seq) > 2^MATERIALIZE_BITS`.
    Code(FinSeq),
}

impl Natural {
    pub fn zero() -> Self {
        Natural(Repr::Explicit(BigUint::zero()))
    }

    /// `code(s)`, materialized when it has at most [`MATERIALIZE_BITS`] bits.
    pub fn code_of(s: &FinSeq) -> Self {
        match code_bounded(s, MATERIALIZE_BITS) {
            Some(n) => Natural(Repr::Explicit(n)),
            None => Natural(Repr::Code(s.clone())),
        }
    }

    pub fn as_biguint(&self) -> Option<&BigUint> {
        match &self.0 {
            Repr::Explicit(n) => Some(n),
            Repr::Code(_) => None,
        }
    }

    pub fn to_usize(&self) -> Option<usize> {
        self.as_biguint().and_then(ToPrimitive::to_usize)
    }

    pub fn is_symbolic(&self) -> bool {
        matches!(self.0, Repr::Code(_))
    }

    /// Exact comparison against an explicit integer.
    pub fn cmp_biguint(&self, m: &BigUint) -> Ordering {
        match &self.0 {
            Repr::Explicit(n) => n.cmp(m),
            Repr::Code(s) => {
                if m.bits() <= MATERIALIZE_BITS {
                    return Ordering::Greater;
                }
                match code_bounded(s, m.bits() + 1) {
                    Some(v) => v.cmp(m),
                    None => Ordering::Greater,
                }
            }
        }
    }

    /// `|τ_self|`.
    pub fn seq_len(&self) -> BigUint {
        match &self.0 {
            Repr::Explicit(n) if n.is_zero() => BigUint::zero(),
            Repr::Explicit(n) => unpair(&(n - 1u32)).0 + 1u32,
            Repr::Code(s) => BigUint::from(s.len()),
        }
    }

    /// `τ_self(c)`, or `None` when `c ∉ dom(τ_self)`.
    pub fn seq_entry(&self, c: &Natural) -> Result<Option<BigUint>, CodingError> {
        let len = self.seq_len();
        if c.cmp_biguint(&len) != Ordering::Less {
            return Ok(None);
        }
        let c = c.to_usize().ok_or(CodingError::Infeasible("entry index beyond addressable range"))?;
        match &self.0 {
            Repr::Code(s) => Ok(s.0.get(c).cloned()),
            Repr::Explicit(n) => {
                let (k, mut g) = unpair(&(n - 1u32));
                for _ in 0..c {
                    g = unpair(&g).1;
                }
                if BigUint::from(c) == k {
                    Ok(Some(g))
                } else {
                    Ok(Some(unpair(&g).0))
                }
            }
        }
    }
}

impl From<BigUint> for Natural {
    fn from(n: BigUint) -> Self {
        Natural(Repr::Explicit(n))
    }
}

impl From<u64> for Natural {
    fn from(n: u64) -> Self {
        Natural(Repr::Explicit(BigUint::from(n)))
    }
}

impl PartialEq for Natural {
    fn eq(&self, other: &Self) -> bool {
        match (&self.0, &other.0) {
            (Repr::Explicit(a), Repr::Explicit(b)) => a == b,
            (Repr::Code(a), Repr::Code(b)) => a == b,
            (Repr::Code(_), Repr::Explicit(m)) => self.cmp_biguint(m) == Ordering::Equal,
            (Repr::Explicit(m), Repr::Code(_)) => other.cmp_biguint(m) == Ordering::Equal,
        }
    }
}

impl Eq for Natural {}

/// Decimal, or `code(a b c)` for a symbolic code.
impl fmt::Display for Natural {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Explicit(n) => write!(f, "{n}"),
            Repr::Code(s) => {
                f.write_str("code(")?;
                for (i, x) in s.0.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" ")?;
                    }
                    write!(f, "{x}")?;
                }
                f.write_str(")")
            }
        }
    }
}

impl fmt::Debug for Natural {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Natural {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        if let Some(inner) = s.strip_prefix("code(").and_then(|r| r.strip_suffix(')')) {
            let mut entries = Vec::new();
            let mut at = 5;
            for piece in inner.split(' ') {
                let n = BigUint::from_str(piece)
                    .map_err(|_| ParseError::new(at, format!("expected a natural number, got {piece:?}")))?;
                entries.push(n);
                at += piece.len() + 1;
            }
            return Ok(Natural::code_of(&FinSeq(entries)));
        }
        BigUint::from_str(s)
            .map(Natural::from)
            .map_err(|_| ParseError::new(0, format!("expected a natural number, got {s:?}")))
    }
}

/// A Cohen condition: a finite sequence of naturals ordered by end-extension.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct CohenSeq(pub Vec<Natural>);

impl CohenSeq {
    pub fn from_u64s(entries: &[u64]) -> Self {
        CohenSeq(entries.iter().map(|&x| Natural::from(x)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[Natural] {
        &self.0
    }

    /// `self ⊇ other`.
    pub fn extends(&self, other: &CohenSeq) -> bool {
        self.0.len() >= other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a == b)
    }

    pub fn push(&mut self, n: Natural) {
        self.0.push(n);
    }
}

impl From<&FinSeq> for CohenSeq {
    fn from(s: &FinSeq) -> Self {
        CohenSeq(s.0.iter().cloned().map(Natural::from).collect())
    }
}

impl fmt::Display for CohenSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, self.0.iter())
    }
}

impl fmt::Debug for CohenSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨{self}⟩")
    }
}

impl FromStr for CohenSeq {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        parse_list(s, Natural::from_str).map(CohenSeq)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn pairing_inverts() {
        for z in 0..2000u64 {
            let (a, b) = unpair(&n(z));
            assert_eq!(pair(&a, &b), n(z));
        }
        assert_eq!(pair(&n(0), &n(3)), n(9));
    }

    #[test]
    fn fixed_codes() {
        assert_eq!(enum_seq(&n(0)), FinSeq::default());
        assert_eq!(seq_code(&FinSeq::default()), n(0));
        assert_eq!(seq_code(&FinSeq::from_u64s(&[3])), n(10));
        assert_eq!(seq_code(&FinSeq::from_u64s(&[0, 0, 0, 1])), n(297));
        let s = FinSeq::from_u64s(&[3, 0, 5]);
        assert_eq!(enum_seq(&seq_code(&s)), s);
    }

    #[test]
    fn entries_without_full_decode() {
        let s = FinSeq::from_u64s(&[4, 1, 7, 0]);
        let code = Natural::from(seq_code(&s));
        assert_eq!(code.seq_len(), n(4));
        for (i, x) in s.0.iter().enumerate() {
            assert_eq!(code.seq_entry(&Natural::from(i as u64)).unwrap(), Some(x.clone()));
        }
        assert_eq!(code.seq_entry(&Natural::from(4)).unwrap(), None);
        assert_eq!(Natural::zero().seq_entry(&Natural::zero()).unwrap(), None);
    }

    #[test]
    fn symbolic_codes() {
        let long = FinSeq(vec![n(1); 40]);
        let sym = Natural::code_of(&long);
        assert!(sym.is_symbolic());
        assert_eq!(sym.seq_len(), n(40));
        assert_eq!(sym.cmp_biguint(&n(1_000_000)), Ordering::Greater);
        let short = FinSeq::from_u64s(&[1, 2]);
        assert_eq!(Natural::code_of(&short), Natural::from(seq_code(&short)));
        let reparsed: Natural = sym.to_string().parse().unwrap();
        assert_eq!(reparsed, sym);
        // a large explicit integer equal to a symbolic code
        let mid = FinSeq(vec![n(9); 7]);
        let value = seq_code(&mid);
        assert!(value.bits() > MATERIALIZE_BITS);
        assert_eq!(Natural::code_of(&mid), Natural::from(value.clone()));
        assert_ne!(Natural::code_of(&mid), Natural::from(value + 1u32));
    }

    #[test]
    fn text_formats() {
        assert_eq!("3,0,5".parse::<FinSeq>().unwrap(), FinSeq::from_u64s(&[3, 0, 5]));
        assert_eq!("()".parse::<FinSeq>().unwrap().to_string(), "()");
        assert_eq!("3, x".parse::<FinSeq>().unwrap_err().pos, 3);
        assert_eq!(CohenSeq::from_u64s(&[0, 2, 0]).to_string(), "0,2,0");
    }
}
