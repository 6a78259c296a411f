use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use super::natural::{parse_list, CohenSeq, FinSeq, Natural};
use crate::text::ParseError;

/// A function `ω → ω`, queried pointwise.
pub trait NatSeq {
    fn at(&self, i: usize) -> Natural;
}

/// Behaviour of an [`FnRep`] past its table.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Tail {
    Const(BigUint),
    /// `i ↦ i + k`.
    IdPlus(BigUint),
}

impl Tail {
    pub fn eval(&self, i: usize) -> BigUint {
        match self {
            Tail::Const(c) => c.clone(),
            Tail::IdPlus(k) => k + BigUint::from(i),
        }
    }
}

/// A total function `ω → ω` given by a finite table and a tail rule.
///
/// Normalized so that the last table entry never coincides with the tail
/// rule; structural equality is then equality of functions.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FnRep {
    table: Vec<BigUint>,
    tail: Tail,
}

impl FnRep {
    pub fn new(table: Vec<BigUint>, tail: Tail) -> Self {
        let mut f = FnRep { table, tail };
        while let Some(last) = f.table.last() {
            if *last == f.tail.eval(f.table.len() - 1) {
                f.table.pop();
            } else {
                break;
            }
        }
        f
    }

    pub fn constant(c: u64) -> Self {
        FnRep::new(Vec::new(), Tail::Const(BigUint::from(c)))
    }

    pub fn identity_plus(k: u64) -> Self {
        FnRep::new(Vec::new(), Tail::IdPlus(BigUint::from(k)))
    }

    pub fn with_table(table: &[u64], tail: Tail) -> Self {
        FnRep::new(table.iter().map(|&x| BigUint::from(x)).collect(), tail)
    }

    pub fn table(&self) -> &[BigUint] {
        &self.table
    }

    pub fn tail(&self) -> &Tail {
        &self.tail
    }

    pub fn eval(&self, i: usize) -> BigUint {
        self.table.get(i).cloned().unwrap_or_else(|| self.tail.eval(i))
    }

    /// `x ↾ m`.
    pub fn restrict(&self, m: usize) -> FinSeq {
        FinSeq((0..m).map(|i| self.eval(i)).collect())
    }

    /// Least position where the two functions differ, or `None` if they are
    /// equal. Two distinct tail rules agree on at most one position, so
    /// positions up to two past the longer table decide the question.
    pub fn first_difference(&self, other: &FnRep) -> Option<usize> {
        let horizon = self.table.len().max(other.table.len()) + 2;
        (0..horizon).find(|&i| self.eval(i) != other.eval(i))
    }

    /// `self(i) ≠ other(i)` for every `i ≥ start`.
    pub fn differs_from(&self, other: &FnRep, start: usize) -> bool {
        let horizon = self.table.len().max(other.table.len()).max(start);
        if (start..horizon).any(|i| self.eval(i) == other.eval(i)) {
            return false;
        }
        let h = BigUint::from(horizon);
        match (&self.tail, &other.tail) {
            (Tail::Const(c), Tail::Const(d)) => c != d,
            (Tail::IdPlus(a), Tail::IdPlus(b)) => a != b,
            // i + k = c has its only solution at i = c - k
            (Tail::Const(c), Tail::IdPlus(k)) | (Tail::IdPlus(k), Tail::Const(c)) => *c < &h + k,
        }
    }

    /// `f(i) ≠ g(i)` for all sufficiently large `i`. Distinct tail rules
    /// meet at most once, equal ones agree forever.
    pub fn eventually_different(&self, other: &FnRep) -> bool {
        self.tail != other.tail
    }

    /// `self(i) ≥ other(i)` for every `i`.
    pub fn dominates(&self, other: &FnRep) -> bool {
        let horizon = self.table.len().max(other.table.len());
        if (0..horizon).any(|i| self.eval(i) < other.eval(i)) {
            return false;
        }
        let h = BigUint::from(horizon);
        match (&self.tail, &other.tail) {
            (Tail::Const(c), Tail::Const(d)) => c >= d,
            (Tail::IdPlus(a), Tail::IdPlus(b)) => a >= b,
            (Tail::Const(_), Tail::IdPlus(_)) => false,
            (Tail::IdPlus(k), Tail::Const(c)) => &h + k >= *c,
        }
    }
}

impl NatSeq for FnRep {
    fn at(&self, i: usize) -> Natural {
        Natural::from(self.eval(i))
    }
}

/// A Cohen condition read as a function, padded with zeros.
impl NatSeq for CohenSeq {
    fn at(&self, i: usize) -> Natural {
        self.0.get(i).cloned().unwrap_or_else(Natural::zero)
    }
}

impl fmt::Display for Tail {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tail::Const(c) => write!(f, "const:{c}"),
            Tail::IdPlus(k) => write!(f, "id+{k}"),
        }
    }
}

impl FromStr for Tail {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        let num = |rest: &str, at: usize| {
            BigUint::from_str(rest).map_err(|_| ParseError::new(at, format!("expected a natural number, got {rest:?}")))
        };
        if let Some(rest) = s.strip_prefix("const:") {
            num(rest, 6).map(Tail::Const)
        } else if let Some(rest) = s.strip_prefix("id+") {
            num(rest, 3).map(Tail::IdPlus)
        } else {
            Err(ParseError::new(0, format!("expected a tail rule const:<n> or id+<n>, got {s:?}")))
        }
    }
}

/// `table;tail`, e.g. `3,0,5;const:0` or `1,2;id+4`; an empty table is
/// written as nothing (`;const:0`).
impl fmt::Display for FnRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.table.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ";{}", self.tail)
    }
}

impl fmt::Debug for FnRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for FnRep {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        let (table, tail) = s
            .split_once(';')
            .ok_or_else(|| ParseError::new(s.len(), "expected \"table;tail\""))?;
        let table = if table.trim().is_empty() {
            Vec::new()
        } else {
            parse_list(table, |p| {
                BigUint::from_str(p).map_err(|_| ParseError::new(0, format!("expected a natural number, got {p:?}")))
            })?
        };
        let at = table_len_offset(s);
        let tail = tail.trim().parse::<Tail>().map_err(|e| e.offset(at))?;
        Ok(FnRep::new(table, tail))
    }
}

fn table_len_offset(s: &str) -> usize {
    s.find(';').map_or(0, |i| i + 1)
}

/// Parse a `;`-joined list of [`FnRep`]s, e.g. `;const:0;1,2;id+4`.
pub fn parse_fn_list(s: &str) -> Result<Vec<FnRep>, ParseError> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    let pieces: Vec<&str> = s.split(';').collect();
    if pieces.len() % 2 != 0 {
        return Err(ParseError::new(s.len(), "expected table;tail pairs"));
    }
    let mut out = Vec::new();
    let mut at = 0;
    for chunk in pieces.chunks(2) {
        let text = format!("{};{}", chunk[0], chunk[1]);
        out.push(text.parse::<FnRep>().map_err(|e| e.offset(at))?);
        at += text.len() + 1;
    }
    Ok(out)
}

pub fn format_fn_list<'a>(fs: impl IntoIterator<Item = &'a FnRep>) -> String {
    fs.into_iter().map(ToString::to_string).collect::<Vec<_>>().join(";")
}
