//! The A'' window and the labelling map into Cohen conditions.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use super::{AmoebaError, StemCondition};
use crate::cantor::trie::Node;
use crate::cantor::{BitString, ClopenSet, LevelFunction};
use crate::coding::{CohenSeq, FnRep, NatSeq, Natural};
use crate::dyadic::Dyadic;
use crate::text::ParseError;

/// A witness for membership in A''.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AppWindow {
    pub n: u32,
    /// Mass on levels `< stem_depth`.
    pub stem_mass: Dyadic,
    /// Mass on levels `< stem_depth - 1`.
    pub penult_mass: Dyadic,
    /// Mass on levels `≥ stem_depth`.
    pub tail_mass: Dyadic,
}

impl AppWindow {
    /// Re-check the three window inequalities.
    pub fn holds(&self) -> bool {
        let edge = Dyadic::half_minus_pow2(self.n);
        self.stem_mass > edge && self.penult_mass <= edge && self.tail_mass < Dyadic::pow2_neg(self.n + 7)
    }
}

/// The smallest `n` with `stem > 1/2 - 2^-n ≥ penult` and
/// `tail < 2^-(n+7)`, if any.
///
/// The stem inequalities say `1/2 - stem < 2^-n ≤ 1/2 - penult`. Only the
/// least `n` meeting the right-hand bound can work: larger `n` shrink
/// `2^-n` further and tighten the tail bound.
pub fn app_witness(p: &StemCondition) -> Option<AppWindow> {
    let d = p.stem_depth();
    let stem_mass = p.stem_mass();
    let penult_mass = p.mass_below_level(d.saturating_sub(1));
    let tail_mass = p.tail_mass();
    let room = Dyadic::half() - penult_mass.clone();
    let mut n = 1u32;
    while Dyadic::pow2_neg(n) > room {
        n += 1;
    }
    let window = AppWindow { n, stem_mass, penult_mass, tail_mass };
    window.holds().then_some(window)
}

/// A stronger condition inside A'': all added mass sits at one fresh level
/// `L` and the stem is pushed past it, so the tail is empty.
pub fn densify_app(p: &StemCondition) -> StemCondition {
    let mu = p.phi().measure();
    let mut n = 0u32;
    while mu > Dyadic::half_minus_pow2(n) {
        n += 1;
    }
    let target = Dyadic::half_minus_pow2(n + 2);
    let level = (p.phi().support_depth() + 1).max(p.stem_depth()).max(n as usize + 2);
    let count = (target - mu).floor_units(level as u32).to_u64().expect("desk-scale level");

    let mut added = Vec::new();
    even_leaves(&p.phi().trie(), BitString::empty(), level, count, &mut added);
    let mut all: Vec<BitString> = p.phi().members().iter().cloned().collect();
    all.extend(added);
    StemCondition::new(level + 1, ClopenSet::canonicalize(&all)).expect("measure stays below 1/2")
}

/// Push up to `want` uncovered strings of length `level` ending in `0`, in
/// lexicographic order. Their siblings stay uncovered, so nothing merges.
fn even_leaves(node: &Node, path: BitString, level: usize, want: u64, out: &mut Vec<BitString>) -> u64 {
    if want == 0 || path.len() >= level {
        return 0;
    }
    match node {
        Node::Full => 0,
        Node::Split(a, b) => {
            let got = even_leaves(a, path.child(false), level, want, out);
            got + even_leaves(b, path.child(true), level, want - got, out)
        }
        Node::Empty => {
            let free = level - path.len() - 1;
            let available = if free >= 64 { u64::MAX } else { 1u64 << free };
            let take = available.min(want);
            for k in 0..take {
                out.push(path.concat(&BitString::from_index(k << 1, level - path.len())));
            }
            take
        }
    }
}

/// The unique `n` with stem mass in `(1/2 - 2^-n, 1/2 - 2^-(n+1)]`.
pub fn h_window(p: &StemCondition) -> Result<u32, AmoebaError> {
    if app_witness(p).is_none() {
        return Err(AmoebaError::NotInApp);
    }
    Ok(window_of(&p.stem_mass()))
}

pub(crate) fn window_of(mass: &Dyadic) -> u32 {
    let mut n = 0;
    while *mass > Dyadic::half_minus_pow2(n + 1) {
        n += 1;
    }
    n
}

/// `⟨f(i_0), …, f(i_n)⟩` with `n` = [`h_window`] and `i_j` the least `i`
/// for which the stem mass on levels `< i` exceeds `1/2 - 2^-j`.
pub fn h_label(p: &StemCondition, f: &dyn NatSeq) -> Result<CohenSeq, AmoebaError> {
    h_window(p)?;
    Ok(stem_label(&p.stem(), f))
}

/// The labelling formula applied to any stem of mass `< 1/2`, with `n`
/// the window of the stem mass. Outside A'' this is only a formula.
pub fn stem_label(levels: &LevelFunction, f: &dyn NatSeq) -> CohenSeq {
    let n = window_of(&levels.mass_below_level(levels.support()));
    let mut label = CohenSeq::default();
    let mut cum = Dyadic::zero();
    let mut i = 0usize;
    for j in 0..=n {
        let threshold = Dyadic::half_minus_pow2(j);
        while cum <= threshold {
            cum += &(&Dyadic::pow2_neg(i as u32) * levels.level(i).len() as u64);
            i += 1;
        }
        label.push(f.at(i));
    }
    label
}

/// The rule `f` read off by [`h_label`]. Every value must occur
/// infinitely often for the labelling to reach all Cohen conditions.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub enum LabelFn {
    /// `f(i) = ν_2(i + 1)`, the exponent of 2 in `i + 1`.
    #[default]
    TwoAdic,
    /// An explicit function.
    Table(FnRep),
}

impl NatSeq for LabelFn {
    fn at(&self, i: usize) -> Natural {
        match self {
            LabelFn::TwoAdic => Natural::from((i + 1).trailing_zeros() as u64),
            LabelFn::Table(f) => f.at(i),
        }
    }
}

impl LabelFn {
    pub fn value(&self, i: usize) -> BigUint {
        match self {
            LabelFn::TwoAdic => BigUint::from((i + 1).trailing_zeros()),
            LabelFn::Table(f) => f.eval(i),
        }
    }
}

impl fmt::Display for LabelFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LabelFn::TwoAdic => f.write_str("v2"),
            LabelFn::Table(rep) => write!(f, "{rep}"),
        }
    }
}

/// `v2` or an FnRep.
impl FromStr for LabelFn {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        if s.trim() == "v2" {
            Ok(LabelFn::TwoAdic)
        } else {
            s.parse().map(LabelFn::Table)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::amoeba::{ap_le, phi_embed};

    fn sc(s: &str) -> StemCondition {
        s.parse().unwrap()
    }

    fn dy(s: &str) -> Dyadic {
        s.parse().unwrap()
    }

    #[test]
    fn witness_examples() {
        let w = app_witness(&sc("4|00,010")).unwrap();
        assert_eq!(w.n, 2);
        assert_eq!((w.stem_mass, w.penult_mass, w.tail_mass), (dy("3/8"), dy("1/4"), dy("0")));
        assert_eq!(app_witness(&sc("3|00")).unwrap().n, 1);
        assert!(app_witness(&sc("2|-")).is_none());
        // tail 1/512 is not below 2^-9
        assert!(app_witness(&sc("4|00,010,011000000")).is_none());
        assert_eq!(app_witness(&sc("4|00,010,0110000000")).unwrap().n, 2);
    }

    #[test]
    fn densify_app_examples() {
        let p = sc("2|-");
        let q = densify_app(&p);
        assert_eq!(q.to_string(), "4|000,010,100");
        assert_eq!(app_witness(&q).unwrap().n, 1);
        assert!(ap_le(&q, &p));

        let p = phi_embed(&"00".parse().unwrap()).unwrap();
        let q = densify_app(&p);
        assert_eq!(q.phi().measure(), dy("7/16"));
        assert_eq!(q.tail_mass(), dy("0"));
        assert_eq!(app_witness(&q).unwrap().n, 2);
        assert!(ap_le(&q, &p));
    }

    #[test]
    fn windows() {
        assert_eq!(window_of(&dy("3/8")), 2);
        assert_eq!(window_of(&dy("1/4")), 1);
        assert_eq!(window_of(&dy("0")), 0);
        assert_eq!(window_of(&dy("7/16")), 3);
        assert_eq!(h_window(&sc("2|-")), Err(AmoebaError::NotInApp));
    }

    #[test]
    fn labels() {
        let f = LabelFn::TwoAdic;
        assert_eq!(h_label(&sc("4|00,010"), &f).unwrap(), CohenSeq::from_u64s(&[0, 2, 0]));
        assert_eq!(h_label(&sc("4|00,010,0110000000"), &f).unwrap(), CohenSeq::from_u64s(&[0, 2, 0]));
        // stem mass 0 lies in A'' only through a degenerate window; none here
        assert!(h_label(&sc("1|-"), &f).is_err());
        assert_eq!(stem_label(&LevelFunction::default(), &f), CohenSeq::from_u64s(&[0]));
        let g: LabelFn = "5,6,7;const:1".parse().unwrap();
        assert_eq!(h_label(&sc("4|00,010"), &g).unwrap(), CohenSeq::from_u64s(&[5, 1, 1]));
    }

    #[test]
    fn two_adic_values() {
        let f = LabelFn::TwoAdic;
        let vals: Vec<u64> = (0..8).map(|i| f.value(i).try_into().unwrap()).collect();
        assert_eq!(vals, [0, 1, 0, 2, 0, 1, 0, 3]);
    }
}
