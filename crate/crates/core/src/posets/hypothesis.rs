//! Finite-scale check of the covering hypothesis: among the given
//! conditions find `ℓ` sharing a stem whose meet is a condition, then test
//! that every short extension of the common Cohen stem stays compatible.

use std::fmt;

use num_bigint::BigUint;

use super::{ev_stem_meet, loc_is_condition, loc_stem_code, loc_stem_meet, EvDiffCond, LocCond, LocMeet, PosetError};
use crate::amoeba::{
    app_witness, h_label, meet_same_stem, projection_search, LabelFn, MeetOutcome, ProjectionOutcome, StemCondition,
};
use crate::coding::{CohenSeq, Natural};
use crate::dyadic::Dyadic;

/// Upper bound on the candidate families tried per stem group.
const MAX_FAMILIES: usize = 100_000;
/// Level budget for the A'' extension search.
const PROJECTION_BUDGET: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Condition {
    E(EvDiffCond),
    L(LocCond),
    App(StemCondition),
}

impl Condition {
    fn kind(&self) -> u8 {
        match self {
            Condition::E(_) => 0,
            Condition::L(_) => 1,
            Condition::App(_) => 2,
        }
    }

    /// The part shared by a family before meeting, as text.
    fn stem_key(&self) -> String {
        match self {
            Condition::E(p) => p.stem.to_string(),
            Condition::L(p) => LocCond { slots: p.slots.clone(), side: Default::default() }.to_string(),
            Condition::App(p) => format!("{}|{:?}", p.stem_depth(), p.stem()),
        }
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Condition::E(p) => write!(f, "{p}"),
            Condition::L(p) => write!(f, "{p}"),
            Condition::App(p) => write!(f, "{p}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    /// The common stem in Cohen forcing.
    pub stem: CohenSeq,
    /// Indices into the input list.
    pub family: Vec<usize>,
    pub meet: Condition,
    /// Number of stem extensions verified.
    pub extensions_checked: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Failure {
    /// No stem is shared by `ℓ` conditions.
    TooFew { needed: usize, largest: usize },
    /// Every candidate L family has too many side functions.
    SideCeiling { excess: usize },
    /// Every candidate A'' family has a union of measure `≥ 1/2`.
    Measure { excess: Dyadic },
    /// Tails of every candidate A'' family merge into the stem.
    StemDisturbed,
    /// The A'' meet has no window.
    Window,
    /// An extension of the stem could not be matched below the meet.
    Extension { target: CohenSeq, reason: String },
    /// Too many families to try.
    SearchBudget,
}

impl Failure {
    /// Short name of the violated clause.
    pub fn clause(&self) -> &'static str {
        match self {
            Failure::TooFew { .. } => "too few",
            Failure::SideCeiling { .. } => "side ceiling",
            Failure::Measure { .. } => "measure",
            Failure::StemDisturbed => "stem disturbed",
            Failure::Window => "window",
            Failure::Extension { .. } => "extension",
            Failure::SearchBudget => "search budget",
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::TooFew { needed, largest } => write!(f, "too few: need {needed}, largest stem group has {largest}"),
            Failure::SideCeiling { excess } => write!(f, "side ceiling: union of sides exceeds the bound by {excess}"),
            Failure::Measure { excess } => write!(f, "measure: union exceeds 1/2 by {excess}"),
            Failure::StemDisturbed => f.write_str("stem disturbed: tails merge below the stem depth"),
            Failure::Window => f.write_str("window: the meet is not in A''"),
            Failure::Extension { target, reason } => write!(f, "extension: {target}: {reason}"),
            Failure::SearchBudget => f.write_str("search budget: too many candidate families"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HypothesisOutcome {
    Witness(Witness),
    Failure(Failure),
}

/// Search for `ℓ` conditions of `ts` sharing a stem with a feasible meet.
/// Stem groups are taken in order of first appearance and families in
/// lexicographic order of indices. For the winning family every extension
/// of the Cohen stem by at most `depth` entries from `{0, …, depth + ℓ}` is
/// checked: for E and L the extended meet must be a condition, for A'' a
/// condition below the meet with that label must be found.
pub fn hypothesis_check(ts: &[Condition], ell: usize, depth: usize) -> Result<HypothesisOutcome, PosetError> {
    if ell == 0 {
        return Err(PosetError::EmptyFamily);
    }
    if let Some(first) = ts.first() {
        if let Some(i) = ts.iter().position(|t| t.kind() != first.kind()) {
            return Err(PosetError::MixedPosets(i));
        }
    }
    for (index, t) in ts.iter().enumerate() {
        let reason = match t {
            Condition::L(p) if !loc_is_condition(p) => Some("slot sizes or side count".to_string()),
            Condition::App(p) if app_witness(p).is_none() => Some("not in A''".to_string()),
            _ => None,
        };
        if let Some(reason) = reason {
            return Err(PosetError::InvalidCondition { index, reason });
        }
    }

    let mut groups: Vec<(String, Vec<usize>)> = Vec::new();
    for (i, t) in ts.iter().enumerate() {
        let key = t.stem_key();
        match groups.iter_mut().find(|(k, _)| *k == key) {
            Some((_, members)) => members.push(i),
            None => groups.push((key, vec![i])),
        }
    }
    let largest = groups.iter().map(|(_, m)| m.len()).max().unwrap_or(0);
    if largest < ell {
        return Ok(HypothesisOutcome::Failure(Failure::TooFew { needed: ell, largest }));
    }

    let mut first_failure = None;
    for (_, members) in groups.iter().filter(|(_, m)| m.len() >= ell) {
        let mut tried = 0;
        let mut combo: Vec<usize> = (0..ell).collect();
        loop {
            tried += 1;
            if tried > MAX_FAMILIES {
                first_failure.get_or_insert(Failure::SearchBudget);
                break;
            }
            let family: Vec<usize> = combo.iter().map(|&c| members[c]).collect();
            match try_family(ts, &family, ell, depth) {
                Ok(w) => return Ok(HypothesisOutcome::Witness(w)),
                // an extension failure is final for this family only
                Err(f) => {
                    first_failure.get_or_insert(f);
                }
            }
            if !next_combination(&mut combo, members.len()) {
                break;
            }
        }
    }
    Ok(HypothesisOutcome::Failure(first_failure.expect("at least one family was tried")))
}

fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    for i in (0..k).rev() {
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

fn try_family(ts: &[Condition], family: &[usize], ell: usize, depth: usize) -> Result<Witness, Failure> {
    let alphabet: Vec<u64> = (0..=(depth + ell) as u64).collect();
    match &ts[family[0]] {
        Condition::E(_) => {
            let ps: Vec<EvDiffCond> = family.iter().map(|&i| expect_e(&ts[i])).collect();
            let meet = ev_stem_meet(&ps).expect("grouped by stem");
            let mut checked = 0;
            for ext in extensions(&alphabet, depth) {
                let mut stem = meet.stem.clone();
                stem.0.extend(ext.iter().map(|&v| BigUint::from(v)));
                // every finite stem with a finite side set is a condition
                let _ = EvDiffCond { stem, side: meet.side.clone() };
                checked += 1;
            }
            Ok(Witness {
                stem: CohenSeq::from(&meet.stem),
                family: family.to_vec(),
                meet: Condition::E(meet),
                extensions_checked: checked,
            })
        }
        Condition::L(_) => {
            let ps: Vec<LocCond> = family.iter().map(|&i| expect_l(&ts[i])).collect();
            let meet = match loc_stem_meet(&ps).expect("grouped by slots") {
                LocMeet::Feasible(m) => m,
                LocMeet::Infeasible { excess } => return Err(Failure::SideCeiling { excess }),
            };
            let mut checked = 0;
            let mut frontier = vec![meet.clone()];
            for _ in 0..depth {
                let mut next = Vec::new();
                for cond in &frontier {
                    let size = cond.slots.len() + 1;
                    for slot in subsets(&alphabet, size) {
                        let mut longer = cond.clone();
                        longer.slots.push(slot.into_iter().map(BigUint::from).collect());
                        if !loc_is_condition(&longer) {
                            return Err(Failure::Extension {
                                target: loc_stem_code(&longer),
                                reason: "extended slots do not form a condition".into(),
                            });
                        }
                        checked += 1;
                        next.push(longer);
                    }
                }
                frontier = next;
            }
            Ok(Witness {
                stem: loc_stem_code(&meet),
                family: family.to_vec(),
                meet: Condition::L(meet),
                extensions_checked: checked,
            })
        }
        Condition::App(_) => {
            let ps: Vec<StemCondition> = family.iter().map(|&i| expect_app(&ts[i])).collect();
            let meet = match meet_same_stem(&ps).expect("grouped by stem") {
                MeetOutcome::Feasible(m) => m,
                MeetOutcome::Overshoot { excess } => return Err(Failure::Measure { excess }),
                MeetOutcome::StemDisturbed { .. } => return Err(Failure::StemDisturbed),
            };
            if app_witness(&meet).is_none() {
                return Err(Failure::Window);
            }
            let f = LabelFn::TwoAdic;
            let s = h_label(&meet, &f).map_err(|_| Failure::Window)?;
            let mut checked = 0;
            for ext in extensions(&alphabet, depth) {
                let mut t = s.clone();
                for &v in &ext {
                    t.push(Natural::from(v));
                }
                match projection_search(&meet, &t, &f, PROJECTION_BUDGET) {
                    Ok(ProjectionOutcome::Found(_)) => checked += 1,
                    Ok(ProjectionOutcome::NotFound { reason }) => return Err(Failure::Extension { target: t, reason }),
                    Err(e) => return Err(Failure::Extension { target: t, reason: e.to_string() }),
                }
            }
            Ok(Witness { stem: s, family: family.to_vec(), meet: Condition::App(meet), extensions_checked: checked })
        }
    }
}

fn expect_e(c: &Condition) -> EvDiffCond {
    match c {
        Condition::E(p) => p.clone(),
        _ => unreachable!("checked homogeneous"),
    }
}

fn expect_l(c: &Condition) -> LocCond {
    match c {
        Condition::L(p) => p.clone(),
        _ => unreachable!("checked homogeneous"),
    }
}

fn expect_app(c: &Condition) -> StemCondition {
    match c {
        Condition::App(p) => p.clone(),
        _ => unreachable!("checked homogeneous"),
    }
}

/// All sequences over `alphabet` of length `1..=depth`, shortest first.
fn extensions(alphabet: &[u64], depth: usize) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut layer: Vec<Vec<u64>> = vec![Vec::new()];
    for _ in 0..depth {
        let next: Vec<Vec<u64>> = layer
            .iter()
            .flat_map(|prefix| {
                alphabet.iter().map(move |&a| {
                    let mut e = prefix.clone();
                    e.push(a);
                    e
                })
            })
            .collect();
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// The `size`-element subsets of `alphabet` in lexicographic order.
fn subsets(alphabet: &[u64], size: usize) -> Vec<Vec<u64>> {
    if size > alphabet.len() {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut c: Vec<usize> = (0..size).collect();
    loop {
        out.push(c.iter().map(|&i| alphabet[i]).collect());
        if size == 0 || !next_combination(&mut c, alphabet.len()) {
            return out;
        }
    }
}
