//! The dense embedding of clopen conditions into stem conditions.

use super::{is_amoeba, AmoebaError, StemCondition};
use crate::cantor::trie::Node;
use crate::cantor::{BitString, ClopenSet};
use crate::dyadic::Dyadic;

/// Length of the longest initial segment of levels that no extension of
/// `s` can change.
///
/// The canonical level content changes exactly when some uncovered cylinder
/// `[τ]` becomes fully covered, which costs its residual `m_τ`. An extension
/// can spend strictly less than `b = 1/2 - μ(s)`, so the first changeable
/// level is the least `|τ|` with `0 < m_τ < b`. Completing `τ` may merge
/// siblings upward, but then the parent is itself such a `τ`.
pub fn freeze_prefix(s: &ClopenSet) -> Result<usize, AmoebaError> {
    if !is_amoeba(s) {
        return Err(AmoebaError::NotAmoeba(s.measure()));
    }
    let budget = Dyadic::half() - s.measure();
    // least k with 2^-k < budget
    let mut fresh = 0u32;
    while Dyadic::pow2_neg(fresh) >= budget {
        fresh += 1;
    }
    Ok(min_changeable(&s.trie(), 0, &budget, fresh as usize).expect("an uncovered cylinder always exists"))
}

fn min_changeable(node: &Node, depth: usize, budget: &Dyadic, fresh: usize) -> Option<usize> {
    match node {
        Node::Full => None,
        Node::Empty => Some(depth.max(fresh)),
        Node::Split(a, b) => {
            let residual = Dyadic::pow2_neg(depth as u32) - node.relative_measure().shr(depth as u32);
            if residual < *budget {
                return Some(depth);
            }
            [a, b].into_iter().filter_map(|c| min_changeable(c, depth + 1, budget, fresh)).min()
        }
    }
}

/// `Φ(s) = (u, s)` with `dom(u)` = [`freeze_prefix`]`(s)`.
pub fn phi_embed(s: &ClopenSet) -> Result<StemCondition, AmoebaError> {
    let depth = freeze_prefix(s)?;
    StemCondition::new(depth, s.clone())
}

/// The strings `σ ∈ 2^i`, `i = stem_depth - 1`, not extending a stem
/// member, with their residuals `m_σ`.
fn open_slots(p: &StemCondition) -> Vec<(BitString, Dyadic)> {
    let i = p.stem_depth() - 1;
    let mut out = Vec::new();
    collect_open(&p.phi().trie(), BitString::empty(), i, &mut out);
    out.into_iter().map(|s| {
        let m = p.phi().residual_mass(&s);
        (s, m)
    }).collect()
}

fn collect_open(node: &Node, path: BitString, target: usize, out: &mut Vec<BitString>) {
    if matches!(node, Node::Full) {
        return;
    }
    if path.len() == target {
        out.push(path);
        return;
    }
    match node {
        Node::Split(a, b) => {
            collect_open(a, path.child(false), target, out);
            collect_open(b, path.child(true), target, out);
        }
        _ => {
            collect_open(&Node::Empty, path.child(false), target, out);
            collect_open(&Node::Empty, path.child(true), target, out);
        }
    }
}

/// `(S_φ, a)` for a stem condition with nonempty stem.
fn slack_data(p: &StemCondition) -> Result<(Vec<(BitString, Dyadic)>, Dyadic), AmoebaError> {
    if p.stem_depth() == 0 {
        return Err(AmoebaError::EmptyStem);
    }
    let slots = open_slots(p);
    let a = slots.iter().map(|(_, m)| m.clone()).min().expect("a condition of measure < 1/2 leaves some slot open");
    Ok((slots, a))
}

/// Strengthen `p.phi` to `ψ` with `Φ(ψ) ≤ p`: the measure is pushed into
/// `(1/2 - a/2, 1/2)` while every open slot at level `stem_depth - 1`
/// keeps at least `a/2` of its room.
pub fn densify_aprime(p: &StemCondition) -> Result<ClopenSet, AmoebaError> {
    let (slots, a) = slack_data(p)?;
    let mu = p.phi().measure();
    let half = Dyadic::half();
    if mu > &half - &a.shr(1) {
        return Ok(p.phi().clone());
    }
    let mut need = &half - &a.shr(2) - mu;

    let gaps = p.phi().complement();
    let mut added: Vec<BitString> = Vec::new();
    for (sigma, m) in &slots {
        if need.is_zero() {
            break;
        }
        let mut room = (m - &a.shr(1)).min(need.clone());
        need -= &room;
        let mut holes: Vec<BitString> = if gaps.covers(sigma) {
            vec![sigma.clone()]
        } else {
            gaps.members().iter().filter(|g| sigma.is_prefix_of(g)).cloned().collect()
        };
        holes.sort_by_key(BitString::len);
        for hole in holes {
            if room.is_zero() {
                break;
            }
            let size = Dyadic::pow2_neg(hole.len() as u32);
            if size <= room {
                room -= &size;
                added.push(hole);
            } else {
                added.extend(fill_partially(&hole, &room));
                room = Dyadic::zero();
            }
        }
        debug_assert!(room.is_zero());
    }
    debug_assert!(need.is_zero());
    let mut all: Vec<BitString> = p.phi().members().iter().cloned().collect();
    all.extend(added);
    Ok(ClopenSet::canonicalize(&all))
}

/// Disjoint cylinders inside `[hole]` of total measure `amount < 2^-|hole|`:
/// `hole·1^{k-1}·0` for each binary digit `k` of `amount / 2^-|hole|`.
fn fill_partially(hole: &BitString, amount: &Dyadic) -> Vec<BitString> {
    let rel = amount.shl(hole.len() as u32);
    let k = rel.exponent();
    let units = rel.floor_units(k);
    let mut out = Vec::new();
    let mut prefix = hole.clone();
    for digit in 1..=k {
        if units.bit((k - digit) as u64) {
            out.push(prefix.child(false));
        }
        prefix = prefix.child(true);
    }
    out
}

/// The four density clauses for `ψ` against `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AprimeClauses {
    /// Levels below `stem_depth` are unchanged.
    pub stem_kept: bool,
    /// Every cylinder of `p.phi` lies inside a cylinder of `ψ` of equal or
    /// shorter length.
    pub refines: bool,
    /// `1/2 > μ(ψ) > 1/2 - a/2`.
    pub measure_window: bool,
    /// Every open slot keeps residual at least `a/2`.
    pub slack_kept: bool,
}

impl AprimeClauses {
    pub fn all(&self) -> bool {
        self.stem_kept && self.refines && self.measure_window && self.slack_kept
    }
}

pub fn aprime_clauses(p: &StemCondition, psi: &ClopenSet) -> Result<AprimeClauses, AmoebaError> {
    let (slots, a) = slack_data(p)?;
    let half = Dyadic::half();
    let mu = psi.measure();
    Ok(AprimeClauses {
        stem_kept: psi.level_view().truncated(p.stem_depth()) == p.stem(),
        refines: p.phi().is_subset(psi),
        measure_window: mu < half && mu > &half - &a.shr(1),
        slack_kept: slots.iter().all(|(sigma, _)| psi.residual_mass(sigma) >= a.shr(1)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::amoeba::ap_le;

    fn set(s: &str) -> ClopenSet {
        s.parse().unwrap()
    }

    fn dy(s: &str) -> Dyadic {
        s.parse().unwrap()
    }

    #[test]
    fn freeze_examples() {
        assert_eq!(freeze_prefix(&set("00")).unwrap(), 3);
        assert_eq!(freeze_prefix(&ClopenSet::empty()).unwrap(), 2);
        assert_eq!(freeze_prefix(&set("10")).unwrap(), 3);
        assert!(freeze_prefix(&set("0")).is_err());
    }

    #[test]
    fn embed_examples() {
        let p = phi_embed(&set("00")).unwrap();
        assert_eq!((p.stem_depth(), p.phi().clone()), (3, set("00")));
        assert_eq!(phi_embed(&ClopenSet::empty()).unwrap().stem_depth(), 2);
    }

    #[test]
    fn densify_empty_stem_two() {
        let p = StemCondition::new(2, ClopenSet::empty()).unwrap();
        let (_, a) = slack_data(&p).unwrap();
        assert_eq!(a, dy("1/2"));
        let psi = densify_aprime(&p).unwrap();
        assert_eq!(psi, set("00,110"));
        assert!(aprime_clauses(&p, &psi).unwrap().all());
        assert!(ap_le(&phi_embed(&psi).unwrap(), &p));
    }

    #[test]
    fn densify_embedded_quarter() {
        let p = phi_embed(&set("00")).unwrap();
        let (slots, a) = slack_data(&p).unwrap();
        assert_eq!(slots.len(), 3);
        assert_eq!(a, dy("1/4"));
        let psi = densify_aprime(&p).unwrap();
        let mu = psi.measure();
        assert!(mu > dy("3/8") && mu < dy("1/2"));
        assert!(aprime_clauses(&p, &psi).unwrap().all());
        assert!(ap_le(&phi_embed(&psi).unwrap(), &p));
    }

    #[test]
    fn densify_requires_stem() {
        let p = StemCondition::new(0, set("00")).unwrap();
        assert_eq!(densify_aprime(&p), Err(AmoebaError::EmptyStem));
    }

    #[test]
    fn partial_fill_digits() {
        let hole: BitString = "1".parse().unwrap();
        let parts = fill_partially(&hole, &dy("5/16"));
        let names: Vec<String> = parts.iter().map(ToString::to_string).collect();
        assert_eq!(names, ["10", "1110"]);
    }
}
