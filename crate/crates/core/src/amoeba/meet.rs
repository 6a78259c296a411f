//! Common lower bounds of stem conditions sharing a stem.

use super::{AmoebaError, StemCondition};
use crate::cantor::ClopenSet;
use crate::dyadic::Dyadic;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MeetOutcome {
    /// `(u, ⋃ φ)`, a lower bound of every input.
    Feasible(StemCondition),
    /// The union has measure `1/2 + excess`.
    Overshoot { excess: Dyadic },
    /// Tail cylinders merge into a level below the stem depth, so no
    /// condition with this stem contains the union.
    StemDisturbed { union: ClopenSet },
}

/// Meet of conditions with identical stems: the shared stem over the union
/// of the sets.
pub fn meet_same_stem(ps: &[StemCondition]) -> Result<MeetOutcome, AmoebaError> {
    let first = ps.first().ok_or(AmoebaError::NoConditions)?;
    let stem = first.stem();
    if ps.iter().any(|p| p.stem_depth() != first.stem_depth() || p.stem() != stem) {
        return Err(AmoebaError::StemsDiffer);
    }
    let union = ps.iter().fold(ClopenSet::empty(), |acc, p| acc.union(p.phi()));
    let mu = union.measure();
    if mu >= Dyadic::half() {
        return Ok(MeetOutcome::Overshoot { excess: mu - Dyadic::half() });
    }
    if union.level_view().truncated(first.stem_depth()) != stem {
        return Ok(MeetOutcome::StemDisturbed { union });
    }
    Ok(MeetOutcome::Feasible(StemCondition::new(first.stem_depth(), union)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::amoeba::ap_le;

    fn sc(s: &str) -> StemCondition {
        s.parse().unwrap()
    }

    #[test]
    fn meet_examples() {
        let ps = [sc("4|00,010,01100"), sc("4|00,010,01101")];
        // the two tails are siblings and merge into 0110 at level 4
        match meet_same_stem(&ps).unwrap() {
            MeetOutcome::Feasible(q) => {
                assert_eq!(q.phi().measure(), "7/16".parse().unwrap());
                assert!(ps.iter().all(|p| ap_le(&q, p)));
            }
            other => panic!("{other:?}"),
        }
        let ps = [sc("4|00,010,0110"), sc("4|00,010,0111")];
        assert_eq!(meet_same_stem(&ps).unwrap(), MeetOutcome::Overshoot { excess: Dyadic::zero() });
        let p = sc("4|00,010,01100");
        assert_eq!(meet_same_stem(std::slice::from_ref(&p)).unwrap(), MeetOutcome::Feasible(p));
    }

    #[test]
    fn stem_mismatch() {
        assert_eq!(meet_same_stem(&[sc("4|00"), sc("3|00")]), Err(AmoebaError::StemsDiffer));
        assert_eq!(meet_same_stem(&[sc("4|00"), sc("4|00,010")]), Err(AmoebaError::StemsDiffer));
        assert_eq!(meet_same_stem(&[]), Err(AmoebaError::NoConditions));
    }

    #[test]
    fn tails_can_disturb_the_stem() {
        // stem depth 9 with a member at level 8; tails 100000000 and
        // 100000001 merge into 10000000 at level 8
        let ps = [sc("9|00000000,100000000"), sc("9|00000000,100000001")];
        assert!(matches!(meet_same_stem(&ps).unwrap(), MeetOutcome::StemDisturbed { .. }));
    }
}
