//! Reduction of spherical systems to primitive pieces.
//!
//! A system reduces by localization to the support of its spherical roots,
//! by decomposition into two quotients, by splitting a positive comb, or by
//! stripping a tail. What remains is primitive, has a primitive positive
//! 1-comb, or has rank zero. [`reduce`] applies the steps in that order and
//! records them in a [`ReductionTree`].

mod combs;
mod criteria;
mod decomposition;
mod tails;
mod tree;

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::rankone::RankOneTable;
use crate::rootsystem::Weight;
use crate::system::{ARow, SphericalSystem};

pub use combs::{comb_fibration_applies, comb_split, positive_combs, PositiveComb};
pub use criteria::{is_reductive_system, is_spherically_closed, is_strict, verify_reductive_certificate};
pub use decomposition::{decomposing_pairs, find_decomposition, same_system, tower_identity_holds, Decomposition};
pub use tails::{find_tails, strip_tail, Tail, TailKind};
pub use tree::{is_primitive, primitive_1combs, reduce, LeafKind, ReductionStep, ReductionTree};

/// The localization at `roots`: the spherical roots supported there, over
/// the root system of the subdiagram.
///
/// ```
/// use wonder_systems::format::parse_system;
/// use wonder_systems::reduction::localize;
/// use wonder_systems::RankOneTable;
///
/// let sys = parse_system(
///     "group: A2\nsp: -\nsigma:\n  1 0\n  0 1\nA:\n  D1+: 1 0\n  D1-: 1 -1\n  D2+: 0 1\n  D2-: -1 1\n",
/// )
/// .unwrap();
/// let local = localize(&sys, &[0].into(), &RankOneTable::builtin()).unwrap();
/// assert_eq!(local.root_system().name(), "A1");
/// assert_eq!(local.a_rows().len(), 2);
/// ```
pub fn localize(sys: &SphericalSystem, roots: &BTreeSet<usize>, table: &RankOneTable) -> Result<SphericalSystem> {
    let local = localize_unchecked(sys, roots)?;
    let report = local.validate(table);
    if !report.is_valid() {
        return Err(Error::Consistency(format!(
            "localization violates the axioms: {}",
            report.summary()
        )));
    }
    Ok(local)
}

fn localize_unchecked(sys: &SphericalSystem, roots: &BTreeSet<usize>) -> Result<SphericalSystem> {
    let rs = sys.root_system();
    if let Some(&i) = roots.iter().find(|&&i| i >= rs.rank()) {
        return Err(Error::IndexOutOfRange { index: i, rank: rs.rank() });
    }
    let (sub, map) = rs.sub_root_system(roots);
    let to_local = |w: &Weight| {
        let mut v = vec![0; sub.rank()];
        for (i, &c) in w.iter().enumerate() {
            if let Some(k) = map[i] {
                v[k] = c;
            }
        }
        Weight::new(v)
    };
    let kept: Vec<usize> = (0..sys.rank())
        .filter(|&j| sys.sigma()[j].support().is_subset(roots))
        .collect();
    let sp = sys.sp().iter().filter_map(|&i| map[i]).collect();
    let sigma = kept.iter().map(|&j| to_local(&sys.sigma()[j])).collect();
    let mut rows = BTreeSet::new();
    for &j in &kept {
        if let Some(i) = sys.sigma()[j].as_simple_root() {
            rows.extend(sys.a_of(i));
        }
    }
    let a = rows
        .iter()
        .map(|&d| {
            let row = &sys.a_rows()[d];
            ARow::new(row.name.clone(), kept.iter().map(|&j| row.values[j]).collect())
        })
        .collect();
    SphericalSystem::new(sub, sp, sigma, a)
}

pub fn is_cuspidal(sys: &SphericalSystem) -> bool {
    sys.support() == sys.root_system().all_roots()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsystem::RootSystem;

    pub(crate) fn sys(group: &str, sp: &[usize], sigma: &[&[i64]], rows: &[(&str, &[i64])]) -> SphericalSystem {
        SphericalSystem::new(
            RootSystem::parse(group).unwrap(),
            sp.iter().copied().collect(),
            sigma.iter().map(|w| Weight::new(w.to_vec())).collect(),
            rows.iter().map(|(n, v)| ARow::new(*n, v.to_vec())).collect(),
        )
        .unwrap()
    }

    pub(crate) fn a2() -> SphericalSystem {
        sys(
            "A2",
            &[],
            &[&[1, 0], &[0, 1]],
            &[("D1+", &[1, 0]), ("D1-", &[1, -1]), ("D2+", &[0, 1]), ("D2-", &[-1, 1])],
        )
    }

    #[test]
    fn localize_to_everything_is_identity() {
        let s = a2();
        assert_eq!(localize(&s, &[0, 1].into(), &RankOneTable::builtin()).unwrap(), s);
    }

    #[test]
    fn localize_a2_to_first_root() {
        let l = localize(&a2(), &[0].into(), &RankOneTable::builtin()).unwrap();
        let expected = sys("A1", &[], &[&[1]], &[("D1+", &[1]), ("D1-", &[1])]);
        assert_eq!(l, expected);
    }

    #[test]
    fn localize_drops_roots_with_larger_support() {
        let s = sys("A2", &[], &[&[1, 1]], &[]);
        let l = localize(&s, &[0].into(), &RankOneTable::builtin()).unwrap();
        assert!(l.sigma().is_empty());
        assert_eq!(l.root_system().name(), "A1");
    }

    #[test]
    fn cuspidality() {
        assert!(is_cuspidal(&sys("A1", &[], &[&[1]], &[("D+", &[1]), ("D-", &[1])])));
        assert!(!is_cuspidal(&sys("A1", &[], &[], &[])));
        let s = sys("A2", &[], &[&[1, 0]], &[("D+", &[1]), ("D-", &[1])]);
        assert!(!is_cuspidal(&s));
    }
}
