use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::rankone::RankOneTable;
use crate::system::{ARow, SphericalSystem};

/// A row of `A` pairing nonnegatively with every spherical root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PositiveComb {
    /// Index into the rows of `A`.
    pub row: usize,
    pub n: usize,
    /// Simple spherical roots with pairing 1.
    pub roots: BTreeSet<usize>,
}

pub fn positive_combs(sys: &SphericalSystem) -> Vec<PositiveComb> {
    sys.a_rows()
        .iter()
        .enumerate()
        .filter(|(_, row)| row.values.iter().all(|&c| c >= 0))
        .map(|(d, row)| {
            let roots: BTreeSet<usize> = sys
                .sigma()
                .iter()
                .zip(&row.values)
                .filter(|&(_, &c)| c == 1)
                .filter_map(|(w, _)| w.as_simple_root())
                .collect();
            PositiveComb {
                row: d,
                n: roots.len(),
                roots,
            }
        })
        .collect()
}

fn comb_at(sys: &SphericalSystem, row: usize) -> Result<PositiveComb> {
    positive_combs(sys)
        .into_iter()
        .find(|c| c.row == row)
        .ok_or_else(|| Error::Precondition(format!("row {row} is not a positive comb")))
}

/// The systems obtained from a positive `n`-comb with `n > 1`, one for each
/// simple root it touches, keeping that root and dropping the others.
pub fn comb_split(sys: &SphericalSystem, row: usize, table: &RankOneTable) -> Result<Vec<(usize, SphericalSystem)>> {
    let comb = comb_at(sys, row)?;
    if comb.n <= 1 {
        return Err(Error::Precondition(format!(
            "{} is a positive {}-comb; splitting needs n > 1",
            sys.a_rows()[row].name,
            comb.n
        )));
    }
    let mut out = Vec::with_capacity(comb.n);
    for &alpha in &comb.roots {
        let kept: Vec<usize> = (0..sys.rank())
            .filter(|&j| match sys.sigma()[j].as_simple_root() {
                Some(i) => i == alpha || !comb.roots.contains(&i),
                None => true,
            })
            .collect();
        let mut rows = BTreeSet::new();
        for &j in &kept {
            if let Some(i) = sys.sigma()[j].as_simple_root() {
                rows.extend(sys.a_of(i));
            }
        }
        let a = rows
            .iter()
            .map(|&d| {
                let r = &sys.a_rows()[d];
                ARow::new(r.name.clone(), kept.iter().map(|&j| r.values[j]).collect())
            })
            .collect();
        let sigma = kept.iter().map(|&j| sys.sigma()[j].clone()).collect();
        let part = SphericalSystem::new(sys.root_system().clone(), sys.sp().clone(), sigma, a)?;
        let report = part.validate(table);
        if !report.is_valid() {
            return Err(Error::Consistency(format!(
                "comb split at alpha_{} violates the axioms: {}",
                alpha + 1,
                report.summary()
            )));
        }
        let has_one_comb = positive_combs(&part)
            .iter()
            .any(|c| c.n == 1 && c.roots.contains(&alpha));
        if !has_one_comb {
            return Err(Error::Consistency(format!(
                "comb split at alpha_{} has no positive 1-comb there",
                alpha + 1
            )));
        }
        out.push((alpha, part));
    }
    Ok(out)
}

/// Whether none of the comb's simple roots lies in the support of a
/// non-simple spherical root.
pub fn comb_fibration_applies(sys: &SphericalSystem, row: usize) -> Result<bool> {
    let comb = comb_at(sys, row)?;
    let non_simple: BTreeSet<usize> = sys
        .sigma()
        .iter()
        .filter(|w| w.as_simple_root().is_none())
        .flat_map(|w| w.support())
        .collect();
    Ok(comb.roots.is_disjoint(&non_simple))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reduction::tests::{a2, sys};

    #[test]
    fn rank_one_has_two_one_combs() {
        let s = sys("A1", &[], &[&[1]], &[("D+", &[1]), ("D-", &[1])]);
        let combs = positive_combs(&s);
        assert_eq!(combs.len(), 2);
        assert!(combs.iter().all(|c| c.n == 1));
        assert!(comb_fibration_applies(&s, 0).unwrap());
    }

    #[test]
    fn a2_combs() {
        let combs = positive_combs(&a2());
        let rows: Vec<usize> = combs.iter().map(|c| c.row).collect();
        assert_eq!(rows, vec![0, 2]);
    }

    #[test]
    fn no_rows_no_combs() {
        assert!(positive_combs(&sys("A1xA1", &[], &[&[1, 1]], &[])).is_empty());
    }

    #[test]
    fn shared_comb_splits_in_two() {
        let s = sys(
            "A1xA1",
            &[],
            &[&[1, 0], &[0, 1]],
            &[("D", &[1, 1]), ("E", &[1, -1]), ("F", &[-1, 1])],
        );
        let t = RankOneTable::builtin();
        assert!(s.validate(&t).is_valid());
        let comb = &positive_combs(&s)[0];
        assert_eq!(comb.n, 2);
        let parts = comb_split(&s, 0, &t).unwrap();
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[0].1.sigma().len(), 1);
        assert_eq!(parts[0].1.a_rows().iter().map(|r| r.name.as_str()).collect::<Vec<_>>(), ["D", "E"]);
    }

    #[test]
    fn one_comb_does_not_split() {
        let s = sys("A1", &[], &[&[1]], &[("D+", &[1]), ("D-", &[1])]);
        assert!(matches!(comb_split(&s, 0, &RankOneTable::builtin()), Err(Error::Precondition(_))));
    }

    #[test]
    fn fibration_fails_under_non_simple_root() {
        // Not a valid system; the predicate only looks at supports.
        let s = sys("A2", &[], &[&[1, 0], &[1, 1]], &[("D+", &[1, 0]), ("D-", &[1, 1])]);
        assert!(!comb_fibration_applies(&s, 0).unwrap());
        let t = sys("A1xA2", &[], &[&[1, 0, 0], &[0, 1, 1]], &[("D+", &[1, 0]), ("D-", &[1, 0])]);
        assert!(comb_fibration_applies(&t, 0).unwrap());
    }
}
