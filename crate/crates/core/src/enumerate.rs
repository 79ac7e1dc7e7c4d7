//! Exhaustive enumeration of spherical systems on a small root system.
//!
//! Systems are generated per choice of `Sp` (a partition), then `Σ` from
//! the rank-one candidates, then the rows of `A` as pairs per simple
//! spherical root, with rows of equal pairing vectors optionally merged.
//! Only choices of `Sp` minimal in their orbit under diagram automorphisms
//! are expanded, so partitions never produce isomorphic systems and can be
//! processed independently.
//!
//! ```
//! use wonder_systems::enumerate::{enumerate_systems, EnumFilter};
//! use wonder_systems::{RankOneTable, RootSystem};
//!
//! let rs = RootSystem::parse("A1").unwrap();
//! let all = enumerate_systems(&rs, &EnumFilter::default(), &RankOneTable::builtin()).unwrap();
//! assert_eq!(all.len(), 4);
//! ```

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg;
use crate::quotient::DEFAULT_MAX_COLORS;
use crate::rankone::RankOneTable;
use crate::reduction::{is_cuspidal, is_primitive, is_reductive_system, is_spherically_closed, is_strict, primitive_1combs};
use crate::rootsystem::{RootSystem, Weight};
use crate::system::{ARow, SphericalSystem};

/// Weights of the table allowed as spherical roots with parabolic roots
/// `sp`, grouped by entry in table order.
pub fn sigma_candidates(rs: &RootSystem, sp: &BTreeSet<usize>, table: &RankOneTable) -> Vec<Weight> {
    table
        .instances(rs)
        .into_iter()
        .filter(|w| table.axiom_s_holds(rs, w, sp))
        .collect()
}

/// Restrictions on enumerated systems. `None` flags are not checked.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumFilter {
    pub cuspidal: Option<bool>,
    pub primitive: Option<bool>,
    pub reductive: Option<bool>,
    pub strict: Option<bool>,
    pub spherically_closed: Option<bool>,
    pub has_primitive_1comb: Option<bool>,
    /// Largest coefficient sum of a spherical root; unbounded if `None`.
    pub max_sigma_height: Option<i64>,
    pub max_rank: usize,
    pub max_colors: usize,
}

impl Default for EnumFilter {
    fn default() -> Self {
        EnumFilter {
            cuspidal: None,
            primitive: None,
            reductive: None,
            strict: None,
            spherically_closed: None,
            has_primitive_1comb: None,
            max_sigma_height: None,
            max_rank: 5,
            max_colors: DEFAULT_MAX_COLORS,
        }
    }
}

impl EnumFilter {
    pub fn accepts(&self, sys: &SphericalSystem, table: &RankOneTable) -> Result<bool> {
        let want = |flag: Option<bool>, value: &dyn Fn() -> Result<bool>| -> Result<bool> {
            match flag {
                None => Ok(true),
                Some(f) => Ok(value()? == f),
            }
        };
        Ok(want(self.cuspidal, &|| Ok(is_cuspidal(sys)))?
            && want(self.strict, &|| Ok(is_strict(sys, table)))?
            && want(self.spherically_closed, &|| Ok(is_spherically_closed(sys, table)))?
            && want(self.reductive, &|| Ok(is_reductive_system(&sys.colors()?).is_some()))?
            && want(self.primitive, &|| is_primitive(sys, table, self.max_colors))?
            && want(self.has_primitive_1comb, &|| {
                Ok(!primitive_1combs(sys, table, self.max_colors)?.is_empty())
            })?)
    }
}

/// A normal form of `(Sp, Σ, A)` under diagram automorphisms, reordering
/// of `Σ` and renaming of the rows of `A`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey {
    pub sp: Vec<usize>,
    pub sigma: Vec<Weight>,
    pub rows: Vec<Vec<i64>>,
}

pub fn canonical_form(sys: &SphericalSystem) -> CanonicalKey {
    sys.root_system()
        .automorphisms()
        .iter()
        .map(|perm| key_under(sys, perm))
        .min()
        .expect("the identity is an automorphism")
}

fn key_under(sys: &SphericalSystem, perm: &[usize]) -> CanonicalKey {
    let mut sp: Vec<usize> = sys.sp().iter().map(|&i| perm[i]).collect();
    sp.sort_unstable();
    let mut order: Vec<(Weight, usize)> = sys
        .sigma()
        .iter()
        .enumerate()
        .map(|(j, w)| (w.permuted(perm), j))
        .collect();
    order.sort();
    let mut rows: Vec<Vec<i64>> = sys
        .a_rows()
        .iter()
        .map(|r| order.iter().map(|&(_, j)| r.values[j]).collect())
        .collect();
    rows.sort();
    CanonicalKey {
        sp,
        sigma: order.into_iter().map(|(w, _)| w).collect(),
        rows,
    }
}

/// Number of partitions, one per subset of simple roots.
pub fn partition_count(rs: &RootSystem) -> u64 {
    1u64 << rs.rank()
}

fn mask_set(mask: u64) -> BTreeSet<usize> {
    (0..64).filter(|i| mask >> i & 1 == 1).collect()
}

fn check_bounds(rs: &RootSystem, filter: &EnumFilter) -> Result<()> {
    if rs.rank() > filter.max_rank || rs.rank() >= 63 {
        return Err(Error::BoundExceeded {
            what: "rank of the root system",
            actual: rs.rank(),
            bound: filter.max_rank,
        });
    }
    Ok(())
}

/// The systems of partition `index` (the set of simple roots with bitmask
/// `index` as `Sp`), one per isomorphism class, in generation order.
/// Partitions whose `Sp` is not minimal in its automorphism orbit are empty.
pub fn enumerate_partition(
    rs: &RootSystem,
    filter: &EnumFilter,
    table: &RankOneTable,
    index: u64,
) -> Result<Vec<SphericalSystem>> {
    check_bounds(rs, filter)?;
    let sp = mask_set(index);
    let minimal = rs.automorphisms().iter().all(|perm| {
        let image: u64 = sp.iter().map(|&i| 1u64 << perm[i]).sum();
        image >= index
    });
    if !minimal {
        return Ok(vec![]);
    }
    let mut candidates = sigma_candidates(rs, &sp, table);
    if let Some(h) = filter.max_sigma_height {
        candidates.retain(|w| w.height() <= h);
    }
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    let mut emit = |sigma: &[Weight]| -> Result<()> {
        for sys in systems_with_sigma(rs, &sp, sigma, table)? {
            if seen.insert(canonical_form(&sys)) && filter.accepts(&sys, table)? {
                out.push(sys);
            }
        }
        Ok(())
    };
    choose_sigma(rs, &candidates, 0, &mut chosen, &mut emit)?;
    Ok(out)
}

/// All systems on `rs` passing `filter`, one per isomorphism class,
/// ordered by partition.
pub fn enumerate_systems(rs: &RootSystem, filter: &EnumFilter, table: &RankOneTable) -> Result<Vec<SphericalSystem>> {
    check_bounds(rs, filter)?;
    let parts: Vec<Vec<SphericalSystem>> = (0..partition_count(rs))
        .into_par_iter()
        .map(|index| enumerate_partition(rs, filter, table, index))
        .collect::<Result<_>>()?;
    Ok(parts.into_iter().flatten().collect())
}

/// Backtracks over independent subsets of `candidates` (in index order)
/// that are pairwise compatible.
fn choose_sigma(
    rs: &RootSystem,
    candidates: &[Weight],
    start: usize,
    chosen: &mut Vec<Weight>,
    emit: &mut impl FnMut(&[Weight]) -> Result<()>,
) -> Result<()> {
    emit(chosen)?;
    for k in start..candidates.len() {
        let c = &candidates[k];
        if chosen.len() == rs.rank() || !compatible(rs, chosen, c) {
            continue;
        }
        chosen.push(c.clone());
        let rows: Vec<Vec<i64>> = chosen.iter().map(|w| w.coeffs().to_vec()).collect();
        if linalg::rank(&rows) == chosen.len() {
            choose_sigma(rs, candidates, k + 1, chosen, emit)?;
        }
        chosen.pop();
    }
    Ok(())
}

/// The conditions on `2α` and on `α + β` for orthogonal `α, β`, between a
/// new candidate and the roots chosen so far.
fn compatible(rs: &RootSystem, chosen: &[Weight], c: &Weight) -> bool {
    let doubled_ok = |double: &Weight, other: &Weight| match double.as_double_simple_root() {
        Some(i) => {
            let p = rs.coroot(i, other);
            p <= 0 && p % 2 == 0
        }
        None => true,
    };
    let orthogonal_pair = |w: &Weight| -> Option<(usize, usize)> {
        let s: Vec<usize> = w.support().into_iter().collect();
        match (s.as_slice(), w.iter().all(|&x| x <= 1)) {
            ([i, k], true) if rs.orthogonal(*i, *k) => Some((*i, *k)),
            _ => None,
        }
    };
    let pair_ok = |pair: &Weight, other: &Weight| match orthogonal_pair(pair) {
        Some((i, k)) => rs.coroot(i, other) == rs.coroot(k, other),
        None => true,
    };
    if orthogonal_pair(c).is_some() && !pair_ok(c, c) {
        return false;
    }
    chosen.iter().all(|s| {
        doubled_ok(c, s) && doubled_ok(s, c) && pair_ok(c, s) && pair_ok(s, c) && s != c
    })
}

/// Unordered pairs of rows for the simple spherical root at position `j`,
/// summing to `coroot` with entries at most 1, and 1 only at simple roots.
fn row_pairs(sigma: &[Weight], j: usize, coroot: &[i64]) -> Vec<(Vec<i64>, Vec<i64>)> {
    let ranges: Vec<(i64, i64)> = (0..sigma.len())
        .map(|k| {
            if k == j {
                (1, 1)
            } else if sigma[k].as_simple_root().is_some() {
                (coroot[k] - 1, 1)
            } else {
                (coroot[k], 0)
            }
        })
        .collect();
    if coroot[j] != 2 || ranges.iter().any(|&(lo, hi)| lo > hi) {
        return vec![];
    }
    let mut out = Vec::new();
    let mut row = vec![0; sigma.len()];
    fn go(k: usize, ranges: &[(i64, i64)], coroot: &[i64], row: &mut Vec<i64>, out: &mut Vec<(Vec<i64>, Vec<i64>)>) {
        if k == ranges.len() {
            let other: Vec<i64> = coroot.iter().zip(row.iter()).map(|(p, r)| p - r).collect();
            if *row >= other {
                out.push((row.clone(), other));
            }
            return;
        }
        for v in (ranges[k].0..=ranges[k].1).rev() {
            row[k] = v;
            go(k + 1, ranges, coroot, row, out);
        }
    }
    go(0, &ranges, coroot, &mut row, &mut out);
    out
}

/// Every valid system with the given `Sp` and `Σ`.
fn systems_with_sigma(
    rs: &RootSystem,
    sp: &BTreeSet<usize>,
    sigma: &[Weight],
    table: &RankOneTable,
) -> Result<Vec<SphericalSystem>> {
    let simple: Vec<usize> = (0..sigma.len()).filter(|&j| sigma[j].as_simple_root().is_some()).collect();
    let per_root: Vec<Vec<(Vec<i64>, Vec<i64>)>> = simple
        .iter()
        .map(|&j| {
            let i = sigma[j].as_simple_root().unwrap();
            let coroot: Vec<i64> = sigma.iter().map(|w| rs.coroot(i, w)).collect();
            row_pairs(sigma, j, &coroot)
        })
        .collect();
    if per_root.iter().any(Vec::is_empty) {
        return Ok(vec![]);
    }
    let mut out = Vec::new();
    let mut pick = vec![0usize; per_root.len()];
    loop {
        let mut counts: BTreeMap<Vec<i64>, usize> = BTreeMap::new();
        for (r, &p) in per_root.iter().zip(&pick) {
            *counts.entry(r[p].0.clone()).or_default() += 1;
            *counts.entry(r[p].1.clone()).or_default() += 1;
        }
        let distinct: Vec<(Vec<i64>, usize)> = counts.into_iter().rev().collect();
        let mut mult = vec![1usize; distinct.len()];
        loop {
            let mut rows = Vec::new();
            for ((v, _), &m) in distinct.iter().zip(&mult) {
                for _ in 0..m {
                    rows.push(ARow::new(format!("D{}", rows.len() + 1), v.clone()));
                }
            }
            let sys = SphericalSystem::new(rs.clone(), sp.clone(), sigma.to_vec(), rows)?;
            if sys.validate(table).is_valid() {
                out.push(sys);
            }
            if !advance(&mut mult, 1, |k| distinct[k].1) {
                break;
            }
        }
        if !advance(&mut pick, 0, |k| per_root[k].len() - 1) {
            break;
        }
    }
    Ok(out)
}

/// Odometer step with digit `k` ranging over `lo..=hi(k)`; false after
/// the last value.
fn advance(digits: &mut [usize], lo: usize, hi: impl Fn(usize) -> usize) -> bool {
    for k in 0..digits.len() {
        if digits[k] < hi(k) {
            digits[k] += 1;
            return true;
        }
        digits[k] = lo;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::emit_system;

    fn t() -> RankOneTable {
        RankOneTable::builtin()
    }

    fn weights(ws: &[Weight]) -> Vec<Vec<i64>> {
        ws.iter().map(|w| w.coeffs().to_vec()).collect()
    }

    #[test]
    fn candidates_on_small_groups() {
        let a1 = RootSystem::parse("A1").unwrap();
        assert_eq!(weights(&sigma_candidates(&a1, &BTreeSet::new(), &t())), vec![vec![1], vec![2]]);
        assert!(sigma_candidates(&a1, &BTreeSet::from([0]), &t()).is_empty());
        let a1a1 = RootSystem::parse("A1xA1").unwrap();
        assert_eq!(
            weights(&sigma_candidates(&a1a1, &BTreeSet::new(), &t())),
            vec![vec![1, 0], vec![0, 1], vec![2, 0], vec![0, 2], vec![1, 1]]
        );
    }

    #[test]
    fn a1_has_four_systems() {
        let rs = RootSystem::parse("A1").unwrap();
        let all = enumerate_systems(&rs, &EnumFilter::default(), &t()).unwrap();
        let docs: Vec<String> = all.iter().map(emit_system).collect();
        assert_eq!(docs.len(), 4, "{docs:#?}");
        assert!(docs.contains(&"group: A1\nsp: -\nsigma:\n  1\nA:\n  D1: 1\n  D2: 1\n".to_string()));
        assert!(docs.contains(&"group: A1\nsp: 1\nsigma:\nA:\n".to_string()));
    }

    #[test]
    fn mirror_images_share_a_key() {
        let rs = RootSystem::parse("A2").unwrap();
        let sys = SphericalSystem::new(rs.clone(), BTreeSet::new(), vec![Weight::new(vec![1, 0])], vec![
            ARow::new("D+", vec![1]),
            ARow::new("D-", vec![1]),
        ])
        .unwrap();
        let mirror = sys.relabeled(&[1, 0], &[0], &[1, 0]);
        assert_eq!(canonical_form(&sys), canonical_form(&mirror));
        let other = SphericalSystem::new(rs, BTreeSet::from([0]), vec![], vec![]).unwrap();
        let other_mirror = other.relabeled(&[1, 0], &[], &[]);
        assert_eq!(canonical_form(&other), canonical_form(&other_mirror));
        assert_ne!(canonical_form(&other), canonical_form(&sys));
    }

    #[test]
    fn rank_bound() {
        let rs = RootSystem::parse("A6").unwrap();
        assert!(matches!(
            enumerate_systems(&rs, &EnumFilter::default(), &t()),
            Err(Error::BoundExceeded { .. })
        ));
    }

    #[test]
    fn row_pairs_of_rank_one() {
        let sigma = vec![Weight::new(vec![1])];
        assert_eq!(row_pairs(&sigma, 0, &[2]), vec![(vec![1], vec![1])]);
    }
}
