//! Distinguished subsets of colors and quotient systems.
//!
//! A set of colors `Δ'` is distinguished when some positive combination of
//! its pairing rows is nonnegative on every spherical root. The spherical
//! roots of the quotient generate the monoid of `x ∈ ℕΣ` killed by every
//! color in `Δ'`.
//!
//! ```
//! use std::collections::BTreeSet;
//! use wonder_systems::format::parse_system;
//! use wonder_systems::quotient::{is_distinguished, quotient};
//! use wonder_systems::RankOneTable;
//!
//! let sys = parse_system(
//!     "group: A2\nsp: -\nsigma:\n  1 0\n  0 1\nA:\n  D1+: 1 0\n  D1-: 1 -1\n  D2+: 0 1\n  D2-: -1 1\n",
//! )
//! .unwrap();
//! let colors = sys.colors().unwrap();
//! let minus = colors.select(&["D1-", "D2-"]).unwrap();
//! assert!(is_distinguished(&colors, &minus).is_some());
//! assert!(is_distinguished(&colors, &colors.select(&["D1-"]).unwrap()).is_none());
//!
//! let q = quotient(&sys, &colors, &minus, &RankOneTable::builtin()).unwrap();
//! assert_eq!(q.quotient.sigma()[0].coeffs(), &[1, 1]);
//! ```

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::{self, Q};
use crate::lp;
use crate::rankone::RankOneTable;
use crate::rootsystem::Weight;
use crate::system::{ARow, ColorKind, ColorSet, SphericalSystem};

/// Default bound on the number of colors for exhaustive subset scans.
pub const DEFAULT_MAX_COLORS: usize = 20;

/// Multiple of the largest basis height up to which freeness of the
/// quotient monoid is re-checked by enumeration.
pub const FREENESS_HEIGHT_FACTOR: i64 = 3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistinguishedSubset {
    pub subset: BTreeSet<usize>,
    /// Positive weights, one per element of `subset` in ascending order.
    pub certificate: Vec<Q>,
}

/// Positive weights `a_D` with `Σ a_D c(D, σ) >= 0` for every `σ`, if any.
///
/// Solved as the feasibility of `a >= 1` together with the pairing
/// constraints; the cone is invariant under scaling.
pub fn is_distinguished(colors: &ColorSet, subset: &BTreeSet<usize>) -> Option<Vec<Q>> {
    let k = subset.len();
    if k == 0 {
        return Some(vec![]);
    }
    let rows: Vec<&Vec<i64>> = subset.iter().map(|&d| &colors.pairing[d]).collect();
    let nsigma = rows[0].len();
    let mut a = Vec::with_capacity(k + nsigma);
    let mut b = Vec::with_capacity(k + nsigma);
    for i in 0..k {
        let mut row = vec![0; k];
        row[i] = 1;
        a.push(row);
        b.push(1);
    }
    for j in 0..nsigma {
        a.push(rows.iter().map(|r| r[j]).collect());
        b.push(0);
    }
    let x = lp::feasible_point(&a, &b, k)?;
    debug_assert!(lp::satisfies(&a, &b, &x));
    Some(x)
}

/// Checks a certificate exactly.
pub fn verify_certificate(colors: &ColorSet, subset: &BTreeSet<usize>, certificate: &[Q]) -> bool {
    use num_traits::Signed;
    if certificate.len() != subset.len() || certificate.iter().any(|a| !a.is_positive()) {
        return false;
    }
    let nsigma = colors.pairing.first().map_or(0, Vec::len);
    (0..nsigma).all(|j| {
        let total: Q = subset
            .iter()
            .zip(certificate)
            .map(|(&d, a)| a * linalg::q(colors.pairing[d][j]))
            .sum();
        !total.is_negative()
    })
}

fn subset_of_mask(mask: u64) -> BTreeSet<usize> {
    (0..64).filter(|i| mask >> i & 1 == 1).collect()
}

/// Distinguished subsets whose bitmask lies in `masks`, in mask order.
pub fn enumerate_distinguished_range(colors: &ColorSet, masks: std::ops::Range<u64>) -> Vec<DistinguishedSubset> {
    masks
        .into_par_iter()
        .filter_map(|mask| {
            let subset = subset_of_mask(mask);
            is_distinguished(colors, &subset).map(|certificate| DistinguishedSubset { subset, certificate })
        })
        .collect()
}

/// All distinguished subsets, in bitmask order (the empty set first).
pub fn enumerate_distinguished(colors: &ColorSet, max_colors: usize) -> Result<Vec<DistinguishedSubset>> {
    let k = colors.len();
    if k > max_colors || k >= 63 {
        return Err(Error::BoundExceeded {
            what: "number of colors",
            actual: k,
            bound: max_colors.min(62),
        });
    }
    Ok(enumerate_distinguished_range(colors, 0..1u64 << k))
}

/// The monoid `{x ∈ ℕ^m : C x = 0}` for the rows `C`, given by its
/// extreme rays (primitive, minimal support), ordered by smallest support
/// index, then by support.
pub fn monoid_rays(rows: &[Vec<i64>], m: usize) -> Vec<Vec<i64>> {
    assert!(m < 64, "monoid_rays enumerates column subsets");
    let mut rays: Vec<(usize, u64, Vec<i64>)> = Vec::new();
    for mask in 1u64..1 << m {
        let cols: Vec<usize> = (0..m).filter(|j| mask >> j & 1 == 1).collect();
        let sub: Vec<Vec<i64>> = rows.iter().map(|r| cols.iter().map(|&j| r[j]).collect()).collect();
        let ker = linalg::kernel(&sub, cols.len());
        if ker.len() != 1 {
            continue;
        }
        let mut v = linalg::primitive(&ker[0]);
        if v[0] < 0 {
            v.iter_mut().for_each(|x| *x = -*x);
        }
        if v.iter().any(|&x| x <= 0) {
            continue;
        }
        let mut full = vec![0; m];
        for (&j, &x) in cols.iter().zip(&v) {
            full[j] = x;
        }
        rays.push((cols[0], mask, full));
    }
    rays.sort();
    rays.into_iter().map(|(_, _, r)| r).collect()
}

/// Checks that `rays` freely generate `{x ∈ ℕ^m : C x = 0}`.
///
/// The rays must be linearly independent and a basis of the saturated
/// lattice they span (maximal minors coprime). The decomposition of every
/// monoid element of coordinate sum at most `height` is re-checked
/// directly.
pub fn check_free(rows: &[Vec<i64>], rays: &[Vec<i64>], m: usize, height: i64) -> Result<()> {
    let r = rays.len();
    if linalg::rank(rays) < r {
        return Err(Error::NotFree(format!("{r} extreme rays are linearly dependent")));
    }
    let mut g: i128 = 0;
    for cols in subsets_of_size(m, r) {
        let minor: Vec<Vec<i64>> = rays.iter().map(|v| cols.iter().map(|&j| v[j]).collect()).collect();
        g = gcd(g, linalg::det(&minor).abs());
        if g == 1 {
            break;
        }
    }
    if r > 0 && g != 1 {
        return Err(Error::NotFree(format!("the rays span a sublattice of index {g}")));
    }
    let support: Vec<usize> = (0..m).filter(|&j| rays.iter().any(|v| v[j] != 0)).collect();
    let mut x = vec![0i64; m];
    let mut failure = None;
    for_each_bounded(&support, 0, height, &mut x, &mut |x| {
        if failure.is_some() || x.iter().all(|&c| c == 0) {
            return;
        }
        let killed = rows.iter().all(|row| row.iter().zip(x.iter()).map(|(a, b)| a * b).sum::<i64>() == 0);
        if !killed {
            return;
        }
        let ok = linalg::coordinates(rays, x).is_some_and(|c| c.iter().all(linalg::is_nonneg_integer));
        if !ok {
            failure = Some(x.to_vec());
        }
    });
    match failure {
        Some(x) => Err(Error::NotFree(format!("{x:?} is not a nonnegative integer combination of the basis"))),
        None => Ok(()),
    }
}

fn for_each_bounded(support: &[usize], k: usize, budget: i64, x: &mut Vec<i64>, f: &mut impl FnMut(&[i64])) {
    if k == support.len() {
        f(x);
        return;
    }
    for v in 0..=budget {
        x[support[k]] = v;
        for_each_bounded(support, k + 1, budget - v, x, f);
    }
    x[support[k]] = 0;
}

fn subsets_of_size(m: usize, r: usize) -> Vec<Vec<usize>> {
    (0u64..1 << m)
        .filter(|mask| mask.count_ones() as usize == r)
        .map(|mask| (0..m).filter(|j| mask >> j & 1 == 1).collect())
        .collect()
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// The spherical roots of the quotient by `subset`, with their expansions
/// over `Σ`. Freeness is checked; the axioms of the quotient are not.
pub fn quotient_sigma(sys: &SphericalSystem, colors: &ColorSet, subset: &BTreeSet<usize>) -> Result<Vec<(Weight, Vec<i64>)>> {
    let m = sys.rank();
    let rows: Vec<Vec<i64>> = subset.iter().map(|&d| colors.pairing[d].clone()).collect();
    let rays = monoid_rays(&rows, m);
    let max_height = rays.iter().map(|v| v.iter().sum::<i64>()).max().unwrap_or(0);
    check_free(&rows, &rays, m, FREENESS_HEIGHT_FACTOR * max_height)?;
    let n = sys.root_system().rank();
    Ok(rays
        .into_iter()
        .map(|x| {
            let mut w = vec![0; n];
            for (j, &c) in x.iter().enumerate() {
                for (wi, si) in w.iter_mut().zip(sys.sigma()[j].iter()) {
                    *wi += c * si;
                }
            }
            (Weight::new(w), x)
        })
        .collect())
}

/// A quotient system with the correspondence of its data to the original.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientResult {
    pub quotient: SphericalSystem,
    /// For each spherical root of the quotient, its coefficients over `Σ`.
    pub sigma_expansion: Vec<Vec<i64>>,
    /// Original color index to quotient color index, defined on `Δ ∖ Δ'`.
    pub surviving_colors: BTreeMap<usize, usize>,
    pub certificate: Vec<Q>,
}

/// The quotient of `sys` by the distinguished set of colors `subset`.
pub fn quotient(sys: &SphericalSystem, colors: &ColorSet, subset: &BTreeSet<usize>, table: &RankOneTable) -> Result<QuotientResult> {
    let certificate = is_distinguished(colors, subset)
        .ok_or_else(|| Error::NotDistinguished(format!("{{{}}}", colors.names(subset).join(", "))))?;
    let basis = quotient_sigma(sys, colors, subset)?;
    let rs = sys.root_system().clone();
    let n = rs.rank();

    let sp: BTreeSet<usize> = (0..n).filter(|&i| colors.delta_of[i].is_subset(subset)).collect();

    let sigma: Vec<Weight> = basis.iter().map(|(w, _)| w.clone()).collect();
    let expansion: Vec<Vec<i64>> = basis.into_iter().map(|(_, x)| x).collect();
    let rewrite = |values: &[i64]| -> Vec<i64> {
        expansion
            .iter()
            .map(|x| x.iter().zip(values).map(|(a, b)| a * b).sum())
            .collect()
    };

    let mut kept_rows = BTreeSet::new();
    for w in &sigma {
        if let Some(i) = w.as_simple_root() {
            kept_rows.extend(sys.a_of(i));
        }
    }
    let a: Vec<ARow> = kept_rows
        .iter()
        .map(|&d| ARow::new(sys.a_rows()[d].name.clone(), rewrite(&sys.a_rows()[d].values)))
        .collect();

    let quotient = SphericalSystem::new(rs, sp, sigma, a)?;
    let report = quotient.validate(table);
    if !report.is_valid() {
        return Err(Error::Consistency(format!(
            "quotient by {{{}}} violates the axioms: {}",
            colors.names(subset).join(", "),
            report.summary()
        )));
    }
    let qcolors = quotient.colors()?;
    let surviving_colors = match_colors(colors, subset, &quotient, &qcolors)?;
    for (&d, &e) in &surviving_colors {
        if rewrite(&colors.pairing[d]) != qcolors.pairing[e] {
            return Err(Error::Consistency(format!(
                "color {} pairs differently with the quotient's spherical roots",
                colors.colors[d].name
            )));
        }
    }
    Ok(QuotientResult {
        quotient,
        sigma_expansion: expansion,
        surviving_colors,
        certificate,
    })
}

fn match_colors(
    colors: &ColorSet,
    subset: &BTreeSet<usize>,
    quotient: &SphericalSystem,
    qcolors: &ColorSet,
) -> Result<BTreeMap<usize, usize>> {
    let mismatch = |what: String| Error::Consistency(format!("colors of the quotient do not match: {what}"));
    let mut map = BTreeMap::new();
    for (e, qc) in qcolors.colors.iter().enumerate() {
        let d = match &qc.kind {
            ColorKind::A { row } => {
                let name = &quotient.a_rows()[*row].name;
                colors.index_of(name).ok_or_else(|| mismatch(format!("no color {name}")))?
            }
            ColorKind::TwoA { root: alpha } => unique_outside(colors, subset, *alpha).ok_or_else(|| mismatch(qc.name.clone()))?,
            ColorKind::B { roots } => {
                let images: BTreeSet<usize> = roots
                    .iter()
                    .map(|&alpha| unique_outside(colors, subset, alpha).ok_or_else(|| mismatch(qc.name.clone())))
                    .collect::<Result<_>>()?;
                if images.len() != 1 {
                    return Err(mismatch(format!("{} comes from several colors", qc.name)));
                }
                *images.iter().next().unwrap()
            }
        };
        if subset.contains(&d) || map.insert(d, e).is_some() {
            return Err(mismatch(format!("{} is not the image of a unique color outside the subset", qc.name)));
        }
    }
    if map.len() + subset.len() != colors.len() {
        return Err(mismatch(format!(
            "{} colors survive but the quotient has {}",
            colors.len() - subset.len(),
            qcolors.len()
        )));
    }
    Ok(map)
}

fn unique_outside(colors: &ColorSet, subset: &BTreeSet<usize>, alpha: usize) -> Option<usize> {
    let mut rest = colors.delta_of[alpha].difference(subset);
    let d = *rest.next()?;
    rest.next().is_none().then_some(d)
}

/// How the defect changes under a quotient.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DefectRelation {
    Higher,
    Constant,
    Lower,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuotientClass {
    /// No nonempty distinguished proper subset.
    pub minimal: bool,
    /// The quotient shares no spherical root with the system.
    pub essential: bool,
    pub defect: DefectRelation,
    pub rank0: bool,
}

pub fn classify_quotient(
    sys: &SphericalSystem,
    colors: &ColorSet,
    subset: &BTreeSet<usize>,
    table: &RankOneTable,
) -> Result<QuotientClass> {
    if subset.is_empty() {
        return Err(Error::Precondition("cannot classify the quotient by the empty set".into()));
    }
    let q = quotient(sys, colors, subset, table)?;
    let members: Vec<usize> = subset.iter().copied().collect();
    let k = members.len();
    let minimal = (1u64..(1 << k) - 1).all(|mask| {
        let sub: BTreeSet<usize> = (0..k).filter(|i| mask >> i & 1 == 1).map(|i| members[i]).collect();
        is_distinguished(colors, &sub).is_none()
    });
    let essential = q.quotient.sigma().iter().all(|w| !sys.sigma().contains(w));
    let before = colors.len() as i64 - sys.rank() as i64;
    let after = q.quotient.defect()?;
    let defect = match after.cmp(&before) {
        std::cmp::Ordering::Greater => DefectRelation::Higher,
        std::cmp::Ordering::Equal => DefectRelation::Constant,
        std::cmp::Ordering::Less => DefectRelation::Lower,
    };
    Ok(QuotientClass {
        minimal,
        essential,
        defect,
        rank0: q.quotient.sigma().is_empty(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsystem::RootSystem;
    use crate::system::ARow;

    fn sys(group: &str, sp: &[usize], sigma: &[&[i64]], rows: &[(&str, &[i64])]) -> SphericalSystem {
        SphericalSystem::new(
            RootSystem::parse(group).unwrap(),
            sp.iter().copied().collect(),
            sigma.iter().map(|w| Weight::new(w.to_vec())).collect(),
            rows.iter().map(|(n, v)| ARow::new(*n, v.to_vec())).collect(),
        )
        .unwrap()
    }

    fn a1() -> SphericalSystem {
        sys("A1", &[], &[&[1]], &[("D+", &[1]), ("D-", &[1])])
    }

    fn a2() -> SphericalSystem {
        sys(
            "A2",
            &[],
            &[&[1, 0], &[0, 1]],
            &[("D1+", &[1, 0]), ("D1-", &[1, -1]), ("D2+", &[0, 1]), ("D2-", &[-1, 1])],
        )
    }

    fn t() -> RankOneTable {
        RankOneTable::builtin()
    }

    #[test]
    fn empty_subset_is_distinguished() {
        let c = a2().colors().unwrap();
        assert_eq!(is_distinguished(&c, &BTreeSet::new()), Some(vec![]));
    }

    #[test]
    fn a2_distinguished_subsets() {
        let c = a2().colors().unwrap();
        let cert = is_distinguished(&c, &c.select(&["D1-", "D2-"]).unwrap()).unwrap();
        assert_eq!(cert[0], cert[1]);
        let all = enumerate_distinguished(&c, DEFAULT_MAX_COLORS).unwrap();
        let has = |names: &[&str]| all.iter().any(|d| d.subset == c.select(names).unwrap());
        assert!(has(&["D1+"]));
        assert!(has(&["D2+"]));
        assert!(has(&["D1-", "D2-"]));
        assert!(!has(&["D1-"]));
        for d in &all {
            assert!(verify_certificate(&c, &d.subset, &d.certificate));
        }
    }

    #[test]
    fn a1_distinguished_subsets() {
        let c = a1().colors().unwrap();
        let all = enumerate_distinguished(&c, DEFAULT_MAX_COLORS).unwrap();
        assert_eq!(all.len(), 4);
        let c2 = sys("A1xA1", &[], &[&[1, 1]], &[]).colors().unwrap();
        assert_eq!(enumerate_distinguished(&c2, DEFAULT_MAX_COLORS).unwrap().len(), 2);
    }

    #[test]
    fn bound_on_colors() {
        let c = a2().colors().unwrap();
        assert!(matches!(enumerate_distinguished(&c, 3), Err(Error::BoundExceeded { .. })));
    }

    #[test]
    fn quotient_to_rank_zero() {
        let s = a1();
        let c = s.colors().unwrap();
        let q = quotient(&s, &c, &c.select(&["D+"]).unwrap(), &t()).unwrap();
        assert!(q.quotient.sigma().is_empty());
        assert!(q.quotient.sp().is_empty());
        assert_eq!(q.surviving_colors, BTreeMap::from([(1, 0)]));
        let class = classify_quotient(&s, &c, &c.select(&["D+"]).unwrap(), &t()).unwrap();
        assert_eq!(
            class,
            QuotientClass {
                minimal: true,
                essential: true,
                defect: DefectRelation::Constant,
                rank0: true
            }
        );
    }

    #[test]
    fn a2_quotient_by_minus_colors() {
        let s = a2();
        let c = s.colors().unwrap();
        let sub = c.select(&["D1-", "D2-"]).unwrap();
        let q = quotient(&s, &c, &sub, &t()).unwrap();
        assert_eq!(q.sigma_expansion, vec![vec![1, 1]]);
        assert_eq!(q.quotient.sigma()[0].coeffs(), &[1, 1]);
        assert!(classify_quotient(&s, &c, &sub, &t()).unwrap().essential);
    }

    #[test]
    fn identity_quotient() {
        for s in [a1(), a2()] {
            let c = s.colors().unwrap();
            let q = quotient(&s, &c, &BTreeSet::new(), &t()).unwrap();
            assert_eq!(q.quotient, s);
        }
    }

    #[test]
    fn full_subset_is_not_minimal() {
        let s = a2();
        let c = s.colors().unwrap();
        let all: BTreeSet<usize> = (0..4).collect();
        if is_distinguished(&c, &all).is_some() {
            assert!(!classify_quotient(&s, &c, &all, &t()).unwrap().minimal);
        }
    }

    #[test]
    fn non_distinguished_quotient_is_an_error() {
        let s = a2();
        let c = s.colors().unwrap();
        let r = quotient(&s, &c, &c.select(&["D1-"]).unwrap(), &t());
        assert!(matches!(r, Err(Error::NotDistinguished(_))));
    }

    #[test]
    fn rays_of_simple_cones() {
        assert_eq!(monoid_rays(&[], 2), vec![vec![1, 0], vec![0, 1]]);
        assert_eq!(monoid_rays(&[vec![1, -1]], 2), vec![vec![1, 1]]);
        assert_eq!(monoid_rays(&[vec![2, -1]], 2), vec![vec![1, 2]]);
        assert!(monoid_rays(&[vec![1, 1]], 2).is_empty());
    }

    #[test]
    fn non_free_monoid_is_detected() {
        // x1 + x2 = x3 + x4 has four extreme rays in a 3-dimensional cone.
        let rows = vec![vec![1, 1, -1, -1]];
        let rays = monoid_rays(&rows, 4);
        assert_eq!(rays.len(), 4);
        assert!(check_free(&rows, &rays, 4, 6).is_err());
        let rows = vec![vec![2, -1]];
        assert!(check_free(&rows, &monoid_rays(&rows, 2), 2, 9).is_ok());
    }
}
