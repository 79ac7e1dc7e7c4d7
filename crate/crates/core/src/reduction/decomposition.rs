use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::quotient::{enumerate_distinguished, is_distinguished, quotient, quotient_sigma};
use crate::rankone::RankOneTable;
use crate::rootsystem::Weight;
use crate::system::{ColorSet, SphericalSystem};

/// Two nonempty distinguished sets of colors decomposing a system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub first: BTreeSet<usize>,
    pub second: BTreeSet<usize>,
}

/// What a quotient looks like without building it: `Sp/Δ'` and `Σ/Δ'`.
pub(super) struct Profile {
    pub subset: BTreeSet<usize>,
    pub sp: BTreeSet<usize>,
    pub sigma: BTreeSet<Weight>,
}

/// Profiles of all nonempty distinguished subsets, largest first, then in
/// bitmask order.
pub(super) fn profiles(sys: &SphericalSystem, colors: &ColorSet, max_colors: usize) -> Result<Vec<Profile>> {
    let mut subsets = enumerate_distinguished(colors, max_colors)?;
    subsets.retain(|d| !d.subset.is_empty());
    // Bitmask order is kept by the stable sort.
    subsets.sort_by_key(|d| std::cmp::Reverse(d.subset.len()));
    let n = sys.root_system().rank();
    subsets
        .into_iter()
        .map(|d| {
            let sigma = quotient_sigma(sys, colors, &d.subset)?.into_iter().map(|(w, _)| w).collect();
            let sp = (0..n).filter(|&i| colors.delta_of[i].is_subset(&d.subset)).collect();
            Ok(Profile { subset: d.subset, sp, sigma })
        })
        .collect()
}

fn decomposes(sys: &SphericalSystem, p: &Profile, q: &Profile) -> bool {
    let rs = sys.root_system();
    let new_p: Vec<usize> = p.sp.difference(sys.sp()).copied().collect();
    let new_q: Vec<usize> = q.sp.difference(sys.sp()).copied().collect();
    let orthogonal = new_p.iter().all(|&i| new_q.iter().all(|&k| rs.orthogonal(i, k)));
    orthogonal && sys.sigma().iter().all(|w| p.sigma.contains(w) || q.sigma.contains(w))
}

/// Every decomposing pair, in search order.
pub fn decomposing_pairs(sys: &SphericalSystem, colors: &ColorSet, max_colors: usize) -> Result<Vec<Decomposition>> {
    if sys.sigma().is_empty() {
        return Ok(vec![]);
    }
    let profiles = profiles(sys, colors, max_colors)?;
    let mut out = Vec::new();
    for (i, p) in profiles.iter().enumerate() {
        for q in &profiles[i + 1..] {
            if decomposes(sys, p, q) {
                out.push(Decomposition {
                    first: p.subset.clone(),
                    second: q.subset.clone(),
                });
            }
        }
    }
    Ok(out)
}

/// The first decomposing pair, with the identities it implies checked.
///
/// Pairs are searched among nonempty distinguished subsets ordered by
/// decreasing size, then by bitmask. Rank-zero systems are never
/// decomposed.
pub fn find_decomposition(
    sys: &SphericalSystem,
    colors: &ColorSet,
    table: &RankOneTable,
    max_colors: usize,
) -> Result<Option<Decomposition>> {
    if sys.sigma().is_empty() {
        return Ok(None);
    }
    let profiles = profiles(sys, colors, max_colors)?;
    for (i, p) in profiles.iter().enumerate() {
        for q in &profiles[i + 1..] {
            if !decomposes(sys, p, q) {
                continue;
            }
            let union: BTreeSet<usize> = p.subset.union(&q.subset).copied().collect();
            if is_distinguished(colors, &union).is_none() {
                return Err(Error::Consistency("the union of a decomposing pair is not distinguished".into()));
            }
            if !tower_identity_holds(sys, colors, &p.subset, &q.subset, table)? {
                return Err(Error::Consistency("iterated quotients of a decomposing pair disagree".into()));
            }
            return Ok(Some(Decomposition {
                first: p.subset.clone(),
                second: q.subset.clone(),
            }));
        }
    }
    Ok(None)
}

/// Whether quotienting by `first` then `second`, by `second` then `first`,
/// and by their union all give the same system.
pub fn tower_identity_holds(
    sys: &SphericalSystem,
    colors: &ColorSet,
    first: &BTreeSet<usize>,
    second: &BTreeSet<usize>,
    table: &RankOneTable,
) -> Result<bool> {
    let union: BTreeSet<usize> = first.union(second).copied().collect();
    let direct = quotient(sys, colors, &union, table)?.quotient;
    for (a, b) in [(first, second), (second, first)] {
        let step = quotient(sys, colors, a, table)?;
        let step_colors = step.quotient.colors()?;
        let image: BTreeSet<usize> = b
            .difference(a)
            .map(|d| step.surviving_colors[d])
            .collect();
        let twice = quotient(&step.quotient, &step_colors, &image, table)?.quotient;
        if !same_system(&twice, &direct) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Equality up to the order of `Σ` and of `A`.
pub fn same_system(a: &SphericalSystem, b: &SphericalSystem) -> bool {
    fn rows(s: &SphericalSystem) -> BTreeMap<&str, BTreeMap<&Weight, i64>> {
        s.a_rows()
            .iter()
            .map(|r| (r.name.as_str(), s.sigma().iter().zip(r.values.iter().copied()).collect()))
            .collect()
    }
    let sigma = |s: &SphericalSystem| s.sigma().iter().cloned().collect::<BTreeSet<_>>();
    a.root_system() == b.root_system() && a.sp() == b.sp() && sigma(a) == sigma(b) && rows(a) == rows(b)
}
