use std::collections::BTreeSet;
use std::fmt;

use super::decomposition::profiles;
use super::localize;
use crate::error::{Error, Result};
use crate::quotient::{is_distinguished, DistinguishedSubset};
use crate::rankone::RankOneTable;
use crate::rootsystem::{matrix_automorphisms, Component, DynkinType, Weight};
use crate::system::{ColorSet, SphericalSystem};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TailKind {
    B,
    TwoB,
    C,
    D,
    AaAa,
    D3D3,
    D5D5,
    TwoATwoA,
}

/// Spherical roots at the end of a connected component that can be cut
/// off by localization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tail {
    pub kind: TailKind,
    /// The family parameter of the `b`, `2b`, `c` and `d` kinds.
    pub m: Option<usize>,
    /// Positions in `Σ`.
    pub roots: BTreeSet<usize>,
    pub witness: DistinguishedSubset,
}

impl Tail {
    pub fn name(&self) -> String {
        let m = self.m.unwrap_or(0);
        match self.kind {
            TailKind::B => format!("b({m})"),
            TailKind::TwoB => format!("2b({m})"),
            TailKind::C => format!("c({m})"),
            TailKind::D => format!("d({m})"),
            TailKind::AaAa => "(aa,aa)".into(),
            TailKind::D3D3 => "(d3,d3)".into(),
            TailKind::D5D5 => "(d5,d5)".into(),
            TailKind::TwoATwoA => "(2a,2a)".into(),
        }
    }
}

impl fmt::Display for Tail {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// Tail patterns on a connected type of rank `n`, as coefficient vectors
/// along the Bourbaki order.
fn patterns(kind: DynkinType, n: usize) -> Vec<(TailKind, Option<usize>, Vec<Vec<i64>>)> {
    let tail = |m: usize, head: i64, body: i64, last: &[i64]| {
        let mut v = vec![0; n];
        for c in v.iter_mut().skip(n - m) {
            *c = body;
        }
        v[n - m] = head;
        for (k, &c) in last.iter().enumerate() {
            v[n - last.len() + k] = c;
        }
        v
    };
    let fixed = |kind, ws: &[&[(usize, i64)]]| {
        let roots = ws
            .iter()
            .map(|w| {
                let mut v = vec![0; n];
                for &(i, c) in *w {
                    v[i - 1] = c;
                }
                v
            })
            .collect();
        vec![(kind, None, roots)]
    };
    match (kind, n) {
        (DynkinType::B, _) => (1..=n)
            .flat_map(|m| {
                [
                    (TailKind::B, Some(m), vec![tail(m, 1, 1, &[])]),
                    (TailKind::TwoB, Some(m), vec![tail(m, 2, 2, &[])]),
                ]
            })
            .collect(),
        (DynkinType::C, _) => (2..=n)
            .map(|m| (TailKind::C, Some(m), vec![tail(m, 1, 2, &[1])]))
            .collect(),
        (DynkinType::D, _) => (2..=n)
            .map(|m| {
                let head = if m == 2 { 1 } else { 2 };
                (TailKind::D, Some(m), vec![tail(m, head, 2, &[1, 1])])
            })
            .collect(),
        (DynkinType::E, 6) => fixed(TailKind::AaAa, &[&[(1, 1), (6, 1)], &[(3, 1), (5, 1)]]),
        (DynkinType::E, 7) => fixed(TailKind::D3D3, &[&[(2, 1), (4, 2), (5, 1)], &[(5, 1), (6, 2), (7, 1)]]),
        (DynkinType::E, 8) => fixed(
            TailKind::D5D5,
            &[
                &[(1, 2), (2, 1), (3, 2), (4, 2), (5, 1)],
                &[(2, 1), (3, 1), (4, 2), (5, 2), (6, 2)],
            ],
        ),
        (DynkinType::F, 4) => fixed(TailKind::TwoATwoA, &[&[(3, 2)], &[(4, 2)]]),
        _ => vec![],
    }
}

/// Every tail of `sys` together with a witnessing distinguished subset.
///
/// A `B2` or `C2` factor is read with its own letter, so `α1 + α2` on a
/// `C2` factor is a `c(2)` tail and on a `B2` factor a `b(2)` tail.
pub fn find_tails(sys: &SphericalSystem, colors: &ColorSet, max_colors: usize) -> Result<Vec<Tail>> {
    let rs = sys.root_system();
    let mut candidates: Vec<(TailKind, Option<usize>, BTreeSet<usize>)> = Vec::new();
    for comp in rs.components(&rs.all_roots()) {
        for (kind, m, local) in patterns(comp.kind, comp.rank) {
            for perm in component_automorphisms(rs, &comp) {
                let positions: Option<BTreeSet<usize>> = local
                    .iter()
                    .map(|lw| {
                        let mut w = vec![0; rs.rank()];
                        for (k, &c) in lw.iter().enumerate() {
                            w[comp.roots[perm[k]]] = c;
                        }
                        sys.position_of(&w)
                    })
                    .collect();
                let Some(positions) = positions else { continue };
                if kind == TailKind::B && !b_side_condition(sys, &comp, &perm, m.unwrap()) {
                    continue;
                }
                let key = (kind, m, positions);
                if !candidates.contains(&key) {
                    candidates.push(key);
                }
            }
        }
    }
    if candidates.is_empty() {
        return Ok(vec![]);
    }
    let profiles = profiles(sys, colors, max_colors)?;
    let mut tails = Vec::new();
    for (kind, m, roots) in candidates {
        let target: BTreeSet<Weight> = roots.iter().map(|&j| sys.sigma()[j].clone()).collect();
        // The empty subset has Σ/∅ = Σ; include it for tails covering all of Σ.
        let witness = if target.len() == sys.rank() {
            Some(BTreeSet::new())
        } else {
            profiles.iter().find(|p| p.sigma == target).map(|p| p.subset.clone())
        };
        if let Some(subset) = witness {
            let certificate = is_distinguished(colors, &subset).expect("profiles are distinguished");
            tails.push(Tail {
                kind,
                m,
                roots,
                witness: DistinguishedSubset { subset, certificate },
            });
        }
    }
    Ok(tails)
}

fn component_automorphisms(rs: &crate::rootsystem::RootSystem, comp: &Component) -> Vec<Vec<usize>> {
    let local: Vec<Vec<i64>> = comp
        .roots
        .iter()
        .map(|&i| comp.roots.iter().map(|&j| rs.cartan()[i][j]).collect())
        .collect();
    matrix_automorphisms(&local)
}

/// `alpha_n ∈ Sp` for `m > 1`; for `m = 1` the two colors of `A(alpha_n)`
/// pair identically with `Σ`.
fn b_side_condition(sys: &SphericalSystem, comp: &Component, perm: &[usize], m: usize) -> bool {
    let last = comp.roots[perm[comp.rank - 1]];
    if m > 1 {
        return sys.sp().contains(&last);
    }
    match sys.a_of(last).as_slice() {
        [d, e] => sys.a_rows()[*d].values == sys.a_rows()[*e].values,
        _ => false,
    }
}

/// The localization at the support of the spherical roots outside the tail.
pub fn strip_tail(sys: &SphericalSystem, tail: &Tail, table: &RankOneTable) -> Result<SphericalSystem> {
    if tail.roots.iter().any(|&j| j >= sys.rank()) {
        return Err(Error::Precondition("the tail does not belong to this system".into()));
    }
    let rest: BTreeSet<usize> = (0..sys.rank())
        .filter(|j| !tail.roots.contains(j))
        .flat_map(|j| sys.sigma()[j].support())
        .collect();
    localize(sys, &rest, table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quotient::{quotient, DEFAULT_MAX_COLORS};
    use crate::reduction::tests::sys;

    fn tails_of(s: &SphericalSystem) -> Vec<String> {
        let c = s.colors().unwrap();
        find_tails(s, &c, DEFAULT_MAX_COLORS).unwrap().iter().map(Tail::name).collect()
    }

    #[test]
    fn pattern_shapes() {
        let b = patterns(DynkinType::B, 4);
        assert_eq!(b[2], (TailKind::B, Some(2), vec![vec![0, 0, 1, 1]]));
        assert_eq!(b[3], (TailKind::TwoB, Some(2), vec![vec![0, 0, 2, 2]]));
        let c = patterns(DynkinType::C, 4);
        assert_eq!(c[0].2, vec![vec![0, 0, 1, 1]]);
        assert_eq!(c[2].2, vec![vec![1, 2, 2, 1]]);
        let d = patterns(DynkinType::D, 5);
        assert_eq!(d[0].2, vec![vec![0, 0, 0, 1, 1]]);
        assert_eq!(d[1].2, vec![vec![0, 0, 2, 1, 1]]);
        assert_eq!(d[3].2, vec![vec![2, 2, 2, 1, 1]]);
        assert!(patterns(DynkinType::A, 3).is_empty());
        assert!(patterns(DynkinType::G, 2).is_empty());
    }

    #[test]
    fn two_b_tail_in_b4() {
        let s = sys("B4", &[3], &[&[1, 0, 0, 0], &[0, 0, 2, 2]], &[("D+", &[1, 0]), ("D-", &[1, 0])]);
        let t = RankOneTable::builtin();
        assert!(s.validate(&t).is_valid(), "{}", s.validate(&t).summary());
        let c = s.colors().unwrap();
        let tails = find_tails(&s, &c, DEFAULT_MAX_COLORS).unwrap();
        let tail = tails.iter().find(|t| t.name() == "2b(2)").unwrap();
        let q = quotient(&s, &c, &tail.witness.subset, &t).unwrap();
        assert_eq!(q.quotient.sigma(), &[Weight::new(vec![0, 0, 2, 2])]);
        let stripped = strip_tail(&s, tail, &t).unwrap();
        assert_eq!(stripped.root_system().name(), "A1");
        assert_eq!(stripped.rank(), 1);
    }

    #[test]
    fn rank_one_a1_has_no_tails() {
        assert!(tails_of(&sys("A1", &[], &[&[1]], &[("D+", &[1]), ("D-", &[1])])).is_empty());
    }

    #[test]
    fn aa_tail_in_e6() {
        let s = sys(
            "E6",
            &[],
            &[&[1, 0, 0, 0, 0, 1], &[0, 0, 1, 0, 1, 0], &[0, 1, 0, 0, 0, 0]],
            &[("D+", &[0, 0, 1]), ("D-", &[0, 0, 1])],
        );
        let t = RankOneTable::builtin();
        assert!(s.validate(&t).is_valid(), "{}", s.validate(&t).summary());
        assert!(tails_of(&s).contains(&"(aa,aa)".to_string()));
    }
}
