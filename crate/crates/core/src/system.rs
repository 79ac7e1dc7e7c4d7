//! Spherical systems, their axioms and their colors.
//!
//! ```
//! use std::collections::BTreeSet;
//! use wonder_systems::system::{ARow, SphericalSystem};
//! use wonder_systems::{RankOneTable, RootSystem, Weight};
//!
//! let rs = RootSystem::parse("A1").unwrap();
//! let sys = SphericalSystem::new(
//!     rs,
//!     BTreeSet::new(),
//!     vec![Weight::new(vec![1])],
//!     vec![ARow::new("D+", vec![1]), ARow::new("D-", vec![1])],
//! )
//! .unwrap();
//! assert!(sys.validate(&RankOneTable::builtin()).is_valid());
//! assert_eq!(sys.defect().unwrap(), 1);
//! ```

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::linalg;
use crate::rankone::RankOneTable;
use crate::rootsystem::{RootSystem, Weight};

/// A color of type `a` given by its pairing with the spherical roots.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ARow {
    pub name: String,
    pub values: Vec<i64>,
}

impl ARow {
    pub fn new(name: impl Into<String>, values: Vec<i64>) -> ARow {
        ARow {
            name: name.into(),
            values,
        }
    }
}

/// The triple `(Sp, Σ, A)` over a root system.
///
/// Construction only checks shapes; the axioms are checked by
/// [`SphericalSystem::validate`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SphericalSystem {
    rs: RootSystem,
    sp: BTreeSet<usize>,
    sigma: Vec<Weight>,
    a: Vec<ARow>,
}

impl SphericalSystem {
    pub fn new(rs: RootSystem, sp: BTreeSet<usize>, sigma: Vec<Weight>, a: Vec<ARow>) -> Result<Self> {
        let n = rs.rank();
        if let Some(&i) = sp.iter().find(|&&i| i >= n) {
            return Err(Error::IndexOutOfRange { index: i, rank: n });
        }
        if let Some(w) = sigma.iter().find(|w| w.len() != n) {
            return Err(Error::Structure(format!(
                "spherical root {w} has {} coefficients, expected {n}",
                w.len()
            )));
        }
        let mut names = BTreeSet::new();
        for row in &a {
            if row.values.len() != sigma.len() {
                return Err(Error::Structure(format!(
                    "row {} has {} entries, expected {}",
                    row.name,
                    row.values.len(),
                    sigma.len()
                )));
            }
            if row.name.is_empty() || row.name.contains(|c: char| c.is_whitespace() || c == ':' || c == '#') {
                return Err(Error::Structure(format!("bad color name {:?}", row.name)));
            }
            if !names.insert(row.name.as_str()) {
                return Err(Error::Structure(format!("duplicate color name {}", row.name)));
            }
        }
        Ok(SphericalSystem { rs, sp, sigma, a })
    }

    /// The system with no spherical roots and parabolic roots `sp`.
    pub fn rank_zero(rs: RootSystem, sp: BTreeSet<usize>) -> Result<Self> {
        SphericalSystem::new(rs, sp, vec![], vec![])
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn sp(&self) -> &BTreeSet<usize> {
        &self.sp
    }

    pub fn sigma(&self) -> &[Weight] {
        &self.sigma
    }

    pub fn a_rows(&self) -> &[ARow] {
        &self.a
    }

    /// Number of spherical roots.
    pub fn rank(&self) -> usize {
        self.sigma.len()
    }

    /// Position in `Σ` of the simple root `alpha_i`.
    pub fn simple_sigma(&self, i: usize) -> Option<usize> {
        self.sigma.iter().position(|w| w.as_simple_root() == Some(i))
    }

    /// Position in `Σ` of `2 alpha_i`.
    pub fn double_sigma(&self, i: usize) -> Option<usize> {
        self.sigma.iter().position(|w| w.as_double_simple_root() == Some(i))
    }

    pub fn position_of(&self, w: &[i64]) -> Option<usize> {
        self.sigma.iter().position(|s| s.coeffs() == w)
    }

    /// Indices of the rows of `A(alpha_i)`; empty unless `alpha_i ∈ Σ`.
    pub fn a_of(&self, i: usize) -> Vec<usize> {
        let Some(j) = self.simple_sigma(i) else {
            return vec![];
        };
        (0..self.a.len()).filter(|&d| self.a[d].values[j] == 1).collect()
    }

    /// The union of the supports of the spherical roots.
    pub fn support(&self) -> BTreeSet<usize> {
        self.sigma.iter().flat_map(|w| w.support()).collect()
    }

    /// `<alpha_i^∨, σ>` for every `σ ∈ Σ`.
    pub fn coroot_row(&self, i: usize) -> Vec<i64> {
        self.sigma.iter().map(|w| self.rs.coroot(i, w)).collect()
    }

    /// Checks all axioms and collects every violation.
    pub fn validate(&self, table: &RankOneTable) -> ValidationReport {
        self.check(Some(table))
    }

    /// Like [`SphericalSystem::validate`] but without axiom (S).
    pub fn validate_structure(&self) -> ValidationReport {
        self.check(None)
    }

    fn check(&self, table: Option<&RankOneTable>) -> ValidationReport {
        let n = self.rs.rank();
        let mut report = ValidationReport::default();
        let row_name = |d: usize| self.a[d].name.clone();

        let coeffs: Vec<Vec<i64>> = self.sigma.iter().map(|w| w.coeffs().to_vec()).collect();
        if linalg::rank(&coeffs) < self.sigma.len() {
            report.fail(Axiom::Independence, Witness::detail("the spherical roots are linearly dependent"));
        }

        let in_lattice: Vec<bool> = self
            .sigma
            .iter()
            .map(|w| w.is_nonnegative() && !w.is_zero())
            .collect();
        for (j, ok) in in_lattice.iter().enumerate() {
            if !ok {
                report.fail(
                    Axiom::Lattice,
                    Witness::detail("not a nonzero nonnegative combination of simple roots").sigma(j),
                );
            }
        }

        for (d, row) in self.a.iter().enumerate() {
            for (j, &c) in row.values.iter().enumerate() {
                if c > 1 {
                    report.fail(Axiom::A1, Witness::detail(format!("pairing {c} exceeds 1")).color(row_name(d)).sigma(j));
                } else if c == 1 && self.sigma[j].as_simple_root().is_none() {
                    report.fail(
                        Axiom::A1,
                        Witness::detail("pairing 1 with a spherical root that is not simple").color(row_name(d)).sigma(j),
                    );
                }
            }
        }

        for (j, w) in self.sigma.iter().enumerate() {
            let Some(i) = w.as_simple_root() else { continue };
            let rows = self.a_of(i);
            if rows.len() != 2 {
                report.fail(
                    Axiom::A2,
                    Witness::detail(format!("A(alpha) needs 2 elements, found {}", rows.len())).sigma(j).root(i),
                );
                continue;
            }
            let expected = self.coroot_row(i);
            for (k, e) in expected.iter().enumerate() {
                let sum = self.a[rows[0]].values[k] + self.a[rows[1]].values[k];
                if sum != *e {
                    report.fail(
                        Axiom::A2,
                        Witness::detail(format!("rows sum to {sum}, coroot pairing is {e}")).sigma(k).root(i),
                    );
                }
            }
        }

        for (d, row) in self.a.iter().enumerate() {
            let covered = row
                .values
                .iter()
                .zip(&self.sigma)
                .any(|(&c, w)| c == 1 && w.as_simple_root().is_some());
            if !covered {
                report.fail(Axiom::A3, Witness::detail("color lies in no A(alpha)").color(row_name(d)));
            }
        }

        for (j, w) in self.sigma.iter().enumerate() {
            let Some(i) = w.as_double_simple_root() else { continue };
            for (k, other) in self.sigma.iter().enumerate() {
                if k == j {
                    continue;
                }
                let p = self.rs.coroot(i, other);
                if p > 0 || p % 2 != 0 {
                    report.fail(
                        Axiom::Sigma1,
                        Witness::detail(format!("pairing {p} is not a nonpositive even integer")).sigma(k).root(i),
                    );
                }
            }
        }

        for i in 0..n {
            for k in i + 1..n {
                if !self.rs.orthogonal(i, k) {
                    continue;
                }
                let mut sum = vec![0; n];
                sum[i] = 1;
                sum[k] = 1;
                let in_sigma = self.position_of(&sum).is_some();
                let in_double = self.sigma.iter().any(|w| w.iter().zip(&sum).all(|(c, s)| 2 * c == *s));
                if !(in_sigma || in_double) {
                    continue;
                }
                for (j, w) in self.sigma.iter().enumerate() {
                    let (p, q) = (self.rs.coroot(i, w), self.rs.coroot(k, w));
                    if p != q {
                        report.fail(
                            Axiom::Sigma2,
                            Witness::detail(format!(
                                "pairings {p} and {q} differ for orthogonal roots alpha_{} and alpha_{}",
                                i + 1,
                                k + 1
                            ))
                            .sigma(j)
                            .root(i),
                        );
                    }
                }
            }
        }

        if let Some(table) = table {
            report.verdicts.entry(Axiom::S).or_default();
            for (j, w) in self.sigma.iter().enumerate() {
                if !in_lattice[j] {
                    continue;
                }
                let detail = match table.requirement(&self.rs, w) {
                    None => "no rank-one entry matches this weight".to_string(),
                    Some(req) if !req.accepts(&self.sp) => {
                        let show = |s: &BTreeSet<usize>| {
                            s.iter().map(|i| (i + 1).to_string()).collect::<Vec<_>>().join(",")
                        };
                        format!(
                            "Sp must contain {{{}}} and avoid {{{}}}",
                            show(&req.contain),
                            show(&req.avoid)
                        )
                    }
                    Some(_) => continue,
                };
                report.fail(Axiom::S, Witness::detail(detail).sigma(j));
            }
        }
        for ax in Axiom::ALL {
            if ax != Axiom::S || table.is_some() {
                report.verdicts.entry(ax).or_default();
            }
        }
        report
    }

    /// The colors of a system satisfying the axioms other than (S).
    pub fn colors(&self) -> Result<ColorSet> {
        let report = self.validate_structure();
        if !report.is_valid() {
            return Err(Error::Invalid(report.summary()));
        }
        let n = self.rs.rank();
        let mut colors: Vec<Color> = self
            .a
            .iter()
            .enumerate()
            .map(|(d, row)| Color {
                name: row.name.clone(),
                kind: ColorKind::A { row: d },
            })
            .collect();
        let mut delta_of: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];

        for i in 0..n {
            if self.sp.contains(&i) || self.simple_sigma(i).is_some() || self.double_sigma(i).is_none() {
                continue;
            }
            delta_of[i].insert(colors.len());
            colors.push(Color {
                name: format!("2a{}", i + 1),
                kind: ColorKind::TwoA { root: i },
            });
        }

        let b_roots: Vec<usize> = (0..n)
            .filter(|&i| !self.sp.contains(&i) && self.simple_sigma(i).is_none() && self.double_sigma(i).is_none())
            .collect();
        let mut class_of: BTreeMap<usize, usize> = b_roots.iter().map(|&i| (i, i)).collect();
        for &i in &b_roots {
            for &k in &b_roots {
                if i < k && self.rs.orthogonal(i, k) {
                    let mut sum = vec![0; n];
                    sum[i] = 1;
                    sum[k] = 1;
                    if self.position_of(&sum).is_some() {
                        let (ri, rk) = (find(&mut class_of, i), find(&mut class_of, k));
                        let (lo, hi) = (ri.min(rk), ri.max(rk));
                        class_of.insert(hi, lo);
                    }
                }
            }
        }
        let mut classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for &i in &b_roots {
            let r = find(&mut class_of, i);
            classes.entry(r).or_default().push(i);
        }
        for roots in classes.into_values() {
            let name = format!(
                "b{}",
                roots.iter().map(|i| (i + 1).to_string()).collect::<Vec<_>>().join("+")
            );
            for &i in &roots {
                delta_of[i].insert(colors.len());
            }
            colors.push(Color {
                name,
                kind: ColorKind::B { roots },
            });
        }

        for i in 0..n {
            if !self.sp.contains(&i) && self.simple_sigma(i).is_some() {
                delta_of[i] = self.a_of(i).into_iter().collect();
            }
        }

        let mut names = BTreeSet::new();
        for c in &colors {
            if !names.insert(c.name.as_str()) {
                return Err(Error::Structure(format!(
                    "color name {} is used both by a row of A and by a derived color",
                    c.name
                )));
            }
        }

        let mut pairing = Vec::with_capacity(colors.len());
        for c in &colors {
            let row = match &c.kind {
                ColorKind::A { row } => self.a[*row].values.clone(),
                ColorKind::TwoA { root } => self.coroot_row(*root).into_iter().map(|p| p / 2).collect(),
                ColorKind::B { roots } => {
                    let row = self.coroot_row(roots[0]);
                    if roots[1..].iter().any(|&r| self.coroot_row(r) != row) {
                        return Err(Error::Consistency(format!(
                            "roots of the color {} pair differently with the spherical roots",
                            c.name
                        )));
                    }
                    row
                }
            };
            pairing.push(row);
        }

        Ok(ColorSet {
            colors,
            delta_of,
            pairing,
        })
    }

    /// The full Cartan pairing, colors by spherical roots.
    pub fn full_pairing(&self) -> Result<Vec<Vec<i64>>> {
        Ok(self.colors()?.pairing)
    }

    /// Number of colors minus number of spherical roots.
    pub fn defect(&self) -> Result<i64> {
        Ok(self.colors()?.len() as i64 - self.sigma.len() as i64)
    }

    /// The same system with `Σ` and `A` reordered and the simple roots
    /// moved by `perm` (old index to new index). Row names are kept.
    pub fn relabeled(&self, perm: &[usize], sigma_order: &[usize], row_order: &[usize]) -> SphericalSystem {
        let sp = self.sp.iter().map(|&i| perm[i]).collect();
        let sigma = sigma_order.iter().map(|&j| self.sigma[j].permuted(perm)).collect();
        let a = row_order
            .iter()
            .map(|&d| ARow {
                name: self.a[d].name.clone(),
                values: sigma_order.iter().map(|&j| self.a[d].values[j]).collect(),
            })
            .collect();
        SphericalSystem {
            rs: self.rs.clone(),
            sp,
            sigma,
            a,
        }
    }
}

fn find(parent: &mut BTreeMap<usize, usize>, i: usize) -> usize {
    let p = parent[&i];
    if p == i {
        return i;
    }
    let r = find(parent, p);
    parent.insert(i, r);
    r
}

/// The axioms checked by [`SphericalSystem::validate`], in report order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axiom {
    Independence,
    Lattice,
    A1,
    A2,
    A3,
    Sigma1,
    Sigma2,
    S,
}

impl Axiom {
    pub const ALL: [Axiom; 8] = [
        Axiom::Independence,
        Axiom::Lattice,
        Axiom::A1,
        Axiom::A2,
        Axiom::A3,
        Axiom::Sigma1,
        Axiom::Sigma2,
        Axiom::S,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Axiom::Independence => "independence",
            Axiom::Lattice => "lattice",
            Axiom::A1 => "A1",
            Axiom::A2 => "A2",
            Axiom::A3 => "A3",
            Axiom::Sigma1 => "Sigma1",
            Axiom::Sigma2 => "Sigma2",
            Axiom::S => "S",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Where an axiom fails: a color, a spherical root (by position) and a
/// simple root, whichever apply.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub color: Option<String>,
    pub sigma: Option<usize>,
    pub root: Option<usize>,
    pub detail: String,
}

impl Witness {
    fn detail(detail: impl Into<String>) -> Witness {
        Witness {
            color: None,
            sigma: None,
            root: None,
            detail: detail.into(),
        }
    }

    fn color(mut self, name: String) -> Witness {
        self.color = Some(name);
        self
    }

    fn sigma(mut self, j: usize) -> Witness {
        self.sigma = Some(j);
        self
    }

    fn root(mut self, i: usize) -> Witness {
        self.root = Some(i);
        self
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if let Some(c) = &self.color {
            parts.push(format!("color={c}"));
        }
        if let Some(j) = self.sigma {
            parts.push(format!("sigma={}", j + 1));
        }
        if let Some(i) = self.root {
            parts.push(format!("root={}", i + 1));
        }
        write!(f, "[{}] {}", parts.join(" "), self.detail)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    verdicts: BTreeMap<Axiom, Vec<Witness>>,
}

impl ValidationReport {
    fn fail(&mut self, axiom: Axiom, w: Witness) {
        self.verdicts.entry(axiom).or_default().push(w);
    }

    pub fn is_valid(&self) -> bool {
        self.verdicts.values().all(Vec::is_empty)
    }

    /// Whether `axiom` was checked and holds.
    pub fn passes(&self, axiom: Axiom) -> bool {
        self.verdicts.get(&axiom).is_some_and(Vec::is_empty)
    }

    pub fn witnesses(&self, axiom: Axiom) -> &[Witness] {
        self.verdicts.get(&axiom).map_or(&[], Vec::as_slice)
    }

    pub fn failing(&self) -> Vec<Axiom> {
        self.verdicts
            .iter()
            .filter(|(_, w)| !w.is_empty())
            .map(|(a, _)| *a)
            .collect()
    }

    /// Checked axioms with their witnesses, in report order.
    pub fn verdicts(&self) -> impl Iterator<Item = (Axiom, &[Witness])> {
        self.verdicts.iter().map(|(a, w)| (*a, w.as_slice()))
    }

    pub fn summary(&self) -> String {
        let failing = self.failing();
        if failing.is_empty() {
            return "all axioms hold".into();
        }
        failing
            .iter()
            .map(|a| format!("{a} fails {}", self.witnesses(*a)[0]))
            .collect::<Vec<_>>()
            .join("; ")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ColorKind {
    A { row: usize },
    TwoA { root: usize },
    B { roots: Vec<usize> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Color {
    pub name: String,
    pub kind: ColorKind,
}

impl Color {
    pub fn kind_name(&self) -> &'static str {
        match self.kind {
            ColorKind::A { .. } => "a",
            ColorKind::TwoA { .. } => "2a",
            ColorKind::B { .. } => "b",
        }
    }
}

/// The colors `Δ` with `Δ(alpha)` and the full Cartan pairing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorSet {
    pub colors: Vec<Color>,
    /// `Δ(alpha_i)` as indices into `colors`.
    pub delta_of: Vec<BTreeSet<usize>>,
    /// `c(D, σ)`, colors by spherical roots.
    pub pairing: Vec<Vec<i64>>,
}

impl ColorSet {
    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.colors.iter().position(|c| c.name == name)
    }

    /// Indices of the named colors.
    pub fn select(&self, names: &[&str]) -> Result<BTreeSet<usize>> {
        names
            .iter()
            .map(|n| {
                self.index_of(n)
                    .ok_or_else(|| Error::Precondition(format!("no color named {n}")))
            })
            .collect()
    }

    pub fn names(&self, subset: &BTreeSet<usize>) -> Vec<&str> {
        subset.iter().map(|&d| self.colors[d].name.as_str()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(group: &str, sp: &[usize], sigma: &[&[i64]], rows: &[(&str, &[i64])]) -> SphericalSystem {
        SphericalSystem::new(
            RootSystem::parse(group).unwrap(),
            sp.iter().copied().collect(),
            sigma.iter().map(|w| Weight::new(w.to_vec())).collect(),
            rows.iter().map(|(n, v)| ARow::new(*n, v.to_vec())).collect(),
        )
        .unwrap()
    }

    fn table() -> RankOneTable {
        RankOneTable::builtin()
    }

    fn a2_system() -> SphericalSystem {
        sys(
            "A2",
            &[],
            &[&[1, 0], &[0, 1]],
            &[("D1+", &[1, 0]), ("D1-", &[1, -1]), ("D2+", &[0, 1]), ("D2-", &[-1, 1])],
        )
    }

    #[test]
    fn rank_one_a1_is_valid() {
        let s = sys("A1", &[], &[&[1]], &[("D+", &[1]), ("D-", &[1])]);
        let r = s.validate(&table());
        assert!(r.is_valid(), "{}", r.summary());
        assert_eq!(r.verdicts().count(), 8);
        assert_eq!(s.full_pairing().unwrap(), vec![vec![1], vec![1]]);
        assert_eq!(s.defect().unwrap(), 1);
    }

    #[test]
    fn single_row_fails_a2_only() {
        let s = sys("A1", &[], &[&[1]], &[("D+", &[1])]);
        assert_eq!(s.validate(&table()).failing(), vec![Axiom::A2]);
    }

    #[test]
    fn a2_system_is_valid() {
        let r = a2_system().validate(&table());
        assert!(r.is_valid(), "{}", r.summary());
    }

    #[test]
    fn spurious_row_fails_a3() {
        let s = sys("A1xA1", &[], &[&[1, 1]], &[("X", &[0])]);
        assert_eq!(s.validate(&table()).failing(), vec![Axiom::A3]);
    }

    #[test]
    fn rank_zero_colors() {
        let s = sys("A1", &[], &[], &[]);
        let c = s.colors().unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c.colors[0].kind, ColorKind::B { roots: vec![0] });
        assert_eq!(s.defect().unwrap(), 1);
    }

    #[test]
    fn orthogonal_pair_shares_one_color() {
        let s = sys("A1xA1", &[], &[&[1, 1]], &[]);
        let c = s.colors().unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c.colors[0].name, "b1+2");
        assert_eq!(c.pairing, vec![vec![2]]);
        assert_eq!(c.delta_of, vec![BTreeSet::from([0]), BTreeSet::from([0])]);
        assert_eq!(s.defect().unwrap(), 0);
    }

    #[test]
    fn doubled_root_gives_2a_color() {
        let s = sys("A1", &[], &[&[2]], &[]);
        let c = s.colors().unwrap();
        assert_eq!(c.colors[0].kind, ColorKind::TwoA { root: 0 });
        assert_eq!(c.pairing, vec![vec![2]]);
    }

    #[test]
    fn delta_of_is_empty_exactly_on_sp() {
        let s = sys("B3", &[1, 2], &[&[2, 2, 2]], &[]);
        assert!(s.validate(&table()).is_valid());
        let c = s.colors().unwrap();
        for i in 0..3 {
            assert_eq!(c.delta_of[i].is_empty(), s.sp().contains(&i));
        }
    }

    #[test]
    fn name_collision_is_an_error() {
        let s = sys("A1xA1", &[], &[&[1, 0]], &[("b2", &[1]), ("D-", &[1])]);
        assert!(matches!(s.colors(), Err(Error::Structure(_))));
    }

    #[test]
    fn construction_rejects_bad_shapes() {
        let rs = RootSystem::parse("A2").unwrap();
        assert!(SphericalSystem::new(rs.clone(), [5].into(), vec![], vec![]).is_err());
        assert!(SphericalSystem::new(rs.clone(), [].into(), vec![Weight::new(vec![1])], vec![]).is_err());
        let rows = vec![ARow::new("D", vec![1]), ARow::new("D", vec![1])];
        assert!(SphericalSystem::new(rs, [].into(), vec![Weight::new(vec![1, 0])], rows).is_err());
    }

    #[test]
    fn report_lists_witnesses() {
        let s = sys("A2", &[], &[&[1, 2]], &[]);
        let r = s.validate(&table());
        assert_eq!(r.failing(), vec![Axiom::S]);
        assert_eq!(r.witnesses(Axiom::S)[0].sigma, Some(0));
    }
}
