//! Semisimple root systems given by products of Dynkin types.
//!
//! Simple roots are numbered globally and 0-based in the API; each factor
//! occupies a consecutive block in Bourbaki order. Text surfaces (group specs
//! aside) use 1-based indices.
//!
//! ```
//! use wonder_systems::rootsystem::RootSystem;
//!
//! let rs = RootSystem::parse("B4").unwrap();
//! assert_eq!(rs.cartan()[2][3], -1); // long alpha_3 against short alpha_4
//! assert_eq!(rs.cartan()[3][2], -2);
//! ```

use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Deref};

use crate::error::{Error, Result};

/// The seven families of connected Dynkin diagrams.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DynkinType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl DynkinType {
    pub fn letter(self) -> char {
        match self {
            DynkinType::A => 'A',
            DynkinType::B => 'B',
            DynkinType::C => 'C',
            DynkinType::D => 'D',
            DynkinType::E => 'E',
            DynkinType::F => 'F',
            DynkinType::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Self> {
        Some(match c.to_ascii_uppercase() {
            'A' => DynkinType::A,
            'B' => DynkinType::B,
            'C' => DynkinType::C,
            'D' => DynkinType::D,
            'E' => DynkinType::E,
            'F' => DynkinType::F,
            'G' => DynkinType::G,
            _ => return None,
        })
    }

    /// Whether a connected diagram of this type exists in the given rank.
    pub fn admits_rank(self, rank: usize) -> bool {
        match self {
            DynkinType::A => rank >= 1,
            DynkinType::B | DynkinType::C | DynkinType::D => rank >= 2,
            DynkinType::E => (6..=8).contains(&rank),
            DynkinType::F => rank == 4,
            DynkinType::G => rank == 2,
        }
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// One simple factor `X_n` of a group specification.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Factor {
    pub kind: DynkinType,
    pub rank: usize,
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.kind, self.rank)
    }
}

/// An ordered product of simple Dynkin types, e.g. `A1xC3`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupSpec {
    pub factors: Vec<Factor>,
}

impl GroupSpec {
    /// Parses `TYPE RANK ("x" TYPE RANK)*`, case-insensitively and ignoring
    /// whitespace. A lone `-` is the trivial group.
    pub fn parse(text: &str) -> Result<GroupSpec> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let malformed = |reason: &str| Error::GroupSpec {
            text: text.to_string(),
            reason: reason.to_string(),
        };
        if compact == "-" {
            return Ok(GroupSpec { factors: vec![] });
        }
        if compact.is_empty() {
            return Err(malformed("empty"));
        }
        let mut factors = Vec::new();
        for part in compact.split(['x', 'X', '×']) {
            let mut chars = part.chars();
            let letter = chars.next().ok_or_else(|| malformed("missing factor"))?;
            let kind = DynkinType::from_letter(letter)
                .ok_or_else(|| malformed(&format!("unknown type letter {letter:?}")))?;
            let digits = chars.as_str();
            if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) {
                return Err(malformed(&format!("bad rank in factor {part:?}")));
            }
            let rank: usize = digits
                .parse()
                .map_err(|_| malformed(&format!("bad rank in factor {part:?}")))?;
            if !kind.admits_rank(rank) {
                return Err(Error::RankOutOfRange {
                    factor: part.to_string(),
                    kind: kind.letter(),
                    rank,
                });
            }
            factors.push(Factor { kind, rank });
        }
        Ok(GroupSpec { factors })
    }

    pub fn rank(&self) -> usize {
        self.factors.iter().map(|f| f.rank).sum()
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "-");
        }
        let parts: Vec<String> = self.factors.iter().map(Factor::to_string).collect();
        write!(f, "{}", parts.join("x"))
    }
}

/// An integer vector of simple-root coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn new(coeffs: Vec<i64>) -> Self {
        Weight(coeffs)
    }

    pub fn zero(n: usize) -> Self {
        Weight(vec![0; n])
    }

    /// The simple root with index `i` in rank `n`.
    pub fn simple(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        Weight(v)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn into_coeffs(self) -> Vec<i64> {
        self.0
    }

    pub fn support(&self) -> BTreeSet<usize> {
        support(self)
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// True for elements of the monoid spanned by the simple roots.
    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    /// `Some(i)` if this is the simple root `alpha_i`.
    pub fn as_simple_root(&self) -> Option<usize> {
        let mut found = None;
        for (i, &c) in self.0.iter().enumerate() {
            match c {
                0 => {}
                1 if found.is_none() => found = Some(i),
                _ => return None,
            }
        }
        found
    }

    /// `Some(i)` if this is `2 alpha_i`.
    pub fn as_double_simple_root(&self) -> Option<usize> {
        let mut found = None;
        for (i, &c) in self.0.iter().enumerate() {
            match c {
                0 => {}
                2 if found.is_none() => found = Some(i),
                _ => return None,
            }
        }
        found
    }

    pub fn scaled(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|&c| c * k).collect())
    }

    /// Relabels coordinates: entry `i` moves to `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Weight {
        let mut v = vec![0; self.0.len()];
        for (i, &c) in self.0.iter().enumerate() {
            v[perm[i]] = c;
        }
        Weight(v)
    }
}

impl Deref for Weight {
    type Target = [i64];
    fn deref(&self) -> &[i64] {
        &self.0
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl fmt::Display for Weight {
    /// Writes e.g. `a1+2a3`, or `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else if first { "" } else { "+" };
            let mag = c.unsigned_abs();
            if mag == 1 {
                write!(f, "{sign}a{}", i + 1)?;
            } else {
                write!(f, "{sign}{mag}a{}", i + 1)?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Indices of the nonzero coefficients of `w`.
pub fn support(w: &[i64]) -> BTreeSet<usize> {
    w.iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, _)| i)
        .collect()
}

/// A connected piece of a Dynkin diagram, typed, with its roots listed in
/// Bourbaki order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Component {
    pub kind: DynkinType,
    pub rank: usize,
    pub roots: Vec<usize>,
}

impl Component {
    pub fn factor(&self) -> Factor {
        Factor {
            kind: self.kind,
            rank: self.rank,
        }
    }
}

/// A semisimple root system with its Cartan matrix.
///
/// Equality ignores how the input was labeled: `D3` and `A3` give equal
/// root systems.
#[derive(Debug, Clone)]
pub struct RootSystem {
    spec: GroupSpec,
    cartan: Vec<Vec<i64>>,
    component_of: Vec<usize>,
    offsets: Vec<usize>,
    input_labels: Vec<usize>,
}

impl PartialEq for RootSystem {
    fn eq(&self, other: &Self) -> bool {
        self.spec == other.spec
    }
}

impl Eq for RootSystem {}

impl std::hash::Hash for RootSystem {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.spec.hash(state);
    }
}

impl RootSystem {
    /// Parses a group specification and builds its root system.
    ///
    /// `D2` and `D3` are replaced by `A1xA1` and `A3`; the index relabeling
    /// is available from [`RootSystem::input_label`].
    pub fn parse(text: &str) -> Result<RootSystem> {
        Ok(RootSystem::from_spec(&GroupSpec::parse(text)?))
    }

    pub fn from_spec(spec: &GroupSpec) -> RootSystem {
        let mut factors = Vec::new();
        let mut input_labels = Vec::new();
        for f in &spec.factors {
            let base: usize = factors.iter().map(|f: &Factor| f.rank).sum();
            match (f.kind, f.rank) {
                (DynkinType::D, 2) => {
                    factors.push(Factor { kind: DynkinType::A, rank: 1 });
                    factors.push(Factor { kind: DynkinType::A, rank: 1 });
                    input_labels.extend([base, base + 1]);
                }
                (DynkinType::D, 3) => {
                    // The branch node alpha_1 of D3 is the middle of A3.
                    factors.push(Factor { kind: DynkinType::A, rank: 3 });
                    input_labels.extend([base + 1, base, base + 2]);
                }
                _ => {
                    factors.push(*f);
                    input_labels.extend(base..base + f.rank);
                }
            }
        }
        let mut rs = RootSystem::from_factors(&factors);
        rs.input_labels = input_labels;
        rs
    }

    fn from_factors(factors: &[Factor]) -> RootSystem {
        let n: usize = factors.iter().map(|f| f.rank).sum();
        let mut cartan = vec![vec![0i64; n]; n];
        let mut component_of = vec![0; n];
        let mut offsets = Vec::with_capacity(factors.len());
        let mut base = 0;
        for (id, f) in factors.iter().enumerate() {
            offsets.push(base);
            let block = cartan_block(f.kind, f.rank);
            for i in 0..f.rank {
                component_of[base + i] = id;
                for j in 0..f.rank {
                    cartan[base + i][base + j] = block[i][j];
                }
            }
            base += f.rank;
        }
        RootSystem {
            spec: GroupSpec {
                factors: factors.to_vec(),
            },
            cartan,
            component_of,
            offsets,
            input_labels: (0..n).collect(),
        }
    }

    /// The (normalized) group specification.
    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn name(&self) -> String {
        self.spec.to_string()
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    /// `cartan()[i][j]` is the pairing of the coroot of `alpha_i` with `alpha_j`.
    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn component_of(&self, i: usize) -> usize {
        self.component_of[i]
    }

    /// Index of the first root of factor `id`.
    pub fn factor_offset(&self, id: usize) -> usize {
        self.offsets[id]
    }

    /// Canonical index of the root written as index `i` in the original
    /// specification (identity unless `D2`/`D3` were normalized).
    pub fn input_label(&self, i: usize) -> usize {
        self.input_labels[i]
    }

    /// Inverse of [`RootSystem::input_label`].
    pub fn output_label(&self, canonical: usize) -> usize {
        self.input_labels
            .iter()
            .position(|&c| c == canonical)
            .expect("input labels form a permutation")
    }

    pub fn all_roots(&self) -> BTreeSet<usize> {
        (0..self.rank()).collect()
    }

    /// The pairing of the coroot of `alpha_i` with `w`.
    pub fn pairing(&self, i: usize, w: &[i64]) -> Result<i64> {
        if i >= self.rank() {
            return Err(Error::IndexOutOfRange {
                index: i,
                rank: self.rank(),
            });
        }
        Ok(self.coroot(i, w))
    }

    /// Unchecked version of [`RootSystem::pairing`].
    pub fn coroot(&self, i: usize, w: &[i64]) -> i64 {
        self.cartan[i].iter().zip(w).map(|(a, c)| a * c).sum()
    }

    /// Distinct roots with vanishing Cartan entry.
    pub fn orthogonal(&self, i: usize, j: usize) -> bool {
        i != j && self.cartan[i][j] == 0
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        i != j && self.cartan[i][j] != 0
    }

    /// Whether `alpha_i` is longer than its neighbour `alpha_j`.
    fn longer(&self, i: usize, j: usize) -> bool {
        self.cartan[i][j].abs() < self.cartan[j][i].abs()
    }

    /// Connected components of the subdiagram on `subset`, typed and listed
    /// in Bourbaki order, sorted by their smallest index.
    pub fn components(&self, subset: &BTreeSet<usize>) -> Vec<Component> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for &start in subset {
            if seen.contains(&start) {
                continue;
            }
            let mut nodes = vec![start];
            seen.insert(start);
            let mut k = 0;
            while k < nodes.len() {
                let v = nodes[k];
                for &u in subset {
                    if self.adjacent(v, u) && seen.insert(u) {
                        nodes.push(u);
                    }
                }
                k += 1;
            }
            nodes.sort_unstable();
            out.push(self.type_component(&nodes));
        }
        out
    }

    fn neighbours(&self, v: usize, nodes: &[usize]) -> Vec<usize> {
        nodes
            .iter()
            .copied()
            .filter(|&u| self.adjacent(v, u))
            .collect()
    }

    fn type_component(&self, nodes: &[usize]) -> Component {
        let n = nodes.len();
        if n == 1 {
            return Component {
                kind: DynkinType::A,
                rank: 1,
                roots: nodes.to_vec(),
            };
        }
        if let Some(&fork) = nodes.iter().find(|&&v| self.neighbours(v, nodes).len() == 3) {
            return self.type_forked(fork, nodes);
        }
        // A path. Walk it from the endpoint with the smaller index.
        let start = *nodes
            .iter()
            .find(|&&v| self.neighbours(v, nodes).len() == 1)
            .expect("a tree has a leaf");
        let mut path = vec![start];
        let mut prev = usize::MAX;
        let mut cur = start;
        while let Some(next) = self
            .neighbours(cur, nodes)
            .into_iter()
            .find(|&u| u != prev)
        {
            path.push(next);
            prev = cur;
            cur = next;
        }
        let bond = |k: usize| self.cartan[path[k]][path[k + 1]] * self.cartan[path[k + 1]][path[k]];
        let multiple = (0..n - 1).find(|&k| bond(k) > 1);
        let Some(k) = multiple else {
            return Component {
                kind: DynkinType::A,
                rank: n,
                roots: path,
            };
        };
        if bond(k) == 3 {
            let (a, b) = (path[0], path[1]);
            let roots = if self.longer(a, b) { vec![b, a] } else { vec![a, b] };
            return Component {
                kind: DynkinType::G,
                rank: 2,
                roots,
            };
        }
        if n == 4 && k == 1 {
            // F4: long roots first.
            if !self.longer(path[1], path[2]) {
                path.reverse();
            }
            return Component {
                kind: DynkinType::F,
                rank: 4,
                roots: path,
            };
        }
        if n > 2 && k == 0 {
            path.reverse();
        }
        let (last, before) = (path[n - 1], path[n - 2]);
        let kind = if self.longer(last, before) {
            DynkinType::C
        } else {
            DynkinType::B
        };
        Component {
            kind,
            rank: n,
            roots: path,
        }
    }

    fn type_forked(&self, fork: usize, nodes: &[usize]) -> Component {
        let mut branches: Vec<Vec<usize>> = self
            .neighbours(fork, nodes)
            .into_iter()
            .map(|first| {
                let mut branch = vec![first];
                let mut prev = fork;
                let mut cur = first;
                while let Some(next) = self
                    .neighbours(cur, nodes)
                    .into_iter()
                    .find(|&u| u != prev)
                {
                    branch.push(next);
                    prev = cur;
                    cur = next;
                }
                branch
            })
            .collect();
        branches.sort_by_key(|b| (b.len(), *b.last().unwrap()));
        let lens: Vec<usize> = branches.iter().map(Vec::len).collect();
        let n = nodes.len();
        match lens.as_slice() {
            [1, 1, k] => {
                let (long, leaves) = if *k == 1 {
                    (&branches[0], [branches[1][0], branches[2][0]])
                } else {
                    (&branches[2], [branches[0][0], branches[1][0]])
                };
                let mut roots: Vec<usize> = long.iter().rev().copied().collect();
                roots.push(fork);
                roots.extend(leaves);
                Component {
                    kind: DynkinType::D,
                    rank: n,
                    roots,
                }
            }
            [1, 2, _] => {
                let mut roots = vec![branches[1][1], branches[0][0], branches[1][0], fork];
                roots.extend(&branches[2]);
                Component {
                    kind: DynkinType::E,
                    rank: n,
                    roots,
                }
            }
            _ => panic!("subdiagram with branch lengths {lens:?} is not of finite type"),
        }
    }

    /// The root system of the subdiagram on `subset` and the map from old
    /// to new indices (`None` outside `subset`).
    ///
    /// New indices follow the Bourbaki order of each component, components
    /// sorted by their smallest old index.
    pub fn sub_root_system(&self, subset: &BTreeSet<usize>) -> (RootSystem, Vec<Option<usize>>) {
        let comps = self.components(subset);
        let factors: Vec<Factor> = comps.iter().map(Component::factor).collect();
        let sub = RootSystem::from_factors(&factors);
        let mut map = vec![None; self.rank()];
        let mut next = 0;
        for c in &comps {
            for &r in &c.roots {
                map[r] = Some(next);
                next += 1;
            }
        }
        debug_assert!(subset.iter().all(|&i| subset.iter().all(|&j| {
            sub.cartan[map[i].unwrap()][map[j].unwrap()] == self.cartan[i][j]
        })));
        (sub, map)
    }

    /// All permutations of the simple roots preserving the Cartan matrix,
    /// as maps `old index -> new index`. The identity comes first.
    pub fn automorphisms(&self) -> Vec<Vec<usize>> {
        matrix_automorphisms(&self.cartan)
    }
}

/// Permutations `p` of `0..n` with `m[p[i]][p[j]] == m[i][j]` for all `i, j`,
/// identity first.
pub fn matrix_automorphisms(m: &[Vec<i64>]) -> Vec<Vec<usize>> {
    fn extend(
        m: &[Vec<i64>],
        i: usize,
        perm: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let n = m.len();
        if i == n {
            out.push(perm.clone());
            return;
        }
        for t in 0..n {
            if used[t] || m[i][i] != m[t][t] {
                continue;
            }
            let ok = (0..i).all(|j| m[i][j] == m[t][perm[j]] && m[j][i] == m[perm[j]][t]);
            if ok {
                perm[i] = t;
                used[t] = true;
                extend(m, i + 1, perm, used, out);
                used[t] = false;
            }
        }
    }
    let n = m.len();
    let mut out = Vec::new();
    extend(m, 0, &mut vec![usize::MAX; n], &mut vec![false; n], &mut out);
    out
}

impl fmt::Display for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.spec)
    }
}

/// Bourbaki Cartan matrix of a connected type.
pub fn cartan_block(kind: DynkinType, n: usize) -> Vec<Vec<i64>> {
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize, aij: i64, aji: i64| {
        a[i][j] = aij;
        a[j][i] = aji;
    };
    match kind {
        DynkinType::A => (0..n.saturating_sub(1)).for_each(|i| link(i, i + 1, -1, -1)),
        DynkinType::B => {
            (0..n - 2).for_each(|i| link(i, i + 1, -1, -1));
            link(n - 2, n - 1, -1, -2);
        }
        DynkinType::C => {
            (0..n - 2).for_each(|i| link(i, i + 1, -1, -1));
            link(n - 2, n - 1, -2, -1);
        }
        DynkinType::D => {
            (0..n - 2).for_each(|i| link(i, i + 1, -1, -1));
            link(n - 3, n - 1, -1, -1);
        }
        DynkinType::E => {
            link(0, 2, -1, -1);
            link(1, 3, -1, -1);
            (2..n - 1).for_each(|i| link(i, i + 1, -1, -1));
        }
        DynkinType::F => {
            link(0, 1, -1, -1);
            link(1, 2, -1, -2);
            link(2, 3, -1, -1);
        }
        DynkinType::G => link(0, 1, -3, -1),
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(xs: &[usize]) -> BTreeSet<usize> {
        xs.iter().copied().collect()
    }

    #[test]
    fn parse_a1() {
        let rs = RootSystem::parse("A1").unwrap();
        assert_eq!(rs.rank(), 1);
        assert_eq!(rs.cartan(), &[vec![2]]);
    }

    #[test]
    fn parse_b4_short_last_root() {
        let rs = RootSystem::parse("B4").unwrap();
        assert_eq!(rs.cartan()[2][3], -1);
        assert_eq!(rs.cartan()[3][2], -2);
    }

    #[test]
    fn parse_a1_c3() {
        let rs = RootSystem::parse("A1xC3").unwrap();
        assert_eq!(rs.rank(), 4);
        assert_eq!(rs.cartan()[0][1], 0);
        assert_eq!(rs.cartan()[2][3], -2);
        assert_eq!(rs.cartan()[3][2], -1);
    }

    #[test]
    fn parse_is_lenient_about_case_and_spaces() {
        let rs = RootSystem::parse(" a2 x g2 ").unwrap();
        assert_eq!(rs.name(), "A2xG2");
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert!(matches!(
            RootSystem::parse("E9"),
            Err(Error::RankOutOfRange { rank: 9, .. })
        ));
        assert!(matches!(RootSystem::parse("F3"), Err(Error::RankOutOfRange { .. })));
        assert!(matches!(RootSystem::parse("A0"), Err(Error::RankOutOfRange { .. })));
        assert!(matches!(RootSystem::parse("H3"), Err(Error::GroupSpec { .. })));
        assert!(matches!(RootSystem::parse("A1x"), Err(Error::GroupSpec { .. })));
        assert!(matches!(RootSystem::parse(""), Err(Error::GroupSpec { .. })));
        assert!(matches!(RootSystem::parse("A"), Err(Error::GroupSpec { .. })));
    }

    #[test]
    fn d2_and_d3_are_normalized() {
        let d2 = RootSystem::parse("D2").unwrap();
        assert_eq!(d2.name(), "A1xA1");
        let d3 = RootSystem::parse("D3").unwrap();
        assert_eq!(d3.name(), "A3");
        // alpha_1 of D3 is the branch node, i.e. the middle of A3.
        assert_eq!(d3.input_label(0), 1);
        assert_eq!(d3.input_label(1), 0);
        assert_eq!(d3.input_label(2), 2);
        let mixed = RootSystem::parse("A1xD3").unwrap();
        assert_eq!(mixed.input_label(1), 2);
    }

    #[test]
    fn pairing_examples() {
        let a1 = RootSystem::parse("A1").unwrap();
        assert_eq!(a1.pairing(0, &[1]).unwrap(), 2);
        let a2 = RootSystem::parse("A2").unwrap();
        assert_eq!(a2.pairing(0, &[1, 1]).unwrap(), 1);
        let b2 = RootSystem::parse("B2").unwrap();
        assert_eq!(b2.pairing(1, &[1, 1]).unwrap(), 0);
        assert!(matches!(
            a2.pairing(2, &[1, 1]),
            Err(Error::IndexOutOfRange { index: 2, rank: 2 })
        ));
    }

    #[test]
    fn support_examples() {
        assert!(support(&[0, 0]).is_empty());
        assert_eq!(support(&[0, 0, 2, 2]), set(&[2, 3]));
        assert_eq!(support(&[1, 2, 1]), set(&[0, 1, 2]));
    }

    #[test]
    fn components_examples() {
        let b4 = RootSystem::parse("B4").unwrap();
        let c = b4.components(&set(&[0, 1, 2]));
        assert_eq!(c.len(), 1);
        assert_eq!((c[0].kind, c[0].rank, c[0].roots.clone()), (DynkinType::A, 3, vec![0, 1, 2]));
        let c = b4.components(&set(&[1, 2, 3]));
        assert_eq!((c[0].kind, c[0].rank, c[0].roots.clone()), (DynkinType::B, 3, vec![1, 2, 3]));
        let f4 = RootSystem::parse("F4").unwrap();
        let c = f4.components(&set(&[0, 1]));
        assert_eq!((c[0].kind, c[0].rank), (DynkinType::A, 2));
        // Two short roots and a long one.
        let c = f4.components(&set(&[1, 2, 3]));
        assert_eq!((c[0].kind, c[0].roots.clone()), (DynkinType::C, vec![3, 2, 1]));
    }

    #[test]
    fn components_of_exceptional_subdiagrams() {
        let e8 = RootSystem::parse("E8").unwrap();
        let c = e8.components(&set(&[0, 1, 2, 3, 4]));
        assert_eq!((c[0].kind, c[0].rank), (DynkinType::D, 5));
        assert_eq!(c[0].roots, vec![0, 2, 3, 1, 4]);
        let c = e8.components(&set(&[1, 2, 3, 4, 5]));
        assert_eq!(c[0].roots, vec![5, 4, 3, 1, 2]);
        let e7 = RootSystem::parse("E7").unwrap();
        let c = e7.components(&set(&[0, 1, 2, 3, 4, 5]));
        assert_eq!((c[0].kind, c[0].roots.clone()), (DynkinType::E, vec![0, 1, 2, 3, 4, 5]));
        let g2 = RootSystem::parse("G2").unwrap();
        assert_eq!(g2.components(&set(&[0, 1]))[0].roots, vec![0, 1]);
    }

    #[test]
    fn components_of_whole_diagram_are_the_factors() {
        for text in ["A1xA1", "A4", "B2", "C2", "B5", "C4", "D4", "D6", "E6", "E7", "E8", "F4", "G2", "A2xB3xG2"] {
            let rs = RootSystem::parse(text).unwrap();
            let comps = rs.components(&rs.all_roots());
            let factors: Vec<Factor> = comps.iter().map(Component::factor).collect();
            assert_eq!(factors, rs.spec().factors, "{text}");
            for (id, c) in comps.iter().enumerate() {
                let off = rs.factor_offset(id);
                assert_eq!(c.roots, (off..off + c.rank).collect::<Vec<_>>(), "{text}");
            }
        }
    }

    #[test]
    fn sub_root_system_examples() {
        let b4 = RootSystem::parse("B4").unwrap();
        let (sub, map) = b4.sub_root_system(&set(&[0, 1, 2]));
        assert_eq!(sub.name(), "A3");
        assert_eq!(map, vec![Some(0), Some(1), Some(2), None]);
        let ac = RootSystem::parse("A1xC3").unwrap();
        let (sub, _) = ac.sub_root_system(&set(&[1, 2, 3]));
        assert_eq!(sub.name(), "C3");
        let (sub, _) = ac.sub_root_system(&BTreeSet::new());
        assert_eq!(sub.rank(), 0);
        assert_eq!(sub.name(), "-");
    }

    #[test]
    fn automorphism_group_orders() {
        let order = |t: &str| RootSystem::parse(t).unwrap().automorphisms().len();
        assert_eq!(order("A1"), 1);
        assert_eq!(order("A3"), 2);
        assert_eq!(order("B3"), 1);
        assert_eq!(order("D4"), 6);
        assert_eq!(order("D5"), 2);
        assert_eq!(order("E6"), 2);
        assert_eq!(order("E8"), 1);
        assert_eq!(order("G2"), 1);
        assert_eq!(order("A1xA1"), 2);
        assert_eq!(order("A2xA2"), 8);
        assert_eq!(order("-"), 1);
    }

    #[test]
    fn weight_display() {
        assert_eq!(Weight::new(vec![1, 0, 2]).to_string(), "a1+2a3");
        assert_eq!(Weight::new(vec![-1, 1]).to_string(), "-a1+a2");
        assert_eq!(Weight::zero(2).to_string(), "0");
    }
}
