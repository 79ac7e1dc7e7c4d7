//! Spherical roots of rank-one wonderful varieties and their compatibility
//! with a set of simple roots `Sp`.
//!
//! An entry describes a family of weights by the Dynkin type of its support,
//! a coefficient template along the Bourbaki-ordered support, and a rule
//! saying which support roots must lie in `Sp` and which must not.
//!
//! The built-in table covers the classical families:
//!
//! | name    | support   | weight                                   |
//! |---------|-----------|------------------------------------------|
//! | `a1`    | `A1`      | `α`                                      |
//! | `2a1`   | `A1`      | `2α`                                     |
//! | `aa`    | `A1xA1`   | `α + α'`                                 |
//! | `a(n)`  | `A_n`, n≥2 | `α1 + … + αn`                           |
//! | `d3`    | `A3`      | `α1 + 2α2 + α3`                          |
//! | `b(m)`  | `B_m`, m≥2 | `α1 + … + αm`                           |
//! | `2b(m)` | `B_m`, m≥2 | `2α1 + … + 2αm`                         |
//! | `c(m)`  | `C_m`, m≥3 | `α1 + 2α2 + … + 2α(m-1) + αm`           |
//! | `d(m)`  | `D_m`, m≥4 | `2α1 + … + 2α(m-2) + α(m-1) + αm`       |
//!
//! The small cases of the `c`, `d` families coincide with other entries
//! (`C2 = B2`, `D2 = A1xA1`, `D3 = A3`) and are matched there. Additional
//! entries are read from a text file, see [`RankOneTable::load`]; the
//! repository ships the exceptional weights of `B3`, `F4` and `G2` in
//! `data/rankone.tbl`.
//!
//! Most entries use the default `Sp` rule: support roots orthogonal to the
//! weight are in `Sp`, the others are not. `b(m)` leaves its last root free
//! and `c(m)` its first. Independently of the rule, simple roots outside the
//! support that pair nontrivially with the weight are never in `Sp`.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::rootsystem::{matrix_automorphisms, support, Component, DynkinType, Factor, GroupSpec, RootSystem, Weight};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SupportPattern {
    /// A single connected component of the given type, rank in `min..=max`.
    Family {
        kind: DynkinType,
        min: usize,
        max: Option<usize>,
    },
    /// A fixed product of types, e.g. two orthogonal simple roots.
    Product(Vec<Factor>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoeffTemplate {
    Ones,
    Twos,
    /// `1, 2, …, 2, 1`
    CFamily,
    /// `2, …, 2, 1, 1`
    DFamily,
    Explicit(Vec<i64>),
}

impl CoeffTemplate {
    pub fn instantiate(&self, rank: usize) -> Option<Vec<i64>> {
        match self {
            CoeffTemplate::Ones => Some(vec![1; rank]),
            CoeffTemplate::Twos => Some(vec![2; rank]),
            CoeffTemplate::CFamily if rank >= 2 => {
                let mut v = vec![2; rank];
                v[0] = 1;
                v[rank - 1] = 1;
                Some(v)
            }
            CoeffTemplate::DFamily if rank >= 2 => {
                let mut v = vec![2; rank];
                v[rank - 2] = 1;
                v[rank - 1] = 1;
                Some(v)
            }
            CoeffTemplate::Explicit(v) if v.len() == rank => Some(v.clone()),
            _ => None,
        }
    }
}

/// A position along the matched support chain: 1-based from the start, or
/// counted back from the last root (`$`, `$-1`, ...).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Position {
    Start(usize),
    End(usize),
}

impl Position {
    /// The 1-based position in a chain of length `len`, or 0 if it falls
    /// before the start.
    fn resolve(self, len: usize) -> usize {
        match self {
            Position::Start(p) => p,
            Position::End(k) => len.saturating_sub(k),
        }
    }
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Position::Start(p) => write!(f, "{p}"),
            Position::End(0) => f.write_str("$"),
            Position::End(k) => write!(f, "$-{k}"),
        }
    }
}

/// A run of positions along the matched support chain.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PositionRange {
    pub start: Position,
    /// Inclusive; `None` runs to the end of the chain.
    pub end: Option<Position>,
}

impl PositionRange {
    fn positions(&self, len: usize) -> impl Iterator<Item = usize> {
        let end = self.end.map_or(len, |e| e.resolve(len)).min(len);
        self.start.resolve(len).max(1)..=end
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpRule {
    /// Support roots orthogonal to the weight must be in `Sp`, the other
    /// support roots must not be.
    Default,
    Explicit {
        contain: Vec<PositionRange>,
        avoid: Vec<PositionRange>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankOneEntry {
    pub name: String,
    pub support: SupportPattern,
    pub coeffs: CoeffTemplate,
    pub sp: SpRule,
}

/// A weight matched against an entry. `chain` lists the support roots in
/// the order the entry's template reads them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootMatch<'t> {
    pub entry: &'t RankOneEntry,
    pub chain: Vec<usize>,
}

impl RootMatch<'_> {
    /// The family parameter, i.e. the size of the support.
    pub fn m(&self) -> usize {
        self.chain.len()
    }
}

/// Compatibility requirements on `Sp` for one spherical root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpRequirement {
    pub contain: BTreeSet<usize>,
    pub avoid: BTreeSet<usize>,
}

impl SpRequirement {
    pub fn accepts(&self, sp: &BTreeSet<usize>) -> bool {
        self.contain.is_subset(sp) && self.avoid.is_disjoint(sp)
    }
}

/// Support roots `α` of `w` with `<α^∨, w> = 0`.
pub fn orthogonal_support(rs: &RootSystem, w: &[i64]) -> BTreeSet<usize> {
    support(w)
        .into_iter()
        .filter(|&i| rs.coroot(i, w) == 0)
        .collect()
}

/// Components used for matching: a `C2` is read as a `B2` from its long
/// root, so that the two labelings of the same diagram agree.
fn matching_components(rs: &RootSystem, supp: &BTreeSet<usize>) -> Vec<Component> {
    rs.components(supp)
        .into_iter()
        .map(|c| {
            if c.kind == DynkinType::C && c.rank == 2 {
                Component {
                    kind: DynkinType::B,
                    rank: 2,
                    roots: vec![c.roots[1], c.roots[0]],
                }
            } else {
                c
            }
        })
        .collect()
}

impl RankOneEntry {
    /// The support roots in template order if the components fit the
    /// support pattern.
    fn base_chain(&self, comps: &[Component]) -> Option<Vec<usize>> {
        match &self.support {
            SupportPattern::Family { kind, min, max } => {
                let [c] = comps else { return None };
                let in_range = c.rank >= *min && max.is_none_or(|m| c.rank <= m);
                (c.kind == *kind && in_range).then(|| c.roots.clone())
            }
            SupportPattern::Product(factors) => {
                if factors.len() != comps.len() {
                    return None;
                }
                let mut used = vec![false; comps.len()];
                let mut chain = Vec::new();
                for f in factors {
                    let k = (0..comps.len()).find(|&k| !used[k] && comps[k].factor() == *f)?;
                    used[k] = true;
                    chain.extend(&comps[k].roots);
                }
                Some(chain)
            }
        }
    }

    fn match_components(&self, rs: &RootSystem, w: &[i64], comps: &[Component]) -> Option<Vec<usize>> {
        let chain = self.base_chain(comps)?;
        let template = self.coeffs.instantiate(chain.len())?;
        let local: Vec<Vec<i64>> = chain
            .iter()
            .map(|&i| chain.iter().map(|&j| rs.cartan()[i][j]).collect())
            .collect();
        matrix_automorphisms(&local).into_iter().find_map(|perm| {
            let permuted: Vec<usize> = perm.iter().map(|&p| chain[p]).collect();
            permuted
                .iter()
                .zip(&template)
                .all(|(&r, &t)| w[r] == t)
                .then_some(permuted)
        })
    }

    /// The chain along which `w` instantiates this entry, if it does.
    pub fn matches(&self, rs: &RootSystem, w: &[i64]) -> Option<Vec<usize>> {
        if w.iter().any(|&c| c < 0) {
            return None;
        }
        let supp = support(w);
        if supp.is_empty() {
            return None;
        }
        self.match_components(rs, w, &matching_components(rs, &supp))
    }

    /// Requirements on `Sp` for the weight `w` matched along `chain`.
    ///
    /// Whatever the rule, simple roots outside the support that are not
    /// orthogonal to `w` are avoided.
    pub fn requirement(&self, rs: &RootSystem, w: &[i64], chain: &[usize]) -> SpRequirement {
        let supp = support(w);
        let mut req = match &self.sp {
            SpRule::Default => {
                let zero = orthogonal_support(rs, w);
                let avoid = supp.difference(&zero).copied().collect();
                SpRequirement { contain: zero, avoid }
            }
            SpRule::Explicit { contain, avoid } => {
                let pick = |ranges: &[PositionRange]| {
                    ranges
                        .iter()
                        .flat_map(|r| r.positions(chain.len()))
                        .map(|p| chain[p - 1])
                        .collect()
                };
                SpRequirement {
                    contain: pick(contain),
                    avoid: pick(avoid),
                }
            }
        };
        req.avoid
            .extend((0..rs.rank()).filter(|i| !supp.contains(i) && rs.coroot(*i, w) != 0));
        req
    }
}

impl fmt::Display for RankOneEntry {
    /// Writes the entry in table-file syntax.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "entry {} support=", self.name)?;
        match &self.support {
            SupportPattern::Family { kind, min, max } => match max {
                Some(m) => write!(f, "{kind}({min}..{m})")?,
                None => write!(f, "{kind}({min}..)")?,
            },
            SupportPattern::Product(fs) => write!(f, "{}", GroupSpec { factors: fs.clone() })?,
        }
        let coeffs = match &self.coeffs {
            CoeffTemplate::Ones => "ones".to_string(),
            CoeffTemplate::Twos => "twos".to_string(),
            CoeffTemplate::CFamily => "c-family".to_string(),
            CoeffTemplate::DFamily => "d-family".to_string(),
            CoeffTemplate::Explicit(v) => v.iter().map(i64::to_string).collect::<Vec<_>>().join(","),
        };
        write!(f, " coeffs={coeffs} sp=")?;
        match &self.sp {
            SpRule::Default => write!(f, "default"),
            SpRule::Explicit { contain, avoid } => {
                let show = |rs: &[PositionRange]| {
                    rs.iter()
                        .map(|r| match r.end {
                            Some(e) if e == r.start => r.start.to_string(),
                            Some(e) => format!("{}..{e}", r.start),
                            None => format!("{}..", r.start),
                        })
                        .collect::<Vec<_>>()
                        .join(",")
                };
                write!(f, "contain:{{{}}} avoid:{{{}}}", show(contain), show(avoid))
            }
        }
    }
}

/// The list of admissible rank-one spherical roots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankOneTable {
    entries: Vec<RankOneEntry>,
}

impl Default for RankOneTable {
    fn default() -> Self {
        RankOneTable::builtin()
    }
}

impl RankOneTable {
    pub fn builtin() -> RankOneTable {
        use CoeffTemplate::*;
        use DynkinType::*;
        let fam = |kind, min, max| SupportPattern::Family { kind, min, max };
        let entry = |name: &str, support, coeffs| RankOneEntry {
            name: name.to_string(),
            support,
            coeffs,
            sp: SpRule::Default,
        };
        let single = |p| PositionRange {
            start: Position::Start(p),
            end: Some(Position::Start(p)),
        };
        // The last root of b(m) and the first root of c(m) may or may not
        // be parabolic.
        let b_family = RankOneEntry {
            sp: SpRule::Explicit {
                contain: vec![PositionRange {
                    start: Position::Start(2),
                    end: Some(Position::End(1)),
                }],
                avoid: vec![single(1)],
            },
            ..entry("b(m)", fam(B, 2, None), Ones)
        };
        let c_family = RankOneEntry {
            sp: SpRule::Explicit {
                contain: vec![PositionRange {
                    start: Position::Start(3),
                    end: None,
                }],
                avoid: vec![single(2)],
            },
            ..entry("c(m)", fam(C, 3, None), CFamily)
        };
        let a1 = Factor { kind: A, rank: 1 };
        RankOneTable {
            entries: vec![
                entry("a1", fam(A, 1, Some(1)), Ones),
                entry("2a1", fam(A, 1, Some(1)), Twos),
                entry("aa", SupportPattern::Product(vec![a1, a1]), Ones),
                entry("a(n)", fam(A, 2, None), Ones),
                entry("d3", fam(A, 3, Some(3)), Explicit(vec![1, 2, 1])),
                b_family,
                entry("2b(m)", fam(B, 2, None), Twos),
                c_family,
                entry("d(m)", fam(D, 4, None), DFamily),
            ],
        }
    }

    pub fn entries(&self) -> &[RankOneEntry] {
        &self.entries
    }

    pub fn entry(&self, name: &str) -> Option<&RankOneEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    /// The entry `w` instantiates, if any. Entries are tried in table order.
    pub fn match_spherical_root(&self, rs: &RootSystem, w: &[i64]) -> Option<RootMatch<'_>> {
        self.all_matches(rs, w).into_iter().next()
    }

    /// Every entry `w` instantiates; at most one for a consistent table.
    pub fn all_matches(&self, rs: &RootSystem, w: &[i64]) -> Vec<RootMatch<'_>> {
        if w.iter().any(|&c| c < 0) {
            return vec![];
        }
        let supp = support(w);
        if supp.is_empty() {
            return vec![];
        }
        let comps = matching_components(rs, &supp);
        self.entries
            .iter()
            .filter_map(|e| {
                e.match_components(rs, w, &comps)
                    .map(|chain| RootMatch { entry: e, chain })
            })
            .collect()
    }

    /// Whether a rank-one wonderful variety with spherical root `w` and
    /// parabolic roots exactly `sp` is listed.
    pub fn axiom_s_holds(&self, rs: &RootSystem, w: &[i64], sp: &BTreeSet<usize>) -> bool {
        self.requirement(rs, w).is_some_and(|r| r.accepts(sp))
    }

    pub fn requirement(&self, rs: &RootSystem, w: &[i64]) -> Option<SpRequirement> {
        let m = self.match_spherical_root(rs, w)?;
        Some(m.entry.requirement(rs, w, &m.chain))
    }

    /// Whether `2σ` is a rank-one spherical root compatible with `sp`.
    pub fn double_exists(&self, rs: &RootSystem, sigma: &[i64], sp: &BTreeSet<usize>) -> bool {
        let doubled: Vec<i64> = sigma.iter().map(|c| 2 * c).collect();
        self.axiom_s_holds(rs, &doubled, sp)
    }

    /// All weights on `rs` instantiating some entry, grouped by entry in
    /// table order, then by support (as a bitmask, ascending).
    pub fn instances(&self, rs: &RootSystem) -> Vec<Weight> {
        let n = rs.rank();
        assert!(n < 64, "instances() enumerates subsets of the simple roots");
        let supports: Vec<(BTreeSet<usize>, Vec<Component>)> = (1u64..1 << n)
            .map(|mask| {
                let s: BTreeSet<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
                let comps = matching_components(rs, &s);
                (s, comps)
            })
            .collect();
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for entry in &self.entries {
            for (_, comps) in &supports {
                let Some(chain) = entry.base_chain(comps) else { continue };
                let Some(template) = entry.coeffs.instantiate(chain.len()) else { continue };
                let local: Vec<Vec<i64>> = chain
                    .iter()
                    .map(|&i| chain.iter().map(|&j| rs.cartan()[i][j]).collect())
                    .collect();
                for perm in matrix_automorphisms(&local) {
                    let mut w = vec![0; n];
                    for (k, &p) in perm.iter().enumerate() {
                        w[chain[p]] = template[k];
                    }
                    let w = Weight::new(w);
                    if seen.insert(w.clone()) {
                        out.push(w);
                    }
                }
            }
        }
        out
    }

    /// Built-in entries, then the entries of `source`; a file entry with a
    /// built-in name replaces it.
    pub fn load(source: &str) -> Result<RankOneTable> {
        let mut table = RankOneTable::builtin();
        let mut file_names = BTreeSet::new();
        for (k, raw) in source.lines().enumerate() {
            let line_no = k + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let entry = parse_entry(line).map_err(|message| Error::Table {
                line: line_no,
                message,
            })?;
            if !file_names.insert(entry.name.clone()) {
                return Err(Error::Table {
                    line: line_no,
                    message: format!("duplicate entry name {:?}", entry.name),
                });
            }
            match table.entries.iter_mut().find(|e| e.name == entry.name) {
                Some(slot) => *slot = entry,
                None => table.entries.push(entry),
            }
        }
        Ok(table)
    }

    /// The table in file syntax, one entry per line.
    pub fn to_text(&self) -> String {
        self.entries.iter().map(|e| format!("{e}\n")).collect()
    }
}

fn parse_entry(line: &str) -> std::result::Result<RankOneEntry, String> {
    let mut tokens = line.split_whitespace();
    if tokens.next() != Some("entry") {
        return Err("expected `entry <name> support=... coeffs=... sp=...`".into());
    }
    let name = tokens.next().ok_or("missing entry name")?.to_string();
    if name.contains('=') {
        return Err(format!("bad entry name {name:?}"));
    }
    let rest: Vec<&str> = tokens.collect();
    let mut support = None;
    let mut coeffs = None;
    let mut sp = None;
    let mut i = 0;
    while i < rest.len() {
        let (key, value) = rest[i]
            .split_once('=')
            .ok_or_else(|| format!("expected key=value, found {:?}", rest[i]))?;
        match key {
            "support" => support = Some(parse_support(value)?),
            "coeffs" => coeffs = Some(parse_coeffs(value)?),
            "sp" => {
                // The rule may span the remaining tokens.
                let text = std::iter::once(value)
                    .chain(rest[i + 1..].iter().copied())
                    .collect::<Vec<_>>()
                    .join(" ");
                sp = Some(parse_sp(&text)?);
                i = rest.len();
                continue;
            }
            other => return Err(format!("unknown key {other:?}")),
        }
        i += 1;
    }
    let support = support.ok_or("missing support=")?;
    let coeffs = coeffs.ok_or("missing coeffs=")?;
    let sp = sp.ok_or("missing sp=")?;
    if let CoeffTemplate::Explicit(v) = &coeffs {
        let fixed = match &support {
            SupportPattern::Family { min, max, .. } => (Some(*min) == *max).then_some(*min),
            SupportPattern::Product(fs) => Some(fs.iter().map(|f| f.rank).sum()),
        };
        match fixed {
            Some(r) if r == v.len() => {}
            Some(r) => return Err(format!("coefficient list has length {} but the support has rank {r}", v.len())),
            None => return Err("an explicit coefficient list needs a support of fixed rank".into()),
        }
        if v.iter().any(|&c| c <= 0) {
            return Err("coefficients must be positive".into());
        }
    }
    Ok(RankOneEntry {
        name,
        support,
        coeffs,
        sp,
    })
}

fn parse_support(text: &str) -> std::result::Result<SupportPattern, String> {
    if let Some((letter, range)) = text.split_once('(') {
        let range = range
            .strip_suffix(')')
            .ok_or_else(|| format!("unterminated support range in {text:?}"))?;
        let mut chars = letter.chars();
        let kind = chars
            .next()
            .and_then(DynkinType::from_letter)
            .filter(|_| chars.next().is_none())
            .ok_or_else(|| format!("bad support type {letter:?}"))?;
        let (lo, hi) = range
            .split_once("..")
            .ok_or_else(|| format!("expected <min>..<max> in {text:?}"))?;
        let min: usize = lo.parse().map_err(|_| format!("bad minimum rank {lo:?}"))?;
        let max: Option<usize> = if hi.is_empty() {
            None
        } else {
            Some(hi.parse().map_err(|_| format!("bad maximum rank {hi:?}"))?)
        };
        if max.is_some_and(|m| m < min) || !kind.admits_rank(min) {
            return Err(format!("empty rank range in {text:?}"));
        }
        return Ok(SupportPattern::Family { kind, min, max });
    }
    let spec = GroupSpec::parse(text).map_err(|e| e.to_string())?;
    if spec.factors.is_empty() {
        return Err("empty support".into());
    }
    Ok(SupportPattern::Product(spec.factors))
}

fn parse_coeffs(text: &str) -> std::result::Result<CoeffTemplate, String> {
    Ok(match text {
        "ones" => CoeffTemplate::Ones,
        "twos" => CoeffTemplate::Twos,
        "c-family" => CoeffTemplate::CFamily,
        "d-family" => CoeffTemplate::DFamily,
        list => CoeffTemplate::Explicit(
            list.split(',')
                .map(|c| c.trim().parse::<i64>().map_err(|_| format!("bad coefficient {c:?}")))
                .collect::<std::result::Result<_, _>>()?,
        ),
    })
}

fn parse_sp(text: &str) -> std::result::Result<SpRule, String> {
    let text = text.trim();
    if text == "default" {
        return Ok(SpRule::Default);
    }
    let mut contain = Vec::new();
    let mut avoid = Vec::new();
    for part in text.split_whitespace() {
        let (key, set) = part
            .split_once(':')
            .ok_or_else(|| format!("expected contain:{{..}} or avoid:{{..}}, found {part:?}"))?;
        let inner = set
            .strip_prefix('{')
            .and_then(|s| s.strip_suffix('}'))
            .ok_or_else(|| format!("expected braces in {part:?}"))?;
        let ranges = inner
            .split(',')
            .filter(|s| !s.trim().is_empty())
            .map(parse_position_range)
            .collect::<std::result::Result<Vec<_>, _>>()?;
        match key {
            "contain" => contain = ranges,
            "avoid" => avoid = ranges,
            other => return Err(format!("unknown sp clause {other:?}")),
        }
    }
    Ok(SpRule::Explicit { contain, avoid })
}

fn parse_position_range(text: &str) -> std::result::Result<PositionRange, String> {
    let text = text.trim();
    let bad = || format!("bad position {text:?}");
    let parse = |s: &str| -> Option<Position> {
        match s.strip_prefix('$') {
            Some("") => Some(Position::End(0)),
            Some(rest) => rest.strip_prefix('-')?.parse().ok().map(Position::End),
            None => s.parse().ok().filter(|&p| p >= 1).map(Position::Start),
        }
    };
    match text.split_once("..") {
        None => {
            let p = parse(text).ok_or_else(bad)?;
            Ok(PositionRange { start: p, end: Some(p) })
        }
        Some((lo, hi)) => {
            let start = parse(lo).ok_or_else(bad)?;
            let end = if hi.is_empty() {
                None
            } else {
                let end = parse(hi).ok_or_else(bad)?;
                if let (Position::Start(a), Position::Start(b)) = (start, end) {
                    if b < a {
                        return Err(bad());
                    }
                }
                Some(end)
            };
            Ok(PositionRange { start, end })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(xs: &[usize]) -> BTreeSet<usize> {
        xs.iter().copied().collect()
    }

    fn name_of(table: &RankOneTable, rs: &RootSystem, w: &[i64]) -> Option<String> {
        table.match_spherical_root(rs, w).map(|m| m.entry.name.clone())
    }

    #[test]
    fn matches_simple_root_and_its_double() {
        let t = RankOneTable::builtin();
        let a1 = RootSystem::parse("A1").unwrap();
        assert_eq!(name_of(&t, &a1, &[1]).as_deref(), Some("a1"));
        assert_eq!(name_of(&t, &a1, &[2]).as_deref(), Some("2a1"));
        assert_eq!(name_of(&t, &a1, &[3]), None);
        assert_eq!(name_of(&t, &a1, &[0]), None);
    }

    #[test]
    fn matches_d_family_inside_dn() {
        let t = RankOneTable::builtin();
        let d6 = RootSystem::parse("D6").unwrap();
        let m = t.match_spherical_root(&d6, &[0, 0, 2, 2, 1, 1]).unwrap();
        assert_eq!(m.entry.name, "d(m)");
        assert_eq!(m.m(), 4);
        let d4 = RootSystem::parse("D4").unwrap();
        let m = t.match_spherical_root(&d4, &[2, 2, 1, 1]).unwrap();
        assert_eq!((m.entry.name.as_str(), m.m()), ("d(m)", 4));
        // Triality images are matched as well.
        assert_eq!(name_of(&t, &d4, &[1, 2, 2, 1]).as_deref(), Some("d(m)"));
    }

    #[test]
    fn rejects_unlisted_weight() {
        let t = RankOneTable::builtin();
        let a2 = RootSystem::parse("A2").unwrap();
        assert_eq!(name_of(&t, &a2, &[1, 2]), None);
        assert_eq!(name_of(&t, &a2, &[1, 1]).as_deref(), Some("a(n)"));
    }

    #[test]
    fn chains_are_read_from_either_end() {
        let t = RankOneTable::builtin();
        let c4 = RootSystem::parse("C4").unwrap();
        // alpha_3 + alpha_4 in C4 sits on a B2 read from the long root.
        let m = t.match_spherical_root(&c4, &[0, 0, 1, 1]).unwrap();
        assert_eq!(m.entry.name, "b(m)");
        assert_eq!(m.chain, vec![3, 2]);
        let m = t.match_spherical_root(&c4, &[0, 1, 2, 1]).unwrap();
        assert_eq!(m.entry.name, "c(m)");
    }

    #[test]
    fn axiom_s_examples() {
        let t = RankOneTable::builtin();
        let b4 = RootSystem::parse("B4").unwrap();
        // The last root of b(m) is free, the first must stay out.
        assert!(t.axiom_s_holds(&b4, &[0, 0, 1, 1], &set(&[])));
        assert!(t.axiom_s_holds(&b4, &[0, 0, 1, 1], &set(&[3])));
        assert!(!t.axiom_s_holds(&b4, &[0, 0, 1, 1], &set(&[2])));
        // alpha_2 pairs with alpha_3 and lies outside the support.
        assert!(!t.axiom_s_holds(&b4, &[0, 0, 1, 1], &set(&[1])));
        assert!(t.axiom_s_holds(&b4, &[0, 0, 1, 1], &set(&[0])));
        let a1 = RootSystem::parse("A1").unwrap();
        assert!(t.axiom_s_holds(&a1, &[1], &set(&[])));
        let a2 = RootSystem::parse("A2").unwrap();
        assert!(!t.axiom_s_holds(&a2, &[1, 1], &set(&[0])));
        assert!(t.axiom_s_holds(&a2, &[1, 1], &set(&[])));
        // Unlisted weights never satisfy the axiom.
        assert!(!t.axiom_s_holds(&a2, &[1, 2], &set(&[])));
    }

    #[test]
    fn double_exists_examples() {
        let t = RankOneTable::builtin();
        let a1 = RootSystem::parse("A1").unwrap();
        assert!(t.double_exists(&a1, &[1], &set(&[])));
        assert!(!t.double_exists(&a1, &[2], &set(&[])));
        let a1a1 = RootSystem::parse("A1xA1").unwrap();
        // 2(α + α') is not in the built-in table.
        assert!(!t.double_exists(&a1a1, &[1, 1], &set(&[])));
        let b3 = RootSystem::parse("B3").unwrap();
        // 2b(3) needs alpha_2, alpha_3 in Sp and alpha_1 outside.
        assert!(t.double_exists(&b3, &[1, 1, 1], &set(&[1, 2])));
        assert!(!t.double_exists(&b3, &[1, 1, 1], &set(&[2])));
    }

    #[test]
    fn sp_requirement_of_c_family() {
        let t = RankOneTable::builtin();
        let c4 = RootSystem::parse("C4").unwrap();
        let r = t.requirement(&c4, &[1, 2, 2, 1]).unwrap();
        assert_eq!(r.contain, set(&[2, 3]));
        assert_eq!(r.avoid, set(&[1]));
        let r = t.requirement(&c4, &[0, 1, 2, 1]).unwrap();
        assert_eq!(r.contain, set(&[3]));
        assert_eq!(r.avoid, set(&[0, 2]));
    }

    #[test]
    fn positions_from_the_end() {
        let t = RankOneTable::load("entry bb support=B(3..) coeffs=twos sp=contain:{$-1..$} avoid:{1..$-2}\n").unwrap();
        let e = t.entry("bb").unwrap();
        assert_eq!(e.to_string(), "entry bb support=B(3..) coeffs=twos sp=contain:{$-1..$} avoid:{1..$-2}");
        let r = e.requirement(&RootSystem::parse("B5").unwrap(), &[2; 5], &[0, 1, 2, 3, 4]);
        assert_eq!(r.contain, set(&[3, 4]));
        assert_eq!(r.avoid, set(&[0, 1, 2]));
    }

    #[test]
    fn instances_in_a1xa1() {
        let t = RankOneTable::builtin();
        let rs = RootSystem::parse("A1xA1").unwrap();
        let got: Vec<Vec<i64>> = t.instances(&rs).into_iter().map(Weight::into_coeffs).collect();
        assert_eq!(got, vec![vec![1, 0], vec![0, 1], vec![2, 0], vec![0, 2], vec![1, 1]]);
    }

    #[test]
    fn load_empty_source_is_builtin() {
        assert_eq!(RankOneTable::load("").unwrap(), RankOneTable::builtin());
        assert_eq!(RankOneTable::load("# nothing\n\n").unwrap(), RankOneTable::builtin());
    }

    #[test]
    fn load_overrides_builtin_rule() {
        let t = RankOneTable::load("entry b(m) support=B(2..) coeffs=ones sp=contain:{} avoid:{}\n").unwrap();
        assert_eq!(t.entries().len(), RankOneTable::builtin().entries().len());
        let b4 = RootSystem::parse("B4").unwrap();
        assert!(t.axiom_s_holds(&b4, &[0, 0, 1, 1], &set(&[])));
    }

    #[test]
    fn load_adds_entries_and_ranges() {
        let t = RankOneTable::load(
            "entry b3-spin support=B(3..3) coeffs=1,2,3 sp=contain:{1,2} avoid:{3}  # comment\n",
        )
        .unwrap();
        let b3 = RootSystem::parse("B3").unwrap();
        let m = t.match_spherical_root(&b3, &[1, 2, 3]).unwrap();
        assert_eq!(m.entry.name, "b3-spin");
        assert!(t.axiom_s_holds(&b3, &[1, 2, 3], &set(&[0, 1])));
        assert!(!t.axiom_s_holds(&b3, &[1, 2, 3], &set(&[0])));
        let ranged = RankOneTable::load("entry cc support=C(3..) coeffs=c-family sp=contain:{3..} avoid:{2}\n").unwrap();
        let c4 = RootSystem::parse("C4").unwrap();
        let r = ranged.requirement(&c4, &[1, 2, 2, 1]).unwrap();
        // Built-in c(m) still wins on table order.
        assert_eq!(r.contain, set(&[2, 3]));
        let cc = ranged.entry("cc").unwrap();
        assert_eq!(cc.requirement(&c4, &[1, 2, 2, 1], &[0, 1, 2, 3]).contain, set(&[2, 3]));
    }

    #[test]
    fn load_rejects_duplicates_and_bad_lines() {
        let dup = "entry x support=G2 coeffs=1,1 sp=default\nentry x support=G2 coeffs=2,2 sp=default\n";
        assert!(matches!(RankOneTable::load(dup), Err(Error::Table { line: 2, .. })));
        for bad in [
            "entry",
            "rule x support=A(1..1) coeffs=ones sp=default",
            "entry x support=A(1..1) coeffs=ones",
            "entry x support=Q(1..1) coeffs=ones sp=default",
            "entry x support=A(2..) coeffs=1,1 sp=default",
            "entry x support=A(1..1) coeffs=ones sp=contain:[1]",
            "entry x support=E(3..4) coeffs=ones sp=default",
        ] {
            assert!(matches!(RankOneTable::load(bad), Err(Error::Table { line: 1, .. })), "{bad}");
        }
    }

    #[test]
    fn text_round_trip() {
        let t = RankOneTable::builtin();
        assert_eq!(RankOneTable::load(&t.to_text()).unwrap(), t);
        let custom = "entry g2-long support=G(2..2) coeffs=4,2 sp=contain:{2} avoid:{1..1,3..}\n";
        let t2 = RankOneTable::load(custom).unwrap();
        assert_eq!(RankOneTable::load(&t2.to_text()).unwrap(), t2);
    }
}
