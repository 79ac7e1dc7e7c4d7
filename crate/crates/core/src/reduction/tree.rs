use std::collections::BTreeSet;
use std::fmt;

use super::{
    comb_split, find_decomposition, find_tails, is_cuspidal, localize, positive_combs, strip_tail,
};
use crate::error::Result;
use crate::quotient::quotient;
use crate::rankone::RankOneTable;
use crate::system::SphericalSystem;

/// Cuspidal, not decomposable, without positive combs and without tails.
pub fn is_primitive(sys: &SphericalSystem, table: &RankOneTable, max_colors: usize) -> Result<bool> {
    if !is_cuspidal(sys) || !positive_combs(sys).is_empty() {
        return Ok(false);
    }
    let colors = sys.colors()?;
    Ok(find_decomposition(sys, &colors, table, max_colors)?.is_none()
        && find_tails(sys, &colors, max_colors)?.is_empty())
}

/// Rows of `A` that are primitive positive 1-combs: positive 1-combs of a
/// cuspidal system without decompositions or tails.
pub fn primitive_1combs(sys: &SphericalSystem, table: &RankOneTable, max_colors: usize) -> Result<Vec<usize>> {
    let ones: Vec<usize> = positive_combs(sys)
        .into_iter()
        .filter(|c| c.n == 1)
        .map(|c| c.row)
        .collect();
    if ones.is_empty() || !is_cuspidal(sys) {
        return Ok(vec![]);
    }
    let colors = sys.colors()?;
    if find_decomposition(sys, &colors, table, max_colors)?.is_some()
        || !find_tails(sys, &colors, max_colors)?.is_empty()
    {
        return Ok(vec![]);
    }
    Ok(ones)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LeafKind {
    Rank0,
    Primitive,
    /// Cuspidal, indecomposable, tail-free, with positive 1-combs only.
    PrimitiveOneComb,
    /// None of the steps applies but the system is not primitive either:
    /// it has tails whose removal does not shrink the diagram.
    Irreducible,
}

impl LeafKind {
    pub fn name(self) -> &'static str {
        match self {
            LeafKind::Rank0 => "rank-0",
            LeafKind::Primitive => "primitive",
            LeafKind::PrimitiveOneComb => "primitive-1-comb",
            LeafKind::Irreducible => "irreducible",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReductionStep {
    Leaf(LeafKind),
    /// Localization at `roots`, indexed in the parent's root system.
    Localize {
        roots: BTreeSet<usize>,
        child: Box<ReductionTree>,
    },
    Decompose {
        first: Vec<String>,
        second: Vec<String>,
        children: [Box<ReductionTree>; 2],
    },
    CombSplit {
        color: String,
        /// One child per simple root of the comb.
        children: Vec<(usize, ReductionTree)>,
    },
    StripTail {
        tail: String,
        child: Box<ReductionTree>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionTree {
    pub system: SphericalSystem,
    pub step: ReductionStep,
}

impl ReductionTree {
    pub fn children(&self) -> Vec<&ReductionTree> {
        match &self.step {
            ReductionStep::Leaf(_) => vec![],
            ReductionStep::Localize { child, .. } | ReductionStep::StripTail { child, .. } => vec![child],
            ReductionStep::Decompose { children, .. } => children.iter().map(|c| &**c).collect(),
            ReductionStep::CombSplit { children, .. } => children.iter().map(|(_, c)| c).collect(),
        }
    }

    pub fn leaves(&self) -> Vec<(&SphericalSystem, LeafKind)> {
        match &self.step {
            ReductionStep::Leaf(kind) => vec![(&self.system, *kind)],
            _ => self.children().into_iter().flat_map(ReductionTree::leaves).collect(),
        }
    }

    pub fn depth(&self) -> usize {
        1 + self.children().into_iter().map(ReductionTree::depth).max().unwrap_or(0)
    }

    fn write_indented(&self, f: &mut fmt::Formatter<'_>, indent: usize) -> fmt::Result {
        let pad = "  ".repeat(indent);
        let rs = self.system.root_system();
        let sigma: Vec<String> = self.system.sigma().iter().map(|w| w.to_string()).collect();
        let head = format!("{} sigma=[{}]", rs.name(), sigma.join(", "));
        match &self.step {
            ReductionStep::Leaf(kind) => writeln!(f, "{pad}{head}: {}", kind.name()),
            ReductionStep::Localize { roots, child } => {
                let r: Vec<String> = roots.iter().map(|i| (i + 1).to_string()).collect();
                writeln!(f, "{pad}{head}: localize {{{}}}", r.join(","))?;
                child.write_indented(f, indent + 1)
            }
            ReductionStep::Decompose { first, second, children } => {
                writeln!(f, "{pad}{head}: decompose {{{}}} | {{{}}}", first.join(","), second.join(","))?;
                children.iter().try_for_each(|c| c.write_indented(f, indent + 1))
            }
            ReductionStep::CombSplit { color, children } => {
                writeln!(f, "{pad}{head}: split comb {color}")?;
                children.iter().try_for_each(|(_, c)| c.write_indented(f, indent + 1))
            }
            ReductionStep::StripTail { tail, child } => {
                writeln!(f, "{pad}{head}: strip tail {tail}")?;
                child.write_indented(f, indent + 1)
            }
        }
    }
}

impl fmt::Display for ReductionTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_indented(f, 0)
    }
}

/// Reduces `sys` until every leaf is primitive, has a primitive positive
/// 1-comb, or has rank zero.
///
/// At each node the first applicable step is taken: localization at the
/// support of `Σ`, decomposition, splitting the first positive comb with
/// `n > 1`, stripping the first tail that shrinks the diagram. Each step
/// lowers `(|S|, |Σ|, |Δ|)` lexicographically.
///
/// ```
/// use wonder_systems::format::parse_system;
/// use wonder_systems::reduction::{reduce, LeafKind};
/// use wonder_systems::RankOneTable;
///
/// let sys = parse_system("group: A2\nsp: -\nsigma:\n  1 0\nA:\n  D+: 1\n  D-: 1\n").unwrap();
/// let tree = reduce(&sys, &RankOneTable::builtin(), 20).unwrap();
/// let leaves = tree.leaves();
/// assert_eq!(leaves.len(), 1);
/// assert_eq!(leaves[0].1, LeafKind::PrimitiveOneComb);
/// ```
pub fn reduce(sys: &SphericalSystem, table: &RankOneTable, max_colors: usize) -> Result<ReductionTree> {
    let node = |step| ReductionTree {
        system: sys.clone(),
        step,
    };
    if sys.sigma().is_empty() {
        return Ok(node(ReductionStep::Leaf(LeafKind::Rank0)));
    }
    if !is_cuspidal(sys) {
        let roots = sys.support();
        let child = reduce(&localize(sys, &roots, table)?, table, max_colors)?;
        return Ok(node(ReductionStep::Localize {
            roots,
            child: Box::new(child),
        }));
    }
    let colors = sys.colors()?;
    if let Some(d) = find_decomposition(sys, &colors, table, max_colors)? {
        let names = |s: &BTreeSet<usize>| colors.names(s).into_iter().map(String::from).collect();
        let first = reduce(&quotient(sys, &colors, &d.first, table)?.quotient, table, max_colors)?;
        let second = reduce(&quotient(sys, &colors, &d.second, table)?.quotient, table, max_colors)?;
        return Ok(node(ReductionStep::Decompose {
            first: names(&d.first),
            second: names(&d.second),
            children: [Box::new(first), Box::new(second)],
        }));
    }
    let combs = positive_combs(sys);
    if let Some(comb) = combs.iter().find(|c| c.n > 1) {
        let children = comb_split(sys, comb.row, table)?
            .into_iter()
            .map(|(alpha, part)| Ok((alpha, reduce(&part, table, max_colors)?)))
            .collect::<Result<_>>()?;
        return Ok(node(ReductionStep::CombSplit {
            color: sys.a_rows()[comb.row].name.clone(),
            children,
        }));
    }
    let tails = find_tails(sys, &colors, max_colors)?;
    for tail in &tails {
        let stripped = strip_tail(sys, tail, table)?;
        if stripped.root_system().rank() < sys.root_system().rank() {
            let child = reduce(&stripped, table, max_colors)?;
            return Ok(node(ReductionStep::StripTail {
                tail: tail.name(),
                child: Box::new(child),
            }));
        }
    }
    let kind = match (tails.is_empty(), combs.is_empty()) {
        (true, true) => LeafKind::Primitive,
        (true, false) => LeafKind::PrimitiveOneComb,
        (false, _) => LeafKind::Irreducible,
    };
    Ok(node(ReductionStep::Leaf(kind)))
}
