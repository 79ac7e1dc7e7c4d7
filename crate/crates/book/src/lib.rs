//! Guide chapters compiled as doctests.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/root-systems.md")]
pub mod root_systems {}
#[doc = include_str!("../../../book/src/rank-one-table.md")]
pub mod rank_one_table {}
#[doc = include_str!("../../../book/src/axioms.md")]
pub mod axioms {}
#[doc = include_str!("../../../book/src/quotients.md")]
pub mod quotients {}
#[doc = include_str!("../../../book/src/reduction.md")]
pub mod reduction {}
#[doc = include_str!("../../../book/src/enumeration.md")]
pub mod enumeration {}
#[doc = include_str!("../../../book/src/command-line.md")]
pub mod command_line {}
#[doc = include_str!("../../../book/src/limitations.md")]
pub mod limitations {}
