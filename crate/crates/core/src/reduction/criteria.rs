use num_traits::Signed;

use crate::linalg::{q, Q};
use crate::lp;
use crate::rankone::RankOneTable;
use crate::system::{ColorSet, SphericalSystem};

/// Weights `n_σ >= 0` with `c(D, Σ n_σ σ) > 0` for every color `D`, if
/// they exist.
pub fn is_reductive_system(colors: &ColorSet) -> Option<Vec<Q>> {
    let nsigma = colors.pairing.first().map_or(0, Vec::len);
    let b = vec![1; colors.len()];
    lp::feasible_point(&colors.pairing, &b, nsigma)
}

/// Checks a certificate returned by [`is_reductive_system`] exactly.
pub fn verify_reductive_certificate(colors: &ColorSet, n: &[Q]) -> bool {
    n.iter().all(|x| !x.is_negative())
        && colors.pairing.iter().all(|row| {
            row.len() == n.len() && row.iter().zip(n).map(|(&c, x)| q(c) * x).sum::<Q>().is_positive()
        })
}

/// No spherical root can be doubled.
pub fn is_strict(sys: &SphericalSystem, table: &RankOneTable) -> bool {
    sys.sigma()
        .iter()
        .all(|w| !table.double_exists(sys.root_system(), w, sys.sp()))
}

/// No spherical root outside the simple roots can be doubled.
pub fn is_spherically_closed(sys: &SphericalSystem, table: &RankOneTable) -> bool {
    sys.sigma()
        .iter()
        .filter(|w| w.as_simple_root().is_none())
        .all(|w| !table.double_exists(sys.root_system(), w, sys.sp()))
}
