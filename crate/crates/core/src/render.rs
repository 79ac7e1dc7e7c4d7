//! Annotated text rendering of a spherical system.
//!
//! The diagram is listed as its bonds, followed by one line per simple root
//! with its markers and colors, the spherical roots with the rank-one entry
//! each one instantiates, and the color pairings.
//!
//! Bonds are `-` (simple), `=>`/`<=` (double) and `≡>`/`<≡` (triple), the
//! arrow pointing at the shorter root. Root markers: `p` for `Sp`, `s` for a
//! simple spherical root, `2s` when twice the root is spherical, `.`
//! otherwise.

use std::fmt::Write;

use crate::rankone::RankOneTable;
use crate::system::SphericalSystem;

pub fn render(sys: &SphericalSystem, table: &RankOneTable) -> String {
    let rs = sys.root_system();
    let n = rs.rank();
    let mut out = String::new();
    writeln!(out, "group {}", rs.spec()).unwrap();

    let mut bonds = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if !rs.adjacent(i, j) {
                continue;
            }
            let (aij, aji) = (rs.cartan()[i][j].abs(), rs.cartan()[j][i].abs());
            let bond = match (aij, aji) {
                (1, 1) => "-",
                (1, 2) => "=>",
                (2, 1) => "<=",
                (1, 3) => "≡>",
                (3, 1) => "<≡",
                _ => "?",
            };
            bonds.push(format!("{} {bond} {}", i + 1, j + 1));
        }
    }
    writeln!(out, "bonds: {}", if bonds.is_empty() { "none".into() } else { bonds.join(", ") }).unwrap();

    let colors = sys.colors();
    writeln!(out, "roots:").unwrap();
    for i in 0..n {
        let marker = if sys.sp().contains(&i) {
            "p"
        } else if sys.simple_sigma(i).is_some() {
            "s"
        } else if sys.double_sigma(i).is_some() {
            "2s"
        } else {
            "."
        };
        let under: Vec<String> = (0..sys.rank())
            .filter(|&j| sys.sigma()[j][i] != 0)
            .map(|j| format!("s{}", j + 1))
            .collect();
        let mut line = format!("  {:>2} {marker:<2}", i + 1);
        if !under.is_empty() {
            write!(line, " in {}", under.join(",")).unwrap();
        }
        if let Ok(c) = &colors {
            let names = c.names(&c.delta_of[i]);
            if !names.is_empty() {
                write!(line, " colors {}", names.join(" ")).unwrap();
            }
        }
        writeln!(out, "{}", line.trim_end()).unwrap();
    }

    writeln!(out, "sigma:").unwrap();
    for (j, w) in sys.sigma().iter().enumerate() {
        let entry = table
            .match_spherical_root(rs, w)
            .map_or_else(|| "unlisted".to_string(), |m| m.entry.name.clone());
        writeln!(out, "  s{} = {w} [{entry}]", j + 1).unwrap();
    }

    writeln!(out, "colors:").unwrap();
    match &colors {
        Ok(c) => {
            let width = c.colors.iter().map(|d| d.name.len()).max().unwrap_or(0);
            for (d, color) in c.colors.iter().enumerate() {
                let values: Vec<String> = c.pairing[d].iter().map(|v| format!("{v:>2}")).collect();
                let line = format!("  {:<width$} {:<2} {}", color.name, color.kind_name(), values.join(" "));
                writeln!(out, "{}", line.trim_end()).unwrap();
            }
        }
        Err(e) => writeln!(out, "  unavailable: {e}").unwrap(),
    }
    out
}
