//! Plain-text exports.

use crate::design::{CyclicDesign, OrbitKind};
use crate::{Error, Result};

/// One developed block per line, points ascending and space-separated, blocks
/// in lexicographic order.
pub fn export_blocks(d: &CyclicDesign) -> String {
    let mut out = String::new();
    for b in d.develop().blocks() {
        out.push_str(&join(b.points()));
        out.push('\n');
    }
    out
}

/// One base block per line, prefixed by its orbit kind.
pub fn export_orbits(d: &CyclicDesign) -> String {
    let mut out = String::new();
    for b in d.base_blocks() {
        let tag = match b.orbit {
            OrbitKind::Full => "full",
            OrbitKind::Short => "short",
        };
        out.push_str(&format!("{tag}: {}\n", join(b.block.points())));
    }
    out
}

fn join(points: &[u32]) -> String {
    points.iter().map(u32::to_string).collect::<Vec<_>>().join(" ")
}

/// Codewords of the optical orthogonal code given by the full orbits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OocExport {
    pub length: u32,
    pub weight: usize,
    pub codewords: Vec<Vec<u32>>,
    pub dropped_short_orbits: usize,
}

impl OocExport {
    pub fn to_text(&self) -> String {
        self.codewords.iter().map(|c| join(c) + "\n").collect()
    }
}

/// Largest periodic correlation `|A ∩ (B + t)|` over all shifts, excluding the
/// zero shift when `A = B`.
pub fn max_correlation(a: &[u32], b: &[u32], length: u32, same: bool) -> usize {
    let mut in_a = vec![false; length as usize];
    for &x in a {
        in_a[x as usize] = true;
    }
    let start = usize::from(same) as u32;
    (start..length)
        .map(|t| b.iter().filter(|&&y| in_a[((y + t) % length) as usize]).count())
        .max()
        .unwrap_or(0)
}

/// Base blocks of the full orbits as codeword supports. The auto- and
/// cross-correlations of the result are recomputed and must be at most 1.
pub fn export_ooc(d: &CyclicDesign) -> Result<OocExport> {
    let v = d.order();
    let codewords: Vec<Vec<u32>> = d
        .base_blocks()
        .iter()
        .filter(|b| b.orbit == OrbitKind::Full)
        .map(|b| b.block.points().to_vec())
        .collect();
    for (i, a) in codewords.iter().enumerate() {
        for (j, b) in codewords.iter().enumerate().skip(i) {
            let c = max_correlation(a, b, v, i == j);
            if c > 1 {
                return Err(Error::Precondition(format!(
                    "codewords {i} and {j} have correlation {c}; the input is not a packing"
                )));
            }
        }
    }
    Ok(OocExport {
        length: v,
        weight: d.block_size(),
        dropped_short_orbits: d.short_orbit_count(),
        codewords,
    })
}
