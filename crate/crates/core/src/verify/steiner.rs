use std::collections::HashMap;

use crate::design::{CyclicDesign, Kind, OrbitKind, Point, SetSystem};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SteinerReport {
    Pass,
    /// Lexicographically first pair whose multiplicity violates the kind.
    Fail { pair: (Point, Point), multiplicity: usize },
}

impl SteinerReport {
    pub fn passed(&self) -> bool {
        matches!(self, SteinerReport::Pass)
    }
}

/// Every unordered pair must lie in exactly one block (design) or at most one
/// block (packing).
pub fn check_steiner(s: &SetSystem) -> SteinerReport {
    let v = s.order() as usize;
    let design = s.kind() == Kind::Design;
    let bad = |m: usize| if design { m != 1 } else { m > 1 };

    if v <= 4096 {
        let mut counts = vec![0u16; v * v];
        for b in s.blocks() {
            let pts = b.points();
            for (x, &a) in pts.iter().enumerate() {
                for &c in &pts[x + 1..] {
                    let slot = &mut counts[a as usize * v + c as usize];
                    *slot = slot.saturating_add(1);
                }
            }
        }
        for a in 0..v {
            for c in a + 1..v {
                let m = counts[a * v + c] as usize;
                if bad(m) {
                    return SteinerReport::Fail {
                        pair: (a as Point, c as Point),
                        multiplicity: m,
                    };
                }
            }
        }
        return SteinerReport::Pass;
    }

    let mut counts: HashMap<(Point, Point), usize> = HashMap::new();
    for b in s.blocks() {
        let pts = b.points();
        for (x, &a) in pts.iter().enumerate() {
            for &c in &pts[x + 1..] {
                *counts.entry((a, c)).or_default() += 1;
            }
        }
    }
    if let Some((&pair, &m)) = counts.iter().filter(|(_, &m)| m > 1).min() {
        return SteinerReport::Fail { pair, multiplicity: m };
    }
    if design {
        for a in 0..v as Point {
            for c in a + 1..v as Point {
                if !counts.contains_key(&(a, c)) {
                    return SteinerReport::Fail { pair: (a, c), multiplicity: 0 };
                }
            }
        }
    }
    SteinerReport::Pass
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoverageReport {
    Pass,
    /// Smallest residue covered the wrong number of times. Counts are in
    /// pair-coverage units: a short orbit contributes each of its `k` ordered
    /// differences as `1/k`, so `expected_k_units` is `k` for a design.
    Fail {
        difference: u32,
        covered_k_units: usize,
        expected_k_units: usize,
    },
}

impl CoverageReport {
    pub fn passed(&self) -> bool {
        matches!(self, CoverageReport::Pass)
    }
}

/// Difference-family test for a cyclic design.
///
/// Full base blocks must cover each nonzero residue once in total; the short
/// orbit covers the multiples of `v/k` exactly `k` times each, which counts as
/// a single covering because its orbit has only `v/k` translates.
pub fn check_difference_coverage(d: &CyclicDesign) -> CoverageReport {
    let v = d.order() as usize;
    let k = d.block_size();
    let mut cover = vec![0usize; v];
    for b in d.base_blocks() {
        let weight = match b.orbit {
            OrbitKind::Full => k,
            OrbitKind::Short => 1,
        };
        let pts = b.block.points();
        for &x in pts {
            for &y in pts {
                if x != y {
                    cover[(y as usize + v - x as usize) % v] += weight;
                }
            }
        }
    }
    let design = d.kind() == Kind::Design;
    for (diff, &c) in cover.iter().enumerate().skip(1) {
        let ok = if design { c == k } else { c <= k };
        if !ok {
            return CoverageReport::Fail {
                difference: diff as u32,
                covered_k_units: c,
                expected_k_units: k,
            };
        }
    }
    CoverageReport::Pass
}
