use crate::construct::{DifferenceMatrix, OrthogonalArray};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DmReport {
    Pass,
    /// First row pair and residue hit a number of times other than once.
    Fail { rows: (usize, usize), residue: u32, count: usize },
}

impl DmReport {
    pub fn passed(&self) -> bool {
        matches!(self, DmReport::Pass)
    }
}

/// For every pair of rows `r < r'`, the column differences `a[r][j] - a[r'][j]`
/// must hit every residue mod `v` exactly once.
pub fn check_dm(m: &DifferenceMatrix) -> DmReport {
    let v = m.modulus() as usize;
    let rows = m.rows();
    let mut counts = vec![0usize; v];
    for r in 0..rows.len() {
        for r2 in r + 1..rows.len() {
            counts.iter_mut().for_each(|c| *c = 0);
            for (a, b) in rows[r].iter().zip(&rows[r2]) {
                counts[(*a as usize + v - *b as usize) % v] += 1;
            }
            if let Some((residue, &count)) = counts.iter().enumerate().find(|(_, &c)| c != 1) {
                return DmReport::Fail { rows: (r, r2), residue: residue as u32, count };
            }
        }
    }
    DmReport::Pass
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OaFailure {
    pub rows: (usize, usize),
    pub symbols: (u32, u32),
    pub count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OaReport {
    pub failure: Option<OaFailure>,
    /// Every parallel class found, each as ascending column indices.
    pub parallel_classes: Vec<Vec<usize>>,
    /// Whether `parallel_classes` is the complete list.
    pub exhaustive: bool,
}

impl OaReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// Largest symbol count for which parallel classes are enumerated exhaustively.
const EXHAUSTIVE_CLASS_LIMIT: u32 = 9;

pub fn check_oa(a: &OrthogonalArray) -> OaReport {
    let s = a.symbols() as usize;
    let rows = a.rows();
    let mut failure = None;
    'outer: for r in 0..rows.len() {
        for r2 in r + 1..rows.len() {
            let mut counts = vec![0usize; s * s];
            for (x, y) in rows[r].iter().zip(&rows[r2]) {
                counts[*x as usize * s + *y as usize] += 1;
            }
            if let Some((cell, &count)) = counts.iter().enumerate().find(|(_, &c)| c != 1) {
                failure = Some(OaFailure {
                    rows: (r, r2),
                    symbols: ((cell / s) as u32, (cell % s) as u32),
                    count,
                });
                break 'outer;
            }
        }
    }
    let exhaustive = a.symbols() <= EXHAUSTIVE_CLASS_LIMIT;
    let parallel_classes = if exhaustive {
        all_parallel_classes(a)
    } else {
        greedy_parallel_classes(a)
    };
    OaReport { failure, parallel_classes, exhaustive }
}

/// Columns `c`, `c'` can share a parallel class iff they differ in every row.
fn disjoint(a: &OrthogonalArray, c: usize, c2: usize) -> bool {
    a.rows().iter().all(|row| row[c] != row[c2])
}

pub fn check_oa_class(a: &OrthogonalArray, cols: &[usize]) -> bool {
    let s = a.symbols() as usize;
    cols.len() == s
        && a.rows().iter().all(|row| {
            let mut seen = vec![false; s];
            cols.iter().all(|&c| !std::mem::replace(&mut seen[row[c] as usize], true))
        })
}

fn all_parallel_classes(a: &OrthogonalArray) -> Vec<Vec<usize>> {
    let s = a.symbols();
    if a.rows().is_empty() {
        return Vec::new();
    }
    // columns grouped by their row-0 symbol; a class takes one from each group
    let mut by_symbol = vec![Vec::new(); s as usize];
    for (c, &x) in a.rows()[0].iter().enumerate() {
        by_symbol[x as usize].push(c);
    }
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(s as usize);
    extend_class(a, &by_symbol, &mut chosen, &mut out);
    for class in &mut out {
        class.sort_unstable();
    }
    out.sort();
    out
}

fn extend_class(
    a: &OrthogonalArray,
    by_symbol: &[Vec<usize>],
    chosen: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    let depth = chosen.len();
    if depth == by_symbol.len() {
        out.push(chosen.clone());
        return;
    }
    for &c in &by_symbol[depth] {
        if chosen.iter().all(|&c2| disjoint(a, c, c2)) {
            chosen.push(c);
            extend_class(a, by_symbol, chosen, out);
            chosen.pop();
        }
    }
}

fn greedy_parallel_classes(a: &OrthogonalArray) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = Vec::new();
    if let Some(class) = a.parallel_class() {
        if check_oa_class(a, class) {
            let mut c = class.to_vec();
            c.sort_unstable();
            out.push(c);
        }
    }
    let Some(row0) = a.rows().first() else {
        return out;
    };
    for start in (0..row0.len()).filter(|&c| row0[c] == 0) {
        let mut class = vec![start];
        for c in 0..row0.len() {
            if class.len() < a.symbols() as usize && class.iter().all(|&c2| c2 != c && disjoint(a, c, c2)) {
                class.push(c);
            }
        }
        class.sort_unstable();
        if check_oa_class(a, &class) && !out.contains(&class) {
            out.push(class);
        }
    }
    out.sort();
    out
}
