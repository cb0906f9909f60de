//! Even configurations: bounded minimum search, a brute-force oracle, the
//! generalized Pasch detector and the two-orbit witness.

use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};

use rayon::prelude::*;

use super::pairs::{point_blocks, PairTable};
use super::{check_difference_coverage, check_steiner, Budget};
use crate::design::{Block, CyclicDesign, SetSystem};
use crate::{Error, Result};

/// Sorted, distinct block indices into a [`SetSystem`] such that every point
/// is covered an even number of times.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EvenConfiguration(Vec<usize>);

impl EvenConfiguration {
    /// Sorts the indices and checks the evenness condition against `s`.
    pub fn new(mut blocks: Vec<usize>, s: &SetSystem) -> Result<Self> {
        blocks.sort_unstable();
        let c = EvenConfiguration(blocks);
        if c.is_valid(s) {
            Ok(c)
        } else {
            Err(Error::Internal(format!("{:?} is not an even configuration", c.0)))
        }
    }

    pub fn blocks(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Independent re-check: nonempty, distinct in-range indices, even point
    /// degrees.
    pub fn is_valid(&self, s: &SetSystem) -> bool {
        if self.0.is_empty() || self.0.windows(2).any(|w| w[0] >= w[1]) {
            return false;
        }
        if self.0.last().is_some_and(|&i| i >= s.len()) {
            return false;
        }
        let mut degree = vec![0u32; s.order() as usize];
        for &i in &self.0 {
            for &p in s.blocks()[i].points() {
                degree[p as usize] += 1;
            }
        }
        degree.iter().all(|d| d % 2 == 0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvenFreenessReport {
    pub r_checked: usize,
    /// Lexicographically least even configuration of minimum size, if one of
    /// size at most `r_checked` exists.
    pub minimal_witness: Option<EvenConfiguration>,
}

impl EvenFreenessReport {
    /// True when the system is `r_checked`-even-free.
    pub fn is_even_free(&self) -> bool {
        self.minimal_witness.is_none()
    }
}

/// Point-parity bitset.
#[derive(Clone)]
struct Parity {
    words: Vec<u64>,
    odd: usize,
}

impl Parity {
    fn new(v: usize) -> Self {
        Parity { words: vec![0; v.div_ceil(64).max(1)], odd: 0 }
    }

    #[inline]
    fn toggle(&mut self, p: u32) {
        let w = &mut self.words[p as usize >> 6];
        let bit = 1u64 << (p & 63);
        if *w & bit == 0 {
            self.odd += 1;
        } else {
            self.odd -= 1;
        }
        *w ^= bit;
    }

    #[inline]
    fn is_odd(&self, p: u32) -> bool {
        self.words[p as usize >> 6] >> (p & 63) & 1 == 1
    }

    #[inline]
    fn lowest_two(&self) -> (Option<u32>, Option<u32>) {
        let mut first = None;
        for (i, &w) in self.words.iter().enumerate() {
            let mut w = w;
            while w != 0 {
                let p = (i as u32) * 64 + w.trailing_zeros();
                if first.is_some() {
                    return (first, Some(p));
                }
                first = Some(p);
                w &= w - 1;
            }
        }
        (first, None)
    }
}

const NODES_PER_BUDGET_CHECK: u64 = 1 << 14;

struct SearchShared<'a> {
    blocks: Vec<&'a [u32]>,
    through: Vec<Vec<u32>>,
    pairs: PairTable,
    k: usize,
    bound: AtomicUsize,
    stop: AtomicBool,
    budget: Budget,
}

struct Dfs<'s, 'a> {
    shared: &'s SearchShared<'a>,
    parity: Parity,
    chosen: Vec<u32>,
    first: u32,
    best: Option<Vec<usize>>,
    nodes: u64,
}

impl Dfs<'_, '_> {
    fn toggle_block(&mut self, b: u32) {
        for &p in self.shared.blocks[b as usize] {
            self.parity.toggle(p);
        }
    }

    fn record(&mut self, extra: Option<u32>) {
        let mut found: Vec<usize> = self.chosen.iter().map(|&b| b as usize).collect();
        found.extend(extra.map(|b| b as usize));
        found.sort_unstable();
        let better = match &self.best {
            None => true,
            Some(cur) => (found.len(), &found) < (cur.len(), cur),
        };
        if better {
            self.shared.bound.fetch_min(found.len(), Ordering::Relaxed);
            self.best = Some(found);
        }
    }

    fn run(&mut self) {
        self.nodes += 1;
        if self.nodes % NODES_PER_BUDGET_CHECK == 0 && self.shared.budget.expired() {
            self.shared.stop.store(true, Ordering::Relaxed);
        }
        if self.shared.stop.load(Ordering::Relaxed) {
            return;
        }
        if self.parity.odd == 0 {
            self.record(None);
            return;
        }
        let depth = self.chosen.len();
        let limit = self.shared.bound.load(Ordering::Relaxed);
        if depth >= limit {
            return;
        }
        let remaining = limit - depth;
        // one block flips at most k parities
        if self.parity.odd > self.shared.k * remaining {
            return;
        }
        let (Some(low), second) = self.parity.lowest_two() else {
            return;
        };
        if remaining == 1 {
            // the odd points must be exactly one more block
            if self.parity.odd != self.shared.k {
                return;
            }
            let candidate = match second {
                Some(p2) if self.shared.pairs.is_linear() => self.shared.pairs.block(low, p2).map(|b| b as u32),
                _ => self.shared.through[low as usize].iter().copied().find(|&b| {
                    b > self.first
                        && !self.chosen.contains(&b)
                        && self.shared.blocks[b as usize].iter().all(|&p| self.parity.is_odd(p))
                }),
            };
            if let Some(b) = candidate {
                if b > self.first
                    && !self.chosen.contains(&b)
                    && self.shared.blocks[b as usize].iter().all(|&p| self.parity.is_odd(p))
                {
                    self.record(Some(b));
                }
            }
            return;
        }
        let through = &self.shared.through[low as usize];
        let start = through.partition_point(|&b| b <= self.first);
        for &b in &through[start..] {
            if self.chosen.contains(&b) {
                continue;
            }
            self.toggle_block(b);
            self.chosen.push(b);
            self.run();
            self.chosen.pop();
            self.toggle_block(b);
        }
    }
}

/// Finds a minimum even configuration of at most `r_max` blocks, or certifies
/// that none exists.
///
/// Depth-first search rooted at each block as the lowest-indexed member; every
/// later block must contain the lowest point of odd parity, and a branch is
/// cut once the odd points outnumber what the remaining blocks can flip. Roots
/// are searched in parallel and the answer is reduced to (size, indices), so
/// the witness does not depend on scheduling. With one block left the odd
/// points are matched against the pair table directly.
pub fn even_freeness(s: &SetSystem, r_max: usize, budget: Budget) -> Result<EvenFreenessReport> {
    if r_max == 0 {
        return Err(Error::Precondition("r_max must be at least 1".into()));
    }
    let shared = SearchShared {
        blocks: s.blocks().iter().map(Block::points).collect(),
        through: point_blocks(s),
        pairs: PairTable::new(s),
        k: s.block_size(),
        bound: AtomicUsize::new(r_max),
        stop: AtomicBool::new(false),
        budget,
    };
    let v = s.order() as usize;
    let best = (0..s.len() as u32)
        .into_par_iter()
        .filter_map(|first| {
            let mut dfs = Dfs {
                shared: &shared,
                parity: Parity::new(v),
                chosen: vec![first],
                first,
                best: None,
                nodes: 0,
            };
            dfs.toggle_block(first);
            dfs.run();
            dfs.best
        })
        .min_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    if shared.stop.load(Ordering::Relaxed) {
        return Err(Error::BudgetExhausted);
    }
    let minimal_witness = best.map(|w| EvenConfiguration::new(w, s)).transpose()?;
    Ok(EvenFreenessReport { r_checked: r_max, minimal_witness })
}

pub const BRUTE_FORCE_BLOCK_LIMIT: usize = 26;

/// Exhaustive minimum over all `2^b` block subsets (Gray-code order, one
/// block toggled per step). Independent of [`even_freeness`]; used as its
/// oracle.
pub fn brute_force_even_minimum(s: &SetSystem) -> Result<Option<EvenConfiguration>> {
    let b = s.len();
    if b > BRUTE_FORCE_BLOCK_LIMIT {
        return Err(Error::TooManyBlocks(b, BRUTE_FORCE_BLOCK_LIMIT));
    }
    if b == 0 {
        return Ok(None);
    }
    let words = (s.order() as usize).div_ceil(64).max(1);
    let masks: Vec<Vec<u64>> = s
        .blocks()
        .iter()
        .map(|blk| {
            let mut m = vec![0u64; words];
            for &p in blk.points() {
                m[p as usize >> 6] ^= 1 << (p & 63);
            }
            m
        })
        .collect();

    // high bits fixed per chunk, Gray code over the low bits
    let high = b.saturating_sub(16).min(8);
    let low = b - high;
    let best = (0u32..1 << high)
        .into_par_iter()
        .filter_map(|h| {
            let mut parity = vec![0u64; words];
            let mut subset: u32 = h << low;
            for i in 0..high {
                if h >> i & 1 == 1 {
                    xor_into(&mut parity, &masks[low + i]);
                }
            }
            let mut best: Option<u32> = None;
            let mut consider = |subset: u32, parity: &[u64]| {
                if subset != 0 && parity.iter().all(|&w| w == 0) {
                    best = Some(match best {
                        Some(cur) if !subset_less(subset, cur) => cur,
                        _ => subset,
                    });
                }
            };
            consider(subset, &parity);
            for step in 1u32..1 << low {
                let bit = step.trailing_zeros() as usize;
                subset ^= 1 << bit;
                xor_into(&mut parity, &masks[bit]);
                consider(subset, &parity);
            }
            best
        })
        .reduce_with(|a, c| if subset_less(a, c) { a } else { c });
    best.map(|m| EvenConfiguration::new((0..b).filter(|i| m >> i & 1 == 1).collect(), s))
        .transpose()
}

fn xor_into(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d ^= s;
    }
}

/// Order on subsets as bitmasks: size first, then lexicographic on the sorted
/// index lists (the set holding the lowest differing index is smaller).
fn subset_less(a: u32, b: u32) -> bool {
    match a.count_ones().cmp(&b.count_ones()) {
        std::cmp::Ordering::Less => true,
        std::cmp::Ordering::Greater => false,
        std::cmp::Ordering::Equal => {
            let d = a ^ b;
            d != 0 && a & (d & d.wrapping_neg()) != 0
        }
    }
}

/// Finds a generalized Pasch configuration: `k + 1` blocks meeting pairwise in
/// `C(k+1, 2)` distinct points (for `k = 3`, the Pasch configuration).
///
/// Returns the lexicographically least one. The root block is the lowest
/// index in the configuration; every other block passes through a distinct
/// point of the root and meets the first of them outside the root, so the
/// remaining blocks are determined by point pairs.
pub fn find_generalized_pasch(s: &SetSystem) -> Result<Option<EvenConfiguration>> {
    if let super::SteinerReport::Fail { pair, multiplicity } = check_steiner(s) {
        return Err(Error::Precondition(format!(
            "not a valid {:?}: pair {pair:?} covered {multiplicity} times",
            s.kind()
        )));
    }
    let finder = PaschFinder::new(s);
    let found = (0..s.len())
        .into_par_iter()
        .find_map_first(|root| finder.through_root(root, true));
    found.map(|w| EvenConfiguration::new(w, s)).transpose()
}

pub(crate) struct PaschFinder<'a> {
    s: &'a SetSystem,
    pairs: PairTable,
    through: Vec<Vec<u32>>,
}

impl<'a> PaschFinder<'a> {
    pub(crate) fn new(s: &'a SetSystem) -> Self {
        PaschFinder { s, pairs: PairTable::new(s), through: point_blocks(s) }
    }

    /// Lexicographically least generalized Pasch containing `root`; with
    /// `root_is_min` every other block must have a larger index.
    pub(crate) fn through_root(&self, root: usize, root_is_min: bool) -> Option<Vec<usize>> {
        let k = self.s.block_size();
        if k < 2 {
            return None;
        }
        let root_pts = self.s.blocks()[root].points();
        let mut best: Option<Vec<usize>> = None;
        for &first in &self.through[root_pts[0] as usize] {
            let first = first as usize;
            if first == root || (root_is_min && first < root) {
                continue;
            }
            let mut chosen = vec![first];
            let mut used: Vec<u32> = Vec::new();
            self.extend(root, root_is_min, 1, &mut chosen, &mut used, &mut best);
        }
        best
    }

    fn extend(
        &self,
        root: usize,
        root_is_min: bool,
        next: usize,
        chosen: &mut Vec<usize>,
        used: &mut Vec<u32>,
        best: &mut Option<Vec<usize>>,
    ) {
        let blocks = self.s.blocks();
        let root_blk = &blocks[root];
        let k = root_blk.len();
        if next == k {
            let mut found = chosen.clone();
            found.push(root);
            found.sort_unstable();
            if best.as_ref().is_none_or(|b| found < *b) {
                *best = Some(found);
            }
            return;
        }
        let p = root_blk.points()[next];
        let first = &blocks[chosen[0]];
        for &q in first.points() {
            if root_blk.contains(q) || used.contains(&q) {
                continue;
            }
            let Some(c) = self.pairs.block(p, q) else { continue };
            if c == root || (root_is_min && c < root) || chosen.contains(&c) {
                continue;
            }
            let cand = &blocks[c];
            // c must meet every chosen block after the first at a fresh point
            let mut meets = Vec::with_capacity(chosen.len());
            meets.push(q);
            let ok = chosen[1..].iter().all(|&o| {
                match blocks[o].points().iter().find(|&&x| cand.contains(x)) {
                    Some(&x) if !root_blk.contains(x) && !used.contains(&x) && !meets.contains(&x) => {
                        meets.push(x);
                        true
                    }
                    _ => false,
                }
            });
            if !ok {
                continue;
            }
            let mark = used.len();
            used.extend_from_slice(&meets);
            chosen.push(c);
            self.extend(root, root_is_min, next + 1, chosen, used, best);
            chosen.pop();
            used.truncate(mark);
        }
    }
}

/// The `2k`-block even configuration obtained by developing two blocks from
/// distinct orbits that share a point.
///
/// With `B0`, `B1` the first two base blocks (both contain 0), the
/// configuration is `B0`, `B1`, `B0 + g` for `g ∈ B1 \ {0}` and `B1 + g` for
/// `g ∈ B0 \ {0}`. Indices refer to `d.develop()`.
pub fn two_orbit_witness(d: &CyclicDesign) -> Result<EvenConfiguration> {
    if !check_difference_coverage(d).passed() || d.kind() != crate::design::Kind::Design {
        return Err(Error::Precondition("not a cyclic Steiner 2-design".into()));
    }
    let bases = d.base_blocks();
    if bases.len() < 2 {
        return Err(Error::Precondition(
            "design has a single block orbit (trivial or a projective plane)".into(),
        ));
    }
    let v = d.order();
    let b0 = &bases[0].block;
    let b1 = &bases[1].block;
    let mut config = vec![b0.clone(), b1.clone()];
    config.extend(b1.points().iter().filter(|&&g| g != 0).map(|&g| b0.translate(g, v)));
    config.extend(b0.points().iter().filter(|&&g| g != 0).map(|&g| b1.translate(g, v)));

    let s = d.develop();
    let indices = config
        .iter()
        .map(|b| {
            s.blocks()
                .binary_search(b)
                .map_err(|_| Error::Internal(format!("translate {b} missing from development")))
        })
        .collect::<Result<Vec<_>>>()?;
    let witness = EvenConfiguration::new(indices, &s)?;
    if witness.len() != 2 * d.block_size() {
        return Err(Error::Internal(format!(
            "two-orbit configuration has {} blocks, expected {}",
            witness.len(),
            2 * d.block_size()
        )));
    }
    Ok(witness)
}
