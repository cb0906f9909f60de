//! Backtracking search for cyclic even-free Steiner 2-designs.
//!
//! A cyclic `S(2, k, v)` is a family of base blocks whose differences cover
//! every nonzero residue of `Z_v` exactly once (a short orbit `{i·v/k}`
//! contributing each of its differences once). The search repeatedly takes
//! the smallest uncovered difference `d` and places a block `{0, d} ∪ T`; the
//! translate that puts the unique pair at difference `d` onto `(0, d)` is
//! unique, so every family is generated exactly once.
//!
//! After each placement the partially developed system is checked for a
//! generalized Pasch configuration through the new base block. Any even
//! configuration of `k + 1` blocks is one, and none are smaller, so this
//! prunes exactly the families that are not `(k + 1)`-even-free. Complete
//! families are re-verified from scratch.

use std::collections::BTreeMap;

use crate::algebra::units;
use crate::design::{Block, CyclicDesign, Kind, SetSystem};
use crate::verify::{check_difference_coverage, even_freeness, Budget, PaschFinder};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SearchSpec {
    pub v: u32,
    pub k: usize,
    /// Even-freeness target.
    pub r: usize,
    /// Stop after this many solutions.
    pub limit: usize,
    pub budget: Budget,
    pub reduce_multipliers: bool,
}

impl SearchSpec {
    pub fn new(v: u32, k: usize, r: usize) -> Self {
        Self {
            v,
            k,
            r,
            limit: usize::MAX,
            budget: Budget::unlimited(),
            reduce_multipliers: false,
        }
    }

    fn validate(&self) -> Result<()> {
        let k = self.k as u32;
        if k < 3 {
            return Err(Error::Precondition(format!("block size must be at least 3, got {k}")));
        }
        let m = k * (k - 1);
        if self.v <= k || (self.v % m != 1 && self.v % m != k % m) {
            return Err(Error::Precondition(format!(
                "order {} is not admissible: need v ≡ 1 or {k} (mod {m}) and v > {k}",
                self.v
            )));
        }
        if self.r < self.k {
            return Err(Error::Precondition(format!(
                "even-freeness target {} is below the block size {k}",
                self.r
            )));
        }
        if self.limit == 0 {
            return Err(Error::Precondition("solution limit must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchStatus {
    /// Every canonical family was examined.
    Exhausted,
    /// Stopped after `limit` solutions.
    LimitReached,
    /// Ran out of time; solutions found so far are returned.
    BudgetExhausted,
}

impl SearchStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            SearchStatus::Exhausted => "exhausted",
            SearchStatus::LimitReached => "limit-reached",
            SearchStatus::BudgetExhausted => "budget-exhausted",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub status: SearchStatus,
    pub designs: Vec<CyclicDesign>,
    /// Partial families visited.
    pub nodes: u64,
}

struct Searcher {
    spec: SearchSpec,
    covered: Vec<bool>,
    base: Vec<Block>,
    developed: Vec<Block>,
    found: Vec<CyclicDesign>,
    nodes: u64,
    prune_pasch: bool,
}

enum Flow {
    Continue,
    Stop(SearchStatus),
}

impl Searcher {
    fn diff(&self, a: u32, b: u32) -> usize {
        ((a + self.spec.v - b) % self.spec.v) as usize
    }

    /// Marks the differences of `b` covered if all are fresh and distinct.
    fn try_cover(&mut self, b: &Block) -> Option<Vec<usize>> {
        let pts = b.points();
        let mut marked = Vec::with_capacity(pts.len() * (pts.len() - 1));
        for (i, &a) in pts.iter().enumerate() {
            for &c in &pts[i + 1..] {
                for d in [self.diff(a, c), self.diff(c, a)] {
                    if self.covered[d] {
                        for &m in &marked {
                            self.covered[m] = false;
                        }
                        return None;
                    }
                    self.covered[d] = true;
                    marked.push(d);
                }
            }
        }
        Some(marked)
    }

    fn place(&mut self, b: Block, marked: Vec<usize>) -> Result<Flow> {
        let v = self.spec.v;
        let mark = self.developed.len();
        let root = mark;
        self.developed.extend((0..v).map(|t| b.translate(t, v)));
        self.base.push(b);
        let mut flow = Flow::Continue;
        if !self.prune_pasch || !self.has_pasch_at(root)? {
            flow = self.descend()?;
        }
        self.base.pop();
        self.developed.truncate(mark);
        for m in marked {
            self.covered[m] = false;
        }
        Ok(flow)
    }

    fn has_pasch_at(&self, root: usize) -> Result<bool> {
        let s = SetSystem::new(self.spec.v, self.spec.k, Kind::Packing, self.developed.clone())?;
        Ok(PaschFinder::new(&s).through_root(root, false).is_some())
    }

    fn descend(&mut self) -> Result<Flow> {
        self.nodes += 1;
        if self.nodes % 256 == 0 && self.spec.budget.expired() {
            return Ok(Flow::Stop(SearchStatus::BudgetExhausted));
        }
        let v = self.spec.v;
        let Some(d) = (1..=v / 2).find(|&d| !self.covered[d as usize]) else {
            return self.accept();
        };
        let k = self.spec.k;
        let mut rest: Vec<u32> = Vec::with_capacity(k - 2);
        self.extend_subset(d, 1, &mut rest)
    }

    /// Enumerates `T ⊂ Z_v \ {0, d}` of size `k - 2` in increasing order.
    fn extend_subset(&mut self, d: u32, from: u32, rest: &mut Vec<u32>) -> Result<Flow> {
        let (v, k) = (self.spec.v, self.spec.k);
        if rest.len() == k - 2 {
            let mut pts = vec![0, d];
            pts.extend_from_slice(rest);
            let b = Block::new(pts)?;
            if let Some(marked) = self.try_cover(&b) {
                if let Flow::Stop(s) = self.place(b, marked)? {
                    return Ok(Flow::Stop(s));
                }
            }
            return Ok(Flow::Continue);
        }
        let need = (k - 2 - rest.len()) as u32;
        for x in from..v {
            if v - x < need {
                break;
            }
            if x == d {
                continue;
            }
            rest.push(x);
            let flow = self.extend_subset(d, x + 1, rest)?;
            rest.pop();
            if let Flow::Stop(s) = flow {
                return Ok(Flow::Stop(s));
            }
        }
        Ok(Flow::Continue)
    }

    fn accept(&mut self) -> Result<Flow> {
        let (v, k, r) = (self.spec.v, self.spec.k, self.spec.r);
        let d = CyclicDesign::new(v, k, Kind::Design, self.base.clone())?;
        if !check_difference_coverage(&d).passed() {
            return Err(Error::Internal(format!("search produced a family that fails coverage: {:?}", self.base)));
        }
        match even_freeness(&d.develop(), r, self.spec.budget) {
            Ok(report) if report.is_even_free() => self.found.push(d),
            Ok(_) => {}
            Err(Error::BudgetExhausted) => return Ok(Flow::Stop(SearchStatus::BudgetExhausted)),
            Err(e) => return Err(e),
        }
        if self.found.len() >= self.spec.limit {
            return Ok(Flow::Stop(SearchStatus::LimitReached));
        }
        Ok(Flow::Continue)
    }
}

/// Exhaustive search over canonical difference families.
///
/// The returned designs are in ascending order of their base-block lists and
/// each has been re-verified for difference coverage and `r`-even-freeness.
pub fn search_difference_family(spec: SearchSpec) -> Result<SearchOutcome> {
    spec.validate()?;
    let (v, k) = (spec.v, spec.k);
    let mut s = Searcher {
        spec,
        covered: vec![false; v as usize],
        base: Vec::new(),
        developed: Vec::new(),
        found: Vec::new(),
        nodes: 0,
        prune_pasch: spec.r > k,
    };
    let m = (k * (k - 1)) as u32;
    let flow = if v % m == k as u32 % m {
        let step = v / k as u32;
        let short = Block::new((0..k as u32).map(|i| i * step).collect())?;
        for i in 1..k as u32 {
            s.covered[(i * step) as usize] = true;
        }
        let mark = s.developed.len();
        s.developed.extend((0..step).map(|t| short.translate(t, v)));
        s.base.push(short);
        let flow = s.descend()?;
        s.developed.truncate(mark);
        flow
    } else {
        s.descend()?
    };
    let status = match flow {
        Flow::Continue => SearchStatus::Exhausted,
        Flow::Stop(st) => st,
    };
    let mut designs = s.found;
    designs.sort_by(|a, b| a.base_blocks().cmp(b.base_blocks()));
    if spec.reduce_multipliers {
        designs = multiplier_reduce(&designs)?;
    }
    Ok(SearchOutcome { status, designs, nodes: s.nodes })
}

/// The least image of `d` under the multipliers `x ↦ u·x`, `u` a unit of `Z_v`.
pub fn multiplier_canonical(d: &CyclicDesign) -> Result<CyclicDesign> {
    let mut best: Option<CyclicDesign> = None;
    for u in units(d.order() as u64) {
        let img = d.multiply(u as u32)?;
        if best.as_ref().is_none_or(|b| img.base_blocks() < b.base_blocks()) {
            best = Some(img);
        }
    }
    best.ok_or_else(|| Error::Precondition("order 1 has no multipliers".into()))
}

/// One representative per multiplier class, namely the class's least member,
/// in ascending order.
pub fn multiplier_reduce(solutions: &[CyclicDesign]) -> Result<Vec<CyclicDesign>> {
    let Some(first) = solutions.first() else {
        return Ok(Vec::new());
    };
    let params = (first.order(), first.block_size());
    let mut classes = BTreeMap::new();
    for d in solutions {
        if (d.order(), d.block_size()) != params {
            return Err(Error::Precondition(format!(
                "mixed parameters: (v={}, k={}) and (v={}, k={})",
                params.0,
                params.1,
                d.order(),
                d.block_size()
            )));
        }
        let c = multiplier_canonical(d)?;
        classes.entry(c.base_blocks().to_vec()).or_insert(c);
    }
    Ok(classes.into_values().collect())
}
