//! Set systems and their cyclic orbit-representative form.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::gcd;
use crate::{Error, Result};

pub type Point = u32;

/// A block: strictly increasing point indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Block(Vec<Point>);

impl Block {
    /// Sorts the points; rejects repeated points.
    pub fn new(mut points: Vec<Point>) -> Result<Self> {
        points.sort_unstable();
        if points.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidBlock {
                block: points,
                reason: "repeated point".into(),
            });
        }
        Ok(Block(points))
    }

    pub fn points(&self) -> &[Point] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, p: Point) -> bool {
        self.0.binary_search(&p).is_ok()
    }

    /// `B + t (mod v)`.
    pub fn translate(&self, t: u32, v: u32) -> Block {
        let mut pts: Vec<Point> = self.0.iter().map(|&x| ((x as u64 + t as u64) % v as u64) as u32).collect();
        pts.sort_unstable();
        Block(pts)
    }

    /// `u·B (mod v)`; only a bijection when `u` is a unit.
    pub fn scale(&self, u: u32, v: u32) -> Result<Block> {
        Block::new(self.0.iter().map(|&x| ((x as u64 * u as u64) % v as u64) as u32).collect())
    }

    /// The lexicographically least translate of this block in `Z_v`.
    ///
    /// The least translate always contains 0, so only the `k` translates
    /// moving a point of the block onto 0 need to be compared.
    pub fn canonical_translate(&self, v: u32) -> Block {
        self.0
            .iter()
            .map(|&x| self.translate(v - x % v, v))
            .min()
            .unwrap_or_else(|| self.clone())
    }

    pub fn into_vec(self) -> Vec<Point> {
        self.0
    }
}

impl fmt::Display for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Design,
    Packing,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrbitKind {
    Full,
    Short,
}

/// An explicit list of blocks on the points `0..v`.
///
/// Construction checks block shape (size `k`, points in range). Pair
/// multiplicities are not enforced here so that arbitrary input can still be
/// examined by the verifiers; constructions only emit valid systems.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetSystem {
    v: u32,
    k: usize,
    kind: Kind,
    blocks: Vec<Block>,
}

impl SetSystem {
    pub fn new(v: u32, k: usize, kind: Kind, blocks: Vec<Block>) -> Result<Self> {
        for b in &blocks {
            if b.len() != k {
                return Err(Error::InvalidBlock {
                    block: b.0.clone(),
                    reason: format!("expected {k} points"),
                });
            }
            if b.0.last().is_some_and(|&p| p >= v) {
                return Err(Error::InvalidBlock {
                    block: b.0.clone(),
                    reason: format!("point out of range 0..{v}"),
                });
            }
        }
        Ok(Self { v, k, kind, blocks })
    }

    pub fn order(&self) -> u32 {
        self.v
    }

    pub fn block_size(&self) -> usize {
        self.k
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// The sub-system formed by the given block indices, in that order.
    pub fn restrict(&self, indices: &[usize], kind: Kind) -> SetSystem {
        SetSystem {
            v: self.v,
            k: self.k,
            kind,
            blocks: indices.iter().map(|&i| self.blocks[i].clone()).collect(),
        }
    }

    pub fn pair_index(&self) -> BTreeMap<(Point, Point), Vec<usize>> {
        pair_index(self)
    }
}

/// Inverted index from each covered unordered pair `(a, b)`, `a < b`, to the
/// blocks containing it.
pub fn pair_index(s: &SetSystem) -> BTreeMap<(Point, Point), Vec<usize>> {
    let mut index: BTreeMap<(Point, Point), Vec<usize>> = BTreeMap::new();
    for (i, b) in s.blocks.iter().enumerate() {
        let pts = b.points();
        for (x, &a) in pts.iter().enumerate() {
            for &c in &pts[x + 1..] {
                index.entry((a, c)).or_default().push(i);
            }
        }
    }
    index
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BaseBlock {
    pub block: Block,
    pub orbit: OrbitKind,
}

/// A base block with a fixed point order, as consumed by the product
/// constructions. The order is ascending on the canonical representative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderedBaseBlock(Vec<Point>);

impl OrderedBaseBlock {
    pub fn points(&self) -> &[Point] {
        &self.0
    }
}

/// Orbit representatives of a set system invariant under `i ↦ i + 1 (mod v)`.
///
/// Base blocks are stored as their lexicographically least translates,
/// sorted, with distinct orbits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicDesign {
    v: u32,
    k: usize,
    kind: Kind,
    base_blocks: Vec<BaseBlock>,
}

impl CyclicDesign {
    pub fn new(v: u32, k: usize, kind: Kind, blocks: Vec<Block>) -> Result<Self> {
        if v == 0 {
            return Err(Error::Precondition("order must be positive".into()));
        }
        let mut seen = HashSet::new();
        let mut base_blocks = Vec::with_capacity(blocks.len());
        for b in blocks {
            if b.len() != k || b.0.last().is_some_and(|&p| p >= v) {
                return Err(Error::InvalidBlock {
                    block: b.0,
                    reason: format!("expected {k} points in 0..{v}"),
                });
            }
            let canon = b.canonical_translate(v);
            let orbit = orbit_kind(&canon, v)?;
            if !seen.insert(canon.clone()) {
                return Err(Error::DuplicateBlock(canon.0));
            }
            base_blocks.push(BaseBlock { block: canon, orbit });
        }
        base_blocks.sort();
        Ok(Self { v, k, kind, base_blocks })
    }

    pub fn order(&self) -> u32 {
        self.v
    }

    pub fn block_size(&self) -> usize {
        self.k
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn base_blocks(&self) -> &[BaseBlock] {
        &self.base_blocks
    }

    pub fn ordered_base_blocks(&self) -> Vec<OrderedBaseBlock> {
        self.base_blocks
            .iter()
            .map(|b| OrderedBaseBlock(b.block.0.clone()))
            .collect()
    }

    pub fn short_orbit(&self) -> Option<&Block> {
        self.base_blocks
            .iter()
            .find(|b| b.orbit == OrbitKind::Short)
            .map(|b| &b.block)
    }

    pub fn full_orbit_count(&self) -> usize {
        self.base_blocks.iter().filter(|b| b.orbit == OrbitKind::Full).count()
    }

    pub fn short_orbit_count(&self) -> usize {
        self.base_blocks.len() - self.full_orbit_count()
    }

    pub fn orbit_len(&self, orbit: OrbitKind) -> u32 {
        match orbit {
            OrbitKind::Full => self.v,
            OrbitKind::Short => self.v / self.k as u32,
        }
    }

    pub fn block_count(&self) -> usize {
        self.base_blocks.iter().map(|b| self.orbit_len(b.orbit) as usize).sum()
    }

    /// Image under `x ↦ u·x`, re-canonicalised.
    pub fn multiply(&self, u: u32) -> Result<CyclicDesign> {
        if gcd(u as u64, self.v as u64) != 1 {
            return Err(Error::Precondition(format!("{u} is not a unit modulo {}", self.v)));
        }
        let blocks = self
            .base_blocks
            .iter()
            .map(|b| b.block.scale(u, self.v))
            .collect::<Result<Vec<_>>>()?;
        CyclicDesign::new(self.v, self.k, self.kind, blocks)
    }

    pub fn with_kind(mut self, kind: Kind) -> Self {
        self.kind = kind;
        self
    }

    pub fn develop(&self) -> SetSystem {
        develop(self)
    }
}

/// Classifies the orbit of a canonical block; a short orbit must be the
/// subgroup `{i·v/k}`.
fn orbit_kind(canon: &Block, v: u32) -> Result<OrbitKind> {
    let k = canon.len() as u32;
    let g = gcd(k as u64, v as u64) as u32;
    let stabilised = (2..=g).filter(|d| g % d == 0).any(|d| canon.translate(v / d, v) == *canon);
    if !stabilised {
        return Ok(OrbitKind::Full);
    }
    if v % k == 0 && canon.0.iter().enumerate().all(|(i, &p)| p == i as u32 * (v / k)) {
        Ok(OrbitKind::Short)
    } else {
        Err(Error::UnsupportedOrbit(canon.0.clone()))
    }
}

/// All distinct translates of all base blocks, sorted lexicographically.
pub fn develop(d: &CyclicDesign) -> SetSystem {
    let mut blocks = Vec::with_capacity(d.block_count());
    for b in &d.base_blocks {
        for t in 0..d.orbit_len(b.orbit) {
            blocks.push(b.block.translate(t, d.v));
        }
    }
    blocks.sort_unstable();
    debug_assert!(blocks.windows(2).all(|w| w[0] != w[1]));
    SetSystem {
        v: d.v,
        k: d.k,
        kind: d.kind,
        blocks,
    }
}

/// Recovers orbit representatives from a translation-closed set system.
pub fn orbit_reps(s: &SetSystem) -> Result<CyclicDesign> {
    let present: HashSet<&Block> = s.blocks.iter().collect();
    if present.len() != s.blocks.len() {
        let mut seen = HashSet::new();
        let dup = s.blocks.iter().find(|b| !seen.insert(*b)).expect("duplicate exists");
        return Err(Error::DuplicateBlock(dup.0.clone()));
    }
    for b in &s.blocks {
        let next = b.translate(1, s.v);
        if !present.contains(&next) {
            return Err(Error::NotTranslationClosed {
                source_block: b.0.clone(),
                missing: next.0,
            });
        }
    }
    let reps: std::collections::BTreeSet<Block> =
        s.blocks.iter().map(|b| b.canonical_translate(s.v)).collect();
    CyclicDesign::new(s.v, s.k, s.kind, reps.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn blk(p: &[u32]) -> Block {
        Block::new(p.to_vec()).unwrap()
    }

    fn fano() -> CyclicDesign {
        CyclicDesign::new(7, 3, Kind::Design, vec![blk(&[0, 1, 3])]).unwrap()
    }

    fn sts15() -> CyclicDesign {
        CyclicDesign::new(
            15,
            3,
            Kind::Design,
            vec![blk(&[0, 5, 10]), blk(&[0, 1, 4]), blk(&[0, 2, 8])],
        )
        .unwrap()
    }

    #[test]
    fn develop_fano() {
        let s = fano().develop();
        assert_eq!(s.len(), 7);
        for i in 0..7u32 {
            assert!(s.blocks().contains(&blk(&[i, (i + 1) % 7, (i + 3) % 7])));
        }
    }

    #[test]
    fn develop_short_orbit_only() {
        let d = CyclicDesign::new(3, 3, Kind::Design, vec![blk(&[0, 1, 2])]).unwrap();
        assert_eq!(d.base_blocks()[0].orbit, OrbitKind::Short);
        assert_eq!(d.develop().len(), 1);
    }

    #[test]
    fn develop_sts15_counts() {
        let d = sts15();
        assert_eq!(d.short_orbit_count(), 1);
        assert_eq!(d.develop().len(), 35);
        assert_eq!(d.block_count(), 15 * 14 / 6);
    }

    #[test]
    fn orbit_reps_round_trip() {
        for d in [fano(), sts15()] {
            let back = orbit_reps(&d.develop()).unwrap();
            assert_eq!(back, d);
        }
        assert_eq!(orbit_reps(&fano().develop()).unwrap().base_blocks().len(), 1);
    }

    #[test]
    fn orbit_reps_reports_missing_translate() {
        let s = fano().develop();
        let mut blocks = s.blocks().to_vec();
        let removed = blocks.remove(3);
        let broken = SetSystem::new(7, 3, Kind::Design, blocks).unwrap();
        match orbit_reps(&broken) {
            Err(Error::NotTranslationClosed { missing, .. }) => assert_eq!(missing, removed.into_vec()),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn canonical_translate_is_least() {
        let b = blk(&[3, 4, 6]);
        assert_eq!(b.canonical_translate(7), blk(&[0, 1, 3]));
        let all: Vec<Block> = (0..7).map(|t| b.translate(t, 7)).collect();
        assert_eq!(all.iter().min().unwrap(), &b.canonical_translate(7));
    }

    #[test]
    fn duplicate_orbits_rejected() {
        let err = CyclicDesign::new(7, 3, Kind::Design, vec![blk(&[0, 1, 3]), blk(&[1, 2, 4])]);
        assert_eq!(err, Err(Error::DuplicateBlock(vec![0, 1, 3])));
    }

    #[test]
    fn irregular_stabiliser_rejected() {
        // {0,1,6,7} is fixed by +6 in Z_12 but is not the short orbit
        let err = CyclicDesign::new(12, 4, Kind::Packing, vec![blk(&[0, 1, 6, 7])]);
        assert!(matches!(err, Err(Error::UnsupportedOrbit(_))));
    }

    #[test]
    fn pair_index_examples() {
        let s = fano().develop();
        let idx = s.pair_index();
        let block = s.blocks().iter().position(|b| *b == blk(&[0, 1, 3])).unwrap();
        assert_eq!(idx[&(0, 1)], vec![block]);
        assert!(idx.values().all(|v| v.len() == 1));
        assert_eq!(idx.len(), 21);

        let empty = SetSystem::new(5, 3, Kind::Packing, vec![]).unwrap();
        assert!(empty.pair_index().is_empty());

        let packing = SetSystem::new(6, 3, Kind::Packing, vec![blk(&[0, 1, 2])]).unwrap();
        assert!(!packing.pair_index().contains_key(&(3, 4)));
    }

    #[test]
    fn orbit_count_arithmetic() {
        // v ≡ 1 (mod 6): (v-1)/6 full orbits; v ≡ 3: (v-3)/6 full plus one short
        let d = fano();
        assert_eq!(d.full_orbit_count(), (7 - 1) / 6);
        let d = sts15();
        assert_eq!(d.full_orbit_count(), (15 - 3) / 6);
        assert_eq!(d.short_orbit_count(), 1);
    }

    #[test]
    fn set_system_rejects_bad_shapes() {
        assert!(SetSystem::new(7, 3, Kind::Design, vec![blk(&[0, 1])]).is_err());
        assert!(SetSystem::new(7, 3, Kind::Design, vec![blk(&[0, 1, 7])]).is_err());
        assert!(Block::new(vec![1, 1, 2]).is_err());
    }
}
