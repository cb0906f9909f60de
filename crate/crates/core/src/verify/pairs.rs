use std::collections::HashMap;

use crate::design::SetSystem;

const DENSE_LIMIT: usize = 4096;

/// Block lookup by unordered point pair. When a pair lies in several blocks
/// the lowest index is kept, so callers should only rely on it for packings.
#[derive(Debug, Clone)]
pub(crate) struct PairTable {
    v: usize,
    dense: Vec<u32>,
    sparse: HashMap<(u32, u32), u32>,
    linear: bool,
}

impl PairTable {
    pub(crate) fn new(s: &SetSystem) -> Self {
        let v = s.order() as usize;
        let mut table = PairTable {
            v,
            dense: if v <= DENSE_LIMIT { vec![u32::MAX; v * v] } else { Vec::new() },
            sparse: HashMap::new(),
            linear: true,
        };
        for (i, b) in s.blocks().iter().enumerate().rev() {
            let pts = b.points();
            for (x, &a) in pts.iter().enumerate() {
                for &c in &pts[x + 1..] {
                    table.set(a, c, i as u32);
                }
            }
        }
        table
    }

    fn set(&mut self, a: u32, b: u32, i: u32) {
        if self.dense.is_empty() {
            if self.sparse.insert((a.min(b), a.max(b)), i).is_some() {
                self.linear = false;
            }
        } else {
            if self.dense[a as usize * self.v + b as usize] != u32::MAX {
                self.linear = false;
            }
            self.dense[a as usize * self.v + b as usize] = i;
            self.dense[b as usize * self.v + a as usize] = i;
        }
    }

    /// Whether every pair lies in at most one block.
    pub(crate) fn is_linear(&self) -> bool {
        self.linear
    }

    pub(crate) fn block(&self, a: u32, b: u32) -> Option<usize> {
        let i = if self.dense.is_empty() {
            *self.sparse.get(&(a.min(b), a.max(b)))?
        } else {
            self.dense[a as usize * self.v + b as usize]
        };
        (i != u32::MAX).then_some(i as usize)
    }
}

/// Blocks through each point, ascending.
pub(crate) fn point_blocks(s: &SetSystem) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new(); s.order() as usize];
    for (i, b) in s.blocks().iter().enumerate() {
        for &p in b.points() {
            out[p as usize].push(i as u32);
        }
    }
    out
}
