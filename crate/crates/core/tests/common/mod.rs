//! Shared corpus for the integration tests.
#![allow(dead_code)]

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use steiner_core::construct::{ag_packing, bose, singer_pg};
use steiner_core::design::{Block, CyclicDesign, Kind, SetSystem};
use steiner_core::search::{search_difference_family, SearchSpec, SearchStatus};

pub fn blk(p: &[u32]) -> Block {
    Block::new(p.to_vec()).unwrap()
}

pub fn fano() -> CyclicDesign {
    CyclicDesign::new(7, 3, Kind::Design, vec![blk(&[0, 1, 3])]).unwrap()
}

/// Every design found by an exhaustive search.
pub fn searched(v: u32, k: usize, r: usize) -> Vec<CyclicDesign> {
    let o = search_difference_family(SearchSpec::new(v, k, r)).unwrap();
    assert_eq!(o.status, SearchStatus::Exhausted);
    o.designs
}

/// The first anti-Pasch STS(19) in search order.
pub fn sts19() -> CyclicDesign {
    searched(19, 3, 5).remove(0)
}

/// The affine plane of order 3 as a (non-cyclic) STS(9).
pub fn affine_plane_3() -> SetSystem {
    let pt = |x: u32, y: u32| 3 * x + y;
    let mut blocks = Vec::new();
    for c in 0..3 {
        blocks.push(blk(&[pt(c, 0), pt(c, 1), pt(c, 2)]));
        for m in 0..3 {
            blocks.push(blk(&(0..3).map(|x| pt(x, (m * x + c) % 3)).collect::<Vec<_>>()));
        }
    }
    SetSystem::new(9, 3, Kind::Design, blocks).unwrap()
}

fn without(s: &SetSystem, drop: &[usize]) -> SetSystem {
    let keep: Vec<usize> = (0..s.len()).filter(|i| !drop.contains(i)).collect();
    s.restrict(&keep, Kind::Packing)
}

fn first_n(s: &SetSystem, n: usize) -> SetSystem {
    s.restrict(&(0..n.min(s.len())).collect::<Vec<_>>(), Kind::Packing)
}

/// Replaces one point of block `i` by a point outside it.
fn moved_point(s: &SetSystem, i: usize, rng: &mut StdRng) -> SetSystem {
    let v = s.order();
    let mut blocks = s.blocks().to_vec();
    let mut pts = blocks[i].points().to_vec();
    let slot = rng.gen_range(0..pts.len());
    let fresh = loop {
        let p = rng.gen_range(0..v);
        if !pts.contains(&p) {
            break p;
        }
    };
    pts[slot] = fresh;
    blocks[i] = Block::new(pts).unwrap();
    SetSystem::new(v, s.block_size(), Kind::Packing, blocks).unwrap()
}

/// Small systems (at most 26 blocks) for comparing the bounded search with
/// exhaustive enumeration: designs, partial systems, and mutated copies that
/// are no longer packings.
pub fn small_systems() -> Vec<(String, SetSystem)> {
    let mut out: Vec<(String, SetSystem)> = Vec::new();
    let fano = fano().develop();
    let pg23 = singer_pg(2, 3).unwrap().design.develop();
    let pg24 = singer_pg(2, 4).unwrap().design.develop();
    let ag23 = ag_packing(2, 3).unwrap().design.develop();
    let ag25 = ag_packing(2, 5).unwrap().design.develop();
    let sts13 = searched(13, 3, 3);
    let b15 = bose(5).unwrap().develop();
    let s19 = sts19().develop();
    let pg33 = singer_pg(3, 3).unwrap().design.develop();
    let trivial = CyclicDesign::new(3, 3, Kind::Design, vec![blk(&[0, 1, 2])]).unwrap().develop();

    out.push(("fano".into(), fano.clone()));
    out.push(("pg(2,3)".into(), pg23.clone()));
    out.push(("pg(2,4)".into(), pg24));
    out.push(("ag(2,3)".into(), ag23));
    out.push(("ag(2,5)".into(), ag25.clone()));
    out.push(("sts(3)".into(), trivial));
    out.push(("affine plane 3".into(), affine_plane_3()));
    for (i, d) in sts13.iter().enumerate() {
        out.push((format!("sts(13) #{i}"), d.develop()));
    }
    out.push(("bose(5) first 20".into(), first_n(&b15, 20)));
    out.push(("bose(5) last 25".into(), b15.restrict(&(10..35).collect::<Vec<_>>(), Kind::Packing)));
    out.push(("sts(19) first 26".into(), first_n(&s19, 26)));
    out.push(("pg(3,3) first 26".into(), first_n(&pg33, 26)));
    out.push(("fano minus block".into(), without(&fano, &[3])));
    out.push(("pg(2,3) minus block".into(), without(&pg23, &[0])));
    out.push(("ag(2,5) minus two".into(), without(&ag25, &[5, 17])));
    out.push(("sts(13) minus block".into(), without(&sts13[0].develop(), &[7])));
    let mut dup = fano.blocks().to_vec();
    dup.push(dup[2].clone());
    out.push(("fano with repeated block".into(), SetSystem::new(7, 3, Kind::Packing, dup).unwrap()));

    let mut rng = StdRng::seed_from_u64(0x5eed);
    for round in 0..4 {
        let i = rng.gen_range(0..fano.len());
        out.push((format!("fano moved point #{round}"), moved_point(&fano, i, &mut rng)));
        let i = rng.gen_range(0..pg23.len());
        out.push((format!("pg(2,3) moved point #{round}"), moved_point(&pg23, i, &mut rng)));
        let base = first_n(&s19, 22);
        let i = rng.gen_range(0..base.len());
        out.push((format!("sts(19) prefix moved point #{round}"), moved_point(&base, i, &mut rng)));
    }
    out
}
