mod common;

use std::collections::HashMap;

use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

use common::{fano, small_systems, sts19};
use steiner_core::algebra::{crt_map, gf_table, units};
use steiner_core::cli::{export_ooc, max_correlation, DesignDocument, Document, Provenance};
use steiner_core::construct::{ag_packing, bose, normalize_dm, singer_pg, vandermonde_dm, DifferenceMatrix};
use steiner_core::design::{orbit_reps, Block, CyclicDesign, Kind, SetSystem};
use steiner_core::search::{multiplier_reduce, search_difference_family, SearchSpec};
use steiner_core::verify::{
    brute_force_even_minimum, check_difference_coverage, check_dm, check_steiner, even_freeness, Budget, DmReport,
};

fn bounded_minimum(s: &SetSystem) -> Option<Vec<usize>> {
    even_freeness(s, s.len().max(1), Budget::unlimited())
        .unwrap()
        .minimal_witness
        .map(|w| w.blocks().to_vec())
}

fn brute_minimum(s: &SetSystem) -> Option<Vec<usize>> {
    brute_force_even_minimum(s).unwrap().map(|w| w.blocks().to_vec())
}

/// Pair multiplicities of the developed blocks, computed without the library.
fn pair_counts(v: u32, base: &[Vec<u32>]) -> HashMap<(u32, u32), usize> {
    let mut developed = std::collections::BTreeSet::new();
    for b in base {
        for t in 0..v {
            let mut pts: Vec<u32> = b.iter().map(|&x| (x + t) % v).collect();
            pts.sort_unstable();
            developed.insert(pts);
        }
    }
    let mut counts = HashMap::new();
    for b in &developed {
        for i in 0..b.len() {
            for j in i + 1..b.len() {
                *counts.entry((b[i], b[j])).or_insert(0) += 1;
            }
        }
    }
    counts
}

#[test]
fn oracle_agreement_on_corpus() {
    let systems = small_systems();
    assert!(systems.len() >= 20);
    for (name, s) in &systems {
        assert_eq!(bounded_minimum(s), brute_minimum(s), "{name}");
    }
}

#[test]
fn develop_then_orbit_reps_round_trips() {
    let mut corpus = vec![fano(), bose(5).unwrap(), bose(13).unwrap(), sts19()];
    corpus.push(singer_pg(2, 3).unwrap().design);
    corpus.push(singer_pg(3, 3).unwrap().design);
    corpus.push(ag_packing(3, 3).unwrap().design);
    for d in corpus {
        let back = orbit_reps(&d.develop()).unwrap().with_kind(d.kind());
        assert_eq!(back.base_blocks(), d.base_blocks());
    }
}

#[test]
fn documents_round_trip_on_corpus() {
    for d in [fano(), bose(11).unwrap(), singer_pg(2, 5).unwrap().design, ag_packing(2, 5).unwrap().design] {
        let doc = Document::Design(DesignDocument::new(&d, Provenance::new("corpus").param("v", d.order())));
        let parsed = Document::parse(&doc.to_json()).unwrap();
        assert_eq!(parsed, doc);
        assert_eq!(parsed.into_design().unwrap().0, d);
    }
}

#[test]
fn multiplier_reduction_commutes_with_relabelling() {
    let solutions = search_difference_family(SearchSpec::new(19, 3, 5)).unwrap().designs;
    let reduced = multiplier_reduce(&solutions).unwrap();
    let mut rng = StdRng::seed_from_u64(19);
    let us = units(19);
    for _ in 0..6 {
        let u = *us.choose(&mut rng).unwrap() as u32;
        let mapped: Vec<_> = solutions.iter().map(|d| d.multiply(u).unwrap()).collect();
        assert_eq!(multiplier_reduce(&mapped).unwrap(), reduced, "u = {u}");
    }
    let mut spec = SearchSpec::new(19, 3, 5);
    spec.reduce_multipliers = true;
    assert_eq!(search_difference_family(spec).unwrap().designs, reduced);
}

fn triple_family() -> impl Strategy<Value = (u32, Vec<Vec<u32>>)> {
    (7u32..=31).prop_flat_map(|v| {
        let block = proptest::collection::btree_set(1..v, 2).prop_map(|s| {
            let mut b = vec![0];
            b.extend(s);
            b
        });
        (Just(v), proptest::collection::vec(block, 1..=5))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn bounded_search_matches_brute_force_on_subsystems(pick in 0usize..1000, mask in any::<u32>()) {
        let systems = small_systems();
        let (_, s) = &systems[pick % systems.len()];
        let keep: Vec<usize> = (0..s.len()).filter(|i| mask >> i & 1 == 1).collect();
        let sub = s.restrict(&keep, Kind::Packing);
        prop_assert_eq!(bounded_minimum(&sub), brute_minimum(&sub));
    }

    #[test]
    fn coverage_agrees_with_pair_counting((v, base) in triple_family()) {
        let blocks: Vec<Block> = base.iter().map(|b| Block::new(b.clone()).unwrap()).collect();
        let Ok(d) = CyclicDesign::new(v, 3, Kind::Design, blocks) else { return Ok(()) };
        let counts = pair_counts(v, &base);
        let all_pairs_once = (0..v).all(|a| (a + 1..v).all(|b| counts.get(&(a, b)) == Some(&1)));
        prop_assert_eq!(check_difference_coverage(&d).passed(), all_pairs_once);
        prop_assert_eq!(check_steiner(&d.develop()).passed(), all_pairs_once);
        let packing = d.clone().with_kind(Kind::Packing);
        let at_most_once = counts.values().all(|&c| c <= 1);
        prop_assert_eq!(check_difference_coverage(&packing).passed(), at_most_once);
        prop_assert_eq!(export_ooc(&packing).is_ok(), at_most_once);
    }

    #[test]
    fn correlation_matches_definition(a in proptest::collection::btree_set(0u32..20, 1..5), b in proptest::collection::btree_set(0u32..20, 1..5)) {
        let a: Vec<u32> = a.into_iter().collect();
        let b: Vec<u32> = b.into_iter().collect();
        let mut best = 0;
        for t in 0..20 {
            let shifted: Vec<u32> = b.iter().map(|&y| (y + t) % 20).collect();
            best = best.max(a.iter().filter(|x| shifted.contains(x)).count());
        }
        prop_assert_eq!(max_correlation(&a, &b, 20, false), best);
    }

    #[test]
    fn normalize_dm_is_column_shift_invariant(shifts in proptest::collection::vec(0u32..13, 13), perm_seed in any::<u64>()) {
        let m = vandermonde_dm(13, 4).unwrap();
        let mut rows = m.rows().to_vec();
        let mut order: Vec<usize> = (0..4).collect();
        order.shuffle(&mut StdRng::seed_from_u64(perm_seed));
        rows = order.iter().map(|&i| rows[i].clone()).collect();
        let shifted: Vec<Vec<u32>> = rows
            .iter()
            .map(|r| r.iter().zip(&shifts).map(|(&x, &s)| (x + s) % 13).collect())
            .collect();
        let a = DifferenceMatrix::new(13, shifted).unwrap();
        prop_assert_eq!(check_dm(&a), DmReport::Pass);
        let n = normalize_dm(&a).unwrap();
        prop_assert!(n.is_normalized());
        prop_assert_eq!(check_dm(&n), DmReport::Pass);
        let base = normalize_dm(&DifferenceMatrix::new(13, rows).unwrap()).unwrap();
        prop_assert_eq!(n, base);
    }

    #[test]
    fn crt_is_bijective(x in 1u32..40, y in 1u32..40) {
        prop_assume!(steiner_core::algebra::gcd(x as u64, y as u64) == 1);
        let c = crt_map(x as u64, y as u64).unwrap();
        let mut seen = vec![false; (x * y) as usize];
        for a in 0..x as u64 {
            for b in 0..y as u64 {
                let z = c.apply(a, b);
                prop_assert_eq!(z % x as u64, a);
                prop_assert_eq!(z % y as u64, b);
                prop_assert!(!seen[z as usize]);
                seen[z as usize] = true;
            }
        }
    }

    #[test]
    fn field_inverse_and_distributivity(pick in 0usize..6, a in any::<u32>(), b in any::<u32>(), c in any::<u32>()) {
        let (p, n) = [(2u32, 3u32), (2, 4), (3, 2), (5, 2), (3, 4), (7, 2)][pick];
        let f = gf_table(p, n).unwrap();
        let q = f.order();
        let (a, b, c) = (a % q, b % q, c % q);
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        if a != 0 {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
        }
    }
}

#[test]
fn pasch_witness_is_even() {
    let s = fano().develop();
    let w = steiner_core::verify::find_generalized_pasch(&s).unwrap().unwrap();
    let mut deg = HashMap::new();
    for &i in w.blocks() {
        for &p in s.blocks()[i].points() {
            *deg.entry(p).or_insert(0) += 1;
        }
    }
    assert!(deg.values().all(|&d| d == 2));
    assert_eq!(deg.len(), 6);
}
