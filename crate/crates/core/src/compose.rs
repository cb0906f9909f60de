//! Recursive product constructions.
//!
//! Each composer builds a cyclic `S(2, k, vw)` from a cyclic `S(2, k, v)`, a
//! cyclic `S(2, k, w)` and a matrix ingredient. The base blocks are
//!
//! - `D0 = { {x_i + M[i][j]·v} : (x_0..x_{k-1}) ∈ S_B, 0 ≤ j < w }` and
//! - `D1 = { {y_i·v} : {y_i} ∈ S_C }`,
//!
//! where `S_B`, `S_C` are the canonical base blocks in ascending point order
//! and `M` is a `(w, k)` difference matrix. The `D0` blocks cover every
//! difference not divisible by `v`, the `D1` blocks the nonzero multiples of
//! `v`. Outputs are re-verified by difference coverage before being returned.

use crate::algebra::is_prime;
use crate::construct::{normalize_dm, oa_odd_prime, DifferenceMatrix, OrthogonalArray};
use crate::design::{Block, CyclicDesign, Kind, OrbitKind};
use crate::verify::{check_difference_coverage, check_dm, check_oa, find_generalized_pasch};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ComposeOptions {
    /// Skip re-verifying that the design ingredients are cyclic Steiner
    /// designs free of generalized Pasch configurations.
    pub trust_ingredients: bool,
}

impl ComposeOptions {
    pub fn trusted() -> Self {
        Self { trust_ingredients: true }
    }
}

fn check_ingredient(name: &str, d: &CyclicDesign, opts: ComposeOptions) -> Result<()> {
    if d.kind() != Kind::Design {
        return Err(Error::InvalidIngredient(format!("{name} is a packing, not a design")));
    }
    if opts.trust_ingredients {
        return Ok(());
    }
    if let crate::verify::CoverageReport::Fail { difference, .. } = check_difference_coverage(d) {
        return Err(Error::InvalidIngredient(format!(
            "{name} (order {}) is not a cyclic Steiner design: difference {difference} miscovered",
            d.order()
        )));
    }
    if let Some(w) = find_generalized_pasch(&d.develop())? {
        return Err(Error::InvalidIngredient(format!(
            "{name} (order {}) is not {}-even-free: generalized Pasch on blocks {:?}",
            d.order(),
            d.block_size() + 1,
            w.blocks()
        )));
    }
    Ok(())
}

fn require_congruent_one(name: &str, order: u32, k: usize) -> Result<()> {
    let m = (k * (k - 1)) as u32;
    if order % m != 1 % m {
        return Err(Error::Precondition(format!(
            "{name} has order {order} ≢ 1 (mod {m})"
        )));
    }
    Ok(())
}

fn same_block_size(bv: &CyclicDesign, cw: &CyclicDesign) -> Result<usize> {
    let k = bv.block_size();
    if cw.block_size() != k {
        return Err(Error::Precondition(format!(
            "block sizes differ: {k} vs {}",
            cw.block_size()
        )));
    }
    if k < 2 {
        return Err(Error::Precondition("block size must be at least 2".into()));
    }
    Ok(k)
}

/// Applies the `D0 ∪ D1` template with a `(w, k)` difference matrix.
fn product_template(bv: &CyclicDesign, cw: &CyclicDesign, m: &DifferenceMatrix) -> Result<CyclicDesign> {
    let (v, w, k) = (bv.order() as u64, cw.order() as u64, bv.block_size());
    let vw = v * w;
    if vw > u32::MAX as u64 {
        return Err(Error::Precondition("product order too large".into()));
    }
    let sb = bv.ordered_base_blocks();
    let mut blocks = Vec::with_capacity(sb.len() * w as usize + cw.base_blocks().len());
    for j in 0..w as usize {
        for x in &sb {
            let pts = x
                .points()
                .iter()
                .enumerate()
                .map(|(i, &xi)| ((xi as u64 + m.entry(i, j) as u64 * v) % vw) as u32)
                .collect();
            blocks.push(Block::new(pts)?);
        }
    }
    for y in cw.base_blocks() {
        blocks.push(Block::new(y.block.points().iter().map(|&yi| (yi as u64 * v) as u32).collect())?);
    }
    let expected = w as usize * sb.len() + cw.base_blocks().len();
    finish(vw as u32, k, blocks, expected)
}

fn finish(order: u32, k: usize, blocks: Vec<Block>, expected_bases: usize) -> Result<CyclicDesign> {
    let d = CyclicDesign::new(order, k, Kind::Design, blocks)
        .map_err(|e| Error::Internal(format!("composed base blocks are inconsistent: {e}")))?;
    if d.base_blocks().len() != expected_bases {
        return Err(Error::Internal(format!(
            "expected {expected_bases} base blocks, got {}",
            d.base_blocks().len()
        )));
    }
    if let crate::verify::CoverageReport::Fail { difference, .. } = check_difference_coverage(&d) {
        return Err(Error::Internal(format!(
            "composed design misses difference {difference} modulo {order}"
        )));
    }
    Ok(d)
}

fn require_dm(m: &DifferenceMatrix, w: u32, k: usize) -> Result<()> {
    if m.modulus() != w || m.row_count() != k {
        return Err(Error::Shape(format!(
            "expected a ({w}, {k}) difference matrix, got ({}, {})",
            m.modulus(),
            m.row_count()
        )));
    }
    if let crate::verify::DmReport::Fail { rows, residue, count } = check_dm(m) {
        return Err(Error::InvalidIngredient(format!(
            "difference matrix rows {rows:?} hit residue {residue} {count} times"
        )));
    }
    Ok(())
}

/// Product with a cyclic difference matrix, for even `k` and
/// `v ≡ w ≡ 1 (mod k(k-1))`. The matrix is normalised to a zero first row.
pub fn compose_dm(
    bv: &CyclicDesign,
    cw: &CyclicDesign,
    m: &DifferenceMatrix,
    opts: ComposeOptions,
) -> Result<CyclicDesign> {
    let k = same_block_size(bv, cw)?;
    if k % 2 != 0 {
        return Err(Error::Precondition(format!("block size {k} is odd; the difference-matrix product needs even k")));
    }
    require_congruent_one("first ingredient", bv.order(), k)?;
    require_congruent_one("second ingredient", cw.order(), k)?;
    require_dm(m, cw.order(), k)?;
    check_ingredient("first ingredient", bv, opts)?;
    check_ingredient("second ingredient", cw, opts)?;
    let m = normalize_dm(m)?;
    product_template(bv, cw, &m)
}

/// Relabels symbols row by row so that each parallel-class column becomes the
/// constant column `(j, ..., j)`, and returns the remaining `k(k-1)` columns in
/// their original order.
fn truncated_oa(a: &OrthogonalArray, class: &[usize]) -> Vec<Vec<u32>> {
    let s = a.symbols() as usize;
    a.rows()
        .iter()
        .map(|row| {
            let mut relabel = vec![0u32; s];
            for (j, &c) in class.iter().enumerate() {
                relabel[row[c] as usize] = j as u32;
            }
            (0..row.len())
                .filter(|c| !class.contains(c))
                .map(|c| relabel[row[c] as usize])
                .collect()
        })
        .collect()
}

/// Side-by-side copies of a `k × k(k-1)` symbol matrix, one per full base
/// block `X` of `cw` with symbol `j` replaced by `X[j]`.
fn block_columns(truncated: &[Vec<u32>], cw: &CyclicDesign) -> Vec<Vec<u32>> {
    let mut rows = vec![Vec::with_capacity(cw.order() as usize); truncated.len()];
    for x in cw.base_blocks().iter().filter(|b| b.orbit == OrbitKind::Full) {
        let pts = x.block.points();
        for (out, row) in rows.iter_mut().zip(truncated) {
            out.extend(row.iter().map(|&sym| pts[sym as usize]));
        }
    }
    rows
}

fn assembled_dm(rows: Vec<Vec<u32>>, w: u32) -> Result<DifferenceMatrix> {
    if rows.iter().any(|r| r.len() != w as usize) {
        return Err(Error::Internal(format!(
            "assembled matrix has {} columns, expected {w}",
            rows[0].len()
        )));
    }
    let m = DifferenceMatrix::new(w, rows)?;
    if let crate::verify::DmReport::Fail { rows, residue, count } = check_dm(&m) {
        return Err(Error::Internal(format!(
            "assembled matrix is not a difference matrix: rows {rows:?} hit {residue} {count} times"
        )));
    }
    Ok(m)
}

fn require_oa(a: &OrthogonalArray, k: usize) -> Result<Vec<usize>> {
    if a.symbols() as usize != k || a.row_count() != k {
        return Err(Error::Shape(format!(
            "expected an OA({k},{k}), got OA({},{})",
            a.row_count(),
            a.symbols()
        )));
    }
    let report = check_oa(a);
    if let Some(f) = report.failure {
        return Err(Error::InvalidIngredient(format!(
            "orthogonal array rows {:?} show pair {:?} {} times",
            f.rows, f.symbols, f.count
        )));
    }
    match a.parallel_class() {
        Some(c) if crate::verify::check_oa_class(a, c) => Ok(c.to_vec()),
        _ => report
            .parallel_classes
            .first()
            .cloned()
            .ok_or_else(|| Error::InvalidIngredient("orthogonal array has no parallel class".into())),
    }
}

/// The `(w, k)` difference matrix used by [`compose_oa`]: a zero column
/// followed by the truncated array instantiated on each base block of `cw`.
/// It is checked before being returned.
pub fn oa_difference_matrix(cw: &CyclicDesign, a: &OrthogonalArray) -> Result<DifferenceMatrix> {
    let k = cw.block_size();
    let class = require_oa(a, k)?;
    let truncated = truncated_oa(a, &class);
    let mut rows = block_columns(&truncated, cw);
    for row in &mut rows {
        row.insert(0, 0);
    }
    assembled_dm(rows, cw.order())
}

/// Product through an OA(k, k) with a parallel class, for any `k ≥ 3` and
/// `v ≡ w ≡ 1 (mod k(k-1))`.
pub fn compose_oa(
    bv: &CyclicDesign,
    cw: &CyclicDesign,
    a: &OrthogonalArray,
    opts: ComposeOptions,
) -> Result<CyclicDesign> {
    let k = same_block_size(bv, cw)?;
    if k < 3 {
        return Err(Error::Precondition("block size must be at least 3".into()));
    }
    require_congruent_one("first ingredient", bv.order(), k)?;
    require_congruent_one("second ingredient", cw.order(), k)?;
    require_oa(a, k)?;
    check_ingredient("first ingredient", bv, opts)?;
    check_ingredient("second ingredient", cw, opts)?;
    let m = oa_difference_matrix(cw, a)?;
    product_template(bv, cw, &m)
}

/// The `(w, k)` difference matrix used by [`compose_odd_prime`] when
/// `w ≡ k (mod k(k-1))`: the truncated `[K_0 | ... | K_{k-1}]` instantiated on
/// each full base block of `cw`, followed by `(w/k)·K_0`, which covers the
/// multiples of `w/k` and supplies the zero column. It is checked before
/// being returned.
pub fn odd_prime_difference_matrix(cw: &CyclicDesign) -> Result<DifferenceMatrix> {
    let k = cw.block_size();
    let w = cw.order();
    if w % k as u32 != 0 || cw.short_orbit().is_none() {
        return Err(Error::InvalidIngredient("second ingredient lacks its short orbit".into()));
    }
    let oa = oa_odd_prime(k as u32)?;
    let class = oa.parallel_class().expect("constant columns").to_vec();
    // the parallel class is already constant, so relabelling is the identity
    let truncated = truncated_oa(&oa, &class);
    let mut rows = block_columns(&truncated, cw);
    let step = w / k as u32;
    for (i, row) in rows.iter_mut().enumerate() {
        row.extend((0..k).map(|j| ((i * j) % k) as u32 * step));
    }
    assembled_dm(rows, w)
}

/// Product for odd prime `k`, `v ≡ 1` and `w ≡ 1` or `k (mod k(k-1))`.
pub fn compose_odd_prime(bv: &CyclicDesign, cw: &CyclicDesign, opts: ComposeOptions) -> Result<CyclicDesign> {
    let k = same_block_size(bv, cw)?;
    if k < 3 || !is_prime(k as u64) {
        return Err(Error::Precondition(format!("block size {k} is not an odd prime")));
    }
    require_congruent_one("first ingredient", bv.order(), k)?;
    let modulus = (k * (k - 1)) as u32;
    let w = cw.order();
    if w % modulus == 1 {
        return compose_oa(bv, cw, &oa_odd_prime(k as u32)?, opts);
    }
    if w % modulus != k as u32 {
        return Err(Error::Precondition(format!(
            "second ingredient has order {w} ≢ 1, {k} (mod {modulus})"
        )));
    }
    if cw.short_orbit().is_none() {
        return Err(Error::InvalidIngredient("second ingredient lacks its short orbit".into()));
    }
    check_ingredient("first ingredient", bv, opts)?;
    check_ingredient("second ingredient", cw, opts)?;
    let m = odd_prime_difference_matrix(cw)?;
    product_template(bv, cw, &m)
}

/// Product of two cyclic anti-Pasch triple systems of orders `3v` and `3w`,
/// both `≡ 3 (mod 6)`, giving order `3vw`.
///
/// `D0 = { {x, y + 3iv, z + 6iv} : (x,y,z) ∈ S_B \ S, 0 ≤ i < w }` with `S`
/// the short orbit `{0, v, 2v}`, and `D1 = { {av, bv, cv} }` over all base
/// blocks of the second system.
pub fn compose_sts(b3v: &CyclicDesign, c3w: &CyclicDesign, opts: ComposeOptions) -> Result<CyclicDesign> {
    let k = same_block_size(b3v, c3w)?;
    if k != 3 {
        return Err(Error::Precondition(format!("block size must be 3, got {k}")));
    }
    for (name, d) in [("first ingredient", b3v), ("second ingredient", c3w)] {
        if d.order() % 6 != 3 {
            return Err(Error::Precondition(format!("{name} has order {} ≢ 3 (mod 6)", d.order())));
        }
        if d.short_orbit().is_none() {
            return Err(Error::InvalidIngredient(format!("{name} lacks its short orbit")));
        }
    }
    check_ingredient("first ingredient", b3v, opts)?;
    check_ingredient("second ingredient", c3w, opts)?;

    let v = b3v.order() as u64 / 3;
    let w = c3w.order() as u64 / 3;
    let n = 3 * v * w;
    if n > u32::MAX as u64 {
        return Err(Error::Precondition("product order too large".into()));
    }
    let full: Vec<_> = b3v
        .base_blocks()
        .iter()
        .filter(|b| b.orbit == OrbitKind::Full)
        .map(|b| b.block.points().to_vec())
        .collect();
    let mut blocks = Vec::with_capacity(full.len() * w as usize + c3w.base_blocks().len());
    for i in 0..w {
        for t in &full {
            let (x, y, z) = (t[0] as u64, t[1] as u64, t[2] as u64);
            blocks.push(Block::new(vec![
                x as u32,
                ((y + 3 * i * v) % n) as u32,
                ((z + 6 * i * v) % n) as u32,
            ])?);
        }
    }
    for c in c3w.base_blocks() {
        blocks.push(Block::new(c.block.points().iter().map(|&a| (a as u64 * v) as u32).collect())?);
    }
    let expected = (w * (v - 1) / 2 + (w + 1) / 2) as usize;
    finish(n as u32, 3, blocks, expected)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{bose, oa_prime_power, singer_pg, vandermonde_dm};

    #[test]
    fn sts_product_of_two_bose_15() {
        let b = bose(5).unwrap();
        let d = compose_sts(&b, &b, ComposeOptions::default()).unwrap();
        assert_eq!(d.order(), 75);
        assert_eq!(d.base_blocks().len(), 13);
        assert!(find_generalized_pasch(&d.develop()).unwrap().is_none());
    }

    #[test]
    fn sts_product_rejects_bad_order() {
        let b = bose(5).unwrap();
        let c13 = CyclicDesign::new(
            13,
            3,
            Kind::Design,
            vec![Block::new(vec![0, 1, 4]).unwrap(), Block::new(vec![0, 2, 7]).unwrap()],
        )
        .unwrap();
        let err = compose_sts(&b, &c13, ComposeOptions::trusted()).unwrap_err();
        assert!(err.to_string().contains("13"), "{err}");
    }

    #[test]
    fn dm_product_rejects_odd_k_and_bad_congruence() {
        let b = bose(5).unwrap();
        assert!(matches!(
            compose_dm(&b, &b, &vandermonde_dm(7, 3).unwrap(), ComposeOptions::trusted()),
            Err(Error::Precondition(_))
        ));
        let pg = singer_pg(2, 3).unwrap().design;
        let fake = CyclicDesign::new(28, 4, Kind::Design, vec![Block::new(vec![0, 1, 3, 9]).unwrap()]).unwrap();
        let zeros = DifferenceMatrix::new(28, vec![vec![0; 28]; 4]).unwrap();
        let err = compose_dm(&pg, &fake, &zeros, ComposeOptions::trusted()).unwrap_err();
        assert!(err.to_string().contains("28 ≢ 1 (mod 12)"), "{err}");
    }

    #[test]
    fn dm_product_of_two_planes() {
        let pg = singer_pg(2, 3).unwrap().design;
        let d = compose_dm(&pg, &pg, &vandermonde_dm(13, 4).unwrap(), ComposeOptions::default()).unwrap();
        assert_eq!((d.order(), d.block_count()), (169, 2366));
        assert_eq!(d.base_blocks().len(), 14);
    }

    #[test]
    fn untrusted_rejects_fake_ingredient() {
        let pg = singer_pg(2, 3).unwrap().design;
        let fake = CyclicDesign::new(13, 4, Kind::Design, vec![Block::new(vec![0, 1, 2, 3]).unwrap()]).unwrap();
        let err = compose_dm(&pg, &fake, &vandermonde_dm(13, 4).unwrap(), ComposeOptions::default()).unwrap_err();
        assert!(matches!(err, Error::InvalidIngredient(_)), "{err}");
    }

    #[test]
    fn oa_product_k4_matrix_is_difference_matrix() {
        let pg = singer_pg(2, 3).unwrap().design;
        let d = compose_oa(&pg, &pg, &oa_prime_power(4).unwrap(), ComposeOptions::default()).unwrap();
        assert_eq!(d.order(), 169);
        assert_eq!(d.block_count(), 2366);
    }

    #[test]
    fn oa_product_k4_is_not_pasch_free() {
        // every parallel class of OA(4,4) gives the same defect
        let pg = singer_pg(2, 3).unwrap().design;
        let oa = oa_prime_power(4).unwrap();
        for class in check_oa(&oa).parallel_classes {
            let a = OrthogonalArray::new(4, oa.rows().to_vec(), Some(class)).unwrap();
            let d = compose_oa(&pg, &pg, &a, ComposeOptions::trusted()).unwrap();
            let s = d.develop();
            let w = find_generalized_pasch(&s).unwrap().expect("generalized Pasch");
            let pts: Vec<&[u32]> = w.blocks().iter().map(|&i| s.blocks()[i].points()).collect();
            // one block inside 13·Z, four sharing the remainder block {0,1,3,9}
            assert_eq!(pts.iter().filter(|b| b.iter().all(|p| p % 13 == 0)).count(), 1);
        }
    }

    #[test]
    fn dm_product_with_linear_rows_is_pasch_free() {
        let pg = singer_pg(2, 3).unwrap().design;
        let rows = [1u32, 3, 9, 5].iter().map(|&u| (0..13).map(|j| u * j % 13).collect()).collect();
        let m = DifferenceMatrix::new(13, rows).unwrap();
        let d = compose_dm(&pg, &pg, &m, ComposeOptions::trusted()).unwrap();
        assert!(find_generalized_pasch(&d.develop()).unwrap().is_none());
    }

    #[test]
    fn odd_prime_rejects_even_k() {
        let pg = singer_pg(2, 3).unwrap().design;
        assert!(matches!(compose_odd_prime(&pg, &pg, ComposeOptions::trusted()), Err(Error::Precondition(_))));
    }
}
