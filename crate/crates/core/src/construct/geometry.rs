use std::collections::BTreeSet;

use crate::algebra::{gf_table, prime_power, FieldTable};
use crate::design::{Block, CyclicDesign, Kind};
use crate::verify::check_difference_coverage;
use crate::{Error, Result};

/// A geometric design, flagged when `q` is even: those geometries contain
/// even configurations on `q + 2` blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeometryDesign {
    pub design: CyclicDesign,
    pub low_even_freeness_expected: bool,
}

fn field_over(q: u32, ext: u32) -> Result<(FieldTable, Vec<u32>)> {
    let (p, n) = prime_power(q as u64)
        .ok_or_else(|| Error::Precondition(format!("{q} is not a prime power")))?;
    let f = gf_table(p as u32, n * ext)?;
    let sub = f.subfield(n).expect("n divides n·ext");
    Ok((f, sub))
}

/// Points and lines of PG(m, q) under a Singer cycle.
///
/// Points are `GF(q^{m+1})* / GF(q)*`, identified with `Z_v` through the
/// discrete log mod `v = (q^{m+1} - 1)/(q - 1)`. Every line is a translate of
/// one through the point 0, and the lines through 0 are the spans of `{1, α^i}`.
pub fn singer_pg(m: u32, q: u32) -> Result<GeometryDesign> {
    if m < 2 {
        return Err(Error::Precondition(format!("dimension must be at least 2, got {m}")));
    }
    let (f, sub) = field_over(q, m + 1)?;
    let big_q = f.order() as u64;
    let v = ((big_q - 1) / (q as u64 - 1)) as u32;
    let log_mod = |x: u32| f.log(x).expect("nonzero") % v;

    let mut reps = BTreeSet::new();
    for i in 1..v as u64 {
        let ai = f.exp(i);
        let mut pts: Vec<u32> = sub.iter().map(|&b| log_mod(f.add(1, f.mul(b, ai)))).collect();
        pts.push(i as u32);
        reps.insert(Block::new(pts)?.canonical_translate(v));
    }
    let design = CyclicDesign::new(v, q as usize + 1, Kind::Design, reps.into_iter().collect())?;
    if !check_difference_coverage(&design).passed() {
        return Err(Error::Internal(format!("PG({m},{q}) failed difference coverage")));
    }
    Ok(GeometryDesign { design, low_even_freeness_expected: q % 2 == 0 })
}

/// Maximum cyclic packing from AG(m, q) with the origin removed.
///
/// Points are `GF(q^m)*` identified with `Z_{q^m - 1}` by the discrete log, so
/// multiplication by the primitive element is the translation `+1`. Blocks are
/// the affine lines `c + GF(q)·d` avoiding 0; each is a multiple of a line
/// through 1, so only lines `1 + GF(q)·d` are enumerated.
pub fn ag_packing(m: u32, q: u32) -> Result<GeometryDesign> {
    if m < 2 {
        return Err(Error::Precondition(format!("dimension must be at least 2, got {m}")));
    }
    let (f, sub) = field_over(q, m)?;
    let v = f.order() - 1;
    let directions = v / (q - 1);

    let mut reps = BTreeSet::new();
    // direction α^0 ∈ GF(q)* gives the line through 0 and 1
    for j in 1..directions as u64 {
        let d = f.exp(j);
        let pts: Vec<u32> = sub.iter().map(|&t| f.log(f.add(1, f.mul(t, d))).expect("line avoids 0")).collect();
        reps.insert(Block::new(pts)?.canonical_translate(v));
    }
    let design = CyclicDesign::new(v, q as usize, Kind::Packing, reps.into_iter().collect())?;
    if !check_difference_coverage(&design).passed() {
        return Err(Error::Internal(format!("AG({m},{q}) packing repeats a pair")));
    }
    let expected = {
        let (qm, qm1) = ((q as u64).pow(m), (q as u64).pow(m - 1));
        ((qm1 * (qm - 1) - (qm - 1)) / (q as u64 - 1)) as usize
    };
    if design.block_count() != expected {
        return Err(Error::Internal(format!(
            "AG({m},{q}) packing has {} blocks, expected {expected}",
            design.block_count()
        )));
    }
    Ok(GeometryDesign { design, low_even_freeness_expected: q % 2 == 0 })
}
