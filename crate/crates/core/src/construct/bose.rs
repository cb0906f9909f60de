use crate::algebra::{crt_map, mod_inverse};
use crate::design::{orbit_reps, Block, CyclicDesign, Kind, SetSystem};
use crate::verify::check_steiner;
use crate::{Error, Result};

/// Bose triple system on `Z_x × Z_3 ≅ Z_{3x}` from the idempotent commutative
/// quasigroup `a ∘ b = (a + b)/2`.
///
/// Blocks are `{(a,0),(a,1),(a,2)}` and `{(a,i),(b,i),(a∘b,i+1)}` for `a ≠ b`;
/// points are mapped to `Z_{3x}` by the CRT with the `Z_x` coordinate first.
/// With `3 ∤ x` the translation `+1` acts as `(1, 1)`, so the system is cyclic.
pub fn bose(x: u32) -> Result<CyclicDesign> {
    if x % 2 == 0 || x % 3 == 0 || x % 7 == 0 {
        return Err(Error::Precondition(format!(
            "bose needs x odd and divisible by neither 3 nor 7, got {x}"
        )));
    }
    let crt = crt_map(x as u64, 3)?;
    let half = mod_inverse(2, x as u64).expect("x is odd");
    let point = |a: u64, i: u64| crt.apply(a, i) as u32;
    let xs = x as u64;

    let mut blocks = Vec::with_capacity((3 * x as usize) * (3 * x as usize - 1) / 6);
    for a in 0..xs {
        blocks.push(Block::new(vec![point(a, 0), point(a, 1), point(a, 2)])?);
    }
    for i in 0..3 {
        for a in 0..xs {
            for b in a + 1..xs {
                let c = (a + b) % xs * half % xs;
                blocks.push(Block::new(vec![point(a, i), point(b, i), point(c, (i + 1) % 3)])?);
            }
        }
    }
    let system = SetSystem::new(3 * x, 3, Kind::Design, blocks)?;
    if !check_steiner(&system).passed() {
        return Err(Error::Internal(format!("bose({x}) is not a Steiner triple system")));
    }
    orbit_reps(&system)
}
