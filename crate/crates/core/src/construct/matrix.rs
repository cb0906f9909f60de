use crate::algebra::{gf_table, is_prime, prime_factors, prime_power};
use crate::verify::{check_dm, check_oa, DmReport};
use crate::{Error, Result};

/// A `k × v` matrix over `Z_v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DifferenceMatrix {
    v: u32,
    rows: Vec<Vec<u32>>,
}

impl DifferenceMatrix {
    /// Checks the shape only; validity is [`check_dm`]'s job.
    pub fn new(v: u32, rows: Vec<Vec<u32>>) -> Result<Self> {
        if v == 0 || rows.is_empty() {
            return Err(Error::Shape("difference matrix needs v ≥ 1 and at least one row".into()));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != v as usize {
                return Err(Error::Shape(format!("row {i} has {} entries, expected {v}", row.len())));
            }
            if let Some(&x) = row.iter().find(|&&x| x >= v) {
                return Err(Error::Shape(format!("row {i} has entry {x} outside Z_{v}")));
            }
        }
        Ok(Self { v, rows })
    }

    pub fn modulus(&self) -> u32 {
        self.v
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> u32 {
        self.rows[i][j]
    }

    pub fn is_normalized(&self) -> bool {
        self.rows[0].iter().all(|&x| x == 0)
    }
}

/// A `t × s²` array over the symbols `0..s`, optionally with a known
/// parallel class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrthogonalArray {
    s: u32,
    rows: Vec<Vec<u32>>,
    parallel_class: Option<Vec<usize>>,
}

impl OrthogonalArray {
    pub fn new(s: u32, rows: Vec<Vec<u32>>, parallel_class: Option<Vec<usize>>) -> Result<Self> {
        let cols = (s as usize).pow(2);
        if s == 0 || rows.is_empty() {
            return Err(Error::Shape("orthogonal array needs s ≥ 1 and at least one row".into()));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::Shape(format!("row {i} has {} entries, expected {cols}", row.len())));
            }
            if row.iter().any(|&x| x >= s) {
                return Err(Error::Shape(format!("row {i} has a symbol outside 0..{s}")));
            }
        }
        if let Some(pc) = &parallel_class {
            if pc.len() != s as usize || pc.iter().any(|&c| c >= cols) {
                return Err(Error::Shape("parallel class must name s columns".into()));
            }
        }
        Ok(Self { s, rows, parallel_class })
    }

    pub fn symbols(&self) -> u32 {
        self.s
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn parallel_class(&self) -> Option<&[usize]> {
        self.parallel_class.as_deref()
    }

    pub fn column(&self, j: usize) -> Vec<u32> {
        self.rows.iter().map(|r| r[j]).collect()
    }
}

/// `a[i][j] = i·j mod v`, valid whenever `gcd(v, (k-1)!) = 1`.
pub fn vandermonde_dm(v: u32, k: usize) -> Result<DifferenceMatrix> {
    if v == 0 || k == 0 {
        return Err(Error::Precondition("need v ≥ 1 and k ≥ 1".into()));
    }
    if let Some(p) = prime_factors(v as u64).into_iter().find(|&p| p < k as u64) {
        return Err(Error::Precondition(format!(
            "gcd({v}, ({}-1)!) ≠ 1: prime {p} divides both",
            k
        )));
    }
    let rows = (0..k as u64)
        .map(|i| (0..v as u64).map(|j| (i * j % v as u64) as u32).collect())
        .collect();
    DifferenceMatrix::new(v, rows)
}

/// Product of a `(v, k)` and a `(w, k)` difference matrix:
/// `c[i][j2·v + j1] = a[i][j1] + v·b[i][j2] (mod vw)`.
pub fn dm_product(a: &DifferenceMatrix, b: &DifferenceMatrix) -> Result<DifferenceMatrix> {
    if a.row_count() != b.row_count() {
        return Err(Error::Precondition(format!(
            "row counts differ: {} vs {}",
            a.row_count(),
            b.row_count()
        )));
    }
    for (name, m) in [("first", a), ("second", b)] {
        if let DmReport::Fail { rows, residue, count } = check_dm(m) {
            return Err(Error::InvalidIngredient(format!(
                "{name} matrix: rows {rows:?} hit residue {residue} {count} times"
            )));
        }
    }
    let (v, w) = (a.modulus() as u64, b.modulus() as u64);
    let vw = v * w;
    if vw > u32::MAX as u64 {
        return Err(Error::Precondition("product modulus too large".into()));
    }
    let rows = a
        .rows()
        .iter()
        .zip(b.rows())
        .map(|(ra, rb)| {
            let mut row = Vec::with_capacity(vw as usize);
            for &y in rb {
                for &x in ra {
                    row.push(((x as u64 + v * y as u64) % vw) as u32);
                }
            }
            row
        })
        .collect();
    DifferenceMatrix::new(vw as u32, rows)
}

/// Subtracts each column's row-0 entry from the whole column.
pub fn normalize_dm(m: &DifferenceMatrix) -> Result<DifferenceMatrix> {
    if let DmReport::Fail { rows, residue, count } = check_dm(m) {
        return Err(Error::InvalidIngredient(format!(
            "rows {rows:?} hit residue {residue} {count} times"
        )));
    }
    let v = m.modulus();
    let top = m.rows()[0].clone();
    let rows = m
        .rows()
        .iter()
        .map(|row| row.iter().zip(&top).map(|(&x, &t)| (x + v - t) % v).collect())
        .collect();
    DifferenceMatrix::new(v, rows)
}

/// `L = [K_0 | K_1 | ... | K_{k-1}]` with `K_a[i][j] = i·j + a (mod k)`;
/// the parallel class is the constant columns `j = 0` of each `K_a`.
pub fn oa_odd_prime(k: u32) -> Result<OrthogonalArray> {
    if k < 3 || !is_prime(k as u64) {
        return Err(Error::Precondition(format!("{k} is not an odd prime")));
    }
    let ku = k as usize;
    let rows = (0..k)
        .map(|i| {
            (0..k)
                .flat_map(|a| (0..k).map(move |j| (i * j + a) % k))
                .collect()
        })
        .collect();
    let class = (0..ku).map(|a| a * ku).collect();
    OrthogonalArray::new(k, rows, Some(class))
}

/// OA(q, q) over GF(q): row `s`, column `(a, b)` holds `s·a + b`. The columns
/// with `a = 0` are constant and form a parallel class.
pub fn oa_prime_power(q: u32) -> Result<OrthogonalArray> {
    let (p, n) = prime_power(q as u64)
        .ok_or_else(|| Error::Precondition(format!("{q} is not a prime power")))?;
    let f = gf_table(p as u32, n)?;
    let qu = q as usize;
    let rows = (0..q)
        .map(|s| {
            (0..q)
                .flat_map(|a| {
                    let f = &f;
                    (0..q).map(move |b| f.add(f.mul(s, a), b))
                })
                .collect()
        })
        .collect();
    let class = (0..qu).collect();
    let oa = OrthogonalArray::new(q, rows, Some(class))?;
    debug_assert!(check_oa(&oa).passed());
    Ok(oa)
}
