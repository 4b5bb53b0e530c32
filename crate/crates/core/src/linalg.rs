//! Exact linear algebra over ℚ and over prime fields.
//!
//! Dense matrices use arbitrary-precision rationals and fraction-free
//! (Bareiss) elimination for ranks over ℚ. Boundary matrices of simplicial
//! complexes are sparse with tiny integer entries, so homology goes through
//! [`SparseIntMatrix`], an incremental echelon form over machine integers that
//! falls back to the dense big-integer route on overflow.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Coefficient field for ranks and homology.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    PrimeField(u32),
}

impl FieldSpec {
    /// `GF(p)`; `p` must be a prime below `2^31`.
    pub fn prime(p: u64) -> Result<Self> {
        if !(2..1 << 31).contains(&p) {
            return Err(Error::NotPrime(p));
        }
        let mut d = 2;
        while d * d <= p {
            if p.is_multiple_of(d) {
                return Err(Error::NotPrime(p));
            }
            d += 1;
        }
        Ok(FieldSpec::PrimeField(p as u32))
    }

    pub fn characteristic(&self) -> u32 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::PrimeField(p) => *p,
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => f.write_str("q"),
            FieldSpec::PrimeField(p) => write!(f, "gf:{p}"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    /// Accepts `q` or `gf:<p>`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("q") {
            return Ok(FieldSpec::Rationals);
        }
        let p = s
            .strip_prefix("gf:")
            .and_then(|p| p.parse::<u64>().ok())
            .ok_or_else(|| Error::InvalidParameter(format!("field must be `q` or `gf:<prime>`, got {s:?}")))?;
        FieldSpec::prime(p)
    }
}

impl Serialize for FieldSpec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

fn mod_inv(a: u64, p: u64) -> u64 {
    mod_pow(a, p - 2, p)
}

fn bigint_mod(x: &BigInt, p: u32) -> u64 {
    x.mod_floor(&BigInt::from(p)).to_u64().expect("residue fits")
}

fn rational_mod(x: &BigRational, p: u32) -> Result<u64> {
    let den = bigint_mod(x.denom(), p);
    if den == 0 {
        return Err(Error::PrimeDividesDenominator(p));
    }
    Ok(bigint_mod(x.numer(), p) * mod_inv(den, p as u64) % p as u64)
}

/// Rank of a dense matrix over `GF(p)` given by residues.
fn rank_mod_p(mut rows: Vec<Vec<u64>>, cols: usize, p: u64) -> usize {
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][c] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = mod_inv(rows[rank][c], p);
        for j in c..cols {
            rows[rank][j] = rows[rank][j] * inv % p;
        }
        for r in rank + 1..rows.len() {
            let factor = rows[r][c];
            if factor == 0 {
                continue;
            }
            for j in c..cols {
                let sub = factor * rows[rank][j] % p;
                rows[r][j] = (rows[r][j] + p - sub) % p;
            }
        }
        rank += 1;
    }
    rank
}

/// Fraction-free Gaussian elimination. Pivots are the first nonzero entry
/// found scanning rows in order; every intermediate entry is an integer minor.
fn bareiss_rank(mut m: Vec<Vec<BigInt>>, cols: usize) -> usize {
    let rows = m.len();
    let mut prev = BigInt::one();
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        let (top, rest) = m.split_at_mut(rank + 1);
        let prow = &top[rank];
        for row in rest.iter_mut() {
            let factor = row[c].clone();
            for j in c + 1..cols {
                let num = &prow[c] * &row[j] - &factor * &prow[j];
                let (q, r) = num.div_rem(&prev);
                debug_assert!(r.is_zero(), "Bareiss division must be exact");
                row[j] = q;
            }
            row[c] = BigInt::zero();
        }
        prev = m[rank][c].clone();
        rank += 1;
    }
    rank
}

/// Dense matrix with exact rational entries, stored row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![BigRational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigRational::one());
        }
        m
    }

    /// Builds a matrix from rows; `cols` fixes the width when there are no rows.
    pub fn from_rows(rows: Vec<Vec<BigRational>>, cols: usize) -> Result<Self> {
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(Error::RaggedMatrix { row: i, expected: cols, found: r.len() });
            }
        }
        let n = rows.len();
        Ok(Self { rows: n, cols, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_integer_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
                .collect(),
            cols,
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigRational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: BigRational) {
        self.data[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[BigRational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    /// Vertical concatenation.
    pub fn stack(&self, below: &Self) -> Result<Self> {
        if self.cols != below.cols {
            return Err(Error::RaggedMatrix { row: self.rows, expected: self.cols, found: below.cols });
        }
        let mut data = self.data.clone();
        data.extend(below.data.iter().cloned());
        Ok(Self { rows: self.rows + below.rows, cols: self.cols, data })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::InvalidParameter(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j) + a * b;
                        out.set(i, j, v);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Each row scaled by the lcm of its denominators.
    fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|r| {
                let row = self.row(r);
                let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
                row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect()
            })
            .collect()
    }

    /// Rank over `field`. Over `GF(p)` every denominator must be a unit mod `p`.
    pub fn rank(&self, field: FieldSpec) -> Result<usize> {
        match field {
            FieldSpec::Rationals => Ok(bareiss_rank(self.integer_rows(), self.cols)),
            FieldSpec::PrimeField(p) => {
                let rows = (0..self.rows)
                    .map(|r| self.row(r).iter().map(|x| rational_mod(x, p)).collect::<Result<Vec<_>>>())
                    .collect::<Result<Vec<_>>>()?;
                Ok(rank_mod_p(rows, self.cols, p as u64))
            }
        }
    }

    /// `cols - rank`.
    pub fn nullity(&self, field: FieldSpec) -> Result<usize> {
        Ok(self.cols - self.rank(field)?)
    }

    /// Reduced row echelon form over ℚ and the pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            for j in 0..m.cols {
                m.data.swap(r * m.cols + j, p * m.cols + j);
            }
            let inv = m.get(r, c).recip();
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let factor = m.get(i, c).clone();
                for j in c..m.cols {
                    let v = m.get(i, j) - &factor * m.get(r, j);
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    /// A basis of the right null space over ℚ.
    pub fn nullspace(&self) -> Vec<Vec<BigRational>> {
        let (rref, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![BigRational::zero(); self.cols];
                v[f] = BigRational::one();
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = -rref.get(row, f).clone();
                }
                v
            })
            .collect()
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RationalMatrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            let cells: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

type SparseRow = Vec<(usize, i64)>;

/// Sparse integer matrix, rows stored as column-sorted `(column, value)` lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseIntMatrix {
    cols: usize,
    rows: Vec<SparseRow>,
}

/// `a * x + b * y` over sparse rows with checked arithmetic.
fn combine(a: i128, x: &[(usize, i128)], b: i128, y: &[(usize, i128)]) -> Option<Vec<(usize, i128)>> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let (col, v) = match (x.get(i), y.get(j)) {
            (Some(&(cx, vx)), Some(&(cy, vy))) if cx == cy => {
                i += 1;
                j += 1;
                (cx, a.checked_mul(vx)?.checked_add(b.checked_mul(vy)?)?)
            }
            (Some(&(cx, vx)), Some(&(cy, _))) if cx < cy => {
                i += 1;
                (cx, a.checked_mul(vx)?)
            }
            (Some(&(cx, vx)), None) => {
                i += 1;
                (cx, a.checked_mul(vx)?)
            }
            (_, Some(&(cy, vy))) => {
                j += 1;
                (cy, b.checked_mul(vy)?)
            }
            (None, None) => unreachable!(),
        };
        if v != 0 {
            out.push((col, v));
        }
    }
    Some(out)
}

impl SparseIntMatrix {
    pub fn new(cols: usize) -> Self {
        Self { cols, rows: Vec::new() }
    }

    /// Appends a row given as `(column, value)` pairs in any order; zero
    /// entries are dropped and repeated columns are summed.
    pub fn push_row(&mut self, mut entries: Vec<(usize, i64)>) {
        entries.sort_unstable_by_key(|e| e.0);
        let mut row: SparseRow = Vec::with_capacity(entries.len());
        for (c, v) in entries {
            assert!(c < self.cols, "column {c} out of range");
            match row.last_mut() {
                Some(last) if last.0 == c => last.1 += v,
                _ => row.push((c, v)),
            }
        }
        row.retain(|e| e.1 != 0);
        self.rows.push(row);
    }

    pub fn rows(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn to_rational(&self) -> RationalMatrix {
        let mut m = RationalMatrix::zeros(self.rows.len(), self.cols);
        for (r, row) in self.rows.iter().enumerate() {
            for &(c, v) in row {
                m.set(r, c, BigRational::from_integer(v.into()));
            }
        }
        m
    }

    pub fn rank(&self, field: FieldSpec) -> Result<usize> {
        Ok(self.rank_with_pivots(field)?.0)
    }

    /// Rank together with the leading columns of an echelon basis of the row
    /// space. The columns are `None` when integer overflow forced the dense
    /// fallback.
    pub fn rank_with_pivots(&self, field: FieldSpec) -> Result<(usize, Option<Vec<usize>>)> {
        match field {
            FieldSpec::Rationals => Ok(match self.rank_rational_fast() {
                Some(leads) => (leads.len(), Some(leads)),
                None => (bareiss_rank(self.to_rational().integer_rows(), self.cols), None),
            }),
            FieldSpec::PrimeField(p) => {
                let leads = self.rank_mod_p(p as i64);
                Ok((leads.len(), Some(leads)))
            }
        }
    }

    /// Incremental echelon form over the integers. Each incoming row is reduced
    /// against stored pivot rows (keyed by leading column) using exact integer
    /// combinations. Returns the pivot columns, or `None` on overflow.
    fn rank_rational_fast(&self) -> Option<Vec<usize>> {
        let mut pivots: Vec<Option<Vec<(usize, i128)>>> = vec![None; self.cols];
        let mut leads = Vec::new();
        for row in &self.rows {
            let mut r: Vec<(usize, i128)> = row.iter().map(|&(c, v)| (c, v as i128)).collect();
            while let Some(&(lead, a)) = r.first() {
                match &pivots[lead] {
                    None => {
                        let g = r.iter().fold(0i128, |g, &(_, v)| g.gcd(&v));
                        let sign = if r[0].1 < 0 { -1 } else { 1 };
                        for e in r.iter_mut() {
                            e.1 = e.1 / g * sign;
                        }
                        pivots[lead] = Some(r);
                        leads.push(lead);
                        break;
                    }
                    Some(p) => {
                        let b = p[0].1;
                        r = if b == 1 {
                            combine(1, &r, -a, p)?
                        } else {
                            let g = a.gcd(&b);
                            combine(b / g, &r, -(a / g), p)?
                        };
                        if let Some(&(lead2, _)) = r.first() {
                            debug_assert!(lead2 > lead);
                        }
                    }
                }
            }
        }
        Some(leads)
    }

    fn rank_mod_p(&self, p: i64) -> Vec<usize> {
        let mut pivots: Vec<Option<Vec<(usize, i128)>>> = vec![None; self.cols];
        let p128 = p as i128;
        let mut leads = Vec::new();
        for row in &self.rows {
            let mut r: Vec<(usize, i128)> = row
                .iter()
                .map(|&(c, v)| (c, (v as i128).rem_euclid(p128)))
                .filter(|e| e.1 != 0)
                .collect();
            while let Some(&(lead, a)) = r.first() {
                match &pivots[lead] {
                    None => {
                        let inv = mod_inv(a as u64, p as u64) as i128;
                        for e in r.iter_mut() {
                            e.1 = e.1 * inv % p128;
                        }
                        pivots[lead] = Some(r);
                        leads.push(lead);
                        break;
                    }
                    Some(pr) => {
                        let mut next = combine(1, &r, p128 - a, pr).expect("residues are small");
                        for e in next.iter_mut() {
                            e.1 %= p128;
                        }
                        next.retain(|e| e.1 != 0);
                        r = next;
                    }
                }
            }
        }
        leads
    }
}
