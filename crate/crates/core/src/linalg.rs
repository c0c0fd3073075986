//! Exact rank computations.
//!
//! Elimination is written once per algebraic setting and instantiated per
//! scalar: [`rank_fraction_free`] works over any integral domain with exact
//! division (machine integers with overflow detection, or [`crate::Integer`]),
//! [`rank_over_field`] over any field such as [`crate::Rational`], and
//! [`rank_mod_p`] over a prime field chosen at run time.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer as IntegerOps;
use num_traits::{CheckedMul, CheckedSub, Num};
use serde::{Serialize, Serializer};

use crate::{Error, Integer, Result};

/// Characteristic of the coefficient field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum FieldChar {
    /// The rationals.
    #[default]
    Zero,
    /// `Z/p` for a prime `p`.
    Prime(u64),
}

impl FieldChar {
    pub fn new(p: u64) -> Result<Self> {
        match p {
            0 => Ok(FieldChar::Zero),
            p if is_prime(p) && p < (1 << 31) => Ok(FieldChar::Prime(p)),
            p => Err(Error::domain(format!(
                "field characteristic must be 0 or a prime below 2^31, got {p}"
            ))),
        }
    }

    pub fn value(self) -> u64 {
        match self {
            FieldChar::Zero => 0,
            FieldChar::Prime(p) => p,
        }
    }
}

impl fmt::Display for FieldChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

impl FromStr for FieldChar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let p: u64 = s
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("invalid field characteristic {s:?}")))?;
        FieldChar::new(p)
    }
}

impl Serialize for FieldChar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_u64(self.value())
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Integer matrix stored row-wise as `(column, value)` pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<(usize, i64)>>,
}

impl SparseMatrix {
    pub fn new(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols,
            entries: vec![Vec::new(); rows],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn push(&mut self, row: usize, col: usize, value: i64) {
        debug_assert!(row < self.rows && col < self.cols);
        if value != 0 {
            self.entries[row].push((col, value));
        }
    }

    pub fn nnz(&self) -> usize {
        self.entries.iter().map(Vec::len).sum()
    }

    pub fn to_dense<T: Clone + num_traits::Zero>(&self, conv: impl Fn(i64) -> T) -> Vec<Vec<T>> {
        let mut dense = vec![vec![T::zero(); self.cols]; self.rows];
        for (r, row) in self.entries.iter().enumerate() {
            for &(c, v) in row {
                dense[r][c] = dense[r][c].clone() + conv(v);
            }
        }
        dense
    }

    /// Rows that carry at least one entry, dropping the empty ones.
    fn nonempty_rows(&self) -> SparseMatrix {
        let entries: Vec<_> = self
            .entries
            .iter()
            .filter(|r| !r.is_empty())
            .cloned()
            .collect();
        SparseMatrix {
            rows: entries.len(),
            cols: self.cols,
            entries,
        }
    }
}

/// Rank by Bareiss fraction-free elimination. Returns `None` if an
/// intermediate value does not fit in `T`.
pub fn rank_fraction_free<T>(mut m: Vec<Vec<T>>) -> Option<usize>
where
    T: IntegerOps + Clone + CheckedMul + CheckedSub,
{
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut prev = T::one();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot_row) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot_row);
        let pivot = m[rank][col].clone();
        for r in rank + 1..rows {
            let factor = m[r][col].clone();
            for c in col + 1..cols {
                let a = m[r][c].checked_mul(&pivot)?;
                let b = factor.checked_mul(&m[rank][c])?;
                let num = a.checked_sub(&b)?;
                // exact by Sylvester's identity
                m[r][c] = num.div_floor(&prev);
            }
            m[r][col] = T::zero();
        }
        prev = pivot;
        rank += 1;
    }
    Some(rank)
}

/// Rank by Gauss–Jordan elimination over a field.
pub fn rank_over_field<F: Num + Clone>(mut m: Vec<Vec<F>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot_row) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot_row);
        let inv = F::one() / m[rank][col].clone();
        for c in col..cols {
            m[rank][c] = m[rank][c].clone() * inv.clone();
        }
        for r in 0..rows {
            if r == rank || m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].clone();
            for c in col..cols {
                m[r][c] = m[r][c].clone() - factor.clone() * m[rank][c].clone();
            }
        }
        rank += 1;
    }
    rank
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
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

/// Rank over `Z/p`, `p` a prime below `2^31`.
pub fn rank_mod_p(matrix: &SparseMatrix, p: u64) -> usize {
    let mut m = matrix.to_dense(|v| v.rem_euclid(p as i64) as u64);
    for row in m.iter_mut() {
        for x in row.iter_mut() {
            *x %= p;
        }
    }
    let rows = m.len();
    let cols = matrix.cols();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot_row) = (rank..rows).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, pivot_row);
        let inv = pow_mod(m[rank][col], p - 2, p);
        for r in rank + 1..rows {
            let factor = m[r][col] * inv % p;
            if factor == 0 {
                continue;
            }
            for c in col..cols {
                let sub = factor * m[rank][c] % p;
                m[r][c] = (m[r][c] + p - sub) % p;
            }
        }
        rank += 1;
    }
    rank
}

/// Exact rank over the field of the given characteristic.
///
/// Characteristic zero tries `i64` first and falls back to big integers if
/// an intermediate overflows.
pub fn rank(matrix: &SparseMatrix, field: FieldChar) -> usize {
    if matrix.nnz() == 0 {
        return 0;
    }
    let m = matrix.nonempty_rows();
    match field {
        FieldChar::Prime(p) => rank_mod_p(&m, p),
        FieldChar::Zero => rank_fraction_free(m.to_dense(|v| v)).unwrap_or_else(|| {
            rank_fraction_free(m.to_dense(Integer::from)).expect("big integers do not overflow")
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;
    use proptest::prelude::*;

    fn sparse(dense: &[Vec<i64>]) -> SparseMatrix {
        let cols = dense.first().map_or(0, Vec::len);
        let mut m = SparseMatrix::new(dense.len(), cols);
        for (r, row) in dense.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                m.push(r, c, v);
            }
        }
        m
    }

    #[test]
    fn small_ranks() {
        let m = vec![vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]];
        assert_eq!(rank(&sparse(&m), FieldChar::Zero), 2);
        assert_eq!(rank(&sparse(&[vec![0, 0], vec![0, 0]]), FieldChar::Zero), 0);
        assert_eq!(rank(&SparseMatrix::new(0, 3), FieldChar::Zero), 0);
    }

    #[test]
    fn characteristic_matters() {
        // det = 2
        let m = vec![vec![1, 1], vec![1, -1]];
        assert_eq!(rank(&sparse(&m), FieldChar::Zero), 2);
        assert_eq!(rank(&sparse(&m), FieldChar::Prime(2)), 1);
        assert_eq!(rank(&sparse(&m), FieldChar::Prime(3)), 2);
    }

    #[test]
    fn overflow_falls_back() {
        let big = i64::MAX / 3;
        let m = vec![vec![big, big - 1], vec![big - 7, big]];
        assert_eq!(rank_fraction_free(m.clone()), None::<usize>);
        assert_eq!(rank(&sparse(&m), FieldChar::Zero), 2);
    }

    #[test]
    fn field_char_parsing() {
        assert_eq!("0".parse::<FieldChar>().unwrap(), FieldChar::Zero);
        assert_eq!("7".parse::<FieldChar>().unwrap(), FieldChar::Prime(7));
        assert!("4".parse::<FieldChar>().is_err());
        assert!("x".parse::<FieldChar>().is_err());
    }

    proptest! {
        #[test]
        fn fraction_free_agrees_with_rational_gauss(
            m in proptest::collection::vec(proptest::collection::vec(-3i64..=3, 5), 0..6)
        ) {
            let s = sparse(&m);
            let q = rank_over_field(s.to_dense(|v| Rational::from_integer(v.into())));
            prop_assert_eq!(rank(&s, FieldChar::Zero), q);
            prop_assert_eq!(rank_fraction_free(s.to_dense(Integer::from)), Some(q));
            prop_assert!(rank(&s, FieldChar::Prime(101)) <= q);
        }
    }
}
