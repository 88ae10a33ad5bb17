//! Exact matrix ranks over GF(2), GF(p) and the rationals. No floating point:
//! Betti numbers are integers and approximation is meaningless here.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Coefficient field for homology: characteristic 0 (exact integers via
/// fraction-free elimination) or a prime field GF(p).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldSpec {
    Char0,
    Prime(u64),
}

impl FieldSpec {
    pub const GF2: FieldSpec = FieldSpec::Prime(2);

    pub fn new_prime(p: u64) -> Result<FieldSpec> {
        if p >= 1 << 31 {
            return Err(Error::PrimeTooLarge(p));
        }
        if is_prime(p) {
            Ok(FieldSpec::Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Char0 => 0,
            FieldSpec::Prime(p) => *p,
        }
    }
}

impl Default for FieldSpec {
    fn default() -> Self {
        FieldSpec::GF2
    }
}

impl std::fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FieldSpec::Char0 => write!(f, "QQ"),
            FieldSpec::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

/// Accepts `0` (rationals), `2`, or `p:<prime>`.
impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<FieldSpec> {
        match s {
            "0" => Ok(FieldSpec::Char0),
            _ => {
                let digits = s.strip_prefix("p:").unwrap_or(s);
                let p: u64 = digits
                    .parse()
                    .map_err(|_| Error::BadFieldSpec(s.to_string()))?;
                FieldSpec::new_prime(p)
            }
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p.is_multiple_of(2) {
        return p == 2;
    }
    let mut d = 3u64;
    while d.checked_mul(d).map(|sq| sq <= p).unwrap_or(false) {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// A sparse matrix row: column indices with integer coefficients (boundary
/// maps only ever produce ±1 entries).
pub type SparseRow = Vec<(usize, i32)>;

/// Rank of the sparse matrix over the given field.
pub fn rank(rows: &[SparseRow], ncols: usize, field: FieldSpec) -> usize {
    if rows.is_empty() || ncols == 0 {
        return 0;
    }
    match field {
        FieldSpec::Prime(2) => rank_gf2(rows, ncols),
        FieldSpec::Prime(p) => rank_gfp(rows, ncols, p),
        FieldSpec::Char0 => rank_char0(rows, ncols),
    }
}

/// GF(2) rank with bit-packed rows.
fn rank_gf2(rows: &[SparseRow], ncols: usize) -> usize {
    let blocks = ncols.div_ceil(64);
    // (pivot column, reduced row) pairs.
    let mut pivots: Vec<(usize, Vec<u64>)> = Vec::new();
    for row in rows {
        let mut r = vec![0u64; blocks];
        for &(c, coeff) in row {
            if coeff % 2 != 0 {
                r[c / 64] ^= 1u64 << (c % 64);
            }
        }
        for (pc, pr) in &pivots {
            if r[pc / 64] >> (pc % 64) & 1 == 1 {
                for (a, b) in r.iter_mut().zip(pr.iter()) {
                    *a ^= *b;
                }
            }
        }
        if let Some(lead) = r
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(k, &w)| k * 64 + w.trailing_zeros() as usize)
        {
            pivots.push((lead, r));
        }
    }
    pivots.len()
}

/// GF(p) rank by dense elimination.
fn rank_gfp(rows: &[SparseRow], ncols: usize, p: u64) -> usize {
    let reduce = |v: i32| -> u64 { v.rem_euclid(p as i32) as u64 };
    let mut pivots: Vec<(usize, Vec<u64>)> = Vec::new();
    for row in rows {
        let mut r = vec![0u64; ncols];
        for &(c, coeff) in row {
            r[c] = (r[c] + reduce(coeff)) % p;
        }
        for (pc, pr) in &pivots {
            if r[*pc] != 0 {
                // pr is normalized to have a 1 at pc.
                let factor = r[*pc];
                for (a, b) in r.iter_mut().zip(pr.iter()) {
                    *a = (*a + (p - factor) % p * *b % p) % p;
                }
            }
        }
        if let Some(lead) = r.iter().position(|&x| x != 0) {
            let inv = mod_inverse(r[lead], p);
            for x in r.iter_mut() {
                *x = *x * inv % p;
            }
            pivots.push((lead, r));
        }
    }
    pivots.len()
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2) mod p.
    let mut base = a as u128 % p as u128;
    let mut exp = p - 2;
    let mut acc: u128 = 1;
    let m = p as u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc as u64
}

/// Rational rank via fraction-free Bareiss elimination on exact integers.
fn rank_char0(rows: &[SparseRow], ncols: usize) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|row| {
            let mut r = vec![BigInt::zero(); ncols];
            for &(c, coeff) in row {
                r[c] += BigInt::from(coeff);
            }
            r
        })
        .collect();
    let nrows = m.len();
    let mut rank = 0;
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..ncols {
        if r >= nrows {
            break;
        }
        let Some(pivot_row) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, pivot_row);
        for i in (r + 1)..nrows {
            for j in (c + 1)..ncols {
                let num = &m[r][c] * &m[i][j] - &m[i][c] * &m[r][j];
                m[i][j] = num / &prev;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        rank += 1;
        r += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dense(rows: &[&[i32]]) -> Vec<SparseRow> {
        rows.iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|(_, &x)| x != 0)
                    .map(|(c, &x)| (c, x))
                    .collect()
            })
            .collect()
    }

    #[test]
    fn field_spec_parsing() {
        assert_eq!("0".parse::<FieldSpec>().unwrap(), FieldSpec::Char0);
        assert_eq!("2".parse::<FieldSpec>().unwrap(), FieldSpec::GF2);
        assert_eq!("p:7".parse::<FieldSpec>().unwrap(), FieldSpec::Prime(7));
        assert!(matches!("p:6".parse::<FieldSpec>(), Err(Error::NotPrime(6))));
        assert!(matches!("1".parse::<FieldSpec>(), Err(Error::NotPrime(1))));
        assert!("x".parse::<FieldSpec>().is_err());
    }

    #[test]
    fn ranks_agree_across_fields_for_unimodular_matrices() {
        let m = dense(&[&[1, -1, 0], &[0, 1, -1], &[1, 0, -1]]);
        for field in [FieldSpec::GF2, FieldSpec::Prime(5), FieldSpec::Char0] {
            assert_eq!(rank(&m, 3, field), 2, "{field}");
        }
    }

    #[test]
    fn characteristic_matters() {
        // [[2]] has rank 1 over QQ and GF(3), rank 0 over GF(2).
        let m = dense(&[&[2]]);
        assert_eq!(rank(&m, 1, FieldSpec::Char0), 1);
        assert_eq!(rank(&m, 1, FieldSpec::Prime(3)), 1);
        assert_eq!(rank(&m, 1, FieldSpec::GF2), 0);
    }

    #[test]
    fn wide_bit_packed_rank() {
        // Identity on 130 columns, plus a dependent row.
        let mut rows: Vec<SparseRow> = (0..130).map(|c| vec![(c, 1)]).collect();
        rows.push(vec![(0, 1), (129, 1)]);
        assert_eq!(rank(&rows, 130, FieldSpec::GF2), 130);
        assert_eq!(rank(&rows, 130, FieldSpec::Char0), 130);
    }

    #[test]
    fn empty_matrix() {
        assert_eq!(rank(&[], 5, FieldSpec::GF2), 0);
        assert_eq!(rank(&[vec![]], 0, FieldSpec::GF2), 0);
    }
}
