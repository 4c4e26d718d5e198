//! Exact integer linear algebra for adjacency spectra: modular rank as a
//! fast filter, fraction-free elimination over the integers as the
//! certificate.
//!
//! For an integer matrix, nullity mod p can only overestimate the rational
//! nullity, so a zero modular nullity certifies a zero rational one; the
//! candidates that survive the filter get an exact fraction-free
//! elimination over arbitrary-precision integers.

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use thiserror::Error;

/// 2³¹ - 1, prime; products of two residues fit in a u64.
const P: u64 = 2_147_483_647;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpectrumError {
    /// Integer candidates did not exhaust the dimension: some eigenvalue is
    /// non-integral or out of the scanned range.
    #[error("NonIntegralSpectrum: integer eigenvalue multiplicities sum to {found}, expected {dim}")]
    NonIntegralSpectrum { found: usize, dim: usize },
}

fn mod_pow(mut base: u64, mut exp: u64) -> u64 {
    let mut acc = 1u64;
    base %= P;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % P;
        }
        base = base * base % P;
        exp >>= 1;
    }
    acc
}

/// Nullity of `m` over GF(p); `m` is row-major `n×n`.
fn nullity_mod_p(n: usize, mut m: Vec<u64>) -> usize {
    let mut rank = 0;
    let mut row = 0;
    for col in 0..n {
        let pivot = (row..n).find(|&r| m[r * n + col] != 0);
        let pivot = match pivot {
            Some(p) => p,
            None => continue,
        };
        if pivot != row {
            for c in col..n {
                m.swap(row * n + c, pivot * n + c);
            }
        }
        let inv = mod_pow(m[row * n + col], P - 2);
        for r in row + 1..n {
            let lead = m[r * n + col];
            if lead == 0 {
                continue;
            }
            let f = lead * inv % P;
            for c in col..n {
                let sub = f * m[row * n + c] % P;
                m[r * n + c] = (m[r * n + c] + P - sub) % P;
            }
        }
        rank += 1;
        row += 1;
        if row == n {
            break;
        }
    }
    n - rank
}

/// Exact nullity over the rationals: one-step fraction-free elimination
/// (every division is by the previous pivot and is exact).
fn nullity_exact(n: usize, m: &mut [BigInt]) -> usize {
    let mut rank = 0;
    let mut row = 0;
    let mut prev = BigInt::from(1);
    for col in 0..n {
        let pivot = (row..n).find(|&r| !m[r * n + col].is_zero());
        let pivot = match pivot {
            Some(p) => p,
            None => continue,
        };
        if pivot != row {
            for c in 0..n {
                m.swap(row * n + c, pivot * n + c);
            }
        }
        let head = m[row * n + col].clone();
        for r in row + 1..n {
            let lead = m[r * n + col].clone();
            if lead.is_zero() {
                // Still rescale so the fraction-free invariant holds for
                // later eliminations in this row.
                for c in col + 1..n {
                    let v = &m[r * n + c] * &head;
                    debug_assert!((&v % &prev).is_zero());
                    m[r * n + c] = v / &prev;
                }
                continue;
            }
            m[r * n + col] = BigInt::zero();
            for c in col + 1..n {
                let v = &m[r * n + c] * &head - &lead * &m[row * n + c];
                debug_assert!((&v % &prev).is_zero());
                m[r * n + c] = v / &prev;
            }
        }
        prev = head;
        rank += 1;
        row += 1;
        if row == n {
            break;
        }
    }
    n - rank
}

/// The exact integer spectrum of a symmetric nonnegative 0/1 adjacency
/// matrix whose eigenvalues are bounded in magnitude by `bound` (for an
/// adjacency matrix, the maximum degree is such a bound). Every integer in
/// `[-bound, bound]` is tested; multiplicities are exact geometric
/// nullities over the rationals, and they must sum to the dimension.
pub fn exact_integer_spectrum(
    n: usize,
    adjacency: &[u8],
    bound: i64,
) -> Result<Vec<(i64, usize)>, SpectrumError> {
    assert_eq!(adjacency.len(), n * n);
    let candidates: Vec<i64> = (-bound..=bound).collect();
    let mut found: Vec<(i64, usize)> = candidates
        .par_iter()
        .filter_map(|&lambda| {
            let lam_mod = lambda.rem_euclid(P as i64) as u64;
            let mut m = vec![0u64; n * n];
            for i in 0..n {
                for j in 0..n {
                    let mut v = u64::from(adjacency[i * n + j]);
                    if i == j {
                        v = (v + P - lam_mod) % P;
                    }
                    m[i * n + j] = v;
                }
            }
            if nullity_mod_p(n, m) == 0 {
                return None;
            }
            let mut exact: Vec<BigInt> = Vec::with_capacity(n * n);
            for i in 0..n {
                for j in 0..n {
                    let mut v = i64::from(adjacency[i * n + j]);
                    if i == j {
                        v -= lambda;
                    }
                    exact.push(BigInt::from(v));
                }
            }
            let nullity = nullity_exact(n, &mut exact);
            (nullity > 0).then_some((lambda, nullity))
        })
        .collect();
    found.sort_by_key(|&(lambda, _)| std::cmp::Reverse(lambda));

    let total: usize = found.iter().map(|&(_, m)| m).sum();
    if total != n {
        return Err(SpectrumError::NonIntegralSpectrum { found: total, dim: n });
    }
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dense(rows: &[&[u8]]) -> (usize, Vec<u8>) {
        let n = rows.len();
        let mut m = Vec::with_capacity(n * n);
        for r in rows {
            assert_eq!(r.len(), n);
            m.extend_from_slice(r);
        }
        (n, m)
    }

    #[test]
    fn zero_matrix_spectrum() {
        let (n, m) = dense(&[&[0, 0], &[0, 0]]);
        assert_eq!(exact_integer_spectrum(n, &m, 0).unwrap(), vec![(0, 2)]);
    }

    #[test]
    fn complete_graph_spectrum() {
        // K4: eigenvalues 3 (once) and -1 (three times).
        let (n, m) = dense(&[
            &[0, 1, 1, 1],
            &[1, 0, 1, 1],
            &[1, 1, 0, 1],
            &[1, 1, 1, 0],
        ]);
        assert_eq!(exact_integer_spectrum(n, &m, 3).unwrap(), vec![(3, 1), (-1, 3)]);
    }

    #[test]
    fn cycle_c4_spectrum() {
        // C4: 2, 0, 0, -2.
        let (n, m) = dense(&[
            &[0, 1, 0, 1],
            &[1, 0, 1, 0],
            &[0, 1, 0, 1],
            &[1, 0, 1, 0],
        ]);
        assert_eq!(exact_integer_spectrum(n, &m, 2).unwrap(), vec![(2, 1), (0, 2), (-2, 1)]);
    }

    #[test]
    fn non_integral_spectrum_is_reported() {
        // Path P3 has eigenvalues ±√2 and 0: only multiplicity 1 is integral.
        let (n, m) = dense(&[&[0, 1, 0], &[1, 0, 1], &[0, 1, 0]]);
        assert_eq!(
            exact_integer_spectrum(n, &m, 2),
            Err(SpectrumError::NonIntegralSpectrum { found: 1, dim: 3 })
        );
    }

    #[test]
    fn petersen_graph_spectrum() {
        // Petersen: 3 once, 1 five times, -2 four times.
        let adj_pairs: [(usize, usize); 15] = [
            (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
            (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
            (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
        ];
        let n = 10;
        let mut m = vec![0u8; n * n];
        for (a, b) in adj_pairs {
            m[a * n + b] = 1;
            m[b * n + a] = 1;
        }
        assert_eq!(exact_integer_spectrum(n, &m, 3).unwrap(), vec![(3, 1), (1, 5), (-2, 4)]);
    }
}
