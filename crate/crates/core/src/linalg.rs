//! Exact linear algebra over `Q`.
//!
//! Systems are solved by fraction-free (Bareiss) elimination on an integer
//! copy of the augmented matrix; only the final back substitution touches
//! rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::poly::Rational;

/// Outcome of [`solve`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Solution {
    /// A solution with every free variable set to zero.
    Unique(Vec<Rational>),
    Inconsistent,
}

fn lcm_of_denominators<'a>(row: impl Iterator<Item = &'a Rational>) -> BigInt {
    row.fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
}

/// Integer row obtained by clearing the denominators of `row`.
fn integer_row(row: &[Rational], rhs: &Rational) -> Vec<BigInt> {
    let l = lcm_of_denominators(row.iter().chain(std::iter::once(rhs)));
    row.iter()
        .chain(std::iter::once(rhs))
        .map(|q| q.numer() * (&l / q.denom()))
        .collect()
}

/// Fraction-free row echelon form of `m` (rows of equal length), eliminating
/// only over the first `ncols` columns. Returns the pivot positions as
/// `(row, column)`.
fn bareiss_echelon(m: &mut [Vec<BigInt>], ncols: usize) -> Vec<(usize, usize)> {
    let nrows = m.len();
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let (top, rest) = m.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let pivot = pivot_row[c].clone();
        for row in rest.iter_mut() {
            let factor = row[c].clone();
            for j in c..row.len() {
                let v = &pivot * &row[j] - &factor * &pivot_row[j];
                // exact by Sylvester's identity
                row[j] = v / &prev;
            }
        }
        // rows above the pivot are untouched; entries left of c in lower
        // rows are already zero
        prev = pivot;
        pivots.push((r, c));
        r += 1;
    }
    pivots
}

/// Solves `A x = b` exactly. Free variables are set to zero, which makes
/// the returned solution canonical for a given column order.
pub fn solve(a: &[Vec<Rational>], b: &[Rational]) -> Solution {
    assert_eq!(a.len(), b.len());
    let ncols = a.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<BigInt>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| integer_row(row, rhs))
        .collect();
    let pivots = bareiss_echelon(&mut m, ncols);
    let rank = pivots.len();
    if m[rank..].iter().any(|row| !row[ncols].is_zero()) {
        return Solution::Inconsistent;
    }
    let mut x = vec![Rational::zero(); ncols];
    for &(r, c) in pivots.iter().rev() {
        let mut acc = Rational::from_integer(m[r][ncols].clone());
        for j in (c + 1)..ncols {
            if !m[r][j].is_zero() && !x[j].is_zero() {
                acc -= &x[j] * Rational::from_integer(m[r][j].clone());
            }
        }
        x[c] = acc / Rational::from_integer(m[r][c].clone());
    }
    Solution::Unique(x)
}

/// Rank of a rational matrix.
pub fn rank(a: &[Vec<Rational>]) -> usize {
    let ncols = a.first().map_or(0, Vec::len);
    let zero = Rational::zero();
    let mut m: Vec<Vec<BigInt>> = a.iter().map(|row| integer_row(row, &zero)).collect();
    bareiss_echelon(&mut m, ncols).len()
}

/// Basis of the right kernel of an integer matrix, each vector scaled to a
/// primitive integer vector.
pub fn integer_kernel(a: &[Vec<i64>], ncols: usize) -> Vec<Vec<BigInt>> {
    let mut m: Vec<Vec<BigInt>> = a
        .iter()
        .map(|row| {
            let mut v: Vec<BigInt> = row.iter().map(|&x| BigInt::from(x)).collect();
            v.push(BigInt::zero());
            v
        })
        .collect();
    let pivots = bareiss_echelon(&mut m, ncols);
    let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivot_cols.contains(c)) {
        let mut x = vec![Rational::zero(); ncols];
        x[free] = Rational::one();
        for &(r, c) in pivots.iter().rev() {
            let mut acc = Rational::zero();
            for j in (c + 1)..ncols {
                if !m[r][j].is_zero() && !x[j].is_zero() {
                    acc -= &x[j] * Rational::from_integer(m[r][j].clone());
                }
            }
            x[c] = acc / Rational::from_integer(m[r][c].clone());
        }
        basis.push(primitive(&x));
    }
    basis
}

/// Scales a rational vector to a primitive integer vector (gcd 1).
pub fn primitive(x: &[Rational]) -> Vec<BigInt> {
    let l = lcm_of_denominators(x.iter());
    let ints: Vec<BigInt> = x.iter().map(|q| q.numer() * (&l / q.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|v| v / &g).collect()
}

/// Checks `A x = b` exactly.
pub fn verify_solution(a: &[Vec<Rational>], b: &[Rational], x: &[Rational]) -> bool {
    a.iter().zip(b).all(|(row, rhs)| {
        let lhs: Rational = row.iter().zip(x).map(|(p, q)| p * q).sum();
        &lhs == rhs
    })
}

/// Determinant of a small square integer matrix.
pub fn determinant(a: &[Vec<i64>]) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut m: Vec<Vec<BigInt>> = a
        .iter()
        .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !m[i][k].is_zero()) else {
            return BigInt::zero();
        };
        if p != k {
            m.swap(p, k);
            sign = -sign;
        }
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                let v = &m[k][k] * &m[i][j] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    fn q(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| rat(x, 1)).collect())
            .collect()
    }

    #[test]
    fn solves_square_system() {
        let a = q(&[&[2, 1], &[1, 3]]);
        let b = vec![rat(3, 1), rat(5, 1)];
        match solve(&a, &b) {
            Solution::Unique(x) => {
                assert_eq!(x, vec![rat(4, 5), rat(7, 5)]);
                assert!(verify_solution(&a, &b, &x));
            }
            s => panic!("{s:?}"),
        }
    }

    #[test]
    fn free_variables_are_zero() {
        let a = q(&[&[1, 1, 1]]);
        let b = vec![rat(2, 1)];
        assert_eq!(
            solve(&a, &b),
            Solution::Unique(vec![rat(2, 1), rat(0, 1), rat(0, 1)])
        );
    }

    #[test]
    fn detects_inconsistency() {
        let a = q(&[&[1, 1], &[2, 2]]);
        let b = vec![rat(1, 1), rat(3, 1)];
        assert_eq!(solve(&a, &b), Solution::Inconsistent);
        assert_eq!(rank(&a), 1);
    }

    #[test]
    fn rational_entries() {
        let a = vec![vec![rat(1, 2), rat(1, 3)], vec![rat(1, 4), rat(-1, 6)]];
        let b = vec![rat(1, 1), rat(0, 1)];
        let Solution::Unique(x) = solve(&a, &b) else {
            panic!()
        };
        assert!(verify_solution(&a, &b, &x));
    }

    #[test]
    fn kernel_and_determinant() {
        // hyperplane through (2,0) and (0,3): normal (3,2)
        let k = integer_kernel(&[vec![-2, 3]], 2);
        assert_eq!(k.len(), 1);
        assert_eq!(k[0], vec![BigInt::from(3), BigInt::from(2)]);
        assert_eq!(determinant(&[vec![2, 0], vec![0, 3]]), BigInt::from(6));
        assert_eq!(determinant(&[vec![0, 1], vec![1, 0]]), BigInt::from(-1));
        assert_eq!(determinant(&[vec![1, 2], vec![2, 4]]), BigInt::from(0));
        assert_eq!(
            determinant(&[vec![2, -1, 0], vec![1, 3, 2], vec![0, 1, 4]]),
            BigInt::from(24)
        );
    }
}
