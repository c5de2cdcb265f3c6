use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use super::MonomialIdeal;
use crate::error::{Error, Result};
use crate::linalg::{integer_kernel, rank};
use crate::poly::Rational;

/// Largest arity accepted by [`newton_polyhedron`].
pub const MAX_ARITY: usize = 6;

/// Largest number of candidate hyperplanes examined.
const MAX_CANDIDATES: u64 = 5_000_000;

/// A facet inequality `<normal, u> >= offset`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FacetDatum {
    pub normal: Vec<u64>,
    pub offset: u64,
    /// False exactly for the coordinate facets `u_i >= 0`.
    pub bounded: bool,
}

impl FacetDatum {
    pub fn evaluate(&self, u: &[u32]) -> u64 {
        self.normal.iter().zip(u).map(|(&a, &e)| a * e as u64).sum()
    }

    /// Indices with a non-zero normal coordinate.
    pub fn support(&self) -> Vec<usize> {
        (0..self.normal.len())
            .filter(|&i| self.normal[i] > 0)
            .collect()
    }

    pub fn normal_weight(&self) -> u64 {
        self.normal.iter().sum()
    }
}

/// `conv(exponents) + R^n_{>=0}` described by its vertices and facets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewtonPolyhedron {
    pub arity: usize,
    pub vertices: Vec<Vec<u32>>,
    pub facets: Vec<FacetDatum>,
}

impl NewtonPolyhedron {
    /// `u` lies in `scale` times the polyhedron.
    pub fn contains_scaled(&self, u: &[u32], scale: u64) -> bool {
        self.facets
            .iter()
            .all(|f| f.evaluate(u) >= scale * f.offset)
    }

    pub fn bounded_facets(&self) -> impl Iterator<Item = &FacetDatum> {
        self.facets.iter().filter(|f| f.bounded)
    }
}

/// One distinguished center `{x_i = 0 : i in support}` with its
/// coefficient.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DistinguishedDatum {
    pub support: Vec<usize>,
    pub coefficient: u64,
    pub dimension: usize,
    pub degree: u32,
}

impl DistinguishedDatum {
    pub fn arity(&self) -> usize {
        self.dimension + self.support.len()
    }
}

fn combinations(n: usize, k: usize, mut visit: impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        visit(&idx);
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1u64, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

/// Computes the Newton polyhedron of a monomial ideal.
///
/// Every `n`-subset of generator exponents and coordinate directions that
/// spans a unique hyperplane gives a candidate; candidates with a
/// non-negative normal that support all generators are exactly the facets.
pub fn newton_polyhedron(j: &MonomialIdeal) -> Result<NewtonPolyhedron> {
    let n = j.arity();
    if n > MAX_ARITY {
        return Err(Error::Resource(format!(
            "Newton polyhedron enumeration supports arity <= {MAX_ARITY}, got {n}"
        )));
    }
    let points: Vec<Vec<i64>> = j
        .generators()
        .iter()
        .map(|g| g.exponents().iter().map(|&e| e as i64).collect())
        .collect();
    let m = points.len();
    if binomial((m + n) as u64, n as u64) > MAX_CANDIDATES {
        return Err(Error::Resource(format!(
            "too many facet candidates for {m} generators in arity {n}"
        )));
    }

    let mut found: BTreeSet<(Vec<u64>, u64)> = BTreeSet::new();
    let mut failure = None;
    combinations(m + n, n, |subset| {
        if failure.is_some() {
            return;
        }
        let rows: Vec<Vec<i64>> = subset
            .iter()
            .map(|&s| {
                if s < m {
                    let mut r = points[s].clone();
                    r.push(-1);
                    r
                } else {
                    let mut r = vec![0; n + 1];
                    r[s - m] = 1;
                    r
                }
            })
            .collect();
        let kernel = integer_kernel(&rows, n + 1);
        if kernel.len() != 1 {
            return;
        }
        let mut v = kernel.into_iter().next().expect("one vector");
        let (a, b) = v.split_at_mut(n);
        if a.iter().all(Zero::is_zero) {
            return;
        }
        if a.iter().any(Signed::is_negative) {
            if a.iter().any(Signed::is_positive) {
                return;
            }
            a.iter_mut().for_each(|x| *x = -&*x);
            b[0] = -&b[0];
        }
        let to_u64 = |x: &BigInt| x.to_u64();
        let (Some(normal), Some(offset)) = (
            a.iter().map(to_u64).collect::<Option<Vec<u64>>>(),
            to_u64(&b[0]),
        ) else {
            failure = Some(Error::Resource("facet normal exceeds 64 bits".into()));
            return;
        };
        let min = points
            .iter()
            .map(|p| {
                p.iter()
                    .zip(&normal)
                    .map(|(&e, &w)| e as u64 * w)
                    .sum::<u64>()
            })
            .min()
            .expect("non-empty");
        if min == offset {
            found.insert((normal, offset));
        }
    });
    if let Some(e) = failure {
        return Err(e);
    }

    let facets: Vec<FacetDatum> = found
        .into_iter()
        .map(|(normal, offset)| FacetDatum {
            bounded: offset > 0,
            normal,
            offset,
        })
        .collect();

    let vertices = j
        .generators()
        .iter()
        .filter(|g| {
            let tight: Vec<Vec<Rational>> = facets
                .iter()
                .filter(|f| f.evaluate(g.exponents()) == f.offset)
                .map(|f| {
                    f.normal
                        .iter()
                        .map(|&w| Rational::from_integer(w.into()))
                        .collect()
                })
                .collect();
            rank(&tight) == n
        })
        .map(|g| g.exponents().to_vec())
        .collect();

    Ok(NewtonPolyhedron {
        arity: n,
        vertices,
        facets,
    })
}

/// Distinguished data read off the bounded facets: one datum per facet,
/// repetitions of the same center kept.
pub fn distinguished_data(j: &MonomialIdeal) -> Result<Vec<DistinguishedDatum>> {
    let np = newton_polyhedron(j)?;
    Ok(data_of(&np))
}

pub(crate) fn data_of(np: &NewtonPolyhedron) -> Vec<DistinguishedDatum> {
    np.bounded_facets()
        .map(|f| {
            let support = f.support();
            DistinguishedDatum {
                dimension: np.arity - support.len(),
                support,
                coefficient: f.offset,
                degree: 1,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(exps: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(&exps.iter().map(|e| e.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn bounded(np: &NewtonPolyhedron) -> Vec<(Vec<u64>, u64)> {
        np.bounded_facets()
            .map(|f| (f.normal.clone(), f.offset))
            .collect()
    }

    #[test]
    fn square_powers() {
        let np = newton_polyhedron(&ideal(&[&[2, 0], &[0, 2]])).unwrap();
        assert_eq!(bounded(&np), vec![(vec![1, 1], 2)]);
        assert_eq!(np.vertices.len(), 2);
        assert_eq!(np.facets.len(), 3);
    }

    #[test]
    fn principal() {
        let np = newton_polyhedron(&ideal(&[&[1, 0]])).unwrap();
        assert_eq!(bounded(&np), vec![(vec![1, 0], 1)]);
        assert!(np
            .facets
            .iter()
            .any(|f| !f.bounded && f.normal == vec![0, 1]));
        let d = distinguished_data(&ideal(&[&[1, 0]])).unwrap();
        assert_eq!(d.len(), 1);
        assert_eq!(
            (d[0].support.clone(), d[0].coefficient, d[0].dimension),
            (vec![0], 1, 1)
        );
    }

    #[test]
    fn mixed_powers() {
        let d = distinguished_data(&ideal(&[&[2, 0], &[0, 3]])).unwrap();
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].coefficient, 6);
        assert_eq!(d[0].dimension, 0);
    }

    #[test]
    fn non_vertex_generator() {
        // xy lies on the segment between x^2 and y^2
        let np = newton_polyhedron(&ideal(&[&[2, 0], &[1, 1], &[0, 2]])).unwrap();
        assert_eq!(np.vertices, vec![vec![2, 0], vec![0, 2]]);
    }

    #[test]
    fn arity_bound() {
        let j = MonomialIdeal::from_exponents(&[vec![1; 7]]).unwrap();
        assert!(matches!(newton_polyhedron(&j), Err(Error::Resource(_))));
    }
}
