//! Upward-closed lattice regions `{u in N^n : <a_f, u> >= c_f for all f}`
//! with non-negative normals. Integral closures, multiplier ideals and
//! symbolic intersections of monomial ideals are all of this shape.

use num_integer::Integer;
use num_traits::ToPrimitive;

use super::newton::{DistinguishedDatum, NewtonPolyhedron};
use super::MonomialIdeal;
use crate::error::{Error, Result};
use crate::lp::{self, Constraint, LpOutcome, Relation};
use crate::poly::{Monomial, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Halfspace {
    pub normal: Vec<u64>,
    pub bound: i128,
}

impl Halfspace {
    fn value(&self, u: &[u32]) -> i128 {
        self.normal
            .iter()
            .zip(u)
            .map(|(&a, &e)| a as i128 * e as i128)
            .sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Region {
    pub arity: usize,
    pub halfspaces: Vec<Halfspace>,
}

impl Region {
    pub fn new(arity: usize, halfspaces: Vec<Halfspace>) -> Self {
        Region { arity, halfspaces }
    }

    /// Exponents of the integral closure of `J^level`.
    pub fn closure(np: &NewtonPolyhedron, level: u64) -> Self {
        let hs = np
            .bounded_facets()
            .map(|f| Halfspace {
                normal: f.normal.clone(),
                bound: level as i128 * f.offset as i128,
            })
            .collect();
        Region::new(np.arity, hs)
    }

    /// Exponents `u` with `u + 1` strictly inside `level` times the
    /// polyhedron on every bounded facet.
    pub fn multiplier(np: &NewtonPolyhedron, level: u64) -> Self {
        let hs = np
            .bounded_facets()
            .map(|f| Halfspace {
                normal: f.normal.clone(),
                bound: level as i128 * f.offset as i128 - f.normal_weight() as i128 + 1,
            })
            .collect();
        Region::new(np.arity, hs)
    }

    /// Exponents of `∩_j I_{Z_j}^{<multiplier * r_j>}`.
    pub fn symbolic(arity: usize, data: &[DistinguishedDatum], multiplier: u64) -> Self {
        let hs = data
            .iter()
            .map(|d| {
                let mut normal = vec![0; arity];
                for &i in &d.support {
                    normal[i] = 1;
                }
                Halfspace {
                    normal,
                    bound: multiplier as i128 * d.coefficient as i128,
                }
            })
            .collect();
        Region::new(arity, hs)
    }

    pub fn contains(&self, u: &[u32]) -> bool {
        self.halfspaces.iter().all(|h| h.value(u) >= h.bound)
    }

    /// Per-coordinate upper bounds on the exponents of minimal generators.
    ///
    /// If `u` is minimal and `u_i > 0`, lowering `u_i` breaks some `f` with
    /// `a_fi > 0`, so `a_fi * u_i <= <a_f, u> < c_f + a_fi`.
    pub fn generator_bounds(&self) -> Vec<u32> {
        (0..self.arity)
            .map(|i| {
                self.halfspaces
                    .iter()
                    .filter(|h| h.normal[i] > 0)
                    .map(|h| {
                        let c = h.bound.max(0);
                        let a = h.normal[i] as i128;
                        u32::try_from(Integer::div_ceil(&c, &a)).unwrap_or(u32::MAX)
                    })
                    .max()
                    .unwrap_or(0)
            })
            .collect()
    }

    /// Lowers coordinates, last variable first, as far as the region
    /// allows. The result is a minimal element below `u`.
    pub fn minimize_point(&self, mut u: Vec<u32>) -> Vec<u32> {
        for i in (0..self.arity).rev() {
            let mut dec = u[i] as i128;
            for h in &self.halfspaces {
                if h.normal[i] > 0 {
                    let slack = h.value(&u) - h.bound;
                    dec = dec.min(slack.max(0) / h.normal[i] as i128);
                }
            }
            u[i] -= dec as u32;
        }
        u
    }

    fn is_minimal(&self, u: &[u32]) -> bool {
        let mut v = u.to_vec();
        (0..self.arity).all(|i| {
            if v[i] == 0 {
                return true;
            }
            v[i] -= 1;
            let inside = self.contains(&v);
            v[i] += 1;
            !inside
        })
    }

    /// Minimal generators, sorted. Fails with [`Error::CapTooSmall`] when a
    /// generator could have an exponent above `cap`.
    pub fn minimal_generators(&self, cap: u32) -> Result<Vec<Monomial>> {
        let bounds = self.generator_bounds();
        let needed = bounds.iter().copied().max().unwrap_or(0);
        if needed > cap {
            return Err(Error::CapTooSmall { given: cap, needed });
        }
        let n = self.arity;
        let mut out = Vec::new();
        if n == 0 {
            return Ok(vec![Monomial::one(0)]);
        }
        let mut u = vec![0u32; n];
        loop {
            // smallest last coordinate completing the prefix
            u[n - 1] = 0;
            let last = (0..=bounds[n - 1]).find(|&e| {
                u[n - 1] = e;
                self.contains(&u)
            });
            if let Some(e) = last {
                u[n - 1] = e;
                if self.is_minimal(&u) {
                    out.push(Monomial::new(u.clone()));
                }
            }
            // advance the prefix odometer
            let mut k = n - 1;
            loop {
                if k == 0 {
                    out.sort();
                    return Ok(out);
                }
                k -= 1;
                if u[k] < bounds[k] {
                    u[k] += 1;
                    for v in &mut u[k + 1..] {
                        *v = 0;
                    }
                    break;
                }
            }
        }
    }

    /// Decides `region ⊆ J`. Returns a minimal element of the region
    /// outside `J` when the inclusion fails.
    ///
    /// Uses the irreducible decomposition `J = ∩ (x_i^{b_i} : i in A)`: the
    /// region escapes a component iff it meets the box `u_A <= b_A - 1`
    /// with the other coordinates free.
    pub fn witness_outside(&self, j: &MonomialIdeal) -> Result<Option<Monomial>> {
        for comp in j.irreducible_components() {
            let mut corner = vec![0u32; self.arity];
            let mut free = vec![true; self.arity];
            for &(i, b) in &comp.powers {
                corner[i] = b - 1;
                free[i] = false;
            }
            let mut lift = 0i128;
            let mut feasible = true;
            for h in &self.halfspaces {
                let short = h.bound - h.value(&corner);
                if short <= 0 {
                    continue;
                }
                let free_weight: i128 = (0..self.arity)
                    .filter(|&i| free[i])
                    .map(|i| h.normal[i] as i128)
                    .sum();
                if free_weight == 0 {
                    feasible = false;
                    break;
                }
                lift = lift.max(Integer::div_ceil(&short, &free_weight));
            }
            if !feasible {
                continue;
            }
            let lift = u32::try_from(lift)
                .map_err(|_| Error::Resource("witness exponent overflow".into()))?;
            for i in 0..self.arity {
                if free[i] {
                    corner[i] = lift;
                }
            }
            let w = Monomial::new(self.minimize_point(corner));
            if !self.contains(w.exponents()) || j.contains(&w) {
                return Err(Error::Consistency(format!(
                    "inclusion witness {w:?} does not verify"
                )));
            }
            return Ok(Some(w));
        }
        Ok(None)
    }

    fn lp_constraints(&self) -> Vec<Constraint> {
        self.halfspaces
            .iter()
            .map(|h| {
                Constraint::new(
                    h.normal
                        .iter()
                        .map(|&a| Rational::from_integer(a.into()))
                        .collect(),
                    Relation::Ge,
                    Rational::from_integer(h.bound.into()),
                )
            })
            .collect()
    }

    /// Decides `self ⊆ other` by minimizing each inequality of `other`
    /// over the lattice points of `self`. Returns a violating point when
    /// the inclusion fails.
    pub fn witness_outside_region(&self, other: &Region) -> Result<Option<Monomial>> {
        let cons = self.lp_constraints();
        for h in &other.halfspaces {
            let obj: Vec<Rational> = h
                .normal
                .iter()
                .map(|&a| Rational::from_integer(a.into()))
                .collect();
            let bound = Rational::from_integer(h.bound.into());
            match lp::minimize(&obj, &cons) {
                LpOutcome::Optimal { value, .. } if value.ceil() >= bound => continue,
                LpOutcome::Optimal { .. } => {}
                other => {
                    return Err(Error::Consistency(format!(
                        "unexpected linear program outcome {other:?}"
                    )))
                }
            }
            let found = lp::integer_minimize(&obj, &cons, lp::DEFAULT_NODE_BUDGET)?;
            let Some((value, x)) = found else {
                continue;
            };
            if value >= bound {
                continue;
            }
            let u: Option<Vec<u32>> = x.iter().map(|v| v.to_integer().to_u32()).collect();
            let u = u.ok_or_else(|| Error::Resource("witness exponent overflow".into()))?;
            let w = self.minimize_point(u);
            if !self.contains(&w) || other.contains(&w) {
                return Err(Error::Consistency("region witness does not verify".into()));
            }
            return Ok(Some(Monomial::new(w)));
        }
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::newton_polyhedron;

    fn ideal(exps: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(&exps.iter().map(|e| e.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn multiplier_generators_of_mixed_powers() {
        let np = newton_polyhedron(&ideal(&[&[2, 0], &[0, 3]])).unwrap();
        let gens = Region::multiplier(&np, 2).minimal_generators(8).unwrap();
        let exps: Vec<&[u32]> = gens.iter().map(Monomial::exponents).collect();
        assert_eq!(exps, vec![&[0, 4][..], &[1, 3], &[2, 1], &[3, 0]]);
    }

    #[test]
    fn cap_too_small() {
        let np = newton_polyhedron(&ideal(&[&[2, 0], &[0, 3]])).unwrap();
        assert!(matches!(
            Region::multiplier(&np, 2).minimal_generators(3),
            Err(Error::CapTooSmall {
                given: 3,
                needed: 4
            })
        ));
    }

    #[test]
    fn corner_test_matches_enumeration() {
        let j = ideal(&[&[3, 0, 1], &[1, 2, 0], &[0, 1, 3], &[2, 2, 2]]);
        let np = newton_polyhedron(&j).unwrap();
        for level in 1..=3 {
            for region in [Region::closure(&np, level), Region::multiplier(&np, level)] {
                let gens = region.minimal_generators(60).unwrap();
                let enumerated = gens.iter().find(|g| !j.contains(g)).is_none();
                let witness = region.witness_outside(&j).unwrap();
                assert_eq!(enumerated, witness.is_none(), "level {level}");
            }
        }
    }

    #[test]
    fn witness_for_square_powers() {
        // (x, y)^a escapes (x^a, y^a) at x^(a-1) y
        let j = ideal(&[&[3, 0], &[0, 3]]);
        let r = Region::new(
            2,
            vec![Halfspace {
                normal: vec![1, 1],
                bound: 3,
            }],
        );
        assert_eq!(
            r.witness_outside(&j).unwrap(),
            Some(Monomial::new(vec![2, 1]))
        );
    }

    #[test]
    fn region_inclusion() {
        let small = Region::new(
            2,
            vec![Halfspace {
                normal: vec![1, 1],
                bound: 4,
            }],
        );
        let big = Region::new(
            2,
            vec![Halfspace {
                normal: vec![3, 2],
                bound: 8,
            }],
        );
        assert_eq!(small.witness_outside_region(&big).unwrap(), None);
        let w = big.witness_outside_region(&small).unwrap().unwrap();
        assert!(big.contains(w.exponents()) && !small.contains(w.exponents()));
    }
}
