//! Monomial ideals and their convex geometry.
//!
//! For a monomial ideal `J` the normalized blow-up is described by the
//! Newton polyhedron `NP(J)`: each bounded facet `<a, u> >= b` is a Rees
//! valuation, centred on the coordinate subspace `{x_i = 0 : a_i > 0}`
//! with coefficient `b`. From it:
//!
//! * `x^u` is integral over `J^l` iff `<a, u> >= l b` on every facet;
//! * `x^u` lies in the multiplier-type ideal `I_l` iff
//!   `<a, u + 1> > l b` on every bounded facet.
//!
//! Inclusions between these ideals are decided exactly, either against an
//! irreducible decomposition or by integer programming, so no generator
//! enumeration is needed for large coefficients.

mod checks;
mod ideal;
mod newton;
mod region;

use std::collections::BTreeMap;

use num_integer::Integer;
use num_traits::{One, ToPrimitive};

pub use checks::{
    check_brianconskoda, check_degree_bound, check_local_nullstellensatz, check_skoda,
    projective_radical_power_exponent, radical_power_exponent, DegreeBoundReport, ProjectiveDatum,
};
pub use ideal::{IrreducibleComponent, MonomialIdeal};
pub use newton::{
    distinguished_data, newton_polyhedron, DistinguishedDatum, FacetDatum, NewtonPolyhedron,
    MAX_ARITY,
};
pub use region::{Halfspace, Region};

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::lp::{self, Constraint, LpOutcome, Relation};
use crate::poly::{Monomial, Polynomial, Rational};

/// `I_level` of a monomial ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplierIdealQuery {
    pub ideal: MonomialIdeal,
    pub level: u32,
}

impl MultiplierIdealQuery {
    pub fn new(ideal: MonomialIdeal, level: u32) -> Result<Self> {
        if level == 0 {
            return Err(Error::InvalidInput("multiplier level must be >= 1".into()));
        }
        Ok(MultiplierIdealQuery { ideal, level })
    }

    /// Default exponent cap `level * (max generator degree) + n`.
    pub fn default_cap(&self) -> u32 {
        self.level * self.ideal.max_degree() + self.ideal.arity() as u32
    }
}

fn check_arity(u: &Monomial, j: &MonomialIdeal) -> Result<()> {
    if u.arity() != j.arity() {
        return Err(Error::InvalidInput(format!(
            "monomial of arity {} tested against an ideal of arity {}",
            u.arity(),
            j.arity()
        )));
    }
    Ok(())
}

/// Facet test for `u` in the integral closure of `J^level`.
pub fn integral_closure_member(u: &Monomial, j: &MonomialIdeal, level: u32) -> Result<bool> {
    check_arity(u, j)?;
    if level == 0 {
        return Err(Error::InvalidInput("level must be >= 1".into()));
    }
    let np = newton_polyhedron(j)?;
    Ok(np.contains_scaled(u.exponents(), level as u64))
}

/// Certificate that `x^{k u}` is divisible by a product of `k * level`
/// generators: `counts[g]` copies of generator `g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerWitness {
    pub k: u64,
    pub counts: Vec<u64>,
}

/// Power oracle for integral closure: looks for `k >= 1` with
/// `x^{k u} in J^{k level}`, independently of the facet description.
///
/// Solves `max sum c_g` subject to `sum_g c_g exp(g) <= u`, `c >= 0` over
/// `Q`. An optimum below `level` rules out every `k`; otherwise the
/// optimal vertex scaled by its common denominator `k` gives an explicit
/// product, which is checked by monomial division. By Cramer's rule `k`
/// is at most the largest minor of the exponent matrix.
pub fn closure_power_witness(
    u: &Monomial,
    j: &MonomialIdeal,
    level: u32,
) -> Result<Option<PowerWitness>> {
    check_arity(u, j)?;
    let gens = j.generators();
    if let Some(unit) = gens.iter().position(Monomial::is_one) {
        let mut counts = vec![0; gens.len()];
        counts[unit] = level as u64;
        return Ok(Some(PowerWitness { k: 1, counts }));
    }
    let n = j.arity();
    let cons: Vec<Constraint> = (0..n)
        .map(|i| {
            Constraint::new(
                gens.iter()
                    .map(|g| Rational::from_integer(g.exponents()[i].into()))
                    .collect(),
                Relation::Le,
                Rational::from_integer(u.exponents()[i].into()),
            )
        })
        .collect();
    let obj = vec![Rational::one(); gens.len()];
    let (value, x) = match lp::maximize(&obj, &cons) {
        LpOutcome::Optimal { value, x } => (value, x),
        other => {
            return Err(Error::Consistency(format!(
                "power oracle program ended with {other:?}"
            )))
        }
    };
    if value < Rational::from_integer(level.into()) {
        return Ok(None);
    }
    let k = x
        .iter()
        .fold(num_bigint::BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let kq = Rational::from_integer(k.clone());
    let mut counts: Vec<u64> = x
        .iter()
        .map(|q| (q * &kq).to_integer().to_u64())
        .collect::<Option<_>>()
        .ok_or_else(|| Error::Resource("power oracle exponent overflow".into()))?;
    let k = k
        .to_u64()
        .ok_or_else(|| Error::Resource("power oracle exponent overflow".into()))?;
    // drop surplus factors so exactly k * level remain
    let mut surplus = counts.iter().sum::<u64>() - k * level as u64;
    for c in counts.iter_mut().rev() {
        let t = surplus.min(*c);
        *c -= t;
        surplus -= t;
    }
    let mut product = Monomial::one(n);
    for (g, &c) in gens.iter().zip(&counts) {
        product = product.mul(&g.pow(c as u32));
    }
    if !product.divides(&u.pow(k as u32)) {
        return Err(Error::Consistency(
            "power oracle product does not divide".into(),
        ));
    }
    Ok(Some(PowerWitness { k, counts }))
}

/// Interior test for `u` in `I_level`.
pub fn multiplier_ideal_member(u: &Monomial, q: &MultiplierIdealQuery) -> Result<bool> {
    check_arity(u, &q.ideal)?;
    let np = newton_polyhedron(&q.ideal)?;
    Ok(Region::multiplier(&np, q.level as u64).contains(u.exponents()))
}

/// Minimal generators of `I_level`, complete when every generator
/// exponent is at most `exponent_cap`.
pub fn multiplier_ideal_generators(
    q: &MultiplierIdealQuery,
    exponent_cap: u32,
) -> Result<Vec<Monomial>> {
    let np = newton_polyhedron(&q.ideal)?;
    Region::multiplier(&np, q.level as u64).minimal_generators(exponent_cap)
}

/// Minimal generators of `∩_j I_{Z_j}^{<multiplier * r_j>}` in `arity`
/// variables.
pub fn symbolic_intersection_generators(
    arity: usize,
    data: &[DistinguishedDatum],
    multiplier: u32,
    exponent_cap: u32,
) -> Result<Vec<Monomial>> {
    for d in data {
        if d.arity() != arity || d.support.iter().any(|&i| i >= arity) {
            return Err(Error::InvalidInput("datum does not fit the arity".into()));
        }
    }
    Region::symbolic(arity, data, multiplier as u64).minimal_generators(exponent_cap)
}

/// Membership in the `r`-th symbolic power of the coordinate subspace
/// `{x_i = 0 : i in support}`: every term has order at least `r` in the
/// support variables.
pub fn symbolic_power_member(p: &Polynomial, support: &[usize], r: u32) -> bool {
    p.monomials().all(|m| m.partial_degree(support) >= r)
}

/// The same membership decided by differentiation: every partial
/// derivative of order `< r` in the support variables must reduce to zero
/// modulo `(x_i : i in support)`.
pub fn symbolic_power_member_by_derivatives(
    p: &Polynomial,
    support: &[usize],
    r: u32,
) -> Result<bool> {
    let ring = p.ring();
    for &i in support {
        if i >= ring.arity() {
            return Err(Error::VariableIndex {
                index: i,
                arity: ring.arity(),
            });
        }
    }
    if r == 0 {
        return Ok(true);
    }
    if support.is_empty() {
        return Ok(p.is_zero());
    }
    let vars = support
        .iter()
        .map(|&i| Polynomial::variable(ring, i))
        .collect::<Result<Vec<_>>>()?;
    let center = Ideal::new(ring, vars)?;
    // derivatives keyed by multi-index over the support
    let mut layer: BTreeMap<Vec<u32>, Polynomial> = BTreeMap::new();
    layer.insert(vec![0; support.len()], p.clone());
    for order in 0..r {
        for d in layer.values() {
            if !d.is_zero() && !center.contains(d)? {
                return Ok(false);
            }
        }
        if order + 1 == r {
            break;
        }
        let mut next = BTreeMap::new();
        for (alpha, d) in &layer {
            for (k, &i) in support.iter().enumerate() {
                let mut beta = alpha.clone();
                beta[k] += 1;
                if let std::collections::btree_map::Entry::Vacant(slot) = next.entry(beta) {
                    slot.insert(d.partial_derivative(i)?);
                }
            }
        }
        layer = next;
    }
    Ok(true)
}

/// The radical of a monomial ideal, by support reduction.
pub fn monomial_radical(j: &MonomialIdeal) -> MonomialIdeal {
    j.radical()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;
    use crate::poly::PolyRing;

    fn ideal(exps: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(&exps.iter().map(|e| e.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn closure_membership() {
        let j = ideal(&[&[2, 0], &[0, 2]]);
        assert!(integral_closure_member(&m(&[1, 1]), &j, 1).unwrap());
        assert!(!integral_closure_member(&m(&[1, 0]), &j, 1).unwrap());
        let w = closure_power_witness(&m(&[1, 1]), &j, 1).unwrap().unwrap();
        assert_eq!(w.k, 2);
        assert!(closure_power_witness(&m(&[1, 0]), &j, 1).unwrap().is_none());
    }

    #[test]
    fn multiplier_membership() {
        let q = MultiplierIdealQuery::new(ideal(&[&[2, 0], &[0, 3]]), 2).unwrap();
        assert!(multiplier_ideal_member(&m(&[0, 4]), &q).unwrap());
        assert!(!multiplier_ideal_member(&m(&[1, 2]), &q).unwrap());
        let q1 = MultiplierIdealQuery::new(ideal(&[&[2, 0], &[0, 3]]), 1).unwrap();
        assert!(!multiplier_ideal_member(&m(&[0, 0]), &q1).unwrap());
        for l in 1..4 {
            let q = MultiplierIdealQuery::new(ideal(&[&[1]]), l).unwrap();
            assert_eq!(
                multiplier_ideal_generators(&q, q.default_cap()).unwrap(),
                vec![m(&[l])]
            );
        }
    }

    #[test]
    fn symbolic_generators() {
        let data = distinguished_data(&ideal(&[&[2, 0], &[0, 2]])).unwrap();
        let gens = symbolic_intersection_generators(2, &data, 2, 4).unwrap();
        assert_eq!(gens.len(), 5);
        assert!(gens.iter().all(|g| g.degree() == 4));
        assert_eq!(
            symbolic_intersection_generators(2, &data, 0, 4).unwrap(),
            vec![Monomial::one(2)]
        );
        let data = distinguished_data(&ideal(&[&[2, 0], &[0, 3]])).unwrap();
        let gens = symbolic_intersection_generators(2, &data, 2, 12).unwrap();
        assert_eq!(gens.len(), 13);
    }

    #[test]
    fn symbolic_powers_agree() {
        let r = PolyRing::new(&["x", "y"]).unwrap();
        let p = |s: &str| parse_polynomial(s, &r).unwrap();
        let cases = [
            ("x*y", vec![0, 1], 2, true),
            ("x + y^2", vec![0, 1], 2, false),
            ("x^2*y", vec![0], 3, false),
            ("x^2*y", vec![0], 2, true),
        ];
        for (f, s, order, expected) in cases {
            assert_eq!(symbolic_power_member(&p(f), &s, order), expected, "{f}");
            assert_eq!(
                symbolic_power_member_by_derivatives(&p(f), &s, order).unwrap(),
                expected,
                "{f}"
            );
        }
    }
}
