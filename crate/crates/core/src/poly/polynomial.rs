use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use super::{Monomial, MonomialOrder, PolyRing, Rational};
use crate::error::{Error, Result};

/// Exact multivariate polynomial over `Q`.
///
/// Terms are kept in a map from monomial to non-zero coefficient. The map's
/// key order is only a storage order; anything that depends on a term order
/// takes a [`MonomialOrder`] argument.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: Arc<PolyRing>,
    terms: BTreeMap<Monomial, Rational>,
}

/// Which ring operation [`Polynomial::arith`] applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

pub(crate) fn same_ring(a: &Arc<PolyRing>, b: &Arc<PolyRing>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl Polynomial {
    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: &Arc<PolyRing>) -> Self {
        Self::constant(ring, Rational::one())
    }

    pub fn constant(ring: &Arc<PolyRing>, c: Rational) -> Self {
        Self::term(ring, Monomial::one(ring.arity()), c)
    }

    pub fn term(ring: &Arc<PolyRing>, mono: Monomial, c: Rational) -> Self {
        assert_eq!(
            mono.arity(),
            ring.arity(),
            "monomial arity does not match ring"
        );
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(mono, c);
        }
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn monomial(ring: &Arc<PolyRing>, mono: Monomial) -> Self {
        Self::term(ring, mono, Rational::one())
    }

    pub fn variable(ring: &Arc<PolyRing>, index: usize) -> Result<Self> {
        if index >= ring.arity() {
            return Err(Error::VariableIndex {
                index,
                arity: ring.arity(),
            });
        }
        Ok(Self::monomial(
            ring,
            Monomial::variable(ring.arity(), index),
        ))
    }

    /// Builds a polynomial from (monomial, coefficient) pairs, summing
    /// repeated monomials and dropping zeros.
    pub fn from_terms(
        ring: &Arc<PolyRing>,
        terms: impl IntoIterator<Item = (Monomial, Rational)>,
    ) -> Self {
        let mut p = Self::zero(ring);
        for (m, c) in terms {
            assert_eq!(
                m.arity(),
                ring.arity(),
                "monomial arity does not match ring"
            );
            p.add_term(m, c);
        }
        p
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .is_some_and(|(m, c)| m.is_one() && c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// True when the polynomial has exactly one term.
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in storage order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.keys()
    }

    /// Terms sorted from largest to smallest under `order`.
    pub fn sorted_terms(&self, order: &MonomialOrder) -> Vec<(&Monomial, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| order.compare(b.0, a.0));
        v
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().max_by(|a, b| order.compare(a.0, b.0))
    }

    pub fn leading_monomial(&self, order: &MonomialOrder) -> Option<&Monomial> {
        self.leading_term(order).map(|(m, _)| m)
    }

    /// Total degree; the zero polynomial reports 0.
    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// Per-variable maximum exponent; the zero polynomial gives the zero vector.
    pub fn multidegree(&self) -> Vec<u32> {
        let mut out = vec![0; self.ring.arity()];
        for m in self.terms.keys() {
            for (o, e) in out.iter_mut().zip(m.exponents()) {
                *o = (*o).max(*e);
            }
        }
        out
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    /// Exact `p op q`; fails when the operands live in different rings.
    pub fn arith(&self, other: &Polynomial, op: ArithOp) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(match op {
            ArithOp::Add => self.add_unchecked(other, false),
            ArithOp::Sub => self.add_unchecked(other, true),
            ArithOp::Mul => self.mul_unchecked(other),
        })
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.arith(other, ArithOp::Add)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.arith(other, ArithOp::Sub)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.arith(other, ArithOp::Mul)
    }

    fn add_unchecked(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            let c = if negate { -c.clone() } else { c.clone() };
            out.add_term(m.clone(), c);
        }
        out
    }

    fn mul_unchecked(&self, other: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero(&self.ring);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    /// `c * m * self`.
    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(k, x)| (k.mul(m), x * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        for _ in 0..k {
            acc = acc.mul_unchecked(self);
        }
        acc
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self, order: &MonomialOrder) -> Polynomial {
        match self.leading_term(order) {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }

    /// Formal partial derivative with respect to variable `index`.
    pub fn partial_derivative(&self, index: usize) -> Result<Polynomial> {
        let arity = self.ring.arity();
        if index >= arity {
            return Err(Error::VariableIndex { index, arity });
        }
        let mut out = Polynomial::zero(&self.ring);
        for (m, c) in &self.terms {
            let e = m.exponents()[index];
            if e == 0 {
                continue;
            }
            let mut exps = m.exponents().to_vec();
            exps[index] -= 1;
            out.add_term(Monomial::new(exps), c * Rational::from_integer(e.into()));
        }
        Ok(out)
    }

    /// Multiplies every term by `T0^(target - deg)` in the ring with a new
    /// first variable (named `T0` unless that name is taken).
    pub fn homogenize(&self, target: u32) -> Result<Polynomial> {
        let degree = self.total_degree();
        if target < degree {
            return Err(Error::DegreeTooSmall { target, degree });
        }
        let ring = self.ring.prepend(&self.ring.fresh_name("T0"))?;
        Ok(self.homogenize_into(&ring, target))
    }

    /// Homogenizes into a ring already known to be `T0` followed by this
    /// ring's variables. Callers guarantee `target >= deg`.
    pub(crate) fn homogenize_into(&self, ring: &Arc<PolyRing>, target: u32) -> Polynomial {
        debug_assert_eq!(ring.arity(), self.ring.arity() + 1);
        let terms = self.terms.iter().map(|(m, c)| {
            let mut e = Vec::with_capacity(ring.arity());
            e.push(target - m.degree());
            e.extend_from_slice(m.exponents());
            (Monomial::new(e), c.clone())
        });
        Polynomial::from_terms(ring, terms)
    }

    /// Sets the first variable to 1 and drops it from the ring.
    pub fn dehomogenize(&self) -> Result<Polynomial> {
        if self.ring.arity() < 2 {
            return Err(Error::InvalidRing(
                "dehomogenizing needs at least two variables".into(),
            ));
        }
        let ring = self.ring.drop_first()?;
        Ok(self.dehomogenize_into(&ring))
    }

    pub(crate) fn dehomogenize_into(&self, ring: &Arc<PolyRing>) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (Monomial::new(m.exponents()[1..].to_vec()), c.clone()));
        Polynomial::from_terms(ring, terms)
    }

    /// Substitutes `x_index := 1` and drops that variable.
    pub fn dehomogenize_at(&self, index: usize, ring: &Arc<PolyRing>) -> Result<Polynomial> {
        if index >= self.ring.arity() {
            return Err(Error::VariableIndex {
                index,
                arity: self.ring.arity(),
            });
        }
        let terms = self.terms.iter().map(|(m, c)| {
            let mut e = m.exponents().to_vec();
            e.remove(index);
            (Monomial::new(e), c.clone())
        });
        Ok(Polynomial::from_terms(ring, terms))
    }

    /// Re-expresses the polynomial in `target`, sending variable `i` to
    /// variable `map[i]`.
    pub fn embed(&self, target: &Arc<PolyRing>, map: &[usize]) -> Polynomial {
        assert_eq!(map.len(), self.ring.arity());
        let terms = self.terms.iter().map(|(m, c)| {
            let mut e = vec![0; target.arity()];
            for (i, &x) in m.exponents().iter().enumerate() {
                e[map[i]] += x;
            }
            (Monomial::new(e), c.clone())
        });
        Polynomial::from_terms(target, terms)
    }

    /// Sets the variables listed in `zeroed` to zero.
    pub fn restrict_to_zero(&self, zeroed: &[usize]) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| zeroed.iter().all(|&i| m.exponents()[i] == 0))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Textual form with terms in descending order under `order`.
    pub fn to_string_with(&self, order: &MonomialOrder) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let names = self.ring.names();
        let mut s = String::new();
        for (i, (m, c)) in self.sorted_terms(order).into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            if m.is_one() {
                s.push_str(&abs.to_string());
            } else if abs.is_one() {
                s.push_str(&m.display_with(names).to_string());
            } else {
                s.push_str(&format!("{}*{}", abs, m.display_with(names)));
            }
        }
        s
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_with(&MonomialOrder::GrevLex))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

// Operator impls panic on a ring mismatch; use `arith` for the fallible form.
impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("ring mismatch in +")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("ring mismatch in -")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("ring mismatch in *")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Rational::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    fn ring() -> Arc<PolyRing> {
        PolyRing::new(&["x", "y"]).unwrap()
    }

    fn x(r: &Arc<PolyRing>) -> Polynomial {
        Polynomial::variable(r, 0).unwrap()
    }

    fn y(r: &Arc<PolyRing>) -> Polynomial {
        Polynomial::variable(r, 1).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let r = ring();
        let p = &(&x(&r) + &y(&r)) * &(&x(&r) - &y(&r));
        assert_eq!(p.to_string(), "x^2 - y^2");
        let q = &(&x(&r).pow(2) - &y(&r)) * &(&x(&r).pow(2) + &y(&r));
        assert_eq!(q.to_string(), "x^4 - y^2");
        assert_eq!(&p + &Polynomial::zero(&r), p);
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let r = ring();
        let s = PolyRing::new(&["x", "z"]).unwrap();
        assert_eq!(
            x(&r).arith(&x(&s), ArithOp::Add).unwrap_err(),
            Error::RingMismatch
        );
        // structurally equal rings are the same ring
        let r2 = PolyRing::new(&["x", "y"]).unwrap();
        assert!(x(&r).checked_mul(&y(&r2)).is_ok());
    }

    #[test]
    fn derivatives() {
        let r = ring();
        let p = &x(&r).pow(3) * &y(&r);
        assert_eq!(p.partial_derivative(0).unwrap().to_string(), "3*x^2*y");
        assert!(x(&r).pow(3).partial_derivative(1).unwrap().is_zero());
        let q = &x(&r).pow(2) + &(&x(&r) * &y(&r)).scale(&rat(2, 1));
        assert_eq!(q.partial_derivative(0).unwrap().to_string(), "2*x + 2*y");
        assert!(matches!(
            p.partial_derivative(2),
            Err(Error::VariableIndex { index: 2, arity: 2 })
        ));
    }

    #[test]
    fn homogenize_examples() {
        let r1 = PolyRing::new(&["x"]).unwrap();
        let p = &x(&r1) + &Polynomial::one(&r1);
        assert_eq!(p.homogenize(1).unwrap().to_string(), "T0 + x");

        let r = ring();
        let q = &x(&r).pow(2) + &y(&r);
        let h = q.homogenize(2).unwrap();
        assert_eq!(h.ring().names(), &["T0", "x", "y"]);
        assert_eq!(h.to_string(), "x^2 + T0*y");
        assert_eq!(h.dehomogenize().unwrap(), q);

        let one = Polynomial::one(&r).homogenize(3).unwrap();
        assert_eq!(one.to_string(), "T0^3");
        assert!(one.dehomogenize().unwrap().is_one());

        assert!(matches!(
            q.homogenize(1),
            Err(Error::DegreeTooSmall {
                target: 1,
                degree: 2
            })
        ));
    }

    #[test]
    fn dehomogenize_substitutes() {
        let r = PolyRing::new(&["T0", "x"]).unwrap();
        let t = Polynomial::variable(&r, 0).unwrap();
        let xx = Polynomial::variable(&r, 1).unwrap();
        let p = &(&t * &xx) - &t.pow(2);
        assert_eq!(p.dehomogenize().unwrap().to_string(), "x - 1");
    }

    #[test]
    fn multidegree_convention() {
        let r = ring();
        assert_eq!((&x(&r).pow(2) * &y(&r)).multidegree(), vec![2, 1]);
        assert_eq!((&x(&r).pow(3) + &y(&r).pow(5)).multidegree(), vec![3, 5]);
        assert_eq!(Polynomial::zero(&r).multidegree(), vec![0, 0]);
    }
}
