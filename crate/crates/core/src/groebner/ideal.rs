use std::collections::{BTreeSet, HashMap};
use std::sync::{Arc, RwLock};

use super::buchberger::{buchberger, normal_form, GbOptions, GroebnerBasis};
use crate::error::{Error, Result};
use crate::poly::{same_ring, Monomial, MonomialOrder, PolyRing, Polynomial};

/// An ideal given by generators, with a per-order cache of traced bases.
#[derive(Debug)]
pub struct Ideal {
    ring: Arc<PolyRing>,
    generators: Vec<Polynomial>,
    cache: RwLock<HashMap<MonomialOrder, Arc<GroebnerBasis>>>,
    max_pairs: usize,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        Ideal {
            ring: self.ring.clone(),
            generators: self.generators.clone(),
            cache: RwLock::new(self.cache.read().expect("cache lock").clone()),
            max_pairs: self.max_pairs,
        }
    }
}

impl PartialEq for Ideal {
    /// Equality of generator lists, not of ideals; use [`Ideal::same_ideal`]
    /// for the mathematical comparison.
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.generators == other.generators
    }
}

impl Ideal {
    pub fn new(ring: &Arc<PolyRing>, generators: Vec<Polynomial>) -> Result<Self> {
        for g in &generators {
            if !same_ring(g.ring(), ring) {
                return Err(Error::RingMismatch);
            }
        }
        Ok(Ideal {
            ring: ring.clone(),
            generators,
            cache: RwLock::new(HashMap::new()),
            max_pairs: super::buchberger::DEFAULT_PAIR_BUDGET,
        })
    }

    /// Sets the S-pair budget used by every basis computation on this ideal.
    pub fn with_pair_budget(mut self, max_pairs: usize) -> Self {
        self.max_pairs = max_pairs;
        self
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    fn nonzero_generators(&self) -> Vec<Polynomial> {
        self.generators
            .iter()
            .filter(|g| !g.is_zero())
            .cloned()
            .collect()
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.generators.iter().all(Polynomial::is_zero)
    }

    /// The traced reduced basis in `order`, computed once and cached.
    pub fn groebner_basis(&self, order: &MonomialOrder) -> Result<Arc<GroebnerBasis>> {
        if let Some(gb) = self.cache.read().expect("cache lock").get(order) {
            return Ok(gb.clone());
        }
        let opts = GbOptions {
            with_trace: true,
            max_pairs: self.max_pairs,
        };
        let gb = Arc::new(buchberger(&self.generators, order, &opts)?);
        self.cache
            .write()
            .expect("cache lock")
            .insert(order.clone(), gb.clone());
        Ok(gb)
    }

    pub fn is_unit(&self) -> Result<bool> {
        if self.is_zero_ideal() {
            return Ok(false);
        }
        Ok(self.groebner_basis(&MonomialOrder::GrevLex)?.is_unit())
    }

    /// Membership test by normal form. When `p` is a member, also returns
    /// cofactors `c_j` with `p = sum c_j * generators[j]`, verified by
    /// expansion.
    pub fn member(&self, p: &Polynomial) -> Result<(bool, Option<Vec<Polynomial>>)> {
        if !same_ring(p.ring(), &self.ring) {
            return Err(Error::RingMismatch);
        }
        if p.is_zero() {
            let zeros = vec![Polynomial::zero(&self.ring); self.generators.len()];
            return Ok((true, Some(zeros)));
        }
        if self.is_zero_ideal() {
            return Ok((false, None));
        }
        let gb = self.groebner_basis(&MonomialOrder::GrevLex)?;
        let div = normal_form(p, &gb)?;
        if !div.remainder.is_zero() {
            return Ok((false, None));
        }
        let cof = gb
            .lift(&div.quotients)
            .ok_or_else(|| Error::Consistency("traced basis lost its trace".into()))?;
        let mut acc = Polynomial::zero(&self.ring);
        for (c, f) in cof.iter().zip(&self.generators) {
            acc = &acc + &(c * f);
        }
        if &acc != p {
            return Err(Error::Consistency(
                "membership cofactors do not expand to p".into(),
            ));
        }
        Ok((true, Some(cof)))
    }

    pub fn contains(&self, p: &Polynomial) -> Result<bool> {
        if p.is_zero() {
            return Ok(true);
        }
        if self.is_zero_ideal() {
            return Ok(false);
        }
        let gb = self.groebner_basis(&MonomialOrder::GrevLex)?;
        Ok(normal_form(p, &gb)?.remainder.is_zero())
    }

    /// Radical membership through the Rabinowitsch trick: `p` is in the
    /// radical iff `1` lies in `I + (1 - y*p)` over a ring with a fresh `y`.
    pub fn radical_contains(&self, p: &Polynomial) -> Result<bool> {
        if !same_ring(p.ring(), &self.ring) {
            return Err(Error::RingMismatch);
        }
        if p.is_zero() {
            return Ok(true);
        }
        let y_name = self.ring.fresh_name("y");
        let ext = self.ring.append(&y_name)?;
        let n = self.ring.arity();
        let map: Vec<usize> = (0..n).collect();
        let y = Polynomial::variable(&ext, n)?;
        let mut gens: Vec<Polynomial> = self
            .nonzero_generators()
            .iter()
            .map(|g| g.embed(&ext, &map))
            .collect();
        gens.push(&Polynomial::one(&ext) - &(&y * &p.embed(&ext, &map)));
        let opts = GbOptions {
            with_trace: false,
            max_pairs: self.max_pairs,
        };
        Ok(buchberger(&gens, &MonomialOrder::GrevLex, &opts)?.is_unit())
    }

    /// `I^k`, generated by all k-fold products of generators, deduplicated.
    pub fn power(&self, k: u32) -> Result<Ideal> {
        if k < 1 {
            return Err(Error::InvalidInput("ideal power needs k >= 1".into()));
        }
        let gens = self.nonzero_generators();
        let mut out: Vec<Polynomial> = Vec::new();
        let mut seen: BTreeSet<String> = BTreeSet::new();
        let mut idx = vec![0usize; k as usize];
        if gens.is_empty() {
            return Ideal::new(&self.ring, vec![Polynomial::zero(&self.ring)]);
        }
        // multisets as non-decreasing index vectors
        loop {
            let mut prod = Polynomial::one(&self.ring);
            for &i in &idx {
                prod = &prod * &gens[i];
            }
            if seen.insert(prod.to_string()) {
                out.push(prod);
            }
            let mut pos = idx.len();
            while pos > 0 && idx[pos - 1] == gens.len() - 1 {
                pos -= 1;
            }
            if pos == 0 {
                break;
            }
            let v = idx[pos - 1] + 1;
            for slot in &mut idx[pos - 1..] {
                *slot = v;
            }
        }
        Ideal::new(&self.ring, out).map(|i| i.with_pair_budget(self.max_pairs))
    }

    /// `I ∩ J` by eliminating `t` from `t*I + (1 - t)*J`.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        if self.is_zero_ideal() || other.is_zero_ideal() {
            return Ideal::new(&self.ring, vec![Polynomial::zero(&self.ring)]);
        }
        let t_name = self.ring.fresh_name("t");
        let ext = self.ring.prepend(&t_name)?;
        let n = self.ring.arity();
        let map: Vec<usize> = (1..=n).collect();
        let t = Polynomial::variable(&ext, 0)?;
        let one_minus_t = &Polynomial::one(&ext) - &t;
        let mut gens = Vec::new();
        for g in self.nonzero_generators() {
            gens.push(&t * &g.embed(&ext, &map));
        }
        for g in other.nonzero_generators() {
            gens.push(&one_minus_t * &g.embed(&ext, &map));
        }
        let opts = GbOptions {
            with_trace: false,
            max_pairs: self.max_pairs,
        };
        let gb = buchberger(&gens, &MonomialOrder::Elimination(1), &opts)?;
        let kept: Vec<Polynomial> = gb
            .basis
            .iter()
            .filter(|g| g.monomials().all(|m| m.exponents()[0] == 0))
            .map(|g| g.dehomogenize_into_ring(&self.ring))
            .collect();
        let kept = if kept.is_empty() {
            vec![Polynomial::zero(&self.ring)]
        } else {
            kept
        };
        Ideal::new(&self.ring, kept).map(|i| i.with_pair_budget(self.max_pairs))
    }

    /// True when both ideals contain each other's generators.
    pub fn same_ideal(&self, other: &Ideal) -> Result<bool> {
        for g in other.generators() {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        for g in self.generators() {
            if !other.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// True when every generator is a single term.
    pub fn is_monomial(&self) -> bool {
        self.generators.iter().all(|g| g.len() <= 1)
    }

    /// Exponent vectors of the generators, when the ideal is monomial.
    pub fn monomial_generators(&self) -> Option<Vec<Monomial>> {
        if !self.is_monomial() {
            return None;
        }
        Some(
            self.generators
                .iter()
                .filter_map(|g| g.monomials().next().cloned())
                .collect(),
        )
    }
}

impl Polynomial {
    /// Drops the first variable, which must not occur.
    pub(crate) fn dehomogenize_into_ring(&self, ring: &Arc<PolyRing>) -> Polynomial {
        debug_assert!(self.monomials().all(|m| m.exponents()[0] == 0));
        self.dehomogenize_into(ring)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;

    fn ring() -> Arc<PolyRing> {
        PolyRing::new(&["x", "y"]).unwrap()
    }

    fn ideal(r: &Arc<PolyRing>, gens: &[&str]) -> Ideal {
        Ideal::new(
            r,
            gens.iter()
                .map(|g| parse_polynomial(g, r).unwrap())
                .collect(),
        )
        .unwrap()
    }

    fn p(r: &Arc<PolyRing>, s: &str) -> Polynomial {
        parse_polynomial(s, r).unwrap()
    }

    #[test]
    fn membership_examples() {
        let r = ring();
        let i = ideal(&r, &["x^2", "y^2"]);
        assert!(!i.member(&p(&r, "x*y")).unwrap().0);
        let (yes, cof) = i.member(&p(&r, "x^3*y")).unwrap();
        assert!(yes);
        let cof = cof.unwrap();
        assert_eq!(cof[0], p(&r, "x*y"));
        assert!(cof[1].is_zero());
        assert!(i.member(&p(&r, "x^2*y^2")).unwrap().0);
    }

    #[test]
    fn radical_membership() {
        let r = ring();
        let i = ideal(&r, &["x^2"]);
        assert!(i.radical_contains(&p(&r, "x")).unwrap());
        assert!(!i.contains(&p(&r, "x")).unwrap());
        let j = ideal(&r, &["x"]);
        assert!(!j.radical_contains(&p(&r, "y")).unwrap());
    }

    #[test]
    fn powers() {
        let r = ring();
        let m = ideal(&r, &["x", "y"]);
        let m2 = m.power(2).unwrap();
        let strs: Vec<String> = m2.generators().iter().map(|g| g.to_string()).collect();
        assert_eq!(strs, vec!["x^2", "x*y", "y^2"]);
        assert_eq!(m.power(1).unwrap().generators(), m.generators());
        let j = ideal(&r, &["x^2", "y^2"]).power(2).unwrap();
        let strs: Vec<String> = j.generators().iter().map(|g| g.to_string()).collect();
        assert_eq!(strs, vec!["x^4", "x^2*y^2", "y^4"]);
        assert!(m.power(0).is_err());
    }

    #[test]
    fn intersections() {
        let r = ring();
        let xy = ideal(&r, &["x"]).intersect(&ideal(&r, &["y"])).unwrap();
        assert!(xy.same_ideal(&ideal(&r, &["x*y"])).unwrap());
        let xx = ideal(&r, &["x"]).intersect(&ideal(&r, &["x"])).unwrap();
        assert!(xx.same_ideal(&ideal(&r, &["x"])).unwrap());
    }
}
