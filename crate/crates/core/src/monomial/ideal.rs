use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::poly::{minimalize, same_ring, Monomial, PolyRing, Polynomial};

/// A monomial ideal given by its minimal generators, in decreasing lex
/// order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    ring: Arc<PolyRing>,
    generators: Vec<Monomial>,
}

/// An irreducible monomial ideal `(x_i^{b_i} : i in support)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct IrreducibleComponent {
    pub powers: Vec<(usize, u32)>,
}

impl MonomialIdeal {
    /// Builds the ideal generated by `generators`, minimalizing them.
    pub fn new(ring: &Arc<PolyRing>, generators: Vec<Monomial>) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::InvalidInput("empty generator list".into()));
        }
        for g in &generators {
            if g.arity() != ring.arity() {
                return Err(Error::InvalidInput(format!(
                    "monomial of arity {} in a ring of arity {}",
                    g.arity(),
                    ring.arity()
                )));
            }
        }
        let mut generators = minimalize(generators);
        generators.reverse();
        Ok(MonomialIdeal {
            ring: ring.clone(),
            generators,
        })
    }

    /// Reads a monomial ideal off polynomial generators. Coefficients are
    /// ignored; a generator with more than one term is rejected.
    pub fn from_polynomials(gens: &[Polynomial]) -> Result<Self> {
        let Some(first) = gens.first() else {
            return Err(Error::InvalidInput("empty generator list".into()));
        };
        let ring = first.ring().clone();
        let mut monos = Vec::with_capacity(gens.len());
        for g in gens {
            if !same_ring(g.ring(), &ring) {
                return Err(Error::RingMismatch);
            }
            if !g.is_monomial() {
                return Err(Error::NotMonomial(g.to_string()));
            }
            monos.push(g.monomials().next().expect("monomial").clone());
        }
        Self::new(&ring, monos)
    }

    /// Builds from exponent vectors, in variables `x1, ..., xn`.
    pub fn from_exponents(exps: &[Vec<u32>]) -> Result<Self> {
        let n = exps.first().map_or(0, Vec::len);
        let ring = PolyRing::with_arity(n)?;
        Self::new(&ring, exps.iter().cloned().map(Monomial::new).collect())
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn arity(&self) -> usize {
        self.ring.arity()
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn is_unit(&self) -> bool {
        self.generators.iter().any(Monomial::is_one)
    }

    pub fn max_degree(&self) -> u32 {
        self.generators
            .iter()
            .map(Monomial::degree)
            .max()
            .unwrap_or(0)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.generators.iter().any(|g| g.divides(m))
    }

    /// First generator dividing `m`, if any.
    pub fn divisor_of(&self, m: &Monomial) -> Option<&Monomial> {
        self.generators.iter().find(|g| g.divides(m))
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch);
        }
        let prods = self
            .generators
            .iter()
            .flat_map(|a| other.generators.iter().map(move |b| a.mul(b)));
        Self::new(&self.ring, prods.collect())
    }

    pub fn power(&self, k: u32) -> MonomialIdeal {
        let mut acc = MonomialIdeal {
            ring: self.ring.clone(),
            generators: vec![Monomial::one(self.arity())],
        };
        for _ in 0..k {
            acc = acc.product(self).expect("same ring");
        }
        acc
    }

    /// The radical: squarefree supports of the generators.
    pub fn radical(&self) -> MonomialIdeal {
        let gens = self.generators.iter().map(Monomial::radical).collect();
        MonomialIdeal::new(&self.ring, gens).expect("non-empty")
    }

    /// Every generator of `other` lies in `self`.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.generators.iter().all(|g| self.contains(g))
    }

    pub fn to_polynomials(&self) -> Vec<Polynomial> {
        self.generators
            .iter()
            .map(|g| Polynomial::monomial(&self.ring, g.clone()))
            .collect()
    }

    /// The irredundant decomposition into irreducible monomial ideals.
    /// The unit ideal has no components.
    pub fn irreducible_components(&self) -> Vec<IrreducibleComponent> {
        let mut out = Vec::new();
        split(self.generators.clone(), &mut out);
        out.sort();
        out.dedup();
        // drop components containing another one
        let keep: Vec<bool> = (0..out.len())
            .map(|i| !(0..out.len()).any(|j| j != i && out[i].contains_component(&out[j])))
            .collect();
        out.into_iter()
            .zip(keep)
            .filter_map(|(c, k)| k.then_some(c))
            .collect()
    }

    /// Applies `T_index = 1`, giving an ideal in `ring` (which lacks that
    /// variable).
    pub fn dehomogenize_at(&self, index: usize, ring: &Arc<PolyRing>) -> Result<MonomialIdeal> {
        if index >= self.arity() || ring.arity() + 1 != self.arity() {
            return Err(Error::VariableIndex {
                index,
                arity: self.arity(),
            });
        }
        let gens = self
            .generators
            .iter()
            .map(|g| {
                let mut e = g.exponents().to_vec();
                e.remove(index);
                Monomial::new(e)
            })
            .collect();
        MonomialIdeal::new(ring, gens)
    }
}

fn split(gens: Vec<Monomial>, out: &mut Vec<IrreducibleComponent>) {
    if gens.iter().any(Monomial::is_one) {
        return;
    }
    match gens.iter().find(|g| g.support().len() > 1) {
        None => {
            let mut powers: Vec<(usize, u32)> = gens
                .iter()
                .map(|g| {
                    let i = g.support()[0];
                    (i, g.exponents()[i])
                })
                .collect();
            powers.sort();
            out.push(IrreducibleComponent { powers });
        }
        Some(g) => {
            // J = (J, x_i^e) ∩ (J, g / x_i^e)
            let i = g.support()[0];
            let e = g.exponents()[i];
            let pure = Monomial::variable(g.arity(), i).pow(e);
            let rest = pure.quotient_of(g).expect("divides");
            let mut left = gens.clone();
            left.push(pure);
            let mut right = gens;
            right.push(rest);
            split(minimalize(left), out);
            split(minimalize(right), out);
        }
    }
}

impl IrreducibleComponent {
    pub fn contains(&self, m: &Monomial) -> bool {
        self.powers.iter().any(|&(i, b)| m.exponents()[i] >= b)
    }

    /// Every generator of `other` lies in `self`.
    fn contains_component(&self, other: &IrreducibleComponent) -> bool {
        other
            .powers
            .iter()
            .all(|&(j, c)| self.powers.iter().any(|&(i, b)| i == j && b <= c))
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = self.ring.names();
        f.write_str("(")?;
        for (k, g) in self.generators.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", g.display_with(names))?;
        }
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(exps: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(&exps.iter().map(|e| e.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn minimal_generators_form_antichain() {
        let j = ideal(&[&[2, 0], &[3, 1], &[0, 2], &[2, 0]]);
        assert_eq!(j.generators().len(), 2);
        assert_eq!(j.to_string(), "(x1^2, x2^2)");
    }

    #[test]
    fn radicals() {
        assert_eq!(
            ideal(&[&[2, 0], &[0, 3]]).radical(),
            ideal(&[&[1, 0], &[0, 1]])
        );
        assert_eq!(ideal(&[&[2, 1]]).radical(), ideal(&[&[1, 1]]));
        assert_eq!(
            ideal(&[&[1, 0], &[0, 2]]).radical(),
            ideal(&[&[1, 0], &[0, 1]])
        );
    }

    #[test]
    fn irreducible_decomposition_recovers_ideal() {
        // (x^2, xy, y^3) = (x, y^3) ∩ (x^2, y)
        let j = ideal(&[&[2, 0], &[1, 1], &[0, 3]]);
        let comps = j.irreducible_components();
        assert_eq!(comps.len(), 2);
        for a in 0..6 {
            for b in 0..6 {
                let m = Monomial::new(vec![a, b]);
                assert_eq!(j.contains(&m), comps.iter().all(|c| c.contains(&m)));
            }
        }
        assert!(ideal(&[&[0, 0]]).irreducible_components().is_empty());
    }

    #[test]
    fn powers() {
        let j = ideal(&[&[1, 0], &[0, 1]]);
        assert_eq!(j.power(3).generators().len(), 4);
        assert_eq!(j.power(0).generators(), &[Monomial::one(2)]);
    }
}
