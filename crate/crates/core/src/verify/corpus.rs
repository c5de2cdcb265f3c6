//! Seeded random instances.

use std::collections::BTreeMap;
use std::ops::RangeInclusive;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::monomial::MonomialIdeal;
use crate::parse::ProblemInstance;
use crate::poly::{monomials_up_to_degree, Monomial, PolyRing, Polynomial, Rational};

/// Largest arity, generator count and exponent accepted by
/// [`GeneratorSpec::validate`].
pub const MAX_ARITY: usize = 4;
pub const MAX_GENERATORS: usize = 6;
pub const MAX_EXPONENT: u32 = 6;

/// Shape of a random monomial corpus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSpec {
    /// Arity of each instance, drawn uniformly from this range.
    pub arity: RangeInclusive<usize>,
    /// Generator count, drawn uniformly from `1..=max_generators`.
    pub max_generators: usize,
    pub max_exponent: u32,
    /// When set, every generator of an instance gets the same total degree
    /// `d`, with `d` drawn from `1..=max_degree`. Variables are then named
    /// `T0, ..., Tn`.
    pub homogeneous: Option<u32>,
    pub count: usize,
    pub seed: u64,
    /// Instance names are `{prefix}-{index:03}`.
    pub prefix: String,
}

impl GeneratorSpec {
    /// The box corpus used by the monomial suites.
    pub fn monomial(count: usize, seed: u64) -> Self {
        GeneratorSpec {
            arity: 2..=4,
            max_generators: MAX_GENERATORS,
            max_exponent: MAX_EXPONENT,
            homogeneous: None,
            count,
            seed,
            prefix: "j".into(),
        }
    }

    /// Homogeneous ideals in `P^2` and `P^3` of degree at most 4.
    pub fn projective(count: usize, seed: u64) -> Self {
        GeneratorSpec {
            arity: 3..=4,
            homogeneous: Some(4),
            prefix: "h".into(),
            ..Self::monomial(count, seed)
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(Error::InvalidInput(format!("generator spec: {m}")));
        if self.arity.is_empty() || *self.arity.start() == 0 || *self.arity.end() > MAX_ARITY {
            return bad("arity must lie in 1..=4");
        }
        if self.max_generators == 0 || self.max_generators > MAX_GENERATORS {
            return bad("generator count must lie in 1..=6");
        }
        if self.max_exponent == 0 || self.max_exponent > MAX_EXPONENT {
            return bad("max exponent must lie in 1..=6");
        }
        if let Some(d) = self.homogeneous {
            let n = *self.arity.start() as u32;
            if d == 0 || d > self.max_exponent * n {
                return bad("homogeneous degree out of range");
            }
        }
        Ok(())
    }
}

fn ring_for(n: usize, projective: bool) -> Result<Arc<PolyRing>> {
    if projective {
        let names: Vec<String> = (0..n).map(|i| format!("T{i}")).collect();
        PolyRing::new(&names)
    } else {
        PolyRing::with_arity(n)
    }
}

/// Moves a box-uniform vector to total degree `d` by random unit steps,
/// staying within `0..=max`.
fn pad(rng: &mut ChaCha8Rng, e: &mut [u32], d: u32, max: u32) {
    let n = e.len();
    loop {
        let deg: u32 = e.iter().sum();
        if deg == d {
            return;
        }
        let choices: Vec<usize> = if deg > d {
            (0..n).filter(|&i| e[i] > 0).collect()
        } else {
            (0..n).filter(|&i| e[i] < max).collect()
        };
        let &i = choices.choose(rng).expect("degree reachable");
        if deg > d {
            e[i] -= 1;
        } else {
            e[i] += 1;
        }
    }
}

/// Draws the corpus described by `spec`. The same spec always gives the
/// same instances.
pub fn generate_corpus(spec: &GeneratorSpec) -> Result<Vec<ProblemInstance>> {
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut out = Vec::with_capacity(spec.count);
    for index in 0..spec.count {
        let n = rng.gen_range(spec.arity.clone());
        let m = rng.gen_range(1..=spec.max_generators);
        let ring = ring_for(n, spec.homogeneous.is_some())?;
        let degree = spec
            .homogeneous
            .map(|dmax| rng.gen_range(1..=dmax.min(spec.max_exponent * n as u32)));
        let mut gens = Vec::with_capacity(m);
        for _ in 0..m {
            let mut e: Vec<u32> = (0..n)
                .map(|_| rng.gen_range(0..=spec.max_exponent))
                .collect();
            if let Some(d) = degree {
                pad(&mut rng, &mut e, d, spec.max_exponent);
            }
            gens.push(Monomial::new(e));
        }
        let ideal = MonomialIdeal::new(&ring, gens)?;
        let mut metadata = BTreeMap::new();
        metadata.insert("name".to_string(), format!("{}-{index:03}", spec.prefix));
        if let Some(d) = degree {
            metadata.insert("degree".to_string(), d.to_string());
        }
        out.push(ProblemInstance::new(
            ring,
            ideal.to_polynomials(),
            metadata,
        )?);
    }
    Ok(out)
}

/// A polynomial with up to `terms` terms of degree at most `max_degree`
/// and integer coefficients in `-coef..=coef`, never zero.
pub fn random_polynomial(
    rng: &mut ChaCha8Rng,
    ring: &Arc<PolyRing>,
    max_degree: u32,
    terms: usize,
    coef: i64,
) -> Polynomial {
    let pool = monomials_up_to_degree(ring.arity(), max_degree);
    loop {
        let picked = (0..terms).map(|_| {
            let m = pool.choose(rng).expect("non-empty pool").clone();
            (
                m,
                Rational::from_integer(rng.gen_range(-coef..=coef).into()),
            )
        });
        let p = Polynomial::from_terms(ring, picked);
        if !p.is_zero() {
            return p;
        }
    }
}

/// A fresh generator seeded from `seed` and a stream label, so separate
/// suites sharing a seed draw independent streams.
pub fn stream(seed: u64, label: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(label);
    rng
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic() {
        let spec = GeneratorSpec {
            arity: 2..=2,
            count: 3,
            ..GeneratorSpec::monomial(3, 1)
        };
        assert_eq!(
            generate_corpus(&spec).unwrap(),
            generate_corpus(&spec).unwrap()
        );
    }

    #[test]
    fn homogeneous_degrees() {
        for inst in generate_corpus(&GeneratorSpec::projective(30, 7)).unwrap() {
            let d: u32 = inst.metadata["degree"].parse().unwrap();
            assert!(inst.generators.iter().all(|g| g.total_degree() == d));
        }
    }

    #[test]
    fn exponent_bound() {
        let spec = GeneratorSpec {
            arity: 4..=4,
            ..GeneratorSpec::monomial(40, 3)
        };
        for inst in generate_corpus(&spec).unwrap() {
            for g in &inst.generators {
                assert!(g.monomials().all(|m| m.exponents().iter().all(|&e| e <= 6)));
            }
        }
    }

    #[test]
    fn rejects_large_arity() {
        let spec = GeneratorSpec {
            arity: 2..=5,
            ..GeneratorSpec::monomial(1, 0)
        };
        assert!(generate_corpus(&spec).is_err());
    }
}
