use std::collections::BTreeSet;
use std::sync::Arc;

use num_traits::One;

use crate::error::{Error, Result};
use crate::poly::{Monomial, MonomialOrder, PolyRing, Polynomial, Rational};

/// Default cap on the number of S-pairs Buchberger may reduce.
pub const DEFAULT_PAIR_BUDGET: usize = 200_000;

/// A reduced Groebner basis, optionally with the matrix expressing each
/// basis element in terms of the input generators.
#[derive(Debug, Clone, PartialEq)]
pub struct GroebnerBasis {
    pub order: MonomialOrder,
    /// Monic, fully reduced, sorted by decreasing leading monomial.
    pub basis: Vec<Polynomial>,
    /// `basis[i] = sum_j trace[i][j] * inputs[j]`.
    pub trace: Option<Vec<Vec<Polynomial>>>,
    pub inputs: Vec<Polynomial>,
}

/// Result of the division algorithm.
#[derive(Debug, Clone, PartialEq)]
pub struct Division {
    pub remainder: Polynomial,
    pub quotients: Vec<Polynomial>,
}

/// Divides `p` by `divisors` in the given order: at each step the leading
/// term of what is left is cancelled by the first divisor whose leading
/// monomial divides it, otherwise it moves to the remainder.
pub fn divide(p: &Polynomial, divisors: &[Polynomial], order: &MonomialOrder) -> Division {
    let ring = p.ring();
    let leads: Vec<Option<(Monomial, Rational)>> = divisors
        .iter()
        .map(|g| g.leading_term(order).map(|(m, c)| (m.clone(), c.clone())))
        .collect();
    let mut quotients = vec![Polynomial::zero(ring); divisors.len()];
    let mut remainder = Polynomial::zero(ring);
    let mut rest = p.clone();
    while let Some((lm, lc)) = rest
        .leading_term(order)
        .map(|(m, c)| (m.clone(), c.clone()))
    {
        let hit = leads.iter().enumerate().find_map(|(i, l)| {
            let (gm, gc) = l.as_ref()?;
            gm.quotient_of(&lm).map(|q| (i, q, &lc / gc))
        });
        match hit {
            Some((i, q, c)) => {
                rest = &rest - &divisors[i].mul_term(&q, &c);
                quotients[i].add_term(q, c);
            }
            None => {
                rest.add_term(lm.clone(), -lc.clone());
                remainder.add_term(lm, lc);
            }
        }
    }
    Division {
        remainder,
        quotients,
    }
}

/// Remainder of `p` on division by a Groebner basis, with the quotients.
pub fn normal_form(p: &Polynomial, gb: &GroebnerBasis) -> Result<Division> {
    if let Some(g) = gb.basis.first() {
        if !crate::poly::same_ring(p.ring(), g.ring()) {
            return Err(Error::RingMismatch);
        }
    }
    Ok(divide(p, &gb.basis, &gb.order))
}

struct Elem {
    poly: Polynomial,
    lm: Monomial,
    cof: Option<Vec<Polynomial>>,
}

fn s_polynomial(
    a: &Elem,
    b: &Elem,
    order: &MonomialOrder,
) -> (Polynomial, Option<Vec<Polynomial>>) {
    let l = a.lm.lcm(&b.lm);
    let ca = a.poly.leading_term(order).expect("nonzero").1.clone();
    let cb = b.poly.leading_term(order).expect("nonzero").1.clone();
    let ma = a.lm.quotient_of(&l).expect("lcm");
    let mb = b.lm.quotient_of(&l).expect("lcm");
    let fa = ca.recip();
    let fb = -cb.recip();
    let s = &a.poly.mul_term(&ma, &fa) + &b.poly.mul_term(&mb, &fb);
    let cof = match (&a.cof, &b.cof) {
        (Some(x), Some(y)) => Some(
            x.iter()
                .zip(y)
                .map(|(p, q)| &p.mul_term(&ma, &fa) + &q.mul_term(&mb, &fb))
                .collect(),
        ),
        _ => None,
    };
    (s, cof)
}

/// Fully reduces `p` (all terms) against `elems`, updating cofactors
/// alongside.
fn reduce(
    mut p: Polynomial,
    mut cof: Option<Vec<Polynomial>>,
    elems: &[Elem],
    order: &MonomialOrder,
) -> (Polynomial, Option<Vec<Polynomial>>) {
    let ring = p.ring().clone();
    let mut out = Polynomial::zero(&ring);
    while let Some((lm, lc)) = p.leading_term(order).map(|(m, c)| (m.clone(), c.clone())) {
        let hit = elems
            .iter()
            .enumerate()
            .find_map(|(i, e)| e.lm.quotient_of(&lm).map(|q| (i, q)));
        match hit {
            Some((i, q)) => {
                let e = &elems[i];
                let c = &lc / e.poly.leading_term(order).expect("nonzero").1;
                p = &p - &e.poly.mul_term(&q, &c);
                if let (Some(cv), Some(ev)) = (cof.as_mut(), e.cof.as_ref()) {
                    for (x, y) in cv.iter_mut().zip(ev) {
                        *x = &*x - &y.mul_term(&q, &c);
                    }
                }
            }
            None => {
                p.add_term(lm.clone(), -lc.clone());
                out.add_term(lm, lc);
            }
        }
    }
    (out, cof)
}

fn unit_vectors(ring: &Arc<PolyRing>, m: usize) -> Vec<Vec<Polynomial>> {
    (0..m)
        .map(|i| {
            (0..m)
                .map(|j| {
                    if i == j {
                        Polynomial::one(ring)
                    } else {
                        Polynomial::zero(ring)
                    }
                })
                .collect()
        })
        .collect()
}

/// Options for [`buchberger`].
#[derive(Debug, Clone)]
pub struct GbOptions {
    pub with_trace: bool,
    pub max_pairs: usize,
}

impl Default for GbOptions {
    fn default() -> Self {
        GbOptions {
            with_trace: false,
            max_pairs: DEFAULT_PAIR_BUDGET,
        }
    }
}

/// Reduced Groebner basis of the ideal generated by `generators`.
///
/// Uses the product and chain criteria and the normal selection strategy.
/// Aborts with [`Error::Resource`] once more than `max_pairs` S-pairs have
/// been reduced.
pub fn buchberger(
    generators: &[Polynomial],
    order: &MonomialOrder,
    opts: &GbOptions,
) -> Result<GroebnerBasis> {
    let Some(first) = generators.iter().find(|g| !g.is_zero()) else {
        return Err(Error::InvalidInput("no nonzero generator".into()));
    };
    let ring = first.ring().clone();
    for g in generators {
        if !crate::poly::same_ring(g.ring(), &ring) {
            return Err(Error::RingMismatch);
        }
    }
    order.validate(ring.arity())?;
    let m = generators.len();
    let units = unit_vectors(&ring, m);

    let mut elems: Vec<Elem> = Vec::new();
    let mut pairs: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut processed = 0usize;

    let add = |elems: &mut Vec<Elem>,
               pairs: &mut BTreeSet<(usize, usize)>,
               p: Polynomial,
               cof: Option<Vec<Polynomial>>| {
        let lm = p.leading_monomial(order).expect("nonzero").clone();
        let k = elems.len();
        for i in 0..k {
            pairs.insert((i, k));
        }
        elems.push(Elem { poly: p, lm, cof });
    };

    for (j, g) in generators.iter().enumerate() {
        if g.is_zero() {
            continue;
        }
        let cof = opts.with_trace.then(|| units[j].clone());
        let (r, cof) = reduce(g.clone(), cof, &elems, order);
        if !r.is_zero() {
            add(&mut elems, &mut pairs, r, cof);
        }
    }

    let mut found_unit = elems.iter().any(|e| e.lm.is_one());
    while !found_unit {
        // normal strategy: smallest lcm first
        let Some(&(i, j)) = pairs.iter().min_by(|a, b| {
            let la = elems[a.0].lm.lcm(&elems[a.1].lm);
            let lb = elems[b.0].lm.lcm(&elems[b.1].lm);
            order.compare(&la, &lb).then_with(|| a.cmp(b))
        }) else {
            break;
        };
        pairs.remove(&(i, j));
        if elems[i].lm.is_coprime(&elems[j].lm) {
            continue;
        }
        let l = elems[i].lm.lcm(&elems[j].lm);
        let key = |a: usize, b: usize| (a.min(b), a.max(b));
        let chain = (0..elems.len()).any(|k| {
            k != i
                && k != j
                && elems[k].lm.divides(&l)
                && !pairs.contains(&key(i, k))
                && !pairs.contains(&key(j, k))
        });
        if chain {
            continue;
        }
        processed += 1;
        if processed > opts.max_pairs {
            return Err(Error::Resource(format!(
                "Buchberger exceeded the budget of {} S-pairs",
                opts.max_pairs
            )));
        }
        let (s, cof) = s_polynomial(&elems[i], &elems[j], order);
        let (r, cof) = reduce(s, cof, &elems, order);
        if !r.is_zero() {
            found_unit = r.is_constant();
            add(&mut elems, &mut pairs, r, cof);
        }
    }

    Ok(finalize(elems, order, generators))
}

fn finalize(
    mut elems: Vec<Elem>,
    order: &MonomialOrder,
    generators: &[Polynomial],
) -> GroebnerBasis {
    if let Some(u) = elems.iter().position(|e| e.lm.is_one()) {
        elems = vec![elems.swap_remove(u)];
    }
    // minimal basis: drop elements whose leading monomial is a multiple of
    // another's (keep the earliest among equal leading monomials)
    let mut keep = vec![true; elems.len()];
    for i in 0..elems.len() {
        for j in 0..elems.len() {
            if i == j || !keep[j] {
                continue;
            }
            let divides = elems[j].lm.divides(&elems[i].lm);
            if divides && (elems[j].lm != elems[i].lm || j < i) {
                keep[i] = false;
                break;
            }
        }
    }
    let mut minimal: Vec<Elem> = elems
        .into_iter()
        .zip(keep)
        .filter_map(|(e, k)| k.then_some(e))
        .collect();

    // interreduce tails; leading monomials do not change
    for i in 0..minimal.len() {
        let p = minimal[i].poly.clone();
        let cof = minimal[i].cof.take();
        let (r, cof) = reduce_tail(&p, cof, &minimal, i, order);
        minimal[i].poly = r;
        minimal[i].cof = cof;
    }

    let mut out: Vec<(Polynomial, Option<Vec<Polynomial>>)> = minimal
        .into_iter()
        .map(|e| {
            let lc = e.poly.leading_term(order).expect("nonzero").1.clone();
            let inv = lc.recip();
            let poly = e.poly.scale(&inv);
            let cof = e.cof.map(|v| v.iter().map(|c| c.scale(&inv)).collect());
            (poly, cof)
        })
        .collect();
    out.sort_by(|a, b| {
        let la = a.0.leading_monomial(order).expect("nonzero");
        let lb = b.0.leading_monomial(order).expect("nonzero");
        order.compare(lb, la)
    });
    let traced = out.iter().all(|(_, c)| c.is_some()) && !out.is_empty();
    let (basis, cofs): (Vec<_>, Vec<_>) = out.into_iter().unzip();
    let trace = if traced {
        Some(cofs.into_iter().map(Option::unwrap).collect())
    } else {
        None
    };
    GroebnerBasis {
        order: order.clone(),
        basis,
        trace,
        inputs: generators.to_vec(),
    }
}

/// Reduces every non-leading term of `p` by the other elements, updating
/// cofactors.
fn reduce_tail(
    p: &Polynomial,
    mut cof: Option<Vec<Polynomial>>,
    elems: &[Elem],
    skip: usize,
    order: &MonomialOrder,
) -> (Polynomial, Option<Vec<Polynomial>>) {
    let (lm, lc) = p
        .leading_term(order)
        .map(|(m, c)| (m.clone(), c.clone()))
        .expect("nonzero");
    let mut rest = p.clone();
    rest.add_term(lm.clone(), -lc.clone());
    let mut out = Polynomial::term(p.ring(), lm, lc);
    while let Some((m, c)) = rest
        .leading_term(order)
        .map(|(m, c)| (m.clone(), c.clone()))
    {
        let hit = elems.iter().enumerate().find_map(|(i, e)| {
            if i == skip {
                return None;
            }
            e.lm.quotient_of(&m).map(|q| (i, q))
        });
        match hit {
            Some((i, q)) => {
                let e = &elems[i];
                let f = &c / e.poly.leading_term(order).expect("nonzero").1;
                rest = &rest - &e.poly.mul_term(&q, &f);
                if let (Some(cv), Some(ev)) = (cof.as_mut(), e.cof.as_ref()) {
                    for (x, y) in cv.iter_mut().zip(ev) {
                        *x = &*x - &y.mul_term(&q, &f);
                    }
                }
            }
            None => {
                rest.add_term(m.clone(), -c.clone());
                out.add_term(m, c);
            }
        }
    }
    (out, cof)
}

impl GroebnerBasis {
    pub fn is_unit(&self) -> bool {
        self.basis.len() == 1 && self.basis[0].is_one()
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        self.basis[0].ring()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.basis
            .iter()
            .map(|g| g.leading_monomial(&self.order).expect("nonzero").clone())
            .collect()
    }

    /// True when every S-polynomial reduces to zero.
    pub fn check_s_pairs(&self) -> bool {
        for i in 0..self.basis.len() {
            for j in (i + 1)..self.basis.len() {
                let a = Elem {
                    lm: self.basis[i].leading_monomial(&self.order).unwrap().clone(),
                    poly: self.basis[i].clone(),
                    cof: None,
                };
                let b = Elem {
                    lm: self.basis[j].leading_monomial(&self.order).unwrap().clone(),
                    poly: self.basis[j].clone(),
                    cof: None,
                };
                let (s, _) = s_polynomial(&a, &b, &self.order);
                if !divide(&s, &self.basis, &self.order).remainder.is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// True when no term of any element is divisible by the leading
    /// monomial of another element, and every element is monic.
    pub fn is_reduced(&self) -> bool {
        let lms = self.leading_monomials();
        self.basis.iter().enumerate().all(|(i, g)| {
            g.leading_term(&self.order).is_some_and(|(_, c)| c.is_one())
                && g.monomials()
                    .all(|m| lms.iter().enumerate().all(|(j, l)| j == i || !l.divides(m)))
        })
    }

    /// Checks `trace * inputs == basis` term for term.
    pub fn check_trace(&self) -> bool {
        let Some(trace) = &self.trace else {
            return false;
        };
        trace.iter().zip(&self.basis).all(|(row, g)| {
            let mut acc = Polynomial::zero(g.ring());
            for (c, f) in row.iter().zip(&self.inputs) {
                acc = &acc + &(c * f);
            }
            &acc == g
        })
    }

    /// Cofactors `c_j` with `sum_i quotients[i] * basis[i] = sum_j c_j * inputs[j]`.
    pub fn lift(&self, quotients: &[Polynomial]) -> Option<Vec<Polynomial>> {
        let trace = self.trace.as_ref()?;
        let ring = self.ring();
        let mut out = vec![Polynomial::zero(ring); self.inputs.len()];
        for (q, row) in quotients.iter().zip(trace) {
            if q.is_zero() {
                continue;
            }
            for (o, t) in out.iter_mut().zip(row) {
                *o = &*o + &(q * t);
            }
        }
        Some(out)
    }
}
