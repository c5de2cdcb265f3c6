//! Degree-bounded membership by linear algebra on the Macaulay matrix.

use std::collections::BTreeMap;

use num_traits::Zero;

use super::Ideal;
use crate::error::{Error, Result};
use crate::linalg::{solve, verify_solution, Solution};
use crate::poly::{monomials_up_to_degree, same_ring, Monomial, Polynomial, Rational};

/// Default refusal threshold on the number of unknowns.
pub const DEFAULT_MAX_COLUMNS: usize = 10_000;

/// Searches for cofactors `c_j` with `target = sum c_j * gens[j]` and
/// `deg(c_j * gens[j]) <= cap` for every `j`.
///
/// Unknowns are the coefficients of each `c_j` on the monomials of degree
/// at most `cap - deg(gens[j])`, ordered by generator, then degree, then
/// lex. Free unknowns are set to zero, so the answer is canonical. Returns
/// `Ok(None)` when no such combination exists.
pub fn bounded_combination(
    target: &Polynomial,
    gens: &[Polynomial],
    cap: u32,
    max_columns: usize,
) -> Result<Option<Vec<Polynomial>>> {
    let ring = target.ring();
    for g in gens {
        if !same_ring(g.ring(), ring) {
            return Err(Error::RingMismatch);
        }
    }
    if target.total_degree() > cap {
        return Ok(None);
    }
    let n = ring.arity();
    let mut columns: Vec<(usize, Monomial)> = Vec::new();
    for (j, g) in gens.iter().enumerate() {
        if g.is_zero() || g.total_degree() > cap {
            continue;
        }
        for m in monomials_up_to_degree(n, cap - g.total_degree()) {
            columns.push((j, m));
            if columns.len() > max_columns {
                return Err(Error::Resource(format!(
                    "Macaulay matrix needs more than {max_columns} columns at degree {cap}"
                )));
            }
        }
    }

    let mut rows: BTreeMap<Monomial, usize> = BTreeMap::new();
    let mut entries: Vec<Vec<(usize, Rational)>> = Vec::new();
    let row_of = |m: Monomial, rows: &mut BTreeMap<Monomial, usize>| -> usize {
        let next = rows.len();
        *rows.entry(m).or_insert(next)
    };
    for (col, (j, m)) in columns.iter().enumerate() {
        for (gm, gc) in gens[*j].terms() {
            let r = row_of(m.mul(gm), &mut rows);
            if entries.len() <= r {
                entries.resize(r + 1, Vec::new());
            }
            entries[r].push((col, gc.clone()));
        }
    }
    for (m, _) in target.terms() {
        let r = row_of(m.clone(), &mut rows);
        if entries.len() <= r {
            entries.resize(r + 1, Vec::new());
        }
    }

    let ncols = columns.len();
    let a: Vec<Vec<Rational>> = entries
        .iter()
        .map(|row| {
            let mut dense = vec![Rational::zero(); ncols];
            for (c, v) in row {
                dense[*c] += v;
            }
            dense
        })
        .collect();
    let mut b = vec![Rational::zero(); a.len()];
    for (m, c) in target.terms() {
        b[rows[m]] = c.clone();
    }
    if ncols == 0 {
        return Ok(target
            .is_zero()
            .then(|| vec![Polynomial::zero(ring); gens.len()]));
    }
    let x = match solve(&a, &b) {
        Solution::Inconsistent => return Ok(None),
        Solution::Unique(x) => x,
    };
    if !verify_solution(&a, &b, &x) {
        return Err(Error::Consistency("linear solve did not verify".into()));
    }
    let mut cof = vec![Polynomial::zero(ring); gens.len()];
    for ((j, m), v) in columns.into_iter().zip(x) {
        cof[j].add_term(m, v);
    }
    Ok(Some(cof))
}

/// Decides whether `p` is a combination of the generators of `ideal` with
/// every product of degree at most `degree_cap`.
///
/// This is a bounded-degree test: `false` means "not within the cap", and
/// a cap below `deg p` always answers `false`.
pub fn macaulay_member(p: &Polynomial, ideal: &Ideal, degree_cap: u32) -> Result<bool> {
    if !same_ring(p.ring(), ideal.ring()) {
        return Err(Error::RingMismatch);
    }
    if p.is_zero() {
        return Ok(true);
    }
    Ok(bounded_combination(p, ideal.generators(), degree_cap, DEFAULT_MAX_COLUMNS)?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;
    use crate::poly::PolyRing;

    #[test]
    fn example_membership() {
        let r = PolyRing::new(&["x", "y"]).unwrap();
        let p = |s: &str| parse_polynomial(s, &r).unwrap();
        let i = Ideal::new(&r, vec![p("x^2"), p("y^2")]).unwrap();
        assert!(!macaulay_member(&p("x*y"), &i, 6).unwrap());
        assert!(macaulay_member(&p("x^2"), &i, 2).unwrap());
        assert!(!macaulay_member(&p("x^3"), &i, 2).unwrap());
    }

    #[test]
    fn combination_expands() {
        let r = PolyRing::new(&["x"]).unwrap();
        let p = |s: &str| parse_polynomial(s, &r).unwrap();
        let gens = vec![p("x"), p("1 - x")];
        let cof = bounded_combination(&p("1"), &gens, 1, 100)
            .unwrap()
            .unwrap();
        let sum = &(&cof[0] * &gens[0]) + &(&cof[1] * &gens[1]);
        assert!(sum.is_one());
    }

    #[test]
    fn column_budget() {
        let r = PolyRing::new(&["x", "y"]).unwrap();
        let g = parse_polynomial("x", &r).unwrap();
        assert!(matches!(
            bounded_combination(&g, std::slice::from_ref(&g), 200, 50),
            Err(Error::Resource(_))
        ));
    }
}
