use std::fmt;

/// An exponent vector `x_1^{e_1} ... x_n^{e_n}`.
///
/// The derived `Ord` is plain lexicographic comparison of the exponent
/// vectors; it is used only as the storage key order. Term orders used by
/// algorithms are supplied separately through [`MonomialOrder`].
///
/// [`MonomialOrder`]: super::MonomialOrder
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(arity: usize) -> Self {
        Monomial(vec![0; arity])
    }

    /// The monomial `x_index`.
    pub fn variable(arity: usize, index: usize) -> Self {
        let mut e = vec![0; arity];
        e[index] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.arity(), other.arity());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial(self.0.iter().map(|e| e * k).collect())
    }

    /// True when `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self` when the division is exact.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial(
            other.0.iter().zip(&self.0).map(|(b, a)| b - a).collect(),
        ))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.min(b))
                .collect(),
        )
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Indices of the variables that occur.
    pub fn support(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&i| self.0[i] > 0).collect()
    }

    /// The squarefree monomial with the same support.
    pub fn radical(&self) -> Monomial {
        Monomial(self.0.iter().map(|&e| e.min(1)).collect())
    }

    /// Sum of the exponents over the given variable indices.
    pub fn partial_degree(&self, indices: &[usize]) -> u32 {
        indices.iter().map(|&i| self.0[i]).sum()
    }

    /// Writes the monomial using `names`, e.g. `x^2*y`. The unit monomial
    /// writes as `1`.
    pub fn display_with<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        MonomialDisplay { mono: self, names }
    }
}

impl From<Vec<u32>> for Monomial {
    fn from(v: Vec<u32>) -> Self {
        Monomial(v)
    }
}

struct MonomialDisplay<'a> {
    mono: &'a Monomial,
    names: &'a [String],
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, name) in self.mono.0.iter().zip(self.names) {
            if *e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if *e == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// Removes every monomial that is divisible by another one in the list,
/// keeping one copy of duplicates. The result is sorted.
pub fn minimalize(monos: impl IntoIterator<Item = Monomial>) -> Vec<Monomial> {
    let mut v: Vec<Monomial> = monos.into_iter().collect();
    v.sort_by_key(|m| (m.degree(), m.clone()));
    v.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(v.len());
    for m in v {
        if !kept.iter().any(|k| k.divides(&m)) {
            kept.push(m);
        }
    }
    kept.sort();
    kept
}

/// All monomials of total degree exactly `d` in `arity` variables, in
/// decreasing lex order.
pub fn monomials_of_degree(arity: usize, d: u32) -> Vec<Monomial> {
    fn rec(arity: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if prefix.len() + 1 == arity {
            prefix.push(d);
            out.push(Monomial::new(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in (0..=d).rev() {
            prefix.push(e);
            rec(arity, d - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if arity == 0 {
        if d == 0 {
            out.push(Monomial::new(Vec::new()));
        }
        return out;
    }
    rec(arity, d, &mut Vec::with_capacity(arity), &mut out);
    out
}

/// All monomials of total degree at most `d`, by increasing degree.
pub fn monomials_up_to_degree(arity: usize, d: u32) -> Vec<Monomial> {
    (0..=d)
        .flat_map(|k| monomials_of_degree(arity, k))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisibility_and_quotient() {
        let a = Monomial::new(vec![1, 2]);
        let b = Monomial::new(vec![3, 2]);
        assert!(a.divides(&b));
        assert!(!b.divides(&a));
        assert_eq!(a.quotient_of(&b), Some(Monomial::new(vec![2, 0])));
        assert_eq!(a.lcm(&Monomial::new(vec![0, 5])), Monomial::new(vec![1, 5]));
    }

    #[test]
    fn minimalize_drops_multiples() {
        let gens = minimalize(vec![
            Monomial::new(vec![2, 0]),
            Monomial::new(vec![3, 1]),
            Monomial::new(vec![0, 2]),
            Monomial::new(vec![2, 0]),
        ]);
        assert_eq!(
            gens,
            vec![Monomial::new(vec![0, 2]), Monomial::new(vec![2, 0])]
        );
    }

    #[test]
    fn enumerates_by_degree() {
        assert_eq!(monomials_of_degree(2, 2).len(), 3);
        assert_eq!(monomials_of_degree(3, 2).len(), 6);
        assert_eq!(monomials_up_to_degree(2, 3).len(), 10);
        assert_eq!(monomials_of_degree(2, 1)[0], Monomial::new(vec![1, 0]));
    }

    #[test]
    fn display() {
        let names = vec!["x".to_string(), "y".to_string()];
        assert_eq!(
            Monomial::new(vec![2, 1]).display_with(&names).to_string(),
            "x^2*y"
        );
        assert_eq!(Monomial::one(2).display_with(&names).to_string(), "1");
    }
}
