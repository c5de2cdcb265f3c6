use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use super::Monomial;
use crate::error::Error;

/// A term order. Variable 0 is the most significant variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    Lex,
    #[default]
    GrevLex,
    /// Block order eliminating the first `k` variables: compare the
    /// first block by graded reverse lex, break ties with graded reverse
    /// lex on the remaining variables.
    Elimination(usize),
    /// Weight order with graded-reverse-lex tie break. Weights are
    /// non-negative, which keeps `1` the least monomial.
    Weighted(Vec<u64>),
}

fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b).rev() {
            if x != y {
                // smaller exponent in the last differing variable is larger
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

impl MonomialOrder {
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (a, b) = (a.exponents(), b.exponents());
        match self {
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::GrevLex => grevlex(a, b),
            MonomialOrder::Elimination(k) => {
                let k = (*k).min(a.len());
                grevlex(&a[..k], &b[..k]).then_with(|| grevlex(&a[k..], &b[k..]))
            }
            MonomialOrder::Weighted(w) => {
                let wa: u64 = a.iter().zip(w).map(|(&e, &w)| e as u64 * w).sum();
                let wb: u64 = b.iter().zip(w).map(|(&e, &w)| e as u64 * w).sum();
                wa.cmp(&wb).then_with(|| grevlex(a, b))
            }
        }
    }

    /// Checks that the order's parameters fit a ring of the given arity.
    pub fn validate(&self, arity: usize) -> Result<(), Error> {
        match self {
            MonomialOrder::Elimination(k) if *k > arity => Err(Error::InvalidInput(format!(
                "elimination block {k} exceeds arity {arity}"
            ))),
            MonomialOrder::Weighted(w) if w.len() != arity => Err(Error::InvalidInput(format!(
                "weight vector has length {}, ring arity is {arity}",
                w.len()
            ))),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::Lex => f.write_str("lex"),
            MonomialOrder::GrevLex => f.write_str("grevlex"),
            MonomialOrder::Elimination(k) => write!(f, "elim:{k}"),
            MonomialOrder::Weighted(w) => {
                let parts: Vec<String> = w.iter().map(u64::to_string).collect();
                write!(f, "weight:{}", parts.join(","))
            }
        }
    }
}

/// Accepts `lex`, `grevlex`, `elim:K` and `weight:w1,w2,...`.
impl FromStr for MonomialOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || Error::InvalidInput(format!("unknown monomial order `{s}`"));
        match s {
            "lex" => Ok(MonomialOrder::Lex),
            "grevlex" | "drl" => Ok(MonomialOrder::GrevLex),
            _ => {
                if let Some(k) = s.strip_prefix("elim:") {
                    k.trim()
                        .parse()
                        .map(MonomialOrder::Elimination)
                        .map_err(|_| bad())
                } else if let Some(w) = s.strip_prefix("weight:") {
                    w.split(',')
                        .map(|t| t.trim().parse::<u64>())
                        .collect::<Result<Vec<_>, _>>()
                        .map(MonomialOrder::Weighted)
                        .map_err(|_| bad())
                } else {
                    Err(bad())
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(v: &[u32]) -> Monomial {
        Monomial::new(v.to_vec())
    }

    #[test]
    fn grevlex_examples() {
        let o = MonomialOrder::GrevLex;
        // x*z < y^2 in grevlex with x > y > z
        assert_eq!(o.compare(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
        assert_eq!(o.compare(&m(&[2, 0, 0]), &m(&[0, 0, 1])), Ordering::Greater);
    }

    #[test]
    fn elimination_prefers_first_block() {
        let o = MonomialOrder::Elimination(1);
        assert_eq!(o.compare(&m(&[1, 0]), &m(&[0, 5])), Ordering::Greater);
    }

    #[test]
    fn parse_orders() {
        assert_eq!(
            "elim:2".parse::<MonomialOrder>().unwrap(),
            MonomialOrder::Elimination(2)
        );
        assert_eq!(
            "weight:1,2".parse::<MonomialOrder>().unwrap(),
            MonomialOrder::Weighted(vec![1, 2])
        );
        assert!("revlex".parse::<MonomialOrder>().is_err());
    }

    fn orders() -> impl Strategy<Value = MonomialOrder> {
        prop_oneof![
            Just(MonomialOrder::Lex),
            Just(MonomialOrder::GrevLex),
            (0usize..=3).prop_map(MonomialOrder::Elimination),
            prop::collection::vec(0u64..4, 3).prop_map(MonomialOrder::Weighted),
        ]
    }

    fn mono() -> impl Strategy<Value = Monomial> {
        prop::collection::vec(0u32..6, 3).prop_map(Monomial::new)
    }

    proptest! {
        #[test]
        fn term_order_axioms(o in orders(), a in mono(), b in mono(), c in mono()) {
            let ab = o.compare(&a, &b);
            prop_assert_eq!(ab, o.compare(&b, &a).reverse());
            prop_assert_eq!(ab == Ordering::Equal, a == b);
            if ab == Ordering::Less {
                prop_assert_eq!(o.compare(&a.mul(&c), &b.mul(&c)), Ordering::Less);
            }
            prop_assert_ne!(o.compare(&Monomial::one(3), &a), Ordering::Greater);
        }
    }
}
