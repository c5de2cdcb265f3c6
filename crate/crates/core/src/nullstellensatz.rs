//! Nullstellensatz certificates `1 = sum g_j f_j`.
//!
//! Certificates are searched degree by degree with the Macaulay matrix,
//! which finds the smallest `D` with `deg(g_j f_j) <= D`; a Gröbner trace
//! gives a quick certificate with no degree guarantee.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{Pow, ToPrimitive};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::{bounded_combination, Ideal, DEFAULT_MAX_COLUMNS, DEFAULT_PAIR_BUDGET};
use crate::parse::ProblemInstance;
use crate::poly::{same_ring, Monomial, PolyRing, Polynomial};

/// A generator list together with its degree data.
#[derive(Debug, Clone, PartialEq)]
pub struct CertificateProblem {
    pub instance: ProblemInstance,
    /// Largest total degree of a generator, at least 1.
    pub degree: u32,
    /// Largest degree of each variable across the generators.
    pub multidegree: Vec<u32>,
    /// S-pair budget for the Gröbner computations.
    pub pair_budget: usize,
}

impl CertificateProblem {
    pub fn new(instance: ProblemInstance) -> Self {
        let n = instance.ring.arity();
        let degree = instance
            .generators
            .iter()
            .map(Polynomial::total_degree)
            .max()
            .unwrap_or(0)
            .max(1);
        let mut multidegree = vec![0; n];
        for g in &instance.generators {
            for (k, e) in g.multidegree().into_iter().enumerate() {
                multidegree[k] = multidegree[k].max(e);
            }
        }
        CertificateProblem {
            instance,
            degree,
            multidegree,
            pair_budget: DEFAULT_PAIR_BUDGET,
        }
    }

    pub fn with_pair_budget(mut self, max_pairs: usize) -> Self {
        self.pair_budget = max_pairs;
        self
    }

    fn ideal(&self) -> Result<Ideal> {
        Ok(Ideal::new(self.ring(), self.generators().to_vec())?.with_pair_budget(self.pair_budget))
    }

    pub fn from_generators(generators: Vec<Polynomial>) -> Result<Self> {
        let ring = generators
            .first()
            .ok_or_else(|| Error::InvalidInput("empty generator list".into()))?
            .ring()
            .clone();
        Ok(Self::new(ProblemInstance::new(
            ring,
            generators,
            Default::default(),
        )?))
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.instance.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.instance.generators
    }

    pub fn arity(&self) -> usize {
        self.instance.ring.arity()
    }

    fn max_generator_degree(&self) -> u32 {
        self.generators()
            .iter()
            .map(Polynomial::total_degree)
            .max()
            .unwrap_or(0)
    }

    /// All generators share one total degree.
    pub fn equal_degrees(&self) -> bool {
        let d = self.generators()[0].total_degree();
        self.generators().iter().all(|g| g.total_degree() == d)
    }

    /// `max(d^n, sparse bound)`, the sparse bound only when every variable
    /// occurs.
    pub fn default_cap(&self) -> u32 {
        let (kollar, sparse) = bound_calculator(self.arity(), self.degree, Some(&self.multidegree));
        let cap = match sparse {
            Some(s) if s > kollar => s,
            _ => kollar,
        };
        cap.to_u32().unwrap_or(u32::MAX)
    }
}

/// Cofactors with `sum g_j f_j = 1`, verified on construction.
#[derive(Debug, Clone, PartialEq)]
pub struct Certificate {
    pub cofactors: Vec<Polynomial>,
    /// `max_j deg(g_j f_j)` over non-zero cofactors.
    pub achieved_degree: u32,
}

impl Certificate {
    pub fn new(generators: &[Polynomial], cofactors: Vec<Polynomial>) -> Result<Self> {
        if generators.len() != cofactors.len() {
            return Err(Error::InvalidInput("cofactor count mismatch".into()));
        }
        let ring = generators[0].ring();
        let mut sum = Polynomial::zero(ring);
        let mut achieved = 0;
        for (g, f) in cofactors.iter().zip(generators) {
            if !same_ring(g.ring(), ring) || !same_ring(f.ring(), ring) {
                return Err(Error::RingMismatch);
            }
            if g.is_zero() {
                continue;
            }
            let prod = g.checked_mul(f)?;
            achieved = achieved.max(prod.total_degree());
            sum = sum.checked_add(&prod)?;
        }
        if !sum.is_one() {
            return Err(Error::Consistency(format!(
                "certificate expands to {sum}, not 1"
            )));
        }
        Ok(Certificate {
            cofactors,
            achieved_degree: achieved,
        })
    }
}

/// `true` iff the reduced Gröbner basis of the generators is `{1}`.
pub fn assert_zero_free(p: &CertificateProblem) -> Result<bool> {
    p.ideal()?.is_unit()
}

/// Solves for cofactors with `deg(g_j f_j) <= degree`. Free unknowns are
/// set to zero.
pub fn certificate_at_degree(
    p: &CertificateProblem,
    degree: u32,
    max_columns: usize,
) -> Result<Option<Certificate>> {
    let top = p.max_generator_degree();
    if degree < top {
        return Err(Error::DegreeTooSmall {
            target: degree,
            degree: top,
        });
    }
    let one = Polynomial::one(p.ring());
    match bounded_combination(&one, p.generators(), degree, max_columns)? {
        None => Ok(None),
        Some(cof) => Ok(Some(Certificate::new(p.generators(), cof)?)),
    }
}

/// Outcome of [`minimal_certificate_degree`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DegreeSearchReport {
    pub minimal_degree: Option<u32>,
    pub cap: u32,
    pub bound_kollar: String,
    pub bound_sparse: Option<String>,
    /// `(D, solvable)` for every probed degree, ascending.
    pub solvable: Vec<(u32, bool)>,
    pub aborted_at: Option<u32>,
    pub within_kollar: Option<bool>,
    pub within_sparse: Option<bool>,
    #[serde(serialize_with = "certificate_strings")]
    pub certificate: Option<Certificate>,
}

fn certificate_strings<S: serde::Serializer>(
    c: &Option<Certificate>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    let strings: Option<Vec<String>> = c
        .as_ref()
        .map(|c| c.cofactors.iter().map(ToString::to_string).collect());
    serde::Serialize::serialize(&strings, s)
}

impl DegreeSearchReport {
    pub fn found(&self) -> bool {
        self.minimal_degree.is_some()
    }
}

/// Scans `D = max deg f_j, ..., cap` upward for the first solvable degree.
///
/// A resource error at some `D` ends the scan with `aborted_at = D`. After
/// a hit, `D + 1` is probed as well (when within the cap) and must stay
/// solvable.
pub fn minimal_certificate_degree(
    p: &CertificateProblem,
    cap: u32,
    max_columns: usize,
) -> Result<DegreeSearchReport> {
    if !assert_zero_free(p)? {
        return Err(Error::NotZeroFree);
    }
    let top = p.max_generator_degree();
    let (kollar, sparse) = bound_calculator(p.arity(), p.degree, Some(&p.multidegree));
    let mut report = DegreeSearchReport {
        minimal_degree: None,
        cap,
        bound_kollar: kollar.to_string(),
        bound_sparse: sparse.as_ref().map(ToString::to_string),
        solvable: Vec::new(),
        aborted_at: None,
        within_kollar: None,
        within_sparse: None,
        certificate: None,
    };
    for d in top..=cap {
        match certificate_at_degree(p, d, max_columns) {
            Err(Error::Resource(_)) => {
                report.aborted_at = Some(d);
                break;
            }
            Err(e) => return Err(e),
            Ok(None) => report.solvable.push((d, false)),
            Ok(Some(cert)) => {
                report.solvable.push((d, true));
                report.minimal_degree = Some(d);
                report.certificate = Some(cert);
                break;
            }
        }
    }
    if let Some(d) = report.minimal_degree {
        if d < cap {
            if let Ok(next) = certificate_at_degree(p, d + 1, max_columns) {
                if next.is_none() {
                    return Err(Error::Consistency(format!(
                        "solvable at degree {d} but not at {}",
                        d + 1
                    )));
                }
                report.solvable.push((d + 1, true));
            }
        }
        let db = BigInt::from(d);
        report.within_kollar = Some(db <= kollar);
        report.within_sparse = sparse.as_ref().map(|s| db <= *s);
    }
    Ok(report)
}

/// [`minimal_certificate_degree`] with the default cap and column budget.
pub fn minimal_certificate_degree_default(p: &CertificateProblem) -> Result<DegreeSearchReport> {
    minimal_certificate_degree(p, p.default_cap(), DEFAULT_MAX_COLUMNS)
}

/// A certificate read off the traced Gröbner computation of `{1}`.
pub fn gb_trace_certificate(p: &CertificateProblem) -> Result<Certificate> {
    let ideal = p.ideal()?;
    let (member, cof) = ideal.member(&Polynomial::one(p.ring()))?;
    if !member {
        return Err(Error::NotZeroFree);
    }
    let cof = cof.ok_or_else(|| Error::Consistency("membership without cofactors".into()))?;
    Certificate::new(p.generators(), cof)
}

/// `(d^n, (n+1)! * prod d_k)`, the second only when `dvec` is given and
/// every entry is positive.
pub fn bound_calculator(n: usize, d: u32, dvec: Option<&[u32]>) -> (BigInt, Option<BigInt>) {
    let kollar = Pow::pow(&BigInt::from(d), n);
    let sparse = dvec.filter(|v| v.iter().all(|&x| x > 0)).map(|v| {
        let fact: BigInt = (1..=n as u64 + 1).map(BigInt::from).product();
        v.iter().fold(fact, |acc, &x| acc * BigInt::from(x))
    });
    (kollar, sparse)
}

/// Checks the projective form of a certificate at degree `degree`: with
/// `F_j` the homogenizations, solves `T0^degree = sum G_j F_j` with `G_j`
/// homogeneous, then dehomogenizes the `G_j` into an affine certificate.
/// Returns `None` when `T0^degree` is not such a combination.
pub fn homogenization_bridge(
    p: &CertificateProblem,
    degree: u32,
    max_columns: usize,
) -> Result<Option<Certificate>> {
    let ring = p.ring();
    let hring = ring.prepend(&ring.fresh_name("T0"))?;
    let forms: Vec<Polynomial> = p
        .generators()
        .iter()
        .map(|f| f.homogenize_into(&hring, f.total_degree()))
        .collect();
    let mut e = vec![0; hring.arity()];
    e[0] = degree;
    let target = Polynomial::monomial(&hring, Monomial::new(e));
    let Some(cof) = bounded_combination(&target, &forms, degree, max_columns)? else {
        return Ok(None);
    };
    // keep the part of each G_j of degree `degree - deg F_j`; the other
    // parts cancel among themselves
    let parts: Vec<Polynomial> = cof
        .iter()
        .zip(&forms)
        .map(|(g, f)| {
            let want = degree - f.total_degree();
            Polynomial::from_terms(
                &hring,
                g.terms()
                    .filter(|(m, _)| m.degree() == want)
                    .map(|(m, c)| (m.clone(), c.clone())),
            )
        })
        .collect();
    let mut check = Polynomial::zero(&hring);
    for (g, f) in parts.iter().zip(&forms) {
        check = check.checked_add(&g.checked_mul(f)?)?;
    }
    if check != target {
        return Err(Error::Consistency(
            "homogeneous cofactors do not expand".into(),
        ));
    }
    let affine = parts.iter().map(|g| g.dehomogenize_into(ring)).collect();
    Certificate::new(p.generators(), affine).map(Some)
}

impl Certificate {
    /// Cofactors rendered as text.
    pub fn to_strings(&self) -> Vec<String> {
        self.cofactors.iter().map(ToString::to_string).collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.cofactors.iter().filter(|c| !c.is_zero()).count() == 1
            && self
                .cofactors
                .iter()
                .any(|c| c.is_constant() && !c.is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;

    fn problem(gens: &[&str]) -> CertificateProblem {
        let r = PolyRing::new(&["x"]).unwrap();
        CertificateProblem::from_generators(
            gens.iter()
                .map(|s| parse_polynomial(s, &r).unwrap())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn zero_freeness() {
        assert!(assert_zero_free(&problem(&["x", "1 - x"])).unwrap());
        assert!(assert_zero_free(&problem(&["x^2", "(1 - x)^2"])).unwrap());
        let r = PolyRing::new(&["x", "y"]).unwrap();
        let p = CertificateProblem::from_generators(vec![
            parse_polynomial("x", &r).unwrap(),
            parse_polynomial("y", &r).unwrap(),
        ])
        .unwrap();
        assert!(!assert_zero_free(&p).unwrap());
    }

    #[test]
    fn square_certificate() {
        let p = problem(&["x^2", "(1 - x)^2"]);
        assert!(certificate_at_degree(&p, 2, 100).unwrap().is_none());
        let c = certificate_at_degree(&p, 3, 100).unwrap().unwrap();
        assert_eq!(c.to_strings(), vec!["-2*x + 3", "2*x + 1"]);
        assert_eq!(c.achieved_degree, 3);
        let rep = minimal_certificate_degree(&p, p.default_cap(), 100).unwrap();
        assert_eq!(rep.minimal_degree, Some(3));
        assert_eq!(rep.within_kollar, Some(false));
        assert_eq!(rep.solvable, vec![(2, false), (3, true), (4, true)]);
    }

    #[test]
    fn linear_certificate() {
        let p = problem(&["x", "1 - x"]);
        let c = certificate_at_degree(&p, 1, 100).unwrap().unwrap();
        assert_eq!(c.to_strings(), vec!["1", "1"]);
        let t = gb_trace_certificate(&p).unwrap();
        assert!(t.achieved_degree >= 1);
    }

    #[test]
    fn cube_sharpness_probe() {
        let p = problem(&["x^3", "(1 - x)^3"]);
        let rep = minimal_certificate_degree(&p, 6, 1000).unwrap();
        assert_eq!(rep.minimal_degree, Some(5));
    }

    #[test]
    fn bounds() {
        assert_eq!(bound_calculator(2, 3, None).0, BigInt::from(9));
        assert_eq!(
            bound_calculator(2, 3, Some(&[1, 3])).1,
            Some(BigInt::from(18))
        );
        assert_eq!(bound_calculator(1, 1, None).0, BigInt::from(1));
    }

    #[test]
    fn bridge_reproduces_certificate() {
        let p = problem(&["x^2", "(1 - x)^2"]);
        assert!(homogenization_bridge(&p, 2, 1000).unwrap().is_none());
        let c = homogenization_bridge(&p, 3, 1000).unwrap().unwrap();
        assert!(c.achieved_degree <= 3);
    }
}
