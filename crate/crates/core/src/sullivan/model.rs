use std::fmt;

use thiserror::Error;

use crate::algebra::{
    integer, parse_polynomial, AlgebraError, FreeAlgebra, Generator, Monomial, Polynomial,
};
use crate::ranktype::RankType;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("differential given for unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("differential of {name:?}: {source}")]
    Differential { name: String, source: AlgebraError },
}

/// A free graded-commutative algebra with a differential given on generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SullivanModel {
    algebra: FreeAlgebra,
    differential: Vec<Polynomial>,
    declared_rank_type: Option<RankType>,
    truncation_degree: Option<u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ViolationKind {
    DegreeTooLow,
    WrongDegree,
    LinearTerm,
    SquareNonzero,
    RankTypeMismatch,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    /// Offending generator, if the violation is local to one.
    pub generator: Option<String>,
    pub kind: ViolationKind,
    pub reason: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.generator {
            Some(g) => write!(f, "{g}: {}", self.reason),
            None => f.write_str(&self.reason),
        }
    }
}

impl SullivanModel {
    /// Builds a model from generators and `(name, polynomial text)` pairs.
    /// Generators without an entry have zero differential.
    pub fn from_text(
        generators: &[(&str, u32)],
        differential: &[(&str, &str)],
    ) -> Result<Self, ModelError> {
        let gens = generators
            .iter()
            .map(|&(n, d)| Generator::new(n, d))
            .collect();
        let algebra = FreeAlgebra::new(gens)?;
        let mut d = vec![Polynomial::zero(algebra.len()); algebra.len()];
        for &(name, text) in differential {
            let index = algebra
                .index_of(name)
                .ok_or_else(|| ModelError::UnknownGenerator(name.to_string()))?;
            d[index] =
                parse_polynomial(text, &algebra).map_err(|source| ModelError::Differential {
                    name: name.to_string(),
                    source,
                })?;
        }
        Ok(SullivanModel::new(algebra, d))
    }

    pub fn new(algebra: FreeAlgebra, differential: Vec<Polynomial>) -> Self {
        assert_eq!(algebra.len(), differential.len());
        SullivanModel {
            algebra,
            differential,
            declared_rank_type: None,
            truncation_degree: None,
        }
    }

    pub fn with_rank_type(mut self, t: RankType) -> Self {
        self.declared_rank_type = Some(t);
        self
    }

    pub fn truncated_at(mut self, degree: u32) -> Self {
        self.truncation_degree = Some(degree);
        self
    }

    pub fn algebra(&self) -> &FreeAlgebra {
        &self.algebra
    }

    pub fn generators(&self) -> &[Generator] {
        self.algebra.generators()
    }

    pub fn differential_of(&self, index: usize) -> &Polynomial {
        &self.differential[index]
    }

    pub fn declared_rank_type(&self) -> Option<&RankType> {
        self.declared_rank_type.as_ref()
    }

    pub fn truncation_degree(&self) -> Option<u32> {
        self.truncation_degree
    }

    pub fn is_truncated(&self) -> bool {
        self.truncation_degree.is_some()
    }

    /// Rank type read off the generator degrees.
    pub fn generator_rank_type(&self) -> Option<RankType> {
        let (evens, odds): (Vec<u32>, Vec<u32>) = self
            .generators()
            .iter()
            .map(|g| g.degree)
            .partition(|d| d % 2 == 0);
        RankType::new(evens, odds).ok()
    }

    /// Formal dimension of the declared rank type, or of the generator
    /// degrees when none is declared.
    pub fn expected_formal_dimension(&self) -> Option<u32> {
        self.declared_rank_type
            .clone()
            .or_else(|| self.generator_rank_type())
            .and_then(|t| t.formal_dimension().ok())
    }

    pub fn parse(&self, text: &str) -> Result<Polynomial, AlgebraError> {
        parse_polynomial(text, &self.algebra)
    }

    pub fn render(&self, p: &Polynomial) -> String {
        self.algebra.render(p)
    }

    /// The derivation extending `d`: `d(uv) = d(u) v + (-1)^{|u|} u d(v)`.
    pub fn apply_differential(&self, p: &Polynomial) -> Result<Polynomial, AlgebraError> {
        if p.generator_count() != self.algebra.len() {
            return Err(AlgebraError::ContextMismatch {
                left: self.algebra.len(),
                right: p.generator_count(),
            });
        }
        let mut out = Polynomial::zero(self.algebra.len());
        for (m, c) in p.terms() {
            let dm = self.differential_of_monomial(m)?;
            out = out.add(&dm.scale(c))?;
        }
        Ok(out)
    }

    pub fn differential_of_monomial(&self, m: &Monomial) -> Result<Polynomial, AlgebraError> {
        let a = &self.algebra;
        let n = a.len();
        let exps = m.exponents();
        let mut out = Polynomial::zero(n);
        for i in 0..n {
            let e = exps[i];
            if e == 0 || self.differential[i].is_zero() {
                continue;
            }
            let mut prefix_exps = vec![0; n];
            prefix_exps[..i].copy_from_slice(&exps[..i]);
            let mut suffix_exps = vec![0; n];
            suffix_exps[i + 1..].copy_from_slice(&exps[i + 1..]);
            let prefix = a
                .monomial_from_exponents(prefix_exps)?
                .expect("sub-monomial of a monomial");
            let suffix = a
                .monomial_from_exponents(suffix_exps)?
                .expect("sub-monomial of a monomial");
            // d(g^e) = e g^{e-1} dg; e = 1 whenever g is odd
            let lower = a.power(i, e - 1).expect("lower power exists");
            let dpow = a
                .multiply(&Polynomial::monomial(lower), &self.differential[i])?
                .scale(&integer(e as i64));
            let mut term = a.multiply(&Polynomial::monomial(prefix.clone()), &dpow)?;
            term = a.multiply(&term, &Polynomial::monomial(suffix))?;
            if prefix.degree() % 2 == 1 {
                term = term.scale(&integer(-1));
            }
            out = out.add(&term)?;
        }
        Ok(out)
    }

    /// Every violated model axiom; empty when the model is a valid minimal
    /// Sullivan algebra.
    pub fn validate(&self) -> Vec<Violation> {
        let mut violations = Vec::new();
        for (i, g) in self.generators().iter().enumerate() {
            let local = |kind, reason: String| Violation {
                generator: Some(g.name.clone()),
                kind,
                reason,
            };
            if g.degree < 2 {
                violations.push(local(
                    ViolationKind::DegreeTooLow,
                    format!("degree {} is below 2", g.degree),
                ));
            }
            let dg = &self.differential[i];
            if dg.is_zero() {
                continue;
            }
            if let Some((m, _)) = dg.terms().find(|(m, _)| m.degree() != g.degree + 1) {
                violations.push(local(
                    ViolationKind::WrongDegree,
                    format!(
                        "differential term {} has degree {}, expected {}",
                        self.algebra.render_monomial(m),
                        m.degree(),
                        g.degree + 1
                    ),
                ));
            }
            if let Some((m, _)) = dg.terms().find(|(m, _)| m.length() <= 1) {
                violations.push(local(
                    ViolationKind::LinearTerm,
                    format!(
                        "differential has non-decomposable term {:?}, violating minimality",
                        if m.is_unit() {
                            "1".to_string()
                        } else {
                            self.algebra.render_monomial(m)
                        }
                    ),
                ));
            }
            match self.apply_differential(dg) {
                Ok(ddg) if !ddg.is_zero() => violations.push(local(
                    ViolationKind::SquareNonzero,
                    format!("d(d({})) = {} is not zero", g.name, self.render(&ddg)),
                )),
                _ => {}
            }
        }
        if let Some(t) = &self.declared_rank_type {
            let limit = self.truncation_degree.unwrap_or(u32::MAX);
            let mut declared: Vec<u32> = t
                .all_degrees()
                .into_iter()
                .filter(|&d| d <= limit)
                .collect();
            let mut actual: Vec<u32> = self
                .generators()
                .iter()
                .map(|g| g.degree)
                .filter(|&d| d <= limit)
                .collect();
            declared.sort_unstable();
            actual.sort_unstable();
            if declared != actual {
                violations.push(Violation {
                    generator: None,
                    kind: ViolationKind::RankTypeMismatch,
                    reason: format!(
                        "generator degrees {actual:?} do not match rank type {t} up to degree {}",
                        self.truncation_degree
                            .map_or("any".to_string(), |d| d.to_string())
                    ),
                });
            }
        }
        violations
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }
}
