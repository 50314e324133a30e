use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use super::{AlgebraError, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Generator {
    pub name: String,
    pub degree: u32,
}

impl Generator {
    pub fn new(name: impl Into<String>, degree: u32) -> Self {
        Generator {
            name: name.into(),
            degree,
        }
    }

    pub fn is_odd(&self) -> bool {
        self.degree % 2 == 1
    }
}

pub(crate) fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    let Some(first) = chars.next() else {
        return false;
    };
    if !(first.is_ascii_alphabetic() || first == '_') {
        return false;
    }
    let body = name.trim_end_matches('\'');
    body.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Exponent vector over the generator list of a [`FreeAlgebra`].
///
/// Ordered by degree, then with larger exponents on earlier generators first,
/// so `x^2` precedes `x'^2` when `x` is declared before `x'`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    degree: u32,
    exponents: Vec<u32>,
}

impl Monomial {
    pub fn unit(generators: usize) -> Self {
        Monomial {
            degree: 0,
            exponents: vec![0; generators],
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    /// Total number of generator factors.
    pub fn length(&self) -> u32 {
        self.exponents.iter().sum()
    }

    pub fn is_unit(&self) -> bool {
        self.degree == 0
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| other.exponents.cmp(&self.exponents))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A rational combination of monomials; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    generators: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(generators: usize) -> Self {
        Polynomial {
            generators,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(generators: usize, c: Rational) -> Self {
        Self::term(Monomial::unit(generators), c)
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        let mut p = Polynomial::zero(m.exponents.len());
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(m, Rational::one())
    }

    pub fn generator_count(&self) -> usize {
        self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// The common degree of all terms, `None` for zero or mixed degrees.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    fn check(&self, other: &Polynomial) -> Result<(), AlgebraError> {
        if self.generators != other.generators {
            return Err(AlgebraError::ContextMismatch {
                left: self.generators,
                right: other.generators,
            });
        }
        Ok(())
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m.clone()).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial, AlgebraError> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial, AlgebraError> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.generators);
        }
        Polynomial {
            generators: self.generators,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }
}

/// The free graded-commutative algebra `ΛV` on an ordered generator list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeAlgebra {
    generators: Vec<Generator>,
}

impl FreeAlgebra {
    pub fn new(generators: Vec<Generator>) -> Result<Self, AlgebraError> {
        for (i, g) in generators.iter().enumerate() {
            if g.degree < 2 {
                return Err(AlgebraError::BadDegree {
                    name: g.name.clone(),
                    degree: g.degree,
                });
            }
            if !valid_name(&g.name) {
                return Err(AlgebraError::BadName(g.name.clone()));
            }
            if generators[..i].iter().any(|h| h.name == g.name) {
                return Err(AlgebraError::DuplicateGenerator(g.name.clone()));
            }
        }
        Ok(FreeAlgebra { generators })
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g.name == name)
    }

    pub fn unit(&self) -> Monomial {
        Monomial::unit(self.len())
    }

    /// `generator^exponent`, or `None` for an odd generator squared.
    pub fn power(&self, index: usize, exponent: u32) -> Option<Monomial> {
        let g = &self.generators[index];
        if g.is_odd() && exponent > 1 {
            return None;
        }
        let mut m = self.unit();
        m.exponents[index] = exponent;
        m.degree = g.degree * exponent;
        Some(m)
    }

    pub fn generator(&self, index: usize) -> Monomial {
        self.power(index, 1).expect("first power always exists")
    }

    pub fn generator_poly(&self, name: &str) -> Option<Polynomial> {
        self.index_of(name)
            .map(|i| Polynomial::monomial(self.generator(i)))
    }

    pub fn monomial_from_exponents(
        &self,
        exponents: Vec<u32>,
    ) -> Result<Option<Monomial>, AlgebraError> {
        if exponents.len() != self.len() {
            return Err(AlgebraError::ContextMismatch {
                left: self.len(),
                right: exponents.len(),
            });
        }
        let mut degree = 0;
        for (g, &e) in self.generators.iter().zip(&exponents) {
            if g.is_odd() && e > 1 {
                return Ok(None);
            }
            degree += g.degree * e;
        }
        Ok(Some(Monomial { degree, exponents }))
    }

    fn check_monomial(&self, m: &Monomial) -> Result<(), AlgebraError> {
        if m.exponents.len() != self.len() {
            return Err(AlgebraError::ContextMismatch {
                left: self.len(),
                right: m.exponents.len(),
            });
        }
        Ok(())
    }

    fn check_poly(&self, p: &Polynomial) -> Result<(), AlgebraError> {
        if p.generators != self.len() {
            return Err(AlgebraError::ContextMismatch {
                left: self.len(),
                right: p.generators,
            });
        }
        Ok(())
    }

    /// `u · v` in canonical form with its Koszul sign, or `None` when an odd
    /// generator repeats.
    pub fn monomial_product(
        &self,
        u: &Monomial,
        v: &Monomial,
    ) -> Result<Option<(bool, Monomial)>, AlgebraError> {
        self.check_monomial(u)?;
        self.check_monomial(v)?;
        let mut negative = false;
        // Odd factors of u with index above i each swap past v's odd factor i.
        let mut odd_in_u_above = 0u32;
        for i in (0..self.len()).rev() {
            if !self.generators[i].is_odd() {
                continue;
            }
            if u.exponents[i] > 0 && v.exponents[i] > 0 {
                return Ok(None);
            }
            if v.exponents[i] > 0 && odd_in_u_above % 2 == 1 {
                negative = !negative;
            }
            if u.exponents[i] > 0 {
                odd_in_u_above += 1;
            }
        }
        let exponents = u
            .exponents
            .iter()
            .zip(&v.exponents)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Some((
            negative,
            Monomial {
                degree: u.degree + v.degree,
                exponents,
            },
        )))
    }

    pub fn multiply(&self, p: &Polynomial, q: &Polynomial) -> Result<Polynomial, AlgebraError> {
        self.check_poly(p)?;
        self.check_poly(q)?;
        let mut out = Polynomial::zero(self.len());
        for (u, a) in &p.terms {
            for (v, b) in &q.terms {
                if let Some((negative, w)) = self.monomial_product(u, v)? {
                    let c = a * b;
                    out.add_term(w, if negative { -c } else { c });
                }
            }
        }
        Ok(out)
    }

    /// All monomials of total degree `k`, in canonical order.
    pub fn basis_of_degree(&self, k: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut exps = vec![0u32; self.len()];
        self.fill_basis(0, k, &mut exps, &mut out);
        out.sort();
        out
    }

    fn fill_basis(
        &self,
        index: usize,
        remaining: u32,
        exps: &mut Vec<u32>,
        out: &mut Vec<Monomial>,
    ) {
        if index == self.len() {
            if remaining == 0 {
                out.push(Monomial {
                    degree: exps
                        .iter()
                        .zip(&self.generators)
                        .map(|(e, g)| e * g.degree)
                        .sum(),
                    exponents: exps.clone(),
                });
            }
            return;
        }
        let g = &self.generators[index];
        let max = if g.is_odd() { 1 } else { remaining / g.degree };
        for e in 0..=max.min(remaining / g.degree) {
            exps[index] = e;
            self.fill_basis(index + 1, remaining - e * g.degree, exps, out);
        }
        exps[index] = 0;
    }

    pub fn render_monomial(&self, m: &Monomial) -> String {
        let factors: Vec<String> = self
            .generators
            .iter()
            .zip(&m.exponents)
            .filter(|(_, &e)| e > 0)
            .map(|(g, &e)| {
                if e == 1 {
                    g.name.clone()
                } else {
                    format!("{}^{}", g.name, e)
                }
            })
            .collect();
        factors.join("*")
    }

    /// Text form accepted by [`super::parse_polynomial`].
    pub fn render(&self, p: &Polynomial) -> String {
        if p.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (m, c)) in p.terms.iter().enumerate() {
            let negative = c.is_negative();
            let magnitude = c.abs();
            match (i, negative) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let body = self.render_monomial(m);
            if m.is_unit() {
                out.push_str(&magnitude.to_string());
            } else if magnitude.is_one() {
                out.push_str(&body);
            } else {
                out.push_str(&format!("{magnitude}*{body}"));
            }
        }
        out
    }

    pub fn display<'a>(&'a self, p: &'a Polynomial) -> impl fmt::Display + 'a {
        struct Shown<'a>(&'a FreeAlgebra, &'a Polynomial);
        impl fmt::Display for Shown<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&self.0.render(self.1))
            }
        }
        Shown(self, p)
    }
}
