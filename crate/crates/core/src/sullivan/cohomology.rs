//! Degreewise cohomology `dim H^i = dim ker(d: A^i → A^{i+1}) - rank(d: A^{i-1} → A^i)`.

use std::collections::HashMap;

use num_traits::Zero;
use serde::Serialize;
use thiserror::Error;

use super::model::{SullivanModel, Violation};
use crate::algebra::{AlgebraError, Monomial, Polynomial, Rational, RationalMatrix};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CohomologyError {
    #[error("model is invalid: {}", .0.iter().map(ToString::to_string).collect::<Vec<_>>().join("; "))]
    Invalid(Vec<Violation>),
    #[error("degree {requested} exceeds the truncation degree {truncation}")]
    BeyondTruncation { requested: u32, truncation: u32 },
    #[error("model is truncated; total cohomology is unavailable")]
    Truncated,
    #[error("formal dimension unknown: declare a rank type")]
    UnknownFormalDimension,
    #[error("H^{degree} = {dim} is nonzero above the formal dimension {fd}")]
    NonVanishing { degree: u32, dim: usize, fd: u32 },
    #[error("profile is incomplete")]
    Incomplete,
    #[error("element is not homogeneous")]
    NotHomogeneous,
    #[error("element is not a cocycle")]
    NotCocycle,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CohomologyProfile {
    /// `dims[i] = dim H^i`.
    pub dims: Vec<usize>,
    /// Every nonzero degree is covered and the model is untruncated.
    pub complete: bool,
}

impl CohomologyProfile {
    pub fn total(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn top_degree(&self) -> Option<u32> {
        self.dims.iter().rposition(|&d| d != 0).map(|i| i as u32)
    }

    pub fn get(&self, degree: u32) -> Option<usize> {
        self.dims.get(degree as usize).copied()
    }
}

/// Monomial bases of `A^0 ..= A^{top}` and the matrices of `d` between them.
#[derive(Debug, Clone)]
pub struct DifferentialMatrices {
    bases: Vec<Vec<Monomial>>,
    /// `matrices[i]` represents `d: A^i → A^{i+1}` (rows index `A^{i+1}`).
    matrices: Vec<RationalMatrix>,
}

impl DifferentialMatrices {
    /// Bases up to degree `top + 1`, matrices for `d: A^i → A^{i+1}`, `i <= top`.
    pub fn build(model: &SullivanModel, top: u32) -> Result<Self, AlgebraError> {
        let algebra = model.algebra();
        let bases: Vec<Vec<Monomial>> = (0..=top + 1).map(|k| algebra.basis_of_degree(k)).collect();
        let mut matrices = Vec::with_capacity(top as usize + 1);
        for i in 0..=top as usize {
            let target = &bases[i + 1];
            let index: HashMap<&Monomial, usize> =
                target.iter().enumerate().map(|(k, m)| (m, k)).collect();
            let mut mat = RationalMatrix::zeros(target.len(), bases[i].len());
            for (col, m) in bases[i].iter().enumerate() {
                let dm = model.differential_of_monomial(m)?;
                for (t, c) in dm.terms() {
                    let row = *index.get(t).expect("differential raises degree by one");
                    mat.set(row, col, c.clone());
                }
            }
            matrices.push(mat);
        }
        Ok(DifferentialMatrices { bases, matrices })
    }

    pub fn basis(&self, degree: u32) -> &[Monomial] {
        &self.bases[degree as usize]
    }

    pub fn matrix(&self, degree: u32) -> &RationalMatrix {
        &self.matrices[degree as usize]
    }

    pub fn top(&self) -> u32 {
        self.matrices.len() as u32 - 1
    }

    /// `dim H^i` for `0 <= i <= top`.
    pub fn dims(&self) -> Vec<usize> {
        let ranks: Vec<usize> = self.matrices.iter().map(RationalMatrix::rank).collect();
        (0..self.matrices.len())
            .map(|i| {
                let kernel = self.bases[i].len() - ranks[i];
                let image = if i == 0 { 0 } else { ranks[i - 1] };
                kernel - image
            })
            .collect()
    }

    pub fn coordinates(&self, p: &Polynomial, degree: u32) -> Vec<Rational> {
        self.bases[degree as usize]
            .iter()
            .map(|m| p.coefficient(m))
            .collect()
    }
}

fn require_valid(model: &SullivanModel) -> Result<(), CohomologyError> {
    let violations = model.validate();
    if violations.is_empty() {
        Ok(())
    } else {
        Err(CohomologyError::Invalid(violations))
    }
}

fn check_truncation(model: &SullivanModel, up_to: u32) -> Result<(), CohomologyError> {
    match model.truncation_degree() {
        Some(truncation) if up_to > truncation => Err(CohomologyError::BeyondTruncation {
            requested: up_to,
            truncation,
        }),
        _ => Ok(()),
    }
}

/// `dim H^i` for `0 <= i <= up_to`.
///
/// For a truncated model `H^i` is only trusted when all generators of degree
/// `<= i` are present, so `up_to` may not exceed the truncation degree.
pub fn cohomology_profile(
    model: &SullivanModel,
    up_to: u32,
) -> Result<CohomologyProfile, CohomologyError> {
    require_valid(model)?;
    check_truncation(model, up_to)?;
    let dims = DifferentialMatrices::build(model, up_to)?.dims();
    let complete = !model.is_truncated()
        && model
            .expected_formal_dimension()
            .is_some_and(|fd| up_to > 2 * fd && dims[fd as usize + 1..].iter().all(|&d| d == 0));
    Ok(CohomologyProfile { dims, complete })
}

/// Scans to `2·fd + 1`; anything nonzero above `fd` is an error. The returned
/// dims stop at `fd`.
pub fn full_profile(model: &SullivanModel) -> Result<CohomologyProfile, CohomologyError> {
    if model.is_truncated() {
        return Err(CohomologyError::Truncated);
    }
    let fd = model
        .expected_formal_dimension()
        .ok_or(CohomologyError::UnknownFormalDimension)?;
    let mut profile = cohomology_profile(model, 2 * fd + 1)?;
    if let Some((degree, &dim)) = profile
        .dims
        .iter()
        .enumerate()
        .skip(fd as usize + 1)
        .find(|(_, &d)| d != 0)
    {
        return Err(CohomologyError::NonVanishing {
            degree: degree as u32,
            dim,
            fd,
        });
    }
    profile.dims.truncate(fd as usize + 1);
    profile.complete = true;
    Ok(profile)
}

/// `(χ, χ_π)`: the cohomological and the homotopy Euler characteristic.
pub fn euler_characteristics(model: &SullivanModel) -> Result<(i64, i64), CohomologyError> {
    let profile = full_profile(model)?;
    let chi = profile
        .dims
        .iter()
        .enumerate()
        .map(|(i, &d)| if i % 2 == 0 { d as i64 } else { -(d as i64) })
        .sum();
    let even = model.generators().iter().filter(|g| !g.is_odd()).count() as i64;
    let odd = model.generators().len() as i64 - even;
    Ok((chi, even - odd))
}

/// `dims[i] == dims[n - i]` with `n` the top nonzero degree.
pub fn poincare_check(profile: &CohomologyProfile) -> Result<bool, CohomologyError> {
    if !profile.complete {
        return Err(CohomologyError::Incomplete);
    }
    let Some(n) = profile.top_degree() else {
        return Ok(false);
    };
    let n = n as usize;
    Ok((0..=n).all(|i| profile.dims[i] == profile.dims[n - i]))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct HilaliCheck {
    pub dim_h: usize,
    pub dim_v: usize,
    pub holds: bool,
}

pub fn check_hilali(model: &SullivanModel) -> Result<HilaliCheck, CohomologyError> {
    let profile = full_profile(model)?;
    let dim_h = profile.total();
    let dim_v = model.generators().len();
    Ok(HilaliCheck {
        dim_h,
        dim_v,
        holds: dim_h >= dim_v,
    })
}

/// Whether a cocycle represents a nonzero class.
pub fn is_nonzero_class(model: &SullivanModel, p: &Polynomial) -> Result<bool, CohomologyError> {
    require_valid(model)?;
    if p.is_zero() {
        return Ok(false);
    }
    let degree = p
        .homogeneous_degree()
        .ok_or(CohomologyError::NotHomogeneous)?;
    check_truncation(model, degree)?;
    if !model.apply_differential(p)?.is_zero() {
        return Err(CohomologyError::NotCocycle);
    }
    if degree == 0 {
        return Ok(true);
    }
    let mats = DifferentialMatrices::build(model, degree - 1)?;
    let incoming = mats.matrix(degree - 1);
    let target = mats.coordinates(p, degree);
    debug_assert!(target.iter().any(|c| !c.is_zero()));
    Ok(incoming.with_column(&target).rank() > incoming.rank())
}
