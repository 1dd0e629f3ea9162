//! Cumulant-level free convolution, compound free Poisson laws, and exact
//! Hankel positivity checks used as finite-order witnesses of free infinite
//! divisibility.
//!
//! A freely infinitely divisible law has `(κ_{n+2})_{n≥0}` equal to a moment
//! sequence, so every Hankel truncation `[κ_{i+j+2}]` is positive
//! semidefinite. Only that necessary direction is checked: a passing verdict
//! means "consistent at this order", never a proof.

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::cumulant::CumulantSequence;
use crate::error::{Error, Result};
use crate::fock::RhoMoments;
use crate::rational::{self, Rational};

/// `κ(a ⊞ b) = κ(a) + κ(b)`, orders `1..=order`.
pub fn boxplus(
    a: &CumulantSequence,
    b: &CumulantSequence,
    order: usize,
) -> Result<CumulantSequence> {
    let values = (1..=order)
        .map(|k| Ok(a.get(k)? + b.get(k)?))
        .collect::<Result<Vec<_>>>()?;
    Ok(CumulantSequence::new(values))
}

/// Cumulants of the compound free Poisson law driven by `rho`: `κ_n = m_n(ρ)`.
pub fn compound_poisson_from_rho(rho: &RhoMoments, order: usize) -> Result<CumulantSequence> {
    let values = (1..=order)
        .map(|k| rho.get(k).cloned())
        .collect::<Result<Vec<_>>>()?;
    Ok(CumulantSequence::new(values))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FidVerdict {
    /// Highest cumulant order entering the matrix.
    pub order: usize,
    pub psd: bool,
    /// Row (0-based) at which positivity failed.
    pub failure_index: Option<usize>,
    #[serde(with = "rational::vec_as_strings")]
    pub pivots: Vec<Rational>,
}

/// Outcome of [`psd_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PsdOutcome {
    pub psd: bool,
    pub failure_index: Option<usize>,
    pub pivots: Vec<Rational>,
}

/// Exact positive-semidefiniteness test of a symmetric rational matrix by
/// symmetric elimination with diagonal pivoting.
///
/// At every step a negative diagonal fails immediately; otherwise a positive
/// diagonal is eliminated (its Schur complement replaces the remainder). When
/// only zero diagonals remain, the remainder must vanish entirely.
pub fn psd_check(matrix: &[Vec<Rational>]) -> Result<PsdOutcome> {
    let n = matrix.len();
    if let Some(row) = matrix.iter().find(|row| row.len() != n) {
        return Err(Error::Dimension {
            expected: n,
            found: row.len(),
        });
    }
    for (i, row) in matrix.iter().enumerate() {
        if let Some(j) = (0..i).find(|&j| row[j] != matrix[j][i]) {
            return Err(Error::Domain(format!(
                "matrix is not symmetric at ({i}, {j})"
            )));
        }
    }
    let mut a: Vec<Vec<Rational>> = matrix.to_vec();
    let mut active: Vec<usize> = (0..n).collect();
    let mut pivots = Vec::with_capacity(n);
    let fail = |index: usize, pivots: Vec<Rational>| PsdOutcome {
        psd: false,
        failure_index: Some(index),
        pivots,
    };

    while !active.is_empty() {
        if let Some(&neg) = active.iter().find(|&&i| a[i][i].is_negative()) {
            pivots.push(a[neg][neg].clone());
            return Ok(fail(neg, pivots));
        }
        let Some(pos) = active.iter().position(|&i| a[i][i].is_positive()) else {
            for &i in &active {
                if active.iter().any(|&j| !a[i][j].is_zero()) {
                    pivots.push(Rational::zero());
                    return Ok(fail(i, pivots));
                }
                pivots.push(Rational::zero());
            }
            break;
        };
        let p = active.remove(pos);
        let pivot = a[p][p].clone();
        for &i in &active {
            if a[i][p].is_zero() {
                continue;
            }
            let factor = &a[i][p] / &pivot;
            for &j in &active {
                let delta = &factor * &a[p][j];
                a[i][j] -= delta;
            }
        }
        pivots.push(pivot);
    }
    Ok(PsdOutcome {
        psd: true,
        failure_index: None,
        pivots,
    })
}

/// `[κ_{i+j+2}]_{0≤i,j<size}` positive semidefinite.
pub fn hankel_fid_check(seq: &CumulantSequence, size: usize) -> Result<FidVerdict> {
    if size == 0 {
        return Err(Error::Domain("Hankel size must be at least 1".into()));
    }
    let order = 2 * size;
    let kappas = (1..=order)
        .map(|k| seq.get(k))
        .collect::<Result<Vec<_>>>()?;
    let matrix: Vec<Vec<Rational>> = (0..size)
        .map(|i| (0..size).map(|j| kappas[i + j + 1].clone()).collect())
        .collect();
    let outcome = psd_check(&matrix)?;
    Ok(FidVerdict {
        order,
        psd: outcome.psd,
        failure_index: outcome.failure_index,
        pivots: outcome.pivots,
    })
}
