//! Floating-point check of the eigenvalue variational principle:
//! for Hermitian `X` with spectrum `ξ` (nonincreasing) and eigenflag `F_X`,
//! `min { tr(P_S X) : Pos(S, F_X) = J } = Σ_{j ∈ J} ξ(j)`.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::combinatorics::CardSubset;
use crate::error::{domain_err, shape_err, Result};

pub const DEFAULT_TOLERANCE: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VariationalReport {
    pub xi: Vec<f64>,
    pub j: CardSubset,
    /// `Σ_{j ∈ J} ξ(j)`.
    pub bound: f64,
    /// `|tr(P_S X) - bound|` for `S` spanned by the eigenvectors at `J`.
    pub eigenvector_error: f64,
    pub trials: usize,
    pub min_trace: f64,
    /// `min_trace - bound`; nonnegative up to the tolerance.
    pub margin: f64,
    pub tolerance: f64,
    pub passed: bool,
    /// Index of the first sample that broke the bound, if any.
    pub offending_sample: Option<usize>,
}

fn gaussian<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

/// Unitary factor of the QR decomposition of a complex Gaussian matrix.
pub fn random_unitary<R: Rng + ?Sized>(r: usize, rng: &mut R) -> DMatrix<Complex64> {
    DMatrix::from_fn(r, r, |_, _| gaussian(rng)).qr().q()
}

/// `tr(P_S X)` for `S` the column space of `s` (full column rank).
pub fn projected_trace(x: &DMatrix<Complex64>, s: &DMatrix<Complex64>) -> f64 {
    let q = s.clone().qr().q();
    (0..q.ncols())
        .map(|a| {
            let v: DVector<Complex64> = q.column(a).into_owned();
            v.dotc(&(x * &v)).re
        })
        .sum()
}

pub fn variational_check<R: Rng + ?Sized>(
    xi: &[f64],
    j: &CardSubset,
    trials: usize,
    tolerance: f64,
    rng: &mut R,
) -> Result<VariationalReport> {
    let r = xi.len();
    if j.ground() != r {
        return Err(shape_err!("subset of [{}] for a spectrum of length {r}", j.ground()));
    }
    if let Some(a) = xi.windows(2).position(|w| w[0] < w[1]) {
        return Err(domain_err!("spectrum is not nonincreasing at entries {} and {}", a + 1, a + 2));
    }
    if xi.iter().any(|x| !x.is_finite()) || tolerance.is_nan() || tolerance < 0.0 {
        return Err(domain_err!("spectrum and tolerance must be finite"));
    }
    let u = random_unitary(r, rng);
    let diag = DMatrix::from_diagonal(&DVector::from_iterator(r, xi.iter().map(|&x| Complex64::new(x, 0.0))));
    let x = &u * diag * u.adjoint();
    let bound: f64 = j.elements().iter().map(|&a| xi[a - 1]).sum();
    let scale = xi.iter().fold(1.0f64, |m, v| m.max(v.abs()));
    let tol = tolerance * scale;

    let d = j.len();
    let eig = DMatrix::from_fn(r, d, |i, a| u[(i, j.at(a + 1) - 1)]);
    let eigenvector_error = if d == 0 { 0.0 } else { (projected_trace(&x, &eig) - bound).abs() };

    // s(a) = u(J(a)) + Σ_{i ∉ J, i < J(a)} c_i u(i)
    let jc = j.complement();
    let mut min_trace = f64::INFINITY;
    let mut offending = None;
    for t in 0..trials {
        if d == 0 {
            break;
        }
        let mut coords = DMatrix::<Complex64>::zeros(r, d);
        for a in 1..=d {
            coords[(j.at(a) - 1, a - 1)] = Complex64::new(1.0, 0.0);
            for &i in jc.elements().iter().filter(|&&i| i < j.at(a)) {
                coords[(i - 1, a - 1)] = gaussian(rng);
            }
        }
        let trace = projected_trace(&x, &(&u * coords));
        min_trace = min_trace.min(trace);
        if trace < bound - tol && offending.is_none() {
            offending = Some(t);
        }
    }
    if d == 0 || trials == 0 {
        min_trace = bound;
    }
    Ok(VariationalReport {
        xi: xi.to_vec(),
        j: j.clone(),
        bound,
        eigenvector_error,
        trials,
        min_trace,
        margin: min_trace - bound,
        tolerance: tol,
        passed: offending.is_none() && eigenvector_error <= tol,
        offending_sample: offending,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn unitary_is_unitary() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let u = random_unitary(5, &mut rng);
        let err = (&u * u.adjoint() - DMatrix::identity(5, 5)).norm();
        assert!(err < 1e-12, "{err}");
    }

    #[test]
    fn full_subset_gives_full_trace() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let xi = [3.0, 1.5, -0.25, -2.0];
        let rep = variational_check(&xi, &CardSubset::full(4), 5, DEFAULT_TOLERANCE, &mut rng).unwrap();
        assert!(rep.passed);
        assert!((rep.min_trace - xi.iter().sum::<f64>()).abs() < 1e-9);
    }

    #[test]
    fn bound_holds_on_samples() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let j = CardSubset::new(5, vec![2, 5]).unwrap();
        let rep = variational_check(&[2.0, 1.0, 0.5, 0.0, -1.0], &j, 30, DEFAULT_TOLERANCE, &mut rng).unwrap();
        assert!(rep.passed, "{rep:?}");
        assert!(rep.margin >= -1e-9);
    }

    #[test]
    fn rejects_increasing_spectrum() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        assert!(variational_check(&[0.0, 1.0], &CardSubset::full(2), 1, 1e-9, &mut rng).is_err());
    }
}
