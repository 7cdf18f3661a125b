//! Exhaustive Harder-Narasimhan search over small prime fields.
//!
//! For flags `F_1..F_s` on `GF(q)^r` and antidominant weights `θ_1..θ_s`, the
//! slope of a nonzero subspace `S` is `μ(Pos(S,F_1), ..., Pos(S,F_s))`. The
//! search visits every nonzero subspace once, as the row space of a reduced
//! row echelon matrix, and reports the minimal slope, the largest dimension
//! attaining it and how many subspaces share both.

use itertools::Itertools;
use num_rational::BigRational;

use crate::combinatorics::{slope, PositionTuple, Weight};
use crate::error::{shape_err, Error, Result};
use crate::field::PrimeField;
use crate::flag::{position_from_adapted, Flag, SubspaceBasis};
use crate::matrix::Mat;

pub const DEFAULT_BUDGET: u64 = 1_000_000;

#[derive(Clone, Debug)]
pub struct HnResult {
    pub subspace: SubspaceBasis<u64>,
    pub positions: PositionTuple,
    pub slope: BigRational,
    /// Number of subspaces with the minimal slope and the maximal dimension
    /// among minimizers.
    pub multiplicity: u64,
    pub visited: u64,
}

/// Number of `d`-dimensional subspaces of `GF(q)^r`, saturating.
pub fn gaussian_binomial(r: usize, d: usize, q: u64) -> u64 {
    if d > r {
        return 0;
    }
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..d {
        let top = (q as u128).checked_pow((r - i) as u32).map(|x| x - 1);
        let bottom = (q as u128).pow((i + 1) as u32) - 1;
        match top.and_then(|t| num.checked_mul(t)) {
            Some(v) => num = v,
            None => return u64::MAX,
        }
        den *= bottom;
        let g = num_integer::gcd(num, den);
        num /= g;
        den /= g;
    }
    u64::try_from(num / den).unwrap_or(u64::MAX)
}

/// Total number of nonzero subspaces of `GF(q)^r`, saturating.
pub fn subspace_count(r: usize, q: u64) -> u64 {
    (1..=r).fold(0u64, |acc, d| acc.saturating_add(gaussian_binomial(r, d, q)))
}

pub fn hn_minimizer_exhaustive(
    f: &PrimeField,
    flags: &[Flag<u64>],
    theta: &[Weight],
    budget: u64,
) -> Result<HnResult> {
    if flags.is_empty() || flags.len() != theta.len() {
        return Err(shape_err!("{} flags and {} weights", flags.len(), theta.len()));
    }
    let r = flags[0].space_dim();
    if r == 0 {
        return Err(shape_err!("the ambient space must be nonzero"));
    }
    for (k, (fl, th)) in flags.iter().zip(theta).enumerate() {
        if fl.space_dim() != r || th.len() != r {
            return Err(shape_err!("flag/weight {} does not live on dimension {r}", k + 1));
        }
        th.require_antidominant(&format!("weight {}", k + 1))?;
    }
    let q = f.modulus();
    let total = subspace_count(r, q);
    if total > budget {
        return Err(Error::Resource(format!(
            "GF({q})^{r} has {total} nonzero subspaces, budget is {budget}"
        )));
    }
    let inverses: Vec<Mat<u64>> = flags.iter().map(|fl| fl.basis().inverse(f)).collect::<Result<_>>()?;

    let mut best: Option<(BigRational, usize, Mat<u64>, PositionTuple)> = None;
    let mut multiplicity = 0u64;
    let mut visited = 0u64;
    for d in 1..=r {
        for pivots in (0..r).combinations(d) {
            // free entries: row i, columns after pivot i that are not pivots
            let free: Vec<(usize, usize)> = (0..d)
                .flat_map(|i| ((pivots[i] + 1)..r).filter(|c| !pivots.contains(c)).map(move |c| (i, c)))
                .collect();
            // multi_cartesian_product of zero factors is empty, not one unit
            let assignments: Box<dyn Iterator<Item = Vec<u64>>> = if free.is_empty() {
                Box::new(std::iter::once(Vec::new()))
            } else {
                Box::new((0..free.len()).map(|_| 0..q).multi_cartesian_product())
            };
            for values in assignments {
                visited += 1;
                let mut basis = Mat::zeros(f, r, d);
                for (i, &p) in pivots.iter().enumerate() {
                    basis.set(p, i, 1);
                }
                for (&(i, c), v) in free.iter().zip(&values) {
                    basis.set(c, i, *v);
                }
                let parts = inverses
                    .iter()
                    .map(|inv| position_from_adapted(f, &inv.mul(f, &basis)?))
                    .collect::<Result<Vec<_>>>()?;
                let positions = PositionTuple::new(parts)?;
                let mu = slope(&positions, theta)?;
                let better = match &best {
                    None => true,
                    Some((m, bd, _, _)) => mu < *m || (mu == *m && d > *bd),
                };
                let tie = matches!(&best, Some((m, bd, _, _)) if mu == *m && d == *bd);
                if better {
                    best = Some((mu, d, basis, positions));
                    multiplicity = 1;
                } else if tie {
                    multiplicity += 1;
                }
            }
        }
    }
    let (slope, _, basis, positions) = best.expect("at least one nonzero subspace");
    Ok(HnResult {
        subspace: SubspaceBasis::new(f, basis)?,
        positions,
        slope,
        multiplicity,
        visited,
    })
}
