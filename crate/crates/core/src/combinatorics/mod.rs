//! Subset and weight arithmetic: dimensions, composition, quotient, exponent,
//! expected dimension, slopes and the subset/weight dictionary.

mod subset;
mod tuple;
mod weight;

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;

pub use subset::CardSubset;
pub use tuple::PositionTuple;
pub use weight::{lambda_of_subset, subset_of_lambda, Weight};

use crate::error::{domain_err, shape_err, Result};

/// All `cardinality`-subsets of `[ground]` in lexicographic order.
pub fn enumerate_subsets(cardinality: usize, ground: usize) -> Result<Vec<CardSubset>> {
    if cardinality > ground {
        return Err(domain_err!("cannot choose {cardinality} elements from [{ground}]"));
    }
    Ok((1..=ground)
        .combinations(cardinality)
        .map(|el| CardSubset::new(ground, el).expect("combinations are increasing"))
        .collect())
}

/// All of `Subsets(r, n, s)`, lexicographic in the part lists.
pub fn enumerate_tuples(r: usize, n: usize, s: usize) -> Result<Vec<PositionTuple>> {
    if s == 0 {
        return Err(shape_err!("tuples need s >= 1"));
    }
    let subsets = enumerate_subsets(r, n)?;
    Ok(std::iter::repeat(subsets)
        .take(s)
        .multi_cartesian_product()
        .map(|parts| PositionTuple::new(parts).expect("uniform parts"))
        .collect())
}

/// `mu_theta(J) = (1/d) sum_k sum_{a in J_k} theta_k(a)` as an exact rational.
pub fn slope(j: &PositionTuple, theta: &[Weight]) -> Result<BigRational> {
    if theta.len() != j.s() {
        return Err(shape_err!("{} weights supplied for a {}-tuple", theta.len(), j.s()));
    }
    if j.r() == 0 {
        return Err(domain_err!("slope of the zero subspace is undefined"));
    }
    let mut total = BigInt::from(0);
    for (k, (part, th)) in j.parts().iter().zip(theta).enumerate() {
        if th.len() != part.ground() {
            return Err(shape_err!(
                "weight {} has length {}, expected {}",
                k + 1,
                th.len(),
                part.ground()
            ));
        }
        th.require_antidominant(&format!("weight {}", k + 1))?;
        total += th.pair(part);
    }
    Ok(BigRational::new(total, BigInt::from(j.r() as i64)))
}
