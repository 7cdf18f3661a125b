use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::{lambda_of_subset, CardSubset, Weight};
use crate::error::{shape_err, Result};

/// An `s`-tuple of subsets of `[n]`, all of the same cardinality `r`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawTuple", into = "RawTuple")]
pub struct PositionTuple {
    parts: Vec<CardSubset>,
}

#[derive(Serialize, Deserialize)]
struct RawTuple {
    n: usize,
    parts: Vec<Vec<usize>>,
}

impl TryFrom<RawTuple> for PositionTuple {
    type Error = crate::Error;

    fn try_from(raw: RawTuple) -> Result<Self> {
        PositionTuple::from_lists(raw.n, &raw.parts)
    }
}

impl From<PositionTuple> for RawTuple {
    fn from(t: PositionTuple) -> Self {
        RawTuple {
            n: t.n(),
            parts: t.parts.iter().map(|p| p.elements().to_vec()).collect(),
        }
    }
}

impl PositionTuple {
    pub fn new(parts: Vec<CardSubset>) -> Result<Self> {
        let first = parts.first().ok_or_else(|| shape_err!("a tuple needs at least one part"))?;
        for (k, p) in parts.iter().enumerate() {
            if p.ground() != first.ground() || p.len() != first.len() {
                return Err(shape_err!(
                    "part {} is a {}-subset of [{}], expected a {}-subset of [{}]",
                    k + 1,
                    p.len(),
                    p.ground(),
                    first.len(),
                    first.ground()
                ));
            }
        }
        Ok(PositionTuple { parts })
    }

    pub fn from_lists(n: usize, parts: &[Vec<usize>]) -> Result<Self> {
        let parts = parts
            .iter()
            .map(|p| CardSubset::new(n, p.clone()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }

    /// `([r], ..., [r])` with `s` parts.
    pub fn full(r: usize, s: usize) -> Self {
        PositionTuple { parts: vec![CardSubset::full(r); s] }
    }

    pub fn parts(&self) -> &[CardSubset] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<CardSubset> {
        self.parts
    }

    /// Shared cardinality.
    pub fn r(&self) -> usize {
        self.parts[0].len()
    }

    /// Shared ground.
    pub fn n(&self) -> usize {
        self.parts[0].ground()
    }

    pub fn s(&self) -> usize {
        self.parts.len()
    }

    /// `r(n-r) - sum_k (r(n-r) - dim I_k)`; may be negative.
    pub fn edim(&self) -> i64 {
        let r = self.r() as i64;
        let grass = r * (self.n() as i64 - r);
        grass - self.parts.iter().map(|p| grass - p.dim() as i64).sum::<i64>()
    }

    fn check_inner(&self, inner: &PositionTuple) -> Result<()> {
        if inner.s() != self.s() {
            return Err(shape_err!("tuples have {} and {} parts", self.s(), inner.s()));
        }
        Ok(())
    }

    fn componentwise(
        &self,
        inner: &PositionTuple,
        op: impl Fn(&CardSubset, &CardSubset) -> Result<CardSubset>,
    ) -> Result<PositionTuple> {
        self.check_inner(inner)?;
        let parts = self
            .parts
            .iter()
            .zip(&inner.parts)
            .map(|(a, b)| op(a, b))
            .collect::<Result<Vec<_>>>()?;
        Ok(PositionTuple { parts })
    }

    pub fn compose(&self, inner: &PositionTuple) -> Result<PositionTuple> {
        self.componentwise(inner, CardSubset::compose)
    }

    pub fn quotient(&self, inner: &PositionTuple) -> Result<PositionTuple> {
        self.componentwise(inner, CardSubset::quotient)
    }

    pub fn exponent(&self, inner: &PositionTuple) -> Result<PositionTuple> {
        self.componentwise(inner, CardSubset::exponent)
    }

    /// Representative of the class under permutation of the parts: parts
    /// sorted lexicographically by element list.
    pub fn canonical(&self) -> PositionTuple {
        let mut parts = self.parts.clone();
        parts.sort();
        PositionTuple { parts }
    }

    pub fn is_canonical(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] <= w[1])
    }

    /// Parts reordered so that part `k` of the result is part `perm[k]` of `self`.
    pub fn permuted(&self, perm: &[usize]) -> PositionTuple {
        PositionTuple { parts: perm.iter().map(|&k| self.parts[k].clone()).collect() }
    }

    /// All distinct reorderings of the parts, sorted.
    pub fn permutation_closure(&self) -> Vec<PositionTuple> {
        use itertools::Itertools;
        let mut out: Vec<PositionTuple> = (0..self.s())
            .permutations(self.s())
            .map(|perm| self.permuted(&perm))
            .collect();
        out.sort();
        out.dedup();
        out
    }

    /// Dictionary to weights: `lambda_k = lambda_{I_k} + (n-r) 1_r` for
    /// `k < s` and `lambda_s = lambda_{I_s}`. Satisfies
    /// `edim = -sum_k |lambda_k|`.
    pub fn weights(&self) -> Vec<Weight> {
        let shift = BigInt::from((self.n() - self.r()) as i64);
        let s = self.s();
        let out: Vec<Weight> = self
            .parts
            .iter()
            .enumerate()
            .map(|(k, p)| {
                let base = lambda_of_subset(p);
                if k + 1 < s {
                    base.shifted(&shift)
                } else {
                    base
                }
            })
            .collect();
        let total: BigInt = out.iter().map(Weight::total).sum();
        assert_eq!(BigInt::from(self.edim()), -total, "edim/weight dictionary mismatch");
        out
    }
}

impl fmt::Display for PositionTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (idx, p) in self.parts.iter().enumerate() {
            if idx > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for PositionTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "()");
        }
        write!(f, "{self} in [{}]", self.n())
    }
}
