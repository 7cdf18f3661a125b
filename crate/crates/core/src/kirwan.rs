//! Kirwan-cone membership and Littlewood-Richardson nonvanishing.
//!
//! The cone `Kirwan(r, s)` is cut out, inside the product of positive Weyl
//! chambers, by the trace equation `Σ_k |ξ_k| = 0` and the inequalities
//! `Σ_k Σ_{j ∈ J_k} ξ_k(j) <= 0` for `J ∈ Horn_0(d, r, s)`, `0 < d < r`.
//! By saturation, `c(λ⃗) > 0` exactly when `λ⃗` lies in the cone.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::combinatorics::{subset_of_lambda, PositionTuple, Weight};
use crate::error::{domain_err, shape_err, Result};
use crate::horn::HornTable;
use crate::io::Ratio;

/// An `s`-tuple of nonincreasing rational vectors of length `r`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<Ratio>>", into = "Vec<Vec<Ratio>>")]
pub struct KirwanPoint {
    parts: Vec<Vec<BigRational>>,
}

impl KirwanPoint {
    pub fn new(parts: Vec<Vec<BigRational>>) -> Result<Self> {
        let r = parts.first().map_or(0, Vec::len);
        if parts.is_empty() {
            return Err(shape_err!("a point needs at least one part"));
        }
        for (k, part) in parts.iter().enumerate() {
            if part.len() != r {
                return Err(shape_err!("part {} has length {}, expected {r}", k + 1, part.len()));
            }
            if let Some(a) = part.windows(2).position(|w| w[0] < w[1]) {
                return Err(domain_err!(
                    "part {} is not nonincreasing: coordinate {} = {} < coordinate {} = {}",
                    k + 1,
                    a + 1,
                    part[a],
                    a + 2,
                    part[a + 1]
                ));
            }
        }
        Ok(KirwanPoint { parts })
    }

    pub fn from_weights(weights: &[Weight]) -> Result<Self> {
        Self::new(
            weights
                .iter()
                .map(|w| w.0.iter().map(|x| BigRational::from_integer(x.clone())).collect())
                .collect(),
        )
    }

    pub fn from_i64s(parts: &[Vec<i64>]) -> Result<Self> {
        Self::new(
            parts
                .iter()
                .map(|p| p.iter().map(|&x| BigRational::from_integer(x.into())).collect())
                .collect(),
        )
    }

    pub fn parts(&self) -> &[Vec<BigRational>] {
        &self.parts
    }

    pub fn r(&self) -> usize {
        self.parts[0].len()
    }

    pub fn s(&self) -> usize {
        self.parts.len()
    }

    pub fn trace(&self) -> BigRational {
        self.parts.iter().flatten().sum()
    }

    /// `Σ_k (T_{J_k}, ξ_k)`.
    pub fn pair(&self, j: &PositionTuple) -> Result<BigRational> {
        if j.s() != self.s() || j.n() != self.r() {
            return Err(shape_err!("{}-tuple in [{}] against a point with s = {}, r = {}", j.s(), j.n(), self.s(), self.r()));
        }
        Ok(j.parts()
            .iter()
            .zip(&self.parts)
            .flat_map(|(part, xi)| part.elements().iter().map(move |&a| xi[a - 1].clone()))
            .sum())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if (self.s(), self.r()) != (other.s(), other.r()) {
            return Err(shape_err!("points of different shape"));
        }
        Self::new(
            self.parts
                .iter()
                .zip(&other.parts)
                .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y).collect())
                .collect(),
        )
    }

    pub fn scale(&self, c: &BigRational) -> Result<Self> {
        if c.is_negative() {
            return Err(domain_err!("negative scale leaves the chamber"));
        }
        Self::new(self.parts.iter().map(|p| p.iter().map(|x| x * c).collect()).collect())
    }

    /// Reorder the parts: part `k` of the result is part `perm[k]` of `self`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        KirwanPoint { parts: perm.iter().map(|&k| self.parts[k].clone()).collect() }
    }
}

impl TryFrom<Vec<Vec<Ratio>>> for KirwanPoint {
    type Error = crate::error::Error;

    fn try_from(raw: Vec<Vec<Ratio>>) -> Result<Self> {
        Self::new(raw.into_iter().map(|p| p.into_iter().map(|x| x.0).collect()).collect())
    }
}

impl From<KirwanPoint> for Vec<Vec<Ratio>> {
    fn from(p: KirwanPoint) -> Self {
        p.parts.into_iter().map(|v| v.into_iter().map(Ratio).collect()).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Violated,
    Tight,
    Slack,
}

impl Status {
    fn of(lhs: &BigRational) -> Status {
        if lhs.is_positive() {
            Status::Violated
        } else if lhs.is_zero() {
            Status::Tight
        } else {
            Status::Slack
        }
    }
}

/// One evaluated inequality `Σ_k (T_{J_k}, ξ_k) <= 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IneqCertificate {
    pub d: usize,
    pub j: PositionTuple,
    pub lhs: Ratio,
    pub status: Status,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceCertificate {
    pub trace: Ratio,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KirwanReport {
    pub member: bool,
    pub trace: TraceCertificate,
    pub inequalities: Vec<IneqCertificate>,
}

impl KirwanReport {
    pub fn violated(&self) -> impl Iterator<Item = &IneqCertificate> {
        self.inequalities.iter().filter(|c| c.status == Status::Violated)
    }
}

/// The index set of the Horn inequalities: `Horn_0(d, r, s)` for `0 < d < r`.
pub fn kirwan_inequality_set(r: usize, s: usize, table: &HornTable) -> Result<Vec<(usize, PositionTuple)>> {
    if r == 0 || s < 2 {
        return Err(domain_err!("inequalities need r >= 1 and s >= 2, got r = {r}, s = {s}"));
    }
    Ok((1..r).flat_map(|d| table.horn0(d, r, s).into_iter().map(move |j| (d, j))).collect())
}

pub fn kirwan_check(xi: &KirwanPoint, table: &HornTable) -> Result<KirwanReport> {
    let trace = xi.trace();
    let trace_ok = trace.is_zero();
    let mut inequalities = Vec::new();
    for (d, j) in kirwan_inequality_set(xi.r(), xi.s(), table)? {
        let lhs = xi.pair(&j)?;
        let status = Status::of(&lhs);
        inequalities.push(IneqCertificate { d, j, lhs: Ratio(lhs), status });
    }
    let member = trace_ok && inequalities.iter().all(|c| c.status != Status::Violated);
    Ok(KirwanReport { member, trace: TraceCertificate { trace: Ratio(trace), holds: trace_ok }, inequalities })
}

/// Whether the Littlewood-Richardson coefficient `c(λ⃗)` is nonzero.
pub fn lr_nonvanishing(lambda: &[Weight], table: &HornTable) -> Result<KirwanReport> {
    for (k, w) in lambda.iter().enumerate() {
        w.require_dominant(&format!("weight {}", k + 1))?;
    }
    kirwan_check(&KirwanPoint::from_weights(lambda)?, table)
}

/// Subset tuple whose weights (as in [`PositionTuple::weights`]) are the given
/// dominant weights shifted by multiples of `(1, ..., 1)`.
///
/// Returns `(n, T, shifted)`. The shifts keep the total trace: parts
/// `1..s-1` are raised until their last entry is nonnegative, the last part is
/// lowered by the same total, and if the last part then has a positive first
/// entry it is lowered further while the first part is raised. Finally
/// `n = r + q` with `q = max(λ_1(1), ..., λ_{s-1}(1), -λ_s(r))`.
pub fn tuple_from_weights(lambda: &[Weight]) -> Result<(usize, PositionTuple, Vec<Weight>)> {
    let s = lambda.len();
    if s < 2 {
        return Err(domain_err!("need at least two weights, got {s}"));
    }
    let r = lambda[0].len();
    if r == 0 || lambda.iter().any(|w| w.len() != r) {
        return Err(shape_err!("weights must share a positive length"));
    }
    for (k, w) in lambda.iter().enumerate() {
        w.require_dominant(&format!("weight {}", k + 1))?;
    }
    let mut shifted: Vec<Weight> = lambda.to_vec();
    let mut moved = BigInt::zero();
    for w in shifted.iter_mut().take(s - 1) {
        let c = (-w.at(r).clone()).max(BigInt::zero());
        *w = w.shifted(&c);
        moved += c;
    }
    shifted[s - 1] = shifted[s - 1].shifted(&-moved);
    let top = shifted[s - 1].at(1).clone();
    if top.is_positive() {
        shifted[s - 1] = shifted[s - 1].shifted(&-top.clone());
        shifted[0] = shifted[0].shifted(&top);
    }
    let mut q = -shifted[s - 1].at(r).clone();
    for w in shifted.iter().take(s - 1) {
        q = q.max(w.at(1).clone());
    }
    let q_usize = q.to_usize().ok_or_else(|| domain_err!("shift {q} is too large"))?;
    let n = r + q_usize;
    let mut parts = Vec::with_capacity(s);
    for (k, w) in shifted.iter().enumerate() {
        let local = if k + 1 < s { w.shifted(&-q.clone()) } else { w.clone() };
        parts.push(subset_of_lambda(&local, n)?);
    }
    let tuple = PositionTuple::new(parts)?;
    assert_eq!(tuple.weights(), shifted, "weights do not round trip");
    let total: BigInt = shifted.iter().map(Weight::total).sum();
    assert_eq!(BigInt::from(tuple.edim()), -total, "edim differs from minus the total weight");
    Ok((n, tuple, shifted))
}
