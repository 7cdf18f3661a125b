use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use super::CardSubset;
use crate::error::{domain_err, Result};

/// An integer weight `(mu(1), ..., mu(r))` with unbounded entries.
///
/// Serialized as a JSON array of integers; entries that do not fit in an
/// `i64` are written as decimal strings and accepted back in either form.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Weight(pub Vec<BigInt>);

impl Weight {
    pub fn from_i64s(entries: &[i64]) -> Self {
        Weight(entries.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn zero(r: usize) -> Self {
        Weight(vec![BigInt::zero(); r])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// 1-based entry access.
    pub fn at(&self, a: usize) -> &BigInt {
        &self.0[a - 1]
    }

    /// Nonincreasing entries.
    pub fn is_dominant(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    /// Nondecreasing entries.
    pub fn is_antidominant(&self) -> bool {
        self.0.windows(2).all(|w| w[0] <= w[1])
    }

    /// `|mu| = sum_j mu(j)`.
    pub fn total(&self) -> BigInt {
        self.0.iter().sum()
    }

    /// `mu + c * 1_r`.
    pub fn shifted(&self, c: &BigInt) -> Weight {
        Weight(self.0.iter().map(|x| x + c).collect())
    }

    pub fn scaled(&self, c: &BigInt) -> Weight {
        Weight(self.0.iter().map(|x| x * c).collect())
    }

    pub fn neg(&self) -> Weight {
        Weight(self.0.iter().map(|x| -x).collect())
    }

    /// Inner product with the indicator vector of `J`: `sum_{j in J} mu(j)`.
    pub fn pair(&self, j: &CardSubset) -> BigInt {
        j.elements().iter().map(|&a| &self.0[a - 1]).sum()
    }

    /// The first index pair `(a, a+1)` (1-based) where dominance fails.
    pub fn dominance_violation(&self) -> Option<(usize, usize)> {
        self.0.windows(2).position(|w| w[0] < w[1]).map(|i| (i + 1, i + 2))
    }

    fn antidominance_violation(&self) -> Option<(usize, usize)> {
        self.0.windows(2).position(|w| w[0] > w[1]).map(|i| (i + 1, i + 2))
    }

    pub(crate) fn require_dominant(&self, what: &str) -> Result<()> {
        match self.dominance_violation() {
            Some((a, b)) => Err(domain_err!(
                "{what} is not dominant: entry {a} = {} < entry {b} = {}",
                self.0[a - 1],
                self.0[b - 1]
            )),
            None => Ok(()),
        }
    }

    pub(crate) fn require_antidominant(&self, what: &str) -> Result<()> {
        match self.antidominance_violation() {
            Some((a, b)) => Err(domain_err!(
                "{what} is not antidominant: entry {a} = {} > entry {b} = {}",
                self.0[a - 1],
                self.0[b - 1]
            )),
            None => Ok(()),
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (idx, x) in self.0.iter().enumerate() {
            if idx > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.0.len()))?;
        for x in &self.0 {
            match x.to_i64() {
                Some(v) => seq.serialize_element(&v)?,
                None => seq.serialize_element(&x.to_string())?,
            }
        }
        seq.end()
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum IntRepr {
    Small(i64),
    Text(String),
}

impl<'de> Deserialize<'de> for Weight {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct WeightVisitor;
        impl<'de> Visitor<'de> for WeightVisitor {
            type Value = Weight;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an array of integers")
            }
            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> std::result::Result<Weight, A::Error> {
                let mut out = Vec::new();
                while let Some(item) = seq.next_element::<IntRepr>()? {
                    out.push(match item {
                        IntRepr::Small(v) => BigInt::from(v),
                        IntRepr::Text(t) => t.trim().parse::<BigInt>().map_err(de::Error::custom)?,
                    });
                }
                Ok(Weight(out))
            }
        }
        deserializer.deserialize_seq(WeightVisitor)
    }
}

/// `lambda_I(a) = a - I(a)`, a dominant weight with entries in `[r-n, 0]`.
pub fn lambda_of_subset(i: &CardSubset) -> Weight {
    Weight(
        i.elements()
            .iter()
            .enumerate()
            .map(|(idx, &e)| BigInt::from(idx as i64 + 1) - BigInt::from(e as i64))
            .collect(),
    )
}

/// Inverse of [`lambda_of_subset`]: `I(a) = a - lambda(a)`.
pub fn subset_of_lambda(lambda: &Weight, n: usize) -> Result<CardSubset> {
    lambda.require_dominant("weight")?;
    let r = lambda.len();
    if r > n {
        return Err(domain_err!("weight of length {r} cannot describe a subset of [{n}]"));
    }
    let lower = BigInt::from(r as i64) - BigInt::from(n as i64);
    let mut elements = Vec::with_capacity(r);
    for (idx, x) in lambda.0.iter().enumerate() {
        if x.is_positive() {
            return Err(domain_err!("entry {} = {x} is positive", idx + 1));
        }
        if *x < lower {
            return Err(domain_err!("entry {} = {x} is below r - n = {lower}", idx + 1));
        }
        let e = (BigInt::from(idx as i64 + 1) - x).to_usize().expect("bounded by n");
        elements.push(e);
    }
    CardSubset::new(n, elements)
}
