use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{domain_err, shape_err, Result};

/// A subset of `[n] = {1, ..., n}` stored as its strictly increasing list of
/// 1-based elements. `I(a)` in the usual notation is [`CardSubset::at`].
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawSubset", into = "RawSubset")]
pub struct CardSubset {
    ground: usize,
    elements: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct RawSubset {
    ground: usize,
    elements: Vec<usize>,
}

impl TryFrom<RawSubset> for CardSubset {
    type Error = crate::Error;

    fn try_from(raw: RawSubset) -> Result<Self> {
        CardSubset::new(raw.ground, raw.elements)
    }
}

impl From<CardSubset> for RawSubset {
    fn from(s: CardSubset) -> Self {
        RawSubset { ground: s.ground, elements: s.elements }
    }
}

impl CardSubset {
    pub fn new(ground: usize, elements: Vec<usize>) -> Result<Self> {
        for (idx, &e) in elements.iter().enumerate() {
            if e == 0 || e > ground {
                return Err(domain_err!("element {e} is outside [1, {ground}]"));
            }
            if idx > 0 && elements[idx - 1] >= e {
                return Err(domain_err!(
                    "elements must be strictly increasing, found {} before {e}",
                    elements[idx - 1]
                ));
            }
        }
        Ok(CardSubset { ground, elements })
    }

    /// `{1, ..., r}` inside `[n]`.
    pub fn initial(r: usize, n: usize) -> Self {
        assert!(r <= n, "initial segment of length {r} does not fit in [{n}]");
        CardSubset { ground: n, elements: (1..=r).collect() }
    }

    /// `{n-r+1, ..., n}` inside `[n]`.
    pub fn terminal(r: usize, n: usize) -> Self {
        assert!(r <= n, "terminal segment of length {r} does not fit in [{n}]");
        CardSubset { ground: n, elements: (n - r + 1..=n).collect() }
    }

    /// `[r]` as a subset of itself.
    pub fn full(r: usize) -> Self {
        Self::initial(r, r)
    }

    pub fn ground(&self) -> usize {
        self.ground
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    /// The `a`-th smallest element, `a` 1-based.
    pub fn at(&self, a: usize) -> usize {
        self.elements[a - 1]
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    /// Dimension of the Schubert cell: `sum_a (I(a) - a)`.
    pub fn dim(&self) -> usize {
        self.elements.iter().enumerate().map(|(i, &e)| e - (i + 1)).sum()
    }

    pub fn complement(&self) -> CardSubset {
        let elements = (1..=self.ground).filter(|x| !self.contains(*x)).collect();
        CardSubset { ground: self.ground, elements }
    }

    fn check_inner(&self, inner: &CardSubset) -> Result<()> {
        if inner.ground != self.len() {
            return Err(shape_err!(
                "inner subset lives in [{}] but the outer subset has {} elements",
                inner.ground,
                self.len()
            ));
        }
        Ok(())
    }

    /// Composition `IJ = {I(J(1)) < ... < I(J(d))}`.
    pub fn compose(&self, inner: &CardSubset) -> Result<CardSubset> {
        self.check_inner(inner)?;
        let elements = inner.elements.iter().map(|&j| self.at(j)).collect();
        Ok(CardSubset { ground: self.ground, elements })
    }

    /// Quotient `I/J = {I(J^c(b)) - J^c(b) + b}` inside `[n - d]`.
    pub fn quotient(&self, inner: &CardSubset) -> Result<CardSubset> {
        self.check_inner(inner)?;
        let elements = inner
            .complement()
            .elements
            .iter()
            .enumerate()
            .map(|(idx, &jc)| self.at(jc) - jc + idx + 1)
            .collect();
        Ok(CardSubset { ground: self.ground - inner.len(), elements })
    }

    /// Exponent `I^J = {I(J(b)) - J(b) + b}` inside `[n - (r - d)]`.
    pub fn exponent(&self, inner: &CardSubset) -> Result<CardSubset> {
        self.check_inner(inner)?;
        let elements = inner
            .elements
            .iter()
            .enumerate()
            .map(|(idx, &j)| self.at(j) - j + idx + 1)
            .collect();
        Ok(CardSubset { ground: self.ground - (self.len() - inner.len()), elements })
    }

    /// Shuffle permutation as the list of images `sigma(1), ..., sigma(n)`:
    /// first the elements of `I`, then those of `I^c`.
    pub fn shuffle_permutation(&self) -> Vec<usize> {
        let mut images = self.elements.clone();
        images.extend(self.complement().elements);
        images
    }

    /// Entrywise comparison `I'(a) <= I(a)`, the closure order on cells.
    pub fn is_below(&self, other: &CardSubset) -> bool {
        self.ground == other.ground
            && self.len() == other.len()
            && self.elements.iter().zip(&other.elements).all(|(a, b)| a <= b)
    }
}

impl Ord for CardSubset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.elements.cmp(&other.elements).then(self.ground.cmp(&other.ground))
    }
}

impl PartialOrd for CardSubset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for CardSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (idx, e) in self.elements.iter().enumerate() {
            if idx > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for CardSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}⊂[{}]", self.ground)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: usize, el: &[usize]) -> CardSubset {
        CardSubset::new(n, el.to_vec()).unwrap()
    }

    #[test]
    fn rejects_bad_elements() {
        assert!(CardSubset::new(3, vec![0]).is_err());
        assert!(CardSubset::new(3, vec![4]).is_err());
        assert!(CardSubset::new(3, vec![2, 2]).is_err());
        assert!(CardSubset::new(3, vec![3, 1]).is_err());
        assert!(CardSubset::new(3, vec![]).is_ok());
    }

    #[test]
    fn dim_examples() {
        assert_eq!(s(6, &[1, 2, 3]).dim(), 0);
        assert_eq!(s(6, &[2, 4, 6]).dim(), 6);
        assert_eq!(s(4, &[2, 4]).dim(), 3);
    }

    #[test]
    fn complement_examples() {
        assert_eq!(s(4, &[1, 3]).complement(), s(4, &[2, 4]));
        assert_eq!(s(3, &[]).complement(), s(3, &[1, 2, 3]));
        assert_eq!(s(6, &[2, 4, 6]).complement(), s(6, &[1, 3, 5]));
    }

    #[test]
    fn compose_examples() {
        let i = s(6, &[1, 3, 5, 6]);
        assert_eq!(i.compose(&s(4, &[2, 4])).unwrap(), s(6, &[3, 6]));
        assert_eq!(i.compose(&CardSubset::full(4)).unwrap(), i);
        assert_eq!(s(6, &[2, 4, 6]).compose(&s(3, &[1, 3])).unwrap(), s(6, &[2, 6]));
        assert!(matches!(i.compose(&s(3, &[1])), Err(crate::Error::Shape(_))));
    }

    #[test]
    fn quotient_examples() {
        let i = s(6, &[1, 3, 5, 6]);
        assert_eq!(i.quotient(&s(4, &[2, 4])).unwrap(), s(4, &[1, 4]));
        assert_eq!(i.quotient(&s(4, &[])).unwrap(), i);
        assert_eq!(s(6, &[2, 4, 6]).quotient(&s(3, &[2])).unwrap(), s(5, &[2, 5]));
        assert!(i.quotient(&s(5, &[1])).is_err());
    }

    #[test]
    fn exponent_examples() {
        let i = s(6, &[1, 3, 5, 6]);
        let j = s(4, &[2, 4]);
        let e = i.exponent(&j).unwrap();
        assert_eq!(e, s(4, &[2, 4]));
        assert_eq!(e, i.quotient(&j.complement()).unwrap());
        assert_eq!(e.dim(), i.compose(&j).unwrap().dim() - j.dim());
        assert_eq!(e.dim(), 3);
        assert!(i.exponent(&s(2, &[1])).is_err());
    }

    #[test]
    fn shuffle_examples() {
        assert_eq!(s(4, &[1, 3, 4]).shuffle_permutation(), vec![1, 3, 4, 2]);
        assert_eq!(CardSubset::initial(2, 5).shuffle_permutation(), vec![1, 2, 3, 4, 5]);
        assert_eq!(s(4, &[2, 4]).shuffle_permutation(), vec![2, 4, 1, 3]);
    }

    #[test]
    fn serde_shape() {
        let i = s(4, &[1, 3]);
        let json = serde_json::to_string(&i).unwrap();
        assert_eq!(json, r#"{"ground":4,"elements":[1,3]}"#);
        let back: CardSubset = serde_json::from_str(&json).unwrap();
        assert_eq!(back, i);
        assert!(serde_json::from_str::<CardSubset>(r#"{"ground":2,"elements":[3]}"#).is_err());
    }
}
