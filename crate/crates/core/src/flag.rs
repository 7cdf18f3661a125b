//! Flags, subspaces and Schubert positions.
//!
//! A flag `E` on `F^n` is stored as an invertible matrix whose columns
//! `f(1), ..., f(n)` are an adapted basis: `E(j) = span{f(1..j)}`. A subspace
//! is stored as a full-column-rank `n x d` matrix.

use rand::Rng;

use crate::combinatorics::CardSubset;
use crate::error::{domain_err, shape_err, Result};
use crate::field::Field;
use crate::matrix::Mat;

#[derive(Clone, Debug, PartialEq)]
pub struct Flag<E> {
    basis: Mat<E>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SubspaceBasis<E> {
    basis: Mat<E>,
}

impl<E: Clone + PartialEq + std::fmt::Debug> Flag<E> {
    pub fn new<F: Field<Elem = E>>(f: &F, basis: Mat<E>) -> Result<Self> {
        if !basis.is_square() {
            return Err(shape_err!("flag basis is {}x{}", basis.rows(), basis.cols()));
        }
        if basis.rank(f) != basis.rows() {
            return Err(domain_err!("flag basis is singular"));
        }
        Ok(Flag { basis })
    }

    pub fn standard<F: Field<Elem = E>>(f: &F, n: usize) -> Self {
        Flag { basis: Mat::identity(f, n) }
    }

    pub fn random<F: Field<Elem = E>, R: Rng + ?Sized>(f: &F, n: usize, rng: &mut R) -> Self {
        Flag { basis: Mat::random_invertible(f, n, rng) }
    }

    pub fn space_dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &Mat<E> {
        &self.basis
    }

    /// `E(j)` for `0 <= j <= n`.
    pub fn subspace(&self, j: usize) -> SubspaceBasis<E> {
        SubspaceBasis { basis: self.basis.columns(0..j) }
    }
}

impl<E: Clone + PartialEq + std::fmt::Debug> SubspaceBasis<E> {
    pub fn new<F: Field<Elem = E>>(f: &F, basis: Mat<E>) -> Result<Self> {
        if basis.rank(f) != basis.cols() {
            return Err(domain_err!("subspace basis of {} columns is not independent", basis.cols()));
        }
        Ok(SubspaceBasis { basis })
    }

    /// Column space of an arbitrary matrix.
    pub fn span<F: Field<Elem = E>>(f: &F, m: &Mat<E>) -> Self {
        let pivots = m.rref(f).pivots;
        SubspaceBasis { basis: m.select_columns(&pivots) }
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn basis(&self) -> &Mat<E> {
        &self.basis
    }

    pub fn contains_vector<F: Field<Elem = E>>(&self, f: &F, v: &[E]) -> Result<bool> {
        Ok(self.basis.solve(f, v)?.is_some())
    }

    /// Coordinates of the columns of `other` with respect to this basis.
    /// Fails if `other` is not contained in this subspace.
    pub fn coordinates<F: Field<Elem = E>>(&self, f: &F, other: &Mat<E>) -> Result<Mat<E>> {
        if other.rows() != self.ambient_dim() {
            return Err(shape_err!(
                "vectors of length {} in a space of dimension {}",
                other.rows(),
                self.ambient_dim()
            ));
        }
        let mut cols = Vec::with_capacity(other.cols());
        for j in 0..other.cols() {
            let y = self
                .basis
                .solve(f, &other.column(j))?
                .ok_or_else(|| domain_err!("column {} is not in the subspace", j + 1))?;
            cols.push(y);
        }
        Mat::from_columns(self.dim(), cols)
    }

    /// Same subspace test by rank.
    pub fn same_space<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> bool {
        self.dim() == other.dim()
            && self.basis.hstack(&other.basis).map(|m| m.rank(f)) == Ok(self.dim())
    }
}

/// Schubert position of `s` with respect to `e`:
/// `J(b) = min{ j : dim(E(j) ∩ S) = b }`.
pub fn position<F: Field>(f: &F, s: &SubspaceBasis<F::Elem>, e: &Flag<F::Elem>) -> Result<CardSubset> {
    let n = e.space_dim();
    if s.ambient_dim() != n {
        return Err(shape_err!("subspace in dimension {} but flag in dimension {n}", s.ambient_dim()));
    }
    let c = e.basis.inverse(f)?.mul(f, &s.basis)?;
    position_from_adapted(f, &c)
}

/// Position of the column space of `c`, given in adapted coordinates of the
/// flag. In these coordinates `dim(E(j) ∩ S) = d - rank(c[j+1..n])`, so `j` is
/// a jump exactly when row `j` is independent of the rows below it.
pub fn position_from_adapted<F: Field>(f: &F, c: &Mat<F::Elem>) -> Result<CardSubset> {
    let n = c.rows();
    let mut jumps = Vec::new();
    let mut below = 0;
    for j in (1..=n).rev() {
        let block = Mat::from_fn(n - j + 1, c.cols(), |i, k| c.get(j - 1 + i, k).clone());
        let rank = block.rank(f);
        if rank > below {
            jumps.push(j);
            below = rank;
        }
    }
    jumps.reverse();
    CardSubset::new(n, jumps)
}

/// The induced flag `E^V(a) = E(I(a)) ∩ V` with `I = Pos(V, E)`, in coordinates
/// relative to `v.basis()`.
pub fn induced_flag_on_subspace<F: Field>(
    f: &F,
    e: &Flag<F::Elem>,
    v: &SubspaceBasis<F::Elem>,
) -> Result<Flag<F::Elem>> {
    let i = position(f, v, e)?;
    let n = e.space_dim();
    let r = v.dim();
    let c = e.basis.inverse(f)?.mul(f, &v.basis)?;
    let mut chosen: Vec<Vec<F::Elem>> = Vec::with_capacity(r);
    for a in 1..=r {
        // y with V y ∈ E(I(a)): the rows below I(a) of c y vanish
        let top = i.at(a);
        let lower = Mat::from_fn(n - top, r, |row, k| c.get(top + row, k).clone());
        let kernel = lower.kernel_basis(f);
        let next = kernel
            .into_iter()
            .find(|y| {
                let mut cols = chosen.clone();
                cols.push(y.clone());
                Mat::from_columns(r, cols).map(|m| m.rank(f)) == Ok(a)
            })
            .ok_or_else(|| domain_err!("no new vector in E({top}) ∩ V"))?;
        chosen.push(next);
    }
    Flag::new(f, Mat::from_columns(r, chosen)?)
}

/// Concrete model of `W / V`: the complement spanned by the adapted vectors of
/// `E` at positions `I^c`, together with the induced flag on it.
#[derive(Clone, Debug)]
pub struct QuotientSpace<E> {
    subspace: Mat<E>,
    complement: Mat<E>,
    pub flag: Flag<E>,
}

impl<E: Clone + PartialEq + std::fmt::Debug> QuotientSpace<E> {
    pub fn complement(&self) -> &Mat<E> {
        &self.complement
    }

    pub fn dim(&self) -> usize {
        self.complement.cols()
    }

    /// Complement coordinates `z` of the images of the columns of `w`,
    /// from `w = V y + Q z`.
    pub fn project<F: Field<Elem = E>>(&self, f: &F, w: &Mat<E>) -> Result<Mat<E>> {
        let full = self.subspace.hstack(&self.complement)?;
        let inv = full.inverse(f)?;
        let coords = inv.mul(f, w)?;
        let skip = self.subspace.cols();
        Ok(Mat::from_fn(self.dim(), w.cols(), |i, j| coords.get(skip + i, j).clone()))
    }

    /// Image of a subspace `U ⊇ V` as a subspace of the quotient.
    pub fn image<F: Field<Elem = E>>(&self, f: &F, u: &SubspaceBasis<E>) -> Result<SubspaceBasis<E>> {
        Ok(SubspaceBasis::span(f, &self.project(f, u.basis())?))
    }
}

/// `E_{W/V}(b) = (E(I^c(b)) + V) / V`.
pub fn induced_flag_on_quotient<F: Field>(
    f: &F,
    e: &Flag<F::Elem>,
    v: &SubspaceBasis<F::Elem>,
) -> Result<QuotientSpace<F::Elem>> {
    let i = position(f, v, e)?;
    let ic: Vec<usize> = i.complement().elements().iter().map(|&x| x - 1).collect();
    let complement = e.basis.select_columns(&ic);
    let partial = QuotientSpace {
        subspace: v.basis.clone(),
        complement,
        flag: Flag::standard(f, ic.len()),
    };
    // project the whole adapted basis and read off the filtration jumps
    let images = partial.project(f, &e.basis)?;
    let mut cols = Vec::new();
    for j in 0..e.space_dim() {
        let mut trial = cols.clone();
        trial.push(images.column(j));
        if Mat::from_columns(ic.len(), trial.clone())?.rank(f) > cols.len() {
            cols = trial;
        }
    }
    let flag = Flag::new(f, Mat::from_columns(ic.len(), cols)?)?;
    Ok(QuotientSpace { flag, ..partial })
}

/// The point of the cell `Ω⁰_I(E)` with coordinates `coeffs`: column `a` is
/// `f(I(a)) + Σ_b coeffs[a][b] f(I^c(b))` over the `I(a) - a` complement
/// indices below `I(a)`.
pub fn cell_point<F: Field>(
    f: &F,
    i: &CardSubset,
    e: &Flag<F::Elem>,
    coeffs: &[Vec<F::Elem>],
) -> Result<SubspaceBasis<F::Elem>> {
    let n = e.space_dim();
    if i.ground() != n {
        return Err(shape_err!("subset of [{}] for a flag on dimension {n}", i.ground()));
    }
    if coeffs.len() != i.len() {
        return Err(shape_err!("{} coefficient rows for {} columns", coeffs.len(), i.len()));
    }
    let ic = i.complement();
    let mut local = Mat::zeros(f, n, i.len());
    for a in 1..=i.len() {
        let free = i.at(a) - a;
        if coeffs[a - 1].len() != free {
            return Err(shape_err!("column {a} takes {free} coefficients"));
        }
        local.set(i.at(a) - 1, a - 1, f.one());
        for (b, c) in coeffs[a - 1].iter().enumerate() {
            local.set(ic.at(b + 1) - 1, a - 1, c.clone());
        }
    }
    SubspaceBasis::new(f, e.basis.mul(f, &local)?)
}

/// Random point of the Schubert cell `Ω⁰_I(E)`; its position is re-verified.
pub fn sample_cell_point<F: Field, R: Rng + ?Sized>(
    f: &F,
    i: &CardSubset,
    e: &Flag<F::Elem>,
    rng: &mut R,
) -> Result<SubspaceBasis<F::Elem>> {
    let coeffs: Vec<Vec<F::Elem>> =
        (1..=i.len()).map(|a| (0..i.at(a) - a).map(|_| f.random(rng)).collect()).collect();
    let s = cell_point(f, i, e, &coeffs)?;
    let got = position(f, &s, e)?;
    assert_eq!(&got, i, "cell sample landed in the wrong cell");
    Ok(s)
}
