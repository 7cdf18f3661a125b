//! Hom-spaces `H_I(F, G)`, true dimensions and the determinant function.
//!
//! Throughout, `V_0 = E_0(r)` and `Q_0 = F^n / V_0 ≅ F^{n-r}`; a map
//! `φ ∈ Hom(V_0, Q_0)` is an `(n-r) x r` matrix. The space
//! `H_I(F, G) = {φ : φ(F(a)) ⊆ G(I(a) - a)}` is cut out by the vanishing of
//! the entries `(G^{-1} φ F)[c, a]` with `c > I(a) - a`.
//!
//! Vectorized maps use column-major order: entry `(b, a)` (row `b`, column `a`)
//! sits at index `(a - 1)(n - r) + (b - 1)`. This is the `(a, b)` order of the
//! elementary matrices `E_{b,a}` and fixes the sign of the determinant
//! function.

use num_traits::ToPrimitive;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::combinatorics::{CardSubset, PositionTuple, Weight};
use crate::error::{domain_err, shape_err, Result};
use crate::field::{Field, FieldSpec};
use crate::flag::Flag;
use crate::io::to_strings;
use crate::matrix::Mat;

/// Constraint rows for `φ ∈ H_I(F, G)` in the vectorized unknowns.
fn constraints<F: Field>(
    f: &F,
    i: &CardSubset,
    fl: &Flag<F::Elem>,
    g: &Flag<F::Elem>,
) -> Result<Vec<Vec<F::Elem>>> {
    let (r, n) = (i.len(), i.ground());
    let q = n - r;
    if fl.space_dim() != r || g.space_dim() != q {
        return Err(shape_err!(
            "flags on dimensions {} and {} for a subset of size {r} in [{n}]",
            fl.space_dim(),
            g.space_dim()
        ));
    }
    let ginv = g.basis().inverse(f)?;
    let fb = fl.basis();
    let mut rows = Vec::new();
    for a in 1..=r {
        for c in (i.at(a) - a + 1)..=q {
            let mut row = vec![f.zero(); r * q];
            for j in 0..r {
                let fja = fb.get(j, a - 1);
                if f.is_zero(fja) {
                    continue;
                }
                for b in 0..q {
                    row[j * q + b] = f.mul(ginv.get(c - 1, b), fja);
                }
            }
            rows.push(row);
        }
    }
    Ok(rows)
}

fn unvec<E: Clone + PartialEq + std::fmt::Debug>(v: &[E], q: usize, r: usize) -> Mat<E> {
    Mat::from_fn(q, r, |b, a| v[a * q + b].clone())
}

fn vec_of<E: Clone + PartialEq + std::fmt::Debug>(m: &Mat<E>) -> Vec<E> {
    (0..m.cols()).flat_map(|a| m.column(a)).collect()
}

fn stacked<F: Field>(f: &F, rows: Vec<Vec<F::Elem>>, unknowns: usize) -> Mat<F::Elem> {
    if rows.is_empty() {
        return Mat::zeros(f, 0, unknowns);
    }
    Mat::from_rows(rows).expect("uniform constraint rows")
}

/// A basis of `H_I(F, G)` as `(n-r) x r` matrices.
pub fn h_space_basis<F: Field>(
    f: &F,
    i: &CardSubset,
    fl: &Flag<F::Elem>,
    g: &Flag<F::Elem>,
) -> Result<Vec<Mat<F::Elem>>> {
    let (r, q) = (i.len(), i.ground() - i.len());
    let system = stacked(f, constraints(f, i, fl, g)?, r * q);
    Ok(system.kernel_basis(f).iter().map(|v| unvec(v, q, r)).collect())
}

/// Whether `phi` lies in `H_I(F, G)`.
pub fn h_contains<F: Field>(
    f: &F,
    i: &CardSubset,
    fl: &Flag<F::Elem>,
    g: &Flag<F::Elem>,
    phi: &Mat<F::Elem>,
) -> Result<bool> {
    let (r, q) = (i.len(), i.ground() - i.len());
    if (phi.rows(), phi.cols()) != (q, r) {
        return Err(shape_err!("map is {}x{}, expected {q}x{r}", phi.rows(), phi.cols()));
    }
    let v = vec_of(phi);
    let system = stacked(f, constraints(f, i, fl, g)?, r * q);
    Ok(system.mul_vec(f, &v)?.iter().all(|x| f.is_zero(x)))
}

fn check_flag_tuple<E>(t: &PositionTuple, fs: &[Flag<E>], gs: &[Flag<E>]) -> Result<()> {
    if fs.len() != t.s() || gs.len() != t.s() {
        return Err(shape_err!("{} and {} flags for a {}-tuple", fs.len(), gs.len(), t.s()));
    }
    Ok(())
}

/// The joint constraint system for `H_T(F⃗, G⃗) = ∩_k H_{I_k}(F_k, G_k)`.
fn joint_system<F: Field>(
    f: &F,
    t: &PositionTuple,
    fs: &[Flag<F::Elem>],
    gs: &[Flag<F::Elem>],
) -> Result<Mat<F::Elem>> {
    check_flag_tuple(t, fs, gs)?;
    let unknowns = t.r() * (t.n() - t.r());
    let mut rows = Vec::new();
    for (k, part) in t.parts().iter().enumerate() {
        rows.extend(constraints(f, part, &fs[k], &gs[k])?);
    }
    Ok(stacked(f, rows, unknowns))
}

pub fn h_intersection_dim<F: Field>(
    f: &F,
    t: &PositionTuple,
    fs: &[Flag<F::Elem>],
    gs: &[Flag<F::Elem>],
) -> Result<usize> {
    let system = joint_system(f, t, fs, gs)?;
    Ok(system.cols() - system.rank(f))
}

pub fn h_intersection_basis<F: Field>(
    f: &F,
    t: &PositionTuple,
    fs: &[Flag<F::Elem>],
    gs: &[Flag<F::Elem>],
) -> Result<Vec<Mat<F::Elem>>> {
    let system = joint_system(f, t, fs, gs)?;
    let (r, q) = (t.r(), t.n() - t.r());
    Ok(system.kernel_basis(f).iter().map(|v| unvec(v, q, r)).collect())
}

/// Random flag tuple with `F_1`, `G_1` standard (no loss by equivariance).
pub fn random_flag_tuple<F: Field, R: Rng + ?Sized>(
    f: &F,
    t: &PositionTuple,
    rng: &mut R,
) -> (Vec<Flag<F::Elem>>, Vec<Flag<F::Elem>>) {
    let (r, q) = (t.r(), t.n() - t.r());
    let mut fs = vec![Flag::standard(f, r)];
    let mut gs = vec![Flag::standard(f, q)];
    for _ in 1..t.s() {
        fs.push(Flag::random(f, r, rng));
        gs.push(Flag::random(f, q, rng));
    }
    (fs, gs)
}

/// Minimum of `dim H_T` over `samples` random flag tuples: an upper bound for
/// `tdim T`, and never below `edim T`.
pub fn tdim_estimate<F: Field, R: Rng + ?Sized>(
    f: &F,
    t: &PositionTuple,
    samples: usize,
    rng: &mut R,
) -> Result<usize> {
    if samples == 0 {
        return Err(domain_err!("at least one sample is required"));
    }
    let mut best = usize::MAX;
    for _ in 0..samples {
        let (fs, gs) = random_flag_tuple(f, t, rng);
        best = best.min(h_intersection_dim(f, t, &fs, &gs)?);
    }
    Ok(best)
}

/// Flags that realize `dim H_T = edim T`, with entries as text.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub field: FieldSpec,
    /// Adapted bases of `F_1..F_s` on `V_0`, row by row.
    pub f: Vec<Vec<Vec<String>>>,
    /// Adapted bases of `G_1..G_s` on `Q_0`, row by row.
    pub g: Vec<Vec<Vec<String>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum IntersectKind {
    /// Some sample attained `edim`; exact, since `tdim >= edim` always.
    IntersectingCertified { witness: Witness },
    /// Every sample stayed above `edim`; correct unless all samples were
    /// non-generic.
    NotIntersectingMc { samples: usize, min_observed_dim: usize },
    /// `edim < 0`, so the tuple cannot be intersecting.
    NotIntersectingExact,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntersectVerdict {
    #[serde(flatten)]
    pub kind: IntersectKind,
    pub edim: i64,
    pub field: FieldSpec,
    /// Smallest sampled `dim H_T`, absent when no sample was drawn.
    pub tdim_upper_bound: Option<usize>,
}

impl IntersectVerdict {
    pub fn is_intersecting(&self) -> bool {
        matches!(self.kind, IntersectKind::IntersectingCertified { .. })
    }
}

pub fn certify_intersecting<F: Field, R: Rng + ?Sized>(
    f: &F,
    t: &PositionTuple,
    samples: usize,
    rng: &mut R,
) -> Result<IntersectVerdict> {
    if samples == 0 {
        return Err(domain_err!("at least one sample is required"));
    }
    let edim = t.edim();
    if edim < 0 {
        return Ok(IntersectVerdict {
            kind: IntersectKind::NotIntersectingExact,
            edim,
            field: f.spec(),
            tdim_upper_bound: None,
        });
    }
    let mut best = usize::MAX;
    for _ in 0..samples {
        let (fs, gs) = random_flag_tuple(f, t, rng);
        let dim = h_intersection_dim(f, t, &fs, &gs)?;
        assert!(dim as i64 >= edim, "dim H = {dim} below edim = {edim}");
        best = best.min(dim);
        if dim as i64 == edim {
            let witness = Witness {
                field: f.spec(),
                f: fs.iter().map(|x| to_strings(f, x.basis())).collect(),
                g: gs.iter().map(|x| to_strings(f, x.basis())).collect(),
            };
            return Ok(IntersectVerdict {
                kind: IntersectKind::IntersectingCertified { witness },
                edim,
                field: f.spec(),
                tdim_upper_bound: Some(dim),
            });
        }
    }
    Ok(IntersectVerdict {
        kind: IntersectKind::NotIntersectingMc { samples, min_observed_dim: best },
        edim,
        field: f.spec(),
        tdim_upper_bound: Some(best),
    })
}

/// Elementary positions `(b, a)` spanning `H_I(F_0, G_0)`, in `(a, b)` order.
fn standard_h_positions(i: &CardSubset) -> Vec<(usize, usize)> {
    (1..=i.len()).flat_map(|a| (1..=i.at(a) - a).map(move |b| (b, a))).collect()
}

/// Matrix of the tangent map
/// `(ζ, φ_1..φ_s) ↦ (ζ + h_k φ_k g_k^{-1})_k` in the elementary bases.
pub fn tangent_map<F: Field>(
    f: &F,
    t: &PositionTuple,
    g_vec: &[Mat<F::Elem>],
    h_vec: &[Mat<F::Elem>],
) -> Result<Mat<F::Elem>> {
    let (r, n, s) = (t.r(), t.n(), t.s());
    let q = n - r;
    if g_vec.len() != s || h_vec.len() != s {
        return Err(shape_err!("{} g's and {} h's for a {s}-tuple", g_vec.len(), h_vec.len()));
    }
    let mut g_inv = Vec::with_capacity(s);
    for (k, (g, h)) in g_vec.iter().zip(h_vec).enumerate() {
        if (g.rows(), g.cols()) != (r, r) || (h.rows(), h.cols()) != (q, q) {
            return Err(shape_err!("g_{} must be {r}x{r} and h_{} must be {q}x{q}", k + 1, k + 1));
        }
        g_inv.push(g.inverse(f).map_err(|_| domain_err!("g_{} is singular", k + 1))?);
        if h.rank(f) != q {
            return Err(domain_err!("h_{} is singular", k + 1));
        }
    }
    let hom = r * q;
    let mut columns: Vec<Vec<F::Elem>> = Vec::new();
    for idx in 0..hom {
        let mut col = vec![f.zero(); s * hom];
        for k in 0..s {
            col[k * hom + idx] = f.one();
        }
        columns.push(col);
    }
    for (k, part) in t.parts().iter().enumerate() {
        for (b, a) in standard_h_positions(part) {
            // h E_{b,a} g^{-1} = (column b of h)(row a of g^{-1})
            let image = Mat::from_fn(q, r, |i, j| f.mul(h_vec[k].get(i, b - 1), g_inv[k].get(a - 1, j)));
            let mut col = vec![f.zero(); s * hom];
            for (off, x) in vec_of(&image).into_iter().enumerate() {
                col[k * hom + off] = x;
            }
            columns.push(col);
        }
    }
    Mat::from_columns(s * hom, columns)
}

/// The determinant function `δ_T(g⃗, h⃗)` for a tuple with `edim T = 0`.
pub fn delta_determinant<F: Field>(
    f: &F,
    t: &PositionTuple,
    g_vec: &[Mat<F::Elem>],
    h_vec: &[Mat<F::Elem>],
) -> Result<F::Elem> {
    if t.edim() != 0 {
        return Err(domain_err!("the determinant function needs edim 0, got {}", t.edim()));
    }
    tangent_map(f, t, g_vec, h_vec)?.det(f)
}

/// `χ_μ(b) = Π_i b(i,i)^{μ(i)}` for upper-triangular invertible `b`.
pub fn borel_character<F: Field>(f: &F, mu: &Weight, b: &Mat<F::Elem>) -> Result<F::Elem> {
    if !b.is_square() || b.rows() != mu.len() {
        return Err(shape_err!("weight of length {} for a {}x{} matrix", mu.len(), b.rows(), b.cols()));
    }
    if !b.is_upper_triangular(f) {
        return Err(domain_err!("matrix is not upper triangular"));
    }
    let mut acc = f.one();
    for i in 0..b.rows() {
        let e = mu.0[i]
            .to_i64()
            .ok_or_else(|| domain_err!("exponent {} does not fit in 64 bits", mu.0[i]))?;
        let p = f
            .pow(b.get(i, i), e)
            .ok_or_else(|| domain_err!("diagonal entry {} is zero", i + 1))?;
        acc = f.mul(&acc, &p);
    }
    Ok(acc)
}

/// Determinant of `φ ↦ g' φ g^{-1}` on all of `Hom(V_0, Q_0)`, computed from
/// the matrix of the map.
pub fn base_change_determinant<F: Field>(f: &F, g: &Mat<F::Elem>, g_prime: &Mat<F::Elem>) -> Result<F::Elem> {
    let (r, q) = (g.rows(), g_prime.rows());
    let g_inv = g.inverse(f)?;
    let mut columns = Vec::with_capacity(r * q);
    for a in 0..r {
        for b in 0..q {
            let image = Mat::from_fn(q, r, |i, j| f.mul(g_prime.get(i, b), g_inv.get(a, j)));
            columns.push(vec_of(&image));
        }
    }
    Mat::from_columns(r * q, columns)?.det(f)
}
