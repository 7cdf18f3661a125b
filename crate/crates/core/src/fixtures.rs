//! Reference data transcribed from published tables and worked examples.
//!
//! Tables list Horn triples up to permutation of the three components; the
//! representatives are kept exactly as printed, so comparisons should be made
//! on permutation closures.

use crate::combinatorics::{CardSubset, PositionTuple};
use crate::error::Result;
use crate::field::{Field, Sqrt5, Sqrt5Field};
use crate::flag::{Flag, SubspaceBasis};
use crate::matrix::Mat;

/// One printed row: a triple of subsets of `[r]` and its expected dimension.
#[derive(Clone, Copy, Debug)]
pub struct Row {
    pub parts: [&'static [usize]; 3],
    pub edim: i64,
}

/// All rows for `Horn(d, r, 3)`.
#[derive(Clone, Copy, Debug)]
pub struct HornTriples {
    pub d: usize,
    pub r: usize,
    pub rows: &'static [Row],
}

const fn row(a: &'static [usize], b: &'static [usize], c: &'static [usize], edim: i64) -> Row {
    Row { parts: [a, b, c], edim }
}

impl Row {
    pub fn tuple(&self, r: usize) -> PositionTuple {
        let parts: Vec<Vec<usize>> = self.parts.iter().map(|p| p.to_vec()).collect();
        PositionTuple::from_lists(r, &parts).expect("fixture rows are well formed")
    }
}

/// Horn triples for `d < r <= 4`, in the printed order.
pub const HORN_TRIPLES: &[HornTriples] = &[
    HornTriples { d: 1, r: 2, rows: &[row(&[1], &[2], &[2], 0), row(&[2], &[2], &[2], 1)] },
    HornTriples {
        d: 1,
        r: 3,
        rows: &[
            row(&[1], &[3], &[3], 0),
            row(&[2], &[2], &[3], 0),
            row(&[2], &[3], &[3], 1),
            row(&[3], &[3], &[3], 2),
        ],
    },
    HornTriples {
        d: 1,
        r: 4,
        rows: &[
            row(&[1], &[4], &[4], 0),
            row(&[2], &[3], &[4], 0),
            row(&[2], &[4], &[4], 1),
            row(&[3], &[3], &[3], 0),
            row(&[3], &[3], &[4], 1),
            row(&[3], &[4], &[4], 2),
            row(&[4], &[4], &[4], 3),
        ],
    },
    HornTriples {
        d: 2,
        r: 3,
        rows: &[
            row(&[1, 2], &[2, 3], &[2, 3], 0),
            row(&[1, 3], &[1, 3], &[2, 3], 0),
            row(&[1, 3], &[2, 3], &[2, 3], 1),
            row(&[2, 3], &[2, 3], &[2, 3], 2),
        ],
    },
    HornTriples {
        d: 2,
        r: 4,
        rows: &[
            row(&[1, 2], &[3, 4], &[3, 4], 0),
            row(&[1, 3], &[2, 4], &[3, 4], 0),
            row(&[1, 3], &[3, 4], &[3, 4], 1),
            row(&[1, 4], &[1, 4], &[3, 4], 0),
            row(&[1, 4], &[2, 4], &[2, 4], 0),
            row(&[1, 4], &[2, 4], &[3, 4], 1),
            row(&[1, 4], &[3, 4], &[3, 4], 2),
            row(&[2, 3], &[2, 3], &[3, 4], 0),
            row(&[2, 3], &[2, 4], &[2, 4], 0),
            row(&[2, 3], &[2, 4], &[3, 4], 1),
            row(&[2, 3], &[3, 4], &[3, 4], 2),
            row(&[2, 4], &[2, 4], &[2, 4], 1),
            row(&[2, 4], &[2, 4], &[3, 4], 2),
            row(&[2, 4], &[3, 4], &[3, 4], 3),
            row(&[3, 4], &[3, 4], &[3, 4], 4),
        ],
    },
    HornTriples {
        d: 3,
        r: 4,
        rows: &[
            row(&[1, 2, 3], &[2, 3, 4], &[2, 3, 4], 0),
            row(&[1, 2, 4], &[1, 3, 4], &[2, 3, 4], 0),
            row(&[1, 2, 4], &[2, 3, 4], &[2, 3, 4], 1),
            row(&[1, 3, 4], &[1, 3, 4], &[1, 3, 4], 0),
            row(&[1, 3, 4], &[1, 3, 4], &[2, 3, 4], 1),
            row(&[1, 3, 4], &[2, 3, 4], &[2, 3, 4], 2),
            row(&[2, 3, 4], &[2, 3, 4], &[2, 3, 4], 3),
        ],
    },
];

/// Representative inequalities of the Kirwan cone for three factors, grouped by
/// `(r, d)`; the full system is the permutation closure of these.
pub const KIRWAN_REPRESENTATIVES: &[(usize, usize, &[[&[usize]; 3]])] = &[
    (2, 1, &[[&[1], &[2], &[2]]]),
    (3, 1, &[[&[1], &[3], &[3]], [&[2], &[2], &[3]]]),
    (3, 2, &[[&[1, 2], &[2, 3], &[2, 3]], [&[1, 3], &[1, 3], &[2, 3]]]),
    (4, 1, &[[&[1], &[4], &[4]], [&[2], &[3], &[4]], [&[3], &[3], &[3]]]),
    (
        4,
        2,
        &[
            [&[1, 2], &[3, 4], &[3, 4]],
            [&[1, 3], &[2, 4], &[3, 4]],
            [&[1, 4], &[1, 4], &[3, 4]],
            [&[1, 4], &[2, 4], &[2, 4]],
            [&[2, 3], &[2, 3], &[3, 4]],
            [&[2, 3], &[2, 4], &[2, 4]],
        ],
    ),
    (
        4,
        3,
        &[
            [&[1, 2, 3], &[2, 3, 4], &[2, 3, 4]],
            [&[1, 2, 4], &[1, 3, 4], &[2, 3, 4]],
            [&[1, 3, 4], &[1, 3, 4], &[1, 3, 4]],
        ],
    ),
];

pub fn kirwan_representatives(r: usize) -> Vec<(usize, PositionTuple)> {
    KIRWAN_REPRESENTATIVES
        .iter()
        .filter(|(rr, _, _)| *rr == r)
        .flat_map(|&(rr, d, reps)| {
            reps.iter().map(move |parts| {
                let lists: Vec<Vec<usize>> = parts.iter().map(|p| p.to_vec()).collect();
                (d, PositionTuple::from_lists(rr, &lists).expect("fixture rows are well formed"))
            })
        })
        .collect()
}

/// The flag `E(t)` on `Q(√5)^6` with adapted basis `f(t), f'(t), ..., f^(5)(t)`
/// where `f(t) = Σ_k t^k / k! e_{k+1}`.
pub fn moment_curve_flag(t: i64) -> Flag<Sqrt5> {
    let f = Sqrt5Field;
    let q = crate::field::Rationals;
    let factorial = |k: usize| (1..=k as i64).product::<i64>();
    // column m: Σ_{k >= m} t^{k-m} / (k-m)! e_{k+1}
    let basis = Mat::from_fn(6, 6, |row, m| {
        if row < m {
            f.zero()
        } else {
            let e = row - m;
            let num = q.pow(&q.from_i64(t), e as i64).expect("nonnegative power");
            let val = q.div(&num, &q.from_i64(factorial(e))).expect("nonzero factorial");
            Sqrt5::new(val, q.zero())
        }
    });
    Flag::new(&f, basis).expect("unipotent basis")
}

/// The two subspaces `V_1`, `V_2` of `Q(√5)^6` in position `{2,4,6}` with
/// respect to `E(0)`, `E(1)` and `E(-1)`.
pub fn two_point_subspaces() -> [SubspaceBasis<Sqrt5>; 2] {
    let f = Sqrt5Field;
    let make = |sign: i64| {
        let s = |a: i64, b: i64| Sqrt5::from_ints(a, sign * b);
        // columns e2 + √5 e1, e4 - 24√5 e1 - 3√5 e3, e6 - 24√5 e3 + √5 e5
        let cols = vec![
            vec![s(0, 1), s(1, 0), s(0, 0), s(0, 0), s(0, 0), s(0, 0)],
            vec![s(0, -24), s(0, 0), s(0, -3), s(1, 0), s(0, 0), s(0, 0)],
            vec![s(0, 0), s(0, 0), s(0, -24), s(0, 0), s(0, 1), s(1, 0)],
        ];
        SubspaceBasis::new(&f, Mat::from_columns(6, cols).expect("six rows")).expect("independent")
    };
    [make(1), make(-1)]
}

pub fn two_point_position() -> CardSubset {
    CardSubset::new(6, vec![2, 4, 6]).expect("valid subset")
}

/// Parameters of the `r = 3`, `n = 6` tangent-space example.
#[derive(Clone, Debug)]
pub struct SixDimExample<E> {
    pub tuple: PositionTuple,
    pub f: Vec<Flag<E>>,
    pub g: Vec<Flag<E>>,
    /// The three maps spanning `H_I(F, G)` when `u31 u32 != 0`.
    pub phi: [Mat<E>; 3],
}

/// `I = ({3,4,6}, {2,4,5})` with `F_1`, `G_1` standard and `F_2`, `G_2` unipotent
/// lower triangular with entries `z` and `u`. Panics if `u31 u32 = 0`.
pub fn six_dim_example<F: Field>(
    f: &F,
    z: [&F::Elem; 3],
    u: [&F::Elem; 3],
) -> Result<SixDimExample<F::Elem>> {
    let [z21, z31, z32] = z;
    let [u21, u31, u32] = u;
    assert!(!f.is_zero(&f.mul(u31, u32)), "the example needs u31 u32 != 0");
    let lower = |a: &F::Elem, b: &F::Elem, c: &F::Elem| {
        Mat::from_rows(vec![
            vec![f.one(), f.zero(), f.zero()],
            vec![a.clone(), f.one(), f.zero()],
            vec![b.clone(), c.clone(), f.one()],
        ])
    };
    let fl = vec![Flag::standard(f, 3), Flag::new(f, lower(z21, z31, z32)?)?];
    let gl = vec![Flag::standard(f, 3), Flag::new(f, lower(u21, u31, u32)?)?];
    let w = f.sub(&f.mul(u32, u21), u31);
    let zero = f.zero();
    let phi1 = Mat::from_rows(vec![
        vec![f.neg(&f.mul(z21, u32)), u32.clone(), zero.clone()],
        vec![f.neg(&f.mul(z21, &w)), w.clone(), zero.clone()],
        vec![zero.clone(), zero.clone(), zero.clone()],
    ])?;
    let phi2 = Mat::from_rows(vec![
        vec![f.mul(z31, u32), zero.clone(), zero.clone()],
        vec![f.mul(z31, &w), zero.clone(), u31.clone()],
        vec![zero.clone(), zero.clone(), f.mul(u32, u31)],
    ])?;
    let phi3 = Mat::from_rows(vec![
        vec![zero.clone(), zero.clone(), f.one()],
        vec![zero.clone(), zero.clone(), u21.clone()],
        vec![zero.clone(), zero, u31.clone()],
    ])?;
    Ok(SixDimExample {
        tuple: PositionTuple::from_lists(6, &[vec![3, 4, 6], vec![2, 4, 5]])?,
        f: fl,
        g: gl,
        phi: [phi1, phi2, phi3],
    })
}
