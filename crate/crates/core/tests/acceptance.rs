//! Acceptance criteria. Runs without the libtest harness so that every
//! criterion prints exactly one PASS/FAIL line; exits nonzero on any failure.

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::Rng;
use rayon::prelude::*;

use horn_core::combinatorics::{enumerate_tuples, lambda_of_subset, CardSubset, PositionTuple, Weight};
use horn_core::field::{Field, PrimeField, Rationals};
use horn_core::fixtures::{
    kirwan_representatives, moment_curve_flag, six_dim_example, two_point_position, two_point_subspaces,
    HORN_TRIPLES,
};
use horn_core::flag::{position, Flag};
use horn_core::hn::{hn_minimizer_exhaustive, DEFAULT_BUDGET};
use horn_core::horn::HornTable;
use horn_core::kirwan::{kirwan_inequality_set, lr_nonvanishing};
use horn_core::matrix::Mat;
use horn_core::rng;
use horn_core::tangent::{
    borel_character, certify_intersecting, delta_determinant, h_contains, h_intersection_dim, tdim_estimate,
};
use horn_core::variational::variational_check;

type Outcome = Result<String, String>;

fn tuple(n: usize, parts: &[&[usize]]) -> PositionTuple {
    PositionTuple::from_lists(n, &parts.iter().map(|p| p.to_vec()).collect::<Vec<_>>()).unwrap()
}

fn closure(tuples: impl IntoIterator<Item = PositionTuple>) -> BTreeSet<PositionTuple> {
    tuples.into_iter().flat_map(|t| t.permutation_closure()).collect()
}

fn within(start: Instant, limit: Duration, detail: String) -> Outcome {
    let took = start.elapsed();
    if took > limit {
        Err(format!("{detail}; took {took:?}, limit {limit:?}"))
    } else {
        Ok(format!("{detail}; {took:.2?}"))
    }
}

fn c1_appendix_a() -> Outcome {
    let start = Instant::now();
    let table = HornTable::new();
    for fixture in HORN_TRIPLES {
        let (d, r) = (fixture.d, fixture.r);
        let printed: BTreeMap<PositionTuple, i64> =
            fixture.rows.iter().map(|row| (row.tuple(r).canonical(), row.edim)).collect();
        if printed.len() != fixture.rows.len() {
            return Err(format!("Horn({d},{r},3): printed rows repeat a class"));
        }
        let computed: BTreeMap<PositionTuple, i64> =
            table.classes(d, r, 3).into_iter().map(|e| (e.tuple, e.edim)).collect();
        if computed != printed {
            return Err(format!("Horn({d},{r},3): computed {computed:?}, printed {printed:?}"));
        }
        let members: BTreeSet<PositionTuple> = table.enumerate(d, r, 3).into_iter().map(|e| e.tuple).collect();
        if members != closure(printed.keys().cloned()) {
            return Err(format!("Horn({d},{r},3): permutation closures differ"));
        }
    }
    let edims: Vec<i64> = HORN_TRIPLES[5].rows.iter().map(|r| r.edim).collect();
    if edims != [0, 0, 1, 0, 1, 2, 3] {
        return Err(format!("Horn(3,4,3) edims {edims:?}"));
    }
    within(start, Duration::from_secs(1), "6 tables, classes and edims identical".into())
}

fn c2_appendix_b() -> Outcome {
    let start = Instant::now();
    let table = HornTable::new();
    // closure sizes by hand: a triple with three distinct parts has 6
    // reorderings, two equal parts 3, all equal 1
    let expected_sizes = [(2, 3), (3, 12), (4, 41)];
    let mut sizes = Vec::new();
    for (r, size) in expected_sizes {
        let computed: BTreeSet<PositionTuple> =
            kirwan_inequality_set(r, 3, &table).map_err(|e| e.to_string())?.into_iter().map(|(_, j)| j).collect();
        let reps = kirwan_representatives(r);
        let printed = closure(reps.iter().map(|(_, t)| t.clone()));
        if printed.len() != size {
            return Err(format!("r={r}: printed closure has {} elements, oracle {size}", printed.len()));
        }
        if computed != printed {
            return Err(format!("r={r}: inequality sets differ"));
        }
        for (d, t) in &reps {
            if t.r() != *d {
                return Err(format!("r={r}: representative {t} filed under d={d}"));
            }
        }
        sizes.push(format!("r={r}: {size}"));
    }
    within(start, Duration::from_secs(1), format!("closures equal ({})", sizes.join(", ")))
}

fn c3_oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let table = HornTable::new();
    let field = PrimeField::default();
    let mut jobs = Vec::new();
    for s in [2, 3] {
        for n in 1..=6 {
            for r in 1..=n.min(3) {
                jobs.extend(enumerate_tuples(r, n, s).unwrap());
                table.level(r, n, s);
            }
        }
    }
    let verdicts: Vec<(bool, bool)> = jobs
        .par_iter()
        .enumerate()
        .map(|(idx, t)| {
            let mut rng = rng::stream(2024, idx as u64);
            let geometric = certify_intersecting(&field, t, 3, &mut rng).unwrap().is_intersecting();
            (geometric, table.member(t).unwrap().member)
        })
        .collect();
    let members = verdicts.iter().filter(|v| v.1).count();
    let disagreements: Vec<String> = jobs
        .iter()
        .zip(&verdicts)
        .filter(|(_, (g, h))| g != h)
        .map(|(t, (g, h))| format!("{t}: geometric {g}, horn {h}"))
        .collect();
    let big = enumerate_tuples(3, 6, 3).unwrap().len();
    if big != 8000 {
        return Err(format!("Subsets(3,6,3) has {big} tuples"));
    }
    if !disagreements.is_empty() {
        return Err(format!(
            "{} of {} disagree, first: {}",
            disagreements.len(),
            jobs.len(),
            disagreements[0]
        ));
    }
    within(start, Duration::from_secs(60), format!("{} tuples agree ({members} intersecting)", jobs.len()))
}

fn c4_tdim_examples() -> Outcome {
    let q = Rationals;
    let mut rng = rng::master(4);
    for (t, want) in [
        (tuple(4, &[&[1, 4], &[2, 4]]), (1, 1)),
        (tuple(4, &[&[1, 4], &[2, 3]]), (1, 0)),
        (tuple(6, &[&[3, 4, 6], &[2, 4, 5]]), (3, 3)),
    ] {
        let got = (tdim_estimate(&q, &t, 3, &mut rng).map_err(|e| e.to_string())? as i64, t.edim());
        if got != want {
            return Err(format!("{t}: (tdim, edim) = {got:?}, expected {want:?}"));
        }
    }
    for trial in 0..5 {
        let z: Vec<BigRational> = (0..3).map(|_| q.random(&mut rng)).collect();
        let u: Vec<BigRational> =
            vec![q.random(&mut rng), q.random_nonzero(&mut rng), q.random_nonzero(&mut rng)];
        let ex = six_dim_example(&q, [&z[0], &z[1], &z[2]], [&u[0], &u[1], &u[2]]).map_err(|e| e.to_string())?;
        let dim = h_intersection_dim(&q, &ex.tuple, &ex.f, &ex.g).map_err(|e| e.to_string())?;
        if dim != 3 {
            return Err(format!("trial {trial}: dim H = {dim}"));
        }
        for (i, phi) in ex.phi.iter().enumerate() {
            for (k, part) in ex.tuple.parts().iter().enumerate() {
                if !h_contains(&q, part, &ex.f[k], &ex.g[k], phi).map_err(|e| e.to_string())? {
                    return Err(format!("trial {trial}: phi_{} not in H_{}", i + 1, k + 1));
                }
            }
        }
        let flat: Vec<Vec<BigRational>> =
            ex.phi.iter().map(|m| (0..3).flat_map(|a| m.column(a)).collect()).collect();
        if Mat::from_rows(flat).unwrap().rank(&q) != 3 {
            return Err(format!("trial {trial}: the three maps are dependent"));
        }
    }
    Ok("(1,1), (1,0), (3,3); three maps span H at 5 rational points".into())
}

fn c5_two_points() -> Outcome {
    let f = horn_core::field::Sqrt5Field;
    let want = two_point_position();
    for (i, v) in two_point_subspaces().iter().enumerate() {
        for t in [0, 1, -1] {
            let got = position(&f, v, &moment_curve_flag(t)).map_err(|e| e.to_string())?;
            if got != want {
                return Err(format!("V_{} in E({t}) has position {got}", i + 1));
            }
        }
    }
    Ok("V_1, V_2 in position {2, 4, 6} for E(0), E(1), E(-1)".into())
}

fn random_antidominant<R: Rng>(r: usize, rng: &mut R) -> Weight {
    let mut xs: Vec<i64> = (0..r).map(|_| rng.gen_range(-3..=3)).collect();
    xs.sort();
    Weight::from_i64s(&xs)
}

fn c6_harder_narasimhan() -> Outcome {
    let start = Instant::now();
    let mut visited = 0;
    for r in [2, 3, 4] {
        for q in [2, 3] {
            let field = PrimeField::new(q).unwrap();
            for trial in 0..100 {
                let mut rng = rng::stream(6, (r * 1000 + q as usize * 100 + trial) as u64);
                let s = rng.gen_range(1..=3);
                let flags: Vec<Flag<u64>> = (0..s).map(|_| Flag::random(&field, r, &mut rng)).collect();
                let theta: Vec<Weight> = (0..s).map(|_| random_antidominant(r, &mut rng)).collect();
                let res = hn_minimizer_exhaustive(&field, &flags, &theta, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
                visited += res.visited;
                if res.multiplicity != 1 {
                    return Err(format!("r={r}, q={q}, trial {trial}: multiplicity {}", res.multiplicity));
                }
            }
        }
    }
    within(start, Duration::from_secs(30), format!("600 trials unique, {visited} subspaces visited"))
}

fn c7_delta() -> Outcome {
    let q = Rationals;
    let mut rng = rng::master(7);
    let random_pair = |t: &PositionTuple, rng: &mut rng::Rng| {
        let (r, m) = (t.r(), t.n() - t.r());
        let g: Vec<_> = (0..t.s()).map(|_| Mat::random_invertible(&q, r, rng)).collect();
        let h: Vec<_> = (0..t.s()).map(|_| Mat::random_invertible(&q, m, rng)).collect();
        (g, h)
    };
    let err = |e: horn_core::Error| e.to_string();
    for t in [tuple(6, &[&[2, 4, 6], &[2, 4, 6], &[2, 4, 6]]), tuple(3, &[&[1, 2], &[2, 3], &[2, 3]])] {
        let (r, n, s) = (t.r(), t.n(), t.s() as i64);
        let m = n - r;
        let mut nonzero = 0;
        for inst in 0..20 {
            let (g, h) = random_pair(&t, &mut rng);
            let base = delta_determinant(&q, &t, &g, &h).map_err(err)?;
            if !q.is_zero(&base) {
                nonzero += 1;
            }
            // right Borel action
            let b: Vec<_> = (0..t.s()).map(|_| Mat::random_upper_triangular(&q, r, &mut rng)).collect();
            let bp: Vec<_> = (0..t.s()).map(|_| Mat::random_upper_triangular(&q, m, &mut rng)).collect();
            let gb: Vec<_> = g.iter().zip(&b).map(|(x, y)| x.mul(&q, y).unwrap()).collect();
            let hb: Vec<_> = h.iter().zip(&bp).map(|(x, y)| x.mul(&q, y).unwrap()).collect();
            let mut factor = q.one();
            for (k, part) in t.parts().iter().enumerate() {
                let lc = lambda_of_subset(&part.complement()).shifted(&(r as i64).into());
                factor = q.mul(&factor, &borel_character(&q, &lambda_of_subset(part), &b[k]).map_err(err)?);
                factor = q.mul(&factor, &borel_character(&q, &lc, &bp[k]).map_err(err)?);
            }
            let lhs = delta_determinant(&q, &t, &gb, &hb).map_err(err)?;
            if lhs != q.mul(&base, &factor) {
                return Err(format!("{t}, instance {inst}: Borel identity fails"));
            }
            // diagonal action
            let d = Mat::random_invertible(&q, r, &mut rng);
            let dp = Mat::random_invertible(&q, m, &mut rng);
            let (di, dpi) = (d.inverse(&q).unwrap(), dp.inverse(&q).unwrap());
            let g2: Vec<_> = g.iter().map(|x| di.mul(&q, x).unwrap()).collect();
            let h2: Vec<_> = h.iter().map(|x| dpi.mul(&q, x).unwrap()).collect();
            let e1 = -(m as i64) * (1 - s);
            let e2 = (r as i64) * (1 - s);
            let scale = q.mul(
                &q.pow(&d.det(&q).unwrap(), e1).unwrap(),
                &q.pow(&dp.det(&q).unwrap(), e2).unwrap(),
            );
            let lhs = delta_determinant(&q, &t, &g2, &h2).map_err(err)?;
            if lhs != q.mul(&base, &scale) {
                return Err(format!("{t}, instance {inst}: diagonal identity fails"));
            }
        }
        if nonzero == 0 {
            return Err(format!("{t}: delta vanished on every instance"));
        }
    }
    let t = tuple(4, &[&[1, 4], &[2, 3]]);
    for inst in 0..20 {
        let (g, h) = random_pair(&t, &mut rng);
        if !q.is_zero(&delta_determinant(&q, &t, &g, &h).map_err(err)?) {
            return Err(format!("{t}: delta nonzero on instance {inst}"));
        }
    }
    Ok("both identities exact on 2x20 instances; delta = 0 on 20 samples of ({1,4},{2,3})".into())
}

fn c8_variational() -> Outcome {
    let start = Instant::now();
    let mut rng = rng::master(8);
    let sets = [vec![2, 4, 6], vec![1, 6], vec![6]];
    let mut worst: f64 = f64::INFINITY;
    for trial in 0..10 {
        let mut xi: Vec<f64> = (0..6).map(|_| rng.gen_range(-1.0..1.0)).collect();
        xi.sort_by(|a, b| b.partial_cmp(a).unwrap());
        for j in &sets {
            let j = CardSubset::new(6, j.clone()).unwrap();
            let rep = variational_check(&xi, &j, 50, 1e-9, &mut rng).map_err(|e| e.to_string())?;
            if !rep.passed {
                return Err(format!("trial {trial}, J = {j}: {rep:?}"));
            }
            worst = worst.min(rep.margin);
        }
    }
    within(start, Duration::from_secs(5), format!("1500 samples above the bound, smallest margin {worst:.3e}"))
}

fn c9_saturation() -> Outcome {
    let start = Instant::now();
    let table = HornTable::new();
    let mut rng = rng::master(9);
    let lr = |l: &[Weight]| lr_nonvanishing(l, &table).map(|rep| rep.member).map_err(|e| e.to_string());
    let mut positives = 0;
    for trial in 0..200 {
        let r = rng.gen_range(1..=4);
        let mut parts: Vec<Vec<i64>> = (0..3)
            .map(|_| {
                let mut v: Vec<i64> = (0..r).map(|_| rng.gen_range(-4..=4)).collect();
                v.sort_by(|a, b| b.cmp(a));
                v
            })
            .collect();
        // fix the trace on the last part without leaving the chamber
        let total: i64 = parts.iter().flatten().sum();
        let last = parts.choose_mut(&mut rng).unwrap();
        if total > 0 {
            last[r - 1] -= total;
        } else {
            last[0] -= total;
        }
        let lambda: Vec<Weight> = parts.iter().map(|p| Weight::from_i64s(p)).collect();
        let base = lr(&lambda)?;
        positives += base as usize;
        for n in [2i64, 3] {
            let scaled: Vec<Weight> = lambda.iter().map(|w| w.scaled(&n.into())).collect();
            if lr(&scaled)? != base {
                return Err(format!("trial {trial}: {parts:?} changes under scaling by {n}"));
            }
        }
    }
    // r = 2 up to trace-preserving shifts: λ_1 = (δ_1, 0), λ_2 = (δ_2, 0),
    // λ_3 = (a + δ_3, a)
    let mut grid = 0;
    for d1 in 0..=6i64 {
        for d2 in 0..=6i64 {
            for d3 in 0..=6i64 {
                for a in -12..=12i64 {
                    let xi = [[d1, 0], [d2, 0], [a + d3, a]];
                    let trace: i64 = xi.iter().flatten().sum();
                    let closed = trace == 0
                        && (0..3).all(|k| (0..3).map(|l| if l == k { xi[l][0] } else { xi[l][1] }).sum::<i64>() <= 0);
                    let lambda: Vec<Weight> = xi.iter().map(|p| Weight::from_i64s(p)).collect();
                    if lr(&lambda)? != closed {
                        return Err(format!("r=2 grid point {xi:?}: closed form says {closed}"));
                    }
                    grid += 1;
                }
            }
        }
    }
    if positives == 0 || positives == 200 {
        return Err(format!("random sample is degenerate: {positives} of 200 positive"));
    }
    within(
        start,
        Duration::from_secs(10),
        format!("200 random tuples ({positives} positive) scale invariant; {grid} r=2 grid points agree"),
    )
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("C1 Horn triple tables", c1_appendix_a),
        ("C2 Kirwan inequality systems", c2_appendix_b),
        ("C3 geometric/combinatorial equivalence", c3_oracle_equivalence),
        ("C4 worked true dimensions", c4_tdim_examples),
        ("C5 two-point intersection", c5_two_points),
        ("C6 Harder-Narasimhan uniqueness", c6_harder_narasimhan),
        ("C7 determinant function equivariance", c7_delta),
        ("C8 variational principle", c8_variational),
        ("C9 saturation and r=2 closed form", c9_saturation),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        match std::panic::catch_unwind(run) {
            Ok(Ok(detail)) => println!("PASS {name}: {detail}"),
            Ok(Err(detail)) => {
                failed += 1;
                println!("FAIL {name}: {detail}");
            }
            Err(_) => {
                failed += 1;
                println!("FAIL {name}: panicked");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 9 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
