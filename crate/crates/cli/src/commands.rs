use rayon::prelude::*;
use serde::de::DeserializeOwned;
use serde_json::{json, Value};

use horn_core::fixtures::{kirwan_representatives, moment_curve_flag, two_point_position, two_point_subspaces, HORN_TRIPLES};
use horn_core::flag::{position, sample_cell_point};
use horn_core::hn::hn_minimizer_exhaustive;
use horn_core::io::{MatrixFile, Ratio};
use horn_core::kirwan::{kirwan_check, kirwan_inequality_set, lr_nonvanishing, KirwanPoint};
use horn_core::tangent::{certify_intersecting, delta_determinant, IntersectKind, IntersectVerdict};
use horn_core::variational::variational_check;
use horn_core::{
    enumerate_tuples, rng, CardSubset, Field, FieldSpec, Flag, HornEntry, HornTable, Mat, PositionTuple, PrimeField,
    Rationals, Sqrt5Field, SubspaceBasis, Weight,
};

use crate::args::*;
use crate::render;
use crate::{CliError, Output};

type Outcome = Result<Output, CliError>;

/// Samples used when a Monte-Carlo "no" disagrees with the recursion.
const ESCALATED_SAMPLES: usize = 10;

macro_rules! with_field {
    ($spec:expr, |$f:ident| $body:expr) => {
        match $spec {
            FieldSpec::Rational => {
                let $f = &Rationals;
                $body
            }
            FieldSpec::Prime(p) => {
                let $f = &PrimeField::new(p)?;
                $body
            }
            FieldSpec::Sqrt5 => {
                let $f = &Sqrt5Field;
                $body
            }
        }
    };
}

pub fn run(cli: &Cli) -> Outcome {
    let g = &cli.global;
    let table = HornTable::new();
    match &cli.command {
        Command::Horn(HornCmd::Enumerate { r, n, s, classes }) => horn_enumerate(g, &table, *r, *n, *s, *classes),
        Command::Horn(HornCmd::Check(t)) => {
            json_only(g)?;
            let tuple = parse_tuple(t)?;
            let verdict = table.member(&tuple)?;
            let member = verdict.member;
            emit(&json!({ "tuple": tuple, "verdict": verdict }), member)
        }
        Command::Horn0 { d, r, s } => horn0(g, &table, *d, *r, *s),
        Command::Intersect(IntersectCmd::Certify(t)) => {
            json_only(g)?;
            let tuple = parse_tuple(t)?;
            let verdict = with_field!(g.field_spec()?, |f| certify_intersecting(
                f,
                &tuple,
                g.samples,
                &mut rng::master(g.seed)
            )?);
            let horn = table.member(&tuple)?;
            let ok = verdict.is_intersecting();
            emit(&json!({ "tuple": tuple, "seed": g.seed, "verdict": verdict, "horn": horn }), ok)
        }
        Command::Intersect(IntersectCmd::Sweep { r, n, s }) => sweep(g, &table, *r, *n, *s),
        Command::Kirwan(KirwanCmd::Ineqs { r, s }) => kirwan_ineqs(g, &table, *r, *s),
        Command::Kirwan(KirwanCmd::Check { xi }) => {
            json_only(g)?;
            let point: KirwanPoint = parse_json("--xi", xi)?;
            let report = kirwan_check(&point, &table)?;
            let member = report.member;
            emit(&json!({ "xi": point, "report": report }), member)
        }
        Command::Lr(LrCmd::Nonzero { lambda }) => {
            json_only(g)?;
            let weights: Vec<Weight> = parse_json("--lambda", lambda)?;
            let report = lr_nonvanishing(&weights, &table)?;
            let member = report.member;
            emit(&json!({ "lambda": weights, "nonzero": member, "report": report }), member)
        }
        Command::Pos(PosCmd::Compute { subspace, flag }) => {
            json_only(g)?;
            let sub: MatrixFile = parse_json("--subspace", &load(subspace)?)?;
            let flag: Option<MatrixFile> = flag.as_deref().map(|t| parse_json("--flag", &load(t)?)).transpose()?;
            let body = with_field!(sub.field, |f| pos_compute(f, &sub, flag.as_ref())?);
            emit(&body, true)
        }
        Command::Cell(CellCmd::Sample { n, subset, flag }) => {
            json_only(g)?;
            let elements: Vec<usize> = parse_json("--subset", subset)?;
            let i = CardSubset::new(*n, elements)?;
            let flag: Option<MatrixFile> = flag.as_deref().map(|t| parse_json("--flag", &load(t)?)).transpose()?;
            let body = with_field!(g.field_spec()?, |f| cell_sample(f, &i, flag.as_ref(), g.seed)?);
            emit(&body, true)
        }
        Command::Hn(HnCmd::Search { theta, flags }) => hn_search(g, theta, flags.as_deref()),
        Command::Delta(DeltaCmd::Eval { tuple, g: gs, h: hs }) => {
            json_only(g)?;
            let t = parse_tuple(tuple)?;
            let gs: Option<Vec<MatrixFile>> = gs.as_deref().map(|x| parse_json("--g", &load(x)?)).transpose()?;
            let hs: Option<Vec<MatrixFile>> = hs.as_deref().map(|x| parse_json("--h", &load(x)?)).transpose()?;
            let body = with_field!(g.field_spec()?, |f| delta_eval(f, &t, gs.as_deref(), hs.as_deref(), g.seed)?);
            emit(&body, true)
        }
        Command::Variational(VariationalCmd::Demo { xi, j, trials, tolerance }) => {
            json_only(g)?;
            let xi: Vec<f64> = parse_json("--xi", xi)?;
            let j: Vec<usize> = parse_json("--j", j)?;
            let j = CardSubset::new(xi.len(), j)?;
            let report = variational_check(&xi, &j, *trials, *tolerance, &mut rng::master(g.seed))?;
            let passed = report.passed;
            emit(&report, passed)
        }
        Command::Tables(TablesCmd::AppendixA) => appendix_a(g, &table),
        Command::Tables(TablesCmd::AppendixB) => appendix_b(g, &table),
        Command::Fixtures(FixturesCmd::TwoPoint) => {
            json_only(g)?;
            two_point()
        }
    }
}

// ---------------------------------------------------------------- input

fn parse_json<T: DeserializeOwned>(what: &str, text: &str) -> Result<T, CliError> {
    serde_json::from_str(text).map_err(|err| CliError::Json { what: what.to_string(), err })
}

/// Inline JSON is used as is; anything else names a file.
fn load(arg: &str) -> Result<String, CliError> {
    let trimmed = arg.trim_start();
    if trimmed.starts_with('{') || trimmed.starts_with('[') {
        return Ok(arg.to_string());
    }
    std::fs::read_to_string(arg).map_err(|e| CliError::Usage(format!("cannot read {arg}: {e}")))
}

/// A list of subsets (with `--n`) or a full `{"n", "parts"}` object.
fn parse_tuple(arg: &TupleArg) -> Result<PositionTuple, CliError> {
    if arg.tuple.trim_start().starts_with('[') {
        let parts: Vec<Vec<usize>> = parse_json("--tuple", &arg.tuple)?;
        let n = arg.n.ok_or_else(|| CliError::Usage("--n is required for a list of subsets".into()))?;
        return Ok(PositionTuple::from_lists(n, &parts)?);
    }
    let t: PositionTuple = parse_json("--tuple", &arg.tuple)?;
    match arg.n {
        Some(n) if n != t.n() => Err(CliError::Usage(format!("--n {n} disagrees with the tuple's n = {}", t.n()))),
        _ => Ok(t),
    }
}

fn json_only(g: &Global) -> Result<(), CliError> {
    match g.format {
        Format::Json | Format::Text => Ok(()),
        other => Err(CliError::Usage(format!("--format {other:?} is not available for this command").to_lowercase())),
    }
}

fn emit<T: serde::Serialize>(value: &T, verdict: bool) -> Outcome {
    let body = serde_json::to_string_pretty(value).expect("output values serialize");
    Ok(Output { body, verdict })
}

fn check_shape(r: usize, n: usize, s: usize) -> Result<(), CliError> {
    if r == 0 || r > n || s == 0 {
        return Err(CliError::Usage(format!("need 0 < r <= n and s > 0, got r = {r}, n = {n}, s = {s}")));
    }
    Ok(())
}

// ---------------------------------------------------------------- horn

fn subset_cells(t: &PositionTuple, tex: bool) -> Vec<String> {
    t.parts().iter().map(|p| if tex { render::tex_braces(p) } else { render::braces(p) }).collect()
}

fn part_header(s: usize) -> Vec<String> {
    (1..=s).map(|k| format!("J{k}")).collect()
}

fn entry_table(g: &Global, s: usize, entries: &[HornEntry]) -> String {
    let mut header = part_header(s);
    header.push("edim".into());
    let header: Vec<&str> = header.iter().map(String::as_str).collect();
    match g.format {
        Format::Csv => {
            let rows: Vec<Vec<String>> = entries
                .iter()
                .map(|e| {
                    let mut row = subset_cells(&e.tuple, false);
                    row.push(e.edim.to_string());
                    row
                })
                .collect();
            render::csv(&header, &rows)
        }
        Format::Tex => entries.iter().map(|e| tex_row(None, &e.tuple, e.edim) + "\n").collect(),
        _ => {
            let rows: Vec<Vec<String>> = entries
                .iter()
                .map(|e| {
                    let mut row = subset_cells(&e.tuple, false);
                    row.push(if e.edim == 0 { "0 *".into() } else { e.edim.to_string() });
                    row
                })
                .collect();
            render::text_table(&header, &rows)
        }
    }
}

/// One longtable row; `edim = 0` rows are set in bold.
fn tex_row(lead: Option<usize>, t: &PositionTuple, edim: i64) -> String {
    let bold = if edim == 0 { "\\bf " } else { "" };
    let mut cells: Vec<String> = vec![lead.map(|r| r.to_string()).unwrap_or_default()];
    cells.extend(subset_cells(t, true).into_iter().map(|c| format!("{bold}{c}")));
    cells.push(format!("{bold}{edim}"));
    format!("{} \\\\", cells.join(" & "))
}

fn horn_enumerate(g: &Global, table: &HornTable, r: usize, n: usize, s: usize, classes: bool) -> Outcome {
    check_shape(r, n, s)?;
    let entries = if classes { table.classes(r, n, s) } else { table.enumerate(r, n, s) };
    if g.format == Format::Json {
        return emit(&json!({ "r": r, "n": n, "s": s, "count": entries.len(), "entries": entries }), true);
    }
    Ok(Output { body: entry_table(g, s, &entries), verdict: true })
}

fn horn0(g: &Global, table: &HornTable, d: usize, r: usize, s: usize) -> Outcome {
    check_shape(d, r, s)?;
    let tuples = table.horn0(d, r, s);
    if g.format == Format::Json {
        return emit(&json!({ "d": d, "r": r, "s": s, "count": tuples.len(), "tuples": tuples }), true);
    }
    let entries: Vec<HornEntry> = tuples.into_iter().map(|tuple| HornEntry { tuple, edim: 0 }).collect();
    Ok(Output { body: entry_table(g, s, &entries), verdict: true })
}

// ---------------------------------------------------------------- intersect

fn certify_with_escalation<F: Field>(
    f: &F,
    t: &PositionTuple,
    samples: usize,
    expected: bool,
    seed: u64,
    index: u64,
    offset: u64,
) -> Result<IntersectVerdict, CliError> {
    let verdict = certify_intersecting(f, t, samples, &mut rng::stream(seed, index))?;
    if verdict.is_intersecting() != expected && matches!(verdict.kind, IntersectKind::NotIntersectingMc { .. }) {
        let samples = samples.max(ESCALATED_SAMPLES);
        return Ok(certify_intersecting(f, t, samples, &mut rng::stream(seed, offset + index))?);
    }
    Ok(verdict)
}

fn sweep(g: &Global, table: &HornTable, r: usize, n: usize, s: usize) -> Outcome {
    check_shape(r, n, s)?;
    let tuples = enumerate_tuples(r, n, s)?;
    let expected: Vec<bool> = tuples.iter().map(|t| table.contains(t)).collect();
    let offset = tuples.len() as u64;
    let verdicts: Vec<IntersectVerdict> = with_field!(g.field_spec()?, |f| tuples
        .par_iter()
        .zip(&expected)
        .enumerate()
        .map(|(idx, (t, &e))| certify_with_escalation(f, t, g.samples, e, g.seed, idx as u64, offset))
        .collect::<Result<Vec<_>, CliError>>()?);
    let disagreements = verdicts.iter().zip(&expected).filter(|(v, &e)| v.is_intersecting() != e).count();
    let ok = disagreements == 0;
    match g.format {
        Format::Json => {
            let rows: Vec<Value> = tuples
                .iter()
                .zip(&verdicts)
                .zip(&expected)
                .map(|((t, v), e)| json!({ "tuple": t, "horn": e, "verdict": v }))
                .collect();
            emit(
                &json!({
                    "r": r, "n": n, "s": s, "seed": g.seed, "field": g.field_spec()?,
                    "tuples": tuples.len(),
                    "intersecting": expected.iter().filter(|&&e| e).count(),
                    "disagreements": disagreements,
                    "results": rows,
                }),
                ok,
            )
        }
        Format::Tex => Err(CliError::Usage("--format tex is not available for this command".into())),
        _ => {
            let mut header = part_header(s);
            header.extend(["edim", "horn", "certified"].map(String::from));
            let header: Vec<&str> = header.iter().map(String::as_str).collect();
            let rows: Vec<Vec<String>> = tuples
                .iter()
                .zip(&verdicts)
                .zip(&expected)
                .map(|((t, v), e)| {
                    let mut row = subset_cells(t, false);
                    row.push(t.edim().to_string());
                    row.push(e.to_string());
                    row.push(v.is_intersecting().to_string());
                    row
                })
                .collect();
            let body = if g.format == Format::Csv {
                render::csv(&header, &rows)
            } else {
                let mut out = render::text_table(&header, &rows);
                out.push_str(&format!("{} tuples, {disagreements} disagreements\n", tuples.len()));
                out
            };
            Ok(Output { body, verdict: ok })
        }
    }
}

// ---------------------------------------------------------------- kirwan

fn kirwan_ineqs(g: &Global, table: &HornTable, r: usize, s: usize) -> Outcome {
    let set = kirwan_inequality_set(r, s, table)?;
    match g.format {
        Format::Json => {
            let rows: Vec<Value> = set.iter().map(|(d, j)| json!({ "d": d, "j": j })).collect();
            emit(&json!({ "r": r, "s": s, "count": set.len(), "inequalities": rows }), true)
        }
        Format::Csv => {
            let mut header = vec!["d".to_string()];
            header.extend(part_header(s));
            let header: Vec<&str> = header.iter().map(String::as_str).collect();
            let rows: Vec<Vec<String>> = set
                .iter()
                .map(|(d, j)| {
                    let mut row = vec![d.to_string()];
                    row.extend(subset_cells(j, false));
                    row
                })
                .collect();
            Ok(Output { body: render::csv(&header, &rows), verdict: true })
        }
        Format::Tex => {
            let names = render::part_names(s, true);
            let body = set.iter().map(|(_, j)| format!("{} \\\\\n", render::inequality(j, &names, true))).collect();
            Ok(Output { body, verdict: true })
        }
        Format::Text => {
            let names = render::part_names(s, false);
            let body = set.iter().map(|(_, j)| render::inequality(j, &names, false) + "\n").collect();
            Ok(Output { body, verdict: true })
        }
    }
}

// ---------------------------------------------------------------- linear algebra

fn pos_compute<F: Field>(f: &F, sub: &MatrixFile, flag: Option<&MatrixFile>) -> Result<Value, CliError> {
    let s = SubspaceBasis::new(f, sub.to_matrix(f)?)?;
    let e = match flag {
        Some(file) => Flag::new(f, file.to_matrix(f)?)?,
        None => Flag::standard(f, s.ambient_dim()),
    };
    let pos = position(f, &s, &e)?;
    Ok(json!({ "field": f.spec(), "position": pos, "cell_dimension": pos.dim() }))
}

fn cell_sample<F: Field>(f: &F, i: &CardSubset, flag: Option<&MatrixFile>, seed: u64) -> Result<Value, CliError> {
    let e = match flag {
        Some(file) => Flag::new(f, file.to_matrix(f)?)?,
        None => Flag::standard(f, i.ground()),
    };
    let point = sample_cell_point(f, i, &e, &mut rng::master(seed))?;
    Ok(json!({
        "field": f.spec(),
        "subset": i,
        "basis": MatrixFile::from_matrix(f, point.basis()),
        "position_verified": true,
    }))
}

fn hn_search(g: &Global, theta: &str, flags: Option<&str>) -> Outcome {
    json_only(g)?;
    if matches!(g.field, Some(FieldArg::Rational | FieldArg::Sqrt5)) {
        return Err(CliError::Usage("the search runs over a prime field".into()));
    }
    // the search is exhaustive, so the default field is GF(2)
    let f = PrimeField::new(g.prime.unwrap_or(2))?;
    let theta: Vec<Weight> = parse_json("--theta", theta)?;
    let r = theta.first().map(Weight::len).ok_or_else(|| CliError::Usage("--theta is empty".into()))?;
    let flags: Vec<Flag<u64>> = match flags {
        Some(text) => {
            let files: Vec<MatrixFile> = parse_json("--flags", &load(text)?)?;
            files.iter().map(|m| Ok(Flag::new(&f, m.to_matrix(&f)?)?)).collect::<Result<_, CliError>>()?
        }
        None => {
            let mut rng = rng::master(g.seed);
            theta.iter().map(|_| Flag::random(&f, r, &mut rng)).collect()
        }
    };
    let res = hn_minimizer_exhaustive(&f, &flags, &theta, g.budget)?;
    emit(
        &json!({
            "field": f.spec(),
            "theta": theta,
            "flags": flags.iter().map(|fl| MatrixFile::from_matrix(&f, fl.basis())).collect::<Vec<_>>(),
            "subspace": MatrixFile::from_matrix(&f, res.subspace.basis()),
            "dim": res.subspace.dim(),
            "positions": res.positions,
            "slope": Ratio(res.slope),
            "multiplicity": res.multiplicity,
            "visited": res.visited,
        }),
        true,
    )
}

fn group_elements<F: Field>(
    f: &F,
    files: Option<&[MatrixFile]>,
    count: usize,
    size: usize,
    rng: &mut rng::Rng,
) -> Result<Vec<Mat<F::Elem>>, CliError> {
    match files {
        Some(files) => {
            if files.len() != count {
                return Err(CliError::Usage(format!("expected {count} matrices, got {}", files.len())));
            }
            Ok(files.iter().map(|m| m.to_matrix(f)).collect::<horn_core::Result<_>>()?)
        }
        None => Ok((0..count).map(|_| Mat::random_invertible(f, size, rng)).collect()),
    }
}

fn delta_eval<F: Field>(
    f: &F,
    t: &PositionTuple,
    gs: Option<&[MatrixFile]>,
    hs: Option<&[MatrixFile]>,
    seed: u64,
) -> Result<Value, CliError> {
    let mut rng = rng::master(seed);
    let g = group_elements(f, gs, t.s(), t.r(), &mut rng)?;
    let h = group_elements(f, hs, t.s(), t.n() - t.r(), &mut rng)?;
    let value = delta_determinant(f, t, &g, &h)?;
    Ok(json!({
        "tuple": t,
        "field": f.spec(),
        "value": f.format(&value),
        "g": g.iter().map(|m| MatrixFile::from_matrix(f, m)).collect::<Vec<_>>(),
        "h": h.iter().map(|m| MatrixFile::from_matrix(f, m)).collect::<Vec<_>>(),
    }))
}

// ---------------------------------------------------------------- tables

struct TableA {
    d: usize,
    r: usize,
    rows: Vec<HornEntry>,
    certified: Vec<bool>,
    matches: bool,
}

fn appendix_a(g: &Global, table: &HornTable) -> Outcome {
    let spec = g.field_spec()?;
    let mut tables = Vec::new();
    let mut index = 0u64;
    for fixture in HORN_TRIPLES {
        let rows = table.classes(fixture.d, fixture.r, 3);
        let printed: Vec<(PositionTuple, i64)> = fixture.rows.iter().map(|row| (row.tuple(fixture.r), row.edim)).collect();
        let computed: Vec<(PositionTuple, i64)> = rows.iter().map(|e| (e.tuple.clone(), e.edim)).collect();
        let base = index;
        index += rows.len() as u64;
        let certified: Vec<bool> = with_field!(spec, |f| rows
            .par_iter()
            .enumerate()
            .map(|(k, e)| Ok(certify_intersecting(f, &e.tuple, g.samples, &mut rng::stream(g.seed, base + k as u64))?
                .is_intersecting()))
            .collect::<Result<Vec<_>, CliError>>()?);
        tables.push(TableA { d: fixture.d, r: fixture.r, matches: printed == computed, rows, certified });
    }
    let ok = tables.iter().all(|t| t.matches && t.certified.iter().all(|&c| c));
    let body = match g.format {
        Format::Json => {
            let out: Vec<Value> = tables
                .iter()
                .map(|t| {
                    let rows: Vec<Value> = t
                        .rows
                        .iter()
                        .zip(&t.certified)
                        .map(|(e, c)| json!({ "tuple": e.tuple, "edim": e.edim, "certified": c }))
                        .collect();
                    json!({ "d": t.d, "r": t.r, "matches_fixture": t.matches, "rows": rows })
                })
                .collect();
            serde_json::to_string_pretty(&out).expect("output values serialize")
        }
        Format::Csv => {
            let rows: Vec<Vec<String>> = tables
                .iter()
                .flat_map(|t| {
                    t.rows.iter().zip(&t.certified).map(move |(e, c)| {
                        let mut row = vec![t.d.to_string(), t.r.to_string()];
                        row.extend(subset_cells(&e.tuple, false));
                        row.extend([e.edim.to_string(), c.to_string(), t.matches.to_string()]);
                        row
                    })
                })
                .collect();
            render::csv(&["d", "r", "J1", "J2", "J3", "edim", "certified", "matches_fixture"], &rows)
        }
        Format::Tex => {
            let mut out = String::new();
            for d in 1..=3 {
                out.push_str(&format!("% Horn({d}, r, 3)\n"));
                let group: Vec<&TableA> = tables.iter().filter(|t| t.d == d).collect();
                for (gi, t) in group.iter().enumerate() {
                    if gi > 0 {
                        out.push_str("\\midrule\n");
                    }
                    for (k, e) in t.rows.iter().enumerate() {
                        out.push_str(&tex_row((k == 0).then_some(t.r), &e.tuple, e.edim));
                        out.push('\n');
                    }
                }
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            for t in &tables {
                out.push_str(&format!("Horn({}, {}, 3)\n", t.d, t.r));
                let rows: Vec<Vec<String>> = t
                    .rows
                    .iter()
                    .zip(&t.certified)
                    .map(|(e, c)| {
                        let mut row = subset_cells(&e.tuple, false);
                        row.push(if e.edim == 0 { "0 *".into() } else { e.edim.to_string() });
                        row.push(if *c { "yes" } else { "no" }.into());
                        row
                    })
                    .collect();
                out.push_str(&render::text_table(&["J1", "J2", "J3", "edim", "certified"], &rows));
                out.push_str(&format!("matches embedded table: {}\n\n", if t.matches { "yes" } else { "no" }));
            }
            out.push_str("* expected dimension zero\n");
            out
        }
    };
    Ok(Output { body, verdict: ok })
}

struct Group {
    d: usize,
    reps: Vec<(PositionTuple, usize)>,
    matches: bool,
}

fn appendix_b(g: &Global, table: &HornTable) -> Outcome {
    let mut systems: Vec<(usize, Vec<Group>)> = Vec::new();
    for r in 2..=4 {
        let fixture = kirwan_representatives(r);
        let mut groups = Vec::new();
        for d in 1..r {
            let mut computed = table.horn0(d, r, 3);
            computed.sort();
            let mut printed: Vec<PositionTuple> = fixture
                .iter()
                .filter(|(fd, _)| *fd == d)
                .flat_map(|(_, t)| t.permutation_closure())
                .collect();
            printed.sort();
            printed.dedup();
            let reps: Vec<(PositionTuple, usize)> = table
                .classes(d, r, 3)
                .into_iter()
                .filter(|e| e.edim == 0)
                .map(|e| {
                    let size = e.tuple.permutation_closure().len();
                    (e.tuple, size)
                })
                .collect();
            groups.push(Group { d, reps, matches: computed == printed });
        }
        systems.push((r, groups));
    }
    let ok = systems.iter().all(|(_, gs)| gs.iter().all(|g| g.matches));
    let body = match g.format {
        Format::Json => {
            let out: Vec<Value> = systems
                .iter()
                .map(|(r, groups)| {
                    let groups: Vec<Value> = groups
                        .iter()
                        .map(|gr| {
                            let reps: Vec<Value> =
                                gr.reps.iter().map(|(j, k)| json!({ "j": j, "permutations": k })).collect();
                            json!({ "d": gr.d, "matches_fixture": gr.matches, "representatives": reps })
                        })
                        .collect();
                    json!({ "r": r, "groups": groups })
                })
                .collect();
            serde_json::to_string_pretty(&out).expect("output values serialize")
        }
        Format::Csv => {
            let rows: Vec<Vec<String>> = systems
                .iter()
                .flat_map(|(r, groups)| {
                    groups.iter().flat_map(move |gr| {
                        gr.reps.iter().map(move |(j, k)| {
                            let mut row = vec![r.to_string(), gr.d.to_string()];
                            row.extend(subset_cells(j, false));
                            row.extend([k.to_string(), gr.matches.to_string()]);
                            row
                        })
                    })
                })
                .collect();
            render::csv(&["r", "d", "J1", "J2", "J3", "permutations", "matches_fixture"], &rows)
        }
        Format::Tex | Format::Text => {
            let tex = g.format == Format::Tex;
            let names = render::part_names(3, tex);
            let mut out = String::new();
            for (r, groups) in &systems {
                if tex {
                    out.push_str(&format!("% r = {r}\n"));
                } else {
                    out.push_str(&format!("r = {r}: |lambda| + |mu| + |nu| = 0\n"));
                }
                for gr in groups {
                    if tex {
                        out.push_str(&format!("% Horn_0({}, {r}, 3)\n", gr.d));
                    } else {
                        let verdict = if gr.matches { "yes" } else { "no" };
                        out.push_str(&format!("  from Horn_0({}, {r}, 3), matches embedded table: {verdict}\n", gr.d));
                    }
                    for (j, k) in &gr.reps {
                        let ineq = render::inequality(j, &names, tex);
                        if tex {
                            out.push_str(&format!("{ineq} \\\\\n"));
                        } else {
                            let plural = if *k == 1 { "" } else { "s" };
                            out.push_str(&format!("    {ineq}    ({k} permutation{plural})\n"));
                        }
                    }
                }
            }
            out
        }
    };
    Ok(Output { body, verdict: ok })
}

// ---------------------------------------------------------------- fixtures

fn two_point() -> Outcome {
    let f = Sqrt5Field;
    let params = [0i64, 1, -1];
    let flags: Vec<Flag<_>> = params.iter().map(|&t| moment_curve_flag(t)).collect();
    let subspaces = two_point_subspaces();
    let expected = two_point_position();
    let mut positions = Vec::new();
    for v in &subspaces {
        for e in &flags {
            positions.push(position(&f, v, e)?);
        }
    }
    let in_position = positions.iter().all(|p| p == &expected);
    let distinct = !subspaces[0].same_space(&f, &subspaces[1]);
    let lists = vec![expected.elements().to_vec(); 3];
    let tuple = PositionTuple::from_lists(expected.ground(), &lists)?;
    let horn = HornTable::new().member(&tuple)?;
    let ok = in_position && distinct && horn.member && tuple.edim() == 0;
    emit(
        &json!({
            "field": f.spec(),
            "flag_parameters": params,
            "position": expected,
            "subspaces": subspaces.iter().map(|v| MatrixFile::from_matrix(&f, v.basis())).collect::<Vec<_>>(),
            "all_in_position": in_position,
            "distinct": distinct,
            "tuple": tuple,
            "edim": tuple.edim(),
            "horn": horn,
        }),
        ok,
    )
}
