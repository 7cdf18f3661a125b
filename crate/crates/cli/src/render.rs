//! Tabular output: CSV, LaTeX rows and aligned plain text.

use horn_core::{CardSubset, PositionTuple};

pub fn braces(s: &CardSubset) -> String {
    let inner: Vec<String> = s.elements().iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", inner.join(", "))
}

pub fn tex_braces(s: &CardSubset) -> String {
    let inner: Vec<String> = s.elements().iter().map(|x| x.to_string()).collect();
    format!("\\{{{}\\}}", inner.join(", "))
}

pub fn csv(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("write to memory");
    for row in rows {
        w.write_record(row).expect("write to memory");
    }
    String::from_utf8(w.into_inner().expect("flush to memory")).expect("utf-8 records")
}

/// Left-aligned columns separated by two spaces.
pub fn text_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}", w = *w))
            .collect();
        padded.join("  ").trim_end().to_string()
    };
    let mut out = line(header.to_vec());
    out.push('\n');
    for row in rows {
        out.push_str(&line(row.iter().map(String::as_str).collect()));
        out.push('\n');
    }
    out
}

/// `Σ_k Σ_{a ∈ J_k} ξ_k(a) <= 0` with `names[k]` for the parts.
pub fn inequality(j: &PositionTuple, names: &[String], tex: bool) -> String {
    let groups: Vec<String> = j
        .parts()
        .iter()
        .zip(names)
        .map(|(part, name)| {
            let terms: Vec<String> = part.elements().iter().map(|a| format!("{name}({a})")).collect();
            if terms.len() > 1 {
                if tex {
                    format!("\\left( {} \\right)", terms.join(" + "))
                } else {
                    format!("({})", terms.join(" + "))
                }
            } else {
                terms.join("")
            }
        })
        .collect();
    let le = if tex { "\\leq" } else { "<=" };
    format!("{} {le} 0", groups.join(" + "))
}

/// `lambda, mu, nu` for three parts, `xi1, xi2, ...` otherwise.
pub fn part_names(s: usize, tex: bool) -> Vec<String> {
    if s == 3 {
        if tex {
            vec!["\\lambda".into(), "\\mu".into(), "\\nu".into()]
        } else {
            vec!["lambda".into(), "mu".into(), "nu".into()]
        }
    } else if tex {
        (1..=s).map(|k| format!("\\xi_{{{k}}}")).collect()
    } else {
        (1..=s).map(|k| format!("xi{k}")).collect()
    }
}
