//! JSON, CSV, LaTeX and text renderings of the command reports.

use std::fmt::Write as _;

use combinatorics::{ExponentMatrix, YoungTableau};
use exactlinalg::{fmt_rational, RatMatrix, Rational};
use fockspace::FockVector;
use num_traits::{One, Signed};
use serde::Serialize;

use crate::commands::{BracketTerm, EnumerateReport, TransitionReport};
use crate::suites::VerifyReport;
use crate::{Format, Result};

fn csv_string<T: Serialize>(records: impl IntoIterator<Item = T>) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in records {
        w.serialize(r)?;
    }
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn json_string<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

fn join<T: ToString>(xs: &[T], sep: &str) -> String {
    xs.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(sep)
}

fn tableau_inline(a: &YoungTableau) -> String {
    a.rows()
        .iter()
        .map(|r| join(r, " "))
        .collect::<Vec<_>>()
        .join(" / ")
}

/// Words flattened as `coeff:letters` terms separated by `;`.
fn flat_vector(v: &FockVector) -> String {
    v.terms()
        .map(|(w, c)| format!("{}:{}", fmt_rational(c), join(w, " ")))
        .collect::<Vec<_>>()
        .join(";")
}

fn latex_rational(x: &Rational) -> String {
    if x.is_integer() {
        x.to_string()
    } else {
        let sign = if x.is_negative() { "-" } else { "" };
        format!("{sign}\\tfrac{{{}}}{{{}}}", x.numer().abs(), x.denom())
    }
}

fn latex_pmatrix(rows: &[Vec<String>]) -> String {
    let body: Vec<String> = rows.iter().map(|r| r.join(" & ")).collect();
    format!(
        "\\begin{{pmatrix}} {} \\end{{pmatrix}}",
        body.join(" \\\\ ")
    )
}

fn latex_matrix(m: &RatMatrix) -> String {
    let rows: Vec<Vec<String>> = m
        .to_rows()
        .iter()
        .map(|r| r.iter().map(latex_rational).collect())
        .collect();
    latex_pmatrix(&rows)
}

fn latex_gamma(g: &ExponentMatrix) -> String {
    let rows: Vec<Vec<String>> = g
        .rows()
        .iter()
        .map(|r| r.iter().map(i64::to_string).collect())
        .collect();
    latex_pmatrix(&rows)
}

fn latex_tableau(a: &YoungTableau) -> String {
    if a.rows().is_empty() {
        return "\\varnothing".into();
    }
    let width = a.rows()[0].len();
    let rows: Vec<String> = a.rows().iter().map(|r| join(r, " & ")).collect();
    format!(
        "\\begin{{array}}{{{}}} {} \\end{{array}}",
        "c".repeat(width),
        rows.join(" \\\\ ")
    )
}

/// ω_T: each column is a multibracket [B_a^+,B_b^+,…] (a single B_a^+ for a
/// column of height one), the first column outermost.
fn latex_bracket_monomial(t: &YoungTableau) -> String {
    let mut s = String::new();
    for col in t.columns() {
        let ops: Vec<String> = col.iter().map(|a| format!("B_{{{a}}}^+")).collect();
        if ops.len() == 1 {
            s.push_str(&ops[0]);
        } else {
            let _ = write!(s, "[{}]", ops.join(","));
        }
    }
    s.push_str("v_0");
    s
}

fn latex_bracket_sum(terms: &[BracketTerm]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut s = String::new();
    for (k, t) in terms.iter().enumerate() {
        let mag = t.coeff.abs();
        if t.coeff.is_negative() {
            s.push_str(if k == 0 { "-" } else { " - " });
        } else if k > 0 {
            s.push_str(" + ");
        }
        if !mag.is_one() {
            s.push_str(&latex_rational(&mag));
        }
        s.push_str(&latex_bracket_monomial(&t.tableau));
    }
    s
}

fn latex_document(body: &str) -> String {
    format!(
        "\\documentclass{{article}}\n\\usepackage{{amsmath}}\n\\usepackage[landscape,margin=1cm]{{geometry}}\n\\begin{{document}}\n{body}\\end{{document}}\n"
    )
}

fn latex_escape(s: &str) -> String {
    let mut out = String::new();
    for ch in s.chars() {
        match ch {
            '−' => out.push('-'),
            '±' => out.push_str("$\\pm$"),
            '_' => out.push_str("\\_"),
            '^' => out.push_str("\\^{}"),
            '&' | '%' | '#' | '{' | '}' | '$' => {
                out.push('\\');
                out.push(ch);
            }
            c if c.is_ascii() => out.push(c),
            _ => out.push('?'),
        }
    }
    out
}

#[derive(Serialize)]
struct EnumerateRow<'a> {
    index: usize,
    degree: usize,
    shape: String,
    tableau: String,
    gamma: String,
    content: String,
    coeff_norm2: String,
    terms: usize,
    vector: String,
    brackets: &'a str,
}

pub fn render_enumerate(r: &EnumerateReport, format: Format) -> Result<String> {
    match format {
        Format::Json => json_string(r),
        Format::Csv => {
            let brackets: Vec<String> = r
                .records
                .iter()
                .map(|rec| {
                    rec.brackets
                        .iter()
                        .map(|b| {
                            format!("{}:{}", fmt_rational(&b.coeff), tableau_inline(&b.tableau))
                        })
                        .collect::<Vec<_>>()
                        .join(";")
                })
                .collect();
            csv_string(
                r.records
                    .iter()
                    .zip(&brackets)
                    .map(|(rec, b)| EnumerateRow {
                        index: rec.index,
                        degree: rec.degree,
                        shape: join(rec.shape.parts(), ","),
                        tableau: tableau_inline(&rec.tableau),
                        gamma: rec.gamma.to_string(),
                        content: join(&rec.content, " "),
                        coeff_norm2: fmt_rational(&rec.coeff_norm2),
                        terms: rec.vector.len(),
                        vector: flat_vector(&rec.vector),
                        brackets: b,
                    }),
            )
        }
        Format::Latex => {
            let mut body = format!(
                "Basis of the degree {} part of $L(p)$ for $n = {}$, $p = {}$: {} vectors $E^{{\\gamma_A}}\\Omega_{{\\lambda_A}}$.\n\n",
                r.deg,
                r.n,
                r.p,
                r.records.len()
            );
            body.push_str("\\begin{tabular}{rllll}\n$k$ & $\\lambda_A$ & $A$ & $\\gamma_A$ & $E^{\\gamma_A}\\Omega_{\\lambda_A}$ \\\\\n\\hline\n");
            for rec in &r.records {
                let _ = writeln!(
                    body,
                    "{} & ${}$ & ${}$ & ${}$ & ${}$ \\\\",
                    rec.index,
                    rec.shape,
                    latex_tableau(&rec.tableau),
                    latex_gamma(&rec.gamma),
                    latex_bracket_sum(&rec.brackets)
                );
            }
            body.push_str("\\end{tabular}\n");
            Ok(latex_document(&body))
        }
        Format::Text => {
            let mut s = format!(
                "n = {}, p = {}, degree {}: {} basis vectors\n",
                r.n,
                r.p,
                r.deg,
                r.records.len()
            );
            for rec in &r.records {
                let _ = writeln!(
                    s,
                    "\n#{} shape {} gamma {} norm2 {}",
                    rec.index, rec.shape, rec.gamma, rec.coeff_norm2
                );
                for row in rec.tableau.rows() {
                    let _ = writeln!(s, "  {}", join(row, " "));
                }
                let _ = writeln!(s, "  = {}", rec.vector.pretty());
            }
            Ok(s)
        }
    }
}

#[derive(Serialize)]
struct TransitionRow {
    lambda: String,
    content: String,
    row: String,
    column: String,
    t: String,
    t_inverse: String,
}

pub fn render_transition(r: &TransitionReport, format: Format) -> Result<String> {
    if r.blocks.is_empty() && r.message.is_some() {
        return Ok(String::new());
    }
    match format {
        Format::Json => json_string(r),
        Format::Csv => {
            let mut rows = Vec::new();
            for b in &r.blocks {
                for (i, a) in b.tableaux.iter().enumerate() {
                    for (j, c) in b.tableaux.iter().enumerate() {
                        rows.push(TransitionRow {
                            lambda: join(b.lambda.parts(), ","),
                            content: join(&b.content, " "),
                            row: tableau_inline(a),
                            column: tableau_inline(c),
                            t: fmt_rational(b.matrix.get(i, j)),
                            t_inverse: fmt_rational(b.inverse.get(i, j)),
                        });
                    }
                }
            }
            csv_string(rows)
        }
        Format::Latex => {
            let mut body = format!(
                "Transition $v_A = \\sum_B T_{{AB}} E^{{\\gamma_B}}\\Omega_\\lambda$ for $\\lambda = {}$, $n = {}$, $p = {}$, $d(\\lambda) = {}$.\n\n",
                r.lambda,
                r.n,
                r.p,
                latex_rational(&r.chain_coefficient)
            );
            for b in &r.blocks {
                let labels: Vec<String> = b.tableaux.iter().map(latex_tableau).collect();
                let _ = writeln!(
                    body,
                    "\\paragraph{{Weight ${}$.}} Basis ${}$.\n\\[ T = {} \\qquad T^{{-1}} = {} \\]\n",
                    latex_escape(&format!("{:?}", b.content)),
                    labels.join(",\\ "),
                    latex_matrix(&b.matrix),
                    latex_matrix(&b.inverse)
                );
            }
            Ok(latex_document(&body))
        }
        Format::Text => {
            let mut s = format!(
                "lambda {} n = {} p = {} d(lambda) = {} norm2 = {}\n",
                r.lambda, r.n, r.p, r.chain_coefficient, r.hw_norm2
            );
            for b in &r.blocks {
                let _ = writeln!(s, "\nweight content {:?}", b.content);
                for (i, a) in b.tableaux.iter().enumerate() {
                    let _ = writeln!(s, "  A{} = {}", i + 1, tableau_inline(a));
                }
                let fmt_rows = |m: &RatMatrix| -> Vec<String> {
                    m.to_rows().iter().map(|row| join(row, "  ")).collect()
                };
                s.push_str("  T:\n");
                for row in fmt_rows(&b.matrix) {
                    let _ = writeln!(s, "    {row}");
                }
                s.push_str("  T^-1:\n");
                for row in fmt_rows(&b.inverse) {
                    let _ = writeln!(s, "    {row}");
                }
            }
            Ok(s)
        }
    }
}

#[derive(Serialize)]
struct VerifyRow<'a> {
    seed: u64,
    suite: &'a str,
    check: &'a str,
    status: &'a str,
    cases: usize,
    failed: usize,
    statement: &'a str,
}

pub fn render_verify(r: &VerifyReport, format: Format) -> Result<String> {
    let overall = if r.passed() { "PASS" } else { "FAIL" };
    match format {
        Format::Json => {
            #[derive(Serialize)]
            struct Wrapped<'a> {
                passed: bool,
                #[serde(flatten)]
                report: &'a VerifyReport,
            }
            json_string(&Wrapped {
                passed: r.passed(),
                report: r,
            })
        }
        Format::Csv => csv_string(r.suites.iter().flat_map(|s| {
            s.checks.iter().map(move |c| VerifyRow {
                seed: r.seed,
                suite: s.name.label(),
                check: &c.name,
                status: c.status(),
                cases: c.cases,
                failed: c.failed,
                statement: &c.statement,
            })
        })),
        Format::Latex => {
            let mut body = format!(
                "Verification for $n = {}$, $p = {}$, degree $\\le {}$, seed {}: {}.\n\n",
                r.n, r.p, r.deg, r.seed, overall
            );
            body.push_str(
                "\\begin{tabular}{llrrl}\nsuite & check & cases & failed & status \\\\\n\\hline\n",
            );
            for s in &r.suites {
                for c in &s.checks {
                    let _ = writeln!(
                        body,
                        "{} & {} & {} & {} & {} \\\\",
                        s.name.label(),
                        latex_escape(&c.name),
                        c.cases,
                        c.failed,
                        c.status()
                    );
                }
            }
            body.push_str("\\end{tabular}\n");
            Ok(latex_document(&body))
        }
        Format::Text => {
            let mut s = format!(
                "n = {}, p = {}, deg = {}, seed = {}\n",
                r.n, r.p, r.deg, r.seed
            );
            for suite in &r.suites {
                let _ = writeln!(s, "\n[{}]", suite.name.label());
                for c in &suite.checks {
                    let _ = writeln!(s, "  {}", c.summary());
                    let _ = writeln!(s, "    {}", c.statement);
                    for f in &c.failures {
                        let _ = writeln!(s, "    failure: {f}");
                    }
                    for n in &c.notes {
                        let _ = writeln!(s, "    note: {n}");
                    }
                }
            }
            let _ = writeln!(s, "\n{overall}");
            Ok(s)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use exactlinalg::{rat, rat_int};

    #[test]
    fn bracket_monomials_use_column_brackets() {
        let t = YoungTableau::new(vec![vec![1, 2], vec![3]]).unwrap();
        assert_eq!(latex_bracket_monomial(&t), "[B_{1}^+,B_{3}^+]B_{2}^+v_0");
        let terms = vec![
            BracketTerm {
                coeff: rat_int(-16),
                tableau: t.clone(),
            },
            BracketTerm {
                coeff: rat_int(1),
                tableau: YoungTableau::empty(),
            },
        ];
        assert_eq!(
            latex_bracket_sum(&terms),
            "-16[B_{1}^+,B_{3}^+]B_{2}^+v_0 + v_0"
        );
    }

    #[test]
    fn rationals_render_as_fractions() {
        assert_eq!(latex_rational(&rat(-1, 12)), "-\\tfrac{1}{12}");
        assert_eq!(latex_rational(&rat_int(3)), "3");
    }
}
