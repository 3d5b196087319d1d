//! Output renderers: order-stable JSON documents and LaTeX matrices.

use braidrep::lk;
use braidrep::matrix::{RationalMatrix, RingMatrix};
use braidrep::ring::TermJson;
use serde::Serialize;

pub fn basis_labels(n: usize) -> Vec<String> {
    lk::basis(n).iter().map(|p| p.to_string()).collect()
}

#[derive(Serialize)]
struct MatrixJson<'a> {
    n: usize,
    gen: usize,
    basis: &'a [String],
    vars: Vec<String>,
    entries: Vec<Vec<Vec<TermJson>>>,
}

#[derive(Serialize)]
struct WordJson<'a> {
    n: usize,
    word: &'a str,
    basis: &'a [String],
    vars: Vec<String>,
    entries: Vec<Vec<Vec<TermJson>>>,
}

#[derive(Serialize)]
struct PointJson<'a> {
    q: &'a str,
    t: &'a str,
}

#[derive(Serialize)]
struct NumericJson<'a> {
    n: usize,
    word: &'a str,
    point: PointJson<'a>,
    basis: &'a [String],
    entries: Vec<Vec<String>>,
}

fn symbolic_entries(m: &RingMatrix) -> Vec<Vec<Vec<TermJson>>> {
    (0..m.dim())
        .map(|r| (0..m.dim()).map(|c| m.get(r, c).terms_json()).collect())
        .collect()
}

pub fn matrix_json(n: usize, generator: usize, basis: &[String], m: &RingMatrix) -> String {
    let doc = MatrixJson {
        n,
        gen: generator,
        basis,
        vars: m.vars().names().to_vec(),
        entries: symbolic_entries(m),
    };
    serde_json::to_string_pretty(&doc).expect("matrix serialization")
}

pub fn word_json(n: usize, word: &str, basis: &[String], m: &RingMatrix) -> String {
    let doc = WordJson {
        n,
        word,
        basis,
        vars: m.vars().names().to_vec(),
        entries: symbolic_entries(m),
    };
    serde_json::to_string_pretty(&doc).expect("matrix serialization")
}

pub fn numeric_json(
    n: usize,
    word: &str,
    point: (&str, &str),
    basis: &[String],
    m: &RationalMatrix,
) -> String {
    let entries = (0..m.dim())
        .map(|r| (0..m.dim()).map(|c| m.get(r, c).to_string()).collect())
        .collect();
    let doc = NumericJson {
        n,
        word,
        point: PointJson {
            q: point.0,
            t: point.1,
        },
        basis,
        entries,
    };
    serde_json::to_string_pretty(&doc).expect("matrix serialization")
}

pub fn matrix_latex(m: &RingMatrix) -> String {
    let rows: Vec<String> = (0..m.dim())
        .map(|r| {
            (0..m.dim())
                .map(|c| m.get(r, c).latex())
                .collect::<Vec<_>>()
                .join(" & ")
        })
        .collect();
    format!(
        "\\begin{{pmatrix}}\n{}\n\\end{{pmatrix}}",
        rows.join(" \\\\\n")
    )
}

pub fn numeric_latex(m: &RationalMatrix) -> String {
    let cell = |r: usize, c: usize| {
        let v = m.get(r, c);
        if v.is_integer() {
            v.to_string()
        } else {
            format!("\\frac{{{}}}{{{}}}", v.numer(), v.denom())
        }
    };
    let rows: Vec<String> = (0..m.dim())
        .map(|r| {
            (0..m.dim())
                .map(|c| cell(r, c))
                .collect::<Vec<_>>()
                .join(" & ")
        })
        .collect();
    format!(
        "\\begin{{pmatrix}}\n{}\n\\end{{pmatrix}}",
        rows.join(" \\\\\n")
    )
}
