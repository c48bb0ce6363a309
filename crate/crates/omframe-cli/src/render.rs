use std::fmt::Write;

use omframe::frame::{MovingFrame, VerificationReport};
use omframe::{format_poly, format_vector, Field, PolyVec};

fn list(v: &[usize]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn tuple(v: &[usize]) -> String {
    format!("({})", v.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "))
}

pub fn frame<F: Field>(
    field: &F,
    a: &PolyVec<F::Elem>,
    frame: &MovingFrame<F::Elem>,
    report: &VerificationReport,
    section: Option<&[usize]>,
) -> String {
    let mut out = String::new();
    writeln!(out, "field:  {}", field.name()).unwrap();
    writeln!(out, "input:  {}", format_vector(field, a)).unwrap();
    writeln!(out, "gcd:    {}", format_poly(field, &frame.gcd)).unwrap();
    writeln!(out, "beta:   {}", frame.beta).unwrap();
    writeln!(out, "mu:     {}", tuple(&frame.mu)).unwrap();
    writeln!(out, "pivots: {}", list(frame.profile.pivots())).unwrap();
    writeln!(out, "basic:  {}", list(&frame.profile.basic_indices())).unwrap();
    if let Some(idx) = section {
        writeln!(out, "section indices: {}", tuple(idx)).unwrap();
    }
    writeln!(out, "frame:").unwrap();
    let m = &frame.matrix;
    for i in 0..m.rows() {
        let row: Vec<String> = (0..m.cols()).map(|j| format_poly(field, &m[(i, j)])).collect();
        writeln!(out, "  [{}]", row.join(", ")).unwrap();
    }
    out.push_str(&summary(report));
    out
}

pub fn bezout<F: Field>(field: &F, frame: &MovingFrame<F::Elem>) -> String {
    format!(
        "beta: {}\nbezout: {}\n",
        frame.beta,
        format_vector(field, &frame.bezout())
    )
}

pub fn mu_basis<F: Field>(field: &F, frame: &MovingFrame<F::Elem>) -> String {
    let mut out = format!("mu: {}\n", tuple(&frame.mu));
    for (k, col) in frame.mu_basis().iter().enumerate() {
        writeln!(out, "u{}: {}", k + 1, format_vector(field, col)).unwrap();
    }
    out
}

fn summary(report: &VerificationReport) -> String {
    if report.all_passed() {
        format!("verification: all {} checks passed\n", report.checks.len())
    } else {
        format!("verification:\n{report}")
    }
}

pub fn report(report: &VerificationReport) -> String {
    let mut out = report.to_string();
    out.push_str(if report.all_passed() { "OK\n" } else { "FAILED\n" });
    out
}

pub fn oracle<E>(frame: &MovingFrame<E>, beta: usize, mu: &[usize], agree: bool) -> String {
    format!(
        "omf:         beta = {}, mu = {}\nbrute force: beta = {beta}, mu = {}\n{}\n",
        frame.beta,
        tuple(&frame.mu),
        tuple(mu),
        if agree { "agree" } else { "MISMATCH" }
    )
}
