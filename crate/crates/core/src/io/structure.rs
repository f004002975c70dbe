//! Raw structure-constant format.
//!
//! ```text
//! name CP1
//! basis:
//! 1 0
//! x 2
//! unit: 1
//! products:
//! 1 1 = 1*1
//! 1 x = 1*x
//! ```
//!
//! Omitted products are zero. When only one of `(i, j)` and `(j, i)` is
//! listed the other is inferred by graded commutativity.

use std::collections::HashMap;
use std::str::FromStr;

use num_traits::{Signed, Zero};

use super::IoError;
use crate::algebra::{koszul_sign, BasisElement, GradedAlgebra, Terms};
use crate::linalg::Rational;

fn syntax(line: usize, message: impl Into<String>) -> IoError {
    IoError::Syntax {
        line,
        message: message.into(),
    }
}

#[derive(PartialEq)]
enum Section {
    Header,
    Basis,
    Products,
}

fn resolve(labels: &HashMap<String, usize>, dim: usize, token: &str, line: usize) -> Result<usize, IoError> {
    if let Some(&i) = labels.get(token) {
        return Ok(i);
    }
    match token.parse::<usize>() {
        Ok(i) if i < dim => Ok(i),
        _ => Err(syntax(line, format!("unknown basis element `{token}`"))),
    }
}

fn parse_term(
    labels: &HashMap<String, usize>,
    dim: usize,
    token: &str,
    line: usize,
) -> Result<(usize, Rational), IoError> {
    if let Some((coeff, label)) = token.split_once('*') {
        if let Ok(c) = Rational::from_str(coeff) {
            return Ok((resolve(labels, dim, label, line)?, c));
        }
    }
    if let Some(&i) = labels.get(token) {
        return Ok((i, Rational::from_integer(1.into())));
    }
    if let Some(rest) = token.strip_prefix('-') {
        if let Some(&i) = labels.get(rest) {
            return Ok((i, Rational::from_integer((-1).into())));
        }
    }
    Err(syntax(line, format!("cannot parse term `{token}`")))
}

fn parse_expression(
    labels: &HashMap<String, usize>,
    dim: usize,
    expr: &str,
    line: usize,
) -> Result<Terms, IoError> {
    let tokens: Vec<&str> = expr.split_whitespace().collect();
    if tokens.is_empty() {
        return Err(syntax(line, "empty right-hand side"));
    }
    if tokens == ["0"] && !labels.contains_key("0") {
        return Ok(Vec::new());
    }
    let mut terms = Vec::new();
    let mut negate = false;
    let mut expect_term = true;
    for tok in tokens {
        match tok {
            "+" | "-" if !expect_term => {
                negate = tok == "-";
                expect_term = true;
            }
            "-" if terms.is_empty() && !negate => negate = true,
            _ if expect_term => {
                let (k, c) = parse_term(labels, dim, tok, line)?;
                terms.push((k, if negate { -c } else { c }));
                negate = false;
                expect_term = false;
            }
            _ => return Err(syntax(line, format!("expected `+` or `-` before `{tok}`"))),
        }
    }
    if expect_term {
        return Err(syntax(line, "dangling operator"));
    }
    Ok(terms)
}

/// Parses without checking the algebra axioms.
pub fn parse_structure_constants_unvalidated(text: &str) -> Result<GradedAlgebra, IoError> {
    let mut name = None;
    let mut section = Section::Header;
    let mut basis: Vec<BasisElement> = Vec::new();
    let mut labels: HashMap<String, usize> = HashMap::new();
    let mut unit: Option<(String, usize)> = None;
    let mut given: HashMap<(usize, usize), Terms> = HashMap::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if line == "basis:" {
            if !basis.is_empty() {
                return Err(syntax(line_no, "`basis:` given twice"));
            }
            section = Section::Basis;
            continue;
        }
        if line == "products:" {
            section = Section::Products;
            continue;
        }
        if let Some(rest) = line.strip_prefix("unit:") {
            let rest = rest.trim();
            if rest.is_empty() {
                return Err(syntax(line_no, "`unit:` needs a label"));
            }
            unit = Some((rest.to_owned(), line_no));
            section = Section::Header;
            continue;
        }
        match section {
            Section::Header => {
                let Some(rest) = line.strip_prefix("name") else {
                    return Err(syntax(line_no, format!("unexpected line `{line}`")));
                };
                name = Some(rest.trim().to_owned());
            }
            Section::Basis => {
                let tokens: Vec<&str> = line.split_whitespace().collect();
                let [label, degree] = tokens[..] else {
                    return Err(syntax(line_no, "basis lines are `<label> <degree>`"));
                };
                let degree: u32 = degree
                    .parse()
                    .map_err(|_| syntax(line_no, format!("bad degree `{degree}`")))?;
                if labels.insert(label.to_owned(), basis.len()).is_some() {
                    return Err(syntax(line_no, format!("duplicate basis label `{label}`")));
                }
                basis.push(BasisElement::new(label, degree));
            }
            Section::Products => {
                let (lhs, rhs) = line
                    .split_once('=')
                    .ok_or_else(|| syntax(line_no, "product lines are `<i> <j> = <terms>`"))?;
                let factors: Vec<&str> = lhs.split_whitespace().collect();
                let [i, j] = factors[..] else {
                    return Err(syntax(line_no, "product lines are `<i> <j> = <terms>`"));
                };
                let dim = basis.len();
                let i = resolve(&labels, dim, i, line_no)?;
                let j = resolve(&labels, dim, j, line_no)?;
                let terms = parse_expression(&labels, dim, rhs, line_no)?;
                if given.insert((i, j), terms).is_some() {
                    return Err(syntax(line_no, "product given twice"));
                }
            }
        }
    }

    if basis.is_empty() {
        return Err(IoError::Missing("basis"));
    }
    let (unit_label, unit_line) = unit.ok_or(IoError::Missing("unit"))?;
    let unit = resolve(&labels, basis.len(), &unit_label, unit_line)?;
    let n = basis.len();
    let mut products = vec![Terms::new(); n * n];
    for i in 0..n {
        for j in 0..n {
            products[i * n + j] = match (given.get(&(i, j)), given.get(&(j, i))) {
                (Some(t), _) => t.clone(),
                (None, Some(t)) => {
                    let sign = koszul_sign(i64::from(basis[i].degree), i64::from(basis[j].degree));
                    t.iter().map(|(k, c)| (*k, c * &sign)).collect()
                }
                (None, None) => Vec::new(),
            };
        }
    }
    GradedAlgebra::from_parts(name.unwrap_or_else(|| "algebra".to_owned()), basis, unit, products)
        .map_err(|source| IoError::Algebra { line: None, source })
}

/// Parses and rejects tables that violate the algebra axioms.
pub fn parse_structure_constants(text: &str) -> Result<GradedAlgebra, IoError> {
    let a = parse_structure_constants_unvalidated(text)?;
    let report = a.validate();
    if report.is_valid() {
        Ok(a)
    } else {
        Err(IoError::Validation(report.render(&a)))
    }
}

fn render_terms(a: &GradedAlgebra, terms: &[(usize, Rational)]) -> String {
    if terms.is_empty() {
        return "0".to_owned();
    }
    let mut out = String::new();
    for (n, (k, c)) in terms.iter().enumerate() {
        let body = format!("{}*{}", c.abs(), a.label(*k));
        match (n, c.is_negative()) {
            (0, false) => out.push_str(&body),
            (0, true) => out.push_str(&format!("-{body}")),
            (_, false) => out.push_str(&format!(" + {body}")),
            (_, true) => out.push_str(&format!(" - {body}")),
        }
    }
    out
}

/// Writes the structure-constant format, listing pairs `i <= j` with nonzero
/// product. Reading it back reproduces the algebra exactly when the table is
/// graded commutative.
pub fn to_structure_constants(a: &GradedAlgebra) -> String {
    let mut out = format!("name {}\nbasis:\n", a.name());
    for b in a.basis() {
        out.push_str(&format!("{} {}\n", b.label, b.degree));
    }
    out.push_str(&format!("unit: {}\nproducts:\n", a.label(a.unit_index())));
    for i in 0..a.dim() {
        for j in i..a.dim() {
            let terms = a.product(i, j);
            if terms.iter().all(|(_, c)| c.is_zero()) {
                continue;
            }
            out.push_str(&format!(
                "{} {} = {}\n",
                a.label(i),
                a.label(j),
                render_terms(a, terms)
            ));
        }
    }
    out
}
