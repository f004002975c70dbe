use super::IoError;
use crate::algebra::{AlgebraError, Generator, Presentation};

fn syntax(line: usize, message: impl Into<String>) -> IoError {
    IoError::Syntax {
        line,
        message: message.into(),
    }
}

fn parse_u32(line: usize, what: &str, token: Option<&str>) -> Result<u32, IoError> {
    let token = token.ok_or_else(|| syntax(line, format!("missing value for `{what}`")))?;
    token
        .parse()
        .map_err(|_| syntax(line, format!("`{what}` expects a nonnegative integer, got `{token}`")))
}

/// Parses the line-oriented presentation format:
///
/// ```text
/// # comment
/// name CP2
/// generator x degree 2 truncate 3
/// ```
///
/// `truncate` defaults to 2.
pub fn parse_presentation(text: &str) -> Result<Presentation, IoError> {
    let mut name = None;
    let mut generators: Vec<Generator> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut tokens = line.split_whitespace();
        match tokens.next() {
            Some("name") => {
                let rest = line["name".len()..].trim();
                if rest.is_empty() {
                    return Err(syntax(line_no, "`name` needs a value"));
                }
                name = Some(rest.to_owned());
            }
            Some("generator") => {
                let symbol = tokens
                    .next()
                    .ok_or_else(|| syntax(line_no, "`generator` needs a symbol"))?;
                if tokens.next() != Some("degree") {
                    return Err(syntax(line_no, "expected `degree` after the generator symbol"));
                }
                let degree = parse_u32(line_no, "degree", tokens.next())?;
                let truncation = match tokens.next() {
                    None => 2,
                    Some("truncate") => parse_u32(line_no, "truncate", tokens.next())?,
                    Some(other) => return Err(syntax(line_no, format!("unexpected token `{other}`"))),
                };
                if let Some(extra) = tokens.next() {
                    return Err(syntax(line_no, format!("unexpected token `{extra}`")));
                }
                if generators.iter().any(|g| g.symbol == symbol) {
                    return Err(IoError::Algebra {
                        line: Some(line_no),
                        source: AlgebraError::DuplicateGenerator(symbol.to_owned()),
                    });
                }
                let g = Generator::new(symbol, degree, truncation);
                Presentation::new("", vec![g.clone()]).map_err(|source| IoError::Algebra {
                    line: Some(line_no),
                    source,
                })?;
                generators.push(g);
            }
            Some(other) => return Err(syntax(line_no, format!("unknown directive `{other}`"))),
            None => unreachable!("blank lines are skipped"),
        }
    }
    Presentation::new(name.unwrap_or_else(|| "algebra".to_owned()), generators)
        .map_err(|source| IoError::Algebra { line: None, source })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cp2_presentation() {
        let p = parse_presentation("name CP2\ngenerator x degree 2 truncate 3").unwrap();
        assert_eq!(p.name, "CP2");
        assert_eq!(p.generators, vec![Generator::new("x", 2, 3)]);
    }

    #[test]
    fn truncation_defaults_to_two() {
        let p = parse_presentation("generator a degree 3").unwrap();
        assert_eq!(p.generators[0].truncation, 2);
    }

    #[test]
    fn odd_truncation_is_an_error() {
        let err = parse_presentation("generator a degree 3 truncate 4").unwrap_err();
        assert!(matches!(
            err,
            IoError::Algebra {
                line: Some(1),
                source: AlgebraError::OddTruncation { .. }
            }
        ));
    }

    #[test]
    fn errors_carry_line_numbers() {
        let err = parse_presentation("# header\n\ngenerator x degree two").unwrap_err();
        assert!(matches!(err, IoError::Syntax { line: 3, .. }));
        let err = parse_presentation("generator x degree 2\ngenerator x degree 4").unwrap_err();
        assert!(matches!(
            err,
            IoError::Algebra {
                line: Some(2),
                source: AlgebraError::DuplicateGenerator(_)
            }
        ));
        let err = parse_presentation("generators x").unwrap_err();
        assert!(matches!(err, IoError::Syntax { line: 1, .. }));
    }

    #[test]
    fn comments_and_generator_order() {
        let p = parse_presentation("name P # trailing\ngenerator y degree 2 truncate 2\ngenerator x degree 4 # c\n")
            .unwrap();
        assert_eq!(p.name, "P");
        let symbols: Vec<_> = p.generators.iter().map(|g| g.symbol.as_str()).collect();
        assert_eq!(symbols, vec!["y", "x"]);
    }
}
