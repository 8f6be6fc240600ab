//! The space-file format: a field declaration, the ambient dimension, the
//! global count cap, and one or more named spaces given level by level.
//!
//! ```text
//! # a two-space file over the rationals
//! field Q
//! ambient 2
//! omega 6
//!
//! space V
//!   level 5 span { }
//!   level 3 span { (0,1) }
//!   level 1 span { (1,0) (0,1) }
//! end
//! ```
//!
//! Tokens are separated by whitespace, so vectors carry no internal
//! spaces; `#` starts a comment that runs to the end of the line.
//! Scalars are integers or fractions `p/q`. Level counts must be strictly
//! decreasing from top to bottom inside a block.

use mvspace::scalar::is_prime;
use mvspace::{Field, MVSpace, Scalar, Vector};
use std::fmt;

/// A parsed file: the shared declarations plus the named spaces in file
/// order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpaceFile {
    pub field: Field,
    pub ambient: usize,
    pub omega: u32,
    pub spaces: Vec<(String, MVSpace)>,
}

impl SpaceFile {
    pub fn get(&self, name: &str) -> Option<&MVSpace> {
        self.spaces
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, s)| s)
    }

    /// The canonical text form: normalized scalars, reduced spanning rows,
    /// levels from the highest count down. Parsing it back yields an
    /// equal value.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        match self.field.modulus() {
            None => out.push_str("field Q\n"),
            Some(p) => out.push_str(&format!("field GF {p}\n")),
        }
        out.push_str(&format!("ambient {}\n", self.ambient));
        out.push_str(&format!("omega {}\n", self.omega));
        for (name, space) in &self.spaces {
            out.push('\n');
            out.push_str(&format!("space {name}\n"));
            for level in space.levels() {
                out.push_str(&format!("  level {} span {{", level.count));
                for row in level.subspace.basis() {
                    out.push_str(&format!(" {row}"));
                }
                out.push_str(" }\n");
            }
            out.push_str("end\n");
        }
        out
    }
}

/// A failed parse, split by exit-code class: malformed text versus a
/// well-formed file describing something that is not a valid space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FileError {
    Syntax {
        line: usize,
        col: usize,
        message: String,
    },
    Invariant {
        message: String,
    },
}

impl fmt::Display for FileError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FileError::Syntax { line, col, message } => {
                write!(f, "syntax error at line {line}, column {col}: {message}")
            }
            FileError::Invariant { message } => write!(f, "invalid space: {message}"),
        }
    }
}

struct Token {
    text: String,
    line: usize,
    col: usize,
}

fn tokenize(text: &str) -> Vec<Token> {
    let mut tokens = Vec::new();
    for (line_index, raw_line) in text.lines().enumerate() {
        let line = match raw_line.find('#') {
            Some(cut) => &raw_line[..cut],
            None => raw_line,
        };
        let mut col = 0usize;
        let mut start = None;
        for (i, c) in line.char_indices() {
            if c.is_whitespace() {
                if let Some(s) = start.take() {
                    tokens.push(Token {
                        text: line[s..i].to_string(),
                        line: line_index + 1,
                        col: col + 1,
                    });
                }
            } else if start.is_none() {
                start = Some(i);
                col = line[..i].chars().count();
            }
        }
        if let Some(s) = start {
            tokens.push(Token {
                text: line[s..].to_string(),
                line: line_index + 1,
                col: col + 1,
            });
        }
    }
    tokens
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    last_line: usize,
}

impl Parser {
    fn new(text: &str) -> Parser {
        let tokens = tokenize(text);
        let last_line = text.lines().count().max(1);
        Parser {
            tokens,
            pos: 0,
            last_line,
        }
    }

    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn syntax_here(&self, message: String) -> FileError {
        match self.peek() {
            Some(t) => FileError::Syntax {
                line: t.line,
                col: t.col,
                message,
            },
            None => FileError::Syntax {
                line: self.last_line,
                col: 1,
                message,
            },
        }
    }

    fn next(&mut self, expected: &str) -> Result<&Token, FileError> {
        if self.pos >= self.tokens.len() {
            return Err(FileError::Syntax {
                line: self.last_line,
                col: 1,
                message: format!("expected {expected}, found end of file"),
            });
        }
        let t = &self.tokens[self.pos];
        self.pos += 1;
        Ok(t)
    }

    fn keyword(&mut self, kw: &str) -> Result<(), FileError> {
        let err = self.syntax_here(format!("expected `{kw}`"));
        let t = self.next(&format!("`{kw}`"))?;
        if t.text == kw {
            Ok(())
        } else {
            Err(err)
        }
    }

    fn number<T: std::str::FromStr>(&mut self, what: &str) -> Result<T, FileError> {
        let err = self.syntax_here(format!("expected {what}"));
        let t = self.next(what)?;
        t.text.parse::<T>().map_err(|_| err)
    }
}

const KEYWORDS: [&str; 9] = [
    "field", "ambient", "omega", "space", "end", "level", "span", "Q", "GF",
];

fn is_name(text: &str) -> bool {
    let mut chars = text.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_') && !KEYWORDS.contains(&text)
}

/// Parses one scalar written as an integer or a fraction `p/q`.
pub fn parse_scalar(field: Field, text: &str) -> Result<Scalar, String> {
    if let Some((num, den)) = text.split_once('/') {
        let num: i64 = num
            .parse()
            .map_err(|_| format!("`{text}` is not a scalar"))?;
        let den: i64 = den
            .parse()
            .map_err(|_| format!("`{text}` is not a scalar"))?;
        if den == 0 {
            return Err(format!("`{text}` has a zero denominator"));
        }
        if field.is_rational() {
            Ok(Scalar::rational(num, den))
        } else {
            let den = Scalar::from_integer(field, den);
            if den.is_zero() {
                return Err(format!("`{text}` has a zero denominator in {field}"));
            }
            Ok(Scalar::from_integer(field, num).div(&den))
        }
    } else {
        let n: i64 = text
            .parse()
            .map_err(|_| format!("`{text}` is not a scalar"))?;
        Ok(Scalar::from_integer(field, n))
    }
}

/// Parses one vector written as `(a,b,...)` with no internal whitespace.
pub fn parse_vector(field: Field, ambient: usize, text: &str) -> Result<Vector, String> {
    let inner = text
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .ok_or_else(|| format!("`{text}` is not a vector: expected `(a,b,...)`"))?;
    let parts: Vec<&str> = if inner.is_empty() {
        Vec::new()
    } else {
        inner.split(',').collect()
    };
    if parts.len() != ambient {
        return Err(format!(
            "`{text}` has {} coordinates, expected {ambient}",
            parts.len()
        ));
    }
    let mut coords = Vec::with_capacity(ambient);
    for part in parts {
        coords.push(parse_scalar(field, part)?);
    }
    Ok(Vector::new(field, coords))
}

pub fn parse(text: &str) -> Result<SpaceFile, FileError> {
    let mut p = Parser::new(text);

    p.keyword("field")?;
    let field_err = p.syntax_here("expected `Q` or `GF <p>`".to_string());
    let field = match p.next("`Q` or `GF`")?.text.as_str() {
        "Q" => Field::Rational,
        "GF" => {
            let modulus: u64 = p.number("a prime modulus")?;
            if !is_prime(modulus) {
                return Err(FileError::Invariant {
                    message: format!("{modulus} is not prime"),
                });
            }
            Field::Prime(modulus)
        }
        _ => return Err(field_err),
    };

    p.keyword("ambient")?;
    let ambient: usize = p.number("the ambient dimension")?;
    p.keyword("omega")?;
    let omega: u32 = p.number("the count cap")?;

    let mut spaces: Vec<(String, MVSpace)> = Vec::new();
    if p.peek().is_none() {
        return Err(p.syntax_here("no spaces defined".to_string()));
    }
    while p.peek().is_some() {
        p.keyword("space")?;
        let name_err = p.syntax_here("expected a space name".to_string());
        let name = p.next("a space name")?.text.clone();
        if !is_name(&name) {
            return Err(name_err);
        }
        if spaces.iter().any(|(n, _)| n == &name) {
            return Err(FileError::Invariant {
                message: format!("duplicate space name `{name}`"),
            });
        }
        let mut spans: Vec<(u32, Vec<Vector>)> = Vec::new();
        loop {
            let at_end = matches!(p.peek(), Some(t) if t.text == "end");
            if at_end {
                p.next("`end`")?;
                break;
            }
            p.keyword("level")?;
            let count: u32 = p.number("a level count")?;
            if let Some((previous, _)) = spans.last() {
                if count >= *previous {
                    return Err(FileError::Invariant {
                        message: format!(
                            "level counts must be strictly decreasing: {count} after {previous}"
                        ),
                    });
                }
            }
            p.keyword("span")?;
            p.keyword("{")?;
            let mut generators = Vec::new();
            loop {
                let done = matches!(p.peek(), Some(t) if t.text == "}");
                if done {
                    p.next("`}`")?;
                    break;
                }
                let vec_err = p.syntax_here("expected a vector or `}`".to_string());
                let token = p.next("a vector or `}`")?;
                if !token.text.starts_with('(') {
                    return Err(vec_err);
                }
                let text = token.text.clone();
                match parse_vector(field, ambient, &text) {
                    Ok(v) => generators.push(v),
                    Err(message) => {
                        return Err(match vec_err {
                            FileError::Syntax { line, col, .. } => {
                                FileError::Syntax { line, col, message }
                            }
                            other => other,
                        })
                    }
                }
            }
            spans.push((count, generators));
        }
        let space = MVSpace::from_spans(field, ambient, omega, spans).map_err(|e| {
            FileError::Invariant {
                message: format!("space `{name}`: {e}"),
            }
        })?;
        spaces.push((name, space));
    }

    Ok(SpaceFile {
        field,
        ambient,
        omega,
        spaces,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const PAIR: &str = "\
# the worked pair
field Q
ambient 2
omega 6

space V
  level 5 span { }
  level 3 span { (0,1) }
  level 1 span { (1,0) (0,1) }
end

space W
  level 6 span { }
  level 2 span { (1,1) }
  level 1 span { (1,0) (0,1) }
end
";

    #[test]
    fn parses_the_worked_pair() {
        let file = parse(PAIR).unwrap();
        assert_eq!(file.field, Field::Rational);
        assert_eq!(file.ambient, 2);
        assert_eq!(file.omega, 6);
        assert_eq!(file.spaces.len(), 2);
        let v = file.get("V").unwrap();
        assert_eq!(v.counts(), vec![5, 3, 1]);
        assert_eq!(
            v.count(&Vector::from_integers(Field::Rational, &[0, 7])).unwrap(),
            3
        );
        assert!(file.get("U").is_none());
    }

    #[test]
    fn serialization_round_trips() {
        let file = parse(PAIR).unwrap();
        let canonical = file.serialize();
        let again = parse(&canonical).unwrap();
        assert_eq!(again, file);
        // The canonical form is a fixed point of parse-then-serialize.
        assert_eq!(again.serialize(), canonical);
    }

    #[test]
    fn finite_field_files_round_trip() {
        let text = "\
field GF 3
ambient 2
omega 4

space S
  level 4 span { }
  level 2 span { (1,2) }
  level 1 span { (1,0) (0,1) }
end
";
        let file = parse(text).unwrap();
        let again = parse(&file.serialize()).unwrap();
        assert_eq!(again, file);
        let s = file.get("S").unwrap();
        // (2,1) = 2 * (1,2) over GF(3).
        assert_eq!(
            s.count(&Vector::from_integers(Field::Prime(3), &[2, 1])).unwrap(),
            2
        );
    }

    #[test]
    fn fractions_parse_and_normalize() {
        let text = "\
field Q
ambient 2
omega 2

space S
  level 1 span { (1/2,-3) }
end
";
        let file = parse(text).unwrap();
        let s = file.get("S").unwrap();
        assert_eq!(
            s.count(&Vector::from_integers(Field::Rational, &[1, -6])).unwrap(),
            1
        );
        // The reduced row starts at 1, so the canonical form rescales.
        assert!(file.serialize().contains("level 1 span { (1,-6) }"));
    }

    #[test]
    fn empty_files_are_rejected() {
        let err = parse("field Q\nambient 2\nomega 3\n").unwrap_err();
        assert!(matches!(err, FileError::Syntax { .. }));
        assert!(err.to_string().contains("no spaces"));
    }

    #[test]
    fn duplicate_names_are_rejected() {
        let text = "\
field Q
ambient 1
omega 1
space A
  level 1 span { (1) }
end
space A
end
";
        let err = parse(text).unwrap_err();
        assert!(matches!(err, FileError::Invariant { .. }));
        assert!(err.to_string().contains("duplicate"));
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let err = parse("field Q\nambient 2\nomega 3\nspace V\n  level 2 span ( }\nend\n")
            .unwrap_err();
        let FileError::Syntax { line, col, .. } = err else {
            panic!("expected a syntax error");
        };
        assert_eq!(line, 5);
        assert_eq!(col, 16);
    }

    #[test]
    fn increasing_counts_are_an_invariant_violation() {
        let text = "\
field Q
ambient 2
omega 5
space V
  level 1 span { (0,1) }
  level 3 span { (1,0) (0,1) }
end
";
        let err = parse(text).unwrap_err();
        assert!(matches!(err, FileError::Invariant { .. }));
        assert!(err.to_string().contains("strictly decreasing"));
    }

    #[test]
    fn non_nested_spans_are_an_invariant_violation() {
        let text = "\
field Q
ambient 2
omega 5
space V
  level 3 span { (0,1) }
  level 1 span { (1,0) }
end
";
        let err = parse(text).unwrap_err();
        assert!(matches!(err, FileError::Invariant { .. }));
    }

    #[test]
    fn composite_moduli_are_rejected() {
        let err = parse("field GF 6\nambient 1\nomega 1\nspace A\nend\n").unwrap_err();
        assert!(matches!(err, FileError::Invariant { .. }));
        assert!(err.to_string().contains("not prime"));
    }

    #[test]
    fn wrong_arity_vectors_are_positioned_syntax_errors() {
        let text = "\
field Q
ambient 2
omega 2
space V
  level 1 span { (1,2,3) }
end
";
        let err = parse(text).unwrap_err();
        assert!(matches!(err, FileError::Syntax { .. }));
        assert!(err.to_string().contains("coordinates"));
    }
}
