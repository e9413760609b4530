//! Text format for monoid presentations and maps.
//!
//! Grammar (one token stream, `#` starts a comment to end of line):
//!
//! ```text
//! monoid   := "ambient" INT torsion? NL gen*
//! torsion  := "[" INT+ "]"
//! gen      := INT+ NL                  # one generator per line
//! mapfile  := "source" NL monoid "target" NL monoid "map" INT NL row*
//! row      := INT+ NL                  # matrix rows, source arity many
//! ```
//!
//! Serialization emits the canonical form (reduced, sorted generators), so
//! `serialize(parse(x))` is a fixed point byte for byte.

use monoid_core::{AbelianGroupZ, AffineMonoidZ, Caps, Mat, MonoidMapZ};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormatError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl std::fmt::Display for FormatError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.col, self.message)
    }
}

impl std::error::Error for FormatError {}

#[derive(Debug, Clone, PartialEq)]
pub enum ParsedEntity {
    Monoid(AffineMonoidZ),
    Map(MonoidMapZ),
}

struct Lines<'a> {
    lines: Vec<(usize, &'a str)>,
    pos: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| {
                let body = match l.find('#') {
                    Some(k) => &l[..k],
                    None => l,
                };
                (i + 1, body.trim())
            })
            .filter(|(_, l)| !l.is_empty())
            .collect();
        Lines { lines, pos: 0 }
    }

    fn peek(&self) -> Option<(usize, &'a str)> {
        self.lines.get(self.pos).copied()
    }

    fn next(&mut self) -> Option<(usize, &'a str)> {
        let out = self.peek();
        if out.is_some() {
            self.pos += 1;
        }
        out
    }
}

fn err(line: usize, col: usize, message: impl Into<String>) -> FormatError {
    FormatError { line, col, message: message.into() }
}

fn parse_int(line: usize, tok: &str, col: usize) -> Result<i64, FormatError> {
    tok.parse::<i64>().map_err(|_| err(line, col, format!("expected an integer, found {tok:?}")))
}

fn parse_int_row(line: usize, body: &str) -> Result<Vec<i64>, FormatError> {
    let mut out = Vec::new();
    for (k, tok) in body.split_whitespace().enumerate() {
        out.push(parse_int(line, tok, k + 1)?);
    }
    Ok(out)
}

fn parse_monoid_block(lines: &mut Lines) -> Result<AffineMonoidZ, FormatError> {
    let (lno, header) = lines
        .next()
        .ok_or_else(|| err(0, 0, "expected an 'ambient' header"))?;
    let mut toks = header.split_whitespace();
    match toks.next() {
        Some("ambient") => {}
        other => {
            return Err(err(lno, 1, format!("expected 'ambient', found {other:?}")));
        }
    }
    let rank_tok = toks.next().ok_or_else(|| err(lno, 2, "missing free rank"))?;
    let rank = parse_int(lno, rank_tok, 2)?;
    if rank < 0 {
        return Err(err(lno, 2, "free rank must be nonnegative"));
    }
    let rest: Vec<&str> = toks.collect();
    let mut torsion: Vec<i64> = Vec::new();
    if !rest.is_empty() {
        let joined = rest.join(" ");
        let inner = joined
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .ok_or_else(|| err(lno, 3, "torsion factors must be bracketed: [d1 d2 …]"))?;
        for (k, tok) in inner.split_whitespace().enumerate() {
            torsion.push(parse_int(lno, tok, k + 3)?);
        }
    }
    let ambient = AbelianGroupZ::new(rank as usize, torsion)
        .map_err(|e| err(lno, 1, e.to_string()))?;
    let arity = ambient.arity();
    let mut gens = Vec::new();
    while let Some((glno, body)) = lines.peek() {
        if body.starts_with(|c: char| c.is_ascii_alphabetic()) {
            break; // next section keyword
        }
        lines.next();
        let row = parse_int_row(glno, body)?;
        if row.len() != arity {
            return Err(err(
                glno,
                1,
                format!("generator has {} coordinates, ambient needs {}", row.len(), arity),
            ));
        }
        gens.push(row);
    }
    AffineMonoidZ::new(ambient, gens).map_err(|e| err(lno, 1, e.to_string()))
}

/// Parse a monoid file or a map file from disk.
pub fn parse_monoid_file(path: &std::path::Path) -> Result<ParsedEntity, FormatError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| err(0, 0, format!("cannot read {}: {e}", path.display())))?;
    parse_monoid_str(&text)
}

/// Parse a monoid file or a map file.
pub fn parse_monoid_str(text: &str) -> Result<ParsedEntity, FormatError> {
    let mut lines = Lines::new(text);
    match lines.peek() {
        Some((_, "source")) => {
            lines.next();
            let source = parse_monoid_block(&mut lines)?;
            match lines.next() {
                Some((_, "target")) => {}
                Some((lno, other)) => {
                    return Err(err(lno, 1, format!("expected 'target', found {other:?}")));
                }
                None => return Err(err(0, 0, "unexpected end of input: missing target")),
            }
            let target = parse_monoid_block(&mut lines)?;
            let (mlno, mline) = lines
                .next()
                .ok_or_else(|| err(0, 0, "unexpected end of input: missing map block"))?;
            let mut toks = mline.split_whitespace();
            if toks.next() != Some("map") {
                return Err(err(mlno, 1, "expected 'map <rows>'"));
            }
            let rows_tok = toks.next().ok_or_else(|| err(mlno, 2, "missing row count"))?;
            let nrows = parse_int(mlno, rows_tok, 2)? as usize;
            if nrows != source.ambient().arity() {
                return Err(err(
                    mlno,
                    2,
                    format!(
                        "map must have {} rows (source arity), found {nrows}",
                        source.ambient().arity()
                    ),
                ));
            }
            let mut rows = Vec::with_capacity(nrows);
            for _ in 0..nrows {
                let (rlno, body) = lines
                    .next()
                    .ok_or_else(|| err(mlno, 1, "unexpected end of input in matrix rows"))?;
                let row = parse_int_row(rlno, body)?;
                if row.len() != target.ambient().arity() {
                    return Err(err(
                        rlno,
                        1,
                        format!(
                            "matrix row has {} entries, target arity is {}",
                            row.len(),
                            target.ambient().arity()
                        ),
                    ));
                }
                rows.push(row);
            }
            if let Some((lno, extra)) = lines.next() {
                return Err(err(lno, 1, format!("unexpected trailing content {extra:?}")));
            }
            let cols = target.ambient().arity();
            let map = MonoidMapZ::new(source, target, Mat::from_rows(&rows, cols), &Caps::default())
                .map_err(|e| err(mlno, 1, e.to_string()))?;
            Ok(ParsedEntity::Map(map))
        }
        Some(_) => {
            let m = parse_monoid_block(&mut lines)?;
            if let Some((lno, extra)) = lines.next() {
                return Err(err(lno, 1, format!("unexpected trailing content {extra:?}")));
            }
            Ok(ParsedEntity::Monoid(m))
        }
        None => Err(err(0, 0, "empty input")),
    }
}

pub fn serialize_monoid(m: &AffineMonoidZ) -> String {
    let mut out = String::new();
    let a = m.ambient();
    if a.torsion_factors.is_empty() {
        out.push_str(&format!("ambient {}\n", a.free_rank));
    } else {
        let ds: Vec<String> = a.torsion_factors.iter().map(|d| d.to_string()).collect();
        out.push_str(&format!("ambient {} [{}]\n", a.free_rank, ds.join(" ")));
    }
    for g in m.gens() {
        let row: Vec<String> = g.iter().map(|x| x.to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

pub fn serialize_map(f: &MonoidMapZ) -> String {
    let mut out = String::from("source\n");
    out.push_str(&serialize_monoid(f.source()));
    out.push_str("target\n");
    out.push_str(&serialize_monoid(f.target()));
    out.push_str(&format!("map {}\n", f.matrix().rows));
    for i in 0..f.matrix().rows {
        let row: Vec<String> = f.matrix().row(i).iter().map(|x| x.to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_free_monoid() {
        let m = parse_monoid_str("ambient 1\n1\n").unwrap();
        match m {
            ParsedEntity::Monoid(m) => assert_eq!(m, AffineMonoidZ::free(1)),
            _ => panic!("expected a monoid"),
        }
    }

    #[test]
    fn parse_numerical_semigroup() {
        let m = parse_monoid_str("ambient 1\n2\n3\n").unwrap();
        match m {
            ParsedEntity::Monoid(m) => assert_eq!(m, AffineMonoidZ::numerical(&[2, 3])),
            _ => panic!("expected a monoid"),
        }
    }

    #[test]
    fn malformed_torsion_header_is_a_syntax_error() {
        let e = parse_monoid_str("ambient 1 2 4\n1 0 0\n").unwrap_err();
        assert!(e.message.contains("bracketed"));
        assert_eq!(e.line, 1);
    }

    #[test]
    fn wrong_arity_is_a_semantic_error_with_the_line() {
        let e = parse_monoid_str("ambient 2\n1 0\n1\n").unwrap_err();
        assert_eq!(e.line, 3);
        assert!(e.message.contains("coordinates"));
    }

    #[test]
    fn roundtrip_is_canonical() {
        let text = "ambient 2 [2 4]\n1 1 1 3\n0 1 0 0\n1 1 1 3\n";
        let ParsedEntity::Monoid(m) = parse_monoid_str(text).unwrap() else {
            panic!()
        };
        let s1 = serialize_monoid(&m);
        let ParsedEntity::Monoid(m2) = parse_monoid_str(&s1).unwrap() else {
            panic!()
        };
        assert_eq!(serialize_monoid(&m2), s1);
    }

    #[test]
    fn map_roundtrip() {
        let text = "source\nambient 1\n1\ntarget\nambient 1\n1\nmap 1\n3\n";
        let ParsedEntity::Map(f) = parse_monoid_str(text).unwrap() else {
            panic!()
        };
        let s = serialize_map(&f);
        let ParsedEntity::Map(f2) = parse_monoid_str(&s).unwrap() else {
            panic!()
        };
        assert_eq!(serialize_map(&f2), s);
        assert_eq!(f, f2);
    }

    #[test]
    fn comments_and_blank_lines_are_ignored ()  {
        let text = "# the plane\nambient 2\n\n1 0  # e1\n0 1\n";
        let ParsedEntity::Monoid(m) = parse_monoid_str(text).unwrap() else {
            panic!()
        };
        assert_eq!(m, AffineMonoidZ::free(2));
    }
}
