//! Path expressions: `step ('.' step)*` with
//! `step := fst | snd | key(IDENT | STRING) | idx(NAT) | some | each`.

use std::fmt;

use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Step {
    Fst,
    Snd,
    Key(String),
    Idx(usize),
    Some,
    Each,
}

/// A non-empty sequence of steps, outermost first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathExpr {
    pub steps: Vec<Step>,
}

/// A syntax error at a byte offset of the input, with every token that would
/// have been accepted there.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub struct PathError {
    pub offset: usize,
    pub expected: Vec<&'static str>,
}

/// Token classes print bare, literal tokens print quoted.
fn show_token(t: &str) -> String {
    if t == END || t.chars().all(|c| c.is_ascii_uppercase()) {
        t.to_string()
    } else {
        format!("'{t}'")
    }
}

impl fmt::Display for PathError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tokens: Vec<String> = self.expected.iter().map(|t| show_token(t)).collect();
        match tokens.as_slice() {
            [one] => write!(f, "syntax error at offset {}: expected {one}", self.offset),
            _ => write!(f, "syntax error at offset {}: expected one of {}", self.offset, tokens.join(", ")),
        }
    }
}

const END: &str = "end of input";

const STEP_START: [&str; 6] = ["each", "fst", "idx(", "key(", "snd", "some"];

fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_' || c == '-'
}

/// Whether `name` prints bare inside `key(..)`.
fn is_ident(name: &str) -> bool {
    let mut chars = name.chars();
    chars.next().is_some_and(is_ident_start) && chars.all(is_ident_char)
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn rest(&self) -> &'a str {
        &self.text[self.pos..]
    }

    fn fail<T>(&self, expected: &[&'static str]) -> Result<T, PathError> {
        Err(PathError {
            offset: self.pos,
            expected: expected.to_vec(),
        })
    }

    fn eat(&mut self, token: &str) -> bool {
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &'static str) -> Result<(), PathError> {
        if self.eat(token) {
            Ok(())
        } else {
            self.fail(&[token])
        }
    }

    fn step(&mut self) -> Result<Step, PathError> {
        let simple = [("fst", Step::Fst), ("snd", Step::Snd), ("some", Step::Some), ("each", Step::Each)];
        for (kw, step) in simple {
            if self.eat(kw) {
                return Ok(step);
            }
        }
        if self.eat("key(") {
            let name = self.key_name()?;
            self.expect(")")?;
            return Ok(Step::Key(name));
        }
        if self.eat("idx(") {
            let n = self.nat()?;
            self.expect(")")?;
            return Ok(Step::Idx(n));
        }
        self.fail(&STEP_START)
    }

    fn key_name(&mut self) -> Result<String, PathError> {
        let rest = self.rest();
        if rest.starts_with('"') {
            return self.string();
        }
        if !rest.chars().next().is_some_and(is_ident_start) {
            return self.fail(&["IDENT", "STRING"]);
        }
        let len = rest.find(|c: char| !is_ident_char(c)).unwrap_or(rest.len());
        self.pos += len;
        Ok(rest[..len].to_string())
    }

    /// A double-quoted string with JSON escapes.
    fn string(&mut self) -> Result<String, PathError> {
        let rest = self.rest();
        let mut escaped = false;
        let close = rest
            .char_indices()
            .skip(1)
            .find(|&(_, c)| {
                let end = c == '"' && !escaped;
                escaped = c == '\\' && !escaped;
                end
            })
            .map(|(i, _)| i);
        let Some(close) = close else {
            self.pos = self.text.len();
            return self.fail(&["\""]);
        };
        match serde_json::from_str::<String>(&rest[..=close]) {
            Ok(s) => {
                self.pos += close + 1;
                Ok(s)
            }
            Err(_) => self.fail(&["STRING"]),
        }
    }

    fn nat(&mut self) -> Result<usize, PathError> {
        let rest = self.rest();
        let len = rest.find(|c: char| !c.is_ascii_digit()).unwrap_or(rest.len());
        match rest[..len].parse() {
            Ok(n) => {
                self.pos += len;
                Ok(n)
            }
            Err(_) => self.fail(&["NAT"]),
        }
    }
}

pub fn parse_path(text: &str) -> Result<PathExpr, PathError> {
    let mut p = Parser { text, pos: 0 };
    let mut steps = vec![p.step()?];
    while p.pos < text.len() {
        if !p.eat(".") {
            return p.fail(&[".", END]);
        }
        steps.push(p.step()?);
    }
    Ok(PathExpr { steps })
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Step::Fst => f.write_str("fst"),
            Step::Snd => f.write_str("snd"),
            Step::Some => f.write_str("some"),
            Step::Each => f.write_str("each"),
            Step::Idx(n) => write!(f, "idx({n})"),
            Step::Key(k) if is_ident(k) => write!(f, "key({k})"),
            Step::Key(k) => {
                let quoted = serde_json::to_string(k).map_err(|_| fmt::Error)?;
                write!(f, "key({quoted})")
            }
        }
    }
}

impl fmt::Display for PathExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, step) in self.steps.iter().enumerate() {
            if i > 0 {
                f.write_str(".")?;
            }
            write!(f, "{step}")?;
        }
        Ok(())
    }
}

pub fn print_path(p: &PathExpr) -> String {
    p.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_nested_steps() {
        let p = parse_path("key(users).idx(0).some").unwrap();
        assert_eq!(p.steps, vec![Step::Key("users".into()), Step::Idx(0), Step::Some]);
        assert_eq!(parse_path("fst.fst.fst").unwrap().steps, vec![Step::Fst; 3]);
    }

    #[test]
    fn empty_step_is_rejected_where_it_starts() {
        let e = parse_path("fst..snd").unwrap_err();
        assert_eq!(e.offset, 4);
        assert_eq!(e.expected, STEP_START.to_vec());
        assert_eq!(
            e.to_string(),
            "syntax error at offset 4: expected one of 'each', 'fst', 'idx(', 'key(', 'snd', 'some'"
        );
    }

    #[test]
    fn error_offsets_point_at_the_bad_token() {
        assert_eq!(parse_path("").unwrap_err().offset, 0);
        assert_eq!(parse_path("fstx").unwrap_err().expected, vec![".", END]);
        assert_eq!(parse_path("idx(a)").unwrap_err(), PathError { offset: 4, expected: vec!["NAT"] });
        assert_eq!(parse_path("key(1)").unwrap_err().expected, vec!["IDENT", "STRING"]);
        assert_eq!(parse_path("key(\"ab").unwrap_err().offset, 7);
        assert_eq!(parse_path("key(a b)").unwrap_err(), PathError { offset: 5, expected: vec![")"] });
    }

    #[test]
    fn quoted_keys_round_trip() {
        let p = parse_path(r#"key("a.b").key("say \"hi\"").key(plain)"#).unwrap();
        assert_eq!(p.steps[0], Step::Key("a.b".into()));
        assert_eq!(p.steps[1], Step::Key("say \"hi\"".into()));
        assert_eq!(print_path(&p), r#"key("a.b").key("say \"hi\"").key(plain)"#);
    }
}
