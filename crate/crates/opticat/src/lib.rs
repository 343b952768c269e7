//! Composed optics over JSON documents.
//!
//! A path compiles to one optic whose family is the join of its steps'
//! families: `fst`/`snd` are lenses on 2-element arrays, `some` is a prism on
//! the `null` / `{"some": x}` encoding of optional values, `key`/`idx` are
//! optionals and `each` is a setter over array elements and object values.
//!
//! ```
//! use opticat::{run, Command};
//!
//! let out = run(&Command::Get, "fst", r#"[4,"hello"]"#, false).unwrap();
//! assert_eq!(out, "4\n");
//! let out = run(&Command::Match, "snd.some", r#"[1,null]"#, false).unwrap();
//! assert_eq!(out, "{\"matched\":false,\"rest\":[1,null]}\n");
//! ```

mod path;

use std::sync::Arc;

use opticat_core::families::{AnyOptic, FamilyTag, Lens, Optional, Prism, Setter};
use opticat_core::{Either, OpticError};
use serde_json::{json, Map, Number, Value as Json};
use thiserror::Error;

pub use path::{parse_path, print_path, PathError, PathExpr, Step};

pub type JsonOptic = AnyOptic<Json>;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Path(#[from] PathError),
    /// The input document or a VALUE argument is not valid JSON.
    #[error("invalid JSON in {what}: {message}")]
    Json { what: &'static str, message: String },
    #[error("{0}")]
    Usage(String),
    #[error("{operator} is not supported by {family} optics")]
    Unsupported { operator: &'static str, family: FamilyTag },
    #[error("{0}")]
    Mismatch(String),
    #[error("path `{0}` does not match the document")]
    Miss(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Unsupported { .. } => 2,
            CliError::Mismatch(_) | CliError::Miss(_) => 3,
            CliError::Path(_) | CliError::Json { .. } | CliError::Usage(_) => 4,
        }
    }
}

impl From<OpticError> for CliError {
    fn from(e: OpticError) -> Self {
        CliError::Mismatch(e.to_string())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MapFn {
    Incr,
    Negate,
    Upper,
    Lower,
}

impl MapFn {
    pub fn parse(name: &str) -> Result<MapFn, CliError> {
        match name {
            "incr" => Ok(MapFn::Incr),
            "negate" => Ok(MapFn::Negate),
            "upper" => Ok(MapFn::Upper),
            "lower" => Ok(MapFn::Lower),
            _ => Err(CliError::Usage(format!(
                "unknown map function `{name}`; expected one of incr, negate, upper, lower"
            ))),
        }
    }

    pub fn apply(self, v: &Json) -> opticat_core::Result<Json> {
        match (self, v) {
            (MapFn::Incr, Json::Number(n)) => add_one(n),
            (MapFn::Negate, Json::Number(n)) => negate(n),
            (MapFn::Upper, Json::String(s)) => Ok(Json::String(s.to_uppercase())),
            (MapFn::Lower, Json::String(s)) => Ok(Json::String(s.to_lowercase())),
            (MapFn::Incr | MapFn::Negate, _) => Err(mismatch("a number", v)),
            (MapFn::Upper | MapFn::Lower, _) => Err(mismatch("a string", v)),
        }
    }
}

fn add_one(n: &Number) -> opticat_core::Result<Json> {
    let out = if let Some(i) = n.as_i64() {
        i.checked_add(1).map(Number::from)
    } else if let Some(u) = n.as_u64() {
        u.checked_add(1).map(Number::from)
    } else {
        n.as_f64().and_then(|f| Number::from_f64(f + 1.0))
    };
    out.map(Json::Number).ok_or_else(|| out_of_range(n))
}

fn negate(n: &Number) -> opticat_core::Result<Json> {
    let out = if let Some(i) = n.as_i64() {
        i.checked_neg().map(Number::from)
    } else if let Some(u) = n.as_u64() {
        0i64.checked_sub_unsigned(u).map(Number::from)
    } else {
        n.as_f64().and_then(|f| Number::from_f64(-f))
    };
    out.map(Json::Number).ok_or_else(|| out_of_range(n))
}

fn out_of_range(n: &Number) -> OpticError {
    OpticError::TypeMismatch {
        expected: "a number whose result is representable",
        found: n.to_string(),
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Command {
    Get,
    Set(Json),
    Map(MapFn),
    Match,
    Build(Json),
}

fn kind(v: &Json) -> String {
    match v {
        Json::Null => "null".into(),
        Json::Bool(_) => "a boolean".into(),
        Json::Number(_) => "a number".into(),
        Json::String(_) => "a string".into(),
        Json::Array(a) => format!("an array of length {}", a.len()),
        Json::Object(_) => "an object".into(),
    }
}

fn mismatch(expected: &'static str, found: &Json) -> OpticError {
    OpticError::TypeMismatch {
        expected,
        found: kind(found),
    }
}

fn pair_lens(i: usize) -> Lens<Json> {
    fn pair(s: &Json) -> opticat_core::Result<&Vec<Json>> {
        match s {
            Json::Array(a) if a.len() == 2 => Ok(a),
            _ => Err(mismatch("a 2-element array", s)),
        }
    }
    Lens::new(
        move |s: &Json| Ok(pair(s)?[i].clone()),
        move |b: &Json, s: &Json| {
            let mut a = pair(s)?.clone();
            a[i] = b.clone();
            Ok(Json::Array(a))
        },
    )
}

/// `null` is the miss, `{"some": x}` the hit.
fn some_prism() -> Prism<Json> {
    Prism::new(
        |s: &Json| match s {
            Json::Null => Ok(Either::Left(Json::Null)),
            Json::Object(m) if m.len() == 1 && m.contains_key("some") => Ok(Either::Right(m["some"].clone())),
            _ => Err(mismatch("null or {\"some\": _}", s)),
        },
        |b: &Json| Ok(json!({ "some": b })),
    )
}

fn key_optional(key: String) -> Optional<Json> {
    let k = key.clone();
    Optional::new(
        move |s: &Json| match s {
            Json::Object(m) => Ok(m.get(&k).map_or_else(|| Either::Left(s.clone()), |v| Either::Right(v.clone()))),
            _ => Err(mismatch("an object", s)),
        },
        move |b: &Json, s: &Json| {
            let mut m = s.as_object().ok_or_else(|| mismatch("an object", s))?.clone();
            m.insert(key.clone(), b.clone());
            Ok(Json::Object(m))
        },
    )
}

fn idx_optional(i: usize) -> Optional<Json> {
    Optional::new(
        move |s: &Json| match s {
            Json::Array(a) => Ok(a.get(i).map_or_else(|| Either::Left(s.clone()), |v| Either::Right(v.clone()))),
            _ => Err(mismatch("an array", s)),
        },
        move |b: &Json, s: &Json| {
            let mut a = s.as_array().ok_or_else(|| mismatch("an array", s))?.clone();
            a[i] = b.clone();
            Ok(Json::Array(a))
        },
    )
}

fn each_setter() -> Setter<Json> {
    Setter::new(|h| {
        Arc::new(move |s: &Json| match s {
            Json::Array(a) => Ok(Json::Array(a.iter().map(|x| h(x)).collect::<opticat_core::Result<_>>()?)),
            Json::Object(m) => Ok(Json::Object(
                m.iter()
                    .map(|(k, x)| Ok((k.clone(), h(x)?)))
                    .collect::<opticat_core::Result<Map<_, _>>>()?,
            )),
            _ => Err(mismatch("an array or object", s)),
        })
    })
}

pub fn step_optic(step: &Step) -> JsonOptic {
    match step {
        Step::Fst => AnyOptic::Lens(pair_lens(0)),
        Step::Snd => AnyOptic::Lens(pair_lens(1)),
        Step::Some => AnyOptic::Prism(some_prism()),
        Step::Key(k) => AnyOptic::Optional(key_optional(k.clone())),
        Step::Idx(i) => AnyOptic::Optional(idx_optional(*i)),
        Step::Each => AnyOptic::Setter(each_setter()),
    }
}

pub fn step_tag(step: &Step) -> FamilyTag {
    match step {
        Step::Fst | Step::Snd => FamilyTag::Lens,
        Step::Some => FamilyTag::Prism,
        Step::Key(_) | Step::Idx(_) => FamilyTag::Optional,
        Step::Each => FamilyTag::Setter,
    }
}

/// Composes the steps outermost first; each composition promotes both sides
/// to the join of their families.
pub fn compile(p: &PathExpr) -> (JsonOptic, FamilyTag) {
    let optic = p
        .steps
        .iter()
        .map(step_optic)
        .reduce(|outer, inner| outer.compose(&inner))
        .expect("paths have at least one step");
    let tag = optic.tag();
    (optic, tag)
}

/// Sorted keys, no insignificant whitespace, trailing newline.
pub fn canonical(v: &Json) -> String {
    let mut s = serde_json::to_string(v).expect("JSON values serialize");
    s.push('\n');
    s
}

pub fn parse_json(text: &str, what: &'static str) -> Result<Json, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Json {
        what,
        message: e.to_string(),
    })
}

fn require(supported: bool, operator: &'static str, tag: FamilyTag) -> Result<(), CliError> {
    if supported {
        Ok(())
    } else {
        Err(CliError::Unsupported { operator, family: tag })
    }
}

/// Runs `command` at `path` on the document `input`. Under `strict`, a `set`
/// or `map` whose path misses the document fails instead of returning it
/// unchanged.
pub fn run(command: &Command, path: &str, input: &str, strict: bool) -> Result<String, CliError> {
    let expr = parse_path(path)?;
    let (optic, tag) = compile(&expr);
    match command {
        Command::Get => require(tag.supports_get(), "get", tag)?,
        Command::Match => require(tag.supports_match(), "match", tag)?,
        Command::Build(_) => require(tag.supports_build(), "build", tag)?,
        Command::Set(_) | Command::Map(_) => {}
    }
    if let Command::Build(b) = command {
        return Ok(canonical(&optic.build(b)?));
    }
    let doc = parse_json(input, "input document")?;
    let out = match command {
        Command::Get => optic.get(&doc)?,
        Command::Match => match optic.matching(&doc)? {
            Either::Right(v) => json!({ "matched": true, "value": v }),
            Either::Left(rest) => json!({ "matched": false, "rest": rest }),
        },
        Command::Set(v) => {
            check_hit(&optic, &doc, path, strict)?;
            let v = v.clone();
            optic.map_optic(Arc::new(move |_: &Json| Ok(v.clone())))(&doc)?
        }
        Command::Map(f) => {
            check_hit(&optic, &doc, path, strict)?;
            let f = *f;
            optic.map_optic(Arc::new(move |x: &Json| f.apply(x)))(&doc)?
        }
        Command::Build(_) => unreachable!("handled above"),
    };
    Ok(canonical(&out))
}

/// Setters have no notion of a miss.
fn check_hit(optic: &JsonOptic, doc: &Json, path: &str, strict: bool) -> Result<(), CliError> {
    if strict && optic.tag().supports_match() {
        if let Either::Left(_) = optic.matching(doc)? {
            return Err(CliError::Miss(path.to_string()));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tags(path: &str) -> FamilyTag {
        compile(&parse_path(path).unwrap()).1
    }

    #[test]
    fn compile_joins_step_families() {
        assert_eq!(tags("fst.snd"), FamilyTag::Lens);
        assert_eq!(tags("fst.some"), FamilyTag::Optional);
        assert_eq!(tags("each.fst"), FamilyTag::Setter);
        assert_eq!(tags("some.some"), FamilyTag::Prism);
        assert_eq!(tags("key(a).some"), FamilyTag::Optional);
    }

    #[test]
    fn nested_some_miss_keeps_the_outer_layer() {
        let out = run(&Command::Match, "some.some", r#"{"some":null}"#, false).unwrap();
        assert_eq!(out, "{\"matched\":false,\"rest\":{\"some\":null}}\n");
    }

    #[test]
    fn exit_codes_follow_the_error_kind() {
        let code = |c: &Command, p: &str, d: &str, strict| run(c, p, d, strict).unwrap_err().exit_code();
        assert_eq!(code(&Command::Get, "each", "[1]", false), 2);
        assert_eq!(code(&Command::Get, "fst", "{}", false), 3);
        assert_eq!(code(&Command::Set(json!(1)), "key(a)", "{}", true), 3);
        assert_eq!(code(&Command::Get, "fst..snd", "[1,2]", false), 4);
        assert_eq!(code(&Command::Get, "fst", "[1,", false), 4);
    }

    #[test]
    fn negating_the_largest_unsigned_values() {
        assert_eq!(MapFn::Negate.apply(&json!(9223372036854775808u64)).unwrap(), json!(i64::MIN));
        assert!(MapFn::Negate.apply(&json!(u64::MAX)).is_err());
        assert!(MapFn::Incr.apply(&json!(u64::MAX)).is_err());
    }
}
