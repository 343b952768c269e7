//! Shared by the golden, property and acceptance targets.
#![allow(dead_code)]

use std::io::Write;
use std::process::{Command, Stdio};

use opticat::{PathExpr, Step};
use proptest::prelude::*;
use serde_json::{json, Map, Value as Json};

/// One CLI invocation with its byte-exact expected result.
pub struct Golden {
    pub name: &'static str,
    pub args: &'static [&'static str],
    pub stdin: &'static str,
    pub stdout: &'static str,
    /// `None` when stderr is not pinned.
    pub stderr: Option<&'static str>,
    pub code: i32,
}

const STEP_SET: &str = "'each', 'fst', 'idx(', 'key(', 'snd', 'some'";

pub fn goldens() -> Vec<Golden> {
    let g = |name, args, stdin, stdout, stderr, code| Golden {
        name,
        args,
        stdin,
        stdout,
        stderr,
        code,
    };
    let parse_err: &'static str =
        Box::leak(format!("opticat: syntax error at offset 4: expected one of {STEP_SET}\n").into_boxed_str());
    vec![
        g("get_first", &["get", "fst"], r#"[4,"hello"]"#, "4\n", Some(""), 0),
        g("put_first", &["set", "fst", "12"], r#"[4,"hello"]"#, "[12,\"hello\"]\n", Some(""), 0),
        g("put_first_of_4", &["set", "fst.fst.fst", "42"], r#"[[[1,2],"hi"],4]"#, "[[[42,2],\"hi\"],4]\n", Some(""), 0),
        g("get_snd_fst", &["get", "snd.fst"], "[1,[2,3]]", "2\n", Some(""), 0),
        g("match_some_hit", &["match", "some"], r#"{"some":42}"#, "{\"matched\":true,\"value\":42}\n", Some(""), 0),
        g("match_some_miss", &["match", "some"], "null", "{\"matched\":false,\"rest\":null}\n", Some(""), 0),
        g(
            "match_some_some_inner_miss",
            &["match", "some.some"],
            r#"{"some":null}"#,
            "{\"matched\":false,\"rest\":{\"some\":null}}\n",
            Some(""),
            0,
        ),
        g(
            "match_some_some_hit",
            &["match", "some.some"],
            r#"{"some":{"some":42}}"#,
            "{\"matched\":true,\"value\":42}\n",
            Some(""),
            0,
        ),
        g("build_some_some", &["build", "some.some", "42"], "", "{\"some\":{\"some\":42}}\n", Some(""), 0),
        g(
            "snd_some_match_hit",
            &["match", "snd.some"],
            r#"[1,{"some":42}]"#,
            "{\"matched\":true,\"value\":42}\n",
            Some(""),
            0,
        ),
        g("snd_some_match_miss", &["match", "snd.some"], "[1,null]", "{\"matched\":false,\"rest\":[1,null]}\n", Some(""), 0),
        g("snd_some_set_hit", &["set", "snd.some", "7"], r#"[1,{"some":42}]"#, "[1,{\"some\":7}]\n", Some(""), 0),
        g("snd_some_set_miss", &["set", "snd.some", "7"], "[1,null]", "[1,null]\n", Some(""), 0),
        g(
            "snd_some_set_miss_strict",
            &["set", "snd.some", "7", "--strict"],
            "[1,null]",
            "",
            Some("opticat: path `snd.some` does not match the document\n"),
            3,
        ),
        g(
            "snd_some_get_unsupported",
            &["get", "snd.some"],
            "[1,null]",
            "",
            Some("opticat: get is not supported by OPTIONAL optics\n"),
            2,
        ),
        g("get_each_unsupported", &["get", "each"], "[1]", "", Some("opticat: get is not supported by SETTER optics\n"), 2),
        g("match_each_unsupported", &["match", "each"], "[1]", "", Some("opticat: match is not supported by SETTER optics\n"), 2),
        g("build_lens_unsupported", &["build", "fst", "3"], "", "", Some("opticat: build is not supported by LENS optics\n"), 2),
        g("parse_error_empty_step", &["get", "fst..snd"], "[1,2]", "", Some(parse_err), 4),
        g(
            "parse_error_bad_index",
            &["get", "idx(x)"],
            "[1,2]",
            "",
            Some("opticat: syntax error at offset 4: expected NAT\n"),
            4,
        ),
        g(
            "fst_on_object_mismatch",
            &["get", "fst"],
            r#"{"a":1}"#,
            "",
            Some("opticat: type mismatch: expected a 2-element array, found an object\n"),
            3,
        ),
        g(
            "incr_on_string_mismatch",
            &["map", "fst", "incr"],
            r#"["a",1]"#,
            "",
            Some("opticat: type mismatch: expected a number, found a string\n"),
            3,
        ),
        g("match_key_hit", &["match", "key(name)"], r#"{"name":"Ada"}"#, "{\"matched\":true,\"value\":\"Ada\"}\n", Some(""), 0),
        g("set_missing_key_is_a_miss", &["set", "key(b)", "2"], r#"{"a":1}"#, "{\"a\":1}\n", Some(""), 0),
        g("set_key_sorts_output", &["set", "key(a)", "2"], r#"{"b":0,"a":1}"#, "{\"a\":2,\"b\":0}\n", Some(""), 0),
        g(
            "map_nested_each",
            &["map", "key(users).each.key(age)", "incr"],
            r#"{"users":[{"age":1},{"age":41,"n":"x"},{"n":"y"}]}"#,
            "{\"users\":[{\"age\":2},{\"age\":42,\"n\":\"x\"},{\"n\":\"y\"}]}\n",
            Some(""),
            0,
        ),
        g("map_each_object_values", &["map", "each", "upper"], r#"{"b":"x","a":"y"}"#, "{\"a\":\"Y\",\"b\":\"X\"}\n", Some(""), 0),
        g("map_idx_negate", &["map", "idx(1)", "negate"], "[1,2,3]", "[1,-2,3]\n", Some(""), 0),
        g("match_idx_out_of_range", &["match", "idx(5)"], "[1]", "{\"matched\":false,\"rest\":[1]}\n", Some(""), 0),
        g("canonical_output", &["get", "snd"], r#"[0, {"z": 1, "a": [ 1 , 2 ]}]"#, "{\"a\":[1,2],\"z\":1}\n", Some(""), 0),
        g("quoted_key", &["match", r#"key("a.b")"#], r#"{"a.b":true}"#, "{\"matched\":true,\"value\":true}\n", Some(""), 0),
        g("unknown_map_fn", &["map", "fst", "double"], "[1,2]", "", None, 4),
        g("invalid_document", &["get", "fst"], "[1,", "", None, 4),
        g("missing_value", &["set", "fst"], "[1,2]", "", Some("opticat: `set` needs a VALUE argument\n"), 4),
    ]
}

pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

pub fn run_cli(args: &[&str], stdin: &str) -> Outcome {
    let mut child = Command::new(env!("CARGO_BIN_EXE_opticat"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    // build never reads stdin, so a closed pipe is fine.
    let _ = child.stdin.take().expect("piped").write_all(stdin.as_bytes());
    let out = child.wait_with_output().expect("binary exits");
    Outcome {
        stdout: String::from_utf8(out.stdout).expect("utf-8 stdout"),
        stderr: String::from_utf8(out.stderr).expect("utf-8 stderr"),
        code: out.status.code().expect("exited normally"),
    }
}

/// `Ok(())` or a description of every mismatch.
pub fn check_golden(g: &Golden) -> Result<(), String> {
    let out = run_cli(g.args, g.stdin);
    let mut problems = Vec::new();
    if out.stdout != g.stdout {
        problems.push(format!("stdout {:?}, expected {:?}", out.stdout, g.stdout));
    }
    if let Some(err) = g.stderr {
        if out.stderr != err {
            problems.push(format!("stderr {:?}, expected {:?}", out.stderr, err));
        }
    }
    if out.code != g.code {
        problems.push(format!("exit {}, expected {}", out.code, g.code));
    }
    if problems.is_empty() {
        Ok(())
    } else {
        Err(format!("{}: {}", g.name, problems.join("; ")))
    }
}

pub fn step_strategy() -> impl Strategy<Value = Step> {
    prop_oneof![
        Just(Step::Fst),
        Just(Step::Snd),
        Just(Step::Some),
        Just(Step::Each),
        "[a-zA-Z_][a-zA-Z0-9_-]{0,8}".prop_map(Step::Key),
        any::<String>().prop_map(Step::Key),
        (0usize..10_000).prop_map(Step::Idx),
    ]
}

pub fn path_strategy() -> impl Strategy<Value = PathExpr> {
    prop::collection::vec(step_strategy(), 1..8).prop_map(|steps| PathExpr { steps })
}

/// Paths made of `fst` and `snd` only.
pub fn lens_path_strategy() -> impl Strategy<Value = PathExpr> {
    prop::collection::vec(prop_oneof![Just(Step::Fst), Just(Step::Snd)], 1..6).prop_map(|steps| PathExpr { steps })
}

/// Paths whose steps are small enough for [`doc_for`].
pub fn small_path_strategy() -> impl Strategy<Value = PathExpr> {
    let step = prop_oneof![
        Just(Step::Fst),
        Just(Step::Snd),
        Just(Step::Some),
        Just(Step::Each),
        prop_oneof![Just("a"), Just("b")].prop_map(|k| Step::Key(k.to_string())),
        (0usize..3).prop_map(Step::Idx),
    ];
    prop::collection::vec(step, 1..5).prop_map(|steps| PathExpr { steps })
}

fn scalar() -> BoxedStrategy<Json> {
    prop_oneof![
        Just(Json::Null),
        any::<bool>().prop_map(Json::from),
        (-1000i64..1000).prop_map(Json::from),
        "[a-z]{0,4}".prop_map(Json::from),
    ]
    .boxed()
}

fn number() -> BoxedStrategy<Json> {
    (-1000i64..1000).prop_map(Json::from).boxed()
}

/// Documents the path can traverse without a type mismatch, with `leaf` at
/// every focus. `key`, `idx` and `some` steps may miss.
pub fn doc_for(steps: &[Step], leaf: fn() -> BoxedStrategy<Json>) -> BoxedStrategy<Json> {
    let Some((step, rest)) = steps.split_first() else {
        return leaf();
    };
    let inner = doc_for(rest, leaf);
    match step {
        Step::Fst => (inner, scalar()).prop_map(|(x, y)| json!([x, y])).boxed(),
        Step::Snd => (scalar(), inner).prop_map(|(x, y)| json!([x, y])).boxed(),
        Step::Some => prop_oneof![1 => Just(Json::Null), 3 => inner.prop_map(|x| json!({ "some": x }))].boxed(),
        Step::Key(k) => {
            let k = k.clone();
            (prop::option::weighted(0.75, inner), prop::collection::btree_map("[c-e]", scalar(), 0..3))
                .prop_map(move |(hit, others)| {
                    let mut m: Map<String, Json> = others.into_iter().collect();
                    if let Some(x) = hit {
                        m.insert(k.clone(), x);
                    }
                    Json::Object(m)
                })
                .boxed()
        }
        Step::Idx(i) => {
            let i = *i;
            (prop::collection::vec(inner, 0..=i + 2), scalar())
                .prop_map(move |(items, filler)| {
                    // Only position `i` must conform; the rest may be anything.
                    let items: Vec<Json> =
                        items.into_iter().enumerate().map(|(j, x)| if j == i { x } else { filler.clone() }).collect();
                    Json::Array(items)
                })
                .boxed()
        }
        Step::Each => prop_oneof![
            prop::collection::vec(inner.clone(), 0..3).prop_map(Json::Array),
            prop::collection::btree_map("[a-c]", inner, 0..3).prop_map(|m| Json::Object(m.into_iter().collect())),
        ]
        .boxed(),
    }
}

pub fn numeric_doc_for(steps: &[Step]) -> BoxedStrategy<Json> {
    doc_for(steps, number)
}

pub fn any_doc_for(steps: &[Step]) -> BoxedStrategy<Json> {
    doc_for(steps, scalar)
}

/// Applies `f` at every focus of `steps`, written directly against the
/// document encoding without going through any optic.
pub fn oracle_map(steps: &[Step], doc: &Json, f: &dyn Fn(&Json) -> Json) -> Json {
    let Some((step, rest)) = steps.split_first() else {
        return f(doc);
    };
    let go = |x: &Json| oracle_map(rest, x, f);
    match (step, doc) {
        (Step::Fst, Json::Array(a)) => json!([go(&a[0]), a[1]]),
        (Step::Snd, Json::Array(a)) => json!([a[0], go(&a[1])]),
        (Step::Some, Json::Null) => Json::Null,
        (Step::Some, Json::Object(m)) => json!({ "some": go(&m["some"]) }),
        (Step::Key(k), Json::Object(m)) => {
            let mut m = m.clone();
            if let Some(x) = m.get(k).map(go) {
                m.insert(k.clone(), x);
            }
            Json::Object(m)
        }
        (Step::Idx(i), Json::Array(a)) => {
            let mut a = a.clone();
            if let Some(x) = a.get(*i).map(go) {
                a[*i] = x;
            }
            Json::Array(a)
        }
        (Step::Each, Json::Array(a)) => Json::Array(a.iter().map(go).collect()),
        (Step::Each, Json::Object(m)) => Json::Object(m.iter().map(|(k, x)| (k.clone(), go(x))).collect()),
        _ => panic!("document does not conform to the path"),
    }
}
