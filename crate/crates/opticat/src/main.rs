use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use opticat::{parse_json, run, CliError, Command, MapFn};

/// Apply a composed optic to a JSON document.
///
/// Exit codes: 0 success, 2 operator unsupported by the path's family,
/// 3 type mismatch (or a miss under --strict), 4 syntax error.
#[derive(Parser, Debug)]
#[command(name = "opticat", version)]
struct Args {
    /// get | set VALUE | map FN | match | build VALUE
    command: String,
    /// Path such as `fst.snd`, `key(users).idx(0).some` or `each.key(n)`.
    path: String,
    /// JSON value for set/build; incr, negate, upper or lower for map.
    value: Option<String>,
    /// Read the document from FILE instead of stdin.
    #[arg(long, value_name = "FILE")]
    input: Option<PathBuf>,
    /// Treat a set or map whose path misses the document as an error.
    #[arg(long)]
    strict: bool,
}

fn command(name: &str, value: Option<&str>) -> Result<Command, CliError> {
    let need = |what: &str| CliError::Usage(format!("`{name}` needs a {what} argument"));
    let extra = || CliError::Usage(format!("`{name}` takes no value argument"));
    match (name, value) {
        ("get", None) => Ok(Command::Get),
        ("match", None) => Ok(Command::Match),
        ("get" | "match", Some(_)) => Err(extra()),
        ("set", Some(v)) => Ok(Command::Set(parse_json(v, "VALUE")?)),
        ("build", Some(v)) => Ok(Command::Build(parse_json(v, "VALUE")?)),
        ("map", Some(f)) => Ok(Command::Map(MapFn::parse(f)?)),
        ("set" | "build", None) => Err(need("VALUE")),
        ("map", None) => Err(need("FN")),
        _ => Err(CliError::Usage(format!(
            "unknown command `{name}`; expected one of get, set, map, match, build"
        ))),
    }
}

fn read_input(args: &Args, cmd: &Command) -> io::Result<String> {
    match (&args.input, cmd) {
        (Some(file), _) => std::fs::read_to_string(file),
        // build never looks at a document.
        (None, Command::Build(_)) => Ok(String::new()),
        (None, _) => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(4);
        }
    };
    let result = command(&args.command, args.value.as_deref()).and_then(|cmd| {
        let input = read_input(&args, &cmd).map_err(|e| CliError::Usage(format!("cannot read input: {e}")))?;
        run(&cmd, &args.path, &input, args.strict)
    });
    match result {
        Ok(out) => {
            let mut stdout = io::stdout().lock();
            if stdout.write_all(out.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::FAILURE;
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("opticat: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
