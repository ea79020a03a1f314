//! The `t2v` command line: one library operation per command, plain text or
//! JSON output, exit status 0 (success), 1 (mathematical failure) or 2
//! (malformed input).

mod commands;

use clap::{Parser, ValueEnum};
use serde_json::{json, Value};

use crate::error::Error;
use crate::freegroup::{set_max_word_len, DEFAULT_MAX_WORD_LEN};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Command {
    Reduce,
    Mul,
    Hat,
    Conj,
    Root,
    Hatdec,
    E1dec,
    P2mul,
    B2mul,
    Sigmaconj,
    Ppmul,
    Ppact,
    Alpha,
    Relcheck,
    Canon,
    Eq,
    Swap,
    Uneq,
    Nielsen,
    Deform,
    Fix2root,
    Liftprop,
    Liftspec,
    Verify,
    Dist,
    Hausdorff,
}

impl Command {
    fn name(self) -> String {
        self.to_possible_value().expect("no skipped variants").get_name().to_string()
    }
}

#[derive(Debug, Parser)]
#[command(name = "t2v", version, about = "Braid groups of the torus and split 2-valued maps")]
struct Cli {
    /// Print one JSON object instead of plain text.
    #[arg(long)]
    json: bool,

    /// Refuse to build words longer than this.
    #[arg(long, value_name = "N", default_value_t = DEFAULT_MAX_WORD_LEN)]
    max_word_len: usize,

    /// Sweep bounds `L,R,M` for `nielsen`: a,b,c,d in [-L,L], r,s in [-R,R],
    /// (m,n) in [-M,M].
    #[arg(long, value_name = "BOUNDS")]
    grid: Option<String>,

    #[arg(value_enum)]
    command: Command,

    /// Literals: words, elements `(w ; x,y)`, `(w ; x,y) s^e`, `[k | t]`,
    /// classes `class w=.. r=.. s=.. A=a,b,c,d`, points `(x,y)`,
    /// configurations `{(x,y);...}`.
    #[arg(trailing_var_arg = true, allow_hyphen_values = true)]
    args: Vec<String>,
}

/// Exit status and the text written to each stream.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

/// What a command produced.
struct Reply {
    text: String,
    result: Value,
    certificate: Option<Value>,
    status: i32,
}

impl Reply {
    fn new(text: impl Into<String>, result: Value) -> Self {
        Reply {
            text: text.into(),
            result,
            certificate: None,
            status: 0,
        }
    }

    /// Plain-text result that is also the JSON result.
    fn text(text: impl ToString) -> Self {
        let text = text.to_string();
        let result = Value::String(text.clone());
        Reply::new(text, result)
    }
}

/// A failed command, with the argument it concerns when known.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Lib { arg: Option<usize>, err: Error },
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        Failure::Lib { arg: None, err }
    }
}

impl Failure {
    fn status(&self) -> i32 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Lib { err, .. } if err.is_parse() => 2,
            Failure::Lib { .. } => 1,
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Usage(m) => m.clone(),
            Failure::Lib { arg: Some(i), err } => format!("argument {}: {err}", i + 1),
            Failure::Lib { arg: None, err } => err.to_string(),
        }
    }

    fn to_json(&self) -> Value {
        let kind = match self {
            Failure::Usage(_) => "usage",
            Failure::Lib { err, .. } => match err {
                Error::Parse { .. } => "parse",
                Error::Domain(_) => "domain",
                Error::Overflow(_) => "overflow",
                Error::WordTooLong { .. } => "word-too-long",
                Error::Internal(_) => "internal",
                _ => "alphabet",
            },
        };
        let mut v = json!({ "kind": kind, "message": self.message() });
        if let Failure::Lib { arg, err } = self {
            if let Error::Parse { column, .. } = err {
                v["column"] = json!(column);
            }
            if let Some(i) = arg {
                v["argument"] = json!(i + 1);
            }
        }
        v
    }
}

/// Runs one invocation; `argv[0]` is the program name.
pub fn run<I, S>(argv: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let argv: Vec<String> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => return clap_failure(&argv, e),
    };
    set_max_word_len(cli.max_word_len);
    let inputs = cli.args.clone();
    let outcome = commands::dispatch(cli.command, &cli.args, cli.grid.as_deref());
    let name = cli.command.name();
    match (outcome, cli.json) {
        (Ok(reply), false) => Outcome {
            status: reply.status,
            stdout: format!("{}\n", reply.text),
            stderr: String::new(),
        },
        (Ok(reply), true) => {
            let mut v = json!({ "command": name, "inputs": inputs, "result": reply.result });
            if let Some(cert) = reply.certificate {
                v["certificate"] = cert;
            }
            json_outcome(reply.status, &v)
        }
        (Err(f), false) => Outcome {
            status: f.status(),
            stdout: String::new(),
            stderr: format!("error: {}\n", f.message()),
        },
        (Err(f), true) => {
            let v = json!({ "command": name, "inputs": inputs, "result": Value::Null, "error": f.to_json() });
            json_outcome(f.status(), &v)
        }
    }
}

fn json_outcome(status: i32, v: &Value) -> Outcome {
    Outcome {
        status,
        stdout: format!("{v}\n"),
        stderr: String::new(),
    }
}

fn clap_failure(argv: &[String], e: clap::Error) -> Outcome {
    use clap::error::ErrorKind;
    if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
        return Outcome {
            status: 0,
            stdout: e.to_string(),
            stderr: String::new(),
        };
    }
    if argv.iter().any(|a| a == "--json") {
        let v = json!({
            "command": Value::Null,
            "inputs": argv.iter().skip(1).collect::<Vec<_>>(),
            "result": Value::Null,
            "error": { "kind": "usage", "message": e.to_string().trim_end() },
        });
        return json_outcome(2, &v);
    }
    Outcome {
        status: 2,
        stdout: String::new(),
        stderr: e.to_string(),
    }
}
