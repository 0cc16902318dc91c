//! Command surface of the `colsym` binary. Kept in the library so that the
//! dispatch can be tested without spawning processes.

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::engine::Engine;
use crate::exec::Execution;
use crate::expr;
use crate::formal::{Algebra, Basis, FormalSum};
use crate::linear::LinComb;
use crate::poly::{realize_m_basis, realize_sym_m};
use crate::sentence::{Alphabet, PSentence};
use crate::tableaux::{admissible_type, dual_schur_in_m, enumerate_cssyt, tableau_type, KostkaMatrix};
use crate::verify::{parse_checks, run_suite, VerifyConfig, DEFAULT_KEY_CAP};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "colsym", version, about = "Colored symmetric and quasisymmetric functions")]
pub struct Cli {
    /// Ordered colors, e.g. `ab`; declaration order is the color order.
    #[arg(long, global = true, default_value = "a")]
    pub alphabet: String,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate an expression such as `m(bc,a) * m(b)`.
    Eval { expr: String },
    /// Run the exhaustive check suite.
    Verify {
        #[arg(long, default_value_t = 4)]
        max_degree: usize,
        /// `all` or a comma-separated list of check names.
        #[arg(long, default_value = "all")]
        checks: String,
        #[arg(long, default_value_t = DEFAULT_KEY_CAP)]
        key_cap: u128,
        /// Run without the thread pool.
        #[arg(long)]
        sequential: bool,
    },
    /// Colored Kostka matrix of one size.
    Kostka {
        #[arg(long)]
        size: usize,
    },
    /// Colored semistandard tableaux of a shape.
    Cssyt {
        #[arg(long)]
        shape: String,
        #[arg(long)]
        max_entry: usize,
    },
    /// `s*_P` in the monomial basis.
    DualSchur {
        #[arg(long)]
        shape: String,
    },
    /// `s_P` in the complete homogeneous basis.
    Schur {
        #[arg(long)]
        shape: String,
    },
    /// Polynomial realization of `M_I` (or `m_P` with `--symmetric`) in finitely many slots.
    Realize {
        #[arg(long)]
        index: String,
        #[arg(long)]
        slots: usize,
        #[arg(long)]
        symmetric: bool,
    },
}

/// What a run produced: text for stdout, text for stderr, exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self { stdout, stderr: String::new(), code: EXIT_OK }
    }

    fn config(msg: impl std::fmt::Display) -> Self {
        Self { stdout: String::new(), stderr: format!("error: {msg}\n"), code: EXIT_CONFIG }
    }
}

fn with_newline(mut s: String) -> String {
    if !s.ends_with('\n') {
        s.push('\n');
    }
    s
}

fn pretty(v: &serde_json::Value) -> String {
    with_newline(serde_json::to_string_pretty(v).expect("json"))
}

pub fn run(cli: &Cli) -> Outcome {
    let alphabet = match Alphabet::parse(&cli.alphabet) {
        Ok(a) => a,
        Err(e) => return Outcome::config(e),
    };
    let json = cli.format == Format::Json;
    match &cli.command {
        Command::Eval { expr } => eval(&alphabet, expr, json),
        Command::Verify { max_degree, checks, key_cap, sequential } => {
            let checks = match parse_checks(checks) {
                Ok(c) => c,
                Err(e) => return Outcome::config(e),
            };
            let mut cfg = VerifyConfig::new(alphabet, *max_degree, checks);
            cfg.key_cap = *key_cap;
            if *sequential {
                cfg.exec = Execution::Sequential;
            }
            match run_suite(&cfg) {
                Err(e) => Outcome::config(e),
                Ok(r) => Outcome {
                    stdout: with_newline(if json { r.render_json() } else { r.render_text() }),
                    stderr: String::new(),
                    code: if r.passed { EXIT_OK } else { EXIT_FAIL },
                },
            }
        }
        Command::Kostka { size } => {
            let k = KostkaMatrix::of_size(*size, &alphabet, Execution::default());
            if json {
                return Outcome::ok(pretty(&k.to_json(&alphabet)));
            }
            let names: Vec<String> = k.order.iter().map(|p| alphabet.render_sentence(p.as_sentence())).collect();
            let w = names.iter().map(String::len).max().unwrap_or(0);
            let mut out = String::new();
            for (name, row) in names.iter().zip(&k.rows) {
                let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
                out.push_str(&format!("{name:<w$}  {}\n", cells.join(" ")));
            }
            Outcome::ok(out)
        }
        Command::Cssyt { shape, max_entry } => {
            let p = match alphabet.parse_psentence(shape) {
                Ok(p) => p,
                Err(e) => return Outcome::config(e),
            };
            let all = enumerate_cssyt(&p, *max_entry);
            if json {
                let rows: Vec<_> = all
                    .iter()
                    .map(|t| {
                        json!({
                            "entries": t.entries(),
                            "type": alphabet.render_weak(&tableau_type(t)),
                            "admissible": admissible_type(t).is_some(),
                        })
                    })
                    .collect();
                return Outcome::ok(pretty(&json!(rows)));
            }
            let mut out = String::new();
            for t in &all {
                let mark = if admissible_type(t).is_some() { "*" } else { " " };
                out.push_str(&format!("{mark} {}    type {}\n", t.render(&alphabet), alphabet.render_weak(&tableau_type(t))));
            }
            out.push_str(&format!("{} tableaux\n", all.len()));
            Outcome::ok(out)
        }
        Command::DualSchur { shape } => shape_expansion(&alphabet, shape, json, |p, _| {
            FormalSum::in_basis(Algebra::SymA, Basis::Mono, &crate::formal::untyped(&dual_schur_in_m(p)))
        }),
        Command::Schur { shape } => shape_expansion(&alphabet, shape, json, |p, e| {
            let h = e.schur().s_to_h(&LinComb::singleton(p.clone()));
            FormalSum::in_basis(Algebra::PSymA, Basis::Homog, &crate::formal::untyped(&h))
        }),
        Command::Realize { index, slots, symmetric } => {
            let poly = if *symmetric {
                alphabet.parse_psentence(index).map(|p| realize_sym_m(&p, *slots))
            } else {
                alphabet.parse_sentence(index).map(|i| realize_m_basis(&i, *slots))
            };
            match poly {
                Err(e) => Outcome::config(e),
                Ok(p) if json => Outcome::ok(pretty(&json!({ "slots": slots, "polynomial": p.render(&alphabet) }))),
                Ok(p) => Outcome::ok(with_newline(p.render(&alphabet))),
            }
        }
    }
}

fn shape_expansion(
    alphabet: &Alphabet,
    shape: &str,
    json: bool,
    f: impl Fn(&PSentence, &Engine) -> FormalSum,
) -> Outcome {
    let p = match alphabet.parse_psentence(shape) {
        Ok(p) => p,
        Err(e) => return Outcome::config(e),
    };
    let engine = Engine::new(alphabet.clone());
    let v = f(&p, &engine);
    if json {
        Outcome::ok(pretty(&v.to_json(alphabet)))
    } else {
        Outcome::ok(with_newline(v.render(alphabet)))
    }
}

fn eval(alphabet: &Alphabet, input: &str, json: bool) -> Outcome {
    let engine = Engine::new(alphabet.clone());
    match expr::eval_str(&engine, input) {
        Ok(v) if json => Outcome::ok(pretty(&v.to_json(alphabet))),
        Ok(v) => Outcome::ok(with_newline(v.render(alphabet))),
        Err(e) => {
            let caret = format!("{}^", " ".repeat(input[..e.pos.min(input.len())].chars().count()));
            Outcome {
                stdout: String::new(),
                stderr: format!("error: {}\n  {input}\n  {caret}\n", e),
                code: EXIT_CONFIG,
            }
        }
    }
}
