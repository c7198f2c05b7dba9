//! Command-line front end. `main.rs` only parses arguments and calls [`run`].
//!
//! Exit codes: 0 success, 1 mathematical rejection (non-member, failed
//! verification), 2 I/O, parse or flag errors.

use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::decomposer::{decompose, random_element_with_word, random_stabilizer, verify};
use crate::error::Error;
use crate::finite_unitary::word_table_rows;
use crate::fuzz::{run_fuzz, FuzzConfig, FuzzStats};
use crate::hermitian::{check_membership, GroupMatrix, Matrix4};
use crate::json::{
    decomposition_value, matrix_value, parse_group_matrix, parse_matrix, parse_word_input,
    u2_row_value, JsonInt,
};
use crate::words::DecompositionResult;

pub const EXIT_OK: i32 = 0;
pub const EXIT_REJECTED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "picard", version, about = "Exact word problem for U(3,1; Z[w])")]
pub struct Cli {
    /// Emit line-delimited JSON instead of a human-readable summary.
    #[arg(long, global = true)]
    pub json: bool,

    /// RNG seed for `random` and `fuzz`.
    #[arg(long, global = true, env = "PICARD_SEED", default_value_t = 0)]
    pub seed: u64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check G*JG = J for a matrix file.
    Verify(InputArg),
    /// Write a group element as a unit correction times a generator word.
    Decompose {
        #[command(flatten)]
        input: InputArg,
        /// Include the reduction trace.
        #[arg(long)]
        trace: bool,
    },
    /// Evaluate a word (or a decomposition result) to a matrix.
    Evaluate {
        /// File holding word text or {"unit", "word"} JSON; "-" for stdin.
        input: Option<String>,
        /// Word text given inline instead of a file.
        #[arg(long, conflicts_with = "input")]
        word: Option<String>,
    },
    /// Generate a random group element.
    Random {
        #[arg(long, default_value_t = 10)]
        max_len: usize,
        /// Generate an element of the stabiliser of infinity instead.
        #[arg(long)]
        stabilizer: bool,
    },
    /// Round-trip random words through the decomposition.
    Fuzz {
        #[arg(long, default_value_t = 1000)]
        iterations: usize,
        #[arg(long, default_value_t = 40)]
        max_len: usize,
        /// Where to write a counterexample.
        #[arg(long, default_value = "picard-counterexample.json")]
        dump: PathBuf,
    },
    /// Dump the U(2; Z[w]) word table (72 rows).
    #[command(name = "u2-table")]
    U2Table,
}

#[derive(Debug, Args)]
pub struct InputArg {
    /// Matrix file; "-" reads standard input.
    #[arg(default_value = "-")]
    pub input: String,
}

pub struct Io<'a> {
    pub stdin: &'a mut dyn Read,
    pub stdout: &'a mut dyn Write,
    pub stderr: &'a mut dyn Write,
}

fn read_input(path: &str, stdin: &mut dyn Read) -> std::io::Result<String> {
    if path == "-" {
        let mut s = String::new();
        stdin.read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(path)
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::NotMember(_) | Error::Internal(_) | Error::Shape(_) => EXIT_REJECTED,
        _ => EXIT_INPUT,
    }
}

/// Runs one command, returning the process exit code.
pub fn run(cli: &Cli, io: &mut Io<'_>) -> i32 {
    match dispatch(cli, io) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(io.stderr, "picard: {e}");
            exit_code(&e)
        }
    }
}

fn dispatch(cli: &Cli, io: &mut Io<'_>) -> Result<i32, Error> {
    match &cli.command {
        Command::Verify(arg) => cmd_verify(cli, &read_input(&arg.input, io.stdin)?, io),
        Command::Decompose { input, trace } => {
            cmd_decompose(cli, &read_input(&input.input, io.stdin)?, *trace, io)
        }
        Command::Evaluate { input, word } => {
            let text = match (word, input) {
                (Some(w), _) => w.clone(),
                (None, Some(path)) => read_input(path, io.stdin)?,
                (None, None) => read_input("-", io.stdin)?,
            };
            cmd_evaluate(cli, &text, io)
        }
        Command::Random {
            max_len,
            stabilizer,
        } => cmd_random(cli, *max_len, *stabilizer, io),
        Command::Fuzz {
            iterations,
            max_len,
            dump,
        } => cmd_fuzz(cli, *iterations, *max_len, dump, io),
        Command::U2Table => cmd_u2_table(cli, io),
    }
}

pub fn cmd_verify(cli: &Cli, text: &str, io: &mut Io<'_>) -> Result<i32, Error> {
    let m = parse_matrix(text)?;
    let member = check_membership(&m);
    let fixes = m.get(3, 0).is_zero();
    if cli.json {
        writeln!(io.stdout, "{}", json!({"member": member, "fixes_infinity": fixes}))?;
    } else {
        writeln!(io.stdout, "member: {}", yes_no(member))?;
        writeln!(io.stdout, "fixes infinity: {}", yes_no(fixes))?;
    }
    if member {
        Ok(EXIT_OK)
    } else {
        if let Err(e) = GroupMatrix::new(m) {
            writeln!(io.stderr, "picard: {e}")?;
        }
        Ok(EXIT_REJECTED)
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn cmd_decompose(cli: &Cli, text: &str, trace: bool, io: &mut Io<'_>) -> Result<i32, Error> {
    let g = parse_group_matrix(text)?;
    let d = decompose(&g)?;
    if !verify(&g, &d.result) {
        return Err(Error::Internal("decomposition failed self-verification".into()));
    }
    if cli.json {
        writeln!(io.stdout, "{}", decomposition_value(&d, trace))?;
    } else {
        writeln!(io.stdout, "unit:  {}", d.result.lambda)?;
        writeln!(io.stdout, "word:  {}", d.result.word)?;
        writeln!(io.stdout, "steps: {}", d.trace.steps.len())?;
        if trace {
            for (i, s) in d.trace.steps.iter().enumerate() {
                writeln!(
                    io.stdout,
                    "  step {i}: tau = ({}, {}), k = {}, |g41|^2 {} -> {}",
                    s.tau[0], s.tau[1], s.k, s.n_before, s.n_after
                )?;
            }
            let p = &d.trace.stabilizer;
            writeln!(
                io.stdout,
                "  stabilizer: unit {}, {}, U = {}",
                p.lambda, p.translation, p.rotation
            )?;
        }
    }
    Ok(EXIT_OK)
}

pub fn cmd_evaluate(cli: &Cli, text: &str, io: &mut Io<'_>) -> Result<i32, Error> {
    let r: DecompositionResult = parse_word_input(text)?;
    let m = r.evaluate().into_matrix();
    write_matrix(cli, &m, None, io)?;
    Ok(EXIT_OK)
}

fn write_matrix(cli: &Cli, m: &Matrix4, word: Option<String>, io: &mut Io<'_>) -> Result<(), Error> {
    if cli.json {
        let mut v = matrix_value(m);
        if let Some(w) = word {
            v["word"] = Value::String(w);
        }
        writeln!(io.stdout, "{v}")?;
    } else {
        if let Some(w) = word {
            writeln!(io.stdout, "word: {w}")?;
        }
        writeln!(io.stdout, "{m}")?;
    }
    Ok(())
}

pub fn cmd_random(cli: &Cli, max_len: usize, stabilizer: bool, io: &mut Io<'_>) -> Result<i32, Error> {
    if stabilizer {
        let g = random_stabilizer(cli.seed);
        write_matrix(cli, g.matrix(), None, io)?;
    } else {
        let (w, g) = random_element_with_word(cli.seed, max_len)?;
        write_matrix(cli, g.matrix(), Some(w.to_string()), io)?;
    }
    Ok(EXIT_OK)
}

fn stats_value(stats: &FuzzStats) -> Value {
    json!({
        "iterations": stats.iterations,
        "verified": stats.verified,
        "reduction_steps": stats.reduction_steps,
        "max_steps": stats.max_steps,
        "max_word_len": stats.max_word_len,
        "max_norm": JsonInt(stats.max_norm.clone()),
        "ratio_histogram": stats.ratio_histogram,
        "max_i1": stats.max_i1.to_string(),
        "max_abs_e_plus_k": stats.max_abs_e_plus_k.to_string(),
        "contraction_violations": stats.contraction_violations,
    })
}

pub fn cmd_fuzz(
    cli: &Cli,
    iterations: usize,
    max_len: usize,
    dump: &PathBuf,
    io: &mut Io<'_>,
) -> Result<i32, Error> {
    let stats = run_fuzz(&FuzzConfig {
        iterations,
        seed: cli.seed,
        max_len,
    })?;
    if cli.json {
        writeln!(io.stdout, "{}", stats_value(&stats))?;
    } else {
        writeln!(io.stdout, "verified:        {}/{}", stats.verified, stats.iterations)?;
        writeln!(io.stdout, "reduction steps: {} (max {} per element)", stats.reduction_steps, stats.max_steps)?;
        writeln!(io.stdout, "max word length: {}", stats.max_word_len)?;
        writeln!(io.stdout, "max |g41|^2:     {}", stats.max_norm)?;
        writeln!(io.stdout, "max I1:          {}", stats.max_i1)?;
        writeln!(io.stdout, "max |E + k|:     {}", stats.max_abs_e_plus_k)?;
        writeln!(io.stdout, "n_after/n_before histogram:")?;
        for (i, count) in stats.ratio_histogram.iter().enumerate() {
            let lo = i as f64 / 10.0;
            writeln!(io.stdout, "  [{lo:.1}, {:.1}) {count}", lo + 0.1)?;
        }
    }
    match &stats.first_failure {
        None if stats.all_verified() => Ok(EXIT_OK),
        failure => {
            if let Some(f) = failure {
                let mut v = matrix_value(&f.matrix);
                v["word"] = Value::String(f.word.to_string());
                v["reason"] = Value::String(f.reason.clone());
                fs::write(dump, format!("{v}\n"))?;
                writeln!(
                    io.stderr,
                    "picard: case {} failed ({}); counterexample written to {}",
                    f.index,
                    f.reason,
                    dump.display()
                )?;
            }
            Ok(EXIT_REJECTED)
        }
    }
}

pub fn cmd_u2_table(cli: &Cli, io: &mut Io<'_>) -> Result<i32, Error> {
    let rows: Vec<Value> = word_table_rows()
        .iter()
        .map(|(u, w)| u2_row_value(u, w))
        .collect();
    if cli.json {
        for r in rows {
            writeln!(io.stdout, "{r}")?;
        }
    } else {
        writeln!(io.stdout, "{}", serde_json::to_string_pretty(&rows)?)?;
    }
    Ok(EXIT_OK)
}
