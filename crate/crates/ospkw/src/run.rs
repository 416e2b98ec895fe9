//! Dispatch of a parsed request to the library.

use ospkw_core::atyp::{is_tame, shifted_standard};
use ospkw_core::blocks::{bottom_of_block, lambda_x_family};
use ospkw_core::characters::{kw_character_with, CharacterOptions, WeylSumStrategy};
use ospkw_core::{Algebra, Error, Family, HookPartition, Partition};
use serde_json::Value;

use crate::{json, text, verify};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Classify,
    Bottom,
    Character,
    BlockFamily,
    Verify,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum OutputFormat {
    #[default]
    Json,
    Text,
}

#[derive(Clone, Debug)]
pub struct Request {
    pub command: Command,
    /// `B:m:n` or `D:m:n`; optional only for `verify`.
    pub algebra: Option<String>,
    /// Comma-separated parts; empty for the trivial partition.
    pub partition: String,
    pub minus: bool,
    pub output: OutputFormat,
    pub strategy: WeylSumStrategy,
    pub max_rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Response {
    /// 0 on success, 1 for bad input, 2 for internal faults and failed
    /// verification.
    pub exit_code: u8,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    User(&'static str, String),
    Core(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

struct Payload {
    value: Value,
    text: Option<String>,
    exit_code: u8,
}

impl Payload {
    fn ok(value: Value) -> Self {
        Payload { value, text: None, exit_code: 0 }
    }
}

fn algebra(req: &Request) -> Result<Algebra, Failure> {
    let s = req.algebra.as_deref().ok_or_else(|| Failure::User("MissingArgument", "--algebra is required".into()))?;
    Ok(s.parse::<Algebra>()?)
}

fn partition(req: &Request, alg: &Algebra) -> Result<HookPartition, Failure> {
    let p: Partition = req.partition.parse()?;
    if req.minus && alg.family() == Family::B {
        return Err(Error::FamilyMismatch { expected: 'D' }.into());
    }
    Ok(HookPartition::for_algebra(p, alg)?)
}

fn options(req: &Request) -> CharacterOptions {
    CharacterOptions { strategy: req.strategy, parallel: true }
}

fn dispatch(req: &Request) -> Result<Payload, Failure> {
    match req.command {
        Command::Classify => {
            let alg = algebra(req)?;
            let lam = partition(req, &alg)?;
            Ok(Payload::ok(json::report(&alg, &lam, &is_tame(&lam, &alg, req.minus)?)))
        }
        Command::Bottom => {
            let alg = algebra(req)?;
            let lam = partition(req, &alg)?;
            if req.minus {
                return Err(Failure::User("UnsupportedFlag", "--minus is not accepted by bottom".into()));
            }
            Ok(Payload::ok(json::trace(&alg, &bottom_of_block(&lam, &alg)?)))
        }
        Command::Character => {
            let alg = algebra(req)?;
            let lam = partition(req, &alg)?;
            let cr = kw_character_with(&lam, &alg, req.minus, options(req))?;
            let mut value = serde_json::json!({ "algebra": alg.to_string(), "partition": lam.to_string() });
            if let (Some(head), Value::Object(body)) = (value.as_object_mut(), json::character(&cr)) {
                head.extend(body);
            }
            let rendered = text::polynomial(&cr.character);
            let mut shown = value.clone();
            shown["character"] = Value::String(rendered);
            Ok(Payload { text: Some(text::from_json(&shown)), value, exit_code: 0 })
        }
        Command::BlockFamily => {
            let alg = algebra(req)?;
            let lam = partition(req, &alg)?;
            if req.minus {
                return Err(Failure::User("UnsupportedFlag", "--minus is not accepted by block-family".into()));
            }
            let members: Vec<_> = lambda_x_family(&lam, &alg)?
                .into_iter()
                .map(|(x, p)| {
                    let w = shifted_standard(&p, &alg, false);
                    (x, p, w)
                })
                .collect();
            Ok(Payload::ok(json::family(&alg, &lam, &members)))
        }
        Command::Verify => {
            let algs = match &req.algebra {
                Some(_) => {
                    let alg = algebra(req)?;
                    if alg.m().max(alg.n()) > req.max_rank {
                        return Err(Failure::User(
                            "RankTooLarge",
                            format!("{alg} exceeds --max-rank {}", req.max_rank),
                        ));
                    }
                    vec![alg]
                }
                None => verify::algebras_up_to(req.max_rank),
            };
            let results: Vec<_> = algs.iter().map(|a| (*a, verify::verify_algebra(a, options(req)))).collect();
            let value = json::checks(&results);
            let passed = value["passed"] == Value::Bool(true);
            let mut lines = String::new();
            for (alg, checks) in &results {
                for c in checks {
                    let mark = if c.passed { "PASS" } else { "FAIL" };
                    lines.push_str(&format!("[{mark}] {alg} {}", c.name));
                    if !c.detail.is_empty() {
                        lines.push_str(&format!(": {}", c.detail));
                    }
                    lines.push('\n');
                }
            }
            Ok(Payload { value, text: Some(lines), exit_code: if passed { 0 } else { 2 } })
        }
    }
}

/// Runs a request and renders its output.
pub fn run(req: &Request) -> Response {
    match dispatch(req) {
        Ok(p) => {
            let stdout = match req.output {
                OutputFormat::Json => format!("{}\n", serde_json::to_string_pretty(&p.value).expect("serializable")),
                OutputFormat::Text => p.text.unwrap_or_else(|| text::from_json(&p.value)),
            };
            Response { exit_code: p.exit_code, stdout, stderr: String::new() }
        }
        Err(f) => {
            let (code, message, exit_code) = match f {
                Failure::User(code, message) => (code, message, 1),
                Failure::Core(e) => (e.code(), e.to_string(), if e.is_internal() { 2 } else { 1 }),
            };
            let stdout = match req.output {
                OutputFormat::Json => {
                    format!("{}\n", serde_json::to_string_pretty(&json::error(code, &message)).expect("serializable"))
                }
                OutputFormat::Text => String::new(),
            };
            Response { exit_code, stdout, stderr: format!("error[{code}]: {message}\n") }
        }
    }
}
