mod args;
mod commands;
mod manifest;

use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;
use serde_json::json;

use args::{Cli, Command};
use manifest::Inputs;

fn seed_of(command: &Command) -> Option<u64> {
    match command {
        Command::Construct(a) => a.seed,
        _ => None,
    }
}

/// Writes to stdout, ignoring a closed pipe.
fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes()).and_then(|_| out.flush());
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    let mut inputs = Inputs::default();
    let outcome = commands::run(&cli.command, &mut inputs);
    let args = serde_json::to_value(&cli.command).expect("arguments serialize");
    let manifest = inputs.into_manifest(cli.command.name(), args, seed_of(&cli.command), started);

    match outcome {
        Ok(out) => {
            if cli.json {
                let doc = json!({ "manifest": manifest, "ok": true, "result": out.result });
                emit(&(serde_json::to_string_pretty(&doc).expect("output serializes") + "\n"));
            } else {
                emit(&out.text);
            }
            ExitCode::from(if out.success { 0 } else { 1 })
        }
        Err(e) => {
            if cli.json {
                let doc = json!({ "manifest": manifest, "ok": false, "error": e.to_string() });
                emit(&(serde_json::to_string_pretty(&doc).expect("output serializes") + "\n"));
            }
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
