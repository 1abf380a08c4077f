use std::io::{self, BufWriter, Write};
use std::process::ExitCode;
use std::time::{Instant, SystemTime, UNIX_EPOCH};

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use planar_core::geometry::{hyperoval_scan, monomial_point_set, sb_coefficient_scan};
use planar_core::gf::{build_field_with_cap, DEFAULT_FIELD_CAP};
use planar_core::numtheory::prime_power;
use planar_core::planar::search_planar_capped;
use planar_core::report::IdentityReport;
use planar_core::{exceptional, verify};
use serde_json::json;

#[derive(Parser)]
#[command(name = "planar", version, about = "Planar monomials, Dickson identities and monomial hyperovals")]
struct Cli {
    /// Worker threads; 0 uses one per core.
    #[arg(long, global = true, default_value_t = 0)]
    parallel: usize,

    /// Largest field order any command may build.
    #[arg(long, global = true, default_value_t = DEFAULT_FIELD_CAP)]
    cap: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exhaustive planarity search over every odd prime power up to --max-q
    /// (one JSON report per line).
    SearchPlanar {
        #[arg(long)]
        max_q: u64,
    },
    /// Check the polynomial identities over their parameter grids (JSON lines).
    VerifyIdentities {
        /// Largest extension degree for the heuristic exceptionality scan.
        #[arg(long, default_value_t = exceptional::DEFAULT_K_MAX)]
        k_max: u32,
    },
    /// Test whether D(x^t) is a hyperoval in PG(2, 2^k).
    CheckHyperoval {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        t: u64,
    },
    /// Coefficients of x^(t-3) and x^(t-7) in F(x + 1/x) over GF(2), as CSV.
    SbScan {
        #[arg(long, default_value_t = 100)]
        t_max: u64,
    },
    /// Randomized odd-composition and linear-conjugation lemma suites plus the
    /// known counterexample (JSON lines).
    VerifyLemmas {
        #[arg(long, default_value_t = verify::DEFAULT_INSTANCES)]
        instances: usize,
        #[arg(long, default_value_t = verify::DEFAULT_SEED)]
        seed: u64,
    },
}

fn unix_seconds() -> u64 {
    SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0)
}

fn emit_json<T: serde::Serialize>(out: &mut impl Write, value: &T) -> Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn search_planar(max_q: u64, cap: u64, out: &mut impl Write) -> Result<bool> {
    if max_q > cap {
        bail!("--max-q {max_q} exceeds the field cap {cap}");
    }
    let mut clean = true;
    for q in 3..=max_q {
        let Some((p, r)) = prime_power(q).filter(|&(p, _)| p != 2) else {
            continue;
        };
        let field = build_field_with_cap(p, r, cap)?;
        let report = search_planar_capped(&field, cap)?.stamped(unix_seconds());
        clean &= report.mismatches.is_empty();
        emit_json(out, &report)?;
    }
    Ok(clean)
}

fn emit_reports(reports: &[IdentityReport], out: &mut impl Write) -> Result<bool> {
    for r in reports {
        emit_json(out, r)?;
    }
    Ok(reports.iter().all(IdentityReport::passed))
}

fn check_hyperoval(k: u32, t: u64, cap: u64, out: &mut impl Write) -> Result<bool> {
    if !(1..=8).contains(&k) {
        bail!("--k must lie in 1..=8, got {k}");
    }
    let field = build_field_with_cap(2, k, cap)?;
    let start = Instant::now();
    let scan = hyperoval_scan(&monomial_point_set(&field, t));
    let elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
    emit_json(
        out,
        &json!({
            "q": field.q(),
            "k": k,
            "t": t,
            "is_hyperoval": scan.is_hyperoval,
            "triples_examined": scan.triples_examined,
            "witness": scan.witness,
            "elapsed_ms": elapsed_ms,
        }),
    )?;
    Ok(true)
}

fn sb_scan(t_max: u64, out: &mut impl Write) -> Result<bool> {
    let rows = sb_coefficient_scan(t_max)?;
    writeln!(out, "t,c_t3,c_t7,power_of_two")?;
    for r in rows {
        writeln!(out, "{},{},{},{}", r.t, r.c_t3, r.c_t7, u8::from(r.power_of_two))?;
    }
    Ok(true)
}

fn run(cli: Cli) -> Result<bool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(cli.parallel)
        .build_global()
        .context("configuring the worker pool")?;
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let ok = match cli.command {
        Command::SearchPlanar { max_q } => search_planar(max_q, cli.cap, &mut out)?,
        Command::VerifyIdentities { k_max } => emit_reports(&verify::all_identities(k_max), &mut out)?,
        Command::CheckHyperoval { k, t } => check_hyperoval(k, t, cli.cap, &mut out)?,
        Command::SbScan { t_max } => sb_scan(t_max, &mut out)?,
        Command::VerifyLemmas { instances, seed } => {
            emit_reports(&verify::all_lemmas(instances, seed), &mut out)?
        }
    };
    out.flush()?;
    Ok(ok)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
