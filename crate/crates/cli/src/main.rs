//! Command-line surface for constructing LCD BCH codes of length
//! (q^m + 1)/λ over GF(q) and re-checking the published parameter table.

mod golden;
mod report;

use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use lcdbch::bch::{self, ClosedDim, ReportOptions};
use lcdbch::cosets::{self, CosetParams};
use lcdbch::wdist;

use golden::{Status, VerifyOptions};
use report::ReportRecord;

#[derive(Parser)]
#[command(name = "lcdbch", version, about = "LCD BCH codes of length (q^m+1)/lambda over GF(q)")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Emit CSV instead of text.
    #[arg(long, global = true, conflicts_with = "json")]
    csv: bool,
    /// Deterministic output: omit timing fields.
    #[arg(long, global = true)]
    stable: bool,
    /// Budget for sieves (elements) and exact distance work (codewords).
    #[arg(long, global = true)]
    budget: Option<u64>,
    /// Raise the codeword budget to 5*10^7 to cover the 7^9 enumeration.
    #[arg(long, global = true)]
    long: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Cyclotomic cosets modulo n = (q^m+1)/lambda: one coset, all leaders,
    /// or the largest few leaders.
    Cosets {
        #[arg(short)]
        q: u64,
        #[arg(short)]
        m: u32,
        #[arg(long, default_value_t = 1)]
        lambda: u64,
        /// Print the coset of this residue.
        #[arg(short)]
        s: Option<u64>,
        /// Print every coset leader with its coset size.
        #[arg(long)]
        leaders: bool,
        /// Print the k largest coset leaders.
        #[arg(long, value_name = "K")]
        largest: Option<usize>,
    },
    /// Construct one code and report its parameters.
    Code {
        #[arg(short)]
        q: u64,
        #[arg(short)]
        m: u32,
        #[arg(long, default_value_t = 1)]
        lambda: u64,
        /// Designed distance of the constructed code.
        #[arg(long)]
        delta_prime: u64,
        #[arg(short, default_value_t = 1)]
        b: u8,
        /// Compute the minimum distance (exactly if the budget allows).
        #[arg(long)]
        distance: bool,
        /// Skip the generator polynomial.
        #[arg(long)]
        no_generator: bool,
    },
    /// Closed-form i-th largest coset leader, optionally sieve-checked.
    Delta {
        #[arg(short)]
        q: u64,
        #[arg(short)]
        m: u32,
        #[arg(long, default_value_t = 1)]
        lambda: u64,
        #[arg(short)]
        i: u64,
        /// Cross-check the value against the sieve.
        #[arg(long)]
        check: bool,
    },
    /// Dimension from cosets, with the closed form when covered.
    Dim {
        #[arg(short)]
        q: u64,
        #[arg(short)]
        m: u32,
        #[arg(long, default_value_t = 1)]
        lambda: u64,
        #[arg(long)]
        delta_prime: u64,
        #[arg(short, default_value_t = 1)]
        b: u8,
    },
    /// Minimum distance of one code under the codeword budget.
    Distance {
        #[arg(short)]
        q: u64,
        #[arg(short)]
        m: u32,
        #[arg(long, default_value_t = 1)]
        lambda: u64,
        #[arg(long)]
        delta_prime: u64,
        #[arg(short, default_value_t = 1)]
        b: u8,
    },
    /// Re-check the shipped golden parameter table and the leader suites.
    #[command(name = "verify-paper")]
    VerifyPaper {
        /// Load the golden table from a file instead of the embedded copy.
        #[arg(long, value_name = "PATH")]
        golden: Option<std::path::PathBuf>,
    },
}

fn sieve_budget(cli: &Cli) -> u64 {
    cli.budget.unwrap_or(cosets::DEFAULT_SIEVE_BUDGET)
}

fn codeword_budget(cli: &Cli) -> u128 {
    let base = cli.budget.map_or(wdist::DEFAULT_CODEWORD_BUDGET, u128::from);
    if cli.long {
        base.max(wdist::LONG_CODEWORD_BUDGET)
    } else {
        base
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode, lcdbch::Error> {
    match &cli.cmd {
        Cmd::Cosets { q, m, lambda, s, leaders, largest } => {
            let params = CosetParams::new(*q, *m, *lambda)?;
            if let Some(s) = s {
                let c = params.coset(*s)?;
                if cli.json {
                    println!(
                        "{}",
                        serde_json::json!({
                            "n": params.n, "s": s, "leader": c.leader(),
                            "size": c.size(), "elements": c.elements(),
                        })
                    );
                } else if cli.csv {
                    println!("n,s,leader,size,elements");
                    println!(
                        "{},{},{},{},\"{}\"",
                        params.n,
                        s,
                        c.leader(),
                        c.size(),
                        c.elements().iter().map(u64::to_string).collect::<Vec<_>>().join(" ")
                    );
                } else {
                    println!(
                        "coset of {} modulo {}: {{{}}} (leader {}, size {})",
                        s,
                        params.n,
                        c.elements().iter().map(u64::to_string).collect::<Vec<_>>().join(", "),
                        c.leader(),
                        c.size()
                    );
                }
                return Ok(ExitCode::SUCCESS);
            }
            if *leaders {
                let all = params.all_leaders(sieve_budget(cli))?;
                print_leader_list(cli, params.n, &all);
                return Ok(ExitCode::SUCCESS);
            }
            if let Some(k) = largest {
                let top = params.largest_leaders(*k, sieve_budget(cli))?;
                print_leader_list(cli, params.n, &top);
                return Ok(ExitCode::SUCCESS);
            }
            eprintln!("error: choose one of -s <S>, --leaders, --largest <K>");
            Ok(ExitCode::from(2))
        }
        Cmd::Code { q, m, lambda, delta_prime, b, distance, no_generator } => {
            let params = CosetParams::new(*q, *m, *lambda)?;
            let t0 = Instant::now();
            let report = bch::build_report(
                params,
                *delta_prime,
                *b,
                ReportOptions {
                    distance_budget: distance.then(|| codeword_budget(cli)),
                    want_generator: !no_generator,
                    matrix_check_cap: 50_000_000,
                },
            )?;
            let elapsed = (!cli.stable).then(|| t0.elapsed().as_millis() as u64);
            let record = ReportRecord::from_report(&report, elapsed);
            if cli.json {
                println!("{}", serde_json::to_string(&record).unwrap());
            } else if cli.csv {
                println!("{}", ReportRecord::csv_header());
                println!("{}", record.csv_row());
            } else {
                println!("{}", record.summary());
                if let Some(k) = record.k_closed_form {
                    println!("closed-form dimension: {k}");
                }
                if let Some(g) = &record.generator_poly {
                    println!(
                        "generator: {}",
                        g.iter().map(u64::to_string).collect::<Vec<_>>().join(" ")
                    );
                }
                for w in &record.warnings {
                    println!("warning: {w}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Delta { q, m, lambda, i, check } => {
            let r = cosets::closed_delta(*q, *m, *lambda, *i)?;
            let checked = if *check {
                let params = CosetParams::new(*q, *m, *lambda)?;
                let top = params.largest_leaders(*i as usize, sieve_budget(cli))?;
                Some(top[*i as usize - 1] == (r.value, r.coset_size))
            } else {
                None
            };
            if cli.json {
                println!(
                    "{}",
                    serde_json::json!({
                        "q": q, "m": m, "lambda": lambda, "i": i,
                        "value": r.value, "coset_size": r.coset_size,
                        "source": r.source.to_string(),
                        "applicability": r.applicability,
                        "sieve_check": checked,
                    })
                );
            } else {
                println!("delta_{i} = {} (coset size {})", r.value, r.coset_size);
                println!("source: {} [{}]", r.source, r.applicability);
                if let Some(ok) = checked {
                    println!("sieve check: {}", if ok { "agrees" } else { "MISMATCH" });
                }
            }
            Ok(ExitCode::from(if checked == Some(false) { 1 } else { 0 }))
        }
        Cmd::Dim { q, m, lambda, delta_prime, b } => {
            let params = CosetParams::new(*q, *m, *lambda)?;
            let k = bch::dimension(params, *delta_prime, *b)?;
            let closed = bch::closed_dimension_for_code(*q, *m, *lambda, *delta_prime, *b)?;
            if cli.json {
                println!(
                    "{}",
                    serde_json::json!({
                        "q": q, "m": m, "lambda": lambda, "n": params.n,
                        "designed": delta_prime, "b": b,
                        "k": k, "k_closed_form": closed.value(),
                    })
                );
            } else {
                println!("[{}, {}] over GF({}) (designed {}, b = {})", params.n, k, q, delta_prime, b);
                match closed {
                    ClosedDim::Covered { k: ck, source } => {
                        println!(
                            "closed form: {ck} ({source}){}",
                            if ck == k { "" } else { "  ** DISAGREES with the coset count **" }
                        );
                    }
                    ClosedDim::NotCovered => println!("closed form: not covered"),
                }
            }
            let consistent = closed.value().is_none_or(|ck| ck == k);
            Ok(ExitCode::from(if consistent { 0 } else { 1 }))
        }
        Cmd::Distance { q, m, lambda, delta_prime, b } => {
            let params = CosetParams::new(*q, *m, *lambda)?;
            let d = wdist::min_distance(params, *delta_prime, *b, codeword_budget(cli))?;
            if cli.json {
                println!(
                    "{}",
                    serde_json::json!({
                        "q": q, "m": m, "lambda": lambda, "n": params.n,
                        "designed": delta_prime, "b": b,
                        "distance": { "value": d.value, "exact": d.exact, "method": d.method.as_str() },
                        "work": d.work as u64,
                    })
                );
            } else if d.exact {
                println!("d = {} ({}, {} codewords)", d.value, d.method.as_str(), d.work);
            } else {
                println!("d >= {} ({})", d.value, d.method.as_str());
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::VerifyPaper { golden: path } => {
            let text = match path {
                Some(p) => std::fs::read_to_string(p).map_err(|e| {
                    lcdbch::Error::Domain(format!("cannot read golden table {}: {e}", p.display()))
                })?,
                None => golden::EMBEDDED_TABLE.to_string(),
            };
            let cases = golden::parse_table(&text).map_err(lcdbch::Error::Domain)?;
            let opts = VerifyOptions {
                long: cli.long,
                stable: cli.stable,
                sieve_budget: sieve_budget(cli),
                codeword_budget: codeword_budget(cli),
            };
            let out = golden::run(&cases, &opts);
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&out).unwrap());
            } else if cli.csv {
                println!("id,status,{}", ReportRecord::csv_header());
                for c in &out.cases {
                    println!("{},{:?},{}", c.id, c.status, c.record.csv_row());
                }
                for c in &out.checks {
                    println!("{},{:?},\"{}\"", c.name, c.status, c.detail);
                }
            } else {
                for c in &out.cases {
                    let tag = match c.status {
                        Status::Pass => "PASS",
                        Status::Warn => "WARN",
                        Status::Fail => "FAIL",
                    };
                    let timing = c
                        .record
                        .elapsed_ms
                        .map_or(String::new(), |ms| format!("  ({ms} ms)"));
                    println!("{tag}  {:<9} {}{}", c.id, c.record.summary(), timing);
                    for d in &c.details {
                        println!("      {d}");
                    }
                }
                for c in &out.checks {
                    let tag = match c.status {
                        Status::Pass => "PASS",
                        Status::Warn => "WARN",
                        Status::Fail => "FAIL",
                    };
                    println!("{tag}  {:<9} {} -- {}", "check", c.name, c.detail);
                }
                println!("{}", if out.all_pass { "all checks passed" } else { "FAILURES PRESENT" });
            }
            Ok(ExitCode::from(if out.all_pass { 0 } else { 1 }))
        }
    }
}

fn print_leader_list(cli: &Cli, n: u64, list: &[(u64, u64)]) {
    if cli.json {
        let items: Vec<serde_json::Value> = list
            .iter()
            .map(|&(l, s)| serde_json::json!({"leader": l, "size": s}))
            .collect();
        println!("{}", serde_json::json!({"n": n, "leaders": items}));
    } else if cli.csv {
        println!("n,leader,size");
        for &(l, s) in list {
            println!("{n},{l},{s}");
        }
    } else {
        for &(l, s) in list {
            println!("{l} (size {s})");
        }
    }
}
