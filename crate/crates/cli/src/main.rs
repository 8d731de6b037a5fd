//! `parkfn`: counting, enumeration, membership checks, bijection
//! transforms, table reproduction, verification sweeps, and OEIS b-file
//! export for interval/rational parking functions and their relatives.
//!
//! Exit codes: 0 success, 1 verification/consistency failure, 2 usage or
//! parse error, 3 enumeration cap exceeded.

use clap::{Parser, Subcommand};
use parkfn::arrange::{
    bpa_to_uirpf, fubini_to_pa, pa_to_fubini, uirpf_to_bpa, BarredPreferentialArrangement,
};
use parkfn::classify::{is_interval_pf, is_member, FamilyTag};
use parkfn::count::{applicable_methods, count_query, CountQuery, Method, DEFAULT_CAP};
use parkfn::count::{count_ell_ipf, count_nd_ell_fubini};
use parkfn::lattice::{dyck_to_prefs, prefs_to_dyck, DyckWord};
use parkfn::numbers::bounded_height_series;
use parkfn::oracle::{enumerate_family, verify, IDENTITIES};
use parkfn::tuple::{format_tuple, parse_tuple};
use parkfn::Error;
use serde::Deserialize;
use serde_json::json;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

#[derive(Parser)]
#[command(name = "parkfn", version, about = "Exact combinatorics of parking functions")]
struct Cli {
    /// Emit one JSON document instead of plain text.
    #[arg(long, global = true)]
    json: bool,
    /// TOML configuration file (currently: `cap = <max candidates>`).
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Count a family, by one method or by all applicable methods.
    Count {
        /// Family name: PF, ND_PF, IPF_PAIR, ELL_IPF, ND_ELL_IPF, FUBINI,
        /// ELL_FUBINI, ND_ELL_FUBINI, UIRPF.
        family: String,
        #[arg(short)]
        n: usize,
        /// Street length; defaults to n.
        #[arg(short)]
        m: Option<usize>,
        /// Displacement bound for the ELL_* and UIRPF-adjacent families.
        #[arg(short)]
        l: Option<usize>,
        /// closed_form, recursion, generating_function, bijection_image,
        /// oracle, or all. Default: the family's preferred method.
        #[arg(long)]
        method: Option<String>,
    },
    /// List every member of a family, one per line, lexicographically.
    Enumerate {
        family: String,
        #[arg(short)]
        n: usize,
        #[arg(short)]
        m: Option<usize>,
        #[arg(short)]
        l: Option<usize>,
    },
    /// Test membership of a tuple (or an interval pair) in a family.
    Check {
        family: String,
        /// The candidate tuple, e.g. "(3,1,1,3,4,5)".
        tuple: String,
        #[arg(short)]
        m: Option<usize>,
        #[arg(short)]
        l: Option<usize>,
        /// Tolerance vector for IPF_PAIR, e.g. "(3,6,8,1,4)".
        #[arg(long)]
        tolerance: Option<String>,
    },
    /// Apply a bijection: dyck-to-prefs, prefs-to-dyck, fub-to-pa,
    /// pa-to-fub, uirpf-to-bpa, bpa-to-uirpf.
    Map {
        transform: String,
        /// The object to transform, in its canonical serialization.
        input: String,
        #[arg(short)]
        n: Option<usize>,
        #[arg(short)]
        m: Option<usize>,
    },
    /// Reproduce a published table as CSV: table1 or table2.
    Table { id: String },
    /// Run the identity registry; exit 1 on any failure.
    Verify {
        /// Run a single identity by name instead of the default sweep.
        #[arg(long)]
        identity: Option<String>,
        /// Write the full machine-readable report to this path.
        #[arg(long, value_name = "PATH")]
        report: Option<PathBuf>,
        /// List the registered identity names and exit.
        #[arg(long)]
        list: bool,
    },
    /// Emit an OEIS b-file prefix ("n a(n)" lines) for a supported
    /// sequence: A000670, A080936, A365623, A000045, A000073, A000078,
    /// A001591, A000383, A122189.
    Oeis { sequence: String },
}

#[derive(Deserialize, Default)]
struct Config {
    cap: Option<u64>,
}

fn load_cap(path: Option<&PathBuf>) -> Result<u64, String> {
    let mut cap = DEFAULT_CAP;
    if let Some(p) = path {
        let text = std::fs::read_to_string(p).map_err(|e| format!("config {p:?}: {e}"))?;
        let parsed: Config = toml::from_str(&text).map_err(|e| format!("config {p:?}: {e}"))?;
        if let Some(c) = parsed.cap {
            cap = c;
        }
    }
    if let Ok(env_cap) = std::env::var("PARKFN_CAP") {
        cap = env_cap
            .parse()
            .map_err(|_| format!("PARKFN_CAP must be an integer, got {env_cap:?}"))?;
    }
    Ok(cap)
}

fn parse_family(
    name: &str,
    n: usize,
    m: Option<usize>,
    l: Option<usize>,
) -> Result<FamilyTag, String> {
    let m = m.unwrap_or(n);
    let need_l = || l.ok_or_else(|| format!("family {name} requires -l"));
    let tag = match name.to_uppercase().as_str() {
        "PF" => FamilyTag::Pf { n, m },
        "ND_PF" | "NDPF" => FamilyTag::NdPf { n, m },
        "IPF_PAIR" | "IPF" => FamilyTag::IpfPair { n, m },
        "ELL_IPF" => FamilyTag::EllIpf { n, m, l: need_l()? },
        "ND_ELL_IPF" => FamilyTag::NdEllIpf { n, m, l: need_l()? },
        "FUBINI" | "FR" => FamilyTag::Fubini { n },
        "ELL_FUBINI" => FamilyTag::EllFubini { n, l: need_l()? },
        "ND_ELL_FUBINI" => FamilyTag::NdEllFubini { n, l: need_l()? },
        "UIRPF" => FamilyTag::Uirpf { n, m },
        other => return Err(format!("unknown family {other:?}")),
    };
    tag.validate().map_err(|e| e.to_string())?;
    Ok(tag)
}

fn exit_for(e: &Error) -> ExitCode {
    match e {
        Error::ScaleExceeded { .. } => ExitCode::from(3),
        _ => ExitCode::from(2),
    }
}

fn usage(msg: String) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cap = match load_cap(cli.config.as_ref()) {
        Ok(c) => c,
        Err(msg) => return usage(msg),
    };
    let start = Instant::now();
    match run(&cli, cap, start) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_for(&e)
        }
    }
}

fn run(cli: &Cli, cap: u64, start: Instant) -> Result<ExitCode, Error> {
    match &cli.cmd {
        Cmd::Count {
            family,
            n,
            m,
            l,
            method,
        } => {
            let tag = match parse_family(family, *n, *m, *l) {
                Ok(t) => t,
                Err(msg) => return Ok(usage(msg)),
            };
            let methods = applicable_methods(&tag);
            let chosen: Vec<Method> = match method.as_deref() {
                None | Some("auto") => vec![methods[0]],
                Some("all") => methods.clone(),
                Some(name) => {
                    let m: Method = match name.parse() {
                        Ok(m) => m,
                        Err(e) => return Ok(usage(e.to_string())),
                    };
                    vec![m]
                }
            };
            let mut results = Vec::new();
            for m in &chosen {
                let value = count_query(&CountQuery { family: tag, method: *m }, cap)?;
                results.push((m.name(), value));
            }
            let agree = results.windows(2).all(|w| w[0].1 == w[1].1);
            if cli.json {
                println!(
                    "{}",
                    json!({
                        "query": {"family": tag.to_string(), "methods": results.iter().map(|r| r.0).collect::<Vec<_>>()},
                        "counts": results.iter().map(|r| r.1.to_string()).collect::<Vec<_>>(),
                        "agree": agree,
                        "elapsed_ms": start.elapsed().as_millis() as u64,
                    })
                );
            } else if results.len() == 1 {
                println!("{}", results[0].1);
            } else {
                for (name, value) in &results {
                    println!("{name} {value}");
                }
            }
            if !agree {
                eprintln!("error: methods disagree for {tag}");
                return Ok(ExitCode::from(1));
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Enumerate { family, n, m, l } => {
            let tag = match parse_family(family, *n, *m, *l) {
                Ok(t) => t,
                Err(msg) => return Ok(usage(msg)),
            };
            let members = enumerate_family(&tag, cap)?;
            if cli.json {
                println!(
                    "{}",
                    json!({
                        "query": {"family": tag.to_string()},
                        "count": members.len(),
                        "members": members.iter().map(|m| m.to_string()).collect::<Vec<_>>(),
                        "elapsed_ms": start.elapsed().as_millis() as u64,
                    })
                );
            } else {
                for member in &members {
                    println!("{member}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Check {
            family,
            tuple,
            m,
            l,
            tolerance,
        } => {
            let t = parse_tuple(tuple)?;
            let n = t.len();
            let tag = match parse_family(family, n, *m, *l) {
                Ok(t) => t,
                Err(msg) => return Ok(usage(msg)),
            };
            let verdict = match (&tag, tolerance) {
                (FamilyTag::IpfPair { m, .. }, Some(tol)) => {
                    let b = parse_tuple(tol)?;
                    is_interval_pf(&t, &b, *m)?
                }
                (FamilyTag::IpfPair { .. }, None) => {
                    return Ok(usage("IPF_PAIR needs --tolerance".into()))
                }
                (_, Some(_)) => {
                    return Ok(usage("--tolerance only applies to IPF_PAIR".into()))
                }
                (tag, None) => is_member(tag, &t)?,
            };
            if cli.json {
                println!(
                    "{}",
                    json!({
                        "query": {"family": tag.to_string(), "tuple": format_tuple(&t)},
                        "member": verdict,
                        "elapsed_ms": start.elapsed().as_millis() as u64,
                    })
                );
            } else {
                println!("{verdict}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Map {
            transform,
            input,
            n,
            m,
        } => {
            let need = |opt: Option<usize>, name: &str| {
                opt.ok_or_else(|| format!("transform {transform} requires -{name}"))
            };
            let result: Result<String, Error> = match transform.as_str() {
                "dyck-to-prefs" => {
                    let (n, m) = match (need(*n, "n"), need(*m, "m")) {
                        (Ok(n), Ok(m)) => (n, m),
                        (Err(msg), _) | (_, Err(msg)) => return Ok(usage(msg)),
                    };
                    DyckWord::parse(input, n, m).map(|w| format_tuple(&dyck_to_prefs(&w)))
                }
                "prefs-to-dyck" => {
                    let m = match need(*m, "m") {
                        Ok(m) => m,
                        Err(msg) => return Ok(usage(msg)),
                    };
                    parse_tuple(input)
                        .and_then(|p| prefs_to_dyck(&p, p.len(), m))
                        .map(|w| w.to_string())
                }
                "fub-to-pa" => parse_tuple(input)
                    .and_then(|t| fubini_to_pa(&t))
                    .map(|p| p.to_string()),
                "pa-to-fub" => BarredPreferentialArrangement::parse(input).and_then(|q| {
                    if q.bars() != 0 {
                        return Err(Error::MalformedArrangement(
                            "pa-to-fub input must not contain bars".into(),
                        ));
                    }
                    let blocks: Vec<Vec<usize>> = q
                        .items()
                        .iter()
                        .filter_map(|i| match i {
                            parkfn::arrange::BpaItem::Block(b) => Some(b.clone()),
                            parkfn::arrange::BpaItem::Bar => None,
                        })
                        .collect();
                    let pa = parkfn::arrange::PreferentialArrangement::new(blocks)?;
                    Ok(format_tuple(&pa_to_fubini(&pa)))
                }),
                "uirpf-to-bpa" => {
                    let m = match need(*m, "m") {
                        Ok(m) => m,
                        Err(msg) => return Ok(usage(msg)),
                    };
                    parse_tuple(input)
                        .and_then(|p| uirpf_to_bpa(&p, m))
                        .map(|q| q.to_string())
                }
                "bpa-to-uirpf" => BarredPreferentialArrangement::parse(input)
                    .map(|q| format_tuple(&bpa_to_uirpf(&q))),
                other => return Ok(usage(format!("unknown transform {other:?}"))),
            };
            let image = result?;
            if cli.json {
                println!(
                    "{}",
                    json!({
                        "query": {"transform": transform, "input": input},
                        "image": image,
                        "elapsed_ms": start.elapsed().as_millis() as u64,
                    })
                );
            } else {
                println!("{image}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Table { id } => {
            let csv = match id.as_str() {
                "table1" => table1_csv(),
                "table2" => table2_csv(),
                other => return Ok(usage(format!("unknown table {other:?}"))),
            };
            if cli.json {
                println!(
                    "{}",
                    json!({
                        "query": {"table": id},
                        "csv": csv,
                        "elapsed_ms": start.elapsed().as_millis() as u64,
                    })
                );
            } else {
                print!("{csv}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Verify {
            identity,
            report,
            list,
        } => {
            if *list {
                for name in IDENTITIES {
                    println!("{name}");
                }
                return Ok(ExitCode::SUCCESS);
            }
            let rep = verify(identity.as_deref(), cap)?;
            if let Some(path) = report {
                std::fs::write(path, serde_json::to_string_pretty(&rep).unwrap())
                    .map_err(|e| Error::MalformedInput(format!("writing {path:?}: {e}")))?;
            }
            if cli.json {
                println!("{}", serde_json::to_string(&rep).unwrap());
            } else {
                let mut current = "";
                let mut checks = 0usize;
                let mut fails = 0usize;
                let flush = |id: &str, checks: usize, fails: usize| {
                    if !id.is_empty() {
                        println!("{id}: {checks} checks, {fails} failures");
                    }
                };
                for r in &rep.records {
                    if r.identity != current {
                        flush(current, checks, fails);
                        current = &r.identity;
                        checks = 0;
                        fails = 0;
                    }
                    checks += 1;
                    if r.status == parkfn::oracle::Status::Fail {
                        fails += 1;
                        println!(
                            "FAIL {} [{}]: {} != {}",
                            r.identity, r.params, r.lhs, r.rhs
                        );
                    }
                }
                flush(current, checks, fails);
            }
            if rep.passed() {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(1))
            }
        }
        Cmd::Oeis { sequence } => {
            let lines = match oeis_lines(sequence) {
                Some(l) => l,
                None => return Ok(usage(format!("unsupported sequence {sequence:?}"))),
            };
            if cli.json {
                println!(
                    "{}",
                    json!({
                        "query": {"sequence": sequence},
                        "lines": lines,
                        "elapsed_ms": start.elapsed().as_millis() as u64,
                    })
                );
            } else {
                for line in &lines {
                    println!("{line}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn table1_csv() -> String {
    let mut out = String::from("l/n,1,2,3,4,5,6,7,8,9\n");
    for l in 0..=7u64 {
        out.push_str(&l.to_string());
        for n in 1..=9u64 {
            out.push(',');
            out.push_str(&count_ell_ipf(n, l).to_string());
        }
        out.push('\n');
    }
    out
}

fn table2_csv() -> String {
    let mut out = String::from("l/n,1,2,3,4,5,6,7,8,9,10,11\n");
    for l in 1..=6u64 {
        out.push_str(&l.to_string());
        for n in 1..=11u64 {
            out.push(',');
            out.push_str(&count_nd_ell_fubini(n, l).to_string());
        }
        out.push('\n');
    }
    out
}

fn oeis_lines(sequence: &str) -> Option<Vec<String>> {
    let bfile = |values: Vec<String>| {
        values
            .into_iter()
            .enumerate()
            .map(|(i, v)| format!("{} {v}", i + 1))
            .collect::<Vec<_>>()
    };
    let table2_row = |l: u64| {
        Some(bfile(
            (1..=11).map(|n| count_nd_ell_fubini(n, l).to_string()).collect(),
        ))
    };
    match sequence.to_uppercase().as_str() {
        // ordered Bell numbers: the l = 1 column of the square counts
        "A000670" => Some(bfile(
            (1..=9).map(|n| count_ell_ipf(n, 1).to_string()).collect(),
        )),
        // paths of semilength n and exact height k, triangle read by rows
        "A080936" => {
            let mut values = Vec::new();
            for n in 1..=8usize {
                for k in 1..=n as u64 {
                    let hi = bounded_height_series(k, n)[n].clone();
                    let lo = bounded_height_series(k - 1, n)[n].clone();
                    values.push((hi - lo).to_string());
                }
            }
            Some(bfile(values))
        }
        // the full square-count grid, read by rows
        "A365623" => {
            let mut values = Vec::new();
            for l in 0..=7u64 {
                for n in 1..=9u64 {
                    values.push(count_ell_ipf(n, l).to_string());
                }
            }
            Some(bfile(values))
        }
        "A000045" => table2_row(1),
        "A000073" => table2_row(2),
        "A000078" => table2_row(3),
        "A001591" => table2_row(4),
        "A000383" => table2_row(5),
        "A122189" => table2_row(6),
        _ => None,
    }
}
