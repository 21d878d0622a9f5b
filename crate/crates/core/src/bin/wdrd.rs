//! Command-line front end: generate example digraphs, compute attached
//! schemes, and run the polynomial / classification checkers.
//!
//! Exit status 0 covers every computed verdict, including violations;
//! nonzero is reserved for usage, IO and parse faults.

use std::fs;
use std::io::Read as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use wdrd::attached::{attached_scheme, AttachedOutcome};
use wdrd::classify::{check_lemmas, enumerate_valid_unions, verify_theorem, DEFAULT_MAX_CLASSES};
use wdrd::digraph::{Digraph, FiberKind};
use wdrd::families::theorem_menu;
use wdrd::io::{
    parse_digraph, parse_scheme, serialize_attached, serialize_digraph, serialize_lemma_report,
    serialize_menu, serialize_profile, serialize_report, serialize_wdrd_violation,
};
use wdrd::ppoly::{
    find_p_poly_orderings, is_p_polynomial, long_type_structure, matrix_oracle, LongTypeOutcome,
    PPolyProfile,
};
use wdrd::scheme::{build_scheme, check_consistency, is_commutative, AssociationScheme};

#[derive(Parser)]
#[command(name = "wdrd", about = "Weakly distance-regular digraph toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Input file; stdin when omitted.
    #[arg(short, long, global = true)]
    input: Option<String>,
    /// Output file; stdout when omitted.
    #[arg(short, long, global = true)]
    output: Option<String>,
    /// Comma-separated class ordering, e.g. 1,2,3. Discovered when omitted.
    #[arg(long, global = true)]
    ordering: Option<String>,
    /// Worker threads for the union enumeration.
    #[arg(long, global = true)]
    jobs: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Writes an example digraph.
    Generate {
        #[command(subcommand)]
        family: Family,
    },
    /// Computes the attached scheme of a digraph, or the violation.
    Attached,
    /// Validates the scheme axioms on a relation partition file.
    CheckScheme,
    /// Decides whether an ordering is P-polynomial, both routes.
    CheckPpoly,
    /// Enumerates all relation unions that stay weakly distance-regular.
    EnumerateUnions {
        #[arg(long, default_value_t = DEFAULT_MAX_CLASSES)]
        max_d: usize,
    },
    /// Compares the enumeration against the predicted menu.
    VerifyTheorem {
        #[arg(long, default_value_t = DEFAULT_MAX_CLASSES)]
        max_d: usize,
    },
    /// Runs the intersection-number inequality checks.
    CheckLemmas,
}

#[derive(Subcommand)]
enum Family {
    /// Directed cycle on n vertices.
    Cycle { n: usize },
    /// Lexicographic product of the input digraph by a fiber on m vertices.
    Lexprod { m: usize, fiber: FiberKind },
}

fn read_input(path: &Option<String>) -> Result<String, String> {
    match path.as_deref() {
        None | Some("-") => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| format!("stdin: {e}"))?;
            Ok(buf)
        }
        Some(p) => fs::read_to_string(p).map_err(|e| format!("{p}: {e}")),
    }
}

fn write_output(path: &Option<String>, text: &str) -> Result<(), String> {
    match path.as_deref() {
        None | Some("-") => {
            print!("{text}");
            Ok(())
        }
        Some(p) => fs::write(p, text).map_err(|e| format!("{p}: {e}")),
    }
}

fn parse_ordering(text: &str) -> Result<Vec<usize>, String> {
    text.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| format!("bad ordering entry '{t}'"))
        })
        .collect()
}

fn load_scheme(input: &Option<String>) -> Result<AssociationScheme, String> {
    let text = read_input(input)?;
    let partition = parse_scheme(&text).map_err(|e| e.to_string())?;
    build_scheme(&partition).map_err(|v| format!("input is not an association scheme: {v:?}"))
}

/// Uses the given ordering, or the first discovered one.
fn resolve_ordering(
    s: &AssociationScheme,
    ordering: &Option<String>,
) -> Result<Vec<usize>, String> {
    match ordering {
        Some(text) => parse_ordering(text),
        None => {
            let search = find_p_poly_orderings(s);
            search
                .orderings
                .first()
                .cloned()
                .ok_or_else(|| "no ordering found; pass --ordering".to_string())
        }
    }
}

fn resolve_profile(
    s: &AssociationScheme,
    ordering: &Option<String>,
) -> Result<PPolyProfile, String> {
    let o = resolve_ordering(s, ordering)?;
    is_p_polynomial(s, &o).map_err(|r| format!("ordering is not accepted: {r}"))
}

fn run(cli: &Cli) -> Result<String, String> {
    match &cli.command {
        Command::Generate { family } => {
            let g = match family {
                Family::Cycle { n } => Digraph::directed_cycle(*n).map_err(|e| e.to_string())?,
                Family::Lexprod { m, fiber } => {
                    let base = parse_digraph(&read_input(&cli.input)?).map_err(|e| e.to_string())?;
                    base.lex_product(*m, *fiber).map_err(|e| e.to_string())?
                }
            };
            Ok(serialize_digraph(&g))
        }
        Command::Attached => {
            let g = parse_digraph(&read_input(&cli.input)?).map_err(|e| e.to_string())?;
            match attached_scheme(&g).map_err(|e| e.to_string())? {
                AttachedOutcome::Scheme(a) => Ok(serialize_attached(&a)),
                AttachedOutcome::Violation(v) => Ok(serialize_wdrd_violation(&v)),
            }
        }
        Command::CheckScheme => {
            let text = read_input(&cli.input)?;
            let partition = parse_scheme(&text).map_err(|e| e.to_string())?;
            match build_scheme(&partition) {
                Ok(s) => {
                    let consistency = check_consistency(&s);
                    let mut out = format!("scheme ok: n={} d={}\n", s.n(), s.d());
                    let k: Vec<String> = (0..=s.d()).map(|i| s.k(i).to_string()).collect();
                    out.push_str(&format!("valencies: {}\n", k.join(",")));
                    out.push_str(&format!("consistency: {}\n", if consistency.ok() { "ok" } else { "FAILED" }));
                    out.push_str(&format!("commutative: {}\n", is_commutative(&s)));
                    Ok(out)
                }
                Err(v) => Ok(format!("not an association scheme\n{v:?}\n")),
            }
        }
        Command::CheckPpoly => {
            let s = load_scheme(&cli.input)?;
            let o = resolve_ordering(&s, &cli.ordering)?;
            let tensor_route = is_p_polynomial(&s, &o);
            let oracle_route = matrix_oracle(&s, &o);
            if tensor_route.is_ok() != oracle_route.accepted() {
                return Err(format!(
                    "internal: routes disagree on ordering {o:?}: {tensor_route:?} vs oracle"
                ));
            }
            match tensor_route {
                Ok(profile) => {
                    let mut out = String::from("p_polynomial: true\n");
                    out.push_str(&serialize_profile(&profile));
                    if let LongTypeOutcome::Long(structure) =
                        long_type_structure(&s, &profile).map_err(|e| e.to_string())?
                    {
                        out.push_str(&format!("fiber_size: {}\n", structure.fiber_size));
                        out.push_str(&format!(
                            "quotient_girth: {}\n",
                            structure.quotient_profile.girth
                        ));
                    }
                    out.push_str("menu:\n");
                    out.push_str(&serialize_menu(&theorem_menu(&profile)));
                    Ok(out)
                }
                Err(r) => Ok(format!("p_polynomial: false\nreason: {r}\n")),
            }
        }
        Command::EnumerateUnions { max_d } => {
            let s = load_scheme(&cli.input)?;
            let o = resolve_ordering(&s, &cli.ordering)?;
            let out = enumerate_valid_unions(&s, &o, *max_d).map_err(|e| e.to_string())?;
            let mut text = String::from("FOUND\n");
            for u in &out.valid {
                let ps: Vec<String> = u.iter().map(usize::to_string).collect();
                text.push_str(&format!("positions={}\n", ps.join(",")));
            }
            text.push_str("REJECTIONS\n");
            for (u, reason) in &out.rejections {
                let ps: Vec<String> = u.iter().map(usize::to_string).collect();
                text.push_str(&format!("positions={} reason={}\n", ps.join(","), reason.as_str()));
            }
            Ok(text)
        }
        Command::VerifyTheorem { max_d } => {
            let s = load_scheme(&cli.input)?;
            let profile = resolve_profile(&s, &cli.ordering)?;
            let report = verify_theorem(&s, &profile, *max_d).map_err(|e| e.to_string())?;
            Ok(serialize_report(&report))
        }
        Command::CheckLemmas => {
            let s = load_scheme(&cli.input)?;
            let profile = resolve_profile(&s, &cli.ordering)?;
            Ok(serialize_lemma_report(&check_lemmas(&s, &profile)))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: {e}");
            return ExitCode::FAILURE;
        }
    }
    match run(&cli) {
        Ok(text) => match write_output(&cli.output, &text) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::FAILURE
            }
        },
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
