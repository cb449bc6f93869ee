//! Thin command line front end: linear extensions, enumerators, weak order
//! intervals, verification suites, and poset export.
//!
//! Exit codes: `0` on success, `1` when a verification or certification
//! check fails, `2` on usage, parse, or input errors.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use bnposet::check::{run_suite, SUITE_NAMES};
use bnposet::io::{module_to_dot, poset_from_json, poset_to_dot, poset_to_json};
use bnposet::module::{module_b_poset, wbim, wbim_decompose};
use bnposet::perm::{interval_weak_r, SignedPerm};
use bnposet::poset::BnPoset;
use bnposet::Error;

#[derive(Parser)]
#[command(
    name = "bnposet",
    version,
    about = "Signed permutations, B_n posets, type B quasisymmetric functions, and 0-Hecke modules"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// List the type B linear extensions of a poset given as JSON.
    Extensions {
        /// Path to the poset JSON file.
        #[arg(long)]
        poset: PathBuf,
        /// Output format: `text` or `json`.
        #[arg(long, default_value = "text")]
        format: String,
        /// Write the output here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the enumerator of a poset.
    Kbp {
        /// Path to the poset JSON file.
        #[arg(long)]
        poset: PathBuf,
        /// Basis: `fundamental` or `monomial`.
        #[arg(long, default_value = "fundamental")]
        basis: String,
        /// Also print the truncated expansion in `x_0..x_V`.
        #[arg(long)]
        trunc: Option<usize>,
        /// Write the output here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Enumerate a right weak order interval and decompose its module.
    Interval {
        /// Lower endpoint window, e.g. `[2,-1,3]`.
        #[arg(long)]
        from: String,
        /// Upper endpoint window.
        #[arg(long)]
        to: String,
        /// Output format: `text` or `json`.
        #[arg(long, default_value = "text")]
        format: String,
        /// Write the output here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run verification suites.
    Check {
        /// Suite name (see `--suite list`) or `all`.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Rank bound.
        #[arg(long, default_value_t = 2)]
        n: usize,
        /// Sample budget for randomized pools.
        #[arg(long, default_value_t = 25)]
        samples: usize,
        /// Random seed.
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
    /// Export a poset as DOT or normalized JSON.
    Export {
        /// Path to the poset JSON file.
        #[arg(long)]
        poset: PathBuf,
        /// Output format: `dot` or `json`.
        #[arg(long, default_value = "dot")]
        format: String,
        /// Export the action quiver of the poset module instead of the
        /// Hasse diagram (DOT only).
        #[arg(long)]
        quiver: bool,
        /// Write the output here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn read_poset(path: &PathBuf) -> Result<BnPoset, Error> {
    let text =
        fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {}", path.display(), e)))?;
    poset_from_json(&text)
}

fn emit(out: &Option<PathBuf>, content: &str) -> Result<(), Error> {
    match out {
        Some(path) => {
            fs::write(path, content).map_err(|e| Error::Parse(format!("{}: {}", path.display(), e)))
        }
        None => {
            print!("{}", content);
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<(), Error> {
    match cli.cmd {
        Cmd::Extensions { poset, format, out } => {
            let p = read_poset(&poset)?;
            let exts = p.extensions();
            let content = match format.as_str() {
                "text" => {
                    let mut s = String::new();
                    for w in &exts {
                        s.push_str(&format!("{}\n", w));
                    }
                    s
                }
                "json" => {
                    let windows: Vec<Vec<i32>> = exts.iter().map(|w| w.window().to_vec()).collect();
                    format!(
                        "{}\n",
                        serde_json::to_string(&windows).expect("serializable")
                    )
                }
                other => return Err(Error::Unsupported(format!("unknown format `{}`", other))),
            };
            emit(&out, &content)
        }
        Cmd::Kbp {
            poset,
            basis,
            trunc,
            out,
        } => {
            let p = read_poset(&poset)?;
            let f = p.kbp();
            let value = match basis.as_str() {
                "fundamental" => f,
                "monomial" => f.to_monomial(),
                other => return Err(Error::Unsupported(format!("unknown basis `{}`", other))),
            };
            let mut content = format!("{}\n", value);
            if let Some(v) = trunc {
                content.push_str(&format!("{}\n", value.expand(v)));
            }
            emit(&out, &content)
        }
        Cmd::Interval {
            from,
            to,
            format,
            out,
        } => {
            let lo: SignedPerm = from.parse()?;
            let hi: SignedPerm = to.parse()?;
            let elements = interval_weak_r(&lo, &hi)?;
            let module = wbim(&lo, &hi)?;
            let simples = wbim_decompose(&lo, &hi)?;
            let content = match format.as_str() {
                "text" => {
                    let mut s = format!(
                        "interval [{}, {}]: {} elements, module dimension {}\n",
                        lo,
                        hi,
                        elements.len(),
                        module.dim()
                    );
                    for w in &elements {
                        s.push_str(&format!("{}\n", w));
                    }
                    s.push_str("simples:\n");
                    for c in &simples {
                        s.push_str(&format!("F^B[{}]\n", c));
                    }
                    s
                }
                "json" => {
                    let windows: Vec<Vec<i32>> =
                        elements.iter().map(|w| w.window().to_vec()).collect();
                    let comps: Vec<String> = simples.iter().map(|c| format!("{}", c)).collect();
                    format!(
                        "{}\n",
                        serde_json::json!({
                            "from": format!("{}", lo),
                            "to": format!("{}", hi),
                            "elements": windows,
                            "simples": comps,
                        })
                    )
                }
                other => return Err(Error::Unsupported(format!("unknown format `{}`", other))),
            };
            emit(&out, &content)
        }
        Cmd::Check {
            suite,
            n,
            samples,
            seed,
        } => {
            let names: Vec<&str> = if suite == "all" {
                SUITE_NAMES.to_vec()
            } else if suite == "list" {
                for name in SUITE_NAMES {
                    println!("{}", name);
                }
                return Ok(());
            } else {
                vec![SUITE_NAMES
                    .iter()
                    .copied()
                    .find(|s| *s == suite)
                    .ok_or_else(|| Error::Unsupported(format!("unknown suite `{}`", suite)))?]
            };
            for name in names {
                // Exhaustive grouping only exists at rank <= 2.
                let n_eff = if name == "distinguished" && suite == "all" {
                    n.min(2)
                } else {
                    n
                };
                let report = run_suite(name, n_eff, samples, seed)?;
                println!(
                    "PASS {} ({} checks; {})",
                    report.name, report.cases, report.detail
                );
            }
            Ok(())
        }
        Cmd::Export {
            poset,
            format,
            quiver,
            out,
        } => {
            let p = read_poset(&poset)?;
            let content = match (format.as_str(), quiver) {
                ("dot", false) => poset_to_dot(&p),
                ("dot", true) => module_to_dot(&module_b_poset(&p)),
                ("json", false) => format!("{}\n", poset_to_json(&p)),
                ("json", true) => {
                    return Err(Error::Unsupported(
                        "quiver export is only available as DOT".into(),
                    ))
                }
                (other, _) => {
                    return Err(Error::Unsupported(format!("unknown format `{}`", other)))
                }
            };
            emit(&out, &content)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e);
            match e {
                Error::RelationFailure(_)
                | Error::NotIsomorphic(_)
                | Error::Inconclusive(_)
                | Error::NotRegular(..)
                | Error::NotDistinguished(..) => ExitCode::from(1),
                _ => ExitCode::from(2),
            }
        }
    }
}
