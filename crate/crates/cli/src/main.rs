use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use liecyclic_cli::commands::{self, side_of, CohomologyRequest, UgRequest};
use liecyclic_cli::report::Report;
use liecyclic_cli::workspace::{example, explicit_form, parse_workspace, serialize_workspace, Coefficients, LieSource, WorkspaceSpec};
use liecyclic_core::enveloping::suite::SuiteConfig;

const USAGE_ERROR: u8 = 2;

#[derive(Parser, Debug)]
#[command(name = "liecyclic", version, about = "Exact SAYD coefficients, mixed complexes and Hopf-cyclic checks for Lie algebras")]
struct Cli {
    /// Also write the report as JSON to this path.
    #[arg(long, global = true, value_name = "PATH")]
    report: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Source {
    /// Workspace file, or an example `lie:coefficients[:arg]` such as `sl2:weil:2`.
    workspace: String,
}

#[derive(Args, Debug)]
struct SideFlags {
    /// Chain side `Λg ⊗ V` (default).
    #[arg(long, conflicts_with = "cochain")]
    chain: bool,
    /// Cochain side `Λg* ⊗ V`.
    #[arg(long)]
    cochain: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Module, comodule, AYD and stability verdicts.
    Check(Source),
    /// Solve the linear AYD (+ stability) system for the action in the workspace.
    SolveSayd {
        #[command(flatten)]
        source: Source,
        /// Drop the stability equations.
        #[arg(long)]
        ayd_only: bool,
    },
    /// CE homology, cyclic and periodic dimensions; all three by default.
    Cohomology {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        ce: bool,
        #[arg(long)]
        hc: bool,
        #[arg(long)]
        hp: bool,
        #[command(flatten)]
        side: SideFlags,
        /// Highest cyclic degree (default 2N+6).
        #[arg(long)]
        max_degree: Option<usize>,
    },
    /// Periodic dimensions only.
    Hp {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        side: SideFlags,
    },
    /// Poincaré duality squares and mirrored Betti tables.
    Duality(Source),
    /// Emit truncated Weil coefficients as an explicit workspace.
    Weil {
        /// Registry name of the Lie algebra.
        #[arg(long, default_value = "sl2")]
        lie: String,
        /// Cap in Weil grading (θ has degree 2).
        #[arg(long)]
        cap: usize,
        /// Write the workspace here instead of stdout.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Seeded checks of the cocyclic module on U(g); every pass by default.
    UgVerify {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        simplicial: bool,
        #[arg(long)]
        cyclic: bool,
        /// b² = B² = bB + Bb = 0.
        #[arg(long = "bB")]
        b_b: bool,
        #[arg(long)]
        filtration: bool,
        #[arg(long)]
        antisym: bool,
        /// Overrides the workspace seed.
        #[arg(long)]
        seed: Option<u64>,
        /// Random tensors per level.
        #[arg(long, default_value_t = 20)]
        samples: usize,
        #[arg(long, default_value_t = 2)]
        max_level: usize,
    },
}

fn load(arg: &str) -> Result<WorkspaceSpec, String> {
    let path = Path::new(arg);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{arg}: {e}"))?;
        parse_workspace(&text).map_err(|d| format!("{arg}:{d}"))
    } else if arg.contains(':') {
        example(arg).map_err(|d| format!("{arg}: {} {}", d.code.code(), d.message))
    } else {
        Err(format!("{arg}: no such workspace file"))
    }
}

fn run(cli: Cli) -> Result<(Report, Option<String>), String> {
    let single = |source: &Source, name: &str, f: &dyn Fn(&WorkspaceSpec, &mut Report)| -> Result<Report, String> {
        let spec = load(&source.workspace)?;
        let mut r = Report::new(name, &source.workspace, spec.seed);
        f(&spec, &mut r);
        Ok(r)
    };
    let report = match cli.command {
        Command::Check(s) => single(&s, "check", &commands::check)?,
        Command::SolveSayd { source, ayd_only } => single(&source, "solve-sayd", &|spec, r| commands::solve_sayd(spec, ayd_only, r))?,
        Command::Cohomology { source, ce, hc, hp, side, max_degree } => {
            let all = !(ce || hc || hp);
            let req = CohomologyRequest { ce: ce || all, hc: hc || all, hp: hp || all, side: side_of(side.cochain), max_degree };
            single(&source, "cohomology", &|spec, r| commands::cohomology(spec, req, r))?
        }
        Command::Hp { source, side } => {
            let req = CohomologyRequest { ce: false, hc: false, hp: true, side: side_of(side.cochain), max_degree: None };
            single(&source, "hp", &|spec, r| commands::cohomology(spec, req, r))?
        }
        Command::Duality(s) => single(&s, "duality", &commands::duality)?,
        Command::Weil { lie, cap, output } => {
            let spec = WorkspaceSpec::new(LieSource::Named(lie.clone()), Coefficients::Weil(cap))?;
            let text = serialize_workspace(&explicit_form(&spec));
            let mut r = Report::new("weil", &format!("{lie}:weil:{cap}"), spec.seed);
            commands::weil_summary(&spec.sayd(), &mut r);
            return match output {
                Some(path) => {
                    std::fs::write(&path, &text).map_err(|e| format!("{}: {e}", path.display()))?;
                    r.value("written", path.display().to_string());
                    Ok((r, None))
                }
                None => Ok((r, Some(text))),
            };
        }
        Command::UgVerify { source, simplicial, cyclic, b_b, filtration, antisym, seed, samples, max_level } => {
            let spec = load(&source.workspace)?;
            let seed = seed.unwrap_or(spec.seed);
            let all = !(simplicial || cyclic || b_b || filtration || antisym);
            let req = UgRequest {
                simplicial: simplicial || all,
                cyclic: cyclic || all,
                b_b: b_b || all,
                filtration: filtration || all,
                antisym: antisym || all,
                all,
                config: SuiteConfig { seed, samples, max_level },
            };
            let mut r = Report::new("ug-verify", &source.workspace, seed);
            commands::ug_verify(&spec, req, &mut r);
            r
        }
    };
    Ok((report, None))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report_path = cli.report.clone();
    let (report, document) = match run(cli) {
        Ok(x) => x,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(USAGE_ERROR);
        }
    };
    match document {
        // the document alone goes to stdout so it can be piped into a file
        Some(doc) => {
            print!("{doc}");
            eprint!("{}", report.human());
        }
        None => print!("{}", report.human()),
    }
    if let Some(path) = report_path {
        if let Err(e) = std::fs::write(&path, report.json()) {
            eprintln!("error: {}: {e}", path.display());
            return ExitCode::from(USAGE_ERROR);
        }
    }
    ExitCode::from(report.exit_code())
}
