use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use nlfem::study::{convergence_csv, convergence_study, solution_csv, solve_problem, Problem};
use nlfem::verify::{self, Suite};
use nlfem::{load_mesh, save_mesh, CgOptions, Error, KernelFamily, KernelPreset, Mesh, QuadConfig};

#[derive(Parser)]
#[command(name = "nlfem", version, about = "Nonlocal diffusion finite elements on triangle meshes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write the n×n unit-square mesh.
    MeshGen {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Assemble and solve one model problem.
    Solve {
        #[arg(long)]
        mesh: PathBuf,
        /// `const`, `quadratic` or `poly:c0,c1,...`
        #[arg(long, default_value = "const")]
        kernel: KernelPreset,
        #[arg(long)]
        delta: f64,
        #[arg(long, default_value = "constant")]
        problem: Problem,
        /// Solution CSV.
        #[arg(long)]
        out: PathBuf,
        /// Matrix Market file for S = D + M.
        #[arg(long)]
        matrix_out: Option<PathBuf>,
        #[command(flatten)]
        quad: QuadArgs,
    },
    /// Solve on n = 4·2^ℓ unit squares with δ proportional to h.
    Convergence {
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
        levels: u64,
        #[arg(long, default_value_t = 2.0)]
        delta_ratio: f64,
        #[arg(long, default_value = "cosine")]
        problem: Problem,
        #[arg(long, default_value = "const")]
        kernel: KernelPreset,
        #[arg(long)]
        out: PathBuf,
        #[command(flatten)]
        quad: QuadArgs,
    },
    /// Run built-in property checks.
    Verify {
        #[arg(long, default_value = "all")]
        suite: Suite,
    },
}

#[derive(Args)]
struct QuadArgs {
    /// Gauss points per segment piece.
    #[arg(long, default_value_t = QuadConfig::default().edge_points)]
    edge_quad: usize,
    #[arg(long, default_value_t = QuadConfig::default().tri_degree)]
    tri_quad_degree: usize,
    /// Assembly threads (default: all cores).
    #[arg(long)]
    threads: Option<usize>,
    #[arg(long, short)]
    verbose: bool,
}

impl QuadArgs {
    fn config(&self) -> QuadConfig {
        QuadConfig { edge_points: self.edge_quad, tri_degree: self.tri_quad_degree, threads: self.threads }
    }

    fn cg(&self) -> CgOptions {
        CgOptions { verbose: self.verbose, ..CgOptions::default() }
    }
}

const USAGE: u8 = 2;
const SOLVER: u8 = 3;
const CONFIG: u8 = 4;

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::NotConverged { .. } | Error::NonSymmetric(_) | Error::ZeroDiagonal(_) => SOLVER,
        Error::Io(_) | Error::Parse { .. } | Error::UnknownKernel(_) | Error::UnknownProblem(_) => USAGE,
        _ => CONFIG,
    }
}

fn read_mesh(path: &Path) -> Result<Mesh, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Io(std::io::Error::new(e.kind(), format!("{}: {e}", path.display()))))?;
    load_mesh(&text)
}

fn run(cli: Cli) -> Result<(), Error> {
    match cli.command {
        Command::MeshGen { n, out } => {
            let mesh = Mesh::unit_square(n as usize)?;
            std::fs::write(&out, save_mesh(&mesh))?;
            println!("wrote {} ({} vertices, {} cells)", out.display(), mesh.vertices().len(), mesh.num_cells());
        }
        Command::Solve { mesh, kernel, delta, problem, out, matrix_out, quad } => {
            let mesh = read_mesh(&mesh)?;
            let kf = KernelFamily::new(&kernel.0, delta)?;
            let report = solve_problem(&mesh, &kf, problem, quad.config(), quad.cg())?;
            std::fs::write(&out, solution_csv(&mesh, &report.solution))?;
            if let Some(path) = matrix_out {
                std::fs::write(path, report.matrix.to_matrix_market())?;
            }
            if quad.verbose {
                eprintln!("assembly {:.3} s, {} CG iterations", report.assembly_seconds, report.cg_iterations);
            }
            println!("l2 {:.16e}", report.l2);
            println!("linf {:.16e}", report.linf);
        }
        Command::Convergence { levels, delta_ratio, problem, kernel, out, quad } => {
            let rows = convergence_study(levels as usize, delta_ratio, problem, &kernel.0, quad.config(), quad.cg(), |r| {
                println!("level {} n {} delta {:.4e} l2 {:.6e} linf {:.6e}", r.level, r.n, r.delta, r.l2, r.linf);
            })?;
            std::fs::write(&out, convergence_csv(&rows))?;
        }
        Command::Verify { suite } => {
            let ok = verify::run(suite, |c| println!("{c}"))?;
            if !ok {
                return Err(Error::VerificationFailed);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(USAGE) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if matches!(e, Error::VerificationFailed) { 1 } else { exit_code(&e) })
        }
    }
}
