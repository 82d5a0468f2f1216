use std::path::PathBuf;
use std::process::ExitCode;

use atn::lattice::TriTorus;
use atn::report::{self, Inputs, Report};
use atn::tnu::Mode;
use atn::{Cochain, Error, FiniteGroup};
use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(name = "atn", version, about = "Exact checks for anomalous tensor-network symmetries")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run one verification suite.
    #[command(subcommand)]
    Verify(Suite),
    /// Solve the mixed 4-cocycle equation on a G-set.
    Classify {
        #[command(flatten)]
        src: Source,
        /// `trivial`, `transitive:h1,h2,...` or a G-set file.
        #[arg(long)]
        gset: String,
        #[arg(long)]
        modulus: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Every suite at its default inputs.
    ReportAll {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct Source {
    /// `Z<n>`, a product such as `Z2xZ2`, or a table file.
    #[arg(long)]
    group: String,
    /// `p0,p1` selecting the builtin ℤ₂×ℤ₂ cocycle.
    #[arg(long, conflicts_with = "cocycle")]
    builtin: Option<String>,
    /// `builtin:p0,p1`, `carry:p`, `zero[:L]` or a cochain file.
    #[arg(long)]
    cocycle: Option<String>,
}

impl Source {
    fn spec(&self) -> String {
        match (&self.builtin, &self.cocycle) {
            (Some(b), _) => format!("builtin:{b}"),
            (None, Some(c)) => c.clone(),
            (None, None) => "zero".to_string(),
        }
    }

    fn load(&self, level: usize) -> atn::Result<(Cochain, Inputs)> {
        let g = report::parse_group(&self.group)?;
        let spec = self.spec();
        let w = report::parse_cocycle(&g, level, &spec)?;
        let inputs = Inputs {
            group: Some(self.group.clone()),
            cocycle: Some(spec),
            modulus: Some(w.modulus()),
            ..Inputs::default()
        };
        Ok((w, inputs))
    }
}

#[derive(Subcommand)]
enum Suite {
    Cocycle {
        #[command(flatten)]
        src: Source,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    Cohomology {
        #[arg(long)]
        group: String,
        #[arg(long, default_value_t = 4)]
        degree: usize,
        /// Expected invariants, e.g. `2,2`.
        #[arg(long, value_delimiter = ',')]
        expect: Option<Vec<u64>>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    TripleLine {
        #[command(flatten)]
        src: Source,
        /// Accepted for symmetry with `tnu`; the suite is always exhaustive.
        #[arg(long)]
        exhaustive: bool,
        #[arg(long, default_value_t = 3)]
        ring_max: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    Tnu {
        #[command(flatten)]
        src: Source,
        #[arg(long, default_value = "2x2")]
        lattice: String,
        #[arg(long, conflicts_with = "samples")]
        exhaustive: bool,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    Spt2d {
        #[arg(long)]
        group: String,
        /// `carry:p`, `zero[:L]` or a 3-cochain file.
        #[arg(long)]
        cocycle3: String,
        #[arg(long, default_value = "2x2")]
        lattice: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    Spt3d {
        #[command(flatten)]
        src: Source,
        /// Also run the guarded global check on the 2×2×2 torus.
        #[arg(long)]
        global: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn run(cli: Cli) -> atn::Result<(Report, Option<PathBuf>)> {
    Ok(match cli.cmd {
        Cmd::Verify(suite) => match suite {
            Suite::Cocycle { src, out } => {
                let (w, i) = src.load(4)?;
                (report::cocycle_suite(&w, i)?, out)
            }
            Suite::Cohomology { group, degree, expect, out } => {
                let g = report::parse_group(&group)?;
                let i = Inputs {
                    group: Some(group),
                    ..Inputs::default()
                };
                (report::cohomology_suite(&g, degree, expect.as_deref(), i)?, out)
            }
            Suite::TripleLine { src, ring_max, out, .. } => {
                let (w, i) = src.load(4)?;
                (report::triple_line_suite(&w, ring_max, i)?, out)
            }
            Suite::Tnu { src, lattice, samples, seed, out, .. } => {
                let (w, mut i) = src.load(4)?;
                let (lx, ly) = report::parse_lattice(&lattice)?;
                let mode = match samples {
                    Some(count) => Mode::Sample { count, seed },
                    None => Mode::Exhaustive,
                };
                i.lattice = Some(lattice);
                i.seed = samples.map(|_| seed);
                (report::tnu_suite(&w, &TriTorus::new(lx, ly)?, mode, i)?, out)
            }
            Suite::Spt2d { group, cocycle3, lattice, out } => {
                let g = report::parse_group(&group)?;
                let w = report::parse_cocycle(&g, 3, &cocycle3)?;
                let (lx, ly) = report::parse_lattice(&lattice)?;
                let i = Inputs {
                    group: Some(group),
                    cocycle: Some(cocycle3),
                    lattice: Some(lattice),
                    modulus: Some(w.modulus()),
                    ..Inputs::default()
                };
                (report::spt2d_suite(&w, lx, ly, i)?, out)
            }
            Suite::Spt3d { src, global, out } => {
                let (w, i) = src.load(4)?;
                (report::spt3d_suite(&w, global, i)?, out)
            }
        },
        Cmd::Classify { src, gset, modulus, out } => {
            let (w, mut i) = src.load(4)?;
            let g: &FiniteGroup = w.group();
            let x = report::parse_gset(g, &gset)?;
            let m = modulus.unwrap_or_else(|| report::default_classify_modulus(&w));
            i.modulus = Some(m);
            (report::classify(&w, &x, m, i)?, out)
        }
        Cmd::ReportAll { seed, jobs, out } => (report::report_all(seed, jobs)?, out),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((r, out)) => {
            let text = serde_json::to_string_pretty(&r).expect("report serializes") + "\n";
            match out {
                Some(p) => {
                    if let Err(e) = std::fs::write(&p, text) {
                        eprintln!("error: {}: {e}", p.display());
                        return ExitCode::from(2);
                    }
                }
                None => print!("{text}"),
            }
            ExitCode::from(if r.passed { 0 } else { 1 })
        }
        Err(e @ Error::Internal(_)) => {
            eprintln!("internal error: {e}");
            ExitCode::from(3)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
