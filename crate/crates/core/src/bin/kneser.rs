//! Command-line front end.
//!
//! Exit codes: 0 success, 1 a verification or certificate failed, 2 a resource
//! cap was hit, 3 I/O error, 64 invalid arguments.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use kneser_core::bounds::{bigdim_table, connectivity_table, smalldim_table, PUBLISHED_KG3_DIM6};
use kneser_core::generators::{certificate_report, explore_psi_extension, CertificateOptions};
use kneser_core::report::{
    write_barcode, write_betti, write_bounds, write_certificate, write_json, write_verify, OutputFormat,
};
use kneser_core::verify::{self, default_persistence_dim, Lemma, VerifyParams};
use kneser_core::{betti_for_dims, persistence_barcode, Error, FlagComplex, HomologyOptions, PrimeField, Subset};

#[derive(Parser)]
#[command(name = "kneser", version, about = "Homology of Kneser graph independence complexes")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Worker threads (default: all cores).
    #[arg(long, global = true, env = "KNESER_THREADS")]
    threads: Option<usize>,
    /// Coefficient field GF(p).
    #[arg(long, short = 'p', global = true, default_value_t = 2)]
    p: u32,
    /// Most simplices held at once.
    #[arg(long, global = true, default_value_t = 4_000_000)]
    max_simplices: u64,
    /// Memory budget for simplices and reduced columns, MiB.
    #[arg(long, global = true, default_value_t = 8192)]
    memory_mb: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write to this file instead of stdout.
    #[arg(long, short = 'o', global = true)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

impl From<Format> for OutputFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Json => OutputFormat::Json,
            Format::Csv => OutputFormat::Csv,
            Format::Text => OutputFormat::Text,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Table {
    Bigdim,
    Smalldim,
    Connectivity,
}

#[derive(Subcommand)]
enum Command {
    /// Reduced Betti numbers of Ind(KG(n, k)).
    Betti {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        /// Compute dimensions 0..=max-dim (default: all).
        #[arg(long, conflicts_with = "dims")]
        max_dim: Option<usize>,
        /// Comma-separated dimensions.
        #[arg(long, value_delimiter = ',')]
        dims: Option<Vec<usize>>,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long)]
        lemma: String,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        m: Option<u32>,
        #[arg(long)]
        q: Option<u32>,
        #[arg(long)]
        c: Option<u32>,
        #[arg(long)]
        j: Option<u32>,
        #[arg(long)]
        l: Option<u32>,
        /// Subset S as comma-separated elements.
        #[arg(long, value_delimiter = ',')]
        s: Option<Vec<u32>>,
        /// Subset T as comma-separated elements.
        #[arg(long, value_delimiter = ',')]
        t: Option<Vec<u32>>,
        #[arg(long)]
        max_dim: Option<usize>,
    },
    /// Regenerate a bounds table. Ranges are `a..b` (inclusive), `a` or `a,b,c`.
    Bounds {
        #[arg(long, value_enum)]
        table: Table,
        #[arg(long)]
        n: Option<String>,
        #[arg(long)]
        k: Option<String>,
        /// Smallest ground-set size with nonzero homology in degree q (smalldim).
        #[arg(long, default_value_t = 7)]
        l: u32,
        /// Rank in that ground-set size (smalldim).
        #[arg(long, default_value_t = 29)]
        base: u128,
        /// Homological degree (smalldim).
        #[arg(long, default_value_t = 6)]
        q: u32,
    },
    /// Rank certificate for the top-degree classes of VR(F_n^[m]; 2(n-1)).
    Certificate {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: u32,
        /// Largest cycle materialized for the exhaustive boundary check.
        #[arg(long, default_value_t = 1 << 16)]
        max_cycle_terms: u64,
    },
    /// Write the simplices of one dimension of VR(F_n^[m]; r).
    Export {
        #[arg(long)]
        n: u32,
        #[arg(long, conflicts_with = "m")]
        k: Option<u32>,
        #[arg(long)]
        m: Option<u32>,
        #[arg(long)]
        r: u32,
        #[arg(long)]
        dim: usize,
    },
    /// Persistence barcode of the distance filtration on F_n^[m].
    Barcode {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        max_dim: Option<usize>,
    },
    /// Try the line-complement extension on a projective plane of order q.
    ExplorePsi {
        #[arg(long, default_value_t = 3)]
        q: u32,
        /// Per-subset probes kept in the report.
        #[arg(long, default_value_t = 20)]
        keep: usize,
    },
}

enum Failure {
    Verification,
    Lib(Error),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Io(e.into())
    }
}

fn parse_range(s: &str) -> Result<Vec<u32>, Error> {
    let num = |t: &str| {
        t.trim()
            .parse::<u32>()
            .map_err(|e| Error::InvalidInput(format!("bad number {t:?}: {e}")))
    };
    if let Some((a, b)) = s.split_once("..") {
        let (a, b) = (num(a)?, num(b.trim_start_matches('='))?);
        if a > b {
            return Err(Error::InvalidInput(format!("empty range {s:?}")));
        }
        Ok((a..=b).collect())
    } else {
        s.split(',').map(num).collect()
    }
}

fn subset(v: Option<Vec<u32>>) -> Result<Option<Subset>, Error> {
    v.map(Subset::from_elements).transpose()
}

fn open_output(path: &Option<PathBuf>) -> io::Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn run(cli: Cli) -> Result<(), Failure> {
    let g = &cli.global;
    if let Some(t) = g.threads {
        if t == 0 {
            return Err(Error::InvalidInput("threads must be positive".into()).into());
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .map_err(|e| Error::InvalidInput(e.to_string()))?;
    }
    if g.max_simplices == 0 || g.memory_mb == 0 {
        return Err(Error::InvalidInput("caps must be positive".into()).into());
    }
    let field = PrimeField::new(g.p)?;
    let opts = HomologyOptions {
        field,
        max_simplices: g.max_simplices,
        memory_mb: g.memory_mb,
    };
    let fmt: OutputFormat = g.format.into();

    match cli.command {
        Command::Betti { n, k, max_dim, dims } => {
            let complex = FlagComplex::kneser_independence(n, k)?;
            let dims: Vec<usize> = match (dims, max_dim) {
                (Some(d), _) => d,
                (None, Some(d)) => (0..=d).collect(),
                (None, None) => (0..complex.f_vector(64).len()).collect(),
            };
            let r = betti_for_dims(&complex, &dims, &opts)?;
            let mut out = open_output(&g.output)?;
            write_betti(json!({"n": n, "k": k}), &r, fmt, &mut out)?;
            out.flush()?;
        }
        Command::Verify {
            lemma,
            n,
            m,
            q,
            c,
            j,
            l,
            s,
            t,
            max_dim,
        } => {
            let lemma: Lemma = lemma.parse()?;
            let params = VerifyParams {
                n,
                m,
                q,
                c,
                j,
                l,
                s: subset(s)?,
                t: subset(t)?,
                max_dim,
            };
            let outcome = verify::run(lemma, &params, &opts)?;
            let mut out = open_output(&g.output)?;
            write_verify(&outcome, fmt, &mut out)?;
            out.flush()?;
            if !outcome.pass {
                return Err(Failure::Verification);
            }
        }
        Command::Bounds { table, n, k, l, base, q } => {
            let ks = parse_range(k.as_deref().unwrap_or("1..5"))?;
            let report = match table {
                Table::Bigdim => bigdim_table(&parse_range(n.as_deref().unwrap_or("3..10"))?, &ks)?,
                Table::Connectivity => connectivity_table(&parse_range(n.as_deref().unwrap_or("4..10"))?, &ks)?,
                Table::Smalldim => {
                    let n = match n.as_deref() {
                        None => 3,
                        Some(s) => match parse_range(s)?.as_slice() {
                            [one] => *one,
                            _ => return Err(Error::InvalidInput("smalldim takes a single n".into()).into()),
                        },
                    };
                    // printed reference values exist only for the default n = 3 row
                    let published: &[(u32, u128)] =
                        if (n, q, l, base) == (3, 6, 7, 29) { &PUBLISHED_KG3_DIM6 } else { &[] };
                    smalldim_table(n, q, l, base, &ks, published)?
                }
            };
            let mut out = open_output(&g.output)?;
            write_bounds(&report, fmt, &mut out)?;
            out.flush()?;
        }
        Command::Certificate { n, m, max_cycle_terms } => {
            let copts = CertificateOptions {
                max_cycle_terms,
                ..CertificateOptions::default()
            };
            let cert = certificate_report(n, m, field, &copts)?;
            let mut out = open_output(&g.output)?;
            write_certificate(&cert, fmt, &mut out)?;
            out.flush()?;
            if !cert.valid {
                return Err(Failure::Verification);
            }
        }
        Command::Export { n, k, m, r, dim } => {
            let m = match (k, m) {
                (_, Some(m)) => m,
                (Some(k), None) => 2 * n + k,
                (None, None) => return Err(Error::InvalidInput("give --k or --m".into()).into()),
            };
            let complex = FlagComplex::full(n, m, r)?;
            let count = complex.count_simplices(dim);
            if count > g.max_simplices {
                return Err(Error::ResourceCap {
                    cap: "max_simplices",
                    limit: g.max_simplices,
                    required: count,
                }
                .into());
            }
            let mut out = open_output(&g.output)?;
            complex.export_simplices(dim, &mut out)?;
            out.flush()?;
        }
        Command::Barcode { n, m, max_dim } => {
            let ground = Subset::range(m)?;
            let max_dim = match max_dim {
                Some(d) => d,
                None => default_persistence_dim(n, ground)?,
            };
            let bc = persistence_barcode(n, ground, max_dim, &opts)?;
            let mut out = open_output(&g.output)?;
            write_barcode(&bc, fmt, &mut out)?;
            out.flush()?;
        }
        Command::ExplorePsi { q, keep } => {
            let rep = explore_psi_extension(q, keep)?;
            let mut out = open_output(&g.output)?;
            write_json(&rep, &mut out)?;
            out.flush()?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 64 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Lib(e @ Error::ResourceCap { .. })) => {
            eprintln!("error: {e}");
            eprintln!("raise --max-simplices / --memory-mb to proceed; instances of this size need cluster-scale memory");
            ExitCode::from(2)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(64)
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("I/O error: {e}");
            ExitCode::from(3)
        }
    }
}
