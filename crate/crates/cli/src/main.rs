use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hilbert_schur::algebra::{self, quiver};
use hilbert_schur::kclasses::basis;
use hilbert_schur::{oracle, schur, stalks, IntKClass, IntegerPartition, SetPartition};

/// Largest n for which commands enumerating `S_n` are accepted.
const MAX_N: usize = 8;

#[derive(Parser)]
#[command(name = "hschur", version, about = "Exact K-theoretic convolution algebras of symmetric groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the ℤ-basis of one graded piece.
    Basis(Grading),
    /// Multiply two classes given as JSON (inline or a file path).
    Multiply {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        /// Use the brute-force convolution oracle instead of rewriting.
        #[arg(long)]
        oracle: bool,
    },
    /// Rank of one graded piece, or the table over canonical sections.
    Dims {
        #[arg(short)]
        n: usize,
        #[arg(long, requires = "source")]
        target: Option<String>,
        #[arg(long, requires = "target")]
        source: Option<String>,
    },
    /// Run a verification.
    Check {
        #[arg(value_enum)]
        what: CheckKind,
        #[arg(short)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
    /// Print the quiver presentation (n = 3 only).
    Quiver {
        #[arg(short, default_value_t = 3)]
        n: usize,
    },
    /// Concatenation matrix for a partition.
    Phi {
        #[arg(long)]
        lambda: String,
        /// The dual operator on ᾱ instead.
        #[arg(long)]
        dual: bool,
    },
    /// Write the structure constants as JSON.
    Export {
        #[arg(short)]
        n: usize,
        #[arg(long)]
        json: PathBuf,
        #[arg(long = "mod-p")]
        mod_p: Option<i64>,
        /// One idempotent per integer partition.
        #[arg(long)]
        reduced: bool,
    },
}

#[derive(Args)]
struct Grading {
    #[arg(short)]
    n: usize,
    #[arg(long)]
    target: String,
    #[arg(long)]
    source: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckKind {
    Relations,
    Oracle,
    Assoc,
    Schur,
    Stalks,
}

/// Errors that are the caller's fault, reported with exit status 2.
#[derive(Debug)]
struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    Usage(msg.into()).into()
}

fn check_n(n: usize, max: usize) -> anyhow::Result<()> {
    if n > max {
        return Err(usage(format!("n = {n} is out of range (at most {max})")));
    }
    Ok(())
}

/// `"1 2|3"` is a set partition; anything without `|` is an integer
/// partition standing for its canonical section.
fn parse_grading(s: &str, n: usize) -> anyhow::Result<SetPartition> {
    let p = if s.contains('|') {
        s.parse::<SetPartition>().map_err(|e| usage(format!("bad set partition {s:?}: {e}")))?
    } else {
        s.parse::<IntegerPartition>().map_err(|e| usage(format!("bad partition {s:?}: {e}")))?.canonical_section()
    };
    if p.n() != n {
        return Err(usage(format!("{s:?} is a partition of {}, not {n}", p.n())));
    }
    Ok(p)
}

fn read_class(arg: &str) -> anyhow::Result<IntKClass> {
    let text = if arg.trim_start().starts_with('{') {
        arg.to_string()
    } else {
        fs::read_to_string(arg).with_context(|| format!("reading {arg}"))?
    };
    IntKClass::from_json(&text).map_err(|e| usage(format!("bad class: {e}")))
}

fn basis_elements(t: &SetPartition, s: &SetPartition) -> anyhow::Result<Vec<IntKClass>> {
    Ok(basis(t, s)?.iter().map(IntKClass::basis_element).collect::<Result<_, _>>()?)
}

fn random_element(rng: &mut ChaCha8Rng, parts: &[SetPartition], t: &SetPartition) -> anyhow::Result<(SetPartition, IntKClass)> {
    let s = parts[rng.gen_range(0..parts.len())].clone();
    let b = basis(t, &s)?;
    let idx = &b[rng.gen_range(0..b.len())];
    Ok((s, IntKClass::basis_element(idx)?))
}

/// Outcome of a check: a summary line and whether it passed.
struct Verdict(String, bool);

fn check_oracle(n: usize, seed: u64, samples: usize) -> anyhow::Result<Verdict> {
    let parts = SetPartition::all(n);
    let mut count = 0;
    let mut bad = 0;
    let mut compare = |x: &IntKClass, y: &IntKClass| -> anyhow::Result<()> {
        count += 1;
        if oracle::oracle_multiply(x, y)? != algebra::multiply(x, y)? {
            bad += 1;
        }
        Ok(())
    };
    if n <= 4 {
        for b in &parts {
            let lefts: Vec<_> = parts.iter().map(|a| basis_elements(a, b)).collect::<anyhow::Result<Vec<_>>>()?.concat();
            let rights: Vec<_> = parts.iter().map(|c| basis_elements(b, c)).collect::<anyhow::Result<Vec<_>>>()?.concat();
            for x in &lefts {
                for y in &rights {
                    compare(x, y)?;
                }
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..samples {
            let a = parts[rng.gen_range(0..parts.len())].clone();
            let (b, x) = random_element(&mut rng, &parts, &a)?;
            let (_, y) = random_element(&mut rng, &parts, &b)?;
            compare(&x, &y)?;
        }
    }
    Ok(Verdict(format!("oracle agrees on {} of {count} products", count - bad), bad == 0))
}

fn check_assoc(n: usize, seed: u64, samples: usize) -> anyhow::Result<Verdict> {
    let parts = SetPartition::all(n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut bad = 0;
    for _ in 0..samples {
        let a = parts[rng.gen_range(0..parts.len())].clone();
        let (b, x) = random_element(&mut rng, &parts, &a)?;
        let (c, y) = random_element(&mut rng, &parts, &b)?;
        let (_, z) = random_element(&mut rng, &parts, &c)?;
        let left = algebra::multiply(&algebra::multiply(&x, &y)?, &z)?;
        let right = algebra::multiply(&x, &algebra::multiply(&y, &z)?)?;
        if left != right {
            bad += 1;
        }
    }
    Ok(Verdict(format!("associative on {} of {samples} sampled triples", samples - bad), bad == 0))
}

fn run(cli: Cli) -> anyhow::Result<bool> {
    match cli.command {
        Command::Basis(g) => {
            check_n(g.n, MAX_N)?;
            let (t, s) = (parse_grading(&g.target, g.n)?, parse_grading(&g.source, g.n)?);
            let idx = basis(&t, &s)?;
            for i in &idx {
                println!("{i}\t{}", IntKClass::basis_element(i)?.to_json());
            }
            println!("{} elements", idx.len());
        }
        Command::Multiply { left, right, oracle: use_oracle } => {
            let (a, b) = (read_class(&left)?, read_class(&right)?);
            if a.source() != b.target() {
                return Err(usage(format!("cannot compose {} <- {} with {} <- {}", a.target(), a.source(), b.target(), b.source())));
            }
            let p = if use_oracle { oracle::oracle_multiply(&a, &b)? } else { algebra::multiply(&a, &b)? };
            println!("{}", p.to_json());
        }
        Command::Dims { n, target, source } => {
            check_n(n, MAX_N)?;
            match (target, source) {
                (Some(t), Some(s)) => println!("{}", algebra::dimension(&parse_grading(&t, n)?, &parse_grading(&s, n)?)?),
                _ => {
                    let parts = IntegerPartition::all(n);
                    for t in &parts {
                        let row = parts
                            .iter()
                            .map(|s| algebra::dimension(&t.canonical_section(), &s.canonical_section()).map(|d| d.to_string()))
                            .collect::<Result<Vec<_>, _>>()?;
                        println!("({t})\t{}", row.join("\t"));
                    }
                }
            }
        }
        Command::Check { what, n, seed, samples } => {
            let Verdict(line, ok) = match what {
                CheckKind::Relations => {
                    check_n(n, 4)?;
                    let r = algebra::verify_relations(n)?;
                    print!("{r}");
                    Verdict(if r.is_ok() { "all relations hold".into() } else { format!("{} relations fail", r.failures.len()) }, r.is_ok())
                }
                CheckKind::Oracle => {
                    check_n(n, 5)?;
                    check_oracle(n, seed, samples)?
                }
                CheckKind::Assoc => {
                    check_n(n, 5)?;
                    check_assoc(n, seed, samples)?
                }
                CheckKind::Schur => {
                    check_n(n, 4)?;
                    let r = schur::verify_quotient_hom(n)?;
                    print!("{r}");
                    Verdict(if r.is_ok() { "quotient map is a surjective homomorphism".into() } else { "quotient map check failed".into() }, r.is_ok())
                }
                CheckKind::Stalks => {
                    check_n(n, 12)?;
                    let r = stalks::verify_triangularity(n)?;
                    print!("{r}");
                    Verdict(if r.is_ok() { "triangular".into() } else { "not triangular".into() }, r.is_ok())
                }
            };
            println!("{line}");
            return Ok(ok);
        }
        Command::Quiver { n } => {
            if n != 3 {
                return Err(usage("the quiver presentation is available for n = 3 only"));
            }
            let q = quiver::quiver_n3()?;
            print!("{q}");
            return Ok(q.all_hold());
        }
        Command::Phi { lambda, dual } => {
            let l: IntegerPartition = lambda.parse().map_err(|e| usage(format!("bad partition {lambda:?}: {e}")))?;
            check_n(l.size(), 12)?;
            let m = if dual { stalks::dual_phi_matrix(&l) } else { stalks::phi_matrix(&l) };
            print!("{m}");
        }
        Command::Export { n, json, mod_p, reduced } => {
            check_n(n, if reduced { algebra::MAX_REDUCED_N } else { algebra::MAX_FULL_N })?;
            if let Some(p) = mod_p {
                if p < 2 || (2..p).take_while(|d| d * d <= p).any(|d| p % d == 0) {
                    return Err(usage(format!("{p} is not a prime")));
                }
            }
            let pres = algebra::export_presentation(n, reduced, mod_p)?;
            fs::write(&json, pres.to_json()).with_context(|| format!("writing {}", json.display()))?;
            println!("wrote {} products to {}", pres.products.len(), json.display());
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.downcast_ref::<Usage>().is_some() || e.downcast_ref::<hilbert_schur::Error>().is_some() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}
