use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use compound_core::cache::{cached_matrix, Cache};
use compound_core::format::{decompose, display_symfunc, emit_matrix, MatrixFormat, VarConvention};
use compound_core::symfunc::{complete_h, h_product, q_prime, schur, schur_p, schur_q, v_basis, w_basis};
use compound_core::transition::{split_blocks, MatrixKind};
use compound_core::verify::{all_claim_ids, check_claims, VerifyConfig};
use compound_core::{Error, LabelOrder, Partition, Result};

#[derive(Parser)]
#[command(name = "compound", version, about = "Compound basis W = Q(x) S(x^2): matrices, bijections and checks")]
struct Cli {
    /// Worker threads for independent rows and claims (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit A_n, Gamma_n, G_n, tA_n A_n or one of its blocks.
    Matrix {
        #[arg(value_parser = ["A", "Gamma", "G", "AtA", "block"])]
        kind: String,
        #[arg(long)]
        n: usize,
        /// Block class as n0,n1 (kind block only).
        #[arg(long, value_parser = parse_class)]
        block: Option<(usize, usize)>,
        #[arg(long, value_enum, default_value_t = FormatArg::Json)]
        format: FormatArg,
        #[arg(long, value_enum, default_value_t = OrderArg::Canonical)]
        order: OrderArg,
        /// Read and write $COMPOUND_CACHE_DIR (default ./.compound-cache).
        #[arg(long)]
        cache: bool,
    },
    /// Apply one of the partition maps and print the result as JSON.
    Decompose {
        #[arg(value_enum)]
        map: MapArg,
        /// Partition such as 5^3,4^4,2^7,1 or 11,10,5,3,2.
        partition: String,
    },
    /// Run identity checks and print one JSON report per line.
    Verify {
        /// Comma-separated claim ids, or "all".
        #[arg(long, default_value = "all")]
        claims: String,
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        /// JSON file overriding per-claim caps.
        #[arg(long)]
        caps: Option<PathBuf>,
    },
    /// Print a symmetric function in the power sums.
    Expand {
        #[arg(value_enum)]
        family: FamilyArg,
        partition: String,
        #[arg(long, value_enum, default_value_t = VarsArg::X)]
        vars: VarsArg,
        /// Print the JSON term list instead of text.
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
    Latex,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    Canonical,
    #[value(alias = "paper")]
    Printed,
}

#[derive(Clone, Copy, ValueEnum)]
enum MapArg {
    Phi,
    Psi,
    Glaisher,
    GlaisherInverse,
    Habacus,
    #[value(name = "2quot")]
    TwoQuot,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    S,
    Q,
    P,
    W,
    V,
    QPrime,
    H,
}

#[derive(Clone, Copy, ValueEnum)]
enum VarsArg {
    X,
    #[value(name = "t-schur")]
    TSchur,
    #[value(name = "t-q")]
    TQ,
}

fn parse_class(s: &str) -> std::result::Result<(usize, usize), String> {
    let (a, b) = s.split_once(',').ok_or("expected n0,n1")?;
    let parse = |t: &str| t.trim().parse::<usize>().map_err(|e| e.to_string());
    Ok((parse(a)?, parse(b)?))
}

fn run_matrix(
    kind: &str,
    n: usize,
    block: Option<(usize, usize)>,
    format: FormatArg,
    order: OrderArg,
    cache: bool,
) -> Result<String> {
    let kind = MatrixKind::parse(kind, block)?;
    let order = match order {
        OrderArg::Canonical => LabelOrder::Canonical,
        OrderArg::Printed => LabelOrder::Printed,
    };
    let format = match format {
        FormatArg::Json => MatrixFormat::Json,
        FormatArg::Csv => MatrixFormat::Csv,
        FormatArg::Latex => MatrixFormat::Latex,
    };
    let cache = cache.then(Cache::from_env);
    let m = cached_matrix(cache.as_ref(), kind, n, order)?;
    let blocks = if kind == MatrixKind::AtA { Some(split_blocks(&m)?) } else { None };
    emit_matrix(&m, format, blocks.as_ref())
}

fn run_decompose(map: MapArg, lambda: &Partition) -> Result<String> {
    let name = map.to_possible_value().expect("no skipped variants");
    Ok(format!("{}\n", decompose(name.get_name(), lambda)?))
}

fn run_expand(family: FamilyArg, lambda: &Partition, vars: VarsArg, as_json: bool) -> Result<String> {
    let f = match family {
        FamilyArg::S => schur(lambda),
        FamilyArg::Q => schur_q(lambda)?,
        FamilyArg::P => schur_p(lambda)?,
        FamilyArg::W => w_basis(lambda),
        FamilyArg::V => v_basis(lambda),
        FamilyArg::QPrime => q_prime(lambda),
        FamilyArg::H if lambda.len() == 1 => complete_h(lambda.part(0)),
        FamilyArg::H => h_product(lambda),
    };
    if as_json {
        return Ok(format!("{}\n", serde_json::to_string(&f)?));
    }
    let vars = match vars {
        VarsArg::X => VarConvention::X,
        VarsArg::TSchur => VarConvention::TSchur,
        VarsArg::TQ => VarConvention::TQ,
    };
    Ok(format!("{}\n", display_symfunc(&f, vars)))
}

fn run_verify(claims: &str, max_n: usize, caps: Option<PathBuf>) -> Result<(String, bool)> {
    let config = match caps {
        Some(path) => VerifyConfig::from_json_file(&path)?,
        None => VerifyConfig::default(),
    };
    let ids = if claims == "all" { all_claim_ids() } else { claims.split(',').map(|s| s.trim().to_string()).collect() };
    let reports = check_claims(&ids, max_n, &config)?;
    let mut out = String::new();
    for r in &reports {
        out.push_str(&r.to_json_line());
        out.push('\n');
    }
    Ok((out, reports.iter().all(|r| r.passed())))
}

fn parse_partition(s: &str) -> Result<Partition> {
    s.parse()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            eprintln!("error: --jobs must be at least 1");
            return ExitCode::from(2);
        }
        rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global().expect("thread pool is configured once");
    }
    let result: Result<(String, bool)> = match cli.command {
        Command::Matrix { kind, n, block, format, order, cache } => {
            run_matrix(&kind, n, block, format, order, cache).map(|s| (s, true))
        }
        Command::Decompose { map, partition } => {
            parse_partition(&partition).and_then(|p| run_decompose(map, &p)).map(|s| (s, true))
        }
        Command::Verify { claims, max_n, caps } => run_verify(&claims, max_n, caps),
        Command::Expand { family, partition, vars, json } => {
            parse_partition(&partition).and_then(|p| run_expand(family, &p, vars, json)).map(|s| (s, true))
        }
    };
    match result {
        Ok((text, ok)) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(text.as_bytes()).and_then(|()| stdout.flush()).is_err() {
                return ExitCode::from(2);
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::Io(_) => 3,
                _ => 2,
            })
        }
    }
}
