//! `hilb` — smoothness of Hilbert schemes of projective space, on the
//! command line.
//!
//! All arithmetic is exact; every number printed is an integer or an `a/b`
//! rational. Human-readable output is the default, `--json` switches the
//! classifier to a machine-readable schema. Exit codes: 0 on success (an
//! empty Hilbert scheme is an answer, not an error), 1 on domain errors,
//! 2 on usage errors.

mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand};
use hilbsmooth::{
    certify_singular_with_cap, classify, hom0_dimension_with_cap, irreducible_components,
    lex_ideal, partition_of_polynomial, res_space_dim, residual_chain, Error, FieldSpec,
    MonomialIdeal, NumericalPolynomial, Partition, ResidualType, Verdict, WitnessStatus,
    DEFAULT_DEGREE_CAP,
};

use render::{classification_json, tangent_json};

#[derive(Parser)]
#[command(name = "hilb", version)]
#[command(about = "Decide smoothness of Hilbert schemes of projective space")]
#[command(after_help = "EXAMPLES:
    hilb classify --ambient 3 --partition 2,2,1 --json
    hilb classify --ambient 4 --poly \"3t+1\" --witness --certify
    hilb convert --poly \"3t+1\"
    hilb lex --ambient 3 --partition 2,2,1 --decompose
    hilb chain --ambient 4 --type 3:2,2:4
    hilb lex --ambient 3 --partition 2,2,1 > L.ideal && hilb hilb --ideal L.ideal --from 0 --to 6 --polynomial
    hilb tangent --ideal L.ideal --field prime:1000003
    hilb witness --ambient 4 --partition 3,2,1
    hilb resdim --ambient 4 --type 3:1")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify Hilb^p(P^m) as smooth, singular or empty
    Classify(ClassifyArgs),
    /// Convert between a partition and its Hilbert polynomial
    Convert(ConvertArgs),
    /// Print the lexicographic ideal L(λ)
    Lex(LexArgs),
    /// Print the residual chain of lexicographic ideals for a type
    Chain(ChainArgs),
    /// Tabulate the Hilbert function of an ideal from a file
    Hilb(HilbArgs),
    /// Compute dim Hom(I, R/I)_0 for an ideal from a file
    Tangent(TangentArgs),
    /// Print the singular witness ideal for a partition
    Witness(WitnessArgs),
    /// Dimension of the space of residual flags of a given type
    Resdim(ResdimArgs),
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    Partition::parse(s).map_err(|e| e.to_string())
}

fn parse_type(s: &str) -> Result<ResidualType, String> {
    ResidualType::parse(s).map_err(|e| e.to_string())
}

fn parse_poly(s: &str) -> Result<NumericalPolynomial, String> {
    NumericalPolynomial::parse(s).map_err(|e| e.to_string())
}

fn parse_field(s: &str) -> Result<FieldSpec, String> {
    if s == "rational" {
        return Ok(FieldSpec::Rational);
    }
    if let Some(p) = s.strip_prefix("prime:") {
        let p: u64 = p.parse().map_err(|_| format!("invalid prime `{p}`"))?;
        if p < 2 {
            return Err("prime must be at least 2".into());
        }
        return Ok(FieldSpec::Prime(p));
    }
    Err(format!("expected `rational` or `prime:P`, got `{s}`"))
}

#[derive(Args)]
#[command(group(ArgGroup::new("input").required(true).args(["partition", "poly", "batch"])))]
struct ClassifyArgs {
    /// Ambient projective space dimension m
    #[arg(long)]
    ambient: u32,
    /// Partition as comma-separated parts, e.g. 2,2,1
    #[arg(long, value_parser = parse_partition)]
    partition: Option<Partition>,
    /// Hilbert polynomial, e.g. "2t+2" or "(1/2)t^2+(3/2)t+1"
    #[arg(long, value_parser = parse_poly)]
    poly: Option<NumericalPolynomial>,
    /// Classify one partition per line from a file
    #[arg(long)]
    batch: Option<PathBuf>,
    /// Print the witness ideal generators on singular verdicts
    #[arg(long)]
    witness: bool,
    /// Run the tangent engine on the witness and compare dimensions
    #[arg(long)]
    certify: bool,
    /// Machine-readable output
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
#[command(group(ArgGroup::new("input").required(true).args(["partition", "poly"])))]
struct ConvertArgs {
    /// Partition to encode as a Hilbert polynomial
    #[arg(long, value_parser = parse_partition)]
    partition: Option<Partition>,
    /// Hilbert polynomial to decode into a partition
    #[arg(long, value_parser = parse_poly)]
    poly: Option<NumericalPolynomial>,
}

#[derive(Args)]
struct LexArgs {
    #[arg(long)]
    ambient: u32,
    #[arg(long, value_parser = parse_partition)]
    partition: Partition,
    /// Also print the irredundant irreducible decomposition
    #[arg(long)]
    decompose: bool,
}

#[derive(Args)]
struct ChainArgs {
    #[arg(long)]
    ambient: u32,
    /// Residual type, e.g. 3:2,2:4 for (n,d) = (3,2),(2,4)
    #[arg(long = "type", value_parser = parse_type)]
    residual_type: ResidualType,
}

#[derive(Args)]
struct HilbArgs {
    /// Ideal file: `vars N` header, then one generator per line
    #[arg(long)]
    ideal: PathBuf,
    /// First degree to tabulate
    #[arg(long)]
    from: i64,
    /// Last degree to tabulate
    #[arg(long)]
    to: i64,
    /// Also interpolate the Hilbert polynomial
    #[arg(long)]
    polynomial: bool,
    /// Regularity hint for the interpolation (default: largest generator degree)
    #[arg(long)]
    hint: Option<u32>,
}

#[derive(Args)]
struct TangentArgs {
    #[arg(long)]
    ideal: PathBuf,
    /// Coefficient field: `rational` (default) or `prime:P`
    #[arg(long, value_parser = parse_field, default_value = "rational")]
    field: FieldSpec,
    /// Refuse computations above this degree (default 20; HILB_DEGREE_CAP
    /// overrides the default)
    #[arg(long)]
    degree_cap: Option<u32>,
}

#[derive(Args)]
struct WitnessArgs {
    #[arg(long)]
    ambient: u32,
    #[arg(long, value_parser = parse_partition)]
    partition: Partition,
}

#[derive(Args)]
struct ResdimArgs {
    /// Rank of the ambient space (n_0)
    #[arg(long)]
    ambient: u32,
    #[arg(long = "type", value_parser = parse_type)]
    residual_type: ResidualType,
}

enum Failure {
    Domain(String),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

/// Ideal constructions allocate O(m^2) exponents and intersections square
/// that, so the subcommands that build ideals refuse unreasonable ambients.
const MAX_CONSTRUCTIVE_AMBIENT: u32 = 100;

fn check_ambient(m: u32) -> Result<(), Failure> {
    if m > MAX_CONSTRUCTIVE_AMBIENT {
        return Err(Failure::Usage(format!(
            "ambient dimension {m} too large; this command supports m <= {MAX_CONSTRUCTIVE_AMBIENT}"
        )));
    }
    Ok(())
}

fn degree_cap(flag: Option<u32>) -> Result<u32, Failure> {
    if let Some(cap) = flag {
        return Ok(cap);
    }
    match std::env::var("HILB_DEGREE_CAP") {
        Ok(text) => text
            .parse()
            .map_err(|_| Failure::Usage(format!("invalid HILB_DEGREE_CAP `{text}`"))),
        Err(_) => Ok(DEFAULT_DEGREE_CAP),
    }
}

fn read_ideal(path: &PathBuf) -> Result<MonomialIdeal, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Domain(format!("cannot read {}: {e}", path.display())))?;
    Ok(MonomialIdeal::parse(&text)?)
}

fn main() -> ExitCode {
    // die quietly when the consumer closes the pipe, e.g. `hilb ... | head`
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Classify(args) => run_classify(args),
        Command::Convert(args) => run_convert(args),
        Command::Lex(args) => run_lex(args),
        Command::Chain(args) => run_chain(args),
        Command::Hilb(args) => run_hilb(args),
        Command::Tangent(args) => run_tangent(args),
        Command::Witness(args) => run_witness(args),
        Command::Resdim(args) => run_resdim(args),
    }
}

fn run_classify(args: ClassifyArgs) -> Result<(), Failure> {
    check_ambient(args.ambient)?;
    if let Some(path) = &args.batch {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Failure::Domain(format!("cannot read {}: {e}", path.display())))?;
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let partition = Partition::parse(line).map_err(|e| Failure::Usage(e.to_string()))?;
            classify_one(&args, Some(partition), true)?;
        }
        return Ok(());
    }
    let partition = match (&args.partition, &args.poly) {
        (Some(p), _) => Some(p.clone()),
        (None, Some(poly)) => match partition_of_polynomial(poly) {
            Ok(p) => Some(p),
            Err(Error::NotHilbert) => None,
            Err(e) => return Err(e.into()),
        },
        (None, None) => unreachable!("clap group"),
    };
    classify_one(&args, partition, false)
}

/// `partition = None` means the polynomial decodes to no partition, so the
/// Hilbert scheme is empty in every ambient space.
fn classify_one(
    args: &ClassifyArgs,
    partition: Option<Partition>,
    one_line: bool,
) -> Result<(), Failure> {
    let m = args.ambient;
    let Some(partition) = partition else {
        let poly = args.poly.as_ref().expect("no partition only via --poly");
        if args.json {
            let value = serde_json::json!({
                "ambient": m,
                "partition": serde_json::Value::Null,
                "polynomial": poly.to_string(),
                "verdict": "empty",
                "condition": serde_json::Value::Null,
                "lexComponentDim": serde_json::Value::Null,
                "description": "no integer partition represents this polynomial",
                "witness": serde_json::Value::Null,
                "witnessStatus": "notNeeded",
            });
            println!("{value}");
        } else {
            println!("verdict: empty (no integer partition represents this polynomial)");
        }
        return Ok(());
    };

    let classification = classify(m, &partition)?;
    let cap = degree_cap(None)?;
    let certificate = if args.certify
        && classification.verdict == Verdict::Singular
        && classification.witness_status == WitnessStatus::Provided
    {
        let witness = classification.witness.as_ref().expect("provided");
        Some(certify_singular_with_cap(m, &partition, witness, FieldSpec::Rational, cap)?)
    } else {
        None
    };

    if args.json {
        println!("{}", classification_json(&classification, certificate.as_ref()));
        return Ok(());
    }

    if one_line {
        let verdict = match classification.verdict {
            Verdict::Empty => "empty".to_string(),
            Verdict::Smooth(k) => format!("smooth (condition {k})"),
            Verdict::Singular => "singular".to_string(),
        };
        println!("{partition} -> {verdict}");
        return Ok(());
    }

    println!("ambient: P^{m}");
    println!("partition: {partition}");
    println!("polynomial: {}", partition.hilbert_polynomial());
    match classification.verdict {
        Verdict::Empty => println!("verdict: empty"),
        Verdict::Smooth(k) => println!("verdict: smooth (condition {k})"),
        Verdict::Singular => println!("verdict: singular"),
    }
    if let Some(dim) = &classification.lex_component_dim {
        println!("lexicographic component dimension: {dim}");
    }
    println!("description: {}", classification.description);
    match classification.witness_status {
        WitnessStatus::NotNeeded => {}
        WitnessStatus::Provided => {
            println!("witness status: provided");
            if args.witness || args.certify {
                let w = classification.witness.as_ref().expect("provided");
                println!("witness ({} variables): {}", w.nvars(), w.generators_string());
            }
        }
        WitnessStatus::NotConstructedByPaper => {
            println!("witness status: not constructed");
        }
    }
    if let Some(cert) = certificate {
        let relation = if cert.singular_certified { ">" } else { "<=" };
        let outcome = if cert.singular_certified {
            "singular certified"
        } else {
            "not certified"
        };
        println!(
            "certificate: hom0 = {} {relation} {} = lexicographic component dimension -> {outcome} \
             (assumes the witness lies on the lexicographic component)",
            cert.hom0_dim, cert.lex_component_dim
        );
    }
    Ok(())
}

fn run_convert(args: ConvertArgs) -> Result<(), Failure> {
    match (args.partition, args.poly) {
        (Some(partition), _) => {
            println!("{}", partition.hilbert_polynomial());
            Ok(())
        }
        (None, Some(poly)) => {
            let partition = partition_of_polynomial(&poly)?;
            println!("{partition}");
            Ok(())
        }
        (None, None) => unreachable!("clap group"),
    }
}

fn run_lex(args: LexArgs) -> Result<(), Failure> {
    check_ambient(args.ambient)?;
    let ideal = lex_ideal(&args.partition, args.ambient)?;
    print!("{ideal}");
    if args.decompose {
        let components = irreducible_components(&args.partition, args.ambient)?;
        for (i, component) in components.iter().enumerate() {
            println!();
            println!("# irreducible component {}", i + 1);
            print!("{component}");
        }
    }
    Ok(())
}

fn run_chain(args: ChainArgs) -> Result<(), Failure> {
    check_ambient(args.ambient)?;
    let chain = residual_chain(&args.residual_type, args.ambient)?;
    for (i, (ideal, &(n, d))) in chain.iter().zip(args.residual_type.pairs()).enumerate() {
        if i > 0 {
            println!();
        }
        println!("# step {} of the residual flag, type {n}:{d}", i + 1);
        print!("{ideal}");
    }
    Ok(())
}

fn run_hilb(args: HilbArgs) -> Result<(), Failure> {
    if args.to < args.from {
        return Err(Failure::Usage("--to must be at least --from".into()));
    }
    let ideal = read_ideal(&args.ideal)?;
    for j in args.from..=args.to {
        println!("{j}\t{}", ideal.hilbert_function(j));
    }
    if args.polynomial {
        let hint = args.hint.unwrap_or_else(|| {
            ideal.gens().iter().map(|g| g.degree()).max().unwrap_or(0)
        });
        let polynomial = ideal.hilbert_polynomial(hint)?;
        println!("polynomial\t{polynomial}");
    }
    Ok(())
}

fn run_tangent(args: TangentArgs) -> Result<(), Failure> {
    let ideal = read_ideal(&args.ideal)?;
    let cap = degree_cap(args.degree_cap)?;
    let report = hom0_dimension_with_cap(&ideal, args.field, cap)?;
    println!("{}", tangent_json(&report));
    Ok(())
}

fn run_witness(args: WitnessArgs) -> Result<(), Failure> {
    check_ambient(args.ambient)?;
    let (witness, rationale) = hilbsmooth::singular_witness(args.ambient, &args.partition)?;
    println!("# {rationale}");
    match witness {
        Some(ideal) => print!("{ideal}"),
        None => println!("# no witness ideal constructed"),
    }
    Ok(())
}

fn run_resdim(args: ResdimArgs) -> Result<(), Failure> {
    let dim = res_space_dim(args.ambient, &args.residual_type)?;
    println!("{dim}");
    Ok(())
}
