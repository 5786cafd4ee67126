//! `vtt`: count, enumerate and cross-check vertex-transitive tournaments of
//! prime order.
//!
//! Exit codes: 0 success, 1 verification failure, 2 bad input, 3 resource cap.

use std::fmt::Write as _;
use std::io::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use vtt_core::counting::{self, table_to_json_lines, table_to_tsv};
use vtt_core::enumeration::{self, EnumerationOptions, DEFAULT_BUDGET_BITS};
use vtt_core::graphs::{self, ExportFormat};
use vtt_core::groups::{ensure_odd_prime, AbelianGroup};
use vtt_core::perm::{self, DEFAULT_AUT_CAP};
use vtt_core::{fixtures, Error};

#[derive(Parser, Debug)]
#[command(
    name = "vtt",
    version,
    about = "Vertex-transitive tournaments of prime order"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format (defaults depend on the subcommand)
    #[arg(long, global = true, value_enum, env = "VTT_FORMAT")]
    format: Option<Format>,

    /// Include full member lists in class output
    #[arg(long, global = true, env = "VTT_MEMBERS")]
    members: bool,

    /// Largest mask width (p-1)/2 allowed for explicit enumeration
    #[arg(long, global = true, env = "VTT_BUDGET_BITS", default_value_t = DEFAULT_BUDGET_BITS,
          value_parser = clap::value_parser!(u32).range(1..=63))]
    budget_bits: u32,

    /// Largest vertex count for automorphism group enumeration
    #[arg(long, global = true, env = "VTT_AUT_CAP", default_value_t = DEFAULT_AUT_CAP,
          value_parser = positive_usize)]
    aut_cap: usize,

    /// Worker threads for enumeration (0 = one per core)
    #[arg(long, global = true, env = "VTT_WORKERS", default_value_t = 0)]
    workers: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Class counts from the divisor recursion, for a prime `P` or a range `A..B`
    Count { primes: String },
    /// Enumerate the classes of connection sets on Z_p
    Classes { p: u64 },
    /// Compare the formula, explicit enumeration and Burnside counts
    Verify { p: u64 },
    /// Decide vertex-transitivity and Cayley-ness of a graph file (edge list or JSON)
    Recognize { file: String },
    /// Run the bundled Z25, Z9 and Z3xZ3 comparisons
    Fixtures,
    /// Print a graph: petersen, cycle:N, dcycle:N, cube:K, kneser:V,K,I,
    /// cayley:N:S (S comma separated), cayley3x3:a.b,c.d, mask:P:BITS
    Graph { spec: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Tsv,
    Dot,
    #[value(name = "edge-list")]
    EdgeList,
}

fn positive_usize(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidArgument(_) | Error::InvalidConnectionSet(_) | Error::Parse(_) => 2,
            Error::SizeLimit { .. } => 3,
            Error::InternalInconsistency(_) => 1,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn bad_input(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

/// Output written to stdout plus the exit code; a nonzero code with output
/// still prints the output.
type Outcome = Result<(String, u8), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((out, code)) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.as_bytes());
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Count { primes } => cmd_count(cli, primes),
        Command::Classes { p } => cmd_classes(cli, *p),
        Command::Verify { p } => cmd_verify(cli, *p),
        Command::Recognize { file } => cmd_recognize(cli, file),
        Command::Fixtures => cmd_fixtures(cli),
        Command::Graph { spec } => cmd_graph(cli, spec),
    }
}

fn parse_range(s: &str) -> Result<(u64, u64), Failure> {
    let num = |x: &str| {
        x.trim()
            .parse::<u64>()
            .map_err(|_| bad_input(format!("'{x}' is not a number")))
    };
    match s.split_once("..") {
        Some((a, b)) => {
            let b = b.strip_prefix('=').unwrap_or(b);
            let (a, b) = (num(a)?, num(b)?);
            if a > b {
                return Err(bad_input(format!("empty range {s}")));
            }
            Ok((a, b))
        }
        None => {
            let p = num(s)?;
            ensure_odd_prime(p)?;
            Ok((p, p))
        }
    }
}

fn cmd_count(cli: &Cli, primes: &str) -> Outcome {
    let (a, b) = parse_range(primes)?;
    let rows = counting::count_table(a, b)?;
    let out = match cli.format.unwrap_or(Format::Tsv) {
        Format::Json => table_to_json_lines(&rows),
        Format::Tsv | Format::Text => table_to_tsv(&rows),
        f => return Err(bad_input(format!("format {f:?} does not apply to count"))),
    };
    Ok((out, 0))
}

fn enum_options(cli: &Cli, with_members: bool) -> EnumerationOptions {
    EnumerationOptions {
        budget_bits: cli.budget_bits,
        with_members,
        workers: cli.workers,
    }
}

fn cmd_classes(cli: &Cli, p: u64) -> Outcome {
    let report = enumeration::equivalence_classes(p, &enum_options(cli, cli.members))?;
    let out = match cli.format.unwrap_or(Format::Json) {
        Format::Json => report.to_json_lines(),
        Format::Text | Format::Tsv => {
            let mut out = String::new();
            for c in &report.classes {
                let _ = write!(out, "{}\t{}", c.representative, c.size);
                if let Some(m) = &c.members {
                    let list: Vec<String> = m.iter().map(ToString::to_string).collect();
                    let _ = write!(out, "\t{}", list.join(" "));
                }
                out.push('\n');
            }
            out
        }
        f => return Err(bad_input(format!("format {f:?} does not apply to classes"))),
    };
    Ok((out, 0))
}

fn cmd_verify(cli: &Cli, p: u64) -> Outcome {
    ensure_odd_prime(p)?;
    let formula = counting::class_count(p)?;
    let enumerated = BigUint::from(
        enumeration::equivalence_classes(p, &enum_options(cli, false))?
            .classes
            .len(),
    );
    let burnside = enumeration::burnside_count(p)?;
    let ok = formula == enumerated && enumerated == burnside;
    let out = match cli.format.unwrap_or(Format::Text) {
        Format::Json => format!(
            "{{\"p\":{p},\"formula\":{formula},\"enumeration\":{enumerated},\"burnside\":{burnside},\"ok\":{ok}}}\n"
        ),
        _ => format!(
            "formula={formula} enumeration={enumerated} burnside={burnside} {}\n",
            if ok { "OK" } else { "MISMATCH" }
        ),
    };
    Ok((out, if ok { 0 } else { 1 }))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn cmd_recognize(cli: &Cli, file: &str) -> Outcome {
    let text = if file == "-" {
        std::io::read_to_string(std::io::stdin())
            .map_err(|e| bad_input(format!("cannot read stdin: {e}")))?
    } else {
        std::fs::read_to_string(file).map_err(|e| bad_input(format!("cannot read {file}: {e}")))?
    };
    let g = graphs::parse_graph(&text)?;
    let aut = perm::automorphisms(&g, cli.aut_cap)?;
    let transitive = perm::orbits(&aut, g.order())?.len() <= 1;
    let regular = if transitive {
        perm::is_cayley(&g, cli.aut_cap)?
    } else {
        None
    };
    let witness: Vec<String> = regular
        .iter()
        .flat_map(|h| h.elements())
        .map(ToString::to_string)
        .collect();
    let out = match cli.format.unwrap_or(Format::Text) {
        Format::Json => {
            let v = serde_json::json!({
                "n": g.order(),
                "automorphisms": aut.order(),
                "vertex_transitive": transitive,
                "cayley": regular.is_some(),
                "regular_subgroup": regular.as_ref().map(|_| &witness),
            });
            format!("{v}\n")
        }
        _ => {
            let mut out = format!(
                "vertex-transitive: {}, cayley: {}\nautomorphisms: {}\n",
                yes_no(transitive),
                yes_no(regular.is_some()),
                aut.order()
            );
            if regular.is_some() {
                let _ = writeln!(out, "regular subgroup: {}", witness.join(" "));
            }
            out
        }
    };
    Ok((out, 0))
}

fn cmd_fixtures(cli: &Cli) -> Outcome {
    let a = fixtures::z25_check()?;
    let b = fixtures::z9_vs_z3_squared()?;
    let c = fixtures::z3_squared_on_z9()?;
    let checks = [
        ("a", "Z25 multipliers", a.passed(), a.to_string()),
        ("b", "Z9 vs Z3xZ3 triangles", b.passed(), b.to_string()),
        ("c", "Z3xZ3 tournament on Z9", c.passed(), c.to_string()),
    ];
    let all = checks.iter().all(|c| c.2);
    let out = match cli.format.unwrap_or(Format::Text) {
        Format::Json => {
            let v: Vec<_> = checks
                .iter()
                .map(|(id, name, ok, detail)| {
                    serde_json::json!({"check": id, "name": name, "ok": ok, "detail": detail})
                })
                .collect();
            format!("{}\n", serde_json::Value::Array(v))
        }
        _ => {
            let mut out = String::new();
            for (id, name, ok, detail) in &checks {
                let _ = writeln!(out, "[{id}] {name}: {}", if *ok { "PASS" } else { "FAIL" });
                for line in detail.lines() {
                    let _ = writeln!(out, "    {line}");
                }
            }
            out
        }
    };
    if !all {
        let failed: Vec<&str> = checks.iter().filter(|c| !c.2).map(|c| c.0).collect();
        let mut stderr = std::io::stderr().lock();
        let _ = writeln!(stderr, "failed fixture checks: {}", failed.join(", "));
    }
    Ok((out, if all { 0 } else { 1 }))
}

fn nums<T: std::str::FromStr>(s: &str) -> Result<Vec<T>, Failure> {
    s.split(',')
        .map(|x| {
            x.trim()
                .parse::<T>()
                .map_err(|_| bad_input(format!("'{x}' is not a number")))
        })
        .collect()
}

fn build_graph(spec: &str) -> Result<graphs::Digraph, Failure> {
    let (kind, rest) = spec.split_once(':').unwrap_or((spec, ""));
    let one = |r: &str| -> Result<u64, Failure> {
        r.parse()
            .map_err(|_| bad_input(format!("bad parameter '{r}' in {spec}")))
    };
    let g = match kind {
        "petersen" => graphs::petersen(),
        "cycle" => graphs::cycle(one(rest)? as usize)?,
        "dcycle" => graphs::directed_cycle(one(rest)? as usize)?,
        "cube" => graphs::k_cube(one(rest)? as u32)?,
        "kneser" => match nums::<u32>(rest)?.as_slice() {
            &[v, k, i] => graphs::kneser(v, k, i)?,
            _ => return Err(bad_input("kneser needs V,K,I")),
        },
        "cayley" => {
            let (n, set) = rest
                .split_once(':')
                .ok_or_else(|| bad_input("cayley needs N:S"))?;
            let s = graphs::ConnectionSet::cyclic(one(n)?, &nums::<i64>(set)?)?;
            graphs::cayley_digraph(&s)?
        }
        "cayley3x3" => {
            let group = AbelianGroup::new(vec![3, 3])?;
            let pairs = rest
                .split(',')
                .map(|t| nums::<i64>(&t.replace('.', ",")))
                .collect::<Result<Vec<_>, _>>()?;
            let refs: Vec<&[i64]> = pairs.iter().map(Vec::as_slice).collect();
            graphs::cayley_digraph(&graphs::ConnectionSet::from_tuples(group, &refs)?)?
        }
        "mask" => {
            let (p, bits) = rest
                .split_once(':')
                .ok_or_else(|| bad_input("mask needs P:BITS"))?;
            enumeration::SetMask::new(one(p)?, one(bits)?)?.tournament()
        }
        other => return Err(bad_input(format!("unknown graph '{other}'"))),
    };
    Ok(g)
}

fn cmd_graph(cli: &Cli, spec: &str) -> Outcome {
    let g = build_graph(spec)?;
    let out = match cli.format.unwrap_or(Format::EdgeList) {
        Format::EdgeList | Format::Text | Format::Tsv => {
            format!(
                "digraph {}\n{}",
                g.order(),
                graphs::export(&g, ExportFormat::EdgeList)
            )
        }
        Format::Dot => graphs::export(&g, ExportFormat::Dot),
        Format::Json => graphs::export(&g, ExportFormat::Json),
    };
    Ok((out, 0))
}
