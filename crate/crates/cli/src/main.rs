//! `hexpress`: Poincaré and Hodge polynomials of moduli of bundles on real
//! curves, from the command line.
//!
//! Exit status is 0 on success, 2 for usage errors and inadmissible
//! parameters, 1 when an internal consistency check fails.

mod emit;
mod scan;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_integer::Integer;
use serde::Serialize;

use hexpress::constructions::{ConstructionParams, ConstructionRegistry};
use hexpress::moduli::{dim_complex, Calculator, CalculatorOptions, CurveParams, ReportOptions};
use hexpress::series::Specialization;
use hexpress::Error;

use emit::{HodgeData, HodgeJson, ReportJson, SeriesJson, VarietyJson};
use scan::{DegreePolicy, IntRange, ScanSpec};

#[derive(Parser)]
#[command(
    name = "hexpress",
    version,
    about = "Betti and Hodge numbers of moduli of bundles on real curves"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full report for one cell (g, n, r, d) with gcd(r, d) = 1.
    Report {
        #[command(flatten)]
        cell: CellArgs,
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Reports for a grid of cells.
    Scan(ScanArgs),
    /// Hodge and real Betti data of a named construction.
    Construct {
        name: String,
        #[command(flatten)]
        params: ConstructArgs,
    },
    /// Hodge polynomial of M(r, d) in one of three forms.
    Hodge {
        #[command(flatten)]
        cell: CellArgs,
        #[arg(long, value_enum)]
        spec: HodgeSpec,
    },
    /// Raw truncated series of a registered recursion; any degree allowed.
    Series {
        #[arg(long)]
        kind: String,
        #[command(flatten)]
        cell: CellArgs,
        /// Number of real circles, for `real`.
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        cap: usize,
    },
    /// Registered recursions and constructions.
    List,
}

#[derive(Args)]
struct CellArgs {
    #[arg(long)]
    g: u32,
    #[arg(long)]
    r: u32,
    #[arg(long, allow_hyphen_values = true)]
    d: i64,
}

#[derive(Args)]
struct ScanArgs {
    #[arg(long)]
    g: IntRange,
    #[arg(long)]
    r: IntRange,
    #[arg(long)]
    n: IntRange,
    #[arg(long, value_enum, default_value_t = DPolicy::CoprimeMin)]
    d_policy: DPolicy,
    /// Degree for `--d-policy fixed`.
    #[arg(long, allow_hyphen_values = true)]
    d: Option<i64>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Worker threads; 0 uses every core.
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Skip the two-variable recursion; the signature is then read from the
    /// (t,1) polynomial.
    #[arg(long)]
    no_xy: bool,
}

#[derive(Args)]
struct ConstructArgs {
    #[arg(long)]
    g: Option<i64>,
    #[arg(long)]
    n: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    d: Option<i64>,
    #[arg(long)]
    k: Option<i64>,
    #[arg(long)]
    m: Option<i64>,
    #[arg(long)]
    r: Option<i64>,
    #[arg(long)]
    dim: Option<i64>,
}

impl ConstructArgs {
    fn params(&self) -> ConstructionParams {
        let mut p = ConstructionParams::new();
        let given = [
            ("g", self.g),
            ("n", self.n),
            ("d", self.d),
            ("k", self.k),
            ("m", self.m),
            ("r", self.r),
            ("dim", self.dim),
        ];
        for (name, value) in given {
            if let Some(v) = value {
                p.insert(name, v);
            }
        }
        p
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum DPolicy {
    CoprimeMin,
    Fixed,
}

#[derive(Clone, Copy, ValueEnum)]
enum HodgeSpec {
    T1,
    Tt,
    Xy,
}

/// Bad input that clap cannot see, such as a missing `--d` for a fixed scan.
#[derive(Debug)]
struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn print_json<T: Serialize>(value: &T) -> anyhow::Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    print_text(&text)
}

fn print_text(text: &str) -> anyhow::Result<()> {
    std::io::stdout().lock().write_all(text.as_bytes())?;
    Ok(())
}

fn require_coprime(r: u32, d: i64) -> hexpress::Result<()> {
    if r == 0 || d.gcd(&(r as i64)) != 1 {
        return Err(Error::Inadmissible(format!(
            "moduli space is smooth projective only for gcd(r,d) = 1 (got r={r}, d={d})"
        )));
    }
    Ok(())
}

fn hodge(cell: &CellArgs, spec: HodgeSpec) -> anyhow::Result<HodgeJson> {
    let CellArgs { g, r, d } = *cell;
    require_coprime(r, d)?;
    let mut calc = Calculator::default();
    let n = dim_complex(g, r);
    let (name, hodge) = match spec {
        HodgeSpec::T1 => {
            let t1 = calc.hodge_t1(g, r, d, n + 2)?;
            t1.assert_polynomial(n)?;
            ("t1", HodgeData::Polynomial(emit::coeffs(&t1.truncate(n)?)))
        }
        HodgeSpec::Tt | HodgeSpec::Xy => {
            let xy = calc.hodge_biseries(g, r, d, 2 * n + 2)?;
            xy.assert_polynomial(2 * n)?;
            match spec {
                HodgeSpec::Tt => {
                    let tt = xy.truncate(2 * n)?.specialize(Specialization::TT);
                    ("tt", HodgeData::Polynomial(emit::coeffs(&tt)))
                }
                _ => ("xy", emit::hodge_array(&xy, n)),
            }
        }
    };
    Ok(HodgeJson {
        g,
        r,
        d,
        spec: name.into(),
        dim_complex: n,
        hodge,
    })
}

fn run(cli: Cli) -> anyhow::Result<()> {
    match cli.command {
        Command::Report { cell, n, format } => {
            let mut calc = Calculator::default();
            let rep = calc.report(cell.g, n, cell.r, cell.d, ReportOptions::default())?;
            match format {
                Format::Json => print_json(&ReportJson::from(&rep)),
                Format::Csv => print_text(&emit::csv(&[rep])),
            }
        }
        Command::Scan(args) => {
            let d_policy = match (args.d_policy, args.d) {
                (DPolicy::CoprimeMin, None) => DegreePolicy::CoprimeMin,
                (DPolicy::Fixed, Some(d)) => DegreePolicy::Fixed(d),
                (DPolicy::Fixed, None) => return Err(Usage("--d-policy fixed needs --d".into()).into()),
                (DPolicy::CoprimeMin, Some(_)) => {
                    return Err(Usage("--d is only used with --d-policy fixed".into()).into())
                }
            };
            let spec = ScanSpec {
                g: args.g,
                r: args.r,
                n: args.n,
                d_policy,
                hodge_xy: !args.no_xy,
                jobs: args.jobs,
            };
            let reports = spec.run()?;
            match args.format {
                Format::Json => print_json(&reports.iter().map(ReportJson::from).collect::<Vec<_>>()),
                Format::Csv => print_text(&emit::csv(&reports)),
            }
        }
        Command::Construct { name, params } => {
            let x = ConstructionRegistry::builtin().build(&name, &params.params())?;
            print_json(&VarietyJson::from(&x))
        }
        Command::Hodge { cell, spec } => print_json(&hodge(&cell, spec)?),
        Command::Series { kind, cell, n, cap } => {
            let mut calc = Calculator::new(CalculatorOptions::default());
            let params = CurveParams {
                genus: cell.g,
                real_components: n,
            };
            let s = calc.series(&kind, params, cell.r, cell.d, cap)?;
            print_json(&SeriesJson {
                kind,
                g: cell.g,
                n,
                r: cell.r,
                d: cell.d,
                cap,
                coefficients: emit::coeffs(&s),
            })
        }
        Command::List => {
            let calc = Calculator::default();
            let mut text = String::from("recursions:\n");
            for e in calc.univariate_registry().entries() {
                text += &format!("  {:<22} {}\n", e.name, e.summary);
            }
            text += "  (two-variable Hodge polynomial via `hodge --spec xy`)\nconstructions:\n";
            for c in ConstructionRegistry::builtin().entries() {
                let mut line = format!("  {:<22} {}", c.name(), c.summary());
                for p in c.params() {
                    line += &format!(" --{p}");
                }
                text += &line;
                text.push('\n');
            }
            print_text(&text)
        }
    }
}

fn exit_code(err: &anyhow::Error) -> u8 {
    if let Some(io) = err.downcast_ref::<std::io::Error>() {
        // downstream closed the pipe, as with `| head`
        return if io.kind() == std::io::ErrorKind::BrokenPipe {
            0
        } else {
            1
        };
    }
    if err.downcast_ref::<Usage>().is_some() {
        return 2;
    }
    match err.downcast_ref::<Error>() {
        Some(e) if e.is_internal() => 1,
        Some(_) => 2,
        None => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            let code = exit_code(&err);
            if code != 0 {
                eprintln!("error: {err}");
            }
            ExitCode::from(code)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        let internal = anyhow::Error::from(Error::InexactDivision {
            divisor: "1 + t".into(),
        });
        assert_eq!(exit_code(&internal), 1);
        let bad = anyhow::Error::from(Error::Inadmissible("n must satisfy 1 ≤ n ≤ g+1".into()));
        assert_eq!(exit_code(&bad), 2);
        assert_eq!(exit_code(&Usage("x".into()).into()), 2);
        let pipe = std::io::Error::from(std::io::ErrorKind::BrokenPipe);
        assert_eq!(exit_code(&pipe.into()), 0);
    }
}
