use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use unitcrit_core::chevalley::chevalley_scan;
use unitcrit_core::criteria::{check_records, exit_code, Criterion};
use unitcrit_core::field::FieldConfig;
use unitcrit_core::poly::modp::DEFAULT_SEED;
use unitcrit_core::record::{bundled_records, parse_records, FieldRecord};
use unitcrit_core::report::{analyze_field, ReportDocument, SolutionListing};
use unitcrit_core::units::{solve_s_unit_equation, solve_unit_equation, verify_cyclotomic_identities};

/// Exact checks of unit-equation and asymptotic Fermat criteria over number fields.
#[derive(Parser, Debug)]
#[command(name = "unitcrit", version)]
struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for the randomized factorization over F_p.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Field invariants and prime splitting.
    Field {
        #[command(subcommand)]
        action: FieldCmd,
    },
    /// Criteria for the unit equation and the asymptotic Fermat theorem.
    Flt {
        #[command(subcommand)]
        action: FltCmd,
    },
    /// Bounded unit and S-unit equation search.
    Uniteq {
        #[command(subcommand)]
        action: UniteqCmd,
    },
    /// Ambiguous class number formula over quadratic fields.
    Chevalley {
        #[command(subcommand)]
        action: ChevalleyCmd,
    },
    /// The cyclotomic solution of the unit equation.
    Cyclotomic {
        #[command(subcommand)]
        action: CyclotomicCmd,
    },
}

#[derive(Args, Debug)]
struct RecordSource {
    /// Record file (JSON lines or a JSON array); the bundled records when omitted.
    records: Option<PathBuf>,
    /// Only the record with this label.
    #[arg(long)]
    label: Option<String>,
}

impl RecordSource {
    fn load(&self) -> Result<Vec<FieldRecord>> {
        let all = match &self.records {
            Some(p) => parse_records(p)?,
            None => bundled_records(),
        };
        match &self.label {
            None => Ok(all),
            Some(l) => {
                let picked: Vec<_> = all.into_iter().filter(|r| &r.label == l).collect();
                if picked.is_empty() {
                    bail!("no record labelled {l:?}");
                }
                Ok(picked)
            }
        }
    }
}

#[derive(Subcommand, Debug)]
enum FieldCmd {
    /// Degree, signature, certified splitting at the given primes, Evertse bound.
    Analyze {
        #[command(flatten)]
        source: RecordSource,
        /// Prime to report splitting at; repeatable.
        #[arg(long = "prime")]
        primes: Vec<u64>,
        /// Also decide whether the field is Galois.
        #[arg(long)]
        galois: bool,
    },
}

#[derive(Subcommand, Debug)]
enum FltCmd {
    /// Run criteria on records. Exit 0 if all conclusive, 1 if any inconclusive, 2 on error.
    Check {
        #[command(flatten)]
        source: RecordSource,
        /// Prime for the prime-dependent criteria; scanned from the discriminant when omitted.
        #[arg(long)]
        prime: Option<u64>,
        /// Criterion to run; all when omitted.
        #[arg(long)]
        criterion: Option<Criterion>,
    },
}

#[derive(Subcommand, Debug)]
enum UniteqCmd {
    /// Solutions of lambda + mu = 1 within an exponent box.
    Search {
        #[command(flatten)]
        source: RecordSource,
        /// Exponent bound B for each unit generator.
        #[arg(long)]
        bound: u32,
        /// Search {q}-units for q = 2 O_F instead of units.
        #[arg(long)]
        s_unit: bool,
        /// Bound on the power of 2 in S-unit search.
        #[arg(long, default_value_t = 1, requires = "s_unit")]
        k_bound: u32,
    },
}

#[derive(Subcommand, Debug)]
enum ChevalleyCmd {
    /// Compare both sides for squarefree d in [min, max].
    Scan {
        #[arg(long, default_value_t = -300, allow_hyphen_values = true)]
        min: i64,
        #[arg(long, default_value_t = 300, allow_hyphen_values = true)]
        max: i64,
    },
}

#[derive(Subcommand, Debug)]
enum CyclotomicCmd {
    /// Verify the identities for lambda = 2 + zeta + zeta^-1 in Q(zeta_p).
    Verify {
        /// Prime p >= 5; repeatable.
        #[arg(long = "p", required = true)]
        primes: Vec<u64>,
    },
}

fn run(cli: &Cli) -> Result<(ReportDocument, u8)> {
    let config = FieldConfig { seed: cli.seed, ..FieldConfig::default() };
    Ok(match &cli.command {
        Command::Field { action: FieldCmd::Analyze { source, primes, galois } } => {
            let items = source
                .load()?
                .iter()
                .map(|r| {
                    let field = r.field_with(config).with_context(|| format!("record {}", r.label))?;
                    Ok(analyze_field(r, &field, primes, *galois)?)
                })
                .collect::<Result<Vec<_>>>()?;
            (ReportDocument::Fields(items), 0)
        }
        Command::Flt { action: FltCmd::Check { source, prime, criterion } } => {
            let records = source.load()?;
            let criteria: Vec<Criterion> = match criterion {
                Some(c) => vec![*c],
                None => Criterion::ALL.to_vec(),
            };
            let reports = check_records(&records, *prime, &criteria);
            let code = exit_code(&reports) as u8;
            (ReportDocument::Criteria(reports), code)
        }
        Command::Uniteq { action: UniteqCmd::Search { source, bound, s_unit, k_bound } } => {
            let mut listings = Vec::new();
            for r in source.load()? {
                let field = r.field_with(config).with_context(|| format!("record {}", r.label))?;
                let group = r
                    .unit_group(&field)?
                    .with_context(|| format!("record {} has no unit generators", r.label))?;
                let result = if *s_unit {
                    solve_s_unit_equation(&group, *bound, *k_bound)?
                } else {
                    solve_unit_equation(&group, *bound)?
                };
                listings.push(SolutionListing::new(&r.label, group.rank(), &result));
            }
            (ReportDocument::Solutions(listings), 0)
        }
        Command::Chevalley { action: ChevalleyCmd::Scan { min, max } } => {
            let reports = chevalley_scan(*min, *max)?;
            let code = u8::from(reports.iter().any(|r| !r.holds()));
            (ReportDocument::Chevalley(reports), code)
        }
        Command::Cyclotomic { action: CyclotomicCmd::Verify { primes } } => {
            let reports = primes
                .iter()
                .map(|&p| verify_cyclotomic_identities(p))
                .collect::<unitcrit_core::Result<Vec<_>>>()?;
            let code = u8::from(reports.iter().any(|r| !r.all_hold()));
            (ReportDocument::Cyclotomic(reports), code)
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((doc, code)) => {
            if cli.json {
                println!("{}", doc.to_json());
            } else {
                print!("{}", doc.to_text());
            }
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
