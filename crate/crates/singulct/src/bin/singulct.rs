//! Thin command-line front end; all functionality lives in the library.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use singulct::error::Error;
use singulct::exact::parse_polynomial;
use singulct::exact::poly::Polynomial;
use singulct::expsum::{decay_profile, SubschemePreset, SubschemeSpec, TwistSample};
use singulct::harness::report::{fmt_opt_exponent, Report, ReportFormat, Verdict};
use singulct::harness::verify::{self, config_echo};
use singulct::harness::RunConfig;
use singulct::invariants::{FamilyDescriptor, MilnorMode};

#[derive(Parser)]
#[command(
    name = "singulct",
    version,
    about = "Hypersurface singularity invariants and p-adic exponential sums"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct OutputArgs {
    /// Report format: json or csv
    #[arg(long, default_value = "json")]
    format: String,
    /// Persist the report to this path
    #[arg(long)]
    out: Option<String>,
}

#[derive(Args, Clone)]
struct PolyArgs {
    /// Polynomial text, e.g. "x^3 - y^2"
    #[arg(long)]
    poly: Option<String>,
    /// Comma-separated variable names, e.g. x,y
    #[arg(long)]
    vars: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Invariants of a family member (--family diag:n,d | det:n) or an
    /// explicit polynomial (--poly ... --vars ...)
    Invariants {
        /// Family selector: diag:n,d or det:n
        #[arg(long)]
        family: Option<String>,
        #[command(flatten)]
        poly: PolyArgs,
        /// Milnor-number arithmetic: exact or modular
        #[arg(long, default_value = "exact")]
        milnor_mode: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Exponential-sum decay profile for a polynomial
    Expsum {
        #[command(flatten)]
        poly: PolyArgs,
        /// Comma-separated primes
        #[arg(long, value_delimiter = ',', default_value = "3,5,7")]
        primes: Vec<u64>,
        /// Largest modulus exponent m
        #[arg(long, default_value_t = 4)]
        mmax: u32,
        /// Restriction subscheme: full, hyp, or origin
        #[arg(long, default_value = "full")]
        z: String,
        /// Twist sweep: auto, all, or a count k
        #[arg(long, default_value = "auto")]
        twists: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Verification suites: thmB, moi, or localization
    Verify {
        #[arg(long)]
        suite: String,
        #[command(flatten)]
        poly: PolyArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run the full default suite and persist the report
    Report {
        #[command(flatten)]
        output: OutputArgs,
    },
}

const EXIT_USAGE: u8 = 64;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Render clap's message but keep our usage exit code; help and
            // version requests still exit 0.
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(error_exit_code(&e))
        }
    }
}

fn error_exit_code(e: &Error) -> u8 {
    match e {
        Error::Syntax { .. }
        | Error::UnknownVariable { .. }
        | Error::InvalidExponent { .. }
        | Error::InvalidConfig(_)
        | Error::InvalidFamily(_)
        | Error::EmptyInput(_)
        | Error::UnsupportedInput(_) => EXIT_USAGE,
        Error::Inconclusive(_) | Error::BudgetExceeded { .. } => 2,
        _ => 1,
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    let cfg = RunConfig::from_env();
    match cli.command {
        Command::Invariants {
            family,
            poly,
            milnor_mode,
            output,
        } => {
            let mut cfg = cfg;
            cfg.milnor.mode = match milnor_mode.as_str() {
                "exact" => MilnorMode::Exact,
                "modular" => MilnorMode::Modular,
                other => {
                    return Err(Error::InvalidConfig(format!(
                        "unknown milnor mode `{}`",
                        other
                    )))
                }
            };
            let report = match (family, poly.poly) {
                (Some(spec), None) => {
                    let fam = parse_family(&spec)?;
                    verify::run_family_report(&fam, &cfg)?
                }
                (None, Some(text)) => {
                    let f = parse_poly_arg(&text, &poly.vars)?;
                    polynomial_report(&f, &cfg)?
                }
                _ => {
                    return Err(Error::InvalidConfig(
                        "pass exactly one of --family or --poly".to_string(),
                    ))
                }
            };
            print_family_summary(&report);
            persist(&report, &output)?;
            Ok(ExitCode::from(report.verdict.exit_code() as u8))
        }
        Command::Expsum {
            poly,
            primes,
            mmax,
            z,
            twists,
            output,
        } => {
            let text = poly
                .poly
                .ok_or_else(|| Error::InvalidConfig("--poly is required".to_string()))?;
            let f = parse_poly_arg(&text, &poly.vars)?;
            let preset = parse_preset(&z)?;
            let zspec = SubschemeSpec::from_preset(preset, &f)?;
            let sample = parse_twists(&twists)?;
            let profile = decay_profile(&f, &zspec, &primes, mmax, sample, cfg.budget)?;
            let mut report = Report::new(config_echo(&cfg));
            report
                .decay
                .push(decay_section_for_cli(&f, preset, &profile));
            for section in &report.decay {
                println!("poly: {}   Z: {}", section.poly, section.z);
                for row in &section.rows {
                    println!(
                        "  p={} m={}  max|E|={}  s={}  twists={}{}",
                        row.p,
                        row.m,
                        row.max_abs,
                        row.exponent,
                        row.twists,
                        if row.exact_zero {
                            "  (certified zero)"
                        } else {
                            ""
                        }
                    );
                }
                for (p, s) in &section.sigma_hat_per_prime {
                    println!("  sigma_hat(p={}) = {}", p, s);
                }
                println!("  sigma_hat = {}  (empirical estimate)", section.sigma_hat);
            }
            persist(&report, &output)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            suite,
            poly,
            output,
        } => {
            let report = match suite.as_str() {
                "thmB" | "thmb" => verify::verify_thm_b(&cfg.default_grid(), &cfg)?,
                "moi" => {
                    let f = match poly.poly {
                        Some(text) => parse_poly_arg(&text, &poly.vars)?,
                        None => singulct::exact::parse("x1^3 + x2^3", &["x1", "x2"])?,
                    };
                    let primes: Vec<u64> = cfg.primes.iter().copied().filter(|&p| p >= 5).collect();
                    verify::verify_moi_bound(&f, SubschemePreset::FullSpace, &primes, 3, &cfg)?
                }
                "localization" => verify::verify_localization(&cfg)?,
                other => return Err(Error::InvalidConfig(format!("unknown suite `{}`", other))),
            };
            for check in &report.checks {
                println!("{:<24} {:?}  {}", check.name, check.verdict, check.detail);
            }
            println!("verdict: {:?}", report.verdict);
            persist(&report, &output)?;
            Ok(ExitCode::from(report.verdict.exit_code() as u8))
        }
        Command::Report { output } => {
            let report = verify::full_suite(&cfg)?;
            let path = output
                .out
                .clone()
                .ok_or_else(|| Error::InvalidConfig("--out is required for report".to_string()))?;
            persist(&report, &output)?;
            println!(
                "report written to {} ({} families, {} checks)",
                path,
                report.families.len(),
                report.checks.len()
            );
            println!("verdict: {:?}", report.verdict);
            Ok(ExitCode::from(report.verdict.exit_code() as u8))
        }
    }
}

fn parse_family(spec: &str) -> Result<FamilyDescriptor, Error> {
    let bad = || Error::InvalidFamily(format!("cannot parse `{}` (want diag:n,d or det:n)", spec));
    if let Some(rest) = spec.strip_prefix("diag:") {
        let mut it = rest.split(',');
        let n = it
            .next()
            .and_then(|s| s.trim().parse().ok())
            .ok_or_else(bad)?;
        let d = it
            .next()
            .and_then(|s| s.trim().parse().ok())
            .ok_or_else(bad)?;
        if it.next().is_some() {
            return Err(bad());
        }
        return FamilyDescriptor::diagonal(n, d);
    }
    if let Some(rest) = spec.strip_prefix("det:") {
        let n = rest.trim().parse().map_err(|_| bad())?;
        return FamilyDescriptor::determinantal(n);
    }
    Err(bad())
}

fn parse_poly_arg(text: &str, vars: &Option<String>) -> Result<Polynomial, Error> {
    let vars = vars
        .as_ref()
        .ok_or_else(|| Error::InvalidConfig("--vars is required with --poly".to_string()))?;
    let names: Vec<String> = vars.split(',').map(|s| s.trim().to_string()).collect();
    parse_polynomial(text, &names)
}

fn parse_preset(z: &str) -> Result<SubschemePreset, Error> {
    match z {
        "full" => Ok(SubschemePreset::FullSpace),
        "hyp" => Ok(SubschemePreset::HypersurfaceOfF),
        "origin" => Ok(SubschemePreset::OriginOnly),
        other => Err(Error::InvalidConfig(format!(
            "unknown subscheme `{}`",
            other
        ))),
    }
}

fn parse_twists(s: &str) -> Result<TwistSample, Error> {
    match s {
        "auto" => Ok(TwistSample::Auto),
        "all" => Ok(TwistSample::All),
        k => k.parse::<u32>().map(TwistSample::First).map_err(|_| {
            Error::InvalidConfig(format!("twists must be auto, all, or a count, got `{}`", k))
        }),
    }
}

fn polynomial_report(f: &Polynomial, cfg: &RunConfig) -> Result<Report, Error> {
    use singulct::harness::report::FamilyRow;
    use singulct::invariants::bundle_for_polynomial;

    if let Some(fam) = singulct::invariants::recognize(f) {
        return verify::run_family_report(&fam, cfg);
    }
    let bundle = bundle_for_polynomial(f, &cfg.milnor)?;
    let mut report = Report::new(config_echo(cfg));
    report.families.push(FamilyRow {
        family: format!("{}", f),
        n: f.n_vars() as u32,
        d: None,
        lct_pair: bundle.lct_pair.to_string(),
        lct_pair_pathway: bundle.lct_pair_pathway.label().to_string(),
        lct_f: bundle.lct_f.to_string(),
        min_exp_pathway: if bundle.min_exp.is_some() {
            "closed-form"
        } else {
            "-"
        }
        .to_string(),
        min_exp: bundle
            .min_exp
            .map(|a| a.to_string())
            .unwrap_or_else(|| "unknown".to_string()),
        milnor_pathway: if bundle.milnor.is_some() {
            "colength"
        } else {
            "-"
        }
        .to_string(),
        milnor: bundle
            .milnor
            .map(|m| m.to_string())
            .unwrap_or_else(|| "unknown".to_string()),
        rs: bundle.rational_singularities,
        thm_a_verdict: Verdict::Pass,
        thm_b_verdict: Verdict::Pass,
        thm_b_strict: None,
    });
    report.recompute_verdict();
    Ok(report)
}

fn print_family_summary(report: &Report) {
    for row in &report.families {
        println!("family: {}", row.family);
        println!(
            "  lct(f, J_f^2) = {}   [{}]",
            row.lct_pair, row.lct_pair_pathway
        );
        println!("  lct(f)        = {}", row.lct_f);
        println!("  min exponent  = {}", row.min_exp);
        println!("  milnor number = {}", row.milnor);
        println!("  rational singularities: {}", row.rs);
        if let Some(strict) = row.thm_b_strict {
            println!(
                "  min_exp ≥ lct_pair: {:?} ({})",
                row.thm_b_verdict,
                if strict { "strict" } else { "equality" }
            );
        }
    }
}

fn decay_section_for_cli(
    f: &Polynomial,
    preset: SubschemePreset,
    profile: &singulct::expsum::DecayProfile,
) -> singulct::harness::report::DecaySection {
    use singulct::harness::report::{DecayRow, DecaySection};
    DecaySection {
        poly: format!("{}", f),
        z: preset.label().to_string(),
        rows: profile
            .records
            .iter()
            .map(|r| DecayRow {
                p: r.p,
                m: r.m,
                max_abs: singulct::harness::report::fmt_f64(r.max_abs),
                exponent: fmt_opt_exponent(r.exponent),
                twists: r.twists_sampled,
                exact_zero: r.all_exact_zero,
            })
            .collect(),
        sigma_hat_per_prime: profile
            .sigma_hat_per_prime
            .iter()
            .map(|(p, s)| (*p, fmt_opt_exponent(*s)))
            .collect(),
        sigma_hat: fmt_opt_exponent(profile.sigma_hat),
    }
}

fn persist(report: &Report, output: &OutputArgs) -> Result<(), Error> {
    let format: ReportFormat = output.format.parse()?;
    if let Some(path) = &output.out {
        report.write_to(format, path)?;
    }
    Ok(())
}
