mod args;
mod render;

use std::process::ExitCode;

use clap::Parser;
use serde_json::json;
use su3coh::classify::{count_diffeo_classes, emit_tables, named_example};
use su3coh::geomverify::{run_suite, SuiteConfig, SuiteKind};
use su3coh::{Descriptor, Error, Tolerances, TubeDescriptor};

use args::{Cli, CliConfig, Command, OutputFormat, VerifyTarget};

const EXIT_NEGATIVE: u8 = 1;
const EXIT_USAGE: u8 = 2;

/// A command failure, mapped to an exit code.
enum Failure {
    Usage(String),
    Negative(String),
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Negative(format!("csv output failed: {e}"))
    }
}

fn usage(e: Error) -> Failure {
    Failure::Usage(e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Negative(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_NEGATIVE)
        }
    }
}

fn run(cli: &Cli) -> Result<u8, Failure> {
    let cfg = &cli.config;
    let tol = Tolerances::new(cfg.tol_mat, cfg.tol_rank).map_err(usage)?;
    match &cli.command {
        Command::Tables => cmd_tables(cfg),
        Command::Classify { first, second } => cmd_classify(first, second, cfg),
        Command::Verify { which } => cmd_verify(*which, cfg, tol),
        Command::Stabilizer { descriptor } => cmd_stabilizer(&descriptor.join(" "), cfg),
    }
}

fn cmd_tables(cfg: &CliConfig) -> Result<u8, Failure> {
    let set = emit_tables(cfg.bound);
    let text = match cfg.output_format {
        OutputFormat::Markdown => render::tables_markdown(&set),
        OutputFormat::Csv => render::tables_csv(&set)?,
        OutputFormat::Json => pretty(&set),
    };
    print!("{text}");
    Ok(0)
}

fn parse_tube(text: &str) -> Result<TubeDescriptor, Failure> {
    text.parse::<TubeDescriptor>().map_err(usage)
}

fn cmd_classify(first: &str, second: &str, cfg: &CliConfig) -> Result<u8, Failure> {
    let (t1, t2) = (parse_tube(first)?, parse_tube(second)?);
    let result = count_diffeo_classes(&t1, &t2).map_err(|e| Failure::Negative(e.to_string()))?;
    let example = named_example(&t1, &t2).unwrap_or("");
    let fields = [
        ("first", t1.to_string()),
        ("second", t2.to_string()),
        ("count", result.count.to_string()),
        ("reason", result.reason.to_string()),
        ("named_example", example.to_string()),
    ];
    let text = match cfg.output_format {
        OutputFormat::Markdown => render::record_markdown(&fields),
        OutputFormat::Csv => render::record_csv(&fields)?,
        OutputFormat::Json => pretty(&json!({
            "first": t1.to_string(),
            "second": t2.to_string(),
            "count": result.count,
            "reason": result.reason,
            "named_example": named_example(&t1, &t2),
        })),
    };
    print!("{text}");
    Ok(if result.count > 0 { 0 } else { EXIT_NEGATIVE })
}

fn cmd_verify(which: VerifyTarget, cfg: &CliConfig, tol: Tolerances<f64>) -> Result<u8, Failure> {
    let kind = match which {
        VerifyTarget::Consim => SuiteKind::Consim,
        VerifyTarget::Grassmann => SuiteKind::Grassmann,
        VerifyTarget::TorusLemma => SuiteKind::TorusLemma,
        VerifyTarget::All => SuiteKind::All,
    };
    let mut suite = SuiteConfig::new(cfg.seed, cfg.samples as usize, tol);
    suite.bound = cfg.bound;
    let reports = run_suite(kind, &suite).map_err(usage)?;
    let text = match cfg.output_format {
        OutputFormat::Markdown => render::reports_markdown(cfg.seed, &reports),
        OutputFormat::Csv => render::reports_csv(cfg.seed, &reports)?,
        OutputFormat::Json => pretty(&render::SeededReports {
            seed: cfg.seed,
            reports: &reports,
        }),
    };
    print!("{text}");
    let failed: Vec<&str> = reports
        .iter()
        .filter(|r| !r.passed)
        .map(|r| r.check_name.as_str())
        .collect();
    if failed.is_empty() {
        Ok(0)
    } else {
        eprintln!("failed checks: {}", failed.join(", "));
        Ok(EXIT_NEGATIVE)
    }
}

fn cmd_stabilizer(text: &str, cfg: &CliConfig) -> Result<u8, Failure> {
    let descriptor: Descriptor = text.parse().map_err(usage)?;
    let stabilizer = match descriptor {
        Descriptor::Tube(t) => t.principal_stabilizer(),
        Descriptor::Slice(s) => su3coh::reps::principal_stabilizer(&s),
    };
    let circle = stabilizer.circle;
    let triple = circle.triple();
    let fields = [
        ("descriptor", descriptor.to_string()),
        ("circle", circle.to_string()),
        ("class", circle.class().to_string()),
        (
            "triple",
            format!("({},{},{})", triple[0], triple[1], triple[2]),
        ),
        ("h", stabilizer.finite_part.to_string()),
    ];
    let out = match cfg.output_format {
        OutputFormat::Markdown => render::record_markdown(&fields),
        OutputFormat::Csv => render::record_csv(&fields)?,
        OutputFormat::Json => pretty(&json!({
            "descriptor": descriptor.to_string(),
            "circle": { "k": circle.k(), "l": circle.l() },
            "class": circle.class(),
            "triple": triple,
            "h": stabilizer.finite_part,
        })),
    };
    print!("{out}");
    Ok(0)
}

fn pretty<T: serde::Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("serializable output");
    text.push('\n');
    text
}
