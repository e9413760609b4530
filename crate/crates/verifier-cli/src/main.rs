//! `verify <suite> [--p LIST] [--max-n N] [--q LIST] [--seed S]
//! [--json PATH] [--caps FILE]`
//!
//! Exit codes: 0 all pass, 1 some case failed, 2 configuration error,
//! 3 a resource-cap "unknown" outcome with `fail_on_unknown` set.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use verifier_cli::{run_suite, CapsConfig, SuiteConfig, SuiteName};

#[derive(Parser)]
#[command(
    name = "verify",
    about = "Exact verification suites for chart-level log geometry and thickened-line cohomology",
    disable_help_subcommand = true
)]
struct Cli {
    /// one of: monoid-properties, chart-lemmas, torsor-selfproduct,
    /// cohomology-fixedpoints, kummer-surjectivity, hom-tables,
    /// decomposition
    suite: String,

    /// primes of the grid, comma separated
    #[arg(long = "p", value_delimiter = ',')]
    p: Option<Vec<u32>>,

    /// largest thickening exponent n
    #[arg(long = "max-n")]
    max_n: Option<u32>,

    /// field sizes of the grid, comma separated (powers of listed primes)
    #[arg(long = "q", value_delimiter = ',')]
    q: Option<Vec<u32>>,

    /// seed for the randomized properties
    #[arg(long)]
    seed: Option<u64>,

    /// write the JSON report here (text goes to stdout either way)
    #[arg(long)]
    json: Option<PathBuf>,

    /// JSON file overriding the resource caps
    #[arg(long)]
    caps: Option<PathBuf>,
}

fn build_config(cli: &Cli) -> Result<SuiteConfig, String> {
    let mut cfg = SuiteConfig::default();
    if let Some(path) = &cli.caps {
        let text = std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read caps file {}: {e}", path.display()))?;
        cfg.caps = serde_json::from_str::<CapsConfig>(&text)
            .map_err(|e| format!("invalid caps file {}: {e}", path.display()))?;
    }
    if let Some(p) = &cli.p {
        cfg.primes = p.clone();
        cfg.primes.sort_unstable();
        cfg.primes.dedup();
        // default field sizes follow the primes unless overridden
        cfg.field_sizes = cfg.primes.iter().flat_map(|&p| [p, p * p]).collect();
    }
    if let Some(n) = cli.max_n {
        cfg.max_n = n;
    }
    if let Some(q) = &cli.q {
        cfg.field_sizes = q.clone();
        cfg.field_sizes.sort_unstable();
        cfg.field_sizes.dedup();
    }
    if let Some(s) = cli.seed {
        cfg.seed = s;
    }
    cfg.validate()?;
    Ok(cfg)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let Some(suite) = SuiteName::parse(&cli.suite) else {
        eprintln!(
            "configuration error: unknown suite {:?}; expected one of {}",
            cli.suite,
            SuiteName::ALL.map(|s| s.as_str()).join(", ")
        );
        return ExitCode::from(2);
    };
    let cfg = match build_config(&cli) {
        Ok(cfg) => cfg,
        Err(msg) => {
            eprintln!("configuration error: {msg}");
            return ExitCode::from(2);
        }
    };
    let report = match run_suite(&cfg, suite) {
        Ok(r) => r,
        Err(msg) => {
            eprintln!("configuration error: {msg}");
            return ExitCode::from(2);
        }
    };
    print!("{}", report.to_text());
    if let Some(path) = &cli.json {
        if let Err(e) = std::fs::write(path, report.to_json()) {
            eprintln!("cannot write report {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    if !report.passed() {
        return ExitCode::from(1);
    }
    if report.has_unknown() && cfg.caps.fail_on_unknown {
        return ExitCode::from(3);
    }
    ExitCode::SUCCESS
}
