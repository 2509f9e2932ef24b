use std::process::ExitCode;

use unruh_sweep::{check, config, output, plot, sweep};

const EXIT_USAGE: u8 = 1;
const EXIT_NUMERIC: u8 = 2;
const EXIT_STRICT: u8 = 3;

const USAGE: &str = "\
unruh-sweep — accelerated tripartite channels: sweeps, charts, closed-form audits

USAGE:
    unruh-sweep sweep [OPTIONS]     run an acceleration sweep
    unruh-sweep check [OPTIONS]     audit the closed forms against the pipeline
    unruh-sweep help                print this text

SWEEP OPTIONS:
    --state <w|ghz|ghz-like|all>    family to sweep; repeatable (default all)
    --region <I|II|both>            Rindler region (default both)
    --r-start <float>               sweep start in [0, pi/4] (default 0)
    --r-end <float>                 sweep end in [0, pi/4] (default pi/4)
    --steps <int>                   grid points, >= 2 (default 100)
    --mode <equal|grid>             equal accelerations or full triple grid (default equal)
    --measures <list>               comma list of fidelity,capacity,negativity (default all)
    --out <path>                    data output path (default sweep.csv)
    --format <csv|jsonl>            data format (default csv)
    --plot <path>                   also write an SVG chart (equal mode only)
    --threads <int>                 worker threads (default 1; output is identical)
    --config <path>                 key = value file; CLI flags override it
    --seed <int>                    audit seed carried in the config (default 42)

CHECK OPTIONS:
    --samples <int>                 triples per closed form (default 100)
    --seed <int>                    sampling seed (default 42)
    --strict                        exit 3 if any max error exceeds 1e-10
    --out <path>                    report path (default stdout)

EXIT STATUS:
    0 success, 1 usage/config error, 2 numeric-invariant violation,
    3 strict-mode audit failure
";

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    match args.first().map(String::as_str) {
        Some("sweep") => run_sweep_command(&args[1..]),
        Some("check") => run_check_command(&args[1..]),
        Some("help") | Some("--help") | Some("-h") => {
            print!("{USAGE}");
            ExitCode::SUCCESS
        }
        Some(other) => {
            eprintln!("error: unknown subcommand \"{other}\"\n");
            eprint!("{USAGE}");
            ExitCode::from(EXIT_USAGE)
        }
        None => {
            eprint!("{USAGE}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn run_sweep_command(args: &[String]) -> ExitCode {
    let config = match config::parse_config(args) {
        Ok(config) => config,
        Err(message) => {
            eprintln!("error: {message}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    let records = match sweep::run_sweep(&config) {
        Ok(records) => records,
        Err(message) => {
            eprintln!("error: {message}");
            return ExitCode::from(EXIT_NUMERIC);
        }
    };
    let payload = match config.format {
        config::OutputFormat::Csv => output::render_csv(&records),
        config::OutputFormat::Jsonl => output::render_jsonl(&records),
    };
    if let Err(e) = std::fs::write(&config.output_path, payload) {
        eprintln!("error: cannot write {}: {e}", config.output_path);
        return ExitCode::from(EXIT_USAGE);
    }
    if let Some(plot_path) = &config.plot_path {
        let svg = match plot::render_chart(&config, &records) {
            Ok(svg) => svg,
            Err(message) => {
                eprintln!("error: {message}");
                return ExitCode::from(EXIT_USAGE);
            }
        };
        if let Err(e) = std::fs::write(plot_path, svg) {
            eprintln!("error: cannot write {plot_path}: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    }
    ExitCode::SUCCESS
}

fn run_check_command(args: &[String]) -> ExitCode {
    let options = match check::parse_check_args(args) {
        Ok(options) => options,
        Err(message) => {
            eprintln!("error: {message}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    match check::run_check(&options) {
        Ok(outcome) => {
            if options.strict && !outcome.clean {
                eprintln!(
                    "strict mode: {} of 12 closed forms exceed 1e-10 (worst {:.3e})",
                    outcome.flagged, outcome.worst_error
                );
                ExitCode::from(EXIT_STRICT)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(EXIT_NUMERIC)
        }
    }
}
