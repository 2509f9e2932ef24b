//! Sweep configuration: CLI flags layered over an optional `key = value`
//! config file, with full validation before anything runs.
//!
//! Config-file keys are identical to the long CLI flags; CLI values win.
//! All errors name the offending token.

use std::f64::consts::FRAC_PI_4;

use unruh_core::{RindlerRegion, StateFamily};

/// Per-axis cap in grid mode (64^3 = 262144 points).
pub const GRID_STEPS_CAP: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepMode {
    Equal,
    Grid,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Jsonl,
}

/// Which measures a sweep evaluates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MeasureSet {
    pub fidelity: bool,
    pub capacity: bool,
    pub negativity: bool,
}

impl MeasureSet {
    pub const ALL: MeasureSet = MeasureSet {
        fidelity: true,
        capacity: true,
        negativity: true,
    };

    fn none() -> MeasureSet {
        MeasureSet {
            fidelity: false,
            capacity: false,
            negativity: false,
        }
    }

    fn is_empty(&self) -> bool {
        !(self.fidelity || self.capacity || self.negativity)
    }
}

#[derive(Debug, Clone)]
pub struct SweepConfig {
    /// Families in declaration order (W, GHZ, GHZ-like), regardless of how
    /// the flags were given; output ordering depends on this.
    pub families: Vec<StateFamily>,
    /// Regions in order I, II.
    pub regions: Vec<RindlerRegion>,
    pub r_start: f64,
    pub r_end: f64,
    pub steps: usize,
    pub mode: SweepMode,
    pub measures: MeasureSet,
    pub output_path: String,
    pub format: OutputFormat,
    pub plot_path: Option<String>,
    pub threads: usize,
    pub seed: u64,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            families: StateFamily::ALL.to_vec(),
            regions: RindlerRegion::ALL.to_vec(),
            r_start: 0.0,
            r_end: FRAC_PI_4,
            steps: 100,
            mode: SweepMode::Equal,
            measures: MeasureSet::ALL,
            output_path: "sweep.csv".to_string(),
            format: OutputFormat::Csv,
            plot_path: None,
            threads: 1,
            seed: 42,
        }
    }
}

/// One `key = value` assignment, from either source.
#[derive(Debug, Clone)]
struct Assignment {
    key: String,
    value: String,
}

/// Parses the `sweep` subcommand arguments, loading `--config` first so
/// explicit flags override file values.
pub fn parse_config(args: &[String]) -> Result<SweepConfig, String> {
    let cli = collect_cli_assignments(args)?;

    let mut assignments: Vec<Assignment> = Vec::new();
    if let Some(config_path) = cli.iter().rev().find(|a| a.key == "config") {
        let text = std::fs::read_to_string(&config_path.value)
            .map_err(|e| format!("cannot read config file {}: {e}", config_path.value))?;
        assignments.extend(parse_config_file(&text)?);
    }
    assignments.extend(cli.into_iter().filter(|a| a.key != "config"));

    apply_assignments(assignments)
}

fn collect_cli_assignments(args: &[String]) -> Result<Vec<Assignment>, String> {
    let mut out = Vec::new();
    let mut i = 0;
    while i < args.len() {
        let arg = &args[i];
        let Some(flag) = arg.strip_prefix("--") else {
            return Err(format!("unexpected argument \"{arg}\" (flags start with --)"));
        };
        let (key, value) = if let Some((k, v)) = flag.split_once('=') {
            (k.to_string(), v.to_string())
        } else if flag == "strict" {
            return Err("flag \"--strict\" belongs to the check subcommand".to_string());
        } else {
            i += 1;
            let Some(v) = args.get(i) else {
                return Err(format!("flag \"--{flag}\" is missing a value"));
            };
            (flag.to_string(), v.clone())
        };
        if !is_known_key(&key) {
            return Err(format!("unknown flag \"--{key}\""));
        }
        out.push(Assignment { key, value });
        i += 1;
    }
    Ok(out)
}

fn is_known_key(key: &str) -> bool {
    matches!(
        key,
        "state"
            | "region"
            | "r-start"
            | "r-end"
            | "steps"
            | "mode"
            | "measures"
            | "out"
            | "format"
            | "plot"
            | "threads"
            | "config"
            | "seed"
    )
}

/// Flat `key = value` lines; `#` starts a comment; blank lines ignored.
fn parse_config_file(text: &str) -> Result<Vec<Assignment>, String> {
    let mut out = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(format!(
                "config line {}: expected \"key = value\", got \"{raw}\"",
                lineno + 1
            ));
        };
        let key = key.trim().to_string();
        if key == "config" {
            return Err(format!("config line {}: nested config files are not supported", lineno + 1));
        }
        if !is_known_key(&key) {
            return Err(format!("config line {}: unknown key \"{key}\"", lineno + 1));
        }
        out.push(Assignment {
            key,
            value: value.trim().to_string(),
        });
    }
    Ok(out)
}

fn apply_assignments(assignments: Vec<Assignment>) -> Result<SweepConfig, String> {
    let mut config = SweepConfig::default();
    // `--state` is repeatable and accumulates; the first occurrence resets
    // the default so "ghz" alone means just GHZ.
    let mut family_selection: Option<[bool; 3]> = None;

    for Assignment { key, value } in assignments {
        match key.as_str() {
            "state" => {
                let selection = family_selection.get_or_insert([false; 3]);
                for token in value.split(',').map(str::trim).filter(|t| !t.is_empty()) {
                    if token.eq_ignore_ascii_case("all") {
                        *selection = [true; 3];
                    } else {
                        let family: StateFamily = token.parse()?;
                        selection[family_position(family)] = true;
                    }
                }
            }
            "region" => {
                config.regions = if value.eq_ignore_ascii_case("both") {
                    RindlerRegion::ALL.to_vec()
                } else {
                    vec![value.parse::<RindlerRegion>()?]
                };
            }
            "r-start" => config.r_start = parse_r(&key, &value)?,
            "r-end" => config.r_end = parse_r(&key, &value)?,
            "steps" => {
                config.steps = value
                    .parse::<usize>()
                    .map_err(|_| format!("steps must be a positive integer, got \"{value}\""))?;
            }
            "mode" => {
                config.mode = match value.to_ascii_lowercase().as_str() {
                    "equal" => SweepMode::Equal,
                    "grid" => SweepMode::Grid,
                    _ => return Err(format!("unknown mode \"{value}\" (expected equal or grid)")),
                };
            }
            "measures" => {
                let mut set = MeasureSet::none();
                for token in value.split(',').map(str::trim).filter(|t| !t.is_empty()) {
                    match token.to_ascii_lowercase().as_str() {
                        "fidelity" => set.fidelity = true,
                        "capacity" => set.capacity = true,
                        "negativity" => set.negativity = true,
                        "all" => set = MeasureSet::ALL,
                        _ => {
                            return Err(format!(
                                "unknown measure \"{token}\" (expected fidelity, capacity, negativity)"
                            ))
                        }
                    }
                }
                config.measures = set;
            }
            "out" => config.output_path = value,
            "format" => {
                config.format = match value.to_ascii_lowercase().as_str() {
                    "csv" => OutputFormat::Csv,
                    "jsonl" => OutputFormat::Jsonl,
                    _ => return Err(format!("unknown format \"{value}\" (expected csv or jsonl)")),
                };
            }
            "plot" => config.plot_path = Some(value),
            "threads" => {
                config.threads = value
                    .parse::<usize>()
                    .map_err(|_| format!("threads must be a positive integer, got \"{value}\""))?;
            }
            "seed" => {
                config.seed = value
                    .parse::<u64>()
                    .map_err(|_| format!("seed must be a non-negative integer, got \"{value}\""))?;
            }
            _ => unreachable!("keys are validated before application"),
        }
    }

    if let Some(selection) = family_selection {
        config.families = StateFamily::ALL
            .into_iter()
            .filter(|f| selection[family_position(*f)])
            .collect();
    }

    validate(&config)?;
    Ok(config)
}

fn family_position(family: StateFamily) -> usize {
    StateFamily::ALL.iter().position(|f| *f == family).expect("family in ALL")
}

fn parse_r(key: &str, value: &str) -> Result<f64, String> {
    let r: f64 = value
        .parse()
        .map_err(|_| format!("{key} must be a number, got \"{value}\""))?;
    if !r.is_finite() || !(0.0..=FRAC_PI_4 + 1e-12).contains(&r) {
        return Err(format!("{key} = {value} is outside [0, pi/4]"));
    }
    Ok(r.min(FRAC_PI_4))
}

fn validate(config: &SweepConfig) -> Result<(), String> {
    if config.families.is_empty() {
        return Err("no state family selected".to_string());
    }
    if config.measures.is_empty() {
        return Err("no measure selected".to_string());
    }
    if config.steps < 2 {
        return Err(format!("steps must be at least 2, got {}", config.steps));
    }
    if config.r_start > config.r_end {
        return Err(format!(
            "r-start {} exceeds r-end {}",
            config.r_start, config.r_end
        ));
    }
    if config.mode == SweepMode::Grid && config.steps > GRID_STEPS_CAP {
        return Err(format!(
            "grid mode caps steps at {GRID_STEPS_CAP} per axis, got {}",
            config.steps
        ));
    }
    if config.threads == 0 {
        return Err("threads must be at least 1".to_string());
    }
    Ok(())
}
