//! Flags, and the `key=value` config file merged underneath them.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "qfield", version, about = "Field-mediated qubit channels: capacity, smearing profiles, broadcasting")]
#[command(args_override_self = true)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Coherent information against λ_φ/σ for the single-Bob channel.
    Capacity(CapacityArgs),
    /// Bob's three smearing functions against r.
    Smearings(SmearingArgs),
    /// Coherent information of an inner and an outer Bob against the split radius r0.
    Broadcast(BroadcastArgs),
    /// Run every invariant suite and report.
    Verify(VerifyArgs),
}

/// Flags shared by every subcommand. Lengths are in units of σ, which is fixed to 1.
#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Output path.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Plain-text `key=value` file of defaults; flags on the command line win.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Worker threads; defaults to the machine's parallelism.
    #[arg(long)]
    pub jobs: Option<usize>,
    /// Relative tolerance of adaptive transforms.
    #[arg(long, default_value_t = 1e-10)]
    pub rel_tol: f64,
    /// Spectral cutoff.
    #[arg(long)]
    pub kmax: Option<f64>,
    /// Window roll-off width of truncated Bobs.
    #[arg(long, default_value_t = 0.1)]
    pub eps: f64,
    /// Time between Alice and Bob.
    #[arg(long, default_value_t = 10.0)]
    pub delta: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DimArg {
    #[value(name = "2")]
    Two,
    #[value(name = "3")]
    Three,
}

impl From<DimArg> for qfield::smearing::Dim {
    fn from(d: DimArg) -> Self {
        match d {
            DimArg::Two => qfield::smearing::Dim::Two,
            DimArg::Three => qfield::smearing::Dim::Three,
        }
    }
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct CapacityArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, value_enum, default_value = "3")]
    pub dim: DimArg,
    #[arg(long, default_value_t = 0.1)]
    pub lambda_min: f64,
    #[arg(long, default_value_t = 1000.0)]
    pub lambda_max: f64,
    /// Log-spaced grid points.
    #[arg(long, default_value_t = 30)]
    pub points: usize,
    /// Fixed λ_π instead of the γ = π/4 rule.
    #[arg(long)]
    pub lambda_pi: Option<f64>,
    /// Sample amplitudes on a k-grid instead of using closed Gaussian moments.
    #[arg(long)]
    pub quadrature: bool,
    /// Also write a gnuplot script next to the CSV.
    #[arg(long)]
    pub plot: bool,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct SmearingArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, value_enum, default_value = "3")]
    pub dim: DimArg,
    /// Radial step.
    #[arg(long, default_value_t = 0.05)]
    pub dr: f64,
    #[arg(long)]
    pub plot: bool,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct BroadcastArgs {
    #[command(flatten)]
    pub common: Common,
    /// λ_φ/σ values; one output file each.
    #[arg(long, value_delimiter = ',', default_value = "10,1000")]
    pub lambdas: Vec<f64>,
    #[arg(long)]
    pub r0_min: Option<f64>,
    #[arg(long)]
    pub r0_max: Option<f64>,
    #[arg(long, default_value_t = 20)]
    pub r0_points: usize,
    #[arg(long)]
    pub plot: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FaultArg {
    WSign,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub common: Common,
    /// Only run suites whose name contains this; repeatable.
    #[arg(long)]
    pub suite: Vec<String>,
    /// Corrupt the computation on purpose, to check that the suites notice.
    #[arg(long, value_enum, hide = true)]
    pub inject_fault: Option<FaultArg>,
}

/// Finds `--config PATH` or `--config=PATH` in raw arguments.
fn config_path(argv: &[String]) -> Option<PathBuf> {
    let mut it = argv.iter();
    while let Some(a) = it.next() {
        if a == "--config" {
            return it.next().map(PathBuf::from);
        }
        if let Some(p) = a.strip_prefix("--config=") {
            return Some(PathBuf::from(p));
        }
    }
    None
}

/// Parses `key=value` lines; blank lines and `#` comments are skipped.
pub fn parse_config(text: &str, origin: &Path) -> Result<Vec<(String, String)>, String> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| format!("{}:{}: expected key=value", origin.display(), i + 1))?;
        let k = k.trim();
        if k.is_empty() || k == "config" {
            return Err(format!("{}:{}: invalid key '{k}'", origin.display(), i + 1));
        }
        out.push((k.replace('_', "-"), v.trim().to_string()));
    }
    Ok(out)
}

/// Inserts config-file entries right after the subcommand, so that later
/// command-line occurrences override them.
pub fn merge_config(argv: Vec<String>) -> Result<Vec<String>, String> {
    let Some(path) = config_path(&argv) else {
        return Ok(argv);
    };
    let text = std::fs::read_to_string(&path)
        .map_err(|e| format!("cannot read config {}: {e}", path.display()))?;
    let entries = parse_config(&text, &path)?;
    let Some(sub) = argv.iter().skip(1).position(|a| !a.starts_with('-')).map(|i| i + 1) else {
        return Ok(argv);
    };
    let mut merged: Vec<String> = argv[..=sub].to_vec();
    for (k, v) in entries {
        if v.eq_ignore_ascii_case("true") {
            merged.push(format!("--{k}"));
        } else if !v.eq_ignore_ascii_case("false") {
            merged.push(format!("--{k}={v}"));
        }
    }
    merged.extend_from_slice(&argv[sub + 1..]);
    Ok(merged)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[&str]) -> Vec<String> {
        v.iter().map(|x| x.to_string()).collect()
    }

    #[test]
    fn config_lines() {
        let got = parse_config("# c\n\nlambda_max = 5\neps=0.2\n", Path::new("f")).unwrap();
        assert_eq!(got, vec![("lambda-max".into(), "5".into()), ("eps".into(), "0.2".into())]);
        assert!(parse_config("oops\n", Path::new("f")).is_err());
    }

    #[test]
    fn flags_after_config_win() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("run.cfg");
        std::fs::write(&p, "points=5\nplot=true\n").unwrap();
        let argv = s(&["qfield", "capacity", "--config", p.to_str().unwrap(), "--points", "7"]);
        let merged = merge_config(argv).unwrap();
        let cli = Cli::try_parse_from(merged).unwrap();
        match cli.command {
            Command::Capacity(a) => {
                assert_eq!(a.points, 7);
                assert!(a.plot);
            }
            _ => panic!("wrong subcommand"),
        }
    }
}
