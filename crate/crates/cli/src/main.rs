mod args;
mod output;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::Parser;
use rayon::prelude::*;

use args::{BroadcastArgs, CapacityArgs, Cli, Command, Common, FaultArg, SmearingArgs, VerifyArgs};
use output::{write_csv, write_text, Table};
use qfield::channel::{
    broadcast_sweep, capacity_sweep, default_r0_grid, linear_grid, log_grid, ChannelConfig,
    Fault, GramRoute,
};
use qfield::propagation::{bob_profile_2d_fb1, bob_profiles_3d, bob_spectra};
use qfield::smearing::{numeric_inverse, Dim, QuadOptions, RadialProfile, SpectralProfile};
use qfield::verify::{run_suites, VerifyOptions};

/// Alice's width. Every length on the command line is in these units.
const SIGMA: f64 = 1.0;

enum Failure {
    /// Bad flags or parameters.
    Usage(String),
    /// Numerical or I/O failure.
    Runtime(String),
    /// Verification ran and something failed.
    Verify,
}

impl From<qfield::Error> for Failure {
    fn from(e: qfield::Error) -> Self {
        match e {
            qfield::Error::BadParameter(_) => Failure::Usage(e.to_string()),
            _ => Failure::Runtime(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Runtime(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let argv = match args::merge_config(std::env::args().collect()) {
        Ok(a) => a,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let result = match cli.command {
        Command::Capacity(a) => with_pool(&a.common, || run_capacity(&a)),
        Command::Smearings(a) => with_pool(&a.common, || run_smearings(&a)),
        Command::Broadcast(a) => with_pool(&a.common, || run_broadcast(&a)),
        Command::Verify(a) => with_pool(&a.common, || run_verify(&a)),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
        Err(Failure::Verify) => ExitCode::from(1),
    }
}

fn with_pool(common: &Common, f: impl FnOnce() -> Outcome + Send) -> Outcome {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = common.jobs {
        if n == 0 {
            return Err(Failure::Usage("--jobs must be at least 1".into()));
        }
        builder = builder.num_threads(n);
    }
    let pool = builder.build().map_err(|e| Failure::Runtime(e.to_string()))?;
    pool.install(f)
}

fn check_common(c: &Common) -> Outcome {
    let positive = |name: &str, v: f64| {
        if v > 0.0 && v.is_finite() {
            Ok(())
        } else {
            Err(Failure::Usage(format!("--{name} must be positive, got {v}")))
        }
    };
    positive("rel-tol", c.rel_tol)?;
    positive("eps", c.eps)?;
    if let Some(k) = c.kmax {
        positive("kmax", k)?;
    }
    if !(c.delta >= 0.0 && c.delta.is_finite()) {
        return Err(Failure::Usage(format!("--delta must be >= 0, got {}", c.delta)));
    }
    Ok(())
}

fn out_path(c: &Common, default: &str) -> PathBuf {
    c.out.clone().unwrap_or_else(|| PathBuf::from(default))
}

/// `dir/stem_suffix.ext`
fn with_suffix(path: &Path, suffix: &str) -> PathBuf {
    let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or("out");
    let name = match path.extension().and_then(|s| s.to_str()) {
        Some(ext) => format!("{stem}_{suffix}.{ext}"),
        None => format!("{stem}_{suffix}"),
    };
    path.with_file_name(name)
}

fn run_capacity(a: &CapacityArgs) -> Outcome {
    check_common(&a.common)?;
    if !(a.lambda_min > 0.0 && a.lambda_max >= a.lambda_min && a.points > 0) {
        return Err(Failure::Usage(
            "need 0 < --lambda-min <= --lambda-max and --points >= 1".into(),
        ));
    }
    let mut template = ChannelConfig::gaussian(a.dim.into(), SIGMA, 0.0).with_delta(a.common.delta);
    if let Some(lp) = a.lambda_pi {
        template = template.with_lambda_pi(lp);
    }
    if let Some(k) = a.common.kmax {
        template = template.with_k_max(k);
    }
    if a.quadrature {
        template = template.with_route(GramRoute::Quadrature);
    }
    let grid = log_grid(a.lambda_min, a.lambda_max, a.points);
    let rows = capacity_sweep(&grid, &template)?;
    let mut table = Table::new(&["lambda_phi_over_sigma", "ic", "ic_clamped"]);
    for r in rows {
        table.push(vec![r.lambda_phi_over_sigma, r.ic, r.ic_clamped]);
    }
    let path = out_path(&a.common, "capacity.csv");
    write_csv(&path, &table)?;
    if a.plot {
        write_text(&path.with_extension("gp"), &output::capacity_plot(&path))?;
    }
    Ok(())
}

fn sample_profiles(profiles: &[RadialProfile; 3], rs: &[f64]) -> Result<Vec<Vec<f64>>, Failure> {
    let rows: qfield::Result<Vec<Vec<f64>>> = rs
        .par_iter()
        .map(|&r| {
            let mut row = vec![r];
            for p in profiles {
                row.push(p.eval(r)?);
            }
            Ok(row)
        })
        .collect();
    Ok(rows?)
}

fn run_smearings(a: &SmearingArgs) -> Outcome {
    let c = &a.common;
    check_common(c)?;
    if !(a.dr > 0.0 && a.dr.is_finite()) {
        return Err(Failure::Usage("--dr must be positive".into()));
    }
    let dim: Dim = a.dim.into();
    let profiles = match dim {
        Dim::Three => bob_profiles_3d(SIGMA, c.delta)?,
        Dim::Two => {
            let fa = SpectralProfile::gaussian(SIGMA, dim)?;
            let [_, s2, s3] = bob_spectra(&fa, c.delta)?;
            let opts = QuadOptions::with_rel_tol(c.rel_tol).l1();
            let inv = |s: &SpectralProfile| numeric_inverse(s, c.kmax.unwrap_or_else(|| s.k_max()), &opts);
            [bob_profile_2d_fb1(SIGMA, c.delta)?, inv(&s2), inv(&s3)]
        }
    };
    let r_max = c.delta + 10.0 * SIGMA;
    let n = (r_max / a.dr).round() as usize + 1;
    let rs = linear_grid(0.0, r_max, n);
    let rows = sample_profiles(&profiles, &rs)?;

    let header = ["r", "fb1", "fb2", "fb3"];
    let mut raw = Table::new(&header);
    let mut peaks = [0.0f64; 3];
    for row in &rows {
        for (p, v) in peaks.iter_mut().zip(&row[1..]) {
            *p = p.max(v.abs());
        }
        raw.push(row.clone());
    }
    let mut normalized = Table::new(&header);
    for row in &rows {
        let mut out = vec![row[0]];
        out.extend(row[1..].iter().zip(&peaks).map(|(v, p)| if *p > 0.0 { v / p } else { 0.0 }));
        normalized.push(out);
    }
    let path = out_path(c, "smearings.csv");
    write_csv(&path, &raw)?;
    let norm_path = with_suffix(&path, "normalized");
    write_csv(&norm_path, &normalized)?;
    if a.plot {
        write_text(&path.with_extension("gp"), &output::smearing_plot(&norm_path, dim.value()))?;
    }
    Ok(())
}

fn run_broadcast(a: &BroadcastArgs) -> Outcome {
    let c = &a.common;
    check_common(c)?;
    if a.lambdas.is_empty() || a.lambdas.iter().any(|l| !(*l > 0.0 && l.is_finite())) {
        return Err(Failure::Usage("--lambdas must be positive".into()));
    }
    let default = default_r0_grid(c.delta, SIGMA);
    let lo = a.r0_min.unwrap_or(default[0]);
    let hi = a.r0_max.unwrap_or(default[default.len() - 1]);
    if !(lo > 0.0 && hi >= lo && a.r0_points > 0) {
        return Err(Failure::Usage("need 0 < --r0-min <= --r0-max and --r0-points >= 1".into()));
    }
    let grid = linear_grid(lo, hi, a.r0_points);
    let path = out_path(c, "broadcast.csv");
    let mut written = Vec::new();
    for &lambda in &a.lambdas {
        let mut template = ChannelConfig::gaussian(Dim::Three, SIGMA, lambda * SIGMA).with_delta(c.delta);
        if let Some(k) = c.kmax {
            template = template.with_k_max(k);
        }
        let rows = broadcast_sweep(&grid, &template, c.eps * SIGMA)?;
        let mut table = Table::new(&["r0", "ic_bob1", "ic_bob2"]);
        for r in rows {
            table.push(vec![r.r0, r.ic_bob1, r.ic_bob2]);
        }
        let file = with_suffix(&path, &format!("lambda{}", output::label(lambda)));
        write_csv(&file, &table)?;
        written.push((lambda, file));
    }
    if a.plot {
        write_text(&path.with_extension("gp"), &output::broadcast_plot(&written))?;
    }
    Ok(())
}

fn run_verify(a: &VerifyArgs) -> Outcome {
    let opts = VerifyOptions {
        fault: a.inject_fault.map(|f| match f {
            FaultArg::WSign => Fault::WSign,
        }),
        filter: a.suite.clone(),
    };
    let reports = run_suites(&opts);
    if reports.is_empty() {
        return Err(Failure::Usage("no suite matches the --suite filter".into()));
    }
    let mut text = String::from("suite\tstatus\tworst_residual\ttolerance\tdetail\n");
    for r in &reports {
        text.push_str(&format!("{r}\n"));
    }
    print!("{text}");
    if let Some(p) = &a.common.out {
        write_text(p, &text)?;
    }
    let failed = reports.iter().filter(|r| !r.passed).count();
    eprintln!("{} suites, {} failed", reports.len(), failed);
    if failed > 0 {
        Err(Failure::Verify)
    } else {
        Ok(())
    }
}
