//! CSV tables and gnuplot scripts.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

pub struct Table {
    header: Vec<String>,
    rows: Vec<Vec<f64>>,
}

impl Table {
    pub fn new(header: &[&str]) -> Self {
        Self {
            header: header.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<f64>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    pub fn render(&self) -> String {
        let mut s = self.header.join(",");
        s.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|v| number(*v)).collect();
            s.push_str(&cells.join(","));
            s.push('\n');
        }
        s
    }
}

/// 17 significant digits, enough to round-trip any `f64`.
pub fn number(v: f64) -> String {
    format!("{v:.16e}")
}

/// Short file-name label for a coupling value.
pub fn label(v: f64) -> String {
    if v.fract() == 0.0 && v.abs() < 1e15 {
        format!("{}", v as i64)
    } else {
        format!("{v}").replace('.', "p")
    }
}

pub fn write_text(path: &Path, text: &str) -> std::io::Result<()> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir)?;
    }
    std::fs::write(path, text)
}

pub fn write_csv(path: &Path, table: &Table) -> std::io::Result<()> {
    write_text(path, &table.render())
}

fn file_name(p: &Path) -> String {
    p.file_name().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default()
}

const PREAMBLE: &str = "set datafile separator ','\nset key autotitle columnhead\n";

pub fn capacity_plot(csv: &Path) -> String {
    let stem = csv.with_extension("png");
    format!(
        "{PREAMBLE}set terminal pngcairo size 800,500\nset output '{}'\nset logscale x\n\
         set xlabel 'λ_φ/σ'\nset ylabel 'max(0, I_c)'\nset yrange [0:1.05]\n\
         plot '{}' using 1:3 with linespoints title 'max(0, I_c)'\n",
        file_name(&stem),
        file_name(csv)
    )
}

pub fn smearing_plot(csv: &Path, dim: usize) -> String {
    let png = csv.with_extension("png");
    format!(
        "{PREAMBLE}set terminal pngcairo size 800,500\nset output '{}'\n\
         set xlabel 'r/σ'\nset ylabel 'F_Bi / max|F_Bi|  (d = {dim})'\n\
         plot for [i=2:4] '{}' using 1:i with lines\n",
        file_name(&png),
        file_name(csv)
    )
}

pub fn broadcast_plot(files: &[(f64, PathBuf)]) -> String {
    let mut s = String::from(PREAMBLE);
    let _ = writeln!(s, "set terminal pngcairo size 800,{}", 350 * files.len().max(1));
    let _ = writeln!(s, "set output 'broadcast.png'");
    let _ = writeln!(s, "set multiplot layout {},1", files.len().max(1));
    let _ = writeln!(s, "set xlabel 'r_0/σ'\nset ylabel 'I_c'\nset yrange [-1.05:1.05]");
    for (lambda, f) in files {
        let _ = writeln!(
            s,
            "set title 'λ_φ/σ = {lambda}'\nplot '{0}' using 1:2 with linespoints title 'B_1 (r < r_0)', '{0}' using 1:3 with linespoints title 'B_2 (r > r_0)'",
            file_name(f)
        );
    }
    let _ = writeln!(s, "unset multiplot");
    s
}
