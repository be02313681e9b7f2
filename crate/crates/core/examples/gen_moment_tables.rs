//! Regenerates the embedded IPS moment and LLC adjustment tables.
//!
//! Usage: cargo run --release -p dynpanel --example gen_moment_tables [DIR]

use std::fmt::Write as _;
use std::path::PathBuf;

use dynpanel::unit_root::{simulate_ips_moments, simulate_llc_adjustments, Deterministic, UnitRootOptions};
use dynpanel::Result;

const DETS: [Deterministic; 3] = [Deterministic::None, Deterministic::Intercept, Deterministic::Trend];

fn t_grid() -> Vec<usize> {
    let mut g: Vec<usize> = (6..=30).collect();
    g.extend((35..=100).step_by(5));
    g.extend([125, 150, 200, 250]);
    g
}

fn table(
    name: &str,
    columns: &str,
    opts: &UnitRootOptions,
    cell: impl Fn(usize, usize, Deterministic) -> Result<(f64, f64)>,
) -> String {
    let mut body = String::new();
    writeln!(body, "//! Generated by `cargo run --release --example gen_moment_tables`. Do not edit.").unwrap();
    writeln!(
        body,
        "//! {} replications per cell, seed {:#x}; Gaussian random walks from zero.\n",
        opts.simulation_reps, opts.simulation_seed
    )
    .unwrap();
    writeln!(body, "/// ({columns})").unwrap();
    writeln!(body, "pub(super) const {name}: &[(u16, u8, u8, f64, f64)] = &[").unwrap();
    for (code, det) in DETS.into_iter().enumerate() {
        for p in 0..=3 {
            for &t in &t_grid() {
                if let Ok((a, b)) = cell(t, p, det) {
                    writeln!(body, "    ({t}, {p}, {code}, {a:?}, {b:?}),").unwrap();
                }
            }
            eprintln!("{name} {det:?} p={p}");
        }
    }
    writeln!(body, "];").unwrap();
    body
}

fn main() {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "crates/core/src/unit_root".into()));
    let opts = UnitRootOptions::default();
    let (reps, seed) = (opts.simulation_reps, opts.simulation_seed);

    let ips = table("IPS_TABLE", "T, p, deterministic code, mean, variance", &opts, |t, p, d| {
        simulate_ips_moments(t, p, d, reps, seed)
    });
    std::fs::write(dir.join("ips_moments.rs"), ips).expect("write IPS table");

    let llc = table("LLC_TABLE", "T̃, p, deterministic code, mu*, sigma*", &opts, |t, p, d| {
        simulate_llc_adjustments(t as f64, p, d, reps, seed)
    });
    std::fs::write(dir.join("llc_moments.rs"), llc).expect("write LLC table");
}
