//! Lookup into the generated LLC (μ*, σ*) table, indexed by the average
//! regression length T̃, lag order and deterministic terms.

use super::llc_moments::LLC_TABLE;
use super::Deterministic;

/// Limits as T̃ → ∞, independent of the lag order.
fn asymptote(det: Deterministic) -> (f64, f64) {
    match det {
        Deterministic::None => (0.0, 1.0),
        Deterministic::Intercept => (-0.5, 0.707),
        Deterministic::Trend => (-0.5, 0.5),
    }
}

/// Linear interpolation in 1/T̃ between tabulated lengths; beyond the last
/// entry toward the asymptote. `None` when T̃ is below the grid or the lag
/// order is not tabulated.
pub(super) fn llc_table_lookup(t_tilde: f64, p: usize, det: Deterministic) -> Option<(f64, f64)> {
    let rows: Vec<(f64, f64, f64)> = LLC_TABLE
        .iter()
        .filter(|r| r.1 as usize == p && r.2 == det.code())
        .map(|r| (r.0 as f64, r.3, r.4))
        .collect();
    let first = rows.first()?;
    if t_tilde < first.0 {
        return None;
    }
    let hi = rows.iter().position(|r| r.0 >= t_tilde);
    let (lo_row, hi_row) = match hi {
        Some(h) if rows[h].0 == t_tilde => return Some((rows[h].1, rows[h].2)),
        Some(h) => (rows[h - 1], rows[h]),
        None => {
            let (m, s) = asymptote(det);
            (*rows.last().unwrap(), (f64::INFINITY, m, s))
        }
    };
    let (x0, x1, x) = (1.0 / lo_row.0, 1.0 / hi_row.0, 1.0 / t_tilde);
    let w = (x0 - x) / (x0 - x1);
    Some((lo_row.1 + w * (hi_row.1 - lo_row.1), lo_row.2 + w * (hi_row.2 - lo_row.2)))
}
