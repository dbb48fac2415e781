//! Plot-data emitters: whitespace-separated columns, `#` comment headers,
//! blank lines between curve blocks.

use taumax::limits::{eval_eta, solve_x0};
use taumax::maximizer::{solve_t_star, SolverConfig};
use taumax::tau::{eval_tau, TauPoint};
use taumax::Result;

use crate::output::fmt_sig;

/// eta(a) sampled on [0, a_max] plus a root marker at x0.
pub fn figure_eta(points: usize, a_max: f64, digits: usize, cfg: &SolverConfig) -> Result<String> {
    let limits = solve_x0(cfg)?;
    let mut s = String::new();
    s.push_str(&format!(
        "# eta(a) = exp(a) - a^2 - a - 1 on [0, {}]\n",
        fmt_sig(a_max, digits)
    ));
    s.push_str("# columns: a eta\n");
    for j in 0..points {
        let a = a_max * j as f64 / (points - 1) as f64;
        s.push_str(&format!(
            "{} {}\n",
            fmt_sig(a, digits),
            fmt_sig(eval_eta(a), digits)
        ));
    }
    s.push('\n');
    s.push_str("# root marker: x0 eta(x0)\n");
    s.push_str(&format!(
        "{} {}\n",
        fmt_sig(limits.x0, digits),
        fmt_sig(eval_eta(limits.x0), digits)
    ));
    Ok(s)
}

/// tau(n, t) for n = 1, 2, 3 sampled on [0, t_max], one block per curve,
/// plus a block with the argmax markers (t_n, alpha_n).
pub fn figure_tau_curves(
    points: usize,
    t_max: f64,
    digits: usize,
    cfg: &SolverConfig,
) -> Result<String> {
    let mut s = String::new();
    s.push_str(&format!(
        "# tau(n, t) for n = 1, 2, 3 on (0, {}]\n",
        fmt_sig(t_max, digits)
    ));
    s.push_str("# columns: t tau\n");
    let mut markers = Vec::new();
    for n in 1..=3u32 {
        let x = f64::from(n);
        s.push_str(&format!("# curve n={n}\n"));
        for j in 0..points {
            let t = t_max * j as f64 / (points - 1) as f64;
            s.push_str(&format!(
                "{} {}\n",
                fmt_sig(t, digits),
                fmt_sig(eval_tau(TauPoint::new(x, t)?), digits)
            ));
        }
        s.push('\n');
        let cp = solve_t_star(x, cfg)?;
        markers.push((cp.t_star, cp.alpha));
    }
    s.push_str("# argmax markers: t_n alpha_n\n");
    for (t, alpha) in markers {
        s.push_str(&format!(
            "{} {}\n",
            fmt_sig(t, digits),
            fmt_sig(alpha, digits)
        ));
    }
    Ok(s)
}
