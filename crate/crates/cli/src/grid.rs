//! Parameter grids: `start:stop:step`, a comma list, or empty.

use crate::report::fmt_sig;
use crate::CliError;

pub const MAX_POINTS: usize = 10_000;

/// Parses a grid. Range endpoints are inclusive when `stop` lies on the
/// lattice up to rounding; points are rounded to 12 significant digits so
/// `0.55` prints and compares as `0.55`.
pub fn parse_grid(spec: &str) -> Result<Vec<f64>, CliError> {
    let spec = spec.trim();
    if spec.is_empty() {
        return Ok(Vec::new());
    }
    let bad = |why: &str| CliError::Usage(format!("invalid grid '{spec}': {why}"));
    let number = |s: &str| -> Result<f64, CliError> {
        let v: f64 = s.trim().parse().map_err(|_| bad(&format!("'{s}' is not a number")))?;
        if v.is_finite() {
            Ok(v)
        } else {
            Err(bad("values must be finite"))
        }
    };

    let points = if spec.contains(':') {
        let parts: Vec<&str> = spec.split(':').collect();
        let [start, stop, step] = parts[..] else {
            return Err(bad("expected start:stop:step"));
        };
        let (start, stop, step) = (number(start)?, number(stop)?, number(step)?);
        if step <= 0.0 {
            return Err(bad("step must be positive"));
        }
        if stop < start {
            return Ok(Vec::new());
        }
        let span = (stop - start) / step;
        let count = (span + 1e-9 * span.max(1.0)).floor() + 1.0;
        if count > MAX_POINTS as f64 {
            return Err(bad(&format!("more than {MAX_POINTS} points")));
        }
        (0..count as usize).map(|i| start + i as f64 * step).collect()
    } else {
        let v = spec.split(',').map(number).collect::<Result<Vec<_>, _>>()?;
        if v.len() > MAX_POINTS {
            return Err(bad(&format!("more than {MAX_POINTS} points")));
        }
        v
    };
    Ok(points
        .into_iter()
        .map(|x| fmt_sig(x).parse().expect("formatted float parses"))
        .collect())
}

/// Alpha lists accept `inf` as well as numbers.
pub fn parse_alphas(spec: &str) -> Result<Vec<f64>, CliError> {
    spec.split(',')
        .map(|s| match s.trim() {
            "inf" | "infinity" => Ok(f64::INFINITY),
            t => t
                .parse::<f64>()
                .ok()
                .filter(|v| !v.is_nan())
                .ok_or_else(|| CliError::Usage(format!("invalid alpha '{t}'"))),
        })
        .collect()
}
