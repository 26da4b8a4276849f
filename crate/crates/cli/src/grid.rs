//! Value lists for sweep flags: `start:stop:step` ranges or comma lists.

use anyhow::{bail, ensure, Context, Result};

const USAGE: &str = "expected start:stop:step (e.g. 0:1:0.1), a comma list (e.g. 0.25,0.5) or a single value";

/// Grid points are rounded to 12 decimals so `0:1:0.1` yields `0.3`, not
/// `0.30000000000000004`.
fn tidy(v: f64) -> f64 {
    let r = (v * 1e12).round() / 1e12;
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

fn number(s: &str) -> Result<f64> {
    let v: f64 = s
        .trim()
        .parse()
        .with_context(|| format!("cannot parse {s:?} as a number; {USAGE}"))?;
    ensure!(v.is_finite(), "grid value {s:?} is not finite");
    Ok(v)
}

/// Parses a real grid. Ranges include `stop` when it lies within half a step
/// of a grid point.
pub fn parse_real_grid(spec: &str) -> Result<Vec<f64>> {
    let parts: Vec<&str> = spec.split(':').collect();
    match parts.as_slice() {
        [start, stop, step] => {
            let (start, stop, step) = (number(start)?, number(stop)?, number(step)?);
            ensure!(step > 0.0, "grid step must be positive in {spec:?}; {USAGE}");
            ensure!(stop >= start, "grid stop is below start in {spec:?}; {USAGE}");
            let count = ((stop - start) / step + 0.5).floor() as usize;
            Ok((0..=count).map(|i| tidy(start + i as f64 * step)).collect())
        }
        [list] => list.split(',').map(number).collect(),
        _ => bail!("malformed grid {spec:?}; {USAGE}"),
    }
}

pub fn parse_unit_grid(name: &str, spec: &str) -> Result<Vec<f64>> {
    let grid = parse_real_grid(spec).with_context(|| format!("invalid --{name}"))?;
    if let Some(v) = grid.iter().find(|v| !(0.0..=1.0).contains(*v)) {
        bail!("--{name} value {v} lies outside [0, 1]");
    }
    Ok(grid)
}

pub fn parse_list<T: std::str::FromStr>(name: &str, spec: &str) -> Result<Vec<T>> {
    spec.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| {
            s.trim()
                .parse()
                .map_err(|_| anyhow::anyhow!("cannot parse {s:?} in --{name}; expected a comma list"))
        })
        .collect()
}
