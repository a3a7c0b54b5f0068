//! Momentum grids: `lin:lo:hi:count` for all three axes, or three such
//! specs separated by commas for `px`, `py`, `pz`.

use dirac_core::spectrum::{linspace, product_grid, MomentumSample};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("bad grid spec {spec:?}: {reason}")]
pub struct GridError {
    pub spec: String,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Axis {
    pub lo: f64,
    pub hi: f64,
    pub count: usize,
}

impl Axis {
    pub fn points(&self) -> Vec<f64> {
        linspace(self.lo, self.hi, self.count)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct GridSpec {
    pub axes: [Axis; 3],
}

fn parse_axis(part: &str, spec: &str) -> Result<Axis, GridError> {
    let err = |reason: &str| GridError { spec: spec.to_string(), reason: reason.to_string() };
    let fields: Vec<&str> = part.split(':').collect();
    let [kind, lo, hi, count] = fields[..] else {
        return Err(err("expected lin:lo:hi:count"));
    };
    if kind != "lin" {
        return Err(err("only lin axes are supported"));
    }
    let lo: f64 = lo.parse().map_err(|_| err("lo is not a number"))?;
    let hi: f64 = hi.parse().map_err(|_| err("hi is not a number"))?;
    if !lo.is_finite() || !hi.is_finite() {
        return Err(err("bounds must be finite"));
    }
    let count: usize = count.parse().map_err(|_| err("count is not a non-negative integer"))?;
    Ok(Axis { lo, hi, count })
}

impl GridSpec {
    pub fn parse(spec: &str) -> Result<Self, GridError> {
        let parts: Vec<&str> = spec.split(',').collect();
        let axes = match parts.len() {
            1 => {
                let a = parse_axis(parts[0], spec)?;
                [a.clone(), a.clone(), a]
            }
            3 => [parse_axis(parts[0], spec)?, parse_axis(parts[1], spec)?, parse_axis(parts[2], spec)?],
            _ => {
                return Err(GridError { spec: spec.to_string(), reason: "expected one axis or three".into() });
            }
        };
        Ok(Self { axes })
    }

    pub fn samples(&self, m: f64) -> Vec<MomentumSample> {
        let [x, y, z] = self.axes.each_ref().map(Axis::points);
        product_grid([&x, &y, &z], m)
    }
}
