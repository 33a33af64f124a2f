use crate::error::{Error, Result};

/// Least-squares line through `(ln x, ln y)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScalingFit {
    /// Slope in log-log space.
    pub exponent: f64,
    /// Intercept in log-log space, i.e. `ln` of the prefactor.
    pub intercept: f64,
    pub r_squared: f64,
    pub points: usize,
}

impl ScalingFit {
    pub fn predict(&self, x: f64) -> f64 {
        (self.intercept + self.exponent * x.ln()).exp()
    }
}

pub fn fit_power_law_scaling(points: &[(f64, f64)]) -> Result<ScalingFit> {
    if points.len() < 2 {
        return Err(Error::DegenerateFit(format!(
            "need at least 2 points, got {}",
            points.len()
        )));
    }
    if let Some(&(x, y)) = points
        .iter()
        .find(|&&(x, y)| !(x > 0.0 && y > 0.0) || !x.is_finite() || !y.is_finite())
    {
        return Err(Error::invalid(
            "points",
            format!("log-log fit needs positive finite values, got ({x}, {y})"),
        ));
    }
    let logs: Vec<(f64, f64)> = points.iter().map(|&(x, y)| (x.ln(), y.ln())).collect();
    let n = logs.len() as f64;
    let mean_x = logs.iter().map(|p| p.0).sum::<f64>() / n;
    let mean_y = logs.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = logs.iter().map(|p| (p.0 - mean_x).powi(2)).sum();
    let sxy: f64 = logs.iter().map(|p| (p.0 - mean_x) * (p.1 - mean_y)).sum();
    let syy: f64 = logs.iter().map(|p| (p.1 - mean_y).powi(2)).sum();
    if sxx <= f64::EPSILON * n {
        return Err(Error::DegenerateFit("all x values identical".into()));
    }
    let slope = sxy / sxx;
    let intercept = mean_y - slope * mean_x;
    let ss_res: f64 = logs.iter().map(|p| (p.1 - intercept - slope * p.0).powi(2)).sum();
    // Flat data is fitted exactly by a zero slope.
    let r_squared = if syy <= f64::EPSILON {
        1.0
    } else {
        (1.0 - ss_res / syy).clamp(0.0, 1.0)
    };
    Ok(ScalingFit {
        exponent: slope,
        intercept,
        r_squared,
        points: points.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_square() {
        let pts: Vec<_> = [1.0, 2.0, 4.0, 8.0].iter().map(|&x| (x, x * x)).collect();
        let f = fit_power_law_scaling(&pts).unwrap();
        assert!((f.exponent - 2.0).abs() < 1e-12);
        assert!((f.r_squared - 1.0).abs() < 1e-12);
        assert_eq!(f.points, 4);
    }

    #[test]
    fn constant() {
        let f = fit_power_law_scaling(&[(1.0, 5.0), (10.0, 5.0), (100.0, 5.0)]).unwrap();
        assert!(f.exponent.abs() < 1e-12);
        assert!((f.intercept - 5f64.ln()).abs() < 1e-12);
    }

    #[test]
    fn square_root_with_prefactor() {
        let pts: Vec<_> = [1.0, 3.0, 10.0, 30.0, 100.0]
            .iter()
            .map(|&x: &f64| (x, 3.0 * x.sqrt()))
            .collect();
        let f = fit_power_law_scaling(&pts).unwrap();
        assert!((f.exponent - 0.5).abs() < 1e-9);
        assert!((f.intercept - 3f64.ln()).abs() < 1e-9);
        assert!((f.predict(49.0) - 21.0).abs() < 1e-9);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(fit_power_law_scaling(&[(1.0, 1.0)]).is_err());
        assert!(fit_power_law_scaling(&[(1.0, 1.0), (0.0, 2.0)]).is_err());
        assert!(fit_power_law_scaling(&[(1.0, -1.0), (2.0, 2.0)]).is_err());
        assert!(matches!(
            fit_power_law_scaling(&[(3.0, 1.0), (3.0, 2.0)]),
            Err(Error::DegenerateFit(_))
        ));
    }
}
