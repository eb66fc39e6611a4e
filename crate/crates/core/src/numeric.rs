//! Summation and fitting helpers shared by the quadrature and trajectory code.

use num_complex::Complex64;

const PAIRWISE_BLOCK: usize = 8;

/// Pairwise (cascade) sum. The result depends only on the input order,
/// never on how the work is split.
pub fn pairwise_sum(xs: &[f64]) -> f64 {
    if xs.len() <= PAIRWISE_BLOCK {
        return xs.iter().sum();
    }
    let mid = xs.len() / 2;
    pairwise_sum(&xs[..mid]) + pairwise_sum(&xs[mid..])
}

pub fn pairwise_sum_complex(xs: &[Complex64]) -> Complex64 {
    if xs.len() <= PAIRWISE_BLOCK {
        return xs.iter().sum();
    }
    let mid = xs.len() / 2;
    pairwise_sum_complex(&xs[..mid]) + pairwise_sum_complex(&xs[mid..])
}

/// Ordinary least-squares line `y = intercept + slope * x`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LineFit {
    pub slope: f64,
    pub intercept: f64,
    /// Largest absolute deviation of the data from the fitted line.
    pub max_residual: f64,
}

pub fn fit_line(x: &[f64], y: &[f64]) -> LineFit {
    assert_eq!(x.len(), y.len(), "fit_line: length mismatch");
    let n = x.len() as f64;
    let mx = pairwise_sum(x) / n;
    let my = pairwise_sum(y) / n;
    let sxy: Vec<f64> = x.iter().zip(y).map(|(a, b)| (a - mx) * (b - my)).collect();
    let sxx: Vec<f64> = x.iter().map(|a| (a - mx) * (a - mx)).collect();
    let sxx = pairwise_sum(&sxx);
    let slope = if sxx > 0.0 { pairwise_sum(&sxy) / sxx } else { 0.0 };
    let intercept = my - slope * mx;
    let max_residual = x
        .iter()
        .zip(y)
        .map(|(a, b)| (b - intercept - slope * a).abs())
        .fold(0.0, f64::max);
    LineFit {
        slope,
        intercept,
        max_residual,
    }
}

/// Least squares for a small dense system via normal equations.
pub fn least_squares(design: &[Vec<f64>], y: &[f64]) -> Option<Vec<f64>> {
    let cols = design.first()?.len();
    let mut ata = nalgebra::DMatrix::<f64>::zeros(cols, cols);
    let mut aty = nalgebra::DVector::<f64>::zeros(cols);
    for (row, &yi) in design.iter().zip(y) {
        for i in 0..cols {
            aty[i] += row[i] * yi;
            for j in 0..cols {
                ata[(i, j)] += row[i] * row[j];
            }
        }
    }
    ata.lu().solve(&aty).map(|v| v.iter().copied().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairwise_matches_naive_for_small_integers() {
        let xs: Vec<f64> = (1..=1000).map(f64::from).collect();
        assert_eq!(pairwise_sum(&xs), 500_500.0);
    }

    #[test]
    fn line_fit_recovers_exact_line() {
        let x: Vec<f64> = (0..50).map(|i| i as f64 * 0.1).collect();
        let y: Vec<f64> = x.iter().map(|t| 2.0 - 0.5 * t).collect();
        let fit = fit_line(&x, &y);
        assert!((fit.slope + 0.5).abs() < 1e-13);
        assert!((fit.intercept - 2.0).abs() < 1e-13);
        assert!(fit.max_residual < 1e-13);
    }

    #[test]
    fn least_squares_quadratic() {
        let xs: Vec<f64> = (0..20).map(|i| i as f64).collect();
        let design: Vec<Vec<f64>> = xs.iter().map(|&x| vec![1.0, x, x * x]).collect();
        let y: Vec<f64> = xs.iter().map(|&x| 1.0 - 2.0 * x + 0.25 * x * x).collect();
        let c = least_squares(&design, &y).unwrap();
        assert!((c[0] - 1.0).abs() < 1e-9 && (c[1] + 2.0).abs() < 1e-9 && (c[2] - 0.25).abs() < 1e-9);
    }
}
