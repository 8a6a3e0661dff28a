use crate::error::{GktError, Result};

/// Central finite-difference gradient: `(f(x+h e_i) - f(x-h e_i)) / 2h`
/// per coordinate. The oracle every analytic gradient in this crate is
/// validated against.
pub fn finite_diff_grad(
    f: &mut dyn FnMut(&[f64]) -> f64,
    theta: &[f64],
    step: f64,
) -> Result<Vec<f64>> {
    if step <= 0.0 {
        return Err(GktError::Config(format!(
            "finite difference step must be positive, got {step}"
        )));
    }
    let mut work = theta.to_vec();
    let mut grad = Vec::with_capacity(theta.len());
    for i in 0..theta.len() {
        let orig = work[i];
        work[i] = orig + step;
        let plus = f(&work);
        work[i] = orig - step;
        let minus = f(&work);
        work[i] = orig;
        if !plus.is_finite() || !minus.is_finite() {
            return Err(GktError::Numerical(format!(
                "non-finite evaluation at coordinate {i}: f+ = {plus}, f- = {minus}"
            )));
        }
        grad.push((plus - minus) / (2.0 * step));
    }
    Ok(grad)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numkernel::softmax;

    #[test]
    fn quadratic_gradient() {
        let g = finite_diff_grad(
            &mut |t| t.iter().map(|v| v * v).sum(),
            &[1.0, 2.0],
            1e-5,
        )
        .unwrap();
        assert!((g[0] - 2.0).abs() < 1e-8);
        assert!((g[1] - 4.0).abs() < 1e-8);
    }

    #[test]
    fn constant_function_zero_gradient() {
        let g = finite_diff_grad(&mut |_| 3.5, &[0.1, -0.2, 7.0], 1e-4).unwrap();
        assert!(g.iter().all(|v| v.abs() < 1e-12));
    }

    #[test]
    fn softmax_sum_is_flat() {
        let theta = [0.4, -1.0, 2.2, 0.0];
        let g = finite_diff_grad(
            &mut |t| softmax(t).iter().sum(),
            &theta,
            1e-5,
        )
        .unwrap();
        assert!(g.iter().all(|v| v.abs() < 1e-8));
    }

    #[test]
    fn rejects_nonpositive_step() {
        assert!(finite_diff_grad(&mut |_| 0.0, &[1.0], 0.0).is_err());
        assert!(finite_diff_grad(&mut |_| 0.0, &[1.0], -1e-5).is_err());
    }

    #[test]
    fn reports_nonfinite_evaluations() {
        let err = finite_diff_grad(&mut |t| t[0].ln(), &[0.0], 1e-3).unwrap_err();
        assert!(matches!(err, GktError::Numerical(_)));
    }
}
