//! Dense numerical primitives: matrices, safe activations, the LSTM cell
//! (forward and backward) and a central finite-difference gradient oracle.
//!
//! Everything here is pure with respect to its inputs and deterministic;
//! values are immutable once constructed and safe to share across threads.

mod fdiff;
mod lstm;
mod matrix;

pub use fdiff::finite_diff_grad;
pub use lstm::{
    lstm_cell_backward, lstm_cell_forward, lstm_cell_forward_taped, LstmCellParams, LstmCellState,
    LstmCellTape, GATE_NAMES, N_GATES,
};
pub use matrix::Matrix;

/// Numerically safe logistic sigmoid.
#[inline]
pub fn sigmoid(x: f64) -> f64 {
    if x >= 0.0 {
        1.0 / (1.0 + (-x).exp())
    } else {
        let e = x.exp();
        e / (1.0 + e)
    }
}

/// Softmax with max-subtraction, in place.
pub fn softmax_in_place(z: &mut [f64]) {
    debug_assert!(!z.is_empty());
    let max = z.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let mut sum = 0.0;
    for v in z.iter_mut() {
        *v = (*v - max).exp();
        sum += *v;
    }
    for v in z.iter_mut() {
        *v /= sum;
    }
}

/// Softmax of a finite input vector. Output entries are nonnegative and sum
/// to one; adding a constant to every input leaves the output unchanged.
pub fn softmax(z: &[f64]) -> Vec<f64> {
    let mut out = z.to_vec();
    softmax_in_place(&mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn softmax_uniform_on_equal_inputs() {
        let z = [0.0; 30];
        let p = softmax(&z);
        for v in &p {
            assert!((v - 1.0 / 30.0).abs() < 1e-12);
        }
    }

    #[test]
    fn softmax_survives_large_inputs() {
        let p = softmax(&[1000.0, 0.0]);
        assert!((p[0] - 1.0).abs() < 1e-9);
        assert!(p[1].abs() < 1e-9);
        assert!(p.iter().all(|v| v.is_finite()));
    }

    #[test]
    fn softmax_shift_invariant() {
        let z = [0.3, -1.2, 4.0, 0.0, 2.5];
        let shifted: Vec<f64> = z.iter().map(|v| v + 5.0).collect();
        let a = softmax(&z);
        let b = softmax(&shifted);
        for (x, y) in a.iter().zip(&b) {
            assert!((x - y).abs() < 1e-12);
        }
    }

    #[test]
    fn sigmoid_saturates_safely() {
        assert!((sigmoid(800.0) - 1.0).abs() < 1e-15);
        assert!(sigmoid(-800.0) >= 0.0);
        assert!(sigmoid(-800.0) < 1e-300);
        assert!(sigmoid(-30.0) > 0.0);
        assert_eq!(sigmoid(0.0), 0.5);
    }

    proptest! {
        #[test]
        fn softmax_is_a_distribution(z in proptest::collection::vec(-1e3f64..1e3, 1..40)) {
            let p = softmax(&z);
            prop_assert!(p.iter().all(|v| *v >= 0.0 && v.is_finite()));
            let sum: f64 = p.iter().sum();
            prop_assert!((sum - 1.0).abs() < 1e-9);
        }
    }
}
