//! Standard LSTM cell without peephole connections.
//!
//! Gate order everywhere (parameter layout, checkpoints) is
//! input, forget, cell candidate, output:
//!
//! ```text
//! i = sigmoid(Wi x + Ui h + bi)
//! f = sigmoid(Wf x + Uf h + bf)
//! g = tanh   (Wg x + Ug h + bg)
//! o = sigmoid(Wo x + Uo h + bo)
//! c' = f .* c + i .* g
//! h' = o .* tanh(c')
//! ```

use super::matrix::Matrix;
use super::sigmoid;
use crate::error::{GktError, Result};

pub const N_GATES: usize = 4;
pub const GATE_NAMES: [&str; N_GATES] = ["input", "forget", "cell", "output"];

const GATE_I: usize = 0;
const GATE_F: usize = 1;
const GATE_G: usize = 2;
const GATE_O: usize = 3;

/// All trainable parameters of one LSTM cell layer. Also serves as the
/// gradient container for the backward pass (identical shapes).
#[derive(Debug, Clone, PartialEq)]
pub struct LstmCellParams {
    pub cells: usize,
    pub input_dim: usize,
    /// Per-gate input weights, each `cells x input_dim`.
    pub w_input: [Matrix; N_GATES],
    /// Per-gate recurrent weights, each `cells x cells`.
    pub w_recurrent: [Matrix; N_GATES],
    /// Per-gate biases, each of length `cells`.
    pub bias: [Vec<f64>; N_GATES],
}

impl LstmCellParams {
    pub fn zeros(cells: usize, input_dim: usize) -> Self {
        LstmCellParams {
            cells,
            input_dim,
            w_input: std::array::from_fn(|_| Matrix::zeros(cells, input_dim)),
            w_recurrent: std::array::from_fn(|_| Matrix::zeros(cells, cells)),
            bias: std::array::from_fn(|_| vec![0.0; cells]),
        }
    }

    pub fn n_params(&self) -> usize {
        N_GATES * (self.cells * self.input_dim + self.cells * self.cells + self.cells)
    }

    /// Visits every parameter in the documented fixed order: per gate input
    /// weights (row-major), per gate recurrent weights, per gate biases.
    pub fn visit(&self, f: &mut impl FnMut(f64)) {
        for g in 0..N_GATES {
            for &v in self.w_input[g].data() {
                f(v);
            }
        }
        for g in 0..N_GATES {
            for &v in self.w_recurrent[g].data() {
                f(v);
            }
        }
        for g in 0..N_GATES {
            for &v in &self.bias[g] {
                f(v);
            }
        }
    }

    /// Mutable visit in the same order as [`LstmCellParams::visit`].
    pub fn visit_mut(&mut self, f: &mut impl FnMut(&mut f64)) {
        for g in 0..N_GATES {
            for v in self.w_input[g].data_mut() {
                f(v);
            }
        }
        for g in 0..N_GATES {
            for v in self.w_recurrent[g].data_mut() {
                f(v);
            }
        }
        for g in 0..N_GATES {
            for v in &mut self.bias[g] {
                f(v);
            }
        }
    }

    pub fn is_finite(&self) -> bool {
        self.w_input.iter().all(Matrix::is_finite)
            && self.w_recurrent.iter().all(Matrix::is_finite)
            && self.bias.iter().all(|b| b.iter().all(|v| v.is_finite()))
    }
}

/// Recurrent state of one cell layer: cell activations and hidden outputs.
#[derive(Debug, Clone, PartialEq)]
pub struct LstmCellState {
    pub c: Vec<f64>,
    pub h: Vec<f64>,
}

impl LstmCellState {
    pub fn zeros(cells: usize) -> Self {
        LstmCellState {
            c: vec![0.0; cells],
            h: vec![0.0; cells],
        }
    }
}

/// Everything the backward pass needs from one forward step.
#[derive(Debug, Clone)]
pub struct LstmCellTape {
    pub x: Vec<f64>,
    pub h_prev: Vec<f64>,
    pub c_prev: Vec<f64>,
    /// Post-activation gate values.
    pub gate_i: Vec<f64>,
    pub gate_f: Vec<f64>,
    pub gate_g: Vec<f64>,
    pub gate_o: Vec<f64>,
    pub c_new: Vec<f64>,
    pub tanh_c_new: Vec<f64>,
    pub h_new: Vec<f64>,
}

fn check_dims(p: &LstmCellParams, x: &[f64], s: &LstmCellState) -> Result<()> {
    if x.len() != p.input_dim || s.c.len() != p.cells || s.h.len() != p.cells {
        return Err(GktError::Dimension(format!(
            "lstm cell expects input {} and state {}, got input {} state ({}, {})",
            p.input_dim,
            p.cells,
            x.len(),
            s.c.len(),
            s.h.len()
        )));
    }
    Ok(())
}

fn gate_preactivations(p: &LstmCellParams, x: &[f64], h: &[f64]) -> [Vec<f64>; N_GATES] {
    std::array::from_fn(|g| {
        let mut z = p.bias[g].clone();
        p.w_input[g].matvec_into(x, &mut z, true);
        p.w_recurrent[g].matvec_into(h, &mut z, true);
        z
    })
}

/// One forward step. Returns the cell output (`y == state.h`) and the new
/// state. Pure and deterministic.
pub fn lstm_cell_forward(
    p: &LstmCellParams,
    x: &[f64],
    s: &LstmCellState,
) -> Result<(Vec<f64>, LstmCellState)> {
    check_dims(p, x, s)?;
    let mut z = gate_preactivations(p, x, &s.h);
    let [zi, zf, zg, zo] = &mut z;
    let mut c_new = vec![0.0; p.cells];
    let mut h_new = vec![0.0; p.cells];
    for k in 0..p.cells {
        let i = sigmoid(zi[k]);
        let f = sigmoid(zf[k]);
        let g = zg[k].tanh();
        let o = sigmoid(zo[k]);
        let c = f * s.c[k] + i * g;
        c_new[k] = c;
        h_new[k] = o * c.tanh();
    }
    Ok((
        h_new.clone(),
        LstmCellState {
            c: c_new,
            h: h_new,
        },
    ))
}

/// Forward step that also records the tape consumed by
/// [`lstm_cell_backward`]. Produces bit-identical outputs to
/// [`lstm_cell_forward`].
pub fn lstm_cell_forward_taped(
    p: &LstmCellParams,
    x: &[f64],
    s: &LstmCellState,
) -> Result<(LstmCellState, LstmCellTape)> {
    check_dims(p, x, s)?;
    let mut z = gate_preactivations(p, x, &s.h);
    let [zi, zf, zg, zo] = &mut z;
    let mut c_new = vec![0.0; p.cells];
    let mut tanh_c_new = vec![0.0; p.cells];
    let mut h_new = vec![0.0; p.cells];
    for k in 0..p.cells {
        zi[k] = sigmoid(zi[k]);
        zf[k] = sigmoid(zf[k]);
        zg[k] = zg[k].tanh();
        zo[k] = sigmoid(zo[k]);
        let c = zf[k] * s.c[k] + zi[k] * zg[k];
        c_new[k] = c;
        tanh_c_new[k] = c.tanh();
        h_new[k] = zo[k] * tanh_c_new[k];
    }
    let [gi, gf, gg, go] = z;
    let tape = LstmCellTape {
        x: x.to_vec(),
        h_prev: s.h.clone(),
        c_prev: s.c.clone(),
        gate_i: gi,
        gate_f: gf,
        gate_g: gg,
        gate_o: go,
        c_new: c_new.clone(),
        tanh_c_new,
        h_new: h_new.clone(),
    };
    Ok((
        LstmCellState {
            c: c_new,
            h: h_new,
        },
        tape,
    ))
}

/// Backward pass for one step.
///
/// `d_out` is the loss gradient w.r.t. the cell output `y`, `d_state` the
/// gradient w.r.t. the outgoing state `(c', h')` flowing back from later
/// steps. Parameter gradients accumulate into `grads` (same shape as the
/// parameters); the returned pair is the gradient w.r.t. the input and the
/// incoming state.
pub fn lstm_cell_backward(
    p: &LstmCellParams,
    tape: &LstmCellTape,
    d_out: &[f64],
    d_state: &LstmCellState,
    grads: &mut LstmCellParams,
) -> Result<(Vec<f64>, LstmCellState)> {
    let n = p.cells;
    if tape.x.len() != p.input_dim
        || d_out.len() != n
        || d_state.c.len() != n
        || d_state.h.len() != n
        || grads.cells != n
        || grads.input_dim != p.input_dim
    {
        return Err(GktError::Dimension(format!(
            "lstm backward shape mismatch: cells {}, input {}, got d_out {}, d_state ({}, {}), tape x {}",
            n,
            p.input_dim,
            d_out.len(),
            d_state.c.len(),
            d_state.h.len(),
            tape.x.len()
        )));
    }

    let mut dz: [Vec<f64>; N_GATES] = std::array::from_fn(|_| vec![0.0; n]);
    let mut d_c_prev = vec![0.0; n];
    for k in 0..n {
        let dh = d_out[k] + d_state.h[k];
        let i = tape.gate_i[k];
        let f = tape.gate_f[k];
        let g = tape.gate_g[k];
        let o = tape.gate_o[k];
        let tc = tape.tanh_c_new[k];

        let d_o = dh * tc;
        let d_c = dh * o * (1.0 - tc * tc) + d_state.c[k];
        let d_i = d_c * g;
        let d_g = d_c * i;
        let d_f = d_c * tape.c_prev[k];
        d_c_prev[k] = d_c * f;

        dz[GATE_I][k] = d_i * i * (1.0 - i);
        dz[GATE_F][k] = d_f * f * (1.0 - f);
        dz[GATE_G][k] = d_g * (1.0 - g * g);
        dz[GATE_O][k] = d_o * o * (1.0 - o);
    }

    let mut d_x = vec![0.0; p.input_dim];
    let mut d_h_prev = vec![0.0; n];
    for g in 0..N_GATES {
        grads.w_input[g].outer_acc(&dz[g], &tape.x);
        grads.w_recurrent[g].outer_acc(&dz[g], &tape.h_prev);
        for (b, d) in grads.bias[g].iter_mut().zip(&dz[g]) {
            *b += d;
        }
        p.w_input[g].matvec_t_acc(&dz[g], &mut d_x);
        p.w_recurrent[g].matvec_t_acc(&dz[g], &mut d_h_prev);
    }

    Ok((
        d_x,
        LstmCellState {
            c: d_c_prev,
            h: d_h_prev,
        },
    ))
}
