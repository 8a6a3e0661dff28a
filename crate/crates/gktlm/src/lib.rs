//! Generative knowledge transfer for character-level LSTM language models.
//!
//! A teacher network's knowledge is moved into a student network using only
//! generated text and teacher-produced soft labels, either teacher-driven
//! (the teacher samples the text) or student-driven (the student samples,
//! the teacher labels). On top of the single-teacher procedures sits a
//! federated adaptation protocol: a main-server student, many user-device
//! teachers and a trusted third party that aggregates per-device soft labels
//! so the server never sees any individual device's outputs.
//!
//! Module map:
//! - [`numkernel`]: dense primitives, the LSTM cell and a finite-difference
//!   gradient oracle everything else is validated against
//! - [`corpus`]: the 30-symbol vocabulary, text ingestion, splits, the
//!   public/private partition and sharding
//! - [`clm`]: the stacked-LSTM character model, scoring, sampling, BPC
//! - [`trainer`]: losses, truncated BPTT, Adadelta+Nesterov, checkpoints
//! - [`gkt`]: teacher-driven and student-driven transfer with lot/cycle
//!   scheduling and the OOV probe
//! - [`federation`]: the four-step protocol, simulated network, wire format

pub mod clm;
pub mod corpus;
pub mod error;
pub mod federation;
pub mod gkt;
pub mod numkernel;
pub mod par;
pub mod trainer;

pub use error::{GktError, Result};
