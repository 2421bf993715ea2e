//! Model computation and checking on top of the operators, plus the
//! brute-force machinery used to cross-check stable models.

pub mod config;
pub mod differential;
pub mod enumerate;
pub mod ht;
pub mod models;
pub mod report;

pub use config::{EngineConfig, EngineError, Mode};
pub use differential::{differential_stable_check, minimize_instance, DiffReport};
pub use enumerate::{enumerate_stable2, enumerate_stable2_bounded, enumerate_stable3_bounded, Enumeration, WindowSpace};
pub use ht::{check_lemma_prefixpoint, is_ht_model, is_stable_ht};
pub use models::{is_stable2, is_stable3, is_supported_model, kripke_kleene_model, well_founded_model};
pub use report::{ModelKind, ModelReport, ModelValue};
