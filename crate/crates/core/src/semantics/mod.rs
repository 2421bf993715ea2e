//! Two- and three-valued evaluation of ground metric atoms and rule bodies.
//!
//! [`pointwise`] transcribes the truth conditions literally, one timepoint at
//! a time, and serves as the reference. [`symbolic`] computes whole truth sets
//! with interval-set operations and is what the operators use.

pub mod dump;
pub mod head;
pub mod interp;
pub mod model;
pub mod pointwise;
pub mod symbolic;

pub use head::{head_apply, head_points, HeadError};
pub use interp::{Body, Interpretation, ThreeValuedInterpretation, TruthValue3};
pub use model::{is_model2, is_model3};
pub use pointwise::{eval2_at, eval2_body_at, eval3_at, eval3_body_at};
pub use symbolic::{eval2_body_set, eval2_set, eval3_body_sets};
