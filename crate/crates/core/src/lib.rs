//! Graded decomposition numbers for the blob algebra at a root of unity.

pub mod alcove;
pub mod error;
pub mod laurent;
pub mod oracle;
pub mod params;
pub mod repdims;
pub mod tableaux;

pub use error::{AlcoveError, OracleError, ParamError, RepError, TableauError};
pub use laurent::LaurentPoly;
pub use params::{validate_params, BlobParams};
