//! Exact enumerative combinatorics of Dyck paths by valleys.
//!
//! - [`algebra`]: big integers and exact polynomials in `q`.
//! - [`numbers`]: Narayana, Catalan and Hoggatt numbers, their q-analogs and
//!   their values at `q = -1`.
//! - [`paths`]: Dyck and symmetric Dyck paths, valley and major-index
//!   statistics, enumerators and the half-path dynamic program.
//! - [`verify`]: the identity sweep producing a [`report::VerificationReport`].
//!
//! ```
//! use symdyck::numbers::{q_narayana, symmetric_narayana_closed};
//! use symdyck::paths::{count_u_dp, GgTable};
//!
//! let p = q_narayana(5, 2)?;
//! assert_eq!(p.eval_i64(-1), symmetric_narayana_closed(5, 2));
//! let u = count_u_dp(10, &GgTable::build(10));
//! assert_eq!(u.len(), 10);
//! # Ok::<(), symdyck::Error>(())
//! ```

pub mod algebra;
pub mod error;
pub mod numbers;
pub mod paths;
pub mod report;
pub mod table;
pub mod verify;

pub use algebra::{Integer, NegOneJet, QPoly};
pub use error::{Error, Result};
pub use paths::{Path, Step};
pub use report::{Entry, Status, VerificationReport};
pub use table::{TableFormat, TriangleTable};
