//! Critical independent sets, König-Egerváry recognition and the related
//! invariants (ker, core, corona, nucleus, diadem, α, α′, μ) of finite
//! simple graphs.

pub mod critical;
pub mod error;
pub mod family;
pub mod fixtures;
pub mod format;
pub mod generate;
pub mod graph;
pub mod ke;
pub mod matching;
pub mod oracle;
pub mod report;
pub mod set;
pub mod suite;

pub use error::{Error, Result};
pub use family::SetFamily;
pub use graph::Graph;
pub use set::VertexSet;
