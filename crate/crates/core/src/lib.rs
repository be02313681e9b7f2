//! Dynamic panel-data econometrics: difference and system GMM with
//! specification tests, panel unit-root tests, panel Granger
//! non-causality, and the ingestion and reporting pieces needed to run
//! trade-facilitation models end to end.

pub mod causality;
pub mod diagnostics;
pub mod error;
pub mod gmm;
pub mod ingest;
pub mod linalg;
pub mod panel;
pub mod report;
pub mod simulate;
pub mod unit_root;

pub use error::{Error, Result};
pub use panel::{LogPolicy, PanelDataset};
