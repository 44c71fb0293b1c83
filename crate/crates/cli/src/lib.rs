//! Batch scanner and text reports on top of the `adrg` classifier.

pub mod filter;
pub mod record;
pub mod scan;
pub mod text;

pub use filter::{Filter, FilterError};
pub use record::{Record, Section, Sections};
pub use scan::{run_scan, scan, Format, ScanConfig, ScanError, Summary};
pub use text::{render_report, report_single};
