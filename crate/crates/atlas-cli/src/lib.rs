//! Command-line atlas of the `(n, l, j, m)` periodic table: rendering,
//! element and address queries, ladder walks, and oracle verification.

pub mod commands;
pub mod dataset;
pub mod render;

pub use dataset::{status_of, ElementDataset, Status};
pub use render::{render_table, Annotations, Format, RenderSpec};
