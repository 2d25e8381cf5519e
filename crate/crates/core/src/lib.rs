//! Mixed linear layouts: every edge lives on a stack page (no two edges cross)
//! or a queue page (no two edges nest) over one shared vertex order.

pub mod bounds;
pub mod cli;
pub mod constructions;
pub mod document;
pub mod error;
pub mod graph;
pub mod gridpaths;
pub mod layout;
pub mod patterns;
pub mod render;
pub mod solvers;

pub use error::{Error, Result};
pub use graph::{Edge, Graph, LinearOrder};
pub use layout::{edge_relation, validate_layout, EdgeRelation, MixedLayout, Page, PageKind, ValidationReport, Violation};
pub use patterns::{edge_midpoint, max_rainbow, max_twist, min_queues_fixed_order, Midpoint};
