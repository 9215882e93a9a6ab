//! Activity-on-edge (AOE) project graphs.
//!
//! Expand task-dependency lists into canonical AOE graphs, then simplify
//! them with three local rewrite rules to the unique equivalent graph with
//! the fewest vertices. Two graphs are equivalent when they order the same
//! tasks the same way, so every potential critical path survives.
//!
//! ```
//! use aoe_simplify::{expand_aon, simplify, AonGraph, Engine, TaskLabel};
//!
//! let mut aon = AonGraph::new();
//! for t in ["a", "b", "c"] {
//!     aon.add_task(TaskLabel::new(t)?)?;
//! }
//! aon.add_dep(TaskLabel::new("a")?, TaskLabel::new("c")?)?;
//! aon.add_dep(TaskLabel::new("b")?, TaskLabel::new("c")?)?;
//!
//! let canonical = expand_aon(&aon)?;
//! assert_eq!(canonical.vertex_count(), 8);
//! let out = simplify(&canonical, Engine::Optimized)?;
//! assert_eq!(out.graph.vertex_count(), 3);
//! # Ok::<(), aoe_simplify::AoeError>(())
//! ```

pub mod aon;
pub mod bench;
pub mod canonical;
pub mod error;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod simplify;
pub mod timeline;

pub use aon::AonGraph;
pub use canonical::{canonicalize_aoe, expand_aon, expand_aon_with, DependencyEdges};
pub use error::{AoeError, Result};
pub use graph::{
    equivalent, AoeGraph, Edge, EdgeKind, TaskLabel, TaskReachability, VertexId,
    DEFAULT_PATH_ENUMERATION_LIMIT,
};
pub use io::FormatError;
pub use simplify::{simplify, simplify_with, Engine, RuleApplication, Simplified, SimplifyOptions};
pub use timeline::{schedule, Duration, DurationMap, Timeline};

pub type Timeline64 = Timeline<f64>;
pub type TimelineU64 = Timeline<u64>;
pub type DurationMap64 = DurationMap<f64>;
pub type DurationMapU64 = DurationMap<u64>;
