use thiserror::Error;

use crate::graph::{TaskLabel, VertexId};
use crate::simplify::RuleApplication;

/// Errors raised by graph construction, queries and rewriting.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AoeError {
    #[error("graph contains a directed cycle")]
    Cycle,
    #[error("unknown task `{0}`")]
    UnknownTask(TaskLabel),
    #[error("task `{0}` cannot be related to itself")]
    SameTask(TaskLabel),
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("vertex {0} already exists")]
    DuplicateVertex(VertexId),
    #[error("cannot merge vertex {0} with itself")]
    SameVertex(VertexId),
    #[error("no unlabeled edge {0} -> {1}")]
    UnknownEdge(VertexId, VertexId),
    #[error("edge {0} -> {1} carries task `{2}`, not an unlabeled edge")]
    NotUnlabeled(VertexId, VertexId, TaskLabel),
    #[error("merging {0} and {1} would drop task `{2}`")]
    MergeWouldDropTask(VertexId, VertexId, TaskLabel),
    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),
    #[error("task label `{0}` appears on more than one edge")]
    DuplicateTaskLabel(TaskLabel),
    #[error("task labels must be nonempty")]
    EmptyLabel,
    #[error("duplicate task `{0}`")]
    DuplicateTask(TaskLabel),
    #[error("task `{task}` depends on unknown task `{dep}`")]
    UnknownDep { task: TaskLabel, dep: TaskLabel },
    #[error("{count} tasks exceeds the enumeration limit of {limit}")]
    SizeLimitExceeded { count: usize, limit: usize },
    #[error("{count} tasks exceeds the brute-force search limit of {limit}")]
    TooLarge { count: usize, limit: usize },
    #[error("relation is not a strict partial order")]
    NotPartialOrder,
    #[error("rule not applicable: {0}")]
    RuleNotApplicable(RuleApplication),
    #[error("no duration given for task `{0}`")]
    MissingDuration(TaskLabel),
    #[error("duration of task `{0}` must be positive")]
    NonPositiveDuration(TaskLabel),
    #[error("graph still admits a rule application")]
    NotSaturated,
}

pub type Result<T, E = AoeError> = std::result::Result<T, E>;
