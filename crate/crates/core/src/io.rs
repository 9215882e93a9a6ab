//! JSON documents for dependency lists, AOE graphs, durations and timelines,
//! plus Graphviz DOT output.
//!
//! ```json
//! {"tasks": [{"id": "a", "deps": []}, {"id": "b", "deps": ["a"]}]}
//! {"vertices": [0, 1, 2], "edges": [{"from": 0, "to": 1, "task": "a"},
//!                                    {"from": 1, "to": 2, "task": null}]}
//! ```

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::{self, Display, Write as _};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::aon::AonGraph;
use crate::error::AoeError;
use crate::graph::{AoeGraph, TaskLabel, VertexId};
use crate::oracle::signature;
use crate::timeline::{DurationMap, Timeline};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error(transparent)]
    Graph(#[from] AoeError),
}

impl From<serde_json::Error> for FormatError {
    fn from(e: serde_json::Error) -> Self {
        FormatError::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AonDoc {
    tasks: Vec<AonTaskDoc>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AonTaskDoc {
    id: String,
    deps: Vec<String>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AoeDoc {
    vertices: Vec<u32>,
    edges: Vec<EdgeDoc>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EdgeDoc {
    from: u32,
    to: u32,
    task: Option<String>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TimelineDoc {
    makespan: f64,
    levels: BTreeMap<u32, f64>,
    critical_tasks: Vec<String>,
}

fn to_json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents always serialize");
    s.push('\n');
    s
}

pub fn parse_aon(text: &str) -> Result<AonGraph, FormatError> {
    let doc: AonDoc = serde_json::from_str(text)?;
    let mut aon = AonGraph::new();
    for t in &doc.tasks {
        aon.add_task(TaskLabel::new(&t.id)?)?;
    }
    for t in &doc.tasks {
        let task = TaskLabel::new(&t.id)?;
        for d in &t.deps {
            aon.add_dep(TaskLabel::new(d)?, task.clone())?;
        }
    }
    aon.reachability()?;
    Ok(aon)
}

/// Tasks in their stored order, each with its prerequisites sorted by label.
pub fn emit_aon(aon: &AonGraph) -> String {
    let tasks = aon
        .tasks()
        .iter()
        .map(|t| AonTaskDoc {
            id: t.to_string(),
            deps: aon
                .prerequisites(t)
                .into_iter()
                .map(|d| d.to_string())
                .collect(),
        })
        .collect();
    to_json(&AonDoc { tasks })
}

/// Parses an AOE document, coalescing duplicate unlabeled edges and
/// rejecting cyclic graphs.
pub fn parse_aoe(text: &str) -> Result<AoeGraph, FormatError> {
    let doc: AoeDoc = serde_json::from_str(text)?;
    let mut g = AoeGraph::new();
    for &v in &doc.vertices {
        if !g.add_vertex(VertexId(v)) {
            return Err(AoeError::DuplicateVertex(VertexId(v)).into());
        }
    }
    for e in &doc.edges {
        let (a, b) = (VertexId(e.from), VertexId(e.to));
        match &e.task {
            Some(t) => g.add_task(TaskLabel::new(t)?, a, b)?,
            None => {
                g.add_unlabeled(a, b)?;
            }
        }
    }
    if !g.is_acyclic() {
        return Err(AoeError::Cycle.into());
    }
    Ok(g)
}

/// Copy of `g` with vertices renumbered `0..n` in order of their task
/// signatures (ties kept in id order), and the old-to-new id map.
pub fn canonical_renumbering(g: &AoeGraph) -> (AoeGraph, BTreeMap<VertexId, VertexId>) {
    let mut keyed: Vec<_> = g
        .vertices()
        .map(|v| (signature(g, v).expect("live vertex"), v))
        .collect();
    keyed.sort();
    let map: BTreeMap<VertexId, VertexId> = keyed
        .iter()
        .enumerate()
        .map(|(i, &(_, v))| (v, VertexId(i as u32)))
        .collect();
    let mut out = AoeGraph::new();
    for new in map.values() {
        out.add_vertex(*new);
    }
    for (t, a, b) in g.task_edges() {
        out.add_task(t.clone(), map[&a], map[&b])
            .expect("renaming keeps edges valid");
    }
    for (a, b) in g.unlabeled_edges() {
        out.add_unlabeled(map[&a], map[&b])
            .expect("renaming keeps edges valid");
    }
    (out, map)
}

/// Serializes `g` after [`canonical_renumbering`]; edges sorted by
/// `(from, to)`, task edges before the unlabeled edge of the same pair.
pub fn emit_aoe(g: &AoeGraph) -> String {
    let (g, _) = canonical_renumbering(g);
    emit_aoe_as_is(&g)
}

/// Serializes `g` keeping its vertex ids.
pub fn emit_aoe_as_is(g: &AoeGraph) -> String {
    let edges = g
        .edges()
        .into_iter()
        .map(|e| EdgeDoc {
            from: e.tail.0,
            to: e.head.0,
            task: match e.kind {
                crate::graph::EdgeKind::Task(t) => Some(t.to_string()),
                crate::graph::EdgeKind::Unlabeled => None,
            },
        })
        .collect();
    to_json(&AoeDoc {
        vertices: g.vertices().map(|v| v.0).collect(),
        edges,
    })
}

/// `{"task": duration, ...}`.
pub fn parse_durations(text: &str) -> Result<DurationMap<f64>, FormatError> {
    let doc: BTreeMap<String, f64> = serde_json::from_str(text)?;
    let mut map = DurationMap::new();
    for (t, d) in doc {
        map.insert(TaskLabel::new(t)?, d)?;
    }
    Ok(map)
}

pub fn emit_timeline(t: &Timeline<f64>) -> String {
    to_json(&TimelineDoc {
        makespan: t.makespan,
        levels: t.level.iter().map(|(v, &l)| (v.0, l)).collect(),
        critical_tasks: t.critical_tasks.iter().map(|t| t.to_string()).collect(),
    })
}

pub fn parse_timeline(text: &str) -> Result<Timeline<f64>, FormatError> {
    let doc: TimelineDoc = serde_json::from_str(text)?;
    Ok(Timeline {
        level: doc
            .levels
            .into_iter()
            .map(|(v, l)| (VertexId(v), l))
            .collect(),
        makespan: doc.makespan,
        critical_tasks: doc
            .critical_tasks
            .iter()
            .map(TaskLabel::new)
            .collect::<Result<BTreeSet<_>, _>>()?,
    })
}

struct Quoted<'a>(&'a str);

impl Display for Quoted<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_char('"')?;
        for c in self.0.chars() {
            match c {
                '"' | '\\' => write!(f, "\\{c}")?,
                '\n' => f.write_str("\\n")?,
                _ => f.write_char(c)?,
            }
        }
        f.write_char('"')
    }
}

/// Graphviz source: task edges solid and labeled, unlabeled edges dashed.
///
/// With a timeline every vertex carries a `level` attribute and its time in
/// the label, and vertices on the same level share a rank.
pub fn emit_dot<D: Display>(
    g: &AoeGraph,
    timeline: Option<&Timeline<D>>,
) -> Result<String, AoeError> {
    g.topological_order()?;
    let mut out = String::new();
    out.push_str("digraph aoe {\n    rankdir=LR;\n    node [shape=circle];\n");
    for v in g.vertices() {
        match timeline.and_then(|t| t.level.get(&v)) {
            Some(level) => {
                let label = format!("{v}\nt={level}");
                writeln!(
                    out,
                    "    {v} [label={}, level={}];",
                    Quoted(&label),
                    Quoted(&level.to_string())
                )
            }
            None => writeln!(out, "    {v};"),
        }
        .expect("writing to a String");
    }
    if let Some(t) = timeline {
        let mut ranks: BTreeMap<String, Vec<VertexId>> = BTreeMap::new();
        let mut order = Vec::new();
        for v in g.vertices() {
            if let Some(level) = t.level.get(&v) {
                let key = level.to_string();
                if !ranks.contains_key(&key) {
                    order.push(key.clone());
                }
                ranks.entry(key).or_default().push(v);
            }
        }
        for key in order {
            let members: Vec<String> = ranks[&key].iter().map(|v| v.to_string()).collect();
            writeln!(out, "    {{ rank=same; {}; }}", members.join("; "))
                .expect("writing to a String");
        }
    }
    for e in g.edges() {
        match &e.kind {
            crate::graph::EdgeKind::Task(t) => {
                writeln!(
                    out,
                    "    {} -> {} [label={}, style=solid];",
                    e.tail,
                    e.head,
                    Quoted(t.as_str())
                )
            }
            crate::graph::EdgeKind::Unlabeled => {
                writeln!(out, "    {} -> {} [style=dashed];", e.tail, e.head)
            }
        }
        .expect("writing to a String");
    }
    out.push_str("}\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn aon_document() {
        let aon = parse_aon(r#"{"tasks":[{"id":"a","deps":[]}]}"#).unwrap();
        assert_eq!(aon.task_count(), 1);

        let err = parse_aon(r#"{"tasks":[{"id":"a","deps":["x"]}]}"#).unwrap_err();
        assert!(matches!(
            err,
            FormatError::Graph(AoeError::UnknownDep { .. })
        ));
        let err =
            parse_aon(r#"{"tasks":[{"id":"a","deps":[]},{"id":"a","deps":[]}]}"#).unwrap_err();
        assert!(matches!(
            err,
            FormatError::Graph(AoeError::DuplicateTask(_))
        ));
        let err = parse_aon(r#"{"tasks":[{"id":"a","deps":["b"]},{"id":"b","deps":["a"]}]}"#)
            .unwrap_err();
        assert!(matches!(err, FormatError::Graph(AoeError::Cycle)));
        let err = parse_aon("{\"tasks\":\n[{\"id\":1}]}").unwrap_err();
        assert!(matches!(err, FormatError::Parse { line: 2, .. }), "{err}");
    }

    #[test]
    fn aon_text_round_trip() {
        let text = "{\n  \"tasks\": [\n    {\n      \"id\": \"b\",\n      \"deps\": [\n        \"a\"\n      ]\n    },\n    {\n      \"id\": \"a\",\n      \"deps\": []\n    }\n  ]\n}\n";
        assert_eq!(emit_aon(&parse_aon(text).unwrap()), text);
    }

    #[test]
    fn aoe_document_errors() {
        let self_loop = r#"{"vertices":[0],"edges":[{"from":0,"to":0,"task":null}]}"#;
        assert!(matches!(
            parse_aoe(self_loop),
            Err(FormatError::Graph(AoeError::SelfLoop(_)))
        ));
        let dup = r#"{"vertices":[0,1,2],"edges":[{"from":0,"to":1,"task":"a"},{"from":1,"to":2,"task":"a"}]}"#;
        assert!(matches!(
            parse_aoe(dup),
            Err(FormatError::Graph(AoeError::DuplicateTaskLabel(_)))
        ));
        let cyc = r#"{"vertices":[0,1],"edges":[{"from":0,"to":1,"task":null},{"from":1,"to":0,"task":"a"}]}"#;
        assert!(matches!(
            parse_aoe(cyc),
            Err(FormatError::Graph(AoeError::Cycle))
        ));
        let unknown = r#"{"vertices":[0],"edges":[{"from":0,"to":3,"task":null}]}"#;
        assert!(matches!(
            parse_aoe(unknown),
            Err(FormatError::Graph(AoeError::UnknownVertex(_)))
        ));
        let coalesced = r#"{"vertices":[0,1],"edges":[{"from":0,"to":1,"task":null},{"from":0,"to":1,"task":null}]}"#;
        assert_eq!(parse_aoe(coalesced).unwrap().unlabeled_count(), 1);
        assert!(matches!(
            parse_aoe(r#"{"vertices":[0]}"#),
            Err(FormatError::Parse { .. })
        ));
    }

    #[test]
    fn renumbering_orders_by_signature() {
        let g = parse_aoe(
            r#"{"vertices":[5,9,2],"edges":[{"from":9,"to":2,"task":"b"},{"from":5,"to":9,"task":"a"}]}"#,
        )
        .unwrap();
        let (r, map) = canonical_renumbering(&g);
        // Signatures: 5 = ([], [a]), 9 = ([a], [b]), 2 = ([b], []).
        assert_eq!(map[&VertexId(5)], VertexId(0));
        assert_eq!(map[&VertexId(9)], VertexId(1));
        assert_eq!(map[&VertexId(2)], VertexId(2));
        assert_eq!(r.st(&TaskLabel::new("b").unwrap()).unwrap(), VertexId(1));
    }

    #[test]
    fn timeline_round_trip() {
        let t = Timeline {
            level: BTreeMap::from([(VertexId(0), 0.0), (VertexId(1), 2.5)]),
            makespan: 2.5,
            critical_tasks: BTreeSet::from([TaskLabel::new("a").unwrap()]),
        };
        assert_eq!(parse_timeline(&emit_timeline(&t)).unwrap(), t);
        let d = parse_durations(r#"{"a": 2, "b": 0.5}"#).unwrap();
        assert_eq!(d.get(&TaskLabel::new("b").unwrap()), Some(0.5));
        assert!(parse_durations(r#"{"a": -1}"#).is_err());
    }

    #[test]
    fn dot_quotes_labels() {
        let g = parse_aoe(r#"{"vertices":[0,1],"edges":[{"from":0,"to":1,"task":"say \"hi\""}]}"#)
            .unwrap();
        let dot = emit_dot::<f64>(&g, None).unwrap();
        assert!(
            dot.contains(r#"0 -> 1 [label="say \"hi\"", style=solid];"#),
            "{dot}"
        );
    }
}
