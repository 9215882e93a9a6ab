#![allow(dead_code)]

use aoe_simplify::{AoeGraph, AonGraph, TaskLabel, VertexId};

pub fn l(s: &str) -> TaskLabel {
    TaskLabel::new(s).unwrap()
}

pub fn v(i: u32) -> VertexId {
    VertexId(i)
}

pub fn aon(tasks: &[&str], deps: &[(&str, &str)]) -> AonGraph {
    let mut a = AonGraph::new();
    for t in tasks {
        a.add_task(l(t)).unwrap();
    }
    for (x, y) in deps {
        a.add_dep(l(x), l(y)).unwrap();
    }
    a
}

/// Single task.
pub fn f1() -> AonGraph {
    aon(&["a"], &[])
}

/// Two independent tasks.
pub fn f2() -> AonGraph {
    aon(&["a", "b"], &[])
}

/// Chain a < b.
pub fn f3() -> AonGraph {
    aon(&["a", "b"], &[("a", "b")])
}

/// a < c, a < d, b < d.
pub fn f4() -> AonGraph {
    aon(&["a", "b", "c", "d"], &[("a", "c"), ("a", "d"), ("b", "d")])
}

pub fn fixtures() -> Vec<(&'static str, AonGraph)> {
    vec![("F1", f1()), ("F2", f2()), ("F3", f3()), ("F4", f4())]
}

/// Every unlabeled edge leaves a vertex where some task ends and enters one
/// where some task starts.
pub fn unlabeled_edges_join_end_to_start(g: &AoeGraph) -> bool {
    g.unlabeled_edges()
        .all(|(u, w)| !g.in_tasks(u).unwrap().is_empty() && !g.out_tasks(w).unwrap().is_empty())
}

pub fn every_vertex_touches_a_task(g: &AoeGraph) -> bool {
    g.vertices()
        .all(|x| !g.in_tasks(x).unwrap().is_empty() || !g.out_tasks(x).unwrap().is_empty())
}

/// Capped count of distinct paths `from -> to`, by enumerating every path.
pub fn brute_path_count(g: &AoeGraph, from: VertexId, to: VertexId) -> u8 {
    fn walk(g: &AoeGraph, at: VertexId, to: VertexId) -> usize {
        let mut total = 0;
        for w in g.out_unlabeled(at).unwrap() {
            total += usize::from(*w == to) + walk(g, *w, to);
        }
        for t in g.out_tasks(at).unwrap() {
            let w = g.end(t).unwrap();
            total += usize::from(w == to) + walk(g, w, to);
        }
        total
    }
    walk(g, from, to).min(2) as u8
}

fn permutations(n: usize) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for at in 0..=p.len() {
            let mut q = p.clone();
            q.insert(at, (n - 1) as u32);
            out.push(q);
        }
    }
    out
}

fn upper_pairs(k: usize) -> Vec<(usize, usize)> {
    (0..k)
        .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
        .collect()
}

/// Builds a DAG on `ids` where pair `(i, j)`, `i < j` in position order,
/// gets `mult[k]` parallel edges: 1 = unlabeled, 2 = unlabeled + task,
/// 3 = two tasks.
fn dag(ids: &[u32], pairs: &[(usize, usize)], mult: &[u8]) -> AoeGraph {
    let mut g = AoeGraph::new();
    for &id in ids {
        g.add_vertex(VertexId(id));
    }
    let mut next = 0;
    let mut task = |g: &mut AoeGraph, a, b| {
        g.add_task(TaskLabel::new(format!("e{next}")).unwrap(), a, b)
            .unwrap();
        next += 1;
    };
    for (&(i, j), &m) in pairs.iter().zip(mult) {
        let (a, b) = (VertexId(ids[i]), VertexId(ids[j]));
        match m {
            0 => {}
            1 => {
                g.add_unlabeled(a, b).unwrap();
            }
            2 => {
                g.add_unlabeled(a, b).unwrap();
                task(&mut g, a, b);
            }
            _ => {
                task(&mut g, a, b);
                task(&mut g, a, b);
            }
        }
    }
    g
}

/// Every labeled simple DAG on `k` vertices, each one as an edge subset of
/// the forward pairs of some vertex ordering (so some appear repeatedly).
pub fn all_simple_dags(k: usize) -> impl Iterator<Item = AoeGraph> {
    let pairs = upper_pairs(k);
    permutations(k).into_iter().flat_map(move |perm| {
        let pairs = pairs.clone();
        (0u32..(1 << pairs.len())).map(move |mask| {
            let mult: Vec<u8> = (0..pairs.len()).map(|b| ((mask >> b) & 1) as u8).collect();
            dag(&perm, &pairs, &mult)
        })
    })
}

/// Every DAG on `k` vertices whose pairs carry zero, one or two parallel
/// edges, with ids in reverse topological order.
pub fn all_multi_dags(k: usize) -> impl Iterator<Item = AoeGraph> {
    let pairs = upper_pairs(k);
    let ids: Vec<u32> = (0..k as u32).rev().collect();
    (0..3u32.pow(pairs.len() as u32)).map(move |code| {
        let mut c = code;
        let mult: Vec<u8> = pairs
            .iter()
            .map(|_| {
                let m = [0, 1, 3][(c % 3) as usize];
                c /= 3;
                m
            })
            .collect();
        dag(&ids, &pairs, &mult)
    })
}

/// Random DAG on 6 to 8 vertices with scattered ids and parallel edges.
pub fn random_dag<R: rand::Rng>(rng: &mut R) -> AoeGraph {
    use rand::seq::SliceRandom;
    let k = rng.gen_range(6..=8);
    let pairs = upper_pairs(k);
    let mut ids: Vec<u32> = (0..k as u32).map(|i| i * 3).collect();
    ids.shuffle(rng);
    let mult: Vec<u8> = pairs
        .iter()
        .map(|_| *[0, 0, 1, 2, 3].choose(rng).unwrap())
        .collect();
    dag(&ids, &pairs, &mult)
}

/// First pair where the capped path-count matrix disagrees with path
/// enumeration.
pub fn matrix_mismatch(g: &AoeGraph) -> Option<(VertexId, VertexId, u8, u8)> {
    let m = aoe_simplify::simplify::compute_path_counts(g).unwrap();
    for a in g.vertices() {
        for b in g.vertices() {
            let (got, want) = (m.get(a, b), brute_path_count(g, a, b));
            if got != want {
                return Some((a, b, got, want));
            }
        }
    }
    None
}
