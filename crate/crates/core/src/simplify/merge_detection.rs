//! Grouping of rule-1 mergeable vertices by bucket sorting neighbor lists.

use crate::graph::{AoeGraph, DenseIndex, VertexId};
use crate::simplify::rules::Rule1Direction;

/// Vertices that rule 1 can merge pairwise, ascending by id.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct MergeGroup {
    pub direction: Rule1Direction,
    pub members: Vec<VertexId>,
}

/// Stable counting sort of `items` by `key(item) < buckets`.
fn bucket_sort<T: Copy>(items: &[T], buckets: usize, key: impl Fn(&T) -> usize) -> Vec<T> {
    let mut counts = vec![0usize; buckets + 1];
    for it in items {
        counts[key(it) + 1] += 1;
    }
    for b in 1..=buckets {
        counts[b] += counts[b - 1];
    }
    let mut out = vec![items[0]; items.len()];
    for it in items {
        let slot = &mut counts[key(it)];
        out[*slot] = *it;
        *slot += 1;
    }
    out
}

/// `lists[a]` is the ascending list of `b` over all pairs `(a, b)`, built by
/// sorting on the second coordinate and then stably on the first.
fn sorted_lists(n: usize, pairs: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut lists = vec![Vec::new(); n];
    if pairs.is_empty() {
        return lists;
    }
    let by_second = bucket_sort(pairs, n, |p| p.1);
    for (a, b) in bucket_sort(&by_second, n, |p| p.0) {
        lists[a].push(b);
    }
    lists
}

/// Splits every candidate set into classes with identical lists.
fn detect(n: usize, lists: &[Vec<usize>], candidates: &[usize]) -> Vec<Vec<usize>> {
    let mut classes = Vec::new();
    if candidates.len() < 2 {
        return classes;
    }
    let by_degree = bucket_sort(candidates, n, |&v| lists[v].len());
    let mut stack: Vec<(Vec<usize>, usize)> = Vec::new();
    for chunk in by_degree.chunk_by(|&a, &b| lists[a].len() == lists[b].len()) {
        if chunk.len() > 1 {
            stack.push((chunk.to_vec(), lists[chunk[0]].len()));
        }
    }
    let mut scratch: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut touched = Vec::new();
    while let Some((bucket, i)) = stack.pop() {
        if i == 0 {
            classes.push(bucket);
            continue;
        }
        for &v in &bucket {
            let key = lists[v][i - 1];
            if scratch[key].is_empty() {
                touched.push(key);
            }
            scratch[key].push(v);
        }
        for key in touched.drain(..) {
            let split = std::mem::take(&mut scratch[key]);
            if split.len() > 1 {
                stack.push((split, i - 1));
            }
        }
    }
    classes
}

fn to_groups(
    index: &DenseIndex,
    direction: Rule1Direction,
    classes: Vec<Vec<usize>>,
) -> Vec<MergeGroup> {
    classes
        .into_iter()
        .map(|class| {
            let mut members: Vec<VertexId> = class.into_iter().map(|i| index.id(i)).collect();
            members.sort();
            MergeGroup { direction, members }
        })
        .collect()
}

/// Forward groups (no outgoing task, same out-neighbors) and backward groups
/// (no incoming task, same in-neighbors). Forward groups come first, each
/// direction ordered by smallest member.
pub fn merge_detection(g: &AoeGraph) -> Vec<MergeGroup> {
    let index = g.dense_index();
    let n = index.len();
    let forward_pairs: Vec<(usize, usize)> = g
        .unlabeled_edges()
        .map(|(a, b)| (index.of(a), index.of(b)))
        .collect();
    let backward_pairs: Vec<(usize, usize)> = forward_pairs.iter().map(|&(a, b)| (b, a)).collect();

    let no_out_task: Vec<usize> = (0..n)
        .filter(|&i| g.out_tasks(index.id(i)).expect("live").is_empty())
        .collect();
    let no_in_task: Vec<usize> = (0..n)
        .filter(|&i| g.in_tasks(index.id(i)).expect("live").is_empty())
        .collect();

    let mut forward = to_groups(
        &index,
        Rule1Direction::Forward,
        detect(n, &sorted_lists(n, &forward_pairs), &no_out_task),
    );
    let mut backward = to_groups(
        &index,
        Rule1Direction::Backward,
        detect(n, &sorted_lists(n, &backward_pairs), &no_in_task),
    );
    forward.sort();
    backward.sort();
    forward.extend(backward);
    forward
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::aon::AonGraph;
    use crate::canonical::expand_aon;
    use crate::graph::TaskLabel;

    #[test]
    fn bucket_sort_is_stable() {
        let items = [(3, 'a'), (1, 'b'), (3, 'c'), (0, 'd'), (1, 'e')];
        let sorted = bucket_sort(&items, 4, |p| p.0);
        assert_eq!(
            sorted,
            vec![(0, 'd'), (1, 'b'), (1, 'e'), (3, 'a'), (3, 'c')]
        );
    }

    #[test]
    fn sorted_lists_by_two_passes() {
        let lists = sorted_lists(4, &[(2, 3), (0, 2), (2, 0), (0, 1), (2, 1)]);
        assert_eq!(lists, vec![vec![1, 2], vec![], vec![0, 1, 3], vec![]]);
    }

    #[test]
    fn parallel_tasks_groups() {
        let mut a = AonGraph::new();
        a.add_task(TaskLabel::new("a").unwrap()).unwrap();
        a.add_task(TaskLabel::new("b").unwrap()).unwrap();
        let g = expand_aon(&a).unwrap();
        let groups = merge_detection(&g);
        assert_eq!(
            groups,
            vec![
                MergeGroup {
                    direction: Rule1Direction::Forward,
                    members: vec![VertexId(2), VertexId(4)]
                },
                MergeGroup {
                    direction: Rule1Direction::Backward,
                    members: vec![VertexId(1), VertexId(3)]
                },
            ]
        );
    }

    #[test]
    fn distinct_neighborhoods() {
        let mut g = AoeGraph::new();
        for i in 0..4 {
            g.add_vertex(VertexId(i));
        }
        let t = |s: &str| TaskLabel::new(s).unwrap();
        g.add_task(t("a"), VertexId(0), VertexId(1)).unwrap();
        g.add_task(t("b"), VertexId(2), VertexId(3)).unwrap();
        g.add_unlabeled(VertexId(1), VertexId(2)).unwrap();
        assert!(merge_detection(&g).is_empty());
    }
}
