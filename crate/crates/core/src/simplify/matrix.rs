//! Path counts capped at two, for every ordered vertex pair.
//!
//! Each row is held as two bit sets over dense vertex indices: `reach`
//! (at least one path) and `multi` (at least two). Adding two capped counts
//! `a + b` is then `reach = ra | rb`, `multi = ma | mb | (ra & rb)`.
//!
//! Rows are filled in reverse topological order. The paths leaving `u` are,
//! for each out-edge `(u, w)` taken with multiplicity, the one-edge path to
//! `w` plus every path out of `w`.

use fixedbitset::FixedBitSet;

use crate::error::Result;
use crate::graph::{AoeGraph, DenseIndex, VertexId};

#[derive(Clone, Debug)]
pub struct PathCountMatrix {
    index: DenseIndex,
    reach: Vec<FixedBitSet>,
    multi: Vec<FixedBitSet>,
}

impl PathCountMatrix {
    /// `min(2, number of distinct paths u -> v)`; zero for unknown vertices.
    pub fn get(&self, u: VertexId, v: VertexId) -> u8 {
        match (self.index.get(u), self.index.get(v)) {
            (Some(i), Some(j)) => self.get_dense(i, j),
            _ => 0,
        }
    }

    pub fn get_dense(&self, i: usize, j: usize) -> u8 {
        if self.multi[i].contains(j) {
            2
        } else {
            u8::from(self.reach[i].contains(j))
        }
    }

    pub fn index(&self) -> &DenseIndex {
        &self.index
    }

    /// Dense indices reachable from dense vertex `i`.
    pub fn reach_row(&self, i: usize) -> &FixedBitSet {
        &self.reach[i]
    }

    pub fn len(&self) -> usize {
        self.index.len()
    }

    pub fn is_empty(&self) -> bool {
        self.index.is_empty()
    }
}

fn capped_add(
    reach: &mut FixedBitSet,
    multi: &mut FixedBitSet,
    term_reach: &FixedBitSet,
    term_multi: &FixedBitSet,
) {
    let blocks = reach
        .as_mut_slice()
        .iter_mut()
        .zip(multi.as_mut_slice().iter_mut());
    for ((r, m), (tr, tm)) in blocks.zip(term_reach.as_slice().iter().zip(term_multi.as_slice())) {
        *m |= *tm | (*r & *tr);
        *r |= *tr;
    }
}

pub fn compute_path_counts(g: &AoeGraph) -> Result<PathCountMatrix> {
    let order = g.topological_order()?;
    let index = g.dense_index();
    let n = index.len();
    let mut reach = vec![FixedBitSet::with_capacity(n); n];
    let mut multi = vec![FixedBitSet::with_capacity(n); n];
    let mut term = FixedBitSet::with_capacity(n);
    for &u in order.iter().rev() {
        let i = index.of(u);
        let mut row_reach = std::mem::take(&mut reach[i]);
        let mut row_multi = std::mem::take(&mut multi[i]);
        row_reach.grow(n);
        row_multi.grow(n);
        g.for_each_out_edge(u, |w| {
            let j = index.of(w);
            term.clone_from(&reach[j]);
            term.insert(j);
            capped_add(&mut row_reach, &mut row_multi, &term, &multi[j]);
        });
        reach[i] = row_reach;
        multi[i] = row_multi;
    }
    Ok(PathCountMatrix {
        index,
        reach,
        multi,
    })
}
