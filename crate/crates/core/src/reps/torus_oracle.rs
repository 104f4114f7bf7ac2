//! Brute-force component count for the stabilizer of a point under
//! `Aᵖ ⊗ A^q`, independent of the gcd argument.
//!
//! The stabilizer is `{(x, y) ∈ T² : px + qy ∈ 2πℤ}`. On an `N × N` grid of
//! the torus (cell `(i, j)` covering `[i, i+1] × [j, j+1]` in units of `2π/N`)
//! a cell is marked when the linear form `pi + qj` crosses a multiple of `N`
//! somewhere on its closure. Marked cells are then grouped into components by
//! 8-neighbour adjacency with wraparound.

use std::collections::HashMap;

use num_integer::Integer;
use rayon::prelude::*;

use crate::error::{Error, Result};

/// Default resolution: `720 · max(|p|, |q|)` cells per side.
pub fn grid_size(p: i64, q: i64) -> usize {
    720 * p.unsigned_abs().max(q.unsigned_abs()) as usize
}

pub fn stabilizer_components(p: i64, q: i64) -> Result<usize> {
    if p == 0 && q == 0 {
        return Err(Error::ZeroPair);
    }
    Ok(stabilizer_components_on_grid(p, q, grid_size(p, q)))
}

pub fn stabilizer_components_on_grid(p: i64, q: i64, n: usize) -> usize {
    let rows = marked_cells(p, q, n);
    count_components(&rows, n)
}

/// Marked cells, as sorted column indices per row `j`.
fn marked_cells(p: i64, q: i64, n: usize) -> Vec<Vec<usize>> {
    // Solve along the axis with a nonzero coefficient; swap so that axis is `i`.
    let (swap, p, q) = if p == 0 { (true, q, p) } else { (false, p, q) };
    let (p, q) = if p < 0 { (-p, -q) } else { (p, q) };
    let big_n = n as i64;
    let corner_offsets = [0, p, q, p + q];
    let omin = *corner_offsets.iter().min().expect("nonempty");
    let omax = *corner_offsets.iter().max().expect("nonempty");

    let rows: Vec<Vec<usize>> = (0..n)
        .into_par_iter()
        .map(|j| {
            let base = q * j as i64;
            let lo_val = base + omin;
            let hi_val = p * (big_n - 1) + base + omax;
            let mut cells = Vec::new();
            for mult in Integer::div_floor(&lo_val, &big_n)..=Integer::div_ceil(&hi_val, &big_n) {
                let target = mult * big_n - base;
                let i_lo = Integer::div_ceil(&(target - omax), &p).max(0);
                let i_hi = Integer::div_floor(&(target - omin), &p).min(big_n - 1);
                cells.extend((i_lo..=i_hi).map(|i| i as usize));
            }
            cells.sort_unstable();
            cells.dedup();
            cells
        })
        .collect();

    if !swap {
        return rows;
    }
    let mut transposed = vec![Vec::new(); n];
    for (j, row) in rows.iter().enumerate() {
        for &i in row {
            transposed[i].push(j);
        }
    }
    transposed
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(size: usize) -> Self {
        Self {
            parent: (0..size).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

pub(crate) fn count_components(rows: &[Vec<usize>], n: usize) -> usize {
    let mut index = HashMap::new();
    for (j, row) in rows.iter().enumerate() {
        for &i in row {
            let next = index.len();
            index.insert((i, j), next);
        }
    }
    let mut uf = UnionFind::new(index.len());
    for (&(i, j), &id) in &index {
        for di in [n - 1, 0, 1] {
            for dj in [n - 1, 0, 1] {
                let neighbour = ((i + di) % n, (j + dj) % n);
                if let Some(&other) = index.get(&neighbour) {
                    uf.union(id, other);
                }
            }
        }
    }
    let mut roots: Vec<usize> = (0..index.len()).map(|x| uf.find(x)).collect();
    roots.sort_unstable();
    roots.dedup();
    roots.len()
}
