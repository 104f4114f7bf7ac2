//! Where the image of `Γ` meets the maximal torus.
//!
//! On `exp(t·u + s·v)` the imaginary part of the trace is
//! `sin(t+s) + sin(s−t) − sin(2s) = 2 sin s (cos t − cos s)`, which vanishes
//! on `s ≡ 0 (mod π)` and `s ≡ ±t (mod 2π)`.

use std::collections::BTreeSet;
use std::f64::consts::{PI, TAU};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::liealg::{expm, AlgebraElement};
use crate::reps::torus_oracle::count_components;

pub fn im_trace_on_torus(t: f64, s: f64) -> f64 {
    let x = AlgebraElement::<f64>::u() * t + AlgebraElement::v() * s;
    expm(&x).trace().im
}

/// Cells of a `grid × grid` mesh on `[0, 2π)²` (indexed `(t, s)`) where
/// `Im Tr` vanishes.
#[derive(Debug, Clone, PartialEq)]
pub struct HypersurfaceScan {
    pub grid: usize,
    pub cells: BTreeSet<(usize, usize)>,
}

/// Marks a cell when `Im Tr` changes sign across its corners or is below
/// `zero_tol` at one of them.
pub fn hypersurface_torus_solutions(grid: usize, zero_tol: f64) -> Result<HypersurfaceScan> {
    if grid < 100 {
        return Err(Error::InvalidParameter {
            name: "grid",
            reason: format!("need at least 100 cells per side, got {grid}"),
        });
    }
    let h = TAU / grid as f64;
    let corners: Vec<Vec<f64>> = (0..=grid)
        .into_par_iter()
        .map(|i| {
            (0..=grid)
                .map(|j| im_trace_on_torus(i as f64 * h, j as f64 * h))
                .collect()
        })
        .collect();
    let mut cells = BTreeSet::new();
    for i in 0..grid {
        for j in 0..grid {
            let vals = [
                corners[i][j],
                corners[i + 1][j],
                corners[i][j + 1],
                corners[i + 1][j + 1],
            ];
            let has_pos = vals.iter().any(|&f| f > 0.0);
            let has_neg = vals.iter().any(|&f| f < 0.0);
            if (has_pos && has_neg) || vals.iter().any(|f| f.abs() < zero_tol) {
                cells.insert((i, j));
            }
        }
    }
    Ok(HypersurfaceScan { grid, cells })
}

/// Distance from `x` to the nearest multiple of `period`.
fn wrap_dist(x: f64, period: f64) -> f64 {
    let r = x.rem_euclid(period);
    r.min(period - r)
}

/// Distance on the torus from `(t, s)` to the nearest solution line.
pub fn distance_to_solution_lines(t: f64, s: f64) -> f64 {
    let horizontal = wrap_dist(s, PI);
    let diagonal = wrap_dist(s - t, TAU) / 2f64.sqrt();
    let antidiagonal = wrap_dist(s + t, TAU) / 2f64.sqrt();
    horizontal.min(diagonal).min(antidiagonal)
}

impl HypersurfaceScan {
    pub fn cell_width(&self) -> f64 {
        TAU / self.grid as f64
    }

    fn cell_of(&self, t: f64, s: f64) -> (usize, usize) {
        let idx = |x: f64| ((x.rem_euclid(TAU) / self.cell_width()) as usize).min(self.grid - 1);
        (idx(t), idx(s))
    }

    pub fn contains_point(&self, t: f64, s: f64) -> bool {
        self.cells.contains(&self.cell_of(t, s))
    }

    /// Largest distance from a marked cell's centre to the solution set.
    pub fn max_line_distance(&self) -> f64 {
        let h = self.cell_width();
        self.cells
            .iter()
            .map(|&(i, j)| distance_to_solution_lines((i as f64 + 0.5) * h, (j as f64 + 0.5) * h))
            .fold(0.0, f64::max)
    }

    /// Points sampled along each solution line whose cell is not marked.
    pub fn uncovered_line_points(&self) -> usize {
        let h = self.cell_width();
        let lines: [fn(f64) -> (f64, f64); 4] =
            [|x| (x, 0.0), |x| (x, PI), |x| (x, x), |x| (x, -x)];
        lines
            .iter()
            .flat_map(|line| (0..self.grid).map(move |k| line((k as f64 + 0.37) * h)))
            .filter(|&(t, s)| !self.contains_point(t, s))
            .count()
    }

    /// Connected components of the marked cells, with 8-neighbour adjacency
    /// on the torus.
    pub fn component_count(&self) -> usize {
        let mut rows = vec![Vec::new(); self.grid];
        for &(i, j) in &self.cells {
            rows[j].push(i);
        }
        count_components(&rows, self.grid)
    }
}
