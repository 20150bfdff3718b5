//! Layered dynamic programming over lattice positions.

use std::collections::HashMap;

use num_traits::Zero;

use crate::numbers::Count;
use crate::walk::Step;

pub(crate) type Layer = HashMap<Vec<i64>, Count>;

pub(crate) fn step_set(dim: usize, allow_zero_steps: bool) -> Vec<Step> {
    let mut steps: Vec<Step> = (1..=dim).flat_map(|i| [Step::Up(i), Step::Down(i)]).collect();
    if allow_zero_steps {
        steps.push(Step::Stay);
    }
    steps
}

pub(crate) fn l1_distance(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).sum()
}

/// Runs `layers` rounds of the walk recursion starting from `start` with
/// weight one. Positions rejected by `keep(position, layer_index)` are
/// dropped from that layer. `visit` sees every layer, including layer 0.
/// Only two layers are alive at any time.
pub(crate) fn run_layers(
    start: Vec<i64>,
    steps: &[Step],
    layers: usize,
    keep: impl Fn(&[i64], usize) -> bool,
    mut visit: impl FnMut(usize, &Layer),
) {
    let mut current: Layer = HashMap::new();
    if keep(&start, 0) {
        current.insert(start, Count::from(1));
    }
    visit(0, &current);
    for m in 1..=layers {
        let mut next: Layer = HashMap::with_capacity(current.len() * 2);
        for (pos, count) in &current {
            for step in steps {
                let mut p = pos.clone();
                step.apply(&mut p);
                if keep(&p, m) {
                    *next.entry(p).or_insert_with(Count::zero) += count;
                }
            }
        }
        current = next;
        visit(m, &current);
    }
}
