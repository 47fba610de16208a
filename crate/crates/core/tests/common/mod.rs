#![allow(dead_code)]

use ehrhart::generate::{GeneratorConfig, InstanceGenerator};
use ehrhart::Polytope;

/// Generator settings per dimension, sized so enumeration stays cheap.
pub fn dual_config(seed: u64, dim: usize) -> GeneratorConfig {
    let base = GeneratorConfig::new(seed, dim);
    match dim {
        1 => base.with_coordinate_bound(6).with_vertex_count(2, 4),
        2 => base.with_coordinate_bound(2).with_vertex_count(3, 7),
        _ => base.with_coordinate_bound(1).with_vertex_count(4, 9),
    }
}

pub fn control_config(seed: u64, dim: usize) -> GeneratorConfig {
    let base = GeneratorConfig::new(seed, dim).with_denominator_bound(3);
    match dim {
        1 => base.with_coordinate_bound(2).with_vertex_count(2, 3),
        2 => base.with_coordinate_bound(1).with_vertex_count(3, 6),
        _ => base.with_coordinate_bound(1).with_vertex_count(4, 7),
    }
}

/// `total` instances spread round-robin over dimensions 1..=3.
pub fn dual_instances(seed: u64, total: usize) -> Vec<(String, Polytope)> {
    spread(total, |dim| InstanceGenerator::new(dual_config(seed + dim as u64, dim)), |g| {
        g.dual_of_lattice()
    })
}

pub fn control_instances(seed: u64, total: usize) -> Vec<(String, Polytope)> {
    spread(total, |dim| InstanceGenerator::new(control_config(seed + dim as u64, dim)), |g| {
        g.rational_control()
    })
}

fn spread(
    total: usize,
    make: impl Fn(usize) -> InstanceGenerator,
    mut draw: impl FnMut(&mut InstanceGenerator) -> ehrhart::Result<Polytope>,
) -> Vec<(String, Polytope)> {
    let mut gens: Vec<InstanceGenerator> = (1..=3).map(make).collect();
    (0..total)
        .map(|i| {
            let dim = i % 3 + 1;
            let p = draw(&mut gens[dim - 1]).expect("generation succeeds");
            (format!("gen-d{dim}-{i}"), p)
        })
        .collect()
}
