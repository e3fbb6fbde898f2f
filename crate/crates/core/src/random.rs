//! Seeded random instances. Identical seeds give identical output.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coloring::Labeling;
use crate::digraph::Digraph;
use crate::error::{Error, Result};

fn check_probability(prob: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&prob) {
        return Err(Error::Precondition(format!(
            "arc probability {prob} is outside [0, 1]"
        )));
    }
    Ok(())
}

/// Includes each ordered pair independently with probability `prob`. Without
/// digons, a pair drawn in both directions keeps one orientation chosen
/// uniformly.
pub fn random_digraph(p: usize, prob: f64, allow_digons: bool, seed: u64) -> Result<Digraph> {
    check_probability(prob)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut arcs = Vec::new();
    for u in 0..p {
        for v in u + 1..p {
            let forward = rng.gen_bool(prob);
            let backward = rng.gen_bool(prob);
            match (forward, backward) {
                (true, true) if !allow_digons => {
                    if rng.gen_bool(0.5) {
                        arcs.push((u, v));
                    } else {
                        arcs.push((v, u));
                    }
                }
                _ => {
                    if forward {
                        arcs.push((u, v));
                    }
                    if backward {
                        arcs.push((v, u));
                    }
                }
            }
        }
    }
    Digraph::new(p, arcs)
}

/// A random acyclic digraph: arcs only go forward along a random hidden
/// permutation, each present with probability `prob`.
pub fn random_dag(p: usize, prob: f64, seed: u64) -> Result<Digraph> {
    check_probability(prob)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rank: Vec<usize> = (0..p).collect();
    rank.shuffle(&mut rng);
    let mut arcs = Vec::new();
    for i in 0..p {
        for j in i + 1..p {
            if rng.gen_bool(prob) {
                arcs.push((rank[i], rank[j]));
            }
        }
    }
    Digraph::new(p, arcs)
}

/// Labels drawn uniformly from `1..=num_labels`.
pub fn random_labeling(p: usize, num_labels: u32, seed: u64) -> Labeling {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Labeling((0..p).map(|_| rng.gen_range(1..=num_labels.max(1))).collect())
}

/// Per-instance seeds derived from one master seed.
pub fn derive_seeds(master: u64, count: usize) -> Vec<u64> {
    let mut rng = ChaCha8Rng::seed_from_u64(master);
    (0..count).map(|_| rng.gen()).collect()
}
