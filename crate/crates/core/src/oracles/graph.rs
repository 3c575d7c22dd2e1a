//! Random `(q + 1)`-regular multigraphs from the configuration model, used
//! to check that the quotient graph of a free lattice with `c` vertices has
//! cycle rank `(q − 1)c/2 + 1`.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Result, VnDimError};
use crate::padic::{ihara_rank, PadicField};

/// Undirected multigraph; loops and parallel edges are allowed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultiGraph {
    pub vertex_count: usize,
    pub edges: Vec<(usize, usize)>,
    pub seed: u64,
}

impl MultiGraph {
    /// Pairs `degree · vertex_count` half-edges uniformly at random.
    pub fn configuration_model(degree: usize, vertex_count: usize, seed: u64, rng: &mut ChaCha8Rng) -> Self {
        assert!(
            (degree * vertex_count).is_multiple_of(2),
            "half-edge count must be even"
        );
        let mut stubs: Vec<usize> = (0..vertex_count).flat_map(|v| std::iter::repeat_n(v, degree)).collect();
        stubs.shuffle(rng);
        let edges = stubs.chunks_exact(2).map(|pair| (pair[0], pair[1])).collect();
        MultiGraph {
            vertex_count,
            edges,
            seed,
        }
    }

    /// Degrees with loops counted twice.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertex_count];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    /// Edges of a spanning forest found by union–find.
    pub fn spanning_forest(&self) -> Vec<(usize, usize)> {
        let mut parent: Vec<usize> = (0..self.vertex_count).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut forest = Vec::new();
        for &(u, v) in &self.edges {
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru != rv {
                parent[ru] = rv;
                forest.push((u, v));
            }
        }
        forest
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count == 0 || self.spanning_forest().len() == self.vertex_count - 1
    }

    /// Number of edges outside a spanning forest, `|E| − |V| + #components`.
    pub fn cycle_rank(&self) -> usize {
        self.edges.len() - self.spanning_forest().len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankCheckReport {
    pub q: u64,
    pub vertex_count: u64,
    pub expected_rank: u64,
    pub trials_run: u64,
    pub failures: u64,
    pub rejections: u64,
    pub example_graph: Option<MultiGraph>,
}

/// Samples `trials` connected `(q + 1)`-regular multigraphs on `c` vertices
/// and compares each cycle rank with the Ihara rank.
pub fn random_regular_rank_check(q: u64, c: u64, trials: u64, seed: u64) -> Result<RankCheckReport> {
    let field = PadicField::new(q)?;
    let expected_rank = ihara_rank(&field, c)?;
    if trials == 0 {
        return Err(VnDimError::InvalidArgument("at least one trial is required".into()));
    }
    let degree = (q + 1) as usize;
    let vertices = c as usize;
    let max_rejections = trials.saturating_mul(1000);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = RankCheckReport {
        q,
        vertex_count: c,
        expected_rank,
        trials_run: 0,
        failures: 0,
        rejections: 0,
        example_graph: None,
    };
    while report.trials_run < trials {
        let graph = MultiGraph::configuration_model(degree, vertices, seed, &mut rng);
        if !graph.is_connected() {
            report.rejections += 1;
            if report.rejections >= max_rejections {
                return Err(VnDimError::GenerationExhausted {
                    rejections: report.rejections,
                });
            }
            continue;
        }
        report.trials_run += 1;
        let regular = graph.degrees().iter().all(|&d| d == degree);
        if !regular || graph.cycle_rank() as u64 != expected_rank {
            report.failures += 1;
        }
        report.example_graph.get_or_insert(graph);
    }
    Ok(report)
}
