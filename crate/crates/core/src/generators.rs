//! Seeded constructors for the ring lattice, Erdős–Rényi, Watts–Strogatz,
//! edge-conserving small-world rewiring and Barabási–Albert models.
//!
//! Every random generator draws from [`crate::rng::Stream`], so the same
//! parameters and seed always give the same edge set.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{Graph, VertexId};
use crate::rng::Stream;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum Family {
    RingLattice,
    ErdosRenyi,
    WattsStrogatz,
    NewmanWattsRewire,
    BarabasiAlbert,
}

/// Parameters of one model instance. Only the fields the family uses need
/// to be set: `k` for the lattice, `p` for ER, `k` and `p` for the rewiring
/// models, `m` and `n0` for Barabási–Albert.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct GeneratorSpec {
    pub family: Family,
    pub n: usize,
    #[cfg_attr(feature = "serde", serde(default))]
    pub p: Option<f64>,
    #[cfg_attr(feature = "serde", serde(default))]
    pub k: Option<usize>,
    #[cfg_attr(feature = "serde", serde(default))]
    pub m: Option<usize>,
    #[cfg_attr(feature = "serde", serde(default))]
    pub n0: Option<usize>,
    #[cfg_attr(feature = "serde", serde(default))]
    pub seed: u64,
}

impl GeneratorSpec {
    pub fn new(family: Family, n: usize) -> Self {
        Self {
            family,
            n,
            p: None,
            k: None,
            m: None,
            n0: None,
            seed: 0,
        }
    }

    pub fn generate(&self) -> Result<Graph> {
        fn need<T: Copy>(v: Option<T>, name: &str) -> Result<T> {
            v.ok_or_else(|| Error::InvalidParameter(format!("missing parameter `{name}`")))
        }
        match self.family {
            Family::RingLattice => gen_ring_lattice(self.n, need(self.k, "k")?),
            Family::ErdosRenyi => gen_erdos_renyi(self.n, need(self.p, "p")?, self.seed),
            Family::WattsStrogatz => {
                gen_watts_strogatz(self.n, need(self.k, "k")?, need(self.p, "p")?, self.seed)
            }
            Family::NewmanWattsRewire => {
                gen_nw_rewire(self.n, need(self.k, "k")?, need(self.p, "p")?, self.seed)
            }
            Family::BarabasiAlbert => gen_barabasi_albert(
                self.n,
                need(self.n0, "n0")?,
                need(self.m, "m")?,
                self.seed,
            ),
        }
    }
}

/// ER connection probability giving expected mean degree `mean_degree`.
pub fn er_probability_for_mean_degree(n: usize, mean_degree: f64) -> Result<f64> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("n = {n} leaves no vertex pairs")));
    }
    let p = mean_degree / (n - 1) as f64;
    check_probability(p)?;
    Ok(p)
}

fn check_probability(p: f64) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("probability {p} outside [0, 1]")))
    }
}

fn check_lattice(n: usize, k: usize) -> Result<()> {
    if k < 2 || k % 2 != 0 {
        return Err(Error::InvalidParameter(format!(
            "lattice degree k = {k} must be even and at least 2"
        )));
    }
    if k >= n {
        return Err(Error::InvalidParameter(format!(
            "lattice degree k = {k} must be below n = {n}"
        )));
    }
    Ok(())
}

fn lattice_adjacency(n: usize, k: usize) -> Vec<Vec<VertexId>> {
    let mut adjacency = vec![Vec::with_capacity(k); n];
    for (i, list) in adjacency.iter_mut().enumerate() {
        for j in 1..=k / 2 {
            list.push((i + j) % n);
            list.push((i + n - j) % n);
        }
        list.sort_unstable();
    }
    adjacency
}

/// Ring of `n` vertices, each joined to its `k/2` nearest neighbors on
/// either side.
pub fn gen_ring_lattice(n: usize, k: usize) -> Result<Graph> {
    check_lattice(n, k)?;
    Ok(Graph::from_unsorted(lattice_adjacency(n, k)))
}

/// Each pair `(u, v)` with `u < v`, visited in lexicographic order, is kept
/// when one `unit` draw falls below `p`.
pub fn gen_erdos_renyi(n: usize, p: f64, seed: u64) -> Result<Graph> {
    check_probability(p)?;
    let mut rng = Stream::new(seed);
    let mut adjacency = vec![Vec::new(); n];
    for u in 0..n {
        for v in u + 1..n {
            if rng.bernoulli(p) {
                adjacency[u].push(v);
                adjacency[v].push(u);
            }
        }
    }
    Ok(Graph::from_unsorted(adjacency))
}

/// Ring lattice followed by edge-conserving rewiring.
///
/// Lattice edges `(i, i + j mod n)` are visited for `j = 1..=k/2` (outer)
/// and `i = 0..n` (inner). With probability `p` the far endpoint moves to a
/// vertex drawn with `below(n)`; draws that would create a self-loop or a
/// duplicate edge are redrawn, at most `n` times, after which the edge is
/// left in place.
pub fn gen_watts_strogatz(n: usize, k: usize, p: f64, seed: u64) -> Result<Graph> {
    check_lattice(n, k)?;
    check_probability(p)?;
    let mut adjacency = lattice_adjacency(n, k);
    let mut rng = Stream::new(seed);
    for j in 1..=k / 2 {
        for i in 0..n {
            if !rng.bernoulli(p) {
                continue;
            }
            let far = (i + j) % n;
            let target = (0..n).map(|_| rng.below(n)).find(|&w| {
                w != i && adjacency[i].binary_search(&w).is_err()
            });
            if let Some(w) = target {
                remove_sorted(&mut adjacency[i], far);
                remove_sorted(&mut adjacency[far], i);
                insert_sorted(&mut adjacency[i], w);
                insert_sorted(&mut adjacency[w], i);
            }
        }
    }
    Ok(Graph::from_unsorted(adjacency))
}

/// Small-world network built by rewiring broken lattice edges while keeping
/// the edge count fixed. Same construction and stream as
/// [`gen_watts_strogatz`]; kept as its own entry point for the experiments
/// that compare it against ER.
pub fn gen_nw_rewire(n: usize, k: usize, p: f64, seed: u64) -> Result<Graph> {
    gen_watts_strogatz(n, k, p, seed)
}

/// Growth with preferential attachment.
///
/// Starts from the complete graph on `n0` vertices. Each arriving vertex
/// picks `m` distinct targets, sampling endpoints of existing edges
/// uniformly (so each vertex is hit proportionally to its degree) and
/// redrawing repeats. When no edge exists yet (`n0 = 1`) targets are drawn
/// uniformly from the existing vertices.
pub fn gen_barabasi_albert(n: usize, n0: usize, m: usize, seed: u64) -> Result<Graph> {
    if m < 1 || n0 < m || n < n0 {
        return Err(Error::InvalidParameter(format!(
            "Barabási–Albert needs n >= n0 >= m >= 1, got n = {n}, n0 = {n0}, m = {m}"
        )));
    }
    let mut adjacency = vec![Vec::new(); n];
    let mut endpoints: Vec<VertexId> = Vec::with_capacity(n0 * n0 + 2 * m * (n - n0));
    for u in 0..n0 {
        for v in u + 1..n0 {
            adjacency[u].push(v);
            adjacency[v].push(u);
            endpoints.push(u);
            endpoints.push(v);
        }
    }
    let mut rng = Stream::new(seed);
    let mut chosen = Vec::with_capacity(m);
    for v in n0..n {
        chosen.clear();
        while chosen.len() < m {
            let t = if endpoints.is_empty() {
                rng.below(v)
            } else {
                endpoints[rng.below(endpoints.len())]
            };
            if !chosen.contains(&t) {
                chosen.push(t);
            }
        }
        for &t in &chosen {
            adjacency[v].push(t);
            adjacency[t].push(v);
            endpoints.push(v);
            endpoints.push(t);
        }
    }
    Ok(Graph::from_unsorted(adjacency))
}

fn insert_sorted(list: &mut Vec<VertexId>, v: VertexId) {
    if let Err(pos) = list.binary_search(&v) {
        list.insert(pos, v);
    }
}

fn remove_sorted(list: &mut Vec<VertexId>, v: VertexId) {
    if let Ok(pos) = list.binary_search(&v) {
        list.remove(pos);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metrics::average_clustering;

    #[test]
    fn ring_lattice_shapes() {
        let c6 = gen_ring_lattice(6, 2).unwrap();
        assert_eq!(c6.edge_count(), 6);
        assert!(c6.degrees().iter().all(|&d| d == 2));
        assert!(c6.has_edge(5, 0));

        let g = gen_ring_lattice(100, 8).unwrap();
        assert_eq!(g.edge_count(), 400);
        assert!(g.degrees().iter().all(|&d| d == 8));

        let k5 = gen_ring_lattice(5, 4).unwrap();
        assert_eq!(k5.edge_count(), 10);
    }

    #[test]
    fn lattice_parameter_errors() {
        assert!(gen_ring_lattice(10, 3).is_err());
        assert!(gen_ring_lattice(4, 4).is_err());
        assert!(gen_ring_lattice(10, 0).is_err());
        assert!(gen_watts_strogatz(10, 4, 1.5, 0).is_err());
    }

    #[test]
    fn erdos_renyi_extremes() {
        assert_eq!(gen_erdos_renyi(20, 0.0, 3).unwrap().edge_count(), 0);
        assert_eq!(gen_erdos_renyi(20, 1.0, 3).unwrap().edge_count(), 190);
        assert!(gen_erdos_renyi(20, -0.1, 3).is_err());
        assert!(gen_erdos_renyi(20, f64::NAN, 3).is_err());
    }

    #[test]
    fn er_probability_matches_mean_degree_arithmetic() {
        let p = er_probability_for_mean_degree(100, 8.0).unwrap();
        assert!((p - 8.0 / 99.0).abs() < 1e-15);
        assert!((p - 0.0808).abs() < 1e-4);
    }

    #[test]
    fn watts_strogatz_p0_is_lattice() {
        assert_eq!(
            gen_watts_strogatz(30, 4, 0.0, 9).unwrap(),
            gen_ring_lattice(30, 4).unwrap()
        );
        assert_eq!(
            gen_nw_rewire(30, 6, 0.0, 1).unwrap(),
            gen_ring_lattice(30, 6).unwrap()
        );
        let g = gen_watts_strogatz(100, 4, 0.0, 0).unwrap();
        assert!((average_clustering(&g).unwrap() - 0.5).abs() < 1e-12);
    }

    #[test]
    fn rewiring_conserves_edges() {
        for seed in 0..20 {
            let g = gen_watts_strogatz(100, 8, 0.1, seed).unwrap();
            assert_eq!(g.edge_count(), 400);
            let full = gen_nw_rewire(100, 8, 1.0, seed).unwrap();
            assert_eq!(full.edge_count(), 400);
        }
        assert_ne!(
            gen_watts_strogatz(100, 8, 0.1, 1).unwrap(),
            gen_watts_strogatz(100, 8, 0.1, 2).unwrap()
        );
    }

    #[test]
    fn rewiring_in_saturated_graph_keeps_edges() {
        // K5 as a lattice: every redraw is a duplicate, so nothing moves.
        let g = gen_watts_strogatz(5, 4, 1.0, 11).unwrap();
        assert_eq!(g, gen_ring_lattice(5, 4).unwrap());
    }

    #[test]
    fn barabasi_albert_counts() {
        let k5 = gen_barabasi_albert(5, 5, 2, 0).unwrap();
        assert_eq!(k5.edge_count(), 10);
        let g = gen_barabasi_albert(200, 5, 3, 17).unwrap();
        assert_eq!(g.edge_count(), 595);
        assert!(g.degrees()[5..].iter().all(|&d| d >= 3));
        let tree = gen_barabasi_albert(50, 1, 1, 4).unwrap();
        assert_eq!(tree.edge_count(), 49);
        assert!(tree.is_connected());
    }

    #[test]
    fn barabasi_albert_parameter_errors() {
        assert!(gen_barabasi_albert(10, 2, 3, 0).is_err());
        assert!(gen_barabasi_albert(10, 3, 0, 0).is_err());
        assert!(gen_barabasi_albert(3, 5, 2, 0).is_err());
    }

    #[test]
    fn spec_dispatch() {
        let mut spec = GeneratorSpec::new(Family::RingLattice, 6);
        assert!(spec.generate().is_err());
        spec.k = Some(2);
        assert_eq!(spec.generate().unwrap().edge_count(), 6);
        let mut er = GeneratorSpec::new(Family::ErdosRenyi, 50);
        er.p = Some(0.2);
        er.seed = 5;
        assert_eq!(er.generate().unwrap(), gen_erdos_renyi(50, 0.2, 5).unwrap());
    }
}
