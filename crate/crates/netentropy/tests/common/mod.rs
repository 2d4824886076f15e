//! Independent oracles shared by the integration tests. Nothing here calls
//! into the metric or spectral code under test.

#![allow(dead_code)]

use std::fmt::Write as _;
use std::path::Path;

use netentropy::core::generators::gen_nw_rewire;
use netentropy::core::rng::Stream;
use netentropy::core::Graph;

pub const INF: usize = usize::MAX;

/// All-pairs hop distances by Floyd-Warshall closure over the adjacency
/// matrix. Unreachable pairs hold `INF`.
pub fn floyd_warshall(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut d = vec![vec![INF; n]; n];
    for (i, row) in d.iter_mut().enumerate() {
        row[i] = 0;
    }
    for &(u, v) in edges {
        d[u][v] = 1;
        d[v][u] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            if d[i][k] == INF {
                continue;
            }
            for j in 0..n {
                if d[k][j] != INF && d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

/// `(apl, diameter)` from a distance matrix, `None` if any pair is
/// unreachable.
pub fn apl_and_diameter(d: &[Vec<usize>]) -> Option<(f64, usize)> {
    let n = d.len();
    let mut total = 0u64;
    let mut diameter = 0;
    for (i, row) in d.iter().enumerate() {
        for (j, &x) in row.iter().enumerate() {
            if i == j {
                continue;
            }
            if x == INF {
                return None;
            }
            total += x as u64;
            diameter = diameter.max(x);
        }
    }
    Some((total as f64 / (n * (n - 1)) as f64, diameter))
}

/// Average clustering by enumerating every vertex triple with a dense
/// adjacency matrix. `None` when no vertex has degree two or more.
pub fn average_clustering_by_triangles(n: usize, edges: &[(usize, usize)]) -> Option<f64> {
    let mut adj = vec![vec![false; n]; n];
    for &(u, v) in edges {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    let mut sum = 0.0;
    let mut counted = 0usize;
    for v in 0..n {
        let d = (0..n).filter(|&u| adj[v][u]).count();
        if d < 2 {
            continue;
        }
        let mut triangles = 0usize;
        for a in 0..n {
            for b in a + 1..n {
                if adj[v][a] && adj[v][b] && adj[a][b] {
                    triangles += 1;
                }
            }
        }
        sum += 2.0 * triangles as f64 / (d * (d - 1)) as f64;
        counted += 1;
    }
    (counted > 0).then(|| sum / counted as f64)
}

/// Dense normalized Laplacian built directly from the edge list.
pub fn dense_normalized_laplacian(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<f64>> {
    let mut deg = vec![0usize; n];
    for &(u, v) in edges {
        deg[u] += 1;
        deg[v] += 1;
    }
    let mut m = vec![vec![0.0; n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        if deg[i] > 0 {
            row[i] = 1.0;
        }
    }
    for &(u, v) in edges {
        let w = -1.0 / ((deg[u] * deg[v]) as f64).sqrt();
        m[u][v] = w;
        m[v][u] = w;
    }
    m
}

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, ascending.
pub fn jacobi_eigenvalues(mut a: Vec<Vec<f64>>) -> Vec<f64> {
    let n = a.len();
    for _sweep in 0..100 {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i][j] * a[i][j])
            .sum();
        if off < 1e-26 {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if a[p][q].abs() < 1e-300 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p][k];
                    let aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    let mut eig: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
    eig.sort_by(f64::total_cmp);
    eig
}

/// Rényi entropy of order 1/2 from a spectrum, zeroing `|λ| ≤ tol`.
pub fn half_order_entropy(eigenvalues: &[f64], tol: f64) -> f64 {
    let trace: f64 = eigenvalues.iter().filter(|&&l| l > tol).map(|l| l.sqrt()).sum();
    2.0 * trace.log2()
}

pub fn edges_of(g: &Graph) -> Vec<(usize, usize)> {
    g.edges().collect()
}

/// Writes an e-mail-like network: four NW-rewired communities of the given
/// sizes with sparse cross links, arbitrary node ids, both edge directions,
/// repeated edges and self-loops. Returns `(edge list path, membership path)`.
pub fn write_synthetic_email_network(
    dir: &Path,
    sizes: &[usize],
    k: usize,
    p: f64,
    seed: u64,
) -> (std::path::PathBuf, std::path::PathBuf) {
    let mut rng = Stream::new(seed ^ 0x5eed);
    let mut offset = 0;
    let node_id = |v: usize| 7 * v + 1000;
    let mut edges = String::from("# synthetic multi-department e-mail log\n");
    let mut membership = String::new();
    let total: usize = sizes.iter().sum();
    for (group, &size) in sizes.iter().enumerate() {
        let g = gen_nw_rewire(size, k, p, seed + group as u64).unwrap();
        for v in 0..size {
            writeln!(membership, "{} {}", node_id(offset + v), group + 1).unwrap();
        }
        for (u, v) in g.edges() {
            let (a, b) = (node_id(offset + u), node_id(offset + v));
            let (a, b) = if rng.bernoulli(0.5) { (a, b) } else { (b, a) };
            let ts = rng.below(1_000_000);
            writeln!(edges, "{a} {b} {ts}").unwrap();
            if rng.bernoulli(0.2) {
                writeln!(edges, "{b} {a} {}", ts + 60).unwrap();
            }
        }
        for _ in 0..size / 20 {
            let v = node_id(offset + rng.below(size));
            writeln!(edges, "{v} {v} 0").unwrap();
        }
        offset += size;
    }
    for _ in 0..total / 4 {
        let (a, b) = (rng.below(total), rng.below(total));
        if a != b {
            writeln!(edges, "{} {} 1", node_id(a), node_id(b)).unwrap();
        }
    }
    let edge_path = dir.join("email.txt");
    let membership_path = dir.join("departments.txt");
    std::fs::write(&edge_path, edges).unwrap();
    std::fs::write(&membership_path, membership).unwrap();
    (edge_path, membership_path)
}
