//! Topology metrics and the closed-form estimators they are compared with.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{Graph, VertexId};
use crate::{Error, Result};

/// Euler–Mascheroni constant as used by the path-length estimators.
pub const EULER_GAMMA: f64 = 0.5772156649;

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct DegreeDistribution {
    /// Vertex count per degree value.
    pub histogram: BTreeMap<usize, usize>,
    /// Fraction of vertices per degree value.
    pub pmf: BTreeMap<usize, f64>,
    pub mean_degree: f64,
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct MetricReport {
    pub n: usize,
    pub edge_count: usize,
    pub apl: f64,
    pub avg_clustering: f64,
    /// Vertices of degree 0 or 1, left out of `avg_clustering`.
    pub clustering_excluded: usize,
    pub diameter: usize,
    pub degree_dist: DegreeDistribution,
}

/// Average clustering together with how many vertices took part.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClusteringProfile {
    pub average: f64,
    pub counted: usize,
    pub excluded: usize,
}

pub fn degree_distribution(g: &Graph) -> Result<DegreeDistribution> {
    let n = g.n();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut histogram = BTreeMap::new();
    for d in g.degrees() {
        *histogram.entry(d).or_insert(0) += 1;
    }
    let pmf: BTreeMap<usize, f64> = histogram
        .iter()
        .map(|(&d, &c)| (d, c as f64 / n as f64))
        .collect();
    let mean_degree = (2 * g.edge_count()) as f64 / n as f64;
    Ok(DegreeDistribution {
        histogram,
        pmf,
        mean_degree,
    })
}

/// Sum of all pairwise hop distances over ordered pairs; errors when any
/// pair is unreachable.
fn distance_sums(g: &Graph) -> Result<(u64, Vec<usize>)> {
    let n = g.n();
    let mut dist = vec![None; n];
    let mut queue = VecDeque::new();
    let mut total = 0u64;
    let mut eccentricity = vec![0; n];
    for source in 0..n {
        dist.iter_mut().for_each(|d| *d = None);
        g.bfs_into(source, &mut dist, &mut queue);
        for d in &dist {
            match d {
                Some(d) => {
                    total += *d as u64;
                    eccentricity[source] = eccentricity[source].max(*d);
                }
                None => {
                    return Err(Error::Disconnected {
                        components: g.components().component_count,
                    })
                }
            }
        }
    }
    Ok((total, eccentricity))
}

/// Mean hop distance over all ordered pairs of distinct vertices.
pub fn average_path_length(g: &Graph) -> Result<f64> {
    let n = g.n();
    if n < 2 {
        return Err(Error::UndefinedMetric("average path length needs n >= 2"));
    }
    let (total, _) = distance_sums(g)?;
    Ok(total as f64 / (n * (n - 1)) as f64)
}

/// APL of the largest connected component.
pub fn average_path_length_largest_component(g: &Graph) -> Result<f64> {
    average_path_length(&g.largest_component().0)
}

/// Local clustering coefficient; `None` when `degree(v) <= 1`.
pub fn clustering_coefficient(g: &Graph, v: VertexId) -> Result<Option<f64>> {
    let nbrs = g.neighbors(v)?;
    Ok(local_clustering(g, nbrs))
}

fn local_clustering(g: &Graph, nbrs: &[VertexId]) -> Option<f64> {
    let d = nbrs.len();
    if d <= 1 {
        return None;
    }
    let adjacency = g.adjacency();
    let mut links = 0usize;
    for (i, &a) in nbrs.iter().enumerate() {
        links += sorted_intersection_count(&adjacency[a], &nbrs[i + 1..]);
    }
    Some(2.0 * links as f64 / (d * (d - 1)) as f64)
}

fn sorted_intersection_count(a: &[VertexId], b: &[VertexId]) -> usize {
    let (mut i, mut j, mut count) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            core::cmp::Ordering::Less => i += 1,
            core::cmp::Ordering::Greater => j += 1,
            core::cmp::Ordering::Equal => {
                count += 1;
                i += 1;
                j += 1;
            }
        }
    }
    count
}

pub fn clustering_profile(g: &Graph) -> Result<ClusteringProfile> {
    let mut sum = 0.0;
    let mut counted = 0;
    for list in g.adjacency() {
        if let Some(cc) = local_clustering(g, list) {
            sum += cc;
            counted += 1;
        }
    }
    if counted == 0 {
        return Err(Error::UndefinedMetric(
            "average clustering needs a vertex of degree >= 2",
        ));
    }
    Ok(ClusteringProfile {
        average: sum / counted as f64,
        counted,
        excluded: g.n() - counted,
    })
}

/// Mean local clustering over vertices of degree at least 2.
pub fn average_clustering(g: &Graph) -> Result<f64> {
    clustering_profile(g).map(|p| p.average)
}

/// `(diameter, eccentricity per vertex)` of a connected graph.
pub fn diameter_and_eccentricity(g: &Graph) -> Result<(usize, Vec<usize>)> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let (_, ecc) = distance_sums(g)?;
    let diameter = ecc.iter().copied().max().unwrap_or(0);
    Ok((diameter, ecc))
}

/// Full report for a connected graph with at least two vertices.
pub fn metric_report(g: &Graph) -> Result<MetricReport> {
    let n = g.n();
    if n < 2 {
        return Err(Error::UndefinedMetric("metric report needs n >= 2"));
    }
    let (total, ecc) = distance_sums(g)?;
    let clustering = clustering_profile(g)?;
    Ok(MetricReport {
        n,
        edge_count: g.edge_count(),
        apl: total as f64 / (n * (n - 1)) as f64,
        avg_clustering: clustering.average,
        clustering_excluded: clustering.excluded,
        diameter: ecc.iter().copied().max().unwrap_or(0),
        degree_dist: degree_distribution(g)?,
    })
}

/// ER path-length estimate `(ln n − γ) / ln(pn) + 1/2`.
pub fn estimate_apl_er(n: usize, p: f64) -> Result<f64> {
    estimate_apl_er_mean_degree(n, p * n as f64)
}

/// ER path-length estimate with the mean degree in the denominator.
pub fn estimate_apl_er_mean_degree(n: usize, mean_degree: f64) -> Result<f64> {
    if n < 2 {
        return Err(Error::EstimatorDomain("ER path-length estimate needs n >= 2"));
    }
    if !(mean_degree > 1.0) {
        return Err(Error::EstimatorDomain(
            "ER path-length estimate needs pn (or mean degree) > 1",
        ));
    }
    Ok((libm::log(n as f64) - EULER_GAMMA) / libm::log(mean_degree) + 0.5)
}

/// Clustering of the unrewired ring lattice, `3(k − 2) / (4(k − 1))`.
pub fn estimate_cc_ws_p0(k: usize) -> Result<f64> {
    if k < 4 || k % 2 != 0 {
        return Err(Error::EstimatorDomain("lattice clustering needs even k >= 4"));
    }
    Ok(0.75 * (k - 2) as f64 / (k - 1) as f64)
}

/// Barabási–Albert path-length estimate
/// `(ln n − ln(m/2) − 1 − γ) / (ln ln n + ln(m/2)) + 3/2`.
pub fn estimate_apl_ba(n: usize, m: usize) -> Result<f64> {
    if m < 1 || n < 2 {
        return Err(Error::EstimatorDomain("BA path-length estimate needs m >= 1, n >= 2"));
    }
    let ln_n = libm::log(n as f64);
    let ln_half_m = libm::log(m as f64 / 2.0);
    let denominator = libm::log(ln_n) + ln_half_m;
    if !(denominator > 0.0) {
        return Err(Error::EstimatorDomain(
            "BA path-length estimate needs ln ln n + ln(m/2) > 0",
        ));
    }
    Ok((ln_n - ln_half_m - 1.0 - EULER_GAMMA) / denominator + 1.5)
}

/// Barabási–Albert clustering estimate after `t = n − n0` growth steps.
pub fn estimate_cc_ba(n: usize, n0: usize, m: usize) -> Result<f64> {
    if m < 2 {
        return Err(Error::EstimatorDomain("BA clustering estimate is singular for m < 2"));
    }
    if n < n0 + 2 {
        return Err(Error::EstimatorDomain("BA clustering estimate needs t = n - n0 >= 2"));
    }
    let t = (n - n0) as f64;
    let m = m as f64;
    let lead = m * m * (m + 1.0) * (m + 1.0) / (4.0 * (m - 1.0));
    let bracket = libm::log((m + 1.0) / m) - 1.0 / (m + 1.0);
    let ln_t = libm::log(t);
    Ok(lead * bracket * ln_t * ln_t / t)
}

const MIN_FIT_SUPPORT: usize = 5;

/// Least-squares slope of `(x, y)`.
fn ls_slope(points: &[(f64, f64)]) -> f64 {
    let len = points.len() as f64;
    let mx = points.iter().map(|p| p.0).sum::<f64>() / len;
    let my = points.iter().map(|p| p.1).sum::<f64>() / len;
    let (mut sxy, mut sxx) = (0.0, 0.0);
    for &(x, y) in points {
        sxy += (x - mx) * (y - my);
        sxx += (x - mx) * (x - mx);
    }
    sxy / sxx
}

/// Power-law exponent from a log-log least-squares fit of the pmf over
/// degrees `>= k_min` with nonzero mass.
pub fn powerlaw_exponent_fit(dist: &DegreeDistribution, k_min: usize) -> Result<f64> {
    let points: Vec<(f64, f64)> = dist
        .pmf
        .range(k_min.max(1)..)
        .filter(|(_, &p)| p > 0.0)
        .map(|(&k, &p)| (libm::log(k as f64), libm::log(p)))
        .collect();
    if points.len() < MIN_FIT_SUPPORT {
        return Err(Error::FitDomain {
            needed: MIN_FIT_SUPPORT,
            found: points.len(),
        });
    }
    Ok(-ls_slope(&points))
}

/// Power-law exponent from the complementary CDF: `P(K >= k) ~ k^(1 − γ)`,
/// so the log-log slope of the CCDF over degrees `>= k_min` is `1 − γ`.
/// Less noisy than the pmf fit on sparse tails.
pub fn powerlaw_exponent_fit_ccdf(dist: &DegreeDistribution, k_min: usize) -> Result<f64> {
    let mut tail = 0.0;
    let mut points: Vec<(f64, f64)> = Vec::new();
    for (&k, &p) in dist.pmf.iter().rev() {
        if k < k_min.max(1) {
            break;
        }
        if p > 0.0 {
            tail += p;
            points.push((libm::log(k as f64), libm::log(tail)));
        }
    }
    if points.len() < MIN_FIT_SUPPORT {
        return Err(Error::FitDomain {
            needed: MIN_FIT_SUPPORT,
            found: points.len(),
        });
    }
    Ok(1.0 - ls_slope(&points))
}
