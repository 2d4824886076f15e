//! Acceptance suite. Each test prints one `PASS`/`FAIL` line; run with
//! `cargo test -p netentropy --test acceptance -- --nocapture` to see them.

mod common;

use std::time::{Duration, Instant};

use netentropy::core::generators::{
    gen_barabasi_albert, gen_erdos_renyi, gen_ring_lattice, gen_watts_strogatz,
};
use netentropy::core::metrics::{average_clustering, average_path_length, diameter_and_eccentricity, estimate_apl_er};
use netentropy::core::rng::Stream;
use netentropy::core::spectral::{
    entropy_of_convex_combination, normalized_laplacian, permute_vertices, sym_eigenvalues,
    system_entropy, default_tolerance,
};
use netentropy::core::Graph;
use netentropy::experiments::{self, ExperimentConfig, ExperimentKind, Status};

use common::*;

fn report(id: u32, title: &str, failures: &[String], elapsed: Duration, budget: Duration) {
    let in_time = elapsed <= budget;
    let ok = failures.is_empty() && in_time;
    println!(
        "{} AC-{id:02} {title} ({:.2?} of {:.0?})",
        if ok { "PASS" } else { "FAIL" },
        elapsed,
        budget
    );
    for f in failures.iter().take(20) {
        println!("    {f}");
    }
    if failures.len() > 20 {
        println!("    ... {} more", failures.len() - 20);
    }
    assert!(failures.is_empty(), "AC-{id:02}: {} failure(s), first: {}", failures.len(), failures[0]);
    assert!(in_time, "AC-{id:02}: {elapsed:?} exceeds {budget:?}");
}

fn complete(n: usize) -> Graph {
    Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
}

fn star(n: usize) -> Graph {
    Graph::new(n, (1..n).map(|v| (0, v))).unwrap()
}

fn entropy(g: &Graph) -> f64 {
    system_entropy(g, 0.5, default_tolerance(g.n())).unwrap().entropy
}

#[test]
fn ac01_closed_form_entropy() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for n in 2..=50usize {
        let expected = ((n * (n - 1)) as f64).log2();
        let got = entropy(&complete(n));
        if (got - expected).abs() > 1e-9 {
            failures.push(format!("K_{n}: {got} vs {expected}"));
        }
    }
    for n in 3..=50usize {
        let expected = 2.0 * ((n - 2) as f64 + 2f64.sqrt()).log2();
        let got = entropy(&star(n));
        if (got - expected).abs() > 1e-9 {
            failures.push(format!("star_{n}: {got} vs {expected}"));
        }
    }
    report(1, "closed-form entropy of K_n and star_n", &failures, start.elapsed(), Duration::from_secs(1));
}

#[test]
fn ac02_lattice_clustering() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for k in [4usize, 6, 8] {
        let g = gen_watts_strogatz(100, k, 0.0, 1).unwrap();
        let expected = 3.0 * (k - 2) as f64 / (4.0 * (k - 1) as f64);
        let got = average_clustering(&g).unwrap();
        if (got - expected).abs() > 1e-12 {
            failures.push(format!("k={k}: {got} vs {expected}"));
        }
    }
    report(2, "unrewired lattice clustering 3(k-2)/(4(k-1))", &failures, start.elapsed(), Duration::from_secs(1));
}

#[test]
fn ac03_er_mean_degree() {
    let start = Instant::now();
    let (n, p, seeds) = (100usize, 0.0808, 200u64);
    let pairs = (n * (n - 1) / 2) as f64;
    let means: Vec<f64> = (0..seeds)
        .map(|s| 2.0 * gen_erdos_renyi(n, p, s).unwrap().edge_count() as f64 / n as f64)
        .collect();
    let mean = means.iter().sum::<f64>() / seeds as f64;
    let expected = (n - 1) as f64 * p;
    let sigma = 2.0 * (pairs * p * (1.0 - p)).sqrt() / n as f64 / (seeds as f64).sqrt();
    let mut failures = Vec::new();
    if (mean - expected).abs() > 3.0 * sigma {
        failures.push(format!("mean {mean} vs {expected}, 3 sigma = {}", 3.0 * sigma));
    }
    println!("    mean degree {mean:.4}, expected {expected:.4}, sigma {sigma:.4}");
    report(3, "ER(100, 0.0808) mean degree within 3 sigma of 7.9992", &failures, start.elapsed(), Duration::from_secs(5));
}

#[test]
fn ac04_er_apl_estimator() {
    let start = Instant::now();
    let estimate = estimate_apl_er(1000, 0.01).unwrap();
    let by_hand = (1000f64.ln() - 0.5772156649) / 10f64.ln() + 0.5;
    let mut failures = Vec::new();
    if (estimate - by_hand).abs() > 1e-12 {
        failures.push(format!("estimator {estimate} vs hand value {by_hand}"));
    }
    let mut apls = Vec::new();
    let mut seed = 0;
    while apls.len() < 20 {
        let g = gen_erdos_renyi(1000, 0.01, seed).unwrap();
        seed += 1;
        if g.is_connected() {
            apls.push(average_path_length(&g).unwrap());
        }
    }
    let mean = apls.iter().sum::<f64>() / apls.len() as f64;
    let rel = (mean - estimate).abs() / estimate;
    println!("    mean APL {mean:.4} over 20 connected samples ({seed} drawn), estimate {estimate:.4}, gap {:.1}%", rel * 100.0);
    if rel > 0.15 {
        failures.push(format!("relative gap {rel}"));
    }
    report(4, "ER(1000, 0.01) APL within 15% of the estimate", &failures, start.elapsed(), Duration::from_secs(120));
}

/// Mixed-family graph on at most 60 vertices with no isolated vertex.
fn mixed_graph(i: usize, rng: &mut Stream) -> Graph {
    loop {
        let seed = rng.next_u64();
        let g = match i % 6 {
            0 => gen_erdos_renyi(5 + rng.below(56), 0.05 + 0.45 * rng.unit(), seed).unwrap(),
            1 => {
                let n = 8 + rng.below(53);
                gen_watts_strogatz(n, 2 * (1 + rng.below(3)), rng.unit(), seed).unwrap()
            }
            2 => {
                let m = 1 + rng.below(3);
                gen_barabasi_albert(5 + rng.below(56), m + 1, m, seed).unwrap()
            }
            3 => {
                let n = 4 + rng.below(57);
                gen_ring_lattice(n, if n % 2 == 0 { 2 } else { 4 }).unwrap()
            }
            4 => {
                let a = gen_erdos_renyi(3 + rng.below(28), 0.3, seed).unwrap();
                let b = gen_barabasi_albert(3 + rng.below(28), 2, 1, seed ^ 1).unwrap();
                let shift = a.n();
                Graph::new(a.n() + b.n(), a.edges().chain(b.edges().map(|(u, v)| (u + shift, v + shift))))
                    .unwrap()
            }
            _ => {
                let n = 2 + rng.below(59);
                Graph::new(n, (1..n).map(|v| (rng.below(v), v))).unwrap()
            }
        };
        if g.min_degree().is_some_and(|d| d >= 1) {
            return g;
        }
    }
}

#[test]
fn ac05_spectral_invariants() {
    let start = Instant::now();
    let mut rng = Stream::new(5);
    let mut failures = Vec::new();
    let (mut bipartite_seen, mut disconnected_seen) = (0, 0);
    for i in 0..500 {
        let g = mixed_graph(i, &mut rng);
        let n = g.n();
        let nf = n as f64;
        let l = normalized_laplacian(&g).unwrap();
        let eig = sym_eigenvalues(&l, default_tolerance(n)).unwrap();
        let tag = format!("graph {i} (n={n}, m={})", g.edge_count());

        let sum: f64 = eig.iter().sum();
        if (sum - nf).abs() > 1e-7 * nf {
            failures.push(format!("{tag}: eigenvalue sum {sum}"));
        }
        if eig[0].abs() > 1e-8 {
            failures.push(format!("{tag}: lambda_min {}", eig[0]));
        }
        let zeros = eig.iter().filter(|l| l.abs() <= 1e-8).count();
        let components = g.components().component_count;
        if zeros != components {
            failures.push(format!("{tag}: {zeros} zero eigenvalues, {components} components"));
        }
        let lmax = eig[n - 1];
        if components > 1 {
            disconnected_seen += 1;
        }
        if g.is_bipartite() {
            bipartite_seen += 1;
            if (lmax - 2.0).abs() > 1e-8 {
                failures.push(format!("{tag}: bipartite lambda_max {lmax}"));
            }
        } else if components == 1 && !(lmax >= nf / (nf - 1.0) - 1e-8 && lmax < 2.0) {
            failures.push(format!("{tag}: lambda_max {lmax} outside [n/(n-1), 2)"));
        }

        let oracle = jacobi_eigenvalues(dense_normalized_laplacian(n, &edges_of(&g)));
        let drift = eig.iter().zip(&oracle).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
        if drift > 1e-9 {
            failures.push(format!("{tag}: spectrum differs from Jacobi by {drift}"));
        }

        let degrees = g.degrees();
        for _ in 0..10 {
            let x: Vec<f64> = (0..n).map(|_| 2.0 * rng.unit() - 1.0).collect();
            let witness: f64 = g
                .edges()
                .map(|(u, v)| {
                    let t = x[u] / (degrees[u] as f64).sqrt() - x[v] / (degrees[v] as f64).sqrt();
                    t * t
                })
                .sum();
            let q = l.quadratic_form(&x);
            if (q - witness).abs() > 1e-9 {
                failures.push(format!("{tag}: quadratic form {q} vs edge sum {witness}"));
            }
        }
    }
    println!("    500 graphs, {bipartite_seen} bipartite, {disconnected_seen} disconnected");
    if bipartite_seen == 0 || disconnected_seen == 0 {
        failures.push("mix lacks bipartite or disconnected graphs".into());
    }
    report(5, "normalized-Laplacian spectral invariants on 500 mixed graphs", &failures, start.elapsed(), Duration::from_secs(60));
}

fn shuffled(n: usize, rng: &mut Stream) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        perm.swap(i, rng.below(i + 1));
    }
    perm
}

#[test]
fn ac06_permutation_invariance() {
    let start = Instant::now();
    let mut rng = Stream::new(6);
    let mut failures = Vec::new();
    let mut worst: f64 = 0.0;
    for i in 0..50 {
        let g = mixed_graph(i, &mut rng);
        let h = entropy(&g);
        for _ in 0..100 {
            let perm = shuffled(g.n(), &mut rng);
            let drift = (entropy(&permute_vertices(&g, &perm).unwrap()) - h).abs();
            worst = worst.max(drift);
            if drift > 1e-9 {
                failures.push(format!("graph {i}: drift {drift} under {perm:?}"));
            }
        }
    }
    println!("    largest drift {worst:e}");
    report(6, "entropy invariant under 50 x 100 relabelings", &failures, start.elapsed(), Duration::from_secs(60));
}

#[test]
fn ac07_convex_combination() {
    let start = Instant::now();
    let mut rng = Stream::new(7);
    let mut failures = Vec::new();
    let mut tightest = f64::INFINITY;
    for t in 0..1000 {
        // Same order for both graphs: draw the second family and resample
        // until its order matches the first.
        let g1 = mixed_graph(rng.below(6), &mut rng);
        let n = g1.n();
        let g2 = loop {
            let seed = rng.next_u64();
            let g = match rng.below(3) {
                0 => gen_erdos_renyi(n, 0.1 + 0.5 * rng.unit(), seed).unwrap(),
                1 => Graph::new(n, (1..n).map(|v| (rng.below(v), v))).unwrap(),
                _ => permute_vertices(&g1, &shuffled(n, &mut rng)).unwrap(),
            };
            if g.min_degree().is_some_and(|d| d >= 1) {
                break g;
            }
        };
        let beta = loop {
            let b = rng.unit();
            if b > 0.0 {
                break b;
            }
        };
        let tol = default_tolerance(n);
        let l1 = normalized_laplacian(&g1).unwrap();
        let l2 = normalized_laplacian(&g2).unwrap();
        let lhs = entropy_of_convex_combination(&l1, &l2, beta, 0.5, tol).unwrap();
        let rhs = beta * entropy(&g1) + (1.0 - beta) * entropy(&g2);
        tightest = tightest.min(lhs - rhs);
        if lhs < rhs - 1e-9 {
            failures.push(format!("triple {t} (n={n}, beta={beta}): H(blend)={lhs} < {rhs}"));
        }
    }
    println!("    smallest margin H(blend) - mix = {tightest:e}");
    report(7, "H(bL1 + (1-b)L2) >= bH(L1) + (1-b)H(L2) on 1000 triples", &failures, start.elapsed(), Duration::from_secs(60));
}

#[test]
fn ac08_er_versus_nw() {
    let start = Instant::now();
    let cfg = ExperimentConfig::new(ExperimentKind::ErVsNw, vec![300, 400, 500], 8.0, 20);
    let result = experiments::run(&cfg).unwrap();
    let er: Vec<f64> = result.series("er_entropy").map(|r| r.mean).collect();
    let nw: Vec<f64> = result.series("nw_entropy").map(|r| r.mean).collect();
    let mut failures = Vec::new();
    for (i, n) in cfg.n_range.iter().enumerate() {
        println!("    n={n}: H(ER)={:.6} H(NW)={:.6}", er[i], nw[i]);
        if !(nw[i] < er[i]) {
            failures.push(format!("n={n}: NW {} not below ER {}", nw[i], er[i]));
        }
    }
    for (name, s) in [("ER", &er), ("NW", &nw)] {
        if !s.windows(2).all(|w| w[0] < w[1]) {
            failures.push(format!("{name} series not increasing: {s:?}"));
        }
    }
    if result.verdict.status != Status::Pass {
        failures.push(format!("runner verdict {:?}", result.verdict.status));
    }
    report(8, "mean H(NW) < mean H(ER), both increasing in n", &failures, start.elapsed(), Duration::from_secs(300));
}

fn pearson_by_hand(xs: &[f64], ys: &[f64]) -> f64 {
    let n = xs.len() as f64;
    let (mx, my) = (xs.iter().sum::<f64>() / n, ys.iter().sum::<f64>() / n);
    let cov: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let vx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    let vy: f64 = ys.iter().map(|y| (y - my).powi(2)).sum();
    cov / (vx * vy).sqrt()
}

#[test]
fn ac09_apl_entropy_correlation() {
    let start = Instant::now();
    let cfg = ExperimentConfig::new(
        ExperimentKind::AplVsEntropy,
        (50..=200).step_by(25).collect(),
        8.0,
        20,
    );
    let result = experiments::run(&cfg).unwrap();
    let (mut apls, mut hs) = (Vec::new(), Vec::new());
    for &p in &cfg.p_values {
        let apl_rows: Vec<_> = result.series(&format!("apl_p{p}")).collect();
        let h_rows: Vec<_> = result.series(&format!("entropy_p{p}")).collect();
        for (a, h) in apl_rows.iter().zip(&h_rows) {
            assert_eq!(a.x, h.x);
            for (sa, sh) in a.samples.iter().zip(&h.samples) {
                assert_eq!(sa.replicate, sh.replicate);
                apls.push(sa.value);
                hs.push(sh.value);
            }
        }
    }
    let r = pearson_by_hand(&apls, &hs);
    println!("    Pearson r = {r:.4} over {} graphs, p in {:?}", apls.len(), cfg.p_values);
    let mut failures = Vec::new();
    if let Some(stat) = result.verdict.statistic {
        if (stat - r).abs() > 1e-12 {
            failures.push(format!("runner statistic {stat} vs recomputed {r}"));
        }
    }
    if !(r >= 0.8) {
        failures.push(format!("r = {r}"));
    }
    report(9, "Pearson(APL, H) >= 0.8 over a mixed-p NW ensemble", &failures, start.elapsed(), Duration::from_secs(300));
}

#[test]
fn ac10_real_network_pipeline() {
    let start = Instant::now();
    let dir = tempfile::tempdir().unwrap();
    let mut cfg = ExperimentConfig::new(ExperimentKind::RealNetwork, vec![100, 200, 300], 16.0, 10);
    let mode = match std::env::var_os("NETENTROPY_EMAIL_DIR") {
        Some(root) => {
            let root = std::path::PathBuf::from(root);
            cfg.group_paths = (1..=4)
                .map(|i| root.join(format!("email-Eu-core-temporal-Dept{i}.txt")))
                .collect();
            format!("SNAP department files in {}", root.display())
        }
        None => {
            let (edges, membership) =
                write_synthetic_email_network(dir.path(), &[309, 162, 89, 142], 16, 0.1, 2024);
            cfg.dataset_path = Some(edges);
            cfg.membership_path = Some(membership);
            "synthetic stand-in (set NETENTROPY_EMAIL_DIR for the SNAP data)".to_string()
        }
    };
    let result = experiments::run(&cfg).unwrap();
    println!("    mode: {mode}");
    for line in result.notes.iter().chain(&result.verdict.details) {
        println!("    {line}");
    }
    let mut failures = Vec::new();
    let observed: Vec<_> = result.series("observed_entropy").collect();
    if observed.len() != 4 {
        failures.push(format!("{} groups extracted, expected 4", observed.len()));
    }
    let size_notes = result.notes.iter().filter(|n| n.contains("reference size")).count();
    if size_notes != 4 {
        failures.push(format!("{size_notes} groups report their size against the reference"));
    }
    if result.verdict.status != Status::Pass {
        failures.push(format!("verdict {:?}: {:?}", result.verdict.status, result.verdict.details));
    }
    report(10, "group entropies within 15% of the degree-16 NW curve", &failures, start.elapsed(), Duration::from_secs(300));
}

#[test]
fn ac11_brute_force_metrics() {
    let start = Instant::now();
    let mut rng = Stream::new(11);
    let mut failures = Vec::new();
    let mut connected = 0;
    for i in 0..100 {
        let n = 2 + rng.below(9);
        let p = 0.2 + 0.7 * rng.unit();
        let g = gen_erdos_renyi(n, p, rng.next_u64()).unwrap();
        let edges = edges_of(&g);
        let tag = format!("graph {i} (n={n}, edges={edges:?})");
        let dist = floyd_warshall(n, &edges);
        match (apl_and_diameter(&dist), average_path_length(&g)) {
            (Some((apl, diameter)), Ok(got)) => {
                connected += 1;
                let got_diameter = diameter_and_eccentricity(&g).unwrap().0;
                if got != apl || got_diameter != diameter {
                    failures.push(format!("{tag}: apl {got}/{apl}, diameter {got_diameter}/{diameter}"));
                }
            }
            (None, Err(_)) => {}
            (oracle, got) => failures.push(format!("{tag}: oracle {oracle:?}, library {got:?}")),
        }
        match (average_clustering_by_triangles(n, &edges), average_clustering(&g)) {
            (Some(a), Ok(b)) if a == b => {}
            (None, Err(_)) => {}
            (a, b) => failures.push(format!("{tag}: clustering oracle {a:?}, library {b:?}")),
        }
    }
    println!("    100 graphs, {connected} connected");
    report(11, "APL, diameter, clustering equal brute force on n <= 10", &failures, start.elapsed(), Duration::from_secs(10));
}
