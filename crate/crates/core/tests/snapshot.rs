use std::collections::BTreeMap;

use plsearch::graph::{power_law_graph, write_edge_list, CutoffRule};
use plsearch::search::SearchOptions;
use plsearch::snapshot::{
    cumulative_found_experiment, estimate_exponent, estimate_exponent_from_histogram, ingest_snapshot, write_meta,
};
use plsearch::Error;

#[test]
fn exact_power_law_histogram_is_recovered() {
    let hist: BTreeMap<usize, usize> = (1..=40usize)
        .map(|k| (k, (1e6 * (k as f64).powf(-2.07)).round() as usize))
        .filter(|&(_, c)| c > 0)
        .collect();
    let est = estimate_exponent_from_histogram(&hist, 1, Some(40)).unwrap();
    assert!((est.tau_hat - 2.07).abs() < 0.01, "{}", est.tau_hat);
    assert!(est.fit.r_squared > 0.999);
}

#[test]
fn default_window_ends_at_last_repeated_degree() {
    let hist = BTreeMap::from([(1, 100), (2, 30), (3, 12), (4, 2), (9, 1)]);
    let est = estimate_exponent_from_histogram(&hist, 1, None).unwrap();
    assert_eq!(est.k_max, 4);
    assert!(matches!(
        estimate_exponent_from_histogram(&hist, 3, Some(4)),
        Err(Error::TooFewBins { needed: 3, found: 2 })
    ));
}

#[test]
fn generated_graphs_refit_near_their_exponent() {
    for tau in [2.07, 2.3] {
        let mean = (0..10u64)
            .map(|s| {
                let g = power_law_graph(20_000, tau, CutoffRule::RootN, s).unwrap();
                estimate_exponent(&g, 1, Some(20)).unwrap().tau_hat
            })
            .sum::<f64>()
            / 10.0;
        assert!((mean - tau).abs() < 0.15, "tau {tau}: fitted {mean}");
    }
}

#[test]
fn ingest_round_trips_a_written_graph() {
    let g = power_law_graph(500, 2.1, CutoffRule::RootN, 2).unwrap();
    let mut text = b"# snapshot\n".to_vec();
    write_edge_list(&g, &mut text).unwrap();
    text.extend_from_slice(b"7 7\n");
    let (loaded, meta) = ingest_snapshot(text.as_slice(), "synthetic").unwrap();
    assert_eq!(loaded.edge_count(), g.edge_count());
    assert_eq!(meta.self_loops_dropped, 1);
    let mut out = Vec::new();
    write_meta(&meta, None, &mut out).unwrap();
    let out = String::from_utf8(out).unwrap();
    assert!(out.starts_with("source: synthetic\n"));
    assert!(out.contains("self_loops_dropped: 1\n"));
    assert!(out.ends_with("tau_hat: none\n"));
}

#[test]
fn found_curve_is_a_monotone_distribution() {
    let g = power_law_graph(1000, 2.07, CutoffRule::RootN, 6).unwrap();
    let curve = cumulative_found_experiment(&g, 200, 1, &SearchOptions::default(), 6).unwrap();
    assert_eq!(curve.censored, 0);
    assert!(curve.cumulative_fraction.windows(2).all(|w| w[1] >= w[0]));
    assert!((curve.cumulative_fraction.last().unwrap() - 1.0).abs() < 1e-12);
    assert_eq!(
        curve,
        cumulative_found_experiment(&g, 200, 1, &SearchOptions::default(), 6).unwrap()
    );
    let mut csv = Vec::new();
    curve.write_csv(&mut csv).unwrap();
    assert!(String::from_utf8(csv)
        .unwrap()
        .starts_with("steps,cumulative_fraction\n0,"));
}

#[test]
fn replicas_do_not_slow_the_search() {
    let g = power_law_graph(2000, 2.1, CutoffRule::RootN, 8).unwrap();
    let opts = SearchOptions::default();
    let one = cumulative_found_experiment(&g, 400, 1, &opts, 8)
        .unwrap()
        .median_steps()
        .unwrap();
    let five = cumulative_found_experiment(&g, 400, 5, &opts, 8)
        .unwrap()
        .median_steps()
        .unwrap();
    assert!(five <= one, "{five} vs {one}");
}

#[test]
fn too_many_replicas_is_rejected() {
    let (g, _) = ingest_snapshot("0 1\n1 2\n".as_bytes(), "tiny").unwrap();
    assert!(matches!(
        cumulative_found_experiment(&g, 5, 3, &SearchOptions::default(), 0),
        Err(Error::InvalidParameter { .. })
    ));
}
