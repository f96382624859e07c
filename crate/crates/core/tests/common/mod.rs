#![allow(dead_code)]

use matching_energy::graph::gen_gnp;
use matching_energy::seed::SeedSpec;
use matching_energy::Graph;

/// Every labelled graph on exactly `n` vertices.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
        Graph::from_edges(n, edges).unwrap()
    })
}

/// `count` seeded random graphs with orders cycling through `orders` and
/// edge probabilities cycling through a fixed spread.
pub fn random_graphs(count: usize, orders: &[usize], seed: u64) -> Vec<Graph> {
    const PS: [f64; 5] = [0.15, 0.3, 0.5, 0.7, 0.9];
    (0..count)
        .map(|i| {
            let n = orders[i % orders.len()];
            let p = PS[(i / orders.len()) % PS.len()];
            gen_gnp(n, p, &SeedSpec::new(seed).with(i as u64)).unwrap()
        })
        .collect()
}

/// The small-graph corpus: all graphs on up to six vertices plus 500
/// random graphs on seven to ten.
pub fn corpus() -> Vec<Graph> {
    let mut out: Vec<Graph> = (0..=6).flat_map(all_graphs).collect();
    out.extend(random_graphs(500, &[7, 8, 9, 10], 0x5eed));
    out
}
