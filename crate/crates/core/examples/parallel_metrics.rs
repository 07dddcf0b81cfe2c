//! Full report on a synthetic sparse graph with different worker counts. The
//! reports are identical; only the wall time changes.
//!
//! cargo run --release --example parallel_metrics [NODES] [EDGES]

use std::time::Instant;

use collabnet::metrics::{full_report, MetricsOptions, Parallelism};
use collabnet::netbuild::CollabGraph;
use collabnet::Level;

/// Small deterministic generator so the example needs nothing beyond the library.
struct SplitMix(u64);

impl SplitMix {
    fn below(&mut self, n: u64) -> u64 {
        self.0 = self.0.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        (z ^ (z >> 31)) % n
    }
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let n: u64 = args.next().map_or(Ok(5000), |s| s.parse())?;
    let m: usize = args.next().map_or(Ok(15000), |s| s.parse())?;

    let mut rng = SplitMix(42);
    let mut g = CollabGraph::new(Level::Institute);
    for i in 0..n {
        g.add_node(&format!("n{i}"));
    }
    while g.edge_count() < m {
        let (a, b) = (rng.below(n), rng.below(n));
        if a != b {
            g.add_weight(&format!("n{a}"), &format!("n{b}"), 1 + rng.below(3), None)?;
        }
    }

    let cores = std::thread::available_parallelism().map_or(1, |c| c.get());
    println!("{n} nodes, {m} edges, {cores} core(s) available");
    let mut first: Option<String> = None;
    for threads in [1, 2, 4] {
        let start = Instant::now();
        let report = full_report(
            &g,
            &MetricsOptions::default().with_parallelism(Parallelism::new(threads)),
        )?;
        let elapsed = start.elapsed();
        let json = serde_json::to_string(&report)?;
        let same = first.get_or_insert_with(|| json.clone()) == &json;
        println!("{threads} worker(s): {elapsed:>10.2?}  identical to 1 worker: {same}");
    }
    println!("\n{}", first.unwrap_or_default());
    Ok(())
}
