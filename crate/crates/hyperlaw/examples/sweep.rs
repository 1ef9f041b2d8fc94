//! Sweep every theorem over the complete order-2 and order-3 classes and
//! print the per-theorem tallies.
//!
//! ```sh
//! cargo run --release --example sweep
//! ```

use std::time::Instant;

use hyperlaw::enumeration::{enumerate, enumerate_fold, EnumerationQuery};
use hyperlaw::regularity::intra_regular;
use hyperlaw::theorems::{run_all, SweepTally, TheoremOptions};

fn main() {
    let (tables, summary) = enumerate(&EnumerationQuery::exhaustive(2)).unwrap();
    let intra2 = tables.iter().filter(|t| intra_regular(t).overall).count();
    println!(
        "order 2: {} structures ({} intra-regular), {} search nodes",
        tables.len(),
        intra2,
        summary.nodes
    );

    let started = Instant::now();
    let mut query = EnumerationQuery::exhaustive(3);
    query.jobs = 4;
    let (tally, summary) = enumerate_fold(
        &query,
        SweepTally::new,
        |tally, t| {
            let verdicts =
                run_all(t, TheoremOptions::default()).expect("enumerated tables satisfy the law");
            tally.record_all(&verdicts);
        },
        |total, part| total.merge(&part),
    )
    .unwrap();
    println!(
        "order 3: {} structures swept through all theorems in {:?}",
        summary.emitted,
        started.elapsed()
    );
    for line in tally.lines() {
        println!("  {line}");
    }

    let starved = tally.never_non_vacuous();
    if starved.is_empty() {
        println!("every hypothesis was non-vacuously exercised");
    } else {
        let names: Vec<_> = starved.iter().map(|t| t.name()).collect();
        println!("never non-vacuous: {names:?}");
    }
    println!("total counterexamples: {}", tally.total_counterexamples());
}
