fn main() {
    let start = std::time::Instant::now();
    let report = ringlab_harness::run_suite(7, &ringlab_harness::Profile::default_profile());
    for p in &report.properties {
        println!(
            "{:4} attempts={:5} satisfying={:4} hit={:.3} violations={} elapsed={:?}",
            p.id, p.attempts, p.satisfying, p.hit_rate(), p.violations_total, p.elapsed
        );
    }
    println!("total: {:?}, theorem violations: {}", start.elapsed(), report.theorem_violations());
}
