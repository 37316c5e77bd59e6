//! Timing comparison of the kernels on the example families, printed as
//! tables and written as CSV.
//!
//! ```bash
//! cargo run --release --example bench_tables -- [out.csv]
//! ```

use tridet::bench::{plan, run_bench, write_csv, BenchAlgorithm};
use tridet::Family;

fn main() -> tridet::Result<()> {
    let tables = [
        (Family::Ex33, vec![10_000, 20_000, 30_000]),
        (Family::Ex34, vec![10_000, 20_000, 30_000]),
        (Family::Ex35, vec![1000, 2000, 3000]),
    ];
    let algs = [
        BenchAlgorithm::Detgtri,
        BenchAlgorithm::ThreeTerm,
        BenchAlgorithm::Hybrid,
    ];
    let mut all = Vec::new();
    for (family, ns) in &tables {
        // ex34 minors carry factorial-sized coefficients, which makes the
        // symbolic kernel very slow at these orders
        let algs: Vec<_> = algs
            .iter()
            .copied()
            .filter(|&a| a != BenchAlgorithm::Detgtri || *family != Family::Ex34)
            .collect();
        let records = run_bench(&plan(&[*family], ns, &algs), 5, 2)?;
        println!("{family}");
        println!(
            "  {:>6}  {:<12} {:>12}  {:>5} {:>14}",
            "n", "algorithm", "median (s)", "sign", "ln|det|"
        );
        for r in &records {
            println!(
                "  {:>6}  {:<12} {:>12.3e}  {:>5} {:>14.4}{}",
                r.n,
                r.algorithm.name(),
                r.median_seconds,
                r.result_sign,
                r.result_logmag,
                if r.fallback.is_some() {
                    "  (scaled)"
                } else {
                    ""
                }
            );
        }
        all.extend(records);
    }

    match std::env::args().nth(1) {
        Some(path) => tridet::bench::emit_csv(&all, path)?,
        None => write_csv(&all, std::io::stdout().lock())?,
    }
    Ok(())
}
