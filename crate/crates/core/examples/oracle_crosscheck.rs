//! Random matrices checked against dense elimination, in floating point
//! and in exact rational arithmetic.
//!
//! ```bash
//! cargo run --release --example oracle_crosscheck
//! ```

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tridet::generators::{random_diag_dominant, random_integer};
use tridet::oracle::{dense_det_exact, dense_det_float, to_dense_exact, DENSE_LIMIT_EXACT};
use tridet::recurrences::det_hybrid_exact;
use tridet::{det_detgtri_exact, det_hybrid, ZeroTest};

fn main() -> tridet::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);

    let mut worst: f64 = 0.0;
    for _ in 0..200 {
        let n = rng.gen_range(1..=200);
        let m = random_diag_dominant(&mut rng, n);
        let dense = dense_det_float(&m.to_dense()?)?;
        let fast = det_hybrid(&m, ZeroTest::Exact)?.value;
        worst = worst.max(((fast - dense) / dense).abs());
    }
    println!("200 dominant matrices: worst relative gap to dense elimination {worst:.2e}");

    let (mut agree, mut singular, mut breaks) = (0, 0, 0);
    for _ in 0..200 {
        let n = rng.gen_range(1..=12);
        let m = random_integer(&mut rng, n, -3, 3);
        let oracle = dense_det_exact(&to_dense_exact(&m, DENSE_LIMIT_EXACT)?)?;
        let hybrid = det_hybrid_exact(&m);
        breaks += usize::from(hybrid.pivot_break.is_some());
        singular += usize::from(oracle == num_rational::BigRational::default());
        if hybrid.value == oracle && det_detgtri_exact(&m)? == oracle {
            agree += 1;
        }
    }
    println!(
        "200 integer matrices: {agree} exact agreements ({breaks} with a vanishing pivot, {singular} singular)"
    );
    Ok(())
}
