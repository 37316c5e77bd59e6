//! The symbolic-pivot algorithm: vanishing pivots become the symbol `z`,
//! the pivot product is a polynomial `P(z)`, and `det = P(0)`.
//!
//! ```bash
//! cargo run --example symbolic_detgtri
//! ```

use tridet::symbolic::{detgtri, detgtri_observed};
use tridet::{gen_example, Family, TridiagonalMatrix};

fn main() -> tridet::Result<()> {
    for (label, m) in [
        ("ex31", gen_example(Family::Ex31, 4)?),
        ("ex35, n = 6", gen_example(Family::Ex35, 6)?),
        ("ex33, n = 8", gen_example(Family::Ex33, 8)?),
        (
            "all-zero 4x4",
            TridiagonalMatrix::new(vec![0.0; 4], vec![0.0; 3], vec![0.0; 3])?,
        ),
    ] {
        let run = detgtri(&m)?;
        println!("{label}");
        println!("  substituted pivots {:?}", run.substitutions);
        println!("  P(z) = {}", run.product);
        println!("  det  = P(0) = {}\n", run.det());
    }

    println!("working pivot degrees on ex33, n = 12 (numerator / denominator):");
    detgtri_observed(&gen_example(Family::Ex33, 12)?, |s| {
        println!(
            "  d_{:<2} {:>2} / {:<2} after {} substitutions",
            s.index,
            s.num_degree.map_or("-".to_string(), |d| d.to_string()),
            s.den_degree,
            s.substitutions
        );
    })?;
    Ok(())
}
