//! Step-by-step view of the hybrid kernel: pivots, the switch to the
//! three-term recurrence, and how the zero test changes the outcome.
//!
//! ```bash
//! cargo run --example hybrid_walkthrough
//! ```

use tridet::recurrences::{minors_hybrid, DEFAULT_RELATIVE_TOL};
use tridet::{pivot_sequence, TridiagonalMatrix, ZeroTest};

fn show(label: &str, m: &TridiagonalMatrix, zero_test: ZeroTest) -> tridet::Result<()> {
    let pivots = pivot_sequence(m, zero_test);
    let (minors, r) = minors_hybrid(m, zero_test)?;
    println!("{label} with {zero_test:?}");
    println!("  pivots computed   {:?}", pivots.c);
    println!("  first zero pivot  {:?}", pivots.break_index);
    println!("  minors f_0..f_n   {:?}", minors.as_slice());
    println!(
        "  det {}  switched at {:?}  pivot updates {}  three-term steps {}\n",
        r.value, r.pivot_break, r.steps.pivot_updates, r.steps.three_term_steps
    );
    Ok(())
}

fn main() -> tridet::Result<()> {
    let ex31 = TridiagonalMatrix::new(
        vec![1.0, 1.0, 2.0, -1.0],
        vec![1.0, -1.0, 1.0],
        vec![1.0, 1.0, -3.0],
    )?;
    show("4x4 with c_2 = 0", &ex31, ZeroTest::Exact)?;

    // 0.3 - 0.1 * 3 is about 5.5e-17 in binary floating point
    let near = TridiagonalMatrix::new(vec![1.0, 0.3, 1.0], vec![0.1, 1.0], vec![3.0, 1.0])?;
    show("near-zero pivot", &near, ZeroTest::Exact)?;
    show(
        "near-zero pivot",
        &near,
        ZeroTest::Relative(DEFAULT_RELATIVE_TOL),
    )?;

    // a vanishing last pivot never triggers a switch
    let singular = TridiagonalMatrix::new(vec![1.0; 2], vec![1.0], vec![1.0])?;
    show("singular 2x2", &singular, ZeroTest::Exact)?;
    Ok(())
}
