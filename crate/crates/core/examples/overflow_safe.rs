//! Determinants far outside the `f64` range, carried as sign and
//! log-magnitude.
//!
//! ```bash
//! cargo run --release --example overflow_safe
//! ```

use tridet::recurrences::{det_hybrid_scaled, det_three_term_scaled};
use tridet::{det_hybrid, gen_example, Error, Family, SignedLog, ZeroTest};

fn main() -> tridet::Result<()> {
    let m = gen_example(Family::Ex35, 5000)?;
    match det_hybrid(&m, ZeroTest::Exact) {
        Err(Error::Overflow { index }) => {
            println!("ex35, n = 5000: plain kernel overflows at f_{index}")
        }
        other => println!("ex35, n = 5000: {other:?}"),
    }
    let r = det_hybrid_scaled(&m, ZeroTest::Exact);
    println!(
        "  scaled: sign {} ln|det| {:.6} (about 10^{:.1}), switched at {:?}",
        r.value.sign(),
        r.value.logmag(),
        r.value.logmag() / std::f64::consts::LN_10,
        r.pivot_break
    );

    // pivots c_i = (i + 1) / i approach 1, so their rounding errors never
    // decay; the three-term recurrence stays on exact integers here
    let n = 1_000_000;
    let m = gen_example(Family::Ex32, n)?;
    let want = SignedLog::from_f64((n + 1) as f64);
    for (label, value) in [
        ("hybrid", det_hybrid_scaled(&m, ZeroTest::Exact).value),
        ("three-term", det_three_term_scaled(&m).value),
    ] {
        println!(
            "ex32, n = {n}, {label:<10} {value}  relative error vs n + 1: {:.1e}",
            value.relative_error(&want).unwrap()
        );
    }

    let a = SignedLog::from_f64(1e300);
    let p = a * a * SignedLog::from_f64(-2.0);
    println!("1e300 * 1e300 * -2 = {p}  (to_f64 gives {})", p.to_f64());
    let b = SignedLog::from_f64(1e300);
    println!("1e300 - 1e300     = {}", a - b);
    Ok(())
}
