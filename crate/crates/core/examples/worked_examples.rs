//! The five example families, evaluated by every kernel next to their
//! known determinants.
//!
//! ```bash
//! cargo run --example worked_examples
//! ```

use tridet::recurrences::{det_hybrid_exact, minors_hybrid};
use tridet::{
    closed_form_det, det_detgtri_exact, det_hybrid, det_three_term, det_two_term, gen_example,
    Family, ZeroTest,
};

fn main() -> tridet::Result<()> {
    let ex31 = gen_example(Family::Ex31, 4)?;
    println!("ex31:\n{ex31}");
    let r = det_hybrid(&ex31, ZeroTest::Exact)?;
    println!(
        "  hybrid     {} (switched at pivot {:?})",
        r.value, r.pivot_break
    );
    println!("  symbolic   {}", det_detgtri_exact(&ex31)?);
    match det_two_term(&ex31) {
        Ok(r) => println!("  two-term   {}", r.value),
        Err(e) => println!("  two-term   {e}"),
    }

    let (minors, _) = minors_hybrid(&gen_example(Family::Ex32, 9)?, ZeroTest::Exact)?;
    println!("\nex32, n = 9: principal minors f_0..f_9");
    println!("  {:?}", minors.as_slice());

    println!("\nex33: determinant cycles with period 6");
    for n in 1..=12 {
        let m = gen_example(Family::Ex33, n)?;
        println!(
            "  n={n:<2} hybrid {:>2}  three-term {:>2}  closed form {:>2}",
            det_hybrid(&m, ZeroTest::Exact)?.value,
            det_three_term(&m)?.value,
            closed_form_det(Family::Ex33, n)?
        );
    }

    println!("\nex34: zero for even n although no interior pivot vanishes");
    for n in 2..=11 {
        let m = gen_example(Family::Ex34, n)?;
        let exact = det_hybrid_exact(&m);
        println!(
            "  n={n:<2} exact {:>12}  closed form {:>12}  break {:?}",
            exact.value,
            closed_form_det(Family::Ex34, n)?,
            exact.pivot_break
        );
    }

    println!("\nex35: second pivot vanishes for n >= 3");
    for n in [3, 4, 10, 50] {
        let m = gen_example(Family::Ex35, n)?;
        let r = det_hybrid(&m, ZeroTest::Exact)?;
        println!(
            "  n={n:<2} hybrid {:>14}  break {:?}",
            r.value, r.pivot_break
        );
    }
    Ok(())
}
