//! LU factors in both conventions and the positive-definiteness test, all
//! read off the pivot vector.
//!
//! ```bash
//! cargo run --example lu_and_pd
//! ```

use tridet::{is_positive_definite, lu_factorize, Convention, Definiteness, TridiagonalMatrix};

fn main() -> tridet::Result<()> {
    let m = TridiagonalMatrix::new(vec![4.0, 5.0, 5.0, 5.0, 5.0], vec![2.0; 4], vec![2.0; 4])?;
    println!("T =\n{m}");

    for conv in [Convention::Doolittle, Convention::Crout] {
        let lu = lu_factorize(&m, conv)?;
        println!("{conv}:");
        println!("  L diag {:?}  sub {:?}", lu.l_diag, lu.l_sub);
        println!("  U diag {:?}  super {:?}", lu.u_diag, lu.u_super);
        println!("  det = product of pivots = {}", lu.det());
        assert_eq!(lu.reconstruct()?, m);
    }

    for (label, m) in [
        ("T", m.clone()),
        (
            "[[1,1],[1,1]]",
            TridiagonalMatrix::new(vec![1.0; 2], vec![1.0], vec![1.0])?,
        ),
        (
            "[[2,-1,0],[-1,2,-1],[0,-1,-2]]",
            TridiagonalMatrix::new(vec![2.0, 2.0, -2.0], vec![-1.0; 2], vec![-1.0; 2])?,
        ),
    ] {
        match is_positive_definite(&m)? {
            Definiteness::PositiveDefinite { pivots } => {
                println!("{label}: positive definite, pivots {pivots:?}")
            }
            Definiteness::NotPositiveDefinite { index } => {
                println!("{label}: not positive definite, pivot {index} is not positive")
            }
        }
    }

    let asym = TridiagonalMatrix::new(vec![2.0; 3], vec![1.0; 2], vec![1.0, 0.0])?;
    if let Err(e) = is_positive_definite(&asym) {
        println!("asymmetric input: {e}");
    }
    Ok(())
}
