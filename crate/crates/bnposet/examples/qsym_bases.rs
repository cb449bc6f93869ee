//! Quasisymmetric functions of types A and B: compositions, the monomial and
//! fundamental bases, base change in both directions, and truncated
//! polynomial expansions.
//!
//! ```bash
//! cargo run -p bnposet --example qsym_bases
//! ```

use bnposet::comp::{CompA, CompB};
use bnposet::qsym::{BasisA, BasisB, QSymA, QSymB};
use bnposet::Result;

fn main() -> Result<()> {
    println!("type B compositions of 3 (first part may be 0):");
    for alpha in CompB::all(3) {
        println!("  {}  set_B = {:?}", alpha, alpha.to_set());
    }

    let alpha = CompB::new(vec![0, 2, 1])?;
    let f = QSymB::basis_elem(BasisB::Fundamental, alpha.clone());
    println!("\nF^B[{}] in the monomial basis:", alpha);
    println!("  {}", f.to_monomial());
    println!("round trip back: {}", f.to_monomial().to_fundamental());

    println!("\nexpansion of F^B[{}] in x_0..x_3:", alpha);
    println!("  {}", f.expand(3));

    let beta = CompA::new(vec![1, 2])?;
    let g = QSymA::basis_elem(BasisA::Fundamental, beta.clone());
    println!(
        "\ntype A: F[{}] in the monomial basis: {}",
        beta,
        g.to_monomial()
    );
    println!("expansion in x_1..x_3: {}", g.expand(3));
    Ok(())
}
