//! The Hopf-style structure maps: products and coproducts in type A, and the
//! external action and coaction connecting type B with type A.
//!
//! ```bash
//! cargo run -p bnposet --example product_coproduct
//! ```

use bnposet::comp::{CompA, CompB};
use bnposet::qsym::{BasisA, BasisB, QSymA, QSymB};
use bnposet::Result;

fn main() -> Result<()> {
    let a = QSymA::basis_elem(BasisA::Fundamental, CompA::new(vec![1])?);
    let b = QSymA::basis_elem(BasisA::Fundamental, CompA::new(vec![2])?);
    println!("F[(1)] * F[(2)] = {}", a.product(&b));

    let c = QSymA::basis_elem(BasisA::Fundamental, CompA::new(vec![2, 1])?);
    println!("\ncoproduct of F[(2,1)]:");
    for (left, right, coeff) in c.coproduct() {
        println!("  {} * F[{}] (x) F[{}]", coeff, left, right);
    }

    let f = QSymB::basis_elem(BasisB::Fundamental, CompB::new(vec![0, 1])?);
    let g = QSymA::basis_elem(BasisA::Fundamental, CompA::new(vec![1])?);
    println!("\naction F^B[(0,1)] . F[(1)] = {}", f.action(&g)?);

    let h = QSymB::basis_elem(BasisB::Fundamental, CompB::new(vec![1, 2])?);
    println!("\ncoaction of F^B[(1,2)]:");
    for (left, right, coeff) in h.coaction() {
        println!("  {} * F^B[{}] (x) F[{}]", coeff, left, right);
    }
    Ok(())
}
