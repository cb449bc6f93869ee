//! Signed permutations: windows, generators, descents, lengths, inversion
//! sets, and the right weak order with its intervals.
//!
//! ```bash
//! cargo run -p bnposet --example signed_permutations
//! ```

use bnposet::perm::{all_signed_perms, interval_weak_r, SignedPerm};
use bnposet::Result;

fn main() -> Result<()> {
    let w: SignedPerm = "[3,1,-2,5,4]".parse()?;
    println!("w           = {}", w);
    println!("w inverse   = {}", w.inverse());
    println!("descents    = {:?}", w.descents());
    println!("length      = {}", w.length());

    let a: SignedPerm = "[3,1,-2,5,4]".parse()?;
    let b: SignedPerm = "[1,2,5,-4,3]".parse()?;
    println!("{} composed with {} = {}", a, b, a.compose(&b)?);

    let e = SignedPerm::identity(2);
    let w0 = SignedPerm::longest(2);
    println!(
        "\nlongest element of rank 2: {} (length {})",
        w0,
        w0.length()
    );

    println!("\nright weak order interval [{}, {}]:", e, w0);
    for v in interval_weak_r(&e, &w0)? {
        println!(
            "  {}  length {}  inversions {:?}",
            v,
            v.length(),
            v.inversion_set().members()
        );
    }

    let count = all_signed_perms(3)?.len();
    println!("\n|B_3| = {}", count);
    Ok(())
}
