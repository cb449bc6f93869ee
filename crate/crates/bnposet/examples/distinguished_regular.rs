//! Distinguished and regular posets: intersections of linear orders, the
//! canonical representative with a given extension set, and the two-endpoint
//! description of the extensions of a regular poset.
//!
//! ```bash
//! cargo run -p bnposet --example distinguished_regular
//! ```

use bnposet::distinguished::{
    distinguished_representative, is_distinguished, is_regular, poset_of, sigma_rho,
};
use bnposet::perm::{interval_weak_r, SignedPerm};
use bnposet::Result;

fn main() -> Result<()> {
    let a: SignedPerm = "[-2,1]".parse()?;
    let b: SignedPerm = "[1,-2]".parse()?;
    let p = poset_of(&[a.clone(), b.clone()])?;
    println!("intersection of the linear orders of {} and {}:", a, b);
    println!("  {}", p);
    println!("  distinguished: {}", is_distinguished(&p));
    println!("  regular:       {}", is_regular(&p));

    let (lo, hi) = sigma_rho(&p)?;
    println!("  extension set = weak order interval [{}, {}]", lo, hi);
    let mut exts = p.extensions();
    exts.sort();
    let mut ival = interval_weak_r(&lo, &hi)?;
    ival.sort();
    assert_eq!(exts, ival);
    println!("  verified: extensions match the interval elementwise");

    // A poset that is not distinguished (here -1 < 1 with 1 incomparable
    // to 0) still has a canonical companion with the same extensions.
    let q = bnposet::poset::BnPoset::from_covers(2, &[(-1, 1)], true)?;
    println!("\nposet {}: distinguished = {}", q, is_distinguished(&q));
    let rep = distinguished_representative(&q)?;
    println!("representative with the same extensions: {}", rep);
    assert_eq!(rep.extensions(), q.extensions());
    println!("extension sets agree");
    Ok(())
}
