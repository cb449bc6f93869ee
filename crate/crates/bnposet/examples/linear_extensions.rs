//! `B_n` posets from cover relations, their type B linear extensions, the
//! enumerator in the fundamental basis, and the bounded P-partition oracle.
//!
//! ```bash
//! cargo run -p bnposet --example linear_extensions
//! ```

use bnposet::poset::BnPoset;
use bnposet::Result;

fn main() -> Result<()> {
    // The vee on +/-1, +/-2: relations -1 < 0 and 2 < 0, closed under the
    // negation symmetry.
    let p = BnPoset::from_covers(2, &[(-1, 0), (2, 0)], true)?;
    println!("poset: {}", p);
    println!("covers: {:?}", p.covers());

    println!("\ntype B linear extensions (bottom-up windows):");
    for w in p.extensions() {
        println!("  {}  descents {:?}", w, w.descents());
    }

    println!("\nK^B_P = {}", p.kbp());

    let v = 3;
    println!("\nbounded P-partitions with values in [-{}, {}]:", v, v);
    for f in p.p_partitions_bounded(v) {
        println!("  f(1), f(2) = {:?}", f);
    }
    println!(
        "\ntruncated enumerator from the partitions:\n  {}",
        p.kbp_from_partitions(v)
    );
    println!(
        "same truncation from the fundamental expansion:\n  {}",
        p.kbp().expand(v as usize)
    );
    Ok(())
}
