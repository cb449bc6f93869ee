//! 0-Hecke modules on linear extension bases: the action quiver, the
//! defining relations, the characteristic, and the composition multiset in
//! the Grothendieck group.
//!
//! ```bash
//! cargo run -p bnposet --example poset_modules
//! ```

use bnposet::io::module_to_dot;
use bnposet::module::{
    characteristic_b, check_relations, grothendieck_decompose, module_b_poset, simple_b,
};
use bnposet::poset::{BnPoset, FinitePoset};
use bnposet::Result;

fn main() -> Result<()> {
    let p = BnPoset::from_covers(2, &[(-1, 0), (2, 0)], true)?;
    let union = p.disjoint_union_b(&FinitePoset::antichain_on(1))?;
    let m = module_b_poset(&union);
    println!(
        "module of the disjoint union: dimension {} over generators {:?}",
        m.dim(),
        m.gens()
    );
    check_relations(&m)?;
    println!("defining relations verified");

    println!("\naction of each generator on each basis vector:");
    for (b, label) in m.labels().iter().enumerate() {
        for g in 0..m.gens().len() {
            let row = m.row(g, b);
            if !row.is_empty() {
                let images: Vec<String> = row
                    .iter()
                    .map(|&(t, c)| format!("{} {}", c, m.labels()[t]))
                    .collect();
                println!("  {} . pibar_{} = {}", label, g, images.join(" + "));
            }
        }
    }

    println!("\ncharacteristic: {}", characteristic_b(&m)?);

    println!("\ncomposition multiset from the submodule recursion:");
    for c in grothendieck_decompose(&union)? {
        println!("  F^B[{}]", c);
    }

    let s = simple_b(&[0, 2], 3)?;
    println!(
        "\na simple module: dimension {}, label {}",
        s.dim(),
        s.labels()[0]
    );

    println!("\nquiver as DOT (first lines):");
    for line in module_to_dot(&m).lines().take(6) {
        println!("  {}", line);
    }
    Ok(())
}
