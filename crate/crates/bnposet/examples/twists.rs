//! The three twists of 0-Hecke modules and their certified identifications:
//! the family exchange sends a poset module to its sign-free companion, the
//! dual twist sends it to the sign-free module of the dual poset, and both
//! twists are compatible with induction.
//!
//! ```bash
//! cargo run -p bnposet --example twists
//! ```

use bnposet::module::{
    certify_chi_induce, certify_theta_induce, certify_with_map, diag_sign_length,
    label_identity_map, module_a_poset, module_b_poset, module_b_poset_signfree, twist_chi,
    twist_theta,
};
use bnposet::poset::{BnPoset, FinitePoset};
use bnposet::Result;

fn main() -> Result<()> {
    let p = BnPoset::from_covers(2, &[(-1, 0), (2, 0)], true)?;
    let m = module_b_poset(&p);

    let th = twist_theta(&m);
    let sf = module_b_poset_signfree(&p);
    certify_with_map(&th, &sf, &diag_sign_length(&th)?)?;
    println!("family-exchange twist = sign-free module, via the (-1)^length diagonal");

    let chi = twist_chi(&m);
    let sfd = module_b_poset_signfree(&p.dual());
    certify_with_map(&chi, &sfd, &label_identity_map(&chi, &sfd)?)?;
    println!("dual twist = sign-free module of the dual poset, via matching labels");

    assert_eq!(twist_theta(&th), m);
    assert_eq!(twist_chi(&chi), m);
    println!("both twists are involutive");

    let b1 = BnPoset::antichain(1);
    let a2 = FinitePoset::antichain_on(2);
    certify_theta_induce(&module_b_poset(&b1), &module_a_poset(&a2)?)?;
    println!("family-exchange twist commutes with induction (certified)");

    certify_chi_induce(&b1, &a2, 42)?;
    println!("dual twist carries induction to induction of twisted factors (certified)");
    Ok(())
}
