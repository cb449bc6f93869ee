//! Weak order interval modules: the module on an interval, its verified
//! splitting into a submodule and quotient interval, the resulting simple
//! composition multiset, and the verification suites.
//!
//! ```bash
//! cargo run -p bnposet --example interval_modules
//! ```

use bnposet::check::run_suite;
use bnposet::module::{split_interval, wbim, wbim_decompose};
use bnposet::perm::{interval_weak_r, SignedPerm};
use bnposet::Result;

fn main() -> Result<()> {
    let lo = SignedPerm::identity(2);
    let hi = SignedPerm::longest(2);
    let interval = interval_weak_r(&lo, &hi)?;
    println!("interval [{}, {}] has {} elements", lo, hi, interval.len());

    let m = wbim(&lo, &hi)?;
    println!("interval module dimension: {}", m.dim());

    let (j1, j2) = split_interval(&interval)?;
    println!("\nverified submodule split:");
    println!(
        "  quotient part: {}",
        j1.iter()
            .map(|w| format!("{}", w))
            .collect::<Vec<_>>()
            .join(" ")
    );
    println!(
        "  submodule part: {}",
        j2.iter()
            .map(|w| format!("{}", w))
            .collect::<Vec<_>>()
            .join(" ")
    );

    println!("\ncomposition multiset of the full decomposition:");
    for c in wbim_decompose(&lo, &hi)? {
        println!("  F^B[{}]", c);
    }

    let report = run_suite("wbim", 2, 0, 0)?;
    println!(
        "\nsuite `{}`: {} checks passed ({})",
        report.name, report.cases, report.detail
    );
    Ok(())
}
