//! JSON interchange for posets and DOT rendering of Hasse diagrams and
//! module action quivers.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::module::HeckeModule;
use crate::poset::BnPoset;

/// JSON description of a `B_n` poset: the rank, a list of strict relations
/// `[a, b]` meaning `a < b`, and whether to close the list under the
/// negation symmetry before validating.  Without `symmetrize`, an input
/// whose relations are not already negation-symmetric is rejected.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PosetJson {
    /// Rank `n`: the elements are `-n, ..., -1, 0, 1, ..., n`.
    pub n: usize,
    /// Strict relations `a < b`.
    pub covers: Vec<(i32, i32)>,
    /// Close the relation list under `(a, b) -> (-b, -a)` before validating.
    #[serde(default)]
    pub symmetrize: bool,
}

/// Parse a `B_n` poset from its JSON description.
pub fn poset_from_json(text: &str) -> Result<BnPoset> {
    let spec: PosetJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    BnPoset::from_covers(spec.n, &spec.covers, spec.symmetrize)
}

/// Serialize a poset into the JSON description, normalized to its cover
/// relations (which are already negation-symmetric).
pub fn poset_to_json(p: &BnPoset) -> String {
    let spec = PosetJson {
        n: p.rank(),
        covers: p.covers(),
        symmetrize: false,
    };
    serde_json::to_string_pretty(&spec).expect("poset serializes")
}

/// Render the Hasse diagram of a poset as DOT, drawn upward with the
/// negative elements listed first so they settle on the left.
pub fn poset_to_dot(p: &BnPoset) -> String {
    let n = p.rank() as i32;
    let mut out = String::from("digraph poset {\n  rankdir=BT;\n  node [shape=plaintext];\n");
    for v in -n..=n {
        out.push_str(&format!("  \"{}\";\n", v));
    }
    for (a, b) in p.covers() {
        out.push_str(&format!("  \"{}\" -> \"{}\";\n", a, b));
    }
    out.push_str("}\n");
    out
}

/// Render the action quiver of a module as DOT: one node per basis vector
/// and one labeled arrow per nonzero entry of a generator matrix (diagonal
/// entries become loops).
pub fn module_to_dot(m: &HeckeModule) -> String {
    let mut out = String::from("digraph module {\n");
    for (i, label) in m.labels().iter().enumerate() {
        out.push_str(&format!("  b{} [label=\"{}\"];\n", i, label));
    }
    for (g, gen) in m.gens().iter().enumerate() {
        for b in 0..m.dim() {
            for &(t, c) in m.row(g, b) {
                let text = if c == 1 {
                    format!("{}", gen)
                } else {
                    format!("{} ({})", gen, c)
                };
                out.push_str(&format!("  b{} -> b{} [label=\"{}\"];\n", b, t, text));
            }
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::module_b_poset;

    #[test]
    fn json_round_trip() {
        let p = BnPoset::from_covers(2, &[(-1, 0), (2, 0), (0, 1), (0, -2)], false).unwrap();
        let q = poset_from_json(&poset_to_json(&p)).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn json_accepts_symmetrize_flag() {
        let p = poset_from_json(r#"{"n": 2, "covers": [[-1, 0], [2, 0]], "symmetrize": true}"#)
            .unwrap();
        let q = BnPoset::from_covers(2, &[(-1, 0), (2, 0), (0, 1), (0, -2)], false).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn json_rejects_asymmetric_without_flag() {
        assert!(poset_from_json(r#"{"n": 2, "covers": [[-1, 0]]}"#).is_err());
        assert!(poset_from_json("not json").is_err());
    }

    #[test]
    fn dot_outputs_contain_the_structure() {
        let p = BnPoset::from_covers(1, &[(-1, 0), (0, 1)], false).unwrap();
        let dot = poset_to_dot(&p);
        assert!(dot.contains("\"-1\" -> \"0\""));
        assert!(dot.contains("\"0\" -> \"1\""));
        let q = module_to_dot(&module_b_poset(&BnPoset::antichain(1)));
        assert!(q.contains("digraph module"));
        assert!(q.contains("s^B_0"));
    }
}
