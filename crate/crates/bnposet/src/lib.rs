//! Exact-arithmetic toolkit for signed permutations, `B_n` posets, type B
//! quasisymmetric functions, and 0-Hecke modules of types A and B.
//!
//! The crate covers, with exact integer/rational arithmetic throughout:
//!
//! * the hyperoctahedral group: windows, descents, reflections, and the
//!   right weak order ([`perm`]);
//! * compositions of types A and B and their subset bijections ([`comp`]);
//! * quasisymmetric functions and their type B analogue: monomial and
//!   fundamental bases, base change, products, coproducts, an external
//!   action and coaction, and truncated expansions into honest
//!   polynomials ([`qsym`], [`poly`]);
//! * `B_n` posets: type B linear extensions, bounded type B P-partitions,
//!   the enumerator `K^B_P`, incomparability data, disjoint unions,
//!   subposet extraction and standardization ([`poset`], [`induct`],
//!   [`restrict`]);
//! * distinguished and regular posets, intersections of linear orders,
//!   convex hulls in the weak order, and the two-endpoint algorithm for
//!   regular posets ([`distinguished`]);
//! * 0-Hecke modules attached to posets and to weak order intervals,
//!   with induction, restriction, twists by (anti)automorphisms, simple
//!   composition multisets, and exact isomorphism certification
//!   ([`module`]);
//! * a verification harness exercising the structural identities on
//!   exhaustive and sampled poset families ([`check`]), and JSON/DOT
//!   import-export ([`io`]).

pub mod check;
pub mod comp;
pub mod distinguished;
pub mod error;
pub mod induct;
pub mod io;
pub mod module;
pub mod perm;
pub mod poly;
pub mod poset;
pub mod qsym;
pub mod restrict;

pub use error::{Error, Result};
