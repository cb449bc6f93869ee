//! Exact multivariate polynomials over the integers, used as an
//! independent expansion oracle for quasisymmetric series truncated to
//! finitely many variables.

use num::BigInt;
use std::collections::BTreeMap;
use std::fmt;

/// A polynomial in variables `x_0, ..., x_{nvars-1}` with `BigInt`
/// coefficients.  Exponent vectors always have length `nvars`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        let mut p = Poly::zero(nvars);
        p.add_term(vec![0; nvars], BigInt::from(1));
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Adds `coeff * x^expo` in place, dropping the term if it cancels.
    pub fn add_term(&mut self, expo: Vec<u32>, coeff: BigInt) {
        assert_eq!(expo.len(), self.nvars);
        if coeff == BigInt::from(0) {
            return;
        }
        let entry = self.terms.entry(expo).or_insert_with(|| BigInt::from(0));
        *entry += coeff;
        if *entry == BigInt::from(0) {
            let key: Vec<u32> = self
                .terms
                .iter()
                .find(|(_, c)| **c == BigInt::from(0))
                .map(|(k, _)| k.clone())
                .unwrap();
            self.terms.remove(&key);
        }
    }

    /// The monomial `x_var^pow`.
    pub fn monomial(nvars: usize, var: usize, pow: u32) -> Self {
        let mut expo = vec![0; nvars];
        expo[var] = pow;
        let mut p = Poly::zero(nvars);
        p.add_term(expo, BigInt::from(1));
        p
    }

    pub fn add(&self, other: &Poly) -> Poly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, k: &BigInt) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c * k);
        }
        out
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = Poly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let expo: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(expo, c1 * c2);
            }
        }
        out
    }

    /// Coefficient of the given exponent vector.
    pub fn coeff(&self, expo: &[u32]) -> BigInt {
        self.terms
            .get(expo)
            .cloned()
            .unwrap_or_else(|| BigInt::from(0))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let trivial = e.iter().all(|&p| p == 0);
            if *c != BigInt::from(1) || trivial {
                write!(f, "{c}")?;
                if !trivial {
                    write!(f, "*")?;
                }
            }
            let mut started = false;
            for (v, &p) in e.iter().enumerate() {
                if p == 0 {
                    continue;
                }
                if started {
                    write!(f, "*")?;
                }
                started = true;
                if p == 1 {
                    write!(f, "x{v}")?;
                } else {
                    write!(f, "x{v}^{p}")?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_cancellation() {
        let x = Poly::monomial(2, 0, 1);
        let y = Poly::monomial(2, 1, 1);
        let s = x.add(&y);
        let sq = s.mul(&s);
        // (x + y)^2 = x^2 + 2xy + y^2
        assert_eq!(sq.coeff(&[2, 0]), BigInt::from(1));
        assert_eq!(sq.coeff(&[1, 1]), BigInt::from(2));
        assert_eq!(sq.coeff(&[0, 2]), BigInt::from(1));
        assert_eq!(sq.num_terms(), 3);
        let z = sq.sub(&sq);
        assert!(z.is_zero());
    }

    #[test]
    fn display_is_deterministic() {
        let p = Poly::monomial(3, 0, 2).add(&Poly::monomial(3, 2, 1).scale(&BigInt::from(3)));
        assert_eq!(p.to_string(), "3*x2 + x0^2");
    }
}
