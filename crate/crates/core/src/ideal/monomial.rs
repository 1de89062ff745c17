use std::cmp::Ordering;
use std::fmt;

use crate::complex::VertexSet;
use crate::error::{Error, Result};

/// `x^b` for an exponent vector `b ∈ ℕⁿ`.
///
/// Sorted by total degree, then by exponent vector in decreasing
/// lexicographic order, so `x1x2 < x1x3 < x2x3 < x1x2x3`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn one(n: usize) -> Self {
        Monomial { exps: vec![0; n] }
    }

    /// The squarefree monomial `x_σ` with support `σ`.
    pub fn from_set(n: usize, set: VertexSet) -> Self {
        let mut exps = vec![0; n];
        for v in set.iter() {
            exps[v - 1] = 1;
        }
        Monomial { exps }
    }

    /// `x_{i_1}^{e_1} ...` from 1-based `(variable, exponent)` pairs.
    pub fn from_powers(n: usize, powers: &[(usize, u32)]) -> Self {
        let mut exps = vec![0; n];
        for &(v, e) in powers {
            exps[v - 1] += e;
        }
        Monomial { exps }
    }

    pub fn n(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    /// Exponent of the 1-based variable `v`.
    pub fn exponent(&self, v: usize) -> u32 {
        self.exps[v - 1]
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    pub fn support(&self) -> VertexSet {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i + 1)
            .collect()
    }

    fn check(&self, other: &Monomial) -> Result<()> {
        if self.n() != other.n() {
            return Err(Error::LengthMismatch(self.n(), other.n()));
        }
        Ok(())
    }

    fn zip_with(&self, other: &Monomial, f: impl Fn(u32, u32) -> u32) -> Result<Monomial> {
        self.check(other)?;
        Ok(Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(&a, &b)| f(a, b)).collect(),
        })
    }

    pub fn multiply(&self, other: &Monomial) -> Result<Monomial> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn lcm(&self, other: &Monomial) -> Result<Monomial> {
        self.zip_with(other, u32::max)
    }

    pub fn gcd(&self, other: &Monomial) -> Result<Monomial> {
        self.zip_with(other, u32::min)
    }

    /// Whether `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> Result<bool> {
        self.check(other)?;
        Ok(self.divides_unchecked(other))
    }

    #[inline]
    pub(crate) fn divides_unchecked(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// The support radical `√x^b`.
    pub fn sqrt(&self) -> Monomial {
        Monomial {
            exps: self.exps.iter().map(|&e| e.min(1)).collect(),
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        for (i, &e) in self.exps.iter().enumerate() {
            match e {
                0 => {}
                1 => write!(f, "x{}", i + 1)?,
                _ => write!(f, "x{}^{}", i + 1, e)?,
            }
        }
        Ok(())
    }
}

/// Serializes as the exponent vector.
impl serde::Serialize for Monomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.exps.serialize(s)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(powers: &[(usize, u32)]) -> Monomial {
        Monomial::from_powers(3, powers)
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(m(&[(1, 2), (2, 1)]).gcd(&m(&[(1, 1), (3, 1)])).unwrap(), m(&[(1, 1)]));
        assert_eq!(m(&[(1, 2), (2, 3)]).sqrt(), m(&[(1, 1), (2, 1)]));
        assert_eq!(m(&[(1, 1), (2, 1)]).lcm(&m(&[(2, 2)])).unwrap(), m(&[(1, 1), (2, 2)]));
        assert_eq!(
            m(&[(1, 1)]).multiply(&m(&[(1, 1), (3, 1)])).unwrap(),
            m(&[(1, 2), (3, 1)])
        );
        assert!(m(&[(1, 1)]).divides(&m(&[(1, 2), (3, 1)])).unwrap());
        assert!(!m(&[(2, 1)]).divides(&m(&[(1, 2)])).unwrap());
    }

    #[test]
    fn length_mismatch() {
        let a = Monomial::one(2);
        let b = Monomial::one(3);
        assert_eq!(a.lcm(&b), Err(Error::LengthMismatch(2, 3)));
        assert!(a.divides(&b).is_err());
    }

    #[test]
    fn display_and_order() {
        assert_eq!(m(&[(1, 2), (3, 1)]).to_string(), "x1^2x3");
        let mut v = vec![m(&[(2, 1), (3, 1)]), m(&[(1, 1), (2, 1), (3, 1)]), m(&[(1, 1), (2, 1)]), m(&[(1, 1), (3, 1)])];
        v.sort();
        let shown: Vec<String> = v.iter().map(|x| x.to_string()).collect();
        assert_eq!(shown, ["x1x2", "x1x3", "x2x3", "x1x2x3"]);
    }
}
