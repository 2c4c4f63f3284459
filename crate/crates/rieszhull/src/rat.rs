//! Exact rational scalars and fixed-length rational vectors.

use std::fmt;
use std::ops::{Add, Index, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar. `BigRational` keeps the canonical form
/// (reduced, positive denominator) that the rest of the crate relies on.
pub type Rat = BigRational;

pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_zero() -> Rat {
    Rat::zero()
}

pub fn rat_one() -> Rat {
    Rat::one()
}

/// Parses "p/q" or a bare integer "p". Canonical sign goes on the numerator.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational numerator in {s:?}")))?;
    let d: BigInt = den
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational denominator in {s:?}")))?;
    if d.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rat::new(n, d))
}

pub fn in_unit_interval(q: &Rat) -> bool {
    !q.is_negative() && *q <= Rat::one()
}

/// Vector of exact rationals over a fixed point set.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct QVector(Vec<Rat>);

impl QVector {
    pub fn new(entries: Vec<Rat>) -> Self {
        QVector(entries)
    }

    pub fn zeros(len: usize) -> Self {
        QVector(vec![Rat::zero(); len])
    }

    pub fn ones(len: usize) -> Self {
        QVector(vec![Rat::one(); len])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[Rat] {
        &self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rat> {
        self.0.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|q| q.is_zero())
    }

    /// Indices with a nonzero entry.
    pub fn support(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| !self.0[i].is_zero()).collect()
    }

    pub fn in_unit_cube(&self) -> bool {
        self.0.iter().all(in_unit_interval)
    }

    pub fn scale(&self, q: &Rat) -> QVector {
        QVector(self.0.iter().map(|x| x * q).collect())
    }

    /// Pointwise product.
    pub fn hadamard(&self, other: &QVector) -> QVector {
        QVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a * b)
                .collect(),
        )
    }

    pub fn pointwise_min(&self, other: &QVector) -> QVector {
        QVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.min(b).clone())
                .collect(),
        )
    }

    pub fn pointwise_max(&self, other: &QVector) -> QVector {
        QVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.max(b).clone())
                .collect(),
        )
    }

    /// Clamp into [0,1] pointwise.
    pub fn truncate(&self) -> QVector {
        let zero = Rat::zero();
        let one = Rat::one();
        QVector(
            self.0
                .iter()
                .map(|q| q.max(&zero).min(&one).clone())
                .collect(),
        )
    }

    pub fn check_len(&self, expected: usize) -> Result<()> {
        if self.len() != expected {
            return Err(Error::Domain(format!(
                "vector length {} does not match ambient dimension {}",
                self.len(),
                expected
            )));
        }
        Ok(())
    }

    /// Parses "p/q,p/q,...".
    pub fn parse(s: &str) -> Result<QVector> {
        let entries = s
            .split(',')
            .map(parse_rat)
            .collect::<Result<Vec<_>>>()?;
        if entries.is_empty() {
            return Err(Error::Parse("empty vector".into()));
        }
        Ok(QVector(entries))
    }
}

impl Index<usize> for QVector {
    type Output = Rat;
    fn index(&self, i: usize) -> &Rat {
        &self.0[i]
    }
}

impl fmt::Display for QVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|q| q.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl Add for &QVector {
    type Output = QVector;
    fn add(self, other: &QVector) -> QVector {
        QVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

impl Sub for &QVector {
    type Output = QVector;
    fn sub(self, other: &QVector) -> QVector {
        QVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }
}

impl Neg for &QVector {
    type Output = QVector;
    fn neg(self) -> QVector {
        QVector(self.0.iter().map(|a| -a).collect())
    }
}

impl Mul<&Rat> for &QVector {
    type Output = QVector;
    fn mul(self, q: &Rat) -> QVector {
        self.scale(q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print_round_trip() {
        for s in ["1/2", "-3/7", "0", "5"] {
            let q = parse_rat(s).unwrap();
            assert_eq!(q.to_string(), s);
        }
        assert_eq!(parse_rat("2/4").unwrap(), rat(1, 2));
        assert_eq!(parse_rat("3/-6").unwrap(), rat(-1, 2));
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("a/b").is_err());
        assert!(QVector::parse("").is_err());
    }

    #[test]
    fn vector_display() {
        let v = QVector::new(vec![rat(1, 2), rat(0, 1), rat(-2, 3)]);
        assert_eq!(v.to_string(), "1/2,0,-2/3");
        assert_eq!(QVector::parse("1/2,0,-2/3").unwrap(), v);
    }

    #[test]
    fn truncate_clamps() {
        let v = QVector::new(vec![rat(3, 2), rat(-1, 2), rat(1, 3)]);
        assert_eq!(
            v.truncate(),
            QVector::new(vec![rat(1, 1), rat(0, 1), rat(1, 3)])
        );
    }

    #[test]
    fn support_and_zero() {
        let v = QVector::new(vec![rat(0, 1), rat(1, 2)]);
        assert_eq!(v.support(), vec![1]);
        assert!(!v.is_zero());
        assert!(QVector::zeros(3).is_zero());
    }
}
