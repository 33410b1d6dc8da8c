//! Finite commutative rings `Z_{n_1} x ... x Z_{n_k}`.
//!
//! Elements are residue tuples. Every predicate the graph code needs reduces to
//! componentwise gcd arithmetic: in `Z_n`, the principal ideal generated by `b`
//! is the set of multiples of `gcd(b, n)`.

mod classes;
mod crt;
pub mod oracle;

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

pub use classes::{AssociateClass, AssociateClasses};
pub use crt::CrtSplit;

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Prime factorization by trial division, primes ascending with multiplicity.
pub(crate) fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p.saturating_mul(p) <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub(crate) fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n) == [(n, 1)]
}

/// A direct product of modular rings, factors kept in written order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingSpec {
    moduli: Vec<u64>,
    cardinality: u64,
}

/// A residue tuple, one residue per factor of its ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingElement(Vec<u64>);

impl RingElement {
    pub fn residues(&self) -> &[u64] {
        &self.0
    }

    /// Number of zero residues.
    pub fn zero_count(&self) -> usize {
        self.0.iter().filter(|&&r| r == 0).count()
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, r) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{r}")?;
        }
        f.write_str(")")
    }
}

impl Serialize for RingElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Parses `Z<n>` factors joined by `x`, case-insensitively (`"Z2xZ3xZ5"`).
pub fn parse_spec(text: &str) -> Result<RingSpec> {
    let syntax = |reason: &str| Error::Syntax {
        input: text.to_string(),
        reason: reason.to_string(),
    };
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err(syntax("empty input"));
    }
    let mut moduli = Vec::new();
    for factor in trimmed.split(['x', 'X']) {
        let digits = factor
            .strip_prefix(['z', 'Z'])
            .ok_or_else(|| syntax("each factor must look like Z<n>"))?;
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(syntax("factor modulus must be a decimal integer"));
        }
        let n = digits
            .parse::<u64>()
            .map_err(|_| syntax("modulus does not fit in 64 bits"))?;
        moduli.push(n);
    }
    RingSpec::new(moduli)
}

impl FromStr for RingSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_spec(s)
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, n) in self.moduli.iter().enumerate() {
            if i > 0 {
                f.write_str("x")?;
            }
            write!(f, "Z{n}")?;
        }
        Ok(())
    }
}

impl Serialize for RingSpec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl RingSpec {
    pub fn new(moduli: Vec<u64>) -> Result<Self> {
        if moduli.is_empty() {
            return Err(Error::EmptySpec);
        }
        let mut cardinality = 1u64;
        for &n in &moduli {
            if n < 2 {
                return Err(Error::ModulusTooSmall(n));
            }
            cardinality = cardinality
                .checked_mul(n)
                .ok_or(Error::CardinalityOverflow)?;
        }
        Ok(RingSpec {
            moduli,
            cardinality,
        })
    }

    /// `Z2 x ... x Z2` with `n` factors.
    pub fn boolean(n: usize) -> Result<Self> {
        RingSpec::new(vec![2; n])
    }

    pub fn moduli(&self) -> &[u64] {
        &self.moduli
    }

    pub fn cardinality(&self) -> u64 {
        self.cardinality
    }

    pub fn factor_count(&self) -> usize {
        self.moduli.len()
    }

    /// Builds an element, rejecting residues that are out of range.
    pub fn element(&self, residues: impl Into<Vec<u64>>) -> Result<RingElement> {
        let residues = residues.into();
        if residues.len() != self.moduli.len()
            || residues.iter().zip(&self.moduli).any(|(r, n)| r >= n)
        {
            return Err(Error::InvalidElement {
                spec: self.to_string(),
                element: format!("{residues:?}"),
            });
        }
        Ok(RingElement(residues))
    }

    pub fn zero(&self) -> RingElement {
        RingElement(vec![0; self.moduli.len()])
    }

    pub fn one(&self) -> RingElement {
        RingElement(vec![1; self.moduli.len()])
    }

    pub fn add(&self, a: &RingElement, b: &RingElement) -> RingElement {
        RingElement(
            self.moduli
                .iter()
                .zip(a.0.iter().zip(&b.0))
                .map(|(&n, (&x, &y))| ((x as u128 + y as u128) % n as u128) as u64)
                .collect(),
        )
    }

    pub fn mul(&self, a: &RingElement, b: &RingElement) -> RingElement {
        RingElement(
            self.moduli
                .iter()
                .zip(a.0.iter().zip(&b.0))
                .map(|(&n, (&x, &y))| (x as u128 * y as u128 % n as u128) as u64)
                .collect(),
        )
    }

    /// Position of `a` in the lexicographic enumeration of the ring.
    pub fn index_of(&self, a: &RingElement) -> usize {
        a.0.iter()
            .zip(&self.moduli)
            .fold(0usize, |acc, (&r, &n)| acc * n as usize + r as usize)
    }

    pub fn element_at(&self, mut index: usize) -> RingElement {
        let mut residues = vec![0; self.moduli.len()];
        for (slot, &n) in residues.iter_mut().zip(&self.moduli).rev() {
            *slot = (index % n as usize) as u64;
            index /= n as usize;
        }
        RingElement(residues)
    }

    /// Every element, in lexicographic residue order.
    pub fn elements(&self) -> impl Iterator<Item = RingElement> + '_ {
        (0..self.cardinality as usize).map(|i| self.element_at(i))
    }

    pub fn is_zero(&self, a: &RingElement) -> bool {
        a.0.iter().all(|&r| r == 0)
    }

    pub fn is_unit(&self, a: &RingElement) -> bool {
        a.0.iter().zip(&self.moduli).all(|(&r, &n)| gcd(r, n) == 1)
    }

    pub fn unit_count(&self) -> u64 {
        self.moduli
            .iter()
            .map(|&n| {
                factorize(n)
                    .iter()
                    .fold(n, |phi, &(p, _)| phi / p * (p - 1))
            })
            .product()
    }

    /// Whether `a` lies in the principal ideal `Rb`.
    ///
    /// Componentwise, `a_i` is a multiple of `b_i` in `Z_{n_i}` exactly when
    /// `gcd(b_i, n_i)` divides `a_i`.
    pub fn in_principal_ideal(&self, a: &RingElement, b: &RingElement) -> bool {
        let fast =
            a.0.iter()
                .zip(&b.0)
                .zip(&self.moduli)
                .all(|((&x, &y), &n)| x % gcd(y, n) == 0);
        #[cfg(feature = "paranoid")]
        assert_eq!(
            fast,
            oracle::in_principal_ideal(self, a, b),
            "membership fast path disagrees with exhaustive search for {a} in R{b} over {self}"
        );
        fast
    }

    /// Canonical generators `gcd(a_i, n_i)` of the componentwise ideals of `Ra`.
    /// Two elements are associates exactly when these agree.
    pub fn ideal_signature(&self, a: &RingElement) -> Vec<u64> {
        a.0.iter()
            .zip(&self.moduli)
            .map(|(&r, &n)| gcd(r, n))
            .collect()
    }

    /// The vertex set: non-zero non-units, lexicographically ordered.
    pub fn vertices(&self) -> Vec<RingElement> {
        self.elements()
            .filter(|a| !self.is_zero(a) && !self.is_unit(a))
            .collect()
    }

    /// For finite rings this is the squarefree-moduli criterion.
    pub fn is_von_neumann_regular(&self) -> bool {
        self.moduli
            .iter()
            .all(|&n| factorize(n).iter().all(|&(_, e)| e == 1))
    }

    /// True when every factor is a prime field `Z_p`.
    pub fn is_split_into_fields(&self) -> bool {
        self.moduli.iter().all(|&n| is_prime(n))
    }

    pub fn is_domain(&self) -> bool {
        self.moduli.len() == 1 && is_prime(self.moduli[0])
    }

    pub fn crt_split(&self) -> CrtSplit {
        CrtSplit::new(self)
    }

    /// Number of minimal primes, i.e. the number of fields in the product
    /// decomposition of a von Neumann regular ring.
    pub fn min_prime_count(&self) -> Result<usize> {
        if !self.is_von_neumann_regular() {
            return Err(Error::NotVonNeumannRegular(self.to_string()));
        }
        Ok(self.crt_split().split().factor_count())
    }

    pub fn associate_classes(&self) -> AssociateClasses {
        AssociateClasses::new(self)
    }

    pub fn is_idempotent(&self, a: &RingElement) -> bool {
        &self.mul(a, a) == a
    }
}
