//! Exact arithmetic in the integer group ring of the cyclic group `Z_n`.
//!
//! The group is written additively: the residue `i` stands for `z^i`, so the
//! group operation is addition mod `n` and inversion is negation.

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("modulus must be positive")]
    ZeroModulus,
    #[error("modulus mismatch: {left} vs {right}")]
    ModulusMismatch { left: u32, right: u32 },
    #[error("residue {member} is out of range for Z_{n}")]
    OutOfRange { member: u32, n: u32 },
    #[error("residue {0} appears more than once")]
    Duplicate(u32),
    #[error("empty class in partition")]
    EmptyClass,
    #[error("residue {0} is not covered by any class")]
    NotCovering(u32),
    #[error("{d} does not divide {n}")]
    NotDivisor { d: u32, n: u32 },
    #[error("subgroup of order {d} is not a union of classes")]
    NotSubgroup { d: u32 },
    #[error("images of classes modulo the subgroup of order {k} overlap without coinciding")]
    InconsistentQuotient { k: u32 },
    #[error("coefficient overflow")]
    Overflow,
    #[error("malformed encoding: {0}")]
    Decode(&'static str),
}

/// A subset of `Z_n`, stored as a bit vector over the residues `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroupSubset {
    n: u32,
    words: Vec<u64>,
}

impl GroupSubset {
    pub fn empty(n: u32) -> Self {
        Self {
            n,
            words: vec![0; (n as usize).div_ceil(64)],
        }
    }

    pub fn full(n: u32) -> Self {
        let mut s = Self::empty(n);
        for x in 0..n {
            s.insert(x);
        }
        s
    }

    pub fn singleton(n: u32, x: u32) -> Self {
        let mut s = Self::empty(n);
        s.insert(x);
        s
    }

    /// Builds a subset from explicit residues, rejecting out-of-range and
    /// repeated members.
    pub fn new(n: u32, members: impl IntoIterator<Item = u32>) -> Result<Self, AlgebraError> {
        if n == 0 {
            return Err(AlgebraError::ZeroModulus);
        }
        let mut s = Self::empty(n);
        for x in members {
            if x >= n {
                return Err(AlgebraError::OutOfRange { member: x, n });
            }
            if !s.insert(x) {
                return Err(AlgebraError::Duplicate(x));
            }
        }
        Ok(s)
    }

    /// Builds a subset by reducing every residue mod `n`; repeats collapse.
    pub fn from_residues(n: u32, members: impl IntoIterator<Item = u32>) -> Self {
        let mut s = Self::empty(n);
        for x in members {
            s.insert(x % n);
        }
        s
    }

    pub fn modulus(&self) -> u32 {
        self.n
    }

    /// Inserts `x`, returning whether it was absent.
    pub fn insert(&mut self, x: u32) -> bool {
        debug_assert!(x < self.n);
        let (w, b) = (x as usize / 64, x % 64);
        let was = self.words[w] >> b & 1 == 1;
        self.words[w] |= 1 << b;
        !was
    }

    pub fn contains(&self, x: u32) -> bool {
        x < self.n && self.words[x as usize / 64] >> (x % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn min_member(&self) -> Option<u32> {
        self.iter().next()
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros();
                w &= w - 1;
                Some(i as u32 * 64 + b)
            })
        })
    }

    pub fn to_vec(&self) -> Vec<u32> {
        self.iter().collect()
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.n == other.n && self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn union_with(&mut self, other: &Self) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        Self {
            n: self.n,
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect(),
        }
    }

    /// The inverse set `C^* = { -x : x in C }`.
    pub fn star(&self) -> Self {
        Self::from_residues(self.n, self.iter().map(|x| (self.n - x) % self.n))
    }

    /// The translate `C + t`.
    pub fn shift(&self, t: u32) -> Self {
        Self::from_residues(self.n, self.iter().map(|x| (x + t) % self.n))
    }

    /// The image under the automorphism `x -> u*x`.
    pub fn scale(&self, u: u32) -> Self {
        let n = u64::from(self.n);
        Self::from_residues(self.n, self.iter().map(|x| (u64::from(x) * u64::from(u) % n) as u32))
    }
}

impl Ord for GroupSubset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n.cmp(&other.n).then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for GroupSubset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for GroupSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for GroupSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, x) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}

/// An element of the group ring with non-negative integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AlgebraElement {
    n: u32,
    coeffs: Vec<u64>,
}

impl AlgebraElement {
    pub fn modulus(&self) -> u32 {
        self.n
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, g: u32) -> u64 {
        self.coeffs[g as usize]
    }

    pub fn total(&self) -> u64 {
        self.coeffs.iter().sum()
    }

    /// The first pair of members of `class` carrying different coefficients.
    pub fn nonconstant_on(&self, class: &GroupSubset) -> Option<(u32, u32)> {
        let mut it = class.iter();
        let first = it.next()?;
        let c = self.coeff(first);
        it.find(|&g| self.coeff(g) != c).map(|g| (first, g))
    }
}

/// Product of simple quantities: `coeffs[g] = #{(c, d) in C x D : c + d = g}`.
pub fn multiply(c: &GroupSubset, d: &GroupSubset) -> Result<AlgebraElement, AlgebraError> {
    if c.n != d.n {
        return Err(AlgebraError::ModulusMismatch { left: c.n, right: d.n });
    }
    let n = c.n;
    let mut coeffs = vec![0u64; n as usize];
    let rhs: Vec<u32> = d.iter().collect();
    for a in c.iter() {
        for &b in &rhs {
            let g = ((a + b) % n) as usize;
            coeffs[g] = coeffs[g].checked_add(1).ok_or(AlgebraError::Overflow)?;
        }
    }
    Ok(AlgebraElement { n, coeffs })
}
