//! Partitions of `Z_n` and the Schur-ring axioms.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{multiply, AlgebraError, GroupSubset};

/// An ordered partition of `Z_n` into classes.
///
/// Classes are kept in canonical order: members ascending within a class and
/// classes sorted by their minimum element. Two partitions are equal exactly
/// when they have the same set of classes.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "PartitionRepr", into = "PartitionRepr")]
pub struct SchurPartition {
    n: u32,
    classes: Vec<GroupSubset>,
}

/// JSON shape: `{"n": 4, "classes": [[0], [1, 3], [2]]}`.
#[derive(Serialize, Deserialize)]
struct PartitionRepr {
    n: u32,
    classes: Vec<Vec<u32>>,
}

impl TryFrom<PartitionRepr> for SchurPartition {
    type Error = AlgebraError;

    fn try_from(r: PartitionRepr) -> Result<Self, Self::Error> {
        SchurPartition::new(r.n, r.classes)
    }
}

impl From<SchurPartition> for PartitionRepr {
    fn from(p: SchurPartition) -> Self {
        PartitionRepr {
            n: p.n,
            classes: p.class_lists(),
        }
    }
}

/// The first Schur-ring axiom a partition violates.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AxiomViolation {
    #[error("axiom 1: {{0}} is not a class (its class is {class})")]
    Identity { class: GroupSubset },
    #[error("axiom 2: star of class {class} is {star}, which is not a class")]
    Star { class: GroupSubset, star: GroupSubset },
    #[error(
        "axiom 3: product of {left} and {right} has coefficient {first_coeff} at {first} \
         but {second_coeff} at {second}, both in class {class}"
    )]
    Closure {
        left: GroupSubset,
        right: GroupSubset,
        class: GroupSubset,
        first: u32,
        first_coeff: u64,
        second: u32,
        second_coeff: u64,
    },
}

impl SchurPartition {
    /// Validates that `classes` is a partition of `Z_n` and stores it in
    /// canonical order. The axioms are not checked here.
    pub fn new(n: u32, classes: impl IntoIterator<Item = Vec<u32>>) -> Result<Self, AlgebraError> {
        let subsets = classes
            .into_iter()
            .map(|c| GroupSubset::new(n, c))
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_subsets(n, subsets)
    }

    pub fn from_subsets(n: u32, classes: Vec<GroupSubset>) -> Result<Self, AlgebraError> {
        if n == 0 {
            return Err(AlgebraError::ZeroModulus);
        }
        let mut seen = GroupSubset::empty(n);
        for c in &classes {
            if c.modulus() != n {
                return Err(AlgebraError::ModulusMismatch {
                    left: n,
                    right: c.modulus(),
                });
            }
            if c.is_empty() {
                return Err(AlgebraError::EmptyClass);
            }
            if !c.is_disjoint(&seen) {
                let x = c.intersection(&seen).min_member().expect("nonempty overlap");
                return Err(AlgebraError::Duplicate(x));
            }
            seen.union_with(c);
        }
        if let Some(x) = (0..n).find(|&x| !seen.contains(x)) {
            return Err(AlgebraError::NotCovering(x));
        }
        Ok(Self::canonical(n, classes))
    }

    /// Builds a partition from a class label per residue.
    pub fn from_labels(labels: &[usize]) -> Self {
        let n = labels.len() as u32;
        let count = labels.iter().max().map_or(0, |m| m + 1);
        let mut classes = vec![GroupSubset::empty(n); count];
        for (x, &l) in labels.iter().enumerate() {
            classes[l].insert(x as u32);
        }
        classes.retain(|c| !c.is_empty());
        Self::canonical(n, classes)
    }

    fn canonical(n: u32, mut classes: Vec<GroupSubset>) -> Self {
        classes.sort_by_key(|c| c.min_member());
        Self { n, classes }
    }

    /// The discrete partition into singletons (the group ring itself).
    pub fn discrete(n: u32) -> Self {
        Self {
            n,
            classes: (0..n).map(|x| GroupSubset::singleton(n, x)).collect(),
        }
    }

    pub fn modulus(&self) -> u32 {
        self.n
    }

    pub fn classes(&self) -> &[GroupSubset] {
        &self.classes
    }

    pub fn rank(&self) -> usize {
        self.classes.len()
    }

    pub fn class_lists(&self) -> Vec<Vec<u32>> {
        self.classes.iter().map(GroupSubset::to_vec).collect()
    }

    /// Class index of every residue.
    pub fn labels(&self) -> Vec<usize> {
        let mut labels = vec![0; self.n as usize];
        for (i, c) in self.classes.iter().enumerate() {
            for x in c.iter() {
                labels[x as usize] = i;
            }
        }
        labels
    }

    pub fn class_of(&self, x: u32) -> &GroupSubset {
        self.classes
            .iter()
            .find(|c| c.contains(x))
            .expect("partition covers Z_n")
    }

    /// Checks the three axioms, reporting the first violation in class order.
    pub fn check_axioms(&self) -> Result<(), AxiomViolation> {
        let zero = &self.classes[0];
        if zero.len() != 1 {
            return Err(AxiomViolation::Identity { class: zero.clone() });
        }
        let set: BTreeSet<&GroupSubset> = self.classes.iter().collect();
        for c in &self.classes {
            let star = c.star();
            if !set.contains(&star) {
                return Err(AxiomViolation::Star {
                    class: c.clone(),
                    star,
                });
            }
        }
        for (i, left) in self.classes.iter().enumerate() {
            for right in &self.classes[i..] {
                let product = multiply(left, right).expect("same modulus");
                for class in &self.classes {
                    if let Some((first, second)) = product.nonconstant_on(class) {
                        return Err(AxiomViolation::Closure {
                            left: left.clone(),
                            right: right.clone(),
                            class: class.clone(),
                            first,
                            first_coeff: product.coeff(first),
                            second,
                            second_coeff: product.coeff(second),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_schur_ring(&self) -> bool {
        self.check_axioms().is_ok()
    }

    /// The subgroup of order `d`, i.e. the multiples of `n/d`.
    pub fn subgroup(n: u32, d: u32) -> GroupSubset {
        let step = n / d;
        GroupSubset::from_residues(n, (0..d).map(|i| i * step))
    }

    /// Whether the subgroup of order `d` is a union of classes.
    pub fn is_s_subgroup(&self, d: u32) -> bool {
        if d == 0 || !self.n.is_multiple_of(d) {
            return false;
        }
        let h = Self::subgroup(self.n, d);
        self.classes
            .iter()
            .all(|c| c.is_subset(&h) || c.is_disjoint(&h))
    }

    /// Orders of all subgroups that are unions of classes, ascending.
    pub fn s_subgroups(&self) -> Vec<u32> {
        divisors(self.n)
            .into_iter()
            .filter(|&d| self.is_s_subgroup(d))
            .collect()
    }

    /// The restriction to the subgroup of order `d`, transported to `Z_d` via
    /// `x -> x / (n/d)`.
    pub fn restrict(&self, d: u32) -> Result<Self, AlgebraError> {
        if d == 0 || !self.n.is_multiple_of(d) {
            return Err(AlgebraError::NotDivisor { d, n: self.n });
        }
        if !self.is_s_subgroup(d) {
            return Err(AlgebraError::NotSubgroup { d });
        }
        let step = self.n / d;
        let h = Self::subgroup(self.n, d);
        let classes = self
            .classes
            .iter()
            .filter(|c| c.is_subset(&h))
            .map(|c| GroupSubset::from_residues(d, c.iter().map(|x| x / step)))
            .collect();
        Ok(Self::canonical(d, classes))
    }

    /// The image under `Z_n -> Z_{n/k}`, `x -> x mod (n/k)`, where `k` is the
    /// order of the kernel.
    pub fn quotient(&self, k: u32) -> Result<Self, AlgebraError> {
        if k == 0 || !self.n.is_multiple_of(k) {
            return Err(AlgebraError::NotDivisor { d: k, n: self.n });
        }
        if !self.is_s_subgroup(k) {
            return Err(AlgebraError::NotSubgroup { d: k });
        }
        let m = self.n / k;
        let mut images: Vec<GroupSubset> = Vec::new();
        for c in &self.classes {
            let img = GroupSubset::from_residues(m, c.iter());
            match images.iter().find(|i| !i.is_disjoint(&img)) {
                Some(i) if *i == img => {}
                Some(_) => return Err(AlgebraError::InconsistentQuotient { k }),
                None => images.push(img),
            }
        }
        Ok(Self::canonical(m, images))
    }

    /// Whether every class of `self` lies inside a class of `coarser`.
    pub fn refines(&self, coarser: &Self) -> bool {
        self.n == coarser.n
            && self
                .classes
                .iter()
                .all(|c| coarser.classes.iter().any(|d| c.is_subset(d)))
    }

    /// Injective byte encoding of the canonical form: `n`, the class count,
    /// then each class as its length followed by its members, all as
    /// little-endian `u32`.
    pub fn encode(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(8 + 4 * (self.n as usize + self.classes.len()));
        out.extend_from_slice(&self.n.to_le_bytes());
        out.extend_from_slice(&(self.classes.len() as u32).to_le_bytes());
        for c in &self.classes {
            out.extend_from_slice(&(c.len() as u32).to_le_bytes());
            for x in c.iter() {
                out.extend_from_slice(&x.to_le_bytes());
            }
        }
        out
    }

    pub fn decode(bytes: &[u8]) -> Result<Self, AlgebraError> {
        let mut words = bytes.chunks(4).map(|w| {
            <[u8; 4]>::try_from(w)
                .map(u32::from_le_bytes)
                .map_err(|_| AlgebraError::Decode("length is not a multiple of 4"))
        });
        let mut next = || words.next().unwrap_or(Err(AlgebraError::Decode("truncated")));
        let n = next()?;
        let count = next()?;
        let mut classes = Vec::with_capacity(count.min(n) as usize);
        for _ in 0..count {
            let len = next()?;
            let members = (0..len).map(|_| next()).collect::<Result<Vec<_>, _>>()?;
            classes.push(members);
        }
        if next().is_ok() {
            return Err(AlgebraError::Decode("trailing data"));
        }
        let p = Self::new(n, classes)?;
        if p.encode() != bytes {
            return Err(AlgebraError::Decode("not in canonical order"));
        }
        Ok(p)
    }
}

impl Ord for SchurPartition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then_with(|| self.classes.cmp(&other.classes))
    }
}

impl PartialOrd for SchurPartition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for SchurPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z_{}:{self}", self.n)
    }
}

/// Brace-list rendering, e.g. `{0} {1,3} {2}`.
impl fmt::Display for SchurPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.classes.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Positive divisors of `n`, ascending.
pub fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

pub(crate) fn gcd(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(n: u32, classes: &[&[u32]]) -> SchurPartition {
        SchurPartition::new(n, classes.iter().map(|c| c.to_vec())).unwrap()
    }

    #[test]
    fn canonical_order_is_enforced() {
        let p = part(4, &[&[3, 1], &[2], &[0]]);
        assert_eq!(p.class_lists(), vec![vec![0], vec![1, 3], vec![2]]);
    }

    #[test]
    fn malformed_partitions_are_rejected() {
        assert_eq!(
            SchurPartition::new(4, vec![vec![0, 1], vec![1, 2, 3]]).unwrap_err(),
            AlgebraError::Duplicate(1)
        );
        assert_eq!(
            SchurPartition::new(4, vec![vec![0], vec![1, 2]]).unwrap_err(),
            AlgebraError::NotCovering(3)
        );
        assert_eq!(
            SchurPartition::new(4, vec![vec![0], vec![], vec![1, 2, 3]]).unwrap_err(),
            AlgebraError::EmptyClass
        );
    }

    #[test]
    fn axiom_examples() {
        assert!(part(4, &[&[0], &[2], &[1, 3]]).is_schur_ring());
        assert!(part(6, &[&[0], &[1, 2, 3, 4, 5]]).is_schur_ring());

        let err = part(4, &[&[0], &[1], &[2, 3]]).check_axioms().unwrap_err();
        match err {
            AxiomViolation::Star { class, star } => {
                assert_eq!(class.to_vec(), vec![1]);
                assert_eq!(star.to_vec(), vec![3]);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn identity_axiom_is_checked_first() {
        let err = part(4, &[&[0, 2], &[1], &[3]]).check_axioms().unwrap_err();
        assert!(matches!(err, AxiomViolation::Identity { .. }));
    }

    #[test]
    fn closure_violation_witness() {
        // {1,5}^2 = 2*0 + 2 + 4, which is not constant on {2,3,4}.
        let p = part(6, &[&[0], &[1, 5], &[2, 3, 4]]);
        match p.check_axioms().unwrap_err() {
            AxiomViolation::Closure {
                first_coeff,
                second_coeff,
                ..
            } => assert_ne!(first_coeff, second_coeff),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn s_subgroups_of_extremes() {
        assert_eq!(part(6, &[&[0], &[1, 2, 3, 4, 5]]).s_subgroups(), vec![1, 6]);
        assert_eq!(SchurPartition::discrete(6).s_subgroups(), vec![1, 2, 3, 6]);
    }

    #[test]
    fn restrict_and_quotient_basics() {
        let d6 = SchurPartition::discrete(6);
        assert_eq!(d6.restrict(1).unwrap(), SchurPartition::discrete(1));
        assert_eq!(d6.quotient(1).unwrap(), d6);
        assert_eq!(d6.quotient(2).unwrap(), SchurPartition::discrete(3));

        let trivial = part(6, &[&[0], &[1, 2, 3, 4, 5]]);
        assert_eq!(trivial.restrict(2).unwrap_err(), AlgebraError::NotSubgroup { d: 2 });
        assert_eq!(trivial.quotient(3).unwrap_err(), AlgebraError::NotSubgroup { d: 3 });
        assert_eq!(trivial.restrict(4).unwrap_err(), AlgebraError::NotDivisor { d: 4, n: 6 });
    }

    #[test]
    fn encode_decode_round_trip() {
        let p = part(6, &[&[0], &[3], &[2, 4], &[1, 5]]);
        assert_eq!(SchurPartition::decode(&p.encode()).unwrap(), p);
        assert!(SchurPartition::decode(&p.encode()[..10]).is_err());
    }

    #[test]
    fn json_shape() {
        let p = part(4, &[&[0], &[2], &[1, 3]]);
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, r#"{"n":4,"classes":[[0],[1,3],[2]]}"#);
        let back: SchurPartition = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
        assert!(serde_json::from_str::<SchurPartition>(r#"{"n":4,"classes":[[0],[1]]}"#).is_err());
    }
}
