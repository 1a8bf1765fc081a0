//! The unit group `(Z/nZ)^x = Aut(Z_n)`, its subgroups, and the automorphic
//! Schur rings they induce.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::formulas::{self, FormulaError};
use crate::partition::{gcd, SchurPartition};

pub use crate::formulas::lattice_count_prime_power_pair;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AutError {
    #[error("modulus must be positive")]
    ZeroModulus,
    #[error("the {prime}-primary part of Aut(Z_{n}) has rank {rank} > 2")]
    RankTooLarge { n: u64, prime: u64, rank: usize },
    #[error(transparent)]
    Formula(#[from] FormulaError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitGroup {
    n: u32,
    units: Vec<u32>,
}

impl UnitGroup {
    pub fn modulus(&self) -> u32 {
        self.n
    }

    pub fn units(&self) -> &[u32] {
        &self.units
    }

    pub fn order(&self) -> usize {
        self.units.len()
    }
}

/// A subgroup of `(Z/nZ)^x`, elements sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct UnitSubgroup {
    n: u32,
    elements: Vec<u32>,
}

impl UnitSubgroup {
    /// The subgroup generated by `gens`.
    pub fn generated(n: u32, gens: &[u32]) -> Self {
        let mut elements = BTreeSet::from([1 % n]);
        let mut frontier = vec![1 % n];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = mul(n, x, g);
                if elements.insert(y) {
                    frontier.push(y);
                }
            }
        }
        Self {
            n,
            elements: elements.into_iter().collect(),
        }
    }

    pub fn modulus(&self) -> u32 {
        self.n
    }

    pub fn elements(&self) -> &[u32] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, u: u32) -> bool {
        self.elements.binary_search(&u).is_ok()
    }

    pub fn is_subgroup_of(&self, other: &Self) -> bool {
        self.elements.iter().all(|&u| other.contains(u))
    }

    /// `HK = { hk }`, the join in an abelian group.
    fn join(&self, other: &Self) -> Self {
        let set: BTreeSet<u32> = self
            .elements
            .iter()
            .flat_map(|&a| other.elements.iter().map(move |&b| mul(self.n, a, b)))
            .collect();
        Self {
            n: self.n,
            elements: set.into_iter().collect(),
        }
    }
}

fn mul(n: u32, a: u32, b: u32) -> u32 {
    (u64::from(a) * u64::from(b) % u64::from(n)) as u32
}

/// Residues in `[1, n)` coprime to `n`; for `n = 1` the trivial group `{0}`.
pub fn unit_group(n: u32) -> Result<UnitGroup, AutError> {
    if n == 0 {
        return Err(AutError::ZeroModulus);
    }
    let units = if n == 1 {
        vec![0]
    } else {
        (1..n).filter(|&u| gcd(u, n) == 1).collect()
    };
    Ok(UnitGroup { n, units })
}

/// Every subgroup exactly once, ordered by size then element list.
///
/// Starts from the cyclic subgroups and closes the family under pairwise
/// joins until it stops growing.
pub fn all_subgroups(group: &UnitGroup) -> Vec<UnitSubgroup> {
    let n = group.n;
    let mut found: BTreeSet<UnitSubgroup> = group
        .units
        .iter()
        .map(|&u| UnitSubgroup::generated(n, &[u]))
        .collect();
    let mut frontier: Vec<UnitSubgroup> = found.iter().cloned().collect();
    while !frontier.is_empty() {
        let current: Vec<UnitSubgroup> = found.iter().cloned().collect();
        let mut next = Vec::new();
        for a in &frontier {
            for b in &current {
                let j = a.join(b);
                if !found.contains(&j) {
                    found.insert(j.clone());
                    next.push(j);
                }
            }
        }
        frontier = next;
    }
    let mut out: Vec<UnitSubgroup> = found.into_iter().collect();
    out.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.elements.cmp(&b.elements)));
    out
}

/// Orbits of `Z_n` under `x -> u x` for `u` in the subgroup.
pub fn orbit_partition(h: &UnitSubgroup) -> SchurPartition {
    let n = h.n;
    let mut labels = vec![usize::MAX; n as usize];
    let mut next = 0;
    for x in 0..n {
        if labels[x as usize] != usize::MAX {
            continue;
        }
        for &u in &h.elements {
            labels[mul(n, u, x) as usize] = next;
        }
        next += 1;
    }
    SchurPartition::from_labels(&labels)
}

/// The automorphic rings over `Z_n`, one per subgroup of `Aut(Z_n)`, in
/// subgroup order.
pub fn automorphic_rings(n: u32) -> Result<Vec<SchurPartition>, AutError> {
    let group = unit_group(n)?;
    Ok(all_subgroups(&group).iter().map(orbit_partition).collect())
}

/// Orders of the cyclic factors of `Aut(Z_n)`, from `Aut(Z_n) = prod
/// Aut(Z_{p^e})` with `Aut(Z_{p^e})` cyclic of order `(p-1)p^(e-1)` for odd
/// `p`, `Aut(Z_4) = Z_2` and `Aut(Z_{2^e}) = Z_2 x Z_{2^(e-2)}` for `e >= 3`.
pub fn aut_cyclic_factors(n: u64) -> Result<Vec<u64>, AutError> {
    let mut out = Vec::new();
    for (p, e) in formulas::factorize(n)? {
        match (p, e) {
            (2, 1) => {}
            (2, 2) => out.push(2),
            (2, e) => {
                out.push(2);
                out.push(1 << (e - 2));
            }
            (p, e) => out.push((p - 1) * p.pow(e - 1)),
        }
    }
    Ok(out)
}

/// `|L(Aut(Z_n))|` as a product over primes `r` of the lattice count of the
/// `r`-primary component, provided each component has rank at most 2.
pub fn aut_lattice_count(n: u64) -> Result<u64, AutError> {
    let mut by_prime: Vec<(u64, Vec<u32>)> = Vec::new();
    for m in aut_cyclic_factors(n)? {
        for (r, e) in formulas::factorize(m)? {
            match by_prime.iter_mut().find(|(s, _)| *s == r) {
                Some((_, es)) => es.push(e),
                None => by_prime.push((r, vec![e])),
            }
        }
    }
    let mut total = 1u64;
    for (r, es) in by_prime {
        let count = match es.as_slice() {
            [k] => lattice_count_prime_power_pair(r, *k, 0)?,
            [k, l] => lattice_count_prime_power_pair(r, *k, *l)?,
            _ => {
                return Err(AutError::RankTooLarge {
                    n,
                    prime: r,
                    rank: es.len(),
                })
            }
        };
        total = total.checked_mul(count).ok_or(FormulaError::Overflow)?;
    }
    Ok(total)
}
