//! Brute-force verifiers that share no code path with the constructive
//! enumerator: exhaustive Schur-partition search for small `n`, and exhaustive
//! subgroup enumeration in `Z_{r^k} x Z_{r^l}`.

use std::collections::BTreeSet;

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use thiserror::Error;

use crate::partition::SchurPartition;

/// Default bound on `n` for the partition search.
pub const DEFAULT_LIMIT: u32 = 14;
/// Absolute bound on `n`; classes are stored as `u32` masks.
pub const HARD_LIMIT: u32 = 20;
/// Bound on `|Z_{r^k} x Z_{r^l}|` for subgroup enumeration.
pub const MAX_GROUP_ORDER: u64 = 1024;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("n = {n} exceeds the oracle limit {limit}")]
    LimitExceeded { n: u32, limit: u32 },
    #[error("n must be positive")]
    ZeroModulus,
    #[error("group of order {order} exceeds {MAX_GROUP_ORDER}")]
    GroupTooLarge { order: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    pub limit: u32,
    /// When set, candidate classes are tried in a shuffled order.
    pub shuffle_seed: Option<u64>,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self {
            limit: DEFAULT_LIMIT,
            shuffle_seed: None,
        }
    }
}

/// Every Schur partition of `Z_n`, canonical and sorted.
pub fn brute_force_schur_rings(n: u32, limit: u32) -> Result<Vec<SchurPartition>, OracleError> {
    brute_force_with(
        n,
        OracleConfig {
            limit,
            shuffle_seed: None,
        },
    )
}

pub fn brute_force_with(n: u32, config: OracleConfig) -> Result<Vec<SchurPartition>, OracleError> {
    if n == 0 {
        return Err(OracleError::ZeroModulus);
    }
    let limit = config.limit.min(HARD_LIMIT);
    if n > limit {
        return Err(OracleError::LimitExceeded { n, limit });
    }
    let mut search = Search {
        n,
        full: (1u32 << n) - 1,
        classes: vec![1],
        rng: config.shuffle_seed.map(StdRng::seed_from_u64),
        found: BTreeSet::new(),
    };
    search.descend(1);
    Ok(search.found.into_iter().collect())
}

struct Search {
    n: u32,
    full: u32,
    classes: Vec<u32>,
    rng: Option<StdRng>,
    found: BTreeSet<SchurPartition>,
}

impl Search {
    fn star(&self, c: u32) -> u32 {
        let mut out = 0;
        for x in bits(c) {
            out |= 1 << ((self.n - x) % self.n);
        }
        out
    }

    /// Coefficients of the product of two classes.
    fn product(&self, a: u32, b: u32) -> [u16; HARD_LIMIT as usize] {
        let mut coeffs = [0u16; HARD_LIMIT as usize];
        for x in bits(a) {
            for y in bits(b) {
                coeffs[((x + y) % self.n) as usize] += 1;
            }
        }
        coeffs
    }

    fn constant_on(coeffs: &[u16], class: u32) -> bool {
        let mut it = bits(class);
        let first = coeffs[it.next().expect("nonempty") as usize];
        it.all(|x| coeffs[x as usize] == first)
    }

    /// Axiom 3 restricted to completed classes, given that the last `added`
    /// classes are new: every product involving a new class must be constant
    /// on every completed class, and every old product on every new class.
    fn closed(&self, added: usize) -> bool {
        let split = self.classes.len() - added;
        for i in 0..self.classes.len() {
            for j in i..self.classes.len() {
                let coeffs = self.product(self.classes[i], self.classes[j]);
                let targets = if j >= split { 0 } else { split };
                if !self.classes[targets..]
                    .iter()
                    .all(|&c| Self::constant_on(&coeffs, c))
                {
                    return false;
                }
            }
        }
        true
    }

    fn descend(&mut self, assigned: u32) {
        if assigned == self.full {
            let labels = self.labels();
            let p = SchurPartition::from_labels(&labels);
            debug_assert!(p.is_schur_ring(), "{p:?}");
            self.found.insert(p);
            return;
        }
        let free = self.full & !assigned;
        let x = free.trailing_zeros();
        let rest: Vec<u32> = bits(free & !(1 << x)).collect();
        let mut choices: Vec<u32> = (0u32..1 << rest.len()).collect();
        if let Some(rng) = self.rng.as_mut() {
            choices.shuffle(rng);
        }
        for choice in choices {
            let mut class = 1 << x;
            for (i, &y) in rest.iter().enumerate() {
                if choice >> i & 1 == 1 {
                    class |= 1 << y;
                }
            }
            let star = self.star(class);
            let added = if star == class {
                self.classes.push(class);
                1
            } else if star & (class | assigned) == 0 {
                self.classes.push(class);
                self.classes.push(star);
                2
            } else {
                continue;
            };
            if self.closed(added) {
                let now = self.classes[self.classes.len() - added..]
                    .iter()
                    .fold(assigned, |acc, c| acc | c);
                self.descend(now);
            }
            self.classes.truncate(self.classes.len() - added);
        }
    }

    fn labels(&self) -> Vec<usize> {
        let mut labels = vec![0; self.n as usize];
        for (i, &c) in self.classes.iter().enumerate() {
            for x in bits(c) {
                labels[x as usize] = i;
            }
        }
        labels
    }
}

fn bits(mut m: u32) -> impl Iterator<Item = u32> {
    std::iter::from_fn(move || {
        if m == 0 {
            return None;
        }
        let b = m.trailing_zeros();
        m &= m - 1;
        Some(b)
    })
}

/// Number of subgroups of `Z_{r^k} x Z_{r^l}`, counted by enumerating the
/// cyclic subgroups and closing under joins.
pub fn brute_force_subgroup_count(r: u64, k: u32, l: u32) -> Result<u64, OracleError> {
    let a = r.checked_pow(k);
    let b = r.checked_pow(l);
    let (a, b) = match (a, b) {
        (Some(a), Some(b)) if a.saturating_mul(b) <= MAX_GROUP_ORDER => (a as usize, b as usize),
        _ => {
            return Err(OracleError::GroupTooLarge {
                order: a.unwrap_or(u64::MAX).saturating_mul(b.unwrap_or(u64::MAX)),
            })
        }
    };
    let order = a * b;
    let add = |x: usize, y: usize| ((x / b + y / b) % a) * b + (x % b + y % b) % b;

    let cyclic = |g: usize| {
        let mut members = vec![false; order];
        let mut x = 0;
        loop {
            members[x] = true;
            x = add(x, g);
            if x == 0 {
                break;
            }
        }
        members
    };
    // S + T, grown from S one generator of T at a time.
    let join = |s: &[bool], t: &[bool]| {
        let mut members = s.to_vec();
        let mut list: Vec<usize> = (0..order).filter(|&i| s[i]).collect();
        for g in (0..order).filter(|&i| t[i]) {
            if members[g] {
                continue;
            }
            let mut frontier = list.clone();
            while !frontier.is_empty() {
                let mut next = Vec::new();
                for &x in &frontier {
                    let y = add(x, g);
                    if !members[y] {
                        members[y] = true;
                        next.push(y);
                    }
                }
                list.extend_from_slice(&next);
                frontier = next;
            }
        }
        members
    };

    let mut found: BTreeSet<Vec<bool>> = (0..order).map(cyclic).collect();
    let mut frontier: Vec<Vec<bool>> = found.iter().cloned().collect();
    while !frontier.is_empty() {
        let current: Vec<Vec<bool>> = found.iter().cloned().collect();
        let mut next = Vec::new();
        for s in &frontier {
            for t in &current {
                let j = join(s, t);
                if found.insert(j.clone()) {
                    next.push(j);
                }
            }
        }
        frontier = next;
    }
    Ok(found.len() as u64)
}
