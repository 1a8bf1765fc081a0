//! Complete enumeration of Schur rings over `Z_n`.
//!
//! Every Schur ring over a cyclic group is trivial, automorphic, a direct
//! product or a wedge product. The enumerator generates all four families
//! recursively over the divisors of `n` and deduplicates on canonical
//! encodings, so overlaps between families (and between different sections
//! producing the same wedge) need no bookkeeping.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::automorphic::automorphic_rings;
use crate::constructions::{
    direct_product, is_wedge_decomposable, trivial_ring, wedge_core, wedge_product, Section,
};
use crate::partition::{divisors, gcd, SchurPartition};

/// The traditional family a ring was generated from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Trivial,
    Automorphic,
    Direct,
    Wedge,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Trivial => "trivial",
            Family::Automorphic => "automorphic",
            Family::Direct => "direct",
            Family::Wedge => "wedge",
        })
    }
}

/// Rings over one modulus with the families that produced each.
#[derive(Debug, Clone)]
struct Generated {
    rings: Vec<SchurPartition>,
    tags: Vec<BTreeSet<Family>>,
}

/// Census entry: how many rings have the given wedge core.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoreCount {
    pub core: SchurPartition,
    pub order: u32,
    pub count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationResult {
    pub n: u32,
    pub omega: usize,
    /// Canonically sorted, pairwise distinct.
    pub rings: Vec<SchurPartition>,
    /// Families per ring, parallel to `rings`.
    pub tags: Vec<BTreeSet<Family>>,
    /// Sorted by order, then core.
    pub core_census: Vec<CoreCount>,
}

impl EnumerationResult {
    /// Number of rings carrying `family`.
    pub fn count_tagged(&self, family: Family) -> usize {
        self.tags.iter().filter(|t| t.contains(&family)).count()
    }

    /// Census totals per core order.
    pub fn census_by_order(&self) -> BTreeMap<u32, usize> {
        let mut out = BTreeMap::new();
        for c in &self.core_census {
            *out.entry(c.order).or_default() += c.count;
        }
        out
    }

    pub fn contains(&self, p: &SchurPartition) -> bool {
        self.rings.binary_search(p).is_ok()
    }
}

/// Memoizing enumerator; reuse one instance across moduli to share the
/// recursive work.
#[derive(Debug, Default)]
pub struct Enumerator {
    memo: HashMap<u32, Arc<Generated>>,
}

impl Enumerator {
    pub fn new() -> Self {
        Self::default()
    }

    /// All Schur rings over `Z_n`, canonically sorted.
    pub fn rings(&mut self, n: u32) -> Vec<SchurPartition> {
        self.generate(n).rings.clone()
    }

    pub fn omega(&mut self, n: u32) -> usize {
        self.generate(n).rings.len()
    }

    pub fn enumerate(&mut self, n: u32) -> EnumerationResult {
        let generated = self.generate(n);
        let mut census: BTreeMap<(u32, SchurPartition), usize> = BTreeMap::new();
        for ring in &generated.rings {
            let core = wedge_core(ring);
            *census.entry((core.order, core.core)).or_default() += 1;
        }
        EnumerationResult {
            n,
            omega: generated.rings.len(),
            rings: generated.rings.clone(),
            tags: generated.tags.clone(),
            core_census: census
                .into_iter()
                .map(|((order, core), count)| CoreCount { core, order, count })
                .collect(),
        }
    }

    fn generate(&mut self, n: u32) -> Arc<Generated> {
        assert!(n > 0, "modulus must be positive");
        if let Some(g) = self.memo.get(&n) {
            return Arc::clone(g);
        }
        let mut found: BTreeMap<Vec<u8>, (SchurPartition, BTreeSet<Family>)> = BTreeMap::new();
        let mut add = |p: SchurPartition, family: Family| {
            found
                .entry(p.encode())
                .or_insert_with(|| (p, BTreeSet::new()))
                .1
                .insert(family);
        };

        add(trivial_ring(n), Family::Trivial);
        for p in automorphic_rings(n).expect("n is positive") {
            add(p, Family::Automorphic);
        }

        let divs = divisors(n);
        for &h in divs.iter().filter(|&&h| h > 1 && h * h < n) {
            let k = n / h;
            if gcd(h, k) != 1 {
                continue;
            }
            let left = self.generate(h);
            let right = self.generate(k);
            for s in &left.rings {
                for t in &right.rings {
                    add(direct_product(s, t).expect("coprime"), Family::Direct);
                }
            }
        }

        for section in Section::all_proper(n) {
            let Section { k, h } = section;
            let upper = self.generate(h);
            let lower = self.generate(n / k);
            // Join on the shared middle ring quotient(S, k) == restrict(T, h/k).
            let mut by_middle: HashMap<SchurPartition, Vec<&SchurPartition>> = HashMap::new();
            for s in &upper.rings {
                if let Ok(mid) = s.quotient(k) {
                    by_middle.entry(mid).or_default().push(s);
                }
            }
            for t in &lower.rings {
                let Ok(mid) = t.restrict(h / k) else { continue };
                for s in by_middle.get(&mid).into_iter().flatten() {
                    add(wedge_product(s, t, section, n).expect("compatible"), Family::Wedge);
                }
            }
        }

        let mut pairs: Vec<_> = found.into_values().collect();
        pairs.sort_by(|a, b| a.0.cmp(&b.0));
        let (rings, tags) = pairs.into_iter().unzip();
        let g = Arc::new(Generated { rings, tags });
        self.memo.insert(n, Arc::clone(&g));
        g
    }
}

pub fn enumerate(n: u32) -> EnumerationResult {
    Enumerator::new().enumerate(n)
}

/// `Omega(n)`, the number of Schur rings over `Z_n`.
pub fn omega(n: u32) -> usize {
    Enumerator::new().omega(n)
}

/// Wedge cores of every ring over `Z_n`, with multiplicities.
pub fn core_census(n: u32) -> Vec<CoreCount> {
    enumerate(n).core_census
}

/// Number of rings over `Z_n` that are not wedge products.
pub fn indecomposable_count(n: u32) -> usize {
    Enumerator::new()
        .rings(n)
        .iter()
        .filter(|p| is_wedge_decomposable(p).is_none())
        .count()
}
