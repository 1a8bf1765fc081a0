//! Trivial rings, direct products and wedge products, plus wedge
//! decomposition and wedge cores.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{AlgebraError, GroupSubset};
use crate::partition::{gcd, SchurPartition};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("section [{k},{h}] is invalid: need 1 < k, k | h, h | n and h < n for n = {n}")]
    InvalidSection { k: u32, h: u32, n: u32 },
    #[error("factors Z_{0} and Z_{1} are not coprime")]
    NotCoprime(u32, u32),
    #[error("left factor lives on Z_{got}, expected Z_{expected}")]
    WrongModulus { expected: u32, got: u32 },
    #[error("wedge over [{k},{h}] is incompatible: {reason}")]
    Incompatible { k: u32, h: u32, reason: String },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// A section `[Z_k, Z_h]` of `Z_n`, written `[k, h]` with `k | h`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Section {
    pub k: u32,
    pub h: u32,
}

impl Section {
    /// A proper section of `Z_n`: `1 < k <= h < n` with `k | h | n`.
    pub fn new(k: u32, h: u32, n: u32) -> Result<Self, ConstructionError> {
        let ok = k > 1 && h < n && h.is_multiple_of(k) && n.is_multiple_of(h);
        if ok {
            Ok(Self { k, h })
        } else {
            Err(ConstructionError::InvalidSection { k, h, n })
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.k == self.h
    }

    /// All proper sections of `Z_n`, ordered by `k` then `h`.
    pub fn all_proper(n: u32) -> Vec<Self> {
        let mut out = Vec::new();
        for k in 2..n {
            if !n.is_multiple_of(k) {
                continue;
            }
            for h in (k..n).step_by(k as usize) {
                if n.is_multiple_of(h) {
                    out.push(Self { k, h });
                }
            }
        }
        out
    }
}

impl fmt::Display for Section {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.k, self.h)
    }
}

/// `G^0`: the classes `{0}` and `Z_n \ {0}`.
pub fn trivial_ring(n: u32) -> SchurPartition {
    let classes = if n > 1 {
        vec![vec![0], (1..n).collect()]
    } else {
        vec![vec![0]]
    };
    SchurPartition::new(n, classes).expect("valid partition")
}

/// `S x T` over `Z_{hk}` for coprime `h, k`.
///
/// `Z_{hk}` is the internal direct sum of its subgroups of orders `h` and `k`,
/// so every residue is uniquely `k a + h b` with `a` in `Z_h` and `b` in
/// `Z_k`. The class for `(C, D)` is `{ k a + h b : a in C, b in D }`, which
/// makes the restrictions to orders `h` and `k` equal to `S` and `T`.
pub fn direct_product(
    s: &SchurPartition,
    t: &SchurPartition,
) -> Result<SchurPartition, ConstructionError> {
    let (h, k) = (s.modulus(), t.modulus());
    if gcd(h, k) != 1 {
        return Err(ConstructionError::NotCoprime(h, k));
    }
    let n = h * k;
    let mut classes = Vec::with_capacity(s.rank() * t.rank());
    for c in s.classes() {
        for d in t.classes() {
            let members = c
                .iter()
                .flat_map(|a| d.iter().map(move |b| (k * a + h * b) % n));
            classes.push(GroupSubset::from_residues(n, members));
        }
    }
    Ok(SchurPartition::from_subsets(n, classes)?)
}

/// `S ∧_U T` over `Z_n` for the section `U = [k, h]`, with `S` over `Z_h` and
/// `T` over `Z_{n/k}`.
///
/// Classes inside the order-`h` subgroup come from `S`; the remaining classes
/// are preimages of the classes of `T` outside its order-`h/k` subgroup under
/// `x -> x mod (n/k)`. Requires `quotient(S, k) == restrict(T, h/k)`.
pub fn wedge_product(
    s: &SchurPartition,
    t: &SchurPartition,
    section: Section,
    n: u32,
) -> Result<SchurPartition, ConstructionError> {
    let Section { k, h } = Section::new(section.k, section.h, n)?;
    if s.modulus() != h {
        return Err(ConstructionError::WrongModulus {
            expected: h,
            got: s.modulus(),
        });
    }
    let m = n / k;
    if t.modulus() != m {
        return Err(ConstructionError::WrongModulus {
            expected: m,
            got: t.modulus(),
        });
    }
    let incompatible = |reason: String| ConstructionError::Incompatible { k, h, reason };
    let top = s
        .quotient(k)
        .map_err(|e| incompatible(format!("left factor: {e}")))?;
    let bottom = t
        .restrict(h / k)
        .map_err(|e| incompatible(format!("right factor: {e}")))?;
    if top != bottom {
        return Err(incompatible(format!("quotient {top} differs from restriction {bottom}")));
    }

    let step = n / h;
    let image_of_h = SchurPartition::subgroup(m, h / k);
    let mut classes: Vec<GroupSubset> = s
        .classes()
        .iter()
        .map(|c| GroupSubset::from_residues(n, c.iter().map(|a| a * step)))
        .collect();
    for d in t.classes().iter().filter(|d| d.is_disjoint(&image_of_h)) {
        let preimage = d.iter().flat_map(|y| (0..k).map(move |i| y + i * m));
        classes.push(GroupSubset::from_residues(n, preimage));
    }
    let wedge = SchurPartition::from_subsets(n, classes)?;
    debug_assert_eq!(wedge, common_refinement(s, t, Section { k, h }, n));
    Ok(wedge)
}

/// Common refinement of `D(S) ∪ {Z_n \ H}` with the preimage of `D(T)`.
/// Under compatibility it agrees with the union construction above.
pub fn common_refinement(s: &SchurPartition, t: &SchurPartition, section: Section, n: u32) -> SchurPartition {
    let Section { h, k } = section;
    let (step, m) = (n / h, n / k);
    let s_labels = s.labels();
    let t_labels = t.labels();
    let keys: Vec<(usize, usize)> = (0..n)
        .map(|x| {
            let upper = if x % step == 0 {
                s_labels[(x / step) as usize]
            } else {
                usize::MAX
            };
            (upper, t_labels[(x % m) as usize])
        })
        .collect();
    let mut distinct = keys.clone();
    distinct.sort_unstable();
    distinct.dedup();
    let labels: Vec<usize> = keys
        .iter()
        .map(|key| distinct.binary_search(key).expect("present"))
        .collect();
    SchurPartition::from_labels(&labels)
}

/// Whether every class outside the order-`h` subgroup is a union of cosets of
/// the order-`k` subgroup.
fn splits_over(p: &SchurPartition, section: Section) -> bool {
    let n = p.modulus();
    let upper = SchurPartition::subgroup(n, section.h);
    let shift = n / section.k;
    p.classes()
        .iter()
        .filter(|c| c.is_disjoint(&upper))
        .all(|c| c.shift(shift) == *c)
}

/// All proper sections over which `p` splits as a wedge product, ordered by
/// `k` then `h`.
pub fn decomposing_sections(p: &SchurPartition) -> Vec<Section> {
    let n = p.modulus();
    let subs = p.s_subgroups();
    Section::all_proper(n)
        .into_iter()
        .filter(|u| subs.contains(&u.k) && subs.contains(&u.h) && splits_over(p, *u))
        .collect()
}

/// A proper section exhibiting `p` as a wedge product, if any; the one with
/// least `k`, then least `h`.
pub fn is_wedge_decomposable(p: &SchurPartition) -> Option<Section> {
    decomposing_sections(p).into_iter().next()
}

/// The wedge core of a ring, in the coordinates of `Z_order`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WedgeCore {
    pub core: SchurPartition,
    pub order: u32,
}

/// Descends through wedge decompositions until an indecomposable subring
/// remains. At each step the section with the least `k` is used, and for
/// that `k` the least `h`.
pub fn wedge_core(p: &SchurPartition) -> WedgeCore {
    let mut current = p.clone();
    while let Some(Section { h, .. }) = is_wedge_decomposable(&current) {
        current = current.restrict(h).expect("h is an S-subgroup");
    }
    WedgeCore {
        order: current.modulus(),
        core: current,
    }
}
