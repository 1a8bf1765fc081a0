//! Elementary number theory and closed-form counts of Schur rings over
//! `Z_p`, `Z_pq` and `Z_4p`.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormulaError {
    #[error("argument must be positive")]
    Zero,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("primes must be distinct, got {0} twice")]
    NotDistinct(u64),
    #[error("{0} is excluded for this formula")]
    Excluded(u64),
    #[error("odd parts {a} and {b} of p-1 and q-1 are not coprime")]
    OddPartsNotCoprime { a: u64, b: u64 },
    #[error("{0} is not of the form p, pq or 4p")]
    Unsupported(u64),
    #[error("arithmetic overflow")]
    Overflow,
}

/// Prime factorization by trial division, as `(prime, exponent)` pairs with
/// ascending primes. `factorize(1)` is empty.
pub fn factorize(mut m: u64) -> Result<Vec<(u64, u32)>, FormulaError> {
    if m == 0 {
        return Err(FormulaError::Zero);
    }
    let mut out = Vec::new();
    let mut r = 2u64;
    while r * r <= m {
        if m.is_multiple_of(r) {
            let mut e = 0;
            while m.is_multiple_of(r) {
                m /= r;
                e += 1;
            }
            out.push((r, e));
        }
        r += if r == 2 { 1 } else { 2 };
    }
    if m > 1 {
        out.push((m, 1));
    }
    Ok(out)
}

pub fn is_prime(m: u64) -> bool {
    matches!(factorize(m).as_deref(), Ok([(_, 1)]))
}

pub fn euler_phi(m: u64) -> Result<u64, FormulaError> {
    Ok(factorize(m)?
        .into_iter()
        .map(|(r, e)| (r - 1) * r.pow(e - 1))
        .product())
}

pub fn divisor_count(m: u64) -> Result<u64, FormulaError> {
    Ok(factorize(m)?.into_iter().map(|(_, e)| u64::from(e) + 1).product())
}

/// Splits `m` as `2^k * a` with `a` odd.
pub fn two_adic(m: u64) -> Result<(u32, u64), FormulaError> {
    if m == 0 {
        return Err(FormulaError::Zero);
    }
    let k = m.trailing_zeros();
    Ok((k, m >> k))
}

fn require_prime(p: u64) -> Result<(), FormulaError> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(FormulaError::NotPrime(p))
    }
}

/// Number of subgroups of `Z_{r^k} x Z_{r^l}`:
/// `sum_{j=0}^{min(k,l)} phi(r^j) (k-j+1) (l-j+1)`.
pub fn lattice_count_prime_power_pair(r: u64, k: u32, l: u32) -> Result<u64, FormulaError> {
    require_prime(r)?;
    (0..=k.min(l)).try_fold(0u64, |acc, j| {
        let phi = euler_phi(r.checked_pow(j).ok_or(FormulaError::Overflow)?)?;
        let term = phi * u64::from(k - j + 1) * u64::from(l - j + 1);
        acc.checked_add(term).ok_or(FormulaError::Overflow)
    })
}

/// `p - 1` and `q - 1` factored over their common prime support.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemiprimeProfile {
    pub p: u64,
    pub q: u64,
    /// `(r_i, k_i, l_i)` with `p = prod r_i^k_i + 1` and `q = prod r_i^l_i + 1`.
    pub factors: Vec<(u64, u32, u32)>,
}

impl SemiprimeProfile {
    pub fn new(p: u64, q: u64) -> Result<Self, FormulaError> {
        require_prime(p)?;
        require_prime(q)?;
        if p == q {
            return Err(FormulaError::NotDistinct(p));
        }
        let fp = factorize(p - 1)?;
        let fq = factorize(q - 1)?;
        let mut primes: Vec<u64> = fp.iter().chain(&fq).map(|&(r, _)| r).collect();
        primes.sort_unstable();
        primes.dedup();
        let exp = |f: &[(u64, u32)], r| f.iter().find(|&&(s, _)| s == r).map_or(0, |&(_, e)| e);
        let factors = primes
            .into_iter()
            .map(|r| (r, exp(&fp, r), exp(&fq, r)))
            .collect();
        Ok(Self { p, q, factors })
    }

    /// `|L(Aut(Z_pq))| = |L(Z_{p-1} x Z_{q-1})|`, one lattice factor per prime.
    pub fn aut_lattice_count(&self) -> u64 {
        self.factors
            .iter()
            .map(|&(r, k, l)| lattice_count_prime_power_pair(r, k, l).expect("r is prime"))
            .product()
    }

    /// `prod (k_i + 1)(l_i + 1)`, the product of the divisor counts of `p-1`
    /// and `q-1`.
    pub fn divisor_product(&self) -> u64 {
        self.factors
            .iter()
            .map(|&(_, k, l)| u64::from(k + 1) * u64::from(l + 1))
            .product()
    }
}

/// `p = 2^k a + 1` with `a` odd, and `x = d(p - 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FourPProfile {
    pub p: u64,
    pub k: u32,
    pub a: u64,
    pub x: u64,
}

impl FourPProfile {
    pub fn new(p: u64) -> Result<Self, FormulaError> {
        require_prime(p)?;
        if p == 2 {
            return Err(FormulaError::Excluded(2));
        }
        let (k, a) = two_adic(p - 1)?;
        let x = divisor_count(p - 1)?;
        debug_assert_eq!(x, u64::from(k + 1) * divisor_count(a)?);
        Ok(Self { p, k, a, x })
    }
}

/// `(num / (k+1)) * x`, asserting the division is exact.
fn scaled(num: u64, k: u32, x: u64) -> u64 {
    let den = u64::from(k) + 1;
    assert_eq!((num * x) % den, 0, "{den} must divide {num}*{x}");
    num * x / den
}

/// `Omega(p) = d(p - 1)`.
pub fn omega_prime(p: u64) -> Result<u64, FormulaError> {
    require_prime(p)?;
    divisor_count(p - 1)
}

/// `Omega(pq) = |L(Aut(Z_pq))| + 2 prod (k_i+1)(l_i+1) + 1`.
pub fn omega_pq(p: u64, q: u64) -> Result<u64, FormulaError> {
    let profile = SemiprimeProfile::new(p, q)?;
    Ok(profile.aut_lattice_count() + 2 * profile.divisor_product() + 1)
}

/// `Omega(2p) = 3x + 1`.
pub fn omega_2p(p: u64) -> Result<u64, FormulaError> {
    require_prime(p)?;
    if p == 2 {
        return Err(FormulaError::Excluded(2));
    }
    Ok(3 * divisor_count(p - 1)? + 1)
}

fn omega_small_times_p(p: u64, excluded: &[u64], num: (u64, u64)) -> Result<u64, FormulaError> {
    require_prime(p)?;
    if excluded.contains(&p) {
        return Err(FormulaError::Excluded(p));
    }
    let (k, _) = two_adic(p - 1)?;
    let x = divisor_count(p - 1)?;
    Ok(scaled(num.0 * u64::from(k) + num.1, k, x) + 1)
}

/// `Omega(3p) = ((7k + 6)/(k + 1)) x + 1`.
pub fn omega_3p(p: u64) -> Result<u64, FormulaError> {
    omega_small_times_p(p, &[3], (7, 6))
}

/// `Omega(5p) = ((13k + 7)/(k + 1)) x + 1` for odd `p`.
pub fn omega_5p(p: u64) -> Result<u64, FormulaError> {
    omega_small_times_p(p, &[2, 5], (13, 7))
}

/// The 2-adic form of `Omega(pq)` for `p = 2^k a + 1`, `q = 2^l b + 1`,
/// `gcd(a, b) = 1`:
///
/// `[3(k+1)(l+1) + sum_{j=1}^{min(k,l)} c_j (k-j+1)(l-j+1)] * xy/((k+1)(l+1)) + 1`
///
/// with `c_j = phi(2^j) = 2^(j-1)`.
pub fn omega_pq_cor2(p: u64, q: u64) -> Result<u64, FormulaError> {
    cor2_with(p, q, |j| 1 << (j - 1))
}

/// The same expression with the coefficient `c_j = 2^j` as printed in the
/// original statement. It disagrees with [`omega_pq`] whenever
/// `min(k, l) >= 1`; kept for diagnostics only.
pub fn omega_pq_cor2_printed(p: u64, q: u64) -> Result<u64, FormulaError> {
    cor2_with(p, q, |j| 1 << j)
}

fn cor2_with(p: u64, q: u64, coeff: impl Fn(u32) -> u64) -> Result<u64, FormulaError> {
    require_prime(p)?;
    require_prime(q)?;
    if p == q {
        return Err(FormulaError::NotDistinct(p));
    }
    let (k, a) = two_adic(p - 1)?;
    let (l, b) = two_adic(q - 1)?;
    if gcd(a, b) != 1 {
        return Err(FormulaError::OddPartsNotCoprime { a, b });
    }
    let (k1, l1) = (u64::from(k) + 1, u64::from(l) + 1);
    let bracket = 3 * k1 * l1
        + (1..=k.min(l))
            .map(|j| coeff(j) * u64::from(k - j + 1) * u64::from(l - j + 1))
            .sum::<u64>();
    let xy = divisor_count(p - 1)? * divisor_count(q - 1)?;
    assert_eq!(xy % (k1 * l1), 0);
    Ok(bracket * (xy / (k1 * l1)) + 1)
}

/// Both readings of the 2-adic formula next to the general one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Cor2Diagnostic {
    pub general: u64,
    pub corrected: u64,
    pub printed: u64,
}

impl Cor2Diagnostic {
    pub fn new(p: u64, q: u64) -> Result<Self, FormulaError> {
        Ok(Self {
            general: omega_pq(p, q)?,
            corrected: omega_pq_cor2(p, q)?,
            printed: omega_pq_cor2_printed(p, q)?,
        })
    }

    pub fn printed_agrees(&self) -> bool {
        self.printed == self.general
    }
}

/// `Omega(4p) = ((15k + 14)/(k + 1)) x + 3`.
pub fn omega_4p(p: u64) -> Result<u64, FormulaError> {
    if p.is_multiple_of(2) {
        return Err(FormulaError::Excluded(p));
    }
    let f = FourPProfile::new(p)?;
    Ok(scaled(15 * u64::from(f.k) + 14, f.k, f.x) + 3)
}

/// Which closed form applies to `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FormulaShape {
    Prime(u64),
    Semiprime(u64, u64),
    FourP(u64),
}

impl FormulaShape {
    pub fn of(n: u64) -> Option<Self> {
        match factorize(n).ok()?.as_slice() {
            [(p, 1)] => Some(Self::Prime(*p)),
            [(p, 1), (q, 1)] => Some(Self::Semiprime(*p, *q)),
            [(2, 2), (p, 1)] => Some(Self::FourP(*p)),
            _ => None,
        }
    }

    pub fn omega(self) -> Result<u64, FormulaError> {
        match self {
            Self::Prime(p) => omega_prime(p),
            Self::Semiprime(p, q) => omega_pq(p, q),
            Self::FourP(p) => omega_4p(p),
        }
    }
}

/// Closed-form `Omega(n)` for `n` prime, semiprime or `4p`.
pub fn omega_formula(n: u64) -> Result<u64, FormulaError> {
    FormulaShape::of(n)
        .ok_or(FormulaError::Unsupported(n))?
        .omega()
}

/// Squarefree products of two distinct primes up to `max`, ascending.
pub fn semiprimes_up_to(max: u64) -> Vec<(u64, u64, u64)> {
    (1..=max)
        .filter_map(|n| match FormulaShape::of(n) {
            Some(FormulaShape::Semiprime(p, q)) => Some((n, p, q)),
            _ => None,
        })
        .collect()
}

/// `(4p, p)` for odd primes `p` with `4p <= max`.
pub fn four_p_up_to(max: u64) -> Vec<(u64, u64)> {
    (3..=max / 4).filter(|&p| is_prime(p)).map(|p| (4 * p, p)).collect()
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}
