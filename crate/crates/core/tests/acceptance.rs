//! Acceptance suite: one line per criterion, non-zero exit if any fails.

use std::collections::BTreeSet;
use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use schur_core::automorphic::{aut_lattice_count, orbit_partition, UnitSubgroup};
use schur_core::constructions::{direct_product, trivial_ring, wedge_product, Section};
use schur_core::enumeration::{Enumerator, Family};
use schur_core::formulas::{self, lattice_count_prime_power_pair, FourPProfile};
use schur_core::oracle::{brute_force_schur_rings, brute_force_subgroup_count, DEFAULT_LIMIT};
use schur_core::{divisors, SchurPartition};

/// Ω(pq) for every semiprime below 100.
const SEMIPRIME_TABLE: [(u32, usize); 30] = [
    (6, 7), (10, 10), (14, 13), (15, 21), (21, 27), (22, 13),
    (26, 19), (33, 27), (34, 16), (35, 41), (38, 19), (39, 41),
    (46, 13), (51, 35), (55, 41), (57, 40), (58, 19), (62, 25),
    (65, 67), (69, 27), (74, 28), (77, 53), (82, 25), (85, 60),
    (86, 25), (87, 41), (91, 97), (93, 53), (94, 13), (95, 61),
];

/// Ω(4p) for every 4p below 100.
const FOUR_P_TABLE: [(u32, usize); 8] = [
    (12, 32), (20, 47), (28, 61), (44, 61), (52, 91), (68, 77), (76, 90), (92, 61),
];

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, budget: Duration) -> Result<(), String> {
    let spent = start.elapsed();
    ensure(spent < budget, || format!("took {spent:?}, budget {budget:?}"))
}

fn disc(n: u32) -> SchurPartition {
    SchurPartition::discrete(n)
}

fn triv(n: u32) -> SchurPartition {
    trivial_ring(n)
}

fn aut(n: u32, gens: &[u32]) -> SchurPartition {
    orbit_partition(&UnitSubgroup::generated(n, gens))
}

fn pm(n: u32) -> SchurPartition {
    aut(n, &[n - 1])
}

fn wedge(s: &SchurPartition, t: &SchurPartition, k: u32, h: u32, n: u32) -> SchurPartition {
    wedge_product(s, t, Section::new(k, h, n).unwrap(), n).unwrap()
}

fn prod(s: &SchurPartition, t: &SchurPartition) -> SchurPartition {
    direct_product(s, t).unwrap()
}

fn semiprime_table() -> Outcome {
    let start = Instant::now();
    let semiprimes: Vec<u32> = formulas::semiprimes_up_to(100).iter().map(|r| r.0 as u32).collect();
    let listed: Vec<u32> = SEMIPRIME_TABLE.iter().map(|r| r.0).collect();
    ensure(semiprimes == listed, || format!("semiprimes below 100 are {semiprimes:?}"))?;
    for ((n, p, q), (_, want)) in formulas::semiprimes_up_to(100).into_iter().zip(SEMIPRIME_TABLE) {
        let got = formulas::omega_pq(p, q).map_err(|e| e.to_string())?;
        ensure(got == want as u64, || format!("Omega({n}) = {got}, table says {want}"))?;
    }
    within(start, Duration::from_secs(1))?;
    Ok("30 rows match".into())
}

fn four_p_table() -> Outcome {
    let start = Instant::now();
    let rows = formulas::four_p_up_to(100);
    ensure(rows.len() == FOUR_P_TABLE.len(), || format!("{} values of 4p below 100", rows.len()))?;
    for ((n, p), (m, want)) in rows.into_iter().zip(FOUR_P_TABLE) {
        ensure(n == u64::from(m), || format!("row {n} vs {m}"))?;
        let got = formulas::omega_4p(p).map_err(|e| e.to_string())?;
        ensure(got == want as u64, || format!("Omega({n}) = {got}, table says {want}"))?;
    }
    within(start, Duration::from_secs(1))?;
    Ok("8 rows match".into())
}

fn constructive_equals_closed_form() -> Outcome {
    let start = Instant::now();
    let mut e = Enumerator::new();
    let mut checked = 0;
    for (n, p, q) in formulas::semiprimes_up_to(100) {
        let want = formulas::omega_pq(p, q).map_err(|e| e.to_string())?;
        let got = e.omega(n as u32) as u64;
        ensure(got == want, || format!("enumerate({n}) = {got}, formula {want}"))?;
        checked += 1;
    }
    for (n, p) in formulas::four_p_up_to(100) {
        let want = formulas::omega_4p(p).map_err(|e| e.to_string())?;
        let got = e.omega(n as u32) as u64;
        ensure(got == want, || format!("enumerate({n}) = {got}, formula {want}"))?;
        checked += 1;
    }
    within(start, Duration::from_secs(60))?;
    Ok(format!("{checked} moduli agree in {:?}", start.elapsed()))
}

fn oracle_equals_constructive() -> Outcome {
    let start = Instant::now();
    let mut e = Enumerator::new();
    let mut counts = Vec::new();
    for n in 1..=14 {
        let brute = brute_force_schur_rings(n, DEFAULT_LIMIT).map_err(|e| e.to_string())?;
        let built = e.rings(n);
        ensure(brute == built, || {
            format!("n = {n}: oracle {} rings, enumerate {}", brute.len(), built.len())
        })?;
        counts.push(brute.len());
    }
    for (n, want) in [(6, 7), (10, 10), (12, 32), (14, 13)] {
        ensure(counts[n - 1] == want, || format!("Omega({n}) = {}", counts[n - 1]))?;
    }
    within(start, Duration::from_secs(300))?;
    Ok(format!("identical sets for n = 1..14, counts {counts:?}"))
}

fn z21_list() -> Vec<SchurPartition> {
    let z3 = [triv(3), disc(3)];
    let z7 = [triv(7), aut(7, &[2]), pm(7), disc(7)];
    let mut out = Vec::new();
    for s in &z3 {
        for t in &z7 {
            out.push(wedge(s, t, 3, 3, 21));
        }
    }
    for s in &z3 {
        for t in &z7 {
            out.push(wedge(t, s, 7, 7, 21));
        }
    }
    for s in &z3 {
        for t in &z7 {
            out.push(prod(s, t));
        }
    }
    out.extend([triv(21), aut(21, &[5]), pm(21)]);
    out
}

fn z12_list() -> Vec<SchurPartition> {
    let z2z3_0 = wedge(&disc(2), &triv(3), 2, 2, 6);
    let z2z3 = wedge(&disc(2), &disc(3), 2, 2, 6);
    let z2z2 = wedge(&disc(2), &disc(2), 2, 2, 4);
    vec![
        wedge(&disc(2), &z2z3_0, 2, 2, 12),
        wedge(&disc(2), &z2z3, 2, 2, 12),
        wedge(&z2z3_0, &disc(2), 6, 6, 12),
        wedge(&z2z3, &disc(2), 6, 6, 12),
        wedge(&disc(2), &triv(6), 2, 2, 12),
        wedge(&disc(2), &pm(6), 2, 2, 12),
        wedge(&disc(2), &disc(6), 2, 2, 12),
        wedge(&triv(3), &triv(4), 3, 3, 12),
        wedge(&triv(3), &z2z2, 3, 3, 12),
        wedge(&triv(3), &disc(4), 3, 3, 12),
        wedge(&disc(3), &triv(4), 3, 3, 12),
        wedge(&disc(3), &z2z2, 3, 3, 12),
        wedge(&disc(3), &disc(4), 3, 3, 12),
        wedge(&triv(4), &triv(3), 4, 4, 12),
        wedge(&triv(4), &disc(3), 4, 4, 12),
        wedge(&disc(4), &z2z3_0, 2, 4, 12),
        wedge(&disc(4), &z2z3, 2, 4, 12),
        wedge(&disc(4), &pm(6), 2, 4, 12),
        wedge(&disc(4), &disc(6), 2, 4, 12),
        wedge(&triv(6), &disc(2), 6, 6, 12),
        wedge(&pm(6), &disc(2), 6, 6, 12),
        wedge(&pm(6), &pm(6), 2, 6, 12),
        wedge(&pm(6), &disc(4), 3, 6, 12),
        wedge(&disc(6), &disc(2), 6, 6, 12),
        wedge(&disc(6), &disc(6), 2, 6, 12),
        wedge(&disc(6), &disc(4), 3, 6, 12),
        triv(12),
        prod(&triv(4), &triv(3)),
        prod(&triv(4), &disc(3)),
        prod(&disc(4), &triv(3)),
        prod(&disc(4), &disc(3)),
        pm(12),
    ]
}

fn explicit_lists() -> Outcome {
    let mut e = Enumerator::new();
    for (n, named, want) in [(21, z21_list(), 27), (12, z12_list(), 32)] {
        ensure(named.len() == want, || format!("n = {n}: {} names", named.len()))?;
        let encoded: BTreeSet<Vec<u8>> = named.iter().map(SchurPartition::encode).collect();
        ensure(encoded.len() == want, || format!("n = {n}: named rings are not distinct"))?;
        let built: BTreeSet<Vec<u8>> = e.rings(n).iter().map(SchurPartition::encode).collect();
        ensure(encoded == built, || format!("n = {n}: named set differs from enumeration"))?;
    }
    ensure(prod(&disc(3), &disc(7)) == disc(21), || "Z_3 x Z_7 is not Z_21".into())?;
    ensure(prod(&disc(4), &disc(3)) == disc(12), || "Z_4 x Z_3 is not Z_12".into())?;
    ensure(prod(&disc(2), &triv(3)) == pm(6), || "Z_2 x Z_3^0 is not Z_6^±".into())?;
    Ok("27 named rings over Z_21 and 32 over Z_12 match".into())
}

fn semiprime_families() -> Outcome {
    let mut e = Enumerator::new();
    for (n, p, q) in formulas::semiprimes_up_to(100) {
        let r = e.enumerate(n as u32);
        let profile = formulas::SemiprimeProfile::new(p, q).map_err(|e| e.to_string())?;
        let lattice = profile.aut_lattice_count();
        ensure(aut_lattice_count(n) == Ok(lattice), || format!("n = {n}: lattice routes differ"))?;
        let x = formulas::omega_prime(p).unwrap();
        let y = formulas::omega_prime(q).unwrap();
        let automorphic = r.count_tagged(Family::Automorphic) as u64;
        let trivial = r.count_tagged(Family::Trivial) as u64;
        let wedges = r
            .tags
            .iter()
            .filter(|t| t.contains(&Family::Wedge) && !t.contains(&Family::Automorphic))
            .count() as u64;
        let trivial_automorphic = r
            .tags
            .iter()
            .any(|t| t.contains(&Family::Trivial) && t.len() > 1);
        ensure(automorphic == lattice, || format!("n = {n}: {automorphic} automorphic vs {lattice}"))?;
        ensure(wedges == 2 * x * y, || format!("n = {n}: {wedges} wedges vs 2xy = {}", 2 * x * y))?;
        ensure(trivial == 1 && !trivial_automorphic, || format!("n = {n}: trivial family"))?;
        ensure(automorphic + wedges + trivial == r.omega as u64, || {
            format!("n = {n}: {automorphic} + {wedges} + {trivial} != {}", r.omega)
        })?;
    }
    Ok("automorphic + 2xy + 1 = Omega(pq) for all 30 semiprimes".into())
}

fn lattice_formula() -> Outcome {
    let start = Instant::now();
    let mut cases = 0;
    for r in (2u64..=512).filter(|&r| formulas::is_prime(r)) {
        for k in 0u32.. {
            if r.pow(k) > 512 {
                break;
            }
            for l in 0u32.. {
                if r.pow(k + l) > 512 {
                    break;
                }
                let formula = lattice_count_prime_power_pair(r, k, l).map_err(|e| e.to_string())?;
                let brute = brute_force_subgroup_count(r, k, l).map_err(|e| e.to_string())?;
                ensure(formula == brute, || format!("({r},{k},{l}): {formula} vs {brute}"))?;
                cases += 1;
            }
        }
    }
    within(start, Duration::from_secs(30))?;
    Ok(format!("{cases} (r,k,l) triples agree in {:?}", start.elapsed()))
}

fn four_p_census() -> Outcome {
    let mut e = Enumerator::new();
    for p in [3u64, 5, 7] {
        let n = 4 * p;
        let f = FourPProfile::new(p).map_err(|e| e.to_string())?;
        let x = f.x as usize;
        let k = f.k as usize;
        let lattice = aut_lattice_count(n).map_err(|e| e.to_string())? as usize;
        ensure(lattice * (k + 1) == (3 * k + 2) * x, || format!("n = {n}: |L(Aut)| = {lattice}"))?;
        let by_order = e.enumerate(n as u32).census_by_order();
        let p = p as u32;
        let expected = [
            (2, 3 * x + 1),
            (p, 3 * x),
            (4, 3 * x),
            (2 * p, 3 * x + 1),
            (n as u32, lattice + 1),
        ];
        let got: Vec<(u32, usize)> = by_order.into_iter().collect();
        let mut want = expected.to_vec();
        want.sort();
        ensure(got == want, || format!("n = {n}: census {got:?}, expected {want:?}"))?;
    }
    Ok("census for 12, 20, 28 matches 3x+1, 3x, 3x, 3x+1, 1+|L(Aut)|".into())
}

fn property_suite() -> Outcome {
    let mut e = Enumerator::new();
    let (mut rings, mut directs, mut wedges) = (0, 0, 0);
    for n in 1..=30u32 {
        for p in e.rings(n) {
            ensure(p.is_schur_ring(), || format!("enumerated {p:?} fails the axioms"))?;
            rings += 1;
        }
        ensure(triv(n).is_schur_ring(), || format!("trivial ring over {n}"))?;
        for h in divisors(n).into_iter().filter(|&h| h > 1 && h < n) {
            let k = n / h;
            if (2..=h).any(|d| h % d == 0 && k % d == 0) {
                continue;
            }
            for s in e.rings(h) {
                for t in e.rings(k) {
                    let p = prod(&s, &t);
                    ensure(p.is_schur_ring(), || format!("{s:?} x {t:?} fails the axioms"))?;
                    ensure(p.restrict(h).as_ref() == Ok(&s), || format!("(S x T)_H != S for {p:?}"))?;
                    ensure(p.restrict(k).as_ref() == Ok(&t), || format!("(S x T)_K != T for {p:?}"))?;
                    directs += 1;
                }
            }
        }
        for u in Section::all_proper(n) {
            let lower = e.rings(n / u.k);
            for s in e.rings(u.h) {
                for t in &lower {
                    let Ok(w) = wedge_product(&s, t, u, n) else { continue };
                    ensure(w.is_schur_ring(), || format!("wedge {w:?} fails the axioms"))?;
                    ensure(w.restrict(u.h).as_ref() == Ok(&s), || format!("(S∧T)_H != S for {w:?}"))?;
                    ensure(w.quotient(u.k).as_ref() == Ok(t), || format!("π(S∧T) != T for {w:?}"))?;
                    wedges += 1;
                }
            }
        }
    }
    Ok(format!("{rings} rings, {directs} direct and {wedges} wedge instances over n <= 30"))
}

fn specialisation_coherence() -> Outcome {
    let mut checked = 0;
    let primes: Vec<u64> = (2..=500).filter(|&p| formulas::is_prime(p)).collect();
    for (i, &p) in primes.iter().enumerate() {
        for &q in &primes[i + 1..] {
            if p * q > 1000 {
                break;
            }
            let general = formulas::omega_pq(p, q).map_err(|e| e.to_string())?;
            let mut compare = |name: &str, value: Result<u64, formulas::FormulaError>| {
                let value = value.map_err(|e| e.to_string())?;
                checked += 1;
                ensure(value == general, || format!("{name}({p},{q}) = {value} vs {general}"))
            };
            if p == 2 {
                compare("omega_2p", formulas::omega_2p(q))?;
            }
            for (small, f) in [(3, formulas::omega_3p as fn(u64) -> _), (5, formulas::omega_5p)] {
                if p == small {
                    compare("omega_small", f(q))?;
                }
                if q == small && p != 2 {
                    compare("omega_small", f(p))?;
                }
            }
            match formulas::omega_pq_cor2(p, q) {
                Err(formulas::FormulaError::OddPartsNotCoprime { .. }) => {}
                other => compare("omega_pq_cor2", other)?,
            }
        }
    }
    let d = formulas::Cor2Diagnostic::new(5, 13).map_err(|e| e.to_string())?;
    ensure(d.printed == 79 && d.general == 67 && d.corrected == 67, || format!("{d:?}"))?;
    Ok(format!("{checked} specialisations agree; printed coefficient gives 79 != 67 at (5,13)"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("AC1  semiprime table", semiprime_table),
        ("AC2  4p table", four_p_table),
        ("AC3  enumeration = closed form", constructive_equals_closed_form),
        ("AC4  oracle = enumeration", oracle_equals_constructive),
        ("AC5  explicit Z_21 and Z_12 lists", explicit_lists),
        ("AC6  semiprime family decomposition", semiprime_families),
        ("AC7  subgroup lattice formula", lattice_formula),
        ("AC8  4p wedge-core census", four_p_census),
        ("AC9  constructor property suite", property_suite),
        ("AC10 specialised formulas agree", specialisation_coherence),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let outcome = panic::catch_unwind(AssertUnwindSafe(run))
            .unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("PASS  {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL  {name}: {detail}");
            }
        }
    }
    println!("acceptance: {} of 10 criteria passed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
