//! One PASS/FAIL line per acceptance criterion, written straight to the
//! stdout handle so the lines show up without `--nocapture`.

use std::collections::HashMap;
use std::io::Write;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use zigzag_hstar::alt_perm::swap_histogram;
use zigzag_hstar::checks::{descent_polynomial, sample_labelings};
use zigzag_hstar::ehrhart::{count_lattice_points_naive, ehrhart_table, order_polynomial_value};
use zigzag_hstar::poset::{chains_with_sizes, default_natural_labeling};
use zigzag_hstar::rank_selection::{beta_table, brute_force_max_altperm};
use zigzag_hstar::shelling::ShellingOrder;
use zigzag_hstar::{
    count_lattice_points, enumerate_alternating, euler_zigzag, gorenstein_check, hstar_from_beta,
    hstar_from_ehrhart, hstar_from_shelling, hstar_from_swaps, inversion_shelling_order, phi, psi,
    unique_max_altperm, verify_shelling, AltPerm, IdealChain, IndexSet, IntPolynomial, TieBreak,
    VertexConstraintSet,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, Option<Duration>, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn ok<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn poly(coeffs: &[i64]) -> IntPolynomial {
    IntPolynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
}

fn euler(n: usize) -> BigInt {
    BigInt::from(euler_zigzag(n)[n].clone())
}

fn c1_n4_golden() -> Outcome {
    let want = poly(&[1, 3, 1]);
    let order = ok(inversion_shelling_order(4, TieBreak::ReverseLex))?;
    let routes = [
        ("swap", ok(hstar_from_swaps(4))?),
        ("shelling", ok(hstar_from_shelling(&order))?),
        ("ehrhart", ok(hstar_from_ehrhart(4))?),
        ("beta", ok(hstar_from_beta(4))?),
    ];
    for (name, h) in &routes {
        ensure!(*h == want, "{name} route gave {h}");
    }
    Ok("all four routes give 1 + 3t + t^2".into())
}

fn c2_euler() -> Outcome {
    let seq: Vec<String> = euler_zigzag(7).iter().map(ToString::to_string).collect();
    ensure!(seq == ["1", "1", "1", "2", "5", "16", "61", "272"], "E_0..E_7 = {seq:?}");
    let e = euler_zigzag(12);
    for (n, en) in e.iter().enumerate().skip(1) {
        let count = ok(enumerate_alternating(n))?.count();
        ensure!(BigUint::from(count) == *en, "n = {n}: enumerated {count}, E_n = {en}");
    }
    Ok(format!("E_0..E_7 correct; |A_n| = E_n for n <= 12 (E_12 = {})", e[12]))
}

fn c3_four_way() -> Outcome {
    for n in 1..=10 {
        let swap = ok(hstar_from_swaps(n))?;
        let beta = ok(hstar_from_beta(n))?;
        let ehr = ok(hstar_from_ehrhart(n))?;
        ensure!(swap == beta && beta == ehr, "n = {n}: swap {swap}, beta {beta}, ehrhart {ehr}");
        if n <= 7 {
            let order = ok(inversion_shelling_order(n, TieBreak::Lex))?;
            let shell = ok(hstar_from_shelling(&order))?;
            ensure!(shell == swap, "n = {n}: shelling {shell}, swap {swap}");
        }
    }
    Ok("swap = beta = ehrhart for n <= 10, = shelling for n <= 7".into())
}

fn c4_shellings() -> Outcome {
    let mut orders = 0;
    for n in 1..=7 {
        let swaps: HashMap<AltPerm, usize> = ok(enumerate_alternating(n))?.map(|s| (s.clone(), s.swap())).collect();
        let ties = [TieBreak::Lex, TieBreak::ReverseLex].into_iter().chain((0..20).map(|s| TieBreak::Seeded(1000 + s)));
        for tie in ties {
            let order = ok(inversion_shelling_order(n, tie))?;
            let inv: Vec<usize> = order.perms().map(AltPerm::inversion_count).collect();
            ensure!(inv.windows(2).all(|w| w[0] >= w[1]), "n = {n} {tie:?}: not inversion-nonincreasing");
            let report = ok(verify_shelling(&order))?;
            ensure!(report.valid, "n = {n} {tie:?}: not a shelling");
            for (s, &a) in order.perms().zip(&report.attachment_counts) {
                ensure!(swaps[s] == a, "n = {n} {tie:?}: {s} attaches along {a}, swap = {}", swaps[s]);
            }
            orders += 1;
        }
    }
    let bad: Vec<AltPerm> = ["3412", "1324", "2413", "2314", "1423"].iter().map(|s| s.parse().unwrap()).collect();
    let report = ok(verify_shelling(&ok(ShellingOrder::from_perms(bad))?))?;
    let w = report.failure_witness.ok_or("bad order accepted")?;
    ensure!(!report.valid && w.position == 2, "bad order failed at {}", w.position);
    Ok(format!("{orders} orders valid with attachments = swaps; bad order fails at r = 2"))
}

fn c5_flag_h_vector() -> Outcome {
    let mut sets = 0;
    for n in 1..=8 {
        let betas = ok(beta_table(n))?;
        let mut counts: HashMap<IndexSet, i128> = HashMap::new();
        for s in ok(enumerate_alternating(n))? {
            *counts.entry(s.swap_set()).or_default() += 1;
        }
        ensure!(betas.table.len() == 1 << (n - 1), "n = {n}: {} sets", betas.table.len());
        for (s, &b) in &betas.table {
            let c = counts.get(s).copied().unwrap_or(0);
            ensure!(b == c, "n = {n}, S = {s}: beta {b}, swap-set count {c}");
            sets += 1;
        }
    }
    Ok(format!("beta(S) = #{{Swap = S}} on {sets} pairs (n, S), n <= 8"))
}

fn c6_bijection() -> Outcome {
    let mut chains_seen = 0;
    for n in 1..=7 {
        let perms: Vec<AltPerm> = ok(enumerate_alternating(n))?.collect();
        let interior = if n > 1 { IndexSet::range(1, n - 1) } else { IndexSet::empty() };
        for sizes in interior.subsets() {
            let chains = ok(chains_with_sizes(n, sizes))?;
            for c in &chains {
                let s = ok(phi(c))?;
                ensure!(s.swap_set().is_subset(sizes), "phi({c}) = {s} leaves the domain");
                ensure!(ok(psi(sizes, &s))? == *c, "psi(phi({c})) differs");
            }
            let domain: Vec<&AltPerm> = perms.iter().filter(|s| s.swap_set().is_subset(sizes)).collect();
            ensure!(domain.len() == chains.len(), "n = {n}, S = {sizes}: sizes differ");
            for s in domain {
                ensure!(ok(phi(&ok(psi(sizes, s))?))? == *s, "phi(psi({s})) differs");
            }
            chains_seen += chains.len();
        }
    }
    let chain = ok(IdealChain::parse(7, "{1,3,7} < {1,3,4,5,6,7}"))?;
    let s = ok(phi(&chain))?;
    ensure!(s.to_string() == "3726451", "worked example gave {s}");
    Ok(format!("psi o phi and phi o psi are identities on {chains_seen} chains; example gives 3726451"))
}

fn c7_unique_maximum() -> Outcome {
    let mut sets = 0;
    for n in 1..=7 {
        let interior = if n > 1 { IndexSet::range(1, n - 1) } else { IndexSet::empty() };
        for sizes in interior.subsets() {
            for c in ok(chains_with_sizes(n, sizes))? {
                let cs = ok(VertexConstraintSet::from_chain(&c))?;
                // brute force errors if the maximum is not unique
                let brute = ok(brute_force_max_altperm(&cs))?;
                let built = ok(unique_max_altperm(&cs))?;
                ensure!(brute == built, "{c}: constructed {built}, brute force {brute}");
                sets += 1;
            }
        }
    }
    Ok(format!("constructive = unique brute-force argmax on {sets} constraint sets"))
}

fn c8_gorenstein() -> Outcome {
    for n in 2..=10 {
        let report = ok(gorenstein_check(n))?.map_err(|f| format!("n = {n}: {f}"))?;
        let expected: Vec<i64> = (1..=n).map(|i| if i % 2 == 1 { 1 } else { 2 }).collect();
        ensure!(report.interior_point == expected, "n = {n}: point {:?}", report.interior_point);
        ensure!(report.distances.iter().all(|&d| d == 1), "n = {n}: distances {:?}", report.distances);
    }
    for n in 1..=10 {
        let h = ok(hstar_from_ehrhart(n))?;
        ensure!(h.coeff(0) == BigInt::from(1), "n = {n}: h*_0 = {}", h.coeff(0));
        ensure!(h.sum() == euler(n), "n = {n}: h*(1) = {}", h.sum());
        if n >= 2 {
            ensure!(h.degree() == Some(n - 2), "n = {n}: degree {:?}", h.degree());
        }
    }
    Ok("index 3 with point (1,2,1,...) for 2 <= n <= 10; deg = n-2, h*_0 = 1, h*(1) = E_n".into())
}

fn c9_swap_numbers() -> Outcome {
    for n in 2..=12 {
        let s = ok(swap_histogram(n))?;
        let k = n - 2;
        ensure!(s[n - 1] == 0, "n = {n}: s(n-1) = {}", s[n - 1]);
        ensure!(s[0] == 1 && s[k] == 1, "n = {n}: ends {} {}", s[0], s[k]);
        ensure!((0..=k).all(|i| s[i] == s[k - i]), "n = {n}: {s:?} not symmetric");
        let peak = (0..=k).max_by_key(|&i| (s[i], std::cmp::Reverse(i))).unwrap();
        let up = s[..=peak].windows(2).all(|w| w[0] <= w[1]);
        let down = s[peak..=k].windows(2).all(|w| w[0] >= w[1]);
        ensure!(up && down, "n = {n}: {s:?} not unimodal");
        ensure!(BigInt::from(s.iter().sum::<u64>()) == euler(n), "n = {n}: sum");
    }
    Ok("symmetric, unimodal, s(0) = s(n-2) = 1, s(n-1) = 0 for n <= 12".into())
}

fn c10_ehrhart() -> Outcome {
    let mut pairs = 0;
    // m capped at 30; n runs until even m = 0 no longer fits
    for n in 1..=23usize {
        for m in 0..=30u64 {
            if ((m + 1) as u128).pow(n as u32) > 10_000_000 {
                break;
            }
            let naive = ok(count_lattice_points_naive(n, m))?;
            ensure!(ok(count_lattice_points(n, m))? == BigUint::from(naive), "n = {n}, m = {m}");
            pairs += 1;
        }
    }
    for n in 1..=10 {
        let t = ok(ehrhart_table(n, n as u64 + 2))?;
        // (1 - t)^{n+1} Σ i(m) t^m must stop at t^n
        for j in n + 1..=n + 2 {
            let mut c = BigInt::from(0);
            let mut binom = BigInt::from(1);
            for k in 0..=(n + 1) {
                let term = &binom * BigInt::from(t.values[j - k].clone());
                c += if k % 2 == 0 { term } else { -term };
                binom = binom * BigInt::from(n + 1 - k) / BigInt::from(k + 1);
            }
            ensure!(c == BigInt::from(0), "n = {n}: coefficient of t^{j} is {c}");
        }
        for m in 0..=10u64 {
            ensure!(
                ok(count_lattice_points(n, m))? == ok(order_polynomial_value(n, m + 1))?,
                "n = {n}, m = {m}: i(m) != Omega(m + 1)"
            );
        }
    }
    let t4: Vec<String> = ok(ehrhart_table(4, 3))?.values.iter().map(ToString::to_string).collect();
    ensure!(t4 == ["1", "8", "31", "85"], "n = 4 table {t4:?}");
    Ok(format!("DP = naive on {pairs} (n, m); series tail vanishes; i(m) = Omega(m+1); n=4 gives 1,8,31,85"))
}

fn c11_equidistribution() -> Outcome {
    let mut checked = 0;
    for n in 1..=7 {
        let labelings = if n >= 4 {
            ok(sample_labelings(n))?
        } else {
            // fewer than three natural labelings exist; use them all
            ok(enumerate_alternating(n))?
                .map(|s| zigzag_hstar::NaturalLabeling::new(s.entries()))
                .collect::<Result<_, _>>()
                .map_err(|e| e.to_string())?
        };
        ensure!(n < 4 || labelings.len() >= 3, "n = {n}: only {} labelings", labelings.len());
        ensure!(labelings.contains(&ok(default_natural_labeling(n))?), "n = {n}: default missing");
        let swaps = ok(hstar_from_swaps(n))?;
        for omega in &labelings {
            let des = ok(descent_polynomial(n, omega))?;
            ensure!(des == swaps, "n = {n}, labeling {:?}: {des} vs {swaps}", omega.labels());
            checked += 1;
        }
    }
    Ok(format!("descent polynomial = swap polynomial for {checked} (n, labeling) pairs"))
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 11] = [
        ("n=4 golden, four routes", Some(Duration::from_secs(1)), c1_n4_golden),
        ("Euler numbers and enumeration", Some(Duration::from_secs(60)), c2_euler),
        ("four-way h* agreement", None, c3_four_way),
        ("inversion orders are shellings", None, c4_shellings),
        ("flag h-vector counts swap sets", None, c5_flag_h_vector),
        ("phi/psi bijection", None, c6_bijection),
        ("constructive unique maximum", None, c7_unique_maximum),
        ("Gorenstein index and h* shape", None, c8_gorenstein),
        ("swap-number structure", None, c9_swap_numbers),
        ("Ehrhart internals", None, c10_ehrhart),
        ("descent/swap equidistribution", None, c11_equidistribution),
    ];
    let mut failed = Vec::new();
    let mut out = std::io::stdout().lock();
    for (i, (name, budget, f)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let mut result = f();
        let elapsed = start.elapsed();
        if let (Ok(_), Some(limit)) = (&result, budget) {
            if elapsed > limit {
                result = Err(format!("took {elapsed:.2?}, budget {limit:?}"));
            }
        }
        match &result {
            Ok(detail) => {
                let _ = writeln!(out, "PASS [{:>2}] {name}: {detail} ({elapsed:.2?})", i + 1);
            }
            Err(why) => {
                let _ = writeln!(out, "FAIL [{:>2}] {name}: {why} ({elapsed:.2?})", i + 1);
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
