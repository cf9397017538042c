//! Exhaustive number-theory checks shared by the property suite and the
//! acceptance run.

use gk_core::numth::*;
use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Pow};

pub const SMALL_Q: [u64; 7] = [2, 3, 4, 5, 7, 8, 9];

pub fn prime_powers(limit: u64) -> Vec<u64> {
    (2..=limit).filter(|&q| PrimePower::from_u64(q).is_ok()).collect()
}

pub fn pow(q: u64, k: u64) -> BigUint {
    BigUint::from(q).pow(k as u32)
}

macro_rules! check {
    ($cond:expr, $($msg:tt)*) => {
        if !$cond {
            return Err(format!($($msg)*));
        }
    };
}

/// R_m(q) ≠ ∅ by stripping from q^m − 1 every prime dividing some q^d − 1,
/// d < m, with 2 placed by the e(2, q) convention.
fn nonempty_by_gcd(m: u64, q: u64) -> bool {
    let mut x = pow(q, m) - 1u32;
    let earlier: BigUint = (1..m).map(|d| pow(q, d) - 1u32).fold(BigUint::one(), |a, b| a * b);
    loop {
        let g = x.gcd(&earlier);
        if g.is_one() {
            break;
        }
        x /= g;
    }
    if q % 2 == 1 {
        while x.is_even() {
            x >>= 1;
        }
        let two = if q % 4 == 1 { 1 } else { 2 };
        if m == two {
            return true;
        }
    }
    x > BigUint::one()
}

/// Empty classes over q ≤ 64, m ≤ 40 are exactly (2,1), (2,6), (3,1).
pub fn zsigmondy_exceptions() -> Result<(), String> {
    let mut empty = Vec::new();
    for q in prime_powers(64) {
        let pq = PrimePower::from_u64(q).unwrap();
        for m in 1..=40 {
            let by_value = class_nonempty(m, &pq);
            check!(by_value == nonempty_by_gcd(m, q), "R_{m}({q}) emptiness disagrees with the gcd strip");
            if !by_value {
                empty.push((q, m));
            }
        }
    }
    check!(empty == vec![(2, 1), (2, 6), (3, 1)], "empty classes {empty:?}");
    Ok(())
}

pub fn gcd_identities() -> Result<(), String> {
    for q in SMALL_Q {
        let two_q1 = BigUint::from(if q % 2 == 1 { 2u32 } else { 1 });
        for k in 1..=20u64 {
            for l in 1..=20u64 {
                let d = k.gcd(&l);
                let (a, b) = (k / d, l / d);
                check!(
                    (pow(q, k) - 1u32).gcd(&(pow(q, l) - 1u32)) == pow(q, d) - 1u32,
                    "(q^k-1, q^l-1) at q={q} k={k} l={l}"
                );
                let plus = if a % 2 == 1 && b % 2 == 1 { pow(q, d) + 1u32 } else { two_q1.clone() };
                check!((pow(q, k) + 1u32).gcd(&(pow(q, l) + 1u32)) == plus, "(q^k+1, q^l+1) at q={q} k={k} l={l}");
                let mixed = if a % 2 == 0 && b % 2 == 1 { pow(q, d) + 1u32 } else { two_q1.clone() };
                check!((pow(q, k) - 1u32).gcd(&(pow(q, l) + 1u32)) == mixed, "(q^k-1, q^l+1) at q={q} k={k} l={l}");
            }
        }
    }
    Ok(())
}

/// (k_i(q), k_j(q)) = 1 for i ≠ j over the gcd grid.
pub fn primitive_divisors_coprime() -> Result<(), String> {
    for q in SMALL_Q {
        let pq = PrimePower::from_u64(q).unwrap();
        let ks: Vec<BigUint> = (1..=20).map(|m| greatest_primitive_divisor(m, &pq).value).collect();
        for i in 0..ks.len() {
            for j in i + 1..ks.len() {
                check!(ks[i].gcd(&ks[j]).is_one(), "k_{}({q}) and k_{}({q}) share a factor", i + 1, j + 1);
            }
        }
    }
    Ok(())
}

pub fn cyclotomic_telescoping() -> Result<(), String> {
    for q in prime_powers(32) {
        for m in 1..=30 {
            let prod: BigUint = divisors_u64(m).into_iter().map(|d| cyclotomic_eval(d, &BigUint::from(q))).product();
            check!(prod == pow(q, m) - 1u32, "cyclotomic product at m={m} q={q}");
        }
    }
    Ok(())
}

pub fn suzuki_ree_pair_gcds() -> Result<(), String> {
    for n in 1..=8 {
        for (family, count) in [(SuzRee::B2, 3), (SuzRee::G2, 4), (SuzRee::F4, 6)] {
            for i in 1..=count {
                for j in i + 1..=count {
                    let g = suzuki_ree_divisor(family, n, i).unwrap().gcd(&suzuki_ree_divisor(family, n, j).unwrap());
                    let want: u32 = match (family, i, j) {
                        (SuzRee::F4, 2, 4) => 3,
                        (SuzRee::G2, 1, 2) => 2,
                        _ => 1,
                    };
                    check!(g == BigUint::from(want), "{family:?} n={n}: (m_{i}, m_{j}) = {g}");
                }
            }
        }
    }
    Ok(())
}

pub fn index_involutions() -> Result<(), String> {
    for m in 1..=10_000u64 {
        check!(nu(nu(m)) == m, "nu(nu({m}))");
        for eps in [Sign::Plus, Sign::Minus] {
            check!(nu_eps(nu_eps(m, eps), eps) == m, "nu_eps at {m}, {eps}");
        }
        check!(nu_eps(m, Sign::Plus) == m, "nu_+({m})");
        let want = match m % 4 {
            0 => m,
            2 => m / 2,
            _ => 2 * m,
        };
        check!(nu(m) == want, "nu({m})");
        check!(eta(m) == if m % 2 == 1 { m } else { m / 2 }, "eta({m})");
    }
    Ok(())
}

#[allow(dead_code)]
pub type Check = fn() -> Result<(), String>;

#[allow(dead_code)]
pub const ALL: [(&str, Check); 7] = [
    ("Zsigmondy exceptions", zsigmondy_exceptions),
    ("gcd identities", gcd_identities),
    ("k_i/k_j coprime", primitive_divisors_coprime),
    ("cyclotomic telescoping", cyclotomic_telescoping),
    ("Suzuki/Ree gcds", suzuki_ree_pair_gcds),
    ("nu/eta involutions", index_involutions),
    ("mult order", mult_order_small),
];

/// e(r, q) against iteration for small r and q.
pub fn mult_order_small() -> Result<(), String> {
    for q in prime_powers(64) {
        for r in [3u64, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43] {
            if q % r == 0 {
                continue;
            }
            let e = mult_order(r, &BigUint::from(q)).map_err(|e| e.to_string())?;
            let mut x = 1u64;
            let first = (1..=r).find(|_| {
                x = x * (q % r) % r;
                x == 1
            });
            check!(Some(e) == first, "e({r}, {q}) = {e}");
        }
    }
    Ok(())
}
