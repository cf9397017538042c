//! Exact integer number theory: multiplicative orders, cyclotomic values,
//! primitive prime divisors, index transforms and Suzuki/Ree divisors.
//!
//! All quantities that can grow with `q` are [`BigUint`]; only indices and
//! small primes are machine words.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Default iteration budget for the rho stage of [`factorize`].
pub const DEFAULT_FACTOR_BUDGET: u64 = 10_000_000;

/// Environment variable overriding [`DEFAULT_FACTOR_BUDGET`].
pub const FACTOR_BUDGET_ENV: &str = "GK_FACTOR_BUDGET";

const TRIAL_LIMIT: u32 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumthError {
    #[error("{0} is not a prime")]
    NotPrime(String),
    #[error("{0} is not a prime power")]
    NotPrimePower(String),
    #[error("modulus {r} must be an odd prime coprime to {q}")]
    BadModulus { r: String, q: String },
    #[error("expected an odd number, got {0}")]
    EvenArgument(String),
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    #[error("factorization budget of {budget} rho iterations exhausted; unfactored cofactor {cofactor}")]
    BudgetExceeded { budget: u64, cofactor: BigUint },
}

/// Sign ε distinguishing untwisted (+) and twisted (−) forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn is_plus(self) -> bool {
        self == Sign::Plus
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    /// ε^k
    pub fn pow(self, k: u64) -> Sign {
        if k % 2 == 0 {
            Sign::Plus
        } else {
            self
        }
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;

    fn mul(self, other: Sign) -> Sign {
        if self == other {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.is_plus() { "+" } else { "-" })
    }
}

/// `q = p^alpha` with `p` prime.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PrimePower {
    p: u64,
    alpha: u32,
    q: BigUint,
}

impl PrimePower {
    pub fn new(p: u64, alpha: u32) -> Result<Self, NumthError> {
        if !is_prime_u64(p) {
            return Err(NumthError::NotPrime(p.to_string()));
        }
        if alpha == 0 {
            return Err(NumthError::OutOfRange("exponent must be at least 1".into()));
        }
        Ok(PrimePower { p, alpha, q: BigUint::from(p).pow(alpha) })
    }

    /// Decomposes `q` as `p^alpha`.
    pub fn from_biguint(q: &BigUint) -> Result<Self, NumthError> {
        let bits = q.bits() as u32;
        if bits < 2 {
            return Err(NumthError::NotPrimePower(q.to_string()));
        }
        for alpha in (1..=bits).rev() {
            let root = q.nth_root(alpha);
            if root < BigUint::from(2u32) || &root.pow(alpha) != q {
                continue;
            }
            if let Some(p) = root.to_u64() {
                if is_prime_u64(p) {
                    return PrimePower::new(p, alpha);
                }
            }
        }
        Err(NumthError::NotPrimePower(q.to_string()))
    }

    pub fn from_u64(q: u64) -> Result<Self, NumthError> {
        Self::from_biguint(&BigUint::from(q))
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn alpha(&self) -> u32 {
        self.alpha
    }

    pub fn q(&self) -> &BigUint {
        &self.q
    }

    pub fn q_u64(&self) -> Option<u64> {
        self.q.to_u64()
    }

    pub fn is_odd(&self) -> bool {
        self.p != 2
    }

    /// `q mod m`
    pub fn rem(&self, m: u64) -> u64 {
        (&self.q % m).to_u64().expect("remainder fits")
    }
}

impl fmt::Display for PrimePower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.q)
    }
}

/// Iteration budget for the rho stage of factorization.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FactorBudget {
    pub iterations: u64,
}

impl Default for FactorBudget {
    fn default() -> Self {
        FactorBudget { iterations: DEFAULT_FACTOR_BUDGET }
    }
}

impl FactorBudget {
    pub fn new(iterations: u64) -> Self {
        FactorBudget { iterations }
    }

    /// Reads `GK_FACTOR_BUDGET`, falling back to the default when unset or unparsable.
    pub fn from_env() -> Self {
        std::env::var(FACTOR_BUDGET_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .map(FactorBudget::new)
            .unwrap_or_default()
    }
}

fn small_primes() -> &'static [u32] {
    static PRIMES: OnceLock<Vec<u32>> = OnceLock::new();
    PRIMES.get_or_init(|| primes_up_to(TRIAL_LIMIT as usize))
}

/// Sieve of Eratosthenes.
pub fn primes_up_to(n: usize) -> Vec<u32> {
    if n < 2 {
        return Vec::new();
    }
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if composite[i] {
            continue;
        }
        out.push(i as u32);
        let mut j = i * i;
        while j <= n {
            composite[j] = true;
            j += i;
        }
    }
    out
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller–Rabin for 64-bit inputs.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Miller–Rabin with the first 20 prime bases: deterministic below 3.3·10^24,
/// a strong probable-prime test above that.
pub fn is_prime(n: &BigUint) -> bool {
    if let Some(small) = n.to_u64() {
        return is_prime_u64(small);
    }
    let one = BigUint::one();
    if n.is_even() {
        return false;
    }
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    'witness: for &a in &small_primes()[..20] {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x == one || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Exponent of `r` in `n` (`n > 0`).
pub fn valuation(n: &BigUint, r: u64) -> u32 {
    assert!(!n.is_zero(), "valuation of zero");
    let mut n = n.clone();
    let mut v = 0;
    let r = BigUint::from(r);
    loop {
        let (quot, rem) = n.div_rem(&r);
        if !rem.is_zero() {
            return v;
        }
        n = quot;
        v += 1;
    }
}

/// Removes every factor `r` from `n`.
pub fn strip_prime(n: &BigUint, r: u64) -> BigUint {
    let v = valuation(n, r);
    n / BigUint::from(r).pow(v)
}

/// `(m_r, m_{r'})`: the `r`-part of `m` and its cofactor.
pub fn r_share(m: u64, r: u64) -> (u64, u64) {
    assert!(m >= 1 && r >= 2);
    let mut part = 1;
    let mut rest = m;
    while rest % r == 0 {
        rest /= r;
        part *= r;
    }
    (part, rest)
}

/// Prime divisors of a machine-word integer, by trial division.
pub fn prime_divisors_u64(mut m: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= m {
        if m % d == 0 {
            out.push(d);
            while m % d == 0 {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        out.push(m);
    }
    out
}

pub fn divisors_u64(m: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= m {
        if m % d == 0 {
            small.push(d);
            if d * d != m {
                large.push(m / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// e(r, q): the least `m ≥ 1` with `q^m ≡ 1 (mod r)`, for an odd prime `r`.
pub fn mult_order(r: u64, q: &BigUint) -> Result<u64, NumthError> {
    let bad = || NumthError::BadModulus { r: r.to_string(), q: q.to_string() };
    if r % 2 == 0 || !is_prime_u64(r) {
        return Err(bad());
    }
    let q_mod = (q % r).to_u64().expect("remainder fits");
    if q_mod == 0 || q <= &BigUint::one() {
        return Err(bad());
    }
    let mut order = r - 1;
    for f in factor_u64(r - 1) {
        while order % f == 0 && pow_mod(q_mod, order / f, r) == 1 {
            order /= f;
        }
    }
    Ok(order)
}

/// True when `q` has multiplicative order exactly `m` modulo the odd prime `r`.
pub fn has_mult_order(r: &BigUint, q: &BigUint, m: u64) -> bool {
    let one = BigUint::one();
    if q.modpow(&BigUint::from(m), r) != one {
        return false;
    }
    prime_divisors_u64(m)
        .into_iter()
        .all(|f| q.modpow(&BigUint::from(m / f), r) != one)
}

/// e(2, q) for odd `q`: 1 if `q ≡ 1 (mod 4)`, else 2.
pub fn order_of_two(q: &BigUint) -> Result<u64, NumthError> {
    if q.is_even() || q <= &BigUint::one() {
        return Err(NumthError::EvenArgument(q.to_string()));
    }
    Ok(if (q % 4u32).is_one() { 1 } else { 2 })
}

/// e(r, q) for any prime `r ≠ p`, using [`order_of_two`] for `r = 2`.
pub fn prime_index(r: u64, q: &PrimePower) -> Result<u64, NumthError> {
    if r == 2 {
        order_of_two(q.q())
    } else {
        mult_order(r, q.q())
    }
}

fn factor_u64(n: u64) -> Vec<u64> {
    // r - 1 for a 64-bit prime r: trial division by the sieve, then rho.
    let mut out = Vec::new();
    let mut rest = n;
    for &p in small_primes() {
        let p = p as u64;
        if p * p > rest {
            break;
        }
        if rest % p == 0 {
            out.push(p);
            while rest % p == 0 {
                rest /= p;
            }
        }
    }
    if rest > 1 {
        let mut stack = vec![rest];
        while let Some(m) = stack.pop() {
            if m == 1 {
                continue;
            }
            if is_prime_u64(m) {
                out.push(m);
                continue;
            }
            let mut c = 1;
            let d = loop {
                if let Some(d) = rho_u64(m, c, u64::MAX) {
                    break d;
                }
                c += 1;
            };
            stack.push(d);
            stack.push(m / d);
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

fn rho_u64(n: u64, c: u64, budget: u64) -> Option<u64> {
    let f = |x: u64| ((mul_mod(x, x, n) as u128 + c as u128) % n as u128) as u64;
    let (mut y, mut r, mut q) = (2u64, 1u64, 1u64);
    let mut spent = 0u64;
    let mut x;
    let mut ys;
    let m = 64;
    loop {
        x = y;
        for _ in 0..r {
            y = f(y);
        }
        let mut k = 0;
        loop {
            ys = y;
            for _ in 0..m.min(r - k) {
                y = f(y);
                q = mul_mod(q, x.abs_diff(y), n);
            }
            spent += m.min(r - k);
            let g = q.gcd(&n);
            k += m;
            if g != 1 {
                if g == n {
                    loop {
                        ys = f(ys);
                        let g = x.abs_diff(ys).gcd(&n);
                        if g != 1 {
                            return if g == n { None } else { Some(g) };
                        }
                    }
                }
                return Some(g);
            }
            if k >= r {
                break;
            }
        }
        if spent > budget {
            return None;
        }
        r *= 2;
    }
}

fn rho_big(n: &BigUint, c: u64, budget: &mut u64) -> Option<BigUint> {
    let c = BigUint::from(c);
    let f = |x: &BigUint| (x * x + &c) % n;
    let one = BigUint::one();
    let mut y = BigUint::from(2u32);
    let mut q = BigUint::one();
    let mut r: u64 = 1;
    let m: u64 = 128;
    loop {
        let x = y.clone();
        for _ in 0..r {
            y = f(&y);
        }
        let mut k = 0;
        while k < r {
            let ys = y.clone();
            let steps = m.min(r - k);
            for _ in 0..steps {
                y = f(&y);
                let diff = if x > y { &x - &y } else { &y - &x };
                q = (q * diff) % n;
            }
            if *budget < steps {
                *budget = 0;
                return None;
            }
            *budget -= steps;
            let g = q.gcd(n);
            k += steps;
            if g != one {
                if &g != n {
                    return Some(g);
                }
                let mut ys = ys;
                loop {
                    ys = f(&ys);
                    let diff = if x > ys { &x - &ys } else { &ys - &x };
                    let g = diff.gcd(n);
                    if g != one {
                        return if &g == n { None } else { Some(g) };
                    }
                }
            }
        }
        r *= 2;
    }
}

/// Full factorization: trial division to 10^6, Miller–Rabin on the cofactor,
/// then Pollard–Brent rho with fixed seeds under `budget`.
pub fn factorize(n: &BigUint, budget: FactorBudget) -> Result<Vec<(BigUint, u32)>, NumthError> {
    if n.is_zero() {
        return Err(NumthError::OutOfRange("cannot factor zero".into()));
    }
    let mut found: BTreeMap<BigUint, u32> = BTreeMap::new();
    let mut rest = n.clone();
    for &p in small_primes() {
        let pb = BigUint::from(p);
        if &pb * &pb > rest {
            break;
        }
        let v = valuation(&rest, p as u64);
        if v > 0 {
            rest /= pb.pow(v);
            found.insert(BigUint::from(p), v);
        }
    }
    let mut remaining = budget.iterations;
    let mut stack = vec![rest];
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        let limit = BigUint::from(TRIAL_LIMIT as u64 * TRIAL_LIMIT as u64);
        if m < limit || is_prime(&m) {
            *found.entry(m).or_insert(0) += 1;
            continue;
        }
        let mut split = None;
        for c in 1..u64::MAX {
            if remaining == 0 {
                break;
            }
            if let Some(d) = rho_big(&m, c, &mut remaining) {
                split = Some(d);
                break;
            }
        }
        match split {
            Some(d) => {
                stack.push(&m / &d);
                stack.push(d);
            }
            None => {
                return Err(NumthError::BudgetExceeded { budget: budget.iterations, cofactor: m })
            }
        }
    }
    Ok(found.into_iter().collect())
}

/// Distinct prime divisors of `n`.
pub fn prime_divisors(n: &BigUint, budget: FactorBudget) -> Result<Vec<BigUint>, NumthError> {
    Ok(factorize(n, budget)?.into_iter().map(|(p, _)| p).collect())
}

/// φ_m(q) via Π_{d|m} φ_d(q) = q^m − 1.
pub fn cyclotomic_eval(m: u64, q: &BigUint) -> BigUint {
    assert!(m >= 1, "cyclotomic index must be positive");
    assert!(q >= &BigUint::from(2u32), "cyclotomic argument must be at least 2");
    let divisors = divisors_u64(m);
    let mut values: BTreeMap<u64, BigUint> = BTreeMap::new();
    for &d in &divisors {
        let mut v = q.pow(d as u32) - 1u32;
        for &e in &divisors {
            if e < d && d % e == 0 {
                v /= &values[&e];
            }
        }
        values.insert(d, v);
    }
    values.remove(&m).expect("m divides itself")
}

/// k_m(q): the largest divisor of `q^m − 1` whose primes all lie in R_m(q).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreatestPrimitiveDivisor {
    pub m: u64,
    pub q: PrimePower,
    pub value: BigUint,
}

pub fn greatest_primitive_divisor(m: u64, q: &PrimePower) -> GreatestPrimitiveDivisor {
    assert!(m >= 1);
    let qq = q.q();
    let value = match m {
        1 | 2 => {
            let base = if m == 1 { qq - 1u32 } else { qq + 1u32 };
            let halve = q.is_odd() && ((m == 1 && q.rem(4) == 3) || (m == 2 && q.rem(4) == 1));
            if halve {
                base / 2u32
            } else {
                base
            }
        }
        _ => {
            let mut v = cyclotomic_eval(m, qq);
            for r in prime_divisors_u64(m) {
                let (_, rest) = r_share(m, r);
                let g = cyclotomic_eval(rest, qq).gcd(&BigUint::from(r));
                v /= g;
            }
            v
        }
    };
    GreatestPrimitiveDivisor { m, q: q.clone(), value }
}

/// The pairs `(m, q)` with R_m(q) = ∅.
pub fn zsigmondy_exception(m: u64, q: &PrimePower) -> bool {
    matches!((m, q.q_u64()), (1, Some(2)) | (1, Some(3)) | (6, Some(2)))
}

/// R_m(q) ≠ ∅, decided by `k_m(q) > 1` and checked against [`zsigmondy_exception`].
pub fn class_nonempty(m: u64, q: &PrimePower) -> bool {
    let by_value = greatest_primitive_divisor(m, q).value > BigUint::one();
    assert_eq!(
        by_value,
        !zsigmondy_exception(m, q),
        "k_{m}({q}) disagrees with the exception list"
    );
    by_value
}

/// R_m(q) as an explicit sorted list of primes.
pub fn primitive_primes(
    m: u64,
    q: &PrimePower,
    budget: FactorBudget,
) -> Result<Vec<BigUint>, NumthError> {
    let k = greatest_primitive_divisor(m, q).value;
    let primes = prime_divisors(&k, budget)?;
    for r in &primes {
        let ok = if r == &BigUint::from(2u32) {
            order_of_two(q.q()).map(|e| e == m).unwrap_or(false)
        } else {
            has_mult_order(r, q.q(), m)
        };
        assert!(ok, "{r} is not a primitive divisor of {q}^{m} - 1");
    }
    Ok(primes)
}

/// ν(m): m if 4 | m, m/2 if m ≡ 2 (mod 4), 2m if m is odd.
pub fn nu(m: u64) -> u64 {
    assert!(m >= 1);
    match m % 4 {
        0 => m,
        2 => m / 2,
        _ => 2 * m,
    }
}

/// ν_+ is the identity, ν_− is [`nu`].
pub fn nu_eps(m: u64, eps: Sign) -> u64 {
    match eps {
        Sign::Plus => m,
        Sign::Minus => nu(m),
    }
}

/// η(m): m if odd, m/2 if even.
pub fn eta(m: u64) -> u64 {
    assert!(m >= 1);
    if m % 2 == 1 {
        m
    } else {
        m / 2
    }
}

/// Suzuki and Ree families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum SuzRee {
    B2,
    G2,
    F4,
}

impl SuzRee {
    pub fn base(self) -> u64 {
        match self {
            SuzRee::G2 => 3,
            _ => 2,
        }
    }

    pub fn class_count(self) -> u32 {
        match self {
            SuzRee::B2 => 3,
            SuzRee::G2 => 4,
            SuzRee::F4 => 6,
        }
    }

    /// Prime removed from every π(m_i) when forming S_i.
    pub fn excluded_prime(self) -> Option<u64> {
        match self {
            SuzRee::B2 => None,
            SuzRee::G2 => Some(2),
            SuzRee::F4 => Some(3),
        }
    }
}

/// m_i(G, n) for q = base^(2n+1).
pub fn suzuki_ree_divisor(family: SuzRee, n: u32, i: u32) -> Result<BigUint, NumthError> {
    if n < 1 {
        return Err(NumthError::OutOfRange(format!("tower parameter n = {n}")));
    }
    if i < 1 || i > family.class_count() {
        return Err(NumthError::OutOfRange(format!("index {i} for {family:?}")));
    }
    let b = BigUint::from(family.base());
    let pw = |e: u32| b.pow(e);
    let one = BigUint::one();
    let v = match (family, i) {
        (SuzRee::B2, 1) => pw(2 * n + 1) - one,
        (SuzRee::B2, 2) => pw(2 * n + 1) - pw(n + 1) + one,
        (SuzRee::B2, 3) => pw(2 * n + 1) + pw(n + 1) + one,
        (SuzRee::G2, 1) => pw(2 * n + 1) - one,
        (SuzRee::G2, 2) => pw(2 * n + 1) + one,
        (SuzRee::G2, 3) => pw(2 * n + 1) - pw(n + 1) + one,
        (SuzRee::G2, 4) => pw(2 * n + 1) + pw(n + 1) + one,
        (SuzRee::F4, 1) => pw(2 * n + 1) - one,
        (SuzRee::F4, 2) => pw(2 * n + 1) + one,
        (SuzRee::F4, 3) => pw(4 * n + 2) + one,
        (SuzRee::F4, 4) => pw(4 * n + 2) - pw(2 * n + 1) + one,
        (SuzRee::F4, 5) => pw(4 * n + 2) + pw(2 * n + 1) + one - pw(3 * n + 2) - pw(n + 1),
        (SuzRee::F4, 6) => pw(4 * n + 2) + pw(3 * n + 2) + pw(2 * n + 1) + pw(n + 1) + one,
        _ => unreachable!(),
    };
    Ok(v)
}

/// m_i with the family's excluded prime stripped; S_i = π of this value.
pub fn suzuki_ree_residue(family: SuzRee, n: u32, i: u32) -> Result<BigUint, NumthError> {
    let m = suzuki_ree_divisor(family, n, i)?;
    Ok(match family.excluded_prime() {
        Some(r) => strip_prime(&m, r),
        None => m,
    })
}

pub fn suzuki_ree_class_nonempty(family: SuzRee, n: u32, i: u32) -> Result<bool, NumthError> {
    Ok(suzuki_ree_residue(family, n, i)? > BigUint::one())
}

/// S_i(G) as an explicit sorted list of primes.
pub fn suzuki_ree_class(
    family: SuzRee,
    n: u32,
    i: u32,
    budget: FactorBudget,
) -> Result<Vec<BigUint>, NumthError> {
    prime_divisors(&suzuki_ree_residue(family, n, i)?, budget)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    fn pp(q: u64) -> PrimePower {
        PrimePower::from_u64(q).unwrap()
    }

    fn naive_order(r: u64, q: u64) -> u64 {
        let mut x = q % r;
        let mut m = 1;
        while x != 1 {
            x = x * (q % r) % r;
            m += 1;
        }
        m
    }

    #[test]
    fn mult_order_examples() {
        assert_eq!(mult_order(3, &big(4)).unwrap(), 1);
        assert_eq!(mult_order(5, &big(2)).unwrap(), 4);
        assert_eq!(mult_order(13, &big(2)).unwrap(), 12);
        assert!(mult_order(2, &big(3)).is_err());
        assert!(mult_order(9, &big(2)).is_err());
        assert!(mult_order(3, &big(9)).is_err());
    }

    #[test]
    fn mult_order_matches_iteration() {
        for r in primes_up_to(400).into_iter().skip(1) {
            for q in 2..60u64 {
                if q % r as u64 == 0 {
                    continue;
                }
                assert_eq!(mult_order(r as u64, &big(q)).unwrap(), naive_order(r as u64, q));
            }
        }
    }

    #[test]
    fn order_of_two_examples() {
        assert_eq!(order_of_two(&big(5)).unwrap(), 1);
        assert_eq!(order_of_two(&big(7)).unwrap(), 2);
        assert_eq!(order_of_two(&big(9)).unwrap(), 1);
        assert!(order_of_two(&big(8)).is_err());
    }

    #[test]
    fn cyclotomic_examples() {
        assert_eq!(cyclotomic_eval(6, &big(2)), big(3));
        assert_eq!(cyclotomic_eval(4, &big(2)), big(5));
        assert_eq!(cyclotomic_eval(1, &big(17)), big(16));
        assert_eq!(cyclotomic_eval(12, &big(2)), big(13));
    }

    #[test]
    fn r_share_examples() {
        assert_eq!(r_share(12, 2), (4, 3));
        assert_eq!(r_share(12, 3), (3, 4));
        assert_eq!(r_share(7, 5), (1, 7));
    }

    #[test]
    fn gpd_examples() {
        assert_eq!(greatest_primitive_divisor(6, &pp(2)).value, big(1));
        assert_eq!(greatest_primitive_divisor(1, &pp(7)).value, big(3));
        assert_eq!(greatest_primitive_divisor(12, &pp(2)).value, big(13));
        assert_eq!(greatest_primitive_divisor(2, &pp(7)).value, big(8));
        assert_eq!(greatest_primitive_divisor(1, &pp(8)).value, big(7));
    }

    #[test]
    fn class_nonempty_examples() {
        assert!(!class_nonempty(6, &pp(2)));
        assert!(!class_nonempty(1, &pp(3)));
        assert!(class_nonempty(4, &pp(2)));
    }

    #[test]
    fn primitive_primes_examples() {
        let b = FactorBudget::default();
        assert_eq!(primitive_primes(4, &pp(2), b).unwrap(), vec![big(5)]);
        assert_eq!(primitive_primes(2, &pp(7), b).unwrap(), vec![big(2)]);
        assert_eq!(primitive_primes(12, &pp(2), b).unwrap(), vec![big(13)]);
    }

    #[test]
    fn nu_eta_examples() {
        assert_eq!(nu(3), 6);
        assert_eq!(nu(6), 3);
        assert_eq!(nu(4), 4);
        assert_eq!(nu_eps(9, Sign::Plus), 9);
        assert_eq!(eta(5), 5);
        assert_eq!(eta(6), 3);
        assert_eq!(eta(1), 1);
    }

    #[test]
    fn suzuki_ree_examples() {
        let b = FactorBudget::default();
        assert_eq!(suzuki_ree_divisor(SuzRee::B2, 1, 2).unwrap(), big(5));
        assert_eq!(suzuki_ree_divisor(SuzRee::G2, 1, 4).unwrap(), big(37));
        assert_eq!(suzuki_ree_divisor(SuzRee::F4, 1, 3).unwrap(), big(65));
        assert_eq!(suzuki_ree_class(SuzRee::B2, 1, 3, b).unwrap(), vec![big(13)]);
        assert_eq!(suzuki_ree_class(SuzRee::G2, 1, 1, b).unwrap(), vec![big(13)]);
        assert!(suzuki_ree_class(SuzRee::F4, 1, 2, b).unwrap().is_empty());
        assert!(suzuki_ree_divisor(SuzRee::B2, 1, 4).is_err());
    }

    #[test]
    fn prime_power_parsing() {
        let q = pp(128);
        assert_eq!((q.p(), q.alpha()), (2, 7));
        assert_eq!((pp(9).p(), pp(9).alpha()), (3, 2));
        assert!(PrimePower::from_u64(12).is_err());
        assert!(PrimePower::from_u64(1).is_err());
    }

    #[test]
    fn factorization_needs_rho() {
        // two primes just above the trial-division bound
        let a = big(1_000_003);
        let b = big(1_000_033);
        let f = factorize(&(&a * &b), FactorBudget::default()).unwrap();
        assert_eq!(f, vec![(a, 1), (b, 1)]);
    }

    #[test]
    fn factorization_budget_reports_cofactor() {
        let a = big(1_000_000_007);
        let b = big(998_244_353);
        let n = &a * &b;
        match factorize(&n, FactorBudget::new(0)) {
            Err(NumthError::BudgetExceeded { cofactor, .. }) => assert_eq!(cofactor, n),
            other => panic!("unexpected {other:?}"),
        }
    }
}
