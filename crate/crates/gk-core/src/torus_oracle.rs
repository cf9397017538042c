//! Maximal-torus orders as an independent adjacency oracle.
//!
//! A semisimple element lies in a maximal torus, and a finite abelian group
//! whose order is divisible by distinct primes r and s has an element of
//! order rs. So two primes other than the characteristic are adjacent iff
//! some maximal torus has order divisible by both.
//!
//! B_n, C_n and D_n^ε tori come from partitions of n with signs. Every
//! combination is assumed to occur (with sign product ε for D), which is how
//! the adjacency proofs use them. E₇, E₈ and ²F₄ orders are a literal
//! transcription of the published corrected lists. A^ε is not covered.

use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint, Sign as BigSign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::adjacency::{for_each_partition, vertex_adjacency, Verdict};
use crate::groupspec::{partition, Family, GroupSpec, Vertex};
use crate::numth::{prime_divisors, FactorBudget, NumthError, Sign, SuzRee};

#[derive(Debug, Error)]
pub enum OracleError {
    #[error("no torus data for {0}")]
    Uncovered(String),
    #[error("{0} is the characteristic or does not divide the group order")]
    BadPrime(u64),
    #[error(transparent)]
    Numth(#[from] NumthError),
}

/// One maximal-torus order with the pattern it was produced from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorusOrder {
    pub order: BigUint,
    pub pattern: String,
}

/// Deduplicated torus orders, sorted by value.
#[derive(Debug, Clone)]
pub struct TorusOrderSet {
    pub spec: GroupSpec,
    pub orders: Vec<TorusOrder>,
    /// Number of patterns expanded before deduplication.
    pub pattern_count: usize,
}

impl TorusOrderSet {
    fn collect(spec: &GroupSpec, raw: Vec<TorusOrder>) -> Self {
        let pattern_count = raw.len();
        let mut seen = BTreeSet::new();
        let mut orders: Vec<TorusOrder> =
            raw.into_iter().filter(|t| seen.insert(t.order.clone())).collect();
        orders.sort_by(|a, b| a.order.cmp(&b.order));
        TorusOrderSet { spec: spec.clone(), orders, pattern_count }
    }

    pub fn contains(&self, v: &BigUint) -> bool {
        self.orders.iter().any(|t| &t.order == v)
    }

    /// Some order divisible by every prime in `primes`.
    pub fn witness(&self, primes: &[u64]) -> Option<&TorusOrder> {
        let m: BigUint = primes.iter().map(|&r| BigUint::from(r)).product();
        self.orders.iter().find(|t| (&t.order % &m).is_zero())
    }
}

fn q_pow_minus(q: &BigUint, m: u64, sign: Sign) -> BigUint {
    let v = q.pow(m as u32);
    if sign.is_plus() {
        v - 1u32
    } else {
        v + 1u32
    }
}

fn sign_vectors(len: usize) -> impl Iterator<Item = Vec<Sign>> {
    (0u32..1 << len).map(move |mask| {
        (0..len).map(|i| if mask >> i & 1 == 1 { Sign::Minus } else { Sign::Plus }).collect()
    })
}

fn describe(parts: &[u64], signs: &[Sign]) -> String {
    let body: Vec<String> = parts.iter().zip(signs).map(|(m, s)| format!("{m}{s}")).collect();
    format!("({})", body.join(","))
}

/// (1/(2,q−1))·Π(q^{n_i} − ε_i) over partitions of n and all sign vectors.
pub fn torus_orders_bc(spec: &GroupSpec) -> Result<TorusOrderSet, OracleError> {
    if !matches!(spec.family, Family::B | Family::C) {
        return Err(OracleError::Uncovered(spec.to_string()));
    }
    let q = spec.field().q();
    let centre = if spec.field().is_odd() { 2u32 } else { 1 };
    let mut raw = Vec::new();
    for_each_partition(spec.rank() as u64, &mut |parts| {
        for signs in sign_vectors(parts.len()) {
            let prod: BigUint = parts.iter().zip(&signs).map(|(&m, &s)| q_pow_minus(q, m, s)).product();
            raw.push(TorusOrder { order: prod / centre, pattern: describe(parts, &signs) });
        }
        true
    });
    Ok(TorusOrderSet::collect(spec, raw))
}

/// (1/(4,q^n−ε))·Π(q^{n_i} − ε_i) over partitions of n with Πε_i = ε.
pub fn torus_orders_d(spec: &GroupSpec) -> Result<TorusOrderSet, OracleError> {
    if spec.family != Family::D {
        return Err(OracleError::Uncovered(spec.to_string()));
    }
    let n = spec.rank() as u64;
    let eps = spec.eps;
    let q = spec.field().q();
    let centre = q_pow_minus(q, n, eps).gcd(&BigUint::from(4u32));
    let mut raw = Vec::new();
    for_each_partition(n, &mut |parts| {
        for signs in sign_vectors(parts.len()) {
            if signs.iter().fold(Sign::Plus, |a, &b| a * b) != eps {
                continue;
            }
            let prod: BigUint = parts.iter().zip(&signs).map(|(&m, &s)| q_pow_minus(q, m, s)).product();
            raw.push(TorusOrder { order: prod / &centre, pattern: describe(parts, &signs) });
        }
        true
    });
    Ok(TorusOrderSet::collect(spec, raw))
}

/// Integer polynomial in q, coefficients from the constant term up.
type Poly = &'static [i64];

const QM1: Poly = &[-1, 1];
const QP1: Poly = &[1, 1];
const Q2P1: Poly = &[1, 0, 1];
const Q3M1: Poly = &[-1, 0, 0, 1];
const Q3P1: Poly = &[1, 0, 0, 1];
const Q4P1: Poly = &[1, 0, 0, 0, 1];
const Q4_Q2_1: Poly = &[1, 0, -1, 0, 1];

fn q_pm(eps: Sign) -> Poly {
    if eps.is_plus() {
        QP1
    } else {
        QM1
    }
}

fn q_mp(eps: Sign) -> Poly {
    q_pm(eps.flip())
}

/// q^a + ε1.
fn qa_pm(a: usize, eps: Sign) -> Vec<i64> {
    let mut c = vec![0; a + 1];
    c[a] = 1;
    c[0] = if eps.is_plus() { 1 } else { -1 };
    c
}

fn eval(poly: &[i64], q: &BigInt) -> BigInt {
    poly.iter().rev().fold(BigInt::zero(), |acc, &c| acc * q + c)
}

/// A product of polynomial factors with exponents.
struct Pattern {
    id: String,
    factors: Vec<(Vec<i64>, u32)>,
}

impl Pattern {
    fn new(id: impl Into<String>, factors: &[(&[i64], u32)]) -> Self {
        Pattern { id: id.into(), factors: factors.iter().map(|(p, e)| (p.to_vec(), *e)).collect() }
    }

    fn value(&self, q: &BigInt) -> BigUint {
        let v: BigInt = self.factors.iter().map(|(p, e)| eval(p, q).pow(*e)).product();
        assert!(v.is_positive(), "torus order {} is not positive", self.id);
        v.to_biguint().expect("positive")
    }
}

const SIGNS: [Sign; 2] = [Sign::Plus, Sign::Minus];

/// Exponent vectors for (q³+1)^a (q³−1)^b (q²+1)^c (q+1)^d (q−1)^e.
fn mixed_patterns(tag: &str, rank: u32, excluded: &[[u32; 5]]) -> Vec<Pattern> {
    let mut out = Vec::new();
    for a in 0..=2u32 {
        for b in 0..=2 - a {
            if a + b == 0 {
                continue;
            }
            let rest = rank - 3 * (a + b);
            for c in 0..=rest / 2 {
                for d in 0..=rest - 2 * c {
                    let e = rest - 2 * c - d;
                    let v = [a, b, c, d, e];
                    if excluded.contains(&v) {
                        continue;
                    }
                    out.push(Pattern::new(
                        format!("{tag}{v:?}"),
                        &[(Q3P1, a), (Q3M1, b), (Q2P1, c), (QP1, d), (QM1, e)],
                    ));
                }
            }
        }
    }
    out
}

/// (q²+1)^a (q+1)^b (q−1)^c with `a_range` and 2a+b+c = rank.
fn square_patterns(tag: &str, rank: u32, a_range: std::ops::RangeInclusive<u32>, excluded: &[[u32; 3]]) -> Vec<Pattern> {
    let mut out = Vec::new();
    for a in a_range {
        for b in 0..=rank - 2 * a {
            let v = [a, b, rank - 2 * a - b];
            if !excluded.contains(&v) {
                out.push(Pattern::new(format!("{tag}{v:?}"), &[(Q2P1, v[0]), (QP1, v[1]), (QM1, v[2])]));
            }
        }
    }
    out
}

fn linear_patterns(tag: &str, rank: u32) -> Vec<Pattern> {
    (0..=rank).map(|a| Pattern::new(format!("{tag}[{a},{}]", rank - a), &[(QP1, a), (QM1, rank - a)])).collect()
}

/// ε-indexed exclusion vector for (q³+ε1)…: `plus` is the vector for ε = +,
/// the ε = − vector swaps q³±1 and q±1.
fn eps_pair(plus: [u32; 5]) -> [[u32; 5]; 2] {
    let [a, b, c, d, e] = plus;
    [plus, [b, a, c, e, d]]
}

fn e7_patterns() -> Vec<Pattern> {
    let mut out = linear_patterns("E7.1", 7);
    out.extend(square_patterns("E7.2", 7, 1..=2, &[[1, 5, 0], [1, 0, 5]]));
    let mut excl = Vec::new();
    // (q³+ε1)(q−ε1)⁴, (q³±1)(q²+1)², (q³+ε1)(q²+1)(q+ε1)²
    excl.extend(eps_pair([1, 0, 0, 0, 4]));
    excl.extend(eps_pair([1, 0, 2, 0, 0]));
    excl.extend(eps_pair([1, 0, 1, 2, 0]));
    out.extend(mixed_patterns("E7.3", 7, &excl));
    for s in SIGNS {
        for t in SIGNS {
            out.push(Pattern::new(format!("E7.4{s}{t}"), &[(Q4P1, 1), (&qa_pm(2, t.flip()), 1), (q_mp(s), 1)]));
        }
    }
    for e in SIGNS {
        let id = |k: usize| format!("E7.{k}{e}");
        out.push(Pattern::new(id(5), &[(&qa_pm(5, e), 1), (&[-1, 0, 1], 1)]));
        out.push(Pattern::new(id(6), &[(&qa_pm(5, e), 1), (q_pm(e), 2)]));
        out.push(Pattern::new(id(7), &[(&qa_pm(7, e), 1)]));
        out.push(Pattern::new(id(8), &[(q_mp(e), 1), (&tri(e), 3)]));
        out.push(Pattern::new(id(9), &[(&qa_pm(5, e.flip()), 1), (&tri(e), 1)]));
        out.push(Pattern::new(id(10), &[(&qa_pm(3, e), 1), (Q4_Q2_1, 1)]));
        out.push(Pattern::new(id(11), &[(q_mp(e), 1), (&nonic(e), 1)]));
        out.push(Pattern::new(id(12), &[(&qa_pm(3, e.flip()), 1), (&tri(e.flip()), 2)]));
    }
    out
}

/// q² + εq + 1.
fn tri(e: Sign) -> Vec<i64> {
    vec![1, if e.is_plus() { 1 } else { -1 }, 1]
}

/// q⁶ + εq³ + 1.
fn nonic(e: Sign) -> Vec<i64> {
    vec![1, 0, 0, if e.is_plus() { 1 } else { -1 }, 0, 0, 1]
}

fn times(mut p: Pattern, extra: &[i64], tag: &str) -> Pattern {
    p.factors.push((extra.to_vec(), 1));
    p.id.push_str(tag);
    p
}

fn e8_patterns() -> Vec<Pattern> {
    let mut out = linear_patterns("E8.1", 8);
    // (q²+1)³(q±1)², (q²+1)(q±1)⁶
    out.extend(square_patterns("E8.2", 8, 1..=4, &[[3, 2, 0], [3, 0, 2], [1, 6, 0], [1, 0, 6]]));
    let mut excl = vec![[2, 0, 1, 0, 0], [0, 2, 1, 0, 0]];
    excl.extend(eps_pair([1, 0, 0, 0, 5]));
    excl.extend(eps_pair([1, 0, 1, 3, 0]));
    excl.extend(eps_pair([1, 0, 2, 0, 1]));
    out.extend(mixed_patterns("E8.3", 8, &excl));

    out.push(Pattern::new("E8.4", &[(&qa_pm(8, Sign::Minus), 1)]));
    out.push(Pattern::new("E8.5", &[(Q4P1, 2)]));
    for s in SIGNS {
        for t in SIGNS {
            out.push(Pattern::new(format!("E8.6{s}{t}"), &[(Q4P1, 1), (&qa_pm(2, s.flip()), 1), (q_mp(t), 2)]));
        }
    }
    out.push(Pattern::new("E8.7", &[(Q4P1, 1), (&[-1, 0, 1], 2)]));
    for e in SIGNS {
        let id = |k: usize| format!("E8.{k}{e}");
        out.push(Pattern::new(id(8), &[(Q4P1, 1), (&qa_pm(3, e), 1), (q_mp(e), 1)]));
        out.push(Pattern::new(id(9), &[(&qa_pm(5, e), 1), (q_pm(e), 3)]));
        for s in SIGNS {
            out.push(Pattern::new(format!("E8.10{e}{s}"), &[(&qa_pm(5, s), 1), (q_pm(e), 2), (q_mp(e), 1)]));
        }
        out.push(Pattern::new(id(11), &[(&qa_pm(5, e), 1), (Q2P1, 1), (q_mp(e), 1)]));
        out.push(Pattern::new(id(12), &[(&qa_pm(5, e), 1), (&qa_pm(3, e), 1)]));
        out.push(Pattern::new(id(13), &[(&qa_pm(6, Sign::Plus), 1), (&qa_pm(2, e), 1)]));
        for s in SIGNS {
            out.push(Pattern::new(format!("E8.14{e}{s}"), &[(&qa_pm(7, e), 1), (q_pm(s), 1)]));
            let tag = format!("{s}");
            out.push(times(Pattern::new(id(15), &[(q_mp(e), 1), (&tri(e), 3)]), q_pm(s), &tag));
            out.push(times(Pattern::new(id(17), &[(&qa_pm(3, e), 1), (Q4_Q2_1, 1)]), q_pm(s), &tag));
            out.push(times(Pattern::new(id(18), &[(q_mp(e), 1), (&nonic(e), 1)]), q_pm(s), &tag));
            out.push(times(
                Pattern::new(id(19), &[(&qa_pm(3, e.flip()), 1), (&tri(e.flip()), 2)]),
                q_pm(s),
                &tag,
            ));
        }
        out.push(Pattern::new(id(16), &[(&qa_pm(5, e.flip()), 1), (&tri(e), 1), (q_pm(e), 1)]));
        out.push(Pattern::new(id(24), &[(&nonic(e), 1), (&tri(e), 1)]));
        let e1 = if e.is_plus() { 1 } else { -1 };
        out.push(Pattern::new(id(26), &[(&[1, e1, 1, e1, 1], 2)]));
        out.push(Pattern::new(id(27), &[(Q4_Q2_1, 1), (&tri(e), 2)]));
        out.push(Pattern::new(id(29), &[(&tri(e), 4)]));
    }
    out.push(Pattern::new("E8.20", &[(&[1, 0, 0, 0, -1, 0, 0, 0, 1], 1)]));
    out.push(Pattern::new("E8.21", &[(&[1, 1, 0, -1, -1, -1, 0, 1, 1], 1)]));
    out.push(Pattern::new("E8.22", &[(&[1, 0, -1, 0, 1, 0, -1, 0, 1], 1)]));
    out.push(Pattern::new("E8.23", &[(Q4_Q2_1, 2)]));
    out.push(Pattern::new("E8.25", &[(&[1, -1, 0, 1, -1, 1, 0, -1, 1], 1)]));
    out.push(Pattern::new("E8.28", &[(&tri(Sign::Minus), 2), (&tri(Sign::Plus), 2)]));
    out
}

fn expand(spec: &GroupSpec, patterns: Vec<Pattern>, divide_by: &BigUint) -> TorusOrderSet {
    let q = BigInt::from_biguint(BigSign::Plus, spec.field().q().clone());
    let raw = patterns
        .into_iter()
        .map(|p| {
            let v = p.value(&q);
            debug_assert!((&v % divide_by).is_zero());
            TorusOrder { order: v / divide_by, pattern: p.id }
        })
        .collect();
    TorusOrderSet::collect(spec, raw)
}

fn ree_f4_orders(spec: &GroupSpec) -> TorusOrderSet {
    let q = spec.field().q().clone();
    let root = BigUint::from(2u32).pow(spec.rank() + 1);
    let qi = BigInt::from(q.clone());
    let ri = BigInt::from(root);
    let one = BigInt::one();
    let mut raw: Vec<(String, BigInt)> = Vec::new();
    for e in SIGNS {
        let e = if e.is_plus() { one.clone() } else { -one.clone() };
        let tag = if e.is_positive() { "+" } else { "-" };
        raw.push((format!("2F4.1{tag}"), &qi * &qi + &e * &qi * &ri + &qi + &e * &ri + 1));
        raw.push((format!("2F4.2{tag}"), &qi * &qi - &e * &qi * &ri + &e * &ri - 1));
        let pm = &qi + &e * &ri + 1;
        raw.push((format!("2F4.4{tag}"), &pm * &pm));
        raw.push((format!("2F4.5{tag}"), (&qi - 1) * &pm));
        raw.push((format!("2F4.6{tag}"), (&qi + &e) * (&qi + &e)));
        raw.push((format!("2F4.7{tag}"), &qi * &qi + &e));
    }
    raw.push(("2F4.3".into(), &qi * &qi - &qi + 1));
    let raw = raw
        .into_iter()
        .map(|(pattern, v)| TorusOrder { order: v.to_biguint().expect("positive torus order"), pattern })
        .collect();
    TorusOrderSet::collect(spec, raw)
}

/// E₇ (orders m/(2,q−1)), E₈ and ²F₄.
pub fn torus_orders_exceptional(spec: &GroupSpec) -> Result<TorusOrderSet, OracleError> {
    match spec.family {
        Family::E7 => {
            let centre = BigUint::from(if spec.field().is_odd() { 2u32 } else { 1 });
            Ok(expand(spec, e7_patterns(), &centre))
        }
        Family::E8 => Ok(expand(spec, e8_patterns(), &BigUint::one())),
        Family::SuzRee(SuzRee::F4) => Ok(ree_f4_orders(spec)),
        _ => Err(OracleError::Uncovered(spec.to_string())),
    }
}

pub fn covered(spec: &GroupSpec) -> bool {
    matches!(spec.family, Family::B | Family::C | Family::D | Family::E7 | Family::E8 | Family::SuzRee(SuzRee::F4))
}

pub fn torus_orders(spec: &GroupSpec) -> Result<TorusOrderSet, OracleError> {
    match spec.family {
        Family::B | Family::C => torus_orders_bc(spec),
        Family::D => torus_orders_d(spec),
        _ => torus_orders_exceptional(spec),
    }
}

/// Primes r, s (distinct, not the characteristic) are adjacent iff some
/// torus order is divisible by rs. The prime 2 is allowed when q is odd,
/// since involutions are then semisimple.
pub fn oracle_adjacent(tori: &TorusOrderSet, r: u64, s: u64) -> Result<bool, OracleError> {
    let p = tori.spec.field().p();
    for x in [r, s] {
        if x == p || !tori.orders.iter().any(|t| (&t.order % x).is_zero()) {
            return Err(OracleError::BadPrime(x));
        }
    }
    assert_ne!(r, s);
    Ok(tori.witness(&[r, s]).is_some())
}

/// A pair where the criterion graph and the oracle disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Disagreement {
    pub a: Vertex,
    pub b: Vertex,
    pub r: u64,
    pub s: u64,
    pub criterion: Verdict,
    pub oracle: bool,
}

#[derive(Debug, Clone)]
pub struct OracleReport {
    pub spec: GroupSpec,
    pub pairs_checked: usize,
    pub torus_orders: usize,
    pub disagreements: Vec<Disagreement>,
}

/// The primes carried by a non-characteristic vertex.
fn vertex_primes(
    part: &crate::groupspec::ClassPartition,
    v: &Vertex,
    budget: FactorBudget,
) -> Result<Vec<u64>, OracleError> {
    match v {
        Vertex::Prime(r) => Ok(vec![*r]),
        Vertex::Class { kind, index } => {
            let info = part.class(*kind, *index).expect("vertex from partition");
            prime_divisors(&info.residue, budget)?
                .into_iter()
                .map(|r| r.to_u64().ok_or_else(|| OracleError::Uncovered(format!("prime {r} too large"))))
                .collect()
        }
        Vertex::Char(p) => Err(OracleError::BadPrime(*p)),
    }
}

/// Compares criterion adjacency with the oracle on every pair of vertices
/// other than the characteristic, using every prime of each class. The
/// prime 2 takes part only when `with_two` is set and q is odd.
pub fn compare(spec: &GroupSpec, with_two: bool, budget: FactorBudget) -> Result<OracleReport, OracleError> {
    let tori = torus_orders(spec)?;
    let part = partition(spec);
    let verts: Vec<(Vertex, Vec<u64>)> = part
        .vertices()
        .into_iter()
        .filter(|v| !matches!(v, Vertex::Char(_)))
        .filter(|v| with_two || *v != Vertex::Prime(2))
        .map(|v| Ok((v, vertex_primes(&part, &v, budget)?)))
        .collect::<Result<_, OracleError>>()?;
    let mut pairs_checked = 0;
    let mut disagreements = Vec::new();
    for (i, (a, ra)) in verts.iter().enumerate() {
        for (b, rb) in &verts[i + 1..] {
            let criterion = vertex_adjacency(spec, &part, a, b)
                .map_err(|e| OracleError::Uncovered(e.to_string()))?;
            for &r in ra {
                for &s in rb {
                    pairs_checked += 1;
                    let oracle = oracle_adjacent(&tori, r, s)?;
                    if oracle != criterion.adjacent {
                        disagreements.push(Disagreement { a: *a, b: *b, r, s, criterion, oracle });
                    }
                }
            }
        }
    }
    Ok(OracleReport { spec: spec.clone(), pairs_checked, torus_orders: tori.orders.len(), disagreements })
}
