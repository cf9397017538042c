//! Group identities: parsing, simplicity gates, prime sets and the class
//! partition of π(G).

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::numth::{
    self, class_nonempty, eta, greatest_primitive_divisor, nu_eps, prime_index, strip_prime,
    NumthError, PrimePower, Sign, SuzRee,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecError {
    #[error("cannot parse group '{0}': expected FAMILY[:n][:q], e.g. B:4:3, 2A:5:4, E8:7, Alt:19, Spor:M23, Tits")]
    Grammar(String),
    #[error("invalid field size: {0}")]
    Field(#[from] NumthError),
    #[error("{0} is not simple")]
    NotSimple(String),
    #[error("out of range: {0}")]
    Gate(String),
    #[error("unknown sporadic group '{0}'")]
    UnknownSporadic(String),
}

/// The 26 sporadic groups, in the order of the sporadic table.
pub const SPORADIC_NAMES: [&str; 26] = [
    "M11", "M12", "M22", "M23", "M24", "J1", "J2", "J3", "J4", "Ru", "He", "McL", "HN", "HiS",
    "Suz", "Co1", "Co2", "Co3", "Fi22", "Fi23", "Fi24'", "O'N", "LyS", "F1", "F2", "F3",
];

fn sporadic_alias(name: &str) -> Option<&'static str> {
    let key: String = name.chars().filter(|c| c.is_ascii_alphanumeric()).collect::<String>();
    let key = key.to_ascii_lowercase();
    let alias = match key.as_str() {
        "fi24" | "fi24p" => "Fi24'",
        "on" => "O'N",
        "ly" | "lys" => "LyS",
        "m" | "f1" => "F1",
        "b" | "f2" => "F2",
        "th" | "f3" => "F3",
        "hs" | "his" => "HiS",
        _ => return SPORADIC_NAMES.iter().copied().find(|n| n.to_ascii_lowercase() == key),
    };
    Some(alias)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    Alt,
    Sporadic,
    Tits,
    /// A^ε with `n` the dimension of the natural module.
    A,
    B,
    C,
    /// D^ε
    D,
    G2,
    F4,
    /// E6^ε
    E6,
    E7,
    E8,
    D4Triality,
    SuzRee(SuzRee),
}

impl Family {
    pub fn is_classical(self) -> bool {
        matches!(self, Family::A | Family::B | Family::C | Family::D)
    }

    pub fn is_exceptional(self) -> bool {
        matches!(
            self,
            Family::G2 | Family::F4 | Family::E6 | Family::E7 | Family::E8 | Family::D4Triality
        )
    }

    pub fn is_lie(self) -> bool {
        self.is_classical() || self.is_exceptional() || matches!(self, Family::SuzRee(_))
    }
}

/// A validated finite simple group.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupSpec {
    pub family: Family,
    /// Degree (Alt), dimension (A), rank (B, C, D) or the tower parameter
    /// `m` of `q = b^(2m+1)` (Suzuki/Ree). `None` for fixed-rank families.
    pub n: Option<u32>,
    pub q: Option<PrimePower>,
    pub eps: Sign,
    pub sporadic: Option<&'static str>,
}

impl GroupSpec {
    pub fn alt(n: u32) -> Result<Self, SpecError> {
        if n < 5 {
            return Err(SpecError::Gate(format!("Alt_{n} needs degree at least 5")));
        }
        Ok(GroupSpec { family: Family::Alt, n: Some(n), q: None, eps: Sign::Plus, sporadic: None })
    }

    pub fn sporadic(name: &str) -> Result<Self, SpecError> {
        let name = sporadic_alias(name).ok_or_else(|| SpecError::UnknownSporadic(name.into()))?;
        Ok(GroupSpec {
            family: Family::Sporadic,
            n: None,
            q: None,
            eps: Sign::Plus,
            sporadic: Some(name),
        })
    }

    pub fn tits() -> Self {
        GroupSpec { family: Family::Tits, n: None, q: None, eps: Sign::Plus, sporadic: None }
    }

    /// Classical groups. `n` is the dimension for `A` and the rank otherwise.
    pub fn classical(family: Family, eps: Sign, n: u32, q: PrimePower) -> Result<Self, SpecError> {
        let qv = q.q_u64();
        let name = || GroupSpec::display_parts(family, eps, Some(n), Some(&q)).to_string();
        match family {
            Family::A => {
                if n < 2 {
                    return Err(SpecError::Gate(format!("{}: dimension must be at least 2", name())));
                }
                if n == 2 && qv.is_some_and(|v| v <= 3) {
                    return Err(SpecError::NotSimple(name()));
                }
                if n == 2 && !eps.is_plus() {
                    return Err(SpecError::Gate(format!(
                        "{}: 2A needs dimension at least 3 (2A_1(q) is A_1(q))",
                        name()
                    )));
                }
                if n == 3 && !eps.is_plus() && qv == Some(2) {
                    return Err(SpecError::NotSimple(name()));
                }
            }
            Family::B | Family::C => {
                if n < 2 {
                    return Err(SpecError::Gate(format!("{}: rank must be at least 2", name())));
                }
                if n == 2 && qv == Some(2) {
                    return Err(SpecError::NotSimple(name()));
                }
            }
            Family::D => {
                if n < 4 {
                    return Err(SpecError::Gate(format!("{}: rank must be at least 4", name())));
                }
            }
            _ => return Err(SpecError::Gate(format!("{family:?} is not a classical family"))),
        }
        let eps = if matches!(family, Family::B | Family::C) { Sign::Plus } else { eps };
        Ok(GroupSpec { family, n: Some(n), q: Some(q), eps, sporadic: None })
    }

    /// Exceptional and Suzuki/Ree groups over `q`.
    pub fn exceptional(family: Family, eps: Sign, q: PrimePower) -> Result<Self, SpecError> {
        let mut n = None;
        let eps = if family == Family::E6 { eps } else { Sign::Plus };
        match family {
            Family::G2 => {
                if q.q_u64() == Some(2) {
                    return Err(SpecError::NotSimple("G2(2)".into()));
                }
            }
            Family::F4 | Family::E6 | Family::E7 | Family::E8 | Family::D4Triality => {}
            Family::SuzRee(sr) => {
                let base = sr.base();
                let label = GroupSpec::display_parts(family, eps, None, Some(&q));
                if q.p() != base || q.alpha() % 2 == 0 {
                    return Err(SpecError::Gate(format!("{label}: q must be {base}^(2m+1)")));
                }
                if q.alpha() == 1 {
                    return Err(match sr {
                        SuzRee::F4 => SpecError::NotSimple(format!(
                            "{label} (its derived subgroup is the Tits group; use 'Tits')"
                        )),
                        _ => SpecError::NotSimple(label),
                    });
                }
                n = Some((q.alpha() - 1) / 2);
            }
            _ => return Err(SpecError::Gate(format!("{family:?} is not an exceptional family"))),
        }
        Ok(GroupSpec { family, n, q: Some(q), eps, sporadic: None })
    }

    pub fn parse(text: &str) -> Result<Self, SpecError> {
        text.parse()
    }

    pub fn rank(&self) -> u32 {
        self.n.expect("family has a rank parameter")
    }

    pub fn field(&self) -> &PrimePower {
        self.q.as_ref().expect("family has a field")
    }

    pub fn characteristic(&self) -> Option<u64> {
        self.q.as_ref().map(|q| q.p())
    }

    fn display_parts(family: Family, eps: Sign, n: Option<u32>, q: Option<&PrimePower>) -> String {
        let tw = if eps.is_plus() { "" } else { "2" };
        let q = q.map(|q| q.to_string()).unwrap_or_default();
        match family {
            Family::A => format!("{tw}A:{}:{q}", n.unwrap_or(0)),
            Family::B => format!("B:{}:{q}", n.unwrap_or(0)),
            Family::C => format!("C:{}:{q}", n.unwrap_or(0)),
            Family::D => format!("{tw}D:{}:{q}", n.unwrap_or(0)),
            Family::G2 => format!("G2:{q}"),
            Family::F4 => format!("F4:{q}"),
            Family::E6 => format!("{tw}E6:{q}"),
            Family::E7 => format!("E7:{q}"),
            Family::E8 => format!("E8:{q}"),
            Family::D4Triality => format!("3D4:{q}"),
            Family::SuzRee(SuzRee::B2) => format!("2B2:{q}"),
            Family::SuzRee(SuzRee::G2) => format!("2G2:{q}"),
            Family::SuzRee(SuzRee::F4) => format!("2F4:{q}"),
            Family::Alt | Family::Sporadic | Family::Tits => String::new(),
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::Alt => write!(f, "Alt:{}", self.rank()),
            Family::Sporadic => write!(f, "Spor:{}", self.sporadic.unwrap_or("?")),
            Family::Tits => f.write_str("Tits"),
            fam => f.write_str(&GroupSpec::display_parts(fam, self.eps, self.n, self.q.as_ref())),
        }
    }
}

fn parse_q(text: &str) -> Result<PrimePower, SpecError> {
    let text = text.trim();
    if let Some((p, a)) = text.split_once('^') {
        let p: u64 = p.trim().parse().map_err(|_| SpecError::Grammar(text.into()))?;
        let a: u32 = a.trim().parse().map_err(|_| SpecError::Grammar(text.into()))?;
        return Ok(PrimePower::new(p, a)?);
    }
    let q: BigUint = text.parse().map_err(|_| SpecError::Grammar(text.into()))?;
    Ok(PrimePower::from_biguint(&q)?)
}

fn parse_n(text: &str, whole: &str) -> Result<u32, SpecError> {
    text.trim().parse().map_err(|_| SpecError::Grammar(whole.into()))
}

impl FromStr for GroupSpec {
    type Err = SpecError;

    fn from_str(text: &str) -> Result<Self, SpecError> {
        let whole = text.trim();
        let parts: Vec<&str> = whole.split(':').collect();
        let head = parts[0].trim();
        let grammar = || SpecError::Grammar(whole.into());
        let lower = head.to_ascii_lowercase();
        match (lower.as_str(), parts.len()) {
            ("tits", 1) => return Ok(GroupSpec::tits()),
            ("alt", 2) => return GroupSpec::alt(parse_n(parts[1], whole)?),
            ("spor", 2) => return GroupSpec::sporadic(parts[1].trim()),
            _ => {}
        }
        let classical = match head {
            "A" => Some((Family::A, Sign::Plus)),
            "2A" => Some((Family::A, Sign::Minus)),
            "B" => Some((Family::B, Sign::Plus)),
            "C" => Some((Family::C, Sign::Plus)),
            "D" => Some((Family::D, Sign::Plus)),
            "2D" => Some((Family::D, Sign::Minus)),
            _ => None,
        };
        if let Some((family, eps)) = classical {
            if parts.len() != 3 {
                return Err(grammar());
            }
            let n = parse_n(parts[1], whole)?;
            return GroupSpec::classical(family, eps, n, parse_q(parts[2])?);
        }
        let exceptional = match head {
            "G2" => Some((Family::G2, Sign::Plus)),
            "F4" => Some((Family::F4, Sign::Plus)),
            "E6" => Some((Family::E6, Sign::Plus)),
            "2E6" => Some((Family::E6, Sign::Minus)),
            "E7" => Some((Family::E7, Sign::Plus)),
            "E8" => Some((Family::E8, Sign::Plus)),
            "3D4" => Some((Family::D4Triality, Sign::Plus)),
            "2B2" => Some((Family::SuzRee(SuzRee::B2), Sign::Plus)),
            "2G2" => Some((Family::SuzRee(SuzRee::G2), Sign::Plus)),
            "2F4" => Some((Family::SuzRee(SuzRee::F4), Sign::Plus)),
            _ => None,
        };
        match exceptional {
            Some((family, eps)) if parts.len() == 2 => {
                GroupSpec::exceptional(family, eps, parse_q(parts[1])?)
            }
            _ => Err(grammar()),
        }
    }
}

/// Primes up to `n`, i.e. π(Alt_n) for `n ≥ 5`.
pub fn alt_pi(n: u32) -> Vec<u64> {
    numth::primes_up_to(n as usize).into_iter().map(u64::from).collect()
}

/// Index lists of the exceptional families, in untwisted labels.
pub fn exceptional_indices(family: Family, eps: Sign) -> &'static [u64] {
    match (family, eps) {
        (Family::G2, _) => &[1, 2, 3, 6],
        (Family::F4, _) => &[1, 2, 3, 4, 6, 8, 12],
        (Family::E6, Sign::Plus) => &[1, 2, 3, 4, 5, 6, 8, 9, 12],
        (Family::E6, Sign::Minus) => &[1, 2, 3, 4, 6, 8, 10, 12, 18],
        (Family::E7, _) => &[1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 14, 18],
        (Family::E8, _) => &[1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 14, 15, 18, 20, 24, 30],
        (Family::D4Triality, _) => &[1, 2, 3, 6, 12],
        _ => &[],
    }
}

/// |G| for the exceptional families.
pub fn exceptional_order(family: Family, eps: Sign, q: &PrimePower) -> BigUint {
    let qq = q.q();
    let f = |k: u32, sign: i8| -> BigUint {
        let v = qq.pow(k);
        if sign < 0 {
            v - 1u32
        } else {
            v + 1u32
        }
    };
    let g = |d: u64| BigUint::from(d);
    let (unip, parts, centre): (u32, Vec<BigUint>, BigUint) = match (family, eps) {
        (Family::G2, _) => (6, vec![f(2, -1), f(6, -1)], g(1)),
        (Family::F4, _) => (24, vec![f(2, -1), f(6, -1), f(8, -1), f(12, -1)], g(1)),
        (Family::E6, Sign::Plus) => (
            36,
            vec![f(2, -1), f(5, -1), f(6, -1), f(8, -1), f(9, -1), f(12, -1)],
            (qq - 1u32).gcd(&g(3)),
        ),
        (Family::E6, Sign::Minus) => (
            36,
            vec![f(2, -1), f(5, 1), f(6, -1), f(8, -1), f(9, 1), f(12, -1)],
            (qq + 1u32).gcd(&g(3)),
        ),
        (Family::E7, _) => (
            63,
            vec![f(2, -1), f(6, -1), f(8, -1), f(10, -1), f(12, -1), f(14, -1), f(18, -1)],
            (qq - 1u32).gcd(&g(2)),
        ),
        (Family::E8, _) => (
            120,
            vec![
                f(2, -1),
                f(8, -1),
                f(12, -1),
                f(14, -1),
                f(18, -1),
                f(20, -1),
                f(24, -1),
                f(30, -1),
            ],
            g(1),
        ),
        (Family::D4Triality, _) => {
            (12, vec![f(2, -1), f(6, -1), qq.pow(8) + qq.pow(4) + 1u32], g(1))
        }
        _ => panic!("{family:?} is not an exceptional family"),
    };
    let mut order = qq.pow(unip);
    for part in parts {
        order *= part;
    }
    order / centre
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ClassKind {
    R,
    S,
}

impl fmt::Display for ClassKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClassKind::R => "R",
            ClassKind::S => "S",
        })
    }
}

/// One vertex of the compact prime graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Vertex {
    /// The defining characteristic `p`.
    Char(u64),
    /// A prime listed on its own: a named prime split out of its class, or
    /// any prime of an alternating or sporadic group.
    Prime(u64),
    /// The primes of R_i or S_i left after the named primes are removed.
    Class { kind: ClassKind, index: u64 },
}

impl Vertex {
    pub fn r(index: u64) -> Vertex {
        Vertex::Class { kind: ClassKind::R, index }
    }

    pub fn s(index: u64) -> Vertex {
        Vertex::Class { kind: ClassKind::S, index }
    }

    pub fn label(&self) -> String {
        match self {
            Vertex::Char(p) | Vertex::Prime(p) => p.to_string(),
            Vertex::Class { kind, index } => format!("{kind}_{index}"),
        }
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// A class vertex together with the part of `k_i(q)` (or `m_i`) it still owns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassInfo {
    pub kind: ClassKind,
    pub index: u64,
    /// Nonemptiness certificate: `residue > 1`, and its prime divisors are the
    /// primes of the vertex.
    pub residue: BigUint,
}

/// A prime split out of its class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedPrime {
    pub prime: u64,
    /// Index `i` of the class R_i the prime belongs to (`None` for the
    /// Suzuki/Ree extras 2 and 3, which lie in no S_i).
    pub host: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassPartition {
    pub characteristic: Option<u64>,
    pub classes: Vec<ClassInfo>,
    pub named: Vec<NamedPrime>,
    /// I(G): indices whose full class is nonempty, before named primes are removed.
    pub index_set: Vec<u64>,
    /// N(G) for classical families; `None` elsewhere.
    pub high_band: Option<Vec<u64>>,
}

impl ClassPartition {
    /// Vertices in canonical order: characteristic, named primes, classes.
    pub fn vertices(&self) -> Vec<Vertex> {
        let mut out = Vec::new();
        out.extend(self.characteristic.map(Vertex::Char));
        out.extend(self.named.iter().map(|np| Vertex::Prime(np.prime)));
        out.extend(self.classes.iter().map(|c| Vertex::Class { kind: c.kind, index: c.index }));
        out
    }

    pub fn named_prime(&self, r: u64) -> Option<&NamedPrime> {
        self.named.iter().find(|np| np.prime == r)
    }

    pub fn class(&self, kind: ClassKind, index: u64) -> Option<&ClassInfo> {
        self.classes.iter().find(|c| c.kind == kind && c.index == index)
    }
}

/// I(G) for groups of Lie type.
pub fn index_set(spec: &GroupSpec) -> Vec<u64> {
    let eps = spec.eps;
    match spec.family {
        Family::A | Family::B | Family::C | Family::D => {
            let n = spec.rank() as u64;
            let q = spec.field();
            (1..=2 * n)
                .filter(|&i| match spec.family {
                    Family::A => nu_eps(i, eps) <= n,
                    Family::D => {
                        eta(i) <= n && !(eps.is_plus() && i == 2 * n)
                            && !(!eps.is_plus() && n % 2 == 1 && i == n)
                    }
                    _ => eta(i) <= n,
                })
                .filter(|&i| class_nonempty(i, q))
                .collect()
        }
        Family::SuzRee(sr) => (1..=sr.class_count() as u64)
            .filter(|&i| {
                numth::suzuki_ree_class_nonempty(sr, spec.rank(), i as u32).expect("index in range")
            })
            .collect(),
        fam if fam.is_exceptional() => {
            let q = spec.field();
            exceptional_indices(fam, eps).iter().copied().filter(|&i| class_nonempty(i, q)).collect()
        }
        _ => Vec::new(),
    }
}

/// Primes that get their own vertex, with the class index they come from.
fn named_primes(spec: &GroupSpec) -> Vec<NamedPrime> {
    let q = match &spec.q {
        Some(q) => q,
        None => return Vec::new(),
    };
    let p = q.p();
    let host = |r: u64| Some(prime_index(r, q).expect("r is not the characteristic"));
    let mut out = Vec::new();
    match spec.family {
        Family::A => {
            let n = spec.rank() as u64;
            if p != 2 {
                out.push(NamedPrime { prime: 2, host: host(2) });
            }
            let q_eps = if spec.eps.is_plus() { q.q() - 1u32 } else { q.q() + 1u32 };
            let d = q_eps.gcd(&BigUint::from(n)).to_u64().expect("gcd divides n");
            for r in numth::prime_divisors_u64(d) {
                if r != 2 {
                    out.push(NamedPrime { prime: r, host: host(r) });
                }
            }
        }
        Family::B | Family::C | Family::D if p != 2 => {
            out.push(NamedPrime { prime: 2, host: host(2) });
        }
        Family::G2 | Family::E6 if p != 3 => out.push(NamedPrime { prime: 3, host: host(3) }),
        Family::F4 if p != 2 => out.push(NamedPrime { prime: 2, host: host(2) }),
        Family::E8 if p != 5 => out.push(NamedPrime { prime: 5, host: host(5) }),
        Family::SuzRee(SuzRee::G2) => out.push(NamedPrime { prime: 2, host: None }),
        Family::SuzRee(SuzRee::F4) => out.push(NamedPrime { prime: 3, host: None }),
        _ => {}
    }
    out.sort_by_key(|np| np.prime);
    out
}

/// N(G) for classical families.
fn high_band(spec: &GroupSpec, index_set: &[u64]) -> Option<Vec<u64>> {
    let n = spec.rank() as u64;
    let band: Vec<u64> = match spec.family {
        Family::A => {
            index_set.iter().copied().filter(|&i| 2 * nu_eps(i, spec.eps) > n).collect()
        }
        Family::B | Family::C | Family::D => {
            index_set.iter().copied().filter(|&i| 2 * eta(i) > n).collect()
        }
        _ => return None,
    };
    Some(band)
}

/// π(G) split into the characteristic, named primes and residual classes.
pub fn partition(spec: &GroupSpec) -> ClassPartition {
    assert!(spec.family.is_lie(), "partition needs a group of Lie type");
    let indices = index_set(spec);
    let named = named_primes(spec);
    let classes = match spec.family {
        Family::SuzRee(sr) => indices
            .iter()
            .map(|&i| ClassInfo {
                kind: ClassKind::S,
                index: i,
                residue: numth::suzuki_ree_residue(sr, spec.rank(), i as u32).expect("in range"),
            })
            .collect(),
        _ => {
            let q = spec.field();
            indices
                .iter()
                .filter_map(|&i| {
                    let mut residue = greatest_primitive_divisor(i, q).value;
                    for np in named.iter().filter(|np| np.host == Some(i)) {
                        residue = strip_prime(&residue, np.prime);
                    }
                    (residue > BigUint::one())
                        .then_some(ClassInfo { kind: ClassKind::R, index: i, residue })
                })
                .collect()
        }
    };
    let high_band = if spec.family.is_classical() { high_band(spec, &indices) } else { None };
    ClassPartition { characteristic: spec.characteristic(), classes, named, index_set: indices, high_band }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(s: &str) -> GroupSpec {
        GroupSpec::parse(s).unwrap()
    }

    #[test]
    fn parse_examples() {
        let g = spec("2B2:8");
        assert_eq!(g.family, Family::SuzRee(SuzRee::B2));
        assert_eq!(g.field().alpha(), 3);
        assert!(matches!(GroupSpec::parse("B:2:2"), Err(SpecError::NotSimple(_))));
        assert_eq!(spec("Spor:M23").sporadic, Some("M23"));
        assert_eq!(spec("E8:7").field().p(), 7);
        assert_eq!(spec("A:3:2^3").field().q_u64(), Some(8));
        assert_eq!(spec("Spor:Fi24").sporadic, Some("Fi24'"));
    }

    #[test]
    fn gates() {
        for bad in [
            "Alt:4", "A:2:3", "A:1:5", "2A:3:2", "2A:2:5", "C:2:2", "D:3:3", "2D:3:5", "G2:2",
            "2B2:2", "2B2:4", "2G2:3", "2G2:9", "2F4:2", "A:3:6", "Spor:M13", "E9:3", "B:3",
        ] {
            assert!(GroupSpec::parse(bad).is_err(), "{bad} accepted");
        }
        match GroupSpec::parse("2F4:2") {
            Err(SpecError::NotSimple(msg)) => assert!(msg.contains("Tits")),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn display_round_trip() {
        for s in ["Alt:19", "Spor:O'N", "Tits", "2A:5:4", "B:4:3", "2D:7:2", "2E6:5", "2F4:8", "3D4:2"] {
            assert_eq!(spec(s).to_string(), s);
            assert_eq!(spec(&spec(s).to_string()), spec(s));
        }
    }

    #[test]
    fn index_set_examples() {
        let i = index_set(&spec("A:6:2"));
        assert!(!i.contains(&1) && !i.contains(&6));
        // R_1(2) and R_6(2) are both empty
        assert_eq!(index_set(&spec("3D4:2")), vec![2, 3, 12]);
        assert_eq!(index_set(&spec("B:2:3")), vec![2, 4]);
        assert!(!index_set(&spec("D:5:3")).contains(&10));
        assert!(!index_set(&spec("2D:5:3")).contains(&5));
    }

    #[test]
    fn partition_examples() {
        let b = partition(&spec("B:2:3"));
        assert_eq!(b.characteristic, Some(3));
        assert_eq!(b.named, vec![NamedPrime { prime: 2, host: Some(2) }]);
        assert_eq!(b.classes.len(), 1);
        assert_eq!((b.classes[0].index, b.classes[0].residue.clone()), (4, BigUint::from(5u32)));

        let r = partition(&spec("2G2:27"));
        assert_eq!(r.characteristic, Some(3));
        assert_eq!(r.named, vec![NamedPrime { prime: 2, host: None }]);
        let res: Vec<u64> = r.classes.iter().map(|c| c.residue.to_u64().unwrap()).collect();
        assert_eq!(res, vec![13, 7, 19, 37]);

        let f = partition(&spec("2F4:8"));
        assert!(f.class(ClassKind::S, 2).is_none());
    }

    #[test]
    fn exceptional_lists_divide_group_order() {
        let fams = [
            (Family::G2, Sign::Plus),
            (Family::F4, Sign::Plus),
            (Family::E6, Sign::Plus),
            (Family::E6, Sign::Minus),
            (Family::E7, Sign::Plus),
            (Family::E8, Sign::Plus),
            (Family::D4Triality, Sign::Plus),
        ];
        for q in [2u64, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32] {
            let q = PrimePower::from_u64(q).unwrap();
            for (fam, eps) in fams {
                let order = exceptional_order(fam, eps, &q);
                let mut rest = strip_prime(&order, q.p());
                for &i in exceptional_indices(fam, eps) {
                    let k = greatest_primitive_divisor(i, &q).value;
                    assert_eq!(&order % &k, BigUint::ZERO, "{fam:?} {q} k_{i}");
                    for r in numth::prime_divisors(&k, Default::default()).unwrap() {
                        while (&rest % &r) == BigUint::ZERO {
                            rest /= &r;
                        }
                    }
                }
                // nothing outside the listed classes
                assert_eq!(rest, BigUint::one(), "{fam:?}{eps} over {q}");
            }
        }
    }

    #[test]
    fn partition_is_disjoint() {
        for s in ["A:7:4", "2A:6:5", "B:5:7", "D:6:9", "E8:2", "E6:4", "F4:3", "2E6:2"] {
            let g = spec(s);
            let part = partition(&g);
            let mut seen = Vec::new();
            for c in &part.classes {
                for r in numth::prime_divisors(&c.residue, Default::default()).unwrap() {
                    let r = r.to_u64().unwrap();
                    assert_ne!(Some(r), part.characteristic);
                    assert!(part.named.iter().all(|np| np.prime != r), "{s}: {r}");
                    assert!(!seen.contains(&r));
                    seen.push(r);
                }
            }
        }
    }
}
