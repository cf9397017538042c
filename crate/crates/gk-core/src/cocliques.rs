//! Compact graphs, maximum cocliques and the Θ/Θ' decomposition.

use fixedbitset::FixedBitSet;
use num_bigint::BigUint;
use thiserror::Error;

use crate::adjacency::{adjacent_alt, vertex_adjacency, AdjError, Basis, Verdict};
use crate::groupspec::{alt_pi, partition, Family, GroupSpec, Vertex};

#[derive(Debug, Error)]
pub enum CocliqueError {
    #[error(transparent)]
    Adjacency(#[from] AdjError),
    #[error(transparent)]
    Data(#[from] crate::refdata::DataError),
    #[error("maximum cocliques depend on unresolved pair {0} -- {1}")]
    Unresolved(Vertex, Vertex),
    #[error("{0} unresolved pairs is too many to complete both ways")]
    TooManyUnresolved(usize),
    #[error("decomposition fails for {group}: {witness}")]
    Decomposition { group: String, witness: String },
}

/// A class vertex and the part of its cyclotomic factor it owns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassEntry {
    pub vertex: Vertex,
    pub residue: BigUint,
}

/// Prime graph with one vertex per class (or per prime, for alternating and
/// sporadic groups).
#[derive(Debug, Clone)]
pub struct CompactGraph {
    pub group: String,
    pub vertices: Vec<Vertex>,
    pub classes: Vec<ClassEntry>,
    /// Upper triangle, row-major; `None` marks a pair no rule covers.
    verdicts: Vec<Option<Verdict>>,
}

impl CompactGraph {
    pub fn new(group: impl Into<String>, vertices: Vec<Vertex>) -> Self {
        let n = vertices.len();
        CompactGraph { group: group.into(), vertices, classes: Vec::new(), verdicts: vec![None; n * n.saturating_sub(1) / 2] }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    fn slot(&self, i: usize, j: usize) -> usize {
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        assert!(i != j && j < self.len(), "no pair ({i}, {j})");
        // pairs (0,1..n), (1,2..n), ...
        i * (2 * self.len() - i - 1) / 2 + (j - i - 1)
    }

    pub fn set(&mut self, i: usize, j: usize, verdict: Verdict) {
        let s = self.slot(i, j);
        self.verdicts[s] = Some(verdict);
    }

    /// Marks a pair as unresolved.
    pub fn clear(&mut self, i: usize, j: usize) {
        let s = self.slot(i, j);
        self.verdicts[s] = None;
    }

    pub fn verdict(&self, i: usize, j: usize) -> Option<Verdict> {
        self.verdicts[self.slot(i, j)]
    }

    /// Adjacency; unresolved pairs count as nonadjacent.
    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        i != j && self.verdict(i, j).is_some_and(|v| v.adjacent)
    }

    pub fn index_of(&self, v: &Vertex) -> Option<usize> {
        self.vertices.iter().position(|w| w == v)
    }

    pub fn edges(&self) -> Vec<(usize, usize, Basis)> {
        let mut out = Vec::new();
        for i in 0..self.len() {
            for j in i + 1..self.len() {
                if let Some(v) = self.verdict(i, j).filter(|v| v.adjacent) {
                    out.push((i, j, v.basis));
                }
            }
        }
        out
    }

    pub fn unresolved(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.len() {
            for j in i + 1..self.len() {
                if self.verdict(i, j).is_none() {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn is_coclique(&self, set: &[usize]) -> bool {
        set.iter().enumerate().all(|(a, &i)| set[a + 1..].iter().all(|&j| i != j && !self.adjacent(i, j)))
    }

    pub fn is_clique(&self, set: &[usize]) -> bool {
        set.iter().enumerate().all(|(a, &i)| set[a + 1..].iter().all(|&j| self.adjacent(i, j)))
    }
}

/// The compact graph of any supported group.
pub fn build_graph(spec: &GroupSpec) -> Result<CompactGraph, CocliqueError> {
    match spec.family {
        Family::Alt => Ok(alt_graph(spec.rank() as u64)),
        Family::Sporadic | Family::Tits => Ok(crate::refdata::sporadic_graph(spec)?),
        _ => {
            let part = partition(spec);
            let mut g = CompactGraph::new(spec.to_string(), part.vertices());
            g.classes = part
                .classes
                .iter()
                .map(|c| ClassEntry { vertex: Vertex::Class { kind: c.kind, index: c.index }, residue: c.residue.clone() })
                .collect();
            for i in 0..g.len() {
                for j in i + 1..g.len() {
                    let v = vertex_adjacency(spec, &part, &g.vertices[i], &g.vertices[j])?;
                    g.set(i, j, v);
                }
            }
            Ok(g)
        }
    }
}

pub fn alt_graph(n: u64) -> CompactGraph {
    let primes = alt_pi(n as u32);
    let mut g = CompactGraph::new(format!("Alt:{n}"), primes.iter().map(|&r| Vertex::Prime(r)).collect());
    for i in 0..primes.len() {
        for j in i + 1..primes.len() {
            g.set(i, j, Verdict { adjacent: adjacent_alt(n, primes[i], primes[j]), basis: Basis::Criterion });
        }
    }
    g
}

struct Search<'a> {
    /// `non[v]`: vertices other than v not adjacent to v.
    non: &'a [FixedBitSet],
    best: usize,
    found: Vec<Vec<usize>>,
}

impl Search<'_> {
    /// Greedy colouring of `p` in the "non-adjacent" graph; returns vertices
    /// in colour order together with their colour numbers (1-based).
    fn colour(&self, p: &FixedBitSet) -> Vec<(usize, usize)> {
        let mut uncoloured = p.clone();
        let mut out = Vec::with_capacity(p.count_ones(..));
        let mut colour = 0;
        while !uncoloured.is_clear() {
            colour += 1;
            let mut avail = uncoloured.clone();
            while let Some(v) = avail.ones().next() {
                avail.set(v, false);
                avail.difference_with(&self.non[v]);
                uncoloured.set(v, false);
                out.push((v, colour));
            }
        }
        out
    }

    fn expand(&mut self, current: &mut Vec<usize>, mut p: FixedBitSet) {
        let order = self.colour(&p);
        for &(v, colour) in order.iter().rev() {
            if current.len() + colour < self.best {
                return;
            }
            current.push(v);
            let mut next = p.clone();
            next.intersect_with(&self.non[v]);
            if next.is_clear() {
                match current.len().cmp(&self.best) {
                    std::cmp::Ordering::Greater => {
                        self.best = current.len();
                        self.found.clear();
                        self.found.push(current.clone());
                    }
                    std::cmp::Ordering::Equal => self.found.push(current.clone()),
                    std::cmp::Ordering::Less => {}
                }
            } else {
                self.expand(current, next);
            }
            current.pop();
            p.set(v, false);
        }
    }
}

/// Independence number and every maximum coclique (vertex indices, each
/// sorted, list sorted). Unresolved pairs are treated as nonadjacent.
fn max_cocliques_raw(g: &CompactGraph) -> (usize, Vec<Vec<usize>>) {
    let n = g.len();
    if n == 0 {
        return (0, Vec::new());
    }
    let non: Vec<FixedBitSet> = (0..n)
        .map(|i| {
            let mut b = FixedBitSet::with_capacity(n);
            for j in 0..n {
                if j != i && !g.adjacent(i, j) {
                    b.insert(j);
                }
            }
            b
        })
        .collect();
    let mut search = Search { non: &non, best: 0, found: Vec::new() };
    let mut all = FixedBitSet::with_capacity(n);
    all.insert_range(..);
    search.expand(&mut Vec::new(), all);
    let mut found = search.found;
    for c in &mut found {
        c.sort_unstable();
    }
    found.sort();
    found.dedup();
    (search.best, found)
}

/// Largest number of unresolved pairs tried in every completion.
const COMPLETION_LIMIT: usize = 12;

/// Independence number and all maximum cocliques. With unresolved pairs,
/// every completion is tried and must give the same answer.
pub fn max_cocliques(g: &CompactGraph) -> Result<(usize, Vec<Vec<usize>>), CocliqueError> {
    let open = g.unresolved();
    if open.is_empty() {
        return Ok(max_cocliques_raw(g));
    }
    if open.len() > COMPLETION_LIMIT {
        return Err(CocliqueError::TooManyUnresolved(open.len()));
    }
    let mut reference = None;
    for mask in 0u32..1 << open.len() {
        let mut h = g.clone();
        for (bit, &(i, j)) in open.iter().enumerate() {
            h.set(i, j, Verdict { adjacent: mask >> bit & 1 == 1, basis: Basis::Reconstructed });
        }
        let got = max_cocliques_raw(&h);
        match &reference {
            None => reference = Some(got),
            Some(r) if *r == got => {}
            Some(_) => {
                // name a pair whose flip alone changes the answer
                let witness = open
                    .iter()
                    .find(|&&(i, j)| {
                        let mut h = g.clone();
                        for &(a, b) in &open {
                            h.set(a, b, Verdict { adjacent: false, basis: Basis::Reconstructed });
                        }
                        let base = max_cocliques_raw(&h);
                        h.set(i, j, Verdict { adjacent: true, basis: Basis::Reconstructed });
                        max_cocliques_raw(&h) != base
                    })
                    .copied()
                    .unwrap_or(open[0]);
                return Err(CocliqueError::Unresolved(g.vertices[witness.0], g.vertices[witness.1]));
            }
        }
    }
    Ok(reference.expect("at least one completion"))
}

/// Maximum cocliques split into the part common to all of them (Θ) and the
/// remainders (Θ').
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CocliqueReport {
    pub group: String,
    pub t: usize,
    pub cocliques: Vec<Vec<Vertex>>,
    pub theta: Vec<Vertex>,
    /// Empty when the maximum coclique is unique.
    pub theta_prime: Vec<Vec<Vertex>>,
}

impl CocliqueReport {
    fn from_indices(g: &CompactGraph, t: usize, sets: &[Vec<usize>]) -> Self {
        let core: Vec<usize> = match sets.first() {
            Some(first) => first.iter().copied().filter(|v| sets.iter().all(|c| c.contains(v))).collect(),
            None => Vec::new(),
        };
        let vx = |ix: &[usize]| ix.iter().map(|&i| g.vertices[i]).collect::<Vec<_>>();
        let theta_prime: Vec<Vec<Vertex>> = if sets.len() <= 1 {
            Vec::new()
        } else {
            sets.iter().map(|c| vx(&c.iter().copied().filter(|v| !core.contains(v)).collect::<Vec<_>>())).collect()
        };
        CocliqueReport {
            group: g.group.clone(),
            t,
            cocliques: sets.iter().map(|c| vx(c)).collect(),
            theta: vx(&core),
            theta_prime,
        }
    }

    /// Checks directly against the graph that Θ ∪ θ' is a coclique of size t
    /// for every θ' ∈ Θ', that these are all the maximum cocliques, and that
    /// |Θ'| ≠ 1.
    pub fn check_decomposition(&self, g: &CompactGraph) -> Result<(), CocliqueError> {
        let fail = |witness: String| Err(CocliqueError::Decomposition { group: self.group.clone(), witness });
        if self.theta_prime.len() == 1 {
            return fail("exactly one element in Θ'".into());
        }
        let mut unions: Vec<Vec<Vertex>> = if self.theta_prime.is_empty() {
            vec![self.theta.clone()]
        } else {
            self.theta_prime.iter().map(|tp| [self.theta.as_slice(), tp].concat()).collect()
        };
        for u in &mut unions {
            let ix: Option<Vec<usize>> = u.iter().map(|v| g.index_of(v)).collect();
            let Some(ix) = ix else { return fail(format!("{u:?} is not in the graph")) };
            if u.len() != self.t || !g.is_coclique(&ix) {
                return fail(format!("{u:?} is not a coclique of size {}", self.t));
            }
            u.sort();
        }
        unions.sort();
        let mut listed: Vec<Vec<Vertex>> = self.cocliques.iter().map(|c| {
            let mut c = c.clone();
            c.sort();
            c
        }).collect();
        listed.sort();
        if unions != listed {
            return fail("Θ ∪ Θ' does not reproduce the maximum cocliques".into());
        }
        Ok(())
    }
}

pub fn report_for(g: &CompactGraph) -> Result<CocliqueReport, CocliqueError> {
    let (t, sets) = max_cocliques(g)?;
    let report = CocliqueReport::from_indices(g, t, &sets);
    report.check_decomposition(g)?;
    Ok(report)
}

pub fn theta_structure(spec: &GroupSpec) -> Result<(CompactGraph, CocliqueReport), CocliqueError> {
    let g = build_graph(spec)?;
    let report = report_for(&g)?;
    Ok((g, report))
}

/// τ(n), its least element s_n and τ'(n) for Alt_n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AltStructure {
    pub n: u64,
    pub tau: Vec<u64>,
    pub s_n: u64,
    pub tau_prime: Vec<u64>,
}

pub fn alt_structure(n: u64) -> AltStructure {
    assert!(n >= 5, "Alt_n needs n ≥ 5");
    let primes = alt_pi(n as u32);
    let tau: Vec<u64> = primes.iter().copied().filter(|&r| 2 * r >= n).collect();
    let s_n = tau[0];
    let tau_prime = primes
        .iter()
        .copied()
        .filter(|&r| if r == 2 { 4 + s_n > n } else { 2 * r < n && r + s_n > n })
        .collect();
    AltStructure { n, tau, s_n, tau_prime }
}

/// The alternating decomposition from τ and τ' alone.
pub fn alt_report(n: u64) -> CocliqueReport {
    let s = alt_structure(n);
    let p = |v: &[u64]| v.iter().map(|&r| Vertex::Prime(r)).collect::<Vec<_>>();
    let (theta, theta_prime) = if s.tau_prime.len() <= 1 {
        let mut all = [s.tau.as_slice(), &s.tau_prime].concat();
        all.sort_unstable();
        (p(&all), Vec::new())
    } else {
        (p(&s.tau), s.tau_prime.iter().map(|&r| vec![Vertex::Prime(r)]).collect())
    };
    let mut cocliques: Vec<Vec<Vertex>> = if theta_prime.is_empty() {
        vec![theta.clone()]
    } else {
        theta_prime.iter().map(|tp| {
            let mut c = [theta.as_slice(), tp].concat();
            c.sort();
            c
        }).collect()
    };
    cocliques.sort();
    CocliqueReport { group: format!("Alt:{n}"), t: cocliques[0].len(), cocliques, theta, theta_prime }
}

/// Exact alternating decomposition. Agrees with [`alt_report`] except when
/// τ'(n) is empty and some prime below n/2 is nonadjacent to every element
/// of τ(n) other than s_n: such a prime can replace s_n, so s_n leaves θ.
pub fn alt_report_exact(n: u64) -> CocliqueReport {
    let s = alt_structure(n);
    if !s.tau_prime.is_empty() {
        return alt_report(n);
    }
    let second = s.tau.get(1).copied().unwrap_or(u64::MAX);
    let swaps: Vec<u64> = alt_pi(n as u32)
        .into_iter()
        .filter(|&r| 2 * r < n)
        .filter(|&r| (if r == 2 { 4 } else { r }).saturating_add(second) > n)
        .collect();
    if swaps.is_empty() {
        return alt_report(n);
    }
    let theta: Vec<Vertex> = s.tau[1..].iter().map(|&r| Vertex::Prime(r)).collect();
    let mut theta_prime: Vec<Vec<Vertex>> =
        std::iter::once(s.s_n).chain(swaps).map(|r| vec![Vertex::Prime(r)]).collect();
    theta_prime.sort();
    let mut cocliques: Vec<Vec<Vertex>> = theta_prime
        .iter()
        .map(|tp| {
            let mut c = [theta.as_slice(), tp].concat();
            c.sort();
            c
        })
        .collect();
    cocliques.sort();
    CocliqueReport { group: format!("Alt:{n}"), t: s.tau.len(), cocliques, theta, theta_prime }
}

/// π(G) ∖ θ(G) is a clique, for alternating and sporadic groups other than
/// M23. `None` when the statement does not apply.
pub fn clique_complement_check(spec: &GroupSpec) -> Result<Option<bool>, CocliqueError> {
    let applies = match spec.family {
        Family::Alt => true,
        Family::Sporadic => spec.sporadic != Some("M23"),
        _ => false,
    };
    if !applies {
        return Ok(None);
    }
    let (g, report) = theta_structure(spec)?;
    let rest: Vec<usize> = (0..g.len()).filter(|&i| !report.theta.contains(&g.vertices[i])).collect();
    Ok(Some(g.is_clique(&rest)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> CompactGraph {
        let mut g = CompactGraph::new("test", (0..n as u64).map(Vertex::Prime).collect());
        for i in 0..n {
            for j in i + 1..n {
                let adjacent = edges.contains(&(i, j)) || edges.contains(&(j, i));
                g.set(i, j, Verdict { adjacent, basis: Basis::Criterion });
            }
        }
        g
    }

    #[test]
    fn trivial_graphs() {
        assert_eq!(max_cocliques(&graph(4, &[])).unwrap(), (4, vec![vec![0, 1, 2, 3]]));
        let all: Vec<(usize, usize)> = (0..5).flat_map(|i| (i + 1..5).map(move |j| (i, j))).collect();
        let (t, sets) = max_cocliques(&graph(5, &all)).unwrap();
        assert_eq!((t, sets.len()), (1, 5));
    }

    #[test]
    fn cycle() {
        // C5 has five maximum cocliques of size 2
        let (t, sets) = max_cocliques(&graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])).unwrap();
        assert_eq!(t, 2);
        assert_eq!(sets, vec![vec![0, 2], vec![0, 3], vec![1, 3], vec![1, 4], vec![2, 4]]);
    }

    #[test]
    fn matches_brute_force() {
        // deterministic pseudo-random graphs
        let mut seed = 0x9e3779b97f4a7c15u64;
        let mut next = || {
            seed ^= seed << 13;
            seed ^= seed >> 7;
            seed ^= seed << 17;
            seed
        };
        for n in 1..=12 {
            for _ in 0..20 {
                let edges: Vec<(usize, usize)> = (0..n)
                    .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                    .collect::<Vec<_>>()
                    .into_iter()
                    .filter(|_| next() % 3 == 0)
                    .collect();
                let g = graph(n, &edges);
                let mut best = 0;
                let mut sets = Vec::new();
                for mask in 0u32..1 << n {
                    let s: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
                    if g.is_coclique(&s) {
                        if s.len() > best {
                            best = s.len();
                            sets.clear();
                        }
                        if s.len() == best {
                            sets.push(s);
                        }
                    }
                }
                sets.sort();
                assert_eq!(max_cocliques(&g).unwrap(), (best, sets));
            }
        }
    }

    #[test]
    fn unresolved_pairs() {
        // path 0-1-2 and a vertex 3 with (0, 3) open: t is 3 or 2
        let mut g = CompactGraph::new("open", (0..4).map(Vertex::Prime).collect());
        let e = |adjacent| Verdict { adjacent, basis: Basis::Criterion };
        g.set(0, 1, e(true));
        g.set(1, 2, e(true));
        g.set(0, 2, e(false));
        g.set(1, 3, e(false));
        g.set(2, 3, e(false));
        assert_eq!(g.unresolved(), vec![(0, 3)]);
        assert!(matches!(max_cocliques(&g), Err(CocliqueError::Unresolved(..))));
        // 2 is adjacent to 0 and 1, so (2, 3) cannot matter
        let mut h = CompactGraph::new("harmless", (0..4).map(Vertex::Prime).collect());
        for (i, j, a) in [(0, 1, false), (0, 2, true), (0, 3, false), (1, 2, true), (1, 3, false)] {
            h.set(i, j, e(a));
        }
        assert_eq!(max_cocliques(&h).unwrap(), (3, vec![vec![0, 1, 3]]));
    }

    #[test]
    fn alt_examples() {
        let g = alt_graph(5);
        assert!(g.edges().is_empty());
        assert_eq!(alt_structure(5).tau, vec![3, 5]);
        assert_eq!(alt_structure(5).tau_prime, vec![2]);
        assert_eq!(report_for(&g).unwrap().t, 3);
        let s10 = alt_structure(10);
        assert_eq!((s10.tau.clone(), s10.tau_prime.clone()), (vec![5, 7], vec![]));
        let r10 = report_for(&alt_graph(10)).unwrap();
        assert_eq!(r10.t, 2);
        // 2 and 5 can each complete {7}
        assert_eq!(r10.theta, vec![Vertex::Prime(7)]);
        assert_eq!(r10.theta_prime, vec![vec![Vertex::Prime(2)], vec![Vertex::Prime(5)]]);
        assert_ne!(alt_report(10), r10);
        // 2 ~ 7 in Alt_11, so τ'(11) = {5}
        let s11 = alt_structure(11);
        assert_eq!((s11.tau.clone(), s11.s_n, s11.tau_prime.clone()), (vec![7, 11], 7, vec![5]));
        let r11 = report_for(&alt_graph(11)).unwrap();
        assert_eq!(r11.cocliques, vec![vec![Vertex::Prime(5), Vertex::Prime(7), Vertex::Prime(11)]]);
        assert_eq!(alt_report(11), r11);
    }

    #[test]
    fn alt_exact_form_small() {
        for n in 5..=200 {
            let brute = report_for(&alt_graph(n)).unwrap();
            assert_eq!(brute, alt_report_exact(n), "Alt_{n}");
            assert_eq!(brute.t, alt_report(n).t, "Alt_{n}");
        }
    }

    #[test]
    fn suzuki_graph_is_empty() {
        let (g, r) = theta_structure(&GroupSpec::parse("2B2:8").unwrap()).unwrap();
        assert!(g.edges().is_empty());
        assert_eq!(g.vertices.len(), 4);
        assert_eq!(r.t, 4);
    }

    #[test]
    fn e8_report() {
        let (_, r) = theta_structure(&GroupSpec::parse("E8:3").unwrap()).unwrap();
        assert_eq!(r.t, 12);
        let idx: Vec<u64> = r.theta.iter().map(|v| match v {
            Vertex::Class { index, .. } => *index,
            other => panic!("{other:?}"),
        }).collect();
        assert_eq!(idx, vec![5, 7, 8, 9, 10, 12, 14, 15, 18, 20, 24, 30]);
        assert!(r.theta_prime.is_empty());
    }

    #[test]
    fn ree_f4_8() {
        let (_, r) = theta_structure(&GroupSpec::parse("2F4:8").unwrap()).unwrap();
        assert_eq!(r.t, 4);
        assert_eq!(r.theta, vec![Vertex::s(5), Vertex::s(6)]);
        let mut tp = r.theta_prime.clone();
        tp.sort();
        assert_eq!(tp, vec![
            vec![Vertex::Char(2), Vertex::s(4)],
            vec![Vertex::Prime(3), Vertex::s(3)],
            vec![Vertex::s(1), Vertex::s(4)],
            vec![Vertex::s(3), Vertex::s(4)],
        ]);
    }
}
