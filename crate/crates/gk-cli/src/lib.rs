//! Output documents for the `gk` binary and the JSON reader that loads them
//! back.

use std::fmt::Write as _;

use gk_core::adjacency::{Basis, Verdict};
use gk_core::cocliques::{ClassEntry, CocliqueReport, CompactGraph};
use gk_core::numth::{prime_divisors, FactorBudget, NumthError};
use gk_core::{ClassKind, Vertex};
use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VertexKind {
    Char,
    Prime,
    Class,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexDoc {
    pub id: String,
    pub kind: VertexKind,
    /// Decimal prime for `char`/`prime`, class index for `class`.
    pub value: String,
    /// "R" or "S" on class vertices; on explicit primes, the class they came from.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub class: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeDoc {
    pub a: String,
    pub b: String,
    pub basis: Basis,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassDoc {
    pub id: String,
    /// The part of the cyclotomic factor owned by the class, in decimal.
    pub residue: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub primes: Option<Vec<String>>,
}

/// The JSON form of a graph together with its coclique report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDocument {
    pub group: String,
    pub t: usize,
    pub theta: Vec<String>,
    pub theta_prime: Vec<Vec<String>>,
    pub vertices: Vec<VertexDoc>,
    pub edges: Vec<EdgeDoc>,
    pub classes: Vec<ClassDoc>,
    pub unresolved: Vec<[String; 2]>,
}

#[derive(Debug, thiserror::Error)]
pub enum ReadError {
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error("bad vertex {0}")]
    Vertex(String),
    #[error("edge or pair names unknown vertex {0}")]
    UnknownVertex(String),
    #[error("document lists explicit primes; only compact graphs can be rebuilt")]
    Explicit,
}

fn vertex_doc(v: &Vertex) -> VertexDoc {
    match *v {
        Vertex::Char(p) => VertexDoc { id: v.label(), kind: VertexKind::Char, value: p.to_string(), class: None },
        Vertex::Prime(r) => VertexDoc { id: v.label(), kind: VertexKind::Prime, value: r.to_string(), class: None },
        Vertex::Class { kind, index } => {
            VertexDoc { id: v.label(), kind: VertexKind::Class, value: index.to_string(), class: Some(kind.to_string()) }
        }
    }
}

fn labels(vs: &[Vertex]) -> Vec<String> {
    vs.iter().map(Vertex::label).collect()
}

impl GraphDocument {
    /// Compact document: one vertex per class or named prime.
    pub fn compact(g: &CompactGraph, report: &CocliqueReport) -> Self {
        let id = |i: usize| g.vertices[i].label();
        GraphDocument {
            group: g.group.clone(),
            t: report.t,
            theta: labels(&report.theta),
            theta_prime: report.theta_prime.iter().map(|tp| labels(tp)).collect(),
            vertices: g.vertices.iter().map(vertex_doc).collect(),
            edges: g.edges().into_iter().map(|(i, j, basis)| EdgeDoc { a: id(i), b: id(j), basis }).collect(),
            classes: g
                .classes
                .iter()
                .map(|c| ClassDoc { id: c.vertex.label(), residue: c.residue.to_string(), primes: None })
                .collect(),
            unresolved: g.unresolved().into_iter().map(|(i, j)| [id(i), id(j)]).collect(),
        }
    }

    /// Prime-level document: every class is factored and each of its primes
    /// becomes a vertex. Θ and Θ' stay at class level.
    pub fn explicit(g: &CompactGraph, report: &CocliqueReport, budget: FactorBudget) -> Result<Self, NumthError> {
        // (compact index, vertex) for every prime-level vertex
        let mut verts: Vec<(usize, VertexDoc)> = Vec::new();
        let mut classes = Vec::new();
        for (i, v) in g.vertices.iter().enumerate() {
            match v {
                Vertex::Class { .. } => {
                    let entry = g.classes.iter().find(|c| c.vertex == *v).expect("class vertex has an entry");
                    let primes: Vec<String> =
                        prime_divisors(&entry.residue, budget)?.iter().map(BigUint::to_string).collect();
                    for r in &primes {
                        verts.push((
                            i,
                            VertexDoc { id: r.clone(), kind: VertexKind::Prime, value: r.clone(), class: Some(v.label()) },
                        ));
                    }
                    classes.push(ClassDoc { id: v.label(), residue: entry.residue.to_string(), primes: Some(primes) });
                }
                _ => verts.push((i, vertex_doc(v))),
            }
        }
        let mut edges = Vec::new();
        let mut unresolved = Vec::new();
        for (x, (i, a)) in verts.iter().enumerate() {
            for (j, b) in &verts[x + 1..] {
                let verdict =
                    if i == j { Some(Verdict { adjacent: true, basis: Basis::SameClass }) } else { g.verdict(*i, *j) };
                match verdict {
                    Some(v) if v.adjacent => edges.push(EdgeDoc { a: a.id.clone(), b: b.id.clone(), basis: v.basis }),
                    Some(_) => {}
                    None => unresolved.push([a.id.clone(), b.id.clone()]),
                }
            }
        }
        Ok(GraphDocument {
            group: g.group.clone(),
            t: report.t,
            theta: labels(&report.theta),
            theta_prime: report.theta_prime.iter().map(|tp| labels(tp)).collect(),
            vertices: verts.into_iter().map(|(_, v)| v).collect(),
            edges,
            classes,
            unresolved,
        })
    }

    pub fn from_json(text: &str) -> Result<Self, ReadError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }

    fn is_explicit(&self) -> bool {
        self.classes.iter().any(|c| c.primes.is_some())
    }

    /// Rebuilds the compact graph: vertices, class residues, edges with
    /// their basis and unresolved pairs. Every other pair is nonadjacent;
    /// the basis of a non-edge is not part of the document and reads back as
    /// [`Basis::Criterion`].
    pub fn to_graph(&self) -> Result<CompactGraph, ReadError> {
        if self.is_explicit() {
            return Err(ReadError::Explicit);
        }
        let bad = |v: &VertexDoc| ReadError::Vertex(v.id.clone());
        let vertices: Vec<Vertex> = self
            .vertices
            .iter()
            .map(|v| {
                let n: u64 = v.value.parse().map_err(|_| bad(v))?;
                Ok(match (v.kind, v.class.as_deref()) {
                    (VertexKind::Char, _) => Vertex::Char(n),
                    (VertexKind::Prime, _) => Vertex::Prime(n),
                    (VertexKind::Class, Some("R")) => Vertex::Class { kind: ClassKind::R, index: n },
                    (VertexKind::Class, Some("S")) => Vertex::Class { kind: ClassKind::S, index: n },
                    (VertexKind::Class, _) => return Err(bad(v)),
                })
            })
            .collect::<Result<_, ReadError>>()?;
        let mut g = CompactGraph::new(self.group.clone(), vertices);
        let find = |id: &str| {
            self.vertices.iter().position(|v| v.id == id).ok_or_else(|| ReadError::UnknownVertex(id.to_string()))
        };
        for c in &self.classes {
            let i = find(&c.id)?;
            let residue: BigUint = c.residue.parse().map_err(|_| ReadError::Vertex(c.id.clone()))?;
            g.classes.push(ClassEntry { vertex: g.vertices[i], residue });
        }
        for i in 0..g.len() {
            for j in i + 1..g.len() {
                g.set(i, j, Verdict { adjacent: false, basis: Basis::Criterion });
            }
        }
        for e in &self.edges {
            g.set(find(&e.a)?, find(&e.b)?, Verdict { adjacent: true, basis: e.basis });
        }
        for [a, b] in &self.unresolved {
            g.clear(find(a)?, find(b)?);
        }
        Ok(g)
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        writeln!(out, "graph \"{}\" {{", self.group).unwrap();
        for v in &self.vertices {
            let shape = match v.kind {
                VertexKind::Char => "box",
                VertexKind::Prime => "ellipse",
                VertexKind::Class => "doublecircle",
            };
            writeln!(out, "  \"{}\" [label=\"{}\", shape={shape}];", v.id, v.id).unwrap();
        }
        for e in &self.edges {
            writeln!(out, "  \"{}\" -- \"{}\";", e.a, e.b).unwrap();
        }
        for [a, b] in &self.unresolved {
            writeln!(out, "  \"{a}\" -- \"{b}\" [style=dashed];").unwrap();
        }
        out.push_str("}\n");
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "group {}", self.group).unwrap();
        let vs: Vec<&str> = self.vertices.iter().map(|v| v.id.as_str()).collect();
        writeln!(out, "vertices ({}): {}", vs.len(), vs.join(" ")).unwrap();
        for c in &self.classes {
            match &c.primes {
                Some(p) => writeln!(out, "  {} = {{{}}}", c.id, p.join(",")).unwrap(),
                None => writeln!(out, "  {} | {}", c.id, c.residue).unwrap(),
            }
        }
        writeln!(out, "edges ({}):", self.edges.len()).unwrap();
        for e in &self.edges {
            let basis = serde_json::to_value(e.basis).unwrap();
            writeln!(out, "  {} -- {}  [{}]", e.a, e.b, basis.as_str().unwrap_or("?")).unwrap();
        }
        if !self.unresolved.is_empty() {
            writeln!(out, "unresolved ({}):", self.unresolved.len()).unwrap();
            for [a, b] in &self.unresolved {
                writeln!(out, "  {a} ?? {b}").unwrap();
            }
        }
        out.push_str(&decomposition_text(self.t, &self.theta, &self.theta_prime));
        out
    }
}

pub fn set_text(s: &[String]) -> String {
    format!("{{{}}}", s.join(","))
}

pub fn decomposition_text(t: usize, theta: &[String], theta_prime: &[Vec<String>]) -> String {
    let tp = if theta_prime.is_empty() {
        "∅".to_string()
    } else {
        theta_prime.iter().map(|s| set_text(s)).collect::<Vec<_>>().join(" ")
    };
    format!("t = {t}\nΘ = {}\nΘ' = {tp}\n", set_text(theta))
}
