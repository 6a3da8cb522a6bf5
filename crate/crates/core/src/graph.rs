//! Finite simple graphs, their edge and cover ideals, and the graph families
//! used by the verification harness.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::decomp::associated_primes;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{Monomial, RingContext};

/// A finite simple graph on labeled vertices.
///
/// Edges are stored as index pairs `(i, j)` with `i < j`, sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertices: Vec<String>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(vertices: Vec<String>, edges: Vec<(usize, usize)>) -> Result<Self> {
        let n = vertices.len();
        let mut seen_labels = BTreeSet::new();
        for v in &vertices {
            if v.is_empty() {
                return Err(Error::InvalidGraph("empty vertex label".into()));
            }
            if !seen_labels.insert(v.as_str()) {
                return Err(Error::InvalidGraph(format!("duplicate vertex {v:?}")));
            }
        }
        let mut normalized = BTreeSet::new();
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({a}, {b}) names a missing vertex"
                )));
            }
            if a == b {
                return Err(Error::InvalidGraph(format!("loop at {:?}", vertices[a])));
            }
            if !normalized.insert((a.min(b), a.max(b))) {
                return Err(Error::InvalidGraph(format!(
                    "duplicate edge ({:?}, {:?})",
                    vertices[a], vertices[b]
                )));
            }
        }
        Ok(Self {
            vertices,
            edges: normalized.into_iter().collect(),
        })
    }

    /// Builds a graph from labeled edges.
    pub fn from_labels<S: AsRef<str>>(vertices: Vec<String>, edges: &[(S, S)]) -> Result<Self> {
        let index: HashMap<&str, usize> = vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.as_str(), i))
            .collect();
        let lookup = |s: &str| {
            index
                .get(s)
                .copied()
                .ok_or_else(|| Error::InvalidGraph(format!("edge endpoint {s:?} is not a vertex")))
        };
        let pairs = edges
            .iter()
            .map(|(a, b)| Ok((lookup(a.as_ref())?, lookup(b.as_ref())?)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(vertices, pairs)
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == label)
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.binary_search(&(a.min(b), a.max(b))).is_ok()
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    /// The polynomial ring with one variable per vertex, in vertex order.
    pub fn ring(&self) -> Arc<RingContext> {
        RingContext::new(self.vertices.clone()).expect("vertex labels are distinct")
    }

    /// A two-colouring `(side_0, side_1)` if one exists. Each component is
    /// coloured from its lowest-indexed vertex, which goes to side 0.
    pub fn bipartition(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let adj = self.adjacency();
        let mut colour: Vec<Option<bool>> = vec![None; self.vertices.len()];
        for start in 0..self.vertices.len() {
            if colour[start].is_some() {
                continue;
            }
            colour[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                let c = colour[u].expect("queued vertices are coloured");
                for &w in &adj[u] {
                    match colour[w] {
                        None => {
                            colour[w] = Some(!c);
                            queue.push_back(w);
                        }
                        Some(d) if d == c => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let (mut a, mut b) = (Vec::new(), Vec::new());
        for (i, c) in colour.into_iter().enumerate() {
            if c == Some(true) {
                b.push(i);
            } else {
                a.push(i);
            }
        }
        Some((a, b))
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Whether all associated primes of `I(G)` have the same height.
    pub fn is_unmixed_edge_ideal(&self) -> Result<bool> {
        let ass = associated_primes(&edge_ideal(self)?)?;
        Ok(ass.windows(2).all(|w| w[0].height() == w[1].height()))
    }

    /// Complete multipartite test: non-adjacency must be an equivalence
    /// relation with at least two classes.
    pub fn is_complete_multipartite(&self) -> bool {
        let n = self.vertices.len();
        let mut class: Vec<Option<usize>> = vec![None; n];
        let mut classes = 0;
        for i in 0..n {
            if class[i].is_some() {
                continue;
            }
            for (j, slot) in class.iter_mut().enumerate().skip(i) {
                if j == i || !self.has_edge(i, j) {
                    if slot.is_some() {
                        return false;
                    }
                    *slot = Some(classes);
                }
            }
            classes += 1;
        }
        if classes < 2 {
            return false;
        }
        (0..n).all(|i| (i + 1..n).all(|j| self.has_edge(i, j) == (class[i] != class[j])))
    }

    /// Exhaustive search for a partition of the vertices into at least two
    /// blocks whose complete multipartite graph is exactly this graph.
    /// Returns the first partition found.
    pub fn multipartite_partition_search(&self) -> Option<Vec<Vec<usize>>> {
        fn place(g: &Graph, v: usize, blocks: &mut Vec<Vec<usize>>) -> bool {
            if v == g.vertices.len() {
                return blocks.len() >= 2;
            }
            for b in 0..=blocks.len() {
                let fits = blocks
                    .iter()
                    .enumerate()
                    .all(|(k, block)| block.iter().all(|&u| g.has_edge(u, v) == (k != b)));
                if !fits {
                    continue;
                }
                if b == blocks.len() {
                    blocks.push(vec![v]);
                } else {
                    blocks[b].push(v);
                }
                if place(g, v + 1, blocks) {
                    return true;
                }
                if blocks[b].len() == 1 {
                    blocks.pop();
                } else {
                    blocks[b].pop();
                }
            }
            false
        }
        let mut blocks = Vec::new();
        place(self, 0, &mut blocks).then_some(blocks)
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "graph on {} vertices with edges ", self.vertices.len())?;
        let edges: Vec<String> = self
            .edges
            .iter()
            .map(|&(a, b)| format!("{}-{}", self.vertices[a], self.vertices[b]))
            .collect();
        write!(f, "[{}]", edges.join(", "))
    }
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    vertices: Vec<String>,
    edges: Vec<(String, String)>,
}

/// `{"vertices":["x1","y1"],"edges":[["x1","y1"]]}`
impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        GraphRepr {
            vertices: self.vertices.clone(),
            edges: self
                .edges
                .iter()
                .map(|&(a, b)| (self.vertices[a].clone(), self.vertices[b].clone()))
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = GraphRepr::deserialize(deserializer)?;
        Graph::from_labels(repr.vertices, &repr.edges).map_err(serde::de::Error::custom)
    }
}

/// `I(G) = (x_i x_j : {i, j} ∈ E(G))`.
pub fn edge_ideal(g: &Graph) -> Result<MonomialIdeal> {
    if g.edges.is_empty() {
        return Err(Error::Edgeless { op: "edge_ideal" });
    }
    let dim = g.vertex_count();
    let gens = g
        .edges
        .iter()
        .map(|&(a, b)| Monomial::squarefree(&[a, b], dim))
        .collect();
    MonomialIdeal::new(g.ring(), gens)
}

/// `J(G) = ⋂_{{i, j} ∈ E(G)} (x_i, x_j)`.
pub fn cover_ideal(g: &Graph) -> Result<MonomialIdeal> {
    if g.edges.is_empty() {
        return Err(Error::Edgeless { op: "cover_ideal" });
    }
    let ring = g.ring();
    let primes: Vec<MonomialIdeal> = g
        .edges
        .iter()
        .map(|&(a, b)| MonomialIdeal::generated_by_variables(ring.clone(), &[a, b]))
        .collect();
    Ok(MonomialIdeal::intersect_all(&ring, &primes))
}

/// Minimal vertex covers, as sorted index sets, in the generator order of
/// `J(G)`.
pub fn minimal_vertex_covers(g: &Graph) -> Result<Vec<Vec<usize>>> {
    Ok(cover_ideal(g)?
        .generators()
        .iter()
        .map(Monomial::support)
        .collect())
}

/// A named graph family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyTag {
    /// `K_{p1,p2}` on `x1..x{p1}`, `y1..y{p2}`, with `p1 ≤ p2`.
    CompleteBipartite(usize, usize),
    /// `K_m` on `x1..xm`.
    Complete(usize),
    /// The cycle `x1 - x2 - … - xu - x1`.
    Cycle(usize),
    /// `K_m^s`: `K_m` on `x1..xm` with pendant vertices `x{j}_{l}` attached
    /// to `xj` for `1 ≤ l ≤ s`.
    Pendant(usize, usize),
    /// `G_k`: vertices `{v}_{p}` for `1 ≤ p ≤ k`, and an edge between
    /// `{u}_{p}` and `{v}_{q}` whenever `uv` is an edge and `p + q ≤ k + 1`.
    Fakhari(Box<FamilyTag>, usize),
    /// `G_2` for `G = K_{p,p}` on `a1..ap`, `b1..bp`, relabeled to
    /// `x1..x{2p}`, `y1..y{2p}` with `x_i = a_{i,2}`, `x_{p+r} = a_{r,1}`,
    /// `y_j = b_{j,1}` and `y_{p+s} = b_{s,2}`.
    HBip(usize),
    Custom(Graph),
}

fn numbered(prefix: &str, m: usize) -> Vec<String> {
    (1..=m).map(|i| format!("{prefix}{i}")).collect()
}

fn positive(value: usize, what: &str) -> Result<()> {
    if value == 0 {
        Err(Error::InvalidFamily(format!("{what} must be positive")))
    } else {
        Ok(())
    }
}

impl FamilyTag {
    pub fn build(&self) -> Result<Graph> {
        match self {
            FamilyTag::CompleteBipartite(p1, p2) => {
                positive(*p1, "p1")?;
                positive(*p2, "p2")?;
                if p1 > p2 {
                    return Err(Error::InvalidFamily(format!(
                        "Kb({p1},{p2}) needs p1 <= p2"
                    )));
                }
                complete_bipartite(&numbered("x", *p1), &numbered("y", *p2))
            }
            FamilyTag::Complete(m) => {
                positive(*m, "m")?;
                let edges = (0..*m)
                    .flat_map(|i| (i + 1..*m).map(move |j| (i, j)))
                    .collect();
                Graph::new(numbered("x", *m), edges)
            }
            FamilyTag::Cycle(u) => {
                if *u < 3 {
                    return Err(Error::InvalidFamily(format!(
                        "C({u}) needs at least 3 vertices"
                    )));
                }
                let edges = (0..*u).map(|i| (i, (i + 1) % u)).collect();
                Graph::new(numbered("x", *u), edges)
            }
            FamilyTag::Pendant(m, s) => {
                positive(*m, "m")?;
                positive(*s, "s")?;
                let mut vertices = numbered("x", *m);
                let mut edges: Vec<(usize, usize)> = (0..*m)
                    .flat_map(|i| (i + 1..*m).map(move |j| (i, j)))
                    .collect();
                for j in 0..*m {
                    for l in 1..=*s {
                        edges.push((j, vertices.len()));
                        vertices.push(format!("x{}_{l}", j + 1));
                    }
                }
                Graph::new(vertices, edges)
            }
            FamilyTag::Fakhari(inner, k) => {
                positive(*k, "k")?;
                fakhari(&inner.build()?, *k)
            }
            FamilyTag::HBip(p) => {
                positive(*p, "p")?;
                hbip(*p)
            }
            FamilyTag::Custom(g) => Ok(g.clone()),
        }
    }
}

fn complete_bipartite(left: &[String], right: &[String]) -> Result<Graph> {
    let mut vertices = left.to_vec();
    vertices.extend_from_slice(right);
    let l = left.len();
    let edges = (0..l)
        .flat_map(|i| (0..right.len()).map(move |j| (i, l + j)))
        .collect();
    Graph::new(vertices, edges)
}

/// The graph `G_k`; vertex `{v}_{p}` sits at index `k·i + p − 1` where `i`
/// is the index of `v`.
pub fn fakhari(g: &Graph, k: usize) -> Result<Graph> {
    positive(k, "k")?;
    let vertices = g
        .vertices
        .iter()
        .flat_map(|v| (1..=k).map(move |p| format!("{v}_{p}")))
        .collect();
    let mut edges = Vec::new();
    for &(a, b) in &g.edges {
        for p in 1..=k {
            for q in 1..=k + 1 - p {
                edges.push((k * a + p - 1, k * b + q - 1));
            }
        }
    }
    Graph::new(vertices, edges)
}

fn hbip(p: usize) -> Result<Graph> {
    let g2 = fakhari(
        &complete_bipartite(&numbered("a", p), &numbered("b", p))?,
        2,
    )?;
    let mut rename: HashMap<String, String> = HashMap::new();
    for i in 1..=p {
        rename.insert(format!("a{i}_2"), format!("x{i}"));
        rename.insert(format!("a{i}_1"), format!("x{}", p + i));
        rename.insert(format!("b{i}_1"), format!("y{i}"));
        rename.insert(format!("b{i}_2"), format!("y{}", p + i));
    }
    let mut vertices = numbered("x", 2 * p);
    vertices.extend(numbered("y", 2 * p));
    let edges: Vec<(String, String)> = g2
        .edges
        .iter()
        .map(|&(a, b)| {
            (
                rename[&g2.vertices[a]].clone(),
                rename[&g2.vertices[b]].clone(),
            )
        })
        .collect();
    Graph::from_labels(vertices, &edges)
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyTag::CompleteBipartite(a, b) => write!(f, "Kb({a},{b})"),
            FamilyTag::Complete(m) => write!(f, "K({m})"),
            FamilyTag::Cycle(u) => write!(f, "C({u})"),
            FamilyTag::Pendant(m, s) => write!(f, "Kpend({m},{s})"),
            FamilyTag::Fakhari(g, k) => write!(f, "fakhari({g},{k})"),
            FamilyTag::HBip(p) => write!(f, "hbip({p})"),
            FamilyTag::Custom(g) => write!(f, "custom({} vertices)", g.vertex_count()),
        }
    }
}

struct FamilyParser<'a> {
    src: &'a str,
    pos: usize,
}

impl FamilyParser<'_> {
    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            line: 1,
            column: self.src[..self.pos].chars().count() + 1,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(char::is_whitespace) {
            self.pos += self.src[self.pos..]
                .chars()
                .next()
                .map_or(0, char::len_utf8);
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        self.skip_ws();
        if self.src[self.pos..].starts_with(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            Err(self.error(format!("expected {c:?}")))
        }
    }

    fn word(&mut self) -> &str {
        self.skip_ws();
        let start = self.pos;
        let len = self.src[start..]
            .find(|c: char| !c.is_ascii_alphabetic())
            .unwrap_or(self.src.len() - start);
        self.pos += len;
        &self.src[start..start + len]
    }

    fn number(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        let len = self.src[start..]
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(self.src.len() - start);
        if len == 0 {
            return Err(self.error("expected a number"));
        }
        self.pos += len;
        self.src[start..start + len]
            .parse()
            .map_err(|_| self.error("number out of range"))
    }

    fn family(&mut self) -> Result<FamilyTag> {
        let name_at = self.pos;
        let name = self.word().to_ascii_lowercase();
        self.expect('(')?;
        let tag = match name.as_str() {
            "kb" => {
                let a = self.number()?;
                self.expect(',')?;
                FamilyTag::CompleteBipartite(a, self.number()?)
            }
            "k" => FamilyTag::Complete(self.number()?),
            "c" => FamilyTag::Cycle(self.number()?),
            "kpend" => {
                let m = self.number()?;
                self.expect(',')?;
                FamilyTag::Pendant(m, self.number()?)
            }
            "fakhari" => {
                let inner = self.family()?;
                self.expect(',')?;
                FamilyTag::Fakhari(Box::new(inner), self.number()?)
            }
            "hbip" => FamilyTag::HBip(self.number()?),
            _ => {
                self.pos = name_at;
                return Err(self.error(format!("unknown graph family {name:?}")));
            }
        };
        self.expect(')')?;
        Ok(tag)
    }
}

/// Parses `Kb(2,3)`, `K(4)`, `C(5)`, `Kpend(3,2)`, `fakhari(K(3),2)` and
/// `hbip(2)`. Family names are case-insensitive.
impl FromStr for FamilyTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut parser = FamilyParser { src: s, pos: 0 };
        let tag = parser.family()?;
        parser.skip_ws();
        if parser.pos != s.len() {
            return Err(parser.error("trailing input"));
        }
        Ok(tag)
    }
}

/// `reg(R/J(G)^{(n)})` from the closed forms available for complete
/// bipartite and complete graphs: `n·p2 + p1 − 2` for `K_{p1,p2}` and
/// `n(m − 1) − 1` for `K_m`.
pub fn reg_closed_form(tag: &FamilyTag, n: u64) -> Result<i64> {
    let n = i64::try_from(n).map_err(|_| Error::InvalidFamily("n is too large".into()))?;
    let as_i64 = |v: usize| i64::try_from(v).expect("family parameter fits in i64");
    match tag {
        FamilyTag::CompleteBipartite(p1, p2) if p1 <= p2 && *p1 > 0 => {
            Ok(n * as_i64(*p2) + as_i64(*p1) - 2)
        }
        FamilyTag::Complete(m) if *m >= 2 => Ok(n * (as_i64(*m) - 1) - 1),
        other => Err(Error::UnsupportedFamily(other.to_string())),
    }
}
