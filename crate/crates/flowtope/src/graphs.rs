//! Undirected multigraphs without loops.
//!
//! Besides the basic invariants this module enumerates the families `L_d`
//! (prime graphs of cycle rank `d` with all valencies ≥ 3) and builds the
//! quiver Γ* that puts a sink on every edge.

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};

use thiserror::Error;

use crate::quivers::Quiver;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("loop at vertex {0}")]
    Loop(String),
    #[error("duplicate edge id {0}")]
    DuplicateEdge(String),
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
    #[error("unknown edge {0}")]
    UnknownEdge(String),
    #[error("not contractible edge {0}")]
    NotContractible(String),
    #[error("chassis undefined")]
    ChassisUndefined,
    #[error("malformed graph text at line {0}: {1}")]
    Parse(usize, String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub id: String,
    pub u: String,
    pub v: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    vertices: Vec<String>,
    edges: Vec<Edge>,
}

impl Graph {
    pub fn new(vertices: Vec<String>, edges: Vec<Edge>) -> Result<Self, GraphError> {
        let vset: BTreeSet<String> = vertices.into_iter().collect();
        let mut ids = HashSet::new();
        for e in &edges {
            if e.u == e.v {
                return Err(GraphError::Loop(e.u.clone()));
            }
            for x in [&e.u, &e.v] {
                if !vset.contains(x) {
                    return Err(GraphError::UnknownVertex(x.clone()));
                }
            }
            if !ids.insert(e.id.clone()) {
                return Err(GraphError::DuplicateEdge(e.id.clone()));
            }
        }
        Ok(Graph { vertices: vset.into_iter().collect(), edges })
    }

    /// Edges given as endpoint pairs; edge ids are `e0, e1, …`.
    pub fn from_pairs(pairs: &[(&str, &str)]) -> Result<Self, GraphError> {
        let vertices = pairs.iter().flat_map(|&(a, b)| [a.to_string(), b.to_string()]).collect();
        let edges = pairs
            .iter()
            .enumerate()
            .map(|(i, &(a, b))| Edge { id: format!("e{i}"), u: a.into(), v: b.into() })
            .collect();
        Graph::new(vertices, edges)
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn valency(&self, v: &str) -> usize {
        self.edges.iter().filter(|e| e.u == v || e.v == v).count()
    }

    pub fn min_valency(&self) -> usize {
        self.vertices.iter().map(|v| self.valency(v)).min().unwrap_or(0)
    }

    fn index(&self) -> BTreeMap<&str, usize> {
        self.vertices.iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect()
    }

    fn multi(&self) -> Multi {
        let idx = self.index();
        let n = self.vertices.len();
        let mut m = vec![vec![0u32; n]; n];
        for e in &self.edges {
            let (a, b) = (idx[e.u.as_str()], idx[e.v.as_str()]);
            m[a][b] += 1;
            m[b][a] += 1;
        }
        Multi { m }
    }

    /// Parse the `u -- v` text format. A line with a single token declares an
    /// isolated vertex; `#` starts a comment.
    pub fn parse_text(text: &str) -> Result<Self, GraphError> {
        let mut vertices = Vec::new();
        let mut edges = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            match line.split("--").map(str::trim).collect::<Vec<_>>().as_slice() {
                [a] if !a.contains(char::is_whitespace) => vertices.push(a.to_string()),
                [a, b] if !a.is_empty() && !b.is_empty() => {
                    vertices.push(a.to_string());
                    vertices.push(b.to_string());
                    edges.push(Edge { id: format!("e{}", edges.len()), u: a.to_string(), v: b.to_string() });
                }
                _ => return Err(GraphError::Parse(lineno + 1, raw.to_string())),
            }
        }
        Graph::new(vertices, edges)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let used: BTreeSet<&str> = self.edges.iter().flat_map(|e| [e.u.as_str(), e.v.as_str()]).collect();
        for v in &self.vertices {
            if !used.contains(v.as_str()) {
                out.push_str(v);
                out.push('\n');
            }
        }
        for e in &self.edges {
            out.push_str(&format!("{} -- {}\n", e.u, e.v));
        }
        out
    }
}

/// |edges| − |vertices| + #components.
pub fn chi(g: &Graph) -> i64 {
    let m = g.multi();
    g.edges.len() as i64 - g.vertices.len() as i64 + m.components(None) as i64
}

pub fn is_prime_graph(g: &Graph) -> bool {
    if g.edges.is_empty() {
        return false;
    }
    let m = g.multi();
    if m.components(None) != 1 {
        return false;
    }
    (0..m.n()).all(|v| m.components(Some(v)) <= 1)
}

pub fn contract_edge(g: &Graph, e: &str) -> Result<Graph, GraphError> {
    let edge = g.edges.iter().find(|x| x.id == e).ok_or_else(|| GraphError::UnknownEdge(e.into()))?;
    let parallel = g
        .edges
        .iter()
        .filter(|x| (x.u == edge.u && x.v == edge.v) || (x.u == edge.v && x.v == edge.u))
        .count();
    if parallel != 1 {
        return Err(GraphError::NotContractible(e.into()));
    }
    let merged = merged_id(&edge.u, &edge.v);
    let rename = |x: &String| if *x == edge.u || *x == edge.v { merged.clone() } else { x.clone() };
    let vertices = g.vertices.iter().map(rename).collect();
    let edges = g
        .edges
        .iter()
        .filter(|x| x.id != e)
        .map(|x| Edge { id: x.id.clone(), u: rename(&x.u), v: rename(&x.v) })
        .collect();
    Graph::new(vertices, edges)
}

/// Deterministic name for the vertex obtained by identifying `a` and `b`.
pub fn merged_id(a: &str, b: &str) -> String {
    let (x, y) = if a <= b { (a, b) } else { (b, a) };
    format!("{x}+{y}")
}

fn two_cycle() -> Graph {
    Graph::from_pairs(&[("0", "1"), ("0", "1")]).expect("valid")
}

pub fn chassis(g: &Graph) -> Result<Graph, GraphError> {
    if !is_prime_graph(g) || chi(g) <= 0 {
        return Err(GraphError::ChassisUndefined);
    }
    // Contract edges lying on no cycle (bridges).
    let mut cur = g.clone();
    while let Some(id) = cur.edges.iter().find(|e| is_bridge(&cur, &e.id)).map(|e| e.id.clone()) {
        cur = contract_edge(&cur, &id)?;
    }
    let branch: BTreeSet<String> = cur.vertices.iter().filter(|v| cur.valency(v) >= 3).cloned().collect();
    if branch.is_empty() {
        return Ok(two_cycle());
    }
    // Replace each maximal path through valency-2 vertices by one edge.
    let mut seen: HashSet<String> = HashSet::new();
    let mut edges = Vec::new();
    for start in &branch {
        for first in cur.edges.iter().filter(|e| e.u == *start || e.v == *start) {
            if seen.contains(&first.id) {
                continue;
            }
            let mut path = vec![first.id.clone()];
            seen.insert(first.id.clone());
            let mut at = if first.u == *start { first.v.clone() } else { first.u.clone() };
            let mut via = first.id.clone();
            while !branch.contains(&at) {
                let next = cur
                    .edges
                    .iter()
                    .find(|e| e.id != via && (e.u == at || e.v == at))
                    .expect("valency-2 vertex has a second edge");
                seen.insert(next.id.clone());
                path.push(next.id.clone());
                at = if next.u == at { next.v.clone() } else { next.u.clone() };
                via = next.id.clone();
            }
            let id = path.iter().min().expect("non-empty").clone();
            if *start == at {
                return Err(GraphError::ChassisUndefined);
            }
            edges.push(Edge { id, u: start.clone(), v: at });
        }
    }
    edges.sort_by(|a, b| a.id.cmp(&b.id));
    Graph::new(branch.into_iter().collect(), edges)
}

fn is_bridge(g: &Graph, e: &str) -> bool {
    let edge = g.edges.iter().find(|x| x.id == e).expect("edge exists");
    let rest = Graph {
        vertices: g.vertices.clone(),
        edges: g.edges.iter().filter(|x| x.id != e).cloned().collect(),
    };
    let m = rest.multi();
    let idx = rest.index();
    !m.reachable(idx[edge.u.as_str()], None).contains(&idx[edge.v.as_str()])
}

pub fn graph_isomorphic(g1: &Graph, g2: &Graph) -> bool {
    if g1.vertices.len() != g2.vertices.len() || g1.edges.len() != g2.edges.len() {
        return false;
    }
    g1.multi().isomorphisms(&g2.multi(), true).next_found()
}

/// Vertex permutations preserving edge multiplicities, as maps on vertex ids.
pub fn automorphisms(g: &Graph) -> Vec<BTreeMap<String, String>> {
    let m = g.multi();
    let mut out = Vec::new();
    m.isomorphisms(&m, false).for_each(|perm| {
        out.push(
            perm.iter().enumerate().map(|(i, &j)| (g.vertices[i].clone(), g.vertices[j].clone())).collect(),
        );
    });
    out
}

pub fn is_contracted_descendant(child: &Graph, parent: &Graph) -> bool {
    if chi(child) != chi(parent) || child.vertices.len() > parent.vertices.len() {
        return false;
    }
    let target = child.vertices.len();
    let child_key = child.multi().canonical();
    let mut frontier = vec![parent.multi()];
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    loop {
        if frontier.is_empty() {
            return false;
        }
        if frontier[0].n() == target {
            return frontier.iter().any(|m| m.canonical() == child_key);
        }
        let mut next = Vec::new();
        for m in &frontier {
            for a in 0..m.n() {
                for b in a + 1..m.n() {
                    if m.m[a][b] == 1 {
                        let c = m.contract(a, b);
                        if seen.insert(c.canonical()) {
                            next.push(c);
                        }
                    }
                }
            }
        }
        frontier = next;
    }
}

/// The members of `L_d` (up to isomorphism) with at most `max_vertices`
/// vertices, sorted by vertex count and then canonical form.
pub fn enumerate_ld(d: usize, max_vertices: usize) -> Vec<Graph> {
    if d == 1 {
        return vec![two_cycle()];
    }
    if d == 0 {
        return vec![];
    }
    let top = (2 * (d - 1)).min(max_vertices);
    let mut out = Vec::new();
    for n in 2..=top {
        let m = n + d - 1;
        let mut keys: BTreeSet<Vec<u32>> = BTreeSet::new();
        for seq in degree_sequences(n, 2 * m as u32, 3) {
            for g in multigraphs_with_degrees(&seq) {
                if g.components(None) == 1 && (n == 2 || (0..n).all(|v| g.components(Some(v)) <= 1)) {
                    keys.insert(g.canonical());
                }
            }
        }
        out.extend(keys.into_iter().map(|k| Multi::from_key(n, &k).to_graph()));
    }
    out
}

pub fn enumerate_ld_3reg(d: usize) -> Vec<Graph> {
    if d < 2 {
        return vec![];
    }
    enumerate_ld(d, 2 * (d - 1)).into_iter().filter(|g| g.vertices.iter().all(|v| g.valency(v) == 3)).collect()
}

/// Γ*: vertex set Γ₀ ∪ {v_e}, with two arrows from the endpoints of `e` into
/// the new sink `v_e`. Sinks are named `[e]`, arrows `e:u` after the edge and
/// their tail.
pub fn star(g: &Graph) -> Quiver {
    let mut vertices: Vec<String> = g.vertices.clone();
    let mut arrows = Vec::new();
    for e in &g.edges {
        let sink = sink_id(&e.id);
        vertices.push(sink.clone());
        for tail in [&e.u, &e.v] {
            arrows.push((format!("{}:{}", e.id, tail), tail.clone(), sink.clone()));
        }
    }
    Quiver::new(vertices, arrows).expect("star quiver is loop-free")
}

pub fn sink_id(edge: &str) -> String {
    format!("[{edge}]")
}

// ---------------------------------------------------------------------------
// Index-level multigraphs

#[derive(Clone, Debug, PartialEq, Eq)]
struct Multi {
    m: Vec<Vec<u32>>,
}

struct IsoSearch<'a> {
    a: &'a Multi,
    b: &'a Multi,
    stop_at_first: bool,
}

impl Multi {
    fn n(&self) -> usize {
        self.m.len()
    }

    fn degree(&self, v: usize) -> u32 {
        self.m[v].iter().sum()
    }

    fn reachable(&self, start: usize, removed: Option<usize>) -> BTreeSet<usize> {
        let mut seen = BTreeSet::from([start]);
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for w in 0..self.n() {
                if self.m[v][w] > 0 && Some(w) != removed && seen.insert(w) {
                    queue.push_back(w);
                }
            }
        }
        seen
    }

    fn components(&self, removed: Option<usize>) -> usize {
        let mut seen = BTreeSet::new();
        let mut count = 0;
        for v in 0..self.n() {
            if Some(v) == removed || seen.contains(&v) {
                continue;
            }
            count += 1;
            seen.extend(self.reachable(v, removed));
        }
        count
    }

    fn contract(&self, a: usize, b: usize) -> Multi {
        let keep: Vec<usize> = (0..self.n()).filter(|&v| v != b).collect();
        let mut m = vec![vec![0u32; keep.len()]; keep.len()];
        for (i, &x) in keep.iter().enumerate() {
            for (j, &y) in keep.iter().enumerate() {
                if i == j {
                    continue;
                }
                let mut v = self.m[x][y];
                if x == a {
                    v += self.m[b][y];
                }
                if y == a {
                    v += self.m[x][b];
                }
                m[i][j] = v;
            }
        }
        Multi { m }
    }

    /// Lexicographically least column-major upper triangle over all
    /// relabelings that sort vertices by decreasing degree.
    fn canonical(&self) -> Vec<u32> {
        let n = self.n();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| std::cmp::Reverse(self.degree(v)));
        let degs: Vec<u32> = order.iter().map(|&v| self.degree(v)).collect();
        let mut best: Option<Vec<u32>> = None;
        let mut placed = Vec::with_capacity(n);
        let mut used = vec![false; n];
        let mut cur = Vec::new();
        self.canon_rec(&degs, &mut placed, &mut used, &mut cur, &mut best);
        let mut key = degs.clone();
        key.extend(best.unwrap_or_default());
        key
    }

    fn canon_rec(&self, degs: &[u32], placed: &mut Vec<usize>, used: &mut [bool], cur: &mut Vec<u32>, best: &mut Option<Vec<u32>>) {
        if placed.len() == self.n() {
            if best.as_ref().is_none_or(|b| *cur < *b) {
                *best = Some(cur.clone());
            }
            return;
        }
        let p = placed.len();
        for v in 0..self.n() {
            if used[v] || self.degree(v) != degs[p] {
                continue;
            }
            let start = cur.len();
            cur.extend(placed.iter().map(|&q| self.m[q][v]));
            // Prune once the prefix exceeds the best complete key found so far.
            let prune = best.as_ref().is_some_and(|b| cur[..] > b[..cur.len()]);
            if !prune {
                placed.push(v);
                used[v] = true;
                self.canon_rec(degs, placed, used, cur, best);
                used[v] = false;
                placed.pop();
            }
            cur.truncate(start);
        }
    }

    fn from_key(n: usize, key: &[u32]) -> Multi {
        let tri = &key[n..];
        let mut m = vec![vec![0u32; n]; n];
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                m[i][j] = tri[k];
                m[j][i] = tri[k];
                k += 1;
            }
        }
        Multi { m }
    }

    fn to_graph(&self) -> Graph {
        let vertices = (0..self.n()).map(|i| format!("v{i}")).collect();
        let mut edges = Vec::new();
        for i in 0..self.n() {
            for j in i + 1..self.n() {
                for _ in 0..self.m[i][j] {
                    edges.push(Edge { id: format!("e{}", edges.len()), u: format!("v{i}"), v: format!("v{j}") });
                }
            }
        }
        Graph::new(vertices, edges).expect("valid")
    }

    fn isomorphisms<'a>(&'a self, other: &'a Multi, stop_at_first: bool) -> IsoSearch<'a> {
        IsoSearch { a: self, b: other, stop_at_first }
    }
}

impl IsoSearch<'_> {
    fn next_found(self) -> bool {
        let mut found = false;
        self.run(&mut |_| found = true);
        found
    }

    fn for_each(self, mut f: impl FnMut(&[usize])) {
        self.run(&mut f);
    }

    fn run(&self, f: &mut dyn FnMut(&[usize])) {
        let n = self.a.n();
        if n != self.b.n() {
            return;
        }
        let mut da: Vec<u32> = (0..n).map(|v| self.a.degree(v)).collect();
        let mut db: Vec<u32> = (0..n).map(|v| self.b.degree(v)).collect();
        let (sa, sb) = (da.clone(), db.clone());
        da.sort();
        db.sort();
        if da != db {
            return;
        }
        let mut map = Vec::with_capacity(n);
        let mut used = vec![false; n];
        let mut stop = false;
        self.rec(&sa, &sb, &mut map, &mut used, f, &mut stop);
    }

    fn rec(
        &self,
        da: &[u32],
        db: &[u32],
        map: &mut Vec<usize>,
        used: &mut [bool],
        f: &mut dyn FnMut(&[usize]),
        stop: &mut bool,
    ) {
        if *stop {
            return;
        }
        let i = map.len();
        if i == da.len() {
            f(map);
            if self.stop_at_first {
                *stop = true;
            }
            return;
        }
        for j in 0..db.len() {
            if used[j] || da[i] != db[j] {
                continue;
            }
            if (0..i).any(|k| self.a.m[k][i] != self.b.m[map[k]][j]) {
                continue;
            }
            map.push(j);
            used[j] = true;
            self.rec(da, db, map, used, f, stop);
            used[j] = false;
            map.pop();
            if *stop {
                return;
            }
        }
    }
}

/// Non-increasing sequences of length `n`, entries ≥ `min`, summing to `total`.
fn degree_sequences(n: usize, total: u32, min: u32) -> Vec<Vec<u32>> {
    fn rec(n: usize, total: u32, min: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            if total == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let hi = max.min(total.saturating_sub(min * (n as u32 - 1)));
        for d in (min..=hi).rev() {
            cur.push(d);
            rec(n - 1, total - d, min, d, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, total, min, total, &mut Vec::new(), &mut out);
    out
}

/// All loopless multigraphs on labeled vertices with the given degrees.
fn multigraphs_with_degrees(degs: &[u32]) -> Vec<Multi> {
    let n = degs.len();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let mut out = Vec::new();
    let mut rem = degs.to_vec();
    let mut m = vec![vec![0u32; n]; n];
    fn rec(
        k: usize,
        pairs: &[(usize, usize)],
        rem: &mut [u32],
        m: &mut Vec<Vec<u32>>,
        out: &mut Vec<Multi>,
    ) {
        if k == pairs.len() {
            if rem.iter().all(|&r| r == 0) {
                out.push(Multi { m: m.clone() });
            }
            return;
        }
        let (i, j) = pairs[k];
        // Row i is complete after its last pair; its residual must vanish.
        let last_of_row = j == rem.len() - 1;
        let hi = rem[i].min(rem[j]);
        for c in 0..=hi {
            if last_of_row && rem[i] != c {
                continue;
            }
            rem[i] -= c;
            rem[j] -= c;
            m[i][j] = c;
            m[j][i] = c;
            rec(k + 1, pairs, rem, m, out);
            rem[i] += c;
            rem[j] += c;
        }
        m[i][j] = 0;
        m[j][i] = 0;
    }
    if n >= 2 {
        rec(0, &pairs, &mut rem, &mut m, &mut out);
    }
    out
}
