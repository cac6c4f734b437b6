//! Simple graphs on vertex set {0, .., n-1}, chordality via maximum
//! cardinality search, and chromatic polynomials by deletion-contraction.

use crate::polyalg::IntPoly;
use crate::{Error, Result};
use num_bigint::BigInt;
use std::collections::{BTreeSet, HashMap};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>, // always i < j
}

impl Graph {
    pub fn new<I: IntoIterator<Item = (usize, usize)>>(n: usize, edges: I) -> Result<Graph> {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange(u));
            }
            if v >= n {
                return Err(Error::VertexOutOfRange(v));
            }
            if u == v {
                return Err(Error::LoopEdge);
            }
            set.insert((u.min(v), u.max(v)));
        }
        Ok(Graph { n, edges: set })
    }

    pub fn empty(n: usize) -> Graph {
        Graph { n, edges: BTreeSet::new() }
    }

    pub fn complete(n: usize) -> Graph {
        let edges = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
        Graph::new(n, edges).unwrap()
    }

    pub fn path(n: usize) -> Graph {
        Graph::new(n, (0..n.saturating_sub(1)).map(|i| (i, i + 1))).unwrap()
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3);
        let mut g = Graph::path(n);
        g.edges.insert((0, n - 1));
        g
    }

    /// Decodes an edge set from a bitmask over the C(n,2) vertex pairs in
    /// lexicographic order. Used for exhaustive corpus enumeration.
    pub fn from_edge_mask(n: usize, mask: u64) -> Graph {
        let mut edges = BTreeSet::new();
        let mut bit = 0;
        for i in 0..n {
            for j in i + 1..n {
                if mask >> bit & 1 == 1 {
                    edges.insert((i, j));
                }
                bit += 1;
            }
        }
        Graph { n, edges }
    }

    pub fn edge_mask(&self) -> u64 {
        let mut mask = 0u64;
        let mut bit = 0;
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.has_edge(i, j) {
                    mask |= 1 << bit;
                }
                bit += 1;
            }
        }
        mask
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        (0..self.n).filter(|&u| u != v && self.has_edge(u, v)).collect()
    }

    pub fn delete_edge(&self, e: (usize, usize)) -> Result<Graph> {
        let key = (e.0.min(e.1), e.0.max(e.1));
        if !self.edges.contains(&key) {
            return Err(Error::InvalidEdge(format!("no edge {{{}, {}}}", e.0, e.1)));
        }
        let mut g = self.clone();
        g.edges.remove(&key);
        Ok(g)
    }

    /// Contracts an edge, keeping the smaller endpoint label and relabelling
    /// vertices above the removed one down by 1.
    pub fn contract_edge(&self, e: (usize, usize)) -> Result<Graph> {
        let (keep, gone) = (e.0.min(e.1), e.0.max(e.1));
        if !self.edges.contains(&(keep, gone)) {
            return Err(Error::InvalidEdge(format!("no edge {{{}, {}}}", e.0, e.1)));
        }
        let relabel = |v: usize| -> usize {
            if v == gone {
                keep
            } else if v > gone {
                v - 1
            } else {
                v
            }
        };
        let mut edges = BTreeSet::new();
        for &(u, v) in &self.edges {
            let (a, b) = (relabel(u), relabel(v));
            if a != b {
                edges.insert((a.min(b), a.max(b)));
            }
        }
        Ok(Graph { n: self.n - 1, edges })
    }

    /// Relabels so that the vertex at PEO position k becomes vertex k.
    pub fn relabel_by_peo(&self, peo: &Peo) -> Graph {
        let mut pos = vec![0; self.n];
        for (k, &v) in peo.order().iter().enumerate() {
            pos[v] = k;
        }
        let edges = self.edges.iter().map(|&(u, v)| {
            let (a, b) = (pos[u], pos[v]);
            (a.min(b), a.max(b))
        });
        Graph::new(self.n, edges).unwrap()
    }

    /// Subgraph induced by vertices 0..k (labels preserved, vertex count k).
    pub fn induced_prefix(&self, k: usize) -> Graph {
        let edges = self.edges.iter().copied().filter(|&(_, v)| v < k);
        Graph { n: k, edges: edges.collect() }
    }
}

/// A vertex ordering claimed to be a perfect elimination ordering: for each
/// position i, the earlier neighbors of order[i] form a clique.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Peo {
    order: Vec<usize>,
}

impl Peo {
    pub fn new(g: &Graph, order: Vec<usize>) -> Result<Peo> {
        let peo = Peo { order };
        if peo.is_valid(g) {
            Ok(peo)
        } else {
            Err(Error::InvalidPeo)
        }
    }

    pub fn identity(n: usize) -> Peo {
        Peo { order: (0..n).collect() }
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// Direct check of the defining property.
    pub fn is_valid(&self, g: &Graph) -> bool {
        if self.order.len() != g.n() {
            return false;
        }
        let mut seen = vec![false; g.n()];
        if {
            let mut s: Vec<usize> = self.order.clone();
            s.sort_unstable();
            s != (0..g.n()).collect::<Vec<_>>()
        } {
            return false;
        }
        for (i, &v) in self.order.iter().enumerate() {
            let earlier: Vec<usize> =
                self.order[..i].iter().copied().filter(|&u| g.has_edge(u, v)).collect();
            for (a, &x) in earlier.iter().enumerate() {
                for &y in &earlier[a + 1..] {
                    if !g.has_edge(x, y) {
                        return false;
                    }
                }
            }
            seen[v] = true;
        }
        true
    }
}

/// Maximum cardinality search with smallest-label tie-breaking, followed by a
/// direct verification pass. Returns None exactly when the graph is not
/// chordal.
pub fn mcs_peo(g: &Graph) -> Option<Peo> {
    let n = g.n();
    let mut order = Vec::with_capacity(n);
    let mut picked = vec![false; n];
    let mut weight = vec![0usize; n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !picked[v])
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .unwrap();
        picked[v] = true;
        order.push(v);
        for u in g.neighbors(v) {
            if !picked[u] {
                weight[u] += 1;
            }
        }
    }
    Peo::new(g, order).ok()
}

/// C_{>=k}: position k together with every position reachable from it by a
/// path whose position indices strictly increase. 0-based positions; the
/// graph must already be in PEO coordinates or `peo` maps positions to
/// vertices.
pub fn ascending_set(g: &Graph, peo: &Peo, k: usize) -> Vec<usize> {
    let n = g.n();
    let order = peo.order();
    let mut reach = vec![false; n];
    reach[k] = true;
    let mut stack = vec![k];
    while let Some(a) = stack.pop() {
        for b in a + 1..n {
            if !reach[b] && g.has_edge(order[a], order[b]) {
                reach[b] = true;
                stack.push(b);
            }
        }
    }
    (0..n).filter(|&i| reach[i]).collect()
}

/// E_{<k}: positions j < k whose vertex is adjacent to the vertex at
/// position k.
pub fn lower_neighbors(g: &Graph, peo: &Peo, k: usize) -> Vec<usize> {
    let order = peo.order();
    (0..k).filter(|&j| g.has_edge(order[j], order[k])).collect()
}

/// Chromatic polynomial by deletion-contraction, memoized on the labeled
/// canonical form (n, edge set).
pub fn chromatic_poly(g: &Graph) -> IntPoly {
    fn rec(g: &Graph, memo: &mut HashMap<(usize, u64), IntPoly>) -> IntPoly {
        if g.edge_count() == 0 {
            return IntPoly::t().pow(g.n());
        }
        let key = (g.n(), g.edge_mask());
        if let Some(p) = memo.get(&key) {
            return p.clone();
        }
        let e = g.edges().next().unwrap();
        let del = rec(&g.delete_edge(e).unwrap(), memo);
        let con = rec(&g.contract_edge(e).unwrap(), memo);
        let p = del.sub(&con);
        memo.insert(key, p.clone());
        p
    }
    rec(g, &mut HashMap::new())
}

/// Exhaustive count of proper k-colorings; the oracle for `chromatic_poly`.
pub fn chromatic_brute(g: &Graph, k: usize) -> Result<u64> {
    let n = g.n() as u32;
    match (k as u64).checked_pow(n) {
        Some(total) if total <= 10_000_000 => {}
        _ => return Err(Error::TooLarge(format!("{k}^{n} colorings"))),
    }
    if n == 0 {
        return Ok(1);
    }
    let mut count = 0u64;
    let total = (k as u64).pow(n);
    let mut coloring = vec![0usize; n as usize];
    for code in 0..total {
        let mut c = code;
        for slot in coloring.iter_mut() {
            *slot = (c % k as u64) as usize;
            c /= k as u64;
        }
        if g.edges().all(|(u, v)| coloring[u] != coloring[v]) {
            count += 1;
        }
    }
    Ok(count)
}

/// prod_k (t - |E_{<k}|) along a PEO.
pub fn chordal_charpoly_graphic(g: &Graph, peo: &Peo) -> Result<IntPoly> {
    if !peo.is_valid(g) {
        return Err(Error::InvalidPeo);
    }
    let roots = (0..g.n()).map(|k| BigInt::from(lower_neighbors(g, peo, k).len()));
    Ok(IntPoly::from_roots(roots))
}

/// prod_k (t - q^{|E_{<k}|}) along a PEO.
pub fn chordal_charpoly_qdef(g: &Graph, peo: &Peo, q: u64) -> Result<IntPoly> {
    if !peo.is_valid(g) {
        return Err(Error::InvalidPeo);
    }
    let roots = (0..g.n())
        .map(|k| BigInt::from(q).pow(lower_neighbors(g, peo, k).len() as u32));
    Ok(IntPoly::from_roots(roots))
}
