//! Maximum matching in general graphs (Edmonds' blossom algorithm),
//! perfect-matching detection, exactly-once enumeration of size-k matchings,
//! and matching extension tests.

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::graph::{Graph, VertexSet};

/// Default ceiling on how many matchings an enumeration may yield.
pub const DEFAULT_ENUMERATION_BUDGET: u64 = 100_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MatchingError {
    #[error("matching is invalid: {0}")]
    InvalidMatching(String),
    #[error("matching enumeration exceeded the budget of {0} matchings")]
    BudgetExceeded(u64),
}

/// A set of pairwise vertex-disjoint edges, kept as (u, v) pairs with u < v
/// in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    edges: Vec<(usize, usize)>,
}

impl Matching {
    pub fn empty() -> Self {
        Matching { edges: Vec::new() }
    }

    /// Normalizes edge orientation and order; rejects repeated vertices.
    pub fn new(edges: Vec<(usize, usize)>) -> Result<Self, MatchingError> {
        let mut normalized: Vec<(usize, usize)> = edges
            .into_iter()
            .map(|(u, v)| if u <= v { (u, v) } else { (v, u) })
            .collect();
        normalized.sort_unstable();
        let mut seen = std::collections::HashSet::new();
        for &(u, v) in &normalized {
            if u == v {
                return Err(MatchingError::InvalidMatching(format!("self-loop at {u}")));
            }
            if !seen.insert(u) || !seen.insert(v) {
                return Err(MatchingError::InvalidMatching(
                    "edges share a vertex".into(),
                ));
            }
        }
        Ok(Matching { edges: normalized })
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Vertices covered by the matching, as a set over `universe`.
    pub fn covered_vertices(&self, universe: usize) -> VertexSet {
        let mut set = VertexSet::empty(universe);
        for &(u, v) in &self.edges {
            set.insert(u);
            set.insert(v);
        }
        set
    }

    /// Checks the matching against a host graph: every pair must be an edge
    /// of `g` and the pairs must be disjoint (guaranteed by construction).
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        self.edges.iter().all(|&(u, v)| g.has_edge(u, v))
    }
}

impl Serialize for Matching {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.edges.len()))?;
        for e in &self.edges {
            seq.serialize_element(&[e.0, e.1])?;
        }
        seq.end()
    }
}

/// Maximum-cardinality matching via Edmonds' blossom algorithm, O(n^3).
/// Deterministic: free vertices and neighbors are scanned in ascending order.
pub fn maximum_matching(g: &Graph) -> Matching {
    let n = g.vertex_count();
    let none = usize::MAX;
    let mut mate = vec![none; n];
    let mut parent = vec![none; n];
    let mut base: Vec<usize> = (0..n).collect();

    fn lca(
        mut v: usize,
        mut w: usize,
        parent: &[usize],
        base: &[usize],
        mate: &[usize],
        none: usize,
        marked: &mut [bool],
    ) -> usize {
        for m in marked.iter_mut() {
            *m = false;
        }
        loop {
            v = base[v];
            marked[v] = true;
            if mate[v] == none {
                break;
            }
            v = parent[mate[v]];
        }
        while !marked[base[w]] {
            w = parent[mate[w]];
        }
        base[w]
    }

    fn mark_path(
        mut v: usize,
        b: usize,
        mut child: usize,
        parent: &mut [usize],
        base: &[usize],
        mate: &[usize],
        in_blossom: &mut [bool],
    ) {
        while base[v] != b {
            in_blossom[base[v]] = true;
            in_blossom[base[mate[v]]] = true;
            parent[v] = child;
            child = mate[v];
            v = parent[mate[v]];
        }
    }

    fn find_augmenting_path(
        start: usize,
        g: &Graph,
        mate: &[usize],
        parent: &mut [usize],
        base: &mut [usize],
        none: usize,
    ) -> usize {
        let n = g.vertex_count();
        for (i, b) in base.iter_mut().enumerate() {
            *b = i;
        }
        for p in parent.iter_mut() {
            *p = none;
        }
        let mut used = vec![false; n];
        let mut marked = vec![false; n];
        let mut queue = std::collections::VecDeque::new();
        used[start] = true;
        queue.push_back(start);
        while let Some(v) = queue.pop_front() {
            for to in g.neighbors(v) {
                if base[v] == base[to] || mate[v] == to {
                    continue;
                }
                if to == start || (mate[to] != none && parent[mate[to]] != none) {
                    // Blossom found: contract it.
                    let b = lca(v, to, parent, base, mate, none, &mut marked);
                    let mut in_blossom = vec![false; n];
                    mark_path(v, b, to, parent, base, mate, &mut in_blossom);
                    mark_path(to, b, v, parent, base, mate, &mut in_blossom);
                    for i in 0..n {
                        if in_blossom[base[i]] {
                            base[i] = b;
                            if !used[i] {
                                used[i] = true;
                                queue.push_back(i);
                            }
                        }
                    }
                } else if parent[to] == none {
                    parent[to] = v;
                    if mate[to] == none {
                        return to;
                    }
                    used[mate[to]] = true;
                    queue.push_back(mate[to]);
                }
            }
        }
        none
    }

    for v in 0..n {
        if mate[v] != none {
            continue;
        }
        let finish = find_augmenting_path(v, g, &mate, &mut parent, &mut base, none);
        if finish == none {
            continue;
        }
        // Flip matched status along the found alternating path.
        let mut cur = finish;
        while cur != none {
            let prev = parent[cur];
            let next = if prev == none { none } else { mate[prev] };
            mate[cur] = prev;
            if prev != none {
                mate[prev] = cur;
            }
            cur = next;
        }
    }

    let mut edges = Vec::new();
    for v in 0..n {
        if mate[v] != none && v < mate[v] {
            edges.push((v, mate[v]));
        }
    }
    Matching { edges }
}

/// True iff n is even and a perfect matching exists.
pub fn has_one_factor(g: &Graph) -> bool {
    let n = g.vertex_count();
    n % 2 == 0 && maximum_matching(g).len() == n / 2
}

/// True iff `G - V(M)` has a 1-factor, so `m` extends to a 1-factor of `g`.
pub fn extends_to_one_factor(g: &Graph, m: &Matching) -> Result<bool, MatchingError> {
    if !m.is_valid_for(g) {
        return Err(MatchingError::InvalidMatching(
            "an edge of the matching is not an edge of the graph".into(),
        ));
    }
    let n = g.vertex_count();
    if m.edges().iter().any(|&(u, v)| u >= n || v >= n) {
        return Err(MatchingError::InvalidMatching("vertex out of range".into()));
    }
    let covered = m.covered_vertices(n);
    let mut keep = VertexSet::empty(n);
    for v in 0..n {
        if !covered.contains(v) {
            keep.insert(v);
        }
    }
    let (rest, _) = g.induced_subgraph(&keep);
    Ok(has_one_factor(&rest))
}

/// Streams every matching of size exactly `k`, each exactly once, by DFS over
/// edges in lexicographic index order. Yields a budget error and stops if the
/// count of produced matchings would exceed the budget.
pub fn enumerate_matchings(g: &Graph, k: usize) -> MatchingEnumerator {
    enumerate_matchings_with_budget(g, k, DEFAULT_ENUMERATION_BUDGET)
}

pub fn enumerate_matchings_with_budget(g: &Graph, k: usize, budget: u64) -> MatchingEnumerator {
    MatchingEnumerator {
        edges: g.edges(),
        k,
        chosen: Vec::with_capacity(k),
        used: vec![false; g.vertex_count()],
        cursor: 0,
        emitted_empty: false,
        yielded: 0,
        budget,
        done: k > g.vertex_count() / 2,
    }
}

pub struct MatchingEnumerator {
    edges: Vec<(usize, usize)>,
    k: usize,
    chosen: Vec<usize>,
    used: Vec<bool>,
    cursor: usize,
    emitted_empty: bool,
    yielded: u64,
    budget: u64,
    done: bool,
}

impl MatchingEnumerator {
    fn current_matching(&self) -> Matching {
        Matching {
            edges: self.chosen.iter().map(|&i| self.edges[i]).collect(),
        }
    }

    fn mark(&mut self, idx: usize, value: bool) {
        let (u, v) = self.edges[idx];
        self.used[u] = value;
        self.used[v] = value;
    }
}

impl Iterator for MatchingEnumerator {
    type Item = Result<Matching, MatchingError>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        if self.k == 0 {
            self.done = true;
            if self.emitted_empty {
                return None;
            }
            self.emitted_empty = true;
            return Some(Ok(Matching::empty()));
        }
        loop {
            // Try to extend with the next disjoint edge at or after cursor.
            let mut found = None;
            let mut i = self.cursor;
            while i < self.edges.len() {
                let (u, v) = self.edges[i];
                if !self.used[u] && !self.used[v] {
                    found = Some(i);
                    break;
                }
                i += 1;
            }
            match found {
                Some(i) => {
                    if self.chosen.len() + 1 == self.k {
                        // A complete matching; yield and continue with the
                        // next sibling at this depth.
                        self.cursor = i + 1;
                        self.yielded += 1;
                        if self.yielded > self.budget {
                            self.done = true;
                            return Some(Err(MatchingError::BudgetExceeded(self.budget)));
                        }
                        self.chosen.push(i);
                        let m = self.current_matching();
                        self.chosen.pop();
                        return Some(Ok(m));
                    }
                    self.chosen.push(i);
                    self.mark(i, true);
                    self.cursor = i + 1;
                }
                None => {
                    // Backtrack.
                    match self.chosen.pop() {
                        Some(top) => {
                            self.mark(top, false);
                            self.cursor = top + 1;
                        }
                        None => {
                            self.done = true;
                            return None;
                        }
                    }
                }
            }
        }
    }
}
