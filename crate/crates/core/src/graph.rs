//! Undirected simple graphs on labeled vertices, the join/union constructors
//! for clique families, component analysis, and graph6 text serialization.
//!
//! Adjacency is stored as dense bitset rows. Graphs are immutable after
//! construction; every operation here is pure.

use std::fmt;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};
use thiserror::Error;

/// Largest vertex count accepted by the graph6 parser by default. Spectral
/// paths stay polynomial well past this; the exhaustive deciders cap out far
/// below it.
pub const DEFAULT_MAX_VERTICES: usize = 4096;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0} is not allowed")]
    SelfLoop(usize),
    #[error("connectivity is undefined for the empty graph")]
    EmptyGraph,
    #[error("removed set is not a subset of the vertex set")]
    NotASubset,
}

/// Errors from the graph6 codec, with the byte offset of the offending input.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 line")]
    Empty,
    #[error("invalid graph6 byte 0x{byte:02x} at offset {offset}")]
    InvalidByte { byte: u8, offset: usize },
    #[error("truncated graph6 line: expected {expected} data bytes, found {found} (offset {offset})")]
    Truncated {
        expected: usize,
        found: usize,
        offset: usize,
    },
    #[error("trailing data after graph at offset {offset}")]
    TrailingData { offset: usize },
    #[error("nonzero padding bits at offset {offset}")]
    NonzeroPadding { offset: usize },
    #[error("graph order {order} exceeds the configured maximum {max}")]
    TooLarge { order: usize, max: usize },
    #[error("graph6 size form at offset {offset} is beyond the supported range")]
    UnsupportedSizeForm { offset: usize },
}

const WORD_BITS: usize = 64;

fn words_for(n: usize) -> usize {
    n.div_ceil(WORD_BITS)
}

/// A set of vertices of an associated graph, stored as a bitset over the
/// vertex universe `0..universe`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    universe: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn empty(universe: usize) -> Self {
        VertexSet {
            universe,
            words: vec![0; words_for(universe)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut set = Self::empty(universe);
        for v in 0..universe {
            set.insert(v);
        }
        set
    }

    pub fn from_vertices(universe: usize, vertices: &[usize]) -> Self {
        let mut set = Self::empty(universe);
        for &v in vertices {
            assert!(v < universe, "vertex {v} out of range {universe}");
            set.insert(v);
        }
        set
    }

    /// Builds the contiguous range `lo..hi` as a set.
    pub fn from_range(universe: usize, lo: usize, hi: usize) -> Self {
        let mut set = Self::empty(universe);
        for v in lo..hi {
            set.insert(v);
        }
        set
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < self.universe);
        self.words[v / WORD_BITS] |= 1u64 << (v % WORD_BITS);
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.universe && self.words[v / WORD_BITS] >> (v % WORD_BITS) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Ascending iterator over members.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.universe).filter(move |&v| self.contains(v))
    }

    pub fn to_sorted_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn smallest(&self) -> Option<usize> {
        for (i, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(i * WORD_BITS + w.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn intersects(&self, other: &VertexSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .any(|(a, b)| a & b != 0)
    }

    /// Builds a set from a single machine word; only valid for `universe <= 64`.
    pub(crate) fn from_mask(universe: usize, mask: u64) -> Self {
        assert!(universe <= WORD_BITS);
        let mut words = vec![0; words_for(universe)];
        if !words.is_empty() {
            words[0] = mask;
        }
        VertexSet { universe, words }
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let members = self.to_sorted_vec();
        let mut seq = serializer.serialize_seq(Some(members.len()))?;
        for v in members {
            seq.serialize_element(&v)?;
        }
        seq.end()
    }
}

/// An undirected simple graph with vertices `0..n`. No loops, no multi-edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    row_words: usize,
    bits: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        let row_words = words_for(n);
        Graph {
            n,
            row_words,
            bits: vec![0; n * row_words],
        }
    }

    /// The complete graph K_n.
    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in (u + 1)..n {
                g.set_edge(u, v);
            }
        }
        g
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u, order: n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, order: n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    fn set_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.bits[u * self.row_words + v / WORD_BITS] |= 1u64 << (v % WORD_BITS);
        self.bits[v * self.row_words + u / WORD_BITS] |= 1u64 << (u % WORD_BITS);
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n
            && v < self.n
            && u != v
            && self.bits[u * self.row_words + v / WORD_BITS] >> (v % WORD_BITS) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        assert!(v < self.n);
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Edges as (u, v) with u < v, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Ascending neighbor iterator.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        assert!(v < self.n);
        let row = self.row(v);
        (0..self.n).filter(move |&u| row[u / WORD_BITS] >> (u % WORD_BITS) & 1 == 1)
    }

    fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.row_words..(v + 1) * self.row_words]
    }

    /// Adjacency rows packed into single words; only available when `n <= 64`.
    pub(crate) fn rows_u64(&self) -> Option<Vec<u64>> {
        if self.n > WORD_BITS {
            return None;
        }
        Some((0..self.n).map(|v| self.row(v).first().copied().unwrap_or(0)).collect())
    }

    /// Disjoint union: vertices of `other` are relabeled after `self`'s.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.n + other.n;
        let mut g = Graph::empty(n);
        for (u, v) in self.edges() {
            g.set_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.set_edge(u + self.n, v + self.n);
        }
        g
    }

    /// Join: disjoint union plus all edges between the two parts.
    pub fn join(&self, other: &Graph) -> Graph {
        let mut g = self.disjoint_union(other);
        for u in 0..self.n {
            for v in 0..other.n {
                g.set_edge(u, self.n + v);
            }
        }
        g
    }

    /// Complement: adjacency inverted off the diagonal.
    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if !self.has_edge(u, v) {
                    g.set_edge(u, v);
                }
            }
        }
        g
    }

    /// Connected components of `self - removed`, as vertex sets in the
    /// original labeling, ordered by their smallest member.
    pub fn components(&self, removed: &VertexSet) -> Result<Vec<VertexSet>, GraphError> {
        if removed.universe() != self.n {
            return Err(GraphError::NotASubset);
        }
        let words = words_for(self.n);
        let mut alive = vec![0u64; words];
        for v in 0..self.n {
            if !removed.contains(v) {
                alive[v / WORD_BITS] |= 1 << (v % WORD_BITS);
            }
        }
        let mut out = Vec::new();
        loop {
            // Seed from the smallest remaining vertex.
            let seed = match alive
                .iter()
                .enumerate()
                .find(|(_, &w)| w != 0)
                .map(|(i, &w)| i * WORD_BITS + w.trailing_zeros() as usize)
            {
                Some(s) => s,
                None => break,
            };
            let mut comp = vec![0u64; words];
            comp[seed / WORD_BITS] |= 1 << (seed % WORD_BITS);
            alive[seed / WORD_BITS] &= !(1u64 << (seed % WORD_BITS));
            let mut frontier = vec![seed];
            while let Some(v) = frontier.pop() {
                let row = self.row(v);
                for w in 0..words {
                    let mut reach = row[w] & alive[w];
                    while reach != 0 {
                        let b = reach.trailing_zeros() as usize;
                        reach &= reach - 1;
                        let u = w * WORD_BITS + b;
                        alive[w] &= !(1u64 << b);
                        comp[w] |= 1u64 << b;
                        frontier.push(u);
                    }
                }
            }
            out.push(VertexSet {
                universe: self.n,
                words: comp,
            });
        }
        Ok(out)
    }

    /// o(G - S): the number of odd-order components after deleting `s`.
    pub fn odd_component_count(&self, s: &VertexSet) -> Result<usize, GraphError> {
        Ok(self
            .components(s)?
            .iter()
            .filter(|c| c.len() % 2 == 1)
            .count())
    }

    pub fn is_connected(&self) -> Result<bool, GraphError> {
        if self.n == 0 {
            return Err(GraphError::EmptyGraph);
        }
        Ok(self.components(&VertexSet::empty(self.n))?.len() == 1)
    }

    /// Induced subgraph on `keep`, plus the map from new labels back to the
    /// original vertex labels.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> (Graph, Vec<usize>) {
        let labels = keep.to_sorted_vec();
        let mut g = Graph::empty(labels.len());
        for i in 0..labels.len() {
            for j in (i + 1)..labels.len() {
                if self.has_edge(labels[i], labels[j]) {
                    g.set_edge(i, j);
                }
            }
        }
        (g, labels)
    }

    pub fn from_graph6(text: &str) -> Result<Self, Graph6Error> {
        Self::from_graph6_bounded(text, DEFAULT_MAX_VERTICES)
    }

    pub fn from_graph6_bounded(text: &str, max_vertices: usize) -> Result<Self, Graph6Error> {
        parse_graph6(text, max_vertices)
    }

    pub fn to_graph6(&self) -> String {
        encode_graph6(self)
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={})", self.n, self.edge_count())
    }
}

/// A graph built as K_s joined with a union of cliques, keeping the ordered
/// construction blocks. The block order (K_s first, then cliques in the given
/// order) is the canonical partition for quotient matrices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyGraph {
    pub graph: Graph,
    pub blocks: Vec<VertexSet>,
    core_size: usize,
}

impl FamilyGraph {
    /// Vertices of the join core K_s, empty when s = 0.
    pub fn core_block(&self) -> VertexSet {
        VertexSet::from_range(self.graph.vertex_count(), 0, self.core_size)
    }

    pub fn core_size(&self) -> usize {
        self.core_size
    }
}

/// K_s joined with the disjoint union of cliques of the given sizes.
///
/// Vertices 0..s form the K_s core; clique blocks follow in order. Each
/// clique size must be at least 1.
pub fn build_family(s: usize, clique_sizes: &[usize]) -> FamilyGraph {
    assert!(
        clique_sizes.iter().all(|&c| c >= 1),
        "clique sizes must be >= 1"
    );
    let n = s + clique_sizes.iter().sum::<usize>();
    let mut g = Graph::empty(n);
    // Core clique plus join edges to everything after it.
    for u in 0..s {
        for v in (u + 1)..n {
            g.set_edge(u, v);
        }
    }
    let mut blocks = Vec::new();
    if s > 0 {
        blocks.push(VertexSet::from_range(n, 0, s));
    }
    let mut base = s;
    for &c in clique_sizes {
        for u in base..base + c {
            for v in (u + 1)..base + c {
                g.set_edge(u, v);
            }
        }
        blocks.push(VertexSet::from_range(n, base, base + c));
        base += c;
    }
    FamilyGraph {
        graph: g,
        blocks,
        core_size: s,
    }
}

// --- graph6 codec -----------------------------------------------------------
//
// Standard layout: optional ">>graph6<<" header, a size field (one byte n+63
// for n <= 62, or '~' plus three bytes for n <= 258047), then the upper
// triangle x(0,1), x(0,2), x(1,2), x(0,3), ... packed big-endian into 6-bit
// groups, each offset by 63. Padding bits must be zero.

const G6_HEADER: &str = ">>graph6<<";

fn parse_graph6(text: &str, max_vertices: usize) -> Result<Graph, Graph6Error> {
    let (text, base_offset) = match text.strip_prefix(G6_HEADER) {
        Some(rest) => (rest, G6_HEADER.len()),
        None => (text, 0),
    };
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::InvalidByte {
                byte: b,
                offset: base_offset + i,
            });
        }
    }
    let (n, mut pos) = if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            return Err(Graph6Error::UnsupportedSizeForm {
                offset: base_offset + 1,
            });
        }
        if bytes.len() < 4 {
            return Err(Graph6Error::Truncated {
                expected: 4,
                found: bytes.len(),
                offset: base_offset + bytes.len(),
            });
        }
        let n = ((bytes[1] as usize - 63) << 12)
            | ((bytes[2] as usize - 63) << 6)
            | (bytes[3] as usize - 63);
        (n, 4)
    } else {
        (bytes[0] as usize - 63, 1)
    };
    if n > max_vertices {
        return Err(Graph6Error::TooLarge {
            order: n,
            max: max_vertices,
        });
    }
    let nbits = if n < 2 { 0 } else { n * (n - 1) / 2 };
    let nbytes = nbits.div_ceil(6);
    if bytes.len() < pos + nbytes {
        return Err(Graph6Error::Truncated {
            expected: pos + nbytes,
            found: bytes.len(),
            offset: base_offset + bytes.len(),
        });
    }
    if bytes.len() > pos + nbytes {
        return Err(Graph6Error::TrailingData {
            offset: base_offset + pos + nbytes,
        });
    }
    let mut g = Graph::empty(n);
    let mut bit_index = 0usize;
    let mut pairs = Vec::with_capacity(nbits);
    for j in 1..n {
        for i in 0..j {
            pairs.push((i, j));
        }
    }
    for _ in 0..nbytes {
        let chunk = bytes[pos] - 63;
        for b in 0..6 {
            let bit = (chunk >> (5 - b)) & 1;
            if bit_index < nbits {
                if bit == 1 {
                    let (i, j) = pairs[bit_index];
                    g.set_edge(i, j);
                }
            } else if bit == 1 {
                return Err(Graph6Error::NonzeroPadding {
                    offset: base_offset + pos,
                });
            }
            bit_index += 1;
        }
        pos += 1;
    }
    Ok(g)
}

fn encode_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        assert!(n <= 258_047, "graph too large for the 3-byte graph6 size form");
        out.push(126);
        out.push(((n >> 12) & 0x3f) as u8 + 63);
        out.push(((n >> 6) & 0x3f) as u8 + 63);
        out.push((n & 0x3f) as u8 + 63);
    }
    let mut chunk = 0u8;
    let mut filled = 0u8;
    for j in 1..n {
        for i in 0..j {
            chunk = (chunk << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(chunk + 63);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        chunk <<= 6 - filled;
        out.push(chunk + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graphs() {
        assert_eq!(Graph::complete(1).edge_count(), 0);
        assert_eq!(Graph::complete(1).vertex_count(), 1);
        assert_eq!(Graph::complete(4).edge_count(), 6);
        assert_eq!(Graph::complete(2).edge_count(), 1);
        assert_eq!(Graph::complete(0).vertex_count(), 0);
    }

    #[test]
    fn disjoint_union_counts() {
        let k1 = Graph::complete(1);
        let k3 = Graph::complete(3);
        let u = k1.disjoint_union(&k1);
        assert_eq!((u.vertex_count(), u.edge_count()), (2, 0));
        let u = k3.disjoint_union(&k1);
        assert_eq!((u.vertex_count(), u.edge_count()), (4, 3));
        assert_eq!(u.components(&VertexSet::empty(4)).unwrap().len(), 2);
        let u = k3.disjoint_union(&k3);
        assert_eq!((u.vertex_count(), u.edge_count()), (6, 6));
    }

    #[test]
    fn join_counts_and_structure() {
        let k1 = Graph::complete(1);
        assert_eq!(k1.join(&k1), Graph::complete(2));

        // K_2 v 4K_1: 6 vertices, 1 + 8 = 9 edges.
        let k2 = Graph::complete(2);
        let four_k1 = Graph::empty(4);
        let g = k2.join(&four_k1);
        assert_eq!((g.vertex_count(), g.edge_count()), (6, 9));

        // Join with K_s gives minimum degree >= s.
        let g = Graph::complete(3).join(&Graph::empty(5));
        assert!((0..8).all(|v| g.degree(v) >= 3));
    }

    #[test]
    fn build_family_shapes() {
        let f = build_family(2, &[1, 1, 1, 1]);
        assert_eq!((f.graph.vertex_count(), f.graph.edge_count()), (6, 9));
        assert_eq!(f.blocks.len(), 5);
        assert_eq!(f.core_block().to_sorted_vec(), vec![0, 1]);

        let f = build_family(3, &[7, 1, 1]);
        assert_eq!(f.graph.vertex_count(), 12);
        // Core vertices see everyone.
        for v in 0..3 {
            assert_eq!(f.graph.degree(v), 11);
        }
        // Clique-block vertex degree is s + n_i - 1.
        assert_eq!(f.graph.degree(3), 3 + 7 - 1);
        assert_eq!(f.graph.degree(10), 3);

        let f = build_family(0, &[4]);
        assert_eq!(f.graph, Graph::complete(4));
        assert_eq!(f.blocks.len(), 1);
    }

    #[test]
    fn complement_involution() {
        let g = Graph::complete(5);
        assert_eq!(g.complement().edge_count(), 0);
        let two = Graph::empty(2);
        assert_eq!(two.complement(), Graph::complete(2));
        let f = build_family(2, &[3, 1]).graph;
        assert_eq!(f.complement().complement(), f);
    }

    #[test]
    fn components_and_odd_counts() {
        let k4 = Graph::complete(4);
        let comps = k4.components(&VertexSet::empty(4)).unwrap();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].len(), 4);
        assert_eq!(k4.odd_component_count(&VertexSet::empty(4)).unwrap(), 0);

        // K_2 v 4K_1 minus the core: four singletons.
        let g = build_family(2, &[1, 1, 1, 1]).graph;
        let core = VertexSet::from_vertices(6, &[0, 1]);
        let comps = g.components(&core).unwrap();
        assert_eq!(comps.len(), 4);
        assert!(comps.iter().all(|c| c.len() == 1));
        assert_eq!(g.odd_component_count(&core).unwrap(), 4);

        // K_3 v 5K_1 minus the core: five singletons.
        let g = build_family(3, &[1, 1, 1, 1, 1]).graph;
        let core = VertexSet::from_vertices(8, &[0, 1, 2]);
        assert_eq!(g.odd_component_count(&core).unwrap(), 5);

        // Component ordering follows the smallest member.
        let g = Graph::complete(3).disjoint_union(&Graph::complete(1));
        let comps = g.components(&VertexSet::empty(4)).unwrap();
        assert_eq!(comps[0].to_sorted_vec(), vec![0, 1, 2]);
        assert_eq!(comps[1].to_sorted_vec(), vec![3]);
    }

    #[test]
    fn connectivity() {
        assert!(Graph::complete(4).is_connected().unwrap());
        let two = Graph::complete(1).disjoint_union(&Graph::complete(1));
        assert!(!two.is_connected().unwrap());
        assert!(build_family(1, &[3, 1]).graph.is_connected().unwrap());
        assert_eq!(Graph::empty(0).is_connected(), Err(GraphError::EmptyGraph));
    }

    #[test]
    fn graph6_known_values() {
        // Frozen against the reference encoding rules: K_2 is "A_",
        // the empty 2-vertex graph is "A?", K_4 is "C~".
        assert_eq!(Graph::from_graph6("A_").unwrap(), Graph::complete(2));
        let g = Graph::from_graph6("A?").unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (2, 0));
        assert_eq!(Graph::complete(4).to_graph6(), "C~");
        assert_eq!(Graph::from_graph6("C~").unwrap(), Graph::complete(4));
        assert_eq!(Graph::complete(2).to_graph6(), "A_");
        // Header form is accepted.
        assert_eq!(Graph::from_graph6(">>graph6<<A_").unwrap(), Graph::complete(2));
    }

    #[test]
    fn graph6_errors_carry_offsets() {
        assert_eq!(Graph::from_graph6(""), Err(Graph6Error::Empty));
        assert_eq!(
            Graph::from_graph6("A "),
            Err(Graph6Error::InvalidByte { byte: b' ', offset: 1 })
        );
        assert!(matches!(
            Graph::from_graph6("C"),
            Err(Graph6Error::Truncated { .. })
        ));
        assert!(matches!(
            Graph::from_graph6("A__"),
            Err(Graph6Error::TrailingData { .. })
        ));
        // 2-vertex graph has 1 data bit; a stray low bit is bad padding.
        assert!(matches!(
            Graph::from_graph6("A@"),
            Err(Graph6Error::NonzeroPadding { .. })
        ));
        assert!(matches!(
            Graph::from_graph6_bounded("C~", 3),
            Err(Graph6Error::TooLarge { order: 4, max: 3 })
        ));
    }

    #[test]
    fn graph6_large_order_form() {
        let g = Graph::complete(70);
        let text = g.to_graph6();
        assert_eq!(&text[..1], "~");
        assert_eq!(Graph::from_graph6(&text).unwrap(), g);
    }

    #[test]
    fn induced_subgraph_maps_labels() {
        let g = build_family(2, &[3, 1]).graph;
        let keep = VertexSet::from_vertices(6, &[2, 3, 4]);
        let (sub, labels) = g.induced_subgraph(&keep);
        assert_eq!(labels, vec![2, 3, 4]);
        assert_eq!(sub, Graph::complete(3));
    }
}
