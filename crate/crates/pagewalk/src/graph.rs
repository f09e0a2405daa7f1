//! Access graphs and walks.
//!
//! An access graph is an undirected graph over pages; a request sequence is
//! admissible for the graph iff consecutive distinct requests are adjacent.
//! Pages are labeled 1..=N. The standard families (paths, cycles, complete
//! graphs, and chained cycles) are built with a fixed canonical labeling so
//! output is reproducible: paths and cycles number their vertices in order,
//! and on a cycle "clockwise" means increasing label mod N.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A page (equivalently, a vertex of an access graph). Labels start at 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PageId(u32);

impl PageId {
    pub fn new(id: u32) -> Result<Self> {
        if id == 0 {
            return Err(Error::InvalidParameter("page ids start at 1".into()));
        }
        Ok(PageId(id))
    }

    /// The 1-based label.
    pub fn get(self) -> u32 {
        self.0
    }

    /// The 0-based index used for adjacency storage.
    pub fn index(self) -> usize {
        (self.0 - 1) as usize
    }

    pub(crate) fn from_index(index: usize) -> Self {
        PageId(index as u32 + 1)
    }
}

impl fmt::Display for PageId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// An ordered sequence of page requests.
pub type RequestSequence = Vec<PageId>;

/// Render a request sequence as comma-separated labels, e.g. `2,1,2,3,4,1`.
pub fn format_sequence(seq: &[PageId]) -> String {
    seq.iter()
        .map(|p| p.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Parse a comma-separated request sequence.
pub fn parse_sequence(text: &str) -> Result<RequestSequence> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|tok| {
            let id: u32 = tok
                .trim()
                .parse()
                .map_err(|_| Error::InvalidParameter(format!("bad page id `{tok}`")))?;
            PageId::new(id)
        })
        .collect()
}

/// An undirected access graph with vertices 1..=N and no self-loops.
///
/// Immutable after construction; cheap to share across threads.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AccessGraph {
    vertex_count: u32,
    adjacency: Vec<BTreeSet<u32>>,
}

impl AccessGraph {
    /// Build a graph from an explicit edge list. Edges are symmetrized;
    /// self-loops and out-of-range endpoints are rejected.
    pub fn new(vertex_count: u32, edges: &[(PageId, PageId)]) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::InvalidParameter(
                "graph must have at least one vertex".into(),
            ));
        }
        let mut adjacency = vec![BTreeSet::new(); vertex_count as usize];
        for &(u, v) in edges {
            if u.get() > vertex_count {
                return Err(Error::InvalidPage {
                    id: u.get(),
                    max: vertex_count,
                });
            }
            if v.get() > vertex_count {
                return Err(Error::InvalidPage {
                    id: v.get(),
                    max: vertex_count,
                });
            }
            if u == v {
                return Err(Error::InvalidParameter(format!(
                    "self-loop ({u},{v}) is not allowed"
                )));
            }
            adjacency[u.index()].insert(v.get());
            adjacency[v.index()].insert(u.get());
        }
        Ok(AccessGraph {
            vertex_count,
            adjacency,
        })
    }

    pub fn vertex_count(&self) -> u32 {
        self.vertex_count
    }

    pub fn contains(&self, p: PageId) -> bool {
        p.get() <= self.vertex_count
    }

    /// True iff `u` and `v` are joined by an edge. Distinct from "walkable":
    /// a walk may also repeat the same page without an edge.
    pub fn are_adjacent(&self, u: PageId, v: PageId) -> bool {
        self.contains(u) && self.contains(v) && self.adjacency[u.index()].contains(&v.get())
    }

    pub fn neighbors(&self, p: PageId) -> impl Iterator<Item = PageId> + '_ {
        self.adjacency[p.index()].iter().map(|&id| PageId(id))
    }

    pub fn degree(&self, p: PageId) -> usize {
        self.adjacency[p.index()].len()
    }

    /// All edges as (u, v) pairs with u < v, sorted.
    pub fn edges(&self) -> Vec<(PageId, PageId)> {
        let mut out = Vec::new();
        for (i, nbrs) in self.adjacency.iter().enumerate() {
            let u = i as u32 + 1;
            for &v in nbrs.iter() {
                if u < v {
                    out.push((PageId(u), PageId(v)));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(|n| n.len()).sum::<usize>() / 2
    }

    /// True iff `seq` is a walk: every consecutive pair of requests is either
    /// identical or an edge. Empty and singleton sequences are walks.
    ///
    /// A request naming a vertex outside 1..=N is an error, not `false`.
    pub fn is_walk(&self, seq: &[PageId]) -> Result<bool> {
        for &p in seq {
            if !self.contains(p) {
                return Err(Error::InvalidPage {
                    id: p.get(),
                    max: self.vertex_count,
                });
            }
        }
        Ok(seq
            .windows(2)
            .all(|w| w[0] == w[1] || self.are_adjacent(w[0], w[1])))
    }

    /// Whether the graph is connected (ignoring isolated-vertex graphs of size 1).
    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count as usize;
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(i) = stack.pop() {
            for &v in &self.adjacency[i] {
                let j = (v - 1) as usize;
                if !seen[j] {
                    seen[j] = true;
                    count += 1;
                    stack.push(j);
                }
            }
        }
        count == n
    }
}

/// The graph families used by the generators and the CLI.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// `P_N`: vertices 1..=N, edges (i, i+1).
    Path(u32),
    /// `C_N`: the path plus the closing edge (N, 1).
    Cycle(u32),
    /// `K_N`: every pair of distinct vertices joined.
    Complete(u32),
    /// A chain of `n` five-cycles joined through single separator vertices.
    ///
    /// Cycle i uses vertices 5(i-1)+1 ..= 5i; separator u_i is vertex 5n+i.
    /// Edges: the five cycle edges per copy, plus (first-of-copy-i, u_i) for
    /// every i and (u_i, first-of-copy-i+1) for i < n.
    ChainedCycles(u32),
}

impl Family {
    fn param(&self) -> u32 {
        match *self {
            Family::Path(n) | Family::Cycle(n) | Family::Complete(n) | Family::ChainedCycles(n) => {
                n
            }
        }
    }

    /// The CLI shorthand, e.g. `cycle:5`.
    pub fn shorthand(&self) -> String {
        match *self {
            Family::Path(n) => format!("path:{n}"),
            Family::Cycle(n) => format!("cycle:{n}"),
            Family::Complete(n) => format!("complete:{n}"),
            Family::ChainedCycles(n) => format!("chain:{n}"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (kind, num) = s
            .split_once(':')
            .ok_or_else(|| Error::InvalidParameter(format!("bad graph spec `{s}`, expected e.g. `path:4`")))?;
        let n: u32 = num
            .parse()
            .map_err(|_| Error::InvalidParameter(format!("bad graph parameter `{num}`")))?;
        match kind {
            "path" => Ok(Family::Path(n)),
            "cycle" => Ok(Family::Cycle(n)),
            "complete" => Ok(Family::Complete(n)),
            "chain" => Ok(Family::ChainedCycles(n)),
            other => Err(Error::InvalidParameter(format!(
                "unknown graph family `{other}`"
            ))),
        }
    }
}

/// Build one of the named graph families. Parameters must be at least 1.
pub fn build_family(family: Family) -> Result<AccessGraph> {
    let n = family.param();
    if n == 0 {
        return Err(Error::InvalidParameter(format!(
            "family parameter must be at least 1, got 0 for {}",
            family.shorthand()
        )));
    }
    let page = |id: u32| PageId(id);
    match family {
        Family::Path(n) => {
            let edges: Vec<_> = (1..n).map(|i| (page(i), page(i + 1))).collect();
            AccessGraph::new(n, &edges)
        }
        Family::Cycle(n) => {
            let mut edges: Vec<_> = (1..n).map(|i| (page(i), page(i + 1))).collect();
            if n >= 3 {
                edges.push((page(n), page(1)));
            }
            // n == 2 leaves the single path edge; n == 1 has no edges at all.
            AccessGraph::new(n, &edges)
        }
        Family::Complete(n) => {
            let mut edges = Vec::new();
            for u in 1..=n {
                for v in (u + 1)..=n {
                    edges.push((page(u), page(v)));
                }
            }
            AccessGraph::new(n, &edges)
        }
        Family::ChainedCycles(n) => {
            let vertex_count = 6 * n;
            let copy_base = |i: u32| 5 * (i - 1); // vertices copy_base+1 ..= copy_base+5
            let separator = |i: u32| 5 * n + i;
            let mut edges = Vec::new();
            for i in 1..=n {
                let b = copy_base(i);
                for j in 1..5 {
                    edges.push((page(b + j), page(b + j + 1)));
                }
                edges.push((page(b + 5), page(b + 1)));
                edges.push((page(b + 1), page(separator(i))));
                if i < n {
                    edges.push((page(separator(i)), page(copy_base(i + 1) + 1)));
                }
            }
            AccessGraph::new(vertex_count, &edges)
        }
    }
}

/// Parse the edge-list text format: first line `N M`, then M lines `u v`.
///
/// Rejects malformed lines, duplicate edges, self-loops, and out-of-range
/// endpoints, reporting the offending 1-based line number.
pub fn parse_edge_list(text: &str) -> Result<AccessGraph> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines
        .next()
        .ok_or_else(|| Error::Parse {
            line: 1,
            message: "empty input".into(),
        })?;
    let mut parts = header.split_whitespace();
    let n: u32 = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::Parse {
            line: 1,
            message: "expected `N M` header".into(),
        })?;
    let m: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::Parse {
            line: 1,
            message: "expected `N M` header".into(),
        })?;
    if parts.next().is_some() {
        return Err(Error::Parse {
            line: 1,
            message: "trailing tokens after `N M` header".into(),
        });
    }
    if n == 0 {
        return Err(Error::Parse {
            line: 1,
            message: "graph must have at least one vertex".into(),
        });
    }

    let mut seen = BTreeSet::new();
    let mut edges = Vec::with_capacity(m);
    let mut read = 0usize;
    for (idx, line) in lines {
        let lineno = idx + 1;
        if line.trim().is_empty() {
            continue;
        }
        if read == m {
            return Err(Error::Parse {
                line: lineno,
                message: format!("more than the declared {m} edges"),
            });
        }
        let mut toks = line.split_whitespace();
        let parse_endpoint = |tok: Option<&str>| -> Result<u32> {
            tok.and_then(|t| t.parse().ok()).ok_or_else(|| Error::Parse {
                line: lineno,
                message: format!("expected `u v`, got `{line}`"),
            })
        };
        let u = parse_endpoint(toks.next())?;
        let v = parse_endpoint(toks.next())?;
        if toks.next().is_some() {
            return Err(Error::Parse {
                line: lineno,
                message: format!("trailing tokens in `{line}`"),
            });
        }
        if u == v {
            return Err(Error::Parse {
                line: lineno,
                message: format!("self-loop ({u},{v})"),
            });
        }
        if u == 0 || v == 0 || u > n || v > n {
            return Err(Error::Parse {
                line: lineno,
                message: format!("endpoint out of range 1..={n} in `{line}`"),
            });
        }
        let key = (u.min(v), u.max(v));
        if !seen.insert(key) {
            return Err(Error::Parse {
                line: lineno,
                message: format!("duplicate edge ({u},{v})"),
            });
        }
        edges.push((PageId(u), PageId(v)));
        read += 1;
    }
    if read != m {
        return Err(Error::Parse {
            line: text.lines().count(),
            message: format!("declared {m} edges but found {read}"),
        });
    }
    AccessGraph::new(n, &edges)
}

/// Rotational direction on a canonically labeled cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// Increasing label mod N.
    Clockwise,
    /// Decreasing label mod N.
    Anticlockwise,
}

impl Direction {
    pub fn opposite(self) -> Direction {
        match self {
            Direction::Clockwise => Direction::Anticlockwise,
            Direction::Anticlockwise => Direction::Clockwise,
        }
    }
}

/// A view of a canonically labeled cycle `C_N` (N >= 3) giving the
/// clockwise/anticlockwise structure the turn decomposition relies on.
#[derive(Debug, Clone, Copy)]
pub struct CycleTopology {
    n: u32,
}

impl CycleTopology {
    /// Accepts exactly the graphs produced by `build_family(Cycle(N))` for
    /// N >= 3. Cycles with scrambled labels have no fixed orientation
    /// convention and are rejected.
    pub fn from_graph(g: &AccessGraph) -> Result<Self> {
        let n = g.vertex_count();
        if n < 3 {
            return Err(Error::NotCanonical {
                expected: "cycle",
                message: format!("need at least 3 vertices, got {n}"),
            });
        }
        let canonical = build_family(Family::Cycle(n)).expect("n >= 3");
        if *g != canonical {
            return Err(Error::NotCanonical {
                expected: "cycle",
                message: "edges must be (1,2),(2,3),...,(N,1)".into(),
            });
        }
        Ok(CycleTopology { n })
    }

    pub fn vertex_count(&self) -> u32 {
        self.n
    }

    pub fn next(&self, p: PageId, dir: Direction) -> PageId {
        let id = p.get();
        match dir {
            Direction::Clockwise => PageId(if id == self.n { 1 } else { id + 1 }),
            Direction::Anticlockwise => PageId(if id == 1 { self.n } else { id - 1 }),
        }
    }

    /// The direction of the edge from `from` to `to`, or None if they are not
    /// adjacent on the cycle.
    pub fn direction(&self, from: PageId, to: PageId) -> Option<Direction> {
        if self.next(from, Direction::Clockwise) == to {
            Some(Direction::Clockwise)
        } else if self.next(from, Direction::Anticlockwise) == to {
            Some(Direction::Anticlockwise)
        } else {
            None
        }
    }

    /// The neighbor of `v` other than `u`. Requires `u` adjacent to `v`.
    pub fn other_neighbor(&self, v: PageId, u: PageId) -> Option<PageId> {
        let cw = self.next(v, Direction::Clockwise);
        let acw = self.next(v, Direction::Anticlockwise);
        if u == cw {
            Some(acw)
        } else if u == acw {
            Some(cw)
        } else {
            None
        }
    }
}

/// Checks that `g` is the canonically labeled path `P_N` (edges (i, i+1)).
pub fn require_canonical_path(g: &AccessGraph) -> Result<()> {
    let canonical = build_family(Family::Path(g.vertex_count()))?;
    if *g != canonical {
        return Err(Error::NotCanonical {
            expected: "path",
            message: "edges must be (1,2),(2,3),...,(N-1,N)".into(),
        });
    }
    Ok(())
}

/// Visit every walk on `g` with between 1 and `max_len` requests (length
/// counts vertices, and consecutive repeats are allowed). Walks are produced
/// in lexicographic order, shorter prefixes before their extensions.
pub fn for_each_walk<F: FnMut(&[PageId])>(g: &AccessGraph, max_len: usize, mut visit: F) {
    if max_len == 0 {
        return;
    }
    let mut walk: Vec<PageId> = Vec::with_capacity(max_len);
    for start in 1..=g.vertex_count() {
        walk.push(PageId(start));
        visit_walks_from(g, max_len, &mut walk, &mut visit);
        walk.pop();
    }
}

fn visit_walks_from<F: FnMut(&[PageId])>(
    g: &AccessGraph,
    max_len: usize,
    walk: &mut Vec<PageId>,
    visit: &mut F,
) {
    visit(walk);
    if walk.len() == max_len {
        return;
    }
    let cur = *walk.last().expect("walk is nonempty");
    // Candidates in increasing label order: stay in place or cross an edge.
    let mut nexts: Vec<PageId> = g.neighbors(cur).collect();
    nexts.push(cur);
    nexts.sort_unstable();
    for next in nexts {
        walk.push(next);
        visit_walks_from(g, max_len, walk, visit);
        walk.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(id: u32) -> PageId {
        PageId::new(id).unwrap()
    }

    fn seq(ids: &[u32]) -> Vec<PageId> {
        ids.iter().map(|&i| p(i)).collect()
    }

    #[test]
    fn path_4_edges() {
        let g = build_family(Family::Path(4)).unwrap();
        assert_eq!(g.edges(), vec![(p(1), p(2)), (p(2), p(3)), (p(3), p(4))]);
    }

    #[test]
    fn cycle_5_edges() {
        let g = build_family(Family::Cycle(5)).unwrap();
        assert_eq!(
            g.edges(),
            vec![
                (p(1), p(2)),
                (p(1), p(5)),
                (p(2), p(3)),
                (p(3), p(4)),
                (p(4), p(5)),
            ]
        );
        assert_eq!(g.edge_count(), 5);
    }

    /// Oracle for the chained-cycle counts: enumerate the edges the
    /// construction rule prescribes and count them independently.
    fn chained_cycle_edge_oracle(n: u32) -> (u32, usize) {
        let vertices = 5 * n + n;
        let mut edges: BTreeSet<(u32, u32)> = BTreeSet::new();
        let mut add = |u: u32, v: u32| edges.insert((u.min(v), u.max(v)));
        for i in 1..=n {
            let b = 5 * (i - 1);
            // five cycle edges of copy i
            add(b + 1, b + 2);
            add(b + 2, b + 3);
            add(b + 3, b + 4);
            add(b + 4, b + 5);
            add(b + 5, b + 1);
            // connector to this copy's separator
            add(b + 1, 5 * n + i);
            // separator to the next copy
            if i < n {
                add(5 * n + i, 5 * i + 1);
            }
        }
        (vertices, edges.len())
    }

    #[test]
    fn chained_cycles_4_counts_match_oracle() {
        let (vertices, edge_count) = chained_cycle_edge_oracle(4);
        assert_eq!(vertices, 24);
        // 5 cycle edges per copy (20), one connector per separator (4), and
        // one bridge between consecutive copies (3).
        assert_eq!(edge_count, 27);

        let g = build_family(Family::ChainedCycles(4)).unwrap();
        assert_eq!(g.vertex_count(), vertices);
        assert_eq!(g.edge_count(), edge_count);
    }

    #[test]
    fn chained_cycles_structure() {
        let g = build_family(Family::ChainedCycles(2)).unwrap();
        assert_eq!(g.vertex_count(), 12);
        // copy 1 is 1..5, copy 2 is 6..10, separators are 11 and 12
        assert!(g.are_adjacent(p(1), p(11)));
        assert!(g.are_adjacent(p(11), p(6)));
        assert!(g.are_adjacent(p(6), p(12)));
        assert!(!g.are_adjacent(p(12), p(1)));
        assert_eq!(g.degree(p(12)), 1);
        assert!(g.is_connected());
    }

    #[test]
    fn family_param_zero_rejected() {
        for f in [
            Family::Path(0),
            Family::Cycle(0),
            Family::Complete(0),
            Family::ChainedCycles(0),
        ] {
            assert!(build_family(f).is_err());
        }
    }

    #[test]
    fn family_shorthand_round_trip() {
        for s in ["path:4", "cycle:5", "complete:3", "chain:2"] {
            let f: Family = s.parse().unwrap();
            assert_eq!(f.shorthand(), s);
        }
        assert!("ring:4".parse::<Family>().is_err());
        assert!("path".parse::<Family>().is_err());
        assert!("path:x".parse::<Family>().is_err());
    }

    #[test]
    fn walk_examples() {
        let c4 = build_family(Family::Cycle(4)).unwrap();
        assert!(c4.is_walk(&seq(&[2, 1, 2, 3, 4, 1])).unwrap());

        let p3 = build_family(Family::Path(3)).unwrap();
        assert!(!p3.is_walk(&seq(&[1, 3])).unwrap());
        assert!(p3.is_walk(&seq(&[2, 2, 2])).unwrap());
        assert!(p3.is_walk(&[]).unwrap());
        assert!(p3.is_walk(&seq(&[3])).unwrap());
    }

    #[test]
    fn walk_rejects_out_of_range_page() {
        let p3 = build_family(Family::Path(3)).unwrap();
        match p3.is_walk(&seq(&[1, 2, 4])) {
            Err(Error::InvalidPage { id: 4, max: 3 }) => {}
            other => panic!("expected invalid-page error, got {other:?}"),
        }
    }

    #[test]
    fn path_properties() {
        for n in 1..8u32 {
            let g = build_family(Family::Path(n)).unwrap();
            assert!(g.is_connected());
            assert_eq!(g.edge_count() as u32, n - 1); // connected + n-1 edges = acyclic
            assert!((1..=n).all(|v| g.degree(p(v)) <= 2));
        }
    }

    #[test]
    fn cycle_properties() {
        for n in 3..9u32 {
            let g = build_family(Family::Cycle(n)).unwrap();
            assert!(g.is_connected());
            assert!((1..=n).all(|v| g.degree(p(v)) == 2));
        }
    }

    #[test]
    fn parse_edge_list_cycle() {
        let g = parse_edge_list("5 5\n1 2\n2 3\n3 4\n4 5\n5 1").unwrap();
        assert_eq!(g, build_family(Family::Cycle(5)).unwrap());
    }

    #[test]
    fn parse_edge_list_single_edge() {
        let g = parse_edge_list("3 1\n1 3").unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edges(), vec![(p(1), p(3))]);
    }

    #[test]
    fn parse_edge_list_errors() {
        // self-loop
        match parse_edge_list("3 1\n1 1") {
            Err(Error::Parse { line: 2, .. }) => {}
            other => panic!("expected parse error on line 2, got {other:?}"),
        }
        // duplicate edge, including reversed form
        assert!(parse_edge_list("3 2\n1 2\n2 1").is_err());
        // endpoint out of range
        assert!(parse_edge_list("3 1\n1 4").is_err());
        // malformed line
        assert!(parse_edge_list("3 1\n1").is_err());
        // wrong edge count
        assert!(parse_edge_list("3 2\n1 2").is_err());
    }

    #[test]
    fn cycle_topology_orientation() {
        let g = build_family(Family::Cycle(5)).unwrap();
        let cyc = CycleTopology::from_graph(&g).unwrap();
        assert_eq!(cyc.next(p(5), Direction::Clockwise), p(1));
        assert_eq!(cyc.next(p(1), Direction::Anticlockwise), p(5));
        assert_eq!(cyc.direction(p(2), p(3)), Some(Direction::Clockwise));
        assert_eq!(cyc.direction(p(3), p(2)), Some(Direction::Anticlockwise));
        assert_eq!(cyc.direction(p(1), p(3)), None);
        assert_eq!(cyc.other_neighbor(p(2), p(1)), Some(p(3)));
        assert_eq!(cyc.other_neighbor(p(2), p(4)), None);
    }

    #[test]
    fn cycle_topology_rejects_non_cycles() {
        let path = build_family(Family::Path(5)).unwrap();
        assert!(CycleTopology::from_graph(&path).is_err());
        let tiny = build_family(Family::Cycle(2)).unwrap();
        assert!(CycleTopology::from_graph(&tiny).is_err());
    }

    #[test]
    fn walk_enumeration_counts() {
        // On P_2 with max length 2: walks are 1; 2; 1,1; 1,2; 2,1; 2,2.
        let g = build_family(Family::Path(2)).unwrap();
        let mut walks = Vec::new();
        for_each_walk(&g, 2, |w| walks.push(w.to_vec()));
        assert_eq!(walks.len(), 6);
        assert!(walks.contains(&seq(&[1, 2])));
        assert!(walks.contains(&seq(&[2, 2])));
    }
}
