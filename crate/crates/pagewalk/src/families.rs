//! Generators for the named request-sequence families, each paired with the
//! graph it walks on so callers cannot mismatch them.

use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{build_family, AccessGraph, Family, PageId, RequestSequence};

/// The sequence families understood by the CLI and the ratio curves.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyKind {
    /// n repetitions of the zig-zag block 1..k+1..2 on the path P_{k+1}.
    In,
    /// s+1 sliding V-blocks on a path with k+s vertices.
    Is,
    /// r repetitions of the 8-request loop through the first chained cycle
    /// and its separator.
    Jr,
    /// The chained-cycle tour: each copy's 10-request pattern followed by its
    /// separator vertex.
    ScriptIn,
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "In" => Ok(FamilyKind::In),
            "Is" => Ok(FamilyKind::Is),
            "Jr" => Ok(FamilyKind::Jr),
            "ScriptIn" => Ok(FamilyKind::ScriptIn),
            other => Err(Error::InvalidParameter(format!(
                "unknown family `{other}`, expected In, Is, Jr, or ScriptIn"
            ))),
        }
    }
}

fn page(id: u32) -> PageId {
    PageId::new(id).expect("generator labels start at 1")
}

/// `n` repetitions of the 2k-request block 1,2,...,k,k+1,k,...,2 on P_{k+1}.
pub fn gen_in(k: u32, n: u32) -> Result<(RequestSequence, AccessGraph)> {
    if k < 2 {
        return Err(Error::InvalidParameter("In requires k >= 2".into()));
    }
    if n < 1 {
        return Err(Error::InvalidParameter("In requires n >= 1".into()));
    }
    let mut block: Vec<PageId> = (1..=k + 1).map(page).collect();
    block.extend((2..=k).rev().map(page));
    debug_assert_eq!(block.len() as u32, 2 * k);
    let seq = block.repeat(n as usize);
    let graph = build_family(Family::Path(k + 1))?;
    Ok((seq, graph))
}

/// The concatenation of blocks S_0..S_s on a path with k+s vertices, where
/// S_i walks from i+k down to i+1 and back up.
pub fn gen_is(k: u32, s: u32) -> Result<(RequestSequence, AccessGraph)> {
    if k < 2 {
        return Err(Error::InvalidParameter("Is requires k >= 2".into()));
    }
    let mut seq = Vec::new();
    for i in 0..=s {
        // i+k, i+k-1, ..., i+1, i+2, ..., i+k
        seq.extend((i + 1..=i + k).rev().map(page));
        seq.extend((i + 2..=i + k).map(page));
    }
    let graph = build_family(Family::Path(k + s))?;
    Ok((seq, graph))
}

/// The 10-request pattern of chained-cycle copy `i`, using the copy's own
/// labels (copy i occupies vertices 5(i-1)+1 ..= 5i).
pub fn gen_i1_copy(i: u32) -> Result<RequestSequence> {
    if i < 1 {
        return Err(Error::InvalidParameter("copy index starts at 1".into()));
    }
    let b = 5 * (i - 1);
    Ok([1, 5, 1, 2, 3, 4, 5, 1, 2, 1]
        .iter()
        .map(|&j| page(b + j))
        .collect())
}

/// The full chained-cycle tour: copy patterns joined by their separator
/// vertices, on the chained-cycles graph with `n` copies.
pub fn gen_script_in(n: u32) -> Result<(RequestSequence, AccessGraph)> {
    if n < 1 {
        return Err(Error::InvalidParameter("ScriptIn requires n >= 1".into()));
    }
    let mut seq = Vec::with_capacity(11 * n as usize);
    for i in 1..=n {
        seq.extend(gen_i1_copy(i)?);
        seq.push(page(5 * n + i));
    }
    let graph = build_family(Family::ChainedCycles(n))?;
    Ok((seq, graph))
}

/// `r` repetitions of the 8-request loop 4,3,2,1,u,1,2,3 through the first
/// chained cycle, on the single-copy chained-cycles graph (u is vertex 6).
pub fn gen_jr(r: u32) -> Result<(RequestSequence, AccessGraph)> {
    if r < 1 {
        return Err(Error::InvalidParameter("Jr requires r >= 1".into()));
    }
    let graph = build_family(Family::ChainedCycles(1))?;
    let separator = 6;
    let block: Vec<PageId> = [4, 3, 2, 1, separator, 1, 2, 3].iter().map(|&j| page(j)).collect();
    Ok((block.repeat(r as usize), graph))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::paging::{simulate, CacheConfig, Policy};

    fn ids(seq: &[PageId]) -> Vec<u32> {
        seq.iter().map(|p| p.get()).collect()
    }

    #[test]
    fn in_block_instances() {
        let (seq, g) = gen_in(3, 1).unwrap();
        assert_eq!(ids(&seq), vec![1, 2, 3, 4, 3, 2]);
        assert_eq!(g.vertex_count(), 4);
        assert!(g.is_walk(&seq).unwrap());

        let (seq, _) = gen_in(2, 2).unwrap();
        assert_eq!(ids(&seq), vec![1, 2, 3, 2, 1, 2, 3, 2]);
    }

    #[test]
    fn in_lengths_and_walks() {
        for k in 2..=6 {
            for n in 1..=5 {
                let (seq, g) = gen_in(k, n).unwrap();
                assert_eq!(seq.len() as u32, 2 * k * n);
                assert!(g.is_walk(&seq).unwrap());
            }
        }
    }

    #[test]
    fn in_fifo_fault_counts() {
        // Each block costs FIFO exactly k+1 faults.
        for k in 2..=4u32 {
            for n in 1..=5u32 {
                let (seq, _) = gen_in(k, n).unwrap();
                let cfg = CacheConfig::new(k as usize).unwrap();
                assert_eq!(
                    simulate(Policy::Fifo, &seq, cfg).total_faults as u32,
                    (k + 1) * n
                );
            }
        }
    }

    #[test]
    fn in_fwf_faults_on_every_request() {
        for k in 2..=4u32 {
            for n in 1..=4u32 {
                let (seq, _) = gen_in(k, n).unwrap();
                let cfg = CacheConfig::new(k as usize).unwrap();
                let trace = simulate(Policy::Fwf, &seq, cfg);
                assert_eq!(trace.total_faults, seq.len());
            }
        }
    }

    #[test]
    fn is_block_instance() {
        let (seq, g) = gen_is(3, 0).unwrap();
        assert_eq!(ids(&seq), vec![3, 2, 1, 2, 3]);
        assert_eq!(g.vertex_count(), 3);
        assert!(g.is_walk(&seq).unwrap());
    }

    #[test]
    fn is_fault_counts() {
        // LRU pays k once then one fault per extra block; FIFO pays k per block.
        for k in 2..=4u32 {
            for s in 0..=4u32 {
                let (seq, g) = gen_is(k, s).unwrap();
                assert!(g.is_walk(&seq).unwrap());
                let cfg = CacheConfig::new(k as usize).unwrap();
                assert_eq!(
                    simulate(Policy::Lru, &seq, cfg).total_faults as u32,
                    k + s
                );
                assert_eq!(
                    simulate(Policy::Fifo, &seq, cfg).total_faults as u32,
                    k + k * s
                );
            }
        }
    }

    #[test]
    fn copy_pattern_and_multiset() {
        let seq = gen_i1_copy(1).unwrap();
        assert_eq!(ids(&seq), vec![1, 5, 1, 2, 3, 4, 5, 1, 2, 1]);

        let mut counts = std::collections::BTreeMap::new();
        for p in &seq {
            *counts.entry(p.get()).or_insert(0u32) += 1;
        }
        assert_eq!(
            counts.into_iter().collect::<Vec<_>>(),
            vec![(1, 4), (2, 2), (3, 1), (4, 1), (5, 2)]
        );

        // copy 2 is the same pattern shifted onto vertices 6..10
        let seq2 = gen_i1_copy(2).unwrap();
        assert_eq!(ids(&seq2), vec![6, 10, 6, 7, 8, 9, 10, 6, 7, 6]);
    }

    #[test]
    fn copy_pattern_walks_its_cycle() {
        let (_, g) = gen_script_in(3).unwrap();
        for i in 1..=3 {
            let seq = gen_i1_copy(i).unwrap();
            assert!(g.is_walk(&seq).unwrap());
        }
    }

    #[test]
    fn script_in_structure() {
        let (seq, g) = gen_script_in(1).unwrap();
        assert_eq!(ids(&seq), vec![1, 5, 1, 2, 3, 4, 5, 1, 2, 1, 6]);
        assert_eq!(seq.len(), 11);
        assert!(g.is_walk(&seq).unwrap());

        for n in 1..=4u32 {
            let (seq, g) = gen_script_in(n).unwrap();
            assert_eq!(seq.len() as u32, 11 * n);
            assert!(g.is_walk(&seq).unwrap());
            // every separator vertex appears exactly once
            for i in 1..=n {
                let sep = 5 * n + i;
                assert_eq!(seq.iter().filter(|p| p.get() == sep).count(), 1);
            }
        }
    }

    #[test]
    fn jr_structure() {
        let (seq, g) = gen_jr(1).unwrap();
        assert_eq!(seq.len(), 8);
        let distinct: std::collections::BTreeSet<u32> = seq.iter().map(|p| p.get()).collect();
        assert_eq!(distinct.len(), 5);
        assert!(g.is_walk(&seq).unwrap());

        for r in 1..=4u32 {
            let (seq, g) = gen_jr(r).unwrap();
            assert_eq!(seq.len() as u32, 8 * r);
            assert!(g.is_walk(&seq).unwrap());
            // LRU must fault at least once per repetition: k+1 pages per loop
            let cfg = CacheConfig::new(4).unwrap();
            assert!(simulate(Policy::Lru, &seq, cfg).total_faults as u32 >= r);
        }
    }

    #[test]
    fn degenerate_parameters_rejected() {
        assert!(gen_in(1, 1).is_err());
        assert!(gen_in(3, 0).is_err());
        assert!(gen_is(1, 0).is_err());
        assert!(gen_script_in(0).is_err());
        assert!(gen_jr(0).is_err());
        assert!(gen_i1_copy(0).is_err());
    }
}
