//! Structure of walks on cycles and paths.
//!
//! A duplicate-free walk on a cycle decomposes uniquely into a turn sequence
//! ⟨A_1, v_1, A_2, v_2, ..., A_z, v_z⟩: the v_i are the requests where the
//! direction of travel reverses (plus the final request as v_z) and the A_i
//! are the uni-directional stretches between them. On top of that
//! decomposition this module implements the worst-ordering normal form for
//! LRU on cycles as a chain of fault-preserving rewrites:
//!
//! 1. collapse runs of identical requests,
//! 2. lengthen the stretch before the first turn to at least k-1 requests,
//! 3. remove trivial turns (turn-backs that revisit fewer than k pages),
//! 4. remove overlaps (re-crossing a turned edge after circling the cycle).
//!
//! Each rewrite deletes only hits or reorders requests, so LRU's fault count
//! never decreases; the rewrites repeat until they reach a fixed point. For
//! path graphs the module provides the FIFO block decomposition (cut after
//! every (k+1)-st fault) and the block reversal that forces LRU to fault at
//! least twice per block.
//!
//! The "first fault after a turn" that drives rewrites 2 and 3 is located by
//! replaying LRU, not by position arithmetic.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{AccessGraph, CycleTopology, Direction, PageId, RequestSequence};
use crate::paging::{simulate, CacheConfig, Outcome, Policy};

/// Upper bound on rewrite steps before normalization reports an error.
pub const REWRITE_BUDGET: usize = 1_000_000;

/// The turn-sequence decomposition of a cycle walk.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TurnSequence {
    /// Uni-directional stretches A_1..A_z. A segment may be empty when two
    /// turns are adjacent; A_1 is empty only for a single-request walk.
    pub segments: Vec<RequestSequence>,
    /// v_1..v_z: the turning points, with the final request as v_z.
    pub turns: Vec<PageId>,
    /// Positions of the turns in the source sequence.
    pub turn_positions: Vec<usize>,
    /// Travel direction of each span (v_{i-1}, A_i, v_i). None only for the
    /// edgeless single-request walk.
    pub directions: Vec<Option<Direction>>,
}

impl TurnSequence {
    /// Number of turns, counting the final request.
    pub fn z(&self) -> usize {
        self.turns.len()
    }

    /// Interleave segments and turns back into the source sequence.
    pub fn reassemble(&self) -> RequestSequence {
        let mut out = Vec::new();
        for (segment, &turn) in self.segments.iter().zip(&self.turns) {
            out.extend(segment);
            out.push(turn);
        }
        out
    }

    /// Human-readable rendering, e.g. `A1=[1,2] v1=3(extreme) A2=[2,1] v2=5(last)`.
    pub fn pretty(&self, cfg: CacheConfig) -> String {
        let classes = classify_turns(self, cfg);
        let mut out = String::new();
        for (i, (segment, &turn)) in self.segments.iter().zip(&self.turns).enumerate() {
            if i > 0 {
                out.push(' ');
            }
            let ids: Vec<String> = segment.iter().map(|p| p.to_string()).collect();
            let label = match classes[i] {
                TurnClass::Extreme => "extreme",
                TurnClass::Trivial => "trivial",
                TurnClass::Last => "last",
            };
            out.push_str(&format!(
                "A{n}=[{}] v{n}={turn}({label})",
                ids.join(","),
                n = i + 1
            ));
        }
        out
    }
}

/// Classification of each turn.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TurnClass {
    /// The stretch after the turn, together with the next turn, covers at
    /// least k distinct pages: the cache starts evicting before turning back.
    Extreme,
    /// Fewer than k distinct pages before the next turn.
    Trivial,
    /// The final request.
    Last,
}

fn validate_cycle_walk(seq: &[PageId], cyc: &CycleTopology) -> Result<()> {
    for &p in seq {
        if p.get() > cyc.vertex_count() {
            return Err(Error::InvalidPage {
                id: p.get(),
                max: cyc.vertex_count(),
            });
        }
    }
    for (i, w) in seq.windows(2).enumerate() {
        if w[0] == w[1] {
            return Err(Error::NormalizationRequired(i));
        }
        if cyc.direction(w[0], w[1]).is_none() {
            return Err(Error::NotAWalk(format!(
                "{} and {} are not adjacent on the cycle",
                w[0], w[1]
            )));
        }
    }
    Ok(())
}

/// Decompose a duplicate-free cycle walk into its turn sequence.
///
/// Turns are exactly the interior requests r_i with r_{i-1} = r_{i+1}; the
/// final request closes the decomposition as v_z. Consecutive duplicates are
/// rejected so the caller collapses them first.
pub fn decompose_turns(seq: &[PageId], cyc: &CycleTopology) -> Result<TurnSequence> {
    if seq.is_empty() {
        return Err(Error::InvalidParameter(
            "empty sequence has no turn decomposition".into(),
        ));
    }
    validate_cycle_walk(seq, cyc)?;

    let mut turn_positions: Vec<usize> = (1..seq.len().saturating_sub(1))
        .filter(|&i| seq[i - 1] == seq[i + 1])
        .collect();
    turn_positions.push(seq.len() - 1);

    let mut segments = Vec::with_capacity(turn_positions.len());
    let mut turns = Vec::with_capacity(turn_positions.len());
    let mut directions = Vec::with_capacity(turn_positions.len());
    let mut span_start = 0;
    for &pos in &turn_positions {
        segments.push(seq[span_start..pos].to_vec());
        turns.push(seq[pos]);
        directions.push(if pos == 0 {
            None
        } else {
            cyc.direction(seq[pos - 1], seq[pos])
        });
        span_start = pos + 1;
    }

    let t = TurnSequence {
        segments,
        turns,
        turn_positions,
        directions,
    };
    debug_assert_eq!(t.reassemble(), seq);
    debug_assert!(spans_are_unidirectional(&t, seq, cyc));
    Ok(t)
}

fn spans_are_unidirectional(t: &TurnSequence, seq: &[PageId], cyc: &CycleTopology) -> bool {
    let mut span_start = 0;
    for &pos in &t.turn_positions {
        let span = &seq[span_start..=pos];
        let mut dir = None;
        for w in span.windows(2) {
            let d = cyc.direction(w[0], w[1]);
            if dir.is_some() && d != dir {
                return false;
            }
            dir = d;
        }
        span_start = pos + 1;
    }
    true
}

/// Label every turn as extreme, trivial, or last.
pub fn classify_turns(t: &TurnSequence, cfg: CacheConfig) -> Vec<TurnClass> {
    let z = t.z();
    let k = cfg.k();
    (0..z)
        .map(|i| {
            if i + 1 == z {
                TurnClass::Last
            } else {
                let mut pages: std::collections::BTreeSet<u32> =
                    t.segments[i + 1].iter().map(|p| p.get()).collect();
                pages.insert(t.turns[i + 1].get());
                if pages.len() >= k {
                    TurnClass::Extreme
                } else {
                    TurnClass::Trivial
                }
            }
        })
        .collect()
}

/// Hit count of LRU on a sequence in fully normalized form (every segment at
/// least k-1 long, no trivial turns, no consecutive duplicates): each turn
/// after the first walk-back earns exactly k-1 hits.
pub fn lru_hits_closed_form(t: &TurnSequence, cfg: CacheConfig) -> usize {
    (t.z() - 1) * (cfg.k() - 1)
}

/// Collapse every run of identical requests to a single request.
pub fn remove_consecutive_duplicates(seq: &[PageId]) -> RequestSequence {
    let mut out: RequestSequence = Vec::with_capacity(seq.len());
    for &p in seq {
        if out.last() != Some(&p) {
            out.push(p);
        }
    }
    out
}

/// Index of the first LRU fault strictly after `pos`, if any.
fn first_lru_fault_after(seq: &[PageId], cfg: CacheConfig, pos: usize) -> Option<usize> {
    simulate(Policy::Lru, seq, cfg)
        .events
        .iter()
        .skip(pos + 1)
        .find(|e| e.outcome == Outcome::Fault)
        .map(|e| e.index)
}

enum StepOutcome {
    Unchanged,
    Rewritten(RequestSequence),
}

/// One rewrite toward a long first stretch. Requires a duplicate-free walk.
///
/// When the stretch before the first turn is shorter than k-1, everything up
/// to the first LRU fault after that turn is a revisit of pages already in
/// cache, so either the prefix or the wandering in between can be deleted
/// without touching any fault.
fn first_walk_step(
    seq: &[PageId],
    cyc: &CycleTopology,
    cfg: CacheConfig,
) -> Result<StepOutcome> {
    let t = decompose_turns(seq, cyc)?;
    if t.z() == 1 || t.segments[0].len() >= cfg.k().saturating_sub(1) {
        return Ok(StepOutcome::Unchanged);
    }
    let first_turn = t.turn_positions[0];
    let Some(fault_pos) = first_lru_fault_after(seq, cfg, first_turn) else {
        // Everything after the turn is a hit; cut it off.
        return Ok(StepOutcome::Rewritten(seq[..=first_turn].to_vec()));
    };
    let entered_from = seq[fault_pos - 1];
    if entered_from == seq[0] {
        // Walked back past the start of the first stretch: the prefix before
        // the turn is re-requested later, so dropping it keeps every fault.
        Ok(StepOutcome::Rewritten(seq[first_turn..].to_vec()))
    } else if entered_from == seq[first_turn] {
        // Walked back through the turn itself: the requests strictly between
        // the turn and the fault are hits inside the known stretch.
        let mut out = seq[..=first_turn].to_vec();
        out.extend_from_slice(&seq[fault_pos..]);
        Ok(StepOutcome::Rewritten(out))
    } else {
        Err(Error::Internal(format!(
            "first fault after the turn entered from {entered_from}, \
             expected {} or {}",
            seq[0], seq[first_turn]
        )))
    }
}

/// One rewrite removing the first trivial turn. Requires the long-first-walk
/// form (the loop in `remove_trivial_turns` maintains it).
fn trivial_turn_step(
    seq: &[PageId],
    cyc: &CycleTopology,
    cfg: CacheConfig,
) -> Result<StepOutcome> {
    let t = decompose_turns(seq, cyc)?;
    let classes = classify_turns(&t, cfg);
    let Some(i) = classes.iter().position(|c| *c == TurnClass::Trivial) else {
        return Ok(StepOutcome::Unchanged);
    };
    let turn_pos = t.turn_positions[i];
    let next_turn_pos = t.turn_positions[i + 1];
    let turn_vertex = seq[turn_pos];
    let next_turn_vertex = seq[next_turn_pos];

    let Some(fault_pos) = first_lru_fault_after(seq, cfg, next_turn_pos) else {
        // Only hits remain; cut the sequence off after the trivial turn.
        return Ok(StepOutcome::Rewritten(seq[..=turn_pos].to_vec()));
    };
    let fault_vertex = seq[fault_pos];
    let entered_from = seq[fault_pos - 1];
    let entry_dir = cyc
        .direction(seq[turn_pos - 1], turn_vertex)
        .ok_or_else(|| Error::Internal("turn has no entry direction".into()))?;

    if entered_from == turn_vertex {
        // The walk re-crossed the trivial turn and faulted just beyond it.
        // Splice out the span from the earlier visit of the next turning
        // point through the turn-back; all of it is re-requested before the
        // fault.
        if cyc.direction(entered_from, fault_vertex) != Some(entry_dir) {
            return Err(Error::Internal(
                "fault beyond a re-crossed turn must continue its entry direction".into(),
            ));
        }
        let earlier_visit = seq[..turn_pos]
            .iter()
            .rposition(|&x| x == next_turn_vertex)
            .ok_or_else(|| {
                Error::Internal("turn-back target never requested before the turn".into())
            })?;
        let mut out = seq[..=earlier_visit].to_vec();
        out.extend_from_slice(&seq[next_turn_pos + 1..]);
        Ok(StepOutcome::Rewritten(out))
    } else {
        // The walk left through the far end of the revisited stretch.
        // Replace the whole wandering with the straight arc to the fault.
        let out_dir = entry_dir.opposite();
        if cyc.direction(entered_from, fault_vertex) != Some(out_dir) {
            return Err(Error::Internal(
                "fault past the far end must continue away from the turn".into(),
            ));
        }
        let mut arc = Vec::new();
        let mut v = cyc.next(turn_vertex, out_dir);
        while v != fault_vertex {
            arc.push(v);
            if arc.len() > cyc.vertex_count() as usize {
                return Err(Error::Internal("arc to the fault wrapped the cycle".into()));
            }
            v = cyc.next(v, out_dir);
        }
        let mut out = seq[..=turn_pos].to_vec();
        out.extend(arc);
        out.extend_from_slice(&seq[fault_pos..]);
        Ok(StepOutcome::Rewritten(out))
    }
}

/// Rewrite until the stretch before the first turn holds at least k-1
/// requests, or the whole walk is a single uni-directional stretch.
///
/// Never decreases LRU's fault count; every surviving page keeps at least
/// one request.
pub fn enforce_long_first_walk(
    seq: &[PageId],
    cyc: &CycleTopology,
    cfg: CacheConfig,
) -> Result<RequestSequence> {
    let mut current = seq.to_vec();
    if current.is_empty() {
        return Ok(current);
    }
    for _ in 0..REWRITE_BUDGET {
        match first_walk_step(&current, cyc, cfg)? {
            StepOutcome::Unchanged => return Ok(current),
            StepOutcome::Rewritten(next) => current = next,
        }
    }
    Err(Error::RewriteBudget {
        budget: REWRITE_BUDGET,
    })
}

/// Rewrite until no trivial turns remain, re-establishing the long first
/// stretch whenever a splice shortens it. Removes only hits.
pub fn remove_trivial_turns(
    seq: &[PageId],
    cyc: &CycleTopology,
    cfg: CacheConfig,
) -> Result<RequestSequence> {
    let mut current = seq.to_vec();
    if current.is_empty() {
        return Ok(current);
    }
    for _ in 0..REWRITE_BUDGET {
        match first_walk_step(&current, cyc, cfg)? {
            StepOutcome::Rewritten(next) => {
                current = next;
                continue;
            }
            StepOutcome::Unchanged => {}
        }
        match trivial_turn_step(&current, cyc, cfg)? {
            StepOutcome::Rewritten(next) => current = next,
            StepOutcome::Unchanged => return Ok(current),
        }
    }
    Err(Error::RewriteBudget {
        budget: REWRITE_BUDGET,
    })
}

/// An occurrence of the pattern ⟨..., u, v, u, B, w, v, ...⟩ for consecutive
/// cycle vertices u, v, w: after turning back over the edge (u, v), the walk
/// circles around and re-enters v from the far side.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OverlapWitness {
    pub u: PageId,
    pub v: PageId,
    pub w: PageId,
    /// Position of the first `u` of the pattern.
    pub start: usize,
    /// Position of the `w` just before the re-entering `v`.
    pub reentry: usize,
}

/// Find the first overlap pattern in a duplicate-free cycle walk.
pub fn find_overlap(seq: &[PageId], cyc: &CycleTopology) -> Option<OverlapWitness> {
    for start in 0..seq.len().saturating_sub(4) {
        let u = seq[start];
        let v = seq[start + 1];
        if u == v || seq[start + 2] != u {
            continue;
        }
        let Some(w) = cyc.other_neighbor(v, u) else {
            continue;
        };
        for reentry in start + 3..seq.len() - 1 {
            if seq[reentry] == w && seq[reentry + 1] == v {
                return Some(OverlapWitness {
                    u,
                    v,
                    w,
                    start,
                    reentry,
                });
            }
        }
    }
    None
}

/// One overlap rewrite: ⟨u,v,u,B,w,v⟩ becomes ⟨u,v,w,B reversed,u,v⟩, which
/// respects the cycle, keeps the multiset, and moves the pattern later.
fn overlap_step(seq: &[PageId], cyc: &CycleTopology) -> Option<RequestSequence> {
    let ow = find_overlap(seq, cyc)?;
    let mut out = seq[..=ow.start + 1].to_vec();
    out.push(ow.w);
    out.extend(seq[ow.start + 3..ow.reentry].iter().rev());
    out.push(ow.u);
    out.extend_from_slice(&seq[ow.reentry + 1..]);
    debug_assert_eq!(out.len(), seq.len());
    Some(out)
}

/// Rewrite until the walk is overlap-free. On sequences already in the
/// trivial-turn-free normal form this never decreases LRU's fault count.
pub fn remove_overlaps(
    seq: &[PageId],
    cyc: &CycleTopology,
    cfg: CacheConfig,
) -> Result<RequestSequence> {
    let _ = cfg;
    let mut current = seq.to_vec();
    for _ in 0..REWRITE_BUDGET {
        match overlap_step(&current, cyc) {
            Some(next) => current = next,
            None => return Ok(current),
        }
    }
    Err(Error::RewriteBudget {
        budget: REWRITE_BUDGET,
    })
}

/// One stage of the normalization pipeline, with the sequence it produced.
pub type NormalizeStage = (&'static str, RequestSequence);

/// Output of the full normalization pipeline.
#[derive(Debug, Clone)]
pub struct NormalizeReport {
    /// Every stage in the order applied, including repeat rounds.
    pub stages: Vec<NormalizeStage>,
    pub result: RequestSequence,
    pub rounds: usize,
}

/// Run the full pipeline to a fixed point: deduplicate, lengthen the first
/// stretch, strip trivial turns, strip overlaps. An overlap rewrite can
/// shorten a stretch below k-1 again, so the three rewrites repeat until
/// nothing changes.
pub fn normalize(
    seq: &[PageId],
    cyc: &CycleTopology,
    cfg: CacheConfig,
) -> Result<NormalizeReport> {
    let mut stages: Vec<NormalizeStage> = Vec::new();
    let mut current = remove_consecutive_duplicates(seq);
    stages.push(("deduplicate", current.clone()));
    let mut rounds = 0;
    loop {
        rounds += 1;
        if rounds > 10_000 {
            return Err(Error::RewriteBudget {
                budget: REWRITE_BUDGET,
            });
        }
        let long = enforce_long_first_walk(&current, cyc, cfg)?;
        stages.push(("long-first-walk", long.clone()));
        let no_trivial = remove_trivial_turns(&long, cyc, cfg)?;
        stages.push(("remove-trivial-turns", no_trivial.clone()));
        let no_overlap = remove_overlaps(&no_trivial, cyc, cfg)?;
        stages.push(("remove-overlaps", no_overlap.clone()));
        if no_overlap == current {
            return Ok(NormalizeReport {
                stages,
                result: no_overlap,
                rounds,
            });
        }
        current = no_overlap;
    }
}

/// FIFO block decomposition of a path walk: each block ends exactly at
/// FIFO's (k+1)-st fault inside it; whatever remains (at most k FIFO faults)
/// is the suffix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub blocks: Vec<RequestSequence>,
    pub suffix: RequestSequence,
}

impl BlockDecomposition {
    /// The blocks without the suffix, concatenated.
    pub fn concatenated_blocks(&self) -> RequestSequence {
        self.blocks.concat()
    }
}

/// Cut a walk on the canonical path into FIFO blocks.
pub fn fifo_blocks(
    seq: &[PageId],
    g: &AccessGraph,
    cfg: CacheConfig,
) -> Result<BlockDecomposition> {
    crate::graph::require_canonical_path(g)?;
    if !g.is_walk(seq)? {
        return Err(Error::NotAWalk("sequence does not respect the path".into()));
    }
    let trace = simulate(Policy::Fifo, seq, cfg);
    let mut blocks = Vec::new();
    let mut block_start = 0;
    let mut faults_in_block = 0;
    for event in &trace.events {
        if event.outcome == Outcome::Fault {
            faults_in_block += 1;
            if faults_in_block == cfg.k() + 1 {
                blocks.push(seq[block_start..=event.index].to_vec());
                block_start = event.index + 1;
                faults_in_block = 0;
            }
        }
    }
    Ok(BlockDecomposition {
        blocks,
        suffix: seq[block_start..].to_vec(),
    })
}

/// Reorder blocks so LRU faults at least twice in each.
///
/// The first block is kept; every later block is kept when LRU (replayed on
/// the reordered prefix) already faults twice in it, and otherwise reversed
/// except for its final request. The suffix rides along unchanged. Reversal
/// preserves the walk property; a violation would mean the decomposition was
/// invalid and is reported as an internal error.
pub fn reorder_blocks(
    d: &BlockDecomposition,
    g: &AccessGraph,
    cfg: CacheConfig,
) -> Result<RequestSequence> {
    crate::graph::require_canonical_path(g)?;
    let mut out: RequestSequence = Vec::new();
    for (i, block) in d.blocks.iter().enumerate() {
        if i == 0 {
            out.extend(block);
            continue;
        }
        let mut candidate = out.clone();
        candidate.extend(block);
        let trace = simulate(Policy::Lru, &candidate, cfg);
        let faults_in_block = trace.events[out.len()..]
            .iter()
            .filter(|e| e.outcome == Outcome::Fault)
            .count();
        if faults_in_block >= 2 {
            out.extend(block);
        } else {
            let (last, head) = block.split_last().expect("blocks are nonempty");
            out.extend(head.iter().rev());
            out.push(*last);
        }
    }
    out.extend(&d.suffix);
    if !g.is_walk(&out)? {
        return Err(Error::Internal(
            "block reversal produced a sequence that leaves the path".into(),
        ));
    }
    Ok(out)
}
