//! Deterministic paging policy simulators.
//!
//! All runs start from a cold (empty) cache and count cold-start faults.
//! The online policies:
//!
//! - LRU evicts the least recently used page; hits refresh recency.
//! - FIFO evicts the page resident longest; hits do not reorder the queue,
//!   and a page re-entering after eviction goes to the back.
//! - FWF evicts everything whenever it faults with a full cache, then loads
//!   the requested page.
//!
//! LFD is the offline optimum: it evicts the cached page whose next request
//! is farthest in the future (pages never requested again are farthest).
//! Ties are broken by the configured rule; every tie-break is optimal, but a
//! rule is needed for determinism.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::PageId;

/// Cache capacity in pages.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CacheConfig {
    k: usize,
}

impl CacheConfig {
    pub fn new(k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidParameter(
                "cache size k must be at least 1".into(),
            ));
        }
        Ok(CacheConfig { k })
    }

    pub fn k(&self) -> usize {
        self.k
    }
}

/// Tie-break rule for LFD when several cached pages share the farthest next
/// request (in particular when several are never requested again).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TieBreak {
    /// Evict the lowest-numbered page among the farthest candidates.
    LowestId,
    /// If LRU (run in parallel on the same sequence) evicts a page that is
    /// never requested again and that page is cached here, evict the same
    /// page; otherwise fall back to `LowestId`.
    MatchLru,
}

/// An eviction policy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Policy {
    Lru,
    Fifo,
    Fwf,
    Lfd(TieBreak),
}

impl Policy {
    pub fn name(&self) -> &'static str {
        match self {
            Policy::Lru => "lru",
            Policy::Fifo => "fifo",
            Policy::Fwf => "fwf",
            Policy::Lfd(_) => "lfd",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Hit,
    Fault,
}

/// One simulated request.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceEvent {
    pub index: usize,
    pub page: PageId,
    pub outcome: Outcome,
    /// The single page evicted to make room, present only on a fault with a
    /// full cache. FWF flushes report `flushed` instead.
    pub evicted: Option<PageId>,
    /// True when FWF emptied the whole cache on this fault.
    pub flushed: bool,
}

/// Full per-request record of one policy run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimulationTrace {
    pub events: Vec<TraceEvent>,
    pub total_faults: usize,
}

impl SimulationTrace {
    pub fn total_hits(&self) -> usize {
        self.events.len() - self.total_faults
    }

    /// Serialize as JSON lines, one event object per request.
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for ev in &self.events {
            out.push_str(&serde_json::to_string(ev).expect("trace events serialize"));
            out.push('\n');
        }
        out
    }
}

/// Incremental cache state for the online policies. Shared with the
/// worst-order search, which steps it request by request.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum OnlineCache {
    /// Recency order, least recently used first.
    Lru(Vec<u32>),
    /// Arrival order, oldest first.
    Fifo(VecDeque<u32>),
    /// Resident set, kept sorted.
    Fwf(Vec<u32>),
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct StepResult {
    pub hit: bool,
    pub evicted: Option<u32>,
    pub flushed: bool,
}

impl OnlineCache {
    pub fn new(policy: Policy) -> Option<Self> {
        match policy {
            Policy::Lru => Some(OnlineCache::Lru(Vec::new())),
            Policy::Fifo => Some(OnlineCache::Fifo(VecDeque::new())),
            Policy::Fwf => Some(OnlineCache::Fwf(Vec::new())),
            Policy::Lfd(_) => None,
        }
    }

    pub fn step(&mut self, k: usize, page: u32) -> StepResult {
        match self {
            OnlineCache::Lru(order) => {
                if let Some(pos) = order.iter().position(|&q| q == page) {
                    order.remove(pos);
                    order.push(page);
                    return StepResult {
                        hit: true,
                        evicted: None,
                        flushed: false,
                    };
                }
                let evicted = if order.len() == k {
                    Some(order.remove(0))
                } else {
                    None
                };
                order.push(page);
                StepResult {
                    hit: false,
                    evicted,
                    flushed: false,
                }
            }
            OnlineCache::Fifo(queue) => {
                if queue.contains(&page) {
                    return StepResult {
                        hit: true,
                        evicted: None,
                        flushed: false,
                    };
                }
                let evicted = if queue.len() == k {
                    queue.pop_front()
                } else {
                    None
                };
                queue.push_back(page);
                StepResult {
                    hit: false,
                    evicted,
                    flushed: false,
                }
            }
            OnlineCache::Fwf(pages) => {
                if pages.binary_search(&page).is_ok() {
                    return StepResult {
                        hit: true,
                        evicted: None,
                        flushed: false,
                    };
                }
                let flushed = pages.len() == k;
                if flushed {
                    pages.clear();
                }
                let pos = pages.binary_search(&page).unwrap_err();
                pages.insert(pos, page);
                StepResult {
                    hit: false,
                    evicted: None,
                    flushed,
                }
            }
        }
    }

    /// Append a compact, state-defining encoding for memoization keys.
    pub fn encode(&self, out: &mut Vec<u8>) {
        match self {
            OnlineCache::Lru(order) => out.extend(order.iter().map(|&p| p as u8)),
            OnlineCache::Fifo(queue) => out.extend(queue.iter().map(|&p| p as u8)),
            OnlineCache::Fwf(pages) => out.extend(pages.iter().map(|&p| p as u8)),
        }
    }
}

/// Run `policy` over `seq` with a cold cache of size `cfg.k()`.
///
/// Deterministic: identical inputs give identical traces. An empty sequence
/// yields an empty trace with zero faults.
pub fn simulate(policy: Policy, seq: &[PageId], cfg: CacheConfig) -> SimulationTrace {
    match policy {
        Policy::Lfd(tb) => simulate_lfd(seq, cfg, tb),
        online => {
            let mut cache = OnlineCache::new(online).expect("online policy");
            let mut events = Vec::with_capacity(seq.len());
            let mut total_faults = 0;
            for (index, &page) in seq.iter().enumerate() {
                let res = cache.step(cfg.k(), page.get());
                if !res.hit {
                    total_faults += 1;
                }
                events.push(TraceEvent {
                    index,
                    page,
                    outcome: if res.hit { Outcome::Hit } else { Outcome::Fault },
                    evicted: res.evicted.map(|id| PageId::new(id).expect("page id >= 1")),
                    flushed: res.flushed,
                });
            }
            SimulationTrace {
                events,
                total_faults,
            }
        }
    }
}

fn simulate_lfd(seq: &[PageId], cfg: CacheConfig, tb: TieBreak) -> SimulationTrace {
    const NEVER: usize = usize::MAX;
    let k = cfg.k();

    // next_use[i] = position of the next request to seq[i] after i.
    let mut next_use = vec![NEVER; seq.len()];
    let mut last_seen: std::collections::HashMap<u32, usize> = std::collections::HashMap::new();
    for (i, &p) in seq.iter().enumerate().rev() {
        if let Some(&j) = last_seen.get(&p.get()) {
            next_use[i] = j;
        }
        last_seen.insert(p.get(), i);
    }

    // The MatchLru rule follows LRU's eviction at the same request index when
    // that page is never requested again.
    let lru_evictions: Vec<Option<u32>> = if tb == TieBreak::MatchLru {
        simulate(Policy::Lru, seq, cfg)
            .events
            .iter()
            .map(|e| e.evicted.map(|p| p.get()))
            .collect()
    } else {
        Vec::new()
    };

    // cache maps page -> position of its next request (NEVER if none).
    let mut cache: Vec<(u32, usize)> = Vec::with_capacity(k);
    let mut events = Vec::with_capacity(seq.len());
    let mut total_faults = 0;

    for (index, &page) in seq.iter().enumerate() {
        let id = page.get();
        if let Some(slot) = cache.iter_mut().find(|(p, _)| *p == id) {
            slot.1 = next_use[index];
            events.push(TraceEvent {
                index,
                page,
                outcome: Outcome::Hit,
                evicted: None,
                flushed: false,
            });
            continue;
        }

        total_faults += 1;
        let mut evicted = None;
        if cache.len() == k {
            let farthest = cache.iter().map(|&(_, next)| next).max().expect("cache nonempty");
            let victim = match tb {
                TieBreak::MatchLru => {
                    let matched = lru_evictions[index].filter(|&q| {
                        cache.iter().any(|&(p, next)| p == q && next == NEVER)
                    });
                    matched.unwrap_or_else(|| {
                        cache
                            .iter()
                            .filter(|&&(_, next)| next == farthest)
                            .map(|&(p, _)| p)
                            .min()
                            .expect("farthest candidate exists")
                    })
                }
                TieBreak::LowestId => cache
                    .iter()
                    .filter(|&&(_, next)| next == farthest)
                    .map(|&(p, _)| p)
                    .min()
                    .expect("farthest candidate exists"),
            };
            cache.retain(|&(p, _)| p != victim);
            evicted = Some(PageId::new(victim).expect("page id >= 1"));
        }
        cache.push((id, next_use[index]));
        events.push(TraceEvent {
            index,
            page,
            outcome: Outcome::Fault,
            evicted,
            flushed: false,
        });
    }

    SimulationTrace {
        events,
        total_faults,
    }
}

/// Search for a window violating conservativeness: a contiguous subsequence
/// with at most k distinct pages on which the trace shows more than k faults.
///
/// Scans every maximal window with at most k distinct pages (any violating
/// sub-window is contained in one), returning the first violation as 0-based
/// inclusive request indices, or None.
pub fn conservative_violation(
    seq: &[PageId],
    trace: &SimulationTrace,
    cfg: CacheConfig,
) -> Result<Option<(usize, usize)>> {
    if seq.len() != trace.events.len() {
        return Err(Error::TraceMismatch(format!(
            "sequence has {} requests but trace has {} events",
            seq.len(),
            trace.events.len()
        )));
    }
    let k = cfg.k();
    let fault_prefix: Vec<usize> = std::iter::once(0)
        .chain(trace.events.iter().scan(0usize, |acc, e| {
            if e.outcome == Outcome::Fault {
                *acc += 1;
            }
            Some(*acc)
        }))
        .collect();

    for start in 0..seq.len() {
        let mut distinct: Vec<u32> = Vec::with_capacity(k + 1);
        let mut end = start;
        while end < seq.len() {
            let id = seq[end].get();
            if !distinct.contains(&id) {
                if distinct.len() == k {
                    break;
                }
                distinct.push(id);
            }
            end += 1;
        }
        // maximal window is [start, end-1]
        let faults = fault_prefix[end] - fault_prefix[start];
        if faults > k {
            return Ok(Some((start, end - 1)));
        }
    }
    Ok(None)
}

/// Greedy maximal k-phase partition: each phase holds at most k distinct
/// pages, and each phase after the first begins on the (k+1)-st distinct page
/// since its predecessor's start. Concatenating the phases gives back `seq`.
pub fn k_phase_decompose(seq: &[PageId], cfg: CacheConfig) -> Vec<Vec<PageId>> {
    let k = cfg.k();
    let mut phases = Vec::new();
    let mut current: Vec<PageId> = Vec::new();
    let mut distinct: Vec<u32> = Vec::new();
    for &page in seq {
        let id = page.get();
        if !distinct.contains(&id) {
            if distinct.len() == k {
                phases.push(std::mem::take(&mut current));
                distinct.clear();
            }
            distinct.push(id);
        }
        current.push(page);
    }
    if !current.is_empty() {
        phases.push(current);
    }
    phases
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_sequence;

    fn seq(ids: &[u32]) -> Vec<PageId> {
        ids.iter().map(|&i| PageId::new(i).unwrap()).collect()
    }

    fn k(n: usize) -> CacheConfig {
        CacheConfig::new(n).unwrap()
    }

    fn faults(policy: Policy, ids: &[u32], cache: usize) -> usize {
        simulate(policy, &seq(ids), k(cache)).total_faults
    }

    /// Replays a trace against its sequence, checking internal consistency:
    /// cache never exceeds k, hits are to resident pages, evictions only on
    /// full faults, and the fault counter matches.
    fn validate_trace(ids: &[u32], trace: &SimulationTrace, cap: usize) {
        let s = seq(ids);
        assert_eq!(trace.events.len(), s.len());
        let mut cache: Vec<u32> = Vec::new();
        let mut fault_count = 0;
        for (i, ev) in trace.events.iter().enumerate() {
            assert_eq!(ev.index, i);
            assert_eq!(ev.page, s[i]);
            match ev.outcome {
                Outcome::Hit => {
                    assert!(cache.contains(&ev.page.get()), "hit on absent page at {i}");
                    assert!(ev.evicted.is_none() && !ev.flushed);
                }
                Outcome::Fault => {
                    fault_count += 1;
                    assert!(!cache.contains(&ev.page.get()), "fault on resident page at {i}");
                    if ev.flushed {
                        assert_eq!(cache.len(), cap, "flush only on a full cache");
                        cache.clear();
                    } else if let Some(victim) = ev.evicted {
                        assert_eq!(cache.len(), cap, "eviction only on a full cache");
                        let pos = cache.iter().position(|&q| q == victim.get());
                        cache.remove(pos.expect("evicted page was resident"));
                    }
                    cache.push(ev.page.get());
                }
            }
            assert!(cache.len() <= cap);
        }
        assert_eq!(trace.total_faults, fault_count);
    }

    #[test]
    fn worked_example_on_c4() {
        // k = 3 on the four-cycle: the sequence where FIFO beats LRU.
        let lru = simulate(Policy::Lru, &seq(&[2, 1, 2, 3, 4, 1]), k(3));
        assert_eq!(lru.total_faults, 5);
        // the request to page 4 is index 4; LRU evicts 1 there
        assert_eq!(lru.events[4].evicted, Some(PageId::new(1).unwrap()));

        let fifo = simulate(Policy::Fifo, &seq(&[2, 1, 2, 3, 4, 1]), k(3));
        assert_eq!(fifo.total_faults, 4);
        assert_eq!(fifo.events[4].evicted, Some(PageId::new(2).unwrap()));

        assert_eq!(faults(Policy::Lru, &[1, 2, 2, 3, 4, 1], 3), 5);
        assert_eq!(faults(Policy::Fifo, &[1, 2, 2, 3, 4, 1], 3), 5);

        assert_eq!(faults(Policy::Lru, &[1, 2, 3, 4, 1, 2], 3), 6);
        assert_eq!(faults(Policy::Fifo, &[1, 2, 3, 4, 1, 2], 3), 6);
    }

    #[test]
    fn empty_sequence_gives_empty_trace() {
        for policy in [
            Policy::Lru,
            Policy::Fifo,
            Policy::Fwf,
            Policy::Lfd(TieBreak::LowestId),
        ] {
            let t = simulate(policy, &[], k(2));
            assert!(t.events.is_empty());
            assert_eq!(t.total_faults, 0);
        }
    }

    #[test]
    fn fwf_flushes_and_reloads() {
        // k=2: third distinct page flushes the full cache, then loads.
        let t = simulate(Policy::Fwf, &seq(&[1, 2, 3, 1]), k(2));
        assert_eq!(t.total_faults, 4);
        assert!(t.events[2].flushed);
        assert!(t.events[2].evicted.is_none());
        validate_trace(&[1, 2, 3, 1], &t, 2);
    }

    #[test]
    fn fwf_k1_degenerates_to_evict_every_fault() {
        let t = simulate(Policy::Fwf, &seq(&[1, 2, 1, 1, 2]), k(1));
        assert_eq!(t.total_faults, 4);
        validate_trace(&[1, 2, 1, 1, 2], &t, 1);
    }

    #[test]
    fn fifo_hits_do_not_refresh_queue() {
        // after 1,2 the queue is [1,2]; the hit on 1 must not move it back,
        // so the fault on 3 evicts 1.
        let t = simulate(Policy::Fifo, &seq(&[1, 2, 1, 3]), k(2));
        assert_eq!(t.events[3].evicted, Some(PageId::new(1).unwrap()));
    }

    #[test]
    fn lfd_evicts_farthest_next_use() {
        // At the fault on 4 (k=3): next uses are 1 -> index 4, 2 -> index 5,
        // 3 -> never. LFD evicts 3; LRU would evict 1.
        let s = [1, 2, 3, 4, 1, 2];
        let t = simulate(Policy::Lfd(TieBreak::LowestId), &seq(&s), k(3));
        assert_eq!(t.events[3].evicted, Some(PageId::new(3).unwrap()));
        assert_eq!(t.total_faults, 4);
        validate_trace(&s, &t, 3);
    }

    #[test]
    fn lfd_tiebreak_lowest_id() {
        // At the fault on 3 (k=2), neither 1 nor 2 is requested again.
        let t = simulate(Policy::Lfd(TieBreak::LowestId), &seq(&[1, 2, 3]), k(2));
        assert_eq!(t.events[2].evicted, Some(PageId::new(1).unwrap()));
    }

    #[test]
    fn lfd_tiebreak_match_lru() {
        // Same instance: LRU evicts 1 (least recent), which is never
        // requested again, so MatchLru follows it. With the order 2,1,3 LRU
        // evicts 2 and MatchLru must copy that instead of picking page 1.
        let t = simulate(Policy::Lfd(TieBreak::MatchLru), &seq(&[2, 1, 3]), k(2));
        assert_eq!(t.events[2].evicted, Some(PageId::new(2).unwrap()));
    }

    #[test]
    fn determinism() {
        let s = [1, 2, 3, 2, 1, 4, 3, 2, 4, 1];
        for policy in [
            Policy::Lru,
            Policy::Fifo,
            Policy::Fwf,
            Policy::Lfd(TieBreak::LowestId),
            Policy::Lfd(TieBreak::MatchLru),
        ] {
            let a = simulate(policy, &seq(&s), k(3));
            let b = simulate(policy, &seq(&s), k(3));
            assert_eq!(a, b);
            validate_trace(&s, &a, 3);
        }
    }

    #[test]
    fn conservative_violation_for_fwf_only() {
        // I_3 with k=2 repeats 1,2,3,2; FWF faults on every request, so the
        // window 2,3,2 (two distinct pages, three faults) violates.
        let s: Vec<u32> = [1, 2, 3, 2].repeat(3);
        let config = k(2);
        let sq = seq(&s);

        let fwf = simulate(Policy::Fwf, &sq, config);
        let window = conservative_violation(&sq, &fwf, config).unwrap();
        let (i, j) = window.expect("FWF is not conservative");
        let distinct: std::collections::BTreeSet<u32> =
            s[i..=j].iter().copied().collect();
        assert!(distinct.len() <= 2);
        let faults_in = fwf.events[i..=j]
            .iter()
            .filter(|e| e.outcome == Outcome::Fault)
            .count();
        assert!(faults_in > 2);

        for policy in [Policy::Lru, Policy::Fifo] {
            let t = simulate(policy, &sq, config);
            assert_eq!(conservative_violation(&sq, &t, config).unwrap(), None);
        }
    }

    #[test]
    fn conservative_violation_rejects_mismatched_trace() {
        let sq = seq(&[1, 2, 3]);
        let t = simulate(Policy::Lru, &sq, k(2));
        assert!(conservative_violation(&seq(&[1, 2]), &t, k(2)).is_err());
    }

    #[test]
    fn k_phase_examples() {
        let phases = k_phase_decompose(&seq(&[1, 2, 3, 2, 1, 3]), k(2));
        assert_eq!(
            phases,
            vec![seq(&[1, 2]), seq(&[3, 2]), seq(&[1, 3])]
        );

        let phases = k_phase_decompose(&seq(&[1, 1, 1]), k(2));
        assert_eq!(phases, vec![seq(&[1, 1, 1])]);

        assert!(k_phase_decompose(&[], k(2)).is_empty());
    }

    #[test]
    fn fwf_faults_match_phase_distinct_counts() {
        // FWF flushes at each phase boundary, so its faults are the sum of
        // distinct pages per phase.
        let cases: [&[u32]; 3] = [
            &[1, 2, 3, 4, 3, 2],
            &[1, 2, 1, 3, 4, 2, 2, 3, 1],
            &[2, 1, 2, 3, 4, 1],
        ];
        for ids in cases {
            for cap in 1..=4 {
                let sq = seq(ids);
                let fwf = simulate(Policy::Fwf, &sq, k(cap));
                let by_phase: usize = k_phase_decompose(&sq, k(cap))
                    .iter()
                    .map(|phase| {
                        phase
                            .iter()
                            .map(|p| p.get())
                            .collect::<std::collections::BTreeSet<_>>()
                            .len()
                    })
                    .sum();
                assert_eq!(fwf.total_faults, by_phase, "seq {ids:?} k={cap}");
            }
        }
    }

    #[test]
    fn trace_json_lines_shape() {
        let t = simulate(Policy::Lru, &parse_sequence("2,1,2").unwrap(), k(2));
        let json = t.to_json_lines();
        let lines: Vec<&str> = json.lines().collect();
        assert_eq!(lines.len(), 3);
        let first: serde_json::Value = serde_json::from_str(lines[0]).unwrap();
        assert_eq!(first["index"], 0);
        assert_eq!(first["page"], 2);
        assert_eq!(first["outcome"], "fault");
        assert_eq!(first["flushed"], false);
        let third: serde_json::Value = serde_json::from_str(lines[2]).unwrap();
        assert_eq!(third["outcome"], "hit");
    }
}
