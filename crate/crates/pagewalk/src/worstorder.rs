//! Exact worst-ordering search.
//!
//! For an algorithm A and request multiset m, the worst-order cost on graph G
//! is the maximum of A's faults over every permutation of m that forms a walk
//! on G. The search is a depth-first enumeration of walks consuming the
//! multiset, advanced one request at a time while stepping the policy's cache
//! state incrementally.
//!
//! Future cost from any point depends only on (current page, remaining
//! multiset, cache state), so duplicate states are collapsed through a memo
//! table mapping that triple to the exact maximum of future faults. Witnesses
//! are rebuilt afterwards by descending the memo, always taking the smallest
//! page that still achieves the optimum, which makes the returned witness the
//! lexicographically smallest worst ordering.
//!
//! LFD cannot be stepped incrementally (its evictions depend on the requests
//! still to be placed), so LFD worst orders fall back to enumerating complete
//! walks and simulating each one.

use std::collections::HashMap;
use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use num::rational::Ratio;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::{gen_is, gen_jr, gen_script_in, FamilyKind};
use crate::graph::{AccessGraph, PageId, RequestSequence};
use crate::paging::{simulate, CacheConfig, OnlineCache, Policy};

/// Hard guard for full enumeration; beyond this the permutation space is not
/// worth streaming.
pub const ENUMERATION_GUARD: u32 = 12;

/// A request multiset: how many times each page must be requested.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RequestMultiset {
    counts: std::collections::BTreeMap<PageId, u32>,
}

impl RequestMultiset {
    pub fn from_counts(counts: impl IntoIterator<Item = (PageId, u32)>) -> Result<Self> {
        let mut map = std::collections::BTreeMap::new();
        for (page, count) in counts {
            if count == 0 {
                return Err(Error::InvalidParameter(format!(
                    "page {page} has count 0; omit it instead"
                )));
            }
            if map.insert(page, count).is_some() {
                return Err(Error::InvalidParameter(format!(
                    "page {page} listed twice"
                )));
            }
        }
        Ok(RequestMultiset { counts: map })
    }

    pub fn from_sequence(seq: &[PageId]) -> Self {
        let mut counts = std::collections::BTreeMap::new();
        for &p in seq {
            *counts.entry(p).or_insert(0) += 1;
        }
        RequestMultiset { counts }
    }

    /// Parse the CLI syntax `1:4,2:2,3:1`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut pairs = Vec::new();
        for tok in text.split(',') {
            let (page, count) = tok.split_once(':').ok_or_else(|| {
                Error::InvalidParameter(format!("bad multiset entry `{tok}`, expected page:count"))
            })?;
            let page: u32 = page.trim().parse().map_err(|_| {
                Error::InvalidParameter(format!("bad page id `{page}` in multiset"))
            })?;
            let count: u32 = count.trim().parse().map_err(|_| {
                Error::InvalidParameter(format!("bad count `{count}` in multiset"))
            })?;
            pairs.push((PageId::new(page)?, count));
        }
        Self::from_counts(pairs)
    }

    pub fn counts(&self) -> impl Iterator<Item = (PageId, u32)> + '_ {
        self.counts.iter().map(|(&p, &c)| (p, c))
    }

    pub fn count(&self, page: PageId) -> u32 {
        self.counts.get(&page).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u32 {
        self.counts.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn validate_on(&self, g: &AccessGraph) -> Result<()> {
        for (&page, _) in self.counts.iter() {
            if !g.contains(page) {
                return Err(Error::InvalidPage {
                    id: page.get(),
                    max: g.vertex_count(),
                });
            }
        }
        Ok(())
    }
}

impl fmt::Display for RequestMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (page, count) in self.counts.iter() {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{page}:{count}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for RequestMultiset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

/// Knobs for the worst-order search.
#[derive(Debug, Clone, Copy)]
pub struct SearchConfig {
    /// Require the witness to begin with this page.
    pub start_page: Option<PageId>,
    /// Total node budget, divided evenly over the top-level start branches so
    /// results do not depend on how the branches are scheduled.
    pub node_budget: u64,
    /// Maximum number of start branches searched concurrently. Width does not
    /// affect results, only wall-clock time.
    pub parallel_width: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            start_page: None,
            node_budget: 10_000_000,
            parallel_width: 1,
        }
    }
}

impl SearchConfig {
    pub fn with_start(page: PageId) -> Self {
        SearchConfig {
            start_page: Some(page),
            ..Default::default()
        }
    }
}

/// Outcome of a worst-order search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WorstOrderResult {
    pub max_faults: usize,
    /// The lexicographically smallest walk achieving `max_faults` (when the
    /// search completed) or the best walk found before the budget ran out.
    pub witness: RequestSequence,
    /// True iff the search space was covered completely within the budget.
    pub exhausted: bool,
}

const DEAD: i64 = -1;

struct BudgetAborted;

/// Search state for one start branch. The memo maps an encoded
/// (current page, remaining counts, cache state) triple to the exact maximum
/// number of future faults, or `DEAD` when the remaining multiset cannot be
/// consumed from there.
struct BranchSearch<'a> {
    g: &'a AccessGraph,
    k: usize,
    memo: HashMap<Vec<u8>, i64>,
    nodes: u64,
    quota: u64,
}

impl<'a> BranchSearch<'a> {
    fn new(g: &'a AccessGraph, k: usize, quota: u64) -> Self {
        BranchSearch {
            g,
            k,
            memo: HashMap::new(),
            nodes: 0,
            quota,
        }
    }

    fn encode(&self, cur: u32, counts: &[u32], cache: &OnlineCache) -> Vec<u8> {
        let mut key = Vec::with_capacity(4 + counts.len() * 4 + self.k + 1);
        key.extend(cur.to_le_bytes());
        for &c in counts {
            key.extend(c.to_le_bytes());
        }
        cache.encode(&mut key);
        key
    }

    /// Pages reachable in one request from `cur` that still have remaining
    /// count, in increasing label order. Staying on the current page is a
    /// legal walk step.
    fn candidates(&self, cur: u32, counts: &[u32]) -> Vec<u32> {
        let cur_page = PageId::new(cur).expect("page id >= 1");
        let mut out: Vec<u32> = self
            .g
            .neighbors(cur_page)
            .map(|p| p.get())
            .filter(|&q| counts[(q - 1) as usize] > 0)
            .collect();
        if counts[(cur - 1) as usize] > 0 {
            out.push(cur);
        }
        out.sort_unstable();
        out
    }

    fn max_future_faults(
        &mut self,
        cur: u32,
        counts: &mut Vec<u32>,
        remaining: u32,
        cache: &OnlineCache,
    ) -> std::result::Result<i64, BudgetAborted> {
        if remaining == 0 {
            return Ok(0);
        }
        let key = self.encode(cur, counts, cache);
        if let Some(&v) = self.memo.get(&key) {
            return Ok(v);
        }
        self.nodes += 1;
        if self.nodes > self.quota {
            return Err(BudgetAborted);
        }

        let mut best = DEAD;
        for q in self.candidates(cur, counts) {
            counts[(q - 1) as usize] -= 1;
            let mut next_cache = cache.clone();
            let step = next_cache.step(self.k, q);
            let sub = self.max_future_faults(q, counts, remaining - 1, &next_cache);
            counts[(q - 1) as usize] += 1;
            let sub = sub?;
            if sub != DEAD {
                best = best.max(i64::from(!step.hit) + sub);
            }
        }
        self.memo.insert(key, best);
        Ok(best)
    }

    /// Rebuild the lexicographically smallest walk achieving the memoized
    /// optimum from this state. Every reachable child of an explored state is
    /// itself memoized, so the descent never misses.
    fn reconstruct(
        &self,
        start: u32,
        mut counts: Vec<u32>,
        mut remaining: u32,
        mut cache: OnlineCache,
        mut target: i64,
    ) -> RequestSequence {
        let mut walk = vec![PageId::new(start).expect("page id >= 1")];
        let mut cur = start;
        while remaining > 0 {
            let mut advanced = false;
            for q in self.candidates(cur, &counts) {
                let mut next_cache = cache.clone();
                let step = next_cache.step(self.k, q);
                counts[(q - 1) as usize] -= 1;
                let child = if remaining == 1 {
                    0
                } else {
                    let key = self.encode(q, &counts, &next_cache);
                    self.memo.get(&key).copied().unwrap_or(DEAD)
                };
                let fault = i64::from(!step.hit);
                if child != DEAD && fault + child == target {
                    walk.push(PageId::new(q).expect("page id >= 1"));
                    cache = next_cache;
                    cur = q;
                    remaining -= 1;
                    target -= fault;
                    advanced = true;
                    break;
                }
                counts[(q - 1) as usize] += 1;
            }
            assert!(advanced, "memo descent lost the optimal walk");
        }
        walk
    }

    /// Plain bounded DFS used after a budget abort: walks the tree in
    /// lexicographic order recording the best complete walk reached within
    /// the quota.
    fn bounded_best(
        &mut self,
        cur: u32,
        counts: &mut Vec<u32>,
        remaining: u32,
        cache: &OnlineCache,
        faults_so_far: usize,
        path: &mut RequestSequence,
        best: &mut Option<(usize, RequestSequence)>,
    ) {
        if remaining == 0 {
            // First walk seen with a new maximum is lexicographically
            // smallest among equals because children are visited in order.
            if best.as_ref().map_or(true, |(b, _)| faults_so_far > *b) {
                *best = Some((faults_so_far, path.clone()));
            }
            return;
        }
        if self.nodes > self.quota {
            return;
        }
        self.nodes += 1;
        for q in self.candidates(cur, counts) {
            counts[(q - 1) as usize] -= 1;
            let mut next_cache = cache.clone();
            let step = next_cache.step(self.k, q);
            path.push(PageId::new(q).expect("page id >= 1"));
            self.bounded_best(
                q,
                counts,
                remaining - 1,
                &next_cache,
                faults_so_far + usize::from(!step.hit),
                path,
                best,
            );
            path.pop();
            counts[(q - 1) as usize] += 1;
        }
    }
}

struct BranchOutcome {
    /// Fault count of the best complete walk found, DEAD if none.
    value: i64,
    witness: Option<RequestSequence>,
    exhausted: bool,
}

fn search_branch(
    g: &AccessGraph,
    k: usize,
    start: u32,
    base_counts: &[u32],
    total: u32,
    policy: Policy,
    quota: u64,
) -> BranchOutcome {
    let mut counts = base_counts.to_vec();
    counts[(start - 1) as usize] -= 1;
    let mut cache = OnlineCache::new(policy).expect("online policy");
    let step = cache.step(k, start);
    debug_assert!(!step.hit, "first request always faults");
    let mut search = BranchSearch::new(g, k, quota);
    match search.max_future_faults(start, &mut counts, total - 1, &cache) {
        Ok(DEAD) => BranchOutcome {
            value: DEAD,
            witness: None,
            exhausted: true,
        },
        Ok(future) => {
            let witness = search.reconstruct(start, counts, total - 1, cache, future);
            BranchOutcome {
                value: 1 + future,
                witness: Some(witness),
                exhausted: true,
            }
        }
        Err(BudgetAborted) => {
            // Start over without the memo, harvesting the best complete walk
            // reachable inside a fresh quota.
            let mut counts = base_counts.to_vec();
            counts[(start - 1) as usize] -= 1;
            let mut cache = OnlineCache::new(policy).expect("online policy");
            cache.step(k, start);
            let mut search = BranchSearch::new(g, k, quota);
            let mut best = None;
            let mut path = vec![PageId::new(start).expect("page id >= 1")];
            search.bounded_best(start, &mut counts, total - 1, &cache, 1, &mut path, &mut best);
            match best {
                Some((faults, walk)) => BranchOutcome {
                    value: faults as i64,
                    witness: Some(walk),
                    exhausted: false,
                },
                None => BranchOutcome {
                    value: DEAD,
                    witness: None,
                    exhausted: false,
                },
            }
        }
    }
}

/// Exact worst-ordering search: the maximum fault count of `policy` over all
/// walks on `g` consuming `m` exactly, with the lexicographically smallest
/// witness. `exhausted` is false when the node budget cut the search short,
/// in which case `max_faults` is only the best found.
pub fn worst_order_exact(
    g: &AccessGraph,
    m: &RequestMultiset,
    policy: Policy,
    cfg: CacheConfig,
    sc: &SearchConfig,
) -> Result<WorstOrderResult> {
    m.validate_on(g)?;
    if m.is_empty() {
        return Ok(WorstOrderResult {
            max_faults: 0,
            witness: Vec::new(),
            exhausted: true,
        });
    }
    if let Policy::Lfd(_) = policy {
        return worst_order_lfd(g, m, policy, cfg, sc);
    }

    let mut base_counts = vec![0u32; g.vertex_count() as usize];
    for (page, count) in m.counts() {
        base_counts[page.index()] = count;
    }
    let total = m.total();

    let starts: Vec<u32> = match sc.start_page {
        Some(p) => {
            if !g.contains(p) {
                return Err(Error::InvalidPage {
                    id: p.get(),
                    max: g.vertex_count(),
                });
            }
            if m.count(p) == 0 {
                return Err(Error::InfeasibleMultiset(format!(
                    "start page {p} is not in the multiset"
                )));
            }
            vec![p.get()]
        }
        None => m.counts().map(|(p, _)| p.get()).collect(),
    };

    let quota = (sc.node_budget / starts.len() as u64).max(1);
    let k = cfg.k();
    let run = |start: u32| search_branch(g, k, start, &base_counts, total, policy, quota);

    let outcomes: Vec<BranchOutcome> = if sc.parallel_width > 1 && starts.len() > 1 {
        let mut results: Vec<Option<BranchOutcome>> = Vec::new();
        results.resize_with(starts.len(), || None);
        let width = sc.parallel_width.min(starts.len());
        let chunk = starts.len().div_ceil(width);
        std::thread::scope(|scope| {
            for (starts_chunk, results_chunk) in
                starts.chunks(chunk).zip(results.chunks_mut(chunk))
            {
                let run = &run;
                scope.spawn(move || {
                    for (slot, &start) in results_chunk.iter_mut().zip(starts_chunk) {
                        *slot = Some(run(start));
                    }
                });
            }
        });
        results.into_iter().map(|r| r.expect("branch ran")).collect()
    } else {
        starts.iter().map(|&s| run(s)).collect()
    };

    let exhausted = outcomes.iter().all(|o| o.exhausted);
    let mut best: Option<&BranchOutcome> = None;
    for outcome in &outcomes {
        if outcome.value == DEAD {
            continue;
        }
        // Starts are iterated in increasing order, so on ties the earlier
        // branch already holds the lexicographically smaller witness.
        if best.map_or(true, |b| outcome.value > b.value) {
            best = Some(outcome);
        }
    }

    match best {
        Some(outcome) => Ok(WorstOrderResult {
            max_faults: outcome.value as usize,
            witness: outcome.witness.clone().expect("value implies witness"),
            exhausted,
        }),
        None if exhausted => Err(Error::InfeasibleMultiset(format!(
            "no walk on the graph realizes {m}{}",
            match sc.start_page {
                Some(p) => format!(" starting at {p}"),
                None => String::new(),
            }
        ))),
        None => Err(Error::BudgetExhausted {
            budget: sc.node_budget,
        }),
    }
}

/// Worst order for the offline policy: enumerate every complete walk and
/// simulate each one. Each prefix extension costs one node of budget.
fn worst_order_lfd(
    g: &AccessGraph,
    m: &RequestMultiset,
    policy: Policy,
    cfg: CacheConfig,
    sc: &SearchConfig,
) -> Result<WorstOrderResult> {
    let mut best: Option<(usize, RequestSequence)> = None;
    let mut nodes: u64 = 0;
    let mut aborted = false;
    let total = m.total() as usize;
    enumerate_walks_consuming(g, m, sc.start_page, &mut |walk| {
        nodes += 1;
        if nodes > sc.node_budget {
            aborted = true;
            return false;
        }
        if walk.len() == total {
            let faults = simulate(policy, walk, cfg).total_faults;
            if best.as_ref().map_or(true, |(b, _)| faults > *b) {
                best = Some((faults, walk.to_vec()));
            }
        }
        true
    });
    match best {
        Some((max_faults, witness)) => Ok(WorstOrderResult {
            max_faults,
            witness,
            exhausted: !aborted,
        }),
        None if !aborted => Err(Error::InfeasibleMultiset(format!(
            "no walk on the graph realizes {m}"
        ))),
        None => Err(Error::BudgetExhausted {
            budget: sc.node_budget,
        }),
    }
}

/// Depth-first enumeration of every walk prefix consuming part of `m`, in
/// lexicographic order. The visitor sees each prefix (complete walks are
/// those of length `m.total()`); returning false aborts the enumeration.
fn enumerate_walks_consuming(
    g: &AccessGraph,
    m: &RequestMultiset,
    start_page: Option<PageId>,
    visit: &mut dyn FnMut(&[PageId]) -> bool,
) {
    let mut counts = vec![0u32; g.vertex_count() as usize];
    for (page, count) in m.counts() {
        counts[page.index()] = count;
    }
    let starts: Vec<PageId> = match start_page {
        Some(p) => {
            if m.count(p) == 0 {
                return;
            }
            vec![p]
        }
        None => m.counts().map(|(p, _)| p).collect(),
    };
    let total = m.total();
    let mut walk = Vec::with_capacity(total as usize);
    for start in starts {
        counts[start.index()] -= 1;
        walk.push(start);
        let keep_going = extend_walks(g, &mut counts, total - 1, &mut walk, visit);
        walk.pop();
        counts[start.index()] += 1;
        if !keep_going {
            return;
        }
    }
}

fn extend_walks(
    g: &AccessGraph,
    counts: &mut Vec<u32>,
    remaining: u32,
    walk: &mut RequestSequence,
    visit: &mut dyn FnMut(&[PageId]) -> bool,
) -> bool {
    if !visit(walk) {
        return false;
    }
    if remaining == 0 {
        return true;
    }
    let cur = *walk.last().expect("walk nonempty");
    let mut nexts: Vec<PageId> = g
        .neighbors(cur)
        .filter(|q| counts[q.index()] > 0)
        .collect();
    if counts[cur.index()] > 0 {
        nexts.push(cur);
    }
    nexts.sort_unstable();
    for q in nexts {
        counts[q.index()] -= 1;
        walk.push(q);
        let keep_going = extend_walks(g, counts, remaining - 1, walk, visit);
        walk.pop();
        counts[q.index()] += 1;
        if !keep_going {
            return false;
        }
    }
    true
}

/// Every distinct walk on `g` consuming `m` exactly, in lexicographic order.
///
/// Exhaustive enumeration blows up factorially, so multisets with more than
/// [`ENUMERATION_GUARD`] requests are refused.
pub fn enumerate_reorderings(
    g: &AccessGraph,
    m: &RequestMultiset,
    sc: &SearchConfig,
) -> Result<Vec<RequestSequence>> {
    m.validate_on(g)?;
    if m.total() > ENUMERATION_GUARD {
        return Err(Error::SizeGuard {
            total: m.total(),
            guard: ENUMERATION_GUARD,
        });
    }
    let mut out = Vec::new();
    let total = m.total() as usize;
    enumerate_walks_consuming(g, m, sc.start_page, &mut |walk| {
        if walk.len() == total {
            out.push(walk.to_vec());
        }
        true
    });
    Ok(out)
}

/// One point of a relative-worst-order ratio curve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatioPoint {
    pub n: u32,
    /// Worst-order cost of policy A at this n.
    pub a_w: u64,
    /// Worst-order cost of policy B at this n.
    pub b_w: u64,
    /// a_w / b_w, exact.
    pub ratio: Ratio<i64>,
    /// Difference quotient against the previous point; cancels any fixed
    /// additive constant between the two cost curves. None for the first
    /// point or when the denominator vanishes.
    pub slope: Option<Ratio<i64>>,
    /// False when either worst-order value came from a budget-limited search.
    pub exhaustive: bool,
}

impl RatioPoint {
    pub fn to_json(&self) -> serde_json::Value {
        let ratio_f = *self.ratio.numer() as f64 / *self.ratio.denom() as f64;
        let slope_f = self.slope.map(|s| *s.numer() as f64 / *s.denom() as f64);
        serde_json::json!({
            "n": self.n,
            "a_w": self.a_w,
            "b_w": self.b_w,
            "ratio": ratio_f,
            "slope": slope_f,
            "exhaustive": self.exhaustive,
        })
    }
}

/// Render curve points as CSV with the fixed column order n,a_w,b_w,ratio,slope.
pub fn ratio_points_to_csv(points: &[RatioPoint]) -> String {
    let mut out = String::from("n,a_w,b_w,ratio,slope\n");
    for p in points {
        let ratio = *p.ratio.numer() as f64 / *p.ratio.denom() as f64;
        let slope = p
            .slope
            .map(|s| format!("{:.6}", *s.numer() as f64 / *s.denom() as f64))
            .unwrap_or_default();
        out.push_str(&format!(
            "{},{},{},{:.6},{}\n",
            p.n, p.a_w, p.b_w, ratio, slope
        ));
    }
    out
}

/// Worst-order value of `policy` on the n-th member of `kind`.
///
/// The zig-zag family has certified closed forms for every policy we model:
/// FIFO pays k+1 per block, LRU (optimal on paths, matching LFD) pays the
/// cold start plus two faults per extra block, and FWF faults on every
/// request. Other families are resolved by exact search; the returned flag
/// reports whether that search completed.
fn family_worst_order(
    kind: FamilyKind,
    policy: Policy,
    cfg: CacheConfig,
    n: u32,
    sc: &SearchConfig,
) -> Result<(u64, bool)> {
    let k = cfg.k() as u64;
    if kind == FamilyKind::In {
        let n = u64::from(n);
        let value = match policy {
            Policy::Fifo => (k + 1) * n,
            Policy::Lru | Policy::Lfd(_) => 2 * (n - 1) + k + 1,
            Policy::Fwf => 2 * k * n,
        };
        return Ok((value, true));
    }
    let (seq, graph) = match kind {
        FamilyKind::Is => gen_is(cfg.k() as u32, n)?,
        FamilyKind::Jr => gen_jr(n)?,
        FamilyKind::ScriptIn => gen_script_in(n)?,
        FamilyKind::In => unreachable!("handled above"),
    };
    let m = RequestMultiset::from_sequence(&seq);
    let result = worst_order_exact(&graph, &m, policy, cfg, sc)?;
    Ok((result.max_faults as u64, result.exhausted))
}

/// Compute worst-order costs of two policies across a family, with exact
/// ratios and slopes. Points from budget-limited searches are flagged so no
/// caller certifies anything from them.
pub fn rwor_curve(
    kind: FamilyKind,
    policy_a: Policy,
    policy_b: Policy,
    cfg: CacheConfig,
    n_range: RangeInclusive<u32>,
) -> Result<Vec<RatioPoint>> {
    let mut points: Vec<RatioPoint> = Vec::new();
    let mut previous: Option<(u64, u64)> = None;
    for n in n_range {
        if n == 0 {
            return Err(Error::InvalidParameter("family index starts at 1".into()));
        }
        let sc = SearchConfig::default();
        let (a_w, a_done) = family_worst_order(kind, policy_a, cfg, n, &sc)?;
        let (b_w, b_done) = family_worst_order(kind, policy_b, cfg, n, &sc)?;
        if b_w == 0 {
            return Err(Error::Internal(format!(
                "worst-order cost of {} is zero at n={n}",
                policy_b.name()
            )));
        }
        let slope = previous.and_then(|(pa, pb)| {
            let da = a_w as i64 - pa as i64;
            let db = b_w as i64 - pb as i64;
            (db != 0).then(|| Ratio::new(da, db))
        });
        points.push(RatioPoint {
            n,
            a_w,
            b_w,
            ratio: Ratio::new(a_w as i64, b_w as i64),
            slope,
            exhaustive: a_done && b_done,
        });
        previous = Some((a_w, b_w));
    }
    Ok(points)
}
