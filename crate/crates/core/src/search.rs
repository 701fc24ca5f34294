//! Exhaustive search for small `k`-uniform hypergraphs with `EI(H) = C_n`.
//!
//! Any representation contains one whose edges are the union of one generating
//! pair per cycle edge, and such a sub-hypergraph is itself a representation
//! with no more edges. The search therefore walks the cycle edges `{1,2}`,
//! `{2,3}`, … in order; at each edge not yet generated it branches over pairs of
//! `k`-sets (already chosen or new) meeting exactly in that edge. A branch is cut
//! as soon as two chosen hyperedges meet in two or more vertices that do not
//! form a cycle edge, since no superset can repair that.
//!
//! Further cuts, each a necessary condition on some representation:
//!
//! * every vertex ends with degree at least 3, so the remaining edge allowance
//!   must cover the total degree deficit;
//! * dihedral symmetry: every generating pair has a canonical key (its image
//!   under the rotation or reflection taking its cycle edge to `{1,2}`). Some
//!   symmetric copy of every representation has its least-key pair at `{1,2}`,
//!   so the pair chosen there must equal its own key, and any generating pair
//!   appearing later with a smaller key ends the branch.
//!
//! Root branches (the pair at `{1,2}`) run in parallel. The outcome is folded
//! in root order, so it does not depend on scheduling.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::hypergraph::{Hyperedge, Hypergraph};
use crate::verification::lower_bound_uniform;
use crate::vertex::Vertex;

/// Largest `n` the bit-mask search supports.
pub const MAX_SEARCH_N: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchParams {
    pub k: usize,
    pub n: usize,
    pub max_edges: usize,
    /// Node limit; a node is one call of the recursive step.
    pub budget: u64,
    /// Worker threads; 0 picks rayon's default.
    pub threads: usize,
}

impl SearchParams {
    pub const DEFAULT_BUDGET: u64 = 2_000_000_000;

    pub fn new(k: usize, n: usize, max_edges: usize) -> Self {
        SearchParams {
            k,
            n,
            max_edges,
            budget: Self::DEFAULT_BUDGET,
            threads: 0,
        }
    }

    pub fn budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }

    pub fn threads(mut self, threads: usize) -> Self {
        self.threads = threads;
        self
    }

    fn validate(&self) -> Result<()> {
        if self.k < 3 || self.k >= self.n {
            return Err(Error::SearchParameters(format!(
                "need 3 <= k < n, got k = {}, n = {}",
                self.k, self.n
            )));
        }
        if self.n > MAX_SEARCH_N {
            return Err(Error::SearchParameters(format!(
                "n = {} exceeds the supported maximum {MAX_SEARCH_N}",
                self.n
            )));
        }
        if self.max_edges < 3 {
            return Err(Error::SearchParameters(format!(
                "max_edges must be at least 3, got {}",
                self.max_edges
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchStatus {
    Exists(Hypergraph),
    NotExists,
    BudgetExhausted,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    pub status: SearchStatus,
    pub nodes_explored: u64,
    pub budget: u64,
}

impl SearchOutcome {
    pub fn witness(&self) -> Option<&Hypergraph> {
        match &self.status {
            SearchStatus::Exists(h) => Some(h),
            _ => None,
        }
    }
}

/// Looks for a `k`-uniform hypergraph with at most `max_edges` edges and
/// `EI(H) = C_n`.
pub fn find_representation(params: SearchParams) -> Result<SearchOutcome> {
    params.validate()?;
    let ctx = Context::new(params.k, params.n);
    let roots = ctx.roots();
    let budget = params.budget;
    if params.max_edges < 2 || roots.is_empty() {
        return Ok(SearchOutcome {
            status: SearchStatus::NotExists,
            nodes_explored: 1,
            budget,
        });
    }

    let shared = Shared {
        first_found: AtomicUsize::new(usize::MAX),
        completed: Mutex::new(vec![None; roots.len()]),
    };
    let run = |(i, root): (usize, &(u64, u64))| {
        let mut dfs = Dfs::new(&ctx, params.max_edges, budget, i, &shared);
        let found = dfs.start(*root);
        let result = RootResult {
            nodes: dfs.nodes,
            found,
            aborted: dfs.aborted,
        };
        if !result.aborted {
            shared.completed.lock().expect("no poisoned lock")[i] = Some(result.nodes);
        }
        if result.found.is_some() {
            shared.first_found.fetch_min(i, Ordering::SeqCst);
        }
        result
    };
    let results: Vec<RootResult> = if params.threads == 1 {
        roots.iter().enumerate().map(run).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(params.threads)
            .build()
            .map_err(|e| Error::SearchParameters(format!("thread pool: {e}")))?;
        pool.install(|| roots.par_iter().enumerate().map(run).collect())
    };

    // fold in root order: the outcome is what a sequential run would report
    let mut total: u64 = 1;
    for r in results {
        total += r.nodes;
        if total > budget {
            return Ok(SearchOutcome {
                status: SearchStatus::BudgetExhausted,
                nodes_explored: total,
                budget,
            });
        }
        if let Some(masks) = r.found {
            return Ok(SearchOutcome {
                status: SearchStatus::Exists(ctx.to_hypergraph(&masks)),
                nodes_explored: total,
                budget,
            });
        }
        debug_assert!(
            !r.aborted,
            "aborted roots always exceed the budget in the fold"
        );
    }
    Ok(SearchOutcome {
        status: SearchStatus::NotExists,
        nodes_explored: total,
        budget,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MinimumOutcome {
    /// Smallest edge count admitting a representation, with a witness.
    Minimum { edges: usize, witness: Hypergraph },
    /// No `k`-uniform hypergraph on `n` vertices has `EI(H) = C_n`.
    NoRepresentation,
    /// The node budget ran out; every count below `searched_below` is impossible.
    BudgetExhausted { searched_below: usize },
}

/// Iterative deepening on the edge allowance, starting from `⌈3n/k⌉`.
///
/// The budget is shared across all deepening rounds. An allowance of `2n`
/// never binds (each cycle edge adds at most two new hyperedges), so a
/// negative answer there means no representation exists at all.
pub fn find_minimum(k: usize, n: usize, budget: u64, threads: usize) -> Result<MinimumOutcome> {
    SearchParams::new(k, n, 3).validate()?;
    let mut remaining = budget;
    let start = lower_bound_uniform(k, n).max(3);
    for max_edges in start..=(2 * n).max(start) {
        let params = SearchParams {
            k,
            n,
            max_edges,
            budget: remaining,
            threads,
        };
        let outcome = find_representation(params)?;
        match outcome.status {
            SearchStatus::Exists(witness) => {
                return Ok(MinimumOutcome::Minimum {
                    edges: witness.len(),
                    witness,
                })
            }
            SearchStatus::BudgetExhausted => {
                return Ok(MinimumOutcome::BudgetExhausted {
                    searched_below: max_edges,
                })
            }
            SearchStatus::NotExists => remaining = remaining.saturating_sub(outcome.nodes_explored),
        }
    }
    Ok(MinimumOutcome::NoRepresentation)
}

struct Shared {
    first_found: AtomicUsize,
    completed: Mutex<Vec<Option<u64>>>,
}

struct RootResult {
    nodes: u64,
    found: Option<Vec<u64>>,
    aborted: bool,
}

type Pair = (u64, u64);

fn ordered(a: u64, b: u64) -> Pair {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Precomputed data for one `(k, n)`.
struct Context {
    n: usize,
    k: usize,
    /// `cycle[j]` is the mask of `{j+1, j+2}` (bits are vertex - 1).
    cycle: Vec<u64>,
    /// All `k`-subsets containing cycle edge `j`, ascending.
    candidates: Vec<Vec<u64>>,
}

impl Context {
    fn new(k: usize, n: usize) -> Self {
        let cycle: Vec<u64> = (0..n)
            .map(|j| (1u64 << j) | (1u64 << ((j + 1) % n)))
            .collect();
        let candidates = cycle
            .iter()
            .map(|&m| {
                let rest: Vec<usize> = (0..n).filter(|&b| m & (1 << b) == 0).collect();
                let mut out = Vec::new();
                subsets(&rest, k - 2, 0, m, &mut out);
                out.sort_unstable();
                out
            })
            .collect();
        Context {
            n,
            k,
            cycle,
            candidates,
        }
    }

    fn full(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    /// Index of the cycle edge equal to `x`, if any.
    fn cycle_edge(&self, x: u64) -> Option<usize> {
        if x.count_ones() != 2 {
            return None;
        }
        let lo = x.trailing_zeros() as usize;
        if x == self.cycle[lo] {
            Some(lo)
        } else if lo == 0 && x == self.cycle[self.n - 1] {
            Some(self.n - 1)
        } else {
            None
        }
    }

    fn rotate(&self, mask: u64, shift: usize) -> u64 {
        let n = self.n;
        let shift = shift % n;
        if shift == 0 {
            return mask;
        }
        ((mask >> shift) | (mask << (n - shift))) & self.full()
    }

    /// Image of `mask` under `b ↦ (c - b) mod n`.
    fn reflect(&self, mask: u64, c: usize) -> u64 {
        let n = self.n;
        let mut out = 0;
        let mut m = mask;
        while m != 0 {
            let b = m.trailing_zeros() as usize;
            m &= m - 1;
            out |= 1 << ((c + n - b) % n);
        }
        out
    }

    /// Canonical key of a pair generating cycle edge `j`: the smaller of its
    /// images under the two symmetries taking `{j, j+1}` (bits) to `{0, 1}`.
    fn key(&self, a: u64, b: u64, j: usize) -> Pair {
        let rot = ordered(self.rotate(a, j), self.rotate(b, j));
        let c = j + 1;
        let refl = ordered(self.reflect(a, c), self.reflect(b, c));
        rot.min(refl)
    }

    /// Root pairs at cycle edge 0 that are their own canonical key.
    fn roots(&self) -> Vec<Pair> {
        let cands = &self.candidates[0];
        let m = self.cycle[0];
        let mut out = Vec::new();
        for (i, &a) in cands.iter().enumerate() {
            for &b in &cands[i + 1..] {
                if a & b == m && self.key(a, b, 0) == (a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    fn to_hypergraph(&self, masks: &[u64]) -> Hypergraph {
        let n = self.n;
        let edges = masks
            .iter()
            .map(|&m| {
                let vs = (0..n)
                    .filter(|&b| m & (1 << b) != 0)
                    .map(|b| Vertex::wrap(b as i64 + 1, n))
                    .collect::<Vec<_>>();
                Hyperedge::new(vs).expect("bit positions are distinct")
            })
            .collect();
        Hypergraph::new(n, edges).expect("search never repeats an edge")
    }
}

fn subsets(rest: &[usize], need: usize, from: usize, acc: u64, out: &mut Vec<u64>) {
    if need == 0 {
        out.push(acc);
        return;
    }
    for i in from..rest.len() {
        if rest.len() - i < need {
            break;
        }
        subsets(rest, need - 1, i + 1, acc | (1 << rest[i]), out);
    }
}

struct Dfs<'a> {
    ctx: &'a Context,
    max_edges: usize,
    budget: u64,
    root_index: usize,
    shared: &'a Shared,
    root_key: Pair,
    chosen: Vec<u64>,
    degree: Vec<u8>,
    /// Bit `j` set when cycle edge `j` is generated.
    generated: u64,
    nodes: u64,
    aborted: bool,
}

impl<'a> Dfs<'a> {
    fn new(
        ctx: &'a Context,
        max_edges: usize,
        budget: u64,
        root_index: usize,
        shared: &'a Shared,
    ) -> Self {
        Dfs {
            ctx,
            max_edges,
            budget,
            root_index,
            shared,
            root_key: (0, 0),
            chosen: Vec::with_capacity(max_edges),
            degree: vec![0; ctx.n],
            generated: 0,
            nodes: 0,
            aborted: false,
        }
    }

    fn start(&mut self, root: Pair) -> Option<Vec<u64>> {
        self.root_key = root;
        let saved = self.generated;
        if !self.try_add(root.0) {
            return None;
        }
        let ok = self.try_add(root.1);
        debug_assert!(ok, "root pairs are compatible by construction");
        let found = if ok && self.recurse(1) {
            Some(self.chosen.clone())
        } else {
            None
        };
        self.generated = saved;
        found
    }

    fn should_abort(&mut self) -> bool {
        if self.aborted {
            return true;
        }
        if self.shared.first_found.load(Ordering::Relaxed) < self.root_index
            || self.nodes > self.budget
        {
            self.aborted = true;
        } else if self.nodes.is_multiple_of(4096) {
            let done = self.shared.completed.lock().expect("no poisoned lock");
            let before: u64 = done[..self.root_index].iter().flatten().sum();
            if before + self.nodes > self.budget {
                self.aborted = true;
            }
        }
        self.aborted
    }

    /// Adds `c` if it keeps every pairwise intersection admissible. On success
    /// updates degrees and generated edges; on failure leaves state unchanged.
    fn try_add(&mut self, c: u64) -> bool {
        let mut newly = 0u64;
        for &s in &self.chosen {
            if s == c {
                return false;
            }
            let x = s & c;
            if x.count_ones() < 2 {
                continue;
            }
            let Some(j) = self.ctx.cycle_edge(x) else {
                return false;
            };
            if self.ctx.key(s, c, j) < self.root_key {
                return false;
            }
            newly |= 1 << j;
        }
        self.chosen.push(c);
        let mut m = c;
        while m != 0 {
            let b = m.trailing_zeros() as usize;
            m &= m - 1;
            self.degree[b] += 1;
        }
        self.generated |= newly;
        true
    }

    fn remove_last(&mut self, generated_before: u64) {
        let c = self.chosen.pop().expect("remove after add");
        let mut m = c;
        while m != 0 {
            let b = m.trailing_zeros() as usize;
            m &= m - 1;
            self.degree[b] -= 1;
        }
        self.generated = generated_before;
    }

    /// Remaining allowance must cover the degree deficit to 3 everywhere.
    fn degree_feasible(&self) -> bool {
        let deficit: usize = self
            .degree
            .iter()
            .map(|&d| 3usize.saturating_sub(d as usize))
            .sum();
        let room = self.max_edges - self.chosen.len();
        room * self.ctx.k >= deficit
    }

    /// Depth-first step at cycle edge `j`; `true` once a representation is found.
    fn recurse(&mut self, mut j: usize) -> bool {
        self.nodes += 1;
        if self.should_abort() {
            return false;
        }
        let n = self.ctx.n;
        while j < n && self.generated & (1 << j) != 0 {
            j += 1;
        }
        if j == n {
            return true;
        }
        if !self.degree_feasible() {
            return false;
        }
        let room = self.max_edges - self.chosen.len();
        if room == 0 {
            return false;
        }
        let m = self.ctx.cycle[j];
        let ctx = self.ctx;
        let cands = &ctx.candidates[j];

        // an existing hyperedge through the cycle edge plus one new one
        let existing: Vec<u64> = self
            .chosen
            .iter()
            .copied()
            .filter(|&s| s & m == m)
            .collect();
        for &s in &existing {
            for &c in cands {
                if c & s != m {
                    continue;
                }
                let before = self.generated;
                if !self.try_add(c) {
                    continue;
                }
                if self.recurse(j + 1) {
                    return true;
                }
                self.remove_last(before);
                if self.aborted {
                    return false;
                }
            }
        }

        // two new hyperedges
        if room < 2 {
            return false;
        }
        for (i, &a) in cands.iter().enumerate() {
            let before_a = self.generated;
            if !self.try_add(a) {
                continue;
            }
            for &b in &cands[i + 1..] {
                if a & b != m {
                    continue;
                }
                let before_b = self.generated;
                if !self.try_add(b) {
                    continue;
                }
                if self.recurse(j + 1) {
                    return true;
                }
                self.remove_last(before_b);
                if self.aborted {
                    return false;
                }
            }
            self.remove_last(before_a);
        }
        false
    }
}
