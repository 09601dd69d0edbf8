//! Exhaustive search for natural transformations between two functors.
//!
//! The search assigns one component per source object. Objects are visited
//! in ascending order of candidate count (ties by index) and candidates in
//! ascending morphism index. After each assignment every naturality square
//! whose endpoints are both assigned is checked, so a partial assignment is
//! abandoned as soon as it cannot extend to a natural family.

use std::ops::ControlFlow;
use std::sync::Arc;

use serde::Serialize;

use crate::category::Mor;
use crate::error::Result;
use crate::functor::{check_parallel, FunctorData, NatTransformData};

pub const DEFAULT_NODE_BUDGET: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchLimits {
    /// Stop after this many results.
    pub max_results: Option<usize>,
    /// Stop after visiting this many search nodes (component assignments).
    pub node_budget: u64,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            max_results: None,
            node_budget: DEFAULT_NODE_BUDGET,
        }
    }
}

impl SearchLimits {
    pub fn with_budget(node_budget: u64) -> Self {
        SearchLimits {
            max_results: None,
            node_budget,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    pub nodes: u64,
    /// The node budget ran out before the space was exhausted.
    pub budget_exhausted: bool,
    /// The result limit was reached.
    pub result_limited: bool,
}

impl SearchStats {
    pub fn truncated(&self) -> bool {
        self.budget_exhausted || self.result_limited
    }
}

#[derive(Debug, Clone)]
pub struct SearchOutcome {
    pub found: Vec<NatTransformData>,
    pub stats: SearchStats,
}

impl SearchOutcome {
    pub fn truncated(&self) -> bool {
        self.stats.truncated()
    }
}

/// The answer to "is there a natural isomorphism F ⇒ G?".
#[derive(Debug, Clone)]
pub enum Existence<T = NatTransformData> {
    Found(T),
    /// The whole space was searched and nothing qualified.
    Absent,
    /// The budget ran out first; nothing can be concluded.
    Unknown,
}

impl<T> Existence<T> {
    pub fn found(&self) -> Option<&T> {
        match self {
            Existence::Found(t) => Some(t),
            _ => None,
        }
    }

    pub fn is_absent(&self) -> bool {
        matches!(self, Existence::Absent)
    }

    pub fn describe(&self) -> &'static str {
        match self {
            Existence::Found(_) => "found",
            Existence::Absent => "absent",
            Existence::Unknown => "unknown (budget exhausted)",
        }
    }
}

struct Plan {
    order: Vec<usize>,
    candidates: Vec<Vec<Mor>>,
    // For the object at each depth: morphisms whose other endpoint was
    // assigned earlier or is the object itself.
    checks: Vec<Vec<Mor>>,
}

fn plan(f: &FunctorData, g: &FunctorData, iso_only: bool) -> Plan {
    let (s, t) = (&f.source, &f.target);
    let candidates: Vec<Vec<Mor>> = s
        .objects()
        .map(|x| {
            t.hom(f.obj(x), g.obj(x))
                .iter()
                .copied()
                .filter(|&c| !iso_only || t.is_invertible(c).is_some())
                .collect()
        })
        .collect();
    let mut order: Vec<usize> = s.objects().collect();
    order.sort_by_key(|&x| (candidates[x].len(), x));
    let mut depth = vec![0usize; s.object_count()];
    for (d, &x) in order.iter().enumerate() {
        depth[x] = d;
    }
    let mut checks = vec![Vec::new(); s.object_count()];
    for m in s.morphisms() {
        let (x, y) = s.ends(m);
        checks[depth[x].max(depth[y])].push(m);
    }
    Plan {
        order,
        candidates,
        checks,
    }
}

/// Visits every natural transformation `F ⇒ G` (only natural isomorphisms
/// when `iso_only`) in the deterministic search order, until the visitor
/// breaks or the node budget runs out.
pub fn for_each_natural_transformation(
    f: &FunctorData,
    g: &FunctorData,
    iso_only: bool,
    node_budget: u64,
    mut visit: impl FnMut(&[Mor]) -> ControlFlow<()>,
) -> Result<SearchStats> {
    check_parallel(f, g)?;
    let t = &f.target;
    let s = &f.source;
    let plan = plan(f, g, iso_only);
    let n = s.object_count();
    let mut stats = SearchStats {
        nodes: 0,
        budget_exhausted: false,
        result_limited: false,
    };
    let mut components = vec![usize::MAX; n];
    // cursor[d] is the next candidate index to try at depth d.
    let mut cursor = vec![0usize; n + 1];
    let mut depth = 0usize;

    let square_ok = |components: &[Mor], m: Mor| {
        let (x, y) = s.ends(m);
        t.composite(g.mor(m), components[x]) == t.composite(components[y], f.mor(m))
    };

    if n == 0 {
        let _ = visit(&components);
        return Ok(stats);
    }
    loop {
        let x = plan.order[depth];
        let cands = &plan.candidates[x];
        if cursor[depth] >= cands.len() {
            components[x] = usize::MAX;
            if depth == 0 {
                break;
            }
            depth -= 1;
            continue;
        }
        if stats.nodes >= node_budget {
            stats.budget_exhausted = true;
            break;
        }
        stats.nodes += 1;
        components[x] = cands[cursor[depth]];
        cursor[depth] += 1;
        if !plan.checks[depth].iter().all(|&m| square_ok(&components, m)) {
            continue;
        }
        if depth + 1 == n {
            if visit(&components).is_break() {
                stats.result_limited = true;
                break;
            }
            continue;
        }
        depth += 1;
        cursor[depth] = 0;
    }
    Ok(stats)
}

/// All natural transformations `F ⇒ G` up to the given limits. Results are
/// duplicate-free and in search order.
pub fn search_natural_transformations(
    f: &Arc<FunctorData>,
    g: &Arc<FunctorData>,
    iso_only: bool,
    limits: SearchLimits,
) -> Result<SearchOutcome> {
    let mut found = Vec::new();
    let stats = for_each_natural_transformation(f, g, iso_only, limits.node_budget, |comps| {
        found.push(NatTransformData::new(f.clone(), g.clone(), comps.to_vec()));
        match limits.max_results {
            Some(k) if found.len() >= k => ControlFlow::Break(()),
            _ => ControlFlow::Continue(()),
        }
    })?;
    Ok(SearchOutcome { found, stats })
}

/// The first natural isomorphism in search order.
pub fn exists_natural_iso(f: &Arc<FunctorData>, g: &Arc<FunctorData>, node_budget: u64) -> Result<Existence> {
    let outcome = search_natural_transformations(
        f,
        g,
        true,
        SearchLimits {
            max_results: Some(1),
            node_budget,
        },
    )?;
    Ok(match outcome.found.into_iter().next() {
        Some(t) => Existence::Found(t),
        None if outcome.stats.budget_exhausted => Existence::Unknown,
        None => Existence::Absent,
    })
}
