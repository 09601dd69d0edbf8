//! Executable replays of the distributivity and additivity results.
//!
//! Every verifier records its hypotheses and conclusions as decided on the
//! instance, so the verdict distinguishes confirmation from vacuous truth.
//! Where a proof goes through intermediate facts those are replayed as extra
//! conclusions; each one is implied by the hypotheses, so a failure there is
//! an inconsistency just like a failed headline conclusion. Independent code
//! paths that disagree are recorded as anomalies.

use std::sync::{Arc, OnceLock};

use crate::category::{FinCategory, Mor, Obj};
use crate::constructions::slice_category;
use crate::error::Result;
use crate::functor::{is_fully_faithful, FunctorData, NatTransformData};
use crate::limits::{
    canonical_alpha, canonical_delta, copair_from_coproduct, coproduct_map, delta_coverage_gaps, delta_functors,
    is_distributive, is_semi_additive, is_subterminal, pair_into_product, plus_times_functors, product_map,
    zero_structure, DeltaFunctors, LimitCache, PlusTimesFunctors, Scope, ZeroStructure,
};
use crate::monoidal::{
    cartesian_monoidal, check_coproduct_preservation, check_strength_theorem, cocartesian_monoidal,
    coproduct_comparison, coproduct_comparison_functors, find_monoidal_iso, product_lax_functor,
    MonoidalFunctorData, NatCheckMode, StrengthSetting,
};
use crate::report::{TheoremId, TheoremReport};
use crate::search::{Existence, SearchStats, DEFAULT_NODE_BUDGET};

/// The outcome of one natural-isomorphism search between two functors.
#[derive(Debug, Clone)]
pub struct IsoSearch<F> {
    pub functors: F,
    pub psi: Existence,
    pub stats: SearchStats,
}

/// Either the search ran or the limits it needs are missing.
#[derive(Debug, Clone)]
pub enum Covered<T> {
    Total(Arc<T>),
    Partial(Vec<String>),
}

type Lazy<T> = OnceLock<Result<Covered<T>>>;

/// One corpus member with its limits and the searches shared between
/// verifiers, each computed at most once.
pub struct Analysis {
    pub name: String,
    pub category: Arc<FinCategory>,
    pub cache: LimitCache,
    pub budget: u64,
    delta: Lazy<IsoSearch<DeltaFunctors>>,
    plus_times: Lazy<IsoSearch<PlusTimesFunctors>>,
    cocartesian: Lazy<StrengthSetting>,
}

impl Analysis {
    pub fn new(name: impl Into<String>, category: Arc<FinCategory>, budget: u64) -> Self {
        let cache = LimitCache::build(&category);
        Analysis {
            name: name.into(),
            category,
            cache,
            budget,
            delta: OnceLock::new(),
            plus_times: OnceLock::new(),
            cocartesian: OnceLock::new(),
        }
    }

    pub fn with_default_budget(name: impl Into<String>, category: FinCategory) -> Self {
        Self::new(name, Arc::new(category), DEFAULT_NODE_BUDGET)
    }

    fn name_of(&self, x: Obj) -> String {
        self.category.object_name(x)
    }

    /// ψ candidates `X×Y + X×Z ≅ X×(Y+Z)` on the δ-functors.
    pub fn delta_search(&self) -> Result<Covered<IsoSearch<DeltaFunctors>>> {
        self.delta
            .get_or_init(|| {
                let gaps = delta_coverage_gaps(&self.category, &self.cache);
                if let Some(&(x, y, z)) = gaps.first() {
                    return Ok(Covered::Partial(vec![format!(
                        "δ witnesses missing for {} triple(s), e.g. ({}, {}, {})",
                        gaps.len(),
                        self.name_of(x),
                        self.name_of(y),
                        self.name_of(z)
                    )]));
                }
                let functors = delta_functors(&self.category, &self.cache)?;
                let (psi, stats) = iso_search(&functors.lhs, &functors.rhs, self.budget)?;
                Ok(Covered::Total(Arc::new(IsoSearch { functors, psi, stats })))
            })
            .clone()
    }

    /// ψ candidates `Y+Z ≅ Y×Z` on the plus/times functors.
    pub fn plus_times_search(&self) -> Result<Covered<IsoSearch<PlusTimesFunctors>>> {
        self.plus_times
            .get_or_init(|| {
                let mut gaps = Vec::new();
                let p = self.cache.missing_products();
                if let Some(&(y, z)) = p.first() {
                    gaps.push(format!(
                        "{} binary products missing, e.g. {} × {}",
                        p.len(),
                        self.name_of(y),
                        self.name_of(z)
                    ));
                }
                let q = self.cache.missing_coproducts();
                if let Some(&(y, z)) = q.first() {
                    gaps.push(format!(
                        "{} binary coproducts missing, e.g. {} + {}",
                        q.len(),
                        self.name_of(y),
                        self.name_of(z)
                    ));
                }
                if !gaps.is_empty() {
                    return Ok(Covered::Partial(gaps));
                }
                let functors = plus_times_functors(&self.category, &self.cache)?;
                let (psi, stats) = iso_search(&functors.plus, &functors.times, self.budget)?;
                Ok(Covered::Total(Arc::new(IsoSearch { functors, psi, stats })))
            })
            .clone()
    }

    /// The cocartesian structure with its strength-theorem setting; needs
    /// every limit.
    pub fn cocartesian_setting(&self) -> Result<Covered<StrengthSetting>> {
        self.cocartesian
            .get_or_init(|| {
                if !self.cache.is_total() {
                    return Ok(Covered::Partial(self.cache.gaps()));
                }
                let m = Arc::new(cocartesian_monoidal(&self.category, &self.cache)?);
                Ok(Covered::Total(Arc::new(StrengthSetting::new(&m, &m)?)))
            })
            .clone()
    }
}

fn iso_search(f: &Arc<FunctorData>, g: &Arc<FunctorData>, budget: u64) -> Result<(Existence, SearchStats)> {
    // Same result as exists_natural_iso, but keeps the node count.
    let mut found = None;
    let stats = crate::search::for_each_natural_transformation(f, g, true, budget, |comps| {
        found = Some(comps.to_vec());
        std::ops::ControlFlow::Break(())
    })?;
    let psi = match found {
        Some(c) => Existence::Found(NatTransformData::new(f.clone(), g.clone(), c)),
        None if stats.budget_exhausted => Existence::Unknown,
        None => Existence::Absent,
    };
    Ok((psi, stats))
}

/// Records "ψ exists" as a hypothesis. An exhausted budget is recorded as a
/// coverage gap so it can never read as a nonexistence claim.
fn psi_hypothesis(report: &mut TheoremReport, what: &str, psi: &Existence, stats: &SearchStats) {
    let evidence = match psi {
        Existence::Found(_) => format!("found after {} search node(s)", stats.nodes),
        Existence::Absent => format!("search space exhausted after {} node(s): none", stats.nodes),
        Existence::Unknown => format!("budget of {} node(s) exhausted", stats.nodes),
    };
    if matches!(psi, Existence::Unknown) {
        report.coverage.push(format!("{what}: undecided, {evidence}"));
    }
    report.hypothesis(what, psi.found().is_some(), evidence);
}

fn contrapositive_if_decided(report: &mut TheoremReport, psi: &Existence, conclusion_holds: bool) {
    if !report.hypotheses_hold() && !matches!(psi, Existence::Unknown) {
        report.contrapositive = Some(!conclusion_holds);
    }
}

fn not_covered(theorem: TheoremId, subject: &str, gaps: Vec<String>) -> TheoremReport {
    let mut report = TheoremReport::new(theorem, subject);
    report.coverage = gaps;
    report.finalize()
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn thin(c: &FinCategory) -> bool {
    c.objects().all(|a| c.objects().all(|b| c.hom_size(a, b) <= 1))
}

/// `X × 0 ≅ 0` for every `X`; returns the first counterexample.
fn times_zero_counterexample(a: &Analysis) -> Result<Option<Obj>> {
    let (c, cache) = (&*a.category, &a.cache);
    let zero = cache.require_initial()?;
    for x in c.objects() {
        let apex = cache.require_product(x, zero)?.apex;
        if !c.are_isomorphic(apex, zero) {
            return Ok(Some(x));
        }
    }
    Ok(None)
}

fn distributive_now(a: &Analysis) -> Result<(bool, String)> {
    let r = is_distributive(&a.category, &a.cache, Scope::All)?;
    let evidence = match &r.first_failure {
        None => format!("all {} δ components invertible", r.checked),
        Some(t) => format!("δ at ({}) not invertible", names(a, t)),
    };
    Ok((r.holds, evidence))
}

fn names(a: &Analysis, xs: &[Obj]) -> String {
    xs.iter().map(|&x| a.name_of(x)).collect::<Vec<_>>().join(", ")
}

/// `u = (X×[1,!]) ∘ ψ_{X,Y,0} ∘ i : X×Y → X×Y`, or with `left = false`
/// `v = (X×[!,1]) ∘ ψ_{X,0,Z} ∘ j : X×Z → X×Z`.
fn unit_restriction(a: &Analysis, d: &DeltaFunctors, psi: &[Mor], x: Obj, y: Obj, left: bool) -> Result<Mor> {
    let (c, cache) = (&*a.category, &a.cache);
    let zero = cache.require_initial()?;
    let (first, second) = if left { (y, zero) } else { (zero, y) };
    let component = psi[d.cube.object(&[x, first, second])];
    let lhs = cache.require_coproduct(
        cache.require_product(x, first)?.apex,
        cache.require_product(x, second)?.apex,
    )?;
    let inj = if left { lhs.injections.0 } else { lhs.injections.1 };
    let sum = cache.require_coproduct(first, second)?;
    let from_zero = c.hom(zero, y)[0];
    let fold = if left {
        copair_from_coproduct(c, sum, c.identity(y), from_zero)?
    } else {
        copair_from_coproduct(c, sum, from_zero, c.identity(y))?
    };
    let collapse = product_map(c, cache, c.identity(x), fold)?;
    c.compose_path(&[inj, component, collapse])
}

/// Whether `ψ_{X,Y,Z} = δ ∘ (u + v)` at every triple (first failure), and
/// whether every `u`, `v` is invertible (first failure).
fn lemma_decomposition(
    a: &Analysis,
    d: &DeltaFunctors,
    psi: &[Mor],
) -> Result<(Option<(Obj, Obj, Obj)>, Option<(Obj, Obj, bool)>)> {
    let (c, cache) = (&*a.category, &a.cache);
    let n = c.object_count();
    let mut u = vec![0; n * n];
    let mut v = vec![0; n * n];
    let mut not_invertible = None;
    for x in 0..n {
        for y in 0..n {
            u[x * n + y] = unit_restriction(a, d, psi, x, y, true)?;
            v[x * n + y] = unit_restriction(a, d, psi, x, y, false)?;
            for (m, left) in [(u[x * n + y], true), (v[x * n + y], false)] {
                if c.is_invertible(m).is_none() && not_invertible.is_none() {
                    not_invertible = Some((x, y, left));
                }
            }
        }
    }
    let mut mismatch = None;
    'outer: for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let delta = canonical_delta(c, cache, x, y, z)?;
                let sum = coproduct_map(c, cache, u[x * n + y], v[x * n + z])?;
                if c.compose(delta, sum)? != psi[d.cube.object(&[x, y, z])] {
                    mismatch = Some((x, y, z));
                    break 'outer;
                }
            }
        }
    }
    Ok((mismatch, not_invertible))
}

/// A natural family of isomorphisms `X×Y + X×Z ≅ X×(Y+Z)` together with
/// `X × 0 ≅ 0` forces distributivity.
pub fn verify_lemma_pres_plus(a: &Analysis) -> Result<TheoremReport> {
    let search = match a.delta_search()? {
        Covered::Partial(gaps) => return Ok(not_covered(TheoremId::Lemma1, &a.name, gaps)),
        Covered::Total(s) => s,
    };
    let mut report = TheoremReport::new(TheoremId::Lemma1, &a.name);
    psi_hypothesis(&mut report, "ψ exists", &search.psi, &search.stats);
    let bad = times_zero_counterexample(a)?;
    report.hypothesis(
        "X×0 ≅ 0 for all X",
        bad.is_none(),
        match bad {
            None => "checked every X".to_string(),
            Some(x) => format!("fails at X = {}", a.name_of(x)),
        },
    );
    let (distributive, evidence) = distributive_now(a)?;
    report.conclusion("distributive", distributive, evidence);
    if let Some(psi) = search.psi.found() {
        let (mismatch, not_invertible) = lemma_decomposition(a, &search.functors, &psi.components)?;
        // The factorisation through δ only uses naturality of ψ.
        if let Some((x, y, z)) = mismatch {
            report.anomalies.push(format!(
                "ψ ≠ δ ∘ (u + v) at ({}) although ψ is natural",
                names(a, &[x, y, z])
            ));
        }
        if report.hypotheses_hold() {
            report.conclusion(
                "ψ = δ ∘ (u + v)",
                mismatch.is_none(),
                "checked at every triple",
            );
            report.conclusion(
                "u and v invertible",
                not_invertible.is_none(),
                match not_invertible {
                    None => "every restriction invertible".to_string(),
                    Some((x, y, left)) => format!(
                        "{} at ({}) not invertible",
                        if left { "u" } else { "v" },
                        names(a, &[x, y])
                    ),
                },
            );
        }
    }
    contrapositive_if_decided(&mut report, &search.psi, distributive);
    Ok(report.finalize())
}

/// From a natural ψ, `0×0` is initial and `0` is subterminal.
pub fn verify_zero_subterminal(a: &Analysis) -> Result<TheoremReport> {
    let search = match a.delta_search()? {
        Covered::Partial(gaps) => return Ok(not_covered(TheoremId::Prop2, &a.name, gaps)),
        Covered::Total(s) => s,
    };
    let (c, cache) = (&*a.category, &a.cache);
    let mut report = TheoremReport::new(TheoremId::Prop2, &a.name);
    psi_hypothesis(&mut report, "ψ exists", &search.psi, &search.stats);
    let zero = cache.require_initial()?;
    let square = cache.require_product(zero, zero)?;
    let initial = c.objects().all(|y| c.hom_size(square.apex, y) == 1);
    report.conclusion("0×0 initial", initial, format!("0×0 = {}", a.name_of(square.apex)));
    let sub = is_subterminal(c, zero);
    report.conclusion("0 subterminal", sub, format!("0 = {}", a.name_of(zero)));
    if report.hypotheses_hold() {
        // With 0×0 initial the two projections agree, so the diagonal is
        // inverse to either of them.
        let diagonal = pair_into_product(c, square, c.identity(zero), c.identity(zero))?;
        report.conclusion(
            "diagonal 0 → 0×0 invertible",
            c.is_invertible(diagonal).is_some(),
            "proof step",
        );
    }
    contrapositive_if_decided(&mut report, &search.psi, initial && sub);
    Ok(report.finalize())
}

/// A pointed category with a natural ψ is trivial.
pub fn verify_pointed_trivial(a: &Analysis) -> Result<TheoremReport> {
    let search = match a.delta_search()? {
        Covered::Partial(gaps) => return Ok(not_covered(TheoremId::Prop3, &a.name, gaps)),
        Covered::Total(s) => s,
    };
    let (c, cache) = (&*a.category, &a.cache);
    let mut report = TheoremReport::new(TheoremId::Prop3, &a.name);
    let zero = zero_structure(c);
    report.hypothesis(
        "pointed",
        zero.is_some(),
        match &zero {
            Some(z) => format!("zero object {}", a.name_of(z.zero)),
            None => "initial and terminal objects differ".into(),
        },
    );
    psi_hypothesis(&mut report, "ψ exists", &search.psi, &search.stats);
    let trivial = c.is_trivial();
    report.conclusion("trivial", trivial, format!("{} object(s)", c.object_count()));
    if report.hypotheses_hold() {
        let mut bad = None;
        for x in c.objects() {
            let w = cache.require_coproduct(x, x)?;
            let codiagonal = copair_from_coproduct(c, w, c.identity(x), c.identity(x))?;
            if c.is_invertible(codiagonal).is_none() {
                bad = Some(x);
                break;
            }
        }
        report.conclusion(
            "codiagonal X+X → X invertible",
            bad.is_none(),
            match bad {
                None => "every X".to_string(),
                Some(x) => format!("fails at X = {}", a.name_of(x)),
            },
        );
    }
    contrapositive_if_decided(&mut report, &search.psi, trivial);
    Ok(report.finalize())
}

/// A natural family of isomorphisms `X×Y + X×Z ≅ X×(Y+Z)` forces
/// distributivity. The proof is replayed through the slice over `0`.
pub fn verify_distributivity_theorem(a: &Analysis) -> Result<TheoremReport> {
    let search = match a.delta_search()? {
        Covered::Partial(gaps) => return Ok(not_covered(TheoremId::Distributive, &a.name, gaps)),
        Covered::Total(s) => s,
    };
    let c = &a.category;
    let mut report = TheoremReport::new(TheoremId::Distributive, &a.name);
    psi_hypothesis(&mut report, "ψ exists", &search.psi, &search.stats);
    let (distributive, evidence) = distributive_now(a)?;
    report.conclusion("distributive", distributive, evidence);
    if report.hypotheses_hold() {
        let zero = a.cache.require_initial()?;
        report.conclusion("0 subterminal", is_subterminal(c, zero), "proof step");
        let (slice, projection) = slice_category(c, zero)?;
        report.conclusion(
            "projection from the slice over 0 fully faithful",
            is_fully_faithful(&projection),
            format!("slice has {} object(s)", slice.object_count()),
        );
        report.conclusion("slice over 0 trivial", slice.is_trivial(), "proof step");
        let bad = times_zero_counterexample(a)?;
        report.conclusion(
            "X×0 ≅ 0 for all X",
            bad.is_none(),
            match bad {
                None => "every X".to_string(),
                Some(x) => format!("fails at X = {}", a.name_of(x)),
            },
        );
    }
    contrapositive_if_decided(&mut report, &search.psi, distributive);
    Ok(report.finalize())
}

/// `ψ_{Y,Z} = α ∘ (u_Y + v_Z)` with `u_Y = pr1 ∘ ψ_{Y,0} ∘ i` and
/// `v_Z = pr2 ∘ ψ_{0,Z} ∘ j`. Returns the first failing pair.
fn additive_decomposition(
    a: &Analysis,
    pt: &PlusTimesFunctors,
    psi: &[Mor],
    zero: &ZeroStructure,
) -> Result<Option<(Obj, Obj)>> {
    let (c, cache) = (&*a.category, &a.cache);
    let n = c.object_count();
    let z0 = zero.zero;
    let u = (0..n)
        .map(|y| {
            let comp = psi[pt.square.pair(y, z0)];
            let i = cache.require_coproduct(y, z0)?.injections.0;
            let pr1 = cache.require_product(y, z0)?.projections.0;
            c.compose_path(&[i, comp, pr1])
        })
        .collect::<Result<Vec<_>>>()?;
    let v = (0..n)
        .map(|z| {
            let comp = psi[pt.square.pair(z0, z)];
            let j = cache.require_coproduct(z0, z)?.injections.1;
            let pr2 = cache.require_product(z0, z)?.projections.1;
            c.compose_path(&[j, comp, pr2])
        })
        .collect::<Result<Vec<_>>>()?;
    for y in 0..n {
        for z in 0..n {
            let alpha = canonical_alpha(c, cache, zero, y, z)?;
            let sum = coproduct_map(c, cache, u[y], v[z])?;
            if c.compose(alpha, sum)? != psi[pt.square.pair(y, z)] {
                return Ok(Some((y, z)));
            }
        }
    }
    Ok(None)
}

/// A natural family of isomorphisms `Y+Z ≅ Y×Z` forces a zero object and
/// invertibility of every canonical α.
pub fn verify_additivity_theorem(a: &Analysis) -> Result<TheoremReport> {
    let search = match a.plus_times_search()? {
        Covered::Partial(gaps) => return Ok(not_covered(TheoremId::Additive, &a.name, gaps)),
        Covered::Total(s) => s,
    };
    let (c, cache) = (&*a.category, &a.cache);
    let mut report = TheoremReport::new(TheoremId::Additive, &a.name);
    if cache.initial.is_none() || cache.terminal.is_none() {
        report.coverage.push("initial or terminal object missing".into());
    }
    psi_hypothesis(&mut report, "ψ exists", &search.psi, &search.stats);
    if !report.coverage.is_empty() {
        return Ok(report.finalize());
    }
    let zero = zero_structure(c);
    report.conclusion("pointed", zero.is_some(), yes_no(zero.is_some()));
    let semi = is_semi_additive(c, cache, Scope::All)?;
    let semi_evidence = match (&semi.reason, &semi.first_failure) {
        (Some(r), _) => r.clone(),
        (None, Some(p)) => format!("α at ({}) not invertible", names(a, p)),
        (None, None) => format!("all {} α components invertible", semi.checked),
    };
    report.conclusion("semi-additive", semi.holds, semi_evidence);
    if let (Some(psi), true) = (search.psi.found(), report.hypotheses_hold()) {
        let (initial, terminal) = (cache.require_initial()?, cache.require_terminal()?);
        let to_terminal = c.hom(initial, terminal)[0];
        let i = cache.require_coproduct(terminal, initial)?.injections.0;
        let pr2 = cache.require_product(terminal, initial)?.projections.1;
        let back = c.compose_path(&[i, psi.components[search.functors.square.pair(terminal, initial)], pr2])?;
        let inverse = c.composite(back, to_terminal) == Some(c.identity(initial))
            && c.composite(to_terminal, back) == Some(c.identity(terminal));
        report.conclusion("pr2 ∘ ψ_{1,0} ∘ i inverts 0 → 1", inverse, "proof step");
        if let Some(zero) = &zero {
            let bad = additive_decomposition(a, &search.functors, &psi.components, zero)?;
            report.conclusion(
                "ψ = α ∘ (u + v)",
                bad.is_none(),
                match bad {
                    None => "checked at every pair".to_string(),
                    Some(p) => format!("fails at ({})", names(a, &[p.0, p.1])),
                },
            );
        }
    }
    contrapositive_if_decided(&mut report, &search.psi, zero.is_some() && semi.holds);
    Ok(report.finalize())
}

fn strength_instance(
    setting: &StrengthSetting,
    f: &Arc<MonoidalFunctorData>,
    subject: String,
    budget: u64,
) -> Result<(TheoremReport, Existence<()>)> {
    let (l, r) = setting.functors(f)?;
    let (found, stats) = find_monoidal_iso(&l, &r, NatCheckMode::Full, budget)?;
    if let Some(psi) = found.found() {
        let mut report = check_strength_theorem(f, psi, setting, NatCheckMode::Full)?;
        report.subject = subject;
        return Ok((report, Existence::Found(())));
    }
    // No ψ: record the remaining hypotheses and the conclusion for the
    // contrapositive.
    let mut report = TheoremReport::new(TheoremId::Monoidal, subject);
    let b = &*f.target.base;
    report.hypothesis("source braided monoidal", setting.source_report.ok, "coherence scan");
    report.hypothesis("target braided monoidal", setting.target_report.ok, "coherence scan");
    let lax = f.validate()?;
    report.hypothesis("F lax monoidal", lax.ok, if lax.ok { "ok" } else { "coherence failure" });
    report.hypothesis(
        "F normal",
        b.is_invertible(f.phi0).is_some(),
        format!("φ0 = {}", b.morphism_name(f.phi0)),
    );
    let plain: Existence = match found {
        Existence::Absent => Existence::Absent,
        _ => Existence::Unknown,
    };
    psi_hypothesis(&mut report, "monoidal natural iso ψ exists", &plain, &stats);
    let n = f.source.object_count();
    let strong = (0..n * n).all(|k| b.is_invertible(f.phi[k]).is_some());
    report.conclusion("φ invertible", strong, yes_no(strong));
    contrapositive_if_decided(&mut report, &plain, strong);
    let outcome = if plain.is_absent() { Existence::Absent } else { Existence::Unknown };
    Ok((report.finalize(), outcome))
}

/// The strength theorem on `X × −` over the cocartesian structure for every
/// `X`, on the identity functor, and, when the category is pointed, on the
/// identity from the cartesian to the cocartesian structure with `φ = α`.
pub fn verify_monoidal(a: &Analysis) -> Result<Vec<TheoremReport>> {
    let setting = match a.cocartesian_setting()? {
        Covered::Partial(gaps) => return Ok(vec![not_covered(TheoremId::Monoidal, &a.name, gaps)]),
        Covered::Total(s) => s,
    };
    let (c, cache) = (&a.category, &a.cache);
    let cocart = setting.source.clone();
    let mut reports = Vec::new();
    let mut all_found_normal = true;
    let mut some_absent = false;
    for x in c.objects() {
        let f = Arc::new(product_lax_functor(&cocart, cache, x)?);
        let subject = format!("{}: {} × −", a.name, a.name_of(x));
        let (report, found) = strength_instance(&setting, &f, subject, a.budget)?;
        let normal = c.is_invertible(f.phi0).is_some();
        all_found_normal &= normal && found.found().is_some();
        some_absent |= found.is_absent();
        reports.push(report);
    }
    let id = Arc::new(MonoidalFunctorData::identity(&cocart));
    reports.push(strength_instance(&setting, &id, format!("{}: identity", a.name), a.budget)?.0);

    if let Some(zero) = zero_structure(c) {
        let cart = Arc::new(cartesian_monoidal(c, cache)?);
        let mixed = StrengthSetting::new(&cart, &cocart)?;
        let n = c.object_count();
        let phi = (0..n * n)
            .map(|k| canonical_alpha(c, cache, &zero, k / n, k % n))
            .collect::<Result<Vec<_>>>()?;
        let phi0 = c.hom(cocart.unit, cart.unit)[0];
        let f = Arc::new(MonoidalFunctorData {
            functor: Arc::new(FunctorData::identity(c)),
            source: cart,
            target: cocart.clone(),
            phi,
            phi0,
        });
        let subject = format!("{}: identity (×, 1) → (+, 0) with φ = α", a.name);
        reports.push(strength_instance(&mixed, &f, subject, a.budget)?.0);
    }

    let (distributive, _) = distributive_now(a)?;
    if all_found_normal && !distributive {
        reports[0]
            .anomalies
            .push("every X × − is normal with a monoidal ψ, yet δ is not invertible".into());
    }
    // In a thin category every diagram commutes, so δ itself is a monoidal
    // ψ whenever it is invertible.
    if distributive && some_absent && thin(c) {
        reports[0]
            .anomalies
            .push("distributive thin category, yet some X × − has no monoidal ψ".into());
    }
    Ok(reports)
}

fn preservation_instance(
    a: &Analysis,
    setting: &StrengthSetting,
    f: &Arc<FunctorData>,
    subject: String,
) -> Result<TheoremReport> {
    let cache = &a.cache;
    let cf = coproduct_comparison_functors(f, cache, cache)?;
    let (psi, stats) = iso_search(&cf.sum_of_images, &cf.image_of_sum, a.budget)?;
    if let Some(psi) = psi.found() {
        let mut report = check_coproduct_preservation(f, psi, cache, cache, Some(setting))?;
        report.subject = subject;
        return Ok(report);
    }
    let c = &*a.category;
    let mut report = TheoremReport::new(TheoremId::CaccamoWinskel, subject);
    let image = f.obj(cache.require_initial()?);
    let preserves = c.objects().all(|y| c.hom_size(image, y) == 1);
    report.hypothesis("F preserves the initial object", preserves, format!("F(0) = {}", a.name_of(image)));
    psi_hypothesis(&mut report, "ψ : Fx + Fy ≅ F(x + y) exists", &psi, &stats);
    let n = c.object_count();
    let bad = (0..n * n)
        .map(|k| coproduct_comparison(f, cache, cache, k / n, k % n))
        .collect::<Result<Vec<_>>>()?
        .iter()
        .position(|&m| c.is_invertible(m).is_none());
    report.conclusion(
        "F preserves binary coproducts",
        bad.is_none(),
        match bad {
            None => "all comparison maps invertible".to_string(),
            Some(k) => format!("comparison at ({}) not invertible", names(a, &[k / n, k % n])),
        },
    );
    contrapositive_if_decided(&mut report, &psi, bad.is_none());
    Ok(report.finalize())
}

/// Coproduct preservation for `X × −` for every `X` and for the identity.
/// The comparison map of `X × −` is cross-checked against δ.
pub fn verify_caccamo_winskel(a: &Analysis) -> Result<Vec<TheoremReport>> {
    let setting = match a.cocartesian_setting()? {
        Covered::Partial(gaps) => return Ok(vec![not_covered(TheoremId::CaccamoWinskel, &a.name, gaps)]),
        Covered::Total(s) => s,
    };
    let (c, cache) = (&a.category, &a.cache);
    let mut reports = Vec::new();
    for x in c.objects() {
        let f = product_lax_functor(&setting.source, cache, x)?.functor;
        let mut report = preservation_instance(a, &setting, &f, format!("{}: {} × −", a.name, a.name_of(x)))?;
        let n = c.object_count();
        for y in 0..n {
            for z in 0..n {
                let kappa = coproduct_comparison(&f, cache, cache, y, z)?;
                if kappa != canonical_delta(c, cache, x, y, z)? {
                    report.anomalies.push(format!(
                        "comparison map differs from δ at ({})",
                        names(a, &[x, y, z])
                    ));
                }
            }
        }
        reports.push(report);
    }
    let id = Arc::new(FunctorData::identity(c));
    reports.push(preservation_instance(a, &setting, &id, format!("{}: identity", a.name))?);
    Ok(reports)
}

/// Runs one verifier.
pub fn verify(a: &Analysis, theorem: TheoremId) -> Result<Vec<TheoremReport>> {
    Ok(match theorem {
        TheoremId::Lemma1 => vec![verify_lemma_pres_plus(a)?],
        TheoremId::Prop2 => vec![verify_zero_subterminal(a)?],
        TheoremId::Prop3 => vec![verify_pointed_trivial(a)?],
        TheoremId::Distributive => vec![verify_distributivity_theorem(a)?],
        TheoremId::Additive => vec![verify_additivity_theorem(a)?],
        TheoremId::Monoidal => verify_monoidal(a)?,
        TheoremId::CaccamoWinskel => verify_caccamo_winskel(a)?,
    })
}

/// Runs every verifier in a fixed order.
pub fn verify_all(a: &Analysis) -> Result<Vec<TheoremReport>> {
    let mut out = Vec::new();
    for t in TheoremId::ALL {
        out.extend(verify(a, t)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::generators::*;
    use crate::report::Verdict;

    fn analysis(name: &str, c: FinCategory) -> Analysis {
        Analysis::with_default_budget(name, c)
    }

    #[test]
    fn lemma_examples() {
        let r = verify_lemma_pres_plus(&analysis("B2", gen_boolean_algebra(2).unwrap())).unwrap();
        assert_eq!(r.verdict, Verdict::Consistent, "{r}");
        assert!(r.anomalies.is_empty());
        let r = verify_lemma_pres_plus(&analysis("M3", gen_m3())).unwrap();
        assert_eq!(r.verdict, Verdict::NotApplicable);
        assert!(!r.hypotheses[0].satisfied);
        assert_eq!(r.contrapositive, Some(true));
        let r = verify_lemma_pres_plus(&analysis("1", gen_terminal())).unwrap();
        assert_eq!(r.verdict, Verdict::Consistent);
    }

    #[test]
    fn zero_subterminal_examples() {
        let r = verify_zero_subterminal(&analysis("chain3", gen_chain(3).unwrap())).unwrap();
        assert_eq!(r.verdict, Verdict::Consistent, "{r}");
        let r = verify_zero_subterminal(&analysis("M3", gen_m3())).unwrap();
        assert_eq!(r.verdict, Verdict::NotApplicable);
    }

    #[test]
    fn pointed_trivial_examples() {
        let r = verify_pointed_trivial(&analysis("1", gen_terminal())).unwrap();
        assert_eq!(r.verdict, Verdict::Consistent, "{r}");
        assert!(r.conclusions.iter().any(|c| c.name.starts_with("codiagonal")));
        let r = verify_pointed_trivial(&analysis("mat2", gen_bool_matrix(2).unwrap())).unwrap();
        assert_eq!(r.verdict, Verdict::NotApplicable);
        assert!(!r.coverage.is_empty());
        // A chain has ψ but is not pointed.
        let r = verify_pointed_trivial(&analysis("chain2", gen_chain(2).unwrap())).unwrap();
        assert_eq!(r.verdict, Verdict::NotApplicable);
        assert_eq!(r.contrapositive, Some(true));
    }

    #[test]
    fn distributivity_examples() {
        let a = analysis("B2", gen_boolean_algebra(2).unwrap());
        let r = verify_distributivity_theorem(&a).unwrap();
        assert_eq!(r.verdict, Verdict::Consistent, "{r}");
        let Covered::Total(s) = a.delta_search().unwrap() else { panic!() };
        let psi = s.psi.found().unwrap();
        let c = &a.category;
        assert!(psi.components.iter().all(|&m| c.is_identity(m)));
        for (name, cat) in [("M3", gen_m3()), ("N5", gen_n5())] {
            let r = verify_distributivity_theorem(&analysis(name, cat)).unwrap();
            assert_eq!(r.verdict, Verdict::NotApplicable);
            assert_eq!(r.contrapositive, Some(true), "{r}");
        }
    }

    #[test]
    fn additivity_examples() {
        let r = verify_additivity_theorem(&analysis("1", gen_terminal())).unwrap();
        assert_eq!(r.verdict, Verdict::Consistent, "{r}");
        for (name, cat) in [("chain2", gen_chain(2).unwrap()), ("M3", gen_m3())] {
            let r = verify_additivity_theorem(&analysis(name, cat)).unwrap();
            assert_eq!(r.verdict, Verdict::NotApplicable);
            assert_eq!(r.contrapositive, Some(true), "{r}");
        }
    }

    #[test]
    fn monoidal_and_preservation_on_small_lattices() {
        for (name, cat) in [("B2", gen_boolean_algebra(2).unwrap()), ("M3", gen_m3()), ("1", gen_terminal())] {
            let a = analysis(name, cat);
            for r in verify_monoidal(&a).unwrap().iter().chain(&verify_caccamo_winskel(&a).unwrap()) {
                assert!(r.is_sound(), "{r}");
            }
        }
        let a = analysis("B2", gen_boolean_algebra(2).unwrap());
        let reports = verify_monoidal(&a).unwrap();
        assert!(reports.iter().all(|r| r.verdict == Verdict::Consistent), "{reports:?}");
        let a = analysis("1", gen_terminal());
        assert!(verify_monoidal(&a).unwrap().iter().any(|r| r.subject.contains("φ = α")));
    }

    #[test]
    fn partial_coverage_is_not_applicable() {
        let a = analysis("mat2", gen_bool_matrix(2).unwrap());
        for r in verify_all(&a).unwrap() {
            assert_eq!(r.verdict, Verdict::NotApplicable, "{r}");
            assert!(!r.coverage.is_empty());
        }
    }
}
