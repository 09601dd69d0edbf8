//! Terminal and initial objects, binary products and coproducts found by
//! checking their universal properties, zero objects, and the canonical
//! comparison maps
//!
//! ```text
//! δ : X×Y + X×Z → X×(Y+Z)        α : Y+Z → Y×Z
//! ```
//!
//! Witness choice is deterministic: the least apex index, then the
//! lexicographically least pair of legs. Uniqueness of mediating morphisms is
//! checked against every object of the category when a witness is built.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::category::{FinCategory, Mor, Obj};
use crate::constructions::{product_category, Product};
use crate::error::{FinCatError, Result};
use crate::functor::{FunctorData, NatTransformData};

/// The category or its opposite, so that product and coproduct searches share
/// one implementation.
#[derive(Clone, Copy)]
struct View<'a> {
    c: &'a FinCategory,
    dual: bool,
}

impl<'a> View<'a> {
    fn hom(&self, a: Obj, b: Obj) -> &'a [Mor] {
        if self.dual {
            self.c.hom(b, a)
        } else {
            self.c.hom(a, b)
        }
    }

    fn comp(&self, g: Mor, f: Mor) -> Mor {
        let r = if self.dual {
            self.c.composite(f, g)
        } else {
            self.c.composite(g, f)
        };
        r.expect("composable in view")
    }
}

/// Raw limit cone: `legs.0 : apex → x`, `legs.1 : apex → y` in the view, and
/// for every test object `a` the table of mediating maps indexed by
/// `pos(f) · |hom(a, y)| + pos(g)`.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Cone {
    apex: Obj,
    legs: (Mor, Mor),
    table: Vec<Vec<Mor>>,
}

fn cone_tables(v: View<'_>, x: Obj, y: Obj, apex: Obj, legs: (Mor, Mor)) -> Option<Vec<Vec<Mor>>> {
    let c = v.c;
    let mut tables = Vec::with_capacity(c.object_count());
    for a in c.objects() {
        let ny = v.hom(a, y).len();
        let size = v.hom(a, x).len() * ny;
        let mut table = vec![usize::MAX; size];
        for &m in v.hom(a, apex) {
            let f = v.comp(legs.0, m);
            let g = v.comp(legs.1, m);
            let slot = c.hom_position(f) * ny + c.hom_position(g);
            if table[slot] != usize::MAX {
                return None;
            }
            table[slot] = m;
        }
        tables.push(table);
    }
    Some(tables)
}

fn cones(v: View<'_>, x: Obj, y: Obj, first_only: bool) -> Vec<Cone> {
    let c = v.c;
    let mut found = Vec::new();
    for apex in c.objects() {
        // Mediating maps biject with cones exactly when the counts agree and
        // the comparison map is injective.
        let counts_match = c
            .objects()
            .all(|a| v.hom(a, apex).len() == v.hom(a, x).len() * v.hom(a, y).len());
        if !counts_match {
            continue;
        }
        for &p in v.hom(apex, x) {
            for &q in v.hom(apex, y) {
                if let Some(table) = cone_tables(v, x, y, apex, (p, q)) {
                    found.push(Cone {
                        apex,
                        legs: (p, q),
                        table,
                    });
                    if first_only {
                        return found;
                    }
                }
            }
        }
    }
    found
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductWitness {
    pub factors: (Obj, Obj),
    pub apex: Obj,
    pub projections: (Mor, Mor),
    pairing: Vec<Vec<Mor>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoproductWitness {
    pub summands: (Obj, Obj),
    pub apex: Obj,
    pub injections: (Mor, Mor),
    copairing: Vec<Vec<Mor>>,
}

impl ProductWitness {
    fn from_cone(x: Obj, y: Obj, cone: Cone) -> Self {
        ProductWitness {
            factors: (x, y),
            apex: cone.apex,
            projections: cone.legs,
            pairing: cone.table,
        }
    }
}

impl CoproductWitness {
    fn from_cone(x: Obj, y: Obj, cone: Cone) -> Self {
        CoproductWitness {
            summands: (x, y),
            apex: cone.apex,
            injections: cone.legs,
            copairing: cone.table,
        }
    }
}

fn end_search(c: &FinCategory, into: bool) -> Option<Obj> {
    c.objects().find(|&t| {
        c.objects().all(|x| {
            let n = if into { c.hom_size(x, t) } else { c.hom_size(t, x) };
            n == 1
        })
    })
}

/// The least-index object with exactly one morphism from every object.
pub fn find_terminal(c: &FinCategory) -> Option<Obj> {
    end_search(c, true)
}

/// The least-index object with exactly one morphism to every object.
pub fn find_initial(c: &FinCategory) -> Option<Obj> {
    end_search(c, false)
}

pub fn find_binary_product(c: &FinCategory, x: Obj, y: Obj) -> Option<ProductWitness> {
    cones(View { c, dual: false }, x, y, true)
        .pop()
        .map(|cone| ProductWitness::from_cone(x, y, cone))
}

pub fn find_binary_coproduct(c: &FinCategory, x: Obj, y: Obj) -> Option<CoproductWitness> {
    cones(View { c, dual: true }, x, y, true)
        .pop()
        .map(|cone| CoproductWitness::from_cone(x, y, cone))
}

/// Every product cone over `(x, y)`, in choice order.
pub fn binary_product_witnesses(c: &FinCategory, x: Obj, y: Obj) -> Vec<ProductWitness> {
    cones(View { c, dual: false }, x, y, false)
        .into_iter()
        .map(|cone| ProductWitness::from_cone(x, y, cone))
        .collect()
}

/// Every coproduct cocone under `(x, y)`, in choice order.
pub fn binary_coproduct_witnesses(c: &FinCategory, x: Obj, y: Obj) -> Vec<CoproductWitness> {
    cones(View { c, dual: true }, x, y, false)
        .into_iter()
        .map(|cone| CoproductWitness::from_cone(x, y, cone))
        .collect()
}

fn mediate(
    c: &FinCategory,
    dual: bool,
    table: &[Vec<Mor>],
    apex: Obj,
    ends: (Obj, Obj),
    legs: (Mor, Mor),
    f: Mor,
    g: Mor,
) -> Result<Mor> {
    c.check_mor(f)?;
    c.check_mor(g)?;
    let v = View { c, dual };
    let (a, fx, ga, gy) = if dual {
        (c.dst(f), c.src(f), c.dst(g), c.src(g))
    } else {
        (c.src(f), c.dst(f), c.src(g), c.dst(g))
    };
    if a != ga || fx != ends.0 || gy != ends.1 {
        return Err(FinCatError::Invalid(format!(
            "({f}, {g}) is not a cone over ({}, {})",
            ends.0, ends.1
        )));
    }
    let ny = v.hom(a, ends.1).len();
    let m = table
        .get(a)
        .and_then(|t| t.get(c.hom_position(f) * ny + c.hom_position(g)))
        .copied()
        .filter(|&m| m != usize::MAX)
        .ok_or(FinCatError::CorruptWitness { f, g })?;
    let ok = v.hom(a, apex).contains(&m) && v.comp(legs.0, m) == f && v.comp(legs.1, m) == g;
    if ok {
        Ok(m)
    } else {
        Err(FinCatError::CorruptWitness { f, g })
    }
}

/// `⟨f, g⟩ : A → X×Y` for `f : A → X`, `g : A → Y`.
pub fn pair_into_product(c: &FinCategory, w: &ProductWitness, f: Mor, g: Mor) -> Result<Mor> {
    mediate(c, false, &w.pairing, w.apex, w.factors, w.projections, f, g)
}

/// `[f, g] : X+Y → A` for `f : X → A`, `g : Y → A`.
pub fn copair_from_coproduct(c: &FinCategory, w: &CoproductWitness, f: Mor, g: Mor) -> Result<Mor> {
    mediate(c, true, &w.copairing, w.apex, w.summands, w.injections, f, g)
}

/// The chosen limits of a category, computed once.
#[derive(Debug, Clone)]
pub struct LimitCache {
    n: usize,
    pub terminal: Option<Obj>,
    pub initial: Option<Obj>,
    products: Vec<Option<ProductWitness>>,
    coproducts: Vec<Option<CoproductWitness>>,
}

impl LimitCache {
    pub fn build(c: &FinCategory) -> LimitCache {
        let n = c.object_count();
        let products = (0..n * n)
            .into_par_iter()
            .map(|k| find_binary_product(c, k / n, k % n))
            .collect();
        let coproducts = (0..n * n)
            .into_par_iter()
            .map(|k| find_binary_coproduct(c, k / n, k % n))
            .collect();
        LimitCache {
            n,
            terminal: find_terminal(c),
            initial: find_initial(c),
            products,
            coproducts,
        }
    }

    pub fn product(&self, x: Obj, y: Obj) -> Option<&ProductWitness> {
        self.products.get(x * self.n + y)?.as_ref()
    }

    pub fn coproduct(&self, x: Obj, y: Obj) -> Option<&CoproductWitness> {
        self.coproducts.get(x * self.n + y)?.as_ref()
    }

    pub fn require_product(&self, x: Obj, y: Obj) -> Result<&ProductWitness> {
        self.product(x, y)
            .ok_or_else(|| FinCatError::LimitAbsent(format!("product of {x} and {y}")))
    }

    pub fn require_coproduct(&self, x: Obj, y: Obj) -> Result<&CoproductWitness> {
        self.coproduct(x, y)
            .ok_or_else(|| FinCatError::LimitAbsent(format!("coproduct of {x} and {y}")))
    }

    pub fn require_terminal(&self) -> Result<Obj> {
        self.terminal
            .ok_or_else(|| FinCatError::LimitAbsent("terminal object".into()))
    }

    pub fn require_initial(&self) -> Result<Obj> {
        self.initial
            .ok_or_else(|| FinCatError::LimitAbsent("initial object".into()))
    }

    pub fn missing_products(&self) -> Vec<(Obj, Obj)> {
        self.missing(|x, y| self.product(x, y).is_some())
    }

    pub fn missing_coproducts(&self) -> Vec<(Obj, Obj)> {
        self.missing(|x, y| self.coproduct(x, y).is_some())
    }

    fn missing(&self, has: impl Fn(Obj, Obj) -> bool) -> Vec<(Obj, Obj)> {
        let n = self.n;
        (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .filter(|&(x, y)| !has(x, y))
            .collect()
    }

    /// Finite products and coproducts all exist.
    pub fn is_total(&self) -> bool {
        self.terminal.is_some()
            && self.initial.is_some()
            && self.products.iter().all(Option::is_some)
            && self.coproducts.iter().all(Option::is_some)
    }

    /// Human-readable list of what is missing, empty when total.
    pub fn gaps(&self) -> Vec<String> {
        let mut gaps = Vec::new();
        if self.terminal.is_none() {
            gaps.push("no terminal object".to_string());
        }
        if self.initial.is_none() {
            gaps.push("no initial object".to_string());
        }
        let p = self.missing_products();
        if !p.is_empty() {
            gaps.push(format!("{} binary products missing, e.g. {:?}", p.len(), p[0]));
        }
        let q = self.missing_coproducts();
        if !q.is_empty() {
            gaps.push(format!("{} binary coproducts missing, e.g. {:?}", q.len(), q[0]));
        }
        gaps
    }
}

/// `f × g : X×Y → X'×Y'`, i.e. `⟨f ∘ pr1, g ∘ pr2⟩`, between chosen products.
pub fn product_map(c: &FinCategory, cache: &LimitCache, f: Mor, g: Mor) -> Result<Mor> {
    let w = cache.require_product(c.src(f), c.src(g))?;
    let w2 = cache.require_product(c.dst(f), c.dst(g))?;
    let a = c.compose(f, w.projections.0)?;
    let b = c.compose(g, w.projections.1)?;
    pair_into_product(c, w2, a, b)
}

/// `f + g : X+Y → X'+Y'`, i.e. `[i' ∘ f, j' ∘ g]`, between chosen coproducts.
pub fn coproduct_map(c: &FinCategory, cache: &LimitCache, f: Mor, g: Mor) -> Result<Mor> {
    let w = cache.require_coproduct(c.src(f), c.src(g))?;
    let w2 = cache.require_coproduct(c.dst(f), c.dst(g))?;
    let a = c.compose(w2.injections.0, f)?;
    let b = c.compose(w2.injections.1, g)?;
    copair_from_coproduct(c, w, a, b)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeroStructure {
    pub zero: Obj,
    n: usize,
    zero_maps: Vec<Mor>,
}

impl ZeroStructure {
    /// `0_{y,z}`, the morphism `y → z` factoring through the zero object.
    pub fn zero_morphism(&self, y: Obj, z: Obj) -> Mor {
        self.zero_maps[y * self.n + z]
    }
}

/// Present iff the initial and terminal objects are isomorphic; the zero
/// object is the chosen initial object.
pub fn zero_structure(c: &FinCategory) -> Option<ZeroStructure> {
    let i = find_initial(c)?;
    let t = find_terminal(c)?;
    if c.hom_size(t, i) == 0 {
        return None;
    }
    let n = c.object_count();
    let mut zero_maps = Vec::with_capacity(n * n);
    for y in c.objects() {
        let to_zero = c.hom(y, i)[0];
        for z in c.objects() {
            let from_zero = c.hom(i, z)[0];
            zero_maps.push(c.composite(from_zero, to_zero).expect("composable through zero"));
        }
    }
    Some(ZeroStructure {
        zero: i,
        n,
        zero_maps,
    })
}

/// The five chosen witnesses that `δ_{x,y,z}` is built from.
struct DeltaWitnesses<'a> {
    xy: &'a ProductWitness,
    xz: &'a ProductWitness,
    yz: &'a CoproductWitness,
    x_sum: &'a ProductWitness,
    sum_of_products: &'a CoproductWitness,
}

fn delta_witnesses(cache: &LimitCache, x: Obj, y: Obj, z: Obj) -> Result<DeltaWitnesses<'_>> {
    let xy = cache.require_product(x, y)?;
    let xz = cache.require_product(x, z)?;
    let yz = cache.require_coproduct(y, z)?;
    let x_sum = cache.require_product(x, yz.apex)?;
    let sum_of_products = cache.require_coproduct(xy.apex, xz.apex)?;
    Ok(DeltaWitnesses {
        xy,
        xz,
        yz,
        x_sum,
        sum_of_products,
    })
}

/// `δ_{x,y,z} = [X×i, X×j]` where `X×i = ⟨pr1, i ∘ pr2⟩`.
pub fn canonical_delta(c: &FinCategory, cache: &LimitCache, x: Obj, y: Obj, z: Obj) -> Result<Mor> {
    let w = delta_witnesses(cache, x, y, z)?;
    let (i, j) = w.yz.injections;
    let x_i = pair_into_product(c, w.x_sum, w.xy.projections.0, c.compose(i, w.xy.projections.1)?)?;
    let x_j = pair_into_product(c, w.x_sum, w.xz.projections.0, c.compose(j, w.xz.projections.1)?)?;
    copair_from_coproduct(c, w.sum_of_products, x_i, x_j)
}

/// `α_{y,z} = [⟨1, 0⟩, ⟨0, 1⟩] : Y+Z → Y×Z`.
pub fn canonical_alpha(c: &FinCategory, cache: &LimitCache, zero: &ZeroStructure, y: Obj, z: Obj) -> Result<Mor> {
    let sum = cache.require_coproduct(y, z)?;
    let prod = cache.require_product(y, z)?;
    let left = pair_into_product(c, prod, c.identity(y), zero.zero_morphism(y, z))?;
    let right = pair_into_product(c, prod, zero.zero_morphism(z, y), c.identity(z))?;
    copair_from_coproduct(c, sum, left, right)
}

/// True iff every `hom(x, t)` has at most one element.
pub fn is_subterminal(c: &FinCategory, t: Obj) -> bool {
    c.objects().all(|x| c.hom_size(x, t) <= 1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Scope {
    /// Every required limit must exist.
    All,
    /// Check only the instances whose limits exist and report coverage.
    Existing,
}

impl FromStr for Scope {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "all" => Ok(Scope::All),
            "existing" => Ok(Scope::Existing),
            other => Err(format!("unknown scope {other:?} (expected all or existing)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Property {
    Distributive,
    SemiAdditive,
}

/// Outcome of deciding distributivity or semi-additivity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyReport {
    pub property: Property,
    pub scope: Scope,
    /// Every checked comparison map is invertible (and, for semi-additivity,
    /// the category is pointed).
    pub holds: bool,
    pub checked: usize,
    /// Object tuples skipped because some limit is missing.
    pub uncovered: Vec<Vec<Obj>>,
    pub first_failure: Option<Vec<Obj>>,
    pub reason: Option<String>,
}

impl PropertyReport {
    pub fn complete(&self) -> bool {
        self.uncovered.is_empty()
    }
}

impl fmt::Display for PropertyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.property {
            Property::Distributive => "distributive",
            Property::SemiAdditive => "semi-additive",
        };
        let verdict = if self.holds { name.to_string() } else { format!("not {name}") };
        writeln!(f, "{verdict} ({} instance(s) checked)", self.checked)?;
        if let Some(w) = &self.first_failure {
            writeln!(f, "  first failure at {w:?}")?;
        }
        if let Some(r) = &self.reason {
            writeln!(f, "  reason: {r}")?;
        }
        if !self.uncovered.is_empty() {
            writeln!(f, "  uncovered: {:?}", self.uncovered)?;
        }
        Ok(())
    }
}

/// Checks that every `δ_{x,y,z}` is invertible.
pub fn is_distributive(c: &FinCategory, cache: &LimitCache, scope: Scope) -> Result<PropertyReport> {
    let n = c.object_count();
    let mut report = PropertyReport {
        property: Property::Distributive,
        scope,
        holds: true,
        checked: 0,
        uncovered: Vec::new(),
        first_failure: None,
        reason: None,
    };
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if let Err(e) = delta_witnesses(cache, x, y, z) {
                    match scope {
                        Scope::All => return Err(e),
                        Scope::Existing => {
                            report.uncovered.push(vec![x, y, z]);
                            continue;
                        }
                    }
                }
                let d = canonical_delta(c, cache, x, y, z)?;
                report.checked += 1;
                if c.is_invertible(d).is_none() && report.first_failure.is_none() {
                    report.holds = false;
                    report.first_failure = Some(vec![x, y, z]);
                }
            }
        }
    }
    Ok(report)
}

/// Checks that the category is pointed and every `α_{y,z}` is invertible.
pub fn is_semi_additive(c: &FinCategory, cache: &LimitCache, scope: Scope) -> Result<PropertyReport> {
    let n = c.object_count();
    let mut report = PropertyReport {
        property: Property::SemiAdditive,
        scope,
        holds: true,
        checked: 0,
        uncovered: Vec::new(),
        first_failure: None,
        reason: None,
    };
    let mut covered = Vec::new();
    for y in 0..n {
        for z in 0..n {
            match (cache.require_coproduct(y, z), cache.require_product(y, z)) {
                (Ok(_), Ok(_)) => covered.push((y, z)),
                (Err(e), _) | (_, Err(e)) => match scope {
                    Scope::All => return Err(e),
                    Scope::Existing => report.uncovered.push(vec![y, z]),
                },
            }
        }
    }
    let Some(zero) = zero_structure(c) else {
        report.holds = false;
        report.reason = Some("not pointed".into());
        return Ok(report);
    };
    for (y, z) in covered {
        let a = canonical_alpha(c, cache, &zero, y, z)?;
        report.checked += 1;
        if c.is_invertible(a).is_none() && report.first_failure.is_none() {
            report.holds = false;
            report.first_failure = Some(vec![y, z]);
        }
    }
    Ok(report)
}

/// The two sides of `ψ_{X,Y,Z} : X×Y + X×Z → X×(Y+Z)` as functors `C³ → C`.
#[derive(Debug, Clone)]
pub struct DeltaFunctors {
    pub cube: Product,
    pub lhs: Arc<FunctorData>,
    pub rhs: Arc<FunctorData>,
}

/// Lists the triples whose δ witnesses are missing.
pub fn delta_coverage_gaps(c: &FinCategory, cache: &LimitCache) -> Vec<(Obj, Obj, Obj)> {
    let n = c.object_count();
    let mut gaps = Vec::new();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if delta_witnesses(cache, x, y, z).is_err() {
                    gaps.push((x, y, z));
                }
            }
        }
    }
    gaps
}

/// `(X, Y, Z) ↦ X×Y + X×Z` and `(X, Y, Z) ↦ X×(Y+Z)`, with morphisms acting
/// through mediating maps.
pub fn delta_functors(c: &Arc<FinCategory>, cache: &LimitCache) -> Result<DeltaFunctors> {
    if let Some(&(x, y, z)) = delta_coverage_gaps(c, cache).first() {
        let e = delta_witnesses(cache, x, y, z).err().expect("gap");
        return Err(FinCatError::LimitAbsent(format!("{e} (needed for triple ({x}, {y}, {z}))")));
    }
    let cube = product_category(&[c.clone(), c.clone(), c.clone()])?;
    let cc = &cube.category;
    let mut lhs_obj = Vec::with_capacity(cc.object_count());
    let mut rhs_obj = Vec::with_capacity(cc.object_count());
    for t in cc.objects() {
        let p = cube.object_parts(t);
        let w = delta_witnesses(cache, p[0], p[1], p[2])?;
        lhs_obj.push(w.sum_of_products.apex);
        rhs_obj.push(w.x_sum.apex);
    }
    let mut lhs_mor = Vec::with_capacity(cc.morphism_count());
    let mut rhs_mor = Vec::with_capacity(cc.morphism_count());
    for m in cc.morphisms() {
        let p = cube.morphism_parts(m);
        let (f, g, h) = (p[0], p[1], p[2]);
        let target = delta_witnesses(cache, c.dst(f), c.dst(g), c.dst(h))?;
        let fg = product_map(c, cache, f, g)?;
        let fh = product_map(c, cache, f, h)?;
        let (i, j) = target.sum_of_products.injections;
        let source = delta_witnesses(cache, c.src(f), c.src(g), c.src(h))?;
        lhs_mor.push(copair_from_coproduct(
            c,
            source.sum_of_products,
            c.compose(i, fg)?,
            c.compose(j, fh)?,
        )?);
        let gh = coproduct_map(c, cache, g, h)?;
        rhs_mor.push(product_map(c, cache, f, gh)?);
    }
    let lhs = FunctorData::new(cc.clone(), c.clone(), lhs_obj, lhs_mor)?;
    let rhs = FunctorData::new(cc.clone(), c.clone(), rhs_obj, rhs_mor)?;
    Ok(DeltaFunctors {
        cube,
        lhs: Arc::new(lhs),
        rhs: Arc::new(rhs),
    })
}

/// The canonical δ as a transformation between the δ-functors.
pub fn delta_transformation(c: &FinCategory, cache: &LimitCache, d: &DeltaFunctors) -> Result<NatTransformData> {
    let components = d
        .cube
        .category
        .objects()
        .map(|t| {
            let p = d.cube.object_parts(t);
            canonical_delta(c, cache, p[0], p[1], p[2])
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(NatTransformData::new(d.lhs.clone(), d.rhs.clone(), components))
}

/// The two sides of `ψ_{Y,Z} : Y+Z → Y×Z` as functors `C² → C`.
#[derive(Debug, Clone)]
pub struct PlusTimesFunctors {
    pub square: Product,
    pub plus: Arc<FunctorData>,
    pub times: Arc<FunctorData>,
}

pub fn plus_times_functors(c: &Arc<FinCategory>, cache: &LimitCache) -> Result<PlusTimesFunctors> {
    for y in c.objects() {
        for z in c.objects() {
            cache.require_coproduct(y, z)?;
            cache.require_product(y, z)?;
        }
    }
    let square = product_category(&[c.clone(), c.clone()])?;
    let sq = &square.category;
    let plus_obj = sq
        .objects()
        .map(|t| {
            let (y, z) = square.unpair(t);
            cache.require_coproduct(y, z).map(|w| w.apex)
        })
        .collect::<Result<Vec<_>>>()?;
    let times_obj = sq
        .objects()
        .map(|t| {
            let (y, z) = square.unpair(t);
            cache.require_product(y, z).map(|w| w.apex)
        })
        .collect::<Result<Vec<_>>>()?;
    let plus_mor = sq
        .morphisms()
        .map(|m| {
            let (g, h) = square.unpair_mor(m);
            coproduct_map(c, cache, g, h)
        })
        .collect::<Result<Vec<_>>>()?;
    let times_mor = sq
        .morphisms()
        .map(|m| {
            let (g, h) = square.unpair_mor(m);
            product_map(c, cache, g, h)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(PlusTimesFunctors {
        plus: Arc::new(FunctorData::new(sq.clone(), c.clone(), plus_obj, plus_mor)?),
        times: Arc::new(FunctorData::new(sq.clone(), c.clone(), times_obj, times_mor)?),
        square,
    })
}

/// The canonical α as a transformation between the plus/times functors.
pub fn alpha_transformation(
    c: &FinCategory,
    cache: &LimitCache,
    zero: &ZeroStructure,
    pt: &PlusTimesFunctors,
) -> Result<NatTransformData> {
    let components = pt
        .square
        .category
        .objects()
        .map(|t| {
            let (y, z) = pt.square.unpair(t);
            canonical_alpha(c, cache, zero, y, z)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(NatTransformData::new(pt.plus.clone(), pt.times.clone(), components))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::generators::*;

    fn obj(c: &FinCategory, name: &str) -> Obj {
        c.object_by_name(name).unwrap()
    }

    #[test]
    fn terminal_and_initial() {
        let c = gen_chain(3).unwrap();
        assert_eq!(find_terminal(&c), Some(2));
        assert_eq!(find_initial(&c), Some(0));
        let m3 = gen_m3();
        assert_eq!(find_terminal(&m3), Some(obj(&m3, "⊤")));
        assert_eq!(find_initial(&m3), Some(obj(&m3, "⊥")));
        let discrete = poset_category(2, |a, b| a == b, vec!["x".into(), "y".into()]);
        assert_eq!(find_terminal(&discrete), None);
        assert_eq!(find_initial(&discrete), None);
    }

    #[test]
    fn m3_meet_and_join() {
        let m3 = gen_m3();
        let (a, b) = (obj(&m3, "a"), obj(&m3, "b"));
        assert_eq!(find_binary_product(&m3, a, b).unwrap().apex, obj(&m3, "⊥"));
        assert_eq!(find_binary_coproduct(&m3, a, b).unwrap().apex, obj(&m3, "⊤"));
    }

    #[test]
    fn bool_matrix_product_of_ones() {
        let c = gen_bool_matrix(2).unwrap();
        let w = find_binary_product(&c, 1, 1).unwrap();
        assert_eq!(w.apex, 2);
        assert_eq!(c.morphism_name(w.projections.0), "2->1[10]");
        assert_eq!(c.morphism_name(w.projections.1), "2->1[01]");
        let w = find_binary_coproduct(&c, 1, 1).unwrap();
        assert_eq!(w.apex, 2);
        assert_eq!(c.morphism_name(w.injections.0), "1->2[1;0]");
        assert_eq!(c.morphism_name(w.injections.1), "1->2[0;1]");
        // Products needing rank 3 do not exist.
        assert!(find_binary_product(&c, 1, 2).is_none());
        assert!(find_binary_coproduct(&c, 2, 2).is_none());
    }

    #[test]
    fn terminal_category_product() {
        let t = gen_terminal();
        let w = find_binary_product(&t, 0, 0).unwrap();
        assert_eq!(w.apex, 0);
    }

    #[test]
    fn pairing_projections_is_identity() {
        let c = gen_bool_matrix(2).unwrap();
        let w = find_binary_product(&c, 1, 1).unwrap();
        let m = pair_into_product(&c, &w, w.projections.0, w.projections.1).unwrap();
        assert_eq!(m, c.identity(2));
        let w = find_binary_coproduct(&c, 1, 1).unwrap();
        let m = copair_from_coproduct(&c, &w, w.injections.0, w.injections.1).unwrap();
        assert_eq!(m, c.identity(2));
    }

    #[test]
    fn poset_pairing_lands_in_meet() {
        let d = gen_divisor_lattice(12).unwrap();
        let (four, six, two) = (obj(&d, "4"), obj(&d, "6"), obj(&d, "2"));
        let w = find_binary_product(&d, four, six).unwrap();
        assert_eq!(w.apex, two);
        let one = obj(&d, "1");
        let m = pair_into_product(&d, &w, d.hom(one, four)[0], d.hom(one, six)[0]).unwrap();
        assert_eq!(d.ends(m), (one, two));
    }

    #[test]
    fn pairing_rejects_non_cones() {
        let m3 = gen_m3();
        let (a, b) = (obj(&m3, "a"), obj(&m3, "b"));
        let w = find_binary_product(&m3, a, b).unwrap();
        let id_a = m3.identity(a);
        assert!(pair_into_product(&m3, &w, id_a, id_a).is_err());
    }

    #[test]
    fn zero_structures() {
        let c = gen_bool_matrix(2).unwrap();
        let z = zero_structure(&c).unwrap();
        assert_eq!(z.zero, 0);
        assert_eq!(c.morphism_name(z.zero_morphism(2, 2)), "2->2[00;00]");
        assert!(zero_structure(&gen_m3()).is_none());
        assert!(zero_structure(&gen_terminal()).is_some());
    }

    #[test]
    fn delta_on_m3_is_not_invertible() {
        let m3 = gen_m3();
        let cache = LimitCache::build(&m3);
        let (bot, a, b, c) = (obj(&m3, "⊥"), obj(&m3, "a"), obj(&m3, "b"), obj(&m3, "c"));
        let d = canonical_delta(&m3, &cache, a, b, c).unwrap();
        assert_eq!(m3.ends(d), (bot, a));
        assert_eq!(m3.is_invertible(d), None);
    }

    #[test]
    fn delta_on_boolean_algebra_is_identity() {
        let b2 = gen_boolean_algebra(2).unwrap();
        let cache = LimitCache::build(&b2);
        for x in b2.objects() {
            for y in b2.objects() {
                for z in b2.objects() {
                    let d = canonical_delta(&b2, &cache, x, y, z).unwrap();
                    assert!(b2.is_identity(d));
                }
            }
        }
    }

    #[test]
    fn alpha_on_bool_matrix() {
        let c = gen_bool_matrix(2).unwrap();
        let cache = LimitCache::build(&c);
        let zero = zero_structure(&c).unwrap();
        let a = canonical_alpha(&c, &cache, &zero, 1, 1).unwrap();
        assert_eq!(a, c.identity(2));
        assert!(c.is_invertible(a).is_some());
        let t = gen_terminal();
        let tc = LimitCache::build(&t);
        let a = canonical_alpha(&t, &tc, &zero_structure(&t).unwrap(), 0, 0).unwrap();
        assert_eq!(a, t.identity(0));
    }

    #[test]
    fn distributivity_decisions() {
        let b2 = gen_boolean_algebra(2).unwrap();
        assert!(is_distributive(&b2, &LimitCache::build(&b2), Scope::All).unwrap().holds);
        let m3 = gen_m3();
        let r = is_distributive(&m3, &LimitCache::build(&m3), Scope::All).unwrap();
        assert!(!r.holds);
        let n5 = gen_n5();
        assert!(!is_distributive(&n5, &LimitCache::build(&n5), Scope::All).unwrap().holds);
        let bm = gen_bool_matrix(2).unwrap();
        let cache = LimitCache::build(&bm);
        assert!(matches!(is_distributive(&bm, &cache, Scope::All), Err(FinCatError::LimitAbsent(_))));
        let r = is_distributive(&bm, &cache, Scope::Existing).unwrap();
        assert!(!r.complete());
    }

    #[test]
    fn semi_additivity_decisions() {
        let t = gen_terminal();
        assert!(is_semi_additive(&t, &LimitCache::build(&t), Scope::All).unwrap().holds);
        let c = gen_chain(2).unwrap();
        let r = is_semi_additive(&c, &LimitCache::build(&c), Scope::All).unwrap();
        assert!(!r.holds);
        assert_eq!(r.reason.as_deref(), Some("not pointed"));
        assert!(is_semi_additive(&gen_m3(), &LimitCache::build(&gen_m3()), Scope::Existing)
            .map(|r| !r.holds)
            .unwrap());
    }

    #[test]
    fn subterminal_objects() {
        let m3 = gen_m3();
        assert!(m3.objects().all(|t| is_subterminal(&m3, t)));
        let c = gen_bool_matrix(2).unwrap();
        assert!(!is_subterminal(&c, 1));
        assert!(is_subterminal(&c, 0));
    }

    #[test]
    fn delta_functors_on_m3() {
        let m3 = Arc::new(gen_m3());
        let cache = LimitCache::build(&m3);
        let d = delta_functors(&m3, &cache).unwrap();
        assert!(d.lhs.validate().unwrap().ok);
        assert!(d.rhs.validate().unwrap().ok);
        let (a, b, c) = (obj(&m3, "a"), obj(&m3, "b"), obj(&m3, "c"));
        let t = d.cube.object(&[a, b, c]);
        assert_eq!(d.lhs.obj(t), obj(&m3, "⊥"));
        assert_eq!(d.rhs.obj(t), a);
        let delta = delta_transformation(&m3, &cache, &d).unwrap();
        assert!(delta.validate().unwrap().ok);
    }

    #[test]
    fn delta_functors_need_total_limits() {
        let bm = Arc::new(gen_bool_matrix(2).unwrap());
        let cache = LimitCache::build(&bm);
        assert!(matches!(delta_functors(&bm, &cache), Err(FinCatError::LimitAbsent(_))));
    }

    #[test]
    fn plus_times_on_chain() {
        let c = Arc::new(gen_chain(2).unwrap());
        let cache = LimitCache::build(&c);
        let pt = plus_times_functors(&c, &cache).unwrap();
        for t in pt.square.category.objects() {
            let (y, z) = pt.square.unpair(t);
            assert_eq!(pt.plus.obj(t), y.max(z));
            assert_eq!(pt.times.obj(t), y.min(z));
        }
        assert!(pt.plus.validate().unwrap().ok);
        assert!(pt.times.validate().unwrap().ok);
    }
}
