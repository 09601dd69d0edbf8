//! Executable checks of the strength theorem for normal monoidal functors and
//! of its coproduct-preservation corollary.

use std::ops::ControlFlow;
use std::sync::Arc;

use crate::category::{Mor, Obj};
use crate::constructions::{product_category, Product};
use crate::error::{FinCatError, Result};
use crate::functor::{validate_natural_transformation, FunctorData, NatTransformData};
use crate::limits::{copair_from_coproduct, coproduct_map, LimitCache};
use crate::monoidal::functor::{
    compose_monoidal_functors, path, product_monoidal_functor, tensor_strong_monoidal,
    validate_monoidal_functor, validate_monoidal_nat, MonoidalFunctorData, MonoidalNatData, NatCheckMode,
};
use crate::monoidal::structure::{
    product_monoidal, same_structure, validate_braiding, validate_monoidal, MonoidalStructure,
};
use crate::report::{CoherenceReport, TheoremId, TheoremReport};
use crate::search::{for_each_natural_transformation, Existence, SearchStats};

fn first_failure(r: &CoherenceReport) -> String {
    match r.failures.first() {
        None => "ok".into(),
        Some(f) => format!("{} failure(s), first {} at {:?}", r.failures.len(), f.law, f.indices),
    }
}

fn braided_report(m: &MonoidalStructure) -> Result<CoherenceReport> {
    let mut r = validate_monoidal(m)?;
    if m.is_braided() {
        let b = validate_braiding(m)?;
        r.failures.extend(b.failures);
        r.ok = r.failures.is_empty();
    } else {
        r.ok = false;
    }
    Ok(r)
}

/// The fixed data of the strength theorem for a pair of braided structures
/// `A`, `B`: the product structures on `A × A` and `B × B` and both tensors as
/// strong monoidal functors. Built once and shared by every functor `A → B`.
#[derive(Debug, Clone)]
pub struct StrengthSetting {
    pub source: Arc<MonoidalStructure>,
    pub target: Arc<MonoidalStructure>,
    pub source_square: Arc<MonoidalStructure>,
    pub target_square: Arc<MonoidalStructure>,
    pub source_tensor: Arc<MonoidalFunctorData>,
    pub target_tensor: Arc<MonoidalFunctorData>,
    pub source_report: CoherenceReport,
    pub target_report: CoherenceReport,
}

impl StrengthSetting {
    pub fn new(source: &Arc<MonoidalStructure>, target: &Arc<MonoidalStructure>) -> Result<StrengthSetting> {
        let source_report = braided_report(source)?;
        let target_report = if Arc::ptr_eq(source, target) {
            source_report.clone()
        } else {
            braided_report(target)?
        };
        let source_square = Arc::new(product_monoidal(source, source, Some(&source.square))?);
        let source_tensor = Arc::new(tensor_strong_monoidal(source, Some(source_square.clone()))?);
        let (target_square, target_tensor) = if Arc::ptr_eq(source, target) {
            (source_square.clone(), source_tensor.clone())
        } else {
            let sq = Arc::new(product_monoidal(target, target, Some(&target.square))?);
            let t = Arc::new(tensor_strong_monoidal(target, Some(sq.clone()))?);
            (sq, t)
        };
        Ok(StrengthSetting {
            source: source.clone(),
            target: target.clone(),
            source_square,
            target_square,
            source_tensor,
            target_tensor,
            source_report,
            target_report,
        })
    }

    /// `A × A` with its encoding.
    pub fn pairs(&self) -> &Product {
        &self.source.square
    }

    /// The two sides of the comparison for `F`: `L = ⊗ ∘ (F × F)` and
    /// `R = F ∘ ⊗`, both monoidal functors `A × A → B`.
    pub fn functors(
        &self,
        f: &Arc<MonoidalFunctorData>,
    ) -> Result<(Arc<MonoidalFunctorData>, Arc<MonoidalFunctorData>)> {
        if !same_structure(&f.source, &self.source) || !same_structure(&f.target, &self.target) {
            return Err(FinCatError::CategoryMismatch(
                "functor does not run between the setting's structures".into(),
            ));
        }
        let ff = product_monoidal_functor(f, f, &self.source_square, &self.target_square)?;
        let l = compose_monoidal_functors(&self.target_tensor, &ff)?;
        let r = compose_monoidal_functors(f, &self.source_tensor)?;
        Ok((Arc::new(l), Arc::new(r)))
    }
}

/// The first natural isomorphism `L ⇒ R` (in search order) that is monoidal.
pub fn find_monoidal_iso(
    l: &Arc<MonoidalFunctorData>,
    r: &Arc<MonoidalFunctorData>,
    mode: NatCheckMode,
    node_budget: u64,
) -> Result<(Existence<MonoidalNatData>, SearchStats)> {
    let mut found = None;
    let mut error = None;
    let stats = for_each_natural_transformation(&l.functor, &r.functor, true, node_budget, |comps| {
        let candidate = MonoidalNatData::new(l.clone(), r.clone(), comps.to_vec());
        match validate_monoidal_nat(&candidate, mode) {
            Ok(rep) if rep.ok => {
                found = Some(candidate);
                ControlFlow::Break(())
            }
            Ok(_) => ControlFlow::Continue(()),
            Err(e) => {
                error = Some(e);
                ControlFlow::Break(())
            }
        }
    })?;
    if let Some(e) = error {
        return Err(e);
    }
    let existence = match found {
        Some(t) => Existence::Found(t),
        None if stats.budget_exhausted => Existence::Unknown,
        None => Existence::Absent,
    };
    Ok((existence, stats))
}

/// The unit-elimination identities at `(w, z)` that derive invertibility of
/// `φ_{w,z}` from that of `ψ`.
struct Replay {
    square_commutes: bool,
    phi_route_is_psi: bool,
    psi_route_factors: bool,
    cofactor_invertible: bool,
}

impl Replay {
    fn holds(&self) -> bool {
        self.square_commutes && self.phi_route_is_psi && self.psi_route_factors && self.cofactor_invertible
    }

    fn describe(&self) -> String {
        let mut broken = Vec::new();
        if !self.square_commutes {
            broken.push("whiskered monoidal square");
        }
        if !self.phi_route_is_psi {
            broken.push("φ route equals ψ");
        }
        if !self.psi_route_factors {
            broken.push("ψ route factors through φ");
        }
        if !self.cofactor_invertible {
            broken.push("cofactor invertible");
        }
        broken.join(", ")
    }
}

fn replay_at(
    f: &MonoidalFunctorData,
    psi: &MonoidalNatData,
    setting: &StrengthSetting,
    l: &MonoidalFunctorData,
    r: &MonoidalFunctorData,
    w: Obj,
    z: Obj,
) -> Replay {
    let (a, b) = (&*f.source, &*f.target);
    let c = &*b.base;
    let func = &*f.functor;
    let pairs = setting.pairs();
    let i = a.unit;
    let (fw, fz) = (func.obj(w), func.obj(z));
    let id = |x: Obj| c.identity(x);
    let broken = Replay {
        square_commutes: false,
        phi_route_is_psi: false,
        psi_route_factors: false,
        cofactor_invertible: false,
    };
    // k : FW ⊗ FZ → (FW ⊗ FI) ⊗ (FI ⊗ FZ), inserting φ0 on both sides.
    let (Some(rho_inv), Some(lambda_inv)) = (c.is_invertible(b.right_unitor(fw)), c.is_invertible(b.left_unitor(fz)))
    else {
        return broken;
    };
    let k_left = path(c, &[rho_inv, b.tensor_mor(id(fw), f.phi0)]);
    let k_right = path(c, &[lambda_inv, b.tensor_mor(f.phi0, id(fz))]);
    let (Some(k_left), Some(k_right)) = (k_left, k_right) else {
        return broken;
    };
    let k = b.tensor_mor(k_left, k_right);
    let p = pairs.pair(w, i);
    let q = pairs.pair(i, z);
    let unitors = pairs.pair_mor(a.right_unitor(w), a.left_unitor(z));
    let psi_pq = psi.component(setting.source_square.tensor_obj(p, q));
    let route_phi = path(c, &[k, l.phi_at(p, q), psi_pq, r.functor.mor(unitors)]);
    let psi_tensor = b.tensor_mor(psi.component(p), psi.component(q));
    let route_psi = path(c, &[k, psi_tensor, r.phi_at(p, q), r.functor.mor(unitors)]);
    let cofactor = path(
        c,
        &[
            k,
            psi_tensor,
            b.tensor_mor(func.mor(a.right_unitor(w)), func.mor(a.left_unitor(z))),
        ],
    );
    let factored = cofactor.and_then(|u| path(c, &[u, f.phi_at(w, z)]));
    Replay {
        square_commutes: route_phi.is_some() && route_phi == route_psi,
        phi_route_is_psi: route_phi == Some(psi.component(pairs.pair(w, z))),
        psi_route_factors: route_psi.is_some() && route_psi == factored,
        cofactor_invertible: cofactor.is_some_and(|u| c.is_invertible(u).is_some()),
    }
}

/// Checks the strength theorem on one instance: given braided `A`, `B`, a
/// normal monoidal `F : A → B` and a monoidal natural isomorphism
/// `ψ : ⊗ ∘ (F × F) ⇒ F ∘ ⊗`, every `φ_{w,z}` is invertible.
///
/// Failed hypotheses make the report not-applicable and are named in it.
/// When the hypotheses hold the proof is replayed at every `(w, z)`; a replay
/// that disagrees with the direct invertibility scan is an anomaly.
pub fn check_strength_theorem(
    f: &Arc<MonoidalFunctorData>,
    psi: &MonoidalNatData,
    setting: &StrengthSetting,
    mode: NatCheckMode,
) -> Result<TheoremReport> {
    let mut report = TheoremReport::new(TheoremId::Monoidal, "monoidal functor");
    let (l, r) = setting.functors(f)?;
    if *psi.source != *l || *psi.target != *r {
        return Err(FinCatError::CategoryMismatch(
            "ψ does not run from ⊗ ∘ (F × F) to F ∘ ⊗".into(),
        ));
    }
    report.hypothesis(
        "source braided monoidal",
        setting.source_report.ok,
        first_failure(&setting.source_report),
    );
    report.hypothesis(
        "target braided monoidal",
        setting.target_report.ok,
        first_failure(&setting.target_report),
    );
    let fr = validate_monoidal_functor(f)?;
    report.hypothesis("F lax monoidal", fr.ok, first_failure(&fr));
    let b = &*f.target.base;
    let normal = b.is_invertible(f.phi0).is_some();
    report.hypothesis("F normal", normal, format!("φ0 = {}", b.morphism_name(f.phi0)));
    let nat = validate_monoidal_nat(psi, mode)?;
    let mode_note = match mode {
        NatCheckMode::Full => "",
        NatCheckMode::Relaxed => " (nullary part not required)",
    };
    report.hypothesis("ψ monoidal", nat.ok, format!("{}{mode_note}", first_failure(&nat)));
    let psi_iso = psi.transformation.is_iso();
    report.hypothesis("ψ invertible", psi_iso, "component scan");

    let n = f.source.object_count();
    let non_invertible: Vec<(Obj, Obj)> = (0..n)
        .flat_map(|w| (0..n).map(move |z| (w, z)))
        .filter(|&(w, z)| b.is_invertible(f.phi_at(w, z)).is_none())
        .collect();
    let strong = non_invertible.is_empty();
    report.conclusion(
        "φ invertible",
        strong,
        match non_invertible.first() {
            None => format!("all {} structure maps invertible", n * n),
            Some(&(w, z)) => format!("φ at ({w}, {z}) not invertible"),
        },
    );
    if report.hypotheses_hold() {
        let mut failed = None;
        for w in 0..n {
            for z in 0..n {
                let replay = replay_at(f, psi, setting, &l, &r, w, z);
                if !replay.holds() && failed.is_none() {
                    failed = Some(format!("at ({w}, {z}): {}", replay.describe()));
                }
            }
        }
        let derived = failed.is_none();
        report.conclusion(
            "proof replay",
            derived,
            failed.clone().unwrap_or_else(|| "unit-elimination square verified at every pair".into()),
        );
        if derived != strong {
            report.anomalies.push(format!(
                "replay derives φ invertible = {derived}, direct scan = {strong}"
            ));
        }
    } else {
        report.contrapositive = Some(!strong);
    }
    Ok(report.finalize())
}

/// The two sides of the coproduct comparison for a functor `F : A → B`, as
/// functors `A × A → B`: `(x, y) ↦ Fx + Fy` and `(x, y) ↦ F(x + y)`.
#[derive(Debug, Clone)]
pub struct ComparisonFunctors {
    pub square: Product,
    pub sum_of_images: Arc<FunctorData>,
    pub image_of_sum: Arc<FunctorData>,
}

pub fn coproduct_comparison_functors(
    f: &FunctorData,
    source_cache: &LimitCache,
    target_cache: &LimitCache,
) -> Result<ComparisonFunctors> {
    let (a, b) = (&f.source, &f.target);
    let square = product_category(&[a.clone(), a.clone()])?;
    let sq = &square.category;
    let mut sum_obj = Vec::with_capacity(sq.object_count());
    let mut image_obj = Vec::with_capacity(sq.object_count());
    for p in sq.objects() {
        let (x, y) = square.unpair(p);
        sum_obj.push(target_cache.require_coproduct(f.obj(x), f.obj(y))?.apex);
        image_obj.push(f.obj(source_cache.require_coproduct(x, y)?.apex));
    }
    let mut sum_mor = Vec::with_capacity(sq.morphism_count());
    let mut image_mor = Vec::with_capacity(sq.morphism_count());
    for m in sq.morphisms() {
        let (g, h) = square.unpair_mor(m);
        sum_mor.push(coproduct_map(b, target_cache, f.mor(g), f.mor(h))?);
        image_mor.push(f.mor(coproduct_map(a, source_cache, g, h)?));
    }
    Ok(ComparisonFunctors {
        sum_of_images: Arc::new(FunctorData::new(sq.clone(), b.clone(), sum_obj, sum_mor)?),
        image_of_sum: Arc::new(FunctorData::new(sq.clone(), b.clone(), image_obj, image_mor)?),
        square,
    })
}

/// `κ_{x,y} = [F(i), F(j)] : Fx + Fy → F(x + y)`.
pub fn coproduct_comparison(
    f: &FunctorData,
    source_cache: &LimitCache,
    target_cache: &LimitCache,
    x: Obj,
    y: Obj,
) -> Result<Mor> {
    let sw = source_cache.require_coproduct(x, y)?;
    let tw = target_cache.require_coproduct(f.obj(x), f.obj(y))?;
    copair_from_coproduct(&f.target, tw, f.mor(sw.injections.0), f.mor(sw.injections.1))
}

/// Checks the coproduct-preservation corollary on one instance: if `F`
/// preserves the initial object and `ψ : Fx + Fy ≅ F(x + y)` is a natural
/// isomorphism, every `κ_{x,y}` is invertible.
///
/// With a cocartesian `setting` the proof route is also exercised: `F` with
/// `φ = κ` must be lax monoidal and `ψ` must be monoidal for it. A failure
/// there is an anomaly.
pub fn check_coproduct_preservation(
    f: &Arc<FunctorData>,
    psi: &NatTransformData,
    source_cache: &LimitCache,
    target_cache: &LimitCache,
    setting: Option<&StrengthSetting>,
) -> Result<TheoremReport> {
    let mut report = TheoremReport::new(TheoremId::CaccamoWinskel, "functor");
    let (a, b) = (&f.source, &f.target);
    for (side, cache) in [("source", source_cache), ("target", target_cache)] {
        if cache.initial.is_none() {
            report.coverage.push(format!("{side} has no initial object"));
        }
        let missing = cache.missing_coproducts();
        if !missing.is_empty() {
            report
                .coverage
                .push(format!("{side} lacks {} binary coproducts, e.g. {:?}", missing.len(), missing[0]));
        }
    }
    if !report.coverage.is_empty() {
        return Ok(report.finalize());
    }
    let initial = source_cache.require_initial()?;
    let image = f.obj(initial);
    let preserves = b.objects().all(|y| b.hom_size(image, y) == 1);
    report.hypothesis("F preserves the initial object", preserves, format!("F(0) = {}", b.object_name(image)));

    let cf = coproduct_comparison_functors(f, source_cache, target_cache)?;
    if *psi.source != *cf.sum_of_images || *psi.target != *cf.image_of_sum {
        return Err(FinCatError::CategoryMismatch(
            "ψ does not run from Fx + Fy to F(x + y)".into(),
        ));
    }
    let nat = validate_natural_transformation(psi)?;
    report.hypothesis("ψ natural", nat.ok, first_failure(&nat));
    report.hypothesis("ψ invertible", psi.is_iso(), "component scan");

    let n = a.object_count();
    let kappa = (0..n * n)
        .map(|k| coproduct_comparison(f, source_cache, target_cache, k / n, k % n))
        .collect::<Result<Vec<_>>>()?;
    let bad = kappa.iter().position(|&m| b.is_invertible(m).is_none());
    report.conclusion(
        "F preserves binary coproducts",
        bad.is_none(),
        match bad {
            None => format!("all {} comparison maps invertible", n * n),
            Some(k) => format!("comparison at ({}, {}) not invertible", k / n, k % n),
        },
    );
    if !report.hypotheses_hold() {
        report.contrapositive = Some(bad.is_some());
        return Ok(report.finalize());
    }
    if let Some(setting) = setting {
        if let Err(e) = monoidal_route(f, psi, &kappa, setting, &mut report) {
            report.anomalies.push(format!("monoidal route failed structurally: {e}"));
        }
    }
    Ok(report.finalize())
}

fn monoidal_route(
    f: &Arc<FunctorData>,
    psi: &NatTransformData,
    kappa: &[Mor],
    setting: &StrengthSetting,
    report: &mut TheoremReport,
) -> Result<()> {
    let b = &f.target;
    let unit = setting.target.unit;
    let phi0 = *b
        .hom(unit, f.obj(setting.source.unit))
        .first()
        .ok_or_else(|| FinCatError::Invalid("target unit is not initial".into()))?;
    let fm = Arc::new(MonoidalFunctorData {
        functor: f.clone(),
        source: setting.source.clone(),
        target: setting.target.clone(),
        phi: kappa.to_vec(),
        phi0,
    });
    let fr = validate_monoidal_functor(&fm)?;
    if !fr.ok {
        report
            .anomalies
            .push(format!("canonical structure is not lax monoidal: {}", first_failure(&fr)));
        return Ok(());
    }
    let (l, r) = setting.functors(&fm)?;
    let psi_m = MonoidalNatData::new(l, r, psi.components.clone());
    let nr = validate_monoidal_nat(&psi_m, NatCheckMode::Full)?;
    if !nr.ok {
        report
            .anomalies
            .push(format!("ψ is not monoidal for the canonical structure: {}", first_failure(&nr)));
        return Ok(());
    }
    let strength = check_strength_theorem(&fm, &psi_m, setting, NatCheckMode::Full)?;
    report.conclusion(
        "strength theorem route",
        strength.conclusions_hold(),
        format!("strength check verdict {}", strength.verdict),
    );
    report.anomalies.extend(strength.anomalies);
    Ok(())
}
