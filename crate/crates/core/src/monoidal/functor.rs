//! Lax monoidal functors and monoidal natural transformations.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::category::{FinCategory, Mor, Obj};
use crate::error::{FinCatError, Result};
use crate::functor::{
    compose_functors, product_functor, same_category, validate_functor, validate_natural_transformation,
    FunctorData, NatTransformData,
};
use crate::limits::{canonical_delta, product_map, LimitCache};
use crate::monoidal::structure::{product_monoidal, same_structure, MonoidalStructure};
use crate::report::{CoherenceReport, FailureLog};

/// A functor with structure maps `φ_{y,z} : Fy ⊗ Fz → F(y ⊗ z)`, indexed by
/// `y·n + z`, and `φ0 : I → FI`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoidalFunctorData {
    pub functor: Arc<FunctorData>,
    pub source: Arc<MonoidalStructure>,
    pub target: Arc<MonoidalStructure>,
    pub phi: Vec<Mor>,
    pub phi0: Mor,
}

impl MonoidalFunctorData {
    #[inline]
    pub fn phi_at(&self, y: Obj, z: Obj) -> Mor {
        self.phi[y * self.source.object_count() + z]
    }

    /// The identity functor with identity structure maps.
    pub fn identity(m: &Arc<MonoidalStructure>) -> MonoidalFunctorData {
        let c = &m.base;
        let n = c.object_count();
        let phi = (0..n * n)
            .map(|k| c.identity(m.tensor_obj(k / n, k % n)))
            .collect();
        MonoidalFunctorData {
            functor: Arc::new(FunctorData::identity(c)),
            source: m.clone(),
            target: m.clone(),
            phi,
            phi0: c.identity(m.unit),
        }
    }

    pub fn validate(&self) -> Result<CoherenceReport> {
        validate_monoidal_functor(self)
    }

    pub fn classify(&self) -> MonoidalKind {
        classify_monoidal_functor(self)
    }

    /// Categories, table length and component types.
    fn check_shape(&self) -> Result<()> {
        if !same_category(&self.functor.source, &self.source.base)
            || !same_category(&self.functor.target, &self.target.base)
        {
            return Err(FinCatError::CategoryMismatch(
                "underlying functor does not run between the structure bases".into(),
            ));
        }
        let n = self.source.object_count();
        if self.phi.len() != n * n {
            return Err(FinCatError::Invalid(format!(
                "{} structure maps for {} object pairs",
                self.phi.len(),
                n * n
            )));
        }
        let (m, t) = (&self.source, &self.target);
        let f = &self.functor;
        let typed = |what: String, g: Mor, expected: (Obj, Obj)| -> Result<()> {
            t.base.check_mor(g)?;
            let found = t.base.ends(g);
            if found != expected {
                return Err(FinCatError::ComponentType {
                    what,
                    morphism: g,
                    expected,
                    found,
                });
            }
            Ok(())
        };
        for y in m.base.objects() {
            for z in m.base.objects() {
                typed(
                    format!("structure map at ({y}, {z})"),
                    self.phi_at(y, z),
                    (t.tensor_obj(f.obj(y), f.obj(z)), f.obj(m.tensor_obj(y, z))),
                )?;
            }
        }
        typed("unit structure map".into(), self.phi0, (t.unit, f.obj(m.unit)))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MonoidalKind {
    Lax,
    /// `φ0` invertible.
    Normal,
    /// `φ0` and every `φ_{y,z}` invertible.
    Strong,
}

impl fmt::Display for MonoidalKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MonoidalKind::Lax => "lax",
            MonoidalKind::Normal => "normal",
            MonoidalKind::Strong => "strong",
        })
    }
}

pub(crate) fn path(c: &FinCategory, morphisms: &[Mor]) -> Option<Mor> {
    let (&first, rest) = morphisms.split_first()?;
    rest.iter().try_fold(first, |acc, &g| c.composite(g, acc))
}

/// Checks functoriality, naturality of `φ` in each variable, the
/// associativity hexagon and both unit squares.
pub fn validate_monoidal_functor(fm: &MonoidalFunctorData) -> Result<CoherenceReport> {
    fm.check_shape()?;
    let (m, t, f) = (&*fm.source, &*fm.target, &*fm.functor);
    let (s, c) = (&*m.base, &*t.base);
    let mut log = FailureLog::default();
    for failure in validate_functor(f)?.failures {
        log.push(&failure.law, failure.indices);
    }
    let n = s.object_count();
    let sid = |x: Obj| s.identity(x);
    let tid = |x: Obj| c.identity(x);
    for g in s.morphisms() {
        let (u, v) = s.ends(g);
        for z in 0..n {
            let lhs = path(c, &[fm.phi_at(u, z), f.mor(m.tensor_mor(g, sid(z)))]);
            let rhs = path(c, &[t.tensor_mor(f.mor(g), tid(f.obj(z))), fm.phi_at(v, z)]);
            if lhs.is_none() || lhs != rhs {
                log.push("structure map naturality", [g, z, 0]);
            }
            let lhs = path(c, &[fm.phi_at(z, u), f.mor(m.tensor_mor(sid(z), g))]);
            let rhs = path(c, &[t.tensor_mor(tid(f.obj(z)), f.mor(g)), fm.phi_at(z, v)]);
            if lhs.is_none() || lhs != rhs {
                log.push("structure map naturality", [g, z, 1]);
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let (fx, fy, fz) = (f.obj(x), f.obj(y), f.obj(z));
                let lhs = path(
                    c,
                    &[
                        t.tensor_mor(fm.phi_at(x, y), tid(fz)),
                        fm.phi_at(m.tensor_obj(x, y), z),
                        f.mor(m.associator(x, y, z)),
                    ],
                );
                let rhs = path(
                    c,
                    &[
                        t.associator(fx, fy, fz),
                        t.tensor_mor(tid(fx), fm.phi_at(y, z)),
                        fm.phi_at(x, m.tensor_obj(y, z)),
                    ],
                );
                if lhs.is_none() || lhs != rhs {
                    log.push("associativity coherence", [x, y, z]);
                }
            }
        }
    }
    for x in 0..n {
        let fx = f.obj(x);
        let lhs = path(
            c,
            &[
                t.tensor_mor(fm.phi0, tid(fx)),
                fm.phi_at(m.unit, x),
                f.mor(m.left_unitor(x)),
            ],
        );
        if lhs.is_none() || lhs != Some(t.left_unitor(fx)) {
            log.push("left unit coherence", [x]);
        }
        let lhs = path(
            c,
            &[
                t.tensor_mor(tid(fx), fm.phi0),
                fm.phi_at(x, m.unit),
                f.mor(m.right_unitor(x)),
            ],
        );
        if lhs.is_none() || lhs != Some(t.right_unitor(fx)) {
            log.push("right unit coherence", [x]);
        }
    }
    Ok(log.finish())
}

pub fn classify_monoidal_functor(fm: &MonoidalFunctorData) -> MonoidalKind {
    let c = &fm.target.base;
    if c.is_invertible(fm.phi0).is_none() {
        MonoidalKind::Lax
    } else if fm.phi.iter().all(|&p| c.is_invertible(p).is_some()) {
        MonoidalKind::Strong
    } else {
        MonoidalKind::Normal
    }
}

/// `G ∘ F` with `φ_{y,z} = G(φ^F_{y,z}) ∘ φ^G_{Fy,Fz}` and
/// `φ0 = G(φ0^F) ∘ φ0^G`.
pub fn compose_monoidal_functors(g: &MonoidalFunctorData, f: &MonoidalFunctorData) -> Result<MonoidalFunctorData> {
    if !same_structure(&f.target, &g.source) {
        return Err(FinCatError::CategoryMismatch(
            "target structure of F differs from source structure of G".into(),
        ));
    }
    let functor = compose_functors(&g.functor, &f.functor)?;
    let c = &g.target.base;
    let n = f.source.object_count();
    let phi = (0..n * n)
        .map(|k| {
            let (y, z) = (k / n, k % n);
            let inner = g.phi_at(f.functor.obj(y), f.functor.obj(z));
            c.compose(g.functor.mor(f.phi_at(y, z)), inner)
        })
        .collect::<Result<Vec<_>>>()?;
    let phi0 = c.compose(g.functor.mor(f.phi0), g.phi0)?;
    Ok(MonoidalFunctorData {
        functor: Arc::new(functor),
        source: f.source.clone(),
        target: g.target.clone(),
        phi,
        phi0,
    })
}

/// `F1 × F2` between product structures built by [`product_monoidal`].
pub fn product_monoidal_functor(
    f1: &MonoidalFunctorData,
    f2: &MonoidalFunctorData,
    source: &Arc<MonoidalStructure>,
    target: &Arc<MonoidalStructure>,
) -> Result<MonoidalFunctorData> {
    let (Some(sp), Some(tp)) = (&source.product_of, &target.product_of) else {
        return Err(FinCatError::CategoryMismatch(
            "product functor needs product structures".into(),
        ));
    };
    let (functor, sp, tp) = product_functor(&[&f1.functor, &f2.functor], Some(sp), Some(tp))?;
    if !same_category(&sp.category, &source.base) || !same_category(&tp.category, &target.base) {
        return Err(FinCatError::CategoryMismatch("product bases differ".into()));
    }
    let n = source.object_count();
    let phi = (0..n * n)
        .map(|k| {
            let ((y1, y2), (z1, z2)) = (sp.unpair(k / n), sp.unpair(k % n));
            tp.pair_mor(f1.phi_at(y1, z1), f2.phi_at(y2, z2))
        })
        .collect();
    Ok(MonoidalFunctorData {
        functor: Arc::new(functor),
        source: source.clone(),
        target: target.clone(),
        phi,
        phi0: tp.pair_mor(f1.phi0, f2.phi0),
    })
}

/// The tensor of a braided structure as a strong monoidal functor from the
/// product structure on `C × C`, with structure map at `((w,x),(y,z))` the
/// middle interchange `(w⊗x)⊗(y⊗z) → (w⊗y)⊗(x⊗z)` through `1⊗γ_{x,y}⊗1`.
/// Pass `square` to reuse a product structure on `C × C`.
pub fn tensor_strong_monoidal(
    m: &Arc<MonoidalStructure>,
    square: Option<Arc<MonoidalStructure>>,
) -> Result<MonoidalFunctorData> {
    if !m.is_braided() {
        return Err(FinCatError::BraidingAbsent);
    }
    let square = match square {
        Some(sq) => sq,
        None => Arc::new(product_monoidal(m, m, Some(&m.square))?),
    };
    if !same_category(&square.base, &m.square.category) {
        return Err(FinCatError::CategoryMismatch(
            "square structure is not on the tensor's source".into(),
        ));
    }
    let c = &*m.base;
    let p = &m.square;
    let n = square.object_count();
    let id = |x: Obj| c.identity(x);
    let o = |x: Obj, y: Obj| m.tensor_obj(x, y);
    let phi = (0..n * n)
        .map(|k| {
            let ((w, x), (y, z)) = (p.unpair(k / n), p.unpair(k % n));
            let gamma = m.braiding(x, y).expect("braided");
            let steps = [
                m.associator(w, x, o(y, z)),
                m.tensor_mor(id(w), m.inverse(m.associator(x, y, z))?),
                m.tensor_mor(id(w), m.tensor_mor(gamma, id(z))),
                m.tensor_mor(id(w), m.associator(y, x, z)),
                m.inverse(m.associator(w, y, o(x, z)))?,
            ];
            c.compose_path(&steps)
        })
        .collect::<Result<Vec<_>>>()?;
    let phi0 = m.inverse(m.left_unitor(m.unit))?;
    Ok(MonoidalFunctorData {
        functor: m.tensor.clone(),
        source: square,
        target: m.clone(),
        phi,
        phi0,
    })
}

/// `X × −` on a category with products, as a lax monoidal functor for the
/// cocartesian structure: `φ_{y,z} = δ_{x,y,z}` and `φ0 : 0 → X×0`.
/// In a lattice this is `x ∧ −` for the join structure.
pub fn product_lax_functor(
    cocartesian: &Arc<MonoidalStructure>,
    cache: &LimitCache,
    x: Obj,
) -> Result<MonoidalFunctorData> {
    let c = &cocartesian.base;
    c.check_obj(x)?;
    let object_map = c
        .objects()
        .map(|y| cache.require_product(x, y).map(|w| w.apex))
        .collect::<Result<Vec<_>>>()?;
    let morphism_map = c
        .morphisms()
        .map(|f| product_map(c, cache, c.identity(x), f))
        .collect::<Result<Vec<_>>>()?;
    let functor = FunctorData::new(c.clone(), c.clone(), object_map, morphism_map)?;
    let n = c.object_count();
    let phi = (0..n * n)
        .map(|k| canonical_delta(c, cache, x, k / n, k % n))
        .collect::<Result<Vec<_>>>()?;
    let unit = cocartesian.unit;
    let phi0 = *c
        .hom(unit, functor.obj(unit))
        .first()
        .ok_or_else(|| FinCatError::Invalid("unit is not initial".into()))?;
    Ok(MonoidalFunctorData {
        functor: Arc::new(functor),
        source: cocartesian.clone(),
        target: cocartesian.clone(),
        phi,
        phi0,
    })
}

/// A natural transformation between monoidal functors with common source
/// and target structures.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoidalNatData {
    pub source: Arc<MonoidalFunctorData>,
    pub target: Arc<MonoidalFunctorData>,
    pub transformation: NatTransformData,
}

impl MonoidalNatData {
    pub fn new(source: Arc<MonoidalFunctorData>, target: Arc<MonoidalFunctorData>, components: Vec<Mor>) -> Self {
        let transformation = NatTransformData::new(source.functor.clone(), target.functor.clone(), components);
        MonoidalNatData {
            source,
            target,
            transformation,
        }
    }

    pub fn identity(f: &Arc<MonoidalFunctorData>) -> Self {
        let transformation = NatTransformData::identity(&f.functor);
        MonoidalNatData {
            source: f.clone(),
            target: f.clone(),
            transformation,
        }
    }

    pub fn component(&self, x: Obj) -> Mor {
        self.transformation.components[x]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum NatCheckMode {
    /// Both the binary square and the nullary triangle.
    #[default]
    Full,
    /// The binary square only.
    Relaxed,
}

/// Checks naturality, `α_{y⊗z} ∘ φ_{y,z} = ψ_{y,z} ∘ (α_y ⊗ α_z)` for every
/// pair and, unless relaxed, `α_I ∘ φ0 = ψ0`.
pub fn validate_monoidal_nat(alpha: &MonoidalNatData, mode: NatCheckMode) -> Result<CoherenceReport> {
    let (f, g) = (&*alpha.source, &*alpha.target);
    if !same_structure(&f.source, &g.source) || !same_structure(&f.target, &g.target) {
        return Err(FinCatError::CategoryMismatch(
            "monoidal functors do not share structures".into(),
        ));
    }
    if !Arc::ptr_eq(&alpha.transformation.source, &f.functor) && *alpha.transformation.source != *f.functor
        || !Arc::ptr_eq(&alpha.transformation.target, &g.functor) && *alpha.transformation.target != *g.functor
    {
        return Err(FinCatError::CategoryMismatch(
            "transformation endpoints differ from the monoidal functors".into(),
        ));
    }
    f.check_shape()?;
    g.check_shape()?;
    let mut log = FailureLog::default();
    for failure in validate_natural_transformation(&alpha.transformation)?.failures {
        log.push(&failure.law, failure.indices);
    }
    let (m, t) = (&*f.source, &*f.target);
    let c = &*t.base;
    let a = |x: Obj| alpha.component(x);
    for y in m.base.objects() {
        for z in m.base.objects() {
            let lhs = path(c, &[f.phi_at(y, z), a(m.tensor_obj(y, z))]);
            let rhs = path(c, &[t.tensor_mor(a(y), a(z)), g.phi_at(y, z)]);
            if lhs.is_none() || lhs != rhs {
                log.push("binary compatibility", [y, z]);
            }
        }
    }
    if mode == NatCheckMode::Full {
        let lhs = path(c, &[f.phi0, a(m.unit)]);
        if lhs.is_none() || lhs != Some(g.phi0) {
            log.push("nullary compatibility", [m.unit]);
        }
    }
    Ok(log.finish())
}
