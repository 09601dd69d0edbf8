//! Functors and natural transformations between finite categories.

use std::sync::Arc;

use crate::category::{FinCategory, Mor, Obj};
use crate::constructions::{product_category, Product};
use crate::error::{FinCatError, Result};
use crate::report::{FailureLog, ValidationReport};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FunctorData {
    pub source: Arc<FinCategory>,
    pub target: Arc<FinCategory>,
    pub object_map: Vec<Obj>,
    pub morphism_map: Vec<Mor>,
}

pub(crate) fn same_category(a: &Arc<FinCategory>, b: &Arc<FinCategory>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl FunctorData {
    /// Wraps the maps after checking lengths and index ranges. Functor laws
    /// are checked by [`FunctorData::validate`].
    pub fn new(
        source: Arc<FinCategory>,
        target: Arc<FinCategory>,
        object_map: Vec<Obj>,
        morphism_map: Vec<Mor>,
    ) -> Result<FunctorData> {
        if object_map.len() != source.object_count() {
            return Err(FinCatError::Invalid(format!(
                "object map has {} entries for {} objects",
                object_map.len(),
                source.object_count()
            )));
        }
        if morphism_map.len() != source.morphism_count() {
            return Err(FinCatError::Invalid(format!(
                "morphism map has {} entries for {} morphisms",
                morphism_map.len(),
                source.morphism_count()
            )));
        }
        for &x in &object_map {
            target.check_obj(x)?;
        }
        for &f in &morphism_map {
            target.check_mor(f)?;
        }
        Ok(FunctorData {
            source,
            target,
            object_map,
            morphism_map,
        })
    }

    pub fn identity(c: &Arc<FinCategory>) -> FunctorData {
        FunctorData {
            source: c.clone(),
            target: c.clone(),
            object_map: c.objects().collect(),
            morphism_map: c.morphisms().collect(),
        }
    }

    /// The functor sending everything to `x` and its identity.
    pub fn constant(source: &Arc<FinCategory>, target: &Arc<FinCategory>, x: Obj) -> Result<FunctorData> {
        target.check_obj(x)?;
        Ok(FunctorData {
            source: source.clone(),
            target: target.clone(),
            object_map: vec![x; source.object_count()],
            morphism_map: vec![target.identity(x); source.morphism_count()],
        })
    }

    #[inline]
    pub fn obj(&self, x: Obj) -> Obj {
        self.object_map[x]
    }

    #[inline]
    pub fn mor(&self, f: Mor) -> Mor {
        self.morphism_map[f]
    }

    pub fn validate(&self) -> Result<ValidationReport> {
        validate_functor(self)
    }
}

/// Checks that `F` preserves sources, targets, identities and composites.
pub fn validate_functor(func: &FunctorData) -> Result<ValidationReport> {
    let (s, t) = (&func.source, &func.target);
    if func.object_map.len() != s.object_count() || func.morphism_map.len() != s.morphism_count() {
        return Err(FinCatError::Invalid("functor maps have the wrong length".into()));
    }
    for &x in &func.object_map {
        t.check_obj(x)?;
    }
    for &f in &func.morphism_map {
        t.check_mor(f)?;
    }
    let mut log = FailureLog::default();
    let mut typed = vec![true; s.morphism_count()];
    for f in s.morphisms() {
        let ff = func.mor(f);
        if t.src(ff) != func.obj(s.src(f)) || t.dst(ff) != func.obj(s.dst(f)) {
            log.push("preserves source/target", [f]);
            typed[f] = false;
        }
    }
    for x in s.objects() {
        if func.mor(s.identity(x)) != t.identity(func.obj(x)) {
            log.push("preserves identities", [x]);
        }
    }
    for (g, f) in s.composable_pairs() {
        if !typed[g] || !typed[f] {
            continue;
        }
        let gf = s.composite(g, f).expect("composable");
        if t.composite(func.mor(g), func.mor(f)) != Some(func.mor(gf)) {
            log.push("preserves composition", [g, f]);
        }
    }
    Ok(log.finish())
}

/// `G ∘ F`.
pub fn compose_functors(g: &FunctorData, f: &FunctorData) -> Result<FunctorData> {
    if !same_category(&f.target, &g.source) {
        return Err(FinCatError::CategoryMismatch(
            "target of F differs from source of G".into(),
        ));
    }
    Ok(FunctorData {
        source: f.source.clone(),
        target: g.target.clone(),
        object_map: f.object_map.iter().map(|&x| g.obj(x)).collect(),
        morphism_map: f.morphism_map.iter().map(|&m| g.mor(m)).collect(),
    })
}

/// The product functor `F1 × … × Fk` between product categories. Pass the
/// products to reuse them, or `None` to build them.
pub fn product_functor(
    fs: &[&FunctorData],
    source: Option<&Product>,
    target: Option<&Product>,
) -> Result<(FunctorData, Product, Product)> {
    if fs.is_empty() {
        return Err(FinCatError::EmptyProduct);
    }
    let sources: Vec<Arc<FinCategory>> = fs.iter().map(|f| f.source.clone()).collect();
    let targets: Vec<Arc<FinCategory>> = fs.iter().map(|f| f.target.clone()).collect();
    let check = |p: &Product, cats: &[Arc<FinCategory>]| -> Result<()> {
        if p.factors.len() != cats.len()
            || !p.factors.iter().zip(cats).all(|(a, b)| same_category(a, b))
        {
            return Err(FinCatError::CategoryMismatch(
                "supplied product does not match the functor factors".into(),
            ));
        }
        Ok(())
    };
    let source = match source {
        Some(p) => {
            check(p, &sources)?;
            p.clone()
        }
        None => product_category(&sources)?,
    };
    let target = match target {
        Some(p) => {
            check(p, &targets)?;
            p.clone()
        }
        None => product_category(&targets)?,
    };
    let object_map = source
        .category
        .objects()
        .map(|x| {
            let parts: Vec<Obj> = source
                .object_parts(x)
                .iter()
                .zip(fs)
                .map(|(&p, f)| f.obj(p))
                .collect();
            target.object(&parts)
        })
        .collect();
    let morphism_map = source
        .category
        .morphisms()
        .map(|m| {
            let parts: Vec<Mor> = source
                .morphism_parts(m)
                .iter()
                .zip(fs)
                .map(|(&p, f)| f.mor(p))
                .collect();
            target.morphism(&parts)
        })
        .collect();
    let functor = FunctorData {
        source: source.category.clone(),
        target: target.category.clone(),
        object_map,
        morphism_map,
    };
    Ok((functor, source, target))
}

/// True iff every induced map `hom(x, y) → hom(Fx, Fy)` is a bijection.
pub fn is_fully_faithful(func: &FunctorData) -> bool {
    let (s, t) = (&func.source, &func.target);
    s.objects().all(|x| {
        s.objects().all(|y| {
            let hom = s.hom(x, y);
            let image_hom = t.hom(func.obj(x), func.obj(y));
            if hom.len() != image_hom.len() {
                return false;
            }
            let mut seen = vec![false; image_hom.len()];
            hom.iter().all(|&f| {
                let ff = func.mor(f);
                if t.ends(ff) != (func.obj(x), func.obj(y)) {
                    return false;
                }
                let k = t.hom_position(ff);
                !std::mem::replace(&mut seen[k], true)
            })
        })
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NatTransformData {
    pub source: Arc<FunctorData>,
    pub target: Arc<FunctorData>,
    /// `components[x] : F x → G x`.
    pub components: Vec<Mor>,
}

impl NatTransformData {
    pub fn new(source: Arc<FunctorData>, target: Arc<FunctorData>, components: Vec<Mor>) -> Self {
        NatTransformData {
            source,
            target,
            components,
        }
    }

    pub fn identity(f: &Arc<FunctorData>) -> NatTransformData {
        let components = f.source.objects().map(|x| f.target.identity(f.obj(x))).collect();
        NatTransformData::new(f.clone(), f.clone(), components)
    }

    pub fn validate(&self) -> Result<ValidationReport> {
        validate_natural_transformation(self)
    }

    pub fn is_iso(&self) -> bool {
        let t = &self.target.target;
        self.components.iter().all(|&c| t.is_invertible(c).is_some())
    }
}

pub(crate) fn check_parallel(f: &FunctorData, g: &FunctorData) -> Result<()> {
    if !same_category(&f.source, &g.source) || !same_category(&f.target, &g.target) {
        return Err(FinCatError::CategoryMismatch(
            "functors do not share source and target".into(),
        ));
    }
    Ok(())
}

/// Checks component typing (structural) and every naturality square
/// `G(f) ∘ η_x = η_y ∘ F(f)`; failing squares are reported as `(f, x, y)`.
pub fn validate_natural_transformation(eta: &NatTransformData) -> Result<ValidationReport> {
    let (f, g) = (&*eta.source, &*eta.target);
    check_parallel(f, g)?;
    let (s, t) = (&f.source, &f.target);
    if eta.components.len() != s.object_count() {
        return Err(FinCatError::Invalid(format!(
            "{} components for {} objects",
            eta.components.len(),
            s.object_count()
        )));
    }
    for x in s.objects() {
        let c = eta.components[x];
        t.check_mor(c)?;
        if t.ends(c) != (f.obj(x), g.obj(x)) {
            return Err(FinCatError::ComponentType {
                what: format!("component at object {x}"),
                morphism: c,
                expected: (f.obj(x), g.obj(x)),
                found: t.ends(c),
            });
        }
    }
    let mut log = FailureLog::default();
    for m in s.morphisms() {
        let (x, y) = s.ends(m);
        let left = t.composite(g.mor(m), eta.components[x]);
        let right = t.composite(eta.components[y], f.mor(m));
        if left.is_none() || left != right {
            log.push("naturality", [m, x, y]);
        }
    }
    Ok(log.finish())
}
