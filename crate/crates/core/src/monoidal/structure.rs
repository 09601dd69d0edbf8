//! Monoidal and braided structures with explicit component tables.

use std::sync::Arc;

use crate::category::{FinCategory, Mor, Obj};
use crate::constructions::{product_category, Product};
use crate::error::{FinCatError, Result};
use crate::functor::{same_category, validate_functor, FunctorData};
use crate::limits::{copair_from_coproduct, coproduct_map, pair_into_product, product_map, LimitCache};
use crate::report::{CoherenceReport, FailureLog};

/// A monoidal structure on a finite category.
///
/// Component tables are indexed lexicographically by object tuple:
/// `associator[(x·n + y)·n + z] : (x⊗y)⊗z → x⊗(y⊗z)`,
/// `left_unitor[x] : I⊗x → x`, `right_unitor[x] : x⊗I → x` and
/// `braiding[x·n + y] : x⊗y → y⊗x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoidalStructure {
    pub base: Arc<FinCategory>,
    /// `base × base`, the source of the tensor.
    pub square: Product,
    pub tensor: Arc<FunctorData>,
    pub unit: Obj,
    pub associator: Vec<Mor>,
    pub left_unitor: Vec<Mor>,
    pub right_unitor: Vec<Mor>,
    pub braiding: Option<Vec<Mor>>,
    /// Set when `base` is itself a product of the bases of two structures.
    pub product_of: Option<Product>,
}

pub(crate) fn same_structure(a: &Arc<MonoidalStructure>, b: &Arc<MonoidalStructure>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl MonoidalStructure {
    pub fn object_count(&self) -> usize {
        self.base.object_count()
    }

    #[inline]
    pub fn tensor_obj(&self, x: Obj, y: Obj) -> Obj {
        self.tensor.obj(self.square.pair(x, y))
    }

    #[inline]
    pub fn tensor_mor(&self, f: Mor, g: Mor) -> Mor {
        self.tensor.mor(self.square.pair_mor(f, g))
    }

    #[inline]
    pub fn associator(&self, x: Obj, y: Obj, z: Obj) -> Mor {
        let n = self.object_count();
        self.associator[(x * n + y) * n + z]
    }

    #[inline]
    pub fn left_unitor(&self, x: Obj) -> Mor {
        self.left_unitor[x]
    }

    #[inline]
    pub fn right_unitor(&self, x: Obj) -> Mor {
        self.right_unitor[x]
    }

    pub fn braiding(&self, x: Obj, y: Obj) -> Option<Mor> {
        let n = self.object_count();
        self.braiding.as_ref().map(|b| b[x * n + y])
    }

    pub fn is_braided(&self) -> bool {
        self.braiding.is_some()
    }

    /// `f⊗1_y`.
    pub fn tensor_id_right(&self, f: Mor, y: Obj) -> Mor {
        self.tensor_mor(f, self.base.identity(y))
    }

    /// `1_x⊗f`.
    pub fn tensor_id_left(&self, x: Obj, f: Mor) -> Mor {
        self.tensor_mor(self.base.identity(x), f)
    }

    /// The inverse of a structure component.
    pub fn inverse(&self, f: Mor) -> Result<Mor> {
        self.base
            .is_invertible(f)
            .ok_or_else(|| FinCatError::Invalid(format!("morphism {f} is not invertible")))
    }

    fn typed(&self, what: String, f: Mor, expected: (Obj, Obj)) -> Result<()> {
        self.base.check_mor(f)?;
        let found = self.base.ends(f);
        if found != expected {
            return Err(FinCatError::ComponentType {
                what,
                morphism: f,
                expected,
                found,
            });
        }
        Ok(())
    }

    fn check_shape(&self) -> Result<()> {
        let n = self.object_count();
        if self.square.arity() != 2
            || !same_category(&self.square.factors[0], &self.base)
            || !same_category(&self.square.factors[1], &self.base)
            || !same_category(&self.tensor.source, &self.square.category)
            || !same_category(&self.tensor.target, &self.base)
        {
            return Err(FinCatError::CategoryMismatch(
                "tensor is not a functor base × base → base".into(),
            ));
        }
        self.base.check_obj(self.unit)?;
        let lengths = [
            ("associator", self.associator.len(), n * n * n),
            ("left unitor", self.left_unitor.len(), n),
            ("right unitor", self.right_unitor.len(), n),
        ];
        for (what, got, want) in lengths {
            if got != want {
                return Err(FinCatError::Invalid(format!("{what} has {got} components, expected {want}")));
            }
        }
        if let Some(b) = &self.braiding {
            if b.len() != n * n {
                return Err(FinCatError::Invalid(format!(
                    "braiding has {} components, expected {}",
                    b.len(),
                    n * n
                )));
            }
        }
        Ok(())
    }

    fn check_component_types(&self) -> Result<()> {
        let c = &self.base;
        let t = |x, y| self.tensor_obj(x, y);
        for x in c.objects() {
            for y in c.objects() {
                for z in c.objects() {
                    self.typed(
                        format!("associator at ({x}, {y}, {z})"),
                        self.associator(x, y, z),
                        (t(t(x, y), z), t(x, t(y, z))),
                    )?;
                }
            }
            self.typed(format!("left unitor at {x}"), self.left_unitor(x), (t(self.unit, x), x))?;
            self.typed(format!("right unitor at {x}"), self.right_unitor(x), (t(x, self.unit), x))?;
        }
        Ok(())
    }

    fn check_braiding_types(&self) -> Result<()> {
        let c = &self.base;
        for x in c.objects() {
            for y in c.objects() {
                let g = self.braiding(x, y).ok_or(FinCatError::BraidingAbsent)?;
                self.typed(
                    format!("braiding at ({x}, {y})"),
                    g,
                    (self.tensor_obj(x, y), self.tensor_obj(y, x)),
                )?;
            }
        }
        Ok(())
    }
}

fn path(c: &FinCategory, morphisms: &[Mor]) -> Option<Mor> {
    let (&first, rest) = morphisms.split_first()?;
    rest.iter().try_fold(first, |acc, &g| c.composite(g, acc))
}

/// Checks tensor functoriality, invertibility and naturality of the
/// associator and unitors, the pentagon on all quadruples and the triangle on
/// all pairs. Ill-typed components are structural errors.
pub fn validate_monoidal(m: &MonoidalStructure) -> Result<CoherenceReport> {
    m.check_shape()?;
    m.check_component_types()?;
    let c = &*m.base;
    let mut log = FailureLog::default();
    for failure in validate_functor(&m.tensor)?.failures {
        log.push(&format!("tensor {}", failure.law), failure.indices);
    }
    let n = c.object_count();
    let inv = |f: Mor| c.is_invertible(f);
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if inv(m.associator(x, y, z)).is_none() {
                    log.push("associator invertible", [x, y, z]);
                }
            }
        }
        if inv(m.left_unitor(x)).is_none() {
            log.push("left unitor invertible", [x]);
        }
        if inv(m.right_unitor(x)).is_none() {
            log.push("right unitor invertible", [x]);
        }
    }

    let id = |x: Obj| c.identity(x);
    let t = |f: Mor, g: Mor| m.tensor_mor(f, g);
    // Naturality one variable at a time; `f : u → v` in the varying slot.
    for f in c.morphisms() {
        let (u, v) = c.ends(f);
        for y in 0..n {
            for z in 0..n {
                let lhs = path(c, &[t(t(f, id(y)), id(z)), m.associator(v, y, z)]);
                let rhs = path(c, &[m.associator(u, y, z), t(f, t(id(y), id(z)))]);
                if lhs.is_none() || lhs != rhs {
                    log.push("associator naturality", [f, y, z, 0]);
                }
                let lhs = path(c, &[t(t(id(y), f), id(z)), m.associator(y, v, z)]);
                let rhs = path(c, &[m.associator(y, u, z), t(id(y), t(f, id(z)))]);
                if lhs.is_none() || lhs != rhs {
                    log.push("associator naturality", [f, y, z, 1]);
                }
                let lhs = path(c, &[t(t(id(y), id(z)), f), m.associator(y, z, v)]);
                let rhs = path(c, &[m.associator(y, z, u), t(id(y), t(id(z), f))]);
                if lhs.is_none() || lhs != rhs {
                    log.push("associator naturality", [f, y, z, 2]);
                }
            }
        }
        let lhs = path(c, &[m.left_unitor(u), f]);
        let rhs = path(c, &[t(id(m.unit), f), m.left_unitor(v)]);
        if lhs.is_none() || lhs != rhs {
            log.push("left unitor naturality", [f]);
        }
        let lhs = path(c, &[m.right_unitor(u), f]);
        let rhs = path(c, &[t(f, id(m.unit)), m.right_unitor(v)]);
        if lhs.is_none() || lhs != rhs {
            log.push("right unitor naturality", [f]);
        }
    }

    let o = |x: Obj, y: Obj| m.tensor_obj(x, y);
    for w in 0..n {
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let lhs = path(c, &[m.associator(o(w, x), y, z), m.associator(w, x, o(y, z))]);
                    let rhs = path(
                        c,
                        &[
                            t(m.associator(w, x, y), id(z)),
                            m.associator(w, o(x, y), z),
                            t(id(w), m.associator(x, y, z)),
                        ],
                    );
                    if lhs.is_none() || lhs != rhs {
                        log.push("pentagon", [w, x, y, z]);
                    }
                }
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            let lhs = path(c, &[m.associator(x, m.unit, y), t(id(x), m.left_unitor(y))]);
            let rhs = Some(t(m.right_unitor(x), id(y)));
            if lhs.is_none() || lhs != rhs {
                log.push("triangle", [x, y]);
            }
        }
    }
    Ok(log.finish())
}

/// Checks invertibility and naturality of the braiding and both hexagons.
pub fn validate_braiding(m: &MonoidalStructure) -> Result<CoherenceReport> {
    m.check_shape()?;
    if !m.is_braided() {
        return Err(FinCatError::BraidingAbsent);
    }
    m.check_component_types()?;
    m.check_braiding_types()?;
    let c = &*m.base;
    let n = c.object_count();
    let mut log = FailureLog::default();
    let g = |x: Obj, y: Obj| m.braiding(x, y).expect("braided");
    let id = |x: Obj| c.identity(x);
    let t = |f: Mor, h: Mor| m.tensor_mor(f, h);
    let o = |x: Obj, y: Obj| m.tensor_obj(x, y);
    for x in 0..n {
        for y in 0..n {
            if c.is_invertible(g(x, y)).is_none() {
                log.push("braiding invertible", [x, y]);
            }
        }
    }
    for f in c.morphisms() {
        let (u, v) = c.ends(f);
        for y in 0..n {
            let lhs = path(c, &[g(u, y), t(id(y), f)]);
            let rhs = path(c, &[t(f, id(y)), g(v, y)]);
            if lhs.is_none() || lhs != rhs {
                log.push("braiding naturality", [f, y, 0]);
            }
            let lhs = path(c, &[g(y, u), t(f, id(y))]);
            let rhs = path(c, &[t(id(y), f), g(y, v)]);
            if lhs.is_none() || lhs != rhs {
                log.push("braiding naturality", [f, y, 1]);
            }
        }
    }
    let inv = |f: Mor| c.is_invertible(f);
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let lhs = path(c, &[m.associator(x, y, z), g(x, o(y, z)), m.associator(y, z, x)]);
                let rhs = path(
                    c,
                    &[t(g(x, y), id(z)), m.associator(y, x, z), t(id(y), g(x, z))],
                );
                if lhs.is_none() || lhs != rhs {
                    log.push("hexagon 1", [x, y, z]);
                }
                let inverses = (
                    inv(m.associator(x, y, z)),
                    inv(m.associator(z, x, y)),
                    inv(m.associator(x, z, y)),
                );
                let ok = match inverses {
                    (Some(a), Some(b), Some(d)) => {
                        let lhs = path(c, &[a, g(o(x, y), z), b]);
                        let rhs = path(c, &[t(id(x), g(y, z)), d, t(g(x, z), id(y))]);
                        lhs.is_some() && lhs == rhs
                    }
                    _ => false,
                };
                if !ok {
                    log.push("hexagon 2", [x, y, z]);
                }
            }
        }
    }
    Ok(log.finish())
}

fn square_of(c: &Arc<FinCategory>) -> Result<Product> {
    product_category(&[c.clone(), c.clone()])
}

fn tensor_from(
    c: &Arc<FinCategory>,
    square: &Product,
    obj: impl Fn(Obj, Obj) -> Result<Obj>,
    mor: impl Fn(Mor, Mor) -> Result<Mor>,
) -> Result<FunctorData> {
    let sq = &square.category;
    let object_map = sq
        .objects()
        .map(|p| {
            let (x, y) = square.unpair(p);
            obj(x, y)
        })
        .collect::<Result<Vec<_>>>()?;
    let morphism_map = sq
        .morphisms()
        .map(|h| {
            let (f, g) = square.unpair_mor(h);
            mor(f, g)
        })
        .collect::<Result<Vec<_>>>()?;
    FunctorData::new(sq.clone(), c.clone(), object_map, morphism_map)
}

fn triples<T>(n: usize, mut f: impl FnMut(Obj, Obj, Obj) -> Result<T>) -> Result<Vec<T>> {
    let mut out = Vec::with_capacity(n * n * n);
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                out.push(f(x, y, z)?);
            }
        }
    }
    Ok(out)
}

fn pairs<T>(n: usize, mut f: impl FnMut(Obj, Obj) -> Result<T>) -> Result<Vec<T>> {
    let mut out = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            out.push(f(x, y)?);
        }
    }
    Ok(out)
}

/// Products as tensor and the terminal object as unit; every component is a
/// mediating map.
pub fn cartesian_monoidal(c: &Arc<FinCategory>, cache: &LimitCache) -> Result<MonoidalStructure> {
    let unit = cache.require_terminal()?;
    if let Some(&(x, y)) = cache.missing_products().first() {
        return Err(FinCatError::LimitAbsent(format!("product of {x} and {y}")));
    }
    let n = c.object_count();
    let square = square_of(c)?;
    let apex = |x, y| cache.require_product(x, y).map(|w| w.apex);
    let tensor = tensor_from(c, &square, apex, |f, g| product_map(c, cache, f, g))?;
    let associator = triples(n, |x, y, z| {
        let xy = cache.require_product(x, y)?;
        let left = cache.require_product(xy.apex, z)?;
        let yz = cache.require_product(y, z)?;
        let right = cache.require_product(x, yz.apex)?;
        let to_y = c.compose(xy.projections.1, left.projections.0)?;
        let inner = pair_into_product(c, yz, to_y, left.projections.1)?;
        let to_x = c.compose(xy.projections.0, left.projections.0)?;
        pair_into_product(c, right, to_x, inner)
    })?;
    let left_unitor = c
        .objects()
        .map(|x| cache.require_product(unit, x).map(|w| w.projections.1))
        .collect::<Result<Vec<_>>>()?;
    let right_unitor = c
        .objects()
        .map(|x| cache.require_product(x, unit).map(|w| w.projections.0))
        .collect::<Result<Vec<_>>>()?;
    let braiding = pairs(n, |x, y| {
        let w = cache.require_product(x, y)?;
        let swapped = cache.require_product(y, x)?;
        pair_into_product(c, swapped, w.projections.1, w.projections.0)
    })?;
    Ok(MonoidalStructure {
        base: c.clone(),
        square,
        tensor: Arc::new(tensor),
        unit,
        associator,
        left_unitor,
        right_unitor,
        braiding: Some(braiding),
        product_of: None,
    })
}

/// Coproducts as tensor and the initial object as unit.
pub fn cocartesian_monoidal(c: &Arc<FinCategory>, cache: &LimitCache) -> Result<MonoidalStructure> {
    let unit = cache.require_initial()?;
    if let Some(&(x, y)) = cache.missing_coproducts().first() {
        return Err(FinCatError::LimitAbsent(format!("coproduct of {x} and {y}")));
    }
    let n = c.object_count();
    let square = square_of(c)?;
    let apex = |x, y| cache.require_coproduct(x, y).map(|w| w.apex);
    let tensor = tensor_from(c, &square, apex, |f, g| coproduct_map(c, cache, f, g))?;
    let associator = triples(n, |x, y, z| {
        let xy = cache.require_coproduct(x, y)?;
        let left = cache.require_coproduct(xy.apex, z)?;
        let yz = cache.require_coproduct(y, z)?;
        let right = cache.require_coproduct(x, yz.apex)?;
        let from_y = c.compose(right.injections.1, yz.injections.0)?;
        let inner = copair_from_coproduct(c, xy, right.injections.0, from_y)?;
        let from_z = c.compose(right.injections.1, yz.injections.1)?;
        copair_from_coproduct(c, left, inner, from_z)
    })?;
    let from_unit = |x: Obj| c.hom(unit, x)[0];
    let left_unitor = c
        .objects()
        .map(|x| {
            let w = cache.require_coproduct(unit, x)?;
            copair_from_coproduct(c, w, from_unit(x), c.identity(x))
        })
        .collect::<Result<Vec<_>>>()?;
    let right_unitor = c
        .objects()
        .map(|x| {
            let w = cache.require_coproduct(x, unit)?;
            copair_from_coproduct(c, w, c.identity(x), from_unit(x))
        })
        .collect::<Result<Vec<_>>>()?;
    let braiding = pairs(n, |x, y| {
        let w = cache.require_coproduct(x, y)?;
        let swapped = cache.require_coproduct(y, x)?;
        copair_from_coproduct(c, w, swapped.injections.1, swapped.injections.0)
    })?;
    Ok(MonoidalStructure {
        base: c.clone(),
        square,
        tensor: Arc::new(tensor),
        unit,
        associator,
        left_unitor,
        right_unitor,
        braiding: Some(braiding),
        product_of: None,
    })
}

/// The strict symmetric structure on a one-object category whose morphisms
/// commute: `f ⊗ g = g ∘ f`, all components identities.
pub fn commutative_monoid_monoidal(c: &Arc<FinCategory>) -> Result<MonoidalStructure> {
    if c.object_count() != 1 {
        return Err(FinCatError::InvalidParameter(format!(
            "expected a one-object category, got {} objects",
            c.object_count()
        )));
    }
    for f in c.morphisms() {
        for g in c.morphisms() {
            if c.composite(g, f) != c.composite(f, g) {
                return Err(FinCatError::InvalidParameter(format!(
                    "morphisms {f} and {g} do not commute"
                )));
            }
        }
    }
    let square = square_of(c)?;
    let tensor = tensor_from(c, &square, |_, _| Ok(0), |f, g| c.compose(g, f))?;
    let id = c.identity(0);
    Ok(MonoidalStructure {
        base: c.clone(),
        square,
        tensor: Arc::new(tensor),
        unit: 0,
        associator: vec![id],
        left_unitor: vec![id],
        right_unitor: vec![id],
        braiding: Some(vec![id]),
        product_of: None,
    })
}

/// The componentwise structure on `C1 × C2`. Pass `base` to reuse an existing
/// product of the two bases.
pub fn product_monoidal(
    m1: &MonoidalStructure,
    m2: &MonoidalStructure,
    base: Option<&Product>,
) -> Result<MonoidalStructure> {
    let base = match base {
        Some(p) => {
            if p.arity() != 2
                || !same_category(&p.factors[0], &m1.base)
                || !same_category(&p.factors[1], &m2.base)
            {
                return Err(FinCatError::CategoryMismatch(
                    "supplied product does not match the structures".into(),
                ));
            }
            p.clone()
        }
        None => product_category(&[m1.base.clone(), m2.base.clone()])?,
    };
    let pc = base.category.clone();
    let n = pc.object_count();
    let square = square_of(&pc)?;
    let tensor = tensor_from(
        &pc,
        &square,
        |p, q| {
            let ((x1, x2), (y1, y2)) = (base.unpair(p), base.unpair(q));
            Ok(base.pair(m1.tensor_obj(x1, y1), m2.tensor_obj(x2, y2)))
        },
        |f, g| {
            let ((f1, f2), (g1, g2)) = (base.unpair_mor(f), base.unpair_mor(g));
            Ok(base.pair_mor(m1.tensor_mor(f1, g1), m2.tensor_mor(f2, g2)))
        },
    )?;
    let associator = triples(n, |p, q, r| {
        let ((x1, x2), (y1, y2), (z1, z2)) = (base.unpair(p), base.unpair(q), base.unpair(r));
        Ok(base.pair_mor(m1.associator(x1, y1, z1), m2.associator(x2, y2, z2)))
    })?;
    let unitor = |l: bool| {
        pc.objects()
            .map(|p| {
                let (x1, x2) = base.unpair(p);
                if l {
                    base.pair_mor(m1.left_unitor(x1), m2.left_unitor(x2))
                } else {
                    base.pair_mor(m1.right_unitor(x1), m2.right_unitor(x2))
                }
            })
            .collect::<Vec<_>>()
    };
    let braiding = if m1.is_braided() && m2.is_braided() {
        Some(pairs(n, |p, q| {
            let ((x1, x2), (y1, y2)) = (base.unpair(p), base.unpair(q));
            Ok(base.pair_mor(
                m1.braiding(x1, y1).expect("braided"),
                m2.braiding(x2, y2).expect("braided"),
            ))
        })?)
    } else {
        None
    };
    let (left_unitor, right_unitor) = (unitor(true), unitor(false));
    Ok(MonoidalStructure {
        base: pc,
        square,
        tensor: Arc::new(tensor),
        unit: base.pair(m1.unit, m2.unit),
        associator,
        left_unitor,
        right_unitor,
        braiding,
        product_of: Some(base),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::generators::*;

    fn cart(c: FinCategory) -> MonoidalStructure {
        let c = Arc::new(c);
        let cache = LimitCache::build(&c);
        cartesian_monoidal(&c, &cache).unwrap()
    }

    fn cocart(c: FinCategory) -> MonoidalStructure {
        let c = Arc::new(c);
        let cache = LimitCache::build(&c);
        cocartesian_monoidal(&c, &cache).unwrap()
    }

    #[test]
    fn cartesian_chain_is_meet() {
        let m = cart(gen_chain(2).unwrap());
        assert_eq!(m.unit, 1);
        assert_eq!(m.tensor_obj(0, 1), 0);
        assert_eq!(m.tensor_obj(1, 1), 1);
        assert!(validate_monoidal(&m).unwrap().ok);
        assert!(validate_braiding(&m).unwrap().ok);
        let m = cart(gen_chain(3).unwrap());
        assert!(validate_monoidal(&m).unwrap().ok);
    }

    #[test]
    fn cartesian_boolean_algebra_is_intersection() {
        let m = cart(gen_boolean_algebra(2).unwrap());
        assert_eq!(m.base.object_name(m.unit), "{1,2}");
        let (a, b) = (m.base.object_by_name("{1}").unwrap(), m.base.object_by_name("{2}").unwrap());
        assert_eq!(m.base.object_name(m.tensor_obj(a, b)), "{}");
    }

    #[test]
    fn cocartesian_m3_validates() {
        let m = cocart(gen_m3());
        assert!(validate_monoidal(&m).unwrap().ok);
        assert!(validate_braiding(&m).unwrap().ok);
    }

    #[test]
    fn terminal_structures_are_trivial() {
        let m = cart(gen_terminal());
        assert_eq!(m.associator, vec![0]);
        assert!(validate_monoidal(&m).unwrap().ok);
        assert!(validate_braiding(&m).unwrap().ok);
    }

    #[test]
    fn missing_limits_are_errors() {
        let c = Arc::new(gen_bool_matrix(2).unwrap());
        let cache = LimitCache::build(&c);
        assert!(matches!(cartesian_monoidal(&c, &cache), Err(FinCatError::LimitAbsent(_))));
        assert!(matches!(cocartesian_monoidal(&c, &cache), Err(FinCatError::LimitAbsent(_))));
    }

    #[test]
    fn associator_mutation_names_the_quadruple() {
        let c = Arc::new(gen_cyclic_group(2).unwrap());
        let mut m = commutative_monoid_monoidal(&c).unwrap();
        assert!(validate_monoidal(&m).unwrap().ok);
        m.associator[0] = 1;
        let r = validate_monoidal(&m).unwrap();
        assert!(r.has_law("pentagon"));
        assert!(r.has_law("triangle"));
        assert!(r.failures.iter().any(|f| f.law == "pentagon" && f.indices == vec![0, 0, 0, 0]));
    }

    #[test]
    fn mistyped_component_is_structural() {
        let mut m = cart(gen_chain(2).unwrap());
        m.left_unitor[0] = m.base.identity(1);
        assert!(matches!(validate_monoidal(&m), Err(FinCatError::ComponentType { .. })));
    }

    #[test]
    fn braiding_mutation_fails() {
        let c = Arc::new(gen_boolean_monoid());
        let mut m = commutative_monoid_monoidal(&c).unwrap();
        assert!(validate_braiding(&m).unwrap().ok);
        m.braiding = Some(vec![1]);
        let r = validate_braiding(&m).unwrap();
        assert!(r.has_law("braiding invertible"));
        // The hexagons only see idempotent composites here.
        assert!(!r.has_law("hexagon 1"));
        let z2 = Arc::new(gen_cyclic_group(2).unwrap());
        let mut g = commutative_monoid_monoidal(&z2).unwrap();
        g.braiding = Some(vec![1]);
        let r = validate_braiding(&g).unwrap();
        assert!(r.has_law("hexagon 1"));
        assert!(r.has_law("hexagon 2"));
        m.braiding = None;
        assert_eq!(validate_braiding(&m).unwrap_err(), FinCatError::BraidingAbsent);
    }

    #[test]
    fn non_commutative_monoid_is_rejected() {
        // Left-zero semigroup with a unit adjoined: x ∘ y = x.
        let table = vec![vec![0, 1, 2], vec![1, 1, 1], vec![2, 2, 2]];
        let c = Arc::new(gen_monoid(&table, vec!["e".into(), "x".into(), "y".into()]).unwrap());
        assert!(commutative_monoid_monoidal(&c).is_err());
    }

    #[test]
    fn product_structure_validates() {
        let a = cart(gen_chain(2).unwrap());
        let b = cocart(gen_chain(2).unwrap());
        let p = product_monoidal(&a, &b, None).unwrap();
        assert_eq!(p.base.object_count(), 4);
        assert_eq!(p.unit, p.product_of.as_ref().unwrap().pair(1, 0));
        assert!(validate_monoidal(&p).unwrap().ok);
        assert!(validate_braiding(&p).unwrap().ok);
    }
}
