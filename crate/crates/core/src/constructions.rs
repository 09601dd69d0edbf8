//! Product categories and slice categories.

use std::sync::Arc;

use crate::category::{FinCategory, Mor, Obj};
use crate::error::{FinCatError, Result};
use crate::functor::FunctorData;

/// A product category `C1 × … × Ck` together with its factors.
///
/// Objects and morphisms are tuples encoded lexicographically (row-major):
/// the tuple `(x1, …, xk)` has index `((x1·n2 + x2)·n3 + x3)…` where `ni` is
/// the object (resp. morphism) count of factor `i`. The encoding is stable and
/// is what serialized indices refer to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Product {
    pub category: Arc<FinCategory>,
    pub factors: Vec<Arc<FinCategory>>,
}

fn encode(parts: &[usize], radix: impl Iterator<Item = usize>) -> usize {
    parts.iter().zip(radix).fold(0, |acc, (&p, r)| acc * r + p)
}

fn decode(mut index: usize, radix: &[usize]) -> Vec<usize> {
    let mut parts = vec![0; radix.len()];
    for (slot, &r) in parts.iter_mut().zip(radix).rev() {
        *slot = index % r;
        index /= r;
    }
    parts
}

impl Product {
    pub fn arity(&self) -> usize {
        self.factors.len()
    }

    pub fn object(&self, parts: &[Obj]) -> Obj {
        debug_assert_eq!(parts.len(), self.factors.len());
        encode(parts, self.factors.iter().map(|c| c.object_count()))
    }

    pub fn morphism(&self, parts: &[Mor]) -> Mor {
        debug_assert_eq!(parts.len(), self.factors.len());
        encode(parts, self.factors.iter().map(|c| c.morphism_count()))
    }

    pub fn object_parts(&self, x: Obj) -> Vec<Obj> {
        let radix: Vec<usize> = self.factors.iter().map(|c| c.object_count()).collect();
        decode(x, &radix)
    }

    pub fn morphism_parts(&self, f: Mor) -> Vec<Mor> {
        let radix: Vec<usize> = self.factors.iter().map(|c| c.morphism_count()).collect();
        decode(f, &radix)
    }

    /// Binary shorthand for [`Product::object`].
    pub fn pair(&self, x: Obj, y: Obj) -> Obj {
        x * self.factors[1].object_count() + y
    }

    pub fn pair_mor(&self, f: Mor, g: Mor) -> Mor {
        f * self.factors[1].morphism_count() + g
    }

    pub fn unpair(&self, x: Obj) -> (Obj, Obj) {
        let n = self.factors[1].object_count();
        (x / n, x % n)
    }

    pub fn unpair_mor(&self, f: Mor) -> (Mor, Mor) {
        let n = self.factors[1].morphism_count();
        (f / n, f % n)
    }
}

/// The product of a non-empty list of categories, composed componentwise.
pub fn product_category(factors: &[Arc<FinCategory>]) -> Result<Product> {
    if factors.is_empty() {
        return Err(FinCatError::EmptyProduct);
    }
    let obj_radix: Vec<usize> = factors.iter().map(|c| c.object_count()).collect();
    let mor_radix: Vec<usize> = factors.iter().map(|c| c.morphism_count()).collect();
    let object_count: usize = obj_radix.iter().product();
    let morphism_count: usize = mor_radix.iter().product();

    let morphisms: Vec<(Obj, Obj)> = (0..morphism_count)
        .map(|f| {
            let parts = decode(f, &mor_radix);
            let s: Vec<Obj> = parts.iter().zip(factors).map(|(&p, c)| c.src(p)).collect();
            let d: Vec<Obj> = parts.iter().zip(factors).map(|(&p, c)| c.dst(p)).collect();
            (encode(&s, obj_radix.iter().copied()), encode(&d, obj_radix.iter().copied()))
        })
        .collect();
    let identities: Vec<Mor> = (0..object_count)
        .map(|x| {
            let parts = decode(x, &obj_radix);
            let ids: Vec<Mor> = parts.iter().zip(factors).map(|(&p, c)| c.identity(p)).collect();
            encode(&ids, mor_radix.iter().copied())
        })
        .collect();
    let category = FinCategory::from_fn(object_count, &morphisms, identities, |g, f| {
        let gs = decode(g, &mor_radix);
        let fs = decode(f, &mor_radix);
        let parts: Vec<Mor> = gs
            .iter()
            .zip(&fs)
            .zip(factors)
            .map(|((&g, &f), c)| c.composite(g, f).expect("componentwise composable"))
            .collect();
        encode(&parts, mor_radix.iter().copied())
    })?;

    let category = if factors.iter().any(|c| c.object_names().is_some()) {
        let names = (0..object_count)
            .map(|x| {
                let parts = decode(x, &obj_radix);
                let inner: Vec<String> =
                    parts.iter().zip(factors).map(|(&p, c)| c.object_name(p)).collect();
                format!("({})", inner.join(","))
            })
            .collect();
        category.with_object_names(names)?
    } else {
        category
    };

    Ok(Product {
        category: Arc::new(category),
        factors: factors.to_vec(),
    })
}

/// The slice category `C/x` and its projection to `C`.
///
/// Objects of the slice are the morphisms into `x`, in ascending index order;
/// a morphism from `u: a → x` to `v: b → x` is an `h: a → b` with `v ∘ h = u`.
pub fn slice_category(c: &Arc<FinCategory>, x: Obj) -> Result<(Arc<FinCategory>, FunctorData)> {
    c.check_obj(x)?;
    let slice_objects: Vec<Mor> = c.morphisms().filter(|&f| c.dst(f) == x).collect();
    let mut index_of = vec![usize::MAX; c.morphism_count()];
    for (i, &u) in slice_objects.iter().enumerate() {
        index_of[u] = i;
    }

    let mut morphisms = Vec::new();
    let mut under = Vec::new();
    for (i, &u) in slice_objects.iter().enumerate() {
        for (j, &v) in slice_objects.iter().enumerate() {
            for &h in c.hom(c.src(u), c.src(v)) {
                if c.composite(v, h) == Some(u) {
                    morphisms.push((i, j));
                    under.push(h);
                }
            }
        }
    }
    let mut lookup = std::collections::HashMap::new();
    for (k, (&(i, j), &h)) in morphisms.iter().zip(&under).enumerate() {
        lookup.insert((i, j, h), k);
    }
    let identities: Vec<Mor> = slice_objects
        .iter()
        .enumerate()
        .map(|(i, &u)| lookup[&(i, i, c.identity(c.src(u)))])
        .collect();
    let slice = FinCategory::from_fn(slice_objects.len(), &morphisms, identities, |g, f| {
        let (i, _) = morphisms[f];
        let (_, k) = morphisms[g];
        let h = c.composite(under[g], under[f]).expect("composable underlying maps");
        lookup[&(i, k, h)]
    })?;
    let names = slice_objects.iter().map(|&u| c.morphism_name(u)).collect();
    let slice = Arc::new(slice.with_object_names(names)?);
    let projection = FunctorData::new(
        slice.clone(),
        c.clone(),
        slice_objects.iter().map(|&u| c.src(u)).collect(),
        under,
    )?;
    Ok((slice, projection))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::generators::{gen_chain, gen_m3, gen_terminal};

    #[test]
    fn encoding_round_trips() {
        let chain = Arc::new(gen_chain(3).unwrap());
        let p = product_category(&[chain.clone(), chain.clone(), chain]).unwrap();
        for x in p.category.objects() {
            assert_eq!(p.object(&p.object_parts(x)), x);
        }
        for f in p.category.morphisms() {
            assert_eq!(p.morphism(&p.morphism_parts(f)), f);
        }
        assert_eq!(p.object(&[1, 0, 2]), 1 * 9 + 2);
    }

    #[test]
    fn product_sizes() {
        let t = Arc::new(gen_terminal());
        let tt = product_category(&[t.clone(), t]).unwrap();
        assert_eq!(tt.category.object_count(), 1);
        assert_eq!(tt.category.morphism_count(), 1);

        let c2 = Arc::new(gen_chain(2).unwrap());
        let sq = product_category(&[c2.clone(), c2]).unwrap();
        assert_eq!(sq.category.object_count(), 4);
        assert_eq!(sq.category.morphism_count(), 9);
        assert!(sq.category.validate().ok);

        let m3 = Arc::new(gen_m3());
        let cube = product_category(&[m3.clone(), m3.clone(), m3]).unwrap();
        assert_eq!(cube.category.object_count(), 125);
        assert_eq!(cube.category.morphism_count(), 1728);
    }

    #[test]
    fn empty_product_is_an_error() {
        assert_eq!(product_category(&[]).unwrap_err(), FinCatError::EmptyProduct);
    }

    #[test]
    fn slice_over_bottom_of_m3() {
        let m3 = Arc::new(gen_m3());
        let (s, p) = slice_category(&m3, 0).unwrap();
        assert_eq!(s.object_count(), 1);
        assert_eq!(s.morphism_count(), 1);
        assert!(s.validate().ok);
        assert!(p.validate().unwrap().ok);
    }

    #[test]
    fn slice_of_chain_over_top_is_the_chain() {
        let c = Arc::new(gen_chain(2).unwrap());
        let (s, p) = slice_category(&c, 1).unwrap();
        assert_eq!(s.object_count(), 2);
        assert_eq!(s.morphism_count(), 3);
        // The projection is bijective on objects and morphisms.
        let mut objs = p.object_map.clone();
        objs.sort();
        assert_eq!(objs, vec![0, 1]);
        let mut mors = p.morphism_map.clone();
        mors.sort();
        assert_eq!(mors, vec![0, 1, 2]);
        assert!(p.validate().unwrap().ok);
    }

    #[test]
    fn slice_of_terminal() {
        let t = Arc::new(gen_terminal());
        let (s, _) = slice_category(&t, 0).unwrap();
        assert!(s.is_trivial());
    }
}
