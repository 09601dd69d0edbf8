//! Exhaustive enumeration of functors and natural transformations, used as
//! the reference for the backtracking search.

use std::collections::BTreeSet;
use std::sync::Arc;

use fincat::{FinCategory, FunctorData, Mor, Obj};

/// Size of `∏ hom(Fx, Gx)`, saturating.
pub fn naive_space(f: &FunctorData, g: &FunctorData) -> u64 {
    f.source
        .objects()
        .map(|x| f.target.hom_size(f.obj(x), g.obj(x)) as u64)
        .fold(1u64, u64::saturating_mul)
}

/// Every component tuple in `∏ hom(Fx, Gx)` that is natural (and invertible
/// when `iso_only`), as a set.
pub fn naive_transformations(f: &FunctorData, g: &FunctorData, iso_only: bool) -> BTreeSet<Vec<Mor>> {
    let (s, t) = (&f.source, &f.target);
    let homs: Vec<Vec<Mor>> = s.objects().map(|x| t.hom(f.obj(x), g.obj(x)).to_vec()).collect();
    let mut out = BTreeSet::new();
    if homs.iter().any(|h| h.is_empty()) {
        return out;
    }
    let mut idx = vec![0usize; homs.len()];
    loop {
        let comps: Vec<Mor> = idx.iter().zip(&homs).map(|(&i, h)| h[i]).collect();
        let natural = s.morphisms().all(|m| {
            let (x, y) = s.ends(m);
            t.composite(g.mor(m), comps[x]) == t.composite(comps[y], f.mor(m))
        });
        let iso = comps.iter().all(|&c| t.is_invertible(c).is_some());
        if natural && (!iso_only || iso) {
            out.insert(comps);
        }
        let mut k = 0;
        loop {
            if k == idx.len() {
                return out;
            }
            idx[k] += 1;
            if idx[k] < homs[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

/// Every functor `s → t`, by brute force over object maps and then morphism
/// maps compatible with them. Only for tiny categories.
pub fn all_functors(s: &Arc<FinCategory>, t: &Arc<FinCategory>) -> Vec<Arc<FunctorData>> {
    let (n, m) = (s.object_count(), t.object_count());
    let mut out = Vec::new();
    let mut objects = vec![0 as Obj; n];
    loop {
        let mut morphisms = vec![0 as Mor; s.morphism_count()];
        extend_morphisms(s, t, &objects, &mut morphisms, 0, &mut out);
        let mut k = 0;
        loop {
            if k == n {
                return out;
            }
            objects[k] += 1;
            if objects[k] < m {
                break;
            }
            objects[k] = 0;
            k += 1;
        }
    }
}

fn extend_morphisms(
    s: &Arc<FinCategory>,
    t: &Arc<FinCategory>,
    objects: &[Obj],
    morphisms: &mut Vec<Mor>,
    next: usize,
    out: &mut Vec<Arc<FunctorData>>,
) {
    if next == morphisms.len() {
        let preserves = s.morphisms().all(|f| {
            s.morphisms().all(|g| match s.composite(g, f) {
                Some(gf) => t.composite(morphisms[g], morphisms[f]) == Some(morphisms[gf]),
                None => true,
            })
        });
        if preserves {
            let f = FunctorData::new(s.clone(), t.clone(), objects.to_vec(), morphisms.clone()).unwrap();
            out.push(Arc::new(f));
        }
        return;
    }
    let (a, b) = s.ends(next);
    let candidates: Vec<Mor> = if s.is_identity(next) {
        vec![t.identity(objects[a])]
    } else {
        t.hom(objects[a], objects[b]).to_vec()
    };
    for c in candidates {
        morphisms[next] = c;
        extend_morphisms(s, t, objects, morphisms, next + 1, out);
    }
}
