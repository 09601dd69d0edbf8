//! Finite categories with dense indices and a total composition table.
//!
//! Objects are `0..object_count` and morphisms `0..morphism_count`. Every
//! morphism has a source and target object, every object an identity, and the
//! composite `g ∘ f` is stored for exactly the pairs with `dst(f) == src(g)`.
//! Equality of objects and morphisms is index equality.

use std::fmt;
use std::ops::Range;

use crate::error::{FinCatError, Result};
use crate::report::{FailureLog, ValidationReport};

/// Dense object index.
pub type Obj = usize;
/// Dense morphism index.
pub type Mor = usize;

const NONE: u32 = u32::MAX;

#[derive(Clone, PartialEq, Eq)]
pub struct FinCategory {
    object_count: usize,
    src: Vec<Obj>,
    dst: Vec<Obj>,
    identities: Vec<Mor>,
    // Outgoing morphisms of each object, sorted by (dst, index), in CSR form.
    out_start: Vec<usize>,
    out: Vec<Mor>,
    // Position of each morphism inside the outgoing block of its source.
    out_pos: Vec<usize>,
    // Position of each morphism inside its hom-set.
    hom_local: Vec<usize>,
    // comp[comp_offset[f] + out_pos[g]] = g ∘ f for every g leaving dst(f).
    comp_offset: Vec<usize>,
    comp: Vec<u32>,
    object_names: Option<Vec<String>>,
    morphism_names: Vec<Option<String>>,
}

impl fmt::Debug for FinCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FinCategory")
            .field("objects", &self.object_count)
            .field("morphisms", &self.src.len())
            .finish()
    }
}

impl FinCategory {
    fn skeleton(
        object_count: usize,
        morphisms: &[(Obj, Obj)],
        identities: Vec<Mor>,
    ) -> Result<FinCategory> {
        let m = morphisms.len();
        if m >= NONE as usize {
            return Err(FinCatError::InvalidParameter(format!(
                "{m} morphisms exceed the supported table size"
            )));
        }
        if identities.len() != object_count {
            return Err(FinCatError::Invalid(format!(
                "{} identities for {} objects",
                identities.len(),
                object_count
            )));
        }
        for &(s, d) in morphisms {
            for x in [s, d] {
                if x >= object_count {
                    return Err(FinCatError::IndexOutOfRange {
                        kind: "object",
                        index: x,
                        bound: object_count,
                    });
                }
            }
        }
        for &id in &identities {
            if id >= m {
                return Err(FinCatError::IndexOutOfRange {
                    kind: "morphism",
                    index: id,
                    bound: m,
                });
            }
        }
        let src: Vec<Obj> = morphisms.iter().map(|p| p.0).collect();
        let dst: Vec<Obj> = morphisms.iter().map(|p| p.1).collect();

        let mut out: Vec<Mor> = (0..m).collect();
        out.sort_by_key(|&f| (src[f], dst[f], f));
        let mut out_start = vec![0usize; object_count + 1];
        for &f in &out {
            out_start[src[f] + 1] += 1;
        }
        for x in 0..object_count {
            out_start[x + 1] += out_start[x];
        }
        let mut out_pos = vec![0usize; m];
        let mut hom_local = vec![0usize; m];
        for x in 0..object_count {
            let block = &out[out_start[x]..out_start[x + 1]];
            let mut run = 0;
            for (i, &f) in block.iter().enumerate() {
                out_pos[f] = i;
                if i > 0 && dst[block[i - 1]] == dst[f] {
                    run += 1;
                } else {
                    run = 0;
                }
                hom_local[f] = run;
            }
        }
        let mut comp_offset = vec![0usize; m];
        let mut total = 0usize;
        for f in 0..m {
            comp_offset[f] = total;
            let d = dst[f];
            total += out_start[d + 1] - out_start[d];
        }
        Ok(FinCategory {
            object_count,
            src,
            dst,
            identities,
            out_start,
            out,
            out_pos,
            hom_local,
            comp_offset,
            comp: vec![NONE; total],
            object_names: None,
            morphism_names: vec![None; m],
        })
    }

    /// Builds a category from explicit `(g, f, g∘f)` triples.
    ///
    /// Only structural problems are errors here (out-of-range indices, a
    /// missing, duplicated or non-composable entry); the category axioms are
    /// checked by [`FinCategory::validate`].
    pub fn from_triples(
        object_count: usize,
        morphisms: &[(Obj, Obj)],
        identities: Vec<Mor>,
        triples: impl IntoIterator<Item = (Mor, Mor, Mor)>,
    ) -> Result<FinCategory> {
        let mut c = Self::skeleton(object_count, morphisms, identities)?;
        let m = c.src.len();
        for (g, f, h) in triples {
            for x in [g, f, h] {
                if x >= m {
                    return Err(FinCatError::IndexOutOfRange {
                        kind: "morphism",
                        index: x,
                        bound: m,
                    });
                }
            }
            if c.dst[f] != c.src[g] {
                return Err(FinCatError::UnexpectedComposite { g, f });
            }
            let slot = c.comp_offset[f] + c.out_pos[g];
            if c.comp[slot] != NONE {
                return Err(FinCatError::DuplicateComposite { g, f });
            }
            c.comp[slot] = h as u32;
        }
        for f in 0..m {
            let d = c.dst[f];
            for &g in &c.out[c.out_start[d]..c.out_start[d + 1]] {
                if c.comp[c.comp_offset[f] + c.out_pos[g]] == NONE {
                    return Err(FinCatError::MissingComposite { g, f });
                }
            }
        }
        Ok(c)
    }

    /// Builds a category whose composition is given by a function on the
    /// composable pairs `(g, f)`.
    pub fn from_fn(
        object_count: usize,
        morphisms: &[(Obj, Obj)],
        identities: Vec<Mor>,
        mut compose: impl FnMut(Mor, Mor) -> Mor,
    ) -> Result<FinCategory> {
        let mut c = Self::skeleton(object_count, morphisms, identities)?;
        let m = c.src.len();
        for f in 0..m {
            let d = c.dst[f];
            for i in c.out_start[d]..c.out_start[d + 1] {
                let g = c.out[i];
                let h = compose(g, f);
                if h >= m {
                    return Err(FinCatError::IndexOutOfRange {
                        kind: "morphism",
                        index: h,
                        bound: m,
                    });
                }
                c.comp[c.comp_offset[f] + c.out_pos[g]] = h as u32;
            }
        }
        Ok(c)
    }

    pub fn with_object_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.object_count {
            return Err(FinCatError::Invalid(format!(
                "{} object names for {} objects",
                names.len(),
                self.object_count
            )));
        }
        self.object_names = Some(names);
        Ok(self)
    }

    pub fn with_morphism_names(mut self, names: Vec<Option<String>>) -> Result<Self> {
        if names.len() != self.src.len() {
            return Err(FinCatError::Invalid(format!(
                "{} morphism names for {} morphisms",
                names.len(),
                self.src.len()
            )));
        }
        self.morphism_names = names;
        Ok(self)
    }

    /// Returns a copy with one composition entry overwritten. Used to build
    /// deliberately broken tables.
    pub fn with_composite(&self, g: Mor, f: Mor, h: Mor) -> Result<FinCategory> {
        self.check_mor(h)?;
        let slot = self.slot(g, f)?;
        let mut c = self.clone();
        c.comp[slot] = h as u32;
        Ok(c)
    }

    /// Returns a copy with the identity of `x` replaced.
    pub fn with_identity(&self, x: Obj, id: Mor) -> Result<FinCategory> {
        self.check_obj(x)?;
        self.check_mor(id)?;
        let mut c = self.clone();
        c.identities[x] = id;
        Ok(c)
    }

    pub fn object_count(&self) -> usize {
        self.object_count
    }

    pub fn morphism_count(&self) -> usize {
        self.src.len()
    }

    pub fn objects(&self) -> Range<Obj> {
        0..self.object_count
    }

    pub fn morphisms(&self) -> Range<Mor> {
        0..self.src.len()
    }

    pub fn src(&self, f: Mor) -> Obj {
        self.src[f]
    }

    pub fn dst(&self, f: Mor) -> Obj {
        self.dst[f]
    }

    pub fn ends(&self, f: Mor) -> (Obj, Obj) {
        (self.src[f], self.dst[f])
    }

    pub fn identity(&self, x: Obj) -> Mor {
        self.identities[x]
    }

    pub fn identities(&self) -> &[Mor] {
        &self.identities
    }

    pub fn is_identity(&self, f: Mor) -> bool {
        self.src[f] == self.dst[f] && self.identities[self.src[f]] == f
    }

    /// Morphisms leaving `a`, ordered by target then index.
    pub fn out_of(&self, a: Obj) -> &[Mor] {
        &self.out[self.out_start[a]..self.out_start[a + 1]]
    }

    /// The hom-set `hom(a, b)` in ascending index order.
    pub fn hom(&self, a: Obj, b: Obj) -> &[Mor] {
        let block = self.out_of(a);
        let lo = block.partition_point(|&f| self.dst[f] < b);
        let hi = block.partition_point(|&f| self.dst[f] <= b);
        &block[lo..hi]
    }

    pub fn hom_size(&self, a: Obj, b: Obj) -> usize {
        self.hom(a, b).len()
    }

    /// Position of `f` inside `hom(src f, dst f)`.
    pub fn hom_position(&self, f: Mor) -> usize {
        self.hom_local[f]
    }

    pub fn check_obj(&self, x: Obj) -> Result<()> {
        if x < self.object_count {
            Ok(())
        } else {
            Err(FinCatError::IndexOutOfRange {
                kind: "object",
                index: x,
                bound: self.object_count,
            })
        }
    }

    pub fn check_mor(&self, f: Mor) -> Result<()> {
        if f < self.src.len() {
            Ok(())
        } else {
            Err(FinCatError::IndexOutOfRange {
                kind: "morphism",
                index: f,
                bound: self.src.len(),
            })
        }
    }

    fn slot(&self, g: Mor, f: Mor) -> Result<usize> {
        self.check_mor(g)?;
        self.check_mor(f)?;
        if self.dst[f] != self.src[g] {
            return Err(FinCatError::NotComposable { g, f });
        }
        Ok(self.comp_offset[f] + self.out_pos[g])
    }

    /// `g ∘ f`, or `None` when the pair is not composable.
    #[inline]
    pub fn composite(&self, g: Mor, f: Mor) -> Option<Mor> {
        if self.dst[f] != self.src[g] {
            return None;
        }
        Some(self.comp[self.comp_offset[f] + self.out_pos[g]] as Mor)
    }

    /// `g ∘ f`, with a structural error for non-composable pairs.
    pub fn compose(&self, g: Mor, f: Mor) -> Result<Mor> {
        self.slot(g, f).map(|s| self.comp[s] as Mor)
    }

    /// Composes a path given in diagram order: `[f1, f2, f3]` is `f3 ∘ f2 ∘ f1`.
    pub fn compose_path(&self, path: &[Mor]) -> Result<Mor> {
        let (&first, rest) = path
            .split_first()
            .ok_or_else(|| FinCatError::InvalidParameter("empty path".into()))?;
        self.check_mor(first)?;
        rest.iter().try_fold(first, |acc, &g| self.compose(g, acc))
    }

    /// Every composable pair `(g, f)`.
    pub fn composable_pairs(&self) -> impl Iterator<Item = (Mor, Mor)> + '_ {
        self.morphisms()
            .flat_map(move |f| self.out_of(self.dst[f]).iter().map(move |&g| (g, f)))
    }

    pub fn composable_pair_count(&self) -> usize {
        self.comp.len()
    }

    pub fn object_names(&self) -> Option<&[String]> {
        self.object_names.as_deref()
    }

    pub fn morphism_names(&self) -> &[Option<String>] {
        &self.morphism_names
    }

    pub fn object_name(&self, x: Obj) -> String {
        match &self.object_names {
            Some(names) => names[x].clone(),
            None => x.to_string(),
        }
    }

    pub fn morphism_name(&self, f: Mor) -> String {
        match &self.morphism_names[f] {
            Some(n) => n.clone(),
            None => format!("#{f}"),
        }
    }

    /// Looks an object up by display name.
    pub fn object_by_name(&self, name: &str) -> Option<Obj> {
        self.object_names
            .as_ref()?
            .iter()
            .position(|n| n == name)
    }

    /// Checks the category axioms and reports every violation.
    pub fn validate(&self) -> ValidationReport {
        let mut log = FailureLog::default();
        let mut id_ok = vec![true; self.object_count];
        for x in self.objects() {
            let id = self.identities[x];
            if self.src[id] != x || self.dst[id] != x {
                log.push("identity typing", [x, id]);
                id_ok[x] = false;
            }
        }
        let mut typed_ok = true;
        for (g, f) in self.composable_pairs() {
            let h = self.comp[self.comp_offset[f] + self.out_pos[g]] as Mor;
            if self.src[h] != self.src[f] || self.dst[h] != self.dst[g] {
                log.push("composite typing", [g, f, h]);
                typed_ok = false;
            }
        }
        for f in self.morphisms() {
            let (a, b) = self.ends(f);
            if id_ok[b] && self.composite(self.identities[b], f) != Some(f) {
                log.push("left identity", [f]);
            }
            if id_ok[a] && self.composite(f, self.identities[a]) != Some(f) {
                log.push("right identity", [f]);
            }
        }
        for f in self.morphisms() {
            for &g in self.out_of(self.dst[f]) {
                let gf = self.comp[self.comp_offset[f] + self.out_pos[g]] as Mor;
                for &h in self.out_of(self.dst[g]) {
                    let hg = self.comp[self.comp_offset[g] + self.out_pos[h]] as Mor;
                    let left = self.composite(h, gf);
                    let right = self.composite(hg, f);
                    match (left, right) {
                        (Some(l), Some(r)) if l == r => {}
                        (None, _) | (_, None) if !typed_ok => {}
                        _ => log.push("associativity", [h, g, f]),
                    }
                }
            }
        }
        log.finish()
    }

    /// A two-sided inverse of `f`, found by scanning `hom(dst f, src f)`.
    pub fn is_invertible(&self, f: Mor) -> Option<Mor> {
        let (a, b) = self.ends(f);
        let (ida, idb) = (self.identities[a], self.identities[b]);
        self.hom(b, a)
            .iter()
            .copied()
            .find(|&g| self.composite(g, f) == Some(ida) && self.composite(f, g) == Some(idb))
    }

    /// The least-index isomorphism `a → b`, if the objects are isomorphic.
    pub fn isomorphism(&self, a: Obj, b: Obj) -> Option<Mor> {
        self.hom(a, b)
            .iter()
            .copied()
            .find(|&f| self.is_invertible(f).is_some())
    }

    pub fn are_isomorphic(&self, a: Obj, b: Obj) -> bool {
        self.isomorphism(a, b).is_some()
    }

    /// True iff there is at least one object and every hom-set is a singleton.
    pub fn is_trivial(&self) -> bool {
        self.object_count > 0
            && self
                .objects()
                .all(|a| self.objects().all(|b| self.hom_size(a, b) == 1))
    }

    /// The opposite category: same indices, source and target swapped and
    /// composition transposed.
    pub fn opposite(&self) -> FinCategory {
        let morphisms: Vec<(Obj, Obj)> = self.morphisms().map(|f| (self.dst[f], self.src[f])).collect();
        let mut c = Self::from_fn(
            self.object_count,
            &morphisms,
            self.identities.clone(),
            |g, f| {
                self.composite(f, g)
                    .expect("opposite composable pair is composable in the original")
            },
        )
        .expect("opposite of a structurally valid category");
        c.object_names = self.object_names.clone();
        c.morphism_names = self.morphism_names.clone();
        c
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// 0 → 1 with two parallel arrows f, g and an idempotent e on 1 with
    /// e∘f = g, e∘g = g.
    fn idempotent_example() -> FinCategory {
        // 0: id0, 1: id1, 2: f, 3: g, 4: e
        let morphisms = [(0, 0), (1, 1), (0, 1), (0, 1), (1, 1)];
        FinCategory::from_fn(2, &morphisms, vec![0, 1], |g, f| match (g, f) {
            (0, x) | (1, x) => x,
            (x, 0) | (x, 1) => x,
            (4, 2) | (4, 3) => 3,
            (4, 4) => 4,
            _ => unreachable!(),
        })
        .unwrap()
    }

    #[test]
    fn terminal_validates() {
        let t = FinCategory::from_triples(1, &[(0, 0)], vec![0], [(0, 0, 0)]).unwrap();
        assert!(t.validate().ok);
        assert!(t.is_trivial());
    }

    #[test]
    fn redirected_composite_breaks_associativity() {
        let c = idempotent_example();
        assert!(c.validate().ok);
        let broken = c.with_composite(4, 3, 2).unwrap();
        let report = broken.validate();
        assert!(!report.ok);
        // (e∘e)∘f = e∘f = g, e∘(e∘f) = e∘g = f
        assert!(report
            .failures
            .iter()
            .any(|f| f.law == "associativity" && f.indices == vec![4, 4, 2]));
    }

    #[test]
    fn structural_errors() {
        let err = FinCategory::from_triples(1, &[(0, 2)], vec![0], []).unwrap_err();
        assert!(matches!(err, FinCatError::IndexOutOfRange { kind: "object", .. }));
        let err = FinCategory::from_triples(1, &[(0, 0)], vec![0], []).unwrap_err();
        assert_eq!(err, FinCatError::MissingComposite { g: 0, f: 0 });
        let err =
            FinCategory::from_triples(1, &[(0, 0)], vec![0], [(0, 0, 0), (0, 0, 0)]).unwrap_err();
        assert_eq!(err, FinCatError::DuplicateComposite { g: 0, f: 0 });
        let err = FinCategory::from_triples(2, &[(0, 0), (1, 1)], vec![0, 1], [(0, 1, 1)])
            .unwrap_err();
        assert_eq!(err, FinCatError::UnexpectedComposite { g: 0, f: 1 });
    }

    #[test]
    fn compose_rejects_non_composable() {
        let c = idempotent_example();
        assert_eq!(c.compose(0, 2), Err(FinCatError::NotComposable { g: 0, f: 2 }));
        assert_eq!(c.compose(1, 2), Ok(2));
        assert_eq!(c.compose_path(&[2, 4, 4]), Ok(3));
    }

    #[test]
    fn hom_sets_and_positions() {
        let c = idempotent_example();
        assert_eq!(c.hom(0, 1), &[2, 3]);
        assert_eq!(c.hom(1, 1), &[1, 4]);
        assert!(c.hom(1, 0).is_empty());
        assert_eq!(c.hom_position(3), 1);
        assert_eq!(c.hom_position(4), 1);
    }

    #[test]
    fn invertibility() {
        let c = idempotent_example();
        assert_eq!(c.is_invertible(1), Some(1));
        assert_eq!(c.is_invertible(4), None);
        assert_eq!(c.is_invertible(2), None);
        assert!(!c.is_trivial());
    }

    #[test]
    fn opposite_is_an_involution() {
        let c = idempotent_example();
        let op = c.opposite();
        assert!(op.validate().ok);
        assert_eq!(op.ends(2), (1, 0));
        assert_eq!(op.opposite(), c);
    }

    #[test]
    fn identity_typing_failure() {
        let c = idempotent_example().with_identity(0, 2).unwrap();
        let r = c.validate();
        assert!(r.has_law("identity typing"));
    }
}
