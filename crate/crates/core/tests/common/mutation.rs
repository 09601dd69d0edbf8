//! Brute-force coherence oracle and single-component mutation driver shared
//! by the mutation tests and the acceptance run.

use std::sync::Arc;

use fincat::harness::generators::*;
use fincat::limits::LimitCache;
use fincat::monoidal::{
    cartesian_monoidal, cocartesian_monoidal, commutative_monoid_monoidal, product_monoidal,
    validate_braiding, validate_monoidal, validate_monoidal_functor, MonoidalFunctorData,
    MonoidalStructure,
};
use fincat::{FinCategory, Mor, Obj};

/// Applies `fs[0]` first.
fn seq(c: &FinCategory, fs: &[Mor]) -> Option<Mor> {
    let mut acc = *fs.first()?;
    for &g in &fs[1..] {
        acc = c.composite(g, acc)?;
    }
    Some(acc)
}

fn inverse(c: &FinCategory, f: Mor) -> Option<Mor> {
    let (a, b) = c.ends(f);
    c.hom(b, a).iter().copied().find(|&g| {
        c.composite(g, f) == Some(c.identity(a)) && c.composite(f, g) == Some(c.identity(b))
    })
}

fn functor_ok(f: &fincat::FunctorData) -> bool {
    let (s, t) = (&f.source, &f.target);
    let typed = s.morphisms().all(|h| {
        let (a, b) = s.ends(h);
        t.ends(f.mor(h)) == (f.obj(a), f.obj(b))
    });
    typed
        && s.objects().all(|x| f.mor(s.identity(x)) == t.identity(f.obj(x)))
        && s.composable_pairs()
            .all(|(g, h)| Some(f.mor(s.composite(g, h).unwrap())) == t.composite(f.mor(g), f.mor(h)))
}

fn structure_ok(m: &MonoidalStructure) -> bool {
    let c = &*m.base;
    let n = c.object_count();
    let o = |x, y| m.tensor_obj(x, y);
    let t = |f, g| m.tensor_mor(f, g);
    let id = |x| c.identity(x);
    let (i, a, l, r) = (m.unit, |x, y, z| m.associator(x, y, z), |x| m.left_unitor(x), |x| m.right_unitor(x));
    if !functor_ok(&m.tensor) {
        return false;
    }
    let objs: Vec<Obj> = c.objects().collect();
    for &x in &objs {
        if c.ends(l(x)) != (o(i, x), x) || c.ends(r(x)) != (o(x, i), x) {
            return false;
        }
        for &y in &objs {
            for &z in &objs {
                if c.ends(a(x, y, z)) != (o(o(x, y), z), o(x, o(y, z))) {
                    return false;
                }
            }
        }
    }
    if m.associator.iter().chain(&m.left_unitor).chain(&m.right_unitor).any(|&f| inverse(c, f).is_none()) {
        return false;
    }
    for f in c.morphisms() {
        let (x, x2) = c.ends(f);
        if seq(c, &[l(x), f]) != seq(c, &[t(id(i), f), l(x2)]) || seq(c, &[r(x), f]) != seq(c, &[t(f, id(i)), r(x2)]) {
            return false;
        }
        for g in c.morphisms() {
            let (y, y2) = c.ends(g);
            for h in c.morphisms() {
                let (z, z2) = c.ends(h);
                if seq(c, &[t(t(f, g), h), a(x2, y2, z2)]) != seq(c, &[a(x, y, z), t(f, t(g, h))]) {
                    return false;
                }
            }
        }
    }
    for w in 0..n {
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let lhs = seq(c, &[a(o(w, x), y, z), a(w, x, o(y, z))]);
                    let rhs = seq(c, &[t(a(w, x, y), id(z)), a(w, o(x, y), z), t(id(w), a(x, y, z))]);
                    if lhs != rhs {
                        return false;
                    }
                }
            }
            if seq(c, &[a(w, i, x), t(id(w), l(x))]) != Some(t(r(w), id(x))) {
                return false;
            }
        }
    }
    let Some(_) = &m.braiding else { return true };
    let b = |x, y| m.braiding(x, y).unwrap();
    for &x in &objs {
        for &y in &objs {
            if c.ends(b(x, y)) != (o(x, y), o(y, x)) || inverse(c, b(x, y)).is_none() {
                return false;
            }
        }
    }
    for f in c.morphisms() {
        let (x, x2) = c.ends(f);
        for g in c.morphisms() {
            let (y, y2) = c.ends(g);
            if seq(c, &[t(f, g), b(x2, y2)]) != seq(c, &[b(x, y), t(g, f)]) {
                return false;
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let h1 = seq(c, &[a(x, y, z), b(x, o(y, z)), a(y, z, x)])
                    == seq(c, &[t(b(x, y), id(z)), a(y, x, z), t(id(y), b(x, z))]);
                let a_inv = inverse(c, a(x, z, y)).unwrap();
                let h2 = Some(b(o(x, y), z))
                    == seq(c, &[a(x, y, z), t(id(x), b(y, z)), a_inv, t(b(x, z), id(y)), a(z, x, y)]);
                if !h1 || !h2 {
                    return false;
                }
            }
        }
    }
    true
}

fn lax_ok(fm: &MonoidalFunctorData) -> bool {
    let (m, t, f) = (&*fm.source, &*fm.target, &*fm.functor);
    let (s, c) = (&*m.base, &*t.base);
    let n = s.object_count();
    let phi = |y: Obj, z: Obj| fm.phi[y * n + z];
    if !functor_ok(f) {
        return false;
    }
    for y in 0..n {
        for z in 0..n {
            if c.ends(phi(y, z)) != (t.tensor_obj(f.obj(y), f.obj(z)), f.obj(m.tensor_obj(y, z))) {
                return false;
            }
        }
    }
    if c.ends(fm.phi0) != (t.unit, f.obj(m.unit)) {
        return false;
    }
    for g in s.morphisms() {
        let (y, y2) = s.ends(g);
        for h in s.morphisms() {
            let (z, z2) = s.ends(h);
            let lhs = seq(c, &[t.tensor_mor(f.mor(g), f.mor(h)), phi(y2, z2)]);
            let rhs = seq(c, &[phi(y, z), f.mor(m.tensor_mor(g, h))]);
            if lhs != rhs {
                return false;
            }
        }
    }
    let tid = |x| c.identity(x);
    for x in 0..n {
        let fx = f.obj(x);
        let left = seq(c, &[t.tensor_mor(fm.phi0, tid(fx)), phi(m.unit, x), f.mor(m.left_unitor(x))]);
        let right = seq(c, &[t.tensor_mor(tid(fx), fm.phi0), phi(x, m.unit), f.mor(m.right_unitor(x))]);
        if left != Some(t.left_unitor(fx)) || right != Some(t.right_unitor(fx)) {
            return false;
        }
        for y in 0..n {
            for z in 0..n {
                let (fy, fz) = (f.obj(y), f.obj(z));
                let lhs = seq(
                    c,
                    &[t.tensor_mor(phi(x, y), tid(fz)), phi(m.tensor_obj(x, y), z), f.mor(m.associator(x, y, z))],
                );
                let rhs = seq(
                    c,
                    &[t.associator(fx, fy, fz), t.tensor_mor(tid(fx), phi(y, z)), phi(x, m.tensor_obj(y, z))],
                );
                if lhs != rhs {
                    return false;
                }
            }
        }
    }
    true
}

fn structure_caught(m: &MonoidalStructure) -> bool {
    match validate_monoidal(m) {
        Err(_) => true,
        Ok(r) if !r.ok => true,
        Ok(_) if m.is_braided() => !matches!(validate_braiding(m), Ok(r) if r.ok),
        Ok(_) => false,
    }
}

fn functor_caught(fm: &MonoidalFunctorData) -> bool {
    !matches!(validate_monoidal_functor(fm), Ok(r) if r.ok)
}

/// Replacements for a component: every other morphism with the same ends,
/// then the lowest-index morphism with different ends.
fn replacements(c: &FinCategory, f: Mor) -> Vec<Mor> {
    let (a, b) = c.ends(f);
    let mut out: Vec<Mor> = c.hom(a, b).iter().copied().filter(|&g| g != f).collect();
    out.extend(c.morphisms().find(|&g| c.ends(g) != (a, b)));
    out
}

#[derive(Default)]
pub struct Tally {
    pub total: usize,
    pub breaking: usize,
    pub killed: usize,
    pub disagreements: Vec<String>,
}

impl Tally {
    fn record(&mut self, label: String, broken: bool, caught: bool) {
        self.total += 1;
        self.breaking += usize::from(broken);
        self.killed += usize::from(broken && caught);
        if broken != caught {
            self.disagreements.push(format!("{label}: oracle broken={broken}, validator caught={caught}"));
        }
    }
}

#[derive(Clone, Copy)]
enum Slot {
    Associator,
    Left,
    Right,
    Braiding,
    Tensor,
}

pub fn mutate_structure(name: &str, m: &MonoidalStructure, slots_per_table: usize, tally: &mut Tally) {
    assert!(structure_ok(m), "{name}: oracle rejects the unmutated structure");
    assert!(!structure_caught(m), "{name}: validator rejects the unmutated structure");
    let c = &*m.base;
    for slot in [Slot::Associator, Slot::Left, Slot::Right, Slot::Braiding, Slot::Tensor] {
        let table: Vec<Mor> = match slot {
            Slot::Associator => m.associator.clone(),
            Slot::Left => m.left_unitor.clone(),
            Slot::Right => m.right_unitor.clone(),
            Slot::Braiding => m.braiding.clone().unwrap_or_default(),
            Slot::Tensor => m.tensor.morphism_map.clone(),
        };
        for (k, &orig) in table.iter().enumerate().take(slots_per_table) {
            for alt in replacements(c, orig) {
                let mut mutant = m.clone();
                match slot {
                    Slot::Associator => mutant.associator[k] = alt,
                    Slot::Left => mutant.left_unitor[k] = alt,
                    Slot::Right => mutant.right_unitor[k] = alt,
                    Slot::Braiding => mutant.braiding.as_mut().unwrap()[k] = alt,
                    Slot::Tensor => {
                        let mut t = (*m.tensor).clone();
                        t.morphism_map[k] = alt;
                        mutant.tensor = Arc::new(t);
                    }
                }
                let label = format!("{name} slot {} [{k}] -> {alt}", slot_name(slot));
                tally.record(label, !structure_ok(&mutant), structure_caught(&mutant));
            }
        }
    }
}

fn slot_name(s: Slot) -> &'static str {
    match s {
        Slot::Associator => "associator",
        Slot::Left => "left unitor",
        Slot::Right => "right unitor",
        Slot::Braiding => "braiding",
        Slot::Tensor => "tensor",
    }
}

pub fn mutate_functor(name: &str, fm: &MonoidalFunctorData, slots: usize, tally: &mut Tally) {
    assert!(lax_ok(fm), "{name}: oracle rejects the unmutated functor");
    assert!(!functor_caught(fm), "{name}: validator rejects the unmutated functor");
    let c = &*fm.target.base;
    for (k, &orig) in fm.phi.iter().enumerate().take(slots) {
        for alt in replacements(c, orig) {
            let mut mutant = fm.clone();
            mutant.phi[k] = alt;
            tally.record(format!("{name} φ[{k}] -> {alt}"), !lax_ok(&mutant), functor_caught(&mutant));
        }
    }
    for alt in replacements(c, fm.phi0) {
        let mut mutant = fm.clone();
        mutant.phi0 = alt;
        tally.record(format!("{name} φ0 -> {alt}"), !lax_ok(&mutant), functor_caught(&mutant));
    }
}

pub fn lattice_structures() -> Vec<(String, Arc<MonoidalStructure>)> {
    let corpus: Vec<(&str, FinCategory)> = vec![
        ("chain(1)", gen_chain(1).unwrap()),
        ("chain(2)", gen_chain(2).unwrap()),
        ("chain(3)", gen_chain(3).unwrap()),
        ("B1", gen_boolean_algebra(1).unwrap()),
        ("B2", gen_boolean_algebra(2).unwrap()),
        ("D12", gen_divisor_lattice(12).unwrap()),
        ("M3", gen_m3()),
        ("N5", gen_n5()),
        ("terminal", gen_terminal()),
    ];
    let mut out = Vec::new();
    for (name, c) in corpus {
        let c = Arc::new(c);
        let cache = LimitCache::build(&c);
        out.push((format!("{name} cartesian"), Arc::new(cartesian_monoidal(&c, &cache).unwrap())));
        out.push((format!("{name} cocartesian"), Arc::new(cocartesian_monoidal(&c, &cache).unwrap())));
    }
    // bool_matrix lacks some products and coproducts, so it has neither.
    let mat = gen_bool_matrix(2).unwrap();
    let cache = LimitCache::build(&mat);
    assert!(cartesian_monoidal(&Arc::new(mat.clone()), &cache).is_err());
    out
}

pub fn monoid_structures() -> Vec<(String, Arc<MonoidalStructure>)> {
    let z2 = Arc::new(commutative_monoid_monoidal(&Arc::new(gen_cyclic_group(2).unwrap())).unwrap());
    let z3 = Arc::new(commutative_monoid_monoidal(&Arc::new(gen_cyclic_group(3).unwrap())).unwrap());
    let bm = Arc::new(commutative_monoid_monoidal(&Arc::new(gen_boolean_monoid())).unwrap());
    let prod = Arc::new(product_monoidal(&z2, &bm, None).unwrap());
    vec![
        ("Z/2".into(), z2),
        ("Z/3".into(), z3),
        ("boolean monoid".into(), bm),
        ("Z/2 × boolean monoid".into(), prod),
    ]
}
