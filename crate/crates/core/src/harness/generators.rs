//! Structured families of small categories.

use crate::category::{FinCategory, Mor, Obj};
use crate::error::{FinCatError, Result};

pub const MAX_CHAIN: usize = 16;
pub const MAX_BOOLEAN_EXPONENT: usize = 4;
pub const MAX_DIVISOR_N: usize = 100_000;
/// `bool_matrix(4)` would need 4.9·10⁹ composition entries.
pub const MAX_MATRIX_RANK: usize = 3;
pub const MAX_POSET_SIZE: usize = 64;
pub const MAX_MONOID_ORDER: usize = 64;

fn bound(family: &'static str, value: usize, max: usize) -> Result<()> {
    if value > max {
        Err(FinCatError::BoundExceeded { family, value, max })
    } else {
        Ok(())
    }
}

/// The category of a preorder given by `leq`. Morphisms are enumerated by
/// source, then target, ascending.
pub fn poset_category(size: usize, leq: impl Fn(Obj, Obj) -> bool, names: Vec<String>) -> FinCategory {
    let mut morphisms = Vec::new();
    let mut index = vec![vec![usize::MAX; size]; size];
    for a in 0..size {
        for b in 0..size {
            if leq(a, b) {
                index[a][b] = morphisms.len();
                morphisms.push((a, b));
            }
        }
    }
    let identities = (0..size).map(|a| index[a][a]).collect();
    FinCategory::from_fn(size, &morphisms, identities, |g, f| index[morphisms[f].0][morphisms[g].1])
        .expect("preorder composition is total")
        .with_object_names(names)
        .expect("one name per element")
}

pub fn gen_terminal() -> FinCategory {
    poset_category(1, |_, _| true, vec!["*".into()])
}

/// The chain `0 < 1 < … < n-1`.
pub fn gen_chain(n: usize) -> Result<FinCategory> {
    bound("chain", n, MAX_CHAIN)?;
    if n == 0 {
        return Err(FinCatError::InvalidParameter("chain length must be positive".into()));
    }
    Ok(poset_category(n, |a, b| a <= b, (0..n).map(|i| i.to_string()).collect()))
}

/// Subsets of `{1..k}` ordered by inclusion; object `s` is the bitmask `s`.
pub fn gen_boolean_algebra(k: usize) -> Result<FinCategory> {
    bound("boolean-algebra", k, MAX_BOOLEAN_EXPONENT)?;
    let size = 1usize << k;
    let names = (0..size)
        .map(|s| {
            let elems: Vec<String> = (0..k).filter(|i| s >> i & 1 == 1).map(|i| (i + 1).to_string()).collect();
            format!("{{{}}}", elems.join(","))
        })
        .collect();
    Ok(poset_category(size, |a, b| a & !b == 0, names))
}

/// Divisors of `n` ordered by divisibility, ascending.
pub fn gen_divisor_lattice(n: usize) -> Result<FinCategory> {
    bound("divisor-lattice", n, MAX_DIVISOR_N)?;
    if n == 0 {
        return Err(FinCatError::InvalidParameter("n must be positive".into()));
    }
    let divisors: Vec<usize> = (1..=n).filter(|d| n % d == 0).collect();
    let names = divisors.iter().map(|d| d.to_string()).collect();
    Ok(poset_category(divisors.len(), |a, b| divisors[b] % divisors[a] == 0, names))
}

fn diamond(names: [&str; 5], extra: impl Fn(Obj, Obj) -> bool) -> FinCategory {
    let leq = |a: Obj, b: Obj| a == b || a == 0 || b == 4 || extra(a, b);
    poset_category(5, leq, names.iter().map(|s| s.to_string()).collect())
}

/// `⊥ < a, b, c < ⊤` with `a, b, c` pairwise incomparable.
pub fn gen_m3() -> FinCategory {
    diamond(["⊥", "a", "b", "c", "⊤"], |_, _| false)
}

/// The pentagon `⊥ < a < b < ⊤`, `⊥ < c < ⊤`.
pub fn gen_n5() -> FinCategory {
    diamond(["⊥", "a", "b", "c", "⊤"], |x, y| x == 1 && y == 2)
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct PosetSpec {
    pub size: usize,
    /// Pairs `(lower, upper)`; the order is their reflexive-transitive closure.
    pub covers: Vec<(Obj, Obj)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
}

pub fn gen_poset_from_covers(spec: &PosetSpec) -> Result<FinCategory> {
    let n = spec.size;
    bound("poset", n, MAX_POSET_SIZE)?;
    let mut leq = vec![vec![false; n]; n];
    for (a, row) in leq.iter_mut().enumerate() {
        row[a] = true;
    }
    for &(a, b) in &spec.covers {
        for x in [a, b] {
            if x >= n {
                return Err(FinCatError::IndexOutOfRange {
                    kind: "object",
                    index: x,
                    bound: n,
                });
            }
        }
        leq[a][b] = true;
    }
    for k in 0..n {
        for i in 0..n {
            if leq[i][k] {
                for j in 0..n {
                    if leq[k][j] {
                        leq[i][j] = true;
                    }
                }
            }
        }
    }
    for i in 0..n {
        for j in 0..i {
            if leq[i][j] && leq[j][i] {
                return Err(FinCatError::InvalidParameter(format!(
                    "cover relation has a cycle through {j} and {i}"
                )));
            }
        }
    }
    let names = match &spec.names {
        Some(names) if names.len() == n => names.clone(),
        Some(_) => return Err(FinCatError::InvalidParameter("one name per element required".into())),
        None => (0..n).map(|i| i.to_string()).collect(),
    };
    Ok(poset_category(n, |a, b| leq[a][b], names))
}

/// Boolean matrices: objects are ranks `0..=n`, a morphism `a → b` is a
/// `b × a` matrix over `({0,1}, ∨, ∧)` and composition is the matrix product.
///
/// Morphisms are enumerated by source, target, then bitmask, where entry
/// `(r, c)` of a `b × a` matrix is bit `r·a + c`.
pub fn gen_bool_matrix(n: usize) -> Result<FinCategory> {
    bound("bool-matrix", n, MAX_MATRIX_RANK)?;
    let ranks = n + 1;
    let mut base = vec![vec![0usize; ranks]; ranks];
    let mut morphisms = Vec::new();
    let mut masks = Vec::new();
    for a in 0..ranks {
        for b in 0..ranks {
            base[a][b] = morphisms.len();
            for mask in 0..(1usize << (a * b)) {
                morphisms.push((a, b));
                masks.push(mask);
            }
        }
    }
    let identities = (0..ranks)
        .map(|a| base[a][a] + (0..a).map(|i| 1usize << (i * a + i)).sum::<usize>())
        .collect();
    let cat = FinCategory::from_fn(ranks, &morphisms, identities, |g, f| {
        let (a, b) = morphisms[f];
        let c = morphisms[g].1;
        base[a][c] + matrix_product(masks[g], masks[f], a, b, c)
    })?;
    let names = morphisms
        .iter()
        .zip(&masks)
        .map(|(&(a, b), &mask)| Some(matrix_name(a, b, mask)))
        .collect();
    cat.with_object_names((0..ranks).map(|r| r.to_string()).collect())?
        .with_morphism_names(names)
}

/// The bitmask of `G·F` for `F: a → b` and `G: b → c`.
pub fn matrix_product(g: usize, f: usize, a: usize, b: usize, c: usize) -> usize {
    let mut out = 0;
    for r in 0..c {
        for col in 0..a {
            let hit = (0..b).any(|k| g >> (r * b + k) & 1 == 1 && f >> (k * a + col) & 1 == 1);
            if hit {
                out |= 1 << (r * a + col);
            }
        }
    }
    out
}

fn matrix_name(a: usize, b: usize, mask: usize) -> String {
    let rows: Vec<String> = (0..b)
        .map(|r| (0..a).map(|c| if mask >> (r * a + c) & 1 == 1 { '1' } else { '0' }).collect())
        .collect();
    format!("{a}->{b}[{}]", rows.join(";"))
}

/// Finds the morphism `a → b` of `gen_bool_matrix` with the given rows.
pub fn bool_matrix_morphism(c: &FinCategory, a: Obj, b: Obj, rows: &[&str]) -> Option<Mor> {
    let name = format!("{a}->{b}[{}]", rows.join(";"));
    c.hom(a, b).iter().copied().find(|&f| c.morphism_name(f) == name)
}

/// The one-object category of a monoid given by its multiplication table;
/// element 0 must be the unit. `g ∘ f` is `table[g][f]`.
pub fn gen_monoid(table: &[Vec<usize>], names: Vec<String>) -> Result<FinCategory> {
    let n = table.len();
    bound("monoid", n, MAX_MONOID_ORDER)?;
    if n == 0 || table.iter().any(|row| row.len() != n) || names.len() != n {
        return Err(FinCatError::InvalidParameter("square table with one name per element required".into()));
    }
    let morphisms = vec![(0, 0); n];
    let cat = FinCategory::from_fn(1, &morphisms, vec![0], |g, f| table[g][f])?
        .with_object_names(vec!["*".into()])?
        .with_morphism_names(names.into_iter().map(Some).collect())?;
    Ok(cat)
}

/// `ℤ/n` as a one-object category.
pub fn gen_cyclic_group(n: usize) -> Result<FinCategory> {
    if n == 0 {
        return Err(FinCatError::InvalidParameter("order must be positive".into()));
    }
    let table: Vec<Vec<usize>> = (0..n).map(|g| (0..n).map(|f| (g + f) % n).collect()).collect();
    gen_monoid(&table, (0..n).map(|i| format!("s{i}")).collect())
}

/// `({1, 0}, ∧)` as a one-object category: the endomorphisms of rank 1 in
/// `gen_bool_matrix`. Morphism 0 is `1`, morphism 1 is `0`.
pub fn gen_boolean_monoid() -> FinCategory {
    gen_monoid(&[vec![0, 1], vec![1, 1]], vec!["1".into(), "0".into()]).expect("valid table")
}
