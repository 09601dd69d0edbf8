//! Distributivity decided through canonical δ maps must match the lattice
//! law `x∧(y∨z) = (x∧y)∨(x∧z)` evaluated on independently built order tables.

mod common;

use common::lattice::{lattice, law_violation, table};
use fincat::harness::generators::*;
use fincat::limits::{is_distributive, LimitCache, Scope};
use fincat::FinCategory;
use proptest::prelude::*;

fn closure(n: usize, covers: &[(usize, usize)]) -> Vec<Vec<bool>> {
    let mut t = table(n, |a, b| a == b || covers.contains(&(a, b)));
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                t[i][j] = t[i][j] || (t[i][k] && t[k][j]);
            }
        }
    }
    t
}

fn divisors(n: usize) -> Vec<usize> {
    (1..=n).filter(|d| n % d == 0).collect()
}

/// Decides distributivity through the category, `None` when limits are missing.
fn categorical(c: &FinCategory) -> Option<bool> {
    let cache = LimitCache::build(c);
    is_distributive(c, &cache, Scope::All).ok().map(|r| r.holds)
}

fn check_agreement(name: &str, c: &FinCategory, leq: &[Vec<bool>]) {
    let oracle = lattice(leq).map(|l| law_violation(&l).is_none());
    assert_eq!(categorical(c), oracle, "{name}");
}

#[test]
fn named_lattices_agree_with_the_law() {
    for n in 1..=6 {
        check_agreement(&format!("chain({n})"), &gen_chain(n).unwrap(), &table(n, |a, b| a <= b));
    }
    for k in 0..=3 {
        let size = 1 << k;
        check_agreement(
            &format!("B{k}"),
            &gen_boolean_algebra(k).unwrap(),
            &table(size, |a, b| a & !b == 0),
        );
    }
    for n in [1, 2, 4, 6, 8, 12, 30, 36, 60] {
        let d = divisors(n);
        check_agreement(
            &format!("D{n}"),
            &gen_divisor_lattice(n).unwrap(),
            &table(d.len(), |a, b| d[b] % d[a] == 0),
        );
    }
    // ⊥ = 0, a = 1, b = 2, c = 3, ⊤ = 4.
    let m3 = table(5, |a, b| a == b || a == 0 || b == 4);
    let n5 = table(5, |a, b| a == b || a == 0 || b == 4 || (a, b) == (1, 2));
    check_agreement("M3", &gen_m3(), &m3);
    check_agreement("N5", &gen_n5(), &n5);
}

#[test]
fn m3_and_n5_fail_with_the_expected_witness() {
    let m3 = gen_m3();
    let cache = LimitCache::build(&m3);
    let r = is_distributive(&m3, &cache, Scope::All).unwrap();
    assert!(!r.holds);
    let names: Vec<String> = r.first_failure.unwrap().iter().map(|&x| m3.object_name(x)).collect();
    assert_eq!(names, ["a", "b", "c"]);
    let oracle = lattice(&table(5, |a, b| a == b || a == 0 || b == 4)).unwrap();
    assert_eq!(law_violation(&oracle), Some((1, 2, 3)));

    let n5 = gen_n5();
    let cache = LimitCache::build(&n5);
    assert!(!is_distributive(&n5, &cache, Scope::All).unwrap().holds);
}

#[test]
fn square_free_and_prime_power_divisor_lattices_are_distributive() {
    for n in [2, 3, 5, 6, 7, 10, 15, 30, 42, 105, 210, 4, 8, 9, 16, 27, 32, 64, 81] {
        assert_eq!(categorical(&gen_divisor_lattice(n).unwrap()), Some(true), "D{n}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_posets_agree_with_the_law(
        size in 1usize..7,
        raw in prop::collection::vec((0usize..7, 0usize..7), 0..12),
    ) {
        let covers: Vec<(usize, usize)> = raw
            .into_iter()
            .filter(|&(a, b)| a < b && b < size)
            .collect();
        let spec = PosetSpec { size, covers: covers.clone(), names: None };
        let c = gen_poset_from_covers(&spec).unwrap();
        let leq = closure(size, &covers);
        check_agreement("random poset", &c, &leq);
    }
}
