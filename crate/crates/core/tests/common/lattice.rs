//! Meets and joins found by brute force on an order table, and the
//! distributive law evaluated on them.

pub struct Lattice {
    pub meet: Vec<Vec<usize>>,
    pub join: Vec<Vec<usize>>,
}

fn bound(leq: &[Vec<bool>], x: usize, y: usize, lower: bool) -> Option<usize> {
    let n = leq.len();
    let below = |a: usize, b: usize| if lower { leq[a][b] } else { leq[b][a] };
    let candidates: Vec<usize> = (0..n).filter(|&z| below(z, x) && below(z, y)).collect();
    candidates
        .iter()
        .copied()
        .find(|&z| candidates.iter().all(|&w| below(w, z)))
}

/// `None` when some pair lacks a meet or join, or there is no top or bottom.
pub fn lattice(leq: &[Vec<bool>]) -> Option<Lattice> {
    let n = leq.len();
    let mut meet = vec![vec![0; n]; n];
    let mut join = vec![vec![0; n]; n];
    for x in 0..n {
        for y in 0..n {
            meet[x][y] = bound(leq, x, y, true)?;
            join[x][y] = bound(leq, x, y, false)?;
        }
    }
    (0..n).find(|&t| (0..n).all(|x| leq[x][t]))?;
    (0..n).find(|&b| (0..n).all(|x| leq[b][x]))?;
    Some(Lattice { meet, join })
}

/// The first triple violating `x∧(y∨z) = (x∧y)∨(x∧z)`.
pub fn law_violation(l: &Lattice) -> Option<(usize, usize, usize)> {
    let n = l.meet.len();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if l.meet[x][l.join[y][z]] != l.join[l.meet[x][y]][l.meet[x][z]] {
                    return Some((x, y, z));
                }
            }
        }
    }
    None
}

pub fn table(n: usize, leq: impl Fn(usize, usize) -> bool) -> Vec<Vec<bool>> {
    (0..n).map(|a| (0..n).map(|b| leq(a, b)).collect()).collect()
}
