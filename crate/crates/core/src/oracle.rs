//! Brute-force references. Each function here decides its question by
//! scanning every candidate, sharing no shortcut with the main code paths.

use crate::boolrep::BooleanMatrix;
use crate::complex::LatticeRepresentation;
use crate::gain_graph::{GainGraph, Mode};
use crate::partition::bits;
use crate::spc::{Spc, SpcSpace};
use crate::wreath::{ColumnMonomialMatrix, Wreath};

/// Reflexive, antisymmetric and transitive on `items`.
pub fn is_partial_order<T>(items: &[T], leq: impl Fn(&T, &T) -> bool) -> bool {
    let m = items.len();
    let rel: Vec<Vec<bool>> = items.iter().map(|a| items.iter().map(|b| leq(a, b)).collect()).collect();
    for a in 0..m {
        if !rel[a][a] {
            return false;
        }
        for b in 0..m {
            if a != b && rel[a][b] && rel[b][a] {
                return false;
            }
            if rel[a][b] && (0..m).any(|c| rel[b][c] && !rel[a][c]) {
                return false;
            }
        }
    }
    true
}

/// Greatest lower bound of `a`, `b` in the Rhodes order, found by scanning `all`.
pub fn rhodes_glb(space: &SpcSpace, all: &[Spc], a: &Spc, b: &Spc) -> Option<Spc> {
    let leq = |x: &Spc, y: &Spc| space.rhodes_leq(x, y).unwrap();
    let lower: Vec<&Spc> = all.iter().filter(|x| leq(x, a) && leq(x, b)).collect();
    lower.iter().find(|x| lower.iter().all(|y| leq(y, x))).map(|x| (*x).clone())
}

/// Least upper bound in the Rhodes order, if one exists in `all`.
pub fn rhodes_lub(space: &SpcSpace, all: &[Spc], a: &Spc, b: &Spc) -> Option<Spc> {
    let leq = |x: &Spc, y: &Spc| space.rhodes_leq(x, y).unwrap();
    let upper: Vec<&Spc> = all.iter().filter(|x| leq(a, x) && leq(b, x)).collect();
    upper.iter().find(|x| upper.iter().all(|y| leq(x, y))).map(|x| (*x).clone())
}

/// Some element of `all` lies above both.
pub fn rhodes_upper_bound_exists(space: &SpcSpace, all: &[Spc], a: &Spc, b: &Spc) -> bool {
    all.iter().any(|x| space.rhodes_leq(a, x).unwrap() && space.rhodes_leq(b, x).unwrap())
}

/// Some ordering of `x` has strictly increasing partial joins, none equal
/// to `excluded`. Depth-first over orderings, so only for small `x`.
pub fn chain_certificate_by_permutation(rep: &LatticeRepresentation, excluded: Option<usize>, x: u32) -> bool {
    fn go(rep: &LatticeRepresentation, excluded: Option<usize>, rest: u32, current: usize) -> bool {
        if rest == 0 {
            return true;
        }
        bits(rest).any(|v| {
            let next = rep.lattice.join(current, rep.phi[v]);
            next != current && Some(next) != excluded && go(rep, excluded, rest ^ 1 << v, next)
        })
    }
    go(rep, excluded, x, rep.lattice.bottom())
}

/// Lower unitriangular `M[R, W]` for some ordering of `W` and choice of rows,
/// trying every ordering of the columns.
pub fn unitriangular_by_search(m: &BooleanMatrix, w: u32) -> bool {
    let cols: Vec<usize> = bits(w).collect();
    let mut perm = cols.clone();
    permutations(&mut perm, 0, &mut |order| rows_for(m, order, 0, 0))
}

fn rows_for(m: &BooleanMatrix, order: &[usize], k: usize, used: u64) -> bool {
    if k == order.len() {
        return true;
    }
    (0..m.rows()).any(|r| {
        used >> r & 1 == 0
            && m.get(r, order[k])
            && order[k + 1..].iter().all(|&c| !m.get(r, c))
            && rows_for(m, order, k + 1, used | 1 << r)
    })
}

fn permutations(v: &mut [usize], k: usize, f: &mut impl FnMut(&[usize]) -> bool) -> bool {
    if k == v.len() {
        return f(v);
    }
    for i in k..v.len() {
        v.swap(k, i);
        if permutations(v, k + 1, f) {
            v.swap(k, i);
            return true;
        }
        v.swap(k, i);
    }
    false
}

/// `C = BA` for some `B`, trying every matrix `B`.
pub fn l_below_by_search(w: &Wreath, c: &ColumnMonomialMatrix, a: &ColumnMonomialMatrix) -> bool {
    w.enumerate_matrices()
        .expect("small case")
        .iter()
        .any(|b| w.multiply(b, a).expect("same context") == *c)
}

/// Edge sets of size `rank` independent in the gain graph, counted directly.
pub fn basis_count(gg: &GainGraph, mode: Mode) -> usize {
    let m = gg.edges().len();
    let all: Vec<u32> = (0..1u32 << m).filter(|&x| gg.independent(x, mode)).collect();
    let rank = all.iter().map(|x| x.count_ones()).max().unwrap_or(0);
    all.iter().filter(|x| x.count_ones() == rank).count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;

    #[test]
    fn unitriangular_search_small() {
        let m = BooleanMatrix::new(2, vec![0b01, 0b11]).unwrap();
        assert!(unitriangular_by_search(&m, 0b11));
        let ones = BooleanMatrix::new(2, vec![0b11, 0b11]).unwrap();
        assert!(!unitriangular_by_search(&ones, 0b11));
    }

    #[test]
    fn lift_bases_delta_2() {
        let gg = crate::gain_graph::delta(2, &FiniteGroup::cyclic(3).unwrap()).unwrap();
        assert_eq!(basis_count(&gg, Mode::Lift), 3);
    }

    #[test]
    fn partial_order_check() {
        assert!(is_partial_order(&[0, 1, 2], |a, b| a <= b));
        assert!(!is_partial_order(&[0, 1], |_, _| true));
    }
}
