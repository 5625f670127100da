//! The named complexes and representations: `H_n(G)`, `Ĥ_n(G)`, `M_n(G)`,
//! `(L_n, φ)`, `(2^n, φ′)` and the direct-sum models they are compared with.

use crate::complex::{complex_from_lattice, complex_from_lattice_excluding, LatticeRepresentation, SimplicialComplex};
use crate::error::Result;
use crate::gain_graph::delta;
use crate::group::FiniteGroup;
use crate::lattice::{build_dowling, build_ln, build_powerset, build_rhodes_hat, SpcLattice};
use crate::spc::SpcSpace;

/// Labels for `A_n`: `b1..bn`, then `c{i}{j}:g` per pair and gain.
pub fn a_n_labels(space: &SpcSpace) -> Vec<String> {
    let n = space.n();
    let g = space.group();
    let mut out: Vec<String> = (1..=n).map(|i| format!("b{i}")).collect();
    for i in 1..=n {
        for j in i + 1..=n {
            out.extend(g.elements().map(|x| format!("c{i}{j}:{}", g.label(x))));
        }
    }
    out
}

/// Labels for `A′_n`: `b'i` for the missing point, then `c'{i}{j}:g`.
pub fn a_prime_labels(space: &SpcSpace) -> Vec<String> {
    a_n_labels(space).into_iter().map(|l| l.replacen('b', "b'", 1).replacen('c', "c'", 1)).collect()
}

/// `R̂_n(G)` with `A_n` as ground, plus the index of `T` when adjoined.
pub fn rhodes_hat_representation(n: usize, group: &FiniteGroup) -> Result<(LatticeRepresentation, Option<usize>, SpcLattice)> {
    let r = build_rhodes_hat(n, group)?;
    let phi = r
        .space
        .join_irreducibles_rhodes()
        .iter()
        .map(|s| r.index_of(s).expect("join-irreducibles are SPCs"))
        .collect();
    let rep = LatticeRepresentation::new(r.lattice.clone(), phi, a_n_labels(&r.space))?;
    Ok((rep, r.top_sentinel, r))
}

/// `Ĥ_n(G)`: chains of partial joins in `R̂_n(G)`.
pub fn rhodes_hat_complex(n: usize, group: &FiniteGroup) -> Result<SimplicialComplex> {
    let (rep, _, _) = rhodes_hat_representation(n, group)?;
    Ok(complex_from_lattice(&rep)?)
}

/// `H_n(G)`: as `Ĥ_n(G)` but every partial join must exist in `R_n(G)`.
pub fn rhodes_complex(n: usize, group: &FiniteGroup) -> Result<SimplicialComplex> {
    let (rep, top, _) = rhodes_hat_representation(n, group)?;
    Ok(complex_from_lattice_excluding(&rep, top)?)
}

/// `M_n(G)`: the atoms `A′_n` of `Q_n(G)`.
pub fn dowling_complex(n: usize, group: &FiniteGroup) -> Result<SimplicialComplex> {
    let q = build_dowling(n, group)?;
    let phi = q.space.atoms_dowling().iter().map(|s| q.index_of(s).expect("atoms are SPCs")).collect();
    let rep = LatticeRepresentation::new(q.lattice.clone(), phi, a_prime_labels(&q.space))?;
    Ok(complex_from_lattice(&rep)?)
}

/// `(L_n, φ)` on `A_n` for a group of the given order.
pub fn ln_representation(n: usize, group: &FiniteGroup) -> Result<LatticeRepresentation> {
    let l = build_ln(n)?;
    let space = SpcSpace::new(n, group.clone())?;
    Ok(LatticeRepresentation::new(l.lattice.clone(), l.phi(group.order()), a_n_labels(&space))?)
}

/// `(2^n, φ′)` on the edges of `K_{n+1}`.
pub fn powerset_representation(n: usize) -> Result<LatticeRepresentation> {
    let p = build_powerset(n)?;
    let ground = p.edges().iter().map(|(i, j)| format!("{i}-{j}")).collect();
    Ok(LatticeRepresentation::new(p.lattice.clone(), p.phi_prime(), ground)?)
}

/// `Γ(k K_n)`: `k` parallel copies of every edge of `K_n`, ordered by pair.
pub fn multi_complete_graphic(n: usize, k: usize) -> Result<SimplicialComplex> {
    let edges: Vec<(usize, usize)> =
        (0..n).flat_map(|i| (i + 1..n).flat_map(move |j| std::iter::repeat((i, j)).take(k))).collect();
    Ok(SimplicialComplex::graphic_matroid(n.max(1), &edges)?)
}

/// `U_{n,n} ⊕ Γ(|G| K_n)`.
pub fn rhodes_sum_model(n: usize, group: &FiniteGroup) -> Result<SimplicialComplex> {
    let u = SimplicialComplex::uniform(n, n)?.prefixed("U.");
    let g = multi_complete_graphic(n, group.order())?.prefixed("K.");
    Ok(u.direct_sum(&g)?)
}

/// The lift matroid of `Δ_n(G)`; for `n = 1` the empty complex.
pub fn lift_delta(n: usize, group: &FiniteGroup) -> Result<SimplicialComplex> {
    if n == 1 {
        return Ok(SimplicialComplex::from_family(Vec::new(), &[])?);
    }
    Ok(delta(n, group)?.lift_matroid()?)
}

/// `U_{n,n} ⊕ L(Δ_n(G))`.
pub fn rhodes_hat_sum_model(n: usize, group: &FiniteGroup) -> Result<SimplicialComplex> {
    let u = SimplicialComplex::uniform(n, n)?.prefixed("U.");
    let l = lift_delta(n, group)?.prefixed("L.");
    Ok(u.direct_sum(&l)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::complexes_isomorphic;

    #[test]
    fn small_models() {
        let one = FiniteGroup::trivial();
        let z2 = FiniteGroup::cyclic(2).unwrap();
        let h = rhodes_complex(2, &z2).unwrap();
        assert_eq!(h.ground_size(), 4);
        assert!(complexes_isomorphic(&h, &rhodes_sum_model(2, &z2).unwrap()).unwrap().is_some());
        let hh = rhodes_hat_complex(2, &z2).unwrap();
        assert_eq!(hh.rank(), 4);
        assert_eq!(rhodes_complex(3, &one).unwrap().rank(), 5);
        let m = dowling_complex(3, &one).unwrap();
        let k4 = multi_complete_graphic(4, 1).unwrap();
        assert!(complexes_isomorphic(&m, &k4).unwrap().is_some());
        assert_eq!(a_prime_labels(&SpcSpace::new(2, z2).unwrap()), vec!["b'1", "b'2", "c'12:e", "c'12:g"]);
    }
}
