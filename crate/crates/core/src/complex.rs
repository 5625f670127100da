//! Simplicial complexes on small ground sets, lattice representations,
//! flats and the matroid / Boolean-representability predicates.
//!
//! A complex on `m ≤ 24` vertices is stored as a dense membership table
//! indexed by subset bitmask.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::lattice::{lattice_from_poset, FiniteLattice, LatticeError};
use crate::partition::{bits, full_mask, low_bit};

pub const MAX_GROUND: usize = 24;
/// Flats and closures are computed up to this many vertices.
pub const MAX_FLAT_GROUND: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("ground set too large: {size} > {bound}")]
    GroundTooLarge { size: usize, bound: usize },
    #[error("family is not closed under subsets (missing a subset of {0:#b})")]
    NotHereditary(u32),
    #[error("ground sets overlap on {0:?}")]
    OverlappingGrounds(String),
    #[error("restriction to an empty set")]
    EmptyRestriction,
    #[error("invalid lattice representation: {0}")]
    InvalidRepresentation(String),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

fn check_ground(m: usize, bound: usize) -> Result<(), ComplexError> {
    if m > bound {
        Err(ComplexError::GroundTooLarge { size: m, bound })
    } else {
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    ground: Vec<String>,
    indep: Vec<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexJson {
    pub schema_version: String,
    pub ground: Vec<String>,
    /// Facets as zero-based vertex index lists.
    pub facets: Vec<Vec<usize>>,
}

impl SimplicialComplex {
    /// Downward closure of `sets` (bitmasks over `ground`). The empty set is
    /// always included.
    pub fn from_family(ground: Vec<String>, sets: &[u32]) -> Result<Self, ComplexError> {
        let m = ground.len();
        check_ground(m, MAX_GROUND)?;
        let mut indep = vec![false; 1 << m];
        indep[0] = true;
        for &s in sets {
            if s & !full_mask(m) != 0 {
                return Err(ComplexError::GroundTooLarge { size: 32 - s.leading_zeros() as usize, bound: m });
            }
            indep[s as usize] = true;
        }
        // superset-to-subset propagation
        for b in 0..m {
            for x in (0..1usize << m).rev() {
                if x & (1 << b) != 0 && indep[x] {
                    indep[x ^ (1 << b)] = true;
                }
            }
        }
        Ok(Self { ground, indep })
    }

    /// The family `{X : pred(X)}`, which must be hereditary and contain `∅`.
    pub fn from_predicate(ground: Vec<String>, pred: impl Fn(u32) -> bool) -> Result<Self, ComplexError> {
        let m = ground.len();
        check_ground(m, MAX_GROUND)?;
        let indep: Vec<bool> = (0..1u32 << m).map(&pred).collect();
        Self::from_table(ground, indep)
    }

    pub(crate) fn from_table(ground: Vec<String>, indep: Vec<bool>) -> Result<Self, ComplexError> {
        if !indep[0] {
            return Err(ComplexError::NotHereditary(0));
        }
        for (x, &ok) in indep.iter().enumerate() {
            if ok && bits(x as u32).any(|b| !indep[x ^ (1 << b)]) {
                return Err(ComplexError::NotHereditary(x as u32));
            }
        }
        Ok(Self { ground, indep })
    }

    /// `U_{k,n}`: every subset of size at most `k` on vertices `u1..un`.
    pub fn uniform(k: usize, n: usize) -> Result<Self, ComplexError> {
        let ground = (1..=n).map(|i| format!("u{i}")).collect();
        Self::from_predicate(ground, |x| x.count_ones() as usize <= k)
    }

    /// Cycle matroid of a multigraph on `vertices` points; the ground is
    /// the edge list, independent sets are forests.
    pub fn graphic_matroid(vertices: usize, edges: &[(usize, usize)]) -> Result<Self, ComplexError> {
        let ground = edges.iter().map(|&(u, v)| format!("{u}-{v}")).collect();
        let edges = edges.to_vec();
        Self::from_predicate(ground, move |x| is_forest(vertices, bits(x).map(|k| edges[k])))
    }

    pub fn ground(&self) -> &[String] {
        &self.ground
    }

    pub fn ground_size(&self) -> usize {
        self.ground.len()
    }

    pub fn with_ground(mut self, ground: Vec<String>) -> Self {
        assert_eq!(ground.len(), self.ground.len());
        self.ground = ground;
        self
    }

    /// Prefixes every vertex label.
    pub fn prefixed(self, prefix: &str) -> Self {
        let g = self.ground.iter().map(|l| format!("{prefix}{l}")).collect();
        self.with_ground(g)
    }

    #[inline]
    pub fn is_independent(&self, x: u32) -> bool {
        self.indep[x as usize]
    }

    pub fn independent_sets(&self) -> impl Iterator<Item = u32> + '_ {
        (0..self.indep.len() as u32).filter(|&x| self.indep[x as usize])
    }

    pub fn facets(&self) -> Vec<u32> {
        let m = self.ground_size();
        self.independent_sets().filter(|&x| (0..m).all(|b| x & 1 << b != 0 || !self.indep[(x | 1 << b) as usize])).collect()
    }

    pub fn rank(&self) -> usize {
        self.independent_sets().map(|x| x.count_ones() as usize).max().unwrap_or(0)
    }

    /// Number of independent sets of each size `0..=rank`.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut f = vec![0; self.rank() + 1];
        for x in self.independent_sets() {
            f[x.count_ones() as usize] += 1;
        }
        f
    }

    /// Minimal dependent sets.
    pub fn circuits(&self) -> Vec<u32> {
        (0..self.indep.len() as u32)
            .filter(|&x| !self.indep[x as usize] && bits(x).all(|b| self.indep[(x ^ 1 << b) as usize]))
            .collect()
    }

    /// Vertices lying in no independent singleton.
    pub fn loops(&self) -> u32 {
        (0..self.ground_size()).filter(|&v| !self.indep[1 << v]).fold(0, |m, v| m | 1 << v)
    }

    /// Restriction to the vertices in `w`, renumbered in increasing order.
    pub fn restriction(&self, w: u32) -> Result<Self, ComplexError> {
        if w == 0 {
            return Err(ComplexError::EmptyRestriction);
        }
        let keep: Vec<usize> = bits(w).collect();
        let ground = keep.iter().map(|&v| self.ground[v].clone()).collect();
        let indep = (0..1u32 << keep.len())
            .map(|x| self.indep[bits(x).fold(0usize, |m, k| m | 1 << keep[k])])
            .collect();
        Ok(Self { ground, indep })
    }

    /// `{X ∪ Y}` on the concatenated ground sets.
    pub fn direct_sum(&self, other: &Self) -> Result<Self, ComplexError> {
        if let Some(l) = self.ground.iter().find(|l| other.ground.contains(l)) {
            return Err(ComplexError::OverlappingGrounds(l.clone()));
        }
        let (m1, m2) = (self.ground_size(), other.ground_size());
        check_ground(m1 + m2, MAX_GROUND)?;
        let mut ground = self.ground.clone();
        ground.extend(other.ground.iter().cloned());
        let low = full_mask(m1) as usize;
        let indep = (0..1usize << (m1 + m2)).map(|x| self.indep[x & low] && other.indep[x >> m1]).collect();
        Ok(Self { ground, indep })
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let m = self.ground_size();
        let mut ground = vec![String::new(); m];
        for v in 0..m {
            ground[perm[v]] = self.ground[v].clone();
        }
        let mut indep = vec![false; 1 << m];
        for x in self.independent_sets() {
            indep[map_mask(x, perm) as usize] = true;
        }
        Self { ground, indep }
    }

    /// Exchange property: for independent `I`, `J` with `|I| = |J| + 1`
    /// some `i ∈ I ∖ J` has `J + i` independent.
    pub fn is_matroid(&self) -> bool {
        let r = self.rank();
        let mut by_size: Vec<Vec<u32>> = vec![Vec::new(); r + 2];
        for x in self.independent_sets() {
            by_size[x.count_ones() as usize].push(x);
        }
        let m = self.ground_size();
        for k in 0..r {
            for &j in &by_size[k] {
                let ext = (0..m).filter(|&p| j & 1 << p == 0 && self.indep[(j | 1 << p) as usize]).fold(0u32, |a, p| a | 1 << p);
                if by_size[k + 1].iter().any(|&i| i & !j & ext == 0) {
                    return false;
                }
            }
        }
        true
    }

    /// Membership table of flats: `X` is a flat when no independent
    /// `I ⊆ X` and `p ∉ X` make `I + p` dependent.
    pub fn flat_table(&self) -> Result<Vec<bool>, ComplexError> {
        let m = self.ground_size();
        check_ground(m, MAX_FLAT_GROUND)?;
        // bad[X]: points p with I + p dependent for some independent I ⊆ X
        let mut bad = vec![0u32; 1 << m];
        for x in self.independent_sets() {
            bad[x as usize] = (0..m)
                .filter(|&p| x & 1 << p == 0 && !self.indep[(x | 1 << p) as usize])
                .fold(0, |a, p| a | 1 << p);
        }
        for b in 0..m {
            for x in 0..1usize << m {
                if x & 1 << b != 0 {
                    bad[x] |= bad[x ^ 1 << b];
                }
            }
        }
        Ok((0..1usize << m).map(|x| bad[x] & !(x as u32) == 0).collect())
    }

    pub fn flats(&self) -> Result<Vec<u32>, ComplexError> {
        let t = self.flat_table()?;
        Ok((0..t.len() as u32).filter(|&x| t[x as usize]).collect())
    }

    /// `cl(X)` for every `X`: the intersection of the flats containing it.
    pub fn closure_table(&self) -> Result<Vec<u32>, ComplexError> {
        let m = self.ground_size();
        let flat = self.flat_table()?;
        let full = full_mask(m);
        let mut cl: Vec<u32> = (0..1u32 << m).map(|x| if flat[x as usize] { x } else { full }).collect();
        for b in 0..m {
            for x in 0..1usize << m {
                if x & 1 << b == 0 {
                    cl[x] &= cl[x | 1 << b];
                }
            }
        }
        Ok(cl)
    }

    pub fn closure(&self, x: u32) -> Result<u32, ComplexError> {
        Ok(self.closure_table()?[x as usize])
    }

    /// Flats ordered by inclusion, listed by increasing bitmask.
    pub fn lattice_of_flats(&self) -> Result<(FiniteLattice, Vec<u32>), ComplexError> {
        let flats = self.flats()?;
        let labels = flats.iter().map(|&f| self.format_set(f)).collect();
        let l = lattice_from_poset(labels, |a, b| flats[a] & !flats[b] == 0)?;
        Ok((l, flats))
    }

    /// The flat lattice with each vertex sent to the closure of its
    /// singleton. Fails when the complex has loops.
    pub fn flat_representation(&self) -> Result<LatticeRepresentation, ComplexError> {
        let (lattice, flats) = self.lattice_of_flats()?;
        let cl = self.closure_table()?;
        let phi = (0..self.ground_size()).map(|v| flats.binary_search(&cl[1 << v]).unwrap()).collect();
        LatticeRepresentation::new(lattice, phi, self.ground.clone())
    }

    /// `H` coincides with the complex of its flat lattice under the
    /// singleton-closure map.
    pub fn is_boolean_representable(&self) -> Result<bool, ComplexError> {
        let cl = self.closure_table()?;
        let rep = independence_from_joins(self.ground_size(), |x| cl[x as usize] as usize, None);
        Ok(rep == self.indep)
    }

    pub fn format_set(&self, x: u32) -> String {
        let items: Vec<&str> = bits(x).map(|v| self.ground[v].as_str()).collect();
        format!("{{{}}}", items.join(","))
    }

    pub fn to_json(&self) -> ComplexJson {
        ComplexJson {
            schema_version: "1".into(),
            ground: self.ground.clone(),
            facets: self.facets().into_iter().map(|f| bits(f).collect()).collect(),
        }
    }

    pub fn from_json(json: &ComplexJson) -> Result<Self, ComplexError> {
        let m = json.ground.len();
        let mut sets = Vec::new();
        for f in &json.facets {
            if let Some(&v) = f.iter().find(|&&v| v >= m) {
                return Err(ComplexError::GroundTooLarge { size: v + 1, bound: m });
            }
            sets.push(f.iter().fold(0u32, |a, &v| a | 1 << v));
        }
        Self::from_family(json.ground.clone(), &sets)
    }
}

pub(crate) fn map_mask(x: u32, perm: &[usize]) -> u32 {
    bits(x).fold(0, |m, v| m | 1 << perm[v])
}

/// Union-find forest test; loops are cycles.
pub(crate) fn is_forest(vertices: usize, edges: impl Iterator<Item = (usize, usize)>) -> bool {
    let mut parent: Vec<usize> = (0..vertices).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for (u, v) in edges {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a == b {
            return false;
        }
        parent[a] = b;
    }
    true
}

/// `X` independent iff some `x ∈ X` has `X − x` independent with
/// `J(X − x) < J(X)`; `join_of(X)` gives `J(X)` and sets whose join is
/// `excluded` are dependent.
fn independence_from_joins(m: usize, join_of: impl Fn(u32) -> usize, excluded: Option<usize>) -> Vec<bool> {
    let size = 1usize << m;
    let joins: Vec<usize> = (0..size as u32).map(&join_of).collect();
    let mut indep = vec![false; size];
    indep[0] = true;
    for x in 1..size {
        if Some(joins[x]) == excluded {
            continue;
        }
        indep[x] = bits(x as u32).any(|b| {
            let y = x ^ 1 << b;
            indep[y] && joins[y] != joins[x]
        });
    }
    indep
}

/// A lattice with a map from a ground set whose image join-generates it.
#[derive(Debug, Clone)]
pub struct LatticeRepresentation {
    pub lattice: FiniteLattice,
    pub phi: Vec<usize>,
    pub ground: Vec<String>,
}

impl LatticeRepresentation {
    pub fn new(lattice: FiniteLattice, phi: Vec<usize>, ground: Vec<String>) -> Result<Self, ComplexError> {
        if phi.len() != ground.len() {
            return Err(ComplexError::InvalidRepresentation("φ and ground differ in length".into()));
        }
        if let Some(v) = phi.iter().position(|&x| x >= lattice.len() || x == lattice.bottom()) {
            return Err(ComplexError::InvalidRepresentation(format!("φ({}) is the bottom or out of range", ground[v])));
        }
        let rep = Self { lattice, phi, ground };
        if !rep.join_generates() {
            return Err(ComplexError::InvalidRepresentation("φ does not join-generate the lattice".into()));
        }
        Ok(rep)
    }

    fn join_generates(&self) -> bool {
        let l = &self.lattice;
        let mut seen = vec![false; l.len()];
        seen[l.bottom()] = true;
        let mut stack = vec![l.bottom()];
        while let Some(x) = stack.pop() {
            for &p in &self.phi {
                let y = l.join(x, p);
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        seen.iter().all(|&s| s)
    }

    /// `J(X) = ∨ φ(X)`, with `J(∅)` the bottom.
    pub fn join_of(&self, x: u32) -> usize {
        self.lattice.join_all(bits(x).map(|v| self.phi[v]))
    }

    fn join_table(&self) -> Vec<usize> {
        let m = self.ground.len();
        let mut j = vec![self.lattice.bottom(); 1 << m];
        for x in 1..1usize << m {
            let b = low_bit(x as u32);
            j[x] = self.lattice.join(j[x & (x - 1)], self.phi[b]);
        }
        j
    }
}

/// Sets admitting an enumeration whose partial joins strictly increase.
pub fn complex_from_lattice(rep: &LatticeRepresentation) -> Result<SimplicialComplex, ComplexError> {
    complex_from_lattice_excluding(rep, None)
}

/// As [`complex_from_lattice`], additionally rejecting sets whose join is
/// `excluded` (an adjoined top standing for an undefined join).
pub fn complex_from_lattice_excluding(
    rep: &LatticeRepresentation,
    excluded: Option<usize>,
) -> Result<SimplicialComplex, ComplexError> {
    check_ground(rep.ground.len(), MAX_GROUND)?;
    let joins = rep.join_table();
    let indep = independence_from_joins(rep.ground.len(), |x| joins[x as usize], excluded);
    Ok(SimplicialComplex { ground: rep.ground.clone(), indep })
}

/// Greedy chain certificate for a single set: peel any element whose removal
/// strictly lowers the join until nothing is left.
pub fn has_chain_certificate(rep: &LatticeRepresentation, excluded: Option<usize>, x: u32) -> bool {
    let mut rest = x;
    if Some(rep.join_of(rest)) == excluded {
        return false;
    }
    while rest != 0 {
        let j = rep.join_of(rest);
        match bits(rest).find(|&b| rep.join_of(rest ^ 1 << b) != j) {
            Some(b) => rest ^= 1 << b,
            None => return false,
        }
    }
    true
}

/// Bijection `f` (vertex `v` of `a` to `f[v]` of `b`) carrying one complex
/// onto the other, if any.
pub fn complexes_isomorphic(a: &SimplicialComplex, b: &SimplicialComplex) -> Result<Option<Vec<usize>>, ComplexError> {
    let m = a.ground_size();
    check_ground(m, MAX_GROUND)?;
    if m != b.ground_size() || a.f_vector() != b.f_vector() {
        return Ok(None);
    }
    let r = a.rank();
    let vertex_profile = |h: &SimplicialComplex| {
        let mut p = vec![vec![0usize; r + 1]; m];
        let mut pair = vec![vec![vec![0usize; r + 1]; m]; m];
        for x in h.independent_sets() {
            let k = x.count_ones() as usize;
            for u in bits(x) {
                p[u][k] += 1;
                for v in bits(x) {
                    pair[u][v][k] += 1;
                }
            }
        }
        (p, pair)
    };
    let (pa, qa) = vertex_profile(a);
    let (pb, qb) = vertex_profile(b);
    let mut sa = pa.clone();
    let mut sb = pb.clone();
    sa.sort();
    sb.sort();
    if sa != sb {
        return Ok(None);
    }
    // rarest profiles first
    let class_size = |v: usize| pa.iter().filter(|p| **p == pa[v]).count();
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by_key(|&v| (class_size(v), v));
    let mut pos = vec![0; m];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    // a with vertex order[i] renamed to i: sets checked at step k have top bit k
    let a2 = a.permuted(&pos);
    let mut by_top: Vec<Vec<u32>> = vec![Vec::new(); m];
    for x in a2.independent_sets().filter(|&x| x != 0) {
        by_top[31 - x.leading_zeros() as usize].push(x);
    }

    struct Ctx<'a> {
        order: &'a [usize],
        b: &'a SimplicialComplex,
        pa: &'a [Vec<usize>],
        pb: &'a [Vec<usize>],
        qa: &'a [Vec<Vec<usize>>],
        qb: &'a [Vec<Vec<usize>>],
        by_top: &'a [Vec<u32>],
    }

    fn go(c: &Ctx, k: usize, img: &mut Vec<usize>, used: &mut u32) -> bool {
        if k == c.order.len() {
            return true;
        }
        let x = c.order[k];
        for y in 0..c.b.ground_size() {
            if *used & 1 << y != 0 || c.pa[x] != c.pb[y] {
                continue;
            }
            if (0..k).any(|i| c.qa[c.order[i]][x] != c.qb[img[i]][y]) {
                continue;
            }
            img.push(y);
            let forward = c.by_top[k].iter().all(|&s| c.b.is_independent(bits(s).fold(0, |mm, i| mm | 1 << img[i])));
            // both sides must have equally many independent sets through the new vertex
            let ok = forward && {
                let prefix = *used;
                let mut count = 0;
                let mut s = prefix;
                loop {
                    if c.b.is_independent(s | 1 << y) {
                        count += 1;
                    }
                    if s == 0 {
                        break;
                    }
                    s = (s - 1) & prefix;
                }
                count == c.by_top[k].len()
            };
            if ok {
                *used |= 1 << y;
                if go(c, k + 1, img, used) {
                    return true;
                }
                *used &= !(1 << y);
            }
            img.pop();
        }
        false
    }

    let ctx = Ctx { order: &order, b, pa: &pa, pb: &pb, qa: &qa, qb: &qb, by_top: &by_top };
    let mut img = Vec::with_capacity(m);
    let mut used = 0u32;
    if !go(&ctx, 0, &mut img, &mut used) {
        return Ok(None);
    }
    let mut f = vec![0; m];
    for (i, &v) in order.iter().enumerate() {
        f[v] = img[i];
    }
    Ok(Some(f))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{chain, powerset};

    fn labels(m: usize) -> Vec<String> {
        (0..m).map(|i| format!("v{i}")).collect()
    }

    #[test]
    fn family_closure_and_facets() {
        let h = SimplicialComplex::from_family(labels(3), &[0b011, 0b100]).unwrap();
        assert!(h.is_independent(0b001) && h.is_independent(0b100));
        assert!(!h.is_independent(0b101));
        assert_eq!(h.facets(), vec![0b011, 0b100]);
        assert_eq!(h.rank(), 2);
        assert!(!h.is_matroid());
        assert!(matches!(
            SimplicialComplex::from_predicate(labels(2), |x| x == 0 || x == 3),
            Err(ComplexError::NotHereditary(_))
        ));
    }

    #[test]
    fn uniform_and_sums() {
        let u11 = SimplicialComplex::uniform(1, 1).unwrap();
        let s = u11.clone().prefixed("a").direct_sum(&u11.clone().prefixed("b")).unwrap();
        assert!(complexes_isomorphic(&s, &SimplicialComplex::uniform(2, 2).unwrap()).unwrap().is_some());
        assert!(matches!(u11.direct_sum(&u11), Err(ComplexError::OverlappingGrounds(_))));
        let u23 = SimplicialComplex::uniform(2, 3).unwrap();
        let u33 = SimplicialComplex::uniform(3, 3).unwrap();
        assert_eq!(complexes_isomorphic(&u23, &u33).unwrap(), None);
        assert!(u23.is_matroid());
        assert!(u23.restriction(0).is_err());
        assert_eq!(u23.restriction(0b011).unwrap().facets(), vec![0b11]);
    }

    #[test]
    fn graphic_examples() {
        let k3 = SimplicialComplex::graphic_matroid(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        assert_eq!(k3.facets(), vec![0b011, 0b101, 0b110]);
        let (l, _) = k3.lattice_of_flats().unwrap();
        assert_eq!(l.len(), 5);
        let two = SimplicialComplex::graphic_matroid(2, &[(0, 1), (0, 1)]).unwrap();
        assert_eq!(two.facets(), vec![0b01, 0b10]);
    }

    #[test]
    fn flats_and_closure() {
        let u = SimplicialComplex::uniform(3, 3).unwrap();
        assert_eq!(u.flats().unwrap().len(), 8);
        let h = SimplicialComplex::from_family(labels(3), &[0b011]).unwrap();
        assert_eq!(h.closure(0).unwrap(), 0b100);
        assert_eq!(h.loops(), 0b100);
        // every matroid is Boolean representable
        for c in [&u, &h] {
            assert!(c.is_boolean_representable().unwrap());
        }
    }

    #[test]
    fn chain_representation_gives_free_complex() {
        for n in 1..=5 {
            let c = chain(n + 1).unwrap();
            let rep = LatticeRepresentation::new(c, (1..=n).collect(), labels(n)).unwrap();
            let h = complex_from_lattice(&rep).unwrap();
            assert_eq!(h, SimplicialComplex::uniform(n, n).unwrap().with_ground(labels(n)));
        }
        let c = chain(2).unwrap();
        let rep = LatticeRepresentation::new(c, vec![1], labels(1)).unwrap();
        assert_eq!(complex_from_lattice(&rep).unwrap().independent_sets().count(), 2);
    }

    #[test]
    fn representation_validation() {
        let p = powerset(2).unwrap();
        assert!(LatticeRepresentation::new(p.clone(), vec![0, 1], labels(2)).is_err());
        assert!(LatticeRepresentation::new(p.clone(), vec![1], labels(1)).is_err());
        assert!(LatticeRepresentation::new(p, vec![1, 2], labels(2)).is_ok());
    }

    #[test]
    fn json_round_trip() {
        let k3 = SimplicialComplex::graphic_matroid(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        let j = k3.to_json();
        assert_eq!(SimplicialComplex::from_json(&j).unwrap(), k3);
    }

    #[test]
    fn isomorphism_finds_permutation() {
        let k3 = SimplicialComplex::graphic_matroid(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        let perm = [3, 1, 0, 2];
        let p = k3.permuted(&perm);
        let f = complexes_isomorphic(&k3, &p).unwrap().unwrap();
        for x in k3.independent_sets() {
            assert!(p.is_independent(map_mask(x, &f)));
        }
    }
}
