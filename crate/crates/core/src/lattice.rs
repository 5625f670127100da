//! Explicit finite posets and lattices, and constructors for the lattices
//! built from SPCs, partitions and subsets.

use serde::Serialize;
use thiserror::Error;

use crate::bitset::Bits;
use crate::group::FiniteGroup;
use crate::partition::{enumerate_partitions, PartialPartition};
use crate::spc::{Spc, SpcSpace};

/// Default bound on the number of elements of a lattice.
pub const DEFAULT_MAX_ELEMENTS: usize = 100_000;
/// Meet/join tables are stored up to this many elements.
pub const TABLE_LIMIT: usize = 2000;
/// Largest lattices handed to [`lattice_isomorphic`].
pub const ISO_LIMIT: usize = 2000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("relation is not a partial order: {0}")]
    NotAPartialOrder(String),
    #[error("elements {a} and {b} have no {kind}")]
    NotALattice { a: usize, b: usize, kind: BoundKind },
    #[error("too many elements: {size} > {bound}")]
    TooLarge { size: usize, bound: usize },
    #[error("argument out of range: {0}")]
    ArgumentOutOfRange(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    Meet,
    Join,
}

impl std::fmt::Display for BoundKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            BoundKind::Meet => "greatest lower bound",
            BoundKind::Join => "least upper bound",
        })
    }
}

/// A finite partial order stored as down-sets and up-sets.
#[derive(Debug, Clone)]
pub struct FinitePoset {
    labels: Vec<String>,
    down: Vec<Bits>,
    up: Vec<Bits>,
}

#[derive(Debug, Clone, Serialize)]
pub struct PosetJson {
    pub schema_version: &'static str,
    pub elements: Vec<String>,
    pub covers: Vec<(usize, usize)>,
}

impl FinitePoset {
    /// Builds and validates a poset from a `leq` predicate.
    pub fn new(labels: Vec<String>, leq: impl Fn(usize, usize) -> bool) -> Result<Self, LatticeError> {
        Self::with_bound(labels, leq, DEFAULT_MAX_ELEMENTS)
    }

    pub fn with_bound(
        labels: Vec<String>,
        leq: impl Fn(usize, usize) -> bool,
        bound: usize,
    ) -> Result<Self, LatticeError> {
        let n = labels.len();
        if n > bound {
            return Err(LatticeError::TooLarge { size: n, bound });
        }
        let mut down = vec![Bits::new(n); n];
        let mut up = vec![Bits::new(n); n];
        for a in 0..n {
            for b in 0..n {
                if leq(a, b) {
                    down[b].set(a);
                    up[a].set(b);
                }
            }
        }
        let p = Self { labels, down, up };
        p.validate()?;
        Ok(p)
    }

    fn validate(&self) -> Result<(), LatticeError> {
        let n = self.len();
        for a in 0..n {
            if !self.leq(a, a) {
                return Err(LatticeError::NotAPartialOrder(format!("{} is not ≤ itself", self.labels[a])));
            }
            for b in self.up[a].iter() {
                if b != a && self.leq(b, a) {
                    return Err(LatticeError::NotAPartialOrder(format!(
                        "{} and {} are mutually ≤",
                        self.labels[a], self.labels[b]
                    )));
                }
                // up(b) ⊆ up(a) whenever a ≤ b
                if self.up[b].and_count(&self.up[a]) != self.up[b].count() {
                    return Err(LatticeError::NotAPartialOrder(format!(
                        "transitivity fails above {} ≤ {}",
                        self.labels[a], self.labels[b]
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up[a].get(b)
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    /// Does `b` cover `a`?
    pub fn covers(&self, a: usize, b: usize) -> bool {
        self.lt(a, b) && self.up[a].and_count(&self.down[b]) == 2
    }

    pub fn lower_covers(&self, x: usize) -> Vec<usize> {
        self.down[x].iter().filter(|&y| self.covers(y, x)).collect()
    }

    pub fn upper_covers(&self, x: usize) -> Vec<usize> {
        self.up[x].iter().filter(|&y| self.covers(x, y)).collect()
    }

    /// All cover pairs `(lower, upper)`, sorted.
    pub fn cover_relation(&self) -> Vec<(usize, usize)> {
        (0..self.len()).flat_map(|x| self.upper_covers(x).into_iter().map(move |y| (x, y))).collect()
    }

    pub fn minimum(&self) -> Option<usize> {
        (0..self.len()).find(|&x| self.up[x].count() == self.len())
    }

    pub fn maximum(&self) -> Option<usize> {
        (0..self.len()).find(|&x| self.down[x].count() == self.len())
    }

    /// Elements covering exactly one element.
    pub fn join_irreducibles(&self) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.lower_covers(x).len() == 1).collect()
    }

    /// Elements covered by exactly one element.
    pub fn meet_irreducibles(&self) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.upper_covers(x).len() == 1).collect()
    }

    /// Covers of the minimum (empty if there is none).
    pub fn atoms(&self) -> Vec<usize> {
        match self.minimum() {
            Some(b) => self.upper_covers(b),
            None => Vec::new(),
        }
    }

    /// Length of the longest chain from a minimal element to each element.
    pub fn rank_function(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&x| self.down[x].count());
        let mut h = vec![0; self.len()];
        for &x in &order {
            h[x] = self.down[x].iter().filter(|&y| y != x).map(|y| h[y] + 1).max().unwrap_or(0);
        }
        h
    }

    /// Length of the longest chain from each element to a maximal element.
    fn depth_function(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&x| self.up[x].count());
        let mut d = vec![0; self.len()];
        for &x in &order {
            d[x] = self.up[x].iter().filter(|&y| y != x).map(|y| d[y] + 1).max().unwrap_or(0);
        }
        d
    }

    pub fn meet_of(&self, a: usize, b: usize) -> Option<usize> {
        let common = self.down[a].and(&self.down[b]);
        let c = common.iter().max_by_key(|&c| self.down[c].count())?;
        (self.down[c] == common).then_some(c)
    }

    pub fn join_of(&self, a: usize, b: usize) -> Option<usize> {
        let common = self.up[a].and(&self.up[b]);
        let c = common.iter().max_by_key(|&c| self.up[c].count())?;
        (self.up[c] == common).then_some(c)
    }

    /// First pair lacking a meet or join, if any.
    pub fn lattice_witness(&self) -> Option<(usize, usize, BoundKind)> {
        if self.is_empty() {
            return None;
        }
        for a in 0..self.len() {
            for b in a + 1..self.len() {
                if self.meet_of(a, b).is_none() {
                    return Some((a, b, BoundKind::Meet));
                }
                if self.join_of(a, b).is_none() {
                    return Some((a, b, BoundKind::Join));
                }
            }
        }
        None
    }

    /// Sub-poset on `keep` (in that order), with the induced order.
    pub fn induced(&self, keep: &[usize]) -> FinitePoset {
        let labels = keep.iter().map(|&i| self.labels[i].clone()).collect();
        let n = keep.len();
        let mut down = vec![Bits::new(n); n];
        let mut up = vec![Bits::new(n); n];
        for (i, &a) in keep.iter().enumerate() {
            for (j, &b) in keep.iter().enumerate() {
                if self.leq(a, b) {
                    down[j].set(i);
                    up[i].set(j);
                }
            }
        }
        FinitePoset { labels, down, up }
    }

    /// The same poset with one extra element above everything.
    pub fn with_top(&self, label: &str) -> FinitePoset {
        let n = self.len() + 1;
        let mut labels = self.labels.clone();
        labels.push(label.to_string());
        FinitePoset::new(labels, |a, b| b == n - 1 || (a < n - 1 && self.leq(a, b))).expect("adjoining a top keeps a partial order")
    }

    pub fn to_json(&self) -> PosetJson {
        PosetJson { schema_version: "1", elements: self.labels.clone(), covers: self.cover_relation() }
    }

    /// Hasse diagram, bottom to top.
    pub fn to_dot(&self, name: &str) -> String {
        let mut s = format!("digraph \"{name}\" {{\n  rankdir=BT;\n");
        for (i, l) in self.labels.iter().enumerate() {
            s.push_str(&format!("  n{i} [label=\"{}\"];\n", l.replace('"', "\\\"")));
        }
        for (a, b) in self.cover_relation() {
            s.push_str(&format!("  n{a} -> n{b};\n"));
        }
        s.push_str("}\n");
        s
    }
}

/// A validated finite lattice.
#[derive(Debug, Clone)]
pub struct FiniteLattice {
    poset: FinitePoset,
    bottom: usize,
    top: usize,
    meet: Option<Vec<u32>>,
    join: Option<Vec<u32>>,
}

impl std::ops::Deref for FiniteLattice {
    type Target = FinitePoset;
    fn deref(&self) -> &FinitePoset {
        &self.poset
    }
}

/// Validates a poset given by `leq` and returns it as a lattice.
pub fn lattice_from_poset(labels: Vec<String>, leq: impl Fn(usize, usize) -> bool) -> Result<FiniteLattice, LatticeError> {
    FiniteLattice::from_poset(FinitePoset::new(labels, leq)?)
}

impl FiniteLattice {
    pub fn from_poset(poset: FinitePoset) -> Result<Self, LatticeError> {
        if poset.is_empty() {
            return Err(LatticeError::ArgumentOutOfRange("empty poset".into()));
        }
        if let Some((a, b, kind)) = poset.lattice_witness() {
            return Err(LatticeError::NotALattice { a, b, kind });
        }
        let bottom = poset.minimum().expect("validated");
        let top = poset.maximum().expect("validated");
        let n = poset.len();
        let (meet, join) = if n <= TABLE_LIMIT {
            let mut m = vec![0u32; n * n];
            let mut j = vec![0u32; n * n];
            for a in 0..n {
                for b in a..n {
                    let x = poset.meet_of(a, b).unwrap() as u32;
                    let y = poset.join_of(a, b).unwrap() as u32;
                    m[a * n + b] = x;
                    m[b * n + a] = x;
                    j[a * n + b] = y;
                    j[b * n + a] = y;
                }
            }
            (Some(m), Some(j))
        } else {
            (None, None)
        };
        Ok(Self { poset, bottom, top, meet, join })
    }

    pub fn poset(&self) -> &FinitePoset {
        &self.poset
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    #[inline]
    pub fn meet(&self, a: usize, b: usize) -> usize {
        match &self.meet {
            Some(t) => t[a * self.len() + b] as usize,
            None => self.poset.meet_of(a, b).unwrap(),
        }
    }

    #[inline]
    pub fn join(&self, a: usize, b: usize) -> usize {
        match &self.join {
            Some(t) => t[a * self.len() + b] as usize,
            None => self.poset.join_of(a, b).unwrap(),
        }
    }

    pub fn join_all(&self, xs: impl IntoIterator<Item = usize>) -> usize {
        xs.into_iter().fold(self.bottom, |acc, x| self.join(acc, x))
    }

    /// Every element is the join of the atoms below it.
    pub fn is_atomistic(&self) -> bool {
        let atoms = self.atoms();
        (0..self.len()).all(|x| self.join_all(atoms.iter().copied().filter(|&a| self.leq(a, x))) == x)
    }

    /// Whenever `v` covers `v ∧ w`, `v ∨ w` covers `w`.
    pub fn is_semimodular(&self) -> bool {
        (0..self.len()).all(|v| {
            (0..self.len()).all(|w| !self.covers(self.meet(v, w), v) || self.covers(w, self.join(v, w)))
        })
    }

    pub fn is_geometric(&self) -> bool {
        self.is_atomistic() && self.is_semimodular()
    }

    /// `L ∖ {m}` for a meet-irreducible `m`, together with the map sending
    /// `m` to its unique cover and renumbering the rest.
    pub fn collapse_meet_irreducible(&self, m: usize) -> Result<(FiniteLattice, Vec<usize>), LatticeError> {
        let ups = self.upper_covers(m);
        if ups.len() != 1 {
            return Err(LatticeError::ArgumentOutOfRange(format!("{} is not meet-irreducible", self.label(m))));
        }
        let keep: Vec<usize> = (0..self.len()).filter(|&x| x != m).collect();
        let mut map = vec![0; self.len()];
        for (i, &x) in keep.iter().enumerate() {
            map[x] = i;
        }
        map[m] = map[ups[0]];
        Ok((FiniteLattice::from_poset(self.poset.induced(&keep))?, map))
    }
}

/// Order isomorphism `f` with `f(i)` the image of element `i`, if one exists.
pub fn lattice_isomorphic(a: &FinitePoset, b: &FinitePoset) -> Result<Option<Vec<usize>>, LatticeError> {
    let n = a.len();
    if n > ISO_LIMIT || b.len() > ISO_LIMIT {
        return Err(LatticeError::TooLarge { size: n.max(b.len()), bound: ISO_LIMIT });
    }
    if n != b.len() {
        return Ok(None);
    }
    let profile = |p: &FinitePoset| -> Vec<(usize, usize, usize, usize, usize, usize)> {
        let (h, d) = (p.rank_function(), p.depth_function());
        (0..p.len())
            .map(|x| (h[x], d[x], p.lower_covers(x).len(), p.upper_covers(x).len(), p.down[x].count(), p.up[x].count()))
            .collect()
    };
    let (pa, pb) = (profile(a), profile(b));
    let mut sa = pa.clone();
    let mut sb = pb.clone();
    sa.sort();
    sb.sort();
    if sa != sb {
        return Ok(None);
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| (pa[x].0, x));
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];

    fn go(
        k: usize,
        order: &[usize],
        a: &FinitePoset,
        b: &FinitePoset,
        pa: &[(usize, usize, usize, usize, usize, usize)],
        pb: &[(usize, usize, usize, usize, usize, usize)],
        image: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if k == order.len() {
            return true;
        }
        let x = order[k];
        for y in 0..b.len() {
            if used[y] || pa[x] != pb[y] {
                continue;
            }
            let ok = order[..k].iter().all(|&u| {
                let v = image[u];
                a.leq(u, x) == b.leq(v, y) && a.leq(x, u) == b.leq(y, v)
            });
            if !ok {
                continue;
            }
            image[x] = y;
            used[y] = true;
            if go(k + 1, order, a, b, pa, pb, image, used) {
                return true;
            }
            used[y] = false;
        }
        image[x] = usize::MAX;
        false
    }

    Ok(go(0, &order, a, b, &pa, &pb, &mut image, &mut used).then_some(image))
}

// ---- constructors ----

/// Chain `0 < 1 < … < k−1`.
pub fn chain(k: usize) -> Result<FiniteLattice, LatticeError> {
    lattice_from_poset((0..k).map(|i| i.to_string()).collect(), |a, b| a <= b)
}

fn format_set(mask: u32) -> String {
    let items: Vec<String> = crate::partition::bits(mask).map(|p| (p + 1).to_string()).collect();
    format!("{{{}}}", items.join(","))
}

/// Subsets of `{1..n}` ordered by inclusion; element `i` is the subset with
/// bitmask `i`.
pub fn powerset(n: usize) -> Result<FiniteLattice, LatticeError> {
    if n > 12 {
        return Err(LatticeError::ArgumentOutOfRange(format!("n = {n}")));
    }
    let labels = (0..1u32 << n).map(format_set).collect();
    lattice_from_poset(labels, |a, b| a & !b == 0)
}

/// Full partitions of an `m`-point set (points `0..m`) under refinement.
pub fn build_partition_lattice(m: usize) -> Result<(FiniteLattice, Vec<PartialPartition>), LatticeError> {
    if m == 0 || m > 6 {
        return Err(LatticeError::ArgumentOutOfRange(format!("m = {m}")));
    }
    let parts = enumerate_partitions(m);
    let labels = parts.iter().map(|p| p.to_string()).collect();
    let l = lattice_from_poset(labels, |a, b| parts[a].refines_unchecked(&parts[b]))?;
    Ok((l, parts))
}

fn check_spc_range(n: usize, group: &FiniteGroup) -> Result<(), LatticeError> {
    let ok = n >= 1 && ((n <= 3 && group.order() <= 4) || (n <= 4 && group.is_trivial()));
    if ok {
        Ok(())
    } else {
        Err(LatticeError::ArgumentOutOfRange(format!(
            "n = {n}, |G| = {} (need n ≤ 3 and |G| ≤ 4, or n ≤ 4 with G trivial)",
            group.order()
        )))
    }
}

/// A lattice whose elements are SPCs, possibly with an adjoined top.
#[derive(Debug, Clone)]
pub struct SpcLattice {
    pub space: SpcSpace,
    pub lattice: FiniteLattice,
    pub spcs: Vec<Spc>,
    /// Index of the adjoined top `T`, when present (always `spcs.len()`).
    pub top_sentinel: Option<usize>,
}

impl SpcLattice {
    pub fn index_of(&self, s: &Spc) -> Option<usize> {
        self.spcs.iter().position(|t| t == s)
    }
}

/// The Rhodes order on SPCs, which need not be a lattice.
#[derive(Debug, Clone)]
pub struct RhodesPoset {
    pub space: SpcSpace,
    pub poset: FinitePoset,
    pub spcs: Vec<Spc>,
    pub is_lattice: bool,
    /// A pair without a least upper bound when `is_lattice` is false.
    pub witness: Option<(usize, usize)>,
}

fn spc_labels(space: &SpcSpace, spcs: &[Spc]) -> Vec<String> {
    spcs.iter().map(|s| space.format(s)).collect()
}

/// `Q_n(G)`: all SPCs under the Dowling order.
pub fn build_dowling(n: usize, group: &FiniteGroup) -> Result<SpcLattice, LatticeError> {
    check_spc_range(n, group)?;
    let space = SpcSpace::new(n, group.clone()).map_err(|e| LatticeError::ArgumentOutOfRange(e.to_string()))?;
    let spcs = space.enumerate_unbounded();
    let lattice = lattice_from_poset(spc_labels(&space, &spcs), |a, b| space.dowling_leq_raw(&spcs[a], &spcs[b]))?;
    Ok(SpcLattice { space, lattice, spcs, top_sentinel: None })
}

/// `R_n(G)`: all SPCs under the Rhodes order.
pub fn build_rhodes(n: usize, group: &FiniteGroup) -> Result<RhodesPoset, LatticeError> {
    check_spc_range(n, group)?;
    let space = SpcSpace::new(n, group.clone()).map_err(|e| LatticeError::ArgumentOutOfRange(e.to_string()))?;
    let spcs = space.enumerate_unbounded();
    let poset = FinitePoset::new(spc_labels(&space, &spcs), |a, b| space.rhodes_leq_raw(&spcs[a], &spcs[b]))?;
    let witness = poset.lattice_witness().map(|(a, b, _)| (a, b));
    Ok(RhodesPoset { space, poset, spcs, is_lattice: witness.is_none(), witness })
}

/// `R̂_n(G)`: the Rhodes order with a top `T` adjoined when it is not
/// already a lattice.
pub fn build_rhodes_hat(n: usize, group: &FiniteGroup) -> Result<SpcLattice, LatticeError> {
    let r = build_rhodes(n, group)?;
    if r.is_lattice {
        let lattice = FiniteLattice::from_poset(r.poset)?;
        return Ok(SpcLattice { space: r.space, lattice, spcs: r.spcs, top_sentinel: None });
    }
    let top = r.spcs.len();
    let lattice = FiniteLattice::from_poset(r.poset.with_top("T"))?;
    Ok(SpcLattice { space: r.space, lattice, spcs: r.spcs, top_sentinel: Some(top) })
}

/// `L_n`: pairs `(∅, i)` for `i < n` and `(I, n)` for `I ⊆ {1..n−1}`,
/// ordered componentwise.
#[derive(Debug, Clone)]
pub struct LnLattice {
    pub n: usize,
    pub lattice: FiniteLattice,
    /// `(I as a zero-based bitmask, i)` per element.
    pub elements: Vec<(u32, usize)>,
}

pub fn build_ln(n: usize) -> Result<LnLattice, LatticeError> {
    if !(2..=6).contains(&n) {
        return Err(LatticeError::ArgumentOutOfRange(format!("n = {n}, expected 2..=6")));
    }
    let mut elements: Vec<(u32, usize)> = (0..n).map(|i| (0, i)).collect();
    elements.extend((0..1u32 << (n - 1)).map(|m| (m, n)));
    let labels = elements.iter().map(|&(m, i)| format!("({},{i})", if m == 0 { "∅".into() } else { format_set(m) })).collect();
    let lattice = lattice_from_poset(labels, |a, b| {
        let ((ia, xa), (ib, xb)) = (elements[a], elements[b]);
        ia & !ib == 0 && xa <= xb
    })?;
    Ok(LnLattice { n, lattice, elements })
}

impl LnLattice {
    pub fn index_of(&self, mask: u32, i: usize) -> Option<usize> {
        self.elements.iter().position(|&e| e == (mask, i))
    }

    /// `φ` on `A_n` listed as in [`SpcSpace::join_irreducibles_rhodes`]:
    /// `({i}, ω) ↦ (∅, i)` and `({i,j}, ω) ↦ ({i,j} ∖ {n}, n)`.
    pub fn phi(&self, group_order: usize) -> Vec<usize> {
        let n = self.n;
        let mut out: Vec<usize> = (1..=n).map(|i| self.index_of(0, i).unwrap()).collect();
        for i in 0..n {
            for j in i + 1..n {
                let mask = [i, j].iter().filter(|&&p| p != n - 1).fold(0u32, |m, &p| m | 1 << p);
                let idx = self.index_of(mask, n).unwrap();
                out.extend(std::iter::repeat(idx).take(group_order));
            }
        }
        out
    }

    /// Meet-irreducibles sorted by (second component, first component as a
    /// bitmask).
    pub fn meet_irreducibles_sorted(&self) -> Vec<usize> {
        let mut m = self.lattice.meet_irreducibles();
        m.sort_by_key(|&x| (self.elements[x].1, self.elements[x].0));
        m
    }
}

/// `2^n` with `φ′(η_ij) = {i,j} ∖ {0}` on the edges of `K_{n+1}`
/// (vertices `0..=n`, edges in lexicographic order).
#[derive(Debug, Clone)]
pub struct PowersetLattice {
    pub n: usize,
    pub lattice: FiniteLattice,
}

pub fn build_powerset(n: usize) -> Result<PowersetLattice, LatticeError> {
    if !(2..=6).contains(&n) {
        return Err(LatticeError::ArgumentOutOfRange(format!("n = {n}, expected 2..=6")));
    }
    Ok(PowersetLattice { n, lattice: powerset(n)? })
}

impl PowersetLattice {
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.n;
        (0..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect()
    }

    pub fn phi_prime(&self) -> Vec<usize> {
        // subset {i,j} ∖ {0} of {1..n} as a zero-based mask
        self.edges()
            .into_iter()
            .map(|(i, j)| [i, j].iter().filter(|&&v| v != 0).fold(0usize, |m, &v| m | 1 << (v - 1)))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_constructions() {
        let c = chain(3).unwrap();
        assert_eq!((c.bottom(), c.top()), (0, 2));
        assert_eq!(c.join(0, 1), 1);
        let anti = lattice_from_poset(vec!["a".into(), "b".into()], |a, b| a == b);
        assert!(matches!(anti, Err(LatticeError::NotALattice { .. })));
        let p = powerset(2).unwrap();
        for a in 0..4 {
            for b in 0..4 {
                assert_eq!(p.meet(a, b), a & b);
                assert_eq!(p.join(a, b), a | b);
            }
        }
        assert_eq!(p.atoms(), vec![1, 2]);
        assert!(p.is_geometric());
        let cyc = FinitePoset::new(vec!["a".into(), "b".into()], |_, _| true);
        assert!(matches!(cyc, Err(LatticeError::NotAPartialOrder(_))));
    }

    #[test]
    fn rhodes_lattice_cases() {
        let one = FiniteGroup::trivial();
        let z2 = FiniteGroup::cyclic(2).unwrap();
        for n in 1..=3 {
            assert!(build_rhodes(n, &one).unwrap().is_lattice);
        }
        let r = build_rhodes(2, &z2).unwrap();
        assert!(!r.is_lattice);
        assert!(r.witness.is_some());
        assert_eq!(build_rhodes(2, &one).unwrap().spcs.len(), 5);
        assert_eq!(build_rhodes_hat(2, &z2).unwrap().lattice.len(), 7);
        assert!(build_rhodes(4, &z2).is_err());
    }

    #[test]
    fn rhodes_trivial_not_atomistic() {
        let r = build_rhodes_hat(2, &FiniteGroup::trivial()).unwrap();
        assert!(!r.lattice.is_atomistic());
    }

    #[test]
    fn dowling_geometric_and_partition_iso() {
        for n in 1..=3 {
            for m in 1..=3 {
                let g = FiniteGroup::cyclic(m).unwrap();
                assert!(build_dowling(n, &g).unwrap().lattice.is_geometric(), "n={n} m={m}");
            }
            let q = build_dowling(n, &FiniteGroup::trivial()).unwrap();
            let (pi, _) = build_partition_lattice(n + 1).unwrap();
            assert!(lattice_isomorphic(&q.lattice, &pi).unwrap().is_some());
        }
    }

    #[test]
    fn ln_facts() {
        let l3 = build_ln(3).unwrap();
        assert_eq!(l3.lattice.len(), 7);
        let a = l3.index_of(0, 1).unwrap();
        let b = l3.index_of(0b10, 3).unwrap();
        assert_eq!(l3.lattice.join(a, b), b);
        for n in 2..=6 {
            let l = build_ln(n).unwrap();
            assert_eq!(l.lattice.len(), n + (1 << (n - 1)));
            assert_eq!(l.lattice.meet_irreducibles().len(), 2 * n - 1);
            // φ(A_n) join-generates: every element is a join of images
            let phi = l.phi(1);
            let mut reach = vec![false; l.lattice.len()];
            for mask in 0u32..1 << phi.len() {
                let j = l.lattice.join_all(crate::partition::bits(mask).map(|k| phi[k]));
                reach[j] = true;
            }
            assert!(reach.iter().all(|&r| r));
        }
        assert!(build_ln(1).is_err());
    }

    #[test]
    fn isomorphism_basics() {
        let c = chain(3).unwrap();
        let p = powerset(2).unwrap();
        assert_eq!(lattice_isomorphic(&c, &p).unwrap(), None);
        assert_eq!(lattice_isomorphic(&p, &p).unwrap().map(|f| f.len()), Some(4));
        let (pi3, _) = build_partition_lattice(3).unwrap();
        assert_eq!(pi3.len(), 5);
    }

    #[test]
    fn exports() {
        let c = chain(2).unwrap();
        let j = serde_json::to_value(c.to_json()).unwrap();
        assert_eq!(j["covers"], serde_json::json!([[0, 1]]));
        assert!(c.to_dot("c").contains("n0 -> n1"));
    }
}
