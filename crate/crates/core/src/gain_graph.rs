//! Gain graphs over a finite group: balance, frame and lift matroids,
//! circuit and flat classification, and recovery of the group from the
//! lift matroid of the complete gain graph on three vertices.

use std::fmt::Write as _;

use thiserror::Error;

use crate::complex::{ComplexError, SimplicialComplex, MAX_GROUND};
use crate::group::{FiniteGroup, GroupError};
use crate::partition::{bits, low_bit};

/// Edge subsets are bitmasks, so at most this many edges.
pub const MAX_EDGES: usize = 32;
/// Cycle enumeration (used by the flat predicates) runs over edge subsets.
pub const MAX_CYCLE_EDGES: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GainGraphError {
    #[error("argument out of range: {0}")]
    ArgumentOutOfRange(String),
    #[error("edge sequence is not a closed walk on distinct edges")]
    NotAClosedWalk,
    #[error("edge set is not a circuit")]
    NotACircuit,
    #[error("circuit of unexpected shape")]
    UnclassifiedCircuit,
    #[error("too many edges: {size} > {bound}")]
    TooLarge { size: usize, bound: usize },
    #[error("input is not the expected matroid: {0}")]
    NotAFrameOfExpectedShape(String),
    #[error("cannot parse edge list: {0}")]
    Parse(String),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

/// Edge `u → v` with gain `g`; stored with `u ≤ v`. A loop has `u = v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GainEdge {
    pub u: usize,
    pub v: usize,
    pub g: usize,
}

#[derive(Debug, Clone)]
pub struct GainGraph {
    vertices: usize,
    group: FiniteGroup,
    edges: Vec<GainEdge>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Frame,
    Lift,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CircuitTag {
    BalancedCycle,
    TightHandcuff,
    LooseHandcuff,
    DisjointUnbalancedPair,
    UnbalancedTheta,
}

impl GainGraph {
    pub fn new(vertices: usize, group: FiniteGroup) -> Result<Self, GainGraphError> {
        if vertices == 0 || vertices > 32 {
            return Err(GainGraphError::ArgumentOutOfRange(format!("{vertices} vertices")));
        }
        Ok(Self { vertices, group, edges: Vec::new() })
    }

    /// Adds the edge `u → v` with gain `g` (zero-based vertices) and returns
    /// its id. Reversed input is stored with the inverse gain.
    pub fn add_edge(&mut self, u: usize, v: usize, g: usize) -> Result<usize, GainGraphError> {
        if u >= self.vertices || v >= self.vertices || g >= self.group.order() {
            return Err(GainGraphError::ArgumentOutOfRange(format!("edge {u} {v} {g}")));
        }
        if self.edges.len() == MAX_EDGES {
            return Err(GainGraphError::TooLarge { size: MAX_EDGES + 1, bound: MAX_EDGES });
        }
        let e = if u <= v { GainEdge { u, v, g } } else { GainEdge { u: v, v: u, g: self.group.inv(g) } };
        self.edges.push(e);
        Ok(self.edges.len() - 1)
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn edges(&self) -> &[GainEdge] {
        &self.edges
    }

    pub fn edge_mask(&self) -> u32 {
        crate::partition::full_mask(self.edges.len())
    }

    pub fn edge_label(&self, e: usize) -> String {
        let x = self.edges[e];
        format!("{}-{}:{}", x.u + 1, x.v + 1, self.group.label(x.g))
    }

    /// Gain of edge `e` traversed starting from vertex `from`.
    fn gain_from(&self, e: usize, from: usize) -> usize {
        let x = self.edges[e];
        if from == x.u {
            x.g
        } else {
            self.group.inv(x.g)
        }
    }

    /// Product of the gains along an oriented edge sequence starting at
    /// `start`; each `(edge, forward)` is traversed `u → v` when forward.
    pub fn cycle_label(&self, start: usize, walk: &[(usize, bool)]) -> Result<usize, GainGraphError> {
        let mut at = start;
        let mut label = self.group.identity();
        let mut used = 0u64;
        if walk.is_empty() {
            return Err(GainGraphError::NotAClosedWalk);
        }
        for &(e, forward) in walk {
            if e >= self.edges.len() || used & 1 << e != 0 {
                return Err(GainGraphError::NotAClosedWalk);
            }
            used |= 1 << e;
            let x = self.edges[e];
            let (from, to, g) = if forward { (x.u, x.v, x.g) } else { (x.v, x.u, self.group.inv(x.g)) };
            if from != at {
                return Err(GainGraphError::NotAClosedWalk);
            }
            label = self.group.mul(label, g);
            at = to;
        }
        if at != start {
            return Err(GainGraphError::NotAClosedWalk);
        }
        Ok(label)
    }

    pub fn is_balanced_cycle(&self, start: usize, walk: &[(usize, bool)]) -> Result<bool, GainGraphError> {
        Ok(self.cycle_label(start, walk)? == self.group.identity())
    }

    /// Vertices touched by the edge set `x`.
    pub fn vertex_mask(&self, x: u32) -> u32 {
        bits(x).fold(0, |m, e| m | 1 << self.edges[e].u | 1 << self.edges[e].v)
    }

    /// Connected components of the subgraph spanned by edge set `x`, as
    /// (vertex mask, edge mask) pairs.
    pub fn components(&self, x: u32) -> Vec<(u32, u32)> {
        let mut comps: Vec<(u32, u32)> = Vec::new();
        for e in bits(x) {
            let ed = self.edges[e];
            let vm = 1u32 << ed.u | 1 << ed.v;
            let mut acc = (vm, 1u32 << e);
            comps.retain(|&(cv, ce)| {
                if cv & vm != 0 {
                    acc = (acc.0 | cv, acc.1 | ce);
                    false
                } else {
                    true
                }
            });
            comps.push(acc);
        }
        comps.sort();
        comps
    }

    /// No cycle in the edge set `x` carries a non-identity gain.
    pub fn is_balanced(&self, x: u32) -> bool {
        let g = &self.group;
        let mut pot: Vec<Option<usize>> = vec![None; self.vertices];
        let mut remaining = x;
        while remaining != 0 {
            let root = self.edges[low_bit(remaining)].u;
            pot[root] = Some(g.identity());
            let mut stack = vec![root];
            while let Some(a) = stack.pop() {
                let pa = pot[a].unwrap();
                for e in bits(x) {
                    let ed = self.edges[e];
                    if ed.u != a && ed.v != a {
                        continue;
                    }
                    remaining &= !(1 << e);
                    let b = if ed.u == a { ed.v } else { ed.u };
                    let want = g.mul(pa, self.gain_from(e, a));
                    match pot[b] {
                        None => {
                            pot[b] = Some(want);
                            stack.push(b);
                        }
                        Some(pb) if pb != want => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }

    /// Per component: vertex count, edge count, balanced.
    fn component_stats(&self, x: u32) -> Vec<(u32, u32, bool)> {
        self.components(x)
            .into_iter()
            .map(|(v, e)| (v.count_ones(), e.count_ones(), self.is_balanced(e)))
            .collect()
    }

    /// Every component is a tree or an unbalanced unicyclic graph.
    pub fn frame_independent(&self, x: u32) -> bool {
        self.component_stats(x).iter().all(|&(v, e, bal)| e + 1 == v || (e == v && !bal))
    }

    /// As [`frame_independent`](Self::frame_independent) with at most one
    /// unicyclic component.
    pub fn lift_independent(&self, x: u32) -> bool {
        let stats = self.component_stats(x);
        stats.iter().all(|&(v, e, bal)| e + 1 == v || (e == v && !bal)) && stats.iter().filter(|s| s.0 == s.1).count() <= 1
    }

    pub fn independent(&self, x: u32, mode: Mode) -> bool {
        match mode {
            Mode::Frame => self.frame_independent(x),
            Mode::Lift => self.lift_independent(x),
        }
    }

    fn matroid(&self, mode: Mode) -> Result<SimplicialComplex, GainGraphError> {
        if self.edges.len() > MAX_GROUND {
            return Err(GainGraphError::TooLarge { size: self.edges.len(), bound: MAX_GROUND });
        }
        let ground = (0..self.edges.len()).map(|e| self.edge_label(e)).collect();
        Ok(SimplicialComplex::from_predicate(ground, |x| self.independent(x, mode))?)
    }

    pub fn frame_matroid(&self) -> Result<SimplicialComplex, GainGraphError> {
        self.matroid(Mode::Frame)
    }

    pub fn lift_matroid(&self) -> Result<SimplicialComplex, GainGraphError> {
        self.matroid(Mode::Lift)
    }

    fn is_circuit(&self, x: u32, mode: Mode) -> bool {
        x != 0 && !self.independent(x, mode) && bits(x).all(|e| self.independent(x & !(1 << e), mode))
    }

    pub fn classify_circuit(&self, x: u32, mode: Mode) -> Result<CircuitTag, GainGraphError> {
        if !self.is_circuit(x, mode) {
            return Err(GainGraphError::NotACircuit);
        }
        let comps = self.components(x);
        if comps.len() == 2 && mode == Mode::Lift {
            return Ok(CircuitTag::DisjointUnbalancedPair);
        }
        if comps.len() != 1 {
            return Err(GainGraphError::UnclassifiedCircuit);
        }
        let (vm, em) = comps[0];
        let (v, e) = (vm.count_ones(), em.count_ones());
        if e == v {
            return Ok(CircuitTag::BalancedCycle);
        }
        if e != v + 1 {
            return Err(GainGraphError::UnclassifiedCircuit);
        }
        let mut deg = vec![0; self.vertices];
        for k in bits(x) {
            deg[self.edges[k].u] += 1;
            deg[self.edges[k].v] += 1;
        }
        if deg.iter().any(|&d| d >= 4) {
            return Ok(CircuitTag::TightHandcuff);
        }
        // a theta has no bridge; a loose handcuff's connecting path does
        let bridge = bits(x).any(|k| self.edges[k].u != self.edges[k].v && self.components(x & !(1 << k)).len() > 1);
        match (bridge, mode) {
            (true, Mode::Frame) => Ok(CircuitTag::LooseHandcuff),
            (true, Mode::Lift) => Err(GainGraphError::UnclassifiedCircuit),
            (false, _) => Ok(CircuitTag::UnbalancedTheta),
        }
    }

    /// Edge sets of all cycles of the graph (loops included).
    pub fn cycles(&self) -> Result<Vec<u32>, GainGraphError> {
        if self.edges.len() > MAX_CYCLE_EDGES {
            return Err(GainGraphError::TooLarge { size: self.edges.len(), bound: MAX_CYCLE_EDGES });
        }
        Ok((1..=self.edge_mask()).filter(|&x| self.is_cycle(x)).collect())
    }

    fn is_cycle(&self, x: u32) -> bool {
        let comps = self.components(x);
        if comps.len() != 1 || comps[0].0.count_ones() != x.count_ones() {
            return false;
        }
        let mut deg = vec![0; self.vertices];
        for k in bits(x) {
            deg[self.edges[k].u] += 1;
            deg[self.edges[k].v] += 1;
        }
        bits(comps[0].0).all(|v| deg[v] == 2)
    }

    /// Flat test for the frame matroid, condition by condition.
    pub fn frame_flat(&self, x: u32) -> Result<bool, GainGraphError> {
        let cycles = self.cycles()?;
        let (balanced, unbalanced): (Vec<u32>, Vec<u32>) = cycles.into_iter().partition(|&c| self.is_balanced(c));
        if balanced.iter().any(|&c| (c & !x).count_ones() == 1) {
            return Ok(false);
        }
        let unbal_comps: Vec<(u32, u32)> = self.components(x).into_iter().filter(|&(_, e)| !self.is_balanced(e)).collect();
        for &(vy, y) in &unbal_comps {
            // a loop off the vertices of Y has one edge outside Y but is not spanned by it
            if unbalanced.iter().any(|&c| (c & !y).count_ones() == 1 && self.vertex_mask(c) & !vy == 0) {
                return Ok(false);
            }
        }
        for (i, &(v1, _)) in unbal_comps.iter().enumerate() {
            for &(v2, _) in &unbal_comps[i + 1..] {
                let joined = self.edges.iter().any(|ed| {
                    let (a, b) = (1u32 << ed.u, 1u32 << ed.v);
                    (a & v1 != 0 && b & v2 != 0) || (a & v2 != 0 && b & v1 != 0)
                });
                if joined {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Flat test for the lift matroid, condition by condition.
    pub fn lift_flat(&self, x: u32) -> Result<bool, GainGraphError> {
        let cycles = self.cycles()?;
        let x_unbalanced = !self.is_balanced(x);
        for c in cycles {
            let outside = (c & !x).count_ones();
            if outside == 1 && (self.is_balanced(c) || x_unbalanced) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Lines `u v g` with one-based vertices and group labels.
    pub fn to_edge_list(&self) -> String {
        let mut s = String::new();
        for e in &self.edges {
            let _ = writeln!(s, "{} {} {}", e.u + 1, e.v + 1, self.group.label(e.g));
        }
        s
    }

    pub fn from_edge_list(vertices: usize, group: FiniteGroup, text: &str) -> Result<Self, GainGraphError> {
        let mut g = Self::new(vertices, group)?;
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
            let parts: Vec<&str> = line.split_whitespace().collect();
            if parts.len() != 3 {
                return Err(GainGraphError::Parse(format!("expected `u v g`, got {line:?}")));
            }
            let vert = |s: &str| -> Result<usize, GainGraphError> {
                match s.parse::<usize>() {
                    Ok(k) if k >= 1 => Ok(k - 1),
                    _ => Err(GainGraphError::Parse(format!("bad vertex {s:?}"))),
                }
            };
            let (u, v) = (vert(parts[0])?, vert(parts[1])?);
            let label = g.group.element_by_label(parts[2]).ok_or_else(|| GainGraphError::Parse(format!("unknown element {:?}", parts[2])))?;
            g.add_edge(u, v, label)?;
        }
        Ok(g)
    }

    pub fn to_dot(&self, name: &str) -> String {
        let mut s = format!("digraph \"{name}\" {{\n");
        for v in 0..self.vertices {
            let _ = writeln!(s, "  v{} [label=\"{}\"];", v + 1, v + 1);
        }
        for (k, e) in self.edges.iter().enumerate() {
            let _ = writeln!(s, "  v{} -> v{} [label=\"{}\", id=\"e{k}\"];", e.u + 1, e.v + 1, self.group.label(e.g));
        }
        s.push_str("}\n");
        s
    }
}

/// `Δ_n(G)`: every label on every vertex pair, edges ordered by pair and
/// then by label.
pub fn delta(n: usize, group: &FiniteGroup) -> Result<GainGraph, GainGraphError> {
    if n < 2 {
        return Err(GainGraphError::ArgumentOutOfRange(format!("n = {n}")));
    }
    let count = n * (n - 1) / 2 * group.order();
    if count > MAX_EDGES {
        return Err(GainGraphError::TooLarge { size: count, bound: MAX_EDGES });
    }
    let mut gg = GainGraph::new(n, group.clone())?;
    for i in 0..n {
        for j in i + 1..n {
            for g in group.elements() {
                gg.add_edge(i, j, g)?;
            }
        }
    }
    Ok(gg)
}

/// `Δ′_n(G)`: `Δ_n(G)` plus a loop with a non-identity gain at every vertex.
pub fn delta_prime(n: usize, group: &FiniteGroup) -> Result<GainGraph, GainGraphError> {
    if group.is_trivial() {
        return Err(GainGraphError::ArgumentOutOfRange("unbalanced loops need a non-trivial group".into()));
    }
    let mut gg = delta(n, group)?;
    for v in 0..n {
        gg.add_edge(v, v, 1)?;
    }
    Ok(gg)
}

/// Rebuilds `G` from the 3-subset membership data of the lift matroid of
/// `Δ_3(G)`, given on any ordering of its edges. Requires `|G| ≥ 4`.
pub fn group_from_matroid(h: &SimplicialComplex) -> Result<FiniteGroup, GainGraphError> {
    let m = h.ground_size();
    let bad = |s: &str| GainGraphError::NotAFrameOfExpectedShape(s.to_string());
    if m % 3 != 0 || m / 3 < 4 {
        return Err(bad("ground size must be 3|G| with |G| ≥ 4"));
    }
    let order = m / 3;
    let dep = |a: usize, b: usize, c: usize| !h.is_independent(1 << a | 1 << b | 1 << c);

    let w: Vec<usize> = (0..m).filter(|&a| (0..m).any(|b| (b + 1..m).any(|c| a != b && a != c && dep(a, b, c)))).collect();
    if w.len() != m {
        return Err(bad("some element lies in no dependent 3-set"));
    }
    // parallel: at least two completions to a dependent 3-set
    let parallel = |a: usize, b: usize| (0..m).filter(|&c| c != a && c != b && dep(a, b, c)).count() >= 2;
    let mut class = vec![usize::MAX; m];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for a in 0..m {
        if class[a] != usize::MAX {
            continue;
        }
        let members: Vec<usize> = (0..m).filter(|&b| b == a || parallel(a, b)).collect();
        for &b in &members {
            class[b] = classes.len();
        }
        classes.push(members);
    }
    if classes.len() != 3 || classes.iter().any(|c| c.len() != order) {
        return Err(bad("expected three parallel classes of equal size"));
    }
    let (x, y, z) = (&classes[0], &classes[1], &classes[2]);
    // t[i][k] = r with {x_i, y_k, z_r} dependent
    let mut t = vec![vec![0usize; order]; order];
    for i in 0..order {
        for k in 0..order {
            let rs: Vec<usize> = (0..order).filter(|&r| dep(x[i], y[k], z[r])).collect();
            if rs.len() != 1 {
                return Err(bad("a pair from two classes does not complete to exactly one triangle"));
            }
            t[i][k] = rs[0];
        }
    }
    let invert = |f: &[usize]| -> Result<Vec<usize>, GainGraphError> {
        let mut inv = vec![usize::MAX; f.len()];
        for (a, &b) in f.iter().enumerate() {
            if inv[b] != usize::MAX {
                return Err(bad("triangle completion is not a bijection"));
            }
            inv[b] = a;
        }
        Ok(inv)
    };
    let delta: Vec<usize> = (0..order).map(|k| t[0][k]).collect();
    let eps: Vec<usize> = (0..order).map(|i| t[i][0]).collect();
    let (delta_inv, eps_inv) = (invert(&delta)?, invert(&eps)?);
    // i ∘ j = g_i g_1⁻¹ g_j, read back through the first classes
    let table: Vec<Vec<usize>> =
        (0..order).map(|i| (0..order).map(|j| eps_inv[t[i][delta_inv[eps[j]]]]).collect()).collect();
    Ok(FiniteGroup::from_table(&table)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(m: usize) -> FiniteGroup {
        FiniteGroup::cyclic(m).unwrap()
    }

    #[test]
    fn delta_sizes() {
        assert_eq!(delta(2, &z(2)).unwrap().edges().len(), 2);
        assert_eq!(delta(3, &z(2)).unwrap().edges().len(), 6);
        assert_eq!(delta_prime(3, &z(2)).unwrap().edges().len(), 9);
        assert!(delta(1, &z(2)).is_err());
    }

    #[test]
    fn cycle_labels() {
        let g = z(3);
        let mut gg = GainGraph::new(3, g.clone()).unwrap();
        let a = gg.add_edge(0, 1, 1).unwrap();
        let b = gg.add_edge(0, 1, 2).unwrap();
        // forward along a, back along b: 1 - 2 = -1 = 2 in Z3
        assert_eq!(gg.cycle_label(0, &[(a, true), (b, false)]).unwrap(), 2);
        assert!(!gg.is_balanced_cycle(0, &[(a, true), (b, false)]).unwrap());
        let c = gg.add_edge(1, 2, 0).unwrap();
        let d = gg.add_edge(2, 0, 2).unwrap();
        assert!(gg.is_balanced_cycle(0, &[(a, true), (c, true), (d, false)]).unwrap());
        assert_eq!(gg.cycle_label(0, &[(a, true), (c, true), (d, true)]), Err(GainGraphError::NotAClosedWalk));
        let f = gg.add_edge(2, 0, 1).unwrap();
        assert!(!gg.is_balanced_cycle(0, &[(a, true), (c, true), (f, false)]).unwrap());
        assert_eq!(gg.cycle_label(0, &[(a, true)]), Err(GainGraphError::NotAClosedWalk));
        assert_eq!(gg.cycle_label(0, &[(a, true), (a, false)]), Err(GainGraphError::NotAClosedWalk));
    }

    #[test]
    fn independence_examples() {
        let g = z(2);
        let mut gg = GainGraph::new(4, g).unwrap();
        for (u, v, l) in [(0, 1, 0), (0, 1, 1), (2, 3, 0), (2, 3, 1)] {
            gg.add_edge(u, v, l).unwrap();
        }
        assert!(gg.frame_independent(0) && gg.lift_independent(0));
        assert!(gg.frame_independent(0b1111));
        assert!(!gg.lift_independent(0b1111));
        assert_eq!(gg.classify_circuit(0b1111, Mode::Lift).unwrap(), CircuitTag::DisjointUnbalancedPair);
        assert_eq!(gg.classify_circuit(0b1111, Mode::Frame), Err(GainGraphError::NotACircuit));

        let mut tri = GainGraph::new(3, z(2)).unwrap();
        for (u, v) in [(0, 1), (1, 2), (0, 2)] {
            tri.add_edge(u, v, 0).unwrap();
        }
        assert!(!tri.frame_independent(0b111) && !tri.lift_independent(0b111));
        assert_eq!(tri.classify_circuit(0b111, Mode::Frame).unwrap(), CircuitTag::BalancedCycle);
        assert!(!tri.frame_flat(0b011).unwrap());
        assert!(tri.frame_flat(0b111).unwrap());
    }

    #[test]
    fn handcuffs() {
        let mut gg = GainGraph::new(3, z(2)).unwrap();
        for (u, v, l) in [(0, 1, 0), (0, 1, 1), (1, 2, 0), (1, 2, 1)] {
            gg.add_edge(u, v, l).unwrap();
        }
        assert_eq!(gg.classify_circuit(0b1111, Mode::Frame).unwrap(), CircuitTag::TightHandcuff);
        assert_eq!(gg.classify_circuit(0b1111, Mode::Lift).unwrap(), CircuitTag::TightHandcuff);
        let mut loose = GainGraph::new(4, z(2)).unwrap();
        for (u, v, l) in [(0, 1, 0), (0, 1, 1), (1, 2, 0), (2, 3, 0), (2, 3, 1)] {
            loose.add_edge(u, v, l).unwrap();
        }
        assert_eq!(loose.classify_circuit(0b11111, Mode::Frame).unwrap(), CircuitTag::LooseHandcuff);
    }

    #[test]
    fn lift_of_small_deltas() {
        let l2 = delta(2, &z(2)).unwrap().lift_matroid().unwrap();
        assert_eq!(l2.facets().len(), 1);
        assert_eq!(delta(2, &z(2)).unwrap().frame_matroid().unwrap(), l2);
        let l3 = delta(3, &z(2)).unwrap().lift_matroid().unwrap();
        assert_eq!(l3.rank(), 3);
        assert_eq!(l3.facets().len(), 16);
        assert!(delta(2, &z(2)).unwrap().lift_flat(0).unwrap());
        assert!(delta(2, &z(2)).unwrap().frame_flat(0).unwrap());
    }

    #[test]
    fn edge_list_round_trip() {
        let d = delta_prime(2, &z(3)).unwrap();
        let text = d.to_edge_list();
        let back = GainGraph::from_edge_list(2, z(3), &text).unwrap();
        assert_eq!(back.edges(), d.edges());
        assert!(GainGraph::from_edge_list(2, z(3), "1 2").is_err());
        assert!(d.to_dot("d").contains("label=\"g\""));
    }

    #[test]
    fn reconstruct_cyclic_group() {
        let g = z(4);
        let h = delta(3, &g).unwrap().lift_matroid().unwrap();
        let r = group_from_matroid(&h).unwrap();
        assert!(crate::group::groups_isomorphic(&r, &g).unwrap().is_some());
        assert!(group_from_matroid(&delta(3, &z(3)).unwrap().lift_matroid().unwrap()).is_err());
    }
}
