//! SPC triples `(I, π, [f]_π)` over a finite group, with the Dowling and
//! Rhodes orders.
//!
//! A cross-section is stored in canonical form: on every block the least
//! point maps to the identity, obtained by translating the block's values
//! on the left. Values outside the domain are kept at the identity so the
//! derived `Eq`/`Hash` are semantic.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::group::FiniteGroup;
use crate::partition::{bits, full_mask, low_bit, partial_partitions_unbounded, PartialPartition, MAX_POINTS};

/// Largest `n` accepted by [`SpcSpace::enumerate`].
pub const MAX_ENUM_N: usize = 4;
/// Default bound on `|G|^n` for enumeration.
pub const DEFAULT_ENUM_BOUND: usize = 1024;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpcError {
    #[error("cross-section domain does not match the partition domain")]
    DomainMismatch,
    #[error("SPC does not belong to this (n, G) context")]
    MismatchedContext,
    #[error("argument out of range: {0}")]
    ArgumentOutOfRange(String),
    #[error("cannot parse SPC: {0}")]
    Parse(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Spc {
    pp: PartialPartition,
    cs: Vec<usize>,
}

impl Spc {
    pub fn partition(&self) -> &PartialPartition {
        &self.pp
    }

    pub fn n(&self) -> usize {
        self.pp.n()
    }

    /// Domain `I` as a bitmask of zero-based points.
    pub fn domain(&self) -> u32 {
        self.pp.domain()
    }

    /// Canonical cross-section value at zero-based point `p`.
    pub fn cs(&self, p: usize) -> usize {
        self.cs[p]
    }

    pub fn cross_section(&self) -> &[usize] {
        &self.cs
    }

    pub fn is_empty(&self) -> bool {
        self.pp.num_blocks() == 0
    }
}

/// The context `(n, G)` every SPC lives in.
#[derive(Debug, Clone)]
pub struct SpcSpace {
    n: usize,
    group: FiniteGroup,
}

/// Edge colour in the necklace graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Colour {
    First,
    Second,
}

/// A coloured, labelled edge `a → b` of the necklace graph; reversing it
/// inverts the label.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NecklaceEdge {
    pub a: usize,
    pub b: usize,
    pub colour: Colour,
    pub label: usize,
}

/// Two-coloured graph on `I₁ ∪ I₂` whose edges join points sharing a block.
#[derive(Debug, Clone)]
pub struct NecklaceGraph {
    pub vertices: u32,
    pub edges: Vec<NecklaceEdge>,
}

impl NecklaceGraph {
    /// Labels of every simple cycle that alternates colours, each read from
    /// its least vertex (both orientations are reported for cycles longer
    /// than two). Exponential; meant for small ground sets.
    pub fn necklace_labels(&self, group: &FiniteGroup) -> Vec<usize> {
        // oriented adjacency: (to, colour, label)
        let mut adj: Vec<Vec<(usize, Colour, usize, usize)>> = vec![Vec::new(); 32];
        for (id, e) in self.edges.iter().enumerate() {
            adj[e.a].push((e.b, e.colour, e.label, id));
            adj[e.b].push((e.a, e.colour, group.inv(e.label), id));
        }
        let mut out = Vec::new();
        for start in bits(self.vertices) {
            let mut visited = 1u32 << start;
            walk(group, &adj, start, start, None, None, 0, 0, &mut visited, &mut out);
        }
        out
    }
}

#[allow(clippy::too_many_arguments)]
fn walk(
    group: &FiniteGroup,
    adj: &[Vec<(usize, Colour, usize, usize)>],
    start: usize,
    at: usize,
    first: Option<Colour>,
    last: Option<(Colour, usize)>,
    label: usize,
    len: usize,
    visited: &mut u32,
    out: &mut Vec<usize>,
) {
    for &(to, colour, l, id) in &adj[at] {
        if let Some((c, last_id)) = last {
            if c == colour || last_id == id {
                continue;
            }
        }
        let next = group.mul(label, l);
        if to == start {
            if len >= 1 && first != Some(colour) {
                out.push(next);
            }
            continue;
        }
        if to < start || *visited & (1 << to) != 0 {
            continue;
        }
        *visited |= 1 << to;
        walk(group, adj, start, to, first.or(Some(colour)), Some((colour, id)), next, len + 1, visited, out);
        *visited &= !(1 << to);
    }
}

impl SpcSpace {
    pub fn new(n: usize, group: FiniteGroup) -> Result<Self, SpcError> {
        if n > MAX_POINTS {
            return Err(SpcError::ArgumentOutOfRange(format!("n = {n}")));
        }
        Ok(Self { n, group })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    fn check(&self, s: &Spc) -> Result<(), SpcError> {
        if s.n() != self.n
            || s.cs.len() != self.n
            || s.cs.iter().any(|&g| g >= self.group.order())
        {
            Err(SpcError::MismatchedContext)
        } else {
            Ok(())
        }
    }

    /// Translates each block's values on the left so its least point maps
    /// to the identity. `raw` is keyed by zero-based point and must cover
    /// exactly the partition's domain.
    pub fn normalize(&self, pp: PartialPartition, raw: &BTreeMap<usize, usize>) -> Result<Spc, SpcError> {
        if pp.n() != self.n {
            return Err(SpcError::MismatchedContext);
        }
        let dom = pp.domain();
        let keys = raw.keys().try_fold(0u32, |m, &k| if k < 32 { Ok(m | 1 << k) } else { Err(()) });
        if keys != Ok(dom) {
            return Err(SpcError::DomainMismatch);
        }
        if raw.values().any(|&g| g >= self.group.order()) {
            return Err(SpcError::MismatchedContext);
        }
        let mut values = vec![0; self.n];
        for (&p, &g) in raw {
            values[p] = g;
        }
        Ok(self.normalize_values(pp, &values))
    }

    /// Canonical form from a full-length value vector (entries outside the
    /// domain are ignored).
    pub(crate) fn normalize_values(&self, pp: PartialPartition, values: &[usize]) -> Spc {
        let mut cs = vec![0; self.n];
        for &b in pp.blocks() {
            let shift = self.group.inv(values[low_bit(b)]);
            for p in bits(b) {
                cs[p] = self.group.mul(shift, values[p]);
            }
        }
        Spc { pp, cs }
    }

    pub fn empty_spc(&self) -> Spc {
        Spc { pp: PartialPartition::empty(self.n), cs: vec![0; self.n] }
    }

    /// `(I, ι, 1)` on the full ground set: every point its own block.
    pub fn full_singletons(&self) -> Spc {
        Spc { pp: PartialPartition::singletons(self.n), cs: vec![0; self.n] }
    }

    /// `({i,j}, ω, f)` with `f(i)⁻¹ f(j) = g`; points zero-based, `i < j`.
    pub fn pair(&self, i: usize, j: usize, g: usize) -> Spc {
        debug_assert!(i < j && j < self.n);
        let mut cs = vec![0; self.n];
        cs[j] = g;
        Spc { pp: PartialPartition::single_block(self.n, 1 << i | 1 << j), cs }
    }

    /// `({i}, ω, ·)`, zero-based.
    pub fn singleton(&self, i: usize) -> Spc {
        Spc { pp: PartialPartition::single_block(self.n, 1 << i), cs: vec![0; self.n] }
    }

    /// All SPCs over `(n, G)`, each once, grouped by partial partition.
    pub fn enumerate(&self) -> Result<Vec<Spc>, SpcError> {
        self.enumerate_bounded(DEFAULT_ENUM_BOUND)
    }

    pub fn enumerate_bounded(&self, bound: usize) -> Result<Vec<Spc>, SpcError> {
        let size = (self.group.order() as u128).pow(self.n as u32);
        if self.n == 0 || self.n > MAX_ENUM_N || size > bound as u128 {
            return Err(SpcError::ArgumentOutOfRange(format!(
                "n = {}, |G| = {} (need 1 ≤ n ≤ {MAX_ENUM_N} and |G|^n ≤ {bound})",
                self.n,
                self.group.order()
            )));
        }
        Ok(self.enumerate_unbounded())
    }

    pub(crate) fn enumerate_unbounded(&self) -> Vec<Spc> {
        let order = self.group.order();
        let mut out = Vec::new();
        for pp in partial_partitions_unbounded(self.n) {
            // points free to take any value: all non-minimal domain points
            let free: Vec<usize> = pp
                .blocks()
                .iter()
                .flat_map(|&b| bits(b & (b - 1)))
                .collect();
            let mut cs = vec![0; self.n];
            loop {
                out.push(Spc { pp: pp.clone(), cs: cs.clone() });
                // odometer over the free points
                let mut k = 0;
                while k < free.len() {
                    cs[free[k]] += 1;
                    if cs[free[k]] < order {
                        break;
                    }
                    cs[free[k]] = 0;
                    k += 1;
                }
                if k == free.len() {
                    break;
                }
            }
        }
        out
    }

    /// Is `v` constant on the points of `mask`?
    fn constant_on(&self, mask: u32, v: impl Fn(usize) -> usize) -> bool {
        let mut it = bits(mask).map(v);
        match it.next() {
            None => true,
            Some(first) => it.all(|x| x == first),
        }
    }

    /// Dowling order `a ≤_D b`: `J ⊆ I`, τ-blocks are unions of π-blocks,
    /// and on π-blocks inside `J` the cross-sections agree up to a left
    /// translation.
    pub fn dowling_leq(&self, a: &Spc, b: &Spc) -> Result<bool, SpcError> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.dowling_leq_raw(a, b))
    }

    pub(crate) fn dowling_leq_raw(&self, a: &Spc, b: &Spc) -> bool {
        let (i, j) = (a.domain(), b.domain());
        if j & !i != 0 {
            return false;
        }
        // every π-block meeting a τ-block lies inside it
        for &t in b.pp.blocks() {
            for &p in a.pp.blocks() {
                if p & t != 0 && p & !t != 0 {
                    return false;
                }
            }
        }
        let g = &self.group;
        a.pp
            .blocks()
            .iter()
            .filter(|&&p| p & !j == 0)
            .all(|&p| self.constant_on(p, |x| g.right_div(a.cs[x], b.cs[x])))
    }

    /// Rhodes order `a ≤_R b`: `I ⊆ J`, each π-block inside a τ-block, and
    /// `[h|_I]_π = [f]_π`.
    pub fn rhodes_leq(&self, a: &Spc, b: &Spc) -> Result<bool, SpcError> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.rhodes_leq_raw(a, b))
    }

    pub(crate) fn rhodes_leq_raw(&self, a: &Spc, b: &Spc) -> bool {
        if !a.pp.refines_unchecked(&b.pp) {
            return false;
        }
        let g = &self.group;
        a.pp
            .blocks()
            .iter()
            .all(|&p| self.constant_on(p, |x| g.right_div(a.cs[x], b.cs[x])))
    }

    /// Greatest lower bound under `≤_R`: points of `I ∩ J` are grouped when
    /// they share blocks in both partitions and `f(x)h(x)⁻¹` agrees.
    pub fn rhodes_meet(&self, a: &Spc, b: &Spc) -> Result<Spc, SpcError> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.rhodes_meet_raw(a, b))
    }

    pub(crate) fn rhodes_meet_raw(&self, a: &Spc, b: &Spc) -> Spc {
        let g = &self.group;
        let mut blocks: Vec<u32> = Vec::new();
        for &p in a.pp.blocks() {
            for &t in b.pp.blocks() {
                let mut rest = p & t;
                while rest != 0 {
                    let x = low_bit(rest);
                    let key = g.right_div(a.cs[x], b.cs[x]);
                    let class = bits(rest)
                        .filter(|&y| g.right_div(a.cs[y], b.cs[y]) == key)
                        .fold(0u32, |m, y| m | 1 << y);
                    blocks.push(class);
                    rest &= !class;
                }
            }
        }
        let pp = PartialPartition::from_masks_unchecked(self.n, blocks);
        self.normalize_values(pp, &a.cs)
    }

    pub fn necklace_graph(&self, a: &Spc, b: &Spc) -> Result<NecklaceGraph, SpcError> {
        self.check(a)?;
        self.check(b)?;
        let g = &self.group;
        let mut edges = Vec::new();
        for (colour, s) in [(Colour::First, a), (Colour::Second, b)] {
            for &blk in s.pp.blocks() {
                for x in bits(blk) {
                    for y in bits(blk).filter(|&y| y > x) {
                        edges.push(NecklaceEdge { a: x, b: y, colour, label: g.left_div(s.cs[x], s.cs[y]) });
                    }
                }
            }
        }
        Ok(NecklaceGraph { vertices: a.domain() | b.domain(), edges })
    }

    /// True iff the two SPCs have a common upper bound under `≤_R`.
    pub fn has_common_upper_bound(&self, a: &Spc, b: &Spc) -> Result<bool, SpcError> {
        Ok(self.rhodes_join(a, b)?.is_some())
    }

    /// Least upper bound under `≤_R`, or `None` when some necklace carries a
    /// non-identity label.
    ///
    /// Values are propagated from a basepoint per component of the
    /// two-coloured graph along star edges (block minimum to each member);
    /// any edge whose endpoints disagree with its label witnesses a closed
    /// walk, hence a necklace, with label ≠ 1.
    pub fn rhodes_join(&self, a: &Spc, b: &Spc) -> Result<Option<Spc>, SpcError> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.rhodes_join_raw(a, b))
    }

    pub(crate) fn rhodes_join_raw(&self, a: &Spc, b: &Spc) -> Option<Spc> {
        let g = &self.group;
        let n = self.n;
        // adjacency: (neighbour, label of the edge read from this side)
        let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
        for s in [a, b] {
            for &blk in s.pp.blocks() {
                let m = low_bit(blk);
                for x in bits(blk & (blk - 1)) {
                    let l = g.left_div(s.cs[m], s.cs[x]);
                    adj[m].push((x, l));
                    adj[x].push((m, g.inv(l)));
                }
            }
        }
        let domain = a.domain() | b.domain();
        let mut value: Vec<Option<usize>> = vec![None; n];
        let mut blocks = Vec::new();
        for root in bits(domain) {
            if value[root].is_some() {
                continue;
            }
            value[root] = Some(0);
            let mut comp = 1u32 << root;
            let mut stack = vec![root];
            while let Some(x) = stack.pop() {
                let vx = value[x].unwrap();
                for &(y, l) in &adj[x] {
                    let want = g.mul(vx, l);
                    match value[y] {
                        None => {
                            value[y] = Some(want);
                            comp |= 1 << y;
                            stack.push(y);
                        }
                        Some(vy) if vy != want => return None,
                        Some(_) => {}
                    }
                }
            }
            blocks.push(comp);
        }
        let values: Vec<usize> = value.iter().map(|v| v.unwrap_or(0)).collect();
        let pp = PartialPartition::from_masks_unchecked(n, blocks);
        Some(self.normalize_values(pp, &values))
    }

    /// `B_n`: singleton-domain SPCs, in point order.
    pub fn b_elements(&self) -> Vec<Spc> {
        (0..self.n).map(|i| self.singleton(i)).collect()
    }

    /// `C_n`: two-point one-block SPCs, ordered by pair then by the edge
    /// label `f(i)⁻¹ f(j)`.
    pub fn c_elements(&self) -> Vec<Spc> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in i + 1..self.n {
                for g in self.group.elements() {
                    out.push(self.pair(i, j, g));
                }
            }
        }
        out
    }

    /// `A_n = B_n ∪ C_n`, the join-irreducibles of the Rhodes order.
    pub fn join_irreducibles_rhodes(&self) -> Vec<Spc> {
        let mut v = self.b_elements();
        v.extend(self.c_elements());
        v
    }

    /// `B'_n`: full ground minus one point, all singletons.
    pub fn b_prime_elements(&self) -> Vec<Spc> {
        (0..self.n)
            .map(|i| {
                let dom = full_mask(self.n) & !(1 << i);
                let pp = PartialPartition::from_masks_unchecked(self.n, bits(dom).map(|p| 1 << p).collect());
                Spc { pp, cs: vec![0; self.n] }
            })
            .collect()
    }

    /// `C'_n`: full ground, `{i,j}` merged and every other point alone,
    /// ordered by pair then label.
    pub fn c_prime_elements(&self) -> Vec<Spc> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in i + 1..self.n {
                let mut blocks: Vec<u32> = (0..self.n).filter(|&k| k != i && k != j).map(|k| 1 << k).collect();
                blocks.push(1 << i | 1 << j);
                let pp = PartialPartition::from_masks_unchecked(self.n, blocks);
                for g in self.group.elements() {
                    let mut cs = vec![0; self.n];
                    cs[j] = g;
                    out.push(Spc { pp: pp.clone(), cs });
                }
            }
        }
        out
    }

    /// `A'_n = B'_n ∪ C'_n`, the atoms of the Dowling lattice.
    pub fn atoms_dowling(&self) -> Vec<Spc> {
        let mut v = self.b_prime_elements();
        v.extend(self.c_prime_elements());
        v
    }

    /// Text form `({1,2|3}; 1↦e,2↦g,3↦e)`.
    pub fn format(&self, s: &Spc) -> String {
        let cs: Vec<String> = bits(s.domain())
            .map(|p| format!("{}↦{}", p + 1, self.group.label(s.cs[p])))
            .collect();
        format!("({}; {})", s.pp, cs.join(","))
    }

    /// Parses the text form produced by [`SpcSpace::format`]; values may be
    /// any representative and are normalised.
    pub fn parse(&self, text: &str) -> Result<Spc, SpcError> {
        let t = text.trim();
        let inner = t
            .strip_prefix('(')
            .and_then(|s| s.strip_suffix(')'))
            .ok_or_else(|| SpcError::Parse(format!("expected parentheses in {t:?}")))?;
        let (pp_text, cs_text) = inner.split_once(';').unwrap_or((inner, ""));
        let pp = PartialPartition::parse(self.n, pp_text).map_err(|e| SpcError::Parse(e.to_string()))?;
        let mut raw = BTreeMap::new();
        for item in split_top_level(cs_text).into_iter().map(str::trim).filter(|s| !s.is_empty()) {
            let (p, g) = item
                .split_once('↦')
                .or_else(|| item.split_once("->"))
                .ok_or_else(|| SpcError::Parse(format!("bad assignment {item:?}")))?;
            let p: usize = p.trim().parse().map_err(|_| SpcError::Parse(format!("bad point {p:?}")))?;
            if p == 0 || p > self.n {
                return Err(SpcError::Parse(format!("point {p} out of range")));
            }
            let g = self
                .group
                .element_by_label(g.trim())
                .ok_or_else(|| SpcError::Parse(format!("unknown group element {g:?}")))?;
            raw.insert(p - 1, g);
        }
        self.normalize(pp, &raw)
    }

    pub fn to_json(&self, s: &Spc) -> SpcJson {
        SpcJson {
            blocks: s.pp.to_lists(),
            cs: bits(s.domain()).map(|p| (p + 1, s.cs[p])).collect(),
        }
    }

    pub fn from_json(&self, json: &SpcJson) -> Result<Spc, SpcError> {
        let refs: Vec<&[usize]> = json.blocks.iter().map(|b| b.as_slice()).collect();
        let pp = PartialPartition::from_blocks(self.n, &refs).map_err(|e| SpcError::Parse(e.to_string()))?;
        let mut raw = BTreeMap::new();
        for &(p, g) in &json.cs {
            if p == 0 || p > self.n {
                return Err(SpcError::DomainMismatch);
            }
            raw.insert(p - 1, g);
        }
        self.normalize(pp, &raw)
    }
}

/// Splits on commas outside parentheses, so labels such as `(e,g)` stay whole.
fn split_top_level(text: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, c) in text.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            ',' if depth == 0 => {
                out.push(&text[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&text[start..]);
    out
}

/// JSON form: blocks as one-based point lists plus `(point, element index)`
/// pairs for the cross-section.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpcJson {
    pub blocks: Vec<Vec<usize>>,
    pub cs: Vec<(usize, usize)>,
}

impl fmt::Display for Spc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cs: Vec<String> = bits(self.domain()).map(|p| format!("{}↦{}", p + 1, self.cs[p])).collect();
        write!(f, "({}; {})", self.pp, cs.join(","))
    }
}
