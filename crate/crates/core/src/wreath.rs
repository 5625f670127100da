//! Column monomial matrices over `G` (the monoid `G ≀ PT_n`), their SPCs,
//! the left-ideal order, and trivial subgroupoids of the Brandt groupoid.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use thiserror::Error;

use crate::group::FiniteGroup;
use crate::partition::PartialPartition;
use crate::spc::{Spc, SpcSpace};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WreathError {
    #[error("matrix or SPC does not belong to this (n, G) context")]
    MismatchedContext,
    #[error("subgroupoid is not closed: {0}")]
    NotClosed(String),
    #[error("two morphisms from {0} to {1}")]
    NotTrivial(usize, usize),
    #[error("cannot parse matrix: {0}")]
    Parse(String),
    #[error("argument out of range: {0}")]
    ArgumentOutOfRange(String),
}

/// `n × n` matrix over `G ∪ {0}` with at most one nonzero entry per column,
/// stored as `(row, element)` per column.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColumnMonomialMatrix {
    cols: Vec<Option<(usize, usize)>>,
}

impl ColumnMonomialMatrix {
    pub fn new(n: usize, cols: Vec<Option<(usize, usize)>>) -> Result<Self, WreathError> {
        if cols.len() != n || cols.iter().flatten().any(|&(r, _)| r >= n) {
            return Err(WreathError::ArgumentOutOfRange("column data".into()));
        }
        Ok(Self { cols })
    }

    pub fn zero(n: usize) -> Self {
        Self { cols: vec![None; n] }
    }

    pub fn identity(n: usize) -> Self {
        Self { cols: (0..n).map(|i| Some((i, 0))).collect() }
    }

    pub fn n(&self) -> usize {
        self.cols.len()
    }

    pub fn column(&self, k: usize) -> Option<(usize, usize)> {
        self.cols[k]
    }
}

/// Matrices, products and SPCs over a fixed `(n, G)`.
#[derive(Debug, Clone)]
pub struct Wreath {
    space: SpcSpace,
}

impl Wreath {
    pub fn new(space: SpcSpace) -> Self {
        Self { space }
    }

    pub fn space(&self) -> &SpcSpace {
        &self.space
    }

    fn group(&self) -> &FiniteGroup {
        self.space.group()
    }

    fn check(&self, a: &ColumnMonomialMatrix) -> Result<(), WreathError> {
        let ok = a.n() == self.space.n() && a.cols.iter().flatten().all(|&(r, g)| r < a.n() && g < self.group().order());
        ok.then_some(()).ok_or(WreathError::MismatchedContext)
    }

    /// `BA`: column `k` of `A` at row `r` picks up column `r` of `B`.
    pub fn multiply(&self, b: &ColumnMonomialMatrix, a: &ColumnMonomialMatrix) -> Result<ColumnMonomialMatrix, WreathError> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.multiply_raw(b, a))
    }

    fn multiply_raw(&self, b: &ColumnMonomialMatrix, a: &ColumnMonomialMatrix) -> ColumnMonomialMatrix {
        let cols = a
            .cols
            .iter()
            .map(|c| c.and_then(|(r, g)| b.cols[r].map(|(r2, h)| (r2, self.group().mul(h, g)))))
            .collect();
        ColumnMonomialMatrix { cols }
    }

    /// `S(A)`: nonzero columns, grouped by shared row, with their entries.
    pub fn spc_of_matrix(&self, a: &ColumnMonomialMatrix) -> Result<Spc, WreathError> {
        self.check(a)?;
        Ok(self.spc_raw(a))
    }

    fn spc_raw(&self, a: &ColumnMonomialMatrix) -> Spc {
        let n = a.n();
        let mut by_row = vec![0u32; n];
        let mut values = vec![0; n];
        for (k, c) in a.cols.iter().enumerate() {
            if let Some((r, g)) = *c {
                by_row[r] |= 1 << k;
                values[k] = g;
            }
        }
        let pp = PartialPartition::from_masks_unchecked(n, by_row.into_iter().filter(|&b| b != 0).collect());
        self.space.normalize_values(pp, &values)
    }

    /// Is there `B` with `C = BA`? Each row `r` of `A` forces column `r` of
    /// `B` through any column of `A` meeting row `r`.
    pub fn l_below(&self, c: &ColumnMonomialMatrix, a: &ColumnMonomialMatrix) -> Result<bool, WreathError> {
        self.check(a)?;
        self.check(c)?;
        Ok(self.l_below_raw(c, a))
    }

    pub(crate) fn l_below_raw(&self, c: &ColumnMonomialMatrix, a: &ColumnMonomialMatrix) -> bool {
        let n = a.n();
        let g = self.group();
        let mut b = ColumnMonomialMatrix::zero(n);
        for (k, col) in a.cols.iter().enumerate() {
            match (*col, c.cols[k]) {
                (None, None) => {}
                (None, Some(_)) => return false,
                (Some((r, x)), target) => {
                    let want = target.map(|(r2, y)| (r2, g.right_div(y, x)));
                    b.cols[r] = want;
                }
            }
        }
        self.multiply_raw(&b, a) == *c
    }

    /// Every matrix over `(n, G)`, `(n|G| + 1)^n` of them.
    pub fn enumerate_matrices(&self) -> Result<Vec<ColumnMonomialMatrix>, WreathError> {
        let n = self.space.n();
        let per = n * self.group().order() + 1;
        let total = (per as u128).pow(n as u32);
        if total > 1 << 20 {
            return Err(WreathError::ArgumentOutOfRange(format!("{total} matrices")));
        }
        let choices: Vec<Option<(usize, usize)>> =
            std::iter::once(None).chain((0..n).flat_map(|r| self.group().elements().map(move |g| Some((r, g))))).collect();
        let mut out = Vec::with_capacity(total as usize);
        let mut idx = vec![0usize; n];
        loop {
            out.push(ColumnMonomialMatrix { cols: idx.iter().map(|&i| choices[i]).collect() });
            let mut k = 0;
            while k < n {
                idx[k] += 1;
                if idx[k] < per {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
            if k == n {
                break;
            }
        }
        Ok(out)
    }

    /// Units: monomial matrices with every column and row nonzero.
    pub fn units(&self) -> Result<Vec<ColumnMonomialMatrix>, WreathError> {
        Ok(self
            .enumerate_matrices()?
            .into_iter()
            .filter(|m| {
                let rows = m.cols.iter().flatten().fold(0u32, |acc, &(r, _)| acc | 1 << r);
                m.cols.iter().all(Option::is_some) && rows.count_ones() as usize == m.n()
            })
            .collect())
    }

    /// `n` lines of space-separated entries, `.` for zero.
    pub fn format(&self, a: &ColumnMonomialMatrix) -> String {
        let n = a.n();
        let mut s = String::new();
        for r in 0..n {
            let cells: Vec<&str> = (0..n)
                .map(|k| match a.cols[k] {
                    Some((rr, g)) if rr == r => self.group().label(g),
                    _ => ".",
                })
                .collect();
            let _ = writeln!(s, "{}", cells.join(" "));
        }
        s
    }

    pub fn parse(&self, text: &str) -> Result<ColumnMonomialMatrix, WreathError> {
        let n = self.space.n();
        let lines: Vec<&str> = text.lines().map(str::trim).filter(|l| !l.is_empty()).collect();
        if lines.len() != n {
            return Err(WreathError::Parse(format!("expected {n} rows")));
        }
        let mut cols = vec![None; n];
        for (r, line) in lines.iter().enumerate() {
            let cells: Vec<&str> = line.split_whitespace().collect();
            if cells.len() != n {
                return Err(WreathError::Parse(format!("row {} has {} entries", r + 1, cells.len())));
            }
            for (k, cell) in cells.iter().enumerate() {
                if *cell == "." {
                    continue;
                }
                let g = self.group().element_by_label(cell).ok_or_else(|| WreathError::Parse(format!("unknown element {cell:?}")))?;
                if cols[k].is_some() {
                    return Err(WreathError::Parse(format!("column {} has two nonzero entries", k + 1)));
                }
                cols[k] = Some((r, g));
            }
        }
        Ok(ColumnMonomialMatrix { cols })
    }
}

/// Subgroupoid of `B(G, n)` with at most one morphism `(i, g, j)` per
/// ordered pair `(i, j)` (zero-based objects).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrivialSubgroupoid {
    n: usize,
    morphisms: BTreeMap<(usize, usize), usize>,
}

impl TrivialSubgroupoid {
    /// Validates closure under identities, inverses and composition.
    pub fn new(group: &FiniteGroup, n: usize, morphisms: &[(usize, usize, usize)]) -> Result<Self, WreathError> {
        let mut map = BTreeMap::new();
        for &(i, g, j) in morphisms {
            if i >= n || j >= n || g >= group.order() {
                return Err(WreathError::ArgumentOutOfRange(format!("morphism ({i}, {g}, {j})")));
            }
            match map.insert((i, j), g) {
                Some(h) if h != g => return Err(WreathError::NotTrivial(i + 1, j + 1)),
                _ => {}
            }
        }
        let has = |i: usize, g: usize, j: usize| map.get(&(i, j)) == Some(&g);
        for (&(i, j), &g) in &map {
            for k in [i, j] {
                if !has(k, group.identity(), k) {
                    return Err(WreathError::NotClosed(format!("identity at {} missing", k + 1)));
                }
            }
            if !has(j, group.inv(g), i) {
                return Err(WreathError::NotClosed(format!("inverse of ({}, {}, {}) missing", i + 1, group.label(g), j + 1)));
            }
            for (&(j2, k), &h) in map.range((j, 0)..(j + 1, 0)) {
                debug_assert_eq!(j2, j);
                if !has(i, group.mul(g, h), k) {
                    return Err(WreathError::NotClosed(format!(
                        "({}, {}, {})({}, {}, {}) missing",
                        i + 1,
                        group.label(g),
                        j + 1,
                        j + 1,
                        group.label(h),
                        k + 1
                    )));
                }
            }
        }
        Ok(Self { n, morphisms: map })
    }

    pub fn morphisms(&self) -> Vec<(usize, usize, usize)> {
        self.morphisms.iter().map(|(&(i, j), &g)| (i, g, j)).collect()
    }

    pub fn objects(&self) -> BTreeSet<usize> {
        self.morphisms.keys().map(|&(i, _)| i).collect()
    }

    pub fn is_subgroupoid_of(&self, other: &Self) -> bool {
        self.morphisms.iter().all(|(k, g)| other.morphisms.get(k) == Some(g))
    }
}

/// All morphisms `(i, g, j)` of `B(G, n)`.
pub fn brandt_groupoid(n: usize, group: &FiniteGroup) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
    (0..n).flat_map(move |i| group.elements().flat_map(move |g| (0..n).map(move |j| (i, g, j))))
}

/// `(t_i, h(t_i)⁻¹ h(t_j), t_j)` for `t_i`, `t_j` in a common block.
pub fn subgroupoid_of_spc(space: &SpcSpace, s: &Spc) -> TrivialSubgroupoid {
    let g = space.group();
    let mut morphisms = BTreeMap::new();
    for &b in s.partition().blocks() {
        for i in crate::partition::bits(b) {
            for j in crate::partition::bits(b) {
                morphisms.insert((i, j), g.left_div(s.cs(i), s.cs(j)));
            }
        }
    }
    TrivialSubgroupoid { n: space.n(), morphisms }
}

/// Objects become the domain, connected objects a block, and `f(p) = g`
/// for `(p₁, g, p)` with `p₁` the block minimum.
pub fn spc_of_subgroupoid(space: &SpcSpace, t: &TrivialSubgroupoid) -> Result<Spc, WreathError> {
    if t.n != space.n() {
        return Err(WreathError::MismatchedContext);
    }
    let mut blocks: Vec<u32> = Vec::new();
    let mut values = vec![0; t.n];
    for p in t.objects() {
        if blocks.iter().any(|&b| b & 1 << p != 0) {
            continue;
        }
        let block = t.morphisms.range((p, 0)..(p + 1, 0)).fold(0u32, |m, (&(_, q), &g)| {
            values[q] = g;
            m | 1 << q
        });
        blocks.push(block);
    }
    let pp = PartialPartition::from_masks_unchecked(t.n, blocks);
    Ok(space.normalize_values(pp, &values))
}
