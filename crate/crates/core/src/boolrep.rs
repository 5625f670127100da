//! Boolean matrices, the complexes they recognise, and the matrices built
//! from flats and from lattice representations.

use std::fmt;

use thiserror::Error;

use crate::complex::{ComplexError, LatticeRepresentation, SimplicialComplex, MAX_GROUND};
use crate::partition::full_mask;

/// Bounds for [`mindeg_exhaustive`].
pub const MINDEG_MAX_COLS: usize = 5;
pub const MINDEG_MAX_ROWS: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoolRepError {
    #[error("matrix too large: {0}")]
    TooLarge(String),
    #[error("search space too large: {cols} columns, {rows} rows")]
    SearchSpaceTooLarge { cols: usize, rows: usize },
    #[error("cannot parse matrix: {0}")]
    Parse(String),
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

/// A 0/1 matrix with each row stored as a column bitmask.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BooleanMatrix {
    cols: usize,
    rows: Vec<u32>,
}

impl BooleanMatrix {
    pub fn new(cols: usize, rows: Vec<u32>) -> Result<Self, BoolRepError> {
        if cols > 32 {
            return Err(BoolRepError::TooLarge(format!("{cols} columns")));
        }
        if rows.iter().any(|&r| r & !full_mask(cols) != 0) {
            return Err(BoolRepError::TooLarge("row has bits beyond the column count".into()));
        }
        Ok(Self { cols, rows })
    }

    pub fn identity(n: usize) -> Self {
        Self { cols: n, rows: (0..n).map(|i| 1 << i).collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> u32 {
        self.rows[i]
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i] >> j & 1 == 1
    }

    /// Row subset in the given order.
    pub fn select_rows(&self, keep: &[usize]) -> Self {
        Self { cols: self.cols, rows: keep.iter().map(|&i| self.rows[i]).collect() }
    }

    /// Lines of `0`/`1` characters; commas and spaces are ignored, so CSV
    /// input is accepted too.
    pub fn parse(text: &str) -> Result<Self, BoolRepError> {
        let mut rows = Vec::new();
        let mut cols = None;
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
            let cells: Vec<char> = line.chars().filter(|c| !matches!(c, ',' | ' ' | '\t')).collect();
            if cols.is_some_and(|c| c != cells.len()) {
                return Err(BoolRepError::Parse("rows of different lengths".into()));
            }
            cols = Some(cells.len());
            let mut r = 0u32;
            for (j, c) in cells.iter().enumerate() {
                match c {
                    '0' => {}
                    '1' => r |= 1 << j,
                    _ => return Err(BoolRepError::Parse(format!("unexpected character {c:?}"))),
                }
            }
            rows.push(r);
        }
        Self::new(cols.unwrap_or(0), rows)
    }

    pub fn to_csv(&self) -> String {
        self.rows
            .iter()
            .map(|&r| (0..self.cols).map(|j| if r >> j & 1 == 1 { "1" } else { "0" }).collect::<Vec<_>>().join(",") + "\n")
            .collect()
    }

    /// Rows `R` and orderings exist making `M[R, W]` lower unitriangular.
    ///
    /// Repeatedly removes a column that some row meets alone among the
    /// remaining columns, taking the lowest such row.
    pub fn has_unitriangular_witness(&self, w: u32) -> bool {
        let mut remaining = w;
        while remaining != 0 {
            match self.rows.iter().find(|&&r| (r & remaining).count_ones() == 1) {
                Some(&r) => remaining &= !r,
                None => return false,
            }
        }
        true
    }
}

impl fmt::Display for BooleanMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &r in &self.rows {
            let line: String = (0..self.cols).map(|j| if r >> j & 1 == 1 { '1' } else { '0' }).collect();
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}

/// `H(M)`: column sets with a lower unitriangular witness, on columns
/// `c1..cm`.
pub fn complex_of_matrix(m: &BooleanMatrix) -> Result<SimplicialComplex, BoolRepError> {
    let ground = (1..=m.cols()).map(|j| format!("c{j}")).collect();
    complex_of_matrix_on(m, ground)
}

pub fn complex_of_matrix_on(m: &BooleanMatrix, ground: Vec<String>) -> Result<SimplicialComplex, BoolRepError> {
    if m.cols() > MAX_GROUND {
        return Err(BoolRepError::TooLarge(format!("{} columns", m.cols())));
    }
    if ground.len() != m.cols() {
        return Err(BoolRepError::TooLarge("ground size differs from column count".into()));
    }
    Ok(SimplicialComplex::from_predicate(ground, |w| m.has_unitriangular_witness(w))?)
}

/// One row per flat `F`: 0 on the vertices of `F`, 1 elsewhere. Flats are
/// listed by increasing bitmask.
pub fn mat_of_flats(h: &SimplicialComplex) -> Result<BooleanMatrix, BoolRepError> {
    let full = full_mask(h.ground_size());
    let rows = h.flats()?.into_iter().map(|f| full & !f).collect();
    BooleanMatrix::new(h.ground_size(), rows)
}

/// One row per meet-irreducible `i` of the lattice (in the given order):
/// `m_iv = 0` iff `φ(v) ≤ i`.
pub fn matrix_from_lattice_rep_rows(rep: &LatticeRepresentation, rows: &[usize]) -> Result<BooleanMatrix, BoolRepError> {
    let l = &rep.lattice;
    let data = rows
        .iter()
        .map(|&i| rep.phi.iter().enumerate().filter(|&(_, &p)| !l.leq(p, i)).fold(0u32, |m, (v, _)| m | 1 << v))
        .collect();
    BooleanMatrix::new(rep.phi.len(), data)
}

/// Rows indexed by the meet-irreducibles in element order.
pub fn matrix_from_lattice_rep(rep: &LatticeRepresentation) -> Result<BooleanMatrix, BoolRepError> {
    matrix_from_lattice_rep_rows(rep, &rep.lattice.meet_irreducibles())
}

/// No identification of a meet-irreducible with its unique cover yields
/// another representation of the same complex.
pub fn is_minimal_lattice_rep(rep: &LatticeRepresentation) -> Result<bool, BoolRepError> {
    let h = crate::complex::complex_from_lattice(rep)?;
    for m in rep.lattice.meet_irreducibles() {
        let (l2, map) = rep.lattice.collapse_meet_irreducible(m).map_err(ComplexError::from)?;
        let phi: Vec<usize> = rep.phi.iter().map(|&p| map[p]).collect();
        let Ok(rep2) = LatticeRepresentation::new(l2, phi, rep.ground.clone()) else {
            continue;
        };
        if crate::complex::complex_from_lattice(&rep2)? == h {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A basis needs one witness row per element.
pub fn mindeg_lower_bound(h: &SimplicialComplex) -> usize {
    h.rank()
}

/// Smallest matrix with at most `max_rows` distinct nonzero rows
/// recognising `h`, if any.
pub fn mindeg_exhaustive(h: &SimplicialComplex, max_rows: usize) -> Result<Option<BooleanMatrix>, BoolRepError> {
    let cols = h.ground_size();
    if cols > MINDEG_MAX_COLS || max_rows > MINDEG_MAX_ROWS {
        return Err(BoolRepError::SearchSpaceTooLarge { cols, rows: max_rows });
    }
    let candidates: Vec<u32> = (1..1u32 << cols).collect();
    for r in 0..=max_rows {
        let mut pick = Vec::with_capacity(r);
        if let Some(m) = search(h, cols, &candidates, r, 0, &mut pick)? {
            return Ok(Some(m));
        }
    }
    Ok(None)
}

fn search(
    h: &SimplicialComplex,
    cols: usize,
    candidates: &[u32],
    r: usize,
    from: usize,
    pick: &mut Vec<u32>,
) -> Result<Option<BooleanMatrix>, BoolRepError> {
    if pick.len() == r {
        let m = BooleanMatrix::new(cols, pick.clone())?;
        let ok = (0..1u32 << cols).all(|w| m.has_unitriangular_witness(w) == h.is_independent(w));
        return Ok(ok.then_some(m));
    }
    for k in from..candidates.len() {
        pick.push(candidates[k]);
        if let Some(m) = search(h, cols, candidates, r, k + 1, pick)? {
            return Ok(Some(m));
        }
        pick.pop();
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::complex_from_lattice;
    use crate::lattice::{chain, powerset};

    #[test]
    fn witness_examples() {
        let id = BooleanMatrix::identity(3);
        assert!(id.has_unitriangular_witness(0b111));
        let ones = BooleanMatrix::new(3, vec![0b111]).unwrap();
        assert!(!ones.has_unitriangular_witness(0b011));
        assert!(ones.has_unitriangular_witness(0b010));
        let lower = BooleanMatrix::new(2, vec![0b01, 0b11]).unwrap();
        assert!(lower.has_unitriangular_witness(0b11));
    }

    #[test]
    fn matrix_complexes() {
        assert_eq!(complex_of_matrix(&BooleanMatrix::identity(3)).unwrap(), SimplicialComplex::uniform(3, 3).unwrap().with_ground(vec!["c1".into(), "c2".into(), "c3".into()]));
        for n in 2..=4 {
            let m = BooleanMatrix::new((1 << n) - 1, (0..n).map(|i| (1..1u32 << n).enumerate().filter(|(_, c)| c >> i & 1 == 1).fold(0, |a, (j, _)| a | 1 << j)).collect()).unwrap();
            let h = complex_of_matrix(&m).unwrap();
            assert_eq!(h.rank(), n);
            assert_eq!(h.f_vector()[2], ((1 << n) - 1) * ((1 << n) - 2) / 2);
        }
        let row = BooleanMatrix::new(4, vec![0b1111]).unwrap();
        assert_eq!(complex_of_matrix(&row).unwrap().f_vector(), vec![1, 4]);
    }

    #[test]
    fn flats_matrix_recovers() {
        for h in [SimplicialComplex::uniform(2, 2).unwrap(), SimplicialComplex::uniform(1, 1).unwrap(), SimplicialComplex::graphic_matroid(3, &[(0, 1), (0, 2), (1, 2)]).unwrap()] {
            let m = mat_of_flats(&h).unwrap();
            assert_eq!(complex_of_matrix_on(&m, h.ground().to_vec()).unwrap(), h);
        }
        assert_eq!(mat_of_flats(&SimplicialComplex::uniform(2, 2).unwrap()).unwrap().rows(), 4);
    }

    #[test]
    fn chain_matrix_and_minimality() {
        let n = 3;
        let rep = LatticeRepresentation::new(chain(n + 1).unwrap(), (1..=n).collect(), vec!["a".into(), "b".into(), "c".into()]).unwrap();
        let m = matrix_from_lattice_rep(&rep).unwrap();
        assert_eq!((m.rows(), m.cols()), (3, 3));
        assert_eq!(complex_of_matrix_on(&m, rep.ground.clone()).unwrap(), complex_from_lattice(&rep).unwrap());
        assert!(is_minimal_lattice_rep(&rep).unwrap());
        // the flat lattice of U_{n,n} collapses without changing the complex
        let p = LatticeRepresentation::new(powerset(n).unwrap(), vec![1, 2, 4], rep.ground.clone()).unwrap();
        assert!(!is_minimal_lattice_rep(&p).unwrap());
    }

    #[test]
    fn mindeg_u23() {
        let u = SimplicialComplex::uniform(2, 3).unwrap();
        assert_eq!(mindeg_lower_bound(&u), 2);
        let m = mindeg_exhaustive(&u, 2).unwrap().unwrap();
        assert_eq!(m.rows(), 2);
        assert!(mindeg_exhaustive(&u, 1).unwrap().is_none());
        assert!(mindeg_exhaustive(&SimplicialComplex::uniform(2, 6).unwrap(), 2).is_err());
    }

    #[test]
    fn text_forms() {
        let m = BooleanMatrix::parse("101\n011\n").unwrap();
        assert_eq!(m.to_string(), "101\n011\n");
        assert_eq!(BooleanMatrix::parse(&m.to_csv()).unwrap(), m);
        assert!(BooleanMatrix::parse("10\n1").is_err());
        assert!(BooleanMatrix::parse("12").is_err());
    }
}
