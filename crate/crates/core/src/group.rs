//! Finite groups given by explicit Cayley tables.
//!
//! Elements are dense indices `0..order` and the identity always sits at
//! index 0. Constructors normalise any input table to that convention.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest order accepted by the named constructors.
pub const MAX_ORDER: usize = 24;

/// Default bound for [`groups_isomorphic`].
pub const DEFAULT_ISO_BOUND: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("Cayley table is empty or not square")]
    NotSquare,
    #[error("table entry {value} at ({row}, {col}) is out of range")]
    EntryOutOfRange { row: usize, col: usize, value: usize },
    #[error("no two-sided identity element")]
    NoIdentity,
    #[error("not associative: ({0}*{1})*{2} != {0}*({1}*{2})")]
    NotAssociative(usize, usize, usize),
    #[error("element {0} has no inverse")]
    NoInverse(usize),
    #[error("argument out of range: {0}")]
    ArgumentOutOfRange(String),
    #[error("group order {order} exceeds the isomorphism search bound {bound}")]
    OrderTooLarge { order: usize, bound: usize },
    #[error("unrecognised group spec {0:?}")]
    BadSpec(String),
}

/// A finite group with a validated multiplication table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    inverse: Vec<usize>,
    labels: Vec<String>,
}

impl FiniteGroup {
    /// Validates a square table and returns the group it describes.
    ///
    /// If the identity is not at index 0 the elements are relabelled by
    /// swapping it with index 0; labels follow the elements.
    pub fn from_table(table: &[Vec<usize>]) -> Result<Self, GroupError> {
        let labels = (0..table.len()).map(|i| i.to_string()).collect();
        Self::from_table_with_labels(table, labels)
    }

    pub fn from_table_with_labels(
        table: &[Vec<usize>],
        labels: Vec<String>,
    ) -> Result<Self, GroupError> {
        let order = table.len();
        if order == 0 || table.iter().any(|row| row.len() != order) || labels.len() != order {
            return Err(GroupError::NotSquare);
        }
        for (r, row) in table.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                if v >= order {
                    return Err(GroupError::EntryOutOfRange { row: r, col: c, value: v });
                }
            }
        }
        let mul = |a: usize, b: usize| table[a][b];
        let identity = (0..order)
            .find(|&e| (0..order).all(|x| mul(e, x) == x && mul(x, e) == x))
            .ok_or(GroupError::NoIdentity)?;
        for a in 0..order {
            for b in 0..order {
                let ab = mul(a, b);
                for c in 0..order {
                    if mul(ab, c) != mul(a, mul(b, c)) {
                        return Err(GroupError::NotAssociative(a, b, c));
                    }
                }
            }
        }
        for x in 0..order {
            if !(0..order).any(|y| mul(x, y) == identity && mul(y, x) == identity) {
                return Err(GroupError::NoInverse(x));
            }
        }

        // relabel so that the identity is element 0
        let swap = |x: usize| {
            if x == identity {
                0
            } else if x == 0 {
                identity
            } else {
                x
            }
        };
        let mut flat = vec![0; order * order];
        for a in 0..order {
            for b in 0..order {
                flat[swap(a) * order + swap(b)] = swap(mul(a, b));
            }
        }
        let mut new_labels = labels;
        new_labels.swap(0, identity);
        let mut inverse = vec![0; order];
        for x in 0..order {
            inverse[x] = (0..order).find(|&y| flat[x * order + y] == 0).unwrap();
        }
        Ok(Self { order, table: flat, inverse, labels: new_labels })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// `a⁻¹ b`, the label of an oriented edge between cross-section values.
    #[inline]
    pub fn left_div(&self, a: usize, b: usize) -> usize {
        self.mul(self.inv(a), b)
    }

    /// `a b⁻¹`
    #[inline]
    pub fn right_div(&self, a: usize, b: usize) -> usize {
        self.mul(a, self.inv(b))
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn element_by_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn is_abelian(&self) -> bool {
        self.elements()
            .all(|a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Order of the element `a` (smallest k ≥ 1 with aᵏ = 1).
    pub fn element_order(&self, a: usize) -> usize {
        let mut k = 1;
        let mut x = a;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Sorted multiset of element orders, an isomorphism invariant.
    pub fn order_profile(&self) -> Vec<usize> {
        let mut p: Vec<usize> = self.elements().map(|a| self.element_order(a)).collect();
        p.sort_unstable();
        p
    }

    /// Cayley table as nested rows.
    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(|r| r.to_vec()).collect()
    }

    pub fn to_json(&self) -> CayleyJson {
        CayleyJson { order: self.order, table: self.table_rows() }
    }

    pub fn from_json(json: &CayleyJson) -> Result<Self, GroupError> {
        if json.table.len() != json.order {
            return Err(GroupError::NotSquare);
        }
        Self::from_table(&json.table)
    }

    // ---- named groups ----

    pub fn trivial() -> Self {
        Self::cyclic(1).unwrap()
    }

    /// Cyclic group Z_m, elements written e, g, g2, ….
    pub fn cyclic(m: usize) -> Result<Self, GroupError> {
        if m == 0 || m > MAX_ORDER {
            return Err(GroupError::ArgumentOutOfRange(format!("cyclic order {m}")));
        }
        let table: Vec<Vec<usize>> =
            (0..m).map(|a| (0..m).map(|b| (a + b) % m).collect()).collect();
        let labels = (0..m)
            .map(|k| match k {
                0 => "e".to_string(),
                1 => "g".to_string(),
                _ => format!("g{k}"),
            })
            .collect();
        Self::from_table_with_labels(&table, labels)
    }

    /// Klein four-group, elements e, a, b, ab.
    pub fn klein4() -> Self {
        let table: Vec<Vec<usize>> = (0..4).map(|a| (0..4).map(|b| a ^ b).collect()).collect();
        let labels = ["e", "a", "b", "ab"].iter().map(|s| s.to_string()).collect();
        Self::from_table_with_labels(&table, labels).unwrap()
    }

    /// Symmetric group S_k for k ≤ 4, permutations in one-line notation,
    /// composed as functions (`(p q)(x) = p(q(x))`).
    pub fn symmetric(k: usize) -> Result<Self, GroupError> {
        if k == 0 || k > 4 {
            return Err(GroupError::ArgumentOutOfRange(format!("symmetric degree {k}")));
        }
        let mut perms: Vec<Vec<usize>> = Vec::new();
        permutations(k, &mut Vec::new(), &mut vec![false; k], &mut perms);
        // identity first: lexicographic order already starts with it
        let index = |p: &Vec<usize>| perms.iter().position(|q| q == p).unwrap();
        let table: Vec<Vec<usize>> = perms
            .iter()
            .map(|p| {
                perms
                    .iter()
                    .map(|q| index(&(0..k).map(|x| p[q[x]]).collect()))
                    .collect()
            })
            .collect();
        let labels = perms
            .iter()
            .map(|p| p.iter().map(|x| (x + 1).to_string()).collect::<String>())
            .map(|s| format!("[{s}]"))
            .collect();
        Self::from_table_with_labels(&table, labels)
    }

    pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> Result<Self, GroupError> {
        let order = a.order * b.order;
        if order > MAX_ORDER {
            return Err(GroupError::ArgumentOutOfRange(format!("product order {order}")));
        }
        let split = |x: usize| (x / b.order, x % b.order);
        let table: Vec<Vec<usize>> = (0..order)
            .map(|x| {
                (0..order)
                    .map(|y| {
                        let (x1, x2) = split(x);
                        let (y1, y2) = split(y);
                        a.mul(x1, y1) * b.order + b.mul(x2, y2)
                    })
                    .collect()
            })
            .collect();
        let labels = (0..order)
            .map(|x| {
                let (x1, x2) = split(x);
                format!("({},{})", a.label(x1), b.label(x2))
            })
            .collect();
        Self::from_table_with_labels(&table, labels)
    }

    /// Parses the group names accepted on the command line: `1`, `Zm`,
    /// `V4`, `Sk` and products such as `Z2xZ2`.
    pub fn from_spec(spec: &str) -> Result<Self, GroupError> {
        let spec = spec.trim();
        let bad = || GroupError::BadSpec(spec.to_string());
        if spec.contains('x') {
            let mut parts = spec.split('x');
            let first = Self::from_spec(parts.next().ok_or_else(bad)?).map_err(|_| bad())?;
            return parts.try_fold(first, |acc, p| {
                let g = Self::from_spec(p).map_err(|_| bad())?;
                Self::direct_product(&acc, &g)
            });
        }
        match spec {
            "1" | "Z1" => Ok(Self::trivial()),
            "V4" | "K4" => Ok(Self::klein4()),
            _ => {
                if let Some(m) = spec.strip_prefix('Z') {
                    let m: usize = m.parse().map_err(|_| bad())?;
                    Self::cyclic(m)
                } else if let Some(k) = spec.strip_prefix('S') {
                    let k: usize = k.parse().map_err(|_| bad())?;
                    Self::symmetric(k)
                } else {
                    Err(bad())
                }
            }
        }
    }
}

fn permutations(k: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
    if cur.len() == k {
        out.push(cur.clone());
        return;
    }
    for x in 0..k {
        if !used[x] {
            used[x] = true;
            cur.push(x);
            permutations(k, cur, used, out);
            cur.pop();
            used[x] = false;
        }
    }
}

impl fmt::Display for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "group of order {} {{{}}}", self.order, self.labels.join(", "))
    }
}

/// JSON form of a Cayley table: `{"order": n, "table": [[...]]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CayleyJson {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
}

/// Searches for an isomorphism `a → b` with the default order bound.
pub fn groups_isomorphic(a: &FiniteGroup, b: &FiniteGroup) -> Result<Option<Vec<usize>>, GroupError> {
    groups_isomorphic_bounded(a, b, DEFAULT_ISO_BOUND)
}

/// Returns `Some(map)` with `map[x]` the image of `x` if the groups are
/// isomorphic. Backtracks over identity-preserving bijections that respect
/// element orders, checking the homomorphism law on every assigned pair.
pub fn groups_isomorphic_bounded(
    a: &FiniteGroup,
    b: &FiniteGroup,
    bound: usize,
) -> Result<Option<Vec<usize>>, GroupError> {
    for g in [a, b] {
        if g.order() > bound {
            return Err(GroupError::OrderTooLarge { order: g.order(), bound });
        }
    }
    if a.order() != b.order() || a.order_profile() != b.order_profile() {
        return Ok(None);
    }
    let n = a.order();
    let ord_a: Vec<usize> = a.elements().map(|x| a.element_order(x)).collect();
    let ord_b: Vec<usize> = b.elements().map(|x| b.element_order(x)).collect();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    map[0] = 0;
    used[0] = true;

    fn consistent(a: &FiniteGroup, b: &FiniteGroup, map: &[usize], x: usize) -> bool {
        for y in a.elements() {
            if map[y] == usize::MAX {
                continue;
            }
            for (p, q) in [(x, y), (y, x)] {
                let img = map[a.mul(p, q)];
                if img != usize::MAX && img != b.mul(map[p], map[q]) {
                    return false;
                }
            }
        }
        true
    }

    fn search(
        a: &FiniteGroup,
        b: &FiniteGroup,
        ord_a: &[usize],
        ord_b: &[usize],
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        x: usize,
    ) -> bool {
        if x == a.order() {
            return true;
        }
        for y in b.elements() {
            if used[y] || ord_a[x] != ord_b[y] {
                continue;
            }
            map[x] = y;
            used[y] = true;
            if consistent(a, b, map, x) && search(a, b, ord_a, ord_b, map, used, x + 1) {
                return true;
            }
            map[x] = usize::MAX;
            used[y] = false;
        }
        false
    }

    if search(a, b, &ord_a, &ord_b, &mut map, &mut used, 1) {
        Ok(Some(map))
    } else {
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_group_axioms(g: &FiniteGroup) {
        for x in g.elements() {
            assert_eq!(g.mul(0, x), x);
            assert_eq!(g.mul(x, 0), x);
            assert_eq!(g.mul(x, g.inv(x)), 0);
            for y in g.elements() {
                for z in g.elements() {
                    assert_eq!(g.mul(g.mul(x, y), z), g.mul(x, g.mul(y, z)));
                }
            }
        }
    }

    #[test]
    fn trivial_and_z2_tables() {
        let t = FiniteGroup::from_table(&[vec![0]]).unwrap();
        assert_eq!(t.order(), 1);
        let z2 = FiniteGroup::from_table(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(z2.order(), 2);
        assert_eq!(z2.inv(1), 1);
    }

    #[test]
    fn non_group_table_is_rejected() {
        let err = FiniteGroup::from_table(&[vec![0, 1], vec![1, 1]]).unwrap_err();
        assert!(matches!(err, GroupError::NoInverse(1) | GroupError::NotAssociative(..)));
    }

    #[test]
    fn identity_is_moved_to_index_zero() {
        // Z_2 written with identity at index 1
        let g = FiniteGroup::from_table(&[vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(g.mul(0, 1), 1);
        assert_eq!(g.label(0), "1");
        assert_group_axioms(&g);
    }

    #[test]
    fn malformed_tables() {
        assert_eq!(FiniteGroup::from_table(&[]), Err(GroupError::NotSquare));
        assert_eq!(FiniteGroup::from_table(&[vec![0, 1]]), Err(GroupError::NotSquare));
        assert!(matches!(
            FiniteGroup::from_table(&[vec![0, 2], vec![1, 0]]),
            Err(GroupError::EntryOutOfRange { .. })
        ));
        // a left-zero band has no identity
        assert_eq!(
            FiniteGroup::from_table(&[vec![0, 0], vec![1, 1]]),
            Err(GroupError::NoIdentity)
        );
    }

    #[test]
    fn named_groups_satisfy_axioms() {
        let groups = [
            FiniteGroup::cyclic(1).unwrap(),
            FiniteGroup::cyclic(5).unwrap(),
            FiniteGroup::klein4(),
            FiniteGroup::symmetric(3).unwrap(),
            FiniteGroup::symmetric(4).unwrap(),
            FiniteGroup::direct_product(&FiniteGroup::cyclic(2).unwrap(), &FiniteGroup::cyclic(3).unwrap())
                .unwrap(),
        ];
        for g in &groups {
            assert_group_axioms(g);
        }
        assert_eq!(groups[0].order(), 1);
        assert_eq!(groups[4].order(), 24);
    }

    #[test]
    fn exponent_two_product() {
        let z2 = FiniteGroup::cyclic(2).unwrap();
        let v = FiniteGroup::direct_product(&z2, &z2).unwrap();
        assert_eq!(v.order(), 4);
        assert!(v.elements().all(|x| v.mul(x, x) == 0));
    }

    #[test]
    fn s3_is_non_abelian() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        assert_eq!(s3.order(), 6);
        assert!(!s3.is_abelian());
    }

    #[test]
    fn constructor_ranges() {
        assert!(FiniteGroup::cyclic(0).is_err());
        assert!(FiniteGroup::symmetric(5).is_err());
        assert!(FiniteGroup::cyclic(MAX_ORDER + 1).is_err());
    }

    #[test]
    fn spec_strings() {
        for (s, n) in [("1", 1), ("Z2", 2), ("Z3", 3), ("Z4", 4), ("V4", 4), ("Z5", 5), ("S3", 6), ("Z2xZ2", 4)] {
            assert_eq!(FiniteGroup::from_spec(s).unwrap().order(), n, "{s}");
        }
        assert!(matches!(FiniteGroup::from_spec("Q8"), Err(GroupError::BadSpec(_))));
        assert!(FiniteGroup::from_spec("Zx").is_err());
    }

    #[test]
    fn isomorphism_search() {
        let z4 = FiniteGroup::cyclic(4).unwrap();
        let v4 = FiniteGroup::from_spec("Z2xZ2").unwrap();
        assert_eq!(groups_isomorphic(&z4, &v4).unwrap(), None);
        let id = groups_isomorphic(&z4, &z4).unwrap().unwrap();
        assert_eq!(id, vec![0, 1, 2, 3]);
        let z6 = FiniteGroup::cyclic(6).unwrap();
        let z2z3 = FiniteGroup::from_spec("Z2xZ3").unwrap();
        let map = groups_isomorphic(&z6, &z2z3).unwrap().unwrap();
        for x in z6.elements() {
            for y in z6.elements() {
                assert_eq!(map[z6.mul(x, y)], z2z3.mul(map[x], map[y]));
            }
        }
        assert!(groups_isomorphic(&z2z3, &z6).unwrap().is_some());
        assert!(groups_isomorphic(&FiniteGroup::symmetric(3).unwrap(), &z6).unwrap().is_none());
        assert!(matches!(
            groups_isomorphic(&FiniteGroup::cyclic(9).unwrap(), &FiniteGroup::cyclic(9).unwrap()),
            Err(GroupError::OrderTooLarge { .. })
        ));
    }

    #[test]
    fn json_round_trip() {
        let g = FiniteGroup::symmetric(3).unwrap();
        let text = serde_json::to_string(&g.to_json()).unwrap();
        let back: CayleyJson = serde_json::from_str(&text).unwrap();
        let h = FiniteGroup::from_json(&back).unwrap();
        assert_eq!(h.table_rows(), g.table_rows());
    }
}
