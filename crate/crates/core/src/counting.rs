//! Closed-form basis counts for the lift matroid of `Δ_n(G)`.

use num_rational::Ratio;

fn int(x: u64) -> Ratio<i128> {
    Ratio::from_integer(x as i128)
}

/// `n! / (n − k)!`
fn falling(n: u64, k: u64) -> Ratio<i128> {
    (n - k + 1..=n).map(int).product()
}

/// `q^{n−1}(q − 1)`: free labels on a spanning tree, one unbalanced closing edge.
fn labellings(n: u64, q: u64) -> Ratio<i128> {
    int(q).pow(n as i32 - 1) * (int(q) - int(1))
}

/// The stated formula: `(n!/(n−2)! n^{n−3} + Σ_{k≥3} n!/(2(n−k)!) n^{n−k−1}) q^{n−1}(q−1)`.
pub fn facet_formula_closed(n: u64, q: u64) -> Ratio<i128> {
    assert!(n >= 2 && q >= 1);
    let mut s = falling(n, 2) * int(n).pow(n as i32 - 3);
    for k in 3..=n {
        s += falling(n, k) / int(2) * int(n).pow(n as i32 - k as i32 - 1);
    }
    s * labellings(n, q)
}

/// Uniform summand `n!/(2(n−k)!) n^{n−k−1}` for every cycle length `k ≥ 2`.
pub fn facet_formula_corrected(n: u64, q: u64) -> Ratio<i128> {
    assert!(n >= 2 && q >= 1);
    let s: Ratio<i128> = (2..=n).map(|k| falling(n, k) / int(2) * int(n).pow(n as i32 - k as i32 - 1)).sum();
    s * labellings(n, q)
}

/// `formula / count`, undefined for a zero count.
pub fn ratio(formula: Ratio<i128>, count: usize) -> Option<Ratio<i128>> {
    (count > 0).then(|| formula / int(count as u64))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_values() {
        let cases = [(2, 2), (2, 3), (3, 2)];
        assert_eq!(cases.map(|(n, q)| facet_formula_closed(n, q).to_integer()), [2, 6, 28]);
        assert_eq!(cases.map(|(n, q)| facet_formula_corrected(n, q).to_integer()), [1, 3, 16]);
        assert_eq!(facet_formula_corrected(4, 1), int(0));
        assert!(facet_formula_corrected(4, 3).is_integer());
        assert_eq!(ratio(facet_formula_closed(3, 2), 16), Some(Ratio::new(7, 4)));
        assert_eq!(ratio(int(1), 0), None);
    }
}
