//! Canonical rectangle pairs, the four-way gluing operation, and the
//! classification multisets behind the double-counting identity.
//!
//! A canonical pair for N is an unordered pair of rows<=cols rectangles whose
//! cell counts sum to N. Gluing a pair produces the four orientation variants
//! {X,Y}, {X,Yt}, {Xt,Y}, {Xt,Yt}; the multiset of all variants over all
//! canonical pairs decomposes by column equality, square membership, and
//! transpose-pairing. Both the exhaustive route ([`enumerate_multiset_a`])
//! and the closed-form route ([`counts_by_formula`]) are implemented and must
//! agree componentwise whenever N is not a sum of two squares.

use crate::arith::{self, SieveTable};
use crate::congruence;
use crate::error::{Error, Result};
use crate::partitions;
use std::collections::BTreeMap;
use std::fmt;

/// Default ceiling for exhaustive pair enumeration.
pub const DEFAULT_ENUMERATION_BOUND: u64 = 5000;

/// A grid of `rows x cols` cells, both at least 1.
///
/// The derived ordering (rows, then cols) is the canonical ordering used to
/// store unordered pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rectangle {
    rows: u64,
    cols: u64,
}

impl Rectangle {
    pub fn new(rows: u64, cols: u64) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Domain("rectangle sides must be >= 1".into()));
        }
        rows.checked_mul(cols)
            .ok_or_else(|| Error::Domain("rectangle cell count overflows u64".into()))?;
        Ok(Rectangle { rows, cols })
    }

    pub fn rows(&self) -> u64 {
        self.rows
    }

    pub fn cols(&self) -> u64 {
        self.cols
    }

    pub fn cells(&self) -> u64 {
        self.rows * self.cols
    }

    pub fn transpose(self) -> Self {
        Rectangle {
            rows: self.cols,
            cols: self.rows,
        }
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }
}

impl fmt::Display for Rectangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.rows, self.cols)
    }
}

/// An unordered pair of rows<=cols rectangles with cell counts summing to N,
/// stored sorted by (cells, rows, cols).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct CanonicalPair {
    first: Rectangle,
    second: Rectangle,
}

impl CanonicalPair {
    pub fn new(a: Rectangle, b: Rectangle) -> Result<Self> {
        if a.rows() > a.cols() || b.rows() > b.cols() {
            return Err(Error::Domain(
                "canonical pair members must have rows <= cols".into(),
            ));
        }
        let key = |r: &Rectangle| (r.cells(), r.rows(), r.cols());
        let (first, second) = if key(&a) <= key(&b) { (a, b) } else { (b, a) };
        Ok(CanonicalPair { first, second })
    }

    pub fn first(&self) -> Rectangle {
        self.first
    }

    pub fn second(&self) -> Rectangle {
        self.second
    }

    pub fn total_cells(&self) -> u64 {
        self.first.cells() + self.second.cells()
    }
}

impl fmt::Display for CanonicalPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}, {}}}", self.first, self.second)
    }
}

/// An unordered pair of oriented rectangles, the elements of the glued
/// multiset.
///
/// Equality is orientation-sensitive but order-insensitive: {X,Y} = {Y,X},
/// while {X,Y} differs from {X,Yt} unless Y is square. Internally the two
/// rectangles are sorted by (rows, cols); orientations are never normalized.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GluedPair {
    x: Rectangle,
    y: Rectangle,
}

impl GluedPair {
    pub fn new(a: Rectangle, b: Rectangle) -> Self {
        let (x, y) = if a <= b { (a, b) } else { (b, a) };
        GluedPair { x, y }
    }

    pub fn x(&self) -> Rectangle {
        self.x
    }

    pub fn y(&self) -> Rectangle {
        self.y
    }

    pub fn cells(&self) -> u64 {
        self.x.cells() + self.y.cells()
    }

    /// The two members have the same number of columns.
    pub fn same_cols(&self) -> bool {
        self.x.cols() == self.y.cols()
    }

    /// At least one member is a square.
    pub fn has_square_member(&self) -> bool {
        self.x.is_square() || self.y.is_square()
    }

    /// One member is the transpose of the other.
    pub fn is_transpose_pair(&self) -> bool {
        self.x == self.y.transpose()
    }
}

impl fmt::Display for GluedPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}, {}}}", self.x, self.y)
    }
}

/// Per-pair multiplicities in the glued multiset and its four classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MultiplicityRecord {
    pub m_a: u32,
    pub m_b: u32,
    pub m_c: u32,
    pub m_d: u32,
    pub m_e: u32,
}

/// The five cardinalities |A|, |B|, |C|, |D|, |E|.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MultisetCounts {
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub d: u64,
    pub e: u64,
}

fn rectangles_with_cells(cells: u64) -> Vec<Rectangle> {
    let mut out = Vec::new();
    let mut r = 1;
    while r * r <= cells {
        if cells % r == 0 {
            out.push(Rectangle {
                rows: r,
                cols: cells / r,
            });
        }
        r += 1;
    }
    out
}

/// Every canonical pair for `n`, in ascending (first, second) order.
pub fn canonical_pairs(n: u64) -> Result<Vec<CanonicalPair>> {
    canonical_pairs_with_bound(n, DEFAULT_ENUMERATION_BOUND)
}

pub fn canonical_pairs_with_bound(n: u64, bound: u64) -> Result<Vec<CanonicalPair>> {
    if n < 2 {
        return Err(Error::Domain("canonical_pairs: n must be >= 2".into()));
    }
    if n > bound {
        return Err(Error::Resource(format!(
            "canonical_pairs: N={n} exceeds the enumeration bound {bound}"
        )));
    }
    let mut out = Vec::new();
    for small in 1..=n / 2 {
        let large = n - small;
        let smalls = rectangles_with_cells(small);
        if small < large {
            let larges = rectangles_with_cells(large);
            for &a in &smalls {
                for &b in &larges {
                    out.push(CanonicalPair { first: a, second: b });
                }
            }
        } else {
            // equal halves: unordered pairs with repetition
            for (i, &a) in smalls.iter().enumerate() {
                for &b in &smalls[i..] {
                    out.push(CanonicalPair { first: a, second: b });
                }
            }
        }
    }
    Ok(out)
}

/// The gluing operation: the four orientation variants of a pair, with
/// repeats kept.
pub fn glue(x: Rectangle, y: Rectangle) -> [GluedPair; 4] {
    [
        GluedPair::new(x, y),
        GluedPair::new(x, y.transpose()),
        GluedPair::new(x.transpose(), y),
        GluedPair::new(x.transpose(), y.transpose()),
    ]
}

/// Classify a glued pair into the five-row multiplicity table.
///
/// Requires that the pair's cell count is `n` and that `n` is not a sum of
/// two squares; the configurations that can only arise for sums of two
/// squares (both members square) are rejected as hypothesis errors.
pub fn classify(p: &GluedPair, n: u64) -> Result<MultiplicityRecord> {
    if p.cells() != n {
        return Err(Error::Precondition(format!(
            "classify: pair {p} has {} cells, expected {n}",
            p.cells()
        )));
    }
    if p.x.is_square() && p.y.is_square() {
        return Err(Error::Hypothesis(format!(
            "classify: both members of {p} are squares, so N={n} is a sum of two squares"
        )));
    }
    let rec = if !p.same_cols() {
        if p.is_transpose_pair() {
            MultiplicityRecord { m_a: 2, m_b: 1, m_c: 0, m_d: 0, m_e: 1 }
        } else if p.has_square_member() {
            MultiplicityRecord { m_a: 2, m_b: 1, m_c: 1, m_d: 0, m_e: 0 }
        } else {
            MultiplicityRecord { m_a: 1, m_b: 1, m_c: 0, m_d: 0, m_e: 0 }
        }
    } else {
        // same columns and not both square rules out transpose pairs
        debug_assert!(!p.is_transpose_pair());
        if p.has_square_member() {
            MultiplicityRecord { m_a: 2, m_b: 0, m_c: 1, m_d: 1, m_e: 0 }
        } else {
            MultiplicityRecord { m_a: 1, m_b: 0, m_c: 0, m_d: 1, m_e: 0 }
        }
    };
    Ok(rec)
}

fn observed_multiplicities(pairs: &[CanonicalPair]) -> BTreeMap<GluedPair, u32> {
    let mut observed: BTreeMap<GluedPair, u32> = BTreeMap::new();
    for pair in pairs {
        for g in glue(pair.first(), pair.second()) {
            *observed.entry(g).or_insert(0) += 1;
        }
    }
    observed
}

/// Exhaustively build the glued multiset for `n` and classify every distinct
/// pair. Refuses `n` that is a sum of two squares; use
/// [`enumerate_multiset_a_unchecked`] to explore those.
pub fn enumerate_multiset_a(
    n: u64,
) -> Result<(MultisetCounts, BTreeMap<GluedPair, MultiplicityRecord>)> {
    enumerate_multiset_a_with_bound(n, DEFAULT_ENUMERATION_BOUND)
}

pub fn enumerate_multiset_a_with_bound(
    n: u64,
    bound: u64,
) -> Result<(MultisetCounts, BTreeMap<GluedPair, MultiplicityRecord>)> {
    if n < 2 {
        return Err(Error::Domain("enumerate_multiset_a: n must be >= 2".into()));
    }
    if arith::is_sum_of_two_squares(n)? {
        return Err(Error::Hypothesis(format!(
            "enumerate_multiset_a: N={n} is a sum of two squares; \
             the additive identity does not apply (use the unchecked variant)"
        )));
    }
    let pairs = canonical_pairs_with_bound(n, bound)?;
    let observed = observed_multiplicities(&pairs);

    let mut counts = MultisetCounts { a: 0, b: 0, c: 0, d: 0, e: 0 };
    let mut map = BTreeMap::new();
    for (&g, &mult) in &observed {
        let rec = classify(&g, n)?;
        if rec.m_a != mult {
            return Err(Error::Invariant(format!(
                "enumerate_multiset_a({n}): {g} observed {mult} times but the \
                 multiplicity table predicts {}",
                rec.m_a
            )));
        }
        counts.a += u64::from(rec.m_a);
        counts.b += u64::from(rec.m_b);
        counts.c += u64::from(rec.m_c);
        counts.d += u64::from(rec.m_d);
        counts.e += u64::from(rec.m_e);
        map.insert(g, rec);
    }
    if counts.a != counts.b + counts.c + counts.d + counts.e {
        return Err(Error::Invariant(format!(
            "enumerate_multiset_a({n}): |A| != |B|+|C|+|D|+|E|"
        )));
    }
    if counts.a != 4 * pairs.len() as u64 {
        return Err(Error::Invariant(format!(
            "enumerate_multiset_a({n}): |A| != 4 * canonical pairs"
        )));
    }
    Ok((counts, map))
}

/// Raw enumeration without the not-a-sum-of-two-squares hypothesis: the
/// class cardinalities are taken straight from the set definitions and the
/// additive identity is not assumed or checked.
pub fn enumerate_multiset_a_unchecked(
    n: u64,
    bound: u64,
) -> Result<(MultisetCounts, BTreeMap<GluedPair, u32>)> {
    let pairs = canonical_pairs_with_bound(n, bound)?;
    let observed = observed_multiplicities(&pairs);
    let mut counts = MultisetCounts { a: 0, b: 0, c: 0, d: 0, e: 0 };
    for (g, &mult) in &observed {
        counts.a += u64::from(mult);
        if !g.same_cols() {
            counts.b += 1;
        } else {
            counts.d += 1;
        }
        if g.has_square_member() {
            counts.c += 1;
        }
        if g.is_transpose_pair() {
            counts.e += 1;
        }
    }
    Ok((counts, observed))
}

/// Closed-form counts: |B| from the nu2 formula, |C| from the Hooley sum,
/// |D| from the floor(d/2) divisor sum, |E| from sigma0(N/2)/2.
///
/// When N = 2 (mod 4) the simplified |D| = sigma1(N)/2 - sigma0(N/2)/2 is
/// computed as well and cross-checked against the general sum.
pub fn counts_by_formula(n: u64, table: &SieveTable) -> Result<MultisetCounts> {
    if n < 2 {
        return Err(Error::Domain("counts_by_formula: n must be >= 2".into()));
    }
    if arith::is_sum_of_two_squares(n)? {
        return Err(Error::Hypothesis(format!(
            "counts_by_formula: N={n} is a sum of two squares"
        )));
    }
    if table.limit() < n {
        return Err(Error::Precondition(format!(
            "counts_by_formula({n}) needs a sieve to {n}, have {}",
            table.limit()
        )));
    }

    let b = partitions::nu2_formula(n, table)?;
    let c = congruence::hooley_sum(n, table)?;

    let d: u64 = arith::factorize(n)?
        .divisors()
        .iter()
        .map(|&div| div / 2)
        .sum();

    let e = if n % 2 == 1 {
        0
    } else {
        let s0_half = u64::from(table.sigma0(n / 2));
        if s0_half % 2 != 0 {
            return Err(Error::Hypothesis(format!(
                "counts_by_formula: N/2 = {} is a perfect square, contradicting \
                 the not-a-sum-of-two-squares hypothesis",
                n / 2
            )));
        }
        s0_half / 2
    };

    if n % 4 == 2 {
        let sigma1 = table.sigma1(n);
        if sigma1 % 2 != 0 {
            return Err(Error::Invariant(format!(
                "counts_by_formula({n}): sigma1 odd under the N = 2(mod 4) hypothesis"
            )));
        }
        let simplified = sigma1 / 2 - u64::from(table.sigma0(n / 2)) / 2;
        if simplified != d {
            return Err(Error::Invariant(format!(
                "counts_by_formula({n}): simplified |D| {simplified} != general |D| {d}"
            )));
        }
    }

    let a = b
        .checked_add(c)
        .and_then(|v| v.checked_add(d))
        .and_then(|v| v.checked_add(e))
        .ok_or_else(|| Error::Arithmetic(format!("counts_by_formula({n}) overflows u64")))?;
    Ok(MultisetCounts { a, b, c, d, e })
}

/// Render the Young diagram of a glued pair: the wider rectangle sits on
/// top, one row of `#` per diagram row.
pub fn render_young_diagram(p: &GluedPair) -> String {
    let (top, bottom) = if p.x.cols() >= p.y.cols() {
        (p.x, p.y)
    } else {
        (p.y, p.x)
    };
    let mut lines = Vec::with_capacity((top.rows() + bottom.rows()) as usize);
    for _ in 0..top.rows() {
        lines.push("#".repeat(top.cols() as usize));
    }
    for _ in 0..bottom.rows() {
        lines.push("#".repeat(bottom.cols() as usize));
    }
    lines.join("\n")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(rows: u64, cols: u64) -> Rectangle {
        Rectangle::new(rows, cols).unwrap()
    }

    #[test]
    fn rectangle_basics() {
        let x = r(2, 3);
        assert_eq!(x.cells(), 6);
        assert_eq!(x.transpose(), r(3, 2));
        assert_eq!(x.transpose().transpose(), x);
        assert!(!x.is_square());
        assert!(r(4, 4).is_square());
        assert!(matches!(Rectangle::new(0, 3), Err(Error::Domain(_))));
    }

    #[test]
    fn glued_pair_equality() {
        assert_eq!(GluedPair::new(r(1, 3), r(3, 1)), GluedPair::new(r(3, 1), r(1, 3)));
        assert_ne!(
            GluedPair::new(r(1, 3), r(1, 3)),
            GluedPair::new(r(1, 3), r(3, 1))
        );
        // transposing a square member changes nothing
        assert_eq!(
            GluedPair::new(r(2, 2), r(1, 2)),
            GluedPair::new(r(2, 2).transpose(), r(1, 2))
        );
    }

    #[test]
    fn canonical_pairs_for_six() {
        let pairs = canonical_pairs(6).unwrap();
        let expect = vec![
            CanonicalPair::new(r(1, 1), r(1, 5)).unwrap(),
            CanonicalPair::new(r(1, 2), r(1, 4)).unwrap(),
            CanonicalPair::new(r(1, 2), r(2, 2)).unwrap(),
            CanonicalPair::new(r(1, 3), r(1, 3)).unwrap(),
        ];
        assert_eq!(pairs, expect);
    }

    #[test]
    fn canonical_pairs_for_two() {
        let pairs = canonical_pairs(2).unwrap();
        assert_eq!(pairs, vec![CanonicalPair::new(r(1, 1), r(1, 1)).unwrap()]);
    }

    #[test]
    fn canonical_pair_rejects_tall() {
        assert!(matches!(
            CanonicalPair::new(r(3, 1), r(1, 1)),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn glue_figure_rows() {
        // first row of the N=6 figure: 1x5 with 1x1
        let g = glue(r(1, 5), r(1, 1));
        let flat = GluedPair::new(r(1, 5), r(1, 1));
        let tall = GluedPair::new(r(5, 1), r(1, 1));
        assert_eq!(g.iter().filter(|&&p| p == flat).count(), 2);
        assert_eq!(g.iter().filter(|&&p| p == tall).count(), 2);

        // fourth row: 1x3 with 1x3
        let g = glue(r(1, 3), r(1, 3));
        let same = GluedPair::new(r(1, 3), r(1, 3));
        let mixed = GluedPair::new(r(1, 3), r(3, 1));
        let both_tall = GluedPair::new(r(3, 1), r(3, 1));
        assert_eq!(g.iter().filter(|&&p| p == same).count(), 1);
        assert_eq!(g.iter().filter(|&&p| p == mixed).count(), 2);
        assert_eq!(g.iter().filter(|&&p| p == both_tall).count(), 1);

        // transpose-fixed pair glues to one element four times
        let g = glue(r(1, 1), r(1, 1));
        assert!(g.iter().all(|&p| p == GluedPair::new(r(1, 1), r(1, 1))));
    }

    #[test]
    fn glue_is_symmetric_and_transpose_invariant() {
        let sorted = |mut v: Vec<GluedPair>| {
            v.sort();
            v
        };
        for (x, y) in [(r(1, 4), r(2, 3)), (r(2, 2), r(1, 2)), (r(1, 3), r(1, 3))] {
            let base = sorted(glue(x, y).to_vec());
            assert_eq!(base, sorted(glue(y, x).to_vec()));
            assert_eq!(base, sorted(glue(x.transpose(), y).to_vec()));
            assert_eq!(base, sorted(glue(x, y.transpose()).to_vec()));
        }
    }

    #[test]
    fn classify_matches_table_rows() {
        let rec = |g: &GluedPair| classify(g, 6).unwrap();
        // different columns, X != Yt, no squares
        let p = GluedPair::new(r(1, 4), r(1, 2));
        assert_eq!(
            rec(&p),
            MultiplicityRecord { m_a: 1, m_b: 1, m_c: 0, m_d: 0, m_e: 0 }
        );
        // different columns, X != Yt, a square
        let p = GluedPair::new(r(2, 2), r(2, 1));
        assert_eq!(
            rec(&p),
            MultiplicityRecord { m_a: 2, m_b: 1, m_c: 1, m_d: 0, m_e: 0 }
        );
        // different columns, X = Yt
        let p = GluedPair::new(r(1, 3), r(3, 1));
        assert_eq!(
            rec(&p),
            MultiplicityRecord { m_a: 2, m_b: 1, m_c: 0, m_d: 0, m_e: 1 }
        );
        // same columns, no squares
        let p = GluedPair::new(r(4, 1), r(2, 1));
        assert_eq!(
            rec(&p),
            MultiplicityRecord { m_a: 1, m_b: 0, m_c: 0, m_d: 1, m_e: 0 }
        );
        // same columns, a square
        let p = GluedPair::new(r(2, 2), r(1, 2));
        assert_eq!(
            rec(&p),
            MultiplicityRecord { m_a: 2, m_b: 0, m_c: 1, m_d: 1, m_e: 0 }
        );
    }

    #[test]
    fn classify_spec_examples() {
        let p = GluedPair::new(r(1, 5), r(1, 1));
        let m = classify(&p, 6).unwrap();
        assert_eq!((m.m_a, m.m_b, m.m_c), (2, 1, 1));
        let p = GluedPair::new(r(1, 3), r(3, 1));
        let m = classify(&p, 6).unwrap();
        assert_eq!((m.m_a, m.m_b, m.m_e), (2, 1, 1));
        let p = GluedPair::new(r(2, 2), r(1, 2));
        let m = classify(&p, 6).unwrap();
        assert_eq!((m.m_a, m.m_c, m.m_d), (2, 1, 1));
    }

    #[test]
    fn classify_rejects_impossible_configurations() {
        // both squares: only possible when N is a sum of two squares
        let p = GluedPair::new(r(1, 1), r(1, 1));
        assert!(matches!(classify(&p, 2), Err(Error::Hypothesis(_))));
        let p = GluedPair::new(r(2, 2), r(3, 3));
        assert!(matches!(classify(&p, 13), Err(Error::Hypothesis(_))));
        // cell-count mismatch
        let p = GluedPair::new(r(1, 4), r(1, 2));
        assert!(matches!(classify(&p, 7), Err(Error::Precondition(_))));
    }

    #[test]
    fn enumerate_six_gives_paper_decomposition() {
        let (counts, map) = enumerate_multiset_a(6).unwrap();
        assert_eq!(
            counts,
            MultisetCounts { a: 16, b: 6, c: 4, d: 5, e: 1 }
        );
        assert_eq!(map.len(), 11, "6 two-part-size + 5 one-part-size diagrams");
        let m = map[&GluedPair::new(r(1, 5), r(1, 1))];
        assert_eq!((m.m_a, m.m_b, m.m_c), (2, 1, 1));
    }

    #[test]
    fn enumerate_fourteen() {
        let (counts, _) = enumerate_multiset_a(14).unwrap();
        assert_eq!(
            counts,
            MultisetCounts { a: 64, b: 44, c: 8, d: 11, e: 1 }
        );
        assert_eq!(counts.a % 4, 0);
        assert_eq!(canonical_pairs(14).unwrap().len(), 16);
    }

    #[test]
    fn enumerate_rejects_sums_of_two_squares() {
        for n in [2u64, 4, 5, 8, 9, 10] {
            assert!(matches!(
                enumerate_multiset_a(n),
                Err(Error::Hypothesis(_))
            ));
        }
    }

    #[test]
    fn unchecked_enumeration_of_two() {
        // N=2 is a sum of two squares; the raw counts break the identity
        let (counts, observed) = enumerate_multiset_a_unchecked(2, 100).unwrap();
        assert_eq!(
            counts,
            MultisetCounts { a: 4, b: 0, c: 1, d: 1, e: 1 }
        );
        assert_eq!(counts.a, 4 * canonical_pairs(2).unwrap().len() as u64);
        assert_ne!(counts.a, counts.b + counts.c + counts.d + counts.e);
        assert_eq!(observed[&GluedPair::new(r(1, 1), r(1, 1))], 4);
    }

    #[test]
    fn formula_counts_examples() {
        let t = SieveTable::build(100).unwrap();
        assert_eq!(
            counts_by_formula(6, &t).unwrap(),
            MultisetCounts { a: 16, b: 6, c: 4, d: 5, e: 1 }
        );
        let c14 = counts_by_formula(14, &t).unwrap();
        assert_eq!(c14, MultisetCounts { a: 64, b: 44, c: 8, d: 11, e: 1 });
        // odd N: E is empty
        assert_eq!(
            counts_by_formula(3, &t).unwrap(),
            MultisetCounts { a: 4, b: 1, c: 2, d: 1, e: 0 }
        );
        // N = 0 (mod 4): general |D| path, no simplification
        assert_eq!(
            counts_by_formula(12, &t).unwrap(),
            MultisetCounts { a: 52, b: 29, c: 8, d: 13, e: 2 }
        );
        assert!(matches!(counts_by_formula(4, &t), Err(Error::Hypothesis(_))));
    }

    #[test]
    fn routes_agree_spot() {
        let t = SieveTable::build(200).unwrap();
        for n in [3u64, 6, 7, 11, 12, 14, 19, 21, 22, 24, 28, 30, 33, 38, 42, 44, 46, 48] {
            assert!(!arith::is_sum_of_two_squares(n).unwrap(), "pick in-hypothesis n");
            let (enumerated, _) = enumerate_multiset_a(n).unwrap();
            let formulaic = counts_by_formula(n, &t).unwrap();
            assert_eq!(enumerated, formulaic, "n={n}");
        }
    }

    #[test]
    fn diagram_rendering() {
        let p = GluedPair::new(r(1, 5), r(1, 1));
        assert_eq!(render_young_diagram(&p), "#####\n#");
        let p = GluedPair::new(r(1, 3), r(3, 1));
        assert_eq!(render_young_diagram(&p), "###\n#\n#\n#");
        let p = GluedPair::new(r(2, 2), r(1, 2));
        assert_eq!(render_young_diagram(&p), "##\n##\n##");
        // stacked rows never widen downwards
        let p = GluedPair::new(r(2, 3), r(4, 2));
        let widths: Vec<usize> = render_young_diagram(&p).lines().map(|l| l.len()).collect();
        assert!(widths.windows(2).all(|w| w[0] >= w[1]));
        assert_eq!(widths.iter().sum::<usize>() as u64, p.cells());
    }
}
