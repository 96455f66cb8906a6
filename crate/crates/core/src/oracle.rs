//! Brute-force reference implementations, independent of the fold algorithms.
//!
//! The group is enumerated breadth-first from the identity by right
//! multiplication with generators, so lengths come from BFS depth rather than
//! from root counting. Bruhat intervals come from the subword property:
//! for a right descent `s` of `w`, `[e, w] = [e, ws] ∪ [e, ws]·s`.
//! `x * y` and `x |> y` are then evaluated as the maximum of
//! `{uv : u <= x, v <= y}` and the minimum of `{uy : u <= x}`.

use std::collections::HashMap;
use std::sync::Arc;

use fixedbitset::FixedBitSet;

use crate::demazure;
use crate::element::{CoxeterGroup, Element};
use crate::error::{Error, Result};

/// Default cap on the group order for enumeration.
pub const DEFAULT_GUARD: u128 = 50_000;

/// Every element of a finite group with lengths, Bruhat intervals and products.
pub struct GroupEnumeration {
    group: Arc<CoxeterGroup>,
    elements: Vec<Element>,
    index: HashMap<Element, usize>,
    depth: Vec<u32>,
    /// `right[w][i - 1]` is the index of `w s_i`.
    right: Vec<Vec<usize>>,
    /// `below[w]` is the Bruhat interval `[e, w]`.
    below: Vec<FixedBitSet>,
    /// Row-major `mul[u * n + v] = uv`, built on first use.
    mul: std::sync::OnceLock<Vec<u32>>,
}

impl GroupEnumeration {
    pub fn new(group: &Arc<CoxeterGroup>, guard: u128) -> Result<Self> {
        let order = group.diagram().group_order().unwrap_or(u128::MAX);
        if order > guard {
            return Err(Error::GuardExceeded { order, guard });
        }
        let rank = group.rank();
        let mut elements = vec![group.identity()];
        let mut index = HashMap::from([(group.identity(), 0usize)]);
        let mut depth = vec![0u32];
        let mut right: Vec<Vec<usize>> = Vec::new();
        let mut head = 0;
        while head < elements.len() {
            let mut row = Vec::with_capacity(rank);
            for label in 1..=rank {
                let next = elements[head].right_mul_gen(label);
                let k = match index.get(&next) {
                    Some(&k) => k,
                    None => {
                        let k = elements.len();
                        index.insert(next.clone(), k);
                        elements.push(next);
                        depth.push(depth[head] + 1);
                        k
                    }
                };
                row.push(k);
            }
            right.push(row);
            head += 1;
        }
        assert_eq!(elements.len() as u128, order, "enumeration of {} has the wrong size", group.diagram());

        let n = elements.len();
        let mut below: Vec<FixedBitSet> = Vec::with_capacity(n);
        // BFS order is length order, so `ws` is always processed before `w`.
        for w in 0..n {
            let mut set = FixedBitSet::with_capacity(n);
            set.insert(w);
            if w != 0 {
                let (s, ws) = (1..=rank)
                    .map(|label| (label, right[w][label - 1]))
                    .find(|&(_, ws)| depth[ws] < depth[w])
                    .expect("a non-identity element has a right descent");
                for u in below[ws].ones() {
                    set.insert(u);
                    set.insert(right[u][s - 1]);
                }
            }
            below.push(set);
        }

        Ok(GroupEnumeration {
            group: Arc::clone(group),
            elements,
            index,
            depth,
            right,
            below,
            mul: std::sync::OnceLock::new(),
        })
    }

    pub fn group(&self) -> &Arc<CoxeterGroup> {
        &self.group
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn element(&self, k: usize) -> &Element {
        &self.elements[k]
    }

    pub fn index_of(&self, w: &Element) -> usize {
        self.index[w]
    }

    /// Length as BFS distance from the identity.
    pub fn depth(&self, k: usize) -> usize {
        self.depth[k] as usize
    }

    pub fn right_mul_gen(&self, k: usize, label: usize) -> usize {
        self.right[k][label - 1]
    }

    pub fn below(&self, w: usize) -> &FixedBitSet {
        &self.below[w]
    }

    pub fn leq(&self, u: usize, w: usize) -> bool {
        self.below[w].contains(u)
    }

    fn mul_table(&self) -> &[u32] {
        self.mul.get_or_init(|| {
            let n = self.len();
            let mut table = vec![0u32; n * n];
            for (u, x) in self.elements.iter().enumerate() {
                for (v, y) in self.elements.iter().enumerate() {
                    table[u * n + v] = self.index[&(x * y)] as u32;
                }
            }
            table
        })
    }

    pub fn mul(&self, u: usize, v: usize) -> usize {
        self.mul_table()[u * self.len() + v] as usize
    }

    /// Unique Bruhat maximum of a set, if there is one.
    fn unique_max(&self, set: &FixedBitSet) -> Option<usize> {
        let top = set.ones().map(|k| self.depth[k]).max()?;
        let mut found = set.ones().filter(|&k| self.depth[k] == top && set.is_subset(&self.below[k]));
        let m = found.next()?;
        found.next().is_none().then_some(m)
    }

    /// Unique Bruhat minimum of a set, if there is one.
    fn unique_min(&self, set: &FixedBitSet) -> Option<usize> {
        let mut common = FixedBitSet::with_capacity(self.len());
        common.insert_range(..);
        for t in set.ones() {
            common.intersect_with(&self.below[t]);
        }
        common.intersect_with(set);
        let mut found = common.ones();
        let m = found.next()?;
        found.next().is_none().then_some(m)
    }

    /// `max {uv : u <= x, v <= y}` by enumeration.
    pub fn star_def(&self, x: usize, y: usize) -> Result<usize> {
        let n = self.len();
        let table = self.mul_table();
        let mut products = FixedBitSet::with_capacity(n);
        for u in self.below[x].ones() {
            let row = &table[u * n..(u + 1) * n];
            for v in self.below[y].ones() {
                products.insert(row[v] as usize);
            }
        }
        self.unique_max(&products).ok_or(Error::NoUniqueMax)
    }

    /// `min {uy : u <= x}` by enumeration.
    pub fn down_def(&self, x: usize, y: usize) -> Result<usize> {
        let mut products = FixedBitSet::with_capacity(self.len());
        for u in self.below[x].ones() {
            products.insert(self.mul(u, y));
        }
        self.unique_min(&products).ok_or(Error::NoUniqueMin)
    }
}

/// Outcome of comparing the fast routines with the enumeration.
#[derive(Debug, Clone, Default, PartialEq, Eq, serde::Serialize)]
pub struct CrossCheckReport {
    pub diagram: String,
    pub order: usize,
    pub pairs: usize,
    pub length_mismatches: usize,
    pub bruhat_mismatches: usize,
    pub star_mismatches: usize,
    pub down_mismatches: usize,
    pub witness_failures: usize,
    /// The first few disagreements, for diagnostics.
    pub examples: Vec<String>,
}

impl CrossCheckReport {
    pub fn mismatches(&self) -> usize {
        self.length_mismatches + self.bruhat_mismatches + self.star_mismatches + self.down_mismatches + self.witness_failures
    }

    pub fn is_clean(&self) -> bool {
        self.mismatches() == 0
    }

    fn note(&mut self, text: impl FnOnce() -> String) {
        if self.examples.len() < 10 {
            self.examples.push(text());
        }
    }

    fn merge(mut self, other: CrossCheckReport) -> CrossCheckReport {
        self.pairs += other.pairs;
        self.length_mismatches += other.length_mismatches;
        self.bruhat_mismatches += other.bruhat_mismatches;
        self.star_mismatches += other.star_mismatches;
        self.down_mismatches += other.down_mismatches;
        self.witness_failures += other.witness_failures;
        for e in other.examples {
            self.note(|| e);
        }
        self
    }
}

/// Checks one row `x` against every `y`.
fn check_row(en: &GroupEnumeration, x: usize) -> Result<CrossCheckReport> {
    let mut r = CrossCheckReport::default();
    let xe = en.element(x);
    for y in 0..en.len() {
        let ye = en.element(y);
        r.pairs += 1;

        if xe.bruhat_leq(ye)? != en.leq(x, y) {
            r.bruhat_mismatches += 1;
            r.note(|| format!("bruhat {xe} <= {ye}"));
        }

        let prod = demazure::star(xe, ye)?;
        let expected = en.element(en.star_def(x, y)?);
        if prod != *expected {
            r.star_mismatches += 1;
            r.note(|| format!("star({xe}, {ye}) = {prod}, expected {expected}"));
        }

        let low = demazure::down(xe, ye)?;
        let expected = en.element(en.down_def(x, y)?);
        if low != *expected {
            r.down_mismatches += 1;
            r.note(|| format!("down({xe}, {ye}) = {low}, expected {expected}"));
        }

        // u' = (x*y) y^{-1} <= x and v' = x^{-1} (x*y) <= y with
        // l(x*y) = l(u') + l(y) = l(x) + l(v').
        let u = &prod * &ye.inverse();
        let v = &xe.inverse() * &prod;
        let (ui, vi) = (en.index_of(&u), en.index_of(&v));
        let ok = en.leq(ui, x)
            && en.leq(vi, y)
            && prod.len() == u.len() + ye.len()
            && prod.len() == xe.len() + v.len();
        if !ok {
            r.witness_failures += 1;
            r.note(|| format!("witnesses for ({xe}, {ye}): u' = {u}, v' = {v}"));
        }
    }
    Ok(r)
}

/// Compares lengths, Bruhat order, `*`, `|>` and the product witnesses with
/// the enumeration, over all ordered pairs of elements.
pub fn cross_check(group: &Arc<CoxeterGroup>, guard: u128) -> Result<CrossCheckReport> {
    let en = GroupEnumeration::new(group, guard)?;
    let mut report = CrossCheckReport {
        diagram: group.diagram().to_string(),
        order: en.len(),
        ..Default::default()
    };
    for (k, w) in en.elements().iter().enumerate() {
        if w.len() != en.depth(k) {
            report.length_mismatches += 1;
            report.note(|| format!("length of {w}: {} vs depth {}", w.len(), en.depth(k)));
        }
    }

    #[cfg(feature = "parallel")]
    let rows: Vec<Result<CrossCheckReport>> = {
        use rayon::prelude::*;
        (0..en.len()).into_par_iter().map(|x| check_row(&en, x)).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let rows: Vec<Result<CrossCheckReport>> = (0..en.len()).map(|x| check_row(&en, x)).collect();

    for row in rows {
        report = report.merge(row?);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn enumerate(t: &str) -> GroupEnumeration {
        GroupEnumeration::new(&CoxeterGroup::parse(t).unwrap(), DEFAULT_GUARD).unwrap()
    }

    #[test]
    fn orders() {
        for (t, n) in [("A1", 2), ("A3", 24), ("B3", 48), ("H3", 120), ("I2(7)", 14), ("D4", 192), ("A1xA2", 12)] {
            assert_eq!(enumerate(t).len(), n, "{t}");
        }
    }

    #[test]
    fn guard_is_enforced() {
        let e6 = CoxeterGroup::parse("E6").unwrap();
        assert!(matches!(
            GroupEnumeration::new(&e6, DEFAULT_GUARD),
            Err(Error::GuardExceeded { order: 51840, .. })
        ));
    }

    #[test]
    fn intervals_in_a2() {
        let en = enumerate("A2");
        let g = en.group().clone();
        let w0 = en.index_of(&g.longest_element());
        assert_eq!(en.below(w0).count_ones(..), 6);
        let s1 = en.index_of(&g.from_word(&[1]).unwrap());
        let s2 = en.index_of(&g.from_word(&[2]).unwrap());
        assert!(!en.leq(s1, s2));
        assert_eq!(en.below(s1).count_ones(..), 2);
    }

    #[test]
    fn definitions_on_a2() {
        let en = enumerate("A2");
        let g = en.group().clone();
        let w = |word: &[usize]| en.index_of(&g.from_word(word).unwrap());
        assert_eq!(en.star_def(w(&[1, 2]), w(&[1, 2])).unwrap(), w(&[1, 2, 1]));
        assert_eq!(en.down_def(w(&[1]), w(&[1, 2, 1])).unwrap(), w(&[2, 1]));
        assert_eq!(en.down_def(w(&[1, 2, 1]), w(&[1, 2, 1])).unwrap(), 0);
    }

    #[test]
    fn small_cross_checks_are_clean() {
        for t in ["A2", "B2", "I2(5)", "A1xA1", "A3"] {
            let r = cross_check(&CoxeterGroup::parse(t).unwrap(), DEFAULT_GUARD).unwrap();
            assert!(r.is_clean(), "{t}: {r:?}");
        }
    }
}
