//! Exact finite root systems and per-generator reflection tables.
//!
//! Roots are written in the simple-root basis. The reflection in the simple
//! root `alpha_i` acts by `s_i(v) = v - a_i(v) alpha_i` with
//! `a_i(v) = sum_j P[i][j] v_j`, where `P` is the pairing matrix below.
//!
//! Pairing conventions (off-diagonal entries on an edge `i - j`):
//!
//! * bond 3: `P[i][j] = P[j][i] = -1`
//! * bond 4 (`B_n` between `n-1` and `n`, `F4` between 2 and 3): the higher
//!   label gets `-2`, i.e. `P[n][n-1] = -2`, `P[n-1][n] = -1`
//! * bond 6 (`I2(6)`): `P[2][1] = -3`, `P[1][2] = -1`
//! * bond 5 (`H3`, `H4`): `P[1][2] = P[2][1] = -phi`
//!
//! Either orientation of a non-symmetric pair yields the same Coxeter group.

use std::collections::HashMap;

use crate::diagram::CoxeterDiagram;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

pub type RootIndex = u16;

#[derive(Debug, Clone)]
pub struct RootSystem {
    diagram: CoxeterDiagram,
    pairing: Vec<Scalar>,
    /// Positive roots at `0..n_pos` (simple roots first, in label order), then
    /// the negative of root `k` at `k + n_pos`.
    roots: Vec<Vec<Scalar>>,
    index: HashMap<Vec<Scalar>, RootIndex>,
    /// `refl[i][k]`: image of root `k` under the reflection in simple root `i` (0-based).
    refl: Vec<Vec<RootIndex>>,
    n_pos: usize,
}

/// Pairing matrix (row-major, `rank x rank`) for a diagram without general
/// dihedral components.
pub fn pairing_matrix(d: &CoxeterDiagram) -> Result<Vec<Scalar>> {
    let n = d.rank();
    let mut p = vec![Scalar::ZERO; n * n];
    for i in 1..=n {
        p[(i - 1) * n + i - 1] = Scalar::int(2);
        for j in 1..=n {
            if i == j {
                continue;
            }
            let entry = match d.m(i, j) {
                2 => Scalar::ZERO,
                3 => Scalar::int(-1),
                4 => Scalar::int(if i > j { -2 } else { -1 }),
                5 => -Scalar::PHI,
                6 => Scalar::int(if i > j { -3 } else { -1 }),
                m => return Err(Error::Unsupported(format!("{d} (bond order {m})"))),
            };
            p[(i - 1) * n + j - 1] = entry;
        }
    }
    Ok(p)
}

fn apply_reflection(pairing: &[Scalar], rank: usize, i: usize, v: &[Scalar]) -> Vec<Scalar> {
    let coeff = (0..rank).fold(Scalar::ZERO, |acc, j| acc + pairing[i * rank + j] * v[j]);
    let mut out = v.to_vec();
    out[i] = out[i] - coeff;
    out
}

/// Breadth-first closure of `seeds` under the simple reflections, applied in
/// the order given by `generator_order` (0-based). Returns roots in discovery order.
pub fn closure(
    pairing: &[Scalar],
    rank: usize,
    seeds: &[Vec<Scalar>],
    generator_order: &[usize],
) -> Vec<Vec<Scalar>> {
    let mut seen: HashMap<Vec<Scalar>, usize> = HashMap::new();
    let mut roots: Vec<Vec<Scalar>> = Vec::new();
    for s in seeds {
        if !seen.contains_key(s) {
            seen.insert(s.clone(), roots.len());
            roots.push(s.clone());
        }
    }
    let mut head = 0;
    while head < roots.len() {
        let v = roots[head].clone();
        head += 1;
        for &i in generator_order {
            let w = apply_reflection(pairing, rank, i, &v);
            if !seen.contains_key(&w) {
                seen.insert(w.clone(), roots.len());
                roots.push(w);
            }
        }
    }
    roots
}

fn simple_roots(rank: usize) -> Vec<Vec<Scalar>> {
    (0..rank)
        .map(|i| {
            let mut v = vec![Scalar::ZERO; rank];
            v[i] = Scalar::ONE;
            v
        })
        .collect()
}

/// `Some(true)` for positive, `Some(false)` for negative, `None` for mixed or zero.
fn root_sign(v: &[Scalar]) -> Option<bool> {
    let nonneg = v.iter().all(|c| !c.is_negative());
    let nonpos = v.iter().all(|c| !c.is_positive());
    match (nonneg, nonpos) {
        (true, false) => Some(true),
        (false, true) => Some(false),
        _ => None,
    }
}

impl RootSystem {
    pub fn build(d: &CoxeterDiagram) -> Result<Self> {
        if let Some(m) = d.general_dihedral() {
            return Err(Error::Unsupported(format!("I2({m})")));
        }
        let rank = d.rank();
        let pairing = pairing_matrix(d)?;
        let order: Vec<usize> = (0..rank).collect();
        let all = closure(&pairing, rank, &simple_roots(rank), &order);

        let mut positive = Vec::new();
        for v in &all {
            match root_sign(v) {
                Some(true) => positive.push(v.clone()),
                Some(false) => {}
                None => panic!("mixed-sign root {v:?} in {d}"),
            }
        }
        assert_eq!(2 * positive.len(), all.len(), "root system of {d} is not symmetric");
        let n_pos = positive.len();
        assert!(2 * n_pos <= RootIndex::MAX as usize, "root system of {d} is too large");

        let mut roots = positive.clone();
        roots.extend(positive.iter().map(|v| v.iter().map(|&c| -c).collect::<Vec<_>>()));
        let index: HashMap<Vec<Scalar>, RootIndex> =
            roots.iter().enumerate().map(|(k, v)| (v.clone(), k as RootIndex)).collect();
        assert_eq!(index.len(), roots.len());

        let refl = (0..rank)
            .map(|i| {
                roots
                    .iter()
                    .map(|v| {
                        let w = apply_reflection(&pairing, rank, i, v);
                        *index.get(&w).expect("root set is closed under reflections")
                    })
                    .collect()
            })
            .collect();

        Ok(RootSystem { diagram: d.clone(), pairing, roots, index, refl, n_pos })
    }

    pub fn diagram(&self) -> &CoxeterDiagram {
        &self.diagram
    }

    pub fn rank(&self) -> usize {
        self.diagram.rank()
    }

    /// Number of positive roots.
    pub fn n_positive(&self) -> usize {
        self.n_pos
    }

    pub fn n_roots(&self) -> usize {
        2 * self.n_pos
    }

    pub fn pairing(&self) -> &[Scalar] {
        &self.pairing
    }

    pub fn root(&self, k: usize) -> &[Scalar] {
        &self.roots[k]
    }

    pub fn roots(&self) -> &[Vec<Scalar>] {
        &self.roots
    }

    pub fn index_of(&self, coords: &[Scalar]) -> Option<usize> {
        self.index.get(coords).map(|&k| k as usize)
    }

    /// Index of the simple root for 1-based `label`.
    pub fn simple_index(&self, label: usize) -> usize {
        label - 1
    }

    pub fn is_positive(&self, k: usize) -> bool {
        k < self.n_pos
    }

    pub fn negate(&self, k: usize) -> usize {
        if k < self.n_pos {
            k + self.n_pos
        } else {
            k - self.n_pos
        }
    }

    /// Image of root `k` under the simple reflection with 1-based `label`.
    pub fn reflect(&self, label: usize, k: usize) -> usize {
        self.refl[label - 1][k] as usize
    }

    /// Whole reflection table for 1-based `label`.
    pub fn reflection_table(&self, label: usize) -> &[RootIndex] {
        &self.refl[label - 1]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn build(t: &str) -> RootSystem {
        RootSystem::build(&CoxeterDiagram::parse(t).unwrap()).unwrap()
    }

    fn coords(v: &[(i64, i64)]) -> Vec<Scalar> {
        v.iter().map(|&(a, b)| Scalar::new(a, b)).collect()
    }

    #[test]
    fn positive_root_counts() {
        for (t, n) in [
            ("A1", 1),
            ("A2", 3),
            ("B2", 4),
            ("I2(6)", 6),
            ("A3", 6),
            ("B3", 9),
            ("D4", 12),
            ("F4", 24),
            ("H3", 15),
            ("H4", 60),
            ("E6", 36),
            ("E7", 63),
            ("E8", 120),
            ("A2xA1", 4),
        ] {
            assert_eq!(build(t).n_positive(), n, "{t}");
        }
    }

    #[test]
    fn a2_roots() {
        let rs = build("A2");
        let mut pos: Vec<_> = (0..3).map(|k| rs.root(k).to_vec()).collect();
        pos.sort_by_key(|v| (v[0].a, v[1].a));
        assert_eq!(pos, vec![coords(&[(0, 0), (1, 0)]), coords(&[(1, 0), (0, 0)]), coords(&[(1, 0), (1, 0)])]);
    }

    #[test]
    fn reflect_examples() {
        let rs = build("A2");
        let a1 = rs.simple_index(1);
        let a2 = rs.simple_index(2);
        assert_eq!(rs.reflect(1, a1), rs.negate(a1));
        let sum = rs.index_of(&coords(&[(1, 0), (1, 0)])).unwrap();
        assert_eq!(rs.reflect(1, a2), sum);

        let h3 = build("H3");
        let target = h3.index_of(&coords(&[(0, 1), (1, 0), (0, 0)])).unwrap();
        assert_eq!(h3.reflect(1, h3.simple_index(2)), target);
    }

    #[test]
    fn simple_reflection_permutes_other_positive_roots() {
        for t in ["A4", "B4", "D5", "F4", "H3", "H4", "E6", "E8", "I2(6)xA2"] {
            let rs = build(t);
            let n = rs.n_positive();
            for i in 1..=rs.rank() {
                let simple = rs.simple_index(i);
                for k in 0..n {
                    let img = rs.reflect(i, k);
                    if k == simple {
                        assert_eq!(img, rs.negate(k), "{t}");
                    } else {
                        assert!(rs.is_positive(img), "{t}: s_{i} sends positive root {k} to a negative one");
                    }
                    // involution, commutes with negation
                    assert_eq!(rs.reflect(i, img), k);
                    assert_eq!(rs.reflect(i, rs.negate(k)), rs.negate(img));
                }
            }
        }
    }

    #[test]
    fn roots_are_uniformly_signed() {
        for t in ["H4", "E8", "F4", "B5"] {
            let rs = build(t);
            for (k, v) in rs.roots().iter().enumerate() {
                assert_eq!(root_sign(v), Some(rs.is_positive(k)), "{t} root {k}");
            }
        }
    }

    #[test]
    fn closure_is_idempotent_and_order_independent() {
        for t in ["H3", "E8", "F4"] {
            let rs = build(t);
            let rank = rs.rank();
            let again = closure(rs.pairing(), rank, rs.roots(), &(0..rank).collect::<Vec<_>>());
            assert_eq!(again.len(), rs.n_roots(), "{t}: closure added roots");

            let reversed: Vec<usize> = (0..rank).rev().collect();
            let mut seeds = simple_roots(rank);
            seeds.reverse();
            let shuffled = closure(rs.pairing(), rank, &seeds, &reversed);
            assert_eq!(shuffled.len(), rs.n_roots(), "{t}");
            for v in &shuffled {
                assert!(rs.index_of(v).is_some());
            }
        }
    }

    #[test]
    fn general_dihedral_is_unsupported() {
        let d = CoxeterDiagram::parse("I2(7)").unwrap();
        assert!(matches!(RootSystem::build(&d), Err(Error::Unsupported(_))));
    }

    #[test]
    fn coordinates_stay_small() {
        let e8 = build("E8");
        let max = e8.roots().iter().flatten().map(|c| c.a.abs()).max().unwrap();
        assert_eq!(max, 6);
        let h4 = build("H4");
        assert!(h4.roots().iter().flatten().all(|c| c.a.abs() <= 3 && c.b.abs() <= 4));
    }
}
