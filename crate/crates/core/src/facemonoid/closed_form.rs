//! Explicit formulas for `J1 ⋆_I J2`, type by type.
//!
//! Reducible diagrams split into irreducible components. Within a component
//! the full node set is the unit and the empty set is absorbing; otherwise the
//! product is the union of the products of all pairs of connected components
//! of `J1` and `J2`. What remains is a rule for two proper connected subsets,
//! given below per type in Bourbaki labeling.
//!
//! Connected subsets are described by their ends. For paths (`A`, `B`) a
//! connected `J` is an interval `{a, ..., n - b}`.
//!
//! * `A_n`: `{a + a' - 1, ..., n - b - b'}`.
//! * `B_n`: `{a + a' - 1, ..., n}` if `b = b' = 0`;
//!   `{a + a' - 1, ..., n - b' - a + 1}` if `b = 0 < b'`; empty if both
//!   `b, b' >= 1`.
//!
//! `D_n` connected subsets fall into three shapes: those containing both fork
//! leaves `n - 1, n` (then `J = {a, ..., n}`), paths avoiding `n` (intervals
//! `{a, ..., n - b}` with `b >= 1`), and paths through `n` but not `n - 1`,
//! which the leaf swap `n - 1 <-> n` maps to the previous shape. Results for
//! two proper connected subsets:
//!
//! * both are `I - {n-1}` or `I - {n}`: the parity table below;
//! * neither contains both leaves (otherwise): empty;
//! * `J1 = {a..n}` and `J2 = {a'..n}`: `{a + a' - 1, ..., n}` when
//!   `a + a' - 1 <= n - 1`, else empty;
//! * `J1 = {a..n}` and `J2 = {a'..n-b'}` up to the leaf swap:
//!   `{a + a' - 1, ..., n - b' - a + 1}`.
//!
//! In the mixed `B` and `D` cases the upper end drops by one for every node
//! `J1` misses at the far end; for `a = 2` it is `n - b' - 1`.
//!
//! Parity table (`D_n`, `e = 1` for even `n`, `e = 2` for odd `n`, `o = 3 - e`):
//!
//! * `(I-{n}) ⋆ (I-{n}) = {e, e + 2, ..., <= n - 1}`
//! * `(I-{n-1}) ⋆ (I-{n-1}) = {e, e + 2, ..., <= n - 3} ∪ {n}`
//! * `(I-{n-1}) ⋆ (I-{n}) = {o, o + 2, ..., <= n - 2}`
//!
//! `E6`, `E7`, `E8` are finite lists with every other pair giving the empty
//! set; `F4`, `H3`, `H4` and all dihedral types give the empty set.

use crate::diagram::{CoxeterDiagram, IrreducibleType};
use crate::subset::SubsetJ;

/// How connected components of the two arguments are combined.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pairing {
    /// Union over all pairs of components.
    AllPairs,
    /// Union over index-matched pairs (components ordered by smallest label);
    /// unmatched components contribute nothing.
    Diagonal,
}

/// `J1 ⋆_I J2` predicted by the per-type formulas.
pub fn closed_form(d: &CoxeterDiagram, j1: SubsetJ, j2: SubsetJ) -> SubsetJ {
    closed_form_with(d, j1, j2, Pairing::AllPairs)
}

pub fn closed_form_with(d: &CoxeterDiagram, j1: SubsetJ, j2: SubsetJ, pairing: Pairing) -> SubsetJ {
    d.components()
        .iter()
        .map(|c| {
            let local1 = j1.intersection(c.nodes()).shift_down(c.offset);
            let local2 = j2.intersection(c.nodes()).shift_down(c.offset);
            irreducible(c.kind, local1, local2, pairing).shift_up(c.offset)
        })
        .fold(SubsetJ::EMPTY, SubsetJ::union)
}

fn irreducible(kind: IrreducibleType, j1: SubsetJ, j2: SubsetJ, pairing: Pairing) -> SubsetJ {
    let n = kind.rank();
    let full = SubsetJ::full(n);
    if j1 == full {
        return j2;
    }
    if j2 == full {
        return j1;
    }
    let graph = CoxeterDiagram::from_components(&[kind]).expect("single component");
    let parts1 = graph.components_of(j1);
    let parts2 = graph.components_of(j2);
    let mut out = SubsetJ::EMPTY;
    match pairing {
        Pairing::AllPairs => {
            for &c1 in &parts1 {
                for &c2 in &parts2 {
                    out = out.union(connected(kind, c1, c2));
                }
            }
        }
        Pairing::Diagonal => {
            for (&c1, &c2) in parts1.iter().zip(&parts2) {
                out = out.union(connected(kind, c1, c2));
            }
        }
    }
    out
}

/// Both arguments proper, connected and nonempty.
fn connected(kind: IrreducibleType, j1: SubsetJ, j2: SubsetJ) -> SubsetJ {
    match kind {
        IrreducibleType::A(n) => type_a(n, j1, j2),
        IrreducibleType::B(n) => type_b(n, j1, j2),
        IrreducibleType::D(n) => type_d(n, j1, j2),
        IrreducibleType::E(6) => type_e6(j1, j2),
        IrreducibleType::E(7) => type_e7(j1, j2),
        IrreducibleType::E(_) => type_e8(j1, j2),
        IrreducibleType::F4 | IrreducibleType::H(_) | IrreducibleType::I2(_) => SubsetJ::EMPTY,
    }
}

/// `(a, b)` with `J = {a, ..., n - b}`.
fn ends(n: usize, j: SubsetJ) -> (usize, usize) {
    (j.min().expect("nonempty"), n - j.max().expect("nonempty"))
}

fn type_a(n: usize, j1: SubsetJ, j2: SubsetJ) -> SubsetJ {
    let (a, b) = ends(n, j1);
    let (a2, b2) = ends(n, j2);
    interval(a + a2 - 1, n as isize - b as isize - b2 as isize)
}

fn type_b(n: usize, j1: SubsetJ, j2: SubsetJ) -> SubsetJ {
    let (a, b) = ends(n, j1);
    let (a2, b2) = ends(n, j2);
    let lo = a + a2 - 1;
    match (b, b2) {
        (0, 0) => interval(lo, n as isize),
        (0, b2) => interval(lo, n as isize - b2 as isize - a as isize + 1),
        (b, 0) => interval(lo, n as isize - b as isize - a2 as isize + 1),
        _ => SubsetJ::EMPTY,
    }
}

fn type_d(n: usize, j1: SubsetJ, j2: SubsetJ) -> SubsetJ {
    let full = SubsetJ::full(n);
    let fork = SubsetJ::singleton(n - 1).with(n);
    let minus_n1 = full.without(n - 1);
    let minus_n = full.without(n);
    let odd = n % 2 == 1;

    let is_fork_complement = |j: SubsetJ| j == minus_n1 || j == minus_n;
    if is_fork_complement(j1) && is_fork_complement(j2) {
        // parity sets {s, s + 2, ..., up to hi}
        let steps = |start: usize, hi: usize| (start..=hi).step_by(2).fold(SubsetJ::EMPTY, SubsetJ::with);
        return match (j1 == minus_n, j2 == minus_n) {
            (true, true) => steps(if odd { 2 } else { 1 }, n - 1),
            (false, false) => steps(if odd { 2 } else { 1 }, n - 3).with(n),
            _ => steps(if odd { 1 } else { 2 }, n - 2),
        };
    }

    let (j1, j2) = match (fork.is_subset(j1), fork.is_subset(j2)) {
        (false, false) => return SubsetJ::EMPTY,
        (false, true) => (j2, j1),
        _ => (j1, j2),
    };
    let a = j1.min().expect("nonempty");
    if fork.is_subset(j2) {
        let a2 = j2.min().expect("nonempty");
        let lo = a + a2 - 1;
        // {n} alone is not of the form {lo..n} with lo <= n - 1
        return if lo < n { interval(lo, n as isize) } else { SubsetJ::EMPTY };
    }
    let j2 = if j2.contains(n) { swap_leaves(n, j2) } else { j2 };
    let (a2, b2) = ends(n, j2);
    interval(a + a2 - 1, n as isize - b2 as isize - a as isize + 1)
}

fn swap_leaves(n: usize, j: SubsetJ) -> SubsetJ {
    j.map(|k| match k {
        k if k == n => n - 1,
        k if k == n - 1 => n,
        k => k,
    })
}

fn type_e6(j1: SubsetJ, j2: SubsetJ) -> SubsetJ {
    let all = SubsetJ::full(6);
    let minus = |ks: &[usize]| ks.iter().fold(all, |j, &k| j.without(k));
    let set = |ks: &[usize]| ks.iter().fold(SubsetJ::EMPTY, |j, &k| j.with(k));
    match (j1.contains(2), j2.contains(2)) {
        (false, false) => SubsetJ::EMPTY,
        (true, false) | (false, true) => {
            let (p, q) = if j1.contains(2) { (j1, j2) } else { (j2, j1) };
            if q != minus(&[2]) {
                SubsetJ::EMPTY
            } else if p == minus(&[1]) {
                set(&[4, 6])
            } else if p == minus(&[6]) {
                set(&[1, 4])
            } else {
                SubsetJ::EMPTY
            }
        }
        (true, true) => lookup(
            j1,
            j2,
            &[
                (minus(&[1]), minus(&[1]), set(&[2, 4, 5])),
                (minus(&[6]), minus(&[6]), set(&[2, 3, 4])),
                (minus(&[1]), minus(&[6]), set(&[3, 4, 5])),
                (minus(&[1]), minus(&[1, 6]), set(&[4])),
                (minus(&[6]), minus(&[1, 6]), set(&[4])),
            ],
        ),
    }
}

fn type_e7(j1: SubsetJ, j2: SubsetJ) -> SubsetJ {
    let all = SubsetJ::full(7);
    let minus = |ks: &[usize]| ks.iter().fold(all, |j, &k| j.without(k));
    let set = |ks: &[usize]| ks.iter().fold(SubsetJ::EMPTY, |j, &k| j.with(k));
    lookup(
        j1,
        j2,
        &[
            (minus(&[1]), minus(&[1]), set(&[2, 5, 7])),
            (minus(&[7]), minus(&[7]), set(&[2, 3, 4, 5])),
            (minus(&[1]), minus(&[7]), set(&[3, 4, 5])),
            (minus(&[7]), minus(&[1, 7]), set(&[4])),
            (minus(&[7]), minus(&[6, 7]), set(&[4])),
        ],
    )
}

fn type_e8(j1: SubsetJ, j2: SubsetJ) -> SubsetJ {
    let minus8 = SubsetJ::full(8).without(8);
    lookup(j1, j2, &[(minus8, minus8, SubsetJ::interval(2, 5))])
}

/// Finds the unordered pair `{j1, j2}` in `cases`; empty if absent.
fn lookup(j1: SubsetJ, j2: SubsetJ, cases: &[(SubsetJ, SubsetJ, SubsetJ)]) -> SubsetJ {
    cases
        .iter()
        .find(|(p, q, _)| (*p == j1 && *q == j2) || (*p == j2 && *q == j1))
        .map(|&(_, _, r)| r)
        .unwrap_or(SubsetJ::EMPTY)
}

fn interval(lo: usize, hi: isize) -> SubsetJ {
    if hi < lo as isize {
        SubsetJ::EMPTY
    } else {
        SubsetJ::interval(lo, hi as usize)
    }
}
