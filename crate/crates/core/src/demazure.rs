//! The Demazure product `x * y` and the downward action `x |> y`.
//!
//! Both fold a reduced word `i_1 ... i_k` of `x` onto `y` from the right:
//! `z <- y`, then for `j = k, ..., 1`
//!
//! * star: `z <- max(z, s_{i_j} z)`
//! * down: `z <- min(z, s_{i_j} z)`
//!
//! where max/min compare lengths (the two candidates always differ by one).
//! The result does not depend on which reduced word of `x` is used.

use std::sync::Arc;

use crate::element::{CoxeterGroup, Element};
use crate::error::Result;
use crate::subset::SubsetJ;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Direction {
    Up,
    Down,
}

/// Folds `word` right-to-left onto `y`. Works on `y^-1` so that the descent
/// test is a single lookup: `s_i z > z` iff `i` is not a right descent of `z^-1`.
fn fold(word: &[usize], y: &Element, dir: Direction) -> Element {
    let mut inv = y.inverse();
    for &i in word.iter().rev() {
        let descent = inv.is_right_descent(i);
        let step = match dir {
            Direction::Up => !descent,
            Direction::Down => descent,
        };
        if step {
            inv = inv.right_mul_gen(i);
        }
    }
    inv.inverse()
}

/// The Demazure product `x * y`.
pub fn star(x: &Element, y: &Element) -> Result<Element> {
    x.mul(y)?;
    Ok(fold(x.canonical_word().letters(), y, Direction::Up))
}

/// `x * y` given any reduced word of `x`.
pub fn star_word(x_word: &[usize], y: &Element) -> Element {
    fold(x_word, y, Direction::Up)
}

/// `x * y` folded the other way: `z <- x`, then `z <- max(z, z s_j)` along a
/// reduced word of `y` read left to right.
pub fn star_right_fold(x: &Element, y: &Element) -> Result<Element> {
    x.mul(y)?;
    let mut z = x.clone();
    for &j in y.canonical_word().letters() {
        if !z.is_right_descent(j) {
            z = z.right_mul_gen(j);
        }
    }
    Ok(z)
}

/// The downward action `x |> y`: the minimum of `{u y : u <= x}`.
pub fn down(x: &Element, y: &Element) -> Result<Element> {
    x.mul(y)?;
    Ok(fold(x.canonical_word().letters(), y, Direction::Down))
}

/// `x |> y` given any reduced word of `x`.
pub fn down_word(x_word: &[usize], y: &Element) -> Element {
    fold(x_word, y, Direction::Down)
}

/// Longest element `w_0^J` of the parabolic subgroup generated by `J`.
pub fn longest(group: &Arc<CoxeterGroup>, j: SubsetJ) -> Result<Element> {
    group.diagram().check_subset(j)?;
    // Grow z by s_j z while some j in J is not yet a left descent; on the
    // inverse that is z^-1 s_j while j is not a right descent.
    let mut inv = group.identity();
    while let Some(i) = j.iter().find(|&i| !inv.is_right_descent(i)) {
        inv = inv.right_mul_gen(i);
    }
    Ok(inv.inverse())
}

/// `w_0^J w_0^I`, of length `l(w_0^I) - l(w_0^J)`.
pub fn w0j_w0i(group: &Arc<CoxeterGroup>, j: SubsetJ) -> Result<Element> {
    let w0j = longest(group, j)?;
    let w0 = longest(group, group.diagram().nodes())?;
    w0j.mul(&w0)
}

/// `w_0^J w_0^K` for `J ⊆ K`: the relative version used inside parabolic subgroups.
pub fn w0j_w0k(group: &Arc<CoxeterGroup>, j: SubsetJ, k: SubsetJ) -> Result<Element> {
    longest(group, j)?.mul(&longest(group, k)?)
}
