//! The commutative monoid `⋆_I` on subsets of the node set.
//!
//! `J1 ⋆ J2` is the `J3` with `(w_0^{J1} w_0) * (w_0^{J2} w_0) = w_0^{J3} w_0`.
//! It is computed through the downward action:
//! `(w_0^{J1} w_0) |> w_0^{J2} = w_0^{J3}`.
//!
//! Besides the direct computation this module has two independent routes to
//! the same table: the closed forms in [`closed_form`] and the induction on
//! the rank in [`inductive`].

use std::sync::{Arc, OnceLock};

use crate::demazure::{self, down_word, star_word};
use crate::element::{CoxeterGroup, Element, Word};
use crate::error::{Error, Result};
use crate::subset::SubsetJ;

pub mod closed_form;
pub mod inductive;
pub mod table;
pub mod verify;

pub use closed_form::{closed_form, closed_form_with, Pairing};
pub use inductive::star_sets_inductive;
pub use table::{full_table, StarTable, DEFAULT_RANK_BOUND};
pub use verify::{verify, CheckKind, Checks, Failure, VerificationReport};

/// Largest rank for which a [`FaceContext`] may be built.
pub const MAX_CONTEXT_RANK: usize = 16;

/// Returns `J` if `z` is the longest element `w_0^J` of a parabolic subgroup.
pub fn recognize_w0j(z: &Element) -> Result<SubsetJ> {
    let j = z.left_descents();
    let w0j = demazure::longest(z.group(), j)?;
    if *z == w0j && z.support() == j {
        Ok(j)
    } else {
        Err(Error::NotALongestElement { descents: j })
    }
}

/// `J1 ⋆_I J2`, computed as the parabolic recognized from
/// `(w_0^{J1} w_0^I) |> w_0^{J2}`.
pub fn star_sets(group: &Arc<CoxeterGroup>, j1: SubsetJ, j2: SubsetJ) -> Result<SubsetJ> {
    let x = demazure::w0j_w0i(group, j1)?;
    let y = demazure::longest(group, j2)?;
    recognize_w0j(&demazure::down(&x, &y)?)
}

/// Per-group cache of `w_0^J` and of reduced words of `w_0^J w_0^I`, shared by
/// table generation, verification and the inductive route.
pub struct FaceContext {
    group: Arc<CoxeterGroup>,
    longest: Vec<OnceLock<Element>>,
    top_words: Vec<OnceLock<Word>>,
}

impl FaceContext {
    pub fn new(group: &Arc<CoxeterGroup>) -> Result<Self> {
        let rank = group.rank();
        if rank > MAX_CONTEXT_RANK {
            return Err(Error::RankBoundExceeded { rank, bound: MAX_CONTEXT_RANK });
        }
        let size = 1usize << rank;
        Ok(FaceContext {
            group: Arc::clone(group),
            longest: (0..size).map(|_| OnceLock::new()).collect(),
            top_words: (0..size).map(|_| OnceLock::new()).collect(),
        })
    }

    pub fn group(&self) -> &Arc<CoxeterGroup> {
        &self.group
    }

    pub fn full(&self) -> SubsetJ {
        self.group.diagram().nodes()
    }

    pub fn longest(&self, j: SubsetJ) -> &Element {
        self.longest[j.bits() as usize]
            .get_or_init(|| demazure::longest(&self.group, j).expect("subset of the node set"))
    }

    /// `w_0^J w_0^K` for `J ⊆ K`.
    pub fn w0j_w0k(&self, j: SubsetJ, k: SubsetJ) -> Element {
        self.longest(j) * self.longest(k)
    }

    /// A reduced word of `w_0^J w_0^I`.
    pub fn top_word(&self, j: SubsetJ) -> &Word {
        self.top_words[j.bits() as usize].get_or_init(|| self.w0j_w0k(j, self.full()).canonical_word())
    }

    /// Recognizes `w_0^J` using the cache (the support check is implied by equality).
    pub fn recognize(&self, z: &Element) -> Result<SubsetJ> {
        let j = z.left_descents();
        if z == self.longest(j) {
            Ok(j)
        } else {
            Err(Error::NotALongestElement { descents: j })
        }
    }

    /// `(w_0^{J1} w_0^K) |> w_0^{J2}` inside the parabolic subgroup `W_K`.
    pub fn down_in(&self, k: SubsetJ, j1: SubsetJ, j2: SubsetJ) -> Element {
        let word = if k == self.full() {
            self.top_word(j1).clone()
        } else {
            self.w0j_w0k(j1, k).canonical_word()
        };
        down_word(word.letters(), self.longest(j2))
    }

    /// `J1 ⋆_K J2` for `J1, J2 ⊆ K`, via the downward action.
    pub fn star_sets_in(&self, k: SubsetJ, j1: SubsetJ, j2: SubsetJ) -> Result<SubsetJ> {
        self.recognize(&self.down_in(k, j1, j2))
    }

    /// `J1 ⋆_I J2` via the downward action.
    pub fn star_sets(&self, j1: SubsetJ, j2: SubsetJ) -> Result<SubsetJ> {
        self.star_sets_in(self.full(), j1, j2)
    }

    /// `(w_0^{J1} w_0^I) * (w_0^{J2} w_0^I)`, the Demazure-product side of the
    /// definition.
    pub fn star_form(&self, j1: SubsetJ, j2: SubsetJ) -> Element {
        star_word(self.top_word(j1).letters(), &self.w0j_w0k(j2, self.full()))
    }
}
