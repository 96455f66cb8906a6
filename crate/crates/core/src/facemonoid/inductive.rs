//! `J1 ⋆ J2` by induction on the rank.
//!
//! Inside a parabolic subgroup `W_K` (starting from `K = I`):
//!
//! 1. `J1 = K` or `J2 = K` is the unit, an empty argument is absorbing.
//! 2. A reducible `K` splits into its irreducible components.
//! 3. A disconnected `J2` splits into connected components whose results are
//!    united; a disconnected `J1` is moved to the right by commutativity.
//! 4. For connected proper `J1`, `J2`, pick leaves `i ∉ J1`, `i' ∉ J2` of `K`,
//!    put `J1' = K - {i}`, `J2' = K - {i'}` and compute the leaf pair
//!    `J3 = J2' ⋆_K J1'` directly. Then
//!    `J4 = J2 ⋆_{J2'} J3` (which equals `J1' ⋆_K J2`) and the answer is
//!    `J1 ⋆_{J1'} J4`, both by recursion in the smaller subgroups.
//!
//! Only the leaf pairs touch group elements; everything else is set
//! bookkeeping. The result is compared against the direct computation.

use std::collections::HashMap;
use std::sync::Arc;

use super::FaceContext;
use crate::element::CoxeterGroup;
use crate::error::{Error, Result};
use crate::subset::SubsetJ;

/// Memoized evaluator for the induction, tied to one [`FaceContext`].
pub struct Inductive<'a> {
    ctx: &'a FaceContext,
    memo: HashMap<(u64, u64, u64), SubsetJ>,
    /// Number of leaf-pair evaluations done with group elements.
    pub base_cases: usize,
}

impl<'a> Inductive<'a> {
    pub fn new(ctx: &'a FaceContext) -> Self {
        Inductive { ctx, memo: HashMap::new(), base_cases: 0 }
    }

    /// `J1 ⋆_I J2` by induction only.
    pub fn star_sets(&mut self, j1: SubsetJ, j2: SubsetJ) -> Result<SubsetJ> {
        self.eval(self.ctx.full(), j1, j2)
    }

    /// `J1 ⋆_K J2` by induction, compared with the direct route. A
    /// disagreement is reported as [`Error::InternalMismatch`].
    pub fn checked(&mut self, j1: SubsetJ, j2: SubsetJ) -> Result<SubsetJ> {
        let inductive = self.star_sets(j1, j2)?;
        let direct = self.ctx.star_sets(j1, j2)?;
        if inductive == direct {
            Ok(inductive)
        } else {
            Err(Error::InternalMismatch { j1, j2, inductive, direct })
        }
    }

    pub fn eval(&mut self, k: SubsetJ, j1: SubsetJ, j2: SubsetJ) -> Result<SubsetJ> {
        debug_assert!(j1.is_subset(k) && j2.is_subset(k));
        if j1 == k {
            return Ok(j2);
        }
        if j2 == k {
            return Ok(j1);
        }
        if j1.is_empty() || j2.is_empty() {
            return Ok(SubsetJ::EMPTY);
        }
        let key = (k.bits(), j1.bits(), j2.bits());
        if let Some(&r) = self.memo.get(&key) {
            return Ok(r);
        }
        let r = self.eval_uncached(k, j1, j2)?;
        self.memo.insert(key, r);
        Ok(r)
    }

    fn eval_uncached(&mut self, k: SubsetJ, j1: SubsetJ, j2: SubsetJ) -> Result<SubsetJ> {
        let diagram = self.ctx.group().diagram();

        let k_parts = diagram.components_of(k);
        if k_parts.len() > 1 {
            let mut out = SubsetJ::EMPTY;
            for c in k_parts {
                out = out.union(self.eval(c, j1.intersection(c), j2.intersection(c))?);
            }
            return Ok(out);
        }

        let j2_parts = diagram.components_of(j2);
        if j2_parts.len() > 1 {
            let mut out = SubsetJ::EMPTY;
            for c in j2_parts {
                out = out.union(self.eval(k, j1, c)?);
            }
            return Ok(out);
        }
        if !diagram.is_connected(j1) {
            return self.eval(k, j2, j1);
        }

        let leaves = diagram.end_points_within(k);
        let leaf_outside = |j: SubsetJ| leaves.difference(j).min().expect("a proper connected subset misses a leaf");
        let j1p = k.without(leaf_outside(j1));
        let j2p = k.without(leaf_outside(j2));

        let j3 = self.leaf_pair(k, j2p, j1p)?;
        let j4 = self.eval(j2p, j2, j3)?;
        self.eval(j1p, j1, j4)
    }

    /// `(w_0^{J2'} w_0^K) |> w_0^{J1'}` computed on elements.
    fn leaf_pair(&mut self, k: SubsetJ, j2p: SubsetJ, j1p: SubsetJ) -> Result<SubsetJ> {
        let key = (k.bits() | 1 << 63, j2p.bits(), j1p.bits());
        if let Some(&r) = self.memo.get(&key) {
            return Ok(r);
        }
        self.base_cases += 1;
        let j3 = self.ctx.star_sets_in(k, j2p, j1p)?;
        debug_assert!(j3.is_subset(j1p.intersection(j2p)));
        self.memo.insert(key, j3);
        Ok(j3)
    }
}

/// `J1 ⋆_I J2` by induction, checked against the direct computation.
pub fn star_sets_inductive(group: &Arc<CoxeterGroup>, j1: SubsetJ, j2: SubsetJ) -> Result<SubsetJ> {
    group.diagram().check_subset(j1)?;
    group.diagram().check_subset(j2)?;
    let ctx = FaceContext::new(group)?;
    Inductive::new(&ctx).checked(j1, j2)
}
