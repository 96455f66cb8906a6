use std::sync::Arc;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use super::{closed_form, FaceContext};
use crate::diagram::CoxeterDiagram;
use crate::element::CoxeterGroup;
use crate::error::{Error, Result};
use crate::subset::SubsetJ;

/// Tables are only built up to this rank unless overridden.
pub const DEFAULT_RANK_BOUND: usize = 9;

/// Environment variable overriding [`DEFAULT_RANK_BOUND`].
pub const RANK_BOUND_VAR: &str = "COXSTAR_RANK_BOUND";

pub fn rank_bound_from_env() -> usize {
    std::env::var(RANK_BOUND_VAR)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_RANK_BOUND)
}

/// Per-entry verification flags.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EntryStatus {
    /// The downward action produced a longest parabolic element.
    pub closure: bool,
    /// `J1 ⋆ J2 == J2 ⋆ J1`, both computed.
    pub commutative: bool,
    /// `J1 ⋆ J2 ⊆ J1 ∩ J2`.
    pub containment: bool,
    /// The Demazure-product form `(w_0^{J1} w_0) * (w_0^{J2} w_0)` equals `w_0^{J3} w_0`.
    pub star_form: bool,
    /// Agrees with [`closed_form`]; `None` when not checked.
    pub closed_form: Option<bool>,
}

/// Table-wide flags: each is the conjunction over all entries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct TableFlags {
    pub closure: bool,
    pub commutative: bool,
    pub containment: bool,
    pub closed_form_match: bool,
}

/// The full map `(J1, J2) -> J1 ⋆ J2` for one diagram.
#[derive(Debug, Clone)]
pub struct StarTable {
    diagram: CoxeterDiagram,
    /// Indexed by `j1.bits() << rank | j2.bits()`.
    entries: Vec<SubsetJ>,
    status: Vec<EntryStatus>,
}

impl StarTable {
    pub(crate) fn from_parts(diagram: CoxeterDiagram, entries: Vec<SubsetJ>, status: Vec<EntryStatus>) -> Self {
        debug_assert_eq!(entries.len(), 1 << (2 * diagram.rank()));
        StarTable { diagram, entries, status }
    }

    pub fn diagram(&self) -> &CoxeterDiagram {
        &self.diagram
    }

    pub fn rank(&self) -> usize {
        self.diagram.rank()
    }

    fn slot(&self, j1: SubsetJ, j2: SubsetJ) -> usize {
        ((j1.bits() << self.rank()) | j2.bits()) as usize
    }

    pub fn entry(&self, j1: SubsetJ, j2: SubsetJ) -> SubsetJ {
        self.entries[self.slot(j1, j2)]
    }

    pub fn status(&self, j1: SubsetJ, j2: SubsetJ) -> EntryStatus {
        self.status[self.slot(j1, j2)]
    }

    /// All `(J1, J2, J1 ⋆ J2)`, ordered by `(J1 bits, J2 bits)`.
    pub fn entries(&self) -> impl Iterator<Item = (SubsetJ, SubsetJ, SubsetJ)> + '_ {
        let rank = self.rank();
        self.entries.iter().enumerate().map(move |(slot, &star)| {
            let slot = slot as u64;
            (SubsetJ::from_bits(slot >> rank), SubsetJ::from_bits(slot & ((1 << rank) - 1)), star)
        })
    }

    pub fn flags(&self) -> TableFlags {
        let all = |f: fn(&EntryStatus) -> bool| self.status.iter().all(f);
        TableFlags {
            closure: all(|s| s.closure),
            commutative: all(|s| s.commutative),
            containment: all(|s| s.containment),
            closed_form_match: all(|s| s.closed_form != Some(false)),
        }
    }
}

/// Values computed for one unordered pair.
struct PairResult {
    j1: SubsetJ,
    j2: SubsetJ,
    forward: std::result::Result<SubsetJ, SubsetJ>,
    backward: std::result::Result<SubsetJ, SubsetJ>,
    star_form: bool,
}

fn compute_pair(ctx: &FaceContext, j1: SubsetJ, j2: SubsetJ) -> PairResult {
    let full = ctx.full();
    let recognize = |a: SubsetJ, b: SubsetJ| {
        let z = ctx.down_in(full, a, b);
        ctx.recognize(&z).map_err(|_| z.left_descents())
    };
    let forward = recognize(j1, j2);
    let backward = if j1 == j2 { forward } else { recognize(j2, j1) };
    let star_form = match forward {
        Ok(j3) => ctx.star_form(j1, j2) == ctx.w0j_w0k(j3, full),
        Err(_) => false,
    };
    PairResult { j1, j2, forward, backward, star_form }
}

/// Computes `J1 ⋆ J2` for all pairs of subsets, with per-entry checks.
/// `check_closed_form` toggles the comparison against [`closed_form`].
pub fn full_table_with(group: &Arc<CoxeterGroup>, bound: usize, check_closed_form: bool) -> Result<StarTable> {
    let ctx = FaceContext::new(group)?;
    build(&ctx, bound, check_closed_form)
}

/// [`full_table_with`] including the closed-form comparison.
pub fn full_table(group: &Arc<CoxeterGroup>, bound: usize) -> Result<StarTable> {
    full_table_with(group, bound, true)
}

pub(crate) fn build(ctx: &FaceContext, bound: usize, check_closed_form: bool) -> Result<StarTable> {
    let diagram = ctx.group().diagram().clone();
    let rank = diagram.rank();
    if rank > bound {
        return Err(Error::RankBoundExceeded { rank, bound });
    }
    let n_subsets = 1u64 << rank;
    let row = |a: u64| -> Vec<PairResult> {
        (a..n_subsets)
            .map(|b| compute_pair(ctx, SubsetJ::from_bits(a), SubsetJ::from_bits(b)))
            .collect()
    };
    #[cfg(feature = "parallel")]
    let rows: Vec<Vec<PairResult>> = (0..n_subsets).into_par_iter().map(row).collect();
    #[cfg(not(feature = "parallel"))]
    let rows: Vec<Vec<PairResult>> = (0..n_subsets).map(row).collect();

    let size = 1usize << (2 * rank);
    let mut entries = vec![SubsetJ::EMPTY; size];
    let placeholder = EntryStatus {
        closure: false,
        commutative: false,
        containment: false,
        star_form: false,
        closed_form: None,
    };
    let mut status = vec![placeholder; size];
    for p in rows.into_iter().flatten() {
        let value = |r: std::result::Result<SubsetJ, SubsetJ>| match r {
            Ok(j) | Err(j) => j,
        };
        let commutative = p.forward.is_ok() && p.forward == p.backward;
        for (a, b, r) in [(p.j1, p.j2, p.forward), (p.j2, p.j1, p.backward)] {
            let slot = ((a.bits() << rank) | b.bits()) as usize;
            let j3 = value(r);
            entries[slot] = j3;
            status[slot] = EntryStatus {
                closure: r.is_ok(),
                commutative,
                containment: j3.is_subset(a.intersection(b)),
                star_form: p.star_form,
                closed_form: check_closed_form.then(|| closed_form(&diagram, a, b) == j3),
            };
        }
    }
    Ok(StarTable::from_parts(diagram, entries, status))
}
