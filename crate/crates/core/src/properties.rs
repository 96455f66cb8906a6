//! Property suites for `*` and `|>`.
//!
//! Element-level properties run exhaustively over an enumerated group (Bruhat
//! order from subword intervals) or on seeded random samples (Bruhat order from
//! [`Element::bruhat_leq`]). Comparable pairs for sampling are drawn as random
//! subwords of a reduced word, which always lie below the word's element.
//!
//! Face-level identities for `w_0^{J1} w_0` run over all subsets.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::demazure::{down, down_word, star, star_right_fold};
use crate::element::{CoxeterGroup, Element};
use crate::error::Result;
use crate::facemonoid::FaceContext;
use crate::oracle::GroupEnumeration;
use crate::subset::SubsetJ;

/// Groups up to this order are checked exhaustively by [`suite`].
pub const EXHAUSTIVE_ORDER: u128 = 200;
/// Face-level identities are included in [`suite`] up to this rank.
pub const FACE_RANK_LIMIT: usize = 6;

const KEPT_EXAMPLES: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct PropertyResult {
    pub name: &'static str,
    pub exhaustive: bool,
    pub cases: u64,
    pub failed: u64,
    /// The first few violations.
    pub violations: Vec<String>,
}

impl PropertyResult {
    fn new(name: &'static str, exhaustive: bool) -> Self {
        PropertyResult { name, exhaustive, cases: 0, failed: 0, violations: Vec::new() }
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failed += 1;
            if self.violations.len() < KEPT_EXAMPLES {
                self.violations.push(describe());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

pub const MONOTONE_PRODUCT: &str = "monotone product";
pub const PRODUCT_WITNESS: &str = "product witnesses";
pub const ANTITONE_ACTION: &str = "antitone action";
pub const LEFT_ACTION: &str = "left action";
pub const ACTION_VS_PRODUCT: &str = "action vs product";
pub const COMMUTING_SPLIT: &str = "commuting split";
pub const RESTRICTION: &str = "restriction";
pub const BOUNDS: &str = "bruhat bounds";
pub const FOLD_ORDER: &str = "fold order";
pub const MONOID: &str = "monoid laws";

/// `*` and `|>` on every pair, indexed like the enumeration.
pub struct ProductTables {
    n: usize,
    star: Vec<u32>,
    down: Vec<u32>,
}

impl ProductTables {
    pub fn new(en: &GroupEnumeration) -> Result<Self> {
        let n = en.len();
        let mut s = vec![0u32; n * n];
        let mut d = vec![0u32; n * n];
        for (i, x) in en.elements().iter().enumerate() {
            for (j, y) in en.elements().iter().enumerate() {
                s[i * n + j] = en.index_of(&star(x, y)?) as u32;
                d[i * n + j] = en.index_of(&down(x, y)?) as u32;
            }
        }
        Ok(ProductTables { n, star: s, down: d })
    }

    pub fn star(&self, x: usize, y: usize) -> usize {
        self.star[x * self.n + y] as usize
    }

    pub fn down(&self, x: usize, y: usize) -> usize {
        self.down[x * self.n + y] as usize
    }
}

/// Every element-level property, exhaustively.
pub fn exhaustive(en: &GroupEnumeration) -> Result<Vec<PropertyResult>> {
    let t = ProductTables::new(en)?;
    let n = en.len();
    let name = |k: usize| en.element(k).to_string();
    let w0 = en.index_of(&en.group().longest_element());

    let mut monotone = PropertyResult::new(MONOTONE_PRODUCT, true);
    let mut antitone = PropertyResult::new(ANTITONE_ACTION, true);
    for x in 0..n {
        for y in 0..n {
            let top = t.star(x, y);
            for xs in en.below(x).ones() {
                for ys in en.below(y).ones() {
                    // x' <= x, y' <= y
                    monotone.record(en.leq(t.star(xs, ys), top), || {
                        format!("x'={} x={} y'={} y={}", name(xs), name(x), name(ys), name(y))
                    });
                    // here x plays x' >= xs
                    antitone.record(en.leq(t.down(x, ys), t.down(xs, y)), || {
                        format!("x'={} x={} y'={} y={}", name(x), name(xs), name(ys), name(y))
                    });
                }
            }
        }
    }

    let mut witness = PropertyResult::new(PRODUCT_WITNESS, true);
    let mut vs_product = PropertyResult::new(ACTION_VS_PRODUCT, true);
    let mut bounds = PropertyResult::new(BOUNDS, true);
    let mut fold = PropertyResult::new(FOLD_ORDER, true);
    for x in 0..n {
        for y in 0..n {
            let (xe, ye) = (en.element(x), en.element(y));
            let p = t.star(x, y);
            let pe = en.element(p);
            let u = en.index_of(&(pe * &ye.inverse()));
            let v = en.index_of(&(&xe.inverse() * pe));
            witness.record(
                en.leq(u, x) && en.leq(v, y) && en.depth(p) == en.depth(u) + en.depth(y) && en.depth(p) == en.depth(x) + en.depth(v),
                || format!("x={} y={}", name(x), name(y)),
            );
            vs_product.record(en.mul(t.down(x, y), w0) == t.star(x, en.mul(y, w0)), || format!("x={} y={}", name(x), name(y)));
            bounds.record(en.leq(x, p) && en.leq(y, p) && en.leq(t.down(x, y), y), || format!("x={} y={}", name(x), name(y)));
            fold.record(star_right_fold(xe, ye)? == *pe, || format!("x={} y={}", name(x), name(y)));
        }
    }

    let mut left_act = PropertyResult::new(LEFT_ACTION, true);
    let mut monoid = PropertyResult::new(MONOID, true);
    for x in 0..n {
        monoid.record(t.star(x, 0) == x && t.star(0, x) == x, || format!("unit on {}", name(x)));
        for y in 0..n {
            let xy = t.star(x, y);
            for z in 0..n {
                left_act.record(t.down(xy, z) == t.down(x, t.down(y, z)), || {
                    format!("x={} y={} z={}", name(x), name(y), name(z))
                });
                monoid.record(t.star(xy, z) == t.star(x, t.star(y, z)), || {
                    format!("x={} y={} z={}", name(x), name(y), name(z))
                });
            }
        }
    }
    Ok(vec![witness, monotone, antitone, left_act, vs_product, bounds, fold, monoid])
}

/// A uniformly random word of length up to `2 * l(w_0)`, evaluated.
pub fn random_element(group: &Arc<CoxeterGroup>, rng: &mut impl Rng) -> Element {
    let rank = group.rank();
    let max_len = 2 * group.n_reflections();
    let len = rng.gen_range(0..=max_len);
    let word: Vec<usize> = (0..len).map(|_| rng.gen_range(1..=rank)).collect();
    group.from_word(&word).expect("labels in range")
}

/// A random subword of a reduced word of `w`; always Bruhat-below `w`.
pub fn random_below(w: &Element, rng: &mut impl Rng) -> Element {
    let word: Vec<usize> = w.canonical_word().0.into_iter().filter(|_| rng.gen_bool(0.5)).collect();
    w.group().from_word(&word).expect("labels in range")
}

/// Every element-level property on `samples` random instances each.
pub fn sampled(group: &Arc<CoxeterGroup>, samples: usize, seed: u64) -> Result<Vec<PropertyResult>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rng = &mut rng;
    let w0 = group.longest_element();
    let leq = |a: &Element, b: &Element| a.bruhat_leq(b);

    let mut witness = PropertyResult::new(PRODUCT_WITNESS, false);
    let mut monotone = PropertyResult::new(MONOTONE_PRODUCT, false);
    let mut antitone = PropertyResult::new(ANTITONE_ACTION, false);
    let mut left_act = PropertyResult::new(LEFT_ACTION, false);
    let mut vs_product = PropertyResult::new(ACTION_VS_PRODUCT, false);
    let mut bounds = PropertyResult::new(BOUNDS, false);
    let mut fold = PropertyResult::new(FOLD_ORDER, false);
    let mut monoid = PropertyResult::new(MONOID, false);

    for _ in 0..samples {
        let x = random_element(group, rng);
        let y = random_element(group, rng);
        let z = random_element(group, rng);
        let xs = random_below(&x, rng);
        let ys = random_below(&y, rng);
        let pair = || format!("x={x} y={y}");

        let p = star(&x, &y)?;
        let u = &p * &y.inverse();
        let v = &x.inverse() * &p;
        witness.record(leq(&u, &x)? && leq(&v, &y)? && p.len() == u.len() + y.len() && p.len() == x.len() + v.len(), pair);

        monotone.record(leq(&star(&xs, &ys)?, &p)?, || format!("x'={xs} x={x} y'={ys} y={y}"));
        // x >= xs plays x' in the antitone statement.
        antitone.record(leq(&down(&x, &ys)?, &down(&xs, &y)?)?, || format!("x'={x} x={xs} y'={ys} y={y}"));
        left_act.record(down(&p, &z)? == down(&x, &down(&y, &z)?)?, || format!("x={x} y={y} z={z}"));
        vs_product.record(&down(&x, &y)? * &w0 == star(&x, &(&y * &w0))?, pair);
        bounds.record(leq(&x, &p)? && leq(&y, &p)? && leq(&down(&x, &y)?, &y)?, pair);
        fold.record(star_right_fold(&x, &y)? == p, pair);
        monoid.record(star(&p, &z)? == star(&x, &star(&y, &z)?)?, || format!("x={x} y={y} z={z}"));
    }
    let identity = group.identity();
    monoid.record(star(&w0, &identity)? == w0 && star(&identity, &w0)? == w0, || "unit on w0".into());
    Ok(vec![witness, monotone, antitone, left_act, vs_product, bounds, fold, monoid])
}

/// `(w_0^{J1} w_0) |> w_0^{K ⊔ K'}` against the product of the two halves, for
/// every `J1` and every split of every `J2` into mutually commuting parts.
pub fn commuting_split(ctx: &FaceContext) -> PropertyResult {
    let mut r = PropertyResult::new(COMMUTING_SPLIT, true);
    let diagram = ctx.group().diagram();
    let full = ctx.full();
    for j2 in full.subsets() {
        let parts = diagram.components_of(j2);
        for mask in 0u32..(1 << parts.len()) {
            let k = parts
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .fold(SubsetJ::EMPTY, |acc, (_, &c)| acc.union(c));
            let kp = j2.difference(k);
            for j1 in full.subsets() {
                let whole = ctx.down_in(full, j1, j2);
                let split = &ctx.down_in(full, j1, k) * &ctx.down_in(full, j1, kp);
                r.record(whole == split, || format!("J1={j1} K={k} K'={kp}"));
            }
        }
    }
    r
}

/// `(w_0^{J1} w_0) |> w_0^{J2} = (w_0^{J1} w_0^{J1'}) |> ((w_0^{J1'} w_0) |> w_0^{J2})`
/// for every `J1 ⊆ J1'` and every `J2`.
pub fn restriction(ctx: &FaceContext) -> PropertyResult {
    let mut r = PropertyResult::new(RESTRICTION, true);
    let full = ctx.full();
    for j1p in full.subsets() {
        for j1 in j1p.subsets() {
            let inner_word = ctx.w0j_w0k(j1, j1p).canonical_word();
            for j2 in full.subsets() {
                let lhs = ctx.down_in(full, j1, j2);
                let rhs = down_word(inner_word.letters(), &ctx.down_in(full, j1p, j2));
                r.record(lhs == rhs, || format!("J1={j1} J1'={j1p} J2={j2}"));
            }
        }
    }
    r
}

/// The suite run by verification: exhaustive for small groups, sampled
/// otherwise, plus the face-level identities for small ranks.
pub fn suite(group: &Arc<CoxeterGroup>, samples: usize, seed: u64) -> Result<Vec<PropertyResult>> {
    let order = group.diagram().group_order().unwrap_or(u128::MAX);
    let mut out = if order <= EXHAUSTIVE_ORDER {
        exhaustive(&GroupEnumeration::new(group, EXHAUSTIVE_ORDER)?)?
    } else {
        sampled(group, samples, seed)?
    };
    if group.rank() <= FACE_RANK_LIMIT {
        let ctx = FaceContext::new(group)?;
        out.push(commuting_split(&ctx));
        out.push(restriction(&ctx));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::DEFAULT_GUARD;

    fn assert_clean(results: &[PropertyResult]) {
        for r in results {
            assert!(r.passed(), "{}: {:?}", r.name, r.violations);
            assert!(r.cases > 0, "{}", r.name);
        }
    }

    #[test]
    fn exhaustive_small() {
        for t in ["A2", "B2", "I2(5)", "A1xA1"] {
            let en = GroupEnumeration::new(&CoxeterGroup::parse(t).unwrap(), DEFAULT_GUARD).unwrap();
            assert_clean(&exhaustive(&en).unwrap());
        }
    }

    #[test]
    fn sampled_small() {
        assert_clean(&sampled(&CoxeterGroup::parse("D5").unwrap(), 200, 7).unwrap());
    }

    #[test]
    fn random_below_is_below() {
        let g = CoxeterGroup::parse("F4").unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..200 {
            let w = random_element(&g, &mut rng);
            let u = random_below(&w, &mut rng);
            assert!(u.bruhat_leq(&w).unwrap());
        }
    }

    #[test]
    fn face_identities_on_a3() {
        let g = CoxeterGroup::parse("A3").unwrap();
        let ctx = FaceContext::new(&g).unwrap();
        assert_clean(&[commuting_split(&ctx), restriction(&ctx)]);
    }
}
