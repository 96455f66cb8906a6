//! Group elements, words, descents and Bruhat order.
//!
//! An element of a root-system group is stored as the permutation it induces
//! on the roots: `perm[k]` is the index of `w(root_k)`. Its length is the
//! number of positive roots sent to negative ones. General dihedral groups
//! `I2(m)` use the normal form (length, first letter) instead.
//!
//! Left descents need a scan of the permutation while right descents are a
//! single lookup, so several algorithms here run on the inverse element and
//! translate `s_i w` into `w^-1 s_i`.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::Mul;
use std::str::FromStr;
use std::sync::Arc;

use crate::diagram::CoxeterDiagram;
use crate::error::{Error, Result};
use crate::rootsys::{RootIndex, RootSystem};
use crate::subset::SubsetJ;

/// A finite Coxeter group ready for computation.
#[derive(Debug)]
pub struct CoxeterGroup {
    diagram: CoxeterDiagram,
    kind: GroupKind,
}

#[derive(Debug)]
enum GroupKind {
    Roots(RootSystem),
    Dihedral(u32),
}

impl CoxeterGroup {
    pub fn new(diagram: CoxeterDiagram) -> Result<Arc<Self>> {
        let kind = match diagram.general_dihedral() {
            Some(m) => GroupKind::Dihedral(m),
            None => GroupKind::Roots(RootSystem::build(&diagram)?),
        };
        Ok(Arc::new(CoxeterGroup { diagram, kind }))
    }

    /// Parses a type such as `"E6"` or `"A2xB3"` and builds its group.
    pub fn parse(text: &str) -> Result<Arc<Self>> {
        CoxeterGroup::new(CoxeterDiagram::parse(text)?)
    }

    pub fn diagram(&self) -> &CoxeterDiagram {
        &self.diagram
    }

    pub fn rank(&self) -> usize {
        self.diagram.rank()
    }

    pub fn root_system(&self) -> Option<&RootSystem> {
        match &self.kind {
            GroupKind::Roots(rs) => Some(rs),
            GroupKind::Dihedral(_) => None,
        }
    }

    /// Number of reflections, which is also the length of the longest element.
    pub fn n_reflections(&self) -> usize {
        match &self.kind {
            GroupKind::Roots(rs) => rs.n_positive(),
            GroupKind::Dihedral(m) => *m as usize,
        }
    }

    pub fn identity(self: &Arc<Self>) -> Element {
        let repr = match &self.kind {
            GroupKind::Roots(rs) => Repr::Perm((0..rs.n_roots() as RootIndex).collect()),
            GroupKind::Dihedral(_) => Repr::Dihedral { first: 0 },
        };
        Element { group: Arc::clone(self), repr, len: 0 }
    }

    /// The simple reflection `s_i`.
    pub fn gen(self: &Arc<Self>, label: usize) -> Result<Element> {
        self.diagram.check_node(label)?;
        Ok(self.identity().right_mul_gen(label))
    }

    /// Product of the generators in `word`, left to right. The word need not be reduced.
    pub fn from_word(self: &Arc<Self>, word: &[usize]) -> Result<Element> {
        for &label in word {
            self.diagram.check_node(label)?;
        }
        Ok(word.iter().fold(self.identity(), |x, &i| x.right_mul_gen(i)))
    }

    pub fn parse_word(self: &Arc<Self>, text: &str) -> Result<Element> {
        let word: Word = text.parse()?;
        self.from_word(&word.0)
    }

    /// The longest element of the whole group.
    pub fn longest_element(self: &Arc<Self>) -> Element {
        crate::demazure::longest(self, self.diagram.nodes()).expect("full node set is valid")
    }

    fn same_as(&self, other: &CoxeterGroup) -> bool {
        std::ptr::eq(self, other) || self.diagram == other.diagram
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum Repr {
    Perm(Box<[RootIndex]>),
    /// `first` is the leftmost letter of the alternating reduced word: 0 for
    /// the identity, 1 for the longest element (both words agree there).
    Dihedral { first: u8 },
}

/// An element of a finite Coxeter group.
#[derive(Clone)]
pub struct Element {
    group: Arc<CoxeterGroup>,
    repr: Repr,
    len: u32,
}

impl Element {
    pub fn group(&self) -> &Arc<CoxeterGroup> {
        &self.group
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_identity(&self) -> bool {
        self.len == 0
    }

    fn check_same(&self, other: &Element) -> Result<()> {
        if self.group.same_as(&other.group) {
            Ok(())
        } else {
            Err(Error::DiagramMismatch {
                left: self.group.diagram.to_string(),
                right: other.group.diagram.to_string(),
            })
        }
    }

    /// The group product `self * other`.
    pub fn mul(&self, other: &Element) -> Result<Element> {
        self.check_same(other)?;
        Ok(self.compose(other))
    }

    fn compose(&self, other: &Element) -> Element {
        match (&self.group.kind, &self.repr, &other.repr) {
            (GroupKind::Roots(rs), Repr::Perm(x), Repr::Perm(y)) => {
                let perm: Box<[RootIndex]> = y.iter().map(|&k| x[k as usize]).collect();
                let len = count_inversions(rs, &perm);
                Element { group: Arc::clone(&self.group), repr: Repr::Perm(perm), len }
            }
            (GroupKind::Dihedral(m), _, _) => {
                let m = *m;
                let (e1, t1) = self.dihedral_affine(m);
                let (e2, t2) = other.dihedral_affine(m);
                let t = if e1 { (m - t2) % m } else { t2 };
                self.with_dihedral_affine(m, e1 ^ e2, (t + t1) % m)
            }
            _ => unreachable!("representation does not match group kind"),
        }
    }

    pub fn inverse(&self) -> Element {
        match (&self.group.kind, &self.repr) {
            (GroupKind::Roots(_), Repr::Perm(x)) => {
                let mut inv = vec![0 as RootIndex; x.len()].into_boxed_slice();
                for (k, &img) in x.iter().enumerate() {
                    inv[img as usize] = k as RootIndex;
                }
                Element { group: Arc::clone(&self.group), repr: Repr::Perm(inv), len: self.len }
            }
            (GroupKind::Dihedral(m), _) => {
                let (refl, t) = self.dihedral_affine(*m);
                // a reflection is its own inverse; a rotation by t inverts to -t
                let t = if refl { t } else { (m - t) % m };
                self.with_dihedral_affine(*m, refl, t)
            }
            _ => unreachable!(),
        }
    }

    /// `s_i * self`.
    pub fn left_mul_gen(&self, label: usize) -> Element {
        let up = !self.is_left_descent(label);
        match (&self.group.kind, &self.repr) {
            (GroupKind::Roots(rs), Repr::Perm(x)) => {
                let table = rs.reflection_table(label);
                let perm = x.iter().map(|&k| table[k as usize]).collect();
                self.with_perm(perm, up)
            }
            (GroupKind::Dihedral(_), _) => {
                let gen = self.group.gen_unchecked(label);
                gen.compose(self)
            }
            _ => unreachable!(),
        }
    }

    /// `self * s_i`.
    pub fn right_mul_gen(&self, label: usize) -> Element {
        match (&self.group.kind, &self.repr) {
            (GroupKind::Roots(rs), Repr::Perm(x)) => {
                let up = !self.is_right_descent(label);
                let table = rs.reflection_table(label);
                let perm = table.iter().map(|&k| x[k as usize]).collect();
                self.with_perm(perm, up)
            }
            (GroupKind::Dihedral(_), _) => self.compose(&self.group.gen_unchecked(label)),
            _ => unreachable!(),
        }
    }

    fn with_perm(&self, perm: Box<[RootIndex]>, up: bool) -> Element {
        let len = if up { self.len + 1 } else { self.len - 1 };
        Element { group: Arc::clone(&self.group), repr: Repr::Perm(perm), len }
    }

    pub fn is_right_descent(&self, label: usize) -> bool {
        match (&self.group.kind, &self.repr) {
            (GroupKind::Roots(rs), Repr::Perm(x)) => !rs.is_positive(x[rs.simple_index(label)] as usize),
            (GroupKind::Dihedral(m), Repr::Dihedral { first }) => match self.len {
                0 => false,
                k if k == *m => true,
                k => {
                    let last = if k % 2 == 1 { *first } else { 3 - *first };
                    last as usize == label
                }
            },
            _ => unreachable!(),
        }
    }

    pub fn is_left_descent(&self, label: usize) -> bool {
        match (&self.group.kind, &self.repr) {
            (GroupKind::Roots(rs), Repr::Perm(x)) => {
                let simple = rs.simple_index(label) as RootIndex;
                let k = x.iter().position(|&img| img == simple).expect("permutation");
                !rs.is_positive(k)
            }
            (GroupKind::Dihedral(m), Repr::Dihedral { first }) => match self.len {
                0 => false,
                k if k == *m => true,
                _ => *first as usize == label,
            },
            _ => unreachable!(),
        }
    }

    pub fn left_descents(&self) -> SubsetJ {
        (1..=self.group.rank())
            .filter(|&i| self.is_left_descent(i))
            .fold(SubsetJ::EMPTY, SubsetJ::with)
    }

    pub fn right_descents(&self) -> SubsetJ {
        (1..=self.group.rank())
            .filter(|&i| self.is_right_descent(i))
            .fold(SubsetJ::EMPTY, SubsetJ::with)
    }

    /// The ShortLex-least reduced word: repeatedly strip the smallest left descent.
    pub fn canonical_word(&self) -> Word {
        let mut inv = self.inverse();
        let mut letters = Vec::with_capacity(self.len());
        while !inv.is_identity() {
            let i = (1..=self.group.rank()).find(|&i| inv.is_right_descent(i)).expect("nonidentity has a descent");
            letters.push(i);
            inv = inv.right_mul_gen(i);
        }
        Word(letters)
    }

    /// Generators appearing in a reduced word.
    pub fn support(&self) -> SubsetJ {
        self.canonical_word().0.into_iter().fold(SubsetJ::EMPTY, SubsetJ::with)
    }

    /// Bruhat order `self <= w`, by the lifting property.
    pub fn bruhat_leq(&self, w: &Element) -> Result<bool> {
        self.check_same(w)?;
        if let GroupKind::Dihedral(_) = self.group.kind {
            return Ok(self == w || self.len < w.len);
        }
        // Run on inverses: left descents of u are right descents of u^-1.
        let mut u = self.inverse();
        let mut w = w.inverse();
        loop {
            if u.len > w.len {
                return Ok(false);
            }
            if w.is_identity() {
                return Ok(u.is_identity());
            }
            let i = (1..=self.group.rank()).find(|&i| w.is_right_descent(i)).expect("descent");
            if u.is_right_descent(i) {
                u = u.right_mul_gen(i);
            }
            w = w.right_mul_gen(i);
        }
    }

    /// Image of root `k` (root-system groups only).
    pub fn act_on_root(&self, k: usize) -> Option<usize> {
        match &self.repr {
            Repr::Perm(x) => Some(x[k] as usize),
            Repr::Dihedral { .. } => None,
        }
    }

    // --- dihedral normal form <-> affine map x -> +-x + t on Z/m ---
    //
    // s1 is x -> -x and s2 is x -> 1 - x, so s2 s1 is the rotation x -> x + 1.

    fn dihedral_affine(&self, m: u32) -> (bool, u32) {
        let Repr::Dihedral { first } = self.repr else { unreachable!() };
        let k = self.len;
        let j = k / 2;
        match (k % 2, first) {
            (_, 0) => (false, 0),
            // (s2 s1)^j or (s1 s2)^j
            (0, 2) => (false, j % m),
            (0, _) => (false, (m - j % m) % m),
            // s1 (s2 s1)^j: x -> -j - x ; s2 (s1 s2)^j: x -> 1 + j - x
            (_, 1) => (true, (m - j % m) % m),
            (_, _) => (true, (1 + j) % m),
        }
    }

    fn with_dihedral_affine(&self, m: u32, refl: bool, t: u32) -> Element {
        let (len, first) = if !refl {
            if t == 0 {
                (0, 0)
            } else if 2 * t < m {
                (2 * t, 2)
            } else if 2 * t > m {
                (2 * (m - t), 1)
            } else {
                (m, 1)
            }
        } else {
            let j1 = (m - t) % m;
            let j2 = (t + m - 1) % m;
            if j1 < j2 {
                (2 * j1 + 1, 1)
            } else if j2 < j1 {
                (2 * j2 + 1, 2)
            } else {
                (m, 1)
            }
        };
        Element { group: Arc::clone(&self.group), repr: Repr::Dihedral { first }, len }
    }
}

impl CoxeterGroup {
    fn gen_unchecked(self: &Arc<Self>, label: usize) -> Element {
        match self.kind {
            GroupKind::Dihedral(_) => Element {
                group: Arc::clone(self),
                repr: Repr::Dihedral { first: label as u8 },
                len: 1,
            },
            GroupKind::Roots(_) => self.identity().right_mul_gen(label),
        }
    }
}

fn count_inversions(rs: &RootSystem, perm: &[RootIndex]) -> u32 {
    let n = rs.n_positive();
    perm[..n].iter().filter(|&&k| k as usize >= n).count() as u32
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        self.len == other.len && self.group.same_as(&other.group) && self.repr == other.repr
    }
}

impl Eq for Element {}

impl Hash for Element {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.repr.hash(state);
    }
}

/// Group product; panics if the operands come from different groups.
impl Mul for &Element {
    type Output = Element;
    fn mul(self, rhs: &Element) -> Element {
        Element::mul(self, rhs).expect("elements of different groups")
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.canonical_word())
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element({}: [{}], len {})", self.group.diagram, self.canonical_word(), self.len)
    }
}

/// A sequence of generator labels, rendered space-separated (`"1 2 1"`).
/// The empty word renders as `"-"`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("-");
        }
        for (k, letter) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{letter}")?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "-" {
            return Ok(Word::default());
        }
        s.split_whitespace()
            .map(|part| {
                part.parse::<usize>().map_err(|_| Error::Syntax {
                    what: "word",
                    input: s.to_string(),
                    reason: format!("{part:?} is not a generator label"),
                })
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}

impl From<Vec<usize>> for Word {
    fn from(v: Vec<usize>) -> Self {
        Word(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(t: &str) -> Arc<CoxeterGroup> {
        CoxeterGroup::parse(t).unwrap()
    }

    #[test]
    fn generators_and_identity() {
        let a2 = group("A2");
        assert_eq!(a2.gen(1).unwrap().len(), 1);
        assert!(a2.identity().canonical_word().is_empty());
        assert_eq!(group("I2(7)").gen(2).unwrap().len(), 1);
        assert!(a2.gen(3).is_err());
    }

    #[test]
    fn products() {
        let a2 = group("A2");
        let s1 = a2.gen(1).unwrap();
        let s2 = a2.gen(2).unwrap();
        assert!(s1.mul(&s1).unwrap().is_identity());
        let x = a2.from_word(&[1, 2, 1]).unwrap();
        assert_eq!(x.mul(&a2.identity()).unwrap(), a2.from_word(&[2, 1, 2]).unwrap());
        assert_eq!(s1.mul(&s2).unwrap().len(), 2);
        let b2 = group("B2");
        assert!(s1.mul(&b2.gen(1).unwrap()).is_err());
    }

    #[test]
    fn inverses() {
        let a2 = group("A2");
        assert!(a2.identity().inverse().is_identity());
        assert_eq!(a2.from_word(&[1, 2]).unwrap().inverse(), a2.from_word(&[2, 1]).unwrap());
        let w0 = a2.longest_element();
        assert_eq!(w0.inverse().len(), w0.len());
    }

    #[test]
    fn descents() {
        let a2 = group("A2");
        let w0 = a2.from_word(&[1, 2, 1]).unwrap();
        assert_eq!(w0.left_descents().labels(), vec![1, 2]);
        assert_eq!(a2.from_word(&[1, 2]).unwrap().left_descents().labels(), vec![1]);
        assert_eq!(a2.from_word(&[1, 2]).unwrap().right_descents().labels(), vec![2]);
        assert!(a2.identity().left_descents().is_empty());
    }

    #[test]
    fn from_word_examples() {
        assert!(group("A2").from_word(&[1, 1]).unwrap().is_identity());
        assert_eq!(group("A2").from_word(&[1, 2, 1]).unwrap().len(), 3);
        let b2 = group("B2");
        let w0 = b2.from_word(&[1, 2, 1, 2]).unwrap();
        assert_eq!(w0.len(), 4);
        assert_eq!(w0, b2.from_word(&[2, 1, 2, 1]).unwrap());
        assert!(group("A2").from_word(&[3]).is_err());
    }

    #[test]
    fn canonical_words() {
        assert_eq!(group("A2").from_word(&[2, 1, 2]).unwrap().canonical_word(), Word(vec![1, 2, 1]));
        assert_eq!(group("B2").from_word(&[2, 1, 2, 1]).unwrap().canonical_word(), Word(vec![1, 2, 1, 2]));
        assert_eq!(group("A3").identity().canonical_word(), Word(vec![]));
        assert_eq!(group("A3").from_word(&[3, 1]).unwrap().canonical_word(), Word(vec![1, 3]));
    }

    #[test]
    fn support_examples() {
        let a3 = group("A3");
        assert!(a3.identity().support().is_empty());
        assert_eq!(group("A2").longest_element().support().labels(), vec![1, 2]);
        assert_eq!(a3.from_word(&[1, 3]).unwrap().support().labels(), vec![1, 3]);
    }

    #[test]
    fn bruhat_examples() {
        let a2 = group("A2");
        let s1 = a2.gen(1).unwrap();
        let s12 = a2.from_word(&[1, 2]).unwrap();
        let s21 = a2.from_word(&[2, 1]).unwrap();
        assert!(a2.identity().bruhat_leq(&s12).unwrap());
        assert!(s1.bruhat_leq(&s12).unwrap());
        assert!(!s12.bruhat_leq(&s21).unwrap());
        assert!(!s12.bruhat_leq(&s1).unwrap());
    }

    #[test]
    fn dihedral_normal_form() {
        for m in [5u32, 7, 8, 12] {
            let g = group(&format!("I2({m})"));
            let w0 = g.longest_element();
            assert_eq!(w0.len(), m as usize);
            assert_eq!(w0.left_descents().labels(), vec![1, 2]);
            let alt = |start: usize, k: usize| -> Vec<usize> { (0..k).map(|p| if p % 2 == 0 { start } else { 3 - start }).collect() };
            assert_eq!(g.from_word(&alt(1, m as usize)).unwrap(), g.from_word(&alt(2, m as usize)).unwrap());
            assert!(g.from_word(&alt(1, 2 * m as usize)).unwrap().is_identity());
            for k in 0..m as usize {
                let x = g.from_word(&alt(2, k)).unwrap();
                assert_eq!(x.len(), k);
                assert_eq!(x.canonical_word().0, alt(if k == 0 { 1 } else { 2 }, k));
                assert_eq!(x.inverse().mul(&x).unwrap(), g.identity());
                if k > 0 {
                    assert_eq!(x.left_descents().labels(), vec![2]);
                }
            }
            // w0 s_i has length m - 1 and is not divisible by s_i on the right
            for i in 1..=2 {
                let y = w0.right_mul_gen(i);
                assert_eq!(y.len(), m as usize - 1);
                assert!(!y.is_right_descent(i));
                assert_eq!(y, w0.mul(&g.gen(i).unwrap()).unwrap());
                let z = w0.left_mul_gen(i);
                assert_eq!(z.len(), m as usize - 1);
                assert!(!z.is_left_descent(i));
            }
        }
    }

    #[test]
    fn word_text() {
        assert_eq!("1 2 1".parse::<Word>().unwrap(), Word(vec![1, 2, 1]));
        assert_eq!(Word(vec![10, 2]).to_string(), "10 2");
        assert_eq!(Word(vec![]).to_string(), "-");
        assert!("-".parse::<Word>().unwrap().is_empty());
        assert!("1,2".parse::<Word>().is_err());
    }
}
