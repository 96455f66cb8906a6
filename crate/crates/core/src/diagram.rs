//! Finite Coxeter types, their Bourbaki-labeled Coxeter graphs, and subsets of
//! their node sets.
//!
//! Node labels are global and 1-based. In a product such as `A2xB3` the first
//! component owns labels 1..=2 and the second owns 3..=5.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::subset::{SubsetJ, MAX_RANK};

/// One irreducible finite Coxeter type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IrreducibleType {
    A(usize),
    B(usize),
    D(usize),
    E(usize),
    F4,
    H(usize),
    /// Dihedral of order `2m`. `I2(3)` and `I2(4)` never appear here; they are
    /// stored as `A(2)` and `B(2)`.
    I2(u32),
}

impl IrreducibleType {
    pub fn rank(self) -> usize {
        match self {
            IrreducibleType::A(n)
            | IrreducibleType::B(n)
            | IrreducibleType::D(n)
            | IrreducibleType::E(n)
            | IrreducibleType::H(n) => n,
            IrreducibleType::F4 => 4,
            IrreducibleType::I2(_) => 2,
        }
    }

    /// `I2(m)` for `m` outside {3, 4, 6}. These have no root system over the
    /// integers or the golden integers and are handled separately.
    pub fn is_general_dihedral(self) -> bool {
        matches!(self, IrreducibleType::I2(m) if m != 6)
    }

    /// Bond order between local labels `i` and `j` (1-based, `i != j`).
    fn bond(self, i: usize, j: usize) -> u32 {
        let (i, j) = (i.min(j), i.max(j));
        match self {
            IrreducibleType::A(_) => {
                if j == i + 1 {
                    3
                } else {
                    2
                }
            }
            IrreducibleType::B(n) => match (i, j) {
                (i, j) if i == n - 1 && j == n => 4,
                (i, j) if j == i + 1 => 3,
                _ => 2,
            },
            IrreducibleType::D(n) => {
                if (j == i + 1 && j <= n - 1) || (i == n - 2 && j == n) {
                    3
                } else {
                    2
                }
            }
            IrreducibleType::E(_) => match (i, j) {
                (1, 3) | (2, 4) => 3,
                (i, j) if i >= 3 && j == i + 1 => 3,
                _ => 2,
            },
            IrreducibleType::F4 => match (i, j) {
                (1, 2) | (3, 4) => 3,
                (2, 3) => 4,
                _ => 2,
            },
            IrreducibleType::H(_) => match (i, j) {
                (1, 2) => 5,
                (i, j) if j == i + 1 => 3,
                _ => 2,
            },
            IrreducibleType::I2(m) => m,
        }
    }

    /// Order of the group, when it fits in a `u128`.
    pub fn group_order(self) -> u128 {
        fn factorial(n: usize) -> u128 {
            (1..=n as u128).product()
        }
        match self {
            IrreducibleType::A(n) => factorial(n + 1),
            IrreducibleType::B(n) => (1u128 << n) * factorial(n),
            IrreducibleType::D(n) => (1u128 << (n - 1)) * factorial(n),
            IrreducibleType::E(6) => 51_840,
            IrreducibleType::E(7) => 2_903_040,
            IrreducibleType::E(_) => 696_729_600,
            IrreducibleType::F4 => 1152,
            IrreducibleType::H(3) => 120,
            IrreducibleType::H(_) => 14_400,
            IrreducibleType::I2(m) => 2 * m as u128,
        }
    }

    fn parse(text: &str) -> Result<Self> {
        let syntax = |reason: &str| Error::Syntax {
            what: "Coxeter type",
            input: text.to_string(),
            reason: reason.to_string(),
        };
        let out_of_range = |suggestion: Option<&str>| Error::RankOutOfRange {
            name: text.to_string(),
            suggestion: suggestion.map(str::to_string),
        };

        if let Some(rest) = text.strip_prefix("I2(") {
            let m_text = rest.strip_suffix(')').ok_or_else(|| syntax("missing ')'"))?;
            let m: u32 = parse_number(m_text).ok_or_else(|| syntax("bond order must be a number"))?;
            return match m {
                0 | 1 => Err(out_of_range(None)),
                2 => Err(out_of_range(Some("A1xA1"))),
                3 => Ok(IrreducibleType::A(2)),
                4 => Ok(IrreducibleType::B(2)),
                m => Ok(IrreducibleType::I2(m)),
            };
        }

        let mut chars = text.chars();
        let family = chars.next().ok_or_else(|| syntax("empty component"))?;
        let n: usize = parse_number(chars.as_str()).ok_or_else(|| syntax("rank must be a number"))?;
        if n > MAX_RANK {
            return Err(Error::RankTooLarge(MAX_RANK + 1));
        }
        match family {
            'A' => match n {
                0 => Err(out_of_range(None)),
                n => Ok(IrreducibleType::A(n)),
            },
            'B' => match n {
                0 => Err(out_of_range(None)),
                1 => Err(out_of_range(Some("A1"))),
                n => Ok(IrreducibleType::B(n)),
            },
            'D' => match n {
                0 => Err(out_of_range(None)),
                1 => Err(out_of_range(Some("A1"))),
                2 => Err(out_of_range(Some("A1xA1"))),
                3 => Err(out_of_range(Some("A3"))),
                n => Ok(IrreducibleType::D(n)),
            },
            'E' => match n {
                6..=8 => Ok(IrreducibleType::E(n)),
                3 => Err(out_of_range(Some("A2xA1"))),
                4 => Err(out_of_range(Some("A4"))),
                5 => Err(out_of_range(Some("D5"))),
                _ => Err(out_of_range(None)),
            },
            'F' => match n {
                4 => Ok(IrreducibleType::F4),
                _ => Err(out_of_range(None)),
            },
            'H' => match n {
                3 | 4 => Ok(IrreducibleType::H(n)),
                1 => Err(out_of_range(Some("A1"))),
                2 => Err(out_of_range(Some("I2(5)"))),
                _ => Err(out_of_range(None)),
            },
            _ => Err(syntax("unknown family; expected one of A, B, D, E, F, H, I2(m)")),
        }
    }
}

fn parse_number<T: FromStr>(text: &str) -> Option<T> {
    if text.is_empty() || !text.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    text.parse().ok()
}

impl fmt::Display for IrreducibleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IrreducibleType::A(n) => write!(f, "A{n}"),
            IrreducibleType::B(n) => write!(f, "B{n}"),
            IrreducibleType::D(n) => write!(f, "D{n}"),
            IrreducibleType::E(n) => write!(f, "E{n}"),
            IrreducibleType::F4 => write!(f, "F4"),
            IrreducibleType::H(n) => write!(f, "H{n}"),
            IrreducibleType::I2(m) => write!(f, "I2({m})"),
        }
    }
}

/// An irreducible component placed inside a diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Component {
    pub kind: IrreducibleType,
    /// Number of nodes in earlier components; local label `k` is global label `offset + k`.
    pub offset: usize,
}

impl Component {
    pub fn nodes(&self) -> SubsetJ {
        SubsetJ::full(self.kind.rank()).shift_up(self.offset)
    }
}

/// A validated finite Coxeter diagram.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoxeterDiagram {
    components: Vec<Component>,
    rank: usize,
    /// Row-major `rank x rank` Coxeter matrix.
    coxmat: Vec<u32>,
}

impl CoxeterDiagram {
    /// Parses `COMP ("x" COMP)*` where `COMP` is `A3`, `B2`, `D4`, `E6`, `F4`,
    /// `H3`, `I2(7)` and so on.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Err(Error::Syntax {
                what: "Coxeter type",
                input: String::new(),
                reason: "empty type".into(),
            });
        }
        let kinds = text.split('x').map(IrreducibleType::parse).collect::<Result<Vec<_>>>()?;
        if kinds.len() > 1 {
            if let Some(k) = kinds.iter().find(|k| k.is_general_dihedral()) {
                return Err(Error::DihedralInProduct { name: k.to_string() });
            }
        }
        Self::from_components(&kinds)
    }

    pub fn from_components(kinds: &[IrreducibleType]) -> Result<Self> {
        let rank: usize = kinds.iter().map(|k| k.rank()).sum();
        if rank >= MAX_RANK {
            return Err(Error::RankTooLarge(MAX_RANK));
        }
        let mut components = Vec::with_capacity(kinds.len());
        let mut coxmat = vec![2u32; rank * rank];
        let mut offset = 0;
        for &kind in kinds {
            let r = kind.rank();
            for i in 1..=r {
                for j in 1..=r {
                    if i != j {
                        coxmat[(offset + i - 1) * rank + offset + j - 1] = kind.bond(i, j);
                    }
                }
            }
            components.push(Component { kind, offset });
            offset += r;
        }
        for i in 0..rank {
            coxmat[i * rank + i] = 1;
        }
        Ok(CoxeterDiagram { components, rank, coxmat })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn is_irreducible(&self) -> bool {
        self.components.len() == 1
    }

    pub fn nodes(&self) -> SubsetJ {
        SubsetJ::full(self.rank)
    }

    /// Bond order `m_ij` for 1-based labels.
    pub fn m(&self, i: usize, j: usize) -> u32 {
        self.coxmat[(i - 1) * self.rank + j - 1]
    }

    pub fn check_node(&self, label: usize) -> Result<()> {
        if (1..=self.rank).contains(&label) {
            Ok(())
        } else {
            Err(Error::InvalidNode { label, rank: self.rank })
        }
    }

    pub fn check_subset(&self, j: SubsetJ) -> Result<()> {
        if j.is_subset(self.nodes()) {
            Ok(())
        } else {
            let label = j.difference(self.nodes()).min().unwrap_or(0);
            Err(Error::InvalidNode { label, rank: self.rank })
        }
    }

    /// Nodes joined to `label` by an edge (`m >= 3`).
    pub fn neighbors(&self, label: usize) -> SubsetJ {
        (1..=self.rank)
            .filter(|&j| j != label && self.m(label, j) >= 3)
            .fold(SubsetJ::EMPTY, SubsetJ::with)
    }

    /// Connected components of the Coxeter graph restricted to `j`, sorted by
    /// smallest member.
    pub fn components_of(&self, j: SubsetJ) -> Vec<SubsetJ> {
        let mut left = j;
        let mut parts = Vec::new();
        while let Some(start) = left.min() {
            let mut part = SubsetJ::singleton(start);
            let mut frontier = part;
            while !frontier.is_empty() {
                let next = frontier
                    .iter()
                    .map(|k| self.neighbors(k))
                    .fold(SubsetJ::EMPTY, SubsetJ::union)
                    .intersection(j)
                    .difference(part);
                part = part.union(next);
                frontier = next;
            }
            left = left.difference(part);
            parts.push(part);
        }
        parts
    }

    pub fn is_connected(&self, j: SubsetJ) -> bool {
        self.components_of(j).len() <= 1
    }

    /// Leaves of the Coxeter graph; the single node for rank 1.
    pub fn end_points(&self) -> Result<Vec<usize>> {
        if !self.is_irreducible() {
            return Err(Error::Reducible(self.to_string()));
        }
        Ok(self.end_points_within(self.nodes()).labels())
    }

    /// Leaves of the graph restricted to `k` (assumed connected).
    pub fn end_points_within(&self, k: SubsetJ) -> SubsetJ {
        if k.len() == 1 {
            return k;
        }
        k.iter()
            .filter(|&v| self.neighbors(v).intersection(k).len() == 1)
            .fold(SubsetJ::EMPTY, SubsetJ::with)
    }

    /// Group order, or `None` on overflow.
    pub fn group_order(&self) -> Option<u128> {
        self.components
            .iter()
            .try_fold(1u128, |acc, c| acc.checked_mul(c.kind.group_order()))
    }

    /// The single general dihedral component, if the diagram is one.
    pub fn general_dihedral(&self) -> Option<u32> {
        match self.components.as_slice() {
            [Component { kind: IrreducibleType::I2(m), .. }] if *m != 6 => Some(*m),
            _ => None,
        }
    }
}

impl fmt::Display for CoxeterDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, c) in self.components.iter().enumerate() {
            if k > 0 {
                f.write_str("x")?;
            }
            write!(f, "{}", c.kind)?;
        }
        Ok(())
    }
}

impl FromStr for CoxeterDiagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CoxeterDiagram::parse(s)
    }
}
