//! The identity-defined varieties below `LLS` (left legal semigroups), with
//! isomorphism testing and an exhaustive census of small semigroups.

mod enumerate;
mod iso;

pub use enumerate::{
    canonical_form, census, enumerate_semigroups, EnumerationOptions, MAX_FILTERED_ORDER,
    MAX_UNFILTERED_ORDER,
};
pub use iso::are_isomorphic;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::finite::{
    constant_product, identity, quotient, rees_congruence, square_ideal, CayleyTable, Identity,
    Partition, Semigroup,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VarietyNode {
    /// Trivial semigroups.
    T,
    /// Left zero semigroups.
    LZ,
    /// Zero semigroups.
    ZM,
    /// Semilattices.
    SL,
    /// Left normal bands.
    LNB,
    /// Left regular bands.
    LRB,
    B,
    D,
    C,
    A,
    /// Left legal semigroups.
    LLS,
}

impl VarietyNode {
    pub const ALL: [VarietyNode; 11] = [
        VarietyNode::T,
        VarietyNode::LZ,
        VarietyNode::ZM,
        VarietyNode::SL,
        VarietyNode::LNB,
        VarietyNode::LRB,
        VarietyNode::B,
        VarietyNode::D,
        VarietyNode::C,
        VarietyNode::A,
        VarietyNode::LLS,
    ];

    pub fn name(self) -> &'static str {
        match self {
            VarietyNode::T => "T",
            VarietyNode::LZ => "LZ",
            VarietyNode::ZM => "ZM",
            VarietyNode::SL => "SL",
            VarietyNode::LNB => "LNB",
            VarietyNode::LRB => "LRB",
            VarietyNode::B => "B",
            VarietyNode::D => "D",
            VarietyNode::C => "C",
            VarietyNode::A => "A",
            VarietyNode::LLS => "LLS",
        }
    }

    /// Defining identities. `T` and `ZM` are defined by order one and by a
    /// constant product respectively, and have none here.
    pub fn identities(self) -> Vec<Identity> {
        let ids: &[&str] = match self {
            VarietyNode::T | VarietyNode::ZM => &[],
            VarietyNode::LZ => &["ab=a"],
            VarietyNode::SL => &["aa=a", "ab=ba"],
            VarietyNode::LNB => &["aa=a", "abc=acb"],
            VarietyNode::LRB => &["aa=a", "aba=ab"],
            VarietyNode::B => &["ab=ac"],
            VarietyNode::D => &["ab=ba", "ab=aab"],
            VarietyNode::C => &["abc=acb", "ab=aab"],
            VarietyNode::A => &["aba=ab", "ab=aab"],
            VarietyNode::LLS => &["aba=ab"],
        };
        ids.iter().map(|s| identity(s)).collect()
    }

    pub fn contains(self, t: &CayleyTable) -> bool {
        match self {
            VarietyNode::T => t.order() == 1,
            VarietyNode::ZM => constant_product(t).is_some(),
            _ => self
                .identities()
                .iter()
                .all(|id| id.holds_in(t).expect("three-variable identities")),
        }
    }
}

impl fmt::Display for VarietyNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for VarietyNode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        VarietyNode::ALL
            .into_iter()
            .find(|v| v.name() == s)
            .ok_or_else(|| Error::InvalidIdentity {
                text: s.into(),
                message: "unknown variety".into(),
            })
    }
}

/// Covering edges `(lower, upper)` of the diagram; `lower ⊆ upper`.
pub const EDGES: [(VarietyNode, VarietyNode); 17] = {
    use VarietyNode::*;
    [
        (T, LZ),
        (T, ZM),
        (T, SL),
        (LZ, B),
        (LZ, LNB),
        (ZM, B),
        (ZM, D),
        (ZM, A),
        (SL, LNB),
        (SL, D),
        (LNB, LRB),
        (LNB, C),
        (B, C),
        (D, C),
        (C, A),
        (LRB, A),
        (A, LLS),
    ]
};

/// The meets `B ∧ LNB = LZ`, `C ∧ LRB = LNB`, `D ∧ LNB = SL`.
pub const MEETS: [(VarietyNode, VarietyNode, VarietyNode); 3] = {
    use VarietyNode::*;
    [(B, LNB, LZ), (C, LRB, LNB), (D, LNB, SL)]
};

/// Every node whose defining conditions hold in `t`, in diagram order.
pub fn variety_membership(t: &CayleyTable) -> Vec<VarietyNode> {
    VarietyNode::ALL
        .into_iter()
        .filter(|v| v.contains(t))
        .collect()
}

/// An edge `(lower, upper)` with `lower` in the set but `upper` missing.
pub fn upward_closure_violation(members: &[VarietyNode]) -> Option<(VarietyNode, VarietyNode)> {
    EDGES
        .into_iter()
        .find(|(lo, hi)| members.contains(lo) && !members.contains(hi))
}

/// The two factors of a semigroup in `A` split along `a ↦ a²`: the kernel
/// of the square map and the Rees congruence of `S²`. Their meet is
/// equality exactly when `S` is a subdirect product of the two quotients.
#[derive(Debug, Clone)]
pub struct SquareSplit {
    pub kernel: Partition,
    pub rees: Partition,
    pub band_factor: Semigroup,
    pub zero_factor: Semigroup,
}

impl SquareSplit {
    pub fn is_subdirect(&self) -> bool {
        self.kernel.meet(&self.rees).is_discrete()
    }
}

/// `None` when the kernel of `a ↦ a²` is not a congruence.
pub fn square_split(s: &Semigroup) -> Option<SquareSplit> {
    let squares: Vec<usize> = s.elements().map(|a| s.square(a)).collect();
    let kernel = Partition::from_labels(&squares);
    let rees = rees_congruence(s.order(), &square_ideal(s).subset);
    let band_factor = quotient(s, &kernel).ok()?;
    let zero_factor = quotient(s, &rees).expect("Rees congruences are congruences");
    Some(SquareSplit {
        kernel,
        rees,
        band_factor,
        zero_factor,
    })
}
