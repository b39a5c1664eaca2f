//! Blocks of decomposition, prelabels and labels, expansion, and the
//! recursive α solver.

mod block;
mod expand;
mod solve;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use block::{build_block, build_block_homogeneous, Block, BlockSide, HomogeneousSide};
pub use expand::{expand, recover_alpha, ExpVertex, Expansion};
pub use solve::{
    alpha, extract_stable_set, main_solve, validate_certificate, DecompositionTrace, SolveOptions, SolveOutcome,
    SolveStats,
};

use crate::basic::BasicClass;
use crate::detect::TwoJoinSplit;
use crate::trigraph::{Parity, Trigraph, Weight};

/// Kind of a 2-join decomposition, which is also the kind of the prelabel
/// attached to its marker component.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DecompKind {
    #[serde(rename = "complement-odd-2join")]
    ComplementOdd,
    #[serde(rename = "odd-2join")]
    Odd,
    #[serde(rename = "complement-even-2join")]
    ComplementEven,
    #[serde(rename = "even-2join")]
    Even,
}

impl DecompKind {
    pub fn of(complemented: bool, parity: Parity) -> Self {
        match (complemented, parity) {
            (true, Parity::Odd) => DecompKind::ComplementOdd,
            (false, Parity::Odd) => DecompKind::Odd,
            (true, Parity::Even) => DecompKind::ComplementEven,
            (false, Parity::Even) => DecompKind::Even,
        }
    }

    pub fn is_complement(self) -> bool {
        matches!(self, DecompKind::ComplementOdd | DecompKind::ComplementEven)
    }

    /// Number of marker vertices in the blocks.
    pub fn marker_count(self) -> usize {
        match self {
            DecompKind::ComplementOdd | DecompKind::Odd => 2,
            _ => 3,
        }
    }
}

impl fmt::Display for DecompKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DecompKind::ComplementOdd => "complement-odd-2join",
            DecompKind::Odd => "odd-2join",
            DecompKind::ComplementEven => "complement-even-2join",
            DecompKind::Even => "even-2join",
        })
    }
}

/// Stored α values of the side replaced by a marker component.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum PreLabel {
    #[serde(rename = "complement-odd-2join")]
    ComplementOdd { alpha_a: Weight, alpha_b: Weight, alpha_x: Weight },
    #[serde(rename = "odd-2join")]
    Odd { alpha_ac: Weight, alpha_bc: Weight, alpha_c: Weight, alpha_x: Weight },
    #[serde(rename = "complement-even-2join")]
    ComplementEven { alpha_a: Weight, alpha_b: Weight, alpha_x: Weight },
    #[serde(rename = "even-2join")]
    Even { alpha_ac: Weight, alpha_bc: Weight, alpha_c: Weight, alpha_x: Weight },
}

impl PreLabel {
    /// Builds a prelabel from values listed as `(A, B, X)` for complement
    /// kinds and `(AC, BC, C, X)` otherwise.
    pub fn from_values(kind: DecompKind, v: &[Weight]) -> Self {
        match kind {
            DecompKind::ComplementOdd => PreLabel::ComplementOdd { alpha_a: v[0], alpha_b: v[1], alpha_x: v[2] },
            DecompKind::ComplementEven => PreLabel::ComplementEven { alpha_a: v[0], alpha_b: v[1], alpha_x: v[2] },
            DecompKind::Odd => PreLabel::Odd { alpha_ac: v[0], alpha_bc: v[1], alpha_c: v[2], alpha_x: v[3] },
            DecompKind::Even => PreLabel::Even { alpha_ac: v[0], alpha_bc: v[1], alpha_c: v[2], alpha_x: v[3] },
        }
    }

    pub fn kind(&self) -> DecompKind {
        match self {
            PreLabel::ComplementOdd { .. } => DecompKind::ComplementOdd,
            PreLabel::Odd { .. } => DecompKind::Odd,
            PreLabel::ComplementEven { .. } => DecompKind::ComplementEven,
            PreLabel::Even { .. } => DecompKind::Even,
        }
    }

    pub fn alpha_x(&self) -> Weight {
        match *self {
            PreLabel::ComplementOdd { alpha_x, .. }
            | PreLabel::Odd { alpha_x, .. }
            | PreLabel::ComplementEven { alpha_x, .. }
            | PreLabel::Even { alpha_x, .. } => alpha_x,
        }
    }

    /// Inequalities that hold for every prelabel computed from an in-class
    /// trigraph; each failure names the violated inequality.
    pub fn violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        match *self {
            PreLabel::ComplementOdd { alpha_a, alpha_b, alpha_x } | PreLabel::ComplementEven { alpha_a, alpha_b, alpha_x } => {
                if alpha_a > alpha_x || alpha_b > alpha_x {
                    out.push("alpha_A, alpha_B <= alpha_X fails".into());
                }
            }
            PreLabel::Odd { alpha_ac: ac, alpha_bc: bc, alpha_c: c, alpha_x: x }
            | PreLabel::Even { alpha_ac: ac, alpha_bc: bc, alpha_c: c, alpha_x: x } => {
                let (ac, bc, c, x) = (ac as u128, bc as u128, c as u128, x as u128);
                if c > ac || c > bc {
                    out.push("alpha_C <= alpha_AC, alpha_BC fails".into());
                }
                if ac > x || bc > x {
                    out.push("alpha_AC, alpha_BC <= alpha_X fails".into());
                }
                if x > ac + bc {
                    out.push("alpha_X <= alpha_AC + alpha_BC fails".into());
                }
                let odd = matches!(self, PreLabel::Odd { .. });
                if odd && c + x > ac + bc {
                    out.push("alpha_C + alpha_X <= alpha_AC + alpha_BC fails".into());
                }
                if !odd && ac + bc > c + x {
                    out.push("alpha_AC + alpha_BC <= alpha_C + alpha_X fails".into());
                }
            }
        }
        out
    }
}

/// Basic-class tag completing a prelabel into a label.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LabelTag {
    Bipartite,
    ComplementOfBipartite,
    Line,
    ComplementOfLine,
    DoubledMatching,
    DoubledAntimatching,
}

impl LabelTag {
    /// Tag for a component of a trigraph in `class`; `matching` says whether
    /// the component lies in the `X` side of the good partition.
    pub fn for_class(class: BasicClass, matching: bool) -> Self {
        match class {
            BasicClass::Bipartite => LabelTag::Bipartite,
            BasicClass::ComplementBipartite => LabelTag::ComplementOfBipartite,
            BasicClass::Line => LabelTag::Line,
            BasicClass::ComplementLine => LabelTag::ComplementOfLine,
            BasicClass::Doubled if matching => LabelTag::DoubledMatching,
            BasicClass::Doubled => LabelTag::DoubledAntimatching,
        }
    }

    /// Odd-2join gadget used for this tag.
    pub fn gadget(self) -> GadgetShape {
        match self {
            LabelTag::Bipartite | LabelTag::ComplementOfLine | LabelTag::DoubledMatching => GadgetShape::TwoClones,
            _ => GadgetShape::ClosedClone,
        }
    }
}

/// The two replacements of an odd-2join marker pair: clones `a'`, `b'` of
/// both ends, or a single clone `a'` adjacent to `a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GadgetShape {
    TwoClones,
    ClosedClone,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Label {
    pub pre: PreLabel,
    pub tag: LabelTag,
    pub gadget: GadgetShape,
}

impl Label {
    pub fn new(pre: PreLabel, tag: LabelTag) -> Self {
        Label { pre, tag, gadget: tag.gadget() }
    }
}

/// Marker component of a trigraph: the pair `ab`, or the path `a - c - b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LabeledComponent {
    pub a: usize,
    pub b: usize,
    pub c: Option<usize>,
}

impl LabeledComponent {
    pub fn vertices(&self) -> Vec<usize> {
        let mut v = vec![self.a, self.b];
        v.extend(self.c);
        v
    }

    pub fn map(&self, f: impl Fn(usize) -> usize) -> Self {
        LabeledComponent { a: f(self.a), b: f(self.b), c: self.c.map(f) }
    }

    /// Checks the shape required by `kind`.
    pub fn shape_violation(&self, t: &Trigraph, kind: DecompKind) -> Option<String> {
        let n = t.vertex_count();
        if self.vertices().iter().any(|&v| v >= n) {
            return Some("component vertex out of range".into());
        }
        let single = match kind {
            DecompKind::ComplementOdd | DecompKind::Odd => true,
            DecompKind::ComplementEven | DecompKind::Even => false,
        };
        match (single, self.c) {
            (true, None) if t.is_switchable(self.a, self.b) => None,
            (true, _) => Some(format!("{kind} needs a single switchable pair")),
            (false, Some(c)) => {
                if !t.is_switchable(self.a, c) || !t.is_switchable(c, self.b) {
                    return Some(format!("{kind} needs a switchable path a-c-b"));
                }
                let others = || (0..n).filter(|&u| u != self.a && u != self.b && u != c);
                let heavy = t.is_strongly_adjacent(self.a, self.b) && others().all(|u| t.is_strongly_adjacent(c, u));
                let light = t.is_strongly_antiadjacent(self.a, self.b) && others().all(|u| t.is_strongly_antiadjacent(c, u));
                match kind {
                    DecompKind::ComplementEven if !heavy => Some("complement-even-2join needs a heavy component".into()),
                    DecompKind::Even if !light => Some("even-2join needs a light component".into()),
                    _ => None,
                }
            }
            (false, None) => Some(format!("{kind} needs a middle vertex")),
        }
    }
}

/// A labeled component of the input together with its label.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentLabel {
    pub component: LabeledComponent,
    pub label: Label,
}

/// Small-side subproblem of a decomposition step.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Target {
    A,
    B,
    Ac,
    Bc,
    C,
    X,
}

/// One step from the root towards a certificate leaf.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "branch", rename_all = "kebab-case")]
pub enum PathStep {
    Small { kind: DecompKind, target: Target },
    Big { kind: DecompKind },
}

/// Why a trigraph was found to be outside the class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "reason", rename_all = "kebab-case")]
pub enum NotInClassReason {
    /// Switchable components break the conditions of the class.
    ClassF { violations: Vec<String> },
    /// Not basic, and neither it nor its complement has a 2-join.
    NoDecomposition,
    /// A 2-join lacking a property shared by all 2-joins inside the class.
    TwoJoinForm { split: TwoJoinSplit, violations: Vec<String> },
    /// A 2-join whose sides carry paths of different parities.
    ParityConflict { split: TwoJoinSplit, side1: Parity, side2: Parity },
    /// Recursively computed α values of a side break an inequality.
    Inequality { split: TwoJoinSplit, prelabel: PreLabel, violations: Vec<String> },
    /// Basic, but the expansion of its labeled components is not.
    ExpansionNotBasic { expansion: Trigraph },
    /// The small-side subproblems disagreed on a label tag.
    LabelMismatch,
}

impl fmt::Display for NotInClassReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NotInClassReason::ClassF { violations } => write!(f, "switchable components: {}", violations.join("; ")),
            NotInClassReason::NoDecomposition => f.write_str("not basic and no 2-join or complement 2-join"),
            NotInClassReason::TwoJoinForm { violations, .. } => write!(f, "malformed 2-join: {}", violations.join("; ")),
            NotInClassReason::ParityConflict { side1, side2, .. } => {
                write!(f, "2-join sides have paths of parity {side1:?} and {side2:?}")
            }
            NotInClassReason::Inequality { violations, .. } => write!(f, "prelabel inequality: {}", violations.join("; ")),
            NotInClassReason::ExpansionNotBasic { .. } => f.write_str("expansion of a basic leaf is not basic"),
            NotInClassReason::LabelMismatch => f.write_str("small-side labelings disagree"),
        }
    }
}

/// Evidence that the input is outside the class: the leaf trigraph reached
/// by following `path` through the decomposition, and what fails there.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NotInClassCertificate {
    pub reason: NotInClassReason,
    pub path: Vec<PathStep>,
    pub leaf: Trigraph,
}
