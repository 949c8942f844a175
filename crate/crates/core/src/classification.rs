//! Irrep labels for `S_n` and the classical matrix groups.
//!
//! | kind                 | label                                   |
//! |----------------------|-----------------------------------------|
//! | `S_n`                | diagram with exactly `n` boxes          |
//! | `End(C^N)`, `GL` (polynomial) | diagram with at most `N` rows  |
//! | `GL` (algebraic), `U`| diagram with fewer than `N` rows, twist |
//! | `SL`, `SU`           | diagram with fewer than `N` rows        |
//!
//! A twist `k` stands for tensoring with `det^k`. Labels of the twisted
//! kinds are kept in normal form: full-height columns are stripped off the
//! diagram and counted into the twist.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use crate::diagram::{enumerate_bounded, enumerate_partitions, YoungDiagram};
use crate::error::{Error, Result};
use crate::schur::schur_dimension;
use crate::tableaux::count_standard;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupKind {
    SymmetricGroup(usize),
    FullLinearMonoid(usize),
    GLPolynomial(usize),
    GLAlgebraic(usize),
    SL(usize),
    UnitaryAlgebraic(usize),
    SU(usize),
}

impl GroupKind {
    /// `n` for `S_n`, `N` for the matrix kinds.
    pub fn size(&self) -> usize {
        match *self {
            GroupKind::SymmetricGroup(n)
            | GroupKind::FullLinearMonoid(n)
            | GroupKind::GLPolynomial(n)
            | GroupKind::GLAlgebraic(n)
            | GroupKind::SL(n)
            | GroupKind::UnitaryAlgebraic(n)
            | GroupKind::SU(n) => n,
        }
    }

    pub fn is_twisted(&self) -> bool {
        matches!(
            self,
            GroupKind::GLAlgebraic(_) | GroupKind::UnitaryAlgebraic(_)
        )
    }

    pub fn tag(&self) -> &'static str {
        match self {
            GroupKind::SymmetricGroup(_) => "Sn",
            GroupKind::FullLinearMonoid(_) => "End",
            GroupKind::GLPolynomial(_) => "GLpoly",
            GroupKind::GLAlgebraic(_) => "GL",
            GroupKind::SL(_) => "SL",
            GroupKind::UnitaryAlgebraic(_) => "U",
            GroupKind::SU(_) => "SU",
        }
    }

    pub fn from_tag(tag: &str, size: usize) -> Result<Self> {
        if size == 0 && !matches!(tag, "Sn" | "S") {
            return Err(Error::InvalidLabel(format!("{tag} needs N >= 1")));
        }
        Ok(match tag {
            "Sn" | "S" => GroupKind::SymmetricGroup(size),
            "End" => GroupKind::FullLinearMonoid(size),
            "GLpoly" => GroupKind::GLPolynomial(size),
            "GL" => GroupKind::GLAlgebraic(size),
            "SL" => GroupKind::SL(size),
            "U" => GroupKind::UnitaryAlgebraic(size),
            "SU" => GroupKind::SU(size),
            other => return Err(Error::InvalidLabel(format!("unknown group kind {other:?}"))),
        })
    }

    /// Largest row count a label diagram may have, or `None` for `S_n`.
    fn row_bound(&self) -> Option<usize> {
        match *self {
            GroupKind::SymmetricGroup(_) => None,
            GroupKind::FullLinearMonoid(n) | GroupKind::GLPolynomial(n) => Some(n),
            GroupKind::GLAlgebraic(n)
            | GroupKind::SL(n)
            | GroupKind::UnitaryAlgebraic(n)
            | GroupKind::SU(n) => Some(n.saturating_sub(1)),
        }
    }
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.tag(), self.size())
    }
}

/// Whether `(group, diagram, twist)` is a label in the classification table
/// as given, without normalizing.
pub fn validate_label(group: &GroupKind, diagram: &YoungDiagram, twist: Option<i64>) -> bool {
    if group.is_twisted() != twist.is_some() {
        return false;
    }
    match (group, group.row_bound()) {
        (GroupKind::SymmetricGroup(n), _) => diagram.box_count() == *n,
        (_, Some(bound)) => group.size() >= 1 && diagram.row_count() <= bound,
        (_, None) => unreachable!(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IrrepLabel {
    group: GroupKind,
    diagram: YoungDiagram,
    twist: Option<i64>,
}

impl IrrepLabel {
    /// Builds a label, normalizing twisted kinds. A twisted kind given no
    /// twist gets `k = 0`.
    pub fn new(group: GroupKind, diagram: YoungDiagram, twist: Option<i64>) -> Result<Self> {
        let (diagram, twist) = if group.is_twisted() {
            let (d, k) = normalize_gl_label(&diagram, twist.unwrap_or(0), group.size())
                .map_err(|e| Error::InvalidLabel(e.to_string()))?;
            (d, Some(k))
        } else {
            (diagram, twist)
        };
        if !validate_label(&group, &diagram, twist) {
            return Err(Error::InvalidLabel(format!(
                "{}",
                IrrepLabel {
                    group,
                    diagram,
                    twist
                }
            )));
        }
        Ok(IrrepLabel {
            group,
            diagram,
            twist,
        })
    }

    pub fn group(&self) -> GroupKind {
        self.group
    }

    pub fn diagram(&self) -> &YoungDiagram {
        &self.diagram
    }

    pub fn twist(&self) -> Option<i64> {
        self.twist
    }

    pub fn is_valid(&self) -> bool {
        validate_label(&self.group, &self.diagram, self.twist)
    }
}

impl fmt::Display for IrrepLabel {
    /// `"GL:2:[2,1]:k=-3"`, `"Sn:3:[2,1]"`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:[{}]", self.group, self.diagram)?;
        if let Some(k) = self.twist {
            write!(f, ":k={k}")?;
        }
        Ok(())
    }
}

impl FromStr for IrrepLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidLabel(format!("cannot parse label {s:?}"));
        let mut parts = s.trim().splitn(3, ':');
        let tag = parts.next().ok_or_else(bad)?;
        let size: usize = parts.next().ok_or_else(bad)?.trim().parse().map_err(|_| bad())?;
        let rest = parts.next().ok_or_else(bad)?;
        let (diagram_text, twist_text) = match rest.split_once(":k=") {
            Some((d, k)) => (d, Some(k)),
            None => (rest, None),
        };
        let diagram: YoungDiagram = diagram_text.parse()?;
        let twist = twist_text
            .map(|k| k.trim().parse::<i64>().map_err(|_| bad()))
            .transpose()?;
        let group = GroupKind::from_tag(tag.trim(), size)?;
        if twist.is_some() && !group.is_twisted() {
            return Err(Error::InvalidLabel(format!(
                "{} labels carry no twist",
                group.tag()
            )));
        }
        IrrepLabel::new(group, diagram, twist)
    }
}

/// Strips full-height columns: with `s` the length of row `N` (0 if the
/// diagram is shorter), returns the diagram minus `s` from every row and
/// the twist `k + s`.
pub fn normalize_gl_label(y: &YoungDiagram, k: i64, n: usize) -> Result<(YoungDiagram, i64)> {
    if y.row_count() > n {
        return Err(Error::TooManyRows {
            rows: y.row_count(),
            max: n,
        });
    }
    let s = if n > 0 && y.row_count() == n {
        y.row_len(n - 1)
    } else {
        0
    };
    let rows = y.rows().iter().map(|&r| r - s).collect();
    Ok((YoungDiagram::from_unsorted(rows), k + s as i64))
}

/// Adds one full-height column: pads to `N` rows and adds 1 to each.
pub fn tensor_with_determinant(y: &YoungDiagram, n: usize) -> Result<YoungDiagram> {
    if y.row_count() > n {
        return Err(Error::TooManyRows {
            rows: y.row_count(),
            max: n,
        });
    }
    Ok(YoungDiagram::from_unsorted(
        (0..n).map(|i| y.row_len(i) + 1).collect(),
    ))
}

/// Prepends `k ≥ 0` full-height columns; inverse of [`normalize_gl_label`].
pub fn add_determinant_columns(y: &YoungDiagram, k: usize, n: usize) -> Result<YoungDiagram> {
    let mut out = y.clone();
    for _ in 0..k {
        out = tensor_with_determinant(&out, n)?;
    }
    Ok(out)
}

/// All labels of `group` whose diagram has at most `box_budget` boxes
/// (exactly `n` for `S_n`, where the budget is ignored). Ordered by box
/// count, then by decreasing lexicographic diagram, then by twist.
pub fn enumerate_labels(
    group: GroupKind,
    box_budget: usize,
    twists: Option<RangeInclusive<i64>>,
) -> Result<Vec<IrrepLabel>> {
    if let GroupKind::SymmetricGroup(n) = group {
        return Ok(enumerate_partitions(n)
            .into_iter()
            .map(|diagram| IrrepLabel {
                group,
                diagram,
                twist: None,
            })
            .collect());
    }
    let bound = group.row_bound().expect("matrix kinds have a row bound");
    let twist_values: Vec<Option<i64>> = if group.is_twisted() {
        twists.ok_or(Error::MissingTwistRange)?.map(Some).collect()
    } else {
        vec![None]
    };
    if group.size() == 0 {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for boxes in 0..=box_budget {
        for diagram in enumerate_bounded(boxes, bound) {
            for &twist in &twist_values {
                out.push(IrrepLabel {
                    group,
                    diagram: diagram.clone(),
                    twist,
                });
            }
        }
    }
    Ok(out)
}

/// `f^Y` for `S_n`; `dim L_Y` over `C^N` for the matrix kinds. Twists do
/// not change the dimension.
pub fn label_dimension(label: &IrrepLabel) -> Result<usize> {
    if !label.is_valid() {
        return Err(Error::InvalidLabel(label.to_string()));
    }
    match label.group {
        GroupKind::SymmetricGroup(_) => count_standard(&label.diagram),
        other => schur_dimension(&label.diagram, other.size()),
    }
}
