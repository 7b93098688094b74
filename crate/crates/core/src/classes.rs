//! The four overpartition families with separated overlined and
//! non-overlined parts, and their separable-class structure.
//!
//! | id    | condition                                  |
//! |-------|--------------------------------------------|
//! | `gno` | `SO = 0` or `SO > LN`                      |
//! | `eno` | `SO = 0` or `SO >= LN`                     |
//! | `gon` | `SN >= 1` and `SN > LO`                    |
//! | `eon` | `SN >= 1` and `SN >= LO`                   |
//!
//! Every member with `m` parts is uniquely a basis element with `m` parts
//! plus a weakly decreasing padding of nonnegative integers.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::partitions::{boundary_stats, Overpartition, Part};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassError {
    #[error("{op:?} is not a member of class {class}")]
    NotMember { op: String, class: ClassId },
    #[error("the empty overpartition has no decomposition")]
    Empty,
    #[error("padding must have {expected} weakly decreasing entries")]
    BadPadding { expected: usize },
    #[error("{base:?} is not a basis element of class {class}")]
    NotBasis { base: String, class: ClassId },
    #[error("unknown class name {0:?}")]
    UnknownName(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassId {
    /// overlined sizes strictly above non-overlined sizes
    Gno,
    /// overlined sizes weakly above non-overlined sizes
    Eno,
    /// non-overlined parts present and strictly above overlined sizes
    Gon,
    /// non-overlined parts present and weakly above overlined sizes
    Eon,
}

impl ClassId {
    pub const ALL: [ClassId; 4] = [ClassId::Gno, ClassId::Eno, ClassId::Gon, ClassId::Eon];

    pub fn name(self) -> &'static str {
        match self {
            ClassId::Gno => "gno",
            ClassId::Eno => "eno",
            ClassId::Gon => "gon",
            ClassId::Eon => "eon",
        }
    }

    pub fn contains(self, op: &Overpartition) -> bool {
        let b = boundary_stats(op);
        match self {
            ClassId::Gno => b.so == 0 || b.so > b.ln,
            ClassId::Eno => b.so == 0 || b.so >= b.ln,
            ClassId::Gon => b.sn >= 1 && b.sn > b.lo,
            ClassId::Eon => b.sn >= 1 && b.sn >= b.lo,
        }
    }

    /// In the `*no` classes the overlined parts sit above the plain ones.
    fn overlined_on_top(self) -> bool {
        matches!(self, ClassId::Gno | ClassId::Eno)
    }
}

impl fmt::Display for ClassId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClassId {
    type Err = ClassError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ClassId::ALL
            .into_iter()
            .find(|c| c.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| ClassError::UnknownName(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ClassSet(u8);

impl ClassSet {
    pub fn contains(self, c: ClassId) -> bool {
        self.0 & (1 << c as u8) != 0
    }

    pub fn insert(&mut self, c: ClassId) {
        self.0 |= 1 << c as u8;
    }

    pub fn iter(self) -> impl Iterator<Item = ClassId> {
        ClassId::ALL.into_iter().filter(move |&c| self.contains(c))
    }
}

pub fn classify(op: &Overpartition) -> ClassSet {
    let mut set = ClassSet::default();
    for c in ClassId::ALL {
        if c.contains(op) {
            set.insert(c);
        }
    }
    set
}

/// Basis element of `class` with `m` parts and `k` overlined parts, if any.
fn basis_element(class: ClassId, m: u32, k: u32) -> Option<Overpartition> {
    let (over, plain): (Vec<u32>, Vec<u32>) = match class {
        // overlined 2..=k+1 over m-k ones; all overlined is 1..=m
        ClassId::Gno if k < m => ((2..=k + 1).collect(), vec![1; (m - k) as usize]),
        ClassId::Gno if k == m => ((1..=m).collect(), Vec::new()),
        // overlined 1..=k over m-k ones
        ClassId::Eno if k <= m => ((1..=k).collect(), vec![1; (m - k) as usize]),
        // m-k copies of k+1 over overlined 1..=k
        ClassId::Gon if k < m => ((1..=k).collect(), vec![k + 1; (m - k) as usize]),
        // m copies of 1, or m-k copies of k over overlined 1..=k
        ClassId::Eon if k == 0 => (Vec::new(), vec![1; m as usize]),
        ClassId::Eon if k < m => ((1..=k).collect(), vec![k; (m - k) as usize]),
        _ => return None,
    };
    Some(Overpartition::from_sizes(&over, &plain).expect("basis elements are valid"))
}

/// All basis elements of `class` with `m` parts, ordered by number of
/// overlined parts.
pub fn basis(class: ClassId, m: u32) -> Vec<Overpartition> {
    (0..=m).filter_map(|k| basis_element(class, m, k)).collect()
}

/// Parts listed with the dominant kind first: overlined before plain for the
/// `*no` classes, plain before overlined for the `*on` classes. Within a
/// class member this is a weakly decreasing arrangement of sizes.
fn layout(op: &Overpartition, class: ClassId) -> Vec<Part> {
    let (first, second): (Vec<Part>, Vec<Part>) = op
        .entries()
        .iter()
        .partition(|p| p.overlined == class.overlined_on_top());
    first.into_iter().chain(second).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub class: ClassId,
    pub base: Overpartition,
    pub padding: Vec<u32>,
}

pub fn decompose(op: &Overpartition, class: ClassId) -> Result<Decomposition, ClassError> {
    if op.is_empty() {
        return Err(ClassError::Empty);
    }
    let not_member = || ClassError::NotMember {
        op: op.to_string(),
        class,
    };
    if !class.contains(op) {
        return Err(not_member());
    }
    let m = op.len() as u32;
    let k = op.num_overlined() as u32;
    let base = basis_element(class, m, k).ok_or_else(not_member)?;
    let padding: Vec<u32> = layout(op, class)
        .iter()
        .zip(layout(&base, class))
        .map(|(p, b)| {
            debug_assert_eq!(p.overlined, b.overlined);
            p.size.checked_sub(b.size)
        })
        .collect::<Option<_>>()
        .ok_or_else(not_member)?;
    if padding.windows(2).any(|w| w[0] < w[1]) {
        return Err(not_member());
    }
    Ok(Decomposition {
        class,
        base,
        padding,
    })
}

pub fn compose(d: &Decomposition) -> Result<Overpartition, ClassError> {
    let m = d.base.len();
    if d.padding.len() != m || d.padding.windows(2).any(|w| w[0] < w[1]) {
        return Err(ClassError::BadPadding { expected: m });
    }
    let k = d.base.num_overlined() as u32;
    if m == 0 || basis_element(d.class, m as u32, k).as_ref() != Some(&d.base) {
        return Err(ClassError::NotBasis {
            base: d.base.to_string(),
            class: d.class,
        });
    }
    let entries = layout(&d.base, d.class)
        .into_iter()
        .zip(&d.padding)
        .map(|(b, &pad)| Part {
            size: b.size + pad,
            overlined: b.overlined,
        })
        .collect();
    Ok(Overpartition::new(entries).expect("padded basis elements stay valid"))
}
