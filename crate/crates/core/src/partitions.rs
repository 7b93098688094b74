//! Partitions, overpartitions, their enumerators and statistics.
//!
//! Overpartitions are stored in canonical order: sizes weakly decreasing and,
//! among entries of equal size, the (unique) overlined entry first.

use std::cmp::Reverse;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("parts must be positive")]
    ZeroPart,
    #[error("parts must be weakly decreasing")]
    NotDecreasing,
    #[error("size {0} is overlined more than once")]
    DuplicateOverline(u32),
    #[error("maximal excludant is undefined for the empty partition")]
    EmptyPartition,
    #[error("parse error at byte {offset} (token {token:?}): {reason}")]
    Parse {
        offset: usize,
        token: String,
        reason: &'static str,
    },
    #[error("line {line}: {source}")]
    Corpus {
        line: usize,
        #[source]
        source: Box<PartitionError>,
    },
}

/// A weakly decreasing sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self, PartitionError> {
        if parts.contains(&0) {
            return Err(PartitionError::ZeroPart);
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(PartitionError::NotDecreasing);
        }
        Ok(Partition { parts })
    }

    /// Sorts the given parts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by_key(|&p| Reverse(p));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Largest part, 0 when empty.
    pub fn largest(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Smallest part, 0 when empty.
    pub fn smallest(&self) -> u32 {
        self.parts.last().copied().unwrap_or(0)
    }

    pub fn multiplicity(&self, size: u32) -> usize {
        self.parts.iter().filter(|&&p| p == size).count()
    }

    pub fn is_distinct(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    pub fn has_repeated_part(&self) -> bool {
        !self.is_distinct()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Part {
    pub size: u32,
    pub overlined: bool,
}

impl Part {
    pub fn plain(size: u32) -> Self {
        Part {
            size,
            overlined: false,
        }
    }

    pub fn over(size: u32) -> Self {
        Part {
            size,
            overlined: true,
        }
    }

    fn canonical_key(&self) -> (Reverse<u32>, bool) {
        (Reverse(self.size), !self.overlined)
    }
}

/// An overpartition in canonical order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Overpartition {
    entries: Vec<Part>,
}

impl Overpartition {
    /// Canonicalizes `entries` and checks the overline rule.
    pub fn new(mut entries: Vec<Part>) -> Result<Self, PartitionError> {
        if entries.iter().any(|p| p.size == 0) {
            return Err(PartitionError::ZeroPart);
        }
        entries.sort_by_key(Part::canonical_key);
        if let Some(w) = entries
            .windows(2)
            .find(|w| w[0].overlined && w[1].overlined && w[0].size == w[1].size)
        {
            return Err(PartitionError::DuplicateOverline(w[0].size));
        }
        Ok(Overpartition { entries })
    }

    pub fn from_sizes(overlined: &[u32], plain: &[u32]) -> Result<Self, PartitionError> {
        let entries = overlined
            .iter()
            .map(|&s| Part::over(s))
            .chain(plain.iter().map(|&s| Part::plain(s)))
            .collect();
        Self::new(entries)
    }

    pub fn from_partition(p: &Partition) -> Self {
        Overpartition {
            entries: p.parts().iter().map(|&s| Part::plain(s)).collect(),
        }
    }

    pub fn empty() -> Self {
        Overpartition::default()
    }

    pub fn entries(&self) -> &[Part] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.entries.iter().map(|p| p.size).sum()
    }

    /// Overlined sizes in decreasing order.
    pub fn overlined_sizes(&self) -> impl DoubleEndedIterator<Item = u32> + '_ {
        self.entries.iter().filter(|p| p.overlined).map(|p| p.size)
    }

    /// Non-overlined sizes in decreasing order.
    pub fn plain_sizes(&self) -> impl DoubleEndedIterator<Item = u32> + '_ {
        self.entries.iter().filter(|p| !p.overlined).map(|p| p.size)
    }

    pub fn num_overlined(&self) -> usize {
        self.overlined_sizes().count()
    }

    pub fn num_plain(&self) -> usize {
        self.plain_sizes().count()
    }

    /// The underlying partition with all overlines removed.
    pub fn forget_overlines(&self) -> Partition {
        Partition {
            parts: self.entries.iter().map(|p| p.size).collect(),
        }
    }

    /// Returns the plain partition if no part is overlined.
    pub fn as_partition(&self) -> Option<Partition> {
        (self.num_overlined() == 0).then(|| self.forget_overlines())
    }
}

impl fmt::Display for Overpartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p.size)?;
            if p.overlined {
                write!(f, "~")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Overpartition {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_overpartition(s)
    }
}

/// Parses `10~,8~,7~,6,4,4,2,1`-style text; `~` marks an overlined part.
/// Input order is free; the result is canonical.
pub fn parse_overpartition(text: &str) -> Result<Overpartition, PartitionError> {
    if text.trim().is_empty() {
        return Ok(Overpartition::empty());
    }
    let mut entries = Vec::new();
    let mut offset = 0;
    for raw in text.split(',') {
        let token = raw.trim();
        let err = |reason| PartitionError::Parse {
            offset,
            token: token.to_string(),
            reason,
        };
        let (digits, overlined) = match token.strip_suffix('~') {
            Some(d) => (d, true),
            None => (token, false),
        };
        if digits.is_empty() {
            return Err(err("missing size"));
        }
        if digits.starts_with('-') || digits.bytes().all(|b| b == b'0') {
            return Err(err("size must be positive"));
        }
        if !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(err("malformed size"));
        }
        let size: u32 = digits.parse().map_err(|_| err("size out of range"))?;
        if overlined && entries.contains(&Part::over(size)) {
            return Err(err("size overlined twice"));
        }
        entries.push(Part { size, overlined });
        offset += raw.len() + 1;
    }
    Overpartition::new(entries)
}

/// Parses a partition in the same notation; overlines are rejected.
pub fn parse_partition(text: &str) -> Result<Partition, PartitionError> {
    let op = parse_overpartition(text)?;
    op.as_partition().ok_or(PartitionError::Parse {
        offset: 0,
        token: text.to_string(),
        reason: "a plain partition cannot have overlined parts",
    })
}

/// One overpartition per line; an empty line is the empty overpartition and
/// lines starting with `#` are comments.
pub fn read_corpus(text: &str) -> Result<Vec<Overpartition>, PartitionError> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim_start().starts_with('#'))
        .map(|(i, l)| {
            parse_overpartition(l).map_err(|e| PartitionError::Corpus {
                line: i + 1,
                source: Box::new(e),
            })
        })
        .collect()
}

pub fn write_corpus<'a, I>(items: I) -> String
where
    I: IntoIterator<Item = &'a Overpartition>,
{
    let mut out = String::new();
    for op in items {
        out.push_str(&op.to_string());
        out.push('\n');
    }
    out
}

/// Streams the partitions of `n` in reverse-lexicographic order.
#[derive(Debug, Clone)]
pub struct Partitions {
    parts: Vec<u32>,
    started: bool,
    done: bool,
}

impl Partitions {
    pub fn new(n: u32) -> Self {
        Partitions {
            parts: if n == 0 { Vec::new() } else { vec![n] },
            started: false,
            done: false,
        }
    }

    /// Advances and borrows the next partition without allocating.
    pub fn next_parts(&mut self) -> Option<&[u32]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(&self.parts);
        }
        let Some(i) = self.parts.iter().rposition(|&p| p > 1) else {
            self.done = true;
            return None;
        };
        let ones = self.parts.len() - i - 1;
        let v = self.parts[i] - 1;
        self.parts.truncate(i);
        let mut rest = ones as u32 + 1 + v;
        while rest > 0 {
            let x = rest.min(v);
            self.parts.push(x);
            rest -= x;
        }
        Some(&self.parts)
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        self.next_parts().map(|p| Partition { parts: p.to_vec() })
    }
}

pub fn enumerate_partitions(n: u32) -> Partitions {
    Partitions::new(n)
}

/// Calls `f` on every partition of `n` without allocating per partition.
pub fn for_each_partition<F: FnMut(&[u32])>(n: u32, mut f: F) {
    let mut it = Partitions::new(n);
    while let Some(p) = it.next_parts() {
        f(p);
    }
}

/// Streams overpartitions of `n`: grouped by underlying partition in
/// reverse-lexicographic order, and within a group the overline pattern
/// counts up in binary with the largest distinct size as the low bit.
#[derive(Debug, Clone)]
pub struct Overpartitions {
    partitions: Partitions,
    current: Vec<u32>,
    distinct: Vec<u32>,
    mask: u64,
    exhausted_group: bool,
}

impl Overpartitions {
    pub fn new(n: u32) -> Self {
        Overpartitions {
            partitions: Partitions::new(n),
            current: Vec::new(),
            distinct: Vec::new(),
            mask: 0,
            exhausted_group: true,
        }
    }

    fn build(&self) -> Overpartition {
        let mut entries = Vec::with_capacity(self.current.len());
        let mut prev = None;
        for &s in &self.current {
            let first = prev != Some(s);
            prev = Some(s);
            let overlined = first && {
                let j = self
                    .distinct
                    .iter()
                    .position(|&d| d == s)
                    .expect("size listed");
                self.mask >> j & 1 == 1
            };
            entries.push(Part { size: s, overlined });
        }
        Overpartition { entries }
    }
}

impl Iterator for Overpartitions {
    type Item = Overpartition;

    fn next(&mut self) -> Option<Overpartition> {
        if self.exhausted_group {
            let parts = self.partitions.next_parts()?;
            self.current.clear();
            self.current.extend_from_slice(parts);
            self.distinct = self.current.clone();
            self.distinct.dedup();
            self.mask = 0;
            self.exhausted_group = false;
        }
        let out = self.build();
        self.mask += 1;
        if self.mask >> self.distinct.len() != 0 {
            self.exhausted_group = true;
        }
        Some(out)
    }
}

pub fn enumerate_overpartitions(n: u32) -> Overpartitions {
    Overpartitions::new(n)
}

/// Ferrers-diagram transpose.
pub fn conjugate(p: &Partition) -> Partition {
    Partition {
        parts: conjugate_parts(p.parts()),
    }
}

pub(crate) fn conjugate_parts(parts: &[u32]) -> Vec<u32> {
    let largest = parts.first().copied().unwrap_or(0);
    let mut out = Vec::with_capacity(largest as usize);
    let mut len = parts.len();
    for i in 1..=largest {
        while len > 0 && parts[len - 1] < i {
            len -= 1;
        }
        out.push(len as u32);
    }
    out
}

/// Smallest positive integer that is not a part.
pub fn mex(p: &Partition) -> u32 {
    mex_of(p.parts())
}

pub(crate) fn mex_of(parts: &[u32]) -> u32 {
    // parts are decreasing, so scan from the end
    let mut m = 1;
    for &x in parts.iter().rev() {
        if x == m {
            m += 1;
        } else if x > m {
            break;
        }
    }
    m
}

/// Largest nonnegative integer below the largest part that is not a part.
pub fn maex(p: &Partition) -> Result<u32, PartitionError> {
    maex_of(p.parts()).ok_or(PartitionError::EmptyPartition)
}

pub(crate) fn maex_of(parts: &[u32]) -> Option<u32> {
    let mut expect = parts.first()?.checked_sub(1)?;
    for &x in &parts[1..] {
        if expect == 0 || x < expect {
            break;
        }
        if x == expect {
            expect -= 1;
        }
    }
    Some(expect)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct BoundaryStats {
    pub ln: u32,
    pub sn: u32,
    pub lo: u32,
    pub so: u32,
}

/// Largest/smallest non-overlined and overlined sizes, 0 when absent.
pub fn boundary_stats(op: &Overpartition) -> BoundaryStats {
    let mut st = BoundaryStats::default();
    for p in op.entries() {
        let (large, small) = if p.overlined {
            (&mut st.lo, &mut st.so)
        } else {
            (&mut st.ln, &mut st.sn)
        };
        if *large == 0 {
            *large = p.size;
        }
        *small = p.size;
    }
    st
}

/// Number of parts of one kind beyond the boundary set by the other kind.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct EllStats {
    /// non-overlined parts of size >= SO
    pub n_ge_o: u32,
    /// non-overlined parts of size > SO
    pub n_gt_o: u32,
    /// overlined parts of size >= SN
    pub o_ge_n: u32,
    /// overlined parts of size > SN
    pub o_gt_n: u32,
}

/// When a kind is absent its boundary is 0, so every part of the other kind
/// counts toward both of its statistics.
pub fn ell_stats(op: &Overpartition) -> EllStats {
    let b = boundary_stats(op);
    let mut st = EllStats::default();
    for p in op.entries() {
        if p.overlined {
            st.o_ge_n += (p.size >= b.sn) as u32;
            st.o_gt_n += (p.size > b.sn) as u32;
        } else {
            st.n_ge_o += (p.size >= b.so) as u32;
            st.n_gt_o += (p.size > b.so) as u32;
        }
    }
    st
}
