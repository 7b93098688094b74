//! Executable bijections and involutions on overpartitions and partitions.
//!
//! Every forward map has an inverse; each checks its input domain eagerly and
//! returns [`BijectionError::Domain`] instead of producing garbage.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::classes::ClassId;
use crate::partitions::{
    boundary_stats, conjugate, conjugate_parts, maex, mex, parse_partition, Overpartition, Part,
    Partition, PartitionError,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BijectionError {
    #[error("{map}: {input:?} is outside the domain ({reason})")]
    Domain {
        map: &'static str,
        input: String,
        reason: &'static str,
    },
    #[error(transparent)]
    Parse(#[from] PartitionError),
}

fn domain(map: &'static str, input: impl fmt::Display, reason: &'static str) -> BijectionError {
    BijectionError::Domain {
        map,
        input: input.to_string(),
        reason,
    }
}

/// The maps exposed on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BijectionId {
    Sylvester,
    MexEmbed,
    Involution,
    PhiOn,
    PhiNo,
    GonConj,
    ParityPad,
    HonDistinct,
}

impl BijectionId {
    pub const ALL: [BijectionId; 8] = [
        BijectionId::Sylvester,
        BijectionId::MexEmbed,
        BijectionId::Involution,
        BijectionId::PhiOn,
        BijectionId::PhiNo,
        BijectionId::GonConj,
        BijectionId::ParityPad,
        BijectionId::HonDistinct,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BijectionId::Sylvester => "sylvester",
            BijectionId::MexEmbed => "mex-embed",
            BijectionId::Involution => "involution",
            BijectionId::PhiOn => "phi-on",
            BijectionId::PhiNo => "phi-no",
            BijectionId::GonConj => "gon-conj",
            BijectionId::ParityPad => "parity-pad",
            BijectionId::HonDistinct => "hon-distinct",
        }
    }
}

impl fmt::Display for BijectionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BijectionId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        BijectionId::ALL
            .into_iter()
            .find(|b| b.name() == s)
            .ok_or_else(|| format!("unknown map {s:?}"))
    }
}

/// A pair of partitions into distinct parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DistinctPair {
    pub alpha: Partition,
    pub beta: Partition,
}

impl DistinctPair {
    pub fn new(alpha: Partition, beta: Partition) -> Result<Self, BijectionError> {
        if !alpha.is_distinct() || !beta.is_distinct() {
            return Err(domain(
                "distinct-pair",
                format!("alpha={alpha} beta={beta}"),
                "parts must be distinct",
            ));
        }
        Ok(DistinctPair { alpha, beta })
    }

    pub fn weight(&self) -> u32 {
        self.alpha.weight() + self.beta.weight()
    }

    /// `ℓ(alpha) - ℓ(beta)`.
    pub fn length_difference(&self) -> i64 {
        self.alpha.len() as i64 - self.beta.len() as i64
    }

    /// The unique `k >= 0` with `ℓ(α) - ℓ(β) ∈ {k, -k-1}`.
    pub fn overline_count(&self) -> u32 {
        let d = self.length_difference();
        if d >= 0 {
            d as u32
        } else {
            (-d - 1) as u32
        }
    }
}

impl fmt::Display for DistinctPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "alpha={} beta={}", self.alpha, self.beta)
    }
}

impl FromStr for DistinctPair {
    type Err = BijectionError;

    /// Accepts the `alpha=3,1 beta=11,9,7` display form.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || domain("distinct-pair", s, "expected `alpha=<parts> beta=<parts>`");
        let rest = s.trim().strip_prefix("alpha=").ok_or_else(bad)?;
        let (alpha, beta) = match rest.split_once("beta=") {
            Some((a, b)) => (a.trim(), b.trim()),
            None => return Err(bad()),
        };
        DistinctPair::new(parse_partition(alpha)?, parse_partition(beta)?)
    }
}

/// Strips the staircase `k, k-1, ..., 1` from the `k` overlined parts of a
/// member of the strict overlined-above class; returns `(k, λ)`.
fn remove_staircase(op: &Overpartition) -> (usize, Vec<u32>) {
    let k = op.num_overlined();
    let mut lambda: Vec<u32> = op
        .entries()
        .iter()
        .enumerate()
        .map(|(i, p)| {
            if i < k {
                p.size - (k - i) as u32
            } else {
                p.size
            }
        })
        .collect();
    // only the last overlined part can drop to zero, and only with no plain parts
    lambda.retain(|&x| x > 0);
    (k, lambda)
}

/// Inverse of [`remove_staircase`]: the `k` largest parts of `λ` (padded with
/// zeros) get `k, ..., 1` added and become overlined.
fn add_staircase(lambda: &[u32], k: usize) -> Overpartition {
    let len = lambda.len().max(k);
    let entries = (0..len)
        .map(|i| {
            let base = lambda.get(i).copied().unwrap_or(0);
            if i < k {
                Part::over(base + (k - i) as u32)
            } else {
                Part::plain(base)
            }
        })
        .collect();
    Overpartition::new(entries).expect("staircase keeps overlined sizes distinct")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SylvesterCase {
    /// `λ_s >= k+s+1` (or `s = 0`): α is the conjugate side, `ℓ(α)-ℓ(β) = k`.
    One,
    /// `λ_s = k+s`: β is the conjugate side, `ℓ(α)-ℓ(β) = -k-1`.
    Two,
}

/// Intermediate values of the forward map, exposed for inspection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SylvesterTrace {
    pub k: u32,
    pub lambda: Partition,
    pub lambda_conj: Partition,
    pub s: usize,
    pub case: SylvesterCase,
    pub pair: DistinctPair,
}

pub fn sylvester_trace(op: &Overpartition) -> Result<SylvesterTrace, BijectionError> {
    if !ClassId::Gno.contains(op) {
        return Err(domain(
            "sylvester",
            op,
            "not in the strict overlined-above class",
        ));
    }
    let (k, lambda) = remove_staircase(op);
    let conj = conjugate_parts(&lambda);
    // λ_i - i is strictly decreasing, so the indices with λ_i >= k+i form a prefix;
    // s = 0 is allowed through the convention λ_0 = +∞.
    let s = lambda
        .iter()
        .enumerate()
        .take_while(|&(i, &x)| x as usize > k + i)
        .count();
    let mu: Vec<u32> = (1..=k + s)
        .map(|i| {
            let col = conj.get(i - 1).copied().unwrap_or(0) as i64;
            let v = col + k as i64 - i as i64 + 1;
            assert!(v >= 1, "conjugate side must be positive");
            v as u32
        })
        .collect();
    let nu: Vec<u32> = (1..=s).map(|i| lambda[i - 1] - (k + i) as u32).collect();
    let (case, alpha, beta) = if s >= 1 && lambda[s - 1] as usize == k + s {
        (SylvesterCase::Two, nu[..s - 1].to_vec(), mu)
    } else {
        (SylvesterCase::One, mu, nu)
    };
    let pair = DistinctPair {
        alpha: Partition::new(alpha).expect("strictly decreasing positive"),
        beta: Partition::new(beta).expect("strictly decreasing positive"),
    };
    debug_assert_eq!(pair.overline_count() as usize, k);
    debug_assert!(pair.alpha.is_distinct() && pair.beta.is_distinct());
    Ok(SylvesterTrace {
        k: k as u32,
        lambda: Partition::new(lambda).expect("weakly decreasing"),
        lambda_conj: Partition::new(conj).expect("weakly decreasing"),
        s,
        case,
        pair,
    })
}

/// Sends a member of the strict overlined-above class with `k` overlined parts
/// to a pair of distinct partitions with `ℓ(α) - ℓ(β) ∈ {k, -k-1}`.
pub fn sylvester_forward(op: &Overpartition) -> Result<DistinctPair, BijectionError> {
    sylvester_trace(op).map(|t| t.pair)
}

pub fn sylvester_inverse(pair: &DistinctPair, k: u32) -> Result<Overpartition, BijectionError> {
    let d = pair.length_difference();
    let k_ = k as usize;
    let (mu, mut nu, s) = if d == k as i64 {
        (
            pair.alpha.parts(),
            pair.beta.parts().to_vec(),
            pair.beta.len(),
        )
    } else if d == -(k as i64) - 1 {
        let mut nu = pair.alpha.parts().to_vec();
        nu.push(0);
        (pair.beta.parts(), nu, pair.alpha.len() + 1)
    } else {
        return Err(domain(
            "sylvester",
            pair,
            "length difference is neither k nor -k-1",
        ));
    };
    debug_assert_eq!(mu.len(), k_ + s);
    // first s parts of λ
    let mut lambda: Vec<u32> = nu
        .drain(..)
        .enumerate()
        .map(|(i, v)| v + (k_ + i + 1) as u32)
        .collect();
    // columns 1..=k+s of λ, minus the s rows already placed
    let cols: Vec<u32> = mu
        .iter()
        .enumerate()
        .map(|(j, &m)| {
            let v = m as i64 - k as i64 + j as i64 - s as i64;
            debug_assert!(v >= 0);
            v as u32
        })
        .filter(|&v| v > 0)
        .collect();
    lambda.extend(conjugate_parts(&cols));
    let op = add_staircase(&lambda, k_);
    debug_assert_eq!(sylvester_forward(&op).as_ref(), Ok(pair));
    Ok(op)
}

/// Adds one copy of each of `1..=k` to `λ`; the image has `mex >= k+1`.
pub fn mex_embed(op: &Overpartition) -> Result<(Partition, u32), BijectionError> {
    if !ClassId::Gno.contains(op) {
        return Err(domain(
            "mex-embed",
            op,
            "not in the strict overlined-above class",
        ));
    }
    let (k, mut lambda) = remove_staircase(op);
    lambda.extend(1..=k as u32);
    let mu = Partition::from_unsorted(lambda);
    debug_assert!(mex(&mu) > k as u32);
    Ok((mu, k as u32))
}

pub fn mex_embed_inverse(mu: &Partition, k: u32) -> Result<Overpartition, BijectionError> {
    if mex(mu) <= k {
        return Err(domain("mex-embed", mu, "k must be below mex"));
    }
    let mut parts = mu.parts().to_vec();
    for t in 1..=k {
        let pos = parts
            .iter()
            .rposition(|&x| x == t)
            .expect("t < mex is a part");
        parts.remove(pos);
    }
    Ok(add_staircase(&parts, k as usize))
}

/// Toggles the overline on the largest part of the dominant kind: when
/// `LN > LO` the largest plain part becomes overlined, otherwise the largest
/// overlined part becomes plain.
pub fn involution_i(op: &Overpartition) -> Result<Overpartition, BijectionError> {
    if op.is_empty() {
        return Err(domain("involution", "", "empty overpartition"));
    }
    let b = boundary_stats(op);
    let mut entries = op.entries().to_vec();
    let idx = if b.ln > b.lo {
        entries
            .iter()
            .position(|p| !p.overlined)
            .expect("plain part")
    } else {
        entries
            .iter()
            .position(|p| p.overlined)
            .expect("overlined part")
    };
    entries[idx].overlined = !entries[idx].overlined;
    Ok(Overpartition::new(entries).expect("toggle keeps at most one overline per size"))
}

/// Removes all overlines from an overpartition with `SO = LN >= 1`.
pub fn phi_on(op: &Overpartition) -> Result<Partition, BijectionError> {
    let b = boundary_stats(op);
    if !(b.so >= 1 && b.so == b.ln) {
        return Err(domain("phi-on", op, "requires SO = LN >= 1"));
    }
    Ok(op.forget_overlines())
}

/// With `k` the largest repeated part, overlines one `k` and every larger part.
pub fn psi_on(p: &Partition) -> Result<Overpartition, BijectionError> {
    let k = p
        .parts()
        .windows(2)
        .find(|w| w[0] == w[1])
        .map(|w| w[0])
        .ok_or_else(|| domain("phi-on", p, "no repeated part"))?;
    let mut prev = None;
    let entries = p
        .parts()
        .iter()
        .map(|&x| {
            let first = prev != Some(x);
            prev = Some(x);
            Part {
                size: x,
                overlined: x > k || (x == k && first),
            }
        })
        .collect();
    Ok(Overpartition::new(entries).expect("parts above k are distinct"))
}

/// Removes all overlines from an overpartition with `SN = LO >= 1`.
pub fn phi_no(op: &Overpartition) -> Result<Partition, BijectionError> {
    let b = boundary_stats(op);
    if !(b.sn >= 1 && b.sn == b.lo) {
        return Err(domain("phi-no", op, "requires SN = LO >= 1"));
    }
    Ok(op.forget_overlines())
}

/// With `k` the smallest repeated part, overlines one `k` and every smaller part.
pub fn psi_no(p: &Partition) -> Result<Overpartition, BijectionError> {
    let k = p
        .parts()
        .windows(2)
        .rev()
        .find(|w| w[0] == w[1])
        .map(|w| w[0])
        .ok_or_else(|| domain("phi-no", p, "no repeated part"))?;
    let mut prev = None;
    let entries = p
        .parts()
        .iter()
        .map(|&x| {
            let first = prev != Some(x);
            prev = Some(x);
            Part {
                size: x,
                overlined: x < k || (x == k && first),
            }
        })
        .collect();
    Ok(Overpartition::new(entries).expect("parts below k are distinct"))
}

/// Removes the overlines of a member of the strict plain-above class and
/// conjugates; returns `(μ, k)` with `k < LN(μ) - maex(μ)`.
pub fn gon_conjugate(op: &Overpartition) -> Result<(Partition, u32), BijectionError> {
    if !ClassId::Gon.contains(op) {
        return Err(domain(
            "gon-conj",
            op,
            "not in the strict plain-above class",
        ));
    }
    let k = op.num_overlined() as u32;
    let mu = conjugate(&op.forget_overlines());
    debug_assert!(k < mu.largest() - maex(&mu).expect("nonempty"));
    Ok((mu, k))
}

pub fn gon_conjugate_inverse(mu: &Partition, k: u32) -> Result<Overpartition, BijectionError> {
    let gap = match maex(mu) {
        Ok(x) => mu.largest() - x,
        Err(_) => return Err(domain("gon-conj", mu, "empty partition")),
    };
    if k >= gap {
        return Err(domain("gon-conj", mu, "requires k < LN - maex"));
    }
    let lambda = conjugate(mu);
    let m = lambda.len();
    let entries = lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &x)| Part {
            size: x,
            overlined: i >= m - k as usize,
        })
        .collect();
    let op = Overpartition::new(entries).expect("last k parts are distinct");
    debug_assert!(ClassId::Gon.contains(&op));
    Ok(op)
}

/// Largest part odd and smallest part even.
pub fn is_odd_even(p: &Partition) -> bool {
    !p.is_empty() && p.largest() % 2 == 1 && p.smallest().is_multiple_of(2)
}

/// Largest part even, smallest odd, even length at least 4, the middle part
/// `π_{ℓ/2}` odd and at least `ℓ/2` ones.
pub fn is_padded_even_odd(p: &Partition) -> bool {
    let l = p.len();
    l >= 4
        && l.is_multiple_of(2)
        && p.largest().is_multiple_of(2)
        && p.smallest() % 2 == 1
        && p.parts()[l / 2 - 1] % 2 == 1
        && p.multiplicity(1) >= l / 2
}

/// Subtracts one from every part and appends as many ones.
pub fn parity_pad(p: &Partition) -> Result<Partition, BijectionError> {
    if !is_odd_even(p) {
        return Err(domain(
            "parity-pad",
            p,
            "largest part must be odd and smallest even",
        ));
    }
    let l = p.len();
    let mut parts: Vec<u32> = p.parts().iter().map(|&x| x - 1).collect();
    parts.extend(std::iter::repeat_n(1, l));
    let out = Partition::new(parts).expect("weakly decreasing");
    debug_assert!(is_padded_even_odd(&out));
    Ok(out)
}

pub fn parity_pad_inverse(p: &Partition) -> Result<Partition, BijectionError> {
    if !is_padded_even_odd(p) {
        return Err(domain("parity-pad", p, "not in the padded even/odd set"));
    }
    let half = p.len() / 2;
    let parts = p.parts()[..half].iter().map(|&x| x + 1).collect();
    Ok(Partition::new(parts).expect("weakly decreasing"))
}

/// Exactly one non-overlined part, and it is the largest.
pub fn is_h_on(op: &Overpartition) -> bool {
    let b = boundary_stats(op);
    op.num_plain() == 1 && b.ln > b.lo
}

pub fn hon_to_distinct(op: &Overpartition) -> Result<Partition, BijectionError> {
    if !is_h_on(op) {
        return Err(domain(
            "hon-distinct",
            op,
            "requires one plain part above all overlined parts",
        ));
    }
    Ok(op.forget_overlines())
}

pub fn hon_from_distinct(p: &Partition) -> Result<Overpartition, BijectionError> {
    if p.is_empty() || !p.is_distinct() {
        return Err(domain(
            "hon-distinct",
            p,
            "requires a nonempty distinct partition",
        ));
    }
    let entries = p
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &x)| Part {
            size: x,
            overlined: i > 0,
        })
        .collect();
    Ok(Overpartition::new(entries).expect("distinct sizes"))
}
