//! Registry of series identities and integer theorems, each checked exactly
//! up to a bound and summarised as a [`VerificationReport`].

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::classes::{basis, ClassId};
use crate::counting::{count_records, partition_tally, CountRecord};
use crate::qseries::{
    pochhammer_reciprocal, qpoch, qpoch_neg, sum_family, Count, PochSpec, Series, Sign,
};

pub const DEFAULT_ORDER: usize = 60;
pub const CLASSICAL_ORDER: usize = 80;
pub const DEFAULT_NMAX: u32 = 20;
pub const CROSSCHECK_ID: &str = "CROSSCHECK";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdentityId {
    Gno,
    Eno,
    EonEq,
    GonSep,
    EonSep,
    GonNew,
    EonNew,
    EnoEq,
    Cohen,
    Chern,
    Euler1,
    Euler2,
    Euler3,
    Chang1,
    Chang2,
    Gauss,
    HeineSpec,
    Lem31(u32),
    Distinct,
    Excess1,
    Hprime,
}

const FIXED_IDENTITIES: [IdentityId; 20] = [
    IdentityId::Gno,
    IdentityId::Eno,
    IdentityId::EonEq,
    IdentityId::GonSep,
    IdentityId::EonSep,
    IdentityId::GonNew,
    IdentityId::EonNew,
    IdentityId::EnoEq,
    IdentityId::Cohen,
    IdentityId::Chern,
    IdentityId::Euler1,
    IdentityId::Euler2,
    IdentityId::Euler3,
    IdentityId::Chang1,
    IdentityId::Chang2,
    IdentityId::Gauss,
    IdentityId::HeineSpec,
    IdentityId::Distinct,
    IdentityId::Excess1,
    IdentityId::Hprime,
];

pub const LEM31_MAX_K: u32 = 10;

impl IdentityId {
    /// Every registered identity, with the lemma family at `k = 0..=10`.
    pub fn all() -> Vec<IdentityId> {
        let mut v = FIXED_IDENTITIES.to_vec();
        v.extend((0..=LEM31_MAX_K).map(IdentityId::Lem31));
        v
    }

    pub fn name(self) -> String {
        let s = match self {
            IdentityId::Gno => "I-GNO",
            IdentityId::Eno => "I-ENO",
            IdentityId::EonEq => "I-EONeq",
            IdentityId::GonSep => "I-GON-sep",
            IdentityId::EonSep => "I-EON-sep",
            IdentityId::GonNew => "I-GON-new",
            IdentityId::EonNew => "I-EON-new",
            IdentityId::EnoEq => "I-ENOeq",
            IdentityId::Cohen => "I-COHEN",
            IdentityId::Chern => "I-CHERN",
            IdentityId::Euler1 => "I-EULER1",
            IdentityId::Euler2 => "I-EULER2",
            IdentityId::Euler3 => "I-EULER3",
            IdentityId::Chang1 => "I-CHANG1",
            IdentityId::Chang2 => "I-CHANG2",
            IdentityId::Gauss => "I-GAUSS",
            IdentityId::HeineSpec => "I-HEINE-SPEC",
            IdentityId::Lem31(k) => return format!("I-LEM31({k})"),
            IdentityId::Distinct => "I-DISTINCT",
            IdentityId::Excess1 => "I-EXCESS1",
            IdentityId::Hprime => "I-HPRIME",
        };
        s.to_string()
    }

    pub fn default_order(self) -> usize {
        match self {
            IdentityId::Euler1
            | IdentityId::Euler2
            | IdentityId::Euler3
            | IdentityId::Gauss
            | IdentityId::Cohen
            | IdentityId::HeineSpec => CLASSICAL_ORDER,
            _ => DEFAULT_ORDER,
        }
    }

    /// Both sides of every equality making up the identity, truncated at `order`.
    pub fn sides(self, order: usize) -> Vec<Comparison> {
        identity_sides(self, order)
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for IdentityId {
    type Err = String;

    /// Accepts the display names; the lemma family also parses as `I-LEM31-k`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if let Some(found) = FIXED_IDENTITIES.iter().find(|i| i.name() == s) {
            return Ok(*found);
        }
        let k = s
            .strip_prefix("I-LEM31(")
            .and_then(|r| r.strip_suffix(')'))
            .or_else(|| s.strip_prefix("I-LEM31-"));
        match k.map(str::parse::<u32>) {
            Some(Ok(k)) => Ok(IdentityId::Lem31(k)),
            _ => Err(format!("unknown identity {s:?}")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    Parity,
    TwoPe,
    D,
    Hprime,
    Excess1,
    Excess2,
    SigmaMex,
    Cor22,
    ChernCount,
    Er,
}

impl TheoremId {
    pub const ALL: [TheoremId; 10] = [
        TheoremId::Parity,
        TheoremId::TwoPe,
        TheoremId::D,
        TheoremId::Hprime,
        TheoremId::Excess1,
        TheoremId::Excess2,
        TheoremId::SigmaMex,
        TheoremId::Cor22,
        TheoremId::ChernCount,
        TheoremId::Er,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::Parity => "T-PARITY",
            TheoremId::TwoPe => "T-2PE",
            TheoremId::D => "T-D",
            TheoremId::Hprime => "T-HPRIME",
            TheoremId::Excess1 => "T-EXCESS1",
            TheoremId::Excess2 => "T-EXCESS2",
            TheoremId::SigmaMex => "T-SIGMAMEX",
            TheoremId::Cor22 => "T-COR22",
            TheoremId::ChernCount => "T-CHERN-COUNT",
            TheoremId::Er => "T-ER",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| format!("unknown theorem {s:?}"))
    }
}

/// Anything the registry can run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CheckId {
    Identity(IdentityId),
    Theorem(TheoremId),
    Crosscheck,
}

impl CheckId {
    pub fn all() -> Vec<CheckId> {
        let mut v: Vec<CheckId> = IdentityId::all()
            .into_iter()
            .map(CheckId::Identity)
            .collect();
        v.extend(TheoremId::ALL.into_iter().map(CheckId::Theorem));
        v.push(CheckId::Crosscheck);
        v
    }

    pub fn name(self) -> String {
        match self {
            CheckId::Identity(i) => i.name(),
            CheckId::Theorem(t) => t.name().to_string(),
            CheckId::Crosscheck => CROSSCHECK_ID.to_string(),
        }
    }
}

impl FromStr for CheckId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == CROSSCHECK_ID {
            return Ok(CheckId::Crosscheck);
        }
        if let Ok(t) = s.parse::<TheoremId>() {
            return Ok(CheckId::Theorem(t));
        }
        s.parse::<IdentityId>()
            .map(CheckId::Identity)
            .map_err(|_| format!("unknown identity or theorem id {s:?}"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub index: usize,
    pub lhs: String,
    pub rhs: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub id: String,
    pub bound: usize,
    pub verdict: Verdict,
    pub first_failure: Option<Failure>,
    pub ms: u64,
}

impl VerificationReport {
    fn new(id: String, bound: usize, first_failure: Option<Failure>, started: Instant) -> Self {
        VerificationReport {
            id,
            bound,
            verdict: if first_failure.is_some() {
                Verdict::Fail
            } else {
                Verdict::Pass
            },
            first_failure,
            ms: started.elapsed().as_millis() as u64,
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = match self.verdict {
            Verdict::Pass => "pass",
            Verdict::Fail => "FAIL",
        };
        write!(
            f,
            "{:<16} bound={:<4} {verdict} ({} ms)",
            self.id, self.bound, self.ms
        )?;
        if let Some(x) = &self.first_failure {
            write!(f, " at {}: lhs={} rhs={}", x.index, x.lhs, x.rhs)?;
            if let Some(w) = &x.witness {
                write!(f, " [{w}]")?;
            }
        }
        Ok(())
    }
}

/// One claimed equality between two truncated series.
#[derive(Debug, Clone)]
pub struct Comparison {
    pub label: &'static str,
    pub lhs: Series,
    pub rhs: Series,
}

impl Comparison {
    fn new(label: &'static str, lhs: Series, rhs: Series) -> Self {
        Comparison { label, lhs, rhs }
    }

    /// Smallest index where the sides differ.
    pub fn first_mismatch(&self) -> Option<usize> {
        self.lhs
            .coeffs()
            .iter()
            .zip(self.rhs.coeffs())
            .position(|(a, b)| a != b)
    }
}

// ---- series building blocks ----

fn poch(start: usize, step: usize, n: usize, order: usize) -> Series {
    qpoch(start, step, Count::Finite(n), order)
}

fn poch_inf(start: usize, step: usize, order: usize) -> Series {
    qpoch(start, step, Count::Infinite, order)
}

fn recip(sign: Sign, start: usize, step: usize, count: Count, order: usize) -> Series {
    let spec = PochSpec::new(sign, start, step, count).expect("positive start and step");
    pochhammer_reciprocal(&spec, order)
}

/// `1 / (q^start; q^step)_n`.
fn recip_poch(start: usize, step: usize, n: usize, order: usize) -> Series {
    recip(Sign::Minus, start, step, Count::Finite(n), order)
}

/// `1 / (q^start; q^step)_∞`.
fn recip_poch_inf(start: usize, step: usize, order: usize) -> Series {
    recip(Sign::Minus, start, step, Count::Infinite, order)
}

/// `(-q; q)_∞`.
fn neg_q_inf(order: usize) -> Series {
    qpoch_neg(1, 1, Count::Infinite, order)
}

fn family<I: IntoIterator<Item = (usize, Series)>>(terms: I, order: usize) -> Series {
    sum_family(terms, order).expect("declared valuation bounds hold")
}

fn binom2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Class generating function assembled from the separable-class basis:
/// `Σ_m (Σ_{b in basis(m)} q^{|b|}) / (q;q)_m`, plus the empty member for the
/// overlined-above classes.
pub fn separable_gf(class: ClassId, order: usize) -> Series {
    let empty = match class {
        ClassId::Gno | ClassId::Eno => Series::one(order),
        ClassId::Gon | ClassId::Eon => Series::zero(order),
    };
    let terms = (1..).map(|m: usize| {
        let mut numerator = Series::zero(order);
        for b in basis(class, m as u32) {
            numerator = &numerator + &Series::monomial(b.weight() as usize, 1, order);
        }
        (m, &numerator * &recip_poch(1, 1, m, order))
    });
    &empty + &family(terms, order)
}

/// `1/(q;q)_∞ - (-q;q)_∞`, the generating function of partitions with a repeated part.
fn repeated_gf(order: usize) -> Series {
    &recip_poch_inf(1, 1, order) - &neg_q_inf(order)
}

fn eq1_rhs(order: usize) -> Series {
    let d = neg_q_inf(order);
    &d * &d
}

fn eq2_rhs(order: usize) -> Series {
    &eq1_rhs(order) + &repeated_gf(order)
}

fn eq4_rhs(order: usize) -> Series {
    let terms = (1..).map(|m: usize| {
        let mut inner = Series::zero(order);
        for k in 0..m {
            let e = (k + 1) * m - binom2(k + 1);
            inner = &inner + &Series::monomial(e, 1, order);
        }
        (m, &inner * &recip_poch(1, 1, m, order))
    });
    family(terms, order)
}

fn eq5_rhs(order: usize) -> Series {
    let terms = (1..).map(|m: usize| {
        let mut inner = Series::monomial(m, 1, order);
        for k in 1..m {
            let e = k * m - binom2(k);
            inner = &inner + &Series::monomial(e, 1, order);
        }
        (m, &inner * &recip_poch(1, 1, m, order))
    });
    family(terms, order)
}

/// `Σ_{n>=1} q^n (q²;q²)_{n-1}`.
fn cohen_lhs(order: usize) -> Series {
    family(
        (1..).map(|n: usize| (n, poch(2, 2, n - 1, order).shift(n))),
        order,
    )
}

/// `Σ_{n>=1} (-1)^{n-1} q^{n²} / (q;q²)_n`.
fn cohen_rhs(order: usize) -> Series {
    family(
        (1..).map(|n: usize| {
            let sign = if n % 2 == 1 { 1 } else { -1 };
            (n * n, recip_poch(1, 2, n, order).shift(n * n).scale(sign))
        }),
        order,
    )
}

/// `(1/(q;q)_∞) Σ_{n>=1} q^n (q²;q²)_{n-1}`.
fn eq6_middle(order: usize) -> Series {
    &recip_poch_inf(1, 1, order) * &cohen_lhs(order)
}

/// `(-q;q)_∞ Σ_{n>=0} q^{2n+1} / ((1-q^{2n+1}) (q²;q²)_n)`.
fn eq6_right(order: usize) -> Series {
    let terms = (0..).map(|n: usize| {
        let e = 2 * n + 1;
        let mut t = recip_poch(2, 2, n, order).shift(e);
        t.div_binomial(Sign::Minus, e);
        (e, t)
    });
    &neg_q_inf(order) * &family(terms, order)
}

/// `1/(-q;q)_∞ + Σ_{n>=1} q^n / ((1+q^n) (q;q)_{n-1})`.
fn excess_analytic(order: usize) -> Series {
    let first = recip(Sign::Plus, 1, 1, Count::Infinite, order);
    let terms = (1..).map(|n: usize| {
        let mut t = recip_poch(1, 1, n - 1, order).shift(n);
        t.div_binomial(Sign::Plus, n);
        (n, t)
    });
    &first + &family(terms, order)
}

/// Largest part even, smallest odd, minus the reverse, as
/// `Σ_{n>=1} q^{2n}/(q;q)_{2n} - Σ_{m>=0} q^{2m+2}/(q^{2m+2};q)_∞`.
fn excess_even_form(order: usize) -> Series {
    let largest_even = family(
        (1..).map(|n: usize| (2 * n, recip_poch(1, 1, 2 * n, order).shift(2 * n))),
        order,
    );
    let smallest_even = family(
        (0..).map(|m: usize| {
            let e = 2 * m + 2;
            (e, recip_poch_inf(e, 1, order).shift(e))
        }),
        order,
    );
    &largest_even - &smallest_even
}

/// The same difference as
/// `Σ_{m>=0} q^{2m+1}/(q^{2m+1};q)_∞ - Σ_{n>=0} q^{2n+1}/(q;q)_{2n+1}`.
fn excess_odd_form(order: usize) -> Series {
    let smallest_odd = family(
        (0..).map(|m: usize| {
            let e = 2 * m + 1;
            (e, recip_poch_inf(e, 1, order).shift(e))
        }),
        order,
    );
    let largest_odd = family(
        (0..).map(|n: usize| {
            let e = 2 * n + 1;
            (e, recip_poch(1, 1, e, order).shift(e))
        }),
        order,
    );
    &smallest_odd - &largest_odd
}

/// `Σ_{n>=1} q^n (-q;q)_n / (1-q^n)`.
fn hprime_gf(order: usize) -> Series {
    family(
        (1..).map(|n: usize| {
            let mut t = qpoch_neg(1, 1, Count::Finite(n), order).shift(n);
            t.div_binomial(Sign::Minus, n);
            (n, t)
        }),
        order,
    )
}

/// `Σ_{n>=1} q^n (-q;q)_n (q^{n+1};q)_∞ / (q^n;q)_∞`, organised by the
/// smallest non-overlined part.
fn hprime_by_smallest_plain(order: usize) -> Series {
    family(
        (1..).map(|n: usize| {
            let t = &qpoch_neg(1, 1, Count::Finite(n), order) * &poch_inf(n + 1, 1, order);
            (n, (&t * &recip_poch_inf(n, 1, order)).shift(n))
        }),
        order,
    )
}

/// `Σ (σL(n) - σmaex(n)) q^n` by brute force over partitions.
fn chern_brute_force(order: usize) -> Series {
    let values: Vec<i64> = (0..=order as u32)
        .into_par_iter()
        .map(|n| {
            let t = partition_tally(n);
            t.sigma_largest as i64 - t.sigma_maex as i64
        })
        .collect();
    Series::from_i64s(&values, order)
}

fn identity_sides(id: IdentityId, order: usize) -> Vec<Comparison> {
    let c = Comparison::new;
    match id {
        IdentityId::Gno => vec![c(
            "basis sum = (-q;q)^2",
            separable_gf(ClassId::Gno, order),
            eq1_rhs(order),
        )],
        IdentityId::Eno => vec![c(
            "basis sum = closed form",
            separable_gf(ClassId::Eno, order),
            eq2_rhs(order),
        )],
        IdentityId::EonEq => {
            let lhs = &separable_gf(ClassId::Eno, order) - &separable_gf(ClassId::Gno, order);
            vec![c(
                "weak minus strict = 1/(q;q) - (-q;q)",
                lhs,
                repeated_gf(order),
            )]
        }
        IdentityId::GonSep => vec![c(
            "basis sum = double sum",
            separable_gf(ClassId::Gon, order),
            eq4_rhs(order),
        )],
        IdentityId::EonSep => vec![c(
            "basis sum = double sum",
            separable_gf(ClassId::Eon, order),
            eq5_rhs(order),
        )],
        IdentityId::GonNew => {
            let middle = eq6_middle(order);
            vec![
                c(
                    "basis sum = product form",
                    separable_gf(ClassId::Gon, order),
                    middle.clone(),
                ),
                c("product form = odd-part form", middle, eq6_right(order)),
            ]
        }
        IdentityId::EonNew => {
            let rhs = &eq6_right(order) + &repeated_gf(order);
            vec![c(
                "basis sum = odd-part form + repeated",
                separable_gf(ClassId::Eon, order),
                rhs,
            )]
        }
        IdentityId::EnoEq => {
            let lhs = &separable_gf(ClassId::Eon, order) - &separable_gf(ClassId::Gon, order);
            vec![c(
                "weak minus strict = 1/(q;q) - (-q;q)",
                lhs,
                repeated_gf(order),
            )]
        }
        IdentityId::Cohen => vec![c(
            "sum = alternating sum",
            cohen_lhs(order),
            cohen_rhs(order),
        )],
        IdentityId::Chern => vec![c(
            "brute force = product form",
            chern_brute_force(order),
            eq6_middle(order),
        )],
        IdentityId::Euler1 => {
            let at = |e: usize| {
                let lhs = family(
                    (0..).map(|n: usize| (e * n, recip_poch(1, 1, n, order).shift(e * n))),
                    order,
                );
                (lhs, recip_poch_inf(e, 1, order))
            };
            let (l1, r1) = at(1);
            let (l2, r2) = at(2);
            vec![c("t = q", l1, r1), c("t = q^2", l2, r2)]
        }
        IdentityId::Euler2 => {
            let lhs = family(
                (0..).map(|n: usize| {
                    let e = n + binom2(n);
                    (e, recip_poch(1, 1, n, order).shift(e))
                }),
                order,
            );
            vec![c("t = q", lhs, neg_q_inf(order))]
        }
        IdentityId::Euler3 => vec![c(
            "1/(q;q^2) = (-q;q)",
            recip_poch_inf(1, 2, order),
            neg_q_inf(order),
        )],
        IdentityId::Chang1 => {
            let lhs = family(
                (0..).map(|n: usize| (n, recip_poch(2, 2, n, order).shift(n))),
                order,
            );
            vec![c("sum = 1/(q;q^2)", lhs, recip_poch_inf(1, 2, order))]
        }
        IdentityId::Chang2 => {
            let lhs = family(
                (0..).map(|n: usize| (2 * n, recip_poch(2, 2, n, order).shift(2 * n))),
                order,
            );
            vec![c("sum = 1/(q^2;q^2)", lhs, recip_poch_inf(2, 2, order))]
        }
        IdentityId::Gauss => {
            let lhs = family(
                (0..).map(|n: usize| (binom2(n + 1), Series::monomial(binom2(n + 1), 1, order))),
                order,
            );
            let rhs = &poch_inf(2, 2, order) * &recip_poch_inf(1, 2, order);
            vec![c("triangular numbers = product", lhs, rhs)]
        }
        IdentityId::HeineSpec => {
            let lhs = family(
                (0..).map(|n: usize| (n, poch(2, 2, n, order).shift(n))),
                order,
            );
            let inner = family(
                (0..).map(|n: usize| {
                    let mut t = recip_poch(2, 2, n, order).shift(2 * n);
                    t.div_binomial(Sign::Minus, 2 * n + 1);
                    (2 * n, t)
                }),
                order,
            );
            vec![c("transformed sum", lhs, &poch_inf(2, 2, order) * &inner)]
        }
        IdentityId::Lem31(k) => {
            let k = k as usize;
            let lhs = family(
                (k + 1..).map(|m: usize| (m, recip_poch(1, 1, m, order).shift(m))),
                order,
            );
            let rhs = &recip_poch_inf(1, 1, order) - &recip_poch(1, 1, k, order);
            vec![c("at least k+1 parts", lhs, rhs)]
        }
        IdentityId::Distinct => {
            let plus = family(
                (1..).map(|n: usize| (n, qpoch_neg(1, 1, Count::Finite(n - 1), order).shift(n))),
                order,
            );
            let minus = family(
                (1..).map(|n: usize| (n, poch(1, 1, n - 1, order).shift(n))),
                order,
            );
            let one = Series::one(order);
            let minus_q2 = family(
                (1..).map(|n: usize| (2 * n, poch(2, 2, n - 1, order).shift(2 * n))),
                order,
            );
            vec![
                c("t = 1", &one + &plus, neg_q_inf(order)),
                c("t = -1", &one - &minus, poch_inf(1, 1, order)),
                c("t = -1, q -> q^2", minus_q2, &one - &poch_inf(2, 2, order)),
            ]
        }
        IdentityId::Excess1 => {
            let even = excess_even_form(order);
            let rhs = &Series::one(order) + &even.scale(2);
            vec![
                c(
                    "smallest-overlined form = 1 + 2(even form)",
                    excess_analytic(order),
                    rhs,
                ),
                c("even form = odd form", even, excess_odd_form(order)),
            ]
        }
        IdentityId::Hprime => vec![c(
            "smallest-plain form = H' form",
            hprime_by_smallest_plain(order),
            hprime_gf(order),
        )],
    }
}

fn report_comparisons(
    id: String,
    bound: usize,
    comparisons: &[Comparison],
    started: Instant,
) -> VerificationReport {
    let failure = comparisons
        .iter()
        .filter_map(|c| c.first_mismatch().map(|i| (i, c)))
        .min_by_key(|(i, _)| *i)
        .map(|(i, c)| Failure {
            index: i,
            lhs: c.lhs.coeffs()[i].to_string(),
            rhs: c.rhs.coeffs()[i].to_string(),
            witness: Some(c.label.to_string()),
        });
    VerificationReport::new(id, bound, failure, started)
}

pub fn verify_identity(id: IdentityId, order: usize) -> VerificationReport {
    let started = Instant::now();
    let sides = identity_sides(id, order.max(1));
    report_comparisons(id.name(), order, &sides, started)
}

/// One integer relation checked at one `n`.
struct Check {
    label: &'static str,
    lhs: i64,
    rhs: String,
    ok: bool,
}

fn eq(label: &'static str, lhs: i64, rhs: i64) -> Check {
    Check {
        label,
        lhs,
        rhs: rhs.to_string(),
        ok: lhs == rhs,
    }
}

fn holds(label: &'static str, lhs: i64, rhs: &str, ok: bool) -> Check {
    Check {
        label,
        lhs,
        rhs: rhs.to_string(),
        ok,
    }
}

fn theorem_checks(id: TheoremId, r: &CountRecord, series: &[i64]) -> Vec<Check> {
    let n = r.n;
    let ab = &r.ab_diffs;
    let i = |x: u64| x as i64;
    match id {
        TheoremId::Parity => vec![
            holds("A-B (N>=O) even", ab.nge_o, "even", ab.nge_o % 2 == 0),
            if n >= 3 {
                holds("A-B (N>=O) positive", ab.nge_o, "> 0", ab.nge_o > 0)
            } else {
                holds("A-B (N>=O) nonnegative", ab.nge_o, ">= 0", ab.nge_o >= 0)
            },
        ],
        TheoremId::TwoPe => {
            let mut v = vec![eq("A-B (N>O) = 2 p_e", ab.ngt_o, 2 * i(r.p_e))];
            if n >= 2 {
                v.push(holds("A-B (N>O) positive", ab.ngt_o, "> 0", ab.ngt_o > 0));
            }
            v
        }
        TheoremId::D => vec![eq("A-B (O>=N) = D", ab.oge_n, i(r.d))],
        TheoremId::Hprime => vec![
            eq("A-B (O>N) = H'", ab.ogt_n, i(r.hprime_on)),
            eq(
                "H' = series coefficient",
                i(r.hprime_on),
                series[n as usize],
            ),
        ],
        TheoremId::Excess1 => vec![
            eq(
                "A-B (N>=O) = 2(p_eo - p_oe)",
                ab.nge_o,
                2 * (i(r.p_eo) - i(r.p_oe)),
            ),
            eq(
                "A-B (N>=O) = series coefficient",
                ab.nge_o,
                series[n as usize],
            ),
        ],
        TheoremId::Excess2 => vec![if n >= 3 {
            holds(
                "p_eo - p_oe positive",
                i(r.p_eo) - i(r.p_oe),
                "> 0",
                r.p_eo > r.p_oe,
            )
        } else {
            holds(
                "p_eo - p_oe nonnegative",
                i(r.p_eo) - i(r.p_oe),
                ">= 0",
                r.p_eo >= r.p_oe,
            )
        }],
        TheoremId::SigmaMex => vec![
            eq("sigma mex = D2", i(r.sigma_mex), i(r.d2)),
            eq("D2 = strict overlined-above count", i(r.d2), i(r.gno)),
        ],
        TheoremId::Cor22 => vec![eq(
            "odd-largest-plain count = strict plain-above count",
            i(r.cor22),
            i(r.gon),
        )],
        TheoremId::ChernCount => vec![eq(
            "sigma L - sigma maex = strict plain-above count",
            i(r.sigma_l) - i(r.sigma_maex),
            i(r.gon),
        )],
        TheoremId::Er => vec![
            eq("E_ON = R", i(r.e_on), i(r.r)),
            eq("E_NO = R", i(r.e_no), i(r.r)),
        ],
    }
}

fn series_values(s: &Series) -> Vec<i64> {
    s.coeffs()
        .iter()
        .map(|c| i64::try_from(c).expect("coefficient fits in i64"))
        .collect()
}

fn theorem_series(id: TheoremId, n_max: u32) -> Vec<i64> {
    let order = n_max as usize;
    match id {
        TheoremId::Hprime => series_values(&hprime_gf(order)),
        TheoremId::Excess1 => series_values(&excess_analytic(order)),
        _ => Vec::new(),
    }
}

fn run_theorem(
    id: TheoremId,
    records: &[CountRecord],
    n_max: u32,
    started: Instant,
) -> VerificationReport {
    let series = theorem_series(id, n_max);
    let failure = records
        .iter()
        .filter(|r| r.n >= 1 && r.n <= n_max)
        .find_map(|r| {
            theorem_checks(id, r, &series)
                .into_iter()
                .find(|c| !c.ok)
                .map(|c| Failure {
                    index: r.n as usize,
                    lhs: c.lhs.to_string(),
                    rhs: c.rhs,
                    witness: Some(c.label.to_string()),
                })
        });
    VerificationReport::new(id.name().to_string(), n_max as usize, failure, started)
}

pub fn verify_theorem(id: TheoremId, n_max: u32) -> VerificationReport {
    let started = Instant::now();
    let records = count_records(n_max);
    run_theorem(id, &records, n_max, started)
}

/// Enumerated class counts against the closed-form generating functions, and
/// the equal-boundary counts against `1/(q;q)_∞ - (-q;q)_∞`.
pub fn crosscheck_enumeration(n_max: u32) -> VerificationReport {
    let started = Instant::now();
    let records = count_records(n_max);
    crosscheck_records(&records, n_max, started)
}

fn crosscheck_records(records: &[CountRecord], n_max: u32, started: Instant) -> VerificationReport {
    let order = n_max as usize;
    let repeated = series_values(&repeated_gf(order));
    type Side = (&'static str, Vec<i64>, fn(&CountRecord) -> u64);
    let sides: [Side; 6] = [
        (
            "strict overlined-above",
            series_values(&eq1_rhs(order)),
            |r| r.gno,
        ),
        (
            "weak overlined-above",
            series_values(&eq2_rhs(order)),
            |r| r.eno,
        ),
        ("strict plain-above", series_values(&eq4_rhs(order)), |r| {
            r.gon
        }),
        ("weak plain-above", series_values(&eq5_rhs(order)), |r| {
            r.eon
        }),
        ("SO = LN", repeated.clone(), |r| r.e_on),
        ("SN = LO", repeated, |r| r.e_no),
    ];
    let failure = records.iter().find_map(|r| {
        let n = r.n as usize;
        sides.iter().find_map(|(label, coeffs, get)| {
            let want = coeffs[n];
            let got = get(r) as i64;
            (got != want).then(|| Failure {
                index: n,
                lhs: got.to_string(),
                rhs: want.to_string(),
                witness: Some(label.to_string()),
            })
        })
    });
    VerificationReport::new(CROSSCHECK_ID.to_string(), order, failure, started)
}

/// Runs one registry entry; `order` overrides identity truncation orders.
pub fn verify(id: CheckId, order: Option<usize>, n_max: u32) -> VerificationReport {
    match id {
        CheckId::Identity(i) => verify_identity(i, order.unwrap_or_else(|| i.default_order())),
        CheckId::Theorem(t) => verify_theorem(t, n_max),
        CheckId::Crosscheck => crosscheck_enumeration(n_max),
    }
}

/// Runs the given entries concurrently; reports come back sorted by id.
pub fn verify_many(ids: &[CheckId], order: Option<usize>, n_max: u32) -> Vec<VerificationReport> {
    let records = count_records(n_max);
    let mut reports: Vec<VerificationReport> = ids
        .par_iter()
        .map(|&id| match id {
            CheckId::Theorem(t) => run_theorem(t, &records, n_max, Instant::now()),
            CheckId::Crosscheck => crosscheck_records(&records, n_max, Instant::now()),
            CheckId::Identity(_) => verify(id, order, n_max),
        })
        .collect();
    reports.sort_by(|a, b| a.id.cmp(&b.id));
    reports
}

pub fn verify_all(order: Option<usize>, n_max: u32) -> Vec<VerificationReport> {
    verify_many(&CheckId::all(), order, n_max)
}
