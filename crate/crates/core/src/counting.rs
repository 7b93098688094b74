//! Counting functions computed by exhaustive enumeration.
//!
//! Nothing here consults a generating function: these numbers are the
//! brute-force side that the series identities are checked against.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::classes::ClassId;
use crate::partitions::{
    boundary_stats, ell_stats, enumerate_overpartitions, for_each_partition, maex_of, mex_of,
    Overpartition,
};

/// Which ℓ-statistic decides the sign in an `A - B` difference.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AbVariant {
    NgeO,
    NgtO,
    OgeN,
    OgtN,
}

impl AbVariant {
    pub const ALL: [AbVariant; 4] = [
        AbVariant::NgeO,
        AbVariant::NgtO,
        AbVariant::OgeN,
        AbVariant::OgtN,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AbVariant::NgeO => "ngeo",
            AbVariant::NgtO => "ngto",
            AbVariant::OgeN => "ogen",
            AbVariant::OgtN => "ogtn",
        }
    }

    /// Sign contribution of `op`, or 0 when `op` is outside the variant's
    /// domain (the O-variants require a non-overlined part).
    pub fn sign(self, op: &Overpartition) -> i64 {
        let st = ell_stats(op);
        let ell = match self {
            AbVariant::NgeO => st.n_ge_o,
            AbVariant::NgtO => st.n_gt_o,
            AbVariant::OgeN | AbVariant::OgtN if op.num_plain() == 0 => return 0,
            AbVariant::OgeN => st.o_ge_n,
            AbVariant::OgtN => st.o_gt_n,
        };
        if ell % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

impl fmt::Display for AbVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AbVariant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        AbVariant::ALL
            .into_iter()
            .find(|v| v.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown variant {s:?}"))
    }
}

/// `A(n) - B(n)` for the given variant.
pub fn ab_difference(variant: AbVariant, n: u32) -> i64 {
    enumerate_overpartitions(n)
        .map(|op| variant.sign(&op))
        .sum()
}

pub fn class_count(class: ClassId, n: u32) -> u64 {
    enumerate_overpartitions(n)
        .filter(|op| class.contains(op))
        .count() as u64
}

/// The largest non-overlined part is odd and every smaller non-overlined
/// part is even.
pub fn cor22_predicate(op: &Overpartition) -> bool {
    let mut plain = op.plain_sizes();
    let Some(largest) = plain.next() else {
        return false;
    };
    largest % 2 == 1 && plain.filter(|&s| s < largest).all(|s| s % 2 == 0)
}

pub fn cor22_count(n: u32) -> u64 {
    enumerate_overpartitions(n).filter(cor22_predicate).count() as u64
}

/// Nonempty, `SO = LN`.
pub fn is_e_on(op: &Overpartition) -> bool {
    let b = boundary_stats(op);
    b.so >= 1 && b.so == b.ln
}

/// Nonempty, `SN = LO`.
pub fn is_e_no(op: &Overpartition) -> bool {
    let b = boundary_stats(op);
    b.sn >= 1 && b.sn == b.lo
}

/// Member of the weak plain-above class whose plain parts all share one size.
pub fn is_hprime_on(op: &Overpartition) -> bool {
    let b = boundary_stats(op);
    ClassId::Eon.contains(op) && b.ln == b.sn
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct AbDiffs {
    pub nge_o: i64,
    pub ngt_o: i64,
    pub oge_n: i64,
    pub ogt_n: i64,
}

impl AbDiffs {
    pub fn get(&self, v: AbVariant) -> i64 {
        match v {
            AbVariant::NgeO => self.nge_o,
            AbVariant::NgtO => self.ngt_o,
            AbVariant::OgeN => self.oge_n,
            AbVariant::OgtN => self.ogt_n,
        }
    }
}

/// Statistics gathered in one sweep over the ordinary partitions of `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct PartitionTally {
    pub total: u64,
    pub distinct: u64,
    pub repeated: u64,
    pub even_length: u64,
    /// largest part even, smallest part odd
    pub even_odd: u64,
    /// largest part odd, smallest part even
    pub odd_even: u64,
    pub sigma_mex: u64,
    pub sigma_largest: u64,
    pub sigma_maex: u64,
}

pub fn partition_tally(n: u32) -> PartitionTally {
    let mut t = PartitionTally::default();
    for_each_partition(n, |p| {
        t.total += 1;
        if p.windows(2).all(|w| w[0] > w[1]) {
            t.distinct += 1;
        } else {
            t.repeated += 1;
        }
        if p.len() % 2 == 0 {
            t.even_length += 1;
        }
        t.sigma_mex += mex_of(p) as u64;
        if let (Some(&big), Some(&small)) = (p.first(), p.last()) {
            match (big % 2, small % 2) {
                (0, 1) => t.even_odd += 1,
                (1, 0) => t.odd_even += 1,
                _ => {}
            }
            t.sigma_largest += big as u64;
            t.sigma_maex += maex_of(p).expect("nonempty") as u64;
        }
    });
    t
}

/// Ordered pairs of distinct partitions with total weight `n`.
pub fn d2(n: u32) -> u64 {
    let d: Vec<u64> = (0..=n).map(|a| partition_tally(a).distinct).collect();
    (0..=n as usize).map(|a| d[a] * d[n as usize - a]).sum()
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct CountRecord {
    pub n: u32,
    pub gno: u64,
    pub eno: u64,
    pub gon: u64,
    pub eon: u64,
    pub d: u64,
    pub d2: u64,
    pub r: u64,
    pub p_e: u64,
    pub p_eo: u64,
    pub p_oe: u64,
    pub e_on: u64,
    pub e_no: u64,
    pub hprime_on: u64,
    pub cor22: u64,
    pub sigma_mex: u64,
    pub sigma_l: u64,
    pub sigma_maex: u64,
    pub ab_diffs: AbDiffs,
}

pub const CSV_HEADER: &str = "n,gno,eno,gon,eon,d,d2,r,p_e,p_eo,p_oe,e_on,e_no,hprime_on,cor22,\
sigma_mex,sigma_l,sigma_maex,ab_nge_o,ab_ngt_o,ab_oge_n,ab_ogt_n";

impl CountRecord {
    pub fn class_count(&self, c: ClassId) -> u64 {
        match c {
            ClassId::Gno => self.gno,
            ClassId::Eno => self.eno,
            ClassId::Gon => self.gon,
            ClassId::Eon => self.eon,
        }
    }

    /// One row matching [`CSV_HEADER`].
    pub fn csv_row(&self) -> String {
        let a = &self.ab_diffs;
        [
            self.n as i64,
            self.gno as i64,
            self.eno as i64,
            self.gon as i64,
            self.eon as i64,
            self.d as i64,
            self.d2 as i64,
            self.r as i64,
            self.p_e as i64,
            self.p_eo as i64,
            self.p_oe as i64,
            self.e_on as i64,
            self.e_no as i64,
            self.hprime_on as i64,
            self.cor22 as i64,
            self.sigma_mex as i64,
            self.sigma_l as i64,
            self.sigma_maex as i64,
            a.nge_o,
            a.ngt_o,
            a.oge_n,
            a.ogt_n,
        ]
        .iter()
        .map(i64::to_string)
        .collect::<Vec<_>>()
        .join(",")
    }
}

pub fn count_record(n: u32) -> CountRecord {
    let mut rec = CountRecord {
        n,
        ..Default::default()
    };
    for op in enumerate_overpartitions(n) {
        rec.gno += ClassId::Gno.contains(&op) as u64;
        rec.eno += ClassId::Eno.contains(&op) as u64;
        rec.gon += ClassId::Gon.contains(&op) as u64;
        rec.eon += ClassId::Eon.contains(&op) as u64;
        rec.e_on += is_e_on(&op) as u64;
        rec.e_no += is_e_no(&op) as u64;
        rec.hprime_on += is_hprime_on(&op) as u64;
        rec.cor22 += cor22_predicate(&op) as u64;
        rec.ab_diffs.nge_o += AbVariant::NgeO.sign(&op);
        rec.ab_diffs.ngt_o += AbVariant::NgtO.sign(&op);
        rec.ab_diffs.oge_n += AbVariant::OgeN.sign(&op);
        rec.ab_diffs.ogt_n += AbVariant::OgtN.sign(&op);
    }
    let t = partition_tally(n);
    rec.d = t.distinct;
    rec.r = t.repeated;
    rec.p_e = t.even_length;
    rec.p_eo = t.even_odd;
    rec.p_oe = t.odd_even;
    rec.sigma_mex = t.sigma_mex;
    rec.sigma_l = t.sigma_largest;
    rec.sigma_maex = t.sigma_maex;
    rec.d2 = d2(n);
    rec
}

/// Records for `0..=n_max`, computed in parallel and returned in order.
pub fn count_records(n_max: u32) -> Vec<CountRecord> {
    (0..=n_max).into_par_iter().map(count_record).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn record_at_four() {
        let r = count_record(4);
        assert_eq!((r.gno, r.eno, r.gon, r.eon), (9, 12, 6, 9));
        assert_eq!((r.d2, r.sigma_mex, r.d, r.p_e), (9, 9, 2, 3));
    }

    #[test]
    fn record_at_six() {
        let r = count_record(6);
        assert_eq!((r.e_on, r.e_no, r.r), (7, 7, 7));
    }

    #[test]
    fn record_at_zero() {
        let r = count_record(0);
        assert_eq!((r.gno, r.eno, r.gon, r.eon), (1, 1, 0, 0));
        assert_eq!((r.d, r.d2, r.p_e, r.sigma_mex), (1, 1, 1, 1));
        assert_eq!(
            r.ab_diffs,
            AbDiffs {
                nge_o: 1,
                ngt_o: 1,
                oge_n: 0,
                ogt_n: 0
            }
        );
    }

    #[test]
    fn ab_examples() {
        assert_eq!(ab_difference(AbVariant::OgeN, 4), 2);
        for n in 1..=12 {
            let t = partition_tally(n);
            assert_eq!(ab_difference(AbVariant::NgtO, n), 2 * t.even_length as i64);
            assert_eq!(
                ab_difference(AbVariant::NgeO, n),
                2 * (t.even_odd as i64 - t.odd_even as i64)
            );
        }
    }

    #[test]
    fn cor22_small_cases() {
        assert_eq!(cor22_count(1), 1);
        let op: Overpartition = "4,3,2".parse().unwrap();
        assert!(!cor22_predicate(&op));
        let op: Overpartition = "5~,3,2~,2".parse().unwrap();
        assert!(cor22_predicate(&op));
        let op: Overpartition = "3,3,2".parse().unwrap();
        assert!(cor22_predicate(&op));
        let only_overlined: Overpartition = "3~".parse().unwrap();
        assert!(!cor22_predicate(&only_overlined));
    }

    #[test]
    fn frozen_row_twenty() {
        // values from an independent brute-force script
        let r = count_record(20);
        assert_eq!((r.gno, r.eno, r.gon, r.eon), (1598, 2161, 912, 1475));
        assert_eq!((r.d, r.d2, r.r, r.p_e), (64, 1598, 563, 317));
        assert_eq!((r.p_eo, r.p_oe, r.e_on, r.e_no), (255, 43, 563, 563));
        assert_eq!((r.hprime_on, r.cor22), (106, 912));
        assert_eq!((r.sigma_mex, r.sigma_l, r.sigma_maex), (1598, 4630, 3718));
        assert_eq!(
            r.ab_diffs,
            AbDiffs {
                nge_o: 424,
                ngt_o: 634,
                oge_n: 64,
                ogt_n: 106
            }
        );
    }

    #[test]
    fn csv_row_matches_header() {
        let r = count_record(3);
        assert_eq!(
            r.csv_row().split(',').count(),
            CSV_HEADER.split(',').count()
        );
        assert!(r.csv_row().starts_with("3,6,7,4,5,"));
    }
}
