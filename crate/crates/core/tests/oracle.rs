//! Values frozen from an independent brute-force enumerator written outside
//! this crate.

use overpart::classes::{classify, ClassId};
use overpart::counting::{count_record, AbDiffs, CountRecord};
use overpart::partitions::{enumerate_overpartitions, Overpartition};

const OVERPARTITION_TOTALS: [usize; 21] = [
    1, 2, 4, 8, 14, 24, 40, 64, 100, 154, 232, 344, 504, 728, 1040, 1472, 2062, 2864, 3948, 5400,
    7336,
];

#[test]
fn overpartition_totals() {
    for (n, &want) in OVERPARTITION_TOTALS.iter().enumerate() {
        assert_eq!(enumerate_overpartitions(n as u32).count(), want, "n={n}");
    }
}

#[test]
fn enumeration_has_no_duplicates() {
    for n in 0..=14 {
        let all: Vec<Overpartition> = enumerate_overpartitions(n).collect();
        let set: std::collections::BTreeSet<_> = all.iter().cloned().collect();
        assert_eq!(all.len(), set.len());
        assert!(all.iter().all(|o| o.weight() == n));
    }
}

#[allow(clippy::too_many_arguments)]
fn record(
    n: u32,
    classes: [u64; 4],
    d: u64,
    d2: u64,
    r: u64,
    parity: [u64; 3],
    equal: [u64; 3],
    cor22: u64,
    sigmas: [u64; 3],
    ab: [i64; 4],
) -> CountRecord {
    CountRecord {
        n,
        gno: classes[0],
        eno: classes[1],
        gon: classes[2],
        eon: classes[3],
        d,
        d2,
        r,
        p_e: parity[0],
        p_eo: parity[1],
        p_oe: parity[2],
        e_on: equal[0],
        e_no: equal[1],
        hprime_on: equal[2],
        cor22,
        sigma_mex: sigmas[0],
        sigma_l: sigmas[1],
        sigma_maex: sigmas[2],
        ab_diffs: AbDiffs {
            nge_o: ab[0],
            ngt_o: ab[1],
            oge_n: ab[2],
            ogt_n: ab[3],
        },
    }
}

#[test]
fn frozen_records() {
    let rows = [
        record(
            0,
            [1, 1, 0, 0],
            1,
            1,
            0,
            [1, 0, 0],
            [0, 0, 0],
            0,
            [1, 0, 0],
            [1, 1, 0, 0],
        ),
        record(
            1,
            [2, 2, 1, 1],
            1,
            2,
            0,
            [0, 0, 0],
            [0, 0, 1],
            1,
            [2, 1, 0],
            [0, 0, 1, 1],
        ),
        record(
            2,
            [3, 4, 2, 3],
            1,
            3,
            1,
            [1, 0, 0],
            [1, 1, 3],
            2,
            [3, 3, 1],
            [0, 2, 1, 3],
        ),
        record(
            3,
            [6, 7, 4, 5],
            2,
            6,
            1,
            [1, 1, 0],
            [1, 1, 4],
            4,
            [6, 6, 2],
            [2, 2, 2, 4],
        ),
        record(
            4,
            [9, 12, 6, 9],
            2,
            9,
            3,
            [3, 1, 0],
            [3, 3, 6],
            6,
            [9, 12, 6],
            [2, 6, 2, 6],
        ),
        record(
            6,
            [22, 29, 15, 22],
            4,
            22,
            7,
            [6, 3, 0],
            [7, 7, 10],
            15,
            [22, 35, 20],
            [6, 12, 4, 10],
        ),
        record(
            20,
            [1598, 2161, 912, 1475],
            64,
            1598,
            563,
            [317, 255, 43],
            [563, 563, 106],
            912,
            [1598, 4630, 3718],
            [424, 634, 64, 106],
        ),
    ];
    for want in rows {
        assert_eq!(count_record(want.n), want, "n={}", want.n);
    }
}

/// Class membership straight from the defining comparisons between every
/// overlined and every plain size.
fn naive_classes(o: &Overpartition) -> [bool; 4] {
    let over: Vec<u32> = o.overlined_sizes().collect();
    let plain: Vec<u32> = o.plain_sizes().collect();
    let all_pairs = |f: fn(u32, u32) -> bool| over.iter().all(|&a| plain.iter().all(|&b| f(a, b)));
    [
        all_pairs(|a, b| a > b),
        all_pairs(|a, b| a >= b),
        !plain.is_empty() && all_pairs(|a, b| b > a),
        !plain.is_empty() && all_pairs(|a, b| b >= a),
    ]
}

#[test]
fn classify_matches_pairwise_definition() {
    for n in 0..=14 {
        for o in enumerate_overpartitions(n) {
            let set = classify(&o);
            let got: Vec<bool> = ClassId::ALL.iter().map(|&c| set.contains(c)).collect();
            assert_eq!(got, naive_classes(&o), "{o}");
        }
    }
}
