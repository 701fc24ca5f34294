//! Shared fixtures and independent oracles for the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use cycle_ei::Hypergraph;

/// Listed example edge sets, keyed by (variant name, n).
pub const FIXTURES: &[(&str, usize, &[&[i64]])] = &[
    (
        "k4-thm5",
        11,
        &[
            &[1, 2, 3, 6],
            &[2, 3, 4, 7],
            &[3, 4, 5, 8],
            &[4, 5, 6, 9],
            &[5, 6, 7, 10],
            &[6, 7, 8, 11],
            &[7, 8, 9, 1],
            &[8, 9, 10, 2],
            &[9, 10, 11, 3],
            &[10, 11, 1, 4],
            &[11, 1, 2, 5],
        ],
    ),
    (
        "k4-thm6",
        12,
        &[
            &[1, 2, 3, 4],
            &[3, 4, 5, 6],
            &[5, 6, 7, 8],
            &[7, 8, 9, 10],
            &[9, 10, 11, 12],
            &[11, 12, 1, 2],
            &[2, 3, 8, 9],
            &[4, 5, 10, 11],
            &[6, 7, 12, 1],
        ],
    ),
    (
        "k4-thm6",
        13,
        &[
            &[1, 2, 3, 4],
            &[3, 4, 5, 6],
            &[5, 6, 7, 8],
            &[7, 8, 9, 10],
            &[9, 10, 11, 12],
            &[11, 12, 13, 1],
            &[2, 3, 8, 9],
            &[4, 5, 10, 11],
            &[6, 7, 12, 13],
            &[13, 1, 2, 5],
        ],
    ),
    (
        "k4-thm6",
        14,
        &[
            &[1, 2, 3, 4],
            &[3, 4, 5, 6],
            &[5, 6, 7, 8],
            &[7, 8, 9, 10],
            &[9, 10, 11, 12],
            &[11, 12, 13, 14],
            &[13, 14, 1, 2],
            &[2, 3, 8, 9],
            &[4, 5, 10, 11],
            &[6, 7, 12, 13],
            &[14, 1, 8, 9],
        ],
    ),
    (
        "k4-thm6",
        15,
        &[
            &[1, 2, 3, 4],
            &[3, 4, 5, 6],
            &[5, 6, 7, 8],
            &[7, 8, 9, 10],
            &[9, 10, 11, 12],
            &[11, 12, 13, 14],
            &[13, 14, 15, 1],
            &[2, 3, 8, 9],
            &[4, 5, 10, 11],
            &[6, 7, 12, 13],
            &[14, 15, 8, 9],
            &[15, 1, 2, 5],
        ],
    ),
    (
        "k5-lemma-32",
        18,
        &[
            &[1, 2, 3, 7, 8],
            &[4, 5, 6, 12, 13],
            &[7, 8, 9, 13, 14],
            &[10, 11, 12, 18, 1],
            &[13, 14, 15, 1, 2],
            &[16, 17, 18, 6, 7],
            &[2, 3, 4, 9, 10],
            &[5, 6, 7, 10, 11],
            &[8, 9, 10, 15, 16],
            &[11, 12, 13, 16, 17],
            &[14, 15, 16, 3, 4],
            &[17, 18, 1, 4, 5],
        ],
    ),
    (
        "k5-lemma-32",
        19,
        &[
            &[1, 2, 3, 9, 10],
            &[4, 5, 6, 12, 13],
            &[2, 3, 4, 7, 8],
            &[5, 6, 7, 10, 11],
            &[7, 8, 9, 13, 14],
            &[8, 9, 10, 15, 16],
            &[10, 11, 12, 18, 19],
            &[11, 12, 13, 16, 17],
            &[13, 14, 15, 19, 1],
            &[14, 15, 16, 3, 4],
            &[16, 17, 18, 6, 7],
            &[17, 18, 19, 1, 2],
            &[4, 5, 9, 18, 19],
        ],
    ),
    (
        "k5-lemma-32",
        20,
        &[
            &[1, 2, 3, 9, 10],
            &[4, 5, 6, 12, 13],
            &[2, 3, 4, 7, 8],
            &[5, 6, 7, 10, 11],
            &[7, 8, 9, 13, 14],
            &[8, 9, 10, 15, 16],
            &[10, 11, 12, 19, 20],
            &[11, 12, 13, 16, 17],
            &[13, 14, 15, 20, 1],
            &[14, 15, 16, 3, 4],
            &[16, 17, 18, 6, 7],
            &[17, 18, 19, 4, 5],
            &[18, 19, 20, 1, 2],
        ],
    ),
    (
        "k5-lemma-32",
        21,
        &[
            &[1, 2, 3, 9, 10],
            &[4, 5, 6, 12, 13],
            &[7, 8, 9, 15, 16],
            &[10, 11, 12, 18, 19],
            &[13, 14, 15, 21, 1],
            &[16, 17, 18, 3, 4],
            &[19, 20, 21, 6, 7],
            &[2, 3, 4, 7, 8],
            &[5, 6, 7, 10, 11],
            &[8, 9, 10, 13, 14],
            &[11, 12, 13, 16, 17],
            &[14, 15, 16, 19, 20],
            &[17, 18, 19, 1, 2],
            &[20, 21, 1, 4, 5],
        ],
    ),
    (
        "k5-thm9",
        20,
        &[
            &[1, 2, 3, 4, 5],
            &[6, 7, 8, 9, 10],
            &[11, 12, 13, 14, 15],
            &[16, 17, 18, 19, 20],
            &[4, 5, 6, 18, 19],
            &[9, 10, 11, 3, 4],
            &[14, 15, 16, 8, 9],
            &[19, 20, 1, 13, 14],
            &[5, 6, 7, 12, 13],
            &[10, 11, 12, 17, 18],
            &[15, 16, 17, 2, 3],
            &[20, 1, 2, 7, 8],
        ],
    ),
];

/// 3-regular 6-uniform hypergraphs with `EI = C_24` and `EI = C_26`; every
/// hyperedge is two disjoint runs of three.
pub const SIX_24: &[[i64; 6]] = &[
    [1, 2, 3, 6, 7, 8],
    [2, 3, 4, 9, 10, 11],
    [3, 4, 5, 12, 13, 14],
    [4, 5, 6, 15, 16, 17],
    [5, 6, 7, 18, 19, 20],
    [7, 8, 9, 13, 14, 15],
    [8, 9, 10, 21, 22, 23],
    [10, 11, 12, 17, 18, 19],
    [11, 12, 13, 22, 23, 24],
    [14, 15, 16, 20, 21, 22],
    [1, 16, 17, 18, 23, 24],
    [1, 2, 19, 20, 21, 24],
];

pub const SIX_26: &[[i64; 6]] = &[
    [1, 2, 3, 6, 7, 8],
    [2, 3, 4, 9, 10, 11],
    [3, 4, 5, 12, 13, 14],
    [4, 5, 6, 15, 16, 17],
    [5, 6, 7, 18, 19, 20],
    [7, 8, 9, 13, 14, 15],
    [8, 9, 10, 19, 20, 21],
    [10, 11, 12, 24, 25, 26],
    [11, 12, 13, 21, 22, 23],
    [14, 15, 16, 22, 23, 24],
    [1, 2, 16, 17, 18, 26],
    [17, 18, 19, 23, 24, 25],
    [1, 20, 21, 22, 25, 26],
];

/// Sorted, deduplicated label sets: the canonical form used for comparisons.
pub fn label_sets<L: AsRef<[i64]>>(lists: &[L]) -> BTreeSet<Vec<u32>> {
    lists
        .iter()
        .map(|l| {
            let mut v: Vec<u32> = l.as_ref().iter().map(|&x| x as u32).collect();
            v.sort_unstable();
            v
        })
        .collect()
}

pub fn hypergraph_sets(h: &Hypergraph) -> BTreeSet<Vec<u32>> {
    h.edges().iter().map(|e| e.labels()).collect()
}

/// `EI(H)` straight from its definition on plain label sets.
pub fn ei_oracle(edges: &[Vec<u32>]) -> BTreeSet<Vec<u32>> {
    let mut out = BTreeSet::new();
    for i in 0..edges.len() {
        for j in 0..edges.len() {
            if i == j {
                continue;
            }
            let x: Vec<u32> = edges[i]
                .iter()
                .filter(|v| edges[j].contains(v))
                .copied()
                .collect();
            if x.len() >= 2 {
                out.insert(x);
            }
        }
    }
    out
}

pub fn cycle_oracle(n: u32) -> BTreeSet<Vec<u32>> {
    (1..=n)
        .map(|i| {
            let j = i % n + 1;
            vec![i.min(j), i.max(j)]
        })
        .collect()
}

pub fn is_cycle_oracle(h: &Hypergraph) -> bool {
    let edges: Vec<Vec<u32>> = h.edges().iter().map(|e| e.labels()).collect();
    ei_oracle(&edges) == cycle_oracle(h.n() as u32)
}

fn k_subsets(n: usize, k: usize) -> Vec<u64> {
    (0u64..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .collect()
}

/// Plain enumeration of every family of at most `max_edges` `k`-subsets of
/// `{1..n}`; true iff one of them has `EI = C_n`.
pub fn brute_force_exists(k: usize, n: usize, max_edges: usize) -> bool {
    let sets = k_subsets(n, k);
    let cycle: BTreeSet<u64> = (0..n)
        .map(|i| (1u64 << i) | (1u64 << ((i + 1) % n)))
        .collect();
    let mut chosen = Vec::new();
    families(&sets, 0, max_edges, &mut chosen, &cycle)
}

fn families(
    sets: &[u64],
    from: usize,
    room: usize,
    chosen: &mut Vec<u64>,
    cycle: &BTreeSet<u64>,
) -> bool {
    let mut ei = BTreeSet::new();
    for (i, a) in chosen.iter().enumerate() {
        for b in &chosen[i + 1..] {
            if (a & b).count_ones() >= 2 {
                ei.insert(a & b);
            }
        }
    }
    if &ei == cycle {
        return true;
    }
    if room == 0 {
        return false;
    }
    for i in from..sets.len() {
        chosen.push(sets[i]);
        let hit = families(sets, i + 1, room - 1, chosen, cycle);
        chosen.pop();
        if hit {
            return true;
        }
    }
    false
}
