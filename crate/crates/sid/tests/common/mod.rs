//! Test-side oracles and generators, implemented independently of the
//! library internals: naive hash-map measures over explicit (outcome, mass)
//! lists, bitmask case enumeration, and seeded random table generators.

#![allow(dead_code)]

use std::collections::HashMap;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use sid::JointTable;

pub type Row = (Vec<String>, f64);

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Support rows of a table as owned strings, for feeding the naive oracles.
pub fn rows_of(table: &JointTable) -> Vec<Row> {
    table
        .support()
        .map(|(outcome, p)| (outcome.into_iter().map(str::to_string).collect(), p))
        .collect()
}

/// Naive joint entropy over selected columns.
pub fn naive_entropy(rows: &[Row], columns: &[usize]) -> f64 {
    let mut masses: HashMap<Vec<&str>, f64> = HashMap::new();
    for (outcome, p) in rows {
        let key: Vec<&str> = columns.iter().map(|&c| outcome[c].as_str()).collect();
        *masses.entry(key).or_insert(0.0) += p;
    }
    masses
        .values()
        .filter(|&&p| p > 0.0)
        .map(|&p| -p * p.log2())
        .sum()
}

pub fn naive_mi(rows: &[Row], a: &[usize], b: &[usize]) -> f64 {
    let ab: Vec<usize> = a.iter().chain(b).copied().collect();
    naive_entropy(rows, a) + naive_entropy(rows, b) - naive_entropy(rows, &ab)
}

pub fn naive_cmi(rows: &[Row], a: &[usize], b: &[usize], given: &[usize]) -> f64 {
    let ag: Vec<usize> = a.iter().chain(given).copied().collect();
    let bg: Vec<usize> = b.iter().chain(given).copied().collect();
    let abg: Vec<usize> = a.iter().chain(b).chain(given).copied().collect();
    naive_entropy(rows, &ag) + naive_entropy(rows, &bg)
        - naive_entropy(rows, &abg)
        - naive_entropy(rows, given)
}

pub fn naive_tc(rows: &[Row], columns: &[usize]) -> f64 {
    let singles: f64 = columns.iter().map(|&c| naive_entropy(rows, &[c])).sum();
    singles - naive_entropy(rows, columns)
}

pub fn naive_coi(rows: &[Row], i: usize, j: usize, k: usize) -> f64 {
    naive_entropy(rows, &[i]) + naive_entropy(rows, &[j]) + naive_entropy(rows, &[k])
        - naive_entropy(rows, &[i, j])
        - naive_entropy(rows, &[i, k])
        - naive_entropy(rows, &[j, k])
        + naive_entropy(rows, &[i, j, k])
}

/// The 64 macro rows of case `n`, enumerated by bitmask without touching the
/// library's case machinery.
pub fn case_rows(n: u32) -> Vec<Row> {
    let mut rows = Vec::new();
    for m in 0u32..64 {
        let bit = |k: u32| (m >> (5 - k)) & 1;
        let (a, b, c, d, e, f) = (bit(0), bit(1), bit(2), bit(3), bit(4), bit(5));
        let third = match n {
            1 => format!("{c}{d}{e}{f}"),
            2 => format!("{a}{c}{e}{}", d ^ f),
            3 => format!("{a}{b}{}{}", c ^ e, d ^ f),
            4 => format!("{a}{b}{}{}", c ^ f, d ^ e),
            _ => panic!("no such case"),
        };
        rows.push((
            vec![format!("{a}{b}{c}{d}"), format!("{a}{b}{e}{f}"), third],
            1.0 / 64.0,
        ));
    }
    rows
}

/// A random pmf with dyadic masses `count / 2^balls_log2`, summing to 1
/// exactly in floating point.
pub fn random_dyadic_pmf(rng: &mut ChaCha8Rng, size: usize, balls_log2: u32) -> Vec<f64> {
    let balls = 1usize << balls_log2;
    let mut counts = vec![0usize; size];
    for _ in 0..balls {
        counts[rng.gen_range(0..size)] += 1;
    }
    counts
        .into_iter()
        .map(|c| c as f64 / balls as f64)
        .collect()
}

/// A random three-variable table with alphabet sizes 2..=4 and exactly
/// dyadic masses.
pub fn random_dyadic_table(rng: &mut ChaCha8Rng) -> JointTable {
    let sizes = [
        rng.gen_range(2..=4usize),
        rng.gen_range(2..=4usize),
        rng.gen_range(2..=4usize),
    ];
    let cells = sizes[0] * sizes[1] * sizes[2];
    let masses = random_dyadic_pmf(rng, cells, 8);
    let mut rows = Vec::new();
    for (cell, &p) in masses.iter().enumerate() {
        if p == 0.0 {
            continue;
        }
        let x1 = cell / (sizes[1] * sizes[2]);
        let x2 = (cell / sizes[2]) % sizes[1];
        let x3 = cell % sizes[2];
        rows.push((vec![x1.to_string(), x2.to_string(), x3.to_string()], p));
    }
    JointTable::from_pmf(&["X1", "X2", "X3"], rows).expect("dyadic masses sum to 1")
}

/// A table where X1 and X2 are independent by construction and X3 is a
/// random conditional: every pairwise-zero-information shortcut applies to
/// the (X1, X2) pair.
pub fn random_zero_mi_table(rng: &mut ChaCha8Rng) -> JointTable {
    let s1 = rng.gen_range(2..=3usize);
    let s2 = rng.gen_range(2..=3usize);
    let s3 = rng.gen_range(2..=3usize);
    let p1 = random_dyadic_pmf(rng, s1, 4);
    let p2 = random_dyadic_pmf(rng, s2, 4);
    let mut rows = Vec::new();
    for (x1, &m1) in p1.iter().enumerate() {
        for (x2, &m2) in p2.iter().enumerate() {
            // One dyadic conditional per (x1, x2) cell; products of dyadic
            // masses stay exact, so I(X1; X2) vanishes up to log rounding.
            let conditional = random_dyadic_pmf(rng, s3, 4);
            for (x3, &pc) in conditional.iter().enumerate() {
                let p = m1 * m2 * pc;
                if p > 0.0 {
                    rows.push((vec![x1.to_string(), x2.to_string(), x3.to_string()], p));
                }
            }
        }
    }
    JointTable::from_pmf(&["X1", "X2", "X3"], rows).expect("product masses sum to 1")
}

/// A deterministic chain X2 = f(X1), X3 = h(X2) with a random dyadic source:
/// every determinism shortcut applies, and the redundancy is H(X3) exactly.
pub fn random_chain_table(rng: &mut ChaCha8Rng) -> JointTable {
    let s1 = rng.gen_range(3..=5usize);
    let s2 = rng.gen_range(2..=3usize);
    let s3 = rng.gen_range(1..=2usize);
    let p1 = random_dyadic_pmf(rng, s1, 6);
    let f: Vec<usize> = (0..s1).map(|_| rng.gen_range(0..s2)).collect();
    let h: Vec<usize> = (0..s2).map(|_| rng.gen_range(0..s3)).collect();
    let mut rows = Vec::new();
    for (x1, &p) in p1.iter().enumerate() {
        if p > 0.0 {
            rows.push((
                vec![x1.to_string(), f[x1].to_string(), h[f[x1]].to_string()],
                p,
            ));
        }
    }
    JointTable::from_pmf(&["X1", "X2", "X3"], rows).expect("chain masses sum to 1")
}

/// A random surjection-shaped relabeling of `0..label_count` onto a smaller
/// (or equal) label set.
pub fn random_coarsening(rng: &mut ChaCha8Rng, label_count: usize) -> Vec<usize> {
    let target = rng.gen_range(1..=label_count.max(1));
    (0..label_count).map(|_| rng.gen_range(0..target)).collect()
}

/// Naive I(sigma(Q); target) where Q is read off `source_column` through the
/// common-part labeling `label_of` and sigma is a coarsening map.
pub fn naive_coarsened_mi(
    rows: &[Row],
    label_of: impl Fn(&str) -> usize,
    sigma: &[usize],
    source_column: usize,
    target_column: usize,
) -> f64 {
    let mut joint: HashMap<(usize, &str), f64> = HashMap::new();
    let mut q_marginal: HashMap<usize, f64> = HashMap::new();
    let mut t_marginal: HashMap<&str, f64> = HashMap::new();
    for (outcome, p) in rows {
        let q = sigma[label_of(&outcome[source_column])];
        let t = outcome[target_column].as_str();
        *joint.entry((q, t)).or_insert(0.0) += p;
        *q_marginal.entry(q).or_insert(0.0) += p;
        *t_marginal.entry(t).or_insert(0.0) += p;
    }
    let h = |masses: Vec<f64>| -> f64 {
        masses
            .into_iter()
            .filter(|&p| p > 0.0)
            .map(|p| -p * p.log2())
            .sum()
    };
    h(q_marginal.into_values().collect()) + h(t_marginal.into_values().collect())
        - h(joint.into_values().collect())
}
