#![allow(dead_code)]

use num_bigint::BigUint;
use quotbwb_core::partition::partitions_of;
use quotbwb_core::Partition;
use rand::Rng;

pub fn part(s: &str) -> Partition {
    s.parse().unwrap()
}

pub fn big(x: u64) -> BigUint {
    BigUint::from(x)
}

/// LR coefficient by direct enumeration of lattice-word skew tableaux.
pub fn brute_lr(alpha: &Partition, beta: &Partition, gamma: &Partition) -> u64 {
    if alpha.size() + beta.size() != gamma.size() || !gamma.contains(alpha) {
        return 0;
    }
    let cells: Vec<(usize, usize)> = (0..gamma.len())
        .flat_map(|r| (alpha.at(r)..gamma.at(r)).map(move |c| (r, c)))
        .collect();
    let rows = gamma.len();
    let cols = gamma.first();
    let mut grid = vec![vec![0usize; cols]; rows];
    let content: Vec<usize> = beta.parts().to_vec();
    let mut used = vec![0usize; content.len()];
    fn rec(
        i: usize,
        cells: &[(usize, usize)],
        grid: &mut Vec<Vec<usize>>,
        alpha: &Partition,
        content: &[usize],
        used: &mut Vec<usize>,
    ) -> u64 {
        if i == cells.len() {
            return lattice(cells, grid, content.len()) as u64;
        }
        let (r, c) = cells[i];
        let mut total = 0;
        for v in 1..=content.len() {
            if used[v - 1] == content[v - 1] {
                continue;
            }
            if c > alpha.at(r) && grid[r][c - 1] > v {
                continue;
            }
            if r > 0 && c >= alpha.at(r - 1) && grid[r - 1][c] >= v {
                continue;
            }
            grid[r][c] = v;
            used[v - 1] += 1;
            total += rec(i + 1, cells, grid, alpha, content, used);
            used[v - 1] -= 1;
            grid[r][c] = 0;
        }
        total
    }
    fn lattice(cells: &[(usize, usize)], grid: &[Vec<usize>], k: usize) -> bool {
        let mut count = vec![0usize; k + 1];
        let mut rows: Vec<usize> = cells.iter().map(|c| c.0).collect();
        rows.dedup();
        for r in rows {
            let mut row: Vec<usize> = cells.iter().filter(|c| c.0 == r).map(|c| grid[c.0][c.1]).collect();
            row.reverse();
            for v in row {
                count[v] += 1;
                if v > 1 && count[v] > count[v - 1] {
                    return false;
                }
            }
        }
        true
    }
    rec(0, &cells, &mut grid, alpha, &content, &mut used)
}

/// Number of semistandard tableaux of shape λ with entries in `1..=n`.
pub fn ssyt_count(lambda: &Partition, n: usize) -> u64 {
    let cells: Vec<(usize, usize)> = (0..lambda.len()).flat_map(|r| (0..lambda.at(r)).map(move |c| (r, c))).collect();
    let mut grid = vec![vec![0usize; lambda.first()]; lambda.len()];
    fn rec(i: usize, cells: &[(usize, usize)], grid: &mut Vec<Vec<usize>>, n: usize) -> u64 {
        if i == cells.len() {
            return 1;
        }
        let (r, c) = cells[i];
        let lo_row = if c > 0 { grid[r][c - 1] } else { 1 };
        let lo_col = if r > 0 { grid[r - 1][c] + 1 } else { 1 };
        let mut total = 0;
        for v in lo_row.max(lo_col)..=n {
            grid[r][c] = v;
            total += rec(i + 1, cells, grid, n);
        }
        grid[r][c] = 0;
        total
    }
    rec(0, &cells, &mut grid, n)
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::default();
    }
    (0..k).fold(BigUint::from(1u32), |acc, i| acc * (n - i) / (i + 1))
}

/// A uniformly chosen partition of `n`.
pub fn random_partition<R: Rng>(rng: &mut R, n: usize) -> Partition {
    let all = partitions_of(n);
    all[rng.gen_range(0..all.len())].clone()
}

/// A random partition inside the `rows × cols` box.
pub fn random_boxed<R: Rng>(rng: &mut R, rows: usize, cols: usize) -> Partition {
    let mut v: Vec<usize> = (0..rows).map(|_| rng.gen_range(0..=cols)).collect();
    v.sort_unstable_by(|a, b| b.cmp(a));
    Partition::new(v.into_iter().filter(|&x| x > 0).collect()).unwrap()
}
