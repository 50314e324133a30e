//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use hilali::algebra::{Generator, Rational};
use hilali::RankType;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// SAC by explicit search: every index subset of the evens, every γ vector.
pub fn brute_sac(t: &RankType) -> bool {
    let a: Vec<u32> = t.evens().iter().map(|e| e / 2).collect();
    let b: Vec<u32> = t.odds().iter().map(|o| o / 2 + 1).collect();
    for mask in 1u32..(1 << a.len()) {
        let chosen: Vec<u32> = (0..a.len())
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| a[i])
            .collect();
        let hits = b.iter().filter(|&&bj| brute_express(bj, &chosen)).count();
        if hits < chosen.len() {
            return false;
        }
    }
    true
}

fn brute_express(b: u32, support: &[u32]) -> bool {
    fn go(b: u32, rest: &[u32], used: u32) -> bool {
        match rest.split_first() {
            None => b == 0 && used >= 2,
            Some((&a, tail)) => (0..=b / a).any(|g| go(b - g * a, tail, used + g)),
        }
    }
    go(b, support, 0)
}

/// Every rank type with Σ odd ≤ `limit`, r ≤ q, even degrees up to `max_even`.
pub fn small_rank_types(limit: u32, max_even: u32) -> Vec<RankType> {
    fn multisets(values: &[u32], max_len: usize, max_sum: Option<u32>) -> Vec<Vec<u32>> {
        let mut out = vec![vec![]];
        fn rec(
            values: &[u32],
            start: usize,
            cur: &mut Vec<u32>,
            max_len: usize,
            max_sum: Option<u32>,
            out: &mut Vec<Vec<u32>>,
        ) {
            if cur.len() == max_len {
                return;
            }
            for i in start..values.len() {
                cur.push(values[i]);
                if max_sum.is_none_or(|m| cur.iter().sum::<u32>() <= m) {
                    out.push(cur.clone());
                    rec(values, i, cur, max_len, max_sum, out);
                }
                cur.pop();
            }
        }
        rec(values, 0, &mut Vec::new(), max_len, max_sum, &mut out);
        out
    }
    let odd_values: Vec<u32> = (3..=limit).step_by(2).collect();
    let even_values: Vec<u32> = (2..=max_even).step_by(2).collect();
    let mut out = Vec::new();
    for odds in multisets(&odd_values, limit as usize / 3, Some(limit)) {
        if odds.is_empty() {
            continue;
        }
        for evens in multisets(&even_values, odds.len(), None) {
            out.push(RankType::new(evens, odds.clone()).unwrap());
        }
    }
    out
}

/// Rank via fraction-free (Bareiss) elimination on integer-scaled rows.
pub fn bareiss_rank(rows: &[Vec<Rational>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|row| {
            let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect()
        })
        .collect();
    let n_rows = m.len();
    let n_cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = BigInt::one();
    for c in 0..n_cols {
        let Some(p) = (rank..n_rows).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        for r in rank + 1..n_rows {
            for k in c + 1..n_cols {
                let v = (&m[rank][c] * &m[r][k] - &m[r][c] * &m[rank][k]) / &prev;
                m[r][k] = v;
            }
            m[r][c] = BigInt::zero();
        }
        prev = m[rank][c].clone();
        rank += 1;
    }
    rank
}

/// Coefficients of Π_even 1/(1-t^d) · Π_odd (1+t^d) up to `top`.
pub fn series_dims(generators: &[Generator], top: u32) -> Vec<u64> {
    let top = top as usize;
    let mut series = vec![0u64; top + 1];
    series[0] = 1;
    for g in generators {
        let d = g.degree as usize;
        if g.is_odd() {
            for k in (d..=top).rev() {
                series[k] += series[k - d];
            }
        } else {
            for k in d..=top {
                series[k] += series[k - d];
            }
        }
    }
    series
}
