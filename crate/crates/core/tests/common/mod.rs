#![allow(dead_code)]

use hexpress::hn::HnType;

fn compositions(r: u32) -> Vec<Vec<u32>> {
    if r == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 1..=r {
        for mut rest in compositions(r - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn pairwise_codim(ranks: &[u32], degrees: &[i64], g: u32) -> i64 {
    let mut total = 0;
    for i in 0..ranks.len() {
        for j in i + 1..ranks.len() {
            let (ri, rj) = (ranks[i] as i64, ranks[j] as i64);
            total += rj * degrees[i] - ri * degrees[j] + ri * rj * (g as i64 - 1);
        }
    }
    total
}

/// Every HN type with at least two blocks and codimension at most `cap`,
/// found by scanning all rank compositions over a wide box of degrees.
pub fn brute_force_hn(r: u32, d: i64, g: u32, cap: u64) -> Vec<(HnType, u64)> {
    let window = r as i64 * (cap as i64 + r as i64 * d.abs() + 1) + 1;
    let mut out = Vec::new();
    for ranks in compositions(r) {
        let l = ranks.len();
        if l < 2 {
            continue;
        }
        let mut free = vec![-window; l - 1];
        loop {
            let mut degrees = free.clone();
            degrees.push(d - free.iter().sum::<i64>());
            // slopes strictly decreasing: d_i / r_i > d_{i+1} / r_{i+1}
            let ok = (0..l - 1).all(|i| degrees[i] * ranks[i + 1] as i64 > degrees[i + 1] * ranks[i] as i64);
            if ok {
                let c = pairwise_codim(&ranks, &degrees, g);
                if c >= 0 && c as u64 <= cap {
                    let pairs: Vec<(u32, i64)> = ranks.iter().copied().zip(degrees).collect();
                    out.push((HnType::from_pairs(&pairs), c as u64));
                }
            }
            let mut k = 0;
            while k < free.len() && free[k] == window {
                free[k] = -window;
                k += 1;
            }
            if k == free.len() {
                break;
            }
            free[k] += 1;
        }
    }
    out.sort();
    out
}
