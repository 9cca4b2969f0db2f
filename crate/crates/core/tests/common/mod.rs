// Independent oracles shared by the integration tests. None of them call
// into the library's linear algebra or criteria.
#![allow(dead_code)]

/// Determinant by cofactor expansion along the first row.
pub fn cofactor_det(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    if n == 1 {
        return m[0][0];
    }
    (0..n)
        .filter(|&j| m[0][j] != 0)
        .map(|j| {
            let minor: Vec<Vec<i128>> = m[1..]
                .iter()
                .map(|r| {
                    r.iter()
                        .enumerate()
                        .filter(|&(k, _)| k != j)
                        .map(|(_, &x)| x)
                        .collect()
                })
                .collect();
            let sign = if j % 2 == 0 { 1 } else { -1 };
            sign * m[0][j] * cofactor_det(&minor)
        })
        .sum()
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(n, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, k, 0, &mut Vec::new(), &mut out);
    out
}

/// gcd of all maximal (cols x cols) row-minors; `None` when every one
/// vanishes, i.e. the column rank is deficient.
pub fn maximal_minor_gcd(rows: &[Vec<i128>]) -> Option<i128> {
    let cols = rows.first()?.len();
    if rows.len() < cols {
        return None;
    }
    let g = combinations(rows.len(), cols).iter().fold(0, |g, pick| {
        let sub: Vec<Vec<i128>> = pick.iter().map(|&i| rows[i].clone()).collect();
        gcd(g, cofactor_det(&sub))
    });
    (g != 0).then_some(g)
}

/// Number of `y` in `(Z/N)^cols` with `M y = 0 mod N`, by backtracking;
/// a row is tested once its last nonzero column has been assigned.
pub fn count_roots_of_unity(rows: &[Vec<i128>], n: i128) -> u128 {
    let cols = rows[0].len();
    let last: Vec<usize> = rows
        .iter()
        .map(|r| r.iter().rposition(|&x| x != 0).unwrap_or(0))
        .collect();
    fn go(rows: &[Vec<i128>], last: &[usize], n: i128, y: &mut Vec<i128>, cols: usize) -> u128 {
        let k = y.len();
        if k == cols {
            return 1;
        }
        let mut total = 0;
        for v in 0..n {
            y.push(v);
            let ok = rows
                .iter()
                .zip(last)
                .filter(|&(_, &l)| l == k)
                .all(|(r, _)| {
                    r.iter()
                        .zip(y.iter())
                        .map(|(a, b)| a * b)
                        .sum::<i128>()
                        .rem_euclid(n)
                        == 0
                });
            if ok {
                total += go(rows, last, n, y, cols);
            }
            y.pop();
        }
        total
    }
    go(rows, &last, n, &mut Vec::with_capacity(cols), cols)
}

/// Order of `{theta in (Q/Z)^cols : M theta in Z^rows}` by enumeration of
/// N-th roots of unity, N the gcd of maximal minors. `None` if infinite.
pub fn brute_force_fixing_order(rows: &[Vec<i128>]) -> Option<u128> {
    let n = maximal_minor_gcd(rows)?;
    Some(count_roots_of_unity(rows, n))
}

/// Direct search for monomials `x_i^k` (k >= 1) or `x_i^k x_j` (k >= 0,
/// j != i) of degree `d`.
pub fn singleton_witness_exists(weights: &[u64], d: u64, i: usize) -> bool {
    let a = weights[i];
    (0..=d / a).any(|k| {
        let rest = d - k * a;
        (k >= 1 && rest == 0)
            || weights
                .iter()
                .enumerate()
                .any(|(j, &b)| j != i && b == rest)
    })
}

/// Membership of `t` in the semigroup generated by `gens`, by recursion on
/// the largest generator's multiplicity.
pub fn in_semigroup(t: u64, gens: &[u64]) -> bool {
    match gens.split_first() {
        None => t == 0,
        Some((&g, rest)) => (0..=t / g).any(|k| in_semigroup(t - k * g, rest)),
    }
}

/// Subset criterion for quasismooth members, written over bitmasks.
pub fn quasismooth_oracle(weights: &[u64], d: u64) -> bool {
    if weights.contains(&d) {
        return true;
    }
    let m = weights.len();
    (1u32..(1 << m)).all(|mask| {
        let gens: Vec<u64> = (0..m)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| weights[i])
            .collect();
        if in_semigroup(d, &gens) {
            return true;
        }
        let outside = (0..m)
            .filter(|j| mask >> j & 1 == 0)
            .filter(|&j| weights[j] <= d && in_semigroup(d - weights[j], &gens))
            .count();
        outside >= mask.count_ones() as usize
    })
}

/// Finiteness restated on sorted weights.
pub fn finite_oracle(weights: &[u64], d: u64) -> bool {
    let mut w = weights.to_vec();
    w.sort_unstable_by(|a, b| b.cmp(a));
    d > 2 * w[0] || (d == 2 * w[0] && w[1] < w[0])
}

pub fn as_i128_rows(rows: &[Vec<u32>]) -> Vec<Vec<i128>> {
    rows.iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect()
}

/// Every exponent vector of weighted degree `d`.
pub fn monomials_of_degree(weights: &[u64], d: u64) -> Vec<Vec<u32>> {
    fn go(w: &[u64], rest: u64, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == w.len() {
            if rest == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let a = w[cur.len()];
        for k in 0..=rest / a {
            cur.push(k as u32);
            go(w, rest - k * a, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(weights, d, &mut Vec::new(), &mut out);
    out
}
