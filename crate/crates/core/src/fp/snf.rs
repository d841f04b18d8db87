//! Smith normal form of integer matrices by gcd-pivoting with full row and
//! column elimination, over arbitrary-precision integers. Correctness over
//! speed: entry growth is harmless at the sizes that occur here.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// Invariant factors `d1 | d2 | … | dr` (each positive, `r` = rank) of an
/// integer matrix under unimodular row/column equivalence.
pub fn smith_normal_form(matrix: &[Vec<BigInt>]) -> Vec<BigInt> {
    let rows = matrix.len();
    let cols = matrix.first().map_or(0, Vec::len);
    if rows == 0 || cols == 0 {
        return Vec::new();
    }
    debug_assert!(matrix.iter().all(|r| r.len() == cols));
    let mut m: Vec<Vec<BigInt>> = matrix.to_vec();
    let mut factors = Vec::new();
    let mut t = 0usize;
    while t < rows && t < cols {
        // Move a minimal-magnitude nonzero entry of the trailing block to
        // the pivot seat.
        let Some((pi, pj)) = min_nonzero(&m, t) else {
            break;
        };
        m.swap(t, pi);
        swap_cols(&mut m, t, pj);
        'eliminate: loop {
            for i in (t + 1)..rows {
                if m[i][t].is_zero() {
                    continue;
                }
                let q = &m[i][t] / &m[t][t];
                for j in t..cols {
                    let delta = &q * &m[t][j];
                    m[i][j] -= delta;
                }
                if !m[i][t].is_zero() {
                    // Remainder is smaller than the pivot: continue the
                    // euclidean descent with it as the new pivot.
                    m.swap(t, i);
                    continue 'eliminate;
                }
            }
            for j in (t + 1)..cols {
                if m[t][j].is_zero() {
                    continue;
                }
                let q = &m[t][j] / &m[t][t];
                for i in t..rows {
                    let delta = &q * &m[i][t];
                    m[i][j] -= delta;
                }
                if !m[t][j].is_zero() {
                    swap_cols(&mut m, t, j);
                    continue 'eliminate;
                }
            }
            // Row and column are clear; enforce that the pivot divides the
            // whole trailing block.
            if let Some(i) =
                ((t + 1)..rows).find(|&i| ((t + 1)..cols).any(|j| !(&m[i][j] % &m[t][t]).is_zero()))
            {
                for j in t..cols {
                    let add = m[i][j].clone();
                    m[t][j] += add;
                }
                continue 'eliminate;
            }
            break;
        }
        if m[t][t].is_negative() {
            m[t][t] = -m[t][t].clone();
        }
        factors.push(m[t][t].clone());
        t += 1;
    }
    factors
}

fn swap_cols(m: &mut [Vec<BigInt>], a: usize, b: usize) {
    if a != b {
        for row in m.iter_mut() {
            row.swap(a, b);
        }
    }
}

fn min_nonzero(m: &[Vec<BigInt>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..m.len() {
        for j in t..m[i].len() {
            if m[i][j].is_zero() {
                continue;
            }
            match &best {
                Some((bi, bj)) if m[*bi][*bj].abs() <= m[i][j].abs() => {}
                _ => best = Some((i, j)),
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mat(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    fn snf_i64(rows: &[&[i64]]) -> Vec<i64> {
        smith_normal_form(&mat(rows))
            .iter()
            .map(|d| i64::try_from(d).unwrap())
            .collect()
    }

    #[test]
    fn already_diagonal() {
        assert_eq!(snf_i64(&[&[3, 0], &[0, 6]]), vec![3, 6]);
    }

    #[test]
    fn two_by_two() {
        // d1 = gcd of entries = 2, d1·d2 = |det| = 8.
        assert_eq!(snf_i64(&[&[2, 4], &[6, 8]]), vec![2, 4]);
    }

    #[test]
    fn zero_matrix() {
        assert_eq!(snf_i64(&[&[0, 0], &[0, 0]]), Vec::<i64>::new());
    }

    #[test]
    fn needs_divisibility_fix() {
        // diag(2, 3) is not in Smith form; invariant factors are 1, 6.
        assert_eq!(snf_i64(&[&[2, 0], &[0, 3]]), vec![1, 6]);
    }

    // Independent oracle: gcd of all r×r minors equals d1·…·dr.
    fn minors_gcd(m: &[Vec<BigInt>], r: usize) -> BigInt {
        fn combos(n: usize, k: usize) -> Vec<Vec<usize>> {
            if k == 0 {
                return vec![vec![]];
            }
            if n < k {
                return vec![];
            }
            let mut out = combos(n - 1, k);
            for mut c in combos(n - 1, k - 1) {
                c.push(n - 1);
                out.push(c);
            }
            out
        }
        fn det(m: &[Vec<BigInt>]) -> BigInt {
            let n = m.len();
            if n == 0 {
                return BigInt::from(1);
            }
            let mut acc = BigInt::zero();
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<BigInt>> = (1..n)
                    .map(|i| {
                        (0..n)
                            .filter(|&c| c != j)
                            .map(|c| m[i][c].clone())
                            .collect()
                    })
                    .collect();
                let term = &m[0][j] * det(&minor);
                if j % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            acc
        }
        let mut g = BigInt::zero();
        for ri in combos(m.len(), r) {
            for ci in combos(m[0].len(), r) {
                let sub: Vec<Vec<BigInt>> = ri
                    .iter()
                    .map(|&i| ci.iter().map(|&j| m[i][j].clone()).collect())
                    .collect();
                g = num_integer::Integer::gcd(&g, &det(&sub));
            }
        }
        g
    }

    proptest! {
        #[test]
        fn product_of_factors_matches_minor_gcd(
            entries in proptest::collection::vec(-9i64..=9, 1..=12),
            rows in 1usize..=4,
        ) {
            let cols = (entries.len() / rows).max(1);
            let m: Vec<Vec<BigInt>> = (0..rows)
                .map(|i| {
                    (0..cols)
                        .map(|j| BigInt::from(*entries.get(i * cols + j).unwrap_or(&0)))
                        .collect()
                })
                .collect();
            let factors = smith_normal_form(&m);
            // Chain condition.
            for w in factors.windows(2) {
                prop_assert!((&w[1] % &w[0]).is_zero(), "{:?}", factors);
            }
            let product: BigInt = factors.iter().product();
            let r = factors.len();
            if r > 0 {
                prop_assert_eq!(product, minors_gcd(&m, r));
            } else {
                prop_assert!(m.iter().flatten().all(Zero::is_zero));
            }
        }
    }
}
