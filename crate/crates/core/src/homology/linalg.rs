//! Exact ranks of small integer matrices over `ℚ` and `𝔽_p`.

use num_bigint::BigInt;
use num_traits::Zero;

use super::FieldSpec;

/// An integer matrix stored by sparse rows of `(column, value)` pairs.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SparseMatrix {
    pub rows: Vec<Vec<(usize, i64)>>,
    pub ncols: usize,
}

impl SparseMatrix {
    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut out = vec![vec![0; self.ncols]; self.rows.len()];
        for (r, row) in self.rows.iter().enumerate() {
            for &(c, v) in row {
                out[r][c] += v;
            }
        }
        out
    }

    pub fn rank(&self, field: FieldSpec) -> usize {
        if self.rows.is_empty() || self.ncols == 0 {
            return 0;
        }
        match field {
            FieldSpec::Prime(2) => rank_f2(self),
            FieldSpec::Prime(p) => rank_mod_p(self, u64::from(p)),
            FieldSpec::Rationals => rank_rational(self),
        }
    }
}

fn rank_f2(m: &SparseMatrix) -> usize {
    let words = m.ncols.div_ceil(64);
    let mut basis: Vec<Option<Vec<u64>>> = vec![None; m.ncols];
    let mut rank = 0;
    for row in &m.rows {
        let mut bits = vec![0u64; words];
        for &(c, v) in row {
            if v.rem_euclid(2) == 1 {
                bits[c / 64] ^= 1 << (c % 64);
            }
        }
        // Pivots sit at the lowest set bit, so reducing only pushes bits up.
        while let Some(col) = lowest_bit(&bits) {
            match &basis[col] {
                Some(b) => bits.iter_mut().zip(b).for_each(|(x, y)| *x ^= y),
                None => {
                    basis[col] = Some(bits);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

fn lowest_bit(bits: &[u64]) -> Option<usize> {
    bits.iter()
        .enumerate()
        .find(|(_, &w)| w != 0)
        .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
}

fn inverse_mod(a: u64, p: u64) -> u64 {
    let (mut result, mut base, mut exp) = (1u64, a % p, p - 2);
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    result
}

fn rank_mod_p(m: &SparseMatrix, p: u64) -> usize {
    let mut basis: Vec<Option<Vec<u64>>> = vec![None; m.ncols];
    let mut rank = 0;
    for row in &m.rows {
        let mut dense = vec![0u64; m.ncols];
        for &(c, v) in row {
            dense[c] = (dense[c] + v.rem_euclid(p as i64) as u64) % p;
        }
        let mut col = 0;
        while col < m.ncols {
            let x = dense[col];
            if x == 0 {
                col += 1;
                continue;
            }
            match &basis[col] {
                Some(b) => {
                    for (d, &bv) in dense[col..].iter_mut().zip(&b[col..]) {
                        *d = (*d + (p - x) * bv) % p;
                    }
                }
                None => {
                    let inv = inverse_mod(x, p);
                    for d in &mut dense[col..] {
                        *d = *d * inv % p;
                    }
                    basis[col] = Some(dense);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

/// Rank over `ℚ`. A full rank modulo a large prime settles it at once, since
/// reduction mod `p` can only lower the rank; otherwise fraction-free
/// elimination runs in `i128` and restarts with big integers on overflow.
fn rank_rational(m: &SparseMatrix) -> usize {
    let full = m.nrows().min(m.ncols);
    if rank_mod_p(m, 2_147_483_647) == full {
        return full;
    }
    let dense = m.to_dense();
    bareiss_i128(&dense).unwrap_or_else(|| bareiss_big(&dense))
}

fn bareiss_i128(m: &[Vec<i64>]) -> Option<usize> {
    let mut a: Vec<Vec<i128>> = m
        .iter()
        .map(|r| r.iter().map(|&x| i128::from(x)).collect())
        .collect();
    let (rows, cols) = (a.len(), a.first().map_or(0, Vec::len));
    let mut prev: i128 = 1;
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(r, p);
        let pivot = a[r][c];
        for i in r + 1..rows {
            let lead = a[i][c];
            for j in c + 1..cols {
                let num = pivot
                    .checked_mul(a[i][j])?
                    .checked_sub(lead.checked_mul(a[r][j])?)?;
                a[i][j] = num / prev;
            }
            a[i][c] = 0;
        }
        prev = pivot;
        r += 1;
    }
    Some(r)
}

fn bareiss_big(m: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<BigInt>> = m
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let (rows, cols) = (a.len(), a.first().map_or(0, Vec::len));
    let mut prev = BigInt::from(1);
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let pivot = a[r][c].clone();
        for i in r + 1..rows {
            let lead = a[i][c].clone();
            for j in c + 1..cols {
                let num = &pivot * &a[i][j] - &lead * &a[r][j];
                a[i][j] = num / &prev;
            }
            a[i][c] = BigInt::zero();
        }
        prev = pivot;
        r += 1;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use num_traits::One;
    use proptest::prelude::*;

    fn sparse(dense: &[Vec<i64>]) -> SparseMatrix {
        SparseMatrix {
            ncols: dense.first().map_or(0, Vec::len),
            rows: dense
                .iter()
                .map(|r| {
                    r.iter()
                        .enumerate()
                        .filter(|(_, &v)| v != 0)
                        .map(|(c, &v)| (c, v))
                        .collect()
                })
                .collect(),
        }
    }

    /// Textbook Gaussian elimination over `ℚ` with exact fractions.
    fn rational_rank(dense: &[Vec<i64>]) -> usize {
        let mut a: Vec<Vec<BigRational>> = dense
            .iter()
            .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
            .collect();
        let (rows, cols) = (a.len(), a.first().map_or(0, Vec::len));
        let mut r = 0;
        for c in 0..cols {
            let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
                continue;
            };
            a.swap(r, p);
            let inv = BigRational::one() / a[r][c].clone();
            for i in 0..rows {
                if i != r && !a[i][c].is_zero() {
                    let f = a[i][c].clone() * &inv;
                    for j in c..cols {
                        let d = f.clone() * a[r][j].clone();
                        a[i][j] -= d;
                    }
                }
            }
            r += 1;
        }
        r
    }

    #[test]
    fn small_examples() {
        let m = sparse(&[vec![1, 1], vec![1, 1]]);
        assert_eq!(m.rank(FieldSpec::Rationals), 1);
        let m = sparse(&[vec![1, 1], vec![1, -1]]);
        assert_eq!(m.rank(FieldSpec::Rationals), 2);
        assert_eq!(m.rank(FieldSpec::F2), 1);
        assert_eq!(m.rank(FieldSpec::Prime(3)), 2);
        let m = sparse(&[vec![3, 0], vec![0, 3]]);
        assert_eq!(m.rank(FieldSpec::Prime(3)), 0);
        assert_eq!(sparse(&[]).rank(FieldSpec::Rationals), 0);
    }

    #[test]
    fn big_integer_fallback() {
        // Entries near 2^61 overflow i128 products by the second step.
        let big = 1i64 << 61;
        let dense = vec![
            vec![big, big - 1, 3, 7],
            vec![big - 3, big, 5, 1],
            vec![big - 7, 11, big, 2],
            vec![2 * (big - 3) - big, 2 * big - (big - 1), 10 - 3, 2 - 7],
        ];
        assert!(bareiss_i128(&dense).is_none());
        assert_eq!(bareiss_big(&dense), rational_rank(&dense));
    }

    proptest! {
        #[test]
        fn matches_rational_oracle(
            rows in 1usize..7,
            cols in 1usize..7,
            cells in prop::collection::vec(-3i64..=3, 36),
            dependent in any::<bool>(),
        ) {
            let mut dense: Vec<Vec<i64>> = (0..rows)
                .map(|r| (0..cols).map(|c| cells[r * 6 + c]).collect())
                .collect();
            if dependent && rows > 2 {
                let combo: Vec<i64> = (0..cols).map(|c| 2 * dense[0][c] - dense[1][c]).collect();
                dense[rows - 1] = combo;
            }
            let m = sparse(&dense);
            let expected = rational_rank(&dense);
            prop_assert_eq!(m.rank(FieldSpec::Rationals), expected);
            prop_assert_eq!(bareiss_big(&dense), expected);
            prop_assert!(m.rank(FieldSpec::F2) <= expected);
            prop_assert!(m.rank(FieldSpec::Prime(5)) <= expected);
        }

        #[test]
        fn f2_matches_mod_p_routine(
            rows in 1usize..10,
            cols in 1usize..80,
            seed in prop::collection::vec(0i64..2, 800),
        ) {
            let dense: Vec<Vec<i64>> = (0..rows)
                .map(|r| (0..cols).map(|c| seed[(r * 80 + c) % 800]).collect())
                .collect();
            let m = sparse(&dense);
            prop_assert_eq!(rank_f2(&m), rank_mod_p(&m, 2));
        }
    }
}
