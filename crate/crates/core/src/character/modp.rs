//! Arithmetic and linear algebra over a prime field `F_p`, `p < 2^31`.

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub(crate) fn new(p: u64) -> Self {
        debug_assert!(p < 1 << 31);
        PrimeField { p }
    }

    pub(crate) fn modulus(self) -> u64 {
        self.p
    }

    #[inline]
    pub(crate) fn reduce(self, x: u64) -> u64 {
        x % self.p
    }

    #[inline]
    pub(crate) fn add(self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub(crate) fn sub(self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub(crate) fn neg(self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub(crate) fn mul(self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub(crate) fn pow(self, mut a: u64, mut e: u64) -> u64 {
        let mut acc = 1;
        a %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    /// Inverse of a nonzero residue.
    pub(crate) fn inv(self, a: u64) -> u64 {
        debug_assert!(!a.is_multiple_of(self.p));
        self.pow(a, self.p - 2)
    }
}

/// Row-reduces `rows` in place to reduced echelon form, dropping zero rows.
/// Returns the pivot column of each remaining row.
pub(crate) fn row_reduce(f: PrimeField, rows: &mut Vec<Vec<u64>>) -> Vec<usize> {
    let cols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..cols {
        let Some(found) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, found);
        let inv = f.inv(rows[rank][col]);
        for x in rows[rank].iter_mut() {
            *x = f.mul(*x, inv);
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == rank || row[col] == 0 {
                continue;
            }
            let factor = row[col];
            for (x, &y) in row.iter_mut().zip(&pivot_row) {
                *x = f.sub(*x, f.mul(factor, y));
            }
        }
        pivots.push(col);
        rank += 1;
    }
    rows.truncate(rank);
    pivots
}

/// Basis of `{x : A x = 0}` for a square or rectangular `A` given by rows.
pub(crate) fn nullspace(f: PrimeField, a: &[Vec<u64>], cols: usize) -> Vec<Vec<u64>> {
    let mut rows = a.to_vec();
    let pivots = row_reduce(f, &mut rows);
    let mut is_pivot = vec![false; cols];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    (0..cols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut x = vec![0u64; cols];
            x[free] = 1;
            for (row, &pc) in rows.iter().zip(&pivots) {
                x[pc] = f.neg(row[free]);
            }
            x
        })
        .collect()
}

/// Characteristic polynomial `det(x I - A)`, ascending coefficients,
/// via reduction to upper Hessenberg form.
pub(crate) fn char_poly(f: PrimeField, a: &[Vec<u64>]) -> Vec<u64> {
    let n = a.len();
    let mut h: Vec<Vec<u64>> = a.to_vec();
    for k in 0..n.saturating_sub(2) {
        let Some(i) = (k + 1..n).find(|&i| h[i][k] != 0) else {
            continue;
        };
        if i != k + 1 {
            h.swap(i, k + 1);
            for row in h.iter_mut() {
                row.swap(i, k + 1);
            }
        }
        let pivot_inv = f.inv(h[k + 1][k]);
        for r in k + 2..n {
            let u = f.mul(h[r][k], pivot_inv);
            if u == 0 {
                continue;
            }
            for c in 0..n {
                let v = f.mul(u, h[k + 1][c]);
                h[r][c] = f.sub(h[r][c], v);
            }
            for row in h.iter_mut() {
                let v = f.mul(u, row[r]);
                row[k + 1] = f.add(row[k + 1], v);
            }
        }
    }
    // polys[m] = characteristic polynomial of the leading m x m block
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for m in 1..=n {
        let prev = &polys[m - 1];
        let mut next = vec![0u64; m + 1];
        for (d, &c) in prev.iter().enumerate() {
            next[d + 1] = f.add(next[d + 1], c);
            next[d] = f.sub(next[d], f.mul(h[m - 1][m - 1], c));
        }
        let mut t = 1u64;
        for i in 1..m {
            t = f.mul(t, h[m - i][m - i - 1]);
            let coef = f.mul(t, h[m - i - 1][m - 1]);
            if coef == 0 {
                continue;
            }
            for (d, &c) in polys[m - i - 1].iter().enumerate() {
                next[d] = f.sub(next[d], f.mul(coef, c));
            }
        }
        polys.push(next);
    }
    polys.pop().unwrap()
}

pub(crate) fn eval_poly(f: PrimeField, poly: &[u64], x: u64) -> u64 {
    poly.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c))
}
