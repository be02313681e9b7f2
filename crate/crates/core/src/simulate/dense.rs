//! Row-major `Vec<Vec<f64>>` matrix routines for oracles. Deliberately
//! separate from the nalgebra-based estimator code paths.

pub type Mat = Vec<Vec<f64>>;

pub fn zeros(r: usize, c: usize) -> Mat {
    vec![vec![0.0; c]; r]
}

pub fn transpose(a: &Mat) -> Mat {
    if a.is_empty() {
        return Vec::new();
    }
    let (r, c) = (a.len(), a[0].len());
    let mut t = zeros(c, r);
    for i in 0..r {
        for j in 0..c {
            t[j][i] = a[i][j];
        }
    }
    t
}

pub fn matmul(a: &Mat, b: &Mat) -> Mat {
    let (r, inner) = (a.len(), b.len());
    let c = if inner == 0 { 0 } else { b[0].len() };
    let mut out = zeros(r, c);
    for i in 0..r {
        assert_eq!(a[i].len(), inner, "dimension mismatch");
        for k in 0..inner {
            let aik = a[i][k];
            if aik == 0.0 {
                continue;
            }
            for j in 0..c {
                out[i][j] += aik * b[k][j];
            }
        }
    }
    out
}

pub fn matvec(a: &Mat, x: &[f64]) -> Vec<f64> {
    a.iter().map(|row| row.iter().zip(x).map(|(p, q)| p * q).sum()).collect()
}

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(p, q)| p * q).sum()
}

/// Gauss–Jordan elimination with partial pivoting. Returns `None` when a
/// pivot falls below `1e-13` times the largest absolute entry.
pub fn solve(a: &Mat, b: &Mat) -> Option<Mat> {
    let n = a.len();
    let m = if b.is_empty() { 0 } else { b[0].len() };
    let mut aug: Mat = a
        .iter()
        .zip(b)
        .map(|(ra, rb)| ra.iter().chain(rb.iter()).copied().collect())
        .collect();
    let scale = a
        .iter()
        .flat_map(|r| r.iter())
        .fold(0.0_f64, |s, v| s.max(v.abs()))
        .max(f64::MIN_POSITIVE);
    for col in 0..n {
        let piv = (col..n).max_by(|&i, &j| aug[i][col].abs().total_cmp(&aug[j][col].abs()))?;
        if aug[piv][col].abs() < 1e-13 * scale {
            return None;
        }
        aug.swap(col, piv);
        let p = aug[col][col];
        for v in aug[col].iter_mut() {
            *v /= p;
        }
        for row in 0..n {
            if row != col {
                let f = aug[row][col];
                if f != 0.0 {
                    for k in 0..n + m {
                        aug[row][k] -= f * aug[col][k];
                    }
                }
            }
        }
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn identity(n: usize) -> Mat {
    let mut m = zeros(n, n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 1.0;
    }
    m
}

pub fn inverse(a: &Mat) -> Option<Mat> {
    solve(a, &identity(a.len()))
}

pub fn solve_vec(a: &Mat, b: &[f64]) -> Option<Vec<f64>> {
    let bm: Mat = b.iter().map(|&v| vec![v]).collect();
    solve(a, &bm).map(|s| s.into_iter().map(|r| r[0]).collect())
}

/// Least squares via the normal equations.
pub fn least_squares(x: &Mat, y: &[f64]) -> Option<Vec<f64>> {
    let xt = transpose(x);
    solve_vec(&matmul(&xt, x), &matvec(&xt, y))
}
