//! Small dense helpers shared by the HSS machinery.
//!
//! Everything here works on `ndarray` arrays and is deliberately plain: the
//! blocks these routines see are generator-sized (a few hundred rows at most),
//! so clarity and determinism win over blocking tricks.

use ndarray::{s, Array1, Array2, ArrayView1, ArrayView2};

use crate::flops;

/// `a * b` with flop accounting.
pub fn matmul(a: ArrayView2<f64>, b: ArrayView2<f64>) -> Array2<f64> {
    flops::add(2 * (a.nrows() * a.ncols() * b.ncols()) as u64);
    a.dot(&b)
}

pub fn max_abs(a: ArrayView2<f64>) -> f64 {
    a.iter().fold(0.0f64, |m, &x| m.max(x.abs()))
}

/// Largest relative deviation from symmetry, scaled by the largest entry.
pub fn asymmetry(a: ArrayView2<f64>) -> f64 {
    let scale = max_abs(a).max(f64::MIN_POSITIVE);
    let mut worst = 0.0f64;
    for i in 0..a.nrows() {
        for j in i + 1..a.ncols() {
            worst = worst.max((a[[i, j]] - a[[j, i]]).abs());
        }
    }
    worst / scale
}

pub fn frobenius(a: ArrayView2<f64>) -> f64 {
    a.iter().map(|x| x * x).sum::<f64>().sqrt()
}

pub fn norm2_vec(x: ArrayView1<f64>) -> f64 {
    x.iter().map(|v| v * v).sum::<f64>().sqrt()
}

/// Spectral norm of a small dense block via one-sided Jacobi on the columns.
pub fn spectral_norm(a: ArrayView2<f64>) -> f64 {
    if a.is_empty() {
        return 0.0;
    }
    singular_values(a).into_iter().fold(0.0, f64::max)
}

/// Singular values (unordered) via one-sided Jacobi sweeps.
pub fn singular_values(a: ArrayView2<f64>) -> Vec<f64> {
    // Work on the transpose when that gives fewer columns to rotate.
    let mut w = if a.nrows() < a.ncols() {
        a.t().to_owned()
    } else {
        a.to_owned()
    };
    let n = w.ncols();
    if n == 0 || w.nrows() == 0 {
        return vec![0.0; n.min(w.nrows())];
    }
    let tol = 1e-15;
    for _sweep in 0..40 {
        let mut off = 0.0f64;
        for p in 0..n {
            for q in p + 1..n {
                let (mut app, mut aqq, mut apq) = (0.0, 0.0, 0.0);
                for i in 0..w.nrows() {
                    let (x, y) = (w[[i, p]], w[[i, q]]);
                    app += x * x;
                    aqq += y * y;
                    apq += x * y;
                }
                flops::add(6 * w.nrows() as u64);
                if apq.abs() <= tol * (app * aqq).sqrt() || apq == 0.0 {
                    continue;
                }
                off = off.max(apq.abs() / (app * aqq).sqrt().max(f64::MIN_POSITIVE));
                let zeta = (aqq - app) / (2.0 * apq);
                let t = zeta.signum() / (zeta.abs() + (1.0 + zeta * zeta).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;
                for i in 0..w.nrows() {
                    let (x, y) = (w[[i, p]], w[[i, q]]);
                    w[[i, p]] = c * x - s * y;
                    w[[i, q]] = s * x + c * y;
                }
                flops::add(6 * w.nrows() as u64);
            }
        }
        if off < tol {
            break;
        }
    }
    (0..n)
        .map(|j| norm2_vec(w.column(j)))
        .collect()
}

/// Thin Householder QR; returns `q` with orthonormal columns spanning the
/// column space of `a` (`min(m, n)` columns).
pub fn orthonormalize(a: ArrayView2<f64>) -> Array2<f64> {
    let (m, n) = (a.nrows(), a.ncols());
    let k = m.min(n);
    let mut r = a.to_owned();
    let mut reflectors: Vec<Array1<f64>> = Vec::with_capacity(k);
    for j in 0..k {
        let mut v = r.slice(s![j.., j]).to_owned();
        let alpha = -v[0].signum() * norm2_vec(v.view());
        v[0] -= alpha;
        let vnorm = norm2_vec(v.view());
        if vnorm > 0.0 {
            v /= vnorm;
            // r[j.., j..] -= 2 v (v^T r[j.., j..])
            let sub = r.slice(s![j.., j..]).to_owned();
            let vt_sub = v.dot(&sub);
            flops::add(4 * (sub.nrows() * sub.ncols()) as u64);
            let mut tgt = r.slice_mut(s![j.., j..]);
            for (ri, &vi) in v.iter().enumerate() {
                for (ci, &wj) in vt_sub.iter().enumerate() {
                    tgt[[ri, ci]] -= 2.0 * vi * wj;
                }
            }
        }
        reflectors.push(v);
    }
    // Accumulate Q = H_0 ... H_{k-1} applied to the first k identity columns.
    let mut q = Array2::<f64>::eye(m);
    let mut q = q.slice_mut(s![.., ..k]).to_owned();
    for j in (0..k).rev() {
        let v = &reflectors[j];
        let sub = q.slice(s![j.., ..]).to_owned();
        let vt_sub = v.dot(&sub);
        flops::add(4 * (sub.nrows() * sub.ncols()) as u64);
        let mut tgt = q.slice_mut(s![j.., ..]);
        for (ri, &vi) in v.iter().enumerate() {
            for (ci, &wj) in vt_sub.iter().enumerate() {
                tgt[[ri, ci]] -= 2.0 * vi * wj;
            }
        }
    }
    q
}

/// Orthonormal basis for the dominant row space of `f`, truncated at
/// relative singular value `tol` (and `max_rank` columns if given).
///
/// Returns `u` (`m x k`, orthonormal columns) such that `u u^T f` approximates
/// `f` with spectral error at most `tol * sigma_max(f)` plus rounding. The
/// basis comes from the eigendecomposition of the small Gram matrix `f f^T`,
/// which is accurate enough for the compression tolerances used here.
pub fn truncated_row_basis(
    f: ArrayView2<f64>,
    tol: f64,
    max_rank: Option<usize>,
) -> Array2<f64> {
    let m = f.nrows();
    if m == 0 || f.ncols() == 0 || max_abs(f) == 0.0 {
        return Array2::zeros((m, 0));
    }
    let gram = matmul(f, f.t());
    let eig = crate::dense_oracle::symmetric_eig(gram.view())
        .expect("gram matrix is symmetric by construction");
    let smax2 = eig.values[m - 1].max(0.0);
    if smax2 == 0.0 {
        return Array2::zeros((m, 0));
    }
    // Relative floor keeps noise-level directions out even at tol = 0.
    let floor2 = smax2 * (40.0 * f64::EPSILON).powi(2);
    let cut2 = (smax2 * tol * tol).max(floor2);
    let mut keep: Vec<usize> = (0..m).rev().filter(|&i| eig.values[i] > cut2).collect();
    if let Some(r) = max_rank {
        keep.truncate(r);
    }
    let mut u = Array2::zeros((m, keep.len()));
    for (jc, &je) in keep.iter().enumerate() {
        u.column_mut(jc).assign(&eig.vectors.column(je));
    }
    u
}

/// Gathers `out[t] = x[perm[t]]` (sorting application of a permutation).
pub fn permute_gather(x: ArrayView1<f64>, perm: &[usize]) -> Array1<f64> {
    Array1::from_iter(perm.iter().map(|&p| x[p]))
}

/// Scatters `out[perm[t]] = x[t]` (inverse of [`permute_gather`]).
pub fn permute_scatter(x: ArrayView1<f64>, perm: &[usize]) -> Array1<f64> {
    let mut out = Array1::zeros(x.len());
    for (t, &p) in perm.iter().enumerate() {
        out[p] = x[t];
    }
    out
}

pub fn permute_rows_gather(x: ArrayView2<f64>, perm: &[usize]) -> Array2<f64> {
    let mut out = Array2::zeros((x.nrows(), x.ncols()));
    for (t, &p) in perm.iter().enumerate() {
        out.row_mut(t).assign(&x.row(p));
    }
    out
}

pub fn permute_rows_scatter(x: ArrayView2<f64>, perm: &[usize]) -> Array2<f64> {
    let mut out = Array2::zeros((x.nrows(), x.ncols()));
    for (t, &p) in perm.iter().enumerate() {
        out.row_mut(p).assign(&x.row(t));
    }
    out
}

/// Permutation that sorts `x` ascending (stable).
pub fn sort_perm(x: ArrayView1<f64>) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..x.len()).collect();
    idx.sort_by(|&a, &b| x[a].partial_cmp(&x[b]).unwrap_or(std::cmp::Ordering::Equal));
    idx
}

#[cfg(test)]
mod tests {
    use super::*;
    use ndarray::array;

    #[test]
    fn jacobi_singular_values() {
        let a = array![[3.0, 0.0], [0.0, -4.0]];
        let mut sv = singular_values(a.view());
        sv.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert!((sv[0] - 3.0).abs() < 1e-14);
        assert!((sv[1] - 4.0).abs() < 1e-14);
        assert!((spectral_norm(a.view()) - 4.0).abs() < 1e-14);
    }

    #[test]
    fn spectral_norm_rectangular() {
        // sigma_max of a rank-1 outer product u v^T is |u| |v|.
        let u = array![[1.0], [2.0], [2.0]];
        let v = array![[2.0, 0.0, 0.0, 1.0]];
        let a = u.dot(&v);
        assert!((spectral_norm(a.view()) - 3.0 * 5f64.sqrt()).abs() < 1e-13);
    }

    #[test]
    fn orthonormalize_is_orthonormal() {
        let mut a = Array2::zeros((8, 3));
        for (i, x) in a.iter_mut().enumerate() {
            *x = ((i * 2654435761) % 97) as f64 / 97.0 - 0.5;
        }
        let q = orthonormalize(a.view());
        let qtq = q.t().dot(&q);
        for i in 0..3 {
            for j in 0..3 {
                let want = if i == j { 1.0 } else { 0.0 };
                assert!((qtq[[i, j]] - want).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn truncated_basis_projects() {
        // Rank-2 matrix plus noise far below the tolerance.
        let u = array![[1.0, 0.0], [0.0, 1.0], [1.0, 1.0], [2.0, -1.0]];
        let v = array![[1.0, 2.0, 0.5, -1.0, 3.0], [0.0, 1.0, -2.0, 1.0, 0.7]];
        let f = u.dot(&v);
        let basis = truncated_row_basis(f.view(), 1e-10, None);
        assert_eq!(basis.ncols(), 2);
        let proj = basis.dot(&basis.t().dot(&f));
        let err = frobenius((&proj - &f).view());
        assert!(err < 1e-12 * frobenius(f.view()));
        // Zero block compresses to an empty basis.
        let z = Array2::<f64>::zeros((4, 6));
        assert_eq!(truncated_row_basis(z.view(), 0.0, None).ncols(), 0);
    }

    #[test]
    fn permutation_roundtrip() {
        let x = array![5.0, 1.0, 4.0, 2.0];
        let p = sort_perm(x.view());
        let sorted = permute_gather(x.view(), &p);
        assert_eq!(sorted, array![1.0, 2.0, 4.0, 5.0]);
        let back = permute_scatter(sorted.view(), &p);
        assert_eq!(back, x);
    }
}
