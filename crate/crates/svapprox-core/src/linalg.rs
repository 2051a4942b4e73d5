//! Dense solves for the small systems produced by the approximation solvers.
//! Sizes are 2n x 2n with n the polynomial order bound, so plain O(n^3)
//! factorizations are more than enough.

use alloc::vec;
// Required by the no_std build; under cfg(test) std's inherent f64 methods
// shadow the trait and the import goes unused.
#[allow(unused_imports)]
use num_traits::Float;

/// Solves `a x = rhs` in place by LU with partial pivoting; `a` is row-major
/// n x n and is destroyed. Returns false if a pivot collapses.
pub(crate) fn solve_dense(a: &mut [f64], n: usize, rhs: &mut [f64]) -> bool {
    debug_assert_eq!(a.len(), n * n);
    debug_assert_eq!(rhs.len(), n);
    let mut perm: vec::Vec<usize> = (0..n).collect();
    for col in 0..n {
        let mut pivot = col;
        let mut best = a[perm[col] * n + col].abs();
        for row in col + 1..n {
            let v = a[perm[row] * n + col].abs();
            if v > best {
                best = v;
                pivot = row;
            }
        }
        if best < f64::MIN_POSITIVE * 16.0 {
            return false;
        }
        perm.swap(col, pivot);
        let p = perm[col];
        let inv = 1.0 / a[p * n + col];
        for row in col + 1..n {
            let r = perm[row];
            let factor = a[r * n + col] * inv;
            a[r * n + col] = factor;
            for k in col + 1..n {
                a[r * n + k] -= factor * a[p * n + k];
            }
            rhs[r] -= factor * rhs[p];
        }
    }
    // Back substitution into a scratch ordering, then undo the permutation.
    let mut x = vec![0.0; n];
    for col in (0..n).rev() {
        let p = perm[col];
        let mut acc = rhs[p];
        for k in col + 1..n {
            acc -= a[p * n + k] * x[k];
        }
        x[col] = acc / a[p * n + col];
    }
    rhs.copy_from_slice(&x);
    true
}

/// Solves the symmetric positive definite system `g x = rhs` by Cholesky.
/// `g` is row-major n x n, lower triangle used. Returns false when the matrix
/// is not numerically positive definite.
pub(crate) fn solve_spd(g: &mut [f64], n: usize, rhs: &mut [f64]) -> bool {
    debug_assert_eq!(g.len(), n * n);
    for j in 0..n {
        let mut d = g[j * n + j];
        for k in 0..j {
            d -= g[j * n + k] * g[j * n + k];
        }
        if d <= 0.0 || !d.is_finite() {
            return false;
        }
        let dj = d.sqrt();
        g[j * n + j] = dj;
        for i in j + 1..n {
            let mut v = g[i * n + j];
            for k in 0..j {
                v -= g[i * n + k] * g[j * n + k];
            }
            g[i * n + j] = v / dj;
        }
    }
    for i in 0..n {
        let mut v = rhs[i];
        for k in 0..i {
            v -= g[i * n + k] * rhs[k];
        }
        rhs[i] = v / g[i * n + i];
    }
    for i in (0..n).rev() {
        let mut v = rhs[i];
        for k in i + 1..n {
            v -= g[k * n + i] * rhs[k];
        }
        rhs[i] = v / g[i * n + i];
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dense_solves_permuted_system() {
        // Rows ordered so pivoting is exercised.
        let mut a = vec![0.0, 2.0, 1.0, 1.0, 1.0, 0.0, 3.0, 0.0, 1.0];
        let mut rhs = vec![4.0, 3.0, 10.0];
        assert!(solve_dense(&mut a, 3, &mut rhs));
        // Solution of the original system.
        assert!((rhs[0] - 2.4).abs() < 1e-12);
        assert!((rhs[1] - 0.6).abs() < 1e-12);
        assert!((rhs[2] - 2.8).abs() < 1e-12);
    }

    #[test]
    fn spd_matches_dense() {
        let mut g = vec![4.0, 1.0, 0.5, 1.0, 3.0, 0.25, 0.5, 0.25, 2.0];
        let mut g2 = g.clone();
        let mut r1 = vec![1.0, 2.0, 3.0];
        let mut r2 = r1.clone();
        assert!(solve_spd(&mut g, 3, &mut r1));
        assert!(solve_dense(&mut g2, 3, &mut r2));
        for i in 0..3 {
            assert!((r1[i] - r2[i]).abs() < 1e-12);
        }
    }

    #[test]
    fn singular_matrix_is_rejected() {
        let mut a = vec![1.0, 2.0, 2.0, 4.0];
        let mut rhs = vec![1.0, 2.0];
        assert!(!solve_dense(&mut a, 2, &mut rhs));
    }
}
