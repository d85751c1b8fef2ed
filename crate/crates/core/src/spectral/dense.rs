//! Dense symmetric eigensolver: Householder tridiagonalization followed by
//! the implicit-shift QL iteration. This is the classical EISPACK pair —
//! written out rather than pulled in as a dependency because it doubles as
//! the oracle that every sparse counting route is validated against, and an
//! oracle should have no moving parts.

use alloc::vec;
use alloc::vec::Vec;

use crate::math;
use crate::{Error, Result};

const MAX_QL_SWEEPS: usize = 50;

#[inline]
fn sign_as(magnitude: f64, template: f64) -> f64 {
    if template >= 0.0 {
        math::abs(magnitude)
    } else {
        -math::abs(magnitude)
    }
}

/// Householder reduction of the symmetric matrix `a` (row-major, n×n, lower
/// triangle read) to tridiagonal form: diagonal in `d`, subdiagonal in
/// `e[1..]`. With `vectors`, `a` is overwritten by the accumulated orthogonal
/// transformation Q (columns are the basis change).
fn tridiagonalize(a: &mut [f64], n: usize, d: &mut [f64], e: &mut [f64], vectors: bool) {
    for i in (1..n).rev() {
        let l = i - 1;
        let mut h = 0.0;
        if l > 0 {
            let mut scale = 0.0;
            for k in 0..=l {
                scale += math::abs(a[i * n + k]);
            }
            if scale == 0.0 {
                e[i] = a[i * n + l];
            } else {
                for k in 0..=l {
                    a[i * n + k] /= scale;
                    h += a[i * n + k] * a[i * n + k];
                }
                let f = a[i * n + l];
                let g = -sign_as(math::sqrt(h), f);
                e[i] = scale * g;
                h -= f * g;
                a[i * n + l] = f - g;
                let mut f_acc = 0.0;
                for j in 0..=l {
                    if vectors {
                        a[j * n + i] = a[i * n + j] / h;
                    }
                    let mut g = 0.0;
                    for k in 0..=j {
                        g += a[j * n + k] * a[i * n + k];
                    }
                    for k in (j + 1)..=l {
                        g += a[k * n + j] * a[i * n + k];
                    }
                    e[j] = g / h;
                    f_acc += e[j] * a[i * n + j];
                }
                let hh = f_acc / (h + h);
                for j in 0..=l {
                    let f = a[i * n + j];
                    let g = e[j] - hh * f;
                    e[j] = g;
                    for k in 0..=j {
                        a[j * n + k] -= f * e[k] + g * a[i * n + k];
                    }
                }
            }
        } else {
            e[i] = a[i * n + l];
        }
        d[i] = h;
    }
    if n > 0 {
        d[0] = 0.0;
        e[0] = 0.0;
    }
    for i in 0..n {
        if vectors {
            if d[i] != 0.0 {
                for j in 0..i {
                    let mut g = 0.0;
                    for k in 0..i {
                        g += a[i * n + k] * a[k * n + j];
                    }
                    for k in 0..i {
                        a[k * n + j] -= g * a[k * n + i];
                    }
                }
            }
            d[i] = a[i * n + i];
            a[i * n + i] = 1.0;
            for j in 0..i {
                a[j * n + i] = 0.0;
                a[i * n + j] = 0.0;
            }
        } else {
            d[i] = a[i * n + i];
        }
    }
}

/// Implicit-shift QL on a tridiagonal (d, e). With `z`, the rotations are
/// accumulated into the column basis so that column k of z ends up as the
/// eigenvector of d[k].
fn ql_implicit(d: &mut [f64], e: &mut [f64], n: usize, mut z: Option<&mut [f64]>) -> Result<()> {
    if n == 0 {
        return Ok(());
    }
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = 0.0;
    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = math::abs(d[m]) + math::abs(d[m + 1]);
                if math::abs(e[m]) <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > MAX_QL_SWEEPS {
                return Err(Error::NoConvergence { residual: math::abs(e[l]) });
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = math::hypot(g, 1.0);
            g = d[m] - d[l] + e[l] / (g + sign_as(r, g));
            let (mut s, mut c) = (1.0f64, 1.0f64);
            let mut p = 0.0;
            let mut underflow = false;
            for i in (l..m).rev() {
                let mut f = s * e[i];
                let b = c * e[i];
                r = math::hypot(f, g);
                e[i + 1] = r;
                if r == 0.0 {
                    // Premature deflation: split the matrix and restart.
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                if let Some(zz) = z.as_deref_mut() {
                    for k in 0..n {
                        f = zz[k * n + i + 1];
                        zz[k * n + i + 1] = s * zz[k * n + i] + c * f;
                        zz[k * n + i] = c * zz[k * n + i] - s * f;
                    }
                }
            }
            if underflow {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    Ok(())
}

/// All eigenvalues of the symmetric matrix `a` (row-major n×n, destroyed),
/// sorted ascending.
pub(crate) fn symmetric_eigenvalues(a: &mut [f64], n: usize) -> Result<Vec<f64>> {
    debug_assert_eq!(a.len(), n * n);
    let mut d = vec![0.0; n];
    let mut e = vec![0.0; n];
    tridiagonalize(a, n, &mut d, &mut e, false);
    ql_implicit(&mut d, &mut e, n, None)?;
    d.sort_unstable_by(|x, y| x.partial_cmp(y).unwrap());
    Ok(d)
}

/// All eigenvalues (ascending) plus the normalized eigenvector of the lowest
/// one. `a` is destroyed.
pub(crate) fn symmetric_eigen_ground(a: &mut [f64], n: usize) -> Result<(Vec<f64>, Vec<f64>)> {
    debug_assert_eq!(a.len(), n * n);
    if n == 0 {
        return Ok((Vec::new(), Vec::new()));
    }
    let mut d = vec![0.0; n];
    let mut e = vec![0.0; n];
    tridiagonalize(a, n, &mut d, &mut e, true);
    ql_implicit(&mut d, &mut e, n, Some(a))?;
    let mut lowest = 0;
    for k in 1..n {
        if d[k] < d[lowest] {
            lowest = k;
        }
    }
    let mut ground: Vec<f64> = (0..n).map(|k| a[k * n + lowest]).collect();
    let norm = math::sqrt(ground.iter().map(|&x| x * x).sum());
    if norm > 0.0 {
        for x in ground.iter_mut() {
            *x /= norm;
        }
    }
    d.sort_unstable_by(|x, y| x.partial_cmp(y).unwrap());
    Ok((d, ground))
}
