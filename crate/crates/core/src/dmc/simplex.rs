//! Phase-1 simplex for feasibility of `A x = b, x >= 0`.

/// Reduced costs above `-COST_EPS` count as optimal.
const COST_EPS: f64 = 1e-11;
/// Smallest admissible pivot magnitude; smaller entries are rounding noise.
const PIVOT_EPS: f64 = 1e-9;
const MAX_PIVOTS: usize = 100_000;

/// A nonnegative solution of `A x = b`, or `None` if the smallest total
/// artificial infeasibility exceeds `tol`.
///
/// Dense tableau with Bland's rule, so cycling cannot occur.
pub(crate) fn feasible_point(a: &[Vec<f64>], b: &[f64], tol: f64) -> Option<Vec<f64>> {
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let width = n + m + 1;
    let mut t = vec![0.0; (m + 1) * width];
    let rhs = width - 1;
    for i in 0..m {
        let sign = if b[i] < 0.0 { -1.0 } else { 1.0 };
        for j in 0..n {
            t[i * width + j] = sign * a[i][j];
        }
        t[i * width + n + i] = 1.0;
        t[i * width + rhs] = sign * b[i];
    }
    // Objective row: minimise the artificial sum, expressed in reduced costs.
    let obj = m * width;
    for i in 0..m {
        for j in 0..n {
            t[obj + j] -= t[i * width + j];
        }
        t[obj + rhs] -= t[i * width + rhs];
    }
    let mut basis: Vec<usize> = (n..n + m).collect();

    for _ in 0..MAX_PIVOTS {
        let Some(col) = (0..n + m).find(|&j| t[obj + j] < -COST_EPS) else { break };
        let mut row = None;
        let mut best = f64::INFINITY;
        for i in 0..m {
            let aij = t[i * width + col];
            if aij > PIVOT_EPS {
                let ratio = t[i * width + rhs] / aij;
                let better = ratio < best - PIVOT_EPS
                    || (ratio <= best + PIVOT_EPS && row.is_some_and(|r: usize| basis[i] < basis[r]));
                if row.is_none() || better {
                    best = ratio;
                    row = Some(i);
                }
            }
        }
        let Some(r) = row else { break };
        let piv = t[r * width + col];
        for j in 0..width {
            t[r * width + j] /= piv;
        }
        for i in 0..=m {
            if i == r {
                continue;
            }
            let f = t[i * width + col];
            if f != 0.0 {
                for j in 0..width {
                    t[i * width + j] -= f * t[r * width + j];
                }
            }
        }
        basis[r] = col;
    }

    if -t[obj + rhs] > tol {
        return None;
    }
    let mut x = vec![0.0; n];
    for (i, &bv) in basis.iter().enumerate() {
        if bv < n {
            x[bv] = t[i * width + rhs].max(0.0);
        }
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_point_on_simplex() {
        let a = vec![vec![1.0, 1.0, 1.0], vec![1.0, -1.0, 0.0]];
        let x = feasible_point(&a, &[1.0, 0.2], 1e-12).unwrap();
        assert!((x.iter().sum::<f64>() - 1.0).abs() < 1e-12);
        assert!((x[0] - x[1] - 0.2).abs() < 1e-12);
        assert!(x.iter().all(|v| *v >= 0.0));
    }

    #[test]
    fn detects_infeasible() {
        // x + y = 1 and x + y = 2.
        let a = vec![vec![1.0, 1.0], vec![1.0, 1.0]];
        assert!(feasible_point(&a, &[1.0, 2.0], 1e-9).is_none());
        // x - y = -1 with x, y >= 0 is fine; -x - y = 1 is not.
        assert!(feasible_point(&[vec![1.0, -1.0]], &[-1.0], 1e-9).is_some());
        assert!(feasible_point(&[vec![-1.0, -1.0]], &[1.0], 1e-9).is_none());
    }

    #[test]
    fn redundant_rows_are_harmless() {
        let a = vec![vec![1.0, 1.0], vec![2.0, 2.0], vec![1.0, 0.0]];
        let x = feasible_point(&a, &[1.0, 2.0, 0.25], 1e-12).unwrap();
        assert!((x[0] - 0.25).abs() < 1e-12 && (x[1] - 0.75).abs() < 1e-12);
    }
}
