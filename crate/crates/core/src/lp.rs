//! Exact simplex method for the origin-feasible programs used by the cone
//! machinery:
//!
//! ```text
//! maximize c.y  subject to  A y <= b,  y free,  b >= 0
//! ```
//!
//! The origin is the starting basic solution with all slacks basic. Free
//! variables enter the basis once and never leave. Pivoting follows Bland's
//! rule.

use num::{Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Optimum {
    pub value: Rational,
    pub point: Vec<Rational>,
}

/// Solves the program; errors if it is unbounded or the origin is infeasible.
pub fn maximize(objective: &[Rational], rows: &[Vec<Rational>], rhs: &[Rational]) -> Result<Optimum> {
    let d = objective.len();
    let m = rows.len();
    if rhs.len() != m || rows.iter().any(|r| r.len() != d) {
        return Err(Error::Internal("lp dimensions disagree".into()));
    }
    if rhs.iter().any(Signed::is_negative) {
        return Err(Error::Internal("lp right-hand side must be nonnegative".into()));
    }
    // Variable ids: 0..d structural (free), d..d+m slacks.
    // Dictionary: basic[r] = beta[r] + sum_k alpha[r][k] * nonbasic[k]
    let mut basic: Vec<usize> = (d..d + m).collect();
    let mut nonbasic: Vec<usize> = (0..d).collect();
    let mut beta: Vec<Rational> = rhs.to_vec();
    let mut alpha: Vec<Vec<Rational>> = rows.iter().map(|r| r.iter().map(|a| -a).collect()).collect();
    let mut zeta = Rational::zero();
    let mut gamma: Vec<Rational> = objective.to_vec();
    let is_free = |v: usize| v < d;

    loop {
        // Bland: smallest improving variable id.
        let entering = nonbasic
            .iter()
            .enumerate()
            .filter(|&(k, &v)| if is_free(v) { !gamma[k].is_zero() } else { gamma[k].is_positive() })
            .min_by_key(|&(_, &v)| v)
            .map(|(k, _)| k);
        let Some(e) = entering else { break };
        let up = gamma[e].is_positive();

        let mut leave: Option<(usize, Rational)> = None;
        for r in 0..m {
            if is_free(basic[r]) {
                continue;
            }
            let a = if up { alpha[r][e].clone() } else { -alpha[r][e].clone() };
            if !a.is_negative() {
                continue;
            }
            let ratio = &beta[r] / -a;
            let better = match &leave {
                None => true,
                Some((lr, best)) => ratio < *best || (ratio == *best && basic[r] < basic[*lr]),
            };
            if better {
                leave = Some((r, ratio));
            }
        }
        let Some((l, _)) = leave else {
            return Err(Error::Internal("lp is unbounded".into()));
        };

        // Solve row l for the entering variable.
        let piv = alpha[l][e].clone();
        let inv = piv.recip();
        let mut new_row: Vec<Rational> = alpha[l].iter().map(|a| -(a * &inv)).collect();
        new_row[e] = inv.clone();
        let new_beta = -(&beta[l] * &inv);
        for r in 0..m {
            if r == l || alpha[r][e].is_zero() {
                continue;
            }
            let f = alpha[r][e].clone();
            for k in 0..nonbasic.len() {
                if k == e {
                    alpha[r][k] = &f * &new_row[k];
                } else if !new_row[k].is_zero() {
                    let v = &f * &new_row[k];
                    alpha[r][k] += v;
                }
            }
            beta[r] += &f * &new_beta;
        }
        if !gamma[e].is_zero() {
            let f = gamma[e].clone();
            for k in 0..nonbasic.len() {
                if k == e {
                    gamma[k] = &f * &new_row[k];
                } else if !new_row[k].is_zero() {
                    let v = &f * &new_row[k];
                    gamma[k] += v;
                }
            }
            zeta += &f * &new_beta;
        }
        alpha[l] = new_row;
        beta[l] = new_beta;
        std::mem::swap(&mut basic[l], &mut nonbasic[e]);
    }

    let mut point = vec![Rational::zero(); d];
    for (r, &v) in basic.iter().enumerate() {
        if is_free(v) {
            point[v] = beta[r].clone();
        }
    }
    Ok(Optimum { value: zeta, point })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{dot, int, ratio};

    fn r(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn textbook_program() {
        // max 3x + 2y, x + y <= 4, x + 3y <= 6, -x <= 0, -y <= 0
        let rows = vec![r(&[1, 1]), r(&[1, 3]), r(&[-1, 0]), r(&[0, -1])];
        let opt = maximize(&r(&[3, 2]), &rows, &r(&[4, 6, 0, 0])).unwrap();
        assert_eq!(opt.value, int(12));
        assert_eq!(opt.point, r(&[4, 0]));
    }

    #[test]
    fn free_variables_move_negative() {
        // max -x subject to x >= -5 (i.e. -x <= 5)
        let opt = maximize(&r(&[-1]), &[r(&[-1])], &r(&[5])).unwrap();
        assert_eq!(opt.value, int(5));
        assert_eq!(opt.point, r(&[-5]));
    }

    #[test]
    fn degenerate_homogeneous_program() {
        // max t s.t. x - t >= 0, y - t >= 0, -x - y + t >= 0 ... i.e. cone x,y>=t, x+y<=t
        // feasible only at t = 0
        let rows = vec![r(&[-1, 0, 1]), r(&[0, -1, 1]), r(&[1, 1, -1]), r(&[0, 0, 1])];
        let opt = maximize(&r(&[0, 0, 1]), &rows, &r(&[0, 0, 0, 1])).unwrap();
        assert_eq!(opt.value, int(0));
    }

    #[test]
    fn unbounded_is_an_error() {
        assert!(maximize(&r(&[1]), &[r(&[-1])], &r(&[0])).is_err());
    }

    #[test]
    fn optimum_is_feasible() {
        let rows = vec![r(&[2, -1]), r(&[-1, 3]), r(&[1, 1])];
        let rhs = vec![int(4), int(3), int(5)];
        let opt = maximize(&[ratio(1, 2), int(1)], &rows, &rhs).unwrap();
        for (row, b) in rows.iter().zip(&rhs) {
            assert!(dot(row, &opt.point) <= *b);
        }
        assert_eq!(dot(&[ratio(1, 2), int(1)], &opt.point), opt.value);
    }
}
