//! Exact feasibility by phase-one simplex.
//!
//! Dense tableau over rationals, Bland's rule for both the entering and the
//! leaving variable, so the method terminates without any tolerance.

use num_traits::{One, Signed, Zero};

use crate::exactlin::Rational;

/// Returns some `x ≥ 0` with `A x = b`, or `None` when no such point exists.
///
/// `a` is row major with every row of equal length.
pub fn feasible_point(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let rows = a.len();
    assert_eq!(rows, b.len(), "one right-hand side per row");
    let vars = a.first().map_or(0, Vec::len);
    let width = vars + rows + 1;
    let rhs = width - 1;

    // [A | I | b], rows flipped so that b ≥ 0; artificials form the basis
    let mut tab: Vec<Vec<Rational>> = Vec::with_capacity(rows);
    for (i, (row, bi)) in a.iter().zip(b).enumerate() {
        assert_eq!(row.len(), vars, "ragged constraint matrix");
        let flip = bi.is_negative();
        let mut t = vec![Rational::zero(); width];
        for (j, v) in row.iter().enumerate() {
            t[j] = if flip { -v } else { v.clone() };
        }
        t[vars + i] = Rational::one();
        t[rhs] = if flip { -bi } else { bi.clone() };
        tab.push(t);
    }
    let mut basis: Vec<usize> = (vars..vars + rows).collect();

    // reduced costs of "minimize the sum of artificials"
    let mut cost = vec![Rational::zero(); width];
    for t in &tab {
        for j in 0..vars {
            cost[j] -= &t[j];
        }
        cost[rhs] -= &t[rhs];
    }

    while let Some(enter) = (0..width - 1).find(|&j| cost[j].is_negative()) {
        let mut leave: Option<(usize, Rational)> = None;
        for (i, t) in tab.iter().enumerate() {
            if !t[enter].is_positive() {
                continue;
            }
            let ratio = &t[rhs] / &t[enter];
            leave = match leave {
                None => Some((i, ratio)),
                Some((k, best)) => {
                    if ratio < best || (ratio == best && basis[i] < basis[k]) {
                        Some((i, ratio))
                    } else {
                        Some((k, best))
                    }
                }
            };
        }
        // phase one is bounded below by zero, so a pivot row always exists
        let (row, _) = leave.expect("phase-one objective is bounded");
        pivot(&mut tab, &mut cost, row, enter);
        basis[row] = enter;
    }

    if !cost[rhs].is_zero() {
        return None;
    }
    let mut x = vec![Rational::zero(); vars];
    for (i, &var) in basis.iter().enumerate() {
        if var < vars {
            x[var] = tab[i][rhs].clone();
        }
    }
    Some(x)
}

fn pivot(tab: &mut [Vec<Rational>], cost: &mut [Rational], row: usize, col: usize) {
    let p = tab[row][col].clone();
    for v in tab[row].iter_mut() {
        *v = &*v / &p;
    }
    let pivot_row = tab[row].clone();
    for (i, t) in tab.iter_mut().enumerate() {
        if i == row || t[col].is_zero() {
            continue;
        }
        let f = t[col].clone();
        for (v, pv) in t.iter_mut().zip(&pivot_row) {
            if !pv.is_zero() {
                *v -= &f * pv;
            }
        }
    }
    let f = cost[col].clone();
    if !f.is_zero() {
        for (v, pv) in cost.iter_mut().zip(&pivot_row) {
            if !pv.is_zero() {
                *v -= &f * pv;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{frac, int};

    fn rows(r: &[&[i64]]) -> Vec<Vec<Rational>> {
        r.iter().map(|row| row.iter().map(|&v| int(v)).collect()).collect()
    }

    fn check(a: &[Vec<Rational>], b: &[Rational], x: &[Rational]) {
        assert!(x.iter().all(|v| !v.is_negative()));
        for (row, bi) in a.iter().zip(b) {
            let lhs = row.iter().zip(x).fold(Rational::zero(), |acc, (p, q)| acc + p * q);
            assert_eq!(&lhs, bi);
        }
    }

    #[test]
    fn simple_feasible() {
        let a = rows(&[&[1, 1], &[1, -1]]);
        let b = vec![int(2), int(0)];
        let x = feasible_point(&a, &b).unwrap();
        check(&a, &b, &x);
        assert_eq!(x, vec![int(1), int(1)]);
    }

    #[test]
    fn simple_infeasible() {
        // x + y = 1 and x + y = 2
        let a = rows(&[&[1, 1], &[1, 1]]);
        assert!(feasible_point(&a, &[int(1), int(2)]).is_none());
        // x = -1 with x ≥ 0
        assert!(feasible_point(&rows(&[&[1]]), &[int(-1)]).is_none());
    }

    #[test]
    fn negative_rhs_and_fractions() {
        let a = vec![vec![frac(-1, 2), frac(1, 3), int(0)], vec![int(1), int(1), int(1)]];
        let b = vec![frac(-1, 4), int(1)];
        let x = feasible_point(&a, &b).unwrap();
        check(&a, &b, &x);
    }

    #[test]
    fn degenerate_cycling_example() {
        // Beale's classic cycling instance recast as feasibility with slacks
        let a = vec![
            vec![frac(1, 4), int(-8), int(-1), int(9), int(1), int(0), int(0)],
            vec![frac(1, 2), int(-12), frac(-1, 2), int(3), int(0), int(1), int(0)],
            vec![int(0), int(0), int(1), int(0), int(0), int(0), int(1)],
        ];
        let b = vec![int(0), int(0), int(1)];
        let x = feasible_point(&a, &b).unwrap();
        check(&a, &b, &x);
    }

    #[test]
    fn empty_system() {
        assert_eq!(feasible_point(&[], &[]), Some(vec![]));
    }
}
