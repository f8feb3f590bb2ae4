//! Exact linear algebra over Q: ranks and consistency solves.
//!
//! Sizes here are modest (hundreds to a few thousand); plain fraction
//! arithmetic with sparse rows is enough.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::rat::Rat;

/// Rank of a dense rational matrix.
pub fn rank_dense(rows: &[Vec<Rat>]) -> usize {
    let mut rows: Vec<Vec<Rat>> = rows.iter().filter(|r| !r.is_empty()).cloned().collect();
    if rows.is_empty() {
        return 0;
    }
    let cols = rows[0].len();
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = rows[rank][col].clone();
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let factor = &rows[r][col] / &inv;
                for c in col..cols {
                    let delta = &rows[rank][c] * &factor;
                    rows[r][c] = &rows[r][c] - &delta;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Sparse linear equation `sum coef_j * lambda_j = rhs`.
#[derive(Clone, Debug, Default)]
pub struct SparseRow {
    pub coeffs: BTreeMap<usize, Rat>,
    pub rhs: Rat,
}

impl SparseRow {
    pub fn add(&mut self, j: usize, c: Rat) {
        if c.is_zero() {
            return;
        }
        let e = self.coeffs.entry(j).or_insert_with(Rat::zero);
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(&j);
        }
    }
}

/// Solve the system by sparse Gaussian elimination. Returns any solution
/// (free unknowns set to zero), or `None` when the system is inconsistent.
pub fn solve_consistent(rows: Vec<SparseRow>, unknowns: usize) -> Option<Vec<Rat>> {
    let mut pivots: BTreeMap<usize, SparseRow> = BTreeMap::new();
    for mut row in rows {
        loop {
            let Some((&j, _)) = row.coeffs.iter().next() else {
                if !row.rhs.is_zero() {
                    return None;
                }
                break;
            };
            if let Some(p) = pivots.get(&j) {
                let factor = row.coeffs[&j].clone();
                let p = p.clone();
                for (&c, v) in &p.coeffs {
                    row.add(c, -(v * &factor));
                }
                row.rhs = &row.rhs - &(&p.rhs * &factor);
            } else {
                let lead = row.coeffs[&j].clone();
                for v in row.coeffs.values_mut() {
                    *v = &*v / &lead;
                }
                row.rhs = &row.rhs / &lead;
                pivots.insert(j, row);
                break;
            }
        }
    }
    // pivots form a triangular system; substitute from the highest column down
    let mut solution = alloc::vec![Rat::zero(); unknowns];
    for (&j, row) in pivots.iter().rev() {
        let mut v = row.rhs.clone();
        for (&c, coef) in &row.coeffs {
            if c != j {
                let delta = coef * &solution[c];
                v = &v - &delta;
            }
        }
        solution[j] = v;
    }
    Some(solution)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat_i;

    #[test]
    fn rank_of_singular_matrix() {
        let rows = alloc::vec![
            alloc::vec![rat_i(1), rat_i(2), rat_i(3)],
            alloc::vec![rat_i(2), rat_i(4), rat_i(6)],
            alloc::vec![rat_i(0), rat_i(1), rat_i(1)],
        ];
        assert_eq!(rank_dense(&rows), 2);
        assert_eq!(rank_dense(&[]), 0);
    }

    #[test]
    fn consistency_solve() {
        // x + y = 3, x - y = 1 -> x = 2, y = 1
        let mut r1 = SparseRow::default();
        r1.add(0, rat_i(1));
        r1.add(1, rat_i(1));
        r1.rhs = rat_i(3);
        let mut r2 = SparseRow::default();
        r2.add(0, rat_i(1));
        r2.add(1, rat_i(-1));
        r2.rhs = rat_i(1);
        let sol = solve_consistent(alloc::vec![r1.clone(), r2], 2).unwrap();
        assert_eq!(sol, alloc::vec![rat_i(2), rat_i(1)]);

        // inconsistent: x + y = 3, x + y = 4
        let mut r3 = SparseRow::default();
        r3.add(0, rat_i(1));
        r3.add(1, rat_i(1));
        r3.rhs = rat_i(4);
        assert!(solve_consistent(alloc::vec![r1, r3], 2).is_none());
    }

    #[test]
    fn underdetermined_system_is_consistent() {
        // x + 2y = 4 has solutions; solver picks one exactly
        let mut r = SparseRow::default();
        r.add(0, rat_i(1));
        r.add(1, rat_i(2));
        r.rhs = rat_i(4);
        let sol = solve_consistent(alloc::vec![r], 2).unwrap();
        let lhs = &sol[0] + &(&sol[1] * &rat_i(2));
        assert_eq!(lhs, rat_i(4));
    }
}
