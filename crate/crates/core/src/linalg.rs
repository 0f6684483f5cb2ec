//! Exact solution of (possibly overdetermined) linear systems over ℚ.

use num_traits::Zero;

use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinearError {
    /// The equations determine only `rank` of the unknowns.
    Underdetermined { rank: usize },
    /// Equation `row` (index into the input) contradicts the others.
    Inconsistent { row: usize },
}

/// Solves `A·x = b` given augmented rows `[a_1, …, a_n, b]` with `n = unknowns`.
///
/// The system must have full column rank; every surplus equation must be
/// satisfied exactly by the unique solution.
pub fn solve_exact(
    rows: Vec<Vec<Rational>>,
    unknowns: usize,
) -> Result<Vec<Rational>, LinearError> {
    assert!(rows.iter().all(|r| r.len() == unknowns + 1));
    let mut rows: Vec<(usize, Vec<Rational>)> = rows.into_iter().enumerate().collect();
    let mut rank = 0;
    for col in 0..unknowns {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r].1[col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let lead = rows[rank].1[col].clone();
        for v in rows[rank].1.iter_mut() {
            *v /= &lead;
        }
        let pivot_row = rows[rank].1.clone();
        for (r, (_, row)) in rows.iter_mut().enumerate() {
            if r == rank || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (v, p) in row.iter_mut().zip(&pivot_row) {
                *v -= &f * p;
            }
        }
        rank += 1;
    }
    if rank < unknowns {
        return Err(LinearError::Underdetermined { rank });
    }
    if let Some((row, _)) = rows[rank..].iter().find(|(_, r)| !r[unknowns].is_zero()) {
        return Err(LinearError::Inconsistent { row: *row });
    }
    Ok(rows[..unknowns]
        .iter()
        .map(|(_, r)| r[unknowns].clone())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn rows(r: &[&[i64]]) -> Vec<Vec<Rational>> {
        r.iter()
            .map(|row| row.iter().map(|&v| int(v)).collect())
            .collect()
    }

    #[test]
    fn square_system() {
        // x + y = 3, x - y = 1/2 ... scaled: 2x - 2y = 1
        let sol = solve_exact(rows(&[&[1, 1, 3], &[2, -2, 1]]), 2).unwrap();
        assert_eq!(sol, vec![rat(7, 4), rat(5, 4)]);
    }

    #[test]
    fn overdetermined_consistent_and_not() {
        let ok = rows(&[&[1, 0, 1], &[0, 1, 2], &[1, 1, 3]]);
        assert_eq!(solve_exact(ok, 2).unwrap(), vec![int(1), int(2)]);
        let bad = rows(&[&[1, 1, 3], &[1, 0, 1], &[0, 1, 5]]);
        assert_eq!(
            solve_exact(bad, 2),
            Err(LinearError::Inconsistent { row: 2 })
        );
    }

    #[test]
    fn rank_deficient() {
        let r = rows(&[&[1, 2, 3], &[2, 4, 6]]);
        assert_eq!(
            solve_exact(r, 2),
            Err(LinearError::Underdetermined { rank: 1 })
        );
    }
}
