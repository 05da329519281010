//! Exact dense linear solving by fraction-free (Bareiss) elimination.

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Signed, Zero};

use super::AlgebraError;

/// Solves `M x = rhs` exactly for a square rational matrix.
///
/// Rows are scaled to a common integer denominator, the integer system is
/// reduced by one-step fraction-free elimination with row pivoting (every
/// intermediate division is exact), and the triangular system is back
/// substituted in rationals. Returns [`AlgebraError::SingularSystem`] when
/// no pivot can be found.
pub fn solve_rational_system<I>(
    matrix: &[Vec<Ratio<I>>],
    rhs: &[Ratio<I>],
) -> Result<Vec<Ratio<I>>, AlgebraError>
where
    I: Integer + Signed + Clone,
{
    let n = matrix.len();
    assert_eq!(rhs.len(), n, "rhs length must match matrix dimension");
    for row in matrix {
        assert_eq!(row.len(), n, "matrix must be square");
    }
    if n == 0 {
        return Ok(Vec::new());
    }

    // Augmented integer matrix: scale each row by the lcm of its denominators.
    let mut m: Vec<Vec<I>> = Vec::with_capacity(n);
    for (row, b) in matrix.iter().zip(rhs) {
        let mut lcm = I::one();
        for entry in row.iter().chain(std::iter::once(b)) {
            lcm = lcm.lcm(entry.denom());
        }
        let scaled: Vec<I> = row
            .iter()
            .chain(std::iter::once(b))
            .map(|entry| entry.numer().clone() * (lcm.clone() / entry.denom().clone()))
            .collect();
        m.push(scaled);
    }

    let mut prev_pivot = I::one();
    for k in 0..n {
        let pivot_row = (k..n)
            .find(|&i| !m[i][k].is_zero())
            .ok_or(AlgebraError::SingularSystem)?;
        m.swap(k, pivot_row);
        for i in k + 1..n {
            for j in k + 1..=n {
                let num = m[k][k].clone() * m[i][j].clone() - m[i][k].clone() * m[k][j].clone();
                debug_assert!(num.is_multiple_of(&prev_pivot));
                m[i][j] = num / prev_pivot.clone();
            }
            m[i][k] = I::zero();
        }
        prev_pivot = m[k][k].clone();
    }

    // Back substitution over rationals.
    let mut solution = vec![Ratio::<I>::zero(); n];
    for k in (0..n).rev() {
        let mut acc = Ratio::from_integer(m[k][n].clone());
        for (coeff, value) in m[k][k + 1..n].iter().zip(&solution[k + 1..n]) {
            acc = acc - Ratio::from_integer(coeff.clone()) * value.clone();
        }
        solution[k] = acc / Ratio::from_integer(m[k][k].clone());
    }
    Ok(solution)
}
