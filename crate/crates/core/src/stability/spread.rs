//! Analytic spread of equigenerated monomial ideals.

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::linalg::{from_integers, rank};
use crate::Rational;

/// `ℓ(I)`: for an equigenerated monomial ideal, the fiber cone is the toric
/// ring of `G(I)`, whose dimension is the rank of the exponent matrix.
pub fn analytic_spread(ideal: &MonomialIdeal) -> Result<usize> {
    if ideal.is_zero() {
        return Ok(0);
    }
    if !ideal.is_equigenerated() {
        return Err(Error::Mode(
            "analytic spread is computed for equigenerated ideals only".into(),
        ));
    }
    let rows: Vec<Vec<i64>> = ideal
        .generators()
        .iter()
        .map(|g| g.exponents().iter().map(|&e| e as i64).collect())
        .collect();
    Ok(rank(from_integers::<Rational>(&rows)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::Monomial;

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::minimalize(gens.iter().map(|g| Monomial::new(g)), n).unwrap()
    }

    #[test]
    fn spread_examples() {
        assert_eq!(analytic_spread(&ideal(2, &[&[1, 1]])).unwrap(), 1);
        let k3 = ideal(3, &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]);
        assert_eq!(analytic_spread(&k3).unwrap(), 3);
        let t = ideal(
            4,
            &[&[1, 0, 1, 0], &[1, 0, 0, 1], &[0, 1, 1, 0], &[0, 1, 0, 1]],
        );
        assert_eq!(analytic_spread(&t).unwrap(), 3);
        assert!(analytic_spread(&ideal(2, &[&[1, 0], &[0, 2]])).is_err());
    }
}
