//! Monomials as exponent vectors and monomial prime ideals as variable sets.

use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

use crate::error::{check_dims, Error, Result};

/// Machine-width exponent. Products are overflow-checked.
pub type Exponent = u32;

pub(crate) type Exps = SmallVec<[Exponent; 12]>;

/// A monomial `x_1^{t_1} ... x_n^{t_n}` over a fixed number of variables.
///
/// Variables are indexed from zero internally; `Display` prints them
/// one-based (`x1*x3^2`).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Exps,
}

impl Monomial {
    pub fn new(exps: &[Exponent]) -> Self {
        Monomial {
            exps: Exps::from_slice(exps),
        }
    }

    /// The monomial `1` in `n` variables.
    pub fn one(n: usize) -> Self {
        Monomial {
            exps: SmallVec::from_elem(0, n),
        }
    }

    /// The variable `x_i` (zero-based) in `n` variables.
    pub fn var(i: usize, n: usize) -> Self {
        let mut m = Self::one(n);
        m.exps[i] = 1;
        m
    }

    /// Square-free product of the listed variables.
    pub fn from_support(n: usize, vars: &[usize]) -> Self {
        let mut m = Self::one(n);
        for &v in vars {
            m.exps[v] = 1;
        }
        m
    }

    pub fn num_vars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponent(&self, i: usize) -> Exponent {
        self.exps[i]
    }

    pub fn exponents(&self) -> &[Exponent] {
        &self.exps
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// Zero-based indices of the variables occurring in the monomial.
    pub fn support(&self) -> Vec<usize> {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect()
    }

    /// Componentwise `self <= other`. Both must have the same length.
    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        check_dims(self.num_vars(), other.num_vars())?;
        let mut exps = Exps::with_capacity(self.exps.len());
        for (a, b) in self.exps.iter().zip(other.exps.iter()) {
            exps.push(a.checked_add(*b).ok_or(Error::Overflow)?);
        }
        Ok(Monomial { exps })
    }

    pub(crate) fn mul_var(&self, i: usize) -> Result<Monomial> {
        let mut m = self.clone();
        m.exps[i] = m.exps[i].checked_add(1).ok_or(Error::Overflow)?;
        Ok(m)
    }

    /// `self / x_i`, or `None` when `x_i` does not divide `self`.
    pub fn div_var(&self, i: usize) -> Option<Monomial> {
        if self.exps[i] == 0 {
            return None;
        }
        let mut m = self.clone();
        m.exps[i] -= 1;
        Some(m)
    }

    /// Exact quotient, or `None` when `other` does not divide `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(self.saturating_div(other))
    }

    /// `self / gcd(self, other)`, i.e. componentwise truncated subtraction.
    pub fn saturating_div(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(other.exps.iter())
                .map(|(a, b)| a.saturating_sub(*b))
                .collect(),
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(other.exps.iter())
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(other.exps.iter())
                .map(|(a, b)| *a.min(b))
                .collect(),
        }
    }

    /// Keep only the listed coordinates, in the listed order.
    pub fn project(&self, vars: &[usize]) -> Monomial {
        Monomial {
            exps: vars.iter().map(|&v| self.exps[v]).collect(),
        }
    }

    /// Inverse of [`Monomial::project`]: place coordinates at `vars` inside `n` variables.
    pub fn embed(&self, n: usize, vars: &[usize]) -> Monomial {
        let mut m = Self::one(n);
        for (k, &v) in vars.iter().enumerate() {
            m.exps[v] = self.exps[k];
        }
        m
    }

    /// Delete the `i`-th coordinate, giving a monomial in one fewer variable.
    pub fn delete_var(&self, i: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps.remove(i);
        Monomial { exps }
    }

    /// Apply a variable permutation: variable `i` becomes variable `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Monomial {
        let mut m = Self::one(self.num_vars());
        for (i, &e) in self.exps.iter().enumerate() {
            m.exps[perm[i]] = e;
        }
        m
    }

    /// Canonical generator order: ascending degree, then lexicographically
    /// descending exponent vectors (so `x1x2` precedes `x1x3` precedes `x2x3`).
    pub fn canonical_cmp(&self, other: &Monomial) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

/// Graded lexicographic order with `x1 > x2 > ... > xn`.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A monomial prime ideal `(x_i : i in vars)`, recorded by its variable set.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PrimeSupport {
    n: usize,
    vars: Vec<usize>,
}

impl PrimeSupport {
    /// Build from zero-based variable indices; duplicates are merged.
    pub fn new(n: usize, vars: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut vars: Vec<usize> = vars.into_iter().collect();
        vars.sort_unstable();
        vars.dedup();
        if let Some(&v) = vars.last() {
            if v >= n {
                return Err(Error::Invalid(format!(
                    "variable x{} outside ambient ring of {n} variables",
                    v + 1
                )));
            }
        }
        Ok(PrimeSupport { n, vars })
    }

    /// The maximal ideal `m = (x_1, ..., x_n)`.
    pub fn maximal(n: usize) -> Self {
        PrimeSupport {
            n,
            vars: (0..n).collect(),
        }
    }

    pub(crate) fn from_mask(n: usize, mask: u64) -> Self {
        PrimeSupport {
            n,
            vars: (0..n).filter(|&i| mask >> i & 1 == 1).collect(),
        }
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn vars(&self) -> &[usize] {
        &self.vars
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn is_maximal(&self) -> bool {
        self.vars.len() == self.n
    }

    pub fn contains(&self, var: usize) -> bool {
        self.vars.binary_search(&var).is_ok()
    }

    pub fn is_subset(&self, other: &PrimeSupport) -> bool {
        self.vars.iter().all(|v| other.contains(*v))
    }

    /// One-based variable indices, as printed in reports.
    pub fn one_based(&self) -> Vec<usize> {
        self.vars.iter().map(|v| v + 1).collect()
    }
}

/// Primes are ordered by size, then lexicographically by variable list.
impl Ord for PrimeSupport {
    fn cmp(&self, other: &Self) -> Ordering {
        self.vars
            .len()
            .cmp(&other.vars.len())
            .then_with(|| self.vars.cmp(&other.vars))
            .then_with(|| self.n.cmp(&other.n))
    }
}

impl PartialOrd for PrimeSupport {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for PrimeSupport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, v) in self.vars.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "x{}", v + 1)?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for PrimeSupport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_is_additive() {
        let u = Monomial::new(&[1, 0, 2]);
        let v = Monomial::new(&[0, 3, 1]);
        assert_eq!(u.checked_mul(&v).unwrap().degree(), u.degree() + v.degree());
    }

    #[test]
    fn divisibility_is_componentwise() {
        let u = Monomial::new(&[1, 0, 2]);
        assert!(u.divides(&Monomial::new(&[1, 1, 2])));
        assert!(!u.divides(&Monomial::new(&[0, 5, 5])));
    }

    #[test]
    fn overflow_is_reported() {
        let u = Monomial::new(&[u32::MAX, 0]);
        assert_eq!(u.checked_mul(&Monomial::var(0, 2)), Err(Error::Overflow));
        assert!(u.checked_mul(&Monomial::var(1, 2)).is_ok());
    }

    #[test]
    fn display_is_one_based() {
        assert_eq!(Monomial::new(&[1, 0, 2]).to_string(), "x1*x3^2");
        assert_eq!(Monomial::one(3).to_string(), "1");
    }

    #[test]
    fn canonical_order_puts_x1x2_first() {
        let mut v = vec![
            Monomial::new(&[0, 1, 1]),
            Monomial::new(&[1, 0, 1]),
            Monomial::new(&[1, 1, 0]),
            Monomial::new(&[1, 0, 0]),
        ];
        v.sort_by(|a, b| a.canonical_cmp(b));
        let shown: Vec<String> = v.iter().map(|m| m.to_string()).collect();
        assert_eq!(shown, ["x1", "x1*x2", "x1*x3", "x2*x3"]);
    }

    #[test]
    fn prime_rejects_out_of_range() {
        assert!(PrimeSupport::new(3, [0, 3]).is_err());
        let p = PrimeSupport::new(4, [2, 0, 2]).unwrap();
        assert_eq!(p.vars(), &[0, 2]);
        assert_eq!(p.to_string(), "(x1,x3)");
    }
}
