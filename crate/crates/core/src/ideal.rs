//! Monomial ideals stored by their minimal generating set.

use std::collections::HashSet;
use std::fmt;

use crate::error::{check_dims, Error, Result};
use crate::monomial::{Monomial, PrimeSupport};

/// A monomial ideal in `n` variables, held as its minimal generators in
/// canonical order (see [`Monomial::canonical_cmp`]).
///
/// The zero ideal has no generators; the unit ideal is generated by `1`.
/// Two ideals are equal exactly when their generator sequences are equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Monomial>,
}

/// Invariants read off the minimal generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasicInvariants {
    /// Zero-based indices of variables occurring in some generator.
    pub support: Vec<usize>,
    pub gcd: Monomial,
    pub is_squarefree: bool,
    pub is_equigenerated: bool,
    /// Common degree of the generators, when equigenerated.
    pub degree: Option<u64>,
}

/// A localized ideal `I(p)` living in the subring on the variables of `p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Localization {
    pub ideal: MonomialIdeal,
    /// `vars[k]` is the ambient index of the subring's `k`-th variable.
    pub vars: Vec<usize>,
}

/// The result of dividing out `gcd(I)` and dropping variables outside `supp(I)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Normalized {
    pub ideal: MonomialIdeal,
    pub kept_vars: Vec<usize>,
    pub gcd: Monomial,
}

impl MonomialIdeal {
    /// Reduce a generating set to the minimal one, in canonical order.
    pub fn minimalize(gens: impl IntoIterator<Item = Monomial>, n: usize) -> Result<Self> {
        let gens: Vec<Monomial> = gens.into_iter().collect();
        for g in &gens {
            check_dims(n, g.num_vars())?;
        }
        Ok(Self::minimalize_unchecked(gens, n))
    }

    pub(crate) fn minimalize_unchecked(mut gens: Vec<Monomial>, n: usize) -> Self {
        if gens.len() > 4096 {
            // Products of large ideals repeat heavily; hashing first keeps the sort small.
            let unique: HashSet<Monomial> = gens.into_iter().collect();
            gens = unique.into_iter().collect();
        }
        gens.sort_unstable_by(|a, b| a.canonical_cmp(b));
        gens.dedup();
        let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
        let mut kept_degs: Vec<u64> = Vec::with_capacity(gens.len());
        // kept[..lower] holds the generators of strictly smaller degree than the
        // candidate; distinct monomials of equal degree never divide each other.
        let mut lower = 0;
        for g in gens {
            let deg = g.degree();
            while lower < kept.len() && kept_degs[lower] < deg {
                lower += 1;
            }
            if !kept[..lower].iter().any(|h| h.divides(&g)) {
                kept.push(g);
                kept_degs.push(deg);
            }
        }
        MonomialIdeal { n, gens: kept }
    }

    pub fn zero(n: usize) -> Self {
        MonomialIdeal {
            n,
            gens: Vec::new(),
        }
    }

    pub fn unit(n: usize) -> Self {
        MonomialIdeal {
            n,
            gens: vec![Monomial::one(n)],
        }
    }

    /// The monomial prime ideal generated by the variables of `p`.
    pub fn prime(p: &PrimeSupport) -> Self {
        let n = p.ambient();
        Self::minimalize_unchecked(p.vars().iter().map(|&i| Monomial::var(i, n)).collect(), n)
    }

    /// The maximal ideal `m = (x_1, ..., x_n)`.
    pub fn maximal(n: usize) -> Self {
        Self::prime(&PrimeSupport::maximal(n))
    }

    pub fn num_vars(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    /// Common generator degree, or `None` for mixed degrees or the zero ideal.
    pub fn degree(&self) -> Option<u64> {
        let d = self.gens.first()?.degree();
        self.gens.iter().all(|g| g.degree() == d).then_some(d)
    }

    pub fn is_equigenerated(&self) -> bool {
        self.degree().is_some()
    }

    /// Zero-based indices of variables dividing some generator.
    pub fn support(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&i| self.gens.iter().any(|g| g.exponent(i) > 0))
            .collect()
    }

    /// `gcd(G(I))`; `1` for the zero ideal.
    pub fn gcd(&self) -> Monomial {
        let mut it = self.gens.iter();
        match it.next() {
            None => Monomial::one(self.n),
            Some(first) => it.fold(first.clone(), |acc, g| acc.gcd(g)),
        }
    }

    /// `lcm(G(I))`; `1` for the zero ideal.
    pub fn lcm(&self) -> Monomial {
        self.gens
            .iter()
            .fold(Monomial::one(self.n), |acc, g| acc.lcm(g))
    }

    pub fn basic_invariants(&self) -> Result<BasicInvariants> {
        if self.is_zero() {
            return Err(Error::Invalid("the zero ideal has no invariants".into()));
        }
        let degree = self.degree();
        Ok(BasicInvariants {
            support: self.support(),
            gcd: self.gcd(),
            is_squarefree: self.is_squarefree(),
            is_equigenerated: degree.is_some(),
            degree,
        })
    }

    /// Whether `gcd(I) = 1` and every variable occurs in some generator.
    pub fn has_standard_position(&self) -> bool {
        !self.is_zero() && self.gcd().is_one() && self.support().len() == self.n
    }

    pub fn contains(&self, u: &Monomial) -> Result<bool> {
        check_dims(self.n, u.num_vars())?;
        Ok(self.contains_unchecked(u))
    }

    #[inline]
    pub(crate) fn contains_unchecked(&self, u: &Monomial) -> bool {
        let deg = u.degree();
        self.gens
            .iter()
            .take_while(|g| g.degree() <= deg)
            .any(|g| g.divides(u))
    }

    pub fn contains_ideal(&self, other: &MonomialIdeal) -> Result<bool> {
        check_dims(self.n, other.n)?;
        Ok(other.gens.iter().all(|g| self.contains_unchecked(g)))
    }

    /// Minimalized products `u * v` over `u in G(I)`, `v in G(J)`.
    pub fn multiply(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        check_dims(self.n, other.n)?;
        let mut prods = Vec::with_capacity(self.gens.len() * other.gens.len());
        for u in &self.gens {
            for v in &other.gens {
                prods.push(u.checked_mul(v)?);
            }
        }
        Ok(Self::minimalize_unchecked(prods, self.n))
    }

    /// `I^k` by repeated squaring. `I^0` is the unit ideal.
    pub fn power(&self, k: u32) -> Result<MonomialIdeal> {
        let mut result = Self::unit(self.n);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.multiply(&base)?;
            }
            k >>= 1;
            if k > 0 {
                base = base.multiply(&base)?;
            }
        }
        Ok(result)
    }

    /// The colon ideal `(I : u)`.
    pub fn colon(&self, u: &Monomial) -> Result<MonomialIdeal> {
        check_dims(self.n, u.num_vars())?;
        Ok(Self::minimalize_unchecked(
            self.gens.iter().map(|g| g.saturating_div(u)).collect(),
            self.n,
        ))
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        check_dims(self.n, other.n)?;
        let mut lcms = Vec::with_capacity(self.gens.len() * other.gens.len());
        for u in &self.gens {
            for v in &other.gens {
                lcms.push(u.lcm(v));
            }
        }
        Ok(Self::minimalize_unchecked(lcms, self.n))
    }

    /// The ideal sum `I + J`.
    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        check_dims(self.n, other.n)?;
        Ok(Self::minimalize_unchecked(
            self.gens.iter().chain(other.gens.iter()).cloned().collect(),
            self.n,
        ))
    }

    /// `(J : m) = (J : x_1) ∩ ... ∩ (J : x_n)`, folded in variable order.
    pub fn socle_colon(&self) -> MonomialIdeal {
        let mut acc = Self::unit(self.n);
        for i in 0..self.n {
            let c = self
                .colon(&Monomial::var(i, self.n))
                .expect("dimensions agree");
            acc = acc.intersect(&c).expect("dimensions agree");
        }
        acc
    }

    /// The minimal generators of `(J : m)` that lie outside `J`, in canonical order.
    ///
    /// Empty exactly when `(J : m) = J`. Intermediate intersections drop every
    /// monomial already in `J`, since all its multiples stay in `J`.
    pub fn socle_generators(&self) -> Vec<Monomial> {
        if self.is_zero() || self.is_unit() || self.n == 0 {
            return Vec::new();
        }
        let index = Membership::new(self);
        let mut cols: Vec<(usize, Vec<Monomial>)> = (0..self.n)
            .map(|i| (i, self.gens.iter().filter_map(|g| g.div_var(i)).collect()))
            .collect();
        // A variable missing from every generator is a nonzerodivisor.
        if cols.iter().any(|(_, c)| c.is_empty()) {
            return Vec::new();
        }
        cols.sort_by_key(|(i, c)| (c.len(), *i));

        let mut cols = cols.into_iter();
        let (_, first) = cols.next().expect("n >= 1");
        let mut cur = Self::minimalize_unchecked(first, self.n).gens;
        for (i, col) in cols {
            let mut next = Vec::new();
            for h in &cur {
                let hx = h.mul_var(i).expect("socle candidates stay below lcm(G(J))");
                if index.contains(&hx) {
                    next.push(h.clone());
                    continue;
                }
                for l in &col {
                    let w = h.lcm(l);
                    if !index.contains(&w) {
                        next.push(w);
                    }
                }
            }
            cur = Self::minimalize_unchecked(next, self.n).gens;
            if cur.is_empty() {
                break;
            }
        }
        cur
    }

    /// The minimal generators of the saturation `(J : m^∞)` that lie outside `J`.
    ///
    /// Uses `(J : m^∞) = ∩_i (J : x_i^∞)`, where `(J : x_i^∞)` is `J` with
    /// `x_i` set to `1`. The result is empty exactly when `m ∉ Ass(R/J)`.
    pub fn saturation_excess(&self) -> Vec<Monomial> {
        if self.is_zero() || self.is_unit() || self.n == 0 {
            return Vec::new();
        }
        let index = Membership::new(self);
        let mut sats: Vec<MonomialIdeal> = Vec::with_capacity(self.n);
        for i in 0..self.n {
            if self.gens.iter().all(|g| g.exponent(i) == 0) {
                // x_i is a nonzerodivisor, so (J : x_i^∞) = J.
                return Vec::new();
            }
            let freed = self
                .gens
                .iter()
                .map(|g| {
                    let mut e = g.exponents().to_vec();
                    e[i] = 0;
                    Monomial::new(&e)
                })
                .collect();
            sats.push(Self::minimalize_unchecked(freed, self.n));
        }
        sats.sort_by_key(MonomialIdeal::len);

        let mut sats = sats.into_iter();
        let first = sats.next().expect("n >= 1");
        let mut cur: Vec<Monomial> = first
            .gens
            .into_iter()
            .filter(|g| !index.contains(g))
            .collect();
        for sat in sats {
            if cur.is_empty() {
                break;
            }
            let mut next = Vec::new();
            for h in &cur {
                if sat.contains_unchecked(h) {
                    next.push(h.clone());
                    continue;
                }
                for l in &sat.gens {
                    let w = h.lcm(l);
                    if !index.contains(&w) {
                        next.push(w);
                    }
                }
            }
            cur = Self::minimalize_unchecked(next, self.n).gens;
        }
        cur
    }

    /// Whether `m ∈ Ass(R/J)`: a cheap search for a socle element in degree
    /// `deg(J) - 1` first, then the saturation test.
    pub fn m_associated(&self) -> bool {
        self.low_socle_element().is_some() || !self.saturation_excess().is_empty()
    }

    /// For equigenerated `J` of degree `D`: some `u = g / x_j` of degree
    /// `D - 1` with every `u x_i` a generator. Any hit is a socle element;
    /// a miss proves nothing.
    fn low_socle_element(&self) -> Option<Monomial> {
        if self.n == 0 || self.gens.len() < self.n {
            return None;
        }
        self.degree()?;
        let set: HashSet<&Monomial> = self.gens.iter().collect();
        let mut seen: HashSet<Monomial> = HashSet::new();
        for g in &self.gens {
            for j in 0..self.n {
                let Some(u) = g.div_var(j) else { continue };
                if !seen.insert(u.clone()) {
                    continue;
                }
                let all =
                    (0..self.n).all(|i| u.mul_var(i).map(|w| set.contains(&w)).unwrap_or(false));
                if all {
                    return Some(u);
                }
            }
        }
        None
    }

    /// A monomial `u ∉ J` with `(J : u) = m`, found by climbing from an
    /// element of `(J : m^∞)` outside `J`. `None` when `m ∉ Ass(R/J)`.
    pub fn socle_element(&self) -> Option<Monomial> {
        if let Some(u) = self.low_socle_element() {
            return Some(u);
        }
        let index = Membership::new(self);
        let mut u = self.saturation_excess().into_iter().next()?;
        'climb: loop {
            for i in 0..self.n {
                let up = u.mul_var(i).expect("bounded by lcm(G(J)) times m");
                if !index.contains(&up) {
                    u = up;
                    continue 'climb;
                }
            }
            return Some(u);
        }
    }

    /// Substitute `1` for the variables outside `p`; the result lives in the
    /// subring on `p`'s variables, re-indexed densely.
    ///
    /// For empty `p` the result is the unit ideal of the zero-variable ring
    /// when `I` is nonzero, and the zero ideal otherwise.
    pub fn localize(&self, p: &PrimeSupport) -> Result<Localization> {
        check_dims(self.n, p.ambient())?;
        let vars = p.vars().to_vec();
        let ideal = Self::minimalize_unchecked(
            self.gens.iter().map(|g| g.project(&vars)).collect(),
            vars.len(),
        );
        Ok(Localization { ideal, vars })
    }

    /// `I[i]`: delete the `i`-th exponent of every generator (zero-based `i`).
    pub fn restrict(&self, i: usize) -> Result<MonomialIdeal> {
        if i >= self.n {
            return Err(Error::Invalid(format!(
                "variable x{} outside ambient ring of {} variables",
                i + 1,
                self.n
            )));
        }
        Ok(Self::minimalize_unchecked(
            self.gens.iter().map(|g| g.delete_var(i)).collect(),
            self.n - 1,
        ))
    }

    /// Re-embed an ideal of the subring on `vars` into `n` variables.
    pub fn embed(&self, n: usize, vars: &[usize]) -> Result<MonomialIdeal> {
        check_dims(self.n, vars.len())?;
        if vars.iter().any(|&v| v >= n) {
            return Err(Error::Invalid("embedding index out of range".into()));
        }
        Ok(Self::minimalize_unchecked(
            self.gens.iter().map(|g| g.embed(n, vars)).collect(),
            n,
        ))
    }

    /// Rename variables: `x_i` becomes `x_{perm[i]}`.
    pub fn permute(&self, perm: &[usize]) -> Result<MonomialIdeal> {
        check_dims(self.n, perm.len())?;
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::Invalid("not a permutation".into()));
            }
        }
        Ok(Self::minimalize_unchecked(
            self.gens.iter().map(|g| g.permute(perm)).collect(),
            self.n,
        ))
    }

    /// Divide out `gcd(I)` and drop variables outside `supp(I)`.
    pub fn normalized(&self) -> Normalized {
        let gcd = self.gcd();
        let divided: Vec<Monomial> = self.gens.iter().map(|g| g.saturating_div(&gcd)).collect();
        let kept_vars: Vec<usize> = (0..self.n)
            .filter(|&i| divided.iter().any(|g| g.exponent(i) > 0))
            .collect();
        let ideal = Self::minimalize_unchecked(
            divided.iter().map(|g| g.project(&kept_vars)).collect(),
            kept_vars.len(),
        );
        Normalized {
            ideal,
            kept_vars,
            gcd,
        }
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MonomialIdeal[n={}]{self}", self.n)
    }
}

/// Membership oracle for one ideal.
///
/// Equigenerated ideals of degree `D` answer `u ∈ J` by looking up the
/// degree-`D` divisors of `u` in a hash set when there are few of them;
/// everything else falls back to a divisibility scan.
pub(crate) struct Membership<'a> {
    ideal: &'a MonomialIdeal,
    equi: Option<(u64, HashSet<&'a Monomial>)>,
}

impl<'a> Membership<'a> {
    pub(crate) fn new(ideal: &'a MonomialIdeal) -> Self {
        let equi = ideal
            .degree()
            .filter(|_| ideal.len() > 32)
            .map(|d| (d, ideal.gens.iter().collect()));
        Membership { ideal, equi }
    }

    pub(crate) fn contains(&self, u: &Monomial) -> bool {
        if let Some((d, set)) = &self.equi {
            let deg = u.degree();
            if deg < *d {
                return false;
            }
            let excess = deg - d;
            if excess == 0 {
                return set.contains(u);
            }
            if divisor_budget(u, excess, self.ideal.len()) {
                let mut probe = u.clone();
                return probe_divisors(&mut probe, 0, excess, set);
            }
        }
        self.ideal.contains_unchecked(u)
    }
}

/// Whether enumerating the divisors of `u` of codegree `excess` is cheaper
/// than scanning `limit` generators.
fn divisor_budget(u: &Monomial, excess: u64, limit: usize) -> bool {
    // Number of ways to remove `excess` units, bounded by C(s + e - 1, e).
    let s = u.exponents().iter().filter(|&&e| e > 0).count() as u64;
    let mut count: u64 = 1;
    for k in 1..=excess {
        count = count * (s + k - 1) / k;
        if count > limit as u64 {
            return false;
        }
    }
    true
}

fn probe_divisors(
    probe: &mut Monomial,
    start: usize,
    remaining: u64,
    set: &HashSet<&Monomial>,
) -> bool {
    if remaining == 0 {
        return set.contains(probe);
    }
    let n = probe.num_vars();
    for i in start..n {
        if let Some(smaller) = probe.div_var(i) {
            let saved = std::mem::replace(probe, smaller);
            let hit = probe_divisors(probe, i, remaining - 1, set);
            *probe = saved;
            if hit {
                return true;
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::minimalize(gens.iter().map(|g| Monomial::new(g)), n).unwrap()
    }

    fn k3() -> MonomialIdeal {
        ideal(3, &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]])
    }

    #[test]
    fn minimalize_drops_multiples() {
        let i = ideal(3, &[&[1, 1, 0], &[1, 1, 1], &[1, 0, 0]]);
        assert_eq!(i.generators(), &[Monomial::new(&[1, 0, 0])]);
        let j = ideal(3, &[&[1, 1, 0], &[0, 1, 1]]);
        assert_eq!(j.len(), 2);
    }

    #[test]
    fn minimalize_rejects_mixed_lengths() {
        let err = MonomialIdeal::minimalize([Monomial::new(&[1, 0]), Monomial::new(&[1])], 2);
        assert!(matches!(err, Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn membership() {
        let j = ideal(3, &[&[1, 1, 0], &[0, 1, 1]]);
        assert!(j.contains(&Monomial::new(&[1, 1, 1])).unwrap());
        assert!(!j.contains(&Monomial::new(&[1, 0, 1])).unwrap());
        assert!(j.contains(&Monomial::new(&[1, 0])).is_err());
    }

    #[test]
    fn k3_square_has_six_generators() {
        let sq = k3().power(2).unwrap();
        let expected = ideal(
            3,
            &[
                &[2, 2, 0],
                &[2, 1, 1],
                &[1, 2, 1],
                &[2, 0, 2],
                &[1, 1, 2],
                &[0, 2, 2],
            ],
        );
        assert_eq!(sq, expected);
        assert_eq!(sq.len(), 6);
    }

    #[test]
    fn zeroth_power_is_unit() {
        assert!(k3().power(0).unwrap().is_unit());
        assert_eq!(k3().power(1).unwrap(), k3());
    }

    #[test]
    fn product_of_variables() {
        let a = ideal(2, &[&[1, 0]]);
        let b = ideal(2, &[&[0, 1]]);
        assert_eq!(a.multiply(&b).unwrap(), ideal(2, &[&[1, 1]]));
    }

    #[test]
    fn colon_examples() {
        let m3 = MonomialIdeal::maximal(3);
        let sq = k3().power(2).unwrap();
        assert_eq!(sq.colon(&Monomial::new(&[1, 1, 1])).unwrap(), m3);
        assert_eq!(k3().colon(&Monomial::one(3)).unwrap(), k3());
    }

    #[test]
    fn intersection_examples() {
        let p12 = ideal(3, &[&[1, 0, 0], &[0, 1, 0]]);
        let p13 = ideal(3, &[&[1, 0, 0], &[0, 0, 1]]);
        let p23 = ideal(3, &[&[0, 1, 0], &[0, 0, 1]]);
        let meet = p12.intersect(&p13).unwrap().intersect(&p23).unwrap();
        assert_eq!(meet, k3());
        assert_eq!(k3().intersect(&MonomialIdeal::unit(3)).unwrap(), k3());
        let x1 = ideal(2, &[&[1, 0]]);
        let x2 = ideal(2, &[&[0, 1]]);
        assert_eq!(x1.intersect(&x2).unwrap(), ideal(2, &[&[1, 1]]));
    }

    #[test]
    fn socle_colon_examples() {
        let m = MonomialIdeal::maximal(3);
        assert!(m.socle_colon().is_unit());
        assert_eq!(k3().socle_colon(), k3());
        assert!(k3().socle_generators().is_empty());
        let sq = k3().power(2).unwrap();
        let sc = sq.socle_colon();
        assert!(sc.contains_ideal(&sq).unwrap());
        assert!(sc.contains(&Monomial::new(&[1, 1, 1])).unwrap());
        assert_eq!(sq.socle_generators(), vec![Monomial::new(&[1, 1, 1])]);
    }

    #[test]
    fn saturation_agrees_with_socle() {
        assert!(k3().saturation_excess().is_empty());
        assert!(k3().socle_element().is_none());
        let sq = k3().power(2).unwrap();
        assert!(!sq.saturation_excess().is_empty());
        assert_eq!(sq.socle_element(), Some(Monomial::new(&[1, 1, 1])));
        // A non-equigenerated case with a high-degree socle: (x^2, y^2) has socle xy.
        let ci = ideal(2, &[&[2, 0], &[0, 2]]);
        assert_eq!(ci.socle_element(), Some(Monomial::new(&[1, 1])));
        // x is a nonzerodivisor on (y^2).
        assert!(ideal(2, &[&[0, 2]]).saturation_excess().is_empty());
    }

    #[test]
    fn localization_examples() {
        let i = k3();
        let loc = i.localize(&PrimeSupport::maximal(3)).unwrap();
        assert_eq!(loc.ideal, i);
        let loc = i.localize(&PrimeSupport::new(3, [0, 1]).unwrap()).unwrap();
        assert_eq!(loc.ideal, MonomialIdeal::maximal(2));
        assert_eq!(loc.vars, vec![0, 1]);
        let empty = i.localize(&PrimeSupport::new(3, []).unwrap()).unwrap();
        assert!(empty.ideal.is_unit());
        let zero = MonomialIdeal::zero(3)
            .localize(&PrimeSupport::new(3, []).unwrap())
            .unwrap();
        assert!(zero.ideal.is_zero());
    }

    #[test]
    fn restriction_examples() {
        let j = ideal(3, &[&[1, 1, 0], &[0, 1, 1]]);
        assert_eq!(j.restrict(1).unwrap(), ideal(2, &[&[1, 0], &[0, 1]]));
        assert_eq!(k3().restrict(0).unwrap(), MonomialIdeal::maximal(2));
        assert!(k3().restrict(3).is_err());
    }

    #[test]
    fn invariants() {
        let inv = k3().basic_invariants().unwrap();
        assert_eq!(inv.support, vec![0, 1, 2]);
        assert!(inv.gcd.is_one());
        assert!(inv.is_squarefree && inv.is_equigenerated);
        assert_eq!(inv.degree, Some(2));
        let j = ideal(3, &[&[1, 1, 0], &[1, 0, 1]]);
        assert_eq!(j.gcd(), Monomial::new(&[1, 0, 0]));
        assert!(!j.has_standard_position());
        assert!(MonomialIdeal::zero(2).basic_invariants().is_err());
    }

    #[test]
    fn normalization_drops_gcd_and_unused_variables() {
        let j = ideal(4, &[&[1, 1, 0, 0], &[1, 0, 1, 0]]);
        let nz = j.normalized();
        assert_eq!(nz.kept_vars, vec![1, 2]);
        assert_eq!(nz.ideal, MonomialIdeal::maximal(2));
        assert_eq!(nz.gcd, Monomial::new(&[1, 0, 0, 0]));
    }

    #[test]
    fn membership_index_matches_scan() {
        let big = k3().power(5).unwrap();
        let idx = Membership::new(&big);
        for a in 0..6u32 {
            for b in 0..6u32 {
                for c in 0..6u32 {
                    let u = Monomial::new(&[a, b, c]);
                    assert_eq!(idx.contains(&u), big.contains_unchecked(&u), "{u}");
                }
            }
        }
    }
}
