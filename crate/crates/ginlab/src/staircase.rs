//! Combinatorics of monomial ideals: minimal generators, membership, strong
//! stability, pure powers, Hilbert functions, Artinian length, dimension and
//! depth, and the Eliahou-Kervaire Betti table for strongly stable ideals.

use crate::poly::Monomial;
use crate::{Error, Result};
use std::collections::{BTreeMap, HashMap};
use std::fmt;

/// A monomial ideal given by its minimal generating set, which is an
/// antichain under divisibility.  Generators are kept in canonical order:
/// ascending total degree, and within a degree descending revlex (the order
/// they are conventionally written, e.g. `(x^2, xy, y^3)`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    vars: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Builds the ideal generated by `gens`, discarding every generator
    /// divisible by another.
    pub fn new(vars: usize, gens: Vec<Monomial>) -> Self {
        for g in &gens {
            assert_eq!(g.len(), vars, "variable count mismatch");
        }
        let gens = minimalize(gens);
        MonomialIdeal { vars, gens }
    }

    pub fn zero(vars: usize) -> Self {
        MonomialIdeal { vars, gens: Vec::new() }
    }

    pub fn unit(vars: usize) -> Self {
        MonomialIdeal { vars, gens: vec![Monomial::unit(vars)] }
    }

    pub fn var_count(&self) -> usize {
        self.vars
    }

    pub fn min_gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_unit()
    }

    /// Membership: true iff some minimal generator divides `e`.
    pub fn contains(&self, e: &Monomial) -> bool {
        assert_eq!(e.len(), self.vars, "variable count mismatch");
        self.gens.iter().any(|g| g.divides(e))
    }

    /// Ideal containment `self ⊆ other`: every generator of `self` lies in
    /// `other`.
    pub fn subset_of(&self, other: &MonomialIdeal) -> bool {
        assert_eq!(self.vars, other.vars, "variable count mismatch");
        self.gens.iter().all(|g| other.contains(g))
    }

    /// The product ideal, generated by pairwise products.
    pub fn product(&self, other: &MonomialIdeal) -> MonomialIdeal {
        assert_eq!(self.vars, other.vars, "variable count mismatch");
        let gens = self
            .gens
            .iter()
            .flat_map(|a| other.gens.iter().map(move |b| a.mul(b)))
            .collect();
        MonomialIdeal::new(self.vars, gens)
    }

    /// Strong stability: for every minimal generator `e`, every variable
    /// `x_i` dividing it, and every `j < i`, the exchanged monomial
    /// `e * x_j / x_i` is again in the ideal.  Checking minimal generators
    /// suffices; the exchange propagates to all members.
    pub fn is_strongly_stable(&self) -> bool {
        self.gens.iter().all(|g| {
            let e = g.exponents();
            (0..self.vars).filter(|&i| e[i] > 0).all(|i| {
                (0..i).all(|j| {
                    let mut ex = e.to_vec();
                    ex[i] -= 1;
                    ex[j] += 1;
                    self.contains(&Monomial::new(ex))
                })
            })
        })
    }

    /// For each variable, the least `t` with `x_i^t` in the ideal (`None`
    /// when no power lies in it).  Since the generating set is minimal, the
    /// pure powers are exactly the single-variable generators.
    pub fn pure_powers(&self) -> PurePowers {
        let mut exps: Vec<Option<u32>> = vec![None; self.vars];
        for g in &self.gens {
            if g.is_unit() {
                exps = vec![Some(0); self.vars];
                break;
            }
            let e = g.exponents();
            if let Some(i) = (0..self.vars).find(|&i| e[i] > 0) {
                if e.iter().enumerate().all(|(j, &v)| j == i || v == 0) {
                    exps[i] = Some(e[i]);
                }
            }
        }
        PurePowers { exponents: exps }
    }

    /// Number of standard monomials (monomials not in the ideal), finite
    /// exactly when every variable has a pure power in the ideal.  Counted
    /// by exact enumeration inside the box `prod [0, p_i)`.
    pub fn length_artinian(&self) -> Result<u128> {
        let powers = self.pure_powers();
        let bounds: Vec<u32> = powers
            .exponents
            .iter()
            .enumerate()
            .map(|(i, p)| p.ok_or(Error::NotZeroDimensional(format!("x{}", i + 1))))
            .collect::<Result<_>>()?;
        let mut count: u128 = 0;
        let mut cursor = vec![0u32; self.vars];
        'outer: loop {
            if !self.contains(&Monomial::new(cursor.clone())) {
                count += 1;
            }
            for i in 0..self.vars {
                cursor[i] += 1;
                if cursor[i] < bounds[i].max(1) {
                    continue 'outer;
                }
                cursor[i] = 0;
            }
            break;
        }
        Ok(count)
    }

    /// Hilbert function of the quotient: `HF(R/J, d)` for `d = 0..=d_max`.
    ///
    /// Uses inclusion-exclusion over lcms of generator subsets up to 20
    /// generators, and the divide-by-last-variable recursion beyond that.
    pub fn hilbert_function(&self, d_max: u32) -> Vec<u128> {
        if self.gens.len() <= 20 {
            self.hilbert_inclusion_exclusion(d_max)
        } else {
            self.hilbert_recursive(d_max)
        }
    }

    /// Inclusion-exclusion: the number of degree-`d` multiples of `x^L` is
    /// `C(d - |L| + m - 1, m - 1)`, summed with signs over lcms `L` of
    /// generator subsets.
    pub fn hilbert_inclusion_exclusion(&self, d_max: u32) -> Vec<u128> {
        let m = self.vars;
        let mut acc: Vec<i128> = vec![0; d_max as usize + 1];
        // DFS over subsets carrying the incremental lcm
        fn visit(
            gens: &[Monomial],
            from: usize,
            lcm: Option<&Monomial>,
            sign: i128,
            acc: &mut [i128],
            m: usize,
        ) {
            let deg = lcm.map(|l| l.degree()).unwrap_or(0);
            if deg <= acc.len() as u64 {
                for d in deg..acc.len() as u64 {
                    acc[d as usize] += sign * monomial_count(m, (d - deg) as u32) as i128;
                }
            }
            for i in from..gens.len() {
                let next = match lcm {
                    Some(l) => l.lcm(&gens[i]),
                    None => gens[i].clone(),
                };
                if next.degree() < acc.len() as u64 {
                    visit(gens, i + 1, Some(&next), -sign, acc, m);
                }
            }
        }
        visit(&self.gens, 0, None, 1, &mut acc, m);
        acc.into_iter()
            .map(|v| u128::try_from(v).expect("Hilbert function values are nonnegative"))
            .collect()
    }

    /// Divide-by-last-variable recursion, used as an independent cross-check
    /// and as the fallback for large generating sets.
    pub fn hilbert_recursive(&self, d_max: u32) -> Vec<u128> {
        let mut memo: HashMap<(Vec<Monomial>, u32), u128> = HashMap::new();
        (0..=d_max)
            .map(|d| hf_rec(&self.gens, self.vars, d, &mut memo))
            .collect()
    }

    /// Dimension and depth of `R/J` for a strongly stable ideal, from the
    /// largest variable with a pure power (`D`) and the largest variable
    /// appearing in a minimal generator (`M`): `(m - D, m - M)`.
    pub fn dim_depth(&self) -> Result<(usize, usize)> {
        self.require_strongly_stable()?;
        let powers = self.pure_powers();
        let d = powers
            .exponents
            .iter()
            .rposition(|p| p.is_some())
            .map(|i| i + 1)
            .unwrap_or(0);
        let m_idx = self.gens.iter().map(|g| g.max_var()).max().unwrap_or(0);
        Ok((self.vars - d, self.vars - m_idx))
    }

    /// Graded Betti table via the Eliahou-Kervaire formula for strongly
    /// stable ideals: each minimal generator `u` contributes
    /// `C(max(u) - 1, i)` to `beta_{i, i + deg u}`.
    pub fn ek_betti(&self) -> Result<BettiTable> {
        self.require_strongly_stable()?;
        let mut entries: BTreeMap<(u32, u32), u128> = BTreeMap::new();
        for g in &self.gens {
            let mx = g.max_var() as u32;
            let deg = g.degree() as u32;
            let top = mx.saturating_sub(1);
            for i in 0..=top {
                *entries.entry((i, i + deg)).or_insert(0) += binomial(top as u64, i as u64);
            }
        }
        entries.retain(|_, v| *v > 0);
        Ok(BettiTable { entries })
    }

    fn require_strongly_stable(&self) -> Result<()> {
        if !self.is_strongly_stable() {
            let witness = self
                .gens
                .iter()
                .find(|g| {
                    let e = g.exponents();
                    (0..self.vars).filter(|&i| e[i] > 0).any(|i| {
                        (0..i).any(|j| {
                            let mut ex = e.to_vec();
                            ex[i] -= 1;
                            ex[j] += 1;
                            !self.contains(&Monomial::new(ex))
                        })
                    })
                })
                .map(|g| format!("{:?}", g.exponents()))
                .unwrap_or_default();
            return Err(Error::NotStronglyStable(witness));
        }
        Ok(())
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return write!(f, "(0)");
        }
        let parts: Vec<String> = self
            .gens
            .iter()
            .map(|g| {
                if g.is_unit() {
                    return "1".to_string();
                }
                g.exponents()
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(i, &e)| {
                        if e == 1 {
                            format!("x{}", i + 1)
                        } else {
                            format!("x{}^{}", i + 1, e)
                        }
                    })
                    .collect::<Vec<_>>()
                    .join("*")
            })
            .collect();
        write!(f, "({})", parts.join(", "))
    }
}

fn hf_rec(
    gens: &[Monomial],
    m: usize,
    d: u32,
    memo: &mut HashMap<(Vec<Monomial>, u32), u128>,
) -> u128 {
    if gens.iter().any(|g| g.is_unit()) {
        return 0;
    }
    if m == 0 {
        return if d == 0 { 1 } else { 0 };
    }
    if gens.is_empty() {
        return monomial_count(m, d);
    }
    let key = (gens.to_vec(), d);
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    // split on the exponent k of the last variable: the complementary factor
    // must avoid the truncation of the generators with last exponent <= k
    let mut total: u128 = 0;
    for k in 0..=d {
        let trunc: Vec<Monomial> = gens
            .iter()
            .filter(|g| g.exponents()[m - 1] <= k)
            .map(|g| Monomial::new(g.exponents()[..m - 1].to_vec()))
            .collect();
        let trunc = minimalize(trunc);
        total += hf_rec(&trunc, m - 1, d - k, memo);
    }
    memo.insert(key, total);
    total
}

/// Number of degree-`d` monomials in `m` variables: `C(d + m - 1, m - 1)`.
pub fn monomial_count(m: usize, d: u32) -> u128 {
    binomial(d as u64 + m as u64 - 1, m as u64 - 1)
}

pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Removes every generator divisible by another and sorts canonically.
pub fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.cmp(a)));
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept
}

/// The smallest pure power of each variable contained in an ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PurePowers {
    pub exponents: Vec<Option<u32>>,
}

impl PurePowers {
    pub fn all_present(&self) -> bool {
        self.exponents.iter().all(|p| p.is_some())
    }

    pub fn max(&self) -> Option<u32> {
        self.exponents.iter().filter_map(|p| *p).max()
    }
}

/// Graded Betti numbers `beta_{i,j}` with finitely many nonzero entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(u32, u32), u128>,
}

impl BettiTable {
    pub fn get(&self, i: u32, j: u32) -> u128 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> &BTreeMap<(u32, u32), u128> {
        &self.entries
    }

    /// Total number of minimal generators, `sum_j beta_{0,j}`.
    pub fn generator_count(&self) -> u128 {
        self.entries
            .iter()
            .filter(|((i, _), _)| *i == 0)
            .map(|(_, v)| v)
            .sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(vars: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(vars, gens.iter().map(|g| Monomial::new(g.to_vec())).collect())
    }

    // the staircase (x^2, xy, y^3) is the running example throughout
    fn staircase_ideal() -> MonomialIdeal {
        ideal(2, &[&[2, 0], &[1, 1], &[0, 3]])
    }

    #[test]
    fn minimalize_examples() {
        let j = ideal(2, &[&[2, 0], &[3, 0], &[1, 1]]);
        assert_eq!(j.min_gens(), &[Monomial::new(vec![2, 0]), Monomial::new(vec![1, 1])]);
        assert!(MonomialIdeal::new(2, vec![]).is_zero());
        let k = staircase_ideal();
        assert_eq!(MonomialIdeal::new(2, k.min_gens().to_vec()), k);
    }

    #[test]
    fn canonical_generator_order() {
        let j = staircase_ideal();
        let exps: Vec<&[u32]> = j.min_gens().iter().map(|g| g.exponents()).collect();
        assert_eq!(exps, vec![&[2, 0][..], &[1, 1][..], &[0, 3][..]]);
    }

    #[test]
    fn membership() {
        let j = staircase_ideal();
        assert!(j.contains(&Monomial::new(vec![2, 1]))); // x^2 y
        assert!(!j.contains(&Monomial::new(vec![0, 2]))); // y^2
        assert!(!MonomialIdeal::zero(2).contains(&Monomial::new(vec![5, 5])));
    }

    #[test]
    fn containment() {
        let j = staircase_ideal();
        assert!(j.subset_of(&j));
        let a = ideal(1, &[&[1]]);
        let b = ideal(1, &[&[2]]);
        assert!(!a.subset_of(&b));
        assert!(b.subset_of(&a));
    }

    #[test]
    fn strong_stability() {
        assert!(staircase_ideal().is_strongly_stable());
        assert!(!ideal(2, &[&[2, 0], &[0, 2]]).is_strongly_stable()); // xy missing
        // all degree-d monomials in 3 variables
        let mut all = Vec::new();
        for a in 0..=3u32 {
            for b in 0..=3 - a {
                all.push(Monomial::new(vec![a, b, 3 - a - b]));
            }
        }
        assert!(MonomialIdeal::new(3, all).is_strongly_stable());
    }

    #[test]
    fn pure_power_extraction() {
        assert_eq!(staircase_ideal().pure_powers().exponents, vec![Some(2), Some(3)]);
        assert_eq!(ideal(2, &[&[2, 0]]).pure_powers().exponents, vec![Some(2), None]);
        assert_eq!(
            ideal(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]).pure_powers().exponents,
            vec![Some(1), Some(1), Some(1)]
        );
    }

    #[test]
    fn artinian_lengths() {
        assert_eq!(staircase_ideal().length_artinian().unwrap(), 4); // 1, x, y, y^2
        assert_eq!(ideal(2, &[&[1, 0], &[0, 1]]).length_artinian().unwrap(), 1);
        assert_eq!(ideal(2, &[&[2, 0], &[0, 2]]).length_artinian().unwrap(), 4);
        match ideal(2, &[&[2, 0]]).length_artinian() {
            Err(Error::NotZeroDimensional(v)) => assert_eq!(v, "x2"),
            other => panic!("expected NotZeroDimensional, got {other:?}"),
        }
    }

    #[test]
    fn hilbert_function_examples() {
        assert_eq!(staircase_ideal().hilbert_function(4), vec![1, 2, 1, 0, 0]);
        let free = MonomialIdeal::zero(3);
        let hf = free.hilbert_function(4);
        for (d, v) in hf.iter().enumerate() {
            assert_eq!(*v, monomial_count(3, d as u32));
        }
        assert_eq!(
            ideal(2, &[&[1, 0], &[0, 1]]).hilbert_function(3),
            vec![1, 0, 0, 0]
        );
    }

    #[test]
    fn hilbert_paths_agree() {
        let samples = [
            staircase_ideal(),
            ideal(2, &[&[2, 0], &[0, 2]]),
            ideal(3, &[&[2, 1, 0], &[0, 3, 0], &[1, 0, 2], &[0, 0, 4]]),
            MonomialIdeal::zero(2),
            MonomialIdeal::unit(3),
        ];
        for j in samples {
            assert_eq!(
                j.hilbert_inclusion_exclusion(8),
                j.hilbert_recursive(8),
                "paths disagree for {j}"
            );
        }
    }

    #[test]
    fn hilbert_sums_to_length() {
        let j = staircase_ideal();
        let total: u128 = j.hilbert_function(6).iter().sum();
        assert_eq!(total, j.length_artinian().unwrap());
    }

    #[test]
    fn dim_depth_examples() {
        assert_eq!(staircase_ideal().dim_depth().unwrap(), (0, 0));
        assert_eq!(ideal(3, &[&[1, 0, 0]]).dim_depth().unwrap(), (2, 2));
        assert_eq!(ideal(3, &[&[2, 0, 0], &[1, 1, 0]]).dim_depth().unwrap(), (2, 1));
        assert!(matches!(
            ideal(2, &[&[2, 0], &[0, 2]]).dim_depth(),
            Err(Error::NotStronglyStable(_))
        ));
    }

    #[test]
    fn eliahou_kervaire_table() {
        let b = staircase_ideal().ek_betti().unwrap();
        assert_eq!(b.get(0, 2), 2);
        assert_eq!(b.get(0, 3), 1);
        assert_eq!(b.get(1, 3), 1);
        assert_eq!(b.get(1, 4), 1);
        assert_eq!(b.entries().len(), 4);
        assert_eq!(b.generator_count(), 3);

        let principal = ideal(2, &[&[5, 0]]);
        let b = principal.ek_betti().unwrap();
        assert_eq!(b.get(0, 5), 1);
        assert_eq!(b.entries().len(), 1);
    }

    #[test]
    fn product_and_graded_containment_shape() {
        let j = ideal(2, &[&[2, 0], &[0, 2]]);
        let sq = j.product(&j);
        assert_eq!(
            sq.min_gens(),
            &[
                Monomial::new(vec![4, 0]),
                Monomial::new(vec![2, 2]),
                Monomial::new(vec![0, 4])
            ]
        );
    }
}
