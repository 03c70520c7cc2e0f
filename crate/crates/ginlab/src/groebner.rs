//! Normal-form reduction and Buchberger's algorithm under graded revlex,
//! producing the unique reduced Groebner basis, plus extraction of the
//! initial ideal.
//!
//! Pair selection follows the normal strategy (smallest lcm first), with
//! the coprime-leading-term criterion and the chain criterion.  Every tie
//! is broken deterministically so runs are reproducible bit for bit.

use crate::poly::{Monomial, Polynomial};
use crate::staircase::MonomialIdeal;
use crate::{Error, Result};
use std::collections::{BTreeSet, HashSet};
use std::sync::Arc;

/// A reduced Groebner basis: monic elements, no term of any element
/// divisible by the leading monomial of another, sorted canonically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    elements: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn ring(&self) -> &Arc<crate::poly::RingSpec> {
        self.elements[0].ring()
    }

    /// Leading exponent vectors as a minimally generated monomial ideal.
    pub fn initial_ideal(&self) -> MonomialIdeal {
        let vars = self.ring().var_count();
        MonomialIdeal::new(
            vars,
            self.elements
                .iter()
                .map(|g| g.leading_monomial().expect("basis elements are nonzero").clone())
                .collect(),
        )
    }

    /// Normal form with respect to this basis.
    pub fn reduce(&self, p: &Polynomial) -> Polynomial {
        reduce(p, &self.elements)
    }
}

/// Normal form of `p` modulo `basis`: repeatedly rewrites the greatest
/// reducible term using the first basis element (in list order) whose
/// leading monomial divides it, until no term is reducible.
pub fn reduce(p: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let mut r = p.clone();
    'outer: loop {
        for idx in 0..r.terms().len() {
            let (c, m) = &r.terms()[idx];
            for b in basis {
                let (blc, blm) = b.leading_term().expect("basis elements are nonzero");
                if blm.divides(m) {
                    let factor = c.div(blc);
                    let shift = m.div(blm);
                    let sub = b.mul_term(&factor, &shift);
                    r = r.sub(&sub);
                    continue 'outer;
                }
            }
        }
        return r;
    }
}

/// S-polynomial of two monic polynomials.
fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let lf = f.leading_monomial().expect("nonzero");
    let lg = g.leading_monomial().expect("nonzero");
    let lcm = lf.lcm(lg);
    let one = f.ring().field().one();
    let a = f.mul_term(&one, &lcm.div(lf));
    let b = g.mul_term(&one, &lcm.div(lg));
    a.sub(&b)
}

/// Buchberger's algorithm: the reduced Groebner basis of the ideal
/// generated by `gens` under graded revlex.  The result is unique, hence
/// independent of generator order and scaling.
pub fn buchberger(gens: &[Polynomial]) -> Result<GroebnerBasis> {
    let mut basis: Vec<Polynomial> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.monic())
        .collect();
    if basis.is_empty() {
        return Err(Error::AllZero);
    }

    // queue ordered by (lcm, i, j): graded revlex on the lcm realizes the
    // normal selection strategy
    let mut queue: BTreeSet<(Monomial, usize, usize)> = BTreeSet::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    let add_pairs = |basis: &[Polynomial],
                         queue: &mut BTreeSet<(Monomial, usize, usize)>,
                         pending: &mut HashSet<(usize, usize)>,
                         t: usize| {
        for i in 0..t {
            let lcm = basis[i]
                .leading_monomial()
                .unwrap()
                .lcm(basis[t].leading_monomial().unwrap());
            queue.insert((lcm, i, t));
            pending.insert((i, t));
        }
    };
    for t in 1..basis.len() {
        add_pairs(&basis, &mut queue, &mut pending, t);
    }

    while let Some(entry) = queue.iter().next().cloned() {
        queue.remove(&entry);
        let (lcm, i, j) = entry;
        pending.remove(&(i, j));

        let lm_i = basis[i].leading_monomial().unwrap();
        let lm_j = basis[j].leading_monomial().unwrap();
        // coprime criterion
        if lm_i.coprime(lm_j) {
            continue;
        }
        // chain criterion: some other element divides the lcm and both
        // side pairs have already been handled
        let chained = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].leading_monomial().unwrap().divides(&lcm)
                && !pending.contains(&key(i, k))
                && !pending.contains(&key(j, k))
        });
        if chained {
            continue;
        }

        let s = s_polynomial(&basis[i], &basis[j]);
        let r = reduce(&s, &basis);
        if !r.is_zero() {
            basis.push(r.monic());
            let t = basis.len() - 1;
            add_pairs(&basis, &mut queue, &mut pending, t);
        }
    }

    Ok(reduce_basis(basis))
}

fn key(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Minimalizes and tail-reduces a Groebner basis, then sorts it by leading
/// monomial (ascending degree, descending revlex within a degree).
fn reduce_basis(mut basis: Vec<Polynomial>) -> GroebnerBasis {
    // minimal: drop elements whose leading monomial is divisible by the
    // leading monomial of another kept element
    basis.sort_by(|a, b| a.leading_monomial().unwrap().cmp(b.leading_monomial().unwrap()));
    let mut minimal: Vec<Polynomial> = Vec::with_capacity(basis.len());
    for g in basis {
        let lm = g.leading_monomial().unwrap();
        if !minimal
            .iter()
            .any(|h| h.leading_monomial().unwrap().divides(lm))
        {
            minimal.push(g);
        }
    }
    // reduced: every element fully reduced against the others
    let mut reduced: Vec<Polynomial> = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Polynomial> = minimal
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != i)
            .map(|(_, g)| g.clone())
            .collect();
        reduced.push(reduce(&minimal[i], &others).monic());
    }
    reduced.sort_by(|a, b| {
        let (la, lb) = (a.leading_monomial().unwrap(), b.leading_monomial().unwrap());
        la.degree().cmp(&lb.degree()).then_with(|| lb.cmp(la))
    });
    GroebnerBasis { elements: reduced }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{Coeff, FieldMode};
    use crate::parse::parse_polynomial;
    use crate::poly::RingSpec;

    fn qring(names: &[&str]) -> Arc<RingSpec> {
        RingSpec::new(names.iter().map(|s| s.to_string()).collect(), FieldMode::Rational).unwrap()
    }

    #[test]
    fn reduction_examples() {
        let ring = qring(&["x1", "x2"]);
        let x1sq = parse_polynomial("x1^2", &ring).unwrap();
        let x1 = parse_polynomial("x1", &ring).unwrap();
        assert!(reduce(&x1sq, &[x1.clone()]).is_zero());

        let x2sq = parse_polynomial("x2^2", &ring).unwrap();
        assert_eq!(reduce(&x2sq, &[x1]), x2sq);

        let f = parse_polynomial("x1^2 - x2^2", &ring).unwrap();
        let basis = vec![parse_polynomial("x1*x2", &ring).unwrap(), f.clone()];
        assert!(reduce(&f, &basis).is_zero());
    }

    #[test]
    fn linear_elimination() {
        let ring = qring(&["x1", "x2"]);
        let gens = vec![
            parse_polynomial("x1 + x2", &ring).unwrap(),
            parse_polynomial("x2", &ring).unwrap(),
        ];
        let gb = buchberger(&gens).unwrap();
        let printed: Vec<String> = gb.elements().iter().map(|g| g.to_string()).collect();
        assert_eq!(printed, vec!["x1", "x2"]);
    }

    // S(x^2 - y^2, xy) = -y^3, so the reduced basis picks up y^3
    #[test]
    fn hand_computed_basis() {
        let ring = qring(&["x", "y"]);
        let gens = vec![
            parse_polynomial("x^2 - y^2", &ring).unwrap(),
            parse_polynomial("x*y", &ring).unwrap(),
        ];
        let gb = buchberger(&gens).unwrap();
        let printed: Vec<String> = gb.elements().iter().map(|g| g.to_string()).collect();
        assert_eq!(printed, vec!["x^2 - y^2", "x*y", "y^3"]);

        let init = gb.initial_ideal();
        let exps: Vec<&[u32]> = init.min_gens().iter().map(|g| g.exponents()).collect();
        assert_eq!(exps, vec![&[2, 0][..], &[1, 1][..], &[0, 3][..]]);
    }

    #[test]
    fn principal_ideal() {
        let ring = qring(&["x", "y"]);
        let f = parse_polynomial("2*x^3 - 4*y^3", &ring).unwrap();
        let gb = buchberger(std::slice::from_ref(&f)).unwrap();
        assert_eq!(gb.elements(), &[f.monic()]);
        let init = gb.initial_ideal();
        assert_eq!(init.min_gens()[0].exponents(), &[3, 0]);
    }

    #[test]
    fn all_zero_rejected() {
        let ring = qring(&["x"]);
        let z = crate::poly::Polynomial::zero(ring);
        assert!(matches!(buchberger(&[z]), Err(Error::AllZero)));
    }

    #[test]
    fn s_pairs_reduce_to_zero() {
        let ring = qring(&["x", "y", "z"]);
        let gens = vec![
            parse_polynomial("x^2 + y*z", &ring).unwrap(),
            parse_polynomial("y^2 - x*z", &ring).unwrap(),
            parse_polynomial("z^2 + x*y", &ring).unwrap(),
        ];
        let gb = buchberger(&gens).unwrap();
        for i in 0..gb.elements().len() {
            for j in i + 1..gb.elements().len() {
                let s = s_polynomial(&gb.elements()[i], &gb.elements()[j]);
                assert!(gb.reduce(&s).is_zero(), "S-pair ({i},{j}) did not reduce");
            }
        }
        // the original generators lie in the ideal of the basis
        for g in &gens {
            assert!(gb.reduce(g).is_zero());
        }
    }

    #[test]
    fn basis_invariant_under_permutation_and_scaling() {
        let ring = qring(&["x", "y", "z"]);
        let gens = vec![
            parse_polynomial("x^2 - y*z", &ring).unwrap(),
            parse_polynomial("x*y + z^2", &ring).unwrap(),
            parse_polynomial("y^3 - 2*z^3", &ring).unwrap(),
        ];
        let gb = buchberger(&gens).unwrap();

        let mut permuted = vec![gens[2].clone(), gens[0].clone(), gens[1].clone()];
        let five = Coeff::Q(num::BigRational::from_integer(5.into()));
        permuted[0] = permuted[0].scale(&five);
        let gb2 = buchberger(&permuted).unwrap();
        assert_eq!(gb.elements(), gb2.elements());
    }

    // rank-based Hilbert oracle: dim of the degree-d piece of the ideal
    // spanned by monomial multiples of the generators, by exact Gauss
    fn graded_rank(gens: &[Polynomial], d: u32) -> usize {
        let ring = gens[0].ring().clone();
        let m = ring.var_count();
        let mut monos: Vec<Monomial> = Vec::new();
        fn enumerate(m: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            if prefix.len() == m - 1 {
                prefix.push(d);
                out.push(Monomial::new(prefix.clone()));
                prefix.pop();
                return;
            }
            for e in 0..=d {
                prefix.push(e);
                enumerate(m, d - e, prefix, out);
                prefix.pop();
            }
        }
        enumerate(m, d, &mut Vec::new(), &mut monos);
        let index: std::collections::HashMap<&Monomial, usize> =
            monos.iter().enumerate().map(|(i, mo)| (mo, i)).collect();

        let mut rows: Vec<Vec<Coeff>> = Vec::new();
        for g in gens {
            let gd = g.degree().unwrap() as u32;
            if gd > d {
                continue;
            }
            let mut shifts = Vec::new();
            enumerate(m, d - gd, &mut Vec::new(), &mut shifts);
            for s in shifts {
                let shifted = g.mul_term(&ring.field().one(), &s);
                let mut row = vec![ring.field().zero(); monos.len()];
                for (c, mo) in shifted.terms() {
                    row[index[mo]] = c.clone();
                }
                rows.push(row);
            }
        }
        // exact row reduction
        let mut rank = 0;
        let cols = monos.len();
        let mut r = 0;
        for c in 0..cols {
            if let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) {
                rows.swap(r, p);
                let inv = rows[r][c].inv();
                for i in 0..rows.len() {
                    if i != r && !rows[i][c].is_zero() {
                        let factor = rows[i][c].mul(&inv);
                        for k in c..cols {
                            let t = rows[r][k].mul(&factor);
                            rows[i][k] = rows[i][k].sub(&t);
                        }
                    }
                }
                rank += 1;
                r += 1;
            }
        }
        rank
    }

    // Hilbert functions are preserved by passing to the initial ideal
    #[test]
    fn hilbert_function_matches_linear_algebra() {
        let ring = qring(&["x", "y"]);
        let gens = vec![
            parse_polynomial("x^2 - y^2", &ring).unwrap(),
            parse_polynomial("x*y", &ring).unwrap(),
        ];
        let init = buchberger(&gens).unwrap().initial_ideal();
        let hf = init.hilbert_function(6);
        for d in 0..=6u32 {
            let full = crate::staircase::monomial_count(2, d);
            let expected = full - graded_rank(&gens, d) as u128;
            assert_eq!(hf[d as usize], expected, "degree {d}");
        }
    }
}
