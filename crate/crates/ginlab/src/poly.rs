//! Monomials, term order, polynomial rings, exact multivariate polynomial
//! arithmetic, linear changes of coordinates, and ideal powers.
//!
//! The only term order implemented is the graded reverse lexicographic
//! order: higher total degree wins, and ties are broken at the last
//! coordinate where the exponent vectors differ, the smaller entry there
//! winning.  With `x1 > x2 > x3` this gives
//! `x1^2 > x1*x2 > x2^2 > x1*x3 > x2*x3 > x3^2`.

use crate::coeff::{Coeff, FieldMode};
use crate::{Error, Result};
use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

/// Exponent vector of a monomial `x^J`.  The length always equals the
/// ambient ring's variable count; entries are nonnegative.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    /// The monomial `1` in `m` variables.
    pub fn unit(m: usize) -> Self {
        Monomial { exps: vec![0; m] }
    }

    /// The variable `x_{i+1}` (zero-based index `i`) in `m` variables.
    pub fn variable(i: usize, m: usize) -> Self {
        let mut exps = vec![0; m];
        exps[i] = 1;
        Monomial { exps }
    }

    /// Pure power `x_{i+1}^k`.
    pub fn pure_power(i: usize, k: u32, m: usize) -> Self {
        let mut exps = vec![0; m];
        exps[i] = k;
        Monomial { exps }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn len(&self) -> usize {
        self.exps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    /// Largest variable index (1-based) with a positive exponent; 0 for the
    /// unit monomial.
    pub fn max_var(&self) -> usize {
        self.exps
            .iter()
            .rposition(|&e| e > 0)
            .map(|i| i + 1)
            .unwrap_or(0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        assert_eq!(self.exps.len(), other.exps.len(), "variable count mismatch");
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.exps.len(), other.exps.len(), "variable count mismatch");
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    /// Exact quotient; panics unless `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Monomial {
        assert!(other.divides(self), "monomial division is not exact");
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.exps.len(), other.exps.len(), "variable count mismatch");
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Graded reverse lexicographic comparison.  Panics on length mismatch.
    pub fn cmp_revlex(&self, other: &Monomial) -> Ordering {
        assert_eq!(self.exps.len(), other.exps.len(), "variable count mismatch");
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for (a, b) in self.exps.iter().zip(&other.exps).rev() {
            match a.cmp(b) {
                Ordering::Equal => continue,
                // the smaller entry at the last differing coordinate wins
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_revlex(other)
    }
}

/// A polynomial ring: ordered variable names (the order fixes
/// `x_1 > ... > x_m`) and a coefficient field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingSpec {
    vars: Vec<String>,
    field: FieldMode,
}

impl RingSpec {
    pub fn new(vars: Vec<String>, field: FieldMode) -> Result<Arc<Self>> {
        if vars.is_empty() {
            return Err(Error::InvalidRing("at least one variable required".into()));
        }
        for (i, v) in vars.iter().enumerate() {
            if v.is_empty()
                || !v.chars().next().unwrap().is_ascii_alphabetic()
                || !v.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
            {
                return Err(Error::InvalidRing(format!("invalid variable name `{v}`")));
            }
            if vars[..i].contains(v) {
                return Err(Error::InvalidRing(format!("duplicate variable `{v}`")));
            }
        }
        field.validate().map_err(Error::InvalidRing)?;
        Ok(Arc::new(RingSpec { vars, field }))
    }

    /// Ring `x1, ..., xm` over the given field.
    pub fn with_default_names(m: usize, field: FieldMode) -> Result<Arc<Self>> {
        RingSpec::new((1..=m).map(|i| format!("x{i}")).collect(), field)
    }

    pub fn var_count(&self) -> usize {
        self.vars.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn field(&self) -> FieldMode {
        self.field
    }

    /// Same variables over a different coefficient field.
    pub fn with_field(&self, field: FieldMode) -> Result<Arc<Self>> {
        RingSpec::new(self.vars.clone(), field)
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.field, self.vars.join(","))
    }
}

/// A sparse polynomial: terms strictly decreasing in graded revlex, no zero
/// coefficients.  The zero polynomial is the empty term list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: Arc<RingSpec>,
    terms: Vec<(Coeff, Monomial)>,
}

fn assert_same_ring(a: &Polynomial, b: &Polynomial) {
    assert!(
        Arc::ptr_eq(&a.ring, &b.ring) || a.ring == b.ring,
        "ring mismatch: {} vs {}",
        a.ring,
        b.ring
    );
}

impl Polynomial {
    pub fn zero(ring: Arc<RingSpec>) -> Self {
        Polynomial { ring, terms: Vec::new() }
    }

    pub fn constant(ring: Arc<RingSpec>, c: Coeff) -> Self {
        let m = ring.var_count();
        let mut p = Polynomial::zero(ring);
        if !c.is_zero() {
            p.terms.push((c, Monomial::unit(m)));
        }
        p
    }

    pub fn variable(ring: Arc<RingSpec>, i: usize) -> Self {
        let m = ring.var_count();
        let one = ring.field().one();
        Polynomial { ring, terms: vec![(one, Monomial::variable(i, m))] }
    }

    /// Builds the canonical form from arbitrary terms: sorts, merges equal
    /// monomials, drops zero coefficients.
    pub fn from_terms(ring: Arc<RingSpec>, mut terms: Vec<(Coeff, Monomial)>) -> Self {
        for (_, m) in &terms {
            assert_eq!(m.len(), ring.var_count(), "variable count mismatch");
        }
        terms.sort_by(|a, b| b.1.cmp(&a.1));
        let mut out: Vec<(Coeff, Monomial)> = Vec::with_capacity(terms.len());
        for (c, m) in terms {
            match out.last_mut() {
                Some((lc, lm)) if *lm == m => *lc = lc.add(&c),
                _ => out.push((c, m)),
            }
        }
        out.retain(|(c, _)| !c.is_zero());
        Polynomial { ring, terms: out }
    }

    pub fn ring(&self) -> &Arc<RingSpec> {
        &self.ring
    }

    pub fn terms(&self) -> &[(Coeff, Monomial)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Leading term under graded revlex; `None` for zero.
    pub fn leading_term(&self) -> Option<(&Coeff, &Monomial)> {
        self.terms.first().map(|(c, m)| (c, m))
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(_, m)| m)
    }

    /// Total degree of the leading term; `None` for zero.
    pub fn degree(&self) -> Option<u64> {
        self.leading_monomial().map(|m| m.degree())
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((_, m0)) => {
                let d = m0.degree();
                self.terms.iter().all(|(_, m)| m.degree() == d)
            }
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        assert_same_ring(self, other);
        // merge two strictly-descending term lists
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ca, ma) = &self.terms[i];
            let (cb, mb) = &other.terms[j];
            match ma.cmp(mb) {
                Ordering::Greater => {
                    out.push((ca.clone(), ma.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((cb.clone(), mb.clone()));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = ca.add(cb);
                    if !c.is_zero() {
                        out.push((c, ma.clone()));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Polynomial { ring: self.ring.clone(), terms: out }
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(c, m)| (c.neg(), m.clone())).collect(),
        }
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    /// Multiplies by a single term.
    pub fn mul_term(&self, c: &Coeff, m: &Monomial) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.ring.clone());
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(tc, tm)| (tc.mul(c), tm.mul(m)))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        self.mul_term(c, &Monomial::unit(self.ring.var_count()))
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        assert_same_ring(self, other);
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(self.ring.clone());
        }
        // accumulate products in a sorted map keyed by monomial
        let mut acc: std::collections::BTreeMap<Monomial, Coeff> = std::collections::BTreeMap::new();
        for (ca, ma) in &self.terms {
            for (cb, mb) in &other.terms {
                let m = ma.mul(mb);
                let c = ca.mul(cb);
                match acc.get_mut(&m) {
                    Some(e) => *e = e.add(&c),
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        let terms: Vec<_> = acc
            .into_iter()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| (c, m))
            .collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn pow(&self, n: u32) -> Polynomial {
        let mut acc = Polynomial::constant(self.ring.clone(), self.ring.field().one());
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Divides through by the leading coefficient.  Panics on zero.
    pub fn monic(&self) -> Polynomial {
        let (lc, _) = self.leading_term().expect("monic of zero polynomial");
        if lc.is_one() {
            return self.clone();
        }
        self.scale(&lc.inv())
    }

    /// Moves the polynomial to another coefficient field (see
    /// [`Coeff::to_mode`]).  Fails when a coefficient has no image.
    pub fn change_field(&self, ring: Arc<RingSpec>) -> Result<Polynomial> {
        assert_eq!(ring.var_count(), self.ring.var_count(), "variable count mismatch");
        let mode = ring.field();
        let mut terms = Vec::with_capacity(self.terms.len());
        for (c, m) in &self.terms {
            let c2 = c.to_mode(&mode).map_err(Error::InvalidRing)?;
            if !c2.is_zero() {
                terms.push((c2, m.clone()));
            }
        }
        Ok(Polynomial { ring, terms })
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let names = self.ring.var_names();
        for (i, (c, m)) in self.terms.iter().enumerate() {
            let neg = match c {
                Coeff::Q(r) => r < &num::BigRational::from_integer(0.into()),
                Coeff::Fp { .. } => false,
            };
            let abs = if neg { c.neg() } else { c.clone() };
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.is_unit() {
                factors.push(abs.to_string());
            }
            for (v, e) in m.exponents().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(names[v].clone()),
                    _ => factors.push(format!("{}^{}", names[v], e)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

/// An invertible linear change of coordinates `g`: the variable `x_i` is
/// sent to the linear form with coefficients in row `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoordinateChange {
    ring: Arc<RingSpec>,
    entries: Vec<Vec<Coeff>>,
}

impl CoordinateChange {
    /// Builds a change of coordinates; fails when the matrix is singular or
    /// the dimensions do not match the ring.
    pub fn new(ring: Arc<RingSpec>, entries: Vec<Vec<Coeff>>) -> Result<Self> {
        let m = ring.var_count();
        if entries.len() != m || entries.iter().any(|r| r.len() != m) {
            return Err(Error::InvalidRing(format!("matrix must be {m}x{m}")));
        }
        let g = CoordinateChange { ring, entries };
        if !g.is_invertible() {
            return Err(Error::InvalidRing("singular coordinate change".into()));
        }
        Ok(g)
    }

    pub fn identity(ring: Arc<RingSpec>) -> Self {
        let m = ring.var_count();
        let field = ring.field();
        let entries = (0..m)
            .map(|i| (0..m).map(|j| if i == j { field.one() } else { field.zero() }).collect())
            .collect();
        CoordinateChange { ring, entries }
    }

    pub fn ring(&self) -> &Arc<RingSpec> {
        &self.ring
    }

    pub fn entries(&self) -> &[Vec<Coeff>] {
        &self.entries
    }

    fn is_invertible(&self) -> bool {
        !det(&self.entries, &self.ring.field()).is_zero()
    }

    /// Exact inverse via Gauss-Jordan elimination.
    pub fn inverse(&self) -> CoordinateChange {
        let m = self.entries.len();
        let field = self.ring.field();
        let mut a: Vec<Vec<Coeff>> = self.entries.clone();
        let mut inv: Vec<Vec<Coeff>> = (0..m)
            .map(|i| (0..m).map(|j| if i == j { field.one() } else { field.zero() }).collect())
            .collect();
        for col in 0..m {
            let pivot = (col..m)
                .find(|&r| !a[r][col].is_zero())
                .expect("invertible by construction");
            a.swap(col, pivot);
            inv.swap(col, pivot);
            let pinv = a[col][col].inv();
            for j in 0..m {
                a[col][j] = a[col][j].mul(&pinv);
                inv[col][j] = inv[col][j].mul(&pinv);
            }
            for r in 0..m {
                if r != col && !a[r][col].is_zero() {
                    let factor = a[r][col].clone();
                    for j in 0..m {
                        let t = a[col][j].mul(&factor);
                        a[r][j] = a[r][j].sub(&t);
                        let t = inv[col][j].mul(&factor);
                        inv[r][j] = inv[r][j].sub(&t);
                    }
                }
            }
        }
        CoordinateChange { ring: self.ring.clone(), entries: inv }
    }

    /// Applies the substitution `x_i -> sum_j g[i][j] x_j` and expands.
    pub fn apply(&self, p: &Polynomial) -> Polynomial {
        assert!(
            *self.ring == **p.ring(),
            "ring mismatch: {} vs {}",
            self.ring,
            p.ring()
        );
        let m = self.ring.var_count();
        let images: Vec<Polynomial> = (0..m)
            .map(|i| {
                let terms: Vec<(Coeff, Monomial)> = (0..m)
                    .filter(|&j| !self.entries[i][j].is_zero())
                    .map(|j| (self.entries[i][j].clone(), Monomial::variable(j, m)))
                    .collect();
                Polynomial::from_terms(p.ring().clone(), terms)
            })
            .collect();
        // memoize powers of each image up to the largest exponent used
        let mut powers: Vec<Vec<Polynomial>> = (0..m)
            .map(|i| vec![Polynomial::constant(p.ring().clone(), self.ring.field().one()), images[i].clone()])
            .collect();
        let mut acc = Polynomial::zero(p.ring().clone());
        for (c, mon) in p.terms() {
            let mut term_val = Polynomial::constant(p.ring().clone(), c.clone());
            for (i, &e) in mon.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap().mul(&images[i]);
                    powers[i].push(next);
                }
                term_val = term_val.mul(&powers[i][e as usize]);
            }
            acc = acc.add(&term_val);
        }
        acc
    }
}

fn det(entries: &[Vec<Coeff>], field: &FieldMode) -> Coeff {
    let m = entries.len();
    let mut a: Vec<Vec<Coeff>> = entries.to_vec();
    let mut result = field.one();
    for col in 0..m {
        let Some(pivot) = (col..m).find(|&r| !a[r][col].is_zero()) else {
            return field.zero();
        };
        if pivot != col {
            a.swap(col, pivot);
            result = result.neg();
        }
        result = result.mul(&a[col][col]);
        let pinv = a[col][col].inv();
        for r in col + 1..m {
            if !a[r][col].is_zero() {
                let factor = a[r][col].mul(&pinv);
                for j in col..m {
                    let t = a[col][j].mul(&factor);
                    a[r][j] = a[r][j].sub(&t);
                }
            }
        }
    }
    result
}

/// All degree-`n` products of the generators (combinations with
/// repetition): a generating set of the `n`-th power of the ideal.
pub fn ideal_power(gens: &[Polynomial], n: u32) -> Result<Vec<Polynomial>> {
    if n == 0 {
        return Err(Error::ZeroPower);
    }
    for (i, g) in gens.iter().enumerate() {
        if g.is_zero() {
            return Err(Error::ZeroGenerator { index: i });
        }
    }
    if gens.is_empty() {
        return Err(Error::AllZero);
    }
    let mut out = Vec::new();
    let mut indices = vec![0usize; n as usize];
    loop {
        let mut prod = gens[indices[0]].clone();
        for &i in &indices[1..] {
            prod = prod.mul(&gens[i]);
        }
        out.push(prod);
        // advance the non-decreasing index tuple
        let mut k = indices.len();
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            if indices[k] + 1 < gens.len() {
                let v = indices[k] + 1;
                for idx in indices.iter_mut().skip(k) {
                    *idx = v;
                }
                break;
            }
        }
    }
}
