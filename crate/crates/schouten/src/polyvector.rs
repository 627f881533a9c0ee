//! Multivector fields with polynomial coefficients on R^n, exact rationals.
//!
//! A `PolyVector` is a finite sum of monomial terms `c * x^alpha d_I` where
//! `d_I = d_{i1} ^ ... ^ d_{ip}` is a wedge of coordinate vector fields.
//! The scalar part (p = 0) carries polynomial functions.  The module
//! provides the exterior product and the Schouten bracket, implemented as
//! the biderivation extension of the Lie bracket: on vector fields it is
//! the Lie bracket, `[X, f] = X(f)`, and
//! `[A, B ^ C] = [A, B] ^ C + (-1)^{(p-1) q} B ^ [A, C]`
//! for `A` a p-vector and `B` a q-vector.

use crate::{q_from_i64, Q};
use num::traits::Zero;
use std::collections::BTreeMap;
use std::fmt;

/// Exponent vector of a monomial x^alpha; length equals the ambient dim.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(pub Vec<u16>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|&e| e as i64).sum()
    }
}

/// Strictly increasing directions in 1..=n; empty means the scalar part.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiIndex(pub Vec<u8>);

impl MultiIndex {
    pub fn degree(&self) -> i64 {
        self.0.len() as i64
    }
}

/// Key of one monomial term.
pub type TermKey = (Monomial, MultiIndex);

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolyError {
    DimensionMismatch { left: usize, right: usize },
    NotABivector,
    Parse(String),
}

impl fmt::Display for PolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyError::DimensionMismatch { left, right } => {
                write!(f, "ambient dimension mismatch: {left} vs {right}")
            }
            PolyError::NotABivector => write!(f, "expected a bivector (all terms of degree 2)"),
            PolyError::Parse(msg) => write!(f, "parse error: {msg}"),
        }
    }
}

impl std::error::Error for PolyError {}

/// Multivector field with polynomial coefficients, exact rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyVector {
    n: usize,
    terms: BTreeMap<TermKey, Q>,
}

fn binom(n: i64, k: i64) -> u64 {
    if k < 0 || k > n || n < 0 {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * ((n - i) as u128) / ((i + 1) as u128);
    }
    acc as u64
}

/// dim X^p_h(R^n) = C(n-1+h, n-1) * C(n, p); zero outside 0 <= p <= n, h >= 0.
pub fn dim_multivector_space(n: usize, p: i64, h: i64) -> u64 {
    if p < 0 || p > n as i64 || h < 0 {
        return 0;
    }
    binom(n as i64 - 1 + h, n as i64 - 1) * binom(n as i64, p)
}

/// Rank of a degree-h monomial among all degree-h monomials in n variables,
/// lexicographic on the exponent vector.
pub fn monomial_rank(alpha: &[u16]) -> u64 {
    let n = alpha.len();
    let mut rank = 0u64;
    let mut rem: i64 = alpha.iter().map(|&e| e as i64).sum();
    for (pos, &e) in alpha.iter().enumerate() {
        let vars_left = (n - pos - 1) as i64;
        for smaller in 0..e as i64 {
            rank += binom(vars_left - 1 + rem - smaller, vars_left - 1);
        }
        rem -= e as i64;
    }
    rank
}

/// Inverse of [`monomial_rank`] for degree-h monomials in n variables.
pub fn monomial_unrank(n: usize, h: i64, mut rank: u64) -> Monomial {
    let mut alpha = vec![0u16; n];
    let mut rem = h;
    for pos in 0..n {
        let vars_left = (n - pos - 1) as i64;
        if vars_left == 0 {
            alpha[pos] = rem as u16;
            break;
        }
        let mut e = 0i64;
        loop {
            let cnt = binom(vars_left - 1 + rem - e, vars_left - 1);
            if rank < cnt {
                break;
            }
            rank -= cnt;
            e += 1;
        }
        alpha[pos] = e as u16;
        rem -= e;
    }
    Monomial(alpha)
}

/// Rank of a p-subset of {1..n} in lexicographic order.
pub fn subset_rank(n: usize, dirs: &[u8]) -> u64 {
    let p = dirs.len();
    let mut rank = 0u64;
    let mut prev = 0u8;
    for (pos, &d) in dirs.iter().enumerate() {
        for cand in (prev + 1)..d {
            rank += binom((n as i64) - cand as i64, (p - pos - 1) as i64);
        }
        prev = d;
    }
    rank
}

/// Inverse of [`subset_rank`].
pub fn subset_unrank(n: usize, p: usize, mut rank: u64) -> MultiIndex {
    let mut dirs = Vec::with_capacity(p);
    let mut cand = 1u8;
    for pos in 0..p {
        loop {
            let cnt = binom((n as i64) - cand as i64, (p - pos - 1) as i64);
            if rank < cnt {
                break;
            }
            rank -= cnt;
            cand += 1;
        }
        dirs.push(cand);
        cand += 1;
    }
    MultiIndex(dirs)
}

/// Position of the monomial term x^alpha d_I inside
/// [`basis_multivector_space`]`(n, |I|, |alpha|)`.
pub fn basis_index(n: usize, alpha: &[u16], dirs: &[u8]) -> u64 {
    monomial_rank(alpha) * binom(n as i64, dirs.len() as i64) + subset_rank(n, dirs)
}

/// Monomial basis of X^p_h(R^n), ordered by (lex exponents, lex directions).
pub fn basis_multivector_space(n: usize, p: i64, h: i64) -> Vec<PolyVector> {
    let d = dim_multivector_space(n, p, h);
    let mut out = Vec::with_capacity(d as usize);
    for idx in 0..d {
        out.push(basis_element(n, p, h, idx));
    }
    out
}

/// The idx-th element of the (n, p, h) monomial basis.
pub fn basis_element(n: usize, p: i64, h: i64, idx: u64) -> PolyVector {
    let nsub = binom(n as i64, p);
    let mono = monomial_unrank(n, h, idx / nsub);
    let dirs = subset_unrank(n, p as usize, idx % nsub);
    PolyVector::monomial(n, mono, dirs, Q::from_integer(1.into()))
}

/// Merge two disjoint increasing direction lists; the sign counts the
/// transpositions needed to interleave them.  `None` when they intersect.
fn wedge_merge(a: &[u8], b: &[u8]) -> Option<(i64, Vec<u8>)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0usize, 0usize);
    let mut sign = 1i64;
    while i < a.len() && j < b.len() {
        if a[i] == b[j] {
            return None;
        }
        if a[i] < b[j] {
            out.push(a[i]);
            i += 1;
        } else {
            // b[j] hops over the remaining a-entries
            if (a.len() - i) % 2 == 1 {
                sign = -sign;
            }
            out.push(b[j]);
            j += 1;
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    Some((sign, out))
}

fn mono_mul(a: &[u16], b: &[u16]) -> Vec<u16> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Schouten bracket of two monomial terms, integer structure constants.
///
/// For A = x^a d_I (p = |I|) and B = x^b d_J (q = |J|):
/// the biderivation axioms unroll to
///   [A,B] = (-1)^{(q-1)p} x^b * sum_t (-1)^t (d_{j_t} x^a) d_{J\t} ^ d_I
///         + x^a * sum_s (-1)^{(q-1)(p-s)} (d_{i_s} x^b) d_{I<s} ^ d_J ^ d_{I>s}
pub(crate) fn schouten_mono(
    alpha: &[u16],
    dirs_i: &[u8],
    beta: &[u16],
    dirs_j: &[u8],
) -> Vec<(TermKey, i64)> {
    let p = dirs_i.len() as i64;
    let q = dirs_j.len() as i64;
    let mut out: Vec<(TermKey, i64)> = Vec::new();

    // d/dx_{j_t} applied to x^alpha, wedged as (J \ t) ^ I
    let lead = if ((q - 1) * p) % 2 == 0 { 1 } else { -1 };
    for (t, &jt) in dirs_j.iter().enumerate() {
        let e = alpha[(jt - 1) as usize];
        if e == 0 {
            continue;
        }
        let mut da = alpha.to_vec();
        da[(jt - 1) as usize] -= 1;
        let mut jrem = dirs_j.to_vec();
        jrem.remove(t);
        if let Some((msign, merged)) = wedge_merge(&jrem, dirs_i) {
            let tsign = if (t + 1) % 2 == 0 { 1 } else { -1 };
            let coeff = lead * tsign * msign * e as i64;
            out.push(((Monomial(mono_mul(&da, beta)), MultiIndex(merged)), coeff));
        }
    }

    // d/dx_{i_s} applied to x^beta, wedged as I_{<s} ^ J ^ I_{>s}
    for (s0, &is) in dirs_i.iter().enumerate() {
        let s = (s0 + 1) as i64;
        let e = beta[(is - 1) as usize];
        if e == 0 {
            continue;
        }
        let mut db = beta.to_vec();
        db[(is - 1) as usize] -= 1;
        let (left, rest) = dirs_i.split_at(s0);
        let right = &rest[1..];
        let step1 = match wedge_merge(dirs_j, right) {
            Some(v) => v,
            None => continue,
        };
        let step2 = match wedge_merge(left, &step1.1) {
            Some(v) => v,
            None => continue,
        };
        let ssign = if ((q - 1) * (p - s)) % 2 == 0 { 1 } else { -1 };
        let coeff = ssign * step1.0 * step2.0 * e as i64;
        out.push((
            (Monomial(mono_mul(alpha, &db)), MultiIndex(step2.1)),
            coeff,
        ));
    }
    out
}

impl PolyVector {
    pub fn zero(n: usize) -> Self {
        PolyVector {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(n: usize, mono: Monomial, dirs: MultiIndex, coeff: Q) -> Self {
        assert_eq!(mono.0.len(), n, "exponent vector length must equal n");
        debug_assert!(dirs.0.windows(2).all(|w| w[0] < w[1]));
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert((mono, dirs), coeff);
        }
        PolyVector { n, terms }
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&TermKey, &Q)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add_term(&mut self, key: TermKey, coeff: Q) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(key);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().clone() + coeff;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &PolyVector) -> Result<PolyVector, PolyError> {
        self.check_dim(other)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Q) -> PolyVector {
        if c.is_zero() {
            return PolyVector::zero(self.n);
        }
        PolyVector {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.clone(), v * c))
                .collect(),
        }
    }

    pub fn neg(&self) -> PolyVector {
        self.scale(&q_from_i64(-1))
    }

    fn check_dim(&self, other: &PolyVector) -> Result<(), PolyError> {
        if self.n != other.n {
            return Err(PolyError::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    /// Multivector and polynomial degree when homogeneous, `None` otherwise.
    pub fn homogeneous_degree(&self) -> Option<(i64, i64)> {
        let mut it = self.terms.keys();
        let first = it.next()?;
        let ph = (first.1.degree(), first.0.degree());
        for k in it {
            if (k.1.degree(), k.0.degree()) != ph {
                return None;
            }
        }
        Some(ph)
    }

    /// The (p, h)-homogeneous component.
    pub fn component(&self, p: i64, h: i64) -> PolyVector {
        PolyVector {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| k.1.degree() == p && k.0.degree() == h)
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
        }
    }

    /// Exterior product.
    pub fn wedge(&self, other: &PolyVector) -> Result<PolyVector, PolyError> {
        self.check_dim(other)?;
        let mut out = PolyVector::zero(self.n);
        for ((ma, ia), ca) in &self.terms {
            for ((mb, ib), cb) in &other.terms {
                if let Some((sign, merged)) = wedge_merge(&ia.0, &ib.0) {
                    out.add_term(
                        (Monomial(mono_mul(&ma.0, &mb.0)), MultiIndex(merged)),
                        ca * cb * q_from_i64(sign),
                    );
                }
            }
        }
        Ok(out)
    }

    /// Schouten bracket, extended bilinearly over all monomial terms.
    pub fn schouten(&self, other: &PolyVector) -> Result<PolyVector, PolyError> {
        self.check_dim(other)?;
        let mut out = PolyVector::zero(self.n);
        for ((ma, ia), ca) in &self.terms {
            for ((mb, ib), cb) in &other.terms {
                let scale = ca * cb;
                for (key, c) in schouten_mono(&ma.0, &ia.0, &mb.0, &ib.0) {
                    out.add_term(key, &scale * q_from_i64(c));
                }
            }
        }
        Ok(out)
    }

    /// The Euler vector field x_1 d_1 + ... + x_n d_n.
    pub fn euler_field(n: usize) -> PolyVector {
        let mut out = PolyVector::zero(n);
        for k in 0..n {
            let mut alpha = vec![0u16; n];
            alpha[k] = 1;
            out.add_term(
                (Monomial(alpha), MultiIndex(vec![k as u8 + 1])),
                Q::from_integer(1.into()),
            );
        }
        out
    }

    /// Multiply every coefficient polynomial by x_k (1-based).
    pub fn mul_x(&self, k: usize) -> PolyVector {
        PolyVector {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|((m, i), c)| {
                    let mut e = m.0.clone();
                    e[k - 1] += 1;
                    ((Monomial(e), i.clone()), c.clone())
                })
                .collect(),
        }
    }

    /// Expansion in the monomial basis of each (p, h) component:
    /// returns (p, h, index within basis_multivector_space(n,p,h), coeff).
    pub fn basis_expansion(&self) -> Vec<(i64, i64, u64, Q)> {
        self.terms
            .iter()
            .map(|((m, i), c)| {
                (
                    i.degree(),
                    m.degree(),
                    basis_index(self.n, &m.0, &i.0),
                    c.clone(),
                )
            })
            .collect()
    }
}

/// Poisson test: `[pi, pi] = 0` for a bivector (possibly non-homogeneous).
pub fn is_poisson(pi: &PolyVector) -> Result<bool, PolyError> {
    if pi.terms.keys().any(|k| k.1.degree() != 2) {
        return Err(PolyError::NotABivector);
    }
    Ok(pi.schouten(pi)?.is_zero())
}

// ---------------------------------------------------------------------------
// Text syntax: sum of terms `c x1^a1 ... xn^an d{i1,...,ip}`.
// ---------------------------------------------------------------------------

impl fmt::Display for PolyVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((mono, dirs), coeff) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{coeff}")?;
            for (k, &e) in mono.0.iter().enumerate() {
                if e == 1 {
                    write!(f, " x{}", k + 1)?;
                } else if e > 1 {
                    write!(f, " x{}^{}", k + 1, e)?;
                }
            }
            let list = dirs
                .0
                .iter()
                .map(|d| d.to_string())
                .collect::<Vec<_>>()
                .join(",");
            write!(f, " d{{{list}}}")?;
        }
        Ok(())
    }
}

/// Parse the textual syntax; round-trips with `Display`.
pub fn parse_polyvector(n: usize, input: &str) -> Result<PolyVector, PolyError> {
    let err = |msg: &str| PolyError::Parse(msg.to_string());
    let mut out = PolyVector::zero(n);
    let s = input.trim();
    if s.is_empty() {
        return Err(err("empty input"));
    }
    if s == "0" {
        return Ok(out);
    }
    // split into signed terms at top level
    let mut terms: Vec<(i64, String)> = Vec::new();
    let mut cur = String::new();
    let mut sign = 1i64;
    let mut seen_content = false;
    for ch in s.chars() {
        match ch {
            '+' | '-' if seen_content && !cur.trim().is_empty() => {
                terms.push((sign, cur.trim().to_string()));
                cur = String::new();
                sign = if ch == '-' { -1 } else { 1 };
            }
            '-' if !seen_content || cur.trim().is_empty() => {
                sign = -sign;
                seen_content = true;
            }
            '+' if cur.trim().is_empty() => {}
            _ => {
                cur.push(ch);
                seen_content = true;
            }
        }
    }
    if !cur.trim().is_empty() {
        terms.push((sign, cur.trim().to_string()));
    }
    for (tsign, text) in terms {
        let (key, coeff) = parse_term(n, &text)?;
        out.add_term(key, coeff * q_from_i64(tsign));
    }
    Ok(out)
}

fn parse_term(n: usize, text: &str) -> Result<(TermKey, Q), PolyError> {
    let err = |msg: String| PolyError::Parse(msg);
    let tokens: Vec<&str> = text.split_whitespace().collect();
    if tokens.is_empty() {
        return Err(err("empty term".into()));
    }
    let mut coeff = Q::from_integer(1.into());
    let mut alpha = vec![0u16; n];
    let mut dirs: Option<Vec<u8>> = None;
    for (pos, tok) in tokens.iter().enumerate() {
        if let Some(rest) = tok.strip_prefix("d{") {
            let inner = rest
                .strip_suffix('}')
                .ok_or_else(|| err(format!("malformed direction set `{tok}`")))?;
            let mut ds = Vec::new();
            if !inner.trim().is_empty() {
                for part in inner.split(',') {
                    let v: u8 = part
                        .trim()
                        .parse()
                        .map_err(|_| err(format!("bad direction `{part}`")))?;
                    if v == 0 || v as usize > n {
                        return Err(err(format!("direction {v} out of range 1..{n}")));
                    }
                    ds.push(v);
                }
            }
            if ds.windows(2).any(|w| w[0] >= w[1]) {
                return Err(err(format!("directions must be strictly increasing: `{tok}`")));
            }
            if dirs.is_some() {
                return Err(err("multiple direction sets in one term".into()));
            }
            dirs = Some(ds);
        } else if let Some(rest) = tok.strip_prefix('x') {
            let (var, exp) = match rest.split_once('^') {
                Some((v, e)) => (v, e.parse::<u16>().map_err(|_| err(format!("bad exponent in `{tok}`")))?),
                None => (rest, 1),
            };
            let v: usize = var
                .parse()
                .map_err(|_| err(format!("bad variable `{tok}`")))?;
            if v == 0 || v > n {
                return Err(err(format!("variable x{v} out of range 1..{n}")));
            }
            alpha[v - 1] += exp;
        } else if pos == 0 {
            coeff = parse_rational(tok).ok_or_else(|| err(format!("bad coefficient `{tok}`")))?;
        } else {
            return Err(err(format!("unexpected token `{tok}`")));
        }
    }
    let dirs = dirs.ok_or_else(|| err("term is missing its d{...} part".into()))?;
    Ok(((Monomial(alpha), MultiIndex(dirs)), coeff))
}

fn parse_rational(s: &str) -> Option<Q> {
    let s = s.trim();
    match s.split_once('/') {
        Some((a, b)) => {
            let num: crate::Z = a.parse().ok()?;
            let den: crate::Z = b.parse().ok()?;
            if den.is_zero() {
                return None;
            }
            Some(Q::new(num, den))
        }
        None => {
            let num: crate::Z = s.parse().ok()?;
            Some(Q::from_integer(num))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pv(n: usize, s: &str) -> PolyVector {
        parse_polyvector(n, s).unwrap()
    }

    #[test]
    fn dims_match_formula() {
        assert_eq!(dim_multivector_space(2, 1, 1), 4);
        assert_eq!(dim_multivector_space(3, 3, 0), 1);
        assert_eq!(dim_multivector_space(2, 2, 2), 3);
        assert_eq!(dim_multivector_space(2, 3, 0), 0);
        assert_eq!(dim_multivector_space(2, 1, -1), 0);
        assert_eq!(dim_multivector_space(4, 0, 0), 1);
    }

    #[test]
    fn basis_length_equals_dim() {
        for n in 1..=4usize {
            for p in 0..=(n as i64) {
                for h in 0..=4i64 {
                    let b = basis_multivector_space(n, p, h);
                    assert_eq!(b.len() as u64, dim_multivector_space(n, p, h));
                    for (idx, e) in b.iter().enumerate() {
                        let exp = e.basis_expansion();
                        assert_eq!(exp.len(), 1);
                        assert_eq!(exp[0].2, idx as u64, "rank/unrank mismatch");
                    }
                }
            }
        }
    }

    #[test]
    fn basis_small_cases() {
        let b = basis_multivector_space(2, 1, 0);
        assert_eq!(b.len(), 2);
        assert_eq!(b[0], pv(2, "1 d{1}"));
        assert_eq!(b[1], pv(2, "1 d{2}"));
        assert!(basis_multivector_space(2, 3, 0).is_empty());
    }

    #[test]
    fn wedge_basics() {
        let d1 = pv(2, "1 d{1}");
        let d2 = pv(2, "1 d{2}");
        assert_eq!(d1.wedge(&d2).unwrap(), pv(2, "1 d{1,2}"));
        assert_eq!(d2.wedge(&d1).unwrap(), pv(2, "-1 d{1,2}"));
        let x1d1 = pv(2, "1 x1 d{1}");
        assert!(x1d1.wedge(&x1d1).unwrap().is_zero());
    }

    #[test]
    fn schouten_examples() {
        // [d1, x1 d1] = d1
        let a = pv(2, "1 d{1}");
        let b = pv(2, "1 x1 d{1}");
        assert_eq!(a.schouten(&b).unwrap(), pv(2, "1 d{1}"));
        // constant bivector brackets to zero
        let biv = pv(2, "1 d{1,2}");
        assert!(biv.schouten(&biv).unwrap().is_zero());
        // [d1^d2, x1 x2] = x1 d1 - x2 d2
        let f = pv(2, "1 x1 x2 d{}");
        assert_eq!(biv.schouten(&f).unwrap(), pv(2, "1 x1 d{1} + -1 x2 d{2}"));
    }

    #[test]
    fn schouten_is_lie_bracket_on_vector_fields() {
        // [x1 d2, x2 d1] = x1 d1 - x2 d2
        let a = pv(2, "1 x1 d{2}");
        let b = pv(2, "1 x2 d{1}");
        assert_eq!(a.schouten(&b).unwrap(), pv(2, "1 x1 d{1} + -1 x2 d{2}"));
    }

    #[test]
    fn euler_field_eigenvalue_on_basis() {
        for n in 1..=3usize {
            let e = PolyVector::euler_field(n);
            for p in 0..=(n as i64) {
                for h in 0..=3i64 {
                    for u in basis_multivector_space(n, p, h) {
                        let got = e.schouten(&u).unwrap();
                        let want = u.scale(&q_from_i64(h - p));
                        assert_eq!(got, want, "n={n} p={p} h={h}");
                    }
                }
            }
        }
    }

    #[test]
    fn poisson_checks() {
        assert!(is_poisson(&pv(2, "1 d{1,2}")).unwrap());
        assert!(is_poisson(&pv(2, "1 x1 d{1,2}")).unwrap());
        let pi = pv(3, "1 x3 d{1,2} + 1 x1 d{2,3}");
        assert!(is_poisson(&pi).unwrap());
        // x3 d{1,2} + x1 d{1,3} fails: [pi,pi] has a d1^d2^d3 residual
        let bad = pv(3, "1 x3 d{1,2} + 1 x1 d{1,3}");
        assert!(!is_poisson(&bad).unwrap());
    }

    #[test]
    fn poisson_rejects_non_bivector() {
        assert_eq!(
            is_poisson(&pv(2, "1 d{1}")).unwrap_err(),
            PolyError::NotABivector
        );
    }

    #[test]
    fn parse_print_round_trip() {
        for s in [
            "1 x1 d{1,2}",
            "-2/3 x1^2 x2 d{}",
            "1 d{1} + -1 d{2}",
            "0",
            "5 d{}",
        ] {
            let v = pv(2, s);
            let printed = v.to_string();
            assert_eq!(pv(2, &printed), v, "round trip failed for `{s}` -> `{printed}`");
        }
    }

    #[test]
    fn parse_errors() {
        assert!(parse_polyvector(2, "1 x3 d{1}").is_err());
        assert!(parse_polyvector(2, "1 d{2,1}").is_err());
        assert!(parse_polyvector(2, "1 x1").is_err());
        assert!(parse_polyvector(2, "").is_err());
    }
}
