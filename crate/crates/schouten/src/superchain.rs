//! Canonical super-wedge words and enumeration of double-weighted chain bases.
//!
//! Factors of super degree y and y' pick up the sign (-1)^{1+y y'} when
//! transposed, so the wedge is symmetric on odd super degrees and skew on
//! even ones.  For a multivector generator of degree p the super degree is
//! p - 1: vector fields anticommute, bivectors commute, functions (p = 0,
//! extended mode) commute.

use crate::polyvector::dim_multivector_space;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

/// Basis generator of X^p_h(R^n): `idx` points into
/// `polyvector::basis_multivector_space(n, p, h)`.
#[derive(
    Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
pub struct GeneratorId {
    pub p: u8,
    pub h: u16,
    pub idx: u32,
}

impl GeneratorId {
    pub fn new(p: i64, h: i64, idx: u64) -> Self {
        GeneratorId {
            p: p as u8,
            h: h as u16,
            idx: idx as u32,
        }
    }

    /// Super degree p - 1.
    pub fn super_degree(&self) -> i64 {
        self.p as i64 - 1
    }

    /// Contribution to the double weight: (p - 1, h - 1).
    pub fn weight(&self) -> (i64, i64) {
        (self.p as i64 - 1, self.h as i64 - 1)
    }
}

/// Coefficient conventions for the chain spaces.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Trivial coefficients; generators have p >= 1.
    Trivial,
    /// Coefficients in the polynomial functions with the natural action.
    Module,
    /// Functions join the algebra itself as p = 0 generators.
    Extended,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Mode::Trivial => "trivial",
            Mode::Module => "module",
            Mode::Extended => "extended",
        };
        write!(f, "{s}")
    }
}

impl FromStr for Mode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "trivial" => Ok(Mode::Trivial),
            "module" => Ok(Mode::Module),
            "extended" => Ok(Mode::Extended),
            other => Err(format!("unknown mode `{other}` (trivial|module|extended)")),
        }
    }
}

/// A canonical word; in module mode `coeff` holds the p = 0 coefficient
/// generator, otherwise it is `None`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ChainWord {
    pub factors: Vec<GeneratorId>,
    pub coeff: Option<GeneratorId>,
}

impl ChainWord {
    pub fn plain(factors: Vec<GeneratorId>) -> Self {
        ChainWord {
            factors,
            coeff: None,
        }
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }
}

/// Sign from transposing adjacent factors of multivector degrees p and q:
/// (-1)^{1 + (p-1)(q-1)}.
pub fn swap_sign(p: i64, q: i64) -> i64 {
    swap_sign_super(p - 1, q - 1)
}

/// Same sign in terms of super degrees: (-1)^{1 + x y}.
pub fn swap_sign_super(x: i64, y: i64) -> i64 {
    if (1 + x * y) % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Sort items into canonical order, accumulating the transposition signs.
/// Returns `None` when a factor of even super degree repeats (square zero).
pub fn canonicalize_by<T, F>(items: &mut Vec<T>, super_degree: F) -> Option<i64>
where
    T: Ord + Copy,
    F: Fn(&T) -> i64,
{
    let mut sign = 1i64;
    for i in 1..items.len() {
        let mut j = i;
        while j > 0 && items[j - 1] > items[j] {
            sign *= swap_sign_super(super_degree(&items[j - 1]), super_degree(&items[j]));
            items.swap(j - 1, j);
            j -= 1;
        }
    }
    for w in items.windows(2) {
        if w[0] == w[1] && super_degree(&w[0]) % 2 == 0 {
            return None;
        }
    }
    Some(sign)
}

/// Canonical form of a factor list; `None` when the word is zero.
pub fn canonicalize(factors: &[GeneratorId]) -> Option<(i64, Vec<GeneratorId>)> {
    let mut v = factors.to_vec();
    let sign = canonicalize_by(&mut v, |g| g.super_degree())?;
    Some((sign, v))
}

/// Default upper bound for the degree m of a nonzero chain space, from the
/// skew bounds on the constant and linear vector-field factors.
pub fn m_upper_bound(n: usize, w: i64, h: i64, mode: Mode) -> i64 {
    let d10 = dim_multivector_space(n, 1, 0) as i64;
    let d11 = dim_multivector_space(n, 1, 1) as i64;
    let shift = if mode == Mode::Module { 1 } else { 0 };
    (h + shift + 2 * w + 2 * d10 + d11).max(0)
}

/// Walk every canonical word of the (n, m, w, h, mode) chain space.
///
/// Iteration is organised by blocks of equal multivector degree, then equal
/// polynomial degree, then index combinations (strictly increasing for odd
/// p, non-decreasing for even p).
pub fn enumerate_chain_words<F>(n: usize, m: usize, w: i64, h: i64, mode: Mode, f: &mut F)
where
    F: FnMut(&[GeneratorId], Option<GeneratorId>),
{
    match mode {
        Mode::Trivial | Mode::Extended => {
            if m == 0 {
                if w == 0 && h == 0 {
                    f(&[], None);
                }
                return;
            }
            let lo_p = if mode == Mode::Extended { 0 } else { 1 };
            let mut kvec = vec![0usize; n + 1];
            let mut word: Vec<GeneratorId> = Vec::with_capacity(m);
            enumerate_kvec(n, lo_p, lo_p, m, w, &mut kvec, &mut |kv| {
                let blocks: Vec<(i64, usize)> = (lo_p..=n as i64)
                    .filter(|&p| kv[p as usize] > 0)
                    .map(|p| (p, kv[p as usize]))
                    .collect();
                distribute_and_emit(n, &blocks, 0, h, &mut word, &mut |word| f(word, None));
            });
        }
        Mode::Module => {
            let mut h0 = 0i64;
            loop {
                let hp = h + 1 - h0;
                if hp < -(m as i64) {
                    break;
                }
                let dim0 = dim_multivector_space(n, 0, h0);
                if dim0 > 0 {
                    enumerate_chain_words(n, m, w, hp, Mode::Trivial, &mut |word, _| {
                        for idx in 0..dim0 {
                            f(word, Some(GeneratorId::new(0, h0, idx)));
                        }
                    });
                }
                h0 += 1;
            }
        }
    }
}

fn enumerate_kvec<F>(
    n: usize,
    lo_p: i64,
    p: i64,
    rem_m: usize,
    rem_w: i64,
    kvec: &mut Vec<usize>,
    f: &mut F,
) where
    F: FnMut(&[usize]),
{
    if p > n as i64 {
        if rem_m == 0 && rem_w == 0 {
            f(kvec);
        }
        return;
    }
    // factors of degree > p contribute weights in [p, n-1] each
    for k in 0..=rem_m {
        let rw = rem_w - (p - 1) * k as i64;
        let rest = (rem_m - k) as i64;
        if rw < rest * p || rw > rest * (n as i64 - 1) {
            continue;
        }
        kvec[p as usize] = k;
        enumerate_kvec(n, lo_p, p + 1, rem_m - k, rw, kvec, f);
    }
    kvec[p as usize] = 0;
}

/// Distribute the remaining second weight over the blocks and emit words.
fn distribute_and_emit<F>(
    n: usize,
    blocks: &[(i64, usize)],
    bi: usize,
    rem_h: i64,
    word: &mut Vec<GeneratorId>,
    f: &mut F,
) where
    F: FnMut(&[GeneratorId]),
{
    if bi == blocks.len() {
        if rem_h == 0 {
            f(word);
        }
        return;
    }
    let (p, ell) = blocks[bi];
    let later_min: i64 = blocks[bi + 1..].iter().map(|&(_, k)| -(k as i64)).sum();
    let lo = -(ell as i64);
    let hi = rem_h - later_min;
    let mut u = lo;
    while u <= hi {
        emit_block(n, p, ell, u, word, &mut |word| {
            distribute_and_emit(n, blocks, bi + 1, rem_h - u, word, f)
        });
        u += 1;
    }
}

/// Emit all canonical fillings of a block of `ell` factors of multivector
/// degree p with total second weight u = sum (h_s - 1).
fn emit_block<F>(n: usize, p: i64, ell: usize, u: i64, word: &mut Vec<GeneratorId>, f: &mut F)
where
    F: FnMut(&mut Vec<GeneratorId>),
{
    // choose a non-decreasing sequence of polynomial degrees h_1 <= ... <= h_ell
    // with sum (h_s - 1) = u, then per equal-degree group choose indices.
    fn rec<F>(
        n: usize,
        p: i64,
        remaining: usize,
        rem_u: i64,
        min_h: i64,
        word: &mut Vec<GeneratorId>,
        f: &mut F,
    ) where
        F: FnMut(&mut Vec<GeneratorId>),
    {
        if remaining == 0 {
            if rem_u == 0 {
                f(word);
            }
            return;
        }
        // group of `cnt` factors of equal polynomial degree hval
        let max_h = rem_u + remaining as i64; // each later factor contributes >= -1
        let mut hval = min_h;
        while hval <= max_h {
            let dim = dim_multivector_space(n, p, hval);
            if dim > 0 {
                let max_cnt = if p % 2 == 1 {
                    (dim as usize).min(remaining)
                } else {
                    remaining
                };
                for cnt in 1..=max_cnt {
                    let used = (hval - 1) * cnt as i64;
                    let rest = remaining - cnt;
                    if rem_u - used < -(rest as i64) {
                        break;
                    }
                    choose_indices(n, p, hval, dim, cnt, p % 2 == 1, word, &mut |word| {
                        rec(n, p, rest, rem_u - used, hval + 1, word, f)
                    });
                }
            }
            hval += 1;
        }
    }
    rec(n, p, ell, u, 0, word, f);
}

/// Push every admissible index tuple of length `cnt` (strictly increasing
/// when `strict`, else non-decreasing) and invoke the continuation.
fn choose_indices<F>(
    n: usize,
    p: i64,
    h: i64,
    dim: u64,
    cnt: usize,
    strict: bool,
    word: &mut Vec<GeneratorId>,
    f: &mut F,
) where
    F: FnMut(&mut Vec<GeneratorId>),
{
    fn rec<F>(
        n: usize,
        p: i64,
        h: i64,
        dim: u64,
        left: usize,
        from: u64,
        strict: bool,
        word: &mut Vec<GeneratorId>,
        f: &mut F,
    ) where
        F: FnMut(&mut Vec<GeneratorId>),
    {
        if left == 0 {
            f(word);
            return;
        }
        // not enough indices remain for a strict choice
        if strict && dim - from < left as u64 {
            return;
        }
        let mut idx = from;
        while idx < dim {
            word.push(GeneratorId::new(p, h, idx));
            rec(
                n,
                p,
                h,
                dim,
                left - 1,
                if strict { idx + 1 } else { idx },
                strict,
                word,
                f,
            );
            word.pop();
            idx += 1;
        }
    }
    rec(n, p, h, dim, cnt, 0, strict, word, f);
}

/// Number of canonical words, counted by a full enumeration walk.
pub fn chain_dim(n: usize, m: usize, w: i64, h: i64, mode: Mode) -> u64 {
    let mut count = 0u64;
    enumerate_chain_words(n, m, w, h, mode, &mut |_, _| count += 1);
    count
}

/// Ordered basis of a weighted chain space with a column-index lookup.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ChainBasis {
    pub n: usize,
    pub m: usize,
    pub w: i64,
    pub h: i64,
    pub mode: Mode,
    pub words: Vec<ChainWord>,
    #[serde(skip)]
    index: HashMap<ChainWord, u32>,
}

impl ChainBasis {
    pub fn build(n: usize, m: usize, w: i64, h: i64, mode: Mode) -> Self {
        let mut words = Vec::new();
        enumerate_chain_words(n, m, w, h, mode, &mut |factors, coeff| {
            words.push(ChainWord {
                factors: factors.to_vec(),
                coeff,
            });
        });
        words.sort();
        let mut basis = ChainBasis {
            n,
            m,
            w,
            h,
            mode,
            words,
            index: HashMap::new(),
        };
        basis.rebuild_index();
        basis
    }

    fn rebuild_index(&mut self) {
        self.index = self
            .words
            .iter()
            .enumerate()
            .map(|(i, w)| (w.clone(), i as u32))
            .collect();
    }

    pub fn dim(&self) -> usize {
        self.words.len()
    }

    pub fn position(&self, word: &ChainWord) -> Option<u32> {
        self.index.get(word).copied()
    }

    /// Cache key for basis files: (n, m, w, h, mode, format version).
    pub fn cache_key(n: usize, m: usize, w: i64, h: i64, mode: Mode) -> String {
        format!("basis-v{CACHE_VERSION}-n{n}-m{m}-w{w}-h{h}-{mode}")
    }

    pub fn to_cache_json(&self) -> String {
        serde_json::to_string(&CacheFile {
            version: CACHE_VERSION,
            basis: self.clone(),
        })
        .expect("basis serialization cannot fail")
    }

    pub fn from_cache_json(data: &str) -> Result<Self, String> {
        let file: CacheFile = serde_json::from_str(data).map_err(|e| e.to_string())?;
        if file.version != CACHE_VERSION {
            return Err(format!(
                "cache version {} does not match current {}",
                file.version, CACHE_VERSION
            ));
        }
        let mut basis = file.basis;
        basis.rebuild_index();
        Ok(basis)
    }
}

const CACHE_VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct CacheFile {
    version: u32,
    basis: ChainBasis,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn swap_signs() {
        assert_eq!(swap_sign(1, 1), -1);
        assert_eq!(swap_sign(2, 2), 1);
        assert_eq!(swap_sign(1, 2), -1);
        assert_eq!(swap_sign(0, 2), 1); // functions commute past bivectors
        assert_eq!(swap_sign(0, 1), -1);
    }

    #[test]
    fn canonicalize_basic() {
        let u = GeneratorId::new(1, 0, 0);
        let v = GeneratorId::new(1, 0, 1);
        // [v, u] -> -[u, v]
        let (sign, sorted) = canonicalize(&[v, u]).unwrap();
        assert_eq!(sign, -1);
        assert_eq!(sorted, vec![u, v]);
        // skew square
        assert!(canonicalize(&[u, u]).is_none());
        // symmetric square for p = 2
        let b = GeneratorId::new(2, 0, 0);
        let (sign, sorted) = canonicalize(&[b, b]).unwrap();
        assert_eq!(sign, 1);
        assert_eq!(sorted, vec![b, b]);
    }

    #[test]
    fn paper_dims_n2_w0() {
        // h = -2 table
        let dims: Vec<u64> = (0..=7).map(|m| chain_dim(2, m, 0, -2, Mode::Trivial)).collect();
        assert_eq!(dims, vec![0, 0, 1, 4, 6, 4, 1, 0]);
        // h = 0 table
        let dims: Vec<u64> = (0..=9).map(|m| chain_dim(2, m, 0, 0, Mode::Trivial)).collect();
        assert_eq!(dims, vec![1, 4, 18, 60, 120, 156, 134, 68, 15, 0]);
        // single word at (m=2, w=0, h=-2)
        let basis = ChainBasis::build(2, 2, 0, -2, Mode::Trivial);
        assert_eq!(basis.dim(), 1);
        assert_eq!(
            basis.words[0].factors,
            vec![GeneratorId::new(1, 0, 0), GeneratorId::new(1, 0, 1)]
        );
    }

    #[test]
    fn m_zero_conventions() {
        assert_eq!(chain_dim(2, 0, 0, 0, Mode::Trivial), 1);
        assert_eq!(chain_dim(2, 0, 1, 0, Mode::Trivial), 0);
        assert_eq!(chain_dim(2, 0, 0, -1, Mode::Trivial), 0);
        // module: basis of X^0_{h+1} when w = 0
        assert_eq!(chain_dim(2, 0, 0, 0, Mode::Module), 2);
        assert_eq!(chain_dim(2, 0, 0, -1, Mode::Module), 1);
        assert_eq!(chain_dim(2, 0, 1, 0, Mode::Module), 0);
        assert_eq!(chain_dim(2, 0, 0, 0, Mode::Extended), 1);
    }

    #[test]
    fn trivial_zero_cases() {
        // X^3 on R^2 vanishes
        assert_eq!(chain_dim(2, 1, 2, 0, Mode::Trivial), 0);
    }

    #[test]
    fn module_dims_match_tensor_decomposition() {
        for m in 0..=10usize {
            for w in 0..=1i64 {
                for h in -2..=1i64 {
                    let direct = chain_dim(2, m, w, h, Mode::Module);
                    let mut viasum = 0u64;
                    for h0 in 0..=(h + 1 + m as i64).max(0) {
                        viasum += chain_dim(2, m, w, h + 1 - h0, Mode::Trivial)
                            * dim_multivector_space(2, 0, h0);
                    }
                    assert_eq!(direct, viasum, "m={m} w={w} h={h}");
                }
            }
        }
    }

    #[test]
    fn extended_small() {
        let dims: Vec<u64> = (0..=4).map(|m| chain_dim(2, m, 0, -2, Mode::Extended)).collect();
        assert_eq!(dims, vec![0, 0, 2, 16, 82]);
    }

    #[test]
    fn basis_sorted_and_indexed() {
        let b = ChainBasis::build(2, 3, 0, 0, Mode::Trivial);
        assert_eq!(b.dim(), 60);
        assert!(b.words.windows(2).all(|w| w[0] < w[1]));
        for (i, w) in b.words.iter().enumerate() {
            assert_eq!(b.position(w), Some(i as u32));
        }
    }

    #[test]
    fn cache_round_trip() {
        let b = ChainBasis::build(2, 2, 0, 0, Mode::Module);
        let json = b.to_cache_json();
        let back = ChainBasis::from_cache_json(&json).unwrap();
        assert_eq!(back.words, b.words);
        assert_eq!(back.position(&b.words[3]), Some(3));
    }
}
