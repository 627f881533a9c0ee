//! Young diagrams and the basis-free dimension/Euler oracle.
//!
//! A diagram appears in three interchangeable notations: the traditional
//! part list `^t(4,1,1)`, the multiplicity vector `[2,0,0,1]` counting how
//! many parts equal each size, and the tower view `<3,1,1,1>` of column
//! heights, which equals the conjugate partition.
//!
//! Chain-space dimensions are computed here without materialising any
//! basis: words of m factors of fixed multivector degree correspond to
//! diagrams of area u + 2m and length m (parts are the polynomial degrees
//! plus one), and each block of identical factors contributes a binomial
//! (odd degree, skew) or multiset (even degree, symmetric) coefficient.

use crate::polyvector::dim_multivector_space;
use crate::superchain::{m_upper_bound, Mode};
use num::BigInt;
use num::traits::{One, Zero};
use std::collections::HashMap;
use std::sync::Mutex;

/// Integer partition stored in traditional view: non-increasing parts.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Build from non-increasing positive parts.
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]) && parts.iter().all(|&p| p > 0),
            "parts must be positive and non-increasing"
        );
        Partition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn area(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn length(&self) -> usize {
        self.parts.len()
    }

    /// Multiplicity view: entry i-1 counts the parts equal to i.
    pub fn multiplicities(&self) -> Vec<u32> {
        let max = self.parts.first().copied().unwrap_or(0) as usize;
        let mut mult = vec![0u32; max];
        for &p in &self.parts {
            mult[(p - 1) as usize] += 1;
        }
        mult
    }

    pub fn from_multiplicities(mult: &[u32]) -> Self {
        let mut parts = Vec::new();
        for (i, &k) in mult.iter().enumerate().rev() {
            for _ in 0..k {
                parts.push(i as u32 + 1);
            }
        }
        Partition { parts }
    }

    /// Tower view (column heights, left to right) = conjugate part list.
    pub fn tower(&self) -> Vec<u32> {
        self.conjugate().parts
    }

    pub fn from_tower(tower: &[u32]) -> Self {
        Partition::new(tower.to_vec()).conjugate()
    }

    /// Transpose of the diagram.
    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let mut parts = Vec::with_capacity(width as usize);
        for col in 1..=width {
            parts.push(self.parts.iter().filter(|&&p| p >= col).count() as u32);
        }
        Partition { parts }
    }
}

/// All partitions of `area` with exactly `length` parts, each at most
/// `max_part` when given; parts are generated largest-first and the list
/// is ordered lexicographically descending.
pub fn enumerate_partitions(area: u32, length: u32, max_part: Option<u32>) -> Vec<Partition> {
    let mut out = Vec::new();
    let cap = max_part.unwrap_or(area);
    let mut acc: Vec<u32> = Vec::with_capacity(length as usize);
    fn rec(area: u32, length: u32, cap: u32, acc: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if length == 0 {
            if area == 0 {
                out.push(Partition { parts: acc.clone() });
            }
            return;
        }
        if area < length {
            return;
        }
        let hi = cap.min(area - length + 1);
        let lo = area.div_ceil(length);
        let mut k = hi;
        while k >= lo {
            acc.push(k);
            rec(area - k, length - 1, k, acc, out);
            acc.pop();
            if k == lo {
                break;
            }
            k -= 1;
        }
    }
    rec(area, length, cap, &mut acc, &mut out);
    out
}

/// The recursion `nabla(area, m) = B nabla(area-1, m-1) |_| T_m nabla(area-m, m)`:
/// B adjoins a part equal to 1, T shifts every part up by one.  Returns the
/// two branches (already mapped into partitions of the full area/length).
pub fn split_recursive(area: u32, length: u32) -> (Vec<Partition>, Vec<Partition>) {
    assert!(length >= 1 && area >= length);
    let b_branch = enumerate_partitions(area - 1, length - 1, None)
        .into_iter()
        .map(|p| {
            let mut parts = p.parts;
            parts.push(1);
            Partition::new(parts)
        })
        .collect();
    let t_branch = if area >= 2 * length {
        enumerate_partitions(area - length, length, None)
            .into_iter()
            .map(|p| Partition::new(p.parts.iter().map(|&x| x + 1).collect()))
            .collect()
    } else {
        Vec::new()
    };
    (b_branch, t_branch)
}

fn binom_big(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Dimension of a block of `ell` wedge factors of multivector degree p with
/// total second weight u: sum over degree multisets, products of binomial
/// (p odd) or multiset (p even) coefficients.
fn block_dim(n: usize, p: i64, ell: usize, u: i64, cache: &BlockCache) -> BigInt {
    if ell == 0 {
        return if u == 0 { BigInt::one() } else { BigInt::zero() };
    }
    let key = (n, p, ell, u);
    if let Some(v) = cache.lock().unwrap().get(&key) {
        return v.clone();
    }
    let area = u + 2 * ell as i64;
    let mut total = BigInt::zero();
    if area >= ell as i64 {
        for lam in enumerate_partitions(area as u32, ell as u32, None) {
            let mut d = BigInt::one();
            for (i, &mult) in lam.multiplicities().iter().enumerate() {
                if mult == 0 {
                    continue;
                }
                let dim = dim_multivector_space(n, p, i as i64) as i64;
                let c = if p % 2 == 1 {
                    binom_big(dim, mult as i64)
                } else {
                    binom_big(dim - 1 + mult as i64, mult as i64)
                };
                d *= c;
                if d.is_zero() {
                    break;
                }
            }
            total += d;
        }
    }
    cache.lock().unwrap().insert(key, total.clone());
    total
}

type BlockCache = Mutex<HashMap<(usize, i64, usize, i64), BigInt>>;

fn block_cache() -> &'static BlockCache {
    use std::sync::OnceLock;
    static CACHE: OnceLock<BlockCache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Dimension of the (n, m, w, h, mode) chain space, purely combinatorial.
pub fn combinatorial_chain_dim(n: usize, m: usize, w: i64, h: i64, mode: Mode) -> BigInt {
    match mode {
        Mode::Module => {
            let mut total = BigInt::zero();
            let mut h0 = 0i64;
            loop {
                let hp = h + 1 - h0;
                if hp < -(m as i64) {
                    break;
                }
                let d0 = dim_multivector_space(n, 0, h0);
                if d0 > 0 {
                    total += combinatorial_chain_dim(n, m, w, hp, Mode::Trivial)
                        * BigInt::from(d0);
                }
                h0 += 1;
            }
            total
        }
        Mode::Trivial | Mode::Extended => {
            if m == 0 {
                return if w == 0 && h == 0 {
                    BigInt::one()
                } else {
                    BigInt::zero()
                };
            }
            let lo_p = if mode == Mode::Extended { 0 } else { 1 };
            let cache = block_cache();
            let mut total = BigInt::zero();
            let mut kvec = vec![0usize; n + 1];
            fn over_kvecs(
                n: usize,
                p: i64,
                rem_m: usize,
                rem_w: i64,
                kvec: &mut Vec<usize>,
                f: &mut impl FnMut(&[usize]),
            ) {
                if p > n as i64 {
                    if rem_m == 0 && rem_w == 0 {
                        f(kvec);
                    }
                    return;
                }
                for k in 0..=rem_m {
                    let rw = rem_w - (p - 1) * k as i64;
                    let rest = (rem_m - k) as i64;
                    if rw < rest * p || rw > rest * (n as i64 - 1) {
                        continue;
                    }
                    kvec[p as usize] = k;
                    over_kvecs(n, p + 1, rem_m - k, rw, kvec, f);
                }
                kvec[p as usize] = 0;
            }
            over_kvecs(n, lo_p, m, w, &mut kvec, &mut |kv| {
                let blocks: Vec<(i64, usize)> = (lo_p..=n as i64)
                    .filter(|&p| kv[p as usize] > 0)
                    .map(|p| (p, kv[p as usize]))
                    .collect();
                fn distribute(
                    n: usize,
                    blocks: &[(i64, usize)],
                    bi: usize,
                    rem_h: i64,
                    acc: BigInt,
                    cache: &BlockCache,
                    total: &mut BigInt,
                ) {
                    if bi == blocks.len() {
                        if rem_h == 0 {
                            *total += acc;
                        }
                        return;
                    }
                    let (p, ell) = blocks[bi];
                    let later_min: i64 =
                        blocks[bi + 1..].iter().map(|&(_, k)| -(k as i64)).sum();
                    for u in -(ell as i64)..=(rem_h - later_min) {
                        let d = block_dim(n, p, ell, u, cache);
                        if !d.is_zero() {
                            distribute(n, blocks, bi + 1, rem_h - u, &acc * &d, cache, total);
                        }
                    }
                }
                distribute(n, &blocks, 0, h, BigInt::one(), cache, &mut total);
            });
            total
        }
    }
}

/// Alternating sum of chain dimensions over the full nonzero degree range.
pub fn combinatorial_euler(n: usize, w: i64, h: i64, mode: Mode) -> BigInt {
    let hi = m_upper_bound(n, w, h, mode);
    let mut acc = BigInt::zero();
    for m in 0..=hi {
        let d = combinatorial_chain_dim(n, m as usize, w, h, mode);
        if m % 2 == 0 {
            acc += d;
        } else {
            acc -= d;
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn partition_enumeration() {
        let ps = enumerate_partitions(4, 3, None);
        assert_eq!(ps, vec![Partition::new(vec![2, 1, 1])]);
        assert_eq!(
            enumerate_partitions(6, 1, None),
            vec![Partition::new(vec![6])]
        );
        assert_eq!(
            enumerate_partitions(5, 5, None),
            vec![Partition::new(vec![1, 1, 1, 1, 1])]
        );
        assert_eq!(enumerate_partitions(3, 5, None), vec![]);
        // max_part cap
        assert_eq!(enumerate_partitions(6, 2, Some(3)), vec![Partition::new(vec![3, 3])]);
    }

    #[test]
    fn conjugate_and_views() {
        let p = Partition::new(vec![4, 1, 1]);
        assert_eq!(p.conjugate(), Partition::new(vec![3, 1, 1, 1]));
        assert_eq!(p.tower(), vec![3, 1, 1, 1]);
        assert_eq!(p.multiplicities(), vec![2, 0, 0, 1]);
        assert_eq!(Partition::from_multiplicities(&[2, 0, 0, 1]), p);
        assert_eq!(Partition::from_tower(&[3, 1, 1, 1]), p);
        assert_eq!(
            Partition::new(vec![1, 1, 1]).conjugate(),
            Partition::new(vec![3])
        );
    }

    #[test]
    fn conjugate_is_involution() {
        for area in 1..=8u32 {
            for len in 1..=area {
                for p in enumerate_partitions(area, len, None) {
                    assert_eq!(p.conjugate().conjugate(), p);
                }
            }
        }
    }

    #[test]
    fn recursion_splits_exactly() {
        for area in 1..=12u32 {
            for len in 1..=area {
                let (b, t) = split_recursive(area, len);
                let mut all: Vec<Partition> = b.iter().chain(t.iter()).cloned().collect();
                all.sort();
                let mut dedup = all.clone();
                dedup.dedup();
                assert_eq!(all.len(), dedup.len(), "branches overlap at ({area},{len})");
                let mut want = enumerate_partitions(area, len, None);
                want.sort();
                assert_eq!(all, want, "union mismatch at ({area},{len})");
            }
        }
    }

    #[test]
    fn t_branch_at_double_area() {
        // nabla(2m, m): the T branch is the single diagram [2^m]
        for m in 1..=6u32 {
            let (_, t) = split_recursive(2 * m, m);
            assert_eq!(t, vec![Partition::new(vec![2; m as usize])]);
        }
    }

    #[test]
    fn paper_table_dims() {
        let t = |m: usize, h: i64| combinatorial_chain_dim(2, m, 0, h, Mode::Trivial);
        assert_eq!(
            (2..=6).map(|m| t(m, -2)).collect::<Vec<_>>(),
            [1, 4, 6, 4, 1].map(big).to_vec()
        );
        assert_eq!(
            (1..=7).map(|m| t(m, -1)).collect::<Vec<_>>(),
            [2, 8, 18, 32, 38, 24, 6].map(big).to_vec()
        );
        assert_eq!(
            (0..=8).map(|m| t(m, 0)).collect::<Vec<_>>(),
            [1, 4, 18, 60, 120, 156, 134, 68, 15].map(big).to_vec()
        );
        assert_eq!(
            (1..=9).map(|m| t(m, 1)).collect::<Vec<_>>(),
            [6, 40, 140, 328, 522, 544, 352, 128, 20].map(big).to_vec()
        );
        assert_eq!(combinatorial_chain_dim(2, 4, 0, -2, Mode::Trivial), big(6));
        assert_eq!(combinatorial_chain_dim(2, 6, 0, 1, Mode::Trivial), big(544));
    }

    #[test]
    fn euler_vanishes() {
        for (n, w, h, mode) in [
            (2, 0, 0, Mode::Trivial),
            (2, 2, 1, Mode::Trivial),
            (2, 0, 0, Mode::Module),
            (2, 0, -1, Mode::Module),
            (3, 1, -1, Mode::Trivial),
            (3, 0, 0, Mode::Module),
        ] {
            assert_eq!(
                combinatorial_euler(n, w, h, mode),
                BigInt::zero(),
                "euler at n={n} w={w} h={h} {mode:?}"
            );
        }
    }
}
