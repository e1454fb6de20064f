//! Standard small groups.

use super::{group_from_permutations, FiniteGroup};
use crate::limits::Limits;

fn unbounded() -> Limits {
    Limits { max_group_order: usize::MAX, ..Limits::default() }
}

fn closure<E, F>(identity: E, gens: &[E], mul: F) -> FiniteGroup
where
    E: Clone + Eq + std::hash::Hash,
    F: Fn(&E, &E) -> E,
{
    FiniteGroup::from_closure(identity, gens, mul, &unbounded()).expect("unbounded closure").0
}

/// `C_n`; element `k` is the `k`-th power of the generator.
pub fn cyclic(n: u32) -> FiniteGroup {
    assert!(n >= 1);
    closure(0u32, &[1 % n], move |a, b| (a + b) % n)
}

/// Dihedral group of order `2n`, as pairs `r^k s^f`.
pub fn dihedral(n: u32) -> FiniteGroup {
    assert!(n >= 1);
    closure((0u32, 0u32), &[(1 % n, 0), (0, 1)], move |&(a, f), &(b, g)| {
        let b = if f == 0 { b } else { (n - b) % n };
        ((a + b) % n, (f + g) % 2)
    })
}

/// Dicyclic group of order `4n`: `<a, x | a^2n = 1, x^2 = a^n, x^-1 a x = a^-1>`.
pub fn dicyclic(n: u32) -> FiniteGroup {
    assert!(n >= 1);
    let m = 2 * n;
    closure((0u32, 0u32), &[(1, 0), (0, 1)], move |&(i, j), &(k, l)| {
        let k = if j == 0 { k } else { (m - k) % m };
        let i = (i + k) % m;
        if j + l == 2 {
            ((i + n) % m, 0)
        } else {
            (i, j + l)
        }
    })
}

pub fn quaternion() -> FiniteGroup {
    dicyclic(2)
}

pub fn symmetric(n: usize) -> FiniteGroup {
    if n < 2 {
        return group_from_permutations(&[], &unbounded()).unwrap();
    }
    let mut swap: Vec<u32> = (0..n as u32).collect();
    swap.swap(0, 1);
    let cycle: Vec<u32> = (0..n as u32).map(|i| (i + 1) % n as u32).collect();
    let gens = if n == 2 { vec![swap] } else { vec![swap, cycle] };
    group_from_permutations(&gens, &unbounded()).unwrap()
}

/// `A_n`, generated by the 3-cycles `(0 1 k)`.
pub fn alternating(n: usize) -> FiniteGroup {
    let gens: Vec<Vec<u32>> = (2..n)
        .map(|k| {
            let mut p: Vec<u32> = (0..n as u32).collect();
            p[0] = 1;
            p[1] = k as u32;
            p[k] = 0;
            p
        })
        .collect();
    group_from_permutations(&gens, &unbounded()).unwrap()
}

/// `(C_p)^k`.
pub fn elementary_abelian(p: u32, k: usize) -> FiniteGroup {
    let gens: Vec<Vec<u32>> = (0..k)
        .map(|i| {
            let mut v = vec![0; k];
            v[i] = 1 % p;
            v
        })
        .collect();
    closure(vec![0u32; k], &gens, move |a, b| a.iter().zip(b).map(|(x, y)| (x + y) % p).collect())
}

/// Abelian group `C_{n_1} x ... x C_{n_r}`.
pub fn abelian(orders: &[u32]) -> FiniteGroup {
    let k = orders.len();
    let ns = orders.to_vec();
    let gens: Vec<Vec<u32>> = (0..k)
        .map(|i| {
            let mut v = vec![0; k];
            v[i] = 1 % ns[i];
            v
        })
        .collect();
    closure(vec![0u32; k], &gens, move |a, b| {
        a.iter().zip(b).zip(&ns).map(|((x, y), n)| (x + y) % n).collect()
    })
}

/// Square matrices over `F_p`, flattened row-major.
fn mat_mul(p: u64, k: usize, a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut c = vec![0; k * k];
    for i in 0..k {
        for j in 0..k {
            c[i * k + j] = (0..k).map(|l| a[i * k + l] * b[l * k + j]).sum::<u64>() % p;
        }
    }
    c
}

/// The matrix group over `F_p` generated by `gens` (each `k x k`, row-major).
pub fn matrix_group(p: u64, k: usize, gens: &[Vec<u64>]) -> FiniteGroup {
    let mut id = vec![0; k * k];
    for i in 0..k {
        id[i * k + i] = 1;
    }
    let gens: Vec<Vec<u64>> = gens.iter().map(|g| g.iter().map(|x| x % p).collect()).collect();
    closure(id, &gens, move |a, b| mat_mul(p, k, a, b))
}

pub fn sl23() -> FiniteGroup {
    matrix_group(3, 2, &[vec![1, 1, 0, 1], vec![1, 0, 1, 1]])
}

pub fn gl23() -> FiniteGroup {
    matrix_group(3, 2, &[vec![1, 1, 0, 1], vec![1, 0, 1, 1], vec![2, 0, 0, 1]])
}

/// Upper unitriangular `3 x 3` matrices over `F_p`; extraspecial of exponent
/// `p` for odd `p`, dihedral of order 8 for `p = 2`.
pub fn heisenberg(p: u64) -> FiniteGroup {
    matrix_group(p, 3, &[vec![1, 1, 0, 0, 1, 0, 0, 0, 1], vec![1, 0, 0, 0, 1, 1, 0, 0, 1]])
}

/// `C_{p^2} x| C_p`, the maps `x -> a x + b` on `Z/p^2` with `a = 1 mod p`.
pub fn metacyclic_p3(p: u64) -> FiniteGroup {
    let m = p * p;
    closure((1u64, 0u64), &[(1 + p, 0), (1, 1)], move |&(a, b), &(c, d)| ((a * c) % m, (a * d + b) % m))
}

/// `C_p x| C_k` acting by multiplication, for `k | p - 1`.
pub fn frobenius(p: u64, k: u64) -> FiniteGroup {
    assert!((p - 1) % k == 0, "k must divide p - 1");
    let generator = (1..p)
        .find(|&g| (1..p - 1).all(|e| pow_mod(g, e, p) != 1))
        .expect("primitive root");
    let a = pow_mod(generator, (p - 1) / k, p);
    closure((1u64, 0u64), &[(a, 0), (1, 1 % p)], move |&(a, b), &(c, d)| ((a * c) % p, (a * d + b) % p))
}

fn pow_mod(b: u64, e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    let mut b = b % m;
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        assert_eq!(cyclic(1).order(), 1);
        assert_eq!(cyclic(12).order(), 12);
        assert_eq!(dihedral(2).order(), 4);
        assert_eq!(dihedral(5).order(), 10);
        assert_eq!(dicyclic(3).order(), 12);
        assert_eq!(quaternion().order(), 8);
        assert_eq!(symmetric(5).order(), 120);
        assert_eq!(alternating(5).order(), 60);
        assert_eq!(alternating(2).order(), 1);
        assert_eq!(elementary_abelian(3, 3).order(), 27);
        assert_eq!(abelian(&[2, 4]).order(), 8);
        assert_eq!(sl23().order(), 24);
        assert_eq!(gl23().order(), 48);
        assert_eq!(heisenberg(3).order(), 27);
        assert_eq!(metacyclic_p3(3).order(), 27);
        assert_eq!(frobenius(5, 4).order(), 20);
        assert_eq!(frobenius(7, 3).order(), 21);
    }

    #[test]
    fn exponents_and_centres() {
        assert_eq!(heisenberg(3).exponent(), 3);
        assert_eq!(metacyclic_p3(3).exponent(), 9);
        assert_eq!(heisenberg(5).center().len(), 5);
        assert_eq!(metacyclic_p3(5).center().len(), 5);
        assert_eq!(quaternion().exponent(), 4);
        assert_eq!(dicyclic(3).center().len(), 2);
        assert_eq!(sl23().center().len(), 2);
        assert!(dihedral(2).is_abelian());
        assert!(!frobenius(5, 4).is_abelian());
        assert_eq!(cyclic(6).generators(), &[1]);
    }
}
