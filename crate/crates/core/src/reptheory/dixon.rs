//! Dixon–Schneider: common eigenvectors of the class multiplication matrices
//! are found modulo a prime `p = 1 mod exp(G)` and lifted to exact values
//! through the eigenvalue multiplicities of each element.

use std::sync::Arc;

use num_integer::Integer;
use num_traits::Zero;

use super::{inner_product, same_group, ClassFunction, RepError};
use crate::exactnum::is_prime;
use crate::groups::FiniteGroup;
use crate::limits::Limits;
use crate::{Cyclotomic, Rational};

/// The irreducible characters of a group.
#[derive(Debug, Clone)]
pub struct CharacterTable {
    group: Arc<FiniteGroup>,
    characters: Vec<ClassFunction>,
}

impl CharacterTable {
    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    /// Irreducible characters, trivial first, then by increasing degree.
    pub fn characters(&self) -> &[ClassFunction] {
        &self.characters
    }

    pub fn len(&self) -> usize {
        self.characters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.characters.is_empty()
    }

    pub fn degrees(&self) -> Vec<u64> {
        self.characters.iter().map(|c| c.degree().expect("irreducible degree")).collect()
    }

    /// `<chi, psi_i>` for every irreducible `psi_i`.
    pub fn decompose(&self, chi: &ClassFunction) -> Result<Vec<Cyclotomic>, RepError> {
        self.characters.iter().map(|psi| inner_product(chi, psi)).collect()
    }

    /// Non-negative integer multiplicities, or `None` if `chi` is not a
    /// character.
    pub fn multiplicities(&self, chi: &ClassFunction) -> Result<Option<Vec<u64>>, RepError> {
        let ms = self.decompose(chi)?;
        Ok(ms
            .iter()
            .map(|m| m.as_integer().and_then(|k| u64::try_from(k).ok()))
            .collect())
    }

    /// The constituents of `chi` as `(index, multiplicity)` pairs.
    pub fn constituents(&self, chi: &ClassFunction) -> Result<Vec<(usize, u64)>, RepError> {
        let ms = self.multiplicities(chi)?.ok_or(RepError::NotCharacter)?;
        Ok(ms.into_iter().enumerate().filter(|&(_, m)| m > 0).collect())
    }
}

struct Fp(u64);

impl Fp {
    fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.0
    }

    fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.0
    }

    fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.0 - b) % self.0
    }

    fn pow(&self, b: u64, e: u64) -> u64 {
        let (mut acc, mut b, mut e) = (1 % self.0, b % self.0, e);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, b);
            }
            b = self.mul(b, b);
            e >>= 1;
        }
        acc
    }

    fn inv(&self, a: u64) -> u64 {
        debug_assert!(a % self.0 != 0);
        self.pow(a, self.0 - 2)
    }
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn primitive_root(f: &Fp) -> u64 {
    let p = f.0;
    let qs = prime_factors(p - 1);
    (2..p).find(|&g| qs.iter().all(|&q| f.pow(g, (p - 1) / q) != 1)).unwrap_or(1)
}

/// Nullspace of a `rows x cols` matrix over `F_p`, as column vectors.
fn nullspace(f: &Fp, mut m: Vec<Vec<u64>>, cols: usize) -> Vec<Vec<u64>> {
    let rows = m.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(pr) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, pr);
        let inv = f.inv(m[r][c]);
        for x in m[r].iter_mut() {
            *x = f.mul(*x, inv);
        }
        for i in 0..rows {
            if i != r && m[i][c] != 0 {
                let factor = m[i][c];
                for j in 0..cols {
                    let v = f.mul(factor, m[r][j]);
                    m[i][j] = f.sub(m[i][j], v);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![0; cols];
            v[fc] = 1;
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = f.sub(0, m[i][fc]);
            }
            v
        })
        .collect()
}

/// Characteristic polynomial via Hessenberg reduction, lowest degree first.
fn charpoly(f: &Fp, a: &[Vec<u64>]) -> Vec<u64> {
    let n = a.len();
    let mut h = a.to_vec();
    for m in 1..n.saturating_sub(1) {
        let Some(i) = (m..n).find(|&i| h[i][m - 1] != 0) else {
            continue;
        };
        if i != m {
            h.swap(i, m);
            for row in h.iter_mut() {
                row.swap(i, m);
            }
        }
        let t = f.inv(h[m][m - 1]);
        for j in m + 1..n {
            let u = f.mul(h[j][m - 1], t);
            if u == 0 {
                continue;
            }
            for c in 0..n {
                let v = f.mul(u, h[m][c]);
                h[j][c] = f.sub(h[j][c], v);
            }
            for row in h.iter_mut() {
                let v = f.mul(u, row[j]);
                row[m] = f.add(row[m], v);
            }
        }
    }
    // p_m = (x - h_mm) p_{m-1} - sum_{i<m} h_im (prod_{j=i+1..m} h_{j,j-1}) p_{i-1}
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for m in 0..n {
        let prev = &polys[m];
        let mut next = vec![0; m + 2];
        for (d, &c) in prev.iter().enumerate() {
            next[d + 1] = f.add(next[d + 1], c);
            next[d] = f.sub(next[d], f.mul(h[m][m], c));
        }
        let mut t = 1;
        for i in (0..m).rev() {
            t = f.mul(t, h[i + 1][i]);
            let coef = f.mul(h[i][m], t);
            if coef == 0 {
                continue;
            }
            for (d, &c) in polys[i].iter().enumerate() {
                next[d] = f.sub(next[d], f.mul(coef, c));
            }
        }
        polys.push(next);
    }
    polys.pop().unwrap()
}

fn eval(f: &Fp, poly: &[u64], x: u64) -> u64 {
    poly.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c))
}

/// A subspace of `F_p^k` given by column basis vectors in reduced form:
/// `basis[c][pivots[r]] = delta_{rc}`.
struct Space {
    basis: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl Space {
    fn from_vectors(f: &Fp, vectors: Vec<Vec<u64>>) -> Space {
        // row-reduce the vectors (as rows of a matrix)
        let mut m = vectors;
        let cols = m.first().map_or(0, Vec::len);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            let Some(pr) = (r..m.len()).find(|&i| m[i][c] != 0) else {
                continue;
            };
            m.swap(r, pr);
            let inv = f.inv(m[r][c]);
            for x in m[r].iter_mut() {
                *x = f.mul(*x, inv);
            }
            for i in 0..m.len() {
                if i != r && m[i][c] != 0 {
                    let factor = m[i][c];
                    for j in 0..cols {
                        let v = f.mul(factor, m[r][j]);
                        m[i][j] = f.sub(m[i][j], v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        m.truncate(r);
        Space { basis: m, pivots }
    }

    fn dim(&self) -> usize {
        self.basis.len()
    }
}

fn order_limit_error(order: usize, limits: &Limits) -> RepError {
    RepError::OrderBound { order, bound: limits.max_table_order }
}

/// Computes all irreducible characters of `group`.
pub fn character_table(group: &Arc<FiniteGroup>, limits: &Limits) -> Result<CharacterTable, RepError> {
    let n = group.order();
    if n > limits.max_table_order {
        return Err(order_limit_error(n, limits));
    }
    let cc = group.conjugacy_classes();
    let k = cc.len();
    let e = group.exponent();
    let mut p = e + 1;
    while !(is_prime(p) && p * p > 4 * n as u64) {
        p += e;
    }
    let f = Fp(p);

    // a[i][j][l] = #{(x, y) in C_i x C_j : x y = z_l}
    let mut a = vec![vec![vec![0u64; k]; k]; k];
    for l in 0..k {
        let z = cc.representative(l);
        for x in group.elements() {
            let y = group.mul(group.inv(x), z);
            a[cc.class_of(x)][cc.class_of(y)][l] += 1;
        }
    }
    let mats: Vec<Vec<Vec<u64>>> = a
        .iter()
        .map(|mi| mi.iter().map(|row| row.iter().map(|&v| v % p).collect()).collect())
        .collect();

    let id = cc.identity_class();
    let full: Vec<Vec<u64>> = (0..k).map(|i| (0..k).map(|j| u64::from(i == j)).collect()).collect();
    let mut work: Vec<(Space, usize)> = vec![(Space::from_vectors(&f, full), 0)];
    let mut lines: Vec<Vec<u64>> = Vec::new();
    while let Some((space, start)) = work.pop() {
        if space.dim() == 1 {
            lines.push(space.basis[0].clone());
            continue;
        }
        let mut split = false;
        for i in start..k {
            if i == id {
                continue;
            }
            let m = &mats[i];
            let d = space.dim();
            // image of each basis vector, read off in basis coordinates
            let images: Vec<Vec<u64>> = space
                .basis
                .iter()
                .map(|v| (0..k).map(|r| m[r].iter().zip(v).fold(0, |acc, (&x, &y)| f.add(acc, f.mul(x, y)))).collect())
                .collect();
            // restricted[r][c] = coordinate r of image of basis vector c
            let restricted: Vec<Vec<u64>> = (0..d)
                .map(|r| (0..d).map(|c| images[c][space.pivots[r]]).collect())
                .collect();
            let poly = charpoly(&f, &restricted);
            let roots: Vec<u64> = (0..p).filter(|&x| eval(&f, &poly, x) == 0).collect();
            if roots.len() <= 1 {
                continue;
            }
            let mut total = 0;
            let mut parts = Vec::new();
            for lambda in roots {
                let shifted: Vec<Vec<u64>> = (0..d)
                    .map(|r| (0..d).map(|c| if r == c { f.sub(restricted[r][c], lambda) } else { restricted[r][c] }).collect())
                    .collect();
                let null = nullspace(&f, shifted, d);
                total += null.len();
                let vectors: Vec<Vec<u64>> = null
                    .iter()
                    .map(|coords| {
                        (0..k)
                            .map(|r| {
                                coords
                                    .iter()
                                    .zip(&space.basis)
                                    .fold(0, |acc, (&c, b)| f.add(acc, f.mul(c, b[r])))
                            })
                            .collect()
                    })
                    .collect();
                parts.push(Space::from_vectors(&f, vectors));
            }
            if total != d {
                return Err(RepError::TableFailed("class matrix not diagonalizable modulo p".into()));
            }
            for part in parts {
                work.push((part, i + 1));
            }
            split = true;
            break;
        }
        if !split {
            return Err(RepError::TableFailed("common eigenspace of dimension > 1".into()));
        }
    }
    if lines.len() != k {
        return Err(RepError::TableFailed(format!("found {} characters for {k} classes", lines.len())));
    }

    let z = f.pow(primitive_root(&f), (p - 1) / e);
    let sizes = cc.sizes();
    let max_degree = (n as f64).sqrt().floor() as u64 + 1;
    let mut characters = Vec::with_capacity(k);
    for mut w in lines {
        if w[id] == 0 {
            return Err(RepError::TableFailed("eigenvector vanishes at the identity".into()));
        }
        let s = f.inv(w[id]);
        for x in w.iter_mut() {
            *x = f.mul(*x, s);
        }
        let mut norm = 0;
        for l in 0..k {
            let term = f.mul(f.mul(w[l], w[cc.inverse_class(l)]), f.inv(sizes[l] as u64 % p));
            norm = f.add(norm, term);
        }
        let target = f.mul(n as u64 % p, f.inv(norm));
        let degree = (1..=max_degree)
            .find(|&d| f.mul(d, d) == target && (n as u64) % d == 0)
            .ok_or_else(|| RepError::TableFailed("no admissible degree".into()))?;
        let modp: Vec<u64> = (0..k).map(|l| f.mul(f.mul(degree, w[l]), f.inv(sizes[l] as u64 % p))).collect();
        let mut values = Vec::with_capacity(k);
        for l in 0..k {
            let g = cc.representative(l);
            let o = group.element_order(g) as u64;
            let zo = f.pow(z, e / o);
            let powers: Vec<u64> = (0..o).map(|j| modp[cc.class_of(group.pow(g, j))]).collect();
            let inv_o = f.inv(o % p);
            let mut terms = Vec::new();
            let mut count = 0;
            for r in 0..o {
                let mut m = 0;
                for (j, &v) in powers.iter().enumerate() {
                    let root = f.pow(zo, (o - (r * j as u64) % o) % o);
                    m = f.add(m, f.mul(v, root));
                }
                let m = f.mul(m, inv_o);
                if m > degree {
                    return Err(RepError::TableFailed("eigenvalue multiplicity out of range".into()));
                }
                count += m;
                if m > 0 {
                    terms.push((r, Rational::from_integer((m as i64).into())));
                }
            }
            if count != degree {
                return Err(RepError::TableFailed("eigenvalue multiplicities do not sum to the degree".into()));
            }
            values.push(Cyclotomic::from_exponents(o, &terms));
        }
        characters.push(ClassFunction { group: group.clone(), values });
    }
    let trivial = ClassFunction::trivial(group);
    characters.sort_by_key(|c| (c.degree(), *c != trivial));
    let degrees: Vec<u64> = characters.iter().map(|c| c.degree().unwrap_or(0)).collect();
    if degrees.iter().map(|d| d * d).sum::<u64>() != n as u64 || degrees.iter().any(|&d| d == 0 || n as u64 % d != 0) {
        return Err(RepError::TableFailed("degrees inconsistent with the group order".into()));
    }
    Ok(CharacterTable { group: group.clone(), characters })
}

/// gcd of the degrees of the nontrivial irreducible characters.
pub fn irreducible_dims_gcd(group: &Arc<FiniteGroup>, limits: &Limits) -> Result<u64, RepError> {
    if group.order() == 1 {
        return Err(RepError::TrivialGroup);
    }
    let table = character_table(group, limits)?;
    Ok(table.degrees()[1..].iter().fold(0u64, |acc, &d| acc.gcd(&d)))
}

impl CharacterTable {
    /// Checks that this table belongs to `group`.
    pub fn is_for(&self, group: &Arc<FiniteGroup>) -> bool {
        same_group(&self.group, group)
    }

    /// Exact row orthonormality.
    pub fn is_orthonormal(&self) -> bool {
        self.characters.iter().enumerate().all(|(i, a)| {
            self.characters.iter().enumerate().skip(i).all(|(j, b)| {
                let ip = inner_product(a, b).expect("same group");
                if i == j { ip == Cyclotomic::from_int(1) } else { ip.is_zero() }
            })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::library;

    fn degrees(g: FiniteGroup) -> Vec<u64> {
        let t = character_table(&Arc::new(g), &Limits::default()).unwrap();
        assert!(t.is_orthonormal());
        t.degrees()
    }

    #[test]
    fn degree_lists() {
        assert_eq!(degrees(library::cyclic(3)), vec![1, 1, 1]);
        assert_eq!(degrees(library::symmetric(3)), vec![1, 1, 2]);
        assert_eq!(degrees(library::quaternion()), vec![1, 1, 1, 1, 2]);
        assert_eq!(degrees(library::symmetric(4)), vec![1, 1, 2, 3, 3]);
        assert_eq!(degrees(library::alternating(5)), vec![1, 3, 3, 4, 5]);
        assert_eq!(degrees(library::sl23()), vec![1, 1, 1, 2, 2, 2, 3]);
        assert_eq!(degrees(library::heisenberg(3)).iter().filter(|&&d| d == 3).count(), 2);
    }

    #[test]
    fn cyclic_values_are_roots_of_unity() {
        let g = Arc::new(library::cyclic(3));
        let t = character_table(&g, &Limits::default()).unwrap();
        for chi in t.characters() {
            for v in chi.values() {
                assert_eq!(v.pow(3), Cyclotomic::from_int(1));
            }
        }
        assert_eq!(t.characters()[0], ClassFunction::trivial(&g));
    }

    #[test]
    fn gcd_and_bounds() {
        let lim = Limits::default();
        assert_eq!(irreducible_dims_gcd(&Arc::new(library::symmetric(3)), &lim).unwrap(), 1);
        assert_eq!(irreducible_dims_gcd(&Arc::new(library::cyclic(5)), &lim).unwrap(), 1);
        assert_eq!(irreducible_dims_gcd(&Arc::new(library::cyclic(1)), &lim).unwrap_err(), RepError::TrivialGroup);
        let tight = Limits { max_table_order: 10, ..lim };
        assert!(matches!(
            character_table(&Arc::new(library::symmetric(4)), &tight),
            Err(RepError::OrderBound { order: 24, bound: 10 })
        ));
    }

    #[test]
    fn charpoly_of_companion() {
        let f = Fp(7);
        // x^2 - 3x + 2 has roots 1 and 2
        let a = vec![vec![0, 5], vec![1, 3]];
        let poly = charpoly(&f, &a);
        assert_eq!(poly, vec![2, 4, 1]);
        assert_eq!(eval(&f, &poly, 1), 0);
        assert_eq!(eval(&f, &poly, 2), 0);
    }
}
