//! Linear algebra over F_p behind the abelian group B = (Z/pZ)^m.
//!
//! A group is fixed by a prime `p` and a monic invertible polynomial
//! `f(x) = x^m + a_{m-1} x^{m-1} + ... + a_0`. The automorphism `rho` of B is
//! the companion matrix of `f` and `omega` reads off the last coordinate.
//! Vectors are written in the basis `b_0, ..., b_{m-1}`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest `p^m` for which B is enumerated.
pub const MAX_B_SIZE: u64 = 1 << 20;

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn inv_mod(x: u32, p: u32) -> u32 {
    // p is prime, so x^(p-2) is the inverse.
    let mut result = 1u64;
    let mut base = (x % p) as u64;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    result as u32
}

/// Square matrix over F_p, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    p: u32,
    rows: Vec<Vec<u32>>,
}

impl Matrix {
    pub fn identity(p: u32, m: usize) -> Self {
        let rows = (0..m).map(|i| (0..m).map(|j| u32::from(i == j)).collect()).collect();
        Matrix { p, rows }
    }

    pub fn zero(p: u32, m: usize) -> Self {
        Matrix { p, rows: vec![vec![0; m]; m] }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> u32 {
        self.rows[i][j]
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn apply(&self, v: &[u32]) -> Vec<u32> {
        let p = self.p as u64;
        self.rows
            .iter()
            .map(|row| (row.iter().zip(v).map(|(&a, &b)| a as u64 * b as u64).sum::<u64>() % p) as u32)
            .collect()
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        let m = self.dim();
        let p = self.p as u64;
        let mut out = Matrix::zero(self.p, m);
        for i in 0..m {
            for j in 0..m {
                let s: u64 = (0..m).map(|k| self.rows[i][k] as u64 * other.rows[k][j] as u64).sum();
                out.rows[i][j] = (s % p) as u32;
            }
        }
        out
    }

    pub fn add_scaled(&mut self, other: &Matrix, c: u32) {
        let p = self.p as u64;
        for (r, o) in self.rows.iter_mut().zip(&other.rows) {
            for (x, &y) in r.iter_mut().zip(o) {
                *x = ((*x as u64 + c as u64 * y as u64) % p) as u32;
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.iter().all(|&x| x == 0))
    }

    /// Gauss-Jordan inverse; `None` when singular.
    pub fn inverse(&self) -> Option<Matrix> {
        let m = self.dim();
        let p = self.p;
        let mut a = self.rows.clone();
        let mut inv = Matrix::identity(p, m).rows;
        for col in 0..m {
            let pivot = (col..m).find(|&r| a[r][col] != 0)?;
            a.swap(col, pivot);
            inv.swap(col, pivot);
            let s = inv_mod(a[col][col], p);
            for j in 0..m {
                a[col][j] = (a[col][j] as u64 * s as u64 % p as u64) as u32;
                inv[col][j] = (inv[col][j] as u64 * s as u64 % p as u64) as u32;
            }
            for r in 0..m {
                if r != col && a[r][col] != 0 {
                    let f = a[r][col];
                    for j in 0..m {
                        a[r][j] = sub_mul(a[r][j], f, a[col][j], p);
                        inv[r][j] = sub_mul(inv[r][j], f, inv[col][j], p);
                    }
                }
            }
        }
        Some(Matrix { p, rows: inv })
    }
}

fn sub_mul(x: u32, f: u32, y: u32, p: u32) -> u32 {
    let p = p as u64;
    ((x as u64 + p * p - f as u64 * y as u64) % p) as u32
}

/// An element of B in coordinates over `b_0, ..., b_{m-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BVec {
    coords: Vec<u32>,
}

impl BVec {
    pub fn new(coords: Vec<u32>) -> Self {
        BVec { coords }
    }

    pub fn zero(m: usize) -> Self {
        BVec { coords: vec![0; m] }
    }

    /// The basis vector `b_i`.
    pub fn basis(m: usize, i: usize) -> Self {
        let mut coords = vec![0; m];
        coords[i] = 1;
        BVec { coords }
    }

    pub fn coords(&self) -> &[u32] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }
}

impl fmt::Display for BVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Subspace of F_p^m held as a reduced row-echelon basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    p: u32,
    m: usize,
    basis: Vec<Vec<u32>>,
}

impl Subspace {
    pub fn span(p: u32, m: usize, vectors: impl IntoIterator<Item = Vec<u32>>) -> Self {
        let mut rows: Vec<Vec<u32>> = vectors.into_iter().map(|v| v.iter().map(|x| x % p).collect()).collect();
        let mut rank = 0;
        for col in 0..m {
            let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
                continue;
            };
            rows.swap(rank, pivot);
            let s = inv_mod(rows[rank][col], p);
            for x in rows[rank].iter_mut() {
                *x = (*x as u64 * s as u64 % p as u64) as u32;
            }
            let pivot_row = rows[rank].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r != rank && row[col] != 0 {
                    let f = row[col];
                    for (x, &y) in row.iter_mut().zip(&pivot_row) {
                        *x = sub_mul(*x, f, y, p);
                    }
                }
            }
            rank += 1;
        }
        rows.truncate(rank);
        Subspace { p, m, basis: rows }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<u32>] {
        &self.basis
    }

    pub fn contains(&self, v: &BVec) -> bool {
        let p = self.p;
        let mut r: Vec<u32> = v.coords().iter().map(|x| x % p).collect();
        for row in &self.basis {
            let col = row.iter().position(|&x| x != 0).expect("echelon rows are nonzero");
            let f = r[col];
            if f != 0 {
                for (x, &y) in r.iter_mut().zip(row) {
                    *x = sub_mul(*x, f, y, p);
                }
            }
        }
        r.iter().all(|&x| x == 0)
    }

    pub fn ambient_dim(&self) -> usize {
        self.m
    }
}

/// Immutable definition of the group `G_{p,f}`.
#[derive(Clone, Debug)]
pub struct GroupSpec {
    p: u32,
    coeffs: Vec<u32>,
    rho: Matrix,
    rho_inv: Matrix,
    size: u32,
    rho_table: Vec<u32>,
    rho_inv_table: Vec<u32>,
    omega_table: Vec<u32>,
}

impl PartialEq for GroupSpec {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.coeffs == other.coeffs
    }
}

impl Eq for GroupSpec {}

impl GroupSpec {
    /// Builds `G_{p,f}` from `f = x^m + coeffs[m-1] x^{m-1} + ... + coeffs[0]`.
    pub fn new(p: u32, coeffs: &[i64]) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(Error::NonPrimeP(p as u64));
        }
        if coeffs.is_empty() {
            return Err(Error::EmptyPolynomial);
        }
        let m = coeffs.len();
        let coeffs: Vec<u32> = coeffs.iter().map(|&c| c.rem_euclid(p as i64) as u32).collect();
        if coeffs[0] == 0 {
            return Err(Error::NonInvertiblePolynomial);
        }
        let size = (p as u64).checked_pow(m as u32).filter(|&s| s <= MAX_B_SIZE);
        let Some(size) = size else {
            return Err(Error::SpecTooLarge { p, m });
        };
        let mut rho = Matrix::zero(p, m);
        for j in 0..m - 1 {
            rho.rows[j + 1][j] = 1;
        }
        for (i, &a) in coeffs.iter().enumerate() {
            rho.rows[i][m - 1] = (p - a) % p;
        }
        let rho_inv = rho.inverse().ok_or_else(|| Error::Internal("companion matrix is singular".into()))?;
        let mut spec = GroupSpec {
            p,
            coeffs,
            rho,
            rho_inv,
            size: size as u32,
            rho_table: Vec::new(),
            rho_inv_table: Vec::new(),
            omega_table: Vec::new(),
        };
        spec.rho_table = (0..spec.size).map(|i| spec.encode(&BVec::new(spec.rho.apply(spec.decode(i).coords())))).collect();
        spec.rho_inv_table =
            (0..spec.size).map(|i| spec.encode(&BVec::new(spec.rho_inv.apply(spec.decode(i).coords())))).collect();
        spec.omega_table = (0..spec.size).map(|i| i % p).collect();
        if !spec.cayley_hamilton_holds() {
            return Err(Error::Internal("f(rho) != 0".into()));
        }
        if !spec.is_faithful() {
            return Err(Error::Internal("a nontrivial rho-orbit lies in ker(omega)".into()));
        }
        Ok(spec)
    }

    /// First Grigorchuk group, `G_{2, x^2+x+1}`.
    pub fn grigorchuk() -> Self {
        Self::new(2, &[1, 1]).expect("valid spec")
    }

    /// Grigorchuk-Erschler group, `G_{2, x^2+1}`.
    pub fn grigorchuk_erschler() -> Self {
        Self::new(2, &[1, 0]).expect("valid spec")
    }

    /// Fabrykowski-Gupta group, `G_{3, x-1}`.
    pub fn fabrykowski_gupta() -> Self {
        Self::new(3, &[-1]).expect("valid spec")
    }

    /// Infinite dihedral group, `G_{2, x+1}`.
    pub fn infinite_dihedral() -> Self {
        Self::new(2, &[1]).expect("valid spec")
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn m(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn rho(&self) -> &Matrix {
        &self.rho
    }

    pub fn rho_inverse(&self) -> &Matrix {
        &self.rho_inv
    }

    /// `omega` as a row vector: `(0, ..., 0, 1)`.
    pub fn omega(&self) -> Vec<u32> {
        let mut w = vec![0; self.m()];
        w[self.m() - 1] = 1;
        w
    }

    /// Number of elements of B, `p^m`.
    pub fn b_size(&self) -> u32 {
        self.size
    }

    /// `(p, m) = (2, 1)`: the infinite dihedral group.
    pub fn is_degenerate(&self) -> bool {
        self.p == 2 && self.m() == 1
    }

    /// Packs a vector into `0..p^m`; the order of codes is lexicographic on coordinates.
    pub fn encode(&self, v: &BVec) -> u32 {
        v.coords().iter().fold(0u32, |acc, &c| acc * self.p + c % self.p)
    }

    pub fn decode(&self, mut code: u32) -> BVec {
        let m = self.m();
        let mut coords = vec![0; m];
        for i in (0..m).rev() {
            coords[i] = code % self.p;
            code /= self.p;
        }
        BVec::new(coords)
    }

    pub(crate) fn rho_code(&self, code: u32) -> u32 {
        self.rho_table[code as usize]
    }

    pub(crate) fn rho_inv_code(&self, code: u32) -> u32 {
        self.rho_inv_table[code as usize]
    }

    pub(crate) fn omega_code(&self, code: u32) -> u32 {
        self.omega_table[code as usize]
    }

    pub(crate) fn add_codes(&self, x: u32, y: u32) -> u32 {
        if self.p == 2 {
            return x ^ y;
        }
        let (mut x, mut y) = (x, y);
        let mut out = 0;
        let mut scale = 1;
        for _ in 0..self.m() {
            out += ((x % self.p + y % self.p) % self.p) * scale;
            x /= self.p;
            y /= self.p;
            scale *= self.p;
        }
        out
    }

    pub(crate) fn scale_code(&self, x: u32, k: u32) -> u32 {
        let v = self.decode(x);
        self.encode(&BVec::new(v.coords().iter().map(|&c| (c as u64 * k as u64 % self.p as u64) as u32).collect()))
    }

    pub(crate) fn neg_code(&self, x: u32) -> u32 {
        self.scale_code(x, self.p - 1)
    }

    pub fn rho_apply(&self, v: &BVec) -> BVec {
        BVec::new(self.rho.apply(v.coords()))
    }

    pub fn rho_inv_apply(&self, v: &BVec) -> BVec {
        BVec::new(self.rho_inv.apply(v.coords()))
    }

    /// The exponent of `a` in `omega(v)`.
    pub fn omega_apply(&self, v: &BVec) -> u32 {
        v.coords()[self.m() - 1] % self.p
    }

    /// `B_i = rho^i(ker omega)`, any integer `i`.
    pub fn subspace_b(&self, i: i64) -> Subspace {
        let m = self.m();
        let step = if i >= 0 { &self.rho } else { &self.rho_inv };
        let mut power = Matrix::identity(self.p, m);
        for _ in 0..i.unsigned_abs() {
            power = step.mul(&power);
        }
        Subspace::span(self.p, m, (0..m - 1).map(|j| power.apply(BVec::basis(m, j).coords())))
    }

    /// Order of `rho` as a matrix.
    pub fn rho_order(&self) -> u64 {
        let id = Matrix::identity(self.p, self.m());
        let mut power = self.rho.clone();
        let mut k = 1;
        while power != id {
            power = self.rho.mul(&power);
            k += 1;
        }
        k
    }

    fn cayley_hamilton_holds(&self) -> bool {
        let m = self.m();
        let mut acc = Matrix::zero(self.p, m);
        let mut power = Matrix::identity(self.p, m);
        for &a in &self.coeffs {
            acc.add_scaled(&power, a);
            power = self.rho.mul(&power);
        }
        acc.add_scaled(&power, 1);
        acc.is_zero()
    }

    /// No nontrivial `rho`-orbit lies inside `ker omega`, checked by walking every orbit.
    pub fn is_faithful(&self) -> bool {
        self.orbits().iter().all(|orbit| orbit[0] == 0 || orbit.iter().any(|&c| self.omega_code(c) != 0))
    }

    /// All `rho`-orbits on B as lists of codes.
    pub fn orbits(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.size as usize];
        let mut out = Vec::new();
        for start in 0..self.size {
            if seen[start as usize] {
                continue;
            }
            let mut orbit = Vec::new();
            let mut c = start;
            while !seen[c as usize] {
                seen[c as usize] = true;
                orbit.push(c);
                c = self.rho_code(c);
            }
            out.push(orbit);
        }
        out
    }

    /// Every nontrivial `rho`-orbit meets `ker omega`.
    ///
    /// The degenerate group `(2, 1)` is the infinite dihedral group and is
    /// rejected explicitly.
    pub fn is_torsion(&self) -> Result<bool> {
        if self.is_degenerate() {
            return Err(Error::DegenerateCase);
        }
        Ok(self
            .orbits()
            .iter()
            .filter(|orbit| orbit[0] != 0)
            .all(|orbit| orbit.iter().any(|&c| self.omega_code(c) == 0)))
    }

    /// Torsion via covering: some union `B_0 ∪ ... ∪ B_{r-1}` equals B.
    ///
    /// Independent of [`is_torsion`](Self::is_torsion): uses subspace
    /// membership rather than orbit walks. Cost is `p^m * ord(rho)`
    /// membership tests.
    pub fn is_torsion_by_covering(&self) -> Result<bool> {
        if self.is_degenerate() {
            return Err(Error::DegenerateCase);
        }
        let r = self.rho_order() as i64;
        let spaces: Vec<Subspace> = (0..r).map(|i| self.subspace_b(i)).collect();
        Ok((0..self.size).all(|c| {
            let v = self.decode(c);
            spaces.iter().any(|s| s.contains(&v))
        }))
    }

    /// `f(1) = 0` over F_2.
    pub fn divisible_by_x_plus_one(&self) -> bool {
        self.p == 2 && (self.coeffs.iter().sum::<u32>() + 1) % 2 == 0
    }

    /// The `b` with `rho(b) = b` and `omega(b) = 1`, when one exists.
    pub fn dihedral_witness(&self) -> Result<Option<BVec>> {
        if self.p != 2 {
            return Err(Error::WrongCharacteristic(self.p));
        }
        let m = self.m();
        // Null space of rho - I: rows of (rho - I)^T reduced, then solve.
        let mut shifted = self.rho.clone();
        for i in 0..m {
            shifted.rows[i][i] ^= 1;
        }
        let kernel = null_space(&shifted);
        let found = kernel
            .iter()
            .map(|v| BVec::new(v.clone()))
            .find(|v| self.omega_apply(v) == 1)
            .or_else(|| {
                // Combinations matter only if the eigenspace has dimension > 1,
                // which cannot happen for a companion matrix.
                None
            });
        if found.is_some() != self.divisible_by_x_plus_one() {
            return Err(Error::Internal("eigenvector search disagrees with f(1) = 0".into()));
        }
        Ok(found)
    }

    /// Parses the line-oriented spec file format (`p = ...`, `f = a0,...`).
    pub fn parse_spec_file(text: &str) -> Result<Self> {
        let mut p: Option<u32> = None;
        let mut f: Option<Vec<i64>> = None;
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: &str| Error::parse(lineno + 1, msg.to_string());
            let (key, value) = line.split_once('=').ok_or_else(|| err("expected `key = value`"))?;
            match key.trim() {
                "p" => {
                    if p.is_some() {
                        return Err(err("duplicate `p`"));
                    }
                    p = Some(value.trim().parse().map_err(|_| err("p must be a non-negative integer"))?);
                }
                "f" => {
                    if f.is_some() {
                        return Err(err("duplicate `f`"));
                    }
                    let coeffs = value
                        .split(',')
                        .map(|c| c.trim().parse::<i64>())
                        .collect::<std::result::Result<Vec<_>, _>>()
                        .map_err(|_| err("f must be a comma-separated list of integers"))?;
                    f = Some(coeffs);
                }
                other => return Err(err(&format!("unknown key `{other}`"))),
            }
        }
        let p = p.ok_or_else(|| Error::parse(0, "missing `p`"))?;
        let f = f.ok_or_else(|| Error::parse(0, "missing `f`"))?;
        GroupSpec::new(p, &f)
    }

    /// Renders the spec file that [`parse_spec_file`](Self::parse_spec_file) reads back.
    pub fn to_spec_file(&self) -> String {
        let coeffs: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        format!("p = {}\nf = {}\n", self.p, coeffs.join(","))
    }

    /// Human-readable polynomial, e.g. `x^2+x+1`.
    pub fn polynomial(&self) -> String {
        let m = self.m();
        let mut terms = vec![if m == 1 { "x".to_string() } else { format!("x^{m}") }];
        for i in (0..m).rev() {
            let c = self.coeffs[i];
            if c == 0 {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            };
            terms.push(match (c, mono.is_empty()) {
                (1, false) => mono,
                (_, true) => c.to_string(),
                _ => format!("{c}{mono}"),
            });
        }
        terms.join("+")
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GroupSpec::parse_spec_file(s)
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G_{{{},{}}}", self.p, self.polynomial())
    }
}

fn null_space(a: &Matrix) -> Vec<Vec<u32>> {
    let p = a.p;
    let m = a.dim();
    let mut rows = a.rows.clone();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..m {
        let Some(pr) = (rank..m).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pr);
        let s = inv_mod(rows[rank][col], p);
        for x in rows[rank].iter_mut() {
            *x = (*x as u64 * s as u64 % p as u64) as u32;
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[col] != 0 {
                let f = row[col];
                for (x, &y) in row.iter_mut().zip(&pivot_row) {
                    *x = sub_mul(*x, f, y, p);
                }
            }
        }
        pivots.push(col);
        rank += 1;
    }
    let free: Vec<usize> = (0..m).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![0; m];
            v[fc] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = (p - rows[r][fc]) % p;
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn companion_matrices_match_examples() {
        let ge = GroupSpec::grigorchuk_erschler();
        assert_eq!(ge.rho().rows(), &[vec![0, 1], vec![1, 0]]);
        assert_eq!(ge.omega(), vec![0, 1]);
        let grig = GroupSpec::grigorchuk();
        assert_eq!(grig.rho().rows(), &[vec![0, 1], vec![1, 1]]);
    }

    #[test]
    fn make_spec_errors() {
        assert_eq!(GroupSpec::new(2, &[0, 1]), Err(Error::NonInvertiblePolynomial));
        assert_eq!(GroupSpec::new(4, &[1]), Err(Error::NonPrimeP(4)));
        assert_eq!(GroupSpec::new(2, &[]), Err(Error::EmptyPolynomial));
        assert!(matches!(GroupSpec::new(2, &[1; 21]), Err(Error::SpecTooLarge { .. })));
    }

    #[test]
    fn rho_and_omega() {
        let ge = GroupSpec::grigorchuk_erschler();
        assert_eq!(ge.rho_apply(&BVec::new(vec![1, 0])), BVec::new(vec![0, 1]));
        assert_eq!(ge.rho_apply(&BVec::zero(2)), BVec::zero(2));
        assert_eq!(ge.omega_apply(&BVec::new(vec![1, 0])), 0);
        assert_eq!(ge.omega_apply(&BVec::new(vec![0, 1])), 1);
        assert_eq!(ge.omega_apply(&BVec::zero(2)), 0);
        let grig = GroupSpec::grigorchuk();
        assert_eq!(grig.rho_apply(&BVec::new(vec![0, 1])), BVec::new(vec![1, 1]));
    }

    #[test]
    fn rho_inverse_tables() {
        for spec in [GroupSpec::grigorchuk(), GroupSpec::fabrykowski_gupta(), GroupSpec::new(3, &[2, 0, 1]).unwrap()] {
            for c in 0..spec.b_size() {
                assert_eq!(spec.rho_inv_code(spec.rho_code(c)), c);
                let v = spec.decode(c);
                assert_eq!(spec.encode(&v), c);
                assert_eq!(spec.encode(&spec.rho_apply(&v)), spec.rho_code(c));
            }
        }
    }

    #[test]
    fn subspaces_b_i() {
        let ge = GroupSpec::grigorchuk_erschler();
        assert_eq!(ge.subspace_b(0).basis(), &[vec![1, 0]]);
        assert_eq!(ge.subspace_b(1).basis(), &[vec![0, 1]]);
        let grig = GroupSpec::grigorchuk();
        let ord = grig.rho_order() as i64;
        for i in -4..4 {
            assert_eq!(grig.subspace_b(i), grig.subspace_b(i + ord));
            assert_eq!(grig.subspace_b(i).dim(), 1);
        }
    }

    #[test]
    fn torsion_criteria() {
        assert_eq!(GroupSpec::grigorchuk().is_torsion(), Ok(true));
        assert_eq!(GroupSpec::grigorchuk_erschler().is_torsion(), Ok(false));
        assert_eq!(GroupSpec::fabrykowski_gupta().is_torsion(), Ok(false));
        assert_eq!(GroupSpec::infinite_dihedral().is_torsion(), Err(Error::DegenerateCase));
    }

    #[test]
    fn dihedral_witnesses() {
        assert_eq!(GroupSpec::grigorchuk_erschler().dihedral_witness(), Ok(Some(BVec::new(vec![1, 1]))));
        assert_eq!(GroupSpec::grigorchuk().dihedral_witness(), Ok(None));
        assert_eq!(GroupSpec::infinite_dihedral().dihedral_witness(), Ok(Some(BVec::new(vec![1]))));
        assert_eq!(GroupSpec::fabrykowski_gupta().dihedral_witness(), Err(Error::WrongCharacteristic(3)));
    }

    #[test]
    fn spec_file_round_trip() {
        let text = "# Grigorchuk-Erschler\n p= 2 \nf =1 , 0   # x^2 + 1\n";
        let spec: GroupSpec = text.parse().unwrap();
        assert_eq!(spec, GroupSpec::grigorchuk_erschler());
        assert_eq!(spec.to_spec_file().parse::<GroupSpec>().unwrap(), spec);
        assert!("p = 2\nq = 1\n".parse::<GroupSpec>().is_err());
        assert!("p = 2\n".parse::<GroupSpec>().is_err());
        assert_eq!("p=3\nf=-1".parse::<GroupSpec>().unwrap(), GroupSpec::fabrykowski_gupta());
    }

    #[test]
    fn polynomial_display() {
        assert_eq!(GroupSpec::grigorchuk().polynomial(), "x^2+x+1");
        assert_eq!(GroupSpec::grigorchuk_erschler().polynomial(), "x^2+1");
        assert_eq!(GroupSpec::fabrykowski_gupta().polynomial(), "x+2");
    }
}
