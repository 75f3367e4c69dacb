//! Finite level quotients `π_n(G) ≤ Sym(X^n)`.
//!
//! Every `π_n(G)` sits inside the iterated wreath product of cyclic groups of
//! order `p`, a `p`-group with an obvious normal series (the level
//! stabilizers) whose factors are elementary abelian. Subgroups are therefore
//! held as polycyclic tables along that series instead of base-and-strong-
//! generator chains: order, membership and normal closure reduce to linear
//! algebra over F_p, one layer at a time.

mod chain;
mod checks;

use std::fmt;

pub use chain::{ChainSummary, LayerSpec, PermChain};
pub use checks::{
    branch_pair_check, chain_from, derived_chain, density_check, member, rigid_stab_level, rigid_stab_report,
    stab_in_derived_check,
    BranchReport, DensityReport, RigidReport, StabDerivedReport, SubgroupDesc,
};

use crate::elements::{digits_to_index, index_to_digits, Element};
use crate::error::{Error, Result};

/// Largest number of level points handled.
pub const MAX_POINTS: u128 = 1 << 20;

pub(crate) fn level_size(p: u32, n: usize) -> Result<usize> {
    let points = (p as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if points > MAX_POINTS {
        return Err(Error::LevelTooLarge { n, points });
    }
    Ok(points as usize)
}

/// A permutation of the `p^n` vertices of level `n`, indexed so that the
/// first letter of a vertex is its most significant digit.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LevelPerm {
    p: u32,
    n: usize,
    images: Vec<u32>,
}

impl fmt::Debug for LevelPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LevelPerm(p={}, n={}, {:?})", self.p, self.n, self.images)
    }
}

impl LevelPerm {
    pub fn identity(p: u32, n: usize) -> Result<Self> {
        let size = level_size(p, n)?;
        Ok(LevelPerm { p, n, images: (0..size as u32).collect() })
    }

    /// Wraps an image array, checking that it is a permutation of the right size.
    pub fn from_images(p: u32, n: usize, images: Vec<u32>) -> Result<Self> {
        let size = level_size(p, n)?;
        let mut seen = vec![false; size];
        if images.len() != size || !images.iter().all(|&i| (i as usize) < size && !std::mem::replace(&mut seen[i as usize], true)) {
            return Err(Error::Internal("image array is not a permutation".into()));
        }
        Ok(LevelPerm { p, n, images })
    }

    pub(crate) fn from_images_unchecked(p: u32, n: usize, images: Vec<u32>) -> Self {
        LevelPerm { p, n, images }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn apply(&self, v: u32) -> u32 {
        self.images[v as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// `(self * other)[v] = self[other[v]]`.
    pub fn compose(&self, other: &LevelPerm) -> LevelPerm {
        debug_assert_eq!(self.n, other.n);
        LevelPerm { p: self.p, n: self.n, images: other.images.iter().map(|&v| self.images[v as usize]).collect() }
    }

    pub fn inverse(&self) -> LevelPerm {
        let mut inv = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        LevelPerm { p: self.p, n: self.n, images: inv }
    }

    /// `self^g = g^{-1} self g`.
    pub fn conj(&self, g: &LevelPerm) -> LevelPerm {
        g.inverse().compose(self).compose(g)
    }

    pub fn commutator(&self, g: &LevelPerm) -> LevelPerm {
        self.inverse().compose(&g.inverse()).compose(self).compose(g)
    }

    pub fn pow(&self, k: u64) -> LevelPerm {
        let mut acc = LevelPerm { p: self.p, n: self.n, images: (0..self.images.len() as u32).collect() };
        for _ in 0..k {
            acc = acc.compose(self);
        }
        acc
    }

    /// The induced permutation of level `k <= n`.
    pub fn restrict(&self, k: usize) -> LevelPerm {
        assert!(k <= self.n);
        let shift = (self.p as usize).pow((self.n - k) as u32);
        let size = (self.p as usize).pow(k as u32);
        LevelPerm { p: self.p, n: k, images: (0..size).map(|v| self.images[v * shift] / shift as u32).collect() }
    }

    /// Rotation label of vertex `i` of level `k < n`: the amount by which the
    /// permutation turns the children of `i`, assuming it fixes level `k`.
    pub(crate) fn label(&self, k: usize, i: usize) -> u32 {
        let below = (self.p as usize).pow((self.n - k - 1) as u32);
        let child0 = i * self.p as usize * below;
        (self.images[child0] / below as u32) % self.p
    }

    /// Lifts a permutation of the subtree below a level-`k` vertex `v` to the
    /// whole level, acting trivially elsewhere.
    pub fn embed_at(&self, p: u32, total_n: usize, v: &[u32]) -> Result<LevelPerm> {
        if v.len() + self.n != total_n || self.p != p {
            return Err(Error::LevelMismatch { expected: total_n, got: v.len() + self.n });
        }
        let mut out = LevelPerm::identity(p, total_n)?;
        let offset = digits_to_index(v, p) as usize * self.images.len();
        for (i, &x) in self.images.iter().enumerate() {
            out.images[offset + i] = offset as u32 + x;
        }
        Ok(out)
    }

    /// Permutation induced on the subtree below `v`, when `v` is fixed.
    pub fn project_at(&self, v: &[u32]) -> Option<LevelPerm> {
        let k = v.len();
        let size = (self.p as usize).pow((self.n - k) as u32);
        let offset = digits_to_index(v, self.p) as usize * size;
        let mut images = Vec::with_capacity(size);
        for i in 0..size {
            let x = self.images[offset + i] as usize;
            if x < offset || x >= offset + size {
                return None;
            }
            images.push((x - offset) as u32);
        }
        Some(LevelPerm { p: self.p, n: self.n - k, images })
    }
}

/// Permutation induced by `x` on level `n`.
pub fn level_perm(x: &Element, n: usize) -> Result<LevelPerm> {
    let p = x.group().p();
    let size = level_size(p, n)?;
    let mut images: Vec<u32> = (0..size as u32).collect();
    for &l in x.letters().iter().rev() {
        let lp = x.group().letter_perm(l, n);
        for v in images.iter_mut() {
            *v = lp[*v as usize];
        }
    }
    Ok(LevelPerm { p, n, images })
}

/// Vertex word of a level index.
pub fn vertex_of(p: u32, n: usize, idx: u32) -> Vec<u32> {
    let mut d = vec![0; n];
    index_to_digits(idx, p, &mut d);
    d
}
