use std::collections::VecDeque;

use num_bigint::BigUint;

use super::LevelPerm;
use crate::algebra::inv_mod;
use crate::error::{Error, Result};

/// One layer of the normal series: the vertices `(level, index)` whose
/// rotation labels form the layer's coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LayerSpec {
    pub columns: Vec<(usize, u32)>,
}

#[derive(Clone, Debug)]
struct Entry {
    layer: usize,
    pivot: usize,
    labels: Vec<u32>,
    /// `t, t^2, ..., t^{p-1}`
    powers: Vec<LevelPerm>,
    support: Vec<u64>,
}

/// A subgroup of the iterated wreath product `C_p ≀ ... ≀ C_p` acting on level `n`,
/// held as an induced polycyclic sequence along a normal series with
/// elementary abelian factors.
///
/// Entries are kept in echelon form per layer: each has a pivot column whose
/// label is 1, and no two entries of a layer share a pivot. Every element
/// of the subgroup is a unique product of entry powers, so the order is
/// `p^{#entries}` and membership is sifting.
#[derive(Clone, Debug)]
pub struct PermChain {
    p: u32,
    n: usize,
    /// All elements fix every vertex of this level.
    base_level: usize,
    layers: Vec<LayerSpec>,
    generators: Vec<LevelPerm>,
    entries: Vec<Entry>,
    slots: Vec<Vec<Option<usize>>>,
}

/// Line-oriented summary of a chain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainSummary {
    pub p: u32,
    pub n: usize,
    pub layer_ranks: Vec<usize>,
    pub generators: usize,
    pub order: BigUint,
}

impl ChainSummary {
    /// `key=value` records, one per layer plus a total.
    pub fn to_records(&self, name: &str) -> Vec<String> {
        let mut out: Vec<String> = self
            .layer_ranks
            .iter()
            .enumerate()
            .map(|(i, r)| format!("chain={name} n={} layer={i} order={}^{r}", self.n, self.p))
            .collect();
        out.push(format!(
            "chain={name} n={} generators={} entries={} order={}",
            self.n,
            self.generators,
            self.layer_ranks.iter().sum::<usize>(),
            self.order
        ));
        out
    }
}

impl PermChain {
    /// Level-stabilizer layering: layer `k` holds the vertices of level `k`.
    pub fn level_layers(p: u32, n: usize) -> Vec<LayerSpec> {
        (0..n).map(|k| LayerSpec { columns: (0..p.pow(k as u32)).map(|i| (k, i)).collect() }).collect()
    }

    pub fn empty(p: u32, n: usize) -> Self {
        Self::with_layers(p, n, 0, Self::level_layers(p, n))
    }

    pub(crate) fn with_layers(p: u32, n: usize, base_level: usize, layers: Vec<LayerSpec>) -> Self {
        let slots = layers.iter().map(|l| vec![None; l.columns.len()]).collect();
        PermChain { p, n, base_level, layers, generators: Vec::new(), entries: Vec::new(), slots }
    }

    /// `⟨gens⟩`, or its normal closure under `ambient` when given.
    pub fn generate(p: u32, n: usize, gens: &[LevelPerm], ambient: Option<&[LevelPerm]>) -> Result<Self> {
        let mut chain = Self::empty(p, n);
        chain.extend(gens, ambient.unwrap_or(gens))?;
        Ok(chain)
    }

    /// Adds `gens` and closes the table under conjugation by `normalizers`.
    ///
    /// The result is the closure of `⟨old entries, gens⟩` under the
    /// normalizers, which must preserve every term of the series. Closure
    /// holds once, for every entry `t`, the power `t^p`, the conjugates `t^g`
    /// and the commutators with entries of the same layer all sift to the
    /// identity: by downward induction each tail of the table is then a
    /// subgroup normalized by the normalizers, and each layer adds an
    /// elementary abelian factor on top of the tail below it.
    pub(crate) fn extend(&mut self, gens: &[LevelPerm], normalizers: &[LevelPerm]) -> Result<()> {
        for g in gens.iter().chain(normalizers) {
            self.check(g)?;
            if !self.fixes_base(g) {
                return Err(Error::Internal("generator moves a base vertex".into()));
            }
        }
        let inverses: Vec<LevelPerm> = normalizers.iter().map(LevelPerm::inverse).collect();
        self.generators.extend(gens.iter().cloned());
        let mut queue: VecDeque<(LevelPerm, usize)> = gens.iter().map(|g| (g.clone(), 0)).collect();
        // Entries already present must be closed under the new normalizers too.
        for e in &self.entries {
            for (g, gi) in normalizers.iter().zip(&inverses) {
                queue.push_back((gi.compose(&e.powers[0]).compose(g), e.layer));
            }
        }
        let last = self.layers.len().saturating_sub(1);
        let last_abelian = self.layers.last().is_some_and(|l| l.columns.iter().all(|&(k, _)| k + 1 == self.n));
        let p = self.p as usize;
        while let Some((g, start)) = queue.pop_front() {
            let (residual, hit) = self.sift(g, start);
            let Some((layer, labels)) = hit else { continue };
            let t = self.insert(residual, layer, labels);
            let new = &self.entries[t];
            let tp = new.powers[p - 2].compose(&new.powers[0]);
            if !tp.is_identity() {
                queue.push_back((tp, layer + 1));
            }
            for (g, gi) in normalizers.iter().zip(&inverses) {
                queue.push_back((gi.compose(&new.powers[0]).compose(g), layer));
            }
            if layer == last && last_abelian {
                continue;
            }
            for s in 0..self.entries.len() {
                let other = &self.entries[s];
                if s == t || other.layer != layer || disjoint(&other.support, &new.support) {
                    continue;
                }
                let c = new.powers[p - 2].compose(&other.powers[p - 2]).compose(&new.powers[0]).compose(&other.powers[0]);
                if !c.is_identity() {
                    queue.push_back((c, layer + 1));
                }
            }
        }
        Ok(())
    }

    fn check(&self, g: &LevelPerm) -> Result<()> {
        if g.n() != self.n || g.p() != self.p {
            return Err(Error::LevelMismatch { expected: self.n, got: g.n() });
        }
        Ok(())
    }

    fn fixes_base(&self, g: &LevelPerm) -> bool {
        self.base_level == 0 || g.restrict(self.base_level).is_identity()
    }

    fn layer_labels(&self, g: &LevelPerm, layer: usize) -> Vec<u32> {
        self.layers[layer].columns.iter().map(|&(k, i)| g.label(k, i as usize)).collect()
    }

    /// Sifts `g` from layer `start`; returns the residual and, if it is not
    /// the identity, the layer and labels of the first empty slot it reached.
    fn sift(&self, mut g: LevelPerm, start: usize) -> (LevelPerm, Option<(usize, Vec<u32>)>) {
        let p = self.p;
        for layer in start..self.layers.len() {
            let mut labels = self.layer_labels(&g, layer);
            let mut col = 0;
            while col < labels.len() {
                let e = labels[col];
                if e == 0 {
                    col += 1;
                    continue;
                }
                let Some(idx) = self.slots[layer][col] else {
                    return (g, Some((layer, labels)));
                };
                let entry = &self.entries[idx];
                // t^{-e} g
                g = entry.powers[(p - e - 1) as usize].compose(&g);
                for (x, &y) in labels.iter_mut().zip(&entry.labels) {
                    *x = (*x + (p - e) * y) % p;
                }
                col += 1;
            }
        }
        (g, None)
    }

    fn insert(&mut self, residual: LevelPerm, layer: usize, labels: Vec<u32>) -> usize {
        let p = self.p;
        let pivot = labels.iter().position(|&x| x != 0).expect("nonzero labels");
        let k = inv_mod(labels[pivot], p);
        let mut t = LevelPerm::from_images_unchecked(p, self.n, (0..residual.images().len() as u32).collect());
        for _ in 0..k {
            t = t.compose(&residual);
        }
        let labels: Vec<u32> = labels.iter().map(|&x| (x as u64 * k as u64 % p as u64) as u32).collect();
        let mut powers = vec![t.clone()];
        for _ in 2..p {
            let next = powers.last().expect("nonempty").compose(&t);
            powers.push(next);
        }
        let support = support_bits(&t);
        self.entries.push(Entry { layer, pivot, labels, powers, support });
        let idx = self.entries.len() - 1;
        self.slots[layer][pivot] = Some(idx);
        idx
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[LevelPerm] {
        &self.generators
    }

    pub fn layers(&self) -> &[LayerSpec] {
        &self.layers
    }

    /// Number of entries, i.e. `log_p` of the order.
    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn order(&self) -> BigUint {
        BigUint::from(self.p).pow(self.entries.len() as u32)
    }

    /// The sequence elements, in insertion order.
    pub fn entries(&self) -> Vec<LevelPerm> {
        self.entries.iter().map(|e| e.powers[0].clone()).collect()
    }

    /// Entries living in layers `>= layer`; together they generate the
    /// intersection with the corresponding term of the series.
    pub fn entries_from_layer(&self, layer: usize) -> Vec<LevelPerm> {
        self.entries.iter().filter(|e| e.layer >= layer).map(|e| e.powers[0].clone()).collect()
    }

    pub fn layer_ranks(&self) -> Vec<usize> {
        let mut r = vec![0; self.layers.len()];
        for e in &self.entries {
            r[e.layer] += 1;
        }
        r
    }

    pub fn contains(&self, g: &LevelPerm) -> Result<bool> {
        self.check(g)?;
        if !self.fixes_base(g) {
            return Ok(false);
        }
        Ok(self.sift(g.clone(), 0).1.is_none())
    }

    /// Restriction to the entries of layers `>= layer`, as a chain on the same series.
    pub(crate) fn tail(&self, layer: usize) -> PermChain {
        let mut out = Self::with_layers(self.p, self.n, self.base_level, self.layers.clone());
        for e in self.entries.iter().filter(|e| e.layer >= layer) {
            out.entries.push(e.clone());
            let idx = out.entries.len() - 1;
            out.slots[e.layer][e.pivot] = Some(idx);
        }
        out.generators = out.entries();
        out
    }

    pub fn summary(&self) -> ChainSummary {
        ChainSummary {
            p: self.p,
            n: self.n,
            layer_ranks: self.layer_ranks(),
            generators: self.generators.len(),
            order: self.order(),
        }
    }
}

fn support_bits(g: &LevelPerm) -> Vec<u64> {
    let mut bits = vec![0u64; g.images().len().div_ceil(64)];
    for (i, &x) in g.images().iter().enumerate() {
        if i as u32 != x {
            bits[i / 64] |= 1 << (i % 64);
        }
    }
    bits
}

fn disjoint(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x & y == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(p: u32, n: usize, v: &[u32]) -> LevelPerm {
        // Rotation of the children of v, lifted to level n.
        let k = v.len();
        let sub = p.pow((n - k - 1) as u32);
        let base: u32 = v.iter().fold(0, |acc, &d| acc * p + d) * p * sub;
        let size = p.pow(n as u32);
        let images = (0..size)
            .map(|i| {
                if i >= base && i < base + p * sub {
                    let off = i - base;
                    base + ((off / sub + 1) % p) * sub + off % sub
                } else {
                    i
                }
            })
            .collect();
        LevelPerm::from_images(p, n, images).unwrap()
    }

    #[test]
    fn whole_wreath_product() {
        for (p, n) in [(2u32, 3usize), (3, 2), (2, 4)] {
            let gens: Vec<LevelPerm> = (0..n)
                .flat_map(|k| (0..p.pow(k as u32)).map(move |i| (k, i)))
                .map(|(k, i)| {
                    let mut v = vec![0; k];
                    crate::elements::index_to_digits(i, p, &mut v);
                    cycle(p, n, &v)
                })
                .collect();
            let chain = PermChain::generate(p, n, &gens, None).unwrap();
            let expected = (p.pow(n as u32) - 1) / (p - 1);
            assert_eq!(chain.rank(), expected as usize);
        }
    }

    #[test]
    fn cyclic_subgroup() {
        let g = cycle(2, 3, &[]);
        let chain = PermChain::generate(2, 3, &[g.clone()], None).unwrap();
        assert_eq!(chain.order(), BigUint::from(2u32));
        assert!(chain.contains(&g).unwrap());
        assert!(!chain.contains(&cycle(2, 3, &[0])).unwrap());
        assert!(chain.contains(&LevelPerm::identity(2, 3).unwrap()).unwrap());
        let empty = PermChain::empty(2, 3);
        assert_eq!(empty.order(), BigUint::from(1u32));
    }

    #[test]
    fn normal_closure_of_leaf_rotation() {
        let root = cycle(2, 2, &[]);
        let leaf = cycle(2, 2, &[0]);
        let plain = PermChain::generate(2, 2, &[leaf.clone()], None).unwrap();
        assert_eq!(plain.rank(), 1);
        let closed = PermChain::generate(2, 2, &[leaf], Some(&[root])).unwrap();
        assert_eq!(closed.rank(), 2);
    }
}
