//! Automorphisms of the tree given by finite systems of recursion equations
//! `S = σ^{r_S} (w_{S,0} S_{j_0}, ..., w_{S,p-1} S_{j_{p-1}})`, where the
//! `w` are group elements. Such systems describe automorphisms outside the
//! group, like the conjugator between `H(q)` and `G`.

use std::collections::HashMap;
use std::sync::Arc;

use crate::elements::{Element, Group, Letter};
use crate::error::{Error, Result};
use crate::perm::{level_perm, LevelPerm};

/// One equation: root rotation and, per child, a word followed by a symbol.
#[derive(Clone, Debug)]
pub struct RecEquation {
    pub root: u32,
    pub sections: Vec<(Element, usize)>,
}

#[derive(Clone, Debug)]
pub struct RecSystem {
    group: Group,
    names: Vec<String>,
    equations: Vec<RecEquation>,
    root_symbol: usize,
}

impl RecSystem {
    pub fn new(group: &Group, names: Vec<String>, equations: Vec<RecEquation>, root_symbol: usize) -> Result<Self> {
        let p = group.p() as usize;
        if names.len() != equations.len() || root_symbol >= equations.len() {
            return Err(Error::StructureError("every symbol needs exactly one equation".into()));
        }
        for eq in &equations {
            if eq.sections.len() != p {
                return Err(Error::StructureError(format!("equation needs {p} sections")));
            }
            for (w, s) in &eq.sections {
                if w.group() != group {
                    return Err(Error::SpecMismatch);
                }
                if *s >= equations.len() {
                    return Err(Error::StructureError(format!("undefined symbol {s}")));
                }
            }
        }
        Ok(RecSystem { group: group.clone(), names, equations, root_symbol })
    }

    /// `g = ((ba)^{(q-1)/2} g, g)` for the dihedral witness `b`.
    pub fn build_conjugator(group: &Group, q: i64) -> Result<Self> {
        if q % 2 == 0 {
            return Err(Error::EvenQ(q));
        }
        if q < 3 {
            return Err(Error::InvalidQ(q));
        }
        let b = group.dihedral_witness()?;
        let w = (&b * &group.a()).pow((q - 1) / 2);
        let eq = RecEquation { root: 0, sections: vec![(w, 0), (group.identity(), 0)] };
        RecSystem::new(group, vec!["g".into()], vec![eq], 0)
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn equations(&self) -> &[RecEquation] {
        &self.equations
    }

    /// One step of unfolding: the output letter and next state for input `x`
    /// in state `w·S`.
    fn step(&self, w: &Element, sym: usize, x: u32) -> (u32, Element, usize) {
        let p = self.group.p();
        let eq = &self.equations[sym];
        let y = (x + eq.root) % p;
        let out = (y + w.root()) % p;
        let (ws, next) = &eq.sections[x as usize];
        (out, &w.section(y) * ws, *next)
    }

    pub fn act_on_vertex(&self, v: &[u32]) -> Result<Vec<u32>> {
        let p = self.group.p();
        if v.iter().any(|&x| x >= p) {
            return Err(Error::InvalidVertex(format!("{v:?}")));
        }
        let mut w = self.group.identity();
        let mut sym = self.root_symbol;
        let mut out = Vec::with_capacity(v.len());
        for &x in v {
            let (y, nw, ns) = self.step(&w, sym, x);
            out.push(y);
            w = nw;
            sym = ns;
        }
        Ok(out)
    }

    /// Permutation of level `n`, built recursively over the states reached.
    pub fn level_perm(&self, n: usize) -> Result<LevelPerm> {
        let mut memo = HashMap::new();
        let images = self.state_perm(&self.group.identity(), self.root_symbol, n, &mut memo);
        LevelPerm::from_images(self.group.p(), n, images.to_vec())
    }

    /// Number of distinct states met while building level `n`, per level.
    pub fn state_counts(&self, n: usize) -> Vec<usize> {
        let mut memo = HashMap::new();
        self.state_perm(&self.group.identity(), self.root_symbol, n, &mut memo);
        let mut counts = vec![0; n + 1];
        for (_, _, k) in memo.keys() {
            counts[n - k] += 1;
        }
        counts
    }

    fn state_perm(
        &self,
        w: &Element,
        sym: usize,
        k: usize,
        memo: &mut HashMap<(Vec<Letter>, usize, usize), Arc<Vec<u32>>>,
    ) -> Arc<Vec<u32>> {
        let key = (w.letters().to_vec(), sym, k);
        if let Some(v) = memo.get(&key) {
            return v.clone();
        }
        let images = if k == 0 {
            vec![0]
        } else {
            let p = self.group.p();
            let sub = (p as usize).pow(k as u32 - 1);
            let mut images = vec![0u32; sub * p as usize];
            for x in 0..p {
                let (y, nw, ns) = self.step(w, sym, x);
                let child = self.state_perm(&nw, ns, k - 1, memo);
                for (r, &c) in child.iter().enumerate() {
                    images[x as usize * sub + r] = y * sub as u32 + c;
                }
            }
            images
        };
        let images = Arc::new(images);
        memo.insert(key, images.clone());
        images
    }

    /// `r^{-1} x r` and `y` agree on level `depth` (hence on all levels above it).
    pub fn conjugation_check(&self, x: &Element, y: &Element, depth: usize) -> Result<bool> {
        let r = self.level_perm(depth)?;
        let lhs = r.inverse().compose(&level_perm(x, depth)?).compose(&r);
        Ok(lhs == level_perm(y, depth)?)
    }
}
