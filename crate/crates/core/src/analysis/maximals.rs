use crate::algebra::BVec;
use crate::elements::{Element, Group};
use crate::error::{Error, Result};
use crate::perm::SubgroupDesc;

/// Descriptors beyond this many are counted but not built.
pub const MAX_LISTED_MAXIMALS: usize = 256;

/// A maximal subgroup of finite index: the kernel of a functional on
/// `G/G' = A × B ≅ F_p^{m+1}`.
#[derive(Clone, Debug)]
pub struct MaximalDesc {
    /// Coefficients on `(a, b_0, ..., b_{m-1})`, first nonzero entry 1.
    pub functional: Vec<u32>,
    /// Lifts of a basis of the kernel, then the `[a, b_i]`; the subgroup is
    /// their normal closure.
    pub generators: Vec<Element>,
}

impl MaximalDesc {
    pub fn subgroup(&self, group: &Group) -> SubgroupDesc {
        let name = format!("ker{:?}", self.functional);
        SubgroupDesc::new(name, group, self.generators.clone(), true).expect("generators come from the group")
    }
}

#[derive(Clone, Debug)]
pub struct MaximalsReport {
    /// Number of maximal subgroups of finite index: hyperplanes of `F_p^{m+1}`.
    pub count: u64,
    /// Nonzero functionals `F_p^{m+1} -> F_p`; `p - 1` of them share each kernel.
    pub nonzero_functionals: u64,
    /// The first [`MAX_LISTED_MAXIMALS`] hyperplanes, in lexicographic order
    /// of their normalized functionals.
    pub descriptors: Vec<MaximalDesc>,
}

fn element_of(group: &Group, v: &[u32]) -> Element {
    &group.a_pow(v[0] as i64) * &group.b_vec(&BVec::new(v[1..].to_vec()))
}

/// Every maximal subgroup of finite index contains `G'` and has index `p`.
pub fn count_finite_index_maximals(group: &Group) -> Result<MaximalsReport> {
    let spec = group.spec();
    if spec.is_degenerate() {
        return Err(Error::DegenerateCase);
    }
    let p = spec.p() as u64;
    let dim = spec.m() as u32 + 1;
    let nonzero_functionals = p.pow(dim) - 1;
    let count = nonzero_functionals / (p - 1);
    let a = group.a();
    let commutators: Vec<Element> = group.b_basis().iter().map(|b| a.commutator(b)).collect();
    let mut descriptors = Vec::new();
    // Normalized functionals: pivot j carries 1, earlier entries 0, later free.
    'outer: for j in 0..dim as usize {
        let free = dim as usize - j - 1;
        for tail in 0..p.pow(free as u32) {
            if descriptors.len() == MAX_LISTED_MAXIMALS {
                break 'outer;
            }
            let mut f = vec![0u32; dim as usize];
            f[j] = 1;
            let mut t = tail;
            for k in (j + 1..dim as usize).rev() {
                f[k] = (t % p) as u32;
                t /= p;
            }
            let mut generators: Vec<Element> = (0..dim as usize)
                .filter(|&k| k != j)
                .map(|k| {
                    let mut v = vec![0u32; dim as usize];
                    v[k] = 1;
                    v[j] = (spec.p() - f[k]) % spec.p();
                    element_of(group, &v)
                })
                .collect();
            generators.extend(commutators.iter().cloned());
            descriptors.push(MaximalDesc { functional: f, generators });
        }
    }
    Ok(MaximalsReport { count, nonzero_functionals, descriptors })
}
