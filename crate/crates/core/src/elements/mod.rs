//! Group elements as freely reduced alternating words over `{a^e} ∪ B \ {0}`.
//!
//! Elements act on the left: `(gh)(v) = g(h(v))`. Sections are computed by
//! walking the word from its rightmost letter, so every `B`-letter feeds at
//! most one letter into each section. That is what makes the triviality
//! test below terminate.

mod lift;
mod theta;
mod word;

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, Mutex, RwLock};

pub use lift::find_cd;
pub use theta::{ThetaClass, ThetaOutcome};

use crate::algebra::{BVec, GroupSpec};
use crate::error::{Error, Result};

/// One letter of a word: a power of the rooted cycle or a nonzero element of B.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    /// `a^e` with `1 <= e < p`.
    A(u32),
    /// A nonzero vector of B, packed by [`GroupSpec::encode`].
    B(u32),
}

impl Letter {
    pub fn is_a(self) -> bool {
        matches!(self, Letter::A(_))
    }

    pub fn is_b(self) -> bool {
        matches!(self, Letter::B(_))
    }
}

struct Inner {
    spec: GroupSpec,
    trivial_memo: RwLock<HashMap<Vec<Letter>, bool>>,
    perm_cache: Mutex<HashMap<(Letter, usize), Arc<Vec<u32>>>>,
}

/// Shared handle on a group: its spec plus the caches used by elements.
#[derive(Clone)]
pub struct Group {
    inner: Arc<Inner>,
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("Group").field(&self.inner.spec).finish()
    }
}

impl PartialEq for Group {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.spec == other.inner.spec
    }
}

impl Eq for Group {}

impl From<GroupSpec> for Group {
    fn from(spec: GroupSpec) -> Self {
        Group::new(spec)
    }
}

impl Group {
    pub fn new(spec: GroupSpec) -> Self {
        Group {
            inner: Arc::new(Inner {
                spec,
                trivial_memo: RwLock::new(HashMap::new()),
                perm_cache: Mutex::new(HashMap::new()),
            }),
        }
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.inner.spec
    }

    pub fn p(&self) -> u32 {
        self.inner.spec.p()
    }

    pub fn identity(&self) -> Element {
        Element { group: self.clone(), letters: Vec::new() }
    }

    pub fn a(&self) -> Element {
        self.a_pow(1)
    }

    pub fn a_pow(&self, e: i64) -> Element {
        self.from_letters([Letter::A(e.rem_euclid(self.p() as i64) as u32)])
    }

    /// Basis letter `b_i`.
    pub fn b(&self, i: usize) -> Element {
        self.b_vec(&BVec::basis(self.spec().m(), i))
    }

    pub fn b_vec(&self, v: &BVec) -> Element {
        self.from_letters([Letter::B(self.spec().encode(v))])
    }

    /// The B-basis `b_0, ..., b_{m-1}` as elements.
    pub fn b_basis(&self) -> Vec<Element> {
        (0..self.spec().m()).map(|i| self.b(i)).collect()
    }

    /// The element `b` with `b = (a, b)` when `f(1) = 0` over F_2.
    pub fn dihedral_witness(&self) -> Result<Element> {
        self.spec().dihedral_witness()?.map(|v| self.b_vec(&v)).ok_or(Error::NoDihedralWitness)
    }

    /// Normalizes an arbitrary letter sequence. Out-of-range exponents are
    /// reduced mod p and zero letters dropped.
    pub fn from_letters(&self, letters: impl IntoIterator<Item = Letter>) -> Element {
        let mut out = Vec::new();
        for l in letters {
            let l = match l {
                Letter::A(e) => Letter::A(e % self.p()),
                Letter::B(c) => {
                    assert!(c < self.spec().b_size(), "B-letter code {c} out of range");
                    Letter::B(c)
                }
            };
            push_letter(self.spec(), &mut out, l);
        }
        Element { group: self.clone(), letters: out }
    }

    /// Permutation of level `n` induced by a single letter, cached.
    pub(crate) fn letter_perm(&self, letter: Letter, n: usize) -> Arc<Vec<u32>> {
        if let Some(perm) = self.inner.perm_cache.lock().expect("cache lock").get(&(letter, n)) {
            return perm.clone();
        }
        let spec = self.spec();
        let p = spec.p();
        let size = (p as usize).pow(n as u32);
        let mut digits = vec![0u32; n];
        let perm: Vec<u32> = (0..size as u32)
            .map(|idx| {
                index_to_digits(idx, p, &mut digits);
                act_letter(spec, letter, &mut digits);
                digits_to_index(&digits, p)
            })
            .collect();
        let perm = Arc::new(perm);
        self.inner.perm_cache.lock().expect("cache lock").insert((letter, n), perm.clone());
        perm
    }

    fn trivial_lookup(&self, key: &[Letter]) -> Option<bool> {
        self.inner.trivial_memo.read().expect("memo lock").get(key).copied()
    }

    fn trivial_store(&self, key: Vec<Letter>, value: bool) {
        self.inner.trivial_memo.write().expect("memo lock").insert(key, value);
    }
}

pub(crate) fn index_to_digits(mut idx: u32, p: u32, digits: &mut [u32]) {
    for d in digits.iter_mut().rev() {
        *d = idx % p;
        idx /= p;
    }
}

pub(crate) fn digits_to_index(digits: &[u32], p: u32) -> u32 {
    digits.iter().fold(0, |acc, &d| acc * p + d)
}

fn push_letter(spec: &GroupSpec, letters: &mut Vec<Letter>, l: Letter) {
    let merged = match (letters.last().copied(), l) {
        (_, Letter::A(0)) => return,
        (_, Letter::B(0)) => return,
        (Some(Letter::A(x)), Letter::A(y)) => Letter::A((x + y) % spec.p()),
        (Some(Letter::B(x)), Letter::B(y)) => Letter::B(spec.add_codes(x, y)),
        _ => {
            letters.push(l);
            return;
        }
    };
    letters.pop();
    if !matches!(merged, Letter::A(0) | Letter::B(0)) {
        letters.push(merged);
    }
}

fn act_letter(spec: &GroupSpec, letter: Letter, digits: &mut [u32]) {
    let p = spec.p();
    match letter {
        Letter::A(e) => {
            if let Some(d) = digits.first_mut() {
                *d = (*d + e) % p;
            }
        }
        Letter::B(mut c) => {
            for i in 0..digits.len() {
                let d = digits[i];
                if d == 0 {
                    if i + 1 < digits.len() {
                        digits[i + 1] = (digits[i + 1] + spec.omega_code(c)) % p;
                    }
                    return;
                } else if d == p - 1 {
                    c = spec.rho_code(c);
                } else {
                    return;
                }
            }
        }
    }
}

/// An element of `G_{p,f}` in free normal form.
///
/// `==` compares normal forms; use [`Element::equals`] for equality in the group.
#[derive(Clone)]
pub struct Element {
    group: Group,
    letters: Vec<Letter>,
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        self.letters == other.letters && self.group == other.group
    }
}

impl Eq for Element {}

impl Hash for Element {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.letters.hash(state);
    }
}

/// `psi(g) = sigma^root (g_0, ..., g_{p-1})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WreathForm {
    pub root: u32,
    pub sections: Vec<Element>,
}

/// Image in `G/G' = A x B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelImage {
    pub a_exp: u32,
    pub b_sum: BVec,
}

impl AbelImage {
    pub fn is_zero(&self) -> bool {
        self.a_exp == 0 && self.b_sum.is_zero()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrderProbe {
    Finite(u64),
    ExceedsBound,
}

/// `x * y`, failing when the factors live in different groups.
pub fn multiply(x: &Element, y: &Element) -> Result<Element> {
    x.try_mul(y)
}

impl Element {
    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn spec(&self) -> &GroupSpec {
        self.group.spec()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    /// True for the empty word. Not the same as [`is_trivial`](Self::is_trivial).
    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn try_mul(&self, other: &Element) -> Result<Element> {
        if self.group != other.group {
            return Err(Error::SpecMismatch);
        }
        let mut letters = self.letters.clone();
        for &l in &other.letters {
            push_letter(self.spec(), &mut letters, l);
        }
        Ok(Element { group: self.group.clone(), letters })
    }

    pub fn inverse(&self) -> Element {
        let spec = self.spec();
        let letters = self
            .letters
            .iter()
            .rev()
            .map(|&l| match l {
                Letter::A(e) => Letter::A((spec.p() - e) % spec.p()),
                Letter::B(c) => Letter::B(spec.neg_code(c)),
            })
            .collect();
        Element { group: self.group.clone(), letters }
    }

    pub fn pow(&self, k: i64) -> Element {
        let mut base = if k < 0 { self.inverse() } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = self.group.identity();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `self^y = y^{-1} self y`.
    pub fn conj(&self, y: &Element) -> Element {
        &(&y.inverse() * self) * y
    }

    /// `[self, y] = self^{-1} y^{-1} self y`.
    pub fn commutator(&self, y: &Element) -> Element {
        &(&self.inverse() * &y.inverse()) * &(self * y)
    }

    /// Exponent of the root permutation.
    pub fn root(&self) -> u32 {
        let p = self.group.p();
        self.letters.iter().fold(0, |acc, l| match l {
            Letter::A(e) => (acc + e) % p,
            Letter::B(_) => acc,
        })
    }

    /// The section at the first-level vertex `x`.
    pub fn section(&self, x: u32) -> Element {
        let spec = self.spec();
        let p = spec.p();
        let mut pos = x % p;
        let mut rev = Vec::new();
        for &l in self.letters.iter().rev() {
            match l {
                Letter::A(e) => pos = (pos + e) % p,
                Letter::B(c) => {
                    if pos == 0 {
                        let w = spec.omega_code(c);
                        if w != 0 {
                            rev.push(Letter::A(w));
                        }
                    } else if pos == p - 1 {
                        rev.push(Letter::B(spec.rho_code(c)));
                    }
                }
            }
        }
        let mut letters = Vec::with_capacity(rev.len());
        for l in rev.into_iter().rev() {
            push_letter(spec, &mut letters, l);
        }
        Element { group: self.group.clone(), letters }
    }

    pub fn sections(&self) -> Vec<Element> {
        (0..self.group.p()).map(|x| self.section(x)).collect()
    }

    pub fn wreath(&self) -> WreathForm {
        WreathForm { root: self.root(), sections: self.sections() }
    }

    /// Iterated section `g_v`.
    pub fn section_at(&self, v: &[u32]) -> Result<Element> {
        self.check_vertex(v)?;
        let mut g = self.clone();
        for &x in v {
            g = g.section(x);
        }
        Ok(g)
    }

    pub fn act_on_vertex(&self, v: &[u32]) -> Result<Vec<u32>> {
        self.check_vertex(v)?;
        let mut digits = v.to_vec();
        for &l in self.letters.iter().rev() {
            act_letter(self.spec(), l, &mut digits);
        }
        Ok(digits)
    }

    fn check_vertex(&self, v: &[u32]) -> Result<()> {
        if v.iter().any(|&x| x >= self.group.p()) {
            return Err(Error::InvalidVertex(format!("{v:?}")));
        }
        Ok(())
    }

    pub fn abelianize(&self) -> AbelImage {
        let spec = self.spec();
        let mut b = 0;
        for l in &self.letters {
            if let Letter::B(c) = l {
                b = spec.add_codes(b, *c);
            }
        }
        AbelImage { a_exp: self.root(), b_sum: spec.decode(b) }
    }

    /// Number of B-letters in the normal form: an upper bound for the minimal B-length.
    pub fn b_length(&self) -> usize {
        self.letters.iter().filter(|l| l.is_b()).count()
    }

    /// Decides whether the element acts trivially on the whole tree.
    pub fn is_trivial(&self) -> bool {
        is_trivial_letters(&self.group, &self.letters)
    }

    /// Equality in the group.
    pub fn equals(&self, other: &Element) -> bool {
        self.group == other.group && (&self.inverse() * other).is_trivial()
    }

    /// Least `k <= bound` with `x^k = 1`.
    ///
    /// Elements of finite order have `p`-power order (every level quotient is
    /// a `p`-group), so only the exponents `p^j` are tested.
    pub fn order_probe(&self, bound: u64) -> OrderProbe {
        if self.is_trivial() {
            return OrderProbe::Finite(1);
        }
        let p = self.group.p() as u64;
        let mut k = 1u64;
        let mut x = self.clone();
        loop {
            k = match k.checked_mul(p) {
                Some(k) if k <= bound => k,
                _ => return OrderProbe::ExceedsBound,
            };
            x = x.pow(p as i64);
            if x.is_trivial() {
                return OrderProbe::Finite(k);
            }
        }
    }

    /// Human-readable word that [`Group::parse`] reads back.
    pub fn to_word(&self) -> String {
        self.to_string()
    }
}

fn cyclic_reduce(spec: &GroupSpec, letters: &[Letter]) -> Vec<Letter> {
    let mut w = letters.to_vec();
    while w.len() >= 2 && w[0].is_a() == w[w.len() - 1].is_a() {
        let last = w.pop().expect("len >= 2");
        let first = w.remove(0);
        let mut merged = vec![last];
        push_letter(spec, &mut merged, first);
        // Conjugating by the last letter moves it to the front.
        let mut next = merged;
        for l in w {
            push_letter(spec, &mut next, l);
        }
        w = next;
    }
    w
}

fn is_trivial_letters(group: &Group, letters: &[Letter]) -> bool {
    let spec = group.spec();
    if letters.is_empty() {
        return true;
    }
    if letters.len() == 1 {
        return false;
    }
    let key = cyclic_reduce(spec, letters);
    if key.is_empty() {
        return true;
    }
    if key.len() == 1 {
        return false;
    }
    if let Some(v) = group.trivial_lookup(&key) {
        return v;
    }
    let x = Element { group: group.clone(), letters: key.clone() };
    let result = x.abelianize().is_zero() && (0..spec.p()).all(|v| x.section(v).is_trivial());
    group.trivial_store(key, result);
    result
}

impl std::ops::Mul<&Element> for &Element {
    type Output = Element;

    /// Panics when the factors belong to different groups; see [`multiply`].
    fn mul(self, rhs: &Element) -> Element {
        self.try_mul(rhs).expect("factors belong to the same group")
    }
}

impl std::ops::Mul for Element {
    type Output = Element;

    fn mul(self, rhs: Element) -> Element {
        &self * &rhs
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let spec = self.spec();
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            match *l {
                Letter::A(1) => write!(f, "a")?,
                Letter::A(e) => write!(f, "a^{e}")?,
                Letter::B(c) => {
                    let v = spec.decode(c);
                    let support: Vec<usize> = (0..v.dim()).filter(|&i| v.coords()[i] != 0).collect();
                    if support.len() == 1 && v.coords()[support[0]] == 1 {
                        write!(f, "b{}", support[0])?;
                    } else {
                        let coords: Vec<String> = v.coords().iter().map(|c| c.to_string()).collect();
                        write!(f, "B<{}>", coords.join(","))?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ge() -> Group {
        Group::new(GroupSpec::grigorchuk_erschler())
    }

    #[test]
    fn multiply_examples() {
        let g = ge();
        assert!((&g.a() * &g.a()).is_empty());
        assert_eq!(&g.b(0) * &g.b(1), g.b_vec(&BVec::new(vec![1, 1])));
        let x = &g.a() * &g.b(1);
        let y = &g.b(1) * &g.a();
        assert!((&x * &y).is_empty());
        let other = Group::new(GroupSpec::grigorchuk());
        assert_eq!(multiply(&g.a(), &other.a()), Err(Error::SpecMismatch));
    }

    #[test]
    fn wreath_examples() {
        let g = ge();
        let w = g.b(1).wreath();
        assert_eq!(w.root, 0);
        assert_eq!(w.sections, vec![g.a(), g.b(0)]);
        let w = g.a().wreath();
        assert_eq!(w.root, 1);
        assert!(w.sections.iter().all(Element::is_empty));
    }

    #[test]
    fn triviality_examples() {
        let g = ge();
        let ad = &g.a() * &g.b(0);
        assert!(ad.pow(4).is_trivial());
        assert!(!ad.pow(2).is_trivial());
        assert!(!g.b(0).is_trivial());
        assert!(g.b(0).commutator(&g.b(1)).is_trivial());
    }

    #[test]
    fn sections_and_action() {
        let g = ge();
        assert_eq!(g.b(0).section_at(&[1]).unwrap(), g.b(1));
        assert!(g.a().section_at(&[0, 1, 1]).unwrap().is_empty());
        assert_eq!(g.a().act_on_vertex(&[0, 1]).unwrap(), vec![1, 1]);
        let b = g.dihedral_witness().unwrap();
        assert_eq!(b.act_on_vertex(&[0, 1]).unwrap(), vec![0, 0]);
        assert_eq!(b.act_on_vertex(&[1, 1, 0, 1]).unwrap(), vec![1, 1, 0, 0]);
        let ab = &g.a() * &b;
        let k = 3;
        let s = ab.pow(2 * k).wreath();
        assert_eq!(s.root, 0);
        assert!(s.sections[1].equals(&ab.pow(k)));
        assert!(s.sections[0].equals(&(&b * &g.a()).pow(k)));
    }

    #[test]
    fn abelianization() {
        let g = ge();
        assert!(g.a().commutator(&g.b(1)).abelianize().is_zero());
        let img = (&g.a() * &g.b(0)).abelianize();
        assert_eq!(img, AbelImage { a_exp: 1, b_sum: BVec::new(vec![1, 0]) });
    }

    #[test]
    fn order_probes() {
        let g = ge();
        assert_eq!(g.a().order_probe(100), OrderProbe::Finite(2));
        let ab = &g.a() * &g.dihedral_witness().unwrap();
        assert_eq!(ab.order_probe(1 << 10), OrderProbe::ExceedsBound);
        assert_eq!((&g.a() * &g.b(0)).order_probe(1 << 10), OrderProbe::Finite(4));
        assert_eq!(g.identity().order_probe(1), OrderProbe::Finite(1));
    }

    #[test]
    fn b_length_counts_letters() {
        let g = ge();
        assert_eq!(g.identity().b_length(), 0);
        let w = g.from_letters([Letter::A(1), Letter::B(2), Letter::A(1), Letter::B(1), Letter::A(1)]);
        assert_eq!(w.b_length(), 2);
        assert_eq!((&g.a() * &g.b(0)).pow(4).b_length(), 4);
    }

    #[test]
    fn fg_relations() {
        let g = Group::new(GroupSpec::fabrykowski_gupta());
        assert!(g.a().pow(3).is_trivial());
        assert!(g.b(0).pow(3).is_trivial());
        assert!(!g.a().commutator(&g.b(0)).is_trivial());
        assert_eq!((&g.a() * &g.b(0)).order_probe(1 << 12), OrderProbe::ExceedsBound);
    }
}
