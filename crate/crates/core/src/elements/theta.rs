//! The map `Θ(z) = a z_0 a z_1` on the commutator subgroup (binary tree only).

use std::collections::HashSet;

use super::{Element, Letter};
use crate::error::{Error, Result};

/// Where an iterated `Θ`-orbit settles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ThetaClass {
    Trivial,
    /// `a x a x`
    Axax { x: u32 },
    /// `x a x a`
    Xaxa { x: u32 },
    /// `a x a (ba)^{2l} x` with `l >= 1`
    AxaBaX { x: u32, l: usize },
    /// `(ba)^{2l}` with `l >= 1`
    BaPower { l: usize },
    /// The orbit cycled on a form outside the list, or never cycled.
    Unstabilized,
}

#[derive(Clone, Debug)]
pub struct ThetaOutcome {
    /// `Θ(z), Θ²(z), ...` up to the first repeated normal form.
    pub trace: Vec<Element>,
    pub class: ThetaClass,
    /// The element the class was read from.
    pub stable: Element,
}

impl Element {
    pub fn theta(&self) -> Result<Element> {
        if self.group().p() != 2 {
            return Err(Error::WrongCharacteristic(self.group().p()));
        }
        if !self.abelianize().is_zero() {
            return Err(Error::NotInDerivedSubgroup);
        }
        let a = self.group().a();
        let s = self.sections();
        Ok(&(&(&a * &s[0]) * &a) * &s[1])
    }

    /// Iterates `Θ` until a normal form repeats (at most `max_iter` steps) and
    /// classifies the first repeated form.
    pub fn theta_stabilize(&self, max_iter: usize) -> Result<ThetaOutcome> {
        let mut cur = self.theta().map(|_| self.clone())?;
        if cur.is_empty() {
            return Ok(ThetaOutcome { trace: Vec::new(), class: ThetaClass::Trivial, stable: cur });
        }
        let mut seen = HashSet::new();
        seen.insert(cur.clone());
        let mut trace = Vec::new();
        for _ in 0..max_iter {
            let next = cur.theta()?;
            trace.push(next.clone());
            if !seen.insert(next.clone()) {
                let class = classify(&next);
                return Ok(ThetaOutcome { trace, class, stable: next });
            }
            cur = next;
        }
        Ok(ThetaOutcome { trace, class: ThetaClass::Unstabilized, stable: cur })
    }
}

fn classify(z: &Element) -> ThetaClass {
    use Letter::{A, B};
    let w = z.letters();
    if w.is_empty() {
        return ThetaClass::Trivial;
    }
    match *w {
        [A(1), B(x), A(1), B(y)] if x == y => return ThetaClass::Axax { x },
        [B(x), A(1), B(y), A(1)] if x == y => return ThetaClass::Xaxa { x },
        _ => {}
    }
    let Ok(b) = z.group().dihedral_witness() else {
        return ThetaClass::Unstabilized;
    };
    let Letter::B(bc) = b.letters()[0] else { unreachable!("witness is a B-letter") };
    let is_ba_run = |run: &[Letter]| run.len() % 4 == 0 && run.chunks(2).all(|c| c == [B(bc), A(1)]);
    if !w.is_empty() && is_ba_run(w) {
        return ThetaClass::BaPower { l: w.len() / 4 };
    }
    if w.len() >= 8 {
        if let [A(1), B(x), A(1), ref mid @ .., B(y)] = *w {
            if x == y && !mid.is_empty() && is_ba_run(mid) {
                return ThetaClass::AxaBaX { x, l: mid.len() / 4 };
            }
        }
    }
    ThetaClass::Unstabilized
}
