//! The length-reduction loop for elements outside `H(q)`.
//!
//! Membership in `H(q)` is not decidable by the tools here; the loop uses a
//! necessary condition instead. Every `h ∈ H(q)` maps each integer `n` into
//! `±n + qℤ` under the `ℤ`-action through `ζ`, so an element moving some
//! sample `n` elsewhere is certainly outside `H(q)`. The converse can fail,
//! which makes every verdict of "possibly in H(q)" heuristic.

use super::{hq, HqDesc};
use crate::boundary::{certificate_samples, z_action};
use crate::elements::{Element, Letter};
use crate::error::{Error, Result};

/// Stripped form `x = prefix · core · suffix` with `prefix, suffix ∈ St_{<a,b>}(1)`.
#[derive(Clone, Debug)]
pub struct LambdaForm {
    pub core: Element,
    pub stripped_prefix: Element,
    pub stripped_suffix: Element,
    /// B-letters in the core: an upper bound for the minimal length `λ`.
    pub lambda_hat: usize,
}

fn is_dihedral_letter(l: Letter, b_code: u32) -> bool {
    l == Letter::A(1) || l == Letter::B(b_code)
}

/// Longest run of `<a,b>`-letters from one end of `letters` with an even
/// number of `a`s.
fn strip_len<'a>(letters: impl Iterator<Item = &'a Letter>, b_code: u32) -> usize {
    let mut len = 0;
    let mut a_count = 0;
    let mut last_even = 0;
    for &l in letters {
        if !is_dihedral_letter(l, b_code) {
            break;
        }
        len += 1;
        if l.is_a() {
            a_count += 1;
        }
        if a_count % 2 == 0 {
            last_even = len;
        }
    }
    last_even
}

fn witness_code(x: &Element) -> Result<u32> {
    let spec = x.spec();
    let b = spec.dihedral_witness()?.ok_or(Error::NoDihedralWitness)?;
    Ok(spec.encode(&b))
}

/// Strips the longest `<a,b>` prefix and suffix lying in the first-level stabilizer.
pub fn lambda_form(x: &Element) -> Result<LambdaForm> {
    if x.root() != 0 {
        return Err(Error::NotLevelOneStabilized);
    }
    let b_code = witness_code(x)?;
    let letters = x.letters();
    let i = strip_len(letters.iter(), b_code);
    let j = letters.len() - strip_len(letters[i..].iter().rev(), b_code);
    let group = x.group();
    let core = group.from_letters(letters[i..j].iter().copied());
    Ok(LambdaForm {
        lambda_hat: core.b_length(),
        core,
        stripped_prefix: group.from_letters(letters[..i].iter().copied()),
        stripped_suffix: group.from_letters(letters[j..].iter().copied()),
    })
}

/// Outcome of the `ℤ`-action screen for `H(q)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ScreenVerdict {
    /// Every sample lands in `±n + qℤ` (heuristic).
    PossiblyInH,
    /// `x · n = image ∉ ±n + qℤ`: certainly outside `H(q)`.
    NotInH { n: i64, image: i64 },
}

impl ScreenVerdict {
    pub fn certified_outside(&self) -> bool {
        matches!(self, ScreenVerdict::NotInH { .. })
    }
}

pub fn z_screen(x: &Element, q: i64) -> Result<ScreenVerdict> {
    for n in certificate_samples(q) {
        let y = z_action(x, n)?;
        if (y - n) % q != 0 && (y + n) % q != 0 {
            return Ok(ScreenVerdict::NotInH { n, image: y });
        }
    }
    Ok(ScreenVerdict::PossiblyInH)
}

/// One projection of the loop: the adjusted element and its section at `1`.
#[derive(Clone, Debug)]
pub struct TraceStep {
    /// The element lives at vertex `1^depth`.
    pub depth: usize,
    pub element: Element,
    pub lambda_hat: usize,
    pub adjustments: Vec<String>,
    /// Screen verdict for the section at `1`, when projected.
    pub screen: Option<ScreenVerdict>,
    pub next_lambda_hat: Option<usize>,
}

#[derive(Clone, Debug)]
pub struct ReductionTrace {
    pub q: i64,
    pub initial_screen: ScreenVerdict,
    pub steps: Vec<TraceStep>,
    /// The loop stopped at `lambda_hat <= 3` (not merely at the step limit).
    pub reached: bool,
}

impl ReductionTrace {
    pub fn final_lambda_hat(&self) -> usize {
        self.steps.last().map_or(0, |s| s.lambda_hat)
    }

    /// `λ̂(next) <= ⌈(λ̂(cur) + 3) / 2⌉` at every projection.
    pub fn contraction_holds(&self) -> bool {
        self.steps.iter().all(|s| s.next_lambda_hat.is_none_or(|n| n <= (s.lambda_hat + 3).div_ceil(2)))
    }
}

/// Projects `g ∉ H(q)` along `1, 11, ...` until its stripped length is at most 3.
///
/// Heuristic: non-membership of each projection is certified by
/// [`z_screen`]; when neither available projection can be certified the
/// loop fails with `ScreenInconclusive`.
pub fn reduction_trace(g: &Element, q: i64, max_steps: usize) -> Result<ReductionTrace> {
    let h: HqDesc = hq(g.group(), q)?;
    let initial_screen = z_screen(g, q)?;
    if !initial_screen.certified_outside() {
        return Err(Error::ScreenInconclusive(0));
    }
    let ab = h.ab();
    let abq = ab.pow(q);
    let ab2q = ab.pow(2 * q);
    let swap = &abq * &h.witness;
    let b_code = witness_code(g)?;
    let mut cur = g.clone();
    let mut steps = Vec::new();
    for depth in 0.. {
        let mut adjustments = Vec::new();
        if cur.root() != 0 {
            cur = &cur * &abq;
            adjustments.push(format!("right (ab)^{q}"));
        }
        let lambda_hat = lambda_form(&cur)?.lambda_hat;
        if lambda_hat <= 3 || depth >= max_steps {
            steps.push(TraceStep { depth, element: cur, lambda_hat, adjustments, screen: None, next_lambda_hat: None });
            return Ok(ReductionTrace { q, initial_screen, steps, reached: lambda_hat <= 3 });
        }
        let mut verdict = z_screen(&cur.section(1), q)?;
        if !verdict.certified_outside() {
            cur = cur.conj(&swap);
            adjustments.push(format!("conjugate by (ab)^{q} b"));
            verdict = z_screen(&cur.section(1), q)?;
            if !verdict.certified_outside() {
                return Err(Error::ScreenInconclusive(depth + 1));
            }
        }
        if cur.section(1).root() != 0 {
            cur = &cur * &ab2q;
            adjustments.push(format!("right (ab)^{}", 2 * q));
        }
        // Keep the <a,b>-prefix of the section inside St(1).
        let next = cur.section(1);
        let lead = next.letters().iter().take_while(|&&l| is_dihedral_letter(l, b_code)).filter(|l| l.is_a());
        if lead.count() % 2 == 1 {
            cur = &(&ab2q * &cur) * &ab2q.inverse();
            adjustments.push(format!("conjugate by (ba)^{}", 2 * q));
        }
        let lambda_hat = lambda_form(&cur)?.lambda_hat;
        let next = cur.section(1);
        let next_lambda_hat = lambda_form(&next)?.lambda_hat;
        steps.push(TraceStep {
            depth,
            element: cur,
            lambda_hat,
            adjustments,
            screen: Some(verdict),
            next_lambda_hat: Some(next_lambda_hat),
        });
        cur = next;
    }
    unreachable!()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::GroupSpec;
    use crate::elements::Group;

    fn ge() -> Group {
        Group::new(GroupSpec::grigorchuk_erschler())
    }

    #[test]
    fn lambda_forms() {
        let g = ge();
        let x = g.parse("(b a)^4").unwrap();
        let lf = lambda_form(&x).unwrap();
        assert_eq!(lf.lambda_hat, 0);
        assert!(lf.core.is_empty());
        let x = g.parse("(b a)^2 b0 (a b)^4").unwrap();
        let lf = lambda_form(&x).unwrap();
        assert_eq!(lf.core, g.b(0));
        assert_eq!(lf.lambda_hat, 1);
        assert!((&(&lf.stripped_prefix * &lf.core) * &lf.stripped_suffix).equals(&x));
        assert!(lambda_form(&g.parse("b b0 b").unwrap()).unwrap().lambda_hat <= 1);
        assert_eq!(lambda_form(&g.a()).unwrap_err(), Error::NotLevelOneStabilized);
        // odd a-parity pushes an a back into the core
        let x = g.parse("b a b0 a b1").unwrap();
        let lf = lambda_form(&x).unwrap();
        assert_eq!(lf.stripped_prefix, g.parse("b").unwrap());
        assert_eq!(lf.lambda_hat, 2);
    }

    #[test]
    fn screen() {
        let g = ge();
        let ab = g.parse("a b").unwrap();
        assert_eq!(z_screen(&ab, 3).unwrap(), ScreenVerdict::NotInH { n: 0, image: 1 });
        for x in hq(&g, 3).unwrap().generators {
            assert_eq!(z_screen(&x, 3).unwrap(), ScreenVerdict::PossiblyInH);
        }
    }

    #[test]
    fn traces() {
        let g = ge();
        let t = reduction_trace(&g.parse("a b").unwrap(), 3, 20).unwrap();
        assert!(t.reached && t.final_lambda_hat() <= 3);
        assert_eq!(reduction_trace(&g.b(0), 3, 20).unwrap_err(), Error::ScreenInconclusive(0));
    }
}
