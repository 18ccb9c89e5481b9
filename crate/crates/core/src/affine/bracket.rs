//! The affine super-bracket with the central element already evaluated.

use crate::error::Result;
use crate::exact::{Gaussian, Rational};
use crate::finite::{bracket, killing_form, AlgebraKind, Sector};

use super::element::AlgebraElement;
use super::mode::Mode;
use super::monomial::PbwMonomial;

/// `[a_m, b_n] = [a,b]_{m+n} + m delta_{m+n,0} kappa(a,b) k`, the
/// anticommutator when both modes are odd. The central element is replaced
/// by the level scalar.
pub fn affine_bracket(
    kind: AlgebraKind,
    sector: Sector,
    a: Mode,
    b: Mode,
    level: &Rational,
) -> Result<AlgebraElement> {
    a.check(kind, sector)?;
    b.check(kind, sector)?;
    let mut out = AlgebraElement::zero();
    for (g, c) in bracket(kind, a.gen, b.gen)? {
        let mode = Mode::new(g, a.idx2 + b.idx2);
        out.add_term(
            PbwMonomial::from_sorted_word(&[mode]).expect("single mode"),
            Gaussian::from_rational(c),
        );
    }
    if a.idx2 + b.idx2 == 0 {
        let kappa = killing_form(kind, a.gen, b.gen)?;
        if !kappa.is_zero() {
            let m = a.index();
            out.add_term(
                PbwMonomial::one(),
                Gaussian::from_rational(&(&m * &kappa) * level),
            );
        }
    }
    Ok(out)
}
