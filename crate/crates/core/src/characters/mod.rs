//! Admissible-level spectra and the closed character and string-function
//! formulas, evaluated as exact q-series.

mod n1;
mod relaxed;
mod spectrum;
mod verma;
mod virasoro;

pub use n1::n1_character;
pub use relaxed::{bgg_limit_string_function, relaxed_string_function, StringPair};
pub use spectrum::{
    ground_family, ground_family_at, spectrum_params, AdmissibleLevel, MinimalLabel, SpectrumData,
};
pub use verma::{delta_of_hw, verma_limit_string_function, verma_string_function, VermaLimit};
pub use virasoro::virasoro_character;

use crate::exact::Rational;
use crate::qseries::QSeries;

/// Sum over an integer index of finitely many surviving Laurent terms.
///
/// `terms_at(n)` lists the `(exponent, coefficient)` contributions of index
/// `n`; exponents grow quadratically in `|n|`, so the iteration stops once
/// two consecutive values of `|n|` contribute nothing below the truncation.
pub(crate) fn indexed_sum(
    trunc: &Rational,
    mut terms_at: impl FnMut(i64) -> Vec<(Rational, Rational)>,
) -> QSeries {
    let mut collected: Vec<(Rational, Rational)> = Vec::new();
    let push =
        |collected: &mut Vec<(Rational, Rational)>, items: Vec<(Rational, Rational)>| -> bool {
            let mut any = false;
            for (e, c) in items {
                if &e <= trunc {
                    collected.push((e, c));
                    any = true;
                }
            }
            any
        };
    push(&mut collected, terms_at(0));
    let mut idle = 0u32;
    let mut k = 1i64;
    while idle < 2 {
        let hit_pos = push(&mut collected, terms_at(k));
        let hit_neg = push(&mut collected, terms_at(-k));
        idle = if hit_pos || hit_neg { 0 } else { idle + 1 };
        k += 1;
    }
    QSeries::from_terms(&collected, trunc)
}
