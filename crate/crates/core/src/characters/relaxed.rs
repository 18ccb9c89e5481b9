//! String functions of the admissible-level relaxed modules: the closed
//! theta-product forms and the alternating Verma-limit sums they resolve.

use crate::error::Result;
use crate::exact::Rational;
use crate::finite::Sector;
use crate::qseries::{eta_power, euler_product, sqrt_quotient, theta_at_one, QSeries};

use super::n1::n1_character;
use super::spectrum::{AdmissibleLevel, MinimalLabel};
use super::virasoro::virasoro_character;
use super::{indexed_sum, spectrum_params};

/// The per-weight string functions of a relaxed module. For sl(2) and the
/// Neveu-Schwarz sector the module is stringy and `odd` is absent; Ramond
/// modules are R-stringy with distinct even/odd weight-coset series.
#[derive(Clone, Debug)]
pub struct StringPair {
    pub even: QSeries,
    pub odd: Option<QSeries>,
}

impl StringPair {
    pub fn by_parity(&self, odd: bool) -> &QSeries {
        if odd {
            self.odd.as_ref().unwrap_or(&self.even)
        } else {
            &self.even
        }
    }
}

/// The closed character-theorem form of the string function of the relaxed
/// module labelled `(r,s)`:
///
/// * sl(2): `chi^Vir_{r,s} / eta^2`
/// * Neveu-Schwarz: `(chi^{N=1}_{r,s} / eta^2) sqrt(theta_2 / 2 eta)`
/// * Ramond: `(chi^{N=1} sqrt(theta_3/eta) ± chibar^{N=1} sqrt(theta_4/eta)) / (2 eta^2)`
///
/// All series carry the `q^(-c/24)` normalization; `raw` removes it.
pub fn relaxed_string_function(
    lvl: &AdmissibleLevel,
    lab: &MinimalLabel,
    orders: u32,
    raw: bool,
) -> Result<StringPair> {
    let data = spectrum_params(lvl, lab)?;
    let margin = orders + 2;
    let eta2_inv = eta_power(-2, margin)?;
    let pair = match (lvl.kind, data.sector) {
        (crate::finite::AlgebraKind::Sl2, _) => {
            let chi = virasoro_character(lvl.u, lvl.v, lab.r, lab.s, margin)?;
            StringPair {
                even: chi.mul(&eta2_inv),
                odd: None,
            }
        }
        (crate::finite::AlgebraKind::Osp12, Sector::Ns) => {
            let chi = n1_character(lvl.u, lvl.v, lab.r, lab.s, false, margin)?;
            StringPair {
                even: chi.mul(&eta2_inv).mul(&sqrt_quotient(2, margin)),
                odd: None,
            }
        }
        (crate::finite::AlgebraKind::Osp12, Sector::R) => {
            let chi = n1_character(lvl.u, lvl.v, lab.r, lab.s, false, margin)?;
            let schi = n1_character(lvl.u, lvl.v, lab.r, lab.s, true, margin)?;
            let half = Rational::new(1, 2);
            let a = chi
                .mul(&sqrt_quotient(3, margin))
                .mul(&eta2_inv)
                .scaled(&half);
            let b = schi
                .mul(&sqrt_quotient(4, margin))
                .mul(&eta2_inv)
                .scaled(&half);
            StringPair {
                even: a.add(&b),
                odd: Some(a.sub(&b)),
            }
        }
    };
    if raw {
        let shift = &lvl.c / &Rational::int(24);
        Ok(StringPair {
            even: pair.even.shifted(&shift),
            odd: pair.odd.map(|s| s.shifted(&shift)),
        })
    } else {
        Ok(pair)
    }
}

/// The positive limiting string function of the simple highest-weight module
/// at `mu_{r,s}`, evaluated as the alternating sum of Verma limiting string
/// functions over the affine BGG index set (with the Ramond even/odd parity
/// bookkeeping). Normalized by `q^(-c/24)`.
pub fn bgg_limit_string_function(
    lvl: &AdmissibleLevel,
    lab: &MinimalLabel,
    orders: u32,
) -> Result<StringPair> {
    let data = spectrum_params(lvl, lab)?;
    let norm = -(&lvl.c / &Rational::int(24));
    let base = lvl.delta_rs(lab.r, lab.s);
    let trunc = &(&base + &norm) + &Rational::int(orders as i64 + 1);
    let margin = orders + 2;
    let (u, r, s) = (lvl.u, lab.r, lab.s);
    match (lvl.kind, data.sector) {
        (_, Sector::Ns) => {
            // One Verma-limit shape for every summand.
            let sum = indexed_sum(&trunc, |n| {
                vec![
                    (&lvl.delta_rs(2 * n * u + r, s) + &norm, Rational::one()),
                    (&lvl.delta_rs(2 * n * u - r, s) + &norm, Rational::int(-1)),
                ]
            });
            let shape = match lvl.kind {
                crate::finite::AlgebraKind::Sl2 => euler_product(margin).pow(-3)?,
                crate::finite::AlgebraKind::Osp12 => {
                    let plus = sqrt_quotient(2, margin).shifted(&Rational::new(-1, 24));
                    plus.mul(&plus).mul(&euler_product(margin).pow(-3)?)
                }
            };
            Ok(StringPair {
                even: shape.mul(&sum),
                odd: None,
            })
        }
        (_, Sector::R) => {
            // Split the sum by the relative parity of each Verma's weight
            // support against mu_{r,s}: the raised family sits nu omega
            // steps away, the lowered family (nu - r) steps.
            let sum_by = |want_flip: i64| {
                indexed_sum(&trunc, |n| {
                    let mut items = Vec::new();
                    if (n * u).rem_euclid(2) == want_flip {
                        items.push((&lvl.delta_rs(2 * n * u + r, s) + &norm, Rational::one()));
                    }
                    if (n * u - r).rem_euclid(2) == want_flip {
                        items.push((&lvl.delta_rs(2 * n * u - r, s) + &norm, Rational::int(-1)));
                    }
                    items
                })
            };
            let sum_aligned = sum_by(0);
            let sum_flipped = sum_by(1);
            let quarter = euler_product(margin).pow(-4)?;
            let half = Rational::new(1, 2);
            let t3 = theta_at_one(3, margin);
            let t4 = theta_at_one(4, margin);
            let theta_even = t3.add(&t4).scaled(&half).mul(&quarter);
            let theta_odd = t3.sub(&t4).scaled(&half).mul(&quarter);
            let even = theta_even
                .mul(&sum_aligned)
                .add(&theta_odd.mul(&sum_flipped));
            let odd = theta_odd
                .mul(&sum_aligned)
                .add(&theta_even.mul(&sum_flipped));
            Ok(StringPair {
                even,
                odd: Some(odd),
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn coeffs(s: &QSeries, upto: i64) -> Vec<Rational> {
        (0..=upto).map(|k| s.coeff_at_order(k).unwrap()).collect()
    }

    #[test]
    fn sl2_32_string_is_colored_partitions() {
        let lvl = AdmissibleLevel::sl2(3, 2).unwrap();
        let lab = MinimalLabel::new(&lvl, 1, 1).unwrap();
        let s = relaxed_string_function(&lvl, &lab, 6, false).unwrap();
        assert_eq!(
            coeffs(&s.even, 3),
            vec![rat(1, 1), rat(2, 1), rat(5, 1), rat(10, 1)]
        );
        // Base carries -c/24 + Delta = 1/24 - 1/8 = -1/12.
        assert_eq!(s.even.base(), &rat(-1, 12));
        // Raw variant starts at Delta.
        let raw = relaxed_string_function(&lvl, &lab, 4, true).unwrap();
        assert_eq!(raw.even.base(), &rat(-1, 8));
    }

    #[test]
    fn bgg_equals_closed_form_sl2() {
        for (u, v) in [(3i64, 2i64), (5, 2), (4, 3)] {
            let lvl = AdmissibleLevel::sl2(u, v).unwrap();
            for r in 1..u {
                for s in 1..v {
                    let lab = MinimalLabel::new(&lvl, r, s).unwrap();
                    let bgg = bgg_limit_string_function(&lvl, &lab, 6).unwrap();
                    let closed = relaxed_string_function(&lvl, &lab, 6, false).unwrap();
                    assert!(
                        bgg.even.eq_to_truncation(&closed.even),
                        "mismatch at ({u},{v},{r},{s}): {:?}",
                        bgg.even.first_difference(&closed.even)
                    );
                }
            }
        }
    }

    #[test]
    fn bgg_equals_closed_form_osp_both_levels() {
        // (5,3) has odd u, so the Ramond supercharacter signs alternate.
        for (u, v) in [(2i64, 4i64), (4, 2), (5, 3)] {
            let lvl = AdmissibleLevel::osp12(u, v).unwrap();
            for r in 1..u {
                for s in 1..v {
                    let lab = MinimalLabel::new(&lvl, r, s).unwrap();
                    let bgg = bgg_limit_string_function(&lvl, &lab, 4).unwrap();
                    let closed = relaxed_string_function(&lvl, &lab, 4, false).unwrap();
                    assert!(
                        bgg.even.eq_to_truncation(&closed.even),
                        "even mismatch at ({u},{v},{r},{s}): {:?}",
                        bgg.even.first_difference(&closed.even)
                    );
                    match (&bgg.odd, &closed.odd) {
                        (None, None) => {}
                        (Some(a), Some(b)) => assert!(
                            a.eq_to_truncation(b),
                            "odd mismatch at ({u},{v},{r},{s}): {:?}",
                            a.first_difference(b)
                        ),
                        _ => panic!("odd-series presence mismatch at ({u},{v},{r},{s})"),
                    }
                }
            }
        }
    }

    #[test]
    fn string_coefficients_are_nonnegative_integers() {
        let check = |s: &QSeries| {
            for (e, c) in s.terms() {
                assert!(
                    c.is_integer() && !c.is_negative(),
                    "bad coefficient {c} at {e}"
                );
            }
        };
        for (u, v) in [(3i64, 2i64), (5, 2), (4, 3)] {
            let lvl = AdmissibleLevel::sl2(u, v).unwrap();
            for r in 1..u {
                for s in 1..v {
                    let lab = MinimalLabel::new(&lvl, r, s).unwrap();
                    let pair = relaxed_string_function(&lvl, &lab, 6, false).unwrap();
                    check(&pair.even);
                }
            }
        }
        for (u, v) in [(2i64, 4i64), (4, 2)] {
            let lvl = AdmissibleLevel::osp12(u, v).unwrap();
            for r in 1..u {
                for s in 1..v {
                    let lab = MinimalLabel::new(&lvl, r, s).unwrap();
                    let pair = relaxed_string_function(&lvl, &lab, 6, false).unwrap();
                    check(&pair.even);
                    if let Some(odd) = &pair.odd {
                        check(odd);
                    }
                }
            }
        }
    }

    #[test]
    fn ns_24_string_coefficients() {
        let lvl = AdmissibleLevel::osp12(2, 4).unwrap();
        let lab = MinimalLabel::new(&lvl, 1, 2).unwrap();
        let s = relaxed_string_function(&lvl, &lab, 5, false).unwrap();
        assert!(s.odd.is_none());
        assert_eq!(
            coeffs(&s.even, 3),
            vec![rat(1, 1), rat(3, 1), rat(8, 1), rat(19, 1)]
        );
        let bgg = bgg_limit_string_function(&lvl, &lab, 5).unwrap();
        assert!(bgg.even.eq_to_truncation(&s.even));
    }

    #[test]
    fn ramond_24_even_odd_coefficients() {
        let lvl = AdmissibleLevel::osp12(2, 4).unwrap();
        let lab = MinimalLabel::new(&lvl, 1, 1).unwrap();
        let s = relaxed_string_function(&lvl, &lab, 5, false).unwrap();
        let odd = s.odd.as_ref().unwrap();
        assert_eq!(
            coeffs(&s.even, 3),
            vec![rat(1, 1), rat(2, 1), rat(6, 1), rat(13, 1)]
        );
        let b0 = s.even.base().clone();
        let odd_vals: Vec<Rational> = (0..4)
            .map(|m| odd.coeff_at(&(&b0 + &rat(2 * m + 1, 2))).unwrap())
            .collect();
        assert_eq!(odd_vals, vec![rat(1, 1), rat(3, 1), rat(8, 1), rat(18, 1)]);
        // Even series occupies integer offsets only, odd half-odd offsets.
        let delta_base = s.even.base();
        for (e, _) in s.even.terms() {
            assert!((&e - delta_base).is_integer());
        }
        for (e, _) in odd.terms() {
            assert!(!(&e - delta_base).is_integer());
        }
        let bgg = bgg_limit_string_function(&lvl, &lab, 5).unwrap();
        assert!(bgg.even.eq_to_truncation(&s.even));
        assert!(bgg.odd.as_ref().unwrap().eq_to_truncation(odd));
    }

    #[test]
    fn supercharacter_is_even_minus_odd() {
        // The supercharacter combination chibar sqrt(theta_4/eta)/eta^2
        // equals the even-part minus the odd-part series.
        let lvl = AdmissibleLevel::osp12(2, 4).unwrap();
        let lab = MinimalLabel::new(&lvl, 1, 1).unwrap();
        let s = relaxed_string_function(&lvl, &lab, 5, false).unwrap();
        let schi = n1_character(2, 4, 1, 1, true, 7).unwrap();
        let expect = schi
            .mul(&sqrt_quotient(4, 7))
            .mul(&eta_power(-2, 7).unwrap());
        let diff = s.even.sub(s.odd.as_ref().unwrap());
        assert!(diff.eq_to_truncation(&expect));
    }

    #[test]
    fn kac_symmetry_of_string_functions() {
        let lvl = AdmissibleLevel::sl2(5, 2).unwrap();
        for r in 1..5 {
            let lab = MinimalLabel::new(&lvl, r, 1).unwrap();
            let dual = lab.kac_dual(&lvl);
            let a = relaxed_string_function(&lvl, &lab, 5, false).unwrap();
            let b = relaxed_string_function(&lvl, &dual, 5, false).unwrap();
            assert!(a.even.eq_to_truncation(&b.even));
        }
        let lvl = AdmissibleLevel::osp12(2, 4).unwrap();
        let lab = MinimalLabel::new(&lvl, 1, 1).unwrap();
        let dual = lab.kac_dual(&lvl);
        let a = relaxed_string_function(&lvl, &lab, 4, false).unwrap();
        let b = relaxed_string_function(&lvl, &dual, 4, false).unwrap();
        assert!(a.even.eq_to_truncation(&b.even));
        assert!(a
            .odd
            .as_ref()
            .unwrap()
            .eq_to_truncation(b.odd.as_ref().unwrap()));
    }
}
