//! N=1 superconformal minimal-model characters and supercharacters.

use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::qseries::{eta_power, sqrt_quotient, QSeries};

use super::indexed_sum;

/// `Delta^{N=1}_{r,s}` for the `(u,v)` N=1 minimal model; the sector
/// addendum depends only on the parity of `r - s`, which is constant along
/// the character sums.
pub fn delta_n1(u: i64, v: i64, r: i64, s: i64) -> Rational {
    let main = Rational::new((v * r - u * s).pow(2) - (v - u).pow(2), 8 * u * v);
    if (r - s).rem_euclid(2) == 1 {
        &main + &Rational::new(1, 16)
    } else {
        main
    }
}

/// `c^{N=1} = 3/2 - 3(v-u)^2/(uv)`.
pub fn c_n1(u: i64, v: i64) -> Rational {
    &Rational::new(3, 2) - &Rational::new(3 * (v - u).pow(2), u * v)
}

/// Character (and supercharacter) of the simple highest-weight N=1 module
/// labelled `(r,s)`.
///
/// For `r - s` odd (the Ramond sector of the N=1 model) the character uses
/// the `theta_2` square root; `super_character` is not defined there. For
/// `r - s` even the Neveu-Schwarz character uses `theta_3` and the
/// supercharacter `theta_4` with the alternating sign pattern.
pub fn n1_character(
    u: i64,
    v: i64,
    r: i64,
    s: i64,
    super_character: bool,
    orders: u32,
) -> Result<QSeries> {
    if u < 2 || v < 2 || r < 1 || r > u - 1 || s < 1 || s > v - 1 {
        return Err(Error::InvalidLabel(format!(
            "N=1 label ({r},{s}) out of range for ({u},{v})"
        )));
    }
    let base = delta_n1(u, v, r, s);
    let trunc = &base + &Rational::int(orders as i64 + 1);
    let ramond_label = (r - s).rem_euclid(2) == 1;
    if ramond_label && super_character {
        return Err(Error::InvalidLabel(
            "supercharacters are defined only for the theta_3/theta_4 branch (r - s even)".into(),
        ));
    }
    let margin = orders + 2;
    let (sum, root, prefactor_exp) = if ramond_label {
        let sum = indexed_sum(&trunc, |n| {
            vec![
                (delta_n1(u, v, 2 * n * u + r, s), Rational::one()),
                (delta_n1(u, v, 2 * n * u - r, s), Rational::int(-1)),
            ]
        });
        // q^{-c/24}/eta * sqrt(theta_2 / 2 eta).
        let pre = &(-&c_n1(u, v)) / &Rational::int(24);
        (sum, sqrt_quotient(2, margin), pre)
    } else {
        // The lowered term enters with -(-1)^r: positive for odd r.
        let sign_r = if r.rem_euclid(2) == 1 { 1 } else { -1 };
        let sum = if super_character {
            indexed_sum(&trunc, |n| {
                let sign_n = if (n * u).rem_euclid(2) == 1 { -1 } else { 1 };
                vec![
                    (delta_n1(u, v, 2 * n * u + r, s), Rational::int(sign_n)),
                    (
                        delta_n1(u, v, 2 * n * u - r, s),
                        Rational::int(sign_n * sign_r),
                    ),
                ]
            })
        } else {
            indexed_sum(&trunc, |n| {
                vec![
                    (delta_n1(u, v, 2 * n * u + r, s), Rational::one()),
                    (delta_n1(u, v, 2 * n * u - r, s), Rational::int(-1)),
                ]
            })
        };
        let pre = &(&Rational::new(3, 2) - &c_n1(u, v)) / &Rational::int(24);
        let root = if super_character {
            sqrt_quotient(4, margin)
        } else {
            sqrt_quotient(3, margin)
        };
        (sum, root, pre)
    };
    Ok(eta_power(-1, margin)?
        .mul(&root)
        .mul(&sum)
        .shifted(&prefactor_exp))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn is_constant_one(s: &QSeries, through: i64) -> bool {
        if s.coeff_at(&Rational::zero()).unwrap() != Rational::one() {
            return false;
        }
        let one = QSeries::monomial(Rational::zero(), Rational::one(), through as u32);
        s.eq_to_truncation(&one)
    }

    #[test]
    fn trivial_n1_model_at_24() {
        // (u,v) = (2,4) has c^{N=1} = 0: all characters and supercharacters
        // collapse to the constant 1.
        let chi = n1_character(2, 4, 1, 2, false, 8).unwrap();
        assert!(is_constant_one(&chi, 8), "theta_2 branch: {chi}");
        let chi = n1_character(2, 4, 1, 1, false, 8).unwrap();
        assert!(is_constant_one(&chi, 8), "theta_3 branch: {chi}");
        let schi = n1_character(2, 4, 1, 1, true, 8).unwrap();
        assert!(is_constant_one(&schi, 8), "theta_4 branch: {schi}");
        let chi = n1_character(2, 4, 1, 3, false, 8).unwrap();
        assert!(is_constant_one(&chi, 8));
    }

    #[test]
    fn super_character_rejected_on_theta2_branch() {
        assert!(n1_character(2, 4, 1, 2, true, 4).is_err());
    }

    #[test]
    fn leading_term_is_one() {
        // (8,2) is osp-admissible with k = 1/2; the n = 0 term dominates.
        let chi = n1_character(8, 2, 1, 1, false, 6).unwrap();
        let base = chi.base().clone();
        assert_eq!(chi.coeff_at(&base).unwrap(), Rational::one());
        assert_eq!(
            base,
            &(&delta_n1(8, 2, 1, 1)
                + &(&(&Rational::new(3, 2) - &c_n1(8, 2)) / &Rational::int(24)))
                + &(&Rational::new(-1, 24) + &Rational::new(-1, 48))
        );
    }
}
