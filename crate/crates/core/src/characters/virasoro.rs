//! Virasoro minimal-model characters.

use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::qseries::{eta_power, QSeries};

use super::indexed_sum;

/// `Delta^Vir_{r,s}` for the `(u,v)` minimal model, any integer `r`.
pub fn delta_vir(u: i64, v: i64, r: i64, s: i64) -> Rational {
    Rational::new((v * r - u * s).pow(2) - (v - u).pow(2), 4 * u * v)
}

/// `c^Vir = 1 - 6(v-u)^2/(uv)`.
pub fn c_vir(u: i64, v: i64) -> Rational {
    &Rational::one() - &Rational::new(6 * (v - u).pow(2), u * v)
}

/// Character of the simple highest-weight Virasoro module labelled `(r,s)`
/// in the `(u,v)` minimal model:
///
/// `chi(q) = q^((1-c)/24) / eta * sum_n (q^(D_{2nu+r,s}) - q^(D_{2nu-r,s}))`.
pub fn virasoro_character(u: i64, v: i64, r: i64, s: i64, orders: u32) -> Result<QSeries> {
    if u < 2 || v < 2 || r < 1 || r > u - 1 || s < 1 || s > v - 1 {
        return Err(Error::InvalidLabel(format!(
            "Virasoro label ({r},{s}) out of range for ({u},{v})"
        )));
    }
    let base = delta_vir(u, v, r, s);
    let trunc = &base + &Rational::int(orders as i64 + 1);
    let sum = indexed_sum(&trunc, |n| {
        vec![
            (delta_vir(u, v, 2 * n * u + r, s), Rational::one()),
            (delta_vir(u, v, 2 * n * u - r, s), Rational::int(-1)),
        ]
    });
    // (1-c)/24 combines with the eta prefactor to a plain Euler quotient.
    let prefactor_exp = &(&Rational::one() - &c_vir(u, v)) / &Rational::int(24);
    Ok(eta_power(-1, orders + 1)?.mul(&sum).shifted(&prefactor_exp))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn coeffs(s: &QSeries, n: i64) -> Vec<Rational> {
        (0..=n).map(|k| s.coeff_at_order(k).unwrap()).collect()
    }

    #[test]
    fn trivial_model_32() {
        // chi_{1,1} of (3,2) is the constant series 1; the pentagonal
        // cancellation must hold through high order.
        let chi = virasoro_character(3, 2, 1, 1, 12).unwrap();
        assert_eq!(chi.base(), &Rational::zero());
        for k in 0..=12 {
            let expect = if k == 0 {
                Rational::one()
            } else {
                Rational::zero()
            };
            assert_eq!(chi.coeff_at_order(k).unwrap(), expect, "order {k}");
        }
    }

    #[test]
    fn ising_vacuum() {
        let chi = virasoro_character(4, 3, 1, 1, 6).unwrap();
        assert_eq!(
            coeffs(&chi, 4),
            vec![rat(1, 1), rat(0, 1), rat(1, 1), rat(1, 1), rat(2, 1)]
        );
    }

    #[test]
    fn lee_yang_type_52() {
        let chi = virasoro_character(5, 2, 1, 1, 6).unwrap();
        assert_eq!(
            coeffs(&chi, 6),
            vec![
                rat(1, 1),
                rat(0, 1),
                rat(1, 1),
                rat(1, 1),
                rat(1, 1),
                rat(1, 1),
                rat(2, 1)
            ]
        );
    }

    #[test]
    fn kac_symmetry() {
        for (u, v) in [(3i64, 2i64), (5, 2), (4, 3)] {
            for r in 1..u {
                for s in 1..v {
                    let a = virasoro_character(u, v, r, s, 8).unwrap();
                    let b = virasoro_character(u, v, u - r, v - s, 8).unwrap();
                    assert!(a.eq_to_truncation(&b), "Kac symmetry at ({u},{v},{r},{s})");
                }
            }
        }
    }
}
