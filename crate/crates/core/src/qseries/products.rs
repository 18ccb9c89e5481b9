//! Eta and theta products as exact truncated series.
//!
//! Theta conventions: `theta_j(z;q) = sum_n z^n q^(n^2/2)` over `n` in
//! `Z + 1/2` (j = 2), in `Z` (j = 3), and in `Z` with alternating signs
//! (j = 4), specialized at `z = 1`. These are the unique conventions for
//! which the Neveu-Schwarz Verma limiting string function matches the
//! manifest PBW count; the unit tests pin them through the sum forms.

use crate::error::Result;
use crate::exact::Rational;

use super::series::QSeries;

/// `prod_{i=1}^inf (1 - q^i)` truncated after `orders` integer powers.
pub fn euler_product(orders: u32) -> QSeries {
    sparse_product(orders, 1, |i| (Rational::int(i as i64), Rational::int(-1)))
}

/// Product `prod_i (1 + c_i q^{e_i})` with one factor per `i >= start`,
/// truncated after `orders` integer powers; factors beyond the truncation
/// are dropped.
fn sparse_product(
    orders: u32,
    start: u64,
    factor: impl Fn(u64) -> (Rational, Rational),
) -> QSeries {
    let mut denom: u64 = 1;
    let probe = factor(start).0;
    let d: u64 = probe.denom().try_into().unwrap_or(1);
    denom = denom.max(d);
    let mut acc = QSeries::zero(denom, Rational::zero(), (orders as u64 * denom) as usize);
    // Start from the constant series 1 on the right lattice.
    acc = acc.add(&QSeries::one(orders));
    let bound = Rational::int(orders as i64);
    let mut i = start;
    loop {
        let (exp, coeff) = factor(i);
        if exp > bound {
            break;
        }
        let one_plus = QSeries::one(orders).add(&QSeries::monomial(exp, coeff, orders));
        acc = acc.mul(&one_plus);
        i += 1;
    }
    acc
}

/// `eta(q)^p = q^(p/24) prod (1-q^i)^p`, exact through `p/24 + orders`.
pub fn eta_power(p: i64, orders: u32) -> Result<QSeries> {
    // Build with margin so that negative powers keep full precision.
    let part = euler_product(orders).pow(p)?;
    Ok(part.shifted(&Rational::new(p, 24)))
}

/// The Jacobi theta function `theta_j(1;q)`, `j` in {2, 3, 4}, as its
/// product form:
///
/// * `theta_2(1;q) = 2 q^(1/8) prod (1-q^n)(1+q^n)^2`
/// * `theta_3(1;q) = prod (1-q^n)(1+q^(n-1/2))^2`
/// * `theta_4(1;q) = prod (1-q^n)(1-q^(n-1/2))^2`
pub fn theta_at_one(j: u8, orders: u32) -> QSeries {
    let euler = euler_product(orders);
    match j {
        2 => {
            let plus = sparse_product(orders, 1, |i| (Rational::int(i as i64), Rational::one()));
            euler
                .mul(&plus)
                .mul(&plus)
                .scaled(&Rational::int(2))
                .shifted(&Rational::new(1, 8))
        }
        3 => {
            let half = sparse_product(orders, 1, |i| {
                (Rational::new(2 * i as i64 - 1, 2), Rational::one())
            });
            euler.mul(&half).mul(&half)
        }
        4 => {
            let half = sparse_product(orders, 1, |i| {
                (Rational::new(2 * i as i64 - 1, 2), Rational::int(-1))
            });
            euler.mul(&half).mul(&half)
        }
        _ => panic!("theta index must be 2, 3 or 4"),
    }
}

/// The closed product forms of the square roots appearing in the character
/// formulas:
///
/// * `sqrt(theta_2/2eta) = q^(1/24) prod (1+q^n)`
/// * `sqrt(theta_3/eta)  = q^(-1/48) prod (1+q^(n-1/2))`
/// * `sqrt(theta_4/eta)  = q^(-1/48) prod (1-q^(n-1/2))`
pub fn sqrt_quotient(j: u8, orders: u32) -> QSeries {
    match j {
        2 => sparse_product(orders, 1, |i| (Rational::int(i as i64), Rational::one()))
            .shifted(&Rational::new(1, 24)),
        3 => sparse_product(orders, 1, |i| {
            (Rational::new(2 * i as i64 - 1, 2), Rational::one())
        })
        .shifted(&Rational::new(-1, 48)),
        4 => sparse_product(orders, 1, |i| {
            (Rational::new(2 * i as i64 - 1, 2), Rational::int(-1))
        })
        .shifted(&Rational::new(-1, 48)),
        _ => panic!("sqrt-quotient index must be 2, 3 or 4"),
    }
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

    /// Pentagonal-number sum form of the Euler product.
    fn euler_sum_oracle(orders: u32) -> QSeries {
        let mut terms = Vec::new();
        let bound = orders as i64;
        let mut k = 1i64;
        terms.push((Rational::zero(), Rational::one()));
        loop {
            let e1 = k * (3 * k - 1) / 2;
            let e2 = k * (3 * k + 1) / 2;
            if e1 > bound && e2 > bound {
                break;
            }
            let sign = if k % 2 == 0 { 1 } else { -1 };
            if e1 <= bound {
                terms.push((Rational::int(e1), Rational::int(sign)));
            }
            if e2 <= bound {
                terms.push((Rational::int(e2), Rational::int(sign)));
            }
            k += 1;
        }
        QSeries::from_terms(&terms, &Rational::int(bound))
    }

    #[test]
    fn euler_product_matches_pentagonal_sum() {
        assert!(euler_product(12).eq_to_truncation(&euler_sum_oracle(12)));
        assert_eq!(
            coeffs(&euler_product(5), 5),
            vec![
                rat(1, 1),
                rat(-1, 1),
                rat(-1, 1),
                rat(0, 1),
                rat(0, 1),
                rat(1, 1)
            ]
        );
    }

    #[test]
    fn eta_inverse_cubed_counts_colored_partitions() {
        let s = eta_power(-3, 6).unwrap();
        assert_eq!(s.base(), &rat(-1, 8));
        assert_eq!(
            coeffs(&s, 4),
            vec![rat(1, 1), rat(3, 1), rat(9, 1), rat(22, 1), rat(51, 1)]
        );
    }

    #[test]
    fn eta_power_zero_is_one() {
        let s = eta_power(0, 4).unwrap();
        assert!(s.eq_to_truncation(&QSeries::one(4)));
    }

    #[test]
    fn eta_power_additivity() {
        for (a, b) in [(1i64, 1i64), (-2, 3), (-3, -1), (4, -2)] {
            let lhs = eta_power(a, 8).unwrap().mul(&eta_power(b, 8).unwrap());
            let rhs = eta_power(a + b, 8).unwrap();
            assert!(lhs.eq_to_truncation(&rhs), "eta additivity at ({a},{b})");
        }
    }

    /// Sum forms of the specialized thetas.
    fn theta_sum_oracle(j: u8, orders: u32) -> QSeries {
        let bound = Rational::int(orders as i64);
        let mut terms: Vec<(Rational, Rational)> = Vec::new();
        match j {
            2 => {
                // 2 sum_{m>=0} q^((m+1/2)^2/2)
                let mut m = 0i64;
                loop {
                    let e = rat((2 * m + 1) * (2 * m + 1), 8);
                    if e > bound {
                        break;
                    }
                    terms.push((e, Rational::int(2)));
                    m += 1;
                }
            }
            3 | 4 => {
                terms.push((Rational::zero(), Rational::one()));
                let mut m = 1i64;
                loop {
                    let e = rat(m * m, 2);
                    if e > bound {
                        break;
                    }
                    let c = if j == 4 && m % 2 == 1 { -2 } else { 2 };
                    terms.push((e, Rational::int(c)));
                    m += 1;
                }
            }
            _ => unreachable!(),
        }
        QSeries::from_terms(&terms, &bound)
    }

    #[test]
    fn theta_products_match_sum_forms() {
        for j in [2u8, 3, 4] {
            let prod = theta_at_one(j, 10);
            let sum = theta_sum_oracle(j, 10);
            assert!(prod.eq_to_truncation(&sum), "theta_{j} product vs sum");
        }
    }

    #[test]
    fn theta2_halved_orders() {
        let s = theta_at_one(2, 5).scaled(&rat(1, 2));
        assert_eq!(s.base(), &rat(1, 8));
        assert_eq!(
            coeffs(&s, 3),
            vec![rat(1, 1), rat(1, 1), rat(0, 1), rat(1, 1)]
        );
    }

    #[test]
    fn theta3_minus_theta4_has_only_half_odd_exponents() {
        let d = theta_at_one(3, 8).sub(&theta_at_one(4, 8));
        for (e, _) in d.terms() {
            assert!(!e.is_integer(), "unexpected integer exponent {e}");
        }
    }

    #[test]
    fn jacobi_quartic_identity() {
        // theta_3^4 - theta_4^4 - theta_2^4 = 0 through order 10.
        let t2 = theta_at_one(2, 12).pow(4).unwrap();
        let t3 = theta_at_one(3, 12).pow(4).unwrap();
        let t4 = theta_at_one(4, 12).pow(4).unwrap();
        let lhs = t3.sub(&t4).sub(&t2);
        let zero = QSeries::zero(8, Rational::zero(), 80);
        assert!(lhs.eq_to_truncation(&zero));
    }

    #[test]
    fn sqrt_quotients_square_back() {
        let orders = 8;
        let eta = eta_power(1, orders).unwrap();
        let q2 = theta_at_one(2, orders).mul(&eta.scaled(&rat(2, 1)).invert().unwrap());
        assert!(sqrt_quotient(2, orders)
            .pow(2)
            .unwrap()
            .eq_to_truncation(&q2));
        let q3 = theta_at_one(3, orders).mul(&eta.invert().unwrap());
        assert!(sqrt_quotient(3, orders)
            .pow(2)
            .unwrap()
            .eq_to_truncation(&q3));
        let q4 = theta_at_one(4, orders).mul(&eta.invert().unwrap());
        assert!(sqrt_quotient(4, orders)
            .pow(2)
            .unwrap()
            .eq_to_truncation(&q4));
    }

    #[test]
    fn sqrt3_first_coefficients() {
        let s = sqrt_quotient(3, 4);
        assert_eq!(s.coeff_at_half_order(0).unwrap(), rat(1, 1));
        assert_eq!(s.coeff_at_half_order(1).unwrap(), rat(1, 1));
        assert_eq!(s.coeff_at_half_order(2).unwrap(), rat(0, 1));
    }

    #[test]
    fn sqrt4_is_sqrt3_with_alternating_signs() {
        let s3 = sqrt_quotient(3, 6);
        let s4 = sqrt_quotient(4, 6);
        for k in 0..=12i64 {
            let a = s3.coeff_at_half_order(k).unwrap();
            let b = s4.coeff_at_half_order(k).unwrap();
            let sign = if k % 2 == 0 { 1 } else { -1 };
            assert_eq!(a.clone(), &b * &Rational::int(sign));
        }
    }
}
