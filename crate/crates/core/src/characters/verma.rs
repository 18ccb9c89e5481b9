//! Verma string functions: exact finite-weight counts and the closed-form
//! limits.

use crate::affine::hw_weight_basis;
use crate::error::Result;
use crate::exact::Rational;
use crate::finite::{casimir_pair, sugawara_delta, AlgebraKind, CasimirParam, Sector};
use crate::qseries::{euler_product, theta_at_one, QSeries};

/// Limiting string function of a Verma module, as a closed product form.
#[derive(Clone, Debug)]
pub enum VermaLimit {
    /// sl(2) and Neveu-Schwarz: a single series.
    Single(QSeries),
    /// Ramond: the even and odd weight-coset limits differ.
    EvenOdd { even: QSeries, odd: QSeries },
}

impl VermaLimit {
    pub fn single(&self) -> &QSeries {
        match self {
            VermaLimit::Single(s) => s,
            VermaLimit::EvenOdd { .. } => panic!("Ramond limit has an even/odd pair"),
        }
    }

    pub fn even(&self) -> &QSeries {
        match self {
            VermaLimit::Single(s) => s,
            VermaLimit::EvenOdd { even, .. } => even,
        }
    }

    pub fn odd(&self) -> &QSeries {
        match self {
            VermaLimit::Single(s) => s,
            VermaLimit::EvenOdd { odd, .. } => odd,
        }
    }
}

/// Sugawara conformal weight of the highest-weight vector at label `hw_t`.
pub fn delta_of_hw(
    kind: AlgebraKind,
    sector: Sector,
    hw_t: &Rational,
    level: &Rational,
) -> Result<Rational> {
    let param = match (kind, sector) {
        (AlgebraKind::Osp12, Sector::Ns) => {
            // The super-Casimir eigenvalue on a highest-weight vector.
            CasimirParam::Sigma(hw_t + &Rational::new(1, 2))
        }
        _ => CasimirParam::Q(casimir_pair(AlgebraKind::Sl2, Sector::Ns, hw_t)),
    };
    sugawara_delta(kind, sector, &param, level)
}

/// The exact string function of the highest-weight Verma at weight `nu`,
/// computed by counting PBW monomials grade by grade (Verma weight spaces
/// are free, so no Shapovalov data is needed). The series base is the
/// Sugawara conformal weight of the highest-weight vector.
pub fn verma_string_function(
    kind: AlgebraKind,
    sector: Sector,
    hw_t: &Rational,
    level: &Rational,
    nu: &Rational,
    orders: u32,
) -> Result<QSeries> {
    let delta = delta_of_hw(kind, sector, hw_t, level)?;
    let lattice: u64 = if sector == Sector::R { 2 } else { 1 };
    let mut s = QSeries::zero(lattice, delta.clone(), (orders as u64 * lattice) as usize);
    let w_rel = match (nu - hw_t).to_i64() {
        Some(w) => w,
        None => return Ok(s),
    };
    let mut terms: Vec<(Rational, Rational)> = Vec::new();
    for grade2 in 0..=(2 * orders as u64) {
        let count = hw_weight_basis(kind, sector, grade2, w_rel).len();
        if count > 0 {
            terms.push((
                &delta + &Rational::new(grade2 as i64, 2),
                Rational::int(count as i64),
            ));
        }
    }
    let trunc = &delta + &Rational::int(orders as i64);
    s = s.add(&QSeries::from_terms(&terms, &trunc));
    Ok(s)
}

/// The closed-form limiting string function of a Verma module with ground
/// conformal weight `delta`:
///
/// * sl(2): `q^delta / prod (1-q^n)^3`
/// * Neveu-Schwarz: `q^delta prod (1+q^n)^2 / (1-q^n)^3`
/// * Ramond: `q^delta (theta_3 ± theta_4) / (2 prod (1-q^n)^4)` (even/odd)
pub fn verma_limit_string_function(
    kind: AlgebraKind,
    sector: Sector,
    delta: &Rational,
    orders: u32,
) -> Result<VermaLimit> {
    let euler = euler_product(orders + 1);
    match (kind, sector) {
        (AlgebraKind::Osp12, Sector::R) => {
            let quarter = euler.pow(-4)?;
            let half = Rational::new(1, 2);
            let t3 = theta_at_one(3, orders + 1);
            let t4 = theta_at_one(4, orders + 1);
            let even = t3.add(&t4).scaled(&half).mul(&quarter).shifted(delta);
            let odd = t3.sub(&t4).scaled(&half).mul(&quarter).shifted(delta);
            Ok(VermaLimit::EvenOdd { even, odd })
        }
        (AlgebraKind::Osp12, Sector::Ns) => {
            let plus = crate::qseries::sqrt_quotient(2, orders + 1).shifted(&Rational::new(-1, 24));
            Ok(VermaLimit::Single(
                plus.mul(&plus).mul(&euler.pow(-3)?).shifted(delta),
            ))
        }
        (AlgebraKind::Sl2, _) => Ok(VermaLimit::Single(euler.pow(-3)?.shifted(delta))),
    }
}
