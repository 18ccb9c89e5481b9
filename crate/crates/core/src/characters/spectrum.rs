//! Admissible levels and their (r,s)-indexed spectra.

use num_integer::Integer;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::finite::{AlgebraKind, CasimirParam, DynkinLabel, GroundFamily, Sector};

/// An admissible level, parametrized by coprime data `(u, v)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdmissibleLevel {
    pub kind: AlgebraKind,
    pub u: i64,
    pub v: i64,
    pub level: Rational,
    /// Central charge of the corresponding simple vertex operator
    /// (super)algebra.
    pub c: Rational,
}

impl AdmissibleLevel {
    /// sl(2): `k + 2 = u/v` with `u >= 2`, `v >= 1`, `gcd(u,v) = 1`.
    pub fn sl2(u: i64, v: i64) -> Result<Self> {
        if u < 2 || v < 1 || u.gcd(&v) != 1 {
            return Err(Error::InvalidLevel(format!(
                "sl2 admissibility requires u >= 2, v >= 1, gcd(u,v) = 1; got ({u},{v})"
            )));
        }
        let level = &Rational::new(u, v) - &Rational::int(2);
        // c = 3k/(k+2) = 3 - 6v/u.
        let c = &Rational::int(3) - &Rational::new(6 * v, u);
        Ok(AdmissibleLevel {
            kind: AlgebraKind::Sl2,
            u,
            v,
            level,
            c,
        })
    }

    /// osp(1|2): `k + 3/2 = u/(2v)` with `u >= 2`, `v >= 1`, `(u-v)/2` an
    /// integer coprime to `v`.
    pub fn osp12(u: i64, v: i64) -> Result<Self> {
        if u < 2 || v < 1 || (u - v) % 2 != 0 || ((u - v) / 2).gcd(&v) != 1 {
            return Err(Error::InvalidLevel(format!(
                "osp(1|2) admissibility requires u >= 2, v >= 1, (u-v)/2 an integer coprime to v; got ({u},{v})"
            )));
        }
        let level = &Rational::new(u, 2 * v) - &Rational::new(3, 2);
        // c = k/(k+3/2) = 1 - 3v/u.
        let c = &Rational::one() - &Rational::new(3 * v, u);
        Ok(AdmissibleLevel {
            kind: AlgebraKind::Osp12,
            u,
            v,
            level,
            c,
        })
    }

    pub fn new(kind: AlgebraKind, u: i64, v: i64) -> Result<Self> {
        match kind {
            AlgebraKind::Sl2 => AdmissibleLevel::sl2(u, v),
            AlgebraKind::Osp12 => AdmissibleLevel::osp12(u, v),
        }
    }

    /// `r - u s / v` as an exact rational, for arbitrary integer `r`.
    fn r_shift(&self, r: i64, s: i64) -> Rational {
        &Rational::int(r) - &Rational::new(self.u * s, self.v)
    }

    /// `q_{r,s}` extended to arbitrary integer first index.
    pub fn q_rs(&self, r: i64, s: i64) -> Rational {
        let x = self.r_shift(r, s);
        match self.kind {
            AlgebraKind::Sl2 => &(&(&x * &x) - &Rational::one()) / &Rational::int(2),
            AlgebraKind::Osp12 => &(&(&x * &x) / &Rational::int(8)) - &Rational::new(1, 2),
        }
    }

    /// `sigma_{r,s}` (osp(1|2), Neveu-Schwarz labels) for arbitrary `r`.
    pub fn sigma_rs(&self, r: i64, s: i64) -> Rational {
        &self.r_shift(r, s) / &Rational::int(2)
    }

    /// The distinguished coset representative `mu_{r,s}` in Dynkin units.
    pub fn mu_rs(&self, r: i64, s: i64) -> Rational {
        match self.kind {
            AlgebraKind::Sl2 => &self.r_shift(r, s) - &Rational::one(),
            AlgebraKind::Osp12 => {
                if (r - s).rem_euclid(2) == 1 {
                    // Neveu-Schwarz labels.
                    &(&self.r_shift(r, s) - &Rational::one()) / &Rational::int(2)
                } else {
                    &(&self.r_shift(r, s) - &Rational::int(2)) / &Rational::int(2)
                }
            }
        }
    }

    /// Sugawara conformal weight of the ground states of the relaxed module
    /// with label `(r, s)` (indices may run over the extended BGG range).
    pub fn delta_rs(&self, r: i64, s: i64) -> Rational {
        match self.kind {
            AlgebraKind::Sl2 => {
                // Delta = q / (2(k+2)), k+2 = u/v.
                &self.q_rs(r, s) / &Rational::new(2 * self.u, self.v)
            }
            AlgebraKind::Osp12 => {
                let shifted = Rational::new(self.u, 2 * self.v); // k + 3/2
                if (r - s).rem_euclid(2) == 1 {
                    let sig = self.sigma_rs(r, s);
                    let num = &(&sig * &sig) - &Rational::new(1, 4);
                    &num / &(&Rational::int(4) * &shifted)
                } else {
                    let num = &self.q_rs(r, s) - &(&self.level / &Rational::int(4));
                    &num / &(&Rational::int(2) * &shifted)
                }
            }
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "algebra": self.kind.to_string(),
            "u": self.u,
            "v": self.v,
            "level": self.level.to_string(),
            "c": self.c.to_string(),
        })
    }
}

/// A spectrum label `(r, s)` with `1 <= r <= u-1`, `1 <= s <= v-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MinimalLabel {
    pub r: i64,
    pub s: i64,
}

impl MinimalLabel {
    pub fn new(lvl: &AdmissibleLevel, r: i64, s: i64) -> Result<Self> {
        if r < 1 || r > lvl.u - 1 || s < 1 || s > lvl.v - 1 {
            return Err(Error::InvalidLabel(format!(
                "(r,s) = ({r},{s}) outside [1,{}] x [1,{}]",
                lvl.u - 1,
                lvl.v - 1
            )));
        }
        Ok(MinimalLabel { r, s })
    }

    /// Sector selected by the parity of `r - s` (osp(1|2) only; sl(2) data
    /// is always untwisted).
    pub fn sector(&self, kind: AlgebraKind) -> Sector {
        match kind {
            AlgebraKind::Sl2 => Sector::Ns,
            AlgebraKind::Osp12 => {
                if (self.r - self.s).rem_euclid(2) == 1 {
                    Sector::Ns
                } else {
                    Sector::R
                }
            }
        }
    }

    pub fn kac_dual(&self, lvl: &AdmissibleLevel) -> MinimalLabel {
        MinimalLabel {
            r: lvl.u - self.r,
            s: lvl.v - self.s,
        }
    }
}

/// Spectrum data of a single label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumData {
    pub sector: Sector,
    pub param: CasimirParam,
    pub mu_rs: DynkinLabel,
    pub delta: Rational,
}

/// The Casimir parameter, distinguished coset representative and Sugawara
/// conformal weight of the label.
pub fn spectrum_params(lvl: &AdmissibleLevel, lab: &MinimalLabel) -> Result<SpectrumData> {
    MinimalLabel::new(lvl, lab.r, lab.s)?;
    let sector = lab.sector(lvl.kind);
    let param = match (lvl.kind, sector) {
        (AlgebraKind::Osp12, Sector::Ns) => CasimirParam::Sigma(lvl.sigma_rs(lab.r, lab.s)),
        _ => CasimirParam::Q(lvl.q_rs(lab.r, lab.s)),
    };
    Ok(SpectrumData {
        sector,
        param,
        mu_rs: DynkinLabel(lvl.mu_rs(lab.r, lab.s)),
        delta: lvl.delta_rs(lab.r, lab.s),
    })
}

/// The ground family of the (nonsimple) relaxed module at the distinguished
/// coset of a label.
pub fn ground_family(lvl: &AdmissibleLevel, lab: &MinimalLabel) -> Result<GroundFamily> {
    let data = spectrum_params(lvl, lab)?;
    GroundFamily::new(
        lvl.kind,
        data.sector,
        data.mu_rs.clone(),
        data.param.clone(),
        lvl.level.clone(),
    )
}

/// A ground family with the same parameter but an arbitrary coset
/// representative (used for generic-coset sampling).
pub fn ground_family_at(
    lvl: &AdmissibleLevel,
    lab: &MinimalLabel,
    rep: Rational,
) -> Result<GroundFamily> {
    let data = spectrum_params(lvl, lab)?;
    GroundFamily::new(
        lvl.kind,
        data.sector,
        DynkinLabel(rep),
        data.param,
        lvl.level.clone(),
    )
}
