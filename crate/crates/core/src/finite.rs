//! Structure data of sl(2) and osp(1|2) and the dense ground-state families.
//!
//! Weights are handled through their Dynkin label `t` (the weight is `t`
//! times the fundamental weight), with the bilinear form normalized so that
//! the even root has squared length 2. All inner products then reduce to
//! rational polynomials in `t`.

use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exact::Rational;

/// Which finite-dimensional algebra the data belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AlgebraKind {
    Sl2,
    Osp12,
}

impl fmt::Display for AlgebraKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraKind::Sl2 => write!(f, "sl2"),
            AlgebraKind::Osp12 => write!(f, "osp12"),
        }
    }
}

/// Integer (Neveu-Schwarz) versus half-integer (Ramond) moding of the odd
/// generators. sl(2) data always uses the untwisted `Ns` tag.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sector {
    Ns,
    R,
}

impl fmt::Display for Sector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sector::Ns => write!(f, "ns"),
            Sector::R => write!(f, "r"),
        }
    }
}

/// Generators of sl(2) (`e,h,f`) and osp(1|2) (`e,x,h,y,f`); `x` and `y` are odd.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Gen {
    E,
    X,
    H,
    Y,
    F,
}

impl Gen {
    pub fn is_odd(self) -> bool {
        matches!(self, Gen::X | Gen::Y)
    }

    /// Adjoint weight in Dynkin-label units.
    pub fn weight_t(self) -> i64 {
        match self {
            Gen::E => 2,
            Gen::X => 1,
            Gen::H => 0,
            Gen::Y => -1,
            Gen::F => -2,
        }
    }

    /// Position in the fixed within-index PBW order `f < y < h < x < e`.
    pub fn order_key(self) -> u8 {
        match self {
            Gen::F => 0,
            Gen::Y => 1,
            Gen::H => 2,
            Gen::X => 3,
            Gen::E => 4,
        }
    }

    pub fn valid_for(self, kind: AlgebraKind) -> bool {
        kind == AlgebraKind::Osp12 || !self.is_odd()
    }

    pub fn all(kind: AlgebraKind) -> &'static [Gen] {
        match kind {
            AlgebraKind::Sl2 => &[Gen::F, Gen::H, Gen::E],
            AlgebraKind::Osp12 => &[Gen::F, Gen::Y, Gen::H, Gen::X, Gen::E],
        }
    }
}

impl PartialOrd for Gen {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Gen {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.order_key().cmp(&other.order_key())
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Gen::E => 'e',
            Gen::X => 'x',
            Gen::H => 'h',
            Gen::Y => 'y',
            Gen::F => 'f',
        };
        write!(f, "{c}")
    }
}

impl FromStr for Gen {
    type Err = Error;
    fn from_str(s: &str) -> Result<Gen> {
        match s {
            "e" => Ok(Gen::E),
            "x" => Ok(Gen::X),
            "h" => Ok(Gen::H),
            "y" => Ok(Gen::Y),
            "f" => Ok(Gen::F),
            _ => Err(Error::Parse(format!("unknown generator `{s}`"))),
        }
    }
}

/// A weight written as `t` times the fundamental weight.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DynkinLabel(pub Rational);

impl fmt::Display for DynkinLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A Casimir (`q`) or super-Casimir (`sigma`) eigenvalue labelling a family
/// of dense modules.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CasimirParam {
    Q(Rational),
    Sigma(Rational),
}

impl CasimirParam {
    pub fn value(&self) -> &Rational {
        match self {
            CasimirParam::Q(v) | CasimirParam::Sigma(v) => v,
        }
    }

    pub fn kind_str(&self) -> &'static str {
        match self {
            CasimirParam::Q(_) => "q",
            CasimirParam::Sigma(_) => "sigma",
        }
    }
}

fn check_gen(kind: AlgebraKind, g: Gen) -> Result<()> {
    if g.valid_for(kind) {
        Ok(())
    } else {
        Err(Error::InvalidGenerator {
            kind: kind.to_string(),
            gen: g.to_string(),
        })
    }
}

/// Super-bracket `[a,b]` (anticommutator iff both generators are odd) as a
/// linear combination of generators.
pub fn bracket(kind: AlgebraKind, a: Gen, b: Gen) -> Result<Vec<(Gen, Rational)>> {
    use Gen::*;
    check_gen(kind, a)?;
    check_gen(kind, b)?;
    let one = Rational::one;
    let int = Rational::int::<i64>;
    let table: Vec<(Gen, Rational)> = match (a, b) {
        // sl(2) part.
        (H, E) => vec![(E, int(2))],
        (E, H) => vec![(E, int(-2))],
        (E, F) => vec![(H, one())],
        (F, E) => vec![(H, int(-1))],
        (H, F) => vec![(F, int(-2))],
        (F, H) => vec![(F, int(2))],
        (E, E) | (H, H) | (F, F) => vec![],
        // Odd part of osp(1|2).
        (E, X) | (X, E) => vec![],
        (H, X) => vec![(X, one())],
        (X, H) => vec![(X, int(-1))],
        (F, X) => vec![(Y, int(-1))],
        (X, F) => vec![(Y, one())],
        (E, Y) => vec![(X, int(-1))],
        (Y, E) => vec![(X, one())],
        (H, Y) => vec![(Y, int(-1))],
        (Y, H) => vec![(Y, one())],
        (F, Y) | (Y, F) => vec![],
        (X, X) => vec![(E, int(2))],
        (X, Y) | (Y, X) => vec![(H, one())],
        (Y, Y) => vec![(F, int(-2))],
    };
    Ok(table)
}

/// The invariant bilinear form, rescaled so that `kappa(h,h) = 2`.
///
/// On the odd part the invariant form is antisymmetric; invariance
/// `kappa([a,b],c) = kappa(a,[b,c])` forces `kappa(x,y) = -kappa(y,x) = 2`
/// in this normalization (the value is pinned by a unit test below).
pub fn killing_form(kind: AlgebraKind, a: Gen, b: Gen) -> Result<Rational> {
    use Gen::*;
    check_gen(kind, a)?;
    check_gen(kind, b)?;
    Ok(match (a, b) {
        (H, H) => Rational::int(2),
        (E, F) | (F, E) => Rational::one(),
        (X, Y) => Rational::int(2),
        (Y, X) => Rational::int(-2),
        _ => Rational::zero(),
    })
}

/// The quadratic invariant attached to a Dynkin label.
///
/// For sl(2) and for osp(1|2) Ramond ground data this is the Casimir pairing
/// `<mu, mu + 2 rho_{sl2}> = t(t+2)/2`; for osp(1|2) Neveu-Schwarz data it is
/// the squared length `|mu|^2 = t^2/2`.
pub fn casimir_pair(kind: AlgebraKind, sector: Sector, t: &Rational) -> Rational {
    match (kind, sector) {
        (AlgebraKind::Osp12, Sector::Ns) => &(t * t) / &Rational::int(2),
        _ => &(t * &(t + &Rational::int(2))) / &Rational::int(2),
    }
}

/// Solutions `t` of the defining equation of a family parameter, sorted in
/// descending order. Empty when the equation has no rational solution, in
/// which case every coset is generic at the exact-arithmetic level.
pub fn param_solutions(
    kind: AlgebraKind,
    sector: Sector,
    param: &CasimirParam,
) -> Result<Vec<DynkinLabel>> {
    match (kind, sector, param) {
        (AlgebraKind::Osp12, Sector::Ns, CasimirParam::Sigma(sigma)) => {
            let d = sigma - &Rational::new(1, 2);
            if d.is_zero() {
                Ok(vec![DynkinLabel(Rational::zero())])
            } else {
                let a = d.abs();
                Ok(vec![DynkinLabel(a.clone()), DynkinLabel(-a)])
            }
        }
        (AlgebraKind::Sl2, _, CasimirParam::Q(q))
        | (AlgebraKind::Osp12, Sector::R, CasimirParam::Q(q)) => {
            let disc = &Rational::one() + &(q * &Rational::int(2));
            match disc.sqrt_exact() {
                None => Ok(vec![]),
                Some(s) if s.is_zero() => Ok(vec![DynkinLabel(Rational::int(-1))]),
                Some(s) => Ok(vec![
                    DynkinLabel(&Rational::int(-1) + &s),
                    DynkinLabel(&Rational::int(-1) - &s),
                ]),
            }
        }
        _ => Err(Error::ParamMismatch),
    }
}

/// True iff some solution of the parameter equation lies in the even-root-
/// lattice coset of `coset_rep` (the coset of the ground weight support; for
/// Neveu-Schwarz families the test is on the even weight support).
pub fn is_nonsimple_coset(
    kind: AlgebraKind,
    sector: Sector,
    coset_rep: &DynkinLabel,
    param: &CasimirParam,
) -> Result<bool> {
    Ok(max_solution_in_coset(kind, sector, coset_rep, param)?.is_some())
}

/// The maximal solution lying in the coset of `coset_rep`, if any.
pub fn max_solution_in_coset(
    kind: AlgebraKind,
    sector: Sector,
    coset_rep: &DynkinLabel,
    param: &CasimirParam,
) -> Result<Option<Rational>> {
    let sols = param_solutions(kind, sector, param)?;
    Ok(sols
        .iter()
        .map(|s| &s.0)
        .find(|s| is_even_shift(&(*s - &coset_rep.0)))
        .cloned())
}

fn is_even_shift(d: &Rational) -> bool {
    use num_integer::Integer;
    d.is_integer() && d.numer().is_even()
}

fn is_integer_shift(d: &Rational) -> bool {
    d.is_integer()
}

/// A dense ground-state family F(lambda, q) or F°(lambda, sigma), realized
/// with the basis action on which `f` (and `y` in the Neveu-Schwarz case)
/// acts injectively.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroundFamily {
    pub kind: AlgebraKind,
    pub sector: Sector,
    pub coset_rep: DynkinLabel,
    pub param: CasimirParam,
    pub level: Rational,
    /// Sugawara conformal weight of the ground states.
    pub delta: Rational,
}

impl GroundFamily {
    pub fn new(
        kind: AlgebraKind,
        sector: Sector,
        coset_rep: DynkinLabel,
        param: CasimirParam,
        level: Rational,
    ) -> Result<Self> {
        let delta = sugawara_delta(kind, sector, &param, &level)?;
        match (kind, sector, &param) {
            (AlgebraKind::Sl2, Sector::Ns, CasimirParam::Q(_))
            | (AlgebraKind::Osp12, Sector::R, CasimirParam::Q(_))
            | (AlgebraKind::Osp12, Sector::Ns, CasimirParam::Sigma(_)) => {}
            _ => return Err(Error::ParamMismatch),
        }
        Ok(GroundFamily {
            kind,
            sector,
            coset_rep,
            param,
            level,
            delta,
        })
    }

    /// True iff `t` is a ground-state weight of the family.
    pub fn in_support(&self, t: &Rational) -> bool {
        let d = t - &self.coset_rep.0;
        match (self.kind, self.sector) {
            // Neveu-Schwarz dense modules support the full weight lattice
            // translate; the others a translate of the even root lattice.
            (AlgebraKind::Osp12, Sector::Ns) => is_integer_shift(&d),
            _ => is_even_shift(&d),
        }
    }

    /// Parity bit of the ground state at weight `t` (0 = even).
    pub fn parity_of(&self, t: &Rational) -> Result<u8> {
        if !self.in_support(t) {
            return Err(Error::OutsideSupport { t: t.to_string() });
        }
        match (self.kind, self.sector) {
            (AlgebraKind::Osp12, Sector::Ns) => {
                let d = t - &self.coset_rep.0;
                Ok(if is_even_shift(&d) { 0 } else { 1 })
            }
            // All sl(2) ground states, and by convention all Ramond ground
            // states, are even.
            _ => Ok(0),
        }
    }

    pub fn is_nonsimple(&self) -> bool {
        is_nonsimple_coset(self.kind, self.sector, &self.coset_rep, &self.param)
            .expect("family parameters validated at construction")
    }

    /// The maximal parameter solution in this family's coset, if the coset
    /// is nonsimple.
    pub fn max_solution(&self) -> Option<Rational> {
        max_solution_in_coset(self.kind, self.sector, &self.coset_rep, &self.param)
            .expect("family parameters validated at construction")
    }

    /// The maximal weight carrying a highest-weight vector of the ground
    /// module, if any. For Neveu-Schwarz families the odd highest-weight
    /// vector sits one weight-lattice step below the negative solution.
    pub fn generator_obstruction(&self) -> Option<Rational> {
        match (self.kind, self.sector) {
            (AlgebraKind::Osp12, Sector::Ns) => {
                let sols = param_solutions(self.kind, self.sector, &self.param)
                    .expect("validated at construction");
                let mut best: Option<Rational> = None;
                for s in &sols {
                    let d = &s.0 - &self.coset_rep.0;
                    if !is_even_shift(&d) {
                        continue;
                    }
                    // `v_{mu+}` is an even highest-weight vector; `y v_{mu-}`
                    // is an odd one at weight `mu- - omega`.
                    let sigma_minus_half = match &self.param {
                        CasimirParam::Sigma(sig) => sig - &Rational::new(1, 2),
                        _ => unreachable!(),
                    };
                    let weight = if s.0 == sigma_minus_half {
                        s.0.clone()
                    } else {
                        &s.0 - &Rational::one()
                    };
                    best = Some(match best {
                        Some(b) if b >= weight => b,
                        _ => weight,
                    });
                }
                best
            }
            _ => self.max_solution(),
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "algebra": self.kind.to_string(),
            "sector": self.sector.to_string(),
            "coset": self.coset_rep.0.to_string(),
            "param_kind": self.param.kind_str(),
            "param": self.param.value().to_string(),
            "level": self.level.to_string(),
            "delta": self.delta.to_string(),
        })
    }
}

/// Sugawara conformal weight of the ground states of a relaxed family.
pub fn sugawara_delta(
    kind: AlgebraKind,
    sector: Sector,
    param: &CasimirParam,
    level: &Rational,
) -> Result<Rational> {
    let two = Rational::int(2);
    match (kind, sector, param) {
        (AlgebraKind::Sl2, _, CasimirParam::Q(q)) => {
            let shifted = level + &two;
            if shifted.is_zero() {
                return Err(Error::CriticalLevel);
            }
            Ok(q / &(&two * &shifted))
        }
        (AlgebraKind::Osp12, Sector::Ns, CasimirParam::Sigma(sigma)) => {
            let shifted = level + &Rational::new(3, 2);
            if shifted.is_zero() {
                return Err(Error::CriticalLevel);
            }
            let num = &(sigma * sigma) - &Rational::new(1, 4);
            Ok(&num / &(&Rational::int(4) * &shifted))
        }
        (AlgebraKind::Osp12, Sector::R, CasimirParam::Q(q)) => {
            let shifted = level + &Rational::new(3, 2);
            if shifted.is_zero() {
                return Err(Error::CriticalLevel);
            }
            let num = q - &(level / &Rational::int(4));
            Ok(&num / &(&two * &shifted))
        }
        _ => Err(Error::ParamMismatch),
    }
}

/// `beta_mu` of the Neveu-Schwarz dense action at label `t`, parity `p`.
fn beta(t: &Rational, parity: u8, sigma: &Rational) -> Rational {
    let sign = if parity == 0 {
        -sigma.clone()
    } else {
        sigma.clone()
    };
    &(&(t + &sign) + &Rational::new(1, 2)) / &Rational::int(2)
}

/// Action of a zero-mode generator on the ground-state basis vector at
/// weight `t` with the given parity. Returns `(coefficient, new_t, new_parity)`.
pub fn ground_action(
    fam: &GroundFamily,
    g: Gen,
    t: &Rational,
    parity: u8,
) -> Result<(Rational, Rational, u8)> {
    if fam.parity_of(t)? != parity {
        return Err(Error::InconsistentParity {
            t: t.to_string(),
            parity,
        });
    }
    let two = Rational::int(2);
    match (fam.kind, fam.sector) {
        (AlgebraKind::Osp12, Sector::Ns) => {
            let sigma = fam.param.value();
            match g {
                Gen::E => {
                    // e = x∘x on the dense module: the coefficient is the
                    // product of consecutive beta's at flipped parity.
                    let b1 = beta(t, parity, sigma);
                    let b2 = beta(&(t + &Rational::one()), parity ^ 1, sigma);
                    Ok((&b1 * &b2, t + &two, parity))
                }
                Gen::X => Ok((beta(t, parity, sigma), t + &Rational::one(), parity ^ 1)),
                Gen::H => Ok((t.clone(), t.clone(), parity)),
                Gen::Y => Ok((Rational::one(), t - &Rational::one(), parity ^ 1)),
                Gen::F => Ok((Rational::int(-1), t - &two, parity)),
            }
        }
        _ => {
            let q = fam.param.value();
            match g {
                Gen::E => {
                    let gamma = &(q - &casimir_pair(AlgebraKind::Sl2, Sector::Ns, t)) / &two;
                    Ok((gamma, t + &two, 0))
                }
                Gen::H => Ok((t.clone(), t.clone(), 0)),
                Gen::F => Ok((Rational::one(), t - &two, 0)),
                Gen::X | Gen::Y => Err(Error::NotZeroModeGenerator { gen: g.to_string() }),
            }
        }
    }
}
