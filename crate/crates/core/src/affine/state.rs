//! Vectors of relaxed Verma modules and of highest-weight Vermas, and the
//! action of affine modes on them.
//!
//! A state is a combination of terms `(monomial in strictly negative modes)
//! applied to a ground basis vector`. Applying a mode prepends it to each
//! term and restores normal form: negative modes commute into place, zero
//! modes are pushed through to the ground action, positive modes annihilate
//! ground vectors.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::exact::{Gaussian, Rational};
use crate::finite::{ground_action, AlgebraKind, Gen, GroundFamily, Sector};

use super::bracket::affine_bracket;
use super::element::AlgebraElement;
use super::mode::Mode;
use super::monomial::PbwMonomial;

/// Identifies a basis vector of the ground module.
///
/// For a dense family the key is the ground weight and its parity bit; for a
/// highest-weight Verma it is the weight together with the exponent of the
/// odd lowering generator (`y_0`, Neveu-Schwarz only).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroundKey {
    pub t: Rational,
    pub flag: u8,
}

/// The ground module a relaxed state is built over.
#[derive(Clone, Debug)]
#[allow(clippy::large_enum_variant)]
pub enum GroundModel {
    /// A dense family F(lambda, q) / F°(lambda, sigma) with the injective
    /// lowering action.
    Dense(GroundFamily),
    /// The ground space of a highest-weight Verma: the span of
    /// `f_0^j y_0^delta` applied to the highest-weight vector.
    HwVerma {
        kind: AlgebraKind,
        sector: Sector,
        hw_t: Rational,
    },
}

impl GroundModel {
    pub fn kind(&self) -> AlgebraKind {
        match self {
            GroundModel::Dense(f) => f.kind,
            GroundModel::HwVerma { kind, .. } => *kind,
        }
    }

    pub fn sector(&self) -> Sector {
        match self {
            GroundModel::Dense(f) => f.sector,
            GroundModel::HwVerma { sector, .. } => *sector,
        }
    }

    /// The ground key at weight `t`, when `t` is in the ground support.
    pub fn key_at(&self, t: &Rational) -> Result<GroundKey> {
        match self {
            GroundModel::Dense(f) => {
                let flag = f.parity_of(t)?;
                Ok(GroundKey { t: t.clone(), flag })
            }
            GroundModel::HwVerma { kind, sector, hw_t } => {
                let d = hw_t - t;
                if !d.is_integer() || d.is_negative() {
                    return Err(Error::OutsideSupport { t: t.to_string() });
                }
                let n = d
                    .to_i64()
                    .ok_or_else(|| Error::OutsideSupport { t: t.to_string() })?;
                let delta = match (kind, sector) {
                    (AlgebraKind::Osp12, Sector::Ns) => (n % 2) as u8,
                    _ => {
                        if n % 2 != 0 {
                            return Err(Error::OutsideSupport { t: t.to_string() });
                        }
                        0
                    }
                };
                Ok(GroundKey {
                    t: t.clone(),
                    flag: delta,
                })
            }
        }
    }

    /// Zero-mode action on a ground basis vector; `None` when the result is
    /// zero (vanishing coefficient).
    fn zero_mode(&self, g: Gen, key: &GroundKey) -> Result<Option<(Rational, GroundKey)>> {
        match self {
            GroundModel::Dense(f) => {
                let (c, t, p) = ground_action(f, g, &key.t, key.flag)?;
                if c.is_zero() {
                    return Ok(None);
                }
                Ok(Some((c, GroundKey { t, flag: p })))
            }
            GroundModel::HwVerma { kind, sector, hw_t } => {
                let t = &key.t;
                let delta = key.flag;
                // j is the exponent of f_0: t = hw - 2j - delta.
                let j = &(&(hw_t - t) - &Rational::int(delta as i64)) / &Rational::int(2);
                let one = Rational::one();
                let two = Rational::int(2);
                match (kind, sector, g) {
                    (_, _, Gen::F) => Ok(Some((
                        one,
                        GroundKey {
                            t: t - &two,
                            flag: delta,
                        },
                    ))),
                    (_, _, Gen::H) => Ok(Some((t.clone(), key.clone()))),
                    (AlgebraKind::Osp12, Sector::Ns, Gen::Y) => {
                        let t_new = t - &one;
                        if delta == 0 {
                            Ok(Some((one, GroundKey { t: t_new, flag: 1 })))
                        } else {
                            Ok(Some((-one, GroundKey { t: t_new, flag: 0 })))
                        }
                    }
                    (AlgebraKind::Osp12, Sector::Ns, Gen::X) => {
                        if delta == 0 {
                            if j.is_zero() {
                                return Ok(None);
                            }
                            Ok(Some((
                                j,
                                GroundKey {
                                    t: t + &one,
                                    flag: 1,
                                },
                            )))
                        } else {
                            let c = hw_t - &j;
                            if c.is_zero() {
                                return Ok(None);
                            }
                            Ok(Some((
                                c,
                                GroundKey {
                                    t: t + &one,
                                    flag: 0,
                                },
                            )))
                        }
                    }
                    (AlgebraKind::Osp12, Sector::Ns, Gen::E) => {
                        // e = x∘x through the mixed-parity chain.
                        let c = if delta == 0 {
                            &j * &(&(hw_t - &j) + &one)
                        } else {
                            &(hw_t - &j) * &j
                        };
                        if c.is_zero() {
                            return Ok(None);
                        }
                        Ok(Some((
                            c,
                            GroundKey {
                                t: t + &two,
                                flag: delta,
                            },
                        )))
                    }
                    (_, _, Gen::E) => {
                        let c = &j * &(&(hw_t - &j) + &one);
                        if c.is_zero() {
                            return Ok(None);
                        }
                        Ok(Some((
                            c,
                            GroundKey {
                                t: t + &two,
                                flag: 0,
                            },
                        )))
                    }
                    (_, _, Gen::X | Gen::Y) => {
                        Err(Error::NotZeroModeGenerator { gen: g.to_string() })
                    }
                }
            }
        }
    }
}

/// A vector of the induced module in normal form.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct RelaxedState {
    terms: BTreeMap<(PbwMonomial, GroundKey), Gaussian>,
}

impl RelaxedState {
    pub fn zero() -> Self {
        RelaxedState::default()
    }

    pub fn ground(key: GroundKey) -> Self {
        let mut s = RelaxedState::zero();
        s.add_term(PbwMonomial::one(), key, Gaussian::one());
        s
    }

    pub fn add_term(&mut self, m: PbwMonomial, key: GroundKey, coeff: Gaussian) {
        use std::collections::btree_map::Entry;
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry((m, key)) {
            Entry::Occupied(mut o) => {
                let v = o.get() + &coeff;
                if v.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = v;
                }
            }
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
        }
    }

    pub fn add_assign_scaled(&mut self, other: &RelaxedState, c: &Gaussian) {
        if c.is_zero() {
            return;
        }
        for ((m, k), v) in &other.terms {
            self.add_term(m.clone(), k.clone(), v * c);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(PbwMonomial, GroundKey), &Gaussian)> {
        self.terms.iter()
    }

    /// Coefficient of the bare ground vector with the given key.
    pub fn ground_coeff(&self, key: &GroundKey) -> Gaussian {
        self.terms
            .get(&(PbwMonomial::one(), key.clone()))
            .cloned()
            .unwrap_or_else(Gaussian::zero)
    }
}

impl fmt::Display for RelaxedState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, ((m, k), c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            if !m.is_empty() {
                write!(f, "{m}")?;
            }
            write!(f, "v[{}", k.t)?;
            if k.flag != 0 {
                write!(f, ";{}", k.flag)?;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}

type TermImage = Vec<((PbwMonomial, GroundKey), Gaussian)>;

/// Evaluation context: algebra, sector, level and ground module, plus a memo
/// for single-mode applications. Contexts are independent; concurrent use of
/// separate contexts is safe.
pub struct ActionCtx {
    pub kind: AlgebraKind,
    pub sector: Sector,
    pub level: Rational,
    pub ground: GroundModel,
    memo: RefCell<HashMap<(Mode, PbwMonomial, GroundKey), TermImage>>,
}

impl ActionCtx {
    pub fn new(kind: AlgebraKind, sector: Sector, level: Rational, ground: GroundModel) -> Self {
        ActionCtx {
            kind,
            sector,
            level,
            ground,
            memo: RefCell::new(HashMap::new()),
        }
    }

    pub fn for_family(fam: &GroundFamily) -> Self {
        ActionCtx::new(
            fam.kind,
            fam.sector,
            fam.level.clone(),
            GroundModel::Dense(fam.clone()),
        )
    }

    pub fn for_hw_verma(
        kind: AlgebraKind,
        sector: Sector,
        level: Rational,
        hw_t: Rational,
    ) -> Self {
        ActionCtx::new(
            kind,
            sector,
            level,
            GroundModel::HwVerma { kind, sector, hw_t },
        )
    }

    /// The ground state at weight `t` as a state.
    pub fn ground_state(&self, t: &Rational) -> Result<RelaxedState> {
        Ok(RelaxedState::ground(self.ground.key_at(t)?))
    }

    /// Applies a single mode to a state.
    pub fn apply_mode(&self, m: Mode, state: &RelaxedState) -> Result<RelaxedState> {
        m.check(self.kind, self.sector)?;
        let mut out = RelaxedState::zero();
        for ((mono, key), c) in state.iter() {
            for ((m2, k2), c2) in self.apply_mode_to_term(m, mono, key)? {
                out.add_term(m2, k2, &c2 * c);
            }
        }
        Ok(out)
    }

    /// Applies a product of modes (left to right composition, so the last
    /// mode of `word` acts first).
    pub fn apply_word(&self, word: &[Mode], state: &RelaxedState) -> Result<RelaxedState> {
        let mut s = state.clone();
        for &m in word.iter().rev() {
            if s.is_zero() {
                break;
            }
            s = self.apply_mode(m, &s)?;
        }
        Ok(s)
    }

    /// Applies an element in normal form.
    pub fn apply_element(&self, el: &AlgebraElement, state: &RelaxedState) -> Result<RelaxedState> {
        let mut out = RelaxedState::zero();
        for (mono, c) in el.iter() {
            let part = self.apply_word(&mono.to_word(), state)?;
            out.add_assign_scaled(&part, c);
        }
        Ok(out)
    }

    fn apply_mode_to_term(
        &self,
        m: Mode,
        mono: &PbwMonomial,
        key: &GroundKey,
    ) -> Result<TermImage> {
        let memo_key = (m, mono.clone(), key.clone());
        if let Some(hit) = self.memo.borrow().get(&memo_key) {
            return Ok(hit.clone());
        }
        let result = self.apply_mode_to_term_inner(m, mono, key)?;
        self.memo.borrow_mut().insert(memo_key, result.clone());
        Ok(result)
    }

    fn apply_mode_to_term_inner(
        &self,
        m: Mode,
        mono: &PbwMonomial,
        key: &GroundKey,
    ) -> Result<TermImage> {
        if mono.is_empty() {
            return match m.idx2.cmp(&0) {
                std::cmp::Ordering::Greater => Ok(vec![]),
                std::cmp::Ordering::Equal => Ok(match self.ground.zero_mode(m.gen, key)? {
                    None => vec![],
                    Some((c, k)) => vec![((PbwMonomial::one(), k), Gaussian::from_rational(c))],
                }),
                std::cmp::Ordering::Less => {
                    Ok(vec![((mono.prepended(m), key.clone()), Gaussian::one())])
                }
            };
        }
        let (m1, tail) = mono.split_first().expect("nonempty monomial");
        if m.idx2 < 0 && (m < m1 || (m == m1 && !m.gen.is_odd())) {
            return Ok(vec![((mono.prepended(m), key.clone()), Gaussian::one())]);
        }
        if m == m1 && m.gen.is_odd() {
            // Odd square: m*m = (1/2){m,m}, a single even mode.
            let mut out = Vec::new();
            let half = Gaussian::from_rational(Rational::new(1, 2));
            for (bm, bc) in affine_bracket(self.kind, self.sector, m, m, &self.level)?.iter() {
                let scale = bc * &half;
                out = merge(out, self.apply_bracket_term(bm, &tail, key, &scale)?);
            }
            return Ok(out);
        }
        // m > m1: move m past m1.
        let sign = if m.gen.is_odd() && m1.gen.is_odd() {
            -Gaussian::one()
        } else {
            Gaussian::one()
        };
        let mut out: TermImage = Vec::new();
        for ((mono2, key2), c2) in self.apply_mode_to_term(m, &tail, key)? {
            for ((mono3, key3), c3) in self.apply_mode_to_term(m1, &mono2, &key2)? {
                out = merge(out, vec![((mono3, key3), &(&c2 * &c3) * &sign)]);
            }
        }
        for (bm, bc) in affine_bracket(self.kind, self.sector, m, m1, &self.level)?.iter() {
            out = merge(out, self.apply_bracket_term(bm, &tail, key, bc)?);
        }
        Ok(out)
    }

    /// Applies a bracket term (a single mode or the scalar 1) to the tail.
    fn apply_bracket_term(
        &self,
        bm: &PbwMonomial,
        tail: &PbwMonomial,
        key: &GroundKey,
        scale: &Gaussian,
    ) -> Result<TermImage> {
        if bm.is_empty() {
            return Ok(vec![((tail.clone(), key.clone()), scale.clone())]);
        }
        let word = bm.to_word();
        debug_assert_eq!(word.len(), 1);
        let res = self.apply_mode_to_term(word[0], tail, key)?;
        Ok(res.into_iter().map(|(t, c)| (t, &c * scale)).collect())
    }
}

fn merge(mut acc: TermImage, items: TermImage) -> TermImage {
    for (k, c) in items {
        if c.is_zero() {
            continue;
        }
        if let Some(slot) = acc.iter_mut().find(|(k2, _)| *k2 == k) {
            slot.1 = &slot.1 + &c;
        } else {
            acc.push((k, c));
        }
    }
    acc.retain(|(_, c)| !c.is_zero());
    acc
}
