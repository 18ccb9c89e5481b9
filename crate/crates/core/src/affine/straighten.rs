//! Rewriting of arbitrary words in affine modes to PBW normal form.

use std::cell::RefCell;
use std::collections::HashMap;
use std::fs;
use std::path::PathBuf;

use serde_json::json;

use crate::error::Result;
use crate::exact::{Gaussian, Rational};
use crate::finite::{AlgebraKind, Sector};

use super::bracket::affine_bracket;
use super::element::AlgebraElement;
use super::mode::Mode;
use super::monomial::PbwMonomial;

/// Straightening engine with a per-context memo cache.
///
/// Rewrites repeatedly exchange the first out-of-order adjacent pair; each
/// exchange produces the swapped word (with a sign when both letters are
/// odd) plus strictly shorter bracket terms, so the rewriting terminates.
/// Squares of odd modes reduce through `x_n^2 = e_{2n}`, `y_n^2 = -f_{2n}`.
pub struct Straightener {
    kind: AlgebraKind,
    sector: Sector,
    level: Rational,
    memo: RefCell<HashMap<Vec<Mode>, AlgebraElement>>,
    cache_dir: Option<PathBuf>,
}

impl Straightener {
    pub fn new(kind: AlgebraKind, sector: Sector, level: Rational) -> Self {
        Straightener {
            kind,
            sector,
            level,
            memo: RefCell::new(HashMap::new()),
            cache_dir: None,
        }
    }

    /// Enables the on-disk cache: one JSON element per straightened word,
    /// keyed by a stable hash of the word together with the context data.
    pub fn with_cache_dir(mut self, dir: PathBuf) -> Self {
        self.cache_dir = Some(dir);
        self
    }

    pub fn level(&self) -> &Rational {
        &self.level
    }

    pub fn bracket(&self, a: Mode, b: Mode) -> Result<AlgebraElement> {
        affine_bracket(self.kind, self.sector, a, b, &self.level)
    }

    /// PBW normal form of the product of the given modes.
    pub fn straighten(&self, word: &[Mode]) -> Result<AlgebraElement> {
        for m in word {
            m.check(self.kind, self.sector)?;
        }
        if let Some(cached) = self.disk_lookup(word) {
            return Ok(cached);
        }
        let result = self.straighten_inner(word)?;
        self.disk_store(word, &result);
        Ok(result)
    }

    fn straighten_inner(&self, word: &[Mode]) -> Result<AlgebraElement> {
        if let Some(hit) = self.memo.borrow().get(word) {
            return Ok(hit.clone());
        }
        let defect = word
            .windows(2)
            .position(|w| w[0] > w[1] || (w[0] == w[1] && w[0].gen.is_odd()));
        let result = match defect {
            None => AlgebraElement::monomial(
                PbwMonomial::from_sorted_word(word).expect("defect-free word is sorted"),
                Gaussian::one(),
            ),
            Some(i) => {
                let (a, b) = (word[i], word[i + 1]);
                let mut out = AlgebraElement::zero();
                if a == b {
                    // Odd square: a*a = (1/2){a,a}.
                    let half = Gaussian::from_rational(Rational::new(1, 2));
                    for (m, c) in self.bracket(a, a)?.iter() {
                        let sub = self.splice(word, i, &m.to_word())?;
                        out.add_assign(&sub.scaled(&(c * &half)));
                    }
                } else {
                    let sign = if a.gen.is_odd() && b.gen.is_odd() {
                        -Gaussian::one()
                    } else {
                        Gaussian::one()
                    };
                    let swapped = self.splice(word, i, &[b, a])?;
                    out.add_assign(&swapped.scaled(&sign));
                    for (m, c) in self.bracket(a, b)?.iter() {
                        let sub = self.splice(word, i, &m.to_word())?;
                        out.add_assign(&sub.scaled(c));
                    }
                }
                out
            }
        };
        self.memo.borrow_mut().insert(word.to_vec(), result.clone());
        Ok(result)
    }

    /// Straightens the word with positions `i, i+1` replaced by `insert`.
    fn splice(&self, word: &[Mode], i: usize, insert: &[Mode]) -> Result<AlgebraElement> {
        let mut w = Vec::with_capacity(word.len() + insert.len());
        w.extend_from_slice(&word[..i]);
        w.extend_from_slice(insert);
        w.extend_from_slice(&word[i + 2..]);
        self.straighten_inner(&w)
    }

    fn cache_key(&self, word: &[Mode]) -> String {
        let mut s = format!("{}|{}|{}|", self.kind, self.sector, self.level);
        for m in word {
            s.push_str(&m.to_string());
        }
        s
    }

    fn cache_path(&self, word: &[Mode]) -> Option<PathBuf> {
        let dir = self.cache_dir.as_ref()?;
        Some(dir.join(format!(
            "{:016x}.json",
            fnv1a64(self.cache_key(word).as_bytes())
        )))
    }

    fn disk_lookup(&self, word: &[Mode]) -> Option<AlgebraElement> {
        let path = self.cache_path(word)?;
        let text = fs::read_to_string(path).ok()?;
        let v: serde_json::Value = serde_json::from_str(&text).ok()?;
        if v.get("key")?.as_str()? != self.cache_key(word) {
            return None;
        }
        AlgebraElement::from_json(v.get("element")?).ok()
    }

    fn disk_store(&self, word: &[Mode], element: &AlgebraElement) {
        let Some(path) = self.cache_path(word) else {
            return;
        };
        if let Some(dir) = self.cache_dir.as_ref() {
            let _ = fs::create_dir_all(dir);
        }
        let doc = json!({ "key": self.cache_key(word), "element": element.to_json() });
        let _ = fs::write(path, doc.to_string());
    }
}

fn fnv1a64(bytes: &[u8]) -> u64 {
    let mut hash: u64 = 0xcbf29ce484222325;
    for &b in bytes {
        hash ^= b as u64;
        hash = hash.wrapping_mul(0x100000001b3);
    }
    hash
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite::Gen;

    #[test]
    fn e1_f_minus1_straightens_with_central_term() {
        // e_1 f_{-1} = f_{-1} e_1 + h_0 - 1/2 at level -1/2.
        let s = Straightener::new(AlgebraKind::Sl2, Sector::Ns, Rational::new(-1, 2));
        let el = s
            .straighten(&[Mode::new(Gen::E, 2), Mode::new(Gen::F, -2)])
            .unwrap();
        assert_eq!(el.coeff(&"f(-1)e(1)".parse().unwrap()), Gaussian::one());
        assert_eq!(el.coeff(&"h(0)".parse().unwrap()), Gaussian::one());
        assert_eq!(
            el.coeff(&PbwMonomial::one()),
            Gaussian::from_rational(Rational::new(-1, 2))
        );
        assert_eq!(el.len(), 3);
    }

    #[test]
    fn ordered_word_is_fixed_point() {
        let s = Straightener::new(AlgebraKind::Sl2, Sector::Ns, Rational::new(-1, 2));
        let el = s
            .straighten(&[Mode::new(Gen::F, -2), Mode::new(Gen::H, 0)])
            .unwrap();
        assert_eq!(el.len(), 1);
        assert_eq!(el.coeff(&"f(-1)h(0)".parse().unwrap()), Gaussian::one());
    }

    #[test]
    fn odd_square_reduces() {
        // x_0 x_0 = e_0 in the Neveu-Schwarz sector.
        let s = Straightener::new(AlgebraKind::Osp12, Sector::Ns, Rational::one());
        let el = s
            .straighten(&[Mode::new(Gen::X, 0), Mode::new(Gen::X, 0)])
            .unwrap();
        assert_eq!(el.len(), 1);
        assert_eq!(el.coeff(&"e(0)".parse().unwrap()), Gaussian::one());

        let el = s
            .straighten(&[Mode::new(Gen::Y, 0), Mode::new(Gen::Y, 0)])
            .unwrap();
        assert_eq!(el.len(), 1);
        assert_eq!(el.coeff(&"f(0)".parse().unwrap()), -Gaussian::one());
    }

    #[test]
    fn odd_swap_carries_sign() {
        // y_0 x_0 = {x_0,y_0} - x_0 y_0 = h_0 - x_0 y_0 ... straightened form
        // of x_0 y_0 is itself; check x_0 y_0 + y_0 x_0 = h_0.
        let s = Straightener::new(AlgebraKind::Osp12, Sector::Ns, Rational::one());
        let xy = s
            .straighten(&[Mode::new(Gen::X, 0), Mode::new(Gen::Y, 0)])
            .unwrap();
        let yx = s
            .straighten(&[Mode::new(Gen::Y, 0), Mode::new(Gen::X, 0)])
            .unwrap();
        let mut sum = xy.clone();
        sum.add_assign(&yx);
        assert_eq!(sum.coeff(&"h(0)".parse().unwrap()), Gaussian::one());
        assert_eq!(sum.len(), 1);
    }

    #[test]
    fn disk_cache_round_trip() {
        let dir = std::env::temp_dir().join("relaxchar-cache-test");
        let _ = std::fs::remove_dir_all(&dir);
        let word = vec![
            Mode::new(Gen::E, 2),
            Mode::new(Gen::F, -2),
            Mode::new(Gen::H, 0),
        ];
        let s = Straightener::new(AlgebraKind::Sl2, Sector::Ns, Rational::new(-1, 2))
            .with_cache_dir(dir.clone());
        let first = s.straighten(&word).unwrap();
        // A fresh straightener must hit the disk cache and agree.
        let s2 = Straightener::new(AlgebraKind::Sl2, Sector::Ns, Rational::new(-1, 2))
            .with_cache_dir(dir.clone());
        let second = s2.straighten(&word).unwrap();
        assert_eq!(first, second);
        let _ = std::fs::remove_dir_all(&dir);
    }
}
