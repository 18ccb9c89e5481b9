//! Enumeration of the Shapovalov bases P_n and of weight-filtered bases of
//! highest-weight Vermas.

use crate::finite::{AlgebraKind, Gen, Sector};

use super::mode::Mode;
use super::monomial::PbwMonomial;

/// All normal-ordered monomials in strictly negative modes of total doubled
/// grade `grade2`, in ascending PBW-lexicographic order.
pub fn negative_monomials(kind: AlgebraKind, sector: Sector, grade2: u64) -> Vec<PbwMonomial> {
    let mut modes: Vec<Mode> = Vec::new();
    for idx2 in -(grade2 as i64)..0 {
        for &g in Gen::all(kind) {
            let m = Mode::new(g, idx2);
            if m.is_valid(kind, sector) {
                modes.push(m);
            }
        }
    }
    modes.sort();
    let mut out = Vec::new();
    let mut current: Vec<(Mode, u32)> = Vec::new();
    recurse(&modes, 0, grade2, &mut current, &mut out);
    out.sort();
    out
}

fn recurse(
    modes: &[Mode],
    i: usize,
    remaining2: u64,
    current: &mut Vec<(Mode, u32)>,
    out: &mut Vec<PbwMonomial>,
) {
    if remaining2 == 0 {
        out.push(PbwMonomial::from_factors(current.clone()).expect("construction preserves order"));
        return;
    }
    if i == modes.len() {
        return;
    }
    let m = modes[i];
    let step = (-m.idx2) as u64;
    let cap = remaining2 / step;
    let max_exp = if m.gen.is_odd() { cap.min(1) } else { cap };
    // Exponent zero first keeps the output lexicographically sorted after the
    // final sort; we simply enumerate all choices.
    for e in 0..=max_exp {
        if e > 0 {
            current.push((m, e as u32));
        }
        recurse(modes, i + 1, remaining2 - e * step, current, out);
        if e > 0 {
            current.pop();
        }
    }
}

/// The set P_n of the Shapovalov basis at doubled grade `grade2`: monomials
/// in strictly negative modes together with the allowed zero modes (`f_0`,
/// plus `y_0` in the Neveu-Schwarz sector), of weight `-grade2` in
/// Dynkin-label units. Exponents of `e_0`, `h_0` (and `x_0`) are zero.
pub fn enumerate_pn(kind: AlgebraKind, sector: Sector, grade2: u64) -> Vec<PbwMonomial> {
    let mut out = Vec::new();
    let deltas: &[i64] = match (kind, sector) {
        (AlgebraKind::Osp12, Sector::Ns) => &[0, 1],
        _ => &[0],
    };
    for neg in negative_monomials(kind, sector, grade2) {
        for &delta in deltas {
            let need = neg.weight_t() + grade2 as i64 - delta;
            if need < 0 || need % 2 != 0 {
                continue;
            }
            let j = (need / 2) as u32;
            let mut factors = neg.factors().to_vec();
            if j > 0 {
                factors.push((Mode::new(Gen::F, 0), j));
            }
            if delta == 1 {
                factors.push((Mode::new(Gen::Y, 0), 1));
            }
            out.push(PbwMonomial::from_factors(factors).expect("zero modes come last"));
        }
    }
    out.sort();
    out
}

/// Basis monomials of the weight space of a highest-weight Verma at doubled
/// grade `grade2` and weight offset `w_rel` (in Dynkin-label units, relative
/// to the highest weight). These are monomials in strictly negative modes
/// and `f_0` (plus `y_0` for Neveu-Schwarz) applied to the highest-weight
/// vector.
pub fn hw_weight_basis(
    kind: AlgebraKind,
    sector: Sector,
    grade2: u64,
    w_rel: i64,
) -> Vec<PbwMonomial> {
    let mut out = Vec::new();
    let deltas: &[i64] = match (kind, sector) {
        (AlgebraKind::Osp12, Sector::Ns) => &[0, 1],
        _ => &[0],
    };
    for neg in negative_monomials(kind, sector, grade2) {
        for &delta in deltas {
            let need = neg.weight_t() - delta - w_rel;
            if need < 0 || need % 2 != 0 {
                continue;
            }
            let j = (need / 2) as u32;
            let mut factors = neg.factors().to_vec();
            if j > 0 {
                factors.push((Mode::new(Gen::F, 0), j));
            }
            if delta == 1 {
                factors.push((Mode::new(Gen::Y, 0), 1));
            }
            out.push(PbwMonomial::from_factors(factors).expect("zero modes come last"));
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sl2_p0_and_p1() {
        let p0 = enumerate_pn(AlgebraKind::Sl2, Sector::Ns, 0);
        assert_eq!(p0, vec![PbwMonomial::one()]);
        let p1 = enumerate_pn(AlgebraKind::Sl2, Sector::Ns, 2);
        let expect: Vec<PbwMonomial> = ["f(-1)", "h(-1)f(0)", "e(-1)f(0)^2"]
            .iter()
            .map(|s| s.parse().unwrap())
            .collect();
        assert_eq!(p1.len(), 3);
        for m in &expect {
            assert!(p1.contains(m), "missing {m}");
        }
    }

    #[test]
    fn ns_p1_has_five_elements() {
        let p1 = enumerate_pn(AlgebraKind::Osp12, Sector::Ns, 2);
        assert_eq!(p1.len(), 5);
        for s in [
            "f(-1)",
            "h(-1)f(0)",
            "e(-1)f(0)^2",
            "y(-1)y(0)",
            "x(-1)f(0)y(0)",
        ] {
            let m: PbwMonomial = s.parse().unwrap();
            assert!(p1.contains(&m), "missing {m}");
        }
    }

    #[test]
    fn ramond_half_grades() {
        let ph = enumerate_pn(AlgebraKind::Osp12, Sector::R, 1);
        assert_eq!(ph.len(), 2);
        for s in ["y(-1/2)", "x(-1/2)f(0)"] {
            let m: PbwMonomial = s.parse().unwrap();
            assert!(ph.contains(&m), "missing {m}");
        }
        let p1 = enumerate_pn(AlgebraKind::Osp12, Sector::R, 2);
        assert_eq!(p1.len(), 4);
        let p32 = enumerate_pn(AlgebraKind::Osp12, Sector::R, 3);
        assert_eq!(p32.len(), 8);
    }

    #[test]
    fn sl2_sizes_match_three_colored_partitions() {
        // |P_n| = [q^n] prod (1-q^i)^{-3}: 1, 3, 9, 22.
        let sizes: Vec<usize> = (0..4)
            .map(|n| enumerate_pn(AlgebraKind::Sl2, Sector::Ns, 2 * n).len())
            .collect();
        assert_eq!(sizes, vec![1, 3, 9, 22]);
    }

    #[test]
    fn hw_basis_examples() {
        // sl(2) Verma, grade 1: one monomial at weight +2 (e_{-1}), two at
        // the highest weight itself.
        let b = hw_weight_basis(AlgebraKind::Sl2, Sector::Ns, 2, 2);
        assert_eq!(b, vec!["e(-1)".parse().unwrap()]);
        let b = hw_weight_basis(AlgebraKind::Sl2, Sector::Ns, 2, 0);
        assert_eq!(b.len(), 2);
        let b = hw_weight_basis(AlgebraKind::Sl2, Sector::Ns, 2, -2);
        assert_eq!(b.len(), 3);
        let b = hw_weight_basis(AlgebraKind::Sl2, Sector::Ns, 2, 4);
        assert!(b.is_empty());
    }
}
