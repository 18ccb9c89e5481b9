//! Cross-checks of the closed formulas against the Shapovalov-rank oracle,
//! the exact-sequence dimension identities, and the level -1 regression.

use serde_json::{json, Value};

use std::path::PathBuf;

use crate::affine::{
    hw_verma_dim, relaxed_dim, relaxed_dim_lowest_grade_direct, shapovalov_matrix, ActionCtx, Mode,
    RelaxedState, Straightener,
};
use crate::characters::{relaxed_string_function, spectrum_params, AdmissibleLevel, MinimalLabel};
use crate::error::Result;
use crate::exact::{Gaussian, Rational};
use crate::finite::{AlgebraKind, CasimirParam, DynkinLabel, Gen, GroundFamily, Sector};

/// One comparison inside a report; `expected` and `actual` are exact.
#[derive(Clone, Debug)]
pub struct Instance {
    pub input: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

/// A named batch of exact comparisons. A failing comparison never aborts
/// the run; the full report is always produced.
#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub name: String,
    pub instances: Vec<Instance>,
    pub passed: bool,
}

impl VerificationReport {
    fn new(name: impl Into<String>) -> Self {
        VerificationReport {
            name: name.into(),
            instances: Vec::new(),
            passed: true,
        }
    }

    fn record(&mut self, input: String, expected: String, actual: String) {
        let pass = expected == actual;
        self.passed &= pass;
        self.instances.push(Instance {
            input,
            expected,
            actual,
            pass,
        });
    }

    pub fn to_json(&self) -> Value {
        json!({
            "name": self.name,
            "passed": self.passed,
            "instances": self.instances.iter().map(|i| json!({
                "input": i.input,
                "expected": i.expected,
                "actual": i.actual,
                "pass": i.pass,
            })).collect::<Vec<_>>(),
        })
    }

    pub fn render_table(&self) -> String {
        let mut out = format!(
            "[{}] {}\n",
            if self.passed { "PASS" } else { "FAIL" },
            self.name
        );
        for i in &self.instances {
            out.push_str(&format!(
                "  {} {:<58} expected {:<10} actual {}\n",
                if i.pass { "ok " } else { "FAIL" },
                i.input,
                i.expected,
                i.actual
            ));
        }
        out
    }
}

/// Sample weights for a label: the distinguished representative shifted by
/// `j alpha` for `j` in `-2..=2`, plus one generic coset at `t = 1/3`.
fn weight_fixtures(mu_rs: &Rational) -> Vec<Rational> {
    let mut v: Vec<Rational> = (-2..=2).map(|j| mu_rs + &Rational::int(2 * j)).collect();
    v.push(Rational::new(1, 3));
    v
}

fn family_for_weight(
    lvl: &AdmissibleLevel,
    lab: &MinimalLabel,
    weight: &Rational,
) -> Result<GroundFamily> {
    let data = spectrum_params(lvl, lab)?;
    GroundFamily::new(
        lvl.kind,
        data.sector,
        DynkinLabel(weight.clone()),
        data.param,
        lvl.level.clone(),
    )
}

/// Rank-oracle dimensions versus coefficients of the closed string-function
/// formulas, cell by cell over the weight fixtures.
pub fn verify_character_theorem(
    lvl: &AdmissibleLevel,
    lab: &MinimalLabel,
    max_grade2: u64,
) -> Result<VerificationReport> {
    let data = spectrum_params(lvl, lab)?;
    let orders = (max_grade2 / 2 + 2) as u32;
    let pair = relaxed_string_function(lvl, lab, orders, false)?;
    let base = pair.even.base().clone();
    let mut report = VerificationReport::new(format!(
        "character-theorem {} (u,v)=({},{}) (r,s)=({},{})",
        lvl.kind, lvl.u, lvl.v, lab.r, lab.s
    ));
    for weight in weight_fixtures(&data.mu_rs.0) {
        let fam = family_for_weight(lvl, lab, &weight)?;
        let step = if data.sector == Sector::R { 1 } else { 2 };
        let mut grade2 = 0u64;
        while grade2 <= max_grade2 {
            // Only cells compatible with the weight/grade parity carry
            // states; skip the rest.
            let gen_t = &weight + &Rational::int(grade2 as i64);
            if !fam.in_support(&gen_t) {
                grade2 += step;
                continue;
            }
            let odd_coset = grade2 % 2 == 1;
            let exp = &base + &Rational::new(grade2 as i64, 2);
            let expected = pair.by_parity(odd_coset).coeff_at(&exp)?;
            let actual = relaxed_dim(&fam, &weight, grade2)?;
            report.record(
                format!(
                    "dim E(nu={}, Delta+{}{}) [coset rep {}]",
                    weight,
                    grade2 / 2,
                    if grade2 % 2 == 1 { ".5" } else { "" },
                    fam.coset_rep.0
                ),
                expected.to_string(),
                actual.to_string(),
            );
            grade2 += step;
        }
    }
    Ok(report)
}

/// Exact-sequence dimension identity: at every sampled cell of the
/// distinguished nonsimple coset,
/// `dim E(nu, n) = dim L+(mu_{r,s})(nu, n) + dim L+(mu_{u-r,v-s})(-nu, n)`.
pub fn verify_exact_sequence(
    lvl: &AdmissibleLevel,
    lab: &MinimalLabel,
    max_grade2: u64,
) -> Result<VerificationReport> {
    let data = spectrum_params(lvl, lab)?;
    let dual = lab.kac_dual(lvl);
    let mu = &data.mu_rs.0;
    let mu_dual = lvl.mu_rs(dual.r, dual.s);
    let fam = family_for_weight(lvl, lab, mu)?;
    let mut report = VerificationReport::new(format!(
        "exact-sequence {} (u,v)=({},{}) (r,s)=({},{})",
        lvl.kind, lvl.u, lvl.v, lab.r, lab.s
    ));
    // All weights of the relaxed module: mu + j omega; sl(2) supports only
    // even steps.
    let steps: Vec<i64> = match (lvl.kind, data.sector) {
        (AlgebraKind::Sl2, _) => vec![-4, -2, 0, 2, 4],
        _ => vec![-2, -1, 0, 1, 2],
    };
    for j in steps {
        let nu = mu + &Rational::int(j);
        let step = if data.sector == Sector::R { 1 } else { 2 };
        let mut grade2 = 0u64;
        while grade2 <= max_grade2 {
            let gen_t = &nu + &Rational::int(grade2 as i64);
            if !fam.in_support(&gen_t) {
                grade2 += step;
                continue;
            }
            let lhs = relaxed_dim(&fam, &nu, grade2)?;
            let sub = hw_verma_dim(lvl.kind, data.sector, mu, &lvl.level, &nu, grade2, true)?;
            let quot = hw_verma_dim(
                lvl.kind,
                data.sector,
                &mu_dual,
                &lvl.level,
                &(-&nu),
                grade2,
                true,
            )?;
            report.record(
                format!(
                    "dim E({nu}, +{g}) = L+({mu})({nu}) + L+({mu_dual})({mnu})",
                    g = Rational::new(grade2 as i64, 2),
                    mnu = -&nu
                ),
                lhs.to_string(),
                (sub + quot).to_string(),
            );
            grade2 += step;
        }
    }
    Ok(report)
}

/// The level -1 regression: the worked counterexample at `q = -1/2`,
/// `k = -1`, where the naive two-factor dimension count fails.
///
/// (a) grade-1 simple highest-weight dimensions `(0, 0, 1, 2)` at weights
/// `(3, 1, -1, -3)`; (b) grade-1 stringiness of the relaxed quotient across
/// four weights, computed directly from the annihilation system; (c) the
/// naive two-factor dimension prediction violates (b); (d) the grade-one
/// relation with coefficients `<nu-rho, rho>` and `(1/2)<nu-rho, nu+rho>`
/// is annihilated by `e_1`, `h_1`, `f_1` exactly.
pub fn verify_counterexample_k_minus1(cache_dir: Option<PathBuf>) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("counterexample k = -1");
    let k = Rational::int(-1);
    let hw = Rational::int(-1);
    // (a)
    let expected_a = [0usize, 0, 1, 2];
    for (i, w) in [3i64, 1, -1, -3].iter().enumerate() {
        let dim = hw_verma_dim(
            AlgebraKind::Sl2,
            Sector::Ns,
            &hw,
            &k,
            &Rational::int(*w),
            2,
            true,
        )?;
        report.record(
            format!("(a) dim L+(-w)({w}w, Delta+1)"),
            expected_a[i].to_string(),
            dim.to_string(),
        );
    }
    // (b) direct grade-1 dimensions of the relaxed quotient.
    let fam = GroundFamily::new(
        AlgebraKind::Sl2,
        Sector::Ns,
        DynkinLabel(hw.clone()),
        CasimirParam::Q(Rational::new(-1, 2)),
        k.clone(),
    )?;
    let mut dims = Vec::new();
    for w in [-3i64, -1, 1, 3] {
        let d = relaxed_dim_lowest_grade_direct(&fam, &Rational::int(w))?;
        dims.push(d);
        report.record(
            format!("(b) dim E({w}w, Delta+1) direct"),
            dims[0].to_string(),
            d.to_string(),
        );
    }
    // The Lemma-shift route must agree with the direct computation.
    let via_rank = relaxed_dim(&fam, &Rational::int(-1), 2)?;
    report.record(
        "(b) shift-rule dimension agrees".into(),
        dims[0].to_string(),
        via_rank.to_string(),
    );
    // (c) naive exact-sequence prediction differs across weights, so it
    // cannot all match the stringy value.
    let naive = |w: i64| -> Result<usize> {
        let a = hw_verma_dim(
            AlgebraKind::Sl2,
            Sector::Ns,
            &hw,
            &k,
            &Rational::int(w),
            2,
            true,
        )?;
        let b = hw_verma_dim(
            AlgebraKind::Sl2,
            Sector::Ns,
            &hw,
            &k,
            &Rational::int(-w),
            2,
            true,
        )?;
        Ok(a + b)
    };
    let naive_m3 = naive(-3)?;
    let naive_m1 = naive(-1)?;
    report.record(
        "(c) naive prediction at -3w and -1w differs".into(),
        "true".into(),
        (naive_m3 != naive_m1).to_string(),
    );
    report.record(
        "(c) naive prediction (2 at -3w, 1 at -1w)".into(),
        "[2, 1]".into(),
        format!("[{naive_m3}, {naive_m1}]"),
    );
    report.record(
        "(c) stringy value violated by naive prediction".into(),
        "true".into(),
        (naive_m1 != dims[1]).to_string(),
    );
    // (d) the singular relation, annihilated exactly after straightening
    // each positive-mode application to normal form.
    let ctx = ActionCtx::for_family(&fam);
    let mut straightener = Straightener::new(AlgebraKind::Sl2, Sector::Ns, k.clone());
    if let Some(dir) = cache_dir {
        straightener = straightener.with_cache_dir(dir);
    }
    for w in [-3i64, -1, 1, 3] {
        let nu = Rational::int(w);
        let state = singular_combination(&ctx, &nu)?;
        for gen in [Gen::E, Gen::H, Gen::F] {
            let image =
                apply_mode_via_straightening(&straightener, &ctx, Mode::new(gen, 2), &state)?;
            report.record(
                format!("(d) {gen}_1 kills the relation at nu = {w}w"),
                "0".into(),
                if image.is_zero() {
                    "0".into()
                } else {
                    format!("{image}")
                },
            );
        }
    }
    Ok(report)
}

/// Applies a mode to a state by straightening the full word of each term to
/// PBW normal form first, then evaluating the normal form on the ground
/// vector. Exercises the word-level rewriting engine (and its on-disk
/// cache) as an independent route to the action machinery.
fn apply_mode_via_straightening(
    straightener: &Straightener,
    ctx: &ActionCtx,
    m: Mode,
    state: &RelaxedState,
) -> Result<RelaxedState> {
    let mut out = RelaxedState::zero();
    for ((mono, key), coeff) in state.iter() {
        let mut word = vec![m];
        word.extend(mono.to_word());
        let normal = straightener.straighten(&word)?;
        let ground = RelaxedState::ground(key.clone());
        let image = ctx.apply_element(&normal, &ground)?;
        out.add_assign_scaled(&image, coeff);
    }
    Ok(out)
}

/// `e_{-1} v_{nu-alpha} + <nu-rho,rho> h_{-1} v_nu - (1/2)<nu-rho,nu+rho>
/// f_{-1} v_{nu+alpha}` in the relaxed Verma at `q = -1/2`, `k = -1`.
fn singular_combination(ctx: &ActionCtx, nu: &Rational) -> Result<RelaxedState> {
    let two = Rational::int(2);
    let half = Rational::new(1, 2);
    // <nu - rho, rho> = (t-1)/2 ; (1/2)<nu-rho, nu+rho> = (t^2-1)/4.
    let t = nu;
    let c_h = &(t - &Rational::one()) * &half;
    let c_f = &(&(t * t) - &Rational::one()) / &Rational::int(4);
    let mut state = RelaxedState::zero();
    let vm = ctx.ground_state(&(t - &two))?;
    let v0 = ctx.ground_state(t)?;
    let vp = ctx.ground_state(&(t + &two))?;
    state.add_assign_scaled(
        &ctx.apply_mode(Mode::new(Gen::E, -2), &vm)?,
        &Gaussian::one(),
    );
    state.add_assign_scaled(
        &ctx.apply_mode(Mode::new(Gen::H, -2), &v0)?,
        &Gaussian::from_rational(c_h),
    );
    state.add_assign_scaled(
        &ctx.apply_mode(Mode::new(Gen::F, -2), &vp)?,
        &Gaussian::from_rational(-c_f),
    );
    Ok(state)
}

/// Verma string-function stabilization: for sl(2) and Neveu-Schwarz Vermas
/// the exact count at grade `n`, weight `hw - m alpha`, equals the
/// closed-form limiting coefficient for every `m >= n`, through `n = max_n`.
pub fn verify_verma_stabilization(max_n: u32) -> Result<VerificationReport> {
    use crate::characters::{delta_of_hw, verma_limit_string_function, verma_string_function};
    let mut report = VerificationReport::new("verma stabilization");
    let level = Rational::new(7, 5);
    for (kind, sector) in [
        (AlgebraKind::Sl2, Sector::Ns),
        (AlgebraKind::Osp12, Sector::Ns),
    ] {
        let hw = Rational::new(-3, 7);
        let delta = delta_of_hw(kind, sector, &hw, &level)?;
        let limit = verma_limit_string_function(kind, sector, &delta, max_n + 1)?;
        for n in 0..=max_n as i64 {
            for m in n..=(n + 2) {
                let nu = &hw - &Rational::int(2 * m);
                let s = verma_string_function(kind, sector, &hw, &level, &nu, max_n + 1)?;
                report.record(
                    format!("{kind}/{sector} grade {n}, shift m = {m}"),
                    limit.single().coeff_at_order(n)?.to_string(),
                    s.coeff_at_order(n)?.to_string(),
                );
            }
        }
    }
    Ok(report)
}

/// Rank stabilization along `nu = rep + m alpha`: the rank sequence must end
/// with a constant tail of the required length.
pub fn verify_rank_stabilization(
    fam: &GroundFamily,
    grade2: u64,
    m_range: std::ops::RangeInclusive<i64>,
    tail: usize,
) -> Result<VerificationReport> {
    let mut report = VerificationReport::new(format!(
        "rank-stabilization {}/{} param {} grade2 {}",
        fam.kind,
        fam.sector,
        fam.param.value(),
        grade2
    ));
    let origin = match fam.max_solution() {
        Some(m) => m,
        None => fam.coset_rep.0.clone(),
    };
    let parity_shift = (grade2 % 2) as i64;
    let mut ranks = Vec::new();
    for m in m_range {
        let nu = &(&origin + &Rational::int(2 * m)) - &Rational::int(parity_shift);
        let res = shapovalov_matrix(fam, &nu, grade2);
        match res {
            Ok(r) => {
                ranks.push((m, r.rank));
            }
            Err(_) => continue,
        }
    }
    let n = ranks.len();
    let stable = n >= tail && ranks[n - tail..].iter().all(|(_, r)| *r == ranks[n - 1].1);
    report.record(
        format!(
            "ranks along the coset: {:?}",
            ranks.iter().map(|(_, r)| *r).collect::<Vec<_>>()
        ),
        format!("constant tail of length >= {tail}"),
        if stable {
            format!("constant tail of length >= {tail}")
        } else {
            "unstable".into()
        },
    );
    Ok(report)
}
