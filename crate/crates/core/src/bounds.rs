//! Genus and fibre-degree bounds for surfaces with `K^2 < 4χ - 6`.
//!
//! Irrational bounds of the form `p + sqrt(q)` are never evaluated in floating
//! point; every comparison goes through an equivalent integer predicate.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_traits::ToPrimitive;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::invariants::{rito_gh, BranchConfig, SurfaceInvariants};
use crate::scalar::{cmp_sqrt_forms, isqrt, sign_plus_sqrt, ExactScalar};

/// A real bound `p + sqrt(q)`; `q = None` for a purely rational bound.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Bound {
    #[serde(rename = "bound_p")]
    pub p: ExactScalar,
    #[serde(rename = "bound_q_or_null")]
    pub q: Option<i64>,
}

impl Bound {
    pub fn rational(p: ExactScalar) -> Self {
        Self { p, q: None }
    }

    pub fn with_sqrt(p: i64, q: i64) -> Self {
        assert!(q >= 0);
        Self { p: ExactScalar::from_int(p), q: Some(q) }
    }

    fn radicand(&self) -> i64 {
        self.q.unwrap_or(0)
    }

    /// `x <= p + sqrt(q)`, decided exactly.
    pub fn admits(&self, x: i64) -> bool {
        let diff = self.p.clone() - x;
        sign_plus_sqrt(&diff, self.radicand()) != Ordering::Less
    }

    /// Largest integer not exceeding the bound.
    pub fn floor(&self) -> i64 {
        let base = self.p.floor().to_i64().expect("bound out of i64 range");
        // p + sqrt(q) < floor(p) + isqrt(q) + 2
        let mut x = base + isqrt(self.radicand()) + 1;
        while !self.admits(x) {
            x -= 1;
        }
        x
    }

    /// Largest even integer not exceeding the bound.
    pub fn largest_even(&self) -> i64 {
        let f = self.floor();
        f - f.rem_euclid(2)
    }

    pub fn approx(&self) -> f64 {
        self.p.approx_f64() + (self.radicand() as f64).sqrt()
    }
}

impl PartialOrd for Bound {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Bound {
    fn cmp(&self, other: &Self) -> Ordering {
        cmp_sqrt_forms(&self.p, self.radicand(), &other.p, other.radicand())
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.q {
            None => write!(f, "{}", self.p),
            Some(q) => write!(f, "{}+sqrt({q})", self.p),
        }
    }
}

/// Labels of the fibre-degree bounds. `c2` is the primed `c` bound and `c3`
/// the linear middle alternative of the `r_m = k/2, l = k-2` case; the
/// numbered `e`, `f`, `g` labels are the unprimed/primed pairs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CaseLabel {
    A,
    B,
    C,
    C2,
    C3,
    D,
    E1,
    E2,
    F1,
    F2,
    G1,
    G2,
}

impl CaseLabel {
    pub const ALL: [CaseLabel; 12] = [
        CaseLabel::A,
        CaseLabel::B,
        CaseLabel::C,
        CaseLabel::C2,
        CaseLabel::C3,
        CaseLabel::D,
        CaseLabel::E1,
        CaseLabel::E2,
        CaseLabel::F1,
        CaseLabel::F2,
        CaseLabel::G1,
        CaseLabel::G2,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CaseLabel::A => "a",
            CaseLabel::B => "b",
            CaseLabel::C => "c",
            CaseLabel::C2 => "c2",
            CaseLabel::C3 => "c3",
            CaseLabel::D => "d",
            CaseLabel::E1 => "e1",
            CaseLabel::E2 => "e2",
            CaseLabel::F1 => "f1",
            CaseLabel::F2 => "f2",
            CaseLabel::G1 => "g1",
            CaseLabel::G2 => "g2",
        }
    }

    /// Smallest number of blow-downs `t` the case allows.
    pub fn min_t(self) -> i64 {
        match self {
            CaseLabel::A | CaseLabel::B | CaseLabel::C2 | CaseLabel::F2 => 2,
            CaseLabel::C | CaseLabel::C3 | CaseLabel::F1 => 1,
            CaseLabel::D | CaseLabel::E1 | CaseLabel::E2 | CaseLabel::G1 | CaseLabel::G2 => 0,
        }
    }

    /// Whether the bound is of the form `5 + sqrt(1 + 8χ)`.
    pub fn is_sqrt_form(self) -> bool {
        matches!(self, CaseLabel::E1 | CaseLabel::G1)
    }
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CaseLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CaseLabel::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| Error::UnknownCase(s.to_string()))
    }
}

fn check_regime(chi: i64, k2: i64) -> Result<()> {
    if chi < 1 {
        return Err(Error::PreconditionViolated(format!("requires chi >= 1, got {chi}")));
    }
    if k2 >= 4 * chi - 6 {
        return Err(Error::PreconditionViolated(format!(
            "requires K^2 < 4*chi - 6, got K^2 = {k2}, chi = {chi}"
        )));
    }
    Ok(())
}

/// Upper bound on the genus `g` of a minimal hyperelliptic pencil, as the
/// floor of
/// `max{-1 + 8χ/D, 1 + (8χ-16)/D, 1 + 8χ/(D+3), (3 + sqrt(1+8χ))/2}`
/// with `D = 4χ - K^2 - 6 > 0`.
pub fn genus_bound(chi: i64, k2: i64) -> Result<i64> {
    check_regime(chi, k2)?;
    let d = 4 * chi - k2 - 6;
    let rational_terms = [
        ExactScalar::from_int(-1) + ExactScalar::ratio(8 * chi, d),
        ExactScalar::from_int(1) + ExactScalar::ratio(8 * chi - 16, d),
        ExactScalar::from_int(1) + ExactScalar::ratio(8 * chi, d + 3),
    ];
    let best_rational = rational_terms
        .iter()
        .map(|x| x.floor().to_i64().expect("bound out of range"))
        .max()
        .unwrap_or(i64::MIN);
    Ok(best_rational.max(sqrt_term_floor(chi)))
}

/// Largest integer `g` with `g <= (3 + sqrt(1 + 8n)) / 2`, `n >= 0`.
///
/// `g` qualifies iff `2g - 3 <= 0` or `(2g - 3)^2 <= 1 + 8n`, and for integral
/// `2g - 3` that is `2g - 3 <= isqrt(1 + 8n)`.
pub fn sqrt_term_floor(n: i64) -> i64 {
    (3 + isqrt(1 + 8 * n)).div_euclid(2)
}

/// One fibre-degree bound `k <= bound`, evaluated at its smallest allowed `t`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaseBound {
    pub label: CaseLabel,
    #[serde(flatten)]
    pub bound: Bound,
    pub assumed_t: i64,
}

/// The case bound `label` at an arbitrary admissible `t`.
pub fn case_bound_at(label: CaseLabel, chi: i64, k2: i64, t: i64) -> Result<Bound> {
    check_regime(chi, k2)?;
    if t < label.min_t() {
        return Err(Error::PreconditionViolated(format!(
            "case {label} needs t >= {}, got {t}",
            label.min_t()
        )));
    }
    let s = 4 * chi + t - k2;
    let frac = |shift: i64, num: i64, den: i64| {
        Bound::rational(ExactScalar::from_int(shift) + ExactScalar::ratio(num, den))
    };
    let bound = match label {
        CaseLabel::A => frac(0, 16 * chi - 16, s - 8),
        CaseLabel::B => frac(0, 16 * chi, s - 8),
        CaseLabel::C => frac(4, 16 * chi, s - 4),
        CaseLabel::C2 => frac(4, 16 * chi - 4, s - 5),
        CaseLabel::C3 => frac(4, 16 * chi - 16, s + 2),
        CaseLabel::D => frac(4, 16 * chi - 32, s - 6),
        CaseLabel::E1 | CaseLabel::G1 => Bound::with_sqrt(5, 1 + 8 * chi),
        CaseLabel::E2 => frac(4, 16 * chi, s),
        CaseLabel::F1 => frac(2, 16 * chi - 16, s - 2),
        CaseLabel::F2 => frac(2, 16 * chi - 16, s - 8),
        CaseLabel::G2 => frac(2, 16 * chi - 16, s - 6),
    };
    Ok(bound)
}

/// All case bounds with the summary cap they imply.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KBoundSummary {
    pub cases: Vec<CaseBound>,
    /// First label (in canonical order) attaining the largest bound.
    pub max_label: CaseLabel,
    pub max_even_k: i64,
    pub genus_cap: i64,
}

impl KBoundSummary {
    pub fn max_case(&self) -> &CaseBound {
        self.cases
            .iter()
            .find(|c| c.label == self.max_label)
            .expect("max label is one of the cases")
    }
}

pub fn k_bound_cases(chi: i64, k2: i64) -> Result<KBoundSummary> {
    check_regime(chi, k2)?;
    let cases = CaseLabel::ALL
        .into_iter()
        .map(|label| {
            let t = label.min_t();
            case_bound_at(label, chi, k2, t).map(|bound| CaseBound { label, bound, assumed_t: t })
        })
        .collect::<Result<Vec<_>>>()?;
    let mut best = &cases[0];
    for c in &cases[1..] {
        if c.bound > best.bound {
            best = c;
        }
    }
    let max_even_k = best.bound.largest_even();
    Ok(KBoundSummary {
        max_label: best.label,
        max_even_k,
        genus_cap: (max_even_k - 2) / 2,
        cases,
    })
}

/// `(2l - G)(k - r_m - 2) - H`.
pub fn p1(l: i64, r_m: i64, g: i64, h: i64, k: i64) -> i64 {
    (2 * l - g) * (k - r_m - 2) - h
}

/// `(2l - G)((r_m-4)(k-r_m) + (r_m-2)(k-r_m-2)) - H(2 r_m - 6)`.
pub fn p2(l: i64, r_m: i64, g: i64, h: i64, k: i64) -> i64 {
    (2 * l - g) * paired_weight(r_m, k) - h * (2 * r_m - 6)
}

fn paired_weight(r_m: i64, k: i64) -> i64 {
    (r_m - 4) * (k - r_m) + (r_m - 2) * (k - r_m - 2)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LemmaVariant {
    /// `2l <= G + H / (k - r_m - 2)`
    A,
    /// `2l <= G + H (2 r_m - 6) / ((r_m-4)(k-r_m) + (r_m-2)(k-r_m-2))`,
    /// when every point of order `r_m` comes from an `(r_m - 1, r_m - 1)` pair.
    B,
}

/// Check the multiplicity inequality for `config` (needs `k > 8`).
pub fn lemma_check(
    config: &BranchConfig,
    inv: &SurfaceInvariants,
    variant: LemmaVariant,
) -> Result<bool> {
    let k = config.k();
    if k <= 8 {
        return Err(Error::PreconditionViolated(format!("requires k > 8, got {k}")));
    }
    let r_m = config.spectrum().r_max();
    let (g, h) = rito_gh(k, inv.chi, inv.k2_min, config.t());
    let two_l = 2 * config.l();
    match variant {
        LemmaVariant::A => {
            let den = k - r_m - 2;
            if den <= 0 {
                return Err(Error::PreconditionViolated(format!(
                    "k - r_m - 2 = {den} must be positive"
                )));
            }
            Ok(two_l * den <= g * den + h)
        }
        LemmaVariant::B => {
            let sp = config.spectrum();
            if r_m < 4 {
                return Err(Error::PreconditionViolated(format!(
                    "requires r_m >= 4, got {r_m}"
                )));
            }
            if sp.count(r_m) > sp.count(r_m - 2) {
                return Err(Error::PreconditionViolated(format!(
                    "not every r = {r_m} entry is paired with an r = {} entry",
                    r_m - 2
                )));
            }
            let den = paired_weight(r_m, k);
            if den <= 0 {
                return Err(Error::PreconditionViolated(format!(
                    "denominator {den} must be positive"
                )));
            }
            Ok(two_l * den <= g * den + h * (2 * r_m - 6))
        }
    }
}

/// Outcome of one fibre-degree inequality.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MainpropOutcome {
    pub holds: bool,
    /// For case `d`: whether `n <= j + 7`.
    pub side_condition: Option<bool>,
}

/// Evaluate the inequality behind case `label` for given `(χ, K^2, t, k)`.
/// Case `d` also needs `j = l - k >= 0` and `n`, the number of points of
/// multiplicity `k/2`.
pub fn mainprop_inequality(
    label: CaseLabel,
    chi: i64,
    k2: i64,
    t: i64,
    k: i64,
    j: Option<i64>,
    n: Option<i64>,
) -> Result<MainpropOutcome> {
    if t < label.min_t() {
        return Err(Error::PreconditionViolated(format!(
            "case {label} needs t >= {}, got {t}",
            label.min_t()
        )));
    }
    let s = 4 * chi + t - k2;
    let quad = |a: i64, b: i64, c: i64| a * k * k + b * k + c <= 0;
    let mut side_condition = None;
    let holds = match label {
        CaseLabel::A => (s - 8) * k <= 16 * chi - 16,
        CaseLabel::B => quad(s - 8, -16 * chi, 32 * chi),
        CaseLabel::C => quad(
            s - 4,
            -48 * chi - 8 * t + 8 * k2 + 32,
            160 * chi + 16 * t - 16 * k2 - 96,
        ),
        CaseLabel::C2 => quad(
            s - 5,
            -48 * chi - 8 * t + 8 * k2 + 44,
            160 * chi + 16 * t - 16 * k2 - 128,
        ),
        CaseLabel::C3 => (s + 2) * k <= 32 * chi + 4 * t - 4 * k2 - 8,
        CaseLabel::D => {
            let (j, n) = match (j, n) {
                (Some(j), Some(n)) if j >= 0 && n >= 0 => (j, n),
                _ => {
                    return Err(Error::PreconditionViolated(
                        "case d needs j >= 0 and n >= 0".into(),
                    ))
                }
            };
            side_condition = Some(n <= j + 7);
            (s + 8 + 2 * j - 2 * n) * k <= 32 * chi + 4 * t - 4 * k2 - 8 * n
        }
        CaseLabel::E1 | CaseLabel::G1 => Bound::with_sqrt(5, 1 + 8 * chi).admits(k),
        CaseLabel::E2 => s * k <= 32 * chi + 4 * t - 4 * k2,
        CaseLabel::F1 => (s - 2) * k <= 24 * chi + 2 * t - 2 * k2 - 20,
        CaseLabel::F2 => quad(
            s - 8,
            -32 * chi - 4 * t + 4 * k2 + 48,
            80 * chi + 4 * t - 4 * k2 - 96,
        ),
        CaseLabel::G2 => (s - 6) * k <= 24 * chi + 2 * t - 2 * k2 - 28,
    };
    Ok(MainpropOutcome { holds, side_condition })
}

/// Largest even `r` allowed for the maximal multiplicity of a branch curve
/// with class data `(k, l)`; 0 when no non-negligible point fits.
///
/// Always applies `r <= k/2 + 2` (`k ≡ 0 mod 4`) or `r <= k/2 + 1`
/// (`k ≡ 2 mod 4`) and `r <= l - k/2 + 2`; `deep_regime` (`K^2 < 3χ - 6`)
/// adds `r <= 8`.
pub fn r_max_cap(k: i64, l: i64, deep_regime: bool) -> i64 {
    let fibre_cap = if k.rem_euclid(4) == 0 { k / 2 + 2 } else { k / 2 + 1 };
    let mut cap = fibre_cap.min(l - k / 2 + 2);
    if deep_regime {
        cap = cap.min(8);
    }
    let even = cap - cap.rem_euclid(2);
    if even < 2 {
        0
    } else {
        even
    }
}

/// `(k - 12)(l - 12) <= 29 - 6 N8`, meaningful for `32 <= χ <= 53`.
pub fn eq2_check(k: i64, l: i64, n8: i64, chi: i64) -> Result<bool> {
    if !(32..=53).contains(&chi) {
        return Err(Error::PreconditionViolated(format!(
            "requires 32 <= chi <= 53, got {chi}"
        )));
    }
    Ok((k - 12) * (l - 12) <= 29 - 6 * n8)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::{canres_invariants, SingularitySpectrum};

    #[test]
    fn genus_bound_examples() {
        assert_eq!(genus_bound(5, 8), Ok(5));
        assert_eq!(genus_bound(46, 128), Ok(11));
        assert!(matches!(genus_bound(10, 40), Err(Error::PreconditionViolated(_))));
        assert!(genus_bound(0, -20).is_err());
    }

    #[test]
    fn sqrt_term() {
        // (3 + sqrt(41)) / 2 ~ 4.70
        assert_eq!(sqrt_term_floor(5), 4);
        // (3 + sqrt(369)) / 2 ~ 11.10
        assert_eq!(sqrt_term_floor(46), 11);
        // (3 + sqrt(49)) / 2 = 5 exactly
        assert_eq!(sqrt_term_floor(6), 5);
    }

    #[test]
    fn k_bounds_chi61() {
        let s = k_bound_cases(61, 176).unwrap();
        let get = |l| s.cases.iter().find(|c| c.label == l).unwrap().bound.clone();
        assert_eq!(get(CaseLabel::A), Bound::rational(ExactScalar::ratio(960, 62)));
        assert_eq!(
            get(CaseLabel::D),
            Bound::rational(ExactScalar::from_int(4) + ExactScalar::ratio(944, 62))
        );
        assert_eq!(get(CaseLabel::E1), Bound::with_sqrt(5, 489));
        assert_eq!(s.max_label, CaseLabel::E1);
        assert_eq!(s.max_even_k, 26);
        assert_eq!(s.genus_cap, 12);
    }

    #[test]
    fn k_bounds_chi5() {
        let s = k_bound_cases(5, 8).unwrap();
        // 16χ/D at t = 2 is 80/6, above the c bound 4 + 80/9
        assert_eq!(s.max_label, CaseLabel::B);
        assert_eq!(s.max_case().bound, Bound::rational(ExactScalar::ratio(40, 3)));
        let c = s.cases.iter().find(|c| c.label == CaseLabel::C).unwrap();
        assert_eq!(c.bound, Bound::rational(ExactScalar::from_int(4) + ExactScalar::ratio(80, 9)));
        assert_eq!(s.max_even_k, 12);
        assert_eq!(s.genus_cap, 5);
    }

    #[test]
    fn bound_floor_and_admits() {
        let b = Bound::with_sqrt(5, 489);
        assert_eq!(b.floor(), 27);
        assert!(b.admits(27));
        assert!(!b.admits(28));
        assert_eq!(b.largest_even(), 26);
        let r = Bound::rational(ExactScalar::ratio(-7, 2));
        assert_eq!(r.floor(), -4);
        assert_eq!(r.to_string(), "-7/2");
        assert_eq!(b.to_string(), "5+sqrt(489)");
    }

    #[test]
    fn case_labels_parse() {
        assert_eq!("c2".parse::<CaseLabel>(), Ok(CaseLabel::C2));
        assert_eq!("z".parse::<CaseLabel>(), Err(Error::UnknownCase("z".into())));
        assert!(case_bound_at(CaseLabel::A, 61, 176, 1).is_err());
    }

    #[test]
    fn p1_p2_examples() {
        assert_eq!(p1(14, 4, 26, 20, 16), 0);
        assert_eq!(p2(14, 4, 26, 20, 16), 0);
        assert_eq!(p1(26, 2, 52, 0, 12), 0);
    }

    #[test]
    fn lemma_examples() {
        let c = BranchConfig::new(16, 14, None, SingularitySpectrum::new(vec![2, 4]).unwrap(), 1)
            .unwrap();
        let inv = canres_invariants(&c).unwrap();
        assert_eq!(lemma_check(&c, &inv, LemmaVariant::A), Ok(true));
        assert_eq!(lemma_check(&c, &inv, LemmaVariant::B), Ok(true));

        let c = BranchConfig::new(12, 26, None, SingularitySpectrum::new(vec![2]).unwrap(), 0)
            .unwrap();
        let inv = canres_invariants(&c).unwrap();
        assert_eq!(lemma_check(&c, &inv, LemmaVariant::A), Ok(true));
        assert!(lemma_check(&c, &inv, LemmaVariant::B).is_err());

        let c = BranchConfig::smooth(8, 12, 0).unwrap();
        let inv = canres_invariants(&c).unwrap();
        assert!(lemma_check(&c, &inv, LemmaVariant::A).is_err());

        // unpaired maximal point
        let c = BranchConfig::new(16, 14, None, SingularitySpectrum::new(vec![4]).unwrap(), 0)
            .unwrap();
        let inv = canres_invariants(&c).unwrap();
        assert!(lemma_check(&c, &inv, LemmaVariant::B).is_err());
    }

    #[test]
    fn mainprop_examples() {
        let a = mainprop_inequality(CaseLabel::A, 61, 176, 2, 12, None, None).unwrap();
        assert!(a.holds);
        let e2 = mainprop_inequality(CaseLabel::E2, 61, 176, 0, 12, None, None).unwrap();
        assert!(e2.holds);
        let d = mainprop_inequality(CaseLabel::D, 61, 176, 0, 12, Some(0), Some(0)).unwrap();
        assert_eq!(d, MainpropOutcome { holds: true, side_condition: Some(true) });
        let d = mainprop_inequality(CaseLabel::D, 61, 176, 0, 12, Some(0), Some(8)).unwrap();
        assert_eq!(d.side_condition, Some(false));
        assert!(mainprop_inequality(CaseLabel::D, 61, 176, 0, 12, None, None).is_err());
        assert!(mainprop_inequality(CaseLabel::A, 61, 176, 1, 12, None, None).is_err());
        // 62·30 = 1860 > 960
        assert!(!mainprop_inequality(CaseLabel::A, 61, 176, 2, 30, None, None).unwrap().holds);
    }

    #[test]
    fn r_max_cap_examples() {
        assert_eq!(r_max_cap(16, 14, true), 8);
        assert_eq!(r_max_cap(14, 11, false), 6);
        assert_eq!(r_max_cap(12, 8, true), 4);
        assert_eq!(r_max_cap(12, 3, true), 0);
        assert_eq!(r_max_cap(14, 40, false), 8);
        assert_eq!(r_max_cap(16, 40, false), 10);
    }

    #[test]
    fn eq2_examples() {
        assert_eq!(eq2_check(16, 18, 1, 40), Ok(false));
        assert_eq!(eq2_check(16, 14, 0, 42), Ok(true));
        for l in 0..60 {
            for n8 in 0..=4 {
                assert_eq!(eq2_check(12, l, n8, 35), Ok(true));
            }
        }
        assert!(eq2_check(16, 14, 0, 31).is_err());
    }
}
