//! Branch-curve data and the invariants of the associated double cover.
//!
//! A double cover of a Hirzebruch surface branched along
//! `B ≡ k C0 + (e k/2 + l) F` has, after canonical resolution, invariants
//! determined by `(k, l)` and the multiset of canonical-resolution
//! multiplicities `r_i`. Everything here is independent of `e`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::ExactScalar;

/// Multiset of canonical-resolution multiplicities `r_i` (each even, `>= 2`).
///
/// Entries equal to 2 are negligible: they contribute zero to every
/// correction term `Σ (r_i - 2)·(...)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SingularitySpectrum {
    // kept sorted ascending
    r_list: Vec<i64>,
}

impl SingularitySpectrum {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn new(mut r_list: Vec<i64>) -> Result<Self> {
        if let Some(&bad) = r_list.iter().find(|&&r| r < 2 || r % 2 != 0) {
            return Err(Error::InvalidConfig(format!(
                "multiplicity r = {bad} must be even and at least 2"
            )));
        }
        r_list.sort_unstable();
        Ok(Self { r_list })
    }

    /// Spectrum with `n4` entries equal to 4, `n6` equal to 6 and `n8` equal to 8.
    pub fn from_counts(n4: u32, n6: u32, n8: u32) -> Self {
        let mut r_list = Vec::with_capacity((n4 + n6 + n8) as usize);
        r_list.extend(std::iter::repeat_n(4, n4 as usize));
        r_list.extend(std::iter::repeat_n(6, n6 as usize));
        r_list.extend(std::iter::repeat_n(8, n8 as usize));
        Self { r_list }
    }

    /// Add a `(2r-1, 2r-1)`-point, i.e. the pair `{2r - 2, 2r}`.
    /// A `(3,3)`-point is `push_paired_point(2)`.
    pub fn push_paired_point(&mut self, r: i64) -> Result<()> {
        if r < 2 {
            return Err(Error::InvalidConfig(format!(
                "a ({0},{0})-point needs 2r - 1 >= 3",
                2 * r - 1
            )));
        }
        self.r_list.push(2 * r - 2);
        self.r_list.push(2 * r);
        self.r_list.sort_unstable();
        Ok(())
    }

    pub fn push(&mut self, r: i64) -> Result<()> {
        let one = Self::new(vec![r])?;
        self.r_list.extend(one.r_list);
        self.r_list.sort_unstable();
        Ok(())
    }

    pub fn r_list(&self) -> &[i64] {
        &self.r_list
    }

    /// `N_j = #{i : r_i = j}`.
    pub fn count(&self, j: i64) -> u32 {
        self.r_list.iter().filter(|&&r| r == j).count() as u32
    }

    pub fn n4(&self) -> u32 {
        self.count(4)
    }

    pub fn n6(&self) -> u32 {
        self.count(6)
    }

    pub fn n8(&self) -> u32 {
        self.count(8)
    }

    /// Largest `r_i`, or 0 for a smooth branch curve.
    pub fn r_max(&self) -> i64 {
        self.r_list.last().copied().unwrap_or(0)
    }

    /// True when every entry lies in `{2, 4, 6, 8}`.
    pub fn within_deep_regime(&self) -> bool {
        self.r_max() <= 8
    }

    /// `Σ f(r_i)` over all entries.
    pub fn sum_of(&self, f: impl Fn(i64) -> i64) -> i64 {
        self.r_list.iter().map(|&r| f(r)).sum()
    }
}

impl fmt::Display for SingularitySpectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, r) in self.r_list.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{r}")?;
        }
        f.write_str("}")
    }
}

/// Numerical branch-curve datum.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "BranchConfigRecord", into = "BranchConfigRecord")]
pub struct BranchConfig {
    k: i64,
    l: i64,
    e: Option<i64>,
    spectrum: SingularitySpectrum,
    t: i64,
}

impl BranchConfig {
    pub fn new(
        k: i64,
        l: i64,
        e: Option<i64>,
        spectrum: SingularitySpectrum,
        t: i64,
    ) -> Result<Self> {
        if k < 6 || k % 2 != 0 {
            return Err(Error::InvalidConfig(format!(
                "k = {k} must be even and at least 6"
            )));
        }
        if t < 0 {
            return Err(Error::InvalidConfig(format!("t = {t} must be non-negative")));
        }
        if let Some(e) = e {
            if e < 0 {
                return Err(Error::InvalidConfig(format!("e = {e} must be non-negative")));
            }
            let fibre_coeff = e * k / 2 + l;
            if fibre_coeff < 0 {
                return Err(Error::InvalidConfig(format!(
                    "e k/2 + l = {fibre_coeff} must be non-negative"
                )));
            }
            if fibre_coeff % 2 != 0 {
                return Err(Error::InvalidConfig(format!(
                    "branch class {k} C0 + {fibre_coeff} F is not even"
                )));
            }
        }
        Ok(Self { k, l, e, spectrum, t })
    }

    /// Branch datum with negligible-only singularities.
    pub fn smooth(k: i64, l: i64, t: i64) -> Result<Self> {
        Self::new(k, l, None, SingularitySpectrum::empty(), t)
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    pub fn l(&self) -> i64 {
        self.l
    }

    pub fn e(&self) -> Option<i64> {
        self.e
    }

    pub fn t(&self) -> i64 {
        self.t
    }

    pub fn spectrum(&self) -> &SingularitySpectrum {
        &self.spectrum
    }

    pub fn genus(&self) -> i64 {
        (self.k - 2) / 2
    }

    pub fn with_l(&self, l: i64) -> Result<Self> {
        Self::new(self.k, l, self.e, self.spectrum.clone(), self.t)
    }

    pub fn with_t(&self, t: i64) -> Result<Self> {
        Self::new(self.k, self.l, self.e, self.spectrum.clone(), t)
    }
}

/// Flat serialized form of [`BranchConfig`].
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BranchConfigRecord {
    pub k: i64,
    pub l: i64,
    pub e: Option<i64>,
    pub t: i64,
    pub r_list: Vec<i64>,
    #[serde(default)]
    pub n4: Option<u32>,
    #[serde(default)]
    pub n6: Option<u32>,
    #[serde(default)]
    pub n8: Option<u32>,
}

impl From<BranchConfig> for BranchConfigRecord {
    fn from(c: BranchConfig) -> Self {
        Self {
            k: c.k,
            l: c.l,
            e: c.e,
            t: c.t,
            n4: Some(c.spectrum.n4()),
            n6: Some(c.spectrum.n6()),
            n8: Some(c.spectrum.n8()),
            r_list: c.spectrum.r_list,
        }
    }
}

impl TryFrom<BranchConfigRecord> for BranchConfig {
    type Error = Error;

    fn try_from(rec: BranchConfigRecord) -> Result<Self> {
        let spectrum = SingularitySpectrum::new(rec.r_list)?;
        for (name, given, derived) in [
            ("n4", rec.n4, spectrum.n4()),
            ("n6", rec.n6, spectrum.n6()),
            ("n8", rec.n8, spectrum.n8()),
        ] {
            if let Some(given) = given {
                if given != derived {
                    return Err(Error::InvalidConfig(format!(
                        "{name} = {given} disagrees with r_list ({derived})"
                    )));
                }
            }
        }
        BranchConfig::new(rec.k, rec.l, rec.e, spectrum, rec.t)
    }
}

impl fmt::Display for BranchConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(k={}, l={}, ", self.k, self.l)?;
        if let Some(e) = self.e {
            write!(f, "e={e}, ")?;
        }
        write!(f, "r={}, t={})", self.spectrum, self.t)
    }
}

/// Invariants of the minimal surface attached to a [`BranchConfig`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SurfaceInvariants {
    pub chi: i64,
    pub k2_canres: i64,
    pub k2_min: i64,
    pub genus: i64,
    pub delta: i64,
}

impl SurfaceInvariants {
    /// `chi >= 1` and `K^2 >= 1`, the numerical shadow of general type.
    pub fn is_general_type_sane(&self) -> bool {
        self.chi >= 1 && self.k2_min >= 1
    }
}

fn integral(name: &'static str, value: ExactScalar) -> Result<i64> {
    value.to_integer().ok_or_else(|| Error::NonIntegralInvariant {
        name,
        value: value.to_string(),
    })
}

/// `χ = 1 + (k-2)(l-2)/4 - Σ r_i(r_i-2)/8` as an exact scalar.
pub fn chi_exact(k: i64, l: i64, spectrum: &SingularitySpectrum) -> ExactScalar {
    ExactScalar::from_int(1) + ExactScalar::ratio((k - 2) * (l - 2), 4)
        - ExactScalar::ratio(spectrum.sum_of(|r| r * (r - 2)), 8)
}

/// `K^2` of the canonical resolution, `(k-4)(l-4) - Σ (r_i-2)^2 / 2`.
pub fn k2_canres_exact(k: i64, l: i64, spectrum: &SingularitySpectrum) -> ExactScalar {
    ExactScalar::from_int((k - 4) * (l - 4))
        - ExactScalar::ratio(spectrum.sum_of(|r| (r - 2) * (r - 2)), 2)
}

/// Solve the two double-cover relations for `χ` and `K^2` of the canonical
/// resolution; `K^2` of the minimal model adds the `t` blow-downs.
pub fn canres_invariants(config: &BranchConfig) -> Result<SurfaceInvariants> {
    let (k, l) = (config.k, config.l);
    let chi = integral("chi", chi_exact(k, l, &config.spectrum))?;
    let k2_canres = integral("k2_canres", k2_canres_exact(k, l, &config.spectrum))?;
    let k2_min = k2_canres + config.t;
    Ok(SurfaceInvariants {
        chi,
        k2_canres,
        k2_min,
        genus: config.genus(),
        delta: k2_min - 3 * chi,
    })
}

/// The auxiliary quantities `(G, H)` with `2l = G + Σ(r_i-2)` and
/// `Σ(r_i-2)(k-r_i-2) = H`.
pub fn rito_gh(k: i64, chi: i64, k2_min: i64, t: i64) -> (i64, i64) {
    let s = 4 * chi + t - k2_min;
    let g = -2 * k + s + 8;
    let h = 2 * k * k - k * (s + 8) + 16 * chi + 2 * t - 2 * k2_min;
    (g, h)
}

/// Both `(G, H)` identities hold exactly for `config` with invariants `inv`.
pub fn rito_identity_check(config: &BranchConfig, inv: &SurfaceInvariants) -> bool {
    let k = config.k;
    let (g, h) = rito_gh(k, inv.chi, inv.k2_min, config.t);
    let sum_excess = config.spectrum.sum_of(|r| r - 2);
    let sum_weighted = config.spectrum.sum_of(|r| (r - 2) * (k - r - 2));
    sum_weighted == h && 2 * config.l == g + sum_excess
}

/// `(N4 + N6) - [15 + K''^2 - 3χ - (k-10)(l-10)/4]`; zero means consistent.
///
/// Also evaluates the equivalent form `Σ(r_i-2)(8-r_i)/8 = 15 + K^2 - t - 3χ - ...`
/// and rejects `inv` if the two disagree (which only happens when
/// `k2_min != k2_canres + t`).
pub fn thm2_b_residual(config: &BranchConfig, inv: &SurfaceInvariants) -> Result<i64> {
    let spectrum = &config.spectrum;
    if !spectrum.within_deep_regime() {
        return Err(Error::OutOfRegime(format!(
            "r_max = {} exceeds 8",
            spectrum.r_max()
        )));
    }
    let (k, l) = (config.k, config.l);
    let quarter = ExactScalar::ratio((k - 10) * (l - 10), 4);
    let rhs_b = ExactScalar::from_int(15 + inv.k2_canres - 3 * inv.chi) - quarter.clone();
    let lhs_b = ExactScalar::from_int(i64::from(spectrum.n4() + spectrum.n6()));

    let rhs_low =
        ExactScalar::from_int(15 + inv.k2_min - config.t - 3 * inv.chi) - quarter;
    let lhs_low = ExactScalar::ratio(spectrum.sum_of(|r| (r - 2) * (8 - r)), 8);

    let residual_b = lhs_b - rhs_b;
    let residual_low = lhs_low - rhs_low;
    if residual_b != residual_low {
        return Err(Error::InvalidConfig(format!(
            "k2_min = {} is not k2_canres + t = {}",
            inv.k2_min,
            inv.k2_canres + config.t
        )));
    }
    integral("thm2_b_residual", residual_b)
}

/// `χ = 1 + (k-2)(l-2)/4 - N4 - 3 N6 - 6 N8`.
pub fn thm2_c_chi(k: i64, l: i64, n4: i64, n6: i64, n8: i64) -> ExactScalar {
    ExactScalar::from_int(1) + ExactScalar::ratio((k - 2) * (l - 2), 4)
        - ExactScalar::from_int(n4 + 3 * n6 + 6 * n8)
}

/// Branch datum on `F_1` obtained by blowing up a point of multiplicity
/// `mult` of a plane branch curve of degree `degree`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RuledModel {
    pub k: i64,
    pub l: i64,
    pub e: i64,
}

impl RuledModel {
    pub fn genus(&self) -> i64 {
        (self.k - 2) / 2
    }
}

pub fn plane_to_ruled(degree: i64, mult: i64) -> Result<RuledModel> {
    if degree % 2 != 0 || mult % 2 != 0 {
        return Err(Error::ParityMismatch { degree, mult });
    }
    if mult < 0 || mult > degree {
        return Err(Error::PreconditionViolated(format!(
            "multiplicity {mult} must lie in [0, {degree}]"
        )));
    }
    Ok(RuledModel {
        k: degree - mult,
        l: (degree + mult) / 2,
        e: 1,
    })
}

/// Residuals (`lhs - rhs`) of every double-cover relation, evaluated at
/// arbitrary `(χ, K^2)`. All six vanish exactly at the true invariants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationResiduals {
    /// `2kl = -48 + 12l + 12k - 8χ + 4K^2 - 4t + Σ(r-2)(r-4)`
    pub cover_a: ExactScalar,
    /// `2k + 2l = 8 + 4χ + t - K^2 + Σ(r-2)`
    pub cover_b: ExactScalar,
    /// `Σ(r-2)(k-r-2) = H`
    pub weighted_h: ExactScalar,
    /// `2l = G + Σ(r-2)`
    pub excess_g: ExactScalar,
    /// `Σ(r-2)(8-r)/8 = 15 + K^2 - t - 3χ - (k-10)(l-10)/4`
    pub low_order: ExactScalar,
    /// `χ = 1 + (k-2)(l-2)/4 - Σ r(r-2)/8`
    pub chi_formula: ExactScalar,
}

impl RelationResiduals {
    pub fn evaluate(config: &BranchConfig, chi: i64, k2_min: i64) -> Self {
        let (k, l, t) = (config.k, config.l, config.t);
        let sp = &config.spectrum;
        let int = ExactScalar::from_int;

        let cover_a = int(2 * k * l)
            - int(-48 + 12 * l + 12 * k - 8 * chi + 4 * k2_min - 4 * t
                + sp.sum_of(|r| (r - 2) * (r - 4)));
        let cover_b = int(2 * k + 2 * l) - int(8 + 4 * chi + t - k2_min + sp.sum_of(|r| r - 2));

        let (g, h) = rito_gh(k, chi, k2_min, t);
        let weighted_h = int(sp.sum_of(|r| (r - 2) * (k - r - 2)) - h);
        let excess_g = int(2 * l - g - sp.sum_of(|r| r - 2));

        let low_order = ExactScalar::ratio(sp.sum_of(|r| (r - 2) * (8 - r)), 8)
            - (int(15 + k2_min - t - 3 * chi) - ExactScalar::ratio((k - 10) * (l - 10), 4));
        let chi_formula = int(chi) - chi_exact(k, l, sp);

        Self {
            cover_a,
            cover_b,
            weighted_h,
            excess_g,
            low_order,
            chi_formula,
        }
    }

    pub fn all_zero(&self) -> bool {
        [
            &self.cover_a,
            &self.cover_b,
            &self.weighted_h,
            &self.excess_g,
            &self.low_order,
            &self.chi_formula,
        ]
        .iter()
        .all(|r| r.is_zero())
    }

    /// The linear dependencies between the relations, checked as exact
    /// identities on the residuals:
    ///
    /// * `weighted_h = cover_a + (6 - k) cover_b`
    /// * `excess_g = cover_b`
    /// * `low_order = [weighted_h + (k - 10) excess_g] / 8`
    /// * `chi_formula = -(excess_g + low_order)`
    pub fn combinations_hold(&self, k: i64) -> bool {
        let h_ok = self.weighted_h == self.cover_a.clone() + self.cover_b.clone() * (6 - k);
        let g_ok = self.excess_g == self.cover_b;
        let low_ok = self.low_order
            == (self.weighted_h.clone() + self.excess_g.clone() * (k - 10))
                * ExactScalar::ratio(1, 8);
        let chi_ok = self.chi_formula == -(self.excess_g.clone() + self.low_order.clone());
        h_ok && g_ok && low_ok && chi_ok
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(k: i64, l: i64, r: Vec<i64>, t: i64) -> BranchConfig {
        BranchConfig::new(k, l, None, SingularitySpectrum::new(r).unwrap(), t).unwrap()
    }

    #[test]
    fn smooth_branch_g5() {
        let inv = canres_invariants(&cfg(12, 26, vec![], 0)).unwrap();
        assert_eq!(
            inv,
            SurfaceInvariants { chi: 61, k2_canres: 176, k2_min: 176, genus: 5, delta: -7 }
        );
    }

    #[test]
    fn double_plane_with_six_fold_points() {
        let c = BranchConfig::new(12, 12, None, SingularitySpectrum::from_counts(0, 7, 0), 0)
            .unwrap();
        let inv = canres_invariants(&c).unwrap();
        assert_eq!((inv.chi, inv.k2_min, inv.genus, inv.delta), (5, 8, 5, -7));
    }

    #[test]
    fn three_three_point() {
        let mut sp = SingularitySpectrum::empty();
        sp.push_paired_point(2).unwrap();
        assert_eq!(sp.r_list(), &[2, 4]);
        let c = BranchConfig::new(16, 14, None, sp, 1).unwrap();
        let inv = canres_invariants(&c).unwrap();
        assert_eq!((inv.chi, inv.k2_canres, inv.k2_min, inv.delta), (42, 118, 119, -7));
    }

    #[test]
    fn negligible_points_change_nothing() {
        let a = canres_invariants(&cfg(12, 26, vec![], 0)).unwrap();
        let b = canres_invariants(&cfg(12, 26, vec![2, 2, 2], 0)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn non_integral_is_an_error() {
        // k = 16 ≡ 0 mod 4 needs even l
        let err = canres_invariants(&cfg(16, 13, vec![], 0)).unwrap_err();
        assert!(matches!(err, Error::NonIntegralInvariant { name: "chi", .. }));
    }

    #[test]
    fn config_validation() {
        assert!(BranchConfig::smooth(13, 10, 0).is_err());
        assert!(BranchConfig::smooth(4, 10, 0).is_err());
        assert!(BranchConfig::smooth(12, 10, -1).is_err());
        assert!(SingularitySpectrum::new(vec![3]).is_err());
        assert!(SingularitySpectrum::new(vec![0]).is_err());
        // e = 2, k = 14: 14 + 7 odd
        assert!(BranchConfig::new(14, 7, Some(2), SingularitySpectrum::empty(), 0).is_err());
        assert!(BranchConfig::new(14, 7, Some(1), SingularitySpectrum::empty(), 0).is_ok());
        // e = 0 with odd l
        assert!(BranchConfig::new(12, 25, Some(0), SingularitySpectrum::empty(), 0).is_err());
        // negative fibre coefficient
        assert!(BranchConfig::new(12, -8, Some(0), SingularitySpectrum::empty(), 0).is_err());
    }

    #[test]
    fn gh_values() {
        assert_eq!(rito_gh(12, 61, 176, 0), (52, 0));
        assert_eq!(rito_gh(16, 42, 119, 1), (26, 20));
    }

    #[test]
    fn identity_check_and_tampering() {
        let c = cfg(12, 26, vec![], 0);
        let inv = canres_invariants(&c).unwrap();
        assert!(rito_identity_check(&c, &inv));
        let tampered = SurfaceInvariants { chi: 60, ..inv };
        assert!(!rito_identity_check(&c, &tampered));

        let c = cfg(16, 14, vec![2, 4], 1);
        let inv = canres_invariants(&c).unwrap();
        assert!(rito_identity_check(&c, &inv));
    }

    #[test]
    fn thm2_b_residual_values() {
        let c = cfg(16, 14, vec![2, 4], 1);
        let inv = canres_invariants(&c).unwrap();
        assert_eq!(thm2_b_residual(&c, &inv), Ok(0));

        let c = BranchConfig::new(12, 12, None, SingularitySpectrum::from_counts(0, 7, 0), 0)
            .unwrap();
        let inv = canres_invariants(&c).unwrap();
        assert_eq!(thm2_b_residual(&c, &inv), Ok(0));

        let c = cfg(12, 26, vec![], 0);
        let inv = canres_invariants(&c).unwrap();
        assert_eq!(thm2_b_residual(&c, &inv), Ok(0));

        let c = cfg(24, 30, vec![10], 0);
        let inv = canres_invariants(&c).unwrap();
        assert!(matches!(thm2_b_residual(&c, &inv), Err(Error::OutOfRegime(_))));
    }

    #[test]
    fn thm2_b_rejects_inconsistent_k2() {
        let c = cfg(12, 26, vec![], 0);
        let inv = canres_invariants(&c).unwrap();
        let bad = SurfaceInvariants { k2_min: inv.k2_min + 1, ..inv };
        assert!(thm2_b_residual(&c, &bad).is_err());
    }

    #[test]
    fn thm2_c_values() {
        assert_eq!(thm2_c_chi(12, 26, 0, 0, 0), ExactScalar::from_int(61));
        assert_eq!(thm2_c_chi(12, 12, 0, 7, 0), ExactScalar::from_int(5));
        assert!(!thm2_c_chi(16, 13, 0, 0, 0).is_integer());
    }

    #[test]
    fn plane_conversion() {
        assert_eq!(plane_to_ruled(22, 0).unwrap(), RuledModel { k: 22, l: 11, e: 1 });
        let m = plane_to_ruled(18, 6).unwrap();
        assert_eq!((m.k, m.l, m.genus()), (12, 12, 5));
        assert_eq!(
            plane_to_ruled(19, 0),
            Err(Error::ParityMismatch { degree: 19, mult: 0 })
        );
        assert!(plane_to_ruled(20, 1).is_err());
        assert!(plane_to_ruled(10, 12).is_err());
    }

    #[test]
    fn record_round_trip() {
        let c = BranchConfig::new(16, 14, Some(1), SingularitySpectrum::new(vec![4, 2]).unwrap(), 1)
            .unwrap();
        let json = serde_json::to_string(&c).unwrap();
        assert_eq!(
            json,
            r#"{"k":16,"l":14,"e":1,"t":1,"r_list":[2,4],"n4":1,"n6":0,"n8":0}"#
        );
        let back: BranchConfig = serde_json::from_str(&json).unwrap();
        assert_eq!(back, c);
        let bad = r#"{"k":16,"l":14,"e":null,"t":1,"r_list":[2,4],"n4":2}"#;
        assert!(serde_json::from_str::<BranchConfig>(bad).is_err());
    }

    #[test]
    fn residuals_vanish_on_examples() {
        for c in [cfg(12, 26, vec![], 0), cfg(16, 14, vec![2, 4], 1), cfg(22, 31, vec![4, 6, 10], 3)] {
            let inv = canres_invariants(&c).unwrap();
            let res = RelationResiduals::evaluate(&c, inv.chi, inv.k2_min);
            assert!(res.all_zero(), "{c}: {res:?}");
            assert!(res.combinations_hold(c.k()));
        }
    }
}
