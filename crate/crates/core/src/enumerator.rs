//! Exhaustive search over numerical branch data for fixed `(g, K^2 - 3χ)`.
//!
//! For `k = 2g + 2` a candidate is a tuple `(l, t, N4, N6, N8)` with
//!
//! * `N4 + N6 = 15 + K''^2 - 3χ - (k-10)(l-10)/4`, where `K''^2 = K^2 - t`,
//! * `χ = 1 + (k-2)(l-2)/4 - N4 - 3 N6 - 6 N8` integral and `>= 1`,
//! * `K^2 = 3χ + Δ >= 1`,
//!
//! that also passes every filter of [`conditions_check`].

use std::fmt;
use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};

/// Smallest and largest `K^2 - 3χ` the search accepts.
pub const DELTA_MIN: i64 = -18;
pub const DELTA_MAX: i64 = -7;
pub const GENUS_MIN: i64 = 5;

/// A numerical filter a branch datum must pass.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Condition {
    /// `k ≡ 0 (mod 4) ⟹ l` even (the branch class is even).
    EvenClass,
    /// `l >= k/2`.
    MinimalL,
    /// `l = k/2 ⟺ (t = 2 ∧ N4 = N6 = N8 = 0)`.
    HalfFibre,
    /// `l = k/2 + 2 ⟹ N6 = N8 = 0 ∧ t >= N4 ∧ (t = N4 ∨ N4 > 1)`.
    PlaneTriplePoints,
    /// `l = k - 2 ∧ t = 0 ⟹ k/2` even.
    UntwistedSection,
    /// `l < k - 2 ⟹ l - k/2` even.
    SectionParity,
    /// `t = 1 ∧ N4 = N6 = N8 = 0 ⟹ l = k - 2`.
    IsolatedSection,
    /// `N4 > 0 ⟹ l >= k/2 + 2`.
    CapR4,
    /// `N6 > 0 ⟹ l >= k/2 + 4`.
    CapR6,
    /// `N8 > 0 ⟹ l >= k/2 + 6`.
    CapR8,
}

impl Condition {
    pub fn id(self) -> &'static str {
        match self {
            Condition::EvenClass => "0",
            Condition::MinimalL => "1",
            Condition::HalfFibre => "2",
            Condition::PlaneTriplePoints => "3",
            Condition::UntwistedSection => "4",
            Condition::SectionParity => "5",
            Condition::IsolatedSection => "6",
            Condition::CapR4 => "cap_r4",
            Condition::CapR6 => "cap_r6",
            Condition::CapR8 => "cap_r8",
        }
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl Serialize for Condition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.id())
    }
}

/// Every condition the tuple violates, in canonical order. Meant for even
/// `k >= 12` and non-negative counts.
pub fn conditions_check(k: i64, l: i64, t: i64, n4: i64, n6: i64, n8: i64) -> Vec<Condition> {
    let half = k / 2;
    let smooth = n4 == 0 && n6 == 0 && n8 == 0;
    let mut violated = Vec::new();
    if k % 4 == 0 && l % 2 != 0 {
        violated.push(Condition::EvenClass);
    }
    if l < half {
        violated.push(Condition::MinimalL);
    }
    if (l == half) != (t == 2 && smooth) {
        violated.push(Condition::HalfFibre);
    }
    if l == half + 2 && !(n6 == 0 && n8 == 0 && t >= n4 && (t == n4 || n4 > 1)) {
        violated.push(Condition::PlaneTriplePoints);
    }
    if l == k - 2 && t == 0 && half % 2 != 0 {
        violated.push(Condition::UntwistedSection);
    }
    if l < k - 2 && (l - half) % 2 != 0 {
        violated.push(Condition::SectionParity);
    }
    if t == 1 && smooth && l != k - 2 {
        violated.push(Condition::IsolatedSection);
    }
    if n4 > 0 && l < half + 2 {
        violated.push(Condition::CapR4);
    }
    if n6 > 0 && l < half + 4 {
        violated.push(Condition::CapR6);
    }
    if n8 > 0 && l < half + 6 {
        violated.push(Condition::CapR8);
    }
    violated
}

/// Hirzebruch indices `e ∈ {0, 1, 2}` on which `k C0 + (ek/2 + l) F` is an
/// even class with `B·C0 = l - ek/2 >= -e`.
pub fn feasible_models(k: i64, l: i64) -> Vec<i64> {
    (0..=2)
        .filter(|&e| {
            let fibre_coeff = e * k / 2 + l;
            fibre_coeff.rem_euclid(2) == 0 && l - e * k / 2 >= -e
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SearchMode {
    /// Keep only the candidates of maximal χ.
    Max,
    /// Keep every candidate.
    All,
}

impl std::str::FromStr for SearchMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "max" => Ok(SearchMode::Max),
            "all" => Ok(SearchMode::All),
            other => Err(Error::PreconditionViolated(format!("unknown mode {other:?}"))),
        }
    }
}

/// Search limits. Defaults: `t <= 11`, `N4 <= 11`, `k <= 28`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SearchCaps {
    pub t_max: i64,
    pub n4_max: i64,
    pub k_max: i64,
}

impl Default for SearchCaps {
    fn default() -> Self {
        Self { t_max: 11, n4_max: 11, k_max: 28 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CellQuery {
    pub genus: i64,
    pub delta: i64,
    pub mode: SearchMode,
    #[serde(skip)]
    pub caps: SearchCaps,
}

impl CellQuery {
    pub fn new(genus: i64, delta: i64) -> Self {
        Self { genus, delta, mode: SearchMode::Max, caps: SearchCaps::default() }
    }

    pub fn mode(mut self, mode: SearchMode) -> Self {
        self.mode = mode;
        self
    }

    pub fn caps(mut self, caps: SearchCaps) -> Self {
        self.caps = caps;
        self
    }

    pub fn k(&self) -> i64 {
        2 * self.genus + 2
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Candidate {
    pub k: i64,
    pub l: i64,
    pub t: i64,
    pub n4: i64,
    pub n6: i64,
    pub n8: i64,
    pub chi: i64,
    pub k2_min: i64,
    pub k2_canres: i64,
    pub feasible_e: Vec<i64>,
}

impl Candidate {
    fn sort_key(&self) -> (std::cmp::Reverse<i64>, i64, i64, i64, i64, i64) {
        (std::cmp::Reverse(self.chi), self.l, self.t, self.n4, self.n6, self.n8)
    }
}

impl fmt::Display for Candidate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(l={},t={},N4={},N6={},N8={})",
            self.l, self.t, self.n4, self.n6, self.n8
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CellResult {
    pub query: CellQuery,
    pub max_chi: Option<i64>,
    pub witnesses: Vec<Candidate>,
}

impl CellResult {
    pub fn is_empty(&self) -> bool {
        self.max_chi.is_none()
    }
}

/// Integral `χ = 1 + (k-2)(l-2)/4 - N4 - 3N6 - 6N8`, or `None` if fractional.
fn chi_from_counts(k: i64, l: i64, n4: i64, n6: i64, n8: i64) -> Option<i64> {
    let quarter = (k - 2) * (l - 2);
    (quarter % 4 == 0).then(|| 1 + quarter / 4 - n4 - 3 * n6 - 6 * n8)
}

/// Largest `l` with `N4 + N6 >= 0` at `t = 0`: `l <= 10 + 4(15 + Δ)/(k - 10)`.
fn l_upper(k: i64, delta: i64) -> i64 {
    10 + (4 * (15 + delta)).div_euclid(k - 10)
}

pub fn enumerate_cell(query: &CellQuery) -> Result<CellResult> {
    let (g, delta) = (query.genus, query.delta);
    if g < GENUS_MIN {
        return Err(Error::OutOfRegime(format!("requires g >= {GENUS_MIN}, got {g}")));
    }
    if !(DELTA_MIN..=DELTA_MAX).contains(&delta) {
        return Err(Error::OutOfRegime(format!(
            "requires {DELTA_MIN} <= K^2 - 3chi <= {DELTA_MAX}, got {delta}"
        )));
    }
    let k = query.k();
    let caps = query.caps;
    let mut found = Vec::new();
    if k <= caps.k_max {
        for l in k / 2..=l_upper(k, delta) {
            let Some(chi_smooth) = chi_from_counts(k, l, 0, 0, 0) else {
                continue;
            };
            for t in 0..=caps.t_max {
                let scaled = 4 * (15 + delta - t) - (k - 10) * (l - 10);
                if scaled < 0 || scaled % 4 != 0 {
                    continue;
                }
                let n46 = scaled / 4;
                for n4 in 0..=n46.min(caps.n4_max) {
                    let n6 = n46 - n4;
                    for n8 in 0.. {
                        let chi = chi_smooth - n4 - 3 * n6 - 6 * n8;
                        if chi < 1 {
                            break;
                        }
                        let k2_min = 3 * chi + delta;
                        if k2_min < 1 {
                            break;
                        }
                        if !conditions_check(k, l, t, n4, n6, n8).is_empty() {
                            continue;
                        }
                        found.push(Candidate {
                            k,
                            l,
                            t,
                            n4,
                            n6,
                            n8,
                            chi,
                            k2_min,
                            k2_canres: k2_min - t,
                            feasible_e: feasible_models(k, l),
                        });
                    }
                }
            }
        }
    }
    found.sort_by_key(Candidate::sort_key);
    let max_chi = found.first().map(|c| c.chi);
    if query.mode == SearchMode::Max {
        found.retain(|c| Some(c.chi) == max_chi);
    }
    Ok(CellResult { query: *query, max_chi, witnesses: found })
}

/// Maximal χ over a block of cells. Rows are genera (ascending), columns are
/// `K^2 - 3χ` values in descending order (`-7` first).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChiTable {
    pub genera: Vec<i64>,
    pub deltas: Vec<i64>,
    pub cells: Vec<Vec<Option<i64>>>,
}

impl ChiTable {
    pub fn get(&self, genus: i64, delta: i64) -> Option<Option<i64>> {
        let row = self.genera.iter().position(|&g| g == genus)?;
        let col = self.deltas.iter().position(|&d| d == delta)?;
        Some(self.cells[row][col])
    }

    pub fn iter_cells(&self) -> impl Iterator<Item = (i64, i64, Option<i64>)> + '_ {
        self.genera.iter().enumerate().flat_map(move |(i, &g)| {
            self.deltas.iter().enumerate().map(move |(j, &d)| (g, d, self.cells[i][j]))
        })
    }
}

pub fn max_chi_table(
    genera: RangeInclusive<i64>,
    deltas: RangeInclusive<i64>,
    caps: SearchCaps,
) -> Result<ChiTable> {
    let genera: Vec<i64> = genera.collect();
    let deltas: Vec<i64> = deltas.rev().collect();
    let cells: Vec<(i64, i64)> = genera
        .iter()
        .flat_map(|&g| deltas.iter().map(move |&d| (g, d)))
        .collect();
    let values = cells
        .par_iter()
        .map(|&(g, d)| enumerate_cell(&CellQuery::new(g, d).caps(caps)).map(|r| r.max_chi))
        .collect::<Result<Vec<_>>>()?;
    let cells = if deltas.is_empty() {
        vec![Vec::new(); genera.len()]
    } else {
        values.chunks(deltas.len()).map(<[_]>::to_vec).collect()
    };
    Ok(ChiTable { genera, deltas, cells })
}
