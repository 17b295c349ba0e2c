//! Published maximal-χ table and its constructions, plus comparison against
//! a computed [`ChiTable`].

use std::fmt;
use std::io::Read;
use std::path::Path;
use std::str::FromStr;

use serde::Deserialize;

use crate::enumerator::ChiTable;
use crate::error::{Error, Result};
use crate::invariants::{plane_to_ruled, SingularitySpectrum};

const EMBEDDED: &str = include_str!("../data/max_chi_reference.csv");

/// Surface the branch curve of a construction lives on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BaseSurface {
    /// Hirzebruch surface `F_e`.
    Hirzebruch(i64),
    Plane,
}

impl FromStr for BaseSurface {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "F0" => Ok(Self::Hirzebruch(0)),
            "F1" => Ok(Self::Hirzebruch(1)),
            "F2" => Ok(Self::Hirzebruch(2)),
            "P2" => Ok(Self::Plane),
            other => Err(Error::InvalidConfig(format!("unknown base surface {other:?}"))),
        }
    }
}

impl fmt::Display for BaseSurface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Hirzebruch(e) => write!(f, "F{e}"),
            Self::Plane => f.write_str("P2"),
        }
    }
}

/// Non-negligible singularity of a construction's branch curve.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConstructionPoint {
    /// A `(3,3)`-point, contributing `r = {2, 4}`.
    TripleTriple,
    /// An ordinary quadruple point, `r = 4`.
    Quadruple,
}

impl FromStr for ConstructionPoint {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "(3,3)" => Ok(Self::TripleTriple),
            "(4)" => Ok(Self::Quadruple),
            other => Err(Error::InvalidConfig(format!("unknown singularity {other:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Construction {
    pub surface: BaseSurface,
    /// `l` on `F_e`, or the branch-curve degree on the plane.
    pub l_or_degree: i64,
    pub point: Option<ConstructionPoint>,
}

/// Branch datum on a Hirzebruch surface, `t` not yet fixed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructionDatum {
    pub k: i64,
    pub l: i64,
    pub e: i64,
    pub spectrum: SingularitySpectrum,
}

impl Construction {
    /// Translate to `(k, l, e, r-list)` for a pencil of genus `genus`. Plane
    /// curves are moved to `F_1` by blowing up a point of multiplicity
    /// `degree - (2 genus + 2)`.
    pub fn datum(&self, genus: i64) -> Result<ConstructionDatum> {
        let k = 2 * genus + 2;
        let (l, e) = match self.surface {
            BaseSurface::Hirzebruch(e) => (self.l_or_degree, e),
            BaseSurface::Plane => {
                let ruled = plane_to_ruled(self.l_or_degree, self.l_or_degree - k)?;
                debug_assert_eq!(ruled.k, k);
                (ruled.l, ruled.e)
            }
        };
        let mut spectrum = SingularitySpectrum::empty();
        match self.point {
            Some(ConstructionPoint::TripleTriple) => spectrum.push_paired_point(2)?,
            Some(ConstructionPoint::Quadruple) => spectrum.push(4)?,
            None => {}
        }
        Ok(ConstructionDatum { k, l, e, spectrum })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReferenceCell {
    pub genus: i64,
    pub delta: i64,
    pub max_chi: Option<i64>,
    pub construction: Option<Construction>,
}

#[derive(Deserialize)]
struct Row {
    g: i64,
    delta: i64,
    max_chi_or_empty: Option<i64>,
    construction_surface: String,
    construction_l_or_degree: Option<i64>,
    construction_singularity: String,
}

impl TryFrom<Row> for ReferenceCell {
    type Error = Error;

    fn try_from(row: Row) -> Result<Self> {
        let construction = if row.construction_surface.is_empty() {
            None
        } else {
            let l_or_degree = row.construction_l_or_degree.ok_or_else(|| {
                Error::InvalidConfig(format!(
                    "cell ({}, {}): construction without l or degree",
                    row.g, row.delta
                ))
            })?;
            let point = match row.construction_singularity.as_str() {
                "" => None,
                s => Some(s.parse()?),
            };
            Some(Construction {
                surface: row.construction_surface.parse()?,
                l_or_degree,
                point,
            })
        };
        Ok(Self {
            genus: row.g,
            delta: row.delta,
            max_chi: row.max_chi_or_empty,
            construction,
        })
    }
}

/// One cell whose computed value differs from the reference.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellDiff {
    pub genus: i64,
    pub delta: i64,
    pub computed: Option<i64>,
    pub reference: Option<i64>,
}

impl fmt::Display for CellDiff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |v: Option<i64>| v.map_or_else(|| "EMPTY".to_string(), |v| v.to_string());
        write!(
            f,
            "(g={}, delta={}): computed {}, reference {}",
            self.genus,
            self.delta,
            show(self.computed),
            show(self.reference)
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comparison {
    pub cells_compared: usize,
    pub diffs: Vec<CellDiff>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReferenceTable {
    cells: Vec<ReferenceCell>,
}

impl ReferenceTable {
    /// The table shipped with the crate.
    pub fn embedded() -> Self {
        Self::from_reader(EMBEDDED.as_bytes()).expect("embedded reference table is well-formed")
    }

    pub fn from_path(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let file = std::fs::File::open(path).map_err(|e| {
            Error::InvalidConfig(format!("cannot open {}: {e}", path.display()))
        })?;
        Self::from_reader(file)
    }

    pub fn from_reader(reader: impl Read) -> Result<Self> {
        let mut rdr = csv::ReaderBuilder::new()
            .comment(Some(b'#'))
            .trim(csv::Trim::All)
            .from_reader(reader);
        let cells = rdr
            .deserialize::<Row>()
            .map(|row| {
                row.map_err(|e| Error::InvalidConfig(format!("reference table: {e}")))
                    .and_then(ReferenceCell::try_from)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { cells })
    }

    pub fn cells(&self) -> &[ReferenceCell] {
        &self.cells
    }

    pub fn get(&self, genus: i64, delta: i64) -> Option<&ReferenceCell> {
        self.cells.iter().find(|c| c.genus == genus && c.delta == delta)
    }

    /// Compare every cell of `table` that the reference covers.
    pub fn compare(&self, table: &ChiTable) -> Comparison {
        let mut cells_compared = 0;
        let mut diffs = Vec::new();
        for (genus, delta, computed) in table.iter_cells() {
            let Some(cell) = self.get(genus, delta) else {
                continue;
            };
            cells_compared += 1;
            if cell.max_chi != computed {
                diffs.push(CellDiff { genus, delta, computed, reference: cell.max_chi });
            }
        }
        Comparison { cells_compared, diffs }
    }
}
