//! Integral simplicial homology, homological connectivity of spaces and
//! maps, and a chain-level test for homotopy pushout squares.

mod chain;
mod matrix;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub use chain::{cylinder_to_target, double_mapping_cylinder, mapping_cone, ChainComplex, ChainMap};
pub use matrix::{smith_normal_form, IntegerMatrix, SmithForm, SparseMatrix};

use crate::complexes::SimplicialComplex;
use crate::error::{Error, Result};

/// Betti numbers and torsion coefficients, degree by degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyResult {
    betti: Vec<usize>,
    #[serde(with = "torsion_serde")]
    torsion: Vec<Vec<BigInt>>,
}

impl HomologyResult {
    /// Trailing zero degrees are dropped.
    pub fn new(mut betti: Vec<usize>, mut torsion: Vec<Vec<BigInt>>) -> Self {
        torsion.resize(betti.len(), Vec::new());
        while betti.last() == Some(&0) && torsion.last().is_some_and(Vec::is_empty) {
            betti.pop();
            torsion.pop();
        }
        HomologyResult { betti, torsion }
    }

    pub fn betti(&self) -> &[usize] {
        &self.betti
    }

    pub fn betti_at(&self, d: usize) -> usize {
        self.betti.get(d).copied().unwrap_or(0)
    }

    pub fn torsion(&self, d: usize) -> &[BigInt] {
        self.torsion.get(d).map_or(&[], Vec::as_slice)
    }

    pub fn has_torsion(&self) -> bool {
        self.torsion.iter().any(|t| !t.is_empty())
    }

    pub fn is_zero(&self) -> bool {
        self.betti.is_empty()
    }

    /// Betti numbers of reduced homology; `None` for the empty complex,
    /// whose reduced homology sits in degree −1.
    pub fn reduced_betti(&self) -> Option<Vec<usize>> {
        let mut b = self.betti.clone();
        let first = b.first_mut()?;
        *first -= 1;
        while b.last() == Some(&0) && b.len() > self.torsion.iter().rposition(|t| !t.is_empty()).map_or(0, |p| p + 1) {
            b.pop();
        }
        Some(b)
    }

    /// Least degree `d ≥ 1` with nonzero homology.
    fn first_nonzero_above_zero(&self) -> Option<usize> {
        (1..self.betti.len()).find(|&d| self.betti[d] > 0 || !self.torsion[d].is_empty())
    }
}

mod torsion_serde {
    use super::*;

    #[derive(Serialize, Deserialize)]
    #[serde(untagged)]
    enum Wire {
        Small(u64),
        Big(String),
    }

    pub fn serialize<S: Serializer>(t: &[Vec<BigInt>], s: S) -> std::result::Result<S::Ok, S::Error> {
        let wire: Vec<Vec<Wire>> =
            t.iter().map(|row| row.iter().map(|x| x.to_u64().map_or_else(|| Wire::Big(x.to_string()), Wire::Small)).collect()).collect();
        wire.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<Vec<BigInt>>, D::Error> {
        let wire = Vec::<Vec<Wire>>::deserialize(d)?;
        wire.into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|w| match w {
                        Wire::Small(x) => Ok(BigInt::from(x)),
                        Wire::Big(s) => s.parse().map_err(serde::de::Error::custom),
                    })
                    .collect()
            })
            .collect()
    }
}

pub fn homology_of(k: &SimplicialComplex) -> HomologyResult {
    ChainComplex::of(k).homology()
}

/// Extended integer: a connectivity or a bound on one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Conn {
    NegInf,
    Finite(i64),
    PosInf,
}

impl Conn {
    pub const EMPTY: Conn = Conn::Finite(-2);

    pub fn finite(self) -> Option<i64> {
        match self {
            Conn::Finite(k) => Some(k),
            _ => None,
        }
    }

    /// Raises anything below −2 (including −∞) to −2.
    pub fn floored(self) -> Conn {
        self.max(Conn::EMPTY)
    }
}

impl fmt::Display for Conn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Conn::NegInf => f.write_str("-inf"),
            Conn::Finite(k) => write!(f, "{k}"),
            Conn::PosInf => f.write_str("inf"),
        }
    }
}

impl FromStr for Conn {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "inf" | "+inf" | "∞" => Ok(Conn::PosInf),
            "-inf" | "−inf" | "-∞" => Ok(Conn::NegInf),
            t => {
                t.replace('−', "-").parse().map(Conn::Finite).map_err(|_| Error::validation(s, "expected an integer, \"inf\" or \"-inf\""))
            }
        }
    }
}

impl Serialize for Conn {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Conn::Finite(k) => s.serialize_i64(*k),
            other => s.serialize_str(&other.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for Conn {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Wire {
            Int(i64),
            Text(String),
        }
        match Wire::deserialize(d)? {
            Wire::Int(k) => Ok(Conn::Finite(k)),
            Wire::Text(t) => t.parse().map_err(serde::de::Error::custom),
        }
    }
}

/// A connectivity value; `caveat` marks values that rest on homology above
/// degree zero, where the fundamental group could make the true value smaller.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Connectivity {
    pub value: Conn,
    pub caveat: bool,
}

impl Connectivity {
    pub fn exact(value: Conn) -> Self {
        Connectivity { value, caveat: false }
    }
}

pub fn connectivity_of(k: &SimplicialComplex) -> Connectivity {
    if k.is_empty() {
        return Connectivity::exact(Conn::Finite(-2));
    }
    if k.component_count() > 1 {
        return Connectivity::exact(Conn::Finite(-1));
    }
    match homology_of(k).first_nonzero_above_zero() {
        Some(d) => {
            let value = d as i64 - 1;
            Connectivity { value: Conn::Finite(value), caveat: value >= 1 }
        }
        None => Connectivity { value: Conn::PosInf, caveat: k.dim() >= 2 },
    }
}

/// Connectivity of a map read off its mapping cone: one less than the
/// least degree carrying cone homology.
pub fn cone_connectivity(f: &ChainMap, a: &ChainComplex, b: &ChainComplex) -> Conn {
    let h = mapping_cone(f, a, b).homology();
    match (0..h.betti().len()).find(|&d| h.betti_at(d) > 0 || !h.torsion(d).is_empty()) {
        Some(d) => Conn::Finite(d as i64 - 1),
        None => Conn::PosInf,
    }
}

pub fn map_connectivity(source: &SimplicialComplex, target: &SimplicialComplex, vertex_map: &[usize]) -> Result<Connectivity> {
    let f = ChainMap::induced(source, target, vertex_map)?;
    let value = cone_connectivity(&f, &ChainComplex::of(source), &ChainComplex::of(target));
    let caveat = match value {
        Conn::Finite(k) => k > 0,
        Conn::PosInf => source.dim().max(target.dim()) >= 1 && !crate::complexes::is_isomorphism(source, target, vertex_map),
        Conn::NegInf => false,
    };
    Ok(Connectivity { value, caveat })
}

/// A square of simplicial maps `u: Z → X`, `v: Z → Y`, `i: X → W`, `j: Y → W`.
#[derive(Debug, Clone, Copy)]
pub struct SimplicialSquare<'a> {
    pub z: &'a SimplicialComplex,
    pub x: &'a SimplicialComplex,
    pub y: &'a SimplicialComplex,
    pub w: &'a SimplicialComplex,
    pub u: &'a [usize],
    pub v: &'a [usize],
    pub i: &'a [usize],
    pub j: &'a [usize],
}

/// Whether the square is a homotopy pushout on integral homology: the
/// double mapping cylinder of `X ← Z → Y` maps to `W` by a homology iso.
pub fn pushout_cone_check(sq: &SimplicialSquare<'_>) -> Result<bool> {
    let u = ChainMap::induced(sq.z, sq.x, sq.u)?;
    let v = ChainMap::induced(sq.z, sq.y, sq.v)?;
    let i = ChainMap::induced(sq.x, sq.w, sq.i)?;
    let j = ChainMap::induced(sq.y, sq.w, sq.j)?;
    if let Some(vertex) = (0..sq.z.vertex_count()).find(|&z| sq.i[sq.u[z]] != sq.j[sq.v[z]]) {
        return Err(Error::NonCommuting { vertex });
    }
    let (cx, cy, cz, cw) = (ChainComplex::of(sq.x), ChainComplex::of(sq.y), ChainComplex::of(sq.z), ChainComplex::of(sq.w));
    let d = double_mapping_cylinder(&u, &v, &cx, &cz, &cy);
    let phi = cylinder_to_target(&i, &j, &cx, &cz, &cy, &cw);
    Ok(mapping_cone(&phi, &d, &cw).homology().is_zero())
}
