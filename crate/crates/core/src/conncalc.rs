//! Connectivity functions on chain classes and the bounds computed from them.
//!
//! Arithmetic on extended integers: `+∞` absorbs everything, otherwise `−∞`
//! absorbs, and every result is raised to at least −2, the connectivity of
//! the empty space.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;

use crate::complexes::{GSimplicialComplex, GSimplicialMap};
use crate::error::{Error, Result};
use crate::groups::{chain_classes, subgroup_classes, ChainClass, FiniteGroup};
use crate::homology::connectivity_of;
pub use crate::homology::{Conn, Connectivity};
use crate::strata::{induced_link_map, link_model, Mode};

/// Sum of extended integers followed by an integer shift, floored at −2.
pub fn conn_sum(terms: &[Conn], shift: i64) -> Conn {
    if terms.contains(&Conn::PosInf) {
        return Conn::PosInf;
    }
    if terms.contains(&Conn::NegInf) {
        return Conn::NegInf.floored();
    }
    let total = terms.iter().filter_map(|c| c.finite()).fold(shift, i64::saturating_add);
    Conn::Finite(total).floored()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnFn {
    mode: Mode,
    values: BTreeMap<ChainClass, Conn>,
    /// Classes whose value rests on a provisional link model.
    provisional: BTreeSet<ChainClass>,
    /// Classes whose value rests on homology above degree zero.
    caveat: BTreeSet<ChainClass>,
}

impl ConnFn {
    pub fn new(mode: Mode, values: BTreeMap<ChainClass, Conn>) -> Self {
        ConnFn { mode, values, provisional: BTreeSet::new(), caveat: BTreeSet::new() }
    }

    /// The keys a function of this mode carries over `group`.
    pub fn keys(group: &FiniteGroup, mode: Mode, max_chain_length: usize) -> Vec<ChainClass> {
        match mode {
            Mode::Isovariant => chain_classes(group, max_chain_length),
            Mode::Equivariant => subgroup_classes(group),
        }
    }

    pub fn constant(group: &FiniteGroup, mode: Mode, max_chain_length: usize, value: Conn) -> Self {
        let values = Self::keys(group, mode, max_chain_length).into_iter().map(|k| (k, value)).collect();
        Self::new(mode, values)
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn get(&self, class: &ChainClass) -> Option<Conn> {
        self.values.get(class).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&ChainClass, Conn)> {
        self.values.iter().map(|(k, &v)| (k, v))
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn is_provisional(&self, class: &ChainClass) -> bool {
        self.provisional.contains(class)
    }

    pub fn has_caveat(&self, class: &ChainClass) -> bool {
        self.caveat.contains(class)
    }

    /// Values keyed by class name, in canonical class order.
    pub fn table(&self, group: &FiniteGroup) -> Vec<(String, Conn)> {
        self.values.iter().map(|(k, &v)| (k.name(group), v)).collect()
    }

    /// Classwise `n ≤ m`.
    pub fn le(&self, other: &ConnFn) -> bool {
        self.values.keys().eq(other.values.keys()) && self.values.iter().all(|(k, v)| *v <= other.values[k])
    }

    fn combine(inputs: &[&ConnFn], shift: i64) -> Result<ConnFn> {
        let first = inputs.first().expect("at least one input");
        if inputs.iter().any(|f| f.mode != first.mode || !f.values.keys().eq(first.values.keys())) {
            return Err(Error::ModeMismatch);
        }
        let values = first
            .values
            .keys()
            .map(|k| {
                let terms: Vec<Conn> = inputs.iter().map(|f| f.values[k]).collect();
                (k.clone(), conn_sum(&terms, shift))
            })
            .collect();
        let provisional = inputs.iter().flat_map(|f| f.provisional.iter().cloned()).collect();
        let caveat = inputs.iter().flat_map(|f| f.caveat.iter().cloned()).collect();
        Ok(ConnFn { mode: first.mode, values, provisional, caveat })
    }
}

/// Connectivity of the links of `f`, one value per class. In isovariant mode
/// these are the maps of chain-link models, in equivariant mode the maps of
/// fixed sets.
pub fn measure_conn_fn(f: &GSimplicialMap, mode: Mode, max_chain_length: usize) -> Result<ConnFn> {
    let group = f.source().group();
    let keys = ConnFn::keys(group, mode, max_chain_length);
    let measured: Vec<(ChainClass, Connectivity, bool)> = keys
        .into_par_iter()
        .map(|k| {
            let link = induced_link_map(f, k.representative(), mode)?;
            let c = link.connectivity()?;
            Ok((k, c, link.provisional()))
        })
        .collect::<Result<_>>()?;
    Ok(collect_measured(mode, measured))
}

/// Connectivity of the links of a space, one value per class.
pub fn measure_space_conn_fn(x: &GSimplicialComplex, mode: Mode, max_chain_length: usize) -> Result<ConnFn> {
    let keys = ConnFn::keys(x.group(), mode, max_chain_length);
    let measured: Vec<(ChainClass, Connectivity, bool)> = keys
        .into_par_iter()
        .map(|k| {
            let link = link_model(x, k.representative(), mode)?;
            Ok((k, connectivity_of(&link.complex), link.provisional))
        })
        .collect::<Result<_>>()?;
    Ok(collect_measured(mode, measured))
}

fn collect_measured(mode: Mode, measured: Vec<(ChainClass, Connectivity, bool)>) -> ConnFn {
    let mut out = ConnFn::new(mode, BTreeMap::new());
    for (k, c, provisional) in measured {
        if provisional {
            out.provisional.insert(k.clone());
        }
        if c.caveat {
            out.caveat.insert(k.clone());
        }
        out.values.insert(k, c.value);
    }
    out
}

/// Classwise `n + m − 1`.
pub fn bm_pushout(n: &ConnFn, m: &ConnFn) -> Result<ConnFn> {
    ConnFn::combine(&[n, m], -1)
}

/// Classwise `1 − n + Σ k_s` for a strongly cocartesian `n`-cube.
pub fn bm_cube(n: usize, edge_conns: &[ConnFn]) -> Result<ConnFn> {
    if n < 2 {
        return Err(Error::validation("n", "a cube needs dimension at least 2"));
    }
    if edge_conns.len() != n {
        return Err(Error::WrongArity { expected: n, got: edge_conns.len() });
    }
    let refs: Vec<&ConnFn> = edge_conns.iter().collect();
    ConnFn::combine(&refs, 1 - n as i64)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreudenthalBounds {
    pub universe_bound: ConnFn,
    pub freudenthal_bound: ConnFn,
}

/// `n + 1` for the unit into the universe suspension-loop construction and
/// `2n + 1` for the suspension map, the latter computed as the pushout bound
/// of two copies of the former.
pub fn freudenthal_suite(n: &ConnFn) -> Result<FreudenthalBounds> {
    if n.mode != Mode::Isovariant {
        return Err(Error::ModeMismatch);
    }
    let universe_bound = ConnFn::combine(&[n], 1)?;
    let freudenthal_bound = bm_pushout(&universe_bound, &universe_bound)?;
    Ok(FreudenthalBounds { universe_bound, freudenthal_bound })
}
