//! Finite models of isovariant links.
//!
//! Everything happens inside `Z = Sd(X^{H_0})`, whose vertices are the
//! simplices of the fixed subcomplex, each coloured by its exact isotropy.
//! The link of a single subgroup `H` is the full subcomplex on the
//! exactly-`H` vertices. The link of a chain `H_0 < … < H_n` is the order
//! complex of the simplices of `Z` that meet every colour class and no
//! vertex outside them; for a pair this is the midlevel complex, the
//! boundary of a regular neighbourhood of the upper stratum inside the lower
//! one.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::complexes::{order_complex, GSimplicialComplex, GSimplicialMap, Simplex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::groups::{Subgroup, SubgroupChain};
use crate::homology::{map_connectivity, Connectivity};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Isovariant,
    Equivariant,
}

/// What a vertex of a link model stands for, in terms of the ambient space.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LinkVertex {
    /// A vertex of the ambient complex (fixed-point models).
    Vertex(usize),
    /// The barycenter of a simplex of the ambient complex.
    Barycenter(Simplex),
    /// One chain of ambient simplices per subgroup of the chain, listed from
    /// the largest subgroup down.
    Flag(Vec<Vec<Simplex>>),
    /// A suspension point added by [`link_suspension`].
    Apex { level: usize, north: bool },
}

#[derive(Debug, Clone, PartialEq)]
pub struct LinkComplex {
    pub complex: SimplicialComplex,
    pub labels: Vec<LinkVertex>,
    pub space: String,
    pub chain: SubgroupChain,
    pub mode: Mode,
    pub provisional: bool,
    pub warnings: Vec<String>,
}

impl LinkComplex {
    pub fn with_space(mut self, name: impl Into<String>) -> Self {
        self.space = name.into();
        self
    }

    fn label_index(&self) -> HashMap<&LinkVertex, usize> {
        self.labels.iter().enumerate().map(|(i, l)| (l, i)).collect()
    }
}

/// Exact isotropy of every simplex of `X^{H_0}` together with `Sd(X^{H_0})`.
struct Subdivided {
    z: SimplicialComplex,
    /// Ambient simplex (in the vertex ids of `X`) behind each vertex of `z`.
    barycenter_of: Vec<Simplex>,
    isotropy: Vec<Subgroup>,
}

fn subdivide_fixed(x: &GSimplicialComplex, h0: &Subgroup) -> Result<Subdivided> {
    let fixed = x.fixed_subcomplex(h0)?;
    let z = fixed.complex.barycentric_subdivision();
    let barycenter_of: Vec<Simplex> =
        fixed.complex.ordered_simplices().into_iter().map(|s| s.iter().map(|&v| fixed.embedding[v]).collect()).collect();
    let isotropy = barycenter_of.iter().map(|s| x.simplex_isotropy(s)).collect::<Result<_>>()?;
    Ok(Subdivided { z, barycenter_of, isotropy })
}

/// Full subcomplex of `Sd(X^H)` on the barycenters of exactly-`H` simplices.
pub fn stratum_model(x: &GSimplicialComplex, h: &Subgroup) -> Result<LinkComplex> {
    let sd = subdivide_fixed(x, h)?;
    let keep: Vec<bool> = sd.isotropy.iter().map(|k| k == h).collect();
    let (complex, old) = sd.z.full_subcomplex(&keep);
    let labels = old.iter().map(|&v| LinkVertex::Barycenter(sd.barycenter_of[v].clone())).collect();
    Ok(LinkComplex {
        complex,
        labels,
        space: String::new(),
        chain: SubgroupChain::single(h.clone()),
        mode: Mode::Isovariant,
        provisional: false,
        warnings: Vec::new(),
    })
}

/// Order complex of the simplices of `z` that use only coloured vertices and
/// meet each of the colours `0..parts`, ordered by inclusion. Returns the
/// complex and, per vertex, the simplex of `z` it stands for.
///
/// With two colours this is the midlevel complex of the pair of full
/// subcomplexes; permuting the colours permutes nothing but the labels.
pub fn tuple_complex(z: &SimplicialComplex, colour: &[Option<usize>], parts: usize) -> (SimplicialComplex, Vec<Simplex>) {
    let admissible = |s: &Simplex| {
        let mut seen = vec![false; parts];
        for &v in s {
            match colour[v] {
                Some(c) if c < parts => seen[c] = true,
                _ => return false,
            }
        }
        seen.iter().all(|&b| b)
    };
    let elements: Vec<Simplex> = z.iter().filter(|s| admissible(s)).cloned().collect();
    let index: HashMap<&Simplex, usize> = elements.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let mut covers: Vec<Vec<usize>> = vec![Vec::new(); elements.len()];
    for (t, s) in elements.iter().enumerate() {
        for skip in 0..s.len() {
            let face: Simplex = s.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v).collect();
            if let Some(&f) = index.get(&face) {
                covers[f].push(t);
            }
        }
    }
    let up = transitive_up(&covers);
    (order_complex(&up), elements)
}

/// All elements strictly above each element, from the cover relation.
fn transitive_up(covers: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut up: Vec<Vec<usize>> = Vec::with_capacity(covers.len());
    for start in 0..covers.len() {
        let mut seen = BTreeSet::new();
        let mut stack = covers[start].clone();
        while let Some(x) = stack.pop() {
            if seen.insert(x) {
                stack.extend(&covers[x]);
            }
        }
        up.push(seen.into_iter().collect());
    }
    up
}

/// Model of the link of a chain. Single subgroups give the stratum model;
/// pairs give the midlevel complex; longer chains give the flag-tuple
/// complex, which is always marked provisional. Any isotropy in `X^{H_0}`
/// outside the chain also marks the result provisional, with a warning.
pub fn chain_link_model(x: &GSimplicialComplex, chain: &SubgroupChain) -> Result<LinkComplex> {
    if chain.length() == 0 {
        return stratum_model(x, chain.bottom());
    }
    let subgroups = chain.subgroups();
    let n = chain.length();
    let sd = subdivide_fixed(x, chain.bottom())?;
    // colour i holds isotropy H_{n-i}, so the top of the chain comes first
    let colour: Vec<Option<usize>> = sd.isotropy.iter().map(|k| subgroups.iter().position(|h| h == k).map(|p| n - p)).collect();
    let mut warnings = Vec::new();
    let mut outside: Vec<String> = Vec::new();
    for (v, c) in colour.iter().enumerate() {
        if c.is_none() {
            let members = sd.isotropy[v].member_list();
            let text = format!("{members:?}");
            if !outside.contains(&text) {
                outside.push(text);
            }
        }
    }
    if !outside.is_empty() {
        warnings.push(format!(
            "intermediate strata: the fixed set of the bottom subgroup contains isotropy {} outside the chain",
            outside.join(", ")
        ));
    }
    let (complex, elements) = tuple_complex(&sd.z, &colour, n + 1);
    let labels = elements
        .iter()
        .map(|s| {
            let mut parts = vec![Vec::new(); n + 1];
            for &v in s {
                parts[colour[v].expect("admissible")].push(sd.barycenter_of[v].clone());
            }
            LinkVertex::Flag(parts)
        })
        .collect();
    Ok(LinkComplex {
        complex,
        labels,
        space: String::new(),
        chain: chain.clone(),
        mode: Mode::Isovariant,
        provisional: n >= 2 || !warnings.is_empty(),
        warnings,
    })
}

/// `X^H` as a link model in equivariant mode.
pub fn fixed_point_link(x: &GSimplicialComplex, h: &Subgroup) -> Result<LinkComplex> {
    let fixed = x.fixed_subcomplex(h)?;
    Ok(LinkComplex {
        complex: fixed.complex,
        labels: fixed.embedding.into_iter().map(LinkVertex::Vertex).collect(),
        space: String::new(),
        chain: SubgroupChain::single(h.clone()),
        mode: Mode::Equivariant,
        provisional: false,
        warnings: Vec::new(),
    })
}

/// Link model in the given mode; equivariant mode only accepts single subgroups.
pub fn link_model(x: &GSimplicialComplex, chain: &SubgroupChain, mode: Mode) -> Result<LinkComplex> {
    match mode {
        Mode::Isovariant => chain_link_model(x, chain),
        Mode::Equivariant if chain.length() == 0 => fixed_point_link(x, chain.bottom()),
        Mode::Equivariant => Err(Error::InvalidChain("equivariant mode takes a single subgroup".into())),
    }
}

/// Iterated unreduced suspension of the underlying complex.
pub fn link_suspension(link: &LinkComplex, times: usize) -> LinkComplex {
    let mut out = link.clone();
    let base = link.labels.iter().filter(|l| matches!(l, LinkVertex::Apex { .. })).count() / 2;
    for level in base..base + times {
        out.complex = out.complex.suspension();
        out.labels.push(LinkVertex::Apex { level, north: true });
        out.labels.push(LinkVertex::Apex { level, north: false });
    }
    out
}

/// A simplicial map between two link models.
#[derive(Debug, Clone, PartialEq)]
pub struct LinkMap {
    pub source: LinkComplex,
    pub target: LinkComplex,
    pub vertex_map: Vec<usize>,
}

impl LinkMap {
    pub fn connectivity(&self) -> Result<Connectivity> {
        map_connectivity(&self.source.complex, &self.target.complex, &self.vertex_map)
    }

    pub fn provisional(&self) -> bool {
        self.source.provisional || self.target.provisional
    }

    /// `other ∘ self`
    pub fn then(&self, other: &LinkMap) -> Result<LinkMap> {
        if self.target.labels != other.source.labels {
            return Err(Error::InvalidComplex("link maps are not composable".into()));
        }
        let vertex_map = self.vertex_map.iter().map(|&v| other.vertex_map[v]).collect();
        Ok(LinkMap { source: self.source.clone(), target: other.target.clone(), vertex_map })
    }
}

fn map_label(f: &GSimplicialMap, label: &LinkVertex) -> LinkVertex {
    match label {
        LinkVertex::Vertex(v) => LinkVertex::Vertex(f.vertex_map()[*v]),
        LinkVertex::Barycenter(s) => LinkVertex::Barycenter(f.image(s)),
        LinkVertex::Flag(parts) => LinkVertex::Flag(
            parts
                .iter()
                .map(|part| {
                    let mut image: Vec<Simplex> = part.iter().map(|s| f.image(s)).collect();
                    image.dedup();
                    image
                })
                .collect(),
        ),
        apex => apex.clone(),
    }
}

/// The map of link models induced by `f`. Isovariant mode requires `f` to be
/// isovariant; equivariant mode restricts `f` to fixed sets.
pub fn induced_link_map(f: &GSimplicialMap, chain: &SubgroupChain, mode: Mode) -> Result<LinkMap> {
    if mode == Mode::Isovariant {
        let check = f.is_isovariant()?;
        if let Some(simplex) = check.witness {
            return Err(Error::NotIsovariant { simplex });
        }
    }
    let source = link_model(f.source(), chain, mode)?;
    let target = link_model(f.target(), chain, mode)?;
    let index = target.label_index();
    let vertex_map = source
        .labels
        .iter()
        .map(|l| {
            index
                .get(&map_label(f, l))
                .copied()
                .ok_or_else(|| Error::InvalidComplex(format!("image of link vertex {l:?} is missing from the target model")))
        })
        .collect::<Result<Vec<_>>>()?;
    source.complex.check_simplicial_map(&target.complex, &vertex_map)?;
    Ok(LinkMap { source, target, vertex_map })
}
