//! Finite simplicial complexes with a simplicial action of a finite group.
//!
//! Isotropy is read off combinatorially: on a rigid complex (any element
//! preserving a simplex setwise fixes it vertexwise) the isotropy of every
//! interior point of a simplex is the intersection of its vertex stabilizers.

mod reps;
mod simplicial;

use std::collections::BTreeMap;
use std::sync::Arc;

pub use reps::{rep_compactification, rep_disk, rep_sphere, Irrep, RepSummand};
pub use simplicial::{is_face, is_isomorphism, order_complex, Simplex, SimplicialComplex};

use crate::error::{Error, Result};
use crate::groups::{FiniteGroup, Subgroup, SubgroupChain};

#[derive(Debug, Clone)]
pub struct GSimplicialComplex {
    group: Arc<FiniteGroup>,
    complex: SimplicialComplex,
    /// `action[g][v]` is the image of vertex `v` under `g`.
    action: Vec<Vec<usize>>,
    stabilizers: Vec<u64>,
    rigid: bool,
}

impl PartialEq for GSimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.group == other.group && self.complex == other.complex && self.action == other.action
    }
}

impl GSimplicialComplex {
    /// Validates that `action` is a homomorphism into simplicial automorphisms.
    pub fn new(group: Arc<FiniteGroup>, complex: SimplicialComplex, action: Vec<Vec<usize>>) -> Result<Self> {
        let n = complex.vertex_count();
        if action.len() != group.order() {
            return Err(Error::InvalidComplex(format!(
                "action lists {} permutations for a group of order {}",
                action.len(),
                group.order()
            )));
        }
        for (g, perm) in action.iter().enumerate() {
            let mut seen = vec![false; n];
            if perm.len() != n {
                return Err(Error::InvalidComplex(format!("permutation of element {g} has wrong length")));
            }
            for &v in perm {
                if v >= n || std::mem::replace(&mut seen[v], true) {
                    return Err(Error::InvalidComplex(format!("element {g} does not act by a permutation")));
                }
            }
        }
        if action.first().is_some_and(|id| id.iter().enumerate().any(|(v, &w)| v != w)) {
            return Err(Error::InvalidComplex("identity element moves a vertex".into()));
        }
        for a in group.elements() {
            for b in group.elements() {
                let ab = group.mul(a, b);
                if (0..n).any(|v| action[ab][v] != action[a][action[b][v]]) {
                    return Err(Error::InvalidComplex(format!("action is not a homomorphism at ({a}, {b})")));
                }
            }
        }
        for perm in &action {
            for s in complex.iter() {
                if !complex.contains(&SimplicialComplex::image(s, perm)) {
                    return Err(Error::InvalidComplex(format!("action does not preserve simplex {s:?}")));
                }
            }
        }
        Ok(Self::assemble(group, complex, action))
    }

    /// Every element acts as the identity.
    pub fn with_trivial_action(group: Arc<FiniteGroup>, complex: SimplicialComplex) -> Self {
        let id: Vec<usize> = (0..complex.vertex_count()).collect();
        let action = vec![id; group.order()];
        Self::assemble(group, complex, action)
    }

    fn assemble(group: Arc<FiniteGroup>, complex: SimplicialComplex, action: Vec<Vec<usize>>) -> Self {
        let stabilizers =
            (0..complex.vertex_count()).map(|v| (0..group.order()).filter(|&g| action[g][v] == v).fold(0u64, |m, g| m | 1 << g)).collect();
        let mut x = GSimplicialComplex { group, complex, action, stabilizers, rigid: false };
        x.rigid = x.check_rigid();
        x
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn action(&self, g: usize) -> &[usize] {
        &self.action[g]
    }

    pub fn act(&self, g: usize, simplex: &[usize]) -> Simplex {
        SimplicialComplex::image(simplex, &self.action[g])
    }

    pub fn is_rigid(&self) -> bool {
        self.rigid
    }

    fn check_rigid(&self) -> bool {
        self.complex.iter().filter(|s| s.len() > 1).all(|s| {
            self.group.elements().all(|g| {
                let image = self.act(g, s);
                image != *s || s.iter().all(|&v| self.action[g][v] == v)
            })
        })
    }

    pub fn vertex_stabilizer(&self, v: usize) -> Subgroup {
        Subgroup::from_mask_unchecked(self.stabilizers[v])
    }

    pub(crate) fn isotropy_mask(&self, simplex: &[usize]) -> u64 {
        simplex.iter().fold(u64::MAX, |m, &v| m & self.stabilizers[v])
    }

    /// Exact isotropy of the interior points of `simplex`.
    pub fn simplex_isotropy(&self, simplex: &[usize]) -> Result<Subgroup> {
        if !self.rigid {
            return Err(Error::NotRigid);
        }
        Ok(Subgroup::from_mask_unchecked(self.isotropy_mask(simplex)))
    }

    /// Subdivides once if needed; one subdivision always yields a rigid action.
    pub fn make_rigid(&self) -> GSimplicialComplex {
        if self.rigid {
            self.clone()
        } else {
            self.barycentric_subdivision()
        }
    }

    /// Vertex `i` of the result is the barycenter of
    /// `self.complex().ordered_simplices()[i]`.
    pub fn barycentric_subdivision(&self) -> GSimplicialComplex {
        let sd = self.complex.barycentric_subdivision();
        let index = self.complex.global_index();
        let ordered = self.complex.ordered_simplices();
        let action = self.group.elements().map(|g| ordered.iter().map(|s| index[&self.act(g, s)]).collect()).collect();
        Self::assemble(self.group.clone(), sd, action)
    }

    /// Faces of dimension at most `d`, keeping every vertex.
    pub fn skeleton(&self, d: isize) -> GSimplicialComplex {
        if d < 0 {
            return Self::with_trivial_action(self.group.clone(), SimplicialComplex::empty());
        }
        let simplices = self.complex.iter().filter(|s| s.len() as isize <= d + 1).cloned();
        let complex = SimplicialComplex::from_closed_unchecked(self.complex.vertex_count(), simplices);
        Self::assemble(self.group.clone(), complex, self.action.clone())
    }

    pub fn cone(&self) -> GSimplicialComplex {
        let fixed = Self::with_trivial_action(self.group.clone(), SimplicialComplex::point());
        self.join_unchecked(&fixed)
    }

    /// Unreduced suspension with two fixed apexes.
    pub fn suspension(&self) -> GSimplicialComplex {
        let poles = Self::with_trivial_action(self.group.clone(), SimplicialComplex::discrete(2));
        self.join_unchecked(&poles)
    }

    pub fn join(&self, other: &GSimplicialComplex) -> Result<GSimplicialComplex> {
        if self.group != other.group {
            return Err(Error::InvalidComplex("join of complexes over different groups".into()));
        }
        Ok(self.join_unchecked(other))
    }

    fn join_unchecked(&self, other: &GSimplicialComplex) -> GSimplicialComplex {
        let shift = self.complex.vertex_count();
        let complex = self.complex.join(&other.complex);
        let action = self
            .group
            .elements()
            .map(|g| {
                let mut perm = self.action[g].clone();
                perm.extend(other.action[g].iter().map(|&v| v + shift));
                perm
            })
            .collect();
        Self::assemble(self.group.clone(), complex, action)
    }

    /// Simplices whose isotropy contains `h`, with the residual action of the
    /// normalizer of `h`.
    pub fn fixed_subcomplex(&self, h: &Subgroup) -> Result<FixedSubcomplex> {
        if !self.rigid {
            return Err(Error::NotRigid);
        }
        let (complex, embedding) = self.complex.subcomplex(|s| h.is_subgroup_of(&Subgroup::from_mask_unchecked(self.isotropy_mask(s))));
        let normalizer = self.group.normalizer(h);
        let mut position = vec![usize::MAX; self.complex.vertex_count()];
        for (i, &v) in embedding.iter().enumerate() {
            position[v] = i;
        }
        let residual_action = normalizer.members().map(|g| embedding.iter().map(|&v| position[self.action[g][v]]).collect()).collect();
        Ok(FixedSubcomplex { complex, embedding, normalizer, residual_action })
    }

    /// Vertex orbits numbered by smallest representative; simplices are the
    /// images of the simplices of `self`.
    pub fn orbit_space(&self) -> Result<OrbitSpace> {
        if !self.rigid {
            return Err(Error::NotRigid);
        }
        let n = self.complex.vertex_count();
        let mut orbit_of = vec![usize::MAX; n];
        let mut count = 0;
        for v in 0..n {
            if orbit_of[v] == usize::MAX {
                for g in self.group.elements() {
                    orbit_of[self.action[g][v]] = count;
                }
                count += 1;
            }
        }
        let images: Vec<Simplex> = self.complex.iter().map(|s| SimplicialComplex::image(s, &orbit_of)).collect();
        let complex = SimplicialComplex::from_facets(count, images)?;
        Ok(OrbitSpace { complex, vertex_orbit: orbit_of })
    }

    /// Isotropy of every simplex, keyed by simplex.
    pub fn isotropy_labels(&self) -> Result<BTreeMap<Simplex, Subgroup>> {
        if !self.rigid {
            return Err(Error::NotRigid);
        }
        Ok(self.complex.iter().map(|s| (s.clone(), Subgroup::from_mask_unchecked(self.isotropy_mask(s)))).collect())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FixedSubcomplex {
    pub complex: SimplicialComplex,
    /// Vertex of the ambient complex for each vertex of `complex`.
    pub embedding: Vec<usize>,
    pub normalizer: Subgroup,
    /// One permutation per member of `normalizer`, in increasing order.
    pub residual_action: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct OrbitSpace {
    pub complex: SimplicialComplex,
    pub vertex_orbit: Vec<usize>,
}

pub enum CombineOp<'a> {
    Cone(&'a GSimplicialComplex),
    Suspension(&'a GSimplicialComplex),
    Join(&'a GSimplicialComplex, &'a GSimplicialComplex),
}

pub fn combine(op: CombineOp<'_>) -> Result<GSimplicialComplex> {
    match op {
        CombineOp::Cone(x) => Ok(x.cone()),
        CombineOp::Suspension(x) => Ok(x.suspension()),
        CombineOp::Join(x, y) => x.join(y),
    }
}

/// The linking simplex of a chain: order complex of the cosets `gH_i`
/// ordered by inclusion, with `G` acting by left translation. Vertices are
/// listed level by level, each level in order of smallest coset member.
pub fn linking_simplex(group: &Arc<FiniteGroup>, chain: &SubgroupChain) -> Result<GSimplicialComplex> {
    for h in chain.subgroups() {
        if group.subgroup_from_mask(h.mask()).is_none() {
            return Err(Error::InvalidChain(format!("{:?} is not a subgroup of this group", h.member_list())));
        }
    }
    let mut cosets: Vec<(usize, u64)> = Vec::new();
    for (level, h) in chain.subgroups().iter().enumerate() {
        let mut seen = Vec::new();
        for g in group.elements() {
            let c = group.left_coset(g, h);
            if !seen.contains(&c) {
                seen.push(c);
                cosets.push((level, c));
            }
        }
    }
    let up: Vec<Vec<usize>> = cosets
        .iter()
        .map(|&(i, c)| cosets.iter().enumerate().filter(|(_, &(j, d))| j > i && c & !d == 0).map(|(k, _)| k).collect())
        .collect();
    let complex = order_complex(&up);
    let action = group
        .elements()
        .map(|g| {
            cosets
                .iter()
                .map(|&(i, c)| {
                    let moved = crate::groups::bits(c).fold(0u64, |m, x| m | 1 << group.mul(g, x));
                    cosets.iter().position(|&(j, d)| j == i && d == moved).expect("cosets are permuted")
                })
                .collect()
        })
        .collect();
    Ok(GSimplicialComplex::assemble(group.clone(), complex, action))
}

/// Image of the boundary faces: chains of cosets that skip at least one level.
pub fn boundary_linking_simplex(group: &Arc<FiniteGroup>, chain: &SubgroupChain) -> Result<GSimplicialComplex> {
    let full = linking_simplex(group, chain)?;
    Ok(full.skeleton(chain.length() as isize - 1))
}

pub fn simplex_isotropy(x: &GSimplicialComplex, simplex: &[usize]) -> Result<Subgroup> {
    x.simplex_isotropy(simplex)
}

pub fn fixed_subcomplex(x: &GSimplicialComplex, h: &Subgroup) -> Result<FixedSubcomplex> {
    x.fixed_subcomplex(h)
}

pub fn orbit_space(x: &GSimplicialComplex) -> Result<OrbitSpace> {
    x.orbit_space()
}

pub fn make_rigid(x: &GSimplicialComplex) -> GSimplicialComplex {
    x.make_rigid()
}

/// An equivariant simplicial map.
#[derive(Debug, Clone)]
pub struct GSimplicialMap {
    source: Arc<GSimplicialComplex>,
    target: Arc<GSimplicialComplex>,
    vertex_map: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsovarianceCheck {
    pub isovariant: bool,
    /// A source simplex whose isotropy differs from that of its image.
    pub witness: Option<Simplex>,
}

impl GSimplicialMap {
    pub fn new(source: Arc<GSimplicialComplex>, target: Arc<GSimplicialComplex>, vertex_map: Vec<usize>) -> Result<Self> {
        if source.group != target.group {
            return Err(Error::InvalidComplex("map between complexes over different groups".into()));
        }
        source.complex.check_simplicial_map(&target.complex, &vertex_map)?;
        for g in source.group.elements() {
            for v in 0..source.complex.vertex_count() {
                if vertex_map[source.action[g][v]] != target.action[g][vertex_map[v]] {
                    return Err(Error::NotEquivariant { element: g, vertex: v });
                }
            }
        }
        Ok(GSimplicialMap { source, target, vertex_map })
    }

    pub fn identity(x: Arc<GSimplicialComplex>) -> Self {
        let vertex_map = (0..x.complex.vertex_count()).collect();
        GSimplicialMap { source: x.clone(), target: x, vertex_map }
    }

    pub fn source(&self) -> &Arc<GSimplicialComplex> {
        &self.source
    }

    pub fn target(&self) -> &Arc<GSimplicialComplex> {
        &self.target
    }

    pub fn vertex_map(&self) -> &[usize] {
        &self.vertex_map
    }

    pub fn image(&self, simplex: &[usize]) -> Simplex {
        SimplicialComplex::image(simplex, &self.vertex_map)
    }

    /// `other ∘ self`
    pub fn then(&self, other: &GSimplicialMap) -> Result<GSimplicialMap> {
        if !Arc::ptr_eq(&self.target, &other.source) && *self.target != *other.source {
            return Err(Error::InvalidComplex("maps are not composable".into()));
        }
        let vertex_map = self.vertex_map.iter().map(|&v| other.vertex_map[v]).collect();
        Ok(GSimplicialMap { source: self.source.clone(), target: other.target.clone(), vertex_map })
    }

    pub fn is_isovariant(&self) -> Result<IsovarianceCheck> {
        if !self.source.rigid || !self.target.rigid {
            return Err(Error::NotRigid);
        }
        let witness =
            self.source.complex.iter().find(|s| self.source.isotropy_mask(s) != self.target.isotropy_mask(&self.image(s))).cloned();
        Ok(IsovarianceCheck { isovariant: witness.is_none(), witness })
    }

    /// The induced map `Sd(source) → Sd(target)` between the given
    /// subdivisions, which must come from
    /// [`GSimplicialComplex::barycentric_subdivision`].
    pub fn subdivide(&self, sd_source: Arc<GSimplicialComplex>, sd_target: Arc<GSimplicialComplex>) -> Result<GSimplicialMap> {
        let index = self.target.complex.global_index();
        let vertex_map = self.source.complex.iter().map(|s| index[&self.image(s)]).collect();
        GSimplicialMap::new(sd_source, sd_target, vertex_map)
    }
}

pub fn is_isovariant(f: &GSimplicialMap) -> Result<IsovarianceCheck> {
    f.is_isovariant()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{enumerate_chains, FiniteGroup};

    fn group(g: FiniteGroup) -> Arc<FiniteGroup> {
        Arc::new(g)
    }

    fn c(n: usize) -> Arc<FiniteGroup> {
        group(FiniteGroup::cyclic(n).unwrap())
    }

    #[test]
    fn linking_simplex_of_a_single_subgroup_is_the_orbit() {
        let c2 = c(2);
        let x = linking_simplex(&c2, &c2.parse_chain("e").unwrap()).unwrap();
        assert_eq!(x.complex().f_vector(), vec![2]);
        assert_eq!(x.action(1), &[1, 0]);
    }

    #[test]
    fn linking_simplex_e_c2_is_a_path() {
        let c2 = c(2);
        let chain = c2.parse_chain("e<C2").unwrap();
        let x = linking_simplex(&c2, &chain).unwrap();
        assert_eq!(x.complex().f_vector(), vec![3, 2]);
        // vertices: {e}, {g}, {e,g}
        assert_eq!(x.vertex_stabilizer(0), c2.trivial_subgroup());
        assert_eq!(x.vertex_stabilizer(1), c2.trivial_subgroup());
        assert_eq!(x.vertex_stabilizer(2), c2.whole_group());
        assert_eq!(x.complex().simplices(1), &[vec![0, 2], vec![1, 2]]);
        assert!(x.is_rigid());
        assert_eq!(x.simplex_isotropy(&[0, 2]).unwrap(), c2.trivial_subgroup());
    }

    #[test]
    fn linking_simplex_e_c3_is_a_tripod_over_an_interval() {
        let c3 = c(3);
        let x = linking_simplex(&c3, &c3.parse_chain("e<C3").unwrap()).unwrap();
        assert_eq!(x.complex().f_vector(), vec![4, 3]);
        let orbit = x.orbit_space().unwrap();
        assert_eq!(orbit.complex, SimplicialComplex::simplex(1));
    }

    #[test]
    fn boundary_linking_simplices() {
        let c2 = c(2);
        let c3 = c(3);
        assert!(boundary_linking_simplex(&c2, &c2.parse_chain("e").unwrap()).unwrap().complex().is_empty());
        assert_eq!(boundary_linking_simplex(&c2, &c2.parse_chain("e<C2").unwrap()).unwrap().complex().f_vector(), vec![3]);
        assert_eq!(boundary_linking_simplex(&c3, &c3.parse_chain("e<C3").unwrap()).unwrap().complex().f_vector(), vec![4]);
    }

    #[test]
    fn vertex_isotropy_of_linking_simplex_is_conjugate_subgroup() {
        let s3 = group(FiniteGroup::symmetric(3).unwrap());
        for chain in enumerate_chains(&s3, 2) {
            let x = linking_simplex(&s3, &chain).unwrap();
            assert!(x.is_rigid());
            // vertex gH_k has stabilizer gH_kg⁻¹
            let mut v = 0;
            for h in chain.subgroups() {
                let mut seen = Vec::new();
                for g in s3.elements() {
                    let coset = s3.left_coset(g, h);
                    if !seen.contains(&coset) {
                        seen.push(coset);
                        assert_eq!(x.vertex_stabilizer(v), s3.conjugate_subgroup(g, h));
                        v += 1;
                    }
                }
            }
        }
    }

    #[test]
    fn trivial_action_isotropy_is_everything() {
        let c3 = c(3);
        let x = GSimplicialComplex::with_trivial_action(c3.clone(), SimplicialComplex::simplex(2));
        for s in x.complex().iter() {
            assert_eq!(x.simplex_isotropy(s).unwrap(), c3.whole_group());
        }
        assert_eq!(x.orbit_space().unwrap().complex, *x.complex());
    }

    #[test]
    fn rigidity_detection_and_repair() {
        let c2 = c(2);
        // an edge whose endpoints are swapped
        let edge = GSimplicialComplex::new(c2.clone(), SimplicialComplex::simplex(1), vec![vec![0, 1], vec![1, 0]]).unwrap();
        assert!(!edge.is_rigid());
        assert_eq!(edge.simplex_isotropy(&[0]), Err(Error::NotRigid));
        let fixed = edge.make_rigid();
        assert!(fixed.is_rigid());
        assert_eq!(fixed.complex().f_vector(), vec![3, 2]);
        // the inserted midpoint is fixed by the swap
        assert_eq!(fixed.vertex_stabilizer(2), c2.whole_group());
        assert_eq!(fixed.make_rigid(), fixed);

        // boundary of a triangle rotated by C3 is already rigid
        let c3 = c(3);
        let tri =
            GSimplicialComplex::new(c3, SimplicialComplex::simplex_boundary(2), vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]]).unwrap();
        assert!(tri.is_rigid());
        assert_eq!(tri.make_rigid(), tri);
    }

    #[test]
    fn invalid_actions_are_rejected() {
        let c2 = c(2);
        // swap does not preserve the single edge {0,1} in a path 0-1-2? it does not
        let path = SimplicialComplex::from_facets(3, [[0, 1], [1, 2]]).unwrap();
        assert!(GSimplicialComplex::new(c2.clone(), path.clone(), vec![vec![0, 1, 2], vec![1, 0, 2]]).is_err());
        assert!(GSimplicialComplex::new(c2.clone(), path.clone(), vec![vec![0, 1, 2], vec![2, 1, 0]]).is_ok());
        let c3 = c(3);
        // a transposition is not a C3 action
        assert!(GSimplicialComplex::new(c3, SimplicialComplex::discrete(3), vec![vec![0, 1, 2], vec![1, 0, 2], vec![1, 0, 2]]).is_err());
    }

    #[test]
    fn isotropy_is_antitone_and_equivariant() {
        let s3 = group(FiniteGroup::symmetric(3).unwrap());
        let chain = s3.parse_chain("e<C3<G").unwrap();
        let x = linking_simplex(&s3, &chain).unwrap().barycentric_subdivision();
        for s in x.complex().iter() {
            let iso = x.simplex_isotropy(s).unwrap();
            for t in x.complex().simplices(s.len()) {
                if is_face(s, t) {
                    assert!(x.simplex_isotropy(t).unwrap().is_subgroup_of(&iso));
                }
            }
            for g in s3.elements() {
                assert_eq!(x.simplex_isotropy(&x.act(g, s)).unwrap(), s3.conjugate_subgroup(g, &iso));
            }
        }
    }

    #[test]
    fn fixed_subcomplexes() {
        let c2 = c(2);
        let s_sigma = rep_sphere(&c2, &[RepSummand::new(Irrep::Sign, 1)]).unwrap();
        assert_eq!(s_sigma.fixed_subcomplex(&c2.trivial_subgroup()).unwrap().complex, *s_sigma.complex());
        assert!(s_sigma.fixed_subcomplex(&c2.whole_group()).unwrap().complex.is_empty());
        let s_rho = rep_sphere(&c2, &[RepSummand::new(Irrep::Trivial, 1), RepSummand::new(Irrep::Sign, 1)]).unwrap();
        let fixed = s_rho.fixed_subcomplex(&c2.whole_group()).unwrap();
        assert_eq!(fixed.complex.f_vector(), vec![2]);
        assert_eq!(fixed.residual_action.len(), 2);
    }

    #[test]
    fn isovariance_checks() {
        let c2 = c(2);
        let sign = [RepSummand::new(Irrep::Sign, 1)];
        let s = Arc::new(rep_sphere(&c2, &sign).unwrap());
        let d = Arc::new(rep_disk(&c2, &sign).unwrap());
        let incl = GSimplicialMap::new(s.clone(), d.clone(), vec![0, 1]).unwrap();
        assert!(incl.is_isovariant().unwrap().isovariant);
        assert!(GSimplicialMap::identity(d.clone()).is_isovariant().unwrap().isovariant);

        let point = Arc::new(GSimplicialComplex::with_trivial_action(c2.clone(), SimplicialComplex::point()));
        let collapse = GSimplicialMap::new(d.clone(), point, vec![0, 0, 0]).unwrap();
        let check = collapse.is_isovariant().unwrap();
        assert!(!check.isovariant);
        let witness = check.witness.unwrap();
        assert_eq!(d.simplex_isotropy(&witness).unwrap(), c2.trivial_subgroup());

        // not equivariant: send both swapped points to one of them
        assert!(matches!(GSimplicialMap::new(s.clone(), s.clone(), vec![0, 0]), Err(Error::NotEquivariant { .. })));
    }

    #[test]
    fn orbit_space_of_swapped_square_is_an_interval() {
        let c2 = c(2);
        // 4-cycle 0-1-2-3 with the antipodal swap: a free action
        let square = SimplicialComplex::from_facets(4, [[0, 1], [1, 2], [2, 3], [0, 3]]).unwrap();
        let x = GSimplicialComplex::new(c2, square, vec![vec![0, 1, 2, 3], vec![2, 3, 0, 1]]).unwrap();
        assert!(x.is_rigid());
        let orbit = x.orbit_space().unwrap();
        assert_eq!(orbit.complex.vertex_count(), 2);
        // two edge orbits collapse onto a single interval on two vertices
        assert_eq!(orbit.complex.f_vector(), vec![2, 1]);
    }

    #[test]
    fn subdivided_maps_stay_equivariant() {
        let c2 = c(2);
        let sign = [RepSummand::new(Irrep::Sign, 1)];
        let s = Arc::new(rep_sphere(&c2, &sign).unwrap());
        let d = Arc::new(rep_disk(&c2, &sign).unwrap());
        let incl = GSimplicialMap::new(s.clone(), d.clone(), vec![0, 1]).unwrap();
        let sd = incl.subdivide(Arc::new(s.barycentric_subdivision()), Arc::new(d.barycentric_subdivision())).unwrap();
        assert!(sd.is_isovariant().unwrap().isovariant);
    }
}
