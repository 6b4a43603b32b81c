//! Plain finite simplicial complexes on the vertex set `0..n`.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A simplex as its sorted vertex list.
pub type Simplex = Vec<usize>;

/// Every vertex `0..vertex_count` is a 0-simplex. Simplices are grouped by
/// dimension and sorted lexicographically inside each dimension, which makes
/// lookups a binary search and iteration order deterministic.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimplicialComplex {
    vertex_count: usize,
    simplices: Vec<Vec<Simplex>>,
}

impl SimplicialComplex {
    pub fn empty() -> Self {
        SimplicialComplex { vertex_count: 0, simplices: Vec::new() }
    }

    pub fn point() -> Self {
        Self::discrete(1)
    }

    pub fn discrete(n: usize) -> Self {
        if n == 0 {
            return Self::empty();
        }
        SimplicialComplex { vertex_count: n, simplices: vec![(0..n).map(|v| vec![v]).collect()] }
    }

    /// The full simplex on `n + 1` vertices.
    pub fn simplex(n: usize) -> Self {
        Self::from_facets(n + 1, [(0..=n).collect::<Vec<_>>()]).expect("valid")
    }

    /// Boundary of the `n`-simplex, a triangulated `(n-1)`-sphere.
    pub fn simplex_boundary(n: usize) -> Self {
        let facets: Vec<Simplex> = (0..=n).map(|skip| (0..=n).filter(|&v| v != skip).collect()).collect();
        Self::from_facets(n + 1, facets).expect("valid")
    }

    /// Closes the given simplices under taking faces. Vertices not mentioned
    /// by any facet are still present as isolated points.
    pub fn from_facets<I, S>(vertex_count: usize, facets: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<[usize]>,
    {
        let mut all: BTreeSet<Simplex> = (0..vertex_count).map(|v| vec![v]).collect();
        for facet in facets {
            let mut s: Simplex = facet.as_ref().to_vec();
            s.sort_unstable();
            s.dedup();
            if s.is_empty() {
                continue;
            }
            if let Some(&v) = s.iter().find(|&&v| v >= vertex_count) {
                return Err(Error::InvalidComplex(format!("vertex {v} out of range 0..{vertex_count}")));
            }
            if s.len() > 24 {
                return Err(Error::InvalidComplex(format!("simplex of dimension {} is too large", s.len() - 1)));
            }
            if all.contains(&s) {
                continue;
            }
            for mask in 1u32..(1 << s.len()) {
                let face: Simplex = s.iter().enumerate().filter(|(i, _)| mask & (1 << i) != 0).map(|(_, &v)| v).collect();
                all.insert(face);
            }
        }
        Ok(Self::from_sorted_closed(vertex_count, all))
    }

    /// Simplices must already be closed under faces.
    pub(crate) fn from_closed_unchecked(vertex_count: usize, simplices: impl IntoIterator<Item = Simplex>) -> Self {
        let mut by_dim: Vec<Vec<Simplex>> = Vec::new();
        for mut s in simplices {
            s.sort_unstable();
            let d = s.len() - 1;
            if by_dim.len() <= d {
                by_dim.resize_with(d + 1, Vec::new);
            }
            by_dim[d].push(s);
        }
        for layer in &mut by_dim {
            layer.sort_unstable();
            layer.dedup();
        }
        SimplicialComplex { vertex_count, simplices: by_dim }
    }

    fn from_sorted_closed(vertex_count: usize, all: BTreeSet<Simplex>) -> Self {
        Self::from_closed_unchecked(vertex_count, all)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn is_empty(&self) -> bool {
        self.vertex_count == 0
    }

    /// `-1` for the empty complex.
    pub fn dim(&self) -> isize {
        self.simplices.len() as isize - 1
    }

    /// Simplices of dimension `d`, sorted.
    pub fn simplices(&self, d: usize) -> &[Simplex] {
        self.simplices.get(d).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn iter(&self) -> impl Iterator<Item = &Simplex> {
        self.simplices.iter().flatten()
    }

    pub fn len(&self) -> usize {
        self.simplices.iter().map(Vec::len).sum()
    }

    pub fn f_vector(&self) -> Vec<usize> {
        self.simplices.iter().map(Vec::len).collect()
    }

    /// Index of a sorted simplex inside its dimension.
    pub fn index_of(&self, simplex: &[usize]) -> Option<usize> {
        if simplex.is_empty() {
            return None;
        }
        self.simplices.get(simplex.len() - 1)?.binary_search_by(|s| s.as_slice().cmp(simplex)).ok()
    }

    pub fn contains(&self, simplex: &[usize]) -> bool {
        self.index_of(simplex).is_some()
    }

    pub fn facets(&self) -> Vec<Simplex> {
        self.iter()
            .filter(|s| {
                let next = self.simplices(s.len());
                !next.iter().any(|t| is_face(s, t))
            })
            .cloned()
            .collect()
    }

    pub fn component_count(&self) -> usize {
        let mut parent: Vec<usize> = (0..self.vertex_count).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for e in self.simplices(1) {
            let (a, b) = (find(&mut parent, e[0]), find(&mut parent, e[1]));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        (0..self.vertex_count).filter(|&v| find(&mut parent, v) == v).count()
    }

    /// Full subcomplex on the vertices where `keep` is true, renumbered in
    /// increasing order. Returns the complex and the old id of each new vertex.
    pub fn full_subcomplex(&self, keep: &[bool]) -> (SimplicialComplex, Vec<usize>) {
        let old_ids: Vec<usize> = (0..self.vertex_count).filter(|&v| keep[v]).collect();
        let mut new_id = vec![usize::MAX; self.vertex_count];
        for (i, &v) in old_ids.iter().enumerate() {
            new_id[v] = i;
        }
        let simplices = self.iter().filter(|s| s.iter().all(|&v| keep[v])).map(|s| s.iter().map(|&v| new_id[v]).collect::<Simplex>());
        (Self::from_closed_unchecked(old_ids.len(), simplices), old_ids)
    }

    /// Subcomplex made of the given simplices (must be closed under faces),
    /// renumbered onto the vertices it uses.
    pub fn subcomplex(&self, keep_simplex: impl Fn(&Simplex) -> bool) -> (SimplicialComplex, Vec<usize>) {
        let kept: Vec<&Simplex> = self.iter().filter(|s| keep_simplex(s)).collect();
        let old_ids: Vec<usize> = kept.iter().filter(|s| s.len() == 1).map(|s| s[0]).collect();
        let mut new_id = vec![usize::MAX; self.vertex_count];
        for (i, &v) in old_ids.iter().enumerate() {
            new_id[v] = i;
        }
        let simplices = kept.into_iter().map(|s| s.iter().map(|&v| new_id[v]).collect::<Simplex>());
        (Self::from_closed_unchecked(old_ids.len(), simplices), old_ids)
    }

    /// All simplices in a fixed global order: by dimension, then lexicographic.
    pub fn ordered_simplices(&self) -> Vec<&Simplex> {
        self.iter().collect()
    }

    /// Barycentric subdivision. Vertex `i` of the result is the barycenter of
    /// `ordered_simplices()[i]`.
    pub fn barycentric_subdivision(&self) -> SimplicialComplex {
        let ordered = self.ordered_simplices();
        let index = self.global_index();
        let mut up: Vec<Vec<usize>> = vec![Vec::new(); ordered.len()];
        for (t, tau) in ordered.iter().enumerate() {
            let k = tau.len();
            for mask in 1u32..(1 << k) - 1 {
                let face: Simplex = tau.iter().enumerate().filter(|(i, _)| mask & (1 << i) != 0).map(|(_, &v)| v).collect();
                up[index[&face]].push(t);
            }
        }
        order_complex(&up)
    }

    /// Map from simplex to its position in [`ordered_simplices`](Self::ordered_simplices).
    pub fn global_index(&self) -> HashMap<Simplex, usize> {
        self.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect()
    }

    /// Cone with apex `vertex_count`.
    pub fn cone(&self) -> SimplicialComplex {
        self.join(&SimplicialComplex::point())
    }

    /// Unreduced suspension with apexes `n` and `n + 1`; the suspension of the
    /// empty complex is two points.
    pub fn suspension(&self) -> SimplicialComplex {
        self.join(&SimplicialComplex::discrete(2))
    }

    /// Join; vertices of `other` are shifted by `self.vertex_count()`.
    pub fn join(&self, other: &SimplicialComplex) -> SimplicialComplex {
        let shift = self.vertex_count;
        let mut all: Vec<Simplex> = self.iter().cloned().collect();
        let shifted: Vec<Simplex> = other.iter().map(|b| b.iter().map(|&v| v + shift).collect()).collect();
        all.extend(shifted.iter().cloned());
        for a in self.iter() {
            for b in &shifted {
                let mut s = a.clone();
                s.extend_from_slice(b);
                all.push(s);
            }
        }
        Self::from_closed_unchecked(self.vertex_count + other.vertex_count, all)
    }

    /// Disjoint union; vertices of `other` are shifted.
    pub fn disjoint_union(&self, other: &SimplicialComplex) -> SimplicialComplex {
        let shift = self.vertex_count;
        let all = self.iter().cloned().chain(other.iter().map(|b| b.iter().map(|&v| v + shift).collect()));
        Self::from_closed_unchecked(self.vertex_count + other.vertex_count, all)
    }

    /// Image of a simplex under a vertex map, sorted and deduplicated.
    pub fn image(simplex: &[usize], vertex_map: &[usize]) -> Simplex {
        let mut s: Simplex = simplex.iter().map(|&v| vertex_map[v]).collect();
        s.sort_unstable();
        s.dedup();
        s
    }

    /// Checks that a vertex map carries simplices to simplices.
    pub fn check_simplicial_map(&self, target: &SimplicialComplex, vertex_map: &[usize]) -> Result<()> {
        if vertex_map.len() != self.vertex_count {
            return Err(Error::InvalidComplex(format!("vertex map has {} entries for {} vertices", vertex_map.len(), self.vertex_count)));
        }
        if let Some(&v) = vertex_map.iter().find(|&&v| v >= target.vertex_count) {
            return Err(Error::InvalidComplex(format!("vertex map targets missing vertex {v}")));
        }
        for s in self.iter() {
            if !target.contains(&Self::image(s, vertex_map)) {
                return Err(Error::NotSimplicial { simplex: s.clone() });
            }
        }
        Ok(())
    }
}

/// `a ⊆ b` for sorted vertex lists.
pub fn is_face(a: &[usize], b: &[usize]) -> bool {
    let mut it = b.iter();
    a.iter().all(|x| it.by_ref().any(|y| y == x))
}

/// Order complex of a finite poset on `0..up.len()`, where `up[x]` lists
/// every element strictly above `x`. Chains become simplices.
pub fn order_complex(up: &[Vec<usize>]) -> SimplicialComplex {
    fn walk(x: usize, up: &[Vec<usize>], chain: &mut Vec<usize>, out: &mut Vec<Simplex>) {
        chain.push(x);
        out.push(chain.clone());
        for &y in &up[x] {
            walk(y, up, chain, out);
        }
        chain.pop();
    }
    let mut out = Vec::new();
    let mut chain = Vec::new();
    for x in 0..up.len() {
        walk(x, up, &mut chain, &mut out);
    }
    SimplicialComplex::from_closed_unchecked(up.len(), out)
}

/// Whether a vertex map is a simplicial isomorphism.
pub fn is_isomorphism(source: &SimplicialComplex, target: &SimplicialComplex, vertex_map: &[usize]) -> bool {
    if source.f_vector() != target.f_vector() || vertex_map.len() != source.vertex_count() {
        return false;
    }
    let distinct: BTreeSet<usize> = vertex_map.iter().copied().collect();
    if distinct.len() != source.vertex_count() {
        return false;
    }
    source.check_simplicial_map(target, vertex_map).is_ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closure_and_counts() {
        let tri = SimplicialComplex::simplex(2);
        assert_eq!(tri.f_vector(), vec![3, 3, 1]);
        let sphere = SimplicialComplex::simplex_boundary(3);
        assert_eq!(sphere.f_vector(), vec![4, 6, 4]);
        assert_eq!(sphere.dim(), 2);
        assert_eq!(SimplicialComplex::empty().dim(), -1);
        assert!(SimplicialComplex::from_facets(2, [[0, 5]]).is_err());
    }

    #[test]
    fn subdivision_of_small_cases() {
        assert_eq!(SimplicialComplex::point().barycentric_subdivision(), SimplicialComplex::point());
        let edge = SimplicialComplex::simplex(1).barycentric_subdivision();
        assert_eq!(edge.f_vector(), vec![3, 2]);
        assert_eq!(edge.component_count(), 1);
        let tri = SimplicialComplex::simplex(2).barycentric_subdivision();
        assert_eq!(tri.f_vector(), vec![7, 12, 6]);
    }

    #[test]
    fn join_of_two_zero_spheres_is_a_square() {
        let s0 = SimplicialComplex::discrete(2);
        let sq = s0.join(&s0);
        assert_eq!(sq.f_vector(), vec![4, 4]);
        assert_eq!(sq.component_count(), 1);
        assert_eq!(SimplicialComplex::empty().suspension(), SimplicialComplex::discrete(2));
        assert_eq!(SimplicialComplex::empty().cone(), SimplicialComplex::point());
    }

    #[test]
    fn full_subcomplex_keeps_induced_simplices() {
        let tri = SimplicialComplex::simplex(2);
        let (sub, ids) = tri.full_subcomplex(&[true, false, true]);
        assert_eq!(ids, vec![0, 2]);
        assert_eq!(sub.f_vector(), vec![2, 1]);
    }

    #[test]
    fn order_complex_of_chain_poset_is_a_simplex() {
        let up = vec![vec![1, 2], vec![2], vec![]];
        assert_eq!(order_complex(&up), SimplicialComplex::simplex(2));
    }

    #[test]
    fn face_relation() {
        assert!(is_face(&[1, 3], &[0, 1, 2, 3]));
        assert!(!is_face(&[1, 4], &[0, 1, 2, 3]));
        assert!(is_face(&[], &[0]));
    }
}
