//! Triangulated unit spheres, disks and one-point compactifications of
//! real representations of cyclic groups.

use std::sync::Arc;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::{GSimplicialComplex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::groups::FiniteGroup;

/// Real irreducible representations of a cyclic group `C_n = <t>`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Irrep {
    Trivial,
    /// `t` acts by `-1`; needs `n` even.
    Sign,
    /// `t` rotates the plane by `2πk/n`.
    Rotation(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepSummand {
    pub irrep: Irrep,
    #[serde(default = "one")]
    pub mult: usize,
}

fn one() -> usize {
    1
}

impl RepSummand {
    pub fn new(irrep: Irrep, mult: usize) -> Self {
        RepSummand { irrep, mult }
    }

    fn real_dim(&self) -> usize {
        match self.irrep {
            Irrep::Trivial | Irrep::Sign => self.mult,
            Irrep::Rotation(_) => 2 * self.mult,
        }
    }
}

/// Unit sphere of a single irreducible summand: two points for the
/// one-dimensional ones, an `m`-gon for a rotation.
fn irrep_sphere(group: &Arc<FiniteGroup>, exponent: &[usize], irrep: Irrep) -> Result<GSimplicialComplex> {
    let n = group.order();
    let (complex, action): (SimplicialComplex, Vec<Vec<usize>>) = match irrep {
        Irrep::Trivial => (SimplicialComplex::discrete(2), vec![vec![0, 1]; n]),
        Irrep::Sign => {
            if !n.is_multiple_of(2) {
                return Err(Error::UnsupportedRepresentation(format!("sign representation of a group of odd order {n}")));
            }
            let action = exponent.iter().map(|&e| if e % 2 == 0 { vec![0, 1] } else { vec![1, 0] }).collect();
            (SimplicialComplex::discrete(2), action)
        }
        Irrep::Rotation(k) => {
            let r = n / n.gcd(&(k % n));
            let m = r * 3usize.div_ceil(r);
            let edges: Vec<[usize; 2]> = (0..m).map(|j| [j, (j + 1) % m]).collect();
            let action = exponent
                .iter()
                .map(|&e| {
                    let shift = (e * k % n) * m / n;
                    (0..m).map(|j| (j + shift) % m).collect()
                })
                .collect();
            (SimplicialComplex::from_facets(m, edges)?, action)
        }
    };
    GSimplicialComplex::new(group.clone(), complex, action)
}

/// `S(V)` as the iterated join of the unit spheres of the summands.
pub fn rep_sphere(group: &Arc<FiniteGroup>, rep: &[RepSummand]) -> Result<GSimplicialComplex> {
    let generator =
        group.cyclic_generator().ok_or_else(|| Error::UnsupportedRepresentation("representation spheres need a cyclic group".into()))?;
    if rep.iter().map(RepSummand::real_dim).sum::<usize>() == 0 {
        return Err(Error::UnsupportedRepresentation("representation of dimension zero".into()));
    }
    let mut exponent = vec![0; group.order()];
    let mut x = 0;
    for e in 0..group.order() {
        exponent[x] = e;
        x = group.mul(generator, x);
    }
    let mut sphere: Option<GSimplicialComplex> = None;
    for summand in rep {
        let piece = irrep_sphere(group, &exponent, summand.irrep)?;
        for _ in 0..summand.mult {
            sphere = Some(match sphere {
                None => piece.clone(),
                Some(s) => s.join(&piece)?,
            });
        }
    }
    Ok(sphere.expect("positive dimension"))
}

/// `D(V)`, the cone on `S(V)` with a fixed apex.
pub fn rep_disk(group: &Arc<FiniteGroup>, rep: &[RepSummand]) -> Result<GSimplicialComplex> {
    Ok(rep_sphere(group, rep)?.cone())
}

/// `S^V`, the unreduced suspension of `S(V)`.
pub fn rep_compactification(group: &Arc<FiniteGroup>, rep: &[RepSummand]) -> Result<GSimplicialComplex> {
    Ok(rep_sphere(group, rep)?.suspension())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(n: usize) -> Arc<FiniteGroup> {
        Arc::new(FiniteGroup::cyclic(n).unwrap())
    }

    #[test]
    fn sign_sphere_is_two_swapped_points() {
        let c2 = c(2);
        let s = rep_sphere(&c2, &[RepSummand::new(Irrep::Sign, 1)]).unwrap();
        assert_eq!(s.complex().f_vector(), vec![2]);
        assert_eq!(s.action(1), &[1, 0]);
        assert!(rep_sphere(&c(3), &[RepSummand::new(Irrep::Sign, 1)]).is_err());
    }

    #[test]
    fn rotation_spheres() {
        let c3 = c(3);
        let s = rep_sphere(&c3, &[RepSummand::new(Irrep::Rotation(1), 1)]).unwrap();
        assert_eq!(s.complex().f_vector(), vec![3, 3]);
        assert!(s.is_rigid());
        // C2 rotating by π needs a square, not a 2-gon
        let s = rep_sphere(&c(2), &[RepSummand::new(Irrep::Rotation(1), 1)]).unwrap();
        assert_eq!(s.complex().f_vector(), vec![4, 4]);
        assert_eq!(s.action(1), &[2, 3, 0, 1]);
        // rotation by 2π·2/4 in C4: the square, generator shifts by 2
        let s = rep_sphere(&c(4), &[RepSummand::new(Irrep::Rotation(2), 1)]).unwrap();
        assert_eq!(s.complex().f_vector(), vec![4, 4]);
        assert_eq!(s.action(1), &[2, 3, 0, 1]);
        // k = 0 is a trivially rotated triangle
        let s = rep_sphere(&c(5), &[RepSummand::new(Irrep::Rotation(0), 1)]).unwrap();
        assert!((0..5).all(|g| s.action(g) == [0, 1, 2]));
    }

    #[test]
    fn regular_representation_of_c3() {
        let c3 = c(3);
        let rho = [RepSummand::new(Irrep::Trivial, 1), RepSummand::new(Irrep::Rotation(1), 1)];
        let sv = rep_compactification(&c3, &rho).unwrap();
        assert_eq!(sv.complex().f_vector(), vec![7, 19, 24, 12]);
        assert!(sv.is_rigid());
        assert_eq!(rep_disk(&c3, &rho).unwrap().complex().dim(), 3);
    }

    #[test]
    fn rejects_noncyclic_and_zero() {
        let s3 = Arc::new(FiniteGroup::symmetric(3).unwrap());
        assert!(rep_sphere(&s3, &[RepSummand::new(Irrep::Trivial, 1)]).is_err());
        assert!(rep_sphere(&c(2), &[]).is_err());
        assert!(rep_sphere(&c(2), &[RepSummand::new(Irrep::Sign, 0)]).is_err());
    }
}
