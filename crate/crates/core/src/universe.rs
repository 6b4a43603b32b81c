//! Exact checks in finite truncations `ρ^{⊕l}` of a complete universe: the
//! isotropy of vectors, the path `γ` from the `K`-fixed to the `H`-fixed
//! part, and the three-case extension of a sphere family over a disk.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groups::{FiniteGroup, Subgroup};

pub type Rational = BigRational;

pub fn rational(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// A vector of `ρ^{⊕copies}`; coordinate `copy · order + g` is the
/// coefficient of `χ_g` in the given copy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalVector {
    copies: usize,
    order: usize,
    coords: Vec<Rational>,
}

impl RationalVector {
    pub fn zeros(copies: usize, order: usize) -> Self {
        RationalVector { copies, order, coords: vec![Rational::zero(); copies * order] }
    }

    pub fn from_coords(copies: usize, order: usize, coords: Vec<Rational>) -> Result<Self> {
        if copies == 0 || coords.len() != copies * order {
            return Err(Error::validation("vector", format!("expected {} coordinates in at least one copy", copies * order)));
        }
        Ok(RationalVector { copies, order, coords })
    }

    /// `χ_g` in the given copy.
    pub fn basis(copies: usize, order: usize, copy: usize, g: usize) -> Self {
        let mut v = Self::zeros(copies, order);
        v.coords[copy * order + g] = Rational::one();
        v
    }

    /// `Σ_{h ∈ H} χ_h` in a single copy of `ρ`.
    pub fn subgroup_sum(order: usize, h: &Subgroup) -> Self {
        let mut v = Self::zeros(1, order);
        for g in h.members() {
            v.coords[g] = Rational::one();
        }
        v
    }

    pub fn copies(&self) -> usize {
        self.copies
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    /// `g'·χ_g = χ_{g'g}` in every copy.
    pub fn act(&self, group: &FiniteGroup, g: usize) -> Self {
        let mut out = Self::zeros(self.copies, self.order);
        for c in 0..self.copies {
            for x in 0..self.order {
                out.coords[c * self.order + group.mul(g, x)] = self.coords[c * self.order + x].clone();
            }
        }
        out
    }

    pub fn scale(&self, k: &Rational) -> Self {
        RationalVector { copies: self.copies, order: self.order, coords: self.coords.iter().map(|x| x * k).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.copies, self.order), (other.copies, other.order), "vectors live in different spaces");
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect();
        RationalVector { copies: self.copies, order: self.order, coords }
    }

    /// The pair `(self, other)` in the direct sum.
    pub fn concat(&self, other: &Self) -> Self {
        assert_eq!(self.order, other.order, "vectors over different groups");
        let mut coords = self.coords.clone();
        coords.extend(other.coords.iter().cloned());
        RationalVector { copies: self.copies + other.copies, order: self.order, coords }
    }

    /// Copies `from..to` as a vector on their own.
    pub fn slice(&self, from: usize, to: usize) -> Self {
        let coords = self.coords[from * self.order..to * self.order].to_vec();
        RationalVector { copies: to - from, order: self.order, coords }
    }
}

/// `{g : g·v = v}` by exhaustive exact comparison.
pub fn isotropy_of_vector(group: &FiniteGroup, v: &RationalVector) -> Subgroup {
    let mask = group.elements().filter(|&g| v.act(group, g) == *v).fold(0u64, |m, g| m | 1 << g);
    group.subgroup_from_mask(mask).expect("a stabilizer is a subgroup")
}

fn check_pair(group: &FiniteGroup, h: &Subgroup, k: &Subgroup) -> Result<()> {
    if h.is_proper_subgroup_of(k) {
        Ok(())
    } else {
        Err(Error::NotAStrictPair(group.subgroup_name(h), group.subgroup_name(k)))
    }
}

/// `γ(s) = s Σ_{h∈H} χ_h + (1 − s) Σ_{k∈K} χ_k`.
pub fn gamma(group: &FiniteGroup, h: &Subgroup, k: &Subgroup, s: &Rational) -> RationalVector {
    let a = RationalVector::subgroup_sum(group.order(), h).scale(s);
    let b = RationalVector::subgroup_sum(group.order(), k).scale(&(Rational::one() - s));
    a.add(&b)
}

fn check_samples(samples: &[Rational]) -> Result<()> {
    if !samples.iter().any(Zero::is_zero) {
        return Err(Error::validation("samples", "the sample list must contain 0"));
    }
    if let Some(bad) = samples.iter().find(|s| s.is_negative() || **s > Rational::one()) {
        return Err(Error::validation("samples", format!("{bad} lies outside [0, 1]")));
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaSample {
    pub s: String,
    pub isotropy: String,
    pub expected: String,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaReport {
    pub h: String,
    pub k: String,
    pub samples: Vec<GammaSample>,
    pub pass: bool,
}

/// Checks that `γ(0)` has isotropy exactly `K` and `γ(s)` exactly `H` for `s > 0`.
pub fn gamma_path(group: &FiniteGroup, h: &Subgroup, k: &Subgroup, samples: &[Rational]) -> Result<GammaReport> {
    check_pair(group, h, k)?;
    check_samples(samples)?;
    let rows: Vec<GammaSample> = samples
        .iter()
        .map(|s| {
            let iso = isotropy_of_vector(group, &gamma(group, h, k, s));
            let expected = if s.is_zero() { k } else { h };
            GammaSample {
                s: s.to_string(),
                isotropy: group.subgroup_name(&iso),
                expected: group.subgroup_name(expected),
                pass: iso == *expected,
            }
        })
        .collect();
    Ok(GammaReport { h: group.subgroup_name(h), k: group.subgroup_name(k), pass: rows.iter().all(|r| r.pass), samples: rows })
}

/// A family of paths `f(y)(s)` in `ρ^{⊕copies}` indexed by points `y` of the
/// unit sphere, with `f(y)(0)` fixed by exactly `K` and `f(y)(s)` by exactly
/// `H` for `s > 0`.
pub trait SphereFamily {
    fn copies(&self) -> usize;
    fn eval(&self, y: &[Rational], s: &Rational) -> RationalVector;
}

/// `f(y)(s) = γ(s)` for every `y`.
pub struct ConstantGamma<'a> {
    pub group: &'a FiniteGroup,
    pub h: Subgroup,
    pub k: Subgroup,
}

impl SphereFamily for ConstantGamma<'_> {
    fn copies(&self) -> usize {
        1
    }

    fn eval(&self, _y: &[Rational], s: &Rational) -> RationalVector {
        gamma(self.group, &self.h, &self.k, s)
    }
}

/// A point `radius · direction` of the unit disk, with `direction` a rational
/// unit vector so that the norm is exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiskSample {
    direction: Vec<Rational>,
    radius: Rational,
}

impl DiskSample {
    pub fn new(direction: Vec<Rational>, radius: Rational) -> Result<Self> {
        let norm2: Rational = direction.iter().map(|x| x * x).sum();
        if !norm2.is_one() {
            return Err(Error::validation("direction", "not a unit vector"));
        }
        if radius.is_negative() || radius > Rational::one() {
            return Err(Error::validation("radius", format!("{radius} lies outside [0, 1]")));
        }
        Ok(DiskSample { direction, radius })
    }

    /// `t_y = 1 − ‖y‖`.
    pub fn t(&self) -> Rational {
        Rational::one() - &self.radius
    }

    pub fn point(&self) -> Vec<Rational> {
        self.direction.iter().map(|x| x * &self.radius).collect()
    }
}

/// Rational points on the unit sphere `S^{n−1}`: the coordinate vectors,
/// their negatives, and Pythagorean points where the dimension allows.
pub fn rational_sphere_points(n: usize) -> Vec<Vec<Rational>> {
    let mut out = Vec::new();
    let embed = |entries: &[(usize, Rational)]| {
        let mut v = vec![Rational::zero(); n];
        for (i, x) in entries {
            v[*i] = x.clone();
        }
        v
    };
    for i in 0..n {
        out.push(embed(&[(i, Rational::one())]));
        out.push(embed(&[(i, -Rational::one())]));
    }
    if n >= 2 {
        out.push(embed(&[(0, rational(3, 5)), (1, rational(4, 5))]));
        out.push(embed(&[(0, rational(-4, 5)), (1, rational(3, 5))]));
    }
    if n >= 3 {
        out.push(embed(&[(0, rational(1, 3)), (1, rational(2, 3)), (2, rational(-2, 3))]));
    }
    out
}

/// The extension `f̃(y)(s) ∈ V × ρ` of a sphere family over the disk.
pub fn lift(group: &FiniteGroup, f: &dyn SphereFamily, h: &Subgroup, k: &Subgroup, y: &DiskSample, s: &Rational) -> RationalVector {
    let t = y.t();
    let half = rational(1, 2);
    let g = gamma(group, h, k, s);
    if t.is_one() {
        RationalVector::zeros(f.copies(), group.order()).concat(&g)
    } else if t <= half {
        f.eval(&y.direction, s).concat(&g.scale(&(rational(2, 1) * &t)))
    } else {
        f.eval(&y.direction, s).scale(&(rational(2, 1) - rational(2, 1) * &t)).concat(&g)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiftReport {
    pub h: String,
    pub k: String,
    pub evaluations: usize,
    pub seam_checks: usize,
    pub boundary_checks: usize,
    pub centre_checks: usize,
    /// Human-readable descriptions of every failed assertion.
    pub failures: Vec<String>,
    pub pass: bool,
}

/// Evaluates the extension on the grid `ys × ss` and checks: agreement of
/// the first two branches at `t_y = 1/2`, that the boundary `t_y = 0` gives
/// `(f(y)(s), 0)`, that the centre gives `(0, γ(s))`, and that the output has
/// isotropy exactly `K` at `s = 0` and exactly `H` for `s > 0`.
pub fn lifting_extension(
    group: &FiniteGroup,
    f: &dyn SphereFamily,
    h: &Subgroup,
    k: &Subgroup,
    ys: &[DiskSample],
    ss: &[Rational],
) -> Result<LiftReport> {
    check_pair(group, h, k)?;
    check_samples(ss)?;
    let name = |x: &Subgroup| group.subgroup_name(x);
    let half = rational(1, 2);
    let two = rational(2, 1);
    let mut report = LiftReport {
        h: name(h),
        k: name(k),
        evaluations: 0,
        seam_checks: 0,
        boundary_checks: 0,
        centre_checks: 0,
        failures: Vec::new(),
        pass: false,
    };
    for y in ys {
        for s in ss {
            let expected = if s.is_zero() { k } else { h };
            let fy = f.eval(&y.direction, s);
            let iso_f = isotropy_of_vector(group, &fy);
            if iso_f != *expected {
                return Err(Error::ContractViolation(format!(
                    "f at direction {:?}, s = {s} has isotropy {}, expected {}",
                    y.direction.iter().map(ToString::to_string).collect::<Vec<_>>(),
                    name(&iso_f),
                    name(expected)
                )));
            }
            let out = lift(group, f, h, k, y, s);
            report.evaluations += 1;
            let t = y.t();
            let at = format!("t = {t}, s = {s}");
            let g = gamma(group, h, k, s);
            if t == half {
                report.seam_checks += 1;
                let first = fy.concat(&g.scale(&(&two * &t)));
                let second = fy.scale(&(&two - &two * &t)).concat(&g);
                if first != second {
                    report.failures.push(format!("seam branches differ at {at}"));
                }
            }
            if t.is_zero() {
                report.boundary_checks += 1;
                if out != fy.concat(&RationalVector::zeros(1, group.order())) {
                    report.failures.push(format!("boundary value is not (f(y)(s), 0) at {at}"));
                }
            }
            if t.is_one() {
                report.centre_checks += 1;
                if out != RationalVector::zeros(f.copies(), group.order()).concat(&g) {
                    report.failures.push(format!("centre value is not (0, γ(s)) at {at}"));
                }
            }
            let iso = isotropy_of_vector(group, &out);
            if iso != *expected {
                report.failures.push(format!("isotropy {} instead of {} at {at}", name(&iso), name(expected)));
            }
        }
    }
    report.pass = report.failures.is_empty();
    Ok(report)
}

/// Disk samples at radii `1, 3/4, 1/2, 1/4, 0` along every rational sphere point of `S^{n−1}`.
pub fn standard_disk_grid(n: usize) -> Vec<DiskSample> {
    let radii = [rational(1, 1), rational(3, 4), rational(1, 2), rational(1, 4), rational(0, 1)];
    rational_sphere_points(n)
        .into_iter()
        .flat_map(|d| radii.iter().map(move |r| DiskSample::new(d.clone(), r.clone()).expect("unit direction")))
        .collect()
}

/// All strict pairs `H < K` of subgroups.
pub fn strict_pairs(group: &FiniteGroup) -> Vec<(Subgroup, Subgroup)> {
    let subs = group.subgroups();
    subs.iter().flat_map(|h| subs.iter().filter(|k| h.is_proper_subgroup_of(k)).map(move |k| (h.clone(), k.clone()))).collect()
}
