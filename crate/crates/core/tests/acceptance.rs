//! Acceptance criteria 1 to 10. Runs as a plain binary so that the PASS/FAIL
//! lines are always printed; exits non-zero if any criterion fails.

use std::collections::BTreeMap;
use std::sync::Arc;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use isvt::complexes::{linking_simplex, rep_compactification, rep_disk, rep_sphere, GSimplicialMap, Irrep, RepSummand, SimplicialComplex};
use isvt::conncalc::{bm_cube, bm_pushout, freudenthal_suite, measure_conn_fn, ConnFn};
use isvt::groups::{enumerate_chains, FiniteGroup, SubgroupChain};
use isvt::homology::{
    homology_of, pushout_cone_check, smith_normal_form, Conn, HomologyResult, IntegerMatrix, SimplicialSquare, SparseMatrix,
};
use isvt::strata::{induced_link_map, link_model, link_suspension, Mode};
use isvt::universe::{
    gamma_path, isotropy_of_vector, lifting_extension, rational, standard_disk_grid, strict_pairs, ConstantGamma, RationalVector,
};

type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check, u64);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn c(n: usize) -> Arc<FiniteGroup> {
    Arc::new(FiniteGroup::cyclic(n).unwrap())
}

fn test_groups() -> Vec<Arc<FiniteGroup>> {
    vec![c(2), c(3), c(4), c(6), Arc::new(FiniteGroup::symmetric(3).unwrap())]
}

fn sign() -> Vec<RepSummand> {
    vec![RepSummand::new(Irrep::Sign, 1)]
}

fn chain(g: &FiniteGroup, text: &str) -> SubgroupChain {
    g.parse_chain(text).unwrap()
}

/// Reduced betti numbers, or an empty list for the empty complex.
fn reduced(h: &HomologyResult) -> Vec<usize> {
    h.reduced_betti().unwrap_or_default()
}

/// Betti numbers with trailing zeros dropped.
fn trim(mut v: Vec<usize>) -> Vec<usize> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn criterion_1() -> Check {
    let g = c(2);
    let d = rep_disk(&g, &sign()).unwrap();
    for (text, comps) in [("e", 2), ("C2", 1), ("e<C2", 2)] {
        let link = link_model(&d, &chain(&g, text), Mode::Isovariant).map_err(|e| e.to_string())?;
        let h = homology_of(&link.complex);
        ensure(link.complex.component_count() == comps, || format!("{text}: {} components", link.complex.component_count()))?;
        ensure(trim(reduced(&h)).len() <= 1 && !h.has_torsion() && h.betti().len() <= 1, || format!("{text}: homology {h:?}"))?;
    }
    Ok(())
}

fn criterion_2() -> Check {
    let g = c(2);
    let s = rep_compactification(&g, &sign()).unwrap();
    for (text, comps, top) in [("e", 2, 1), ("C2", 2, 1), ("e<C2", 4, 3)] {
        let link = link_model(&s, &chain(&g, text), Mode::Isovariant).map_err(|e| e.to_string())?;
        let h = homology_of(&link.complex);
        ensure(link.complex.component_count() == comps && h.betti().len() == 1, || format!("{text}: {h:?}"))?;
        for n in 1..=2 {
            let susp = homology_of(&link_suspension(&link, n).complex);
            let mut expected = vec![0; n + 1];
            expected[n] = top;
            ensure(trim(reduced(&susp)) == expected && !susp.has_torsion(), || format!("{text}, {n}-fold: {susp:?}"))?;
        }
    }
    Ok(())
}

fn criterion_3() -> Check {
    let g = c(3);
    let rho = vec![RepSummand::new(Irrep::Trivial, 1), RepSummand::new(Irrep::Rotation(1), 1)];
    let s = rep_compactification(&g, &rho).unwrap();
    for (text, betti) in [("C3", vec![1, 1]), ("e", vec![1, 1]), ("e<C3", vec![1, 2, 1])] {
        let link = link_model(&s, &chain(&g, text), Mode::Isovariant).map_err(|e| e.to_string())?;
        let h = homology_of(&link.complex);
        ensure(h.betti() == betti.as_slice() && !h.has_torsion(), || format!("{text}: {h:?}"))?;
        if text == "e<C3" {
            let susp = homology_of(&link_suspension(&link, 1).complex);
            ensure(reduced(&susp) == [0, 0, 2, 1], || format!("suspension: {susp:?}"))?;
        }
    }
    Ok(())
}

fn inclusion_conn(rep: &[RepSummand]) -> Result<ConnFn, String> {
    let g = c(2);
    let s = Arc::new(rep_sphere(&g, rep).map_err(|e| e.to_string())?);
    let d = Arc::new(rep_disk(&g, rep).map_err(|e| e.to_string())?);
    let n = s.complex().vertex_count();
    let f = GSimplicialMap::new(s, d, (0..n).collect()).map_err(|e| e.to_string())?;
    measure_conn_fn(&f, Mode::Isovariant, 1).map_err(|e| e.to_string())
}

fn criterion_4() -> Check {
    let g = c(2);
    let tuple = |f: &ConnFn| f.table(&g).into_iter().map(|(_, v)| v).collect::<Vec<_>>();
    let sigma = inclusion_conn(&sign())?;
    ensure(tuple(&sigma) == [Conn::PosInf, Conn::Finite(-1), Conn::Finite(-1)], || format!("sigma: {:?}", sigma.table(&g)))?;
    let rho = inclusion_conn(&[RepSummand::new(Irrep::Trivial, 1), RepSummand::new(Irrep::Sign, 1)])?;
    ensure(tuple(&rho) == [Conn::PosInf, Conn::Finite(0), Conn::Finite(0)], || format!("rho: {:?}", rho.table(&g)))?;
    let bound = bm_pushout(&rho, &rho).map_err(|e| e.to_string())?;
    ensure(tuple(&bound) == [Conn::PosInf, Conn::Finite(-1), Conn::Finite(-1)], || format!("bound: {:?}", bound.table(&g)))
}

fn criterion_5() -> Check {
    for g in test_groups() {
        for ch in enumerate_chains(&g, 2) {
            let name = g.chain_name(&ch);
            let l = linking_simplex(&g, &ch).map_err(|e| format!("{name}: {e}"))?;
            let n = ch.length();
            let orbits = l.orbit_space().map_err(|e| format!("{name}: {e}"))?.complex;
            let top: Vec<usize> = (0..=n).collect();
            ensure(orbits.vertex_count() == n + 1 && orbits.contains(&top), || format!("{name}: orbit space {:?}", orbits.facets()))?;
            if n == 0 {
                // a discrete transitive G-set whose point stabilizer is H0
                let h0 = ch.bottom();
                let index = g.order() / h0.order();
                let k = l.complex();
                ensure(k.vertex_count() == index && k.dim() == 0, || format!("{name}: {:?}", k.f_vector()))?;
                let mut orbit: Vec<usize> = g.elements().map(|x| l.action(x)[0]).collect();
                orbit.sort_unstable();
                orbit.dedup();
                let stab: Vec<usize> = g.elements().filter(|&x| l.action(x)[0] == 0).collect();
                let target = h0.member_list();
                let conj_ok = g.elements().any(|y| {
                    let mut conj: Vec<usize> = target.iter().map(|&x| g.mul(g.mul(y, x), g.inv(y))).collect();
                    conj.sort_unstable();
                    conj == stab
                });
                ensure(orbit.len() == index && conj_ok, || format!("{name}: not G/H0"))?;
            }
        }
    }
    Ok(())
}

fn samples() -> Vec<BigRational> {
    vec![rational(0, 1), rational(1, 10), rational(1, 2), rational(9, 10), rational(1, 1)]
}

fn criterion_6() -> Check {
    for g in test_groups() {
        for (h, k) in strict_pairs(&g) {
            let r = gamma_path(&g, &h, &k, &samples()).map_err(|e| e.to_string())?;
            ensure(r.pass, || format!("gamma {}<{} fails: {:?}", r.h, r.k, r.samples))?;
        }
        for h in g.subgroups() {
            let iso = isotropy_of_vector(&g, &RationalVector::subgroup_sum(g.order(), h));
            ensure(iso == *h, || format!("sum over {} has isotropy {}", g.subgroup_name(h), g.subgroup_name(&iso)))?;
        }
    }
    Ok(())
}

fn criterion_7() -> Check {
    let grid = standard_disk_grid(2);
    for g in test_groups() {
        for (h, k) in strict_pairs(&g) {
            let f = ConstantGamma { group: &g, h: h.clone(), k: k.clone() };
            let r = lifting_extension(&g, &f, &h, &k, &grid, &samples()).map_err(|e| e.to_string())?;
            ensure(r.pass && r.seam_checks > 0 && r.boundary_checks > 0 && r.centre_checks > 0, || {
                format!("{}<{}: {:?}", r.h, r.k, r.failures)
            })?;
        }
    }
    Ok(())
}

/// Rank by Gaussian elimination over the rationals.
fn rational_rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows.iter().map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect()).collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else { continue };
        m.swap(rank, p);
        for r in 0..m.len() {
            if r != rank && !m[r][col].is_zero() {
                let factor = &m[r][col] / &m[rank][col];
                for j in col..cols {
                    let sub = &factor * &m[rank][j];
                    m[r][j] -= sub;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Determinant by cofactor expansion.
fn det(m: &[Vec<BigInt>]) -> BigInt {
    match m.len() {
        0 => BigInt::one(),
        1 => m[0][0].clone(),
        n => (0..n)
            .map(|j| {
                let minor: Vec<Vec<BigInt>> =
                    m[1..].iter().map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, x)| x.clone()).collect()).collect();
                let term = &m[0][j] * det(&minor);
                if j % 2 == 0 {
                    term
                } else {
                    -term
                }
            })
            .sum(),
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n).filter(|m| m.count_ones() as usize == k).map(|m| (0..n).filter(|i| m & (1 << i) != 0).collect()).collect()
}

/// Invariant factors as ratios of successive gcds of k×k minors.
fn minor_divisors(rows: &[Vec<i64>]) -> Vec<BigInt> {
    let (r, c) = (rows.len(), rows[0].len());
    let mut out = Vec::new();
    let mut prev = BigInt::one();
    for k in 1..=r.min(c) {
        let mut g = BigInt::zero();
        for rs in subsets(r, k) {
            for cs in subsets(c, k) {
                let minor: Vec<Vec<BigInt>> = rs.iter().map(|&i| cs.iter().map(|&j| BigInt::from(rows[i][j])).collect()).collect();
                g = g.gcd(&det(&minor));
            }
        }
        if g.is_zero() {
            break;
        }
        out.push(&g / &prev);
        prev = g;
    }
    out
}

fn random_matrix(rng: &mut ChaCha8Rng) -> Vec<Vec<i64>> {
    let r = rng.gen_range(0..=6);
    let a: Vec<Vec<i64>> = (0..6).map(|_| (0..r).map(|_| rng.gen_range(-3..=3)).collect()).collect();
    let b: Vec<Vec<i64>> = (0..r).map(|_| (0..6).map(|_| rng.gen_range(-3..=3)).collect()).collect();
    let scale: Vec<i64> = (0..6).map(|_| [1, 1, 2, 3, 4][rng.gen_range(0..5)]).collect();
    (0..6).map(|i| (0..6).map(|j| scale[i] * (0..r).map(|t| a[i][t] * b[t][j]).sum::<i64>()).collect()).collect()
}

fn random_complex(rng: &mut ChaCha8Rng, vertices: usize) -> SimplicialComplex {
    let facets: Vec<Vec<usize>> = (0..rng.gen_range(2..=6))
        .map(|_| {
            let size = rng.gen_range(1..=4);
            let mut f: Vec<usize> = (0..vertices).collect();
            for i in 0..size {
                let j = rng.gen_range(i..vertices);
                f.swap(i, j);
            }
            f.truncate(size);
            f
        })
        .collect();
    SimplicialComplex::from_facets(vertices, facets).unwrap()
}

fn criterion_8() -> Check {
    for n in 1..=5 {
        let h = homology_of(&SimplicialComplex::simplex_boundary(n));
        let mut expected = vec![0; n];
        expected[n - 1] += 1;
        expected[0] += 1;
        ensure(h.betti() == expected.as_slice() && !h.has_torsion(), || format!("boundary of the {n}-simplex: {h:?}"))?;
    }
    let rp2 = SimplicialComplex::from_facets(
        6,
        [[0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 4, 5], [0, 1, 5], [1, 2, 4], [2, 3, 5], [1, 3, 4], [1, 3, 5], [2, 4, 5]],
    )
    .unwrap();
    let h = homology_of(&rp2);
    ensure(h.betti() == [1, 0] && h.torsion(1) == [BigInt::from(2)] && h.torsion(0).is_empty(), || format!("RP2: {h:?}"))?;

    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for t in 0..50 {
        let rows = random_matrix(&mut rng);
        let dense = smith_normal_form(&IntegerMatrix::from_rows(&rows));
        let triplets = rows.iter().enumerate().flat_map(|(i, r)| r.iter().enumerate().map(move |(j, &x)| (i, j, x)));
        let sparse = SparseMatrix::from_triplets(6, 6, triplets).smith();
        let rank = rational_rank(&rows);
        let divisors = minor_divisors(&rows);
        ensure(dense.rank == rank && sparse.rank == rank, || format!("matrix {t}: rank {} / {} vs {rank}", dense.rank, sparse.rank))?;
        let abs = |v: &[BigInt]| v.iter().map(|x| x.abs()).collect::<Vec<_>>();
        ensure(abs(&dense.invariant_factors) == divisors && abs(&sparse.invariant_factors) == divisors, || {
            format!("matrix {t}: {:?} / {:?} vs {divisors:?}", dense.invariant_factors, sparse.invariant_factors)
        })?;
    }
    for t in 0..20 {
        let k = random_complex(&mut rng, 7);
        let (a, b) = (homology_of(&k), homology_of(&k.barycentric_subdivision()));
        ensure(a == b, || format!("complex {t} {:?}: {a:?} vs {b:?}", k.facets()))?;
    }
    Ok(())
}

/// `W` with subcomplexes `X`, `Y` covering it and `Z = X ∩ Y`.
fn union_square(rng: &mut ChaCha8Rng) -> Check {
    let w = random_complex(rng, 7);
    let facets = w.facets();
    let in_x: Vec<bool> = facets.iter().map(|_| rng.gen_bool(0.5)).collect();
    let in_y: Vec<bool> = in_x.iter().map(|&x| !x || rng.gen_bool(0.3)).collect();
    let below = |mask: &[bool], s: &Vec<usize>| facets.iter().zip(mask).any(|(f, &m)| m && s.iter().all(|v| f.contains(v)));
    let (x, xv) = w.subcomplex(|s| below(&in_x, s));
    let (y, yv) = w.subcomplex(|s| below(&in_y, s));
    let (z, zv) = w.subcomplex(|s| below(&in_x, s) && below(&in_y, s));
    let into = |from: &[usize], to: &[usize]| from.iter().map(|v| to.iter().position(|u| u == v).unwrap()).collect::<Vec<_>>();
    let (u, v) = (into(&zv, &xv), into(&zv, &yv));
    let sq = SimplicialSquare { z: &z, x: &x, y: &y, w: &w, u: &u, v: &v, i: &xv, j: &yv };
    let ok = pushout_cone_check(&sq).map_err(|e| e.to_string())?;
    ensure(ok, || format!("union square over {facets:?} rejected"))
}

fn criterion_9() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..10 {
        union_square(&mut rng)?;
    }
    // the e-link of the square S(σ) ⇉ D(σ) → S^σ
    let g = c(2);
    let s = Arc::new(rep_sphere(&g, &sign()).unwrap());
    let d = Arc::new(s.cone());
    let top = Arc::new(s.suspension());
    let err = |e: isvt::Error| e.to_string();
    let incl = GSimplicialMap::new(s.clone(), d.clone(), vec![0, 1]).map_err(err)?;
    let north = GSimplicialMap::new(d.clone(), top.clone(), vec![0, 1, 2]).map_err(err)?;
    let south = GSimplicialMap::new(d.clone(), top.clone(), vec![0, 1, 3]).map_err(err)?;
    let e = chain(&g, "e");
    let (lu, li, lj) = (
        induced_link_map(&incl, &e, Mode::Isovariant).map_err(err)?,
        induced_link_map(&north, &e, Mode::Isovariant).map_err(err)?,
        induced_link_map(&south, &e, Mode::Isovariant).map_err(err)?,
    );
    let sq = SimplicialSquare {
        z: &lu.source.complex,
        x: &lu.target.complex,
        y: &lu.target.complex,
        w: &li.target.complex,
        u: &lu.vertex_map,
        v: &lu.vertex_map,
        i: &li.vertex_map,
        j: &lj.vertex_map,
    };
    ensure(pushout_cone_check(&sq).map_err(err)?, || "e-link square rejected".into())?;
    // a point glued to a point is not two points
    let (pt, s0) = (SimplicialComplex::point(), SimplicialComplex::discrete(2));
    let sq = SimplicialSquare { z: &pt, x: &pt, y: &pt, w: &s0, u: &[0], v: &[0], i: &[0], j: &[0] };
    ensure(!pushout_cone_check(&sq).map_err(err)?, || "point-to-S0 square accepted".into())
}

fn random_conn(rng: &mut ChaCha8Rng) -> Conn {
    match rng.gen_range(0..10) {
        0 => Conn::PosInf,
        1 => Conn::NegInf,
        _ => Conn::Finite(rng.gen_range(-2..=6)),
    }
}

fn criterion_10() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let groups = [c(4), Arc::new(FiniteGroup::symmetric(3).unwrap())];
    let err = |e: isvt::Error| e.to_string();
    for t in 0..100 {
        let g = &groups[t % 2];
        let keys = ConnFn::keys(g, Mode::Isovariant, 2);
        let random = |rng: &mut ChaCha8Rng| {
            ConnFn::new(Mode::Isovariant, keys.iter().map(|k| (k.clone(), random_conn(rng))).collect::<BTreeMap<_, _>>())
        };
        let (a, b) = (random(&mut rng), random(&mut rng));
        let pushout = bm_pushout(&a, &b).map_err(err)?;
        ensure(bm_cube(2, &[a.clone(), b.clone()]).map_err(err)? == pushout, || format!("case {t}: cube and pushout differ"))?;
        let fr = freudenthal_suite(&a).map_err(err)?;
        ensure(fr.freudenthal_bound == bm_pushout(&fr.universe_bound, &fr.universe_bound).map_err(err)?, || {
            format!("case {t}: suspension bound")
        })?;
        // raise some values of a
        let bigger = ConnFn::new(
            Mode::Isovariant,
            a.iter()
                .map(|(k, v)| {
                    let up = match (v, rng.gen_range(0..4)) {
                        (_, 0) => Conn::PosInf,
                        (Conn::Finite(x), s) => Conn::Finite(x + s as i64),
                        (v, _) => v,
                    };
                    (k.clone(), up)
                })
                .collect(),
        );
        ensure(a.le(&bigger), || format!("case {t}: raised function is not larger"))?;
        ensure(pushout.le(&bm_pushout(&bigger, &b).map_err(err)?), || format!("case {t}: pushout bound not monotone"))?;
        let cube3 = bm_cube(3, &[a.clone(), b.clone(), b.clone()]).map_err(err)?;
        ensure(cube3.le(&bm_cube(3, &[bigger.clone(), b.clone(), b.clone()]).map_err(err)?), || {
            format!("case {t}: cube bound not monotone")
        })?;
        for (k, v) in a.iter() {
            if v == Conn::PosInf {
                ensure(pushout.get(k) == Some(Conn::PosInf) && cube3.get(k) == Some(Conn::PosInf), || {
                    format!("case {t}: +inf not absorbing")
                })?;
            }
        }
    }
    Ok(())
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("link table of D(sigma) over C2", criterion_1, 5),
        ("link table of S^sigma over C2 and its suspensions", criterion_2, 5),
        ("link table of S^rho over C3 and its suspension", criterion_3, 30),
        ("connectivity tuples of S(V) -> D(V) and the pushout bound", criterion_4, 10),
        ("orbit spaces and bottom levels of linking simplices", criterion_5, 10),
        ("gamma paths and subgroup sums", criterion_6, 2),
        ("lifting homotopy on the sample grid", criterion_7, 2),
        ("homology engine against independent oracles", criterion_8, 10),
        ("cocartesian checker", criterion_9, 5),
        ("connectivity calculus properties", criterion_10, 1),
    ];
    let mut failed = 0;
    for (i, (name, run, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        let result = result.and_then(|()| {
            ensure(elapsed <= Duration::from_secs(*limit), || format!("took {:.2}s, limit {limit}s", elapsed.as_secs_f64()))
        });
        match result {
            Ok(()) => println!("criterion {:>2}: PASS ({:.3}s) {name}", i + 1, elapsed.as_secs_f64()),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2}: FAIL ({:.3}s) {name}: {why}", i + 1, elapsed.as_secs_f64());
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
