//! Finite groups given by multiplication tables, their subgroups, and
//! strictly increasing subgroup chains up to simultaneous conjugation.
//!
//! Elements are the integers `0..order` with `0` the identity. Subgroups are
//! stored as bitmasks, which caps the supported order at 64; everything
//! downstream is exhaustive, so this is not a practical restriction.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const MAX_ORDER: usize = 64;

/// How a group is specified in scene files and on the command line.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GroupSpec {
    Cyclic(usize),
    /// Dihedral group of the regular `n`-gon, of order `2n`.
    Dihedral(usize),
    /// Symmetric group on `n ≤ 4` letters.
    Symmetric(usize),
    /// Explicit multiplication table; row `a`, column `b` holds `a·b`.
    Table(Vec<Vec<usize>>),
}

#[derive(Debug, Clone)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    inverse: Vec<usize>,
    subgroups: OnceLock<Vec<Subgroup>>,
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.table == other.table
    }
}

impl Eq for FiniteGroup {}

pub fn make_group(spec: &GroupSpec) -> Result<FiniteGroup> {
    match spec {
        GroupSpec::Cyclic(n) => FiniteGroup::cyclic(*n),
        GroupSpec::Dihedral(n) => FiniteGroup::dihedral(*n),
        GroupSpec::Symmetric(n) => FiniteGroup::symmetric(*n),
        GroupSpec::Table(rows) => FiniteGroup::from_table(rows.clone()),
    }
}

impl FiniteGroup {
    pub fn cyclic(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::AxiomViolation("cyclic group needs n ≥ 1".into()));
        }
        let rows = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Self::from_table(rows)
    }

    /// Elements `0..n` are the rotations `r^i`, elements `n..2n` are `s·r^i`.
    pub fn dihedral(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::AxiomViolation("dihedral group needs n ≥ 1".into()));
        }
        // (s^a r^i)(s^b r^j) = s^(a+b) r^((-1)^b i + j)
        let decode = |x: usize| (x / n, x % n);
        let encode = |a: usize, i: usize| a * n + i;
        let rows = (0..2 * n)
            .map(|x| {
                (0..2 * n)
                    .map(|y| {
                        let (a, i) = decode(x);
                        let (b, j) = decode(y);
                        let i = if b == 1 { (n - i) % n } else { i };
                        encode((a + b) % 2, (i + j) % n)
                    })
                    .collect()
            })
            .collect();
        Self::from_table(rows)
    }

    /// Permutations of `0..n` in lexicographic order of their image lists, so
    /// the identity is element 0. The product `a·b` is the composition
    /// "apply `b`, then `a`".
    pub fn symmetric(n: usize) -> Result<Self> {
        if n == 0 || n > 4 {
            return Err(Error::AxiomViolation(format!("symmetric group supported for 1 ≤ n ≤ 4, got {n}")));
        }
        let perms = permutations(n);
        let index = |p: &[usize]| perms.iter().position(|q| q.as_slice() == p).expect("closed");
        let rows = perms
            .iter()
            .map(|a| {
                perms
                    .iter()
                    .map(|b| {
                        let composed: Vec<usize> = (0..n).map(|k| a[b[k]]).collect();
                        index(&composed)
                    })
                    .collect()
            })
            .collect();
        Self::from_table(rows)
    }

    pub fn from_table(rows: Vec<Vec<usize>>) -> Result<Self> {
        let order = rows.len();
        if order == 0 {
            return Err(Error::AxiomViolation("empty multiplication table".into()));
        }
        if order > MAX_ORDER {
            return Err(Error::GroupTooLarge(order));
        }
        for (a, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(Error::AxiomViolation(format!("row {a} has {} entries, expected {order}", row.len())));
            }
            if let Some(&x) = row.iter().find(|&&x| x >= order) {
                return Err(Error::AxiomViolation(format!("row {a} contains out-of-range element {x}")));
            }
        }
        let table: Vec<usize> = rows.into_iter().flatten().collect();
        let mul = |a: usize, b: usize| table[a * order + b];

        for a in 0..order {
            if mul(0, a) != a || mul(a, 0) != a {
                return Err(Error::AxiomViolation(format!("0 is not a two-sided identity for element {a}")));
            }
        }
        let mut inverse = vec![0; order];
        for a in 0..order {
            match (0..order).find(|&b| mul(a, b) == 0 && mul(b, a) == 0) {
                Some(b) => inverse[a] = b,
                None => return Err(Error::AxiomViolation(format!("element {a} has no two-sided inverse"))),
            }
        }
        for a in 0..order {
            for b in 0..order {
                let ab = mul(a, b);
                for c in 0..order {
                    if mul(ab, c) != mul(a, mul(b, c)) {
                        return Err(Error::AxiomViolation(format!("associativity fails on ({a}, {b}, {c})")));
                    }
                }
            }
        }
        Ok(FiniteGroup { order, table, inverse, subgroups: OnceLock::new() })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// `g x g⁻¹`
    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        self.elements().all(|a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Smallest element generating the whole group, if the group is cyclic.
    pub fn cyclic_generator(&self) -> Option<usize> {
        self.elements().find(|&g| self.element_order(g) == self.order)
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup { mask: 1 }
    }

    pub fn whole_group(&self) -> Subgroup {
        Subgroup { mask: full_mask(self.order) }
    }

    /// Subgroup generated by a set of elements.
    pub fn generated(&self, generators: impl IntoIterator<Item = usize>) -> Subgroup {
        let mut mask = 1u64;
        let mut frontier: Vec<usize> = vec![0];
        let gens: Vec<usize> = generators.into_iter().collect();
        while let Some(x) = frontier.pop() {
            for &g in &gens {
                let y = self.mul(x, g);
                if mask & (1 << y) == 0 {
                    mask |= 1 << y;
                    frontier.push(y);
                }
            }
        }
        Subgroup { mask }
    }

    /// Checks a bitmask for the subgroup axioms.
    pub fn subgroup_from_mask(&self, mask: u64) -> Option<Subgroup> {
        if mask & 1 == 0 || mask & !full_mask(self.order) != 0 {
            return None;
        }
        let members: Vec<usize> = bits(mask).collect();
        let closed = members.iter().all(|&a| mask & (1 << self.inv(a)) != 0 && members.iter().all(|&b| mask & (1 << self.mul(a, b)) != 0));
        closed.then_some(Subgroup { mask })
    }

    pub fn conjugate_subgroup(&self, g: usize, h: &Subgroup) -> Subgroup {
        let mask = h.members().fold(0u64, |m, x| m | 1 << self.conjugate(g, x));
        Subgroup { mask }
    }

    pub fn normalizer(&self, h: &Subgroup) -> Subgroup {
        let mask = self.elements().filter(|&g| self.conjugate_subgroup(g, h) == *h).fold(0u64, |m, g| m | 1 << g);
        Subgroup { mask }
    }

    /// Left coset `gH` as a bitmask.
    pub fn left_coset(&self, g: usize, h: &Subgroup) -> u64 {
        h.members().fold(0u64, |m, x| m | 1 << self.mul(g, x))
    }

    /// Every subgroup exactly once, sorted by order and then by member list.
    ///
    /// Built as the closure of the cyclic subgroups under pairwise joins, which
    /// reaches every subgroup of a finite group.
    pub fn subgroups(&self) -> &[Subgroup] {
        self.subgroups.get_or_init(|| {
            let mut found: BTreeSet<u64> = self.elements().map(|g| self.generated([g]).mask).collect();
            let mut frontier: Vec<u64> = found.iter().copied().collect();
            while !frontier.is_empty() {
                let current: Vec<u64> = found.iter().copied().collect();
                let mut next = Vec::new();
                for &a in &frontier {
                    for &b in &current {
                        if a | b == a || a | b == b {
                            continue;
                        }
                        let joined = self.generated(bits(a | b)).mask;
                        if found.insert(joined) {
                            next.push(joined);
                        }
                    }
                }
                frontier = next;
            }
            let mut all: Vec<Subgroup> = found.into_iter().map(|mask| Subgroup { mask }).collect();
            all.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.cmp(b)));
            all
        })
    }

    /// Human-readable subgroup name: `e`, `C<k>` for a cyclic subgroup that
    /// is the only subgroup of its order, `G` for the whole group, otherwise
    /// a generator list such as `[1,3]`.
    pub fn subgroup_name(&self, h: &Subgroup) -> String {
        if h.order() == 1 {
            return "e".into();
        }
        let unique_order = self.subgroups().iter().filter(|k| k.order() == h.order()).count() == 1;
        let cyclic = h.members().any(|g| self.element_order(g) == h.order());
        if unique_order && cyclic {
            return format!("C{}", h.order());
        }
        if *h == self.whole_group() {
            return "G".into();
        }
        let gens = self.greedy_generators(h);
        format!("[{}]", gens.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(","))
    }

    /// Generators picked greedily in increasing element order.
    pub fn greedy_generators(&self, h: &Subgroup) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = self.trivial_subgroup();
        for g in h.members() {
            if !span.contains(g) {
                gens.push(g);
                span = self.generated(gens.iter().copied());
            }
        }
        gens
    }

    /// Inverse of [`subgroup_name`](Self::subgroup_name); also accepts any
    /// generator list.
    pub fn parse_subgroup(&self, name: &str) -> Result<Subgroup> {
        let name = name.trim();
        if name == "e" || name == "1" {
            return Ok(self.trivial_subgroup());
        }
        if name == "G" {
            return Ok(self.whole_group());
        }
        if let Some(inner) = name.strip_prefix('[').and_then(|s| s.strip_suffix(']')) {
            let mut gens = Vec::new();
            for part in inner.split(',').map(str::trim).filter(|p| !p.is_empty()) {
                let g: usize = part.parse().map_err(|_| Error::UnknownSubgroup(name.into()))?;
                if g >= self.order {
                    return Err(Error::UnknownSubgroup(name.into()));
                }
                gens.push(g);
            }
            return Ok(self.generated(gens));
        }
        if let Some(k) = name.strip_prefix('C').and_then(|s| s.parse::<usize>().ok()) {
            let candidates: Vec<&Subgroup> =
                self.subgroups().iter().filter(|h| h.order() == k && h.members().any(|g| self.element_order(g) == k)).collect();
            if candidates.len() == 1 && self.subgroups().iter().filter(|h| h.order() == k).count() == 1 {
                return Ok(candidates[0].clone());
            }
        }
        Err(Error::UnknownSubgroup(name.into()))
    }

    /// Parses `"H0<H1<…"`.
    pub fn parse_chain(&self, text: &str) -> Result<SubgroupChain> {
        let subgroups = text.split('<').map(|part| self.parse_subgroup(part)).collect::<Result<Vec<_>>>()?;
        SubgroupChain::new(subgroups)
    }

    pub fn chain_name(&self, chain: &SubgroupChain) -> String {
        chain.subgroups().iter().map(|h| self.subgroup_name(h)).collect::<Vec<_>>().join("<")
    }

    pub fn conjugate_chain(&self, g: usize, chain: &SubgroupChain) -> SubgroupChain {
        SubgroupChain { subgroups: chain.subgroups.iter().map(|h| self.conjugate_subgroup(g, h)).collect() }
    }
}

pub fn enumerate_subgroups(group: &FiniteGroup) -> Vec<Subgroup> {
    group.subgroups().to_vec()
}

/// All strictly increasing chains `H_0 < … < H_n` with `n ≤ max_length`.
pub fn enumerate_chains(group: &FiniteGroup, max_length: usize) -> Vec<SubgroupChain> {
    fn extend(subs: &[Subgroup], current: &mut Vec<Subgroup>, max_length: usize, out: &mut Vec<SubgroupChain>) {
        out.push(SubgroupChain { subgroups: current.clone() });
        if current.len() > max_length {
            return;
        }
        let top = current.last().expect("nonempty").clone();
        for k in subs {
            if top.is_proper_subgroup_of(k) {
                current.push(k.clone());
                extend(subs, current, max_length, out);
                current.pop();
            }
        }
    }
    let subs = group.subgroups();
    let mut out = Vec::new();
    for h in subs {
        let mut current = vec![h.clone()];
        extend(subs, &mut current, max_length, &mut out);
    }
    out
}

/// Canonical representative: the lexicographically smallest chain among all
/// simultaneous conjugates.
pub fn chain_class(group: &FiniteGroup, chain: &SubgroupChain) -> ChainClass {
    let representative = group.elements().map(|g| group.conjugate_chain(g, chain)).min().expect("group is nonempty");
    ChainClass { representative }
}

/// Distinct chain classes of length at most `max_length`, in canonical order.
pub fn chain_classes(group: &FiniteGroup, max_length: usize) -> Vec<ChainClass> {
    let set: BTreeSet<ChainClass> = enumerate_chains(group, max_length).iter().map(|c| chain_class(group, c)).collect();
    set.into_iter().collect()
}

/// Conjugacy classes of subgroups, represented the same way as length-0 chains.
pub fn subgroup_classes(group: &FiniteGroup) -> Vec<ChainClass> {
    chain_classes(group, 0)
}

fn full_mask(order: usize) -> u64 {
    if order == 64 {
        u64::MAX
    } else {
        (1u64 << order) - 1
    }
}

pub(crate) fn bits(mask: u64) -> impl Iterator<Item = usize> {
    (0..64).filter(move |i| mask & (1 << i) != 0)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, n: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for k in 0..n {
            if !prefix.contains(&k) {
                prefix.push(k);
                rec(prefix, n, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), n, &mut out);
    out
}

/// A subgroup, stored as the bitmask of its members.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subgroup {
    mask: u64,
}

impl Subgroup {
    /// Unchecked; use [`FiniteGroup::subgroup_from_mask`] for untrusted input.
    pub(crate) fn from_mask_unchecked(mask: u64) -> Self {
        Subgroup { mask }
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn members(&self) -> impl Iterator<Item = usize> + '_ {
        bits(self.mask)
    }

    pub fn member_list(&self) -> Vec<usize> {
        self.members().collect()
    }

    pub fn order(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn contains(&self, g: usize) -> bool {
        g < 64 && self.mask & (1 << g) != 0
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.mask & !other.mask == 0
    }

    pub fn is_proper_subgroup_of(&self, other: &Subgroup) -> bool {
        self.is_subgroup_of(other) && self.mask != other.mask
    }

    pub fn intersect(&self, other: &Subgroup) -> Subgroup {
        Subgroup { mask: self.mask & other.mask }
    }
}

impl Ord for Subgroup {
    /// Lexicographic on sorted member lists.
    fn cmp(&self, other: &Self) -> Ordering {
        self.members().cmp(other.members())
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubgroupChain {
    subgroups: Vec<Subgroup>,
}

impl SubgroupChain {
    pub fn new(subgroups: Vec<Subgroup>) -> Result<Self> {
        if subgroups.is_empty() {
            return Err(Error::InvalidChain("a chain needs at least one subgroup".into()));
        }
        for (i, pair) in subgroups.windows(2).enumerate() {
            if !pair[0].is_proper_subgroup_of(&pair[1]) {
                return Err(Error::InvalidChain(format!(
                    "H_{i} = {:?} is not strictly contained in H_{} = {:?}",
                    pair[0].member_list(),
                    i + 1,
                    pair[1].member_list()
                )));
            }
        }
        Ok(SubgroupChain { subgroups })
    }

    pub fn single(h: Subgroup) -> Self {
        SubgroupChain { subgroups: vec![h] }
    }

    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    /// Number of strict inclusions, i.e. `n` for `H_0 < … < H_n`.
    pub fn length(&self) -> usize {
        self.subgroups.len() - 1
    }

    pub fn bottom(&self) -> &Subgroup {
        &self.subgroups[0]
    }

    pub fn top(&self) -> &Subgroup {
        self.subgroups.last().expect("nonempty")
    }
}

/// A chain up to simultaneous conjugation, keyed by its canonical representative.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ChainClass {
    representative: SubgroupChain,
}

impl ChainClass {
    pub fn representative(&self) -> &SubgroupChain {
        &self.representative
    }

    pub fn name(&self, group: &FiniteGroup) -> String {
        group.chain_name(&self.representative)
    }
}

impl Ord for ChainClass {
    /// Shorter chains first, then by the canonical representative.
    fn cmp(&self, other: &Self) -> Ordering {
        self.representative.length().cmp(&other.representative.length()).then_with(|| self.representative.cmp(&other.representative))
    }
}

impl PartialOrd for ChainClass {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SubgroupChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.subgroups.iter().map(|h| format!("{:?}", h.member_list())).collect();
        write!(f, "{}", parts.join("<"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent oracle: every subset closed under the product.
    fn brute_force_subgroups(g: &FiniteGroup) -> BTreeSet<u64> {
        (0u64..1 << g.order())
            .filter(|&m| m & 1 == 1)
            .filter(|&m| {
                let members: Vec<usize> = bits(m).collect();
                members.iter().all(|&a| members.iter().all(|&b| m & (1 << g.mul(a, b)) != 0))
            })
            .collect()
    }

    #[test]
    fn constructors_have_expected_orders() {
        assert_eq!(FiniteGroup::cyclic(1).unwrap().order(), 1);
        let c6 = FiniteGroup::cyclic(6).unwrap();
        assert_eq!(c6.order(), 6);
        assert!(c6.is_abelian());
        let s3 = FiniteGroup::symmetric(3).unwrap();
        assert_eq!(s3.order(), 6);
        assert!(!s3.is_abelian());
        assert_eq!(FiniteGroup::symmetric(4).unwrap().order(), 24);
        let d4 = FiniteGroup::dihedral(4).unwrap();
        assert_eq!(d4.order(), 8);
        assert!(!d4.is_abelian());
    }

    #[test]
    fn cyclic_table_is_addition_mod_n() {
        let c6 = FiniteGroup::cyclic(6).unwrap();
        for a in 0..6 {
            for b in 0..6 {
                assert_eq!(c6.mul(a, b), (a + b) % 6);
            }
        }
        assert_eq!(c6.cyclic_generator(), Some(1));
    }

    #[test]
    fn bad_tables_are_rejected_with_witness() {
        let not_identity = vec![vec![1, 0], vec![0, 1]];
        assert!(matches!(FiniteGroup::from_table(not_identity), Err(Error::AxiomViolation(_))));

        // a latin square with identity 0 that is not associative
        let rows = vec![vec![0, 1, 2, 3, 4], vec![1, 0, 3, 4, 2], vec![2, 4, 0, 1, 3], vec![3, 2, 4, 0, 1], vec![4, 3, 1, 2, 0]];
        match FiniteGroup::from_table(rows) {
            Err(Error::AxiomViolation(msg)) => assert!(msg.contains("associativity"), "{msg}"),
            other => panic!("expected associativity failure, got {other:?}"),
        }
        assert!(matches!(FiniteGroup::cyclic(0), Err(Error::AxiomViolation(_))));
        assert!(matches!(FiniteGroup::symmetric(5), Err(Error::AxiomViolation(_))));
    }

    #[test]
    fn subgroup_counts_match_brute_force() {
        let cases = [
            (FiniteGroup::cyclic(2).unwrap(), 2),
            (FiniteGroup::cyclic(6).unwrap(), 4),
            (FiniteGroup::symmetric(3).unwrap(), 6),
            (FiniteGroup::cyclic(4).unwrap(), 3),
            (FiniteGroup::dihedral(4).unwrap(), 10),
        ];
        for (g, expected) in cases {
            let subs = enumerate_subgroups(&g);
            assert_eq!(subs.len(), expected);
            let ours: BTreeSet<u64> = subs.iter().map(|h| h.mask()).collect();
            assert_eq!(ours, brute_force_subgroups(&g));
        }
        let orders: Vec<usize> = enumerate_subgroups(&FiniteGroup::cyclic(6).unwrap()).iter().map(|h| h.order()).collect();
        assert_eq!(orders, vec![1, 2, 3, 6]);
    }

    #[test]
    fn s4_has_thirty_subgroups() {
        let s4 = FiniteGroup::symmetric(4).unwrap();
        assert_eq!(enumerate_subgroups(&s4).len(), 30);
    }

    #[test]
    fn subgroup_list_is_closed_under_conjugation() {
        for g in [FiniteGroup::symmetric(3).unwrap(), FiniteGroup::dihedral(4).unwrap()] {
            let subs = g.subgroups();
            for h in subs {
                for x in g.elements() {
                    assert!(subs.contains(&g.conjugate_subgroup(x, h)));
                }
            }
        }
    }

    #[test]
    fn chain_counts() {
        let c2 = FiniteGroup::cyclic(2).unwrap();
        assert_eq!(enumerate_chains(&c2, 1).len(), 3);
        assert_eq!(enumerate_chains(&c2, 5).len(), 3);
        assert_eq!(enumerate_chains(&FiniteGroup::cyclic(4).unwrap(), 2).len(), 7);
        assert_eq!(enumerate_chains(&FiniteGroup::cyclic(1).unwrap(), 3).len(), 1);
        for g in [FiniteGroup::cyclic(6).unwrap(), FiniteGroup::symmetric(3).unwrap()] {
            assert_eq!(enumerate_chains(&g, 0).len(), g.subgroups().len());
        }
    }

    #[test]
    fn abelian_chains_are_their_own_class() {
        let c6 = FiniteGroup::cyclic(6).unwrap();
        for chain in enumerate_chains(&c6, 3) {
            assert_eq!(chain_class(&c6, &chain).representative(), &chain);
        }
    }

    #[test]
    fn s3_transposition_chains_collapse() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let e = s3.trivial_subgroup();
        let order_two: Vec<Subgroup> = s3.subgroups().iter().filter(|h| h.order() == 2).cloned().collect();
        assert_eq!(order_two.len(), 3);
        let classes: BTreeSet<ChainClass> =
            order_two.iter().map(|h| chain_class(&s3, &SubgroupChain::new(vec![e.clone(), h.clone()]).unwrap())).collect();
        assert_eq!(classes.len(), 1);
        // classes up to length 2: e, C2, C3, G, e<C2, e<C3, e<G, C2<G, C3<G, e<C2<G, e<C3<G
        assert_eq!(chain_classes(&s3, 2).len(), 11);
    }

    #[test]
    fn chain_class_is_conjugation_invariant() {
        for g in [FiniteGroup::symmetric(3).unwrap(), FiniteGroup::dihedral(4).unwrap(), FiniteGroup::symmetric(4).unwrap()] {
            for chain in enumerate_chains(&g, 2) {
                let class = chain_class(&g, &chain);
                for x in g.elements() {
                    assert_eq!(chain_class(&g, &g.conjugate_chain(x, &chain)), class);
                }
            }
        }
    }

    #[test]
    fn names_round_trip() {
        for g in [
            FiniteGroup::cyclic(6).unwrap(),
            FiniteGroup::symmetric(3).unwrap(),
            FiniteGroup::dihedral(4).unwrap(),
            FiniteGroup::symmetric(4).unwrap(),
        ] {
            for h in g.subgroups() {
                let name = g.subgroup_name(h);
                assert_eq!(&g.parse_subgroup(&name).unwrap(), h, "{name}");
            }
        }
        let c2 = FiniteGroup::cyclic(2).unwrap();
        let chain = c2.parse_chain("e<C2").unwrap();
        assert_eq!(c2.chain_name(&chain), "e<C2");
        assert!(matches!(c2.parse_chain("C2<e"), Err(Error::InvalidChain(_))));
        assert!(matches!(c2.parse_chain("e<C3"), Err(Error::UnknownSubgroup(_))));
        let s3 = FiniteGroup::symmetric(3).unwrap();
        assert_eq!(s3.subgroup_name(&s3.whole_group()), "G");
        assert_eq!(s3.subgroup_name(&s3.parse_subgroup("C3").unwrap()), "C3");
    }

    #[test]
    fn normalizer_and_cosets() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let c3 = s3.parse_subgroup("C3").unwrap();
        assert_eq!(s3.normalizer(&c3), s3.whole_group());
        let t = s3.subgroups().iter().find(|h| h.order() == 2).unwrap().clone();
        assert_eq!(s3.normalizer(&t), t);
        let cosets: BTreeSet<u64> = s3.elements().map(|g| s3.left_coset(g, &t)).collect();
        assert_eq!(cosets.len(), 3);
    }
}
