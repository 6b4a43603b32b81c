//! Scene files: a group, named spaces built from constructor expressions,
//! named maps between them, and named squares and cubes of maps.

use std::collections::{BTreeMap, VecDeque};
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Deserializer};

use crate::complexes::{
    boundary_linking_simplex, combine, linking_simplex, rep_compactification, rep_disk, rep_sphere, CombineOp, GSimplicialComplex,
    GSimplicialMap, RepSummand, SimplicialComplex,
};
use crate::error::{Error, Result};
use crate::groups::{make_group, FiniteGroup, GroupSpec};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawScene {
    group: GroupSpec,
    #[serde(default)]
    spaces: BTreeMap<String, SpaceExpr>,
    #[serde(default)]
    maps: BTreeMap<String, MapDef>,
    #[serde(default)]
    squares: BTreeMap<String, SquareDef>,
    #[serde(default)]
    cubes: BTreeMap<String, CubeDef>,
}

/// Either the name of another space or a constructor.
#[derive(Debug, Clone)]
enum SpaceExpr {
    Ref(String),
    Build(Box<Constructor>),
}

impl<'de> Deserialize<'de> for SpaceExpr {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let value = serde_json::Value::deserialize(d)?;
        match value {
            serde_json::Value::String(name) => Ok(SpaceExpr::Ref(name)),
            other => serde_json::from_value(other).map(|c| SpaceExpr::Build(Box::new(c))).map_err(serde::de::Error::custom),
        }
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
enum Constructor {
    LinkingSimplex(String),
    BoundaryLinkingSimplex(String),
    RepSphere(Vec<RepSummand>),
    RepDisk(Vec<RepSummand>),
    RepCompactification(Vec<RepSummand>),
    Cone(SpaceExpr),
    Suspension(SpaceExpr),
    Join(SpaceExpr, SpaceExpr),
    Subdivide(SpaceExpr),
    Combine(CombineDef),
    Explicit(ExplicitDef),
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct CombineDef {
    op: CombineKind,
    spaces: Vec<SpaceExpr>,
}

#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(rename_all = "snake_case")]
enum CombineKind {
    Cone,
    Suspension,
    Join,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct ExplicitDef {
    vertices: usize,
    simplices: Vec<Vec<usize>>,
    /// Images of generators; the rest of the group acts by composition.
    #[serde(default)]
    action: Vec<GeneratorAction>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct GeneratorAction {
    element: usize,
    permutation: Vec<usize>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct MapDef {
    source: String,
    target: String,
    /// Image of each source vertex.
    #[serde(default)]
    vertices: Option<Vec<usize>>,
    /// Source vertex `v` goes to target vertex `v`.
    #[serde(default)]
    inclusion: bool,
    /// Checked at load time when set.
    #[serde(default)]
    isovariant: bool,
}

/// `u: Z → X`, `v: Z → Y`, `i: X → W`, `j: Y → W`.
#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SquareDef {
    pub u: String,
    pub v: String,
    pub i: String,
    pub j: String,
}

/// The `n` edges out of the initial vertex of a cube.
#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CubeDef {
    pub edges: Vec<String>,
}

#[derive(Debug, Clone)]
pub struct NamedMap {
    pub source: String,
    pub target: String,
    pub map: GSimplicialMap,
}

#[derive(Debug, Clone)]
pub struct Scene {
    pub group: Arc<FiniteGroup>,
    pub group_spec: GroupSpec,
    pub spaces: BTreeMap<String, Arc<GSimplicialComplex>>,
    pub maps: BTreeMap<String, NamedMap>,
    pub squares: BTreeMap<String, SquareDef>,
    pub cubes: BTreeMap<String, CubeDef>,
    /// Whether every space and map was subdivided once to make actions rigid.
    pub subdivided: bool,
}

impl Scene {
    pub fn space(&self, name: &str) -> Result<&Arc<GSimplicialComplex>> {
        self.spaces.get(name).ok_or_else(|| Error::validation(name, "no such space"))
    }

    pub fn map(&self, name: &str) -> Result<&NamedMap> {
        self.maps.get(name).ok_or_else(|| Error::validation(name, "no such map"))
    }

    pub fn square(&self, name: &str) -> Result<&SquareDef> {
        self.squares.get(name).ok_or_else(|| Error::validation(name, "no such square"))
    }

    pub fn cube(&self, name: &str) -> Result<&CubeDef> {
        self.cubes.get(name).ok_or_else(|| Error::validation(name, "no such cube"))
    }
}

pub fn parse_scene(path: &Path) -> Result<Scene> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_scene_str(&text)
}

pub fn parse_scene_str(text: &str) -> Result<Scene> {
    let raw: RawScene =
        serde_json::from_str(text).map_err(|e| Error::Parse { line: e.line(), column: e.column(), message: e.to_string() })?;
    let group = Arc::new(make_group(&raw.group).map_err(|e| Error::validation("group", e.to_string()))?);

    let mut builder = Builder { group: group.clone(), raw: &raw.spaces, built: BTreeMap::new(), visiting: Vec::new() };
    for name in raw.spaces.keys() {
        builder.resolve(name, name)?;
    }
    let mut spaces = builder.built;

    let mut maps = BTreeMap::new();
    for (name, def) in &raw.maps {
        maps.insert(name.clone(), build_map(name, def, &spaces)?);
    }
    for (name, sq) in &raw.squares {
        check_square(name, sq, &maps)?;
    }
    for (name, cube) in &raw.cubes {
        if cube.edges.len() < 2 {
            return Err(Error::validation(name, "a cube needs at least two edges"));
        }
        let mut source = None;
        for edge in &cube.edges {
            let m = maps.get(edge).ok_or_else(|| Error::validation(name, format!("undefined map `{edge}`")))?;
            if *source.get_or_insert(&m.source) != &m.source {
                return Err(Error::validation(name, "cube edges must share their source"));
            }
        }
    }

    let subdivided = spaces.values().any(|x| !x.is_rigid());
    if subdivided {
        let sd: BTreeMap<String, Arc<GSimplicialComplex>> =
            spaces.iter().map(|(k, x)| (k.clone(), Arc::new(x.barycentric_subdivision()))).collect();
        for (name, m) in maps.iter_mut() {
            m.map = m
                .map
                .subdivide(sd[&m.source].clone(), sd[&m.target].clone())
                .map_err(|e| Error::validation(name.as_str(), e.to_string()))?;
        }
        spaces = sd;
    }
    for (name, m) in &maps {
        if raw.maps[name].isovariant {
            let check = m.map.is_isovariant().map_err(|e| Error::validation(name.as_str(), e.to_string()))?;
            if let Some(simplex) = check.witness {
                return Err(Error::validation(name.as_str(), Error::NotIsovariant { simplex }.to_string()));
            }
        }
    }
    Ok(Scene { group, group_spec: raw.group, spaces, maps, squares: raw.squares, cubes: raw.cubes, subdivided })
}

struct Builder<'a> {
    group: Arc<FiniteGroup>,
    raw: &'a BTreeMap<String, SpaceExpr>,
    built: BTreeMap<String, Arc<GSimplicialComplex>>,
    visiting: Vec<String>,
}

impl Builder<'_> {
    fn resolve(&mut self, name: &str, from: &str) -> Result<Arc<GSimplicialComplex>> {
        if let Some(x) = self.built.get(name) {
            return Ok(x.clone());
        }
        let expr = self.raw.get(name).ok_or_else(|| Error::validation(from, format!("undefined space `{name}`")))?;
        if self.visiting.iter().any(|v| v == name) {
            return Err(Error::validation(name, "space is defined in terms of itself"));
        }
        self.visiting.push(name.to_string());
        let x = self.eval(expr, name)?;
        self.visiting.pop();
        self.built.insert(name.to_string(), x.clone());
        Ok(x)
    }

    fn eval(&mut self, expr: &SpaceExpr, owner: &str) -> Result<Arc<GSimplicialComplex>> {
        let wrap = |e: Error| match e {
            e @ Error::Validation { .. } => e,
            e => Error::validation(owner, e.to_string()),
        };
        let g = self.group.clone();
        let built = match expr {
            SpaceExpr::Ref(name) => return self.resolve(name, owner),
            SpaceExpr::Build(c) => match c.as_ref() {
                Constructor::LinkingSimplex(chain) => linking_simplex(&g, &g.parse_chain(chain).map_err(wrap)?),
                Constructor::BoundaryLinkingSimplex(chain) => boundary_linking_simplex(&g, &g.parse_chain(chain).map_err(wrap)?),
                Constructor::RepSphere(rep) => rep_sphere(&g, rep),
                Constructor::RepDisk(rep) => rep_disk(&g, rep),
                Constructor::RepCompactification(rep) => rep_compactification(&g, rep),
                Constructor::Cone(a) => Ok(self.eval(a, owner)?.cone()),
                Constructor::Suspension(a) => Ok(self.eval(a, owner)?.suspension()),
                Constructor::Join(a, b) => {
                    let (a, b) = (self.eval(a, owner)?, self.eval(b, owner)?);
                    a.join(&b)
                }
                Constructor::Subdivide(a) => Ok(self.eval(a, owner)?.barycentric_subdivision()),
                Constructor::Combine(def) => {
                    let args = def.spaces.iter().map(|a| self.eval(a, owner)).collect::<Result<Vec<_>>>()?;
                    match (def.op, args.as_slice()) {
                        (CombineKind::Cone, [a]) => combine(CombineOp::Cone(a)),
                        (CombineKind::Suspension, [a]) => combine(CombineOp::Suspension(a)),
                        (CombineKind::Join, [a, b]) => combine(CombineOp::Join(a, b)),
                        _ => Err(Error::validation(owner, "wrong number of spaces for this combine op")),
                    }
                }
                Constructor::Explicit(def) => explicit(&g, def),
            },
        };
        built.map(Arc::new).map_err(wrap)
    }
}

fn explicit(group: &Arc<FiniteGroup>, def: &ExplicitDef) -> Result<GSimplicialComplex> {
    if let Some(bad) = def.simplices.iter().flatten().find(|&&v| v >= def.vertices) {
        return Err(Error::InvalidComplex(format!("vertex {bad} out of range")));
    }
    let complex = SimplicialComplex::from_facets(def.vertices, &def.simplices)?;
    let n = def.vertices;
    let mut perms: Vec<Option<Vec<usize>>> = vec![None; group.order()];
    perms[0] = Some((0..n).collect());
    let mut generators = Vec::new();
    for a in &def.action {
        if a.element >= group.order() || a.permutation.len() != n || a.permutation.iter().any(|&v| v >= n) {
            return Err(Error::InvalidComplex(format!("bad permutation for element {}", a.element)));
        }
        generators.push((a.element, a.permutation.clone()));
    }
    // close up under left multiplication by generators
    let mut queue: VecDeque<usize> = VecDeque::from([0]);
    while let Some(x) = queue.pop_front() {
        let px = perms[x].clone().expect("queued elements are known");
        for (s, ps) in &generators {
            let y = group.mul(*s, x);
            let py: Vec<usize> = px.iter().map(|&v| ps[v]).collect();
            match &perms[y] {
                Some(existing) if *existing != py => {
                    return Err(Error::InvalidComplex(format!("generator images do not define an action (element {y})")))
                }
                Some(_) => {}
                None => {
                    perms[y] = Some(py);
                    queue.push_back(y);
                }
            }
        }
    }
    if def.action.is_empty() {
        return Ok(GSimplicialComplex::with_trivial_action(group.clone(), complex));
    }
    let action = perms
        .into_iter()
        .enumerate()
        .map(|(g, p)| p.ok_or_else(|| Error::InvalidComplex(format!("the listed generators do not reach element {g}"))))
        .collect::<Result<Vec<_>>>()?;
    GSimplicialComplex::new(group.clone(), complex, action)
}

fn build_map(name: &str, def: &MapDef, spaces: &BTreeMap<String, Arc<GSimplicialComplex>>) -> Result<NamedMap> {
    let get = |s: &str| spaces.get(s).cloned().ok_or_else(|| Error::validation(name, format!("undefined space `{s}`")));
    let (source, target) = (get(&def.source)?, get(&def.target)?);
    let vertex_map = match (&def.vertices, def.inclusion) {
        (Some(v), false) => v.clone(),
        (None, true) => (0..source.complex().vertex_count()).collect(),
        _ => return Err(Error::validation(name, "give exactly one of `vertices` and `inclusion`")),
    };
    let map = GSimplicialMap::new(source, target, vertex_map).map_err(|e| Error::validation(name, e.to_string()))?;
    Ok(NamedMap { source: def.source.clone(), target: def.target.clone(), map })
}

fn check_square(name: &str, sq: &SquareDef, maps: &BTreeMap<String, NamedMap>) -> Result<()> {
    let get = |m: &str| maps.get(m).ok_or_else(|| Error::validation(name, format!("undefined map `{m}`")));
    let (u, v, i, j) = (get(&sq.u)?, get(&sq.v)?, get(&sq.i)?, get(&sq.j)?);
    if u.source != v.source || u.target != i.source || v.target != j.source || i.target != j.target {
        return Err(Error::validation(name, "maps do not form a square Z → X, Z → Y, X → W, Y → W"));
    }
    let (u, v, i, j) = (u.map.vertex_map(), v.map.vertex_map(), i.map.vertex_map(), j.map.vertex_map());
    if let Some(z) = (0..u.len()).find(|&z| i[u[z]] != j[v[z]]) {
        return Err(Error::validation(name, Error::NonCommuting { vertex: z }.to_string()));
    }
    Ok(())
}
