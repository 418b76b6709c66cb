//! Cayley digraphs `Cay(H^k ⋊ D_k, X)` with `X = {a(x), b(x) : x ∈ Z_n}`,
//! optionally with one extra generator for odd degree, and their bipartite
//! variant over `k - 1` coordinates.
//!
//! Adjacency is never stored: out-neighbours are computed by multiplying with
//! the generators, so BFS needs one byte per vertex.

use std::io::Write;

use num_bigint::BigUint;
use serde::Serialize;

use crate::abelian::GroupContext;
use crate::bounds::{bipartite_moore, moore, serialize_big};
use crate::dihedral::DihedralElement;
use crate::error::{Error, Result};
use crate::semidirect::{Gamma, GammaElement};

pub const DEFAULT_VERTEX_BUDGET: u64 = 100_000_000;

const UNVISITED: u8 = u8::MAX;

/// Parameters of one construction. `diameter` is the odd target diameter;
/// the group uses `diameter` coordinates, or `diameter - 1` when bipartite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct DigraphSpec {
    pub n: u32,
    pub diameter: usize,
    pub bipartite: bool,
    pub odd_degree: bool,
}

impl DigraphSpec {
    pub fn new(n: u32, diameter: usize, bipartite: bool, odd_degree: bool) -> Result<Self> {
        let spec = Self {
            n,
            diameter,
            bipartite,
            odd_degree,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::InvalidSpec("n must be at least 1".into()));
        }
        let min = if self.bipartite { 5 } else { 3 };
        if self.diameter.is_multiple_of(2) || self.diameter < min {
            return Err(Error::InvalidSpec(format!(
                "diameter must be odd and at least {min}, got {}",
                self.diameter
            )));
        }
        Ok(())
    }

    /// Number of coordinates of the underlying group.
    pub fn coords(&self) -> usize {
        if self.bipartite {
            self.diameter - 1
        } else {
            self.diameter
        }
    }

    pub fn degree(&self) -> usize {
        2 * self.n as usize + self.odd_degree as usize
    }

    pub fn context(&self) -> Result<GroupContext> {
        GroupContext::new(self.n, self.coords())
    }
}

/// Vertex encoding: `suffix.index + 2k * vec_index(prefix)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct VertexId(pub u64);

// Generator as the sparse data the neighbour kernel needs.
#[derive(Debug, Clone)]
struct GenTerm {
    terms: Vec<(usize, u32)>,
    suffix: usize,
}

#[derive(Debug, Clone)]
pub struct CayleyDigraph {
    spec: DigraphSpec,
    gamma: Gamma,
    generators: Vec<GammaElement>,
    kernel: Vec<GenTerm>,
    // inverse[s][j] = C^{-1}(j) for the permutation of dihedral index s, 0-based
    inverse: Vec<Vec<usize>>,
    powers: Vec<u64>,
    order: u64,
}

impl CayleyDigraph {
    pub fn new(spec: DigraphSpec) -> Result<Self> {
        spec.validate()?;
        let ctx = spec.context()?;
        let gamma = Gamma::new(ctx);
        let order = gamma
            .order()
            .ok_or_else(|| Error::InvalidSpec("order overflows u64".into()))?;
        let generators = generators_for(&spec, &gamma)?;
        let k = ctx.k();
        let kernel = generators
            .iter()
            .map(|g| GenTerm {
                terms: g
                    .prefix()
                    .coords()
                    .iter()
                    .enumerate()
                    .filter(|(_, &v)| v != 0)
                    .map(|(j, &v)| (j, v))
                    .collect(),
                suffix: g.suffix().index(k),
            })
            .collect();
        let inverse = gamma
            .dihedral()
            .elements()
            .map(|e| {
                let inv = gamma.dihedral().to_perm(e).inverse();
                (1..=k).map(|j| inv.apply(j) - 1).collect()
            })
            .collect();
        let powers = (0..k).map(|i| (ctx.n() as u64).pow(i as u32)).collect();
        Ok(Self {
            spec,
            gamma,
            generators,
            kernel,
            inverse,
            powers,
            order,
        })
    }

    #[inline]
    pub fn spec(&self) -> &DigraphSpec {
        &self.spec
    }

    #[inline]
    pub fn gamma(&self) -> &Gamma {
        &self.gamma
    }

    #[inline]
    pub fn generators(&self) -> &[GammaElement] {
        &self.generators
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.generators.len()
    }

    #[inline]
    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn vertex(&self, g: &GammaElement) -> Result<VertexId> {
        self.gamma.encode(g).map(VertexId)
    }

    pub fn element(&self, v: VertexId) -> Result<GammaElement> {
        self.gamma.decode(v.0)
    }

    pub fn identity(&self) -> VertexId {
        VertexId(0)
    }

    fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v.0 >= self.order {
            return Err(Error::IndexOutOfRange {
                index: v.0,
                limit: self.order,
            });
        }
        Ok(())
    }

    /// Out-neighbours `v·x` for `x ∈ X`, in generator order, by full group multiplication.
    pub fn out_neighbors(&self, v: VertexId) -> Result<Vec<VertexId>> {
        self.check_vertex(v)?;
        let g = self.element(v)?;
        self.generators
            .iter()
            .map(|x| self.gamma.mul(&g, x).and_then(|h| self.vertex(&h)))
            .collect()
    }

    /// Same as [`out_neighbors`](Self::out_neighbors) but touching only the
    /// coordinates each generator changes. `coords` is scratch space of length `k`.
    fn neighbors_into(&self, id: u64, coords: &mut [u32], out: &mut Vec<u64>) {
        let k = coords.len();
        let span = 2 * k as u64;
        let suffix = (id % span) as usize;
        let mut rest = id / span;
        let base = rest;
        let n = self.spec.n as u64;
        for c in coords.iter_mut() {
            *c = (rest % n) as u32;
            rest /= n;
        }
        let inv = &self.inverse[suffix];
        out.clear();
        for g in &self.kernel {
            let mut idx = base;
            for &(j, v) in &g.terms {
                let i = inv[j];
                let old = coords[i] as u64;
                let new = (old + v as u64) % n;
                idx = idx - old * self.powers[i] + new * self.powers[i];
            }
            let s = self.gamma.dihedral().mul_index(suffix, g.suffix) as u64;
            out.push(s + span * idx);
        }
    }

    fn check_budget(&self, budget: u64) -> Result<()> {
        if self.order > budget {
            return Err(Error::BudgetExceeded {
                required: self.order as u128,
                budget,
            });
        }
        Ok(())
    }

    /// BFS distances from `source`; every vertex must be reached.
    pub fn distances_from(&self, source: VertexId, budget: u64) -> Result<Vec<u8>> {
        self.check_vertex(source)?;
        self.check_budget(budget)?;
        let mut dist = vec![UNVISITED; self.order as usize];
        dist[source.0 as usize] = 0;
        let mut frontier = vec![source.0];
        let mut next = Vec::new();
        let mut coords = vec![0u32; self.spec.coords()];
        let mut buf = Vec::with_capacity(self.degree());
        let mut level: u8 = 0;
        while !frontier.is_empty() {
            if level == UNVISITED - 1 {
                return Err(Error::InvalidSpec("BFS depth exceeds 254".into()));
            }
            next.clear();
            for &u in &frontier {
                self.neighbors_into(u, &mut coords, &mut buf);
                for &w in &buf {
                    let slot = &mut dist[w as usize];
                    if *slot == UNVISITED {
                        *slot = level + 1;
                        next.push(w);
                    }
                }
            }
            std::mem::swap(&mut frontier, &mut next);
            level += 1;
        }
        if let Some(missing) = dist.iter().position(|&d| d == UNVISITED) {
            return Err(Error::NotStronglyConnected(missing as u64));
        }
        Ok(dist)
    }

    pub fn eccentricity_from(&self, source: VertexId, budget: u64) -> Result<u32> {
        let dist = self.distances_from(source, budget)?;
        Ok(dist.iter().copied().max().unwrap_or(0) as u32)
    }

    /// Eccentricity of the identity, which is the diameter since left
    /// translations are automorphisms.
    pub fn eccentricity_from_identity(&self, budget: u64) -> Result<u32> {
        self.eccentricity_from(self.identity(), budget)
    }

    /// `spectrum[d]` = number of vertices at distance `d` from `source`.
    pub fn distance_spectrum(&self, source: VertexId, budget: u64) -> Result<Vec<u64>> {
        let dist = self.distances_from(source, budget)?;
        let max = dist.iter().copied().max().unwrap_or(0) as usize;
        let mut spectrum = vec![0u64; max + 1];
        for d in dist {
            spectrum[d as usize] += 1;
        }
        Ok(spectrum)
    }

    fn class_of(&self, id: u64) -> usize {
        let k = self.spec.coords();
        DihedralElement::from_index((id % (2 * k as u64)) as usize, k).parity_class()
    }

    /// Full edge scan: true iff every arc joins the two suffix parity classes.
    pub fn check_bipartite(&self) -> bool {
        let mut coords = vec![0u32; self.spec.coords()];
        let mut buf = Vec::with_capacity(self.degree());
        (0..self.order).all(|u| {
            self.neighbors_into(u, &mut coords, &mut buf);
            let cu = self.class_of(u);
            buf.iter().all(|&w| self.class_of(w) != cu)
        })
    }

    /// Vertex counts of the two suffix parity classes.
    pub fn class_sizes(&self) -> [u64; 2] {
        let mut sizes = [0u64; 2];
        for u in 0..self.order {
            sizes[self.class_of(u)] += 1;
        }
        sizes
    }

    /// Calls `f(u, v)` for every arc, sources ascending, generators in order.
    pub fn for_each_arc<F: FnMut(u64, u64) -> Result<()>>(&self, mut f: F) -> Result<()> {
        let mut coords = vec![0u32; self.spec.coords()];
        let mut buf = Vec::with_capacity(self.degree());
        for u in 0..self.order {
            self.neighbors_into(u, &mut coords, &mut buf);
            for &v in &buf {
                f(u, v)?;
            }
        }
        Ok(())
    }

    /// Measures the diameter and compares the order with the Moore bound for `k - 1`.
    pub fn report(&self, budget: u64) -> Result<DigraphReport> {
        let diameter = self.eccentricity_from_identity(budget)?;
        let d = self.degree() as u64;
        let prev = self.spec.diameter as u32 - 1;
        let moore_prev = if self.spec.bipartite {
            bipartite_moore(d, prev)?
        } else {
            moore(d, prev)
        };
        Ok(DigraphReport {
            n: self.spec.n,
            k: self.spec.diameter,
            bipartite: self.spec.bipartite,
            odd_degree: self.spec.odd_degree,
            order: self.order,
            degree: self.degree(),
            diameter_measured: diameter,
            exactness: BigUint::from(self.order) > moore_prev,
            moore_prev,
        })
    }

    pub fn export<W: Write>(&self, format: ExportFormat, sink: &mut W, budget: u64) -> Result<()> {
        self.check_budget(budget)?;
        match format {
            ExportFormat::EdgeList => {
                writeln!(sink, "# n={}", self.spec.n)?;
                writeln!(sink, "# k={}", self.spec.diameter)?;
                writeln!(sink, "# bipartite={}", self.spec.bipartite)?;
                writeln!(sink, "# odd_degree={}", self.spec.odd_degree)?;
                writeln!(sink, "# degree={}", self.degree())?;
                writeln!(sink, "# order={}", self.order)?;
                self.for_each_arc(|u, v| Ok(writeln!(sink, "{u} {v}")?))?;
            }
            ExportFormat::Dot => {
                writeln!(sink, "digraph g {{")?;
                self.for_each_arc(|u, v| Ok(writeln!(sink, "  {u} -> {v};")?))?;
                writeln!(sink, "}}")?;
            }
            ExportFormat::JsonMeta => {
                let report = self.report(budget)?;
                serde_json::to_writer(&mut *sink, &report)?;
                writeln!(sink)?;
            }
        }
        Ok(())
    }
}

/// `X = {a(x), b(x)}` plus the optional extra generator.
///
/// The extra generator is the zero-prefix `A^2` for the non-bipartite family,
/// and `(0,1,0,…,0)A` for the bipartite one (zero-prefix `A^3` when `n = 1`,
/// where `(0,1,0,…)` collapses to zero and would duplicate `a(0)`).
pub fn generators(spec: &DigraphSpec) -> Result<Vec<GammaElement>> {
    let gamma = Gamma::new(spec.context()?);
    generators_for(spec, &gamma)
}

fn generators_for(spec: &DigraphSpec, gamma: &Gamma) -> Result<Vec<GammaElement>> {
    let ctx = gamma.ctx();
    let mut gens: Vec<GammaElement> = (0..ctx.n()).map(|x| gamma.gen_a(x)).collect();
    gens.extend((0..ctx.n()).map(|x| gamma.gen_b(x)));
    if spec.odd_degree {
        let extra = if !spec.bipartite {
            gamma.element(ctx.zero(), DihedralElement::new(2, false, ctx))?
        } else if ctx.n() > 1 {
            gamma.element(ctx.unit(1, 1), DihedralElement::a())?
        } else {
            gamma.element(ctx.zero(), DihedralElement::new(3, false, ctx))?
        };
        if gens.contains(&extra) {
            return Err(Error::InvalidSpec(format!(
                "extra generator {extra} already in X"
            )));
        }
        if spec.bipartite && extra.suffix().parity_class() != 1 {
            return Err(Error::InvalidSpec(format!(
                "extra generator {extra} does not switch parity class"
            )));
        }
        gens.push(extra);
    }
    Ok(gens)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    EdgeList,
    Dot,
    JsonMeta,
}

/// Summary written by the `json-meta` export.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DigraphReport {
    pub n: u32,
    pub k: usize,
    pub bipartite: bool,
    pub odd_degree: bool,
    pub order: u64,
    pub degree: usize,
    pub diameter_measured: u32,
    #[serde(serialize_with = "serialize_big")]
    pub moore_prev: BigUint,
    pub exactness: bool,
}

impl std::fmt::Display for DigraphReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "order={} degree={} diameter={} certified={}",
            self.order, self.degree, self.diameter_measured, self.exactness
        )
    }
}
