//! Certified instance generators.
//!
//! Each generator turns an instance of a classic NP-hard (or W[1]-hard)
//! problem into an equivalent Graph Motif instance with a certificate: a map
//! from source objects to vertex ids plus claimed structural parameters
//! (`distance-to-cluster 1`, `bandwidth-at-most 6`, ...). Claims are checked
//! against the emitted graph before a generator returns, and can be
//! re-checked later with [`GeneratedInstance::check_claims`].
//!
//! [`Source`] bundles a source instance with the reduction to apply, which
//! is what the round-trip tests and the `generate` command work with.

use rand::Rng;

use crate::error::{Error, Result};
use crate::io::Certificate;
use crate::model::{Color, Coloring, Graph, Instance, Motif, SolveOutcome, Vertex};
use crate::sampling::{self, InstanceShape};
use crate::solvers::{self, Algorithm, SolverConfig};

mod checks;
mod domset;
mod mcc_star;
pub mod sources;
mod split;
mod x3c;

pub use domset::{gen_domset_gadget, gen_domset_reduction, DomVariant};
pub use mcc_star::gen_mcc_star;
pub use sources::{DomSetSource, PartitionedGraph, RootedInstance, SetSystem, X3cInstance};
pub use split::{gen_hitting_set_split, gen_set_cover_split};
pub use x3c::{gen_or_composition, gen_x3c_comb, gen_x3c_paths, gen_x3c_superstar_cliques};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Reduction {
    /// X3C to a tree at distance 1 from disjoint paths.
    X3cPaths,
    /// X3C to a comb of bandwidth at most 6.
    X3cComb,
    /// X3C to a graph at distance 1 from a cluster graph.
    X3cSuperstar,
    /// Same with slot-colored set cliques, so the motif is colorful.
    X3cSuperstarColorful,
    /// OR of several X3C instances, parameterized by vertex cover.
    OrComposition,
    /// Same with one color layer per slot and colorful element vertices.
    OrCompositionColorful,
    /// Rooted Graph Motif to an instance with a dominating set of size 2.
    DomsetGadget,
    /// Dominating Set to distance 1 from cluster.
    DomsetCluster,
    /// Dominating Set to a tree.
    DomsetTree,
    /// Hitting Set to a split graph, parameterized by vertex cover.
    HittingSetSplit,
    /// Set Cover to a split graph, parameterized by distance to clique.
    SetCoverSplit,
    /// Multicolored Clique to a subdivided star.
    MccStar,
}

impl Reduction {
    pub const ALL: [Reduction; 12] = [
        Reduction::X3cPaths,
        Reduction::X3cComb,
        Reduction::X3cSuperstar,
        Reduction::X3cSuperstarColorful,
        Reduction::OrComposition,
        Reduction::OrCompositionColorful,
        Reduction::DomsetGadget,
        Reduction::DomsetCluster,
        Reduction::DomsetTree,
        Reduction::HittingSetSplit,
        Reduction::SetCoverSplit,
        Reduction::MccStar,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Reduction::X3cPaths => "x3c-paths",
            Reduction::X3cComb => "x3c-comb",
            Reduction::X3cSuperstar => "x3c-superstar",
            Reduction::X3cSuperstarColorful => "x3c-superstar-colorful",
            Reduction::OrComposition => "or-composition",
            Reduction::OrCompositionColorful => "or-composition-colorful",
            Reduction::DomsetGadget => "domset-gadget",
            Reduction::DomsetCluster => "domset-cluster",
            Reduction::DomsetTree => "domset-tree",
            Reduction::HittingSetSplit => "hitting-set-split",
            Reduction::SetCoverSplit => "set-cover-split",
            Reduction::MccStar => "mcc-star",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Reduction::ALL.into_iter().find(|r| r.name() == name)
    }

    /// Short description of the source file the reduction reads.
    pub fn source_format(self) -> &'static str {
        match self {
            Reduction::X3cPaths | Reduction::X3cComb | Reduction::X3cSuperstar | Reduction::X3cSuperstarColorful => {
                "X3C: 'p x3c <q> <nsets>' then 's a b c' lines"
            }
            Reduction::OrComposition | Reduction::OrCompositionColorful => {
                "several X3C sections of equal q and nsets, each starting with 'p x3c'"
            }
            Reduction::DomsetGadget => "a Graph Motif instance file plus --root",
            Reduction::DomsetCluster | Reduction::DomsetTree => "'p ds <n> <m> <t>' then 'e u v' lines",
            Reduction::HittingSetSplit | Reduction::SetCoverSplit => "'p sets <n> <m> <t>' then 's e1 e2 ...' lines",
            Reduction::MccStar => "'p mcc <k> <t>' then 'e i q j q2' edges and optional 'h i j' pattern pairs",
        }
    }

    /// The solver whose parameter the reduction keeps small.
    pub fn designated_algorithm(self) -> Algorithm {
        match self {
            Reduction::X3cPaths | Reduction::X3cComb | Reduction::DomsetTree | Reduction::MccStar => Algorithm::MaxLeaf,
            Reduction::X3cSuperstar | Reduction::X3cSuperstarColorful | Reduction::DomsetCluster => {
                Algorithm::VertexCliqueCover
            }
            Reduction::OrComposition | Reduction::OrCompositionColorful | Reduction::HittingSetSplit => {
                Algorithm::VertexCover
            }
            Reduction::SetCoverSplit => Algorithm::DistClique,
            Reduction::DomsetGadget => Algorithm::Brute,
        }
    }
}

impl std::fmt::Display for Reduction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// A source instance in the shape a reduction expects.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SourceData {
    X3c(X3cInstance),
    X3cFamily(Vec<X3cInstance>),
    Rooted(RootedInstance),
    DomSet(DomSetSource),
    Sets(SetSystem),
    Partitioned(PartitionedGraph),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Source {
    pub reduction: Reduction,
    pub data: SourceData,
}

impl Source {
    pub fn new(reduction: Reduction, data: SourceData) -> Result<Self> {
        use Reduction::*;
        let ok = matches!(
            (reduction, &data),
            (X3cPaths | X3cComb | X3cSuperstar | X3cSuperstarColorful, SourceData::X3c(_))
                | (OrComposition | OrCompositionColorful, SourceData::X3cFamily(_))
                | (DomsetGadget, SourceData::Rooted(_))
                | (DomsetCluster | DomsetTree, SourceData::DomSet(_))
                | (HittingSetSplit | SetCoverSplit, SourceData::Sets(_))
                | (MccStar, SourceData::Partitioned(_))
        );
        if !ok {
            return Err(Error::input(format!("source does not fit reduction {reduction}")));
        }
        Ok(Source { reduction, data })
    }

    /// Parses a source file for `reduction`. The gadget reduction reads an
    /// instance file and needs `root`.
    pub fn parse(reduction: Reduction, text: &str, root: Option<Vertex>) -> Result<Self> {
        use Reduction::*;
        let data = match reduction {
            X3cPaths | X3cComb | X3cSuperstar | X3cSuperstarColorful => SourceData::X3c(sources::parse_x3c(text)?),
            OrComposition | OrCompositionColorful => SourceData::X3cFamily(sources::parse_x3c_family(text)?),
            DomsetGadget => {
                let root = root.ok_or_else(|| Error::input("domset-gadget needs a root vertex"))?;
                SourceData::Rooted(RootedInstance { instance: crate::io::parse_instance(text)?, root })
            }
            DomsetCluster | DomsetTree => SourceData::DomSet(sources::parse_domset(text)?),
            HittingSetSplit | SetCoverSplit => SourceData::Sets(sources::parse_set_system(text)?),
            MccStar => SourceData::Partitioned(sources::parse_partitioned(text)?),
        };
        Source::new(reduction, data)
    }

    /// Text form of the source; the gadget source is written as an
    /// instance file (the root is not part of it).
    pub fn write(&self) -> String {
        match &self.data {
            SourceData::X3c(x) => sources::write_x3c(x),
            SourceData::X3cFamily(xs) => sources::write_x3c_family(xs),
            SourceData::Rooted(r) => crate::io::write_instance(&r.instance),
            SourceData::DomSet(d) => sources::write_domset(d),
            SourceData::Sets(s) => sources::write_set_system(s),
            SourceData::Partitioned(p) => sources::write_partitioned(p),
        }
    }

    pub fn generate(&self) -> Result<GeneratedInstance> {
        use Reduction::*;
        match (&self.data, self.reduction) {
            (SourceData::X3c(x), X3cPaths) => gen_x3c_paths(x),
            (SourceData::X3c(x), X3cComb) => gen_x3c_comb(x),
            (SourceData::X3c(x), X3cSuperstar) => gen_x3c_superstar_cliques(x, false),
            (SourceData::X3c(x), X3cSuperstarColorful) => gen_x3c_superstar_cliques(x, true),
            (SourceData::X3cFamily(xs), OrComposition) => gen_or_composition(xs, false),
            (SourceData::X3cFamily(xs), OrCompositionColorful) => gen_or_composition(xs, true),
            (SourceData::Rooted(r), DomsetGadget) => gen_domset_gadget(&r.instance, r.root),
            (SourceData::DomSet(d), DomsetCluster) => gen_domset_reduction(&d.h, d.t, DomVariant::Cluster),
            (SourceData::DomSet(d), DomsetTree) => gen_domset_reduction(&d.h, d.t, DomVariant::Tree),
            (SourceData::Sets(s), HittingSetSplit) => gen_hitting_set_split(s),
            (SourceData::Sets(s), SetCoverSplit) => gen_set_cover_split(s),
            (SourceData::Partitioned(p), MccStar) => gen_mcc_star(p),
            _ => Err(Error::input(format!("source does not fit reduction {}", self.reduction))),
        }
    }

    /// Answers the source question by exhaustive search.
    pub fn solve_source(&self) -> bool {
        match &self.data {
            SourceData::X3c(x) => x.exact_cover().is_some(),
            SourceData::X3cFamily(xs) => xs.iter().any(|x| x.exact_cover().is_some()),
            SourceData::Rooted(r) => solvers::solve_brute_rooted(&r.instance, r.root).is_ok_and(|o| o.is_yes()),
            SourceData::DomSet(d) => d.has_dominating_set(),
            SourceData::Sets(s) => match self.reduction {
                Reduction::HittingSetSplit => s.has_hitting_set(),
                _ => s.has_set_cover(),
            },
            SourceData::Partitioned(p) => p.find_pattern().is_some(),
        }
    }
}

/// Small random source for `reduction`, sized so that both the source and
/// the generated instance can be solved exactly in milliseconds.
pub fn random_source<R: Rng>(reduction: Reduction, rng: &mut R) -> Source {
    use Reduction::*;
    let data = match reduction {
        X3cPaths | X3cComb | X3cSuperstar | X3cSuperstarColorful => SourceData::X3c(sources::random_small_x3c(rng)),
        OrComposition | OrCompositionColorful => {
            let count = rng.gen_range(2..=3);
            let q = rng.gen_range(1..=2);
            let nsets = rng.gen_range(q..=q + 3);
            SourceData::X3cFamily((0..count).map(|_| sources::random_x3c(rng, q, nsets)).collect())
        }
        DomsetGadget => {
            let shape = InstanceShape { max_n: 8, ..InstanceShape::default() };
            let instance = sampling::random_instance(rng, &shape);
            let root = rng.gen_range(0..instance.n());
            SourceData::Rooted(RootedInstance { instance, root })
        }
        DomsetCluster | DomsetTree => SourceData::DomSet(sources::random_domset(rng, 6)),
        HittingSetSplit | SetCoverSplit => SourceData::Sets(sources::random_set_system(rng, 6, 5)),
        MccStar => SourceData::Partitioned(sources::random_partitioned(rng, 3, 2)),
    };
    Source { reduction, data }
}

/// A generated Graph Motif instance with its certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratedInstance {
    pub reduction: Reduction,
    pub instance: Instance,
    pub certificate: Certificate,
    /// Partition into cliques, for reductions aimed at the clique-cover
    /// solver.
    pub vertex_clique_cover: Option<Vec<Vec<Vertex>>>,
}

impl GeneratedInstance {
    pub fn designated_algorithm(&self) -> Algorithm {
        self.reduction.designated_algorithm()
    }

    pub fn solver_config(&self) -> SolverConfig {
        let config = SolverConfig::new(self.designated_algorithm());
        match &self.vertex_clique_cover {
            Some(c) => config.with_vertex_clique_cover(c.clone()),
            None => config,
        }
    }

    pub fn solve_designated(&self) -> Result<SolveOutcome> {
        solvers::solve(&self.instance, &self.solver_config())
    }

    /// Re-checks every claim of the certificate against the graph.
    pub fn check_claims(&self) -> std::result::Result<(), String> {
        checks::check(self)
    }
}

/// Accumulates vertices, edges and certificate entries.
#[derive(Default)]
struct Builder {
    colors: Vec<Color>,
    edges: Vec<(Vertex, Vertex)>,
    cert: Certificate,
}

impl Builder {
    fn vertex(&mut self, color: Color) -> Vertex {
        self.colors.push(color);
        self.colors.len() - 1
    }

    fn edge(&mut self, u: Vertex, v: Vertex) {
        self.edges.push((u, v));
    }

    fn clique(&mut self, vs: &[Vertex]) {
        for (i, &u) in vs.iter().enumerate() {
            for &v in &vs[i + 1..] {
                self.edge(u, v);
            }
        }
    }

    fn path(&mut self, vs: &[Vertex]) {
        for w in vs.windows(2) {
            self.edge(w[0], w[1]);
        }
    }

    fn map(&mut self, token: impl Into<String>, v: Vertex) {
        self.cert.map.push((token.into(), v));
    }

    fn claim(&mut self, name: &str, value: impl ToString) {
        self.cert.claims.push((name.to_string(), value.to_string()));
    }

    /// Builds the instance and refuses to return it unless its claims hold.
    fn finish(
        self,
        reduction: Reduction,
        motif: Motif,
        vertex_clique_cover: Option<Vec<Vec<Vertex>>>,
    ) -> Result<GeneratedInstance> {
        let n = self.colors.len();
        let graph = Graph::from_edges(n, &self.edges)?;
        let gen = GeneratedInstance {
            reduction,
            instance: Instance::new(graph, Coloring::new(self.colors), motif)?,
            certificate: self.cert,
            vertex_clique_cover,
        };
        gen.check_claims()
            .map_err(|e| Error::Internal(format!("{reduction}: claim check failed: {e}")))?;
        Ok(gen)
    }
}
