use super::graph::{ColoredGraph, SmallGraph, MAX_VERTICES};
use super::{Permutation, StructureFamily, TwistedFamily};

/// Graphs on `0..n` satisfying a predicate, transported by relabeling vertices.
#[derive(Clone)]
pub struct GraphFamily {
    name: &'static str,
    predicate: fn(&SmallGraph) -> bool,
    budget: usize,
}

fn any_graph(_: &SmallGraph) -> bool {
    true
}

fn bipartite_and(g: &SmallGraph, rest: bool) -> bool {
    rest && g.is_bipartite()
}

impl GraphFamily {
    pub const DEFAULT_BUDGET: usize = 6;

    pub fn new(name: &'static str, predicate: fn(&SmallGraph) -> bool) -> Self {
        Self {
            name,
            predicate,
            budget: Self::DEFAULT_BUDGET,
        }
    }

    pub fn with_budget(mut self, budget: usize) -> Self {
        self.budget = budget.min(MAX_VERTICES);
        self
    }

    pub fn graphs() -> Self {
        Self::new("G", any_graph)
    }

    pub fn connected_graphs() -> Self {
        Self::new("Gc", SmallGraph::is_connected)
    }

    pub fn point_determining() -> Self {
        Self::new("P", SmallGraph::is_point_determining)
    }

    pub fn bipartite() -> Self {
        Self::new("BP", SmallGraph::is_bipartite)
    }

    pub fn connected_bipartite() -> Self {
        Self::new("CBP", |g| bipartite_and(g, g.is_connected()))
    }

    pub fn point_determining_bipartite() -> Self {
        Self::new("PBP", |g| bipartite_and(g, g.is_point_determining()))
    }

    pub fn connected_point_determining_bipartite() -> Self {
        Self::new("CPBP", |g| {
            bipartite_and(g, g.is_connected() && g.is_point_determining())
        })
    }

    pub fn connected_endpoint_free() -> Self {
        Self::new("Mc", |g| g.is_connected() && g.is_endpoint_free())
    }

    pub fn trees() -> Self {
        Self::new("a", SmallGraph::is_tree)
    }
}

impl StructureFamily for GraphFamily {
    type Structure = SmallGraph;

    fn name(&self) -> &str {
        self.name
    }

    fn budget(&self) -> usize {
        self.budget
    }

    fn enumerate(&self, n: usize) -> Vec<SmallGraph> {
        SmallGraph::all(n).filter(|g| (self.predicate)(g)).collect()
    }

    fn act(&self, sigma: &Permutation, g: &SmallGraph) -> SmallGraph {
        g.relabel(sigma)
    }
}

/// Nonempty graphs with a proper red/blue coloring; the twist swaps the colors.
#[derive(Clone)]
pub struct BicoloredFamily {
    connected: bool,
    budget: usize,
}

impl BicoloredFamily {
    pub fn all() -> Self {
        Self {
            connected: false,
            budget: GraphFamily::DEFAULT_BUDGET,
        }
    }

    pub fn connected() -> Self {
        Self {
            connected: true,
            budget: GraphFamily::DEFAULT_BUDGET,
        }
    }

    pub fn with_budget(mut self, budget: usize) -> Self {
        self.budget = budget.min(MAX_VERTICES);
        self
    }
}

impl StructureFamily for BicoloredFamily {
    type Structure = ColoredGraph;

    fn name(&self) -> &str {
        if self.connected {
            "CBC"
        } else {
            "BC"
        }
    }

    fn budget(&self) -> usize {
        self.budget
    }

    fn enumerate(&self, n: usize) -> Vec<ColoredGraph> {
        if n == 0 {
            return Vec::new();
        }
        SmallGraph::all(n)
            .filter(|g| !self.connected || g.is_connected())
            .flat_map(|g| {
                g.bicolorings()
                    .map(move |blue| ColoredGraph { graph: g, blue })
                    .collect::<Vec<_>>()
            })
            .collect()
    }

    fn act(&self, sigma: &Permutation, s: &ColoredGraph) -> ColoredGraph {
        s.relabel(sigma)
    }
}

impl TwistedFamily for BicoloredFamily {
    fn twist(&self, s: &ColoredGraph) -> ColoredGraph {
        s.flip()
    }
}

/// Trees with a distinguished root vertex.
#[derive(Clone, Copy, Default)]
pub struct RootedTrees;

impl StructureFamily for RootedTrees {
    type Structure = (SmallGraph, usize);

    fn name(&self) -> &str {
        "A"
    }

    fn budget(&self) -> usize {
        6
    }

    fn enumerate(&self, n: usize) -> Vec<(SmallGraph, usize)> {
        SmallGraph::all(n)
            .filter(SmallGraph::is_tree)
            .flat_map(|t| (0..n).map(move |root| (t, root)))
            .collect()
    }

    fn act(&self, sigma: &Permutation, (t, root): &(SmallGraph, usize)) -> (SmallGraph, usize) {
        (t.relabel(sigma), sigma.apply(*root))
    }
}

/// The single set structure on each label set.
#[derive(Clone, Copy, Default)]
pub struct Sets;

impl StructureFamily for Sets {
    type Structure = ();

    fn name(&self) -> &str {
        "E"
    }

    fn budget(&self) -> usize {
        7
    }

    fn enumerate(&self, _: usize) -> Vec<()> {
        vec![()]
    }

    fn act(&self, _: &Permutation, _: &()) {}
}

/// Subsets as bitmasks.
#[derive(Clone, Copy, Default)]
pub struct Subsets;

impl StructureFamily for Subsets {
    type Structure = u8;

    fn name(&self) -> &str {
        "Sub"
    }

    fn budget(&self) -> usize {
        6
    }

    fn enumerate(&self, n: usize) -> Vec<u8> {
        (0u16..1 << n).map(|m| m as u8).collect()
    }

    fn act(&self, sigma: &Permutation, s: &u8) -> u8 {
        sigma.apply_mask(*s)
    }
}

/// Linear orders as the sequence of labels from first to last.
#[derive(Clone, Copy, Default)]
pub struct LinearOrders;

impl StructureFamily for LinearOrders {
    type Structure = Vec<usize>;

    fn name(&self) -> &str {
        "L"
    }

    fn budget(&self) -> usize {
        6
    }

    fn enumerate(&self, n: usize) -> Vec<Vec<usize>> {
        Permutation::all(n).map(|p| p.images().collect()).collect()
    }

    fn act(&self, sigma: &Permutation, order: &Vec<usize>) -> Vec<usize> {
        order.iter().map(|&i| sigma.apply(i)).collect()
    }
}

/// Permutations, transported by conjugation.
#[derive(Clone, Copy, Default)]
pub struct Permutations;

impl StructureFamily for Permutations {
    type Structure = Permutation;

    fn name(&self) -> &str {
        "S"
    }

    fn budget(&self) -> usize {
        6
    }

    fn enumerate(&self, n: usize) -> Vec<Permutation> {
        Permutation::all(n).collect()
    }

    fn act(&self, sigma: &Permutation, pi: &Permutation) -> Permutation {
        sigma.compose(pi).compose(&sigma.inverse())
    }
}

/// Cyclic orders, stored as permutations with a single cycle.
#[derive(Clone, Copy, Default)]
pub struct Cycles;

impl StructureFamily for Cycles {
    type Structure = Permutation;

    fn name(&self) -> &str {
        "C"
    }

    fn budget(&self) -> usize {
        6
    }

    fn enumerate(&self, n: usize) -> Vec<Permutation> {
        Permutation::all(n)
            .filter(|p| p.cycle_type().len() == 1)
            .collect()
    }

    fn act(&self, sigma: &Permutation, pi: &Permutation) -> Permutation {
        Permutations.act(sigma, pi)
    }
}

/// Functions from the label set to itself, transported by conjugation.
#[derive(Clone, Copy, Default)]
pub struct Endofunctions;

impl StructureFamily for Endofunctions {
    type Structure = Vec<usize>;

    fn name(&self) -> &str {
        "End"
    }

    fn budget(&self) -> usize {
        5
    }

    fn enumerate(&self, n: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::with_capacity(n.pow(n as u32));
        let mut f = vec![0usize; n];
        loop {
            out.push(f.clone());
            let Some(i) = (0..n).rev().find(|&i| f[i] + 1 < n) else {
                return out;
            };
            f[i] += 1;
            f[i + 1..].fill(0);
        }
    }

    fn act(&self, sigma: &Permutation, f: &Vec<usize>) -> Vec<usize> {
        let mut g = vec![0; f.len()];
        for (i, &fi) in f.iter().enumerate() {
            g[sigma.apply(i)] = sigma.apply(fi);
        }
        g
    }
}

/// Set partitions as sorted lists of block bitmasks.
#[derive(Clone, Copy, Default)]
pub struct SetPartitions;

impl StructureFamily for SetPartitions {
    type Structure = Vec<u8>;

    fn name(&self) -> &str {
        "Part"
    }

    fn budget(&self) -> usize {
        6
    }

    fn enumerate(&self, n: usize) -> Vec<Vec<u8>> {
        fn grow(i: usize, n: usize, blocks: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
            if i == n {
                let mut sorted = blocks.clone();
                sorted.sort_unstable();
                out.push(sorted);
                return;
            }
            for b in 0..blocks.len() {
                blocks[b] |= 1 << i;
                grow(i + 1, n, blocks, out);
                blocks[b] &= !(1 << i);
            }
            blocks.push(1 << i);
            grow(i + 1, n, blocks, out);
            blocks.pop();
        }
        let mut out = Vec::new();
        grow(0, n, &mut Vec::new(), &mut out);
        out
    }

    fn act(&self, sigma: &Permutation, blocks: &Vec<u8>) -> Vec<u8> {
        let mut moved: Vec<u8> = blocks.iter().map(|&b| sigma.apply_mask(b)).collect();
        moved.sort_unstable();
        moved
    }
}
