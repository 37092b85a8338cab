//! Gallery graphs and seeded generators for members of the eleven classes.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::pattern::{clique_number, is_p5_gem_free};
use crate::reductions::{find_copycat, find_d1_catalog};
use crate::structure::{expand, BagPartition, NodeRole, Template, TemplateId};

/// Five triangles in a cycle, consecutive triangles completely joined.
pub fn gallery_g1() -> Graph {
    expand(&Template::new(TemplateId::G1), &[3; 5].map(Graph::complete), &[]).0
}

/// `K_{t-4}` joined to a five-cycle; the cycle occupies the last five indices.
pub fn gallery_g2(t: usize) -> Result<Graph> {
    if t < 9 {
        return Err(Error::InvalidSpec(format!("gallery G2 needs t >= 9, got {t}")));
    }
    Ok(Graph::complete(t - 4).join(&Graph::cycle(5)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BagMode {
    Clique,
    Cograph,
}

/// Largest bag (or pendant component) allowed in cograph mode.
pub const MAX_COGRAPH_BAG: usize = 5;

/// Recipe for a class member. For `H`, `sizes` covers `A1..A6` and `pendant`
/// lists the sizes of the `A7` components; other templates leave `pendant` empty.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenSpec {
    pub class: TemplateId,
    pub sizes: Vec<usize>,
    pub mode: BagMode,
    pub seed: u64,
    #[serde(default)]
    pub pendant: Vec<usize>,
}

impl GenSpec {
    pub fn validate(&self) -> Result<()> {
        let t = Template::new(self.class);
        let expected = if t.pendant().is_some() { t.len() - 1 } else { t.len() };
        let bad = |m: String| Err(Error::InvalidSpec(m));
        if self.sizes.len() != expected {
            return bad(format!("{} needs {expected} bag sizes, got {}", self.class, self.sizes.len()));
        }
        if t.pendant().is_some() == self.pendant.is_empty() {
            return bad(format!("pendant component sizes are required exactly for H, got {:?}", self.pendant));
        }
        let all = self.sizes.iter().chain(&self.pendant);
        if all.clone().any(|&s| s == 0) {
            return bad("bag sizes must be positive".into());
        }
        if self.mode == BagMode::Cograph && all.clone().any(|&s| s > MAX_COGRAPH_BAG) {
            return bad(format!("cograph bags hold at most {MAX_COGRAPH_BAG} vertices"));
        }
        Ok(())
    }
}

const COGRAPH_RETRIES: u64 = 200;

/// Builds the member described by `spec` with vertex indices shuffled by the
/// seed, together with its ground-truth bags.
pub fn gen_class_instance(spec: &GenSpec) -> Result<(Graph, BagPartition)> {
    spec.validate()?;
    let template = Template::new(spec.class);
    let tries = if spec.mode == BagMode::Clique { 1 } else { COGRAPH_RETRIES };
    for attempt in 0..tries {
        let mut rng = ChaCha8Rng::seed_from_u64(spec.seed.wrapping_add(attempt.wrapping_mul(0x9E37_79B9_7F4A_7C15)));
        let (g, bags) = build(&template, spec, &mut rng);
        if spec.mode == BagMode::Clique || is_p5_gem_free(&g).is_ok() {
            return Ok(shuffle(&g, &bags, &mut rng));
        }
    }
    Err(Error::GenerationExhausted(format!("no (P5, gem)-free cograph expansion for {spec:?}")))
}

fn build(template: &Template, spec: &GenSpec, rng: &mut ChaCha8Rng) -> (Graph, BagPartition) {
    let bag = |size: usize, connected: bool, rng: &mut ChaCha8Rng| match spec.mode {
        BagMode::Clique => Graph::complete(size),
        BagMode::Cograph => random_cograph(size, connected, rng),
    };
    let mut bag_graphs: Vec<Graph> = spec.sizes.iter().map(|&s| bag(s, false, rng)).collect();
    let mut links = Vec::new();
    if template.pendant().is_some() {
        let hub = template.roles.iter().position(|&r| r == NodeRole::HubA6).expect("hub exists");
        let hub_size = spec.sizes[hub];
        let comps: Vec<Graph> = spec.pendant.iter().map(|&s| bag(s, true, rng)).collect();
        let mut pendant = Graph::empty(0);
        for c in &comps {
            pendant = pendant.disjoint_union(c);
        }
        bag_graphs.push(pendant);
        // nested prefixes of the hub keep the attachments gem-free
        links = comps.iter().map(|_| (0..rng.gen_range(1..=hub_size)).collect()).collect();
    }
    expand(template, &bag_graphs, &links)
}

/// Random cograph on `n` vertices from a union/join tree; `connected` forces a join at the root.
pub fn random_cograph(n: usize, connected: bool, rng: &mut impl Rng) -> Graph {
    if n <= 1 {
        return Graph::complete(n);
    }
    let parts = rng.gen_range(2..=n.min(3));
    let mut cuts: Vec<usize> = (1..n).collect();
    cuts.shuffle(rng);
    let mut cuts: Vec<usize> = cuts[..parts - 1].to_vec();
    cuts.sort_unstable();
    let mut sizes = Vec::new();
    let mut last = 0;
    for c in cuts.into_iter().chain([n]) {
        sizes.push(c - last);
        last = c;
    }
    let join = connected || rng.gen_bool(0.5);
    let mut g = Graph::empty(0);
    for s in sizes {
        let child = random_cograph(s, false, rng);
        g = if join { g.join(&child) } else { g.disjoint_union(&child) };
    }
    g
}

fn shuffle(g: &Graph, bags: &BagPartition, rng: &mut ChaCha8Rng) -> (Graph, BagPartition) {
    let mut perm: Vec<usize> = (0..g.n()).collect();
    perm.shuffle(rng);
    let edges: Vec<(usize, usize)> = g.edges().into_iter().map(|(u, v)| (perm[u], perm[v])).collect();
    (Graph::new(g.n(), &edges).expect("permuted edges are valid"), bags.remap(&perm))
}

const TARGET_ATTEMPTS: usize = 20_000;
const MAX_INSTANCE_N: usize = 40;

/// Searches bag sizes (and seeds) for a member of `skeleton.class` in
/// `skeleton.mode` with maximum degree `target`, `ω ≤ target - 1` and at most 40 vertices.
pub fn gen_target_delta(skeleton: &GenSpec, target: usize, seed: u64) -> Result<GenSpec> {
    if !(8..=12).contains(&target) {
        return Err(Error::InvalidSpec(format!("target Delta must lie in 8..=12, got {target}")));
    }
    let template = Template::new(skeleton.class);
    let hub = template.pendant().map(|_| template.len() - 1);
    let bags = hub.unwrap_or(template.len());
    let cap = match skeleton.mode {
        BagMode::Clique => 8,
        BagMode::Cograph => MAX_COGRAPH_BAG,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..TARGET_ATTEMPTS {
        let top = rng.gen_range(2..=cap);
        let sizes: Vec<usize> = (0..bags).map(|_| rng.gen_range(1..=top)).collect();
        let pendant: Vec<usize> = match hub {
            Some(_) => (0..rng.gen_range(1..=3)).map(|_| rng.gen_range(1..=top.min(4))).collect(),
            None => Vec::new(),
        };
        let n: usize = sizes.iter().chain(&pendant).sum();
        if n > MAX_INSTANCE_N {
            continue;
        }
        let spec = GenSpec { class: skeleton.class, sizes, mode: skeleton.mode, seed: rng.gen(), pendant };
        let Ok((g, _)) = gen_class_instance(&spec) else { continue };
        if g.max_degree() == target && clique_number(&g).0 < target {
            return Ok(spec);
        }
    }
    Err(Error::GenerationExhausted(format!(
        "no {} member with Delta = {target} found in {TARGET_ATTEMPTS} attempts",
        skeleton.class
    )))
}

/// All bag-size vectors (entries `1..=max_bag`) whose clique expansion of a
/// G-template has `Δ = 9`, `δ ≥ 8`, `ω ≤ 8` and neither a copycat pair nor a
/// catalog shape. Degrees are pruned from the template before any graph is built.
pub fn irreducible_clique_expansions(class: TemplateId, max_bag: usize) -> Vec<Vec<usize>> {
    let template = Template::new(class);
    assert!(template.pendant().is_none(), "the pendant template is sampled, not enumerated");
    let k = template.len();
    let mut out = Vec::new();
    let mut sizes = vec![0usize; k];
    enumerate(&template, 0, max_bag, &mut sizes, &mut out);
    out
}

fn degree_bounds(t: &Template, sizes: &[usize], v: usize) -> (usize, usize) {
    // (lower bound, exact-if-complete) on the degree of a bag-v vertex; unassigned bags count as 1
    let mut lo = sizes[v].max(1) - 1;
    for &w in t.graph.neighbors(v) {
        lo += sizes[w].max(1);
    }
    (lo, lo)
}

fn enumerate(t: &Template, i: usize, max_bag: usize, sizes: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    let k = t.len();
    if i == k {
        let degs: Vec<usize> = (0..k).map(|v| degree_bounds(t, sizes, v).0).collect();
        if degs.iter().any(|&d| d < 8) || degs.iter().all(|&d| d != 9) {
            return;
        }
        let (g, _) = expand(t, &sizes.iter().map(|&s| Graph::complete(s)).collect::<Vec<_>>(), &[]);
        if clique_number(&g).0 <= 8 && find_copycat(&g).is_none() && find_d1_catalog(&g).is_none() {
            out.push(sizes.clone());
        }
        return;
    }
    for s in 1..=max_bag {
        sizes[i] = s;
        // every bag touching an assigned bag must keep degree <= 9
        let touched = std::iter::once(i).chain(t.graph.neighbors(i).iter().copied());
        if touched.clone().all(|v| degree_bounds(t, sizes, v).0 <= 9) {
            enumerate(t, i + 1, max_bag, sizes, out);
        } else {
            break;
        }
    }
    sizes[i] = 0;
}

/// Random search for irreducible starred members of the pendant class with
/// `Δ = 9`: clique bags `A1..A5`, a cograph hub and clique pendant components.
pub fn sample_irreducible_pendant(seed: u64, attempts: usize) -> Vec<(Graph, BagPartition)> {
    let template = Template::new(TemplateId::H);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for _ in 0..attempts {
        let mut bag_graphs: Vec<Graph> = (0..5).map(|_| Graph::complete(rng.gen_range(1..=7))).collect();
        bag_graphs.push(random_cograph(rng.gen_range(1..=5), false, &mut rng));
        let comps: Vec<usize> = (0..rng.gen_range(1..=3)).map(|_| rng.gen_range(1..=6)).collect();
        let mut pendant = Graph::empty(0);
        for &c in &comps {
            pendant = pendant.disjoint_union(&Graph::complete(c));
        }
        bag_graphs.push(pendant);
        let hub_size = bag_graphs[5].n();
        let links: Vec<Vec<usize>> = comps.iter().map(|_| (0..rng.gen_range(1..=hub_size)).collect()).collect();
        let (g, bags) = expand(&template, &bag_graphs, &links);
        if g.max_degree() != 9 || g.min_degree() < 8 || clique_number(&g).0 > 8 {
            continue;
        }
        if is_p5_gem_free(&g).is_ok() && find_copycat(&g).is_none() && find_d1_catalog(&g).is_none() {
            out.push((g, bags));
        }
    }
    out
}
