use log::debug;

use super::{is_power_of, Elem, ElemSet, FiniteGroup, Subgroup, NONE};
use crate::error::{Error, Result};

/// A homomorphism from a subgroup of one group into another group.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupHom {
    domain: Subgroup,
    codomain: u64,
    /// `map[i]` is the image of `domain.members()[i]`.
    map: Vec<Elem>,
}

impl GroupHom {
    /// Validates `map` (indexed like `domain.members()`) as a homomorphism.
    pub fn new(source: &FiniteGroup, domain: Subgroup, target: &FiniteGroup, map: Vec<Elem>) -> Result<Self> {
        domain.check_parent(source)?;
        if map.len() != domain.order() {
            return Err(Error::InvalidInput(format!(
                "map has {} images for a domain of order {}",
                map.len(),
                domain.order()
            )));
        }
        if map.iter().any(|&y| y as usize >= target.order()) {
            return Err(Error::InvalidInput("image out of range".into()));
        }
        let gens = source.generating_subset(&domain);
        let at = |x: Elem| map[domain.position(x).expect("closed")];
        for &x in domain.members() {
            for &g in &gens {
                if at(source.mul(x, g)) != target.mul(at(x), at(g)) {
                    return Err(Error::InvalidInput(format!(
                        "map is not a homomorphism at ({x}, {g})"
                    )));
                }
            }
        }
        Ok(Self { domain, codomain: target.id(), map })
    }

    /// Extends `images` (pairs `(x, phi(x))`) to the homomorphism on the
    /// subgroup the `x` generate, validating the result.
    pub fn from_generator_images(source: &FiniteGroup, target: &FiniteGroup, images: &[(Elem, Elem)]) -> Result<Self> {
        let gens: Vec<Elem> = images.iter().map(|&(x, _)| x).collect();
        if gens.iter().any(|&x| x as usize >= source.order()) || images.iter().any(|&(_, y)| y as usize >= target.order()) {
            return Err(Error::InvalidInput("generator image out of range".into()));
        }
        let lay = layer(source, &gens);
        let mut dense = vec![NONE; source.order()];
        let imgs: Vec<Elem> = images.iter().map(|&(_, y)| y).collect();
        if !extend(source, &gens, &lay, &imgs, target, &mut dense) {
            return Err(Error::InvalidInput("generator images do not define a homomorphism".into()));
        }
        let mut members = lay.members;
        members.sort_unstable();
        let domain = Subgroup::from_sorted(source, members);
        let map = domain.members().iter().map(|&x| dense[x as usize]).collect();
        Self::new(source, domain, target, map)
    }

    pub(crate) fn from_parts(domain: Subgroup, codomain: u64, map: Vec<Elem>) -> Self {
        Self { domain, codomain, map }
    }

    pub fn domain(&self) -> &Subgroup {
        &self.domain
    }

    pub fn codomain_id(&self) -> u64 {
        self.codomain
    }

    pub fn images(&self) -> &[Elem] {
        &self.map
    }

    pub fn apply(&self, x: Elem) -> Option<Elem> {
        self.domain.position(x).map(|i| self.map[i])
    }

    pub fn image(&self, target: &FiniteGroup) -> Subgroup {
        let mut members = self.map.clone();
        members.sort_unstable();
        members.dedup();
        Subgroup::from_sorted(target, members)
    }

    pub fn kernel(&self, source: &FiniteGroup, target: &FiniteGroup) -> Subgroup {
        let members = self
            .domain
            .members()
            .iter()
            .zip(&self.map)
            .filter(|(_, &y)| y == target.identity())
            .map(|(&x, _)| x)
            .collect();
        Subgroup::from_sorted(source, members)
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = self.map.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len() == self.map.len()
    }

}

/// `<S>` closed under conjugation by `gens`.
pub(crate) fn normal_closure(g: &FiniteGroup, gens: &[Elem], seeds: &[Elem]) -> Subgroup {
    let mut h = g.subgroup_generated(seeds);
    loop {
        let extra: Vec<Elem> = g
            .generating_subset(&h)
            .iter()
            .flat_map(|&x| gens.iter().map(move |&c| (c, x)))
            .map(|(c, x)| g.conj(c, x))
            .filter(|&y| !h.contains(y))
            .collect();
        if extra.is_empty() {
            return h;
        }
        h = g.join(&h, &extra);
    }
}

/// Frattini subgroup of a `p`-subgroup `h`: generated by `p`-th powers and
/// commutators of generators, closed under conjugation.
pub(crate) fn frattini(g: &FiniteGroup, h: &Subgroup, p: u32) -> Subgroup {
    let gens = g.generating_subset(h);
    let mut seeds: Vec<Elem> = h.members().iter().map(|&x| g.pow(x, p as u64)).collect();
    for &a in &gens {
        for &b in &gens {
            seeds.push(g.commutator(a, b));
        }
    }
    seeds.sort_unstable();
    seeds.dedup();
    normal_closure(g, &gens, &seeds)
}

/// A generating set of `h`. For `p`-groups it has the minimum possible size
/// (the rank of the Frattini quotient); otherwise it is greedy.
pub fn minimal_generating_set(g: &FiniteGroup, h: &Subgroup) -> Vec<Elem> {
    let n = h.order();
    if n == 1 {
        return Vec::new();
    }
    let p = (2..=n).find(|d| n % d == 0).expect("n > 1");
    if !is_power_of(n, p) {
        return g.generating_subset(h);
    }
    let phi = frattini(g, h, p as u32);
    let mut chosen = Vec::new();
    let mut span = phi.clone();
    for &x in h.members().iter().rev() {
        if span.order() == n {
            break;
        }
        if !span.contains(x) {
            chosen.push(x);
            span = g.join(&span, &[x]);
        }
    }
    chosen
}

/// Breadth-first spanning tree of `<gens[..k]>` inside the source group.
struct Layer {
    /// (element, parent element, generator index); the root has no parent.
    tree: Vec<(Elem, Elem, usize)>,
    members: Vec<Elem>,
}

fn layer(g: &FiniteGroup, gens: &[Elem]) -> Layer {
    let mut seen = ElemSet::new(g.order());
    seen.insert(g.identity());
    let mut tree = vec![(g.identity(), NONE, usize::MAX)];
    let mut head = 0;
    while head < tree.len() {
        let x = tree[head].0;
        for (i, &s) in gens.iter().enumerate() {
            let y = g.mul(x, s);
            if seen.insert(y) {
                tree.push((y, x, i));
            }
        }
        head += 1;
    }
    let members = tree.iter().map(|t| t.0).collect();
    Layer { tree, members }
}

/// Extends generator images along the layer's tree and checks every edge.
fn extend(g: &FiniteGroup, gens: &[Elem], lay: &Layer, images: &[Elem], target: &FiniteGroup, dense: &mut [Elem]) -> bool {
    dense[g.identity() as usize] = target.identity();
    for &(x, parent, i) in &lay.tree[1..] {
        dense[x as usize] = target.mul(dense[parent as usize], images[i]);
    }
    lay.members.iter().all(|&x| {
        gens.iter().zip(images).all(|(&s, &t)| dense[g.mul(x, s) as usize] == target.mul(dense[x as usize], t))
    })
}

/// Every homomorphism `p -> s`, the trivial one included.
pub fn enumerate_homs(p: &FiniteGroup, s: &FiniteGroup) -> Result<Vec<GroupHom>> {
    enumerate_homs_from(p, &p.whole(), s, false)
}

/// All homomorphisms from `domain` (a subgroup of `source`) into `target`,
/// or only the injective ones.
pub fn enumerate_homs_from(source: &FiniteGroup, domain: &Subgroup, target: &FiniteGroup, injective_only: bool) -> Result<Vec<GroupHom>> {
    let mut out = Vec::new();
    for_each_hom(source, domain, target, injective_only, |hom| {
        out.push(hom);
        true
    })?;
    debug!("{} homomorphisms from a subgroup of order {}", out.len(), domain.order());
    Ok(out)
}

/// Visits homomorphisms `domain -> target` until `visit` returns false.
///
/// Backtracks over images of a minimal generating set, checking consistency
/// on each partial subgroup `<g_1, ..., g_k>` before descending.
pub(crate) fn for_each_hom(
    source: &FiniteGroup,
    domain: &Subgroup,
    target: &FiniteGroup,
    injective_only: bool,
    mut visit: impl FnMut(GroupHom) -> bool,
) -> Result<()> {
    domain.check_parent(source)?;
    let gens = minimal_generating_set(source, domain);
    let layers: Vec<Layer> = (0..=gens.len()).map(|k| layer(source, &gens[..k])).collect();
    let candidates: Vec<Vec<Elem>> = gens
        .iter()
        .map(|&s| {
            let n = source.element_order(s);
            target
                .elements()
                .filter(|&t| {
                    let m = target.element_order(t);
                    if injective_only { m == n } else { n % m == 0 }
                })
                .collect()
        })
        .collect();
    let search = Search { source, target, domain, gens: &gens, layers: &layers, candidates: &candidates, injective_only };
    let mut images = Vec::with_capacity(gens.len());
    let mut dense = vec![NONE; source.order()];
    search.descend(&mut images, &mut dense, &mut visit);
    Ok(())
}

struct Search<'a> {
    source: &'a FiniteGroup,
    target: &'a FiniteGroup,
    domain: &'a Subgroup,
    gens: &'a [Elem],
    /// `layers[k]` spans `<gens[..k]>`.
    layers: &'a [Layer],
    candidates: &'a [Vec<Elem>],
    injective_only: bool,
}

impl Search<'_> {
    /// Returns false once the visitor asks to stop.
    fn descend(&self, images: &mut Vec<Elem>, dense: &mut [Elem], visit: &mut impl FnMut(GroupHom) -> bool) -> bool {
        let k = images.len();
        if k == self.gens.len() {
            extend(self.source, self.gens, &self.layers[k], images, self.target, dense);
            let map: Vec<Elem> = self.domain.members().iter().map(|&x| dense[x as usize]).collect();
            let hom = GroupHom::from_parts(self.domain.clone(), self.target.id(), map);
            if !self.injective_only || hom.is_injective() {
                return visit(hom);
            }
            return true;
        }
        for &t in &self.candidates[k] {
            images.push(t);
            let ok = extend(self.source, &self.gens[..=k], &self.layers[k + 1], images, self.target, dense);
            let go_on = !ok || self.descend(images, dense, visit);
            images.pop();
            if !go_on {
                return false;
            }
        }
        true
    }
}
