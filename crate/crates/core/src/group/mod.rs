//! Concrete finite groups with dense element indices.
//!
//! Every group stores its elements as indices `0..order`. Small groups carry a
//! full multiplication table; larger ones keep the element objects (permutations,
//! matrices, semidirect pairs) and multiply on demand through a memoized lookup.

mod abelian;
mod build;
pub mod gf2k;
mod hom;
mod quotient;
pub mod spec;
mod subgroup;

use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::error::{Error, Result};

pub use build::{build_group, build_group_with, Caps, Closure};
pub use hom::{enumerate_homs, enumerate_homs_from, minimal_generating_set, GroupHom};
pub(crate) use hom::for_each_hom;
pub use quotient::Quotient;
pub use spec::GroupSpec;
pub use subgroup::Subgroup;

/// Index of an element inside its group.
pub type Elem = u32;

/// Marker for "no element" in dense partial maps.
pub(crate) const NONE: Elem = Elem::MAX;

/// Largest order for which a full multiplication table is materialized.
pub const TABLE_LIMIT: usize = 2048;

static NEXT_GROUP_ID: AtomicU64 = AtomicU64::new(1);

fn next_id() -> u64 {
    NEXT_GROUP_ID.fetch_add(1, Ordering::Relaxed)
}

pub(crate) type Compose<T> = Box<dyn Fn(&T, &T) -> T + Send + Sync>;

/// Element objects of a large group together with the index lookup.
pub(crate) struct Arena<T> {
    elements: Vec<T>,
    index: HashMap<T, Elem>,
    compose: Compose<T>,
}

pub(crate) trait ElementArena: Send + Sync {
    fn mul(&self, a: Elem, b: Elem) -> Elem;
}

impl<T: Eq + Hash + Send + Sync> ElementArena for Arena<T> {
    fn mul(&self, a: Elem, b: Elem) -> Elem {
        let prod = (self.compose)(&self.elements[a as usize], &self.elements[b as usize]);
        *self
            .index
            .get(&prod)
            .expect("product of group elements left the enumerated group")
    }
}

#[derive(Clone)]
enum Multiplication {
    Table(Arc<Vec<Elem>>),
    Arena(Arc<dyn ElementArena>),
}

/// A finite group with elements `0..order`.
///
/// Element indices are stable for the lifetime of the value; [`Subgroup`] and
/// [`GroupHom`] refer to them, tagged with the group's identity number.
#[derive(Clone)]
pub struct FiniteGroup {
    id: u64,
    label: String,
    prime_hint: Option<u32>,
    order: usize,
    identity: Elem,
    inverse: Arc<Vec<Elem>>,
    generators: Vec<Elem>,
    mul: Multiplication,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("label", &self.label)
            .field("order", &self.order)
            .field("generators", &self.generators)
            .finish()
    }
}

impl PartialEq for FiniteGroup {
    /// Two groups are equal when they have the same elements and the same
    /// multiplication, index for index.
    fn eq(&self, other: &Self) -> bool {
        if self.id == other.id {
            return true;
        }
        self.order == other.order
            && self.identity == other.identity
            && self
                .elements()
                .all(|a| self.elements().all(|b| self.mul(a, b) == other.mul(a, b)))
    }
}

impl FiniteGroup {
    /// Builds a group from an explicit multiplication table, validating the
    /// group axioms (Latin square, two-sided identity, associativity).
    pub fn from_table(label: impl Into<String>, table: Vec<Vec<Elem>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::InvalidSpec("empty multiplication table".into()));
        }
        if n > TABLE_LIMIT {
            return Err(Error::cap("explicit multiplication table", TABLE_LIMIT));
        }
        let mut flat = Vec::with_capacity(n * n);
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidSpec(format!("row {i} has length {}", row.len())));
            }
            let mut seen = vec![false; n];
            for &x in row {
                if x as usize >= n || std::mem::replace(&mut seen[x as usize], true) {
                    return Err(Error::InvalidSpec(format!("row {i} is not a permutation")));
                }
            }
            flat.extend_from_slice(row);
        }
        for j in 0..n {
            let mut seen = vec![false; n];
            for i in 0..n {
                if std::mem::replace(&mut seen[flat[i * n + j] as usize], true) {
                    return Err(Error::InvalidSpec(format!("column {j} is not a permutation")));
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| flat[e * n + x] as usize == x && flat[x * n + e] as usize == x))
            .ok_or_else(|| Error::InvalidSpec("table has no two-sided identity".into()))?
            as Elem;
        let group = Self::from_flat_table(label.into(), identity, flat, Vec::new());
        group.check_associativity()?;
        let generators = group.greedy_generators();
        Ok(Self { generators, ..group })
    }

    /// Rebuilds a group from a table this crate produced earlier. Only the
    /// shape is checked.
    pub fn from_table_trusted(label: impl Into<String>, table: Vec<Vec<Elem>>, generators: Vec<Elem>) -> Result<Self> {
        let n = table.len();
        if n == 0 || table.iter().any(|r| r.len() != n || r.iter().any(|&x| x as usize >= n)) {
            return Err(Error::Parse("stored multiplication table is malformed".into()));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] as usize == x))
            .ok_or_else(|| Error::Parse("stored table has no identity".into()))? as Elem;
        let flat = table.into_iter().flatten().collect();
        Ok(Self::from_flat_table(label.into(), identity, flat, generators))
    }

    /// Trusted constructor: the table is already known to define a group.
    pub(crate) fn from_flat_table(
        label: String,
        identity: Elem,
        flat: Vec<Elem>,
        generators: Vec<Elem>,
    ) -> Self {
        let n = (flat.len() as f64).sqrt() as usize;
        debug_assert_eq!(n * n, flat.len());
        let mut inverse = vec![NONE; n];
        for x in 0..n {
            for y in 0..n {
                if flat[x * n + y] == identity {
                    inverse[x] = y as Elem;
                    break;
                }
            }
        }
        Self {
            id: next_id(),
            label,
            prime_hint: None,
            order: n,
            identity,
            inverse: Arc::new(inverse),
            generators,
            mul: Multiplication::Table(Arc::new(flat)),
        }
    }

    pub(crate) fn from_arena<T>(label: String, arena: Arena<T>, generators: Vec<Elem>) -> Self
    where
        T: Eq + Hash + Send + Sync + 'static,
    {
        let n = arena.elements.len();
        let arena: Arc<dyn ElementArena> = Arc::new(arena);
        let mut group = Self {
            id: next_id(),
            label,
            prime_hint: None,
            order: n,
            identity: 0,
            inverse: Arc::new(Vec::new()),
            generators,
            mul: Multiplication::Arena(arena),
        };
        let inverse = (0..n as Elem)
            .map(|x| {
                let k = group.element_order(x);
                group.pow(x, k as u64 - 1)
            })
            .collect();
        group.inverse = Arc::new(inverse);
        group
    }

    /// Process-unique identity of this group's element indexing.
    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn prime_hint(&self) -> Option<u32> {
        self.prime_hint
    }

    pub fn with_prime_hint(mut self, p: u32) -> Self {
        self.prime_hint = Some(p);
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> Elem {
        self.identity
    }

    /// Generators recorded at construction (spec generators, or a greedy set).
    pub fn generators(&self) -> &[Elem] {
        &self.generators
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + Clone {
        0..self.order as Elem
    }

    pub fn has_table(&self) -> bool {
        matches!(self.mul, Multiplication::Table(_))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        match &self.mul {
            Multiplication::Table(t) => t[a as usize * self.order + b as usize],
            Multiplication::Arena(arena) => arena.mul(a, b),
        }
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.inverse[a as usize]
    }

    pub fn pow(&self, a: Elem, mut k: u64) -> Elem {
        let mut base = a;
        let mut acc = self.identity;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// Conjugate `g x g^-1`.
    #[inline]
    pub fn conj(&self, g: Elem, x: Elem) -> Elem {
        self.mul(self.mul(g, x), self.inv(g))
    }

    /// Commutator `[a, b] = a^-1 b^-1 a b`.
    pub fn commutator(&self, a: Elem, b: Elem) -> Elem {
        let ab = self.mul(a, b);
        let ba = self.mul(b, a);
        self.mul(self.inv(ba), ab)
    }

    /// Least `n >= 1` with `x^n = e`.
    pub fn element_order(&self, x: Elem) -> usize {
        assert!((x as usize) < self.order, "element {x} out of range for group of order {}", self.order);
        let mut y = x;
        let mut n = 1;
        while y != self.identity {
            y = self.mul(y, x);
            n += 1;
        }
        n
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> usize {
        self.elements().map(|x| self.element_order(x)).fold(1, lcm)
    }

    pub fn is_abelian(&self) -> bool {
        let gens = if self.generators.is_empty() {
            self.elements().collect::<Vec<_>>()
        } else {
            self.generators.clone()
        };
        gens.iter()
            .all(|&a| gens.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// True when the order is a power of `p` (the trivial group counts).
    pub fn is_p_group(&self, p: u32) -> bool {
        is_power_of(self.order, p as usize)
    }

    /// Checks the group axioms: associativity (exhaustive up to order 512,
    /// 100 000 seeded random triples above), two-sided identity and inverses.
    pub fn verify_axioms(&self) -> Result<()> {
        for x in self.elements() {
            if self.mul(x, self.identity) != x || self.mul(self.identity, x) != x {
                return Err(Error::Internal(format!("identity fails on {x}")));
            }
            let y = self.inv(x);
            if self.mul(x, y) != self.identity || self.mul(y, x) != self.identity {
                return Err(Error::Internal(format!("inverse fails on {x}")));
            }
        }
        self.check_associativity()
    }

    fn check_associativity(&self) -> Result<()> {
        let n = self.order as Elem;
        let bad = |a, b, c| {
            Error::InvalidSpec(format!("multiplication is not associative on ({a}, {b}, {c})"))
        };
        if self.order <= 512 {
            for a in 0..n {
                for b in 0..n {
                    let ab = self.mul(a, b);
                    for c in 0..n {
                        if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                            return Err(bad(a, b, c));
                        }
                    }
                }
            }
        } else {
            let mut rng = StdRng::seed_from_u64(0x5eed_f00d);
            for _ in 0..100_000 {
                let (a, b, c) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
                if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                    return Err(bad(a, b, c));
                }
            }
        }
        Ok(())
    }

    /// Greedy generating set: scan elements by decreasing order, keep each one
    /// that is not already in the span of the kept ones.
    pub(crate) fn greedy_generators(&self) -> Vec<Elem> {
        let mut candidates: Vec<Elem> = self.elements().collect();
        candidates.sort_by_key(|&x| (std::cmp::Reverse(self.element_order(x)), x));
        let mut gens = Vec::new();
        let mut span = self.trivial_subgroup();
        for x in candidates {
            if span.order() == self.order {
                break;
            }
            if !span.contains(x) {
                gens.push(x);
                span = self.subgroup_generated(&gens);
            }
        }
        gens
    }

    /// Full multiplication table, row-major. Only for groups up to [`TABLE_LIMIT`].
    pub fn table(&self) -> Result<Vec<Vec<Elem>>> {
        if self.order > TABLE_LIMIT {
            return Err(Error::cap(format!("table of {}", self.label), TABLE_LIMIT));
        }
        Ok(self
            .elements()
            .map(|a| self.elements().map(|b| self.mul(a, b)).collect())
            .collect())
    }
}

pub(crate) fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub(crate) fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

pub(crate) fn is_power_of(mut n: usize, p: usize) -> bool {
    if p < 2 {
        return n == 1;
    }
    while n % p == 0 {
        n /= p;
    }
    n == 1
}

/// Largest power of `p` dividing `n`.
pub(crate) fn p_part(mut n: usize, p: usize) -> usize {
    let mut part = 1;
    while n % p == 0 {
        n /= p;
        part *= p;
    }
    part
}

pub fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// Dense membership set over the elements of a group.
#[derive(Clone)]
pub(crate) struct ElemSet {
    bits: Vec<u64>,
}

impl ElemSet {
    pub(crate) fn new(n: usize) -> Self {
        Self {
            bits: vec![0; n.div_ceil(64)],
        }
    }

    pub(crate) fn from_slice(n: usize, xs: &[Elem]) -> Self {
        let mut s = Self::new(n);
        for &x in xs {
            s.insert(x);
        }
        s
    }

    #[inline]
    pub(crate) fn contains(&self, x: Elem) -> bool {
        self.bits[x as usize >> 6] >> (x & 63) & 1 == 1
    }

    /// Returns true when `x` was not present before.
    #[inline]
    pub(crate) fn insert(&mut self, x: Elem) -> bool {
        let word = &mut self.bits[x as usize >> 6];
        let mask = 1u64 << (x & 63);
        let fresh = *word & mask == 0;
        *word |= mask;
        fresh
    }
}
