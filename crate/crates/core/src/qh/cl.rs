use std::collections::{BTreeMap, HashMap, VecDeque};

use num_rational::BigRational;

use super::group::{index_elements, FiniteGroup, Group};
use super::QhError;

/// Minimal commutator length of an element with a witness: the product of
/// `[x_i, y_i]` over `witness` (left to right) equals `element`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClRecord<E> {
    pub element: E,
    pub cl: usize,
    pub witness: Vec<(E, E)>,
}

/// Product of the commutators `[x, y]` of a witness, left to right.
pub fn witness_product<G: Group>(group: &G, witness: &[(G::Elem, G::Elem)]) -> G::Elem {
    witness
        .iter()
        .fold(group.identity(), |acc, (x, y)| group.op(&acc, &group.commutator(x, y)))
}

/// Breadth-first distances from the identity in the Cayley graph of the
/// commutator subgroup with respect to the set of single commutators.
#[derive(Clone, Debug)]
pub struct CommutatorLengths<G: FiniteGroup> {
    group: G,
    elems: Vec<G::Elem>,
    index: HashMap<G::Elem, usize>,
    /// Distinct commutator values with the first pair producing each.
    commutators: Vec<(usize, usize, usize)>,
    dist: Vec<Option<u32>>,
    parent: Vec<Option<(usize, usize)>>,
}

impl<G: FiniteGroup + Clone> CommutatorLengths<G> {
    /// Enumerate all commutators, then run the search. Fails when the group
    /// has more than `cap` elements.
    pub fn new(group: &G, cap: u128) -> Result<Self, QhError> {
        let (elems, index) = index_elements(group, cap)?;
        let n = elems.len();
        let mut first: Vec<Option<(usize, usize)>> = vec![None; n];
        for (i, x) in elems.iter().enumerate() {
            for (j, y) in elems.iter().enumerate() {
                let c = index[&group.commutator(x, y)];
                if first[c].is_none() {
                    first[c] = Some((i, j));
                }
            }
        }
        let commutators: Vec<(usize, usize, usize)> = first
            .iter()
            .enumerate()
            .filter_map(|(c, p)| p.map(|(i, j)| (c, i, j)))
            .collect();
        let mut dist = vec![None; n];
        let mut parent = vec![None; n];
        let id = index[&group.identity()];
        dist[id] = Some(0);
        let mut queue = VecDeque::from([id]);
        while let Some(cur) = queue.pop_front() {
            let d = dist[cur].expect("queued elements have a distance");
            for (slot, &(c, _, _)) in commutators.iter().enumerate() {
                let next = index[&group.op(&elems[cur], &elems[c])];
                if dist[next].is_none() {
                    dist[next] = Some(d + 1);
                    parent[next] = Some((cur, slot));
                    queue.push_back(next);
                }
            }
        }
        Ok(Self {
            group: group.clone(),
            elems,
            index,
            commutators,
            dist,
            parent,
        })
    }

    pub fn group(&self) -> &G {
        &self.group
    }

    /// Order of `[G, G]`.
    pub fn subgroup_order(&self) -> usize {
        self.dist.iter().filter(|d| d.is_some()).count()
    }

    /// Number of distinct single commutators (the identity included).
    pub fn commutator_count(&self) -> usize {
        self.commutators.len()
    }

    pub fn contains(&self, g: &G::Elem) -> bool {
        self.index.get(g).is_some_and(|&i| self.dist[i].is_some())
    }

    /// Number of elements of `[G, G]` at each commutator length.
    pub fn histogram(&self) -> BTreeMap<u32, usize> {
        let mut h = BTreeMap::new();
        for d in self.dist.iter().flatten() {
            *h.entry(*d).or_insert(0) += 1;
        }
        h
    }

    /// Largest commutator length in the group.
    pub fn max_cl(&self) -> u32 {
        self.dist.iter().flatten().copied().max().unwrap_or(0)
    }

    pub fn cl(&self, target: &G::Elem) -> Result<ClRecord<G::Elem>, QhError> {
        let render = || self.group.render(target);
        let &t = self
            .index
            .get(target)
            .ok_or_else(|| QhError::Parse(format!("{} is not a group element", render())))?;
        let d = self.dist[t].ok_or_else(|| QhError::NotInCommutatorSubgroup(render()))?;
        let mut witness = Vec::with_capacity(d as usize);
        let mut cur = t;
        while let Some((prev, slot)) = self.parent[cur] {
            let (_, i, j) = self.commutators[slot];
            witness.push((self.elems[i].clone(), self.elems[j].clone()));
            cur = prev;
        }
        witness.reverse();
        Ok(ClRecord {
            element: target.clone(),
            cl: d as usize,
            witness,
        })
    }
}

/// [`CommutatorLengths::cl`] for a single element.
pub fn cl_exact<G: FiniteGroup + Clone>(group: &G, target: &G::Elem, cap: u128) -> Result<ClRecord<G::Elem>, QhError> {
    CommutatorLengths::new(group, cap)?.cl(target)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SclEstimate {
    /// `min cl(g^n) / n` over the qualifying `n`.
    pub value: BigRational,
    pub best_n: u64,
    /// `cl(g^n)` for `n = 1..=n_max`, `None` when `g^n` is outside `[G, G]`.
    pub samples: Vec<(u64, Option<usize>)>,
}

/// `min_{1 <= n <= n_max} cl(g^n) / n`, skipping powers outside `[G, G]`.
pub fn scl_estimate<G: FiniteGroup + Clone>(
    lengths: &CommutatorLengths<G>,
    g: &G::Elem,
    n_max: u64,
) -> Result<SclEstimate, QhError> {
    let group = lengths.group();
    let mut best: Option<(BigRational, u64)> = None;
    let mut samples = Vec::new();
    let mut power = group.identity();
    for n in 1..=n_max {
        power = group.op(&power, g);
        let cl = if lengths.contains(&power) {
            Some(lengths.cl(&power)?.cl)
        } else {
            None
        };
        if let Some(c) = cl {
            let v = BigRational::new((c as u64).into(), n.into());
            if best.as_ref().is_none_or(|(b, _)| v < *b) {
                best = Some((v, n));
            }
        }
        samples.push((n, cl));
    }
    let (value, best_n) = best.ok_or(QhError::NoQualifyingPower { n_max })?;
    Ok(SclEstimate { value, best_n, samples })
}

/// The first `t` in enumeration order with `t g t^-1 = g^-1`.
pub fn is_conjugate_to_inverse<G: FiniteGroup>(group: &G, g: &G::Elem, cap: u128) -> Result<Option<G::Elem>, QhError> {
    let size = group.order();
    if size > cap {
        return Err(QhError::CapExceeded { size, cap });
    }
    let target = group.inv(g);
    Ok(group
        .elements()
        .into_iter()
        .find(|t| group.op(&group.op(t, g), &group.inv(t)) == target))
}
