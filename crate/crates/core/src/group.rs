//! Finite groups as verified multiplication tables.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Wire format for a group: permutation generators in cycle notation, or an
/// explicit Cayley table. Kept verbatim so that serializing a parsed group
/// reproduces its input.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged, deny_unknown_fields)]
pub enum GroupSpec {
    Permutations {
        degree: usize,
        /// Each generator is a list of cycles.
        generators: Vec<Vec<Vec<usize>>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        labels: Option<Vec<String>>,
    },
    Table {
        table: Vec<Vec<usize>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        labels: Option<Vec<String>>,
    },
}

impl GroupSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("group spec serializes")
    }

    pub fn build(&self) -> Result<FiniteGroup> {
        match self {
            GroupSpec::Permutations { degree, generators, labels } => {
                let images = generators
                    .iter()
                    .enumerate()
                    .map(|(i, cycles)| cycles_to_images(*degree, cycles).ok_or(Error::NotBijection { index: i, degree: *degree }))
                    .collect::<Result<Vec<_>>>()?;
                let mut g = FiniteGroup::from_permutations(*degree, &images)?;
                g.set_labels(labels.clone())?;
                g.spec = self.clone();
                Ok(g)
            }
            GroupSpec::Table { table, labels } => {
                let mut g = FiniteGroup::from_table(table)?;
                g.set_labels(labels.clone())?;
                g.spec = self.clone();
                Ok(g)
            }
        }
    }
}

/// Images of a permutation given as disjoint cycles; `None` if a point is
/// out of range or repeated.
pub fn cycles_to_images(degree: usize, cycles: &[Vec<usize>]) -> Option<Vec<usize>> {
    let mut img: Vec<usize> = (0..degree).collect();
    let mut seen = vec![false; degree];
    for c in cycles {
        for &p in c {
            if p >= degree || seen[p] {
                return None;
            }
            seen[p] = true;
        }
        for (k, &p) in c.iter().enumerate() {
            img[p] = c[(k + 1) % c.len()];
        }
    }
    Some(img)
}

/// Disjoint-cycle notation of a permutation, fixed points omitted.
pub fn images_to_cycles(img: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; img.len()];
    let mut out = Vec::new();
    for start in 0..img.len() {
        if seen[start] || img[start] == start {
            continue;
        }
        let mut c = vec![start];
        seen[start] = true;
        let mut p = img[start];
        while p != start {
            seen[p] = true;
            c.push(p);
            p = img[p];
        }
        out.push(c);
    }
    out
}

/// A finite group with an exhaustively verified multiplication table.
#[derive(Clone)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
    generators: Vec<usize>,
    labels: Option<Vec<String>>,
    /// Degree and per-element images, for groups built from permutations.
    permutations: Option<(usize, Vec<Vec<usize>>)>,
    spec: GroupSpec,
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.table == other.table
    }
}

impl Eq for FiniteGroup {}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("order", &self.order)
            .field("generators", &self.generators)
            .finish()
    }
}

impl FiniteGroup {
    /// Close the generators under composition. Composition is `(p*q)(x) =
    /// p(q(x))`; elements are numbered in breadth-first order from the
    /// identity, multiplying by generators on the right.
    pub fn from_permutations(degree: usize, generators: &[Vec<usize>]) -> Result<Self> {
        for (i, g) in generators.iter().enumerate() {
            let mut seen = vec![false; degree];
            if g.len() != degree || g.iter().any(|&x| x >= degree || std::mem::replace(&mut seen[x], true)) {
                return Err(Error::NotBijection { index: i, degree });
            }
        }
        let compose = |p: &[usize], q: &[usize]| -> Vec<usize> { q.iter().map(|&x| p[x]).collect() };
        let id: Vec<usize> = (0..degree).collect();
        let mut elems = vec![id.clone()];
        let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(id, 0)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for s in generators {
                let y = compose(&elems[x], s);
                if !index.contains_key(&y) {
                    index.insert(y.clone(), elems.len());
                    queue.push_back(elems.len());
                    elems.push(y);
                }
            }
        }
        let n = elems.len();
        let mut table = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                table[a * n + b] = index[&compose(&elems[a], &elems[b])];
            }
        }
        let gen_idx = generators.iter().map(|s| index[s]).collect();
        let mut g = Self::validated(table, n, gen_idx)?;
        g.permutations = Some((degree, elems));
        g.spec = GroupSpec::Permutations {
            degree,
            generators: generators.iter().map(|s| images_to_cycles(s)).collect(),
            labels: None,
        };
        Ok(g)
    }

    /// Group from a Cayley table `table[a][b] = a*b`. Identity, inverses and
    /// associativity are checked exhaustively.
    pub fn from_table(table: &[Vec<usize>]) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::InvalidGroup("empty table".into()));
        }
        let mut flat = Vec::with_capacity(n * n);
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidGroup(format!("row {i} has length {}, expected {n}", row.len())));
            }
            if let Some(&bad) = row.iter().find(|&&x| x >= n) {
                return Err(Error::InvalidGroup(format!("entry {bad} out of range in row {i}")));
            }
            flat.extend_from_slice(row);
        }
        let mut g = Self::validated(flat, n, Vec::new())?;
        g.generators = g.greedy_generators(&(0..n).collect::<Vec<_>>());
        g.spec = GroupSpec::Table { table: table.to_vec(), labels: None };
        Ok(g)
    }

    fn validated(table: Vec<usize>, n: usize, generators: Vec<usize>) -> Result<Self> {
        let mul = |a: usize, b: usize| table[a * n + b];
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| mul(e, x) == x && mul(x, e) == x))
            .ok_or_else(|| Error::InvalidGroup("no identity element".into()))?;
        let mut inverse = vec![0; n];
        for x in 0..n {
            inverse[x] = (0..n)
                .find(|&y| mul(x, y) == identity && mul(y, x) == identity)
                .ok_or_else(|| Error::InvalidGroup(format!("element {x} has no inverse")))?;
        }
        for a in 0..n {
            for b in 0..n {
                let ab = mul(a, b);
                for c in 0..n {
                    if mul(ab, c) != mul(a, mul(b, c)) {
                        return Err(Error::InvalidGroup(format!("not associative at ({a}, {b}, {c})")));
                    }
                }
            }
        }
        Ok(FiniteGroup {
            order: n,
            table,
            identity,
            inverse,
            generators,
            labels: None,
            permutations: None,
            spec: GroupSpec::Table { table: Vec::new(), labels: None },
        })
    }

    /// Walk `candidates` in order, keeping each one not already generated.
    fn greedy_generators(&self, candidates: &[usize]) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut closure: BTreeSet<usize> = BTreeSet::from([self.identity]);
        for &x in candidates {
            if !closure.contains(&x) {
                gens.push(x);
                closure = self.closure(&gens);
            }
        }
        gens
    }

    fn closure(&self, elems: &[usize]) -> BTreeSet<usize> {
        let mut set = BTreeSet::from([self.identity]);
        let mut queue: VecDeque<usize> = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for &s in elems {
                let y = self.mul(x, s);
                if set.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        set
    }

    fn set_labels(&mut self, labels: Option<Vec<String>>) -> Result<()> {
        if let Some(l) = &labels {
            if l.len() != self.order {
                return Err(Error::InvalidGroup(format!("{} labels for a group of order {}", l.len(), self.order)));
            }
        }
        self.labels = labels;
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// `x * y * x⁻¹`.
    pub fn conjugate(&self, x: usize, y: usize) -> usize {
        self.mul(self.mul(x, y), self.inv(x))
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    /// Generators that representations are specified on.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn permutation_degree(&self) -> Option<usize> {
        self.permutations.as_ref().map(|(d, _)| *d)
    }

    /// Images of element `x` when the group was built from permutations.
    pub fn permutation(&self, x: usize) -> Option<&[usize]> {
        self.permutations.as_ref().map(|(_, p)| p[x].as_slice())
    }

    pub fn label(&self, x: usize) -> String {
        if let Some(l) = &self.labels {
            return l[x].clone();
        }
        match self.permutation(x) {
            Some(p) => {
                let cycles = images_to_cycles(p);
                if cycles.is_empty() {
                    "()".into()
                } else {
                    cycles
                        .iter()
                        .map(|c| format!("({})", c.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" ")))
                        .collect()
                }
            }
            None => format!("g{x}"),
        }
    }

    /// Element whose label is `label`.
    pub fn find_label(&self, label: &str) -> Option<usize> {
        self.elements().find(|&x| self.label(x) == label)
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut k = 1;
        let mut y = x;
        while y != self.identity {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        self.elements().all(|a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order];
        let mut classes = Vec::new();
        for y in self.elements() {
            if seen[y] {
                continue;
            }
            let class: BTreeSet<usize> = self.elements().map(|x| self.conjugate(x, y)).collect();
            for &c in &class {
                seen[c] = true;
            }
            classes.push(class.into_iter().collect());
        }
        classes
    }

    /// Whether `self` and `other` have the same multiplication table.
    pub fn same_as(self: &Arc<Self>, other: &Arc<Self>) -> bool {
        Arc::ptr_eq(self, other) || **self == **other
    }
}

/// Subset of a group closed under multiplication and inverses.
#[derive(Clone)]
pub struct Subgroup {
    group: Arc<FiniteGroup>,
    elements: Vec<usize>,
    generators: Vec<usize>,
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup{:?}", self.elements)
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.group.same_as(&other.group) && self.elements == other.elements
    }
}

impl Eq for Subgroup {}

impl Subgroup {
    /// Checks that `elements` is a subgroup.
    pub fn new(group: &Arc<FiniteGroup>, elements: &[usize]) -> Result<Self> {
        if let Some(&x) = elements.iter().find(|&&x| x >= group.order()) {
            return Err(Error::ElementOutOfRange(x));
        }
        let set: BTreeSet<usize> = elements.iter().copied().collect();
        if !set.contains(&group.identity()) {
            return Err(Error::NotSubgroup("missing the identity".into()));
        }
        for &a in &set {
            if !set.contains(&group.inv(a)) {
                return Err(Error::NotSubgroup(format!("inverse of {a} missing")));
            }
            for &b in &set {
                if !set.contains(&group.mul(a, b)) {
                    return Err(Error::NotSubgroup(format!("product of {a} and {b} missing")));
                }
            }
        }
        let elements: Vec<usize> = set.into_iter().collect();
        let generators = group.greedy_generators(&elements);
        Ok(Subgroup { group: group.clone(), elements, generators })
    }

    pub fn whole(group: &Arc<FiniteGroup>) -> Self {
        let elements: Vec<usize> = group.elements().collect();
        Subgroup { group: group.clone(), generators: group.generators().to_vec(), elements }
    }

    pub fn trivial(group: &Arc<FiniteGroup>) -> Self {
        Subgroup { group: group.clone(), elements: vec![group.identity()], generators: Vec::new() }
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    /// Sorted element indices.
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.group.same_as(&other.group) && self.elements.iter().all(|&x| other.contains(x))
    }

    pub fn index(&self) -> usize {
        self.group.order() / self.order()
    }

    /// The subgroup as a group in its own right. Element `i` of the result
    /// is `self.elements()[i]`.
    pub fn as_group(&self) -> FiniteGroup {
        let n = self.order();
        let pos = |x: usize| self.elements.binary_search(&x).expect("closed subgroup");
        let table: Vec<Vec<usize>> = self
            .elements
            .iter()
            .map(|&a| self.elements.iter().map(|&b| pos(self.group.mul(a, b))).collect())
            .collect();
        debug_assert_eq!(table.len(), n);
        FiniteGroup::from_table(&table).expect("subgroup of a valid group")
    }

    /// Left cosets `xH`, ordered by their smallest element.
    pub fn left_cosets(&self) -> Vec<Vec<usize>> {
        self.cosets(|x, h| self.group.mul(x, h))
    }

    /// Right cosets `Hx`, ordered by their smallest element.
    pub fn right_cosets(&self) -> Vec<Vec<usize>> {
        self.cosets(|x, h| self.group.mul(h, x))
    }

    fn cosets(&self, act: impl Fn(usize, usize) -> usize) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.group.order()];
        let mut out = Vec::new();
        for x in self.group.elements() {
            if seen[x] {
                continue;
            }
            let mut coset: Vec<usize> = self.elements.iter().map(|&h| act(x, h)).collect();
            coset.sort_unstable();
            for &c in &coset {
                seen[c] = true;
            }
            out.push(coset);
        }
        out
    }

    pub fn label(&self) -> String {
        let names: Vec<String> = self.elements.iter().map(|&x| self.group.label(x)).collect();
        format!("{{{}}}", names.join(", "))
    }
}

/// Smallest subgroup containing `elems`.
pub fn subgroup_generated(group: &Arc<FiniteGroup>, elems: &[usize]) -> Result<Subgroup> {
    if let Some(&x) = elems.iter().find(|&&x| x >= group.order()) {
        return Err(Error::ElementOutOfRange(x));
    }
    let closure: Vec<usize> = group.closure(elems).into_iter().collect();
    let generators = group.greedy_generators(elems);
    Ok(Subgroup { group: group.clone(), elements: closure, generators })
}

/// Exhaustive check of `x H x⁻¹ = H` for every `x`.
pub fn is_normal(group: &Arc<FiniteGroup>, h: &Subgroup) -> bool {
    h.group.same_as(group)
        && group
            .elements()
            .all(|x| h.elements.iter().all(|&y| h.contains(group.conjugate(x, y))))
}

/// Smallest normal subgroup containing `elems`.
pub fn normal_closure(group: &Arc<FiniteGroup>, elems: &[usize]) -> Result<Subgroup> {
    let mut conj: BTreeSet<usize> = BTreeSet::new();
    for &y in elems {
        if y >= group.order() {
            return Err(Error::ElementOutOfRange(y));
        }
        conj.extend(group.elements().map(|x| group.conjugate(x, y)));
    }
    subgroup_generated(group, &conj.into_iter().collect::<Vec<_>>())
}

/// All normal subgroups, sorted by order then elements.
pub fn normal_subgroups(group: &Arc<FiniteGroup>) -> Vec<Subgroup> {
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    found.insert(vec![group.identity()]);
    for class in group.conjugacy_classes() {
        let n = normal_closure(group, &class[..1]).expect("valid element");
        found.insert(n.elements);
    }
    // Every normal subgroup is the join of the normal closures of its
    // classes; close the set under joins.
    loop {
        let current: Vec<Vec<usize>> = found.iter().cloned().collect();
        let mut grew = false;
        for (i, a) in current.iter().enumerate() {
            for b in &current[i + 1..] {
                let joined: Vec<usize> = a.iter().chain(b).copied().collect();
                let j = subgroup_generated(group, &joined).expect("valid elements");
                grew |= found.insert(j.elements);
            }
        }
        if !grew {
            break;
        }
    }
    let mut subs: Vec<Subgroup> = found
        .into_iter()
        .map(|e| Subgroup::new(group, &e).expect("closure is a subgroup"))
        .collect();
    subs.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.elements.cmp(&b.elements)));
    subs
}

pub fn center(group: &Arc<FiniteGroup>) -> Subgroup {
    let z: Vec<usize> = group
        .elements()
        .filter(|&a| group.elements().all(|b| group.mul(a, b) == group.mul(b, a)))
        .collect();
    Subgroup::new(group, &z).expect("the centre is a subgroup")
}

/// `G/H` with its projection `G → G/H`.
#[derive(Debug, Clone)]
pub struct QuotientGroup {
    pub group: Arc<FiniteGroup>,
    /// `projection[x]` is the coset of `x`.
    pub projection: Vec<usize>,
    /// Cosets ordered by smallest element; coset `i` is element `i` of the quotient.
    pub cosets: Vec<Vec<usize>>,
}

pub fn quotient_group(group: &Arc<FiniteGroup>, h: &Subgroup) -> Result<QuotientGroup> {
    if !is_normal(group, h) {
        return Err(Error::NotNormal);
    }
    let cosets = h.left_cosets();
    let mut projection = vec![0; group.order()];
    for (i, c) in cosets.iter().enumerate() {
        for &x in c {
            projection[x] = i;
        }
    }
    let table: Vec<Vec<usize>> = cosets
        .iter()
        .map(|a| cosets.iter().map(|b| projection[group.mul(a[0], b[0])]).collect())
        .collect();
    let q = Arc::new(FiniteGroup::from_table(&table)?);
    for x in group.elements() {
        for y in group.elements() {
            if projection[group.mul(x, y)] != q.mul(projection[x], projection[y]) {
                return Err(Error::InvalidGroup("coset projection is not a homomorphism".into()));
            }
        }
    }
    Ok(QuotientGroup { group: q, projection, cosets })
}
