//! Symmetry reduction for trees.
//!
//! Trees are rooted at their center (a virtual root joins the two centers of
//! a bicentral tree), so every automorphism fixes the root. A vertex set is
//! then keyed by the canonical label of the colored rooted tree, and probes
//! are enumerated once per orbit of the set's stabilizer.

use std::cell::RefCell;
use std::collections::HashMap;

use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// A tree rooted at its center. Node `n` is the virtual root when the tree
/// has two centers.
#[derive(Clone, Debug)]
pub struct RootedTree {
    n: usize,
    root: usize,
    children: Vec<Vec<usize>>,
    order: Vec<usize>,
}

impl RootedTree {
    pub fn at_center(g: &Graph) -> Option<Self> {
        if !g.is_tree() {
            return None;
        }
        let n = g.n();
        let rad = g.radius();
        let centers: Vec<usize> = (0..n).filter(|&v| g.eccentricity(v) == rad).collect();
        let mut children = vec![Vec::new(); n + 1];
        let mut seen = vec![false; n];
        let mut order = Vec::with_capacity(n + 1);
        let root = if centers.len() == 2 {
            children[n] = centers.clone();
            order.push(n);
            n
        } else {
            centers[0]
        };
        for &c in &centers {
            seen[c] = true;
            order.push(c);
        }
        let mut head = order.len() - centers.len();
        while head < order.len() {
            let v = order[head];
            head += 1;
            for &w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    children[v].push(w);
                    order.push(w);
                }
            }
        }
        debug_assert_eq!(order.len(), if root == n { n + 1 } else { n });
        Some(RootedTree { n, root, children, order })
    }

    fn slots(&self) -> usize {
        self.n + 1
    }

    /// Vertices of the smallest subtree containing `s`.
    pub fn steiner(&self, s: &VertexSet) -> VertexSet {
        let total = s.len();
        let mut cnt = vec![0usize; self.slots()];
        let mut out = VertexSet::empty(self.n);
        for &v in self.order.iter().rev() {
            let inside = v < self.n && s.contains(v);
            let mut own = inside as usize;
            let mut busy_children = 0;
            for &c in &self.children[v] {
                own += cnt[c];
                busy_children += (cnt[c] > 0) as usize;
            }
            cnt[v] = own;
            if v < self.n && (inside || busy_children >= 2 || (busy_children == 1 && own < total)) {
                out.insert(v);
            }
        }
        out
    }
}

#[derive(Default)]
struct Interner {
    map: HashMap<(u8, Vec<u32>), u32>,
}

impl Interner {
    fn id(&mut self, color: u8, mut kids: Vec<u32>) -> u32 {
        kids.sort_unstable();
        let next = self.map.len() as u32;
        *self.map.entry((color, kids)).or_insert(next)
    }
}

fn set_color(tree: &RootedTree, s: &VertexSet, v: usize) -> u8 {
    if v == tree.n {
        2
    } else {
        s.contains(v) as u8
    }
}

fn state_labels(tree: &RootedTree, s: &VertexSet, interner: &mut Interner) -> Vec<u32> {
    let mut label = vec![0u32; tree.slots()];
    for &v in tree.order.iter().rev() {
        let kids = tree.children[v].iter().map(|&c| label[c]).collect();
        label[v] = interner.id(set_color(tree, s, v), kids);
    }
    label
}

/// Assigns equal keys to vertex sets related by a tree automorphism.
pub struct Canonicalizer {
    tree: RootedTree,
    interner: RefCell<Interner>,
}

impl Canonicalizer {
    pub fn new(tree: RootedTree) -> Self {
        Canonicalizer { tree, interner: RefCell::new(Interner::default()) }
    }

    pub fn tree(&self) -> &RootedTree {
        &self.tree
    }

    pub fn key(&self, s: &VertexSet) -> u32 {
        let labels = state_labels(&self.tree, s, &mut self.interner.borrow_mut());
        labels[self.tree.root]
    }
}

struct Placement {
    label: u32,
    cops: Vec<usize>,
}

/// Children of one isomorphism type, with the placement items `(count,
/// index)` of the first child. Isomorphic subtrees produce their placement
/// tables in the same order, so an item addresses every child of the group.
struct Group {
    children: Vec<usize>,
    items: Vec<(usize, usize)>,
}

type Pick = (usize, usize, usize);

/// One probe per orbit of the automorphisms of the tree that fix `s`, using
/// only vertices of `allowed`, with sizes in `sizes`.
pub fn probe_orbit_reps(
    tree: &RootedTree,
    s: &VertexSet,
    allowed: &VertexSet,
    sizes: std::ops::RangeInclusive<usize>,
) -> Vec<Vec<usize>> {
    let kmax = *sizes.end();
    let mut interner = Interner::default();
    let types = state_labels(tree, s, &mut interner);
    let mut tables: Vec<Vec<Vec<Placement>>> = (0..tree.slots()).map(|_| Vec::new()).collect();
    for &v in tree.order.iter().rev() {
        let own_ok = v < tree.n && allowed.contains(v);
        let below: usize = tree.children[v].iter().map(|&c| tables[c].len() - 1).sum();
        let cap = (own_ok as usize + below).min(kmax);
        let mut kids = tree.children[v].clone();
        kids.sort_by_key(|&c| (types[c], c));
        let groups: Vec<Group> = kids
            .chunk_by(|a, b| types[*a] == types[*b])
            .map(|chunk| Group {
                children: chunk.to_vec(),
                items: tables[chunk[0]]
                    .iter()
                    .enumerate()
                    .flat_map(|(cnt, list)| (0..list.len()).map(move |i| (cnt, i)))
                    .collect(),
            })
            .collect();
        let mut table: Vec<Vec<Placement>> = (0..=cap).map(|_| Vec::new()).collect();
        let color = set_color(tree, s, v);
        for own in 0..=(own_ok as usize) {
            let mut chosen = Vec::new();
            combine(&groups, 0, 0, 0, cap - own, &mut chosen, &mut |picks: &[Pick]| {
                let total = own + picks.iter().map(|p| p.1).sum::<usize>();
                let labels = picks.iter().map(|&(c, cnt, idx)| tables[c][cnt][idx].label).collect();
                let label = interner.id(color | ((own as u8) << 2), labels);
                let mut cops = if own == 1 { vec![v] } else { Vec::new() };
                for &(c, cnt, idx) in picks {
                    cops.extend_from_slice(&tables[c][cnt][idx].cops);
                }
                table[total].push(Placement { label, cops });
            });
        }
        for &c in &tree.children[v] {
            tables[c] = Vec::new();
        }
        tables[v] = table;
    }
    let root_table = std::mem::take(&mut tables[tree.root]);
    let mut out = Vec::new();
    for (size, entries) in root_table.into_iter().enumerate() {
        if sizes.contains(&size) {
            for p in entries {
                let mut cops = p.cops;
                cops.sort_unstable();
                out.push(cops);
            }
        }
    }
    out
}

/// Fills the children of each group in turn with a non-decreasing sequence
/// of placement items, so every multiset (hence every orbit) appears once.
fn combine(
    groups: &[Group],
    gi: usize,
    slot: usize,
    from: usize,
    budget: usize,
    chosen: &mut Vec<Pick>,
    emit: &mut dyn FnMut(&[Pick]),
) {
    if gi == groups.len() {
        emit(chosen);
        return;
    }
    let group = &groups[gi];
    if slot == group.children.len() {
        combine(groups, gi + 1, 0, 0, budget, chosen, emit);
        return;
    }
    for (i, &(cnt, idx)) in group.items.iter().enumerate().skip(from) {
        if cnt > budget {
            continue;
        }
        chosen.push((group.children[slot], cnt, idx));
        combine(groups, gi, slot + 1, i, budget - cnt, chosen, emit);
        chosen.pop();
    }
}
