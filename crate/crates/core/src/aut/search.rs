//! Individualization-refinement search.
//!
//! The search tree has the refined unit partition at its root; a node's
//! children individualize each vertex of its target cell and refine again.
//! Leaves are discrete partitions, each giving a relabeling of the graph.
//! The certificate is the smallest relabeled adjacency string over all
//! leaves, and two leaves with equal strings differ by an automorphism.
//!
//! Pruning is by automorphisms only:
//! - a leaf equal to the first or best leaf yields a generator and the
//!   search jumps back to where the two root paths diverge;
//! - at every node, a child in the same orbit as an already explored child
//!   (under the generators fixing the node's path pointwise) is skipped.
//!
//! The group order is the product over the first path of the orbit length
//! of each individualized vertex under the generators fixing the vertices
//! individualized before it.

use num_bigint::BigUint;

use super::refine::{color_refine, OrderedPartition};
use super::Certificate;
use crate::graph::Graph;
use crate::perm::Perm;

struct Leaf {
    order: Vec<usize>,
    path: Vec<usize>,
    certificate: Certificate,
}

pub(crate) struct SearchOutcome {
    pub generators: Vec<Perm>,
    pub order: BigUint,
    pub certificate: Certificate,
    /// `order[i]` is the vertex placed at canonical position `i`.
    pub canonical_order: Vec<usize>,
}

struct Search<'g> {
    graph: &'g Graph,
    first: Option<Leaf>,
    best: Option<Leaf>,
    generators: Vec<Perm>,
}

fn common_prefix(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

/// Union-find orbits of the group generated by `gens`.
fn orbit_roots(n: usize, gens: &[&Perm]) -> Vec<usize> {
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut parent: Vec<usize> = (0..n).collect();
    for g in gens {
        for x in 0..n {
            let (a, b) = (find(&mut parent, x), find(&mut parent, g.image(x)));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    (0..n).map(|x| find(&mut parent, x)).collect()
}

impl<'g> Search<'g> {
    fn new(graph: &'g Graph) -> Self {
        Search {
            graph,
            first: None,
            best: None,
            generators: Vec::new(),
        }
    }

    fn stabilizer_gens(&self, fixed: &[usize]) -> Vec<&Perm> {
        self.generators
            .iter()
            .filter(|g| fixed.iter().all(|&v| g.fixes(v)))
            .collect()
    }

    /// Returns the depth to jump back to, if a subtree was found equivalent
    /// to one already explored.
    fn visit(&mut self, partition: OrderedPartition, path: &mut Vec<usize>) -> Option<usize> {
        let Some(target) = partition.target_cell() else {
            return self.leaf(&partition, path);
        };
        let depth = path.len();
        let cell = partition.cells()[target].clone();
        let mut explored: Vec<usize> = Vec::new();
        for &w in &cell {
            if !explored.is_empty() {
                let gens = self.stabilizer_gens(path);
                if !gens.is_empty() {
                    let roots = orbit_roots(self.graph.n(), &gens);
                    if explored.iter().any(|&x| roots[x] == roots[w]) {
                        continue;
                    }
                }
            }
            explored.push(w);
            let child = color_refine(self.graph, &partition.individualize(target, w));
            path.push(w);
            let jump = self.visit(child, path);
            path.pop();
            if let Some(d) = jump {
                if d < depth {
                    return Some(d);
                }
            }
        }
        None
    }

    fn leaf(&mut self, partition: &OrderedPartition, path: &[usize]) -> Option<usize> {
        let order = partition.flatten();
        let certificate = Certificate::of_ordering(self.graph, &order);
        let Some(first) = &self.first else {
            self.first = Some(Leaf {
                order,
                path: path.to_vec(),
                certificate,
            });
            return None;
        };
        if certificate == first.certificate {
            let gamma = mapping(&first.order, &order);
            let d = common_prefix(&first.path, path);
            self.generators.push(gamma);
            return Some(d);
        }
        if let Some(best) = &self.best {
            if certificate == best.certificate {
                let gamma = mapping(&best.order, &order);
                let d = common_prefix(&best.path, path);
                self.generators.push(gamma);
                return Some(d);
            }
            if certificate > best.certificate {
                return None;
            }
        } else if certificate > first.certificate {
            return None;
        }
        self.best = Some(Leaf {
            order,
            path: path.to_vec(),
            certificate,
        });
        None
    }
}

/// The permutation sending `from[i]` to `to[i]`.
fn mapping(from: &[usize], to: &[usize]) -> Perm {
    let mut images = vec![0; from.len()];
    for (&a, &b) in from.iter().zip(to) {
        images[a] = b;
    }
    Perm::from_images_unchecked(images)
}

pub(crate) fn search(graph: &Graph) -> SearchOutcome {
    let n = graph.n();
    let root = color_refine(graph, &OrderedPartition::unit(n));
    let mut s = Search::new(graph);
    let mut path = Vec::new();
    s.visit(root, &mut path);

    let first = s.first.take().expect("search reaches at least one leaf");
    let mut order = BigUint::from(1u32);
    for (d, &v) in first.path.iter().enumerate() {
        let gens = s.stabilizer_gens(&first.path[..d]);
        let roots = orbit_roots(n, &gens);
        let size = roots.iter().filter(|&&r| r == roots[v]).count();
        order *= size;
    }

    let best = s.best.take().unwrap_or(first);
    SearchOutcome {
        generators: s.generators,
        order,
        certificate: best.certificate,
        canonical_order: best.order,
    }
}
