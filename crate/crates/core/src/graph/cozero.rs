use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::ring::{oracle, AssociateClasses, RingElement, RingSpec};
use crate::Limits;

/// The cozero-divisor graph of a ring, or a graph derived from one
/// (complement, induced subgraph, quotient) that keeps the ring labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CozeroGraph {
    spec: RingSpec,
    labels: Vec<RingElement>,
    graph: Graph,
}

/// The cozero graph restricted to one representative per associate class.
#[derive(Clone, Debug)]
pub struct QuotientGraph {
    pub graph: CozeroGraph,
    /// Number of original vertices collapsed onto each quotient vertex.
    pub class_sizes: Vec<usize>,
    /// Index in the original graph of each quotient vertex.
    pub representatives: Vec<usize>,
    pub origin: AssociateClasses,
}

/// Number of zero residues of `x`.
pub fn nzc(x: &RingElement) -> usize {
    x.zero_count()
}

/// Adjacency decided by comparing the enumerated ideals `Ra` and `Rb`: neither
/// may contain the other. Slow; shares nothing with the gcd membership test.
pub fn adjacency_via_containment(spec: &RingSpec, a: &RingElement, b: &RingElement) -> bool {
    let ra = oracle::principal_ideal(spec, a);
    let rb = oracle::principal_ideal(spec, b);
    !ra.is_subset(&rb) && !rb.is_subset(&ra)
}

fn divides_componentwise(generators: &[u64], a: &RingElement) -> bool {
    generators
        .iter()
        .zip(a.residues())
        .all(|(&g, &r)| r % g == 0)
}

impl CozeroGraph {
    pub fn build(spec: &RingSpec) -> Result<Self> {
        Self::build_with_limits(spec, &Limits::default())
    }

    /// Builds the graph on `W*(R)`: `a -- b` iff `a` is not in `Rb` and `b` is
    /// not in `Ra`.
    pub fn build_with_limits(spec: &RingSpec, limits: &Limits) -> Result<Self> {
        if spec.cardinality() > limits.max_cardinality {
            return Err(Error::CardinalityCap {
                cardinality: spec.cardinality(),
                cap: limits.max_cardinality,
            });
        }
        let labels = spec.vertices();
        let generators: Vec<Vec<u64>> = labels.iter().map(|v| spec.ideal_signature(v)).collect();
        let n = labels.len();
        let mut graph = Graph::empty(n);
        for i in 0..n {
            for j in i + 1..n {
                let i_in_j = divides_componentwise(&generators[j], &labels[i]);
                let j_in_i = divides_componentwise(&generators[i], &labels[j]);
                #[cfg(feature = "paranoid")]
                {
                    assert_eq!(i_in_j, spec.in_principal_ideal(&labels[i], &labels[j]));
                    assert_eq!(j_in_i, spec.in_principal_ideal(&labels[j], &labels[i]));
                }
                if !i_in_j && !j_in_i {
                    graph.add_edge(i, j);
                }
            }
        }
        Ok(CozeroGraph {
            spec: spec.clone(),
            labels,
            graph,
        })
    }

    pub fn spec(&self) -> &RingSpec {
        &self.spec
    }

    pub fn labels(&self) -> &[RingElement] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &RingElement {
        &self.labels[v]
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    pub fn position(&self, a: &RingElement) -> Option<usize> {
        self.labels.iter().position(|l| l == a)
    }

    pub fn complement(&self) -> CozeroGraph {
        CozeroGraph {
            spec: self.spec.clone(),
            labels: self.labels.clone(),
            graph: self.graph.complement(),
        }
    }

    pub fn induced_subgraph(&self, keep: &[usize]) -> CozeroGraph {
        CozeroGraph {
            spec: self.spec.clone(),
            labels: keep.iter().map(|&v| self.labels[v].clone()).collect(),
            graph: self.graph.induced_subgraph(keep),
        }
    }

    /// Adjacency recomputed from enumerated principal ideals, over the same
    /// labels. Equal to [`CozeroGraph::graph`] whenever the membership test is
    /// correct.
    pub fn containment_graph(&self) -> Graph {
        let ideals: Vec<BitSet> = self
            .labels
            .iter()
            .map(|a| oracle::principal_ideal(&self.spec, a))
            .collect();
        let n = self.labels.len();
        let mut g = Graph::empty(n);
        for i in 0..n {
            for j in i + 1..n {
                if !ideals[i].is_subset(&ideals[j]) && !ideals[j].is_subset(&ideals[i]) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Vertices grouped by zero count: entry `i - 1` holds `A_i`, the vertices
    /// with exactly `i` zero residues, for `i` in `1..n`.
    ///
    /// Only defined for products of prime fields.
    pub fn nzc_partition(&self) -> Result<Vec<Vec<usize>>> {
        if !self.spec.is_von_neumann_regular() {
            return Err(Error::NotVonNeumannRegular(self.spec.to_string()));
        }
        if !self.spec.is_split_into_fields() {
            return Err(Error::NotSplit(self.spec.to_string()));
        }
        let n = self.spec.factor_count();
        let mut parts = vec![Vec::new(); n.saturating_sub(1)];
        for (v, label) in self.labels.iter().enumerate() {
            let zeros = nzc(label);
            debug_assert!((1..n).contains(&zeros));
            parts[zeros - 1].push(v);
        }
        Ok(parts)
    }

    /// Collapses each associate class to one vertex.
    ///
    /// Non-representatives are deleted one at a time in index order. Before
    /// each deletion the vertex must have a surviving non-adjacent vertex with
    /// the same surviving neighbourhood, otherwise the reduction would not
    /// preserve clique number, chromatic number or perfection and
    /// [`Error::ReductionHypothesis`] is returned.
    pub fn quotient_by_associates(&self) -> Result<QuotientGraph> {
        let origin = self.spec.associate_classes();
        let mut members: Vec<Vec<usize>> = vec![Vec::new(); origin.len()];
        for (v, label) in self.labels.iter().enumerate() {
            let id = origin
                .class_of(label)
                .ok_or_else(|| Error::InvalidElement {
                    spec: self.spec.to_string(),
                    element: label.to_string(),
                })?;
            members[id].push(v);
        }
        let mut representatives = Vec::new();
        let mut class_sizes = Vec::new();
        let mut rep_of = vec![usize::MAX; self.order()];
        for (class, verts) in origin.classes().iter().zip(&members) {
            let Some(&first) = verts.first() else {
                continue;
            };
            let rep = verts
                .iter()
                .copied()
                .find(|&v| self.labels[v] == class.representative)
                .unwrap_or(first);
            for &v in verts {
                rep_of[v] = rep;
            }
            representatives.push(rep);
            class_sizes.push(verts.len());
        }

        let g = &self.graph;
        let mut alive = BitSet::full(self.order());
        for (x, &rep) in rep_of.iter().enumerate() {
            if rep == x {
                continue;
            }
            let twin = |y: usize| {
                y != x
                    && !g.has_edge(x, y)
                    && g.neighbors(x).intersection(&alive) == g.neighbors(y).intersection(&alive)
            };
            let found = twin(rep) || alive.iter().any(twin);
            if !found {
                return Err(Error::ReductionHypothesis {
                    vertex: self.labels[x].to_string(),
                });
            }
            alive.remove(x);
        }
        debug_assert_eq!(alive.iter().collect::<Vec<_>>(), {
            let mut r = representatives.clone();
            r.sort_unstable();
            r
        });

        Ok(QuotientGraph {
            graph: self.induced_subgraph(&representatives),
            class_sizes,
            representatives,
            origin,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::parse_spec;

    fn build(s: &str) -> CozeroGraph {
        CozeroGraph::build(&parse_spec(s).unwrap()).unwrap()
    }

    /// Edge count by brute force over all pairs with the exhaustive oracle.
    fn oracle_edge_count(spec: &RingSpec) -> usize {
        let v = spec.vertices();
        let mut count = 0;
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                if !oracle::in_principal_ideal(spec, &v[i], &v[j])
                    && !oracle::in_principal_ideal(spec, &v[j], &v[i])
                {
                    count += 1;
                }
            }
        }
        count
    }

    #[test]
    fn small_graphs() {
        let g = build("Z2xZ2");
        assert_eq!((g.order(), g.edge_count()), (2, 1));
        let g = build("Z4");
        assert_eq!((g.order(), g.edge_count()), (1, 0));
        let s = parse_spec("Z2xZ2xZ2").unwrap();
        assert_eq!(oracle_edge_count(&s), 9);
        let g = build("Z2xZ2xZ2");
        assert_eq!((g.order(), g.edge_count()), (6, 9));
        assert_eq!(g.complement().edge_count(), 6);
        assert_eq!(build("Z5").order(), 0);
    }

    #[test]
    fn cardinality_cap() {
        let spec = parse_spec("Z101xZ103").unwrap();
        assert!(matches!(
            CozeroGraph::build(&spec),
            Err(Error::CardinalityCap {
                cardinality: 10403,
                cap: 10_000
            })
        ));
        let limits = Limits {
            max_cardinality: 20,
            ..Limits::default()
        };
        assert!(CozeroGraph::build_with_limits(&parse_spec("Z3xZ7").unwrap(), &limits).is_err());
        assert!(CozeroGraph::build_with_limits(&parse_spec("Z4xZ5").unwrap(), &limits).is_ok());
    }

    #[test]
    fn containment_adjacency_examples() {
        let v4 = parse_spec("Z2xZ2").unwrap();
        let (a, b) = (
            v4.element(vec![0, 1]).unwrap(),
            v4.element(vec![1, 0]).unwrap(),
        );
        assert!(adjacency_via_containment(&v4, &a, &b));
        let z6 = parse_spec("Z6").unwrap();
        let (a, b) = (z6.element(vec![2]).unwrap(), z6.element(vec![4]).unwrap());
        assert!(!adjacency_via_containment(&z6, &a, &b));
        let s = parse_spec("Z2xZ4").unwrap();
        let (a, b) = (
            s.element(vec![0, 2]).unwrap(),
            s.element(vec![0, 1]).unwrap(),
        );
        assert!(!adjacency_via_containment(&s, &a, &b));
        assert!(oracle::principal_ideal(&s, &a).is_subset(&oracle::principal_ideal(&s, &b)));
    }

    #[test]
    fn containment_graph_matches() {
        for s in ["Z2xZ4", "Z12", "Z3xZ3xZ2", "Z8xZ3"] {
            let g = build(s);
            assert_eq!(&g.containment_graph(), g.graph(), "{s}");
        }
    }

    #[test]
    fn nzc_counts() {
        let s = parse_spec("Z2xZ2xZ2").unwrap();
        assert_eq!(nzc(&s.element(vec![0, 1, 1]).unwrap()), 1);
        assert_eq!(nzc(&s.element(vec![0, 0, 1]).unwrap()), 2);
        let s = parse_spec("Z2xZ3").unwrap();
        assert_eq!(nzc(&s.element(vec![0, 2]).unwrap()), 1);
    }

    #[test]
    fn nzc_parts() {
        let g = build("Z2xZ2xZ2");
        let parts = g.nzc_partition().unwrap();
        assert_eq!(parts.iter().map(Vec::len).collect::<Vec<_>>(), vec![3, 3]);
        // A_1 is the triangle on the weight-two vertices
        let a1 = g.induced_subgraph(&parts[0]);
        assert_eq!(a1.edge_count(), 3);
        assert!(a1
            .labels()
            .iter()
            .all(|l| l.residues().iter().sum::<u64>() == 2));

        assert_eq!(build("Z2xZ2xZ2xZ2").nzc_partition().unwrap()[1].len(), 6);

        let g = build("Z2xZ3");
        let parts = g.nzc_partition().unwrap();
        let labels: Vec<String> = parts[0].iter().map(|&v| g.label(v).to_string()).collect();
        assert_eq!(labels, vec!["(0,1)", "(0,2)", "(1,0)"]);

        assert!(matches!(
            build("Z2xZ4").nzc_partition(),
            Err(Error::NotVonNeumannRegular(_))
        ));
        assert!(matches!(
            build("Z6").nzc_partition(),
            Err(Error::NotSplit(_))
        ));
    }

    #[test]
    fn quotients() {
        let q = build("Z3xZ3").quotient_by_associates().unwrap();
        assert_eq!((q.graph.order(), q.graph.edge_count()), (2, 1));
        assert_eq!(q.class_sizes, vec![2, 2]);

        let g = build("Z2xZ2xZ2xZ2");
        let q = g.quotient_by_associates().unwrap();
        assert_eq!(q.graph, g);

        let q = build("Z3xZ5xZ7").quotient_by_associates().unwrap();
        assert_eq!(q.graph.order(), 6);
        assert_eq!(q.class_sizes.iter().sum::<usize>(), 56);
        assert!(q
            .graph
            .labels()
            .iter()
            .all(|l| l.residues().iter().all(|&r| r <= 1)));

        // non-regular rings reduce too
        let g = build("Z2xZ4");
        let q = g.quotient_by_associates().unwrap();
        assert_eq!(q.class_sizes.iter().sum::<usize>(), g.order());
    }

    #[test]
    fn quotient_rejects_broken_twins() {
        // relabel a path so that two associates are no longer twins
        let mut g = build("Z3xZ3");
        g.graph = Graph::path(4);
        assert!(matches!(
            g.quotient_by_associates(),
            Err(Error::ReductionHypothesis { .. })
        ));
    }
}
