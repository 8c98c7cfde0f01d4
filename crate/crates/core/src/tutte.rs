//! Tutte polynomials by dynamic programming over a computation graph.
//!
//! The graph has one vertex per distinct diagram of an initial minor,
//! deduplicated by the canonical 5-tuple encoding in an ordered map.  Each
//! non-sink vertex carries a d-edge to the diagram with its greatest element
//! deleted (unless that element is an isthmus) and a c-edge to the diagram
//! with it contracted (unless it is a loop).  Vertices partition into levels
//! by ground set size and every edge drops one level, so a single sweep from
//! the empty matroid upward evaluates the deletion–contraction recurrence at
//! every vertex in O(nu * r * m) coefficient operations.

use std::collections::BTreeMap;

use crate::diagram::{Diagram, ElementClass, LatticePath};
use crate::error::{Error, Result};
use crate::polynomial::BivariatePolynomial;
use crate::presentation::SigmaIntervalSystem;

#[derive(Debug, Clone)]
struct Vertex {
    diagram: Diagram,
    class: Option<ElementClass>,
    d_edge: Option<usize>,
    c_edge: Option<usize>,
}

/// The c/d-edge-labelled DAG of initial-minor diagrams.
#[derive(Debug, Clone)]
pub struct ComputationGraph {
    vertices: Vec<Vertex>,
    root: usize,
    sink: usize,
    /// vertex indices grouped by ground set size
    levels: Vec<Vec<usize>>,
}

impl ComputationGraph {
    /// Expands diagrams of initial minors breadth-first from `root`,
    /// deduplicating by canonical encoding, until only the empty matroid has
    /// outdegree zero.
    pub fn build(root: &Diagram) -> Result<ComputationGraph> {
        let empty = empty_diagram();
        let mut index: BTreeMap<Diagram, usize> = BTreeMap::new();
        let mut vertices: Vec<Vertex> = Vec::new();
        let mut intern = |d: Diagram, vertices: &mut Vec<Vertex>| -> usize {
            // all empty-matroid diagrams are the same sink
            let d = if d.ground_size() == 0 {
                empty_diagram()
            } else {
                d
            };
            *index.entry(d.clone()).or_insert_with(|| {
                vertices.push(Vertex {
                    diagram: d,
                    class: None,
                    d_edge: None,
                    c_edge: None,
                });
                vertices.len() - 1
            })
        };
        let root_id = intern(root.clone(), &mut vertices);
        let mut work = vec![root_id];
        while let Some(u) = work.pop() {
            let d = vertices[u].diagram.clone();
            let h = d.ground_size();
            if h == 0 {
                continue;
            }
            let deleted = d.initial_minor_diagram(&[h], &[])?;
            let contracted = d.initial_minor_diagram(&[], &[h])?;
            let class = match (&deleted, &contracted) {
                (Some(_), Some(_)) => ElementClass::Ordinary,
                (Some(_), None) => ElementClass::Loop,
                (None, Some(_)) => ElementClass::Isthmus,
                (None, None) => {
                    return Err(Error::MalformedGraph(
                        "greatest element is neither deletable nor contractible".into(),
                    ))
                }
            };
            vertices[u].class = Some(class);
            if let Some(child) = deleted {
                debug_assert_eq!(child.ground_size(), h - 1);
                let v = intern(child, &mut vertices);
                if vertices[v].class.is_none() && vertices[v].diagram.ground_size() > 0 {
                    work.push(v);
                }
                vertices[u].d_edge = Some(v);
            }
            if let Some(child) = contracted {
                debug_assert_eq!(child.ground_size(), h - 1);
                let v = intern(child, &mut vertices);
                if vertices[v].class.is_none() && vertices[v].diagram.ground_size() > 0 {
                    work.push(v);
                }
                vertices[u].c_edge = Some(v);
            }
        }

        let sink = intern(empty, &mut vertices);
        let n = root.ground_size() as usize;
        let mut levels = vec![Vec::new(); n + 1];
        for (i, v) in vertices.iter().enumerate() {
            levels[v.diagram.ground_size() as usize].push(i);
        }
        if levels[0] != [sink] {
            return Err(Error::MalformedGraph(
                "empty matroid vertex is not unique".into(),
            ));
        }
        let graph = ComputationGraph {
            vertices,
            root: root_id,
            sink,
            levels,
        };
        graph.check_edges()?;
        Ok(graph)
    }

    fn check_edges(&self) -> Result<()> {
        for (i, v) in self.vertices.iter().enumerate() {
            if i == self.sink {
                if v.d_edge.is_some() || v.c_edge.is_some() {
                    return Err(Error::MalformedGraph("sink must have outdegree 0".into()));
                }
                continue;
            }
            let ok = match v.class {
                Some(ElementClass::Isthmus) => v.c_edge.is_some() && v.d_edge.is_none(),
                Some(ElementClass::Loop) => v.d_edge.is_some() && v.c_edge.is_none(),
                Some(ElementClass::Ordinary) => v.c_edge.is_some() && v.d_edge.is_some(),
                None => false,
            };
            if !ok {
                return Err(Error::MalformedGraph(format!(
                    "vertex {i} has out-edges inconsistent with its element class"
                )));
            }
            let h = v.diagram.ground_size();
            for edge in [v.d_edge, v.c_edge].into_iter().flatten() {
                if self.vertices[edge].diagram.ground_size() != h - 1 {
                    return Err(Error::MalformedGraph(format!(
                        "edge from level {h} does not land one level down"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Number of vertices.
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn root_diagram(&self) -> &Diagram {
        &self.vertices[self.root].diagram
    }

    /// Vertices per level, smallest ground set first.
    pub fn level_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(Vec::len).collect()
    }

    /// Sweeps levels bottom-up, applying the deletion–contraction recurrence
    /// at each vertex; only two levels of polynomials are alive at a time.
    pub fn tutte(&self) -> Result<BivariatePolynomial> {
        let mut previous: BTreeMap<usize, BivariatePolynomial> = BTreeMap::new();
        previous.insert(self.sink, BivariatePolynomial::one());
        if self.root == self.sink {
            return Ok(previous.remove(&self.root).unwrap());
        }
        for level in self.levels.iter().skip(1) {
            let mut current: BTreeMap<usize, BivariatePolynomial> = BTreeMap::new();
            for &u in level {
                let v = &self.vertices[u];
                let child = |edge: Option<usize>| -> Result<&BivariatePolynomial> {
                    edge.and_then(|e| previous.get(&e)).ok_or_else(|| {
                        Error::MalformedGraph(format!("vertex {u} is missing a child value"))
                    })
                };
                let poly = match v.class {
                    Some(ElementClass::Isthmus) => child(v.c_edge)?.times_x(),
                    Some(ElementClass::Loop) => child(v.d_edge)?.times_y(),
                    Some(ElementClass::Ordinary) => child(v.c_edge)?.add(child(v.d_edge)?),
                    None => {
                        return Err(Error::MalformedGraph(format!(
                            "vertex {u} was never expanded"
                        )))
                    }
                };
                debug_assert!(
                    poly.x_degree() <= v.diagram.rank() as usize
                        && poly.y_degree() <= v.diagram.nullity() as usize
                );
                current.insert(u, poly);
            }
            previous = current;
        }
        previous
            .remove(&self.root)
            .ok_or_else(|| Error::MalformedGraph("root level never evaluated".into()))
    }
}

fn empty_diagram() -> Diagram {
    Diagram::new(1, 0, 0, LatticePath::default(), LatticePath::default()).unwrap()
}

/// Tutte polynomial of the matroid a diagram presents.
pub fn tutte_of_diagram(d: &Diagram) -> Result<BivariatePolynomial> {
    ComputationGraph::build(d)?.tutte()
}

/// Tutte polynomial of a presented multi-path matroid.  The presentation is
/// normalized to an antichain if necessary, loops are split off as a power
/// of y, and the loopless part runs through the diagram pipeline anchored at
/// element 1.
pub fn tutte(sys: &SigmaIntervalSystem) -> Result<BivariatePolynomial> {
    let (loops, core) = sys.split_loops()?;
    let poly = match core {
        None => BivariatePolynomial::one(),
        Some(core) => tutte_of_diagram(&Diagram::from_presentation(&core, 1)?)?,
    };
    Ok(poly.shifted(0, loops.len()))
}
