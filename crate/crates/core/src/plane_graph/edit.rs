use super::{Dart, GraphError, PlaneGraph, Subgraph, Vertex};

impl PlaneGraph {
    /// Restriction to kept vertices and edges; the embedding is inherited.
    ///
    /// The outer mark of each resulting component is, in order of
    /// preference: `outer_override` if it survives in that component; the
    /// first surviving dart met walking an old outer orbit from its mark; the
    /// first surviving dart whose old face lost a dart (the merged face);
    /// the component's largest orbit.
    pub(crate) fn restrict(&self, keep_vertex: &[bool], keep_edge: &[bool], outer_override: Option<Dart>) -> Subgraph {
        let n = self.vertex_count();
        let mut new_vertex = vec![usize::MAX; n];
        let mut to_parent = Vec::new();
        for v in 0..n {
            if keep_vertex[v] {
                new_vertex[v] = to_parent.len();
                to_parent.push(v);
            }
        }
        let mut new_edge = vec![usize::MAX; self.edge_count()];
        let mut origin = Vec::new();
        for e in 0..self.edge_count() {
            let (a, b) = self.endpoints(e);
            if keep_edge[e] && keep_vertex[a] && keep_vertex[b] {
                new_edge[e] = origin.len() / 2;
                origin.push(new_vertex[a]);
                origin.push(new_vertex[b]);
            }
        }
        let map_dart = |d: Dart| -> Option<Dart> {
            let e = new_edge[d.edge()];
            (e != usize::MAX).then(|| Dart(2 * e + (d.0 & 1)))
        };
        let rotations: Vec<Vec<Dart>> = to_parent
            .iter()
            .map(|&v| self.rotation(v).iter().filter_map(|&d| map_dart(d)).collect())
            .collect();
        let mut g = PlaneGraph::from_parts(rotations, origin);

        let old_table = self.face_table();
        let comp = g.component_ids();
        let mut touched = vec![false; old_table.faces.len()];
        for d in self.darts() {
            if map_dart(d).is_none() {
                touched[old_table.face_of[d.0]] = true;
            }
        }
        let override_new = outer_override.and_then(map_dart);
        let pick = |c: usize| -> Option<Dart> {
            if let Some(d) = override_new {
                if comp[g.origin(d)] == c {
                    return Some(d);
                }
            }
            for &m in &self.outer {
                let mut d = m;
                loop {
                    if let Some(nd) = map_dart(d) {
                        if comp[g.origin(nd)] == c {
                            return Some(nd);
                        }
                    }
                    d = self.face_next(d);
                    if d == m {
                        break;
                    }
                }
            }
            for d in self.darts() {
                if let Some(nd) = map_dart(d) {
                    if comp[g.origin(nd)] == c && touched[old_table.face_of[d.0]] {
                        return Some(nd);
                    }
                }
            }
            let table = g.face_table_unmarked();
            table
                .faces
                .iter()
                .filter(|f| comp[g.origin(f.darts[0])] == c)
                .max_by(|a, b| a.degree().cmp(&b.degree()).then(b.darts[0].cmp(&a.darts[0])))
                .map(|f| f.darts[0])
        };
        g.outer = g.ordered_marks(&comp, pick);
        debug_assert!(g.check_euler().is_ok());
        Subgraph { graph: g, to_parent }
    }

    /// Removes `v` and its incident edges. Remaining vertices are renumbered
    /// densely in increasing order.
    pub fn delete_vertex(&self, v: Vertex) -> Result<Subgraph, GraphError> {
        if v >= self.vertex_count() {
            return Err(GraphError::MissingElement(format!("vertex {v}")));
        }
        let mut keep = vec![true; self.vertex_count()];
        keep[v] = false;
        Ok(self.restrict(&keep, &vec![true; self.edge_count()], None))
    }

    /// Subgraph induced by a vertex set.
    pub fn induced(&self, vertices: &[Vertex]) -> Subgraph {
        let mut keep = vec![false; self.vertex_count()];
        for &v in vertices {
            keep[v] = true;
        }
        self.restrict(&keep, &vec![true; self.edge_count()], None)
    }

    /// Removes the edge carrying dart `d`; vertex ids are unchanged.
    pub fn delete_edge(&self, d: Dart) -> Result<PlaneGraph, GraphError> {
        if d.0 >= self.dart_count() {
            return Err(GraphError::MissingElement(format!("dart {}", d.0)));
        }
        let mut keep = vec![true; self.edge_count()];
        keep[d.edge()] = false;
        Ok(self.restrict(&vec![true; self.vertex_count()], &keep, None).graph)
    }

    /// Face that a dart inserted at rotation position `slot` of `v` would
    /// enter, or `None` for an isolated vertex (which sits in the outer face).
    fn slot_face(&self, v: Vertex, slot: usize, face_of: &[usize]) -> Option<usize> {
        let list = self.rotation(v);
        if list.is_empty() {
            None
        } else {
            Some(face_of[list[slot % list.len()].0])
        }
    }

    /// Inserts edge `uv`. The new dart at `u` takes index `u_slot` of the
    /// rotation of `u` (shifting later darts), likewise at `v`; both slots
    /// must open onto one face. The new edge gets the next edge id.
    pub fn add_edge(&self, u: Vertex, v: Vertex, u_slot: usize, v_slot: usize) -> Result<PlaneGraph, GraphError> {
        let n = self.vertex_count();
        if u >= n || v >= n {
            return Err(GraphError::MissingElement(format!("vertex {}", u.max(v))));
        }
        if u == v {
            return Err(GraphError::InconsistentRotation(format!("loop at vertex {u}")));
        }
        if u_slot > self.degree(u) || v_slot > self.degree(v) {
            return Err(GraphError::MissingElement("rotation slot".into()));
        }
        let table = self.face_table();
        let fu = self.slot_face(u, u_slot, &table.face_of);
        let fv = self.slot_face(v, v_slot, &table.face_of);
        let in_outer = |f: Option<usize>| f.is_none_or(|f| table.faces[f].outer);
        let comp = self.component_ids();
        let cofacial = match (fu, fv) {
            (Some(a), Some(b)) if a == b => true,
            _ => comp[u] != comp[v] && in_outer(fu) && in_outer(fv),
        };
        if !cofacial {
            return Err(GraphError::SlotsNotCofacial);
        }
        let e = self.edge_count();
        let mut rotations = self.rotations.clone();
        rotations[u].insert(u_slot, Dart(2 * e));
        rotations[v].insert(v_slot, Dart(2 * e + 1));
        let mut origin = self.origin.clone();
        origin.push(u);
        origin.push(v);
        let mut g = PlaneGraph::from_parts(rotations, origin);
        let new_comp = g.component_ids();
        let old_marks = self.outer.clone();
        let fresh = Dart(2 * e);
        g.outer = g.ordered_marks(&new_comp, |c| {
            old_marks.iter().copied().find(|&m| new_comp[g.origin(m)] == c).or(Some(fresh))
        });
        g.check_euler()?;
        Ok(g)
    }

    /// Deletes one edge of each 2-face until none remain. The higher edge id
    /// of the first 2-face (in face order) goes each round.
    pub fn collapse_two_faces(&self) -> PlaneGraph {
        let mut g = self.clone();
        loop {
            let table = g.face_table();
            let hit = table
                .faces
                .iter()
                .find(|f| f.degree() == 2 && f.darts[0].edge() != f.darts[1].edge());
            match hit {
                None => return g,
                Some(f) => {
                    let d = f.darts[0].max(f.darts[1]);
                    g = g.delete_edge(d).expect("dart exists");
                }
            }
        }
    }

    /// Faces bounded by two parallel edges.
    pub fn two_face_count(&self) -> usize {
        self.faces()
            .iter()
            .filter(|f| f.degree() == 2 && f.darts[0].edge() != f.darts[1].edge())
            .count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wheel5() -> PlaneGraph {
        crate::generators::wheel(5).unwrap()
    }

    #[test]
    fn deleting_wheel_hub_leaves_cycle() {
        let g = wheel5();
        let hub = (0..g.vertex_count()).find(|&v| g.degree(v) == 5).unwrap();
        let sub = g.delete_vertex(hub).unwrap();
        let c = &sub.graph;
        assert_eq!((c.vertex_count(), c.edge_count(), c.faces().len()), (5, 5, 2));
        assert!((0..5).all(|v| c.degree(v) == 2));
        assert_eq!(c.outer_marks().len(), 1);
    }

    #[test]
    fn deleting_one_edge_of_digon() {
        let g = PlaneGraph::from_rotations(&vec![vec![(1, 0), (1, 1)], vec![(0, 1), (0, 0)]], &[(0, 1, 0)]).unwrap();
        let h = g.delete_edge(Dart(0)).unwrap();
        assert_eq!((h.edge_count(), h.faces().len()), (1, 1));
        assert!(h.faces()[0].outer);
    }

    #[test]
    fn deleting_a_bridge_splits_component() {
        let g = crate::generators::grid(1, 3).unwrap();
        let bridge = g.rotation(1)[0];
        let h = g.delete_edge(bridge).unwrap();
        assert_eq!(h.components().len(), 2);
        assert_eq!(h.outer_marks().len(), 1);
        h.check_euler().unwrap();
    }

    #[test]
    fn missing_elements_error() {
        let g = wheel5();
        assert!(matches!(g.delete_vertex(99), Err(GraphError::MissingElement(_))));
        assert!(matches!(g.delete_edge(Dart(999)), Err(GraphError::MissingElement(_))));
    }

    #[test]
    fn chord_splits_square() {
        let g = crate::generators::cycle(4).unwrap();
        let inner = g.faces().into_iter().find(|f| !f.outer).unwrap();
        // vertex 0 and 2 both lie on the inner face; find slots opening onto it
        let table = g.face_table();
        let fid = table.face_of_dart(inner.darts[0]);
        let slot = |v: Vertex| {
            (0..g.degree(v)).find(|&s| table.face_of[g.rotation(v)[s].0] == fid).unwrap()
        };
        let h = g.add_edge(0, 2, slot(0), slot(2)).unwrap();
        let mut degs: Vec<usize> = h.faces().iter().map(|f| f.degree()).collect();
        degs.sort();
        assert_eq!(degs, vec![3, 3, 4]);
    }

    #[test]
    fn parallel_insertion_creates_two_face() {
        let g = crate::generators::cycle(4).unwrap();
        let d = g.rotation(0)[0];
        let (u, v) = (g.origin(d), g.head(d));
        let h = g.add_edge(u, v, g.position(d) + 1, g.position(d.twin())).unwrap();
        assert_eq!(h.two_face_count(), 1);
        assert_eq!(h.faces().len(), 3);
    }

    #[test]
    fn non_cofacial_slots_rejected() {
        let g = crate::generators::grid(3, 3).unwrap();
        // corner 0 and the far corner 8 share no inner face; choose slots on
        // two different inner faces
        let table = g.face_table();
        let inner_slot = |v: Vertex| {
            (0..g.degree(v)).find(|&s| !table.faces[table.face_of[g.rotation(v)[s].0]].outer).unwrap()
        };
        let err = g.add_edge(0, 8, inner_slot(0), inner_slot(8)).unwrap_err();
        assert_eq!(err, GraphError::SlotsNotCofacial);
    }

    #[test]
    fn collapse_triple_edge_to_single() {
        let g = PlaneGraph::from_rotations(
            &vec![vec![(1, 0), (1, 1), (1, 2)], vec![(0, 2), (0, 1), (0, 0)]],
            &[(0, 1, 0)],
        )
        .unwrap();
        assert_eq!(g.two_face_count(), 3);
        let h = g.collapse_two_faces();
        assert_eq!((h.vertex_count(), h.edge_count(), h.faces().len()), (2, 1, 1));
        assert_eq!(h.collapse_two_faces(), h);
    }

    #[test]
    fn collapse_is_identity_without_two_faces() {
        let g = wheel5();
        assert_eq!(g.collapse_two_faces(), g);
    }
}
