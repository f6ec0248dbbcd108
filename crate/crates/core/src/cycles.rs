//! Oriented cycles and paths, and systems of pairwise-disjoint ones.

use std::fmt;

use thiserror::Error;

use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CycleError {
    #[error("cycle needs at least 3 vertices, got {0}")]
    TooShort(usize),
    #[error("path needs at least one vertex")]
    EmptyPath,
    #[error("vertex {0} repeated")]
    RepeatedVertex(Vertex),
    #[error("vertex {0} is not on this member")]
    NotOnMember(Vertex),
}

/// A cycle with a fixed orientation, stored rotated so its minimum vertex
/// comes first. Reversal changes the orientation, not the rotation rule.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct OrientedCycle(Vec<Vertex>);

/// An oriented path; a single vertex is a valid path.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct OrientedPath(Vec<Vertex>);

fn check_distinct(vs: &[Vertex]) -> Result<(), CycleError> {
    let mut sorted = vs.to_vec();
    sorted.sort_unstable();
    match sorted.windows(2).find(|w| w[0] == w[1]) {
        Some(w) => Err(CycleError::RepeatedVertex(w[0])),
        None => Ok(()),
    }
}

impl OrientedCycle {
    /// Takes the vertices in cyclic order. Host adjacency is not checked here;
    /// see [`OrientedCycle::missing_edge`] and [`CycleSystem::validate`].
    pub fn new(mut vertices: Vec<Vertex>) -> Result<Self, CycleError> {
        if vertices.len() < 3 {
            return Err(CycleError::TooShort(vertices.len()));
        }
        check_distinct(&vertices)?;
        let start = (0..vertices.len()).min_by_key(|&i| vertices[i]).unwrap();
        vertices.rotate_left(start);
        Ok(OrientedCycle(vertices))
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.contains(&v)
    }

    pub fn position(&self, v: Vertex) -> Option<usize> {
        self.0.iter().position(|&w| w == v)
    }

    /// v⁺ on this orientation.
    pub fn successor(&self, v: Vertex) -> Option<Vertex> {
        self.position(v).map(|i| self.0[(i + 1) % self.0.len()])
    }

    /// v⁻ on this orientation.
    pub fn predecessor(&self, v: Vertex) -> Option<Vertex> {
        let len = self.0.len();
        self.position(v).map(|i| self.0[(i + len - 1) % len])
    }

    /// The path from `from` to `to` following the orientation, both ends
    /// included; a single vertex when `from == to`.
    pub fn segment(&self, from: Vertex, to: Vertex) -> Result<OrientedPath, CycleError> {
        let i = self.position(from).ok_or(CycleError::NotOnMember(from))?;
        let j = self.position(to).ok_or(CycleError::NotOnMember(to))?;
        let len = self.0.len();
        let count = (j + len - i) % len + 1;
        Ok(OrientedPath((0..count).map(|d| self.0[(i + d) % len]).collect()))
    }

    pub fn reversed(&self) -> OrientedCycle {
        let mut vs = self.0.clone();
        vs.reverse();
        OrientedCycle::new(vs).expect("reversal keeps a valid cycle")
    }

    /// Consecutive pairs (v, v⁺) including the closing pair.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        let len = self.0.len();
        (0..len).map(move |i| (self.0[i], self.0[(i + 1) % len]))
    }

    /// First consecutive pair that is not an edge of `g`.
    pub fn missing_edge(&self, g: &Graph) -> Option<(Vertex, Vertex)> {
        self.edges().find(|&(u, v)| !g.has_edge(u, v))
    }
}

impl OrientedPath {
    pub fn new(vertices: Vec<Vertex>) -> Result<Self, CycleError> {
        if vertices.is_empty() {
            return Err(CycleError::EmptyPath);
        }
        check_distinct(&vertices)?;
        Ok(OrientedPath(vertices))
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn into_vertices(self) -> Vec<Vertex> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Vertex {
        self.0[0]
    }

    pub fn last(&self) -> Vertex {
        self.0[self.0.len() - 1]
    }

    pub fn reversed(&self) -> OrientedPath {
        let mut vs = self.0.clone();
        vs.reverse();
        OrientedPath(vs)
    }

    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.0.windows(2).map(|w| (w[0], w[1]))
    }

    pub fn missing_edge(&self, g: &Graph) -> Option<(Vertex, Vertex)> {
        self.edges().find(|&(u, v)| !g.has_edge(u, v))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MemberKind {
    Cycle,
    Path,
}

/// One member of a system: an oriented cycle or an oriented path.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Member {
    Cycle(OrientedCycle),
    Path(OrientedPath),
}

impl Member {
    pub fn kind(&self) -> MemberKind {
        match self {
            Member::Cycle(_) => MemberKind::Cycle,
            Member::Path(_) => MemberKind::Path,
        }
    }

    pub fn vertices(&self) -> &[Vertex] {
        match self {
            Member::Cycle(c) => c.vertices(),
            Member::Path(p) => p.vertices(),
        }
    }

    pub fn len(&self) -> usize {
        self.vertices().len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices().is_empty()
    }

    /// Consecutive pairs (w, w⁺) along the member's orientation.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        match self {
            Member::Cycle(c) => c.edges().collect(),
            Member::Path(p) => p.edges().collect(),
        }
    }

    pub fn as_cycle(&self) -> Option<&OrientedCycle> {
        match self {
            Member::Cycle(c) => Some(c),
            Member::Path(_) => None,
        }
    }
}

/// Why a system is not a valid disjoint system in its host.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("vertex {vertex} out of range for host of order {order}")]
    OutOfRange { vertex: Vertex, order: usize },
    #[error("vertex {vertex} shared by members {first} and {second}")]
    SharedVertex { vertex: Vertex, first: usize, second: usize },
    #[error("member {member} uses non-edge ({u}, {v})")]
    MissingEdge { member: usize, u: Vertex, v: Vertex },
    #[error("system built for order {system} but host has order {host}")]
    OrderMismatch { system: usize, host: usize },
}

/// Pairwise-disjoint cycles and paths inside a host of fixed order, with a
/// vertex → (member, position) index.
#[derive(Clone, PartialEq, Eq)]
pub struct CycleSystem {
    order: usize,
    members: Vec<Member>,
    owner: Vec<Option<(usize, usize)>>,
}

/// H = G − C*: the uncovered vertices and their components in the host.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Remainder {
    pub vertices: Vec<Vertex>,
    pub components: Vec<Vec<Vertex>>,
}

impl CycleSystem {
    /// Members are indexed cycles first, then paths. Overlaps are recorded
    /// against the first owner and reported by [`CycleSystem::validate`].
    pub fn new(order: usize, cycles: Vec<OrientedCycle>, paths: Vec<OrientedPath>) -> Self {
        let members = cycles.into_iter().map(Member::Cycle).chain(paths.into_iter().map(Member::Path)).collect();
        Self::from_members(order, members)
    }

    pub fn from_cycles(order: usize, cycles: Vec<OrientedCycle>) -> Self {
        Self::new(order, cycles, Vec::new())
    }

    pub fn from_members(order: usize, members: Vec<Member>) -> Self {
        let mut owner = vec![None; order];
        for (i, m) in members.iter().enumerate() {
            for (pos, &v) in m.vertices().iter().enumerate() {
                if v < order && owner[v].is_none() {
                    owner[v] = Some((i, pos));
                }
            }
        }
        CycleSystem { order, members, owner }
    }

    /// Builds and validates in one step.
    pub fn checked(g: &Graph, members: Vec<Member>) -> Result<Self, Violation> {
        let sys = Self::from_members(g.order(), members);
        sys.validate(g)?;
        Ok(sys)
    }

    pub fn empty(order: usize) -> Self {
        Self::from_members(order, Vec::new())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn members(&self) -> &[Member] {
        &self.members
    }

    pub fn member(&self, i: usize) -> &Member {
        &self.members[i]
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn cycles(&self) -> impl Iterator<Item = &OrientedCycle> {
        self.members.iter().filter_map(Member::as_cycle)
    }

    pub fn paths(&self) -> impl Iterator<Item = &OrientedPath> {
        self.members.iter().filter_map(|m| match m {
            Member::Path(p) => Some(p),
            Member::Cycle(_) => None,
        })
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles().count()
    }

    pub fn path_count(&self) -> usize {
        self.paths().count()
    }

    /// Index of the member containing `v`.
    pub fn owner(&self, v: Vertex) -> Option<usize> {
        self.owner.get(v).copied().flatten().map(|(i, _)| i)
    }

    pub fn covers(&self, v: Vertex) -> bool {
        self.owner(v).is_some()
    }

    /// v⁺ on its member; `None` off the system or at a path's last vertex.
    pub fn successor(&self, v: Vertex) -> Option<Vertex> {
        let (i, pos) = self.owner.get(v).copied().flatten()?;
        let vs = self.members[i].vertices();
        match self.members[i] {
            Member::Cycle(_) => Some(vs[(pos + 1) % vs.len()]),
            Member::Path(_) => vs.get(pos + 1).copied(),
        }
    }

    /// v⁻ on its member; `None` off the system or at a path's first vertex.
    pub fn predecessor(&self, v: Vertex) -> Option<Vertex> {
        let (i, pos) = self.owner.get(v).copied().flatten()?;
        let vs = self.members[i].vertices();
        match self.members[i] {
            Member::Cycle(_) => Some(vs[(pos + vs.len() - 1) % vs.len()]),
            Member::Path(_) => pos.checked_sub(1).map(|p| vs[p]),
        }
    }

    /// |C*|: the sum of member orders.
    pub fn total_order(&self) -> usize {
        self.members.iter().map(Member::len).sum()
    }

    /// Checks range, disjointness and edge validity; reports the first
    /// offending vertex or edge.
    pub fn validate(&self, g: &Graph) -> Result<(), Violation> {
        if self.order != g.order() {
            return Err(Violation::OrderMismatch { system: self.order, host: g.order() });
        }
        let mut seen: Vec<Option<usize>> = vec![None; self.order];
        for (i, m) in self.members.iter().enumerate() {
            for &v in m.vertices() {
                if v >= self.order {
                    return Err(Violation::OutOfRange { vertex: v, order: self.order });
                }
                if let Some(first) = seen[v] {
                    return Err(Violation::SharedVertex { vertex: v, first, second: i });
                }
                seen[v] = Some(i);
            }
        }
        for (i, m) in self.members.iter().enumerate() {
            if let Some((u, v)) = m.edges().into_iter().find(|&(u, v)| !g.has_edge(u, v)) {
                return Err(Violation::MissingEdge { member: i, u, v });
            }
        }
        Ok(())
    }

    /// Uncovered vertices (ascending) and their components in `g`.
    pub fn remainder(&self, g: &Graph) -> Remainder {
        let vertices: Vec<Vertex> = (0..self.order).filter(|&v| !self.covers(v)).collect();
        let components = g.components_within(&vertices);
        Remainder { vertices, components }
    }

    /// True when all members are cycles and they cover every vertex.
    pub fn is_spanning(&self) -> bool {
        self.total_order() == self.order && self.members.iter().all(|m| m.kind() == MemberKind::Cycle)
    }

    pub fn with_member(&self, i: usize, member: Member) -> CycleSystem {
        let mut members = self.members.clone();
        members[i] = member;
        Self::from_members(self.order, members)
    }

    /// The system restricted to the given member indices, in that order.
    pub fn select(&self, indices: &[usize]) -> CycleSystem {
        Self::from_members(self.order, indices.iter().map(|&i| self.members[i].clone()).collect())
    }

    /// One line per member: `C: v₁ v₂ …` or `P: v₁ v₂ …`.
    pub fn dump(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for CycleSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for m in &self.members {
            let tag = match m {
                Member::Cycle(_) => 'C',
                Member::Path(_) => 'P',
            };
            let vs: Vec<String> = m.vertices().iter().map(ToString::to_string).collect();
            writeln!(f, "{tag}: {}", vs.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for CycleSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycleSystem(n={}; {})", self.order, self.to_string().trim_end().replace('\n', "; "))
    }
}

impl fmt::Debug for OrientedCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C{:?}", self.0)
    }
}

impl fmt::Debug for OrientedPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P{:?}", self.0)
    }
}

impl fmt::Debug for Member {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Member::Cycle(c) => c.fmt(f),
            Member::Path(p) => p.fmt(f),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, complete_bipartite};

    fn cyc(vs: &[Vertex]) -> OrientedCycle {
        OrientedCycle::new(vs.to_vec()).unwrap()
    }

    #[test]
    fn rotation_normalized_orientation_kept() {
        let c = cyc(&[3, 1, 2]);
        assert_eq!(c.vertices(), &[1, 2, 3]);
        let r = cyc(&[3, 2, 1]);
        assert_eq!(r.vertices(), &[1, 3, 2]);
        assert_ne!(c, r);
        assert_eq!(c.reversed(), r);
        assert_eq!(c.reversed().reversed(), c);
    }

    #[test]
    fn segments() {
        let c = cyc(&[1, 2, 3, 4, 5]);
        assert_eq!(c.segment(2, 4).unwrap().vertices(), &[2, 3, 4]);
        assert_eq!(c.segment(4, 2).unwrap().vertices(), &[4, 5, 1, 2]);
        assert_eq!(c.segment(3, 3).unwrap().vertices(), &[3]);
        assert_eq!(c.segment(3, 9), Err(CycleError::NotOnMember(9)));
        // x⁺ to x covers the cycle once
        assert_eq!(c.segment(4, 3).unwrap().len(), 5);
    }

    #[test]
    fn reverse_swaps_neighbors() {
        let c = cyc(&[0, 4, 2, 5, 1]);
        let r = c.reversed();
        for &v in c.vertices() {
            assert_eq!(r.successor(v), c.predecessor(v));
            assert_eq!(r.predecessor(v), c.successor(v));
        }
    }

    #[test]
    fn construction_errors() {
        assert_eq!(OrientedCycle::new(vec![0, 1]), Err(CycleError::TooShort(2)));
        assert_eq!(OrientedCycle::new(vec![0, 1, 0]), Err(CycleError::RepeatedVertex(0)));
        assert_eq!(OrientedPath::new(vec![]), Err(CycleError::EmptyPath));
        assert!(OrientedPath::new(vec![4]).is_ok());
    }

    #[test]
    fn validate_reports() {
        let k7 = complete(7);
        let ok = CycleSystem::from_cycles(7, vec![cyc(&[0, 1, 2]), cyc(&[3, 4, 5])]);
        assert_eq!(ok.validate(&k7), Ok(()));
        let shared = CycleSystem::from_cycles(7, vec![cyc(&[0, 1, 2]), cyc(&[2, 3, 4])]);
        assert_eq!(shared.validate(&k7), Err(Violation::SharedVertex { vertex: 2, first: 0, second: 1 }));
        let c5 = crate::graph::cycle(5);
        let hop = CycleSystem::from_cycles(5, vec![cyc(&[0, 1, 3])]);
        assert_eq!(hop.validate(&c5), Err(Violation::MissingEdge { member: 0, u: 1, v: 3 }));
        let k34 = complete_bipartite(3, 4);
        let odd = CycleSystem::from_cycles(7, vec![cyc(&[0, 3, 1])]);
        assert!(matches!(odd.validate(&k34), Err(Violation::MissingEdge { .. })));
    }

    #[test]
    fn orders_and_remainder() {
        let k5 = complete(5);
        assert_eq!(CycleSystem::empty(5).total_order(), 0);
        let one = CycleSystem::from_cycles(5, vec![cyc(&[0, 1, 2])]);
        let rem = one.remainder(&k5);
        assert_eq!(rem.vertices, vec![3, 4]);
        assert_eq!(rem.components, vec![vec![3, 4]]);
        let k7 = complete(7);
        let two = CycleSystem::from_cycles(7, vec![cyc(&[0, 1, 2]), cyc(&[3, 4, 5, 6])]);
        assert_eq!(two.total_order(), 7);
        assert!(two.is_spanning());
        assert!(two.remainder(&k7).vertices.is_empty());
    }

    #[test]
    fn navigation_on_paths() {
        let sys = CycleSystem::new(6, vec![], vec![OrientedPath::new(vec![4, 2, 0]).unwrap()]);
        assert_eq!(sys.successor(4), Some(2));
        assert_eq!(sys.successor(0), None);
        assert_eq!(sys.predecessor(4), None);
        assert_eq!(sys.predecessor(0), Some(2));
        assert_eq!(sys.owner(1), None);
        assert_eq!(sys.dump(), "P: 4 2 0\n");
    }
}
