//! Diagram generators and raw graph surgery.
//!
//! Half-edges are numbered implicitly: legs `0..n`, then the ι half-edge
//! (if present), then three slots per trivalent vertex. The slot order of a
//! vertex is its cyclic orientation. Disc letters always sit at the far left
//! of the leg word, filled disc first.

use crate::error::{DiagramError, Result};
use crate::leg::{Flavor, Leg, Line};
use crate::signature::Signature;
use std::cmp::Ordering;

/// One generator of a diagram space.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Diagram {
    /// Ordered legs.
    pub legs: Vec<Leg>,
    /// Whether the ι-vertex is present.
    pub iota: bool,
    /// Number of trivalent vertices.
    pub nverts: u32,
    /// Perfect matching on half-edges.
    pub partner: Vec<u32>,
    /// Number of filled discs.
    pub filled: u32,
    /// Number of open discs.
    pub open: u32,
    /// Number of vertex-free closed loops.
    pub loops: u32,
}

/// Owner of a half-edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum End {
    /// Leg at a position.
    Leg(usize),
    /// The ι-vertex.
    Iota,
    /// Slot of a trivalent vertex.
    Vertex(usize, usize),
}

impl Diagram {
    /// The empty diagram.
    pub fn empty() -> Self {
        Diagram {
            legs: Vec::new(),
            iota: false,
            nverts: 0,
            partner: Vec::new(),
            filled: 0,
            open: 0,
            loops: 0,
        }
    }

    /// A chord joining two legs.
    pub fn chord(a: Leg, b: Leg) -> Self {
        Diagram {
            legs: vec![a, b],
            iota: false,
            nverts: 0,
            partner: vec![1, 0],
            filled: 0,
            open: 0,
            loops: 0,
        }
    }

    /// The wheel with `k` spokes of the given leg kind.
    ///
    /// Vertex `i` has slots (leg `i`, edge to vertex `i+1`, edge to vertex `i-1`).
    pub fn wheel(k: usize, leg: Leg) -> Self {
        let n = k as u32;
        let mut partner = vec![0u32; k + 3 * k];
        for i in 0..k {
            let v = n + 3 * i as u32;
            partner[i] = v;
            partner[v as usize] = i as u32;
            let next = n + 3 * ((i + 1) % k) as u32;
            partner[(v + 1) as usize] = next + 2;
            partner[(next + 2) as usize] = v + 1;
        }
        Diagram {
            legs: vec![leg; k],
            iota: false,
            nverts: n,
            partner,
            filled: 0,
            open: 0,
            loops: 0,
        }
    }

    /// Number of legs.
    pub fn nlegs(&self) -> usize {
        self.legs.len()
    }

    /// First vertex half-edge.
    pub fn base(&self) -> u32 {
        self.legs.len() as u32 + self.iota as u32
    }

    /// Half-edge of the ι-vertex.
    pub fn iota_half(&self) -> Option<u32> {
        self.iota.then_some(self.legs.len() as u32)
    }

    /// Half-edge of vertex `v`, slot `k`.
    pub fn slot(&self, v: usize, k: usize) -> u32 {
        self.base() + 3 * v as u32 + k as u32
    }

    /// Total number of half-edges.
    pub fn half_edges(&self) -> usize {
        self.base() as usize + 3 * self.nverts as usize
    }

    /// Owner of a half-edge.
    pub fn end(&self, h: u32) -> End {
        let n = self.legs.len() as u32;
        if h < n {
            End::Leg(h as usize)
        } else if self.iota && h == n {
            End::Iota
        } else {
            let r = h - self.base();
            End::Vertex((r / 3) as usize, (r % 3) as usize)
        }
    }

    /// Filtration weight: legs + trivalent vertices + 2·loops.
    pub fn weight(&self) -> usize {
        self.legs.len() + self.nverts as usize + 2 * self.loops as usize
    }

    /// Sum of leg grades.
    pub fn leg_grade(&self) -> u32 {
        self.legs.iter().map(|l| l.grade()).sum()
    }

    /// Sum of grades of the legs strictly left of `pos`.
    pub fn grade_before(&self, pos: usize) -> u32 {
        self.legs[..pos].iter().map(|l| l.grade()).sum()
    }

    /// Number of grade-1 legs.
    pub fn count_g1(&self) -> usize {
        self.legs.iter().filter(|l| l.flavor == Flavor::G1).count()
    }

    /// Checks the structural invariants for a signature.
    pub fn validate(&self, sig: Signature) -> Result<()> {
        let total = self.half_edges();
        if self.partner.len() != total {
            return Err(DiagramError::Invalid(format!(
                "matching has {} entries, expected {}",
                self.partner.len(),
                total
            )));
        }
        for (h, &p) in self.partner.iter().enumerate() {
            if p as usize >= total {
                return Err(DiagramError::Invalid(format!("half-edge {h} matched out of range")));
            }
            if p as usize == h {
                return Err(DiagramError::Invalid(format!("half-edge {h} matched to itself")));
            }
            if self.partner[p as usize] as usize != h {
                return Err(DiagramError::Invalid(format!("half-edge {h} not in a perfect matching")));
            }
        }
        if self.iota != sig.iota {
            return Err(DiagramError::Invalid(format!(
                "ι-vertex presence does not match signature {sig}"
            )));
        }
        for leg in &self.legs {
            if !sig.admits_leg(*leg) {
                return Err(DiagramError::Invalid(format!("leg {leg} not admissible in {sig}")));
            }
        }
        if (self.filled > 0 || self.open > 0) && !sig.allows_discs() {
            return Err(DiagramError::Invalid(format!("discs not admissible in {sig}")));
        }
        if self.loops > 0 && !sig.allows_loops() {
            return Err(DiagramError::Invalid(format!("loops not admissible in {sig}")));
        }
        Ok(())
    }

    /// Whether some vertex has an edge to itself.
    pub fn has_self_loop(&self) -> bool {
        let base = self.base();
        (0..self.nverts).any(|v| {
            let s = base + 3 * v;
            (0..3).any(|k| {
                let p = self.partner[(s + k) as usize];
                p >= s && p < s + 3
            })
        })
    }

    /// Reorders legs: new leg `i` is old leg `order[i]`.
    pub fn permute_legs(&self, order: &[usize]) -> Diagram {
        let n = self.legs.len();
        debug_assert_eq!(order.len(), n);
        let mut map: Vec<u32> = (0..self.half_edges() as u32).collect();
        for (i, &o) in order.iter().enumerate() {
            map[o] = i as u32;
        }
        let mut partner = vec![0u32; self.partner.len()];
        for (h, &p) in self.partner.iter().enumerate() {
            partner[map[h] as usize] = map[p as usize];
        }
        Diagram {
            legs: order.iter().map(|&o| self.legs[o]).collect(),
            partner,
            ..self.clone()
        }
    }

    /// Removes legs `p` and `q` and joins their partners; a chord becomes a loop.
    pub fn glue_legs(&self, p: usize, q: usize) -> Diagram {
        assert!(p != q);
        let n = self.legs.len();
        let (pp, pq) = (self.partner[p], self.partner[q]);
        let shift = |h: u32| -> u32 {
            let h = h as usize;
            let mut out = h;
            if h > p {
                out -= 1;
            }
            if h > q {
                out -= 1;
            }
            out as u32
        };
        let mut partner = vec![0u32; self.partner.len() - 2];
        let mut loops = self.loops;
        if pp as usize == q {
            loops += 1;
        }
        for h in 0..self.partner.len() {
            if h == p || h == q {
                continue;
            }
            let mut t = self.partner[h];
            if t as usize == p {
                t = pq;
            } else if t as usize == q {
                t = pp;
            }
            partner[shift(h as u32) as usize] = shift(t);
        }
        let legs = (0..n).filter(|&i| i != p && i != q).map(|i| self.legs[i]).collect();
        Diagram {
            legs,
            partner,
            loops,
            ..self.clone()
        }
    }

    /// Concatenates leg words and takes the disjoint union of graphs.
    ///
    /// Returns the sign of moving `other`'s filled discs to the far left.
    pub fn juxtapose_raw(&self, other: &Diagram) -> Result<(Diagram, i32)> {
        if self.iota && other.iota {
            return Err(DiagramError::Invalid("two ι-vertices".into()));
        }
        let n1 = self.legs.len() as u32;
        let n2 = other.legs.len() as u32;
        let n = n1 + n2;
        let iota = self.iota || other.iota;
        let base = n + iota as u32;
        let v1 = self.nverts;
        let map1 = |h: u32| -> u32 {
            match self.end(h) {
                End::Leg(i) => i as u32,
                End::Iota => n,
                End::Vertex(v, k) => base + 3 * v as u32 + k as u32,
            }
        };
        let map2 = |h: u32| -> u32 {
            match other.end(h) {
                End::Leg(i) => n1 + i as u32,
                End::Iota => n,
                End::Vertex(v, k) => base + 3 * (v1 + v as u32) + k as u32,
            }
        };
        let mut partner = vec![0u32; (base + 3 * (v1 + other.nverts)) as usize];
        for (h, &p) in self.partner.iter().enumerate() {
            partner[map1(h as u32) as usize] = map1(p);
        }
        for (h, &p) in other.partner.iter().enumerate() {
            partner[map2(h as u32) as usize] = map2(p);
        }
        let mut legs = self.legs.clone();
        legs.extend_from_slice(&other.legs);
        let sign = if other.filled % 2 == 1 && self.leg_grade() % 2 == 1 { -1 } else { 1 };
        Ok((
            Diagram {
                legs,
                iota,
                nverts: v1 + other.nverts,
                partner,
                filled: self.filled + other.filled,
                open: self.open + other.open,
                loops: self.loops + other.loops,
            },
            sign,
        ))
    }

    /// Turns the ι-vertex into a grade-1 leg at the far left.
    pub fn iota_to_leg(&self, line: Line) -> Result<Diagram> {
        let ih = self
            .iota_half()
            .ok_or_else(|| DiagramError::Invalid("no ι-vertex".into()))?;
        let n = self.legs.len() as u32;
        // ι half-edge sits at index n; the new leg takes index 0.
        let map = |h: u32| -> u32 {
            if h < n {
                h + 1
            } else if h == ih {
                0
            } else {
                h
            }
        };
        let mut partner = vec![0u32; self.partner.len()];
        for (h, &p) in self.partner.iter().enumerate() {
            partner[map(h as u32) as usize] = map(p);
        }
        let mut legs = Vec::with_capacity(self.legs.len() + 1);
        legs.push(Leg::on(Flavor::G1, line));
        legs.extend_from_slice(&self.legs);
        Ok(Diagram {
            legs,
            iota: false,
            partner,
            ..self.clone()
        })
    }

    /// Inserts the ι-vertex in place of leg `pos`, dropping that leg.
    pub fn leg_to_iota(&self, pos: usize) -> Result<Diagram> {
        if self.iota {
            return Err(DiagramError::Invalid("two ι-vertices".into()));
        }
        let n = self.legs.len() as u32;
        let pos = pos as u32;
        // legs shift down past pos; the ι half-edge lands at n-1, vertices keep their index.
        let map = |h: u32| -> u32 {
            if h < pos {
                h
            } else if h == pos {
                n - 1
            } else if h < n {
                h - 1
            } else {
                h
            }
        };
        let mut partner = vec![0u32; self.partner.len()];
        for (h, &p) in self.partner.iter().enumerate() {
            partner[map(h as u32) as usize] = map(p);
        }
        let mut legs = self.legs.clone();
        legs.remove(pos as usize);
        Ok(Diagram {
            legs,
            iota: true,
            partner,
            ..self.clone()
        })
    }

    /// Sets every leg's line tag.
    pub fn with_lines(&self, line: Line) -> Diagram {
        let mut d = self.clone();
        for l in &mut d.legs {
            l.line = line;
        }
        d
    }

    /// Replaces every leg flavor via a map.
    pub fn map_flavors(&self, f: impl Fn(Flavor) -> Flavor) -> Diagram {
        let mut d = self.clone();
        for l in &mut d.legs {
            l.flavor = f(l.flavor);
        }
        d
    }

    /// Connected components as lists of nodes (legs, ι, vertices), loops excluded.
    ///
    /// Node numbering: legs `0..n`, ι at `n` if present, vertices after.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.legs.len();
        let nn = n + self.iota as usize + self.nverts as usize;
        let node = |h: u32| -> usize {
            match self.end(h) {
                End::Leg(i) => i,
                End::Iota => n,
                End::Vertex(v, _) => n + self.iota as usize + v,
            }
        };
        let mut parent: Vec<usize> = (0..nn).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let nx = p[y];
                p[y] = r;
                y = nx;
            }
            r
        }
        for (h, &q) in self.partner.iter().enumerate() {
            let a = find(&mut parent, node(h as u32));
            let b = find(&mut parent, node(q));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut groups: Vec<Vec<usize>> = Vec::new();
        let mut index = vec![usize::MAX; nn];
        for x in 0..nn {
            let r = find(&mut parent, x);
            if index[r] == usize::MAX {
                index[r] = groups.len();
                groups.push(Vec::new());
            }
            groups[index[r]].push(x);
        }
        groups
    }

    /// The subdiagram on a set of nodes, keeping leg order; no discs or loops.
    pub fn subdiagram(&self, nodes: &[usize]) -> Diagram {
        let n = self.legs.len();
        let vstart = n + self.iota as usize;
        let legs_in: Vec<usize> = nodes.iter().copied().filter(|&x| x < n).collect();
        let has_iota = self.iota && nodes.contains(&n);
        let verts_in: Vec<usize> = nodes.iter().copied().filter(|&x| x >= vstart).map(|x| x - vstart).collect();
        let nl = legs_in.len() as u32;
        let base = nl + has_iota as u32;
        let mut map = vec![u32::MAX; self.partner.len()];
        for (i, &l) in legs_in.iter().enumerate() {
            map[l] = i as u32;
        }
        if has_iota {
            map[n] = nl;
        }
        for (j, &v) in verts_in.iter().enumerate() {
            for k in 0..3 {
                map[self.slot(v, k) as usize] = base + 3 * j as u32 + k as u32;
            }
        }
        let mut partner = vec![0u32; (base + 3 * verts_in.len() as u32) as usize];
        for (h, &m) in map.iter().enumerate() {
            if m != u32::MAX {
                partner[m as usize] = map[self.partner[h] as usize];
            }
        }
        Diagram {
            legs: legs_in.iter().map(|&l| self.legs[l]).collect(),
            iota: has_iota,
            nverts: verts_in.len() as u32,
            partner,
            filled: 0,
            open: 0,
            loops: 0,
        }
    }
}

impl PartialOrd for Diagram {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Diagram {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| self.legs.len().cmp(&other.legs.len()))
            .then_with(|| self.legs.cmp(&other.legs))
            .then_with(|| self.iota.cmp(&other.iota))
            .then_with(|| self.filled.cmp(&other.filled))
            .then_with(|| self.open.cmp(&other.open))
            .then_with(|| self.loops.cmp(&other.loops))
            .then_with(|| self.nverts.cmp(&other.nverts))
            .then_with(|| self.partner.cmp(&other.partner))
    }
}

/// A substitution fragment: a diagram whose last leg is a root placeholder.
///
/// The root's partner is where the consumed leg's edge reattaches.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Fragment {
    /// Body; the last leg is the root placeholder.
    pub body: Diagram,
}

/// A slot of a single-vertex fragment.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Port {
    /// The root edge.
    Root,
    /// New leg with the given index.
    Leg(usize),
    /// The ι-vertex.
    Iota,
}

const ROOT: Leg = Leg::new(Flavor::Fat);

impl Fragment {
    /// Number of new legs.
    pub fn nlegs(&self) -> usize {
        self.body.legs.len() - 1
    }

    /// New legs.
    pub fn legs(&self) -> &[Leg] {
        &self.body.legs[..self.nlegs()]
    }

    /// Half-edge of the root.
    pub fn root(&self) -> u32 {
        self.nlegs() as u32
    }

    /// Fragment replacing a leg by a single new leg.
    pub fn leg(leg: Leg) -> Self {
        Fragment {
            body: Diagram::chord(leg, ROOT),
        }
    }

    /// Fragment capping the edge with the ι-vertex.
    pub fn cap() -> Self {
        Fragment {
            body: Diagram {
                legs: vec![ROOT],
                iota: true,
                nverts: 0,
                partner: vec![1, 0],
                filled: 0,
                open: 0,
                loops: 0,
            },
        }
    }

    /// Fragment with one trivalent vertex whose slots are the given ports.
    pub fn vertex(legs: &[Leg], slots: [Port; 3]) -> Self {
        let k = legs.len() as u32;
        let iota = slots.contains(&Port::Iota);
        let mut all = legs.to_vec();
        all.push(ROOT);
        let base = k + 1 + iota as u32;
        let mut partner = vec![0u32; (base + 3) as usize];
        for (i, port) in slots.iter().enumerate() {
            let h = match port {
                Port::Root => k,
                Port::Leg(j) => *j as u32,
                Port::Iota => k + 1,
            };
            partner[h as usize] = base + i as u32;
            partner[(base + i as u32) as usize] = h;
        }
        Fragment {
            body: Diagram {
                legs: all,
                iota,
                nverts: 1,
                partner,
                filled: 0,
                open: 0,
                loops: 0,
            },
        }
    }

    /// Adds disc emissions.
    pub fn with_discs(mut self, filled: u32, open: u32) -> Self {
        self.body.filled += filled;
        self.body.open += open;
        self
    }

    /// Replaces leg `pos` of `host` by this fragment.
    ///
    /// New legs take the consumed leg's line unless they carry their own.
    /// Emitted discs move to the far left; returns `None` if two filled discs
    /// result, otherwise the raw diagram and the sign of the disc move.
    pub fn splice(&self, host: &Diagram, pos: usize) -> Result<Option<(Diagram, i32)>> {
        let f = &self.body;
        if host.iota && f.iota {
            return Err(DiagramError::Invalid("two ι-vertices".into()));
        }
        let filled = host.filled + f.filled;
        if filled > 1 {
            return Ok(None);
        }
        let k = self.nlegs() as u32;
        let hn = host.legs.len() as u32;
        let n = hn - 1 + k;
        let iota = host.iota || f.iota;
        let base = n + iota as u32;
        let hv = host.nverts;
        let p = pos as u32;
        let root = self.root();
        let map_host = |h: u32| -> u32 {
            match host.end(h) {
                End::Leg(i) => {
                    let i = i as u32;
                    if i < p {
                        i
                    } else {
                        i - 1 + k
                    }
                }
                End::Iota => n,
                End::Vertex(v, s) => base + 3 * v as u32 + s as u32,
            }
        };
        let map_frag = |h: u32| -> u32 {
            match f.end(h) {
                End::Leg(j) => p + j as u32,
                End::Iota => n,
                End::Vertex(v, s) => base + 3 * (hv + v as u32) + s as u32,
            }
        };
        let mut partner = vec![0u32; (base + 3 * (hv + f.nverts)) as usize];
        let attach = host.partner[pos];
        let inner = f.partner[root as usize];
        for (h, &q) in host.partner.iter().enumerate() {
            if h == pos {
                continue;
            }
            let t = if q == p { map_frag(inner) } else { map_host(q) };
            partner[map_host(h as u32) as usize] = t;
        }
        for (h, &q) in f.partner.iter().enumerate() {
            if h as u32 == root {
                continue;
            }
            let t = if q == root { map_host(attach) } else { map_frag(q) };
            partner[map_frag(h as u32) as usize] = t;
        }
        let line = host.legs[pos].line;
        let mut legs = Vec::with_capacity(n as usize);
        legs.extend_from_slice(&host.legs[..pos]);
        for l in self.legs() {
            let mut l = *l;
            if l.line == Line::None {
                l.line = line;
            }
            legs.push(l);
        }
        legs.extend_from_slice(&host.legs[pos + 1..]);
        let sign = if f.filled == 1 && host.grade_before(pos) % 2 == 1 { -1 } else { 1 };
        Ok(Some((
            Diagram {
                legs,
                iota,
                nverts: hv + f.nverts,
                partner,
                filled,
                open: host.open + f.open,
                loops: host.loops + f.loops,
            },
            sign,
        )))
    }

    /// Splices into leg `pos` of another fragment (which must not be its root).
    pub fn splice_into_fragment(&self, host: &Fragment, pos: usize) -> Result<Option<(Fragment, i32)>> {
        debug_assert!(pos < host.nlegs());
        Ok(self.splice(&host.body, pos)?.map(|(body, s)| (Fragment { body }, s)))
    }
}
