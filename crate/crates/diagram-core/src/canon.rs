//! Canonical forms under vertex relabeling, AS and the signature's leg freedom.
//!
//! Nodes (legs, ι, vertices) are labeled by colour refinement plus an
//! exhaustive individualization search. Each leaf labeling yields a
//! presentation with every vertex's slots sorted by neighbour label; the
//! minimal presentation wins. Two minimal leaves of opposite sign mean the
//! generator is zero.

use crate::diagram::{Diagram, End};
use crate::leg::Flavor;
use crate::signature::Signature;

/// Canonical representative and sign; `None` if the generator is zero.
pub fn canonicalize(d: &Diagram, sig: Signature) -> Option<(Diagram, i32)> {
    if d.filled > 1 || d.has_self_loop() {
        return None;
    }
    let n = d.legs.len();
    let iota = d.iota as usize;
    let nv = d.nverts as usize;
    let nn = n + iota + nv;
    if nn == 0 {
        return Some((d.clone(), 1));
    }
    let g = Graph::new(d);
    let mut keys: Vec<(u8, u8, u8, u32)> = Vec::with_capacity(nn);
    for (i, leg) in d.legs.iter().enumerate() {
        let class = sig.leg_class(*leg);
        let flavor = match leg.flavor {
            Flavor::Fat => 0,
            Flavor::F => 1,
            Flavor::G1 => 2,
        };
        if class.fixed {
            keys.push((0, class.block, 0, i as u32));
        } else {
            keys.push((0, class.block, 1, flavor));
        }
    }
    if d.iota {
        keys.push((1, 0, 0, 0));
    }
    for _ in 0..nv {
        keys.push((2, 0, 0, 0));
    }
    let mut colors = rank(&keys);
    g.refine(&mut colors);
    let mut search = Search {
        g: &g,
        d,
        best: None,
        zero: false,
    };
    search.run(colors);
    if search.zero {
        return None;
    }
    let (partner, sign, order) = search.best.expect("at least one leaf");
    let legs = order.iter().map(|&i| d.legs[i]).collect();
    Some((
        Diagram {
            legs,
            iota: d.iota,
            nverts: d.nverts,
            partner,
            filled: d.filled,
            open: d.open,
            loops: d.loops,
        },
        sign,
    ))
}

fn rank<K: Ord + Clone>(keys: &[K]) -> Vec<u32> {
    let mut sorted: Vec<K> = keys.to_vec();
    sorted.sort();
    sorted.dedup();
    keys.iter()
        .map(|k| sorted.binary_search(k).unwrap() as u32)
        .collect()
}

struct Graph {
    /// Neighbour nodes per node, with multiplicity.
    adj: Vec<Vec<usize>>,
}

impl Graph {
    fn new(d: &Diagram) -> Self {
        let n = d.legs.len();
        let iota = d.iota as usize;
        let nn = n + iota + d.nverts as usize;
        let node = |h: u32| -> usize {
            match d.end(h) {
                End::Leg(i) => i,
                End::Iota => n,
                End::Vertex(v, _) => n + iota + v,
            }
        };
        let mut adj = vec![Vec::with_capacity(3); nn];
        for (h, &p) in d.partner.iter().enumerate() {
            adj[node(h as u32)].push(node(p));
        }
        Graph { adj }
    }

    fn count(colors: &[u32]) -> usize {
        colors.iter().copied().max().map_or(0, |m| m as usize + 1)
    }

    fn refine(&self, colors: &mut Vec<u32>) {
        let mut classes = Self::count(colors);
        loop {
            let keys: Vec<(u32, [u32; 3])> = (0..colors.len())
                .map(|x| {
                    let mut nb = [u32::MAX; 3];
                    for (i, &y) in self.adj[x].iter().enumerate() {
                        nb[i] = colors[y];
                    }
                    nb.sort_unstable();
                    (colors[x], nb)
                })
                .collect();
            let next = rank(&keys);
            let c = Self::count(&next);
            *colors = next;
            if c == classes {
                return;
            }
            classes = c;
        }
    }
}

struct Search<'a> {
    g: &'a Graph,
    d: &'a Diagram,
    best: Option<(Vec<u32>, i32, Vec<usize>)>,
    zero: bool,
}

impl Search<'_> {
    fn run(&mut self, colors: Vec<u32>) {
        if self.zero {
            return;
        }
        let nn = colors.len();
        let classes = Graph::count(&colors);
        if classes == nn {
            self.leaf(&colors);
            return;
        }
        let mut size = vec![0usize; classes];
        for &c in &colors {
            size[c as usize] += 1;
        }
        let target = size.iter().position(|&s| s > 1).unwrap() as u32;
        for x in 0..nn {
            if colors[x] != target {
                continue;
            }
            let mut next: Vec<u32> = colors
                .iter()
                .enumerate()
                .map(|(y, &c)| 2 * c + (c == target && y != x) as u32)
                .collect();
            next = rank(&next);
            self.g.refine(&mut next);
            self.run(next);
            if self.zero {
                return;
            }
        }
    }

    fn leaf(&mut self, lab: &[u32]) {
        let d = self.d;
        let n = d.legs.len();
        let iota = d.iota as usize;
        let nv = d.nverts as usize;
        let off = n + iota;
        let base = off as u32;
        // order[k] = original leg at output position k
        let mut order = vec![0usize; n];
        for i in 0..n {
            order[lab[i] as usize] = i;
        }
        let mut sign = 1i32;
        let mut inv = 0u32;
        for a in 0..n {
            if d.legs[order[a]].grade() % 2 == 0 {
                continue;
            }
            for b in a + 1..n {
                if d.legs[order[b]].grade() % 2 == 1 && order[a] > order[b] {
                    inv += 1;
                }
            }
        }
        if inv % 2 == 1 {
            sign = -sign;
        }
        // slot order per original vertex
        let node_of = |h: u32| -> usize {
            match d.end(h) {
                End::Leg(i) => i,
                End::Iota => n,
                End::Vertex(v, _) => off + v,
            }
        };
        let mut pos_in_new = vec![0u8; 3 * nv];
        for v in 0..nv {
            let me = lab[off + v];
            let mut slots = [0usize, 1, 2];
            let key = |s: usize| -> (u32, u32) {
                let h = d.slot(v, s);
                let p = d.partner[h as usize];
                let other = node_of(p);
                let l = lab[other];
                let tie = if other >= off && l > me {
                    s as u32
                } else if other >= off {
                    ((p - base) % 3) as u32
                } else {
                    0
                };
                (l, tie)
            };
            slots.sort_by_key(|&s| key(s));
            if !matches!(slots, [0, 1, 2] | [1, 2, 0] | [2, 0, 1]) {
                sign = -sign;
            }
            for (i, &s) in slots.iter().enumerate() {
                pos_in_new[3 * v + s] = i as u8;
            }
        }
        let newh = |h: u32| -> u32 {
            match d.end(h) {
                End::Leg(i) => lab[i],
                End::Iota => n as u32,
                End::Vertex(v, s) => {
                    base + 3 * (lab[off + v] - base) + pos_in_new[3 * v + s] as u32
                }
            }
        };
        let mut partner = vec![0u32; d.partner.len()];
        for (h, &p) in d.partner.iter().enumerate() {
            partner[newh(h as u32) as usize] = newh(p);
        }
        match &self.best {
            None => self.best = Some((partner, sign, order)),
            Some((bp, bs, _)) => match partner.cmp(bp) {
                std::cmp::Ordering::Less => self.best = Some((partner, sign, order)),
                std::cmp::Ordering::Equal => {
                    if *bs != sign {
                        self.zero = true;
                    }
                }
                std::cmp::Ordering::Greater => {}
            },
        }
    }
}
