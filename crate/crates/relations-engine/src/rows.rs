//! Relation instances: IHX at internal edges, STU-type and Clifford rows at
//! adjacent legs.

use diagram_core::{canonicalize, Coeff, Diagram, End, Flavor, Fragment, Leg, Port, Signature, Space};
use num_traits::One;

/// One relation row: a signed combination of canonical diagrams equal to zero.
pub type Row = Vec<(Diagram, Coeff)>;

fn push(row: &mut Row, d: &Diagram, c: i64, sig: Signature) {
    if let Some((cd, s)) = canonicalize(d, sig) {
        let k = Coeff::from_integer((c * s as i64).into());
        if let Some(e) = row.iter_mut().find(|e| e.0 == cd) {
            e.1 += k;
        } else {
            row.push((cd, k));
        }
    }
}

fn finish(mut row: Row) -> Option<Row> {
    row.retain(|e| e.1 != Coeff::from_integer(0.into()));
    (!row.is_empty()).then_some(row)
}

/// Rewires the four outer ports of an internal edge.
///
/// `ports` are half-edges `[x1, x2, y1, y2]`; `assign[k]` is the original
/// port whose edge end now attaches at port `k`.
fn rewire(d: &Diagram, ports: [u32; 4], assign: [usize; 4]) -> Diagram {
    let mut out = d.clone();
    let orig: Vec<u32> = ports.iter().map(|&p| d.partner[p as usize]).collect();
    let port_index = |h: u32| ports.iter().position(|&p| p == h);
    let mut placed = [usize::MAX; 4];
    for (k, &a) in assign.iter().enumerate() {
        placed[a] = k;
    }
    for k in 0..4 {
        let a = assign[k];
        let far = orig[a];
        let target = match port_index(far) {
            Some(m) => ports[placed[m]],
            None => far,
        };
        out.partner[ports[k] as usize] = target;
        out.partner[target as usize] = ports[k];
    }
    out
}

/// IHX rows, one per internal edge joining two distinct vertices.
pub fn ihx_rows(d: &Diagram, sig: Signature) -> Vec<Row> {
    let mut rows = Vec::new();
    let nv = d.nverts as usize;
    for u in 0..nv {
        for su in 0..3 {
            let h = d.slot(u, su);
            let p = d.partner[h as usize];
            let End::Vertex(v, sv) = d.end(p) else { continue };
            if v == u || h > p {
                continue;
            }
            let ports = [
                d.slot(u, (su + 1) % 3),
                d.slot(u, (su + 2) % 3),
                d.slot(v, (sv + 1) % 3),
                d.slot(v, (sv + 2) % 3),
            ];
            let mut row = Row::new();
            push(&mut row, d, 1, sig);
            push(&mut row, &rewire(d, ports, [1, 2, 0, 3]), 1, sig);
            push(&mut row, &rewire(d, ports, [2, 0, 1, 3]), 1, sig);
            if let Some(r) = finish(row) {
                rows.push(r);
            }
        }
    }
    rows
}

/// Legs `i`, `i+1` replaced by one leg attached to a new vertex
/// (end of `i`, end of `i+1`, new leg).
pub fn bracket(d: &Diagram, i: usize, new: Leg) -> Diagram {
    let temp = Leg::G1.with_line(new.line);
    let frag = Fragment::vertex(&[new, temp], [Port::Root, Port::Leg(1), Port::Leg(0)]);
    let (spliced, _) = frag.splice(d, i).expect("no ι in fragment").expect("no discs in fragment");
    spliced.glue_legs(i + 1, i + 2)
}

fn swap(d: &Diagram, i: usize) -> Diagram {
    let mut order: Vec<usize> = (0..d.nlegs()).collect();
    order.swap(i, i + 1);
    d.permute_legs(&order)
}

fn commutator_row(d: &Diagram, i: usize, new: Leg, sig: Signature) -> Option<Row> {
    let mut row = Row::new();
    push(&mut row, d, 1, sig);
    push(&mut row, &swap(d, i), -1, sig);
    push(&mut row, &bracket(d, i, new), -1, sig);
    finish(row)
}

fn clifford_row(d: &Diagram, i: usize, sig: Signature) -> Option<Row> {
    let mut row = Row::new();
    push(&mut row, d, 1, sig);
    push(&mut row, &swap(d, i), 1, sig);
    push(&mut row, &d.glue_legs(i, i + 1), -1, sig);
    finish(row)
}

/// STU-type and Clifford rows at adjacent legs of a canonical diagram.
pub fn leg_rows(d: &Diagram, sig: Signature) -> Vec<Row> {
    let mut rows = Vec::new();
    let n = d.nlegs();
    for i in 0..n.saturating_sub(1) {
        let (a, b) = (d.legs[i].flavor, d.legs[i + 1].flavor);
        let row = match sig.space {
            Space::A | Space::ALoops => commutator_row(d, i, Leg::FAT, sig),
            Space::WHat => match (a, b) {
                (Flavor::G1, Flavor::G1) => clifford_row(d, i, sig),
                (Flavor::Fat, Flavor::Fat) => commutator_row(d, i, Leg::FAT, sig),
                _ => commutator_row(d, i, Leg::G1, sig),
            },
            Space::WHatF => match (a, b) {
                (Flavor::F, Flavor::F) => commutator_row(d, i, Leg::F, sig),
                (Flavor::G1, Flavor::G1) => clifford_row(d, i, sig),
                _ => None,
            },
            Space::WWedge => match (a, b) {
                (Flavor::F, Flavor::F) => commutator_row(d, i, Leg::F, sig),
                _ => None,
            },
            _ => None,
        };
        rows.extend(row);
    }
    rows
}

/// Every relation row of a canonical diagram in its signature.
pub fn all_rows(d: &Diagram, sig: Signature) -> Vec<Row> {
    let mut rows = ihx_rows(d, sig);
    if sig.has_stu() || sig.has_clifford() {
        rows.extend(leg_rows(d, sig));
    }
    rows
}

/// Builds a diagram from legs and an edge list over [`End`]s.
pub fn build(legs: Vec<Leg>, iota: bool, nverts: usize, edges: &[(End, End)], loops: u32) -> Diagram {
    let n = legs.len() as u32;
    let base = n + iota as u32;
    let half = |e: End| -> u32 {
        match e {
            End::Leg(i) => i as u32,
            End::Iota => n,
            End::Vertex(v, k) => base + 3 * v as u32 + k as u32,
        }
    };
    let mut partner = vec![u32::MAX; (base + 3 * nverts as u32) as usize];
    for &(a, b) in edges {
        let (x, y) = (half(a), half(b));
        partner[x as usize] = y;
        partner[y as usize] = x;
    }
    debug_assert!(partner.iter().all(|&p| p != u32::MAX));
    Diagram {
        legs,
        iota,
        nverts: nverts as u32,
        partner,
        filled: 0,
        open: 0,
        loops,
    }
}

fn edges_of(d: &Diagram) -> Vec<(End, End)> {
    d.partner
        .iter()
        .enumerate()
        .filter(|&(h, &p)| (h as u32) < p)
        .map(|(h, &p)| (d.end(h as u32), d.end(p)))
        .collect()
}

/// Legs `(a, b)` whose bracket produces a leg of the given flavor.
fn bracket_preimages(sig: Signature, f: Flavor) -> Vec<(Leg, Leg)> {
    match (sig.space, f) {
        (Space::A | Space::ALoops, Flavor::Fat) => vec![(Leg::FAT, Leg::FAT)],
        (Space::WHat, Flavor::Fat) => vec![(Leg::FAT, Leg::FAT)],
        (Space::WHat, Flavor::G1) => vec![(Leg::FAT, Leg::G1), (Leg::G1, Leg::FAT)],
        (Space::WHatF | Space::WWedge, Flavor::F) => vec![(Leg::F, Leg::F)],
        _ => Vec::new(),
    }
}

/// Diagrams whose STU-type or Clifford rows involve `d` without being
/// generated at `d` itself, bounded by weight.
pub fn upward_sources(d: &Diagram, sig: Signature, max_weight: usize) -> Vec<Diagram> {
    let mut out = Vec::new();
    if !(sig.has_stu() || sig.has_clifford()) {
        return out;
    }
    let n = d.nlegs();
    let edges = edges_of(d);
    // undo a bracket: a leg at a vertex splits into two adjacent legs
    for i in 0..n {
        let End::Vertex(v, s) = d.end(d.partner[i]) else { continue };
        let ea = d.end(d.partner[d.slot(v, (s + 1) % 3) as usize]);
        let eb = d.end(d.partner[d.slot(v, (s + 2) % 3) as usize]);
        if matches!(ea, End::Vertex(w, _) if w == v) {
            continue;
        }
        let remap = |e: End| -> End {
            match e {
                End::Leg(j) if j > i => End::Leg(j + 1),
                End::Vertex(w, k) if w > v => End::Vertex(w - 1, k),
                other => other,
            }
        };
        for (la, lb) in bracket_preimages(sig, d.legs[i].flavor) {
            let mut legs = d.legs.clone();
            legs[i] = la;
            legs.insert(i + 1, lb);
            let mut es: Vec<(End, End)> = edges
                .iter()
                .filter(|(a, b)| {
                    !matches!(a, End::Vertex(w, _) if *w == v) && !matches!(b, End::Vertex(w, _) if *w == v)
                })
                .map(|&(a, b)| (remap(a), remap(b)))
                .collect();
            es.push((End::Leg(i), remap(ea)));
            es.push((End::Leg(i + 1), remap(eb)));
            let x = Diagram {
                filled: d.filled,
                open: d.open,
                ..build(legs, d.iota, d.nverts as usize - 1, &es, d.loops)
            };
            out.push(x);
        }
    }
    // undo a Clifford gluing: cut an edge or a loop into two adjacent grade-1 legs
    if sig.has_clifford() && d.weight() + 2 <= max_weight {
        let shift = |e: End, i: usize| -> End {
            match e {
                End::Leg(j) if j >= i => End::Leg(j + 2),
                other => other,
            }
        };
        for i in 0..=n {
            let mut legs = d.legs.clone();
            legs.insert(i, Leg::G1);
            legs.insert(i, Leg::G1);
            for (k, &(a, b)) in edges.iter().enumerate() {
                let mut es: Vec<(End, End)> = edges
                    .iter()
                    .enumerate()
                    .filter(|&(m, _)| m != k)
                    .map(|(_, &(x, y))| (shift(x, i), shift(y, i)))
                    .collect();
                es.push((End::Leg(i), shift(a, i)));
                es.push((End::Leg(i + 1), shift(b, i)));
                out.push(build(legs.clone(), d.iota, d.nverts as usize, &es, d.loops));
            }
            if d.loops > 0 {
                let mut es: Vec<(End, End)> = edges.iter().map(|&(x, y)| (shift(x, i), shift(y, i))).collect();
                es.push((End::Leg(i), End::Leg(i + 1)));
                out.push(build(legs.clone(), d.iota, d.nverts as usize, &es, d.loops - 1));
            }
        }
    }
    out.retain(|x| x.weight() <= max_weight);
    out
}

/// Whether a row's coefficients are all ±1 (the relation templates).
pub fn is_unit_row(row: &Row) -> bool {
    row.iter().all(|(_, c)| c.numer().magnitude().is_one() && c.denom().is_one())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chord_in_a_has_no_nontrivial_stu_row() {
        // swapping the ends of a chord gives the same diagram, bracket has a self-loop
        let sig = Signature::plain(Space::A);
        let c = Diagram::chord(Leg::FAT, Leg::FAT);
        assert!(leg_rows(&c, sig).is_empty());
    }

    #[test]
    fn ihx_on_h_diagram() {
        let sig = Signature::plain(Space::WTilde);
        // two vertices joined by an edge, four legs
        let d = {
            let frag = Fragment::vertex(&[Leg::G1, Leg::G1], [Port::Root, Port::Leg(0), Port::Leg(1)]);
            let c = Diagram::chord(Leg::G1, Leg::G1);
            let (a, _) = frag.splice(&c, 0).unwrap().unwrap();
            let (b, _) = frag.splice(&a, 2).unwrap().unwrap();
            b
        };
        let rows = ihx_rows(&d, sig);
        assert_eq!(rows.len(), 1);
        assert_eq!(rows[0].len(), 3);
        assert!(is_unit_row(&rows[0]));
    }
}
