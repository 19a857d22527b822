//! Structural classification of a quiver from its underlying multigraph.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::quiver::Quiver;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DynkinType {
    A(usize),
    D(usize),
    E6,
    E7,
    E8,
}

impl DynkinType {
    pub fn rank(&self) -> usize {
        match *self {
            DynkinType::A(n) | DynkinType::D(n) => n,
            DynkinType::E6 => 6,
            DynkinType::E7 => 7,
            DynkinType::E8 => 8,
        }
    }

    /// Number of positive roots of the root system.
    pub fn positive_root_count(&self) -> usize {
        match *self {
            DynkinType::A(n) => n * (n + 1) / 2,
            DynkinType::D(n) => n * (n - 1),
            DynkinType::E6 => 36,
            DynkinType::E7 => 63,
            DynkinType::E8 => 120,
        }
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DynkinType::A(n) => write!(f, "A{n}"),
            DynkinType::D(n) => write!(f, "D{n}"),
            DynkinType::E6 => write!(f, "E6"),
            DynkinType::E7 => write!(f, "E7"),
            DynkinType::E8 => write!(f, "E8"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverClass {
    pub connected: bool,
    pub acyclic: bool,
    pub tree: bool,
    pub dynkin: Option<DynkinType>,
    pub equioriented_a: bool,
}

fn neighbours(q: &Quiver) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); q.vertex_count()];
    for a in q.arrows() {
        adj[a.source].push(a.target);
        if a.source != a.target {
            adj[a.target].push(a.source);
        }
    }
    adj
}

fn is_connected(q: &Quiver) -> bool {
    let n = q.vertex_count();
    if n == 0 {
        return false;
    }
    let adj = neighbours(q);
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

fn dynkin_type(q: &Quiver) -> Option<DynkinType> {
    let n = q.vertex_count();
    let adj = neighbours(q);
    let deg: Vec<usize> = adj.iter().map(Vec::len).collect();
    let branch: Vec<usize> = (0..n).filter(|&v| deg[v] >= 3).collect();
    match branch.as_slice() {
        [] => Some(DynkinType::A(n)),
        [c] if deg[*c] == 3 => {
            let mut arms: Vec<usize> = adj[*c]
                .iter()
                .map(|&start| {
                    let (mut prev, mut cur, mut len) = (*c, start, 1);
                    while let Some(&next) = adj[cur].iter().find(|&&w| w != prev) {
                        prev = cur;
                        cur = next;
                        len += 1;
                    }
                    len
                })
                .collect();
            arms.sort_unstable();
            match arms.as_slice() {
                [1, 1, c] => Some(DynkinType::D(c + 3)),
                [1, 2, 2] => Some(DynkinType::E6),
                [1, 2, 3] => Some(DynkinType::E7),
                [1, 2, 4] => Some(DynkinType::E8),
                _ => None,
            }
        }
        _ => None,
    }
}

pub fn classify(q: &Quiver) -> QuiverClass {
    let connected = is_connected(q);
    let acyclic = q.is_acyclic();
    let tree = connected && q.arrow_count() + 1 == q.vertex_count();
    let dynkin = if tree { dynkin_type(q) } else { None };
    let equioriented_a = matches!(dynkin, Some(DynkinType::A(_))) && linear_order(q).is_some();
    QuiverClass {
        connected,
        acyclic,
        tree,
        dynkin,
        equioriented_a,
    }
}

/// For an equioriented A_n, the vertices from the unique source to the
/// unique sink together with the arrow leaving each vertex but the last.
pub fn linear_order(q: &Quiver) -> Option<(Vec<usize>, Vec<usize>)> {
    let n = q.vertex_count();
    if n == 0 || q.arrow_count() + 1 != n {
        return None;
    }
    let mut out_arrow = vec![None; n];
    let mut indeg = vec![0; n];
    for (k, a) in q.arrows().iter().enumerate() {
        if a.source == a.target || out_arrow[a.source].is_some() {
            return None;
        }
        out_arrow[a.source] = Some(k);
        indeg[a.target] += 1;
    }
    if indeg.iter().any(|&d| d > 1) {
        return None;
    }
    let start = (0..n).find(|&v| indeg[v] == 0)?;
    let mut verts = vec![start];
    let mut arrows = Vec::new();
    let mut cur = start;
    while let Some(k) = out_arrow[cur] {
        arrows.push(k);
        cur = q.arrows()[k].target;
        verts.push(cur);
        if verts.len() > n {
            return None;
        }
    }
    (verts.len() == n).then_some((verts, arrows))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quiver(n: usize, arrows: &[(usize, usize)]) -> Quiver {
        let vs: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
        let arrows = arrows
            .iter()
            .enumerate()
            .map(|(k, (s, t))| (format!("a{k}"), s.to_string(), t.to_string()))
            .collect();
        Quiver::new(vs, arrows).unwrap()
    }

    #[test]
    fn a2_flags() {
        let c = classify(&Quiver::linear_a(2));
        assert!(c.connected && c.acyclic && c.tree && c.equioriented_a);
        assert_eq!(c.dynkin, Some(DynkinType::A(2)));
    }

    #[test]
    fn two_loops() {
        let c = classify(&quiver(1, &[(1, 1), (1, 1)]));
        assert!(c.connected && !c.acyclic && !c.tree);
        assert_eq!(c.dynkin, None);
    }

    #[test]
    fn kronecker() {
        let c = classify(&quiver(2, &[(1, 2), (1, 2)]));
        assert!(c.connected && c.acyclic && !c.tree);
        assert_eq!(c.dynkin, None);
    }

    #[test]
    fn d_and_e_types() {
        // D4 with central sink 4
        let d4 = quiver(4, &[(1, 4), (2, 4), (3, 4)]);
        assert_eq!(classify(&d4).dynkin, Some(DynkinType::D(4)));
        let d5 = quiver(5, &[(1, 2), (2, 3), (3, 4), (3, 5)]);
        assert_eq!(classify(&d5).dynkin, Some(DynkinType::D(5)));
        // E6: chain 1-2-3-4-5 with 6 attached to 3
        let e6 = quiver(6, &[(1, 2), (2, 3), (4, 3), (5, 4), (6, 3)]);
        assert_eq!(classify(&e6).dynkin, Some(DynkinType::E6));
        let e7 = quiver(7, &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (7, 3)]);
        assert_eq!(classify(&e7).dynkin, Some(DynkinType::E7));
        let e8 = quiver(8, &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (8, 3)]);
        assert_eq!(classify(&e8).dynkin, Some(DynkinType::E8));
        // affine D4 (star with four arms) is not Dynkin
        let star = quiver(5, &[(1, 5), (2, 5), (3, 5), (4, 5)]);
        assert!(classify(&star).tree);
        assert_eq!(classify(&star).dynkin, None);
        // E-tilde-6 arms (2,2,2)
        let t222 = quiver(7, &[(1, 2), (2, 7), (3, 4), (4, 7), (5, 6), (6, 7)]);
        assert_eq!(classify(&t222).dynkin, None);
    }

    #[test]
    fn orientation_matters_only_for_equioriented() {
        let alt = quiver(3, &[(1, 2), (3, 2)]);
        let c = classify(&alt);
        assert_eq!(c.dynkin, Some(DynkinType::A(3)));
        assert!(!c.equioriented_a);
        let rev = quiver(3, &[(3, 2), (2, 1)]);
        let (order, _) = linear_order(&rev).unwrap();
        assert_eq!(order, vec![2, 1, 0]);
    }

    #[test]
    fn invariant_under_renaming() {
        let a = Quiver::from_parts(&["x", "y", "z", "w"], &[("p", "x", "w"), ("q", "y", "w"), ("r", "z", "w")]).unwrap();
        let b = Quiver::from_parts(&["w", "z", "y", "x"], &[("k", "w", "x"), ("l", "w", "y"), ("m", "w", "z")]).unwrap();
        assert_eq!(classify(&a).dynkin, classify(&b).dynkin);
        assert_eq!(classify(&a).dynkin, Some(DynkinType::D(4)));
    }

    #[test]
    fn implications_hold() {
        for q in [
            quiver(1, &[]),
            quiver(3, &[(1, 2), (2, 3)]),
            quiver(3, &[(1, 2), (2, 3), (3, 1)]),
            quiver(2, &[(1, 2), (2, 1)]),
        ] {
            let c = classify(&q);
            if c.dynkin.is_some() {
                assert!(c.tree);
            }
            if c.tree {
                assert!(c.acyclic);
            }
            if c.equioriented_a {
                assert!(matches!(c.dynkin, Some(DynkinType::A(_))));
            }
        }
    }
}
