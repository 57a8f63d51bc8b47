//! Edge-list and point-cloud input, and edge-list output.
//!
//! Edge-list lines are `u v [w]` with `w` defaulting to 1. Anything after a
//! `#` is a comment. Vertex names are arbitrary tokens mapped to dense
//! indices in first-seen order; a line holding a single name declares a
//! vertex without edges. Repeated pairs sum their weights.

use std::collections::HashMap;
use std::io::{BufRead, Write};

use crate::error::IoError;
use crate::graph::Graph;

/// Parses an edge list.
pub fn load_edge_list<R: BufRead>(source: R) -> Result<Graph, IoError> {
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut labels: Vec<String> = Vec::new();
    let mut edges = Vec::new();
    let mut intern = |name: &str| -> usize {
        if let Some(&i) = index.get(name) {
            return i;
        }
        labels.push(name.to_string());
        index.insert(name.to_string(), labels.len() - 1);
        labels.len() - 1
    };
    for (lineno, line) in source.lines().enumerate() {
        let line = line?;
        let lineno = lineno + 1;
        let content = line.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        match tokens.as_slice() {
            [] => {}
            [name] => {
                intern(name);
            }
            [u, v, rest @ ..] if rest.len() <= 1 => {
                let w = match rest.first() {
                    None => 1.0,
                    Some(t) => t.parse::<f64>().map_err(|e| IoError::Parse {
                        line: lineno,
                        message: format!("bad weight '{t}': {e}"),
                    })?,
                };
                if !w.is_finite() {
                    return Err(IoError::Parse {
                        line: lineno,
                        message: format!("non-finite weight '{w}'"),
                    });
                }
                if w < 0.0 {
                    return Err(IoError::NegativeWeight {
                        line: lineno,
                        weight: w,
                    });
                }
                if u == v {
                    return Err(IoError::SelfLoop {
                        line: lineno,
                        label: u.to_string(),
                    });
                }
                let (a, b) = (intern(u), intern(v));
                edges.push((a, b, w));
            }
            _ => {
                return Err(IoError::Parse {
                    line: lineno,
                    message: format!("expected 'u v [w]', found {} fields", tokens.len()),
                })
            }
        }
    }
    let n = labels.len();
    Ok(Graph::from_edges(n, edges)?.with_labels(labels)?)
}

/// Writes `g` so that [`load_edge_list`] reproduces it exactly, including
/// vertex indices, labels, isolated vertices and weights.
pub fn write_edge_list<W: Write>(g: &Graph, mut out: W) -> Result<(), IoError> {
    let labels: Vec<String> = (0..g.n()).map(|v| g.label(v)).collect();
    if let Some(bad) = labels
        .iter()
        .find(|l| l.is_empty() || l.contains('#') || l.contains(char::is_whitespace))
    {
        return Err(IoError::Invalid(format!("label '{bad}' cannot be written as a token")));
    }
    writeln!(out, "# {} vertices, {} edges", g.n(), g.edge_count())?;
    // Indices are assigned in first-seen order, so declare any vertex that
    // would otherwise appear out of order.
    let mut seen = 0;
    for (u, v, w) in g.edges() {
        while seen < v {
            writeln!(out, "{}", labels[seen])?;
            seen += 1;
        }
        if v == seen {
            seen += 1;
        }
        writeln!(out, "{} {} {}", labels[u], labels[v], w)?;
    }
    for label in &labels[seen..] {
        writeln!(out, "{label}")?;
    }
    Ok(())
}

/// Reads whitespace-separated coordinate rows; `#` starts a comment.
pub fn load_points<R: BufRead>(source: R) -> Result<Vec<Vec<f64>>, IoError> {
    let mut points: Vec<Vec<f64>> = Vec::new();
    for (lineno, line) in source.lines().enumerate() {
        let line = line?;
        let content = line.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let row = content
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<f64>().map_err(|e| IoError::Parse {
                    line: lineno + 1,
                    message: format!("bad coordinate '{t}': {e}"),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        if let Some(first) = points.first() {
            if first.len() != row.len() {
                return Err(IoError::Parse {
                    line: lineno + 1,
                    message: format!("expected {} coordinates, found {}", first.len(), row.len()),
                });
            }
        }
        points.push(row);
    }
    Ok(points)
}

/// Symmetric k-nearest-neighbor graph with Gaussian weights
/// `exp(-d² / 2σ²)`. An edge exists when either endpoint selects the other;
/// distance ties are broken by index.
pub fn knn_similarity_graph(points: &[Vec<f64>], k: usize, sigma: f64) -> Result<Graph, IoError> {
    let n = points.len();
    if n < 2 {
        return Err(IoError::Invalid("need at least two points".into()));
    }
    if k == 0 {
        return Err(IoError::Invalid("k must be at least 1".into()));
    }
    if !(sigma > 0.0 && sigma.is_finite()) {
        return Err(IoError::Invalid("sigma must be positive and finite".into()));
    }
    let dim = points[0].len();
    if points.iter().any(|p| p.len() != dim) {
        return Err(IoError::Invalid("points have differing dimensions".into()));
    }
    if points.iter().flatten().any(|x| !x.is_finite()) {
        return Err(IoError::Invalid("non-finite coordinate".into()));
    }
    let mut d2 = vec![0.0; n * n];
    for i in 0..n {
        for j in i + 1..n {
            let d: f64 = points[i]
                .iter()
                .zip(&points[j])
                .map(|(a, b)| (a - b) * (a - b))
                .sum();
            d2[i * n + j] = d;
            d2[j * n + i] = d;
        }
    }
    let k = k.min(n - 1);
    let mut selected = vec![false; n * n];
    let mut others: Vec<usize> = Vec::with_capacity(n - 1);
    for i in 0..n {
        others.clear();
        others.extend((0..n).filter(|&j| j != i));
        let key = |&j: &usize| (d2[i * n + j], j);
        others.select_nth_unstable_by(k - 1, |a, b| key(a).partial_cmp(&key(b)).unwrap());
        for &j in &others[..k] {
            selected[i * n + j] = true;
        }
    }
    let denom = 2.0 * sigma * sigma;
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if selected[i * n + j] || selected[j * n + i] {
                edges.push((i, j, (-d2[i * n + j] / denom).exp()));
            }
        }
    }
    Ok(Graph::from_edges(n, edges)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;

    fn parse(text: &str) -> Result<Graph, IoError> {
        load_edge_list(text.as_bytes())
    }

    #[test]
    fn labeled_path() {
        let g = parse("a b 1\nb c 1\n").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.labels().unwrap(), &["a", "b", "c"]);
        assert_eq!(g.weight(0, 1), 1.0);
        assert_eq!(g.weight(1, 2), 1.0);
        assert_eq!(g.weight(0, 2), 0.0);
    }

    #[test]
    fn default_weight_comments_and_duplicates() {
        let g = parse("# header\na b   # trailing\n\na b 1\n").unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.weight(0, 1), 2.0);
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert!(matches!(parse("a a 1"), Err(IoError::SelfLoop { line: 1, .. })));
        assert!(matches!(
            parse("a b\nb c -2"),
            Err(IoError::NegativeWeight { line: 2, .. })
        ));
        assert!(matches!(parse("a b x"), Err(IoError::Parse { line: 1, .. })));
        assert!(matches!(parse("a b 1 2"), Err(IoError::Parse { line: 1, .. })));
    }

    #[test]
    fn isolated_vertices_round_trip() {
        let g = Graph::from_edges(6, [(3, 5, 2.5), (0, 4, 1.0)]).unwrap();
        let mut buf = Vec::new();
        write_edge_list(&g, &mut buf).unwrap();
        let h = load_edge_list(buf.as_slice()).unwrap();
        assert_eq!(h.n(), 6);
        assert_eq!(h.edges().collect::<Vec<_>>(), g.edges().collect::<Vec<_>>());
        assert_eq!(h.labels().unwrap(), &["0", "1", "2", "3", "4", "5"]);
    }

    #[test]
    fn generated_graph_round_trip() {
        let g = generate::neck(4, 3).unwrap();
        let mut buf = Vec::new();
        write_edge_list(&g, &mut buf).unwrap();
        let h = load_edge_list(buf.as_slice()).unwrap();
        assert_eq!(h.edges().collect::<Vec<_>>(), g.edges().collect::<Vec<_>>());
    }

    #[test]
    fn knn_complete_when_k_large() {
        let pts = vec![vec![0.0], vec![1.0], vec![3.0], vec![7.0]];
        let g = knn_similarity_graph(&pts, 10, 1.0).unwrap();
        assert_eq!(g.edge_count(), 6);
        assert!((g.weight(0, 1) - (-0.5f64).exp()).abs() < 1e-15);
    }

    #[test]
    fn knn_identical_points_have_unit_weight() {
        let pts = vec![vec![1.0, 2.0]; 3];
        let g = knn_similarity_graph(&pts, 1, 0.5).unwrap();
        assert!(g.edges().all(|(_, _, w)| w == 1.0));
        assert!(g.edge_count() >= 1);
    }

    #[test]
    fn knn_rejects_bad_input() {
        assert!(knn_similarity_graph(&[vec![0.0]], 1, 1.0).is_err());
        assert!(knn_similarity_graph(&[vec![0.0], vec![f64::NAN]], 1, 1.0).is_err());
        assert!(knn_similarity_graph(&[vec![0.0], vec![1.0]], 0, 1.0).is_err());
        assert!(knn_similarity_graph(&[vec![0.0], vec![1.0]], 1, 0.0).is_err());
    }

    #[test]
    fn points_parse() {
        let pts = load_points("1 2\n# c\n3,4\n".as_bytes()).unwrap();
        assert_eq!(pts, vec![vec![1.0, 2.0], vec![3.0, 4.0]]);
        assert!(load_points("1 2\n3\n".as_bytes()).is_err());
    }
}
