use diter_core::{write_binary, EdgeList};
use diter_wasm::{convergence_curves, generate_graph, parse_graph, top_ranked};

#[test]
fn curves_cover_all_solvers_and_converge() {
    let g = generate_graph(1500, 7, 0.8, 0.2);
    let curves = convergence_curves(&g, 0.85, None);
    let labels: Vec<_> = curves.iter().map(|c| c.algorithm).collect();
    assert_eq!(labels, ["PI", "PI'", "GS", "DI-CYC", "DI-SOP"]);
    for c in &curves {
        assert!(c.converged, "{}", c.algorithm);
        assert!(c.failure.is_none());
        assert_eq!(c.iterations.len(), c.errors.len());
        assert!(c.iterations.windows(2).all(|w| w[0] < w[1]));
        let last = *c.iterations.last().unwrap();
        assert!((last - c.nb_iter).abs() < 1e-9, "{} {last} {}", c.algorithm, c.nb_iter);
    }
    assert!(curves[4].nb_iter < curves[0].nb_iter);
}

#[test]
fn text_and_binary_uploads_agree() {
    let text = b"0\t1\n1\t2\n2\t0\n2\t2\n";
    let edges = EdgeList::from_edges(vec![(0, 1), (1, 2), (2, 0), (2, 2)]);
    let a = parse_graph(text).unwrap();
    let b = parse_graph(&write_binary(&edges)).unwrap();
    assert_eq!(a.edges().collect::<Vec<_>>(), b.edges().collect::<Vec<_>>());
    assert!(parse_graph(b"0 x\n").unwrap_err().contains("line 1"));
}

#[test]
fn top_nodes_match_between_solvers() {
    let g = generate_graph(800, 3, 0.8, 0.2);
    let a = top_ranked(&g, "gs", 0.85, 5).unwrap();
    let b = top_ranked(&g, "di-sop", 0.85, 5).unwrap();
    assert_eq!(a.len(), 5);
    assert_eq!(a[0].node, b[0].node);
    assert!(a.windows(2).all(|w| w[0].score >= w[1].score));
    assert!(top_ranked(&g, "bogus", 0.85, 5).is_err());
    assert!(top_ranked(&g, "pi", 1.2, 5).is_err());
}
