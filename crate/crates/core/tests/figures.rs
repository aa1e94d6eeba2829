//! Fixture tests against hand-transcribed drawings of the constructed
//! graphs.
//!
//! The two labeled fixtures pin down the 3-token graphs of `P_4 + P_4` and
//! `C_3 + P_4` edge by edge (tokens written 1-based). The staircase
//! fixtures are unlabeled drawings for n = 4..8, checked against the
//! generator up to isomorphism with a verified witness.

use std::collections::BTreeSet;

use tokengraph::iso::are_isomorphic;
use tokengraph::staircase::staircase_graph;
use tokengraph::{
    binomial, cycle_graph, disjoint_union, path_graph, token_graph, Graph, TokenGraph,
    TokenVertex,
};

/// One drawn edge between two 1-based token triples.
type TriplePair = ((u8, u8, u8), (u8, u8, u8));

const UNION_TWO_PATHS_EDGES: [TriplePair; 90] = [
    ((1, 2, 3), (1, 2, 4)), ((1, 2, 4), (1, 3, 4)), ((1, 3, 4), (2, 3, 4)),
    ((1, 2, 5), (1, 2, 6)), ((1, 2, 6), (1, 2, 7)), ((1, 2, 7), (1, 2, 8)),
    ((1, 2, 5), (1, 3, 5)), ((1, 2, 6), (1, 3, 6)), ((1, 2, 7), (1, 3, 7)),
    ((1, 2, 8), (1, 3, 8)), ((1, 3, 5), (1, 3, 6)), ((1, 3, 6), (1, 3, 7)),
    ((1, 3, 7), (1, 3, 8)), ((1, 3, 5), (1, 4, 5)), ((1, 3, 5), (2, 3, 5)),
    ((1, 3, 6), (1, 4, 6)), ((1, 3, 6), (2, 3, 6)), ((1, 3, 7), (1, 4, 7)),
    ((1, 3, 7), (2, 3, 7)), ((1, 3, 8), (1, 4, 8)), ((1, 3, 8), (2, 3, 8)),
    ((1, 4, 5), (1, 4, 6)), ((1, 4, 6), (1, 4, 7)), ((1, 4, 7), (1, 4, 8)),
    ((2, 3, 5), (2, 3, 6)), ((2, 3, 6), (2, 3, 7)), ((2, 3, 7), (2, 3, 8)),
    ((2, 4, 5), (2, 3, 5)), ((2, 4, 5), (1, 4, 5)), ((2, 4, 6), (2, 3, 6)),
    ((2, 4, 6), (1, 4, 6)), ((2, 4, 7), (2, 3, 7)), ((2, 4, 7), (1, 4, 7)),
    ((2, 4, 8), (2, 3, 8)), ((2, 4, 8), (1, 4, 8)), ((2, 4, 5), (2, 4, 6)),
    ((2, 4, 6), (2, 4, 7)), ((2, 4, 7), (2, 4, 8)), ((2, 4, 5), (3, 4, 5)),
    ((2, 4, 6), (3, 4, 6)), ((2, 4, 7), (3, 4, 7)), ((2, 4, 8), (3, 4, 8)),
    ((3, 4, 5), (3, 4, 6)), ((3, 4, 6), (3, 4, 7)), ((3, 4, 7), (3, 4, 8)),
    ((1, 5, 6), (2, 5, 6)), ((2, 5, 6), (3, 5, 6)), ((3, 5, 6), (4, 5, 6)),
    ((1, 5, 7), (2, 5, 7)), ((2, 5, 7), (3, 5, 7)), ((3, 5, 7), (4, 5, 7)),
    ((1, 5, 7), (1, 5, 8)), ((1, 5, 7), (1, 6, 7)), ((2, 5, 7), (2, 5, 8)),
    ((2, 5, 7), (2, 6, 7)), ((3, 5, 7), (3, 5, 8)), ((3, 5, 7), (3, 6, 7)),
    ((4, 5, 7), (4, 5, 8)), ((4, 5, 7), (4, 6, 7)), ((1, 5, 8), (2, 5, 8)),
    ((2, 5, 8), (3, 5, 8)), ((3, 5, 8), (4, 5, 8)), ((1, 6, 7), (2, 6, 7)),
    ((2, 6, 7), (3, 6, 7)), ((3, 6, 7), (4, 6, 7)), ((1, 6, 8), (1, 5, 8)),
    ((1, 6, 8), (1, 6, 7)), ((2, 6, 8), (2, 5, 8)), ((2, 6, 8), (2, 6, 7)),
    ((3, 6, 8), (3, 5, 8)), ((3, 6, 8), (3, 6, 7)), ((4, 6, 8), (4, 5, 8)),
    ((4, 6, 8), (4, 6, 7)), ((1, 6, 8), (2, 6, 8)), ((2, 6, 8), (3, 6, 8)),
    ((3, 6, 8), (4, 6, 8)), ((1, 6, 8), (1, 7, 8)), ((2, 6, 8), (2, 7, 8)),
    ((3, 6, 8), (3, 7, 8)), ((4, 6, 8), (4, 7, 8)), ((1, 7, 8), (2, 7, 8)),
    ((2, 7, 8), (3, 7, 8)), ((3, 7, 8), (4, 7, 8)), ((1, 5, 6), (1, 5, 7)),
    ((2, 5, 6), (2, 5, 7)), ((3, 5, 6), (3, 5, 7)), ((4, 5, 6), (4, 5, 7)),
    ((5, 6, 7), (5, 6, 8)), ((5, 6, 8), (5, 7, 8)), ((5, 7, 8), (6, 7, 8)),
];

const UNION_PATH_CYCLE_EDGES: [TriplePair; 60] = [
    ((4, 5, 6), (4, 5, 7)), ((4, 5, 7), (4, 6, 7)), ((4, 6, 7), (5, 6, 7)),
    ((2, 4, 5), (1, 4, 5)), ((2, 4, 5), (3, 4, 5)), ((1, 4, 5), (3, 4, 5)),
    ((2, 4, 5), (2, 4, 6)), ((1, 4, 5), (1, 4, 6)), ((3, 4, 5), (3, 4, 6)),
    ((2, 4, 6), (2, 5, 6)), ((3, 4, 6), (3, 5, 6)), ((1, 4, 6), (1, 5, 6)),
    ((2, 4, 6), (2, 4, 7)), ((3, 4, 6), (3, 4, 7)), ((1, 4, 6), (1, 4, 7)),
    ((2, 5, 6), (2, 5, 7)), ((3, 5, 6), (3, 5, 7)), ((1, 5, 6), (1, 5, 7)),
    ((2, 4, 7), (2, 5, 7)), ((3, 4, 7), (3, 5, 7)), ((1, 4, 7), (1, 5, 7)),
    ((2, 5, 6), (1, 5, 6)), ((2, 4, 6), (1, 4, 6)), ((2, 4, 7), (1, 4, 7)),
    ((2, 5, 6), (3, 5, 6)), ((3, 5, 6), (1, 5, 6)), ((2, 4, 6), (3, 4, 6)),
    ((3, 4, 6), (1, 4, 6)), ((2, 4, 7), (3, 4, 7)), ((3, 4, 7), (1, 4, 7)),
    ((2, 5, 7), (3, 5, 7)), ((2, 5, 7), (1, 5, 7)), ((3, 5, 7), (1, 5, 7)),
    ((2, 5, 7), (2, 6, 7)), ((3, 6, 7), (3, 5, 7)), ((1, 6, 7), (1, 5, 7)),
    ((2, 6, 7), (3, 6, 7)), ((3, 6, 7), (1, 6, 7)), ((2, 6, 7), (1, 6, 7)),
    ((1, 2, 4), (2, 3, 4)), ((1, 2, 4), (1, 3, 4)), ((2, 3, 4), (1, 3, 4)),
    ((1, 2, 5), (1, 3, 5)), ((1, 2, 5), (2, 3, 5)), ((2, 3, 5), (1, 3, 5)),
    ((1, 2, 6), (1, 3, 6)), ((1, 2, 6), (2, 3, 6)), ((1, 3, 6), (2, 3, 6)),
    ((1, 2, 7), (2, 3, 7)), ((1, 2, 7), (1, 3, 7)), ((1, 3, 7), (2, 3, 7)),
    ((1, 2, 4), (1, 2, 5)), ((1, 3, 4), (1, 3, 5)), ((2, 3, 4), (2, 3, 5)),
    ((1, 2, 5), (1, 2, 6)), ((2, 3, 5), (2, 3, 6)), ((1, 3, 5), (1, 3, 6)),
    ((1, 2, 6), (1, 2, 7)), ((2, 3, 6), (2, 3, 7)), ((1, 3, 6), (1, 3, 7)),
];

const DRAWN_STAIRCASE_8: [(usize, usize); 105] = [
    (0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (6, 7), (7, 8), (8, 9), (9, 10), (11, 12),
    (12, 13), (13, 14), (14, 15), (16, 17), (17, 18), (18, 19), (20, 21), (21, 22), (22, 23), (24, 25),
    (25, 26), (26, 27), (28, 29), (29, 30), (31, 32), (32, 33), (34, 35), (35, 36), (37, 38), (38, 39),
    (40, 41), (42, 43), (44, 45), (46, 47), (48, 49), (50, 51), (51, 52), (52, 53), (53, 54), (54, 55),
    (6, 11), (7, 12), (8, 13), (9, 14), (10, 15), (16, 20), (20, 24), (17, 21), (21, 25), (18, 22),
    (22, 26), (19, 23), (23, 27), (28, 31), (31, 34), (34, 37), (29, 32), (32, 35), (35, 38), (30, 33),
    (33, 36), (36, 39), (41, 43), (43, 45), (45, 47), (47, 49), (40, 42), (42, 44), (44, 46), (46, 48),
    (1, 6), (2, 7), (3, 8), (4, 9), (5, 10), (7, 16), (8, 17), (9, 18), (10, 19), (12, 20),
    (13, 21), (14, 22), (15, 23), (17, 28), (18, 29), (19, 30), (21, 31), (22, 32), (23, 33), (25, 34),
    (26, 35), (27, 36), (29, 40), (30, 41), (32, 42), (33, 43), (35, 44), (36, 45), (38, 46), (39, 47),
    (41, 50), (43, 51), (45, 52), (47, 53), (49, 54),
];

const DRAWN_STAIRCASE_4: [(usize, usize); 3] = [
    (0, 1), (2, 3), (1, 2),
];

const DRAWN_STAIRCASE_5: [(usize, usize); 12] = [
    (0, 1), (1, 4), (2, 5), (3, 6), (2, 3), (5, 6), (7, 8), (8, 9), (1, 2), (4, 5),
    (5, 7), (6, 8),
];

const DRAWN_STAIRCASE_6: [(usize, usize); 30] = [
    (0, 1), (1, 4), (4, 10), (2, 5), (5, 11), (3, 6), (6, 12), (7, 13), (8, 14), (9, 15),
    (2, 3), (5, 6), (11, 12), (7, 8), (8, 9), (13, 14), (14, 15), (16, 17), (17, 18), (18, 19),
    (1, 2), (4, 5), (10, 11), (5, 7), (11, 13), (6, 8), (12, 14), (13, 16), (14, 17), (15, 18),
];

const DRAWN_STAIRCASE_7: [(usize, usize); 60] = [
    (0, 1), (1, 4), (4, 10), (10, 20), (2, 5), (5, 11), (11, 21), (3, 6), (6, 12), (12, 22),
    (7, 13), (13, 23), (8, 14), (14, 24), (9, 15), (15, 25), (16, 26), (17, 27), (18, 28), (19, 29),
    (2, 3), (5, 6), (11, 12), (21, 22), (7, 8), (8, 9), (13, 14), (14, 15), (23, 24), (24, 25),
    (16, 17), (17, 18), (18, 19), (26, 27), (27, 28), (28, 29), (30, 31), (31, 32), (32, 33), (33, 34),
    (1, 2), (4, 5), (10, 11), (20, 21), (5, 7), (11, 13), (21, 23), (6, 8), (12, 14), (22, 24),
    (13, 16), (23, 26), (14, 17), (24, 27), (15, 18), (25, 28), (26, 30), (27, 31), (28, 32), (29, 33),
];

const DRAWN_STAIRCASE_6_ALT: [(usize, usize); 30] = [
    (0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (8, 1), (9, 2),
    (9, 4), (9, 6), (9, 8), (9, 10), (11, 4), (17, 6), (18, 5), (10, 11), (11, 12), (12, 13),
    (13, 14), (14, 15), (15, 16), (16, 17), (17, 10), (18, 11), (18, 13), (18, 15), (18, 17), (14, 19),
];


fn token_edge_set(tg: &TokenGraph) -> BTreeSet<(TokenVertex, TokenVertex)> {
    tg.graph()
        .edges()
        .into_iter()
        .map(|(u, v)| {
            let (a, b) = (tg.token(u).clone(), tg.token(v).clone());
            if a <= b {
                (a, b)
            } else {
                (b, a)
            }
        })
        .collect()
}

/// Reads a 1-based triple fixture into normalized token pairs, applying
/// `relabel` to each 1-based member first.
fn fixture_edge_set(
    fixture: &[TriplePair],
    relabel: impl Fn(u8) -> u8,
) -> BTreeSet<(TokenVertex, TokenVertex)> {
    let token = |(x, y, z): (u8, u8, u8)| {
        TokenVertex::new(vec![
            relabel(x) as usize - 1,
            relabel(y) as usize - 1,
            relabel(z) as usize - 1,
        ])
        .expect("fixture members are distinct")
    };
    fixture
        .iter()
        .map(|&(a, b)| {
            let (a, b) = (token(a), token(b));
            if a <= b {
                (a, b)
            } else {
                (b, a)
            }
        })
        .collect()
}

#[test]
fn two_path_union_matches_the_frozen_drawing() {
    let base = disjoint_union(&path_graph(4).unwrap(), &path_graph(4).unwrap());
    let tg = token_graph(&base, 3).unwrap();
    let drawn = fixture_edge_set(&UNION_TWO_PATHS_EDGES, |v| v);
    assert_eq!(drawn.len(), 90, "fixture has duplicate edges");
    assert_eq!(token_edge_set(&tg), drawn);
}

#[test]
fn path_cycle_union_matches_the_frozen_drawing() {
    // The drawing labels the cycle 1..3 and the path 4..7.
    let base = disjoint_union(&cycle_graph(3).unwrap(), &path_graph(4).unwrap());
    let tg = token_graph(&base, 3).unwrap();
    let drawn = fixture_edge_set(&UNION_PATH_CYCLE_EDGES, |v| v);
    assert_eq!(drawn.len(), 60, "fixture has duplicate edges");
    assert_eq!(token_edge_set(&tg), drawn);
    // All three tokens on the cycle cannot move: {1,2,3} is isolated.
    let full_cycle = TokenVertex::new(vec![0, 1, 2]).unwrap();
    let id = tg.id_of(&full_cycle).unwrap();
    assert_eq!(tg.graph().degree(id), 0);
}

#[test]
fn path_cycle_union_in_the_other_block_order_matches_after_relabeling() {
    // Building the union path-first permutes base labels: cycle 1..3 moves
    // to 5..7 and path 4..7 moves to 1..4.
    let base = disjoint_union(&path_graph(4).unwrap(), &cycle_graph(3).unwrap());
    let tg = token_graph(&base, 3).unwrap();
    let drawn =
        fixture_edge_set(&UNION_PATH_CYCLE_EDGES, |v| if v <= 3 { v + 4 } else { v - 3 });
    assert_eq!(token_edge_set(&tg), drawn);
}

#[test]
fn drawn_staircases_match_the_generator_up_to_isomorphism() {
    let cases: [(usize, &[(usize, usize)]); 5] = [
        (4, &DRAWN_STAIRCASE_4),
        (5, &DRAWN_STAIRCASE_5),
        (6, &DRAWN_STAIRCASE_6),
        (7, &DRAWN_STAIRCASE_7),
        (8, &DRAWN_STAIRCASE_8),
    ];
    for (n, fixture) in cases {
        let vertices = binomial(n, 3) as usize;
        let unique: BTreeSet<_> = fixture.iter().collect();
        assert_eq!(unique.len(), fixture.len(), "duplicate edge in n={n} fixture");
        let drawn_graph = Graph::from_edges(vertices, fixture).unwrap();
        let cs = staircase_graph(n).unwrap();
        assert_eq!(drawn_graph.degree_sequence(), cs.graph().degree_sequence());
        let witness = are_isomorphic(&drawn_graph, cs.graph()).unwrap();
        assert!(
            witness.is_some(),
            "drawn staircase n={n} is not the generated graph"
        );
    }
}

#[test]
fn second_staircase6_drawing_also_matches() {
    let drawn_graph = Graph::from_edges(20, &DRAWN_STAIRCASE_6_ALT).unwrap();
    let cs = staircase_graph(6).unwrap();
    assert!(are_isomorphic(&drawn_graph, cs.graph()).unwrap().is_some());
}
