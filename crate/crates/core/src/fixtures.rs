//! The worked example from the reduction walkthrough, as relations.

use crate::relation::Relation;

pub fn labels(s: &str) -> Vec<String> {
    s.split_whitespace().map(str::to_string).collect()
}

pub fn example_m_r() -> Relation {
    Relation::from_dense(
        labels("x1 x2 x3 x4 x5 x6"),
        labels("y1 y2 y3 y4 y5 y6"),
        &[
            vec![1, 1, 0, 0, 0, 0],
            vec![1, 0, 1, 0, 0, 0],
            vec![0, 1, 1, 1, 0, 0],
            vec![0, 0, 1, 1, 1, 0],
            vec![0, 0, 0, 1, 0, 1],
            vec![0, 0, 0, 0, 1, 1],
        ],
    )
    .unwrap()
}

pub fn example_m_r_st() -> Relation {
    Relation::from_dense(
        labels("x1 x2 x3 x4 x5 x6"),
        labels("y2 y3 y4 y5"),
        &[
            vec![1, 0, 0, 0],
            vec![0, 1, 0, 0],
            vec![1, 1, 1, 0],
            vec![0, 1, 1, 1],
            vec![0, 0, 1, 0],
            vec![0, 0, 0, 1],
        ],
    )
    .unwrap()
}

pub fn example_m_r_prime() -> Relation {
    Relation::from_dense(
        labels("x1 x2 x3 x4 x5 x6 z"),
        labels("y1 y2 y3 y4 y5 y6"),
        &[
            vec![1, 1, 0, 0, 0, 0],
            vec![1, 0, 1, 0, 0, 0],
            vec![0, 1, 1, 1, 0, 0],
            vec![0, 0, 1, 1, 1, 0],
            vec![0, 0, 0, 1, 0, 1],
            vec![0, 0, 0, 0, 1, 1],
            vec![0, 1, 1, 1, 1, 0],
        ],
    )
    .unwrap()
}

pub fn example_m_r_second() -> Relation {
    Relation::from_dense(
        labels("x1 x2 x5 x6 z"),
        labels("y1 y2 y3 y4 y5 y6"),
        &[
            vec![1, 1, 0, 0, 0, 0],
            vec![1, 0, 1, 0, 0, 0],
            vec![0, 0, 0, 1, 0, 1],
            vec![0, 0, 0, 0, 1, 1],
            vec![0, 1, 1, 1, 1, 0],
        ],
    )
    .unwrap()
}
