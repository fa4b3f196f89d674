//! Fixtures shared by the benchmarks.

use braidlift_core::{BraidGenerator, BraidWord, LabelTuple};

/// Named label tuples: disc, annulus, one-holed torus, a 4-sheeted cover with a 4-cycle spine.
pub fn tuples() -> Vec<(&'static str, LabelTuple)> {
    [
        ("disc", 3, vec![(1, 2), (2, 3)]),
        ("annulus", 3, vec![(1, 2), (1, 2), (2, 3)]),
        ("torus", 3, vec![(1, 2), (2, 3), (2, 3), (2, 3)]),
        ("square", 4, vec![(1, 2), (2, 3), (3, 4), (1, 4)]),
    ]
    .into_iter()
    .map(|(name, d, pairs)| {
        (
            name,
            LabelTuple::from_pairs(d, &pairs).expect("fixture is valid"),
        )
    })
    .collect()
}

/// A fixed word of the given length cycling through every generator on `n` strands.
pub fn mixed_word(n: usize, len: usize) -> BraidWord {
    let gens: Vec<BraidGenerator> = (1..n)
        .flat_map(|i| {
            [
                BraidGenerator::pos(i),
                BraidGenerator::pos(i),
                BraidGenerator::neg(i),
            ]
        })
        .collect();
    BraidWord::new((0..len).map(|k| gens[(k * 7) % gens.len()]).collect())
}
