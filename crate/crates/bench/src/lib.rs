//! Fixed graphs for the criterion benches.

use edgereg::{Graph, GraphFamily};

/// Named benchmark inputs, small enough for every exact routine.
pub fn fixtures() -> Vec<(&'static str, Graph)> {
    let build = |f: GraphFamily| f.build().expect("valid family");
    vec![
        ("c9", build(GraphFamily::Cycle { n: 9 })),
        ("p12", build(GraphFamily::Path { n: 12 })),
        ("petersen", build(GraphFamily::Petersen)),
        (
            "petersen_complement",
            build(GraphFamily::Petersen).complement(),
        ),
        (
            "c5_c7",
            build(GraphFamily::Cycle { n: 5 })
                .disjoint_union(&build(GraphFamily::Cycle { n: 7 }))
                .unwrap(),
        ),
        (
            "whisker_c6",
            build(GraphFamily::Cycle { n: 6 }).whisker().unwrap(),
        ),
    ]
}
