//! Explicit witness models with their expected cohomology.
//!
//! Expected dimensions were computed by an independent oracle
//! (`tests/oracles/cohomology_oracle.py`) and frozen here. Truncated entries
//! list `H^0 ..= H^t`; complete entries list `H^0 ..= H^fd`.

use super::model::SullivanModel;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpectedClass {
    /// Polynomial text of a cocycle expected to represent a nonzero class.
    pub element: &'static str,
    pub degree: u32,
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub description: &'static str,
    pub model: SullivanModel,
    pub expected_dims: Vec<usize>,
    pub expected_classes: Vec<ExpectedClass>,
    /// Catalog entry this one truncates, when the full model is also listed.
    pub truncation_of: Option<&'static str>,
}

impl CatalogEntry {
    pub fn is_complete(&self) -> bool {
        !self.model.is_truncated()
    }
}

struct Spec {
    name: &'static str,
    description: &'static str,
    generators: &'static [(&'static str, u32)],
    differential: &'static [(&'static str, &'static str)],
    rank_type: &'static str,
    truncate_at: Option<u32>,
    dims: &'static [usize],
    classes: &'static [(&'static str, u32)],
    truncation_of: Option<&'static str>,
}

const SPECS: &[Spec] = &[
    Spec {
        name: "s3",
        description: "odd sphere S^3",
        generators: &[("y", 3)],
        differential: &[],
        rank_type: ":3",
        truncate_at: None,
        dims: &[1, 0, 0, 1],
        classes: &[("y", 3)],
        truncation_of: None,
    },
    Spec {
        name: "s3xs5",
        description: "S^3 x S^5",
        generators: &[("y", 3), ("u", 5)],
        differential: &[],
        rank_type: ":3,5",
        truncate_at: None,
        dims: &[1, 0, 0, 1, 0, 1, 0, 0, 1],
        classes: &[("y*u", 8)],
        truncation_of: None,
    },
    Spec {
        name: "s2xs3",
        description: "S^2 x S^3",
        generators: &[("x", 2), ("u", 3), ("v", 3)],
        differential: &[("u", "x^2")],
        rank_type: "2:3,3",
        truncate_at: None,
        dims: &[1, 0, 1, 1, 0, 1],
        classes: &[("x*v", 5)],
        truncation_of: None,
    },
    Spec {
        name: "cp2",
        description: "half-dimension family Λ(x_k, y_{3k-1}), dy = x^3, at k = 2",
        generators: &[("x", 2), ("y", 5)],
        differential: &[("y", "x^3")],
        rank_type: "2:5",
        truncate_at: None,
        dims: &[1, 0, 1, 0, 1],
        classes: &[("x^2", 4)],
        truncation_of: None,
    },
    Spec {
        name: "cubic-k4",
        description: "half-dimension family Λ(x_k, y_{3k-1}), dy = x^3, at k = 4",
        generators: &[("x", 4), ("y", 11)],
        differential: &[("y", "x^3")],
        rank_type: "4:11",
        truncate_at: None,
        dims: &[1, 0, 0, 0, 1, 0, 0, 0, 1],
        classes: &[("x^2", 8)],
        truncation_of: None,
    },
    Spec {
        name: "middle-pair",
        description: "two middle generators: dy = x^2 - x'^2, dy' = x x'",
        generators: &[("x", 2), ("x'", 2), ("y", 3), ("y'", 3)],
        differential: &[("y", "x^2 - x'^2"), ("y'", "x*x'")],
        rank_type: "2,2:3,3",
        truncate_at: None,
        dims: &[1, 0, 2, 0, 1],
        classes: &[("x^2", 4)],
        truncation_of: None,
    },
    Spec {
        name: "cp5",
        description: "CP^5, rank type (2:11)",
        generators: &[("x", 2), ("y", 11)],
        differential: &[("y", "x^6")],
        rank_type: "2:11",
        truncate_at: None,
        dims: &[1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1],
        classes: &[("x^5", 10)],
        truncation_of: None,
    },
    Spec {
        name: "cp5-trunc",
        description: "CP^5 below degree 11",
        generators: &[("x", 2)],
        differential: &[],
        rank_type: "2:11",
        truncate_at: Some(10),
        dims: &[1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1],
        classes: &[],
        truncation_of: Some("cp5"),
    },
    Spec {
        name: "s2xs5",
        description: "S^2 x S^5",
        generators: &[("x", 2), ("y", 3), ("u", 5)],
        differential: &[("y", "x^2")],
        rank_type: "2:3,5",
        truncate_at: None,
        dims: &[1, 0, 1, 0, 0, 1, 0, 1],
        classes: &[],
        truncation_of: None,
    },
    Spec {
        name: "s2xs3xs5",
        description: "S^2 x S^3 x S^5",
        generators: &[("x", 2), ("y", 3), ("y'", 3), ("u", 5)],
        differential: &[("y", "x^2")],
        rank_type: "2:3,3,5",
        truncate_at: None,
        dims: &[1, 0, 1, 1, 0, 2, 0, 1, 1, 0, 1],
        classes: &[],
        truncation_of: None,
    },
    Spec {
        name: "s2xs3xs7",
        description: "S^2 x S^3 x S^7",
        generators: &[("x", 2), ("y", 3), ("y'", 3), ("u", 7)],
        differential: &[("y", "x^2")],
        rank_type: "2:3,3,7",
        truncate_at: None,
        dims: &[1, 0, 1, 1, 0, 1, 0, 1, 0, 1, 1, 0, 1],
        classes: &[],
        truncation_of: None,
    },
    Spec {
        name: "s2xs3xs7-trunc",
        description: "S^2 x S^3 x S^7 below degree 7",
        generators: &[("x", 2), ("y", 3), ("y'", 3)],
        differential: &[("y", "x^2")],
        rank_type: "2:3,3,7",
        truncate_at: Some(6),
        dims: &[1, 0, 1, 1, 0, 1, 0],
        classes: &[],
        truncation_of: Some("s2xs3xs7"),
    },
    Spec {
        name: "cp2xs7",
        description: "CP^2 x S^7",
        generators: &[("x", 2), ("y", 5), ("u", 7)],
        differential: &[("y", "x^3")],
        rank_type: "2:5,7",
        truncate_at: None,
        dims: &[1, 0, 1, 0, 1, 0, 0, 1, 0, 1, 0, 1],
        classes: &[],
        truncation_of: None,
    },
    Spec {
        name: "s2xs7-squared",
        description: "(S^2 x S^7) x (S^2 x S^7)",
        generators: &[("x", 2), ("x'", 2), ("y", 3), ("y'", 3), ("u", 7), ("u'", 7)],
        differential: &[("y", "x^2"), ("y'", "x'^2")],
        rank_type: "2,2:3,3,7,7",
        truncate_at: None,
        dims: &[1, 0, 2, 0, 1, 0, 0, 2, 0, 4, 0, 2, 0, 0, 1, 0, 2, 0, 1],
        classes: &[],
        truncation_of: None,
    },
    Spec {
        name: "fd15-massey",
        description: "(2,2,4,4:3,3,3,7,7) with d injective on V^3 and V^4; three Massey classes span H^6",
        generators: &[
            ("x", 2),
            ("x'", 2),
            ("y", 3),
            ("y'", 3),
            ("y''", 3),
            ("z", 4),
            ("z'", 4),
        ],
        differential: &[
            ("y", "x^2"),
            ("y'", "x'^2"),
            ("y''", "x*x'"),
            ("z", "x*y' - x'*y''"),
            ("z'", "x'*y - x*y''"),
        ],
        rank_type: "2,2,4,4:3,3,3,7,7",
        truncate_at: Some(6),
        dims: &[1, 0, 2, 0, 0, 0, 3],
        classes: &[
            ("y'*y'' + x'*z", 6),
            ("y*y'' + x*z'", 6),
            ("y*y' - x*z + x'*z'", 6),
        ],
        truncation_of: None,
    },
    Spec {
        name: "chain-246-a0b0",
        description: "(2,4,6:3,5,7,11) chain dx5 = a x2 x4 + b x2^3 at a = b = 0, dx7 = x4^2",
        generators: &[("x2", 2), ("x3", 3), ("x4", 4), ("x5", 5), ("x6", 6), ("x7", 7)],
        differential: &[("x3", "x2^2"), ("x6", "x2*x5"), ("x7", "x4^2")],
        rank_type: "2,4,6:3,5,7,11",
        truncate_at: Some(8),
        dims: &[1, 0, 1, 0, 1, 1, 1, 0, 1],
        classes: &[("x2*x6 - x3*x5", 8)],
        truncation_of: None,
    },
    Spec {
        name: "chain-246-a1b1",
        description: "(2,4,6:3,5,7,11) chain dx5 = a x2 x4 + b x2^3 at a = b = 1, dx7 = x4^2",
        generators: &[("x2", 2), ("x3", 3), ("x4", 4), ("x5", 5), ("x6", 6), ("x7", 7)],
        differential: &[
            ("x3", "x2^2"),
            ("x5", "x2*x4 + x2^3"),
            ("x6", "x2*x5 - x3*x4 - x2^2*x3"),
            ("x7", "x4^2"),
        ],
        rank_type: "2,4,6:3,5,7,11",
        truncate_at: Some(8),
        dims: &[1, 0, 1, 0, 1, 0, 0, 0, 1],
        classes: &[("x2*x6 - x3*x5", 8)],
        truncation_of: None,
    },
    Spec {
        name: "r24-33557",
        description: "(2,4:3,3,5,5,7) with dy = x^2, dy' = 0, dz = x y'; u' - x y is a closed degree-5 element",
        generators: &[("x", 2), ("y", 3), ("y'", 3), ("z", 4), ("u", 5), ("u'", 5)],
        differential: &[
            ("y", "x^2"),
            ("z", "x*y'"),
            ("u", "y*y' - x*z"),
            ("u'", "x^3"),
        ],
        rank_type: "2,4:3,3,5,5,7",
        truncate_at: Some(5),
        dims: &[1, 0, 1, 1, 0, 1],
        classes: &[("u' - x*y", 5)],
        truncation_of: None,
    },
    Spec {
        name: "r22467-case-a",
        description: "(2,2,4,6:3,3,5,7,11), dy = x^2 + x x', dy' = x'^2 + x x': closed yy' - xz - x'z",
        generators: &[
            ("x", 2),
            ("x'", 2),
            ("y", 3),
            ("y'", 3),
            ("z", 4),
            ("u", 5),
            ("w", 6),
        ],
        differential: &[
            ("y", "x^2 + x*x'"),
            ("y'", "x'^2 + x*x'"),
            ("z", "x*y' - x'*y"),
            ("u", "x^3"),
        ],
        rank_type: "2,2,4,6:3,3,5,7,11",
        truncate_at: Some(6),
        dims: &[1, 0, 2, 0, 1, 0, 2],
        classes: &[("y*y' - x*z - x'*z", 6)],
        truncation_of: None,
    },
    Spec {
        name: "r22467-case-c",
        description: "(2,2,4,6:3,3,5,7,11), dy = x x', dy' = x'^2: closed yy' + x'z",
        generators: &[
            ("x", 2),
            ("x'", 2),
            ("y", 3),
            ("y'", 3),
            ("z", 4),
            ("u", 5),
            ("w", 6),
        ],
        differential: &[
            ("y", "x*x'"),
            ("y'", "x'^2"),
            ("z", "x'*y - x*y'"),
            ("u", "x^3"),
        ],
        rank_type: "2,2,4,6:3,3,5,7,11",
        truncate_at: Some(6),
        dims: &[1, 0, 2, 0, 1, 0, 2],
        classes: &[("y*y' + x'*z", 6)],
        truncation_of: None,
    },
    Spec {
        name: "r248-massey",
        description: "(2,4,a:3,3,b,c) with dy = x^2, dy' = 0, dz = x y': Massey class [xz - yy']",
        generators: &[("x", 2), ("y", 3), ("y'", 3), ("z", 4)],
        differential: &[("y", "x^2"), ("z", "x*y'")],
        rank_type: "2,4,8:3,3,7,15",
        truncate_at: Some(6),
        dims: &[1, 0, 1, 1, 0, 0, 1],
        classes: &[("x*z - y*y'", 6)],
        truncation_of: None,
    },
];

pub fn witness_catalog() -> Vec<CatalogEntry> {
    SPECS
        .iter()
        .map(|s| {
            let mut model = SullivanModel::from_text(s.generators, s.differential)
                .unwrap_or_else(|e| panic!("catalog entry {}: {e}", s.name))
                .with_rank_type(
                    s.rank_type
                        .parse()
                        .unwrap_or_else(|e| panic!("catalog entry {}: {e}", s.name)),
                );
            if let Some(t) = s.truncate_at {
                model = model.truncated_at(t);
            }
            CatalogEntry {
                name: s.name,
                description: s.description,
                model,
                expected_dims: s.dims.to_vec(),
                expected_classes: s
                    .classes
                    .iter()
                    .map(|&(element, degree)| ExpectedClass { element, degree })
                    .collect(),
                truncation_of: s.truncation_of,
            }
        })
        .collect()
}

pub fn catalog_entry(name: &str) -> Option<CatalogEntry> {
    witness_catalog().into_iter().find(|e| e.name == name)
}
