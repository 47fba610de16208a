//! Named fixture polytopes.

use crate::polytope::Polytope;
use crate::rational::RationalPoint;

const ENTRIES: &[(&str, &[&[&str]])] = &[
    ("square2", &[&["-1", "-1"], &["1", "-1"], &["1", "1"], &["-1", "1"]]),
    ("diamond2", &[&["1", "0"], &["-1", "0"], &["0", "1"], &["0", "-1"]]),
    ("halfdiamond2", &[&["1/2", "0"], &["-1/2", "0"], &["0", "1/2"], &["0", "-1/2"]]),
    ("seg_m1_2", &[&["-1"], &["2"]]),
    ("seg_mhalf_1", &[&["-1/2"], &["1"]]),
    ("seg_mhalf_third", &[&["-1/2"], &["1/3"]]),
    ("seg_m23_1", &[&["-2/3"], &["1"]]),
    (
        "cube3",
        &[
            &["-1", "-1", "-1"],
            &["-1", "-1", "1"],
            &["-1", "1", "-1"],
            &["-1", "1", "1"],
            &["1", "-1", "-1"],
            &["1", "-1", "1"],
            &["1", "1", "-1"],
            &["1", "1", "1"],
        ],
    ),
    (
        "octa3",
        &[
            &["1", "0", "0"],
            &["-1", "0", "0"],
            &["0", "1", "0"],
            &["0", "-1", "0"],
            &["0", "0", "1"],
            &["0", "0", "-1"],
        ],
    ),
];

pub fn names() -> impl Iterator<Item = &'static str> {
    ENTRIES.iter().map(|(name, _)| *name)
}

pub fn lookup(name: &str) -> Option<Polytope> {
    ENTRIES
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, raw)| build(raw))
}

pub fn catalog() -> Vec<(String, Polytope)> {
    ENTRIES
        .iter()
        .map(|(name, raw)| (name.to_string(), build(raw)))
        .collect()
}

fn build(raw: &[&[&str]]) -> Polytope {
    let points = raw
        .iter()
        .map(|c| RationalPoint::parse(c).expect("catalog coordinates are valid"))
        .collect();
    Polytope::from_vertices(points).expect("catalog entries are full-dimensional")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lookups() {
        let sq = lookup("square2").unwrap();
        assert_eq!(sq.vertices().len(), 4);
        assert_eq!(sq.denominator().to_usize(), Some(1));
        assert_eq!(lookup("halfdiamond2").unwrap().denominator().to_usize(), Some(2));
        assert_eq!(lookup("cube3").unwrap().dual().unwrap(), lookup("octa3").unwrap());
        assert!(lookup("nope").is_none());
    }

    #[test]
    fn every_entry_has_interior_origin() {
        for (name, p) in catalog() {
            assert!(p.origin_is_interior(), "{name}");
        }
        assert_eq!(names().count(), 9);
    }
}
