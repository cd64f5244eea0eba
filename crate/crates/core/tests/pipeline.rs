//! End-to-end checks across modules through the public API only.

use rootlab::exactlin::{frac, int};
use rootlab::polytopes::{
    arrangement_from_ridges, hyperplane_indices, interior_cuts, arrangement_normals, polar_hrep, polar_vertices,
    standard_facet, standard_facet_indices,
};
use rootlab::verifier::{case_list, run_all, Case, Status};
use rootlab::weyl::{full_orbit, orbit_with_words};
use rootlab::zonotopes::{zt_equals_polar, zt_membership, Zonotope};
use rootlab::{build_root_system, Family, RationalVector, TypeLabel};

#[test]
fn every_polar_vertex_is_in_the_zonotope() {
    for (f, n, j, c) in [(Family::A, 3, 1, int(1)), (Family::C, 3, 1, frac(1, 2)), (Family::B, 3, 3, frac(1, 4)), (Family::G, 2, 1, frac(1, 6))] {
        let rs = build_root_system(TypeLabel::new(f, n).unwrap());
        let z = Zonotope::from_orbit(&rs, rs.coweight(j).unwrap(), &c).unwrap();
        let hrep = polar_hrep(&rs);
        for p in polar_vertices(&rs).unwrap() {
            assert!(hrep.contains(&rs, &p));
            assert!(zt_membership(&z, &p), "{f}{n}: {p}");
        }
        // just outside P* along θ
        let outside = rs.alcove_vertex(1).unwrap().scale(&frac(11, 10));
        assert!(!zt_membership(&z, &outside));
    }
}

#[test]
fn arrangement_is_the_zonotope_generator_set_up_to_sign() {
    for (f, n, j) in [(Family::A, 4, 1), (Family::B, 3, 3), (Family::G, 2, 1), (Family::C, 4, 1)] {
        let rs = build_root_system(TypeLabel::new(f, n).unwrap());
        let ridges = arrangement_from_ridges(&rs).unwrap();
        let generators = arrangement_normals(&rs, &[j]).unwrap();
        assert_eq!(ridges.normals, generators.normals, "{f}{n}");
    }
}

#[test]
fn non_zonotope_types_have_interior_cuts() {
    for (f, n) in [(Family::B, 5), (Family::D, 5), (Family::D, 6), (Family::B, 6)] {
        let label = TypeLabel::new(f, n).unwrap();
        let rs = build_root_system(label);
        let arr = arrangement_normals(&rs, &hyperplane_indices(label)).unwrap();
        let cuts = interior_cuts(&rs, &arr).unwrap();
        assert!(cuts.iter().any(|c| c.cuts), "{label}");
    }
}

#[test]
fn minimal_words_reach_every_facet() {
    let rs = build_root_system(TypeLabel::new(Family::F, 4).unwrap());
    let facet = standard_facet(&rs, 4).unwrap();
    let words = orbit_with_words(&rs, rs.alcove_vertex(4).unwrap());
    assert_eq!(words.len(), full_orbit(&rs, rs.alcove_vertex(4).unwrap()).len());
    assert_eq!(standard_facet_indices(&rs), vec![4]);
    assert!(facet.vertex_roots.iter().all(|r| rs.inner(rs.coweight(4).unwrap(), r) == int(2)));
}

#[test]
fn run_all_matches_case_list_and_partition() {
    let reports = run_all(4);
    let cases = case_list(4);
    assert_eq!(reports.len(), cases.len());
    for (report, (clause, case)) in reports.iter().zip(&cases) {
        assert_eq!(&report.clause, clause);
        assert_eq!(report.status, Status::Pass, "{clause}");
        let is_zonotope = matches!(case, Case::Zonotope(..));
        assert_eq!(clause.starts_with("zonotope/"), is_zonotope);
    }
}

#[test]
fn equality_report_lists_every_alcove_vertex() {
    let rs = build_root_system(TypeLabel::new(Family::C, 5).unwrap());
    let report = zt_equals_polar(&rs, 1, &frac(1, 2)).unwrap();
    assert!(report.equal);
    let targets: Vec<&RationalVector> = report.certificates.iter().map(|c| &c.target).collect();
    let expected: Vec<&RationalVector> = rs.alcove_vertices().iter().collect();
    assert_eq!(targets, expected);
}
