//! Frozen index values for family members.
//!
//! Values were produced by an independent networkx implementation (its own
//! generators, all-pairs distances, `math.fsum`) and are pinned to 1e-9.

use abcgg::families::{edge_degree_classes, generate, DegreeClasses, FamilySpec};
use abcgg::{abc, abc_gg, wiener, Graph};

struct Fixture {
    spec: FamilySpec,
    vertices: usize,
    edges: usize,
    wiener: u64,
    abc: f64,
    abc_gg: f64,
    census: &'static [((usize, usize), usize)],
}

const fn fx(
    spec: FamilySpec,
    vertices: usize,
    edges: usize,
    wiener: u64,
    abc: f64,
    abc_gg: f64,
    census: &'static [((usize, usize), usize)],
) -> Fixture {
    Fixture {
        spec,
        vertices,
        edges,
        wiener,
        abc,
        abc_gg,
        census,
    }
}

use FamilySpec::*;

const FIXTURES: &[Fixture] = &[
    fx(QMn { m: 4, n: 3 }, 12, 18, 138, 11.879393923934, 11.589466384404, &[((5, 5), 6), ((5, 2), 8), ((2, 2), 4)]),
    fx(QMn { m: 6, n: 5 }, 30, 75, 1035, 41.978573513137, 32.019217590821, &[((9, 9), 15), ((9, 4), 24), ((4, 4), 36)]),
    fx(Spiro { q: 5, h: 2, k: 4 }, 17, 20, 476, 14.142135623731, 12.797770285850, &[((4, 2), 12), ((2, 2), 8)]),
    fx(Spiro { q: 6, h: 1, k: 3 }, 16, 18, 376, 12.633187715867, 10.521729378938, &[((4, 4), 1), ((4, 2), 6), ((2, 2), 11)]),
    fx(Spiro { q: 8, h: 4, k: 6 }, 43, 48, 7664, 33.941125496954, 18.492705139476, &[((4, 2), 20), ((2, 2), 28)]),
    fx(Polyphenylene { q: 6, h: 3, k: 4 }, 24, 27, 1548, 18.970562748477, 13.229021563813, &[((3, 3), 3), ((3, 2), 12), ((2, 2), 12)]),
    fx(Polyphenylene { q: 5, h: 1, k: 3 }, 15, 17, 350, 11.899494936612, 11.414170498636, &[((3, 3), 3), ((3, 2), 6), ((2, 2), 8)]),
    fx(ChainTriangular { n: 5 }, 11, 15, 135, 10.322398681326, 10.844836134375, &[((4, 4), 3), ((4, 2), 10), ((2, 2), 2)]),
    fx(ChainTriangular { n: 6 }, 13, 18, 218, 12.348984679395, 13.259162390097, &[((4, 4), 4), ((4, 2), 12), ((2, 2), 2)]),
    fx(ParaSquare { n: 5 }, 16, 20, 460, 14.142135623731, 11.563882775755, &[((4, 2), 16), ((2, 2), 4)]),
    fx(ParaSquare { n: 6 }, 19, 24, 768, 16.970562748477, 13.115493583895, &[((4, 2), 20), ((2, 2), 4)]),
    fx(OrthoSquare { n: 5 }, 16, 20, 370, 13.857932587259, 12.853009199743, &[((4, 4), 3), ((4, 2), 10), ((2, 2), 7)]),
    fx(OrthoSquare { n: 6 }, 19, 24, 588, 16.591625366514, 15.043028166186, &[((4, 4), 4), ((4, 2), 12), ((2, 2), 8)]),
    fx(ParaHex { n: 5 }, 26, 30, 1785, 21.213203435596, 14.237260835878, &[((4, 2), 16), ((2, 2), 14)]),
    fx(ParaHex { n: 6 }, 31, 36, 3012, 25.455844122716, 16.039302053228, &[((4, 2), 20), ((2, 2), 16)]),
    fx(MetaHex { n: 5 }, 26, 30, 1535, 21.213203435596, 15.389185470115, &[((4, 2), 16), ((2, 2), 14)]),
    fx(MetaHex { n: 6 }, 31, 36, 2512, 25.455844122716, 17.743703852201, &[((4, 2), 20), ((2, 2), 16)]),
    fx(OrthoHex { n: 5 }, 26, 30, 1285, 20.929000399124, 16.541110104351, &[((4, 4), 3), ((4, 2), 10), ((2, 2), 17)]),
    fx(OrthoHex { n: 6 }, 31, 36, 2012, 25.076906740753, 19.448105651175, &[((4, 4), 4), ((4, 2), 12), ((2, 2), 20)]),
    fx(Triangulane { k: 2 }, 21, 30, 678, 20.076391289707, 18.742266063331, &[((4, 4), 12), ((4, 2), 12), ((2, 2), 6)]),
    fx(Triangulane { k: 3 }, 45, 66, 4626, 43.827017193590, 39.722507485571, &[((4, 4), 30), ((4, 2), 24), ((2, 2), 12)]),
    fx(DendrimerD3 { n: 1 }, 58, 66, 14868, 46.183766184074, 30.463727873666, &[((3, 3), 12), ((3, 2), 24), ((2, 2), 30)]),
    fx(DendrimerD3 { n: 2 }, 136, 156, 140382, 109.095454429505, 63.842993140582, &[((3, 3), 30), ((3, 2), 60), ((2, 2), 66)]),
    fx(DendrimerD3 { n: 3 }, 292, 336, 962370, 234.918830920368, 128.806538094483, &[((3, 3), 66), ((3, 2), 132), ((2, 2), 138)]),
];

#[test]
fn family_fixtures() {
    for f in FIXTURES {
        let g = generate(&f.spec).unwrap();
        let name = f.spec.to_string();
        assert_eq!(g.num_vertices(), f.vertices, "{name}");
        assert_eq!(g.num_edges(), f.edges, "{name}");
        assert_eq!(wiener(&g).unwrap(), f.wiener, "{name}");
        assert!((abc::<f64>(&g).unwrap() - f.abc).abs() < 1e-9, "{name}");
        assert!((abc_gg::<f64>(&g).unwrap() - f.abc_gg).abs() < 1e-9, "{name}");
        assert_eq!(edge_degree_classes(&g), DegreeClasses::from_iter(f.census.iter().copied()), "{name}");
    }
}

#[test]
fn hand_fixtures() {
    let s = |x: f64| x.sqrt();
    let p4 = Graph::path(4);
    assert!((abc::<f64>(&p4).unwrap() - 3.0 / s(2.0)).abs() < 1e-9);
    assert!((abc_gg::<f64>(&p4).unwrap() - (2.0 * s(2.0 / 3.0) + s(2.0) / 2.0)).abs() < 1e-9);
    assert_eq!(wiener(&p4).unwrap(), 10);
    let bowtie = generate(&ChainTriangular { n: 2 }).unwrap();
    assert!((abc_gg::<f64>(&bowtie).unwrap() - 4.0 * s(2.0 / 3.0)).abs() < 1e-9);
    let squares = generate(&ParaSquare { n: 2 }).unwrap();
    assert!((abc_gg::<f64>(&squares).unwrap() - 4.0 * s(2.0)).abs() < 1e-9);
    assert_eq!(wiener(&Graph::cycle(4)).unwrap(), 8);
}

#[test]
fn f32_follows_f64_on_fixtures() {
    for f in FIXTURES.iter().take(10) {
        let g = generate(&f.spec).unwrap();
        let a = abc::<f32>(&g).unwrap() as f64;
        let b = abc_gg::<f32>(&g).unwrap() as f64;
        assert!((a - f.abc).abs() < 1e-4 * f.abc);
        assert!((b - f.abc_gg).abs() < 1e-4 * f.abc_gg);
    }
}
