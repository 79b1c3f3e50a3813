use coxkl::coxeter::{bruhat_leq, build_group, CoxeterMatrix, ElementId, GroupTable};
use coxkl::klbase::{build_wgraph, kl_polynomial, mu, KlStore};
use coxkl::ring::QPoly;

fn group(name: &str) -> GroupTable {
    build_group(&CoxeterMatrix::preset(name).unwrap()).unwrap()
}

/// Full table of P_{x,y} by the plain recursion over every pair, using the
/// highest left descent of y and no extremal or inverse reduction.
fn naive_table(g: &GroupTable) -> Vec<Vec<QPoly>> {
    let n = g.size();
    let mut p = vec![vec![QPoly::zero(); n]; n];
    let mu = |p: &Vec<Vec<QPoly>>, z: ElementId, u: ElementId| -> i64 {
        let d = g.length(u) as i64 - g.length(z) as i64;
        if d <= 0 || d % 2 == 0 {
            return 0;
        }
        p[z.index()][u.index()].coeff(((d - 1) / 2) as usize)
    };
    for y in g.elements() {
        p[y.index()][y.index()] = QPoly::one();
        if y == g.identity() {
            continue;
        }
        let s = 7 - g.left_descents(y).leading_zeros() as usize;
        let v = g.lmul(s, y);
        for x in g.elements() {
            if x == y || !bruhat_leq(g, x, y) {
                continue;
            }
            let sx = g.lmul(s, x);
            let c = usize::from(g.is_left_descent(s, x));
            let mut r = QPoly::zero();
            r.add_scaled_shifted(&p[sx.index()][v.index()], 1, 1 - c).unwrap();
            r.add_scaled_shifted(&p[x.index()][v.index()], 1, c).unwrap();
            for z in g.elements() {
                if z == v || !g.is_left_descent(s, z) {
                    continue;
                }
                let m = mu(&p, z, v);
                if m != 0 {
                    let shift = ((g.length(y) - g.length(z)) / 2) as usize;
                    r.add_scaled_shifted(&p[x.index()][z.index()], -m, shift).unwrap();
                }
            }
            p[x.index()][y.index()] = r;
        }
    }
    p
}

#[test]
fn store_matches_naive_recursion() {
    for name in ["A1", "A2", "A3", "B3", "I2(5)", "I2(8)", "D4", "H3"] {
        let g = group(name);
        let store = KlStore::build(&g).unwrap();
        let table = naive_table(&g);
        for y in g.elements() {
            for x in g.elements() {
                assert_eq!(
                    kl_polynomial(&store, x, y),
                    &table[x.index()][y.index()],
                    "{name} x={x} y={y}"
                );
            }
        }
        assert!(store.anomalies().is_empty(), "{name}");
    }
}

#[test]
fn dihedral_polynomials_are_one() {
    for m in 2..=12 {
        let g = group(&format!("I2({m})"));
        let store = KlStore::build(&g).unwrap();
        for y in g.elements() {
            for x in g.elements() {
                let expect = if bruhat_leq(&g, x, y) { QPoly::one() } else { QPoly::zero() };
                assert_eq!(kl_polynomial(&store, x, y), &expect);
                let d = g.length(y) as i64 - g.length(x) as i64;
                let m_expect = i64::from(d == 1 && bruhat_leq(&g, x, y));
                assert_eq!(mu(&store, x, y), m_expect);
            }
        }
        assert_eq!(store.distinct_polynomials(), vec![QPoly::one()]);
    }
}

#[test]
fn a3_has_one_plus_q() {
    let g = group("A3");
    let store = KlStore::build(&g).unwrap();
    let polys = store.distinct_polynomials();
    assert!(polys.contains(&"1+q".parse().unwrap()));
    assert_eq!(polys, vec![QPoly::one(), "1+q".parse().unwrap()]);
}

#[test]
fn inverse_symmetry_and_degree_bound_on_h3() {
    let g = group("H3");
    let store = KlStore::build(&g).unwrap();
    for y in g.elements() {
        for x in g.elements() {
            let p = kl_polynomial(&store, x, y);
            assert_eq!(p, kl_polynomial(&store, g.inverse(x), g.inverse(y)));
            if x != y && !p.is_zero() {
                let d = (g.length(y) - g.length(x)) as usize;
                assert!(2 * p.degree().unwrap() < d);
            }
            let diff = g.length(y) as i64 - g.length(x) as i64;
            if diff % 2 == 0 {
                assert_eq!(mu(&store, x, y), 0);
            }
        }
    }
}

#[test]
fn wgraph_edges() {
    let g = group("A1");
    let store = KlStore::build(&g).unwrap();
    let wg = build_wgraph(&store);
    assert_eq!(wg.edges(), vec![(ElementId(0), ElementId(1), 1)]);

    let g = group("H3");
    let store = KlStore::build(&g).unwrap();
    let wg = build_wgraph(&store);
    assert!(wg.nonpositive_edges().is_empty());
    let mut edges = wg.edges();
    let mut inverted: Vec<_> = edges
        .iter()
        .map(|&(x, y, m)| (g.inverse(x), g.inverse(y), m))
        .collect();
    edges.sort_unstable();
    inverted.sort_unstable();
    assert_eq!(edges, inverted);
    for (x, y, _) in wg.edges() {
        assert!(x < y);
        assert_eq!((g.length(y) - g.length(x)) % 2, 1);
    }
}
