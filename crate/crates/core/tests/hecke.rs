use coxkl::coxeter::{build_group, CoxeterMatrix, ElementId, GroupTable};
use coxkl::hecke::{
    bar_h, c_in_t_basis, c_in_t_basis_oracle, c_mult_gen, c_to_t, column, h_value, t_mult_gen,
    t_product, BarTable, CCombo, Strategy, TCombo,
};
use coxkl::klbase::{build_wgraph, KlStore};
use coxkl::ring::{LaurentPoly, SymLaurentPoly};

fn group(name: &str) -> GroupTable {
    build_group(&CoxeterMatrix::preset(name).unwrap()).unwrap()
}

fn lp(s: &str) -> LaurentPoly {
    s.parse().unwrap()
}

fn e() -> ElementId {
    ElementId(0)
}

/// `[first, other, first, ...]` with `len` letters, generators 0 and 1.
fn alternating(g: &GroupTable, first: usize, len: usize) -> ElementId {
    let word: Vec<usize> = (0..len).map(|p| (first + p) % 2).collect();
    g.element_from_word(&word).unwrap()
}

#[test]
fn t_mult_gen_examples() {
    let g = group("A1");
    let s = ElementId(1);
    let ts = TCombo::basis(s);
    assert_eq!(t_mult_gen(&g, 0, &TCombo::basis(e())).unwrap(), ts);
    let expect = TCombo::from_terms([(s, lp("-v^-1+v")), (e(), LaurentPoly::one())]).unwrap();
    assert_eq!(t_mult_gen(&g, 0, &ts).unwrap(), expect);
    let cs = TCombo::from_terms([(s, LaurentPoly::one()), (e(), lp("v^-1"))]).unwrap();
    assert_eq!(t_mult_gen(&g, 0, &cs).unwrap(), cs.scaled(&lp("v")).unwrap());
}

#[test]
fn bar_examples() {
    let g = group("A2");
    let bar = BarTable::new(&g).unwrap();
    let s = ElementId(1);
    assert_eq!(bar_h(&bar, &TCombo::basis(e())).unwrap(), TCombo::basis(e()));
    let expect = TCombo::from_terms([(s, LaurentPoly::one()), (e(), lp("v^-1-v"))]).unwrap();
    assert_eq!(bar_h(&bar, &TCombo::basis(s)).unwrap(), expect);
    let store = KlStore::build(&g).unwrap();
    for y in g.elements() {
        let c = c_in_t_basis(&store, y);
        assert_eq!(bar_h(&bar, &c).unwrap(), c);
        // bar is an involution on the whole algebra.
        let t = TCombo::basis(y);
        assert_eq!(bar_h(&bar, &bar_h(&bar, &t).unwrap()).unwrap(), t);
    }
}

#[test]
fn c_basis_examples() {
    let g = group("A1");
    let store = KlStore::build(&g).unwrap();
    assert_eq!(c_in_t_basis(&store, e()), TCombo::basis(e()));
    let cs = TCombo::from_terms([(ElementId(1), LaurentPoly::one()), (e(), lp("v^-1"))]).unwrap();
    assert_eq!(c_in_t_basis(&store, ElementId(1)), cs);

    let g = group("I2(3)");
    let store = KlStore::build(&g).unwrap();
    let w0 = g.longest();
    let c = c_in_t_basis(&store, w0);
    assert_eq!(c.len(), 6);
    for x in g.elements() {
        let l = g.length(x) as i32;
        assert_eq!(c.get(x), LaurentPoly::monomial(1, l - 3));
    }
}

#[test]
fn oracle_matches_store() {
    let mut names: Vec<String> = vec!["A1".into(), "A3".into(), "B3".into(), "H3".into()];
    names.extend((2..=8).map(|m| format!("I2({m})")));
    for name in &names {
        let g = group(name);
        let store = KlStore::build(&g).unwrap();
        let bar = BarTable::new(&g).unwrap();
        for y in g.elements() {
            let oracle = c_in_t_basis_oracle(&g, &bar, y).unwrap();
            assert_eq!(oracle, c_in_t_basis(&store, y), "{name} y={y}");
        }
    }
}

#[test]
fn c_mult_gen_examples() {
    let g = group("I2(7)");
    let store = KlStore::build(&g).unwrap();
    let wg = build_wgraph(&store);
    let s = alternating(&g, 0, 1);
    let b = LaurentPoly::v_plus_v_inv();
    assert_eq!(c_mult_gen(&wg, 0, &CCombo::basis(e())).unwrap(), CCombo::basis(s));
    assert_eq!(
        c_mult_gen(&wg, 0, &CCombo::basis(s)).unwrap(),
        CCombo::basis(s).scaled(&b).unwrap()
    );
    for i in 2..7 {
        let u = alternating(&g, 1, i);
        let expect = CCombo::from_terms([
            (alternating(&g, 0, i + 1), LaurentPoly::one()),
            (alternating(&g, 0, i - 1), LaurentPoly::one()),
        ])
        .unwrap();
        assert_eq!(c_mult_gen(&wg, 0, &CCombo::basis(u)).unwrap(), expect, "i={i}");
    }
}

#[test]
fn column_examples() {
    let g = group("I2(9)");
    let store = KlStore::build(&g).unwrap();
    let wg = build_wgraph(&store);
    let col = column(&wg, e(), Strategy::First).unwrap();
    for x in g.elements() {
        assert_eq!(col.product(x), CCombo::basis(x));
    }
    let s = alternating(&g, 0, 1);
    let col = column(&wg, s, Strategy::First).unwrap();
    assert_eq!(h_value(&col, s, s), SymLaurentPoly::v_plus_v_inv());
    assert_eq!(h_value(&col, e(), s), SymLaurentPoly::one());

    let y = alternating(&g, 0, 6);
    let col = column(&wg, y, Strategy::First).unwrap();
    let expect = CCombo::from_terms([
        (alternating(&g, 0, 2), LaurentPoly::constant(2)),
        (alternating(&g, 0, 4), LaurentPoly::constant(2)),
        (alternating(&g, 0, 6), LaurentPoly::one()),
        (g.longest(), lp("v^-3+2v^-1+2v+v^3")),
    ])
    .unwrap();
    assert_eq!(col.product(y), expect);
}

#[test]
fn columns_agree_with_t_basis_products() {
    let mut names: Vec<String> = vec!["A2".into()];
    names.extend((2..=6).map(|m| format!("I2({m})")));
    for name in &names {
        let g = group(name);
        let store = KlStore::build(&g).unwrap();
        let wg = build_wgraph(&store);
        let c: Vec<TCombo> = g.elements().map(|y| c_in_t_basis(&store, y)).collect();
        for y in g.elements() {
            let col = column(&wg, y, Strategy::First).unwrap();
            for x in g.elements() {
                let direct = t_product(&g, &c[x.index()], &c[y.index()]).unwrap();
                let via_h = c_to_t(&store, &col.product(x)).unwrap();
                assert_eq!(via_h, direct, "{name} x={x} y={y}");
            }
        }
    }
}

#[test]
fn sampled_t_basis_products_on_h3() {
    let g = group("H3");
    let store = KlStore::build(&g).unwrap();
    let wg = build_wgraph(&store);
    for y in [ElementId(7), ElementId(40), ElementId(77), g.longest()] {
        let col = column(&wg, y, Strategy::First).unwrap();
        let cy = c_in_t_basis(&store, y);
        for x in (0..120).step_by(13).map(ElementId) {
            let direct = t_product(&g, &c_in_t_basis(&store, x), &cy).unwrap();
            assert_eq!(c_to_t(&store, &col.product(x)).unwrap(), direct, "x={x} y={y}");
        }
    }
}

#[test]
fn column_entries_have_the_right_parity() {
    let g = group("B3");
    let store = KlStore::build(&g).unwrap();
    let wg = build_wgraph(&store);
    for y in g.elements() {
        let col = column(&wg, y, Strategy::Last).unwrap();
        for x in g.elements() {
            for (z, h) in col.row(x) {
                let parity = (g.length(x) + g.length(y) + g.length(z)) % 2;
                assert_eq!(h.parity(), Some(parity as u8));
                assert!(h.to_laurent().is_bar_invariant());
            }
        }
    }
}
