mod common;

use common::{random_forest, PATH_GAPS, PATH_TABLE};
use egcolor::bounds::{
    classify_path, figure1_table, lll_exponent, linear_threshold, quadratic_threshold,
    rainbow_class, render_markdown, render_text, threshold_report, Asymptotic, GrowthClass,
    Rational,
};
use egcolor::PatternGraph;

fn ratio((a, b): (i64, i64)) -> Rational {
    Rational::new(a, b)
}

#[test]
fn path_classes_match_reference_table() {
    for (v, letters) in PATH_TABLE {
        for (k, letter) in letters.chars().enumerate() {
            let q = k + 2;
            let got = classify_path(v, q);
            let ok = match letter {
                'L' => got == GrowthClass::Linear,
                'Q' => got == GrowthClass::Quadratic,
                'I' => matches!(got, GrowthClass::Intermediate { open: true, .. }),
                _ => unreachable!(),
            };
            assert!(ok, "v={v} q={q}: {got}");
        }
        assert_eq!(classify_path(v, v), GrowthClass::OutOfRange);
        assert_eq!(classify_path(v, 1), GrowthClass::OutOfRange);
    }
    for (v, lower, log, upper) in PATH_GAPS {
        let got = classify_path(v, v.div_ceil(2));
        assert_eq!(got.lower(), Some(Asymptotic::new(ratio(lower), ratio(log))));
        assert_eq!(got.upper(), Some(Asymptotic::poly(ratio(upper))));
    }
}

#[test]
fn rendered_table_covers_every_cell() {
    let rows = figure1_table(3, 12).unwrap();
    let cells: usize = PATH_TABLE.iter().map(|(_, s)| s.len()).sum();
    assert_eq!(rows.len(), cells);
    let md = render_markdown(&rows);
    assert_eq!(md.lines().count(), cells + 2);
    assert!(md.contains("| 7 | 4 | intermediate | Ω(n^{4/3}/log^{2/3} n), O(n^{5/3}) |"));
    assert!(md.contains("| 9 | 5 | intermediate | Ω(n^{3/2}/log n), O(n^{7/4}) |"));
    assert!(render_text(&rows).lines().any(|l| l.contains("quadratic")));
    assert!(figure1_table(2, 5).is_err());
    assert!(figure1_table(6, 5).is_err());
}

#[test]
fn class_rank_is_monotone_in_q() {
    for v in 3..=30 {
        let ranks: Vec<u8> = (2..v).map(|q| classify_path(v, q).rank().unwrap()).collect();
        assert!(ranks.windows(2).all(|w| w[0] <= w[1]), "v={v}");
    }
}

#[test]
fn lll_exponent_at_the_gap() {
    for v in (7..=15).step_by(2) {
        let p = PatternGraph::path(v).unwrap();
        let exp = lll_exponent(&p, v.div_ceil(2)).unwrap();
        assert_eq!(exp, Rational::from_integer(2) - Rational::new(2, v as i64 - 1));
        if v >= 9 {
            assert_eq!(classify_path(v, v.div_ceil(2)).upper(), Some(Asymptotic::poly(exp)));
        }
    }
}

#[test]
fn forests_have_linear_threshold_two() {
    for seed in 0..10 {
        let f = random_forest(seed);
        assert!(f.is_forest());
        assert_eq!(linear_threshold(&f), 2, "seed {seed}");
    }
    let k3 = PatternGraph::clique(3).unwrap();
    assert_eq!(linear_threshold(&k3), 3);
}

#[test]
fn path_quadratic_thresholds() {
    for v in 4..=15 {
        let t = quadratic_threshold(&PatternGraph::path(v).unwrap());
        assert_eq!((t.matching_number, t.max_degree), (v / 2, 2));
        let general = t.general_q.unwrap();
        let exact = t.path_q.unwrap();
        assert_eq!(general, v - 1);
        assert_eq!(exact, v.div_ceil(2) + 1);
        assert!(exact <= general);
        if v >= 6 {
            assert!(exact < general);
        }
        // The exact threshold is where the classification turns quadratic.
        assert_eq!(classify_path(v, exact), GrowthClass::Quadratic);
        assert_ne!(classify_path(v, exact - 1), GrowthClass::Quadratic);
    }
}

#[test]
fn clique_quadratic_thresholds() {
    for p in 4..=8 {
        let k = PatternGraph::clique(p).unwrap();
        let t = quadratic_threshold(&k);
        assert!(t.sharp_hypotheses_hold);
        assert_eq!(t.general_q, Some(k.edge_count() + 2 - p / 2));
        let q = k.edge_count() + 1 - p.div_ceil(2);
        let exp = Rational::new(p as i64 - 2, p.div_ceil(2) as i64);
        assert_eq!(lll_exponent(&k, q).unwrap(), exp);
        assert!(exp < Rational::from_integer(2));
    }
}

#[test]
fn rainbow_classes() {
    for name in ["S2", "S5", "M1", "M4", "K3", "P3"] {
        assert_eq!(rainbow_class(&name.parse().unwrap()), GrowthClass::Linear, "{name}");
    }
    for name in ["P4", "P6", "K4"] {
        assert_eq!(rainbow_class(&name.parse().unwrap()), GrowthClass::Quadratic, "{name}");
    }
}

#[test]
fn report_is_consistent() {
    let h: PatternGraph = "P6".parse().unwrap();
    let r = threshold_report(&h);
    assert_eq!((r.v, r.e, r.c), (6, 5, 1));
    assert_eq!(r.lll_exponents.len(), 5);
    assert_eq!(r.lll_exponents[4], (5, "4".to_string()));
    assert_eq!(r.linear.omega_linear_q, 2);
    let json = serde_json::to_value(&r).unwrap();
    assert_eq!(json["quadratic"]["path_q"], 4);
}
