mod common;

use ars_core::binmat::in_class;
use ars_core::construct::{interchange_path, uniform_minimizer, zero_block_parts};
use ars_core::flow::{feasible_bounded, t_term_rank, IntMatrix};
use ars_core::oracle::{brute_t_term_rank, enumerate_class};
use ars_core::structure::structure_matrix;
use ars_core::{BinaryMatrix, ClassTables, CoverSpec, Interchange, Partition};
use common::{p, small_pairs};
use proptest::prelude::*;

fn matrix(max_m: usize, max_n: usize) -> impl Strategy<Value = BinaryMatrix> {
    (1..=max_m, 1..=max_n).prop_flat_map(|(m, n)| {
        proptest::collection::vec(any::<bool>(), m * n)
            .prop_map(move |bits| BinaryMatrix::from_fn(m, n, |i, j| bits[i * n + j]))
    })
}

fn partition() -> impl Strategy<Value = Partition> {
    proptest::collection::vec(1usize..8, 0..8).prop_map(|v| Partition::from_unsorted(&v))
}

proptest! {
    #[test]
    fn conjugation_is_an_involution(r in partition()) {
        let c = r.conjugate();
        prop_assert_eq!(c.weight(), r.weight());
        prop_assert_eq!(c.conjugate(), r);
    }

    #[test]
    fn structure_matrix_recomputes_from_definition((r, s) in partition().prop_flat_map(|r| {
        let w = r.weight();
        (Just(r), proptest::collection::vec(1usize..4, 0..12).prop_map(move |v| {
            // any partition of the same weight
            let mut parts = Vec::new();
            let mut left = w;
            for x in v { if left == 0 { break; } let x = x.min(left); parts.push(x); left -= x; }
            parts.extend(std::iter::repeat_n(1, left));
            Partition::from_unsorted(&parts)
        }))
    })) {
        let t = structure_matrix(&r, &s).unwrap();
        let (m, n) = (r.len(), s.len());
        for k in 0..=m {
            for l in 0..=n {
                let direct = (k * l) as i64 - s.parts()[..l].iter().sum::<usize>() as i64 + r.parts()[k..].iter().sum::<usize>() as i64;
                prop_assert_eq!(t.get(k, l), direct);
            }
        }
        prop_assert_eq!(t.get(0, 0), r.weight() as i64);
        prop_assert_eq!(t.get(0, n), 0);
        prop_assert_eq!(t.get(m, n), (m * n) as i64 - r.weight() as i64);
    }

    #[test]
    fn interchanges_stay_in_class(a in matrix(5, 5), seed in any::<[usize; 4]>()) {
        let (m, n) = (a.nrows(), a.ncols());
        prop_assume!(m >= 2 && n >= 2);
        let i1 = seed[0] % m;
        let i2 = (i1 + 1 + seed[1] % (m - 1)) % m;
        let j1 = seed[2] % n;
        let j2 = (j1 + 1 + seed[3] % (n - 1)) % n;
        if let Ok(b) = a.apply_interchange(Interchange::new(i1, i2, j1, j2)) {
            prop_assert_eq!(b.row_sums(), a.row_sums());
            prop_assert_eq!(b.col_sums(), a.col_sums());
            prop_assert_eq!(b.hamming(&a), 4);
        }
    }

    #[test]
    fn prefix_cover_is_monotone(a in matrix(5, 5), e in 0usize..6, f in 0usize..6) {
        if a.is_covered(&CoverSpec::prefix(e, f)) {
            prop_assert!(a.is_covered(&CoverSpec::prefix(e + 1, f)));
            prop_assert!(a.is_covered(&CoverSpec::prefix(e, f + 1)));
        }
    }

    #[test]
    fn rank_is_permutation_invariant_and_bounded(a in matrix(6, 6), rot in 0usize..6, t in 1usize..6) {
        let (m, n) = (a.nrows(), a.ncols());
        let rows: Vec<usize> = (0..m).map(|i| (i + rot) % m).rev().collect();
        let cols: Vec<usize> = (0..n).map(|j| (j + 2 * rot) % n).collect();
        let rank = t_term_rank(&a, t);
        prop_assert_eq!(rank, t_term_rank(&a.permuted(&rows, &cols), t));
        prop_assert!(t_term_rank(&a, t + 1) >= rank);
        let cap: usize = a.row_sums().iter().map(|&x| x.min(t)).sum();
        prop_assert!(rank <= n.min(cap));
    }

    #[test]
    fn bounded_feasibility_honours_bounds(a in matrix(5, 5), extra in proptest::collection::vec(0usize..3, 25)) {
        // Bounds dominate a known solution, so a solution must exist.
        let (m, n) = (a.nrows(), a.ncols());
        let bounds = IntMatrix::from_fn(m, n, |i, j| usize::from(a.get(i, j)) + extra[i * n + j]);
        let got = feasible_bounded(a.row_sums(), a.col_sums(), &bounds).unwrap().expect("a itself is feasible");
        prop_assert_eq!(got.row_sums(), a.row_sums());
        prop_assert_eq!(got.col_sums(), a.col_sums());
        for i in 0..m {
            for j in 0..n {
                prop_assert!(got.get(i, j) <= bounds.get(i, j));
            }
        }
    }

    #[test]
    fn lemma_on_crossing_lines(e in 0usize..30, e2 in 0usize..30, f in 0usize..30, f2 in 0usize..30, k in 1usize..10, dl in 1usize..10) {
        // k*e + f < k*e' + f' and l*e + f > l*e' + f' with 1 <= k < l force e' < e and f < f'.
        let l = k + dl;
        if k * e + f < k * e2 + f2 && l * e + f > l * e2 + f2 {
            prop_assert!(e2 < e);
            prop_assert!(f < f2);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn rank_routes_agree_on_random_6x6(bits in proptest::collection::vec(any::<bool>(), 36)) {
        let a = BinaryMatrix::from_fn(6, 6, |i, j| bits[i * 6 + j]);
        for t in 1..=5 {
            let flow = t_term_rank(&a, t);
            prop_assert_eq!(flow, brute_t_term_rank(&a, t));
            prop_assert_eq!(flow, a.min_cover_value(t).value);
        }
    }
}

#[test]
fn interchange_paths_replay() {
    for (r, s) in [
        (p(&[2, 2, 1]), p(&[2, 2, 1])),
        (p(&[3, 2, 2, 1]), p(&[2, 2, 2, 2])),
        (p(&[2, 2, 2]), p(&[2, 2, 1, 1])),
    ] {
        let members: Vec<_> = enumerate_class(&r, &s, None).collect();
        for a in &members {
            for b in members.iter().step_by(3) {
                let path = interchange_path(a, b).unwrap();
                let mut current = a.clone();
                for ic in path {
                    current = current.apply_interchange(ic).unwrap();
                    assert!(in_class(&current, &r, &s));
                }
                assert_eq!(&current, b);
            }
        }
    }
}

#[test]
fn residual_margins_are_consistent() {
    for (r, s) in small_pairs(4, 8) {
        let Ok(tables) = ClassTables::new(&r, &s) else {
            continue;
        };
        let (m, n) = (r.len(), s.len());
        for e1 in 0..=m {
            for e2 in e1..=m {
                for f2 in 0..=n {
                    for f1 in f2..=n {
                        let Ok(parts) = zero_block_parts(&r, &s, (e1, f1), (e2, f2)) else {
                            continue;
                        };
                        for i in 0..e2 {
                            let hat = parts.top.row_sums.get(i).copied().unwrap_or(0);
                            assert_eq!(hat + parts.r_bar[i], r.parts()[i]);
                        }
                        for j in 0..f1 {
                            let hat = parts.left.row_sums.get(j).copied().unwrap_or(0);
                            assert_eq!(hat + parts.s_bar[j], s.parts()[j]);
                        }
                    }
                }
            }
        }
        // rho~_t is nondecreasing in t and never exceeds n.
        let minima: Vec<usize> = (1..=5)
            .map(|t| tables.min_t_term_rank(t).unwrap().value)
            .collect();
        assert!(minima.windows(2).all(|w| w[0] <= w[1]));
        assert!(minima.iter().all(|&v| v <= n));
    }
}

#[test]
fn psi_is_nonnegative_on_nonempty_classes() {
    for (r, s) in small_pairs(4, 8) {
        let Ok(tables) = ClassTables::new(&r, &s) else {
            continue;
        };
        let (m, n) = (r.len(), s.len());
        for b in 1..=m {
            for a in 0..b {
                for d in 1..=n {
                    for c in 0..d {
                        assert!(tables.psi(a, b, c, d).unwrap() >= 0, "{r} / {s}");
                    }
                }
            }
        }
    }
}

#[test]
fn two_row_and_one_row_covers_combine() {
    let mut hits = 0;
    for (r, s) in small_pairs(5, 10) {
        let Ok(tables) = ClassTables::new(&r, &s) else {
            continue;
        };
        let (m, n) = (r.len(), s.len());
        if m < 2 {
            continue;
        }
        for f in 1..n {
            for f_prime in f + 1..n {
                let tail_ones = s.parts()[f - 1..].iter().all(|&x| x == 1);
                if !tail_ones
                    || !tables.cover_exists(2, f).unwrap()
                    || !tables.cover_exists(1, f_prime).unwrap()
                {
                    continue;
                }
                hits += 1;
                let lhs = tables.psi(1, 2, f, f_prime).unwrap();
                let rhs = tables.structure().get(1, f_prime) + tables.structure().get(2, f);
                assert!(lhs >= rhs, "{r} / {s}, f={f}, f'={f_prime}: {lhs} < {rhs}");
            }
        }
    }
    assert!(hits > 0);
}

#[test]
fn uniform_minimizer_sweep() {
    let mut built = 0;
    for (r, s) in small_pairs(5, 10) {
        let Ok(tables) = ClassTables::new(&r, &s) else {
            continue;
        };
        if r.len() <= 2 || s.len() <= 2 {
            continue;
        }
        for t in 1..=r.largest() {
            if !tables.uniform_minimizer_hypotheses(t).unwrap().holds {
                assert_eq!(uniform_minimizer(&r, &s, t).unwrap(), None);
                continue;
            }
            let a = uniform_minimizer(&r, &s, t)
                .unwrap()
                .expect("hypotheses hold");
            assert!(in_class(&a, &r, &s));
            for k in 1..=t {
                assert_eq!(
                    t_term_rank(&a, k),
                    tables.min_t_term_rank(k).unwrap().value,
                    "{r} / {s}, k={k}"
                );
            }
            built += 1;
        }
    }
    assert!(built >= 11);
}
