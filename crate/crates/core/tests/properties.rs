use std::collections::BTreeMap;
use std::sync::OnceLock;

use bch::bchcore::{bch_coefficient_with, coefficient_matrix, EvalOptions};
use bch::denominators::common_denominator;
use bch::lietools::expand_iterated_commutator;
use bch::oracle::{oracle_log_series, FreeSeries};
use bch::tabulation::{coefficient_table_with, partitions_up_to, Partition};
use bch::word::mask_to_string;
use bch::{bch_coefficient, BlockWord, IntegerBackend};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use proptest::prelude::*;

fn oracle12() -> &'static FreeSeries {
    static ORACLE: OnceLock<FreeSeries> = OnceLock::new();
    ORACLE.get_or_init(|| oracle_log_series(12).unwrap())
}

fn letters(max_len: usize) -> impl Strategy<Value = String> {
    proptest::collection::vec(prop_oneof![Just('A'), Just('B')], 1..=max_len)
        .prop_map(|v| v.into_iter().collect())
}

fn blocks(max_m: usize, max_q: u32) -> impl Strategy<Value = Vec<u32>> {
    proptest::collection::vec(1..=max_q, 2..=max_m)
}

fn exact() -> EvalOptions {
    EvalOptions::checked()
}

proptest! {
    #[test]
    fn parse_render_round_trip(s in letters(40)) {
        let w = BlockWord::parse(&s).unwrap();
        prop_assert_eq!(w.render(), s.clone());
        prop_assert_eq!(BlockWord::parse(&s.to_lowercase()).unwrap(), w.clone());
        prop_assert_eq!(w.degree() as usize, s.len());
        if let Some(mask) = w.to_mask() {
            prop_assert_eq!(BlockWord::from_mask(mask, w.degree()).unwrap(), w);
        }
    }

    #[test]
    fn agrees_with_oracle(s in letters(12)) {
        let w = BlockWord::parse(&s).unwrap();
        let got = bch_coefficient_with(&w, IntegerBackend::Auto, &exact()).unwrap();
        prop_assert_eq!(&got, oracle12().get(w.degree(), w.to_mask().unwrap()));
    }

    #[test]
    fn invariant_under_block_permutation(
        (original, shuffled) in blocks(6, 4).prop_flat_map(|b| (Just(b.clone()), Just(b).prop_shuffle())),
        a_first in any::<bool>(),
    ) {
        let x = bch_coefficient(&BlockWord::new(original, a_first).unwrap(), IntegerBackend::Auto).unwrap();
        let y = bch_coefficient(&BlockWord::new(shuffled, a_first).unwrap(), IntegerBackend::Auto).unwrap();
        prop_assert_eq!(x, y);
    }

    #[test]
    fn letter_swap_sign(b in blocks(7, 4)) {
        let w = BlockWord::new(b, true).unwrap();
        let n = w.degree();
        let x = bch_coefficient(&w, IntegerBackend::Auto).unwrap();
        let y = bch_coefficient(&w.swapped(), IntegerBackend::Auto).unwrap();
        let expected = if n % 2 == 1 { x } else { -x };
        prop_assert_eq!(y, expected);
    }

    #[test]
    fn fixed_widths_agree_in_range(s in letters(17)) {
        let w = BlockWord::parse(&s).unwrap();
        let big = bch_coefficient_with(&w, IntegerBackend::Arbitrary, &exact()).unwrap();
        prop_assert_eq!(bch_coefficient_with(&w, IntegerBackend::Fixed64, &exact()).unwrap(), big.clone());
        prop_assert_eq!(bch_coefficient_with(&w, IntegerBackend::Fixed128, &exact()).unwrap(), big);
    }

    #[test]
    fn fixed128_agrees_up_to_thirty(b in proptest::collection::vec(1u32..=6, 1..=12)) {
        let n: u32 = b.iter().sum();
        prop_assume!((18..=30).contains(&n));
        let w = BlockWord::new(b, true).unwrap();
        let big = bch_coefficient_with(&w, IntegerBackend::Arbitrary, &exact()).unwrap();
        prop_assert_eq!(bch_coefficient_with(&w, IntegerBackend::Fixed128, &exact()).unwrap(), big);
    }

    #[test]
    fn scaled_working_denominator(s in letters(16), mult in 2u32..=5) {
        let w = BlockWord::parse(&s).unwrap();
        let base = bch_coefficient_with(&w, IntegerBackend::Arbitrary, &exact()).unwrap();
        let opts = EvalOptions { denominator_multiplier: mult, ..exact() };
        prop_assert_eq!(bch_coefficient_with(&w, IntegerBackend::Arbitrary, &opts).unwrap(), base);
    }

    #[test]
    fn denominator_divides_common(s in letters(24)) {
        let w = BlockWord::parse(&s).unwrap();
        let h = bch_coefficient(&w, IntegerBackend::Auto).unwrap();
        let d = BigInt::from(common_denominator(w.degree()));
        prop_assert!(d.mod_floor(h.denom()).is_zero());
    }

    #[test]
    fn workspace_diagonal_and_upper_part(s in letters(16)) {
        let w = BlockWord::parse(&s).unwrap();
        let (c, d) = coefficient_matrix::<i64>(&w, &exact()).unwrap();
        let n = c.degree();
        for l in 1..=n {
            prop_assert_eq!(*c.get(l, l), d);
            prop_assert!(c.column(l)[l..].iter().all(|&x| x == 0));
        }
    }

    #[test]
    fn commutator_expansion_shape(s in letters(12)) {
        let e = expand_iterated_commutator(&s).unwrap();
        let n = s.len();
        let total: i64 = e.terms().map(|(_, c)| c).sum();
        if n >= 2 {
            prop_assert_eq!(total, 0);
        }
        let chars: Vec<char> = s.chars().collect();
        let vanishes = n >= 2 && chars[n - 1] == chars[n - 2];
        prop_assert_eq!(e.is_zero(), vanishes);
        // Dynkin-Specht-Wever: sum_u coeff(u, [w]) [u] = n [w].
        let mut again: BTreeMap<u64, i64> = BTreeMap::new();
        for (u, c) in e.terms() {
            let inner = expand_iterated_commutator(&mask_to_string(u, n as u32)).unwrap();
            for (v, d) in inner.terms() {
                *again.entry(v).or_default() += c * d;
            }
        }
        again.retain(|_, c| *c != 0);
        let scaled: BTreeMap<u64, i64> = e.terms().map(|(u, c)| (u, c * n as i64)).collect();
        prop_assert_eq!(again, scaled);
    }
}

/// Partition numbers by the standard `p(n, k)` recurrence.
fn partition_numbers(max_n: usize) -> Vec<u64> {
    let mut ways = vec![0u64; max_n + 1];
    ways[0] = 1;
    for part in 1..=max_n {
        for total in part..=max_n {
            ways[total] += ways[total - part];
        }
    }
    ways
}

#[test]
fn partition_enumeration_matches_counts() {
    let p = partition_numbers(30);
    let all = partitions_up_to(30);
    for n in 1..=30u32 {
        let of_n: Vec<&Partition> = all.iter().filter(|q| q.n() == n).collect();
        assert_eq!(of_n.len() as u64, p[n as usize], "p({n})");
        assert!(of_n.windows(2).all(|w| w[0].parts() > w[1].parts()), "order within {n}");
        assert!(of_n.iter().all(|q| q.parts().windows(2).all(|x| x[0] >= x[1])));
    }
    assert!(all.windows(2).all(|w| w[0].n() <= w[1].n()));
}

#[test]
fn fixed64_covers_its_stated_range() {
    let limit = IntegerBackend::Fixed64.max_degree().unwrap();
    let table = coefficient_table_with(limit, IntegerBackend::Fixed64, &exact(), 1).unwrap();
    let reference = coefficient_table_with(limit, IntegerBackend::Arbitrary, &exact(), 1).unwrap();
    assert_eq!(table.entries(), reference.entries());
}
