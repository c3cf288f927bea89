mod common;

use std::collections::HashMap;

use entc::arith::{self, exact};
use entc::huffman::{self, HuffmanCodebook, HuffmanTree};
use entc::pipeline::{self, fdct, idct, ImagePlane, QuantTable};
use entc::{FrequencyTable, ProbabilityModel};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::Rng;

use common::*;

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

#[test]
fn huffman_three_leaf_depths_match_brute_force() {
    let t = FrequencyTable::from_counts([(1, 1), (2, 1), (3, 2)]).unwrap();
    let book = HuffmanCodebook::from_table(&t);
    assert_eq!(book.weighted_length(&t), brute_force_min_cost(&[1, 1, 2]));
    assert_eq!(brute_force_min_cost(&[1, 1, 2]), 6);
}

#[test]
fn huffman_random_stream_length_is_sum_of_codes() {
    let mut r = rng(11);
    let alphabet = random_alphabet(&mut r, 40, 50);
    let msg = sample(&mut r, &alphabet, 1000);
    let t = FrequencyTable::build(&msg).unwrap();
    let book = HuffmanCodebook::from_table(&t);
    let expect: u64 = msg.iter().map(|&s| book.code(s).unwrap().len as u64).sum();
    assert_eq!(huffman::encode(&msg, &book).unwrap().bit_len(), expect);
}

#[test]
fn huffman_decode_truncated_after_first_symbol() {
    let t = FrequencyTable::from_counts([(0, 100), (2, 10), (14, 9), (136, 7), (222, 5)]).unwrap();
    let tree = HuffmanTree::build(&t);
    let bits = entc::bitio::BitSequence::from_str_bits("10");
    assert!(matches!(huffman::decode(&bits, &tree, 2), Err(entc::Error::TruncatedStream)));
}

#[test]
fn select_codeword_matches_brute_force() {
    let mut r = rng(5);
    let cases = [(q(63, 100), q(74, 100)), (q(0, 1), q(1, 2)), (q(0, 1), q(1, 1)), (q(1, 3), q(2, 3))];
    for (lo, hi) in cases {
        let iv = exact::CoderInterval::new(lo.clone(), hi.clone()).unwrap();
        assert_eq!(
            Some(exact::select_codeword(&iv).to_string()),
            brute_force_codeword(&lo, &hi, 20)
        );
    }
    assert_eq!(brute_force_codeword(&q(63, 100), &q(74, 100), 10).unwrap(), "10101");
    // "10110" covers [0.6875, 0.71875): also inside, same length, larger value
    let alt = BigRational::new(22.into(), 32.into());
    assert!(alt >= q(63, 100) && alt + q(1, 32) <= q(74, 100));
    for _ in 0..300 {
        let d: i64 = r.random_range(2..2000);
        let a: i64 = r.random_range(0..d);
        let b: i64 = r.random_range(a + 1..=d);
        let iv = exact::CoderInterval::new(q(a, d), q(b, d)).unwrap();
        assert_eq!(
            Some(exact::select_codeword(&iv).to_string()),
            brute_force_codeword(&q(a, d), &q(b, d), 16),
            "[{a}/{d}, {b}/{d})"
        );
    }
}

#[test]
fn exact_coder_disjoint_for_distinct_messages() {
    let t = FrequencyTable::from_counts([(1, 3), (2, 2), (3, 1)]).unwrap();
    let m = ProbabilityModel::from_table(&t);
    // all 3^4 messages of length 4
    let mut intervals = Vec::new();
    for n in 0..81u32 {
        let msg: Vec<u16> = (0..4).map(|i| (n / 3u32.pow(i) % 3 + 1) as u16).collect();
        intervals.push(exact::encode_exact(&msg, &m).unwrap());
    }
    let mut total = BigRational::zero();
    for (i, a) in intervals.iter().enumerate() {
        total += a.range();
        for b in &intervals[i + 1..] {
            assert!(a.high() <= b.low() || b.high() <= a.low());
        }
    }
    assert_eq!(total, BigRational::one());
}

/// The window floors each bound to a grid of `2^-31` at the current zoom,
/// so after `n` symbols the coded interval sits within `3n * 2^-31` of the
/// exact one (low error grows by at most one grid unit plus the width
/// error per step; width error by at most two units).
#[test]
fn integer_output_tracks_exact_interval() {
    let mut r = rng(21);
    let mut strict = 0;
    for _ in 0..1000 {
        let k = r.random_range(1..=16);
        let alphabet = random_alphabet(&mut r, k, 20);
        let len = r.random_range(0..=16);
        let msg = sample(&mut r, &alphabet, len);
        let t = FrequencyTable::from_counts(alphabet.iter().copied()).unwrap();
        let m = ProbabilityModel::from_table(&t);
        let iv = exact::encode_exact(&msg, &m).unwrap();
        let bits = arith::encode(&msg, &m).unwrap();
        let v = exact::bits_to_fraction(&bits);
        let tol = BigRational::new(
            BigInt::from(3 * (len as i64 + 1)),
            BigInt::one() << arith::integer::WINDOW_PRECISION_BITS,
        );
        assert!(iv.low() - &tol <= v && v < iv.high() + &tol, "msg {msg:?}");
        strict += (iv.low() <= &v && &v < iv.high()) as usize;
    }
    // short, high-probability messages land strictly inside
    assert!(strict > 500, "only {strict} of 1000 strictly inside");
}

#[test]
fn integer_output_inside_exact_interval_for_short_messages() {
    // information content far below the window precision
    let t = FrequencyTable::from_counts([(0, 63), (2, 11), (14, 10), (136, 10), (222, 6)]).unwrap();
    let m = ProbabilityModel::from_table(&t);
    for msg in [vec![], vec![0], vec![2, 0, 0, 136, 0], vec![222, 222], vec![14, 136, 2]] {
        let iv = exact::encode_exact(&msg, &m).unwrap();
        let v = exact::bits_to_fraction(&arith::encode(&msg, &m).unwrap());
        assert!(iv.low() <= &v && &v < iv.high(), "msg {msg:?}");
    }
}

#[test]
fn dct_orthonormal_on_random_blocks() {
    let mut r = rng(3);
    for _ in 0..100 {
        let b: pipeline::Block = std::array::from_fn(|_| r.random_range(-128.0..128.0));
        let back = idct(&fdct(&b));
        let err = b.iter().zip(&back).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max);
        assert!(err < 1e-9);
        // Parseval
        let e1: f64 = b.iter().map(|x| x * x).sum();
        let e2: f64 = fdct(&b).iter().map(|x| x * x).sum();
        assert!((e1 - e2).abs() < 1e-6 * e1.max(1.0));
    }
}

#[test]
fn smooth_blocks_compact_energy() {
    let table = QuantTable::default();
    let mut r = rng(8);
    for _ in 0..50 {
        let (gx, gy, base): (f64, f64, f64) =
            (r.random_range(-6.0..6.0), r.random_range(-6.0..6.0), r.random_range(60.0..190.0));
        let plane = ImagePlane::from_fn(8, 8, |x, y| (base + gx * x as f64 + gy * y as f64) as u8);
        let blocks = pipeline::quantized_blocks(&plane, &table);
        let zeros = blocks[0][1..].iter().filter(|&&v| v == 0).count();
        assert!(zeros * 2 >= 63, "only {zeros} of 63 AC coefficients are zero");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn huffman_prefix_free_kraft_monotone(counts in prop::collection::vec(1u64..500, 2..60)) {
        let t = FrequencyTable::from_counts(counts.iter().enumerate().map(|(i, &c)| (i as u16 * 3, c))).unwrap();
        let book = HuffmanCodebook::from_table(&t);
        let codes: Vec<_> = book.iter().collect();
        for (i, (_, a)) in codes.iter().enumerate() {
            for (_, b) in &codes[i + 1..] {
                prop_assert!(!a.is_prefix_of(b) && !b.is_prefix_of(a));
            }
        }
        let kraft: BigRational = codes
            .iter()
            .map(|(_, c)| BigRational::new(BigInt::one(), BigInt::one() << c.len))
            .sum();
        prop_assert_eq!(kraft, BigRational::one());
        for (s1, c1) in &codes {
            for (s2, c2) in &codes {
                if t.count(*s1).unwrap() > t.count(*s2).unwrap() {
                    prop_assert!(c1.len <= c2.len);
                }
            }
        }
    }

    #[test]
    fn huffman_tree_structure(counts in prop::collection::vec(1u64..100, 1..40)) {
        let t = FrequencyTable::from_counts(counts.iter().enumerate().map(|(i, &c)| (i as u16, c))).unwrap();
        let tree = HuffmanTree::build(&t);
        let mut leaves = Vec::new();
        for n in tree.nodes() {
            match *n {
                huffman::Node::Leaf { symbol, .. } => leaves.push(symbol),
                huffman::Node::Internal { zero, one, weight } => {
                    prop_assert_eq!(weight, tree.node(zero).weight() + tree.node(one).weight());
                }
            }
        }
        leaves.sort();
        prop_assert_eq!(leaves, (0..counts.len() as u16).collect::<Vec<_>>());
    }

    #[test]
    fn exact_coder_nesting_and_width(
        weights in prop::collection::vec(1u64..20, 2..16),
        picks in prop::collection::vec(any::<prop::sample::Index>(), 0..64),
    ) {
        let t = FrequencyTable::from_counts(weights.iter().enumerate().map(|(i, &c)| (i as u16, c))).unwrap();
        let m = ProbabilityModel::from_table(&t);
        let msg: Vec<u16> = picks.iter().map(|p| p.index(weights.len()) as u16).collect();
        let steps = exact::encode_exact_steps(&msg, &m).unwrap();
        for w in steps.windows(2) {
            prop_assert!(w[0].contains(&w[1]));
            prop_assert!(w[1].range() < w[0].range());
        }
        let total: u64 = weights.iter().sum();
        let width = msg.iter().fold(BigRational::one(), |acc, &s| {
            acc * BigRational::new(BigInt::from(weights[s as usize]), BigInt::from(total))
        });
        let last = steps.last().unwrap();
        prop_assert_eq!(last.range(), width);

        let code = exact::select_codeword(last);
        let v = exact::bits_to_fraction(&code);
        let step = BigRational::new(BigInt::one(), BigInt::one() << code.bit_len());
        prop_assert!(last.low() <= &v);
        prop_assert!(&(v + step) <= last.high());
        // |b| <= ceil(-log2 range) + 2: 2^(|b|-2) must be below 2/range
        let bound = (0u64..).find(|&l| BigRational::new(BigInt::one(), BigInt::one() << l) <= last.range()).unwrap();
        prop_assert!(code.bit_len() <= bound + 2);
    }

    #[test]
    fn arith_roundtrip_and_bound(
        weights in prop::collection::vec(1u64..1000, 1..64),
        picks in prop::collection::vec(any::<prop::sample::Index>(), 0..3000),
    ) {
        let msg: Vec<u16> = picks.iter().map(|p| 100 + p.index(weights.len()) as u16).collect();
        let t = FrequencyTable::from_counts(weights.iter().enumerate().map(|(i, &c)| (100 + i as u16, c))).unwrap();
        let m = ProbabilityModel::from_table(&t);
        let bits = arith::encode(&msg, &m).unwrap();
        prop_assert_eq!(arith::decode(&bits, &m, msg.len() as u64).unwrap(), msg.clone());
        let counts: HashMap<u16, u64> = t.iter().collect();
        let info = information_bits(&msg, &counts);
        prop_assert!(bits.bit_len() as f64 <= info.ceil() + 32.0);
    }

    #[test]
    fn huffman_roundtrip(msg in prop::collection::vec(any::<u16>(), 1..2000)) {
        let t = FrequencyTable::build(&msg).unwrap();
        let tree = HuffmanTree::build(&t);
        let book = HuffmanCodebook::from_tree(&tree);
        let bits = huffman::encode(&msg, &book).unwrap();
        prop_assert_eq!(huffman::decode(&bits, &tree, msg.len() as u64).unwrap(), msg);
    }
}
