use symbases::{
    brute_force_cover, cover, enumerate_all, enumerate_symmetric, search_extremal, Basis64,
};

// Plain enumeration of every basis under the ceiling, scored by brute force.
fn oracle(h: u32, k: usize, ceiling: u64) -> (u64, Vec<String>) {
    let mut best = 0;
    let mut witnesses = Vec::new();
    for b in enumerate_all::<u64>(k, ceiling) {
        let n = brute_force_cover(&b, h).unwrap();
        if n > best {
            best = n;
            witnesses.clear();
        }
        if n == best {
            witnesses.push(b.to_string());
        }
    }
    (best, witnesses)
}

fn texts(bases: &[Basis64]) -> Vec<String> {
    bases.iter().map(|b| b.to_string()).collect()
}

#[test]
fn matches_unpruned_oracle() {
    for (h, k) in [(1, 3), (2, 2), (2, 3), (3, 2), (3, 3), (2, 4), (4, 3)] {
        let r = search_extremal::<u64>(h, k, None).unwrap();
        // Oracle searches well past the derived ceiling.
        let (n, w) = oracle(h, k, 2 * r.ak_ceiling + 4);
        assert_eq!(r.n_star, n, "h {h} k {k}");
        assert_eq!(texts(&r.witnesses), w, "h {h} k {k}");
    }
}

#[test]
fn three_stamps_three_denominations() {
    let r = search_extremal::<u64>(3, 3, None).unwrap();
    assert_eq!(r.n_star, 15);
    assert_eq!(texts(&r.witnesses), ["1,4,5"]);
}

#[test]
fn witnesses_attain_n_star_and_beat_symmetric() {
    let r = search_extremal::<u64>(3, 4, None).unwrap();
    for w in &r.witnesses {
        assert_eq!(cover(w, 3).unwrap(), r.n_star);
    }
    assert!(r.n_star <= 3 * r.ak_ceiling);
    for s in enumerate_symmetric::<u64>(4, r.ak_ceiling) {
        assert!(cover(&s, 3).unwrap() <= r.n_star);
    }
}

#[test]
fn explicit_ceiling_restricts_space() {
    let r = search_extremal::<u64>(2, 2, Some(8)).unwrap();
    assert_eq!(r.n_star, 4);
    assert_eq!(texts(&r.witnesses), ["1,2", "1,3"]);
}
