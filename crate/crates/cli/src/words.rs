use fockspace::Word;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Every word over 1..=n of length at most `max_len`, shortest first.
pub fn words_up_to(n: usize, max_len: usize) -> Vec<Word> {
    let mut all = vec![Vec::new()];
    let mut layer: Vec<Word> = vec![Vec::new()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w| (1..=n as u8).map(move |l| [w.as_slice(), &[l]].concat()))
            .collect();
        all.extend(layer.iter().cloned());
    }
    all
}

/// Sorted contents (multisets of letters) of size d over 1..=n.
pub fn contents(n: usize, d: usize) -> Vec<Word> {
    if d == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for smaller in contents(n, d - 1) {
        let start = smaller.last().copied().unwrap_or(1);
        for a in start..=n as u8 {
            let mut c = smaller.clone();
            c.push(a);
            out.push(c);
        }
    }
    out
}

/// `count` words of length at most `max_len`, drawn from a ChaCha stream
/// seeded with `seed`.
pub fn sample_words(n: usize, max_len: usize, count: usize, seed: u64) -> Vec<Word> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let len = rng.random_range(0..=max_len);
            (0..len).map(|_| rng.random_range(1..=n as u8)).collect()
        })
        .collect()
}
