//! Subset enumeration over index bitmasks.
//!
//! Subsets are always enumerated in increasing bitmask order so every sum
//! over subsets accumulates in a deterministic, reproducible order.

/// All `k`-element subsets of `{0, .., n-1}` as bitmasks, ascending.
///
/// Uses Gosper's hack to step to the next mask with the same popcount.
pub fn k_subsets(n: usize, k: usize) -> Vec<u64> {
    assert!(n < 64, "index range too large for a u64 bitmask");
    if k > n {
        return Vec::new();
    }
    if k == 0 {
        return vec![0];
    }
    let limit = 1u64 << n;
    let mut masks = Vec::new();
    let mut mask = (1u64 << k) - 1;
    while mask < limit {
        masks.push(mask);
        let c = mask & mask.wrapping_neg();
        let r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
    }
    masks
}

/// Split `items` into (selected, complement) according to a bitmask.
pub fn split_by_mask<T: Clone>(items: &[T], mask: u64) -> (Vec<T>, Vec<T>) {
    let mut selected = Vec::with_capacity(mask.count_ones() as usize);
    let mut rest = Vec::with_capacity(items.len() - mask.count_ones() as usize);
    for (i, item) in items.iter().enumerate() {
        if mask >> i & 1 == 1 {
            selected.push(item.clone());
        } else {
            rest.push(item.clone());
        }
    }
    (selected, rest)
}

/// Elements of `items` selected by a bitmask.
pub fn select_by_mask<T: Clone>(items: &[T], mask: u64) -> Vec<T> {
    items
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, item)| item.clone())
        .collect()
}

/// Complement of `mask` inside an `n`-element index range.
pub fn complement_mask(mask: u64, n: usize) -> u64 {
    !mask & ((1u64 << n) - 1)
}
