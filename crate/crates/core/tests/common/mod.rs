#![allow(dead_code)]

use ars_core::Partition;

/// Every partition of `weight` with at most `max_len` parts, largest parts first.
pub fn partitions_of(weight: usize, max_len: usize) -> Vec<Partition> {
    fn go(left: usize, cap: usize, slots: usize, acc: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if left == 0 {
            out.push(Partition::new(acc.clone()).unwrap());
            return;
        }
        if slots == 0 {
            return;
        }
        for part in (1..=cap.min(left)).rev() {
            acc.push(part);
            go(left - part, part, slots - 1, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(weight, weight, max_len, &mut Vec::new(), &mut out);
    out
}

/// All pairs `(R, S)` of equal weight `1..=max_weight` with at most `max_len` parts each.
pub fn small_pairs(max_len: usize, max_weight: usize) -> Vec<(Partition, Partition)> {
    let mut out = Vec::new();
    for w in 1..=max_weight {
        let parts = partitions_of(w, max_len);
        for r in &parts {
            for s in &parts {
                out.push((r.clone(), s.clone()));
            }
        }
    }
    out
}

pub fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

pub fn counterexample() -> (Partition, Partition) {
    (
        p(&[6, 5, 4, 3, 3, 2, 2, 1, 1]),
        p(&[7, 3, 3, 2, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1]),
    )
}
