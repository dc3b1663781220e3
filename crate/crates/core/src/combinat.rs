//! Subset and composition enumeration used by the closed-form generators.

/// All nonempty subsets of `items` with at most `max_size` elements, ordered
/// by size and then lexicographically by position in `items`.
pub fn subsets_by_size(items: &[usize], max_size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for size in 1..=max_size.min(items.len()) {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            out.push(idx.iter().map(|&k| items[k]).collect());
            // advance to the next combination in lex order
            let Some(pos) = (0..size).rev().find(|&p| idx[p] != p + items.len() - size) else {
                break;
            };
            idx[pos] += 1;
            for q in pos + 1..size {
                idx[q] = idx[q - 1] + 1;
            }
        }
    }
    out
}

/// Weak compositions of `total` into `parts` non-negative parts, in colex
/// order (lexicographic on the reversed sequence).
pub fn weak_compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    if parts == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    let mut current = vec![0u32; parts];
    fill(total, parts - 1, &mut current, &mut out);
    out
}

// Fixes positions from the last one down, smallest value first, which yields colex order.
fn fill(remaining: u32, pos: usize, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if pos == 0 {
        current[0] = remaining;
        out.push(current.clone());
        return;
    }
    for v in 0..=remaining {
        current[pos] = v;
        fill(remaining - v, pos - 1, current, out);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binom(n: u64, k: u64) -> u64 {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn subsets_order_and_count() {
        assert_eq!(
            subsets_by_size(&[0, 2, 3], 3),
            vec![
                vec![0],
                vec![2],
                vec![3],
                vec![0, 2],
                vec![0, 3],
                vec![2, 3],
                vec![0, 2, 3]
            ]
        );
        assert_eq!(subsets_by_size(&[0, 1, 2, 3], 2).len(), 4 + 6);
        assert!(subsets_by_size(&[], 3).is_empty());
    }

    #[test]
    fn compositions_colex() {
        assert_eq!(
            weak_compositions(2, 2),
            vec![vec![2, 0], vec![1, 1], vec![0, 2]]
        );
        assert_eq!(weak_compositions(0, 3), vec![vec![0, 0, 0]]);
        assert_eq!(weak_compositions(3, 1), vec![vec![3]]);
        for (t, p) in [(5u32, 3usize), (7, 4), (0, 1), (4, 2)] {
            let all = weak_compositions(t, p);
            assert_eq!(
                all.len() as u64,
                binom(t as u64 + p as u64 - 1, p as u64 - 1)
            );
            assert!(all.iter().all(|c| c.iter().sum::<u32>() == t));
            let mut keys: Vec<Vec<u32>> = all
                .iter()
                .map(|c| c.iter().rev().copied().collect())
                .collect();
            let sorted = {
                let mut k = keys.clone();
                k.sort();
                k
            };
            assert_eq!(keys, sorted);
            keys.dedup();
            assert_eq!(keys.len(), all.len());
        }
    }
}
