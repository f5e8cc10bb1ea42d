/// Every nonempty antichain of the poset on `0..size` whose strict
/// comparability is `comparable(a, b)` (symmetric, false on `a == a`).
///
/// Antichains are ascending index lists, ordered by size and then
/// lexicographically.
pub(crate) fn antichains(size: usize, comparable: impl Fn(usize, usize) -> bool) -> Vec<Vec<usize>> {
    fn extend(
        start: usize,
        size: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
        comparable: &dyn Fn(usize, usize) -> bool,
    ) {
        for e in start..size {
            if current.iter().all(|&c| !comparable(c, e)) {
                current.push(e);
                out.push(current.clone());
                extend(e + 1, size, current, out, comparable);
                current.pop();
            }
        }
    }

    let mut out = Vec::new();
    extend(0, size, &mut Vec::new(), &mut out, &comparable);
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

#[cfg(test)]
mod tests {
    use super::antichains;

    #[test]
    fn chain_and_antichain() {
        assert_eq!(antichains(3, |_, _| true), vec![vec![0], vec![1], vec![2]]);
        assert_eq!(antichains(3, |_, _| false).len(), 7);
        assert!(antichains(0, |_, _| false).is_empty());
    }
}
