//! Permutations of `{0, …, n−1}` as image vectors: `p[i]` is the image of `i`.

pub type Perm = Vec<usize>;

pub fn identity(n: usize) -> Perm {
    (0..n).collect()
}

/// `a ∘ b`: apply `b`, then `a`.
pub fn compose(a: &[usize], b: &[usize]) -> Perm {
    b.iter().map(|&i| a[i]).collect()
}

pub fn inverse(p: &[usize]) -> Perm {
    let mut inv = vec![0; p.len()];
    for (i, &j) in p.iter().enumerate() {
        inv[j] = i;
    }
    inv
}

pub fn is_permutation(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    p.iter().all(|&j| j < p.len() && !std::mem::replace(&mut seen[j], true))
}

/// All permutations of `n` in lexicographic order of their image vectors.
pub fn all(n: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn rec(n: usize, current: &mut Perm, used: &mut [bool], out: &mut Vec<Perm>) {
        if current.len() == n {
            out.push(current.clone());
            return;
        }
        for j in 0..n {
            if !used[j] {
                used[j] = true;
                current.push(j);
                rec(n, current, used, out);
                current.pop();
                used[j] = false;
            }
        }
    }
    rec(n, &mut current, &mut used, &mut out);
    out
}

/// Extends a permutation of `{0, …, k−1}` to `n ≥ k` points by fixing the rest.
pub fn extend(p: &[usize], n: usize) -> Perm {
    p.iter().copied().chain(p.len()..n).collect()
}
