use std::fmt;
use std::str::FromStr;

use super::perm::{self, Perm};
use crate::error::{Error, Result};

/// A Brauer diagram on `n` strands.
///
/// Vertices `0..n` are the top row and `n..2n` the bottom row, both left to
/// right. `matching[v]` is the partner of `v`. A product `a·b` places `a`
/// above `b`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BrauerDiagram {
    n: usize,
    matching: Vec<usize>,
}

impl BrauerDiagram {
    pub fn from_matching(matching: Vec<usize>) -> Result<Self> {
        if matching.len() % 2 == 1 {
            return Err(Error::InvalidDiagram(format!("odd number of vertices ({})", matching.len())));
        }
        let m = matching.len();
        for (v, &w) in matching.iter().enumerate() {
            if w >= m || w == v || matching[w] != v {
                return Err(Error::InvalidDiagram(format!("vertex {v} is not properly paired")));
            }
        }
        Ok(BrauerDiagram { n: m / 2, matching })
    }

    pub fn identity(n: usize) -> Self {
        Self::from_permutation(&perm::identity(n))
    }

    /// The diagram joining bottom vertex `i` to top vertex `p(i)`, so that
    /// `from_permutation(a)·from_permutation(b) = from_permutation(a ∘ b)`.
    pub fn from_permutation(p: &[usize]) -> Self {
        debug_assert!(perm::is_permutation(p));
        let n = p.len();
        let mut matching = vec![0; 2 * n];
        for (i, &j) in p.iter().enumerate() {
            matching[n + i] = j;
            matching[j] = n + i;
        }
        BrauerDiagram { n, matching }
    }

    fn check_generator_index(j: usize, n: usize) -> Result<()> {
        if j == 0 || j >= n {
            return Err(Error::IndexOutOfRange(format!("generator index {j} needs 1 ≤ j ≤ {}", n.saturating_sub(1))));
        }
        Ok(())
    }

    /// The transposition `s_j` of strands `j` and `j+1` (1-based).
    pub fn s(j: usize, n: usize) -> Result<Self> {
        Self::check_generator_index(j, n)?;
        let mut p = perm::identity(n);
        p.swap(j - 1, j);
        Ok(Self::from_permutation(&p))
    }

    /// `e_j`: caps joining strands `j` and `j+1` on both rows (1-based).
    pub fn e(j: usize, n: usize) -> Result<Self> {
        Self::check_generator_index(j, n)?;
        let mut d = Self::identity(n);
        d.pair(j - 1, j);
        d.pair(n + j - 1, n + j);
        Ok(d)
    }

    fn pair(&mut self, a: usize, b: usize) {
        self.matching[a] = b;
        self.matching[b] = a;
    }

    /// `e_{ℓ+1} e_{ℓ+3} ⋯ e_{n−1}` with `ℓ = n − 2s`: caps on the rightmost
    /// `2s` strands.
    pub fn ex(n: usize, s: usize) -> Result<Self> {
        if 2 * s > n {
            return Err(Error::IndexOutOfRange(format!("need 2s ≤ n (got n = {n}, s = {s})")));
        }
        let mut d = Self::identity(n);
        for k in (n - 2 * s..n).step_by(2) {
            d.pair(k, k + 1);
            d.pair(n + k, n + k + 1);
        }
        Ok(d)
    }

    /// `e_1 e_3 ⋯ e_{2s−1}`: caps on the leftmost `2s` strands.
    pub fn ex_left(n: usize, s: usize) -> Result<Self> {
        if 2 * s > n {
            return Err(Error::IndexOutOfRange(format!("need 2s ≤ n (got n = {n}, s = {s})")));
        }
        let mut d = Self::identity(n);
        for k in (0..2 * s).step_by(2) {
            d.pair(k, k + 1);
            d.pair(n + k, n + k + 1);
        }
        Ok(d)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn matching(&self) -> &[usize] {
        &self.matching
    }

    pub fn partner(&self, v: usize) -> usize {
        self.matching[v]
    }

    pub fn is_top(&self, v: usize) -> bool {
        v < self.n
    }

    pub fn through_strands(&self) -> usize {
        (0..self.n).filter(|&v| self.matching[v] >= self.n).count()
    }

    /// Number of caps in the top row (equal to the number in the bottom row).
    pub fn caps(&self) -> usize {
        (self.n - self.through_strands()) / 2
    }

    pub fn as_permutation(&self) -> Option<Perm> {
        (0..self.n)
            .map(|i| {
                let t = self.matching[self.n + i];
                (t < self.n).then_some(t)
            })
            .collect()
    }

    /// Stacks `self` over `other`. Returns the diagram and the number of
    /// closed loops removed.
    pub fn compose(&self, other: &BrauerDiagram) -> Result<(BrauerDiagram, usize)> {
        let n = self.n;
        if other.n != n {
            return Err(Error::StrandCountMismatch(n, other.n));
        }
        let (a, b) = (&self.matching, &other.matching);
        let mut out = vec![usize::MAX; 2 * n];
        let mut middle_seen = vec![false; n];
        for start in 0..2 * n {
            if out[start] != usize::MAX {
                continue;
            }
            // Walk from an outer vertex; `in_a` says which diagram we are in.
            let (mut in_a, mut v) = (start < n, start);
            let end = loop {
                if in_a {
                    let w = a[v];
                    if w < n {
                        break w;
                    }
                    middle_seen[w - n] = true;
                    in_a = false;
                    v = w - n;
                } else {
                    let w = b[v];
                    if w >= n {
                        break w;
                    }
                    middle_seen[w] = true;
                    in_a = true;
                    v = n + w;
                }
            };
            out[start] = end;
            out[end] = start;
        }
        let mut loops = 0;
        for k in 0..n {
            if middle_seen[k] {
                continue;
            }
            loops += 1;
            let mut cur = k;
            loop {
                middle_seen[cur] = true;
                let across = b[cur];
                middle_seen[across] = true;
                cur = a[n + across] - n;
                if cur == k {
                    break;
                }
            }
        }
        Ok((BrauerDiagram { n, matching: out }, loops))
    }

    /// Reflection in a horizontal axis.
    pub fn involute(&self) -> BrauerDiagram {
        let n = self.n;
        let flip = |v: usize| if v < n { v + n } else { v - n };
        let matching = (0..2 * n).map(|v| flip(self.matching[flip(v)])).collect();
        BrauerDiagram { n, matching }
    }

    /// Adds a vertical strand on the right.
    pub fn embed(&self) -> BrauerDiagram {
        self.embed_to(self.n + 1)
    }

    /// Adds vertical strands on the right up to `m ≥ n` strands.
    pub fn embed_to(&self, m: usize) -> BrauerDiagram {
        let n = self.n;
        assert!(m >= n, "cannot embed {n} strands into {m}");
        let lift = |v: usize| if v < n { v } else { v - n + m };
        let mut matching = vec![0; 2 * m];
        for v in 0..2 * n {
            matching[lift(v)] = lift(self.matching[v]);
        }
        for i in n..m {
            matching[i] = m + i;
            matching[m + i] = i;
        }
        BrauerDiagram { n: m, matching }
    }

    /// Joins the rightmost top and bottom vertices. Returns the diagram on
    /// `n − 1` strands and the number of loops closed (0 or 1).
    pub fn closure(&self) -> Result<(BrauerDiagram, usize)> {
        let n = self.n;
        if n == 0 {
            return Err(Error::IndexOutOfRange("closure needs at least one strand".into()));
        }
        let (top, bottom) = (n - 1, 2 * n - 1);
        let follow = |v: usize| {
            let w = self.matching[v];
            if w == top {
                self.matching[bottom]
            } else if w == bottom {
                self.matching[top]
            } else {
                w
            }
        };
        let shrink = |v: usize| if v < n - 1 { v } else { v - 1 };
        let mut matching = vec![0; 2 * (n - 1)];
        for v in (0..2 * n).filter(|&v| v != top && v != bottom) {
            matching[shrink(v)] = shrink(follow(v));
        }
        let loops = usize::from(self.matching[top] == bottom);
        Ok((BrauerDiagram { n: n - 1, matching }, loops))
    }

    /// `c − n` where `c` counts the loops of the full closure; the Markov
    /// trace of the diagram is `δ^(c−n)`.
    pub fn trace_exponent(&self) -> i64 {
        let n = self.n;
        let mut seen = vec![false; 2 * n];
        let mut loops = 0i64;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            loops += 1;
            let mut v = start;
            loop {
                seen[v] = true;
                let w = self.matching[v];
                seen[w] = true;
                v = if w < n { w + n } else { w - n };
                if v == start {
                    break;
                }
            }
        }
        loops - n as i64
    }

    /// All `(2n−1)!!` diagrams on `n` strands, sorted.
    pub fn all(n: usize) -> Vec<BrauerDiagram> {
        let mut out = Vec::new();
        let mut matching = vec![usize::MAX; 2 * n];
        fn rec(matching: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            let Some(v) = matching.iter().position(|&w| w == usize::MAX) else {
                out.push(matching.clone());
                return;
            };
            for w in v + 1..matching.len() {
                if matching[w] == usize::MAX {
                    matching[v] = w;
                    matching[w] = v;
                    rec(matching, out);
                    matching[v] = usize::MAX;
                    matching[w] = usize::MAX;
                }
            }
        }
        let mut raw = Vec::new();
        rec(&mut matching, &mut raw);
        out.extend(raw.into_iter().map(|matching| BrauerDiagram { n, matching }));
        out.sort();
        out
    }

    fn label(&self, v: usize) -> String {
        if v < self.n {
            format!("t{}", v + 1)
        } else {
            format!("b{}", v - self.n + 1)
        }
    }
}

impl fmt::Debug for BrauerDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Pair-list notation, e.g. `[(t1,b2),(t2,b1)]`; each pair is listed once,
/// from its first vertex in the order `t1..tn, b1..bn`.
impl fmt::Display for BrauerDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pairs: Vec<String> = (0..2 * self.n)
            .filter(|&v| self.matching[v] > v)
            .map(|v| format!("({},{})", self.label(v), self.label(self.matching[v])))
            .collect();
        write!(f, "[{}]", pairs.join(","))
    }
}

impl FromStr for BrauerDiagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidDiagram(format!("cannot parse {s:?}"));
        let body: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let inner = body.strip_prefix('[').and_then(|b| b.strip_suffix(']')).ok_or_else(bad)?;
        let mut pairs = Vec::new();
        if !inner.is_empty() {
            for chunk in inner.split("),") {
                let chunk = chunk.trim_start_matches('(').trim_end_matches(')');
                let (x, y) = chunk.split_once(',').ok_or_else(bad)?;
                pairs.push((parse_vertex(x).ok_or_else(bad)?, parse_vertex(y).ok_or_else(bad)?));
            }
        }
        let n = pairs.len();
        let mut matching = vec![usize::MAX; 2 * n];
        for &((xt, xi), (yt, yi)) in &pairs {
            if xi == 0 || yi == 0 || xi > n || yi > n {
                return Err(Error::InvalidDiagram(format!("vertex index out of range in {s:?}")));
            }
            let x = if xt { xi - 1 } else { n + xi - 1 };
            let y = if yt { yi - 1 } else { n + yi - 1 };
            if x == y || matching[x] != usize::MAX || matching[y] != usize::MAX {
                return Err(Error::InvalidDiagram(format!("vertex used twice in {s:?}")));
            }
            matching[x] = y;
            matching[y] = x;
        }
        BrauerDiagram::from_matching(matching)
    }
}

fn parse_vertex(s: &str) -> Option<(bool, usize)> {
    let (top, rest) = if let Some(r) = s.strip_prefix('t') { (true, r) } else { (false, s.strip_prefix('b')?) };
    Some((top, rest.parse().ok()?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(j: usize, n: usize) -> BrauerDiagram {
        BrauerDiagram::e(j, n).unwrap()
    }
    fn s(j: usize, n: usize) -> BrauerDiagram {
        BrauerDiagram::s(j, n).unwrap()
    }

    #[test]
    fn compositions_in_br2() {
        assert_eq!(e(1, 2).compose(&e(1, 2)).unwrap(), (e(1, 2), 1));
        assert_eq!(s(1, 2).compose(&s(1, 2)).unwrap(), (BrauerDiagram::identity(2), 0));
        assert_eq!(e(1, 2).compose(&s(1, 2)).unwrap(), (e(1, 2), 0));
        assert_eq!(
            BrauerDiagram::identity(2).compose(&BrauerDiagram::identity(3)),
            Err(Error::StrandCountMismatch(2, 3))
        );
    }

    #[test]
    fn permutation_diagrams_compose_like_functions() {
        let perms = perm::all(4);
        for a in perms.iter().step_by(3) {
            for b in perms.iter().step_by(5) {
                let (c, loops) =
                    BrauerDiagram::from_permutation(a).compose(&BrauerDiagram::from_permutation(b)).unwrap();
                assert_eq!(loops, 0);
                assert_eq!(c, BrauerDiagram::from_permutation(&perm::compose(a, b)));
                assert_eq!(c.as_permutation().unwrap(), perm::compose(a, b));
            }
        }
    }

    #[test]
    fn ex_products() {
        assert_eq!(BrauerDiagram::ex(2, 1).unwrap(), e(1, 2));
        assert_eq!(BrauerDiagram::ex(4, 2).unwrap(), e(1, 4).compose(&e(3, 4)).unwrap().0);
        assert_eq!(e(1, 4).compose(&e(3, 4)).unwrap().1, 0);
        assert_eq!(BrauerDiagram::ex(5, 1).unwrap(), e(4, 5));
        assert_eq!(BrauerDiagram::ex(3, 0).unwrap(), BrauerDiagram::identity(3));
        assert_eq!(BrauerDiagram::ex_left(5, 2).unwrap(), e(1, 5).compose(&e(3, 5)).unwrap().0);
        assert!(BrauerDiagram::ex(3, 2).is_err());
        assert!(BrauerDiagram::e(3, 3).is_err());
        assert!(BrauerDiagram::s(0, 3).is_err());
    }

    #[test]
    fn involution_and_embedding() {
        assert_eq!(e(1, 2).involute(), e(1, 2));
        assert_eq!(s(1, 2).involute(), s(1, 2));
        let (es, _) = e(1, 3).compose(&s(2, 3)).unwrap();
        let (se, _) = s(2, 3).compose(&e(1, 3)).unwrap();
        assert_eq!(es.involute(), se);
        assert_eq!(BrauerDiagram::identity(2).embed(), BrauerDiagram::identity(3));
        assert_eq!(e(1, 2).embed(), e(1, 3));
        for d in BrauerDiagram::all(3) {
            assert_eq!(d.involute().involute(), d);
            assert_eq!(d.embed().involute(), d.involute().embed());
        }
    }

    #[test]
    fn closures_and_traces() {
        assert_eq!(BrauerDiagram::identity(2).closure().unwrap(), (BrauerDiagram::identity(1), 1));
        assert_eq!(e(1, 2).closure().unwrap(), (BrauerDiagram::identity(1), 0));
        assert_eq!(s(1, 2).closure().unwrap(), (BrauerDiagram::identity(1), 0));
        assert_eq!(BrauerDiagram::identity(4).trace_exponent(), 0);
        assert_eq!(e(1, 2).trace_exponent(), -1);
        assert_eq!(s(1, 2).trace_exponent(), -1);
        for d in BrauerDiagram::all(3) {
            assert_eq!(d.embed().closure().unwrap(), (d.clone(), 1));
        }
    }

    #[test]
    fn enumeration_counts() {
        let counts: Vec<usize> = (0..=5).map(|n| BrauerDiagram::all(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 3, 15, 105, 945]);
        let through: Vec<usize> = BrauerDiagram::all(4).iter().map(|d| d.through_strands()).collect();
        assert!(through.iter().all(|t| t % 2 == 0));
    }

    #[test]
    fn notation_round_trip() {
        let d: BrauerDiagram = "[(t1,b3),(t2,t3),(b1,b2)]".parse().unwrap();
        assert_eq!(d.n(), 3);
        assert_eq!(d.through_strands(), 1);
        assert_eq!(d.to_string(), "[(t1,b3),(t2,t3),(b1,b2)]");
        for d in BrauerDiagram::all(3) {
            assert_eq!(d.to_string().parse::<BrauerDiagram>().unwrap(), d);
        }
        assert_eq!("[]".parse::<BrauerDiagram>().unwrap(), BrauerDiagram::identity(0));
        assert!("[(t1,t1)]".parse::<BrauerDiagram>().is_err());
        assert!("[(t1,b3)]".parse::<BrauerDiagram>().is_err());
        assert!("(t1,b1)".parse::<BrauerDiagram>().is_err());
    }
}
