use std::collections::HashMap;
use std::fmt::Debug;
use std::hash::Hash;
use std::path::Path;
use std::str::FromStr;

use num_bigint::BigInt;

use super::QhError;
use crate::ring::field::is_prime;

/// A group given by its operations. Elements are plain values with a
/// canonical equality and hash.
pub trait Group {
    type Elem: Clone + Eq + Hash + Ord + Debug;

    fn identity(&self) -> Self::Elem;
    fn op(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn render(&self, a: &Self::Elem) -> String;
    fn parse_elem(&self, text: &str) -> Result<Self::Elem, QhError>;
    fn describe(&self) -> String;

    /// `g^n` by repeated squaring; negative exponents invert first.
    fn pow(&self, g: &Self::Elem, n: i64) -> Self::Elem {
        let mut base = if n < 0 { self.inv(g) } else { g.clone() };
        let mut e = n.unsigned_abs();
        let mut acc = self.identity();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.op(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.op(&base, &base);
            }
        }
        acc
    }

    /// `g^(2^k)` by `k` squarings.
    fn pow_two_power(&self, g: &Self::Elem, k: u32) -> Self::Elem {
        (0..k).fold(g.clone(), |acc, _| self.op(&acc, &acc))
    }

    /// `[x, y] = x y x^-1 y^-1`.
    fn commutator(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        let xy = self.op(x, y);
        let yx = self.op(y, x);
        self.op(&xy, &self.inv(&yx))
    }

    fn commutes(&self, x: &Self::Elem, y: &Self::Elem) -> bool {
        self.op(x, y) == self.op(y, x)
    }
}

/// A group small enough to list.
pub trait FiniteGroup: Group {
    fn order(&self) -> u128;

    /// All elements, identity first, then in a fixed canonical order.
    fn elements(&self) -> Vec<Self::Elem>;

    fn order_of(&self, g: &Self::Elem) -> u64 {
        let id = self.identity();
        let mut acc = g.clone();
        let mut n = 1;
        while acc != id {
            acc = self.op(&acc, g);
            n += 1;
        }
        n
    }
}

/// `SL_2(F_p)` with elements `[a, b, c, d]` for `[[a,b],[c,d]]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sl2Fp {
    p: u64,
}

impl Sl2Fp {
    pub fn new(p: u64) -> Result<Self, QhError> {
        if !is_prime(p) || p >= 1 << 31 {
            return Err(QhError::BadGroupSpec(format!("SL2 needs a prime below 2^31, got {p}")));
        }
        Ok(Self { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn reduce(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }
}

impl Group for Sl2Fp {
    type Elem = [u64; 4];

    fn identity(&self) -> [u64; 4] {
        [1, 0, 0, 1]
    }

    fn op(&self, x: &[u64; 4], y: &[u64; 4]) -> [u64; 4] {
        let p = self.p;
        let m = |a: u64, b: u64, c: u64, d: u64| (a * b % p + c * d % p) % p;
        [
            m(x[0], y[0], x[1], y[2]),
            m(x[0], y[1], x[1], y[3]),
            m(x[2], y[0], x[3], y[2]),
            m(x[2], y[1], x[3], y[3]),
        ]
    }

    fn inv(&self, x: &[u64; 4]) -> [u64; 4] {
        let p = self.p;
        [x[3], (p - x[1]) % p, (p - x[2]) % p, x[0]]
    }

    fn render(&self, x: &[u64; 4]) -> String {
        format!("[[{},{}],[{},{}]]", x[0], x[1], x[2], x[3])
    }

    /// `I`, `-I`, `[[a,b],[c,d]]` or `a,b,c,d`; entries may be negative.
    fn parse_elem(&self, text: &str) -> Result<[u64; 4], QhError> {
        let t = text.trim();
        match t {
            "I" => return Ok(self.identity()),
            "-I" => return Ok([self.p - 1, 0, 0, self.p - 1]),
            _ => {}
        }
        let nums: Vec<i64> = t
            .split(|c: char| c == ',' || c == '[' || c == ']' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .map(|s| {
                s.parse::<i64>()
                    .map_err(|_| QhError::Parse(format!("bad entry `{s}` in `{t}`")))
            })
            .collect::<Result<_, _>>()?;
        if nums.len() != 4 {
            return Err(QhError::Parse(format!("expected 4 entries in `{t}`")));
        }
        let e = [
            self.reduce(nums[0]),
            self.reduce(nums[1]),
            self.reduce(nums[2]),
            self.reduce(nums[3]),
        ];
        let det = (e[0] * e[3] % self.p + self.p - e[1] * e[2] % self.p) % self.p;
        if det != 1 {
            return Err(QhError::Parse(format!("`{t}` has determinant {det}, not 1")));
        }
        Ok(e)
    }

    fn describe(&self) -> String {
        format!("SL2:F{}", self.p)
    }
}

impl FiniteGroup for Sl2Fp {
    fn order(&self) -> u128 {
        let p = self.p as u128;
        p * (p * p - 1)
    }

    fn elements(&self) -> Vec<[u64; 4]> {
        let p = self.p;
        let mut out = vec![self.identity()];
        for a in 0..p {
            for b in 0..p {
                for c in 0..p {
                    for d in 0..p {
                        let e = [a, b, c, d];
                        if (a * d % p + p - b * c % p) % p == 1 && e != [1, 0, 0, 1] {
                            out.push(e);
                        }
                    }
                }
            }
        }
        out
    }
}

/// The symmetric group on `{1..n}`, elements in one-line notation
/// (zero-based internally). Non-identity elements are listed in
/// lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Symmetric {
    n: usize,
}

impl Symmetric {
    pub fn new(n: usize) -> Result<Self, QhError> {
        if n == 0 || n > 20 {
            return Err(QhError::BadGroupSpec(format!(
                "symmetric degree must be in 1..=20, got {n}"
            )));
        }
        Ok(Self { n })
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    /// Render as disjoint cycles, `()` for the identity.
    pub fn cycles(&self, x: &[u8]) -> String {
        let mut seen = vec![false; self.n];
        let mut out = String::new();
        for start in 0..self.n {
            if seen[start] || x[start] as usize == start {
                continue;
            }
            let mut cyc = vec![start + 1];
            seen[start] = true;
            let mut j = x[start] as usize;
            while j != start {
                seen[j] = true;
                cyc.push(j + 1);
                j = x[j] as usize;
            }
            let parts: Vec<String> = cyc.iter().map(|v| v.to_string()).collect();
            out.push_str(&format!("({})", parts.join(" ")));
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }
}

impl Group for Symmetric {
    type Elem = Vec<u8>;

    fn identity(&self) -> Vec<u8> {
        (0..self.n as u8).collect()
    }

    /// `(x y)(i) = x(y(i))`.
    fn op(&self, x: &Vec<u8>, y: &Vec<u8>) -> Vec<u8> {
        y.iter().map(|&i| x[i as usize]).collect()
    }

    fn inv(&self, x: &Vec<u8>) -> Vec<u8> {
        let mut out = vec![0; self.n];
        for (i, &v) in x.iter().enumerate() {
            out[v as usize] = i as u8;
        }
        out
    }

    fn render(&self, x: &Vec<u8>) -> String {
        let parts: Vec<String> = x.iter().map(|v| (v + 1).to_string()).collect();
        format!("[{}]", parts.join(","))
    }

    /// Cycle notation such as `(1 2 3)(4 5)` or one-line `[2,3,1,4,5]`.
    fn parse_elem(&self, text: &str) -> Result<Vec<u8>, QhError> {
        let t = text.trim();
        let bad = |m: &str| QhError::Parse(format!("{m} in `{t}`"));
        let point = |s: &str| -> Result<usize, QhError> {
            let v: usize = s.parse().map_err(|_| bad("bad point"))?;
            if v == 0 || v > self.n {
                return Err(bad("point out of range"));
            }
            Ok(v - 1)
        };
        if let Some(inner) = t.strip_prefix('[').and_then(|s| s.strip_suffix(']')) {
            let vals: Vec<usize> = inner.split(',').map(|s| point(s.trim())).collect::<Result<_, _>>()?;
            let mut seen = vec![false; self.n];
            if vals.len() != self.n || vals.iter().any(|&v| std::mem::replace(&mut seen[v], true)) {
                return Err(bad("not a permutation"));
            }
            return Ok(vals.into_iter().map(|v| v as u8).collect());
        }
        let mut acc = self.identity();
        let mut rest = t;
        while !rest.is_empty() {
            let open = rest.strip_prefix('(').ok_or_else(|| bad("expected `(`"))?;
            let close = open.find(')').ok_or_else(|| bad("missing `)`"))?;
            let pts: Vec<usize> = open[..close]
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .map(point)
                .collect::<Result<_, _>>()?;
            let mut seen = vec![false; self.n];
            if pts.iter().any(|&a| std::mem::replace(&mut seen[a], true)) {
                return Err(bad("repeated point in cycle"));
            }
            let mut cyc = self.identity();
            for (k, &a) in pts.iter().enumerate() {
                cyc[a] = pts[(k + 1) % pts.len()] as u8;
            }
            acc = self.op(&acc, &cyc);
            rest = open[close + 1..].trim_start();
        }
        Ok(acc)
    }

    fn describe(&self) -> String {
        format!("symmetric:{}", self.n)
    }
}

impl FiniteGroup for Symmetric {
    fn order(&self) -> u128 {
        (1..=self.n as u128).product()
    }

    fn elements(&self) -> Vec<Vec<u8>> {
        let mut cur = self.identity();
        let mut out = vec![cur.clone()];
        // next lexicographic permutation
        loop {
            let Some(i) = (0..cur.len().saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
                return out;
            };
            let j = (i + 1..cur.len())
                .rev()
                .find(|&j| cur[j] > cur[i])
                .expect("successor exists");
            cur.swap(i, j);
            cur[i + 1..].reverse();
            out.push(cur.clone());
        }
    }
}

/// A group given by an explicit multiplication table on `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableGroup {
    table: Vec<Vec<usize>>,
    identity: usize,
    inverses: Vec<usize>,
}

impl TableGroup {
    /// Rows of the table; `table[i][j]` is the product `i * j`. Checks
    /// closure, identity, inverses and associativity.
    pub fn new(table: Vec<Vec<usize>>) -> Result<Self, QhError> {
        let n = table.len();
        let bad = |m: String| QhError::InvalidTable(m);
        if n == 0 || table.iter().any(|r| r.len() != n || r.iter().any(|&v| v >= n)) {
            return Err(bad("table must be square with entries in 0..n".into()));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or_else(|| bad("no two-sided identity".into()))?;
        let inverses = (0..n)
            .map(|x| {
                (0..n)
                    .find(|&y| table[x][y] == identity && table[y][x] == identity)
                    .ok_or_else(|| bad(format!("element {x} has no inverse")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        for a in 0..n {
            for b in 0..n {
                let ab = table[a][b];
                for c in 0..n {
                    if table[ab][c] != table[a][table[b][c]] {
                        return Err(bad(format!("not associative at ({a}, {b}, {c})")));
                    }
                }
            }
        }
        Ok(Self {
            table,
            identity,
            inverses,
        })
    }

    /// Whitespace-separated rows, one table row per line; `#` starts a comment.
    pub fn parse_table(text: &str) -> Result<Self, QhError> {
        let rows = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or(""))
            .filter(|l| !l.trim().is_empty())
            .map(|l| {
                l.split_whitespace()
                    .map(|s| {
                        s.parse::<usize>()
                            .map_err(|_| QhError::InvalidTable(format!("bad entry `{s}`")))
                    })
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(rows)
    }

    pub fn load(path: &Path) -> Result<Self, QhError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| QhError::BadGroupSpec(format!("cannot read {}: {e}", path.display())))?;
        Self::parse_table(&text)
    }

    pub fn size(&self) -> usize {
        self.table.len()
    }
}

impl Group for TableGroup {
    type Elem = usize;

    fn identity(&self) -> usize {
        self.identity
    }
    fn op(&self, a: &usize, b: &usize) -> usize {
        self.table[*a][*b]
    }
    fn inv(&self, a: &usize) -> usize {
        self.inverses[*a]
    }
    fn render(&self, a: &usize) -> String {
        a.to_string()
    }
    fn parse_elem(&self, text: &str) -> Result<usize, QhError> {
        let t = text.trim();
        if t == "e" {
            return Ok(self.identity);
        }
        match t.parse::<usize>() {
            Ok(v) if v < self.size() => Ok(v),
            _ => Err(QhError::Parse(format!(
                "`{t}` is not an element of a table group of order {}",
                self.size()
            ))),
        }
    }
    fn describe(&self) -> String {
        format!("table group of order {}", self.size())
    }
}

impl FiniteGroup for TableGroup {
    fn order(&self) -> u128 {
        self.size() as u128
    }

    fn elements(&self) -> Vec<usize> {
        std::iter::once(self.identity)
            .chain((0..self.size()).filter(|&x| x != self.identity))
            .collect()
    }
}

/// `ℤ^rank` under addition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeAbelian {
    rank: usize,
}

impl FreeAbelian {
    pub fn new(rank: usize) -> Self {
        Self { rank }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn elem(&self, coords: &[i64]) -> Vec<BigInt> {
        assert_eq!(coords.len(), self.rank, "wrong number of coordinates");
        coords.iter().map(|&c| BigInt::from(c)).collect()
    }
}

impl Group for FreeAbelian {
    type Elem = Vec<BigInt>;

    fn identity(&self) -> Vec<BigInt> {
        vec![BigInt::from(0); self.rank]
    }
    fn op(&self, a: &Vec<BigInt>, b: &Vec<BigInt>) -> Vec<BigInt> {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }
    fn inv(&self, a: &Vec<BigInt>) -> Vec<BigInt> {
        a.iter().map(|x| -x).collect()
    }
    fn render(&self, a: &Vec<BigInt>) -> String {
        if self.rank == 1 {
            return a[0].to_string();
        }
        let parts: Vec<String> = a.iter().map(|x| x.to_string()).collect();
        format!("({})", parts.join(","))
    }
    fn parse_elem(&self, text: &str) -> Result<Vec<BigInt>, QhError> {
        let t = text.trim().trim_start_matches('(').trim_end_matches(')');
        let v: Vec<BigInt> = t
            .split(',')
            .map(|s| BigInt::from_str(s.trim()).map_err(|_| QhError::Parse(format!("bad integer `{s}`"))))
            .collect::<Result<_, _>>()?;
        if v.len() != self.rank {
            return Err(QhError::Parse(format!("expected {} coordinates", self.rank)));
        }
        Ok(v)
    }
    fn describe(&self) -> String {
        format!("Z^{}", self.rank)
    }
}

/// A finite group named by `SL2:Fp`, `symmetric:n` or `table:<file>`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Sl2(u64),
    Symmetric(usize),
    Table(String),
}

impl FromStr for GroupSpec {
    type Err = QhError;

    fn from_str(s: &str) -> Result<Self, QhError> {
        let bad = || QhError::BadGroupSpec(format!("`{s}` (expected SL2:Fp, symmetric:n or table:<file>)"));
        let (kind, arg) = s.split_once(':').ok_or_else(bad)?;
        match kind {
            "SL2" => {
                let p = arg.strip_prefix('F').unwrap_or(arg).parse().map_err(|_| bad())?;
                Sl2Fp::new(p)?;
                Ok(GroupSpec::Sl2(p))
            }
            "symmetric" => {
                let n = arg.parse().map_err(|_| bad())?;
                Symmetric::new(n)?;
                Ok(GroupSpec::Symmetric(n))
            }
            "table" if !arg.is_empty() => Ok(GroupSpec::Table(arg.to_string())),
            _ => Err(bad()),
        }
    }
}

impl std::fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GroupSpec::Sl2(p) => write!(f, "SL2:F{p}"),
            GroupSpec::Symmetric(n) => write!(f, "symmetric:{n}"),
            GroupSpec::Table(path) => write!(f, "table:{path}"),
        }
    }
}

pub(crate) type ElementIndex<E> = (Vec<E>, HashMap<E, usize>);

/// Index of every element of a finite group, in `elements()` order.
pub(crate) fn index_elements<G: FiniteGroup>(group: &G, cap: u128) -> Result<ElementIndex<G::Elem>, QhError> {
    let size = group.order();
    if size > cap {
        return Err(QhError::CapExceeded { size, cap });
    }
    let elems = group.elements();
    let index = elems.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
    Ok((elems, index))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sl2_f3_has_24_elements_identity_first() {
        let g = Sl2Fp::new(3).unwrap();
        let e = g.elements();
        assert_eq!(e.len(), 24);
        assert_eq!(g.order(), 24);
        assert_eq!(e[0], g.identity());
        let m = g.parse_elem("[[1,1],[0,1]]").unwrap();
        assert_eq!(g.order_of(&m), 3);
        assert_eq!(g.op(&m, &g.inv(&m)), g.identity());
        assert_eq!(g.parse_elem("-I").unwrap(), [2, 0, 0, 2]);
        assert!(g.parse_elem("[[1,1],[1,1]]").is_err());
    }

    #[test]
    fn symmetric_parsing_and_order() {
        let s = Symmetric::new(5).unwrap();
        let c = s.parse_elem("(1 2 3)").unwrap();
        assert_eq!(s.render(&c), "[2,3,1,4,5]");
        assert_eq!(s.cycles(&c), "(1 2 3)");
        assert_eq!(s.order_of(&c), 3);
        assert_eq!(s.parse_elem("[2,3,1,4,5]").unwrap(), c);
        let e = s.elements();
        assert_eq!(e.len(), 120);
        assert_eq!(e[0], s.identity());
        assert_eq!(s.render(&e[1]), "[1,2,3,5,4]");
        assert!(s.parse_elem("(1 1)").is_err());
        assert!(s.parse_elem("[1,1,2,3,4]").is_err());
        // (1 2)(2 3) = (1 2 3) with right-to-left composition
        let prod = s.op(&s.parse_elem("(1 2)").unwrap(), &s.parse_elem("(2 3)").unwrap());
        assert_eq!(s.cycles(&prod), "(1 2 3)");
    }

    #[test]
    fn table_group_validation() {
        let z3 = TableGroup::parse_table("0 1 2\n1 2 0\n2 0 1\n").unwrap();
        assert_eq!(z3.inv(&1), 2);
        assert!(TableGroup::parse_table("0 1\n0 1\n").is_err());
        assert!(TableGroup::parse_table("0 1 2\n1 0 0\n2 0 1\n").is_err());
    }

    #[test]
    fn pow_by_squaring() {
        let z = FreeAbelian::new(1);
        let g = z.elem(&[3]);
        assert_eq!(z.pow(&g, -5), z.elem(&[-15]));
        assert_eq!(z.pow_two_power(&g, 10), z.elem(&[3072]));
        let s = Sl2Fp::new(5).unwrap();
        let m = s.parse_elem("[[2,1],[1,1]]").unwrap();
        let naive = (0..7).fold(s.identity(), |acc, _| s.op(&acc, &m));
        assert_eq!(s.pow(&m, 7), naive);
    }

    #[test]
    fn group_spec_text() {
        for t in ["SL2:F3", "symmetric:5", "table:g.txt"] {
            assert_eq!(t.parse::<GroupSpec>().unwrap().to_string(), t);
        }
        assert!("SL2:F4".parse::<GroupSpec>().is_err());
        assert!("cyclic:4".parse::<GroupSpec>().is_err());
    }
}
