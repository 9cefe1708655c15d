//! Second implementations used to cross-check the library.
//!
//! Everything here works on plain integers, hash maps and bitmasks and calls
//! nothing from `vanishing-core`.

use std::collections::{HashMap, HashSet};

pub type Vector = Vec<u32>;

fn md(a: i64, p: u32) -> u32 {
    a.rem_euclid(p as i64) as u32
}

/// Every vector of `F_p^n`, last coordinate fastest.
pub fn all_vectors(p: u32, n: usize) -> Vec<Vector> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..p).map(move |c| {
                    let mut w = v.clone();
                    w.push(c);
                    w
                })
            })
            .collect();
    }
    out
}

pub fn dot(p: u32, a: &[u32], b: &[u32]) -> u32 {
    md(a.iter().zip(b).map(|(&x, &y)| x as i64 * y as i64).sum(), p)
}

fn inverse(p: u32, a: u32) -> u32 {
    (1..p)
        .find(|&b| (a as u64 * b as u64) % p as u64 == 1)
        .expect("nonzero residue")
}

/// Rank over `F_p` by plain Gauss-Jordan elimination.
pub fn rank(p: u32, rows: &[Vector]) -> usize {
    let mut m: Vec<Vector> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(pivot) = (r..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, pivot);
        let inv = inverse(p, m[r][c]);
        for x in m[r].iter_mut() {
            *x = (*x as u64 * inv as u64 % p as u64) as u32;
        }
        for i in 0..m.len() {
            if i != r && m[i][c] != 0 {
                let f = m[i][c];
                let pivot_row = m[r].clone();
                for (x, y) in m[i].iter_mut().zip(pivot_row) {
                    *x = md(*x as i64 - f as i64 * y as i64, p);
                }
            }
        }
        r += 1;
    }
    r
}

pub fn in_span(p: u32, rows: &[Vector], x: &[u32]) -> bool {
    let mut with = rows.to_vec();
    with.push(x.to_vec());
    rank(p, &with) == rank(p, rows)
}

/// Expands `prod (1 - g^v)^r` in `F_p[F_p^n]` term by term and reports
/// whether every coefficient cancels.
pub fn fp_product_vanishes(p: u32, n: usize, vectors: &[Vector], r: u32) -> bool {
    let mut poly: HashMap<Vector, u32> = HashMap::from([(vec![0; n], 1)]);
    for v in vectors {
        for _ in 0..r {
            let mut next: HashMap<Vector, u32> = HashMap::new();
            for (mono, &c) in &poly {
                *next.entry(mono.clone()).or_insert(0) += c;
                let shifted: Vector = mono.iter().zip(v).map(|(&a, &b)| (a + b) % p).collect();
                let e = next.entry(shifted).or_insert(0);
                *e = md(*e as i64 - c as i64, p);
            }
            poly = next
                .into_iter()
                .map(|(k, c)| (k, c % p))
                .filter(|&(_, c)| c != 0)
                .collect();
        }
    }
    poly.is_empty()
}

/// The r-arithmetic conditions, straight from the definition: members are
/// centres of `(2r+1)`-term progressions inside the set, non-members start
/// `r`-term progressions into it, both with a nonzero step.
pub fn is_arithmetic(p: u32, r: u32, set: &[u32]) -> bool {
    let inside: HashSet<u32> = set.iter().copied().collect();
    (0..p).all(|a| {
        (1..p).any(|b| {
            let term = |i: i64| md(a as i64 + i * b as i64, p);
            if inside.contains(&a) {
                (1..=r as i64).all(|i| inside.contains(&term(i)) && inside.contains(&term(-i)))
            } else {
                (1..=r as i64).all(|i| inside.contains(&term(i)))
            }
        })
    })
}

/// Least size of a 1-arithmetic subset of `F_p`, over all `2^p` subsets.
pub fn min_arithmetic_size(p: u32) -> usize {
    let mut best = p as usize;
    for mask in 1u64..(1u64 << p) {
        let size = mask.count_ones() as usize;
        if size >= best {
            continue;
        }
        let set: Vec<u32> = (0..p).filter(|&i| mask >> i & 1 == 1).collect();
        if is_arithmetic(p, 1, &set) {
            best = size;
        }
    }
    best
}

/// Whether `x = sum a_v v` with every `a_v ∈ A`, meeting in the middle.
pub struct Representability {
    p: u32,
    left: HashSet<Vector>,
    right: Vec<Vector>,
}

impl Representability {
    pub fn new(p: u32, n: usize, vectors: &[Vector], a: &[u32]) -> Self {
        let (l, r) = vectors.split_at(vectors.len() / 2);
        let sums = |part: &[Vector]| {
            let mut acc: Vec<Vector> = vec![vec![0; n]];
            for v in part {
                let mut next = HashSet::new();
                for s in &acc {
                    for &c in a {
                        next.insert(
                            s.iter()
                                .zip(v)
                                .map(|(&x, &y)| (x + c * y) % p)
                                .collect::<Vector>(),
                        );
                    }
                }
                acc = next.into_iter().collect();
            }
            acc
        };
        Representability {
            p,
            left: sums(l).into_iter().collect(),
            right: sums(r),
        }
    }

    pub fn contains(&self, x: &[u32]) -> bool {
        self.right.iter().any(|s| {
            let need: Vector = x
                .iter()
                .zip(s)
                .map(|(&a, &b)| md(a as i64 - b as i64, self.p))
                .collect();
            self.left.contains(&need)
        })
    }
}

/// `sum c_i v_i` computed from scratch.
pub fn combination(p: u32, n: usize, vectors: &[Vector], coeffs: &[u32]) -> Vector {
    let mut out = vec![0u32; n];
    for (v, &c) in vectors.iter().zip(coeffs) {
        for (o, &x) in out.iter_mut().zip(v) {
            *o = ((*o as u64 + c as u64 * x as u64) % p as u64) as u32;
        }
    }
    out
}

/// Points of `{x : <x, v> = t}`.
fn hyperplane(p: u32, n: usize, v: &[u32], t: u32) -> HashSet<Vector> {
    all_vectors(p, n)
        .into_iter()
        .filter(|x| dot(p, x, v) == t)
        .collect()
}

/// Whether the affine sets `{x : <x, v_i> = t_i}` cover `F_p^n`. A zero
/// normal gives everything when `t_i = 0` and nothing otherwise.
pub fn hyperplanes_cover(p: u32, n: usize, normals: &[Vector], values: &[u32]) -> bool {
    let mut covered = HashSet::new();
    for (v, &t) in normals.iter().zip(values) {
        covered.extend(hyperplane(p, n, v, t));
    }
    covered.len() == (p as usize).pow(n as u32)
}

pub fn hyperplanes_irredundant(p: u32, n: usize, normals: &[Vector], values: &[u32]) -> bool {
    hyperplanes_cover(p, n, normals, values)
        && (0..normals.len()).all(|i| {
            let (ns, ts): (Vec<Vector>, Vec<u32>) = normals
                .iter()
                .zip(values)
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, (v, &t))| (v.clone(), t))
                .unzip();
            !hyperplanes_cover(p, n, &ns, &ts)
        })
}

/// A finite abelian group `Z_{m_1} × ... × Z_{m_k}` with elements encoded
/// as bits of a `u64`.
#[derive(Debug, Clone)]
pub struct Group {
    factors: Vec<u32>,
    elements: Vec<Vector>,
    position: HashMap<Vector, usize>,
}

impl Group {
    pub fn new(factors: &[u32]) -> Self {
        let mut elements = vec![Vec::new()];
        for &m in factors {
            elements = elements
                .into_iter()
                .flat_map(|v: Vector| {
                    (0..m).map(move |c| {
                        let mut w = v.clone();
                        w.push(c);
                        w
                    })
                })
                .collect();
        }
        assert!(elements.len() <= 64);
        let position = elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), i))
            .collect();
        Group {
            factors: factors.to_vec(),
            elements,
            position,
        }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn full(&self) -> u64 {
        if self.order() == 64 {
            u64::MAX
        } else {
            (1u64 << self.order()) - 1
        }
    }

    pub fn mask_of<'a>(&self, tuples: impl IntoIterator<Item = &'a Vector>) -> u64 {
        tuples.into_iter().fold(0, |m, t| m | 1 << self.position[t])
    }

    fn sub(&self, a: &[u32], b: &[u32]) -> Vector {
        a.iter()
            .zip(b)
            .zip(&self.factors)
            .map(|((&x, &y), &m)| (x + m - y) % m)
            .collect()
    }

    fn add(&self, a: &[u32], b: &[u32]) -> Vector {
        a.iter()
            .zip(b)
            .zip(&self.factors)
            .map(|((&x, &y), &m)| (x + y) % m)
            .collect()
    }

    /// `C - c` for any `c ∈ C`: the subgroup a coset is a translate of.
    pub fn direction(&self, coset: u64) -> u64 {
        let members: Vec<&Vector> = (0..self.order())
            .filter(|&i| coset >> i & 1 == 1)
            .map(|i| &self.elements[i])
            .collect();
        let base = members[0];
        self.mask_of(
            members
                .iter()
                .map(|m| self.sub(m, base))
                .collect::<Vec<_>>()
                .iter(),
        )
    }

    fn is_subgroup(&self, mask: u64) -> bool {
        let members: Vec<&Vector> = (0..self.order())
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| &self.elements[i])
            .collect();
        mask & 1 == 1
            && members.iter().all(|a| {
                members
                    .iter()
                    .all(|b| mask >> self.position[&self.sub(a, b)] & 1 == 1)
            })
    }

    /// Every coset of every subgroup, as masks, found by testing all subsets
    /// closed under differences. Exponential in the order; meant for order
    /// at most about 16.
    pub fn all_cosets(&self) -> Vec<u64> {
        let mut subgroups = Vec::new();
        for mask in 1..=self.full() {
            if self.is_subgroup(mask) {
                subgroups.push(mask);
            }
        }
        let mut out = HashSet::new();
        for h in subgroups {
            let members: Vec<&Vector> = (0..self.order())
                .filter(|&i| h >> i & 1 == 1)
                .map(|i| &self.elements[i])
                .collect();
            for x in &self.elements {
                out.insert(
                    self.mask_of(
                        members
                            .iter()
                            .map(|m| self.add(m, x))
                            .collect::<Vec<_>>()
                            .iter(),
                    ),
                );
            }
        }
        let mut out: Vec<u64> = out.into_iter().collect();
        out.sort_unstable();
        out
    }

    pub fn is_irredundant_cover(&self, cosets: &[u64]) -> bool {
        let union = |skip: Option<usize>| {
            cosets
                .iter()
                .enumerate()
                .filter(|&(i, _)| Some(i) != skip)
                .fold(0, |m, (_, &c)| m | c)
        };
        union(None) == self.full() && (0..cosets.len()).all(|i| union(Some(i)) != self.full())
    }

    pub fn intersection(&self, cosets: &[u64], skip: Option<usize>) -> u64 {
        cosets
            .iter()
            .enumerate()
            .filter(|&(i, _)| Some(i) != skip)
            .fold(self.full(), |m, (_, &c)| m & self.direction(c))
    }

    /// Least irredundant cover by proper cosets with trivial intersection,
    /// over every subfamily. Only for groups with very few cosets.
    pub fn phi_brute(&self) -> usize {
        let cosets: Vec<u64> = self
            .all_cosets()
            .into_iter()
            .filter(|&c| c != self.full() || self.order() == 1)
            .collect();
        assert!(cosets.len() <= 24);
        let mut best = usize::MAX;
        for pick in 1u32..(1u32 << cosets.len()) {
            let k = pick.count_ones() as usize;
            if k >= best {
                continue;
            }
            let family: Vec<u64> = (0..cosets.len())
                .filter(|&i| pick >> i & 1 == 1)
                .map(|i| cosets[i])
                .collect();
            if self.is_irredundant_cover(&family) && self.intersection(&family, None) == 1 {
                best = k;
            }
        }
        best
    }
}
