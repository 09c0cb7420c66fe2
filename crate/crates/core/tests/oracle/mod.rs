//! Brute-force reference computations over explicit element sets, sharing
//! no code with the library.

#![allow(dead_code)]

use std::collections::BTreeSet;

use hollowlat::lattice::PosetAction;
use hollowlat::module::{Submodule, SubmoduleLattice};

pub type Elem = Vec<u32>;
pub type Sub = BTreeSet<Elem>;

/// `Z_{f1} ⊕ … ⊕ Z_{fk}` over `Z/n`, with at most two factors so that every
/// subgroup is generated by two elements.
#[derive(Debug, Clone)]
pub struct Oracle {
    pub n: u32,
    pub factors: Vec<u32>,
}

pub fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

/// Prime powers exactly dividing `n`.
pub fn prime_powers(mut n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut p = 2;
    while n > 1 {
        let mut q = 1;
        while n.is_multiple_of(p) {
            n /= p;
            q *= p;
        }
        if q > 1 {
            out.push(q);
        }
        p += 1;
    }
    out
}

impl Oracle {
    pub fn new(n: u32, factors: &[u32]) -> Self {
        assert!(
            factors.len() <= 2,
            "two-generator enumeration needs at most two factors"
        );
        Oracle {
            n,
            factors: factors.to_vec(),
        }
    }

    pub fn elements(&self) -> Vec<Elem> {
        let mut out = vec![vec![]];
        for &f in &self.factors {
            out = out
                .into_iter()
                .flat_map(|e| {
                    (0..f).map(move |c| {
                        let mut e = e.clone();
                        e.push(c);
                        e
                    })
                })
                .collect();
        }
        out
    }

    pub fn zero(&self) -> Elem {
        vec![0; self.factors.len()]
    }

    pub fn add(&self, a: &Elem, b: &Elem) -> Elem {
        a.iter()
            .zip(b)
            .zip(&self.factors)
            .map(|((x, y), f)| (x + y) % f)
            .collect()
    }

    pub fn scale(&self, k: u32, a: &Elem) -> Elem {
        a.iter().zip(&self.factors).map(|(x, f)| (k * x) % f).collect()
    }

    pub fn span(&self, gens: &[Elem]) -> Sub {
        let mut set: Sub = [self.zero()].into();
        let mut frontier = vec![self.zero()];
        while let Some(x) = frontier.pop() {
            for g in gens {
                let y = self.add(&x, g);
                if set.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
        set
    }

    pub fn whole(&self) -> Sub {
        self.elements().into_iter().collect()
    }

    pub fn zero_sub(&self) -> Sub {
        [self.zero()].into()
    }

    /// Every submodule, ordered by size then contents.
    pub fn submodules(&self) -> Vec<Sub> {
        let mut cyclic: Vec<(Elem, Sub)> = Vec::new();
        for a in self.elements() {
            let span = self.span(std::slice::from_ref(&a));
            if cyclic.iter().all(|(_, s)| *s != span) {
                cyclic.push((a, span));
            }
        }
        let mut all = BTreeSet::new();
        for (a, _) in &cyclic {
            for (b, _) in &cyclic {
                all.insert(self.span(&[a.clone(), b.clone()]));
            }
        }
        let mut out: Vec<Sub> = all.into_iter().collect();
        out.sort_by(|x, y| x.len().cmp(&y.len()).then(x.cmp(y)));
        out
    }

    pub fn sum(&self, a: &Sub, b: &Sub) -> Sub {
        a.iter().flat_map(|x| b.iter().map(move |y| self.add(x, y))).collect()
    }

    pub fn ideal_apply(&self, d: u32, n: &Sub) -> Sub {
        n.iter().map(|x| self.scale(d, x)).collect()
    }

    /// Ideals as generators `d | n`; `d = n` is the zero ideal.
    pub fn ideals(&self) -> Vec<u32> {
        divisors(self.n)
    }

    pub fn is_second(&self, n: &Sub) -> bool {
        n.len() > 1
            && self.ideals().into_iter().all(|d| {
                let image = self.ideal_apply(d, n);
                image == *n || image.len() == 1
            })
    }

    /// Every submodule with its pairwise sums and intersections precomputed.
    pub fn table(&self) -> Table {
        let subs = self.submodules();
        let position = |set: &Sub| subs.iter().position(|s| s == set).expect("closed under sums");
        let sum = subs
            .iter()
            .map(|a| subs.iter().map(|b| position(&self.sum(a, b))).collect())
            .collect();
        let meet = subs
            .iter()
            .map(|a| {
                subs.iter()
                    .map(|b| position(&a.intersection(b).cloned().collect()))
                    .collect()
            })
            .collect();
        let whole = self.whole();
        let ideal_images = self
            .ideals()
            .into_iter()
            .map(|d| position(&self.ideal_apply(d, &whole)))
            .collect();
        Table {
            subs,
            sum,
            meet,
            ideal_images,
        }
    }
}

/// Submodules by index, ordered by size then contents.
#[derive(Debug, Clone)]
pub struct Table {
    pub subs: Vec<Sub>,
    sum: Vec<Vec<usize>>,
    meet: Vec<Vec<usize>>,
    /// `dM` for every ideal `(d)`.
    ideal_images: Vec<usize>,
}

impl Table {
    pub fn position(&self, set: &Sub) -> usize {
        self.subs.iter().position(|s| s == set).expect("a submodule")
    }

    fn all(&self) -> std::ops::Range<usize> {
        0..self.subs.len()
    }

    fn within(&self, a: usize, b: usize) -> bool {
        self.subs[a].is_subset(&self.subs[b])
    }

    pub fn is_hollow(&self, n: usize) -> bool {
        self.subs[n].len() > 1
            && self
                .all()
                .all(|a| self.all().all(|b| self.sum[a][b] != n || a == n || b == n))
    }

    pub fn is_ps_hollow(&self, n: usize) -> bool {
        self.subs[n].len() > 1
            && self.ideal_images.iter().all(|&im| {
                self.all()
                    .all(|l| !self.within(n, self.sum[im][l]) || self.within(n, im) || self.within(n, l))
            })
    }

    pub fn is_distributive(&self) -> bool {
        self.all().all(|l| {
            self.all().all(|a| {
                self.all()
                    .all(|b| self.meet[l][self.sum[a][b]] == self.sum[self.meet[l][a]][self.meet[l][b]])
            })
        })
    }

    pub fn is_pseudo_distributive(&self) -> bool {
        self.ideal_images.iter().all(|&im| {
            self.all().all(|l| {
                self.all()
                    .all(|n| self.meet[l][self.sum[im][n]] == self.sum[self.meet[l][im]][self.meet[l][n]])
            })
        })
    }
}

/// A library submodule as an explicit coordinate set.
pub fn as_set(sl: &SubmoduleLattice, n: &Submodule) -> Sub {
    n.members().map(|x| sl.module().coords(x)).collect()
}

/// The library submodule index holding exactly `set`.
pub fn index_of(sl: &SubmoduleLattice, set: &Sub) -> usize {
    sl.indices()
        .find(|&i| as_set(sl, sl.submodule(i)) == *set)
        .expect("oracle submodule missing from the library lattice")
}

/// `s ⇀ x = x` or `0` for every `s`, on `x ≠ 0`.
pub fn lattice_second(action: &PosetAction, x: usize) -> bool {
    let l = action.lattice();
    x != l.bottom()
        && action.acting().all(|s| {
            let y = action.apply(s, x);
            y == x || y == l.bottom()
        })
}

/// `s ⇀ y ≤ x` forces `y ≤ x` or `s ⇀ 1 ≤ x`, on `x ≠ 1`.
pub fn lattice_prime(action: &PosetAction, x: usize) -> bool {
    let l = action.lattice();
    x != l.top()
        && action.acting().all(|s| {
            l.elements()
                .all(|y| !l.leq(action.apply(s, y), x) || l.leq(y, x) || l.leq(action.apply(s, l.top()), x))
        })
}

/// `s ⇀ 1 ≤ x` or `(s ⇀ 1) ∨ x = 1`, on `x ≠ 1`.
pub fn lattice_coprime(action: &PosetAction, x: usize) -> bool {
    let l = action.lattice();
    x != l.top()
        && action.acting().all(|s| {
            let st = action.apply(s, l.top());
            l.leq(st, x) || l.join(st, x) == l.top()
        })
}
