//! Finite groups as explicit element lists with multiplication tables,
//! plus 2×2 matrices over 𝔽₃ for the order-48 and order-24 matrix groups.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

/// A finite group: elements, full multiplication table, identity index,
/// and inverse table. Indices into `elements` are the working currency.
#[derive(Debug, Clone)]
pub struct FiniteGroup<L> {
    elements: Vec<L>,
    /// table[i * n + j] = index of elements[i]·elements[j].
    table: Vec<usize>,
    identity: usize,
    inverses: Vec<usize>,
}

impl<L: Clone> FiniteGroup<L> {
    /// Builds the group generated by `generators` via breadth-first closure
    /// under `mul`, starting from `identity`. `key` must injectively
    /// fingerprint elements (it decides equality during the closure).
    pub fn closure<K: Ord>(
        identity: L,
        generators: &[L],
        mul: impl Fn(&L, &L) -> L,
        key: impl Fn(&L) -> K,
    ) -> FiniteGroup<L> {
        let mut elements = vec![identity.clone()];
        let mut index: BTreeMap<K, usize> = BTreeMap::new();
        index.insert(key(&identity), 0);
        let mut cursor = 0;
        while cursor < elements.len() {
            let current = elements[cursor].clone();
            for g in generators {
                let next = mul(&current, g);
                if let Entry::Vacant(slot) = index.entry(key(&next)) {
                    slot.insert(elements.len());
                    elements.push(next);
                }
            }
            cursor += 1;
        }
        FiniteGroup::from_elements(elements, 0, mul, key)
    }

    /// Wraps an explicit element list (closed under `mul`, with
    /// `elements[identity]` the identity) into a group with its table.
    /// Panics if the list is not closed or misses inverses — callers hand
    /// in sets that are groups by construction.
    pub fn from_elements<K: Ord>(
        elements: Vec<L>,
        identity: usize,
        mul: impl Fn(&L, &L) -> L,
        key: impl Fn(&L) -> K,
    ) -> FiniteGroup<L> {
        let n = elements.len();
        let index: BTreeMap<K, usize> =
            elements.iter().enumerate().map(|(i, e)| (key(e), i)).collect();
        assert_eq!(index.len(), n, "duplicate elements in group list");
        let mut table = vec![0usize; n * n];
        for i in 0..n {
            for j in 0..n {
                let product = mul(&elements[i], &elements[j]);
                let p = *index
                    .get(&key(&product))
                    .expect("element list is not closed under multiplication");
                table[i * n + j] = p;
            }
        }
        let mut inverses = vec![usize::MAX; n];
        for i in 0..n {
            for j in 0..n {
                if table[i * n + j] == identity && table[j * n + i] == identity {
                    inverses[i] = j;
                }
            }
        }
        assert!(
            inverses.iter().all(|&j| j != usize::MAX),
            "element list misses inverses"
        );
        FiniteGroup { elements, table, identity, inverses }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[L] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &L {
        &self.elements[i]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    /// Index of elements[i]·elements[j].
    pub fn multiply(&self, i: usize, j: usize) -> usize {
        self.table[i * self.elements.len() + j]
    }

    pub fn inverse(&self, i: usize) -> usize {
        self.inverses[i]
    }

    /// Exhaustive associativity and identity-law check of the table.
    pub fn is_associative(&self) -> bool {
        let n = self.order();
        for i in 0..n {
            if self.multiply(self.identity, i) != i || self.multiply(i, self.identity) != i {
                return false;
            }
            for j in 0..n {
                for k in 0..n {
                    if self.multiply(self.multiply(i, j), k)
                        != self.multiply(i, self.multiply(j, k))
                    {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Multiplicative order of elements[i].
    pub fn element_order(&self, i: usize) -> usize {
        let mut acc = i;
        let mut n = 1;
        while acc != self.identity {
            acc = self.multiply(acc, i);
            n += 1;
        }
        n
    }

    /// Index of a generator if the group is cyclic.
    pub fn cyclic_generator(&self) -> Option<usize> {
        (0..self.order()).find(|&i| self.element_order(i) == self.order())
    }

    /// i-th element raised to the e-th power (e ≥ 0).
    pub fn power(&self, i: usize, e: usize) -> usize {
        let mut acc = self.identity;
        for _ in 0..e {
            acc = self.multiply(acc, i);
        }
        acc
    }
}

/// A 2×2 matrix over 𝔽₃, stored row-major with entries in {0, 1, 2}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Mat2(pub [u8; 4]);

impl Mat2 {
    pub const IDENTITY: Mat2 = Mat2([1, 0, 0, 1]);

    /// Builds a matrix reducing integer entries mod 3.
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Mat2 {
        let r = |x: i64| x.rem_euclid(3) as u8;
        Mat2([r(a), r(b), r(c), r(d)])
    }

    pub fn mul(&self, rhs: &Mat2) -> Mat2 {
        let a = self.0;
        let b = rhs.0;
        Mat2([
            (a[0] * b[0] + a[1] * b[2]) % 3,
            (a[0] * b[1] + a[1] * b[3]) % 3,
            (a[2] * b[0] + a[3] * b[2]) % 3,
            (a[2] * b[1] + a[3] * b[3]) % 3,
        ])
    }

    pub fn det(&self) -> u8 {
        let a = self.0;
        (a[0] * a[3] + 2 * a[1] * a[2]) % 3
    }

    pub fn is_invertible(&self) -> bool {
        self.det() != 0
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a = self.0;
        write!(f, "[[{},{}],[{},{}]]", a[0], a[1], a[2], a[3])
    }
}
