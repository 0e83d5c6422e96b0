use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};

/// A finite group given by its multiplication table.
///
/// Elements are indices `0..order`. The table is validated on construction
/// (closure, identity, inverses, associativity on all triples).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
    name: String,
}

impl FiniteGroup {
    pub fn from_table(table: Vec<Vec<usize>>) -> Result<Self> {
        Self::from_table_named(table, "G")
    }

    pub fn from_table_named(table: Vec<Vec<usize>>, name: impl Into<String>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::InvalidGroup("empty table".into()));
        }
        if let Some(r) = table.iter().position(|row| row.len() != n) {
            return Err(Error::InvalidGroup(format!("row {r} has {} entries, expected {n}", table[r].len())));
        }
        let flat: Vec<usize> = table.into_iter().flatten().collect();
        if let Some(i) = flat.iter().position(|&x| x >= n) {
            return Err(Error::InvalidGroup(format!(
                "entry ({}, {}) = {} is out of range",
                i / n,
                i % n,
                flat[i]
            )));
        }
        let mul = |a: usize, b: usize| flat[a * n + b];
        let identity = (0..n)
            .find(|&e| (0..n).all(|g| mul(e, g) == g && mul(g, e) == g))
            .ok_or_else(|| Error::InvalidGroup("no identity element".into()))?;
        let mut inverse = Vec::with_capacity(n);
        for g in 0..n {
            let inv = (0..n)
                .find(|&h| mul(g, h) == identity && mul(h, g) == identity)
                .ok_or_else(|| Error::InvalidGroup(format!("element {g} has no inverse")))?;
            inverse.push(inv);
        }
        for a in 0..n {
            for b in 0..n {
                let ab = mul(a, b);
                for c in 0..n {
                    if mul(ab, c) != mul(a, mul(b, c)) {
                        return Err(Error::InvalidGroup(format!("associativity fails on ({a}, {b}, {c})")));
                    }
                }
            }
        }
        Ok(FiniteGroup {
            order: n,
            table: flat,
            identity,
            inverse,
            name: name.into(),
        })
    }

    /// `Z_n` with element `j` standing for `j mod n`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1, "cyclic group of order 0");
        let table: Vec<usize> = (0..n).flat_map(|a| (0..n).map(move |b| (a + b) % n)).collect();
        let inverse = (0..n).map(|a| (n - a) % n).collect();
        FiniteGroup {
            order: n,
            table,
            identity: 0,
            inverse,
            name: format!("Z{n}"),
        }
    }

    /// The symmetric group on `d` letters, elements listed as permutations
    /// in lexicographic order; the product `a*b` is `a` after `b`.
    pub fn symmetric(d: usize) -> Self {
        assert!((1..=5).contains(&d), "symmetric group degree out of range");
        let perms = permutations(d);
        let index: HashMap<Vec<usize>, usize> =
            perms.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let table = perms
            .iter()
            .map(|a| {
                perms
                    .iter()
                    .map(|b| index[&b.iter().map(|&x| a[x]).collect::<Vec<_>>()])
                    .collect()
            })
            .collect();
        Self::from_table_named(table, format!("S{d}")).expect("permutation composition is a group")
    }

    /// `Z_2 x Z_2`.
    pub fn klein_four() -> Self {
        let mut g = Self::direct_product(&Self::cyclic(2), &Self::cyclic(2));
        g.name = "V4".into();
        g
    }

    /// `G x H` with `(g, h)` stored at index `g * |H| + h`.
    pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Self {
        let (n, m) = (g.order, h.order);
        let table = (0..n * m)
            .map(|a| {
                (0..n * m)
                    .map(|b| g.mul(a / m, b / m) * m + h.mul(a % m, b % m))
                    .collect()
            })
            .collect();
        Self::from_table_named(table, format!("{}x{}", g.name, h.name)).expect("direct product is a group")
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(<[usize]>::to_vec).collect()
    }

    /// `g^k`.
    pub fn pow(&self, g: usize, k: usize) -> usize {
        (0..k).fold(self.identity, |acc, _| self.mul(acc, g))
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// True when the table is literally addition mod `n`, i.e. the group is
    /// `Z_n` with its standard labelling.
    pub fn is_standard_cyclic(&self) -> bool {
        let n = self.order;
        (0..n).all(|a| (0..n).all(|b| self.mul(a, b) == (a + b) % n))
    }
}

fn permutations(d: usize) -> Vec<Vec<usize>> {
    fn extend(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for x in 0..used.len() {
            if !used[x] {
                used[x] = true;
                prefix.push(x);
                extend(prefix, used, out);
                prefix.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), &mut vec![false; d], &mut out);
    out
}

/// A verified homomorphism between finite groups.
#[derive(Clone, Debug)]
pub struct GroupHom {
    source: Arc<FiniteGroup>,
    target: Arc<FiniteGroup>,
    map: Vec<usize>,
}

impl GroupHom {
    pub fn new(source: Arc<FiniteGroup>, target: Arc<FiniteGroup>, map: Vec<usize>) -> Result<Self> {
        if map.len() != source.order() {
            return Err(Error::Shape(format!(
                "map has {} entries for a group of order {}",
                map.len(),
                source.order()
            )));
        }
        if map.iter().any(|&x| x >= target.order()) {
            return Err(Error::InvalidArgument("map leaves the target group".into()));
        }
        for a in 0..source.order() {
            for b in 0..source.order() {
                if map[source.mul(a, b)] != target.mul(map[a], map[b]) {
                    return Err(Error::NotHomomorphism { a, b });
                }
            }
        }
        Ok(GroupHom { source, target, map })
    }

    /// The homomorphism from the standard `Z_n` sending `1` to `generator`.
    pub fn from_generator(source: Arc<FiniteGroup>, target: Arc<FiniteGroup>, generator: usize) -> Result<Self> {
        if !source.is_standard_cyclic() {
            return Err(Error::NotCyclic);
        }
        let map = (0..source.order()).map(|j| target.pow(generator, j)).collect();
        Self::new(source, target, map)
    }

    /// `Z_h -> Z_g`, `j -> j * g/h`, for `h | g`.
    pub fn cyclic_inclusion(h: usize, g: usize) -> Result<Self> {
        if h == 0 || !g.is_multiple_of(h) {
            return Err(Error::InvalidArgument(format!("{h} does not divide {g}")));
        }
        Self::from_generator(Arc::new(FiniteGroup::cyclic(h)), Arc::new(FiniteGroup::cyclic(g)), g / h)
    }

    /// Reduction `Z_n -> Z_m`, `j -> j mod m`, for `m | n`.
    pub fn cyclic_reduction(n: usize, m: usize) -> Result<Self> {
        if m == 0 || !n.is_multiple_of(m) {
            return Err(Error::InvalidArgument(format!("{m} does not divide {n}")));
        }
        Self::new(
            Arc::new(FiniteGroup::cyclic(n)),
            Arc::new(FiniteGroup::cyclic(m)),
            (0..n).map(|j| j % m).collect(),
        )
    }

    pub fn source(&self) -> &Arc<FiniteGroup> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FiniteGroup> {
        &self.target
    }

    pub fn image(&self, g: usize) -> usize {
        self.map[g]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.map
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.target.order()];
        self.map.iter().all(|&x| !std::mem::replace(&mut seen[x], true))
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.target.order()];
        for &x in &self.map {
            seen[x] = true;
        }
        seen.into_iter().all(|s| s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_groups_are_valid() {
        for g in [FiniteGroup::cyclic(1), FiniteGroup::cyclic(12), FiniteGroup::symmetric(3), FiniteGroup::klein_four()] {
            // Re-validate through the checked constructor.
            let again = FiniteGroup::from_table(g.table()).unwrap();
            assert_eq!(again.order(), g.order());
            assert_eq!(again.identity(), g.identity());
        }
        let s4 = FiniteGroup::symmetric(4);
        assert_eq!(s4.order(), 24);
        assert!(!s4.is_abelian());
        assert!(!FiniteGroup::symmetric(3).is_abelian());
        assert!(FiniteGroup::klein_four().is_abelian());
    }

    #[test]
    fn rejects_broken_tables() {
        // No identity.
        assert!(FiniteGroup::from_table(vec![vec![1, 0], vec![0, 0]]).is_err());
        // Ragged.
        assert!(FiniteGroup::from_table(vec![vec![0, 1], vec![1]]).is_err());
        // Latin square with identity 0 that is not associative.
        let t = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(FiniteGroup::from_table(t), Err(Error::InvalidGroup(_))));
    }

    #[test]
    fn homomorphism_checks() {
        let inc = GroupHom::cyclic_inclusion(2, 4).unwrap();
        assert_eq!(inc.as_slice(), &[0, 2]);
        assert!(inc.is_injective() && !inc.is_surjective());
        let red = GroupHom::cyclic_reduction(6, 3).unwrap();
        assert!(red.is_surjective() && !red.is_injective());
        let bad = GroupHom::new(
            Arc::new(FiniteGroup::cyclic(4)),
            Arc::new(FiniteGroup::cyclic(2)),
            vec![0, 1, 1, 0],
        );
        assert!(matches!(bad, Err(Error::NotHomomorphism { .. })));
    }

    #[test]
    fn z3_inside_s3() {
        let s3 = Arc::new(FiniteGroup::symmetric(3));
        let c = (0..6).find(|&g| s3.element_order(g) == 3).unwrap();
        let hom = GroupHom::from_generator(Arc::new(FiniteGroup::cyclic(3)), s3, c).unwrap();
        assert!(hom.is_injective());
    }
}
