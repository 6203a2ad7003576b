use crate::error::{Error, Result};

/// A finite group as a validated Cayley table. Element 0 need not be the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    labels: Vec<String>,
    cayley: Vec<Vec<usize>>,
    inverse: Vec<usize>,
    identity: usize,
}

impl FiniteGroup {
    pub fn from_table(name: impl Into<String>, labels: Vec<String>, cayley: Vec<Vec<usize>>) -> Result<FiniteGroup> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::InvalidInput("a group has at least one element".into()));
        }
        if cayley.len() != n || cayley.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return Err(Error::InvalidInput("Cayley table has the wrong shape".into()));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| cayley[e][x] == x && cayley[x][e] == x))
            .ok_or_else(|| Error::InvalidInput("Cayley table has no identity".into()))?;
        let mut inverse = Vec::with_capacity(n);
        for x in 0..n {
            let y = (0..n)
                .find(|&y| cayley[x][y] == identity && cayley[y][x] == identity)
                .ok_or_else(|| Error::InvalidInput(format!("element {} has no inverse", labels[x])))?;
            inverse.push(y);
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if cayley[cayley[a][b]][c] != cayley[a][cayley[b][c]] {
                        return Err(Error::InvalidInput(format!("Cayley table is not associative at ({a},{b},{c})")));
                    }
                }
            }
        }
        Ok(FiniteGroup { name: name.into(), labels, cayley, inverse, identity })
    }

    /// `C_n = ⟨g⟩` with elements `e, g, g^2, …`.
    pub fn cyclic(n: usize) -> Result<FiniteGroup> {
        let labels = (0..n)
            .map(|k| match k {
                0 => "e".to_string(),
                1 => "g".to_string(),
                _ => format!("g^{k}"),
            })
            .collect();
        let cayley = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        FiniteGroup::from_table(format!("C{n}"), labels, cayley)
    }

    /// `S_n` on `{1,…,n}` with `(a∘b)(i) = a(b(i))`; elements in lexicographic order
    /// of their image lists, labelled in cycle notation.
    pub fn symmetric(n: usize) -> Result<FiniteGroup> {
        if n == 0 || n > 5 {
            return Err(Error::InvalidInput(format!("S{n} is not supported")));
        }
        let perms = permutations(n);
        let index = |p: &[usize]| perms.iter().position(|q| q == p).expect("closed under composition");
        let cayley = perms
            .iter()
            .map(|a| perms.iter().map(|b| index(&b.iter().map(|&i| a[i]).collect::<Vec<_>>())).collect())
            .collect();
        let labels = perms.iter().map(|p| cycle_notation(p)).collect();
        FiniteGroup::from_table(format!("S{n}"), labels, cayley)
    }

    /// `C<n>` or `S<n>`.
    pub fn from_name(name: &str) -> Result<FiniteGroup> {
        let parse = |s: &str| s.parse::<usize>().ok().filter(|&n| n > 0);
        match name.split_at(name.len().min(1)) {
            ("C", rest) => parse(rest).filter(|&n| n <= 64).map_or_else(|| Err(unknown_group(name)), FiniteGroup::cyclic),
            ("S", rest) => parse(rest).filter(|&n| n <= 5).map_or_else(|| Err(unknown_group(name)), FiniteGroup::symmetric),
            _ => Err(unknown_group(name)),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.cayley[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn mul3(&self, a: usize, b: usize, c: usize) -> usize {
        self.mul(self.mul(a, b), c)
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order()).all(|a| (0..self.order()).all(|b| self.mul(a, b) == self.mul(b, a)))
    }
}

fn unknown_group(name: &str) -> Error {
    Error::UnknownExample(format!("group {name:?} (expected C<n> with n ≤ 64 or S<n> with n ≤ 5)"))
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                rec(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn cycle_notation(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        out.push('(');
        let mut i = start;
        let mut first = true;
        while !seen[i] {
            seen[i] = true;
            if !first {
                out.push(' ');
            }
            out.push_str(&(i + 1).to_string());
            first = false;
            i = p[i];
        }
        out.push(')');
    }
    if out.is_empty() {
        "e".into()
    } else {
        out
    }
}

/// An injective homomorphism `sub → ambient`: the identity for equal groups, the
/// natural inclusion `S_m ⊂ S_n`, and for cyclic `sub` the first element of matching order.
pub fn subgroup_embedding(sub: &FiniteGroup, ambient: &FiniteGroup) -> Result<Vec<usize>> {
    let map: Vec<usize> = if sub == ambient {
        (0..sub.order()).collect()
    } else if let (Some(m), Some(n)) = (sub.name.strip_prefix('S'), ambient.name.strip_prefix('S')) {
        let (m, n): (usize, usize) = (m.parse().unwrap_or(0), n.parse().unwrap_or(0));
        if m > n {
            return Err(not_a_subgroup(sub, ambient));
        }
        let small = permutations(m);
        let large = permutations(n);
        small
            .iter()
            .map(|p| {
                let ext: Vec<usize> = p.iter().copied().chain(m..n).collect();
                large.iter().position(|q| *q == ext).expect("extension is a permutation")
            })
            .collect()
    } else if sub.name.starts_with('C') {
        let m = sub.order();
        let a = (0..ambient.order())
            .find(|&a| ambient.element_order(a) == m)
            .ok_or_else(|| not_a_subgroup(sub, ambient))?;
        let mut map = vec![ambient.identity; m];
        for k in 1..m {
            map[k] = ambient.mul(map[k - 1], a);
        }
        map
    } else {
        return Err(not_a_subgroup(sub, ambient));
    };
    for a in 0..sub.order() {
        for b in 0..sub.order() {
            if map[sub.mul(a, b)] != ambient.mul(map[a], map[b]) {
                return Err(not_a_subgroup(sub, ambient));
            }
        }
    }
    let mut sorted = map.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != map.len() {
        return Err(not_a_subgroup(sub, ambient));
    }
    Ok(map)
}

fn not_a_subgroup(sub: &FiniteGroup, ambient: &FiniteGroup) -> Error {
    Error::UnknownExample(format!("no known embedding of {} into {}", sub.name, ambient.name))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetric_group_of_degree_three() {
        let g = FiniteGroup::symmetric(3).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.label(g.identity()), "e");
        assert!(!g.is_abelian());
        let t12 = g.labels().iter().position(|l| l == "(1 2)").unwrap();
        let t13 = g.labels().iter().position(|l| l == "(1 3)").unwrap();
        // (1 2)∘(1 3) sends 1 → 3 → 3, 3 → 1 → 2, 2 → 1
        assert_eq!(g.label(g.mul(t12, t13)), "(1 3 2)");
        assert_eq!(g.element_order(g.mul(t12, t13)), 3);
    }

    #[test]
    fn names_and_embeddings() {
        assert_eq!(FiniteGroup::from_name("C1").unwrap().order(), 1);
        assert_eq!(FiniteGroup::from_name("C3").unwrap().label(2), "g^2");
        assert!(FiniteGroup::from_name("D4").is_err());
        assert!(FiniteGroup::from_name("C0").is_err());
        let s3 = FiniteGroup::symmetric(3).unwrap();
        for sub in ["C1", "C2", "C3", "S2", "S3"] {
            let h = FiniteGroup::from_name(sub).unwrap();
            let map = subgroup_embedding(&h, &s3).unwrap();
            assert_eq!(map[h.identity()], s3.identity());
        }
        assert!(subgroup_embedding(&FiniteGroup::cyclic(6).unwrap(), &s3).is_err());
        assert!(subgroup_embedding(&FiniteGroup::cyclic(2).unwrap(), &FiniteGroup::cyclic(3).unwrap()).is_err());
    }

    #[test]
    fn bad_tables_are_rejected() {
        let labels = vec!["a".to_string(), "b".to_string()];
        assert!(FiniteGroup::from_table("X", labels.clone(), vec![vec![0, 1], vec![1, 1]]).is_err());
        assert!(FiniteGroup::from_table("X", labels, vec![vec![0, 1]]).is_err());
    }
}
