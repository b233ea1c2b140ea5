//! Finite simplicial complexes and their cohomology rings over a field.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::path::Path;

use num::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Q};
use crate::linalg::Matrix;
use crate::ring::GradedAlgebra;

/// Finite abstract simplicial complex given by its maximal simplices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimplicialComplex {
    pub name: String,
    #[serde(alias = "vertices")]
    pub vertex_count: usize,
    #[serde(alias = "simplices")]
    pub maximal_simplices: Vec<Vec<usize>>,
}

impl SimplicialComplex {
    /// Validates and canonicalizes (each simplex sorted, list sorted).
    pub fn new(name: impl Into<String>, vertex_count: usize, maximal_simplices: Vec<Vec<usize>>) -> Result<Self> {
        let name = name.into();
        if vertex_count == 0 || maximal_simplices.is_empty() {
            return Err(Error::InvalidComplex(format!("{name}: complex is empty")));
        }
        let mut simplices = Vec::with_capacity(maximal_simplices.len());
        for s in maximal_simplices {
            let mut s = s;
            s.sort_unstable();
            if s.is_empty() {
                return Err(Error::InvalidComplex(format!("{name}: empty simplex")));
            }
            if s.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidComplex(format!("{name}: repeated vertex in simplex {s:?}")));
            }
            if let Some(&v) = s.iter().find(|&&v| v >= vertex_count) {
                return Err(Error::InvalidComplex(format!(
                    "{name}: vertex index {v} out of range (vertex_count = {vertex_count})"
                )));
            }
            simplices.push(s);
        }
        simplices.sort();
        simplices.dedup();
        let mut used = vec![false; vertex_count];
        for s in &simplices {
            for &v in s {
                used[v] = true;
            }
        }
        if let Some(v) = used.iter().position(|u| !u) {
            return Err(Error::InvalidComplex(format!("{name}: vertex {v} lies in no maximal simplex")));
        }
        for (i, a) in simplices.iter().enumerate() {
            for (j, b) in simplices.iter().enumerate() {
                if i != j && a.len() <= b.len() && a.iter().all(|v| b.binary_search(v).is_ok()) {
                    return Err(Error::InvalidComplex(format!(
                        "{name}: maximal simplex {a:?} is contained in {b:?}"
                    )));
                }
            }
        }
        let mut parent: Vec<usize> = (0..vertex_count).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let n = p[y];
                p[y] = r;
                y = n;
            }
            r
        }
        for s in &simplices {
            for w in s.windows(2) {
                let (a, b) = (find(&mut parent, w[0]), find(&mut parent, w[1]));
                parent[a] = b;
            }
        }
        let root = find(&mut parent, 0);
        if (0..vertex_count).any(|v| find(&mut parent, v) != root) {
            return Err(Error::InvalidComplex(format!("{name}: complex is not path-connected")));
        }
        Ok(SimplicialComplex { name, vertex_count, maximal_simplices: simplices })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: SimplicialComplex = serde_json::from_str(text)?;
        Self::new(raw.name, raw.vertex_count, raw.maximal_simplices)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let text = std::fs::read_to_string(path.as_ref())
            .map_err(|e| Error::Io(format!("{}: {e}", path.as_ref().display())))?;
        Self::from_json(&text)
    }

    pub fn dimension(&self) -> usize {
        self.maximal_simplices.iter().map(Vec::len).max().unwrap_or(1) - 1
    }

    /// All faces, per dimension, in lexicographic order.
    pub fn faces(&self) -> Vec<Vec<Vec<usize>>> {
        let mut sets: Vec<BTreeSet<Vec<usize>>> = vec![BTreeSet::new(); self.dimension() + 1];
        for s in &self.maximal_simplices {
            let n = s.len();
            for mask in 1u64..(1u64 << n) {
                let face: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| s[i]).collect();
                sets[face.len() - 1].insert(face);
            }
        }
        sets.into_iter().map(|s| s.into_iter().collect()).collect()
    }

    pub fn face_counts(&self) -> Vec<usize> {
        self.faces().iter().map(Vec::len).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.face_counts()
            .iter()
            .enumerate()
            .map(|(d, &n)| if d % 2 == 0 { n as i64 } else { -(n as i64) })
            .sum()
    }
}

/// Simplicial cochain complex with coboundary matrices `delta[d]: C^d → C^{d+1}`.
#[derive(Clone, Debug)]
pub struct CochainComplex {
    pub field: FieldSpec,
    pub simplices: Vec<Vec<Vec<usize>>>,
    pub delta: Vec<Matrix>,
    index: Vec<HashMap<Vec<usize>, usize>>,
}

impl CochainComplex {
    pub fn dims(&self) -> Vec<usize> {
        self.simplices.iter().map(Vec::len).collect()
    }

    pub fn index_of(&self, simplex: &[usize]) -> Option<usize> {
        self.index.get(simplex.len().checked_sub(1)?)?.get(simplex).copied()
    }
}

pub fn cochain_complex(k: &SimplicialComplex, field: FieldSpec) -> Result<CochainComplex> {
    let field = field.validate()?;
    let k = SimplicialComplex::new(k.name.clone(), k.vertex_count, k.maximal_simplices.clone())?;
    let simplices = k.faces();
    let index: Vec<HashMap<Vec<usize>, usize>> = simplices
        .iter()
        .map(|ss| ss.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect())
        .collect();
    let mut delta = Vec::new();
    for d in 0..simplices.len().saturating_sub(1) {
        let mut m = Matrix::zeros(simplices[d + 1].len(), simplices[d].len());
        for (r, s) in simplices[d + 1].iter().enumerate() {
            for i in 0..s.len() {
                let mut face = s.clone();
                face.remove(i);
                let c = index[d][&face];
                let sign = if i % 2 == 0 { Q::one() } else { -Q::one() };
                m.set(r, c, field.reduce(&sign));
            }
        }
        delta.push(m);
    }
    Ok(CochainComplex { field, simplices, delta, index })
}

/// Betti numbers over the field.
pub fn betti_numbers(k: &SimplicialComplex, field: FieldSpec) -> Result<Vec<usize>> {
    let cc = cochain_complex(k, field)?;
    let dims = cc.dims();
    let ranks: Vec<usize> = cc.delta.iter().map(|m| m.rank(field)).collect();
    Ok((0..dims.len())
        .map(|d| {
            let z = dims[d] - ranks.get(d).copied().unwrap_or(0);
            let b = if d == 0 { 0 } else { ranks[d - 1] };
            z - b
        })
        .collect())
}

/// Cohomology data with chosen cocycle representatives.
#[derive(Clone, Debug)]
pub struct Cohomology {
    pub cochains: CochainComplex,
    /// Representative cocycles per degree; these give the ring basis.
    pub representatives: Vec<Vec<Vec<Q>>>,
    /// Independent coboundaries per degree.
    boundaries: Vec<Vec<Vec<Q>>>,
    pub ring: GradedAlgebra,
}

impl Cohomology {
    /// Coordinates of a cocycle in the representative basis.
    pub fn project(&self, d: usize, cocycle: &[Q]) -> Option<Vec<Q>> {
        project(self.cochains.field, &self.boundaries[d], &self.representatives[d], cocycle)
    }
}

fn project(field: FieldSpec, boundaries: &[Vec<Q>], reps: &[Vec<Q>], c: &[Q]) -> Option<Vec<Q>> {
    let cols: Vec<Vec<Q>> = boundaries.iter().chain(reps).cloned().collect();
    if cols.is_empty() {
        return c.iter().all(Zero::is_zero).then(Vec::new);
    }
    let m = Matrix::from_cols(c.len(), &cols);
    let y = m.solve(c, field)?;
    Some(y[boundaries.len()..].to_vec())
}

/// Alexander–Whitney cup product of a `p`-cochain and a `q`-cochain.
pub fn cup_cochains(cc: &CochainComplex, p: usize, x: &[Q], q: usize, y: &[Q]) -> Vec<Q> {
    let f = cc.field;
    let Some(target) = cc.simplices.get(p + q) else { return Vec::new() };
    target
        .iter()
        .map(|s| {
            let front = cc.index_of(&s[..=p]).expect("face");
            let back = cc.index_of(&s[p..]).expect("face");
            f.mul(&x[front], &y[back])
        })
        .collect()
}

pub fn cohomology(k: &SimplicialComplex, field: FieldSpec) -> Result<Cohomology> {
    let cc = cochain_complex(k, field)?;
    let dims = cc.dims();
    let top = dims.len() - 1;
    let mut reps = Vec::with_capacity(dims.len());
    let mut boundaries = Vec::with_capacity(dims.len());
    for d in 0..=top {
        let cocycles = if d < top {
            cc.delta[d].nullspace(field)
        } else {
            (0..dims[d])
                .map(|i| {
                    let mut v = vec![Q::zero(); dims[d]];
                    v[i] = Q::one();
                    v
                })
                .collect()
        };
        let bcols: Vec<Vec<Q>> = if d == 0 { Vec::new() } else { (0..dims[d - 1]).map(|j| cc.delta[d - 1].col(j)).collect() };
        let all: Vec<Vec<Q>> = bcols.iter().chain(&cocycles).cloned().collect();
        let mut m = Matrix::from_cols(dims[d], &all);
        let pivots = m.rref(field);
        let nb = bcols.len();
        boundaries.push(pivots.iter().filter(|&&p| p < nb).map(|&p| bcols[p].clone()).collect::<Vec<_>>());
        reps.push(pivots.iter().filter(|&&p| p >= nb).map(|&p| cocycles[p - nb].clone()).collect::<Vec<_>>());
    }
    let hdims: Vec<usize> = reps.iter().map(Vec::len).collect();
    if hdims[0] != 1 {
        return Err(Error::InvalidComplex(format!("{}: H^0 has dimension {}", k.name, hdims[0])));
    }
    let labels: Vec<Vec<String>> = hdims
        .iter()
        .enumerate()
        .map(|(d, &n)| if d == 0 { vec!["1".into()] } else { (0..n).map(|i| format!("h{d}_{i}")).collect() })
        .collect();
    let mut products = BTreeMap::new();
    for p in 1..=top {
        for q in 1..=top - p {
            if hdims[p + q] == 0 {
                continue;
            }
            for (i, x) in reps[p].iter().enumerate() {
                for (j, y) in reps[q].iter().enumerate() {
                    let c = cup_cochains(&cc, p, x, q, y);
                    let coords = project(field, &boundaries[p + q], &reps[p + q], &c)
                        .ok_or_else(|| Error::InvalidComplex("cup product is not a cocycle".into()))?;
                    products.insert((p, i, q, j), coords);
                }
            }
        }
    }
    let ring = GradedAlgebra::new_unchecked(format!("H*({};{})", k.name, field.label()), field, hdims, labels, products)?;
    Ok(Cohomology { cochains: cc, representatives: reps, boundaries, ring })
}

/// Cohomology ring with cup product.
pub fn cohomology_ring(k: &SimplicialComplex, field: FieldSpec) -> Result<GradedAlgebra> {
    Ok(cohomology(k, field)?.ring)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn circle() -> SimplicialComplex {
        SimplicialComplex::new("circle", 3, vec![vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap()
    }

    #[test]
    fn rejects_bad_input() {
        let e = SimplicialComplex::new("x", 4, vec![vec![0, 1], vec![2, 3]]).unwrap_err();
        assert!(e.to_string().contains("not path-connected"));
        let e = SimplicialComplex::new("x", 3, vec![vec![0, 1]]).unwrap_err();
        assert!(e.to_string().contains("lies in no maximal simplex"));
        let e = SimplicialComplex::new("x", 3, vec![vec![0, 1], vec![0, 1, 2]]).unwrap_err();
        assert!(e.to_string().contains("contained"));
        assert!(SimplicialComplex::new("x", 0, vec![]).is_err());
    }

    #[test]
    fn filled_triangle() {
        let k = SimplicialComplex::new("disk", 3, vec![vec![0, 1, 2]]).unwrap();
        let cc = cochain_complex(&k, FieldSpec::Rationals).unwrap();
        assert_eq!(cc.delta[0].rank(FieldSpec::Rationals), 2);
        assert_eq!(betti_numbers(&k, FieldSpec::Rationals).unwrap(), vec![1, 0, 0]);
    }

    #[test]
    fn circle_ring() {
        let r = cohomology_ring(&circle(), FieldSpec::Rationals).unwrap();
        assert_eq!(r.dims, vec![1, 1]);
        assert_eq!(r.mul_basis(1, 0, 1, 0), None);
    }
}
