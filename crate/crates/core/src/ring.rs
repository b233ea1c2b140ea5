//! Graded-commutative algebras, Künneth tensor powers, diagonal kernels and
//! the cup-length searches.

use std::collections::{BTreeMap, HashMap};
use std::path::Path;

use num::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{self, FieldSpec, Q};
use crate::linalg::{EchelonSpan, Matrix};

/// Key of a structure constant: `(degree_i, index_i, degree_j, index_j)`.
pub type ProductKey = (usize, usize, usize, usize);

/// Finite-dimensional connected graded-commutative algebra given by structure constants.
///
/// Degree 0 is one-dimensional and spanned by the unit. Only products of two
/// positive-degree basis elements are stored, and only when nonzero.
#[derive(Clone, Debug, PartialEq)]
pub struct GradedAlgebra {
    pub name: String,
    pub field: FieldSpec,
    pub dims: Vec<usize>,
    pub labels: Vec<Vec<String>>,
    products: BTreeMap<ProductKey, Vec<Q>>,
}

impl GradedAlgebra {
    /// Builds an algebra and checks unit, shape, associativity and graded commutativity.
    pub fn new(
        name: impl Into<String>,
        field: FieldSpec,
        dims: Vec<usize>,
        labels: Vec<Vec<String>>,
        products: BTreeMap<ProductKey, Vec<Q>>,
    ) -> Result<Self> {
        let a = Self::new_unchecked(name, field, dims, labels, products)?;
        a.check_axioms()?;
        Ok(a)
    }

    /// Builds an algebra checking shape only.
    pub fn new_unchecked(
        name: impl Into<String>,
        field: FieldSpec,
        mut dims: Vec<usize>,
        labels: Vec<Vec<String>>,
        products: BTreeMap<ProductKey, Vec<Q>>,
    ) -> Result<Self> {
        let field = field.validate()?;
        while dims.len() > 1 && dims.last() == Some(&0) {
            dims.pop();
        }
        if dims.first() != Some(&1) {
            return Err(Error::InvalidAlgebra("degree 0 must be one-dimensional".into()));
        }
        let labels = if labels.is_empty() {
            default_labels(&dims)
        } else {
            labels
        };
        if labels.len() < dims.len() || dims.iter().zip(&labels).any(|(d, l)| *d != l.len()) {
            return Err(Error::InvalidAlgebra("labels do not match dims".into()));
        }
        let labels = labels.into_iter().take(dims.len()).collect();
        let mut clean = BTreeMap::new();
        for ((d1, i, d2, j), v) in products {
            if d1 == 0 || d2 == 0 {
                return Err(Error::InvalidAlgebra("products with the unit are implicit".into()));
            }
            if d1 >= dims.len() || d2 >= dims.len() || i >= dims[d1] || j >= dims[d2] {
                return Err(Error::InvalidAlgebra(format!("product key ({d1},{i},{d2},{j}) out of range")));
            }
            let d = d1 + d2;
            let target = dims.get(d).copied().unwrap_or(0);
            if v.len() != target && !(target == 0 && v.iter().all(Zero::is_zero)) {
                return Err(Error::InvalidAlgebra(format!(
                    "product ({d1},{i},{d2},{j}) has {} coefficients, degree {d} has dimension {target}",
                    v.len()
                )));
            }
            let v: Vec<Q> = v.iter().map(|x| field.reduce(x)).collect();
            if v.iter().any(|x| !x.is_zero()) {
                clean.insert((d1, i, d2, j), v);
            }
        }
        Ok(GradedAlgebra { name: name.into(), field, dims, labels, products: clean })
    }

    /// Cohomology of a point.
    pub fn point(field: FieldSpec) -> Self {
        Self::new_unchecked("point", field, vec![1], vec![], BTreeMap::new()).expect("valid")
    }

    /// Cohomology of the `k`-sphere, `k >= 1`.
    pub fn sphere(k: usize, field: FieldSpec) -> Self {
        assert!(k >= 1);
        let mut dims = vec![0; k + 1];
        dims[0] = 1;
        dims[k] = 1;
        let mut labels = vec![Vec::new(); k + 1];
        labels[0] = vec!["1".into()];
        labels[k] = vec!["x".into()];
        Self::new_unchecked(format!("S{k}"), field, dims, labels, BTreeMap::new()).expect("valid")
    }

    /// Truncated polynomial algebra `F[x]/(x^{height+1})` with `|x| = deg`.
    pub fn truncated_polynomial(name: &str, deg: usize, height: usize, field: FieldSpec) -> Result<Self> {
        assert!(deg >= 1);
        let top = deg * height;
        let mut dims = vec![0; top + 1];
        let mut labels = vec![Vec::new(); top + 1];
        for k in 0..=height {
            dims[k * deg] = 1;
            labels[k * deg] = vec![match k {
                0 => "1".to_string(),
                1 => "x".to_string(),
                _ => format!("x^{k}"),
            }];
        }
        let mut products = BTreeMap::new();
        for a in 1..=height {
            for b in 1..=height - a {
                products.insert((a * deg, 0, b * deg, 0), vec![Q::one()]);
            }
        }
        Self::new(name, field, dims, labels, products)
    }

    pub fn top_degree(&self) -> usize {
        self.dims.len() - 1
    }

    pub fn dim(&self, d: usize) -> usize {
        self.dims.get(d).copied().unwrap_or(0)
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    /// Nonzero structure constants of positive-degree basis pairs.
    pub fn structure_constants(&self) -> &BTreeMap<ProductKey, Vec<Q>> {
        &self.products
    }

    pub fn basis_vector(&self, d: usize, i: usize) -> Vec<Q> {
        let mut v = vec![Q::zero(); self.dim(d)];
        v[i] = Q::one();
        v
    }

    /// Product of two basis elements; `None` when the degree exceeds the top degree.
    pub fn mul_basis(&self, d1: usize, i: usize, d2: usize, j: usize) -> Option<Vec<Q>> {
        let d = d1 + d2;
        if d > self.top_degree() {
            return None;
        }
        if d1 == 0 {
            return Some(self.basis_vector(d2, j));
        }
        if d2 == 0 {
            return Some(self.basis_vector(d1, i));
        }
        Some(
            self.products
                .get(&(d1, i, d2, j))
                .cloned()
                .unwrap_or_else(|| vec![Q::zero(); self.dim(d)]),
        )
    }

    /// Product of homogeneous elements; `None` above the top degree.
    pub fn mul(&self, d1: usize, x: &[Q], d2: usize, y: &[Q]) -> Option<Vec<Q>> {
        let d = d1 + d2;
        if d > self.top_degree() {
            return None;
        }
        let f = self.field;
        let mut out = vec![Q::zero(); self.dim(d)];
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = f.mul(a, b);
                let p = self.mul_basis(d1, i, d2, j).expect("degree checked");
                for (k, c) in p.iter().enumerate() {
                    if !c.is_zero() {
                        out[k] = f.add(&out[k], &f.mul(&ab, c));
                    }
                }
            }
        }
        Some(out)
    }

    /// Verifies associativity and graded commutativity on all basis pairs and triples.
    pub fn check_axioms(&self) -> Result<()> {
        let f = self.field;
        let basis: Vec<(usize, usize)> = self.positive_basis();
        for &(d1, i) in &basis {
            for &(d2, j) in &basis {
                let Some(xy) = self.mul_basis(d1, i, d2, j) else { continue };
                let yx = self.mul_basis(d2, j, d1, i).expect("same degree");
                let sign = if (d1 * d2) % 2 == 1 { -Q::one() } else { Q::one() };
                let expect: Vec<Q> = yx.iter().map(|c| f.mul(&sign, c)).collect();
                if xy != expect {
                    return Err(Error::InvalidAlgebra(format!(
                        "graded commutativity fails for {} and {}",
                        self.labels[d1][i], self.labels[d2][j]
                    )));
                }
            }
        }
        for &(d1, i) in &basis {
            for &(d2, j) in &basis {
                for &(d3, k) in &basis {
                    if d1 + d2 + d3 > self.top_degree() {
                        continue;
                    }
                    let xy = self.mul_basis(d1, i, d2, j).expect("fits");
                    let left = self.mul(d1 + d2, &xy, d3, &self.basis_vector(d3, k)).expect("fits");
                    let yz = self.mul_basis(d2, j, d3, k).expect("fits");
                    let right = self.mul(d1, &self.basis_vector(d1, i), d2 + d3, &yz).expect("fits");
                    if left != right {
                        return Err(Error::InvalidAlgebra(format!(
                            "associativity fails for ({}, {}, {})",
                            self.labels[d1][i], self.labels[d2][j], self.labels[d3][k]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// All positive-degree basis elements as `(degree, index)`, in degree-then-index order.
    pub fn positive_basis(&self) -> Vec<(usize, usize)> {
        (1..self.dims.len())
            .flat_map(|d| (0..self.dims[d]).map(move |i| (d, i)))
            .collect()
    }

    /// Renders a homogeneous element with basis labels.
    pub fn format_element(&self, d: usize, v: &[Q]) -> String {
        let mut terms = Vec::new();
        for (i, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let l = &self.labels[d][i];
            if c.is_one() {
                terms.push(l.clone());
            } else if *c == -Q::one() {
                terms.push(format!("-{l}"));
            } else {
                terms.push(format!("{}*{l}", field::fmt_q(c)));
            }
        }
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ").replace("+ -", "- ")
        }
    }

    /// Loads a ring file.
    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let text = std::fs::read_to_string(path.as_ref())
            .map_err(|e| Error::Io(format!("{}: {e}", path.as_ref().display())))?;
        Self::from_json(&text)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: RingFile = serde_json::from_str(text)?;
        file.into_algebra()
    }

    pub fn to_file(&self) -> RingFile {
        RingFile {
            name: self.name.clone(),
            field: self.field,
            dims: self.dims.clone(),
            labels: self.labels.clone(),
            products: self
                .products
                .iter()
                .map(|(&(d1, i, d2, j), v)| ProductEntry { left: (d1, i), right: (d2, j), value: v.clone() })
                .collect(),
        }
    }
}

fn default_labels(dims: &[usize]) -> Vec<Vec<String>> {
    dims.iter()
        .enumerate()
        .map(|(d, &n)| {
            if d == 0 {
                vec!["1".to_string()]
            } else {
                (0..n).map(|i| format!("e{d}_{i}")).collect()
            }
        })
        .collect()
}

/// On-disk ring description.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RingFile {
    pub name: String,
    pub field: FieldSpec,
    pub dims: Vec<usize>,
    #[serde(default)]
    pub labels: Vec<Vec<String>>,
    #[serde(default)]
    pub products: Vec<ProductEntry>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ProductEntry {
    pub left: (usize, usize),
    pub right: (usize, usize),
    #[serde(with = "field::q_vec")]
    pub value: Vec<Q>,
}

impl RingFile {
    /// Builds the algebra; a missing mirrored product is filled in by graded commutativity.
    pub fn into_algebra(self) -> Result<GradedAlgebra> {
        let mut products = BTreeMap::new();
        for p in &self.products {
            products.insert((p.left.0, p.left.1, p.right.0, p.right.1), p.value.clone());
        }
        for p in &self.products {
            let key = (p.right.0, p.right.1, p.left.0, p.left.1);
            products.entry(key).or_insert_with(|| {
                let odd = (p.left.0 * p.right.0) % 2 == 1;
                let v = p.value.iter().map(|c| if odd { -c.clone() } else { c.clone() }).collect();
                v
            });
        }
        GradedAlgebra::new(self.name, self.field, self.dims, self.labels, products)
    }
}

/// Tensor product algebra remembering which factor basis elements form each basis element.
#[derive(Clone, Debug)]
pub struct TensorAlgebra {
    pub algebra: GradedAlgebra,
    /// For each degree, the factor tuples `(degree, index)` of each basis element.
    pub tuples: Vec<Vec<Vec<(usize, usize)>>>,
}

impl TensorAlgebra {
    pub fn factors(&self) -> usize {
        self.tuples[0][0].len()
    }

    /// Index of a basis tuple in its degree.
    pub fn index_of(&self, tuple: &[(usize, usize)]) -> Option<(usize, usize)> {
        let d: usize = tuple.iter().map(|t| t.0).sum();
        let i = self.tuples.get(d)?.iter().position(|t| t == tuple)?;
        Some((d, i))
    }
}

/// Künneth tensor product of connected algebras over a common field with the Koszul sign rule.
pub fn tensor_product(factors: &[&GradedAlgebra]) -> Result<TensorAlgebra> {
    let first = factors.first().ok_or_else(|| Error::InvalidAlgebra("empty tensor product".into()))?;
    let field = first.field;
    if factors.iter().any(|a| a.field != field) {
        return Err(Error::InvalidAlgebra("tensor factors over different fields".into()));
    }
    let top: usize = factors.iter().map(|a| a.top_degree()).sum();
    let mut all: Vec<Vec<(usize, usize)>> = vec![Vec::new()];
    for a in factors {
        let mut next = Vec::new();
        for t in &all {
            for d in 0..a.dims.len() {
                for i in 0..a.dims[d] {
                    let mut u = t.clone();
                    u.push((d, i));
                    next.push(u);
                }
            }
        }
        all = next;
    }
    let mut tuples: Vec<Vec<Vec<(usize, usize)>>> = vec![Vec::new(); top + 1];
    for t in all {
        let d: usize = t.iter().map(|x| x.0).sum();
        tuples[d].push(t);
    }
    let index: Vec<HashMap<Vec<(usize, usize)>, usize>> = tuples
        .iter()
        .map(|ts| ts.iter().enumerate().map(|(i, t)| (t.clone(), i)).collect())
        .collect();
    let dims: Vec<usize> = tuples.iter().map(Vec::len).collect();
    let labels: Vec<Vec<String>> = tuples
        .iter()
        .map(|ts| {
            ts.iter()
                .map(|t| {
                    t.iter()
                        .zip(factors)
                        .map(|(&(d, i), a)| a.labels[d][i].clone())
                        .collect::<Vec<_>>()
                        .join("⊗")
                })
                .collect()
        })
        .collect();
    let mut products = BTreeMap::new();
    for d1 in 1..=top {
        for (i, a) in tuples[d1].iter().enumerate() {
            for d2 in 1..=top - d1 {
                for (j, b) in tuples[d2].iter().enumerate() {
                    if let Some(v) = tuple_product(factors, a, b, &index[d1 + d2], dims[d1 + d2]) {
                        products.insert((d1, i, d2, j), v);
                    }
                }
            }
        }
    }
    let name = factors.iter().map(|a| a.name.as_str()).collect::<Vec<_>>().join("×");
    let algebra = GradedAlgebra::new_unchecked(name, field, dims, labels, products)?;
    Ok(TensorAlgebra { algebra, tuples })
}

fn tuple_product(
    factors: &[&GradedAlgebra],
    a: &[(usize, usize)],
    b: &[(usize, usize)],
    index: &HashMap<Vec<(usize, usize)>, usize>,
    target_dim: usize,
) -> Option<Vec<Q>> {
    let field = factors[0].field;
    let mut parity = 0usize;
    for (i, ai) in a.iter().enumerate() {
        for bj in b.iter().take(i) {
            parity += ai.0 * bj.0;
        }
    }
    let mut per_factor: Vec<Vec<(usize, Q)>> = Vec::with_capacity(a.len());
    let mut degs = Vec::with_capacity(a.len());
    for (k, alg) in factors.iter().enumerate() {
        let v = alg.mul_basis(a[k].0, a[k].1, b[k].0, b[k].1)?;
        let nz: Vec<(usize, Q)> = v.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
        if nz.is_empty() {
            return None;
        }
        per_factor.push(nz);
        degs.push(a[k].0 + b[k].0);
    }
    let sign = if parity % 2 == 1 { field.neg(&Q::one()) } else { Q::one() };
    let mut out = vec![Q::zero(); target_dim];
    let mut stack: Vec<(Vec<(usize, usize)>, Q)> = vec![(Vec::new(), sign)];
    for (k, nz) in per_factor.iter().enumerate() {
        let mut next = Vec::with_capacity(stack.len() * nz.len());
        for (t, c) in &stack {
            for (i, v) in nz {
                let mut u = t.clone();
                u.push((degs[k], *i));
                next.push((u, field.mul(c, v)));
            }
        }
        stack = next;
    }
    for (t, c) in stack {
        let idx = index[&t];
        out[idx] = field.add(&out[idx], &c);
    }
    if out.iter().all(Zero::is_zero) {
        None
    } else {
        Some(out)
    }
}

/// `m`-fold tensor power. For `m = 1` the algebra itself, with trivial tuples.
pub fn tensor_power(a: &GradedAlgebra, m: usize) -> Result<TensorAlgebra> {
    if m == 0 {
        return Err(Error::InvalidAlgebra("tensor power needs m >= 1".into()));
    }
    if m == 1 {
        let tuples = a
            .dims
            .iter()
            .enumerate()
            .map(|(d, &n)| (0..n).map(|i| vec![(d, i)]).collect())
            .collect();
        return Ok(TensorAlgebra { algebra: a.clone(), tuples });
    }
    let factors: Vec<&GradedAlgebra> = std::iter::repeat_n(a, m).collect();
    tensor_product(&factors)
}

/// Per-degree basis of a two-sided ideal inside an ambient algebra.
#[derive(Clone, Debug, PartialEq)]
pub struct IdealBasis {
    pub field: FieldSpec,
    pub per_degree: Vec<Vec<Vec<Q>>>,
}

impl IdealBasis {
    pub fn dims(&self) -> Vec<usize> {
        self.per_degree.iter().map(Vec::len).collect()
    }

    pub fn contains(&self, d: usize, v: &[Q]) -> bool {
        if v.iter().all(Zero::is_zero) {
            return true;
        }
        let Some(vs) = self.per_degree.get(d) else { return false };
        let mut span = EchelonSpan::new(self.field, v.len());
        for b in vs {
            span.insert(b);
        }
        span.contains(v)
    }

    /// Checks closure under left and right multiplication by every basis element of `ambient`.
    pub fn is_closed_in(&self, ambient: &GradedAlgebra) -> bool {
        for (d, vs) in self.per_degree.iter().enumerate() {
            for v in vs {
                for (e, n) in ambient.dims.iter().enumerate() {
                    for i in 0..*n {
                        let b = ambient.basis_vector(e, i);
                        for p in [ambient.mul(e, &b, d, v), ambient.mul(d, v, e, &b)].into_iter().flatten() {
                            if !self.contains(d + e, &p) {
                                return false;
                            }
                        }
                    }
                }
            }
        }
        true
    }
}

/// Matrix of the `m`-fold multiplication `A^{⊗m} → A` restricted to degree `d`.
pub fn multiplication_matrix(a: &GradedAlgebra, power: &TensorAlgebra, d: usize) -> Matrix {
    let rows = a.dim(d);
    let cols = power.algebra.dim(d);
    let mut m = Matrix::zeros(rows, cols);
    if d > a.top_degree() {
        return m;
    }
    for (j, t) in power.tuples[d].iter().enumerate() {
        let mut deg = 0usize;
        let mut acc = vec![Q::one()];
        let mut ok = true;
        for &(e, i) in t {
            match a.mul(deg, &acc, e, &a.basis_vector(e, i)) {
                Some(v) => {
                    acc = v;
                    deg += e;
                }
                None => {
                    ok = false;
                    break;
                }
            }
        }
        if ok {
            for (i, c) in acc.into_iter().enumerate() {
                m.set(i, j, c);
            }
        }
    }
    m
}

/// Kernel of the `m`-fold multiplication map, degree by degree.
pub fn diagonal_kernel(a: &GradedAlgebra, m: usize) -> Result<(TensorAlgebra, IdealBasis)> {
    if m < 2 {
        return Err(Error::InvalidAlgebra("diagonal kernel needs m >= 2".into()));
    }
    let power = tensor_power(a, m)?;
    let per_degree = (0..power.algebra.dims.len())
        .map(|d| multiplication_matrix(a, &power, d).nullspace(a.field))
        .collect();
    let kernel = IdealBasis { field: a.field, per_degree };
    Ok((power, kernel))
}

/// The elements `x_i − x_m` with `x` a positive-degree basis element placed in factor `i`.
pub fn standard_zero_divisors(a: &GradedAlgebra, power: &TensorAlgebra) -> Vec<(usize, Vec<Q>)> {
    let m = power.factors();
    let f = a.field;
    let mut out = Vec::new();
    for (d, i) in a.positive_basis() {
        let place = |k: usize| {
            let mut t = vec![(0usize, 0usize); m];
            t[k] = (d, i);
            power.index_of(&t).expect("tuple exists").1
        };
        for k in 0..m - 1 {
            let mut v = vec![Q::zero(); power.algebra.dim(d)];
            v[place(k)] = Q::one();
            let last = place(m - 1);
            v[last] = f.sub(&v[last], &Q::one());
            out.push((d, v));
        }
    }
    out
}

/// Limits for the ideal-power searches.
#[derive(Clone, Copy, Debug)]
pub struct SearchConfig {
    pub max_length: usize,
    pub node_budget: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { max_length: 8, node_budget: 1_000_000 }
    }
}

/// Outcome of a cup-length style search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CupLengthResult {
    pub length: usize,
    /// True when a limit was hit; `length` is then only a lower bound.
    pub truncated: bool,
    /// Factors of a nonzero product of maximal length, rendered with basis labels.
    pub witness: Vec<String>,
    pub witness_degree: usize,
    pub products_evaluated: u64,
}

#[derive(Clone)]
struct Gen {
    degree: usize,
    vector: Vec<Q>,
    label: String,
}

#[derive(Clone)]
struct Term {
    degree: usize,
    vector: Vec<Q>,
    factors: Vec<usize>,
}

/// Largest `k` such that the `k`-th power of the ideal spanned by `gens` is nonzero.
///
/// Powers are tracked as spans: the `(k+1)`-st power is spanned by products of a
/// generator with a spanning set of the `k`-th power, so each level needs at most
/// `|gens| * dim` products.
fn ideal_power_length(alg: &GradedAlgebra, gens: &[Gen], cfg: SearchConfig) -> CupLengthResult {
    let top = alg.top_degree();
    let mut evaluated = 0u64;
    let mut level: Vec<Term> = Vec::new();
    let mut spans: Vec<EchelonSpan> = (0..=top).map(|d| EchelonSpan::new(alg.field, alg.dim(d))).collect();
    for (g, gen) in gens.iter().enumerate() {
        if gen.degree == 0 || gen.degree > top {
            continue;
        }
        if spans[gen.degree].insert(&gen.vector) {
            level.push(Term { degree: gen.degree, vector: gen.vector.clone(), factors: vec![g] });
        }
    }
    let witness_of = |t: &Term| t.factors.iter().map(|&g| gens[g].label.clone()).collect::<Vec<_>>();
    if level.is_empty() {
        return CupLengthResult { length: 0, truncated: false, witness: vec![], witness_degree: 0, products_evaluated: 0 };
    }
    let min_gen = gens.iter().map(|g| g.degree).filter(|&d| d > 0).min().unwrap_or(1);
    let mut length = 1;
    let mut best = level[0].clone();
    loop {
        let mut spans: Vec<EchelonSpan> = (0..=top).map(|d| EchelonSpan::new(alg.field, alg.dim(d))).collect();
        let mut next = Vec::new();
        for (g, gen) in gens.iter().enumerate() {
            if gen.degree == 0 {
                continue;
            }
            for t in &level {
                if gen.degree + t.degree > top {
                    continue;
                }
                evaluated += 1;
                if evaluated > cfg.node_budget {
                    return CupLengthResult {
                        length,
                        truncated: true,
                        witness: witness_of(&best),
                        witness_degree: best.degree,
                        products_evaluated: evaluated,
                    };
                }
                let p = alg.mul(gen.degree, &gen.vector, t.degree, &t.vector).expect("degree checked");
                let d = gen.degree + t.degree;
                if spans[d].insert(&p) {
                    let mut factors = vec![g];
                    factors.extend(&t.factors);
                    next.push(Term { degree: d, vector: p, factors });
                }
            }
        }
        if next.is_empty() {
            break;
        }
        if length >= cfg.max_length {
            return CupLengthResult {
                length,
                truncated: true,
                witness: witness_of(&best),
                witness_degree: best.degree,
                products_evaluated: evaluated,
            };
        }
        // Any further factor raises the degree by at least `min_gen`.
        length += 1;
        best = next[0].clone();
        level = next;
        if level.iter().all(|t| t.degree + min_gen > top) {
            break;
        }
    }
    CupLengthResult {
        length,
        truncated: false,
        witness: witness_of(&best),
        witness_degree: best.degree,
        products_evaluated: evaluated,
    }
}

/// Longest nonzero product of positive-degree classes.
pub fn cup_length(a: &GradedAlgebra) -> usize {
    cup_length_search(a, SearchConfig::default()).length
}

pub fn cup_length_search(a: &GradedAlgebra, cfg: SearchConfig) -> CupLengthResult {
    let gens: Vec<Gen> = a
        .positive_basis()
        .into_iter()
        .map(|(d, i)| Gen { degree: d, vector: a.basis_vector(d, i), label: a.labels[d][i].clone() })
        .collect();
    ideal_power_length(a, &gens, cfg)
}

/// Cup length of the kernel of the `m`-fold multiplication map.
pub fn zero_divisor_cup_length(a: &GradedAlgebra, m: usize) -> Result<usize> {
    Ok(zero_divisor_search(a, m, SearchConfig::default())?.length)
}

pub fn zero_divisor_search(a: &GradedAlgebra, m: usize, cfg: SearchConfig) -> Result<CupLengthResult> {
    let (power, kernel) = diagonal_kernel(a, m)?;
    let alg = &power.algebra;
    let mut gens = Vec::new();
    let mut spans: Vec<EchelonSpan> = alg.dims.iter().map(|&n| EchelonSpan::new(a.field, n)).collect();
    for (d, v) in standard_zero_divisors(a, &power) {
        if spans[d].insert(&v) {
            gens.push(Gen { degree: d, label: alg.format_element(d, &v), vector: v });
        }
    }
    for (d, vs) in kernel.per_degree.iter().enumerate() {
        for v in vs {
            if spans[d].insert(v) {
                gens.push(Gen { degree: d, label: alg.format_element(d, v), vector: v.clone() });
            }
        }
    }
    Ok(ideal_power_length(alg, &gens, cfg))
}

/// Least positive degree with nonzero cohomology, if any.
pub fn has_nonzero_positive_degree(a: &GradedAlgebra) -> Option<usize> {
    (1..a.dims.len()).find(|&d| a.dims[d] > 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::qi;

    const Q_: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn sphere_rings() {
        assert_eq!(cup_length(&GradedAlgebra::sphere(1, Q_)), 1);
        assert_eq!(cup_length(&GradedAlgebra::point(Q_)), 0);
        assert_eq!(has_nonzero_positive_degree(&GradedAlgebra::sphere(2, Q_)), Some(2));
        assert_eq!(has_nonzero_positive_degree(&GradedAlgebra::point(Q_)), None);
    }

    #[test]
    fn koszul_sign_on_basis() {
        let s1 = GradedAlgebra::sphere(1, Q_);
        let t = tensor_power(&s1, 2).unwrap();
        let a1 = t.index_of(&[(1, 0), (0, 0)]).unwrap();
        let b1 = t.index_of(&[(0, 0), (1, 0)]).unwrap();
        let ab = t.index_of(&[(1, 0), (1, 0)]).unwrap();
        let x = t.algebra.mul_basis(1, a1.1, 1, b1.1).unwrap();
        let y = t.algebra.mul_basis(1, b1.1, 1, a1.1).unwrap();
        assert_eq!(x[ab.1], qi(1));
        assert_eq!(y[ab.1], qi(-1));
        t.algebra.check_axioms().unwrap();
    }

    #[test]
    fn zcl_small() {
        assert_eq!(zero_divisor_cup_length(&GradedAlgebra::sphere(1, Q_), 2).unwrap(), 1);
        assert_eq!(zero_divisor_cup_length(&GradedAlgebra::sphere(2, Q_), 2).unwrap(), 2);
        assert_eq!(zero_divisor_cup_length(&GradedAlgebra::sphere(2, FieldSpec::Prime(2)), 2).unwrap(), 1);
    }

    #[test]
    fn truncated_polynomial_cup_length() {
        let cp2 = GradedAlgebra::truncated_polynomial("CP2", 2, 2, Q_).unwrap();
        assert_eq!(cup_length(&cp2), 2);
        assert_eq!(cp2.dims, vec![1, 0, 1, 0, 1]);
    }

    #[test]
    fn max_length_truncates() {
        let cp = GradedAlgebra::truncated_polynomial("CP5", 2, 5, Q_).unwrap();
        let r = cup_length_search(&cp, SearchConfig { max_length: 3, node_budget: 1000 });
        assert_eq!(r.length, 3);
        assert!(r.truncated);
        let r = cup_length_search(&cp, SearchConfig::default());
        assert_eq!((r.length, r.truncated), (5, false));
    }
}
