//! Worked examples with exact structure constants: group algebras, dual
//! group algebras, the four-dimensional Sweedler algebra, a genuinely
//! quasi-Hopf twist of k^(Z/2), groupoid algebras, super and braided-line
//! examples, and module/comodule algebras over them.
//!
//! Every constructor returns data ready for the corresponding verifier; the
//! named catalog at the bottom drives the CLI and the acceptance suite.

use crate::algebra::AlgebraData;
use crate::braided::{
    braided_smash, BObject, BraidedBicomoduleWithV, BraidedContext, BraidedHopfData,
    BraidedYdAlgebraData,
};
use crate::elem::Elem;
use crate::error::{HopfError, Result};
use crate::format::AlgebraFile;
use crate::linmap::{invert_map, LinearMap};
use crate::quasi::{yd_smash_bicomodule, ModuleAlgebraData, QuasiHopfData, YdAlgebraData};
use crate::report::Runner;
use crate::scalar::{Field, Scalar};
use crate::tensor::Tensor;
use crate::weak::{
    counital_maps, WeakBicomoduleWithV, WeakHopfData, WeakModuleAlgebraData, WeakYdAlgebraData,
};

fn check_char_not_2(field: Field, what: &str) -> Result<()> {
    if field == Field::Prime(2) {
        return Err(HopfError::Invalid(format!("{what} requires a field of characteristic ≠ 2")));
    }
    Ok(())
}

fn one(field: Field) -> Scalar {
    field.one()
}

fn int(field: Field, n: i64) -> Scalar {
    field.from_i64(n)
}

/// The group algebra k[Z/n] with basis 1, g, g², …: Δ(g) = g⊗g, ε(g) = 1,
/// S(g) = g⁻¹, trivial associator.
pub fn group_algebra(n: usize, field: Field) -> Result<QuasiHopfData> {
    if n == 0 {
        return Err(HopfError::Invalid("group order must be positive".into()));
    }
    let labels: Vec<String> = (0..n)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "g".to_string(),
            _ => format!("g{i}"),
        })
        .collect();
    let mul = Tensor::from_fn(&[n, n, n], field, |idx| {
        if (idx[0] + idx[1]) % n == idx[2] { one(field) } else { field.zero() }
    });
    let unit = Tensor::from_fn(&[n], field, |idx| if idx[0] == 0 { one(field) } else { field.zero() });
    let alg = AlgebraData::new(labels, mul, unit)?;
    let comul = Tensor::from_fn(&[n, n, n], field, |idx| {
        if idx[1] == idx[0] && idx[2] == idx[0] { one(field) } else { field.zero() }
    });
    let counit = Tensor::from_fn(&[n], field, |_| one(field));
    let s = LinearMap::from_fn(n, n, field, |r, c| if r == (n - c) % n { one(field) } else { field.zero() });
    QuasiHopfData::from_hopf(alg, comul, counit, s)
}

/// The dual group algebra k^(Z/n) with idempotent basis p₀, …, p_{n−1}:
/// Δ(p_c) = Σ_{a+b=c} p_a⊗p_b, ε(p_c) = [c = 0], S(p_c) = p_{−c}.
pub fn dual_group_algebra(n: usize, field: Field) -> Result<QuasiHopfData> {
    if n == 0 {
        return Err(HopfError::Invalid("group order must be positive".into()));
    }
    let labels: Vec<String> = (0..n).map(|i| format!("p{i}")).collect();
    let mul = Tensor::from_fn(&[n, n, n], field, |idx| {
        if idx[0] == idx[1] && idx[0] == idx[2] { one(field) } else { field.zero() }
    });
    let unit = Tensor::from_fn(&[n], field, |_| one(field));
    let alg = AlgebraData::new(labels, mul, unit)?;
    let comul = Tensor::from_fn(&[n, n, n], field, |idx| {
        if (idx[1] + idx[2]) % n == idx[0] { one(field) } else { field.zero() }
    });
    let counit = Tensor::from_fn(&[n], field, |idx| if idx[0] == 0 { one(field) } else { field.zero() });
    let s = LinearMap::from_fn(n, n, field, |r, c| if r == (n - c) % n { one(field) } else { field.zero() });
    QuasiHopfData::from_hopf(alg, comul, counit, s)
}

/// The four-dimensional Sweedler Hopf algebra k⟨g, x⟩/(g² = 1, x² = 0,
/// xg = −gx), basis 1, x, g, gx; Δ(g) = g⊗g, Δ(x) = x⊗1 + g⊗x,
/// S(g) = g, S(x) = −gx. Requires characteristic ≠ 2.
pub fn sweedler(field: Field) -> Result<QuasiHopfData> {
    check_char_not_2(field, "the Sweedler algebra")?;
    let d = 4usize;
    // Basis index a·2 + b encodes gᵃxᵇ.
    let labels = vec!["1".to_string(), "x".to_string(), "g".to_string(), "gx".to_string()];
    let mul = Tensor::from_fn(&[d, d, d], field, |idx| {
        let (a, b) = (idx[0] / 2, idx[0] % 2);
        let (c, e) = (idx[1] / 2, idx[1] % 2);
        if b + e >= 2 {
            return field.zero();
        }
        let k = ((a + c) % 2) * 2 + (b + e);
        if idx[2] != k {
            return field.zero();
        }
        if (b * c) % 2 == 1 { int(field, -1) } else { one(field) }
    });
    let unit = Tensor::from_fn(&[d], field, |idx| if idx[0] == 0 { one(field) } else { field.zero() });
    let alg = AlgebraData::new(labels, mul, unit)?;

    let mut comul = Tensor::zeros(&[d, d, d], field);
    // Δ(1) = 1⊗1
    comul.set(&[0, 0, 0], one(field));
    // Δ(x) = x⊗1 + g⊗x
    comul.set(&[1, 1, 0], one(field));
    comul.set(&[1, 2, 1], one(field));
    // Δ(g) = g⊗g
    comul.set(&[2, 2, 2], one(field));
    // Δ(gx) = gx⊗g + 1⊗gx
    comul.set(&[3, 3, 2], one(field));
    comul.set(&[3, 0, 3], one(field));

    let counit = Tensor::from_fn(&[d], field, |idx| if idx[0] % 2 == 0 { one(field) } else { field.zero() });

    let mut s = LinearMap::zeros(d, d, field);
    s.set(0, 0, one(field)); // S(1) = 1
    s.set(3, 1, int(field, -1)); // S(x) = −gx
    s.set(2, 2, one(field)); // S(g) = g
    s.set(1, 3, one(field)); // S(gx) = x
    QuasiHopfData::from_hopf(alg, comul, counit, s)
}

/// The twisted dual group algebra k^(Z/2) with the nontrivial associator
/// Φ = Σ (−1)^(abc) p_a⊗p_b⊗p_c, antipode S = id, α = p₀ − p₁, β = 1.
/// This is a genuinely quasi-Hopf algebra (the associator is a nontrivial
/// 3-cocycle, not a coboundary). Requires characteristic ≠ 2.
pub fn quasi_kz2_twisted(field: Field) -> Result<QuasiHopfData> {
    check_char_not_2(field, "the twisted k^(Z/2)")?;
    let plain = dual_group_algebra(2, field)?;
    let phi = Tensor::from_fn(&[2, 2, 2], field, |idx| {
        if idx[0] * idx[1] * idx[2] == 1 { int(field, -1) } else { one(field) }
    });
    let alpha = Tensor::from_fn(&[2], field, |idx| if idx[0] == 0 { one(field) } else { int(field, -1) });
    let beta = Tensor::from_fn(&[2], field, |_| one(field));
    let s = LinearMap::identity(2, field);
    QuasiHopfData::new(
        plain.alg,
        plain.comul,
        plain.counit,
        phi.clone(),
        phi,
        s.clone(),
        s,
        alpha,
        beta,
    )
}

/// The trivial one-dimensional Yetter–Drinfeld module algebra A = k over
/// any quasi-Hopf algebra: h·1 = ε(h)1 and λ(1) = 1⊗1.
pub fn trivial_yd_algebra(h: &QuasiHopfData) -> Result<YdAlgebraData> {
    let f = h.field();
    let dh = h.dim();
    let mul = Tensor::from_fn(&[1, 1, 1], f, |_| one(f));
    let unit = Tensor::from_fn(&[1], f, |_| one(f));
    let alg = AlgebraData::new(vec!["1".to_string()], mul, unit)?;
    let action = Tensor::from_fn(&[dh, 1, 1], f, |idx| h.eps_basis(idx[0]));
    let mut coaction = LinearMap::zeros(dh, 1, f);
    for (idx, c) in h.alg.unit.iter_nonzero() {
        coaction.set(idx[0], 0, c.clone());
    }
    Ok(YdAlgebraData { alg, action, coaction })
}

/// The graded line k[y]/(y²) as a Yetter–Drinfeld module algebra over
/// k[Z/2]: g·y = −y and λ(y) = g⊗y. Requires characteristic ≠ 2.
pub fn yd_line_over_group_z2(field: Field) -> Result<(QuasiHopfData, YdAlgebraData)> {
    check_char_not_2(field, "the graded line over k[Z/2]")?;
    let h = group_algebra(2, field)?;
    let a = graded_line(field)?;
    let mut action = Tensor::zeros(&[2, 2, 2], field);
    action.set(&[0, 0, 0], one(field));
    action.set(&[0, 1, 1], one(field));
    action.set(&[1, 0, 0], one(field));
    action.set(&[1, 1, 1], int(field, -1));
    let mut coaction = LinearMap::zeros(4, 2, field);
    coaction.set(0, 0, one(field)); // λ(1) = 1⊗1
    coaction.set(3, 1, one(field)); // λ(y) = g⊗y
    Ok((h, YdAlgebraData { alg: a, action, coaction }))
}

/// The graded line k[y]/(y²) as a Yetter–Drinfeld module algebra over the
/// Sweedler algebra: g·y = −y, x·y = 0, λ(y) = g⊗y. Requires
/// characteristic ≠ 2.
pub fn yd_line_over_sweedler(field: Field) -> Result<(QuasiHopfData, YdAlgebraData)> {
    let h = sweedler(field)?;
    let a = graded_line(field)?;
    let mut action = Tensor::zeros(&[4, 2, 2], field);
    // 1 acts as the identity.
    action.set(&[0, 0, 0], one(field));
    action.set(&[0, 1, 1], one(field));
    // g acts by the grading sign.
    action.set(&[2, 0, 0], one(field));
    action.set(&[2, 1, 1], int(field, -1));
    // x and gx act by zero.
    let mut coaction = LinearMap::zeros(8, 2, field);
    coaction.set(0, 0, one(field)); // λ(1) = 1⊗1
    coaction.set(5, 1, one(field)); // λ(y) = g⊗y (g has basis index 2)
    Ok((h, YdAlgebraData { alg: a, action, coaction }))
}

/// k^(Z/2) as a Yetter–Drinfeld module algebra over its own quasi-Hopf
/// twist: trivial action h·a = ε(h)a and coaction λ = Δ. Requires
/// characteristic ≠ 2.
pub fn yd_diag_over_twisted(field: Field) -> Result<(QuasiHopfData, YdAlgebraData)> {
    let h = quasi_kz2_twisted(field)?;
    let alg = h.alg.clone();
    let action = Tensor::from_fn(&[2, 2, 2], field, |idx| {
        if idx[1] == idx[2] { h.eps_basis(idx[0]) } else { field.zero() }
    });
    let coaction = h.comul_map();
    Ok((h, YdAlgebraData { alg, action, coaction }))
}

fn graded_line(field: Field) -> Result<AlgebraData> {
    let mul = Tensor::from_fn(&[2, 2, 2], field, |idx| {
        // y² = 0; 1 is the unit.
        if idx[0] + idx[1] == idx[2] && idx[0] + idx[1] <= 1 { one(field) } else { field.zero() }
    });
    let unit = Tensor::from_fn(&[2], field, |idx| if idx[0] == 0 { one(field) } else { field.zero() });
    AlgebraData::new(vec!["1".to_string(), "y".to_string()], mul, unit)
}

/// The left regular action of a quasi-Hopf algebra on itself, packaged as a
/// candidate module algebra. For noncommutative or non-cocommutative H this
/// is not a module algebra; it exists as a documented failing input.
pub fn left_regular_module_algebra(h: &QuasiHopfData) -> ModuleAlgebraData {
    let d = h.dim();
    let action = Tensor::from_fn(&[d, d, d], h.field(), |idx| h.alg.mul.get(idx).clone());
    ModuleAlgebraData { alg: h.alg.clone(), action }
}

/// Invert an antipode candidate; shared by constructors that derive S⁻¹.
pub fn antipode_inverse(s: &LinearMap) -> Result<LinearMap> {
    invert_map(s)
}

/// The groupoid algebra of the pair groupoid on `n` objects crossed with
/// Z/m: basis (x, g, y) with x, y objects and g in Z/m, product
/// (x,g,y)(x',g',y') = δ_{y,x'} (x, g+g', y'), unit Σ_x (x,0,x), group-like
/// comultiplication, ε = 1 on every morphism, and S((x,g,y)) = (y,−g,x).
/// For n ≥ 2 this is a genuinely weak Hopf algebra: Δ(1) ≠ 1⊗1 and the
/// counital subalgebras H_t = H_s = span{(x,0,x)} have dimension n.
pub fn groupoid_pair(n: usize, m: usize, field: Field) -> Result<WeakHopfData> {
    if n == 0 || m == 0 {
        return Err(HopfError::Invalid("groupoid_pair requires n ≥ 1 objects and m ≥ 1".into()));
    }
    let d = n * n * m;
    let enc = move |x: usize, g: usize, y: usize| (x * m + g) * n + y;
    let dec = move |i: usize| (i / (n * m), (i / n) % m, i % n);
    let labels: Vec<String> = (0..d)
        .map(|i| {
            let (x, g, y) = dec(i);
            if m == 1 { format!("({x},{y})") } else { format!("({x},{g},{y})") }
        })
        .collect();
    let mul = Tensor::from_fn(&[d, d, d], field, |idx| {
        let (x, g, y) = dec(idx[0]);
        let (x2, g2, y2) = dec(idx[1]);
        if y == x2 && idx[2] == enc(x, (g + g2) % m, y2) { one(field) } else { field.zero() }
    });
    let unit = Tensor::from_fn(&[d], field, |idx| {
        let (x, g, y) = dec(idx[0]);
        if x == y && g == 0 { one(field) } else { field.zero() }
    });
    let alg = AlgebraData::new(labels, mul, unit)?;
    let comul = Tensor::from_fn(&[d, d, d], field, |idx| {
        if idx[1] == idx[0] && idx[2] == idx[0] { one(field) } else { field.zero() }
    });
    let counit = Tensor::from_fn(&[d], field, |_| one(field));
    let s = LinearMap::from_fn(d, d, field, |r, c| {
        let (x, g, y) = dec(c);
        if r == enc(y, (m - g) % m, x) { one(field) } else { field.zero() }
    });
    let s_inv = s.clone();
    WeakHopfData::new(alg, comul, counit, s, s_inv)
}

/// The groupoid algebra of the discrete groupoid on `n` objects: the
/// function algebra on n points with pointwise product, unit Σ_x e_x,
/// group-like comultiplication, ε = 1, S = id. Here H_t = H_s = H.
pub fn groupoid_discrete(n: usize, field: Field) -> Result<WeakHopfData> {
    if n == 0 {
        return Err(HopfError::Invalid("groupoid_discrete requires n ≥ 1 objects".into()));
    }
    let labels: Vec<String> = (0..n).map(|i| format!("e{i}")).collect();
    let mul = Tensor::from_fn(&[n, n, n], field, |idx| {
        if idx[0] == idx[1] && idx[1] == idx[2] { one(field) } else { field.zero() }
    });
    let unit = Tensor::from_fn(&[n], field, |_| one(field));
    let alg = AlgebraData::new(labels, mul, unit)?;
    let comul = Tensor::from_fn(&[n, n, n], field, |idx| {
        if idx[1] == idx[0] && idx[2] == idx[0] { one(field) } else { field.zero() }
    });
    let counit = Tensor::from_fn(&[n], field, |_| one(field));
    let s = LinearMap::identity(n, field);
    WeakHopfData::new(alg, comul, counit, s.clone(), s)
}

/// View an ordinary Hopf algebra (quasi-Hopf data with trivial associator)
/// as a weak Hopf algebra by forgetting Φ, α, β.
pub fn weak_from_hopf(h: &QuasiHopfData) -> Result<WeakHopfData> {
    WeakHopfData::new(h.alg.clone(), h.comul.clone(), h.counit.clone(), h.s.clone(), h.s_inv.clone())
}

/// The target counital subalgebra H_t as a weak module algebra: carrier
/// im(ε_t) with transported multiplication, unit p(1), and the canonical
/// action h·z = ε_t(h z).
pub fn weak_target_module_algebra(h: &WeakHopfData) -> Result<WeakModuleAlgebraData> {
    let counital = counital_maps(h)?;
    let (i, p) = (&counital.t_split.i, &counital.t_split.p);
    let rank = counital.t_split.rank;
    let dh = h.dim();
    let f = h.field();
    let mul_h = &h.alg.mul;
    let mul = Tensor::from_fn(&[rank, rank, rank], f, |idx| {
        let out = Elem::from_vec(&i.col(idx[0]), f)
            .tensor(&Elem::from_vec(&i.col(idx[1]), f))
            .mul(mul_h, 0)
            .map1(p, 0);
        out.to_tensor().get(&[idx[2]]).clone()
    });
    let one_h: Vec<Scalar> = (0..dh).map(|k| h.alg.unit.get(&[k]).clone()).collect();
    let unit_coords = p.apply(&one_h)?;
    let unit = Tensor::from_fn(&[rank], f, |idx| unit_coords[idx[0]].clone());
    let labels = (0..rank).map(|k| format!("t{k}")).collect();
    let alg = AlgebraData::new(labels, mul, unit)?;
    let action = Tensor::from_fn(&[dh, rank, rank], f, |idx| {
        let out = Elem::basis(dh, idx[0], f)
            .tensor(&Elem::from_vec(&i.col(idx[1]), f))
            .mul(mul_h, 0)
            .map1(&counital.eps_t, 0)
            .map1(p, 0);
        out.to_tensor().get(&[idx[2]]).clone()
    });
    Ok(WeakModuleAlgebraData { alg, action })
}

/// The diagonal subalgebra of the pair-groupoid algebra as a weak
/// Yetter–Drinfeld module algebra: carrier span{(u,g,u)} with basis (u,g),
/// adjoint action h·a = h₁ a S(h₂), and coaction a ↦ a ⊗ a (the
/// comultiplication restricted along the embedding).
pub fn weak_diagonal_yd_algebra(n: usize, m: usize, field: Field) -> Result<(WeakHopfData, WeakYdAlgebraData)> {
    let h = groupoid_pair(n, m, field)?;
    let dh = h.dim();
    let da = n * m;
    let enc_h = move |x: usize, g: usize, y: usize| (x * m + g) * n + y;
    let enc_a = move |u: usize, g: usize| u * m + g;
    let dec_a = move |i: usize| (i / m, i % m);
    let dec_h = move |i: usize| (i / (n * m), (i / n) % m, i % n);
    let labels: Vec<String> = (0..da)
        .map(|i| {
            let (u, g) = dec_a(i);
            if m == 1 { format!("d{u}") } else { format!("d{u}g{g}") }
        })
        .collect();
    let mul = Tensor::from_fn(&[da, da, da], field, |idx| {
        let (u, g) = dec_a(idx[0]);
        let (u2, g2) = dec_a(idx[1]);
        if u == u2 && idx[2] == enc_a(u, (g + g2) % m) { one(field) } else { field.zero() }
    });
    let unit = Tensor::from_fn(&[da], field, |idx| {
        let (_, g) = dec_a(idx[0]);
        if g == 0 { one(field) } else { field.zero() }
    });
    let alg = AlgebraData::new(labels, mul, unit)?;
    // h·a = h₁ a S(h₂): for morphisms h = (x,gh,y) and a = (u,ga) this is
    // δ_{y,u} (x,ga).
    let action = Tensor::from_fn(&[dh, da, da], field, |idx| {
        let (x, _, y) = dec_h(idx[0]);
        let (u, ga) = dec_a(idx[1]);
        if y == u && idx[2] == enc_a(x, ga) { one(field) } else { field.zero() }
    });
    let mut coaction = LinearMap::zeros(dh * da, da, field);
    for i in 0..da {
        let (u, g) = dec_a(i);
        coaction.set(enc_h(u, g, u) * da + i, i, one(field));
    }
    Ok((h, WeakYdAlgebraData { alg, action, coaction }))
}

/// The number of inversions between two disjoint index sets (bitmasks):
/// pairs (a, b) with a ∈ `left`, b ∈ `right`, a > b. The parity of this
/// count is the Koszul sign of merging the two sorted monomials.
fn inversions(left: usize, right: usize) -> usize {
    let mut count = 0;
    let mut a = left;
    while a != 0 {
        let bit = a.trailing_zeros() as usize;
        count += (right & ((1 << bit) - 1)).count_ones() as usize;
        a &= a - 1;
    }
    count
}

fn koszul_sign(field: Field, left: usize, right: usize) -> Scalar {
    if inversions(left, right) % 2 == 0 { one(field) } else { int(field, -1) }
}

/// The exterior algebra Λ(x₁,…,x_k) as a braided Hopf algebra in super
/// vector spaces: basis the 2^k square-free monomials (indexed by
/// bitmasks), generators primitive, S(x_S) = (−1)^{|S|} x_S. Requires
/// characteristic ≠ 2 (in characteristic 2 the Koszul braiding
/// degenerates to the flip).
pub fn super_exterior(k: usize, field: Field) -> Result<(BraidedContext, BraidedHopfData)> {
    check_char_not_2(field, "the exterior algebra in super vector spaces")?;
    let d = 1usize << k;
    let labels: Vec<String> = (0..d)
        .map(|s| {
            if s == 0 {
                "1".to_string()
            } else {
                (0..k).filter(|i| s >> i & 1 == 1).map(|i| format!("x{i}")).collect()
            }
        })
        .collect();
    let mul = Tensor::from_fn(&[d, d, d], field, |idx| {
        let (s, t) = (idx[0], idx[1]);
        if s & t == 0 && idx[2] == s | t { koszul_sign(field, s, t) } else { field.zero() }
    });
    let unit = Tensor::from_fn(&[d], field, |idx| if idx[0] == 0 { one(field) } else { field.zero() });
    let alg = AlgebraData::new(labels, mul, unit)?;
    // Δ(x_S) = Σ_{A⊔B=S} sign(A,B) x_A ⊗ x_B, the deshuffle with the same
    // Koszul sign as the product.
    let comul = Tensor::from_fn(&[d, d, d], field, |idx| {
        let (s, a, b) = (idx[0], idx[1], idx[2]);
        if a & b == 0 && a | b == s { koszul_sign(field, a, b) } else { field.zero() }
    });
    let counit = Tensor::from_fn(&[d], field, |idx| if idx[0] == 0 { one(field) } else { field.zero() });
    let s_map = LinearMap::from_fn(d, d, field, |r, c| {
        if r == c {
            if (c as u64).count_ones() % 2 == 0 { one(field) } else { int(field, -1) }
        } else {
            field.zero()
        }
    });
    let parity: Vec<usize> = (0..d).map(|s| (s as u64).count_ones() as usize % 2).collect();
    let obj = BObject::super_graded(parity);
    let h = BraidedHopfData::new(obj, alg, comul, counit, s_map.clone(), s_map)?;
    Ok((BraidedContext::Super(field), h))
}

/// The graded line Λ(y) as a Yetter–Drinfeld module algebra over Λ(x) in
/// super vector spaces: x acts as the (super) derivative ∂/∂y and the
/// coaction is λ(y) = x⊗1 + 1⊗y. The smash product is the rank-one
/// Clifford algebra: (1#x)(y#1) + (y#1)(1#x) = 1.
pub fn super_line_yd_algebra(field: Field) -> Result<(BraidedContext, BraidedHopfData, BraidedYdAlgebraData)> {
    let (ctx, h) = super_exterior(1, field)?;
    let alg = graded_line(field)?;
    let obj = BObject::super_graded(vec![0, 1]);
    let mut action = Tensor::zeros(&[2, 2, 2], field);
    action.set(&[0, 0, 0], one(field));
    action.set(&[0, 1, 1], one(field));
    action.set(&[1, 1, 0], one(field)); // x·y = 1
    let mut coaction = LinearMap::zeros(4, 2, field);
    coaction.set(0, 0, one(field)); // λ(1) = 1⊗1
    coaction.set(2, 1, one(field)); // λ(y) ∋ x⊗1
    coaction.set(1, 1, one(field)); // λ(y) ∋ 1⊗y
    Ok((ctx, h, BraidedYdAlgebraData { obj, alg, action, coaction }))
}

/// The exterior plane Λ(y₀,y₁) as a Yetter–Drinfeld module algebra over the
/// exterior line Λ(x) in super vector spaces: x acts as the odd derivation
/// D = ∂/∂y₀ + ∂/∂y₁ and the coaction is λ(a) = 1⊗a + x⊗D(a).
///
/// Unlike the one-variable line, every structure constant here is pinned by
/// the axioms: quadratic relations are cross-linked through mixed
/// associativity, the derivation entries through the Leibniz law, and the
/// coaction entries through comodule coassociativity (D² = 0 forces the two
/// x-components of λ to cancel exactly).
pub fn super_plane_yd_algebra(
    field: Field,
) -> Result<(BraidedContext, BraidedHopfData, BraidedYdAlgebraData)> {
    let (ctx, h) = super_exterior(1, field)?;
    let (_, plane) = super_exterior(2, field)?;
    let alg = AlgebraData::new(
        vec!["1".into(), "y0".into(), "y1".into(), "y0y1".into()],
        plane.alg.mul.clone(),
        plane.alg.unit.clone(),
    )?;
    let obj = plane.obj.clone();
    let mut action = Tensor::zeros(&[2, 4, 4], field);
    for i in 0..4 {
        action.set(&[0, i, i], one(field));
    }
    action.set(&[1, 1, 0], one(field)); // D(y0) = 1
    action.set(&[1, 2, 0], one(field)); // D(y1) = 1
    action.set(&[1, 3, 2], one(field)); // D(y0y1) ∋ y1
    action.set(&[1, 3, 1], int(field, -1)); // D(y0y1) ∋ −y0
    let mut coaction = LinearMap::zeros(8, 4, field);
    coaction.set(0, 0, one(field)); // λ(1) = 1⊗1
    coaction.set(1, 1, one(field)); // λ(y0) ∋ 1⊗y0
    coaction.set(4, 1, one(field)); // λ(y0) ∋ x⊗1
    coaction.set(2, 2, one(field)); // λ(y1) ∋ 1⊗y1
    coaction.set(4, 2, one(field)); // λ(y1) ∋ x⊗1
    coaction.set(3, 3, one(field)); // λ(y0y1) ∋ 1⊗y0y1
    coaction.set(6, 3, one(field)); // λ(y0y1) ∋ x⊗y1
    coaction.set(5, 3, int(field, -1)); // λ(y0y1) ∋ −x⊗y0
    Ok((ctx, h, BraidedYdAlgebraData { obj, alg, action, coaction }))
}

/// The anyonic line: k[x]/(x²) as a braided Hopf algebra in Yetter–Drinfeld
/// modules over k[Z/2], with x primitive, graded by g, and braiding
/// c(x⊗x) = −x⊗x. Requires characteristic ≠ 2.
pub fn anyonic_line(field: Field) -> Result<(BraidedContext, BraidedHopfData)> {
    check_char_not_2(field, "the anyonic line")?;
    let k = group_algebra(2, field)?;
    let ctx = BraidedContext::YdOverHopf(Box::new(k));
    let mut ambient_action = Tensor::zeros(&[2, 2, 2], field);
    ambient_action.set(&[0, 0, 0], one(field));
    ambient_action.set(&[0, 1, 1], one(field));
    ambient_action.set(&[1, 0, 0], one(field));
    ambient_action.set(&[1, 1, 1], int(field, -1)); // g·x = −x
    let mut ambient_coaction = LinearMap::zeros(4, 2, field);
    ambient_coaction.set(0, 0, one(field)); // 1 ↦ 1⊗1
    ambient_coaction.set(3, 1, one(field)); // x ↦ g⊗x
    let obj = BObject::yd(2, ambient_action, ambient_coaction);
    let alg = AlgebraData::new(
        vec!["1".to_string(), "x".to_string()],
        Tensor::from_fn(&[2, 2, 2], field, |idx| {
            if idx[0] + idx[1] == idx[2] && idx[0] + idx[1] <= 1 { one(field) } else { field.zero() }
        }),
        Tensor::from_fn(&[2], field, |idx| if idx[0] == 0 { one(field) } else { field.zero() }),
    )?;
    let mut comul = Tensor::zeros(&[2, 2, 2], field);
    comul.set(&[0, 0, 0], one(field));
    comul.set(&[1, 1, 0], one(field));
    comul.set(&[1, 0, 1], one(field));
    let counit = Tensor::from_fn(&[2], field, |idx| if idx[0] == 0 { one(field) } else { field.zero() });
    let s = LinearMap::from_fn(2, 2, field, |r, c| {
        if r == c {
            if c == 0 { one(field) } else { int(field, -1) }
        } else {
            field.zero()
        }
    });
    let h = BraidedHopfData::new(obj, alg, comul, counit, s.clone(), s)?;
    Ok((ctx, h))
}

/// The graded line as a Yetter–Drinfeld module algebra over the anyonic
/// line, with the same derivation action and coaction as the super variant
/// but decorated over k[Z/2] instead of by parity.
pub fn anyonic_line_yd_algebra(field: Field) -> Result<(BraidedContext, BraidedHopfData, BraidedYdAlgebraData)> {
    let (ctx, h) = anyonic_line(field)?;
    let alg = graded_line(field)?;
    let obj = BObject {
        dim: 2,
        parity: None,
        action: h.obj.action.clone(),
        coaction: h.obj.coaction.clone(),
    };
    let mut action = Tensor::zeros(&[2, 2, 2], field);
    action.set(&[0, 0, 0], one(field));
    action.set(&[0, 1, 1], one(field));
    action.set(&[1, 1, 0], one(field)); // x·y = 1
    let mut coaction = LinearMap::zeros(4, 2, field);
    coaction.set(0, 0, one(field)); // λ(1) = 1⊗1
    coaction.set(2, 1, one(field)); // λ(y) ∋ x⊗1
    coaction.set(1, 1, one(field)); // λ(y) ∋ 1⊗y
    Ok((ctx, h, BraidedYdAlgebraData { obj, alg, action, coaction }))
}

/// View an ordinary Hopf algebra (trivial associator, α = β = 1) as a
/// braided Hopf algebra in plain vector spaces. Returns a typed
/// precondition error when the associator or the unit constraints are
/// nontrivial.
pub fn braided_from_hopf(h: &QuasiHopfData) -> Result<(BraidedContext, BraidedHopfData)> {
    let trivial_phi = h
        .alg
        .unit
        .outer(&h.alg.unit)
        .and_then(|u| u.outer(&h.alg.unit))
        .is_ok_and(|u| h.phi == u);
    let trivial_units = h.alpha == h.alg.unit && h.beta == h.alg.unit;
    if !trivial_phi || !trivial_units {
        let mut r = Runner::new("braided_from_hopf.pre");
        r.bool_check("phi-trivial", trivial_phi, "associator is 1⊗1⊗1");
        r.bool_check("units-trivial", trivial_units, "α = β = 1");
        let pre = r.finish();
        let id = pre.first_failure().expect("failure present").id.clone();
        return Err(HopfError::Precondition { op: "braided_from_hopf".into(), id, report: Box::new(pre) });
    }
    let obj = BObject::plain(h.dim());
    let data = BraidedHopfData::new(
        obj,
        h.alg.clone(),
        h.comul.clone(),
        h.counit.clone(),
        h.s.clone(),
        h.s_inv.clone(),
    )?;
    Ok((BraidedContext::Plain(h.field()), data))
}

/// View a Yetter–Drinfeld module algebra over an ordinary Hopf algebra as
/// a braided one in plain vector spaces.
pub fn braided_yd_from_plain(a: &YdAlgebraData) -> BraidedYdAlgebraData {
    BraidedYdAlgebraData {
        obj: BObject::plain(a.alg.dim),
        alg: a.alg.clone(),
        action: a.action.clone(),
        coaction: a.coaction.clone(),
    }
}

/// A braided Hopf algebra as a bicomodule algebra over itself (ρ = λ = Δ,
/// v = id) — the base case of the structure theorem, whose coinvariants
/// are the ground field.
pub fn braided_self_bicomodule(h: &BraidedHopfData) -> BraidedBicomoduleWithV {
    BraidedBicomoduleWithV {
        obj: h.obj.clone(),
        alg: h.alg.clone(),
        rho: h.comul_map(),
        lambda: h.comul_map(),
        v: LinearMap::identity(h.dim(), h.field()),
    }
}

/// A weak Hopf algebra as a bicomodule algebra over itself (ρ = λ = Δ,
/// v = id) — the base case of the structure theorem, whose coinvariants
/// are the target counital subalgebra H_t.
pub fn weak_self_bicomodule(h: &WeakHopfData) -> WeakBicomoduleWithV {
    WeakBicomoduleWithV {
        alg: h.alg.clone(),
        rho: h.comul_map(),
        lambda: h.comul_map(),
        v: LinearMap::identity(h.dim(), h.field()),
    }
}

/// One entry of the built-in example catalog.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CatalogEntry {
    /// Stable name accepted by [`build_example`].
    pub name: &'static str,
    /// File kind the entry emits.
    pub kind: &'static str,
    /// Carrier dimension over the default rational field.
    pub dim: usize,
    /// One-line description.
    pub description: &'static str,
}

/// The built-in example catalog. Every entry can be built over the
/// rationals; entries whose construction divides by 2 reject fields of
/// characteristic 2. Each emitted file passes its kind's verification op.
pub fn catalog() -> Vec<CatalogEntry> {
    let e = |name, kind, dim, description| CatalogEntry { name, kind, dim, description };
    vec![
        e("group-z2", "quasi-hopf", 2, "group algebra k[Z/2], trivial associator"),
        e("group-z4", "quasi-hopf", 4, "group algebra k[Z/4], trivial associator"),
        e("dual-z3", "quasi-hopf", 3, "dual group algebra k^(Z/3) of pointwise idempotents"),
        e("sweedler", "quasi-hopf", 4, "Sweedler's four-dimensional Hopf algebra (char ≠ 2)"),
        e(
            "quasi-kz2-twisted",
            "quasi-hopf",
            2,
            "k[Z/2] with the nontrivial associator Φ = 1 - 2(p⊗p⊗p) (char ≠ 2)",
        ),
        e("groupoid-pair-2", "weak-hopf", 4, "pair groupoid algebra on 2 objects; Δ(1) ≠ 1⊗1"),
        e("groupoid-pair-3", "weak-hopf", 9, "pair groupoid algebra on 3 objects; Δ(1) ≠ 1⊗1"),
        e(
            "groupoid-z2-pair-2",
            "weak-hopf",
            8,
            "pair groupoid on 2 objects crossed with Z/2; noncommutative weak Hopf",
        ),
        e("groupoid-discrete-2", "weak-hopf", 2, "function algebra on 2 points; H_t = H"),
        e("super-line", "braided-hopf", 2, "exterior line Λ(x) in super vector spaces (char ≠ 2)"),
        e(
            "super-plane",
            "braided-hopf",
            4,
            "exterior plane Λ(x₁,x₂) in super vector spaces (char ≠ 2)",
        ),
        e(
            "anyonic-line",
            "braided-hopf",
            2,
            "k[x]/x² in Yetter–Drinfeld modules over k[Z/2], sign braiding (char ≠ 2)",
        ),
        e(
            "modalg-line-kz2",
            "module-algebra",
            2,
            "k[y]/y² as a module algebra over k[Z/2] by the sign action (char ≠ 2)",
        ),
        e(
            "modalg-ht-pair-2",
            "module-algebra",
            2,
            "target counital subalgebra H_t of the 2-object pair groupoid algebra",
        ),
        e(
            "modalg-super-plane",
            "module-algebra",
            4,
            "exterior plane Λ(y0,y1) as a module algebra over the exterior line, x acting as ∂/∂y0 + ∂/∂y1 (char ≠ 2)",
        ),
        e(
            "yd-line-over-kz2",
            "yd-module",
            2,
            "graded line k[y]/y² as a Yetter–Drinfeld module algebra over k[Z/2] (char ≠ 2)",
        ),
        e(
            "yd-line-over-sweedler",
            "yd-module",
            2,
            "graded line as a Yetter–Drinfeld module algebra over Sweedler's algebra (char ≠ 2)",
        ),
        e(
            "yd-diag-over-twisted",
            "yd-module",
            2,
            "diagonal algebra k×k as a Yetter–Drinfeld module algebra over twisted k[Z/2] (char ≠ 2)",
        ),
        e(
            "yd-trivial-over-sweedler",
            "yd-module",
            1,
            "ground field as the trivial Yetter–Drinfeld module algebra over Sweedler's algebra (char ≠ 2)",
        ),
        e(
            "weak-yd-diag-2",
            "yd-module",
            2,
            "diagonal subalgebra of the 2-object pair groupoid algebra with adjoint action",
        ),
        e(
            "super-plane-yd",
            "yd-module",
            4,
            "exterior plane as a Yetter–Drinfeld module algebra over the exterior line with coaction 1⊗a + x⊗D(a) (char ≠ 2)",
        ),
        e(
            "smash-line-kz2",
            "bicomodule-algebra",
            4,
            "smash product (k[y]/y²)#k[Z/2] with its canonical coactions and v = 1#(-) (char ≠ 2)",
        ),
        e(
            "smash-diag-twisted",
            "bicomodule-algebra",
            4,
            "smash product (k×k)#k[Z/2]_Φ over the twisted base, with associators and v (char ≠ 2)",
        ),
        e(
            "self-group-z2",
            "bicomodule-algebra",
            2,
            "k[Z/2] over itself as a weak Hopf algebra: ρ = λ = Δ, v = id",
        ),
        e(
            "self-groupoid-pair-2",
            "bicomodule-algebra",
            4,
            "2-object pair groupoid algebra over itself: ρ = λ = Δ, v = id",
        ),
        e(
            "smash-super-line",
            "bicomodule-algebra",
            4,
            "braided smash product of the super line with the exterior line, v = 1#(-) (char ≠ 2)",
        ),
        e(
            "smash-line-kz2-plain",
            "bicomodule-algebra",
            4,
            "(k[y]/y²)#k[Z/2] built in the plain braided category, v = 1#(-) (char ≠ 2)",
        ),
    ]
}

/// Build a catalog example over `field` as a serializable file. Unknown
/// names and unsupported characteristics return errors.
pub fn build_example(name: &str, field: Field) -> Result<AlgebraFile> {
    match name {
        "group-z2" => AlgebraFile::from_quasi(&group_algebra(2, field)?),
        "group-z4" => AlgebraFile::from_quasi(&group_algebra(4, field)?),
        "dual-z3" => AlgebraFile::from_quasi(&dual_group_algebra(3, field)?),
        "sweedler" => AlgebraFile::from_quasi(&sweedler(field)?),
        "quasi-kz2-twisted" => AlgebraFile::from_quasi(&quasi_kz2_twisted(field)?),
        "groupoid-pair-2" => AlgebraFile::from_weak(&groupoid_pair(2, 1, field)?),
        "groupoid-pair-3" => AlgebraFile::from_weak(&groupoid_pair(3, 1, field)?),
        "groupoid-z2-pair-2" => AlgebraFile::from_weak(&groupoid_pair(2, 2, field)?),
        "groupoid-discrete-2" => AlgebraFile::from_weak(&groupoid_discrete(2, field)?),
        "super-line" => {
            let (ctx, h) = super_exterior(1, field)?;
            AlgebraFile::from_braided(&ctx, &h)
        }
        "super-plane" => {
            let (ctx, h) = super_exterior(2, field)?;
            AlgebraFile::from_braided(&ctx, &h)
        }
        "anyonic-line" => {
            let (ctx, h) = anyonic_line(field)?;
            AlgebraFile::from_braided(&ctx, &h)
        }
        "modalg-line-kz2" => {
            let (h, a) = yd_line_over_group_z2(field)?;
            let m = ModuleAlgebraData { alg: a.alg.clone(), action: a.action.clone() };
            AlgebraFile::from_quasi_module_algebra(&h, &m)
        }
        "modalg-ht-pair-2" => {
            let h = groupoid_pair(2, 1, field)?;
            let a = weak_target_module_algebra(&h)?;
            AlgebraFile::from_weak_module_algebra(&h, &a)
        }
        "modalg-super-plane" => {
            let (ctx, h, a) = super_plane_yd_algebra(field)?;
            AlgebraFile::from_braided_module_algebra(&ctx, &h, &a.module_algebra())
        }
        "yd-line-over-kz2" => {
            let (h, a) = yd_line_over_group_z2(field)?;
            AlgebraFile::from_quasi_yd_algebra(&h, &a)
        }
        "yd-line-over-sweedler" => {
            let (h, a) = yd_line_over_sweedler(field)?;
            AlgebraFile::from_quasi_yd_algebra(&h, &a)
        }
        "yd-diag-over-twisted" => {
            let (h, a) = yd_diag_over_twisted(field)?;
            AlgebraFile::from_quasi_yd_algebra(&h, &a)
        }
        "yd-trivial-over-sweedler" => {
            let h = sweedler(field)?;
            let a = trivial_yd_algebra(&h)?;
            AlgebraFile::from_quasi_yd_algebra(&h, &a)
        }
        "weak-yd-diag-2" => {
            let (h, a) = weak_diagonal_yd_algebra(2, 1, field)?;
            AlgebraFile::from_weak_yd_algebra(&h, &a)
        }
        "super-plane-yd" => {
            let (ctx, h, a) = super_plane_yd_algebra(field)?;
            AlgebraFile::from_braided_yd_algebra(&ctx, &h, &a)
        }
        "smash-line-kz2" => {
            let (h, a) = yd_line_over_group_z2(field)?;
            let (bwv, _) = yd_smash_bicomodule(&h, &a)?;
            AlgebraFile::from_quasi_bicomodule(&h, &bwv.b, Some(&bwv.v))
        }
        "smash-diag-twisted" => {
            let (h, a) = yd_diag_over_twisted(field)?;
            let (bwv, _) = yd_smash_bicomodule(&h, &a)?;
            AlgebraFile::from_quasi_bicomodule(&h, &bwv.b, Some(&bwv.v))
        }
        "self-group-z2" => {
            let h = weak_from_hopf(&group_algebra(2, field)?)?;
            let b = weak_self_bicomodule(&h);
            AlgebraFile::from_weak_bicomodule(&h, &b.alg, &b.rho, &b.lambda, Some(&b.v))
        }
        "self-groupoid-pair-2" => {
            let h = groupoid_pair(2, 1, field)?;
            let b = weak_self_bicomodule(&h);
            AlgebraFile::from_weak_bicomodule(&h, &b.alg, &b.rho, &b.lambda, Some(&b.v))
        }
        "smash-super-line" => {
            let (ctx, h, a) = super_line_yd_algebra(field)?;
            let sm = braided_smash(&ctx, &h, &a)?;
            AlgebraFile::from_braided_bicomodule(
                &ctx, &h, &sm.obj, &sm.alg, &sm.rho, &sm.lambda, Some(&sm.j),
            )
        }
        "smash-line-kz2-plain" => {
            let (hq, a) = yd_line_over_group_z2(field)?;
            let (ctx, h) = braided_from_hopf(&hq)?;
            let ab = braided_yd_from_plain(&a);
            let sm = braided_smash(&ctx, &h, &ab)?;
            AlgebraFile::from_braided_bicomodule(
                &ctx, &h, &sm.obj, &sm.alg, &sm.rho, &sm.lambda, Some(&sm.j),
            )
        }
        other => Err(HopfError::Invalid(format!("unknown example {other:?}"))),
    }
}
