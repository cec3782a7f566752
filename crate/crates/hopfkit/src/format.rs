//! On-disk JSON format for structures: exact scalar strings, canonical
//! serialization, capped parsing, and kind-dispatched verification.
//!
//! A file carries one structure (`kind` field) over one base field, with
//! every structure map serialized as a nested array of canonical scalar
//! strings, inputs-first: a multiplication is `[d][d][d]` (two inputs, one
//! output), a right coaction B → B⊗H is `[dB][dB][dH]`, an antipode is
//! `[d][d]`. Derived structures (module algebras, Yetter–Drinfeld modules,
//! bicomodule algebras) embed their base Hopf structure under `base`;
//! braided kinds carry a `context` block describing the ambient braided
//! category and the carrier's decoration in it.
//!
//! Serialization is deterministic: fixed key order, canonical rational
//! strings (`"p/q"` with positive denominator and reduced fraction, bare
//! integers without denominator), and no floating point anywhere. Parsing
//! enforces the `HOPFKIT_MAX_DIM` carrier cap (default 64) before any
//! tensor is materialized.

use serde::{Deserialize, Serialize};

use crate::algebra::AlgebraData;
use crate::braided::{
    verify_braided_comodule_algebra, verify_braided_hopf, verify_braided_module_algebra,
    verify_braided_yd, BObject, BraidedComoduleAlgebraData, BraidedContext, BraidedHopfData,
    BraidedModuleAlgebraData, BraidedYdAlgebraData, BraidedYdModuleData,
};
use crate::error::{HopfError, Result};
use crate::linmap::LinearMap;
use crate::quasi::{
    verify_bicomodule_algebra, verify_module_algebra, verify_quasi_hopf, verify_yd,
    verify_yd_algebra, BicomoduleAlgebraData, ModuleAlgebraData, QuasiHopfData, YdAlgebraData,
    YdModuleData,
};
use crate::report::{Report, Runner};
use crate::scalar::Field;
use crate::tensor::Tensor;
use crate::weak::{
    verify_weak_comodule_algebra, verify_weak_hopf, verify_weak_module_algebra, verify_weak_yd,
    ComoduleSide, WeakComoduleAlgebraData, WeakHopfData, WeakModuleAlgebraData,
    WeakYdAlgebraData,
};

/// Current file format version.
pub const FORMAT_VERSION: u32 = 1;

/// Default carrier dimension cap when `HOPFKIT_MAX_DIM` is unset.
pub const DEFAULT_MAX_DIM: usize = 64;

/// The effective carrier dimension cap: `HOPFKIT_MAX_DIM` when set to a
/// positive integer, [`DEFAULT_MAX_DIM`] otherwise.
pub fn max_dim() -> usize {
    std::env::var("HOPFKIT_MAX_DIM")
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&cap| cap > 0)
        .unwrap_or(DEFAULT_MAX_DIM)
}

fn check_cap(dim: usize) -> Result<()> {
    let cap = max_dim();
    if dim > cap {
        Err(HopfError::DimensionCap { dim, cap })
    } else {
        Ok(())
    }
}

fn parse_err(msg: impl Into<String>) -> HopfError {
    HopfError::Parse(msg.into())
}

/// Base field specification.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum FieldSpec {
    /// Exact rationals.
    Rational,
    /// The prime field GF(p).
    Prime {
        /// The characteristic; must be prime.
        p: u64,
    },
}

impl FieldSpec {
    /// The in-memory field this spec denotes.
    pub fn to_field(self) -> Result<Field> {
        match self {
            FieldSpec::Rational => Ok(Field::Rational),
            FieldSpec::Prime { p } => Field::prime(p),
        }
    }

    /// The spec of an in-memory field.
    pub fn of(field: Field) -> FieldSpec {
        match field {
            Field::Rational => FieldSpec::Rational,
            Field::Prime(p) => FieldSpec::Prime { p },
        }
    }
}

/// A structure-constant tensor as nested arrays of canonical scalar
/// strings, inputs-first, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum TensorData {
    /// A single exact scalar, e.g. `"1"`, `"-3/2"`, `"5"`.
    Entry(String),
    /// One axis of the tensor.
    Row(Vec<TensorData>),
}

impl TensorData {
    /// Serialize a dense tensor.
    pub fn from_tensor(t: &Tensor) -> TensorData {
        fn build(t: &Tensor, shape: &[usize], prefix: &mut Vec<usize>) -> TensorData {
            if prefix.len() == shape.len() {
                return TensorData::Entry(t.get(prefix).to_string());
            }
            let d = shape[prefix.len()];
            TensorData::Row(
                (0..d)
                    .map(|i| {
                        prefix.push(i);
                        let out = build(t, shape, prefix);
                        prefix.pop();
                        out
                    })
                    .collect(),
            )
        }
        let shape = t.shape().to_vec();
        build(t, &shape, &mut Vec::new())
    }

    /// Serialize a linear map as a tensor with the given input and output
    /// axes (inputs first).
    pub fn from_map(m: &LinearMap, in_dims: &[usize], out_dims: &[usize]) -> Result<TensorData> {
        Ok(TensorData::from_tensor(&m.to_tensor(in_dims, out_dims)?))
    }

    /// The shape encoded by the nesting, rejecting ragged or empty axes.
    pub fn shape(&self) -> Result<Vec<usize>> {
        match self {
            TensorData::Entry(_) => Ok(Vec::new()),
            TensorData::Row(rows) => {
                let first = rows
                    .first()
                    .ok_or_else(|| parse_err("tensor axis of length zero"))?
                    .shape()?;
                for row in &rows[1..] {
                    if row.shape()? != first {
                        return Err(parse_err("ragged tensor: rows have different shapes"));
                    }
                }
                let mut shape = Vec::with_capacity(first.len() + 1);
                shape.push(rows.len());
                shape.extend(first);
                Ok(shape)
            }
        }
    }

    fn collect_entries(&self, field: Field, out: &mut Vec<crate::scalar::Scalar>) -> Result<()> {
        match self {
            TensorData::Entry(s) => {
                out.push(field.parse(s)?);
                Ok(())
            }
            TensorData::Row(rows) => {
                for row in rows {
                    row.collect_entries(field, out)?;
                }
                Ok(())
            }
        }
    }

    /// Parse into a dense tensor over the given field.
    pub fn to_tensor(&self, field: Field) -> Result<Tensor> {
        let shape = self.shape()?;
        let mut flat = Vec::new();
        self.collect_entries(field, &mut flat)?;
        Ok(Tensor::from_fn(&shape, field, |idx| {
            let pos = idx.iter().zip(&shape).fold(0usize, |acc, (i, d)| acc * d + i);
            flat[pos].clone()
        }))
    }

    /// Parse into a tensor and check its shape in one step.
    pub fn to_tensor_shaped(&self, field: Field, want: &[usize], what: &str) -> Result<Tensor> {
        let t = self.to_tensor(field)?;
        if t.shape() != want {
            return Err(HopfError::Dim {
                context: format!("tensor {what:?}"),
                detail: format!("shape {:?}, expected {want:?}", t.shape()),
            });
        }
        Ok(t)
    }

    /// Parse into a linear map whose first `n_in` serialized axes are
    /// inputs, checking the full expected shape.
    pub fn to_map(&self, field: Field, in_dims: &[usize], out_dims: &[usize], what: &str) -> Result<LinearMap> {
        let want: Vec<usize> = in_dims.iter().chain(out_dims).copied().collect();
        let t = self.to_tensor_shaped(field, &want, what)?;
        Ok(LinearMap::from_tensor(&t, in_dims.len()))
    }
}

/// The ambient braided category of a braided-kind file, together with the
/// decoration of this file's carrier in it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum ContextSpec {
    /// Plain vector spaces.
    Plain,
    /// Super vector spaces; `parity` grades this file's carrier.
    Super {
        /// Basis parity of the carrier, entries in {0, 1}.
        parity: Vec<usize>,
    },
    /// Yetter–Drinfeld modules over an ordinary Hopf algebra.
    Yd {
        /// The ambient Hopf algebra as a quasi-hopf file with trivial Φ.
        ambient: Box<AlgebraFile>,
        /// Ambient action on this carrier, `[d_K][d][d]`.
        ambient_action: TensorData,
        /// Ambient coaction on this carrier, inputs-first `[d][d_K][d]`.
        ambient_coaction: TensorData,
    },
}

impl ContextSpec {
    /// Serialize a context and a carrier decoration.
    pub fn of_object(ctx: &BraidedContext, obj: &BObject) -> Result<ContextSpec> {
        match ctx {
            BraidedContext::Plain(_) => Ok(ContextSpec::Plain),
            BraidedContext::Super(_) => {
                let parity = obj
                    .parity
                    .clone()
                    .ok_or_else(|| parse_err("super object has no parity to serialize"))?;
                Ok(ContextSpec::Super { parity })
            }
            BraidedContext::YdOverHopf(k) => {
                let dk = k.alg.dim;
                let action = obj
                    .action
                    .as_ref()
                    .ok_or_else(|| parse_err("yd object has no ambient action to serialize"))?;
                let coaction = obj
                    .coaction
                    .as_ref()
                    .ok_or_else(|| parse_err("yd object has no ambient coaction to serialize"))?;
                Ok(ContextSpec::Yd {
                    ambient: Box::new(AlgebraFile::from_quasi(k)?),
                    ambient_action: TensorData::from_tensor(action),
                    ambient_coaction: TensorData::from_map(coaction, &[obj.dim], &[dk, obj.dim])?,
                })
            }
        }
    }

    /// Parse the context and the decorated carrier object of dimension
    /// `dim` over `field`.
    pub fn to_object(&self, field: Field, dim: usize) -> Result<(BraidedContext, BObject)> {
        match self {
            ContextSpec::Plain => Ok((BraidedContext::Plain(field), BObject::plain(dim))),
            ContextSpec::Super { parity } => {
                if parity.len() != dim || parity.iter().any(|&p| p > 1) {
                    return Err(parse_err(format!(
                        "parity must be {dim} entries in {{0,1}}, got {parity:?}"
                    )));
                }
                Ok((BraidedContext::Super(field), BObject::super_graded(parity.clone())))
            }
            ContextSpec::Yd { ambient, ambient_action, ambient_coaction } => {
                let k = ambient.parse_quasi()?;
                if k.field() != field {
                    return Err(parse_err("ambient Hopf algebra is over a different field"));
                }
                let dk = k.dim();
                let action = ambient_action.to_tensor_shaped(field, &[dk, dim, dim], "ambient_action")?;
                let coaction = ambient_coaction.to_map(field, &[dim], &[dk, dim], "ambient_coaction")?;
                Ok((
                    BraidedContext::YdOverHopf(Box::new(k)),
                    BObject::yd(dim, action, coaction),
                ))
            }
        }
    }

    fn compatible_with(&self, base: &ContextSpec) -> Result<()> {
        let ok = match (self, base) {
            (ContextSpec::Plain, ContextSpec::Plain) => true,
            (ContextSpec::Super { .. }, ContextSpec::Super { .. }) => true,
            (ContextSpec::Yd { ambient: a, .. }, ContextSpec::Yd { ambient: b, .. }) => a == b,
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(parse_err("context block disagrees with the base file's context"))
        }
    }
}

/// The named structure maps a file may carry. Which ones are required is
/// determined by `kind` (and the base's kind for derived structures).
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TensorSet {
    /// Multiplication, `[d][d][d]`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mul: Option<TensorData>,
    /// Unit, `[d]`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub unit: Option<TensorData>,
    /// Comultiplication, `[d][d][d]`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub comul: Option<TensorData>,
    /// Counit, `[d]`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counit: Option<TensorData>,
    /// Associator, `[d][d][d]`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub phi: Option<TensorData>,
    /// Inverse associator, `[d][d][d]`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub phi_inv: Option<TensorData>,
    /// Antipode element α, `[d]`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<TensorData>,
    /// Antipode element β, `[d]`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub beta: Option<TensorData>,
    /// Antipode, `[d][d]`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s: Option<TensorData>,
    /// Inverse antipode, `[d][d]`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s_inv: Option<TensorData>,
    /// Module action of the base, `[d_H][d][d]`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub action: Option<TensorData>,
    /// Left coaction over the base for yd-module kinds, `[d][d_H][d]`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coaction: Option<TensorData>,
    /// Right coaction B → B⊗H, `[d][d][d_H]`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rho: Option<TensorData>,
    /// Left coaction B → H⊗B, `[d][d_H][d]`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda: Option<TensorData>,
    /// Comparison map v: H → B, `[d_H][d]`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub v: Option<TensorData>,
    /// Right associator Φ_ρ, `[d][d_H][d_H]` (quasi bicomodule algebras).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub phi_r: Option<TensorData>,
    /// Inverse of Φ_ρ.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub phi_r_inv: Option<TensorData>,
    /// Left associator Φ_λ, `[d_H][d_H][d]`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub phi_l: Option<TensorData>,
    /// Inverse of Φ_λ.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub phi_l_inv: Option<TensorData>,
    /// Mixed associator Φ_{λρ}, `[d_H][d][d_H]`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub phi_lr: Option<TensorData>,
    /// Inverse of Φ_{λρ}.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub phi_lr_inv: Option<TensorData>,
}

fn req<'a>(t: &'a Option<TensorData>, name: &str) -> Result<&'a TensorData> {
    t.as_ref().ok_or_else(|| parse_err(format!("missing tensor {name:?}")))
}

/// One structure on disk. See the module docs for the layout.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    /// File format version; must equal [`FORMAT_VERSION`].
    pub format_version: u32,
    /// Base field.
    pub field: FieldSpec,
    /// Structure kind: `quasi-hopf`, `weak-hopf`, `braided-hopf`,
    /// `module-algebra`, `yd-module`, or `bicomodule-algebra`.
    pub kind: String,
    /// Carrier dimension.
    pub dim: usize,
    /// Basis labels, `dim` of them.
    pub labels: Vec<String>,
    /// Ambient braided category and carrier decoration (braided kinds).
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub context: Option<ContextSpec>,
    /// The structure maps.
    pub tensors: TensorSet,
    /// The base Hopf structure for derived kinds.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub base: Option<Box<AlgebraFile>>,
}

/// A fully parsed file, dispatched by kind and base kind.
///
/// Transient: produced by [`AlgebraFile::parse_any`], consumed immediately
/// by verification or a structure-theorem pipeline, so the per-variant
/// size spread is harmless.
#[derive(Debug, Clone)]
#[allow(clippy::large_enum_variant)]
pub enum ParsedFile {
    /// A quasi-Hopf algebra (ordinary Hopf algebras have trivial Φ).
    QuasiHopf(QuasiHopfData),
    /// A weak Hopf algebra.
    WeakHopf(WeakHopfData),
    /// A braided Hopf algebra in its context.
    BraidedHopf(BraidedContext, BraidedHopfData),
    /// A module algebra over a quasi-Hopf base.
    QuasiModuleAlgebra(QuasiHopfData, ModuleAlgebraData),
    /// A module algebra over a weak Hopf base.
    WeakModuleAlgebra(WeakHopfData, WeakModuleAlgebraData),
    /// A module algebra over a braided Hopf base.
    BraidedModuleAlgebra(BraidedContext, BraidedHopfData, BraidedModuleAlgebraData),
    /// A bare Yetter–Drinfeld module over a quasi-Hopf base.
    QuasiYd(QuasiHopfData, YdModuleData),
    /// A Yetter–Drinfeld module algebra over a quasi-Hopf base.
    QuasiYdAlgebra(QuasiHopfData, YdAlgebraData),
    /// A Yetter–Drinfeld module algebra over a weak Hopf base.
    WeakYdAlgebra(WeakHopfData, WeakYdAlgebraData),
    /// A bare braided Yetter–Drinfeld module.
    BraidedYd(BraidedContext, BraidedHopfData, BraidedYdModuleData),
    /// A braided Yetter–Drinfeld module algebra.
    BraidedYdAlgebra(BraidedContext, BraidedHopfData, BraidedYdAlgebraData),
    /// A bicomodule algebra over a quasi-Hopf base, with optional v.
    QuasiBicomodule(QuasiHopfData, BicomoduleAlgebraData, Option<LinearMap>),
    /// A bicomodule algebra over a weak Hopf base, with optional v.
    WeakBicomodule(WeakHopfData, WeakComoduleAlgebraData, Option<LinearMap>),
    /// A bicomodule algebra over a braided Hopf base, with optional v.
    BraidedBicomodule(BraidedContext, BraidedHopfData, BraidedComoduleAlgebraData, Option<LinearMap>),
}

impl AlgebraFile {
    /// Canonical JSON serialization: fixed key order, two-space indent,
    /// trailing newline. Byte-identical for equal values.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("AlgebraFile serializes");
        s.push('\n');
        s
    }

    /// Parse and structurally validate a JSON document.
    pub fn from_json(s: &str) -> Result<AlgebraFile> {
        let file: AlgebraFile =
            serde_json::from_str(s).map_err(|e| parse_err(format!("invalid file: {e}")))?;
        file.validate()?;
        Ok(file)
    }

    fn validate(&self) -> Result<()> {
        if self.format_version != FORMAT_VERSION {
            return Err(parse_err(format!(
                "format_version {} unsupported (expected {FORMAT_VERSION})",
                self.format_version
            )));
        }
        check_cap(self.dim)?;
        if self.labels.len() != self.dim {
            return Err(parse_err(format!(
                "{} labels for dimension {}",
                self.labels.len(),
                self.dim
            )));
        }
        if let Some(ContextSpec::Yd { ambient, .. }) = &self.context {
            ambient.validate()?;
        }
        if let Some(base) = &self.base {
            base.validate()?;
        }
        Ok(())
    }

    fn field(&self) -> Result<Field> {
        self.field.to_field()
    }

    fn algebra(&self) -> Result<AlgebraData> {
        let f = self.field()?;
        let d = self.dim;
        let mul = req(&self.tensors.mul, "mul")?.to_tensor_shaped(f, &[d, d, d], "mul")?;
        let unit = req(&self.tensors.unit, "unit")?.to_tensor_shaped(f, &[d], "unit")?;
        AlgebraData::new(self.labels.clone(), mul, unit)
    }

    /// Parse as a quasi-Hopf algebra.
    pub fn parse_quasi(&self) -> Result<QuasiHopfData> {
        if self.kind != "quasi-hopf" {
            return Err(parse_err(format!("kind {:?} is not quasi-hopf", self.kind)));
        }
        self.validate()?;
        let f = self.field()?;
        let d = self.dim;
        let t = &self.tensors;
        QuasiHopfData::new(
            self.algebra()?,
            req(&t.comul, "comul")?.to_tensor_shaped(f, &[d, d, d], "comul")?,
            req(&t.counit, "counit")?.to_tensor_shaped(f, &[d], "counit")?,
            req(&t.phi, "phi")?.to_tensor_shaped(f, &[d, d, d], "phi")?,
            req(&t.phi_inv, "phi_inv")?.to_tensor_shaped(f, &[d, d, d], "phi_inv")?,
            req(&t.s, "s")?.to_map(f, &[d], &[d], "s")?,
            req(&t.s_inv, "s_inv")?.to_map(f, &[d], &[d], "s_inv")?,
            req(&t.alpha, "alpha")?.to_tensor_shaped(f, &[d], "alpha")?,
            req(&t.beta, "beta")?.to_tensor_shaped(f, &[d], "beta")?,
        )
    }

    /// Serialize a quasi-Hopf algebra.
    pub fn from_quasi(h: &QuasiHopfData) -> Result<AlgebraFile> {
        let f = h.field();
        let d = h.dim();
        Ok(AlgebraFile {
            format_version: FORMAT_VERSION,
            field: FieldSpec::of(f),
            kind: "quasi-hopf".into(),
            dim: d,
            labels: h.alg.labels.clone(),
            context: None,
            tensors: TensorSet {
                mul: Some(TensorData::from_tensor(&h.alg.mul)),
                unit: Some(TensorData::from_tensor(&h.alg.unit)),
                comul: Some(TensorData::from_tensor(&h.comul)),
                counit: Some(TensorData::from_tensor(&h.counit)),
                phi: Some(TensorData::from_tensor(&h.phi)),
                phi_inv: Some(TensorData::from_tensor(&h.phi_inv)),
                alpha: Some(TensorData::from_tensor(&h.alpha)),
                beta: Some(TensorData::from_tensor(&h.beta)),
                s: Some(TensorData::from_map(&h.s, &[d], &[d])?),
                s_inv: Some(TensorData::from_map(&h.s_inv, &[d], &[d])?),
                ..TensorSet::default()
            },
            base: None,
        })
    }

    /// Parse as a weak Hopf algebra.
    pub fn parse_weak(&self) -> Result<WeakHopfData> {
        if self.kind != "weak-hopf" {
            return Err(parse_err(format!("kind {:?} is not weak-hopf", self.kind)));
        }
        self.validate()?;
        let f = self.field()?;
        let d = self.dim;
        let t = &self.tensors;
        WeakHopfData::new(
            self.algebra()?,
            req(&t.comul, "comul")?.to_tensor_shaped(f, &[d, d, d], "comul")?,
            req(&t.counit, "counit")?.to_tensor_shaped(f, &[d], "counit")?,
            req(&t.s, "s")?.to_map(f, &[d], &[d], "s")?,
            req(&t.s_inv, "s_inv")?.to_map(f, &[d], &[d], "s_inv")?,
        )
    }

    /// Serialize a weak Hopf algebra.
    pub fn from_weak(h: &WeakHopfData) -> Result<AlgebraFile> {
        let f = h.field();
        let d = h.dim();
        Ok(AlgebraFile {
            format_version: FORMAT_VERSION,
            field: FieldSpec::of(f),
            kind: "weak-hopf".into(),
            dim: d,
            labels: h.alg.labels.clone(),
            context: None,
            tensors: TensorSet {
                mul: Some(TensorData::from_tensor(&h.alg.mul)),
                unit: Some(TensorData::from_tensor(&h.alg.unit)),
                comul: Some(TensorData::from_tensor(&h.comul)),
                counit: Some(TensorData::from_tensor(&h.counit)),
                s: Some(TensorData::from_map(&h.s, &[d], &[d])?),
                s_inv: Some(TensorData::from_map(&h.s_inv, &[d], &[d])?),
                ..TensorSet::default()
            },
            base: None,
        })
    }

    /// Parse as a braided Hopf algebra with its context.
    pub fn parse_braided(&self) -> Result<(BraidedContext, BraidedHopfData)> {
        if self.kind != "braided-hopf" {
            return Err(parse_err(format!("kind {:?} is not braided-hopf", self.kind)));
        }
        self.validate()?;
        let f = self.field()?;
        let d = self.dim;
        let t = &self.tensors;
        let spec = self
            .context
            .as_ref()
            .ok_or_else(|| parse_err("braided-hopf file has no context block"))?;
        let (ctx, obj) = spec.to_object(f, d)?;
        let h = BraidedHopfData::new(
            obj,
            self.algebra()?,
            req(&t.comul, "comul")?.to_tensor_shaped(f, &[d, d, d], "comul")?,
            req(&t.counit, "counit")?.to_tensor_shaped(f, &[d], "counit")?,
            req(&t.s, "s")?.to_map(f, &[d], &[d], "s")?,
            req(&t.s_inv, "s_inv")?.to_map(f, &[d], &[d], "s_inv")?,
        )?;
        Ok((ctx, h))
    }

    /// Serialize a braided Hopf algebra with its context.
    pub fn from_braided(ctx: &BraidedContext, h: &BraidedHopfData) -> Result<AlgebraFile> {
        let f = h.field();
        let d = h.dim();
        Ok(AlgebraFile {
            format_version: FORMAT_VERSION,
            field: FieldSpec::of(f),
            kind: "braided-hopf".into(),
            dim: d,
            labels: h.alg.labels.clone(),
            context: Some(ContextSpec::of_object(ctx, &h.obj)?),
            tensors: TensorSet {
                mul: Some(TensorData::from_tensor(&h.alg.mul)),
                unit: Some(TensorData::from_tensor(&h.alg.unit)),
                comul: Some(TensorData::from_tensor(&h.comul)),
                counit: Some(TensorData::from_tensor(&h.counit)),
                s: Some(TensorData::from_map(&h.s, &[d], &[d])?),
                s_inv: Some(TensorData::from_map(&h.s_inv, &[d], &[d])?),
                ..TensorSet::default()
            },
            base: None,
        })
    }

    fn base_file(&self) -> Result<&AlgebraFile> {
        self.base
            .as_deref()
            .ok_or_else(|| parse_err(format!("kind {:?} requires a base Hopf structure", self.kind)))
    }

    /// The carrier object of a derived braided file, and its context,
    /// validated against the base file's context block.
    fn braided_carrier(&self, base: &AlgebraFile) -> Result<(BraidedContext, BObject)> {
        let f = self.field()?;
        let spec = self
            .context
            .as_ref()
            .ok_or_else(|| parse_err("derived braided file has no context block"))?;
        let base_spec = base
            .context
            .as_ref()
            .ok_or_else(|| parse_err("braided base file has no context block"))?;
        spec.compatible_with(base_spec)?;
        spec.to_object(f, self.dim)
    }

    /// Serialize a module algebra over a quasi-Hopf base.
    pub fn from_quasi_module_algebra(h: &QuasiHopfData, a: &ModuleAlgebraData) -> Result<AlgebraFile> {
        Ok(AlgebraFile {
            format_version: FORMAT_VERSION,
            field: FieldSpec::of(h.field()),
            kind: "module-algebra".into(),
            dim: a.alg.dim,
            labels: a.alg.labels.clone(),
            context: None,
            tensors: TensorSet {
                mul: Some(TensorData::from_tensor(&a.alg.mul)),
                unit: Some(TensorData::from_tensor(&a.alg.unit)),
                action: Some(TensorData::from_tensor(&a.action)),
                ..TensorSet::default()
            },
            base: Some(Box::new(AlgebraFile::from_quasi(h)?)),
        })
    }

    /// Serialize a module algebra over a weak Hopf base.
    pub fn from_weak_module_algebra(h: &WeakHopfData, a: &WeakModuleAlgebraData) -> Result<AlgebraFile> {
        Ok(AlgebraFile {
            format_version: FORMAT_VERSION,
            field: FieldSpec::of(h.field()),
            kind: "module-algebra".into(),
            dim: a.alg.dim,
            labels: a.alg.labels.clone(),
            context: None,
            tensors: TensorSet {
                mul: Some(TensorData::from_tensor(&a.alg.mul)),
                unit: Some(TensorData::from_tensor(&a.alg.unit)),
                action: Some(TensorData::from_tensor(&a.action)),
                ..TensorSet::default()
            },
            base: Some(Box::new(AlgebraFile::from_weak(h)?)),
        })
    }

    /// Serialize a module algebra over a braided Hopf base.
    pub fn from_braided_module_algebra(
        ctx: &BraidedContext,
        h: &BraidedHopfData,
        a: &BraidedModuleAlgebraData,
    ) -> Result<AlgebraFile> {
        Ok(AlgebraFile {
            format_version: FORMAT_VERSION,
            field: FieldSpec::of(h.field()),
            kind: "module-algebra".into(),
            dim: a.alg.dim,
            labels: a.alg.labels.clone(),
            context: Some(ContextSpec::of_object(ctx, &a.obj)?),
            tensors: TensorSet {
                mul: Some(TensorData::from_tensor(&a.alg.mul)),
                unit: Some(TensorData::from_tensor(&a.alg.unit)),
                action: Some(TensorData::from_tensor(&a.action)),
                ..TensorSet::default()
            },
            base: Some(Box::new(AlgebraFile::from_braided(ctx, h)?)),
        })
    }

    /// Serialize a Yetter–Drinfeld module algebra over a quasi-Hopf base.
    pub fn from_quasi_yd_algebra(h: &QuasiHopfData, a: &YdAlgebraData) -> Result<AlgebraFile> {
        let da = a.alg.dim;
        let dh = h.dim();
        Ok(AlgebraFile {
            format_version: FORMAT_VERSION,
            field: FieldSpec::of(h.field()),
            kind: "yd-module".into(),
            dim: da,
            labels: a.alg.labels.clone(),
            context: None,
            tensors: TensorSet {
                mul: Some(TensorData::from_tensor(&a.alg.mul)),
                unit: Some(TensorData::from_tensor(&a.alg.unit)),
                action: Some(TensorData::from_tensor(&a.action)),
                coaction: Some(TensorData::from_map(&a.coaction, &[da], &[dh, da])?),
                ..TensorSet::default()
            },
            base: Some(Box::new(AlgebraFile::from_quasi(h)?)),
        })
    }

    /// Serialize a Yetter–Drinfeld module algebra over a weak Hopf base.
    pub fn from_weak_yd_algebra(h: &WeakHopfData, a: &WeakYdAlgebraData) -> Result<AlgebraFile> {
        let da = a.alg.dim;
        let dh = h.dim();
        Ok(AlgebraFile {
            format_version: FORMAT_VERSION,
            field: FieldSpec::of(h.field()),
            kind: "yd-module".into(),
            dim: da,
            labels: a.alg.labels.clone(),
            context: None,
            tensors: TensorSet {
                mul: Some(TensorData::from_tensor(&a.alg.mul)),
                unit: Some(TensorData::from_tensor(&a.alg.unit)),
                action: Some(TensorData::from_tensor(&a.action)),
                coaction: Some(TensorData::from_map(&a.coaction, &[da], &[dh, da])?),
                ..TensorSet::default()
            },
            base: Some(Box::new(AlgebraFile::from_weak(h)?)),
        })
    }

    /// Serialize a braided Yetter–Drinfeld module algebra.
    pub fn from_braided_yd_algebra(
        ctx: &BraidedContext,
        h: &BraidedHopfData,
        a: &BraidedYdAlgebraData,
    ) -> Result<AlgebraFile> {
        let da = a.alg.dim;
        let dh = h.dim();
        Ok(AlgebraFile {
            format_version: FORMAT_VERSION,
            field: FieldSpec::of(h.field()),
            kind: "yd-module".into(),
            dim: da,
            labels: a.alg.labels.clone(),
            context: Some(ContextSpec::of_object(ctx, &a.obj)?),
            tensors: TensorSet {
                mul: Some(TensorData::from_tensor(&a.alg.mul)),
                unit: Some(TensorData::from_tensor(&a.alg.unit)),
                action: Some(TensorData::from_tensor(&a.action)),
                coaction: Some(TensorData::from_map(&a.coaction, &[da], &[dh, da])?),
                ..TensorSet::default()
            },
            base: Some(Box::new(AlgebraFile::from_braided(ctx, h)?)),
        })
    }

    /// Serialize a bicomodule algebra over a quasi-Hopf base.
    pub fn from_quasi_bicomodule(
        h: &QuasiHopfData,
        b: &BicomoduleAlgebraData,
        v: Option<&LinearMap>,
    ) -> Result<AlgebraFile> {
        let db = b.alg.dim;
        let dh = h.dim();
        Ok(AlgebraFile {
            format_version: FORMAT_VERSION,
            field: FieldSpec::of(h.field()),
            kind: "bicomodule-algebra".into(),
            dim: db,
            labels: b.alg.labels.clone(),
            context: None,
            tensors: TensorSet {
                mul: Some(TensorData::from_tensor(&b.alg.mul)),
                unit: Some(TensorData::from_tensor(&b.alg.unit)),
                rho: Some(TensorData::from_map(&b.rho, &[db], &[db, dh])?),
                lambda: Some(TensorData::from_map(&b.lambda, &[db], &[dh, db])?),
                v: match v {
                    Some(v) => Some(TensorData::from_map(v, &[dh], &[db])?),
                    None => None,
                },
                phi_r: Some(TensorData::from_tensor(&b.phi_r)),
                phi_r_inv: Some(TensorData::from_tensor(&b.phi_r_inv)),
                phi_l: Some(TensorData::from_tensor(&b.phi_l)),
                phi_l_inv: Some(TensorData::from_tensor(&b.phi_l_inv)),
                phi_lr: Some(TensorData::from_tensor(&b.phi_lr)),
                phi_lr_inv: Some(TensorData::from_tensor(&b.phi_lr_inv)),
                ..TensorSet::default()
            },
            base: Some(Box::new(AlgebraFile::from_quasi(h)?)),
        })
    }

    /// Serialize a bicomodule algebra over a weak Hopf base.
    pub fn from_weak_bicomodule(
        h: &WeakHopfData,
        alg: &AlgebraData,
        rho: &LinearMap,
        lambda: &LinearMap,
        v: Option<&LinearMap>,
    ) -> Result<AlgebraFile> {
        let db = alg.dim;
        let dh = h.dim();
        Ok(AlgebraFile {
            format_version: FORMAT_VERSION,
            field: FieldSpec::of(h.field()),
            kind: "bicomodule-algebra".into(),
            dim: db,
            labels: alg.labels.clone(),
            context: None,
            tensors: TensorSet {
                mul: Some(TensorData::from_tensor(&alg.mul)),
                unit: Some(TensorData::from_tensor(&alg.unit)),
                rho: Some(TensorData::from_map(rho, &[db], &[db, dh])?),
                lambda: Some(TensorData::from_map(lambda, &[db], &[dh, db])?),
                v: match v {
                    Some(v) => Some(TensorData::from_map(v, &[dh], &[db])?),
                    None => None,
                },
                ..TensorSet::default()
            },
            base: Some(Box::new(AlgebraFile::from_weak(h)?)),
        })
    }

    /// Serialize a bicomodule algebra over a braided Hopf base.
    pub fn from_braided_bicomodule(
        ctx: &BraidedContext,
        h: &BraidedHopfData,
        obj: &BObject,
        alg: &AlgebraData,
        rho: &LinearMap,
        lambda: &LinearMap,
        v: Option<&LinearMap>,
    ) -> Result<AlgebraFile> {
        let db = alg.dim;
        let dh = h.dim();
        Ok(AlgebraFile {
            format_version: FORMAT_VERSION,
            field: FieldSpec::of(h.field()),
            kind: "bicomodule-algebra".into(),
            dim: db,
            labels: alg.labels.clone(),
            context: Some(ContextSpec::of_object(ctx, obj)?),
            tensors: TensorSet {
                mul: Some(TensorData::from_tensor(&alg.mul)),
                unit: Some(TensorData::from_tensor(&alg.unit)),
                rho: Some(TensorData::from_map(rho, &[db], &[db, dh])?),
                lambda: Some(TensorData::from_map(lambda, &[db], &[dh, db])?),
                v: match v {
                    Some(v) => Some(TensorData::from_map(v, &[dh], &[db])?),
                    None => None,
                },
                ..TensorSet::default()
            },
            base: Some(Box::new(AlgebraFile::from_braided(ctx, h)?)),
        })
    }

    /// Parse any kind into its typed structure(s).
    pub fn parse_any(&self) -> Result<ParsedFile> {
        self.validate()?;
        let f = self.field()?;
        let d = self.dim;
        let t = &self.tensors;
        match self.kind.as_str() {
            "quasi-hopf" => Ok(ParsedFile::QuasiHopf(self.parse_quasi()?)),
            "weak-hopf" => Ok(ParsedFile::WeakHopf(self.parse_weak()?)),
            "braided-hopf" => {
                let (ctx, h) = self.parse_braided()?;
                Ok(ParsedFile::BraidedHopf(ctx, h))
            }
            "module-algebra" => {
                let base = self.base_file()?;
                match base.kind.as_str() {
                    "quasi-hopf" => {
                        let h = base.parse_quasi()?;
                        let action = req(&t.action, "action")?
                            .to_tensor_shaped(f, &[h.dim(), d, d], "action")?;
                        let a = ModuleAlgebraData { alg: self.algebra()?, action };
                        Ok(ParsedFile::QuasiModuleAlgebra(h, a))
                    }
                    "weak-hopf" => {
                        let h = base.parse_weak()?;
                        let action = req(&t.action, "action")?
                            .to_tensor_shaped(f, &[h.dim(), d, d], "action")?;
                        let a = WeakModuleAlgebraData { alg: self.algebra()?, action };
                        Ok(ParsedFile::WeakModuleAlgebra(h, a))
                    }
                    "braided-hopf" => {
                        let (ctx, h) = base.parse_braided()?;
                        let (_, obj) = self.braided_carrier(base)?;
                        let action = req(&t.action, "action")?
                            .to_tensor_shaped(f, &[h.dim(), d, d], "action")?;
                        let a = BraidedModuleAlgebraData { obj, alg: self.algebra()?, action };
                        Ok(ParsedFile::BraidedModuleAlgebra(ctx, h, a))
                    }
                    other => Err(parse_err(format!("module-algebra base kind {other:?} unsupported"))),
                }
            }
            "yd-module" => {
                let base = self.base_file()?;
                match base.kind.as_str() {
                    "quasi-hopf" => {
                        let h = base.parse_quasi()?;
                        let dh = h.dim();
                        let action =
                            req(&t.action, "action")?.to_tensor_shaped(f, &[dh, d, d], "action")?;
                        let coaction =
                            req(&t.coaction, "coaction")?.to_map(f, &[d], &[dh, d], "coaction")?;
                        if t.mul.is_some() {
                            let a = YdAlgebraData { alg: self.algebra()?, action, coaction };
                            Ok(ParsedFile::QuasiYdAlgebra(h, a))
                        } else {
                            let m = YdModuleData { dim: d, action, coaction };
                            Ok(ParsedFile::QuasiYd(h, m))
                        }
                    }
                    "weak-hopf" => {
                        let h = base.parse_weak()?;
                        let dh = h.dim();
                        let action =
                            req(&t.action, "action")?.to_tensor_shaped(f, &[dh, d, d], "action")?;
                        let coaction =
                            req(&t.coaction, "coaction")?.to_map(f, &[d], &[dh, d], "coaction")?;
                        let a = WeakYdAlgebraData { alg: self.algebra()?, action, coaction };
                        Ok(ParsedFile::WeakYdAlgebra(h, a))
                    }
                    "braided-hopf" => {
                        let (ctx, h) = base.parse_braided()?;
                        let (_, obj) = self.braided_carrier(base)?;
                        let dh = h.dim();
                        let action =
                            req(&t.action, "action")?.to_tensor_shaped(f, &[dh, d, d], "action")?;
                        let coaction =
                            req(&t.coaction, "coaction")?.to_map(f, &[d], &[dh, d], "coaction")?;
                        if t.mul.is_some() {
                            let a = BraidedYdAlgebraData { obj, alg: self.algebra()?, action, coaction };
                            Ok(ParsedFile::BraidedYdAlgebra(ctx, h, a))
                        } else {
                            let m = BraidedYdModuleData { obj, action, coaction };
                            Ok(ParsedFile::BraidedYd(ctx, h, m))
                        }
                    }
                    other => Err(parse_err(format!("yd-module base kind {other:?} unsupported"))),
                }
            }
            "bicomodule-algebra" => {
                let base = self.base_file()?;
                match base.kind.as_str() {
                    "quasi-hopf" => {
                        let h = base.parse_quasi()?;
                        let dh = h.dim();
                        let b = BicomoduleAlgebraData {
                            alg: self.algebra()?,
                            rho: req(&t.rho, "rho")?.to_map(f, &[d], &[d, dh], "rho")?,
                            lambda: req(&t.lambda, "lambda")?.to_map(f, &[d], &[dh, d], "lambda")?,
                            phi_r: req(&t.phi_r, "phi_r")?
                                .to_tensor_shaped(f, &[d, dh, dh], "phi_r")?,
                            phi_r_inv: req(&t.phi_r_inv, "phi_r_inv")?
                                .to_tensor_shaped(f, &[d, dh, dh], "phi_r_inv")?,
                            phi_l: req(&t.phi_l, "phi_l")?
                                .to_tensor_shaped(f, &[dh, dh, d], "phi_l")?,
                            phi_l_inv: req(&t.phi_l_inv, "phi_l_inv")?
                                .to_tensor_shaped(f, &[dh, dh, d], "phi_l_inv")?,
                            phi_lr: req(&t.phi_lr, "phi_lr")?
                                .to_tensor_shaped(f, &[dh, d, dh], "phi_lr")?,
                            phi_lr_inv: req(&t.phi_lr_inv, "phi_lr_inv")?
                                .to_tensor_shaped(f, &[dh, d, dh], "phi_lr_inv")?,
                        };
                        let v = match &t.v {
                            Some(v) => Some(v.to_map(f, &[dh], &[d], "v")?),
                            None => None,
                        };
                        Ok(ParsedFile::QuasiBicomodule(h, b, v))
                    }
                    "weak-hopf" => {
                        let h = base.parse_weak()?;
                        let dh = h.dim();
                        let b = WeakComoduleAlgebraData {
                            alg: self.algebra()?,
                            rho: Some(req(&t.rho, "rho")?.to_map(f, &[d], &[d, dh], "rho")?),
                            lambda: Some(
                                req(&t.lambda, "lambda")?.to_map(f, &[d], &[dh, d], "lambda")?,
                            ),
                        };
                        let v = match &t.v {
                            Some(v) => Some(v.to_map(f, &[dh], &[d], "v")?),
                            None => None,
                        };
                        Ok(ParsedFile::WeakBicomodule(h, b, v))
                    }
                    "braided-hopf" => {
                        let (ctx, h) = base.parse_braided()?;
                        let (_, obj) = self.braided_carrier(base)?;
                        let dh = h.dim();
                        let b = BraidedComoduleAlgebraData {
                            obj,
                            alg: self.algebra()?,
                            rho: Some(req(&t.rho, "rho")?.to_map(f, &[d], &[d, dh], "rho")?),
                            lambda: Some(
                                req(&t.lambda, "lambda")?.to_map(f, &[d], &[dh, d], "lambda")?,
                            ),
                        };
                        let v = match &t.v {
                            Some(v) => Some(v.to_map(f, &[dh], &[d], "v")?),
                            None => None,
                        };
                        Ok(ParsedFile::BraidedBicomodule(ctx, h, b, v))
                    }
                    other => {
                        Err(parse_err(format!("bicomodule-algebra base kind {other:?} unsupported")))
                    }
                }
            }
            other => Err(parse_err(format!("unknown kind {other:?}"))),
        }
    }

    /// Run the verification op matching this file's kind and return its
    /// report. Composite kinds (Yetter–Drinfeld module algebras over weak
    /// or braided bases) concatenate their module-algebra and
    /// Yetter–Drinfeld reports.
    pub fn verify(&self) -> Result<Report> {
        match self.parse_any()? {
            ParsedFile::QuasiHopf(h) => Ok(verify_quasi_hopf(&h)),
            ParsedFile::WeakHopf(h) => Ok(verify_weak_hopf(&h)),
            ParsedFile::BraidedHopf(ctx, h) => Ok(verify_braided_hopf(&ctx, &h)),
            ParsedFile::QuasiModuleAlgebra(h, a) => Ok(verify_module_algebra(&h, &a)),
            ParsedFile::WeakModuleAlgebra(h, a) => Ok(verify_weak_module_algebra(&h, &a)),
            ParsedFile::BraidedModuleAlgebra(ctx, h, a) => {
                Ok(verify_braided_module_algebra(&ctx, &h, &a))
            }
            ParsedFile::QuasiYd(h, m) => Ok(verify_yd(&h, &m)),
            ParsedFile::QuasiYdAlgebra(h, a) => Ok(verify_yd_algebra(&h, &a)),
            ParsedFile::WeakYdAlgebra(h, a) => {
                let mut r = Runner::new("verify_weak_yd_algebra");
                r.absorb(verify_weak_module_algebra(&h, &a.module_algebra()));
                r.absorb(verify_weak_comodule_algebra(
                    &h,
                    &WeakComoduleAlgebraData {
                        alg: a.alg.clone(),
                        rho: None,
                        lambda: Some(a.coaction.clone()),
                    },
                    ComoduleSide::Left,
                ));
                r.absorb(verify_weak_yd(&h, &a.yd_module()));
                Ok(r.finish())
            }
            ParsedFile::BraidedYd(ctx, h, m) => Ok(verify_braided_yd(&ctx, &h, &m)),
            ParsedFile::BraidedYdAlgebra(ctx, h, a) => {
                let mut r = Runner::new("verify_braided_yd_algebra");
                r.absorb(verify_braided_module_algebra(&ctx, &h, &a.module_algebra()));
                r.absorb(verify_braided_comodule_algebra(
                    &ctx,
                    &h,
                    &BraidedComoduleAlgebraData {
                        obj: a.obj.clone(),
                        alg: a.alg.clone(),
                        rho: None,
                        lambda: Some(a.coaction.clone()),
                    },
                    ComoduleSide::Left,
                ));
                r.absorb(verify_braided_yd(&ctx, &h, &a.yd_module()));
                Ok(r.finish())
            }
            ParsedFile::QuasiBicomodule(h, b, _) => Ok(verify_bicomodule_algebra(&h, &b)),
            ParsedFile::WeakBicomodule(h, b, _) => {
                Ok(verify_weak_comodule_algebra(&h, &b, ComoduleSide::Bi))
            }
            ParsedFile::BraidedBicomodule(ctx, h, b, _) => {
                Ok(verify_braided_comodule_algebra(&ctx, &h, &b, ComoduleSide::Bi))
            }
        }
    }
}
