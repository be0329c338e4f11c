//! Procedural ground-truth shapes: analytic SDF oracles and surface samplers.
//!
//! Every training shape is a small CSG tree over analytic primitives, so the
//! signed distance of any point is computable exactly. Surface samples are
//! obtained by Newton projection onto the zero level set; normals are the
//! normalized numeric SDF gradient. CSG min/max combinations yield a
//! conservative distance bound rather than an exact distance (the usual CSG
//! caveat), which is fine for occupancy and projection.

use crate::error::{CoreError, Result};
use crate::geom::{self, Vec3};
use crate::rng::Rng;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

/// Gradient step for central differences, also used for surface normals.
pub const GRAD_STEP: f64 = 1e-4;

/// Surface samples must satisfy |sdf| below this bound.
pub const SURFACE_TOL: f64 = 1e-3;

/// Shapes are normalized so their surface stays inside (−0.9, 0.9)³.
pub const NORMALIZATION_MARGIN: f64 = 0.9;

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum AnalyticShape {
    Sphere { center: Vec3, radius: f64 },
    Box { center: Vec3, half: Vec3 },
    /// Torus around the z axis through `center`.
    Torus { center: Vec3, major: f64, minor: f64 },
    Capsule { a: Vec3, b: Vec3, radius: f64 },
    Union { children: Vec<AnalyticShape> },
    Intersection { children: Vec<AnalyticShape> },
    SmoothUnion { blend: f64, children: Vec<AnalyticShape> },
}

/// A point on (or within `SURFACE_TOL` of) a shape's surface.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SurfaceSample {
    pub position: Vec3,
    pub normal: Vec3,
}

/// Signed distance. Negative inside, positive outside. Exact for primitives,
/// a conservative bound for CSG nodes.
pub fn sdf(shape: &AnalyticShape, x: Vec3) -> f64 {
    match shape {
        AnalyticShape::Sphere { center, radius } => geom::dist(x, *center) - radius,
        AnalyticShape::Box { center, half } => {
            let q = [
                (x[0] - center[0]).abs() - half[0],
                (x[1] - center[1]).abs() - half[1],
                (x[2] - center[2]).abs() - half[2],
            ];
            let outside = [q[0].max(0.0), q[1].max(0.0), q[2].max(0.0)];
            geom::norm(outside) + q[0].max(q[1]).max(q[2]).min(0.0)
        }
        AnalyticShape::Torus { center, major, minor } => {
            let p = geom::sub(x, *center);
            let ring = (p[0] * p[0] + p[1] * p[1]).sqrt() - major;
            (ring * ring + p[2] * p[2]).sqrt() - minor
        }
        AnalyticShape::Capsule { a, b, radius } => {
            let pa = geom::sub(x, *a);
            let ba = geom::sub(*b, *a);
            let h = (geom::dot(pa, ba) / geom::dot(ba, ba)).clamp(0.0, 1.0);
            geom::norm(geom::sub(pa, geom::scale(ba, h))) - radius
        }
        AnalyticShape::Union { children } => children
            .iter()
            .map(|c| sdf(c, x))
            .fold(f64::INFINITY, f64::min),
        AnalyticShape::Intersection { children } => children
            .iter()
            .map(|c| sdf(c, x))
            .fold(f64::NEG_INFINITY, f64::max),
        AnalyticShape::SmoothUnion { blend, children } => {
            let mut d = f64::INFINITY;
            for c in children {
                d = smooth_min(d, sdf(c, x), *blend);
            }
            d
        }
    }
}

/// Polynomial smooth minimum with blend radius `k`.
fn smooth_min(d1: f64, d2: f64, k: f64) -> f64 {
    if !d1.is_finite() {
        return d2;
    }
    let h = (0.5 + 0.5 * (d2 - d1) / k).clamp(0.0, 1.0);
    d2 * (1.0 - h) + d1 * h - k * h * (1.0 - h)
}

/// Numeric SDF gradient by central differences with step `GRAD_STEP`.
pub fn sdf_gradient(shape: &AnalyticShape, x: Vec3) -> Vec3 {
    let mut g = [0.0; 3];
    for axis in 0..3 {
        let mut hi = x;
        let mut lo = x;
        hi[axis] += GRAD_STEP;
        lo[axis] -= GRAD_STEP;
        g[axis] = (sdf(shape, hi) - sdf(shape, lo)) / (2.0 * GRAD_STEP);
    }
    g
}

const NEWTON_STEPS: usize = 64;

/// Project `x` onto the zero level set. Returns None if Newton iteration does
/// not reach `SURFACE_TOL / 2` within `NEWTON_STEPS` steps.
fn project_to_surface(shape: &AnalyticShape, mut x: Vec3) -> Option<Vec3> {
    let tol = SURFACE_TOL / 2.0;
    for _ in 0..NEWTON_STEPS {
        let d = sdf(shape, x);
        if d.abs() <= tol {
            return Some(x);
        }
        let g = geom::normalize(sdf_gradient(shape, x));
        if geom::norm(g) == 0.0 {
            return None;
        }
        x = geom::sub(x, geom::scale(g, d));
    }
    if sdf(shape, x).abs() <= tol {
        Some(x)
    } else {
        None
    }
}

/// Draw `n` surface samples. Deterministic given `seed`; sample `i` consumes
/// only the derived stream `(seed, i)`, so evaluation order does not matter.
///
/// Fails if more than 1% of samples need a projection restart.
pub fn sample_surface(shape: &AnalyticShape, n: usize, seed: u64) -> Result<Vec<SurfaceSample>> {
    if n == 0 {
        return Err(CoreError::InvalidArgument("sample count must be >= 1".into()));
    }
    let root = Rng::new(seed);
    let mut failures = 0usize;
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let mut first_attempt_failed = false;
        let mut found = None;
        for attempt in 0..64u64 {
            let mut rng = root.derive2(i as u64, attempt);
            let start = [
                rng.range(-NORMALIZATION_MARGIN, NORMALIZATION_MARGIN),
                rng.range(-NORMALIZATION_MARGIN, NORMALIZATION_MARGIN),
                rng.range(-NORMALIZATION_MARGIN, NORMALIZATION_MARGIN),
            ];
            if let Some(p) = project_to_surface(shape, start) {
                found = Some(p);
                break;
            }
            first_attempt_failed = true;
        }
        if first_attempt_failed {
            failures += 1;
        }
        match found {
            Some(p) => out.push(SurfaceSample {
                position: p,
                normal: geom::normalize(sdf_gradient(shape, p)),
            }),
            None => {
                return Err(CoreError::ProjectionFailed { failed: failures, total: n });
            }
        }
    }
    if failures * 100 > n {
        return Err(CoreError::ProjectionFailed { failed: failures, total: n });
    }
    Ok(out)
}

/// A point with its ground-truth signed distance and gradient, for training
/// the SDF decoder. 70% are drawn near the surface (|sdf| < 0.05), 30%
/// uniformly over the normalized cube.
#[derive(Debug, Clone, Copy)]
pub struct SdfPoint {
    pub position: Vec3,
    pub value: f64,
    pub gradient: Vec3,
}

pub fn sample_sdf_points(shape: &AnalyticShape, n: usize, seed: u64) -> Result<Vec<SdfPoint>> {
    if n == 0 {
        return Err(CoreError::InvalidArgument("sample count must be >= 1".into()));
    }
    let near = (n * 7) / 10;
    let surface = sample_surface(shape, near.max(1), seed ^ 0x5df0)?;
    let root = Rng::new(seed).derive(0x9d0f);
    let mut out = Vec::with_capacity(n);
    for (i, s) in surface.iter().take(near).enumerate() {
        let mut rng = root.derive(i as u64);
        let offset = rng.range(-0.05, 0.05);
        let p = geom::add(s.position, geom::scale(s.normal, offset));
        out.push(SdfPoint {
            position: p,
            value: sdf(shape, p),
            gradient: sdf_gradient(shape, p),
        });
    }
    let uni = root.derive(u64::MAX);
    for i in out.len()..n {
        let mut rng = uni.derive(i as u64);
        let p = [
            rng.range(-NORMALIZATION_MARGIN, NORMALIZATION_MARGIN),
            rng.range(-NORMALIZATION_MARGIN, NORMALIZATION_MARGIN),
            rng.range(-NORMALIZATION_MARGIN, NORMALIZATION_MARGIN),
        ];
        out.push(SdfPoint {
            position: p,
            value: sdf(shape, p),
            gradient: sdf_gradient(shape, p),
        });
    }
    Ok(out)
}

/// Which primitives the generator may draw.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PrimitiveKind {
    Sphere,
    Box,
    Torus,
    Capsule,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct GeneratorConfig {
    pub kinds: Vec<PrimitiveKind>,
    /// Probability that a shape is a two-primitive CSG combination.
    pub csg_probability: f64,
    /// Blend radius used for smooth unions.
    pub smooth_blend: f64,
    pub min_feature: f64,
    pub max_feature: f64,
    pub max_offset: f64,
}

impl Default for GeneratorConfig {
    fn default() -> Self {
        GeneratorConfig {
            kinds: vec![
                PrimitiveKind::Sphere,
                PrimitiveKind::Box,
                PrimitiveKind::Torus,
                PrimitiveKind::Capsule,
            ],
            csg_probability: 0.5,
            smooth_blend: 0.08,
            min_feature: 0.15,
            max_feature: 0.5,
            max_offset: 0.3,
        }
    }
}

impl GeneratorConfig {
    /// Spheres and boxes only, no CSG. The easiest of the desk datasets.
    pub fn sphere_box() -> Self {
        GeneratorConfig {
            kinds: vec![PrimitiveKind::Sphere, PrimitiveKind::Box],
            csg_probability: 0.0,
            ..Default::default()
        }
    }
}

/// Conservative axis-aligned bounds of the shape's surface.
fn bounds(shape: &AnalyticShape) -> (Vec3, Vec3) {
    match shape {
        AnalyticShape::Sphere { center, radius } => (
            geom::sub(*center, [*radius; 3]),
            geom::add(*center, [*radius; 3]),
        ),
        AnalyticShape::Box { center, half } => (geom::sub(*center, *half), geom::add(*center, *half)),
        AnalyticShape::Torus { center, major, minor } => {
            let r = major + minor;
            (
                geom::sub(*center, [r, r, *minor]),
                geom::add(*center, [r, r, *minor]),
            )
        }
        AnalyticShape::Capsule { a, b, radius } => (
            [
                a[0].min(b[0]) - radius,
                a[1].min(b[1]) - radius,
                a[2].min(b[2]) - radius,
            ],
            [
                a[0].max(b[0]) + radius,
                a[1].max(b[1]) + radius,
                a[2].max(b[2]) + radius,
            ],
        ),
        AnalyticShape::Union { children } => hull(children),
        AnalyticShape::Intersection { children } => {
            // The intersection lies inside every child.
            let mut lo = [f64::NEG_INFINITY; 3];
            let mut hi = [f64::INFINITY; 3];
            for c in children {
                let (clo, chi) = bounds(c);
                for k in 0..3 {
                    lo[k] = lo[k].max(clo[k]);
                    hi[k] = hi[k].min(chi[k]);
                }
            }
            (lo, hi)
        }
        AnalyticShape::SmoothUnion { blend, children } => {
            let (lo, hi) = hull(children);
            (geom::sub(lo, [*blend; 3]), geom::add(hi, [*blend; 3]))
        }
    }
}

fn hull(children: &[AnalyticShape]) -> (Vec3, Vec3) {
    let mut lo = [f64::INFINITY; 3];
    let mut hi = [f64::NEG_INFINITY; 3];
    for c in children {
        let (clo, chi) = bounds(c);
        for k in 0..3 {
            lo[k] = lo[k].min(clo[k]);
            hi[k] = hi[k].max(chi[k]);
        }
    }
    (lo, hi)
}

fn shape_in_cube(shape: &AnalyticShape) -> bool {
    let (lo, hi) = bounds(shape);
    let m = NORMALIZATION_MARGIN - 0.01;
    lo.iter().all(|&v| v > -m) && hi.iter().all(|&v| v < m)
}

fn random_primitive(cfg: &GeneratorConfig, rng: &mut Rng, scale: f64) -> AnalyticShape {
    let kind = cfg.kinds[rng.below(cfg.kinds.len())];
    let center = [
        rng.range(-cfg.max_offset, cfg.max_offset),
        rng.range(-cfg.max_offset, cfg.max_offset),
        rng.range(-cfg.max_offset, cfg.max_offset),
    ];
    let feat = |rng: &mut Rng| rng.range(cfg.min_feature, cfg.max_feature) * scale;
    match kind {
        PrimitiveKind::Sphere => AnalyticShape::Sphere { center, radius: feat(rng) },
        PrimitiveKind::Box => AnalyticShape::Box {
            center,
            half: [feat(rng), feat(rng), feat(rng)],
        },
        PrimitiveKind::Torus => {
            let major = feat(rng).max(0.2 * scale);
            let minor = rng.range(0.25, 0.5) * major;
            AnalyticShape::Torus { center, major, minor }
        }
        PrimitiveKind::Capsule => {
            let radius = (0.5 * feat(rng)).max(0.08 * scale);
            let half_len = feat(rng);
            let dir = geom::normalize([rng.normal(), rng.normal(), rng.normal()]);
            AnalyticShape::Capsule {
                a: geom::sub(center, geom::scale(dir, half_len)),
                b: geom::add(center, geom::scale(dir, half_len)),
                radius,
            }
        }
    }
}

fn random_shape(cfg: &GeneratorConfig, rng: &mut Rng) -> AnalyticShape {
    if !rng.bernoulli(cfg.csg_probability) {
        return random_primitive(cfg, rng, 1.0);
    }
    let a = random_primitive(cfg, rng, 0.8);
    let mut b = random_primitive(cfg, rng, 0.8);
    // Pull the second primitive toward the first so CSG children overlap.
    let (alo, ahi) = bounds(&a);
    let a_center = geom::scale(geom::add(alo, ahi), 0.5);
    b = translate_toward(b, a_center, 0.6);
    match rng.below(3) {
        0 => AnalyticShape::Union { children: vec![a, b] },
        1 => AnalyticShape::Intersection { children: vec![a, b] },
        _ => AnalyticShape::SmoothUnion { blend: cfg.smooth_blend, children: vec![a, b] },
    }
}

fn translate_toward(shape: AnalyticShape, target: Vec3, t: f64) -> AnalyticShape {
    let (lo, hi) = bounds(&shape);
    let center = geom::scale(geom::add(lo, hi), 0.5);
    let delta = geom::scale(geom::sub(target, center), t);
    translate(shape, delta)
}

fn translate(shape: AnalyticShape, d: Vec3) -> AnalyticShape {
    match shape {
        AnalyticShape::Sphere { center, radius } => AnalyticShape::Sphere { center: geom::add(center, d), radius },
        AnalyticShape::Box { center, half } => AnalyticShape::Box { center: geom::add(center, d), half },
        AnalyticShape::Torus { center, major, minor } => AnalyticShape::Torus { center: geom::add(center, d), major, minor },
        AnalyticShape::Capsule { a, b, radius } => AnalyticShape::Capsule {
            a: geom::add(a, d),
            b: geom::add(b, d),
            radius,
        },
        AnalyticShape::Union { children } => AnalyticShape::Union {
            children: children.into_iter().map(|c| translate(c, d)).collect(),
        },
        AnalyticShape::Intersection { children } => AnalyticShape::Intersection {
            children: children.into_iter().map(|c| translate(c, d)).collect(),
        },
        AnalyticShape::SmoothUnion { blend, children } => AnalyticShape::SmoothUnion {
            blend,
            children: children.into_iter().map(|c| translate(c, d)).collect(),
        },
    }
}

/// A shape is usable if it fits the cube, has interior volume, and projection
/// converges for a handful of probe samples.
fn shape_is_valid(shape: &AnalyticShape, probe_seed: u64) -> bool {
    if !shape_in_cube(shape) {
        return false;
    }
    // Interior probe: some point must be clearly inside.
    let (lo, hi) = bounds(shape);
    let mid = geom::scale(geom::add(lo, hi), 0.5);
    let mut has_interior = sdf(shape, mid) < -0.02;
    if !has_interior {
        let mut rng = Rng::new(probe_seed).derive(1);
        for _ in 0..256 {
            let p = [
                rng.range(lo[0], hi[0]),
                rng.range(lo[1], hi[1]),
                rng.range(lo[2], hi[2]),
            ];
            if sdf(shape, p) < -0.02 {
                has_interior = true;
                break;
            }
        }
    }
    has_interior && sample_surface(shape, 32, probe_seed).is_ok()
}

const RESAMPLE_LIMIT: usize = 100;

/// Generate `count` randomized shapes. Shape `i` depends only on `(seed, i)`.
pub fn make_dataset(cfg: &GeneratorConfig, count: usize, seed: u64) -> Result<Vec<AnalyticShape>> {
    if count == 0 {
        return Err(CoreError::InvalidArgument("dataset count must be >= 1".into()));
    }
    if cfg.kinds.is_empty() {
        return Err(CoreError::InvalidArgument("no primitive kinds enabled".into()));
    }
    let root = Rng::new(seed);
    let mut shapes = Vec::with_capacity(count);
    for i in 0..count {
        let mut ok = None;
        for attempt in 0..RESAMPLE_LIMIT {
            let mut rng = root.derive2(i as u64, attempt as u64);
            let candidate = random_shape(cfg, &mut rng);
            if shape_is_valid(&candidate, seed ^ (i as u64) << 8 ^ attempt as u64) {
                ok = Some(candidate);
                break;
            }
        }
        match ok {
            Some(s) => shapes.push(s),
            None => return Err(CoreError::ShapeOutOfBounds(RESAMPLE_LIMIT)),
        }
    }
    Ok(shapes)
}

/// Dataset manifest: one record per shape plus the generating config, stored
/// as JSON and referenced by content hash from training configs.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DatasetManifest {
    pub seed: u64,
    pub config: GeneratorConfig,
    pub shapes: Vec<AnalyticShape>,
}

impl DatasetManifest {
    pub fn generate(cfg: GeneratorConfig, count: usize, seed: u64) -> Result<Self> {
        let shapes = make_dataset(&cfg, count, seed)?;
        Ok(DatasetManifest { seed, config: cfg, shapes })
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }

    pub fn save(&self, path: &std::path::Path) -> Result<()> {
        std::fs::write(path, self.to_json()?)?;
        Ok(())
    }

    pub fn load(path: &std::path::Path) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    /// SHA-256 of the serialized manifest.
    pub fn content_hash(&self) -> Result<String> {
        let bytes = serde_json::to_vec(self)?;
        let mut h = Sha256::new();
        h.update(&bytes);
        Ok(format!("{:x}", h.finalize()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sphere(r: f64) -> AnalyticShape {
        AnalyticShape::Sphere { center: [0.0; 3], radius: r }
    }

    #[test]
    fn sphere_center_distance() {
        assert_eq!(sdf(&sphere(0.5), [0.0; 3]), -0.5);
        assert_eq!(sdf(&sphere(0.5), [0.5, 0.0, 0.0]), 0.0);
    }

    #[test]
    fn union_of_touching_spheres() {
        let u = AnalyticShape::Union {
            children: vec![
                AnalyticShape::Sphere { center: [-0.3, 0.0, 0.0], radius: 0.3 },
                AnalyticShape::Sphere { center: [0.3, 0.0, 0.0], radius: 0.3 },
            ],
        };
        // Both children evaluate to 0 at the origin; min(0, 0) = 0.
        assert_eq!(sdf(&u, [0.0; 3]), 0.0);
    }

    #[test]
    fn box_sdf_signs() {
        let b = AnalyticShape::Box { center: [0.0; 3], half: [0.4; 3] };
        assert!(sdf(&b, [0.0; 3]) < 0.0);
        assert!((sdf(&b, [0.4, 0.0, 0.0])).abs() < 1e-12);
        assert!((sdf(&b, [0.6, 0.0, 0.0]) - 0.2).abs() < 1e-12);
        // Exterior corner: Euclidean distance to the box corner.
        let d = sdf(&b, [0.6, 0.6, 0.6]);
        assert!((d - (3.0f64).sqrt() * 0.2).abs() < 1e-12);
    }

    #[test]
    fn sphere_samples_on_shell() {
        let s = sphere(0.5);
        let samples = sample_surface(&s, 1000, 11).unwrap();
        for smp in &samples {
            let r = geom::norm(smp.position);
            assert!((r - 0.5).abs() <= SURFACE_TOL, "r = {r}");
        }
    }

    #[test]
    fn sampling_is_deterministic() {
        let s = AnalyticShape::Torus { center: [0.1, 0.0, -0.05], major: 0.4, minor: 0.12 };
        let a = sample_surface(&s, 500, 3).unwrap();
        let b = sample_surface(&s, 500, 3).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn box_samples_on_faces() {
        let b = AnalyticShape::Box { center: [0.0; 3], half: [0.4; 3] };
        let samples = sample_surface(&b, 10_000, 5).unwrap();
        let on_face = samples
            .iter()
            .filter(|s| {
                let m = s.position.iter().map(|v| v.abs()).fold(0.0, f64::max);
                (m - 0.4).abs() <= SURFACE_TOL
            })
            .count();
        assert!(on_face * 100 >= samples.len() * 99, "{on_face}/{}", samples.len());
    }

    #[test]
    fn samples_have_unit_normals_and_small_sdf() {
        let cfg = GeneratorConfig::default();
        let shapes = make_dataset(&cfg, 8, 17).unwrap();
        for (i, shape) in shapes.iter().enumerate() {
            let samples = sample_surface(shape, 200, 23 + i as u64).unwrap();
            for s in &samples {
                assert!(sdf(shape, s.position).abs() <= SURFACE_TOL);
                let n = geom::norm(s.normal);
                assert!((n - 1.0).abs() <= 1e-6, "normal norm {n}");
                let g = geom::norm(sdf_gradient(shape, s.position));
                assert!((g - 1.0).abs() <= 1e-2, "gradient norm {g}");
            }
        }
    }

    #[test]
    fn dataset_rejects_zero_count() {
        assert!(make_dataset(&GeneratorConfig::default(), 0, 1).is_err());
    }

    #[test]
    fn dataset_is_deterministic() {
        let cfg = GeneratorConfig::default();
        let a = make_dataset(&cfg, 200, 7).unwrap();
        let b = make_dataset(&cfg, 7, 7).unwrap();
        assert_eq!(&a[..7], &b[..]);
        let c = make_dataset(&cfg, 200, 7).unwrap();
        assert_eq!(a, c);
    }

    #[test]
    fn dataset_surfaces_inside_margin() {
        let cfg = GeneratorConfig::default();
        let shapes = make_dataset(&cfg, 200, 9).unwrap();
        for (i, shape) in shapes.iter().enumerate() {
            let samples = sample_surface(shape, 64, 1000 + i as u64).unwrap();
            for s in samples {
                for k in 0..3 {
                    assert!(
                        s.position[k].abs() < NORMALIZATION_MARGIN,
                        "shape {i} escapes at {:?}",
                        s.position
                    );
                }
            }
        }
    }

    #[test]
    fn primitives_are_lipschitz() {
        let prims = [
            sphere(0.4),
            AnalyticShape::Box { center: [0.1, -0.2, 0.0], half: [0.3, 0.2, 0.4] },
            AnalyticShape::Torus { center: [0.0; 3], major: 0.4, minor: 0.1 },
            AnalyticShape::Capsule { a: [-0.3, 0.0, 0.0], b: [0.3, 0.2, 0.1], radius: 0.15 },
        ];
        let mut rng = Rng::new(99);
        for shape in &prims {
            for _ in 0..500 {
                let x = [rng.range(-1.0, 1.0), rng.range(-1.0, 1.0), rng.range(-1.0, 1.0)];
                let y = [rng.range(-1.0, 1.0), rng.range(-1.0, 1.0), rng.range(-1.0, 1.0)];
                let lhs = (sdf(shape, x) - sdf(shape, y)).abs();
                assert!(lhs <= geom::dist(x, y) + 1e-12);
            }
        }
    }

    #[test]
    fn sdf_points_mix_near_and_uniform() {
        let s = sphere(0.5);
        let pts = sample_sdf_points(&s, 1000, 4).unwrap();
        assert_eq!(pts.len(), 1000);
        let near = pts.iter().filter(|p| p.value.abs() < 0.05 + 1e-9).count();
        assert!(near >= 700, "near {near}");
        for p in &pts {
            assert!((p.value - sdf(&s, p.position)).abs() < 1e-12);
        }
    }

    #[test]
    fn manifest_round_trip_and_hash() {
        let m = DatasetManifest::generate(GeneratorConfig::sphere_box(), 5, 42).unwrap();
        let json = m.to_json().unwrap();
        let m2 = DatasetManifest::from_json(&json).unwrap();
        assert_eq!(m.shapes, m2.shapes);
        assert_eq!(m.content_hash().unwrap(), m2.content_hash().unwrap());
    }
}
