use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A polyline in `ℂ ∖ {0, 1}`.
///
/// Paths built with [`Path::new`] or parsed from a literal start at a real
/// base point in `(0, 1)`, where every multiple polylogarithm takes its
/// principal value. [`Path::from_points`] allows any start and is used for
/// sub-paths and anchored integrals.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Path {
    points: Vec<Complex64>,
    delta: f64,
    sigma: f64,
}

/// Distance from the segment `[a, b]` to the point `p`.
pub fn segment_distance(a: Complex64, b: Complex64, p: Complex64) -> f64 {
    let d = b - a;
    let len2 = d.norm_sqr();
    if len2 == 0.0 {
        return (a - p).norm();
    }
    let t = (((p - a) * d.conj()).re / len2).clamp(0.0, 1.0);
    (a + d * t - p).norm()
}

/// Distance from `z` to the nearer of the singular points `0` and `1`.
pub fn singular_distance(z: Complex64) -> f64 {
    z.norm().min((z - 1.0).norm())
}

impl Path {
    /// Path from the real base point `base ∈ (0, 1)` through `vertices`.
    pub fn new(base: f64, vertices: Vec<Complex64>) -> Result<Path> {
        if !(base > 0.0 && base < 1.0) {
            return Err(Error::InvalidPath(format!("base point {base} is not in (0, 1)")));
        }
        let mut points = vec![Complex64::new(base, 0.0)];
        points.extend(vertices);
        Path::from_points(points)
    }

    /// Polyline through `points`, which must avoid `0` and `1`.
    pub fn from_points(points: Vec<Complex64>) -> Result<Path> {
        if points.is_empty() {
            return Err(Error::InvalidPath("a path needs at least one point".into()));
        }
        if points.iter().any(|z| !z.is_finite()) {
            return Err(Error::InvalidPath("non-finite vertex".into()));
        }
        let mut delta = singular_distance(points[0]);
        let mut sigma = 0.0;
        for pair in points.windows(2) {
            let (a, b) = (pair[0], pair[1]);
            sigma += (b - a).norm();
            delta = delta
                .min(segment_distance(a, b, Complex64::new(0.0, 0.0)))
                .min(segment_distance(a, b, Complex64::new(1.0, 0.0)));
        }
        if delta <= 0.0 {
            return Err(Error::InvalidPath("the path meets a singular point 0 or 1".into()));
        }
        Ok(Path { points, delta, sigma })
    }

    /// Straight path from `a` to `b`.
    pub fn segment(a: Complex64, b: Complex64) -> Result<Path> {
        Path::from_points(vec![a, b])
    }

    /// The path `0.5 → i → 1/z` used to reach `1/z` for `z ∈ (0, 1)`
    /// through the upper half plane.
    pub fn to_inverse(z: f64) -> Result<Path> {
        if !(z > 0.0 && z < 1.0) {
            return Err(Error::Domain(format!("{z} is not in (0, 1)")));
        }
        Path::new(0.5, vec![Complex64::new(0.0, 1.0), Complex64::new(1.0 / z, 0.0)])
    }

    /// A closed polygonal loop around `center` of the given radius,
    /// starting and ending at `base`, traversed `turns` times; negative
    /// `turns` go clockwise.
    pub fn loop_around(base: f64, center: Complex64, radius: f64, turns: i32, sides: usize) -> Result<Path> {
        let start = Complex64::new(base, 0.0);
        let offset = start - center;
        let phase0 = offset.arg();
        let r0 = offset.norm();
        let mut pts = Vec::new();
        if (r0 - radius).abs() > 1e-15 {
            pts.push(center + Complex64::from_polar(radius, phase0));
        }
        let total = sides * turns.unsigned_abs() as usize;
        let dir = f64::from(turns.signum());
        for j in 1..=total {
            let th = phase0 + dir * std::f64::consts::TAU * j as f64 / sides as f64;
            pts.push(center + Complex64::from_polar(radius, th));
        }
        if (r0 - radius).abs() > 1e-15 {
            pts.push(start);
        } else if let Some(last) = pts.last_mut() {
            *last = start;
        }
        Path::new(base, pts)
    }

    pub fn points(&self) -> &[Complex64] {
        &self.points
    }

    pub fn start(&self) -> Complex64 {
        self.points[0]
    }

    pub fn end(&self) -> Complex64 {
        *self.points.last().expect("nonempty")
    }

    /// Real base point when the path starts on `(0, 1)`.
    pub fn base(&self) -> Option<f64> {
        let s = self.start();
        (s.im == 0.0 && s.re > 0.0 && s.re < 1.0).then_some(s.re)
    }

    /// Minimal distance from the path to `{0, 1}`.
    pub fn delta(&self) -> f64 {
        self.delta
    }

    /// Total arclength.
    pub fn sigma(&self) -> f64 {
        self.sigma
    }

    pub fn segments(&self) -> impl Iterator<Item = (Complex64, Complex64)> + '_ {
        self.points.windows(2).map(|p| (p[0], p[1]))
    }

    /// This path followed by `other`, which must start at our end point.
    pub fn concat(&self, other: &Path) -> Result<Path> {
        if (other.start() - self.end()).norm() > 1e-14 {
            return Err(Error::InvalidPath(format!(
                "cannot join a path ending at {} to one starting at {}",
                self.end(),
                other.start()
            )));
        }
        let mut pts = self.points.clone();
        pts.extend_from_slice(&other.points[1..]);
        Path::from_points(pts)
    }

    /// Splits the path at the point a fraction `s ∈ [0, 1]` along its length.
    pub fn split_at_fraction(&self, s: f64) -> Result<(Path, Path)> {
        let target = s.clamp(0.0, 1.0) * self.sigma;
        let mut walked = 0.0;
        for (i, (a, b)) in self.segments().enumerate() {
            let len = (b - a).norm();
            if walked + len >= target || i + 2 == self.points.len() {
                let t = if len == 0.0 { 0.0 } else { ((target - walked) / len).clamp(0.0, 1.0) };
                let mid = a + (b - a) * t;
                let mut first = self.points[..=i].to_vec();
                first.push(mid);
                let mut second = vec![mid];
                second.extend_from_slice(&self.points[i + 1..]);
                return Ok((Path::from_points(first)?, Path::from_points(second)?));
            }
            walked += len;
        }
        Ok((Path::from_points(vec![self.start()])?, self.clone()))
    }
}

impl FromStr for Path {
    type Err = Error;

    /// Parses `"0.5 -> 0.5+1i -> 2"`; the first point is the base point.
    fn from_str(s: &str) -> Result<Path> {
        let pts = s
            .split("->")
            .map(|p| parse_complex(p.trim()))
            .collect::<Result<Vec<_>>>()?;
        let base = pts[0];
        if base.im != 0.0 {
            return Err(Error::InvalidPath(format!("base point {base} is not real")));
        }
        Path::new(base.re, pts[1..].to_vec())
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.points.iter().map(|z| format!("{z}")).collect();
        f.write_str(&parts.join(" -> "))
    }
}

/// Parses a complex literal such as `0.5`, `-1i`, `i` or `0.3-0.2i`.
pub fn parse_complex(s: &str) -> Result<Complex64> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let fixed = match t.as_str() {
        "i" | "+i" => "1i".to_string(),
        "-i" => "-1i".to_string(),
        _ => t.replace("+i", "+1i").replace("-i", "-1i"),
    };
    fixed
        .parse::<Complex64>()
        .map_err(|e| Error::Parse(format!("bad complex number {s:?}: {e}")))
}
