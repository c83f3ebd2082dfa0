//! The Psi valuation on pointed rational cones of dimension at most three.
//!
//! Unimodular cones in dimension two and three have closed formulas in the
//! normalized inner products of their generators. Two-dimensional cones
//! that are not unimodular are subdivided Hirzebruch-Jung style into
//! unimodular pieces; every interior ray is counted twice by the pieces, so
//! it is subtracted once with value `1/2`.
//!
//! Inner products are always the Euclidean ones of the ambient space the
//! generators live in; the lattice basis only decides unimodularity and
//! lattice membership.

use num_integer::{ExtendedGcd, Integer as _};
use num_traits::{One, Signed, Zero};

use crate::exact::{coordinates_in, determinant, inner_product, project_orthogonal, Vector};
use crate::error::{Error, Result};
use crate::permdata::SubsetIndex;
use crate::{int, rat, Integer, RatVector, Rational};

/// A cone `Cone(generators)` together with a basis of its reference lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeSpec {
    pub generators: Vec<RatVector>,
    pub lattice_basis: Vec<RatVector>,
}

impl ConeSpec {
    pub fn new(generators: Vec<RatVector>, lattice_basis: Vec<RatVector>) -> Self {
        ConeSpec { generators, lattice_basis }
    }

    /// Cone in `Z^d` with the standard basis, from integer generators.
    pub fn standard(generators: &[&[i64]]) -> Self {
        let dim = generators.first().map_or(0, |g| g.len());
        let gens = generators.iter().map(|g| int_vector(g)).collect();
        let basis = (0..dim)
            .map(|i| {
                let mut e = vec![0; dim];
                e[i] = 1;
                int_vector(&e)
            })
            .collect();
        ConeSpec::new(gens, basis)
    }

    pub fn dim(&self) -> usize {
        self.generators.len()
    }

    fn lattice_coords(&self, v: &RatVector) -> Result<Vec<Rational>> {
        coordinates_in(v, &self.lattice_basis)?.ok_or(Error::NotInLattice)
    }

    fn integer_coords(&self, v: &RatVector) -> Result<Vec<Integer>> {
        self.lattice_coords(v)?
            .into_iter()
            .map(|c| if c.is_integer() { Ok(c.to_integer()) } else { Err(Error::NotInLattice) })
            .collect()
    }

    /// Errors unless the generators form a basis of the lattice.
    fn check_unimodular(&self) -> Result<()> {
        if self.lattice_basis.len() != self.generators.len() {
            return Err(Error::UnsupportedDimension(self.lattice_basis.len()));
        }
        let rows: Vec<Vec<Rational>> = self
            .generators
            .iter()
            .map(|g| self.integer_coords(g).map(|c| c.into_iter().map(Rational::from_integer).collect()))
            .collect::<Result<_>>()?;
        let det = determinant(&rows)?;
        if det.abs() != Rational::one() {
            return Err(Error::NotUnimodular { det: det.abs().to_string() });
        }
        Ok(())
    }

    fn lattice_point(&self, coords: &[Integer]) -> RatVector {
        let dim = self.lattice_basis.first().map_or(0, Vector::dim);
        let mut v = Vector::zeros(dim);
        for (c, b) in coords.iter().zip(&self.lattice_basis) {
            v = v.add(&b.scale(&Rational::from_integer(c.clone()))).expect("equal dims");
        }
        v
    }
}

fn int_vector(xs: &[i64]) -> RatVector {
    Vector::new(xs.iter().map(|&x| int(x)).collect())
}

/// `Ψ` of the zero cone (a point) is 1 and of a ray is 1/2.
pub fn psi_dim01(c: &ConeSpec) -> Result<Rational> {
    match c.generators.as_slice() {
        [] => Ok(int(1)),
        [g] => {
            let coords = c.integer_coords(g)?;
            if coords.iter().all(Zero::is_zero) {
                return Err(Error::NotPointed);
            }
            Ok(rat(1, 2))
        }
        gens => Err(Error::UnsupportedDimension(gens.len())),
    }
}

/// `1/4 + 1/12 (<u1,u2>/<u1,u1> + <u1,u2>/<u2,u2>)`, with no lattice check.
fn psi2_formula(u1: &RatVector, u2: &RatVector) -> Result<Rational> {
    let cross = inner_product(u1, u2)?;
    let n1 = inner_product(u1, u1)?;
    let n2 = inner_product(u2, u2)?;
    Ok(rat(1, 4) + (cross.clone() / n1 + cross / n2) / int(12))
}

pub fn psi_dim2_unimodular(c: &ConeSpec) -> Result<Rational> {
    let [u1, u2] = c.generators.as_slice() else {
        return Err(Error::UnsupportedDimension(c.dim()));
    };
    c.check_unimodular()?;
    psi2_formula(u1, u2)
}

/// Unimodular subdivision of a two-dimensional cone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    /// Unimodular pieces, consecutive ones sharing a ray.
    pub cones: Vec<(RatVector, RatVector)>,
    /// Rays shared by consecutive pieces.
    pub rays: Vec<RatVector>,
}

fn det2(a: &[Integer; 2], b: &[Integer; 2]) -> Integer {
    &a[0] * &b[1] - &a[1] * &b[0]
}

fn primitive(coords: Vec<Rational>) -> Result<[Integer; 2]> {
    let [x, y]: [Rational; 2] = coords.try_into().map_err(|_| Error::UnsupportedDimension(0))?;
    let denom = x.denom().lcm(y.denom());
    let xi = x.numer() * (&denom / x.denom());
    let yi = y.numer() * (&denom / y.denom());
    let g = xi.gcd(&yi);
    if g.is_zero() {
        return Err(Error::NotPointed);
    }
    Ok([xi / &g, yi / &g])
}

/// Subdivides `Cone(a, b)` into unimodular cones by repeatedly inserting
/// the lattice vector `c` adjacent to `a` on the boundary of the convex hull
/// of the nonzero lattice points of the cone (`det(a, c) = ±1`).
pub fn unimodular_decomposition(c: &ConeSpec) -> Result<Decomposition> {
    let [g1, g2] = c.generators.as_slice() else {
        return Err(Error::UnsupportedDimension(c.dim()));
    };
    if c.lattice_basis.len() != 2 {
        return Err(Error::UnsupportedDimension(c.lattice_basis.len()));
    }
    let mut a = primitive(c.lattice_coords(g1)?)?;
    let b = primitive(c.lattice_coords(g2)?)?;
    let d = det2(&a, &b);
    if d.is_zero() {
        return Err(if a == b { Error::UnsupportedDimension(1) } else { Error::NotPointed });
    }
    let sign = d.signum();

    let mut cones = Vec::new();
    let mut rays = Vec::new();
    let mut index = d.abs();
    while !index.is_one() {
        // c0 with det(a, c0) = sign, then shift along a into the cone
        let ExtendedGcd { gcd, x, y } = a[0].extended_gcd(&a[1]);
        debug_assert!(gcd.is_one());
        let c0 = [-(&sign * &y), &sign * &x];
        let base = &sign * det2(&c0, &b);
        let r = base.mod_floor(&index);
        let lambda = (&r - &base) / &index;
        let next = [&c0[0] + &lambda * &a[0], &c0[1] + &lambda * &a[1]];
        debug_assert!((&sign * det2(&a, &next)).is_one());
        cones.push((c.lattice_point(&a), c.lattice_point(&next)));
        rays.push(c.lattice_point(&next));
        a = next;
        index = r;
    }
    cones.push((c.lattice_point(&a), c.lattice_point(&b)));
    Ok(Decomposition { cones, rays })
}

/// `Ψ` of any pointed two-dimensional rational cone.
pub fn psi_dim2_general(c: &ConeSpec) -> Result<Rational> {
    let dec = match unimodular_decomposition(c) {
        Err(Error::UnsupportedDimension(1)) => return Ok(rat(1, 2)),
        other => other?,
    };
    let mut total = Rational::zero();
    for (u1, u2) in &dec.cones {
        total += psi2_formula(u1, u2)?;
    }
    total -= Rational::from_integer(dec.rays.len().into()) * rat(1, 2);
    Ok(total)
}

/// `1/8 + 1/24 Σ_{p<q} (<u_p,u_q>/<u_p,u_p> + <u_p,u_q>/<u_q,u_q>)`.
pub fn psi_dim3_unimodular(c: &ConeSpec) -> Result<Rational> {
    if c.dim() != 3 {
        return Err(Error::UnsupportedDimension(c.dim()));
    }
    c.check_unimodular()?;
    let u = &c.generators;
    let mut sum = Rational::zero();
    for p in 0..3 {
        for q in (p + 1)..3 {
            let cross = inner_product(&u[p], &u[q])?;
            sum += cross.clone() / inner_product(&u[p], &u[p])? + cross / inner_product(&u[q], &u[q])?;
        }
    }
    Ok(rat(1, 8) + sum / int(24))
}

/// Projections of `e_l - e_{l+1}`, `l ∈ [n] \ S`, onto the orthogonal
/// complement of `L_S = span(e_i - e_{i+1} : i ∈ S)` in the sum-zero
/// hyperplane. They generate `fcone^p(F_S, Π_n)` and are a basis of the
/// quotient lattice `Λ_S`, so they are returned as both.
pub fn fcone_generators(s: &SubsetIndex) -> Result<(Vec<RatVector>, Vec<RatVector>)> {
    let dim = s.n() + 1;
    let face_span: Vec<RatVector> =
        s.members().iter().map(|&i| Vector::difference_of_units(dim, i - 1, i)).collect();
    let gens = s
        .complement()
        .members()
        .iter()
        .map(|&l| project_orthogonal(&Vector::difference_of_units(dim, l - 1, l), &face_span))
        .collect::<Result<Vec<_>>>()?;
    Ok((gens.clone(), gens))
}

/// `α_n(S) = Ψ(fcone^p(F_S, Π_n), Λ_S)` for codimension at most three.
pub fn alpha_via_psi(s: &SubsetIndex) -> Result<Rational> {
    if s.codim() > 3 {
        return Err(Error::UnsupportedDimension(s.codim()));
    }
    let (gens, lattice) = fcone_generators(s)?;
    let cone = ConeSpec::new(gens, lattice);
    match cone.dim() {
        0 | 1 => psi_dim01(&cone),
        2 => psi_dim2_unimodular(&cone),
        _ => psi_dim3_unimodular(&cone),
    }
}

/// Integral convex polygon, vertices counterclockwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polygon {
    vertices: Vec<[i64; 2]>,
}

fn cross(o: [i64; 2], a: [i64; 2], b: [i64; 2]) -> i64 {
    (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
}

impl Polygon {
    /// Requires at least three distinct vertices in strictly convex,
    /// counterclockwise position.
    pub fn new(vertices: Vec<[i64; 2]>) -> Result<Self> {
        let k = vertices.len();
        if k < 3 {
            return Err(Error::DegeneratePolygon(format!("{k} vertices")));
        }
        for i in 0..k {
            let (p, q, r) = (vertices[i], vertices[(i + 1) % k], vertices[(i + 2) % k]);
            if cross(p, q, r) <= 0 {
                return Err(Error::DegeneratePolygon(format!(
                    "vertices {p:?}, {q:?}, {r:?} are not in strictly convex counterclockwise position"
                )));
            }
        }
        // left turns everywhere still allow a star; every vertex must lie
        // strictly left of every edge it is not on
        for i in 0..k {
            let (p, q) = (vertices[i], vertices[(i + 1) % k]);
            let outside = (0..k)
                .filter(|&j| j != i && j != (i + 1) % k)
                .any(|j| cross(p, q, vertices[j]) <= 0);
            if outside {
                return Err(Error::DegeneratePolygon("boundary is not convex".into()));
            }
        }
        Ok(Polygon { vertices })
    }

    /// Convex hull of a point set (collinear boundary points dropped).
    pub fn convex_hull(points: &[[i64; 2]]) -> Result<Self> {
        let mut pts = points.to_vec();
        pts.sort_unstable();
        pts.dedup();
        if pts.len() < 3 {
            return Err(Error::DegeneratePolygon(format!("{} distinct points", pts.len())));
        }
        let mut hull: Vec<[i64; 2]> = Vec::with_capacity(2 * pts.len());
        for pass in 0..2 {
            let start = hull.len();
            let iter: Box<dyn Iterator<Item = &[i64; 2]>> =
                if pass == 0 { Box::new(pts.iter()) } else { Box::new(pts.iter().rev()) };
            for &p in iter {
                while hull.len() >= start + 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0 {
                    hull.pop();
                }
                hull.push(p);
            }
            hull.pop();
        }
        Polygon::new(hull)
    }

    pub fn vertices(&self) -> &[[i64; 2]] {
        &self.vertices
    }

    /// Pointed feasible cone at vertex `i`.
    pub fn vertex_cone(&self, i: usize) -> ConeSpec {
        let k = self.vertices.len();
        let v = self.vertices[i];
        let prev = self.vertices[(i + k - 1) % k];
        let next = self.vertices[(i + 1) % k];
        ConeSpec::standard(&[&[next[0] - v[0], next[1] - v[1]], &[prev[0] - v[0], prev[1] - v[1]]])
    }
}

/// Pick's theorem and McMullen's formula on one polygon.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PickReport {
    pub lat: u64,
    pub area: Rational,
    pub boundary: u64,
    pub vertex_psi: Vec<Rational>,
    pub mcmullen_sum: Rational,
    pub all_equal: bool,
}

pub fn pick_check(p: &Polygon) -> Result<PickReport> {
    let vs = &p.vertices;
    let k = vs.len();

    let twice_area: i64 = (0..k).map(|i| cross([0, 0], vs[i], vs[(i + 1) % k])).sum();
    let area = rat(twice_area, 2);

    let boundary: u64 = (0..k)
        .map(|i| {
            let (a, b) = (vs[i], vs[(i + 1) % k]);
            (b[0] - a[0]).unsigned_abs().gcd(&(b[1] - a[1]).unsigned_abs())
        })
        .sum();

    let (xmin, xmax) = (vs.iter().map(|v| v[0]).min().unwrap(), vs.iter().map(|v| v[0]).max().unwrap());
    let (ymin, ymax) = (vs.iter().map(|v| v[1]).min().unwrap(), vs.iter().map(|v| v[1]).max().unwrap());
    let mut lat = 0u64;
    for x in xmin..=xmax {
        for y in ymin..=ymax {
            if (0..k).all(|i| cross(vs[i], vs[(i + 1) % k], [x, y]) >= 0) {
                lat += 1;
            }
        }
    }

    let vertex_psi = (0..k).map(|i| psi_dim2_general(&p.vertex_cone(i))).collect::<Result<Vec<_>>>()?;
    let psi_sum: Rational = vertex_psi.iter().sum();
    let mcmullen_sum = psi_sum + rat(boundary as i64, 2) + area.clone();
    let pick = area.clone() + rat(boundary as i64, 2) + int(1);
    let lat_q = int(lat as i64);
    let all_equal = lat_q == pick && pick == mcmullen_sum;
    Ok(PickReport { lat, area, boundary, vertex_psi, mcmullen_sum, all_equal })
}
