#include "corecalc/generators.hpp"

#include <utility>
#include <vector>

#include "corecalc/linalg.hpp"

namespace corecalc {

namespace {

int draw(Rng& rng, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  return d(rng);
}

}  // namespace

Rational random_rational(Rng& rng, const GenConfig& cfg) {
  return Rational(draw(rng, -cfg.max_numerator, cfg.max_numerator),
                  draw(rng, 1, cfg.max_denominator));
}

Vec random_vec(Rng& rng, Index dim, const GenConfig& cfg) {
  Vec v(dim);
  for (Index i = 0; i < dim; ++i) v[i] = random_rational(rng, cfg);
  return v;
}

Polyhedron random_polytope(Rng& rng, Index dim, const Vec& center, const GenConfig& cfg) {
  VRep v;
  v.dim = dim;
  v.vertices.push_back(center);
  const int extra = draw(rng, static_cast<int>(dim) + 1, static_cast<int>(dim) + 3);
  for (int k = 0; k < extra; ++k) v.vertices.push_back(center + random_vec(rng, dim, cfg));
  return Polyhedron::from_vrep(std::move(v));
}

Polyhedron random_polyhedron(Rng& rng, Index dim, const Vec& center, const GenConfig& cfg) {
  Polyhedron base = random_polytope(rng, dim, center, cfg);
  const int ray_count = draw(rng, 0, 2);
  if (ray_count == 0) return base;
  VRep v = base.vrep();
  for (int k = 0; k < ray_count; ++k) {
    const Vec r = random_vec(rng, dim, cfg);
    if (!is_zero_vec(r)) v.rays.push_back(r);
  }
  return Polyhedron::from_vrep(std::move(v));
}

Polyhedron random_solid(Rng& rng, Index dim, const Vec& center, const GenConfig& cfg) {
  // Sheared simplex with `center` strictly inside.  A simplex keeps every
  // downstream conversion cheap (dim+1 vertices, dim+1 facets) while the
  // random shear and edge lengths still vary the geometry.
  Mat shear = Mat::Identity(dim, dim);
  for (Index i = 0; i < dim; ++i) {
    for (Index j = 0; j < i; ++j) shear(i, j) = Rational(draw(rng, -1, 1), draw(rng, 1, 2));
  }
  const auto side = [&] {
    return Rational(draw(rng, 1, cfg.max_numerator), draw(rng, 1, cfg.max_denominator));
  };
  // conv{-s*1, d_1*e_1, ..., d_n*e_n} has the origin strictly inside
  // (barycentric weights s/d_i are all positive), and an invertible shear
  // plus a translation preserves that.
  VRep v;
  v.dim = dim;
  const Vec ones = Vec::Constant(dim, Rational(1));
  v.vertices.push_back(center - shear * (side() * ones));
  for (Index i = 0; i < dim; ++i) {
    Vec e = zero_vec(dim);
    e[i] = side();
    v.vertices.push_back(center + shear * e);
  }
  return Polyhedron::from_vrep(std::move(v));
}

SetValuedMap random_map_through(Rng& rng, Index dim_in, Index dim_out, const Vec& x, const Vec& y,
                                const GenConfig& cfg, bool solid_graph) {
  Vec xy(dim_in + dim_out);
  xy.head(dim_in) = x;
  xy.tail(dim_out) = y;
  const Polyhedron graph = solid_graph ? random_solid(rng, dim_in + dim_out, xy, cfg)
                                       : random_polyhedron(rng, dim_in + dim_out, xy, cfg);
  return make_map(dim_in, dim_out, graph);
}

SetValuedMap random_bounded_map_through(Rng& rng, Index dim_in, Index dim_out, const Vec& x,
                                        const Vec& y, const GenConfig& cfg, bool solid_graph) {
  Vec xy(dim_in + dim_out);
  xy.head(dim_in) = x;
  xy.tail(dim_out) = y;
  const Polyhedron graph = solid_graph ? random_solid(rng, dim_in + dim_out, xy, cfg)
                                       : random_polytope(rng, dim_in + dim_out, xy, cfg);
  return make_map(dim_in, dim_out, graph);
}

PolyFunction random_max_affine(Rng& rng, Index dim, int pieces, const GenConfig& cfg) {
  HRep epi = HRep::universe(dim + 1);
  epi.A = Mat::Constant(pieces, dim + 1, Rational(0));
  epi.b = Vec(pieces);
  for (Index i = 0; i < pieces; ++i) {
    epi.A.row(i).head(dim) = random_vec(rng, dim, cfg).transpose();
    epi.A(i, dim) = Rational(-1);
    epi.b[i] = -random_rational(rng, cfg);
  }
  return make_function(dim, Polyhedron(std::move(epi)));
}

}  // namespace corecalc
