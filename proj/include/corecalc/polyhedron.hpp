#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "corecalc/rational.hpp"

namespace corecalc {

/**
 * Constraint form: A x <= b, C x = d.
 * Canonical after normalization: every row scaled to coprime integers (positive
 * scaling for inequalities; equations additionally oriented so the first nonzero
 * coefficient is positive), trivial rows dropped, rows lex-sorted and deduplicated.
 * A trivially contradictory row collapses the whole form to the canonical empty
 * representation 0.x <= -1.
 */
struct HRep {
  Index dim = 0;
  Mat A{0, 0};
  Vec b{0};
  Mat C{0, 0};
  Vec d{0};

  static HRep universe(Index n);
  static HRep empty_set(Index n);
};

/**
 * Generator form: conv(vertices) + cone(rays). Lines appear as opposite ray pairs.
 * A nonempty set always carries at least one vertex (not necessarily extreme);
 * the empty set has both lists empty.
 */
struct VRep {
  Index dim = 0;
  std::vector<Vec> vertices;
  std::vector<Vec> rays;
};

HRep normalize_hrep(HRep h);

/** Dedup/sort; rays scaled primitive. Throws PreconditionError on rays without vertices. */
VRep normalize_vrep(VRep v);

/** Facet enumeration (double description on the polar of the homogenization). */
HRep vrep_to_hrep(const VRep& v);

/** Vertex/ray enumeration (double description on the homogenization). */
VRep hrep_to_vrep(const HRep& h);

/**
 * Convex polyhedron over the rationals. Immutable; the constraint form is the
 * source of truth, the generator form is computed once on demand and shared
 * between copies (population is guarded, safe under concurrent readers).
 */
class Polyhedron {
 public:
  explicit Polyhedron(HRep h);
  static Polyhedron from_hrep(HRep h) { return Polyhedron(std::move(h)); }
  static Polyhedron from_vrep(VRep v);

  Index ambient_dim() const { return h_.dim; }
  // Rvalue overloads return copies so views into temporaries cannot dangle.
  const HRep& hrep() const& { return h_; }
  HRep hrep() && { return h_; }
  const VRep& vrep() const&;
  VRep vrep() &&;
  bool is_empty() const;
  /** Affine dimension; -1 for the empty set. LP + exact rank, never touches vrep. */
  int dim() const;

 private:
  struct Cache;
  HRep h_;
  std::shared_ptr<Cache> cache_;

  // These carry a cached generator form across the transform instead of redoing
  // the conversion, so they reach into the cache directly.
  friend Polyhedron negate(const Polyhedron& p);
  friend Polyhedron translate(const Polyhedron& p, const Vec& t);
};

bool contains(const Polyhedron& p, const Vec& x);
/** r lies in the recession cone of the constraint form. */
bool contains_direction(const HRep& h, const Vec& r);

Polyhedron minkowski_sum(const Polyhedron& p, const Polyhedron& q);
Polyhedron negate(const Polyhedron& p);
Polyhedron intersect(const Polyhedron& p, const Polyhedron& q);
Polyhedron product(const Polyhedron& p, const Polyhedron& q);
Polyhedron translate(const Polyhedron& p, const Vec& t);

/**
 * Image under coordinate selection, computed on the generator side: selected
 * vertex and ray coordinates are re-hulled, so cost tracks the generator
 * count. `coords` are 0-based, distinct, and order the output coordinates.
 */
Polyhedron project(const Polyhedron& p, const std::vector<Index>& coords);

/**
 * Preimage of p under selecting `coords` out of Q^total_dim: constraints of p
 * are rewritten onto the chosen coordinates, the remaining ones stay free.
 * Inverse of project in the sense project(embed(p, N, c), c) = p.
 */
Polyhedron embed(const Polyhedron& p, Index total_dim, const std::vector<Index>& coords);

bool subset_of(const Polyhedron& p, const Polyhedron& q);
bool set_equal(const Polyhedron& p, const Polyhedron& q);

/** Rebuilds the constraint form from scratch via generator enumeration. */
Polyhedron canonicalized(const Polyhedron& p);

Polyhedron singleton(const Vec& x);

/** {y : (x0, y) in p}; p's first x0.size() coordinates pinned to x0. */
Polyhedron substitute_prefix(const Polyhedron& p, const Vec& x0);

/** LP redundancy sweep: drops rows implied by the rest; canonical empty if infeasible. */
HRep prune_redundant(HRep h);

/**
 * Point with strictly positive slack on every inequality, via a max-slack LP
 * (slack capped at 1). Empty when the set is empty, has equations, or is not
 * full-dimensional.
 */
std::optional<Vec> strict_interior_point(const HRep& h);

/** Any point of the set, or nullopt when empty. */
std::optional<Vec> feasible_point(const HRep& h);

struct OptResult {
  bool feasible = false;
  bool bounded = false;
  Vec point;       // optimizer when feasible && bounded
  Rational value;  // optimum when feasible && bounded
};

/** Exact optimum of obj over the set. */
OptResult optimize(const HRep& h, const Vec& obj, bool maximize);

}  // namespace corecalc
