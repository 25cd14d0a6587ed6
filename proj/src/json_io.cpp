#include "corecalc/json_io.hpp"

#include <stdexcept>
#include <utility>

#include "corecalc/errors.hpp"
#include "corecalc/linalg.hpp"

namespace corecalc {

namespace {

[[noreturn]] void bad(const std::string& what) { throw InputError(what); }

const Json& field(const Json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing field \"") + key + "\"");
  return *it;
}

Index index_field(const Json& j, const char* key) {
  const Json& f = field(j, key);
  if (!f.is_number_integer() || f.get<long long>() < 0) {
    bad(std::string("field \"") + key + "\" must be a nonnegative integer");
  }
  return static_cast<Index>(f.get<long long>());
}

}  // namespace

Json to_json(const Rational& q) { return q.str(); }

Json to_json(const Vec& v) {
  Json a = Json::array();
  for (Index i = 0; i < v.size(); ++i) a.push_back(to_json(v[i]));
  return a;
}

Json to_json(const HRep& h) {
  Json ineqs = Json::array();
  for (Index i = 0; i < h.A.rows(); ++i) {
    ineqs.push_back({{"a", to_json(Vec(h.A.row(i).transpose()))}, {"b", to_json(h.b[i])}});
  }
  Json eqs = Json::array();
  for (Index i = 0; i < h.C.rows(); ++i) {
    eqs.push_back({{"a", to_json(Vec(h.C.row(i).transpose()))}, {"b", to_json(h.d[i])}});
  }
  return {{"ineqs", std::move(ineqs)}, {"eqs", std::move(eqs)}};
}

Json to_json(const VRep& v) {
  Json vertices = Json::array();
  for (const Vec& p : v.vertices) vertices.push_back(to_json(p));
  Json rays = Json::array();
  for (const Vec& r : v.rays) rays.push_back(to_json(r));
  return {{"vertices", std::move(vertices)}, {"rays", std::move(rays)}};
}

Json set_to_json(const Polyhedron& p) {
  return {{"dim", p.ambient_dim()},
          {"empty", p.is_empty()},
          {"hrep", to_json(p.hrep())},
          {"vrep", to_json(p.vrep())}};
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (!j.is_string()) bad("rational must be a string like \"3/4\" or an integer");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    bad(std::string("bad rational \"") + j.get<std::string>() + "\": " + e.what());
  }
}

Vec vec_from_json(const Json& j, Index expected) {
  if (!j.is_array()) bad("vector must be an array of rationals");
  if (expected >= 0 && static_cast<Index>(j.size()) != expected) {
    bad("vector has " + std::to_string(j.size()) + " entries, expected " +
        std::to_string(expected));
  }
  Vec v(static_cast<Index>(j.size()));
  Index i = 0;
  for (const Json& e : j) v[i++] = rational_from_json(e);
  return v;
}

namespace {

void parse_rows(const Json& rows, Index dim, Mat& m, Vec& rhs) {
  if (!rows.is_array()) bad("constraint list must be an array");
  m = Mat(static_cast<Index>(rows.size()), dim);
  rhs = Vec(static_cast<Index>(rows.size()));
  Index i = 0;
  for (const Json& row : rows) {
    m.row(i) = vec_from_json(field(row, "a"), dim).transpose();
    rhs[i] = rational_from_json(field(row, "b"));
    ++i;
  }
}

Polyhedron from_constraint_json(const Json& j, Index dim) {
  HRep h = HRep::universe(dim);
  if (j.contains("ineqs")) parse_rows(j["ineqs"], dim, h.A, h.b);
  if (j.contains("eqs")) parse_rows(j["eqs"], dim, h.C, h.d);
  return Polyhedron(std::move(h));
}

Polyhedron from_generator_json(const Json& j, Index dim) {
  VRep v;
  v.dim = dim;
  if (j.contains("vertices")) {
    for (const Json& p : j["vertices"]) v.vertices.push_back(vec_from_json(p, dim));
  }
  if (j.contains("rays")) {
    for (const Json& r : j["rays"]) v.rays.push_back(vec_from_json(r, dim));
  }
  if (v.vertices.empty()) {
    if (!v.rays.empty()) bad("generator form needs at least one vertex");
    return Polyhedron(HRep::empty_set(dim));
  }
  return Polyhedron::from_vrep(std::move(v));
}

}  // namespace

Polyhedron polyhedron_from_json(const Json& j) {
  if (!j.is_object()) bad("polyhedron must be an object");
  if (j.contains("kind") && j["kind"] != "polyhedron") bad("object is not a polyhedron");
  Index dim = -1;
  if (j.contains("dim")) {
    dim = index_field(j, "dim");
  } else if (j.contains("hrep") && j["hrep"].is_object() && j["hrep"].contains("dim")) {
    dim = index_field(j["hrep"], "dim");
  } else if (j.contains("vrep") && j["vrep"].is_object() && j["vrep"].contains("dim")) {
    dim = index_field(j["vrep"], "dim");
  } else {
    bad("missing field \"dim\"");
  }
  if (dim < 1) bad("polyhedron dimension must be positive");
  if (j.contains("hrep")) return from_constraint_json(j["hrep"], dim);
  if (j.contains("ineqs") || j.contains("eqs")) return from_constraint_json(j, dim);
  if (j.contains("vrep")) return from_generator_json(j["vrep"], dim);
  if (j.contains("vertices") || j.contains("rays")) return from_generator_json(j, dim);
  bad("polyhedron needs constraints or generators");
}

PolyFunction function_from_json(const Json& j) {
  if (!j.is_object()) bad("function must be an object");
  if (j.contains("kind") && j["kind"] != "function") bad("object is not a function");
  const Index dim = index_field(j, "dim");
  try {
    return make_function(dim, polyhedron_from_json(field(j, "epi")));
  } catch (const Error& e) {
    bad(std::string("bad function: ") + e.what());
  }
}

SetValuedMap map_from_json(const Json& j) {
  if (!j.is_object()) bad("map must be an object");
  if (j.contains("kind") && j["kind"] != "setvaluedmap") bad("object is not a set-valued map");
  const Index din = index_field(j, "dim_in");
  const Index dout = index_field(j, "dim_out");
  try {
    return make_map(din, dout, polyhedron_from_json(field(j, "graph")));
  } catch (const Error& e) {
    bad(std::string("bad set-valued map: ") + e.what());
  }
}

Mat matrix_from_json(const Json& j) {
  if (!j.is_object()) bad("linear map must be an object");
  if (j.contains("kind") && j["kind"] != "linearmap") bad("object is not a linear map");
  const Index rows = index_field(j, "rows");
  const Index cols = index_field(j, "cols");
  if (rows < 1 || cols < 1) bad("linear map must have positive shape");
  const Json& entries = field(j, "entries");
  if (!entries.is_array() || static_cast<Index>(entries.size()) != rows) {
    bad("linear map needs one entry row per matrix row");
  }
  Mat m(rows, cols);
  Index i = 0;
  for (const Json& row : entries) m.row(i++) = vec_from_json(row, cols).transpose();
  return m;
}

}  // namespace corecalc
