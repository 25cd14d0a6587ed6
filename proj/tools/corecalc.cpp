#include <chrono>
#include <cstdint>
#include <ctime>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "corecalc/corealg.hpp"
#include "corecalc/errors.hpp"
#include "corecalc/fuzz.hpp"
#include "corecalc/json_io.hpp"
#include "corecalc/linalg.hpp"
#include "corecalc/normalcalc.hpp"
#include "corecalc/oracle.hpp"
#include "corecalc/polyhedron.hpp"
#include "corecalc/subdiff.hpp"

namespace {

using namespace corecalc;

using Object = std::variant<Polyhedron, PolyFunction, SetValuedMap, Mat>;
using ObjectTable = std::map<std::string, Object>;

[[noreturn]] void input_error(const std::string& what) { throw InputError(what); }

std::string ext_str(const ExtRational& e) {
  if (e.is_finite()) return e.value().str();
  return e.is_plus_inf() ? "+inf" : "-inf";
}

ExtRational ext_parse(const Json& j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "+inf" || s == "inf") return ExtRational::plus_inf();
    if (s == "-inf") return ExtRational::minus_inf();
  }
  return ExtRational(rational_from_json(j));
}

ObjectTable parse_objects(const Json& problem) {
  ObjectTable table;
  if (!problem.contains("objects")) return table;
  const Json& objs = problem["objects"];
  if (!objs.is_object()) input_error("\"objects\" must be a name-to-descriptor map");
  for (const auto& [name, desc] : objs.items()) {
    if (!desc.is_object() || !desc.contains("kind")) {
      input_error("object \"" + name + "\" needs a \"kind\" field");
    }
    const std::string kind = desc["kind"].get<std::string>();
    if (kind == "polyhedron") {
      table.emplace(name, polyhedron_from_json(desc));
    } else if (kind == "function") {
      table.emplace(name, function_from_json(desc));
    } else if (kind == "setvaluedmap") {
      table.emplace(name, map_from_json(desc));
    } else if (kind == "linearmap") {
      table.emplace(name, matrix_from_json(desc));
    } else {
      input_error("object \"" + name + "\" has unknown kind \"" + kind + "\"");
    }
  }
  return table;
}

/** Typed access to one query's arguments and parameters. */
class Ctx {
 public:
  Ctx(const Json& q, const ObjectTable& table) : q_(q), table_(table) {
    if (q.contains("args")) {
      for (const Json& a : q["args"]) args_.push_back(a.get<std::string>());
    }
  }

  std::size_t arg_count() const { return args_.size(); }

  const Object& object(std::size_t i) const {
    if (i >= args_.size()) input_error("query \"" + op() + "\" needs more arguments");
    const auto it = table_.find(args_[i]);
    if (it == table_.end()) input_error("undefined object \"" + args_[i] + "\"");
    return it->second;
  }

  const Polyhedron& poly(std::size_t i) const {
    const auto* p = std::get_if<Polyhedron>(&object(i));
    if (p == nullptr) input_error("object \"" + args_[i] + "\" is not a polyhedron");
    return *p;
  }

  const PolyFunction& fn(std::size_t i) const {
    const auto* p = std::get_if<PolyFunction>(&object(i));
    if (p == nullptr) input_error("object \"" + args_[i] + "\" is not a function");
    return *p;
  }

  const SetValuedMap& map(std::size_t i) const {
    const auto* p = std::get_if<SetValuedMap>(&object(i));
    if (p == nullptr) input_error("object \"" + args_[i] + "\" is not a set-valued map");
    return *p;
  }

  const Mat& mat(std::size_t i) const {
    const auto* p = std::get_if<Mat>(&object(i));
    if (p == nullptr) input_error("object \"" + args_[i] + "\" is not a linear map");
    return *p;
  }

  Vec point(const char* key) const {
    if (!q_.contains(key)) input_error("query \"" + op() + "\" needs \"" + key + "\"");
    return vec_from_json(q_[key]);
  }

  std::vector<Index> coords() const {
    if (!q_.contains("coords")) input_error("query \"" + op() + "\" needs \"coords\"");
    std::vector<Index> c;
    for (const Json& e : q_["coords"]) {
      if (!e.is_number_integer() || e.get<long long>() < 0) {
        input_error("\"coords\" must hold nonnegative integers");
      }
      c.push_back(static_cast<Index>(e.get<long long>()));
    }
    return c;
  }

  int samples() const { return q_.contains("samples") ? q_["samples"].get<int>() : 64; }

  std::string op() const { return q_.value("op", std::string()); }

  const Json& raw() const { return q_; }

  const std::vector<std::string>& arg_names() const { return args_; }

 private:
  const Json& q_;
  const ObjectTable& table_;
  std::vector<std::string> args_;
};

/** Everything a query can produce, typed for expectation checks. */
struct QueryResult {
  Json rendered;
  std::optional<Polyhedron> set;
  std::optional<RuleVerdict> verdict;
  std::optional<SeparationCertificate> cert;
  std::optional<ExtremalityCertificate> ext;
  std::optional<Vec> fvec;       // functional results (certificates, principle)
  std::optional<Vec> point;      // point results (interior witness)
  std::optional<Rational> value;
  std::optional<ExtRational> ext_value;
  std::optional<bool> flag;
  std::optional<std::pair<bool, bool>> pair;
  std::optional<OracleReport> oracle_rep;
  bool found = false;  // for optional-returning operations
};

Json render_cert(const SeparationCertificate& c) {
  Json j{{"f", to_json(c.f)}, {"sup_lhs", ext_str(c.sup_lhs)}, {"inf_rhs", ext_str(c.inf_rhs)}};
  if (c.proper_witnesses) {
    j["proper_witnesses"] =
        Json{to_json(c.proper_witnesses->first), to_json(c.proper_witnesses->second)};
  }
  return j;
}

Json render_verdict(const RuleVerdict& v) {
  return {{"qc_satisfied", v.qc_satisfied},
          {"equal", v.equal},
          {"rhs_subset_lhs", v.rhs_subset_lhs},
          {"lhs", set_to_json(v.lhs)},
          {"rhs", set_to_json(v.rhs)}};
}

Json render_oracle(const OracleReport& r) {
  Json j{{"verdict", r.verdict}, {"seed", r.seed}};
  if (r.witness) j["witness"] = to_json(*r.witness);
  if (r.delta) j["delta"] = to_json(*r.delta);
  return j;
}

void set_result(QueryResult& r, Polyhedron p) {
  r.rendered = Json{{"set", set_to_json(p)}};
  r.set = std::move(p);
  r.found = true;
}

void fn_result(QueryResult& r, PolyFunction f) {
  r.rendered = Json{{"function", Json{{"dim", f.dim}, {"epi", set_to_json(f.epi)}}}};
  r.set = f.epi;
  r.found = true;
}

void map_result(QueryResult& r, SetValuedMap m) {
  r.rendered = Json{{"map", Json{{"dim_in", m.dim_in},
                                 {"dim_out", m.dim_out},
                                 {"graph", set_to_json(m.graph)}}}};
  r.set = m.graph;
  r.found = true;
}

void verdict_result(QueryResult& r, RuleVerdict v, const Json& query) {
  if (query.contains("override_rhs")) {
    // Test-only hook: replace the computed right side before judging
    // equality, to exercise the failure paths end to end.
    Polyhedron injected = polyhedron_from_json(query["override_rhs"]);
    v.equal = set_equal(v.lhs, injected);
    v.rhs_subset_lhs = subset_of(injected, v.lhs);
    v.rhs = std::move(injected);
  }
  r.rendered = Json{{"rule", render_verdict(v)}};
  r.verdict = std::move(v);
  r.found = true;
}

void oracle_result(QueryResult& r, OracleReport rep) {
  r.rendered = Json{{"oracle", render_oracle(rep)}};
  r.flag = rep.verdict;
  r.oracle_rep = std::move(rep);
  r.found = true;
}

QueryResult exec_query(const Ctx& c) {
  const std::string op = c.op();
  QueryResult r;

  if (op == "set") {
    set_result(r, c.poly(0));
  } else if (op == "negate") {
    set_result(r, negate(c.poly(0)));
  } else if (op == "minkowski_sum") {
    set_result(r, minkowski_sum(c.poly(0), c.poly(1)));
  } else if (op == "intersect") {
    set_result(r, intersect(c.poly(0), c.poly(1)));
  } else if (op == "project") {
    set_result(r, project(c.poly(0), c.coords()));
  } else if (op == "subset_of") {
    r.flag = subset_of(c.poly(0), c.poly(1));
    r.rendered = Json{{"value", *r.flag}};
  } else if (op == "set_equal") {
    r.flag = set_equal(c.poly(0), c.poly(1));
    r.rendered = Json{{"value", *r.flag}};
  } else if (op == "core_member") {
    r.flag = core_contains(c.poly(0), c.point("point"));
    r.rendered = Json{{"value", *r.flag}};
  } else if (op == "interior_point" || op == "core_solid") {
    const auto w = is_core_solid(c.poly(0));
    r.found = w.has_value();
    r.flag = w.has_value();
    r.rendered = Json{{"found", r.found}};
    if (w) {
      r.point = *w;
      r.rendered["point"] = to_json(*w);
    }
  } else if (op == "gauge") {
    r.value = gauge(c.poly(0), c.point("point"));
    r.rendered = Json{{"value", r.value->str()}};
    r.found = true;
  } else if (op == "point_separation") {
    const auto cert = separate_point(c.poly(0), c.point("point"));
    r.found = cert.has_value();
    r.rendered = Json{{"found", r.found}};
    if (cert) {
      r.cert = *cert;
      r.fvec = cert->f;
      r.rendered["certificate"] = render_cert(*cert);
    }
  } else if (op == "set_separation") {
    const auto cert = separate_sets(c.poly(0), c.poly(1));
    r.found = cert.has_value();
    r.rendered = Json{{"found", r.found}};
    if (cert) {
      r.cert = *cert;
      r.fvec = cert->f;
      r.rendered["certificate"] = render_cert(*cert);
    }
  } else if (op == "extremality") {
    ExtremalityCertificate ex = is_extremal(c.poly(0), c.poly(1));
    Json ts = Json::array();
    for (const Rational& t : ex.checked_ts) ts.push_back(t.str());
    r.rendered = Json{{"extremal", ex.verdict}};
    if (ex.verdict) {
      r.rendered["direction"] = to_json(ex.direction);
      r.rendered["checked_ts"] = std::move(ts);
      r.fvec = ex.direction;
    }
    r.flag = ex.verdict;
    r.ext = std::move(ex);
    r.found = true;
  } else if (op == "common_point_functional") {
    const auto f = extremal_principle(c.poly(0), c.poly(1), c.point("point"));
    r.found = f.has_value();
    r.rendered = Json{{"found", r.found}};
    if (f) {
      r.fvec = *f;
      r.rendered["f"] = to_json(*f);
    }
  } else if (op == "normal_cone") {
    const auto cone = normal_cone(c.poly(0), c.point("point"));
    if (!cone) input_error("normal cone requested at a point outside the set");
    set_result(r, cone_as_polyhedron(*cone));
  } else if (op == "graph_interior") {
    const auto pr = graph_core_check(c.map(0), c.point("point"));
    r.pair = pr;
    r.rendered = Json{{"graph_core", pr.first}, {"componentwise_core", pr.second}};
    r.found = true;
  } else if (op == "coderivative") {
    set_result(r, coderivative(c.map(0), c.point("point"), c.point("point2"), c.point("dual")));
  } else if (op == "map_sum") {
    map_result(r, map_sum(c.map(0), c.map(1)));
  } else if (op == "sum_decompositions") {
    set_result(r, sum_decompositions(c.map(0), c.map(1), c.point("point"), c.point("point2")));
  } else if (op == "map_compose") {
    // args are [inner, outer]: the pipeline order x -> F -> G.
    map_result(r, map_compose(c.map(1), c.map(0)));
  } else if (op == "intermediate_points") {
    set_result(r, intermediate_points(c.map(0), c.map(1), c.point("point"), c.point("point2")));
  } else if (op == "intersection_rule") {
    verdict_result(r, intersection_rule(c.poly(0), c.poly(1), c.point("point")), c.raw());
  } else if (op == "coderivative_sum_rule") {
    const Vec y1 = c.point("y1");
    const Vec y2 = c.point("y2");
    verdict_result(r,
                   coderivative_sum_rule(c.map(0), c.map(1), c.point("point"), Vec(y1 + y2), y1,
                                         y2, c.point("dual")),
                   c.raw());
  } else if (op == "coderivative_chain_rule") {
    verdict_result(r,
                   coderivative_chain_rule(c.map(0), c.map(1), c.point("point"), c.point("point2"),
                                           c.point("mid"), c.point("dual")),
                   c.raw());
  } else if (op == "evaluate") {
    r.ext_value = evaluate(c.fn(0), c.point("point"));
    r.rendered = Json{{"value", ext_str(*r.ext_value)}};
    r.found = true;
  } else if (op == "subdifferential") {
    set_result(r, subdifferential(c.fn(0), c.point("point")));
  } else if (op == "fn_add") {
    fn_result(r, fn_add(c.fn(0), c.fn(1)));
  } else if (op == "subdiff_sum_rule") {
    verdict_result(r, subdiff_sum_rule(c.fn(0), c.fn(1), c.point("point")), c.raw());
  } else if (op == "fn_precompose") {
    fn_result(r, fn_precompose(c.fn(0), c.mat(1)));
  } else if (op == "adjoint_image") {
    set_result(r, adjoint_image(c.mat(0), c.poly(1)));
  } else if (op == "subdiff_chain_rule") {
    verdict_result(r, subdiff_chain_rule(c.fn(0), c.mat(1), c.point("point")), c.raw());
  } else if (op == "indicator") {
    fn_result(r, indicator(c.poly(0)));
  } else if (op == "marginal_function") {
    fn_result(r, marginal_function(make_marginal(c.fn(0), c.map(1))));
  } else if (op == "argmin_set") {
    set_result(r, argmin_set(make_marginal(c.fn(0), c.map(1)), c.point("point")));
  } else if (op == "marginal_subdiff_rule") {
    verdict_result(
        r,
        marginal_subdiff_rule(make_marginal(c.fn(0), c.map(1)), c.point("point"),
                              c.point("point2")),
        c.raw());
  } else if (op == "oracle_normal_member") {
    oracle_result(r, oracle_normal_member(c.poly(0), c.point("point"), c.point("dual")));
  } else if (op == "oracle_subgrad_member") {
    oracle_result(r, oracle_subgrad_member(c.fn(0), c.point("point"), c.point("dual")));
  } else if (op == "oracle_core_member") {
    oracle_result(r, oracle_core_member(c.poly(0), c.point("point")));
  } else if (op == "oracle_separation_valid") {
    oracle_result(r, oracle_separation_valid(c.poly(0), c.poly(1), c.point("dual")));
  } else if (op == "oracle_rule_equal") {
    oracle_result(r, oracle_rule_equal(c.poly(0), c.poly(1), c.samples()));
  } else {
    input_error("unknown operation \"" + op + "\"");
  }
  return r;
}

/** Definitional cross-validation of an engine result, where one exists. */
std::optional<Json> cross_check(const Ctx& c, const QueryResult& r) {
  const std::string op = c.op();
  Json j{{"checked", true}, {"agrees", true}};
  const auto disagree = [&](const char* what) {
    j["agrees"] = false;
    j["detail"] = what;
  };

  if (op == "normal_cone" && r.set) {
    const Vec xbar = c.point("point");
    for (const Vec& g : r.set->vrep().rays) {
      if (!oracle_normal_member(c.poly(0), xbar, g).verdict) {
        disagree("cone ray rejected by the definitional check");
        break;
      }
    }
  } else if (op == "subdifferential" && r.set) {
    const Vec xbar = c.point("point");
    const VRep& v = r.set->vrep();
    for (const Vec& g : v.vertices) {
      if (!oracle_subgrad_member(c.fn(0), xbar, g).verdict) {
        disagree("subgradient vertex rejected by the definitional check");
        break;
      }
    }
    if (j["agrees"].get<bool>()) {
      for (const Vec& ray : v.rays) {
        if (v.vertices.empty()) break;
        if (!oracle_subgrad_member(c.fn(0), xbar, Vec(v.vertices.front() + ray)).verdict) {
          disagree("subgradient ray rejected by the definitional check");
          break;
        }
      }
    }
  } else if (r.verdict) {
    const OracleReport rep = oracle_rule_equal(r.verdict->lhs, r.verdict->rhs, 32);
    j["sampled_equal"] = rep.verdict;
    if (rep.verdict != r.verdict->equal) disagree("sampled equality contradicts the verdict");
  } else if (op == "point_separation" && r.cert) {
    if (!oracle_separation_valid(c.poly(0), singleton(c.point("point")), r.cert->f).verdict) {
      disagree("certificate rejected by the vertex check");
    }
  } else if (op == "set_separation" && r.cert) {
    if (!oracle_separation_valid(c.poly(0), c.poly(1), r.cert->f).verdict) {
      disagree("certificate rejected by the vertex check");
    }
  } else if (op == "common_point_functional" && r.fvec) {
    const Vec xbar = c.point("point");
    const bool ok = oracle_normal_member(c.poly(0), xbar, *r.fvec).verdict &&
                    oracle_normal_member(c.poly(1), xbar, Vec(-*r.fvec)).verdict;
    if (!ok) disagree("functional fails a definitional normal check");
  } else if ((op == "interior_point" || op == "core_solid") && r.point) {
    if (!oracle_core_member(c.poly(0), *r.point).verdict) {
      disagree("interior witness rejected by the directional walk");
    }
  } else {
    return std::nullopt;  // no definitional counterpart
  }
  return j;
}

/** One expectation entry: compare a field of the result. Throws InputError on
 * unknown keys so fixture typos fail loudly. */
bool check_expect(const Json& expect, const QueryResult& r) {
  bool pass = true;
  const auto want_set = [&](const Json& desc, const std::optional<Polyhedron>& got) {
    if (!got) return false;
    return set_equal(*got, polyhedron_from_json(desc));
  };
  for (const auto& [key, val] : expect.items()) {
    if (key == "set") {
      pass = pass && want_set(val, r.set);
    } else if (key == "lhs") {
      pass = pass && r.verdict && want_set(val, r.verdict->lhs);
    } else if (key == "rhs") {
      pass = pass && r.verdict && want_set(val, r.verdict->rhs);
    } else if (key == "qc") {
      pass = pass && r.verdict && r.verdict->qc_satisfied == val.get<bool>();
    } else if (key == "equal") {
      pass = pass && r.verdict && r.verdict->equal == val.get<bool>();
    } else if (key == "rhs_subset_lhs") {
      pass = pass && r.verdict && r.verdict->rhs_subset_lhs == val.get<bool>();
    } else if (key == "value") {
      if (val.is_boolean()) {
        pass = pass && r.flag && *r.flag == val.get<bool>();
      } else if (r.ext_value) {
        pass = pass && ext_str(*r.ext_value) == ext_str(ext_parse(val));
      } else {
        pass = pass && r.value && *r.value == rational_from_json(val);
      }
    } else if (key == "found") {
      pass = pass && r.found == val.get<bool>();
    } else if (key == "f" || key == "direction") {
      pass = pass && r.fvec && vec_eq(*r.fvec, vec_from_json(val));
    } else if (key == "sup") {
      pass = pass && r.cert && ext_str(r.cert->sup_lhs) == ext_str(ext_parse(val));
    } else if (key == "inf") {
      pass = pass && r.cert && ext_str(r.cert->inf_rhs) == ext_str(ext_parse(val));
    } else if (key == "extremal") {
      pass = pass && r.ext && r.ext->verdict == val.get<bool>();
    } else if (key == "graph_core") {
      pass = pass && r.pair && r.pair->first == val.get<bool>();
    } else if (key == "componentwise_core") {
      pass = pass && r.pair && r.pair->second == val.get<bool>();
    } else if (key == "verdict") {
      pass = pass && r.oracle_rep && r.oracle_rep->verdict == val.get<bool>();
    } else if (key == "witness") {
      pass = pass && r.oracle_rep && r.oracle_rep->witness &&
             vec_eq(*r.oracle_rep->witness, vec_from_json(val));
    } else if (key == "delta") {
      pass = pass && r.oracle_rep && r.oracle_rep->delta &&
             *r.oracle_rep->delta == rational_from_json(val);
    } else {
      input_error("unknown expectation key \"" + key + "\"");
    }
  }
  return pass;
}

std::string timestamp_utc() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

Json echo_inputs(const Ctx& c) {
  Json inputs = Json::object();
  Json args = Json::object();
  for (std::size_t i = 0; i < c.arg_count(); ++i) {
    const std::string& name = c.arg_names()[i];
    const Object& obj = c.object(i);
    if (const auto* p = std::get_if<Polyhedron>(&obj)) {
      args[name] = set_to_json(*p);
    } else if (const auto* f = std::get_if<PolyFunction>(&obj)) {
      args[name] = Json{{"dim", f->dim}, {"epi", set_to_json(f->epi)}};
    } else if (const auto* m = std::get_if<SetValuedMap>(&obj)) {
      args[name] =
          Json{{"dim_in", m->dim_in}, {"dim_out", m->dim_out}, {"graph", set_to_json(m->graph)}};
    } else if (const auto* a = std::get_if<Mat>(&obj)) {
      Json rows = Json::array();
      for (Index i2 = 0; i2 < a->rows(); ++i2) rows.push_back(to_json(Vec(a->row(i2).transpose())));
      args[name] = Json{{"rows", a->rows()}, {"cols", a->cols()}, {"entries", std::move(rows)}};
    }
  }
  inputs["args"] = std::move(args);
  for (const char* key : {"point", "point2", "mid", "y1", "y2", "dual", "coords", "samples"}) {
    if (c.raw().contains(key)) inputs[key] = c.raw()[key];
  }
  return inputs;
}

int cmd_run(const std::string& problem_path, const std::string& output_path, bool with_oracle,
            bool require_qc) {
  Json problem;
  ObjectTable table;
  try {
    std::ifstream in(problem_path);
    if (!in) {
      std::cerr << "cannot open " << problem_path << "\n";
      return 2;
    }
    problem = Json::parse(in);
    if (problem.value("version", "1") != "1") input_error("unsupported problem version");
    table = parse_objects(problem);
  } catch (const std::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  }

  Json queries = Json::array();
  int expect_failures = 0;
  int qc_violations = 0;
  int oracle_disagreements = 0;
  int qc_unsatisfied = 0;

  const Json query_list = problem.value("queries", Json::array());
  for (const Json& q : query_list) {
    try {
      const Ctx c(q, table);
      const QueryResult r = exec_query(c);
      Json entry{{"op", c.op()}, {"inputs", echo_inputs(c)}, {"result", r.rendered}};
      if (r.verdict) {
        if (r.verdict->qc_satisfied && !r.verdict->equal) ++qc_violations;
        if (!r.verdict->qc_satisfied) ++qc_unsatisfied;
      }
      if (q.contains("expect")) {
        const bool pass = check_expect(q["expect"], r);
        entry["expect_pass"] = pass;
        if (!pass) ++expect_failures;
      }
      if (with_oracle) {
        if (const auto cj = cross_check(c, r)) {
          entry["oracle"] = *cj;
          if (!(*cj)["agrees"].get<bool>()) ++oracle_disagreements;
        }
      }
      queries.push_back(std::move(entry));
    } catch (const std::exception& e) {
      std::cerr << "input error in query: " << e.what() << "\n";
      return 2;
    }
  }

  const Json report{{"version", "1"},
                    {"generated_at", timestamp_utc()},
                    {"queries", std::move(queries)},
                    {"summary", Json{{"queries", query_list.size()},
                                     {"expect_failures", expect_failures},
                                     {"qc_violations", qc_violations},
                                     {"oracle_disagreements", oracle_disagreements},
                                     {"qc_unsatisfied", qc_unsatisfied}}}};
  std::ofstream out(output_path);
  if (!out) {
    std::cerr << "cannot write " << output_path << "\n";
    return 2;
  }
  out << report.dump(2) << "\n";

  if (qc_violations > 0 || expect_failures > 0 || oracle_disagreements > 0) return 1;
  if (require_qc && qc_unsatisfied > 0) return 3;
  return 0;
}

int cmd_fuzz(Index dim, int count, std::uint64_t seed, int max_den, const std::string& out_dir) {
  GenConfig cfg;
  cfg.max_denominator = max_den;
  const FuzzOutcome out = run_campaigns(dim, count, seed, cfg, out_dir);
  std::cout << stats_table(out);
  if (out.total_violations > 0) {
    std::cout << "violations: " << out.total_violations << "\n";
    for (const std::string& f : out.counterexample_files) std::cout << "  " << f << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact rational polyhedral convex calculus"};
  app.require_subcommand(1);

  std::string problem_path;
  std::string output_path;
  bool with_oracle = false;
  bool require_qc = false;
  CLI::App* run = app.add_subcommand("run", "execute the queries in a problem file");
  run->add_option("problem", problem_path, "problem JSON file")->required();
  run->add_option("output", output_path, "report JSON file")->required();
  run->add_flag("--oracle", with_oracle, "cross-check results definitionally");
  run->add_flag("--require-qc", require_qc, "exit 3 when a rule ran without its qualification");

  Index dim = 2;
  int count = 100;
  std::uint64_t seed = 42;
  int max_den = 4;
  std::string out_dir = ".";
  CLI::App* fuzz = app.add_subcommand("fuzz", "run the randomized theorem campaigns");
  fuzz->add_option("dim", dim, "ambient dimension (1-4)")->required()->check(CLI::Range(1, 4));
  fuzz->add_option("count", count, "instances per campaign")->required()
      ->check(CLI::NonNegativeNumber);
  fuzz->add_option("--seed", seed, "RNG seed");
  fuzz->add_option("--max-denominator", max_den, "coefficient denominator bound")
      ->check(CLI::PositiveNumber);
  fuzz->add_option("--out-dir", out_dir, "directory for counterexample files");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return cmd_run(problem_path, output_path, with_oracle, require_qc);
    return cmd_fuzz(dim, count, seed, max_den, out_dir);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
