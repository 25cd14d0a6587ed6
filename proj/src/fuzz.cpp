#include "corecalc/fuzz.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <utility>

#include "corecalc/corealg.hpp"
#include "corecalc/json_io.hpp"
#include "corecalc/linalg.hpp"
#include "corecalc/oracle.hpp"
#include "corecalc/subdiff.hpp"

namespace corecalc {

namespace {

Polyhedron drop_row(const HRep& h, bool from_eqs, Index row) {
  HRep out = HRep::universe(h.dim);
  const Mat& src = from_eqs ? h.C : h.A;
  const Vec& rhs = from_eqs ? h.d : h.b;
  Mat m(src.rows() - 1, h.dim);
  Vec v(src.rows() - 1);
  Index t = 0;
  for (Index i = 0; i < src.rows(); ++i) {
    if (i == row) continue;
    m.row(t) = src.row(i);
    v[t] = rhs[i];
    ++t;
  }
  if (from_eqs) {
    out.A = h.A;
    out.b = h.b;
    out.C = std::move(m);
    out.d = std::move(v);
  } else {
    out.A = std::move(m);
    out.b = std::move(v);
    out.C = h.C;
    out.d = h.d;
  }
  return Polyhedron(std::move(out));
}

Json map_to_json(const SetValuedMap& f) {
  return {{"kind", "setvaluedmap"},
          {"dim_in", f.dim_in},
          {"dim_out", f.dim_out},
          {"graph", set_to_json(f.graph)}};
}

Json function_to_json(const PolyFunction& f) {
  return {{"kind", "function"}, {"dim", f.dim}, {"epi", set_to_json(f.epi)}};
}

int draw(Rng& rng, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  return d(rng);
}

}  // namespace

Polyhedron shrink_while(const Polyhedron& p,
                        const std::function<bool(const Polyhedron&)>& still_failing) {
  Polyhedron cur = p;
  for (bool progress = true; progress;) {
    progress = false;
    const HRep& h = cur.hrep();
    for (Index i = 0; i < h.A.rows() && !progress; ++i) {
      Polyhedron cand = drop_row(h, false, i);
      if (still_failing(cand)) {
        cur = std::move(cand);
        progress = true;
      }
    }
    if (progress) continue;
    for (Index i = 0; i < h.C.rows() && !progress; ++i) {
      Polyhedron cand = drop_row(h, true, i);
      if (still_failing(cand)) {
        cur = std::move(cand);
        progress = true;
      }
    }
  }
  return cur;
}

namespace {

/** Shared per-campaign driver state: counts, RNG, and violation files. */
class Driver {
 public:
  Driver(Index dim, int count, std::uint64_t seed, GenConfig cfg, std::string out_dir)
      : dim_(std::clamp<Index>(dim, 1, 4)),
        count_(count),
        seed_(seed),
        cfg_(cfg),
        out_dir_(std::move(out_dir)) {}

  /** Runs `body` count_ times under a fresh campaign entry. `body` returns
   * true when the instance met its property; it may record a violation file
   * itself first via violation(). Throws inside an instance count as
   * violations with the message preserved. */
  void campaign(const std::string& name, const std::function<bool(Rng&, int, CampaignStats&)>& body) {
    CampaignStats st;
    st.name = name;
    Rng rng(seed_ + 0x9E3779B97F4A7C15ULL * (outcome_.campaigns.size() + 1));
    const auto t0 = std::chrono::steady_clock::now();
    for (int k = 0; k < count_; ++k) {
      ++st.instances;
      try {
        if (!body(rng, k, st)) {
          // The body reported false without writing a file: record a stub.
          violation(st, k, Json::object());
        }
      } catch (const std::exception& e) {
        violation(st, k, Json{{"error", e.what()}});
      }
    }
    st.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    outcome_.campaigns.push_back(std::move(st));
  }

  void violation(CampaignStats& st, int index, Json detail) {
    ++st.violations;
    ++outcome_.total_violations;
    std::error_code ec;
    std::filesystem::create_directories(out_dir_, ec);
    const std::string path =
        out_dir_ + "/counterexample_" + st.name + "_" + std::to_string(index) + ".json";
    detail["campaign"] = st.name;
    detail["seed"] = seed_;
    detail["index"] = index;
    std::ofstream out(path);
    out << detail.dump(2) << "\n";
    outcome_.counterexample_files.push_back(path);
  }

  /** Rule bookkeeping: counts the hypothesis and conclusion, returns whether
   * the instance violated either the containment or the equality claim. */
  static bool rule_violated(CampaignStats& st, const RuleVerdict& v) {
    if (v.qc_satisfied) {
      ++st.qc_true;
      if (v.equal) ++st.equal_under_qc;
    }
    return !v.rhs_subset_lhs || (v.qc_satisfied && !v.equal);
  }

  /** Unconditional-property bookkeeping (hypotheses hold by construction). */
  static void tally_plain(CampaignStats& st, bool ok) {
    ++st.qc_true;
    if (ok) ++st.equal_under_qc;
  }

  Index dim_;
  int count_;
  std::uint64_t seed_;
  GenConfig cfg_;
  std::string out_dir_;
  FuzzOutcome outcome_;
};

Vec centroid(const std::vector<Vec>& points) {
  Vec sum = zero_vec(points.front().size());
  for (const Vec& p : points) sum += p;
  return sum / Rational(static_cast<long>(points.size()));
}

}  // namespace

FuzzOutcome run_campaigns(Index dim, int count, std::uint64_t seed, const GenConfig& cfg,
                          const std::string& out_dir) {
  Driver dr(dim, count, seed, cfg, out_dir);
  const Index d = dr.dim_;
  const Index n2 = std::min<Index>(d, 2);
  const auto out_dim = [&](int k) -> Index { return (d >= 2 && k % 2 == 1) ? 2 : 1; };

  dr.campaign("normal_intersection", [&](Rng& rng, int k, CampaignStats& st) {
    const Vec c = random_vec(rng, d, cfg);
    const Polyhedron om1 =
        k % 3 == 0 ? random_solid(rng, d, c, cfg) : random_polyhedron(rng, d, c, cfg);
    const Polyhedron om2 = random_polyhedron(rng, d, c, cfg);
    const RuleVerdict v = intersection_rule(om1, om2, c);
    if (!Driver::rule_violated(st, v)) return true;
    const auto fails = [&](const Polyhedron& a, const Polyhedron& b) {
      try {
        const RuleVerdict w = intersection_rule(a, b, c);
        return !w.rhs_subset_lhs || (w.qc_satisfied && !w.equal);
      } catch (...) {
        return false;
      }
    };
    const Polyhedron s1 = shrink_while(om1, [&](const Polyhedron& q) { return fails(q, om2); });
    const Polyhedron s2 = shrink_while(om2, [&](const Polyhedron& q) { return fails(s1, q); });
    dr.violation(st, k,
                 Json{{"objects", Json{{"om1", set_to_json(s1)}, {"om2", set_to_json(s2)}}},
                      {"point", to_json(c)}});
    return true;
  });

  dr.campaign("coderivative_sum", [&](Rng& rng, int k, CampaignStats& st) {
    const Index mo = out_dim(k);
    const Vec x = random_vec(rng, n2, cfg);
    const Vec y1 = random_vec(rng, mo, cfg);
    const Vec y2 = random_vec(rng, mo, cfg);
    const SetValuedMap f1 = random_map_through(rng, n2, mo, x, y1, cfg, k % 3 == 0);
    const SetValuedMap f2 = random_map_through(rng, n2, mo, x, y2, cfg, k % 3 == 1);
    const Vec g = random_vec(rng, mo, cfg);
    const RuleVerdict v = coderivative_sum_rule(f1, f2, x, Vec(y1 + y2), y1, y2, g);
    if (!Driver::rule_violated(st, v)) return true;
    const auto fails = [&](const SetValuedMap& a, const SetValuedMap& b) {
      try {
        const RuleVerdict w = coderivative_sum_rule(a, b, x, Vec(y1 + y2), y1, y2, g);
        return !w.rhs_subset_lhs || (w.qc_satisfied && !w.equal);
      } catch (...) {
        return false;
      }
    };
    const Polyhedron g1 = shrink_while(f1.graph, [&](const Polyhedron& q) {
      return fails(SetValuedMap{n2, mo, q}, f2);
    });
    const SetValuedMap s1{n2, mo, g1};
    const Polyhedron g2 = shrink_while(f2.graph, [&](const Polyhedron& q) {
      return fails(s1, SetValuedMap{n2, mo, q});
    });
    dr.violation(st, k,
                 Json{{"objects", Json{{"f1", map_to_json(s1)},
                                       {"f2", map_to_json(SetValuedMap{n2, mo, g2})}}},
                      {"point", to_json(x)},
                      {"y1", to_json(y1)},
                      {"y2", to_json(y2)},
                      {"dual", to_json(g)}});
    return true;
  });

  dr.campaign("coderivative_chain", [&](Rng& rng, int k, CampaignStats& st) {
    const Index mo = out_dim(k);
    const Index po = out_dim(k + 1);
    const Vec x = random_vec(rng, n2, cfg);
    const Vec y = random_vec(rng, mo, cfg);
    const Vec z = random_vec(rng, po, cfg);
    const SetValuedMap f = random_map_through(rng, n2, mo, x, y, cfg, k % 2 == 0);
    const SetValuedMap g = random_map_through(rng, mo, po, y, z, cfg, k % 2 == 1);
    const Vec h = random_vec(rng, po, cfg);
    const RuleVerdict v = coderivative_chain_rule(f, g, x, z, y, h);
    if (!Driver::rule_violated(st, v)) return true;
    const auto fails = [&](const SetValuedMap& a, const SetValuedMap& b) {
      try {
        const RuleVerdict w = coderivative_chain_rule(a, b, x, z, y, h);
        return !w.rhs_subset_lhs || (w.qc_satisfied && !w.equal);
      } catch (...) {
        return false;
      }
    };
    const Polyhedron gf = shrink_while(f.graph, [&](const Polyhedron& q) {
      return fails(SetValuedMap{n2, mo, q}, g);
    });
    const SetValuedMap sf{n2, mo, gf};
    const Polyhedron gg = shrink_while(g.graph, [&](const Polyhedron& q) {
      return fails(sf, SetValuedMap{mo, po, q});
    });
    dr.violation(st, k,
                 Json{{"objects", Json{{"f", map_to_json(sf)},
                                       {"g", map_to_json(SetValuedMap{mo, po, gg})}}},
                      {"point", to_json(x)},
                      {"mid", to_json(y)},
                      {"point2", to_json(z)},
                      {"dual", to_json(h)}});
    return true;
  });

  dr.campaign("point_separation", [&](Rng& rng, int k, CampaignStats& st) {
    const Vec c = random_vec(rng, d, cfg);
    const Polyhedron om = random_solid(rng, d, c, cfg);
    Vec x0 = c;
    if (k % 2 == 1) {
      x0 = Vec(c + random_vec(rng, d, cfg) +
               Rational(3 + k % 3) * unit_vec(d, static_cast<Index>(k) % d));
    }
    const auto cert = separate_point(om, x0);
    const bool inside = core_contains(om, x0);
    bool ok = cert.has_value() != inside;
    if (ok && cert.has_value()) {
      ok = oracle_separation_valid(om, singleton(x0), cert->f).verdict;
      if (ok && cert->proper_witnesses.has_value()) {
        ok = dot(cert->f, cert->proper_witnesses->first) <
             dot(cert->f, cert->proper_witnesses->second);
      }
    }
    Driver::tally_plain(st, ok);
    if (!ok) {
      dr.violation(st, k,
                   Json{{"objects", Json{{"om", set_to_json(om)}}}, {"point", to_json(x0)}});
    }
    return true;
  });

  dr.campaign("extremality_agreement", [&](Rng& rng, int k, CampaignStats& st) {
    const Vec c1 = random_vec(rng, d, cfg);
    Vec c2 = c1;
    if (k % 3 == 1) c2 = Vec(c1 + random_vec(rng, d, cfg));
    if (k % 3 == 2) c2 = Vec(c1 + Rational(6) * unit_vec(d, static_cast<Index>(k) % d));
    const Polyhedron om1 = random_solid(rng, d, c1, cfg);
    const Polyhedron om2 = random_polyhedron(rng, d, c2, cfg);
    const ExtremalityCertificate ex = is_extremal(om1, om2);
    const auto cert = separate_sets(om1, om2);
    bool ok = ex.verdict == cert.has_value();
    if (ok && cert.has_value()) ok = oracle_separation_valid(om1, om2, cert->f).verdict;
    const Polyhedron inter = intersect(om1, om2);
    if (ok && !inter.is_empty()) {
      const Vec xb = *feasible_point(inter.hrep());
      const auto ep = extremal_principle(om1, om2, xb);
      ok = ep.has_value() == ex.verdict && (!ep.has_value() || !is_zero_vec(*ep));
    }
    Driver::tally_plain(st, ok);
    if (!ok) {
      dr.violation(st, k,
                   Json{{"objects", Json{{"om1", set_to_json(om1)}, {"om2", set_to_json(om2)}}}});
    }
    return true;
  });

  dr.campaign("segment_interiority", [&](Rng& rng, int k, CampaignStats& st) {
    const Vec c = random_vec(rng, d, cfg);
    const Polyhedron om = random_solid(rng, d, c, cfg);
    const Vec a = *strict_interior_point(om.hrep());
    const auto& verts = om.vrep().vertices;
    const Vec b = verts[static_cast<std::size_t>(k) % verts.size()];
    static const Rational lams[5] = {Rational(1), Rational(1, 2), Rational(1, 4), Rational(3, 4),
                                     Rational(9, 10)};
    const Rational lam = lams[k % 5];
    const Vec p = Vec(lam * a + (Rational(1) - lam) * b);
    const bool ok = core_contains(om, p) && oracle_core_member(om, p).verdict;
    Driver::tally_plain(st, ok);
    if (!ok) {
      dr.violation(st, k,
                   Json{{"objects", Json{{"om", set_to_json(om)}}},
                        {"point", to_json(p)},
                        {"lambda", to_json(lam)}});
    }
    return true;
  });

  dr.campaign("graph_interior", [&](Rng& rng, int k, CampaignStats& st) {
    const Index mo = out_dim(k);
    const Vec x = random_vec(rng, n2, cfg);
    const Vec y = random_vec(rng, mo, cfg);
    const SetValuedMap f = random_map_through(rng, n2, mo, x, y, cfg, true);
    Vec xy(n2 + mo);
    xy.head(n2) = x;
    xy.tail(mo) = y;
    if (k % 2 == 1) xy += random_vec(rng, n2 + mo, cfg);
    const auto pr = graph_core_check(f, xy);
    const bool ok = pr.first == pr.second;
    Driver::tally_plain(st, ok);
    if (!ok) {
      dr.violation(st, k,
                   Json{{"objects", Json{{"f", map_to_json(f)}}}, {"point", to_json(xy)}});
    }
    return true;
  });

  dr.campaign("marginal_subdiff", [&](Rng& rng, int k, CampaignStats& st) {
    const Index mo = out_dim(k);
    const PolyFunction phi = random_max_affine(rng, n2 + mo, 2 + k % 2, cfg);
    const Vec x0 = random_vec(rng, n2, cfg);
    const Vec y0 = random_vec(rng, mo, cfg);
    const SetValuedMap f = random_bounded_map_through(rng, n2, mo, x0, y0, cfg, k % 2 == 0);
    const MarginalProblem m = make_marginal(phi, f);
    const Polyhedron s = argmin_set(m, x0);
    const Vec ybar = s.vrep().vertices.front();
    const RuleVerdict v = marginal_subdiff_rule(m, x0, ybar);
    if (!Driver::rule_violated(st, v)) return true;
    const auto fails = [&](const PolyFunction& p, const SetValuedMap& q) {
      try {
        const MarginalProblem mm = make_marginal(p, q);
        const RuleVerdict w = marginal_subdiff_rule(mm, x0, ybar);
        return !w.rhs_subset_lhs || (w.qc_satisfied && !w.equal);
      } catch (...) {
        return false;
      }
    };
    const Polyhedron sg = shrink_while(f.graph, [&](const Polyhedron& q) {
      try {
        return fails(phi, make_map(n2, mo, q));
      } catch (...) {
        return false;
      }
    });
    dr.violation(st, k,
                 Json{{"objects", Json{{"phi", function_to_json(phi)},
                                       {"f", map_to_json(SetValuedMap{n2, mo, sg})}}},
                      {"point", to_json(x0)},
                      {"point2", to_json(ybar)}});
    return true;
  });

  dr.campaign("gauge_laws", [&](Rng& rng, int k, CampaignStats& st) {
    const Polyhedron om = random_solid(rng, d, zero_vec(d), cfg);
    const Vec x = random_vec(rng, d, cfg);
    const Vec y = random_vec(rng, d, cfg);
    const Rational lam(draw(rng, 1, cfg.max_numerator), draw(rng, 1, cfg.max_denominator));
    const bool subadd = gauge(om, Vec(x + y)) <= gauge(om, x) + gauge(om, y);
    const bool homog = gauge(om, Vec(lam * x)) == lam * gauge(om, x);
    const bool at_zero = gauge(om, zero_vec(d)).is_zero();
    const bool ok = subadd && homog && at_zero;
    Driver::tally_plain(st, ok);
    if (!ok) {
      dr.violation(st, k,
                   Json{{"objects", Json{{"om", set_to_json(om)}}},
                        {"x", to_json(x)},
                        {"y", to_json(y)},
                        {"lambda", to_json(lam)}});
    }
    return true;
  });

  dr.campaign("oracle_membership", [&](Rng& rng, int k, CampaignStats& st) {
    bool ok = true;
    Json objects;
    if (k % 2 == 0) {
      const Vec c = random_vec(rng, d, cfg);
      const Polyhedron om = random_polyhedron(rng, d, c, cfg);
      const auto& verts = om.vrep().vertices;
      const Vec xb = verts[static_cast<std::size_t>(k) % verts.size()];
      const auto nc = normal_cone(om, xb);
      const Polyhedron cone = cone_as_polyhedron(*nc);
      Vec member = zero_vec(d);
      for (const Vec& r : nc->generators) member += Rational(draw(rng, 0, 2)) * r;
      for (const Vec& l : nc->lineality) member += Rational(draw(rng, -2, 2)) * l;
      const Vec probe = random_vec(rng, d, cfg);
      ok = contains(cone, member) == oracle_normal_member(om, xb, member).verdict &&
           contains(cone, probe) == oracle_normal_member(om, xb, probe).verdict;
      objects = Json{{"om", set_to_json(om)}, {"point", to_json(xb)},
                     {"member", to_json(member)}, {"probe", to_json(probe)}};
    } else {
      const PolyFunction phi = random_max_affine(rng, d, 2 + k % 2, cfg);
      const Vec xb = random_vec(rng, d, cfg);
      const Polyhedron sd = subdifferential(phi, xb);
      const Vec member = centroid(sd.vrep().vertices);
      const Vec probe = random_vec(rng, d, cfg);
      ok = contains(sd, member) == oracle_subgrad_member(phi, xb, member).verdict &&
           contains(sd, probe) == oracle_subgrad_member(phi, xb, probe).verdict;
      objects = Json{{"phi", function_to_json(phi)}, {"point", to_json(xb)},
                     {"member", to_json(member)}, {"probe", to_json(probe)}};
    }
    Driver::tally_plain(st, ok);
    if (!ok) dr.violation(st, k, Json{{"objects", std::move(objects)}});
    return true;
  });

  return std::move(dr.outcome_);
}

std::string stats_table(const FuzzOutcome& out) {
  std::ostringstream os;
  os << std::left << std::setw(25) << "campaign" << std::setw(11) << "instances" << std::setw(9)
     << "qc_true" << std::setw(16) << "equal_under_qc" << std::setw(12) << "violations"
     << "seconds\n";
  os << std::fixed << std::setprecision(2);
  for (const CampaignStats& st : out.campaigns) {
    os << std::setw(25) << st.name << std::setw(11) << st.instances << std::setw(9) << st.qc_true
       << std::setw(16) << st.equal_under_qc << std::setw(12) << st.violations << st.seconds
       << "\n";
  }
  return os.str();
}

}  // namespace corecalc
