#include "rootval/cli.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "rootval/disc_demo.hpp"
#include "rootval/equising.hpp"
#include "rootval/errors.hpp"
#include "rootval/local_algebra.hpp"
#include "rootval/newton_puiseux.hpp"
#include "rootval/parse.hpp"
#include "rootval/rootval_datum.hpp"

namespace rootval {

namespace {

using json = nlohmann::ordered_json;

json certificate_json(const LocalQuotientCertificate& c) {
  return json{{"value", c.value},
              {"stabilized_at", c.stabilized_at},
              {"method", method_name(c.method)}};
}

std::vector<Rat> parse_sample_list(const std::string& src) {
  std::vector<Rat> out;
  std::istringstream is(src);
  std::string item;
  while (std::getline(is, item, ',')) {
    std::string t;
    for (char c : item) {
      if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    }
    auto v = t.empty() ? std::nullopt : parse_rat(t);
    if (!v) fail_pre("SyntaxError", "bad entry in sample list: \"" + item + "\"");
    out.push_back(*v);
  }
  if (out.empty()) fail_pre("DegenerateInput", "empty sample list");
  return out;
}

long matrix_precision(const MatrixSeries& m, const std::optional<long>& override_p) {
  long base = m.trunc().value_or(0);
  ROOTVAL_CHECK(base > 0, "parsed matrices always declare a truncation");
  // never invent terms beyond the declared truncation
  return override_p ? std::min(base, *override_p) : base;
}

std::string pass_fail(bool ok) { return ok ? "PASS" : "FAIL"; }

// The declared truncation bounds what the expansion can certify, and the
// certifiable order is generally lower (entries only pin eigenvalues up to
// the polygon slopes). Any order that succeeds certifies every difference
// valuation exactly, so backing off never changes a reported datum.
template <typename F>
auto with_backoff(long start, F f) -> decltype(f(start)) {
  for (long N = start;; N /= 2) {
    try {
      return f(N);
    } catch (const Error& e) {
      if (e.kind() != ErrKind::InsufficientPrecision || N <= 2) throw;
    }
  }
}

json rootval_datum_json(const RootValuationDatum& dat) {
  json cycles = json::array();
  for (const auto& cyc : cycles_of(dat.w)) {
    json c = json::array();
    for (long i : cyc) c.push_back(i + 1);  // 1-based in reports
    cycles.push_back(c);
  }
  json r = json::array();
  for (long i = 0; i < dat.d; ++i) {
    json row = json::array();
    for (long j = 0; j < dat.d; ++j) {
      row.push_back(i == j ? "" : to_string(dat.r[i][j]));
    }
    r.push_back(row);
  }
  return json{{"w_cycles", cycles}, {"r", r}};
}

json char_pairs_json(const CharPairs& p) {
  json out = json::array();
  for (const auto& [m, n] : p.pairs) out.push_back(json::array({m, n}));
  return out;
}

struct GermAnalysis {
  std::vector<Branch> branches;
  LocalQuotientCertificate delta;
};

// branches + certified delta of a reduced germ, raising the working
// expansion order when a truncation-limited step asks for more (the input
// polynomial is exact, so no terms are invented)
GermAnalysis analyze_germ(const SparsePoly& f, long start) {
  long N = std::max(start, 8L);
  for (;; N *= 2) {
    try {
      GermAnalysis out;
      out.branches = germ_branches(f, N);
      out.delta = delta_from_poly(f, out.branches);
      return out;
    } catch (const Error& e) {
      if (e.kind() != ErrKind::InsufficientPrecision || N >= 512) throw;
    }
  }
}

json run_invariants(const Request& r, json& certificates) {
  SparsePoly f = parse_polynomial(r.poly);
  LocalQuotientCertificate mu = milnor_number(f);
  LocalQuotientCertificate tau = tjurina_number(f);
  GermAnalysis g = analyze_germ(f, r.precision.value_or(16));
  long branch_count = static_cast<long>(g.branches.size());
  bool relation = mu.value == 2 * g.delta.value - branch_count + 1;
  certificates["mu"] = certificate_json(mu);
  certificates["tau"] = certificate_json(tau);
  certificates["delta"] = certificate_json(g.delta);
  return json{{"mu", mu.value},
              {"tau", tau.value},
              {"delta", g.delta.value},
              {"branch_count", branch_count},
              {"milnor_relation_check", pass_fail(relation)}};
}

json run_branch(const Request& r, json& certificates) {
  Branch b = parse_branch(r.branch);
  json out;
  out["d"] = b.vertical ? 1 : b.d;
  out["vertical"] = b.vertical;
  if (b.vertical) {
    out["char_exponents"] = json::array({1});
    out["char_pairs"] = json::array();
    out["delta"] = 0;
    out["conductor"] = 0;
    return out;
  }
  CharPairs cp = puiseux_char_pairs(b);
  CharExponents ce = exponents_from_pairs(cp);
  // delta is equisingularity-invariant, so compute it on the exact
  // unit-coefficient model of the pairs instead of the truncated input
  Branch model;
  model.d = ce.beta[0];
  std::map<Rat, Cyclotomic> terms;
  for (size_t i = 1; i < ce.beta.size(); ++i) terms[Rat(ce.beta[i])] = Cyclotomic(1);
  model.y = PuiseuxSeries::from_terms(std::move(terms), 1);
  LocalQuotientCertificate delta = branch_delta(model);
  certificates["delta"] = certificate_json(delta);
  out["char_exponents"] = ce.beta;
  out["char_pairs"] = char_pairs_json(cp);
  out["delta"] = delta.value;
  out["conductor"] = 2 * delta.value;
  return out;
}

json run_rootval(const Request& r) {
  MatrixSeries m = parse_matrix(r.matrix);
  return with_backoff(matrix_precision(m, r.precision), [&](long N) {
    return rootval_datum_json(root_valuation_datum(eigen_expansions(m, N)));
  });
}

std::vector<Branch> parse_branch_list(const std::vector<std::string>& srcs,
                                      const std::string& which) {
  if (srcs.empty()) fail_pre("DegenerateInput", "no branches given for " + which);
  std::vector<Branch> out;
  for (const auto& s : srcs) out.push_back(parse_branch(s));
  return out;
}

json run_equising(const Request& r) {
  EquisingularityDatum da = equisingularity_datum(parse_branch_list(r.a, "--a"));
  EquisingularityDatum db = equisingularity_datum(parse_branch_list(r.b, "--b"));
  auto bij = equisingularity_bijection(da, db);
  json out;
  out["equal"] = bij.has_value();
  if (bij) {
    json w = json::array();
    for (long i : *bij) w.push_back(i + 1);
    out["witness_bijection"] = w;
  }
  return out;
}

json run_intersect(const Request& r) {
  if (r.a.size() != 1 || r.b.size() != 1) {
    fail_pre("DegenerateInput", "intersect takes exactly one --a and one --b");
  }
  return json{{"number", intersection_number(parse_branch(r.a[0]),
                                             parse_branch(r.b[0]))}};
}

json run_gkm(const Request& r) {
  if (r.a.size() != 1 || r.b.size() != 1) {
    fail_pre("DegenerateInput", "gkm-check takes exactly one --a and one --b");
  }
  MatrixSeries g1 = parse_matrix(r.a[0]);
  MatrixSeries g2 = parse_matrix(r.b[0]);
  long N0 = std::min(matrix_precision(g1, r.precision),
                     matrix_precision(g2, r.precision));
  GkmReport rep = with_backoff(N0, [&](long N) { return verify_gkm_lemma(g1, g2, N); });
  return json{{"rootval_equal", rep.rootval_equal},
              {"equising_equal", rep.equising_equal},
              {"implication", pass_fail(rep.implication_holds)}};
}

json run_disc_demo(const Request& r, json& warnings) {
  MiniversalAn m = build_miniversal(r.n);
  SparsePoly disc = discriminant_polynomial(m);
  json checks;
  if (r.n <= 6) {
    SparsePoly composed = disc;
    for (long k = 2; k <= r.n; ++k) {
      composed = composed.substituted("a" + std::to_string(k),
                                      m.phi[static_cast<size_t>(k - 2)]);
    }
    checks["phi_annihilates_discriminant"] = pass_fail(composed.is_zero());
  } else {
    checks["phi_annihilates_discriminant"] = "SKIPPED";
    warnings.push_back("discriminant composition check skipped for n > 6");
  }
  if (r.n >= 3) {
    NashReport rep = verify_rank_and_nash(m, parse_sample_list(r.samples));
    checks["rank"] = pass_fail(rep.rank_ok);
    checks["hyperplane_only_x"] = pass_fail(rep.hyperplane_only_x);
    checks["injective"] = pass_fail(rep.injective);
    if (rep.failed_sample) checks["failed_sample"] = to_string(*rep.failed_sample);
  } else {
    checks["rank"] = "SKIPPED";
    checks["hyperplane_only_x"] = "SKIPPED";
    checks["injective"] = "SKIPPED";
    warnings.push_back("tangent-space checks need n >= 3");
  }
  return json{{"n", r.n}, {"discriminant", disc.str()}, {"checks", checks}};
}

json inputs_echo(const Request& r) {
  json echo;
  if (!r.poly.empty()) echo["poly"] = r.poly;
  if (!r.branch.empty()) echo["branch"] = r.branch;
  if (!r.matrix.empty()) echo["matrix"] = r.matrix;
  if (!r.a.empty()) echo["a"] = r.a;
  if (!r.b.empty()) echo["b"] = r.b;
  if (r.command == "disc-demo") {
    echo["n"] = r.n;
    echo["samples"] = r.samples;
  }
  if (r.precision) echo["precision"] = *r.precision;
  return echo;
}

void emit_text(const json& report, std::ostream& out) {
  out << "command: " << report["command"].get<std::string>() << "\n";
  for (const auto& [key, value] : report["result"].items()) {
    out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
        << "\n";
  }
  for (const auto& w : report["warnings"]) {
    out << "warning: " << w.get<std::string>() << "\n";
  }
}

}  // namespace

int run(const Request& r, std::ostream& out) {
  bool as_json = r.format == "json";
  try {
    if (!as_json && r.format != "text") {
      fail_pre("DegenerateInput", "format must be json or text");
    }
    if (r.precision && *r.precision < 4) {
      fail_pre("DegenerateInput", "precision must be >= 4");
    }
    json report;
    report["command"] = r.command;
    report["inputs_echo"] = inputs_echo(r);
    json certificates = json::object();
    json warnings = json::array();
    json result;
    if (r.command == "invariants") {
      result = run_invariants(r, certificates);
    } else if (r.command == "branch") {
      result = run_branch(r, certificates);
    } else if (r.command == "rootval") {
      result = run_rootval(r);
    } else if (r.command == "equising") {
      result = run_equising(r);
    } else if (r.command == "intersect") {
      result = run_intersect(r);
    } else if (r.command == "gkm-check") {
      result = run_gkm(r);
    } else if (r.command == "disc-demo") {
      result = run_disc_demo(r, warnings);
    } else {
      fail_pre("DegenerateInput", "unknown command " + r.command);
    }
    report["result"] = result;
    report["certificates"] = certificates;
    report["warnings"] = warnings;
    if (as_json) {
      out << report.dump(2) << "\n";
    } else {
      emit_text(report, out);
    }
    return 0;
  } catch (const Error& e) {
    if (as_json) {
      json err{{"error", e.code()}, {"detail", e.detail()}};
      if (e.location()) err["location"] = *e.location();
      out << err.dump(2) << "\n";
    } else {
      out << "error: " << e.code() << ": " << e.detail() << "\n";
    }
    switch (e.kind()) {
      case ErrKind::Precondition: return 2;
      case ErrKind::InsufficientPrecision: return 3;
      case ErrKind::Internal: return 4;
    }
    return 4;
  } catch (const std::exception& e) {
    if (as_json) {
      out << json{{"error", "InternalInvariantViolation"}, {"detail", e.what()}}.dump(2)
          << "\n";
    } else {
      out << "error: InternalInvariantViolation: " << e.what() << "\n";
    }
    return 4;
  }
}

}  // namespace rootval
