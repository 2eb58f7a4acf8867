#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "boolprod/bialphabet.hpp"
#include "boolprod/boolean_products.hpp"
#include "boolprod/derangement.hpp"
#include "boolprod/lascoux.hpp"
#include "boolprod/resonance.hpp"

namespace boolprod::cli {

namespace {

using nlohmann::json;

// Text rendering and JSON payload of one command's result.
struct Result {
  std::string text;
  json payload = json::object();
  bool consistent = true;
  std::string inconsistency;
};

json schur_terms(const SchurVector& v) {
  json terms = json::array();
  for (const auto& [lambda, c] : v.terms()) {
    terms.push_back({{"partition", lambda.to_string()}, {"coefficient", c.get_str()}});
  }
  return terms;
}

json rational_terms(const RationalSchurVector& v) {
  json terms = json::array();
  for (const auto& [lambda, c] : v.terms()) {
    terms.push_back({{"partition", lambda.to_string()}, {"coefficient", c.get_str()}});
  }
  return terms;
}

std::string rational_text(const RationalSchurVector& v) {
  if (v.empty()) return "0";
  std::string out;
  for (const auto& [lambda, c] : v.terms()) {
    const Rational magnitude = abs(c);
    if (out.empty()) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (magnitude != 1) out += magnitude.get_str();
    out += "s[" + lambda.to_string() + "]";
  }
  return out;
}

std::string q_text(const QSchurVector& v) {
  if (v.empty()) return "0";
  std::string out;
  for (const auto& [lambda, c] : v.terms()) {
    if (!out.empty()) out += " + ";
    const std::string coeff = c.to_string();
    if (coeff != "1") out += c.degree() == 0 ? coeff : "(" + coeff + ")";
    out += "s[" + lambda.to_string() + "]";
  }
  return out;
}

json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return json(v.get_si());
  return json(v.get_str());
}

Result resonance_result(int n, const CharPoly& chi) {
  Result r;
  r.text = chi.to_string();
  json coeffs = json::array();
  for (const Integer& c : chi.coeffs) coeffs.push_back(integer_json(c));
  r.payload["n"] = n;
  r.payload["chi"] = coeffs;
  r.payload["regions"] = integer_json(regions(chi));
  r.payload["bounded"] = integer_json(bounded_regions(chi));
  return r;
}

Partition parse_partition_flag(const std::string& flag, const std::string& text) {
  try {
    return Partition::parse(text);
  } catch (const UsageError& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Schur expansions of Boolean product polynomials and resonance arrangement counts",
               "boolprod"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", kVersion);

  std::string format = "text";
  bool timing = false;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--timing", timing, "Report wall time (JSON field or stderr line)");

  json params = json::object();
  std::function<Result()> action;

  auto positive = CLI::Range(1, 1 << 20);
  auto nonneg = CLI::Range(0, 1 << 20);

  // boolean-expand
  {
    auto* sub = app.add_subcommand("boolean-expand", "Schur expansion of B_{n,k} or e_p(X^(k))");
    auto n = std::make_shared<int>();
    auto k = std::make_shared<int>();
    auto p = std::make_shared<std::optional<int>>();
    sub->add_option("--n", *n)->required()->check(positive);
    sub->add_option("--k", *k)->required()->check(positive);
    sub->add_option("--p", *p)->check(nonneg);
    sub->callback([&, n, k, p] {
      params = {{"n", *n}, {"k", *k}};
      if (p->has_value()) params["p"] = **p;
      action = [n, k, p] {
        const SchurVector v = p->has_value() ? ep_subset(*n, *k, **p) : boolean_product(*n, *k);
        Result r;
        r.text = to_text(v);
        r.payload["basis"] = "schur";
        r.payload["terms"] = schur_terms(v);
        return r;
      };
    });
  }

  // total
  {
    auto* sub = app.add_subcommand("total", "Schur expansion of the total Boolean product B_n");
    auto n = std::make_shared<int>();
    sub->add_option("--n", *n)->required()->check(positive);
    sub->callback([&, n] {
      params = {{"n", *n}};
      action = [n] {
        const SchurVector v = total_boolean(*n);
        Result r;
        r.text = to_text(v);
        r.payload["basis"] = "schur";
        r.payload["terms"] = schur_terms(v);
        return r;
      };
    });
  }

  // schur-at
  {
    auto* sub = app.add_subcommand("schur-at", "s_lambda evaluated at the alphabet X^(k)");
    auto lambda = std::make_shared<std::string>();
    auto n = std::make_shared<int>();
    auto k = std::make_shared<int>();
    sub->add_option("--lambda", *lambda)->required();
    sub->add_option("--n", *n)->required()->check(positive);
    sub->add_option("--k", *k)->required()->check(positive);
    sub->callback([&, lambda, n, k] {
      const Partition shape = parse_partition_flag("--lambda", *lambda);
      params = {{"lambda", shape.to_string()}, {"n", *n}, {"k", *k}};
      action = [shape, n, k] {
        const SchurVector v = schur_at_alphabet(shape, subset_alphabet(*n, *k));
        Result r;
        r.text = to_text(v);
        r.payload["basis"] = "schur";
        r.payload["terms"] = schur_terms(v);
        return r;
      };
    });
  }

  // lascoux
  {
    auto* sub = app.add_subcommand("lascoux", "Check the total Chern class identity for pair sums");
    auto n = std::make_shared<int>();
    auto kind = std::make_shared<std::string>();
    sub->add_option("--n", *n)->required()->check(positive);
    sub->add_option("--kind", *kind)->required()->check(CLI::IsMember({"exterior", "symmetric"}));
    sub->callback([&, n, kind] {
      params = {{"n", *n}, {"kind", *kind}};
      action = [n, kind] {
        const LascouxReport report = lascoux_check(*n, parse_chern_kind(*kind));
        Result r;
        std::ostringstream text;
        text << "lhs: " << to_text(report.lhs) << '\n'
             << "rhs: " << rational_text(report.rhs) << '\n'
             << "equal: " << (report.equal ? "true" : "false") << '\n'
             << "rhs_integral: " << (report.rhs_integral ? "true" : "false");
        r.text = text.str();
        r.payload["basis"] = "schur";
        r.payload["lhs"] = schur_terms(report.lhs);
        r.payload["rhs"] = rational_terms(report.rhs);
        r.payload["equal"] = report.equal;
        r.payload["rhs_integral"] = report.rhs_integral;
        r.consistent = report.equal && report.rhs_integral;
        if (!r.consistent) r.inconsistency = "lhs and rhs disagree or rhs is not integral";
        return r;
      };
    });
  }

  // binom-det and gv-count share flags
  for (const bool by_paths : {false, true}) {
    auto* sub = by_paths ? app.add_subcommand("gv-count", "Count non-intersecting lattice path families")
                         : app.add_subcommand("binom-det", "Binomial determinant d_{lambda,mu}");
    auto lambda = std::make_shared<std::string>();
    auto mu = std::make_shared<std::string>();
    auto dim = std::make_shared<int>();
    sub->add_option("--lambda", *lambda)->required();
    sub->add_option("--mu", *mu)->required();
    sub->add_option("--dim", *dim)->required()->check(positive);
    sub->callback([&, lambda, mu, dim, by_paths] {
      const Partition l = parse_partition_flag("--lambda", *lambda);
      const Partition m = parse_partition_flag("--mu", *mu);
      params = {{"lambda", l.to_string()}, {"mu", m.to_string()}, {"dim", *dim}};
      action = [l, m, dim, by_paths] {
        const Integer value = by_paths ? gv_count(l, m, *dim) : binomial_det(l, m, *dim);
        Result r;
        r.text = value.get_str();
        r.payload["value"] = value.get_str();
        return r;
      };
    });
  }

  // derangement
  {
    auto* sub = app.add_subcommand("derangement", "q-deformed B_{n,n-1} and its dimension");
    auto n = std::make_shared<int>();
    auto q = std::make_shared<std::optional<long>>();
    sub->add_option("--n", *n)->required()->check(positive);
    sub->add_option("--q", *q);
    sub->callback([&, n, q] {
      params = {{"n", *n}};
      if (q->has_value()) params["q"] = **q;
      action = [n, q] {
        const QSchurVector v = bnm1_q(*n);
        Result r;
        r.payload["basis"] = "schur";
        if (q->has_value()) {
          const Integer q0(**q);
          const SchurVector at = evaluate_at(v, q0);
          const Integer dim = frobenius_dimension(v, q0);
          r.text = to_text(at) + "\ndimension: " + dim.get_str();
          r.payload["terms"] = schur_terms(at);
          r.payload["dimension"] = dim.get_str();
        } else {
          r.text = q_text(v);
          json terms = json::array();
          for (const auto& [lambda, c] : v.terms()) {
            json coeffs = json::array();
            for (const Integer& x : c.coeffs()) coeffs.push_back(x.get_str());
            terms.push_back({{"partition", lambda.to_string()}, {"coefficient", coeffs}});
          }
          r.payload["terms"] = terms;
        }
        return r;
      };
    });
  }

  // charpoly and regions
  for (const bool regions_only : {false, true}) {
    auto* sub = regions_only
                    ? app.add_subcommand("regions", "Region count of the resonance arrangement")
                    : app.add_subcommand("charpoly", "Characteristic polynomial of the resonance arrangement");
    auto n = std::make_shared<int>();
    auto method = std::make_shared<std::string>("ff");
    auto allow_long = std::make_shared<bool>(false);
    sub->add_option("--n", *n)->required()->check(positive);
    sub->add_option("--method", *method)->check(CLI::IsMember({"ff", "mobius"}));
    sub->add_flag("--allow-long", *allow_long, "Permit the long-running n = 6 count");
    sub->callback([&, n, method, allow_long, regions_only] {
      params = {{"n", *n}, {"method", *method}};
      if (*allow_long) params["allow_long"] = true;
      action = [n, method, allow_long, regions_only] {
        const CharPoly chi = *method == "mobius" ? charpoly_mobius(*n) : charpoly_ff(*n, *allow_long);
        Result r = resonance_result(*n, chi);
        if (regions_only) r.text = regions(chi).get_str();
        return r;
      };
    });
  }

  // bialphabet
  {
    auto* sub = app.add_subcommand("bialphabet", "Expansion of P_{j,k}(X,Y) in s_lambda(X) s_mu(Y)");
    auto n = std::make_shared<int>();
    auto m = std::make_shared<int>();
    auto j = std::make_shared<int>();
    auto k = std::make_shared<int>();
    sub->add_option("--n", *n)->required()->check(nonneg);
    sub->add_option("--m", *m)->required()->check(nonneg);
    sub->add_option("--j", *j)->required()->check(nonneg);
    sub->add_option("--k", *k)->required()->check(nonneg);
    sub->callback([&, n, m, j, k] {
      params = {{"n", *n}, {"m", *m}, {"j", *j}, {"k", *k}};
      action = [n, m, j, k] {
        const BiSchurVector v = pjk_expand(*n, *m, *j, *k);
        Result r;
        r.text = v.to_text();
        r.payload["basis"] = "schur x schur";
        json terms = json::array();
        for (const auto& [key, c] : v.terms()) {
          terms.push_back({{"x", key.first.to_string()}, {"y", key.second.to_string()},
                           {"coefficient", c.get_str()}});
        }
        r.payload["terms"] = terms;
        return r;
      };
    });
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  const auto start = std::chrono::steady_clock::now();
  Result result;
  try {
    result = action();
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const CapacityError& e) {
    err << "capacity exceeded: " << e.what() << '\n';
    return kCapacity;
  } catch (const ConsistencyError& e) {
    err << "consistency failure: " << e.what() << '\n';
    return kConsistency;
  }
  const double wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  if (format == "json") {
    json record = result.payload;
    record["command"] = command;
    record["parameters"] = params;
    record["version"] = kVersion;
    if (timing) record["wall_time_ms"] = wall_ms;
    out << record.dump() << '\n';
  } else {
    out << result.text << '\n';
    if (timing) err << "wall_time_ms: " << wall_ms << '\n';
  }
  if (!result.consistent) {
    err << "consistency failure: " << result.inconsistency << '\n';
    return kConsistency;
  }
  return kOk;
}

}  // namespace boolprod::cli
