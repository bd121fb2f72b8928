#include "lmo/checks.hpp"

#include <algorithm>
#include <map>

#include "lmo/coblang.hpp"
#include "lmo/cylinders.hpp"
#include "lmo/error.hpp"
#include "lmo/notation.hpp"

namespace lmo {

bool CheckReport::ok() const {
  return std::all_of(items.begin(), items.end(), [](const CheckItem& i) { return i.ok; });
}

const std::vector<std::string>& check_suites() {
  static const std::vector<std::string> suites = {"hopf", "spot",     "invert-t1", "identity",
                                                  "lk",   "morita",   "cylinder",  "casson"};
  return suites;
}

std::vector<std::string> all_words(int max_length) {
  std::vector<std::vector<std::string>> by_length(std::max(max_length, 1) + 1);
  by_length[0] = {""};
  if (max_length >= 1) by_length[1] = {"."};
  for (int n = 2; n <= max_length; ++n)
    for (int k = 1; k < n; ++k)
      for (const auto& u : by_length[k])
        for (const auto& v : by_length[n - k]) by_length[n].push_back("(" + u + v + ")");
  std::vector<std::string> out;
  for (int n = 0; n <= max_length; ++n) out.insert(out.end(), by_length[n].begin(), by_length[n].end());
  return out;
}

const std::vector<std::string>& expression_corpus() {
  static const std::vector<std::string> corpus = [] {
    std::vector<std::string> out = {
        "id[.]",
        "id[(..)]",
        "id[]",
        "eps",
        "Y o (v+ x v+ x v+)",
        "Y o (v- x v+ x v+)",
        "psi o psi_inv",
        "psi o psi",
        "mu o psi o delta",
        "s o s o s",
        "(mu x mu) o Pinv[(..),.,.] o (P[.,.,.] x id[.]) o (id[.] x delta x id[.]) o (v- x v+ x v-)",
        "delta o s o v+",
        "(eps x id[.]) o psi o (v+ x id[.])",
        "Y o (id[(..)] x s) o (c x id[.])",
        "mu o (mu x id[.]) o P[.,.,.] o (id[.] x psi) o (id[.] x delta)",
        "(s x s_inv) o c",
        "Pinv[.,.,.] o (c x v-)",
    };
    for (const Relation& r : hopf_relations()) {
      out.push_back(r.lhs);
      out.push_back(r.rhs);
    }
    return out;
  }();
  return corpus;
}

namespace {

void add(CheckReport& r, const std::string& name, bool ok, const std::string& detail = "") {
  r.items.push_back({name, ok, ok ? "" : detail});
}

}  // namespace

CheckReport run_check(const std::string& suite, const GeneratorTable& table, const CheckOptions& options) {
  const int d = options.max_ideg < 0 ? table.max_ideg : options.max_ideg;
  CheckReport report{suite, {}};
  auto guarded = [&](const std::string& name, auto&& body) {
    try {
      body();
    } catch (const Error& e) {
      add(report, name, false, e.what());
    }
  };
  if (suite == "hopf" || suite == "spot") {
    for (const RelationResult& r :
         check_relations(table, suite == "hopf" ? hopf_relations() : spot_check_relations(), d))
      add(report, r.name, r.holds, r.detail);
  } else if (suite == "invert-t1") {
    const Series u = chi_inv_z_id1_y();
    const Series t = t1_y();
    const Series inv = star_inverse(u, 1);
    add(report, "star_inverse(Y-part of chi^-1 Z(Id_1)) = Y-part of T_1", inv == t,
        format_series(inv) + " vs " + format_series(t));
    add(report, "u * t = empty", star(u, t, 1) == Series::constant(2), format_series(star(u, t, 1)));
    add(report, "t * u = empty", star(t, u, 1) == Series::constant(2), format_series(star(t, u, 1)));
  } else if (suite == "identity") {
    for (const std::string& w : all_words(4)) {
      guarded("id[" + w + "]", [&] {
        const TsElement v = evaluate("id[" + w + "]", table, d);
        add(report, "id[" + w + "]", v == identity(word_length(w), d), format_element(v));
      });
    }
  } else if (suite == "lk") {
    for (const std::string& text : expression_corpus()) {
      guarded(text, [&] {
        ExprPtr e = parse_expr(text);
        const StrutMatrix fast = lk_only(*e, table);
        const TsElement full = evaluate(*e, table, d);
        add(report, text, fast == full.w, format_matrix(fast) + " vs " + format_matrix(full.w));
      });
    }
  } else if (suite == "morita") {
    if (d < 2) throw DomainError("the morita suite needs i-deg 2");
    Rng rng(options.seed);
    for (int i = 0; i < options.trials; ++i) {
      const int g = 1 + i % 3;
      const CylinderValue m = random_cylinder(rng, g, 2);
      const CylinderValue n = random_cylinder(rng, g, 2);
      const MoritaResult r = morita_check(m, n, table);
      add(report, "trial " + std::to_string(i) + " (genus " + std::to_string(g) + ")", r.equal,
          "lhs " + to_string(r.lhs) + ", rhs " + to_string(r.rhs));
    }
  } else if (suite == "cylinder") {
    Rng rng(options.seed);
    for (int i = 0; i < options.trials; ++i) {
      const int g = 1 + i % 3;
      const CylinderValue a = random_cylinder(rng, g, std::min(d, 3));
      const CylinderValue b = random_cylinder(rng, g, std::min(d, 3));
      const TsElement full = compose(to_element(a), to_element(b));
      const CylinderValue fast = cyl_compose(a, b);
      add(report, "trial " + std::to_string(i) + " (genus " + std::to_string(g) + ")",
          is_cylinder(full) && full.y == fast.y && tau1(fast) == tau1(a) + tau1(b), format_series(full.y - fast.y));
    }
  } else if (suite == "casson") {
    if (d < 2) throw DomainError("the casson suite needs i-deg 2");
    const std::map<std::string, Rational> expected_abs = {
        {"eps o eta", 0},
        {"Y o (v+ x v+ x v+)", 1},
        {"(Y o (v+ x v+ x v+)) x (Y o (v+ x v+ x v+))", 2},
        {"(Y o (v- x v- x v-)) x (Y o (v- x v- x v-))", 2},
    };
    for (const auto& [text, value] : expected_abs) {
      guarded(text, [&] {
        const Rational lambda = casson_lambda(evaluate(text, table, 2));
        add(report, "|lambda(" + text + ")| = " + to_string(value), abs(lambda) == value, to_string(lambda));
      });
    }
  } else {
    throw DomainError("unknown check suite '" + suite + "'");
  }
  return report;
}

}  // namespace lmo
