#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lmo/checks.hpp"
#include "lmo/coblang.hpp"
#include "lmo/cylinders.hpp"
#include "lmo/error.hpp"
#include "lmo/generators.hpp"
#include "lmo/notation.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kType = 2;
constexpr int kFailure = 3;

struct Config {
  int max_ideg = 2;
  std::string table_path;
  std::uint64_t seed = 1;
  int trials = 50;
  std::string format = "text";
};

lmo::GeneratorTable load(const Config& cfg) {
  if (cfg.table_path.empty()) return lmo::builtin_degree2();
  std::ifstream in(cfg.table_path);
  if (!in) throw lmo::DomainError("cannot read table '" + cfg.table_path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  lmo::GeneratorTable t = lmo::load_table(buf.str());
  lmo::validate_table(t);
  return t;
}

void caret(const std::string& text, std::size_t pos) {
  std::cerr << "  " << text << "\n  " << std::string(std::min(pos, text.size()), ' ') << "^\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact LMO functor values of Lagrangian cobordism expressions"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  app.add_option("-d,--max-ideg", cfg.max_ideg, "Truncation i-deg")->check(CLI::NonNegativeNumber);
  app.add_option("--table", cfg.table_path, "Generator table file (default: built-in degree-2 table)");
  app.add_option("--seed", cfg.seed, "Seed for randomized checks");
  app.add_option("--trials", cfg.trials, "Trials for randomized checks")->check(CLI::PositiveNumber);
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "machine"}));

  std::string expr;
  std::string suite;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate an expression");
  eval_cmd->add_option("expr", expr)->required();
  auto* lk_cmd = app.add_subcommand("lk", "Linking matrix of an expression");
  lk_cmd->add_option("expr", expr)->required();
  auto* casson_cmd = app.add_subcommand("casson", "Casson invariant of an expression 0 -> 0");
  casson_cmd->add_option("expr", expr)->required();
  auto* check_cmd = app.add_subcommand("check", "Run a check suite");
  check_cmd->add_option("suite", suite)->required()->check(CLI::IsMember(lmo::check_suites()));
  auto* table_cmd = app.add_subcommand("table", "Print the generator table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  const bool machine = cfg.format == "machine";
  try {
    const lmo::GeneratorTable table = load(cfg);
    if (cfg.max_ideg > table.max_ideg) {
      std::cerr << "error: --max-ideg " << cfg.max_ideg << " exceeds the table's " << table.max_ideg << "\n";
      return kUsage;
    }
    if (table_cmd->parsed()) {
      std::cout << lmo::save_table(table);
      return kOk;
    }
    if (check_cmd->parsed()) {
      lmo::CheckOptions opts{cfg.seed, cfg.trials, cfg.max_ideg};
      const lmo::CheckReport report = lmo::run_check(suite, table, opts);
      if (machine) {
        nlohmann::json j{{"suite", suite}, {"ok", report.ok()}, {"items", nlohmann::json::array()}};
        for (const auto& item : report.items)
          j["items"].push_back({{"name", item.name}, {"ok", item.ok}, {"detail", item.detail}});
        std::cout << j.dump(2) << "\n";
      } else {
        for (const auto& item : report.items) {
          std::cout << (item.ok ? "PASS " : "FAIL ") << item.name;
          if (!item.ok && !item.detail.empty()) std::cout << ": " << item.detail;
          std::cout << "\n";
        }
        int passed = 0;
        for (const auto& item : report.items) passed += item.ok;
        std::cout << suite << ": " << passed << "/" << report.items.size() << " passed\n";
      }
      return report.ok() ? kOk : kFailure;
    }

    lmo::ExprPtr e;
    try {
      e = lmo::parse_expr(expr);
      lmo::typecheck(*e);
    } catch (const lmo::ParseError& err) {
      std::cerr << "parse error: " << err.what() << "\n";
      caret(expr, err.position());
      return kUsage;
    } catch (const lmo::TypeError& err) {
      std::cerr << "type error: " << err.what() << "\n";
      return kType;
    }
    if (lk_cmd->parsed()) {
      const lmo::StrutMatrix m = lmo::lk_only(*e, table);
      if (machine) {
        std::cout << nlohmann::json{{"top", e->top}, {"bottom", e->bottom}, {"W", lmo::format_matrix(m)}}.dump(2)
                  << "\n";
      } else {
        std::cout << lmo::format_matrix(m) << "\n";
      }
      return kOk;
    }
    const lmo::TsElement v = lmo::evaluate(*e, table, cfg.max_ideg);
    if (casson_cmd->parsed()) {
      const lmo::Rational lambda = lmo::casson_lambda(v);
      if (machine) {
        std::cout << nlohmann::json{{"lambda", lmo::to_string(lambda)}}.dump(2) << "\n";
      } else {
        std::cout << lmo::to_string(lambda) << "\n";
      }
      return kOk;
    }
    if (machine) {
      std::cout << nlohmann::json{{"top", e->top},
                                  {"bottom", e->bottom},
                                  {"source", v.g},
                                  {"target", v.f},
                                  {"max_ideg", v.max_ideg()},
                                  {"W", lmo::format_matrix(v.w)},
                                  {"Y", lmo::format_series(v.y)}}
                       .dump(2)
                << "\n";
    } else {
      std::cout << lmo::format_element(v) << "\n";
    }
    return kOk;
  } catch (const lmo::ParseError& err) {
    std::cerr << "parse error: " << err.what() << "\n";
    return kUsage;
  } catch (const lmo::TypeError& err) {
    std::cerr << "type error: " << err.what() << "\n";
    return kType;
  } catch (const lmo::Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kFailure;
  }
}
