#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lmo/generators.hpp"

namespace lmo {

struct CheckItem {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct CheckReport {
  std::string suite;
  std::vector<CheckItem> items;
  bool ok() const;
};

struct CheckOptions {
  std::uint64_t seed = 1;
  int trials = 50;
  int max_ideg = -1;  // the table's
};

/// hopf, spot, invert-t1, identity, lk, morita, cylinder, casson.
const std::vector<std::string>& check_suites();
/// Throws DomainError for unknown suites.
CheckReport run_check(const std::string& suite, const GeneratorTable& table, const CheckOptions& options = {});

/// Well-typed expressions used for the lk and identity checks.
const std::vector<std::string>& expression_corpus();
/// Every word with 0..max_length letters.
std::vector<std::string> all_words(int max_length);

}  // namespace lmo
