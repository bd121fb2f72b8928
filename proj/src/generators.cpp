#include "lmo/generators.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "lmo/coblang.hpp"
#include "lmo/error.hpp"
#include "lmo/notation.hpp"

namespace lmo {

namespace {

std::string term(int sign, const std::string& q, const std::string& diagram) {
  const bool negative = (q[0] == '-') != (sign < 0);
  const std::string magnitude = q[0] == '-' ? q.substr(1) : q;
  return std::string(negative ? " - " : " + ") + magnitude + "*" + diagram;
}

// Drops the leading " + " / turns " - " into "-".
std::string sum(const std::string& s) {
  if (s.rfind(" + ", 0) == 0) return s.substr(3);
  if (s.rfind(" - ", 0) == 0) return "-" + s.substr(3);
  return s;
}

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

}  // namespace

std::pair<int, int> generator_arity(std::string_view name) {
  if (name == "P" || name == "Pinv") return {3, 3};
  if (name.rfind("P[", 0) == 0 || name.rfind("Pinv[", 0) == 0) {
    const std::size_t open = name.find('[');
    if (name.back() != ']') return {-1, -1};
    std::string_view body = name.substr(open + 1, name.size() - open - 2);
    int n = 0;
    int commas = 0;
    for (char ch : body) {
      n += ch == '.';
      commas += ch == ',';
    }
    if (commas != 2) return {-1, -1};
    return {n, n};
  }
  try {
    auto [top, bottom] = generator_words(name);
    return {word_length(top), word_length(bottom)};
  } catch (const DomainError&) {
    return {-1, -1};
  }
}

TsElement GeneratorTable::value_of(const std::string& name) const {
  auto it = entries.find(name);
  if (it == entries.end()) throw DomainError("unknown generator '" + name + "'");
  return it->second.value;
}

void GeneratorTable::check_invariants() const {
  for (const auto& [name, entry] : entries) {
    auto [src, tgt] = generator_arity(name);
    if (src < 0) throw InvariantError("'" + name + "' is not a generator");
    if (src != entry.source || tgt != entry.target || entry.value.g != src || entry.value.f != tgt)
      throw InvariantError("'" + name + "' should have arity " + std::to_string(src) + " -> " +
                           std::to_string(tgt));
    if (entry.value.max_ideg() != max_ideg) throw InvariantError("'" + name + "' has the wrong truncation");
    try {
      entry.value.validate();
    } catch (const InvariantError& e) {
      throw InvariantError("'" + name + "': " + e.what());
    }
    if (!is_group_like(entry.value.y)) throw InvariantError("'" + name + "' is not group-like");
  }
}

bool GeneratorTable::operator==(const GeneratorTable& other) const {
  return max_ideg == other.max_ideg && associator == other.associator && entries.size() == other.entries.size() &&
         std::equal(entries.begin(), entries.end(), other.entries.begin(), [](const auto& a, const auto& b) {
           return a.first == b.first && a.second.source == b.second.source && a.second.target == b.second.target &&
                  a.second.value == b.second.value;
         });
}

// Fixed by requiring hopf_relations() (tools/sign_search). y_mu is a convention (mirroring
// every vertex flips all odd-degree terms); y_top and bubble_top are not constrained by
// any relation and keep the planar reading.
PictureSigns calibrated_signs() {
  PictureSigns s;
  s.y_delta = -1;
  s.h_mu_left = -1;
  s.h_delta_right = -1;
  s.h_cup = -1;
  s.h_cap = -1;
  return s;
}

std::string degree2_document(const PictureSigns& s) {
  std::ostringstream out;
  auto entry = [&](const std::string& name, int src, int tgt, const std::string& w, const std::string& log_y) {
    out << "gen " << name << " : " << src << " -> " << tgt << "\n";
    out << "W { " << w << (w.empty() ? "" : " ") << "}\n";
    out << "logY = " << (log_y.empty() ? "0" : sum(log_y)) << "\n";
  };
  out << "maxideg=2\nassociator=even\n";
  entry("eta", 0, 1, "", "");
  entry("eps", 1, 0, "", "");
  entry("P", 3, 3, "1-|1+ = 1; 2-|2+ = 1; 3-|3+ = 1", "");
  entry("Pinv", 3, 3, "1-|1+ = 1; 2-|2+ = 1; 3-|3+ = 1", "");
  const std::string v_log = term(s.bubble_bot, "1/48", "bubble(1-,1-)");
  entry("v+", 0, 1, "1-|1- = -1", v_log);
  entry("v-", 0, 1, "1-|1- = 1", v_log);
  for (int e : {1, -1}) {
    entry(e > 0 ? "s" : "s_inv", 1, 1, "1-|1+ = -1",
          term(-e * s.bubble, "1/4", "bubble(1-,1+)") + term(-e * s.h, "1/4", "H(1-,1+|1+,1-)"));
    entry(e > 0 ? "psi" : "psi_inv", 2, 2, "2-|1+ = 1; 1-|2+ = 1", term(-e * s.h, "1/2", "H(2-,1+|2+,1-)"));
  }
  entry("mu", 2, 1, "1-|1+ = 1; 1-|2+ = 1",
        term(s.y_mu, "-1/2", "Y(1-,1+,2+)") + term(s.h_mu_right, "1/12", "H(1-,1+|1+,2+)") +
            term(s.h_mu_left, "1/12", "H(1-,2+|1+,2+)"));
  entry("delta", 1, 2, "1-|1+ = 1; 2-|1+ = 1",
        term(s.y_delta, "1/2", "Y(1-,2-,1+)") + term(s.h_delta_left, "1/12", "H(1-,2-|2-,1+)") +
            term(s.h_delta_right, "1/12", "H(1-,2-|1-,1+)") + term(s.h, "-1/4", "H(1-,1+|1+,2-)"));
  entry("Y", 3, 0, "",
        term(s.y_top, "-1", "Y(1+,2+,3+)") + term(s.h_cup, "1/2", "H(1+,2+|1+,3+)") +
            term(s.h_cup, "1/2", "H(2+,3+|2+,1+)") + term(s.h_cup, "1/2", "H(3+,1+|3+,2+)"));
  entry("c", 0, 2, "1-|2- = -1",
        term(s.bubble_bot, "1/8", "bubble(1-,2-)") + term(s.h_cap, "1/8", "H(1-,2-|1-,2-)"));
  return out.str();
}

GeneratorTable builtin_degree2() {
  static const GeneratorTable table = load_table(degree2_document());
  return table;
}

Series chi_inv_z_id1_y(const PictureSigns& s) {
  return parse_series("1*∅" + term(s.bubble, "1/8", "bubble(1-,1+)") + term(s.bubble_top, "1/48", "bubble(1+,1+)") +
                          term(s.h, "-1/8", "H(1-,1+|1+,1-)"),
                      2);
}

Series t1_y(const PictureSigns& s) {
  return parse_series("1*∅" + term(s.bubble, "-1/8", "bubble(1-,1+)") +
                          term(s.bubble_top, "-1/48", "bubble(1+,1+)") + term(s.h, "1/8", "H(1-,1+|1+,1-)"),
                      2);
}

GeneratorTable load_table(std::string_view document) {
  GeneratorTable table;
  bool have_degree = false;
  std::string current;
  int stage = 0;  // 0: expect gen, 1: expect W, 2: expect logY
  std::size_t line_start = 0;
  while (line_start <= document.size()) {
    std::size_t line_end = document.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = document.size();
    std::string_view raw = document.substr(line_start, line_end - line_start);
    const std::size_t offset = line_start;
    line_start = line_end + 1;
    if (std::size_t hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    const std::string line = trim(raw);
    if (line.empty()) {
      if (line_end == document.size()) break;
      continue;
    }
    auto fail = [&](const std::string& what) -> void { throw ParseError(what, offset); };
    if (line.rfind("maxideg=", 0) == 0) {
      try {
        table.max_ideg = std::stoi(line.substr(8));
      } catch (const std::exception&) {
        fail("bad maxideg");
      }
      if (table.max_ideg < 0) fail("bad maxideg");
      have_degree = true;
    } else if (line.rfind("associator=", 0) == 0) {
      table.associator = trim(line.substr(11));
    } else if (line.rfind("gen ", 0) == 0) {
      if (stage != 0) fail("incomplete entry '" + current + "'");
      if (!have_degree) fail("maxideg must come first");
      const std::size_t colon = line.find(':');
      const std::size_t arrow = line.find("->");
      if (colon == std::string::npos || arrow == std::string::npos || arrow < colon) fail("expected 'gen NAME : SRC -> TGT'");
      current = trim(line.substr(4, colon - 4));
      if (current.empty()) fail("missing generator name");
      if (table.has(current)) fail("duplicate entry '" + current + "'");
      GeneratorEntry e;
      try {
        e.source = std::stoi(line.substr(colon + 1, arrow - colon - 1));
        e.target = std::stoi(line.substr(arrow + 2));
      } catch (const std::exception&) {
        fail("bad arity");
      }
      e.value = TsElement{e.source, e.target, {}, Series::constant(table.max_ideg)};
      table.entries[current] = e;
      stage = 1;
    } else if (line.rfind("W", 0) == 0 && stage == 1) {
      const std::size_t open = line.find('{');
      const std::size_t close = line.rfind('}');
      if (open == std::string::npos || close == std::string::npos || close < open) fail("expected 'W { ... }'");
      try {
        table.entries[current].value.w = parse_matrix("[" + line.substr(open + 1, close - open - 1) + "]");
      } catch (const ParseError& e) {
        throw ParseError(e.what(), offset + open);
      }
      stage = 2;
    } else if (line.rfind("logY", 0) == 0 && stage == 2) {
      const std::size_t eq = line.find('=');
      if (eq == std::string::npos) fail("expected 'logY = ...'");
      Series log_y(table.max_ideg);
      try {
        log_y = parse_series(line.substr(eq + 1), table.max_ideg);
      } catch (const ParseError& e) {
        throw ParseError(std::string("in logY of '") + current + "': " + e.what(), offset + eq + 1);
      }
      if (log_y.constant_term() != 0) fail("logY has a constant term");
      if (log_y != connected_part(log_y)) fail("logY is not connected");
      table.entries[current].value.y = exp_union(log_y);
      stage = 0;
    } else {
      fail("unexpected line '" + line + "'");
    }
    if (line_end == document.size()) break;
  }
  if (stage != 0) throw ParseError("incomplete entry '" + current + "'", document.size());
  if (!have_degree) throw ParseError("missing maxideg", 0);
  table.check_invariants();
  return table;
}

std::string save_table(const GeneratorTable& table) {
  std::ostringstream out;
  out << "maxideg=" << table.max_ideg << "\nassociator=" << table.associator << "\n";
  for (const auto& [name, entry] : table.entries) {
    const std::string w = format_matrix(entry.value.w);
    const std::string body = w.substr(1, w.size() - 2);
    out << "gen " << name << " : " << entry.source << " -> " << entry.target << "\n";
    out << "W { " << body << (body.empty() ? "" : " ") << "}\n";
    out << "logY = " << format_series(log_union(entry.value.y)) << "\n";
  }
  return out.str();
}

std::vector<RelationResult> check_relations(const GeneratorTable& table, const std::vector<Relation>& relations,
                                            int max_ideg) {
  std::vector<RelationResult> out;
  for (const Relation& r : relations) {
    RelationResult res{r.name, r.lhs, r.rhs, false, ""};
    try {
      const TsElement a = evaluate(r.lhs, table, max_ideg);
      const TsElement b = evaluate(r.rhs, table, max_ideg);
      res.holds = a == b;
      if (!res.holds) {
        if (a.g != b.g || a.f != b.f) {
          res.detail = "arities differ";
        } else if (!(a.w == b.w)) {
          res.detail = "linking matrices differ: " + format_matrix(a.w) + " vs " + format_matrix(b.w);
        } else {
          res.detail = "Y-parts differ by " + format_series(a.y - b.y);
        }
      }
    } catch (const Error& e) {
      res.detail = e.what();
    }
    out.push_back(std::move(res));
  }
  return out;
}

const std::vector<Relation>& spot_check_relations() {
  static const std::vector<Relation> relations = {
      {"Y o (eta x Id_2) = eps x eps", "Y o P[.,.,.] o (eta x id[(..)])", "eps x eps"},
      {"mu o (eta x Id) = Id", "mu o (eta x id[.])", "id[.]"},
      {"psi o psi^-1 = Id_2", "psi o psi_inv", "id[(..)]"},
  };
  return relations;
}

const std::vector<Relation>& hopf_relations() {
  static const std::vector<Relation> relations = {
      {"mu o (eta x Id) = Id", "mu o (eta x id[.])", "id[.]"},
      {"mu o (Id x eta) = Id", "mu o (id[.] x eta)", "id[.]"},
      {"(eps x Id) o delta = Id", "(eps x id[.]) o delta", "id[.]"},
      {"(Id x eps) o delta = Id", "(id[.] x eps) o delta", "id[.]"},
      {"associativity of mu", "mu o (mu x id[.]) o P[.,.,.]", "mu o (id[.] x mu)"},
      {"coassociativity of delta", "P[.,.,.] o (id[.] x delta) o delta", "(delta x id[.]) o delta"},
      {"eps o mu = eps x eps", "eps o mu", "eps x eps"},
      {"delta o eta = eta x eta", "delta o eta", "eta x eta"},
      {"antipode, left", "mu o (s x id[.]) o delta", "eta o eps"},
      {"antipode, right", "mu o (id[.] x s) o delta", "eta o eps"},
      {"s o s^-1 = Id", "s o s_inv", "id[.]"},
      {"s^-1 o s = Id", "s_inv o s", "id[.]"},
      {"psi o psi^-1 = Id_2", "psi o psi_inv", "id[(..)]"},
      {"psi^-1 o psi = Id_2", "psi_inv o psi", "id[(..)]"},
      {"mu o (v+ x v-) = eta", "mu o (v+ x v-)", "eta"},
      {"delta o mu compatibility",
       "(mu x mu) o Pinv[(..),.,.] o (P[.,.,.] x id[.]) o (id[.] x psi x id[.]) o (Pinv[.,.,.] x id[.]) o "
       "P[(..),.,.] o (delta x delta)",
       "delta o mu"},
      {"Y o (eta x Id_2) = eps x eps", "Y o P[.,.,.] o (eta x id[(..)])", "eps x eps"},
      {"Y o (Id x eta x Id) = eps x eps", "Y o (id[.] x eta x id[.])", "eps x eps"},
      {"Y o (Id_2 x eta) = eps x eps", "Y o (id[(..)] x eta)", "eps x eps"},
      {"Y o (Id x c) = eps", "Y o P[.,.,.] o (id[.] x c)", "eps"},
      {"Y o (c x Id) = eps", "Y o (c x id[.])", "eps"},
      {"Y o (Id x psi^-1) o (c x Id) = eps", "Y o P[.,.,.] o (id[.] x psi_inv) o Pinv[.,.,.] o (c x id[.])", "eps"},
      {"c = (mu x mu) o (Id x delta x Id) o (v- x v+ x v-)",
       "(mu x mu) o Pinv[(..),.,.] o (P[.,.,.] x id[.]) o (id[.] x delta x id[.]) o (v- x v+ x v-)", "c"},
  };
  return relations;
}

void validate_table(const GeneratorTable& table) {
  table.check_invariants();
  for (const RelationResult& r : check_relations(table, spot_check_relations()))
    if (!r.holds) throw InvariantError("relation fails: " + r.name + " (" + r.detail + ")");
}

}  // namespace lmo
