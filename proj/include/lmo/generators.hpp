#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "lmo/series.hpp"
#include "lmo/tscat.hpp"

namespace lmo {

struct GeneratorEntry {
  int source = 0;
  int target = 0;
  TsElement value;
};

class GeneratorTable {
 public:
  int max_ideg = 0;
  std::string associator = "even";
  std::map<std::string, GeneratorEntry> entries;

  bool has(const std::string& name) const { return entries.count(name) != 0; }
  /// Copy of the stored value; throws DomainError for unknown names.
  TsElement value_of(const std::string& name) const;
  /// Throws InvariantError on bad arity, a (+,+) entry, struts or a non-group-like Y-part.
  void check_invariants() const;
  bool operator==(const GeneratorTable& other) const;
};

/// Expected (source, target) arity of a generator name, or (-1,-1) if the name is not a
/// generator. P[u,v,w] and Pinv[u,v,w] have the total length of their words.
std::pair<int, int> generator_arity(std::string_view name);

/// Orientation choices for the pictures in the degree-2 table. Each field multiplies
/// the diagram the corresponding picture is read as.
struct PictureSigns {
  int y_mu = 1;        // Y(1-,1+,2+) in mu
  int y_delta = 1;     // Y(1-,2-,1+) in delta
  int y_top = 1;       // Y(1+,2+,3+) in Y
  int h = 1;           // the plain H picture in S, psi, delta and T1
  int h_mu_right = 1;  // H(1-,1+|1+,2+) in mu
  int h_mu_left = 1;   // H(1-,2+|1+,2+) in mu
  int h_delta_left = 1;
  int h_delta_right = 1;
  int h_cup = 1;  // the three H terms of Y
  int h_cap = 1;  // H term of c
  int bubble = 1;      // bubble(1-,1+) in S and T1
  int bubble_bot = 1;  // bubble(1-,1-) in v, bubble(1-,2-) in c
  int bubble_top = 1;  // bubble(1+,1+) in T1
};

/// The signs used by builtin_degree2().
PictureSigns calibrated_signs();

/// The degree-2 table as a table document.
std::string degree2_document(const PictureSigns& signs = calibrated_signs());
GeneratorTable builtin_degree2();

/// Y-parts at i-deg 2 of the inverse of the identity's normalization and of its
/// ∘-inverse T1 (both carry the strut 1-1+).
Series chi_inv_z_id1_y(const PictureSigns& signs = calibrated_signs());
Series t1_y(const PictureSigns& signs = calibrated_signs());

/// Table document: header lines "maxideg=N", "associator=...", then per entry
/// "gen NAME : SRC -> TGT", "W { a|b = q; ... }", "logY = SERIES". '#' starts a comment.
GeneratorTable load_table(std::string_view document);
std::string save_table(const GeneratorTable& table);

struct RelationResult {
  std::string name;
  std::string lhs;
  std::string rhs;
  bool holds = false;
  std::string detail;
};

struct Relation {
  std::string name;
  std::string lhs;
  std::string rhs;
};

/// Evaluates both sides of each relation; max_ideg < 0 means the table's.
std::vector<RelationResult> check_relations(const GeneratorTable& table, const std::vector<Relation>& relations,
                                            int max_ideg = -1);

/// Spot checks run by validate_table.
const std::vector<Relation>& spot_check_relations();
/// Unit, counit, (co)associativity, antipode, braiding, ribbon and Y relations.
const std::vector<Relation>& hopf_relations();
/// Invariant checks plus the spot-check relations. Throws InvariantError naming the
/// first failing relation.
void validate_table(const GeneratorTable& table);

}  // namespace lmo
