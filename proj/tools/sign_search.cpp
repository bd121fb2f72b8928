// Enumerates orientation choices for the pictures of the degree-2 table and prints the
// choices under which every relation of the Hopf suite holds.
#include <array>
#include <iostream>

#include "lmo/coblang.hpp"
#include "lmo/generators.hpp"

int main() {
  using lmo::PictureSigns;
  std::array<int PictureSigns::*, 11> free_fields = {
      &PictureSigns::y_delta,      &PictureSigns::y_top,         &PictureSigns::h,
      &PictureSigns::h_mu_right,   &PictureSigns::h_mu_left,     &PictureSigns::h_delta_left,
      &PictureSigns::h_delta_right, &PictureSigns::h_cup,        &PictureSigns::h_cap,
      &PictureSigns::bubble,       &PictureSigns::bubble_bot};
  const char* names[] = {"y_delta", "y_top", "h", "h_mu_right", "h_mu_left", "h_delta_left",
                         "h_delta_right", "h_cup", "h_cap", "bubble", "bubble_bot"};
  const auto& relations = lmo::hopf_relations();
  std::vector<int> failures(relations.size(), 0);
  int solutions = 0;
  for (unsigned mask = 0; mask < (1u << free_fields.size()); ++mask) {
    PictureSigns s;  // y_mu stays +1: mirroring every vertex fixes it
    for (std::size_t i = 0; i < free_fields.size(); ++i) s.*free_fields[i] = (mask >> i & 1) ? -1 : 1;
    const lmo::GeneratorTable table = lmo::load_table(lmo::degree2_document(s));
    bool ok = true;
    for (std::size_t r = 0; r < relations.size() && ok; ++r) {
      if (!lmo::check_relations(table, {relations[r]})[0].holds) {
        ++failures[r];
        ok = false;
      }
    }
    if (!ok) continue;
    ++solutions;
    for (std::size_t i = 0; i < free_fields.size(); ++i) std::cout << names[i] << "=" << s.*free_fields[i] << " ";
    std::cout << "\n";
  }
  std::cout << solutions << " solutions\n";
  for (std::size_t r = 0; r < relations.size(); ++r)
    std::cout << "first failure at '" << relations[r].name << "': " << failures[r] << "\n";
}
