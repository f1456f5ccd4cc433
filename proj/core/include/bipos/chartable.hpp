#pragma once

#include <string>
#include <vector>

#include "bipos/cyclo.hpp"
#include "bipos/group.hpp"

namespace bipos {

// Irreducible characters of a small group, stored as full value vectors
// (one entry per element) so that no class bookkeeping leaks out.
struct CharacterTable {
  std::vector<std::vector<Cyclo>> values;  // [character][element]
  std::vector<std::string> labels;         // catalog names; contexts may relabel
  std::string recognized_as;               // e.g. "S4", "D8", "C4xC2", "S3xC2"

  int size() const { return static_cast<int>(values.size()); }
  Rational degree(int chi) const { return values[chi][0].to_rational(); }
};

// Recognise the group as an abelian group, S2..S5, D8 or S3xC2 and return its
// exact character table. Throws std::runtime_error naming order and exponent
// when no catalog entry matches.
CharacterTable character_table(const Group& g);

// Both orthogonality relations, exactly.
bool check_orthogonality(const Group& g, const CharacterTable& t);

// Murnaghan-Nakayama: chi^lambda on a permutation of the given cycle type.
std::int64_t sn_character(const std::vector<int>& partition, const std::vector<int>& cycle_type);
std::vector<std::vector<int>> partitions(int n);

}  // namespace bipos
