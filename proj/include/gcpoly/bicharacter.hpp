#pragma once

#include <string>
#include <vector>

#include "gcpoly/cyclo.hpp"
#include "gcpoly/group.hpp"

namespace gcpoly {

// A pairing beta: H x H -> roots of unity, stored as a full value table.
// The constructor stores whatever table it is given; validate_axioms says
// whether it is multiplicative in each slot, skew (beta(h,k)beta(k,h) = 1)
// and trivial against the identity. Keeping construction permissive lets
// deliberately corrupted tables serve as negative controls.
class Bicharacter {
 public:
  Bicharacter(GroupPtr H, std::vector<std::vector<CycloScalar>> table);

  static Bicharacter trivial(GroupPtr H);
  // beta(a,b) = (-1)^{ab} on Z_2, the commutation rule of the Grassmann
  // algebra under its generator-parity grading.
  static Bicharacter grassmann_sign(GroupPtr z2);
  // beta((a,b),(c,d)) = zeta_m^{ad-bc} on Z_m x Z_m.
  static Bicharacter pauli(int m, GroupPtr zm_zm);

  const GroupPtr& group() const { return group_; }
  const CycloScalar& value(int a, int b) const { return table_[a][b]; }

  bool validate_axioms(std::string* why = nullptr) const;

 private:
  GroupPtr group_;
  std::vector<std::vector<CycloScalar>> table_;
};

}  // namespace gcpoly
