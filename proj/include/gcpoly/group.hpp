#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gcpoly/cyclo.hpp"
#include "gcpoly/error.hpp"

namespace gcpoly {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

// A finite group given by its multiplication table. Elements are indices
// 0..order-1 with printable names. Order is capped at 64; associativity and
// the Latin square property are checked at construction.
class FiniteGroup {
 public:
  // Direct product Z_{orders[0]} x ... x Z_{orders[k-1]}.
  // One factor: names e, g, g2, ... (or 0, 1, ... with additive_names).
  // Several factors: tuple names "(a,b)".
  static GroupPtr cyclic_product(const std::vector<int>& orders,
                                 bool additive_names = false);
  static GroupPtr trivial();
  static GroupPtr from_table(std::vector<std::string> names,
                             std::vector<std::vector<int>> table);

  int order() const { return static_cast<int>(table_.size()); }
  int identity() const { return identity_; }
  int op(int a, int b) const { return table_[a][b]; }
  int inv(int a) const { return inverse_[a]; }
  const std::string& name(int a) const { return names_[a]; }

  // Resolves an element name (or an accepted alias such as a numeric index).
  std::optional<int> find(std::string_view s) const;

  int element_order(int a) const;
  bool is_abelian() const;

  struct Quotient {
    GroupPtr group;
    std::vector<int> projection;  // element of *this -> element of group
  };
  // Quotient by the commutator subgroup.
  Quotient abelianization() const;

  // Invariant factors d_1 | d_2 | ... | d_k of the abelianization.
  std::vector<int> invariant_factors() const;

  // Nonempty only for groups built by cyclic_product.
  const std::vector<int>& cyclic_orders() const { return cyclic_orders_; }

  // Same multiplication table (names are ignored).
  bool same_structure(const FiniteGroup& o) const {
    return table_ == o.table_;
  }

 private:
  FiniteGroup() = default;
  void finish_(bool check_assoc);

  std::vector<std::string> names_;
  std::vector<std::pair<std::string, int>> lookup_;  // names plus aliases
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
  std::vector<int> cyclic_orders_;
  int identity_ = 0;
};

class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);  // 0-based bijection
  static Permutation identity(int n);

  int size() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[i]; }
  const std::vector<int>& images() const { return img_; }

  // Function composition: (p*q)(i) = p(q(i)).
  Permutation operator*(const Permutation& q) const;
  Permutation inverse() const;
  bool is_identity() const;

  auto operator<=>(const Permutation&) const = default;

  // Cycle notation with 1-based points, "id" for the identity.
  std::string str() const;

 private:
  std::vector<int> img_;
};

// Closure of the generators under composition (always contains the
// identity). Result is sorted.
std::vector<Permutation> subgroup_closure(std::vector<Permutation> gens, int n);

// Orbits of {0..n-1} under the given permutations; each orbit is sorted and
// orbits are listed by their smallest point.
std::vector<std::vector<int>> orbit_partition(
    const std::vector<Permutation>& perms, int n);

struct PermutationGroup {
  GroupPtr group;                     // element names are cycle strings
  std::vector<Permutation> elements;  // aligned with group indices
};

// Wraps a closed set of permutations as an abstract group.
PermutationGroup permutation_group(std::vector<Permutation> elements);

// A homomorphism G -> mu_r into the r-th roots of unity, stored as the
// exponent of zeta_r at each element.
struct Character {
  GroupPtr domain;
  int torsion = 1;
  std::vector<long> exponents;

  CycloScalar value(int g) const {
    return CycloScalar::root_of_unity(torsion, exponents[g]);
  }
  bool is_trivial() const;
  std::string str() const;
};

// All homomorphisms G -> mu_r, trivial one first, deterministic order.
std::vector<Character> homs_to_roots(const GroupPtr& G, int r);

}  // namespace gcpoly
