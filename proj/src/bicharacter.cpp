#include "gcpoly/bicharacter.hpp"

#include "gcpoly/error.hpp"

namespace gcpoly {

Bicharacter::Bicharacter(GroupPtr H, std::vector<std::vector<CycloScalar>> table)
    : group_(std::move(H)), table_(std::move(table)) {
  size_t n = static_cast<size_t>(group_->order());
  if (table_.size() != n)
    raise(ErrorCode::InvalidInput, "bicharacter table has wrong size");
  for (const auto& row : table_)
    if (row.size() != n)
      raise(ErrorCode::InvalidInput, "bicharacter table has wrong size");
}

Bicharacter Bicharacter::trivial(GroupPtr H) {
  size_t n = static_cast<size_t>(H->order());
  std::vector<std::vector<CycloScalar>> t(n, std::vector<CycloScalar>(n, CycloScalar(1)));
  return Bicharacter(std::move(H), std::move(t));
}

Bicharacter Bicharacter::grassmann_sign(GroupPtr z2) {
  if (z2->order() != 2)
    raise(ErrorCode::InvalidInput, "grassmann sign pairing needs a group of order 2");
  int e = z2->identity();
  int u = 1 - e;
  std::vector<std::vector<CycloScalar>> t(2, std::vector<CycloScalar>(2, CycloScalar(1)));
  t[u][u] = CycloScalar(-1);
  return Bicharacter(std::move(z2), std::move(t));
}

Bicharacter Bicharacter::pauli(int m, GroupPtr zm_zm) {
  if (m < 1) raise(ErrorCode::InvalidInput, "pauli parameter must be >= 1");
  const auto& orders = zm_zm->cyclic_orders();
  if (orders != std::vector<int>{m, m})
    raise(ErrorCode::InvalidInput, "pauli pairing needs Z_m x Z_m built by cyclic_product");
  int n = zm_zm->order();
  std::vector<std::vector<CycloScalar>> t(n, std::vector<CycloScalar>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int a = x / m, b = x % m, c = y / m, d = y % m;
      t[x][y] = CycloScalar::root_of_unity(m, a * d - b * c);
    }
  return Bicharacter(std::move(zm_zm), std::move(t));
}

bool Bicharacter::validate_axioms(std::string* why) const {
  int n = group_->order();
  int e = group_->identity();
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  for (int a = 0; a < n; ++a) {
    if (!value(e, a).is_one() || !value(a, e).is_one())
      return fail("identity row/column not 1 at " + group_->name(a));
    for (int b = 0; b < n; ++b) {
      if (!(value(a, b) * value(b, a)).is_one())
        return fail("not skew at (" + group_->name(a) + "," + group_->name(b) + ")");
      for (int c = 0; c < n; ++c) {
        if (value(group_->op(a, b), c) != value(a, c) * value(b, c))
          return fail("not multiplicative in the first slot");
        if (value(a, group_->op(b, c)) != value(a, b) * value(a, c))
          return fail("not multiplicative in the second slot");
      }
    }
  }
  return true;
}

}  // namespace gcpoly
