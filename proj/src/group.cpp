#include "gcpoly/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace gcpoly {

namespace {
constexpr int kMaxOrder = 64;
}

void FiniteGroup::finish_(bool check_assoc) {
  int n = order();
  if (n < 1) raise(ErrorCode::InvalidInput, "group must be nonempty");
  if (n > kMaxOrder) raise(ErrorCode::SizeLimit, "group order above 64");
  if (static_cast<int>(names_.size()) != n)
    raise(ErrorCode::InvalidInput, "group table/name size mismatch");

  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != n)
      raise(ErrorCode::InvalidInput, "group table is not square");
    for (int v : row)
      if (v < 0 || v >= n)
        raise(ErrorCode::InvalidInput, "group table entry out of range");
  }

  // Latin square.
  for (int i = 0; i < n; ++i) {
    std::vector<bool> row(n, false), col(n, false);
    for (int j = 0; j < n; ++j) {
      if (row[table_[i][j]] || col[table_[j][i]])
        raise(ErrorCode::InvalidInput, "group table is not a Latin square");
      row[table_[i][j]] = col[table_[j][i]] = true;
    }
  }

  int id = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      ok = table_[e][a] == a && table_[a][e] == a;
    if (ok) { id = e; break; }
  }
  if (id < 0) raise(ErrorCode::InvalidInput, "group table has no identity");
  identity_ = id;

  inverse_.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (table_[a][b] == identity_) { inverse_[a] = b; break; }
  for (int a = 0; a < n; ++a)
    if (inverse_[a] < 0 || table_[inverse_[a]][a] != identity_)
      raise(ErrorCode::InvalidInput, "group table lacks inverses");

  if (check_assoc) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
            raise(ErrorCode::InvalidInput, "group table is not associative");
  }

  lookup_.clear();
  for (int a = 0; a < n; ++a) lookup_.emplace_back(names_[a], a);
  auto add_alias = [&](const std::string& s, int a) {
    for (const auto& [k, v] : lookup_)
      if (k == s) return;  // first binding wins
    lookup_.emplace_back(s, a);
  };
  for (int a = 0; a < n; ++a) add_alias(std::to_string(a), a);
  add_alias("e", identity_);
}

GroupPtr FiniteGroup::cyclic_product(const std::vector<int>& orders,
                                     bool additive_names) {
  if (orders.empty()) return trivial();
  long total = 1;
  for (int o : orders) {
    if (o < 1) raise(ErrorCode::InvalidInput, "cyclic factor order must be >= 1");
    total *= o;
    if (total > kMaxOrder) raise(ErrorCode::SizeLimit, "group order above 64");
  }
  int n = static_cast<int>(total);
  int k = static_cast<int>(orders.size());

  auto digits = [&](int idx) {
    std::vector<int> d(k);
    for (int f = k - 1; f >= 0; --f) {
      d[f] = idx % orders[f];
      idx /= orders[f];
    }
    return d;
  };
  auto index = [&](const std::vector<int>& d) {
    int idx = 0;
    for (int f = 0; f < k; ++f) idx = idx * orders[f] + d[f];
    return idx;
  };

  FiniteGroup g;
  g.cyclic_orders_ = orders;
  g.names_.resize(n);
  for (int a = 0; a < n; ++a) {
    auto d = digits(a);
    if (k == 1) {
      if (additive_names) {
        g.names_[a] = std::to_string(d[0]);
      } else if (d[0] == 0) {
        g.names_[a] = "e";
      } else if (d[0] == 1) {
        g.names_[a] = "g";
      } else {
        g.names_[a] = "g" + std::to_string(d[0]);
      }
    } else {
      std::string s = "(";
      for (int f = 0; f < k; ++f)
        s += (f ? "," : "") + std::to_string(d[f]);
      g.names_[a] = s + ")";
    }
  }
  g.table_.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto da = digits(a), db = digits(b);
      std::vector<int> dc(k);
      for (int f = 0; f < k; ++f) dc[f] = (da[f] + db[f]) % orders[f];
      g.table_[a][b] = index(dc);
    }
  g.finish_(false);  // componentwise modular addition is associative

  // Extra aliases for the one-factor multiplicative spelling: g^2 etc.
  if (k == 1 && !additive_names) {
    auto* gp = new FiniteGroup(std::move(g));
    for (int a = 2; a < n; ++a)
      gp->lookup_.emplace_back("g^" + std::to_string(a), a);
    return GroupPtr(gp);
  }
  return std::make_shared<FiniteGroup>(std::move(g));
}

GroupPtr FiniteGroup::trivial() {
  FiniteGroup g;
  g.names_ = {"e"};
  g.table_ = {{0}};
  g.finish_(false);
  return std::make_shared<FiniteGroup>(std::move(g));
}

GroupPtr FiniteGroup::from_table(std::vector<std::string> names,
                                 std::vector<std::vector<int>> table) {
  FiniteGroup g;
  g.names_ = std::move(names);
  g.table_ = std::move(table);
  g.finish_(true);
  return std::make_shared<FiniteGroup>(std::move(g));
}

std::optional<int> FiniteGroup::find(std::string_view s) const {
  for (const auto& [k, v] : lookup_)
    if (k == s) return v;
  return std::nullopt;
}

int FiniteGroup::element_order(int a) const {
  int x = a, k = 1;
  while (x != identity_) {
    x = op(x, a);
    ++k;
  }
  return k;
}

bool FiniteGroup::is_abelian() const {
  int n = order();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (table_[a][b] != table_[b][a]) return false;
  return true;
}

FiniteGroup::Quotient FiniteGroup::abelianization() const {
  int n = order();

  // Commutator subgroup: closure of all [a,b] under multiplication.
  std::set<int> sub;
  std::vector<int> queue;
  auto push = [&](int x) {
    if (sub.insert(x).second) queue.push_back(x);
  };
  push(identity_);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      push(op(op(a, b), op(inverse_[a], inverse_[b])));
  for (size_t qi = 0; qi < queue.size(); ++qi)
    for (int s : std::vector<int>(sub.begin(), sub.end())) push(op(queue[qi], s));

  std::vector<int> coset(n, -1);
  std::vector<int> reps;
  for (int a = 0; a < n; ++a) {
    if (coset[a] >= 0) continue;
    int id = static_cast<int>(reps.size());
    reps.push_back(a);
    for (int s : sub) coset[op(a, s)] = id;
  }

  int m = static_cast<int>(reps.size());
  std::vector<std::vector<int>> qtable(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) qtable[i][j] = coset[op(reps[i], reps[j])];
  std::vector<std::string> qnames(m);
  for (int i = 0; i < m; ++i) qnames[i] = names_[reps[i]];

  Quotient q;
  q.group = from_table(std::move(qnames), std::move(qtable));
  q.projection = std::move(coset);
  return q;
}

namespace {

// Minimal abelian group-as-table view used for invariant factor peeling.
struct AbView {
  std::vector<std::vector<int>> table;
  int identity;

  int order() const { return static_cast<int>(table.size()); }
  int element_order(int a) const {
    int x = a, k = 1;
    while (x != identity) {
      x = table[x][a];
      ++k;
    }
    return k;
  }
};

AbView quotient_by_cyclic(const AbView& g, int a) {
  int n = g.order();
  std::vector<char> insub(n, 0);
  int x = g.identity;
  insub[x] = 1;
  do {
    x = g.table[x][a];
    insub[x] = 1;
  } while (x != g.identity);

  std::vector<int> coset(n, -1);
  std::vector<int> reps;
  for (int e = 0; e < n; ++e) {
    if (coset[e] >= 0) continue;
    int id = static_cast<int>(reps.size());
    reps.push_back(e);
    for (int s = 0; s < n; ++s)
      if (insub[s]) coset[g.table[e][s]] = id;
  }
  int m = static_cast<int>(reps.size());
  AbView q;
  q.table.assign(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) q.table[i][j] = coset[g.table[reps[i]][reps[j]]];
  q.identity = coset[g.identity];
  return q;
}

}  // namespace

std::vector<int> FiniteGroup::invariant_factors() const {
  Quotient ab = abelianization();
  AbView cur;
  cur.table = std::vector<std::vector<int>>();
  int m = ab.group->order();
  cur.table.assign(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) cur.table[i][j] = ab.group->op(i, j);
  cur.identity = ab.group->identity();

  // A cyclic subgroup of maximal order splits off as a direct summand, so
  // peeling them produces the invariant factor chain from the top.
  std::vector<int> desc;
  while (cur.order() > 1) {
    int best = -1, best_ord = 0;
    for (int a = 0; a < cur.order(); ++a) {
      int o = cur.element_order(a);
      if (o > best_ord) { best_ord = o; best = a; }
    }
    desc.push_back(best_ord);
    cur = quotient_by_cyclic(cur, best);
  }
  return std::vector<int>(desc.rbegin(), desc.rend());
}

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (int v : img_) {
    if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v])
      raise(ErrorCode::InvalidInput, "permutation images are not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  return Permutation(std::move(img));
}

Permutation Permutation::operator*(const Permutation& q) const {
  if (size() != q.size())
    raise(ErrorCode::InvalidInput, "permutation size mismatch");
  std::vector<int> img(img_.size());
  for (size_t i = 0; i < img_.size(); ++i) img[i] = img_[q.img_[i]];
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<int> img(img_.size());
  for (size_t i = 0; i < img_.size(); ++i) img[img_[i]] = static_cast<int>(i);
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
  for (size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != static_cast<int>(i)) return false;
  return true;
}

std::string Permutation::str() const {
  std::string out;
  std::vector<bool> seen(img_.size(), false);
  for (size_t i = 0; i < img_.size(); ++i) {
    if (seen[i] || img_[i] == static_cast<int>(i)) continue;
    out += "(";
    size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      out += (first ? "" : " ") + std::to_string(j + 1);
      first = false;
      j = static_cast<size_t>(img_[j]);
    }
    out += ")";
  }
  return out.empty() ? "id" : out;
}

std::vector<Permutation> subgroup_closure(std::vector<Permutation> gens, int n) {
  std::set<Permutation> seen;
  std::vector<Permutation> queue;
  auto push = [&](const Permutation& p) {
    if (seen.insert(p).second) queue.push_back(p);
  };
  push(Permutation::identity(n));
  for (auto& g : gens) {
    if (g.size() != n) raise(ErrorCode::InvalidInput, "generator size mismatch");
    push(g);
  }
  for (size_t qi = 0; qi < queue.size(); ++qi)
    for (const auto& g : gens) push(queue[qi] * g);
  return std::vector<Permutation>(seen.begin(), seen.end());
}

std::vector<std::vector<int>> orbit_partition(
    const std::vector<Permutation>& perms, int n) {
  std::vector<std::vector<int>> orbits;
  std::vector<bool> seen(n, false);
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::vector<int> orbit, stack{i};
    seen[i] = true;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      orbit.push_back(x);
      for (const auto& p : perms)
        if (!seen[p(x)]) {
          seen[p(x)] = true;
          stack.push_back(p(x));
        }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

PermutationGroup permutation_group(std::vector<Permutation> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (elements.empty())
    raise(ErrorCode::InvalidInput, "empty permutation set");
  int m = static_cast<int>(elements.size());
  if (m > kMaxOrder) raise(ErrorCode::SizeLimit, "group order above 64");

  std::map<Permutation, int> index;
  for (int i = 0; i < m; ++i) index[elements[i]] = i;

  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      auto it = index.find(elements[i] * elements[j]);
      if (it == index.end())
        raise(ErrorCode::InvalidInput, "permutation set is not closed");
      table[i][j] = it->second;
    }
  std::vector<std::string> names(m);
  for (int i = 0; i < m; ++i) names[i] = elements[i].str();

  PermutationGroup pg;
  pg.group = FiniteGroup::from_table(std::move(names), std::move(table));
  pg.elements = std::move(elements);
  return pg;
}

bool Character::is_trivial() const {
  for (long e : exponents)
    if (e != 0) return false;
  return true;
}

std::string Character::str() const {
  if (is_trivial()) return "trivial";
  std::string out;
  for (size_t g = 0; g < exponents.size(); ++g) {
    if (static_cast<int>(g) == domain->identity()) continue;
    if (!out.empty()) out += ", ";
    out += domain->name(static_cast<int>(g)) + " -> " + value(static_cast<int>(g)).str();
  }
  return out;
}

std::vector<Character> homs_to_roots(const GroupPtr& G, int r) {
  if (r < 1) raise(ErrorCode::InvalidInput, "torsion order must be >= 1");
  auto ab = G->abelianization();
  const FiniteGroup& A = *ab.group;
  int n = A.order();

  // Greedy generating set, smallest element index first.
  std::vector<int> gens;
  std::vector<char> span(n, 0);
  span[A.identity()] = 1;
  int covered = 1;
  for (int a = 0; a < n && covered < n; ++a) {
    if (span[a]) continue;
    gens.push_back(a);
    std::vector<int> queue;
    for (int x = 0; x < n; ++x)
      if (span[x]) queue.push_back(x);
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int y = A.op(queue[qi], a);
      while (!span[y]) {
        span[y] = 1;
        ++covered;
        queue.push_back(y);
        y = A.op(y, a);
      }
    }
  }

  std::vector<std::vector<long>> gen_choices;
  for (int g : gens) {
    int o = A.element_order(g);
    long step = r / std::gcd(static_cast<long>(r), static_cast<long>(o));
    std::vector<long> ch;
    for (long e = 0; e < r; e += step) ch.push_back(e);
    gen_choices.push_back(std::move(ch));
  }

  std::vector<Character> out;
  std::vector<size_t> pick(gens.size(), 0);

  auto try_extend = [&]() -> std::optional<std::vector<long>> {
    std::vector<long> val(n, -1);
    val[A.identity()] = 0;
    std::vector<int> queue{A.identity()};
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int x = queue[qi];
      for (size_t gi = 0; gi < gens.size(); ++gi) {
        int y = A.op(x, gens[gi]);
        long v = (val[x] + gen_choices[gi][pick[gi]]) % r;
        if (val[y] < 0) {
          val[y] = v;
          queue.push_back(y);
        } else if (val[y] != v) {
          return std::nullopt;
        }
      }
    }
    return val;
  };

  while (true) {
    if (auto val = try_extend()) {
      Character c;
      c.domain = G;
      c.torsion = r;
      c.exponents.resize(G->order());
      for (int g = 0; g < G->order(); ++g)
        c.exponents[g] = (*val)[ab.projection[g]];
      out.push_back(std::move(c));
    }
    // Odometer over generator exponent choices, last index fastest.
    size_t k = gens.size();
    while (k > 0 && ++pick[k - 1] == gen_choices[k - 1].size()) {
      pick[k - 1] = 0;
      --k;
    }
    if (k == 0) break;
  }
  return out;
}

}  // namespace gcpoly
