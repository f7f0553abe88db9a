#include "gcpoly/algspec.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "gcpoly/error.hpp"

namespace gcpoly {

namespace {

std::string trim(const std::string& s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace((unsigned char)s[b])) ++b;
  while (e > b && std::isspace((unsigned char)s[e - 1])) --e;
  return s.substr(b, e - b);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

int parse_int(const std::string& s, const std::string& what) {
  try {
    size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    raise(ErrorCode::InvalidInput, what + " needs an integer, got '" + s + "'");
  }
}

GroupPtr group_from_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    raise(ErrorCode::InvalidInput, "cannot open group table '" + path + "'");
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (!line.empty()) lines.push_back(line);
  }
  if (lines.empty())
    raise(ErrorCode::InvalidInput, "group table '" + path + "' is empty");
  std::istringstream head(lines[0]);
  std::vector<std::string> names;
  std::string tok;
  while (head >> tok) names.push_back(tok);
  const size_t n = names.size();
  if (lines.size() != n + 1)
    raise(ErrorCode::InvalidInput,
          "group table '" + path + "' needs one row per element");
  auto index_of = [&](const std::string& s) -> int {
    for (size_t i = 0; i < n; ++i)
      if (names[i] == s) return (int)i;
    bool digits = !s.empty();
    for (char c : s)
      if (!std::isdigit((unsigned char)c)) digits = false;
    if (digits) {
      int v = parse_int(s, "table entry");
      if (v >= 0 && v < (int)n) return v;
    }
    raise(ErrorCode::InvalidInput,
          "unknown element '" + s + "' in group table '" + path + "'");
  };
  std::vector<std::vector<int>> table(n);
  for (size_t r = 0; r < n; ++r) {
    std::istringstream row(lines[r + 1]);
    while (row >> tok) table[r].push_back(index_of(tok));
    if (table[r].size() != n)
      raise(ErrorCode::InvalidInput,
            "group table row " + std::to_string(r + 1) + " needs " +
                std::to_string(n) + " entries");
  }
  return FiniteGroup::from_table(std::move(names), std::move(table));
}

}  // namespace

GroupPtr parse_group_spec(const std::string& spec) {
  std::string s = trim(spec);
  if (s == "trivial" || s == "Z1") return FiniteGroup::trivial();
  if (s.rfind("table:", 0) == 0) return group_from_table_file(s.substr(6));
  // ZaxZbx... cyclic product
  std::vector<int> orders;
  for (const std::string& part : split(s, 'x')) {
    if (part.size() < 2 || part[0] != 'Z')
      raise(ErrorCode::InvalidInput,
            "group spec '" + spec + "' is not Zn, ZnxZm..., trivial or table:<path>");
    int o = parse_int(part.substr(1), "cyclic order");
    if (o < 1 || o > 64)
      raise(ErrorCode::InvalidInput, "cyclic order out of range in '" + spec + "'");
    orders.push_back(o);
  }
  return FiniteGroup::cyclic_product(orders);
}

GradedMatrixAlgebra AlgebraSpec::build() const {
  switch (kind) {
    case AlgebraKind::MnF:
      return GradedMatrixAlgebra::mnf(ElementaryGrading(group, tuple), conductor);
    case AlgebraKind::MnE:
      return GradedMatrixAlgebra::mne(ElementaryGrading(group, tuple), conductor,
                                      budget);
    case AlgebraKind::Mab:
      return GradedMatrixAlgebra::mab(a, b, conductor, budget);
  }
  raise(ErrorCode::InvalidInput, "unreachable algebra kind");
}

AlgebraSpec parse_algebra_text(const std::string& text) {
  AlgebraSpec spec;
  bool saw_kind = false, saw_group = false, saw_tuple = false;
  bool saw_a = false, saw_b = false, saw_budget = false;
  int n_claim = -1;
  std::string group_str, tuple_str;

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      raise(ErrorCode::InvalidInput,
            "line " + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key == "kind") {
      saw_kind = true;
      std::string low = value;
      for (char& c : low) c = (char)std::tolower((unsigned char)c);
      if (low == "mnf")
        spec.kind = AlgebraKind::MnF;
      else if (low == "mne")
        spec.kind = AlgebraKind::MnE;
      else if (low == "mab")
        spec.kind = AlgebraKind::Mab;
      else
        raise(ErrorCode::InvalidInput,
              "kind must be mnf, mne or mab, got '" + value + "'");
    } else if (key == "n") {
      n_claim = parse_int(value, "n");
    } else if (key == "group") {
      saw_group = true;
      group_str = value;
    } else if (key == "tuple") {
      saw_tuple = true;
      tuple_str = value;
    } else if (key == "a") {
      saw_a = true;
      spec.a = parse_int(value, "a");
    } else if (key == "b") {
      saw_b = true;
      spec.b = parse_int(value, "b");
    } else if (key == "conductor") {
      spec.conductor = parse_int(value, "conductor");
    } else if (key == "budget") {
      saw_budget = true;
      spec.budget = parse_int(value, "budget");
    } else {
      raise(ErrorCode::InvalidInput,
            "unknown key '" + key + "' on line " + std::to_string(lineno));
    }
  }

  if (!saw_kind) raise(ErrorCode::InvalidInput, "missing key: kind");
  if (spec.kind == AlgebraKind::Mab) {
    if (!saw_a || !saw_b)
      raise(ErrorCode::InvalidInput, "mab needs both block sizes a and b");
    if (saw_group || saw_tuple)
      raise(ErrorCode::InvalidInput,
            "mab derives its group and tuple from the block sizes");
  } else {
    if (!saw_group || !saw_tuple)
      raise(ErrorCode::InvalidInput, "mnf/mne need group and tuple");
    spec.group = parse_group_spec(group_str);
    for (const std::string& name : split(tuple_str, ',')) {
      auto g = spec.group->find(name);
      if (!g)
        raise(ErrorCode::UnknownGroupElement,
              "'" + name + "' is not an element of the grading group");
      spec.tuple.push_back(*g);
    }
    if (spec.kind == AlgebraKind::MnF && !saw_budget) spec.budget = 0;
  }
  if (n_claim >= 0) {
    int n = spec.kind == AlgebraKind::Mab ? spec.a + spec.b
                                          : (int)spec.tuple.size();
    if (n_claim != n)
      raise(ErrorCode::InvalidInput,
            "n = " + std::to_string(n_claim) + " does not match the " +
                (spec.kind == AlgebraKind::Mab ? "block sizes" : "tuple length"));
  }
  return spec;
}

AlgebraSpec parse_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    raise(ErrorCode::InvalidInput, "cannot open algebra spec '" + path + "'");
  std::ostringstream all;
  all << in.rdbuf();
  return parse_algebra_text(all.str());
}

}  // namespace gcpoly
