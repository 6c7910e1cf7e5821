#include "qalg/identity/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace qalg {

namespace {

// Parity of sorting v ascending; 0 if v has a repeated value.
int sort_with_sign(int* v, int len) {
  int sign = 1;
  for (int a = 1; a < len; ++a) {
    for (int b = a; b > 0 && v[b - 1] >= v[b]; --b) {
      if (v[b - 1] == v[b]) return 0;
      std::swap(v[b - 1], v[b]);
      sign = -sign;
    }
  }
  return sign;
}

std::uint64_t pack(const Monomial& m) {
  std::uint64_t key = static_cast<std::uint64_t>(m.type);
  for (int v : m.slots) key = (key << 4) | static_cast<std::uint64_t>(v);
  return key;
}

struct BasisStore {
  std::vector<Monomial> bases[3];
  std::unordered_map<std::uint64_t, int> index[3];
};

void combinations(int n, int k, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int v = start; v < n; ++v) {
    cur.push_back(v);
    combinations(n, k, v + 1, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> subsets_of(const std::vector<int>& pool, int k) {
  std::vector<std::vector<int>> idx;
  std::vector<int> cur;
  combinations(static_cast<int>(pool.size()), k, 0, cur, idx);
  for (auto& s : idx)
    for (auto& x : s) x = pool[x];
  return idx;
}

std::vector<int> complement(const std::vector<int>& pool, const std::vector<int>& take) {
  std::vector<int> out;
  for (int v : pool) {
    if (std::find(take.begin(), take.end(), v) == take.end()) out.push_back(v);
  }
  return out;
}

std::vector<int> range(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i;
  return v;
}

std::vector<Monomial> build_basis(int degree) {
  std::vector<Monomial> out;
  if (degree == 4) {
    out.push_back({AssocType::Single, range(4)});
  } else if (degree == 7) {
    for (const auto& inner : subsets_of(range(7), 4)) {
      Monomial m{AssocType::Nested7, inner};
      for (int v : complement(range(7), inner)) m.slots.push_back(v);
      out.push_back(std::move(m));
    }
  } else if (degree == 10) {
    const auto all = range(10);
    for (const auto& inner : subsets_of(all, 4)) {
      const auto rest = complement(all, inner);
      for (const auto& mid : subsets_of(rest, 3)) {
        Monomial m{AssocType::TypeA, inner};
        m.slots.insert(m.slots.end(), mid.begin(), mid.end());
        for (int v : complement(rest, mid)) m.slots.push_back(v);
        out.push_back(std::move(m));
      }
    }
    for (const auto& first : subsets_of(all, 4)) {
      const auto rest = complement(all, first);
      for (const auto& second : subsets_of(rest, 4)) {
        if (second.front() < first.front()) continue;
        Monomial m{AssocType::TypeB, first};
        m.slots.insert(m.slots.end(), second.begin(), second.end());
        for (int v : complement(rest, second)) m.slots.push_back(v);
        out.push_back(std::move(m));
      }
    }
  } else {
    throw std::invalid_argument("monomial basis exists only for degrees 4, 7, 10");
  }
  return out;
}

int slot_of_degree(int degree) {
  switch (degree) {
    case 4: return 0;
    case 7: return 1;
    case 10: return 2;
    default: throw std::invalid_argument("monomial basis exists only for degrees 4, 7, 10");
  }
}

const BasisStore& store() {
  static const BasisStore s = [] {
    BasisStore b;
    const int degrees[3] = {4, 7, 10};
    for (int k = 0; k < 3; ++k) {
      b.bases[k] = build_basis(degrees[k]);
      for (std::size_t i = 0; i < b.bases[k].size(); ++i) b.index[k].emplace(pack(b.bases[k][i]), static_cast<int>(i));
    }
    return b;
  }();
  return s;
}

}  // namespace

std::string Monomial::to_string() const {
  auto letter = [](int v) { return std::string(1, static_cast<char>('a' + v)); };
  auto group = [&](std::size_t from, std::size_t len) {
    std::string s;
    for (std::size_t k = 0; k < len; ++k) s += (k ? "," : "") + letter(slots[from + k]);
    return s;
  };
  switch (type) {
    case AssocType::Single: return "[" + group(0, 4) + "]";
    case AssocType::Nested7: return "[[" + group(0, 4) + "]," + group(4, 3) + "]";
    case AssocType::TypeA: return "[[[" + group(0, 4) + "]," + group(4, 3) + "]," + group(7, 3) + "]";
    case AssocType::TypeB: return "[[" + group(0, 4) + "],[" + group(4, 4) + "]," + group(8, 2) + "]";
  }
  return {};
}

int degree_of(AssocType t) {
  switch (t) {
    case AssocType::Single: return 4;
    case AssocType::Nested7: return 7;
    default: return 10;
  }
}

AssocType default_type(int degree) {
  switch (degree) {
    case 4: return AssocType::Single;
    case 7: return AssocType::Nested7;
    case 10: return AssocType::TypeA;
    default: throw std::invalid_argument("unsupported degree");
  }
}

const std::vector<int>& group_sizes(AssocType t) {
  static const std::vector<int> single{4}, nested{4, 3}, type_a{4, 3, 3}, type_b{4, 4, 2};
  switch (t) {
    case AssocType::Single: return single;
    case AssocType::Nested7: return nested;
    case AssocType::TypeA: return type_a;
    case AssocType::TypeB: return type_b;
  }
  return single;
}

int canonicalize(Monomial& m) {
  if (static_cast<int>(m.slots.size()) != degree_of(m.type)) throw std::invalid_argument("slot count mismatch");
  int sign = 1;
  int offset = 0;
  for (int len : group_sizes(m.type)) {
    sign *= sort_with_sign(m.slots.data() + offset, len);
    if (sign == 0) return 0;
    offset += len;
  }
  if (m.type == AssocType::TypeB && m.slots[4] < m.slots[0]) {
    // The two inner brackets are the first two arguments of the outer one.
    std::swap_ranges(m.slots.begin(), m.slots.begin() + 4, m.slots.begin() + 4);
    sign = -sign;
  }
  return sign;
}

int permute_variables(Monomial& m, const std::vector<int>& perm) {
  for (int& v : m.slots) v = perm.at(static_cast<std::size_t>(v));
  return canonicalize(m);
}

const std::vector<Monomial>& monomial_basis(int degree) { return store().bases[slot_of_degree(degree)]; }

int monomial_index(const Monomial& m) {
  const int k = slot_of_degree(m.degree());
  const auto& idx = store().index[k];
  auto it = idx.find(pack(m));
  return it == idx.end() ? -1 : it->second;
}

}  // namespace qalg
