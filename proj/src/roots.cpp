#include "supergrading/roots.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "supergrading/errors.hpp"

namespace supergrading {

long RootSystem::form(std::span<const int> a, std::span<const int> b) const {
  long s = 0;
  for (int i = 0; i < eps; ++i) s += static_cast<long>(a[i]) * b[i];
  for (int j = eps; j < eps + delta; ++j) s -= static_cast<long>(a[j]) * b[j];
  return s;
}

bool RootSystem::contains(std::span<const int> coeffs) const { return find(coeffs).has_value(); }

std::optional<Root> RootSystem::find(std::span<const int> coeffs) const {
  for (const auto& r : roots) {
    if (std::equal(r.coeffs.begin(), r.coeffs.end(), coeffs.begin(), coeffs.end())) return r;
  }
  return std::nullopt;
}

RootSystem build_roots(AlgebraKind kind, int m, int n) {
  RootSystem rs{kind, m, n, 0, 0, {}};
  const int dim = kind == AlgebraKind::gl ? m + n : m / 2 + n;
  rs.eps = kind == AlgebraKind::gl ? m : m / 2;
  rs.delta = n;
  auto add = [&](std::initializer_list<std::pair<int, int>> terms, Parity p) {
    Root r{std::vector<int>(static_cast<std::size_t>(dim), 0), p};
    for (auto [index, c] : terms) r.coeffs[static_cast<std::size_t>(index)] += c;
    rs.roots.push_back(std::move(r));
  };
  const int e = rs.eps;
  if (kind == AlgebraKind::gl) {
    for (int i = 0; i < e; ++i) {
      for (int j = 0; j < e; ++j) {
        if (i != j) add({{i, 1}, {j, -1}}, Parity::even);
      }
    }
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i != j) add({{e + i, 1}, {e + j, -1}}, Parity::even);
      }
    }
    for (int i = 0; i < e; ++i) {
      for (int j = 0; j < n; ++j) {
        add({{i, 1}, {e + j, -1}}, Parity::odd);
        add({{i, -1}, {e + j, 1}}, Parity::odd);
      }
    }
    return rs;
  }
  const bool m_odd = m % 2 == 1;
  for (int i = 0; i < e; ++i) {
    for (int j = i + 1; j < e; ++j) {
      for (int a : {1, -1}) {
        for (int b : {1, -1}) add({{i, a}, {j, b}}, Parity::even);
      }
    }
    if (m_odd) {
      add({{i, 1}}, Parity::even);
      add({{i, -1}}, Parity::even);
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int a : {1, -1}) {
        for (int b : {1, -1}) add({{e + i, a}, {e + j, b}}, Parity::even);
      }
    }
    add({{e + i, 2}}, Parity::even);
    add({{e + i, -2}}, Parity::even);
  }
  for (int i = 0; i < e; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int a : {1, -1}) {
        for (int b : {1, -1}) add({{i, a}, {e + j, b}}, Parity::odd);
      }
    }
  }
  if (m_odd) {
    for (int j = 0; j < n; ++j) {
      add({{e + j, 1}}, Parity::odd);
      add({{e + j, -1}}, Parity::odd);
    }
  }
  return rs;
}

RootSystem build_roots(const Realization& r) { return build_roots(r.kind(), r.m(), r.n()); }

bool is_isotropic(const RootSystem& rs, const Root& a) { return rs.form(a.coeffs, a.coeffs) == 0; }

MarkedBase reflect_marked(const RootSystem& rs, const MarkedBase& b, std::size_t k) {
  if (k >= b.simple.size()) throw std::out_of_range("simple root index out of range");
  const Root& ak = b.simple[k];
  const int dk = b.marks[k];
  MarkedBase out = b;
  const bool isotropic = is_isotropic(rs, ak);
  const long akk = rs.form(ak.coeffs, ak.coeffs);
  for (std::size_t i = 0; i < b.simple.size(); ++i) {
    const Root& ai = b.simple[i];
    if (i == k) {
      for (auto& c : out.simple[i].coeffs) c = -c;
      out.marks[i] = -dk;
      continue;
    }
    const long aik = rs.form(ai.coeffs, ak.coeffs);
    long factor = 0;  // r_k(a_i) = a_i + factor * a_k
    if (isotropic) {
      factor = aik != 0 ? 1 : 0;
    } else {
      if ((2 * aik) % akk != 0) throw std::logic_error("non-integral reflection coefficient");
      factor = -(2 * aik) / akk;
    }
    if (factor == 0) continue;
    for (std::size_t c = 0; c < ai.coeffs.size(); ++c) {
      out.simple[i].coeffs[c] = ai.coeffs[c] + static_cast<int>(factor) * ak.coeffs[c];
    }
    out.simple[i].parity = factor % 2 == 0 ? ai.parity : ai.parity + ak.parity;
    out.marks[i] = b.marks[i] + static_cast<int>(factor) * dk;
  }
  return out;
}

int DegreeMap::degree(std::span<const int> coeffs) const {
  Rational s;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] != 0) s += coeffs[i] * weights[i];
  }
  if (!is_integer(s)) throw NonIntegralGrading("root has a non-integral degree");
  return static_cast<int>(to_long(s));
}

DegreeMap degree_map(const Grading& g) {
  const Realization& r = *g.ambient();
  DegreeMap d;
  if (r.kind() == AlgebraKind::gl) {
    for (int i = 1; i <= r.m() + r.n(); ++i) d.weights.push_back(g.h()[r.index_of(i)]);
  } else {
    for (int i = 1; i <= r.k() + r.n(); ++i) d.weights.push_back(g.h()[r.index_of(i)]);
  }
  return d;
}

namespace {

long functional(std::span<const long> values, const Root& r) {
  long s = 0;
  for (std::size_t i = 0; i < r.coeffs.size(); ++i) s += values[i] * r.coeffs[i];
  return s;
}

}  // namespace

std::vector<Root> base_from_functional(const RootSystem& rs, std::span<const long> values) {
  std::vector<Root> positive;
  for (const auto& r : rs.roots) {
    const long v = functional(values, r);
    if (v == 0) throw std::invalid_argument("functional is not regular");
    if (v > 0) positive.push_back(r);
  }
  std::set<std::vector<int>> sums;
  for (const auto& a : positive) {
    for (const auto& b : positive) {
      std::vector<int> s(a.coeffs.size());
      for (std::size_t i = 0; i < s.size(); ++i) s[i] = a.coeffs[i] + b.coeffs[i];
      sums.insert(std::move(s));
    }
  }
  std::vector<Root> simple;
  for (const auto& r : positive) {
    if (!sums.count(r.coeffs)) simple.push_back(r);
  }
  std::sort(simple.begin(), simple.end(), [&](const Root& a, const Root& b) {
    const long fa = functional(values, a);
    const long fb = functional(values, b);
    // order along the chain: by the largest coordinate value involved
    auto top = [&](const Root& r) {
      long best = 0;
      for (std::size_t i = 0; i < r.coeffs.size(); ++i) {
        if (r.coeffs[i] > 0) best = std::max(best, values[i]);
      }
      return best;
    };
    if (top(a) != top(b)) return top(a) > top(b);
    if (fa != fb) return fa < fb;
    return a.coeffs < b.coeffs;
  });
  return simple;
}

std::vector<Root> standard_base(const RootSystem& rs) {
  std::vector<long> values(static_cast<std::size_t>(rs.eps + rs.delta));
  if (rs.kind == AlgebraKind::gl) {
    // eps_1 > ... > eps_m > delta_1 > ... > delta_n
    for (int i = 0; i < rs.eps + rs.delta; ++i) values[static_cast<std::size_t>(i)] = rs.eps + rs.delta - i;
  } else {
    // delta_1 > ... > delta_n > eps_1 > ... > eps_k > 0
    for (int i = 0; i < rs.eps; ++i) values[static_cast<std::size_t>(i)] = rs.eps - i;
    for (int j = 0; j < rs.delta; ++j) values[static_cast<std::size_t>(rs.eps + j)] = rs.eps + rs.delta - j;
  }
  return base_from_functional(rs, values);
}

std::optional<std::vector<Rational>> base_coordinates(std::span<const Root> simple, std::span<const int> coeffs) {
  if (simple.empty()) {
    if (std::all_of(coeffs.begin(), coeffs.end(), [](int c) { return c == 0; })) return std::vector<Rational>{};
    return std::nullopt;
  }
  Matrix a(coeffs.size(), simple.size());
  for (std::size_t j = 0; j < simple.size(); ++j) {
    for (std::size_t i = 0; i < coeffs.size(); ++i) a(i, j) = simple[j].coeffs[i];
  }
  Vector b(coeffs.begin(), coeffs.end());
  auto x = solve(a, b);
  if (!x) return std::nullopt;
  return *x;
}

bool is_base(const RootSystem& rs, std::span<const Root> simple) {
  if (!simple.empty()) {
    Matrix a(simple[0].coeffs.size(), simple.size());
    for (std::size_t j = 0; j < simple.size(); ++j) {
      for (std::size_t i = 0; i < simple[j].coeffs.size(); ++i) a(i, j) = simple[j].coeffs[i];
    }
    if (rank(a) != simple.size()) return false;
  }
  for (const auto& s : simple) {
    if (!rs.contains(s.coeffs)) return false;
  }
  std::size_t positive = 0;
  for (const auto& r : rs.roots) {
    auto x = base_coordinates(simple, r.coeffs);
    if (!x) return false;
    bool nonneg = true;
    bool nonpos = true;
    for (const auto& c : *x) {
      if (!is_integer(c)) return false;
      if (c < 0) nonneg = false;
      if (c > 0) nonpos = false;
    }
    if (!nonneg && !nonpos) return false;
    if (nonneg) ++positive;
  }
  return positive * 2 == rs.roots.size();
}

MarkedBase mark(const std::vector<Root>& simple, const DegreeMap& deg) {
  MarkedBase b{simple, {}};
  for (const auto& r : simple) b.marks.push_back(deg.degree(r.coeffs));
  return b;
}

MarkedBase find_nonnegative_base(const RootSystem& rs, const DegreeMap& deg, std::vector<Root> start) {
  MarkedBase b = mark(start, deg);
  // Each reflection removes at least one negative-degree root from the
  // positive system, so the loop is bounded by the number of roots.
  for (std::size_t step = 0; step <= rs.roots.size(); ++step) {
    auto neg = std::find_if(b.marks.begin(), b.marks.end(), [](int d) { return d < 0; });
    if (neg == b.marks.end()) return b;
    b = reflect_marked(rs, b, static_cast<std::size_t>(neg - b.marks.begin()));
  }
  throw std::logic_error("reflection sequence did not terminate");
}

MarkedBase find_nonnegative_base(const Grading& g) {
  const RootSystem rs = build_roots(*g.ambient());
  return find_nonnegative_base(rs, degree_map(g), standard_base(rs));
}

namespace {

using Key = std::vector<long>;

// Canonical encoding of a marked diagram: colour refinement, then the
// lexicographically least encoding over orderings compatible with colours.
Key diagram_key(const RootSystem& rs, const MarkedBase& b) {
  const std::size_t n = b.simple.size();
  std::vector<std::vector<long>> gram(n, std::vector<long>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) gram[i][j] = rs.form(b.simple[i].coeffs, b.simple[j].coeffs);
  }
  std::vector<long> colour(n);
  {
    std::map<std::vector<long>, long> ids;
    std::vector<std::vector<long>> sig(n);
    for (std::size_t i = 0; i < n; ++i) {
      sig[i] = {gram[i][i], static_cast<long>(b.simple[i].parity), b.marks[i]};
      ids[sig[i]] = 0;
    }
    long next = 0;
    for (auto& [s, id] : ids) id = next++;
    for (std::size_t i = 0; i < n; ++i) colour[i] = ids[sig[i]];
  }
  for (std::size_t round = 0; round < n; ++round) {
    std::vector<std::vector<long>> sig(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::pair<long, long>> nb;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i && gram[i][j] != 0) nb.emplace_back(gram[i][j], colour[j]);
      }
      std::sort(nb.begin(), nb.end());
      sig[i] = {colour[i]};
      for (auto [g, c] : nb) {
        sig[i].push_back(g);
        sig[i].push_back(c);
      }
    }
    std::map<std::vector<long>, long> ids;
    for (const auto& s : sig) ids[s] = 0;
    long next = 0;
    for (auto& [s, id] : ids) id = next++;
    std::vector<long> refined(n);
    for (std::size_t i = 0; i < n; ++i) refined[i] = ids[sig[i]];
    const bool stable = std::set<long>(refined.begin(), refined.end()).size() ==
                        std::set<long>(colour.begin(), colour.end()).size();
    colour = refined;
    if (stable) break;
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t c) { return colour[a] < colour[c]; });
  std::vector<std::pair<std::size_t, std::size_t>> classes;  // [begin, end) in order
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && colour[order[j]] == colour[order[i]]) ++j;
    classes.emplace_back(i, j);
    i = j;
  }

  auto encode = [&](const std::vector<std::size_t>& perm) {
    Key k;
    k.reserve(3 * n + n * n);
    for (auto v : perm) {
      k.push_back(colour[v]);
      k.push_back(static_cast<long>(b.simple[v].parity));
      k.push_back(b.marks[v]);
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) k.push_back(gram[perm[i]][perm[j]]);
    }
    return k;
  };

  Key best;
  std::size_t visited = 0;
  std::vector<std::size_t> perm = order;
  std::function<void(std::size_t)> rec = [&](std::size_t c) {
    if (c == classes.size()) {
      if (++visited > 2000000) throw std::length_error("diagram too symmetric to canonicalise");
      Key k = encode(perm);
      if (best.empty() || k < best) best = std::move(k);
      return;
    }
    auto [lo, hi] = classes[c];
    std::sort(perm.begin() + static_cast<long>(lo), perm.begin() + static_cast<long>(hi));
    do {
      rec(c + 1);
    } while (std::next_permutation(perm.begin() + static_cast<long>(lo), perm.begin() + static_cast<long>(hi)));
  };
  rec(0);
  return best;
}

}  // namespace

bool same_marked_diagram(const RootSystem& rs, const MarkedBase& a, const MarkedBase& b) {
  return a.simple.size() == b.simple.size() && diagram_key(rs, a) == diagram_key(rs, b);
}

std::vector<MarkedBase> equivalence_class(const RootSystem& rs, const MarkedBase& b) {
  std::vector<MarkedBase> reps{b};
  std::set<Key> seen{diagram_key(rs, b)};
  std::deque<MarkedBase> queue{b};
  while (!queue.empty()) {
    MarkedBase cur = std::move(queue.front());
    queue.pop_front();
    for (std::size_t k = 0; k < cur.simple.size(); ++k) {
      if (cur.marks[k] != 0) continue;
      MarkedBase next = reflect_marked(rs, cur, k);
      if (seen.insert(diagram_key(rs, next)).second) {
        reps.push_back(next);
        queue.push_back(std::move(next));
      }
    }
  }
  return reps;
}

bool marked_equivalent(const RootSystem& rs, const MarkedBase& b1, const MarkedBase& b2) {
  if (b1.simple.size() != b2.simple.size()) return false;
  const Key target = diagram_key(rs, b2);
  for (const auto& rep : equivalence_class(rs, b1)) {
    if (diagram_key(rs, rep) == target) return true;
  }
  return false;
}

}  // namespace supergrading
