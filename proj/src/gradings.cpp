#include "supergrading/gradings.hpp"

#include <map>
#include <set>
#include <stdexcept>

#include "supergrading/errors.hpp"

namespace supergrading {

Grading::Grading(RealizationPtr ambient, Vector h, std::vector<int> degrees)
    : ambient_(std::move(ambient)), h_(std::move(h)), degrees_(std::move(degrees)) {}

AlgebraElement Grading::element() const { return {ambient_, Matrix::diagonal(h_)}; }

bool Grading::is_even() const {
  for (int d : degrees_) {
    if (d % 2 != 0) return false;
  }
  return true;
}

namespace {

enum class GradingStatus { ok, non_integral, not_member };

GradingStatus compute_degrees(const Realization& r, std::span<const Rational> h, std::vector<int>& out) {
  if (h.size() != r.size()) throw SizeMismatch("diagonal length does not match " + r.name());
  if (r.kind() == AlgebraKind::osp) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (h[i] != -h[r.index_of(-r.label(i))]) return GradingStatus::not_member;
    }
  }
  out.resize(r.dim());
  Rational lambda;
  for (std::size_t b = 0; b < r.dim(); ++b) {
    const auto& elem = r.basis(b);
    lambda = h[elem.pivot_row] - h[elem.pivot_col];
    if (lambda.get_den() != 1) return GradingStatus::non_integral;
    out[b] = static_cast<int>(lambda.get_num().get_si());
  }
  return GradingStatus::ok;
}

}  // namespace

Grading grading_from(RealizationPtr r, std::span<const Rational> h_diagonal) {
  std::vector<int> degrees;
  switch (compute_degrees(*r, h_diagonal, degrees)) {
    case GradingStatus::not_member:
      throw MembershipFailure("diagonal element is not in " + r->name());
    case GradingStatus::non_integral:
      throw NonIntegralGrading("ad H has a non-integral eigenvalue");
    case GradingStatus::ok:
      break;
  }
  // Every basis element must be an eigenvector, not just at its pivot.
  for (std::size_t b = 0; b < r->dim(); ++b) {
    const auto& m = r->basis(b).matrix;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (m(i, j) != 0 && h_diagonal[i] - h_diagonal[j] != degrees[b]) {
          throw std::logic_error("basis element is not an ad H eigenvector");
        }
      }
    }
  }
  return Grading(std::move(r), Vector(h_diagonal.begin(), h_diagonal.end()), std::move(degrees));
}

Grading grading_from(const AlgebraElement& h) {
  if (!h.matrix.is_diagonal()) throw std::invalid_argument("grading element must be diagonal");
  Vector d = h.matrix.diagonal();
  return grading_from(h.ambient, d);
}

std::optional<Grading> try_grading_from(RealizationPtr r, std::span<const Rational> h_diagonal) {
  std::vector<int> degrees;
  if (compute_degrees(*r, h_diagonal, degrees) != GradingStatus::ok) return std::nullopt;
  return Grading(std::move(r), Vector(h_diagonal.begin(), h_diagonal.end()), std::move(degrees));
}

long BlockType::even_dim() const {
  if (kind == AlgebraKind::gl) return static_cast<long>(even) * even + static_cast<long>(odd) * odd;
  const long c = odd / 2;
  return static_cast<long>(even) * (even - 1) / 2 + c * (2 * c + 1);
}

long BlockType::odd_dim() const {
  if (kind == AlgebraKind::gl) return 2L * even * odd;
  return static_cast<long>(even) * odd;
}

long BlockType::dim() const { return even_dim() + odd_dim(); }

namespace {

std::vector<std::size_t> indices_of_parity(const Realization& r, Parity p) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < r.dim(); ++i) {
    if (r.basis(i).parity == p) idx.push_back(i);
  }
  return idx;
}

// Kernel of the stacked maps restricted to one parity, as algebra elements.
std::vector<AlgebraElement> joint_kernel(const RealizationPtr& r, const std::vector<Matrix>& maps, Parity p) {
  const auto idx = indices_of_parity(*r, p);
  Matrix stacked(maps.size() * idx.size(), idx.size());
  for (std::size_t k = 0; k < maps.size(); ++k) {
    for (std::size_t i = 0; i < idx.size(); ++i) {
      for (std::size_t j = 0; j < idx.size(); ++j) stacked(k * idx.size() + i, j) = maps[k](idx[i], idx[j]);
    }
  }
  std::vector<AlgebraElement> out;
  for (const auto& v : kernel_basis(stacked)) {
    Vector coords(r->dim());
    for (std::size_t j = 0; j < idx.size(); ++j) coords[idx[j]] = v[j];
    out.push_back({r, r->combine(coords)});
  }
  return out;
}

CentralizerReport kernel_report(const RealizationPtr& r, const std::vector<Matrix>& maps) {
  CentralizerReport report;
  report.basis = joint_kernel(r, maps, Parity::even);
  report.even_dim = report.basis.size();
  auto odd = joint_kernel(r, maps, Parity::odd);
  report.odd_dim = odd.size();
  for (auto& x : odd) report.basis.push_back(std::move(x));
  return report;
}

}  // namespace

CentralizerReport centralizer(RealizationPtr r, const AlgebraElement& e) {
  if (!r->odd_part(e.matrix).is_zero()) throw std::invalid_argument("centralizer needs an even element");
  return kernel_report(r, {adjoint_matrix(e)});
}

Dims dim_formula_gl(const SuperPartition& sp) {
  long even = 0;
  long odd = 0;
  for (int a : sp.p) {
    for (int b : sp.p) even += std::min(a, b);
  }
  for (int a : sp.q) {
    for (int b : sp.q) even += std::min(a, b);
  }
  for (int a : sp.p) {
    for (int b : sp.q) odd += 2 * std::min(a, b);
  }
  return {even, odd};
}

namespace {

Rational osp_even_terms(const SuperPartition& sp, const Rational& symplectic_lead) {
  Rational even = ratio(sp.m(), 2);
  long odd_p = 0;
  for (std::size_t i = 0; i < sp.p.size(); ++i) {
    even += static_cast<long>(i) * sp.p[i];
    if (sp.p[i] % 2 == 1) ++odd_p;
  }
  even -= ratio(odd_p, 2);
  long odd_q = 0;
  even += symplectic_lead;
  for (std::size_t j = 0; j < sp.q.size(); ++j) {
    even += static_cast<long>(j) * sp.q[j];
    if (sp.q[j] % 2 == 1) ++odd_q;
  }
  even += ratio(odd_q, 2);
  even.canonicalize();
  return even;
}

}  // namespace

Dims dim_formula_osp(const SuperPartition& sp) {
  require_orthosymplectic(sp);
  const Rational even = osp_even_terms(sp, Rational(sp.n() / 2));
  long odd = 0;
  for (int a : sp.p) {
    for (int b : sp.q) odd += std::min(a, b);
  }
  return {to_long(even), odd};
}

Rational dim_formula_osp_even_literal(const SuperPartition& sp) {
  require_orthosymplectic(sp);
  return osp_even_terms(sp, ratio(sp.n() / 2, 2));
}

Sl2Triple complete_sl2(RealizationPtr r, const AlgebraElement& e, const AlgebraElement& h) {
  const Grading g = grading_from(h);
  std::vector<std::size_t> candidates;
  for (std::size_t b = 0; b < r->dim(); ++b) {
    if (r->basis(b).parity == Parity::even && g.degree(b) == -2) candidates.push_back(b);
  }
  Matrix a(r->dim(), candidates.size());
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    Vector col = r->coordinates(r->bracket(e.matrix, r->basis(candidates[c]).matrix));
    for (std::size_t i = 0; i < r->dim(); ++i) a(i, c) = col[i];
  }
  const Vector target = r->coordinates(h.matrix);
  auto x = solve(a, target);
  if (!x) throw NotCompletable("no f with [e,f] = h in degree -2");
  Matrix f(r->size(), r->size());
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    if ((*x)[c] != 0) f += r->basis(candidates[c]).matrix * (*x)[c];
  }
  if (r->bracket(e.matrix, f) != h.matrix) throw NotCompletable("h is not in the algebra");
  return {e, AlgebraElement{r, std::move(f)}, h};
}

CentralizerReport s_centralizer(RealizationPtr r, const Sl2Triple& s) {
  CentralizerReport report = kernel_report(r, {adjoint_matrix(s.e), adjoint_matrix(s.f), adjoint_matrix(s.h)});
  return report;
}

std::vector<BlockType> predicted_s_centralizer(AlgebraKind kind, const SuperPartition& sp) {
  std::vector<BlockType> blocks;
  for (const auto& g : part_grouping(sp)) {
    if (kind == AlgebraKind::gl) {
      blocks.push_back({AlgebraKind::gl, g.m, g.n});
    } else if (g.part % 2 == 1) {
      blocks.push_back({AlgebraKind::osp, g.m, g.n});
    } else {
      blocks.push_back({AlgebraKind::osp, g.n, g.m});
    }
  }
  return blocks;
}

GoodnessChecker::GoodnessChecker(RealizationPtr r, const AlgebraElement& e)
    : r_(std::move(r)), e_coords_(r_->coordinates(e.matrix)), ad_e_(adjoint_matrix(e)),
      kernel_(kernel_basis(ad_e_)) {}

bool GoodnessChecker::in_degree_two(const Grading& g) const {
  for (std::size_t i = 0; i < e_coords_.size(); ++i) {
    if (e_coords_[i] != 0 && g.degree(i) != 2) return false;
  }
  return true;
}

GoodnessChecker::Verdict GoodnessChecker::check(const Grading& g) const {
  if (g.ambient() != r_) throw AmbientMismatch();
  Verdict v{in_degree_two(g), true, true};

  for (const auto& k : kernel_) {
    for (std::size_t i = 0; i < k.size() && v.kernel_criterion; ++i) {
      if (k[i] != 0 && g.degree(i) < 0) v.kernel_criterion = false;
    }
  }

  std::map<int, std::vector<std::size_t>> by_degree;
  for (std::size_t i = 0; i < r_->dim(); ++i) by_degree[g.degree(i)].push_back(i);
  std::set<int> sources;
  for (const auto& [d, idx] : by_degree) {
    sources.insert(d);
    sources.insert(d - 2);
  }
  static const std::vector<std::size_t> none;
  for (int j : sources) {
    auto src = by_degree.find(j);
    auto dst = by_degree.find(j + 2);
    const auto& cols = src == by_degree.end() ? none : src->second;
    const auto& rows = dst == by_degree.end() ? none : dst->second;
    const std::size_t rk = rank(submatrix(ad_e_, rows, cols));
    if (j <= -1 && rk != cols.size()) v.rank_criterion = false;
    if (j >= -1 && rk != rows.size()) v.rank_criterion = false;
    if (!v.rank_criterion) break;
  }
  return v;
}

bool GoodnessChecker::is_good(const Grading& g) const {
  const Verdict v = check(g);
  if (!v.in_degree_two) return false;
  if (v.kernel_criterion != v.rank_criterion) {
    throw std::logic_error("kernel and rank criteria disagree");
  }
  return v.kernel_criterion;
}

bool GoodnessChecker::is_richardson(const Grading& g) const {
  if (!g.is_even()) throw OddGrading("grading has odd degrees");
  if (!in_degree_two(g)) return false;
  std::vector<std::size_t> nonneg;
  std::vector<std::size_t> positive;
  for (std::size_t i = 0; i < r_->dim(); ++i) {
    if (g.degree(i) >= 0) nonneg.push_back(i);
    if (g.degree(i) > 0) positive.push_back(i);
  }
  return rank(submatrix(ad_e_, positive, nonneg)) == positive.size();
}

bool is_good(const Grading& g, const AlgebraElement& e) { return GoodnessChecker(g.ambient(), e).is_good(g); }

bool is_richardson(const Grading& g, const AlgebraElement& e) {
  return GoodnessChecker(g.ambient(), e).is_richardson(g);
}

std::size_t form_violations(const Grading& g) {
  const Realization& r = *g.ambient();
  struct Entry {
    std::size_t i, j;
    Rational v;
  };
  std::vector<std::vector<Entry>> entries(r.dim());
  for (std::size_t b = 0; b < r.dim(); ++b) {
    const auto& m = r.basis(b).matrix;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (m(i, j) != 0) entries[b].push_back({i, j, m(i, j)});
      }
    }
  }
  std::size_t violations = 0;
  for (std::size_t a = 0; a < r.dim(); ++a) {
    for (std::size_t b = 0; b < r.dim(); ++b) {
      if (g.degree(a) + g.degree(b) == 0) continue;
      // str(x y) = sum over i of sign(i) * sum_j x_ij y_ji
      Rational s;
      for (const auto& x : entries[a]) {
        for (const auto& y : entries[b]) {
          if (x.j == y.i && y.j == x.i) {
            if (r.index_parity(x.i) == Parity::even) {
              s += x.v * y.v;
            } else {
              s -= x.v * y.v;
            }
          }
        }
      }
      if (s != 0) ++violations;
    }
  }
  return violations;
}

}  // namespace supergrading
