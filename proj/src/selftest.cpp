#include "supergrading/selftest.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

#include "supergrading/classification.hpp"
#include "supergrading/roots.hpp"

namespace supergrading {

namespace {

struct Tally {
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string first_failure;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    if (failures == 0) first_failure = what;
    ++failures;
  }
  bool ok() const { return failures == 0; }
  std::string summary() const {
    std::ostringstream out;
    out << checks - failures << '/' << checks << " checks";
    if (failures) out << "; first failure: " << first_failure;
    return out.str();
  }
};

std::string str(const Partition& p) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < p.size(); ++i) out << (i ? "," : "") << p[i];
  out << ')';
  return out.str();
}

std::string str(const SuperPartition& sp) { return str(sp.p) + "|" + str(sp.q); }

std::vector<SuperPartition> gl_orbits(int max_size) {
  std::vector<SuperPartition> out;
  for (int total = 1; total <= max_size; ++total) {
    for (int m = 0; m <= total; ++m) {
      for (auto& sp : enumerate_super_partitions(m, total - m)) out.push_back(sp);
    }
  }
  return out;
}

// (m, n, orbit) for osp(m|2n), m, n >= 1.
struct OspOrbit {
  int m;
  int n;
  SuperPartition sp;
};

std::vector<OspOrbit> osp_orbits(int max_size) {
  std::vector<OspOrbit> out;
  for (int m = 1; m + 2 <= max_size; ++m) {
    for (int n = 1; m + 2 * n <= max_size; ++n) {
      for (auto& sp : enumerate_orthosymplectic(m, n)) out.push_back({m, n, sp});
    }
  }
  return out;
}

RealizationPtr gl_for(const SuperPartition& sp) { return build_gl(sp.m(), sp.n()); }

Partition merged(const SuperPartition& sp) {
  Partition r;
  for (const auto& t : psi_merge(sp)) r.push_back(t.length);
  return r;
}

long dual_square_sum(const SuperPartition& sp) {
  long s = 0;
  for (int d : dual_partition(merged(sp))) s += static_cast<long>(d) * d;
  return s;
}

Pyramid expected_pyramid(std::initializer_list<int> firsts) {
  const int lengths[] = {4, 3, 2, 1};
  const Parity parities[] = {Parity::odd, Parity::even, Parity::odd, Parity::even};
  Pyramid p;
  int i = 0;
  for (int f : firsts) {
    p.rows.push_back({lengths[i], parities[i], f});
    ++i;
  }
  return p;
}

const SuperPartition kMain{{3, 1}, {4, 2}};

// The Dynkin grading of g0 for the main orbit has three good extensions.
std::string criterion_1(Tally& t) {
  const int fp[] = {-2, 0};
  const int fq[] = {-3, -1};
  const Pyramid ep = single_parity_pyramid({3, 1}, fp, Parity::even);
  const Pyramid eq = single_parity_pyramid({4, 2}, fq, Parity::odd);
  const GoodGradingSet ext = extensions_of_even_grading(kMain, ep, eq);
  t.expect(ext.size() == 3, "expected 3 extensions, got " + std::to_string(ext.size()));

  std::set<std::vector<PyramidRow>> got;
  for (const auto& rec : ext.members) {
    t.expect(rec.pyramid.has_value(), "extension without a pyramid");
    if (rec.pyramid) got.insert(rec.pyramid->rows);
  }
  std::set<std::vector<PyramidRow>> want;
  for (auto firsts : {std::vector<int>{-3, -3, -1, -1}, {-3, -2, -1, 0}, {-3, -1, -1, 1}}) {
    want.insert(expected_pyramid({firsts[0], firsts[1], firsts[2], firsts[3]}).rows);
  }
  t.expect(got == want, "extension pyramids differ from the three expected ones");
  GoodnessChecker checker(ext.ambient, ext.e);
  for (const auto& rec : ext.members) t.expect(checker.is_good(rec.grading), "extension not good");
  return std::to_string(ext.size()) + " extensions";
}

// The shifted even grading with no good extension.
std::string criterion_2(Tally& t) {
  const int fp[] = {-2, -2};
  const int fq[] = {-3, 1};
  const Pyramid ep = single_parity_pyramid({3, 1}, fp, Parity::even);
  const Pyramid eq = single_parity_pyramid({4, 2}, fq, Parity::odd);
  t.expect(ep.is_valid() && eq.is_valid(), "even pyramids are not pyramids");
  const GoodGradingSet ext = extensions_of_even_grading(kMain, ep, eq);
  t.expect(ext.size() == 0, "expected 0 extensions, got " + std::to_string(ext.size()));
  return std::to_string(ext.size()) + " extensions";
}

std::string criterion_3(Tally& t, int max_size) {
  std::size_t orbits = 0;
  for (const auto& sp : gl_orbits(max_size)) {
    auto r = gl_for(sp);
    auto pair = realize_pyramid(dynkin_pyramid(sp), r);
    const auto rep = centralizer(r, pair.e);
    const Dims want = dim_formula_gl(sp);
    const std::string tag = "gl " + str(sp);
    t.expect(static_cast<long>(rep.even_dim) == want.even, tag + " even dim");
    t.expect(static_cast<long>(rep.odd_dim) == want.odd, tag + " odd dim");
    t.expect(static_cast<long>(rep.even_dim + rep.odd_dim) == dual_square_sum(sp), tag + " total dim");
    ++orbits;
  }
  return std::to_string(orbits) + " orbits with m+n <= " + std::to_string(max_size);
}

std::string criterion_4(Tally& t, int max_size) {
  auto orbits = gl_orbits(max_size);
  if (std::find(orbits.begin(), orbits.end(), kMain) == orbits.end()) orbits.push_back(kMain);
  std::size_t saturation = 0;
  for (const auto& sp : orbits) {
    const GoodGradingSet pyr = good_gradings_gl(sp);
    OracleStats stats;
    const int bound = std::max(1, max_part(sp));
    const GoodGradingSet oracle = brute_force_shifts(pyr.ambient, sp, bound, &stats);
    const std::string tag = "gl " + str(sp);
    t.expect(pyr.degree_maps() == oracle.degree_maps(),
             tag + ": " + std::to_string(pyr.size()) + " pyramid gradings vs " + std::to_string(oracle.size()) +
                 " from the oracle");
    t.expect(stats.disagreements == 0, tag + ": goodness criteria disagree");
    if (sp.m() + sp.n() <= 4) {
      const GoodGradingSet wider = brute_force_shifts(pyr.ambient, sp, bound + 2);
      t.expect(wider.degree_maps() == oracle.degree_maps(), tag + ": larger bound adds gradings");
      ++saturation;
    }
  }
  const std::size_t count = good_gradings_gl(kMain).size();
  t.expect(count == 27, "main orbit has " + std::to_string(count) + " pyramid gradings");
  return std::to_string(orbits.size()) + " orbits, " + std::to_string(saturation) +
         " saturation checks, main orbit count " + std::to_string(count);
}

std::string criterion_5(Tally& t, int max_size) {
  std::size_t orbits = 0;
  std::vector<std::string> literal_mismatch;
  for (const auto& o : osp_orbits(max_size)) {
    auto r = build_osp(o.m, o.n);
    const std::string tag = r->name() + " " + str(o.sp);
    auto pair = realize_osp_pyramid(dynkin_pyramid_osp(o.sp), r);
    t.expect(is_member_osp(*r, pair.e.matrix, Parity::even), tag + ": e not in osp");
    t.expect(nilpotent_jordan_type(parity_block(*r, pair.e.matrix, Parity::even)) == o.sp.p,
             tag + ": Jordan type on V0");
    t.expect(nilpotent_jordan_type(parity_block(*r, pair.e.matrix, Parity::odd)) == o.sp.q,
             tag + ": Jordan type on V1");
    const Grading g = grading_from(pair.h);
    GoodnessChecker checker(r, pair.e);
    const auto v = checker.check(g);
    t.expect(v.good() && v.rank_criterion, tag + ": Dynkin grading not good");
    const auto rep = centralizer(r, pair.e);
    const Dims want = dim_formula_osp(o.sp);
    t.expect(static_cast<long>(rep.even_dim) == want.even,
             tag + ": even dim " + std::to_string(rep.even_dim) + " vs formula " + std::to_string(want.even));
    t.expect(static_cast<long>(rep.odd_dim) == want.odd,
             tag + ": odd dim " + std::to_string(rep.odd_dim) + " vs formula " + std::to_string(want.odd));
    if (dim_formula_osp_even_literal(o.sp) != Rational(static_cast<long>(rep.even_dim))) {
      literal_mismatch.push_back(str(o.sp));
    }
    ++orbits;
  }
  std::ostringstream out;
  out << orbits << " orbits with m+2n <= " << max_size << "; the n/2 reading of the even formula disagrees on "
      << literal_mismatch.size();
  if (!literal_mismatch.empty()) out << " (e.g. " << literal_mismatch.front() << ")";
  return out.str();
}

std::string criterion_6(Tally& t, int max_size) {
  const SuperPartition spot{{3, 3}, {4}};
  const auto c = classify_osp(spot, true);
  t.expect(c.gradings.size() == 3, "(3,3|4): " + std::to_string(c.gradings.size()) + " gradings");
  t.expect(c.closed_form.size() == 3, "(3,3|4): closed form gives " + std::to_string(c.closed_form.size()));
  t.expect(c.closed_form_matches_oracle.value_or(false), "(3,3|4): closed form and oracle differ");
  t.expect(c.shift_case == "even-i", "(3,3|4): case " + c.shift_case);
  std::set<Rational> s_values;
  for (const auto& rec : c.closed_form.members) {
    if (!rec.shift.empty()) s_values.insert(rec.shift[0]);
  }
  t.expect(s_values == std::set<Rational>{-1, 0, 1}, "(3,3|4): shifts are not {-1,0,1}");

  std::size_t empty = 0;
  std::size_t agree = 0;
  std::size_t total = 0;
  std::vector<std::string> disagree;
  auto visit = [&](const SuperPartition& sp) {
    const auto parts = cp_dq(sp);
    const auto cls = classify_osp(sp, true);
    ++total;
    if (cls.closed_form_matches_oracle.value_or(false)) {
      ++agree;
    } else {
      disagree.push_back(str(sp));
    }
    if (parts.c.empty() && parts.d.empty()) {
      ++empty;
      t.expect(cls.gradings.size() == 1, str(sp) + ": C and D empty but " + std::to_string(cls.gradings.size()) +
                                             " gradings");
    }
  };
  bool seen_named = false;
  for (const auto& o : osp_orbits(max_size)) {
    visit(o.sp);
    if (o.sp == SuperPartition{{5, 3, 1}, {3, 3}}) seen_named = true;
  }
  if (!seen_named) visit({{5, 3, 1}, {3, 3}});
  std::ostringstream out;
  out << "(3,3|4) -> " << c.gradings.size() << "; " << empty << " orbits with C and D empty; closed form agrees with "
      << "the oracle on " << agree << '/' << total;
  if (!disagree.empty()) out << " (differs on " << disagree.front() << ")";
  return out.str();
}

std::string criterion_7(Tally& t, int max_size) {
  std::size_t triples = 0;
  for (auto r : {build_gl(2, 1), build_osp(2, 1)}) {
    const std::size_t d = r->dim();
    for (std::size_t a = 0; a < d; ++a) {
      const auto x = basis_element(r, a);
      for (std::size_t b = 0; b < d; ++b) {
        const auto y = basis_element(r, b);
        const auto xy = superbracket(x, y);
        for (std::size_t c = 0; c < d; ++c) {
          const auto z = basis_element(r, c);
          const auto lhs = superbracket(x, superbracket(y, z));
          auto rhs = superbracket(xy, z).matrix;
          auto yxz = superbracket(y, superbracket(x, z)).matrix;
          if (r->basis(a).parity == Parity::odd && r->basis(b).parity == Parity::odd) {
            rhs -= yxz;
          } else {
            rhs += yxz;
          }
          const std::string tag = r->name() + " " + r->basis(a).name + "," + r->basis(b).name + "," +
                                  r->basis(c).name;
          t.expect(lhs.matrix == rhs, tag + ": Jacobi");
          t.expect(invariant_form(xy, z) == invariant_form(x, superbracket(y, z)), tag + ": form invariance");
          ++triples;
        }
      }
    }
  }

  std::size_t gradings = 0;
  std::size_t candidates = 0;
  std::size_t even_candidates = 0;
  std::size_t dynkin = 0;
  auto structural = [&](RealizationPtr r, const SuperPartition& sp, const ElementPair& pair) {
    const std::string tag = r->name() + " " + str(sp);
    const Sl2Triple s = complete_sl2(r, pair.e, pair.h);
    const auto sc = s_centralizer(r, s);
    for (const auto& x : sc.basis) {
      t.expect(superbracket(s.h, x).matrix.is_zero(), tag + ": s-centralizer outside degree 0");
    }
    long predicted = 0;
    for (const auto& b : predicted_s_centralizer(r->kind(), sp)) predicted += b.dim();
    t.expect(static_cast<long>(sc.basis.size()) == predicted, tag + ": s-centralizer dimension");
    ++dynkin;

    GoodnessChecker checker(r, pair.e);
    OracleObserver obs{[&](const Grading& g, const GoodnessChecker::Verdict& v) {
      ++candidates;
      t.expect(v.kernel_criterion == v.rank_criterion, tag + ": goodness criteria disagree");
      if (g.is_even() && v.in_degree_two) {
        ++even_candidates;
        t.expect(checker.is_richardson(g) == v.good(), tag + ": Richardson test differs from goodness");
      }
      if (v.good()) {
        t.expect(form_violations(g) == 0, tag + ": graded pieces not orthogonal");
        ++gradings;
      }
    }};
    brute_force_shifts(r, sp, std::max(1, max_part(sp)), nullptr, &obs);
  };
  for (const auto& sp : gl_orbits(max_size)) {
    auto r = gl_for(sp);
    structural(r, sp, realize_pyramid(dynkin_pyramid(sp), r));
  }
  for (const auto& o : osp_orbits(max_size + 2)) {
    auto r = build_osp(o.m, o.n);
    structural(r, o.sp, realize_osp_pyramid(dynkin_pyramid_osp(o.sp), r));
  }
  std::ostringstream out;
  out << triples << " basis triples; " << dynkin << " Dynkin pairs; " << candidates << " oracle candidates ("
      << even_candidates << " even); " << gradings << " good gradings";
  return out.str();
}

std::vector<Root> reversed_base(const RootSystem& rs) {
  // eps and delta interleaved differently from the standard order
  std::vector<long> values(static_cast<std::size_t>(rs.eps + rs.delta));
  long v = 2L * (rs.eps + rs.delta);
  if (rs.kind == AlgebraKind::gl) {
    for (int j = 0; j < rs.delta; ++j) values[static_cast<std::size_t>(rs.eps + j)] = v--;
    for (int i = 0; i < rs.eps; ++i) values[static_cast<std::size_t>(i)] = v--;
  } else {
    for (int i = 0; i < rs.eps; ++i) values[static_cast<std::size_t>(i)] = v--;
    for (int j = 0; j < rs.delta; ++j) values[static_cast<std::size_t>(rs.eps + j)] = v--;
  }
  return base_from_functional(rs, values);
}

std::string criterion_8(Tally& t, int max_size) {
  std::size_t involutions = 0;
  for (auto [kind, m, n] : {std::tuple{AlgebraKind::gl, 2, 1}, {AlgebraKind::gl, 2, 2}, {AlgebraKind::gl, 3, 2},
                            {AlgebraKind::osp, 2, 1}, {AlgebraKind::osp, 3, 1}, {AlgebraKind::osp, 4, 2},
                            {AlgebraKind::osp, 5, 2}}) {
    const RootSystem rs = build_roots(kind, m, n);
    for (const auto& start : {standard_base(rs), reversed_base(rs)}) {
      t.expect(is_base(rs, start), "generated base is not a base");
      MarkedBase b{start, {}};
      for (std::size_t i = 0; i < start.size(); ++i) b.marks.push_back(static_cast<int>(2 * i) - 3);
      for (std::size_t k = 0; k < start.size(); ++k) {
        if (!is_isotropic(rs, start[k])) continue;
        const MarkedBase once = reflect_marked(rs, b, k);
        t.expect(is_base(rs, once.simple), "odd reflection does not give a base");
        t.expect(reflect_marked(rs, once, k) == b, "odd reflection is not an involution");
        ++involutions;
      }
    }
  }

  std::size_t gradings = 0;
  std::size_t singletons = 0;
  std::size_t classes = 0;
  auto visit = [&](const Grading& g, const std::string& tag) {
    const RootSystem rs = build_roots(*g.ambient());
    const DegreeMap deg = degree_map(g);
    const MarkedBase b = find_nonnegative_base(rs, deg, standard_base(rs));
    t.expect(is_base(rs, b.simple), tag + ": characteristic base is not a base");
    for (int d : b.marks) t.expect(d >= 0 && d <= 2, tag + ": mark " + std::to_string(d));
    for (const auto& root : rs.roots) {
      const int d = deg.degree(root.coeffs);
      if (d >= 0) continue;
      const auto x = base_coordinates(b.simple, root.coeffs);
      t.expect(x && std::all_of(x->begin(), x->end(), [](const Rational& c) { return c <= 0; }),
               tag + ": negative-degree root is positive");
    }
    const MarkedBase other = find_nonnegative_base(rs, deg, reversed_base(rs));
    t.expect(marked_equivalent(rs, b, b), tag + ": not reflexive");
    t.expect(marked_equivalent(rs, b, other) && marked_equivalent(rs, other, b),
             tag + ": characteristics from two seeds not equivalent");
    const auto cls = equivalence_class(rs, b);
    ++classes;
    for (const auto& member : cls) {
      t.expect(marked_equivalent(rs, member, b), tag + ": not symmetric");
    }
    bool zero_isotropic = false;
    for (std::size_t i = 0; i < b.simple.size(); ++i) {
      if (b.marks[i] == 0 && is_isotropic(rs, b.simple[i])) zero_isotropic = true;
    }
    if (!zero_isotropic) {
      ++singletons;
      t.expect(cls.size() == 1, tag + ": class of size " + std::to_string(cls.size()) +
                                    " without a degree-zero isotropic root");
    }
    ++gradings;
  };
  for (const auto& sp : gl_orbits(max_size - 1)) {
    for (const auto& rec : good_gradings_gl(sp).members) visit(rec.grading, "gl " + str(sp));
  }
  for (const auto& o : osp_orbits(max_size + 3)) {
    for (const auto& rec : good_gradings_osp(o.sp).members) visit(rec.grading, "osp " + str(o.sp));
  }
  std::ostringstream out;
  out << involutions << " reflection involutions; " << gradings << " good gradings; " << classes << " classes ("
      << singletons << " with no degree-zero isotropic root)";
  return out.str();
}

struct CriterionInfo {
  const char* name;
  double limit;
};

const std::map<int, CriterionInfo> kCriteria = {
    {1, {"three extensions of the Dynkin even grading", 10}},
    {2, {"no extension of the shifted even grading", 10}},
    {3, {"gl centralizer dimensions", 60}},
    {4, {"pyramid gradings equal oracle gradings", 120}},
    {5, {"osp Dynkin pyramids and centralizers", 120}},
    {6, {"osp classification spot checks", 60}},
    {7, {"structural identities", 120}},
    {8, {"marked bases and reflections", 120}},
};

}  // namespace

CriterionResult run_criterion(int id, const SelftestOptions& options) {
  const auto it = kCriteria.find(id);
  if (it == kCriteria.end()) throw std::out_of_range("no criterion " + std::to_string(id));
  CriterionResult result{id, it->second.name, false, 0, it->second.limit, ""};
  const int size = options.max_size;
  Tally t;
  const auto start = std::chrono::steady_clock::now();
  std::string detail;
  try {
    switch (id) {
      case 1: detail = criterion_1(t); break;
      case 2: detail = criterion_2(t); break;
      case 3: detail = criterion_3(t, size); break;
      case 4: detail = criterion_4(t, size - 1); break;
      case 5: detail = criterion_5(t, size + 3); break;
      case 6: detail = criterion_6(t, size + 3); break;
      case 7: detail = criterion_7(t, size - 1); break;
      case 8: detail = criterion_8(t, size); break;
    }
  } catch (const std::exception& e) {
    t.expect(false, std::string("exception: ") + e.what());
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = result.seconds < result.time_limit;
  result.passed = t.ok() && in_time;
  std::ostringstream out;
  out << detail << (detail.empty() ? "" : "; ") << t.summary();
  if (!in_time) out << "; over the " << result.time_limit << " s limit";
  result.detail = out.str();
  return result;
}

std::vector<CriterionResult> run_acceptance(const SelftestOptions& options) {
  std::vector<CriterionResult> out;
  for (const auto& [id, info] : kCriteria) out.push_back(run_criterion(id, options));
  return out;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream out;
  out << "criterion " << r.id << ' ' << (r.passed ? "PASS" : "FAIL") << "  " << r.name << "  (" << std::fixed
      << std::setprecision(2) << r.seconds << " s)  " << r.detail;
  return out.str();
}

}  // namespace supergrading
