#include <CLI11.hpp>

#include <cctype>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "supergrading/classification.hpp"
#include "supergrading/errors.hpp"
#include "supergrading/roots.hpp"
#include "supergrading/selftest.hpp"
#include "supergrading/serialization.hpp"

using namespace supergrading;

namespace {

// Bad command-line input; reported with the offending flag, exit 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct AlgebraArgs {
  std::string kind;
  int m = 0;
  int n = 0;  // n for gl(m|n), 2n for osp(m|2n)
};

RealizationPtr make_algebra(const AlgebraArgs& a) {
  try {
    if (a.kind == "gl") return build_gl(a.m, a.n);
    if (a.n % 2 != 0) throw UsageError("osp takes m and 2n; " + std::to_string(a.n) + " is odd");
    return build_osp(a.m, a.n / 2);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

SuperPartition parse_orbit(const std::string& text, const Realization& r) {
  SuperPartition sp;
  try {
    sp = super_partition_from_json(Json::parse(text));
  } catch (const std::exception& e) {
    throw UsageError(std::string("--orbit: ") + e.what());
  }
  if (sp.m() != r.m() || sp.n() != r.odd_dim()) {
    throw UsageError("--orbit: sizes " + std::to_string(sp.m()) + "|" + std::to_string(sp.n()) + " do not fit " +
                     r.name());
  }
  if (r.kind() == AlgebraKind::osp && !is_orthosymplectic(sp)) {
    throw UsageError("--orbit: not an orthosymplectic partition");
  }
  return sp;
}

Vector parse_h(const std::string& text, const Realization& r) {
  Vector h;
  try {
    for (const auto& v : Json::parse(text)) h.push_back(rational_from_json(v));
  } catch (const std::exception& e) {
    throw UsageError(std::string("--H: ") + e.what());
  }
  if (h.size() != r.size()) {
    throw UsageError("--H: " + std::to_string(h.size()) + " entries, " + r.name() + " needs " +
                     std::to_string(r.size()));
  }
  return h;
}

// Sums of terms c*E_{i,j}; accepts E12, E_{1,2}, 2E1,2-E2,3 and signed labels E_{1,-2}.
Matrix parse_e(const std::string& text, const Realization& r) {
  Matrix x(r.size(), r.size());
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) -> UsageError {
    return UsageError("--e: " + why + " at position " + std::to_string(pos) + " in '" + text + "'");
  };
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_int = [&]() -> int {
    skip();
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    const std::size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits) throw fail("expected a label");
    return std::stoi(text.substr(start, pos - start));
  };
  skip();
  if (text.substr(pos) == "0") return x;
  bool first = true;
  while (pos < text.size()) {
    skip();
    Rational coef = 1;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      if (text[pos] == '-') coef = -1;
      ++pos;
    } else if (!first) {
      throw fail("expected + or -");
    }
    skip();
    std::size_t start = pos;
    while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/')) ++pos;
    if (pos > start) coef *= parse_rational(text.substr(start, pos - start));
    skip();
    if (pos < text.size() && text[pos] == '*') ++pos;
    skip();
    if (pos >= text.size() || text[pos] != 'E') throw fail("expected E");
    ++pos;
    if (pos < text.size() && text[pos] == '_') ++pos;
    const bool braced = pos < text.size() && text[pos] == '{';
    if (braced) ++pos;
    int row = 0;
    int col = 0;
    const std::size_t label_start = pos;
    std::size_t label_end = label_start;
    while (label_end < text.size() && (std::isdigit(static_cast<unsigned char>(text[label_end])))) ++label_end;
    const bool compact = label_end - label_start == 2 && (label_end == text.size() || text[label_end] != ',');
    if (compact) {
      row = text[label_start] - '0';
      col = text[label_start + 1] - '0';
      pos = label_end;
    } else {
      row = read_int();
      skip();
      if (pos >= text.size() || text[pos] != ',') throw fail("expected ,");
      ++pos;
      col = read_int();
    }
    if (braced) {
      skip();
      if (pos >= text.size() || text[pos] != '}') throw fail("expected }");
      ++pos;
    }
    if (!r.has_label(row) || !r.has_label(col)) {
      throw fail("no basis vector with label " + std::to_string(r.has_label(row) ? col : row));
    }
    x += r.unit(row, col, coef);
    first = false;
    skip();
  }
  return x;
}

void emit(const Json& j, bool pretty) { std::cout << (pretty ? j.dump(2) : j.dump()) << '\n'; }

std::string h_string(const Vector& h) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < h.size(); ++i) out << (i ? "," : "") << to_string(h[i]);
  out << ']';
  return out.str();
}

int run_classify(const AlgebraArgs& a, const std::string& orbit, bool oracle, std::optional<int> bound,
                 const std::string& format, bool pretty) {
  auto r = make_algebra(a);
  const SuperPartition sp = parse_orbit(orbit, *r);
  const int b = bound.value_or(std::max(1, max_part(sp)));
  if (b < max_part(sp)) throw UsageError("--bound: must be at least the largest part " + std::to_string(max_part(sp)));
  Json report;
  GoodGradingSet set;
  if (r->kind() == AlgebraKind::gl) {
    set = good_gradings_gl(sp);
    report = to_json(set);
    if (oracle) {
      const GoodGradingSet o = brute_force_shifts(r, sp, b);
      report["oracle_agreement"] = o.degree_maps() == set.degree_maps();
    }
  } else {
    const OspClassification c = classify_osp(sp, oracle);
    set = c.gradings;
    report = to_json(c);
  }
  if (format == "json") {
    emit(report, pretty);
    return 0;
  }
  std::cout << set.ambient->name() << "  orbit " << Json(to_json(sp)).dump() << "  " << set.size()
            << " good gradings\n";
  if (report.contains("case")) std::cout << "case " << report["case"].get<std::string>() << '\n';
  if (report.contains("oracle_agreement")) std::cout << "oracle agreement " << report["oracle_agreement"].dump() << '\n';
  std::size_t i = 0;
  for (const auto& rec : set.members) {
    std::cout << '\n' << '#' << ++i << "  H = " << h_string(rec.grading.h()) << '\n';
    if (rec.pyramid) {
      std::cout << (format == "svg" ? render_svg(*rec.pyramid) : render(*rec.pyramid));
    } else if (!rec.shift.empty()) {
      std::cout << "shift " << h_string(rec.shift) << '\n';
    }
  }
  return 0;
}

int run_verify(const AlgebraArgs& a, const std::string& h_text, const std::string& e_text, const std::string& orbit,
               bool pretty) {
  auto r = make_algebra(a);
  const Vector h = parse_h(h_text, *r);
  AlgebraElement e;
  if (!e_text.empty()) {
    Matrix x = parse_e(e_text, *r);
    try {
      e = make_element(r, std::move(x));
    } catch (const MembershipFailure& err) {
      throw UsageError(std::string("--e: ") + err.what());
    }
  } else if (!orbit.empty()) {
    const SuperPartition sp = parse_orbit(orbit, *r);
    e = r->kind() == AlgebraKind::gl ? realize_pyramid(dynkin_pyramid(sp), r).e
                                     : realize_osp_pyramid(dynkin_pyramid_osp(sp), r).e;
  } else {
    throw UsageError("verify needs --e or --orbit");
  }
  Json report{{"algebra", r->name()}, {"H", Json::array()}};
  for (const auto& v : h) report["H"].push_back(to_json(v));
  std::optional<Grading> g;
  try {
    g = grading_from(r, h);
  } catch (const NonIntegralGrading& err) {
    report["good"] = false;
    report["error"] = err.what();
    emit(report, pretty);
    return 1;
  } catch (const MembershipFailure& err) {
    throw UsageError(std::string("--H: ") + err.what());
  }
  GoodnessChecker checker(r, e);
  const auto v = checker.check(*g);
  report["good"] = v.good();
  report["in_degree_two"] = v.in_degree_two;
  report["kernel_criterion"] = v.kernel_criterion;
  report["rank_criterion"] = v.rank_criterion;
  if (g->is_even() && v.in_degree_two) report["richardson"] = checker.is_richardson(*g);
  report["degrees"] = to_json(*g)["degrees"];
  emit(report, pretty);
  return v.good() && v.kernel_criterion == v.rank_criterion ? 0 : 1;
}

int run_centralizer(const AlgebraArgs& a, const std::string& orbit, bool pretty) {
  auto r = make_algebra(a);
  const SuperPartition sp = parse_orbit(orbit, *r);
  const ElementPair pair = r->kind() == AlgebraKind::gl ? realize_pyramid(dynkin_pyramid(sp), r)
                                                        : realize_osp_pyramid(dynkin_pyramid_osp(sp), r);
  const auto rep = centralizer(r, pair.e);
  const Dims want = r->kind() == AlgebraKind::gl ? dim_formula_gl(sp) : dim_formula_osp(sp);
  const Sl2Triple s = complete_sl2(r, pair.e, pair.h);
  const auto sc = s_centralizer(r, s);
  Json blocks = Json::array();
  for (const auto& b : predicted_s_centralizer(r->kind(), sp)) {
    blocks.push_back(Json{{"even", b.even}, {"odd", b.odd}, {"dim", b.dim()}});
  }
  Json report{{"algebra", r->name()},
              {"orbit", to_json(sp)},
              {"even_dim", rep.even_dim},
              {"odd_dim", rep.odd_dim},
              {"formula", Json{{"even", want.even}, {"odd", want.odd}}},
              {"matches_formula", static_cast<long>(rep.even_dim) == want.even &&
                                      static_cast<long>(rep.odd_dim) == want.odd},
              {"s_centralizer", Json{{"even_dim", sc.even_dim}, {"odd_dim", sc.odd_dim}, {"blocks", blocks}}}};
  if (r->kind() == AlgebraKind::osp) report["formula_even_half_n"] = to_json(dim_formula_osp_even_literal(sp));
  emit(report, pretty);
  return report["matches_formula"].get<bool>() ? 0 : 1;
}

int run_pyramids(const AlgebraArgs& a, const std::string& orbit, const std::string& format, bool pretty) {
  auto r = make_algebra(a);
  const SuperPartition sp = parse_orbit(orbit, *r);
  if (r->kind() == AlgebraKind::osp) {
    const OspPyramid pyr = dynkin_pyramid_osp(sp);
    if (format == "json") {
      emit(to_json(pyr), pretty);
    } else {
      std::cout << (format == "svg" ? render_svg(pyr) : render(pyr, true));
    }
    return 0;
  }
  const auto all = enumerate_pyr(sp);
  if (format == "json") {
    Json list = Json::array();
    for (const auto& p : all) list.push_back(to_json(p));
    emit(Json{{"orbit", to_json(sp)}, {"count", all.size()}, {"pyramids", list}}, pretty);
    return 0;
  }
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (format == "svg") {
      std::cout << render_svg(all[i]);
    } else {
      std::cout << '#' << i + 1 << '\n' << render(all[i]) << '\n';
    }
  }
  return 0;
}

int run_diagram(const AlgebraArgs& a, const std::string& h_text, const std::string& orbit,
                const std::string& format, bool pretty) {
  auto r = make_algebra(a);
  Vector h;
  if (!h_text.empty()) {
    h = parse_h(h_text, *r);
  } else if (!orbit.empty()) {
    const SuperPartition sp = parse_orbit(orbit, *r);
    h = (r->kind() == AlgebraKind::gl ? realize_pyramid(dynkin_pyramid(sp), r).h
                                      : realize_osp_pyramid(dynkin_pyramid_osp(sp), r).h)
            .matrix.diagonal();
  } else {
    throw UsageError("diagram needs --H or --orbit");
  }
  const std::optional<Grading> g = try_grading_from(r, h);
  if (!g) throw UsageError("--H: the grading is not integral");
  const RootSystem rs = build_roots(*r);
  const MarkedBase b = find_nonnegative_base(rs, degree_map(*g), standard_base(rs));
  const auto cls = equivalence_class(rs, b);
  if (format == "json") {
    Json j = to_json(b);
    j["class_size"] = cls.size();
    emit(j, pretty);
    return 0;
  }
  auto name = [&](const Root& root) {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < root.coeffs.size(); ++i) {
      const int c = root.coeffs[i];
      if (c == 0) continue;
      out << (c < 0 ? "-" : (first ? "" : "+"));
      if (std::abs(c) != 1) out << std::abs(c);
      if (static_cast<int>(i) < rs.eps) {
        out << "e" << i + 1;
      } else {
        out << "d" << static_cast<int>(i) - rs.eps + 1;
      }
      first = false;
    }
    return out.str();
  };
  for (std::size_t i = 0; i < b.simple.size(); ++i) {
    const char* shape = b.simple[i].parity == Parity::even ? "o" : (is_isotropic(rs, b.simple[i]) ? "x" : "*");
    std::cout << (i ? " -- " : "") << shape << '(' << name(b.simple[i]) << ")[" << b.marks[i] << ']';
  }
  std::cout << "\nclass size " << cls.size() << '\n';
  return 0;
}

int run_selftest(int max_size) {
  bool ok = true;
  for (const auto& r : run_acceptance({max_size})) {
    std::cout << format_result(r) << std::endl;
    ok = ok && r.passed;
  }
  return ok ? 0 : 1;
}

void add_algebra(CLI::App* sub, AlgebraArgs& a) {
  sub->add_option("algebra", a.kind, "gl or osp")->required()->check(CLI::IsMember({"gl", "osp"}));
  sub->add_option("m", a.m, "dimension of the even part")->required();
  sub->add_option("n", a.n, "dimension of the odd part (2n for osp)")->required();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Good Z-gradings of gl(m|n) and osp(m|2n)"};
  app.require_subcommand(1);

  AlgebraArgs alg;
  std::string orbit;
  std::string h_text;
  std::string e_text;
  std::string format = "json";
  std::optional<int> bound;
  bool pretty = false;
  bool oracle = false;
  int max_size = 6;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "json, text or svg")->check(CLI::IsMember({"json", "text", "svg"}));
    sub->add_flag("--pretty", pretty, "indented JSON");
  };

  auto* classify = app.add_subcommand("classify", "list the good gradings for a nilpotent orbit");
  add_algebra(classify, alg);
  classify->add_option("--orbit", orbit, R"(partition pair, e.g. {"p":[3,1],"q":[4,2]})")->required();
  classify->add_flag("--oracle", oracle, "also run the brute-force search");
  classify->add_option("--bound", bound, "search bound for --oracle");
  add_format(classify);

  auto* verify = app.add_subcommand("verify", "check whether H defines a good grading for e");
  add_algebra(verify, alg);
  verify->add_option("--H", h_text, "diagonal of H as a JSON array")->required();
  verify->add_option("--e", e_text, "nilpotent, e.g. E12 or E_{1,2}-2E_{2,3}");
  verify->add_option("--orbit", orbit, "use the pyramid nilpotent of this orbit");
  verify->add_flag("--pretty", pretty, "indented JSON");

  auto* central = app.add_subcommand("centralizer", "centralizer dimensions for an orbit");
  add_algebra(central, alg);
  central->add_option("--orbit", orbit, "partition pair")->required();
  central->add_flag("--pretty", pretty, "indented JSON");

  auto* pyramids = app.add_subcommand("pyramids", "pyramids of an orbit");
  add_algebra(pyramids, alg);
  pyramids->add_option("--orbit", orbit, "partition pair")->required();
  add_format(pyramids);

  auto* diagram = app.add_subcommand("diagram", "characteristic of a grading");
  add_algebra(diagram, alg);
  diagram->add_option("--H", h_text, "diagonal of H");
  diagram->add_option("--orbit", orbit, "use the Dynkin grading of this orbit");
  add_format(diagram);

  auto* selftest = app.add_subcommand("selftest", "run the acceptance suite");
  selftest->add_option("--max-size", max_size, "largest m+n for the gl scans")->check(CLI::Range(2, 8));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*classify) return run_classify(alg, orbit, oracle, bound, format, pretty);
    if (*verify) return run_verify(alg, h_text, e_text, orbit, pretty);
    if (*central) return run_centralizer(alg, orbit, pretty);
    if (*pyramids) return run_pyramids(alg, orbit, format, pretty);
    if (*diagram) return run_diagram(alg, h_text, orbit, format, pretty);
    if (*selftest) return run_selftest(max_size);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
