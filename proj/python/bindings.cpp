#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "supergrading/classification.hpp"
#include "supergrading/errors.hpp"
#include "supergrading/roots.hpp"
#include "supergrading/selftest.hpp"
#include "supergrading/serialization.hpp"

namespace py = pybind11;
using namespace supergrading;

namespace {

RealizationPtr algebra(const std::string& kind, int m, int n) {
  if (kind == "gl") return build_gl(m, n);
  if (kind == "osp") {
    if (n % 2) throw py::value_error("osp takes m and 2n");
    return build_osp(m, n / 2);
  }
  throw py::value_error("kind must be 'gl' or 'osp'");
}

Vector rationals(const std::vector<std::string>& h) {
  Vector out;
  for (const auto& s : h) out.push_back(parse_rational(s));
  return out;
}

ElementPair dynkin_pair(const RealizationPtr& r, const SuperPartition& sp) {
  if (r->kind() == AlgebraKind::gl) return realize_pyramid(dynkin_pyramid(sp), r);
  return realize_osp_pyramid(dynkin_pyramid_osp(sp), r);
}

std::string classify(const std::string& kind, const Partition& p, const Partition& q, bool oracle) {
  const SuperPartition sp{p, q};
  if (kind == "gl") {
    const auto set = good_gradings_gl(sp);
    Json j = to_json(set);
    if (oracle) {
      j["oracle_agreement"] =
          brute_force_shifts(set.ambient, sp, std::max(1, max_part(sp))).degree_maps() == set.degree_maps();
    }
    return j.dump();
  }
  if (kind == "osp") return to_json(classify_osp(sp, oracle)).dump();
  throw py::value_error("kind must be 'gl' or 'osp'");
}

py::dict verify(const std::string& kind, int m, int n, const std::vector<std::string>& h, const Partition& p,
                const Partition& q) {
  auto r = algebra(kind, m, n);
  const SuperPartition sp{p, q};
  const auto pair = dynkin_pair(r, sp);
  const auto g = grading_from(r, rationals(h));
  GoodnessChecker checker(r, pair.e);
  const auto v = checker.check(g);
  py::dict out;
  out["good"] = v.good();
  out["in_degree_two"] = v.in_degree_two;
  out["kernel_criterion"] = v.kernel_criterion;
  out["rank_criterion"] = v.rank_criterion;
  return out;
}

std::pair<std::size_t, std::size_t> centralizer_dims(const std::string& kind, int m, int n, const Partition& p,
                                                     const Partition& q) {
  auto r = algebra(kind, m, n);
  const auto rep = centralizer(r, dynkin_pair(r, {p, q}).e);
  return {rep.even_dim, rep.odd_dim};
}

std::pair<long, long> dim_formula(const std::string& kind, const Partition& p, const Partition& q) {
  const Dims d = kind == "gl" ? dim_formula_gl({p, q}) : dim_formula_osp({p, q});
  return {d.even, d.odd};
}

std::string characteristic(const std::string& kind, int m, int n, const std::vector<std::string>& h) {
  auto r = algebra(kind, m, n);
  return to_json(find_nonnegative_base(grading_from(r, rationals(h)))).dump();
}

std::vector<std::string> pyramids(const Partition& p, const Partition& q) {
  std::vector<std::string> out;
  for (const auto& pyr : enumerate_pyr({p, q})) out.push_back(to_json(pyr).dump());
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Good Z-gradings of gl(m|n) and osp(m|2n)";

  py::register_exception<NonIntegralGrading>(m, "NonIntegralGrading", PyExc_ValueError);
  py::register_exception<NotOrthosymplectic>(m, "NotOrthosymplectic", PyExc_ValueError);

  m.def("classify_json", &classify, py::arg("kind"), py::arg("p"), py::arg("q"), py::arg("oracle") = false);
  m.def("verify", &verify, py::arg("kind"), py::arg("m"), py::arg("n"), py::arg("h"), py::arg("p"), py::arg("q"));
  m.def("centralizer_dims", &centralizer_dims, py::arg("kind"), py::arg("m"), py::arg("n"), py::arg("p"),
        py::arg("q"));
  m.def("dim_formula", &dim_formula, py::arg("kind"), py::arg("p"), py::arg("q"));
  m.def("characteristic_json", &characteristic, py::arg("kind"), py::arg("m"), py::arg("n"), py::arg("h"));
  m.def("pyramids_json", &pyramids, py::arg("p"), py::arg("q"));
  m.def("is_orthosymplectic", [](const Partition& p, const Partition& q) { return is_orthosymplectic({p, q}); });
  m.def(
      "run_criterion",
      [](int id, int max_size) {
        const auto r = run_criterion(id, {max_size});
        return py::make_tuple(r.passed, r.seconds, r.detail);
      },
      py::arg("id"), py::arg("max_size") = 6);
}
