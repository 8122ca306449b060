#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ukb/catalog.hpp"
#include "ukb/gelfand.hpp"
#include "ukb/harness.hpp"
#include "ukb/hereditary.hpp"

namespace py = pybind11;
using namespace ukb;

namespace {

py::dict clause_dict(const CheckClause& c) {
  py::dict d;
  d["name"] = c.name;
  d["pass"] = c.pass;
  d["max_residual"] = c.max_residual;
  d["witness"] = c.witness;
  return d;
}

py::list report_list(const CheckReport& r) {
  py::list out;
  for (const auto& c : r.clauses) {
    out.append(clause_dict(c));
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_ukblab, m) {
  m.doc() = "finite-dimensional C*-algebras as uniform Kahler bundles";

  py::register_exception<UkbError>(m, "UkbError");

  py::class_<BlockDescriptor>(m, "Block")
      .def_readonly("index", &BlockDescriptor::index)
      .def_readonly("n", &BlockDescriptor::n)
      .def_readonly("multiplicity", &BlockDescriptor::multiplicity);

  py::class_<FdCStarAlgebra, std::shared_ptr<FdCStarAlgebra>>(m, "Algebra")
      .def_readonly("ambient_dim", &FdCStarAlgebra::ambient_dim)
      .def_property_readonly("dim", &FdCStarAlgebra::dim)
      .def_readonly("basis", &FdCStarAlgebra::basis)
      .def_readonly("unit", &FdCStarAlgebra::unit)
      .def_readonly("blocks", &FdCStarAlgebra::blocks)
      .def("member", &FdCStarAlgebra::member)
      .def("irrep", &FdCStarAlgebra::irrep)
      .def("embed_irrep", &FdCStarAlgebra::embed_irrep);

  m.def(
      "generate_algebra",
      [](Eigen::Index n, const std::vector<Matrix>& gens) {
        return generate_algebra(n, gens);
      },
      py::arg("ambient_dim"), py::arg("generators"));

  m.def("catalog", []() {
    py::dict d;
    for (const auto& entry : builtin_catalog()) {
      d[entry.name.c_str()] = entry.algebra;
    }
    return d;
  });

  py::class_<State>(m, "State")
      .def_readonly("values", &State::values)
      .def_readonly("is_pure", &State::is_pure)
      .def("__call__", [](const State& s, const Matrix& x) { return s(x); })
      .def("fiber", [](const State& s) { return fiber_of(s); })
      .def("canonical_ray", [](const State& s) {
        const ProjectivePoint p = canonical_ray(s);
        return py::make_tuple(p.fiber, p.ray);
      });

  m.def("make_state", &make_state);
  m.def(
      "state_from_ray",
      [](const AlgebraPtr& a, int fiber, const Vector& ray) {
        return state_from_ray(
            a, ProjectivePoint{fiber, gauge_fix(ray.normalized())});
      },
      py::arg("algebra"), py::arg("fiber"), py::arg("ray"));
  m.def(
      "random_pure_state",
      [](const AlgebraPtr& a, std::uint64_t seed) {
        Rng rng(seed);
        return random_pure_state(a, rng);
      },
      py::arg("algebra"), py::arg("seed") = 42);

  m.def("gns_dim", [](const State& s) { return gns(s).hilbert_dim; });
  m.def("is_pure_via_gns", &is_pure_via_gns);

  m.def("kahler_distance", &kahler_distance);
  m.def("kahler_distance_rays", &kahler_distance_rays);
  m.attr("KAPPA") = kKappa;
  m.attr("CROSS_FIBER_DISTANCE") = kCrossFiberDistance;

  m.def("enumerate_ideals", [](const AlgebraPtr& a) {
    py::list out;
    for (const Ideal& ideal : enumerate_ideals(a)) {
      out.append(std::set<int>(ideal.block_set));
    }
    return out;
  });
  m.def(
      "restriction_iso_ideal",
      [](const AlgebraPtr& a, const std::set<int>& blocks, int samples) {
        const CheckReport r =
            restriction_iso_ideal(a, ideal_from_blocks(a, blocks), samples);
        return py::make_tuple(r.pass, report_list(r));
      },
      py::arg("algebra"), py::arg("blocks"), py::arg("samples") = 25);
  m.def(
      "restriction_iso_quotient",
      [](const AlgebraPtr& a, const std::set<int>& blocks, int samples) {
        const CheckReport r = restriction_iso_quotient(
            a, ideal_from_blocks(a, blocks), samples);
        return py::make_tuple(r.pass, report_list(r));
      },
      py::arg("algebra"), py::arg("blocks"), py::arg("samples") = 25);

  m.def(
      "star_product",
      [](const AlgebraPtr& a, const Matrix& x, const Matrix& y) {
        const TomographyFrame frame = build_frame(a);
        return invert(frame, star(frame, gelfand(a, x), gelfand(a, y)),
                      false);
      },
      py::arg("algebra"), py::arg("a"), py::arg("b"));
  m.def(
      "cstar_norm",
      [](const AlgebraPtr& a, const Matrix& x, int samples,
         std::uint64_t seed) {
        const TomographyFrame frame = build_frame(a);
        Rng rng(seed);
        const NormResult r = cstar_norm(frame, gelfand(a, x), samples, rng);
        return py::make_tuple(r.exact, r.sampled);
      },
      py::arg("algebra"), py::arg("element"), py::arg("samples") = 200,
      py::arg("seed") = 42);
  m.def("gelfand_transform",
        [](const AlgebraPtr& a, const Matrix& x, const State& w) {
          return gelfand(a, x)(w);
        });

  py::class_<HereditaryContext>(m, "HereditaryContext")
      .def_property_readonly(
          "spectrum", [](const HereditaryContext& c) { return c.spectrum_b; })
      .def_property_readonly(
          "projection", [](const HereditaryContext& c) { return c.b.unit_p; })
      .def_property_readonly(
          "subalgebra",
          [](const HereditaryContext& c) { return c.b.as_algebra; });

  m.def("hereditary_context", &make_hereditary_context, py::arg("algebra"),
        py::arg("projection"));
  m.def("xi_extend", &xi_extend);
  m.def("theta", [](const HereditaryContext& ctx, const State& rho) {
    const ThetaResult r = theta(ctx, rho);
    return py::make_tuple(r.t, r.rho_prime);
  });
  m.def(
      "theta_preimage",
      [](const HereditaryContext& ctx, double t, const State& rho_prime) {
        return theta_preimage(ctx, t, rho_prime);
      },
      py::arg("ctx"), py::arg("t"), py::arg("rho_prime"));
  m.def("distance_to_xi_image", &distance_to_xi_image);
  m.def("classify_state", [](const HereditaryContext& ctx, const State& rho) {
    switch (classify_state(ctx, rho)) {
      case Region::OutsideSpectrum:
        return "OUTSIDE_SPECTRUM";
      case Region::OnImage:
        return "ON_IMAGE";
      case Region::InsideDisk:
        return "INSIDE_DISK";
      default:
        return "BOUNDARY_SPHERE";
    }
  });
  m.def(
      "subbundle_check",
      [](const HereditaryContext& ctx, int samples, std::uint64_t seed) {
        Rng rng(seed);
        const CheckReport r = subbundle_check(ctx, samples, rng);
        return py::make_tuple(r.pass, report_list(r));
      },
      py::arg("ctx"), py::arg("samples") = 20, py::arg("seed") = 42);

  m.def(
      "verify_algebra",
      [](const AlgebraPtr& a, int samples, std::uint64_t seed) {
        Report report;
        verify_algebra("algebra", a, samples, seed, report);
        py::list clauses;
        for (const auto& c : report.checks) {
          clauses.append(clause_dict(c));
        }
        return py::make_tuple(report.pass, clauses);
      },
      py::arg("algebra"), py::arg("samples") = 30, py::arg("seed") = 42);
}
