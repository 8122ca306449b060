#include "ukb/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iostream>
#include <sstream>

#include "ukb/catalog.hpp"
#include "ukb/gelfand.hpp"
#include "ukb/hereditary.hpp"

namespace ukb {

namespace {

AlgebraPtr algebra_of(const Json& input, const ToleranceConfig& tol) {
  if (input.is_object() && input.contains("algebra")) {
    return algebra_from_json(input["algebra"], tol);
  }
  return algebra_from_json(input, tol);
}

HereditaryContext context_of(const Json& input, const ToleranceConfig& tol) {
  if (!input.is_object() || !input.contains("projection")) {
    throw InputError("this command needs a projection alongside the algebra");
  }
  const AlgebraPtr a = algebra_of(input, tol);
  return make_hereditary_context(a, matrix_from_json(input["projection"]));
}

CheckClause residual_clause(const std::string& name, double residual,
                            double limit) {
  CheckClause c{name, residual <= limit, residual, ""};
  if (!c.pass) {
    std::ostringstream w;
    w << "residual " << residual << " exceeds " << limit;
    c.witness = w.str();
  }
  return c;
}

Matrix random_element(const AlgebraPtr& a, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix x = Matrix::Zero(a->ambient_dim, a->ambient_dim);
  for (const Matrix& b : a->basis) {
    x += Complex(gauss(rng), gauss(rng)) * b;
  }
  return x;
}

// Projection in A with a random rank per block (at least one nonzero).
Matrix random_projection_in(const AlgebraPtr& a, Rng& rng) {
  Matrix p = Matrix::Zero(a->ambient_dim, a->ambient_dim);
  bool nonzero = false;
  for (const auto& blk : a->blocks) {
    std::uniform_int_distribution<Eigen::Index> pick(
        blk.index + 1 == static_cast<int>(a->blocks.size()) && !nonzero ? 1
                                                                        : 0,
        blk.n);
    const Eigen::Index rank = pick(rng);
    if (rank == 0) {
      continue;
    }
    nonzero = true;
    const Matrix basis =
        orthonormalize(random_hermitian(blk.n, rng)).basis.leftCols(rank);
    p += a->embed_irrep(blk.index, basis * basis.adjoint());
  }
  return p;
}

void verify_distances(const std::string& name, const AlgebraPtr& a,
                      int samples, Rng& rng, Report& report) {
  double axiom_residual = 0.0;
  double range_violation = 0.0;
  for (const auto& blk : a->blocks) {
    for (int k = 0; k < samples; ++k) {
      const Vector x = random_unit_vector(blk.n, rng);
      const Vector y = random_unit_vector(blk.n, rng);
      const Vector z = random_unit_vector(blk.n, rng);
      const double dxy = kahler_distance_rays(x, y);
      axiom_residual = std::max(axiom_residual,
                                std::abs(dxy - kahler_distance_rays(y, x)));
      axiom_residual =
          std::max(axiom_residual, std::max(0.0, kahler_distance_rays(x, z) -
                                                     dxy -
                                                     kahler_distance_rays(y, z)));
      axiom_residual =
          std::max(axiom_residual, kahler_distance_rays(x, x));
      range_violation = std::max(range_violation, dxy - kKappa);
    }
  }
  report.add(residual_clause(name + ": metric axioms", axiom_residual, 1e-9));
  report.add(
      residual_clause(name + ": fiber diameter kappa", range_violation, 1e-12));
  if (a->block_count() > 1) {
    const State s0 = random_pure_state_on_fiber(a, a->blocks[0].index, rng);
    const State s1 = random_pure_state_on_fiber(a, a->blocks[1].index, rng);
    CheckClause cross{name + ": cross-fiber distance is 3",
                      kahler_distance(s0, s1) == kCrossFiberDistance, 0.0, ""};
    report.add(cross);
  }
}

void verify_gelfand(const std::string& name, const AlgebraPtr& a, int samples,
                    Rng& rng, Report& report) {
  const TomographyFrame frame = build_frame(a);
  double round_trip = 0.0;
  for (int k = 0; k < std::min(samples, 100); ++k) {
    const Matrix x = random_element(a, rng);
    round_trip = std::max(round_trip,
                          (invert(frame, gelfand(a, x), false) - x).norm() /
                              std::max(1.0, x.norm()));
  }
  report.add(
      residual_clause(name + ": invert after gelfand", round_trip, 1e-10));

  const Matrix x = random_element(a, rng);
  const Matrix y = random_element(a, rng);
  const TransformFunction fs = star(frame, gelfand(a, x), gelfand(a, y));
  double star_residual = 0.0;
  for (int k = 0; k < 50; ++k) {
    const State w = random_pure_state(a, rng);
    star_residual = std::max(star_residual, std::abs(fs(w) - w(x * y)));
  }
  report.add(residual_clause(name + ": star equals the product transform",
                             star_residual, 1e-9));

  const NormResult nr = cstar_norm(frame, gelfand(a, x), samples, rng);
  report.add(residual_clause(
      name + ": norm recovery",
      std::abs(nr.exact - operator_norm(x)) / std::max(1.0, nr.exact), 1e-9));
  report.add(residual_clause(name + ": sampled sup below exact",
                             std::max(0.0, nr.sampled - nr.exact), 1e-12));
}

void verify_ideals(const std::string& name, const AlgebraPtr& a, int samples,
                   Report& report) {
  double kernel_residual = 0.0;
  bool iso_pass = true;
  for (const Ideal& ideal : enumerate_ideals(a)) {
    for (const Matrix& b : ideal.as_algebra->basis) {
      for (const auto& blk : a->blocks) {
        if (!ideal.block_set.count(blk.index)) {
          kernel_residual =
              std::max(kernel_residual, a->irrep(blk.index, b).norm());
        }
      }
    }
    if (!ideal.block_set.empty() &&
        !restriction_iso_ideal(a, ideal, std::min(samples, 25)).pass) {
      iso_pass = false;
    }
    if (ideal.block_set.size() < a->blocks.size() &&
        !restriction_iso_quotient(a, ideal, std::min(samples, 25)).pass) {
      iso_pass = false;
    }
  }
  report.add(residual_clause(name + ": ideals kill the complementary blocks",
                             kernel_residual, 1e-10));
  CheckClause iso{name + ": ideal and quotient bundle isomorphisms", iso_pass,
                  0.0, ""};
  report.add(iso);
}

void verify_hereditary(const std::string& name, const HereditaryContext& ctx,
                       int samples, Rng& rng, Report& report) {
  const AlgebraPtr& balg = ctx.b.as_algebra;

  double xi_theta = 0.0;
  for (int k = 0; k < std::min(samples, 30); ++k) {
    const State tau = random_pure_state(balg, rng);
    const ThetaResult th = theta(ctx, xi_extend(ctx, tau));
    xi_theta = std::max(xi_theta, std::abs(th.t - 1.0));
    xi_theta = std::max(xi_theta, (th.rho_prime.values - tau.values).norm());
  }
  report.add(residual_clause(name + ": theta after xi is the identity at t=1",
                             xi_theta, 1e-9));

  bool proper = false;
  for (const auto& [i, corner] : ctx.corner_subspace) {
    proper = proper || corner.dim() < corner.ambient_dim;
  }
  if (proper) {
    std::uniform_real_distribution<double> uni(0.05, 0.95);
    double round = 0.0;
    double sphere = 0.0;
    for (int k = 0; k < std::min(samples, 30); ++k) {
      State tau = random_pure_state(balg, rng);
      const int i = fiber_of(xi_extend(ctx, tau));
      const Subspace& corner = ctx.corner_subspace.at(i);
      if (corner.dim() == corner.ambient_dim) {
        continue;
      }
      const double t = uni(rng);
      const State rho = theta_preimage(ctx, t, tau);
      const ThetaResult th = theta(ctx, rho);
      round = std::max(round, std::abs(th.t - t));
      round = std::max(round, (th.rho_prime.values - tau.values).norm());

      const double dist = std::sqrt(2.0) * std::acos(std::sqrt(t));
      const SphereParam param = upsilon(ctx, tau, dist, rho);
      const State back = upsilon_inverse(ctx, tau, dist, param);
      sphere = std::max(sphere, (back.values - rho.values).norm());
    }
    report.add(residual_clause(name + ": theta preimage round trip", round,
                               1e-9));
    report.add(residual_clause(name + ": sphere coordinates round trip",
                               sphere, 1e-9));
  }

  bool classes_consistent = true;
  for (int k = 0; k < std::min(samples, 60); ++k) {
    const State rho = random_pure_state(ctx.parent, rng);
    const double d = distance_to_xi_image(ctx, rho);
    const Region tag = classify_state(ctx, rho);
    const bool ok =
        (tag == Region::OutsideSpectrum && d == kCrossFiberDistance) ||
        (tag == Region::OnImage && d < 1e-6) ||
        (tag == Region::InsideDisk && d > 0.0 && d < kKappa) ||
        (tag == Region::BoundarySphere && std::abs(d - kKappa) < 1e-8);
    classes_consistent = classes_consistent && ok;
  }
  CheckClause classes{name + ": classification agrees with the distance",
                      classes_consistent, 0.0, ""};
  report.add(classes);

  report.merge(subbundle_check(ctx, std::min(samples, 30), rng),
               name + ": subbundle ");

  // generated ideal = intersection of the hull ideals
  const std::set<int> h = hull(ctx.parent, ctx.b.as_algebra->basis);
  std::set<int> expected;
  for (const auto& blk : ctx.parent->blocks) {
    if (!h.count(blk.index)) {
      expected.insert(blk.index);
    }
  }
  std::set<int> generated;
  for (const auto& blk : ctx.b.generated_ideal->blocks) {
    const Matrix& q = blk.central_projection;
    for (const auto& pblk : ctx.parent->blocks) {
      if ((q - pblk.central_projection).norm() < 1e-6) {
        generated.insert(pblk.index);
      }
    }
  }
  CheckClause lemma{name + ": generated ideal matches the hull intersection",
                    generated == expected, 0.0, ""};
  report.add(lemma);

  const State rho = random_pure_state(ctx.parent, rng);
  const HilbertFiber hf = left_ideal_and_hilbert_fiber(ctx, rho);
  const GnsTriple g = gns(rho);
  Matrix images(g.hilbert_dim,
                static_cast<Eigen::Index>(hf.left_ideal_basis.size()));
  for (std::size_t k = 0; k < hf.left_ideal_basis.size(); ++k) {
    images.col(static_cast<Eigen::Index>(k)) =
        g.lambda(rho, hf.left_ideal_basis[k].adjoint());
  }
  CheckClause fiber{name + ": Hilbert fiber dimension matches the rank oracle",
                    hf.fiber.dim() ==
                        orthonormalize(images, ctx.parent->tol).dim(),
                    0.0, ""};
  report.add(fiber);
}

void verify_tangent_span(const std::string& name, int samples, Rng& rng,
                         Report& report) {
  bool pass = true;
  std::uniform_int_distribution<Eigen::Index> dim_pick(2, 8);
  std::uniform_int_distribution<int> count_pick(1, 3);
  for (int k = 0; k < samples; ++k) {
    const Eigen::Index n = dim_pick(rng);
    const int count = count_pick(rng);
    std::vector<Subspace> candidate;
    std::uniform_int_distribution<Eigen::Index> rank_pick(1, n);
    for (int j = 0; j < count; ++j) {
      const Eigen::Index r = rank_pick(rng);
      candidate.push_back(
          orthonormalize(orthonormalize(random_hermitian(n, rng))
                             .basis.leftCols(r)
                             .eval()));
    }
    const TangentSpanResult result = tangent_span_condition(n, candidate);
    Matrix all(n, 0);
    for (const auto& m : candidate) {
      Matrix next(n, all.cols() + m.dim());
      next << all, m.basis;
      all = next;
    }
    const Subspace span = orthonormalize(all);
    bool collapse = false;
    for (const auto& m : candidate) {
      collapse = collapse || m.dim() == span.dim();
    }
    if (result.holds != collapse) {
      pass = false;
    }
    if (!result.holds) {
      if (!result.witness.has_value()) {
        pass = false;
      } else {
        bool inside_some = false;
        for (const auto& m : candidate) {
          inside_some = inside_some || contains(m, *result.witness, 1e-8);
        }
        if (inside_some || !contains(span, *result.witness, 1e-8)) {
          pass = false;
        }
      }
    }
  }
  CheckClause clause{name + ": tangent span condition with witnesses", pass,
                     0.0, ""};
  report.add(clause);
}

Report run_verify_all(const Json& input, const RunConfig& config) {
  Report report;
  report.command = config.command;
  std::vector<std::pair<std::string, AlgebraPtr>> targets;
  if (!input.is_null()) {
    targets.emplace_back("input", algebra_of(input, config.tol));
  }
  for (const CatalogEntry& entry : builtin_catalog(config.tol)) {
    targets.emplace_back(entry.name, entry.algebra);
  }
  for (const auto& [name, a] : targets) {
    verify_algebra(name, a, config.samples, config.seed, report);
  }
  Rng rng(config.seed + 1);
  verify_tangent_span("generic", std::min(config.samples, 50), rng, report);
  return report;
}

}  // namespace

void Report::merge(const CheckReport& r, const std::string& prefix) {
  for (CheckClause clause : r.clauses) {
    clause.name = prefix + clause.name;
    add(std::move(clause));
  }
}

void verify_algebra(const std::string& name, const AlgebraPtr& a, int samples,
                    std::uint64_t seed, Report& report) {
  Rng rng(seed);
  verify_distances(name, a, std::min(samples, 100), rng, report);
  verify_gelfand(name, a, samples, rng, report);
  verify_ideals(name, a, samples, report);

  std::vector<Matrix> projections;
  projections.push_back(a->unit);
  projections.push_back(random_projection_in(a, rng));
  int count = 0;
  for (const Matrix& p : projections) {
    std::ostringstream ctx_name;
    ctx_name << name << " context " << count++;
    verify_hereditary(ctx_name.str(), make_hereditary_context(a, p),
                      samples, rng, report);
  }
}

Report run(const RunConfig& config) {
  const std::vector<std::string> commands = {
      "decompose", "ideals",  "gns",   "distance",
      "gelfand",   "star",    "norm",  "hereditary-classify",
      "theta",     "xi",      "sphere", "subbundle-check",
      "verify-all"};
  if (std::find(commands.begin(), commands.end(), config.command) ==
      commands.end()) {
    throw InputError("unknown command: " + config.command);
  }
  Json input;
  if (!config.input_path.empty()) {
    input = load_json_file(config.input_path);
  } else if (config.command != "verify-all") {
    throw InputError("this command requires --input");
  }

  if (config.command == "verify-all") {
    return run_verify_all(input, config);
  }

  Report report;
  report.command = config.command;
  Rng rng(config.seed);

  if (config.command == "decompose") {
    const AlgebraPtr a = algebra_of(input, config.tol);
    Json blocks = Json::array();
    for (const auto& blk : a->blocks) {
      blocks.push_back({{"n", blk.n}, {"m", blk.multiplicity}});
    }
    report.data["blocks"] = blocks;
    report.data["dim"] = a->dim();
    report.data["ideal_count"] =
        static_cast<std::size_t>(1) << a->blocks.size();
    double residual = 0.0;
    for (const Matrix& b : a->basis) {
      Matrix rebuilt = Matrix::Zero(a->ambient_dim, a->ambient_dim);
      for (const auto& blk : a->blocks) {
        rebuilt += a->embed_irrep(blk.index, a->irrep(blk.index, b));
      }
      residual = std::max(residual, (rebuilt - b).norm());
    }
    report.add(residual_clause("block decomposition reconstructs the basis",
                               residual, 1e-8));
  } else if (config.command == "ideals") {
    const AlgebraPtr a = algebra_of(input, config.tol);
    verify_ideals("input", a, config.samples, report);
    Json sets = Json::array();
    for (const Ideal& ideal : enumerate_ideals(a)) {
      sets.push_back(std::vector<int>(ideal.block_set.begin(),
                                      ideal.block_set.end()));
    }
    report.data["ideals"] = sets;
  } else if (config.command == "gns") {
    const AlgebraPtr a = algebra_of(input, config.tol);
    if (!input.contains("state")) {
      throw InputError("gns requires a state");
    }
    const State s = state_from_json(a, input["state"]);
    const GnsTriple g = gns(s);
    report.data["hilbert_dim"] = g.hilbert_dim;
    report.data["is_pure"] = s.is_pure;
    double residual = 0.0;
    for (Eigen::Index j = 0; j < a->dim(); ++j) {
      const Complex via =
          (g.cyclic_vector.adjoint() * g.rep[static_cast<std::size_t>(j)] *
           g.cyclic_vector)
              .value();
      residual = std::max(residual, std::abs(via - s.values(j)));
    }
    report.add(residual_clause("GNS triple reproduces the state", residual,
                               1e-9));
    CheckClause purity{"purity flag matches GNS irreducibility",
                       s.is_pure == is_pure_via_gns(s), 0.0, ""};
    report.add(purity);
  } else if (config.command == "distance") {
    const AlgebraPtr a = algebra_of(input, config.tol);
    if (!input.contains("states") || input["states"].size() != 2) {
      throw InputError("distance requires exactly two states");
    }
    const State s1 = state_from_json(a, input["states"][0]);
    const State s2 = state_from_json(a, input["states"][1]);
    report.data["distance"] = kahler_distance(s1, s2);
    report.add(CheckClause{"states are pure", s1.is_pure && s2.is_pure, 0.0,
                           ""});
  } else if (config.command == "gelfand" || config.command == "norm") {
    const AlgebraPtr a = algebra_of(input, config.tol);
    if (!input.contains("element")) {
      throw InputError("this command requires an element");
    }
    const Matrix x = matrix_from_json(input["element"]);
    const TomographyFrame frame = build_frame(a);
    const TransformFunction f = gelfand(a, x);
    if (config.command == "gelfand") {
      Json values = Json::array();
      for (const State& w : frame.states) {
        values.push_back(complex_to_json(f(w)));
      }
      report.data["frame_values"] = values;
      report.add(residual_clause("inversion round trip",
                                 (invert(frame, f, false) - x).norm(), 1e-9));
    } else {
      const NormResult nr = cstar_norm(frame, f, config.samples, rng);
      report.data["norm"] = nr.exact;
      report.data["sampled_sup"] = nr.sampled;
      report.add(residual_clause("sampled sup below exact",
                                 std::max(0.0, nr.sampled - nr.exact), 1e-12));
    }
  } else if (config.command == "star") {
    const AlgebraPtr a = algebra_of(input, config.tol);
    if (!input.contains("elements") || input["elements"].size() != 2) {
      throw InputError("star requires exactly two elements");
    }
    const Matrix x = matrix_from_json(input["elements"][0]);
    const Matrix y = matrix_from_json(input["elements"][1]);
    const TomographyFrame frame = build_frame(a);
    const TransformFunction fs =
        star(frame, gelfand(a, x), gelfand(a, y));
    report.data["product"] = matrix_to_json(invert(frame, fs, false));
    double residual = 0.0;
    for (int k = 0; k < std::min(config.samples, 50); ++k) {
      const State w = random_pure_state(a, rng);
      residual = std::max(residual, std::abs(fs(w) - w(x * y)));
    }
    report.add(residual_clause("star equals the product transform", residual,
                               1e-9));
  } else if (config.command == "hereditary-classify" ||
             config.command == "theta") {
    const HereditaryContext ctx = context_of(input, config.tol);
    if (!input.contains("state")) {
      throw InputError("this command requires a state");
    }
    const State rho = state_from_json(ctx.parent, input["state"]);
    if (config.command == "hereditary-classify") {
      const Region tag = classify_state(ctx, rho);
      const char* names[] = {"OUTSIDE_SPECTRUM", "ON_IMAGE", "INSIDE_DISK",
                             "BOUNDARY_SPHERE"};
      report.data["region"] = names[static_cast<int>(tag)];
      report.data["distance"] = distance_to_xi_image(ctx, rho);
      report.add(CheckClause{"state classified", true, 0.0, ""});
    } else {
      const ThetaResult th = theta(ctx, rho);
      report.data["t"] = th.t;
      report.data["rho_prime"] = state_to_json(th.rho_prime);
      report.add(residual_clause(
          "restriction equals t times rho_prime",
          [&] {
            double residual = 0.0;
            for (Eigen::Index k = 0; k < ctx.b.as_algebra->dim(); ++k) {
              residual = std::max(
                  residual, std::abs(rho(ctx.b.as_algebra->basis[k]) -
                                     th.t * th.rho_prime.values(k)));
            }
            return residual;
          }(),
          1e-8));
    }
  } else if (config.command == "xi") {
    const HereditaryContext ctx = context_of(input, config.tol);
    if (!input.contains("state")) {
      throw InputError("xi requires a state of the subalgebra");
    }
    const State tau = state_from_json(ctx.b.as_algebra, input["state"]);
    const State rho = xi_extend(ctx, tau);
    report.data["extension"] = state_to_json(rho);
    report.add(CheckClause{"extension is pure", rho.is_pure, 0.0, ""});
  } else if (config.command == "sphere") {
    const HereditaryContext ctx = context_of(input, config.tol);
    if (!input.contains("mu") || !input.contains("t")) {
      throw InputError("sphere requires mu and t");
    }
    const State mu = state_from_json(ctx.b.as_algebra, input["mu"]);
    const double dist = input["t"].get<double>();
    const double weight = std::pow(std::cos(dist / std::sqrt(2.0)), 2);
    double residual = 0.0;
    for (int k = 0; k < std::min(config.samples, 50); ++k) {
      const State rho = theta_preimage(ctx, weight, mu);
      const SphereParam param = upsilon(ctx, mu, dist, rho);
      const State back = upsilon_inverse(ctx, mu, dist, param);
      residual = std::max(residual, (back.values - rho.values).norm());
    }
    report.data["t"] = dist;
    report.add(residual_clause("sphere coordinates round trip", residual,
                               1e-9));
  } else if (config.command == "subbundle-check") {
    const HereditaryContext ctx = context_of(input, config.tol);
    report.merge(subbundle_check(ctx, std::min(config.samples, 50), rng), "");
  }
  return report;
}

Json report_to_json(const Report& report) {
  Json j;
  j["command"] = report.command;
  j["pass"] = report.pass;
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json clause;
    clause["name"] = c.name;
    clause["pass"] = c.pass;
    clause["max_residual"] = c.max_residual;
    clause["witnesses"] =
        c.witness.empty() ? Json::array() : Json::array({c.witness});
    checks.push_back(std::move(clause));
  }
  j["checks"] = std::move(checks);
  if (!report.data.empty()) {
    j["data"] = report.data;
  }
  return j;
}

int run_cli(const RunConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  Report report;
  try {
    report = run(config);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const AmbientTooLarge& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const UkbError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  const Json j = report_to_json(report);
  if (config.output.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    write_json_file(config.output, j);
  }
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  std::cerr << config.command << " finished in " << ms << " ms\n";
  return report.pass ? 0 : 1;
}

}  // namespace ukb
