#include "rdl/generate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>

namespace rdl {
namespace {

using Rng = std::mt19937_64;

std::size_t draw(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

double rounded(double v, double step) {
  const double r = std::round(v / step) * step;
  return r == 0.0 ? 0.0 : r;
}

void cap(std::size_t value, std::size_t limit, const char* what) {
  if (value > limit) {
    throw Error(ErrorCode::SizeCap, std::string(what) + " " + std::to_string(value) + " exceeds the cap " +
                                        std::to_string(limit));
  }
}

// `count` distinct integer points of [-radius, radius]^dim, the origin first.
std::vector<std::vector<double>> integer_points(Rng& rng, std::size_t count, std::size_t dim, int radius) {
  std::vector<std::vector<double>> out{std::vector<double>(dim, 0.0)};
  std::set<std::vector<double>> seen(out.begin(), out.end());
  while (out.size() < count) {
    std::vector<double> p(dim);
    for (double& v : p) v = static_cast<double>(std::uniform_int_distribution<int>(-radius, radius)(rng));
    if (seen.insert(p).second) out.push_back(std::move(p));
  }
  return out;
}

std::size_t dimension_for(std::size_t count, int radius) {
  std::size_t dim = 1;
  double capacity = 2.0 * radius + 1.0;
  while (capacity < static_cast<double>(count)) {
    ++dim;
    capacity *= 2.0 * radius + 1.0;
  }
  return dim;
}

std::vector<std::string> numbered(const std::string& prefix, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

ExtReal draw_value(Rng& rng, double inf_rate) {
  if (std::bernoulli_distribution(inf_rate)(rng)) return ExtReal::pos_inf();
  return uniform(rng, -5.0, 5.0);
}

}  // namespace

PerturbationFamily random_family(std::uint64_t seed, const FamilyGenOptions& opts) {
  Rng rng(seed);
  const std::size_t nx = opts.nx ? opts.nx : draw(rng, 2, 8);
  const std::size_t nxs = opts.nx_star ? opts.nx_star : draw(rng, 2, 8);
  std::size_t nu = opts.nu ? opts.nu : draw(rng, 1, 4);
  cap(nx, kMaxPoints, "|X|");
  cap(nxs, kMaxPoints, "|X*|");
  cap(nu, kMaxScenarios, "|U|");
  if (opts.ny) cap(opts.ny, kMaxParameters, "|Y_u|");

  FamilyShape shape = opts.shape;
  if (shape == FamilyShape::Any) shape = draw(rng, 0, 2) == 0 ? FamilyShape::Dominant : FamilyShape::Plain;
  if (shape == FamilyShape::SingleScenario) nu = 1;

  const std::size_t dim = std::max({dimension_for(nx, 3), dimension_for(nxs, 2), draw(rng, 1, 2)});
  const auto xs = integer_points(rng, nx, dim, 3);
  const auto xss = integer_points(rng, nxs, dim, 2);
  PairedSpace decision = PairedSpace::from_coordinates(xs, xss, numbered("x", nx), numbered("x*", nxs));

  std::vector<ScenarioSpec> specs;
  for (std::size_t k = 0; k < nu; ++k) {
    const std::size_t ny = opts.ny ? opts.ny : draw(rng, 1, 4);
    const std::size_t nys = opts.ny ? opts.ny : draw(rng, 1, 4);
    const std::size_t ydim = dimension_for(std::max(ny, nys), 2);
    PairedSpace param = PairedSpace::from_coordinates(integer_points(rng, ny, ydim, 3), integer_points(rng, nys, ydim, 2),
                                                      numbered("y", ny), numbered("y*", nys));
    std::vector<std::vector<ExtReal>> F(nx, std::vector<ExtReal>(ny));
    for (auto& row : F) {
      if (shape == FamilyShape::ConstantInY) {
        std::fill(row.begin(), row.end(), draw_value(rng, opts.inf_rate));
      } else {
        for (auto& v : row) v = draw_value(rng, opts.inf_rate);
      }
    }
    specs.push_back(ScenarioSpec{"u" + std::to_string(k + 1), std::move(param), std::move(F)});
  }

  // Column 0 of every table is y = 0 (integer_points puts the origin first).
  auto p_finite_somewhere = [&] {
    for (std::size_t x = 0; x < nx; ++x) {
      bool all = true;
      for (const auto& s : specs) all = all && s.F[x][0].is_finite();
      if (all) return true;
    }
    return false;
  };
  if (!p_finite_somewhere()) {
    const std::size_t x = draw(rng, 0, nx - 1);
    for (auto& s : specs) {
      const double v = uniform(rng, -5.0, 5.0);
      if (shape == FamilyShape::ConstantInY) std::fill(s.F[x].begin(), s.F[x].end(), ExtReal(v));
      else s.F[x][0] = v;
    }
  }

  if (shape == FamilyShape::Dominant) {
    auto& top = specs.front().F;
    for (std::size_t x = 0; x < nx; ++x) {
      ExtReal worst = top[x][0];
      for (std::size_t k = 1; k < specs.size(); ++k) worst = std::max(worst, specs[k].F[x][0], std::less<>());
      const ExtReal base = worst + ExtReal(uniform(rng, 0.0, 1.0));
      top[x][0] = base;
      // Off the zero shift the dominant scenario is too expensive to matter.
      for (std::size_t y = 1; y < top[x].size(); ++y) top[x][y] = base + ExtReal(100.0);
    }
  }
  return PerturbationFamily(std::move(decision), std::move(specs));
}

PerturbationFamily t1_family() {
  PairedSpace decision({"0", "1"}, {"0", "1"}, {{0.0, 0.0}, {0.0, 1.0}}, "0", "0");
  auto param = [] { return PairedSpace({"0"}, {"0"}, {{0.0}}, "0", "0"); };
  std::vector<ScenarioSpec> specs;
  specs.push_back(ScenarioSpec{"u1", param(), {{0.0}, {1.0}}});
  specs.push_back(ScenarioSpec{"u2", param(), {{1.0}, {0.0}}});
  return PerturbationFamily(std::move(decision), std::move(specs));
}

LinearSipInstance lsip_polygon(std::size_t cuts) {
  if (cuts < 3) throw Error(ErrorCode::ValidationError, "a polygon needs at least 3 cuts");
  cap(cuts, kMaxRows, "|T|");
  std::vector<std::size_t> order;
  const bool pow2 = (cuts & (cuts - 1)) == 0;
  if (pow2) {
    std::size_t bits = 0;
    while ((std::size_t{1} << bits) < cuts) ++bits;
    for (std::size_t i = 0; i < cuts; ++i) {
      std::size_t r = 0;
      for (std::size_t b = 0; b < bits; ++b)
        if (i & (std::size_t{1} << b)) r |= std::size_t{1} << (bits - 1 - b);
      order.push_back(r);
    }
  } else {
    for (std::size_t i = 0; i < cuts; ++i) order.push_back(i);
  }
  LinearSipInstance inst;
  inst.n = 2;
  inst.c = {1.0, 1.0};
  for (std::size_t k : order) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(cuts);
    inst.rows.push_back(LsipRow{"t" + std::to_string(k), {std::cos(theta), std::sin(theta)}, 1.0});
  }
  return inst;
}

std::vector<std::vector<std::string>> prefix_schedule(const LinearSipInstance& inst,
                                                      const std::vector<std::size_t>& sizes) {
  std::vector<std::vector<std::string>> out;
  for (std::size_t s : sizes) {
    if (s > inst.rows.size()) throw Error(ErrorCode::ValidationError, "schedule prefix longer than T");
    std::vector<std::string> step;
    for (std::size_t i = 0; i < s; ++i) step.push_back(inst.rows[i].t);
    out.push_back(std::move(step));
  }
  return out;
}

LinearSipInstance random_lsip(std::uint64_t seed, std::size_t n, std::size_t rows) {
  Rng rng(seed);
  LinearSipInstance inst;
  inst.n = n ? n : draw(rng, 1, 4);
  const std::size_t T = rows ? rows : draw(rng, inst.n + 1, 200);
  cap(T, kMaxRows, "|T|");
  std::vector<double> x0(inst.n);
  for (double& v : x0) v = uniform(rng, -1.0, 1.0);
  for (std::size_t t = 0; t < T; ++t) {
    LsipRow row{"t" + std::to_string(t), std::vector<double>(inst.n), 0.0};
    double ax = 0.0;
    for (std::size_t i = 0; i < inst.n; ++i) {
      row.a[i] = uniform(rng, -1.0, 1.0);
      ax += row.a[i] * x0[i];
    }
    row.b = ax + uniform(rng, 0.0, 1.0);  // x0 is strictly feasible
    inst.rows.push_back(std::move(row));
  }
  // c in -cone{a_t} keeps the minimum bounded below.
  inst.c.assign(inst.n, 0.0);
  for (std::size_t k = 0; k <= inst.n; ++k) {
    const auto& a = inst.rows[draw(rng, 0, T - 1)].a;
    const double lambda = uniform(rng, 0.1, 1.0);
    for (std::size_t i = 0; i < inst.n; ++i) inst.c[i] -= lambda * a[i];
  }
  return inst;
}

ConicUncertainInstance conic_demo() {
  PairedSpace decision = PairedSpace::from_coordinates({{-1.0}, {0.0}, {1.0}}, {{-1.0}, {0.0}, {1.0}});
  ConicScenario s{"u", {{1.0}, {0.0}, {-1.0}}, {{0.0}, {0.5}, {1.0}, {2.0}}, {}};
  return ConicUncertainInstance{std::move(decision), {-1.0, 0.0, 1.0}, {std::move(s)}};
}

ConicUncertainInstance random_conic(std::uint64_t seed) {
  Rng rng(seed);
  const std::size_t nx = draw(rng, 3, 8);
  const std::size_t nxs = draw(rng, 2, 5);
  PairedSpace decision = PairedSpace::from_coordinates(integer_points(rng, nx, 1, 4), integer_points(rng, nxs, 1, 2));
  std::vector<ExtReal> f(nx);
  for (auto& v : f) v = std::bernoulli_distribution(0.05)(rng) ? ExtReal::pos_inf() : ExtReal(rounded(uniform(rng, -3.0, 3.0), 0.01));
  std::vector<ConicScenario> scenarios;
  const std::size_t nu = draw(rng, 1, 3);
  for (std::size_t k = 0; k < nu; ++k) {
    const std::size_t m = draw(rng, 1, 2);
    ConicScenario s;
    s.u = "u" + std::to_string(k + 1);
    for (std::size_t x = 0; x < nx; ++x) {
      std::vector<double> h(m);
      for (double& v : h) v = rounded(uniform(rng, -2.0, 2.0), 0.01);
      s.H.push_back(std::move(h));
    }
    s.dual_grid.push_back(std::vector<double>(m, 0.0));
    const std::size_t extra = draw(rng, 2, 5);
    while (s.dual_grid.size() < extra + 1) {
      std::vector<double> y(m);
      for (double& v : y) v = rounded(uniform(rng, 0.0, 2.0), 0.25);
      if (std::find(s.dual_grid.begin(), s.dual_grid.end(), y) == s.dual_grid.end()) s.dual_grid.push_back(std::move(y));
    }
    scenarios.push_back(std::move(s));
  }
  return ConicUncertainInstance{std::move(decision), std::move(f), std::move(scenarios)};
}

}  // namespace rdl
