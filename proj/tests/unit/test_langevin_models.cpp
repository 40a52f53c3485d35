#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>

#include "entrate/langevin_models.hpp"

#include "support.hpp"

using namespace entrate;
using cd = std::complex<double>;

TEST_CASE("uncoupled full model has bare decay eigenvalues") {
  FullModelParams p;
  p.Delta = 0.3;
  p.delta = 2.0;
  const Eigen::VectorXcd ev = drift_eigenvalues(drift_full(p));
  std::vector<double> re;
  for (int i = 0; i < ev.size(); ++i) re.push_back(ev[i].real());
  std::sort(re.begin(), re.end());
  for (int i = 0; i < 4; ++i) CHECK(re[i] == near(-0.5, 1e-12));
  for (int i = 4; i < 6; ++i) CHECK(re[i] == near(-5e-4, 1e-12));
  const StabilityReport s = stability(drift_full(p));
  CHECK(s.stable);
  CHECK(s.max_real_part == near(-5e-4, 1e-12));
}

TEST_CASE("full model ordering, decay and coupling entries") {
  FullModelParams p;
  p.g = 5.0;
  p.delta = 10.0;
  const DriftMatrix d = drift_full(p);
  REQUIRE(d.dim() == 6);
  CHECK(d.decay(0) == 1.0);
  CHECK(d.decay(4) == 1e-3);
  const int ap = d.index_of(Channel::APlus), b = d.index_of(Channel::B);
  const int amd = d.index_of(Channel::AMinusDag);
  CHECK(std::abs(d.m(ap, b) - cd(0.0, 2.5)) < 1e-15);
  CHECK(std::abs(d.m(b, amd) - cd(0.0, 2.5)) < 1e-15);
  CHECK(std::abs(d.m(b, b) - cd(-5e-4, -10.0)) < 1e-15);
  CHECK(stability(d).stable);
}

TEST_CASE("invalid parameters are rejected") {
  FullModelParams p;
  p.kappa = 0.0;
  CHECK_THROWS(drift_full(p));
  p = {};
  p.n_th = -1.0;
  CHECK_THROWS(drift_full(p));
  EffectiveModelParams e;
  e.delta = 0.0;
  CHECK_THROWS(drift_effective(e));
}

TEST_CASE("effective model entries") {
  EffectiveModelParams e;
  e.Delta = 0.4;
  Eigen::MatrixXcd m = drift_effective(e).m;
  Eigen::Vector4cd diag(cd(-0.5, 0.4), cd(-0.5, -0.4), cd(-0.5, 0.4), cd(-0.5, -0.4));
  CHECK((m - Eigen::MatrixXcd(diag.asDiagonal())).cwiseAbs().maxCoeff() < 1e-15);

  e = {};
  e.g = 5.0;
  e.delta = 10.0;
  m = drift_effective(e).m;
  CHECK(std::abs(m(0, 3) - cd(0.0, 0.625)) < 1e-15);
  CHECK(std::abs(m(0, 0) - cd(-0.5, 0.625)) < 1e-15);
  CHECK(e.mediated_coupling() == 0.625);
}

TEST_CASE("effective stability at the documented operating points") {
  EffectiveModelParams e;
  e.g = 5.0;
  e.delta = 10.0;
  e.Delta = -0.2;
  CHECK(stability(drift_effective(e)).stable);
  e.Delta = -0.5;
  CHECK_FALSE(stability(drift_effective(e)).stable);
  for (double D : {-1.5, -0.7, -0.2, 0.0, 0.6}) {
    e.Delta = D;
    CHECK(stability(drift_effective(e)).max_real_part ==
          near(max_real_part_effective(e), 1e-9));
  }
}

TEST_CASE("effective stability boundary roots") {
  auto r = stability_boundary_effective(5.0, 1.0, 10.0);
  REQUIRE(r.size() == 2);
  CHECK(r[0] == near(-1.0, 1e-12));
  CHECK(r[1] == near(-0.25, 1e-12));
  r = stability_boundary_effective(5.0, 1.0, -10.0);
  REQUIRE(r.size() == 2);
  CHECK(r[0] == near(0.25, 1e-12));
  CHECK(r[1] == near(1.0, 1e-12));
  CHECK(stability_boundary_effective(1.0, 1.0, 10.0).empty());
}

TEST_CASE("numerical stability agrees with the boundary roots on a grid") {
  const int n = 100;
  int disagreements = 0;
  for (int i = 0; i < n; ++i) {
    const double delta = -15.0 + 30.0 * (i + 0.5) / n;  // never exactly zero
    const double dD = 3.0 / (n - 1);
    const auto roots = stability_boundary_effective(5.0, 1.0, delta);
    for (int j = 0; j < n; ++j) {
      const double Delta = -1.5 + j * dD;
      EffectiveModelParams e{5.0, 1.0, Delta, delta};
      const bool stable = stability(drift_effective(e)).stable;
      const bool inside = roots.size() == 2 && Delta > roots[0] && Delta < roots[1];
      if (stable == inside) {
        const bool near_root = std::any_of(roots.begin(), roots.end(),
                                           [&](double r) { return std::abs(r - Delta) <= dD; });
        if (!near_root) ++disagreements;
      }
    }
  }
  CHECK(disagreements == 0);
}

TEST_CASE("full model is stable at the highlighted operating points") {
  for (auto [Delta, delta] : {std::pair{0.0, 10.0}, {-0.2, 10.0}, {0.0, 0.0}}) {
    FullModelParams p;
    p.g = 5.0;
    p.Delta = Delta;
    p.delta = delta;
    CAPTURE(Delta);
    CAPTURE(delta);
    CHECK(stability(drift_full(p)).stable);
  }
}

TEST_CASE("drift matrices keep the operator/adjoint pairing") {
  for (double g : {0.0, 1.0, 5.0}) {
    for (double D : {-0.3, 0.0, 0.7}) {
      FullModelParams p;
      p.g = g;
      p.Delta = D;
      p.delta = 3.0;
      p.n_th = 5.0;
      CHECK(doubled_structure_deviation(drift_full(p)) <= 1e-12);
      EffectiveModelParams e{g, 1.0, D, 3.0};
      CHECK(doubled_structure_deviation(drift_effective(e)) <= 1e-12);
    }
  }
}

TEST_CASE("adiabatic regime flag") {
  CHECK(within_adiabatic_regime({5.0, 1.0, 0.1, 100.0}));
  CHECK_FALSE(within_adiabatic_regime({5.0, 1.0, 0.1, 10.0}));
}

TEST_CASE("three-cell parameter mapping") {
  CellParams c{2.0, 2.0, 1.0, {3.0, 0.0}};
  CellMapping m = map_cell_params(c, 1.0, 1e-3, 20.0, 5.0);
  CHECK(m.J == near(2.0 * std::sqrt(2.0), 1e-14));
  CHECK(m.g0_eff == near(0.5, 1e-14));

  c = {2.0, 0.0, 1.0, {3.0, 0.0}};
  CHECK(map_cell_params(c, 1.0, 1e-3, 20.0, 0.0).g0_eff == 0.0);

  // g = 2·g0_eff·|alpha| with |alpha| = 10
  c = {3.0, 4.0, 1.0, {6.0, 8.0}};
  m = map_cell_params(c, 1.0, 1e-3, 20.0, 5.0, -0.1);
  CHECK(m.J == near(5.0, 1e-14));
  CHECK(m.g0_eff == near(12.0 / 25.0, 1e-14));
  CHECK(m.params.g == near(9.6, 1e-14));
  CHECK(m.params.delta == near(15.0, 1e-14));
  CHECK(m.params.n_th == 5.0);
  CHECK(m.params.Delta == -0.1);

  CHECK_THROWS(map_cell_params({0.0, 0.0, 1.0, {1.0, 0.0}}, 1.0, 1e-3, 20.0, 0.0));
}
