#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <random>

#include "mpfsim/hamiltonian.hpp"
#include "mpfsim/pauli.hpp"

using namespace mpfsim;

namespace {

constexpr double kPi = std::numbers::pi;

HamiltonianModel constant_model(const Mat& h) {
  return HamiltonianModel({constant_coefficient(1.0)}, {h});
}

}  // namespace

TEST_SUITE("hamiltonian") {

TEST_CASE("spin-half model evaluates to the rotating-frame formula") {
  const double b = 1.0, om = 4.0, th = kPi / 6.0;
  auto sys = build_spin_half(b, om, th);
  const Mat want0 = (om + b * std::cos(th)) * pauli_z() / 2.0 + b * std::sin(th) * pauli_x() / 2.0;
  CHECK(spectral_norm(sys.model.evaluate(0.0) - want0) < 1e-14);

  // full formula at a generic time
  const double t = 0.377;
  const Mat want = (om + b * std::cos(th)) * pauli_z() / 2.0 +
                   b * std::sin(th) * (std::cos(om * t) * pauli_x() + std::sin(om * t) * pauli_y()) / 2.0;
  CHECK(spectral_norm(sys.model.evaluate(t) - want) < 1e-14);
}

TEST_CASE("time-independent model is constant in time") {
  auto model = constant_model(pauli_z() * 0.7);
  CHECK(spectral_norm(model.evaluate(0.0) - model.evaluate(7.0)) == 0.0);
}

TEST_CASE("xx chain at t=0 is the coupling times G1/2") {
  const int n = 4;
  const double j = 1.0;
  auto chain = build_xx_chain(n, j, 4.0);
  Mat g1 = Mat::Zero(16, 16);
  for (int i = 0; i < n; ++i) {
    const int nx = (i + 1) % n;
    g1 += pauli_site(n, i, 'X') * pauli_site(n, nx, 'X') + pauli_site(n, i, 'Y') * pauli_site(n, nx, 'Y');
  }
  CHECK(spectral_norm(chain.model.evaluate(0.0) - (j / 2.0) * g1) < 1e-13);
}

TEST_CASE("models stay Hermitian at random times") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  auto spin = build_spin_half(1.0, 4.0, kPi / 6.0);
  auto chain = build_xx_chain(4, 1.0, 4.0);
  for (int i = 0; i < 100; ++i) {
    const double t = u(rng);
    const Mat hs = spin.model.evaluate(t);
    const Mat hc = chain.model.evaluate(t);
    CHECK(spectral_norm(hs - hs.adjoint()) < 1e-12);
    CHECK(spectral_norm(hc - hc.adjoint()) < 1e-12);
  }
}

TEST_CASE("analytic coefficient derivatives agree with finite differences") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  auto sys = build_spin_half(1.0, 4.0, kPi / 6.0);
  for (int i = 0; i < 10; ++i) {
    const double t = u(rng);
    const double h = 1e-5;
    const Mat fd = (sys.model.evaluate(t + h) - sys.model.evaluate(t - h)) / (2.0 * h);
    const Mat an = sys.model.derivative(1, t);
    CHECK(spectral_norm(fd - an) / std::max(1.0, spectral_norm(an)) < 1e-6);
  }
}

TEST_CASE("lambda bound") {
  auto model = constant_model(2.0 * pauli_z());
  for (int n : {0, 2, 6}) CHECK(model.lambda_bound(0.9, n) == doctest::Approx(2.0).epsilon(1e-12));

  // spin-half pointwise bound stays below ω
  auto sys = build_spin_half(1.0, 4.0, kPi / 6.0);
  for (double t : {0.0, 0.13, 0.77, 2.0})
    for (int n : {1, 3, 6}) CHECK(sys.model.lambda_bound(t, n) <= 4.0);

  // H(t) = cos(t) X: ‖H(0)‖ = 1 and ‖H'(0)‖ = 0
  HamiltonianModel cosx({cosine_coefficient(1.0, 1.0)}, {pauli_x()});
  CHECK(cosx.lambda_bound(0.0, 1) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("lambda bound refuses orders beyond the analytic derivative order") {
  auto sys = build_spin_half(1.0, 4.0, kPi / 6.0);
  auto frame = [](double) -> Mat { return Mat::Identity(2, 2); };
  auto frame_dot = [](double) -> Mat { return Mat::Zero(2, 2); };
  auto transformed = frame_transform(sys.model, frame, frame_dot);
  CHECK(transformed.deriv_order() == 2);
  CHECK_NOTHROW(transformed.lambda_bound(0.1, 2));
  CHECK_THROWS_AS(transformed.lambda_bound(0.1, 3), std::invalid_argument);
}

TEST_CASE("lambda bounds are additive across model sums") {
  auto a = build_spin_half(1.0, 4.0, kPi / 6.0);
  HamiltonianModel b({cosine_coefficient(0.7, 2.0)}, {pauli_x()});
  // sum model shares the same term lists
  HamiltonianModel sum({constant_coefficient(1.0), cosine_coefficient(1.0, 4.0),
                        sine_coefficient(1.0, 4.0), cosine_coefficient(0.7, 2.0)},
                       {(4.0 + std::cos(kPi / 6.0)) * pauli_z() / 2.0,
                        std::sin(kPi / 6.0) * pauli_x() / 2.0,
                        std::sin(kPi / 6.0) * pauli_y() / 2.0, pauli_x()});
  for (double t : {0.0, 0.31, 1.7})
    for (int n : {0, 2, 5})
      CHECK(sum.lambda_bound(t, n) <= a.model.lambda_bound(t, n) + b.lambda_bound(t, n) + 1e-12);
}

TEST_CASE("frame transform") {
  auto sys = build_spin_half(1.0, 4.0, kPi / 6.0);

  SUBCASE("identity frame is a no-op") {
    auto same = frame_transform(sys.model, [](double) -> Mat { return Mat::Identity(2, 2); },
                                [](double) -> Mat { return Mat::Zero(2, 2); });
    for (double t : {0.0, 0.5, 1.3})
      CHECK(spectral_norm(same.evaluate(t) - sys.model.evaluate(t)) < 1e-12);
  }

  SUBCASE("pure rotation of the zero Hamiltonian") {
    const double om = 3.0;
    auto zero = constant_model(Mat::Zero(2, 2));
    // T(t) = exp(iωtZ/2)
    auto frame = [om](double t) -> Mat { return expm_hermitian_generator(pauli_z() / 2.0, -om * t); };
    auto frame_dot = [om, frame](double t) -> Mat {
      return Mat(Complex(0, om / 2.0) * pauli_z() * frame(t));
    };
    auto rotated = frame_transform(zero, frame, frame_dot);
    for (double t : {0.0, 0.4})
      CHECK(spectral_norm(rotated.evaluate(t) + om * pauli_z() / 2.0) < 1e-10);
  }

  SUBCASE("rotating frame reproduces the built spin-half model") {
    const double b = 1.0, om = 4.0, th = kPi / 6.0;
    const Mat hlab = b * (std::cos(th) * pauli_z() / 2.0 + std::sin(th) * pauli_x() / 2.0);
    auto lab = constant_model(hlab);
    auto frame = [om](double t) -> Mat { return expm_hermitian_generator(pauli_z() / 2.0, om * t); };
    auto frame_dot = [om, frame](double t) -> Mat {
      return Mat(Complex(0, -om / 2.0) * pauli_z() * frame(t));
    };
    auto rotating = frame_transform(lab, frame, frame_dot);
    for (double t : {0.0, 0.21, 0.9})
      CHECK(spectral_norm(rotating.evaluate(t) - sys.model.evaluate(t)) < 1e-10);
  }

  SUBCASE("non-unitary frame is rejected") {
    CHECK_THROWS_AS(frame_transform(sys.model, [](double) -> Mat { return 2.0 * Mat::Identity(2, 2); },
                                    [](double) -> Mat { return Mat::Zero(2, 2); }),
                    std::invalid_argument);
  }
}

TEST_CASE("spin-half edge parameters") {
  SUBCASE("zero frame frequency leaves the lab Hamiltonian") {
    auto sys = build_spin_half(1.0, 0.0, kPi / 6.0);
    const Mat hlab = std::cos(kPi / 6.0) * pauli_z() / 2.0 + std::sin(kPi / 6.0) * pauli_x() / 2.0;
    for (double t : {0.0, 1.1}) CHECK(spectral_norm(sys.model.evaluate(t) - hlab) < 1e-14);
  }
  SUBCASE("aligned field is time-independent") {
    auto sys = build_spin_half(1.0, 4.0, 0.0);
    const Mat want = (4.0 + 1.0) * pauli_z() / 2.0;
    for (double t : {0.0, 0.9}) CHECK(spectral_norm(sys.model.evaluate(t) - want) < 1e-14);
  }
  SUBCASE("analytic propagator matches the oracle") {
    auto sys = build_spin_half(1.0, 4.0, kPi / 6.0);
    CHECK(spectral_norm(sys.exact(0.1) - exact_propagator_oracle(sys.model, 0.0, 0.1, 1e-12)) < 1e-11);
  }
}

TEST_CASE("xx chain structure") {
  CHECK_THROWS_AS(build_xx_chain(3, 1.0, 4.0), std::invalid_argument);
  CHECK_THROWS_AS(build_xx_chain(10, 1.0, 4.0), std::invalid_argument);

  SUBCASE("magnetization at two qubits") {
    auto chain = build_xx_chain(2, 1.0, 4.0);
    const Mat want = kron(pauli_z(), pauli_i()) + kron(pauli_i(), pauli_z());
    CHECK(spectral_norm(chain.magnetization - want) == 0.0);
  }

  SUBCASE("magnetization commutes with the model, G1 and G2 do not commute") {
    auto chain = build_xx_chain(4, 1.0, 4.0);
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int i = 0; i < 5; ++i) {
      const Mat h = chain.model.evaluate(u(rng));
      CHECK(spectral_norm(chain.magnetization * h - h * chain.magnetization) < 1e-12);
    }
    // G1 ∝ H̃(0) and G2 ∝ Ḣ̃(0); their commutator is nonzero
    const Mat g1 = chain.model.evaluate(0.0);
    const Mat g2 = chain.model.derivative(1, 0.0);
    CHECK(spectral_norm(g1 * g2 - g2 * g1) > 1e-3);
  }

  SUBCASE("interaction picture identity") {
    const int n = 4;
    const double j = 1.0, om = 4.0;
    auto chain = build_xx_chain(n, j, om);
    Mat h0 = Mat::Zero(16, 16), h1 = Mat::Zero(16, 16);
    for (int i = 0; i < n; ++i) {
      const int nx = (i + 1) % n;
      h0 += ((i % 2 == 0) ? 1.0 : -1.0) * om * pauli_site(n, i, 'Z') / 2.0;
      h1 += (j / 2.0) * (pauli_site(n, i, 'X') * pauli_site(n, nx, 'X') +
                         pauli_site(n, i, 'Y') * pauli_site(n, nx, 'Y'));
    }
    for (double t : {0.0, 0.21, 0.8}) {
      const Mat rot = expm_hermitian_generator(h0, -t);
      CHECK(spectral_norm(chain.model.evaluate(t) - rot * h1 * rot.adjoint()) < 1e-12);
    }
  }
}

TEST_CASE("exact propagator oracle") {
  const double tol = 1e-12;

  SUBCASE("time-independent interval matches the plain exponential") {
    auto model = constant_model(1.3 * pauli_x() + 0.4 * pauli_z());
    const Mat want = expm_hermitian_generator(model.evaluate(0.0), 0.8);
    CHECK(spectral_norm(exact_propagator_oracle(model, 0.0, 0.8, tol) - want) < tol);
  }

  SUBCASE("spin-half matches the analytic propagator and stays unitary") {
    auto sys = build_spin_half(1.0, 4.0, kPi / 6.0);
    const Mat u = exact_propagator_oracle(sys.model, 0.0, 0.5, tol);
    CHECK(spectral_norm(u - sys.exact(0.5)) < 10 * tol);
    Mat g = u.adjoint() * u;
    g.diagonal().array() -= 1.0;
    CHECK(spectral_norm(g) < 10 * tol);
  }

  SUBCASE("xx chain matches the analytic frame propagator") {
    auto chain = build_xx_chain(4, 1.0, 4.0);
    CHECK(spectral_norm(exact_propagator_oracle(chain.model, 0.0, 0.3, tol) - chain.exact(0.3)) < 10 * tol);
  }

  SUBCASE("group property and reverse direction") {
    auto sys = build_spin_half(1.0, 4.0, kPi / 6.0);
    const Mat u02 = exact_propagator_oracle(sys.model, 0.0, 0.9, tol);
    const Mat u01 = exact_propagator_oracle(sys.model, 0.0, 0.4, tol);
    const Mat u12 = exact_propagator_oracle(sys.model, 0.4, 0.9, tol);
    CHECK(spectral_norm(u02 - u12 * u01) < 20 * tol);
    const Mat back = exact_propagator_oracle(sys.model, 0.9, 0.0, tol);
    CHECK(spectral_norm(Mat(u02.adjoint()) - back) < 20 * tol);
  }

  SUBCASE("tolerance floor is enforced") {
    auto sys = build_spin_half(1.0, 4.0, kPi / 6.0);
    CHECK_THROWS_AS(exact_propagator_oracle(sys.model, 0.0, 0.1, 1e-14), std::invalid_argument);
  }
}

TEST_CASE("constant lambda bound dominates sampled derivatives") {
  auto sys = build_spin_half(1.0, 4.0, kPi / 6.0);
  auto lam = constant_lambda_bound(sys.model, 0.0, 1.0, 5);
  CHECK(lam.k_const == 0.0);
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 20; ++i) {
    const double t = u(rng);
    for (int j = 0; j <= 5; ++j) {
      const double norm = spectral_norm(sys.model.derivative(j, t));
      CHECK(std::pow(lam(t), j + 1) >= norm * (1.0 - 1e-9));
    }
  }
}

}  // TEST_SUITE
