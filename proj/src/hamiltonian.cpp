#include "mpfsim/hamiltonian.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "mpfsim/pauli.hpp"

namespace mpfsim {

double Coefficient::derivative(int order, double t) const {
  if (order < 0) throw std::invalid_argument("Coefficient: negative derivative order");
  if (order <= analytic_order) return deriv(order, t);
  const double h = 1e-4 * (1.0 + std::abs(t));
  return (derivative(order - 1, t + h) - derivative(order - 1, t - h)) / (2.0 * h);
}

Coefficient constant_coefficient(double value) {
  return Coefficient{[value](int order, double) { return order == 0 ? value : 0.0; },
                     Coefficient::kUnbounded};
}

Coefficient cosine_coefficient(double amp, double freq, double phase) {
  return Coefficient{[amp, freq, phase](int order, double t) {
                       // d^n cos(x) = cos(x + n π/2)
                       return amp * std::pow(freq, order) *
                              std::cos(freq * t + phase + order * std::numbers::pi / 2.0);
                     },
                     Coefficient::kUnbounded};
}

Coefficient sine_coefficient(double amp, double freq, double phase) {
  return cosine_coefficient(amp, freq, phase - std::numbers::pi / 2.0);
}

struct HamiltonianModel::Impl {
  virtual ~Impl() = default;
  virtual int dim() const = 0;
  virtual int term_count() const = 0;
  virtual int deriv_order() const = 0;
  virtual Mat evaluate(double t) const = 0;
  virtual Mat derivative(int order, double t) const = 0;
};

namespace {

struct LinearCombinationImpl final : HamiltonianModel::Impl {
  std::vector<Coefficient> coeffs;
  std::vector<Mat> terms;
  int dimension = 0;
  int analytic_order = 0;

  int dim() const override { return dimension; }
  int term_count() const override { return static_cast<int>(terms.size()); }
  int deriv_order() const override { return analytic_order; }

  Mat evaluate(double t) const override { return derivative(0, t); }

  Mat derivative(int order, double t) const override {
    Mat out = Mat::Zero(dimension, dimension);
    for (std::size_t j = 0; j < terms.size(); ++j)
      out += coeffs[j].derivative(order, t) * terms[j];
    return out;
  }
};

struct FrameTransformedImpl final : HamiltonianModel::Impl {
  HamiltonianModel base;
  std::function<Mat(double)> frame;
  std::function<Mat(double)> frame_dot;

  explicit FrameTransformedImpl(HamiltonianModel b) : base(std::move(b)) {}

  int dim() const override { return base.dim(); }
  int term_count() const override { return base.term_count(); }
  // Only the first frame derivative is supplied, so higher orders come from
  // finite differences of evaluate(); usable up to second order.
  int deriv_order() const override { return 2; }

  Mat evaluate(double t) const override {
    const Mat tf = frame(t);
    return Complex(0, 1) * frame_dot(t) * tf.adjoint() + tf * base.evaluate(t) * tf.adjoint();
  }

  Mat derivative(int order, double t) const override {
    if (order == 0) return evaluate(t);
    const double h = 1e-4 * (1.0 + std::abs(t));
    return (derivative(order - 1, t + h) - derivative(order - 1, t - h)) / (2.0 * h);
  }
};

}  // namespace

HamiltonianModel::HamiltonianModel(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

HamiltonianModel::HamiltonianModel(std::vector<Coefficient> coefficients, std::vector<Mat> terms) {
  if (coefficients.empty() || coefficients.size() != terms.size())
    throw std::invalid_argument("HamiltonianModel: need matching nonempty coefficient and term lists");
  auto impl = std::make_shared<LinearCombinationImpl>();
  impl->dimension = static_cast<int>(terms.front().rows());
  impl->analytic_order = Coefficient::kUnbounded;
  for (const auto& term : terms) {
    if (term.rows() != impl->dimension || term.cols() != impl->dimension)
      throw std::invalid_argument("HamiltonianModel: terms must be square with a common dimension");
    if (!is_hermitian(term, kHermTol))
      throw std::invalid_argument("HamiltonianModel: every term must be Hermitian");
  }
  for (const auto& coeff : coefficients)
    impl->analytic_order = std::min(impl->analytic_order, coeff.analytic_order);
  impl->coeffs = std::move(coefficients);
  impl->terms = std::move(terms);
  impl_ = std::move(impl);
}

int HamiltonianModel::dim() const { return impl_->dim(); }
int HamiltonianModel::term_count() const { return impl_->term_count(); }
int HamiltonianModel::deriv_order() const { return impl_->deriv_order(); }
Mat HamiltonianModel::evaluate(double t) const { return impl_->evaluate(t); }
Mat HamiltonianModel::derivative(int order, double t) const { return impl_->derivative(order, t); }

double HamiltonianModel::lambda_bound(double t, int n) const {
  if (n < 0) throw std::invalid_argument("lambda_bound: order must be nonnegative");
  if (n > deriv_order())
    throw std::invalid_argument("lambda_bound: unsupported order, exceeds the model's analytic derivative order");
  double best = 0.0;
  for (int j = 0; j <= n; ++j) {
    const double norm = spectral_norm(impl_->derivative(j, t));
    best = std::max(best, std::pow(norm, 1.0 / (j + 1)));
  }
  return best;
}

LambdaBound constant_lambda_bound(const HamiltonianModel& model, double t0, double t1,
                                  int n, int samples) {
  if (samples < 2) throw std::invalid_argument("constant_lambda_bound: need at least 2 samples");
  double peak = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double t = t0 + (t1 - t0) * i / (samples - 1);
    peak = std::max(peak, model.lambda_bound(t, n));
  }
  return LambdaBound{[peak](double) { return peak; }, 0.0};
}

HamiltonianModel frame_transform(const HamiltonianModel& model,
                                 const std::function<Mat(double)>& frame,
                                 const std::function<Mat(double)>& frame_dot) {
  auto impl = std::make_shared<FrameTransformedImpl>(model);
  impl->frame = frame;
  impl->frame_dot = frame_dot;
  for (double t : {0.0, 0.37, 1.0, 2.59}) {
    const Mat tf = frame(t);
    if (tf.rows() != model.dim() || !is_unitary(tf, 1e-10))
      throw std::invalid_argument("frame_transform: invalid frame, T(t) must be unitary");
    const double h = 1e-5 * (1.0 + std::abs(t));
    const Mat fd = (frame(t + h) - frame(t - h)) / (2.0 * h);
    const double scale = std::max(1.0, spectral_norm(fd));
    if (spectral_norm(fd - frame_dot(t)) / scale > 1e-6)
      throw std::invalid_argument("frame_transform: invalid frame, Tdot inconsistent with finite differences of T");
    if (!is_hermitian(impl->evaluate(t), 1e-10))
      throw std::invalid_argument("frame_transform: invalid frame, transformed Hamiltonian is not Hermitian");
  }
  return HamiltonianModel(std::move(impl));
}

SpinHalfSystem build_spin_half(double b_field, double omega, double theta) {
  if (!std::isfinite(b_field) || !std::isfinite(omega) || !std::isfinite(theta))
    throw std::invalid_argument("build_spin_half: parameters must be finite");
  const Mat z = pauli_z(), x = pauli_x(), y = pauli_y();
  std::vector<Coefficient> coeffs{constant_coefficient(1.0),
                                  cosine_coefficient(1.0, omega),
                                  sine_coefficient(1.0, omega)};
  std::vector<Mat> terms{(omega + b_field * std::cos(theta)) * z / 2.0,
                         b_field * std::sin(theta) * x / 2.0,
                         b_field * std::sin(theta) * y / 2.0};
  HamiltonianModel model(std::move(coeffs), std::move(terms));

  const Mat h_lab = b_field * (std::cos(theta) * z / 2.0 + std::sin(theta) * x / 2.0);
  auto exact = [h_lab, z, omega](double t) -> Mat {
    const Mat rz = expm_hermitian_generator(z / 2.0, omega * t);  // R_z(ωt)
    return rz * expm_hermitian_generator(h_lab, t);
  };
  return SpinHalfSystem{std::move(model), std::move(exact)};
}

XxChainSystem build_xx_chain(int n_qubits, double coupling, double omega) {
  if (n_qubits < 2 || n_qubits > 8) throw std::invalid_argument("build_xx_chain: N must be in [2, 8]");
  if (n_qubits % 2 != 0)
    throw std::invalid_argument("build_xx_chain: invalid input, only even qubit counts avoid frequency matching on the ring");

  const Eigen::Index dim = Eigen::Index(1) << n_qubits;
  Mat g1 = Mat::Zero(dim, dim), g2 = Mat::Zero(dim, dim);
  Mat h0 = Mat::Zero(dim, dim), mu = Mat::Zero(dim, dim);
  for (int i = 0; i < n_qubits; ++i) {
    const int next = (i + 1) % n_qubits;
    const Mat xi = pauli_site(n_qubits, i, 'X'), xn = pauli_site(n_qubits, next, 'X');
    const Mat yi = pauli_site(n_qubits, i, 'Y'), yn = pauli_site(n_qubits, next, 'Y');
    const Mat zi = pauli_site(n_qubits, i, 'Z');
    g1 += xi * xn + yi * yn;
    // alternating frequencies ω_i = (-1)^i ω turn the hopping terms by Δω_i = -2(-1)^i ω
    g2 += ((i % 2 == 0) ? 1.0 : -1.0) * (xi * yn - yi * xn);
    h0 += ((i % 2 == 0) ? 1.0 : -1.0) * omega * zi / 2.0;
    mu += zi;
  }

  std::vector<Coefficient> coeffs{cosine_coefficient(1.0, 2.0 * omega),
                                  sine_coefficient(1.0, 2.0 * omega)};
  std::vector<Mat> terms{coupling * g1 / 2.0, coupling * g2 / 2.0};
  HamiltonianModel model(std::move(coeffs), std::move(terms));

  const Mat h_lab = h0 + coupling * g1 / 2.0;
  auto exact = [h0, h_lab](double t) -> Mat {
    return expm_hermitian_generator(h0, -t) * expm_hermitian_generator(h_lab, t);
  };
  return XxChainSystem{std::move(model), std::move(exact), std::move(mu)};
}

namespace {

Mat composite_midpoint(const HamiltonianModel& model, double t0, double t1, int steps) {
  const double dt = (t1 - t0) / steps;
  Mat u = Mat::Identity(model.dim(), model.dim());
  for (int i = 0; i < steps; ++i) {
    const double mid = t0 + (i + 0.5) * dt;
    u = expm_hermitian_generator(model.evaluate(mid), dt) * u;
  }
  return u;
}

}  // namespace

Mat exact_propagator_oracle(const HamiltonianModel& model, double t0, double t1, double tol) {
  if (tol < 1e-13) throw std::invalid_argument("exact_propagator_oracle: tol must be >= 1e-13");
  if (t0 == t1) return Mat::Identity(model.dim(), model.dim());

  constexpr int kMaxLevels = 24;
  // tableau[j] holds the order-2(j+1) extrapolant at the current refinement
  std::vector<Mat> tableau;
  int steps = 2;
  Mat previous;
  for (int level = 0; level <= kMaxLevels; ++level, steps *= 2) {
    Mat refined = composite_midpoint(model, t0, t1, steps);
    double weight = 4.0;
    for (auto& entry : tableau) {
      Mat next = (weight * refined - entry) / (weight - 1.0);
      entry = std::move(refined);
      refined = std::move(next);
      weight *= 4.0;
    }
    tableau.push_back(refined);
    if (level > 0 && spectral_norm(refined - previous) < tol) return refined;
    previous = std::move(refined);
  }
  throw std::runtime_error("exact_propagator_oracle: convergence failure after 24 mesh halvings");
}

}  // namespace mpfsim
