#pragma once

// Exact QAOA statevector simulation for MaxCut.
//
// |gamma, beta> = prod_l exp(-i beta_l B) exp(-i gamma_l C) |+>^n with C the
// cut-count diagonal and B = sum_q X_q.

#include <qgl/error.hpp>
#include <qgl/graph.hpp>
#include <qgl/qaoa/maxcut.hpp>

#include <cmath>
#include <complex>
#include <numbers>
#include <span>
#include <string>
#include <vector>

namespace qgl {

using Amplitude = std::complex<double>;
using Statevector = std::vector<Amplitude>;

inline constexpr double kGammaPeriod = 2.0 * std::numbers::pi;
inline constexpr double kBetaPeriod = std::numbers::pi;

struct AngleVector {
  std::vector<double> gammas;
  std::vector<double> betas;

  AngleVector() = default;
  AngleVector(std::vector<double> g, std::vector<double> b) : gammas(std::move(g)), betas(std::move(b)) {
    if (gammas.size() != betas.size()) throw Error(Errc::shape, "gamma and beta counts differ");
  }

  static AngleVector zeros(int depth) {
    return {std::vector<double>(static_cast<std::size_t>(depth), 0.0), std::vector<double>(static_cast<std::size_t>(depth), 0.0)};
  }

  int depth() const noexcept { return static_cast<int>(gammas.size()); }

  /// Reduced into gamma in [0, 2pi), beta in [0, pi).
  AngleVector canonical() const {
    auto wrap = [](double x, double period) {
      double r = std::fmod(x, period);
      if (r < 0) r += period;
      return r >= period ? 0.0 : r;
    };
    AngleVector out = *this;
    for (double& g : out.gammas) g = wrap(g, kGammaPeriod);
    for (double& b : out.betas) b = wrap(b, kBetaPeriod);
    return out;
  }

  /// Appends identity layers (zero angles) up to `depth`.
  AngleVector padded(int depth) const {
    AngleVector out = *this;
    out.gammas.resize(static_cast<std::size_t>(depth), 0.0);
    out.betas.resize(static_cast<std::size_t>(depth), 0.0);
    return out;
  }

  /// Flat parameter layout: gammas then betas.
  std::vector<double> flat() const {
    std::vector<double> x = gammas;
    x.insert(x.end(), betas.begin(), betas.end());
    return x;
  }

  static AngleVector from_flat(std::span<const double> x) {
    const std::size_t p = x.size() / 2;
    return {std::vector<double>(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(p)),
            std::vector<double>(x.begin() + static_cast<std::ptrdiff_t>(p), x.end())};
  }
};

class QaoaSimulator {
 public:
  explicit QaoaSimulator(const Graph& g) : n_(g.order()), cost_(cost_vector(g)), maxcut_(maxcut_bruteforce(g)) {}

  int order() const noexcept { return n_; }
  std::span<const int> costs() const noexcept { return cost_; }
  const MaxCutSummary& maxcut() const noexcept { return maxcut_; }

  Statevector uniform_state() const {
    return Statevector(cost_.size(), Amplitude(std::pow(2.0, -0.5 * n_), 0.0));
  }

  Statevector evolve(const AngleVector& angles) const {
    Statevector psi = uniform_state();
    for (int l = 0; l < angles.depth(); ++l) {
      apply_phase(psi, angles.gammas[static_cast<std::size_t>(l)]);
      apply_mixer(psi, angles.betas[static_cast<std::size_t>(l)]);
    }
    return psi;
  }

  double expectation(std::span<const Amplitude> psi) const {
    double total = 0.0;
    for (std::size_t z = 0; z < psi.size(); ++z) total += cost_[z] * std::norm(psi[z]);
    return total;
  }

  double prob_cmax(std::span<const Amplitude> psi) const {
    double total = 0.0;
    for (std::size_t z = 0; z < psi.size(); ++z) {
      if (maxcut_.optimal_mask[z]) total += std::norm(psi[z]);
    }
    return total;
  }

  double expectation(const AngleVector& angles) const { return expectation(evolve(angles)); }

  /// <C> and its gradient (d/dgamma then d/dbeta) by one forward and one
  /// adjoint sweep.
  double expectation_and_gradient(const AngleVector& angles, std::span<double> gradient) const {
    const int p = angles.depth();
    if (static_cast<int>(gradient.size()) != 2 * p) throw Error(Errc::shape, "gradient needs 2p entries");
    Statevector phi = evolve(angles);
    Statevector lambda(phi.size());
    for (std::size_t z = 0; z < phi.size(); ++z) lambda[z] = static_cast<double>(cost_[z]) * phi[z];
    const double value = expectation(phi);
    for (int l = p - 1; l >= 0; --l) {
      const double beta = angles.betas[static_cast<std::size_t>(l)];
      const double gamma = angles.gammas[static_cast<std::size_t>(l)];
      gradient[static_cast<std::size_t>(p + l)] = 2.0 * mixer_overlap(lambda, phi).imag();
      apply_mixer(phi, -beta);
      apply_mixer(lambda, -beta);
      gradient[static_cast<std::size_t>(l)] = 2.0 * cost_overlap(lambda, phi).imag();
      apply_phase(phi, -gamma);
      apply_phase(lambda, -gamma);
    }
    return value;
  }

  void apply_phase(Statevector& psi, double gamma) const {
    std::vector<Amplitude> phase(static_cast<std::size_t>(maxcut_.cmax) + 1);
    for (std::size_t k = 0; k < phase.size(); ++k) phase[k] = std::polar(1.0, -gamma * static_cast<double>(k));
    for (std::size_t z = 0; z < psi.size(); ++z) psi[z] *= phase[static_cast<std::size_t>(cost_[z])];
  }

  /// exp(-i beta X) on every qubit.
  void apply_mixer(Statevector& psi, double beta) const {
    const double c = std::cos(beta);
    const Amplitude minus_i_s(0.0, -std::sin(beta));
    for (int q = 0; q < n_; ++q) {
      const std::size_t stride = std::size_t{1} << q;
      for (std::size_t block = 0; block < psi.size(); block += 2 * stride) {
        for (std::size_t z = block; z < block + stride; ++z) {
          const Amplitude a = psi[z];
          const Amplitude b = psi[z + stride];
          psi[z] = c * a + minus_i_s * b;
          psi[z + stride] = minus_i_s * a + c * b;
        }
      }
    }
  }

 private:
  // <bra| B |ket> with B = sum_q X_q.
  Amplitude mixer_overlap(const Statevector& bra, const Statevector& ket) const {
    Amplitude total = 0.0;
    for (std::size_t z = 0; z < ket.size(); ++z) {
      Amplitude flipped = 0.0;
      for (int q = 0; q < n_; ++q) flipped += ket[z ^ (std::size_t{1} << q)];
      total += std::conj(bra[z]) * flipped;
    }
    return total;
  }

  Amplitude cost_overlap(const Statevector& bra, const Statevector& ket) const {
    Amplitude total = 0.0;
    for (std::size_t z = 0; z < ket.size(); ++z) total += std::conj(bra[z]) * (static_cast<double>(cost_[z]) * ket[z]);
    return total;
  }

  int n_;
  std::vector<int> cost_;
  MaxCutSummary maxcut_;
};

inline Statevector evolve(const Graph& g, const AngleVector& angles) { return QaoaSimulator(g).evolve(angles); }

inline double expectation(const Graph& g, std::span<const Amplitude> psi) {
  const std::vector<int> cost = cost_vector(g);
  if (psi.size() != cost.size()) throw Error(Errc::shape, "statevector size does not match 2^n");
  double total = 0.0;
  for (std::size_t z = 0; z < psi.size(); ++z) total += cost[z] * std::norm(psi[z]);
  return total;
}

inline double prob_cmax(const Graph& /*g*/, std::span<const Amplitude> psi, const MaxCutSummary& mc) {
  if (psi.size() != mc.optimal_mask.size()) throw Error(Errc::shape, "statevector size does not match 2^n");
  double total = 0.0;
  for (std::size_t z = 0; z < psi.size(); ++z) {
    if (mc.optimal_mask[z]) total += std::norm(psi[z]);
  }
  return total;
}

}  // namespace qgl
