// Copyright 2026 The ptnc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ptnc/validation.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <map>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

#include "ptnc/beamsplitter.hpp"
#include "ptnc/channels.hpp"
#include "ptnc/experiment.hpp"
#include "ptnc/measures.hpp"
#include "ptnc/ptqubit.hpp"
#include "ptnc/schmidt.hpp"

namespace ptnc {
namespace {

using Rng = std::mt19937_64;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

Complex gaussian(Rng& rng) {
  std::normal_distribution<double> n;
  const double re = n(rng);
  return {re, n(rng)};
}

QubitState random_qubit(Rng& rng) {
  const double p = uniform(rng, 0.0, 1.0);
  const double r = uniform(rng, 0.0, 1.0) * std::sqrt(p * (1.0 - p));
  return {p, std::polar(r, uniform(rng, 0.0, kTwoPi))};
}

// G G^dag / tr with G of random rank 1..4.
ComplexMatrix random_density(Rng& rng) {
  const std::size_t rank = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
  ComplexMatrix rho(4);
  for (std::size_t k = 0; k < rank; ++k) {
    Ket4 v;
    for (auto& z : v) z = gaussian(rng);
    rho += ComplexMatrix::outer(v);
  }
  rho *= 1.0 / rho.trace().real();
  return rho.hermitian_part();
}

ChannelSpec random_channel(Rng& rng, ChannelKind kind, double t) {
  switch (kind) {
    case ChannelKind::RTN:
      return ChannelSpec::rtn(uniform(rng, 0.05, 3.0), uniform(rng, 0.1, 3.0));
    case ChannelKind::PD:
      return ChannelSpec::pd(uniform(rng, 0.0, t > 0.0 ? std::min(3.0, std::numbers::pi / (2.0 * t)) : 3.0));
    case ChannelKind::AD:
      return ChannelSpec::ad(uniform(rng, 0.0, 3.0));
    case ChannelKind::None:
      break;
  }
  return ChannelSpec::none();
}

std::string format_g(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

// Runs body with timing and exception capture. body fills deviation/detail
// and returns whether its own conditions hold; the deviation is then also
// compared with the tolerance.
CheckResult timed(std::string id, std::string name, double tolerance, double time_limit,
                  const std::function<bool(CheckResult&)>& body) {
  CheckResult r;
  r.id = std::move(id);
  r.name = std::move(name);
  r.tolerance = tolerance;
  const auto start = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = body(r);
  } catch (const std::exception& e) {
    r.detail = std::string("exception: ") + e.what();
    ok = false;
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.passed = ok && std::isfinite(r.max_deviation) && r.max_deviation <= tolerance;
  if (time_limit > 0.0 && r.seconds > time_limit) {
    r.passed = false;
    r.detail += (r.detail.empty() ? "" : "; ") + std::string("runtime limit ") + format_g(time_limit) + " s exceeded";
  }
  return r;
}

void track(double& worst, double v) { worst = std::max(worst, std::isfinite(v) ? v : INFINITY); }

std::vector<ExperimentConfig> default_noise_configs() {
  return {default_config(ExperimentId::MidUnderNoise), default_config(ExperimentId::ConcurrenceUnderNoise),
          default_config(ExperimentId::NegativityUnderNoise)};
}

}  // namespace

CheckResult check_noiseless_concurrence(const ValidationOptions& opts) {
  return timed("1", "noiseless concurrence C = p", 1e-9, 5.0, [&](CheckResult& r) {
    Rng rng(opts.seed + 1);
    for (int k = 0; k < 1000; ++k) {
      const QubitState q = random_qubit(rng);
      track(r.max_deviation, std::abs(concurrence(bs_output(q)) - q.p));
    }
    r.detail = "1000 random (p, x)";
    return true;
  });
}

CheckResult check_channel_analytic(const ValidationOptions& opts) {
  return timed("2", "channel concurrence analytic vs Kraus pipeline", 1e-8, 30.0, [&](CheckResult& r) {
    Rng rng(opts.seed + 2);
    std::ostringstream detail;
    for (ChannelKind kind : {ChannelKind::RTN, ChannelKind::PD, ChannelKind::AD}) {
      double worst = 0.0;
      for (int k = 0; k < 500; ++k) {
        const QubitState q = random_qubit(rng);
        const double t = uniform(rng, 0.0, kind == ChannelKind::PD ? 5.0 : 10.0);
        const ChannelSpec a = random_channel(rng, kind, t);
        // RTN arms share one fluctuator setting; PD and AD arms are drawn independently.
        const ChannelSpec b = kind == ChannelKind::RTN ? a : random_channel(rng, kind, t);
        const double numeric = concurrence(apply_two_arm(a, b, t, t, bs_output(q)));
        track(worst, std::abs(numeric - concurrence_analytic(q, a, b, t, t)));
      }
      detail << (kind == ChannelKind::RTN ? "" : ", ") << to_string(kind) << " " << format_g(worst);
      track(r.max_deviation, worst);
    }
    r.detail = "500 cases per channel; " + detail.str();
    return true;
  });
}

CheckResult check_rtn_independent_arms(const ValidationOptions& opts) {
  return timed("2b", "RTN independent arms: C = p |L1 L2|", 1e-8, 30.0, [&](CheckResult& r) {
    Rng rng(opts.seed + 22);
    int negative = 0;
    for (int k = 0; k < 500; ++k) {
      const QubitState q = random_qubit(rng);
      const double t = uniform(rng, 0.0, 10.0);
      const ChannelSpec a = random_channel(rng, ChannelKind::RTN, t);
      const ChannelSpec b = random_channel(rng, ChannelKind::RTN, t);
      if (rtn_kernel(a, t) * rtn_kernel(b, t) < 0.0) ++negative;
      const double numeric = concurrence(apply_two_arm(a, b, t, t, bs_output(q)));
      track(r.max_deviation, std::abs(numeric - q.p * std::abs(rtn_kernel(a, t) * rtn_kernel(b, t))));
    }
    r.detail = "500 cases, " + std::to_string(negative) + " with a negative kernel product";
    return true;
  });
}

CheckResult check_bs_identity(const ValidationOptions& opts) {
  return timed("3", "beam-splitter conjugation identity", 1e-12, 0.0, [&](CheckResult& r) {
    Rng rng(opts.seed + 3);
    ComplexMatrix u = bs_unitary();
    u(1, 2) += opts.bs_fault;
    for (int k = 0; k < 1000; ++k) {
      const QubitState q = random_qubit(rng);
      track(r.max_deviation, max_abs_diff(conjugate_input(u, q), bs_output(q).rho()));
    }
    r.detail = "1000 random inputs";
    if (opts.bs_fault != 0.0) r.detail += ", injected fault " + format_g(opts.bs_fault);
    return true;
  });
}

CheckResult check_pt_spectrum(const ValidationOptions& opts) {
  return timed("4", "PT spectrum, phase label, unitarity, exceptional-point branch", 1e-8, 0.0,
               [&](CheckResult& r) {
    Rng rng(opts.seed + 4);
    double det_dev = 0.0;
    double unitary_dev = 0.0;
    double branch_dev = 0.0;
    int mislabeled = 0;
    for (int k = 0; k < 1000; ++k) {
      const PTParams p{uniform(rng, 0.0, 3.0), uniform(rng, 0.0, kTwoPi), uniform(rng, 0.0, 3.0)};
      const ComplexMatrix h = h_eff(p);
      const EigenPair e = eigenvalues(p);
      for (Complex energy : {e.plus, e.minus}) {
        const Complex det = (h(0, 0) - energy) * (h(1, 1) - energy) - h(0, 1) * h(1, 0);
        track(det_dev, std::abs(det));
      }
      const double gap = p.j() - p.gamma;
      if (std::abs(gap) > kExceptionalTol) {
        const PhaseLabel want = gap > 0.0 ? PhaseLabel::PTS : PhaseLabel::PTSB;
        if (p.phase() != want) ++mislabeled;
      }
      const PTParams ep{p.omega_eff, p.phi, p.j()};
      if (p.j() > 0.0 && ep.phase() != PhaseLabel::EXCEPTIONAL) ++mislabeled;

      const PTParams hermitian{p.omega_eff, p.phi, 0.0};
      const ComplexMatrix u = propagator(hermitian, uniform(rng, 0.0, 20.0));
      track(unitary_dev, max_abs_diff(u.adjoint() * u, ComplexMatrix::identity(2)));

      // Near the exceptional point: |omega| in [1e-6, 1e-3], both real and imaginary.
      const double w = std::pow(10.0, uniform(rng, -6.0, -3.0));
      const double j = uniform(rng, 0.5, 2.0);
      const bool broken = k % 2 == 1;
      const double gamma = std::sqrt(broken ? j * j + w * w : j * j - w * w);
      const PTParams near{1.0 + j, 0.0, gamma};
      const double t = uniform(rng, 0.0, 1.0);
      track(branch_dev, max_abs_diff(propagator(near, t, PropagatorBranch::Series),
                                     propagator(near, t, PropagatorBranch::Direct)));
    }
    r.max_deviation = branch_dev;
    r.detail = "det " + format_g(det_dev) + " (tol 1e-10), unitarity " + format_g(unitary_dev) +
               " (tol 1e-10), branch " + format_g(branch_dev) + " (tol 1e-8), mislabeled " +
               std::to_string(mislabeled);
    return det_dev <= 1e-10 && unitary_dev <= 1e-10 && mislabeled == 0;
  });
}

CheckResult check_kraus(const ValidationOptions& opts) {
  return timed("5", "Kraus completeness and two-arm trace/PSD preservation", 1e-10, 0.0, [&](CheckResult& r) {
    Rng rng(opts.seed + 5);
    double completeness = 0.0;
    double trace_dev = 0.0;
    double negative = 0.0;
    double order_dev = 0.0;
    const ChannelKind kinds[] = {ChannelKind::None, ChannelKind::RTN, ChannelKind::PD, ChannelKind::AD};
    for (int k = 0; k < 400; ++k) {
      const double t = uniform(rng, 0.0, 5.0);
      const ChannelKind kind_a = kinds[k % 4];
      const ChannelKind kind_b = kinds[(k / 4) % 4];
      const ChannelSpec a = random_channel(rng, kind_a, t);
      const ChannelSpec b = random_channel(rng, kind_b, t);
      track(completeness, kraus_at(a, t).completeness_error());
      track(completeness, kraus_at(b, t).completeness_error());

      const ComplexMatrix rho = random_density(rng);
      const ComplexMatrix out = apply_arms_sequential(a, b, t, t, rho, true);
      track(trace_dev, std::abs(out.trace() - 1.0));
      track(negative, -std::min(0.0, eig_hermitian(out.hermitian_part()).values.back()));
      track(order_dev, max_abs_diff(out, apply_arms_sequential(a, b, t, t, rho, false)));
      track(order_dev, max_abs_diff(out, apply_two_arm(a, b, t, t, TwoModeState(rho)).rho()));
    }
    r.max_deviation = std::max({completeness, trace_dev, negative, order_dev});
    r.detail = "completeness " + format_g(completeness) + ", trace " + format_g(trace_dev) +
               ", min eigenvalue -" + format_g(negative) + ", arm order " + format_g(order_dev);
    return true;
  });
}

CheckResult check_rtn_regimes(const ValidationOptions& opts) {
  return timed("6", "RTN kernel regimes", 1e-6, 0.0, [&](CheckResult& r) {
    Rng rng(opts.seed + 6);
    int failures = 0;
    double start_dev = 0.0;
    for (int k = 0; k < 200; ++k) {
      const bool non_markovian = k % 2 == 0;
      const double s = uniform(rng, 0.1, 2.0);
      const double ratio = non_markovian ? uniform(rng, 1.1, 10.0) : uniform(rng, 0.05, 0.95);  // 4 a tau
      ChannelSpec spec = ChannelSpec::rtn(ratio * s / 2.0, s);
      if (k == 0) spec = ChannelSpec::rtn(1.0, 0.2);
      if (k == 1) spec = ChannelSpec::rtn(0.1, 1.0);
      if (spec.is_non_markovian() != non_markovian) ++failures;

      const double stop = 20.0 / spec.switching_rate;
      constexpr int kPoints = 4001;
      double lo = INFINITY;
      double hi = -INFINITY;
      for (int i = 0; i < kPoints; ++i) {
        const double lambda = rtn_kernel(spec, stop * i / (kPoints - 1));
        lo = std::min(lo, lambda);
        hi = std::max(hi, lambda);
      }
      if (non_markovian ? !(lo < 0.0) : !(lo > 0.0 && hi <= 1.0)) ++failures;

      constexpr double h = 1e-9;
      track(start_dev, std::abs(rtn_kernel(spec, 0.0) - 1.0));
      track(start_dev, std::abs((rtn_kernel(spec, h) - rtn_kernel(spec, 0.0)) / h));
    }
    r.max_deviation = start_dev;
    r.detail = "200 parameter sets, " + std::to_string(failures) + " regime failures";
    return failures == 0;
  });
}

CheckResult check_pts_enhancement(const ValidationOptions& opts) {
  return timed("7", "PTS time averages exceed PTSB", 0.0, 0.0, [&](CheckResult& r) {
    const ExperimentConfig cfg = opts.measures_config.value_or(default_config(ExperimentId::MeasuresVsTime));
    std::map<std::string, std::array<double, 3>> sums;
    std::map<std::string, int> counts;
    for (const auto& row : run_measures_vs_time(cfg)) {
      auto& s = sums[row.label];
      s[0] += *row.q;
      s[1] += *row.c;
      s[2] += *row.n;
      ++counts[row.label];
    }
    if (!counts.count("PTS") || !counts.count("PTSB")) {
      r.detail = "configuration lacks a PTS or PTSB set";
      return false;
    }
    const char* names[] = {"Q", "C", "N"};
    std::ostringstream detail;
    bool ok = true;
    for (int m = 0; m < 3; ++m) {
      const double pts = sums["PTS"][m] / counts["PTS"];
      const double ptsb = sums["PTSB"][m] / counts["PTSB"];
      ok = ok && pts > ptsb;
      detail << (m ? ", " : "") << names[m] << " " << format_g(pts) << " vs " << format_g(ptsb);
    }
    r.detail = detail.str();
    return ok;
  });
}

CheckResult check_noise_degrades(const ValidationOptions& opts) {
  return timed("8", "noise never raises Q, C or N above the noiseless value", 1e-9, 0.0, [&](CheckResult& r) {
    const auto configs = opts.noise_configs.empty() ? default_noise_configs() : opts.noise_configs;
    std::size_t points = 0;
    for (const auto& cfg : configs) {
      cfg.validate();
      double (*measure)(const TwoModeState&) = nullptr;
      switch (cfg.experiment) {
        case ExperimentId::MidUnderNoise: measure = &mid; break;
        case ExperimentId::ConcurrenceUnderNoise: measure = &concurrence; break;
        case ExperimentId::NegativityUnderNoise: measure = &negativity; break;
        default: continue;
      }
      const auto times = cfg.time.points();
      for (const auto& set : cfg.pt_sets) {
        for (double t : times) {
          const TwoModeState clean = bs_output(QubitState::from_matrix(rho_t(set.params, t)));
          const double reference = measure(clean);
          for (const auto& ch : cfg.channels) {
            const double noisy = measure(apply_two_arm(ch.arm_a, ch.arm_b, t, t, clean));
            track(r.max_deviation, std::max(0.0, noisy - reference));
            ++points;
          }
        }
      }
    }
    r.detail = std::to_string(configs.size()) + " configurations, " + std::to_string(points) +
               " points; deviation is the largest excess";
    return points > 0;
  });
}

CheckResult check_schmidt(const ValidationOptions& opts) {
  return timed("9", "Schmidt values, appendix example, PD Bell-diagonal concurrence", 1e-9, 0.0,
               [&](CheckResult& r) {
    Rng rng(opts.seed + 9);
    double sv_dev = 0.0;
    for (int k = 0; k < 1000; ++k) {
      AmplitudeMatrix m{gaussian(rng), gaussian(rng), gaussian(rng), gaussian(rng)};
      if (k % 10 == 0) m.d = m.b * m.c / m.a;  // rank one
      const double n = std::sqrt(std::norm(m.a) + std::norm(m.b) + std::norm(m.c) + std::norm(m.d));
      m = {m.a / n, m.b / n, m.c / n, m.d / n};
      const SingularValues closed = singular_values(m);
      const SingularValues numeric = singular_values_numeric(m);
      track(sv_dev, std::max(std::abs(closed.plus - numeric.plus), std::abs(closed.minus - numeric.minus)));
    }

    const SchmidtForm half = schmidt_decompose({0.5, 0.5, 0.5, 0.5});
    const double alpha = half.alpha;
    const Ket4 w{0.0, half.sigma.plus, half.sigma.minus, 0.0};  // sqrt(alpha)|01> + sqrt(1 - alpha)|10>
    double example_dev = std::abs(alpha - 1.0);
    const Ket4 w01{0.0, 1.0, 0.0, 0.0};
    for (std::size_t i = 0; i < 4; ++i) track(example_dev, std::abs(w[i] - w01[i]));

    double bell_dev = 0.0;
    const TwoModeState bell = bs_output({1.0, 0.0});
    for (int i = 0; i < 20; ++i) {
      for (int j = 0; j < 20; ++j) {
        const double l1 = i / 19.0;
        const double l2 = j / 19.0;
        const double formula = pd_bell_diagonal_concurrence(l1, l2);
        const ChannelSpec a = ChannelSpec::pd(std::acos(std::sqrt(1.0 - l1)));
        const ChannelSpec b = ChannelSpec::pd(std::acos(std::sqrt(1.0 - l2)));
        track(bell_dev, std::abs(concurrence(apply_two_arm(a, b, 1.0, 1.0, bell)) - formula));
        track(bell_dev, std::abs(concurrence(TwoModeState(pd_bell_diagonal_state(l1, l2))) - formula));
      }
    }
    r.max_deviation = bell_dev;
    r.detail = "singular values " + format_g(sv_dev) + " (tol 1e-10), alpha(1/2,1/2,1/2,1/2) = " +
               format_g(alpha) + ", Bell-diagonal grid " + format_g(bell_dev);
    return sv_dev <= 1e-10 && example_dev <= 1e-10;
  });
}

CheckResult check_negativity_forms(const ValidationOptions& opts) {
  return timed("10", "negativity eigenvalue vs trace-norm form; p = 1 output", 1e-10, 0.0, [&](CheckResult& r) {
    Rng rng(opts.seed + 10);
    for (int k = 0; k < 1000; ++k) {
      const TwoModeState state(random_density(rng));
      track(r.max_deviation, std::abs(negativity(state) - negativity_trace_norm(state)));
    }
    const TwoModeState bell = bs_output({1.0, 0.0});
    const double n = negativity(bell);
    const double q = mid(bell);
    track(r.max_deviation, std::abs(n - 0.5));
    track(r.max_deviation, std::abs(q - 1.0));
    r.detail = "1000 random states; p = 1 gives N = " + format_g(n) + ", Q = " + format_g(q);
    return true;
  });
}

CheckResult report_gate_decomposition() {
  CheckResult r;
  r.id = "info";
  r.name = "CS (T x T) sqrt(SWAP) vs beam-splitter unitary";
  r.informational = true;
  r.passed = true;
  const PhaseAlignedDistance d = phase_aligned_distance(gate_decomposition(), bs_unitary());
  r.max_deviation = d.frobenius;
  r.detail = "phase-aligned Frobenius " + format_g(d.frobenius) + ", max entry " + format_g(d.max_entry);
  return r;
}

void use_configs(ValidationOptions& opts, const std::vector<LoadedConfig>& configs) {
  for (const auto& loaded : configs) {
    switch (loaded.config.experiment) {
      case ExperimentId::MeasuresVsTime:
        opts.measures_config = loaded.config;
        break;
      case ExperimentId::MidUnderNoise:
      case ExperimentId::ConcurrenceUnderNoise:
      case ExperimentId::NegativityUnderNoise:
        opts.noise_configs.push_back(loaded.config);
        break;
      default:
        break;
    }
  }
}

bool ValidationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.informational || c.passed; });
}

void ValidationReport::print(std::ostream& out) const {
  for (const auto& c : checks) {
    const char* tag = c.informational ? "INFO" : (c.passed ? "PASS" : "FAIL");
    char line[256];
    std::snprintf(line, sizeof line, "[%s] %-4s %-62s max_dev=%-10.3g tol=%-8.3g %.2fs", tag, c.id.c_str(),
                  c.name.c_str(), c.max_deviation, c.tolerance, c.seconds);
    out << line;
    if (!c.detail.empty()) out << "  (" << c.detail << ")";
    out << '\n';
  }
  out << (all_passed() ? "all checks passed" : "some checks FAILED") << '\n';
}

ValidationReport run_validation(const ValidationOptions& opts) {
  ValidationReport report;
  report.checks = {
      check_noiseless_concurrence(opts), check_channel_analytic(opts), check_rtn_independent_arms(opts),
      check_bs_identity(opts),           check_pt_spectrum(opts),      check_kraus(opts),
      check_rtn_regimes(opts),           check_pts_enhancement(opts),  check_noise_degrades(opts),
      check_schmidt(opts),               check_negativity_forms(opts), report_gate_decomposition(),
  };
  return report;
}

}  // namespace ptnc
