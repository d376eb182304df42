// Copyright 2026 The wsdbounds Authors
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
/**
 * @file
 * Dense state vectors over (C^2)^{(x)n}, the real rotation
 *
 *     R(theta) = [ sin  cos ]
 *                [ cos -sin ]
 *
 * its n-fold tensor power S(theta), and the sums over a code and its dual that
 * S(theta) produces when applied to the uniform superposition of a code.
 *
 * Qubit 1 is the leftmost bit of a basis string and the most significant bit
 * of the amplitude index, matching the packing in gf2.hpp.
 */
#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numbers>
#include <ostream>
#include <string_view>
#include <vector>

#include "wsd/enumerators.hpp"
#include "wsd/errors.hpp"
#include "wsd/gf2.hpp"

namespace wsd {

/// Largest qubit count for which a dense state vector is allocated.
inline constexpr int kStateCap = 22;
/// Largest log2 of the number of (coset representative, codeword) pairs
/// visited when evaluating the dual-component mass combinatorially.
inline constexpr int kCosetWorkCap = 32;

struct RotationGate {
    double theta = 0.0;
    std::array<std::array<double, 2>, 2> m{};

    /// max |(M^T M - I)_ij|
    double unitarity_defect() const noexcept {
        double worst = 0.0;
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                const double g = m[0][i] * m[0][j] + m[1][i] * m[1][j];
                worst = std::max(worst, std::abs(g - (i == j ? 1.0 : 0.0)));
            }
        }
        return worst;
    }
};

inline RotationGate rotation_gate(double theta) {
    if (!std::isfinite(theta)) {
        throw InputError("rotation angle must be finite");
    }
    const double s = std::sin(theta);
    const double c = std::cos(theta);
    return {theta, {{{s, c}, {c, -s}}}};
}

/**
 * s^p * t^q with 0^0 = 1.
 *
 * A base within 1e-15 of zero raised to a positive power is exactly zero;
 * otherwise the magnitude is formed in the log domain and the sign restored.
 */
inline double trig_power(double s, int p, double t, int q) {
    constexpr double kZero = 1e-15;
    if ((p > 0 && std::abs(s) < kZero) || (q > 0 && std::abs(t) < kZero)) {
        return 0.0;
    }
    double log_mag = 0.0;
    bool negative = false;
    if (p > 0) {
        log_mag += p * std::log(std::abs(s));
        negative ^= (s < 0 && (p & 1));
    }
    if (q > 0) {
        log_mag += q * std::log(std::abs(t));
        negative ^= (t < 0 && (q & 1));
    }
    const double mag = std::exp(log_mag);
    return negative ? -mag : mag;
}

class StateVector {
  public:
    using Amplitude = std::complex<double>;

    explicit StateVector(int qubits) : n_(qubits) {
        if (qubits < 1 || qubits > kStateCap) {
            throw CapacityError("state vector of " + std::to_string(qubits) +
                                " qubits outside [1, " + std::to_string(kStateCap) + "]");
        }
        amps_.assign(std::size_t{1} << qubits, Amplitude{});
    }

    static StateVector basis(int qubits, Word index) {
        StateVector s(qubits);
        s.amps_.at(index) = 1.0;
        return s;
    }

    int qubits() const noexcept { return n_; }
    std::size_t size() const noexcept { return amps_.size(); }
    const Amplitude& operator[](Word i) const { return amps_[i]; }
    Amplitude& operator[](Word i) { return amps_[i]; }
    std::span<const Amplitude> amplitudes() const noexcept { return amps_; }

    double norm() const {
        CompensatedSum s;
        for (const auto& a : amps_) {
            s.add(std::norm(a));
        }
        return std::sqrt(s.value());
    }

    /// One CSV line per nonzero amplitude: bitstring,real,imag.
    void dump_csv(std::ostream& os, double threshold = 0.0) const {
        os << "basis,real,imag\n";
        os.precision(17);
        for (std::size_t i = 0; i < amps_.size(); ++i) {
            if (std::abs(amps_[i]) > threshold) {
                os << to_bitstring(i, n_) << ',' << amps_[i].real() << ',' << amps_[i].imag() << '\n';
            }
        }
    }

  private:
    int n_;
    std::vector<Amplitude> amps_;
};

/// Uniform superposition 2^(-k/2) sum_{c in C} |c>.
inline StateVector code_state(const BinaryCode& code) {
    StateVector s(code.length());
    const double amp = std::pow(2.0, -0.5 * code.dimension());
    for_each_codeword(code, [&](Word c) { s[c] = amp; });
    return s;
}

/// R(theta) applied to every qubit, one pass over amplitude pairs per qubit.
inline StateVector apply_s_theta(const StateVector& in, double theta) {
    const auto gate = rotation_gate(theta);
    StateVector out = in;
    const std::size_t dim = out.size();
    for (int bit = 0; bit < in.qubits(); ++bit) {
        const std::size_t stride = std::size_t{1} << bit;
        for (std::size_t block = 0; block < dim; block += 2 * stride) {
            for (std::size_t i = block; i < block + stride; ++i) {
                const auto a0 = out[i];
                const auto a1 = out[i + stride];
                out[i] = gate.m[0][0] * a0 + gate.m[0][1] * a1;
                out[i + stride] = gate.m[1][0] * a0 + gate.m[1][1] * a1;
            }
        }
    }
    return out;
}

/// Exponent of cos in <a| S(theta) |c>, obtained two ways.
struct ExponentForms {
    int from_sum = 0;   // wt(c + a), c + a over GF(2)
    int from_parts = 0; // wt(c) + wt(a) - 2 c.a
    int sign_parity = 0; // c.a mod 2
};

inline ExponentForms exponent_forms(Word c, Word a) noexcept {
    const int ca = hamming_weight(c & a);
    return {hamming_weight(c ^ a), hamming_weight(c) + hamming_weight(a) - 2 * ca, ca & 1};
}

/// <a| S(theta) |c> = (-1)^(c.a) sin^(n - wt(c+a)) cos^(wt(c+a)).
inline double closed_form_amplitude(Word c, Word a, int n, double theta) {
    const auto e = exponent_forms(c, a);
    if (e.from_sum != e.from_parts) {
        throw std::logic_error("exponent identity wt(c)+wt(a)-2c.a = wt(c+a) violated");
    }
    const double v = trig_power(std::sin(theta), n - e.from_sum, std::cos(theta), e.from_sum);
    return e.sign_parity ? -v : v;
}

/// Same coefficient with the exponents written as n - wt c - wt a + 2c.a and
/// wt c + wt a - 2c.a.
inline double closed_form_amplitude_expanded(Word c, Word a, int n, double theta) {
    const auto e = exponent_forms(c, a);
    const double v = trig_power(std::sin(theta), n - e.from_parts, std::cos(theta), e.from_parts);
    return e.sign_parity ? -v : v;
}

inline double closed_form_amplitude(std::string_view c, std::string_view a, double theta) {
    if (c.size() != a.size() || c.empty()) {
        throw InputError("basis strings must be nonempty and of equal length");
    }
    return closed_form_amplitude(from_bitstring(c), from_bitstring(a), static_cast<int>(c.size()), theta);
}

/// Probability mass of `state` on the basis vectors indexed by `subspace`.
inline double projected_mass(const StateVector& state, const BinaryCode& subspace) {
    if (subspace.length() != state.qubits()) {
        throw InputError("subspace length does not match state");
    }
    CompensatedSum s;
    for_each_codeword(subspace, [&](Word a) { s.add(std::norm(state[a])); });
    return s.value();
}

/**
 * (1/2^k) sum_{a in C-perp} ( sum_{c in C} sin^(n - wt(c+a)) cos^(wt(c+a)) )^2
 *
 * The inner sum depends only on the coset a + C. Writing H = C intersect
 * C-perp and R for a complement of H inside C-perp, every a in C-perp is
 * r + h with r in span(R), h in H, and a + C = r + C. The coset weight
 * profiles of r + C are computed once, so evaluating many angles costs
 * O(#distinct profiles * n) each.
 */
class DualMassEvaluator {
  public:
    explicit DualMassEvaluator(const BinaryCode& code) : n_(code.length()), k_(code.dimension()) {
        if (k_ > kEnumerationCap || n_ - k_ > kEnumerationCap) {
            throw CapacityError("dual-component mass needs k and n-k <= " + std::to_string(kEnumerationCap));
        }
        const auto dual = dual_code(code);
        const auto h = hull(code);
        h_ = h.dimension();
        const auto reps = complement_basis(h.generators(), dual.generators(), n_);
        const int work = static_cast<int>(reps.size()) + k_;
        if (work > kCosetWorkCap) {
            throw CapacityError("dual-component mass would visit 2^" + std::to_string(work) + " words");
        }
        std::map<std::vector<std::uint32_t>, std::uint64_t> profiles;
        std::vector<std::uint32_t> counts(static_cast<std::size_t>(n_) + 1);
        for_each_codeword(reps, 0, std::uint64_t{1} << reps.size(), [&](Word r) {
            std::fill(counts.begin(), counts.end(), 0U);
            for_each_codeword(code, [&](Word c) { ++counts[static_cast<std::size_t>(hamming_weight(r ^ c))]; });
            ++profiles[counts];
        });
        profiles_.assign(profiles.begin(), profiles.end());
    }

    double operator()(double theta) const {
        const double s = std::sin(theta);
        const double t = std::cos(theta);
        const double scale = std::ldexp(1.0, h_ - k_);
        CompensatedSum mass;
        for (const auto& [counts, multiplicity] : profiles_) {
            CompensatedSum inner;
            for (int w = 0; w <= n_; ++w) {
                if (counts[static_cast<std::size_t>(w)]) {
                    inner.add(counts[static_cast<std::size_t>(w)] * trig_power(s, n_ - w, t, w));
                }
            }
            const double f = inner.value();
            mass.add(scale * static_cast<double>(multiplicity) * f * f);
        }
        return mass.value();
    }

    int hull_dimension() const noexcept { return h_; }
    std::size_t distinct_profiles() const noexcept { return profiles_.size(); }

  private:
    int n_;
    int k_;
    int h_ = 0;
    std::vector<std::pair<std::vector<std::uint32_t>, std::uint64_t>> profiles_;
};

inline double dual_component_mass(const BinaryCode& code, double theta) { return DualMassEvaluator(code)(theta); }

inline void require_weakly_self_dual(const BinaryCode& code) {
    if (!is_weakly_self_dual(code)) {
        throw PreconditionError("code is not weakly self-dual (C is not contained in its dual)");
    }
}

/// |sum_{c in C-perp} sin^(n - wt c) cos^(wt c)| for weakly self-dual C, from
/// the enumerated distribution of C-perp.
class SelfDualSumEvaluator {
  public:
    explicit SelfDualSumEvaluator(const BinaryCode& code)
        : n_(code.length()), k_(code.dimension()), dual_dist_(n_) {
        require_weakly_self_dual(code);
        if (n_ - k_ > kEnumerationCap) {
            throw CapacityError("dual dimension " + std::to_string(n_ - k_) + " exceeds enumeration cap");
        }
        dual_dist_ = weight_distribution(dual_code(code));
    }

    double operator()(double theta) const {
        const double s = std::sin(theta);
        const double t = std::cos(theta);
        CompensatedSum sum;
        for (int w = 0; w <= n_; ++w) {
            if (dual_dist_[w]) {
                sum.add(static_cast<double>(dual_dist_[w]) * trig_power(s, n_ - w, t, w));
            }
        }
        return std::abs(sum.value());
    }

    /// 2^((n - 2k)/2)
    double bound() const noexcept { return std::pow(2.0, 0.5 * (n_ - 2 * k_)); }
    const WeightDistribution& dual_distribution() const noexcept { return dual_dist_; }

  private:
    int n_;
    int k_;
    WeightDistribution dual_dist_;
};

inline double self_dual_sum(const BinaryCode& code, double theta) { return SelfDualSumEvaluator(code)(theta); }

/// |sum_{c in C} (sin + cos)^(n - wt c) (sin - cos)^(wt c)|, bounded by 2^(n/2).
inline double enumerator_inequality(const BinaryCode& code, const WeightDistribution& dist, double theta) {
    require_weakly_self_dual(code);
    if (dist.n != code.length()) {
        throw InputError("distribution length does not match code");
    }
    const double s = std::sin(theta);
    const double t = std::cos(theta);
    return std::abs(enumerator_eval(dist, s + t, s - t));
}

inline double enumerator_inequality(const BinaryCode& code, double theta) {
    return enumerator_inequality(code, weight_distribution(code), theta);
}

inline double enumerator_inequality_bound(int n) { return std::pow(2.0, 0.5 * n); }

/// `steps` equally spaced angles on [0.01, pi - 0.01], then pi/4 and pi/2.
inline std::vector<double> theta_grid(int steps = 101) {
    if (steps < 1) {
        throw InputError("theta grid needs at least one step");
    }
    constexpr double lo = 0.01;
    constexpr double hi = std::numbers::pi - 0.01;
    std::vector<double> g;
    g.reserve(static_cast<std::size_t>(steps) + 2);
    for (int i = 0; i < steps; ++i) {
        g.push_back(steps == 1 ? lo : lo + (hi - lo) * i / (steps - 1));
    }
    g.push_back(std::numbers::pi / 4);
    g.push_back(std::numbers::pi / 2);
    return g;
}

} // namespace wsd
