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
#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "wsd/errors.hpp"
#include "wsd/gf2.hpp"

namespace wsd {

using BigInt = boost::multiprecision::cpp_int;

/// Neumaier-compensated running sum.
class CompensatedSum {
  public:
    void add(double x) noexcept {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }
    double value() const noexcept { return sum_ + comp_; }

  private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

/// Exact binomial coefficient; zero outside 0 <= k <= n.
inline BigInt binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

/// K_w(j; n) = sum_i (-1)^i C(j, i) C(n - j, w - i).
inline BigInt krawtchouk(int w, int j, int n) {
    BigInt s = 0;
    for (int i = 0; i <= std::min(w, j); ++i) {
        BigInt term = binomial(j, i) * binomial(n - j, w - i);
        if (i % 2) {
            s -= term;
        } else {
            s += term;
        }
    }
    return s;
}

/**
 * Weight distribution of the dual code from that of a k-dimensional code:
 * A'_w = 2^-k sum_j A_j K_w(j; n), in exact integer arithmetic.
 *
 * Throws InputError when a division is not exact or a coefficient comes out
 * negative, either of which means `dist` is not the distribution of a
 * k-dimensional linear code.
 */
inline WeightDistribution macwilliams_transform(const WeightDistribution& dist, int k) {
    const int n = dist.n;
    check_length(n);
    if (k < 0 || k > n) {
        throw InputError("dimension " + std::to_string(k) + " outside [0, n]");
    }
    if (dist.total() != (static_cast<unsigned __int128>(1) << k)) {
        throw InputError("distribution total is not 2^k for k = " + std::to_string(k));
    }
    const BigInt size = BigInt(1) << k;
    WeightDistribution out(n);
    for (int w = 0; w <= n; ++w) {
        BigInt acc = 0;
        for (int j = 0; j <= n; ++j) {
            if (dist[j] != 0) {
                acc += BigInt(dist[j]) * krawtchouk(w, j, n);
            }
        }
        if (acc % size != 0) {
            throw InputError("inexact MacWilliams division at weight " + std::to_string(w) +
                             ": input is not a linear-code distribution");
        }
        acc /= size;
        if (acc < 0 || acc > std::numeric_limits<std::uint64_t>::max()) {
            throw InputError("MacWilliams coefficient out of range at weight " + std::to_string(w));
        }
        out.counts[static_cast<std::size_t>(w)] = acc.convert_to<std::uint64_t>();
    }
    return out;
}

/// sum_w A_w x^(n-w) y^w in compensated floating point; 0^0 = 1.
inline double enumerator_eval(const WeightDistribution& dist, double x, double y) {
    CompensatedSum s;
    for (int w = 0; w <= dist.n; ++w) {
        if (dist[w] == 0) {
            continue;
        }
        s.add(static_cast<double>(dist[w]) * std::pow(x, dist.n - w) * std::pow(y, w));
    }
    return s.value();
}

} // namespace wsd
