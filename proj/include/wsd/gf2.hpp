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
 * Linear algebra and exhaustive enumeration over GF(2).
 *
 * Vectors of length n <= 64 are packed into one 64-bit word. The leftmost
 * written bit is the most significant of the n used bits, so the packed value
 * of the string c1 c2 ... cn is also its index in a big-endian state vector.
 */
#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "wsd/errors.hpp"

namespace wsd {

using Word = std::uint64_t;

inline constexpr int kMaxLength = 64;
/// Largest dimension enumerated codeword by codeword.
inline constexpr int kEnumerationCap = 28;

constexpr Word length_mask(int n) noexcept {
    return n >= 64 ? ~Word{0} : (Word{1} << n) - 1;
}

constexpr int hamming_weight(Word x) noexcept { return std::popcount(x); }

/// Real inner product of two 0/1 vectors reduced mod 2.
constexpr int dot_mod2(Word a, Word b) noexcept { return std::popcount(a & b) & 1; }

/// Bit for column `col` (0 = leftmost) of a length-n vector.
constexpr Word column_bit(int n, int col) noexcept { return Word{1} << (n - 1 - col); }

inline std::string to_bitstring(Word v, int n) {
    std::string s(static_cast<std::size_t>(n), '0');
    for (int col = 0; col < n; ++col) {
        if (v & column_bit(n, col)) {
            s[static_cast<std::size_t>(col)] = '1';
        }
    }
    return s;
}

inline Word from_bitstring(std::string_view s) {
    if (s.size() > static_cast<std::size_t>(kMaxLength)) {
        throw InputError("bit string longer than 64 characters");
    }
    Word v = 0;
    for (char ch : s) {
        if (ch != '0' && ch != '1') {
            throw InputError(std::string("invalid bit character '") + ch + "'");
        }
        v = (v << 1) | static_cast<Word>(ch == '1');
    }
    return v;
}

inline void check_length(int n) {
    if (n < 1 || n > kMaxLength) {
        throw InputError("code length " + std::to_string(n) + " outside [1, 64]");
    }
}

struct RowReduction {
    int rank = 0;
    std::vector<Word> basis;
};

/// Reduced row-echelon form with pivots taken from the left; rows come out
/// ordered by pivot column.
inline RowReduction rref(std::span<const Word> rows, int n) {
    check_length(n);
    const Word mask = length_mask(n);
    std::vector<Word> work;
    work.reserve(rows.size());
    for (Word r : rows) {
        if (r & ~mask) {
            throw InputError("row has bits beyond length " + std::to_string(n));
        }
        work.push_back(r);
    }

    std::size_t next = 0;
    for (int col = 0; col < n && next < work.size(); ++col) {
        const Word bit = column_bit(n, col);
        auto pivot = std::find_if(work.begin() + static_cast<std::ptrdiff_t>(next), work.end(),
                                  [bit](Word r) { return (r & bit) != 0; });
        if (pivot == work.end()) {
            continue;
        }
        std::iter_swap(work.begin() + static_cast<std::ptrdiff_t>(next), pivot);
        for (std::size_t i = 0; i < work.size(); ++i) {
            if (i != next && (work[i] & bit)) {
                work[i] ^= work[next];
            }
        }
        ++next;
    }
    work.resize(next);
    return {static_cast<int>(next), std::move(work)};
}

/// Leftmost set column of a nonzero row.
inline int pivot_column(Word row, int n) noexcept { return n - 1 - (63 - std::countl_zero(row)); }

/// Basis of {x : x . r = 0 for every row r}.
inline std::vector<Word> null_space(std::span<const Word> rows, int n) {
    const auto red = rref(rows, n);
    std::vector<int> pivots;
    Word pivot_mask = 0;
    for (Word r : red.basis) {
        pivots.push_back(pivot_column(r, n));
        pivot_mask |= column_bit(n, pivots.back());
    }
    std::vector<Word> out;
    for (int col = 0; col < n; ++col) {
        const Word free_bit = column_bit(n, col);
        if (pivot_mask & free_bit) {
            continue;
        }
        Word v = free_bit;
        for (std::size_t i = 0; i < red.basis.size(); ++i) {
            if (red.basis[i] & free_bit) {
                v |= column_bit(n, pivots[i]);
            }
        }
        out.push_back(v);
    }
    return out;
}

/// A binary linear code held by a canonical (RREF) generator matrix.
class BinaryCode {
  public:
    /// Rejects dependent generators; the message carries the computed rank.
    static BinaryCode from_generators(std::span<const Word> rows, int n) {
        auto red = rref(rows, n);
        if (red.rank != static_cast<int>(rows.size())) {
            throw InputError("generator rows are linearly dependent: rank " +
                             std::to_string(red.rank) + " != " + std::to_string(rows.size()));
        }
        return BinaryCode(n, std::move(red.basis));
    }

    /// Code spanned by `rows`, dependencies allowed.
    static BinaryCode span_of(std::span<const Word> rows, int n) {
        return BinaryCode(n, rref(rows, n).basis);
    }

    static BinaryCode from_strings(std::initializer_list<std::string_view> rows) {
        if (rows.size() == 0) {
            throw InputError("cannot infer length from an empty row list");
        }
        const int n = static_cast<int>(rows.begin()->size());
        std::vector<Word> packed;
        for (auto r : rows) {
            if (static_cast<int>(r.size()) != n) {
                throw InputError("row length mismatch");
            }
            packed.push_back(from_bitstring(r));
        }
        return from_generators(packed, n);
    }

    /// The degenerate code {0}.
    static BinaryCode zero(int n) {
        check_length(n);
        return BinaryCode(n, {});
    }

    int length() const noexcept { return n_; }
    int dimension() const noexcept { return static_cast<int>(rows_.size()); }
    std::span<const Word> generators() const noexcept { return rows_; }

    /// Codeword for a message whose bit i selects generator i.
    Word encode(Word message) const noexcept {
        Word c = 0;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if ((message >> i) & 1U) {
                c ^= rows_[i];
            }
        }
        return c;
    }

    bool contains(Word v) const noexcept {
        if (v & ~length_mask(n_)) {
            return false;
        }
        for (Word r : rows_) {
            if (v & column_bit(n_, pivot_column(r, n_))) {
                v ^= r;
            }
        }
        return v == 0;
    }

    friend bool operator==(const BinaryCode&, const BinaryCode&) = default;

  private:
    BinaryCode(int n, std::vector<Word> rows) : n_(n), rows_(std::move(rows)) {}

    int n_ = 0;
    std::vector<Word> rows_;
};

inline BinaryCode dual_code(const BinaryCode& code) {
    return BinaryCode::span_of(null_space(code.generators(), code.length()), code.length());
}

/// C + D.
inline BinaryCode sum_code(const BinaryCode& a, const BinaryCode& b) {
    if (a.length() != b.length()) {
        throw InputError("length mismatch in code sum");
    }
    std::vector<Word> rows(a.generators().begin(), a.generators().end());
    rows.insert(rows.end(), b.generators().begin(), b.generators().end());
    return BinaryCode::span_of(rows, a.length());
}

/// C intersect C-perp, computed as (C + C-perp)-perp.
inline BinaryCode hull(const BinaryCode& code) { return dual_code(sum_code(code, dual_code(code))); }

/// Extends `base` (independent) by vectors from `candidates`; returns only the
/// added vectors.
inline std::vector<Word> complement_basis(std::span<const Word> base, std::span<const Word> candidates, int n) {
    std::vector<Word> acc(base.begin(), base.end());
    int rank = rref(acc, n).rank;
    std::vector<Word> added;
    for (Word v : candidates) {
        acc.push_back(v);
        const int r = rref(acc, n).rank;
        if (r > rank) {
            rank = r;
            added.push_back(v);
        } else {
            acc.pop_back();
        }
    }
    return added;
}

inline bool is_weakly_self_dual(const BinaryCode& code) {
    const auto g = code.generators();
    for (std::size_t i = 0; i < g.size(); ++i) {
        for (std::size_t j = i; j < g.size(); ++j) {
            if (dot_mod2(g[i], g[j])) {
                return false;
            }
        }
    }
    return true;
}

/// Visits every codeword of span(gens) over message indices [first, last) in
/// Gray-code order: each codeword is the previous one XOR one generator.
template <class Visitor>
void for_each_codeword(std::span<const Word> gens, std::uint64_t first, std::uint64_t last, Visitor&& visit) {
    if (first >= last) {
        return;
    }
    Word c = 0;
    const std::uint64_t g0 = first ^ (first >> 1);
    for (std::size_t b = 0; b < gens.size(); ++b) {
        if ((g0 >> b) & 1U) {
            c ^= gens[b];
        }
    }
    visit(c);
    for (std::uint64_t i = first + 1; i < last; ++i) {
        c ^= gens[static_cast<std::size_t>(std::countr_zero(i))];
        visit(c);
    }
}

template <class Visitor>
void for_each_codeword(const BinaryCode& code, Visitor&& visit) {
    const int k = code.dimension();
    if (k > kEnumerationCap) {
        throw CapacityError("dimension " + std::to_string(k) + " exceeds enumeration cap " +
                            std::to_string(kEnumerationCap));
    }
    for_each_codeword(code.generators(), 0, std::uint64_t{1} << k, visit);
}

struct WeightDistribution {
    int n = 0;
    std::vector<std::uint64_t> counts; // A_0..A_n

    WeightDistribution() = default;
    explicit WeightDistribution(int length)
        : n(length), counts(static_cast<std::size_t>(length) + 1, 0) {}
    WeightDistribution(int length, std::vector<std::uint64_t> c) : n(length), counts(std::move(c)) {
        if (counts.size() != static_cast<std::size_t>(n) + 1) {
            throw InputError("weight distribution needs n+1 entries");
        }
    }

    std::uint64_t operator[](int w) const { return counts.at(static_cast<std::size_t>(w)); }

    /// Sum of the counts; 2^k for a k-dimensional code.
    unsigned __int128 total() const noexcept {
        unsigned __int128 s = 0;
        for (auto a : counts) {
            s += a;
        }
        return s;
    }

    bool has_odd_weights() const noexcept {
        for (int w = 1; w <= n; w += 2) {
            if (counts[static_cast<std::size_t>(w)] != 0) {
                return true;
            }
        }
        return false;
    }

    friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;
};

/**
 * Exact weight distribution by Gray-code traversal of all 2^k codewords.
 *
 * With `threads > 1` the message space is cut into contiguous ranges whose
 * counts are summed; the result does not depend on the partition.
 */
inline WeightDistribution weight_distribution(const BinaryCode& code, unsigned threads = 1) {
    const int n = code.length();
    const int k = code.dimension();
    if (k > kEnumerationCap) {
        throw CapacityError("dimension " + std::to_string(k) + " exceeds enumeration cap " +
                            std::to_string(kEnumerationCap) +
                            "; enumerate the dual (dimension " + std::to_string(n - k) +
                            ") and apply the MacWilliams transform instead");
    }
    const std::uint64_t total = std::uint64_t{1} << k;
    threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(std::min<std::uint64_t>(total, 64))));

    std::vector<std::vector<std::uint64_t>> partial(threads, std::vector<std::uint64_t>(static_cast<std::size_t>(n) + 1, 0));
    auto work = [&](unsigned t) {
        const std::uint64_t lo = total / threads * t;
        const std::uint64_t hi = t + 1 == threads ? total : total / threads * (t + 1);
        auto& counts = partial[t];
        for_each_codeword(code.generators(), lo, hi,
                          [&counts](Word c) { ++counts[static_cast<std::size_t>(std::popcount(c))]; });
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back(work, t);
        }
    }

    WeightDistribution out(n);
    for (const auto& p : partial) {
        for (std::size_t w = 0; w < p.size(); ++w) {
            out.counts[w] += p[w];
        }
    }
    return out;
}

/**
 * All codeword weights divisible by 4.
 *
 * Decided from the generators (each has weight = 0 mod 4, pairs are
 * orthogonal) and, when the code is small enough to enumerate, cross-checked
 * against every codeword.
 */
inline bool is_doubly_even(const BinaryCode& code) {
    const auto g = code.generators();
    bool by_generators = true;
    for (std::size_t i = 0; i < g.size() && by_generators; ++i) {
        if (hamming_weight(g[i]) % 4 != 0) {
            by_generators = false;
        }
        for (std::size_t j = i + 1; j < g.size() && by_generators; ++j) {
            if (dot_mod2(g[i], g[j])) {
                by_generators = false;
            }
        }
    }
    if (code.dimension() <= kEnumerationCap) {
        bool by_enumeration = true;
        for_each_codeword(code, [&](Word c) { by_enumeration = by_enumeration && hamming_weight(c) % 4 == 0; });
        if (by_enumeration != by_generators) {
            throw std::logic_error("doubly-even criterion disagrees with enumeration");
        }
    }
    return by_generators;
}

/// Nonnegative rational in lowest terms.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static Rational of(std::int64_t p, std::int64_t q) {
        const auto g = std::gcd(p, q);
        return {p / g, q / g};
    }
    double value() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
    friend bool operator==(const Rational&, const Rational&) = default;
};

struct CodeMetrics {
    int d = 0;
    Rational delta;
    bool weakly_self_dual = false;
    bool doubly_even = false;
};

inline CodeMetrics code_metrics(const BinaryCode& code, const WeightDistribution& dist) {
    if (dist.n != code.length()) {
        throw InputError("distribution length does not match code");
    }
    if (code.dimension() == 0) {
        throw DegenerateError("minimum distance undefined for the zero code");
    }
    CodeMetrics m;
    for (int w = 1; w <= dist.n; ++w) {
        if (dist[w] > 0) {
            m.d = w;
            break;
        }
    }
    if (m.d == 0) {
        throw InputError("distribution has no nonzero codewords but k > 0");
    }
    m.delta = Rational::of(m.d, code.length());
    m.weakly_self_dual = is_weakly_self_dual(code);
    m.doubly_even = is_doubly_even(code);
    return m;
}

} // namespace wsd
