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
 * Test codes, seeded random self-orthogonal codes, and the .gmat text format.
 *
 * .gmat: the first non-comment line is "n k"; exactly k rows of n characters
 * from {0,1} follow. Lines whose first non-blank character is '#' and blank
 * lines are ignored.
 */
#pragma once

#include <charconv>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "wsd/errors.hpp"
#include "wsd/gf2.hpp"

namespace wsd {

// ---------------------------------------------------------------------------
// .gmat

namespace detail {

inline std::string_view trim(std::string_view s) {
    constexpr std::string_view ws = " \t\r\n\f\v";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) {
        return {};
    }
    return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

inline int parse_int(std::string_view tok, const char* what) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
        throw InputError(std::string("malformed header: bad ") + what + " '" + std::string(tok) + "'");
    }
    return v;
}

} // namespace detail

inline BinaryCode parse_gmat(std::string_view text) {
    std::vector<std::pair<int, std::string_view>> lines; // (line number, content)
    int lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        ++lineno;
        const auto line = detail::trim(text.substr(pos, end - pos));
        if (!line.empty() && line.front() != '#') {
            lines.emplace_back(lineno, line);
        }
        pos = end + 1;
    }
    if (lines.empty()) {
        throw InputError("missing 'n k' header");
    }

    const auto header = lines.front().second;
    const auto sep = header.find_first_of(" \t");
    if (sep == std::string_view::npos) {
        throw InputError("malformed header: expected 'n k'");
    }
    const int n = detail::parse_int(header.substr(0, sep), "n");
    const int k = detail::parse_int(detail::trim(header.substr(sep)), "k");
    if (n < 1 || n > kMaxLength) {
        throw InputError("length n = " + std::to_string(n) + " outside [1, 64]");
    }
    if (k < 0 || k > n) {
        throw InputError("dimension k = " + std::to_string(k) + " outside [0, n]");
    }
    if (static_cast<int>(lines.size()) - 1 != k) {
        throw InputError("expected " + std::to_string(k) + " generator rows, found " +
                         std::to_string(lines.size() - 1));
    }

    std::vector<Word> rows;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto [no, row] = lines[i];
        for (char ch : row) {
            if (ch != '0' && ch != '1') {
                throw InputError("line " + std::to_string(no) + ": invalid character '" + std::string(1, ch) + "'");
            }
        }
        if (static_cast<int>(row.size()) != n) {
            throw InputError("line " + std::to_string(no) + ": row width " + std::to_string(row.size()) +
                             " != n = " + std::to_string(n));
        }
        rows.push_back(from_bitstring(row));
    }
    return BinaryCode::from_generators(rows, n);
}

inline std::string emit_gmat(const BinaryCode& code, std::string_view comment = {}) {
    std::ostringstream os;
    if (!comment.empty()) {
        os << "# " << comment << '\n';
    }
    os << code.length() << ' ' << code.dimension() << '\n';
    for (Word r : code.generators()) {
        os << to_bitstring(r, code.length()) << '\n';
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// constructions

/// [8,4,4] extended Hamming code: the [7,4] Hamming code plus an overall
/// parity bit.
inline BinaryCode build_extended_hamming() {
    return BinaryCode::from_strings({"10001101", "01001011", "00100111", "00011110"});
}

/// [7,4,3] Hamming code.
inline BinaryCode build_hamming7() {
    return BinaryCode::from_strings({"1000110", "0100101", "0010011", "0001111"});
}

/// Extended binary Golay code, generator in [I | B] form.
inline constexpr std::string_view kGolay24Gmat = R"(# extended binary Golay code [24,12,8], generator [I | B]
24 12
100000000000011111111111
010000000000111011100010
001000000000110111000101
000100000000101110001011
000010000000111100010110
000001000000111000101101
000000100000110001011011
000000010000100010110111
000000001000100101101110
000000000100101011011100
000000000010110110111000
000000000001101101110001
)";

inline BinaryCode build_golay24() { return parse_gmat(kGolay24Gmat); }

/// First-order Reed-Muller code RM(1, m): the all-ones word and the m
/// coordinate functions evaluated at points 0 .. 2^m - 1 (column j = point j).
inline BinaryCode build_reed_muller_1(int m) {
    if (m < 3 || m > 6) {
        throw InputError("Reed-Muller order-1 construction supports 3 <= m <= 6");
    }
    const int n = 1 << m;
    std::vector<Word> rows{length_mask(n)};
    for (int i = 0; i < m; ++i) {
        Word r = 0;
        for (int j = 0; j < n; ++j) {
            if ((j >> i) & 1) {
                r |= column_bit(n, j);
            }
        }
        rows.push_back(r);
    }
    return BinaryCode::from_generators(rows, n);
}

// ---------------------------------------------------------------------------
// random self-orthogonal codes

/**
 * Counter-based generator: word i (i = 0, 1, ...) of the stream for `seed` is
 * mix(seed + (i + 1) * 0x9E3779B97F4A7C15) with the SplitMix64 finalizer
 *
 *     z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
 *     z = (z ^ (z >> 27)) * 0x94D049BB133111EB
 *     z =  z ^ (z >> 31)
 *
 * all arithmetic mod 2^64.
 */
class CounterRng {
  public:
    explicit CounterRng(std::uint64_t seed) noexcept : seed_(seed) {}

    static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t at(std::uint64_t i) const noexcept { return mix(seed_ + (i + 1) * 0x9E3779B97F4A7C15ULL); }
    std::uint64_t next() noexcept { return at(counter_++); }
    std::uint64_t consumed() const noexcept { return counter_; }

  private:
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
};

/**
 * k-dimensional self-orthogonal code of even length n.
 *
 * Each new generator is a uniform draw from the space orthogonal to the
 * generators chosen so far and to the all-ones word (even weight). The low
 * bits of one stream word select the combination of that space's null-space
 * basis; draws already in the current span are rejected.
 */
inline BinaryCode random_weakly_self_dual(int n, int k, std::uint64_t seed) {
    if (n < 2 || n > kMaxLength || n % 2) {
        throw InputError("random weakly self-dual codes need even n in [2, 64]");
    }
    if (k < 1 || 2 * k > n) {
        throw InputError("dimension " + std::to_string(k) + " outside [1, n/2]");
    }
    CounterRng rng(seed);
    std::vector<Word> chosen;
    while (static_cast<int>(chosen.size()) < k) {
        std::vector<Word> constraints = chosen;
        constraints.push_back(length_mask(n));
        const auto space = null_space(constraints, n);
        const Word pick = rng.next();
        Word v = 0;
        for (std::size_t i = 0; i < space.size(); ++i) {
            if ((pick >> i) & 1U) {
                v ^= space[i];
            }
        }
        chosen.push_back(v);
        if (rref(chosen, n).rank != static_cast<int>(chosen.size())) {
            chosen.pop_back();
        }
    }
    return BinaryCode::from_generators(chosen, n);
}

// ---------------------------------------------------------------------------
// zoo

struct ZooEntry {
    std::string name;
    BinaryCode code;
    std::optional<WeightDistribution> expected;
    std::string provenance;
};

/// The fixed corpus, in a stable order.
inline std::vector<ZooEntry> zoo() {
    auto dist = [](int n, std::initializer_list<std::pair<int, std::uint64_t>> nz) {
        WeightDistribution d(n);
        for (auto [w, a] : nz) {
            d.counts[static_cast<std::size_t>(w)] = a;
        }
        return d;
    };
    std::vector<ZooEntry> z;
    z.push_back({"selfdual2", BinaryCode::from_strings({"11"}), dist(2, {{0, 1}, {2, 1}}),
                 "[2,1,2] self-dual code {00, 11}"});
    z.push_back({"repetition3", BinaryCode::from_strings({"111"}), dist(3, {{0, 1}, {3, 1}}),
                 "[3,1,3] repetition code; not self-orthogonal"});
    z.push_back({"oddwsd3", BinaryCode::from_strings({"110"}), dist(3, {{0, 1}, {2, 1}}),
                 "[3,1,2] self-orthogonal code of odd length"});
    z.push_back({"hamming7", build_hamming7(), dist(7, {{0, 1}, {3, 7}, {4, 7}, {7, 1}}),
                 "[7,4,3] Hamming code; not self-orthogonal"});
    z.push_back({"simplex7", dual_code(build_hamming7()), dist(7, {{0, 1}, {4, 7}}),
                 "[7,3,4] simplex code; doubly-even, odd length"});
    z.push_back({"hamming8", build_extended_hamming(), dist(8, {{0, 1}, {4, 14}, {8, 1}}),
                 "[8,4,4] extended Hamming code; doubly-even self-dual"});
    z.push_back({"rm1_4", build_reed_muller_1(4), dist(16, {{0, 1}, {8, 30}, {16, 1}}),
                 "RM(1,4) [16,5,8]"});
    z.push_back({"golay24", build_golay24(), dist(24, {{0, 1}, {8, 759}, {12, 2576}, {16, 759}, {24, 1}}),
                 "[24,12,8] extended Golay code; doubly-even self-dual"});
    z.push_back({"rm1_5", build_reed_muller_1(5), dist(32, {{0, 1}, {16, 62}, {32, 1}}),
                 "RM(1,5) [32,6,16]"});
    z.push_back({"random_12_4_s42", random_weakly_self_dual(12, 4, 42), std::nullopt,
                 "random self-orthogonal, n=12 k=4 seed=42"});
    z.push_back({"random_18_9_s7", random_weakly_self_dual(18, 9, 7), std::nullopt,
                 "random self-dual, n=18 k=9 seed=7"});
    z.push_back({"random_22_6_s2026", random_weakly_self_dual(22, 6, 2026), std::nullopt,
                 "random self-orthogonal, n=22 k=6 seed=2026"});
    return z;
}

inline std::optional<ZooEntry> zoo_lookup(std::string_view name) {
    for (auto& e : zoo()) {
        if (e.name == name) {
            return e;
        }
    }
    return std::nullopt;
}

} // namespace wsd
