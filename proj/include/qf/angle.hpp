// Copyright 2026 The qformc authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <numbers>
#include <numeric>
#include <string>

#include "qf/error.hpp"

namespace qf {

/// Exact rational multiple of pi, kept in lowest terms and wrapped into
/// (-pi, pi]: the stored fraction num/den always satisfies
/// gcd(|num|, den) = 1 and -den < num <= den.
///
/// The same type doubles as the rational edge weight W = theta/pi of a
/// geometry, whose range (-1, 1] is exactly this normalization.
class Angle {
  public:
    constexpr Angle() = default;

    Angle(std::int64_t num, std::int64_t den) {
        if (den == 0) throw Error("angle denominator must be nonzero");
        __int128 n = num;
        __int128 d = den;
        if (d < 0) {
            n = -n;
            d = -d;
        }
        normalize(n, d);
    }

    static Angle zero() { return Angle(); }
    static Angle pi() { return Angle(1, 1); }
    static Angle half_pi() { return Angle(1, 2); }
    static Angle quarter_pi() { return Angle(1, 4); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_pi() const { return num_ == 1 && den_ == 1; }
    /// True when the value is a multiple of pi/2 (X/Y-observable angles).
    bool is_half_pi_multiple() const { return den_ == 1 || den_ == 2; }

    double radians() const {
        return std::numbers::pi * static_cast<double>(num_) / static_cast<double>(den_);
    }

    Angle operator+(const Angle& o) const {
        __int128 n = static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_;
        __int128 d = static_cast<__int128>(den_) * o.den_;
        Angle r;
        r.normalize(n, d);
        return r;
    }

    Angle operator-(const Angle& o) const { return *this + (-o); }

    Angle operator-() const {
        Angle r;
        r.normalize(-static_cast<__int128>(num_), den_);
        return r;
    }

    Angle times(std::int64_t k) const {
        Angle r;
        r.normalize(static_cast<__int128>(num_) * k, den_);
        return r;
    }

    Angle& operator+=(const Angle& o) { return *this = *this + o; }

    bool operator==(const Angle&) const = default;
    auto operator<=>(const Angle&) const = default;

    std::string str() const {
        if (num_ == 0) return "0";
        std::string s = std::to_string(num_) + "pi";
        if (den_ != 1) s += "/" + std::to_string(den_);
        return s;
    }

  private:
    // Reduces n/d (d > 0) and wraps the value into (-pi, pi].
    void normalize(__int128 n, __int128 d) {
        __int128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        __int128 m = 2 * d;
        n %= m;
        if (n <= -d) n += m;
        if (n > d) n -= m;
        constexpr __int128 kMax = INT64_MAX;
        if (n > kMax || -n > kMax || d > kMax)
            throw Error("angle arithmetic overflow");
        num_ = static_cast<std::int64_t>(n);
        den_ = static_cast<std::int64_t>(d);
    }

    static __int128 gcd128(__int128 a, __int128 b) {
        while (b != 0) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        return a == 0 ? 1 : a;
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace qf
