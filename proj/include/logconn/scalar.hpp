/*
   Copyright 2026 the logconn authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef LOGCONN_SCALAR_HPP
#define LOGCONN_SCALAR_HPP

#include <gmpxx.h>

#include <cctype>
#include <stdexcept>
#include <string>

namespace logconn {

/// Exact rational scalar. Canonical form (gcd-reduced, positive denominator)
/// is maintained by GMP across all arithmetic; equality is decidable and
/// used everywhere — the library has no tolerances.
using Scalar = mpq_class;

struct ScalarLess {
    bool operator()(const Scalar& a, const Scalar& b) const { return cmp(a, b) < 0; }
};

/// "p/q", or just "p" when the denominator is 1.
inline std::string scalar_to_string(const Scalar& s) {
    return s.get_str();
}

/// Strict grammar: -?digits(/digits)?, denominator nonzero, sign on the
/// numerator only. Canonicalizes, so "2/4" parses to 1/2.
inline Scalar parse_scalar(const std::string& text) {
    const auto bad = [&]() -> Scalar {
        throw std::invalid_argument("not a rational \"p/q\": '" + text + "'");
    };
    std::string::size_type pos = 0;
    if (pos < text.size() && text[pos] == '-') ++pos;
    std::string::size_type num_begin = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == num_begin) return bad();
    std::string num = text.substr(0, pos);
    std::string den = "1";
    if (pos < text.size()) {
        if (text[pos] != '/') return bad();
        std::string::size_type den_begin = ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == den_begin || pos != text.size()) return bad();
        den = text.substr(den_begin);
    }
    Scalar q(mpz_class(num, 10), mpz_class(den, 10));
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
    q.canonicalize();
    return q;
}

inline bool scalar_is_integer(const Scalar& s) {
    return s.get_den() == 1;
}

/// s^e for e >= 0.
inline Scalar scalar_pow(const Scalar& s, unsigned long e) {
    Scalar r(1);
    Scalar base = s;
    while (e > 0) {
        if (e & 1u) r *= base;
        base *= base;
        e >>= 1u;
    }
    return r;
}

} // namespace logconn

#endif
