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

#ifndef LOGCONN_POLY_HPP
#define LOGCONN_POLY_HPP

#include <logconn/scalar.hpp>

#include <utility>
#include <vector>

namespace logconn {

/// Univariate polynomial over Scalar, coefficients stored low-to-high.
/// Canonical form: no trailing zero coefficients; the zero polynomial is the
/// empty list (degree -1).
class Poly {
public:
    Poly() = default;

    explicit Poly(const Scalar& constant) {
        if (constant != 0) c_.push_back(constant);
    }

    explicit Poly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { normalize(); }

    static Poly variable() { return monomial(1); }

    static Poly monomial(int k, const Scalar& coeff = Scalar(1)) {
        if (coeff == 0) return Poly();
        std::vector<Scalar> c(static_cast<std::size_t>(k) + 1, Scalar(0));
        c.back() = coeff;
        return Poly(std::move(c));
    }

    /// z - r.
    static Poly linear(const Scalar& r) {
        std::vector<Scalar> c{Scalar(-r), Scalar(1)};
        return Poly(std::move(c));
    }

    /// prod (z - r) over the given roots.
    static Poly from_roots(const std::vector<Scalar>& roots) {
        Poly p(Scalar(1));
        for (const Scalar& r : roots) p = p * linear(r);
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    const std::vector<Scalar>& coeffs() const { return c_; }

    const Scalar& coeff(int k) const {
        static const Scalar zero(0);
        if (k < 0 || k >= static_cast<int>(c_.size())) return zero;
        return c_[static_cast<std::size_t>(k)];
    }

    Scalar leading() const { return c_.empty() ? Scalar(0) : c_.back(); }

    Scalar operator()(const Scalar& x) const {
        Scalar acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<Scalar> c(std::max(a.c_.size(), b.c_.size()), Scalar(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
        return Poly(std::move(c));
    }

    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    Poly operator-() const {
        Poly r = *this;
        for (Scalar& x : r.c_) x = -x;
        return r;
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<Scalar> c(a.c_.size() + b.c_.size() - 1, Scalar(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(c));
    }

    friend Poly operator*(const Scalar& s, const Poly& p) {
        if (s == 0) return Poly();
        Poly r = p;
        for (Scalar& x : r.c_) x *= s;
        return r;
    }

    friend Poly operator*(const Poly& p, const Scalar& s) { return s * p; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<Scalar> c(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = Scalar(static_cast<long>(i)) * c_[i];
        return Poly(std::move(c));
    }

    /// Exact division with remainder over the rational field; b must be nonzero.
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
        if (a.degree() < b.degree()) return {Poly(), a};
        std::vector<Scalar> rem = a.c_;
        std::vector<Scalar> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1, Scalar(0));
        const Scalar lead = b.leading();
        for (int k = a.degree() - b.degree(); k >= 0; --k) {
            Scalar f = rem[static_cast<std::size_t>(k + b.degree())] / lead;
            quot[static_cast<std::size_t>(k)] = f;
            if (f == 0) continue;
            for (int i = 0; i <= b.degree(); ++i)
                rem[static_cast<std::size_t>(k + i)] -= f * b.c_[static_cast<std::size_t>(i)];
        }
        return {Poly(std::move(quot)), Poly(std::move(rem))};
    }

    Poly monic() const {
        if (is_zero()) return Poly();
        return (Scalar(1) / leading()) * (*this);
    }

    /// Monic gcd; gcd(0, 0) = 0.
    static Poly gcd(Poly a, Poly b) {
        while (!b.is_zero()) {
            Poly r = divmod(a, b).second;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    /// Taylor shift: coefficients of p(x + u) as a polynomial in u, computed
    /// by repeated synthetic division by (z - x).
    Poly shifted(const Scalar& x) const {
        std::vector<Scalar> a = c_;
        std::vector<Scalar> out;
        out.reserve(a.size());
        while (!a.empty()) {
            Scalar acc = a.back();
            std::vector<Scalar> q(a.size() - 1, Scalar(0));
            for (int i = static_cast<int>(a.size()) - 2; i >= 0; --i) {
                q[static_cast<std::size_t>(i)] = acc;
                acc = a[static_cast<std::size_t>(i)] + x * acc;
            }
            out.push_back(acc);
            a = std::move(q);
        }
        return Poly(std::move(out));
    }

    /// w^n * p(1/w); requires n >= degree().
    Poly reversed(int n) const {
        if (is_zero()) return Poly();
        if (n < degree()) throw std::invalid_argument("reversal order below degree");
        std::vector<Scalar> c(static_cast<std::size_t>(n) + 1, Scalar(0));
        for (std::size_t i = 0; i < c_.size(); ++i)
            c[static_cast<std::size_t>(n) - i] = c_[i];
        return Poly(std::move(c));
    }

private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Scalar> c_;
};

/// Removes every (z - r) factor from p in place; returns the multiplicity removed.
inline int strip_root(Poly& p, const Scalar& r) {
    const Poly lin = Poly::linear(r);
    int k = 0;
    for (;;) {
        auto [q, rem] = Poly::divmod(p, lin);
        if (!rem.is_zero()) return k;
        ++k;
        p = std::move(q);
    }
}

/// Multiplicity of r as a root of p (0 when p(r) != 0); p must be nonzero.
inline int root_multiplicity(const Poly& p, const Scalar& r) {
    if (p.is_zero()) throw std::invalid_argument("root multiplicity of zero polynomial");
    Poly cur = p;
    return strip_root(cur, r);
}

} // namespace logconn

#endif
