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

#ifndef LOGCONN_ONEFORM_HPP
#define LOGCONN_ONEFORM_HPP

#include <logconn/poly.hpp>

#include <vector>

namespace logconn {

/// A point of the projective line: either a finite affine coordinate or the
/// point at infinity of the standard chart.
class ProjectivePoint {
public:
    static ProjectivePoint finite(Scalar z) { return ProjectivePoint(false, std::move(z)); }
    static ProjectivePoint infinity() { return ProjectivePoint(true, Scalar(0)); }

    bool is_infinity() const { return infinite_; }

    const Scalar& value() const {
        if (infinite_) throw std::logic_error("coordinate of the point at infinity");
        return z_;
    }

private:
    ProjectivePoint(bool inf, Scalar z) : infinite_(inf), z_(std::move(z)) {}

    bool infinite_;
    Scalar z_;
};

/// Rational 1-form (numer/denom)*dz in an affine coordinate. Canonical form:
/// denom monic and coprime to numer, so poles and their orders can be read
/// off the denominator exactly. Arbitrary finite pole orders are supported;
/// simple-pole discipline is a verification-layer concern, not enforced here.
///
/// The same type represents forms in the coordinate w = 1/z of the opposite
/// chart; to_infinity_chart() converts between the two.
class OneForm {
public:
    OneForm() : numer_(), denom_(Scalar(1)) {}

    OneForm(Poly numer, Poly denom) : numer_(std::move(numer)), denom_(std::move(denom)) {
        if (denom_.is_zero()) throw std::invalid_argument("one-form with zero denominator");
        canonicalize();
    }

    /// dz.
    static OneForm dz() { return OneForm(Poly(Scalar(1)), Poly(Scalar(1))); }

    /// residue * dz/(z - x).
    static OneForm simple_pole(const Scalar& x, const Scalar& residue) {
        return OneForm(Poly(residue), Poly::linear(x));
    }

    /// a * dz/z, the logarithmic derivative of z^a.
    static OneForm dlog_monomial(long a) {
        return OneForm(Poly(Scalar(a)), Poly::variable());
    }

    const Poly& numer() const { return numer_; }
    const Poly& denom() const { return denom_; }
    bool is_zero() const { return numer_.is_zero(); }

    friend bool operator==(const OneForm& a, const OneForm& b) {
        return a.numer_ == b.numer_ && a.denom_ == b.denom_;
    }
    friend bool operator!=(const OneForm& a, const OneForm& b) { return !(a == b); }

    friend OneForm operator+(const OneForm& a, const OneForm& b) {
        return OneForm(a.numer_ * b.denom_ + b.numer_ * a.denom_, a.denom_ * b.denom_);
    }

    friend OneForm operator-(const OneForm& a, const OneForm& b) { return a + (-b); }

    OneForm operator-() const {
        OneForm r = *this;
        r.numer_ = -r.numer_;
        return r;
    }

    friend OneForm operator*(const Scalar& s, const OneForm& f) {
        return OneForm(s * f.numer_, f.denom_);
    }

    /// Multiplication by the rational function pn/pd.
    OneForm mul_rational(const Poly& pn, const Poly& pd) const {
        return OneForm(numer_ * pn, denom_ * pd);
    }

    /// Multiplication by z^e, e of either sign.
    OneForm mul_monomial(int e) const {
        if (e >= 0) return mul_rational(Poly::monomial(e), Poly(Scalar(1)));
        return mul_rational(Poly(Scalar(1)), Poly::monomial(-e));
    }

    int pole_order_at(const ProjectivePoint& p) const {
        if (p.is_infinity()) return to_infinity_chart().pole_order_at(ProjectivePoint::finite(Scalar(0)));
        if (is_zero()) return 0;
        return root_multiplicity(denom_, p.value());
    }

    bool is_holomorphic_at(const ProjectivePoint& p) const { return pole_order_at(p) == 0; }

    /// Principal-part coefficients at a finite point x: returns c[0..k-1] with
    /// the form equal to (c[0] u^{-k} + ... + c[k-1] u^{-1} + holomorphic) du,
    /// u = z - x, k the pole order. Empty when holomorphic at x.
    std::vector<Scalar> principal_part_at(const Scalar& x) const {
        if (is_zero()) return {};
        const Poly d_shift = denom_.shifted(x);
        int k = 0;
        while (d_shift.coeff(k) == 0) ++k;
        if (k == 0) return {};
        // denom(x+u) = u^k * Q(u) with Q(0) != 0; expand numer(x+u)/Q(u) by
        // exact power-series division up to order k-1.
        const Poly n_shift = numer_.shifted(x);
        const Scalar q0 = d_shift.coeff(k);
        std::vector<Scalar> series(static_cast<std::size_t>(k), Scalar(0));
        for (int t = 0; t < k; ++t) {
            Scalar acc = n_shift.coeff(t);
            for (int j = 1; j <= t; ++j)
                acc -= d_shift.coeff(k + j) * series[static_cast<std::size_t>(t - j)];
            series[static_cast<std::size_t>(t)] = acc / q0;
        }
        return series;
    }

    /// Coefficient of (z - x)^{-s} in the Laurent expansion at x, s >= 1.
    Scalar laurent_coefficient_at(const Scalar& x, int s) const {
        const std::vector<Scalar> pp = principal_part_at(x);
        const int k = static_cast<int>(pp.size());
        if (s < 1 || s > k) return Scalar(0);
        return pp[static_cast<std::size_t>(k - s)];
    }

    Scalar residue_at(const ProjectivePoint& p) const {
        if (p.is_infinity()) return to_infinity_chart().residue_at(ProjectivePoint::finite(Scalar(0)));
        const std::vector<Scalar> pp = principal_part_at(p.value());
        return pp.empty() ? Scalar(0) : pp.back();
    }

    Scalar residue_at(const Scalar& x) const { return residue_at(ProjectivePoint::finite(x)); }

    /// The same form in the opposite chart: substitutes z = 1/w and
    /// dz = -dw/w^2, returned in canonical reduced form. An involution.
    OneForm to_infinity_chart() const {
        if (is_zero()) return OneForm();
        const int n = numer_.degree();
        const int d = denom_.degree();
        const Poly rev_n = -numer_.reversed(n);
        const Poly rev_d = denom_.reversed(d);
        const int e = d - n - 2;
        if (e >= 0) return OneForm(rev_n * Poly::monomial(e), rev_d);
        return OneForm(rev_n, rev_d * Poly::monomial(-e));
    }

private:
    void canonicalize() {
        if (numer_.is_zero()) {
            denom_ = Poly(Scalar(1));
            return;
        }
        const Poly g = Poly::gcd(numer_, denom_);
        if (g.degree() > 0) {
            numer_ = Poly::divmod(numer_, g).first;
            denom_ = Poly::divmod(denom_, g).first;
        }
        const Scalar lead = denom_.leading();
        if (lead != 1) {
            const Scalar inv = Scalar(1) / lead;
            numer_ = inv * numer_;
            denom_ = inv * denom_;
        }
    }

    Poly numer_;
    Poly denom_;
};

} // namespace logconn

#endif
