/*
   Copyright 2026 The tamecurves Authors

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

#ifndef TAMECURVES_SERIES_HPP
#define TAMECURVES_SERIES_HPP

#include <algorithm>
#include <climits>
#include <vector>

#include "poly.hpp"

namespace tamecurves {

/// Truncated Laurent series sum_{i} c_i s^{val+i} + O(s^prec).
/// After normalization either coeffs is empty (the series is O(s^prec))
/// or coeffs.front() != 0.
class Series {
   public:
    /// Precision used for exactly known series (polynomials in s).
    static constexpr int kExact = INT_MAX / 4;

    Series() = default;
    Series(const Field* F, int val, std::vector<Elem> c, int prec) : F_(F), val_(val), c_(std::move(c)), prec_(prec) {
        normalize();
    }
    static Series zero(const Field* F, int prec) { return Series(F, prec, {}, prec); }
    static Series constant(const Field* F, Elem a, int prec) { return Series(F, 0, {a}, prec); }
    /// s + O(s^prec).
    static Series param(const Field* F, int prec) { return Series(F, 1, {1}, prec); }
    static Series from_poly(const Poly& p, int prec) { return Series(p.field(), 0, p.coeffs(), prec); }

    const Field* field() const noexcept { return F_; }
    /// Valuation; only meaningful when !is_zero().
    int val() const noexcept { return val_; }
    int prec() const noexcept { return prec_; }
    bool is_zero() const noexcept { return c_.empty(); }
    const std::vector<Elem>& coeffs() const noexcept { return c_; }
    /// Coefficient of s^n; requires n < prec.
    Elem coeff(int n) const {
        if (n >= prec_) throw PrecisionExhausted("series coefficient beyond precision");
        if (c_.empty() || n < val_) return 0;
        std::size_t i = static_cast<std::size_t>(n - val_);
        return i < c_.size() ? c_[i] : 0;
    }
    Elem lead() const noexcept { return c_.empty() ? 0 : c_.front(); }

    friend Series operator+(const Series& a, const Series& b) { return a.combine(b, false); }
    friend Series operator-(const Series& a, const Series& b) { return a.combine(b, true); }
    Series operator-() const {
        std::vector<Elem> r(c_.size());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = F_->neg(c_[i]);
        return Series(F_, val_, std::move(r), prec_);
    }
    friend Series operator*(const Series& a, const Series& b) {
        const Field* F = a.F_;
        if (a.is_zero() && b.is_zero()) return zero(F, a.prec_ + b.prec_);
        if (a.is_zero()) return zero(F, a.prec_ + b.val_);
        if (b.is_zero()) return zero(F, b.prec_ + a.val_);
        const int ra = a.prec_ - a.val_, rb = b.prec_ - b.val_;
        const int rel = std::min(ra, rb);
        const int len = std::min<long long>(rel, static_cast<long long>(a.c_.size() + b.c_.size()) - 1);
        std::vector<Elem> r(static_cast<std::size_t>(std::max(len, 0)), 0);
        for (std::size_t i = 0; i < a.c_.size() && i < r.size(); ++i) {
            if (!a.c_[i]) continue;
            for (std::size_t j = 0; j < b.c_.size() && i + j < r.size(); ++j)
                if (b.c_[j]) r[i + j] = F->add(r[i + j], F->mul(a.c_[i], b.c_[j]));
        }
        return Series(F, a.val_ + b.val_, std::move(r), a.val_ + b.val_ + rel);
    }
    Series scale(Elem c) const {
        std::vector<Elem> r(c_.size());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = F_->mul(c_[i], c);
        return c == 0 ? zero(F_, prec_) : Series(F_, val_, std::move(r), prec_);
    }
    /// Multiplication by s^n.
    Series shift(int n) const { return Series(F_, val_ + n, c_, prec_ + n); }

    Series inv() const {
        if (is_zero()) throw PrecisionExhausted("inverting a series with no known nonzero coefficient");
        const int rel = prec_ - val_;
        if (rel > (1 << 20)) throw DomainError("inverse of an untruncated series");
        std::vector<Elem> r(static_cast<std::size_t>(rel), 0);
        const Elem li = F_->inv(c_[0]);
        r[0] = li;
        for (int n = 1; n < rel; ++n) {
            Elem acc = 0;
            for (int k = 1; k <= n && k < static_cast<int>(c_.size()); ++k)
                if (c_[k]) acc = F_->add(acc, F_->mul(c_[k], r[n - k]));
            r[n] = F_->neg(F_->mul(acc, li));
        }
        return Series(F_, -val_, std::move(r), -val_ + rel);
    }
    friend Series operator/(const Series& a, const Series& b) { return a * b.inv(); }

    /// d/ds.
    Series derivative() const {
        std::vector<Elem> r(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] = F_->mul(c_[i], F_->from_int(val_ + static_cast<int>(i)));
        return Series(F_, val_ - 1, std::move(r), prec_ - 1);
    }
    Series pow(int e) const {
        if (e < 0) return inv().pow(-e);
        Series r = constant(F_, 1, kExact), b = *this;
        while (e) {
            if (e & 1) r = r * b;
            e >>= 1;
            if (e) b = b * b;
        }
        return r;
    }
    Series truncate(int prec) const {
        if (prec >= prec_) return *this;
        std::vector<Elem> r = c_;
        if (prec - val_ < static_cast<int>(r.size())) r.resize(static_cast<std::size_t>(std::max(prec - val_, 0)));
        return Series(F_, val_, std::move(r), prec);
    }

    /// Polynomial evaluated at this series (a plain power series substitution).
    static Series eval_poly(const Poly& p, const Series& s) {
        const Field* F = s.F_;
        Series acc = zero(F, kExact);
        for (std::size_t i = p.coeffs().size(); i-- > 0;) acc = acc * s + constant(F, p[i], kExact);
        return acc;
    }

    /// f(t) where t = phi(s) has valuation >= 1; f must be a power series (val >= 0).
    Series compose(const Series& phi) const {
        if (!is_zero() && val_ < 0) throw DomainError("compose needs a power series");
        if (!phi.is_zero() && phi.val_ < 1) throw DomainError("compose needs a substitution of positive valuation");
        if (phi.is_zero()) throw PrecisionExhausted("substitution with no known coefficient");
        const int out_prec = std::min(prec_ * phi.val_, phi.prec_);
        Series acc = zero(F_, kExact);
        Series pw = constant(F_, 1, kExact);
        for (int n = 0; n < prec_; ++n) {
            Elem c = coeff(n);
            if (c) acc = acc + pw.scale(c);
            pw = (pw * phi).truncate(out_prec);
        }
        return acc.truncate(out_prec);
    }

    /// Inverse series: psi with phi(psi(t)) = t, for phi of valuation exactly 1.
    Series reverse() const {
        if (is_zero() || val_ != 1) throw DomainError("reversion needs valuation 1");
        const int n = prec_ - 1;  // known relative precision of phi/s
        // Newton-free iterative reversion: psi = t/a1 - (higher terms) solved order by order.
        std::vector<Elem> psi(static_cast<std::size_t>(n), 0);
        const Elem a1i = F_->inv(c_[0]);
        psi[0] = a1i;
        for (int k = 2; k <= n; ++k) {
            // coefficient of t^k in phi(psi(t)) with psi_k unknown (zero for now)
            Series ps(F_, 1, psi, k + 1);
            Series comp = compose(ps);
            Elem ck = comp.coeff(k);
            psi[static_cast<std::size_t>(k - 1)] = F_->neg(F_->mul(ck, a1i));
        }
        return Series(F_, 1, std::move(psi), n + 1);
    }

   private:
    Series combine(const Series& b, bool minus) const {
        const Field* F = F_ ? F_ : b.F_;
        const int prec = std::min(prec_, b.prec_);
        int lo = prec, hi = INT_MIN;
        if (!c_.empty()) {
            lo = std::min(lo, val_);
            hi = std::max(hi, val_ + static_cast<int>(c_.size()));
        }
        if (!b.c_.empty()) {
            lo = std::min(lo, b.val_);
            hi = std::max(hi, b.val_ + static_cast<int>(b.c_.size()));
        }
        hi = std::min(hi, prec);
        if (lo >= prec || hi <= lo) return zero(F, prec);
        std::vector<Elem> r(static_cast<std::size_t>(hi - lo), 0);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            int e = val_ + static_cast<int>(i);
            if (e < prec) r[static_cast<std::size_t>(e - lo)] = c_[i];
        }
        for (std::size_t i = 0; i < b.c_.size(); ++i) {
            int e = b.val_ + static_cast<int>(i);
            if (e < prec) {
                auto& t = r[static_cast<std::size_t>(e - lo)];
                t = minus ? F->sub(t, b.c_[i]) : F->add(t, b.c_[i]);
            }
        }
        return Series(F, lo, std::move(r), prec);
    }
    void normalize() {
        if (static_cast<int>(c_.size()) > prec_ - val_) c_.resize(static_cast<std::size_t>(std::max(prec_ - val_, 0)));
        std::size_t k = 0;
        while (k < c_.size() && c_[k] == 0) ++k;
        if (k == c_.size()) {
            c_.clear();
            val_ = prec_;
            return;
        }
        if (k) {
            c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(k));
            val_ += static_cast<int>(k);
        }
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    const Field* F_ = nullptr;
    int val_ = 0;
    std::vector<Elem> c_;
    int prec_ = 0;
};

}  // namespace tamecurves

#endif  // TAMECURVES_SERIES_HPP
