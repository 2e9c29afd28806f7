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

#ifndef TAMECURVES_FIELD_HPP
#define TAMECURVES_FIELD_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "errors.hpp"

namespace tamecurves {

/// Raw element handle. The value is the base-p digit encoding of the
/// coefficient vector over the prime field (digit i = coefficient of gen^i),
/// so the prime subfield occupies the handles 0..p-1 in every field.
using Elem = std::uint64_t;

class Field;
struct Extension;
using FieldPtr = std::shared_ptr<const Field>;

/// Fields up to this size use log/exp tables; larger ones multiply directly.
inline constexpr std::uint64_t kTableFieldSize = std::uint64_t{1} << 16;
/// Largest supported cardinality.
inline constexpr std::uint64_t kMaxFieldSize = std::uint64_t{1} << 63;

namespace detail {

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// Dense polynomials over GF(p) used while bootstrapping a field.
using SmallPoly = std::vector<std::uint32_t>;

inline void trim(SmallPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline SmallPoly mulmod(const SmallPoly& a, const SmallPoly& b, const SmallPoly& f, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint64_t> r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + std::uint64_t{a[i]} * b[j]) % p;
    }
    SmallPoly out(r.begin(), r.end());
    const std::size_t m = f.size() - 1;  // f monic
    for (std::size_t i = out.size(); i-- > m;) {
        std::uint32_t c = out[i];
        if (!c) continue;
        for (std::size_t j = 0; j <= m; ++j)
            out[i - m + j] = static_cast<std::uint32_t>((out[i - m + j] + std::uint64_t{p - c} * f[j]) % p);
    }
    out.resize(std::min(out.size(), m));
    trim(out);
    return out;
}

inline SmallPoly powmod(SmallPoly base, std::uint64_t e, const SmallPoly& f, std::uint32_t p) {
    SmallPoly r{1};
    while (e) {
        if (e & 1) r = mulmod(r, base, f, p);
        base = mulmod(base, base, f, p);
        e >>= 1;
    }
    return r;
}

inline std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    std::uint64_t r = 1, b = a, e = p - 2;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
}

inline SmallPoly polymod(SmallPoly a, const SmallPoly& b, std::uint32_t p) {
    trim(a);
    const std::uint32_t inv = inv_mod(b.back(), p);
    while (a.size() >= b.size()) {
        std::uint64_t c = std::uint64_t{a.back()} * inv % p;
        std::size_t shift = a.size() - b.size();
        for (std::size_t j = 0; j < b.size(); ++j)
            a[shift + j] = static_cast<std::uint32_t>((a[shift + j] + (p - c) * b[j]) % p);
        trim(a);
    }
    return a;
}

inline SmallPoly polygcd(SmallPoly a, SmallPoly b, std::uint32_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        SmallPoly r = polymod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Rabin's irreducibility test for a monic f of degree m over GF(p).
inline bool is_irreducible(const SmallPoly& f, std::uint32_t p) {
    const std::size_t m = f.size() - 1;
    if (m == 0) return false;
    if (m == 1) return true;
    std::vector<SmallPoly> frob(m + 1);
    frob[0] = SmallPoly{0, 1};
    for (std::size_t i = 1; i <= m; ++i) frob[i] = powmod(frob[i - 1], p, f, p);
    if (frob[m] != SmallPoly{0, 1}) return false;
    for (auto r : prime_factors(m)) {
        SmallPoly t = frob[m / r];
        t.resize(std::max<std::size_t>(t.size(), 2), 0);
        t[1] = (t[1] + p - 1) % p;
        trim(t);
        if (polygcd(f, t, p).size() != 1) return false;
    }
    return true;
}

}  // namespace detail

/// Finite field GF(p^m) with an explicit modulus over GF(p).
///
/// Instances are immutable after construction (internal caches are
/// synchronized), so a FieldPtr may be shared freely.
class Field {
   public:
    /// GF(p^m) over the given monic modulus (lowest coefficient first), or
    /// over the default modulus when none is supplied.
    static FieldPtr make(std::uint32_t p, std::uint32_t m, std::optional<std::vector<std::uint32_t>> modulus = {},
                         std::string gen = "w") {
        if (p > 65521 || !detail::is_prime(p)) throw InvalidField("characteristic " + std::to_string(p) + " is not a supported prime");
        if (m == 0) throw InvalidField("extension degree must be positive");
        std::uint64_t q = 1;
        for (std::uint32_t i = 0; i < m; ++i) {
            if (q > kMaxFieldSize / p) throw InvalidField("field too large (limit 2^63 elements)");
            q *= p;
        }
        std::vector<std::uint32_t> mod;
        if (modulus) {
            mod = *modulus;
            for (auto& c : mod) c %= p;
            detail::trim(mod);
            if (mod.size() != m + 1 || mod.back() != 1) throw InvalidField("modulus must be monic of degree m");
            if (!detail::is_irreducible(mod, p)) throw InvalidField("modulus is reducible over GF(p)");
        } else {
            mod = default_modulus(p, m);
        }
        return std::shared_ptr<Field>(new Field(p, m, q, std::move(mod), std::move(gen)));
    }

    /// Default modulus: for table-sized fields the lexicographically first
    /// primitive polynomial (lower coefficients read as a base-p integer,
    /// constant term first); beyond that the first irreducible one.
    static std::vector<std::uint32_t> default_modulus(std::uint32_t p, std::uint32_t m) {
        std::uint64_t q = 1;
        for (std::uint32_t i = 0; i < m; ++i) q *= p;
        if (m == 1) {
            for (std::uint32_t g = 1; g < p; ++g)
                if (p == 2 || is_primitive_root(g, p)) return {(p - g) % p, 1};
        }
        const bool want_primitive = q <= kTableFieldSize;
        const auto factors = want_primitive ? detail::prime_factors(q - 1) : std::vector<std::uint64_t>{};
        for (std::uint64_t code = 1; code < q; ++code) {
            detail::SmallPoly f(m + 1, 0);
            std::uint64_t c = code;
            for (std::uint32_t i = 0; i < m; ++i) {
                f[i] = static_cast<std::uint32_t>(c % p);
                c /= p;
            }
            f[m] = 1;
            if (f[0] == 0) continue;
            if (!want_primitive) {
                if (detail::is_irreducible(f, p)) return f;
                continue;
            }
            detail::SmallPoly x{0, 1};
            if (detail::powmod(x, q - 1, f, p) != detail::SmallPoly{1}) continue;
            bool prim = true;
            for (auto r : factors) {
                if (detail::powmod(x, (q - 1) / r, f, p) == detail::SmallPoly{1}) {
                    prim = false;
                    break;
                }
            }
            if (prim) return f;
        }
        throw InvalidField("no suitable modulus found");
    }

    std::uint32_t characteristic() const noexcept { return p_; }
    std::uint32_t degree() const noexcept { return m_; }
    std::uint64_t size() const noexcept { return q_; }
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
    const std::string& generator_name() const noexcept { return gen_; }
    bool table_driven() const noexcept { return !exp_.empty(); }

    Elem zero() const noexcept { return 0; }
    Elem one() const noexcept { return 1; }

    Elem add(Elem a, Elem b) const noexcept {
        if (p_ == 2) return a ^ b;
        if (m_ == 1) return (a + b) % p_;
        Elem r = 0, scale = 1;
        while (a || b) {
            Elem d = (a % p_ + b % p_) % p_;
            r += d * scale;
            scale *= p_;
            a /= p_;
            b /= p_;
        }
        return r;
    }
    Elem neg(Elem a) const noexcept {
        if (p_ == 2) return a;
        if (m_ == 1) return (p_ - a) % p_;
        Elem r = 0, scale = 1;
        while (a) {
            Elem d = a % p_;
            r += ((p_ - d) % p_) * scale;
            scale *= p_;
            a /= p_;
        }
        return r;
    }
    Elem sub(Elem a, Elem b) const noexcept { return p_ == 2 ? a ^ b : add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const noexcept {
        if (a == 0 || b == 0) return 0;
        if (!exp_.empty()) return exp_[log_[a] + log_[b]];
        if (m_ == 1) return static_cast<Elem>((static_cast<unsigned __int128>(a) * b) % p_);
        return p_ == 2 ? mul2(a, b) : mulp(a, b);
    }
    Elem inv(Elem a) const {
        if (a == 0) throw DomainError("inverse of zero");
        if (!exp_.empty()) return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
        return pow_u(a, q_ - 2);
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::int64_t e) const {
        if (a == 0) {
            if (e < 0) throw DomainError("negative power of zero");
            return e == 0 ? 1 : 0;
        }
        const std::uint64_t n = q_ - 1;
        std::uint64_t k;
        if (e >= 0)
            k = static_cast<std::uint64_t>(e) % n;
        else
            k = (n - (static_cast<std::uint64_t>(-(e + 1)) % n) - 1) % n;
        if (!exp_.empty()) return exp_[static_cast<std::size_t>((std::uint64_t{log_[a]} * k) % n)];
        return pow_u(a, k);
    }

    Elem from_int(std::int64_t n) const noexcept {
        std::int64_t r = n % static_cast<std::int64_t>(p_);
        if (r < 0) r += p_;
        return static_cast<Elem>(r);
    }
    Elem from_digits(const std::vector<std::uint32_t>& d) const {
        Elem r = 0, scale = 1;
        for (std::size_t i = 0; i < d.size() && i < m_; ++i) {
            r += (d[i] % p_) * scale;
            scale *= p_;
        }
        return r;
    }
    std::vector<std::uint32_t> digits(Elem a) const {
        std::vector<std::uint32_t> d(m_, 0);
        for (std::uint32_t i = 0; i < m_; ++i) {
            d[i] = static_cast<std::uint32_t>(a % p_);
            a /= p_;
        }
        return d;
    }
    /// Handle of the generator (the class of the modulus variable).
    Elem gen() const noexcept { return m_ == 1 ? from_int(p_ - modulus_[0]) : p_; }
    /// Every element, in handle order (small fields only).
    std::uint64_t count() const noexcept { return q_; }

    Elem frobenius(Elem a) const { return pow_u(a, p_); }
    /// Unique c with c^p = a (finite fields are perfect).
    Elem inv_frobenius(Elem a) const {
        if (m_ == 1) return a;
        if (a == 0) return 0;
        return pow_u(a, q_ / p_);
    }
    bool is_square(Elem a) const {
        if (p_ == 2 || a == 0) return true;
        if (!exp_.empty()) return log_[a] % 2 == 0;
        return pow_u(a, (q_ - 1) / 2) == 1;
    }
    /// A square root (the one with the smaller handle); nullopt if none.
    std::optional<Elem> sqrt(Elem a) const {
        if (a == 0) return Elem{0};
        if (p_ == 2) return inv_frobenius(a);
        if (!is_square(a)) return std::nullopt;
        Elem r;
        if (!exp_.empty()) {
            r = exp_[log_[a] / 2];
        } else {
            // Tonelli-Shanks
            std::uint64_t Q = q_ - 1, S = 0;
            while (Q % 2 == 0) {
                Q /= 2;
                ++S;
            }
            Elem z = 2;
            while (is_square(z)) ++z;
            Elem M = S, c = pow_u(z, Q), t = pow_u(a, Q);
            r = pow_u(a, (Q + 1) / 2);
            while (t != 1) {
                Elem i = 0, tt = t;
                while (tt != 1) {
                    tt = mul(tt, tt);
                    ++i;
                }
                Elem b = c;
                for (Elem j = 0; j + i + 1 < M; ++j) b = mul(b, b);
                M = i;
                c = mul(b, b);
                t = mul(t, c);
                r = mul(r, b);
            }
        }
        return std::min(r, neg(r));
    }

    /// Absolute trace a + a^p + ... + a^{p^{m-1}}, a handle in 0..p-1.
    Elem trace_to_prime(Elem a) const {
        Elem t = 0, c = a;
        for (std::uint32_t i = 0; i < m_; ++i) {
            t = add(t, c);
            c = frobenius(c);
        }
        return t;
    }

    /// Solution u of u^2 + u = c with zero constant coefficient (the
    /// lexicographically smaller of u, u+1); nullopt when the trace of c is 1.
    std::optional<Elem> artin_schreier(Elem c) const {
        if (p_ != 2) throw CharacteristicMismatch("Artin-Schreier solving needs characteristic 2");
        const auto& s = as_solver();
        Elem img = c, pre = 0;
        for (const auto& row : s) {
            if (img >> row.bit & 1) {
                img ^= row.img;
                pre ^= row.pre;
            }
        }
        if (img != 0) return std::nullopt;
        if (pre & 1) pre ^= 1;
        return pre;
    }

    bool operator==(const Field& o) const noexcept { return p_ == o.p_ && m_ == o.m_ && modulus_ == o.modulus_; }

    /// Storage for extensions built by extension() in poly.hpp.
    std::mutex& extension_mutex() const { return cache_mutex_; }
    std::map<std::uint32_t, std::shared_ptr<Extension>>& extension_cache() const { return extensions_; }
    /// Non-owning handle to this field.
    FieldPtr self_handle() const { return FieldPtr(FieldPtr{}, this); }

   private:
    Field(std::uint32_t p, std::uint32_t m, std::uint64_t q, std::vector<std::uint32_t> mod, std::string gen)
        : p_(p), m_(m), q_(q), modulus_(std::move(mod)), gen_(std::move(gen)) {
        if (p_ == 2)
            for (std::uint32_t i = 0; i <= m_ && i < 64; ++i)
                if (modulus_[i]) modmask_ |= Elem{1} << i;
        if (q_ <= kTableFieldSize) build_tables();
    }

    static bool is_primitive_root(std::uint32_t g, std::uint32_t p) {
        for (auto r : detail::prime_factors(p - 1)) {
            std::uint64_t acc = 1, b = g, e = (p - 1) / r;
            while (e) {
                if (e & 1) acc = acc * b % p;
                b = b * b % p;
                e >>= 1;
            }
            if (acc == 1) return false;
        }
        return true;
    }

    Elem pow_u(Elem a, std::uint64_t e) const {
        if (a == 0) return e == 0 ? 1 : 0;
        if (!exp_.empty()) return exp_[static_cast<std::size_t>((static_cast<unsigned __int128>(log_[a]) * (e % (q_ - 1))) % (q_ - 1))];
        Elem r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            e >>= 1;
            if (e) a = mul(a, a);
        }
        return r;
    }

    // carry-less product reduced by the modulus (p = 2)
    Elem mul2(Elem a, Elem b) const noexcept {
        unsigned __int128 r = 0;
        for (unsigned i = 0; i < m_; ++i)
            if (b >> i & 1) r ^= static_cast<unsigned __int128>(a) << i;
        for (unsigned i = 2 * m_ - 2; i >= m_; --i)
            if (static_cast<Elem>(r >> i) & 1) r ^= static_cast<unsigned __int128>(modmask_) << (i - m_);
        return static_cast<Elem>(r);
    }
    Elem mulp(Elem a, Elem b) const noexcept {
        std::uint32_t da[64], db[64];
        std::uint64_t r[128] = {0};
        for (std::uint32_t i = 0; i < m_; ++i) {
            da[i] = static_cast<std::uint32_t>(a % p_);
            a /= p_;
            db[i] = static_cast<std::uint32_t>(b % p_);
            b /= p_;
        }
        for (std::uint32_t i = 0; i < m_; ++i) {
            if (!da[i]) continue;
            for (std::uint32_t j = 0; j < m_; ++j) r[i + j] = (r[i + j] + std::uint64_t{da[i]} * db[j]) % p_;
        }
        for (std::uint32_t i = 2 * m_ - 2; i >= m_; --i) {
            std::uint64_t c = r[i];
            if (!c) continue;
            for (std::uint32_t j = 0; j <= m_; ++j) r[i - m_ + j] = (r[i - m_ + j] + (p_ - c) * modulus_[j]) % p_;
        }
        Elem out = 0;
        for (std::uint32_t i = m_; i-- > 0;) out = out * p_ + r[i];
        return out;
    }

    Elem encode(const detail::SmallPoly& a) const {
        Elem r = 0, scale = 1;
        for (std::size_t i = 0; i < a.size(); ++i) {
            r += a[i] * scale;
            scale *= p_;
        }
        return r;
    }
    detail::SmallPoly decode(Elem a) const {
        detail::SmallPoly r(m_);
        for (std::uint32_t i = 0; i < m_; ++i) {
            r[i] = static_cast<std::uint32_t>(a % p_);
            a /= p_;
        }
        detail::trim(r);
        return r;
    }

    void build_tables() {
        log_.assign(q_, 0);
        exp_.assign(2 * std::size_t(q_), 0);
        if (q_ == 2) {
            exp_[0] = exp_[1] = exp_[2] = exp_[3] = 1;
            return;
        }
        const auto factors = detail::prime_factors(q_ - 1);
        auto order_full = [&](const detail::SmallPoly& g) {
            for (auto r : factors)
                if (detail::powmod(g, (q_ - 1) / r, modulus_, p_) == detail::SmallPoly{1}) return false;
            return true;
        };
        detail::SmallPoly g;
        for (Elem cand = 2; cand < q_; ++cand) {
            g = decode(cand);
            if (order_full(g)) break;
        }
        const bool is_x = (m_ > 1 && g == detail::SmallPoly{0, 1});
        detail::SmallPoly cur{1};
        for (std::uint64_t i = 0; i < q_ - 1; ++i) {
            Elem e = encode(cur);
            exp_[i] = static_cast<std::uint32_t>(e);
            exp_[i + q_ - 1] = static_cast<std::uint32_t>(e);
            log_[e] = static_cast<std::uint32_t>(i);
            if (is_x) {
                detail::SmallPoly nxt(m_ + 1, 0);
                for (std::size_t j = 0; j < cur.size(); ++j) nxt[j + 1] = cur[j];
                std::uint32_t top = nxt[m_];
                if (top)
                    for (std::uint32_t j = 0; j <= m_; ++j)
                        nxt[j] = static_cast<std::uint32_t>((nxt[j] + std::uint64_t{p_ - top} * modulus_[j]) % p_);
                nxt.resize(m_);
                detail::trim(nxt);
                cur = std::move(nxt);
            } else {
                cur = detail::mulmod(cur, g, modulus_, p_);
            }
        }
    }

    struct AsRow {
        Elem img, pre;
        std::uint32_t bit;
    };
    const std::vector<AsRow>& as_solver() const {
        std::call_once(as_once_, [this] {
            std::vector<AsRow> rows;
            for (std::uint32_t j = 0; j < m_; ++j) {
                Elem e = Elem{1} << j;
                AsRow r{static_cast<Elem>(mul(e, e) ^ e), e, 0};
                for (const auto& piv : rows)
                    if (r.img >> piv.bit & 1) {
                        r.img ^= piv.img;
                        r.pre ^= piv.pre;
                    }
                if (r.img == 0) continue;
                std::uint32_t b = 63;
                while (!(r.img >> b & 1)) --b;
                r.bit = b;
                for (auto& piv : rows)
                    if (piv.img >> b & 1) {
                        piv.img ^= r.img;
                        piv.pre ^= r.pre;
                    }
                rows.push_back(r);
            }
            as_rows_ = std::move(rows);
        });
        return as_rows_;
    }

    std::uint32_t p_, m_;
    std::uint64_t q_;
    std::vector<std::uint32_t> modulus_;
    std::string gen_;
    Elem modmask_ = 0;
    std::vector<std::uint32_t> exp_;
    std::vector<std::uint32_t> log_;

    mutable std::mutex cache_mutex_;
    mutable std::map<std::uint32_t, std::shared_ptr<Extension>> extensions_;
    mutable std::once_flag as_once_;
    mutable std::vector<AsRow> as_rows_;
};

/// Coordinates over GF(p) with respect to a family of field elements.
class PrimeSpan {
   public:
    PrimeSpan() = default;
    PrimeSpan(const Field* F, const std::vector<Elem>& family) : F_(F), n_(family.size()) {
        const std::uint32_t p = F->characteristic();
        for (std::size_t k = 0; k < family.size(); ++k) {
            Row r{F->digits(family[k]), std::vector<std::uint32_t>(n_, 0), 0};
            r.combo[k] = 1;
            reduce(r.vec, r.combo);
            std::size_t piv = 0;
            while (piv < r.vec.size() && r.vec[piv] == 0) ++piv;
            if (piv == r.vec.size()) throw DomainError("family is linearly dependent over the prime field");
            const std::uint32_t inv = detail::inv_mod(r.vec[piv], p);
            for (auto& v : r.vec) v = static_cast<std::uint32_t>(std::uint64_t{v} * inv % p);
            for (auto& v : r.combo) v = static_cast<std::uint32_t>(std::uint64_t{v} * inv % p);
            r.pivot = piv;
            rows_.push_back(std::move(r));
        }
    }
    std::size_t size() const noexcept { return n_; }
    /// c with sum c_k family[k] = a, or nullopt if a is outside the span.
    std::optional<std::vector<std::uint32_t>> coords(Elem a) const {
        std::vector<std::uint32_t> vec = F_->digits(a), combo(n_, 0);
        reduce(vec, combo);
        for (auto v : vec)
            if (v) return std::nullopt;
        const std::uint32_t p = F_->characteristic();
        for (auto& c : combo) c = (p - c) % p;
        return combo;
    }

   private:
    struct Row {
        std::vector<std::uint32_t> vec, combo;
        std::size_t pivot;
    };
    // Subtracts pivot rows from (vec, combo); combo accumulates the negated combination.
    void reduce(std::vector<std::uint32_t>& vec, std::vector<std::uint32_t>& combo) const {
        const std::uint32_t p = F_->characteristic();
        for (const auto& r : rows_) {
            std::uint32_t c = vec[r.pivot];
            if (!c) continue;
            for (std::size_t i = 0; i < vec.size(); ++i)
                vec[i] = static_cast<std::uint32_t>((vec[i] + std::uint64_t{p - c} * r.vec[i]) % p);
            for (std::size_t i = 0; i < combo.size(); ++i)
                combo[i] = static_cast<std::uint32_t>((combo[i] + std::uint64_t{p - c} * r.combo[i]) % p);
        }
    }
    const Field* F_ = nullptr;
    std::size_t n_ = 0;
    std::vector<Row> rows_;
};

/// An extension GF(q^d) of a base field together with an embedding.
struct Extension {
    const Field* base = nullptr;
    FieldPtr field;
    std::uint32_t degree = 1;
    Elem root = 0;  // image of the base generator
    PrimeSpan base_span;  // powers of root, to restrict back to the base

    Elem embed(Elem a) const {
        if (degree == 1) return a;
        const auto dg = base->digits(a);
        Elem acc = 0;
        for (std::size_t i = dg.size(); i-- > 0;) acc = field->add(field->mul(acc, root), dg[i]);
        return acc;
    }
    /// Preimage of an element lying in the image of the base; throws otherwise.
    Elem restrict(Elem a) const {
        if (degree == 1) return a;
        auto c = base_span.coords(a);
        if (!c) throw DomainError("element does not lie in the base field");
        return base->from_digits(*c);
    }
};

/// Value-semantic field element: a handle bound to its field.
class FieldElem {
   public:
    FieldElem() = default;
    FieldElem(const Field* F, Elem v) : F_(F), v_(v) {}

    const Field& field() const { return *F_; }
    const Field* field_ptr() const noexcept { return F_; }
    Elem raw() const noexcept { return v_; }
    bool is_zero() const noexcept { return v_ == 0; }

    friend FieldElem operator+(FieldElem a, FieldElem b) { return {a.F_, a.F_->add(a.v_, b.v_)}; }
    friend FieldElem operator-(FieldElem a, FieldElem b) { return {a.F_, a.F_->sub(a.v_, b.v_)}; }
    friend FieldElem operator*(FieldElem a, FieldElem b) { return {a.F_, a.F_->mul(a.v_, b.v_)}; }
    friend FieldElem operator/(FieldElem a, FieldElem b) { return {a.F_, a.F_->div(a.v_, b.v_)}; }
    FieldElem operator-() const { return {F_, F_->neg(v_)}; }
    FieldElem pow(std::int64_t e) const { return {F_, F_->pow(v_, e)}; }
    friend bool operator==(FieldElem a, FieldElem b) noexcept { return a.v_ == b.v_; }
    friend bool operator!=(FieldElem a, FieldElem b) noexcept { return a.v_ != b.v_; }

   private:
    const Field* F_ = nullptr;
    Elem v_ = 0;
};

/// Unique c' with c'^p = c.
inline FieldElem inv_frobenius(FieldElem c) { return {c.field_ptr(), c.field().inv_frobenius(c.raw())}; }

/// c + c^p + ... + c^{p^{m-1}}; lies in the prime subfield.
inline FieldElem trace_to_prime(FieldElem c) { return {c.field_ptr(), c.field().trace_to_prime(c.raw())}; }

/// u with u^2 + u = c, canonical among {u, u+1}; nullopt iff the trace of c is nonzero.
inline std::optional<FieldElem> artin_schreier_solve_field(FieldElem c) {
    auto r = c.field().artin_schreier(c.raw());
    if (!r) return std::nullopt;
    return FieldElem{c.field_ptr(), *r};
}

}  // namespace tamecurves

#endif  // TAMECURVES_FIELD_HPP
