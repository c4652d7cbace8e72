#pragma once

// The ring A*(k,n): integer combinations of diagrams in the k x (n-k)
// rectangle, multiplied with Littlewood-Richardson coefficients and
// truncated to the rectangle.

#include <cctype>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "schubert/error.hpp"
#include "schubert/young.hpp"

namespace schubert {

using BigInt = boost::multiprecision::cpp_int;

namespace detail {

// Backtracking filler for LR skew tableaux of shape outer/inner with
// content `weight`. Cells are filled in reading order (top row first,
// each row right to left), so the lattice condition can be checked on
// every prefix as it is produced.
class LrTableauCounter {
public:
    LrTableauCounter(const YoungDiagram& inner, const YoungDiagram& weight, const YoungDiagram& outer)
        : inner_(inner), outer_(outer), content_(weight.parts()),
          used_(content_.size() + 1, 0) {
        for (int r = 0; r < outer_.length(); ++r)
            for (int c = outer_[r] - 1; c >= inner_[r]; --c) cells_.emplace_back(r, c);
        grid_.assign(static_cast<std::size_t>(outer_.length()),
                     std::vector<int>(static_cast<std::size_t>(outer_[0]), 0));
    }

    std::uint64_t count() { return place(0); }

private:
    std::uint64_t place(std::size_t idx) {
        if (idx == cells_.size()) return 1;
        const auto [r, c] = cells_[idx];
        const auto ru = static_cast<std::size_t>(r);
        const auto cu = static_cast<std::size_t>(c);

        int hi = std::min<int>(static_cast<int>(content_.size()), r + 1);
        if (c + 1 < outer_[ru]) hi = std::min(hi, grid_[ru][cu + 1]);  // rows weakly increase
        int lo = 1;
        if (r > 0 && c >= inner_[ru - 1]) lo = grid_[ru - 1][cu] + 1;  // columns strictly increase

        std::uint64_t total = 0;
        for (int v = lo; v <= hi; ++v) {
            const auto vu = static_cast<std::size_t>(v);
            if (used_[vu] >= content_[vu - 1]) continue;
            if (v > 1 && used_[vu] + 1 > used_[vu - 1]) continue;  // lattice word
            ++used_[vu];
            grid_[ru][cu] = v;
            total += place(idx + 1);
            --used_[vu];
        }
        grid_[ru][cu] = 0;
        return total;
    }

    const YoungDiagram& inner_;
    const YoungDiagram& outer_;
    std::vector<int> content_;
    std::vector<int> used_;
    std::vector<std::pair<int, int>> cells_;
    std::vector<std::vector<int>> grid_;
};

inline std::uint64_t lr_coefficient_uncached(const YoungDiagram& lambda, const YoungDiagram& mu,
                                             const YoungDiagram& nu) {
    if (nu.area() != lambda.area() + mu.area()) return 0;
    if (!contains(nu, lambda) || !contains(nu, mu)) return 0;
    return LrTableauCounter(lambda, mu, nu).count();
}

/// Process-wide memo for LR coefficients, safe under concurrent access.
class LrCache {
public:
    using Key = std::tuple<std::vector<int>, std::vector<int>, std::vector<int>>;

    BigInt get(const YoungDiagram& lambda, const YoungDiagram& mu, const YoungDiagram& nu) {
        Key key{lambda.parts(), mu.parts(), nu.parts()};
        {
            std::lock_guard lock(mutex_);
            if (auto it = table_.find(key); it != table_.end()) return it->second;
        }
        BigInt value = lr_coefficient_uncached(lambda, mu, nu);
        std::lock_guard lock(mutex_);
        table_.emplace(std::move(key), value);
        return value;
    }

    std::size_t size() const {
        std::lock_guard lock(mutex_);
        return table_.size();
    }

    void clear() {
        std::lock_guard lock(mutex_);
        table_.clear();
    }

private:
    mutable std::mutex mutex_;
    std::map<Key, BigInt> table_;
};

inline LrCache& lr_cache() {
    static LrCache cache;
    return cache;
}

} // namespace detail

/// c^nu_{lambda,mu}: the number of LR skew tableaux of shape nu/lambda and
/// content mu. Zero when the areas do not add up or lambda, mu are not
/// contained in nu.
inline BigInt lr_coefficient(const YoungDiagram& lambda, const YoungDiagram& mu, const YoungDiagram& nu) {
    return detail::lr_cache().get(lambda, mu, nu);
}

/// An element of A*(k,n). Terms are stored with nonzero coefficients only,
/// ordered by decreasing lexicographic order on parts.
class CohomologyClass {
public:
    using TermMap = std::map<YoungDiagram, BigInt, std::greater<>>;

    explicit CohomologyClass(RectangleContext ctx) : ctx_(ctx) {}

    /// sigma_lambda.
    static CohomologyClass basis(const YoungDiagram& d, const RectangleContext& ctx) {
        CohomologyClass out(ctx);
        out.add(d, 1);
        return out;
    }

    /// sigma of the empty diagram, the ring unit.
    static CohomologyClass unit(const RectangleContext& ctx) { return basis(YoungDiagram{}, ctx); }

    [[nodiscard]] const RectangleContext& context() const noexcept { return ctx_; }
    [[nodiscard]] const TermMap& terms() const noexcept { return terms_; }
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }

    [[nodiscard]] BigInt coefficient(const YoungDiagram& d) const {
        auto it = terms_.find(d);
        return it == terms_.end() ? BigInt(0) : it->second;
    }

    /// Adds coeff * sigma_d; d must fit the rectangle.
    CohomologyClass& add(const YoungDiagram& d, const BigInt& coeff) {
        detail::require_fits(d, ctx_, "class term");
        if (coeff == 0) return *this;
        auto [it, inserted] = terms_.try_emplace(d, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
        return *this;
    }

    CohomologyClass& operator+=(const CohomologyClass& other) {
        require_same_context(other);
        for (const auto& [d, c] : other.terms_) add(d, c);
        return *this;
    }

    CohomologyClass& operator-=(const CohomologyClass& other) {
        require_same_context(other);
        for (const auto& [d, c] : other.terms_) add(d, -c);
        return *this;
    }

    friend CohomologyClass operator+(CohomologyClass a, const CohomologyClass& b) { return a += b; }
    friend CohomologyClass operator-(CohomologyClass a, const CohomologyClass& b) { return a -= b; }

    friend CohomologyClass operator*(const BigInt& s, const CohomologyClass& a) {
        CohomologyClass out(a.ctx_);
        for (const auto& [d, c] : a.terms_) out.add(d, s * c);
        return out;
    }

    friend bool operator==(const CohomologyClass& a, const CohomologyClass& b) {
        return a.ctx_ == b.ctx_ && a.terms_ == b.terms_;
    }

    void require_same_context(const CohomologyClass& other) const {
        if (ctx_ == other.ctx_) return;
        throw ValidationError("context mismatch: A*(" + std::to_string(ctx_.k) + "," + std::to_string(ctx_.n) +
                              ") vs A*(" + std::to_string(other.ctx_.k) + "," + std::to_string(other.ctx_.n) + ")");
    }

private:
    RectangleContext ctx_;
    TermMap terms_;
};

/// sigma_lambda cup sigma_mu, keeping only terms that fit the rectangle.
inline CohomologyClass cup(const YoungDiagram& lambda, const YoungDiagram& mu, const RectangleContext& ctx) {
    detail::require_fits(lambda, ctx, "first factor");
    detail::require_fits(mu, ctx, "second factor");
    CohomologyClass out(ctx);
    for (const auto& nu : enumerate_diagrams(ctx, lambda.area() + mu.area())) {
        if (!contains(nu, lambda) || !contains(nu, mu)) continue;
        out.add(nu, lr_coefficient(lambda, mu, nu));
    }
    return out;
}

/// Bilinear extension of the basis product.
inline CohomologyClass cup(const CohomologyClass& a, const CohomologyClass& b) {
    a.require_same_context(b);
    CohomologyClass out(a.context());
    for (const auto& [lambda, ca] : a.terms())
        for (const auto& [mu, cb] : b.terms()) {
            const BigInt scale = ca * cb;
            const auto product = cup(lambda, mu, a.context());
            for (const auto& [nu, c] : product.terms()) out.add(nu, scale * c);
        }
    return out;
}

inline bool cup_nonzero(const YoungDiagram& lambda, const YoungDiagram& mu, const RectangleContext& ctx) {
    return !cup(lambda, mu, ctx).is_zero();
}

/// Coefficient of the full-rectangle class in sigma_lambda cup sigma_mu.
/// Zero unless |lambda| + |mu| = k(n-k).
inline BigInt duality_coefficient(const YoungDiagram& lambda, const YoungDiagram& mu, const RectangleContext& ctx) {
    detail::require_fits(lambda, ctx, "first diagram");
    detail::require_fits(mu, ctx, "second diagram");
    if (lambda.area() + mu.area() != ctx.area()) return 0;
    const YoungDiagram full(std::vector<int>(static_cast<std::size_t>(ctx.k), ctx.width()));
    return lr_coefficient(lambda, mu, full);
}

// ---------------------------------------------------------------------------
// text form: "3*[2,1] + [1,1,1] - 2*[]", zero class "0"

inline std::string bracketed(const YoungDiagram& d) { return "[" + to_string(d.parts()) + "]"; }

inline std::string to_string(const CohomologyClass& x) {
    if (x.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [d, c] : x.terms()) {
        const bool negative = c < 0;
        const BigInt magnitude = negative ? BigInt(-c) : c;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (magnitude != 1) out += magnitude.str() + "*";
        out += bracketed(d);
        first = false;
    }
    return out;
}

/// Inverse of to_string(CohomologyClass); also accepts explicit "1*" factors.
inline CohomologyClass parse_class(std::string_view text, const RectangleContext& ctx) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    CohomologyClass out(ctx);
    if (s == "0") return out;
    detail::require(!s.empty(), "empty class expression");

    std::size_t pos = 0;
    auto fail = [&](const std::string& why) {
        throw ValidationError("cannot parse class '" + std::string(text) + "': " + why);
    };
    bool first = true;
    while (pos < s.size()) {
        int sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (!first) {
            fail("expected '+' or '-' at offset " + std::to_string(pos));
        }
        BigInt coeff = 1;
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            std::size_t end = pos;
            while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end]))) ++end;
            coeff = BigInt(s.substr(pos, end - pos));
            pos = end;
            if (pos >= s.size() || s[pos] != '*') fail("expected '*' after coefficient");
            ++pos;
        }
        if (pos >= s.size() || s[pos] != '[') fail("expected '[' at offset " + std::to_string(pos));
        const std::size_t close = s.find(']', pos);
        if (close == std::string::npos) fail("unterminated '['");
        const YoungDiagram d(parse_int_list(s.substr(pos + 1, close - pos - 1)));
        out.add(d, sign * coeff);
        pos = close + 1;
        first = false;
    }
    return out;
}

} // namespace schubert
