#pragma once

// Young diagrams inside a k x (n-k) rectangle and their equivalent
// encodings: jumping numbers and rank tables with respect to a flag.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "schubert/error.hpp"

namespace schubert {

/// The pair (k, n) fixing G_k(C^n) and its k x (n-k) rectangle.
struct RectangleContext {
    int k = 1;
    int n = 2;

    RectangleContext() = default;
    RectangleContext(int rows, int ambient) : k(rows), n(ambient) {
        detail::require(k >= 1 && k < n, "rectangle context requires 1 <= k < n (got k=" +
                                             std::to_string(k) + ", n=" + std::to_string(n) + ")");
    }

    [[nodiscard]] int width() const noexcept { return n - k; }
    [[nodiscard]] int area() const noexcept { return k * (n - k); }

    friend bool operator==(const RectangleContext&, const RectangleContext&) = default;
};

/// A partition: weakly decreasing nonnegative parts, trailing zeros dropped.
class YoungDiagram {
public:
    YoungDiagram() = default;

    explicit YoungDiagram(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            detail::require(parts_[i] >= 0, "diagram parts must be nonnegative");
            detail::require(i == 0 || parts_[i - 1] >= parts_[i],
                            "diagram parts must be weakly decreasing");
        }
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    }

    YoungDiagram(std::initializer_list<int> parts) : YoungDiagram(std::vector<int>(parts)) {}

    /// Nonzero parts only.
    [[nodiscard]] const std::vector<int>& parts() const noexcept { return parts_; }

    /// Number of nonzero rows.
    [[nodiscard]] int length() const noexcept { return static_cast<int>(parts_.size()); }

    /// Row i, 0-based; rows past the end read as 0.
    [[nodiscard]] int operator[](std::size_t i) const noexcept {
        return i < parts_.size() ? parts_[i] : 0;
    }

    /// Row i, 1-based, matching the usual lambda_i indexing.
    [[nodiscard]] int row(int i) const noexcept {
        return i >= 1 ? (*this)[static_cast<std::size_t>(i - 1)] : 0;
    }

    [[nodiscard]] int area() const noexcept {
        return std::accumulate(parts_.begin(), parts_.end(), 0);
    }

    [[nodiscard]] bool empty() const noexcept { return parts_.empty(); }

    /// Parts padded with zeros to exactly `rows` entries (rows >= length()).
    [[nodiscard]] std::vector<int> padded(int rows) const {
        std::vector<int> out(parts_);
        if (static_cast<int>(out.size()) < rows) out.resize(static_cast<std::size_t>(rows), 0);
        return out;
    }

    friend auto operator<=>(const YoungDiagram&, const YoungDiagram&) = default;
    friend bool operator==(const YoungDiagram&, const YoungDiagram&) = default;

private:
    std::vector<int> parts_;
};

/// Strictly increasing indices j_1 < ... < j_k in [1, n].
struct JumpingNumbers {
    std::vector<int> indices;
    friend bool operator==(const JumpingNumbers&, const JumpingNumbers&) = default;
};

/// d_0, ..., d_n with d_j = dim(V cap F_j).
struct RankTable {
    std::vector<int> values;
    friend bool operator==(const RankTable&, const RankTable&) = default;
};

// ---------------------------------------------------------------------------
// text notation

/// "5,3,2,2,1"; the empty diagram is "0".
inline std::string to_string(const YoungDiagram& d) {
    if (d.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < d.parts().size(); ++i) {
        if (i) out += ',';
        out += std::to_string(d.parts()[i]);
    }
    return out;
}

/// Same notation re-padded to k rows, e.g. "2,0" in a 2-row rectangle.
inline std::string to_string(const YoungDiagram& d, const RectangleContext& ctx) {
    std::string out;
    const auto rows = d.padded(ctx.k);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(rows[i]);
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const YoungDiagram& d) { return os << to_string(d); }

inline std::string to_string(const std::vector<int>& seq) {
    std::string out;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(seq[i]);
    }
    return out;
}

/// Comma-separated integers; surrounding brackets/parentheses and blanks are
/// ignored. Empty input yields an empty list.
inline std::vector<int> parse_int_list(std::string_view text) {
    std::string s;
    for (char c : text)
        if (c != ' ' && c != '\t' && c != '[' && c != ']' && c != '(' && c != ')') s += c;
    std::vector<int> out;
    if (s.empty()) return out;
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = s.find(',', pos);
        const std::string token = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        detail::require(!token.empty(), "malformed integer list '" + std::string(text) + "'");
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(token, &used);
        } catch (const std::exception&) {
            throw ValidationError("malformed integer '" + token + "' in '" + std::string(text) + "'");
        }
        detail::require(used == token.size(), "malformed integer '" + token + "' in '" + std::string(text) + "'");
        out.push_back(value);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

/// Parses diagram notation ("5,3,2,2,1", "2,0", "0").
inline YoungDiagram parse_diagram(std::string_view text) { return YoungDiagram(parse_int_list(text)); }

// ---------------------------------------------------------------------------
// rectangle membership and enumeration

/// At most k nonzero rows and lambda_1 <= n-k.
inline bool fits_in(const YoungDiagram& d, const RectangleContext& ctx) noexcept {
    return d.length() <= ctx.k && d[0] <= ctx.width();
}

namespace detail {

inline void require_fits(const YoungDiagram& d, const RectangleContext& ctx, std::string_view what = "diagram") {
    if (fits_in(d, ctx)) return;
    std::ostringstream msg;
    msg << what << " (" << to_string(d) << ") does not fit the " << ctx.k << "x" << ctx.width()
        << " rectangle: ";
    if (d.length() > ctx.k)
        msg << "it has " << d.length() << " nonzero rows > k=" << ctx.k;
    else
        msg << "first row " << d[0] << " > n-k=" << ctx.width();
    throw ValidationError(msg.str());
}

inline void collect_diagrams(std::vector<int>& prefix, int rows_left, int max_part, int target_area,
                             std::vector<YoungDiagram>& out) {
    if (rows_left == 0) {
        // negative target means "any area"
        if (target_area <= 0) out.emplace_back(prefix);
        return;
    }
    for (int p = max_part; p >= 0; --p) {
        if (target_area >= 0 && p > target_area) continue;
        prefix.push_back(p);
        collect_diagrams(prefix, rows_left - 1, p, target_area < 0 ? -1 : target_area - p, out);
        prefix.pop_back();
    }
}

} // namespace detail

/// Every diagram fitting the rectangle, in decreasing lexicographic order.
/// The count is binomial(n, k).
inline std::vector<YoungDiagram> enumerate_diagrams(const RectangleContext& ctx) {
    std::vector<YoungDiagram> out;
    std::vector<int> prefix;
    detail::collect_diagrams(prefix, ctx.k, ctx.width(), -1, out);
    return out;
}

/// Diagrams of a fixed area fitting the rectangle.
inline std::vector<YoungDiagram> enumerate_diagrams(const RectangleContext& ctx, int area) {
    std::vector<YoungDiagram> out;
    if (area < 0 || area > ctx.area()) return out;
    std::vector<int> prefix;
    detail::collect_diagrams(prefix, ctx.k, ctx.width(), area, out);
    return out;
}

/// Orders diagrams by area, then by decreasing lexicographic order within an
/// area: 0, (1), (2), (1,1), (2,1), ...
struct GradedOrder {
    bool operator()(const YoungDiagram& a, const YoungDiagram& b) const {
        if (a.area() != b.area()) return a.area() < b.area();
        return b < a;
    }
};

/// True when inner is a subdiagram of outer (inner_i <= outer_i for all i).
inline bool contains(const YoungDiagram& outer, const YoungDiagram& inner) noexcept {
    if (inner.length() > outer.length()) return false;
    for (std::size_t i = 0; i < inner.parts().size(); ++i)
        if (inner.parts()[i] > outer[i]) return false;
    return true;
}

// ---------------------------------------------------------------------------
// the three encodings

inline void validate(const JumpingNumbers& jumps, const RectangleContext& ctx) {
    const auto& j = jumps.indices;
    detail::require(static_cast<int>(j.size()) == ctx.k,
                    "expected " + std::to_string(ctx.k) + " jumping numbers, got " + std::to_string(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) {
        detail::require(j[i] >= 1 && j[i] <= ctx.n,
                        "jumping number " + std::to_string(j[i]) + " outside [1, " + std::to_string(ctx.n) + "]");
        detail::require(i == 0 || j[i - 1] < j[i], "jumping numbers must be strictly increasing");
    }
}

/// Infers k = d_n and n = size-1, then checks d_0 = 0 and unit steps.
inline void validate(const RankTable& table) {
    const auto& d = table.values;
    detail::require(d.size() >= 2, "rank table needs entries d_0..d_n with n >= 1");
    detail::require(d.front() == 0, "rank table must start at d_0 = 0");
    for (std::size_t j = 1; j < d.size(); ++j) {
        const int step = d[j] - d[j - 1];
        detail::require(step == 0 || step == 1, "rank table steps must be 0 or 1 (violated at j=" +
                                                    std::to_string(j) + ")");
    }
}

inline void validate(const RankTable& table, const RectangleContext& ctx) {
    validate(table);
    detail::require(static_cast<int>(table.values.size()) == ctx.n + 1,
                    "rank table must have n+1 = " + std::to_string(ctx.n + 1) + " entries");
    detail::require(table.values.back() == ctx.k, "rank table must end at d_n = k = " + std::to_string(ctx.k));
}

/// lambda_i = n - k - j_i + i.
inline YoungDiagram diagram_from_jumps(const JumpingNumbers& jumps, const RectangleContext& ctx) {
    validate(jumps, ctx);
    std::vector<int> parts(static_cast<std::size_t>(ctx.k));
    for (int i = 1; i <= ctx.k; ++i)
        parts[static_cast<std::size_t>(i - 1)] = ctx.n - ctx.k - jumps.indices[static_cast<std::size_t>(i - 1)] + i;
    return YoungDiagram(std::move(parts));
}

/// j_i = n - k - lambda_i + i.
inline JumpingNumbers jumps_from_diagram(const YoungDiagram& d, const RectangleContext& ctx) {
    detail::require_fits(d, ctx);
    JumpingNumbers out;
    out.indices.reserve(static_cast<std::size_t>(ctx.k));
    for (int i = 1; i <= ctx.k; ++i) out.indices.push_back(ctx.n - ctx.k - d.row(i) + i);
    return out;
}

inline RankTable rank_table_from_jumps(const JumpingNumbers& jumps, const RectangleContext& ctx) {
    validate(jumps, ctx);
    RankTable table;
    table.values.assign(static_cast<std::size_t>(ctx.n + 1), 0);
    std::size_t next = 0;
    for (int j = 1; j <= ctx.n; ++j) {
        int d = table.values[static_cast<std::size_t>(j - 1)];
        if (next < jumps.indices.size() && jumps.indices[next] == j) {
            ++d;
            ++next;
        }
        table.values[static_cast<std::size_t>(j)] = d;
    }
    return table;
}

/// Positions where the table increases.
inline JumpingNumbers jumps_from_rank_table(const RankTable& table) {
    validate(table);
    JumpingNumbers out;
    for (std::size_t j = 1; j < table.values.size(); ++j)
        if (table.values[j] > table.values[j - 1]) out.indices.push_back(static_cast<int>(j));
    return out;
}

/// Context-aware variant: also checks d_n = k and the table length.
inline JumpingNumbers jumps_from_rank_table(const RankTable& table, const RectangleContext& ctx) {
    validate(table, ctx);
    return jumps_from_rank_table(table);
}

// ---------------------------------------------------------------------------
// complement and overlap

/// The rectangle complement rotated by 180 degrees: mu_i = (n-k) - lambda_{k+1-i}.
inline YoungDiagram complement(const YoungDiagram& d, const RectangleContext& ctx) {
    detail::require_fits(d, ctx);
    std::vector<int> parts(static_cast<std::size_t>(ctx.k));
    for (int i = 1; i <= ctx.k; ++i) parts[static_cast<std::size_t>(i - 1)] = ctx.width() - d.row(ctx.k + 1 - i);
    return YoungDiagram(std::move(parts));
}

/// First row i (1-based) with lambda_i + mu_{k+1-i} > n-k, if any.
inline std::optional<int> first_overlap_row(const YoungDiagram& lambda, const YoungDiagram& mu,
                                            const RectangleContext& ctx) {
    detail::require_fits(lambda, ctx, "first diagram");
    detail::require_fits(mu, ctx, "second diagram");
    for (int i = 1; i <= ctx.k; ++i)
        if (lambda.row(i) + mu.row(ctx.k + 1 - i) > ctx.width()) return i;
    return std::nullopt;
}

/// True when lambda and mu rotated into the southeast corner do not overlap,
/// i.e. lambda_i + mu_{k+1-i} <= n-k for every row. This is exactly the
/// condition for sigma_lambda cup sigma_mu to be nonzero.
inline bool overlap_test(const YoungDiagram& lambda, const YoungDiagram& mu, const RectangleContext& ctx) {
    return !first_overlap_row(lambda, mu, ctx).has_value();
}

/// ASCII picture of lambda ('#') and mu rotated into the southeast corner
/// ('o'); overlapping cells are 'X'.
inline std::string render_overlap(const YoungDiagram& lambda, const YoungDiagram& mu,
                                  const RectangleContext& ctx) {
    detail::require_fits(lambda, ctx, "first diagram");
    detail::require_fits(mu, ctx, "second diagram");
    std::string out;
    for (int i = 1; i <= ctx.k; ++i) {
        const int left = lambda.row(i);
        const int right = mu.row(ctx.k + 1 - i);
        for (int c = 0; c < ctx.width(); ++c) {
            const bool a = c < left;
            const bool b = c >= ctx.width() - right;
            out += a && b ? 'X' : a ? '#' : b ? 'o' : '.';
        }
        out += '\n';
    }
    return out;
}

/// Single diagram as rows of '#' padded with '.' to the rectangle width.
inline std::string render(const YoungDiagram& d, const RectangleContext& ctx) {
    detail::require_fits(d, ctx);
    std::string out;
    for (int i = 1; i <= ctx.k; ++i) {
        out.append(static_cast<std::size_t>(d.row(i)), '#');
        out.append(static_cast<std::size_t>(ctx.width() - d.row(i)), '.');
        out += '\n';
    }
    return out;
}

} // namespace schubert
