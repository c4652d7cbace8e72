#pragma once

// Brute-force ground truth over small prime fields. Every function here
// enumerates explicitly; nothing is derived from the combinatorial rules
// in young.hpp or ring.hpp beyond the diagram <-> jumping number dictionary.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "schubert/error.hpp"
#include "schubert/finite_field.hpp"
#include "schubert/young.hpp"

namespace schubert {

/// Enumeration limits. By default subspace enumeration is restricted to
/// q in {2,3,5}, n <= 6, and matrix enumeration to q^(nm) <= 2^20.
/// A relaxed budget drops the structural limits and caps every
/// enumeration by `max_items` alone.
struct Budget {
    std::uint64_t max_items = std::uint64_t{1} << 20;
    bool relaxed = false;

    static Budget unlimited_up_to(std::uint64_t items) { return Budget{items, true}; }

    /// Reads SCHUBERT_BUDGET (a positive item count); unset means the defaults.
    static Budget from_env() {
        const char* raw = std::getenv("SCHUBERT_BUDGET");
        if (raw == nullptr || *raw == '\0') return {};
        char* end = nullptr;
        const unsigned long long v = std::strtoull(raw, &end, 10);
        detail::require(end != nullptr && *end == '\0' && v > 0,
                        "SCHUBERT_BUDGET must be a positive integer (got '" + std::string(raw) + "')");
        return unlimited_up_to(v);
    }
};

namespace detail {

/// a * b, saturating at the maximum on overflow.
inline std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) noexcept {
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
    return a * b;
}

inline std::uint64_t sat_pow(std::uint64_t base, int exp) noexcept {
    std::uint64_t r = 1;
    for (int i = 0; i < exp; ++i) r = sat_mul(r, base);
    return r;
}

} // namespace detail

/// Number of k-dimensional subspaces of F_q^n, from the product formula.
inline std::uint64_t gaussian_binomial(int q, int n, int k) {
    if (k < 0 || k > n) return 0;
    // prod_{i<k} (q^(n-i) - 1) / (q^(i+1) - 1), evaluated incrementally so each
    // partial quotient is itself a Gaussian binomial and stays integral.
    std::uint64_t r = 1;
    for (int i = 0; i < k; ++i) {
        const std::uint64_t num = detail::sat_pow(static_cast<std::uint64_t>(q), n - i) - 1;
        const std::uint64_t den = detail::sat_pow(static_cast<std::uint64_t>(q), i + 1) - 1;
        const std::uint64_t prod = detail::sat_mul(r, num);
        if (prod == std::numeric_limits<std::uint64_t>::max())
            throw BudgetExceeded("Gaussian binomial overflows 64 bits");
        r = prod / den;
    }
    return r;
}

/// Number of full-rank k x m matrices over F_q: prod_{i<k} (q^m - q^i).
inline std::uint64_t full_rank_count(int q, int k, int m) {
    if (k > m) return 0;
    std::uint64_t r = 1;
    for (int i = 0; i < k; ++i)
        r = detail::sat_mul(r, detail::sat_pow(static_cast<std::uint64_t>(q), m) -
                                   detail::sat_pow(static_cast<std::uint64_t>(q), i));
    return r;
}

/// Number of n x m matrices of rank exactly r: choose the column space,
/// then a surjection onto it.
inline std::uint64_t rank_count_formula(int q, int n, int m, int r) {
    return detail::sat_mul(gaussian_binomial(q, n, r), full_rank_count(q, r, m));
}

namespace detail {

inline void require_field(int q) {
    require(is_prime(q), "field order q=" + std::to_string(q) + " must be prime");
}

inline void check_subspace_budget(int q, int n, int k, const Budget& budget) {
    require_field(q);
    require(n >= 1 && k >= 0 && k <= n, "subspace enumeration requires n >= 1 and 0 <= k <= n");
    if (!budget.relaxed) {
        if (q != 2 && q != 3 && q != 5)
            throw BudgetExceeded("subspace enumeration limited to q in {2,3,5} (got q=" + std::to_string(q) +
                                 "); set SCHUBERT_BUDGET to raise");
        if (n > 6)
            throw BudgetExceeded("subspace enumeration limited to n <= 6 (got n=" + std::to_string(n) +
                                 "); set SCHUBERT_BUDGET to raise");
        return;
    }
    const std::uint64_t count = gaussian_binomial(q, n, k);
    if (count > budget.max_items)
        throw BudgetExceeded("G_" + std::to_string(k) + "(F_" + std::to_string(q) + "^" + std::to_string(n) + ") has " +
                             std::to_string(count) + " points > budget " + std::to_string(budget.max_items));
}

inline void check_matrix_budget(int q, int n, int m, const Budget& budget) {
    require_field(q);
    require(n >= 1 && m >= 1, "matrix enumeration requires n, m >= 1");
    const std::uint64_t count = sat_pow(static_cast<std::uint64_t>(q), n * m);
    if (count > budget.max_items)
        throw BudgetExceeded("enumerating " + std::to_string(n) + "x" + std::to_string(m) + " matrices over F_" +
                             std::to_string(q) + " needs q^(nm) = " +
                             (count == std::numeric_limits<std::uint64_t>::max() ? std::string("> 2^64")
                                                                                 : std::to_string(count)) +
                             " items > budget " + std::to_string(budget.max_items));
}

/// Packs an RREF block into an integer: dim first, then entries base q.
/// Unique for fixed (q, n).
inline std::uint64_t pack_rref(int q, int dim, const int* rows, int n) {
    std::uint64_t key = static_cast<std::uint64_t>(dim);
    for (int i = 0; i < dim * n; ++i) key = key * static_cast<std::uint64_t>(q) + static_cast<std::uint64_t>(rows[i]);
    return key;
}

inline FqSubspace unpack_rref(int q, int n, std::uint64_t key, int max_dim) {
    // entries were appended after dim, so peel them off from the back
    for (int dim = 0; dim <= max_dim; ++dim) {
        std::uint64_t rest = key;
        std::vector<int> block(static_cast<std::size_t>(dim * n));
        for (int i = dim * n - 1; i >= 0; --i) {
            block[static_cast<std::size_t>(i)] = static_cast<int>(rest % static_cast<std::uint64_t>(q));
            rest /= static_cast<std::uint64_t>(q);
        }
        if (rest != static_cast<std::uint64_t>(dim)) continue;
        std::vector<int> pivots;
        for (int r = 0; r < dim; ++r) {
            int c = 0;
            while (c < n && block[static_cast<std::size_t>(r * n + c)] == 0) ++c;
            pivots.push_back(c);
        }
        return FqSubspace::from_rref(q, n, std::move(block), std::move(pivots));
    }
    throw std::logic_error("corrupt packed subspace key");
}

/// Depth-first walk over all n x m matrices (column by column), keeping the
/// RREF of the span of the columns chosen so far. `visit(dim, key)` is
/// called once per matrix with its rank and packed column space.
class MatrixSpanWalker {
public:
    MatrixSpanWalker(int q, int n, int m) : field_(q), q_(q), n_(n), m_(m) {
        const int max_dim = std::min(n, m);
        // key must fit in 64 bits: (max_dim+1) * q^(max_dim*n)
        const std::uint64_t bound = sat_mul(static_cast<std::uint64_t>(max_dim + 1),
                                            sat_pow(static_cast<std::uint64_t>(q), max_dim * n));
        if (bound == std::numeric_limits<std::uint64_t>::max())
            throw BudgetExceeded("column-space keys do not fit 64 bits for this shape");
        levels_.assign(static_cast<std::size_t>(m + 1), Level{});
        for (auto& lv : levels_) lv.rows.assign(static_cast<std::size_t>(n * n), 0);
        // every vector of F_q^n, base-q digits, most significant first
        const std::uint64_t total = sat_pow(static_cast<std::uint64_t>(q), n);
        for (std::uint64_t code = 0; code < total; ++code) {
            std::vector<int> v(static_cast<std::size_t>(n));
            std::uint64_t c = code;
            for (int i = n - 1; i >= 0; --i) {
                v[static_cast<std::size_t>(i)] = static_cast<int>(c % static_cast<std::uint64_t>(q));
                c /= static_cast<std::uint64_t>(q);
            }
            columns_.push_back(std::move(v));
        }
        scratch_.assign(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(n), 0));
    }

    template <class Visit>
    void run(Visit&& visit) {
        levels_[0].dim = 0;
        descend(0, visit);
    }

private:
    struct Level {
        int dim = 0;
        std::vector<int> rows;    // dim x n, RREF, sorted by pivot
        std::vector<int> pivots;
    };

    template <class Visit>
    void descend(int depth, Visit& visit) {
        const Level& cur = levels_[static_cast<std::size_t>(depth)];
        if (depth == m_) {
            visit(cur.dim, pack_rref(q_, cur.dim, cur.rows.data(), n_));
            return;
        }
        std::vector<int>& column = scratch_[static_cast<std::size_t>(depth)];
        for (std::size_t code = 0; code < columns_.size(); ++code) {
            column = columns_[code];
            extend(levels_[static_cast<std::size_t>(depth)], column, levels_[static_cast<std::size_t>(depth + 1)]);
            descend(depth + 1, visit);
        }
    }

    void extend(const Level& from, std::vector<int>& v, Level& to) const {
        const int n = n_;
        for (int r = 0; r < from.dim; ++r) {
            const int p = from.pivots[static_cast<std::size_t>(r)];
            const int f = v[static_cast<std::size_t>(p)];
            if (f == 0) continue;
            for (int j = p; j < n; ++j)
                v[static_cast<std::size_t>(j)] =
                    field_.sub(v[static_cast<std::size_t>(j)], field_.mul(f, from.rows[static_cast<std::size_t>(r * n + j)]));
        }
        int lead = 0;
        while (lead < n && v[static_cast<std::size_t>(lead)] == 0) ++lead;
        to.dim = from.dim;
        to.pivots = from.pivots;
        std::copy(from.rows.begin(), from.rows.begin() + from.dim * n, to.rows.begin());
        if (lead == n) return;

        const int inv = field_.inv(v[static_cast<std::size_t>(lead)]);
        for (int j = lead; j < n; ++j) v[static_cast<std::size_t>(j)] = field_.mul(v[static_cast<std::size_t>(j)], inv);
        for (int r = 0; r < from.dim; ++r) {
            const int f = to.rows[static_cast<std::size_t>(r * n + lead)];
            if (f == 0) continue;
            for (int j = lead; j < n; ++j)
                to.rows[static_cast<std::size_t>(r * n + j)] = field_.sub(
                    to.rows[static_cast<std::size_t>(r * n + j)], field_.mul(f, v[static_cast<std::size_t>(j)]));
        }
        // insert the new row keeping pivots sorted
        int pos = 0;
        while (pos < from.dim && to.pivots[static_cast<std::size_t>(pos)] < lead) ++pos;
        for (int r = from.dim; r > pos; --r)
            std::copy_n(to.rows.begin() + (r - 1) * n, n, to.rows.begin() + r * n);
        std::copy(v.begin(), v.end(), to.rows.begin() + pos * n);
        to.pivots.insert(to.pivots.begin() + pos, lead);
        to.dim = from.dim + 1;
    }

    PrimeField field_;
    int q_, n_, m_;
    std::vector<Level> levels_;
    std::vector<std::vector<int>> columns_;
    std::vector<std::vector<int>> scratch_;
};

} // namespace detail

/// Every k-dimensional subspace of F_q^n exactly once, as RREF bases, in a
/// fixed order (pivot sets lexicographically, then free entries).
inline std::vector<FqSubspace> enumerate_subspaces(int q, int n, int k, const Budget& budget = Budget::from_env()) {
    detail::check_subspace_budget(q, n, k, budget);
    std::vector<FqSubspace> out;
    out.reserve(static_cast<std::size_t>(gaussian_binomial(q, n, k)));

    std::vector<int> pivots(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) pivots[static_cast<std::size_t>(i)] = i;
    while (true) {
        // free slots: row r, columns after its pivot that are not pivots
        std::vector<std::size_t> free_slots;
        std::vector<int> block(static_cast<std::size_t>(k * n), 0);
        for (int r = 0; r < k; ++r) {
            const int p = pivots[static_cast<std::size_t>(r)];
            block[static_cast<std::size_t>(r * n + p)] = 1;
            for (int c = p + 1; c < n; ++c)
                if (!std::binary_search(pivots.begin(), pivots.end(), c))
                    free_slots.push_back(static_cast<std::size_t>(r * n + c));
        }
        std::vector<int> digits(free_slots.size(), 0);
        while (true) {
            for (std::size_t s = 0; s < free_slots.size(); ++s) block[free_slots[s]] = digits[s];
            out.push_back(FqSubspace::from_rref(q, n, block, pivots));
            std::size_t s = 0;
            while (s < digits.size() && ++digits[s] == q) digits[s++] = 0;
            if (s == digits.size()) break;
        }
        // next pivot combination
        int i = k - 1;
        while (i >= 0 && pivots[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++pivots[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) pivots[static_cast<std::size_t>(j)] = pivots[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

/// d_j = dim(V cap F_j), j = 0..n, by elimination.
inline RankTable rank_table_of(const FqSubspace& v, const FqFlag& flag) {
    detail::require(v.ambient_dim() == flag.ambient_dim() && v.field_order() == flag.field_order(),
                    "subspace and flag live in different ambient spaces");
    RankTable t;
    for (int j = 0; j <= flag.ambient_dim(); ++j) t.values.push_back(intersection_dim(v, flag[j]));
    return t;
}

/// Diagram of the Schubert cell containing V.
inline YoungDiagram diagram_of(const FqSubspace& v, const FqFlag& flag) {
    const RectangleContext ctx(v.dim(), v.ambient_dim());
    return diagram_from_jumps(jumps_from_rank_table(rank_table_of(v, flag), ctx), ctx);
}

/// dim(V cap F_{j_i}) >= i for every i, with j the jumping numbers of lambda.
inline bool satisfies_schubert_conditions(const RankTable& table, const YoungDiagram& lambda,
                                          const RectangleContext& ctx) {
    const auto jumps = jumps_from_diagram(lambda, ctx);
    for (int i = 1; i <= ctx.k; ++i)
        if (table.values[static_cast<std::size_t>(jumps.indices[static_cast<std::size_t>(i - 1)])] < i) return false;
    return true;
}

using CellCensus = std::map<YoungDiagram, std::uint64_t, GradedOrder>;

/// Number of points of G_k(F_q^n) in each Schubert cell for the given flag.
inline CellCensus schubert_cell_census(int q, int n, int k, const FqFlag& flag,
                                       const Budget& budget = Budget::from_env()) {
    detail::require(k >= 1 && k < n, "cell census requires 1 <= k < n");
    detail::require(flag.ambient_dim() == n && flag.field_order() == q, "flag does not match (q, n)");
    CellCensus census;
    const RectangleContext ctx(k, n);
    for (const auto& d : enumerate_diagrams(ctx)) census[d] = 0;
    for (const auto& v : enumerate_subspaces(q, n, k, budget)) ++census[diagram_of(v, flag)];
    return census;
}

inline CellCensus schubert_cell_census(int q, int n, int k, const Budget& budget = Budget::from_env()) {
    detail::check_subspace_budget(q, n, k, budget);
    return schubert_cell_census(q, n, k, FqFlag::standard(q, n), budget);
}

/// Points of the Schubert variety of lambda relative to `flag`.
inline std::vector<FqSubspace> schubert_variety_members(const YoungDiagram& lambda, const FqFlag& flag, int q, int n,
                                                        int k, const Budget& budget = Budget::from_env()) {
    const RectangleContext ctx(k, n);
    detail::require_fits(lambda, ctx);
    detail::require(flag.ambient_dim() == n && flag.field_order() == q, "flag does not match (q, n)");
    std::vector<FqSubspace> out;
    for (auto& v : enumerate_subspaces(q, n, k, budget))
        if (satisfies_schubert_conditions(rank_table_of(v, flag), lambda, ctx)) out.push_back(std::move(v));
    return out;
}

/// Points of the intersection of the Schubert variety of lambda for flag
/// `f` and that of mu for flag `g`.
inline std::vector<FqSubspace> richardson_members(const YoungDiagram& lambda, const FqFlag& f, const YoungDiagram& mu,
                                                  const FqFlag& g, int q, int n, int k,
                                                  const Budget& budget = Budget::from_env()) {
    const RectangleContext ctx(k, n);
    detail::require_fits(lambda, ctx, "first diagram");
    detail::require_fits(mu, ctx, "second diagram");
    std::vector<FqSubspace> out;
    for (auto& v : enumerate_subspaces(q, n, k, budget))
        if (satisfies_schubert_conditions(rank_table_of(v, f), lambda, ctx) &&
            satisfies_schubert_conditions(rank_table_of(v, g), mu, ctx))
            out.push_back(std::move(v));
    return out;
}

/// Standard flag for lambda, opposite flag for mu.
inline std::vector<FqSubspace> richardson_members(const YoungDiagram& lambda, const YoungDiagram& mu, int q, int n,
                                                  int k, const Budget& budget = Budget::from_env()) {
    detail::check_subspace_budget(q, n, k, budget);
    return richardson_members(lambda, FqFlag::standard(q, n), mu, FqFlag::opposite(q, n), q, n, k, budget);
}

inline bool richardson_nonempty(const YoungDiagram& lambda, const YoungDiagram& mu, int q, int n, int k,
                                const Budget& budget = Budget::from_env()) {
    return !richardson_members(lambda, mu, q, n, k, budget).empty();
}

/// col A.
inline FqSubspace column_space(const FqMatrix& a) { return a.column_space(); }

/// Number of n x m matrices over F_q of each rank, by exhaustive enumeration.
inline std::map<int, std::uint64_t> rank_census(int q, int n, int m, const Budget& budget = Budget::from_env()) {
    detail::check_matrix_budget(q, n, m, budget);
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(std::min(n, m) + 1), 0);
    detail::MatrixSpanWalker(q, n, m).run([&](int dim, std::uint64_t) { ++counts[static_cast<std::size_t>(dim)]; });
    std::map<int, std::uint64_t> out;
    for (std::size_t r = 0; r < counts.size(); ++r) out[static_cast<int>(r)] = counts[r];
    return out;
}

/// All n x m matrices over F_q grouped by column space.
inline std::map<FqSubspace, std::uint64_t> column_space_census(int q, int n, int m,
                                                               const Budget& budget = Budget::from_env()) {
    detail::check_matrix_budget(q, n, m, budget);
    std::unordered_map<std::uint64_t, std::uint64_t> by_key;
    detail::MatrixSpanWalker(q, n, m).run([&](int, std::uint64_t key) { ++by_key[key]; });
    std::map<FqSubspace, std::uint64_t> out;
    for (const auto& [key, count] : by_key) out.emplace(detail::unpack_rref(q, n, key, std::min(n, m)), count);
    return out;
}

/// Number of n x m matrices A with rank A = dim V and col A = V, by
/// exhaustive enumeration. This is the fiber of A -> col A over V.
inline std::uint64_t fiber_census(const FqSubspace& v, int q, int n, int m, const Budget& budget = Budget::from_env()) {
    detail::require(v.field_order() == q && v.ambient_dim() == n, "subspace does not live in F_q^n");
    detail::check_matrix_budget(q, n, m, budget);
    const std::uint64_t target = detail::pack_rref(q, v.dim(), v.rref().data(), n);
    std::uint64_t count = 0;
    if (v.dim() > std::min(n, m)) return 0;
    detail::MatrixSpanWalker(q, n, m).run([&](int dim, std::uint64_t key) {
        if (dim == v.dim() && key == target) ++count;
    });
    return count;
}

} // namespace schubert
