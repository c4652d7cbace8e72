#pragma once

// Cross-validation sweeps: each suite checks one combinatorial statement
// against exhaustive enumeration and reports the first counterexamples.

#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "schubert/bounds.hpp"
#include "schubert/oracle.hpp"
#include "schubert/ring.hpp"
#include "schubert/young.hpp"

namespace schubert {

struct VerifyOutcome {
    explicit VerifyOutcome(std::string name) : suite(std::move(name)) {}

    std::string suite;
    bool passed = true;
    std::uint64_t checks = 0;
    std::string summary;
    std::vector<std::string> counterexamples;

    void fail(std::string what) {
        passed = false;
        if (counterexamples.size() < 10) counterexamples.push_back(std::move(what));
    }
};

/// Every rectangle (k, n) with 1 <= k < n and k(n-k) <= max_area.
inline std::vector<RectangleContext> rectangles_up_to(int max_area) {
    std::vector<RectangleContext> out;
    for (int n = 2; n <= max_area + 1; ++n)
        for (int k = 1; k < n; ++k)
            if (k * (n - k) <= max_area) out.emplace_back(k, n);
    return out;
}

/// cup_nonzero == overlap_test for every pair of diagrams in every
/// rectangle of area <= max_area.
inline VerifyOutcome verify_lemma(int max_area) {
    detail::require(max_area >= 1, "max area must be positive");
    VerifyOutcome out("lemma");
    const auto rects = rectangles_up_to(max_area);
    for (const auto& ctx : rects) {
        const auto diagrams = enumerate_diagrams(ctx);
        for (const auto& a : diagrams)
            for (const auto& b : diagrams) {
                ++out.checks;
                const bool product = cup_nonzero(a, b, ctx);
                const bool fits = overlap_test(a, b, ctx);
                if (product != fits)
                    out.fail("(k=" + std::to_string(ctx.k) + ", n=" + std::to_string(ctx.n) + ") " + to_string(a) +
                             " vs " + to_string(b) + ": cup_nonzero=" + (product ? "true" : "false") +
                             ", overlap_test=" + (fits ? "true" : "false"));
            }
    }
    std::ostringstream s;
    s << (out.passed ? "PASS" : "FAIL") << ": cup_nonzero == overlap_test on all pairs (" << rects.size()
      << " rectangles, " << out.checks << " pairs, k(n-k) <= " << max_area << ")";
    out.summary = s.str();
    return out;
}

/// Cell sizes q^(k(n-k)-|lambda|) and the Gaussian-binomial total.
inline VerifyOutcome verify_cells(int q, int n, int k, const Budget& budget = Budget::from_env()) {
    VerifyOutcome out("cells");
    const RectangleContext ctx(k, n);
    const auto census = schubert_cell_census(q, n, k, budget);
    std::uint64_t total = 0;
    std::string counts;
    for (const auto& [d, count] : census) {
        ++out.checks;
        const std::uint64_t expected = detail::sat_pow(static_cast<std::uint64_t>(q), ctx.area() - d.area());
        if (count != expected)
            out.fail("cell " + to_string(d) + ": " + std::to_string(count) + " points, expected q^" +
                     std::to_string(ctx.area() - d.area()) + " = " + std::to_string(expected));
        total += count;
        counts += (counts.empty() ? "" : ",") + std::to_string(count);
    }
    ++out.checks;
    const std::uint64_t g = gaussian_binomial(q, n, k);
    if (total != g) out.fail("total " + std::to_string(total) + " != Gaussian binomial " + std::to_string(g));
    out.summary = std::string(out.passed ? "PASS" : "FAIL") + ": " + std::to_string(census.size()) + " cells, counts " +
                  counts + ", total " + std::to_string(total);
    return out;
}

/// Rank census against the closed-form count and q^(nm).
inline VerifyOutcome verify_ranks(int q, int n, int m, const Budget& budget = Budget::from_env()) {
    VerifyOutcome out("ranks");
    const auto census = rank_census(q, n, m, budget);
    std::uint64_t total = 0;
    std::string body;
    for (const auto& [r, count] : census) {
        ++out.checks;
        const std::uint64_t expected = rank_count_formula(q, n, m, r);
        if (count != expected)
            out.fail("rank " + std::to_string(r) + ": " + std::to_string(count) + " matrices, closed form gives " +
                     std::to_string(expected));
        total += count;
        body += (body.empty() ? "" : ", ") + std::to_string(r) + ":" + std::to_string(count);
    }
    ++out.checks;
    if (total != detail::sat_pow(static_cast<std::uint64_t>(q), n * m))
        out.fail("total " + std::to_string(total) + " != q^(nm)");
    out.summary = std::string(out.passed ? "PASS" : "FAIL") + ": {" + body + "}";
    return out;
}

/// Fibers of A -> col A: constant over each Grassmannian, equal to the
/// number of full-rank k x m matrices, and (#G_k) * fiber = #(rank k).
inline VerifyOutcome verify_fibers(int q, int n, int m, const Budget& budget = Budget::from_env()) {
    VerifyOutcome out("fibers");
    const auto groups = column_space_census(q, n, m, budget);
    const auto ranks = rank_census(q, n, m, budget);
    const int top = std::min(n, m);
    std::vector<std::uint64_t> bases(static_cast<std::size_t>(top + 1), 0);
    std::string body;
    for (int k = 0; k <= top; ++k) {
        const std::uint64_t expected_fiber = full_rank_count(q, k, m);
        for (const auto& [v, count] : groups) {
            if (v.dim() != k) continue;
            ++out.checks;
            ++bases[static_cast<std::size_t>(k)];
            if (count != expected_fiber)
                out.fail("fiber over a " + std::to_string(k) + "-dim subspace has " + std::to_string(count) +
                         " matrices, expected " + std::to_string(expected_fiber));
        }
        out.checks += 2;
        const std::uint64_t nbases = bases[static_cast<std::size_t>(k)];
        if (nbases != gaussian_binomial(q, n, k))
            out.fail("saw " + std::to_string(nbases) + " column spaces of dim " + std::to_string(k) + ", expected " +
                     std::to_string(gaussian_binomial(q, n, k)));
        if (nbases * expected_fiber != ranks.at(k))
            out.fail("product law fails at k=" + std::to_string(k) + ": " + std::to_string(nbases) + " * " +
                     std::to_string(expected_fiber) + " != " + std::to_string(ranks.at(k)));
        body += (body.empty() ? "" : ", ") + std::string("k=") + std::to_string(k) + ": " + std::to_string(nbases) +
                " x " + std::to_string(expected_fiber) + " = " + std::to_string(ranks.at(k));
    }
    out.summary = std::string(out.passed ? "PASS" : "FAIL") + ": " + body;
    return out;
}

/// Richardson nonemptiness for (standard, opposite) flags against the
/// overlap test, for every diagram pair; complements meet in one point.
inline VerifyOutcome verify_richardson(int q, const std::vector<RectangleContext>& rects,
                                       const Budget& budget = Budget::from_env()) {
    VerifyOutcome out("richardson");
    std::string where;
    for (const auto& ctx : rects) {
        const auto subspaces = enumerate_subspaces(q, ctx.n, ctx.k, budget);
        const auto std_flag = FqFlag::standard(q, ctx.n);
        const auto opp_flag = FqFlag::opposite(q, ctx.n);
        std::vector<std::pair<RankTable, RankTable>> tables;
        tables.reserve(subspaces.size());
        for (const auto& v : subspaces) tables.emplace_back(rank_table_of(v, std_flag), rank_table_of(v, opp_flag));

        const auto diagrams = enumerate_diagrams(ctx);
        for (const auto& a : diagrams)
            for (const auto& b : diagrams) {
                ++out.checks;
                std::uint64_t members = 0;
                for (const auto& [ts, to] : tables)
                    if (satisfies_schubert_conditions(ts, a, ctx) && satisfies_schubert_conditions(to, b, ctx)) ++members;
                const std::string label = "(k=" + std::to_string(ctx.k) + ", n=" + std::to_string(ctx.n) + ") " +
                                          to_string(a) + " vs " + to_string(b);
                if ((members > 0) != overlap_test(a, b, ctx))
                    out.fail(label + ": intersection has " + std::to_string(members) + " points but overlap_test=" +
                             (overlap_test(a, b, ctx) ? "true" : "false"));
                if (b == complement(a, ctx) && members != 1)
                    out.fail(label + ": complementary pair should meet in exactly one point, got " +
                             std::to_string(members));
            }
        where += (where.empty() ? "" : ",") + std::string("(") + std::to_string(ctx.k) + "," + std::to_string(ctx.n) + ")";
    }
    out.summary = std::string(out.passed ? "PASS" : "FAIL") + ": richardson_nonempty == overlap_test on " +
                  std::to_string(out.checks) + " pairs over " + where + " at q=" + std::to_string(q);
    return out;
}

/// Randomized associativity and commutativity of the truncated product.
inline VerifyOutcome verify_associativity(std::uint64_t seed, int samples, int max_area) {
    detail::require(samples >= 0, "sample count must be nonnegative");
    VerifyOutcome out("associativity");
    const auto rects = rectangles_up_to(max_area);
    std::mt19937_64 rng(seed);
    for (int s = 0; s < samples; ++s) {
        const auto& ctx = rects[std::uniform_int_distribution<std::size_t>(0, rects.size() - 1)(rng)];
        const auto diagrams = enumerate_diagrams(ctx);
        std::uniform_int_distribution<std::size_t> pick(0, diagrams.size() - 1);
        const auto& a = diagrams[pick(rng)];
        const auto& b = diagrams[pick(rng)];
        const auto& c = diagrams[pick(rng)];
        const auto sa = CohomologyClass::basis(a, ctx);
        const auto sb = CohomologyClass::basis(b, ctx);
        const auto sc = CohomologyClass::basis(c, ctx);
        out.checks += 2;
        if (cup(cup(sa, sb), sc) != cup(sa, cup(sb, sc)))
            out.fail("associativity fails for " + to_string(a) + ", " + to_string(b) + ", " + to_string(c) +
                     " in (k=" + std::to_string(ctx.k) + ", n=" + std::to_string(ctx.n) + ")");
        if (cup(sa, sb) != cup(sb, sa))
            out.fail("commutativity fails for " + to_string(a) + ", " + to_string(b));
    }
    out.summary = std::string(out.passed ? "PASS" : "FAIL") + ": " + std::to_string(samples) +
                  " random triples, seed " + std::to_string(seed) + ", k(n-k) <= " + std::to_string(max_area);
    return out;
}

} // namespace schubert
