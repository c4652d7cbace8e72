#include <catch_amalgamated.hpp>

#include <map>
#include <random>
#include <thread>
#include <vector>

#include "schubert/ring.hpp"
#include "schubert/verify.hpp"

using namespace schubert;

namespace {

// ---------------------------------------------------------------------------
// Independent oracle: expand s_lambda * s_mu as polynomials in N variables
// (Schur polynomials from semistandard tableaux) and peel off Schur
// functions by leading monomial. Shares no code with the LR tableau counter.

using Monomial = std::vector<int>;
using Poly = std::map<Monomial, long long>;

void ssyt_fill(const std::vector<int>& shape, int vars, std::vector<std::vector<int>>& t, std::size_t r, int c,
               Poly& out) {
    if (r == shape.size()) {
        Monomial m(static_cast<std::size_t>(vars), 0);
        for (const auto& row : t)
            for (int v : row) ++m[static_cast<std::size_t>(v - 1)];
        ++out[m];
        return;
    }
    if (c == shape[r]) {
        ssyt_fill(shape, vars, t, r + 1, 0, out);
        return;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, t[r][static_cast<std::size_t>(c - 1)]);
    if (r > 0) lo = std::max(lo, t[r - 1][static_cast<std::size_t>(c)] + 1);
    for (int v = lo; v <= vars; ++v) {
        t[r][static_cast<std::size_t>(c)] = v;
        ssyt_fill(shape, vars, t, r, c + 1, out);
    }
}

Poly schur_poly(const YoungDiagram& d, int vars) {
    Poly out;
    if (d.length() > vars) return out;
    std::vector<std::vector<int>> t;
    for (int p : d.parts()) t.emplace_back(static_cast<std::size_t>(p), 0);
    ssyt_fill(d.parts(), vars, t, 0, 0, out);
    return out;
}

Poly multiply(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            Monomial m(ma.size());
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
            out[m] += ca * cb;
        }
    return out;
}

std::map<YoungDiagram, long long> schur_expand(Poly p, int vars) {
    std::map<YoungDiagram, long long> out;
    while (true) {
        auto it = p.rbegin();
        while (it != p.rend() && it->second == 0) ++it;
        if (it == p.rend()) break;
        const Monomial lead = it->first;  // lexicographically largest: a partition
        const long long c = it->second;
        const YoungDiagram nu(lead);
        out[nu] += c;
        for (const auto& [m, cm] : schur_poly(nu, vars)) p[m] -= c * cm;
    }
    return out;
}

std::vector<YoungDiagram> partitions_of(int size) {
    std::vector<YoungDiagram> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int left, int max_part) -> void {
        if (left == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(left, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, left - p, p);
            cur.pop_back();
        }
    };
    rec(rec, size, size);
    return out;
}

CohomologyClass cls(const RectangleContext& ctx, std::initializer_list<std::pair<YoungDiagram, int>> terms) {
    CohomologyClass out(ctx);
    for (const auto& [d, c] : terms) out.add(d, c);
    return out;
}

} // namespace

TEST_CASE("LR coefficient examples") {
    CHECK(lr_coefficient({2}, {2}, {2, 2}) == 1);
    CHECK(lr_coefficient({1, 1}, {1, 1}, {1, 1, 1, 1}) == 1);
    CHECK(lr_coefficient({2}, {1, 1}, {2, 2}) == 0);
    CHECK(lr_coefficient({3, 2, 1}, {}, {3, 2, 1}) == 1);
    CHECK(lr_coefficient({}, {}, {}) == 1);
    // degenerate inputs
    CHECK(lr_coefficient({2}, {1}, {2}) == 0);
    CHECK(lr_coefficient({3}, {1}, {2, 2}) == 0);
    // classical multiplicity two: c^{(3,2,1)}_{(2,1),(2,1)}
    CHECK(lr_coefficient({2, 1}, {2, 1}, {3, 2, 1}) == 2);
}

TEST_CASE("LR coefficients agree with Schur polynomial expansion") {
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; b <= 4 && a + b <= 7; ++b)
            for (const auto& lambda : partitions_of(a))
                for (const auto& mu : partitions_of(b)) {
                    const int vars = std::max(1, lambda.length() + mu.length());
                    const auto expected = schur_expand(multiply(schur_poly(lambda, vars), schur_poly(mu, vars)), vars);
                    for (const auto& nu : partitions_of(a + b)) {
                        const auto it = expected.find(nu);
                        const long long want = it == expected.end() ? 0 : it->second;
                        INFO(to_string(lambda) << " * " << to_string(mu) << " -> " << to_string(nu));
                        CHECK(lr_coefficient(lambda, mu, nu) == want);
                    }
                }
}

TEST_CASE("products in A*(2,4)") {
    const RectangleContext ctx(2, 4);
    CHECK(cup({2}, {2}, ctx) == CohomologyClass::basis({2, 2}, ctx));
    CHECK(cup({1, 1}, {1, 1}, ctx) == CohomologyClass::basis({2, 2}, ctx));
    CHECK(cup({2}, {1, 1}, ctx).is_zero());
    CHECK(cup({1}, {1}, ctx) == cls(ctx, {{{2}, 1}, {{1, 1}, 1}}));
}

TEST_CASE("products in A*(4,8)") {
    const RectangleContext ctx(4, 8);
    CHECK(cup({2}, {2}, ctx) == cls(ctx, {{{2, 2}, 1}, {{4}, 1}, {{3, 1}, 1}}));
    CHECK(cup({1, 1}, {1, 1}, ctx) == cls(ctx, {{{2, 2}, 1}, {{2, 1, 1}, 1}, {{1, 1, 1, 1}, 1}}));
    CHECK(cup({2}, {1, 1}, ctx) == cls(ctx, {{{3, 1}, 1}, {{2, 1, 1}, 1}}));
    CHECK(to_string(cup({2}, {1, 1}, ctx)) == "[3,1] + [2,1,1]");
}

TEST_CASE("truncation: products in a smaller rectangle are the larger ones with non-fitting terms dropped") {
    const std::vector<RectangleContext> rects{{1, 3}, {2, 4}, {2, 5}, {3, 5}, {2, 6}, {3, 6}};
    const RectangleContext big(4, 9);
    for (const auto& small : rects) {
        for (const auto& a : enumerate_diagrams(small))
            for (const auto& b : enumerate_diagrams(small)) {
                CohomologyClass truncated(small);
                const auto full = cup(a, b, big);
                for (const auto& [nu, c] : full.terms())
                    if (fits_in(nu, small)) truncated.add(nu, c);
                CHECK(truncated == cup(a, b, small));
            }
    }
}

TEST_CASE("unit, context mismatch and bilinearity") {
    const RectangleContext ctx(3, 6);
    const auto x = cls(ctx, {{{2, 1}, 3}, {{1}, -2}, {{}, 5}});
    CHECK(cup(CohomologyClass::unit(ctx), x) == x);
    CHECK(cup(x, CohomologyClass::unit(ctx)) == x);
    CHECK_THROWS_AS(cup(x, CohomologyClass::unit(RectangleContext(2, 6))), ValidationError);
    CHECK_THROWS_AS(cup(YoungDiagram{4}, YoungDiagram{1}, ctx), ValidationError);

    const auto y = cls(ctx, {{{1, 1}, 1}, {{2}, 4}});
    const auto z = cls(ctx, {{{1}, 7}});
    CHECK(cup(x + y, z) == cup(x, z) + cup(y, z));
    CHECK(cup(BigInt(3) * x, z) == BigInt(3) * cup(x, z));
}

TEST_CASE("class arithmetic keeps no zero terms") {
    const RectangleContext ctx(2, 4);
    auto x = cls(ctx, {{{1}, 2}});
    x.add({1}, -2);
    CHECK(x.is_zero());
    CHECK(x.terms().empty());
    CHECK_THROWS_AS(x.add({3}, 1), ValidationError);
}

TEST_CASE("commutativity, grading and positivity for k(n-k) <= 12") {
    for (const auto& ctx : rectangles_up_to(12)) {
        const auto diagrams = enumerate_diagrams(ctx);
        for (const auto& a : diagrams)
            for (const auto& b : diagrams) {
                const auto ab = cup(a, b, ctx);
                CHECK(ab == cup(b, a, ctx));
                for (const auto& [nu, c] : ab.terms()) {
                    CHECK(nu.area() == a.area() + b.area());
                    CHECK(c > 0);
                }
            }
    }
}

TEST_CASE("associativity on random triples, k(n-k) <= 9") {
    const auto outcome = verify_associativity(2024, 400, 9);
    INFO(outcome.summary);
    CHECK(outcome.passed);
}

TEST_CASE("Pieri rule for a single box") {
    for (const auto& ctx : rectangles_up_to(12))
        for (const auto& a : enumerate_diagrams(ctx)) {
            CohomologyClass expected(ctx);
            auto parts = a.padded(ctx.k);
            for (std::size_t i = 0; i < parts.size(); ++i) {
                if (parts[i] + 1 > ctx.width()) continue;
                if (i > 0 && parts[i] + 1 > parts[i - 1]) continue;
                auto grown = parts;
                ++grown[i];
                expected.add(YoungDiagram(grown), 1);
            }
            CHECK(cup(a, {1}, ctx) == expected);
        }
}

TEST_CASE("cup_nonzero matches the overlap test exhaustively for k(n-k) <= 12") {
    CHECK(cup_nonzero({5, 3, 2, 2, 1}, {5, 5, 4, 2}, RectangleContext(5, 12)));
    CHECK_FALSE(cup_nonzero({2}, {1, 1}, RectangleContext(2, 4)));
    const auto outcome = verify_lemma(12);
    INFO(outcome.summary);
    CHECK(outcome.passed);
    CHECK(outcome.checks > 7000);
}

TEST_CASE("duality coefficient") {
    const RectangleContext ctx(2, 4);
    // complement of (2) in 2x2 is (2,0) = (2)
    CHECK(duality_coefficient({2}, {2}, ctx) == 1);
    CHECK(lr_coefficient({2}, {2}, {2, 2}) == 1);
    CHECK(duality_coefficient({2}, {1, 1}, ctx) == 0);
    CHECK(duality_coefficient({2, 2}, {}, ctx) == 1);
    CHECK(duality_coefficient({1}, {1}, ctx) == 0);  // degree mismatch

    for (const auto& r : rectangles_up_to(12))
        for (const auto& a : enumerate_diagrams(r))
            for (const auto& b : enumerate_diagrams(r, r.area() - a.area()))
                CHECK(duality_coefficient(a, b, r) == (b == complement(a, r) ? 1 : 0));
}

TEST_CASE("text form round trips") {
    const RectangleContext ctx(3, 7);
    const auto diagrams = enumerate_diagrams(ctx);
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 300; ++trial) {
        CohomologyClass x(ctx);
        const int terms = std::uniform_int_distribution<int>(0, 5)(rng);
        for (int t = 0; t < terms; ++t) {
            BigInt c = std::uniform_int_distribution<long long>(-1000, 1000)(rng);
            if (trial % 10 == 0) c *= BigInt("123456789012345678901234567890");
            x.add(diagrams[std::uniform_int_distribution<std::size_t>(0, diagrams.size() - 1)(rng)], c);
        }
        CHECK(parse_class(to_string(x), ctx) == x);
    }
    CHECK(to_string(CohomologyClass(ctx)) == "0");
    CHECK(to_string(cls(ctx, {{{2, 1}, 3}, {{1, 1, 1}, 1}})) == "3*[2,1] + [1,1,1]");
    CHECK(parse_class("3*[2,1] + 1*[1,1,1]", ctx) == cls(ctx, {{{2, 1}, 3}, {{1, 1, 1}, 1}}));
    CHECK(parse_class("-[] - 2*[1]", ctx) == cls(ctx, {{{}, -1}, {{1}, -2}}));
    CHECK_THROWS_AS(parse_class("3*[2,1", ctx), ValidationError);
    CHECK_THROWS_AS(parse_class("[2,1] [1]", ctx), ValidationError);
    CHECK_THROWS_AS(parse_class("[5]", ctx), ValidationError);
}

TEST_CASE("memoized LR coefficients are consistent across threads") {
    detail::lr_cache().clear();
    const RectangleContext ctx(3, 7);
    const auto diagrams = enumerate_diagrams(ctx);
    std::vector<std::vector<CohomologyClass>> results(4);
    std::vector<std::thread> workers;
    for (std::size_t w = 0; w < results.size(); ++w)
        workers.emplace_back([&, w] {
            for (const auto& a : diagrams)
                for (const auto& b : diagrams) results[w].push_back(cup(a, b, ctx));
        });
    for (auto& t : workers) t.join();
    for (std::size_t w = 1; w < results.size(); ++w) CHECK(results[w] == results[0]);
    CHECK(detail::lr_cache().size() > 0);
}
