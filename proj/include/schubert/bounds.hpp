#pragma once

// Dimension and codimension formulas for rank varieties, Grassmannians and
// Schubert-condition avoidance, plus the reduction function f(k).

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "schubert/error.hpp"
#include "schubert/young.hpp"

namespace schubert {

/// Shape of Mat_{n x m}: n rows, m columns.
struct MatrixSpaceShape {
    int n = 1;
    int m = 1;

    MatrixSpaceShape() = default;
    MatrixSpaceShape(int rows, int cols) : n(rows), m(cols) {
        detail::require(n >= 1 && m >= 1, "matrix shape requires n >= 1 and m >= 1");
    }
};

struct BoundReport {
    std::string formula;                 // e.g. "m+1-e"
    std::string source;                  // which result produced it
    std::map<std::string, std::int64_t> inputs;
    std::int64_t value = 0;
    // value <= 0: the bound carries no information
    bool vacuous = false;
    // e = 0 in the column-space bound: the hypothesis can never hold
    bool vacuously_true = false;
};

inline std::int64_t grassmannian_dim(const RectangleContext& ctx) {
    return static_cast<std::int64_t>(ctx.k) * (ctx.n - ctx.k);
}

/// codim of R_k = {rank <= k} in Mat_{n x m}.
inline std::int64_t rank_variety_codim(const MatrixSpaceShape& shape, int k) {
    detail::require(k >= 0 && k <= std::min(shape.m, shape.n),
                    "rank bound k=" + std::to_string(k) + " outside [0, min(m,n)]");
    return static_cast<std::int64_t>(shape.m - k) * (shape.n - k);
}

/// dim R_k = nm - (m-k)(n-k); the same for the rank-exactly-k stratum.
inline std::int64_t rank_variety_dim(const MatrixSpaceShape& shape, int k) {
    return static_cast<std::int64_t>(shape.n) * shape.m - rank_variety_codim(shape, k);
}

/// Lower bound k+1-e on the codimension of a closed Y in G_k(C^n) missing S_k(E), dim E = e.
inline BoundReport schubert_bound(int e, const RectangleContext& ctx) {
    detail::require(e >= 1 && e <= ctx.k, "Schubert bound requires 1 <= e <= k (got e=" + std::to_string(e) +
                                              ", k=" + std::to_string(ctx.k) + ")");
    BoundReport r;
    r.formula = "k+1-e";
    r.source = "Schubert-avoidance codimension bound";
    r.inputs = {{"e", e}, {"k", ctx.k}, {"n", ctx.n}};
    r.value = ctx.k + 1 - e;
    r.vacuous = r.value <= 0;
    return r;
}

/// Lower bound m+1-e on the codimension of a column-invariant closed X
/// whose column-space closure misses an e-dimensional E.
inline BoundReport main_bound(const MatrixSpaceShape& shape, int e) {
    detail::require(e >= 0 && e <= shape.n, "column-space bound requires 0 <= e <= n (got e=" +
                                                std::to_string(e) + ", n=" + std::to_string(shape.n) + ")");
    BoundReport r;
    r.formula = "m+1-e";
    r.source = "column-space avoidance codimension bound";
    r.inputs = {{"n", shape.n}, {"m", shape.m}, {"e", e}};
    r.value = static_cast<std::int64_t>(shape.m) + 1 - e;
    r.vacuous = r.value <= 0;
    r.vacuously_true = e == 0;
    return r;
}

/// Codimension of R_k as a BoundReport.
inline BoundReport rank_bound(const MatrixSpaceShape& shape, int k) {
    BoundReport r;
    r.formula = "(m-k)(n-k)";
    r.source = "rank variety codimension";
    r.inputs = {{"n", shape.n}, {"m", shape.m}, {"k", k}};
    r.value = rank_variety_codim(shape, k);
    r.vacuous = r.value <= 0;
    return r;
}

/// f(k) = (m-k)(n-k) + k + 1 - e, on 0 <= k <= min(m, n-1).
inline std::int64_t reduction_f(int k, const MatrixSpaceShape& shape, int e) {
    detail::require(k >= 0 && k <= std::min(shape.m, shape.n - 1),
                    "f(k) requires 0 <= k <= min(m, n-1) (got k=" + std::to_string(k) + ")");
    return static_cast<std::int64_t>(shape.m - k) * (shape.n - k) + k + 1 - e;
}

/// f(0), ..., f(min(m, n-1)).
inline std::vector<std::int64_t> reduction_f_sweep(const MatrixSpaceShape& shape, int e) {
    std::vector<std::int64_t> out;
    for (int k = 0; k <= std::min(shape.m, shape.n - 1); ++k) out.push_back(reduction_f(k, shape, e));
    return out;
}

/// ((n-k)^e, 0^{k-e}): the diagram of S_k(E) for dim E = e.
inline YoungDiagram special_schubert_diagram(int e, const RectangleContext& ctx) {
    detail::require(e >= 1 && e <= ctx.k, "special Schubert diagram requires 1 <= e <= k");
    return YoungDiagram(std::vector<int>(static_cast<std::size_t>(e), ctx.width()));
}

/// (1^{k-e+1}): the least-area diagram whose class multiplies the special
/// Schubert class to zero. Its area k+1-e is the Schubert bound.
inline YoungDiagram minimal_dual_diagram(int e, const RectangleContext& ctx) {
    detail::require(e >= 1 && e <= ctx.k, "minimal dual diagram requires 1 <= e <= k");
    return YoungDiagram(std::vector<int>(static_cast<std::size_t>(ctx.k - e + 1), 1));
}

} // namespace schubert
