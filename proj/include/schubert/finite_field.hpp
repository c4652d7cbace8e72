#pragma once

// Exact linear algebra over a small prime field F_q: matrices, canonical
// (RREF) subspaces and complete flags.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "schubert/error.hpp"

namespace schubert {

inline bool is_prime(int q) noexcept {
    if (q < 2) return false;
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

/// Arithmetic tables for F_q, q prime.
class PrimeField {
public:
    explicit PrimeField(int q) : q_(q) {
        detail::require(is_prime(q) && q < 65536, "field order q=" + std::to_string(q) + " must be a prime < 65536");
        inv_.assign(static_cast<std::size_t>(q), 0);
        for (int a = 1; a < q; ++a) inv_[static_cast<std::size_t>(a)] = pow(a, q - 2);
    }

    [[nodiscard]] int order() const noexcept { return q_; }
    [[nodiscard]] int add(int a, int b) const noexcept { return (a + b) % q_; }
    [[nodiscard]] int sub(int a, int b) const noexcept { return (a - b + q_) % q_; }
    [[nodiscard]] int neg(int a) const noexcept { return (q_ - a) % q_; }
    [[nodiscard]] int mul(int a, int b) const noexcept {
        return static_cast<int>((static_cast<std::int64_t>(a) * b) % q_);
    }
    [[nodiscard]] int inv(int a) const {
        detail::require(a % q_ != 0, "division by zero in F_" + std::to_string(q_));
        return inv_[static_cast<std::size_t>(a)];
    }
    [[nodiscard]] int reduce(std::int64_t a) const noexcept {
        const auto r = static_cast<int>(a % q_);
        return r < 0 ? r + q_ : r;
    }

    [[nodiscard]] int pow(int a, int e) const noexcept {
        int result = 1 % q_;
        int base = a % q_;
        while (e > 0) {
            if (e & 1) result = mul(result, base);
            base = mul(base, base);
            e >>= 1;
        }
        return result;
    }

    friend bool operator==(const PrimeField& a, const PrimeField& b) noexcept { return a.q_ == b.q_; }

private:
    int q_;
    std::vector<int> inv_;
};

/// A single element of F_q.
class PrimeFieldElement {
public:
    PrimeFieldElement(std::int64_t value, int q) : q_(q) {
        detail::require(is_prime(q), "field order q=" + std::to_string(q) + " must be prime");
        value_ = static_cast<int>(((value % q) + q) % q);
    }

    [[nodiscard]] int value() const noexcept { return value_; }
    [[nodiscard]] int modulus() const noexcept { return q_; }

    friend PrimeFieldElement operator+(PrimeFieldElement a, PrimeFieldElement b) {
        a.check(b);
        return {static_cast<std::int64_t>(a.value_) + b.value_, a.q_};
    }
    friend PrimeFieldElement operator-(PrimeFieldElement a, PrimeFieldElement b) {
        a.check(b);
        return {static_cast<std::int64_t>(a.value_) - b.value_, a.q_};
    }
    friend PrimeFieldElement operator*(PrimeFieldElement a, PrimeFieldElement b) {
        a.check(b);
        return {static_cast<std::int64_t>(a.value_) * b.value_, a.q_};
    }

    [[nodiscard]] PrimeFieldElement inverse() const {
        detail::require(value_ != 0, "zero has no inverse");
        // Fermat: a^(q-2)
        std::int64_t result = 1, base = value_;
        for (int e = q_ - 2; e > 0; e >>= 1) {
            if (e & 1) result = result * base % q_;
            base = base * base % q_;
        }
        return {result, q_};
    }

    friend PrimeFieldElement operator/(PrimeFieldElement a, PrimeFieldElement b) { return a * b.inverse(); }
    friend bool operator==(const PrimeFieldElement&, const PrimeFieldElement&) = default;

private:
    void check(const PrimeFieldElement& other) const {
        detail::require(q_ == other.q_, "mixing elements of different prime fields");
    }

    int value_ = 0;
    int q_ = 2;
};

class FqSubspace;

namespace detail {

/// In-place reduced row echelon form of a row-major rows x cols block.
/// Returns the pivot columns (one per nonzero row, in order).
inline std::vector<int> rref_in_place(const PrimeField& f, std::vector<int>& a, int rows, int cols) {
    std::vector<int> pivots;
    int r = 0;
    auto at = [&](int i, int j) -> int& { return a[static_cast<std::size_t>(i * cols + j)]; };
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = r;
        while (p < rows && at(p, c) == 0) ++p;
        if (p == rows) continue;
        if (p != r)
            for (int j = 0; j < cols; ++j) std::swap(at(p, j), at(r, j));
        const int inv = f.inv(at(r, c));
        for (int j = c; j < cols; ++j) at(r, j) = f.mul(at(r, j), inv);
        for (int i = 0; i < rows; ++i) {
            if (i == r || at(i, c) == 0) continue;
            const int factor = at(i, c);
            for (int j = c; j < cols; ++j) at(i, j) = f.sub(at(i, j), f.mul(factor, at(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace detail

/// Dense rows x cols matrix over F_q.
class FqMatrix {
public:
    FqMatrix(int q, int rows, int cols) : field_(q), rows_(rows), cols_(cols) {
        detail::require(rows >= 1 && cols >= 1, "matrix dimensions must be positive");
        data_.assign(static_cast<std::size_t>(rows * cols), 0);
    }

    FqMatrix(int q, const std::vector<std::vector<int>>& entries)
        : FqMatrix(q, static_cast<int>(entries.size()), entries.empty() ? 0 : static_cast<int>(entries[0].size())) {
        for (int i = 0; i < rows_; ++i) {
            detail::require(static_cast<int>(entries[static_cast<std::size_t>(i)].size()) == cols_,
                            "ragged matrix rows");
            for (int j = 0; j < cols_; ++j) set(i, j, entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
        }
    }

    static FqMatrix identity(int q, int n) {
        FqMatrix out(q, n, n);
        for (int i = 0; i < n; ++i) out.set(i, i, 1);
        return out;
    }

    [[nodiscard]] int rows() const noexcept { return rows_; }
    [[nodiscard]] int cols() const noexcept { return cols_; }
    [[nodiscard]] const PrimeField& field() const noexcept { return field_; }

    [[nodiscard]] int operator()(int i, int j) const { return data_[index(i, j)]; }
    void set(int i, int j, std::int64_t v) { data_[index(i, j)] = field_.reduce(v); }

    [[nodiscard]] std::vector<int> column(int j) const {
        std::vector<int> out(static_cast<std::size_t>(rows_));
        for (int i = 0; i < rows_; ++i) out[static_cast<std::size_t>(i)] = (*this)(i, j);
        return out;
    }

    [[nodiscard]] FqMatrix transpose() const {
        FqMatrix out(field_.order(), cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) out.set(j, i, (*this)(i, j));
        return out;
    }

    [[nodiscard]] int rank() const {
        auto copy = data_;
        return static_cast<int>(detail::rref_in_place(field_, copy, rows_, cols_).size());
    }

    /// col A as a canonical subspace of F_q^rows.
    [[nodiscard]] FqSubspace column_space() const;

    friend bool operator==(const FqMatrix& a, const FqMatrix& b) {
        return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    [[nodiscard]] std::size_t index(int i, int j) const {
        detail::require(i >= 0 && i < rows_ && j >= 0 && j < cols_, "matrix index out of range");
        return static_cast<std::size_t>(i * cols_ + j);
    }

    PrimeField field_;
    int rows_;
    int cols_;
    std::vector<int> data_;
};

/// Subspace of F_q^n stored by the RREF of a basis; equal subspaces have
/// identical representations.
class FqSubspace {
public:
    /// The zero subspace of F_q^n.
    FqSubspace(int q, int n) : q_(q), n_(n) {
        detail::require(is_prime(q), "field order q=" + std::to_string(q) + " must be prime");
        detail::require(n >= 0, "ambient dimension must be nonnegative");
    }

    /// Span of arbitrary vectors (each of length n).
    static FqSubspace span(int q, int n, const std::vector<std::vector<int>>& vectors) {
        FqSubspace out(q, n);
        const PrimeField f(q);
        std::vector<int> block;
        for (const auto& v : vectors) {
            detail::require(static_cast<int>(v.size()) == n, "vector length does not match ambient dimension");
            for (int x : v) block.push_back(f.reduce(x));
        }
        const int rows = static_cast<int>(vectors.size());
        const auto pivots = detail::rref_in_place(f, block, rows, n);
        block.resize(pivots.size() * static_cast<std::size_t>(n));
        out.basis_ = std::move(block);
        out.pivots_ = pivots;
        return out;
    }

    /// Builds directly from an already-reduced basis block (no checks beyond sizes).
    static FqSubspace from_rref(int q, int n, std::vector<int> rref_block, std::vector<int> pivots) {
        FqSubspace out(q, n);
        detail::require(rref_block.size() == pivots.size() * static_cast<std::size_t>(n), "bad RREF block size");
        out.basis_ = std::move(rref_block);
        out.pivots_ = std::move(pivots);
        return out;
    }

    /// span(e_{first}, ..., e_{last}), 1-based inclusive; empty when first > last.
    static FqSubspace coordinate(int q, int n, int first, int last) {
        std::vector<std::vector<int>> vs;
        for (int i = first; i <= last; ++i) {
            std::vector<int> e(static_cast<std::size_t>(n), 0);
            e[static_cast<std::size_t>(i - 1)] = 1;
            vs.push_back(std::move(e));
        }
        return span(q, n, vs);
    }

    [[nodiscard]] int field_order() const noexcept { return q_; }
    [[nodiscard]] int ambient_dim() const noexcept { return n_; }
    [[nodiscard]] int dim() const noexcept { return static_cast<int>(pivots_.size()); }
    [[nodiscard]] const std::vector<int>& pivots() const noexcept { return pivots_; }

    /// Basis rows in RREF.
    [[nodiscard]] std::vector<std::vector<int>> basis() const {
        std::vector<std::vector<int>> out;
        for (int r = 0; r < dim(); ++r)
            out.emplace_back(basis_.begin() + r * n_, basis_.begin() + (r + 1) * n_);
        return out;
    }

    /// Flat row-major RREF block, dim() x ambient_dim().
    [[nodiscard]] const std::vector<int>& rref() const noexcept { return basis_; }

    friend FqSubspace operator+(const FqSubspace& a, const FqSubspace& b) {
        a.require_compatible(b);
        auto vs = a.basis();
        for (auto& v : b.basis()) vs.push_back(std::move(v));
        return span(a.q_, a.n_, vs);
    }

    /// dim(a cap b) = dim a + dim b - dim(a + b).
    friend int intersection_dim(const FqSubspace& a, const FqSubspace& b) {
        return a.dim() + b.dim() - (a + b).dim();
    }

    [[nodiscard]] bool contains(const FqSubspace& other) const {
        require_compatible(other);
        return (*this + other).dim() == dim();
    }

    void require_compatible(const FqSubspace& other) const {
        detail::require(q_ == other.q_ && n_ == other.n_, "subspaces live in different ambient spaces");
    }

    friend bool operator==(const FqSubspace& a, const FqSubspace& b) {
        return a.q_ == b.q_ && a.n_ == b.n_ && a.pivots_ == b.pivots_ && a.basis_ == b.basis_;
    }
    friend auto operator<=>(const FqSubspace& a, const FqSubspace& b) {
        return std::tie(a.q_, a.n_, a.pivots_, a.basis_) <=> std::tie(b.q_, b.n_, b.pivots_, b.basis_);
    }

private:
    int q_;
    int n_;
    std::vector<int> basis_;
    std::vector<int> pivots_;
};

inline FqSubspace FqMatrix::column_space() const {
    std::vector<std::vector<int>> cols;
    for (int j = 0; j < cols_; ++j) cols.push_back(column(j));
    return FqSubspace::span(field_.order(), rows_, cols);
}

/// Complete flag F_0 < F_1 < ... < F_n with dim F_j = j.
class FqFlag {
public:
    /// F_j = span of the first j vectors; the vectors must be a basis of F_q^n.
    static FqFlag from_basis(int q, const std::vector<std::vector<int>>& ordered_basis) {
        const int n = static_cast<int>(ordered_basis.size());
        FqFlag flag;
        std::vector<std::vector<int>> prefix;
        flag.members_.push_back(FqSubspace(q, n));
        for (int j = 1; j <= n; ++j) {
            prefix.push_back(ordered_basis[static_cast<std::size_t>(j - 1)]);
            flag.members_.push_back(FqSubspace::span(q, n, prefix));
            detail::require(flag.members_.back().dim() == j, "flag vectors are not linearly independent");
        }
        return flag;
    }

    /// F_j = span(e_1, ..., e_j).
    static FqFlag standard(int q, int n) {
        std::vector<std::vector<int>> basis;
        for (int i = 0; i < n; ++i) {
            std::vector<int> e(static_cast<std::size_t>(n), 0);
            e[static_cast<std::size_t>(i)] = 1;
            basis.push_back(std::move(e));
        }
        return from_basis(q, basis);
    }

    /// G_j = span(e_n, ..., e_{n-j+1}).
    static FqFlag opposite(int q, int n) {
        std::vector<std::vector<int>> basis;
        for (int i = n - 1; i >= 0; --i) {
            std::vector<int> e(static_cast<std::size_t>(n), 0);
            e[static_cast<std::size_t>(i)] = 1;
            basis.push_back(std::move(e));
        }
        return from_basis(q, basis);
    }

    [[nodiscard]] int ambient_dim() const noexcept { return static_cast<int>(members_.size()) - 1; }
    [[nodiscard]] int field_order() const noexcept { return members_.front().field_order(); }
    [[nodiscard]] const FqSubspace& operator[](int j) const { return members_.at(static_cast<std::size_t>(j)); }

private:
    FqFlag() = default;
    std::vector<FqSubspace> members_;
};

} // namespace schubert
