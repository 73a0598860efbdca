#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace shiftdim {

using FpVec = std::vector<std::uint32_t>;

/// Arithmetic in F_p for a prime p < 2^31.
class PrimeField {
public:
    explicit PrimeField(std::uint32_t p);
    std::uint32_t p() const { return p_; }
    std::uint32_t reduce(std::int64_t x) const;
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return static_cast<std::uint32_t>((std::uint64_t{a} + b) % p_); }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, p_ - b); }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return static_cast<std::uint32_t>((std::uint64_t{a} * b) % p_); }
    std::uint32_t inv(std::uint32_t a) const;

private:
    std::uint32_t p_;
};

/// Dense matrix over F_p mapping F_p^cols -> F_p^rows.
struct FpMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::uint32_t> a;  ///< row-major

    FpMatrix() = default;
    FpMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}
    static FpMatrix identity(std::size_t n);

    std::uint32_t& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    std::uint32_t at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
    bool is_zero() const;

    friend bool operator==(const FpMatrix&, const FpMatrix&) = default;
};

FpVec apply(const PrimeField& F, const FpMatrix& m, const FpVec& x);
FpMatrix multiply(const PrimeField& F, const FpMatrix& a, const FpMatrix& b);
std::size_t rank(const PrimeField& F, FpMatrix m);

/// Subspace of F_p^n kept as a reduced row-echelon basis.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t n) : n_(n) {}

    std::size_t ambient() const { return n_; }
    std::size_t dim() const { return rows_.size(); }
    const std::vector<FpVec>& basis() const { return rows_; }

    /// Reduces x against the basis in place; returns true iff the remainder is zero.
    bool reduce(const PrimeField& F, FpVec& x) const;
    bool contains(const PrimeField& F, FpVec x) const { return reduce(F, x); }
    /// Adds x; returns true iff the dimension grew.
    bool add(const PrimeField& F, FpVec x);
    /// Adds every basis vector of o; returns true iff the dimension grew.
    bool add(const PrimeField& F, const Subspace& o);
    bool contains(const PrimeField& F, const Subspace& o) const;

    /// Image under m (a subspace of F_p^{m.rows}).
    Subspace image(const PrimeField& F, const FpMatrix& m) const;

    static Subspace full(std::size_t n);
    static Subspace column_space(const PrimeField& F, const FpMatrix& m);

    friend bool operator==(const Subspace&, const Subspace&) = default;

private:
    std::size_t n_ = 0;
    std::vector<FpVec> rows_;
    std::vector<std::size_t> pivots_;
};

/// Nonzero vectors of F_p^n whose first nonzero entry is 1, in lexicographic order.
std::vector<FpVec> normalized_vectors(const PrimeField& F, std::size_t n);

}  // namespace shiftdim
