#include "shiftdim/fp_linalg.hpp"

#include <algorithm>

#include "shiftdim/errors.hpp"

namespace shiftdim {

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
    if (p < 2 || p >= (1u << 31)) throw InputError("field characteristic out of range");
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d) {
        if (p % d == 0) throw InputError("field characteristic " + std::to_string(p) + " is not prime");
    }
}

std::uint32_t PrimeField::reduce(std::int64_t x) const {
    std::int64_t r = x % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<std::uint32_t>(r);
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
    if (a % p_ == 0) throw std::domain_error("inverse of zero in F_p");
    std::uint64_t result = 1;
    std::uint64_t base = a % p_;
    std::uint32_t e = p_ - 2;
    while (e) {
        if (e & 1) result = result * base % p_;
        base = base * base % p_;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(result);
}

FpMatrix FpMatrix::identity(std::size_t n) {
    FpMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool FpMatrix::is_zero() const {
    return std::all_of(a.begin(), a.end(), [](std::uint32_t x) { return x == 0; });
}

FpVec apply(const PrimeField& F, const FpMatrix& m, const FpVec& x) {
    if (x.size() != m.cols) throw InvariantError("matrix/vector shape mismatch");
    FpVec y(m.rows, 0);
    for (std::size_t i = 0; i < m.rows; ++i) {
        std::uint64_t acc = 0;
        for (std::size_t j = 0; j < m.cols; ++j) acc += std::uint64_t{m.at(i, j)} * x[j] % F.p();
        y[i] = static_cast<std::uint32_t>(acc % F.p());
    }
    return y;
}

FpMatrix multiply(const PrimeField& F, const FpMatrix& a, const FpMatrix& b) {
    if (a.cols != b.rows) throw InvariantError("matrix product shape mismatch");
    FpMatrix c(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i) {
        for (std::size_t j = 0; j < b.cols; ++j) {
            std::uint64_t acc = 0;
            for (std::size_t k = 0; k < a.cols; ++k) acc += std::uint64_t{a.at(i, k)} * b.at(k, j) % F.p();
            c.at(i, j) = static_cast<std::uint32_t>(acc % F.p());
        }
    }
    return c;
}

std::size_t rank(const PrimeField& F, FpMatrix m) {
    std::size_t r = 0;
    for (std::size_t col = 0; col < m.cols && r < m.rows; ++col) {
        std::size_t piv = r;
        while (piv < m.rows && m.at(piv, col) == 0) ++piv;
        if (piv == m.rows) continue;
        for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(r, j), m.at(piv, j));
        const std::uint32_t s = F.inv(m.at(r, col));
        for (std::size_t j = 0; j < m.cols; ++j) m.at(r, j) = F.mul(m.at(r, j), s);
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == r || m.at(i, col) == 0) continue;
            const std::uint32_t f = m.at(i, col);
            for (std::size_t j = 0; j < m.cols; ++j) m.at(i, j) = F.sub(m.at(i, j), F.mul(f, m.at(r, j)));
        }
        ++r;
    }
    return r;
}

bool Subspace::reduce(const PrimeField& F, FpVec& x) const {
    if (x.size() != n_) throw InvariantError("vector does not live in this subspace's ambient space");
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const std::uint32_t f = x[pivots_[k]];
        if (f == 0) continue;
        const FpVec& row = rows_[k];
        for (std::size_t j = pivots_[k]; j < n_; ++j) x[j] = F.sub(x[j], F.mul(f, row[j]));
    }
    return std::all_of(x.begin(), x.end(), [](std::uint32_t e) { return e == 0; });
}

bool Subspace::add(const PrimeField& F, FpVec x) {
    if (reduce(F, x)) return false;
    std::size_t piv = 0;
    while (x[piv] == 0) ++piv;
    const std::uint32_t s = F.inv(x[piv]);
    for (auto& e : x) e = F.mul(e, s);
    for (auto& row : rows_) {
        const std::uint32_t f = row[piv];
        if (f == 0) continue;
        for (std::size_t j = 0; j < n_; ++j) row[j] = F.sub(row[j], F.mul(f, x[j]));
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, piv);
    rows_.insert(rows_.begin() + pos, std::move(x));
    return true;
}

bool Subspace::add(const PrimeField& F, const Subspace& o) {
    bool grew = false;
    for (const auto& row : o.rows_) grew |= add(F, row);
    return grew;
}

bool Subspace::contains(const PrimeField& F, const Subspace& o) const {
    if (o.dim() > dim()) return false;
    return std::all_of(o.rows_.begin(), o.rows_.end(), [&](const FpVec& row) { return contains(F, row); });
}

Subspace Subspace::image(const PrimeField& F, const FpMatrix& m) const {
    if (m.cols != n_) throw InvariantError("matrix does not act on this subspace");
    Subspace out(m.rows);
    for (const auto& row : rows_) out.add(F, apply(F, m, row));
    return out;
}

Subspace Subspace::full(std::size_t n) {
    Subspace s(n);
    for (std::size_t i = 0; i < n; ++i) {
        FpVec e(n, 0);
        e[i] = 1;
        s.rows_.push_back(std::move(e));
        s.pivots_.push_back(i);
    }
    return s;
}

Subspace Subspace::column_space(const PrimeField& F, const FpMatrix& m) {
    Subspace s(m.rows);
    for (std::size_t j = 0; j < m.cols; ++j) {
        FpVec col(m.rows);
        for (std::size_t i = 0; i < m.rows; ++i) col[i] = m.at(i, j);
        s.add(F, std::move(col));
    }
    return s;
}

std::vector<FpVec> normalized_vectors(const PrimeField& F, std::size_t n) {
    std::vector<FpVec> out;
    for (std::size_t lead = 0; lead < n; ++lead) {
        // Entries before `lead` are zero, entry `lead` is one, the rest are free.
        const std::size_t free = n - lead - 1;
        std::vector<std::uint32_t> tail(free, 0);
        while (true) {
            FpVec v(n, 0);
            v[lead] = 1;
            for (std::size_t j = 0; j < free; ++j) v[lead + 1 + j] = tail[j];
            out.push_back(std::move(v));
            std::size_t pos = free;
            while (pos > 0 && tail[pos - 1] == F.p() - 1) {
                tail[pos - 1] = 0;
                --pos;
            }
            if (pos == 0) break;
            ++tail[pos - 1];
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace shiftdim
