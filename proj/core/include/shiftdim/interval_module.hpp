#pragma once

#include <cstddef>
#include <vector>

#include "shiftdim/degree.hpp"

namespace shiftdim {

/// Antichain of degrees. For r = 2 the points are sorted with first
/// coordinates strictly increasing and second coordinates strictly
/// decreasing; for other r they are sorted lexicographically.
class Staircase {
public:
    Staircase() = default;
    /// Reduces `points` to its minimal elements (duplicates removed) and sorts them.
    Staircase(std::size_t r, std::vector<Degree> points);

    std::size_t dim() const { return r_; }
    std::size_t size() const { return pts_.size(); }
    bool empty() const { return pts_.empty(); }
    const Degree& operator[](std::size_t i) const { return pts_[i]; }
    const std::vector<Degree>& points() const { return pts_; }
    auto begin() const { return pts_.begin(); }
    auto end() const { return pts_.end(); }

    /// True iff some point of the staircase is <= d.
    bool upset_contains(const Degree& d) const;
    bool contains_point(const Degree& d) const;

    friend bool operator==(const Staircase&, const Staircase&) = default;

private:
    std::size_t r_ = 0;
    std::vector<Degree> pts_;
};

/// Quotient I/J of monomial ideals, given by the minimal generator degrees
/// of I and the minimal degrees of J (both antichains).
class IntervalModule {
public:
    IntervalModule() = default;
    /// Validates and normalizes. Throws InputError if a relation lies above no
    /// generator. A generator that coincides with a relation is zero in the
    /// quotient and is dropped; relations are then re-minimized within the
    /// upset of the remaining generators.
    IntervalModule(std::size_t r, std::vector<Degree> generators, std::vector<Degree> relations = {});

    static IntervalModule free_module(const Degree& g) { return IntervalModule(g.dim(), {g}); }
    static IntervalModule zero(std::size_t r) { return IntervalModule(r, {}); }

    std::size_t dim() const { return r_; }
    const Staircase& generators() const { return gens_; }
    const Staircase& relations() const { return rels_; }
    bool is_zero() const { return gens_.empty(); }

    friend bool operator==(const IntervalModule&, const IntervalModule&) = default;

private:
    std::size_t r_ = 0;
    Staircase gens_;
    Staircase rels_;
};

/// Finite direct sum of interval modules of a common dimension.
class DirectSumModule {
public:
    DirectSumModule() = default;
    DirectSumModule(std::size_t r, std::vector<IntervalModule> summands);

    std::size_t dim() const { return r_; }
    const std::vector<IntervalModule>& summands() const { return summands_; }

private:
    std::size_t r_ = 0;
    std::vector<IntervalModule> summands_;
};

/// True iff some generator <= d and no relation <= d.
bool support_contains(const IntervalModule& m, const Degree& d);

/// True iff the v-shift of the generator at degree g is nonzero, i.e. g + v is in the support.
/// Throws InputError if g is not a generator degree of m.
bool shift_is_nonzero(const IntervalModule& m, const Degree& g, const Degree& v);

/// Quotient of m by everything at degrees >= alpha.
IntervalModule truncate(const IntervalModule& m, const Degree& alpha);

std::size_t beta0(const IntervalModule& m);
std::size_t beta0(const DirectSumModule& m);

}  // namespace shiftdim
