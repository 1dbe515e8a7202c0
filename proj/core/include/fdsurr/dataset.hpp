#pragma once

#include <cstddef>
#include <deque>

#include "fdsurr/types.hpp"

namespace fdsurr {

struct ValueEntry {
    Vector point;
    double value = 0.0;
};

struct GradEntry {
    Vector point;
    Vector grad;
    double h = 0.0;  ///< difference step that produced `grad`
};

/// Capped FIFO store of (point, value) pairs, oldest first.
///
/// Inserting a point whose coordinates exactly match a stored one replaces
/// the stored value and moves the entry to the newest position. When a new
/// point arrives at capacity the oldest entry is evicted.
class ValueDataset {
public:
    explicit ValueDataset(std::size_t cap);

    void insert(const Vector& point, double value);

    [[nodiscard]] std::size_t size() const noexcept { return entries_.size(); }
    [[nodiscard]] std::size_t cap() const noexcept { return cap_; }
    [[nodiscard]] bool empty() const noexcept { return entries_.empty(); }
    [[nodiscard]] const std::deque<ValueEntry>& entries() const noexcept { return entries_; }
    [[nodiscard]] const ValueEntry& operator[](std::size_t i) const { return entries_[i]; }

private:
    std::size_t cap_;
    std::deque<ValueEntry> entries_;
};

/// Capped FIFO store of (point, approximate gradient, step) triples with the
/// same eviction and duplicate rules as ValueDataset.
class GradDataset {
public:
    explicit GradDataset(std::size_t cap);

    /// Throws DimensionMismatch when grad and point sizes differ.
    void insert(const Vector& point, const Vector& grad, double h);

    [[nodiscard]] std::size_t size() const noexcept { return entries_.size(); }
    [[nodiscard]] std::size_t cap() const noexcept { return cap_; }
    [[nodiscard]] bool empty() const noexcept { return entries_.empty(); }
    [[nodiscard]] const std::deque<GradEntry>& entries() const noexcept { return entries_; }
    [[nodiscard]] const GradEntry& operator[](std::size_t i) const { return entries_[i]; }

private:
    std::size_t cap_;
    std::deque<GradEntry> entries_;
};

}  // namespace fdsurr
