#include "fdsurr/dataset.hpp"

#include <algorithm>

#include "fdsurr/errors.hpp"

namespace fdsurr {
namespace {

bool same_point(const Vector& a, const Vector& b) {
    return a.size() == b.size() && (a.array() == b.array()).all();
}

template <typename Entry>
void insert_fifo(std::deque<Entry>& entries, std::size_t cap, Entry entry) {
    auto it = std::find_if(entries.begin(), entries.end(),
                           [&](const Entry& e) { return same_point(e.point, entry.point); });
    if (it != entries.end()) {
        entries.erase(it);
    } else if (entries.size() == cap) {
        entries.pop_front();
    }
    entries.push_back(std::move(entry));
}

}  // namespace

ValueDataset::ValueDataset(std::size_t cap) : cap_(cap) {
    if (cap_ == 0) {
        throw NonPositiveInput("dataset cap must be positive");
    }
}

void ValueDataset::insert(const Vector& point, double value) {
    insert_fifo(entries_, cap_, ValueEntry{point, value});
}

GradDataset::GradDataset(std::size_t cap) : cap_(cap) {
    if (cap_ == 0) {
        throw NonPositiveInput("dataset cap must be positive");
    }
}

void GradDataset::insert(const Vector& point, const Vector& grad, double h) {
    if (grad.size() != point.size()) {
        throw DimensionMismatch(point.size(), grad.size());
    }
    insert_fifo(entries_, cap_, GradEntry{point, grad, h});
}

}  // namespace fdsurr
