#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "hopfdr/matrix.hpp"

namespace hopfdr::detail {

// Sums scaled sparse columns. Small targets use a dense scratch row, large ones sort and merge.
class Accumulator {
public:
    Accumulator(Field f, std::size_t n) : field_(f), dense_(n <= kDenseLimit) {
        if (dense_) slot_.resize(n);
    }

    void add(const Scalar& a, const SparseVec& x) {
        if (a.is_zero()) return;
        if (dense_) {
            for (const auto& e : x) {
                auto& s = slot_[e.row];
                if (!s) {
                    s = e.value * a;
                    touched_.push_back(e.row);
                } else {
                    s->add_mul(a, e.value);
                }
            }
        } else {
            for (const auto& e : x) pending_.push_back({e.row, e.value * a});
        }
    }

    void add_one(std::uint32_t row, const Scalar& v) {
        if (dense_) {
            auto& s = slot_[row];
            if (!s) {
                s = v;
                touched_.push_back(row);
            } else {
                *s += v;
            }
        } else {
            pending_.push_back({row, v});
        }
    }

    SparseVec take() {
        SparseVec out;
        if (dense_) {
            std::sort(touched_.begin(), touched_.end());
            out.reserve(touched_.size());
            for (auto r : touched_) {
                if (!slot_[r]->is_zero()) out.push_back({r, std::move(*slot_[r])});
                slot_[r].reset();
            }
            touched_.clear();
            return out;
        }
        std::sort(pending_.begin(), pending_.end(), [](const Entry& a, const Entry& b) { return a.row < b.row; });
        for (auto& e : pending_) {
            if (!out.empty() && out.back().row == e.row) {
                out.back().value += e.value;
            } else {
                if (!out.empty() && out.back().value.is_zero()) out.pop_back();
                out.push_back(std::move(e));
            }
        }
        if (!out.empty() && out.back().value.is_zero()) out.pop_back();
        pending_.clear();
        return out;
    }

private:
    static constexpr std::size_t kDenseLimit = 4096;
    Field field_;
    bool dense_;
    std::vector<std::optional<Scalar>> slot_;
    std::vector<std::uint32_t> touched_;
    std::vector<Entry> pending_;
};

}  // namespace hopfdr::detail
