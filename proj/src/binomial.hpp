#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "rph/error.hpp"

namespace rph::detail {

// C(v, k) for v <= n, k <= max_k, used to encode simplices in the
// combinatorial number system: {v_k > ... > v_0} -> sum_i C(v_i, i + 1).
class BinomialTable {
public:
    BinomialTable(std::size_t n, std::size_t max_k) : n_(n + 1), k_(max_k + 1), table_(n_ * k_, 0) {
        constexpr std::uint64_t kCap = std::numeric_limits<std::uint64_t>::max() / 2;
        for (std::size_t v = 0; v < n_; ++v) {
            table_[v * k_] = 1;
            for (std::size_t k = 1; k < k_ && k <= v; ++k) {
                const std::uint64_t x = at(v - 1, k - 1) + (k <= v - 1 ? at(v - 1, k) : 0);
                if (x > kCap)
                    throw ResourceError("simplex index overflows 64 bits for n = " + std::to_string(n) +
                                        ", dimension " + std::to_string(max_k - 1));
                table_[v * k_ + k] = x;
            }
        }
    }

    std::uint64_t operator()(std::size_t v, std::size_t k) const noexcept {
        return (k < k_ && v < n_ && k <= v) ? table_[v * k_ + k] : 0;
    }

private:
    std::uint64_t at(std::size_t v, std::size_t k) const noexcept { return table_[v * k_ + k]; }
    std::size_t n_, k_;
    std::vector<std::uint64_t> table_;
};

}  // namespace rph::detail
