#include "reccs/rng.hpp"

#include <stdexcept>

namespace reccs {

AliasTable::AliasTable(std::span<const std::uint64_t> weights) {
    const std::size_t n = weights.size();
    prob_.assign(n, 0.0);
    alias_.assign(n, 0);
    if (n == 0) return;

    long double total = 0;
    for (auto w : weights) total += static_cast<long double>(w);
    if (total <= 0) {
        throw std::invalid_argument("AliasTable: total weight must be positive");
    }

    std::vector<double> scaled(n);
    for (std::size_t i = 0; i < n; ++i) {
        scaled[i] = static_cast<double>(static_cast<long double>(weights[i]) * n / total);
    }

    std::vector<std::uint32_t> small, large;
    for (std::size_t i = 0; i < n; ++i) {
        (scaled[i] < 1.0 ? small : large).push_back(static_cast<std::uint32_t>(i));
    }

    while (!small.empty() && !large.empty()) {
        const std::uint32_t s = small.back();
        const std::uint32_t l = large.back();
        small.pop_back();
        large.pop_back();
        prob_[s] = scaled[s];
        alias_[s] = l;
        scaled[l] = (scaled[l] + scaled[s]) - 1.0;
        (scaled[l] < 1.0 ? small : large).push_back(l);
    }
    for (auto i : large) prob_[i] = 1.0;
    for (auto i : small) prob_[i] = 1.0;  // numerical leftovers
}

std::uint32_t AliasTable::sample(RngStream& rng) const {
    const std::uint32_t i = static_cast<std::uint32_t>(rng.uniform(prob_.size()));
    return rng.uniform_real() < prob_[i] ? i : alias_[i];
}

}  // namespace reccs
