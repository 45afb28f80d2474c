#include "girthbound/triples.hpp"

#include <algorithm>
#include <stdexcept>

namespace girthbound {

bool is_k_good(int p, int q, int r, int k) {
    if (k < 1 || p < 1 || q < 1 || r < 1 || p > k || q > k || r > k)
        throw std::invalid_argument("is_k_good: triple entries must lie in [1,k]");
    int sum = p + q + r;
    if (sum % 2 == 1) return sum >= 2 * k + 1;
    int mx = std::max({p, q, r});
    return mx <= sum - mx;
}

std::vector<GoodTriple> enumerate_k_good(int k) {
    std::vector<GoodTriple> out;
    for (int p = 1; p <= k; ++p)
        for (int q = p; q <= k; ++q)
            for (int r = q; r <= k; ++r)
                if (is_k_good(p, q, r, k)) out.push_back({p, q, r});
    return out;
}

bool realized_on_edge(const DistanceLevels& levels, int x, int y, int q, int r) {
    if (q < 1 || r < 1) throw std::invalid_argument("realized_on_edge: q,r >= 1");
    if (!levels.at(x, q).intersects(levels.at(y, r))) return false;
    if (q == r) return true;
    return levels.at(x, r).intersects(levels.at(y, q));
}

}  // namespace girthbound
