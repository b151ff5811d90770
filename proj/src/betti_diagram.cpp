#include "bettipair/betti_diagram.hpp"

#include <iomanip>
#include <sstream>

namespace bettipair {

std::map<int, i64> BettiDiagram::k_polynomial() const {
    std::map<int, i64> k;
    for (const auto& [key, v] : entries) {
        auto [i, j] = key;
        k[j] += (i % 2 == 0) ? v : -v;
        if (k[j] == 0) k.erase(j);
    }
    return k;
}

std::string BettiDiagram::render() const {
    int rmax = max_row();
    int width = 1;
    for (const auto& [k, v] : entries) {
        int w = static_cast<int>(std::to_string(v).size());
        width = std::max(width, w);
    }
    std::ostringstream os;
    os << std::setw(4) << ' ' << ' ';
    for (int i = 0; i < ncols; ++i) os << std::setw(width + 2) << i;
    os << '\n';
    for (int r = 0; r <= rmax; ++r) {
        os << std::setw(3) << r << " :";
        for (int i = 0; i < ncols; ++i) {
            i64 v = get(i, i + r);
            if (v == 0)
                os << std::setw(width + 2) << '-';
            else
                os << std::setw(width + 2) << v;
        }
        os << '\n';
    }
    return os.str();
}

Sequence hilbert_from_k_polynomial(const BettiDiagram& b, int nvars, int upto) {
    auto k = b.k_polynomial();
    Sequence h;
    h.values.resize(upto + 1, 0);
    for (int d = 0; d <= upto; ++d) {
        i64 acc = 0;
        for (const auto& [j, c] : k)
            if (j <= d) acc += c * binom(d - j + nvars - 1, nvars - 1);
        h.values[d] = acc;
    }
    return h;
}

bool alternating_sum_matches(const BettiDiagram& b, const Sequence& hf, int nvars, int upto) {
    Sequence h = hilbert_from_k_polynomial(b, nvars, upto);
    for (int d = 0; d <= upto; ++d)
        if (h.at(d) != hf.at(d)) return false;
    return true;
}

} // namespace bettipair
