#include "bettipair/seq.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace bettipair {

int Sequence::stable_from() const {
    i64 tail = eventual.value_or(0);
    int i = listed_size();
    while (i > 0 && values[i - 1] == tail) --i;
    return i;
}

bool Sequence::all_nonnegative() const {
    for (i64 v : values) if (v < 0) return false;
    return eventual.value_or(0) >= 0;
}

bool Sequence::operator==(const Sequence& o) const {
    int n = std::max(listed_size(), o.listed_size()) + 1;
    for (int i = 0; i < n; ++i)
        if (at(i) != o.at(i)) return false;
    return eventual.value_or(0) == o.eventual.value_or(0);
}

std::string Sequence::str() const {
    std::ostringstream os;
    os << '(';
    for (int i = 0; i < listed_size(); ++i) {
        if (i) os << ',';
        os << values[i];
    }
    if (eventual) os << ",...";
    os << ')';
    return os.str();
}

i64 binom(i64 n, i64 k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (i64 t = 1; t <= k; ++t) {
        r = r * static_cast<unsigned __int128>(n - k + t);
        r /= static_cast<unsigned __int128>(t);
        if (r > static_cast<unsigned __int128>(std::numeric_limits<i64>::max()))
            throw std::overflow_error("binomial coefficient exceeds 64-bit range");
    }
    return static_cast<i64>(r);
}

i64 BinomialExpansion::value() const {
    i64 v = 0;
    for (auto [m, k] : terms) v += binom(m, k);
    return v;
}

std::string BinomialExpansion::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i) os << "+";
        os << "C(" << terms[i].first << "," << terms[i].second << ")";
    }
    return os.str();
}

BinomialExpansion binomial_expansion(i64 a, i64 i) {
    if (a < 1 || i < 1) throw std::invalid_argument("binomial_expansion requires a >= 1, i >= 1");
    BinomialExpansion e;
    i64 rest = a;
    i64 k = i;
    while (rest > 0) {
        // largest m with C(m, k) <= rest; greedy is the defining property
        i64 m = k;
        while (binom(m + 1, k) <= rest) ++m;
        e.terms.emplace_back(m, k);
        rest -= binom(m, k);
        --k;
        if (k == 0 && rest > 0)
            throw std::logic_error("binomial expansion failed to terminate");
    }
    return e;
}

i64 macaulay_bound(i64 a, i64 i) {
    if (i < 1) throw std::invalid_argument("macaulay_bound requires i >= 1");
    if (a < 0) throw std::invalid_argument("macaulay_bound requires a >= 0");
    if (a == 0) return 0;
    i64 out = 0;
    for (auto [m, k] : binomial_expansion(a, i).terms) out += binom(m + 1, k + 1);
    return out;
}

OSequenceVerdict is_o_sequence(const Sequence& s) {
    if (s.at(0) != 1) return {false, 0, "a_0 != 1"};
    if (s.eventual.value_or(0) < 0) return {false, s.listed_size(), "negative tail"};
    // One step past the listed entries covers the constant tail: growth from
    // a value to itself never exceeds the Macaulay bound.
    int last = std::max(s.listed_size(), 2);
    for (int i = 1; i < last; ++i) {
        i64 cur = s.at(i), nxt = s.at(i + 1);
        if (cur < 0) return {false, i, "negative entry"};
        if (nxt < 0) return {false, i + 1, "negative entry"};
        if (nxt > macaulay_bound(cur, i)) {
            std::ostringstream os;
            os << "growth " << cur << " -> " << nxt << " in degree " << (i + 1)
               << " exceeds Macaulay bound " << macaulay_bound(cur, i);
            return {false, i + 1, os.str()};
        }
    }
    return {true, -1, ""};
}

Sequence difference(const Sequence& s, int k) {
    if (k < 1) throw std::invalid_argument("difference requires k >= 1");
    Sequence d;
    int n = s.listed_size();
    d.values.resize(n + 1);
    for (int i = 0; i <= n; ++i) d.values[i] = s.at(i) - s.at(i - 1);
    if (s.eventual) d.eventual = 0;
    // trim trailing entries equal to the implicit tail
    i64 tail = d.eventual.value_or(0);
    while (!d.values.empty() && d.values.back() == tail &&
           static_cast<int>(d.values.size()) > (d.eventual ? 1 : 0))
        d.values.pop_back();
    if (d.eventual && d.values.empty()) d.values.push_back(*d.eventual);
    return k == 1 ? d : difference(d, k - 1);
}

Sequence accumulate(const Sequence& s, int k) {
    if (k < 1) throw std::invalid_argument("accumulate requires k >= 1");
    if (s.eventual.value_or(0) != 0)
        throw std::invalid_argument("accumulate requires an eventually-zero sequence");
    Sequence a;
    a.values.resize(s.listed_size());
    i64 run = 0;
    for (int i = 0; i < s.listed_size(); ++i) {
        run += s.values[i];
        a.values[i] = run;
    }
    if (a.values.empty()) a.values.push_back(0);
    a.eventual = a.values.back();
    return k == 1 ? a : accumulate(a, k - 1);
}

i64 prefix_sum_at(const Sequence& s, int i) {
    i64 run = 0;
    for (int j = 0; j <= i; ++j) run += s.at(j);
    return run;
}

Sequence truncate_hf(const Sequence& h, i64 e) {
    if (e < 1) throw std::invalid_argument("truncate_hf requires e >= 1");
    Sequence t;
    bool reached = false;
    for (int i = 0; i < h.listed_size(); ++i) {
        t.values.push_back(std::min(h.values[i], e));
        if (h.values[i] >= e) { reached = true; break; }
    }
    if (!reached && h.eventual && *h.eventual >= e) {
        t.values.push_back(e);
        reached = true;
    }
    if (!reached) return h; // never reaches e: pointwise min is h itself
    t.eventual = e;
    return t;
}

bool wlp_feasible(const Sequence& h) {
    if (h.eventual.value_or(0) != 0)
        throw std::invalid_argument("wlp_feasible requires a finite h-vector");
    if (!h.all_nonnegative()) return false;
    // unimodal: never increases again after a strict decrease
    bool decreased = false;
    for (int i = 1; i <= h.listed_size(); ++i) {
        if (h.at(i) > h.at(i - 1) && decreased) return false;
        if (h.at(i) < h.at(i - 1)) decreased = true;
    }
    if (!is_o_sequence(h).pass) return false;
    // positive part of the first difference
    Sequence pos;
    for (int i = 0; i <= h.listed_size(); ++i) {
        i64 d = h.at(i) - h.at(i - 1);
        if (d <= 0) break;
        pos.values.push_back(d);
    }
    return is_o_sequence(pos).pass;
}

} // namespace bettipair
