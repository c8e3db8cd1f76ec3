#include "struclus/eval.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace struclus {

namespace {

struct Contingency {
    std::map<std::pair<std::int64_t, std::int64_t>, double> joint;
    std::map<std::int64_t, double> rows, cols;
    double n = 0;
};

Contingency contingency(const LabelVector& a, const LabelVector& b, std::size_t min_items) {
    if (a.size() != b.size()) throw std::invalid_argument("label vectors cover different ids");
    if (a.size() < min_items) throw std::invalid_argument("too few items to compare");
    Contingency t;
    auto ib = b.begin();
    for (const auto& [id, la] : a) {
        if (ib->first != id) throw std::invalid_argument("label vectors cover different ids");
        ++t.joint[{la, ib->second}];
        ++t.rows[la];
        ++t.cols[ib->second];
        ++ib;
    }
    t.n = static_cast<double>(a.size());
    return t;
}

double pairs(double c) { return c * (c - 1) / 2; }

}  // namespace

double nvi(const LabelVector& a, const LabelVector& b) {
    const auto t = contingency(a, b, 2);
    double ha = 0, hb = 0, mi = 0;
    for (const auto& [_, c] : t.rows) ha -= c / t.n * std::log(c / t.n);
    for (const auto& [_, c] : t.cols) hb -= c / t.n * std::log(c / t.n);
    for (const auto& [key, c] : t.joint)
        mi += c / t.n * std::log(c * t.n / (t.rows.at(key.first) * t.cols.at(key.second)));
    const double vi = std::max(0.0, ha + hb - 2 * mi);
    return 1.0 - vi / std::log(t.n);
}

double fowlkes_mallows(const LabelVector& a, const LabelVector& b) {
    const auto t = contingency(a, b, 1);
    double tp = 0, pa = 0, pb = 0;
    for (const auto& [_, c] : t.joint) tp += pairs(c);
    for (const auto& [_, c] : t.rows) pa += pairs(c);
    for (const auto& [_, c] : t.cols) pb += pairs(c);
    if (pa == 0 && pb == 0) return 1.0;
    if (pa == 0 || pb == 0) return 0.0;
    return tp / std::sqrt(pa * pb);
}

double purity(const LabelVector& clusters, const LabelVector& truth) {
    const auto t = contingency(clusters, truth, 1);
    std::map<std::int64_t, double> best;
    for (const auto& [key, c] : t.joint) best[key.first] = std::max(best[key.first], c);
    double sum = 0;
    for (const auto& [_, c] : best) sum += c;
    return sum / t.n;
}

}  // namespace struclus
