#pragma once

#include <cstdint>
#include <map>

namespace struclus {

/// Graph id -> class or cluster id. Noise is an ordinary id (-1 by convention).
using LabelVector = std::map<std::uint64_t, std::int64_t>;

/// 1 - VI(a, b) / ln N with natural logarithms; 1 means identical partitions.
/// Throws std::invalid_argument if the id sets differ or N < 2.
double nvi(const LabelVector& a, const LabelVector& b);

/// TP / sqrt((TP + FP)(TP + FN)) over item pairs. Two partitions without any
/// co-clustered pair are identical and score 1.
double fowlkes_mallows(const LabelVector& a, const LabelVector& b);

/// (1/N) sum over clusters of the largest class overlap. Not symmetric.
double purity(const LabelVector& clusters, const LabelVector& truth);

}  // namespace struclus
