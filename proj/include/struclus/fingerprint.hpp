#pragma once

#include <cstdint>
#include <vector>

#include "struclus/graph.hpp"

namespace struclus {

struct FingerprintConfig {
    std::size_t bits = 1024;
    std::size_t max_tree_edges = 6;
    std::size_t max_cycle_length = 8;
};

/// Fixed-length bitstring of hashed tree and cycle features.
class Fingerprint {
public:
    Fingerprint() = default;
    explicit Fingerprint(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

    void set(std::size_t position) { words_[position / 64] |= std::uint64_t{1} << (position % 64); }
    bool test(std::size_t position) const { return (words_[position / 64] >> (position % 64)) & 1U; }
    std::size_t length() const noexcept { return bits_; }
    std::size_t count() const noexcept;
    const std::vector<std::uint64_t>& words() const noexcept { return words_; }

    bool operator==(const Fingerprint&) const = default;

private:
    std::size_t bits_ = 0;
    std::vector<std::uint64_t> words_;
};

Fingerprint build_fingerprint(const LabeledGraph& g, const FingerprintConfig& cfg = {});

/// False only if the pattern has a feature bit that the target lacks, which
/// rules out a subgraph isomorphism. Throws std::invalid_argument when the
/// lengths differ.
bool filter_pass(const Fingerprint& pattern, const Fingerprint& target);

/// Canonical hashes of all features (before reduction to bit positions),
/// sorted and deduplicated. Exposed for testing feature-set monotonicity.
std::vector<std::uint64_t> fingerprint_features(const LabeledGraph& g, const FingerprintConfig& cfg = {});

}  // namespace struclus
