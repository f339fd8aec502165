#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "signed_circular/signed_graph.hpp"

namespace sc {

inline constexpr int kMaxEnumerationOrder = 6;

/// Simple graphs on 1..max_n vertices, one per isomorphism class (brute-force
/// canonical form over all vertex permutations). Edges are listed in
/// lexicographic (u < v) order and signed +. Order: by n, then by canonical
/// edge mask.
std::vector<SignedGraph> enumerate_underlying_graphs(int max_n, bool connected_only);

/// Lexicographically least sign vector (+ before -, edge-list order) over all
/// 2^n switchings of g.
SignedGraph canonical_switching(const SignedGraph& g);

/// Streams every underlying graph from enumerate_underlying_graphs with one
/// representative per class of signatures under switching and automorphisms
/// of the underlying graph: the lexicographically least sign vector of the
/// class. Sign vectors are visited in increasing order. Single consumer.
class SignedGraphStream {
public:
    SignedGraphStream(int max_n, bool connected_only);

    std::optional<SignedGraph> next();

private:
    bool is_canonical(std::uint32_t mask) const;
    void load_underlying();

    std::vector<SignedGraph> underlying_;
    std::size_t current_ = 0;
    std::uint32_t next_mask_ = 0;
    std::vector<std::uint32_t> cut_masks_;
    std::vector<std::vector<int>> automorphisms_;
};

std::vector<SignedGraph> enumerate_signed_graphs(int max_n, bool connected_only = true);

} // namespace sc
