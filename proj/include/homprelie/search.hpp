#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "homprelie/extensions.hpp"

namespace homprelie {

enum class AlphaMode { zero, identity, free_entries };
enum class RequireMode { prelie, novikov };
enum class FilterMode { none, perfect, alpha_perfect };

/// Enumeration request over F_p. Exhaustive mode walks the candidate space in
/// lexicographic order over the tensor entries (products first, then alpha)
/// and refuses spaces above the ceiling; randomized mode samples `budget`
/// candidates from a seeded generator and is reproducible for a fixed seed.
struct SearchSpec {
    std::size_t dim = 2;
    std::uint64_t p = 2;
    AlphaMode alpha = AlphaMode::zero;
    RequireMode require = RequireMode::prelie;
    FilterMode filter = FilterMode::none;
    bool exhaustive = true;
    std::uint64_t budget = 10000;        // randomized candidates
    std::uint64_t seed = 0;              // randomized generator seed
    std::uint64_t ceiling = 1u << 24;    // exhaustive candidate limit
    /// Optional sparsity mask: product pairs (i, j) allowed to be nonzero.
    /// Needed to bring dim-3 spaces under the ceiling.
    std::optional<std::vector<std::pair<std::size_t, std::size_t>>> product_mask;
};

struct SearchSummary {
    std::uint64_t candidates = 0;  // examined
    std::uint64_t valid = 0;       // passing the required identity
    std::uint64_t filtered = 0;    // additionally passing the filter
};

/// Streams every structure passing the identity and filter to the visitor, in
/// deterministic order. Counts are labeled (no isomorphism deduplication).
SearchSummary enumerate_algebras(const SearchSpec& spec,
                                 const std::function<void(const HomPreLieAlgebra&)>& visitor);

struct SplitSearchResult {
    std::optional<Matrix> sigma;  // first section found in lexicographic order
    std::uint64_t examined = 0;
};

/// Exhaustive search for a splitting of an exact extension over F_p; the
/// candidate space p^(dim K * dim L) must stay under the ceiling.
SplitSearchResult search_splitting(const Extension& e, std::uint64_t ceiling = 1u << 24);

} // namespace homprelie
