#include "homprelie/search.hpp"

#include <random>

namespace homprelie {

namespace {

/// Number of candidates p^slots, or nullopt on overflow past the ceiling.
std::optional<std::uint64_t> pow_checked(std::uint64_t p, std::size_t slots, std::uint64_t ceiling) {
    std::uint64_t n = 1;
    for (std::size_t i = 0; i < slots; ++i) {
        if (n > ceiling / p) return std::nullopt;
        n *= p;
    }
    return n;
}

struct CandidateShape {
    std::size_t dim;
    Field field;
    std::vector<std::pair<std::size_t, std::size_t>> product_pairs;  // free (i,j) product slots
    std::size_t product_slots;  // product_pairs.size() * dim
    std::size_t alpha_slots;
    AlphaMode alpha_mode;
};

HomPreLieAlgebra build_candidate(const CandidateShape& shape, const std::vector<std::uint64_t>& digits) {
    HomPreLieAlgebra a(shape.dim, shape.field);
    std::size_t pos = 0;
    for (const auto& [i, j] : shape.product_pairs)
        for (std::size_t k = 0; k < shape.dim; ++k)
            a.c.at(i, j, k) = Scalar::residue(digits[pos++], shape.field);
    if (shape.alpha_mode == AlphaMode::identity) {
        a.alpha = Matrix::identity(shape.dim, shape.field);
    } else if (shape.alpha_mode == AlphaMode::free_entries) {
        for (std::size_t r = 0; r < shape.dim; ++r)
            for (std::size_t c = 0; c < shape.dim; ++c)
                a.alpha.at(r, c) = Scalar::residue(digits[pos++], shape.field);
    }
    return a;
}

bool passes(const HomPreLieAlgebra& a, const SearchSpec& spec, bool& valid) {
    AxiomReport report = check_axioms(a);
    valid = spec.require == RequireMode::prelie ? report.hom_prelie : report.hom_novikov;
    if (!valid) return false;
    if (spec.filter == FilterMode::none) return true;
    DerivedSubspaces d = derived_subspaces(a);
    return spec.filter == FilterMode::perfect ? d.perfect : d.alpha_perfect;
}

} // namespace

SearchSummary enumerate_algebras(const SearchSpec& spec,
                                 const std::function<void(const HomPreLieAlgebra&)>& visitor) {
    if (spec.dim == 0) throw ParseError("enumeration needs dimension >= 1");
    CandidateShape shape{spec.dim, Field::prime(spec.p), {}, 0, 0, spec.alpha};
    if (spec.product_mask) {
        for (const auto& [i, j] : *spec.product_mask)
            if (i >= spec.dim || j >= spec.dim)
                throw ParseError("product mask index out of range");
        shape.product_pairs = *spec.product_mask;
    } else {
        for (std::size_t i = 0; i < spec.dim; ++i)
            for (std::size_t j = 0; j < spec.dim; ++j)
                shape.product_pairs.emplace_back(i, j);
    }
    shape.product_slots = shape.product_pairs.size() * spec.dim;
    shape.alpha_slots = spec.alpha == AlphaMode::free_entries ? spec.dim * spec.dim : 0;
    const std::size_t slots = shape.product_slots + shape.alpha_slots;

    SearchSummary summary;
    auto consider = [&](const std::vector<std::uint64_t>& digits) {
        ++summary.candidates;
        HomPreLieAlgebra a = build_candidate(shape, digits);
        bool valid = false;
        bool keep = passes(a, spec, valid);
        if (valid) ++summary.valid;
        if (keep) {
            ++summary.filtered;
            if (visitor) visitor(a);
        }
    };

    if (spec.exhaustive) {
        auto total = pow_checked(spec.p, slots, spec.ceiling);
        if (!total)
            throw CheckError("candidate space exceeds the exhaustive ceiling; constrain alpha, "
                             "add a product mask, or use randomized sampling");
        std::vector<std::uint64_t> digits(slots, 0);
        for (std::uint64_t n = 0; n < *total; ++n) {
            consider(digits);
            // lexicographic odometer, least-significant slot last
            for (std::size_t k = slots; k-- > 0;) {
                if (++digits[k] < spec.p) break;
                digits[k] = 0;
            }
        }
    } else {
        std::mt19937_64 rng(spec.seed);
        std::vector<std::uint64_t> digits(slots, 0);
        for (std::uint64_t n = 0; n < spec.budget; ++n) {
            for (auto& d : digits) d = rng() % spec.p;
            consider(digits);
        }
    }
    return summary;
}

SplitSearchResult search_splitting(const Extension& e, std::uint64_t ceiling) {
    Extension ext = e.classified ? e : classify_extension(e);
    if (!ext.exact) throw CheckError("splitting search needs an exact extension");
    if (ext.total.field.is_rational())
        throw CheckError("splitting search runs over prime fields only");

    const std::uint64_t p = ext.total.field.p();
    const std::size_t slots = ext.total.dim * ext.quot.dim;
    auto total = pow_checked(p, slots, ceiling);
    if (!total) throw CheckError("splitting candidate space exceeds the ceiling");

    SplitSearchResult result;
    std::vector<std::uint64_t> digits(slots, 0);
    for (std::uint64_t n = 0; n < *total; ++n) {
        ++result.examined;
        Matrix sigma(ext.total.dim, ext.quot.dim, ext.total.field);
        std::size_t pos = 0;
        for (std::size_t r = 0; r < ext.total.dim; ++r)
            for (std::size_t c = 0; c < ext.quot.dim; ++c)
                sigma.at(r, c) = Scalar::residue(digits[pos++], ext.total.field);
        if (verify_splitting(ext, sigma)) {
            result.sigma = std::move(sigma);
            return result;
        }
        for (std::size_t k = slots; k-- > 0;) {
            if (++digits[k] < p) break;
            digits[k] = 0;
        }
    }
    return result;
}

} // namespace homprelie
