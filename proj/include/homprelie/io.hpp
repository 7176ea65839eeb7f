#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "homprelie/extensions.hpp"
#include "homprelie/homology.hpp"

namespace homprelie {
namespace io {

using json = nlohmann::ordered_json;

/// Field tag: "Q" or {"Fp": p}.
Field field_from_json(const json& j);
json field_to_json(const Field& f);

/// Algebra files use a sparse product list; absent products are zero.
/// {
///   "field": "Q" | {"Fp": p},
///   "dim": n,
///   "products": [{"i": i, "j": j, "result": [{"k": k, "c": "scalar"}]}],
///   "alpha": [["scalar", ...], ...],
///   "names": ["b1", ...]            // optional
/// }
HomPreLieAlgebra algebra_from_json(const json& j);
json algebra_to_json(const HomPreLieAlgebra& a);

HomPreLieAlgebra load_algebra(const std::filesystem::path& path);
void save_algebra(const HomPreLieAlgebra& a, const std::filesystem::path& path);

Matrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols, const Field& f);
json matrix_to_json(const Matrix& m);

/// {"m_dim": n, "lambda": [[[...]]], "rho": [[[...]]], "alpha_M": [[...]]}
/// combined with a base algebra supplied separately.
HomCoRepresentation corep_from_json(const json& j, const HomPreLieAlgebra& base);
json corep_to_json(const HomCoRepresentation& c);

/// {"source": <algebra file>, "target": <algebra file>, "matrix": [[...]]}
Morphism load_morphism(const std::filesystem::path& path);

/// {"sub": <file>, "total": <file>, "quot": <file>, "inj": [[...]], "proj": [[...]]}
/// with file references resolved relative to the extension file's directory.
Extension load_extension(const std::filesystem::path& path);

json subspace_to_json(const Subspace& s);
json subspace_to_json(const Subspace& s, const HomPreLieAlgebra& naming);

/// FNV-1a 64-bit digest of a file's bytes, as fixed-width hex.
std::string file_digest(const std::filesystem::path& path);

/// Read a whole file; throws ParseError when missing.
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& contents);
json parse_json_file(const std::filesystem::path& path);

} // namespace io
} // namespace homprelie
