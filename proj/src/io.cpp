#include "homprelie/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace homprelie {
namespace io {

namespace {

bool is_count(const json& j) {
    return j.is_number_unsigned() || (j.is_number_integer() && j.get<long long>() >= 0);
}

} // namespace

Field field_from_json(const json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() == "Q") return Field::rationals();
        throw ParseError("unknown field tag '" + j.get<std::string>() + "'");
    }
    if (j.is_object() && j.contains("Fp")) {
        if (!is_count(j["Fp"])) throw ParseError("Fp modulus must be a positive integer");
        return Field::prime(j["Fp"].get<std::uint64_t>());
    }
    throw ParseError("field must be \"Q\" or {\"Fp\": p}");
}

json field_to_json(const Field& f) {
    if (f.is_rational()) return json("Q");
    return json{{"Fp", f.p()}};
}

namespace {

std::size_t index_from(const json& j, const char* key, std::size_t bound, const char* what) {
    if (!j.contains(key) || !is_count(j[key]))
        throw ParseError(std::string(what) + ": missing or non-integer index '" + key + "'");
    std::size_t v = j[key].get<std::size_t>();
    if (v >= bound)
        throw ParseError(std::string(what) + ": index " + std::to_string(v) + " out of range");
    return v;
}

Scalar scalar_from(const json& j, const Field& f, const char* what) {
    if (!j.is_string()) throw ParseError(std::string(what) + ": scalars must be strings");
    return Scalar::parse(j.get<std::string>(), f);
}

} // namespace

HomPreLieAlgebra algebra_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("algebra: expected a JSON object");
    if (!j.contains("field") || !j.contains("dim")) throw ParseError("algebra: 'field' and 'dim' required");
    Field f = field_from_json(j["field"]);
    if (!is_count(j["dim"])) throw ParseError("algebra: 'dim' must be a count");
    std::size_t dim = j["dim"].get<std::size_t>();

    HomPreLieAlgebra a(dim, f);
    std::set<std::pair<std::size_t, std::size_t>> seen;
    if (j.contains("products")) {
        if (!j["products"].is_array()) throw ParseError("algebra: 'products' must be an array");
        for (const auto& entry : j["products"]) {
            std::size_t i = index_from(entry, "i", dim, "products");
            std::size_t jj = index_from(entry, "j", dim, "products");
            if (!seen.insert({i, jj}).second)
                throw ParseError("algebra: duplicate product entry (" + std::to_string(i) + "," +
                                 std::to_string(jj) + ")");
            if (!entry.contains("result") || !entry["result"].is_array())
                throw ParseError("products: 'result' must be an array");
            std::set<std::size_t> seen_k;
            for (const auto& term : entry["result"]) {
                std::size_t k = index_from(term, "k", dim, "products result");
                if (!seen_k.insert(k).second)
                    throw ParseError("products: duplicate result index k=" + std::to_string(k));
                if (!term.contains("c")) throw ParseError("products result: missing 'c'");
                a.c.at(i, jj, k) = scalar_from(term["c"], f, "products result");
            }
        }
    }

    if (!j.contains("alpha")) throw ParseError("algebra: 'alpha' required");
    a.alpha = matrix_from_json(j["alpha"], dim, dim, f);

    if (j.contains("names")) {
        if (!j["names"].is_array() || j["names"].size() != dim)
            throw ParseError("algebra: 'names' must list one label per basis vector");
        for (const auto& n : j["names"]) {
            if (!n.is_string()) throw ParseError("algebra: names must be strings");
            a.names.push_back(n.get<std::string>());
        }
    }
    return a;
}

json algebra_to_json(const HomPreLieAlgebra& a) {
    json j;
    j["field"] = field_to_json(a.field);
    j["dim"] = a.dim;
    json products = json::array();
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t jj = 0; jj < a.dim; ++jj) {
            json result = json::array();
            for (std::size_t k = 0; k < a.dim; ++k)
                if (!a.c.at(i, jj, k).is_zero())
                    result.push_back(json{{"k", k}, {"c", a.c.at(i, jj, k).str()}});
            if (!result.empty())
                products.push_back(json{{"i", i}, {"j", jj}, {"result", result}});
        }
    j["products"] = products;
    j["alpha"] = matrix_to_json(a.alpha);
    if (!a.names.empty()) j["names"] = a.names;
    return j;
}

Matrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols, const Field& f) {
    if (!j.is_array() || j.size() != rows) throw ParseError("matrix: wrong row count");
    Matrix m(rows, cols, f);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!j[r].is_array() || j[r].size() != cols) throw ParseError("matrix: wrong column count");
        for (std::size_t c = 0; c < cols; ++c)
            m.at(r, c) = scalar_from(j[r][c], f, "matrix");
    }
    return m;
}

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
        rows.push_back(row);
    }
    return rows;
}

namespace {

void fill_action_tensor(const json& j, const char* what, std::size_t d0, std::size_t d1, std::size_t d2,
                        const Field& f, const std::function<Scalar&(std::size_t, std::size_t, std::size_t)>& slot) {
    if (!j.is_array() || j.size() != d0) throw ParseError(std::string(what) + ": wrong outer size");
    for (std::size_t x = 0; x < d0; ++x) {
        if (!j[x].is_array() || j[x].size() != d1) throw ParseError(std::string(what) + ": wrong middle size");
        for (std::size_t y = 0; y < d1; ++y) {
            if (!j[x][y].is_array() || j[x][y].size() != d2)
                throw ParseError(std::string(what) + ": wrong inner size");
            for (std::size_t z = 0; z < d2; ++z)
                slot(x, y, z) = scalar_from(j[x][y][z], f, what);
        }
    }
}

} // namespace

HomCoRepresentation corep_from_json(const json& j, const HomPreLieAlgebra& base) {
    if (!j.is_object()) throw ParseError("co-representation: expected a JSON object");
    if (!j.contains("m_dim") || !is_count(j["m_dim"]))
        throw ParseError("co-representation: 'm_dim' required");
    HomCoRepresentation c;
    c.base = base;
    c.m_dim = j["m_dim"].get<std::size_t>();
    c.actions = ActionTensors(base.dim, c.m_dim, base.field);
    if (!j.contains("lambda") || !j.contains("rho") || !j.contains("alpha_M"))
        throw ParseError("co-representation: 'lambda', 'rho' and 'alpha_M' required");
    fill_action_tensor(j["lambda"], "lambda", base.dim, c.m_dim, c.m_dim, base.field,
                       [&](std::size_t x, std::size_t y, std::size_t z) -> Scalar& {
                           return c.actions.lambda_at(x, y, z);
                       });
    fill_action_tensor(j["rho"], "rho", c.m_dim, base.dim, c.m_dim, base.field,
                       [&](std::size_t x, std::size_t y, std::size_t z) -> Scalar& {
                           return c.actions.rho_at(x, y, z);
                       });
    c.alpha_m = matrix_from_json(j["alpha_M"], c.m_dim, c.m_dim, base.field);
    return c;
}

json corep_to_json(const HomCoRepresentation& c) {
    json j;
    j["m_dim"] = c.m_dim;
    json lambda = json::array(), rho = json::array();
    for (std::size_t x = 0; x < c.base.dim; ++x) {
        json mid = json::array();
        for (std::size_t a = 0; a < c.m_dim; ++a) {
            json inner = json::array();
            for (std::size_t b = 0; b < c.m_dim; ++b) inner.push_back(c.actions.lambda_at(x, a, b).str());
            mid.push_back(inner);
        }
        lambda.push_back(mid);
    }
    for (std::size_t a = 0; a < c.m_dim; ++a) {
        json mid = json::array();
        for (std::size_t x = 0; x < c.base.dim; ++x) {
            json inner = json::array();
            for (std::size_t b = 0; b < c.m_dim; ++b) inner.push_back(c.actions.rho_at(a, x, b).str());
            mid.push_back(inner);
        }
        rho.push_back(mid);
    }
    j["lambda"] = lambda;
    j["rho"] = rho;
    j["alpha_M"] = matrix_to_json(c.alpha_m);
    return j;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write file: " + path.string());
    out << contents;
}

json parse_json_file(const std::filesystem::path& path) {
    try {
        return json::parse(read_file(path));
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("invalid JSON in " + path.string() + ": " + e.what());
    }
}

HomPreLieAlgebra load_algebra(const std::filesystem::path& path) {
    return algebra_from_json(parse_json_file(path));
}

void save_algebra(const HomPreLieAlgebra& a, const std::filesystem::path& path) {
    write_file(path, algebra_to_json(a).dump(2) + "\n");
}

namespace {

std::filesystem::path sibling(const std::filesystem::path& base, const std::string& ref) {
    std::filesystem::path p(ref);
    if (p.is_absolute()) return p;
    return base.parent_path() / p;
}

std::string string_field(const json& j, const char* key, const char* what) {
    if (!j.contains(key) || !j[key].is_string())
        throw ParseError(std::string(what) + ": '" + key + "' must be a file path string");
    return j[key].get<std::string>();
}

} // namespace

Morphism load_morphism(const std::filesystem::path& path) {
    json j = parse_json_file(path);
    Morphism m;
    m.source = load_algebra(sibling(path, string_field(j, "source", "morphism")));
    m.target = load_algebra(sibling(path, string_field(j, "target", "morphism")));
    if (!j.contains("matrix")) throw ParseError("morphism: 'matrix' required");
    m.f = matrix_from_json(j["matrix"], m.target.dim, m.source.dim, m.source.field);
    return m;
}

Extension load_extension(const std::filesystem::path& path) {
    json j = parse_json_file(path);
    Extension e;
    e.sub = load_algebra(sibling(path, string_field(j, "sub", "extension")));
    e.total = load_algebra(sibling(path, string_field(j, "total", "extension")));
    e.quot = load_algebra(sibling(path, string_field(j, "quot", "extension")));
    if (!j.contains("inj") || !j.contains("proj")) throw ParseError("extension: 'inj' and 'proj' required");
    e.inj = matrix_from_json(j["inj"], e.total.dim, e.sub.dim, e.total.field);
    e.proj = matrix_from_json(j["proj"], e.quot.dim, e.total.dim, e.total.field);
    return e;
}

json subspace_to_json(const Subspace& s) {
    json j;
    j["ambient_dim"] = s.ambient_dim();
    j["dim"] = s.dim();
    j["basis"] = matrix_to_json(s.basis());
    return j;
}

json subspace_to_json(const Subspace& s, const HomPreLieAlgebra& naming) {
    json j = subspace_to_json(s);
    json named = json::array();
    for (std::size_t r = 0; r < s.dim(); ++r)
        named.push_back(format_vector(naming, s.basis_vector(r)));
    j["named_basis"] = named;
    return j;
}

std::string file_digest(const std::filesystem::path& path) {
    std::string bytes = read_file(path);
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

} // namespace io
} // namespace homprelie
