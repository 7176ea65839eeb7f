#include "homprelie/algebra.hpp"

namespace homprelie {

Vec StructureConstants::product(std::size_t i, std::size_t j) const {
    Vec v = vec_zero(dim_, field_);
    for (std::size_t k = 0; k < dim_; ++k) v[k] = at(i, j, k);
    return v;
}

HomPreLieAlgebra::HomPreLieAlgebra(std::size_t d, const Field& f)
    : dim(d), field(f), c(d, f), alpha(d, d, f) {}

Vec HomPreLieAlgebra::multiply(const Vec& x, const Vec& y) const {
    if (x.size() != dim || y.size() != dim) throw ParseError("operand dimension mismatch in multiply");
    Vec r = vec_zero(dim, field);
    for (std::size_t i = 0; i < dim; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim; ++j) {
            if (y[j].is_zero()) continue;
            Scalar coeff = x[i] * y[j];
            for (std::size_t k = 0; k < dim; ++k)
                r[k] += coeff * c.at(i, j, k);
        }
    }
    return r;
}

Matrix HomPreLieAlgebra::multiplication_map() const {
    Matrix m(dim, dim * dim, field);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            m.set_column(tensor_index(i, j, dim), c.product(i, j));
    return m;
}

std::string HomPreLieAlgebra::basis_name(std::size_t i) const {
    if (i < names.size() && !names[i].empty()) return names[i];
    return "e" + std::to_string(i);
}

AxiomReport check_axioms(const HomPreLieAlgebra& a) {
    AxiomReport report;
    report.hom_prelie = true;
    report.hom_novikov = true;
    for (std::size_t i = 0; i < a.dim && (report.hom_prelie || report.hom_novikov); ++i) {
        Vec ai = a.alpha.column(i);
        for (std::size_t j = 0; j < a.dim; ++j) {
            Vec aj = a.alpha.column(j);
            Vec pij = a.c.product(i, j);
            Vec pji = a.c.product(j, i);
            for (std::size_t k = 0; k < a.dim; ++k) {
                Vec ak = a.alpha.column(k);
                Vec pjk = a.c.product(j, k);
                Vec pik = a.c.product(i, k);
                if (report.hom_prelie) {
                    // alpha(x)(yz) - (xy)alpha(z) - alpha(y)(xz) + (yx)alpha(z)
                    Vec residual = a.multiply(ai, pjk);
                    residual = vec_sub(residual, a.multiply(pij, ak));
                    residual = vec_sub(residual, a.multiply(aj, pik));
                    residual = vec_add(residual, a.multiply(pji, ak));
                    if (!vec_is_zero(residual)) {
                        report.hom_prelie = false;
                        report.prelie_witness = IdentityWitness{{i, j, k}, residual};
                    }
                }
                if (report.hom_novikov) {
                    // (xy)alpha(z) - (xz)alpha(y)
                    Vec residual = vec_sub(a.multiply(pij, ak), a.multiply(pik, aj));
                    if (!vec_is_zero(residual)) {
                        report.hom_novikov = false;
                        report.novikov_witness = IdentityWitness{{i, j, k}, residual};
                    }
                }
                if (!report.hom_prelie && !report.hom_novikov) break;
            }
            if (!report.hom_prelie && !report.hom_novikov) break;
        }
    }
    if (!report.hom_prelie) report.hom_novikov = false;
    return report;
}

Subspace annihilator(const HomPreLieAlgebra& a) {
    // rows: for each basis e_j and output coordinate k, the conditions
    // (x e_j)_k = 0 and (e_j x)_k = 0, as linear forms in x.
    Matrix system(2 * a.dim * a.dim, a.dim, a.field);
    std::size_t r = 0;
    for (std::size_t j = 0; j < a.dim; ++j)
        for (std::size_t k = 0; k < a.dim; ++k, ++r)
            for (std::size_t i = 0; i < a.dim; ++i)
                system.at(r, i) = a.c.at(i, j, k);
    for (std::size_t j = 0; j < a.dim; ++j)
        for (std::size_t k = 0; k < a.dim; ++k, ++r)
            for (std::size_t i = 0; i < a.dim; ++i)
                system.at(r, i) = a.c.at(j, i, k);
    return kernel_image(system).first;
}

DerivedSubspaces derived_subspaces(const HomPreLieAlgebra& a) {
    DerivedSubspaces d;
    std::vector<Vec> products, twisted;
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j) {
            products.push_back(a.c.product(i, j));
            twisted.push_back(a.multiply(a.alpha.column(i), a.alpha.column(j)));
        }
    d.products = Subspace::span(a.dim, products, a.field);
    d.twisted_products = Subspace::span(a.dim, twisted, a.field);
    d.perfect = d.products.dim() == a.dim;
    d.alpha_perfect = d.twisted_products.dim() == a.dim;
    d.alpha_surjective = a.alpha.rank() == a.dim;
    return d;
}

MorphismReport check_morphism(const Morphism& m) {
    if (m.f.rows() != m.target.dim || m.f.cols() != m.source.dim)
        throw ParseError("morphism matrix shape mismatch");
    if (m.source.field != m.target.field)
        throw ParseError("morphism endpoints live over different fields");
    MorphismReport report;
    report.twist_ok = (m.f * m.source.alpha == m.target.alpha * m.f);
    bool products_ok = true;
    for (std::size_t i = 0; i < m.source.dim && products_ok; ++i)
        for (std::size_t j = 0; j < m.source.dim && products_ok; ++j) {
            Vec lhs = m.f.apply(m.source.c.product(i, j));
            Vec rhs = m.target.multiply(m.f.column(i), m.f.column(j));
            Vec residual = vec_sub(lhs, rhs);
            if (!vec_is_zero(residual)) {
                products_ok = false;
                report.product_witness = IdentityWitness{{i, j}, residual};
            }
        }
    report.is_morphism = products_ok && report.twist_ok;
    return report;
}

Morphism compose(const Morphism& g, const Morphism& f) {
    if (!(f.target == g.source)) throw ParseError("morphism composition endpoint mismatch");
    return Morphism{f.source, g.target, g.f * f.f};
}

Morphism identity_morphism(const HomPreLieAlgebra& a) {
    return Morphism{a, a, Matrix::identity(a.dim, a.field)};
}

bool is_hom_ideal(const HomPreLieAlgebra& a, const Subspace& h) {
    if (h.ambient_dim() != a.dim) throw ParseError("subspace ambient dimension mismatch");
    for (std::size_t r = 0; r < h.dim(); ++r) {
        Vec x = h.basis_vector(r);
        if (!h.contains(a.alpha.apply(x))) return false;
        for (std::size_t j = 0; j < a.dim; ++j) {
            Vec ej = vec_unit(a.dim, j, a.field);
            if (!h.contains(a.multiply(x, ej))) return false;
            if (!h.contains(a.multiply(ej, x))) return false;
        }
    }
    return true;
}

QuotientAlgebra quotient_algebra(const HomPreLieAlgebra& a, const Subspace& h) {
    if (h.ambient_dim() != a.dim) throw ParseError("subspace ambient dimension mismatch");
    for (std::size_t r = 0; r < h.dim(); ++r) {
        Vec x = h.basis_vector(r);
        if (!h.contains(a.alpha.apply(x)))
            throw CheckError("not a Hom-ideal: the twist moves " + format_vector(a, x) +
                             " to " + format_vector(a, a.alpha.apply(x)) + " outside the subspace");
        for (std::size_t j = 0; j < a.dim; ++j) {
            Vec ej = vec_unit(a.dim, j, a.field);
            if (!h.contains(a.multiply(x, ej)))
                throw CheckError("not a Hom-ideal: (" + format_vector(a, x) + ")(" + a.basis_name(j) +
                                 ") = " + format_vector(a, a.multiply(x, ej)) + " escapes the subspace");
            if (!h.contains(a.multiply(ej, x)))
                throw CheckError("not a Hom-ideal: (" + a.basis_name(j) + ")(" + format_vector(a, x) +
                                 ") = " + format_vector(a, a.multiply(ej, x)) + " escapes the subspace");
        }
    }
    QuotientSpace q = quotient_space(a.dim, h);
    HomPreLieAlgebra result(q.dim(), a.field);
    for (std::size_t x = 0; x < q.dim(); ++x) {
        Vec lx = q.lift().column(x);
        for (std::size_t y = 0; y < q.dim(); ++y) {
            Vec prod = q.project_vec(a.multiply(lx, q.lift().column(y)));
            for (std::size_t k = 0; k < q.dim(); ++k) result.c.at(x, y, k) = prod[k];
        }
    }
    result.alpha = q.project() * a.alpha * q.lift();
    Morphism projection{a, result, q.project()};
    return QuotientAlgebra{std::move(result), std::move(q), std::move(projection)};
}

ActionTensors::ActionTensors(std::size_t l_dim, std::size_t m_dim, const Field& f)
    : l_dim_(l_dim),
      m_dim_(m_dim),
      field_(f),
      lambda_(l_dim * m_dim * m_dim, Scalar::zero(f)),
      rho_(m_dim * l_dim * m_dim, Scalar::zero(f)) {}

Scalar& ActionTensors::lambda_at(std::size_t i, std::size_t a, std::size_t b) {
    return lambda_[(i * m_dim_ + a) * m_dim_ + b];
}
const Scalar& ActionTensors::lambda_at(std::size_t i, std::size_t a, std::size_t b) const {
    return lambda_[(i * m_dim_ + a) * m_dim_ + b];
}
Scalar& ActionTensors::rho_at(std::size_t a, std::size_t i, std::size_t b) {
    return rho_[(a * l_dim_ + i) * m_dim_ + b];
}
const Scalar& ActionTensors::rho_at(std::size_t a, std::size_t i, std::size_t b) const {
    return rho_[(a * l_dim_ + i) * m_dim_ + b];
}

Vec ActionTensors::left_action(const Vec& x, const Vec& m) const {
    if (x.size() != l_dim_ || m.size() != m_dim_) throw ParseError("action operand shape mismatch");
    Vec r = vec_zero(m_dim_, field_);
    for (std::size_t i = 0; i < l_dim_; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t a = 0; a < m_dim_; ++a) {
            if (m[a].is_zero()) continue;
            Scalar coeff = x[i] * m[a];
            for (std::size_t b = 0; b < m_dim_; ++b)
                r[b] += coeff * lambda_at(i, a, b);
        }
    }
    return r;
}

Vec ActionTensors::right_action(const Vec& m, const Vec& x) const {
    if (x.size() != l_dim_ || m.size() != m_dim_) throw ParseError("action operand shape mismatch");
    Vec r = vec_zero(m_dim_, field_);
    for (std::size_t a = 0; a < m_dim_; ++a) {
        if (m[a].is_zero()) continue;
        for (std::size_t i = 0; i < l_dim_; ++i) {
            if (x[i].is_zero()) continue;
            Scalar coeff = m[a] * x[i];
            for (std::size_t b = 0; b < m_dim_; ++b)
                r[b] += coeff * rho_at(a, i, b);
        }
    }
    return r;
}

Subspace derivation_space(const HomPreLieAlgebra& a, std::size_t m_dim, const ActionTensors& actions,
                          const Matrix& alpha_m) {
    if (actions.l_dim() != a.dim || actions.m_dim() != m_dim)
        throw ParseError("action tensor shape mismatch");
    if (alpha_m.rows() != m_dim || alpha_m.cols() != m_dim)
        throw ParseError("alpha_M shape mismatch");

    const std::size_t unknowns = m_dim * a.dim;  // d[b][j], row-major
    auto var = [&](std::size_t b, std::size_t j) { return b * a.dim + j; };

    std::vector<Vec> rows;
    // d(e_i e_j) - alpha_L(e_i).d(e_j) - d(e_i).alpha_L(e_j) = 0
    for (std::size_t i = 0; i < a.dim; ++i) {
        Vec alpha_ei = a.alpha.column(i);
        for (std::size_t j = 0; j < a.dim; ++j) {
            Vec alpha_ej = a.alpha.column(j);
            Vec pij = a.c.product(i, j);
            for (std::size_t b = 0; b < m_dim; ++b) {
                Vec row = vec_zero(unknowns, a.field);
                // d(e_i e_j)_b = sum_t (e_i e_j)_t d[b][t]
                for (std::size_t t = 0; t < a.dim; ++t)
                    row[var(b, t)] += pij[t];
                // (alpha(e_i) . d(e_j))_b = sum_{s,u} alpha(e_i)_s d[u][j] lambda[s][u][b]
                for (std::size_t s = 0; s < a.dim; ++s) {
                    if (alpha_ei[s].is_zero()) continue;
                    for (std::size_t u = 0; u < m_dim; ++u)
                        row[var(u, j)] -= alpha_ei[s] * actions.lambda_at(s, u, b);
                }
                // (d(e_i) . alpha(e_j))_b = sum_{u,s} d[u][i] alpha(e_j)_s rho[u][s][b]
                for (std::size_t s = 0; s < a.dim; ++s) {
                    if (alpha_ej[s].is_zero()) continue;
                    for (std::size_t u = 0; u < m_dim; ++u)
                        row[var(u, i)] -= alpha_ej[s] * actions.rho_at(u, s, b);
                }
                rows.push_back(std::move(row));
            }
        }
    }
    // (d o alpha_L)(e_j) - (alpha_M o d)(e_j) = 0
    for (std::size_t j = 0; j < a.dim; ++j) {
        Vec alpha_ej = a.alpha.column(j);
        for (std::size_t b = 0; b < m_dim; ++b) {
            Vec row = vec_zero(unknowns, a.field);
            for (std::size_t t = 0; t < a.dim; ++t)
                row[var(b, t)] += alpha_ej[t];
            for (std::size_t u = 0; u < m_dim; ++u)
                row[var(u, j)] -= alpha_m.at(b, u);
            rows.push_back(std::move(row));
        }
    }

    Matrix system = Matrix::from_rows(rows, unknowns, a.field);
    return kernel_image(system).first;
}

std::string format_vector(const HomPreLieAlgebra& a, const Vec& v) {
    if (v.size() != a.dim) throw ParseError("vector length mismatch in format_vector");
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        Scalar coeff = v[i];
        bool negative = false;
        Scalar neg = -coeff;
        // render "- c" rather than "+ -c"
        if (coeff.str().size() && coeff.str()[0] == '-') {
            negative = true;
            coeff = neg;
        }
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (coeff.is_one())
            out += a.basis_name(i);
        else
            out += coeff.str() + "*" + a.basis_name(i);
    }
    return out.empty() ? "0" : out;
}

HomPreLieAlgebra direct_sum(const HomPreLieAlgebra& a, const HomPreLieAlgebra& b) {
    if (a.field != b.field) throw ParseError("direct sum over different fields");
    HomPreLieAlgebra s(a.dim + b.dim, a.field);
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j)
            for (std::size_t k = 0; k < a.dim; ++k)
                s.c.at(i, j, k) = a.c.at(i, j, k);
    for (std::size_t i = 0; i < b.dim; ++i)
        for (std::size_t j = 0; j < b.dim; ++j)
            for (std::size_t k = 0; k < b.dim; ++k)
                s.c.at(a.dim + i, a.dim + j, a.dim + k) = b.c.at(i, j, k);
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j)
            s.alpha.at(i, j) = a.alpha.at(i, j);
    for (std::size_t i = 0; i < b.dim; ++i)
        for (std::size_t j = 0; j < b.dim; ++j)
            s.alpha.at(a.dim + i, a.dim + j) = b.alpha.at(i, j);
    for (std::size_t i = 0; i < a.dim; ++i) s.names.push_back(a.basis_name(i));
    for (std::size_t i = 0; i < b.dim; ++i) s.names.push_back(b.basis_name(i));
    return s;
}

namespace {

Scalar rational_to_fp(const Scalar& s, const Field& fp) {
    const Rational& r = s.rational_value();
    boost::multiprecision::cpp_int p(fp.p());
    boost::multiprecision::cpp_int num = boost::multiprecision::numerator(r) % p;
    boost::multiprecision::cpp_int den = boost::multiprecision::denominator(r) % p;
    if (num < 0) num += p;
    if (den < 0) den += p;
    if (den == 0) throw CheckError("denominator vanishes mod " + std::to_string(fp.p()));
    Scalar n = Scalar::residue(num.convert_to<std::uint64_t>(), fp);
    Scalar d = Scalar::residue(den.convert_to<std::uint64_t>(), fp);
    return n / d;
}

} // namespace

Matrix reduce_matrix_mod_p(const Matrix& m, std::uint64_t p) {
    if (!m.field().is_rational()) throw ParseError("mod-p reduction needs a rational input");
    Field fp = Field::prime(p);
    Matrix r(m.rows(), m.cols(), fp);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            r.at(i, j) = rational_to_fp(m.at(i, j), fp);
    return r;
}

HomPreLieAlgebra reduce_mod_p(const HomPreLieAlgebra& a, std::uint64_t p) {
    if (!a.field.is_rational()) throw ParseError("mod-p reduction needs a rational input");
    Field fp = Field::prime(p);
    HomPreLieAlgebra r(a.dim, fp);
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j)
            for (std::size_t k = 0; k < a.dim; ++k)
                r.c.at(i, j, k) = rational_to_fp(a.c.at(i, j, k), fp);
    r.alpha = reduce_matrix_mod_p(a.alpha, p);
    r.names = a.names;
    return r;
}

} // namespace homprelie
