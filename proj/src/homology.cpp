#include "homprelie/homology.hpp"

namespace homprelie {

bool HomCoRepresentation::is_trivial() const {
    for (std::size_t i = 0; i < base.dim; ++i)
        for (std::size_t a = 0; a < m_dim; ++a)
            for (std::size_t b = 0; b < m_dim; ++b)
                if (!actions.lambda_at(i, a, b).is_zero() || !actions.rho_at(a, i, b).is_zero())
                    return false;
    return true;
}

HomCoRepresentation trivial_corep(const HomPreLieAlgebra& a, std::size_t m_dim) {
    HomCoRepresentation c;
    c.base = a;
    c.m_dim = m_dim;
    c.actions = ActionTensors(a.dim, m_dim, a.field);
    c.alpha_m = Matrix::identity(m_dim, a.field);
    return c;
}

HomCoRepresentation self_corep(const HomPreLieAlgebra& a) {
    HomCoRepresentation c;
    c.base = a;
    c.m_dim = a.dim;
    c.actions = ActionTensors(a.dim, a.dim, a.field);
    // x.m = mx and m.x = mx
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t m = 0; m < a.dim; ++m)
            for (std::size_t b = 0; b < a.dim; ++b) {
                c.actions.lambda_at(i, m, b) = a.c.at(m, i, b);
                c.actions.rho_at(m, i, b) = a.c.at(m, i, b);
            }
    c.alpha_m = a.alpha;
    return c;
}

CoRepReport check_corepresentation(const HomCoRepresentation& c) {
    const HomPreLieAlgebra& L = c.base;
    if (c.actions.l_dim() != L.dim || c.actions.m_dim() != c.m_dim)
        throw ParseError("action tensor shape mismatch");
    if (c.alpha_m.rows() != c.m_dim || c.alpha_m.cols() != c.m_dim)
        throw ParseError("alpha_M shape mismatch");

    CoRepReport report;
    auto fail = [&](char axiom, std::vector<std::size_t> idx, Vec residual) {
        report.valid = false;
        report.failed_axiom = axiom;
        report.witness = std::move(idx);
        report.residual = std::move(residual);
    };

    // pair axioms (d), (e): x in L, m in M
    for (std::size_t x = 0; x < L.dim; ++x) {
        Vec ex = vec_unit(L.dim, x, L.field);
        Vec ax = L.alpha.column(x);
        for (std::size_t m = 0; m < c.m_dim; ++m) {
            Vec em = vec_unit(c.m_dim, m, L.field);
            Vec am = c.alpha_m.column(m);
            Vec d_lhs = c.alpha_m.apply(c.actions.left_action(ex, em));
            Vec d_rhs = c.actions.left_action(ax, am);
            if (!vec_is_zero(vec_sub(d_lhs, d_rhs))) {
                fail('d', {x, m}, vec_sub(d_lhs, d_rhs));
                return report;
            }
            Vec e_lhs = c.alpha_m.apply(c.actions.right_action(em, ex));
            Vec e_rhs = c.actions.right_action(am, ax);
            if (!vec_is_zero(vec_sub(e_lhs, e_rhs))) {
                fail('e', {x, m}, vec_sub(e_lhs, e_rhs));
                return report;
            }
        }
    }

    // triple axioms (a), (b), (c): x, y in L, m in M
    for (std::size_t x = 0; x < L.dim; ++x) {
        Vec ex = vec_unit(L.dim, x, L.field);
        Vec ax = L.alpha.column(x);
        for (std::size_t y = 0; y < L.dim; ++y) {
            Vec ey = vec_unit(L.dim, y, L.field);
            Vec ay = L.alpha.column(y);
            Vec pxy = L.c.product(x, y);
            for (std::size_t m = 0; m < c.m_dim; ++m) {
                Vec em = vec_unit(c.m_dim, m, L.field);
                Vec am = c.alpha_m.column(m);
                // (a) alpha_M(m).(xy) = (m.x).alpha_L(y)
                Vec a_lhs = c.actions.right_action(am, pxy);
                Vec a_rhs = c.actions.right_action(c.actions.right_action(em, ex), ay);
                if (!vec_is_zero(vec_sub(a_lhs, a_rhs))) {
                    fail('a', {x, y, m}, vec_sub(a_lhs, a_rhs));
                    return report;
                }
                // (b) (xy).alpha_M(m) = alpha_L(x).(y.m)
                Vec b_lhs = c.actions.left_action(pxy, am);
                Vec b_rhs = c.actions.left_action(ax, c.actions.left_action(ey, em));
                if (!vec_is_zero(vec_sub(b_lhs, b_rhs))) {
                    fail('b', {x, y, m}, vec_sub(b_lhs, b_rhs));
                    return report;
                }
                // (c) alpha_L(x).(m.y) = (x.m).alpha_L(y)
                Vec c_lhs = c.actions.left_action(ax, c.actions.right_action(em, ey));
                Vec c_rhs = c.actions.right_action(c.actions.left_action(ex, em), ay);
                if (!vec_is_zero(vec_sub(c_lhs, c_rhs))) {
                    fail('c', {x, y, m}, vec_sub(c_lhs, c_rhs));
                    return report;
                }
            }
        }
    }
    report.valid = true;
    return report;
}

namespace {

/// Adds coeff * (m (x) x1 (x) ... (x) xn) into a chain-space column.
void accumulate_tensor(Vec& column, const Scalar& coeff, const std::vector<const Vec*>& factors,
                       const std::vector<std::size_t>& dims) {
    if (coeff.is_zero()) return;
    std::vector<std::size_t> idx(factors.size(), 0);
    while (true) {
        Scalar value = coeff;
        for (std::size_t k = 0; k < factors.size() && !value.is_zero(); ++k)
            value *= (*factors[k])[idx[k]];
        if (!value.is_zero())
            column[tensor_index_multi(idx, dims)] += value;
        std::size_t k = factors.size();
        while (k > 0) {
            --k;
            if (++idx[k] < dims[k]) break;
            idx[k] = 0;
            if (k == 0) return;
        }
    }
}

} // namespace

Matrix differential(const HomCoRepresentation& c, int n) {
    const HomPreLieAlgebra& L = c.base;
    const Field& f = L.field;
    const std::size_t ld = L.dim, md = c.m_dim;
    Scalar plus = Scalar::one(f), minus = -Scalar::one(f);

    if (n == 1) {
        // d1(m (x) x1) = m.x1 - x1.m
        Matrix d(md, md * ld, f);
        for (std::size_t m = 0; m < md; ++m) {
            Vec em = vec_unit(md, m, f);
            for (std::size_t x1 = 0; x1 < ld; ++x1) {
                Vec ex1 = vec_unit(ld, x1, f);
                Vec img = vec_sub(c.actions.right_action(em, ex1), c.actions.left_action(ex1, em));
                d.set_column(tensor_index_multi({m, x1}, {md, ld}), img);
            }
        }
        return d;
    }

    if (n == 2) {
        // d2(m (x) x1 (x) x2) = m.x1 (x) a(x2) + x2.m (x) a(x1) - a_M(m) (x) x1x2
        Matrix d(md * ld, md * ld * ld, f);
        std::vector<std::size_t> cod_dims{md, ld};
        for (std::size_t m = 0; m < md; ++m) {
            Vec em = vec_unit(md, m, f);
            Vec am = c.alpha_m.column(m);
            for (std::size_t x1 = 0; x1 < ld; ++x1) {
                Vec ex1 = vec_unit(ld, x1, f);
                Vec ax1 = L.alpha.column(x1);
                for (std::size_t x2 = 0; x2 < ld; ++x2) {
                    Vec ex2 = vec_unit(ld, x2, f);
                    Vec ax2 = L.alpha.column(x2);
                    Vec p12 = L.c.product(x1, x2);
                    Vec col = vec_zero(md * ld, f);
                    Vec mx1 = c.actions.right_action(em, ex1);
                    Vec x2m = c.actions.left_action(ex2, em);
                    accumulate_tensor(col, plus, {&mx1, &ax2}, cod_dims);
                    accumulate_tensor(col, plus, {&x2m, &ax1}, cod_dims);
                    accumulate_tensor(col, minus, {&am, &p12}, cod_dims);
                    d.set_column(tensor_index_multi({m, x1, x2}, {md, ld, ld}), col);
                }
            }
        }
        return d;
    }

    if (n == 3) {
        // d3(m (x) x1 (x) x2 (x) x3), all eight terms as printed:
        //   + a_M(m) (x) a(x1) (x) x2x3   - a_M(m) (x) x1x2 (x) a(x3)
        //   - a_M(m) (x) a(x2) (x) x1x3   + a_M(m) (x) x2x1 (x) a(x3)
        //   + m.x1 (x) a(x2) (x) a(x3)    - x3.m (x) a(x1) (x) a(x2)
        //   - m.x2 (x) a(x1) (x) a(x3)    + x3.m (x) a(x2) (x) a(x1)
        Matrix d(md * ld * ld, md * ld * ld * ld, f);
        std::vector<std::size_t> cod_dims{md, ld, ld};
        for (std::size_t m = 0; m < md; ++m) {
            Vec em = vec_unit(md, m, f);
            Vec am = c.alpha_m.column(m);
            for (std::size_t x1 = 0; x1 < ld; ++x1) {
                Vec ex1 = vec_unit(ld, x1, f);
                Vec ax1 = L.alpha.column(x1);
                for (std::size_t x2 = 0; x2 < ld; ++x2) {
                    Vec ex2 = vec_unit(ld, x2, f);
                    Vec ax2 = L.alpha.column(x2);
                    for (std::size_t x3 = 0; x3 < ld; ++x3) {
                        Vec ex3 = vec_unit(ld, x3, f);
                        Vec ax3 = L.alpha.column(x3);
                        Vec p23 = L.c.product(x2, x3);
                        Vec p12 = L.c.product(x1, x2);
                        Vec p13 = L.c.product(x1, x3);
                        Vec p21 = L.c.product(x2, x1);
                        Vec mx1 = c.actions.right_action(em, ex1);
                        Vec mx2 = c.actions.right_action(em, ex2);
                        Vec x3m = c.actions.left_action(ex3, em);
                        Vec col = vec_zero(md * ld * ld, f);
                        accumulate_tensor(col, plus, {&am, &ax1, &p23}, cod_dims);
                        accumulate_tensor(col, minus, {&am, &p12, &ax3}, cod_dims);
                        accumulate_tensor(col, minus, {&am, &ax2, &p13}, cod_dims);
                        accumulate_tensor(col, plus, {&am, &p21, &ax3}, cod_dims);
                        accumulate_tensor(col, plus, {&mx1, &ax2, &ax3}, cod_dims);
                        accumulate_tensor(col, minus, {&x3m, &ax1, &ax2}, cod_dims);
                        accumulate_tensor(col, minus, {&mx2, &ax1, &ax3}, cod_dims);
                        accumulate_tensor(col, plus, {&x3m, &ax2, &ax1}, cod_dims);
                        d.set_column(tensor_index_multi({m, x1, x2, x3}, {md, ld, ld, ld}), col);
                    }
                }
            }
        }
        return d;
    }

    throw ParseError("differential degree must be 1, 2 or 3");
}

ChainComplex::ChainComplex(HomCoRepresentation corep) : corep_(std::move(corep)) {
    CoRepReport r = check_corepresentation(corep_);
    if (!r.valid)
        throw CheckError(std::string("co-representation axiom (") + r.failed_axiom + ") fails");
    d1_ = differential(corep_, 1);
    d2_ = differential(corep_, 2);
    d3_ = differential(corep_, 3);
    if (!(d1_ * d2_).is_zero() || !(d2_ * d3_).is_zero())
        throw InternalError("complex property d.d = 0 violated for a validated co-representation");
}

std::size_t ChainComplex::space_dim(int n) const {
    if (n < 0 || n > 3) throw ParseError("chain degree out of range");
    std::size_t dim = corep_.m_dim;
    for (int k = 0; k < n; ++k) dim *= corep_.base.dim;
    return dim;
}

const Matrix& ChainComplex::d(int n) const {
    switch (n) {
        case 1: return d1_;
        case 2: return d2_;
        case 3: return d3_;
        default: throw ParseError("differential degree must be 1, 2 or 3");
    }
}

HomologyResult homology(const HomCoRepresentation& c, int n) {
    return homology(ChainComplex(c), n);
}

HomologyResult homology(const ChainComplex& cc, int n) {
    if (n < 0 || n > 2) throw ParseError("homology degree must be 0, 1 or 2");
    const Field& f = cc.corep().base.field;

    Subspace kernel = n == 0 ? Subspace::full(cc.space_dim(0), f)
                             : kernel_image(cc.d(n)).first;
    Subspace image = kernel_image(cc.d(n + 1)).second;

    // express im d_(n+1) in kernel coordinates
    std::vector<Vec> image_in_kernel;
    for (std::size_t r = 0; r < image.dim(); ++r) {
        auto coords = kernel.coordinates(image.basis_vector(r));
        if (!coords)
            throw InternalError("image of d_(n+1) escapes the kernel of d_n");
        image_in_kernel.push_back(*coords);
    }
    Subspace denom = Subspace::span(kernel.dim(), image_in_kernel, f);
    QuotientSpace q = quotient_space(kernel.dim(), denom);

    HomologyResult result{n, q.dim(), {}, q};
    for (std::size_t j = 0; j < q.dim(); ++j) {
        // lift to kernel coordinates, then to the chain space
        Vec in_kernel = q.lift().column(j);
        Vec ambient = vec_zero(kernel.ambient_dim(), f);
        for (std::size_t r = 0; r < kernel.dim(); ++r)
            ambient = vec_add(ambient, vec_scale(in_kernel[r], kernel.basis_vector(r)));
        result.representatives.push_back(std::move(ambient));
    }
    return result;
}

std::size_t hl0_closed_form(const HomCoRepresentation& c) {
    const Field& f = c.base.field;
    std::vector<Vec> spanning;
    for (std::size_t m = 0; m < c.m_dim; ++m) {
        Vec em = vec_unit(c.m_dim, m, f);
        for (std::size_t l = 0; l < c.base.dim; ++l) {
            Vec el = vec_unit(c.base.dim, l, f);
            spanning.push_back(vec_sub(c.actions.right_action(em, el), c.actions.left_action(el, em)));
        }
    }
    return c.m_dim - Subspace::span(c.m_dim, spanning, f).dim();
}

std::size_t hl1_closed_form_trivial(const HomCoRepresentation& c) {
    if (!c.is_trivial())
        throw CheckError("closed form for degree 1 needs a trivial co-representation");
    const Field& f = c.base.field;
    const std::size_t ld = c.base.dim, md = c.m_dim;

    // denominator alpha_M(M) (x) LL inside M (x) L
    std::vector<Vec> ll_span;
    for (std::size_t i = 0; i < ld; ++i)
        for (std::size_t j = 0; j < ld; ++j)
            ll_span.push_back(c.base.c.product(i, j));
    Subspace ll = Subspace::span(ld, ll_span, f);

    std::vector<Vec> denom;
    for (std::size_t m = 0; m < md; ++m) {
        Vec am = c.alpha_m.column(m);
        for (std::size_t r = 0; r < ll.dim(); ++r) {
            Vec v = ll.basis_vector(r);
            Vec t = vec_zero(md * ld, f);
            for (std::size_t a = 0; a < md; ++a)
                for (std::size_t b = 0; b < ld; ++b)
                    t[tensor_index(a, b, ld)] = am[a] * v[b];
            denom.push_back(std::move(t));
        }
    }
    return md * ld - Subspace::span(md * ld, denom, f).dim();
}

ChainIsoReport chain_iso_check(const HomPreLieAlgebra& a) {
    ChainComplex self(self_corep(a));
    ChainComplex triv(trivial_corep(a, 1));

    // With K (x) L^(n+1) identified with L^(n+1), the degree-n map is -id on
    // L (x) L^n. residual_n = d_(n+2)^K o (-id) - (-id) o d_(n+1)^(L,L).
    ChainIsoReport report;
    report.residual0 = -triv.d(2) + self.d(1);
    report.residual1 = -triv.d(3) + self.d(2);
    report.commutes = report.residual0.is_zero() && report.residual1.is_zero();
    report.hl0_self = homology(self, 0).dimension;
    report.hl1_self = homology(self, 1).dimension;
    report.hl1_triv = homology(triv, 1).dimension;
    report.hl2_triv = homology(triv, 2).dimension;
    return report;
}

} // namespace homprelie
