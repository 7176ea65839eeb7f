#include "homprelie/extensions.hpp"

#include <string>

namespace homprelie {

namespace {

std::string span_text(const HomPreLieAlgebra& a, const Subspace& s) {
    std::string out = "span{";
    for (std::size_t r = 0; r < s.dim(); ++r)
        out += (r ? ", " : "") + format_vector(a, s.basis_vector(r));
    return out + "}";
}

std::string witness_text(const IdentityWitness& w) {
    std::string s = "(";
    for (std::size_t i = 0; i < w.indices.size(); ++i)
        s += (i ? "," : "") + std::to_string(w.indices[i]);
    return s + ")";
}

void require_morphism(const Morphism& m, const std::string& label) {
    MorphismReport r = check_morphism(m);
    if (!r.is_morphism) {
        std::string reason = !r.twist_ok ? "twist condition fails"
                                         : "product condition fails at basis pair " + witness_text(*r.product_witness);
        throw CheckError(label + " is not a morphism: " + reason);
    }
}

} // namespace

Subspace Extension::kernel_subspace() const {
    return kernel_image(proj).first;
}

Extension classify_extension(Extension e) {
    if (e.inj.rows() != e.total.dim || e.inj.cols() != e.sub.dim)
        throw ParseError("injection matrix shape mismatch");
    if (e.proj.rows() != e.quot.dim || e.proj.cols() != e.total.dim)
        throw ParseError("projection matrix shape mismatch");
    require_morphism(e.inj_morphism(), "injection");
    require_morphism(e.proj_morphism(), "projection");

    auto [inj_kernel, inj_image] = kernel_image(e.inj);
    auto [proj_kernel, proj_image] = kernel_image(e.proj);
    e.exact = inj_kernel.dim() == 0 && proj_image.dim() == e.quot.dim && inj_image == proj_kernel;

    Subspace z = annihilator(e.total);
    e.central = z.contains(inj_image);

    std::vector<Vec> twisted;
    for (std::size_t a = 0; a < e.sub.dim; ++a)
        twisted.push_back(e.inj.apply(e.sub.alpha.column(a)));
    Subspace twisted_image = Subspace::span(e.total.dim, twisted, e.total.field);
    e.alpha_central = z.contains(twisted_image);

    if (e.central && !e.alpha_central)
        throw InternalError("central extension classified as not alpha-central");
    if (e.exact && derived_subspaces(e.total).perfect && !derived_subspaces(e.quot).perfect)
        throw InternalError("surjective image of a perfect algebra classified as non-perfect");

    e.classified = true;
    return e;
}

HomPreLieAlgebra subalgebra_on(const HomPreLieAlgebra& a, const Subspace& s) {
    if (s.ambient_dim() != a.dim) throw ParseError("subspace ambient dimension mismatch");
    HomPreLieAlgebra result(s.dim(), a.field);
    for (std::size_t i = 0; i < s.dim(); ++i) {
        auto alpha_coords = s.coordinates(a.alpha.apply(s.basis_vector(i)));
        if (!alpha_coords) throw InternalError("subspace not closed under the twist");
        result.alpha.set_column(i, *alpha_coords);
        for (std::size_t j = 0; j < s.dim(); ++j) {
            auto prod_coords = s.coordinates(a.multiply(s.basis_vector(i), s.basis_vector(j)));
            if (!prod_coords) throw InternalError("subspace not closed under products");
            for (std::size_t k = 0; k < s.dim(); ++k) result.c.at(i, j, k) = (*prod_coords)[k];
        }
    }
    return result;
}

Extension extension_from_projection(const Morphism& proj) {
    require_morphism(proj, "projection");
    auto [kernel, image] = kernel_image(proj.f);
    if (image.dim() != proj.target.dim) throw CheckError("projection is not surjective");

    Extension e;
    e.total = proj.source;
    e.quot = proj.target;
    e.proj = proj.f;
    e.sub = subalgebra_on(proj.source, kernel);
    std::vector<Vec> columns;
    for (std::size_t i = 0; i < kernel.dim(); ++i) {
        columns.push_back(kernel.basis_vector(i));
        e.sub.names.push_back(format_vector(proj.source, kernel.basis_vector(i)));
    }
    e.inj = Matrix::from_columns(columns, proj.source.dim, proj.source.field);
    return classify_extension(std::move(e));
}

Extension compose_extensions(const Extension& outer, const Extension& inner) {
    if (!(inner.quot == outer.total))
        throw ParseError("composition mismatch: inner quotient differs from outer total algebra");
    Extension outer_c = outer.classified ? outer : classify_extension(outer);
    Extension inner_c = inner.classified ? inner : classify_extension(inner);

    Morphism composed{inner_c.total, outer_c.quot, outer_c.proj * inner_c.proj};
    Extension e = extension_from_projection(composed);

    if (outer_c.central && inner_c.central && derived_subspaces(outer_c.total).perfect && !e.alpha_central)
        throw InternalError("composition of central extensions over a perfect middle algebra is not alpha-central");
    return e;
}

Extension direct_sum_extension(const HomPreLieAlgebra& m, const HomPreLieAlgebra& l) {
    Extension e;
    e.sub = m;
    e.quot = l;
    e.total = direct_sum(m, l);
    e.inj = Matrix(e.total.dim, m.dim, m.field);
    for (std::size_t i = 0; i < m.dim; ++i) e.inj.at(i, i) = Scalar::one(m.field);
    e.proj = Matrix(l.dim, e.total.dim, m.field);
    for (std::size_t i = 0; i < l.dim; ++i) e.proj.at(i, m.dim + i) = Scalar::one(m.field);
    return classify_extension(std::move(e));
}

Extension identity_extension(const HomPreLieAlgebra& l) {
    Extension e;
    e.sub = HomPreLieAlgebra(0, l.field);
    e.total = l;
    e.quot = l;
    e.inj = Matrix(l.dim, 0, l.field);
    e.proj = Matrix::identity(l.dim, l.field);
    return classify_extension(std::move(e));
}

PullbackResult pullback(const Morphism& tau, const Morphism& pi) {
    if (!(tau.target == pi.target)) throw ParseError("pullback legs have different codomains");
    require_morphism(tau, "first pullback leg");
    require_morphism(pi, "second pullback leg");
    if (kernel_image(pi.f).second.dim() != pi.target.dim)
        throw CheckError("second pullback leg is not surjective");

    const HomPreLieAlgebra& a = tau.source;
    const HomPreLieAlgebra& k = pi.source;
    HomPreLieAlgebra sum = direct_sum(a, k);

    // constraint tau(x) - pi(y) = 0 on A (+) K
    Matrix constraint(tau.target.dim, sum.dim, sum.field);
    for (std::size_t c = 0; c < a.dim; ++c)
        constraint.set_column(c, tau.f.column(c));
    for (std::size_t c = 0; c < k.dim; ++c) {
        Vec col = pi.f.column(c);
        for (auto& s : col) s = -s;
        constraint.set_column(a.dim + c, col);
    }
    Subspace p = kernel_image(constraint).first;

    PullbackResult result;
    result.algebra = subalgebra_on(sum, p);
    result.solution_space = p;

    Matrix to_a(a.dim, p.dim(), sum.field), to_k(k.dim, p.dim(), sum.field);
    for (std::size_t j = 0; j < p.dim(); ++j) {
        Vec v = p.basis_vector(j);
        for (std::size_t i = 0; i < a.dim; ++i) to_a.at(i, j) = v[i];
        for (std::size_t i = 0; i < k.dim; ++i) to_k.at(i, j) = v[a.dim + i];
    }
    result.to_a = Morphism{result.algebra, a, to_a};
    result.to_k = Morphism{result.algebra, k, to_k};

    if (!check_axioms(result.algebra).hom_prelie)
        throw InternalError("pullback algebra fails the defining identity");
    require_morphism(result.to_a, "pullback projection to the first factor");
    require_morphism(result.to_k, "pullback projection to the second factor");
    // ker(P -> K) = {(a, 0) : tau(a) = 0}, so its dimension matches ker tau
    if (kernel_image(to_k).first.dim() != kernel_image(tau.f).first.dim())
        throw InternalError("pullback kernel does not match the kernel of the first leg");
    // when tau is also surjective the projection onto K must be too
    if (kernel_image(tau.f).second.dim() == tau.target.dim &&
        kernel_image(to_k).second.dim() != k.dim)
        throw InternalError("pullback projection lost surjectivity");
    return result;
}

bool verify_splitting(const Extension& e, const Matrix& sigma) {
    if (sigma.rows() != e.total.dim || sigma.cols() != e.quot.dim)
        throw ParseError("section matrix shape mismatch");
    if (!check_morphism(Morphism{e.quot, e.total, sigma}).is_morphism) return false;
    return e.proj * sigma == Matrix::identity(e.quot.dim, e.quot.field);
}

Matrix linear_section(const Matrix& proj) {
    auto s = solve_columns(proj, Matrix::identity(proj.rows(), proj.field()));
    if (!s) throw CheckError("cannot build a section: map is not surjective");
    return *s;
}

Matrix alternate_section(const Matrix& proj) {
    Matrix s = linear_section(proj);
    Subspace kernel = kernel_image(proj).first;
    if (kernel.dim() == 0) return s;
    Vec k0 = kernel.basis_vector(0);
    for (std::size_t c = 0; c < s.cols(); ++c)
        for (std::size_t r = 0; r < s.rows(); ++r)
            s.at(r, c) += k0[r];
    return s;
}

Subspace uce_relations(const HomPreLieAlgebra& a) {
    const std::size_t n = a.dim;
    std::vector<Vec> generators;
    for (std::size_t x1 = 0; x1 < n; ++x1) {
        Vec a1 = a.alpha.column(x1);
        for (std::size_t x2 = 0; x2 < n; ++x2) {
            Vec a2 = a.alpha.column(x2);
            Vec p12 = a.c.product(x1, x2);
            Vec p21 = a.c.product(x2, x1);
            for (std::size_t x3 = 0; x3 < n; ++x3) {
                Vec a3 = a.alpha.column(x3);
                Vec g = tensor_of(a1, a.c.product(x2, x3));
                g = vec_sub(g, tensor_of(p12, a3));
                g = vec_sub(g, tensor_of(a2, a.c.product(x1, x3)));
                g = vec_add(g, tensor_of(p21, a3));
                generators.push_back(std::move(g));
            }
        }
    }
    return Subspace::span(n * n, generators, a.field);
}

Vec UceResult::representative(std::size_t j) const {
    Vec in_carrier = quotient.lift().column(j);
    if (!variant_alpha) return in_carrier;
    Vec ambient = vec_zero(base.dim * base.dim, base.field);
    for (std::size_t r = 0; r < carrier.dim(); ++r)
        ambient = vec_add(ambient, vec_scale(in_carrier[r], carrier.basis_vector(r)));
    return ambient;
}

namespace {

/// Shared tail of both constructions: bracket, twist, u, kernel and the
/// proof-obligation checks that do not depend on the variant.
void finish_uce(UceResult& result, const HomPreLieAlgebra& l) {
    const Field& f = l.field;
    Matrix mu = l.multiplication_map();
    const std::size_t q = result.quotient.dim();

    // project an L (x) L tensor into constructed coordinates
    auto project_tensor = [&](const Vec& t) -> Vec {
        if (!result.variant_alpha) return result.quotient.project_vec(t);
        auto coords = result.carrier.coordinates(t);
        if (!coords) throw InternalError("bracket representative escapes the carrier subspace");
        return result.quotient.project_vec(*coords);
    };

    HomPreLieAlgebra constructed(q, f);
    std::vector<Vec> reps, mu_of_reps;
    for (std::size_t j = 0; j < q; ++j) {
        reps.push_back(result.representative(j));
        mu_of_reps.push_back(mu.apply(reps.back()));
    }
    for (std::size_t x = 0; x < q; ++x)
        for (std::size_t y = 0; y < q; ++y) {
            Vec prod = project_tensor(tensor_of(mu_of_reps[x], mu_of_reps[y]));
            for (std::size_t k = 0; k < q; ++k) constructed.c.at(x, y, k) = prod[k];
        }
    Matrix kron = Matrix::kronecker(l.alpha, l.alpha);
    for (std::size_t j = 0; j < q; ++j)
        constructed.alpha.set_column(j, project_tensor(kron.apply(reps[j])));

    Matrix u_matrix = Matrix::from_columns(mu_of_reps, l.dim, f);

    // proof obligations
    for (std::size_t r = 0; r < result.relations.dim(); ++r) {
        Vec g = result.relations.basis_vector(r);
        if (!vec_is_zero(mu.apply(g)))
            throw InternalError("multiplication does not vanish on the relation subspace");
        if (!result.relations.contains(kron.apply(g)))
            throw InternalError("twist does not preserve the relation subspace");
    }
    // the defining relation evaluates to zero in the constructed algebra
    Subspace relation_classes = Subspace::span(
        q, [&] {
            std::vector<Vec> rows;
            for (std::size_t r = 0; r < result.relations.dim(); ++r)
                rows.push_back(project_tensor(result.relations.basis_vector(r)));
            return rows;
        }(), f);
    if (relation_classes.dim() != 0)
        throw InternalError("relation classes are nonzero in the quotient");

    auto [u_kernel, u_image] = kernel_image(u_matrix);
    if (u_image.dim() != l.dim)
        throw InternalError("universal extension map is not surjective");
    for (std::size_t r = 0; r < u_kernel.dim(); ++r) {
        Vec k = u_kernel.basis_vector(r);
        for (std::size_t b = 0; b < q; ++b) {
            Vec eb = vec_unit(q, b, f);
            if (!vec_is_zero(constructed.multiply(k, eb)) || !vec_is_zero(constructed.multiply(eb, k)))
                throw InternalError("kernel of the universal extension map is not central");
        }
    }

    result.algebra = std::move(constructed);
    result.u = Morphism{result.algebra, l, u_matrix};
    result.kernel = u_kernel;
    result.algebra_axioms_ok = check_axioms(result.algebra).hom_prelie;

    MorphismReport u_report = check_morphism(result.u);
    if (!u_report.is_morphism) {
        // the twist condition needs alpha(xy) = alpha(x)alpha(y); flag the
        // gap when a non-multiplicative twist is the culprit
        std::string detail = u_report.twist_ok ? "product condition fails"
                                               : "twist condition fails";
        bool multiplicative = true;
        for (std::size_t i = 0; i < l.dim && multiplicative; ++i)
            for (std::size_t j = 0; j < l.dim && multiplicative; ++j)
                if (l.alpha.apply(l.c.product(i, j)) !=
                    l.multiply(l.alpha.column(i), l.alpha.column(j)))
                    multiplicative = false;
        if (!multiplicative)
            detail += " (the twist is not multiplicative on products, so the induced"
                      " map cannot intertwine the twists on this instance)";
        throw InternalError("universal extension map is not a morphism: " + detail);
    }
}

} // namespace

UceResult uce(const HomPreLieAlgebra& l) {
    if (!check_axioms(l).hom_prelie)
        throw CheckError("universal central extension needs a valid Hom-preLie algebra");
    DerivedSubspaces d = derived_subspaces(l);
    if (!d.perfect)
        throw CheckError("universal central extension needs a perfect algebra (LL = " +
                         span_text(l, d.products) + ", dim " + std::to_string(d.products.dim()) +
                         " < " + std::to_string(l.dim) + ")");

    UceResult result;
    result.variant_alpha = false;
    result.base = l;
    result.relations = uce_relations(l);
    result.carrier = Subspace::full(l.dim * l.dim, l.field);
    result.quotient = quotient_space(l.dim * l.dim, result.relations);
    finish_uce(result, l);

    result.hl2_dim = homology(trivial_corep(l), 2).dimension;
    if (result.kernel.dim() != result.hl2_dim)
        throw InternalError("kernel dimension differs from second homology with trivial coefficients");
    if (!derived_subspaces(result.algebra).perfect)
        throw InternalError("constructed universal central extension is not perfect");
    return result;
}

UceResult uce_alpha(const HomPreLieAlgebra& l) {
    if (!check_axioms(l).hom_prelie)
        throw CheckError("universal alpha-central extension needs a valid Hom-preLie algebra");
    DerivedSubspaces d = derived_subspaces(l);
    if (!d.alpha_perfect)
        throw CheckError("universal alpha-central extension needs an alpha-perfect algebra "
                         "(alpha(L)alpha(L) = " + span_text(l, d.twisted_products) + ", dim " +
                         std::to_string(d.twisted_products.dim()) + " < " + std::to_string(l.dim) + ")");

    UceResult result;
    result.variant_alpha = true;
    result.base = l;
    result.relations = uce_relations(l);
    Matrix kron = Matrix::kronecker(l.alpha, l.alpha);
    result.carrier = kernel_image(kron).second;  // alpha(L) (x) alpha(L)

    // the relation generators must already live in the carrier
    std::vector<Vec> relation_coords;
    for (std::size_t r = 0; r < result.relations.dim(); ++r) {
        auto coords = result.carrier.coordinates(result.relations.basis_vector(r));
        if (!coords)
            throw InternalError("relation subspace escapes alpha(L) (x) alpha(L)");
        relation_coords.push_back(*coords);
    }
    Subspace relations_in_carrier =
        Subspace::span(result.carrier.dim(), relation_coords, l.field);
    result.quotient = quotient_space(result.carrier.dim(), relations_in_carrier);
    finish_uce(result, l);

    if (!derived_subspaces(result.algebra).alpha_perfect)
        throw InternalError("constructed universal alpha-central extension is not alpha-perfect");
    return result;
}

namespace {

/// K-valued bilinear evaluation of tensors: column (i,j) is the product of
/// the section images (or their alpha_K twists) of e_i and e_j.
Matrix section_product_map(const HomPreLieAlgebra& k, const Matrix& section) {
    const std::size_t n = section.cols();
    Matrix m(k.dim, n * n, k.field);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m.set_column(tensor_index(i, j, n), k.multiply(section.column(i), section.column(j)));
    return m;
}

Matrix morphism_from_sections(const UceResult& u, const Extension& e, const Matrix& section) {
    const HomPreLieAlgebra& l = u.base;
    Matrix reps = Matrix::from_columns(
        [&] {
            std::vector<Vec> cols;
            for (std::size_t j = 0; j < u.quotient.dim(); ++j) cols.push_back(u.representative(j));
            return cols;
        }(), l.dim * l.dim, l.field);

    if (!u.variant_alpha) {
        Matrix psi = section_product_map(e.total, section);
        // classes of I_L must map to zero for the descent to the quotient
        for (std::size_t r = 0; r < u.relations.dim(); ++r)
            if (!vec_is_zero(psi.apply(u.relations.basis_vector(r))))
                throw InternalError("section products do not vanish on the relation subspace");
        return psi * reps;
    }

    Matrix psi = section_product_map(e.total, e.total.alpha * section);
    Matrix kron = Matrix::kronecker(l.alpha, l.alpha);
    // choices of preimage under alpha (x) alpha must not matter
    Subspace kron_kernel = kernel_image(kron).first;
    for (std::size_t r = 0; r < kron_kernel.dim(); ++r)
        if (!vec_is_zero(psi.apply(kron_kernel.basis_vector(r))))
            throw InternalError("twisted section products depend on the preimage choice");
    Matrix targets(l.dim * l.dim, reps.cols() + u.relations.dim(), l.field);
    for (std::size_t c = 0; c < reps.cols(); ++c)
        targets.set_column(c, reps.column(c));
    for (std::size_t r = 0; r < u.relations.dim(); ++r)
        targets.set_column(reps.cols() + r, u.relations.basis_vector(r));
    auto preimages = solve_columns(kron, targets);
    if (!preimages)
        throw InternalError("carrier tensor has no preimage under alpha (x) alpha");
    // relation preimages must map to zero for the descent to the quotient
    for (std::size_t r = 0; r < u.relations.dim(); ++r)
        if (!vec_is_zero(psi.apply(preimages->column(reps.cols() + r))))
            throw InternalError("twisted section products do not vanish on the relation subspace");
    Matrix phi(e.total.dim, reps.cols(), l.field);
    for (std::size_t c = 0; c < reps.cols(); ++c)
        phi.set_column(c, psi.apply(preimages->column(c)));
    return phi;
}

Morphism universal_morphism_impl(const UceResult& u, const Extension& e, bool alpha_variant) {
    Extension ext = e.classified ? e : classify_extension(e);
    if (!(ext.quot == u.base))
        throw ParseError("extension base differs from the universal construction base");
    if (!ext.exact) throw CheckError("target extension is not exact");
    if (!alpha_variant && !ext.central)
        throw CheckError("universal morphism needs a central target extension");
    if (alpha_variant && !ext.alpha_central)
        throw CheckError("universal alpha-morphism needs an alpha-central target extension");
    if (u.variant_alpha != alpha_variant)
        throw ParseError("universal construction variant mismatch");

    Matrix section = linear_section(ext.proj);
    Matrix phi = morphism_from_sections(u, ext, section);

    Matrix phi_again = morphism_from_sections(u, ext, alternate_section(ext.proj));
    if (phi != phi_again)
        throw InternalError("universal morphism depends on the chosen section");

    if (ext.proj * phi != u.u.f)
        throw InternalError("universal morphism does not cover the extension map");

    Morphism result{u.algebra, ext.total, phi};
    MorphismReport report = check_morphism(result);
    if (!report.twist_ok)
        throw InternalError("universal morphism fails the twist condition");
    if (!report.is_morphism)
        throw InternalError("universal morphism fails the product condition");
    return result;
}

} // namespace

Morphism universal_morphism(const UceResult& u, const Extension& e) {
    return universal_morphism_impl(u, e, false);
}

Morphism universal_alpha_morphism(const UceResult& u, const Extension& e) {
    return universal_morphism_impl(u, e, true);
}

} // namespace homprelie
