#include "projrigid/cohomology.hpp"

namespace projrigid {

namespace {

// Value contributed by a single letter g^{+1} or g^{-1} of a word, before
// translation by the prefix: z(g) or -Ad(rho(g)^-1) z(g).
Matrix letter_value(const Cochain1& z, const Representation& rep, int gen, long long exp) {
    const Matrix& zg = z.values.at(static_cast<std::size_t>(gen));
    if (exp > 0) return zg;
    return -(rep.inv(gen) * zg * rep.mat(gen));
}

}  // namespace

Vector cochain_coords(const Cochain1& z) {
    const Eigen::Index dim = module_dim(z.module);
    Vector out(dim * static_cast<Eigen::Index>(z.values.size()));
    for (std::size_t g = 0; g < z.values.size(); ++g) {
        out.segment(dim * static_cast<Eigen::Index>(g), dim) =
            module_coords(z.module, z.values[g]);
    }
    return out;
}

Cochain1 cochain_from_coords(Module m, int generator_count, const Vector& coords) {
    const Eigen::Index dim = module_dim(m);
    if (coords.size() != dim * generator_count)
        throw PreconditionError("cochain coordinate vector has wrong length");
    Cochain1 z;
    z.module = m;
    z.values.reserve(static_cast<std::size_t>(generator_count));
    for (int g = 0; g < generator_count; ++g) {
        z.values.push_back(module_from_coords(m, coords.segment(dim * g, dim)));
    }
    return z;
}

Matrix fox_block_matrix(const Presentation& pres, const Representation& rep, Module m) {
    const Eigen::Index dim = module_dim(m);
    const Eigen::Index gcount = static_cast<Eigen::Index>(pres.generators.size());
    const Eigen::Index rcount = static_cast<Eigen::Index>(pres.relators.size());
    Matrix out = Matrix::Zero(rcount * dim, gcount * dim);
    for (Eigen::Index r = 0; r < rcount; ++r) {
        for (Eigen::Index g = 0; g < gcount; ++g) {
            GroupRingElement d =
                fox_derivative(pres.relators[static_cast<std::size_t>(r)], static_cast<int>(g));
            out.block(r * dim, g * dim, dim, dim) = eval_ring_adjoint(rep, d, m);
        }
    }
    return out;
}

Matrix coboundary_matrix(const Presentation& pres, const Representation& rep, Module m) {
    const Eigen::Index dim = module_dim(m);
    const Eigen::Index gcount = static_cast<Eigen::Index>(pres.generators.size());
    Matrix out(gcount * dim, dim);
    for (Eigen::Index g = 0; g < gcount; ++g) {
        out.middleRows(g * dim, dim) =
            adjoint_on_module(rep.mat(static_cast<int>(g)), m) - Matrix::Identity(dim, dim);
    }
    return out;
}

CohomologyReport cohomology(const Presentation& pres, const Representation& rep, Module m) {
    if (static_cast<std::size_t>(rep.count()) != pres.generators.size())
        throw PreconditionError("representation does not match the presentation's generators");
    const Eigen::Index dim = module_dim(m);
    CohomologyReport out;
    out.module = m;
    Matrix fox = fox_block_matrix(pres, rep, m);
    Matrix delta0 = coboundary_matrix(pres, rep, m);
    out.fox_rank = rank(fox);
    out.z1 = kernel(fox);
    out.b1 = image(delta0);
    out.h0 = kernel(delta0);
    out.dim_h1 = out.z1.dim() - out.b1.dim();
    out.dim_h2 = static_cast<Eigen::Index>(pres.relators.size()) * dim - out.fox_rank;
    out.h2_valid = pres.aspherical;

    // Lift of an H^1 basis: the Z^1 basis rows whose leading column is not a
    // leading column of B^1. Both bases are reduced-echelon, so these rows are
    // independent modulo coboundaries and there are exactly dim_h1 of them.
    out.h1_reps = Matrix(out.dim_h1, out.z1.ambient());
    Eigen::Index next = 0;
    for (Eigen::Index i = 0; i < out.z1.dim(); ++i) {
        const Eigen::Index lead = out.z1.leads()[static_cast<std::size_t>(i)];
        bool is_b1_lead = false;
        for (Eigen::Index l : out.b1.leads()) {
            if (l == lead) {
                is_b1_lead = true;
                break;
            }
        }
        if (!is_b1_lead) out.h1_reps.row(next++) = out.z1.basis().row(i);
    }
    if (next != out.dim_h1)
        throw PreconditionError("cohomology basis lift failed to produce dim H^1 rows");
    return out;
}

bool is_cocycle(const Cochain1& z, const Presentation& pres, const Representation& rep) {
    for (const Word& r : pres.relators) {
        if (!is_zero(extend_cocycle(z, r, rep))) return false;
    }
    return true;
}

Matrix extend_cocycle(const Cochain1& z, const Word& w, const Representation& rep) {
    Matrix val = Matrix::Zero(4, 4);
    Matrix prefix = Matrix::Identity(4, 4);
    Matrix prefix_inv = Matrix::Identity(4, 4);
    for (const Letter& l : letters_of(w)) {
        Matrix step = letter_value(z, rep, l.gen, l.exp);
        val += prefix * step * prefix_inv;
        if (l.exp > 0) {
            prefix = prefix * rep.mat(l.gen);
            prefix_inv = rep.inv(l.gen) * prefix_inv;
        } else {
            prefix = prefix * rep.inv(l.gen);
            prefix_inv = rep.mat(l.gen) * prefix_inv;
        }
    }
    return val;
}

bool restriction_nontrivial(const Cochain1& z, const Word& w, const Representation& rep) {
    Matrix zw = extend_cocycle(z, w, rep);
    const Eigen::Index dim = module_dim(z.module);
    Matrix target = adjoint_on_module(eval_word(rep, w), z.module) - Matrix::Identity(dim, dim);
    return !image(target).contains(module_coords(z.module, zw));
}

FieldElement pairing_certificate(const Cochain1& z, const Word& w, const Matrix& a,
                                 const Representation& rep) {
    Matrix g = eval_word(rep, w);
    if (!exactly_equal(g * a * inverse(g), a))
        throw PreconditionError("pairing: element is not invariant under the word");
    return killing(extend_cocycle(z, w, rep), a);
}

CupResult cup_product(const Cochain1& z1, const Cochain1& z2, const Presentation& pres,
                      const Representation& rep) {
    if (!is_cocycle(z1, pres, rep) || !is_cocycle(z2, pres, rep))
        throw PreconditionError("cup product inputs must be cocycles");
    CupResult out;
    out.cochain.module = Module::gl4;
    out.cochain.values.reserve(pres.relators.size());

    for (const Word& rel : pres.relators) {
        Matrix val = Matrix::Zero(4, 4);
        Matrix ext1 = Matrix::Zero(4, 4);   // z1 extended over the prefix so far
        Matrix prefix = Matrix::Identity(4, 4);
        Matrix prefix_inv = Matrix::Identity(4, 4);
        std::vector<Letter> letters = letters_of(rel);
        for (std::size_t i = 0; i < letters.size(); ++i) {
            const Letter& l = letters[i];
            if (i > 0) {
                Matrix z2s = letter_value(z2, rep, l.gen, l.exp);
                val += ext1 * (prefix * z2s * prefix_inv);
            }
            Matrix z1s = letter_value(z1, rep, l.gen, l.exp);
            ext1 += prefix * z1s * prefix_inv;
            if (l.exp > 0) {
                prefix = prefix * rep.mat(l.gen);
                prefix_inv = rep.inv(l.gen) * prefix_inv;
            } else {
                prefix = prefix * rep.inv(l.gen);
                prefix_inv = rep.mat(l.gen) * prefix_inv;
            }
            if (l.exp < 0) {
                // Chain-lift correction for an inverse letter: the normalized
                // bar-resolution chain for g^-1 carries an extra degenerate
                // cell whose cup contribution is Ad(prefix)(z1(g) z2(g)).
                Matrix corr = z1.values[static_cast<std::size_t>(l.gen)] *
                              z2.values[static_cast<std::size_t>(l.gen)];
                val += prefix * corr * prefix_inv;
            }
        }
        out.cochain.values.push_back(val);
    }

    const Eigen::Index dim = module_dim(Module::gl4);
    Vector vec(dim * static_cast<Eigen::Index>(pres.relators.size()));
    for (std::size_t r = 0; r < pres.relators.size(); ++r) {
        vec.segment(dim * static_cast<Eigen::Index>(r), dim) =
            module_coords(Module::gl4, out.cochain.values[r]);
    }
    Subspace coboundaries = image(fox_block_matrix(pres, rep, Module::gl4));
    out.class_rep = coboundaries.reduce(vec);
    out.class_zero = is_zero(out.class_rep);
    return out;
}

Cochain1 pullback_cocycle(const Cochain1& z, const std::vector<Word>& phi, const Matrix& a,
                          const Presentation& pres, const Representation& rep) {
    if (phi.size() != pres.generators.size())
        throw PreconditionError("endomorphism must map every generator");
    Matrix ainv = inverse(a);
    for (std::size_t g = 0; g < phi.size(); ++g) {
        Matrix lhs = eval_word(rep, phi[g]);
        Matrix rhs = a * rep.mat(static_cast<int>(g)) * ainv;
        if (!exactly_equal(lhs, rhs))
            throw PreconditionError("intertwiner identity fails for generator " +
                                    pres.generators[g]);
    }
    Cochain1 out;
    out.module = z.module;
    out.values.reserve(phi.size());
    for (const Word& image_word : phi) {
        out.values.push_back(ainv * extend_cocycle(z, image_word, rep) * a);
    }
    if (!is_cocycle(out, pres, rep))
        throw PreconditionError("pullback did not produce a cocycle");
    return out;
}

}  // namespace projrigid
