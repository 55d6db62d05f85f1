#include "projrigid/lie.hpp"

namespace projrigid {

namespace {

Matrix unit4(int i, int j) {
    Matrix e = Matrix::Zero(4, 4);
    e(i, j) = FieldElement(1);
    return e;
}

std::vector<Matrix> build_v_basis() {
    std::vector<Matrix> b;
    b.push_back(unit4(0, 0) - unit4(3, 3));
    b.push_back(unit4(1, 1) - unit4(3, 3));
    b.push_back(unit4(2, 2) - unit4(3, 3));
    b.push_back(unit4(0, 1) + unit4(1, 0));
    b.push_back(unit4(0, 2) + unit4(2, 0));
    b.push_back(unit4(3, 0) - unit4(0, 3));
    b.push_back(unit4(1, 2) + unit4(2, 1));
    b.push_back(unit4(3, 1) - unit4(1, 3));
    b.push_back(unit4(3, 2) - unit4(2, 3));
    return b;
}

std::vector<Matrix> build_so31_basis() {
    std::vector<Matrix> b;
    b.push_back(unit4(0, 1) - unit4(1, 0));
    b.push_back(unit4(0, 2) - unit4(2, 0));
    b.push_back(unit4(1, 2) - unit4(2, 1));
    b.push_back(unit4(0, 3) + unit4(3, 0));
    b.push_back(unit4(1, 3) + unit4(3, 1));
    b.push_back(unit4(2, 3) + unit4(3, 2));
    return b;
}

std::vector<Matrix> build_sl4_basis() {
    std::vector<Matrix> b = build_so31_basis();
    std::vector<Matrix> v = build_v_basis();
    b.insert(b.end(), v.begin(), v.end());
    return b;
}

std::vector<Matrix> build_gl4_basis() {
    std::vector<Matrix> b = build_sl4_basis();
    b.push_back(Matrix::Identity(4, 4));
    return b;
}

Vector v_coords_raw(const Matrix& x) {
    Vector c(9);
    c << x(0, 0), x(1, 1), x(2, 2), x(0, 1), x(0, 2), x(3, 0), x(1, 2), x(3, 1), x(3, 2);
    return c;
}

Vector so31_coords_raw(const Matrix& x) {
    Vector c(6);
    c << x(0, 1), x(0, 2), x(1, 2), x(0, 3), x(1, 3), x(2, 3);
    return c;
}

Matrix reconstruct(Module m, const Vector& coords) {
    const std::vector<Matrix>& basis = module_basis(m);
    Matrix out = Matrix::Zero(4, 4);
    for (Eigen::Index k = 0; k < coords.size(); ++k) {
        if (coords(k).is_zero()) continue;
        out += coords(k) * basis[static_cast<std::size_t>(k)];
    }
    return out;
}

// Membership via the defining identities (J-transpose symmetry and trace),
// which is equivalent to the coordinate read-off being a faithful inverse.
bool satisfies_module(Module m, const Matrix& x) {
    switch (m) {
        case Module::gl4:
            return true;
        case Module::sl4:
            return x.trace().is_zero();
        case Module::v: {
            if (!x.trace().is_zero()) return false;
            for (int r = 0; r < 4; ++r)
                for (int c = r + 1; c < 4; ++c) {
                    if (c == 3 ? x(r, c) != -x(c, r) : x(r, c) != x(c, r)) return false;
                }
            return true;
        }
        case Module::so31: {
            for (int i = 0; i < 4; ++i)
                if (!x(i, i).is_zero()) return false;
            for (int r = 0; r < 4; ++r)
                for (int c = r + 1; c < 4; ++c) {
                    if (c == 3 ? x(r, c) != x(c, r) : x(r, c) != -x(c, r)) return false;
                }
            return true;
        }
    }
    return false;
}

}  // namespace

Module module_from_name(const std::string& name) {
    if (name == "v") return Module::v;
    if (name == "so31") return Module::so31;
    if (name == "sl4") return Module::sl4;
    if (name == "gl4") return Module::gl4;
    throw ParseError("unknown module '" + name + "' (expected v, so31, sl4 or gl4)");
}

std::string module_name(Module m) {
    switch (m) {
        case Module::v: return "v";
        case Module::so31: return "so31";
        case Module::sl4: return "sl4";
        case Module::gl4: return "gl4";
    }
    throw PreconditionError("invalid module");
}

Eigen::Index module_dim(Module m) {
    switch (m) {
        case Module::v: return 9;
        case Module::so31: return 6;
        case Module::sl4: return 15;
        case Module::gl4: return 16;
    }
    throw PreconditionError("invalid module");
}

Matrix minkowski_form() {
    Matrix j = Matrix::Identity(4, 4);
    j(3, 3) = FieldElement(-1);
    return j;
}

const std::vector<Matrix>& module_basis(Module m) {
    static const std::vector<Matrix> v = build_v_basis();
    static const std::vector<Matrix> so = build_so31_basis();
    static const std::vector<Matrix> sl = build_sl4_basis();
    static const std::vector<Matrix> gl = build_gl4_basis();
    switch (m) {
        case Module::v: return v;
        case Module::so31: return so;
        case Module::sl4: return sl;
        case Module::gl4: return gl;
    }
    throw PreconditionError("invalid module");
}

std::pair<Matrix, Matrix> split_so31_v(const Matrix& x) {
    static const Matrix j = minkowski_form();
    FieldElement half(Rational(1, 2));
    Matrix xso = (x - j * x.transpose() * j) * half;
    Matrix xv = x - xso;
    return {xso, xv};
}

Vector module_coords(Module m, const Matrix& x) {
    if (x.rows() != 4 || x.cols() != 4)
        throw PreconditionError("module element must be a 4x4 matrix");
    if (!satisfies_module(m, x))
        throw PreconditionError("matrix does not lie in module " + module_name(m));
    Vector c;
    switch (m) {
        case Module::v:
            c = v_coords_raw(x);
            break;
        case Module::so31:
            c = so31_coords_raw(x);
            break;
        case Module::sl4: {
            auto [xso, xv] = split_so31_v(x);
            c.resize(15);
            c.head(6) = so31_coords_raw(xso);
            c.tail(9) = v_coords_raw(xv);
            break;
        }
        case Module::gl4: {
            FieldElement t = x.trace() * FieldElement(Rational(1, 4));
            Matrix x0 = x - t * Matrix::Identity(4, 4);
            auto [xso, xv] = split_so31_v(x0);
            c.resize(16);
            c.head(6) = so31_coords_raw(xso);
            c.segment(6, 9) = v_coords_raw(xv);
            c(15) = t;
            break;
        }
    }
    return c;
}

Matrix module_from_coords(Module m, const Vector& coords) {
    if (coords.size() != module_dim(m))
        throw PreconditionError("coordinate vector has wrong length for module " + module_name(m));
    return reconstruct(m, coords);
}

bool is_so31_element(const Matrix& a) {
    if (a.rows() != 4 || a.cols() != 4) return false;
    static const Matrix j = minkowski_form();
    return exactly_equal(a.transpose() * j * a, j) && det(a) == FieldElement(1);
}

Matrix lift_sl2c(const Matrix& a) {
    if (a.rows() != 2 || a.cols() != 2)
        throw PreconditionError("lift expects a 2x2 matrix");
    if (det(a) != FieldElement(1))
        throw PreconditionError("lift expects a unit-determinant 2x2 matrix");
    const FieldElement i = FieldElement::imag_unit();
    std::vector<Matrix> h(4, Matrix::Zero(2, 2));
    h[0](0, 1) = i;
    h[0](1, 0) = -i;
    h[1](0, 1) = FieldElement(1);
    h[1](1, 0) = FieldElement(1);
    h[2](0, 0) = FieldElement(1);
    h[2](1, 1) = FieldElement(-1);
    h[3] = Matrix::Identity(2, 2);

    Matrix adag(2, 2);
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) adag(r, c) = a(c, r).conj_i();

    const FieldElement half(Rational(1, 2));
    Matrix lift(4, 4);
    for (int k = 0; k < 4; ++k) {
        Matrix hm = a * h[k] * adag;
        // Hermitian read-off: diagonal entries are real, off-diagonals conjugate.
        FieldElement x4 = (hm(0, 0) + hm(1, 1)) * half;
        FieldElement x3 = (hm(0, 0) - hm(1, 1)) * half;
        FieldElement x2(hm(0, 1).a(), hm(0, 1).b(), 0, 0, hm(0, 1).tag());
        FieldElement x1(hm(0, 1).c(), hm(0, 1).e(), 0, 0, hm(0, 1).tag());
        Matrix back = x1 * h[0] + x2 * h[1] + x3 * h[2] + x4 * h[3];
        if (!exactly_equal(back, hm))
            throw PreconditionError("lift: conjugated basis matrix is not Hermitian");
        lift(0, k) = x1;
        lift(1, k) = x2;
        lift(2, k) = x3;
        lift(3, k) = x4;
    }
    if (!is_so31_element(lift))
        throw PreconditionError("lift does not land in SO(3,1)");
    return lift;
}

Matrix adjoint_on_module(const Matrix& g, Module m) {
    const std::vector<Matrix>& basis = module_basis(m);
    Matrix ginv = inverse(g);
    Matrix out(module_dim(m), module_dim(m));
    for (std::size_t k = 0; k < basis.size(); ++k) {
        // The basis matrices are sparse, so conjugate entry by entry:
        // g E_rc g^-1 is the outer product of column r of g with row c of g^-1.
        Matrix conj = Matrix::Zero(4, 4);
        for (Eigen::Index r = 0; r < 4; ++r)
            for (Eigen::Index c = 0; c < 4; ++c) {
                const FieldElement& b = basis[k](r, c);
                if (b.is_zero()) continue;
                conj += b * (g.col(r) * ginv.row(c));
            }
        out.col(static_cast<Eigen::Index>(k)) = module_coords(m, conj);
    }
    return out;
}

FieldElement killing(const Matrix& x, const Matrix& y) {
    if (x.rows() != 4 || x.cols() != 4 || y.rows() != 4 || y.cols() != 4)
        throw PreconditionError("killing form expects 4x4 matrices");
    return FieldElement(8) * (x * y).trace();
}

Representation::Representation(std::vector<Matrix> mats) : mats_(std::move(mats)) {
    invs_.reserve(mats_.size());
    for (std::size_t g = 0; g < mats_.size(); ++g) {
        if (!is_so31_element(mats_[g]))
            throw PreconditionError("generator matrix " + std::to_string(g) +
                                    " is not in SO(3,1)");
        invs_.push_back(inverse(mats_[g]));
    }
}

Representation Representation::lift_from_sl2(const std::vector<Matrix>& two_by_two) {
    std::vector<Matrix> lifted;
    lifted.reserve(two_by_two.size());
    for (const Matrix& a : two_by_two) lifted.push_back(lift_sl2c(a));
    return Representation(std::move(lifted));
}

Matrix eval_word(const Representation& rep, const Word& w) {
    Matrix out = Matrix::Identity(4, 4);
    for (const Letter& l : w) {
        const Matrix& step = l.exp > 0 ? rep.mat(l.gen) : rep.inv(l.gen);
        long long count = l.exp > 0 ? l.exp : -l.exp;
        for (long long k = 0; k < count; ++k) out = out * step;
    }
    return out;
}

void check_relators(const Presentation& pres, const Representation& rep) {
    for (std::size_t r = 0; r < pres.relators.size(); ++r) {
        if (!exactly_equal(eval_word(rep, pres.relators[r]), Matrix::Identity(4, 4)))
            throw PreconditionError("relator " + std::to_string(r) +
                                    " is not satisfied by the representation");
    }
}

Matrix eval_ring_adjoint(const Representation& rep, const GroupRingElement& elem, Module m) {
    const Eigen::Index n = module_dim(m);
    Matrix out = Matrix::Zero(n, n);
    for (const auto& [w, coeff] : elem.terms()) {
        out += FieldElement(static_cast<long>(coeff)) * adjoint_on_module(eval_word(rep, w), m);
    }
    return out;
}

Subspace invariant_subspace(const std::vector<Word>& words, const Representation& rep, Module m) {
    const Eigen::Index n = module_dim(m);
    if (words.empty()) return Subspace::full(n);
    Matrix stacked(n * static_cast<Eigen::Index>(words.size()), n);
    for (std::size_t k = 0; k < words.size(); ++k) {
        Matrix block = adjoint_on_module(eval_word(rep, words[k]), m) - Matrix::Identity(n, n);
        stacked.middleRows(n * static_cast<Eigen::Index>(k), n) = block;
    }
    return kernel(stacked);
}

namespace {

Matrix bracket(const Matrix& a, const Matrix& b) { return a * b - b * a; }

// Coordinates of X = S + i W with S in so31 and W in v, both real, over d = 1.
Vector su_coords(const Matrix& x) {
    Matrix re(4, 4), im(4, 4);
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            re(r, c) = FieldElement(x(r, c).a(), x(r, c).b(), 0, 0, 1);
            im(r, c) = FieldElement(x(r, c).c(), x(r, c).e(), 0, 0, 1);
        }
    }
    Vector out(15);
    out.head(6) = module_coords(Module::so31, re);
    out.tail(9) = module_coords(Module::v, im);
    return out;
}

}  // namespace

Su31Report su31_root_check() {
    const FieldElement i = FieldElement::imag_unit();
    std::vector<Matrix> su_basis = module_basis(Module::so31);
    for (const Matrix& vb : module_basis(Module::v)) su_basis.push_back(i * vb);
    Matrix eta = unit4(2, 3) + unit4(3, 2);

    Su31Report report;
    Matrix ad_eta(15, 15);
    report.ad_eta_rational = true;
    for (int k = 0; k < 15; ++k) {
        ad_eta.col(k) = su_coords(bracket(eta, su_basis[static_cast<std::size_t>(k)]));
    }
    for (Eigen::Index r = 0; r < 15 && report.ad_eta_rational; ++r)
        for (Eigen::Index c = 0; c < 15; ++c)
            if (!ad_eta(r, c).is_real()) {
                report.ad_eta_rational = false;
                break;
            }

    const int eigenvalues[5] = {-2, -1, 0, 1, 2};
    std::array<Subspace, 5> g_spaces;
    for (int idx = 0; idx < 5; ++idx) {
        Matrix shifted = ad_eta - FieldElement(eigenvalues[idx]) * Matrix::Identity(15, 15);
        g_spaces[static_cast<std::size_t>(idx)] = kernel(shifted);
        report.dims[static_cast<std::size_t>(idx)] = g_spaces[static_cast<std::size_t>(idx)].dim();
    }

    auto from_coords = [&](const Vector& c) {
        Matrix m = Matrix::Zero(4, 4);
        for (int k = 0; k < 15; ++k) m += c(k) * su_basis[static_cast<std::size_t>(k)];
        return m;
    };
    auto b_su = [&](const Vector& cx, const Vector& cy) {
        FieldElement val = killing(from_coords(cx), from_coords(cy));
        if (!val.is_real()) throw PreconditionError("Killing form not real on su(3,1)");
        return val;
    };

    report.orthogonal = true;
    for (int ki = 0; ki < 5 && report.orthogonal; ++ki) {
        for (int li = 0; li < 5 && report.orthogonal; ++li) {
            if (eigenvalues[ki] + eigenvalues[li] == 0) continue;
            const Matrix& bu = g_spaces[static_cast<std::size_t>(ki)].basis();
            const Matrix& bw = g_spaces[static_cast<std::size_t>(li)].basis();
            for (Eigen::Index u = 0; u < bu.rows() && report.orthogonal; ++u)
                for (Eigen::Index w = 0; w < bw.rows(); ++w)
                    if (!b_su(bu.row(u).transpose(), bw.row(w).transpose()).is_zero()) {
                        report.orthogonal = false;
                        break;
                    }
        }
    }

    Matrix gplus_rows(g_spaces[2].dim() + g_spaces[3].dim() + g_spaces[4].dim(), 15);
    gplus_rows << g_spaces[2].basis(), g_spaces[3].basis(), g_spaces[4].basis();
    Subspace gplus = Subspace::from_rows(gplus_rows);
    report.gplus_dim = gplus.dim();

    Matrix gram(gplus.dim(), gplus.dim());
    for (Eigen::Index u = 0; u < gplus.dim(); ++u)
        for (Eigen::Index w = 0; w < gplus.dim(); ++w)
            gram(u, w) = b_su(gplus.basis().row(u).transpose(), gplus.basis().row(w).transpose());
    Subspace rad_coeffs = kernel(gram);
    Matrix rad_rows = rad_coeffs.basis() * gplus.basis();
    Subspace rad = Subspace::from_rows(rad_rows);

    Matrix hplus_rows(g_spaces[3].dim() + g_spaces[4].dim(), 15);
    hplus_rows << g_spaces[3].basis(), g_spaces[4].basis();
    Subspace hplus = Subspace::from_rows(hplus_rows);
    report.radical_matches = (rad == hplus);
    return report;
}

}  // namespace projrigid
