#include "projrigid/linalg.hpp"

namespace projrigid {

bool exactly_equal(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            if (a(i, j) != b(i, j)) return false;
    return true;
}

bool is_zero(const Matrix& a) {
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            if (!a(i, j).is_zero()) return false;
    return true;
}

RrefResult rref(Matrix m, Eigen::Index pivot_limit) {
    const Eigen::Index rows = m.rows();
    const Eigen::Index cols = m.cols();
    const Eigen::Index limit = pivot_limit < 0 ? cols : pivot_limit;
    RrefResult out;
    Eigen::Index r = 0;
    for (Eigen::Index col = 0; col < limit && r < rows; ++col) {
        Eigen::Index piv = -1;
        for (Eigen::Index i = r; i < rows; ++i) {
            if (!m(i, col).is_zero()) {
                piv = i;
                break;
            }
        }
        if (piv < 0) continue;
        if (piv != r) m.row(r).swap(m.row(piv));
        FieldElement pv = m(r, col).inv();
        for (Eigen::Index j = 0; j < cols; ++j) m(r, j) *= pv;
        for (Eigen::Index i = 0; i < rows; ++i) {
            if (i == r || m(i, col).is_zero()) continue;
            FieldElement f = m(i, col);
            for (Eigen::Index j = 0; j < cols; ++j) m(i, j) -= f * m(r, j);
        }
        out.pivots.push_back(col);
        ++r;
    }
    out.mat = std::move(m);
    out.rank = r;
    return out;
}

Eigen::Index rank(const Matrix& m) { return rref(m).rank; }

Subspace Subspace::from_rows(const Matrix& rows) {
    RrefResult r = rref(rows);
    Subspace s;
    s.basis_ = r.mat.topRows(r.rank);
    s.basis_.conservativeResize(r.rank, rows.cols());
    s.leads_ = r.pivots;
    return s;
}

Subspace Subspace::zero(Eigen::Index ambient) {
    Subspace s;
    s.basis_ = Matrix(0, ambient);
    return s;
}

Subspace Subspace::full(Eigen::Index ambient) {
    return from_rows(Matrix::Identity(ambient, ambient));
}

bool Subspace::contains(const Vector& v) const { return is_zero(reduce(v)); }

Vector Subspace::reduce(Vector v) const {
    if (v.size() != ambient())
        throw PreconditionError("vector length does not match subspace ambient dimension");
    for (Eigen::Index i = 0; i < basis_.rows(); ++i) {
        FieldElement f = v(leads_[i]);
        if (f.is_zero()) continue;
        for (Eigen::Index j = 0; j < v.size(); ++j) v(j) -= f * basis_(i, j);
    }
    return v;
}

bool Subspace::operator==(const Subspace& o) const { return exactly_equal(basis_, o.basis_); }

Subspace kernel(const Matrix& m) {
    RrefResult r = rref(m);
    const Eigen::Index n = m.cols();
    std::vector<Eigen::Index> free_cols;
    for (Eigen::Index c = 0, p = 0; c < n; ++c) {
        if (p < r.rank && r.pivots[p] == c) {
            ++p;
        } else {
            free_cols.push_back(c);
        }
    }
    Matrix basis(static_cast<Eigen::Index>(free_cols.size()), n);
    basis.setZero();
    for (Eigen::Index k = 0; k < basis.rows(); ++k) {
        const Eigen::Index f = free_cols[k];
        basis(k, f) = FieldElement(1);
        for (Eigen::Index i = 0; i < r.rank; ++i) basis(k, r.pivots[i]) = -r.mat(i, f);
    }
    return Subspace::from_rows(basis);
}

Subspace image(const Matrix& m) { return Subspace::from_rows(m.transpose()); }

std::optional<Vector> solve(const Matrix& m, const Vector& rhs) {
    if (rhs.size() != m.rows()) throw PreconditionError("solve: right-hand side has wrong length");
    Matrix aug(m.rows(), m.cols() + 1);
    aug.leftCols(m.cols()) = m;
    aug.col(m.cols()) = rhs;
    RrefResult r = rref(std::move(aug), m.cols());
    for (Eigen::Index i = r.rank; i < m.rows(); ++i) {
        if (!r.mat(i, m.cols()).is_zero()) return std::nullopt;
    }
    Vector x = Vector::Zero(m.cols());
    for (Eigen::Index i = 0; i < r.rank; ++i) x(r.pivots[i]) = r.mat(i, m.cols());
    return x;
}

Matrix inverse(const Matrix& m) {
    const Eigen::Index n = m.rows();
    if (m.cols() != n) throw PreconditionError("inverse: matrix is not square");
    Matrix aug(n, 2 * n);
    aug.leftCols(n) = m;
    aug.rightCols(n) = Matrix::Identity(n, n);
    RrefResult r = rref(std::move(aug), n);
    if (r.rank != n) throw PreconditionError("inverse: matrix is singular");
    return r.mat.rightCols(n);
}

FieldElement det(Matrix m) {
    const Eigen::Index n = m.rows();
    if (m.cols() != n) throw PreconditionError("det: matrix is not square");
    FieldElement d(1);
    Eigen::Index r = 0;
    for (Eigen::Index col = 0; col < n; ++col) {
        Eigen::Index piv = -1;
        for (Eigen::Index i = r; i < n; ++i) {
            if (!m(i, col).is_zero()) {
                piv = i;
                break;
            }
        }
        if (piv < 0) return FieldElement(0);
        if (piv != r) {
            m.row(r).swap(m.row(piv));
            d = -d;
        }
        d *= m(r, col);
        FieldElement pv = m(r, col).inv();
        for (Eigen::Index j = col; j < n; ++j) m(r, j) *= pv;
        for (Eigen::Index i = r + 1; i < n; ++i) {
            if (m(i, col).is_zero()) continue;
            FieldElement f = m(i, col);
            for (Eigen::Index j = col; j < n; ++j) m(i, j) -= f * m(r, j);
        }
        ++r;
    }
    return d;
}

}  // namespace projrigid
