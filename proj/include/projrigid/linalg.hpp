#pragma once

#include "projrigid/field.hpp"

#include <Eigen/Core>

#include <optional>
#include <vector>

namespace Eigen {

template <>
struct NumTraits<projrigid::FieldElement> {
    using Real = projrigid::FieldElement;
    using NonInteger = projrigid::FieldElement;
    using Literal = projrigid::FieldElement;
    using Nested = projrigid::FieldElement;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 32,
        MulCost = 64,
    };
    static inline projrigid::FieldElement epsilon() { return projrigid::FieldElement(0); }
    static inline projrigid::FieldElement dummy_precision() { return projrigid::FieldElement(0); }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace projrigid {

using Matrix = Eigen::Matrix<FieldElement, Eigen::Dynamic, Eigen::Dynamic>;
using Vector = Eigen::Matrix<FieldElement, Eigen::Dynamic, 1>;

bool exactly_equal(const Matrix& a, const Matrix& b);
bool is_zero(const Matrix& a);

struct RrefResult {
    Matrix mat;
    std::vector<Eigen::Index> pivots;
    Eigen::Index rank = 0;
};

// Row-reduce with the fixed pivot rule: scan columns left to right and take the
// first nonzero entry from the top among untouched rows. Restricting to the
// leading `pivot_limit` columns still reduces the full rows (used for augmented
// systems); -1 means all columns are eligible.
RrefResult rref(Matrix m, Eigen::Index pivot_limit = -1);

Eigen::Index rank(const Matrix& m);

// A subspace of row vectors, stored as its unique reduced-echelon basis.
class Subspace {
  public:
    Subspace() = default;
    // Canonicalizes arbitrary spanning rows (zero rows allowed).
    static Subspace from_rows(const Matrix& rows);
    static Subspace zero(Eigen::Index ambient);
    static Subspace full(Eigen::Index ambient);

    const Matrix& basis() const { return basis_; }
    Eigen::Index dim() const { return basis_.rows(); }
    Eigen::Index ambient() const { return basis_.cols(); }
    const std::vector<Eigen::Index>& leads() const { return leads_; }

    bool contains(const Vector& v) const;
    // Canonical coset representative: v minus its projection along the basis leads.
    Vector reduce(Vector v) const;

    bool operator==(const Subspace& o) const;

  private:
    Matrix basis_;                       // dim x ambient, reduced echelon, no zero rows
    std::vector<Eigen::Index> leads_;    // leading-one column of each basis row
};

// Kernel {x : m x = 0} as a canonical subspace of column coordinates.
Subspace kernel(const Matrix& m);
// Column span of m, canonicalized as row vectors of its transpose.
Subspace image(const Matrix& m);

// One solution of m x = rhs chosen deterministically (free coordinates zero),
// or nullopt when the system is inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& rhs);

Matrix inverse(const Matrix& m);
FieldElement det(Matrix m);

}  // namespace projrigid
