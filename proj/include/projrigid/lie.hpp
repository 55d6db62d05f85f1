#pragma once

#include "projrigid/linalg.hpp"
#include "projrigid/words.hpp"

#include <array>
#include <string>
#include <vector>

namespace projrigid {

// Coefficient modules for the twisted cochain complexes, all realized inside
// 4x4 matrices: v (symmetric traceless part), so31 (antisymmetric part w.r.t.
// the Minkowski form), sl4 = so31 + v, and gl4 = sl4 + scalars.
enum class Module { v, so31, sl4, gl4 };

Module module_from_name(const std::string& name);
std::string module_name(Module m);
Eigen::Index module_dim(Module m);

// Minkowski form diag(1, 1, 1, -1).
Matrix minkowski_form();

// Fixed ordered basis of the module, as 4x4 integer matrices.
const std::vector<Matrix>& module_basis(Module m);
// Coordinates of X in the module basis; throws PreconditionError when X does
// not lie in the module (or is not traceless where required).
Vector module_coords(Module m, const Matrix& x);
Matrix module_from_coords(Module m, const Vector& coords);

// Splitting of a 4x4 matrix into its so31 and v parts with respect to J:
// Xso = (X - J X^t J) / 2, Xv = X - Xso.
std::pair<Matrix, Matrix> split_so31_v(const Matrix& x);

bool is_so31_element(const Matrix& a);

// Image of a unit-determinant 2x2 matrix over Q(i, sqrt(d)) under the double
// cover SL(2,C) -> SO(3,1), computed through the Hermitian-matrix action
// H -> A H A^dagger in the basis (i s2-like, symmetric, diagonal, identity).
Matrix lift_sl2c(const Matrix& a);

// Matrix of X -> g X g^-1 on the chosen module basis.
Matrix adjoint_on_module(const Matrix& g, Module m);

// Killing-form normalization used throughout: B(X, Y) = 8 tr(XY).
FieldElement killing(const Matrix& x, const Matrix& y);

// A representation of the presentation's generators by exact SO(3,1) matrices.
class Representation {
  public:
    // Validates A^t J A = J and det A = 1 for every generator matrix.
    explicit Representation(std::vector<Matrix> mats);
    // Lifts unit-determinant 2x2 matrices through SL(2,C) -> SO(3,1) first.
    static Representation lift_from_sl2(const std::vector<Matrix>& two_by_two);

    int count() const { return static_cast<int>(mats_.size()); }
    const Matrix& mat(int gen) const { return mats_.at(static_cast<std::size_t>(gen)); }
    const Matrix& inv(int gen) const { return invs_.at(static_cast<std::size_t>(gen)); }

  private:
    std::vector<Matrix> mats_;
    std::vector<Matrix> invs_;
};

Matrix eval_word(const Representation& rep, const Word& w);

// Throws PreconditionError naming the first relator that does not evaluate to
// the identity.
void check_relators(const Presentation& pres, const Representation& rep);

// Module-level evaluation of a group-ring element: sum of coeff * Ad(rho(w)).
Matrix eval_ring_adjoint(const Representation& rep, const GroupRingElement& elem, Module m);

// Common fixed space of Ad(rho(w)) for the listed words; the full module when
// the list is empty.
Subspace invariant_subspace(const std::vector<Word>& words, const Representation& rep, Module m);

// Structure check of su(3,1) = so31 + i*v against the grading by the boost
// eta = E_34 + E_43: eigenspace dimensions, Killing orthogonality of g_k and
// g_l for k + l != 0, and the radical of the form restricted to the
// nonnegative part g_0 + g_1 + g_2 being exactly g_1 + g_2.
struct Su31Report {
    std::array<Eigen::Index, 5> dims{};  // eigenvalues -2, -1, 0, 1, 2
    bool ad_eta_rational = false;
    bool orthogonal = false;
    Eigen::Index gplus_dim = 0;
    bool radical_matches = false;
    bool all_ok() const {
        return ad_eta_rational && orthogonal && radical_matches && gplus_dim == 10 &&
               dims == std::array<Eigen::Index, 5>{1, 4, 5, 4, 1};
    }
};

Su31Report su31_root_check();

}  // namespace projrigid
