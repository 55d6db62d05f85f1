#pragma once

#include "projrigid/lie.hpp"

namespace projrigid {

// Twisted 1-cochain: one module element per generator, extended to the whole
// group by the crossed-homomorphism rule z(uv) = z(u) + Ad(rho(u)) z(v).
struct Cochain1 {
    Module module = Module::v;
    std::vector<Matrix> values;
};

// Twisted 2-cochain evaluated on the relators, one module element each.
struct Cochain2 {
    Module module = Module::gl4;
    std::vector<Matrix> values;
};

Vector cochain_coords(const Cochain1& z);
Cochain1 cochain_from_coords(Module m, int generator_count, const Vector& coords);

// Block matrix of Fox derivatives of the relators, acting on generator-indexed
// coordinate blocks; its kernel is the space of twisted cocycles Z^1.
Matrix fox_block_matrix(const Presentation& pres, const Representation& rep, Module m);

// Stacked blocks Ad(rho(x_i)) - I; image gives coboundaries B^1, kernel H^0.
Matrix coboundary_matrix(const Presentation& pres, const Representation& rep, Module m);

struct CohomologyReport {
    Module module = Module::v;
    Eigen::Index fox_rank = 0;
    Subspace z1;       // subspace of generator-block coordinates
    Subspace b1;       // coboundary subspace inside z1's ambient space
    Subspace h0;       // invariant vectors in the module
    Matrix h1_reps;    // cocycle rows representing a basis of H^1
    Eigen::Index dim_h1 = 0;
    Eigen::Index dim_h2 = 0;  // relator-count * dim - fox_rank
    bool h2_valid = false;    // only claims H^2 when the presentation is aspherical
};

CohomologyReport cohomology(const Presentation& pres, const Representation& rep, Module m);

bool is_cocycle(const Cochain1& z, const Presentation& pres, const Representation& rep);

// Value of the extended cochain on an arbitrary word.
Matrix extend_cocycle(const Cochain1& z, const Word& w, const Representation& rep);

// Whether the restriction of z to the cyclic subgroup generated by w stays
// nontrivial, i.e. z(w) is not in the image of Ad(rho(w)) - I.
bool restriction_nontrivial(const Cochain1& z, const Word& w, const Representation& rep);

// Killing pairing of z(w) against an invariant element a; requires
// Ad(rho(w)) a = a exactly.
FieldElement pairing_certificate(const Cochain1& z, const Word& w, const Matrix& a,
                                 const Representation& rep);

struct CupResult {
    Cochain2 cochain;    // cup-product 2-cochain on the relators, valued in gl4
    Vector class_rep;    // canonical representative modulo 2-coboundaries
    bool class_zero = false;
};

// Cup product of two cocycles through the matrix product on gl4, evaluated on
// the relators via a chain-level lift; the class is well defined modulo the
// image of the Fox block matrix on gl4.
CupResult cup_product(const Cochain1& z1, const Cochain1& z2, const Presentation& pres,
                      const Representation& rep);

// Pullback of z along a group endomorphism phi (one image word per generator)
// intertwined by the matrix a: checks rho(phi(x_i)) = a rho(x_i) a^-1 exactly,
// then returns x_i -> Ad(a^-1) z(phi(x_i)), verified to be a cocycle again.
Cochain1 pullback_cocycle(const Cochain1& z, const std::vector<Word>& phi, const Matrix& a,
                          const Presentation& pres, const Representation& rep);

}  // namespace projrigid
