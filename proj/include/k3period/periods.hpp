// Period power series of the K3 family, its torus/box operator system in
// the six ambient coefficients, the reduction to the two moduli, and the
// rank-lowering second operator found by indeterminate coefficients.
//
// The overall (2*pi*i)^2 prefactor of the period integral is dropped:
// every statement checked here is invariant under scaling.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "k3period/euler_op.hpp"

namespace k3p {

struct GKZData {
    // columns are exponent vectors of the six monomials; first row all ones
    std::vector<std::vector<Rat>> a_matrix;  // 4 x 6
    std::vector<Rat> beta;                   // length 4
    std::vector<std::vector<int>> kernel_vectors;
    // indices (0-based) of the coefficients playing lambda and mu
    int free_lambda = 4, free_mu = 5;
    // exponent vectors with lambda = a^e_lambda, mu = a^e_mu
    std::vector<int> e_lambda, e_mu;

    static GKZData reference();  // the data attached to this family
    void validate() const;       // kernel vectors really lie in ker(A)
};

// Torus relation sum_i c_i theta_i + c0 annihilating the series.
struct TorusOp {
    std::vector<Rat> theta;  // length 6
    Rat constant;
    std::string str() const;
};

// Box operator d^plus - d^minus attached to a kernel vector.
struct BoxOp {
    std::vector<int> plus, minus;  // componentwise nonneg, plus - minus in ker A
    std::string str() const;
};

struct GkzOperators {
    std::vector<TorusOp> torus;
    std::vector<BoxOp> boxes;
};

struct HolonomicSystem {
    std::vector<EulerOp> operators;
    std::vector<std::string> names;
};

struct AnnihilationReport {
    int max_checked_order = -1;
    bool all_zero = false;
    std::pair<int, int> first_violation{-1, -1};
};

// c_{n,m} = (-1)^m (5m+2n)! / (n! (m!)^3 (2m+n)!)
Rat period_coefficient(int n, int m);
Series2 period_series(int order);

GkzOperators gkz_operators(const GKZData& data);

// Substitutes the torus relations into the box operators, yielding the
// holonomic pair in (lambda, mu). Output operators are sign-normalized.
HolonomicSystem reduce_to_two_vars(const GKZData& data);

AnnihilationReport verify_annihilation(const EulerOp& op, const Series2& s);

// Reference operators (the reduced pair and the rank-4 partner).
EulerOp op_L1();
EulerOp op_L2();
EulerOp op_L3();

struct SecondOperatorResult {
    EulerOp op;
    int constrained_nullity = 0;    // dimension of the gauged solve (want 1)
    int unconstrained_nullity = 0;  // annihilation-only nullspace dimension
    int multiplier_dim = 0;         // dim of left-multiples of L1 in the ansatz
};

// Indeterminate-coefficient search for a second operator independent of L1:
// ansatz f1 + f2 tl + f3 tm + f4 tl^2 + f5 tl tm + f6 tm^2 with deg f_i <=
// basis_degree. Throws std::domain_error when no solution exists at this
// degree. The gauge pinning the representative: f6 supported on lambda^2
// only and f5 without degree-1 terms; output is integer-primitive with
// positive f6.
SecondOperatorResult find_second_operator(int basis_degree, int series_order = 16);

}  // namespace k3p
