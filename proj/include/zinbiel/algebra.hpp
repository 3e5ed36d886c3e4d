#pragma once

/*
 * Algebras presented by structure constants, and the identities checked on
 * them.
 *
 * An algebra is a dimension n and a dense tensor gamma with
 * e_i ∘ e_j = sum_k gamma[i][j][k] e_k (indices 0-based internally, 1-based
 * in every report and error message).  The product is an arbitrary bilinear
 * map; nothing here assumes the Zinbiel identity, which is what makes
 * check_zinbiel a genuine test.  All checks run over basis elements only:
 * the identities are multilinear, so basis cases decide the general case.
 */

#include "zinbiel/linalg.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace zinbiel {

class AlgebraSpec {
public:
    AlgebraSpec(std::string name, std::size_t dim)
        : name_(std::move(name)), dim_(dim), gamma_(dim * dim * dim) {}

    const std::string& name() const { return name_; }
    std::size_t dim() const { return dim_; }

    /// gamma_{ij}^k, all indices 0-based.
    const Rational& gamma(std::size_t i, std::size_t j, std::size_t k) const {
        return gamma_[(i * dim_ + j) * dim_ + k];
    }
    Rational& gamma(std::size_t i, std::size_t j, std::size_t k) {
        return gamma_[(i * dim_ + j) * dim_ + k];
    }

    /// Sets e_i ∘ e_j += c e_k (0-based indices).
    void add_product_term(std::size_t i, std::size_t j, std::size_t k, const Rational& c) {
        gamma(i, j, k) += c;
    }

    bool same_structure(const AlgebraSpec& o) const {
        return dim_ == o.dim_ && gamma_ == o.gamma_;
    }

    friend bool operator==(const AlgebraSpec& a, const AlgebraSpec& b) = default;

private:
    std::string name_;
    std::size_t dim_;
    std::vector<Rational> gamma_;
};

/// Bilinear extension of gamma to arbitrary coordinate vectors.
Vec product(const AlgebraSpec& a, const Vec& u, const Vec& v);

/// One failing basis triple of the Zinbiel identity.  Indices are 1-based;
/// residual = (e_i∘e_j)∘e_k − e_i∘(e_j∘e_k) − e_i∘(e_k∘e_j).
struct ZinbielViolation {
    std::size_t i, j, k;
    Vec residual;
};

/// All violating basis triples; empty iff the algebra is Zinbiel.
std::vector<ZinbielViolation> check_zinbiel(const AlgebraSpec& a);

/// L_u with L_u(v) = u∘v; column j holds the coordinates of u∘e_j.
Matrix left_mult(const AlgebraSpec& a, const Vec& u);

/// R_u with R_u(v) = v∘u; column j holds the coordinates of e_j∘u.
Matrix right_mult(const AlgebraSpec& a, const Vec& u);

/// The bracket algebra [u,v] = u∘v − v∘u (structure constants antisymmetrized).
AlgebraSpec commutator(const AlgebraSpec& a);

/// Jacobi check for bracket algebras.  Non-antisymmetric input is reported
/// through the antisymmetric flag and no triple is evaluated; violations
/// hold the 1-based triples where the Jacobi sum is nonzero.
struct JacobiResult {
    bool antisymmetric = false;
    std::vector<std::array<std::size_t, 3>> violations;
    bool ok() const { return antisymmetric && violations.empty(); }
};

JacobiResult check_jacobi(const AlgebraSpec& a);

/// Ann_L = {u : u ∘ A = 0}, the nullspace of the stacked maps u -> u∘e_j.
Subspace annihilator_left(const AlgebraSpec& a);

/// Ann_R = {u : A ∘ u = 0}.
Subspace annihilator_right(const AlgebraSpec& a);

/// Two-sided ideal test; checks b∘e_j and e_j∘b for every subspace basis
/// vector b, which suffices by bilinearity.  On failure carries the first
/// escaping product.
struct IdealCheck {
    bool ok = true;
    std::size_t subspace_index = 0;  // 0-based index into s.basis()
    std::size_t algebra_index = 0;   // 1-based basis element e_j
    bool multiplied_from_right = false;  // true: b∘e_j escaped, false: e_j∘b
    Vec escaping_product;
};

IdealCheck is_two_sided_ideal(const AlgebraSpec& a, const Subspace& s);

} // namespace zinbiel
