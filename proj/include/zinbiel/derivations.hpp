#pragma once

/*
 * Inner derivations, the full derivation algebra, and the identities that
 * connect them.
 *
 * Conventions (these decide every sign and every table comparison):
 *
 *   ad_w(u) = u∘w − w∘u, i.e. ad_w = R_w − L_w.  The opposite sign flips
 *   every generator but spans the same space, so dimensions are unaffected;
 *   this orientation is the one that reproduces the published matrices.
 *
 *   Matrices store columns as images.  The symbolic matrix entry (j, i) is
 *   the e_j-coefficient of ad_w(e_i) as a linear form in the coordinates
 *   a_1..a_n of w; concretely the coefficient of a_t is
 *   gamma_{it}^j − gamma_{ti}^j.  Indexing that formula by (i, j) instead
 *   gives the transpose of the displayed matrix.
 *
 * Inn(A) is the span of ad_{e_1}..ad_{e_n} under row-major vectorization.
 * Der(A) is the nullspace, over the n^2 entries of an unknown matrix d, of
 * the n^3 Leibniz constraints on basis pairs.  Membership of ad_w in Der(A)
 * is a per-algebra fact, not a theorem: is_derivation exists because it
 * genuinely fails on some algebras (see the counterexample tests).
 */

#include "zinbiel/algebra.hpp"
#include "zinbiel/linalg.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace zinbiel {

/// Formal linear combination sum_t coeffs[t] a_t of the coordinates of a
/// generic element w.
struct LinearForm {
    Vec coeffs;

    bool is_zero() const { return vec_is_zero(coeffs); }
    Rational evaluate(const Vec& w) const;

    /// Rendering used in tables: "0", "a_2", "-2a_1", "1/2a_1", "a_2 - a_3".
    std::string str() const;

    friend bool operator==(const LinearForm& a, const LinearForm& b) = default;
};

/// The matrix of ad_w for generic w, entries as linear forms; entry (j, i)
/// is the e_j-coefficient of ad_w(e_i).
class SymbolicAdMatrix {
public:
    explicit SymbolicAdMatrix(std::size_t dim);

    std::size_t dim() const { return dim_; }

    LinearForm& at(std::size_t j, std::size_t i) { return entries_[j * dim_ + i]; }
    const LinearForm& at(std::size_t j, std::size_t i) const { return entries_[j * dim_ + i]; }

    /// Substitution of a concrete w; equals ad_matrix(a, w) by construction.
    Matrix evaluate(const Vec& w) const;

    /// Row j as its rendered entries joined by two spaces, e.g. "a_2  -a_1  0".
    std::string row_string(std::size_t j) const;
    std::vector<std::vector<std::string>> render() const;

    friend bool operator==(const SymbolicAdMatrix& a, const SymbolicAdMatrix& b) = default;

private:
    std::size_t dim_;
    std::vector<LinearForm> entries_;
};

/// ad_w as a concrete matrix: column i = coordinates of e_i∘w − w∘e_i.
Matrix ad_matrix(const AlgebraSpec& a, const Vec& w);

/// The generators B_t = ad_{e_t}, t = 1..n; ad_w = sum_t w_t B_t.
std::vector<Matrix> ad_generators(const AlgebraSpec& a);

SymbolicAdMatrix symbolic_ad(const AlgebraSpec& a);

enum class DerivationKind { inner, full };

/// A subspace of operator matrices: canonical basis matrices plus the
/// underlying vectorized subspace for membership queries.
struct DerivationSpace {
    DerivationKind kind;
    std::size_t algebra_dim;
    std::vector<Matrix> basis;
    Subspace space;  // span of the vectorized basis

    std::size_t dim() const { return basis.size(); }
    bool contains(const Matrix& m) const { return space.contains(m.vectorize()); }
};

/// Inn(A) = span{ad_{e_1}..ad_{e_n}}.
DerivationSpace inner_derivation_space(const AlgebraSpec& a);

/// Der(A), computed as one exact nullspace over the matrix entries.
DerivationSpace derivation_space(const AlgebraSpec& a);

/// Leibniz check for a single matrix; on failure carries the first
/// violating 1-based basis pair and its residual
/// d(e_i∘e_j) − d(e_i)∘e_j − e_i∘d(e_j).
struct DerivationCheck {
    bool ok = true;
    std::size_t i = 0, j = 0;
    Vec residual;
};

DerivationCheck is_derivation(const AlgebraSpec& a, const Matrix& m);

/// Result of a check whose statement only makes sense for d in Der(A):
/// the precondition is verified first and reported distinctly.
enum class CheckStatus { holds, fails, not_a_derivation };

struct DerivationPropertyResult {
    CheckStatus status;
    std::string detail;  // empty when the property holds
    bool holds() const { return status == CheckStatus::holds; }
};

/// For every basis element u: d L_u − L_u d == L_{d(u)} and
/// d R_u − R_u d == R_{d(u)}.
DerivationPropertyResult check_mult_operator_identity(const AlgebraSpec& a, const Matrix& d);

/// d is also a derivation of the bracket algebra:
/// d([e_i,e_j]) == [d(e_i),e_j] + [e_i,d(e_j)] for all pairs.
DerivationPropertyResult check_lie_derivation(const AlgebraSpec& a, const Matrix& d);

/// Joint report on how Inn(A) sits inside the operator algebra:
/// the bracket identity d B_t − B_t d == ad_{d(e_t)} over the Der(A) basis,
/// and the commutators [B_s, B_t] (all zero? contained in Inn?).
struct InnerIdealReport {
    bool bracket_identity_holds = true;
    std::optional<std::pair<std::size_t, std::size_t>> identity_failure;  // (Der basis index, t), 1-based t
    bool commutators_all_zero = true;
    bool commutators_in_inner = true;
    std::optional<std::pair<std::size_t, std::size_t>> first_nonzero_commutator;   // (s, t), 1-based
    std::optional<std::pair<std::size_t, std::size_t>> first_escaping_commutator;  // (s, t), 1-based
};

InnerIdealReport check_inner_ideal(const AlgebraSpec& a);

/// Randomized confirmation that w -> ad_w is linear and lands in Inn(A):
/// draws random rational alphas and vectors w_i, compares
/// ad_{sum alpha_i w_i} with sum alpha_i ad_{w_i} entrywise, and reduces the
/// evaluated matrix against the Inn(A) basis.
bool ad_linearity_check(const AlgebraSpec& a, std::size_t trials, std::uint64_t seed);

} // namespace zinbiel
