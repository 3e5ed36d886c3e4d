#include "zinbiel/derivations.hpp"

#include "zinbiel/rng.hpp"

#include <stdexcept>

namespace zinbiel {

Rational LinearForm::evaluate(const Vec& w) const {
    if (w.size() != coeffs.size())
        throw std::invalid_argument("LinearForm: coordinate count mismatch");
    Rational out;
    for (std::size_t t = 0; t < coeffs.size(); ++t)
        if (!coeffs[t].is_zero()) out += coeffs[t] * w[t];
    return out;
}

std::string LinearForm::str() const {
    std::string out;
    for (std::size_t t = 0; t < coeffs.size(); ++t) {
        const Rational& c = coeffs[t];
        if (c.is_zero()) continue;
        const bool negative = c.sign() < 0;
        if (out.empty()) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        const Rational mag = c.abs();
        if (!mag.is_one()) out += mag.str();
        out += "a_" + std::to_string(t + 1);
    }
    if (out.empty()) out = "0";
    return out;
}

SymbolicAdMatrix::SymbolicAdMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {
    for (auto& e : entries_) e.coeffs.assign(dim, Rational());
}

Matrix SymbolicAdMatrix::evaluate(const Vec& w) const {
    Matrix m(dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j)
        for (std::size_t i = 0; i < dim_; ++i)
            m.at(j, i) = at(j, i).evaluate(w);
    return m;
}

std::string SymbolicAdMatrix::row_string(std::size_t j) const {
    std::string out;
    for (std::size_t i = 0; i < dim_; ++i) {
        if (i > 0) out += "  ";
        out += at(j, i).str();
    }
    return out;
}

std::vector<std::vector<std::string>> SymbolicAdMatrix::render() const {
    std::vector<std::vector<std::string>> rows(dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
        rows[j].reserve(dim_);
        for (std::size_t i = 0; i < dim_; ++i) rows[j].push_back(at(j, i).str());
    }
    return rows;
}

Matrix ad_matrix(const AlgebraSpec& a, const Vec& w) {
    return right_mult(a, w) - left_mult(a, w);
}

std::vector<Matrix> ad_generators(const AlgebraSpec& a) {
    const std::size_t n = a.dim();
    std::vector<Matrix> gens;
    gens.reserve(n);
    for (std::size_t t = 0; t < n; ++t) gens.push_back(ad_matrix(a, basis_vec(n, t)));
    return gens;
}

SymbolicAdMatrix symbolic_ad(const AlgebraSpec& a) {
    const std::size_t n = a.dim();
    SymbolicAdMatrix m(n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t t = 0; t < n; ++t)
                m.at(j, i).coeffs[t] = a.gamma(i, t, j) - a.gamma(t, i, j);
    return m;
}

namespace {

DerivationSpace make_space(DerivationKind kind, std::size_t n, const Subspace& vec_space) {
    DerivationSpace out{kind, n, {}, vec_space};
    out.basis.reserve(vec_space.dim());
    for (const Vec& v : vec_space.basis())
        out.basis.push_back(Matrix::from_vectorized(v, n, n));
    return out;
}

} // namespace

DerivationSpace inner_derivation_space(const AlgebraSpec& a) {
    const std::size_t n = a.dim();
    std::vector<Vec> rows;
    rows.reserve(n);
    for (const Matrix& g : ad_generators(a)) rows.push_back(g.vectorize());
    return make_space(DerivationKind::inner, n, span(rows));
}

DerivationSpace derivation_space(const AlgebraSpec& a) {
    const std::size_t n = a.dim();
    // Unknown d with entries d_{pq} (row p, column q; column q is the image
    // of e_q), flattened row-major to index p*n + q.  One constraint row per
    // (i, j, k): the e_k-coordinate of d(e_i∘e_j) − d(e_i)∘e_j − e_i∘d(e_j).
    Matrix system(n * n * n, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const std::size_t row = (i * n + j) * n + k;
                for (std::size_t m = 0; m < n; ++m)
                    system.at(row, k * n + m) += a.gamma(i, j, m);
                for (std::size_t p = 0; p < n; ++p) {
                    system.at(row, p * n + i) -= a.gamma(p, j, k);
                    system.at(row, p * n + j) -= a.gamma(i, p, k);
                }
            }
    return make_space(DerivationKind::full, n, nullspace(system));
}

DerivationCheck is_derivation(const AlgebraSpec& a, const Matrix& m) {
    const std::size_t n = a.dim();
    if (m.rows() != n || m.cols() != n)
        throw std::invalid_argument("is_derivation: matrix does not match algebra dimension");
    for (std::size_t i = 0; i < n; ++i) {
        const Vec ei = basis_vec(n, i);
        const Vec di = m.column(i);
        for (std::size_t j = 0; j < n; ++j) {
            const Vec ej = basis_vec(n, j);
            Vec res = m.apply(product(a, ei, ej));
            res = vec_sub(res, product(a, di, ej));
            res = vec_sub(res, product(a, ei, m.column(j)));
            if (!vec_is_zero(res))
                return DerivationCheck{false, i + 1, j + 1, std::move(res)};
        }
    }
    return DerivationCheck{};
}

namespace {

std::optional<DerivationPropertyResult> require_derivation(const AlgebraSpec& a,
                                                           const Matrix& d) {
    const DerivationCheck c = is_derivation(a, d);
    if (c.ok) return std::nullopt;
    return DerivationPropertyResult{
        CheckStatus::not_a_derivation,
        "matrix is not a derivation: Leibniz fails at basis pair (" +
            std::to_string(c.i) + ", " + std::to_string(c.j) + ")"};
}

} // namespace

DerivationPropertyResult check_mult_operator_identity(const AlgebraSpec& a, const Matrix& d) {
    if (auto pre = require_derivation(a, d)) return *pre;
    const std::size_t n = a.dim();
    for (std::size_t t = 0; t < n; ++t) {
        const Vec u = basis_vec(n, t);
        const Vec du = d.apply(u);
        const Matrix lu = left_mult(a, u), ru = right_mult(a, u);
        if (d * lu - lu * d != left_mult(a, du))
            return {CheckStatus::fails,
                    "[d, L_u] != L_{d(u)} at u = e_" + std::to_string(t + 1)};
        if (d * ru - ru * d != right_mult(a, du))
            return {CheckStatus::fails,
                    "[d, R_u] != R_{d(u)} at u = e_" + std::to_string(t + 1)};
    }
    return {CheckStatus::holds, ""};
}

DerivationPropertyResult check_lie_derivation(const AlgebraSpec& a, const Matrix& d) {
    if (auto pre = require_derivation(a, d)) return *pre;
    const AlgebraSpec b = commutator(a);
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec ei = basis_vec(n, i);
        const Vec di = d.column(i);
        for (std::size_t j = 0; j < n; ++j) {
            const Vec ej = basis_vec(n, j);
            Vec res = d.apply(product(b, ei, ej));
            res = vec_sub(res, product(b, di, ej));
            res = vec_sub(res, product(b, ei, d.column(j)));
            if (!vec_is_zero(res))
                return {CheckStatus::fails,
                        "Lie-Leibniz fails at bracket pair (" + std::to_string(i + 1) +
                            ", " + std::to_string(j + 1) + ")"};
        }
    }
    return {CheckStatus::holds, ""};
}

InnerIdealReport check_inner_ideal(const AlgebraSpec& a) {
    const std::size_t n = a.dim();
    const std::vector<Matrix> gens = ad_generators(a);
    const DerivationSpace inn = inner_derivation_space(a);
    const DerivationSpace der = derivation_space(a);

    InnerIdealReport report;
    for (std::size_t d = 0; d < der.basis.size() && report.bracket_identity_holds; ++d)
        for (std::size_t t = 0; t < n; ++t) {
            const Matrix lhs = der.basis[d] * gens[t] - gens[t] * der.basis[d];
            if (lhs != ad_matrix(a, der.basis[d].column(t))) {
                report.bracket_identity_holds = false;
                report.identity_failure = {d, t + 1};
                break;
            }
        }

    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = 0; t < n; ++t) {
            const Matrix c = gens[s] * gens[t] - gens[t] * gens[s];
            if (c.is_zero()) continue;
            if (report.commutators_all_zero) {
                report.commutators_all_zero = false;
                report.first_nonzero_commutator = {s + 1, t + 1};
            }
            if (report.commutators_in_inner && !inn.contains(c)) {
                report.commutators_in_inner = false;
                report.first_escaping_commutator = {s + 1, t + 1};
            }
        }
    return report;
}

bool ad_linearity_check(const AlgebraSpec& a, std::size_t trials, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("ad_linearity_check: trials must be >= 1");
    const std::size_t n = a.dim();
    const DerivationSpace inn = inner_derivation_space(a);
    Rng rng(seed);
    for (std::size_t trial = 0; trial < trials; ++trial) {
        const std::size_t terms = static_cast<std::size_t>(rng.integer(1, 3));
        Vec combined(n);
        Matrix expected(n, n);
        for (std::size_t t = 0; t < terms; ++t) {
            const Rational alpha = rng.rational();
            const Vec w = rng.vector(n);
            combined = vec_add(combined, vec_scale(alpha, w));
            expected = expected + alpha * ad_matrix(a, w);
        }
        const Matrix actual = ad_matrix(a, combined);
        if (actual != expected) return false;
        if (!inn.contains(actual)) return false;
    }
    return true;
}

} // namespace zinbiel
