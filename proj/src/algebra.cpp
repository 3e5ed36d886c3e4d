#include "zinbiel/algebra.hpp"

#include <stdexcept>

namespace zinbiel {

Vec product(const AlgebraSpec& a, const Vec& u, const Vec& v) {
    const std::size_t n = a.dim();
    if (u.size() != n || v.size() != n)
        throw std::invalid_argument("product: vector length does not match algebra dimension");
    Vec out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (u[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (v[j].is_zero()) continue;
            const Rational uv = u[i] * v[j];
            for (std::size_t k = 0; k < n; ++k) {
                const Rational& g = a.gamma(i, j, k);
                if (!g.is_zero()) out[k] += uv * g;
            }
        }
    }
    return out;
}

std::vector<ZinbielViolation> check_zinbiel(const AlgebraSpec& a) {
    const std::size_t n = a.dim();
    std::vector<ZinbielViolation> out;
    for (std::size_t i = 0; i < n; ++i) {
        const Vec ei = basis_vec(n, i);
        for (std::size_t j = 0; j < n; ++j) {
            const Vec ej = basis_vec(n, j);
            const Vec eij = product(a, ei, ej);
            for (std::size_t k = 0; k < n; ++k) {
                const Vec ek = basis_vec(n, k);
                Vec res = product(a, eij, ek);
                res = vec_sub(res, product(a, ei, product(a, ej, ek)));
                res = vec_sub(res, product(a, ei, product(a, ek, ej)));
                if (!vec_is_zero(res))
                    out.push_back(ZinbielViolation{i + 1, j + 1, k + 1, std::move(res)});
            }
        }
    }
    return out;
}

Matrix left_mult(const AlgebraSpec& a, const Vec& u) {
    const std::size_t n = a.dim();
    if (u.size() != n)
        throw std::invalid_argument("left_mult: vector length does not match algebra dimension");
    Matrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        const Vec col = product(a, u, basis_vec(n, j));
        for (std::size_t i = 0; i < n; ++i) m.at(i, j) = col[i];
    }
    return m;
}

Matrix right_mult(const AlgebraSpec& a, const Vec& u) {
    const std::size_t n = a.dim();
    if (u.size() != n)
        throw std::invalid_argument("right_mult: vector length does not match algebra dimension");
    Matrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        const Vec col = product(a, basis_vec(n, j), u);
        for (std::size_t i = 0; i < n; ++i) m.at(i, j) = col[i];
    }
    return m;
}

AlgebraSpec commutator(const AlgebraSpec& a) {
    const std::size_t n = a.dim();
    AlgebraSpec b("[" + a.name() + "]", n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                b.gamma(i, j, k) = a.gamma(i, j, k) - a.gamma(j, i, k);
    return b;
}

JacobiResult check_jacobi(const AlgebraSpec& a) {
    const std::size_t n = a.dim();
    JacobiResult result;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (a.gamma(i, j, k) != -a.gamma(j, i, k)) return result;
    result.antisymmetric = true;

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const Vec ei = basis_vec(n, i), ej = basis_vec(n, j), ek = basis_vec(n, k);
                Vec sum = product(a, product(a, ei, ej), ek);
                sum = vec_add(sum, product(a, product(a, ej, ek), ei));
                sum = vec_add(sum, product(a, product(a, ek, ei), ej));
                if (!vec_is_zero(sum))
                    result.violations.push_back({i + 1, j + 1, k + 1});
            }
    return result;
}

namespace {

// Rows of the system "u annihilates from the given side", one row per
// (basis element j, output coordinate k).
Matrix annihilator_system(const AlgebraSpec& a, bool from_left) {
    const std::size_t n = a.dim();
    Matrix m(n * n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i)
                m.at(j * n + k, i) = from_left ? a.gamma(i, j, k) : a.gamma(j, i, k);
    return m;
}

} // namespace

Subspace annihilator_left(const AlgebraSpec& a) {
    return nullspace(annihilator_system(a, true));
}

Subspace annihilator_right(const AlgebraSpec& a) {
    return nullspace(annihilator_system(a, false));
}

IdealCheck is_two_sided_ideal(const AlgebraSpec& a, const Subspace& s) {
    const std::size_t n = a.dim();
    if (s.ambient_dim() != n)
        throw std::invalid_argument("is_two_sided_ideal: ambient dimension mismatch");
    IdealCheck check;
    for (std::size_t b = 0; b < s.basis().size(); ++b) {
        const Vec& v = s.basis()[b];
        for (std::size_t j = 0; j < n; ++j) {
            const Vec ej = basis_vec(n, j);
            for (bool from_right : {true, false}) {
                Vec p = from_right ? product(a, v, ej) : product(a, ej, v);
                if (!s.contains(p)) {
                    check.ok = false;
                    check.subspace_index = b;
                    check.algebra_index = j + 1;
                    check.multiplied_from_right = from_right;
                    check.escaping_product = std::move(p);
                    return check;
                }
            }
        }
    }
    return check;
}

} // namespace zinbiel
