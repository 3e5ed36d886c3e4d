#include "oracle.hpp"

namespace oracle {

namespace {

Row basis_row(std::size_t n, std::size_t i) {
    Row v(n);
    v[i] = Rational(1);
    return v;
}

bool row_is_zero(const Row& v) {
    for (const Rational& x : v)
        if (!x.is_zero()) return false;
    return true;
}

Row row_sub(Row a, const Row& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

} // namespace

std::size_t rank(Table m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t done = 0;
    for (std::size_t col = 0; col < cols && done < rows; ++col) {
        std::size_t pivot = rows;
        for (std::size_t r = rows; r-- > done;) {
            if (!m[r][col].is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot == rows) continue;
        std::swap(m[done], m[pivot]);
        for (std::size_t r = done + 1; r < rows; ++r) {
            if (m[r][col].is_zero()) continue;
            const Rational factor = m[r][col] / m[done][col];
            for (std::size_t cc = col; cc < cols; ++cc) m[r][cc] -= factor * m[done][cc];
        }
        ++done;
    }
    return done;
}

Row mul(const AlgebraSpec& a, const Row& u, const Row& v) {
    const std::size_t n = a.dim();
    Row out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                out[k] += u[i] * v[j] * a.gamma(i, j, k);
    return out;
}

std::size_t zinbiel_violation_count(const AlgebraSpec& a) {
    const std::size_t n = a.dim();
    std::size_t count = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const Row ei = basis_row(n, i), ej = basis_row(n, j), ek = basis_row(n, k);
                Row lhs = mul(a, mul(a, ei, ej), ek);
                lhs = row_sub(lhs, mul(a, ei, mul(a, ej, ek)));
                lhs = row_sub(lhs, mul(a, ei, mul(a, ek, ej)));
                if (!row_is_zero(lhs)) ++count;
            }
    return count;
}

Table ad_of(const AlgebraSpec& a, const Row& w) {
    const std::size_t n = a.dim();
    Table entries(n, Row(n));
    for (std::size_t i = 0; i < n; ++i) {
        const Row image = row_sub(mul(a, basis_row(n, i), w), mul(a, w, basis_row(n, i)));
        for (std::size_t j = 0; j < n; ++j) entries[j][i] = image[j];
    }
    return entries;
}

std::size_t inner_dim(const AlgebraSpec& a) {
    const std::size_t n = a.dim();
    Table flat;
    for (std::size_t t = 0; t < n; ++t) {
        const Table ad = ad_of(a, basis_row(n, t));
        Row v;
        v.reserve(n * n);
        for (std::size_t col = 0; col < n; ++col)
            for (std::size_t row = 0; row < n; ++row) v.push_back(ad[row][col]);
        flat.push_back(std::move(v));
    }
    return rank(std::move(flat));
}

std::size_t der_dim(const AlgebraSpec& a) {
    const std::size_t n = a.dim();
    // Unknown d_{pq} at column-major index q*n + p; constraints enumerated
    // with k outermost, the reverse of the library's order.
    Table system;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < n; ++i) {
                Row row(n * n);
                for (std::size_t m = 0; m < n; ++m) row[m * n + k] += a.gamma(i, j, m);
                for (std::size_t p = 0; p < n; ++p) {
                    row[i * n + p] -= a.gamma(p, j, k);
                    row[j * n + p] -= a.gamma(i, p, k);
                }
                system.push_back(std::move(row));
            }
    return n * n - rank(std::move(system));
}

namespace {

std::size_t annihilator_dim(const AlgebraSpec& a, bool from_left) {
    const std::size_t n = a.dim();
    Table system;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            Row row(n);
            for (std::size_t i = 0; i < n; ++i)
                row[i] = from_left ? a.gamma(i, j, k) : a.gamma(j, i, k);
            system.push_back(std::move(row));
        }
    return n - rank(std::move(system));
}

} // namespace

std::size_t ann_left_dim(const AlgebraSpec& a) { return annihilator_dim(a, true); }
std::size_t ann_right_dim(const AlgebraSpec& a) { return annihilator_dim(a, false); }

Rational symbolic_coeff(const AlgebraSpec& a, std::size_t j, std::size_t i, std::size_t t) {
    return ad_of(a, basis_row(a.dim(), t))[j][i];
}

} // namespace oracle
