#include "spherig/matrix.hpp"

#include <algorithm>
#include <sstream>

#include "spherig/errors.hpp"

namespace spherig {

RationalMatrix RationalMatrix::transposed() const {
    RationalMatrix t(cols, rows);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
    t.row_labels = col_labels;
    t.col_labels = row_labels;
    return t;
}

namespace {

// Row-wise denominator clearing: rank is invariant under scaling a row by
// a nonzero rational.
std::vector<std::vector<mpz_class>> integer_rows(const RationalMatrix& m) {
    std::vector<std::vector<mpz_class>> rows(m.rows, std::vector<mpz_class>(m.cols));
    mpz_class l, g;
    for (std::size_t r = 0; r < m.rows; ++r) {
        l = 1;
        for (std::size_t c = 0; c < m.cols; ++c) {
            const mpz_class& den = m.at(r, c).get_den();
            mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
            l = l / g * den;
        }
        for (std::size_t c = 0; c < m.cols; ++c) {
            const Rational& q = m.at(r, c);
            rows[r][c] = q.get_num() * (l / q.get_den());
        }
    }
    return rows;
}

}  // namespace

std::size_t rank(const RationalMatrix& m) {
    if (m.rows == 0 || m.cols == 0) return 0;
    auto rows = integer_rows(m);
    const std::size_t nr = m.rows, nc = m.cols;
    std::size_t rk = 0;
    mpz_class prev = 1;
    for (std::size_t col = 0; col < nc && rk < nr; ++col) {
        std::size_t piv = nr;
        for (std::size_t r = rk; r < nr; ++r)
            if (rows[r][col] != 0) { piv = r; break; }
        if (piv == nr) continue;
        std::swap(rows[rk], rows[piv]);
        const mpz_class& p = rows[rk][col];
        for (std::size_t r = rk + 1; r < nr; ++r) {
            if (rows[r][col] == 0) {
                // Bareiss still rescales untouched rows to keep entries
                // equal to minors of the original matrix.
                for (std::size_t c = col + 1; c < nc; ++c) {
                    rows[r][c] *= p;
                    mpz_divexact(rows[r][c].get_mpz_t(), rows[r][c].get_mpz_t(),
                                 prev.get_mpz_t());
                }
            } else {
                const mpz_class f = rows[r][col];
                for (std::size_t c = col + 1; c < nc; ++c) {
                    rows[r][c] = rows[r][c] * p - rows[rk][c] * f;
                    mpz_divexact(rows[r][c].get_mpz_t(), rows[r][c].get_mpz_t(),
                                 prev.get_mpz_t());
                }
            }
            rows[r][col] = 0;
        }
        prev = p;
        ++rk;
    }
    return rk;
}

std::vector<std::size_t> rref_inplace(RationalMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
        std::size_t piv = m.rows;
        for (std::size_t r = row; r < m.rows; ++r)
            if (m.at(r, col) != 0) { piv = r; break; }
        if (piv == m.rows) continue;
        if (piv != row)
            for (std::size_t c = 0; c < m.cols; ++c) std::swap(m.at(row, c), m.at(piv, c));
        const Rational inv = Rational(1) / m.at(row, col);
        for (std::size_t c = col; c < m.cols; ++c) m.at(row, c) *= inv;
        for (std::size_t r = 0; r < m.rows; ++r) {
            if (r == row || m.at(r, col) == 0) continue;
            const Rational f = m.at(r, col);
            for (std::size_t c = col; c < m.cols; ++c) m.at(r, c) -= f * m.at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::vector<RatVec> kernel_basis(const RationalMatrix& m) {
    RationalMatrix w = m;
    auto pivots = rref_inplace(w);
    std::vector<bool> is_pivot(m.cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<RatVec> basis;
    for (std::size_t fc = 0; fc < m.cols; ++fc) {
        if (is_pivot[fc]) continue;
        RatVec v(m.cols, Rational(0));
        v[fc] = 1;
        for (std::size_t pr = 0; pr < pivots.size(); ++pr)
            v[pivots[pr]] = -w.at(pr, fc);
        basis.push_back(std::move(v));
    }
    return basis;
}

RatVec matvec(const RationalMatrix& m, const RatVec& v) {
    if (v.size() != m.cols) throw internal_error("matvec dimension mismatch");
    RatVec out(m.rows, Rational(0));
    for (std::size_t r = 0; r < m.rows; ++r)
        for (std::size_t c = 0; c < m.cols; ++c)
            if (m.at(r, c) != 0 && v[c] != 0) out[r] += m.at(r, c) * v[c];
    return out;
}

bool is_zero_vec(const RatVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; });
}

RationalMatrix from_rows(const std::vector<RatVec>& vecs) {
    RationalMatrix m(vecs.size(), vecs.empty() ? 0 : vecs[0].size());
    for (std::size_t r = 0; r < vecs.size(); ++r) {
        if (vecs[r].size() != m.cols) throw internal_error("ragged vector family");
        for (std::size_t c = 0; c < m.cols; ++c) m.at(r, c) = vecs[r][c];
    }
    return m;
}

std::size_t span_rank(const std::vector<RatVec>& vecs) {
    if (vecs.empty()) return 0;
    return rank(from_rows(vecs));
}

RatVec reduce_against_rref(const RationalMatrix& rrefm,
                           const std::vector<std::size_t>& pivots, RatVec v) {
    for (std::size_t pr = 0; pr < pivots.size(); ++pr) {
        const std::size_t pc = pivots[pr];
        if (v[pc] == 0) continue;
        const Rational f = v[pc];
        for (std::size_t c = 0; c < rrefm.cols; ++c)
            if (rrefm.at(pr, c) != 0) v[c] -= f * rrefm.at(pr, c);
    }
    return v;
}

RatVec primitive_integer_form(const RatVec& v) {
    mpz_class l = 1, g = 0, tmp;
    for (const auto& q : v) {
        mpz_gcd(tmp.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
        l = l / tmp * q.get_den();
    }
    std::vector<mpz_class> ints;
    ints.reserve(v.size());
    for (const auto& q : v) ints.push_back(q.get_num() * (l / q.get_den()));
    for (const auto& z : ints) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
    if (g == 0) g = 1;
    int sign = 0;
    for (const auto& z : ints)
        if (z != 0) { sign = mpz_sgn(z.get_mpz_t()); break; }
    if (sign < 0) g = -g;
    RatVec out;
    out.reserve(v.size());
    for (auto& z : ints) out.emplace_back(Rational(z / g));
    return out;
}

std::string matrix_to_json_string(const RationalMatrix& m) {
    std::ostringstream os;
    os << "[";
    for (std::size_t r = 0; r < m.rows; ++r) {
        os << (r ? ",[" : "[");
        for (std::size_t c = 0; c < m.cols; ++c)
            os << (c ? ",\"" : "\"") << rational_to_string(m.at(r, c)) << "\"";
        os << "]";
    }
    os << "]";
    return os.str();
}

}  // namespace spherig
