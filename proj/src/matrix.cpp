#include "solenoid/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace solenoid {

IntMat IntMat::identity(long n)
{
    IntMat m(n, n);
    for (long i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool operator==(const IntMat& x, const IntMat& y)
{
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
}

IntMat operator*(const IntMat& x, const IntMat& y)
{
    if (x.cols != y.rows) throw std::domain_error("IntMat: shape mismatch in product");
    IntMat out(x.rows, y.cols);
    for (long i = 0; i < x.rows; ++i)
        for (long k = 0; k < x.cols; ++k) {
            const ZZ& v = x.at(i, k);
            if (v == 0) continue;
            for (long j = 0; j < y.cols; ++j) out.at(i, j) += v * y.at(k, j);
        }
    return out;
}

IntMat operator+(const IntMat& x, const IntMat& y)
{
    if (x.rows != y.rows || x.cols != y.cols)
        throw std::domain_error("IntMat: shape mismatch in sum");
    IntMat out = x;
    for (size_t i = 0; i < out.a.size(); ++i) out.a[i] += y.a[i];
    return out;
}

IntMat operator-(const IntMat& x, const IntMat& y)
{
    if (x.rows != y.rows || x.cols != y.cols)
        throw std::domain_error("IntMat: shape mismatch in difference");
    IntMat out = x;
    for (size_t i = 0; i < out.a.size(); ++i) out.a[i] -= y.a[i];
    return out;
}

IntMat transpose(const IntMat& m)
{
    IntMat out(m.cols, m.rows);
    for (long i = 0; i < m.rows; ++i)
        for (long j = 0; j < m.cols; ++j) out.at(j, i) = m.at(i, j);
    return out;
}

IntMat mat_pow(const IntMat& m, long n)
{
    if (!m.square()) throw std::domain_error("mat_pow: matrix not square");
    if (n < 0) throw std::domain_error("mat_pow: negative power");
    IntMat result = IntMat::identity(m.rows);
    IntMat base = m;
    while (n > 0) {
        if (n & 1) result = result * base;
        base = base * base;
        n >>= 1;
    }
    return result;
}

ZZ det(const IntMat& m)
{
    if (!m.square()) throw std::domain_error("det: matrix not square");
    long n = m.rows;
    // exact Gaussian elimination over the rationals
    std::vector<QQ> w(n * n);
    for (long i = 0; i < n * n; ++i) w[i] = QQ(m.a[i]);
    QQ d = 1;
    for (long col = 0; col < n; ++col) {
        long piv = -1;
        for (long i = col; i < n; ++i)
            if (w[i * n + col] != 0) { piv = i; break; }
        if (piv < 0) return ZZ(0);
        if (piv != col) {
            for (long j = 0; j < n; ++j) std::swap(w[piv * n + j], w[col * n + j]);
            d = -d;
        }
        d *= w[col * n + col];
        for (long i = col + 1; i < n; ++i) {
            if (w[i * n + col] == 0) continue;
            QQ f = w[i * n + col] / w[col * n + col];
            for (long j = col; j < n; ++j) w[i * n + j] -= f * w[col * n + j];
        }
    }
    QQ dc = d;
    dc.canonicalize();
    if (dc.get_den() != 1) throw std::runtime_error("det: non-integer result");
    return dc.get_num();
}

ZPoly char_poly(const IntMat& m)
{
    if (!m.square()) throw std::domain_error("char_poly: matrix not square");
    long n = m.rows;
    // Faddeev-LeVerrier: M_1 = A, c_k = -tr(A M_k)/k ... integer throughout
    std::vector<ZZ> coeffs(n + 1, ZZ(0));
    coeffs[n] = 1;
    IntMat mk = IntMat::identity(n);
    for (long k = 1; k <= n; ++k) {
        mk = m * mk;
        ZZ tr = 0;
        for (long i = 0; i < n; ++i) tr += mk.at(i, i);
        ZZ ck = -divexact(tr, ZZ(k));
        coeffs[n - k] = ck;
        for (long i = 0; i < n; ++i) mk.at(i, i) += ck;
    }
    return ZPoly(std::move(coeffs));
}

void hermite_with_transform(const IntMat& m, IntMat& h, IntMat& u)
{
    h = m;
    u = IntMat::identity(m.rows);
    auto swap_rows = [&](long i, long j) {
        for (long k = 0; k < h.cols; ++k) std::swap(h.at(i, k), h.at(j, k));
        for (long k = 0; k < u.cols; ++k) std::swap(u.at(i, k), u.at(j, k));
    };
    auto addmul_row = [&](long dst, long src, const ZZ& f) {
        for (long k = 0; k < h.cols; ++k) h.at(dst, k) += f * h.at(src, k);
        for (long k = 0; k < u.cols; ++k) u.at(dst, k) += f * u.at(src, k);
    };
    auto negate_row = [&](long i) {
        for (long k = 0; k < h.cols; ++k) h.at(i, k) = -h.at(i, k);
        for (long k = 0; k < u.cols; ++k) u.at(i, k) = -u.at(i, k);
    };

    long r = 0;
    for (long col = 0; col < h.cols && r < h.rows; ++col) {
        // gcd-reduce the entries of this column below row r into one pivot
        for (;;) {
            long best = -1;
            for (long i = r; i < h.rows; ++i) {
                if (h.at(i, col) == 0) continue;
                if (best < 0 || abs_z(h.at(i, col)) < abs_z(h.at(best, col))) best = i;
            }
            if (best < 0) break;
            if (best != r) swap_rows(best, r);
            bool done = true;
            for (long i = r + 1; i < h.rows; ++i) {
                if (h.at(i, col) == 0) continue;
                ZZ q;
                mpz_fdiv_q(q.get_mpz_t(), h.at(i, col).get_mpz_t(), h.at(r, col).get_mpz_t());
                addmul_row(i, r, -q);
                if (h.at(i, col) != 0) done = false;
            }
            if (done) break;
        }
        if (h.at(r, col) == 0) continue;
        if (h.at(r, col) < 0) negate_row(r);
        // reduce the entries above the pivot into [0, pivot)
        for (long i = 0; i < r; ++i) {
            ZZ q;
            mpz_fdiv_q(q.get_mpz_t(), h.at(i, col).get_mpz_t(), h.at(r, col).get_mpz_t());
            if (q != 0) addmul_row(i, r, -q);
        }
        ++r;
    }
}

IntMat integer_kernel(const IntMat& m)
{
    // right kernel of M = left kernel of M^T: rows of U aligned with the
    // zero rows of H in U M^T = H
    IntMat h, u;
    hermite_with_transform(transpose(m), h, u);
    std::vector<long> zero_rows;
    for (long i = 0; i < h.rows; ++i) {
        bool zero = true;
        for (long j = 0; j < h.cols; ++j)
            if (h.at(i, j) != 0) { zero = false; break; }
        if (zero) zero_rows.push_back(i);
    }
    IntMat kernel(static_cast<long>(zero_rows.size()), m.cols);
    for (size_t i = 0; i < zero_rows.size(); ++i)
        for (long j = 0; j < m.cols; ++j) kernel.at(i, j) = u.at(zero_rows[i], j);
    if (kernel.rows == 0) return kernel;
    IntMat ch, cu;
    hermite_with_transform(kernel, ch, cu);
    // drop zero rows of the canonical form (there are none for a basis, but
    // keep the shape tidy regardless)
    long nz = 0;
    for (long i = 0; i < ch.rows; ++i)
        for (long j = 0; j < ch.cols; ++j)
            if (ch.at(i, j) != 0) { nz = i + 1; break; }
    IntMat out(nz, ch.cols);
    for (long i = 0; i < nz; ++i)
        for (long j = 0; j < ch.cols; ++j) out.at(i, j) = ch.at(i, j);
    return out;
}

std::vector<QPoly> invariant_factors(const IntMat& a)
{
    if (!a.square()) throw std::domain_error("invariant_factors: matrix not square");
    long n = a.rows;
    // Smith normal form of xI - A over Q[x]
    std::vector<QPoly> w(n * n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            std::vector<QQ> c{QQ(-a.at(i, j))};
            if (i == j) c.push_back(QQ(1));
            else c.push_back(QQ(0));
            w[i * n + j] = QPoly(std::move(c));
        }
    auto deg = [](const QPoly& p) { return p.is_zero() ? -1L : p.degree(); };
    std::vector<QPoly> factors;
    long top = 0;
    while (top < n) {
        // find the lowest-degree nonzero entry in the remaining block
        long pi = -1, pj = -1;
        for (long i = top; i < n; ++i)
            for (long j = top; j < n; ++j)
                if (!w[i * n + j].is_zero() &&
                    (pi < 0 || deg(w[i * n + j]) < deg(w[pi * n + pj]))) {
                    pi = i;
                    pj = j;
                }
        if (pi < 0) break; // all remaining entries zero
        for (long j = top; j < n; ++j) std::swap(w[pi * n + j], w[top * n + j]);
        for (long i = top; i < n; ++i) std::swap(w[i * n + pj], w[i * n + top]);
        bool clean = true;
        for (long i = top + 1; i < n; ++i) {
            auto [q, r] = divmod(w[i * n + top], w[top * n + top]);
            if (!q.is_zero())
                for (long j = top; j < n; ++j)
                    w[i * n + j] = w[i * n + j] - q * w[top * n + j];
            if (!w[i * n + top].is_zero()) clean = false;
        }
        for (long j = top + 1; j < n; ++j) {
            auto [q, r] = divmod(w[top * n + j], w[top * n + top]);
            if (!q.is_zero())
                for (long i = top; i < n; ++i)
                    w[i * n + j] = w[i * n + j] - q * w[i * n + top];
            if (!w[top * n + j].is_zero()) clean = false;
        }
        if (!clean) continue; // repeat the reduction with the smaller entries
        // ensure the pivot divides everything in the remaining block
        bool divides_all = true;
        for (long i = top + 1; i < n && divides_all; ++i)
            for (long j = top + 1; j < n && divides_all; ++j) {
                auto [q, r] = divmod(w[i * n + j], w[top * n + top]);
                if (!r.is_zero()) {
                    // fold that row into the pivot row and restart
                    for (long k = top; k < n; ++k)
                        w[top * n + k] = w[top * n + k] + w[i * n + k];
                    divides_all = false;
                }
            }
        if (!divides_all) continue;
        factors.push_back(make_monic(w[top * n + top]));
        ++top;
    }
    std::vector<QPoly> out;
    for (auto& f : factors)
        if (f.degree() >= 1) out.push_back(f);
    return out;
}

IntMat parse_matrix(const std::string& text)
{
    std::vector<std::vector<ZZ>> rows;
    std::vector<ZZ> current;
    std::string tok;
    int depth = 0;
    bool in_row = false;
    auto flush = [&]() {
        if (!tok.empty()) {
            try {
                current.emplace_back(tok);
            } catch (const std::invalid_argument&) {
                throw std::domain_error("parse_matrix: bad entry '" + tok + "'");
            }
            tok.clear();
        }
    };
    for (char ch : text) {
        if (ch == ' ' || ch == '\t') continue;
        if (ch == '[') {
            ++depth;
            if (depth == 2) { in_row = true; current.clear(); }
        } else if (ch == ']') {
            flush();
            if (depth == 2 && in_row) { rows.push_back(current); in_row = false; }
            --depth;
        } else if (ch == ',') {
            flush();
        } else {
            tok += ch;
        }
    }
    if (depth != 0 || rows.empty())
        throw std::domain_error("parse_matrix: expected [[...],[...]]");
    IntMat m(static_cast<long>(rows.size()), static_cast<long>(rows[0].size()));
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows[0].size())
            throw std::domain_error("parse_matrix: ragged rows");
        for (size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

std::string format_matrix(const IntMat& m)
{
    std::ostringstream os;
    os << "[";
    for (long i = 0; i < m.rows; ++i) {
        if (i) os << ",";
        os << "[";
        for (long j = 0; j < m.cols; ++j) {
            if (j) os << ",";
            os << m.at(i, j);
        }
        os << "]";
    }
    os << "]";
    return os.str();
}

} // namespace solenoid
