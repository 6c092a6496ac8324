#include "solenoid/conjugacy.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "solenoid/errors.hpp"
#include "solenoid/factor.hpp"

namespace solenoid {

namespace {

IntMat unflatten(const std::vector<ZZ>& row, long d)
{
    IntMat q(d, d);
    q.a = row;
    return q;
}

/// Strip the allowed primes from |n|; the rest must be 1 for a unit.
bool is_unit_det(const ZZ& n, const PrimeSet& allowed)
{
    if (n == 0) return false;
    ZZ m = abs_z(n);
    for (const ZZ& p : allowed.primes)
        while (divides(p, m)) m = divexact(m, p);
    return m == 1;
}

/// Subgroup of (Z/m)* generated by -1 and the allowed primes.
std::set<ZZ> unit_subgroup(const ZZ& m, const PrimeSet& allowed)
{
    std::vector<ZZ> gens{ZZ((m - 1) % m)};
    for (const ZZ& p : allowed.primes) gens.push_back(ZZ(p % m));
    std::set<ZZ> sub{ZZ(1 % m)};
    bool grew = true;
    while (grew) {
        grew = false;
        for (const ZZ& g : gens)
            for (const ZZ& x : std::vector<ZZ>(sub.begin(), sub.end())) {
                ZZ y((x * g) % m);
                if (sub.insert(y).second) grew = true;
            }
    }
    return sub;
}

struct UnionFind {
    std::vector<long> up;

    explicit UnionFind(long n) : up(n) { std::iota(up.begin(), up.end(), 0); }
    long find(long x) { return up[x] == x ? x : up[x] = find(up[x]); }
    void join(long x, long y) { up[find(x)] = find(y); }
};

std::vector<std::vector<long>> classes_of(UnionFind& uf, long n)
{
    std::vector<std::vector<long>> out;
    std::vector<long> slot(n, -1);
    for (long i = 0; i < n; ++i) {
        long r = uf.find(i);
        if (slot[r] < 0) {
            slot[r] = (long)out.size();
            out.emplace_back();
        }
        out[slot[r]].push_back(i);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

IntertwinerLattice intertwiner_lattice(const IntMat& A, const IntMat& B)
{
    if (!A.square() || !B.square() || A.rows != B.rows)
        throw std::domain_error("intertwiner_lattice needs square matrices of one size");
    long d = A.rows;
    // Equation (i,j): sum_s Q[i][s] A[s][j] - sum_r B[i][r] Q[r][j] = 0,
    // so the coefficient of Q[r][s] is A[s][j][r == i] - B[i][r][s == j].
    IntMat sys(d * d, d * d);
    for (long i = 0; i < d; ++i)
        for (long j = 0; j < d; ++j)
            for (long r = 0; r < d; ++r)
                for (long s = 0; s < d; ++s) {
                    ZZ coeff(0);
                    if (r == i) coeff += A.at(s, j);
                    if (s == j) coeff -= B.at(i, r);
                    sys.at(i * d + j, r * d + s) = coeff;
                }
    IntMat kernel = integer_kernel(sys);

    IntertwinerLattice lat;
    lat.A = A;
    lat.B = B;
    lat.rank = kernel.rows;
    for (long k = 0; k < kernel.rows; ++k) {
        std::vector<ZZ> row(kernel.a.begin() + k * d * d,
                            kernel.a.begin() + (k + 1) * d * d);
        IntMat q = unflatten(row, d);
        if (!(q * A == B * q))
            throw invariant_violation("kernel basis fails QA = BQ");
        lat.basis.push_back(std::move(q));
    }
    return lat;
}

QuadraticForm determinant_form(const IntertwinerLattice& lat)
{
    if (lat.rank != 2 || lat.A.rows != 2)
        throw capability_error("determinant_form handles rank-2 lattices of 2x2 matrices");
    QuadraticForm f;
    f.a = det(lat.basis[0]);
    f.c = det(lat.basis[1]);
    f.b = ZZ(det(lat.basis[0] + lat.basis[1]) - f.a - f.c);
    return f;
}

ConjugacyDecision conjugate_over_ring(const IntMat& A, const IntMat& B,
                                      const PrimeSet& allowed, long bound)
{
    if (!allowed.is_finite())
        throw std::domain_error("conjugate_over_ring needs a finite prime set");
    if (!(char_poly(A) == char_poly(B)))
        throw std::domain_error("matrices have different characteristic polynomials");
    if (bound < 1) throw std::domain_error("conjugate_over_ring needs bound >= 1");

    ConjugacyDecision dec;
    if (A == B) {
        dec.status = ConjugacyDecision::Status::conjugate;
        dec.witness = IntMat::identity(A.rows);
        dec.det_value = 1;
        return dec;
    }

    IntertwinerLattice lat = intertwiner_lattice(A, B);
    if (lat.rank == 0 || !(invariant_factors(A) == invariant_factors(B))) {
        dec.status = ConjugacyDecision::Status::obstructed;
        dec.modulus = 0;
        dec.reason = "not conjugate over Q (invariant factors differ)";
        return dec;
    }

    double budget = 1;
    for (long i = 0; i < lat.rank; ++i) budget *= 2.0 * bound + 1.0;
    if (budget > 5e6)
        throw capability_error("conjugate_over_ring coordinate search too large");

    // Shells of growing max-norm keep the first witness small.
    std::vector<long> c(lat.rank, 0);
    for (long shell = 1; shell <= bound; ++shell) {
        std::fill(c.begin(), c.end(), -shell);
        while (true) {
            if (*std::max_element(c.begin(), c.end()) == shell ||
                *std::min_element(c.begin(), c.end()) == -shell) {
                IntMat q(A.rows, A.rows);
                for (long i = 0; i < lat.rank; ++i)
                    for (size_t k = 0; k < q.a.size(); ++k)
                        q.a[k] += c[i] * lat.basis[i].a[k];
                ZZ dq = det(q);
                if (is_unit_det(dq, allowed) && q * A == B * q) {
                    dec.status = ConjugacyDecision::Status::conjugate;
                    dec.witness = q;
                    dec.det_value = dq;
                    return dec;
                }
            }
            long pos = 0;
            while (pos < lat.rank && c[pos] == shell) c[pos++] = -shell;
            if (pos == lat.rank) break;
            ++c[pos];
        }
    }

    if (lat.rank == 2 && A.rows == 2) {
        QuadraticForm f = determinant_form(lat);
        for (long q = 2; q <= 50; ++q) {
            if (!is_prime(ZZ(q)) || allowed.contains(ZZ(q))) continue;
            for (int k = 1; k <= 2; ++k) {
                ZZ m = pow_z(ZZ(q), k);
                std::set<ZZ> units = unit_subgroup(m, allowed);
                bool represents = false;
                for (ZZ x(0); x < m && !represents; ++x)
                    for (ZZ y(0); y < m && !represents; ++y) {
                        ZZ v((f.eval(x, y) % m + m) % m);
                        if (units.count(v)) represents = true;
                    }
                if (!represents) {
                    dec.status = ConjugacyDecision::Status::obstructed;
                    dec.modulus = q;
                    dec.reason = "determinant form represents no unit modulo " +
                                 str(m);
                    return dec;
                }
            }
        }
    }

    dec.status = ConjugacyDecision::Status::unknown;
    dec.bound = bound;
    return dec;
}

ConjugacyPoset poset_build(const std::vector<IntMat>& mats,
                           const std::vector<ZZ>& prime_sequence, long bound)
{
    if (mats.empty()) throw std::domain_error("poset_build needs matrices");
    long n = (long)mats.size();
    ZPoly cp = char_poly(mats[0]);
    for (const IntMat& m : mats)
        if (!(char_poly(m) == cp))
            throw std::domain_error("poset_build needs one shared characteristic polynomial");

    ConjugacyPoset poset;
    UnionFind uf(n);
    std::vector<ZZ> allowed;
    ZZ ring_product(1);

    long total_levels = (long)prime_sequence.size() + 1;
    for (long level = 0; level <= total_levels; ++level) {
        PosetLevel pl;
        bool top = (level == total_levels);
        if (level == 0) {
            pl.ring = "Z";
        } else if (!top) {
            allowed.push_back(prime_sequence[level - 1]);
            ring_product *= prime_sequence[level - 1];
            pl.ring = "Z[1/" + str(ring_product) + "]";
        } else {
            pl.ring = "Q";
        }

        PrimeSet ring = PrimeSet::finite(allowed);
        for (long i = 0; i < n; ++i)
            for (long j = i + 1; j < n; ++j) {
                if (uf.find(i) == uf.find(j)) continue;
                if (top) {
                    if (invariant_factors(mats[i]) == invariant_factors(mats[j]))
                        uf.join(i, j);
                    continue;
                }
                ConjugacyDecision d =
                    conjugate_over_ring(mats[i], mats[j], ring, bound);
                if (d.status == ConjugacyDecision::Status::conjugate)
                    uf.join(i, j);
                else if (d.status == ConjugacyDecision::Status::unknown)
                    pl.has_unknown = true;
            }
        pl.classes = classes_of(uf, n);
        poset.levels.push_back(std::move(pl));
    }

    for (size_t lv = 0; lv + 1 < poset.levels.size(); ++lv) {
        std::vector<long> par;
        for (const auto& cls : poset.levels[lv].classes) {
            long target = -1;
            const auto& next = poset.levels[lv + 1].classes;
            for (size_t k = 0; k < next.size(); ++k)
                if (std::find(next[k].begin(), next[k].end(), cls[0]) !=
                    next[k].end())
                    target = (long)k;
            par.push_back(target);
        }
        poset.parent.push_back(std::move(par));
    }
    return poset;
}

std::string poset_dot(const ConjugacyPoset& poset)
{
    std::ostringstream out;
    out << "digraph conjugacy_poset {\n  rankdir=BT;\n  node [shape=box];\n";
    for (size_t lv = 0; lv < poset.levels.size(); ++lv) {
        out << "  { rank=same;";
        for (size_t k = 0; k < poset.levels[lv].classes.size(); ++k) {
            out << " n" << lv << "_" << k << " [label=\""
                << poset.levels[lv].ring << ": {";
            const auto& cls = poset.levels[lv].classes[k];
            for (size_t i = 0; i < cls.size(); ++i)
                out << (i ? "," : "") << cls[i];
            out << "}\"];";
        }
        out << " }\n";
    }
    for (size_t lv = 0; lv < poset.parent.size(); ++lv)
        for (size_t k = 0; k < poset.parent[lv].size(); ++k)
            out << "  n" << lv << "_" << k << " -> n" << lv + 1 << "_"
                << poset.parent[lv][k] << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace solenoid
