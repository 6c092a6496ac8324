#include "solenoid/groups.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "solenoid/errors.hpp"
#include "solenoid/factor.hpp"

namespace solenoid {

namespace {

constexpr long kCandidateBudget = 1L << 21;

/// Partitions of n in weakly decreasing order.
std::vector<std::vector<long>> partitions(long n)
{
    if (n == 0) return {{}};
    std::vector<std::vector<long>> out;
    std::vector<long> cur;
    auto rec = [&](auto&& self, long rest, long maxpart) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (long k = std::min(rest, maxpart); k >= 1; --k) {
            cur.push_back(k);
            self(self, rest - k, k);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

long pow_long(long b, long e)
{
    long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

/// One p-primary component Z/p^{a_1} x ... x Z/p^{a_t} with a candidate
/// endomorphism given by entries e_ij in [0, p^{min(a_i,a_j)}); the entry
/// acts as x_j -> p^{max(0, a_i - a_j)} e_ij x_j into coordinate i.
struct Component {
    long p = 0;
    std::vector<long> exps;    // a_1 >= a_2 >= ...
    std::vector<long> moduli;  // p^{a_i}
    long size = 1;
};

/// Fixed-point counts of one automorphism per residue of n modulo its
/// order: fix[j] for n = j+1, j < period.
struct FixProfile {
    long period = 1;
    std::vector<long> fix;  // fix[(n-1) % period] = #fix(T^n)
    std::string action;
};

long fix_count(const std::vector<long>& cycle_lengths, long n)
{
    long total = 0;
    for (long len : cycle_lengths)
        if (n % len == 0) total += len;
    return total;
}

/// All automorphisms of the component, each reduced to its fixed-point
/// profile over one period of cycle-structure behaviour.
std::vector<FixProfile> component_automorphisms(const Component& comp)
{
    long t = (long)comp.exps.size();
    std::vector<long> entry_mod(t * t);
    for (long i = 0; i < t; ++i)
        for (long j = 0; j < t; ++j)
            entry_mod[i * t + j] =
                pow_long(comp.p, std::min(comp.exps[i], comp.exps[j]));

    // Mixed-radix element index <-> coordinate vector.
    long size = comp.size;
    std::vector<std::vector<long>> coords(size, std::vector<long>(t));
    for (long idx = 0; idx < size; ++idx) {
        long v = idx;
        for (long i = 0; i < t; ++i) {
            coords[idx][i] = v % comp.moduli[i];
            v /= comp.moduli[i];
        }
    }

    std::vector<FixProfile> out;
    std::vector<long> e(t * t, 0);
    while (true) {
        // Invertibility: the induced matrix on G/pG must be invertible
        // mod p; entries with a_i > a_j act through a factor of p.
        std::vector<long> red(t * t);
        for (long i = 0; i < t; ++i)
            for (long j = 0; j < t; ++j)
                red[i * t + j] =
                    comp.exps[i] > comp.exps[j] ? 0 : e[i * t + j] % comp.p;
        long detmod = 0;
        {
            std::vector<long> w = red;
            long sign = 1, piv = 0;
            detmod = 1;
            for (long col = 0; col < t && piv < t; ++col) {
                long r = piv;
                while (r < t && w[r * t + col] % comp.p == 0) ++r;
                if (r == t) {
                    detmod = 0;
                    break;
                }
                if (r != piv) {
                    for (long k = 0; k < t; ++k)
                        std::swap(w[r * t + k], w[piv * t + k]);
                    sign = -sign;
                }
                long inv = 1;
                for (long x = 1; x < comp.p; ++x)
                    if (x * w[piv * t + col] % comp.p == 1) inv = x;
                for (long r2 = piv + 1; r2 < t; ++r2) {
                    long fac = w[r2 * t + col] * inv % comp.p;
                    for (long k = 0; k < t; ++k)
                        w[r2 * t + k] =
                            ((w[r2 * t + k] - fac * w[piv * t + k]) % comp.p +
                             comp.p) %
                            comp.p;
                }
                detmod = detmod * w[piv * t + col] % comp.p;
                ++piv;
            }
            detmod = (detmod * ((sign + comp.p) % comp.p)) % comp.p;
        }
        if (detmod != 0) {
            // Build the permutation and collapse to cycle lengths.
            std::vector<long> image(size);
            for (long idx = 0; idx < size; ++idx) {
                long out_idx = 0, base = 1;
                for (long i = 0; i < t; ++i) {
                    long acc = 0;
                    for (long j = 0; j < t; ++j) {
                        long lift = std::max(0L, comp.exps[i] - comp.exps[j]);
                        acc += pow_long(comp.p, lift) * e[i * t + j] %
                               comp.moduli[i] * coords[idx][j];
                    }
                    out_idx += acc % comp.moduli[i] * base;
                    base *= comp.moduli[i];
                }
                image[idx] = out_idx;
            }
            std::vector<long> cycle_lengths;
            std::vector<bool> seen(size, false);
            for (long idx = 0; idx < size; ++idx) {
                if (seen[idx]) continue;
                long len = 0, v = idx;
                while (!seen[v]) {
                    seen[v] = true;
                    v = image[v];
                    ++len;
                }
                cycle_lengths.push_back(len);
            }
            FixProfile prof;
            prof.period = 1;
            for (long len : cycle_lengths)
                prof.period = std::lcm(prof.period, len);
            prof.fix.resize(prof.period);
            for (long n = 1; n <= prof.period; ++n)
                prof.fix[n - 1] = fix_count(cycle_lengths, n);
            std::ostringstream os;
            os << "p=" << comp.p << ": [";
            for (long i = 0; i < t; ++i) {
                os << (i ? "," : "") << "[";
                for (long j = 0; j < t; ++j)
                    os << (j ? "," : "") << e[i * t + j];
                os << "]";
            }
            os << "]";
            prof.action = os.str();
            out.push_back(std::move(prof));
        }
        // Next candidate matrix.
        long pos = 0;
        while (pos < t * t && ++e[pos] == entry_mod[pos]) e[pos++] = 0;
        if (pos == t * t) break;
    }
    return out;
}

bool matches(const std::vector<ZZ>& pattern,
             const std::vector<const FixProfile*>& chosen)
{
    long period = (long)pattern.size();
    long window = period;
    for (const FixProfile* prof : chosen)
        window = std::lcm(window, prof->period);
    for (long n = 1; n <= window; ++n) {
        ZZ f(1);
        for (const FixProfile* prof : chosen)
            f *= prof->fix[(n - 1) % prof->period];
        if (f != pattern[(n - 1) % period]) return false;
    }
    return true;
}

} // namespace

GroupWitness group_realizable_bruteforce(const std::vector<ZZ>& pattern,
                                         long M)
{
    if (pattern.empty())
        throw std::domain_error("group_realizable_bruteforce needs a pattern");
    for (const ZZ& f : pattern)
        if (f < 1)
            throw std::domain_error("fixed-point counts must be >= 1");
    if (M < 1) throw std::domain_error("group order cap must be >= 1");
    if (M > 64)
        throw capability_error("group order cap is limited to 64");

    for (long order = 1; order <= M; ++order) {
        std::vector<std::pair<long, long>> pe;  // (p, exponent)
        for (const auto& [p, e] : factor(ZZ(order)))
            pe.push_back({(long)p.get_si(), (long)e});

        // One partition choice per prime fixes the isomorphism type.
        std::vector<std::vector<std::vector<long>>> parts;
        for (auto& [p, e] : pe) parts.push_back(partitions(e));
        std::vector<size_t> choice(pe.size(), 0);
        while (true) {
            std::vector<Component> comps;
            long budget = 1;
            for (size_t i = 0; i < pe.size(); ++i) {
                Component c;
                c.p = pe[i].first;
                c.exps = parts[i][choice[i]];
                for (long a : c.exps) {
                    c.moduli.push_back(pow_long(c.p, a));
                    c.size *= c.moduli.back();
                }
                long count = 1;
                for (long x : c.exps)
                    for (long y : c.exps)
                        count *= pow_long(c.p, std::min(x, y));
                if (count > kCandidateBudget / std::max(budget, 1L))
                    budget = kCandidateBudget + 1;
                else
                    budget *= count;
                comps.push_back(std::move(c));
            }
            if (budget > kCandidateBudget)
                throw capability_error(
                    "automorphism enumeration exceeds the work budget");

            std::vector<std::vector<FixProfile>> lists;
            for (const Component& c : comps)
                lists.push_back(component_automorphisms(c));

            // Cartesian product of per-prime automorphisms.
            std::vector<size_t> pick(lists.size(), 0);
            bool any_empty = false;
            for (const auto& l : lists)
                if (l.empty()) any_empty = true;
            while (!any_empty) {
                std::vector<const FixProfile*> chosen;
                for (size_t i = 0; i < lists.size(); ++i)
                    chosen.push_back(&lists[i][pick[i]]);
                if (matches(pattern, chosen)) {
                    GroupWitness w;
                    w.found = true;
                    w.order = order;
                    std::ostringstream group, action;
                    bool first = true;
                    for (const Component& c : comps) {
                        for (long a : c.exps) {
                            group << (first ? "" : " x ") << "Z/"
                                  << pow_long(c.p, a);
                            first = false;
                        }
                    }
                    if (first) group << "trivial";
                    if (chosen.empty()) action << "identity";
                    for (size_t i = 0; i < chosen.size(); ++i)
                        action << (i ? "; " : "") << chosen[i]->action;
                    w.group = group.str();
                    w.action = action.str();
                    return w;
                }
                size_t pos = 0;
                while (pos < pick.size() &&
                       ++pick[pos] == lists[pos].size())
                    pick[pos++] = 0;
                if (pos == pick.size()) break;
            }

            size_t pos = 0;
            while (pos < choice.size() &&
                   ++choice[pos] == parts[pos].size())
                choice[pos++] = 0;
            if (pos == choice.size()) break;
            if (choice.empty()) break;
        }
    }
    return {};
}

} // namespace solenoid
