#include "solenoid/baer.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include "solenoid/factor.hpp"
#include "solenoid/valuation.hpp"

namespace solenoid {

ReducedRational::ReducedRational(const ZZ& a, const ZZ& b)
{
    if (b == 0) throw std::domain_error("ReducedRational: zero denominator");
    QQ q(a, b);
    q.canonicalize();
    num = q.get_num();
    den = q.get_den();
}

ReducedRational::ReducedRational(const QQ& q) : ReducedRational(q.get_num(), q.get_den()) {}

ReducedRational parse_ratio(const std::string& text)
{
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return ReducedRational(ZZ(text), ZZ(1));
        return ReducedRational(ZZ(text.substr(0, slash)), ZZ(text.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw std::domain_error("parse_ratio: malformed rational '" + text + "'");
    }
}

std::string format_ratio(const ReducedRational& r)
{
    if (r.den == 1) return str(r.num);
    return str(r.num) + "/" + str(r.den);
}

PrimeSet PrimeSet::finite(std::vector<ZZ> ps)
{
    std::sort(ps.begin(), ps.end());
    ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
    for (auto& p : ps)
        if (!is_prime(p)) throw std::domain_error("PrimeSet: " + str(p) + " is not prime");
    PrimeSet s;
    s.kind = Kind::finite;
    s.primes = std::move(ps);
    return s;
}

PrimeSet PrimeSet::cofinite(std::vector<ZZ> excluded)
{
    PrimeSet s = finite(std::move(excluded));
    s.kind = Kind::cofinite;
    return s;
}

bool PrimeSet::contains(const ZZ& p) const
{
    bool listed = std::binary_search(primes.begin(), primes.end(), p);
    return is_finite() ? listed : !listed;
}

std::string PrimeSet::to_string() const
{
    std::ostringstream os;
    if (!is_finite()) os << "all primes except ";
    os << "{";
    for (size_t i = 0; i < primes.size(); ++i) {
        if (i) os << ",";
        os << primes[i];
    }
    os << "}";
    return os.str();
}

bool operator==(const PrimeSet& x, const PrimeSet& y)
{
    return x.kind == y.kind && x.primes == y.primes;
}

std::vector<ZZ> parse_prime_list(const std::string& text)
{
    std::vector<ZZ> out;
    std::string cur;
    for (char ch : text + ",") {
        if (ch == ' ' || ch == '\t') continue;
        if (ch == ',') {
            if (!cur.empty()) out.emplace_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    return out;
}

std::string format_height(const Height& h)
{
    return h.inf ? "inf" : std::to_string(h.k);
}

CharacteristicSequence::CharacteristicSequence(Height def, std::vector<std::pair<ZZ, Height>> exc)
    : default_height(def)
{
    for (auto& [p, h] : exc) {
        if (!is_prime(p))
            throw std::domain_error("CharacteristicSequence: " + str(p) + " is not prime");
        if (!h.inf && h.k < 0)
            throw std::domain_error("CharacteristicSequence: negative height at " + str(p));
    }
    std::sort(exc.begin(), exc.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    for (size_t i = 1; i < exc.size(); ++i)
        if (exc[i - 1].first == exc[i].first)
            throw std::domain_error("CharacteristicSequence: duplicate prime " +
                                    str(exc[i].first));
    // canonical form: drop exceptions equal to the default
    for (auto& [p, h] : exc)
        if (h != def) exceptions.emplace_back(p, h);
}

Height CharacteristicSequence::at(const ZZ& p) const
{
    auto it = std::lower_bound(exceptions.begin(), exceptions.end(), p,
                               [](const auto& e, const ZZ& q) { return e.first < q; });
    if (it != exceptions.end() && it->first == p) return it->second;
    return default_height;
}

bool operator==(const CharacteristicSequence& x, const CharacteristicSequence& y)
{
    return x.default_height == y.default_height && x.exceptions == y.exceptions;
}

bool same_type(const CharacteristicSequence& c1, const CharacteristicSequence& c2)
{
    // Equal defaults force agreement at all but the finitely many exception
    // primes; unequal defaults disagree at infinitely many primes.
    if (c1.default_height != c2.default_height) return false;
    for (auto& [p, h] : c1.exceptions) {
        Height h2 = c2.at(p);
        if (h != h2 && (h.inf || h2.inf)) return false;
    }
    for (auto& [p, h] : c2.exceptions) {
        Height h1 = c1.at(p);
        if (h != h1 && (h.inf || h1.inf)) return false;
    }
    return true;
}

bool contains(const CharacteristicSequence& c, const QQ& q)
{
    if (q == 0) return true;
    ZZ den = q.get_den();
    for (auto& [p, e] : factor(den)) {
        Height h = c.at(p);
        if (!h.inf && static_cast<long>(e) > h.k) return false;
    }
    return true;
}

PrimeSet infinite_height_set(const CharacteristicSequence& c)
{
    std::vector<ZZ> listed;
    if (c.default_height.inf) {
        for (auto& [p, h] : c.exceptions)
            if (!h.inf) listed.push_back(p);
        return PrimeSet::cofinite(std::move(listed));
    }
    for (auto& [p, h] : c.exceptions)
        if (h.inf) listed.push_back(p);
    return PrimeSet::finite(std::move(listed));
}

CharacteristicSequence chi_with_infinite_set(const PrimeSet& s)
{
    std::vector<std::pair<ZZ, Height>> exc;
    if (s.is_finite()) {
        for (auto& p : s.primes) exc.emplace_back(p, Height::infinity());
        return CharacteristicSequence(Height::finite(0), std::move(exc));
    }
    for (auto& p : s.primes) exc.emplace_back(p, Height::finite(0));
    return CharacteristicSequence(Height::infinity(), std::move(exc));
}

namespace {

Height parse_height(const std::string& tok)
{
    if (tok == "inf") return Height::infinity();
    try {
        size_t pos = 0;
        long v = std::stol(tok, &pos);
        if (pos != tok.size() || v < 0) throw std::invalid_argument(tok);
        return Height::finite(v);
    } catch (const std::exception&) {
        throw std::domain_error("parse_characteristic: bad height '" + tok + "'");
    }
}

std::string strip(const std::string& s)
{
    size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

} // namespace

CharacteristicSequence parse_characteristic(const std::string& text)
{
    auto sem = text.find(';');
    std::string head = strip(sem == std::string::npos ? text : text.substr(0, sem));
    if (head.rfind("default=", 0) != 0)
        throw std::domain_error("parse_characteristic: expected 'default=<int|inf>'");
    Height def = parse_height(strip(head.substr(8)));

    std::vector<std::pair<ZZ, Height>> exc;
    std::string tail = sem == std::string::npos ? "" : text.substr(sem + 1);
    std::istringstream iss(tail);
    std::string item;
    while (std::getline(iss, item, ',')) {
        item = strip(item);
        if (item.empty()) continue;
        auto colon = item.find(':');
        if (colon == std::string::npos)
            throw std::domain_error("parse_characteristic: expected 'p:k' in '" + item + "'");
        ZZ p;
        try {
            p = ZZ(strip(item.substr(0, colon)));
        } catch (const std::invalid_argument&) {
            throw std::domain_error("parse_characteristic: bad prime in '" + item + "'");
        }
        exc.emplace_back(p, parse_height(strip(item.substr(colon + 1))));
    }
    return CharacteristicSequence(def, std::move(exc));
}

std::string format_characteristic(const CharacteristicSequence& c)
{
    std::ostringstream os;
    os << "default=" << format_height(c.default_height) << ";";
    for (size_t i = 0; i < c.exceptions.size(); ++i) {
        os << (i ? ", " : " ") << c.exceptions[i].first << ":"
           << format_height(c.exceptions[i].second);
    }
    return os.str();
}

CharacteristicSequence random_characteristic(uint64_t seed, unsigned long prime_bound)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coin(0, 3);
    std::uniform_int_distribution<int> height_pick(0, 5); // 5 means infinity
    Height def = coin(rng) == 0 ? Height::infinity() : Height::finite(coin(rng));
    std::vector<std::pair<ZZ, Height>> exc;
    for (uint64_t p : primes_upto(prime_bound)) {
        if (coin(rng) != 0) continue; // exception at roughly a quarter of the primes
        int h = height_pick(rng);
        exc.emplace_back(ZZ(p), h == 5 ? Height::infinity() : Height::finite(h));
    }
    return CharacteristicSequence(def, std::move(exc));
}

SolenoidSystem validate_system(const CharacteristicSequence& c, const ReducedRational& r,
                               MapMode mode)
{
    if (!r.ergodic())
        throw std::domain_error("validate_system: |r| must differ from 0 and 1");
    ZZ need = mode == MapMode::automorphism ? abs_z(r.num) * r.den : r.den;
    for (auto& [p, e] : factor(need)) {
        if (!c.at(p).inf)
            throw std::domain_error("validate_system: prime " + str(p) +
                                    " divides the map but has finite height");
    }
    return SolenoidSystem{c, r, mode, infinite_height_set(c)};
}

} // namespace solenoid
