#include "solenoid/cli.hpp"

#include <cstdlib>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "solenoid/baer.hpp"
#include "solenoid/conjugacy.hpp"
#include "solenoid/dirichlet.hpp"
#include "solenoid/errors.hpp"
#include "solenoid/mahler.hpp"
#include "solenoid/matrix.hpp"
#include "solenoid/orbits.hpp"
#include "solenoid/poly.hpp"
#include "solenoid/primeset.hpp"
#include "solenoid/rational.hpp"
#include "solenoid/zeta.hpp"

namespace solenoid {
namespace cli {
namespace {

using json = nlohmann::ordered_json;

/// Integers that fit a machine word print as JSON numbers; larger values
/// fall back to decimal strings so no precision is lost.
json j_zz(const ZZ& v)
{
    if (v.fits_slong_p()) return json(v.get_si());
    return json(v.get_str());
}

json j_qq(const QQ& q) { return json(q.get_str()); }

json j_mat(const IntMat& m)
{
    json rows = json::array();
    for (long i = 0; i < m.rows; ++i) {
        json r = json::array();
        for (long j = 0; j < m.cols; ++j) r.push_back(j_zz(m.at(i, j)));
        rows.push_back(std::move(r));
    }
    return rows;
}

/// Doubles are rendered through the JSON serializer in CSV as well, so the
/// two formats carry byte-identical numeric content.
std::string num_str(double x) { return json(x).dump(); }

void emit_json(std::ostream& out, const json& doc) { out << doc.dump(2) << "\n"; }

void write_csv(std::ostream& out, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows)
{
    auto line = [&out](const std::vector<std::string>& cells) {
        for (size_t i = 0; i < cells.size(); ++i) {
            if (i) out << ',';
            out << cells[i];
        }
        out << '\n';
    };
    line(header);
    for (const auto& r : rows) line(r);
}

std::vector<std::string> split_list(const std::string& text, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    for (char ch : text + std::string(1, sep)) {
        if (ch == ' ' || ch == '\t') continue;
        if (ch == sep) {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    return out;
}

std::vector<ZZ> parse_zz_list(const std::string& text)
{
    std::vector<ZZ> out;
    for (const auto& tok : split_list(text, ','))
        try {
            out.emplace_back(tok);
        } catch (const std::invalid_argument&) {
            throw std::domain_error("bad integer in list: " + tok);
        }
    return out;
}

std::vector<double> parse_double_list(const std::string& text)
{
    std::vector<double> out;
    for (const auto& tok : split_list(text, ',')) {
        size_t pos = 0;
        double v = 0;
        try {
            v = std::stod(tok, &pos);
        } catch (const std::invalid_argument&) {
            throw std::domain_error("bad number in list: " + tok);
        }
        if (pos != tok.size()) throw std::domain_error("bad number in list: " + tok);
        out.push_back(v);
    }
    return out;
}

/// Shared system flags.  Exactly one of --s-set, --s-cofinite, --chi picks
/// the height data; --mode auto tries the automorphism rule first and falls
/// back to the endomorphism rule.
struct SystemOpts {
    std::string r;
    std::string s_set;
    std::string s_cofinite;
    std::string chi;
    std::string mode = "auto";
};

void add_system_flags(CLI::App* cmd, SystemOpts& o, bool r_required = true)
{
    auto* r = cmd->add_option("--r", o.r, "map ratio a or a/b");
    if (r_required) r->required();
    cmd->add_option("--s-set", o.s_set, "finite set of infinite-height primes, e.g. \"2,3\"");
    cmd->add_option("--s-cofinite", o.s_cofinite, "excluded primes of a cofinite height set");
    cmd->add_option("--chi", o.chi, "characteristic sequence \"default=<k|inf>; p:k, ...\"");
    cmd->add_option("--mode", o.mode, "validation mode")->check(CLI::IsMember({"auto", "endo"}));
}

SolenoidSystem make_system(const CLI::App* cmd, const SystemOpts& o)
{
    int sources = (cmd->count("--s-set") > 0) + (cmd->count("--s-cofinite") > 0) +
                  (cmd->count("--chi") > 0);
    if (sources != 1)
        throw std::domain_error("exactly one of --s-set, --s-cofinite, --chi is required");
    CharacteristicSequence c;
    if (cmd->count("--s-set"))
        c = chi_with_infinite_set(PrimeSet::finite(parse_prime_list(o.s_set)));
    else if (cmd->count("--s-cofinite"))
        c = chi_with_infinite_set(PrimeSet::cofinite(parse_prime_list(o.s_cofinite)));
    else
        c = parse_characteristic(o.chi);
    ReducedRational r = parse_ratio(o.r);
    if (o.mode == "endo") return validate_system(c, r, MapMode::endomorphism);
    try {
        return validate_system(c, r, MapMode::automorphism);
    } catch (const std::domain_error&) {
        return validate_system(c, r, MapMode::endomorphism);
    }
}

void require_upto(long n)
{
    if (n < 1) throw std::domain_error("--upto must be >= 1");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"solenoid-lab: dynamical invariants of one-solenoid and toral maps"};
    app.name("solenoid-lab");
    app.require_subcommand(1);

    // SOLENOID_LAB_THREADS caps internal parallelism; evaluation is serial
    // throughout, which honours any cap.
    if (const char* threads = std::getenv("SOLENOID_LAB_THREADS")) {
        char* end = nullptr;
        long t = std::strtol(threads, &end, 10);
        if (end == threads || *end != '\0' || t < 1) {
            err << "solenoid-lab: SOLENOID_LAB_THREADS must be a positive integer\n";
            return 2;
        }
    }

    int exit_code = 0;

    // fixed-points
    auto* fp_cmd = app.add_subcommand("fixed-points", "periodic point counts F(n), n = 1..N");
    SystemOpts fp_sys;
    long fp_upto = 10;
    std::string fp_fmt = "csv";
    add_system_flags(fp_cmd, fp_sys);
    fp_cmd->add_option("--upto", fp_upto, "largest n");
    fp_cmd->add_option("--format", fp_fmt)->check(CLI::IsMember({"csv", "json"}));
    fp_cmd->callback([&]() {
        require_upto(fp_upto);
        auto sys = make_system(fp_cmd, fp_sys);
        std::vector<ZZ> F(fp_upto + 1);
        for (long n = 1; n <= fp_upto; ++n) F[n] = fixed_points(sys, n);
        if (fp_fmt == "csv") {
            std::vector<std::vector<std::string>> rows;
            for (long n = 1; n <= fp_upto; ++n)
                rows.push_back({std::to_string(n), F[n].get_str()});
            write_csv(out, {"n", "F"}, rows);
        } else {
            json doc;
            doc["h"] = entropy(sys);
            json rows = json::array();
            for (long n = 1; n <= fp_upto; ++n)
                rows.push_back(json{{"n", n}, {"F", j_zz(F[n])}});
            doc["rows"] = std::move(rows);
            emit_json(out, doc);
        }
    });

    // orbits
    auto* orb_cmd = app.add_subcommand("orbits", "closed orbit counts O(n), n = 1..N");
    SystemOpts orb_sys;
    long orb_upto = 10;
    std::string orb_fmt = "csv";
    add_system_flags(orb_cmd, orb_sys);
    orb_cmd->add_option("--upto", orb_upto, "largest n");
    orb_cmd->add_option("--format", orb_fmt)->check(CLI::IsMember({"csv", "json"}));
    orb_cmd->callback([&]() {
        require_upto(orb_upto);
        auto sys = make_system(orb_cmd, orb_sys);
        auto O = orbit_counts(sys, orb_upto);
        std::vector<ZZ> F(orb_upto + 1);
        for (long n = 1; n <= orb_upto; ++n) F[n] = fixed_points(sys, n);
        if (orb_fmt == "csv") {
            std::vector<std::vector<std::string>> rows;
            for (long n = 1; n <= orb_upto; ++n)
                rows.push_back({std::to_string(n), F[n].get_str(), O[n].get_str()});
            write_csv(out, {"n", "F", "O"}, rows);
        } else {
            json doc;
            doc["h"] = entropy(sys);
            json rows = json::array();
            for (long n = 1; n <= orb_upto; ++n)
                rows.push_back(json{{"n", n}, {"F", j_zz(F[n])}, {"O", j_zz(O[n])}});
            doc["rows"] = std::move(rows);
            emit_json(out, doc);
        }
    });

    // mertens
    auto* mer_cmd = app.add_subcommand("mertens", "Mertens sum M(N) and slope estimate");
    SystemOpts mer_sys;
    long mer_upto = 1000;
    std::string mer_fmt = "csv";
    add_system_flags(mer_cmd, mer_sys);
    mer_cmd->add_option("--upto", mer_upto, "evaluation point N");
    mer_cmd->add_option("--format", mer_fmt)->check(CLI::IsMember({"csv", "json"}));
    mer_cmd->callback([&]() {
        require_upto(mer_upto);
        auto sys = make_system(mer_cmd, mer_sys);
        double M = mertens_sum(sys, mer_upto);
        double slope = mertens_slope(sys, mer_upto);
        if (mer_fmt == "csv") {
            write_csv(out, {"N", "M", "slope"},
                      {{std::to_string(mer_upto), num_str(M), num_str(slope)}});
        } else {
            json doc;
            doc["h"] = entropy(sys);
            doc["N"] = mer_upto;
            doc["M"] = M;
            doc["slope"] = slope;
            doc["density"] = j_qq(mertens_density_constant(sys));
            emit_json(out, doc);
        }
    });

    // pi
    auto* pi_cmd = app.add_subcommand("pi", "orbit totals pi(n), n = 1..N");
    SystemOpts pi_sys;
    long pi_upto = 100;
    std::string pi_fmt = "csv";
    add_system_flags(pi_cmd, pi_sys);
    pi_cmd->add_option("--upto", pi_upto, "largest n");
    pi_cmd->add_option("--format", pi_fmt)->check(CLI::IsMember({"csv", "json"}));
    pi_cmd->callback([&]() {
        require_upto(pi_upto);
        auto sys = make_system(pi_cmd, pi_sys);
        auto prof = orbit_profile(sys, pi_upto);
        if (pi_fmt == "csv") {
            std::vector<std::vector<std::string>> rows;
            for (long n = 1; n <= pi_upto; ++n)
                rows.push_back({std::to_string(n), prof.pi[n].get_str()});
            write_csv(out, {"n", "pi"}, rows);
        } else {
            json doc;
            doc["h"] = entropy(sys);
            json rows = json::array();
            for (long n = 1; n <= pi_upto; ++n)
                rows.push_back(json{{"n", n}, {"pi", j_zz(prof.pi[n])}});
            doc["rows"] = std::move(rows);
            if (!sys.s.is_finite() && pi_upto >= 10000) {
                auto fit = pi_polylog_fit(sys, pi_upto);
                doc["fit"] = json{{"K_hat", fit.K_hat}, {"C_hat", fit.C_hat}};
            }
            emit_json(out, doc);
        }
    });

    // zeta
    auto* zeta_cmd = app.add_subcommand("zeta", "zeta function: closed form or truncated series");
    SystemOpts zeta_sys;
    long zeta_n = 12;
    std::string zeta_fmt = "json";
    add_system_flags(zeta_cmd, zeta_sys);
    zeta_cmd->add_option("--n", zeta_n, "truncation order for the series output");
    zeta_cmd->add_option("--format", zeta_fmt)->check(CLI::IsMember({"csv", "json"}));
    zeta_cmd->callback([&]() {
        if (zeta_n < 1) throw std::domain_error("--n must be >= 1");
        auto sys = make_system(zeta_cmd, zeta_sys);
        bool closed = sys.s.is_finite() && sys.s.primes.empty() && sys.r.den == 1 &&
                      abs_z(sys.r.num) >= 2;
        if (closed) {
            auto f = rational_zeta_integer_map(sys.r.num);
            if (zeta_fmt == "json") {
                json doc;
                json num = json::array(), den = json::array();
                for (const auto& c : f.num.c) num.push_back(j_zz(c));
                for (const auto& c : f.den.c) den.push_back(j_zz(c));
                doc["num_coeffs"] = std::move(num);
                doc["den_coeffs"] = std::move(den);
                emit_json(out, doc);
            } else {
                std::vector<std::vector<std::string>> rows;
                for (size_t k = 0; k < f.num.c.size(); ++k)
                    rows.push_back({"num", std::to_string(k), f.num.c[k].get_str()});
                for (size_t k = 0; k < f.den.c.size(); ++k)
                    rows.push_back({"den", std::to_string(k), f.den.c[k].get_str()});
                write_csv(out, {"part", "k", "value"}, rows);
            }
            return;
        }
        std::vector<ZZ> F;
        for (long n = 1; n <= zeta_n; ++n) F.push_back(fixed_points(sys, n));
        auto series = zeta_series(F);
        if (zeta_fmt == "json") {
            json doc;
            json coeffs = json::array();
            for (const auto& c : series.coeffs) coeffs.push_back(j_qq(c));
            doc["coeffs"] = std::move(coeffs);
            emit_json(out, doc);
        } else {
            std::vector<std::vector<std::string>> rows;
            for (size_t k = 0; k < series.coeffs.size(); ++k)
                rows.push_back({std::to_string(k), series.coeffs[k].get_str()});
            write_csv(out, {"k", "coeff"}, rows);
        }
    });

    // toral-zeta
    auto* tz_cmd = app.add_subcommand("toral-zeta", "rational zeta function of a toral automorphism");
    std::string tz_matrix;
    long tz_n = 16;
    std::string tz_fmt = "json";
    tz_cmd->add_option("--matrix", tz_matrix, "integer matrix \"[[2,1],[1,1]]\"")->required();
    tz_cmd->add_option("--n", tz_n, "fixed point terms fed to the reconstruction");
    tz_cmd->add_option("--format", tz_fmt)->check(CLI::IsMember({"csv", "json"}));
    tz_cmd->callback([&]() {
        auto A = parse_matrix(tz_matrix);
        auto f = toral_zeta(A, tz_n);
        if (tz_fmt == "json") {
            json doc;
            json num = json::array(), den = json::array();
            for (const auto& c : f.num.c) num.push_back(j_zz(c));
            for (const auto& c : f.den.c) den.push_back(j_zz(c));
            doc["num_coeffs"] = std::move(num);
            doc["den_coeffs"] = std::move(den);
            emit_json(out, doc);
        } else {
            std::vector<std::vector<std::string>> rows;
            for (size_t k = 0; k < f.num.c.size(); ++k)
                rows.push_back({"num", std::to_string(k), f.num.c[k].get_str()});
            for (size_t k = 0; k < f.den.c.size(); ++k)
                rows.push_back({"den", std::to_string(k), f.den.c[k].get_str()});
            write_csv(out, {"part", "k", "value"}, rows);
        }
    });

    // realizable
    auto* rz_cmd = app.add_subcommand("realizable", "test an F-sequence for map realizability");
    SystemOpts rz_sys;
    std::string rz_coeffs;
    long rz_upto = 100;
    rz_cmd->add_option("--coeffs", rz_coeffs, "explicit F-sequence \"2,2,8,16\"");
    add_system_flags(rz_cmd, rz_sys, false);
    rz_cmd->add_option("--upto", rz_upto, "sequence length when built from a system");
    rz_cmd->callback([&]() {
        std::vector<ZZ> F;
        bool have_coeffs = rz_cmd->count("--coeffs") > 0;
        bool have_system = rz_cmd->count("--r") > 0;
        if (have_coeffs == have_system)
            throw std::domain_error("give either --coeffs or a system via --r");
        if (have_coeffs) {
            F = parse_zz_list(rz_coeffs);
            if (F.empty()) throw std::domain_error("--coeffs must name at least one term");
        } else {
            require_upto(rz_upto);
            auto sys = make_system(rz_cmd, rz_sys);
            for (long n = 1; n <= rz_upto; ++n) F.push_back(fixed_points(sys, n));
        }
        auto verdict = realizable_as_map(F);
        if (verdict.ok) {
            emit_json(out, json{{"realizable", true}});
        } else {
            emit_json(out, json{{"fail_at", verdict.fail_at}});
            exit_code = 4;
        }
    });

    // mahler
    auto* mah_cmd = app.add_subcommand("mahler", "logarithmic Mahler measure of an integer polynomial");
    std::string mah_coeffs;
    mah_cmd->add_option("--coeffs", mah_coeffs, "coefficients c0,c1,... ascending")->required();
    mah_cmd->callback([&]() {
        ZPoly f(parse_zz_list(mah_coeffs));
        json doc;
        doc["measure"] = mahler_measure(f);
        if (f.monic()) doc["is_cyclotomic_product"] = is_cyclotomic_product(f);
        emit_json(out, doc);
    });

    // entropy
    auto* ent_cmd = app.add_subcommand("entropy", "topological entropy of the map x -> (a/b) x");
    std::string ent_r;
    ent_cmd->add_option("--r", ent_r, "map ratio a or a/b")->required();
    ent_cmd->callback([&]() {
        auto rec = abramov_entropy(parse_ratio(ent_r));
        json doc;
        doc["h"] = rec.value;
        doc["exact_arg"] = j_zz(rec.exact_arg);
        emit_json(out, doc);
    });

    // lehmer-scan
    auto* ls_cmd = app.add_subcommand("lehmer-scan", "search small polynomials for small positive measure");
    long ls_degree = 0, ls_height = 0;
    double ls_threshold = 0;
    std::string ls_fmt = "csv";
    ls_cmd->add_option("--max-degree", ls_degree, "largest degree")->required();
    ls_cmd->add_option("--max-height", ls_height, "largest |coefficient|")->required();
    ls_cmd->add_option("--threshold", ls_threshold, "report measures below this")->required();
    ls_cmd->add_option("--format", ls_fmt)->check(CLI::IsMember({"csv", "json"}));
    ls_cmd->callback([&]() {
        auto hits = lehmer_scan(ls_degree, ls_height, ls_threshold);
        if (ls_fmt == "csv") {
            std::vector<std::vector<std::string>> rows;
            for (const auto& h : hits) {
                std::string poly;
                for (size_t k = 0; k < h.poly.c.size(); ++k) {
                    if (k) poly += ' ';
                    poly += h.poly.c[k].get_str();
                }
                rows.push_back({poly, num_str(h.measure)});
            }
            write_csv(out, {"polynomial", "measure"}, rows);
        } else {
            json doc;
            json arr = json::array();
            for (const auto& h : hits) {
                json coeffs = json::array();
                for (const auto& c : h.poly.c) coeffs.push_back(j_zz(c));
                arr.push_back(json{{"coeffs", std::move(coeffs)}, {"measure", h.measure}});
            }
            doc["hits"] = std::move(arr);
            emit_json(out, doc);
        }
    });

    // conjugacy
    auto* cj_cmd = app.add_subcommand("conjugacy", "decide conjugacy of two integer matrices over a localization");
    std::string cj_matrices, cj_allowed;
    long cj_bound = 25;
    cj_cmd->add_option("--matrices", cj_matrices, "pair \"[[..]];[[..]]\"")->required();
    cj_cmd->add_option("--allowed", cj_allowed, "inverted primes of the ring, empty for Z");
    cj_cmd->add_option("--bound", cj_bound, "coordinate bound of the witness search");
    cj_cmd->callback([&]() {
        auto parts = split_list(cj_matrices, ';');
        if (parts.size() != 2) throw std::domain_error("--matrices needs exactly two matrices");
        auto A = parse_matrix(parts[0]);
        auto B = parse_matrix(parts[1]);
        auto allowed = PrimeSet::finite(parse_prime_list(cj_allowed));
        auto d = conjugate_over_ring(A, B, allowed, cj_bound);
        json doc;
        switch (d.status) {
        case ConjugacyDecision::Status::conjugate:
            doc["status"] = "conjugate";
            doc["witness"] = j_mat(d.witness);
            doc["det"] = j_zz(d.det_value);
            break;
        case ConjugacyDecision::Status::obstructed:
            doc["status"] = "obstructed";
            doc["modulus"] = j_zz(d.modulus);
            break;
        case ConjugacyDecision::Status::unknown:
            doc["status"] = "unknown";
            doc["bound"] = d.bound;
            break;
        }
        doc["reason"] = d.reason;
        emit_json(out, doc);
    });

    // poset
    auto* po_cmd = app.add_subcommand("poset", "conjugacy classes along a ladder of localizations");
    std::string po_matrices, po_primes = "2,3,5";
    long po_bound = 25;
    std::string po_fmt = "dot";
    po_cmd->add_option("--matrices", po_matrices, "list \"[[..]];[[..]];...\"")->required();
    po_cmd->add_option("--primes", po_primes, "primes inverted one at a time");
    po_cmd->add_option("--bound", po_bound, "coordinate bound of the witness search");
    po_cmd->add_option("--format", po_fmt)->check(CLI::IsMember({"dot", "json"}));
    po_cmd->callback([&]() {
        std::vector<IntMat> mats;
        for (const auto& part : split_list(po_matrices, ';')) mats.push_back(parse_matrix(part));
        auto primes = parse_prime_list(po_primes);
        auto poset = poset_build(mats, primes, po_bound);
        if (po_fmt == "dot") {
            out << poset_dot(poset);
        } else {
            json doc;
            json levels = json::array();
            for (const auto& lv : poset.levels) {
                json classes = json::array();
                for (const auto& cls : lv.classes) classes.push_back(cls);
                levels.push_back(json{{"ring", lv.ring},
                                      {"classes", std::move(classes)},
                                      {"has_unknown", lv.has_unknown}});
            }
            doc["levels"] = std::move(levels);
            doc["parent"] = poset.parent;
            emit_json(out, doc);
        }
    });

    // dirichlet
    auto* di_cmd = app.add_subcommand("dirichlet", "partial orbit Dirichlet series at real s");
    SystemOpts di_sys;
    std::string di_s;
    long di_n = 10000;
    std::string di_fmt = "csv";
    add_system_flags(di_cmd, di_sys);
    di_cmd->add_option("--s", di_s, "evaluation points \"3\" or \"2,3,4\"")->required();
    di_cmd->add_option("--n", di_n, "truncation point N");
    di_cmd->add_option("--format", di_fmt)->check(CLI::IsMember({"csv", "json"}));
    di_cmd->callback([&]() {
        auto sys = make_system(di_cmd, di_sys);
        auto svals = parse_double_list(di_s);
        if (svals.empty()) throw std::domain_error("--s must name at least one value");
        bool reference = !sys.s.is_finite() && sys.s.primes.size() == 2 &&
                         sys.s.primes[0] == 3 && sys.s.primes[1] == 5 && sys.r.num == 2 &&
                         sys.r.den == 1;
        std::vector<std::vector<std::string>> rows;
        json jrows = json::array();
        for (double s : svals) {
            auto part = dirichlet_partial(sys, s, di_n);
            std::string ref = reference ? num_str(dirichlet_reference_3_5(s)) : "";
            rows.push_back({num_str(s), num_str(part.value), ref, num_str(part.tail_bound)});
            json r{{"s", s}, {"partial", part.value}};
            if (reference)
                r["reference"] = dirichlet_reference_3_5(s);
            else
                r["reference"] = nullptr;
            r["tail_bound"] = part.tail_bound;
            jrows.push_back(std::move(r));
        }
        if (di_fmt == "csv") {
            write_csv(out, {"s", "partial", "reference", "tail_bound"}, rows);
        } else {
            json doc;
            doc["N"] = di_n;
            doc["rows"] = std::move(jrows);
            emit_json(out, doc);
        }
    });

    // growth-construct
    auto* gc_cmd = app.add_subcommand("growth-construct", "staged solenoid product meeting growth targets");
    std::string gc_theta;
    std::string gc_fmt = "json";
    gc_cmd->add_option("--theta", gc_theta, "targets theta_2,theta_3,... as integers")->required();
    gc_cmd->add_option("--format", gc_fmt)->check(CLI::IsMember({"csv", "json"}));
    gc_cmd->callback([&]() {
        auto theta = parse_zz_list(gc_theta);
        auto g = growth_construction(theta);
        long K = (long)theta.size() + 1;
        auto amended = [&](long n) {
            for (long a : g.amended_at)
                if (a == n) return true;
            return false;
        };
        if (gc_fmt == "csv") {
            std::vector<std::vector<std::string>> rows;
            for (long n = 2; n <= K; ++n)
                rows.push_back({std::to_string(n), std::to_string(g.multiplicities[n - 2]),
                                g.F_product[n].get_str(), g.theta_effective[n].get_str(),
                                g.sandwich_ok[n] ? "true" : "false",
                                g.sandwich_ok_original[n] ? "true" : "false",
                                amended(n) ? "true" : "false"});
            write_csv(out, {"n", "n_k", "F", "theta_effective", "sandwich_ok",
                            "sandwich_ok_original", "amended"},
                      rows);
        } else {
            json doc;
            doc["multiplicities"] = g.multiplicities;
            doc["amended_at"] = g.amended_at;
            json rows = json::array();
            for (long n = 2; n <= K; ++n)
                rows.push_back(json{{"n", n},
                                    {"n_k", g.multiplicities[n - 2]},
                                    {"F", j_zz(g.F_product[n])},
                                    {"theta_effective", j_zz(g.theta_effective[n])},
                                    {"sandwich_ok", (bool)g.sandwich_ok[n]},
                                    {"sandwich_ok_original", (bool)g.sandwich_ok_original[n]},
                                    {"amended", amended(n)}});
            doc["rows"] = std::move(rows);
            emit_json(out, doc);
        }
    });

    // boundary-scan
    auto* bs_cmd = app.add_subcommand("boundary-scan", "partial log-zeta sums on a polar grid");
    SystemOpts bs_sys;
    std::string bs_radii, bs_angles;
    long bs_n = 2000;
    std::string bs_fmt = "csv";
    add_system_flags(bs_cmd, bs_sys);
    bs_cmd->add_option("--radii", bs_radii, "radii \"0.2,0.3\"")->required();
    bs_cmd->add_option("--angles", bs_angles, "angles in turns \"0,0.25,0.5\"")->required();
    bs_cmd->add_option("--n", bs_n, "truncation point N");
    bs_cmd->add_option("--format", bs_fmt)->check(CLI::IsMember({"csv", "json"}));
    bs_cmd->callback([&]() {
        auto sys = make_system(bs_cmd, bs_sys);
        auto table =
            boundary_profile(sys, parse_double_list(bs_radii), parse_double_list(bs_angles), bs_n);
        if (bs_fmt == "csv") {
            std::vector<std::vector<std::string>> rows;
            for (const auto& p : table)
                rows.push_back({num_str(p.radius), num_str(p.angle), num_str(p.re),
                                num_str(p.im), num_str(p.magnitude)});
            write_csv(out, {"radius", "angle", "re", "im", "magnitude"}, rows);
        } else {
            json doc;
            json rows = json::array();
            for (const auto& p : table)
                rows.push_back(json{{"radius", p.radius},
                                    {"angle", p.angle},
                                    {"re", p.re},
                                    {"im", p.im},
                                    {"magnitude", p.magnitude}});
            doc["rows"] = std::move(rows);
            emit_json(out, doc);
        }
    });

    // classify-type
    auto* ct_cmd = app.add_subcommand("classify-type", "canonicalize and compare characteristic sequences");
    std::vector<std::string> ct_chis;
    ct_cmd->add_option("--chi", ct_chis, "one or two sequences \"default=<k|inf>; p:k, ...\"");
    ct_cmd->callback([&]() {
        if (ct_chis.empty() || ct_chis.size() > 2)
            throw std::domain_error("--chi must be given once or twice");
        auto c1 = parse_characteristic(ct_chis[0]);
        json doc;
        if (ct_chis.size() == 1) {
            doc["canonical"] = format_characteristic(c1);
        } else {
            auto c2 = parse_characteristic(ct_chis[1]);
            doc["same_type"] = same_type(c1, c2);
            doc["canonical"] = json::array({format_characteristic(c1), format_characteristic(c2)});
        }
        emit_json(out, doc);
    });

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "solenoid-lab: " << e.what() << "\n";
        err << "run with --help for usage\n";
        return 2;
    } catch (const invariant_violation& e) {
        err << "solenoid-lab: invariant violation: " << e.what() << "\n";
        return 4;
    } catch (const capability_error& e) {
        err << "solenoid-lab: capability limit: " << e.what() << "\n";
        return 3;
    } catch (const std::domain_error& e) {
        err << "solenoid-lab: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "solenoid-lab: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}

} // namespace cli
} // namespace solenoid
