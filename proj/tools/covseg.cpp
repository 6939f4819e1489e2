#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "covseg/json_io.hpp"

using covseg::Int;
using nlohmann::json;

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw covseg::DomainError("cannot open input file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw covseg::DomainError("cannot open output file '" + out_path + "'");
    out << text;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        q += c;
        if (c == '"') q += '"';
    }
    return q + "\"";
}

const char* kCsvHeader = "multisegment,n,family,a,lambda,bv,equal,generic,whdimZ\n";

std::string csv_row(const covseg::SweepRow& row) {
    std::string line = csv_field(row.multisegment);
    line += "," + std::to_string(row.cover.n);
    line += std::string(",") + (row.cover.family == covseg::Family::KP ? "KP" : "S");
    line += "," + (row.cover.family == covseg::Family::KP ? std::to_string(row.cover.a) : "");
    line += "," + csv_field(row.lambda);
    line += "," + csv_field(row.bv);
    line += "," + row.equal;
    line += std::string(",") + (row.generic ? "true" : "false");
    line += "," + csv_field(row.whdimZ);
    return line + "\n";
}

/* The csv view of a session is the same table for every command: one row per
   named multisegment with every applicable column filled. */
covseg::SweepRow session_row(const covseg::Multisegment& m, const covseg::CoverSpec& c) {
    covseg::SweepRow row;
    row.multisegment = m.str();
    row.cover = c;
    row.lambda = covseg::lambda_of(m, c).str();
    row.generic = covseg::is_generic(m, c);
    if (c.family == covseg::Family::KP) {
        covseg::BvConsistency bc = covseg::bv_consistency(m, c);
        row.bv = bc.bv.str();
        row.equal = bc.equal ? "true" : "false";
    }
    Int dim = covseg::wh_dim_known_cases(m, c);
    row.whdimZ = dim < 0 ? "unknown" : std::to_string(dim);
    return row;
}

std::string session_csv(const covseg::Session& s) {
    std::string out = kCsvHeader;
    for (const auto& [name, m] : s.multisegments) out += csv_row(session_row(m, s.cover));
    return out;
}

std::string render_json(const json& j) { return j.dump(2) + "\n"; }

std::string fmt_set(const std::vector<Int>& v) {
    std::string s = "{";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + "}";
}

struct CommandResult {
    std::string text;
    int exit_code = 0;
};

CommandResult cmd_lambda(const covseg::Session& s, const std::string& format, bool as_wf) {
    const char* cmd = as_wf ? "wf" : "lambda";
    if (format == "csv") return {session_csv(s), 0};
    json rows = json::array();
    std::string table;
    for (const auto& [name, m] : s.multisegments) {
        covseg::Partition lam =
            as_wf ? covseg::wavefront(m, s.cover) : covseg::lambda_of(m, s.cover);
        rows.push_back({{"name", name}, {as_wf ? "wf" : "lambda", covseg::to_json(lam)}});
        table += name + "  " + (as_wf ? "WF=" : "lambda=") + lam.str() + "\n";
    }
    if (format == "json")
        return {render_json({{"command", cmd}, {"cover", covseg::to_json(s.cover)}, {"rows", rows}}), 0};
    return {table, 0};
}

CommandResult cmd_generic(const covseg::Session& s, const std::string& format) {
    if (format == "csv") return {session_csv(s), 0};
    json rows = json::array();
    std::string table;
    for (const auto& [name, m] : s.multisegments) {
        bool g = covseg::is_generic(m, s.cover);
        covseg::Partition lam = covseg::lambda_of(m, s.cover);
        rows.push_back({{"name", name}, {"generic", g}, {"lambda", covseg::to_json(lam)}});
        table += name + "  generic=" + (g ? "yes" : "no") + "  lambda=" + lam.str() + "\n";
    }
    if (format == "json")
        return {render_json({{"command", "generic"}, {"cover", covseg::to_json(s.cover)}, {"rows", rows}}), 0};
    return {table, 0};
}

CommandResult cmd_whdim(const covseg::Session& s, const std::string& format) {
    if (format == "csv") return {session_csv(s), 0};
    json rows = json::array();
    std::string table;
    for (const auto& [name, m] : s.multisegments) {
        Int dz = covseg::wh_dim_known_cases(m, s.cover);
        json row{{"name", name}};
        row["whdimZ"] = dz < 0 ? json(nullptr) : json(dz);
        std::string lcell = "n/a";
        if (m.segments().size() == 1) {
            Int dl = covseg::wh_dim_L(m.segments().front(), s.cover);
            row["whdimL"] = dl;
            lcell = std::to_string(dl);
        } else {
            row["whdimL"] = nullptr;
        }
        rows.push_back(row);
        table += name + "  whdimZ=" + (dz < 0 ? "unknown" : std::to_string(dz)) +
                 "  whdimL=" + lcell + "\n";
    }
    if (format == "json")
        return {render_json({{"command", "whdim"}, {"cover", covseg::to_json(s.cover)}, {"rows", rows}}), 0};
    return {table, 0};
}

CommandResult cmd_derive(const covseg::Session& s, const std::string& format, Int k,
                         const std::string& side) {
    if (format == "csv") throw covseg::DomainError("csv output is not available for derive");
    json rows = json::array();
    std::string table;
    for (const auto& [name, m] : s.multisegments) {
        json row{{"name", name}, {"result", nullptr}, {"top", nullptr}, {"support_degrees", nullptr}};
        if (m.segments().size() == 1) {
            const covseg::Segment& d = m.segments().front();
            covseg::DerivativeResult res = side == "L" ? covseg::derivative_L(d, k, s.cover)
                                                       : covseg::derivative_Z(d, k, s.cover);
            row["result"] = covseg::to_json(res);
            std::string val = "0";
            if (res.scalar > 0) {
                val = std::to_string(res.scalar) + " * " + side + "(" +
                      res.value.terms.begin()->first.str() + ")";
            }
            table += name + "  " + side + "^(" + std::to_string(k) + ") = " + val + "\n";
        } else {
            if (side == "L")
                throw covseg::DomainError("L-derivatives are computed for single segments only");
            Int top = covseg::k_m(m, s.cover);
            std::vector<Int> degrees = covseg::support_degrees(m, s.cover);
            if (k != top)
                throw covseg::DomainError(
                    "derivative terms of a multisegment are computed only at the top degree k_m=" +
                    std::to_string(top) + "; possibly nonzero degrees: " + fmt_set(degrees));
            covseg::HighestDerivative hd = covseg::highest_derivative(m, s.cover);
            row["top"] = json{{"degree", hd.degree},
                              {"socle", hd.socle.str()},
                              {"multiplicity", hd.multiplicity}};
            row["support_degrees"] = degrees;
            table += name + "  top k=" + std::to_string(hd.degree) + " socle=" + hd.socle.str() +
                     " mult=" + std::to_string(hd.multiplicity) +
                     " support=" + fmt_set(degrees) + "\n";
        }
        rows.push_back(row);
    }
    if (format == "json")
        return {render_json({{"command", "derive"}, {"cover", covseg::to_json(s.cover)}, {"rows", rows}}), 0};
    return {table, 0};
}

CommandResult cmd_bvcheck(const covseg::Session& s, const std::string& format) {
    int code = 0;
    json rows = json::array();
    std::string table, csv = kCsvHeader;
    for (const auto& [name, m] : s.multisegments) {
        covseg::BvConsistency bc = covseg::bv_consistency(m, s.cover);
        if (!bc.equal) code = 2;
        json row = covseg::to_json(bc);
        row["name"] = name;
        rows.push_back(row);
        table += name + "  lambda=" + bc.lambda.str() + " bv=" + bc.bv.str() +
                 " equal=" + (bc.equal ? "yes" : "no") + " orbit=" + bc.orbit.str() + "\n";
        if (format == "csv") csv += csv_row(session_row(m, s.cover));
    }
    if (format == "csv") return {csv, code};
    if (format == "json")
        return {render_json({{"command", "bvcheck"}, {"cover", covseg::to_json(s.cover)}, {"rows", rows}}), code};
    return {table, code};
}

CommandResult cmd_semiwh(const covseg::Session& s, const std::string& format,
                         const std::string& lamStr) {
    if (format == "csv") throw covseg::DomainError("csv output is not available for semiwh");
    std::vector<Int> entries;
    std::stringstream ss(lamStr);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t used = 0;
            Int v = std::stoll(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            entries.push_back(v);
        } catch (const std::exception&) {
            throw covseg::DomainError("bad --lam entry '" + item + "'");
        }
    }
    covseg::Composition lam(entries);
    json rows = json::array();
    std::string table;
    for (const auto& [name, m] : s.multisegments) {
        if (m.segments().size() != 1)
            throw covseg::DomainError("semiwh applies to single-segment multisegments; '" + name +
                                      "' has " + std::to_string(m.segments().size()) + " segments");
        bool nz = covseg::semi_whittaker_nonzero(m.segments().front(), lam, s.cover);
        rows.push_back({{"name", name}, {"lam", entries}, {"nonzero", nz}});
        table += name + "  lam=" + lam.str() + " nonzero=" + (nz ? "yes" : "no") + "\n";
    }
    if (format == "json")
        return {render_json({{"command", "semiwh"}, {"cover", covseg::to_json(s.cover)}, {"rows", rows}}), 0};
    return {table, 0};
}

int env_threads() {
    const char* env = std::getenv("COVSEG_THREADS");
    if (!env || !*env) return 1;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1 || v > 256)
        throw covseg::DomainError("COVSEG_THREADS must be an integer in [1, 256]");
    return static_cast<int>(v);
}

CommandResult cmd_enumerate(const std::string& format, Int maxSize, Int r0Max,
                            const std::string& coversSpec, const std::string& checkList) {
    covseg::SweepOptions opts;
    opts.covers = covseg::parse_cover_ranges(coversSpec);
    opts.max_size = maxSize;
    opts.r0_max = r0Max;
    opts.threads = env_threads();
    if (!checkList.empty()) {
        std::stringstream ss(checkList);
        std::string item;
        while (std::getline(ss, item, ',')) opts.checks.insert(item);
    }
    if (format == "csv") {
        std::string out = kCsvHeader;
        covseg::SweepSummary sum =
            covseg::run_sweep_rows(opts, [&](const covseg::SweepRow& row) { out += csv_row(row); });
        return {out, sum.failure_count == 0 ? 0 : 2};
    }
    covseg::SweepSummary sum = covseg::run_sweep(opts);
    int code = sum.failure_count == 0 ? 0 : 2;
    if (format == "json")
        return {render_json({{"command", "enumerate"}, {"summary", covseg::to_json(sum)}}), code};
    std::string table;
    Int checks = 0;
    for (const auto& [name, count] : sum.checked) {
        table += "check " + name + ": " + std::to_string(count) + " runs\n";
        checks += count;
    }
    table += "total: " + std::to_string(sum.covers) + " covers, " + std::to_string(sum.instances) +
             " instances, " + std::to_string(checks) + " checks, " +
             std::to_string(sum.failure_count) + " failures\n";
    for (const std::string& f : sum.failures) table += "FAIL " + f + "\n";
    return {table, code};
}

struct Group {
    std::string name;
    bool ok = true;
    std::string detail;
};

Group selftest_partitions() {
    Group g{"partitions", true, ""};
    Int count = 0;
    for (Int n = 0; n <= 14 && g.ok; ++n)
        covseg::for_each_partition_of(n, [&](const covseg::Partition& p) {
            ++count;
            if (covseg::transpose(covseg::transpose(p)) != p) { g.ok = false; g.detail = "transpose not involutive at " + p.str(); }
            if (covseg::bv_dual(p, 1) != covseg::transpose(p)) { g.ok = false; g.detail = "bv_dual(.,1) != transpose at " + p.str(); }
        });
    std::vector<covseg::Partition> ps;
    covseg::for_each_partition_of(8, [&](const covseg::Partition& p) { ps.push_back(p); });
    for (const auto& p : ps) {
        if (!covseg::dominance_leq(p, p)) { g.ok = false; g.detail = "dominance not reflexive"; }
        for (const auto& q : ps) {
            bool pq = covseg::dominance_leq(p, q), qp = covseg::dominance_leq(q, p);
            if (pq && qp && !(p == q)) { g.ok = false; g.detail = "dominance not antisymmetric"; }
            for (const auto& r : ps)
                if (pq && covseg::dominance_leq(q, r) && !covseg::dominance_leq(p, r)) {
                    g.ok = false;
                    g.detail = "dominance not transitive";
                }
        }
    }
    if (g.ok) g.detail = std::to_string(count) + " partitions to size 14; dominance axioms at size 8";
    return g;
}

Group selftest_covers() {
    Group g{"covers", true, ""};
    Int count = 0;
    for (Int n = 1; n <= 8 && g.ok; ++n)
        for (Int a = -3; a <= 3 && g.ok; ++a) {
            covseg::CoverSpec c = covseg::make_kp(n, a);
            for (Int r = 0; r <= 30 && g.ok; ++r) {
                ++count;
                Int d = covseg::d_r(c, r);
                if (d < 1 || n % d != 0) { g.ok = false; g.detail = "d_r does not divide n"; }
                for (Int k = n; k <= r; k += n)
                    if (covseg::d_r(c, r - k) != d) { g.ok = false; g.detail = "d_r changed along a step of n"; }
                for (Int k = 1; k < r; ++k) {
                    covseg::MtpMultiplicities mm = covseg::mtp_multiplicities(c, r, k);
                    covseg::Rational lhs = mm.ratio * covseg::Rational(d);
                    if (!(lhs == covseg::Rational(covseg::checked_mul(covseg::d_r(c, k), covseg::d_r(c, r - k)))))
                        { g.ok = false; g.detail = "tensor multiplicity identity failed"; }
                    if (k % n == 0 && !mm.ratio.is_integer())
                        { g.ok = false; g.detail = "ratio not integral at a multiple of n"; }
                }
            }
        }
    if (g.ok) g.detail = std::to_string(count) + " (n, a, r) triples, r to 30";
    return g;
}

Group selftest_segments() {
    Group g{"segments", true, ""};
    covseg::CoverSpec c = covseg::make_s(2);
    covseg::CuspidalDatum rho{"p", 1, 1};
    std::vector<covseg::Segment> all;
    for (Int a = 0; a <= 3; ++a)
        for (Int b = a; b <= 3; ++b) all.emplace_back(rho, a, b);
    Int count = 0;
    for (const auto& x : all) {
        if (covseg::precedes(x, x)) { g.ok = false; g.detail = "precedes not irreflexive"; }
        for (const auto& y : all)
            if (covseg::precedes(x, y) && covseg::precedes(y, x))
                { g.ok = false; g.detail = "precedes not antisymmetric"; }
    }
    for (size_t i = 0; i < all.size(); ++i)
        for (size_t j = i; j < all.size(); ++j)
            for (size_t k = j; k < all.size(); ++k) {
                covseg::Multisegment m({all[i], all[j], all[k]});
                ++count;
                const auto& segs = m.segments();
                for (size_t x = 0; x < segs.size(); ++x)
                    for (size_t y = x + 1; y < segs.size(); ++y)
                        if (covseg::precedes(segs[x], segs[y]))
                            { g.ok = false; g.detail = "normal order admits a preceding pair"; }
                if (!covseg::homogeneity_hypothesis(m, c))
                    { g.ok = false; g.detail = "normal order violates the homogeneity hypothesis"; }
                Int lhs = m.total_size();
                Int rhs = covseg::multisegment_minus(m, c).total_size() + covseg::k_m(m, c);
                if (lhs != rhs) { g.ok = false; g.detail = "contraction does not account for k_m"; }
            }
    if (g.ok) g.detail = std::to_string(count) + " triple multisegments in a window";
    return g;
}

Group selftest_sweep(int threads) {
    Group g{"sweep", true, ""};
    covseg::SweepOptions opts;
    opts.covers = covseg::parse_cover_ranges(covseg::default_cover_ranges());
    opts.max_size = 6;
    opts.threads = threads;
    covseg::SweepSummary sum = covseg::run_sweep(opts);
    g.ok = sum.failure_count == 0;
    g.detail = std::to_string(sum.instances) + " instances over " + std::to_string(sum.covers) +
               " covers" + (g.ok ? "" : ", " + std::to_string(sum.failure_count) + " failures");
    if (!g.ok && !sum.failures.empty()) g.detail += "; first: " + sum.failures.front();
    return g;
}

CommandResult cmd_selftest(const std::string& format) {
    if (format == "csv") throw covseg::DomainError("csv output is not available for selftest");
    std::vector<Group> groups{selftest_partitions(), selftest_covers(), selftest_segments(),
                              selftest_sweep(env_threads())};
    bool ok = true;
    json rows = json::array();
    std::string table;
    for (const Group& g : groups) {
        ok = ok && g.ok;
        rows.push_back({{"name", g.name}, {"ok", g.ok}, {"detail", g.detail}});
        table += std::string(g.ok ? "[ ok ] " : "[FAIL] ") + g.name + ": " + g.detail + "\n";
    }
    table += ok ? "selftest passed\n" : "selftest FAILED\n";
    int code = ok ? 0 : 2;
    if (format == "json")
        return {render_json({{"command", "selftest"}, {"ok", ok}, {"groups", rows}}), code};
    return {table, code};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact derivative and wavefront combinatorics on covers of GL(r)"};
    app.require_subcommand(1);

    std::string file, out, format = "table";
    std::string coversSpec = covseg::default_cover_ranges(), checkList, lamStr, side = "Z";
    Int k = 0, maxSize = 6, r0Max = 3;

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"table", "json", "csv"}));
        sub->add_option("--out", out, "write output to a file instead of stdout");
    };
    auto add_file = [&](CLI::App* sub) {
        sub->add_option("file", file, "session file, or '-' for stdin")->required();
    };

    CLI::App* lambda = app.add_subcommand("lambda", "iterated highest-derivative partition per multisegment");
    add_file(lambda); add_format(lambda);
    CLI::App* wf = app.add_subcommand("wf", "wavefront partition per multisegment");
    add_file(wf); add_format(wf);
    CLI::App* generic = app.add_subcommand("generic", "genericity per multisegment");
    add_file(generic); add_format(generic);
    CLI::App* whdim = app.add_subcommand("whdim", "Whittaker dimensions where determined");
    add_file(whdim); add_format(whdim);
    CLI::App* derive = app.add_subcommand("derive", "derivative at a given degree");
    add_file(derive); add_format(derive);
    derive->add_option("--k", k, "derivative degree")->required();
    derive->add_option("--side", side, "Z or L")->check(CLI::IsMember({"Z", "L"}));
    CLI::App* bvcheck = app.add_subcommand("bvcheck", "compare lambda with the dual of the parameter orbit");
    add_file(bvcheck); add_format(bvcheck);
    CLI::App* semiwh = app.add_subcommand("semiwh", "semi-Whittaker nonvanishing for a composition");
    add_file(semiwh); add_format(semiwh);
    semiwh->add_option("--lam", lamStr, "composition, e.g. 2,1")->required();
    CLI::App* enumerate = app.add_subcommand("enumerate", "sweep small instances and verify identities");
    add_format(enumerate);
    enumerate->add_option("--max-size", maxSize, "total size bound (default 6)");
    enumerate->add_option("--r0-max", r0Max, "cuspidal rank bound (default 3)");
    enumerate->add_option("--covers", coversSpec, "cover ranges, e.g. \"KP:n<=4,a in -1..1;S:n<=6\"");
    enumerate->add_option("--check", checkList, "comma-separated checks (default all)");
    CLI::App* selftest = app.add_subcommand("selftest", "run the built-in verification battery");
    add_format(selftest);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }

    try {
        CommandResult res;
        if (lambda->parsed() || wf->parsed() || generic->parsed() || whdim->parsed() ||
            derive->parsed() || bvcheck->parsed() || semiwh->parsed()) {
            covseg::Session s = covseg::parse_session(read_input(file));
            if (lambda->parsed()) res = cmd_lambda(s, format, false);
            else if (wf->parsed()) res = cmd_lambda(s, format, true);
            else if (generic->parsed()) res = cmd_generic(s, format);
            else if (whdim->parsed()) res = cmd_whdim(s, format);
            else if (derive->parsed()) res = cmd_derive(s, format, k, side);
            else if (bvcheck->parsed()) res = cmd_bvcheck(s, format);
            else res = cmd_semiwh(s, format, lamStr);
        } else if (enumerate->parsed()) {
            res = cmd_enumerate(format, maxSize, r0Max, coversSpec, checkList);
        } else {
            res = cmd_selftest(format);
        }
        write_output(out, res.text);
        return res.exit_code;
    } catch (const covseg::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const covseg::IntegrityError& e) {
        std::cerr << "integrity error: " << e.what() << "\n";
        return 2;
    } catch (const covseg::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
