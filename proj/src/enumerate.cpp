#include "covseg/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace covseg {

std::vector<CuspidalDatum> canonical_cuspidals(const CoverSpec& c, Int r0_max) {
    if (r0_max < 1) throw DomainError("r0 bound must be >= 1");
    std::vector<CuspidalDatum> lines;
    for (Int r0 = 1; r0 <= r0_max; ++r0)
        for (Int l = 1; l <= c.n; ++l) {
            if (c.n % l != 0) continue;
            if (c.family == Family::KP && r0 % l != 0) continue;
            lines.push_back(CuspidalDatum{"p" + std::to_string(r0) + "l" + std::to_string(l), r0, l});
        }
    return lines;
}

namespace {

struct Item {
    size_t line;
    Int len;
    Int weight;
};

void walk(const std::vector<CuspidalDatum>& lines, const std::vector<Item>& items, size_t i,
          Int remaining, std::vector<Segment>& acc, const std::function<void(const Multisegment&)>& fn) {
    if (i == items.size()) {
        if (!acc.empty()) fn(Multisegment(acc));
        return;
    }
    const Item& it = items[i];
    size_t mark = acc.size();
    for (Int used = 0; used <= remaining; used += it.weight) {
        walk(lines, items, i + 1, remaining - used, acc, fn);
        acc.emplace_back(lines[it.line], 0, it.len - 1);
    }
    acc.resize(mark);
}

} // namespace

void for_each_multisegment(const std::vector<CuspidalDatum>& lines, Int max_size,
                           const std::function<void(const Multisegment&)>& fn) {
    if (max_size < 0) throw DomainError("max_size must be >= 0");
    std::vector<Item> items;
    for (size_t i = 0; i < lines.size(); ++i)
        for (Int len = 1; checked_mul(len, lines[i].r0) <= max_size; ++len)
            items.push_back(Item{i, len, len * lines[i].r0});
    std::vector<Segment> acc;
    walk(lines, items, 0, max_size, acc, fn);
}

namespace {

void walk_partitions(Int remaining, Int cap, std::vector<Int>& acc,
                     const std::function<void(const Partition&)>& fn) {
    if (remaining == 0) {
        fn(Partition(acc));
        return;
    }
    for (Int part = std::min(cap, remaining); part >= 1; --part) {
        acc.push_back(part);
        walk_partitions(remaining - part, part, acc, fn);
        acc.pop_back();
    }
}

} // namespace

void for_each_partition_of(Int n, const std::function<void(const Partition&)>& fn) {
    if (n < 0) throw DomainError("partitions of negative integers do not exist");
    std::vector<Int> acc;
    walk_partitions(n, n, acc, fn);
}

const std::set<std::string>& known_checks() {
    static const std::set<std::string> names{"lambda", "generic", "bv", "integrality", "chain", "oracle"};
    return names;
}

namespace {

struct CoverReport {
    Int instances = 0;
    std::map<std::string, Int> checked;
    std::vector<std::string> failures;
};

std::string fail_msg(const CoverSpec& c, const Multisegment& m, const std::string& check,
                     const std::string& detail) {
    return c.str() + " | " + m.str() + " | " + check + ": " + detail;
}

void check_lambda(const Multisegment& m, const CoverSpec& c) {
    lambda_of(m, c);  // well-formedness is asserted internally
}

void check_generic(const Multisegment& m, const CoverSpec& c) {
    bool one_part = lambda_of(m, c).height() == 1;
    if (is_generic(m, c) != one_part)
        throw IntegrityError("genericity disagrees with the part count of lambda");
}

void check_bv(const Multisegment& m, const CoverSpec& c) {
    BvConsistency bc = bv_consistency(m, c);
    if (!bc.equal)
        throw IntegrityError("lambda " + bc.lambda.str() + " != bv " + bc.bv.str() +
                             " of orbit " + bc.orbit.str());
}

void check_integrality(const Multisegment& m, const CoverSpec& c) {
    std::vector<DimBlock> blocks;
    for (const Segment& d : m.segments()) {
        blocks.push_back(DimBlock{wh_dim_Z(d, c), d.size()});
        wh_dim_L(d, c);
        for (Int k = 0; k <= d.size(); k += d.rho.r0) {
            derivative_Z(d, k, c);
            derivative_L(d, k, c);
        }
        Int top = checked_mul(d.rho.r0, std::min(d.length(), n_rho(d.rho, c)));
        if (derivative_Z(d, top, c).scalar < 1)
            throw IntegrityError("vanishing top derivative of " + d.str());
    }
    c_m(m, c);
    wh_dim_product(blocks, c);
}

void check_chain(const Multisegment& m, const CoverSpec& c) {
    Partition lam = lambda_of(m, c);
    if (m.segments().size() == 1) {
        Multisegment cur = m;
        for (size_t step = 0; !cur.empty(); ++step) {
            const Segment& d = cur.segments().front();
            Int top = checked_mul(d.rho.r0, std::min(d.length(), n_rho(d.rho, c)));
            if (top != lam.parts().at(step))
                throw IntegrityError("chain degree disagrees with lambda at step " + std::to_string(step));
            DerivativeResult res = derivative_Z(d, top, c);
            Multisegment next = multisegment_minus(cur, c);
            if (res.scalar != c_m(cur, c))
                throw IntegrityError("top scalar disagrees with the multiplicity at step " + std::to_string(step));
            auto it = res.value.terms.find(next);
            if (res.value.terms.size() != 1 || it == res.value.terms.end() || it->second != res.scalar)
                throw IntegrityError("top derivative term is not the contraction at step " + std::to_string(step));
            cur = next;
        }
    }
    bool saturated = true;
    for (const Segment& d : m.segments())
        if (d.length() < n_rho(d.rho, c)) saturated = false;
    if (saturated && c_m(m, c) != 1)
        throw IntegrityError("multiplicity is not 1 despite every length >= n(rho)");
}

/* n = 1 reduction: the derivative chain must reproduce the transpose of the
   length multiset, each length counted r0 times. Computed directly from
   column counts, independently of the library's transpose. */
void check_oracle(const Multisegment& m, const CoverSpec& c) {
    std::vector<Int> expect;
    for (const Segment& d : m.segments()) {
        if (static_cast<size_t>(d.length()) > expect.size()) expect.resize(d.length(), 0);
        for (Int t = 0; t < d.length(); ++t) expect[t] += d.rho.r0;
    }
    Partition lam = lambda_of(m, c);
    if (lam.parts() != expect)
        throw IntegrityError("lambda " + lam.str() + " differs from the n=1 transpose oracle");
}

bool check_applies(const std::string& name, const CoverSpec& c) {
    if (name == "bv" || name == "integrality") return c.family == Family::KP;
    if (name == "oracle") return c.n == 1;
    return true;
}

void run_check(const std::string& name, const Multisegment& m, const CoverSpec& c) {
    if (name == "lambda") check_lambda(m, c);
    else if (name == "generic") check_generic(m, c);
    else if (name == "bv") check_bv(m, c);
    else if (name == "integrality") check_integrality(m, c);
    else if (name == "chain") check_chain(m, c);
    else if (name == "oracle") check_oracle(m, c);
    else throw DomainError("unknown check '" + name + "'");
}

void validate_options(const SweepOptions& opts) {
    if (opts.r0_max < 1) throw DomainError("r0 bound must be >= 1");
    if (opts.max_size < 0) throw DomainError("max_size must be >= 0");
    if (opts.covers.empty()) throw DomainError("sweep needs at least one cover");
    for (const std::string& name : opts.checks)
        if (!known_checks().count(name)) throw DomainError("unknown check '" + name + "'");
}

CoverReport sweep_cover(const CoverSpec& c, const SweepOptions& opts) {
    CoverReport rep;
    std::vector<std::string> checks;
    for (const std::string& name : opts.checks.empty() ? known_checks() : opts.checks)
        if (check_applies(name, c)) checks.push_back(name);
    auto lines = canonical_cuspidals(c, opts.r0_max);
    for_each_multisegment(lines, opts.max_size, [&](const Multisegment& m) {
        ++rep.instances;
        for (const std::string& name : checks) {
            ++rep.checked[name];
            try {
                run_check(name, m, c);
            } catch (const std::exception& e) {
                rep.failures.push_back(fail_msg(c, m, name, e.what()));
            }
        }
    });
    return rep;
}

} // namespace

SweepSummary run_sweep(const SweepOptions& opts) {
    validate_options(opts);
    SweepSummary sum;
    sum.covers = static_cast<Int>(opts.covers.size());
    std::vector<CoverReport> reports(opts.covers.size());
    int threads = std::max(1, std::min<int>(opts.threads, static_cast<int>(opts.covers.size())));
    if (threads <= 1) {
        for (size_t i = 0; i < opts.covers.size(); ++i) reports[i] = sweep_cover(opts.covers[i], opts);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back([&] {
                for (size_t i = next.fetch_add(1); i < opts.covers.size(); i = next.fetch_add(1))
                    reports[i] = sweep_cover(opts.covers[i], opts);
            });
        for (auto& th : pool) th.join();
    }
    for (const CoverReport& rep : reports) {
        sum.instances += rep.instances;
        for (const auto& [name, count] : rep.checked) sum.checked[name] += count;
        sum.failure_count += static_cast<Int>(rep.failures.size());
        for (const std::string& f : rep.failures)
            if (sum.failures.size() < opts.failure_cap) sum.failures.push_back(f);
    }
    return sum;
}

Int wh_dim_known_cases(const Multisegment& m, const CoverSpec& c) {
    if (m.empty()) return 1;
    if (m.segments().size() == 1) return wh_dim_Z(m.segments().front(), c);
    if (!is_generic(m, c)) return 0;
    for (const Segment& d : m.segments())
        if (d.length() != n_rho(d.rho, c)) return -1;
    return 1;
}

SweepSummary run_sweep_rows(const SweepOptions& opts,
                            const std::function<void(const SweepRow&)>& emit) {
    validate_options(opts);
    SweepSummary sum;
    sum.covers = static_cast<Int>(opts.covers.size());
    for (const CoverSpec& c : opts.covers) {
        CoverReport rep = sweep_cover(c, opts);
        sum.instances += rep.instances;
        for (const auto& [name, count] : rep.checked) sum.checked[name] += count;
        sum.failure_count += static_cast<Int>(rep.failures.size());
        for (const std::string& f : rep.failures)
            if (sum.failures.size() < opts.failure_cap) sum.failures.push_back(f);
        auto lines = canonical_cuspidals(c, opts.r0_max);
        for_each_multisegment(lines, opts.max_size, [&](const Multisegment& m) {
            SweepRow row;
            row.multisegment = m.str();
            row.cover = c;
            try {
                row.lambda = lambda_of(m, c).str();
                row.generic = is_generic(m, c);
                if (c.family == Family::KP) {
                    BvConsistency bc = bv_consistency(m, c);
                    row.bv = bc.bv.str();
                    row.equal = bc.equal ? "true" : "false";
                }
                Int dim = wh_dim_known_cases(m, c);
                row.whdimZ = dim < 0 ? "unknown" : std::to_string(dim);
            } catch (const std::exception& e) {
                row.lambda = std::string("error: ") + e.what();
            }
            emit(row);
        });
    }
    return sum;
}

namespace {

std::string strip(const std::string& s) {
    size_t b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

Int parse_int(const std::string& s, const std::string& what) {
    try {
        size_t used = 0;
        Int v = std::stoll(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw DomainError("bad " + what + " in cover ranges: '" + s + "'");
    }
}

} // namespace

std::vector<CoverSpec> parse_cover_ranges(const std::string& text) {
    std::vector<CoverSpec> covers;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t semi = text.find(';', pos);
        std::string group = strip(text.substr(pos, semi == std::string::npos ? std::string::npos : semi - pos));
        pos = semi == std::string::npos ? text.size() + 1 : semi + 1;
        if (group.empty()) continue;
        size_t colon = group.find(':');
        std::string fam = strip(colon == std::string::npos ? group : group.substr(0, colon));
        if (fam != "KP" && fam != "S")
            throw DomainError("cover ranges: unknown family '" + fam + "'");
        Int n_max = 6, a_lo = -2, a_hi = 2;
        if (colon != std::string::npos) {
            std::string rest = group.substr(colon + 1);
            size_t cpos = 0;
            while (cpos <= rest.size()) {
                size_t comma = rest.find(',', cpos);
                std::string item = strip(rest.substr(cpos, comma == std::string::npos ? std::string::npos : comma - cpos));
                cpos = comma == std::string::npos ? rest.size() + 1 : comma + 1;
                if (item.empty()) continue;
                if (item.rfind("n<=", 0) == 0) {
                    n_max = parse_int(strip(item.substr(3)), "n bound");
                } else if (item.rfind("a in ", 0) == 0 && fam == "KP") {
                    std::string range = strip(item.substr(5));
                    size_t dots = range.find("..");
                    if (dots == std::string::npos)
                        throw DomainError("cover ranges: expected 'a in LO..HI' in '" + item + "'");
                    a_lo = parse_int(strip(range.substr(0, dots)), "a bound");
                    a_hi = parse_int(strip(range.substr(dots + 2)), "a bound");
                } else {
                    throw DomainError("cover ranges: unknown constraint '" + item + "'");
                }
            }
        }
        if (n_max < 1) throw DomainError("cover ranges: need n<=N with N >= 1");
        if (a_lo > a_hi) throw DomainError("cover ranges: empty a range");
        for (Int n = 1; n <= n_max; ++n) {
            if (fam == "S") {
                covers.push_back(make_s(n));
            } else {
                for (Int a = a_lo; a <= a_hi; ++a) covers.push_back(make_kp(n, a));
            }
        }
    }
    if (covers.empty()) throw DomainError("cover ranges: no covers selected");
    return covers;
}

std::string default_cover_ranges() { return "KP:n<=6,a in -2..2;S:n<=6"; }

} // namespace covseg
