// twr: command-line front end over the twroots C API
#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <future>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "twroots.h"

using json = nlohmann::json;

namespace {

enum Exit { kPass = 0, kFail = 1, kUsage = 2, kBound = 3 };

int exit_for(int code) {
    switch (code) {
        case TWR_OK: return kPass;
        case TWR_ERR_PARSE:
        case TWR_ERR_INVALID:
        case TWR_ERR_NULL: return kUsage;
        case TWR_ERR_BOUND: return kBound;
        default: return kFail;
    }
}

std::string take(char* s) {
    std::string o = s ? s : "";
    twr_string_free(s);
    return o;
}

int fail_with(int code, const std::string& what) {
    std::cerr << "twr: " << what << ": " << twr_last_error() << "\n";
    return exit_for(code);
}

struct Handle {
    twr_instance* p = nullptr;
    ~Handle() { twr_instance_free(p); }
};

struct Range {
    int lo = 0, hi = -1;
    bool set() const { return hi >= lo; }
};

Range parse_range(const std::string& s) {
    Range r;
    auto dots = s.find("..");
    try {
        if (dots == std::string::npos) {
            r.lo = r.hi = std::stoi(s);
        } else {
            r.lo = std::stoi(s.substr(0, dots));
            r.hi = std::stoi(s.substr(dots + 2));
        }
    } catch (...) {
        throw CLI::ValidationError("range", "expected a..b, got '" + s + "'");
    }
    if (r.hi < r.lo) throw CLI::ValidationError("range", "empty range '" + s + "'");
    return r;
}

int apply_env_limits() {
    auto num = [](const char* name, unsigned long long& out) {
        const char* v = std::getenv(name);
        if (!v || !*v) return true;
        char* end = nullptr;
        out = std::strtoull(v, &end, 10);
        if (*end || out == 0) {
            std::cerr << "twr: " << name << " must be a positive integer\n";
            return false;
        }
        return true;
    };
    unsigned long long g = 0, d = 0;
    if (!num("TWR_MAX_GROUP", g) || !num("TWR_MAX_DIM", d)) return kUsage;
    if (d > 100000) d = 100000;
    return twr_set_limits(g, static_cast<int>(d)) == TWR_OK ? kPass : kUsage;
}

int cmd_compute(const std::string& desc, bool as_json, bool timing) {
    Handle h;
    int rc = twr_instance_new(desc.c_str(), &h.p);
    if (rc) return fail_with(rc, desc);
    twr_report* rep = nullptr;
    rc = twr_compute(h.p, &rep);
    if (rc) return fail_with(rc, desc);
    char* s = nullptr;
    if (as_json) {
        twr_report_json(rep, &s);
        auto txt = take(s);
        if (timing) {
            auto j = json::parse(txt);
            j["timing_ms"] = twr_report_millis(rep);
            txt = j.dump(2) + "\n";
        }
        std::cout << txt;
    } else {
        twr_report_text(rep, &s);
        std::cout << take(s);
        if (timing) std::cout << "  time       " << twr_report_millis(rep) << " ms\n";
    }
    int st = twr_report_status(rep);
    twr_report_free(rep);
    if (st != TWR_PASS) std::cerr << "twr: " << desc << ": checks failed\n";
    return st == TWR_PASS ? kPass : kFail;
}

struct VerifyOut {
    std::string desc;
    int rc = TWR_OK;
    std::string err;
    int status = TWR_PASS;
    json result;
};

VerifyOut verify_one(const std::string& th, const std::string& desc) {
    VerifyOut o;
    o.desc = desc;
    Handle h;
    o.rc = twr_instance_new(desc.c_str(), &h.p);
    if (o.rc == TWR_OK) {
        char* s = nullptr;
        o.rc = twr_verify(h.p, th.c_str(), &o.status, &s);
        if (o.rc == TWR_OK) o.result = json::parse(take(s));
    }
    if (o.rc) o.err = twr_last_error();
    return o;
}

int cmd_verify(const std::string& th, std::vector<std::string> descs, bool as_json, int jobs) {
    std::string ids = std::string(" ") + twr_theorems() + " ";
    if (ids.find(" " + th + " ") == std::string::npos) {
        std::cerr << "twr: unknown theorem '" << th << "' (one of:" << ids << ")\n";
        return kUsage;
    }
    std::sort(descs.begin(), descs.end());
    std::vector<VerifyOut> outs(descs.size());
    size_t next = 0;
    jobs = std::max(1, jobs);
    while (next < descs.size()) {
        std::vector<std::future<VerifyOut>> fs;
        size_t start = next;
        for (int k = 0; k < jobs && next < descs.size(); ++k, ++next)
            fs.push_back(std::async(std::launch::async, verify_one, th, descs[next]));
        for (size_t k = 0; k < fs.size(); ++k) outs[start + k] = fs[k].get();
    }

    int worst = kPass;
    int pass = 0, fail = 0, skip = 0, err = 0;
    json all = json::array();
    for (auto& o : outs) {
        if (o.rc) {
            ++err;
            std::cerr << "twr: " << o.desc << ": " << o.err << "\n";
            int e = exit_for(o.rc);
            if (worst == kPass || (worst == kBound && e != kBound)) worst = e;
            all.push_back({{"descriptor", o.desc}, {"theorem", th}, {"status", "error"}, {"error", o.err}});
            continue;
        }
        if (o.status == TWR_FAIL) {
            ++fail;
            if (worst != kUsage) worst = kFail;
        } else if (o.status == TWR_SKIP) {
            ++skip;
        } else {
            ++pass;
        }
        all.push_back(o.result);
        if (as_json) continue;
        auto& r = o.result;
        std::string tag = o.status == TWR_PASS ? "pass" : o.status == TWR_SKIP ? "skip" : "FAIL";
        std::cout << tag << "  " << th << "  " << r["descriptor"].get<std::string>() << "  (" << r["checks"].size()
                  << " checks)\n";
        for (auto& c : r["checks"])
            if (!c["pass"].get<bool>())
                std::cout << "      fail " << c["name"].get<std::string>() << ": " << c.value("witness", std::string())
                          << "\n";
        for (auto& s : r["skipped"]) std::cout << "      skip " << s.get<std::string>() << "\n";
    }
    if (as_json) std::cout << all.dump(2) << "\n";
    else
        std::cout << th << ": " << pass << " pass, " << fail << " fail, " << skip << " skipped, " << err << " errors\n";
    return worst;
}

int cmd_table1(const std::string& fam, Range n, Range m, Range k, Range s0, Range s1, int max_n, bool as_json) {
    struct Tuple {
        int a, b, c;
    };
    std::vector<Tuple> rows;
    if (fam == "pu") {
        if (!n.set()) {
            std::cerr << "twr: table1 pu needs --n\n";
            return kUsage;
        }
        if (n.lo < 2) {
            std::cerr << "twr: n must be >= 2\n";
            return kUsage;
        }
        for (int a = n.lo; a <= n.hi; ++a)
            for (int b = 1; b <= a; ++b)
                if (a % b == 0 && (!m.set() || (b >= m.lo && b <= m.hi))) rows.push_back({a, b, 0});
    } else if (fam == "po" || fam == "psp" || fam == "autsu") {
        if (!k.set()) k = {0, 2};
        if (!s0.set()) s0 = {0, 2};
        if (!s1.set()) s1 = {1, 4};
        if (k.lo < 0 || s0.lo < 0 || s1.lo < 1) {
            std::cerr << "twr: need k >= 0, s0 >= 0, s1 >= 1\n";
            return kUsage;
        }
        int lo_n = fam == "po" ? 5 : fam == "autsu" ? 3 : 1;
        for (int a = k.lo; a <= k.hi; ++a)
            for (int c = s1.lo; c <= s1.hi; ++c)
                for (int b = s0.lo; b <= s0.hi; ++b) {
                    long long amb = (1LL << a) * (b + 2 * c);
                    if (amb > max_n || amb < lo_n) continue;
                    if (fam == "psp" && a == 0 && b > 0) continue;
                    rows.push_back({a, b, c});
                }
    } else {
        std::cerr << "twr: table1 families are pu, po, psp, autsu\n";
        return kUsage;
    }
    if (rows.empty()) {
        std::cerr << "twr: no table rows in range\n";
        return kUsage;
    }
    int worst = kPass, bad = 0;
    json all = json::array();
    for (auto& t : rows) {
        int match = 0;
        char* s = nullptr;
        int rc = twr_table1_row(fam.c_str(), t.a, t.b, t.c, &match, &s);
        if (rc) {
            int e = fail_with(rc, fam + " row");
            worst = std::max(worst, e);
            continue;
        }
        auto j = json::parse(take(s));
        all.push_back(j);
        if (!match) {
            ++bad;
            worst = std::max(worst, static_cast<int>(kFail));
        }
        if (as_json) continue;
        auto mults = [](const json& m) {
            std::string o;
            for (auto& [key, v] : m.items()) o += (o.empty() ? "" : " ") + key + "=" + std::to_string(v.get<long long>());
            return o.empty() ? std::string("-") : o;
        };
        std::cout << (match ? "ok    " : "DIFF  ") << j["descriptor"].get<std::string>() << "  "
                  << j["computed"]["type"].get<std::string>() << " [" << mults(j["computed"]["mult"]) << "]";
        if (!match)
            std::cout << "  expected " << j["expected"]["type"].get<std::string>() << " ["
                      << mults(j["expected"]["mult"]) << "]  " << j["diff"].get<std::string>();
        std::cout << "\n";
    }
    if (as_json) std::cout << all.dump(2) << "\n";
    else std::cout << fam << ": " << all.size() - bad << "/" << all.size() << " rows match\n";
    return worst;
}

int cmd_list(bool as_json) {
    char* s = nullptr;
    int rc = twr_list(&s);
    if (rc) return fail_with(rc, "list");
    auto j = json::parse(take(s));
    if (as_json) {
        std::cout << j.dump(2) << "\n";
        return kPass;
    }
    for (auto& d : j) std::cout << d.get<std::string>() << "\n";
    std::cout << "theorems: " << twr_theorems() << "\n";
    return kPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"twisted root systems of abelian subgroups of compact Lie groups"};
    app.require_subcommand(1);

    std::string desc, th, fam;
    bool as_json = false, timing = false, suite = false;
    int jobs = 1, max_n = 16;
    std::string rn, rm, rk, rs0, rs1;

    auto* c = app.add_subcommand("compute", "full report for one instance");
    c->add_option("descriptor", desc, "instance, e.g. pu:n=6,m=3,parts=2")->required();
    c->add_flag("--json", as_json, "JSON on stdout");
    c->add_flag("--timing", timing, "add wall time (JSON: timing_ms)");

    auto* v = app.add_subcommand("verify", "check one theorem on an instance or the registry");
    v->add_option("theorem", th, twr_theorems())->required();
    v->add_option("descriptor", desc, "instance");
    v->add_flag("--suite", suite, "run on every registry instance");
    v->add_flag("--json", as_json, "JSON on stdout");
    v->add_option("-j,--jobs", jobs, "instances run in parallel")->check(CLI::Range(1, 256));

    auto* t = app.add_subcommand("table1", "compare computed rows with the classification table");
    t->add_option("family", fam, "pu, po, psp or autsu")->required();
    t->add_option("--n", rn, "pu: n range a..b");
    t->add_option("--m", rm, "pu: m range");
    t->add_option("--k", rk, "k range (default 0..2)");
    t->add_option("--s0", rs0, "s0 range (default 0..2)");
    t->add_option("--s1", rs1, "s1 range (default 1..4)");
    t->add_option("--max-n", max_n, "largest ambient n")->check(CLI::Range(1, 64));
    t->add_flag("--json", as_json, "JSON on stdout");

    auto* l = app.add_subcommand("list", "registry instances and theorem ids");
    l->add_flag("--json", as_json, "JSON on stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int r = app.exit(e);
        return r == 0 ? kPass : kUsage;
    }
    if (int e = apply_env_limits()) return e;

    try {
        if (*c) return cmd_compute(desc, as_json, timing);
        if (*v) {
            if (suite == !desc.empty()) {
                std::cerr << "twr: verify needs exactly one of a descriptor or --suite\n";
                return kUsage;
            }
            std::vector<std::string> ds;
            if (suite) {
                char* s = nullptr;
                if (int rc = twr_list(&s)) return fail_with(rc, "list");
                ds = json::parse(take(s)).get<std::vector<std::string>>();
            } else {
                ds = {desc};
            }
            return cmd_verify(th, ds, as_json, jobs);
        }
        if (*t) {
            auto opt = [](const std::string& s) { return s.empty() ? Range{} : parse_range(s); };
            return cmd_table1(fam, opt(rn), opt(rm), opt(rk), opt(rs0), opt(rs1), max_n, as_json);
        }
        if (*l) return cmd_list(as_json);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "twr: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
