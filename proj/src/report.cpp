#include "twr/report.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>

namespace twr {

namespace {

json vec_json(const IntVec& v) {
    json a = json::array();
    for (Int x : v) a.push_back(x);
    return a;
}

json checks_json(const CheckReport& r) {
    json a = json::array();
    for (auto& it : r.items) {
        json o = {{"name", it.name}, {"pass", it.pass}};
        if (!it.witness.empty()) o["witness"] = it.witness;
        a.push_back(o);
    }
    return a;
}

size_t env_size(const char* name, size_t dflt) {
    const char* v = std::getenv(name);
    if (!v || !*v) return dflt;
    char* end = nullptr;
    unsigned long long x = std::strtoull(v, &end, 10);
    if (*end || x == 0) throw Error(kErrParse, std::string(name) + " must be a positive integer");
    return static_cast<size_t>(x);
}

// pu:n=N,m=1,parts=N has an explicit g' model
const Instance* gprime_model(const Instance& I, Instance& store) {
    if (I.family != "pu" || I.params.size() != 3) return nullptr;
    if (I.params[1].second != "1" || I.params[2].second != I.params[0].second) return nullptr;
    store = gprime_instance(std::stoi(I.params[0].second));
    return &store;
}

void add_dims(CheckReport& r, const DimReport& d) {
    for (auto& it : d.items)
        r.add(it.name, it.lhs == it.rhs, std::to_string(it.lhs) + " vs " + std::to_string(it.rhs));
}

void add_yz(CheckReport& r, const TwistedRootSystem& S) {
    for (auto& a : S.infinite_roots()) {
        auto yz = yz_decomposition(a, S);
        for (auto& it : yz.checks.items) {
            auto* have = r.find(it.name);
            if (!have) r.add(it.name, it.pass, it.pass ? "" : char_str(a) + ": " + it.witness);
            else if (!it.pass && have->pass) {
                for (auto& x : r.items)
                    if (x.name == it.name) x = {it.name, false, char_str(a) + ": " + it.witness};
            }
        }
    }
}

void check_split(CheckReport& r, const IdealSplit& sp) {
    r.add("g = g_inf + g_f", sp.dim_inf + sp.dim_f == sp.dim_g,
          std::to_string(sp.dim_inf) + " + " + std::to_string(sp.dim_f) + " vs " + std::to_string(sp.dim_g));
    r.add("g_inf n g_f = 0", sp.direct, sp.witness);
    r.add("g_inf is an A-ideal", sp.ideal, sp.witness);
}

std::string shape_of(const Instance& I, const IntVec& v) { return root_shape(I.family, I.std_coords(v)); }

}  // namespace

Limits limits_from_env() {
    Limits l;
    l.group_bound = env_size("TWR_MAX_GROUP", l.group_bound);
    l.algebra_dim = static_cast<int>(env_size("TWR_MAX_DIM", static_cast<size_t>(l.algebra_dim)));
    return l;
}

json char_json(const Character& c) { return {{"inf", vec_json(c.inf)}, {"fin", vec_json(c.fin)}}; }

std::string dump(const json& j) { return j.dump(2, ' ', false, json::error_handler_t::replace) + "\n"; }

json report_json(const Instance& I, const Limits& lim) {
    auto S = assemble(I);
    const auto& A = S.A;
    json r;
    r["schema"] = 1;
    r["descriptor"] = I.descriptor();
    r["family"] = I.family;
    r["group"] = {{"rank", A.rank}, {"torsion", vec_json(A.inv)}, {"finite_order", A.finite_order()}};
    r["algebra"] = {{"name", I.alg.name}, {"dim", I.alg.dim()}, {"star", I.table.star}, {"maximal", I.maximal}};

    json inf = json::array(), fin = json::array();
    for (auto& [c, m] : S.roots) {
        if (!c.is_finite()) {
            inf.push_back({{"char", char_json(c)}, {"mult", m}});
            continue;
        }
        auto& d = S.fin.at(c);
        json cg = {{"predicted", d.predicted}, {"asserted", d.asserted}};
        cg["explicit"] = d.group ? json(d.group->size()) : json(nullptr);
        fin.push_back({{"char", char_json(c)}, {"mult", m}, {"order", d.order}, {"coroot_group", cg}});
    }
    r["roots"] = {{"infinite_count", inf.size()}, {"finite_count", fin.size()}, {"infinite", inf}, {"finite", fin}};

    CheckReport checks;
    std::vector<std::string> skipped;
    checks.merge(validate_axioms(S), "axioms: ");

    // R' type and multiplicities by length
    std::map<IntVec, std::string> cls;
    json rp = {{"type", "empty"}, {"components", json::array()}};
    if (!S.infinite_roots().empty()) {
        auto R = restricted_system(S);
        checks.merge(check_restricted(S), "R': ");
        try {
            auto comps = classify_type(R);
            rp["type"] = type_label(comps);
            for (auto& c : comps) {
                json mc;
                for (auto& [k, ms] : c.mult_by_class) mc[k] = std::vector<int>(ms.begin(), ms.end());
                rp["components"].push_back({{"type", c.label()}, {"mult", mc}});
                for (auto& [v, k] : c.length_class) cls[v] = k;
            }
        } catch (const Error& e) {
            if (e.code != kErrCheck) throw;
            checks.add("R': classified", false, e.what());
        }
    }
    r["restricted"] = rp;

    // strips grouped by the length class of their restriction
    json st = json::object();
    std::map<IntVec, bool> seen;
    for (auto& a : S.infinite_roots()) {
        if (seen[a.inf]) continue;
        seen[a.inf] = true;
        auto s = strip(a, S);
        std::string k = cls.count(a.inf) ? cls[a.inf] : "?";
        auto& e = st[k];
        if (e.is_null()) e = {{"count", 0}, {"size", json::array()}, {"r0a", json::array()}, {"group", true}};
        e["count"] = e["count"].get<int>() + 1;
        auto put = [](json& arr, size_t x) {
            for (auto& y : arr)
                if (y.get<size_t>() == x) return;
            arr.push_back(x);
        };
        put(e["size"], s.R1.size());
        put(e["r0a"], s.R0a.size());
        e["group"] = e["group"].get<bool>() && is_subgroup(A, s.R0a);
    }
    for (auto& [k, e] : st.items()) {
        std::vector<size_t> a = e["size"], b = e["r0a"];
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        e["size"] = a;
        e["r0a"] = b;
    }
    r["strips"] = st;
    checks.merge(strip_group_checks(S), "strips: ");
    if (I.table.star) {
        CheckReport yz;
        add_yz(yz, S);
        checks.merge(yz, "strips: ");
        auto dims = dim_identities(S, I.table, I);
        CheckReport d;
        add_dims(d, dims);
        checks.merge(d, "dims: ");
    } else {
        skipped.push_back("strips: Y/Z and dimension identities need a (*)-subgroup");
    }

    auto W = weyl_groups(S, &I, lim.group_bound);
    json w = {{"small", W.small.order()},   {"tiny", W.tiny.order()},    {"W0", W.filt.W0.order()},
              {"W1", W.filt.W1.order()},    {"Wprime", W.filt.Wprime.order()}, {"Rprime", W.Rprime.order()},
              {"explicit_coroots", W.explicit_coroots}};
    // without every coroot group these are only reflection-generated subgroups
    if (!W.explicit_coroots)
        for (auto k : {"small", "W0", "W1", "Wprime"}) w[k] = nullptr;
    w["f"] = W.explicit_coroots ? json(W.f.order()) : json(nullptr);
    w["middle"] = W.middle ? json(W.middle->order()) : json(nullptr);
    r["weyl"] = w;
    auto wr = verify_weyl_theorems(S, W);
    checks.merge(wr.checks, "weyl: ");
    for (auto& s : wr.skipped) skipped.push_back("weyl: " + s);

    if (I.alg.dim() <= lim.algebra_dim) {
        auto sp = g_infinity_split(S, materialized_table(I), I.alg);
        CheckReport c;
        check_split(c, sp);
        checks.merge(c, "split: ");
        r["split"] = {{"dim_g", sp.dim_g}, {"dim_inf", sp.dim_inf}, {"dim_f", sp.dim_f}};
        if (sp.g_is_ginf()) {
            auto as = a_simplicity(S, I, sp);
            checks.add("split: A-simple iff R' irreducible", as.agree(), as.witness);
            r["split"]["a_simple"] = as.a_simple;
            auto t7 = strip_equals_R0(S, sp);
            checks.merge(t7.checks, "strips: ");
            for (auto& s : t7.skipped) skipped.push_back("strips: " + s);
        }
    } else {
        skipped.push_back("split: dim g above TWR_MAX_DIM");
    }

    r["checks"] = checks_json(checks);
    r["skipped"] = skipped;
    r["status"] = checks.ok() ? "pass" : "fail";
    return r;
}

std::string report_text(const json& r) {
    std::ostringstream o;
    auto& g = r["group"];
    o << r["descriptor"].get<std::string>() << "\n";
    o << "  A          T^" << g["rank"].get<int>();
    for (auto& d : g["torsion"]) o << " x Z/" << d.get<Int>();
    o << "\n";
    o << "  g          " << r["algebra"]["name"].get<std::string>() << ", dim " << r["algebra"]["dim"].get<int>() << "\n";
    o << "  roots      " << r["roots"]["infinite_count"].get<size_t>() << " infinite, "
      << r["roots"]["finite_count"].get<size_t>() << " finite\n";
    std::map<Int, int> by_order;
    for (auto& f : r["roots"]["finite"]) by_order[f["order"].get<Int>()]++;
    for (auto& [n, c] : by_order) o << "             order " << n << ": " << c << "\n";
    o << "  R'         " << r["restricted"]["type"].get<std::string>() << "\n";
    for (auto& [k, e] : r["strips"].items()) {
        o << "  strip " << k << "   mult";
        for (auto& x : e["size"]) o << " " << x.get<size_t>();
        o << ", |R_0a|";
        for (auto& x : e["r0a"]) o << " " << x.get<size_t>();
        o << (e["group"].get<bool>() ? ", group" : ", not a group") << "\n";
    }
    auto& w = r["weyl"];
    auto ord = [](const json& x) { return x.is_null() ? std::string("-") : std::to_string(x.get<size_t>()); };
    o << "  W          small " << ord(w["small"]) << ", f " << ord(w["f"]) << ", tiny " << ord(w["tiny"]) << ", W0 "
      << ord(w["W0"]) << ", W1 " << ord(w["W1"]) << ", W' " << ord(w["Wprime"]) << "\n";
    int pass = 0, fail = 0;
    for (auto& c : r["checks"]) (c["pass"].get<bool>() ? pass : fail)++;
    o << "  checks     " << pass << " pass, " << fail << " fail, " << r["skipped"].size() << " skipped\n";
    for (auto& c : r["checks"])
        if (!c["pass"].get<bool>())
            o << "    FAIL " << c["name"].get<std::string>() << ": " << c.value("witness", std::string()) << "\n";
    for (auto& s : r["skipped"]) o << "    skip " << s.get<std::string>() << "\n";
    if (r.contains("timing_ms")) o << "  time       " << r["timing_ms"].get<Int>() << " ms\n";
    return o.str();
}

const std::vector<std::string>& theorem_ids() {
    static const std::vector<std::string> ids = {"T1",     "T2",     "T3",   "T5",     "T6",        "T7",
                                                 "vogan",  "pdecom", "strips", "axioms", "walpha-dim"};
    return ids;
}

VerifyResult verify(const std::string& th, const Instance& I, const Limits& lim) {
    VerifyResult v;
    v.theorem = th;
    v.descriptor = I.descriptor();
    if (std::find(theorem_ids().begin(), theorem_ids().end(), th) == theorem_ids().end())
        throw Error(kErrParse, "unknown theorem '" + th + "'");
    auto& C = v.checks;
    auto S = assemble(I);
    auto need_dim = [&]() {
        if (I.alg.dim() <= lim.algebra_dim) return true;
        v.skipped.push_back("dim g = " + std::to_string(I.alg.dim()) + " above TWR_MAX_DIM");
        return false;
    };

    if (th == "T1") {
        if (S.infinite_roots().empty()) v.skipped.push_back("no infinite roots");
        else C = check_restricted(S);
    } else if (th == "T2") {
        if (!I.theta) {
            v.skipped.push_back("hypothesis: A is not given as a symmetric subgroup");
        } else {
            C.merge(check_theta(I), "theta: ");
            C.merge(check_restricted(S), "R(G,A0): ");
        }
    } else if (th == "T3") {
        auto W = weyl_groups(S, &I, lim.group_bound);
        auto r = verify_weyl_theorems(S, W);
        if (W.explicit_coroots) {
            C = r.checks;
            v.skipped = r.skipped;
        } else {
            v.skipped.push_back("coroot groups outside the explicit oracle, W_f unknown");
        }
    } else if (th == "T5") {
        if (need_dim()) check_split(C, g_infinity_split(S, materialized_table(I), I.alg));
    } else if (th == "T6" || th == "T7") {
        if (need_dim()) {
            auto sp = g_infinity_split(S, materialized_table(I), I.alg);
            if (!sp.g_is_ginf()) {
                v.skipped.push_back("hypothesis: g != g_inf (" + std::to_string(sp.dim_f) + " dims in g_f)");
            } else if (th == "T6") {
                auto as = a_simplicity(S, I, sp);
                C.add(std::string("A-simple (") + (as.a_simple ? "yes" : "no") + ") iff R' irreducible (" +
                          (as.r_irreducible ? "yes" : "no") + ")",
                      as.agree(), as.witness);
            } else {
                auto r = strip_equals_R0(S, sp);
                C = r.checks;
                v.skipped = r.skipped;
            }
        }
    } else if (th == "vogan") {
        if (S.fin.empty()) v.skipped.push_back("no finite roots");
        for (auto& [l, d] : S.fin) {
            if (!d.group) continue;
            C.add("|R(" + char_str(l) + ")| = " + std::to_string(d.predicted), Int(d.group->size()) == d.predicted,
                  std::to_string(d.group->size()));
        }
        if (!S.fin.empty() && C.items.empty()) v.skipped.push_back("coroot groups outside the explicit oracle");
    } else if (th == "pdecom") {
        if (S.A.rank == 0) {
            bool br = I.alg.dim() <= lim.algebra_dim;
            auto t = br ? materialized_table(I) : I.table;
            auto p = prime_components(t, I, br ? &I.alg : nullptr);
            int sum = 0;
            for (auto& [q, d] : p.dim_gp) {
                sum += d;
                if (p.derived_dim_gp.at(q) >= 0)
                    C.add("g_(" + std::to_string(q) + ") perfect", p.derived_dim_gp.at(q) == d,
                          std::to_string(p.derived_dim_gp.at(q)) + " vs " + std::to_string(d));
            }
            C.add("dim g' = sum dim g_(p)", sum == p.dim_gprime, std::to_string(sum));
            C.add("g = sum M_I", p.eq5, p.witness);
            C.add("g^(m) = g^(m') + M'_(m)", p.eq6_ok, p.witness);
            if (p.orth_checked) C.add("[g_(p), g_(q)] = 0", p.orth, p.witness);
            Instance store;
            auto gw = gprime_weyl_equal(I, gprime_model(I, store));
            C.merge(gw.checks);
            for (auto& s : gw.skipped) v.skipped.push_back(s);
        } else {
            v.skipped.push_back("hypothesis: A is not finite");
        }
    } else if (th == "strips") {
        if (S.infinite_roots().empty()) v.skipped.push_back("no infinite roots");
        C = strip_group_checks(S);
        if (I.table.star) add_yz(C, S);
        else v.skipped.push_back("Y/Z conditions need a (*)-subgroup");
    } else if (th == "axioms") {
        C = validate_axioms(S);
    } else if (th == "walpha-dim") {
        auto d = dim_identities(S, I.table, I);
        if (d.applies) add_dims(C, d);
        else v.skipped.push_back("hypothesis: A is not a (*)-subgroup");
    }
    v.status = !C.ok() ? "fail" : C.items.empty() ? "skip" : "pass";
    return v;
}

json verify_json(const VerifyResult& v) {
    return {{"theorem", v.theorem}, {"descriptor", v.descriptor}, {"status", v.status},
            {"checks", checks_json(v.checks)}, {"skipped", v.skipped}};
}

RowData row_data(const Instance& I) {
    RowData d;
    auto S = assemble(I, {false});
    auto R = restricted_system(S);
    d.label = R.roots.empty() ? "empty" : type_label(classify_type(R));
    for (auto& [v, m] : R.mult) {
        auto sh = shape_of(I, v);
        if (d.mult.count(sh) && d.mult[sh] != m) d.mult[sh] = -1;
        else d.mult[sh] = m;
    }
    for (auto& a : S.infinite_roots()) {
        auto sh = shape_of(I, a.inf);
        bool g = is_subgroup(S.A, strip(a, S).R0a);
        d.group[sh] = d.group.count(sh) ? d.group[sh] && g : g;
    }
    return d;
}

Table1Line table1_line(const std::string& fam, int a, int b, int c) {
    Table1Line l;
    auto row = table_row(fam, a, b, c);
    if (!row) throw Error(kErrInvalid, "no table row for these parameters");
    l.expected = *row;
    std::string d = fam == "pu" ? "pu:n=" + std::to_string(a) + ",m=" + std::to_string(b)
                                : fam + ":k=" + std::to_string(a) + ",s0=" + std::to_string(b) +
                                      ",s1=" + std::to_string(c);
    auto I = make_instance(d);
    l.descriptor = I.descriptor();
    l.computed = row_data(I);
    std::ostringstream o;
    if (l.computed.label != l.expected.label) o << "type " << l.computed.label << " vs " << l.expected.label << "; ";
    std::set<std::string> shapes;
    for (auto& [k, m] : l.expected.mult) shapes.insert(k);
    for (auto& [k, m] : l.computed.mult) shapes.insert(k);
    for (auto& k : shapes) {
        Int got = l.computed.mult.count(k) ? l.computed.mult.at(k) : 0;
        Int want = l.expected.mult.count(k) ? l.expected.mult.at(k) : 0;
        if (got != want) o << k << " " << got << " vs " << want << "; ";
    }
    for (auto& k : l.expected.group)
        if (!l.computed.group.count(k) || !l.computed.group.at(k)) o << k << " strip not a group; ";
    l.diff = o.str();
    if (!l.diff.empty()) l.diff.resize(l.diff.size() - 2);
    l.match = l.diff.empty();
    return l;
}

json table1_json(const Table1Line& l) {
    json e = {{"type", l.expected.label}, {"mult", l.expected.mult},
              {"group", std::vector<std::string>(l.expected.group.begin(), l.expected.group.end())}};
    json c = {{"type", l.computed.label}, {"mult", l.computed.mult}, {"group", l.computed.group}};
    return {{"descriptor", l.descriptor}, {"expected", e}, {"computed", c}, {"match", l.match}, {"diff", l.diff}};
}

}  // namespace twr
