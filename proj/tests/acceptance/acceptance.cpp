// one line per acceptance criterion; exit status 1 when any criterion fails
#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "twr/cyclotomic.hpp"
#include "twr/report.hpp"

using namespace twr;

namespace {

struct Tally {
    int pass = 0, total = 0;
    std::vector<std::string> bad;
    void add(bool ok, const std::string& what) {
        ++total;
        if (ok) ++pass;
        else bad.push_back(what);
    }
    bool ok() const { return pass == total && total > 0; }
};

int failed = 0;

void line(int n, const std::string& title, const Tally& t, const std::string& extra = "") {
    std::ostringstream o;
    o << (t.ok() ? "PASS" : "FAIL") << "  criterion " << n << ": " << title << " (" << t.pass << "/" << t.total << ")";
    if (!extra.empty()) o << " " << extra;
    std::cout << o.str() << "\n";
    for (size_t i = 0; i < t.bad.size() && i < 8; ++i) std::cout << "        " << t.bad[i] << "\n";
    if (t.bad.size() > 8) std::cout << "        ... " << t.bad.size() - 8 << " more\n";
    if (!t.ok()) ++failed;
}

bool type_and_mult(const Table1Line& l) {
    if (l.computed.label != l.expected.label) return false;
    return l.computed.mult == l.expected.mult;
}

// --------------------------------------------------------------------------- 1, 2

void table_pu() {
    Tally t;
    for (int n = 2; n <= 8; ++n)
        for (int m = 1; m <= n; ++m) {
            if (n % m) continue;
            auto l = table1_line("pu", n, m, 0);
            // A_{m-1} with (n/m)^2, empty R' when m = 1
            std::string want = m == 1 ? "empty" : "A" + std::to_string(m - 1);
            bool ok = type_and_mult(l) && l.computed.label == want;
            if (m > 1) ok = ok && l.computed.mult.at("a") == Int(n / m) * (n / m);
            t.add(ok, l.descriptor + ": " + l.diff);
        }
    line(1, "PU rows, n <= 8", t);
}

void table_classical() {
    Tally t;
    int flag_only = 0;
    for (auto& d : table_descriptors(16)) {
        auto D = parse_descriptor(d);
        if (D.family == "pu") continue;
        int k = std::stoi(D.kv.at("k")), s0 = std::stoi(D.kv.at("s0")), s1 = std::stoi(D.kv.at("s1"));
        auto l = table1_line(D.family, k, s0, s1);
        bool ok = type_and_mult(l);
        if (ok && !l.match) ++flag_only;
        t.add(ok, l.descriptor + ": " + l.diff);
    }
    // the named examples
    auto ex = [&](const std::string& f, int k, int s0, int s1, const std::string& lab, Int sh, Int lg) {
        auto l = table1_line(f, k, s0, s1);
        bool ok = l.computed.label == lab && l.computed.mult.count("ij") && l.computed.mult.at("ij") == sh &&
                  l.computed.mult.count("2e") && l.computed.mult.at("2e") == lg;
        t.add(ok, "example " + l.descriptor);
    };
    ex("po", 1, 0, 2, "C2", 4, 1);
    ex("psp", 1, 0, 2, "C2", 4, 3);
    ex("autsu", 0, 0, 3, "C3", 2, 1);
    line(2, "PO/PSp/Aut(su) rows, n <= 16, type and multiplicities", t,
         "[" + std::to_string(flag_only) + " further rows differ only in strip group flags]");
}

// --------------------------------------------------------------------------- 3

void root_system_suite() {
    Tally t;
    for (auto& d : suite_descriptors()) {
        auto S = assemble(make_instance(d), {false});
        if (S.infinite_roots().empty()) continue;
        auto r = check_restricted(S);
        t.add(r.ok() && r.items.size() >= 4, d);
    }
    std::vector<std::string> sym;
    for (int n = 2; n <= 6; ++n) sym.push_back("sym:AI,n=" + std::to_string(n));
    for (int n = 2; n <= 3; ++n) sym.push_back("sym:AII,n=" + std::to_string(n));
    for (int p = 1; p <= 5; ++p)
        for (int q = 1; q <= p && p + q <= 6; ++q) sym.push_back("sym:AIII,p=" + std::to_string(p) + ",q=" + std::to_string(q));
    for (auto& d : sym) {
        auto v = verify("T2", make_instance(d));
        t.add(v.status == "pass", d);
    }
    line(3, "R' and R(G,A0) are root systems (registry + AI/AII/AIII up to su(6))", t);
}

// --------------------------------------------------------------------------- 4

void weyl_suite() {
    Tally t;
    std::set<std::string> required = {"pu:n=2,m=1,parts=2", "pu:n=3,m=1,parts=3", "pu:n=4,m=1,parts=4",
                                      "pu:n=4,m=1,parts=2.2", "pu:n=6,m=3,parts=2"};
    int used = 0;
    for (auto& d : suite_descriptors()) {
        auto I = make_instance(d);
        auto S = assemble(I);
        auto W = weyl_groups(S, &I);
        if (!W.explicit_coroots) {
            if (required.count(d)) t.add(false, d + ": no explicit coroot groups");
            continue;
        }
        ++used;
        bool eq = W.filt.W0.same_elements(W.f);
        auto meet = intersect(W.f, W.Rprime);
        bool semi = meet.order() == 1 && W.f.order() * W.Rprime.order() == W.small.order() &&
                    product_size(W.f, W.Rprime) == W.small.order() && is_normal(W.f, W.small);
        t.add(eq && semi, d + ": |W0| " + std::to_string(W.filt.W0.order()) + " |Wf| " + std::to_string(W.f.order()) +
                              " |W_R'| " + std::to_string(W.Rprime.order()) + " |W| " + std::to_string(W.small.order()));
    }
    line(4, "W_0 = W_f and W_small = W_f x| W_R'", t, "[" + std::to_string(used) + " explicit instances]");
}

// --------------------------------------------------------------------------- 5

void vogan_suite() {
    Tally t;
    std::vector<std::pair<std::string, std::set<Int>>> cases = {{"pu:n=2,m=1,parts=2", {2}},
                                                                {"pu:n=3,m=1,parts=3", {3}},
                                                                {"pu:n=4,m=1,parts=4", {2, 4}},
                                                                {"pu:n=6,m=3,parts=2", {8}}};
    for (auto& [d, want] : cases) {
        auto I = make_instance(d);
        auto S = assemble(I);
        std::set<Int> seen;
        bool ok = !S.fin.empty();
        for (auto& [a, f] : S.fin) {
            auto g = coroot_group_oracle(a, I);
            Int v = vogan_count(a, I.table);
            ok = ok && g && Int(g->size()) == v;
            if (g) seen.insert(static_cast<Int>(g->size()));
        }
        std::string got;
        for (auto x : seen) got += " " + std::to_string(x);
        t.add(ok && seen == want, d + ": sizes" + got);
    }
    line(5, "coroot groups match the Vogan count", t);
}

// --------------------------------------------------------------------------- 6

Int phi_at_one(Int d) {
    if (d == 1) return 0;
    auto f = factorize(d);
    return f.size() == 1 ? f[0].first : 1;
}

void fixed_points() {
    Tally t;
    std::mt19937 rng(20240607);
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    for (int trial = 0; trial < 240; ++trial) {
        int n = pick(1, 8);
        IntMat D(n, IntVec(n, 0));
        std::map<Int, int> mult;
        int at = 0;
        while (at < n) {
            int room = n - at;
            if (pick(0, 1)) {
                // cyclic permutation block
                int L = pick(1, room);
                for (int i = 0; i < L; ++i) D[at + (i + 1) % L][at + i] = 1;
                for (Int d : divisors(L)) mult[d]++;
                at += L;
            } else {
                std::vector<Int> ds;
                for (Int d = 1; d <= 30; ++d)
                    if (euler_phi(d) <= room) ds.push_back(d);
                Int d = ds[pick(0, static_cast<int>(ds.size()) - 1)];
                auto C = companion_matrix(cyclotomic_poly(d));
                int L = static_cast<int>(C.size());
                for (int i = 0; i < L; ++i)
                    for (int j = 0; j < L; ++j) D[at + i][at + j] = C[i][j];
                mult[d]++;
                at += L;
            }
        }
        // conjugate by a few elementary matrices
        IntMat y = D;
        for (int s = 0; s < 3 && n > 1; ++s) {
            int i = pick(0, n - 1), j = pick(0, n - 1);
            if (i == j) continue;
            Int c = pick(0, 1) ? 1 : -1;
            for (int k = 0; k < n; ++k) y[i][k] += c * y[j][k];
            for (int k = 0; k < n; ++k) y[k][j] -= c * y[k][i];
        }
        Z want = 1;
        for (auto [d, m] : mult)
            for (int k = 0; k < m; ++k) want *= zi(phi_at_one(d));
        IntMat Iy = mat_identity(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) Iy[i][j] -= y[i][j];
        Z direct = abs(det_z(Iy));
        auto f = fixed_point_count(y);
        bool ok = direct == want && f.route1 == want && f.route2 == want && f.positive_dim == (mult.count(1) > 0);
        t.add(ok, "trial " + std::to_string(trial) + " n=" + std::to_string(n));
    }
    line(6, "|det(I - y)| = prod Phi_d(1)^m(d) on random finite-order matrices", t);
}

// --------------------------------------------------------------------------- 7

void prime_decomposition() {
    Tally t;
    auto I = make_instance("pu:n=12,m=1,parts=12");
    auto p = prime_components(materialized_table(I), I, &I.alg);
    t.add(p.dim_gp[2] == 15, "dim g_(2) = " + std::to_string(p.dim_gp[2]));
    t.add(p.dim_gp[3] == 8, "dim g_(3) = " + std::to_string(p.dim_gp[3]));
    t.add(p.derived_dim_gp[2] == 15 && p.derived_dim_gp[3] == 8, "g_(p) perfect");
    t.add(p.dim_gprime == 23 && p.orth_checked && p.orth, "g' = g_(2) + g_(3), commuting");
    t.add(p.eq5, "M_I partition " + p.witness);
    t.add(p.eq6_ok, "g^(m) partition " + p.witness);
    int sum = 0;
    for (auto& [k, v] : p.dim_MI) sum += v;
    t.add(sum == p.dim_g, "sum dim M_I = " + std::to_string(sum));
    for (int n : {6, 12}) {
        auto J = make_instance("pu:n=" + std::to_string(n) + ",m=1,parts=" + std::to_string(n));
        auto M = make_instance("gprime:n=" + std::to_string(n));
        auto r = gprime_weyl_equal(J, &M);
        t.add(r.checks.ok() && r.skipped.empty() && r.checks.find("W_small(G') = W_small(G)"),
              "su(" + std::to_string(n) + ") g' Weyl equality");
    }
    line(7, "prime decomposition of su(12), Weyl equality on su(6), su(12)", t);
}

// --------------------------------------------------------------------------- 8

void strip_suite() {
    Tally t;
    int t7 = 0;
    for (auto& d : suite_descriptors()) {
        auto I = make_instance(d);
        auto S = assemble(I, {false});
        auto g = strip_group_checks(S);
        t.add(g.ok(), d + " strips");
        if (I.table.star) {
            bool yz = true;
            for (auto& a : S.infinite_roots()) yz = yz && yz_decomposition(a, S).checks.ok();
            t.add(yz, d + " Y/Z");
            auto di = dim_identities(S, I.table, I);
            t.add(di.applies && di.ok(), d + " dimension identities");
        }
        if (I.alg.dim() <= 160) {
            auto r = strip_equals_R0(S, g_infinity_split(S, materialized_table(I), I.alg));
            t.add(r.checks.ok(), d + " R_0a = R_0 u {0}");
            if (r.checks.find("R_0a = R_0 u {0} for short a")) ++t7;
        }
    }
    auto I = make_instance("pu:n=6,m=3,parts=2");
    auto S = assemble(I);
    auto r = strip_equals_R0(S, g_infinity_split(S, materialized_table(I), I.alg));
    t.add(r.skipped.empty() && r.checks.find("R_0a = R_0 u {0} for short a") && r.checks.ok(), "pu(6) m=3 T7");
    auto di = dim_identities(S, I.table, I);
    Int fin = 0;
    for (auto& c : S.finite_roots()) fin += S.roots.at(c);
    t.add(di.items[0].lhs == 11 && di.items[0].rhs == 11 && S.A.rank == 2 && fin == 9, "11 = 2 + 9");
    line(8, "strip suite", t, "[T7 applied on " + std::to_string(t7) + " instances]");
}

// --------------------------------------------------------------------------- 9

void axiom_suite() {
    Tally t;
    for (auto& d : suite_descriptors()) t.add(validate_axioms(assemble(make_instance(d))).ok(), d);

    auto base = assemble(make_instance("pu:n=6,m=3,parts=2"));
    auto fails = [](const TwistedRootSystem& S, const std::string& item) {
        auto r = validate_axioms(S);
        auto* it = r.find(item);
        return it && !it->pass && !it->witness.empty();
    };
    {
        auto S = base;
        auto a = S.infinite_roots().front();
        S.roots.erase(neg(S.A, a));
        S.inf_coroots.erase(neg(S.A, a));
        t.add(fails(S, "(1) infinite roots"), "corrupt: missing -alpha");
    }
    {
        auto S = base;
        S.gram[0][0] *= 3;
        t.add(fails(S, "(2) strong integrality"), "corrupt: non-integral pairing");
    }
    {
        auto S = base;
        bool done = false;
        for (auto& [a, d] : S.fin) {
            if (!d.group || done) continue;
            for (auto& x : n_torsion(S.A, d.order))
                if (pair(S.A, a, x) != 0) {
                    d.group->push_back(x);
                    done = true;
                    break;
                }
        }
        t.add(done && fails(S, "(3) coroot groups"), "corrupt: xi outside ker alpha");
    }
    line(9, "twisted root system axioms, three corrupted fixtures rejected", t);
}

// --------------------------------------------------------------------------- 10

std::string run(const std::string& cmd, int& status) {
    std::string out;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) {
        status = -1;
        return out;
    }
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    status = pclose(p);
    return out;
}

void determinism(const std::string& twr) {
    Tally t;
    if (twr.empty()) {
        t.add(false, "no --twr binary given");
        line(10, "compute --json is byte-identical over 3 runs", t);
        return;
    }
    for (auto d : {"pu:n=2,m=2", "pu:n=4,m=1,parts=4", "pu:n=6,m=3,parts=2", "po:k=1,s0=0,s1=2", "psp:k=1,s0=0,s1=2",
                   "autsu:k=0,s0=0,s1=3", "prod:name=A1xHeis3", "sym:AI,n=3"}) {
        std::string first;
        bool ok = true;
        for (int i = 0; i < 3; ++i) {
            int st = 0;
            auto out = run("'" + twr + "' compute '" + d + "' --json 2>/dev/null", st);
            if (i == 0) first = out;
            ok = ok && st == 0 && !out.empty() && out == first;
        }
        ok = ok && json::parse(first)["schema"] == 1;
        t.add(ok, d);
    }
    line(10, "compute --json is byte-identical over 3 runs", t);
}

}  // namespace

int main(int argc, char** argv) {
    std::string twr;
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--twr") twr = argv[i + 1];
    auto t0 = std::chrono::steady_clock::now();
    std::vector<std::function<void()>> steps = {table_pu,     table_classical, root_system_suite, weyl_suite,
                                                vogan_suite,  fixed_points,    prime_decomposition, strip_suite,
                                                axiom_suite,  [&] { determinism(twr); }};
    for (size_t i = 0; i < steps.size(); ++i) {
        try {
            steps[i]();
        } catch (const std::exception& e) {
            std::cout << "FAIL  criterion " << i + 1 << ": exception: " << e.what() << "\n";
            ++failed;
        }
    }
    auto secs = std::chrono::duration_cast<std::chrono::seconds>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (10 - failed) << "/10 criteria pass (" << secs << " s)\n";
    return failed ? 1 : 0;
}
