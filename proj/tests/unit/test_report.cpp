#include <doctest.h>

#include "twr/report.hpp"

using namespace twr;

TEST_SUITE("report") {
    TEST_CASE("compute examples") {
        auto h = report_json(make_instance("pu:n=4,m=1,parts=4"));
        CHECK(h["schema"] == 1);
        CHECK(h["roots"]["finite_count"] == 15);
        CHECK(h["roots"]["infinite_count"] == 0);
        CHECK(h["weyl"]["small"] == 48);
        CHECK(h["status"] == "pass");

        auto t = report_json(make_instance("pu:n=2,m=2"));
        CHECK(t["roots"]["infinite_count"] == 2);
        CHECK(t["weyl"]["small"] == 2);
        CHECK(t["restricted"]["type"] == "A1");

        auto p = report_json(make_instance("po:k=1,s0=0,s1=2"));
        CHECK(p["restricted"]["type"] == "C2");
        CHECK(p["strips"]["short"]["size"] == json::array({4}));
        CHECK(p["strips"]["long"]["size"] == json::array({1}));
        CHECK(p["weyl"]["f"].is_null());
        CHECK(p["weyl"]["small"].is_null());
    }

    TEST_CASE("json encoding") {
        Character c{{1, -2}, {0, 3}};
        CHECK(char_json(c).dump() == R"({"fin":[0,3],"inf":[1,-2]})");
        auto I = make_instance("pu:n=6,m=3");
        auto a = dump(report_json(I));
        auto b = dump(report_json(make_instance("pu:n=6,m=3,parts=2")));
        CHECK(a == b);
        auto j = json::parse(a);
        // descriptor round trip
        CHECK(make_instance(j["descriptor"].get<std::string>()).descriptor() == I.descriptor());
        CHECK(j["descriptor"] == "pu:n=6,m=3,parts=2");
        // keys come out sorted at every level
        std::function<void(const json&)> sorted = [&](const json& x) {
            if (x.is_object()) {
                std::string prev;
                for (auto& [k, v] : x.items()) {
                    CHECK(prev <= k);
                    prev = k;
                    sorted(v);
                }
            } else if (x.is_array()) {
                for (auto& v : x) sorted(v);
            }
        };
        sorted(j);
        CHECK_FALSE(j.contains("timing_ms"));
    }

    TEST_CASE("verify statuses") {
        auto pu = make_instance("pu:n=6,m=3,parts=2");
        CHECK(verify("T7", pu).status == "pass");
        CHECK(verify("T3", pu).status == "pass");
        CHECK(verify("walpha-dim", pu).status == "pass");
        auto ai = make_instance("sym:AI,n=3");
        CHECK(verify("T1", ai).status == "pass");
        CHECK(verify("T2", ai).status == "pass");
        CHECK(verify("T2", pu).status == "skip");
        auto h = make_instance("pu:n=4,m=1,parts=4");
        auto t6 = verify("T6", h);
        CHECK(t6.status == "skip");
        CHECK(t6.skipped.size() == 1);
        CHECK(verify("vogan", h).status == "pass");
        CHECK(verify("pdecom", make_instance("pu:n=6,m=1,parts=6")).status == "pass");
        CHECK(verify("T3", make_instance("po:k=1,s0=0,s1=2")).status == "skip");
        CHECK_THROWS_AS(verify("T4", pu), Error);
        Limits tight;
        tight.group_bound = 10;
        try {
            verify("T3", pu, tight);
            CHECK(false);
        } catch (const Error& e) {
            CHECK(e.code == kErrBound);
        }
    }

    TEST_CASE("table rows") {
        auto a = table1_line("po", 1, 0, 2);
        CHECK(a.match);
        CHECK(a.computed.label == "C2");
        CHECK(a.computed.mult == std::map<std::string, Int>{{"ij", 4}, {"2e", 1}});
        CHECK(table1_line("psp", 1, 0, 2).computed.mult.at("2e") == 3);
        auto c = table1_line("autsu", 0, 0, 3);
        CHECK(c.match);
        CHECK(c.computed.mult == std::map<std::string, Int>{{"ij", 2}, {"2e", 1}});
        CHECK(table1_line("pu", 8, 2, 0).computed.mult.at("a") == 16);
        CHECK(table1_line("pu", 6, 1, 0).computed.label == "empty");
        CHECK_THROWS_AS(table1_line("pu", 6, 4, 0), Error);
    }
}
