#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "twr/strips.hpp"

namespace twr {

using json = nlohmann::json;

struct Limits {
    size_t group_bound = 1000000;  // largest Weyl closure
    int algebra_dim = 160;         // largest g for bracket-level checks (T5, T6, T7, pdecom)
};
// TWR_MAX_GROUP and TWR_MAX_DIM override the defaults
Limits limits_from_env();

json char_json(const Character& c);
json report_json(const Instance& I, const Limits& lim = {});
std::string report_text(const json& r);
// sorted keys, two-space indent, trailing newline
std::string dump(const json& j);

struct VerifyResult {
    std::string theorem;
    std::string descriptor;
    std::string status;  // pass, fail, skip
    CheckReport checks;
    std::vector<std::string> skipped;
};
const std::vector<std::string>& theorem_ids();
VerifyResult verify(const std::string& theorem, const Instance& I, const Limits& lim = {});
json verify_json(const VerifyResult& v);

// computed counterpart of a table row
struct RowData {
    std::string label;
    std::map<std::string, Int> mult;  // -1 when a shape has mixed multiplicities
    std::map<std::string, bool> group;
};
RowData row_data(const Instance& I);

struct Table1Line {
    std::string descriptor;
    TableRow expected;
    RowData computed;
    bool match = false;
    std::string diff;
};
// row parameters: (n, m) for pu, (k, s0, s1) otherwise
Table1Line table1_line(const std::string& family, int a, int b, int c);
json table1_json(const Table1Line& l);

}  // namespace twr
