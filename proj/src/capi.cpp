#include "twroots.h"

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <new>

#include "twr/report.hpp"

struct twr_instance {
    twr::Instance inst;
    std::string desc;
};

struct twr_report {
    twr::json j;
    long long millis = 0;
};

namespace {

thread_local std::string last_error;

twr::Limits& limits() {
    static twr::Limits l = [] {
        try {
            return twr::limits_from_env();
        } catch (...) {
            return twr::Limits{};
        }
    }();
    return l;
}

char* copy(const std::string& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (p) std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

template <class F>
int guard(F&& f) {
    last_error.clear();
    try {
        f();
        return TWR_OK;
    } catch (const twr::Error& e) {
        last_error = e.what();
        return e.code;
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return TWR_ERR_BOUND;
    } catch (const std::exception& e) {
        last_error = e.what();
        return TWR_ERR_INTERNAL;
    }
}

int null_arg() {
    last_error = "null argument";
    return TWR_ERR_NULL;
}

}  // namespace

extern "C" {

const char* twr_last_error(void) { return last_error.c_str(); }

void twr_string_free(char* s) { std::free(s); }

int twr_set_limits(unsigned long long max_group, int max_dim) {
    return guard([&] {
        limits();
        if (max_dim < 0) throw twr::Error(twr::kErrInvalid, "max_dim must be nonnegative");
        if (max_group) limits().group_bound = static_cast<size_t>(max_group);
        if (max_dim) limits().algebra_dim = max_dim;
    });
}

int twr_instance_new(const char* descriptor, twr_instance** out) {
    if (!descriptor || !out) return null_arg();
    *out = nullptr;
    return guard([&] {
        auto* h = new twr_instance{twr::make_instance(descriptor), ""};
        h->desc = h->inst.descriptor();
        *out = h;
    });
}

void twr_instance_free(twr_instance* inst) { delete inst; }

const char* twr_instance_descriptor(const twr_instance* inst) { return inst ? inst->desc.c_str() : ""; }

int twr_compute(const twr_instance* inst, twr_report** out) {
    if (!inst || !out) return null_arg();
    *out = nullptr;
    return guard([&] {
        auto t0 = std::chrono::steady_clock::now();
        auto j = twr::report_json(inst->inst, limits());
        auto t1 = std::chrono::steady_clock::now();
        *out = new twr_report{std::move(j),
                              std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count()};
    });
}

void twr_report_free(twr_report* rep) { delete rep; }

int twr_report_status(const twr_report* rep) {
    if (!rep) return TWR_FAIL;
    return rep->j.value("status", std::string()) == "pass" ? TWR_PASS : TWR_FAIL;
}

int twr_report_json(const twr_report* rep, char** out) {
    if (!rep || !out) return null_arg();
    return guard([&] { *out = copy(twr::dump(rep->j)); });
}

int twr_report_text(const twr_report* rep, char** out) {
    if (!rep || !out) return null_arg();
    return guard([&] { *out = copy(twr::report_text(rep->j)); });
}

long long twr_report_millis(const twr_report* rep) { return rep ? rep->millis : 0; }

int twr_verify(const twr_instance* inst, const char* theorem, int* status, char** out) {
    if (!inst || !theorem || !status || !out) return null_arg();
    return guard([&] {
        auto v = twr::verify(theorem, inst->inst, limits());
        *status = v.status == "pass" ? TWR_PASS : v.status == "skip" ? TWR_SKIP : TWR_FAIL;
        *out = copy(twr::dump(twr::verify_json(v)));
    });
}

const char* twr_theorems(void) {
    static const std::string s = [] {
        std::string o;
        for (auto& t : twr::theorem_ids()) o += (o.empty() ? "" : " ") + t;
        return o;
    }();
    return s.c_str();
}

int twr_table1_row(const char* family, int a, int b, int c, int* match, char** out) {
    if (!family || !match || !out) return null_arg();
    return guard([&] {
        auto l = twr::table1_line(family, a, b, c);
        *match = l.match ? 1 : 0;
        *out = copy(twr::dump(twr::table1_json(l)));
    });
}

int twr_list(char** out) {
    if (!out) return null_arg();
    return guard([&] { *out = copy(twr::dump(twr::json(twr::suite_descriptors()))); });
}

}  // extern "C"
