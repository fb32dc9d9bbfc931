#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "doctest.h"
#include "qbsim.h"

namespace {

// RAII wrappers so failing CHECKs cannot leak handles.
struct Scenario {
    qbsim_scenario* ptr = qbsim_scenario_new();
    ~Scenario() { qbsim_scenario_free(ptr); }
    operator qbsim_scenario*() const { return ptr; }
};

struct Result {
    qbsim_result* ptr = nullptr;
    ~Result() { qbsim_result_free(ptr); }
    qbsim_result** out() { return &ptr; }
    operator const qbsim_result*() const { return ptr; }
};

std::string scenario_json(const qbsim_scenario* s) {
    size_t needed = 0;
    REQUIRE(qbsim_scenario_to_json(s, nullptr, 0, &needed) == QBSIM_OK);
    REQUIRE(needed > 1);
    std::string buf(needed, '\0');
    REQUIRE(qbsim_scenario_to_json(s, buf.data(), buf.size(), &needed) ==
            QBSIM_OK);
    buf.resize(needed - 1);  // drop the NUL
    return buf;
}

std::string result_string(const qbsim_result* r, const char* format) {
    size_t needed = 0;
    REQUIRE(qbsim_result_emit_string(r, format, nullptr, 0, &needed) ==
            QBSIM_OK);
    std::string buf(needed, '\0');
    REQUIRE(qbsim_result_emit_string(r, format, buf.data(), buf.size(),
                                     &needed) == QBSIM_OK);
    buf.resize(needed - 1);
    return buf;
}

}  // namespace

TEST_CASE("version and t_min") {
    REQUIRE(qbsim_version() != nullptr);
    CHECK(std::strlen(qbsim_version()) >= 5);
    CHECK(qbsim_t_min(1.0) == doctest::Approx(M_PI / 2.0).epsilon(1e-15));
    CHECK(std::isnan(qbsim_t_min(0.0)));
    CHECK(std::isnan(qbsim_t_min(-2.0)));
}

TEST_CASE("scenario setters validate their inputs") {
    Scenario s;
    REQUIRE(s.ptr != nullptr);
    CHECK(qbsim_scenario_set_model(s, "ising") == QBSIM_OK);
    CHECK(qbsim_scenario_set_model(s, "heisenberg") == QBSIM_ERR_INVALID);
    CHECK(std::string(qbsim_last_error()).find("heisenberg") !=
          std::string::npos);

    CHECK(qbsim_scenario_set_param(s, "D", 3.0) == QBSIM_OK);
    CHECK(qbsim_scenario_set_param(s, "j", 1.0) == QBSIM_ERR_INVALID);
    CHECK(qbsim_scenario_set_param(s, "D", NAN) == QBSIM_ERR_INVALID);

    CHECK(qbsim_scenario_set_window(s, 0.0, 1.5) == QBSIM_OK);
    CHECK(qbsim_scenario_set_window(s, 1.0, 1.0) == QBSIM_ERR_INVALID);
    CHECK(qbsim_scenario_set_steps(s, 101) == QBSIM_OK);
    CHECK(qbsim_scenario_set_steps(s, 1) == QBSIM_ERR_INVALID);

    CHECK(qbsim_scenario_set_observables(s, "ergotropy,power") == QBSIM_OK);
    CHECK(qbsim_scenario_set_observables(s, "entropy") == QBSIM_ERR_INVALID);

    const double values[] = {0.0, 3.0};
    CHECK(qbsim_scenario_set_sweep(s, "D", values, 2) == QBSIM_OK);
    CHECK(qbsim_scenario_set_sweep(s, "J", values, 2) == QBSIM_ERR_INVALID);
    CHECK(qbsim_scenario_set_sweep(s, "D", values, 0) == QBSIM_ERR_INVALID);
    CHECK(qbsim_scenario_set_sweep(s, "D", nullptr, 2) == QBSIM_ERR_INVALID);

    CHECK(qbsim_scenario_set_label(s, "study") == QBSIM_OK);

    // NULL handles are rejected, never dereferenced
    CHECK(qbsim_scenario_set_model(nullptr, "ising") == QBSIM_ERR_INVALID);
    CHECK(qbsim_scenario_set_param(nullptr, "D", 1.0) == QBSIM_ERR_INVALID);
    qbsim_scenario_free(nullptr);  // NULL-safe
}

TEST_CASE("running a swept scenario exposes records and peaks") {
    Scenario s;
    REQUIRE(qbsim_scenario_set_model(s, "ising") == QBSIM_OK);
    REQUIRE(qbsim_scenario_set_window(s, 0.0, qbsim_t_min(1.0)) == QBSIM_OK);
    REQUIRE(qbsim_scenario_set_steps(s, 101) == QBSIM_OK);
    const double values[] = {0.0, 3.0, 6.0, 9.0};
    REQUIRE(qbsim_scenario_set_sweep(s, "D", values, 4) == QBSIM_OK);

    Result r;
    REQUIRE(qbsim_run(s, r.out()) == QBSIM_OK);
    REQUIRE(qbsim_result_series_count(r) == 4);
    REQUIRE(qbsim_result_record_count(r, 0) == 101);
    CHECK(std::string(qbsim_result_series_label(r, 0)) == "D=0");
    CHECK(std::string(qbsim_result_series_label(r, 3)) == "D=9");
    CHECK(qbsim_result_series_label(r, 4) == nullptr);

    double rec[6] = {};
    REQUIRE(qbsim_result_record(r, 0, 0, rec) == QBSIM_OK);
    CHECK(rec[0] == 0.0);                                  // t
    CHECK(rec[1] == 0.0);                                  // ergotropy
    CHECK(rec[2] == 0.0);                                  // power
    CHECK(rec[3] == doctest::Approx(1.0).epsilon(1e-12));  // coherence
    CHECK(rec[4] == doctest::Approx(1.0).epsilon(1e-12));  // steering
    CHECK(rec[5] == doctest::Approx(-2.0).epsilon(1e-12));  // energy

    // the D=0 Ising chain fills the battery exactly at the window edge
    REQUIRE(qbsim_result_record(r, 0, 100, rec) == QBSIM_OK);
    CHECK(rec[1] == doctest::Approx(4.0).epsilon(1e-9));

    double t_peak = 0.0;
    double value_peak = 0.0;
    REQUIRE(qbsim_result_peak(r, 0, "ergotropy", &t_peak, &value_peak) ==
            QBSIM_OK);
    CHECK(t_peak == doctest::Approx(M_PI / 2.0).epsilon(1e-9));
    CHECK(value_peak == doctest::Approx(4.0).epsilon(1e-9));
    REQUIRE(qbsim_result_peak(r, 3, "power", &t_peak, &value_peak) ==
            QBSIM_OK);
    CHECK(value_peak > 0.0);
    CHECK(qbsim_result_peak(r, 0, "steering", &t_peak, &value_peak) ==
          QBSIM_ERR_INVALID);
    CHECK(qbsim_result_record(r, 0, 500, rec) == QBSIM_ERR_INVALID);
    CHECK(qbsim_result_record(r, 9, 0, rec) == QBSIM_ERR_INVALID);

    const std::string csv = result_string(r, "csv");
    CHECK(csv.rfind("sweep_param,sweep_value,t,ergotropy,power,coherence,"
                    "steering,energy\n",
                    0) == 0);
    CHECK(csv.find("\nD,9,") != std::string::npos);

    // NULL-result accessors degrade gracefully
    CHECK(qbsim_result_series_count(nullptr) == 0);
    CHECK(qbsim_result_record_count(nullptr, 0) == 0);
    CHECK(qbsim_result_series_label(nullptr, 0) == nullptr);
    qbsim_result_free(nullptr);
}

TEST_CASE("run failures carry descriptive errors") {
    Scenario s;
    REQUIRE(qbsim_scenario_set_model(s, "xyz") == QBSIM_OK);
    Result r;
    // xyz has no default anisotropy: resolution must fail loudly
    CHECK(qbsim_run(s, r.out()) == QBSIM_ERR_INVALID);
    CHECK(r.ptr == nullptr);
    CHECK(std::string(qbsim_last_error()).find("gamma") !=
          std::string::npos);

    CHECK(qbsim_run(nullptr, r.out()) == QBSIM_ERR_INVALID);
    CHECK(qbsim_run(s, nullptr) == QBSIM_ERR_INVALID);
}

TEST_CASE("comparison runs tag their three modes") {
    Scenario s;
    REQUIRE(qbsim_scenario_set_model(s, "ising") == QBSIM_OK);
    REQUIRE(qbsim_scenario_set_steps(s, 51) == QBSIM_OK);
    Result r;
    REQUIRE(qbsim_run_compare(s, r.out()) == QBSIM_OK);
    REQUIRE(qbsim_result_series_count(r) == 3);
    CHECK(std::string(qbsim_result_series_label(r, 0)) == "collective");
    CHECK(std::string(qbsim_result_series_label(r, 1)) == "parallel");
    CHECK(std::string(qbsim_result_series_label(r, 2)) ==
          "parallel-analytic");

    // numeric parallel charging agrees with the analytic reference
    for (size_t k = 0; k < 51; ++k) {
        double num[6];
        double ana[6];
        REQUIRE(qbsim_result_record(r, 1, k, num) == QBSIM_OK);
        REQUIRE(qbsim_result_record(r, 2, k, ana) == QBSIM_OK);
        for (int j = 0; j < 6; ++j) {
            CHECK(std::abs(num[j] - ana[j]) <= 1e-9);
        }
    }
}

TEST_CASE("JSON round-trips through the buffer protocol") {
    Scenario s;
    REQUIRE(qbsim_scenario_set_model(s, "xxz") == QBSIM_OK);
    REQUIRE(qbsim_scenario_set_param(s, "delta", 2.0) == QBSIM_OK);
    const double values[] = {0.0, 1.7};
    REQUIRE(qbsim_scenario_set_sweep(s, "D", values, 2) == QBSIM_OK);

    const std::string dumped = scenario_json(s);
    CHECK(dumped.find("\"xxz\"") != std::string::npos);
    CHECK(dumped.find("1.7") != std::string::npos);

    // a short buffer is reported without truncating into it
    size_t needed = 0;
    std::vector<char> tiny(4, 'x');
    CHECK(qbsim_scenario_to_json(s, tiny.data(), tiny.size(), &needed) ==
          QBSIM_ERR_INVALID);
    CHECK(needed == dumped.size() + 1);
    CHECK(tiny[0] == 'x');

    Scenario clone;
    REQUIRE(qbsim_scenario_from_json(clone, dumped.c_str()) == QBSIM_OK);
    CHECK(scenario_json(clone) == dumped);

    CHECK(qbsim_scenario_from_json(clone, R"({"modle": "ising"})") ==
          QBSIM_ERR_INVALID);
    CHECK(std::string(qbsim_last_error()).find("modle") !=
          std::string::npos);
    CHECK(qbsim_scenario_load(clone, "/nonexistent/config.json") ==
          QBSIM_ERR_IO);
}

TEST_CASE("figures are enumerable and runnable") {
    REQUIRE(qbsim_figure_count() == 7);
    CHECK(std::string(qbsim_figure_name(0)) == "fig2_compare");
    CHECK(std::string(qbsim_figure_name(6)) == "fig7_xyz_dm_delta3");
    CHECK(qbsim_figure_name(7) == nullptr);

    Result r;
    CHECK(qbsim_run_figure(qbsim_figure_count(), r.out()) ==
          QBSIM_ERR_INVALID);
    CHECK(r.ptr == nullptr);
}

TEST_CASE("emission maps file-system failures to QBSIM_ERR_IO") {
    Scenario s;
    REQUIRE(qbsim_scenario_set_steps(s, 11) == QBSIM_OK);
    Result r;
    REQUIRE(qbsim_run(s, r.out()) == QBSIM_OK);
    CHECK(qbsim_result_emit_file(r, "csv", "/nonexistent/dir/out.csv") ==
          QBSIM_ERR_IO);
    CHECK(qbsim_result_emit_file(r, "yaml", "/tmp/out.csv") ==
          QBSIM_ERR_INVALID);
    size_t needed = 0;
    CHECK(qbsim_result_emit_string(r, "yaml", nullptr, 0, &needed) ==
          QBSIM_ERR_INVALID);
}
