// Copyright 2026 The kgsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <cstring>
#include <filesystem>
#include <string>

#include "kgsim/kgsim.h"

namespace {

const char *kCaseA = KGSIM_SOURCE_DIR "/configs/case_a.json";

std::string take(char *text) {
    std::string out(text);
    kgsim_string_free(text);
    return out;
}

} // namespace

TEST_CASE("version") { CHECK(std::strlen(kgsim_version()) > 0); }

TEST_CASE("config handles") {
    kgsim_config *config = nullptr;
    REQUIRE(kgsim_config_load(kCaseA, &config) == KGSIM_OK);
    CHECK(std::string(kgsim_last_error()).empty());

    int n = 0;
    CHECK(kgsim_config_num_qubits(config, &n) == KGSIM_OK);
    CHECK(n == 2);
    double t = 0;
    CHECK(kgsim_config_final_time(config, &t) == KGSIM_OK);
    CHECK(t == 10.0);
    kgsim_component comp = KGSIM_ANTIPARTICLE;
    CHECK(kgsim_config_component(config, &comp) == KGSIM_OK);
    CHECK(comp == KGSIM_PARTICLE);
    CHECK(kgsim_config_set_component(config, KGSIM_ANTIPARTICLE) == KGSIM_OK);
    CHECK(kgsim_config_component(config, &comp) == KGSIM_OK);
    CHECK(comp == KGSIM_ANTIPARTICLE);

    CHECK(kgsim_config_set_splitting(config, "strang") == KGSIM_OK);
    CHECK(kgsim_config_set_splitting(config, "fourth") == KGSIM_ERR_CONFIG);
    CHECK(std::string(kgsim_last_error()).find("fourth") != std::string::npos);

    char *json = nullptr;
    REQUIRE(kgsim_config_to_json(config, &json) == KGSIM_OK);
    const auto text = take(json);
    CHECK(text.find("\"strang\"") != std::string::npos);
    CHECK(text.find("\"antiparticle\"") != std::string::npos);
    kgsim_config_free(config);
}

TEST_CASE("config errors") {
    kgsim_config *config = nullptr;
    CHECK(kgsim_config_load("/nonexistent.json", &config) == KGSIM_ERR_IO);
    CHECK(config == nullptr);
    CHECK(kgsim_config_parse("{not json", &config) == KGSIM_ERR_CONFIG);
    CHECK(kgsim_config_parse(R"({"times": [1], "trotter_steps": 0})", &config) == KGSIM_ERR_CONFIG);
    CHECK(kgsim_config_parse(nullptr, &config) == KGSIM_ERR_INVALID_ARGUMENT);
    CHECK(kgsim_config_num_qubits(nullptr, nullptr) == KGSIM_ERR_INVALID_ARGUMENT);
    kgsim_config_free(nullptr);
}

TEST_CASE("sweeps and traces") {
    kgsim_config *config = nullptr;
    REQUIRE(kgsim_config_load(kCaseA, &config) == KGSIM_OK);
    kgsim_trace *trace = nullptr;
    REQUIRE(kgsim_run_sweep(config, &trace) == KGSIM_OK);
    CHECK(kgsim_trace_num_times(trace) == 10);
    CHECK(kgsim_trace_num_sites(trace) == 4);

    double value = -1;
    CHECK(kgsim_trace_time(trace, 0, &value) == KGSIM_OK);
    CHECK(value == 1.0);
    CHECK(kgsim_trace_probability(trace, 0, 0, &value) == KGSIM_OK);
    CHECK(value == 1.0);
    CHECK(kgsim_trace_expected_position(trace, 0, &value) == KGSIM_OK);
    CHECK(value == 0.0);
    CHECK(kgsim_trace_transmission(trace, 9, 1, &value) == KGSIM_OK);
    CHECK(value > 0.0);
    CHECK(kgsim_trace_probability(trace, 10, 0, &value) == KGSIM_ERR_INVALID_ARGUMENT);
    CHECK(kgsim_trace_probability(trace, 0, 4, &value) == KGSIM_ERR_INVALID_ARGUMENT);
    CHECK(kgsim_trace_transmission(trace, 0, 4, &value) == KGSIM_ERR_INVALID_ARGUMENT);

    char *csv = nullptr;
    REQUIRE(kgsim_trace_to_csv(trace, &csv) == KGSIM_OK);
    const auto text = take(csv);
    char *svg = nullptr;
    REQUIRE(kgsim_trace_render_svg(trace, &svg) == KGSIM_OK);
    CHECK(take(svg).find("<svg") != std::string::npos);

    const auto path = std::filesystem::temp_directory_path() / "kgsim_capi_trace.csv";
    REQUIRE(kgsim_trace_write_csv(trace, path.c_str()) == KGSIM_OK);
    kgsim_trace *loaded = nullptr;
    REQUIRE(kgsim_trace_load(path.c_str(), &loaded) == KGSIM_OK);
    char *again = nullptr;
    REQUIRE(kgsim_trace_to_csv(loaded, &again) == KGSIM_OK);
    CHECK(take(again) == text);
    std::filesystem::remove(path);
    CHECK(kgsim_trace_write_csv(trace, "/nonexistent/dir/t.csv") == KGSIM_ERR_IO);
    CHECK(kgsim_trace_load("/nonexistent/t.csv", &loaded) == KGSIM_ERR_IO);

    kgsim_trace_free(loaded);
    kgsim_trace_free(trace);
    kgsim_config_free(config);
    CHECK(kgsim_trace_num_times(nullptr) == 0);
}

TEST_CASE("circuit export") {
    char *qasm = nullptr;
    REQUIRE(kgsim_qasm_qft(2, 0, &qasm) == KGSIM_OK);
    const auto qft = take(qasm);
    CHECK(qft.find("cu1(1.5707963267948966) q[0],q[1];") != std::string::npos);
    REQUIRE(kgsim_qasm_qft(2, 1, &qasm) == KGSIM_OK);
    CHECK(take(qasm).find("cu1(-1.5707963267948966)") != std::string::npos);
    CHECK(kgsim_qasm_qft(0, 0, &qasm) == KGSIM_ERR_INVALID_ARGUMENT);

    kgsim_config *config = nullptr;
    REQUIRE(kgsim_config_load(kCaseA, &config) == KGSIM_OK);
    REQUIRE(kgsim_qasm_evolution(config, KGSIM_PARTICLE, 1.0, 1, &qasm) == KGSIM_OK);
    const auto text = take(qasm);
    CHECK(text.find("// particle t=1 r=1 paper-order\n") != std::string::npos);
    CHECK(kgsim_qasm_evolution(config, KGSIM_PARTICLE, 1.0, 0, &qasm) == KGSIM_ERR_INVALID_ARGUMENT);
    CHECK(kgsim_qasm_evolution(config, static_cast<kgsim_component>(7), 1.0, 1, &qasm) ==
          KGSIM_ERR_INVALID_ARGUMENT);
    kgsim_config_free(config);

    REQUIRE(kgsim_config_parse(R"({"num_qubits": 7, "times": [1]})", &config) == KGSIM_OK);
    CHECK(kgsim_qasm_evolution(config, KGSIM_PARTICLE, 1.0, 1, &qasm) == KGSIM_ERR_INVALID_ARGUMENT);
    kgsim_config_free(config);
}

TEST_CASE("oracle comparison") {
    kgsim_config *config = nullptr;
    REQUIRE(kgsim_config_load(kCaseA, &config) == KGSIM_OK);
    const int rs[] = {5, 10};
    char *csv = nullptr;
    REQUIRE(kgsim_oracle_compare(config, 1.0, rs, 2, &csv) == KGSIM_OK);
    const auto text = take(csv);
    CHECK(text.rfind("r,error\n5,", 0) == 0);
    CHECK(text.find("\n10,") != std::string::npos);
    const int bad[] = {0};
    CHECK(kgsim_oracle_compare(config, 1.0, bad, 1, &csv) == KGSIM_ERR_CONFIG);
    kgsim_config_free(config);

    REQUIRE(kgsim_config_parse(R"({"num_qubits": 9, "times": [1]})", &config) == KGSIM_OK);
    CHECK(kgsim_oracle_compare(config, 1.0, rs, 2, &csv) == KGSIM_ERR_INVALID_ARGUMENT);
    kgsim_config_free(config);
}
