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

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

namespace fs = std::filesystem;

namespace {

const std::string kCli = KGSIM_CLI_PATH;
const std::string kConfigs = KGSIM_SOURCE_DIR "/configs";

int run(const std::string &args, const fs::path &stdout_file = "/dev/null") {
    const std::string cmd = "'" + kCli + "' " + args + " > '" + stdout_file.string() + "' 2>/dev/null";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path &path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

struct TempDir {
    fs::path path;
    explicit TempDir(const std::string &name) : path(fs::temp_directory_path() / name) {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

} // namespace

TEST_CASE("sweep writes the three outputs") {
    for (const char *name : {"case_a", "case_b"}) {
        TempDir tmp(std::string("kgsim_cli_") + name);
        const auto out = tmp.path / "out";
        CHECK(run("sweep --config " + kConfigs + "/" + name + ".json --out " + out.string()) == 0);
        CHECK(fs::exists(out / "trace.csv"));
        CHECK(fs::exists(out / "heatmap.svg"));
        REQUIRE(fs::exists(out / "manifest.json"));
        const auto manifest = nlohmann::json::parse(slurp(out / "manifest.json"));
        CHECK(manifest["command"] == "sweep");
        CHECK(manifest["tool"] == "kgsim");
        CHECK(manifest["outputs"].size() == 2);
        CHECK(manifest["resolved_config"]["label"] == name);
        CHECK(manifest["wall_clock_seconds"].get<double>() >= 0.0);

        // the resolved configuration reproduces the trace byte for byte
        const auto resolved = tmp.path / "resolved.json";
        std::ofstream(resolved) << manifest["resolved_config"].dump();
        const auto again = tmp.path / "again";
        CHECK(run("sweep --config " + resolved.string() + " --out " + again.string()) == 0);
        CHECK(slurp(again / "trace.csv") == slurp(out / "trace.csv"));
        CHECK(slurp(again / "heatmap.svg") == slurp(out / "heatmap.svg"));
    }
}

TEST_CASE("invalid configuration leaves no outputs") {
    TempDir tmp("kgsim_cli_invalid");
    const auto cfg = tmp.path / "bad.json";
    std::ofstream(cfg) << R"({"times": [1, 2], "trotter_steps": 0})";
    const auto out = tmp.path / "out";
    CHECK(run("sweep --config " + cfg.string() + " --out " + out.string()) == 2);
    CHECK_FALSE(fs::exists(out / "trace.csv"));
    CHECK_FALSE(fs::exists(out / "heatmap.svg"));
    CHECK_FALSE(fs::exists(out / "manifest.json"));

    std::ofstream(cfg, std::ios::trunc) << "{ broken";
    CHECK(run("sweep --config " + cfg.string() + " --out " + out.string()) == 2);
}

TEST_CASE("io failures") {
    CHECK(run("sweep --config /nonexistent/case.json --out /tmp") == 3);
    TempDir tmp("kgsim_cli_io");
    const auto blocker = tmp.path / "file";
    std::ofstream(blocker) << "x";
    CHECK(run("sweep --config " + kConfigs + "/case_a.json --out " + (blocker / "sub").string()) == 3);
}

TEST_CASE("output directory from the environment") {
    TempDir tmp("kgsim_cli_env");
    const std::string cmd = "KGSIM_OUT_DIR='" + tmp.path.string() + "' '" + kCli + "' sweep --config " + kConfigs +
                            "/case_a.json > /dev/null";
    CHECK(std::system(cmd.c_str()) == 0);
    CHECK(fs::exists(tmp.path / "manifest.json"));
}

TEST_CASE("qasm export") {
    TempDir tmp("kgsim_cli_qasm");
    const auto out = tmp.path / "out.qasm";
    CHECK(run("qasm --qft-only", out) == 0);
    CHECK(slurp(out) == slurp(KGSIM_GOLDEN_DIR "/qft2.qasm"));

    CHECK(run("qasm --config " + kConfigs + "/case_a.json --component particle --t 0 --r 1", out) == 0);
    CHECK(slurp(out) == "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n// particle t=0 r=1 paper-order\n"
                        "// global phase: 0\nqreg q[2];\ncreg c[2];\nmeasure q[0] -> c[0];\nmeasure q[1] -> c[1];\n");

    CHECK(run("qasm --config " + kConfigs + "/case_a.json --t 1 --r 1", out) == 0);
    const auto step = slurp(out);
    CHECK(step.find("// particle t=1 r=1 paper-order\n") != std::string::npos);
    CHECK(run("qasm --config " + kConfigs + "/case_a.json --component antiparticle --t 1 --r 1", out) == 0);
    CHECK(slurp(out) != step);

    CHECK(run("qasm --config " + kConfigs + "/case_a.json --t 1 --r 0") == 2);
    CHECK(run("qasm --config " + kConfigs + "/case_a.json --component photon --t 1 --r 1") == 2);
    CHECK(run("qasm --t 1 --r 1") == 2);
}

TEST_CASE("oracle comparison report") {
    TempDir tmp("kgsim_cli_oracle");
    const auto out = tmp.path / "report.csv";
    CHECK(run("oracle-compare --config " + kConfigs + "/case_a.json --r 5,10,20 --t 1 --splitting strang", out) == 0);
    const auto text = slurp(out);
    CHECK(text.rfind("r,error\n5,", 0) == 0);
    CHECK(text.find("\n20,") != std::string::npos);
    CHECK(run("oracle-compare --config " + kConfigs + "/case_a.json --r 0") == 2);
}

TEST_CASE("usage errors and version") {
    CHECK(run("") == 2);
    CHECK(run("frobnicate") == 2);
    CHECK(run("sweep") == 2);
    TempDir tmp("kgsim_cli_version");
    CHECK(run("version", tmp.path / "v.txt") == 0);
    CHECK(slurp(tmp.path / "v.txt").rfind("kgsim ", 0) == 0);
}
