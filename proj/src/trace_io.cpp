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

#include "kgsim/trace_io.hpp"

#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "kgsim/error.hpp"
#include "kgsim/qasm.hpp"

namespace kgsim {

namespace {

[[noreturn]] void schema_error(const std::string &message) { fail(ErrorCode::Schema, message); }

double parse_number(const std::string &field, std::size_t line_no) {
    if (field.empty()) {
        schema_error("empty field on line " + std::to_string(line_no));
    }
    errno = 0;
    char *end = nullptr;
    const double value = std::strtod(field.c_str(), &end);
    if (end != field.c_str() + field.size() || errno == ERANGE) {
        schema_error("malformed number '" + field + "' on line " + std::to_string(line_no));
    }
    return value;
}

std::vector<std::string> split_csv(const std::string &line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) {
        fields.push_back(field);
    }
    if (!line.empty() && line.back() == ',') {
        fields.emplace_back();
    }
    return fields;
}

} // namespace

void write_trace(std::ostream &out, const ProbabilityTrace &trace) {
    require(trace.rows.size() == trace.times.size(), "trace rows and times differ in length");
    const std::size_t sites = trace.num_sites();
    const nlohmann::json header = {
        {"schema", kTraceSchema}, {"schema_version", kTraceSchemaVersion}, {"metadata", trace.metadata}};
    out << "# " << header.dump() << "\n";
    out << "t";
    for (std::size_t j = 0; j < sites; ++j) {
        out << ",p" << j;
    }
    out << "\n";
    for (std::size_t i = 0; i < trace.rows.size(); ++i) {
        require(trace.rows[i].size() == sites, "ragged trace rows");
        out << format_real(trace.times[i]);
        for (double p : trace.rows[i]) {
            out << ',' << format_real(p);
        }
        out << "\n";
    }
}

std::string trace_to_csv(const ProbabilityTrace &trace) {
    std::ostringstream out;
    write_trace(out, trace);
    return out.str();
}

void persist_trace(const ProbabilityTrace &trace, const std::filesystem::path &destination) {
    const std::string text = trace_to_csv(trace);
    std::ofstream out(destination, std::ios::binary | std::ios::trunc);
    if (!out) {
        fail(ErrorCode::Io, "cannot open " + destination.string() + " for writing");
    }
    out << text;
    out.flush();
    if (!out) {
        fail(ErrorCode::Io, "failed writing " + destination.string());
    }
}

ProbabilityTrace read_trace(std::istream &in) {
    std::string line;
    std::size_t line_no = 0;

    if (!std::getline(in, line)) {
        schema_error("empty trace file");
    }
    ++line_no;
    if (line.rfind("# ", 0) != 0) {
        schema_error("trace is missing its '# {json}' metadata header");
    }
    nlohmann::json header;
    try {
        header = nlohmann::json::parse(line.substr(2));
    } catch (const nlohmann::json::parse_error &e) {
        schema_error(std::string("metadata header is not valid JSON: ") + e.what());
    }
    if (!header.is_object() || header.value("schema", std::string{}) != kTraceSchema) {
        schema_error("metadata header does not declare schema '" + std::string(kTraceSchema) + "'");
    }
    if (!header.contains("schema_version") || !header["schema_version"].is_number_integer() ||
        header["schema_version"].get<int>() != kTraceSchemaVersion) {
        schema_error("unsupported trace schema version (expected " + std::to_string(kTraceSchemaVersion) + ")");
    }

    ProbabilityTrace trace;
    trace.metadata = header.value("metadata", nlohmann::json::object());

    if (!std::getline(in, line)) {
        schema_error("trace is missing its column header");
    }
    ++line_no;
    const auto columns = split_csv(line);
    if (columns.size() < 2 || columns[0] != "t") {
        schema_error("column header must be 't,p0,p1,...'");
    }
    for (std::size_t j = 1; j < columns.size(); ++j) {
        if (columns[j] != "p" + std::to_string(j - 1)) {
            schema_error("unexpected column '" + columns[j] + "'");
        }
    }
    const std::size_t sites = columns.size() - 1;

    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        const auto fields = split_csv(line);
        if (fields.size() != sites + 1) {
            schema_error("line " + std::to_string(line_no) + " has " + std::to_string(fields.size()) +
                         " fields, expected " + std::to_string(sites + 1));
        }
        trace.times.push_back(parse_number(fields[0], line_no));
        std::vector<double> row;
        row.reserve(sites);
        for (std::size_t j = 1; j < fields.size(); ++j) {
            row.push_back(parse_number(fields[j], line_no));
        }
        trace.rows.push_back(std::move(row));
    }
    return trace;
}

ProbabilityTrace trace_from_csv(const std::string &text) {
    std::istringstream in(text);
    return read_trace(in);
}

ProbabilityTrace load_trace(const std::filesystem::path &source) {
    std::ifstream in(source, std::ios::binary);
    if (!in) {
        fail(ErrorCode::Io, "cannot open trace " + source.string());
    }
    return read_trace(in);
}

} // namespace kgsim
