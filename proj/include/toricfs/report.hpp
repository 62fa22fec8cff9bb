#pragma once

#include "json.hpp"

#include <string>
#include <utility>
#include <vector>

namespace toricfs {

struct ReportCheck {
    std::string name;
    bool passed = true;
    std::string detail;  // the witness when the check fails
};

struct ReportTable {
    std::string title;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

struct ReportInput {
    std::string name;
    std::string sha256;
};

struct Report {
    std::string command;
    std::vector<ReportInput> inputs;
    nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
    nlohmann::ordered_json values = nlohmann::ordered_json::object();
    std::vector<ReportCheck> checks;
    std::vector<ReportTable> tables;

    void check(std::string name, bool passed, std::string detail = {});
    bool passed() const;
    std::string verdict() const { return passed() ? "PASS" : "FAIL"; }
};

enum class Format { Text, Json };

std::string render(const Report& report, Format format);

}  // namespace toricfs
