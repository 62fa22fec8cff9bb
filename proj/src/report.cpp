#include "toricfs/report.hpp"

#include <algorithm>
#include <sstream>

#ifndef TORICFS_VERSION
#define TORICFS_VERSION "0.0.0"
#endif

namespace toricfs {

using ojson = nlohmann::ordered_json;

void Report::check(std::string name, bool passed, std::string detail)
{
    checks.push_back({std::move(name), passed, std::move(detail)});
}

bool Report::passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const ReportCheck& c) { return c.passed; });
}

namespace {

std::string plain(const ojson& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void aligned(std::ostream& os, const std::vector<std::vector<std::string>>& rows, const std::string& indent)
{
    std::vector<std::size_t> width;
    for (const auto& r : rows)
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (width.size() <= i)
                width.push_back(0);
            width[i] = std::max(width[i], r[i].size());
        }
    for (const auto& r : rows) {
        std::string line = indent;
        for (std::size_t i = 0; i < r.size(); ++i) {
            line += r[i];
            if (i + 1 < r.size())
                line += std::string(width[i] - r[i].size() + 2, ' ');
        }
        while (!line.empty() && line.back() == ' ')
            line.pop_back();
        os << line << '\n';
    }
}

void key_values(std::ostream& os, const char* heading, const ojson& obj)
{
    if (obj.empty())
        return;
    os << heading << ":\n";
    std::vector<std::vector<std::string>> rows;
    for (const auto& [k, v] : obj.items())
        rows.push_back({k, plain(v)});
    aligned(os, rows, "  ");
}

std::string render_text(const Report& r)
{
    std::ostringstream os;
    os << "toricfs " << TORICFS_VERSION << "  " << r.command << '\n';
    if (!r.inputs.empty()) {
        os << "inputs:\n";
        std::vector<std::vector<std::string>> rows;
        for (const auto& in : r.inputs)
            rows.push_back({in.name, "sha256:" + in.sha256});
        aligned(os, rows, "  ");
    }
    key_values(os, "parameters", r.parameters);
    key_values(os, "values", r.values);
    os << "checks:\n";
    if (r.checks.empty())
        os << "  (none)\n";
    std::vector<std::vector<std::string>> rows;
    for (const auto& c : r.checks)
        rows.push_back({c.passed ? "PASS" : "FAIL", c.name, c.detail});
    aligned(os, rows, "  ");
    for (const auto& t : r.tables) {
        os << t.title << ":\n";
        std::vector<std::vector<std::string>> cells{t.columns};
        cells.insert(cells.end(), t.rows.begin(), t.rows.end());
        aligned(os, cells, "  ");
    }
    os << "verdict: " << r.verdict() << '\n';
    return os.str();
}

std::string render_json(const Report& r)
{
    ojson j;
    j["tool"] = "toricfs";
    j["version"] = TORICFS_VERSION;
    j["command"] = r.command;
    j["inputs"] = ojson::array();
    for (const auto& in : r.inputs)
        j["inputs"].push_back({{"name", in.name}, {"sha256", in.sha256}});
    j["parameters"] = r.parameters;
    j["values"] = r.values;
    j["checks"] = ojson::array();
    for (const auto& c : r.checks)
        j["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    j["tables"] = ojson::array();
    for (const auto& t : r.tables)
        j["tables"].push_back({{"title", t.title}, {"columns", t.columns}, {"rows", t.rows}});
    j["verdict"] = r.verdict();
    return j.dump(2) + "\n";
}

}  // namespace

std::string render(const Report& report, Format format)
{
    return format == Format::Json ? render_json(report) : render_text(report);
}

}  // namespace toricfs
