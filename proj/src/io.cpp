#include "toricfs/io.hpp"

#include "json.hpp"
#include <openssl/evp.h>

#include <fstream>
#include <iomanip>
#include <sstream>

namespace toricfs {

using nlohmann::json;

namespace {

[[noreturn]] void schema_error(const std::string& source, const std::string& path, const std::string& what)
{
    throw InputError(source + ": " + path + ": " + what);
}

json parse_json(const std::string& text, const std::string& source)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        // nlohmann reports the byte offset; turn it into a line and column.
        std::size_t line = 1, column = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw InputError(source + ": malformed JSON at line " + std::to_string(line) + ", column " +
                         std::to_string(column));
    }
}

const json& field(const json& obj, const char* key, const std::string& source)
{
    if (!obj.is_object())
        schema_error(source, "$", "expected an object");
    auto it = obj.find(key);
    if (it == obj.end())
        schema_error(source, key, "missing field");
    return *it;
}

Int integer(const json& v, const std::string& source, const std::string& path)
{
    if (v.is_number_unsigned())
        return Int(std::to_string(v.get<std::uint64_t>()));
    if (v.is_number_integer())
        return Int(std::to_string(v.get<std::int64_t>()));
    if (v.is_string()) {
        Int x;
        if (x.set_str(v.get<std::string>(), 10) == 0)
            return x;
    }
    schema_error(source, path, "expected an integer");
}

const json& array(const json& v, const std::string& source, const std::string& path)
{
    if (!v.is_array())
        schema_error(source, path, "expected an array");
    return v;
}

}  // namespace

FanDocument parse_fan_document(const std::string& text, const std::string& source)
{
    json j = parse_json(text, source);
    FanDocument doc;

    const json& dim = field(j, "dim", source);
    if (!dim.is_number_integer() || dim.get<std::int64_t>() < 1)
        schema_error(source, "dim", "expected a positive integer");
    doc.dim = dim.get<std::size_t>();

    const json& rays = array(field(j, "rays", source), source, "rays");
    for (std::size_t i = 0; i < rays.size(); ++i) {
        std::string path = "rays[" + std::to_string(i) + "]";
        const json& r = array(rays[i], source, path);
        if (r.size() != doc.dim)
            schema_error(source, path, "expected " + std::to_string(doc.dim) + " coordinates, got " +
                                           std::to_string(r.size()));
        std::vector<Int> coords;
        for (std::size_t k = 0; k < r.size(); ++k)
            coords.push_back(integer(r[k], source, path + "[" + std::to_string(k) + "]"));
        doc.rays.emplace_back(std::move(coords));
    }

    const json& cones = array(field(j, "max_cones", source), source, "max_cones");
    for (std::size_t i = 0; i < cones.size(); ++i) {
        std::string path = "max_cones[" + std::to_string(i) + "]";
        const json& c = array(cones[i], source, path);
        if (c.size() != doc.dim)
            schema_error(source, path, "expected " + std::to_string(doc.dim) + " ray indices (simplicial cone)");
        std::vector<std::size_t> idx;
        for (std::size_t k = 0; k < c.size(); ++k) {
            std::string p = path + "[" + std::to_string(k) + "]";
            if (!c[k].is_number_unsigned() && !(c[k].is_number_integer() && c[k].get<std::int64_t>() >= 0))
                schema_error(source, p, "expected a nonnegative ray index");
            std::size_t v = c[k].get<std::size_t>();
            if (v >= doc.rays.size())
                schema_error(source, p, "ray index " + std::to_string(v) + " out of range");
            idx.push_back(v);
        }
        doc.max_cones.push_back(std::move(idx));
    }
    return doc;
}

DivisorDocument parse_divisor_document(const std::string& text, const std::string& source)
{
    json j = parse_json(text, source);
    DivisorDocument doc;
    const json& coeffs = array(field(j, "coeffs", source), source, "coeffs");
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        doc.coeffs.push_back(integer(coeffs[i], source, "coeffs[" + std::to_string(i) + "]"));
    return doc;
}

FanPtr fan_from_document(const FanDocument& doc)
{
    try {
        return make_fan(doc.dim, doc.rays, doc.max_cones);
    } catch (const Error& e) {
        throw InputError(e.what());
    }
}

Divisor divisor_from_document(const FanPtr& fan, const DivisorDocument& doc, const std::string& source)
{
    if (doc.coeffs.size() != fan->num_rays())
        schema_error(source, "coeffs", "expected " + std::to_string(fan->num_rays()) + " coefficients, got " +
                                           std::to_string(doc.coeffs.size()));
    return Divisor(fan, doc.coeffs);
}

FanDocument to_document(const Fan& fan) { return {fan.dim(), fan.rays(), fan.max_cones()}; }

DivisorDocument to_document(const Divisor& d) { return {d.coeffs()}; }

namespace {

// Integers leave as JSON numbers when they fit, otherwise as decimal strings.
nlohmann::ordered_json int_json(const Int& x)
{
    if (x.fits_slong_p())
        return x.get_si();
    return x.get_str();
}

}  // namespace

std::string dump_fan_document(const FanDocument& doc)
{
    nlohmann::ordered_json j;
    j["dim"] = doc.dim;
    j["rays"] = nlohmann::ordered_json::array();
    for (const auto& r : doc.rays) {
        auto row = nlohmann::ordered_json::array();
        for (const auto& x : r.coords())
            row.push_back(int_json(x));
        j["rays"].push_back(row);
    }
    j["max_cones"] = doc.max_cones;
    return j.dump() + "\n";
}

std::string dump_divisor_document(const DivisorDocument& doc)
{
    nlohmann::ordered_json j;
    j["coeffs"] = nlohmann::ordered_json::array();
    for (const auto& x : doc.coeffs)
        j["coeffs"].push_back(int_json(x));
    return j.dump() + "\n";
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError(path + ": cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string sha256_hex(const std::string& bytes)
{
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (!EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr))
        throw Error("SHA-256 failed");
    std::ostringstream os;
    for (unsigned int i = 0; i < len; ++i)
        os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
    return os.str();
}

}  // namespace toricfs
