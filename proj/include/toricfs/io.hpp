#pragma once

#include "toricfs/divisor.hpp"

#include <string>
#include <vector>

namespace toricfs {

/// Malformed or schema-violating input. The CLI maps it to exit code 2.
class InputError : public Error {
public:
    using Error::Error;
};

struct FanDocument {
    std::size_t dim = 0;
    std::vector<LatticeVector> rays;
    std::vector<std::vector<std::size_t>> max_cones;  // 0-based
};

struct DivisorDocument {
    std::vector<Int> coeffs;
};

/// `source` names the input in error messages.
FanDocument parse_fan_document(const std::string& text, const std::string& source = "<fan>");
DivisorDocument parse_divisor_document(const std::string& text, const std::string& source = "<divisor>");

FanPtr fan_from_document(const FanDocument& doc);
Divisor divisor_from_document(const FanPtr& fan, const DivisorDocument& doc, const std::string& source = "<divisor>");

FanDocument to_document(const Fan& fan);
DivisorDocument to_document(const Divisor& d);
std::string dump_fan_document(const FanDocument& doc);
std::string dump_divisor_document(const DivisorDocument& doc);

std::string read_file(const std::string& path);

/// Lowercase hex SHA-256 of the bytes.
std::string sha256_hex(const std::string& bytes);

}  // namespace toricfs
