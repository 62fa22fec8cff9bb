#include "doctest.h"

#include "toricfs/corpus.hpp"
#include "toricfs/io.hpp"

using namespace toricfs;

TEST_CASE("canonical P^2 document")
{
    FanDocument d = parse_fan_document(R"({"dim":2,"rays":[[1,0],[0,1],[-1,-1]],"max_cones":[[0,1],[1,2],[0,2]]})");
    FanPtr f = fan_from_document(d);
    CHECK(f->rays() == corpus::projective_space(2)->rays());
    CHECK(f->max_cones() == corpus::projective_space(2)->max_cones());
}

TEST_CASE("schema errors name the field")
{
    auto message = [](const std::string& text) {
        try {
            parse_fan_document(text, "t");
        } catch (const InputError& e) {
            return std::string(e.what());
        }
        return std::string();
    };
    CHECK(message(R"({"rays":[],"max_cones":[]})") == "t: dim: missing field");
    CHECK(message(R"({"dim":2,"rays":[[1,0],[0,"x"]],"max_cones":[]})") == "t: rays[1][1]: expected an integer");
    CHECK(message(R"({"dim":2,"rays":[[1,0]],"max_cones":[[0,3]]})") == "t: max_cones[0][1]: ray index 3 out of range");
    CHECK(message(R"({"dim":2,"rays":[[1,0]],"max_cones":[[0]]})").find("max_cones[0]") != std::string::npos);
    CHECK(message("{\"dim\":2,\n\"rays\":[[1,0],\n}") == "t: malformed JSON at line 3, column 1");
    CHECK(message(R"({"dim":0,"rays":[],"max_cones":[]})") == "t: dim: expected a positive integer");
}

TEST_CASE("divisor documents")
{
    FanPtr p2 = corpus::projective_space(2);
    DivisorDocument d = parse_divisor_document(R"({"coeffs":[0,0,2]})");
    CHECK(divisor_from_document(p2, d).coeffs() == std::vector<Int>{0, 0, 2});
    CHECK_THROWS_AS(divisor_from_document(p2, parse_divisor_document(R"({"coeffs":[0,2]})")), InputError);
    DivisorDocument big = parse_divisor_document(R"({"coeffs":["123456789012345678901234567890",0,0]})");
    CHECK(big.coeffs[0] == Int("123456789012345678901234567890"));
    CHECK(parse_divisor_document(dump_divisor_document(big)).coeffs == big.coeffs);
}

TEST_CASE("digests")
{
    CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    CHECK_THROWS_AS(read_file("/nonexistent/file.json"), InputError);
}
