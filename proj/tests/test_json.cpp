// JSON encoding: lossless round trips and located decode errors.

#include <doctest.h>

#include "gool/backend.hpp"
#include "gool/build.hpp"
#include "gool/error.hpp"
#include "gool/gallery.hpp"
#include "gool/json_codec.hpp"
#include "support/test_util.hpp"

using namespace gool;
using Json = nlohmann::json;
namespace codec = gool::json;

namespace {

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

/// The decode error message, or "" when decoding succeeds.
std::string decode_error(const Json& doc) {
    try {
        (void)codec::decode(doc);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DecodeError);
        return e.what();
    }
    return "";
}

Json add_function_doc() { return codec::encode(find_example("addFunction")->package); }

} // namespace

TEST_CASE("every gallery program survives a round trip") {
    for (const auto& e : gallery()) {
        CAPTURE(e.name);
        Package back = codec::decode_text(codec::encode_text(e.package));
        CHECK(back == e.package);
        for (Target t : kAllTargets) CHECK(render_target(back, t) == render_target(e.package, t));
    }
}

TEST_CASE("the larger fixtures round-trip too") {
    for (const Package& pkg : {testutil::feature_tour(), testutil::pattern_test("On")}) {
        CHECK(codec::decode(codec::encode(pkg)) == pkg);
    }
}

TEST_CASE("auxiliary file requests are encoded") {
    Package pkg = find_example("helloWorld")->package;
    pkg.aux_files = {makefile(true), dox_config()};
    Json doc = codec::encode(pkg);
    CHECK(doc["aux"] == Json::parse(R"([{"kind":"makefile","docRule":true},{"kind":"doxConfig"}])"));
    CHECK(codec::decode(doc) == pkg);
}

TEST_CASE("encoding is stable text") {
    const Package& pkg = find_example("fooClassGetSet")->package;
    std::string text = codec::encode_text(pkg);
    CHECK(text == codec::encode_text(codec::decode_text(text)));
    CHECK(text.back() == '\n');
    CHECK(codec::encode(pkg)["version"] == codec::kFormatVersion);
}

TEST_CASE("syntax errors report a byte offset") {
    try {
        (void)codec::decode_text("{\"version\": 1,");
        FAIL("expected DecodeError");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DecodeError);
        CHECK(contains(e.what(), "malformed JSON at byte"));
    }
}

TEST_CASE("unsupported versions are rejected") {
    Json doc = add_function_doc();
    doc["version"] = 99;
    CHECK(contains(decode_error(doc), "version"));
    doc.erase("version");
    CHECK_FALSE(decode_error(doc).empty());
}

TEST_CASE("unknown operators are located by JSON pointer") {
    Json doc = add_function_doc();
    Json& ret = doc["program"]["modules"][0]["functions"][0]["body"][0][0];
    ret["value"]["operator"] = "xor";
    std::string msg = decode_error(doc);
    CHECK(contains(msg, "/program/modules/0/functions/0/body/0/0/value"));
    CHECK(contains(msg, "xor"));
}

TEST_CASE("unknown statement tags are rejected") {
    Json doc = add_function_doc();
    doc["program"]["modules"][0]["functions"][0]["body"][0][0]["stmt"] = "goto";
    CHECK(contains(decode_error(doc), "/program/modules/0/functions/0/body/0/0"));
}

TEST_CASE("missing fields and wrong types are reported") {
    Json doc = add_function_doc();
    doc["program"]["modules"][0].erase("name");
    CHECK(contains(decode_error(doc), "/program/modules/0"));
    Json doc2 = add_function_doc();
    doc2["program"]["modules"] = "none";
    CHECK(contains(decode_error(doc2), "/program/modules"));
}

TEST_CASE("builder checks apply to decoded input") {
    Json doc = add_function_doc();
    doc["program"]["modules"][0]["functions"][0]["name"] = "not an identifier";
    std::string msg = decode_error(doc);
    CHECK(contains(msg, "/program/modules/0/functions/0"));
    CHECK(contains(msg, "InvalidIdentifier"));

    Json dup = add_function_doc();
    auto& params = dup["program"]["modules"][0]["functions"][0]["params"];
    params[1] = params[0];
    CHECK(contains(decode_error(dup), "DuplicateParam"));
}

TEST_CASE("unknown types are rejected") {
    Json doc = add_function_doc();
    doc["program"]["modules"][0]["functions"][0]["params"][0]["var"]["type"] = "quaternion";
    CHECK(contains(decode_error(doc), "/program/modules/0/functions/0/params/0/var/type"));
}
