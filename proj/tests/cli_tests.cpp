// End-to-end tests of the installed CLI: output content, determinism,
// exit codes, and structural validation of JSON output against the shipped
// schema files.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skewcap/forms.hpp"
#include "skewcap/jsonio.hpp"

#include <json.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <string>

using nlohmann::json;

namespace {

std::string run_cli(const std::string& args, int& exit_code) {
    const std::string cmd = std::string(SKEWCAP_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    const int status = pclose(pipe);
    exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return out;
}

json load_schema(const std::string& name) {
    std::ifstream in(std::string(SKEWCAP_SOURCE_DIR) + "/schemas/" + name);
    REQUIRE(in.good());
    json j;
    in >> j;
    return j;
}

// Structural validation: type, required, properties, additionalProperties,
// items, enum. Enough to pin the shipped report shapes.
bool validates(const json& value, const json& schema, std::string& why) {
    if (schema.contains("type")) {
        const std::string t = schema["type"];
        const bool ok = (t == "object" && value.is_object()) || (t == "array" && value.is_array()) ||
                        (t == "string" && value.is_string()) ||
                        (t == "integer" && value.is_number_integer()) ||
                        (t == "number" && value.is_number()) || (t == "boolean" && value.is_boolean());
        if (!ok) {
            why = "expected type " + t + " got " + value.dump().substr(0, 60);
            return false;
        }
    }
    if (schema.contains("enum")) {
        bool found = false;
        for (const auto& v : schema["enum"]) found = found || v == value;
        if (!found) {
            why = "value " + value.dump() + " not in enum";
            return false;
        }
    }
    if (value.is_object()) {
        if (schema.contains("required"))
            for (const auto& key : schema["required"])
                if (!value.contains(key.get<std::string>())) {
                    why = "missing required key " + key.get<std::string>();
                    return false;
                }
        const json props = schema.value("properties", json::object());
        for (auto it = value.begin(); it != value.end(); ++it) {
            if (props.contains(it.key())) {
                if (!validates(it.value(), props[it.key()], why)) return false;
            } else if (schema.contains("additionalProperties") && schema["additionalProperties"].is_object()) {
                if (!validates(it.value(), schema["additionalProperties"], why)) return false;
            }
        }
    }
    if (value.is_array() && schema.contains("items")) {
        for (const auto& elem : value)
            if (!validates(elem, schema["items"], why)) return false;
    }
    return true;
}

void check_against_schema(const std::string& payload, const std::string& schema_file) {
    const json value = json::parse(payload);
    const json schema = load_schema(schema_file);
    std::string why;
    const bool ok = validates(value, schema, why);
    CAPTURE(schema_file);
    CAPTURE(why);
    CHECK(ok);
}

std::string fixture(const std::string& name) {
    return std::string(SKEWCAP_SOURCE_DIR) + "/tests/fixtures/" + name;
}

}  // namespace

TEST_CASE("verify text output carries the closed form") {
    int rc = 0;
    const std::string out = run_cli("verify --n 2", rc);
    CHECK(rc == 0);
    CHECK(out.find("x[1,2] d[1,2] + u^2 + 1/2") != std::string::npos);
    CHECK(out.find("PASS") != std::string::npos);
}

TEST_CASE("verify json validates against the shipped schema") {
    int rc = 0;
    const std::string out = run_cli("verify --n 3 --backend forms --format json", rc);
    CHECK(rc == 0);
    check_against_schema(out, "verify_report.schema.json");
    const json j = json::parse(out);
    CHECK(j["pass"] == true);
    CHECK(j["n"] == 3);
    CHECK(j["backend"] == "forms");
}

TEST_CASE("gamma output") {
    int rc = 0;
    const std::string text = run_cli("gamma --n 4 --k 1", rc);
    CHECK(rc == 0);
    // Six two-subsets of [4].
    size_t count = 0;
    for (size_t p = text.find("x["); p != std::string::npos; p = text.find("x[", p + 1)) ++count;
    CHECK(count == 6);

    const std::string out = run_cli("gamma --n 4 --k 1 --format json", rc);
    CHECK(rc == 0);
    check_against_schema(out, "gamma_report.schema.json");
    check_against_schema(json::parse(out)["element"].dump(), "weyl_element.schema.json");
}

TEST_CASE("hermite output") {
    int rc = 0;
    const std::string out = run_cli("hermite --m 3", rc);
    CHECK(rc == 0);
    CHECK(out.find("8 x^3 - 12 x") != std::string::npos);
    CHECK(out.find("u^3 + 3/2 u") != std::string::npos);
}

TEST_CASE("symbol command") {
    int rc = 0;
    run_cli("symbol --n 4", rc);
    CHECK(rc == 0);
}

TEST_CASE("pfaffian command reads fixtures") {
    int rc = 0;
    const std::string out = run_cli("pfaffian --file " + fixture("phi_tilde_n2.mat"), rc);
    CHECK(rc == 0);
    CHECK(out.find("x[1,2] d[1,2] + u^2 + 1/2") != std::string::npos);

    const std::string js =
        run_cli("pfaffian --file " + fixture("phi_tilde_n2.mat") + " --backend forms --format json", rc);
    CHECK(rc == 0);
    check_against_schema(js, "pfaffian_report.schema.json");

    const std::string scalar = run_cli("pfaffian --file " + fixture("scalar_j4.mat") + " --expect 1", rc);
    CHECK(rc == 0);
    CHECK(scalar.find("expectation holds") != std::string::npos);
}

TEST_CASE("pfaffian backends agree from the command line") {
    for (const std::string backend : {"full", "restricted", "forms"}) {
        int rc = 0;
        const std::string out =
            run_cli("pfaffian --file " + fixture("phi_tilde_n2.mat") + " --backend " + backend, rc);
        CHECK(rc == 0);
        CHECK(out.find("x[1,2] d[1,2] + u^2 + 1/2") != std::string::npos);
    }
}

TEST_CASE("suite json validates and repeated runs are byte-identical") {
    int rc1 = 0, rc2 = 0;
    const std::string a = run_cli("suite --seed 42 --format json", rc1);
    const std::string b = run_cli("suite --seed 42 --format json", rc2);
    CHECK(rc1 == 0);
    CHECK(rc2 == 0);
    CHECK(a == b);
    check_against_schema(a, "suite_report.schema.json");

    const std::string t1 = run_cli("suite --seed 7", rc1);
    const std::string t2 = run_cli("suite --seed 7", rc2);
    CHECK(t1 == t2);
    CHECK(rc1 == 0);
}

TEST_CASE("bench json validates") {
    int rc = 0;
    const std::string out = run_cli("bench --n-lo 1 --n-hi 3 --format json", rc);
    CHECK(rc == 0);
    check_against_schema(out, "bench_report.schema.json");
}

TEST_CASE("exit code contract") {
    int rc = 0;
    run_cli("verify --n 0", rc);
    CHECK(rc == 2);
    run_cli("verify --n 2 --backend nonsense", rc);
    CHECK(rc == 2);
    run_cli("pfaffian --file /nonexistent.mat", rc);
    CHECK(rc == 2);
    run_cli("pfaffian --file " + fixture("malformed.mat"), rc);
    CHECK(rc == 2);
    run_cli("pfaffian --file " + fixture("phi_tilde_n2.mat") + " --expect \"x[1,2]\"", rc);
    CHECK(rc == 1);
    run_cli("verify --n 9 --max-dim 12", rc);
    CHECK(rc == 2);
    run_cli("nope", rc);
    CHECK(rc == 2);
}

TEST_CASE("library json forms mirror the maps") {
    using namespace skewcap;
    const json up = to_json(UPoly::monomial(2, Rational(1)) + UPoly(Rational(1, 2)));
    CHECK(up == json({{"2", "1"}, {"0", "1/2"}}));

    const json el = to_json(weyl_mul(signed_generator(2, 1, 2, GenKind::Mult),
                                     signed_generator(2, 1, 2, GenKind::Deriv)));
    check_against_schema(el.dump(), "weyl_element.schema.json");
    CHECK(el["terms"][0]["x"] == json({{"1,2", 1}}));
    CHECK(el["terms"][0]["d"] == json({{"1,2", 1}}));

    const json om = to_json(omega(2));
    CHECK(om["vdim"] == 4);
    bool found = false;
    for (const auto& t : om["terms"]) found = found || t["e"] == json::array({1, -1});
    CHECK(found);
}

TEST_CASE("pfaffian --show prints an aligned grid") {
    int rc = 0;
    const std::string out = run_cli("pfaffian --file " + fixture("phi_tilde_n2.mat") + " --show", rc);
    CHECK(rc == 0);
    CHECK(out.find("[ 0") != std::string::npos);
    CHECK(out.find("-x[1,2]") != std::string::npos);
}

TEST_CASE("malformed input diagnostics carry position") {
    int rc = 0;
    const std::string cmd = std::string(SKEWCAP_CLI_PATH) + " pfaffian --file " +
                            fixture("malformed.mat") + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    pclose(pipe);
    CHECK(out.find("line 2") != std::string::npos);
}
