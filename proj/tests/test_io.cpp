#include "doctest.h"

#include <filesystem>

#include "coev/json_io.hpp"
#include "support/oracles.hpp"

using namespace coev;
using namespace coev::testing;

namespace {

const std::filesystem::path kRepoDir = COEV_REPO_DIR;

}  // namespace

TEST_CASE("every bundled fixture parses and validates") {
    for (const char* name : {"coin", "deterministic", "interference3", "cancellation4"}) {
        CAPTURE(name);
        const auto text = read_file(kRepoDir / "fixtures" / (std::string(name) + ".json"));
        const SystemDescription desc = parse_system_description(text);
        CHECK(desc.name == name);
        const Measure mu = build_measure(desc);
        CHECK(validate(mu).valid());
    }
}

TEST_CASE("system parsing rejects malformed documents with positions") {
    CHECK_THROWS_AS(parse_system_description("{"), ParseError);
    try {
        parse_system_description("{\"name\": }");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.offset() != ParseError::npos);
    }

    // Structurally valid JSON, semantically wrong shapes.
    CHECK_THROWS_AS(parse_system_description("[]"), ParseError);
    CHECK_THROWS_AS(parse_system_description("{\"name\":\"x\"}"), ParseError);
    CHECK_THROWS_AS(parse_system_description(
                        R"({"name":"x","histories":[],"measure":{"type":"classical","weights":[]}})"),
                    ParseError);
    CHECK_THROWS_AS(
        parse_system_description(
            R"({"name":"x","histories":["a"],"measure":{"type":"wavelet","weights":["1"]}})"),
        ParseError);
    CHECK_THROWS_AS(
        parse_system_description(
            R"({"name":"x","histories":["a"],"measure":{"type":"classical","weights":["1"]},"normalize":"yes"})"),
        ParseError);
}

TEST_CASE("the exact-value rule: no float ever crosses the boundary") {
    // A numeric weight is rejected even when it is an integer.
    CHECK_THROWS_AS(
        parse_system_description(
            R"({"name":"x","histories":["a"],"measure":{"type":"classical","weights":[1]}})"),
        ParseError);
    CHECK_THROWS_AS(
        parse_system_description(
            R"({"name":"x","histories":["a"],"measure":{"type":"classical","weights":["0.5"]}})"),
        ParseError);
    CHECK_THROWS_AS(
        parse_system_description(
            R"({"name":"x","histories":["a","b"],"measure":{"type":"quantum-amplitude","amplitudes":[{"re":"1","im":0},{"re":"0","im":"0"}]}})"),
        ParseError);
}

TEST_CASE("measure construction catches mismatched shapes as input errors") {
    const auto desc = parse_system_description(
        R"({"name":"x","histories":["a","b"],"measure":{"type":"classical","weights":["1"]}})");
    CHECK_THROWS_AS(build_measure(desc), ParseError);

    const auto ragged = parse_system_description(
        R"({"name":"x","histories":["a","b"],"measure":{"type":"quantum-decoherence","decoherence":[[{"re":"1","im":"0"}]]}})");
    CHECK_THROWS_AS(build_measure(ragged), ParseError);
}

TEST_CASE("co-event documents take exactly one of support or table") {
    CHECK(parse_coevent_document(R"({"support": ["a","b"]})").support.has_value());
    CHECK(parse_coevent_document(R"({"table": "0101"})").table.has_value());
    CHECK_THROWS_AS(parse_coevent_document(R"({})"), ParseError);
    CHECK_THROWS_AS(parse_coevent_document(R"({"support": ["a"], "table": "01"})"), ParseError);
    CHECK_THROWS_AS(parse_coevent_document(R"({"support": []})"), ParseError);

    const SpacePtr space = HistorySpace::make({"a", "b"});
    CHECK(build_coevent(parse_coevent_document(R"({"support": ["a"]})"), space) ==
          classical_coevent(space, 0));
    CHECK_THROWS_AS(build_coevent(parse_coevent_document(R"({"support": ["zzz"]})"), space),
                    ParseError);
    CHECK_THROWS_AS(build_coevent(parse_coevent_document(R"({"table": "01"})"), space),
                    ParseError);  // wrong length for n=2
    CHECK_THROWS_AS(build_coevent(parse_coevent_document(R"({"table": "1111"})"), space),
                    ParseError);  // constant map
}

TEST_CASE("document hashing is stable and well-known on the empty string") {
    CHECK(document_hash("") == "fnv1a64:cbf29ce484222325");
    CHECK(document_hash("abc") == document_hash("abc"));
    CHECK(document_hash("abc") != document_hash("abd"));
}

TEST_CASE("serialized solve output is byte-deterministic across threads") {
    const auto text = read_file(kRepoDir / "fixtures" / "interference3.json");
    const Measure mu = build_measure(parse_system_description(text));

    const auto render = [&](unsigned threads) {
        return solve_json("interference3", document_hash(text), solve(mu, threads),
                          equivalence_report(mu, threads));
    };
    const std::string once = render(1);
    CHECK(once == render(1));
    CHECK(once == render(2));
    CHECK(once == render(3));

    CHECK(once.find("\"minimal_supports\"") != std::string::npos);
    CHECK(once.find("\"h0\"") != std::string::npos);
}

TEST_CASE("a full decoherence matrix behaves like its amplitude form") {
    // The rank-1 matrix of the interference amplitudes, written out in full.
    const std::string matrix_doc = R"({
      "name": "interference3-matrix",
      "histories": ["h0", "h1", "h2"],
      "measure": {
        "type": "quantum-decoherence",
        "decoherence": [
          [{"re": "1", "im": "0"}, {"re": "-1", "im": "0"}, {"re": "1", "im": "0"}],
          [{"re": "-1", "im": "0"}, {"re": "1", "im": "0"}, {"re": "-1", "im": "0"}],
          [{"re": "1", "im": "0"}, {"re": "-1", "im": "0"}, {"re": "1", "im": "0"}]
        ]
      }
    })";
    const Measure from_matrix = build_measure(parse_system_description(matrix_doc));
    CHECK(validate(from_matrix).valid());

    const Measure from_amplitudes =
        build_measure(parse_system_description(read_file(kRepoDir / "fixtures" / "interference3.json")));
    for (EventMask mask = 0; mask < 8; ++mask) {
        CHECK(from_matrix.evaluate_mask(mask) == from_amplitudes.evaluate_mask(mask));
    }
    CHECK(masks_of(solve(from_matrix).minimal_supports) ==
          masks_of(solve(from_amplitudes).minimal_supports));
}

TEST_CASE("complex off-diagonal phases survive the round trip") {
    const SpacePtr space = HistorySpace::make({"a", "b"});
    const QuantumMeasure mu = QuantumMeasure::from_amplitudes(
        space,
        {ComplexRational{Rational(1, 2), Rational(1, 2)}, ComplexRational{Rational(1, 2), Rational(-1, 2)}},
        /*normalize=*/true);
    CHECK(validate_quantum(mu).valid());
    CHECK(mu.decoherence()[0][1].im != 0);  // a genuinely complex phase
    CHECK(mu.total() == 1);
}

TEST_CASE("reading a missing file is an input error") {
    CHECK_THROWS_AS(read_file(kRepoDir / "fixtures" / "no-such-file.json"), ParseError);
}
