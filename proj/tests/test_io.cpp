#include <doctest.h>

#include <fstream>
#include <sstream>

#include "paramodular/io.hpp"
#include "paramodular/rowsuite.hpp"
#include "paramodular/transfer.hpp"
#include "paramodular/packets.hpp"
#include "paramodular/tables.hpp"

using namespace paramodular;

namespace {

const char* kSplitExample = R"({
  "kind": "split",
  "p": 7,
  "pi1": {"kind": "principal_series", "alpha": {"name": "a", "cond": 0, "value_at_unif": "a"}},
  "pi2": {"kind": "steinberg", "alpha": {"name": "b", "cond": 0, "value_at_unif": "b", "quadratic": true}},
  "symbols": ["a", "b"]
})";

const char* kNonSplitExample = R"({
  "kind": "nonsplit",
  "place": {"D": 5, "p": 2},
  "pi0": {"kind": "supercuspidal", "label": "sigma", "cond": 2, "eps_half": -1,
          "galois_invariant": false},
  "symbols": []
})";

} // namespace

TEST_CASE("inducing files drive the table lookup") {
    io::InducingFile split = io::parse_inducing(kSplitExample);
    ParamodularInvariants inv = paramodular_invariants(split.data);
    CHECK(inv.row_id == "IIa-unr-unr");
    CHECK(inv.N == 1);

    io::InducingFile ns = io::parse_inducing(kNonSplitExample);
    ParamodularInvariants inv2 = paramodular_invariants(ns.data);
    CHECK(inv2.row_id == "XIII*");
    CHECK(inv2.N == 4);
    PacketDescriptor pd = classify_packet(ns.data);
    CHECK(pd.group_labels == std::vector<std::string>{"XIII*"});
}

TEST_CASE("inducing serialization round-trips byte-identically") {
    for (const char* text : {kSplitExample, kNonSplitExample}) {
        io::InducingFile f = io::parse_inducing(text);
        std::string canonical = io::serialize_inducing(f);
        io::InducingFile g = io::parse_inducing(canonical);
        CHECK(io::serialize_inducing(g) == canonical);
    }
}

TEST_CASE("hilbert input round-trips byte-identically") {
    const char* text = R"({
      "field": {"D": 5},
      "n": 1,
      "places": [
        {"p": 2, "index": 1, "val_level": 1, "lambda": "s2"},
        {"p": 5, "index": 1, "val_level": 2,
         "rep": {"kind": "supercuspidal", "label": "sigma5", "cond": 2, "eps_half": 1,
                 "galois_invariant": false}}
      ],
      "symbols": ["s2"]
    })";
    HilbertFormInput in = io::parse_hilbert_input(text);
    CHECK(in.field.d_E == 5);
    CHECK(in.n == 1);
    CHECK(in.places.size() == 2);
    std::string canonical = io::serialize_hilbert_input(in);
    HilbertFormInput in2 = io::parse_hilbert_input(canonical);
    CHECK(io::serialize_hilbert_input(in2) == canonical);
}

TEST_CASE("report JSON re-parses into an equal report") {
    const char* text = R"({
      "field": {"D": 5}, "n": 1,
      "places": [{"p": 2, "index": 1, "val_level": 1, "lambda": "s2"},
                 {"p": 11, "index": 1, "val_level": 1, "lambda": "s11"}],
      "symbols": ["s11", "s2"]
    })";
    HilbertFormInput in = io::parse_hilbert_input(text);
    SiegelFormReport rep = global_report(in);
    CHECK(!rep.global.notes.empty());
    std::string j = io::report_to_json(rep);
    SiegelFormReport back = io::report_from_json(j);
    CHECK(back == rep);
    CHECK(io::report_to_json(back) == j);
    CHECK(io::report_to_text(rep).find("weight k = 3") != std::string::npos);
}

TEST_CASE("schema violations carry field paths") {
    auto expect_bad = [](const std::string& text, const std::string& needle) {
        try {
            io::parse_inducing(text);
            FAIL("expected a schema error for ", needle);
        } catch (const CalcError& e) {
            CHECK(e.code() == ErrorCode::BadInput);
            INFO("message: ", e.what());
            CHECK(std::string(e.what()).find(needle) != std::string::npos);
        }
    };
    expect_bad("{", "JSON");
    expect_bad(R"({"kind": "split", "p": 7})", "$.pi1");
    expect_bad(R"({"kind": "wedge"})", "$.kind");
    expect_bad(R"({"kind": "split", "p": 7, "symbols": ["a"],
                   "pi1": {"kind": "principal_series",
                           "alpha": {"name": "a", "value_at_unif": "a"}},
                   "pi2": {"kind": "unknown"}})",
               "$.pi2.kind");
    // undeclared symbol
    expect_bad(R"({"kind": "split", "p": 7,
                   "pi1": {"kind": "principal_series",
                           "alpha": {"name": "a", "value_at_unif": "a"}},
                   "pi2": {"kind": "steinberg",
                           "alpha": {"name": "b", "value_at_unif": "b", "quadratic": true}},
                   "symbols": ["b"]})",
               "symbol 'a'");
    // reserved symbol declarations
    expect_bad(R"({"kind": "split", "p": 7, "symbols": ["q"]})", "reserved");

    try {
        io::parse_hilbert_input(R"({"field": {"D": 5}, "n": 0,
            "places": [{"p": 2, "val_level": 0, "lambda": "x",
                        "rep": {"kind": "supercuspidal", "label": "t", "cond": 2, "eps_half": 1}}],
            "symbols": ["x"]})");
        FAIL("expected a schema error");
    } catch (const CalcError& e) {
        CHECK(std::string(e.what()).find("$.places[0]") != std::string::npos);
    }

    // a split prime cannot head a non-split file
    try {
        io::parse_inducing(R"({"kind": "nonsplit", "place": {"D": 5, "p": 11},
            "pi0": {"kind": "supercuspidal", "label": "s", "cond": 2, "eps_half": 1}})");
        FAIL("expected a schema error");
    } catch (const CalcError& e) {
        CHECK(std::string(e.what()).find("$.place") != std::string::npos);
    }
}

TEST_CASE("shipped data files are canonical") {
    const std::string dir = PARAMODULAR_DATA_DIR;
    auto slurp = [](const std::string& path) {
        std::ifstream in(path, std::ios::binary);
        REQUIRE(in.good());
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    for (const char* name : {"consani-scholten.json", "synthetic-d5.json", "synthetic-d3.json"}) {
        std::string text = slurp(dir + "/" + name);
        HilbertFormInput in = io::parse_hilbert_input(text);
        CHECK(io::serialize_hilbert_input(in) == text);
        // every shipped form feeds the full pipeline
        SiegelFormReport rep = global_report(in);
        CHECK(rep.global.sign_consistent);
        CHECK(rep.global.archimedean_ok);
        for (const auto& [p, pr] : rep.per_prime) {
            InducingData data = build_local_data(in, p);
            CHECK(verify_L_equality(data).ok);
        }
    }
    std::string text = slurp(dir + "/inducing-twin-steinberg.json");
    io::InducingFile f = io::parse_inducing(text);
    CHECK(io::serialize_inducing(f) == text);
}
