#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>

#include "goncarov/commands.hpp"
#include "goncarov/error.hpp"
#include "goncarov/json_io.hpp"
#include "goncarov/verify.hpp"
#include "support.hpp"

using namespace gonc;
using gonc::test::P;

TEST_CASE("grid text") {
    const Grid sym = parse_grid("z", 3);
    CHECK(sym[2] == P("z2"));
    CHECK(parse_grid("1,2, 3", 3)[1] == MultiPoly(2));
    CHECK(parse_grid(R"([1, "z1", "a+2*b"])", 3)[2] == P("a + 2*b"));
    CHECK_THROWS_AS(parse_grid("1,,2", 3), Error);
    CHECK(parse_integer_list("1,2,4,5") == std::vector<long>{1, 2, 4, 5});
    CHECK_THROWS_AS(parse_integer_list("1,x"), Error);
}

TEST_CASE("assignments") {
    const Assignment ys = expand_assignments("all=1", 'y', 3);
    CHECK(ys.size() == 3);
    CHECK(ys.at(VarId::y(3)) == MultiPoly(1));
    const Assignment ws = expand_assignments("all=1", 'w', 3);
    CHECK(ws.size() == 2);
    CHECK_FALSE(ws.count(VarId::w(1)));
    const Assignment mixed = expand_assignments("y3=2,4=0", 'y', 6);
    CHECK(mixed.at(VarId::y(3)) == MultiPoly(2));
    CHECK(mixed.at(VarId::y(4)).is_zero());
}

TEST_CASE("families from JSON") {
    const auto inv = family_from_json(nlohmann::json::parse(R"({"d": {"1": 1, "2": 1}})"), "involutions");
    CHECK(inv.deck(2) == 1);
    CHECK(inv.deck(3) == 0);
    CHECK(family_from_json(nlohmann::json::parse(R"({"closed_form": "cycles"})")).deck(4) == 6);
    CHECK_THROWS_AS(family_from_json(nlohmann::json::parse(R"({"d": {"0": 1}})")), Error);
    CHECK_THROWS_AS(load_family("forests"), Error);

    const std::string path = (std::filesystem::temp_directory_path() / "gonc_test_family.json").string();
    std::ofstream(path) << R"({"d": {"1": 1, "2": 1}})";
    ComputeRequest r{ComputeKind::Hand, 4, "@" + path};
    r.at = "x=1";
    CHECK(compute_poly(r) == MultiPoly(10));
}

TEST_CASE("compute examples") {
    CHECK(compute_poly({ComputeKind::Zeta, 2}) == P("x^2 + w2*x"));
    CHECK(compute_poly({ComputeKind::Zeta, 2}).pretty() == "x^2 + w2*x");

    ComputeRequest g{ComputeKind::Goncarov, 3, "set_partitions"};
    g.grid = "1,2,3";
    g.negate_grid = true;
    g.y = "all=1";
    g.at = "x=0";
    CHECK(compute_poly(g) == MultiPoly(29));

    // -p_2(-z0) + 2 p_1(-z0) p_1(-z1) for p_n = x^n
    ComputeRequest c{ComputeKind::GoncarovConstant, 2};
    c.basic = "monomials";
    CHECK(compute_poly(c) == P("-(-z0)^2 + 2*(-z0)*(-z1)"));

    CHECK(compute_poly({ComputeKind::Mobius, 3}) == P("x^3 - 3*w2*x^2 + (3*w2^2 - w3)*x"));
    CHECK(compute_poly({ComputeKind::Type, 4, "two_regular"}) == P("3*y4*x"));
    CHECK_THROWS_AS(parse_compute_kind("stirling"), Error);
    CHECK(to_string(parse_compute_kind("goncarov-constant")) == "goncarov-constant");
}

TEST_CASE("compute output survives a JSON round trip") {
    for (const auto kind : {ComputeKind::Zeta, ComputeKind::Mobius, ComputeKind::Goncarov, ComputeKind::GoncarovConstant}) {
        for (unsigned n = 0; n <= 4; ++n) {
            ComputeRequest r{kind, n};
            const auto j = compute_json(r);
            CHECK(j.at("n") == n);
            const auto again = nlohmann::json::parse(j.dump());
            CHECK(poly_from_json(again.at("result")) == compute_poly(r));
            CHECK(poly_to_json(poly_from_json(again.at("result"))) == j.at("result"));
        }
    }
}

TEST_CASE("tables") {
    const std::string a = table_csv(TableKind::A030019, 6);
    CHECK(a.rfind("n,value,provenance\n", 0) == 0);
    CHECK(a.find("3,29,paper-printed") != std::string::npos);
    CHECK(a.find("5,4447,oracle-computed") != std::string::npos);

    const std::string b = table_csv(TableKind::PaperGoldens, 0, "b_n");
    CHECK(std::count(b.begin(), b.end(), '\n') == 5);
    CHECK(b.find("erratum-candidate") == std::string::npos);

    const std::string tr = table_csv(TableKind::PaperGoldens, 0, "two_regular");
    CHECK(tr.find("h_4,3*y4*x,2*y4*x,erratum-candidate") != std::string::npos);
    CHECK(tr.find("t_4,3*y4*x - 3*y4*z0,3*y3*x - 3*y3*z0,erratum-candidate") != std::string::npos);
    CHECK(tr.find("h_6,10*y3^2*x^2 + 60*y6*x,10*y3^2*x^2 + 60*y6*x,match") != std::string::npos);
    CHECK_THROWS_AS(parse_table_kind("oeis"), Error);
}

TEST_CASE("verify all covers every operation") {
    const auto reports = run_verify("all", VerifyOptions{0, {}, 0, true});
    std::set<std::string> covered, suites;
    for (const auto& r : reports) {
        CHECK_MESSAGE(r.ok, r.suite << ": " << r.name << ": " << r.detail);
        covered.insert(r.ops.begin(), r.ops.end());
        suites.insert(r.suite);
    }
    for (const auto& op : operation_names()) CHECK_MESSAGE(covered.count(op), "not exercised: " << op);
    CHECK(suites.size() + 1 == verify_suite_names().size());
    CHECK_THROWS_AS(run_verify("nope"), Error);
}

TEST_CASE("verify reports failures with a counterexample") {
    // A repeated node violates the decomposition hypothesis.
    VerifyOptions o;
    o.n_max = 3;
    o.grid = {2, 2, 3};
    const auto reports = run_verify("parking", o);
    const auto bad = std::find_if(reports.begin(), reports.end(), [](const CheckReport& r) { return !r.ok; });
    REQUIRE(bad != reports.end());
    CHECK(bad->name == "decomposition by parking prefix");
    CHECK(bad->detail.find("HypothesisViolated") != std::string::npos);
}
