#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "ncmoments/json_io.hpp"

using namespace ncmoments;

TEST_CASE("rational json forms") {
    const Rational q(9, 8);
    const Json j = rational_to_json(q);
    CHECK(j.dump() == R"({"num":"9","den":"8"})");
    CHECK(rational_from_json(j) == q);

    CHECK(rational_from_json(Json::parse(R"("3/6")")) == Rational(1, 2));
    CHECK(rational_from_json(Json::parse(R"("-4")")) == Rational(-4));
    CHECK(rational_from_json(Json::parse("7")) == Rational(7));
    CHECK(rational_from_json(Json::parse(R"({"num":"-3","den":"9"})")) == Rational(-1, 3));
    // Big values survive the string representation.
    const Rational big(factorial(30), ipow(BigInt(7), 40));
    CHECK(rational_from_json(rational_to_json(big)) == big);

    CHECK_THROWS_AS(rational_from_json(Json::parse(R"({"num":"1"})")), InvalidArgument);
    CHECK_THROWS_AS(rational_from_json(Json::parse("1.5")), InvalidArgument);
    CHECK_THROWS_AS(rational_from_json(Json::parse("true")), InvalidArgument);
    CHECK_THROWS_AS(rational_from_json(Json::parse(R"("1/0")")), Error);
}

TEST_CASE("partition json round trip") {
    const PairPartition p(6, {{1, 6}, {2, 5}, {3, 4}});
    const Json j = partition_to_json(p);
    CHECK(j.dump() == "[[1,6],[2,5],[3,4]]");
    CHECK(partition_from_json(j) == p);
    CHECK(partition_from_json(Json::parse("[]")) == PairPartition());
    CHECK(partition_to_json(PairPartition()).dump() == "[]");

    for (const PairPartition& q : enumerate_nc2(8)) {
        CHECK(partition_from_json(partition_to_json(q)) == q);
    }

    CHECK_THROWS_AS(partition_from_json(Json::parse("{}")), InvalidArgument);
    CHECK_THROWS_AS(partition_from_json(Json::parse("[[1,2,3]]")), InvalidArgument);
    CHECK_THROWS_AS(partition_from_json(Json::parse("[[1,3]]")), Error);
    CHECK_THROWS_AS(partition_from_json(Json::parse("[[1,3],[2,4]]")), Error);
}

TEST_CASE("tree json round trips") {
    const OrderedTree t{{{1, 3}, {2}, {}, {}}};
    const Json j = tree_to_json(t);
    CHECK(j.dump() ==
          R"({"children":[{"children":[{"children":[]}]},{"children":[]}]})");
    CHECK(tree_from_json(j) == t);
    // Leaves may omit the children field on input.
    CHECK(tree_from_json(Json::parse(R"({"children":[{},{}]})")) ==
          OrderedTree{{{1, 2}, {}, {}}});

    const LabeledOrderedTree lt{OrderedTree{{{1}, {}}}, {2, 1}};
    const Json lj = labeled_tree_to_json(lt);
    CHECK(lj.dump() == R"({"label":2,"children":[{"label":1,"children":[]}]})");
    CHECK(labeled_tree_from_json(lj) == lt);

    for (const OrderedTree& shape : enumerate_ordered_trees(6)) {
        CHECK(tree_from_json(tree_to_json(shape)) == shape);
    }
    for (const LabeledOrderedTree& alt :
         enumerate_alternating(3, AlternationType::TypeI)) {
        CHECK(labeled_tree_from_json(labeled_tree_to_json(alt)) == alt);
    }

    CHECK_THROWS_AS(tree_from_json(Json::parse("[]")), InvalidArgument);
    CHECK_THROWS_AS(labeled_tree_from_json(Json::parse(R"({"children":[]})")),
                    InvalidArgument);
}

TEST_CASE("profile json round trips") {
    const Json j = profile_to_json(VarianceProfile::triangular_grid(2));
    CHECK(j.dump() == R"({"r":2,"widths":["1/2","1/2"],"v":[["0","1"],["0","0"]]})");
    const VarianceProfile back = profile_from_json(j);
    CHECK(back.r == 2);
    CHECK(back.value(0, 1) == Rational(1));
    CHECK(back.value(1, 0) == Rational(0));
    CHECK(back.width(0) == Rational(1, 2));

    // Omitted widths mean the uniform split; cells accept any rational form.
    const VarianceProfile uniform = profile_from_json(
        Json::parse(R"({"r":2,"v":[[1,"1/2"],[{"num":"2","den":"4"},0]]})"));
    CHECK(uniform.width(0) == Rational(1, 2));
    CHECK(uniform.width(1) == Rational(1, 2));
    CHECK(uniform.value(0, 1) == Rational(1, 2));
    CHECK(uniform.value(1, 0) == Rational(1, 2));

    const VarianceProfile custom(
        2, {{Rational(1, 2), Rational(2)}, {Rational(1, 3), Rational(0)}},
        {Rational(1, 3), Rational(2, 3)});
    const VarianceProfile rt = profile_from_json(profile_to_json(custom));
    CHECK(rt.r == custom.r);
    CHECK(rt.widths == custom.widths);
    CHECK(rt.values == custom.values);

    CHECK_THROWS_AS(profile_from_json(Json::parse(R"({"r":2})")), InvalidArgument);
    CHECK_THROWS_AS(profile_from_json(Json::parse(R"({"r":2,"v":[["1"]]})")), Error);
    // Widths that do not sum to 1 are rejected by the profile itself.
    CHECK_THROWS_AS(
        profile_from_json(
            Json::parse(R"({"r":2,"widths":["1/2","1/3"],"v":[["1","1"],["1","1"]]})")),
        InvalidArgument);
}

TEST_CASE("moment result golden output") {
    const auto result = eta_moment(StarWord::tt_power(3), OperatorSpec::triangular());
    const Json j = moment_result_to_json(result);
    // Field order and contribution order are fixed, so the serialized form is
    // byte-stable.
    const std::string expected =
        R"({"value":{"num":"9","den":"8"},"contributions":{)"
        R"("[[1,2],[3,4],[5,6]]":{"num":"1","den":"4"},)"
        R"("[[1,2],[3,6],[4,5]]":{"num":"5","den":"24"},)"
        R"("[[1,4],[2,3],[5,6]]":{"num":"5","den":"24"},)"
        R"("[[1,6],[2,3],[4,5]]":{"num":"1","den":"4"},)"
        R"("[[1,6],[2,5],[3,4]]":{"num":"5","den":"24"}}})";
    CHECK(j.dump() == expected);
    CHECK(j.dump() == moment_result_to_json(result).dump());
}

TEST_CASE("moment estimate field order") {
    MomentEstimate e;
    e.mean = 0.5;
    e.stderr_est = 0.0625;
    e.imag_mean = -0.25;
    e.trials = 10;
    e.n = 8;
    e.seed = 3;
    e.word = StarWord::tt_power(1);
    CHECK(moment_estimate_to_json(e).dump() ==
          R"({"word":"*1,1","n":8,"trials":10,"seed":3,)"
          R"("estimate":0.5,"stderr":0.0625,"imag_mean":-0.25})");
}

TEST_CASE("convergence report serializations") {
    ConvergenceRow row;
    row.n = 8;
    row.r = 0;
    row.trials = 10;
    row.seed = 3;
    row.estimate = 0.5;
    row.stderr_est = 0.0625;
    row.exact = Rational(1, 2);
    row.abs_gap = 0.0;
    const std::vector<ConvergenceRow> rows = {row};

    CHECK(convergence_rows_to_json(rows).dump() ==
          R"([{"n":8,"r":0,"trials":10,"seed":3,"estimate":0.5,"stderr":0.0625,)"
          R"("exact":{"num":"1","den":"2"},"abs_gap":0.0}])");
    CHECK(convergence_rows_to_csv(rows) ==
          "n,r,trials,seed,estimate,stderr,exact_num,exact_den,abs_gap\n"
          "8,0,10,3,0.5,0.0625,1,2,0\n");
    CHECK(convergence_rows_to_csv(rows) == convergence_rows_to_csv(rows));
    CHECK(convergence_rows_to_csv({}) ==
          "n,r,trials,seed,estimate,stderr,exact_num,exact_den,abs_gap\n");

    // A third of a unit is not dyadic; the shortest form must still read back
    // to the same double.
    ConvergenceRow ugly = row;
    ugly.estimate = 1.0 / 3.0;
    ugly.abs_gap = 0.1;
    const std::string csv = convergence_rows_to_csv({ugly});
    CHECK(csv.find("0.3333333333333333") != std::string::npos);
    CHECK(csv.find("0.1,") == std::string::npos);  // 0.1 only at line end
    CHECK(csv.find(",0.1\n") != std::string::npos);
}
