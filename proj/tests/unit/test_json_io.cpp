#include <doctest.h>

#include "msw/json_io.hpp"

using namespace msw;

TEST_CASE("symfunc JSON schema bytes") {
    // Htilde_(2,1) rendered through the SymFunc schema
    SymFunc f = htilde(Partition{2, 1}).as_symfunc();
    CHECK(symfunc_json(f).dump() ==
          "{\"basis\":\"s\",\"n\":3,\"coeffs\":{\"[3]\":\"1\",\"[2,1]\":"
          "\"q+t\",\"[1,1,1]\":\"q*t\"}}");
}

TEST_CASE("htilde JSON bytes") {
    CHECK(htilde_json(htilde(Partition{2})).dump() ==
          "{\"mu\":[2],\"coeffs\":{\"[2]\":\"1\",\"[1,1]\":\"q\"}}");
}

TEST_CASE("bigraded dimension table schema") {
    BigradedSpace d = dmu_basis(Partition{2, 1});
    json j = dims_json(Partition{2, 1}, d);
    CHECK(j["mu"] == json::array({2, 1}));
    CHECK(j["total"] == 6);
    CHECK(j["dims"]["(0,0)"] == 1);
    long sum = 0;
    for (const auto& [k, v] : j["dims"].items()) sum += v.get<long>();
    CHECK(sum == 6);
}

TEST_CASE("frobenius JSON carries the dims table") {
    json j = frobenius_json(bigraded_frobenius(Partition{2}), 2);
    CHECK(j["dims"]["(0,0)"] == 1);
    CHECK(j["dims"]["(0,1)"] == 1);
    CHECK(j["total"] == 2);
    CHECK(j["slices"]["(0,1)"]["coeffs"]["[1,1]"] == "1");
}

TEST_CASE("certificate schema") {
    json j = certificate_json("freeness", true, std::nullopt);
    CHECK(j.dump() ==
          "{\"check\":\"freeness\",\"pass\":true,\"first_discrepancy\":null}");
}

TEST_CASE("csv flattening") {
    json j;
    j["n"] = 2;
    j["dims"] = {{"(0,0)", 1}};
    std::string csv = to_csv(j);
    CHECK(csv == "n,2\ndims.(0,0),1\n");
}
