#include "blockade/ext_calculus.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace blockade;

namespace {

EvalModuleDescriptor desc(std::vector<std::pair<std::string, std::vector<long long>>> items) {
    EvalModuleDescriptor d;
    for (auto& [p, w] : items)
        d.assignments.emplace(p, Weight(std::move(w)));
    return d;
}

}  // namespace

TEST_CASE("ExtDimension construction and printing") {
    CHECK(ExtDimension::finite(0) == ExtDimension{false, 0});
    CHECK(ExtDimension::finite(3) == ExtDimension{false, 3});
    CHECK(ExtDimension::infinity().infinite);
    CHECK(to_string(ExtDimension::finite(5)) == "5");
    CHECK(to_string(ExtDimension::infinity()) == "infinite");
    CHECK_THROWS_AS(ExtDimension::finite(-1), invalid_input);
}

TEST_CASE("one-dimensional modules over an abelian algebra") {
    for (const ExtDimension dz :
         {ExtDimension::finite(0), ExtDimension::finite(1), ExtDimension::finite(2),
          ExtDimension::finite(5), ExtDimension::infinity()}) {
        CHECK(ext_onedim_abelian(dz, "chi", "chi") == dz);
        CHECK(ext_onedim_abelian(dz, "chi", "psi") == ExtDimension::finite(0));
        CHECK(ext_onedim_abelian(dz, "", "") == dz);
    }
}

TEST_CASE("simples over a reductive algebra: only the center contributes") {
    const RootSystem a2 = build_root_system('A', 2);
    const ReductiveSimpleDescriptor trivial{"chi", std::nullopt};
    const ReductiveSimpleDescriptor zero_weight{"chi", Weight({0, 0})};
    const ReductiveSimpleDescriptor adjoint{"chi", Weight({1, 1})};
    const ReductiveSimpleDescriptor other_weight{"chi", Weight({2, 0})};
    const ReductiveSimpleDescriptor other_char{"psi", Weight({1, 1})};

    for (long long dz : {0LL, 1LL, 3LL}) {
        CHECK(ext_reductive_simple(dz, a2, trivial, trivial) == dz);
        // the zero weight is the trivial module
        CHECK(ext_reductive_simple(dz, a2, trivial, zero_weight) == dz);
        CHECK(ext_reductive_simple(dz, a2, zero_weight, trivial) == dz);
        CHECK(ext_reductive_simple(dz, a2, adjoint, adjoint) == dz);
        CHECK(ext_reductive_simple(dz, a2, adjoint, other_weight) == 0);
        CHECK(ext_reductive_simple(dz, a2, adjoint, other_char) == 0);
        CHECK(ext_reductive_simple(dz, a2, trivial, adjoint) == 0);
        CHECK(ext_reductive_simple(dz, a2, other_char, adjoint) == 0);
    }

    CHECK_THROWS_AS(ext_reductive_simple(-1, a2, trivial, trivial), invalid_input);
    CHECK_THROWS_AS(
        ext_reductive_simple(1, a2, ReductiveSimpleDescriptor{"chi", Weight({-1, 0})}, trivial),
        invalid_input);
    CHECK_THROWS_AS(
        ext_reductive_simple(1, a2, trivial, ReductiveSimpleDescriptor{"chi", Weight({1})}),
        invalid_input);
}

TEST_CASE("trivial module against a simple") {
    for (long long dz : {0LL, 1LL, 4LL}) {
        CHECK(ext_trivial_vs_simple(dz, false) == dz);
        CHECK(ext_trivial_vs_simple(dz, true) == 0);
    }
    CHECK_THROWS_AS(ext_trivial_vs_simple(-2, false), invalid_input);
}

TEST_CASE("general simples: labels gate the evaluation machinery") {
    const RootSystem a1 = build_root_system('A', 1);
    const OrbitSpace loop = OrbitSpace::loop_points({"M", "N"});

    const GeneralSimpleDescriptor a{"u", desc({{"M", {1}}})};
    const GeneralSimpleDescriptor b{"u", desc({{"M", {3}}})};
    const GeneralSimpleDescriptor c{"v", desc({{"M", {3}}})};

    CHECK(ext_general_simple(a1, loop, a, b) ==
          ext_dim(a1, loop, a.ev_part, b.ev_part));
    CHECK(ext_general_simple(a1, loop, a, b) == 1);
    CHECK(ext_general_simple(a1, loop, a, c) == 0);
    CHECK(ext_general_simple(a1, loop, a, a) ==
          ext_dim(a1, loop, a.ev_part, a.ev_part));

    // both evaluation parts are validated even when labels differ
    const GeneralSimpleDescriptor broken{"v", desc({{"nope", {1}}})};
    CHECK_THROWS_AS(ext_general_simple(a1, loop, a, broken), invalid_input);
    CHECK_THROWS_AS(ext_general_simple(a1, loop, broken, a), invalid_input);
}

TEST_CASE("combining factorwise dimensions over a product of orbits") {
    // r = 1: nothing to correct
    CHECK(combine_factorwise_ext({5}, 1, 7) == 5);
    CHECK(combine_factorwise_ext({0}, 1, 0) == 0);
    // each factor counts the quotient once; r - 1 copies are removed
    CHECK(combine_factorwise_ext({1, 1}, 2, 0) == 2);
    CHECK(combine_factorwise_ext({1, 1}, 2, 1) == 1);
    CHECK(combine_factorwise_ext({2, 3, 4}, 3, 2) == 5);
    CHECK(combine_factorwise_ext({1, 1, 1}, 3, 1) == 1);

    CHECK_THROWS_AS(combine_factorwise_ext({}, 0, 0), invalid_input);
    CHECK_THROWS_AS(combine_factorwise_ext({1, 1}, 3, 0), invalid_input);
    CHECK_THROWS_AS(combine_factorwise_ext({1, -1}, 2, 0), invalid_input);
    CHECK_THROWS_AS(combine_factorwise_ext({1, 1}, 2, -1), invalid_input);
    // sum too small for the stated quotient
    CHECK_THROWS_AS(combine_factorwise_ext({0, 0}, 2, 1), invalid_input);
}

TEST_CASE("combining is exhaustively consistent on a small universe") {
    for (long long r = 1; r <= 3; ++r)
        for (long long quot = 0; quot <= 2; ++quot) {
            std::vector<long long> dims(r, 0);
            for (;;) {
                long long sum = 0;
                for (long long d : dims)
                    sum += d;
                if (sum >= (r - 1) * quot)
                    CHECK(combine_factorwise_ext(dims, r, quot) == sum - (r - 1) * quot);
                else
                    CHECK_THROWS_AS(combine_factorwise_ext(dims, r, quot), invalid_input);
                std::size_t i = 0;
                while (i < dims.size() && dims[i] == 2)
                    dims[i++] = 0;
                if (i == dims.size())
                    break;
                dims[i] += 1;
            }
        }
}
