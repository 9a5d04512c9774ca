#include "blockade/twist_blocks.hpp"

#include "blockade/margaux.hpp"
#include "oracle_helpers.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace blockade;

namespace {

EvalModuleDescriptor desc(std::vector<std::pair<std::string, std::vector<long long>>> items) {
    EvalModuleDescriptor d;
    for (auto& [p, w] : items)
        d.assignments.emplace(p, Weight(std::move(w)));
    return d;
}

bool chain_steps_extend(const RootSystem& rs, const OrbitSpace& os,
                        const std::vector<EvalModuleDescriptor>& chain) {
    for (std::size_t k = 0; k + 1 < chain.size(); ++k)
        if (ext_dim(rs, os, chain[k], chain[k + 1]) == 0 &&
            ext_dim(rs, os, chain[k + 1], chain[k]) == 0)
            return false;
    return true;
}

}  // namespace

TEST_CASE("orbit space constructor validates its data") {
    using V = std::vector<std::string>;
    using G = std::vector<std::map<std::string, std::string>>;
    using C = std::map<std::string, long long>;

    CHECK_THROWS_AS(OrbitSpace(V{"a", "a"}, G{}, C{{"a", 1}}), invalid_input);
    // generator not defined everywhere
    CHECK_THROWS_AS(OrbitSpace(V{"a", "b"}, G{{{"a", "b"}}}, C{{"a", 1}}), invalid_input);
    // generator not a bijection
    CHECK_THROWS_AS(OrbitSpace(V{"a", "b"}, G{{{"a", "b"}, {"b", "b"}}}, C{{"a", 1}}),
                    invalid_input);
    // generator hitting an unknown point
    CHECK_THROWS_AS(OrbitSpace(V{"a", "b"}, G{{{"a", "c"}, {"b", "a"}}}, C{{"a", 1}}),
                    invalid_input);
    // cotangent data at an unknown point
    CHECK_THROWS_AS(OrbitSpace(V{"a"}, G{}, C{{"z", 1}}), invalid_input);
    // cotangent dimension must be positive
    CHECK_THROWS_AS(OrbitSpace(V{"a"}, G{}, C{{"a", 0}}), invalid_input);
    // twice on one orbit
    CHECK_THROWS_AS(OrbitSpace(V{"a", "b"}, G{{{"a", "b"}, {"b", "a"}}}, C{{"a", 1}, {"b", 1}}),
                    invalid_input);
    // missing orbit
    CHECK_THROWS_AS(OrbitSpace(V{"a", "b"}, G{}, C{{"a", 1}}), invalid_input);
}

TEST_CASE("orbit space partitions points and serves cotangent dimensions") {
    const OrbitSpace flips = OrbitSpace::margaux_orbits({"x", "y"});
    CHECK(flips.points().size() == 8);
    CHECK(flips.orbit_representatives() == std::vector<std::string>{"x:++", "y:++"});
    CHECK(flips.orbit_rep("x:--") == "x:++");
    CHECK(flips.orbit_rep("y:-+") == "y:++");
    CHECK(flips.orbit_members("x:-+") ==
          std::vector<std::string>{"x:++", "x:+-", "x:-+", "x:--"});
    CHECK(flips.cotangent_dim("x:--") == 2);
    CHECK_THROWS_AS(flips.orbit_rep("z:++"), invalid_input);

    const OrbitSpace cycle = OrbitSpace::single_free_orbit({"c", "a", "b"}, 3);
    CHECK(cycle.orbit_representatives() == std::vector<std::string>{"a"});
    CHECK(cycle.cotangent_dim("b") == 3);

    const OrbitSpace loop = OrbitSpace::loop_points({"p", "q"});
    CHECK(loop.orbit_representatives() == std::vector<std::string>{"p", "q"});
    CHECK(loop.cotangent_dim("p") == 1);

    const OrbitSpace torus = OrbitSpace::torus_points({"p"}, 5);
    CHECK(torus.cotangent_dim("p") == 5);
}

TEST_CASE("canonicalize drops zeros, folds orbits, validates input") {
    const RootSystem a1 = build_root_system('A', 1);
    const OrbitSpace flips = OrbitSpace::margaux_orbit("x");

    CHECK(canonicalize(a1, flips, desc({{"x:--", {2}}})) == desc({{"x:++", {2}}}));
    CHECK(canonicalize(a1, flips, desc({{"x:+-", {0}}})) == desc({}));
    CHECK_THROWS_AS(canonicalize(a1, flips, desc({{"nope", {1}}})), invalid_input);
    CHECK_THROWS_AS(canonicalize(a1, flips, desc({{"x:++", {-1}}})), invalid_input);
    CHECK_THROWS_AS(canonicalize(a1, flips, desc({{"x:++", {1, 0}}})), invalid_input);
    // two representatives of one orbit
    CHECK_THROWS_AS(canonicalize(a1, flips, desc({{"x:++", {1}}, {"x:--", {1}}})),
                    invalid_input);
    // a zero weight does not collide with a nonzero one on the same orbit
    CHECK(canonicalize(a1, flips, desc({{"x:++", {0}}, {"x:--", {2}}})) ==
          desc({{"x:++", {2}}}));
}

TEST_CASE("spectral_character keeps nonidentity cosets only") {
    const RootSystem a1 = build_root_system('A', 1);
    const OrbitSpace loop = OrbitSpace::loop_points({"M", "N"});

    CHECK(spectral_character(a1, loop, desc({{"M", {2}}})) ==
          spectral_character(a1, loop, desc({})));
    CHECK(spectral_character(a1, loop, desc({{"M", {1}}})) !=
          spectral_character(a1, loop, desc({})));
    CHECK(spectral_character(a1, loop, desc({{"M", {1}}})) ==
          spectral_character(a1, loop, desc({{"M", {3}}})));
    CHECK(spectral_character(a1, loop, desc({{"M", {1}}})) !=
          spectral_character(a1, loop, desc({{"N", {1}}})));
    // an even weight on N does not change the character
    CHECK(spectral_character(a1, loop, desc({{"M", {1}}, {"N", {2}}})) ==
          spectral_character(a1, loop, desc({{"M", {3}}})));
}

TEST_CASE("ext_dim on one-orbit and two-orbit examples") {
    const RootSystem a1 = build_root_system('A', 1);
    const OrbitSpace loop1 = OrbitSpace::loop_points({"M"});
    const OrbitSpace loop2 = OrbitSpace::loop_points({"M", "N"});

    // single differing orbit: the adjoint multiplicity
    CHECK(ext_dim(a1, loop1, desc({}), desc({{"M", {2}}})) == 1);
    CHECK(ext_dim(a1, loop1, desc({{"M", {2}}}), desc({})) == 1);
    CHECK(ext_dim(a1, loop1, desc({{"M", {1}}}), desc({{"M", {3}}})) == 1);
    CHECK(ext_dim(a1, loop1, desc({{"M", {1}}}), desc({{"M", {5}}})) == 0);
    // equal descriptors: diagonal contributions over the support
    CHECK(ext_dim(a1, loop1, desc({}), desc({})) == 0);
    CHECK(ext_dim(a1, loop1, desc({{"M", {2}}}), desc({{"M", {2}}})) == 1);
    CHECK(ext_dim(a1, loop2, desc({{"M", {2}}, {"N", {2}}}),
                  desc({{"M", {2}}, {"N", {2}}})) == 2);
    // two differing orbits kill every extension
    CHECK(ext_dim(a1, loop2, desc({{"M", {1}}}), desc({{"N", {1}}})) == 0);
    CHECK(ext_dim(a1, loop2, desc({{"M", {1}}, {"N", {1}}}), desc({})) == 0);
    CHECK(ext_dim(a1, loop2, desc({{"M", {1}}, {"N", {1}}}),
                  desc({{"M", {3}}, {"N", {3}}})) == 0);

    // cotangent dimension scales the one-orbit contribution
    const OrbitSpace flips = OrbitSpace::margaux_orbit("x");
    CHECK(ext_dim(a1, flips, desc({{"x:++", {1}}}), desc({{"x:-+", {3}}})) == 2);
    CHECK(ext_dim(a1, flips, desc({{"x:+-", {2}}}), desc({{"x:--", {2}}})) == 2);

    const OrbitSpace torus = OrbitSpace::torus_points({"M"}, 3);
    CHECK(ext_dim(a1, torus, desc({{"M", {2}}}), desc({{"M", {2}}})) == 3);

    const RootSystem a2 = build_root_system('A', 2);
    const OrbitSpace loop_a2 = OrbitSpace::loop_points({"M"});
    CHECK(ext_dim(a2, loop_a2, desc({{"M", {1, 1}}}), desc({{"M", {1, 1}}})) == 2);
    CHECK(ext_dim(a2, loop_a2, desc({{"M", {1, 1}}}), desc({{"M", {2, 2}}})) == 1);
}

TEST_CASE("ext_dim is symmetric and representative independent") {
    const RootSystem a1 = build_root_system('A', 1);
    const OrbitSpace flips = OrbitSpace::margaux_orbits({"x", "y"});
    const std::vector<std::string> x_members{"x:++", "x:+-", "x:-+", "x:--"};
    const std::vector<std::string> y_members{"y:++", "y:+-", "y:-+", "y:--"};

    std::mt19937 rng(987);
    std::uniform_int_distribution<long long> coord(0, 4);
    std::uniform_int_distribution<std::size_t> pick(0, 3);
    for (int t = 0; t < 80; ++t) {
        auto random_desc = [&] {
            EvalModuleDescriptor d;
            if (rng() % 2)
                d.assignments.emplace(x_members[pick(rng)], Weight({coord(rng)}));
            if (rng() % 2)
                d.assignments.emplace(y_members[pick(rng)], Weight({coord(rng)}));
            return d;
        };
        const EvalModuleDescriptor e = random_desc(), f = random_desc();
        const long long ef = ext_dim(a1, flips, e, f);
        CHECK(ef == ext_dim(a1, flips, f, e));
        CHECK(ext_dim(a1, flips, canonicalize(a1, flips, e), canonicalize(a1, flips, f)) == ef);
        CHECK(same_block(a1, flips, e, f) == same_block(a1, flips, f, e));
    }
}

TEST_CASE("blocks_report groups by spectral character in input order") {
    const RootSystem a1 = build_root_system('A', 1);
    const OrbitSpace loop = OrbitSpace::loop_points({"M"});
    const std::vector<EvalModuleDescriptor> family{
        desc({{"M", {2}}}), desc({{"M", {4}}}), desc({{"M", {1}}})};
    const std::vector<BlockGroup> groups = blocks_report(a1, loop, family);
    REQUIRE(groups.size() == 2);
    CHECK(groups[0].members == std::vector<std::size_t>{0, 1});
    CHECK(groups[1].members == std::vector<std::size_t>{2});
    CHECK(groups[0].character == spectral_character(a1, loop, desc({})));
    CHECK(groups[1].character == spectral_character(a1, loop, desc({{"M", {1}}})));

    CHECK(blocks_report(a1, loop, {}).empty());
}

TEST_CASE("linkage_chain finds shortest chains and validates bounds") {
    const RootSystem a1 = build_root_system('A', 1);
    const OrbitSpace loop = OrbitSpace::loop_points({"M"});

    const auto self = linkage_chain(a1, loop, desc({{"M", {2}}}), desc({{"M", {2}}}), 4);
    REQUIRE(self.has_value());
    CHECK(self->size() == 1);

    const auto direct = linkage_chain(a1, loop, desc({}), desc({{"M", {2}}}), 4);
    REQUIRE(direct.has_value());
    REQUIRE(direct->size() == 2);
    CHECK(direct->front() == desc({}));
    CHECK(direct->back() == desc({{"M", {2}}}));
    CHECK(chain_steps_extend(a1, loop, *direct));

    const auto two_steps = linkage_chain(a1, loop, desc({{"M", {1}}}), desc({{"M", {5}}}), 6);
    REQUIRE(two_steps.has_value());
    REQUIRE(two_steps->size() == 3);
    CHECK(chain_steps_extend(a1, loop, *two_steps));

    // different spectral characters: no chain at any bound
    CHECK_FALSE(linkage_chain(a1, loop, desc({}), desc({{"M", {1}}}), 8).has_value());

    CHECK_THROWS_AS(linkage_chain(a1, loop, desc({}), desc({{"M", {7}}}), 6), invalid_input);
    CHECK_THROWS_AS(linkage_chain(a1, loop, desc({}), desc({}), -1), invalid_input);
}

TEST_CASE("linkage_chain existence matches same_block on a small window") {
    const RootSystem a1 = build_root_system('A', 1);
    const OrbitSpace loop = OrbitSpace::loop_points({"M"});
    std::vector<EvalModuleDescriptor> universe;
    for (long long c = 0; c <= 4; ++c)
        universe.push_back(c == 0 ? desc({}) : desc({{"M", {c}}}));
    for (const EvalModuleDescriptor& e : universe)
        for (const EvalModuleDescriptor& f : universe) {
            const auto chain = linkage_chain(a1, loop, e, f, 6);
            CHECK(chain.has_value() == same_block(a1, loop, e, f));
            if (chain)
                CHECK(chain_steps_extend(a1, loop, *chain));
        }
}

TEST_CASE("linkage_chain crosses orbits one step at a time") {
    const RootSystem a1 = build_root_system('A', 1);
    const OrbitSpace loop = OrbitSpace::loop_points({"M", "N"});
    const auto chain =
        linkage_chain(a1, loop, desc({{"M", {1}}, {"N", {1}}}), desc({{"M", {3}}, {"N", {3}}}), 4);
    REQUIRE(chain.has_value());
    CHECK(chain->size() == 3);  // one orbit moves per step
    CHECK(chain_steps_extend(a1, loop, *chain));
}

TEST_CASE("margaux canonical points") {
    const GaussianRat one{1, 0}, minus_one{-1, 0}, i_unit{0, 1}, minus_i{0, -1};
    CHECK(margaux_canonical_point({minus_one, i_unit}) == MargauxPoint{one, i_unit});
    CHECK(margaux_canonical_point({i_unit, minus_i}) == MargauxPoint{i_unit, i_unit});
    CHECK(margaux_canonical_point({one, one}) == MargauxPoint{one, one});
    // mixed rational coordinates
    const GaussianRat half{make_rat(1, 2), 0}, neg_half{make_rat(-1, 2), 0};
    CHECK(margaux_canonical_point({neg_half, one}) == MargauxPoint{half, one});
    CHECK_THROWS_AS(margaux_canonical_point({GaussianRat{0, 0}, one}), invalid_input);
    CHECK_THROWS_AS(margaux_canonical_point({one, GaussianRat{0, 0}}), invalid_input);
}

TEST_CASE("margaux_block keeps odd entries on canonical points") {
    const GaussianRat one{1, 0}, minus_one{-1, 0}, i_unit{0, 1};
    const GaussianRat two{2, 0}, minus_three{-3, 0}, three{3, 0};

    const MargauxBlockDescriptor block =
        margaux_block({{{minus_one, i_unit}, 3}, {{two, minus_three}, 4}});
    REQUIRE(block.entries.size() == 1);
    CHECK(block.entries[0].point == MargauxPoint{one, i_unit});
    CHECK(block.entries[0].residue == 1);

    // even weights only: empty block descriptor
    CHECK(margaux_block({{{two, three}, 2}, {{one, one}, 0}}).entries.empty());

    // entries come out sorted by point
    const MargauxBlockDescriptor sorted =
        margaux_block({{{two, one}, 1}, {{one, one}, 1}});
    REQUIRE(sorted.entries.size() == 2);
    CHECK(sorted.entries[0].point == MargauxPoint{one, one});
    CHECK(sorted.entries[1].point == MargauxPoint{two, one});

    // negative evaluation weight
    CHECK_THROWS_AS(margaux_block({{{one, one}, -1}}), invalid_input);

    // same sign-flip orbit twice is a repeated point
    try {
        margaux_block({{{one, two}, 1}, {{minus_one, {-2, 0}}, 5}});
        FAIL("expected invalid_input");
    } catch (const invalid_input& e) {
        const std::string msg = e.what();
        CHECK(msg.find("0") != std::string::npos);
        CHECK(msg.find("1") != std::string::npos);
        CHECK(msg.find("orbit") != std::string::npos);
    }
}

TEST_CASE("margaux_block is sign-flip invariant and idempotent") {
    std::mt19937 rng(55555);
    std::uniform_int_distribution<long long> num(-5, 5);
    auto random_coord = [&]() -> GaussianRat {
        GaussianRat z;
        do {
            z.re = make_rat(to_int(num(rng)), to_int(1 + static_cast<long long>(rng() % 3)));
            z.im = make_rat(to_int(num(rng)), to_int(1 + static_cast<long long>(rng() % 3)));
        } while (z.is_zero());
        return z;
    };
    for (int t = 0; t < 25; ++t) {
        std::vector<MargauxModule> family;
        std::set<MargauxPoint> used;
        const int k = 1 + static_cast<int>(rng() % 4);
        while (static_cast<int>(family.size()) < k) {
            MargauxPoint p{random_coord(), random_coord()};
            if (!used.insert(margaux_canonical_point(p)).second)
                continue;
            family.push_back({p, static_cast<long long>(rng() % 10)});
        }
        const MargauxBlockDescriptor base = margaux_block(family);

        std::vector<MargauxModule> flipped = family;
        for (MargauxModule& m : flipped) {
            if (rng() % 2)
                m.point.a = m.point.a.negated();
            if (rng() % 2)
                m.point.b = m.point.b.negated();
        }
        CHECK(margaux_block(flipped) == base);

        std::vector<MargauxModule> rebuilt;
        for (const MargauxBlockEntry& e : base.entries)
            rebuilt.push_back({e.point, 1});
        CHECK(margaux_block(rebuilt) == base);
    }
}
