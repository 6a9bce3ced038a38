#include <doctest.h>

#include <cstdlib>

#include "homavg/classify.hpp"
#include "homavg/error.hpp"
#include "homavg/laws.hpp"

using namespace homavg;

namespace {

SearchSpace space(std::string algebra, const ScalarField& f, long d, long M, std::vector<long> values)
{
    SearchSpace s{std::move(algebra), f, d, M, {}, std::nullopt};
    for (long v : values) {
        s.values.push_back(f.from_long(v));
    }
    return s;
}

bool all_zero(const ProfileSet& ps, std::size_t i)
{
    for (int v : ps.solutions[i]) {
        if (!ps.space.values[v].is_zero()) {
            return false;
        }
    }
    return true;
}

} // namespace

TEST_CASE("classify matches brute force on micro spaces")
{
    for (auto [f, d] : {std::pair{ScalarField::rational(1), 0L}, {ScalarField::rational(1), 1L},
                        {ScalarField::rational(2), 1L}, {ScalarField::cyclotomic(2), 0L},
                        {ScalarField::cyclotomic(3), 3L}}) {
        for (auto values : {std::vector<long>{0, 1}, std::vector<long>{0, -1, 2}}) {
            auto s = space("witt", f, d, 1, values);
            auto ps = enumerate_profiles(s);
            CAPTURE(f.describe());
            CAPTURE(d);
            CHECK(ps.solutions == brute_force_profiles(s));
            CHECK(ps.reverify_failures.empty());
            CHECK(ps.has_zero());
        }
    }
}

TEST_CASE("classify input validation")
{
    auto f = ScalarField::rational(1);
    CHECK_THROWS_AS(enumerate_profiles(space("witt", f, 0, 1, {1, 2})), InvalidParameter);
    CHECK_THROWS_AS(enumerate_profiles(space("witt", f, 0, 1, {0, 1, 1})), InvalidParameter);
    CHECK_THROWS_AS(enumerate_profiles(space("sl2", f, 0, 1, {0, 1})), InvalidParameter);
    CHECK_THROWS_AS(enumerate_profiles(space("witt", f, 0, 0, {0, 1})), InvalidParameter);
    auto mixed = space("witt", f, 0, 1, {0});
    mixed.values.push_back(ScalarField::rational(2).one());
    CHECK_THROWS(enumerate_profiles(mixed));
}

TEST_CASE("classify size ceiling")
{
    auto s = space("witt", ScalarField::rational(1), 0, 3, {0, 1});
    s.ceiling = 100.0;
    try {
        enumerate_profiles(s);
        FAIL("expected refusal");
    } catch (const SearchRefused& e) {
        CHECK(e.estimate() == "8192");
    }
    s.ceiling.reset();
    ::setenv("HOMAVG_CLASSIFY_CEILING", "1000", 1);
    CHECK_THROWS_AS(enumerate_profiles(s), SearchRefused);
    ::setenv("HOMAVG_CLASSIFY_CEILING", "1e6", 1);
    CHECK(enumerate_profiles(s).raw_size == "8192");
    ::unsetenv("HOMAVG_CLASSIFY_CEILING");
}

TEST_CASE("classify is deterministic and lexicographic")
{
    auto s = space("witt", ScalarField::rational(1), 0, 3, {0, 1});
    auto a = enumerate_profiles(s);
    auto b = enumerate_profiles(s);
    CHECK(a.solutions == b.solutions);
    CHECK(a.extensions == b.extensions);
    for (std::size_t i = 1; i < a.solutions.size(); ++i) {
        CHECK(a.solutions[i - 1] < a.solutions[i]);
    }
    CHECK(a.window_unknowns == 7);
    CHECK(a.unknowns.front().t == 0);
    REQUIRE(!a.solutions.empty());
    CHECK(all_zero(a, 0));
}

TEST_CASE("classify solutions re-verify as table operators")
{
    auto s = space("w22", ScalarField::rational(1), 0, 1, {0, 1});
    auto ps = enumerate_profiles(s);
    CHECK(ps.reverify_failures.empty());
    CHECK(ps.solutions.size() == ps.extensions.size());
    auto alg = s.make_algebra();
    for (std::size_t i = 0; i < ps.solutions.size(); ++i) {
        CHECK(check_averaging(alg, ps.table(i), s.M).pass);
    }
}

TEST_CASE("classify with q^d != 1 on the Witt algebra")
{
    auto ps = enumerate_profiles(space("witt", ScalarField::rational(2), 1, 3, {0, 1}));
    REQUIRE(ps.solutions.size() == 1);
    CHECK(all_zero(ps, 0));
    auto cov = match_families(ps);
    CHECK(cov.unmatched_solutions.empty());
    CHECK(cov.unmatched_instances.empty());
}

TEST_CASE("classify Witt q = 1 coverage")
{
    auto f = ScalarField::rational(1);
    auto shifted = match_families(enumerate_profiles(space("witt", f, 1, 3, {0, 1})));
    CHECK(shifted.unmatched_solutions.empty());
    REQUIRE(shifted.unmatched_instances.size() == 1);
    const auto& inst = shifted.instances[shifted.unmatched_instances[0]];
    CHECK(inst.family == "witt:1");
    CHECK(inst.params.at("beta") == "1");
    CHECK(inst.explanation == "WITT-V1-CONSTANT-SHIFT");
    CHECK(shifted.restriction.find("|m| <= 3") != std::string::npos);

    auto ps = enumerate_profiles(space("witt", f, 0, 3, {0, 1}));
    auto cov = match_families(ps);
    CHECK(cov.unmatched_instances.empty());
    CHECK(ps.solutions.size() == 5);
    CHECK(cov.unmatched_solutions.size() == 2);
}

TEST_CASE("sublattice indicators are averaging beyond the search window")
{
    auto f = ScalarField::rational(1);
    auto alg = HomAlgebra::witt(f);
    for (long k : {2L, 3L}) {
        auto ind = HomogeneousOperator::closed_form(
            f, 1, 0, [&](long t) { return Profile::scalar(t % k == 0 ? f.one() : f.zero()); });
        CHECK(check_averaging(alg, ind, 10).pass);
    }
}

TEST_CASE("classified family instances are solutions")
{
    for (auto s : {space("witt", ScalarField::rational(1), 0, 2, {0, 1, -1}),
                   space("witt", ScalarField::cyclotomic(3), 3, 2, {0, 1}),
                   space("w22", ScalarField::cyclotomic(3), 3, 1, {0, 1})}) {
        auto ps = enumerate_profiles(s);
        auto cov = match_families(ps);
        for (auto i : cov.unmatched_instances) {
            CAPTURE(cov.instances[i].family);
            CHECK(!cov.instances[i].explanation.empty());
        }
        for (const auto& [sol, insts] : cov.matched) {
            CHECK(sol < ps.solutions.size());
            CHECK(!insts.empty());
        }
    }
}

TEST_CASE("a single-degree W(2,2) operator is averaging although q^d != 1")
{
    auto f = ScalarField::cyclotomic(3);
    auto alg = HomAlgebra::w22(f);
    auto z = f.zero();
    auto single = HomogeneousOperator::closed_form(
        f, 2, 1, [&](long t) { return t == -1 ? Profile{z, z, z, f.one()} : Profile{z, z, z, z}; });
    CHECK(check_averaging(alg, single, 8).pass);

    auto ps = enumerate_profiles(space("w22", f, 1, 1, {0, 1}));
    CHECK(ps.solutions.size() > 1);
    CHECK(ps.reverify_failures.empty());
}
