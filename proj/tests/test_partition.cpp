#include <catch2/catch.hpp>

#include "cobord/partition.hpp"
#include "oracles.hpp"

using namespace cobord;

TEST_CASE("partitions of 1") {
    const auto ps = partitions_of(1);
    REQUIRE(ps.size() == 1);
    CHECK(ps[0] == Partition::single(1));
}

TEST_CASE("partitions of 4 in canonical order") {
    const auto ps = partitions_of(4);
    REQUIRE(ps.size() == 5);
    CHECK(ps[0].parts() == std::vector<int>{4});
    CHECK(ps[1].parts() == std::vector<int>{3, 1});
    CHECK(ps[2].parts() == std::vector<int>{2, 2});
    CHECK(ps[3].parts() == std::vector<int>{2, 1, 1});
    CHECK(ps[4].parts() == std::vector<int>{1, 1, 1, 1});
}

TEST_CASE("partition counts match the counting recurrence") {
    CHECK(partitions_of(10).size() == 42);
    for (int n = 0; n <= 14; ++n)
        CHECK(Integer(partitions_of(n).size()) == oracle::partition_count(n));
}

TEST_CASE("enumeration is sorted, unique and valid") {
    for (int n = 1; n <= 9; ++n) {
        const auto ps = partitions_of(n);
        for (size_t i = 0; i < ps.size(); ++i) {
            CHECK(ps[i].weight() == n);
            const auto& parts = ps[i].parts();
            for (size_t j = 1; j < parts.size(); ++j) CHECK(parts[j - 1] >= parts[j]);
            for (int p : parts) CHECK(p >= 1);
            if (i > 0) CHECK(ps[i - 1] < ps[i]);
        }
    }
}

TEST_CASE("constructor sorts and rejects nonpositive parts") {
    CHECK(Partition({1, 3, 2}).parts() == std::vector<int>{3, 2, 1});
    CHECK_THROWS_AS(Partition({2, 0}), ValidationError);
    CHECK_THROWS_AS(Partition({-1}), ValidationError);
}

TEST_CASE("text form round-trips") {
    CHECK(Partition({2, 1, 1}).to_string() == "2,1,1");
    CHECK(Partition().to_string() == "");
    CHECK(Partition::parse("2,1,1") == Partition({2, 1, 1}));
    CHECK(Partition::parse("") == Partition());
    CHECK(Partition::parse(" 3 , 1 ") == Partition({3, 1}));
    for (int n = 1; n <= 8; ++n)
        for (const auto& p : partitions_of(n)) CHECK(Partition::parse(p.to_string()) == p);
    CHECK_THROWS_AS(Partition::parse("2,x"), ValidationError);
}

TEST_CASE("merge is multiset union") {
    CHECK(Partition({2, 1}).merged(Partition({3, 1})) == Partition({3, 2, 1, 1}));
    CHECK(Partition().merged(Partition({2})) == Partition({2}));
}
