#include <catch2/catch.hpp>

#include "cobord/toric.hpp"
#include "cobord/variety.hpp"

using namespace cobord;

TEST_CASE("projective space fans") {
    const Fan f1 = projective_space_fan(1);
    CHECK(f1.rays == std::vector<std::vector<long long>>{{1}, {-1}});
    CHECK(f1.max_cones.size() == 2);
    CHECK(validate_fan(f1).empty());

    const Fan f2 = projective_space_fan(2);
    CHECK(f2.rays.size() == 3);
    CHECK(f2.max_cones.size() == 3);
    CHECK(validate_fan(f2).empty());

    const Fan f3 = projective_space_fan(3);
    CHECK(f3.rays.size() == 4);
    CHECK(f3.max_cones.size() == 4);
    CHECK(validate_fan(f3).empty());
}

TEST_CASE("fan validation reports violations") {
    Fan dup = projective_space_fan(2);
    dup.rays.push_back({1, 0});
    REQUIRE_FALSE(validate_fan(dup).empty());
    CHECK(validate_fan(dup)[0].find("duplicate ray") != std::string::npos);

    Fan missing = projective_space_fan(2);
    missing.max_cones.pop_back();
    bool found_facet = false;
    for (const auto& v : validate_fan(missing))
        if (v.find("facet") != std::string::npos) found_facet = true;
    CHECK(found_facet);

    Fan imprimitive;
    imprimitive.rank = 2;
    imprimitive.rays = {{2, 0}, {0, 1}, {-2, -1}};
    imprimitive.max_cones = {{0, 1}, {1, 2}, {0, 2}};
    bool found_prim = false;
    for (const auto& v : validate_fan(imprimitive))
        if (v.find("not primitive") != std::string::npos) found_prim = true;
    CHECK(found_prim);

    Fan singular;
    singular.rank = 2;
    singular.rays = {{1, 0}, {1, 2}, {-2, -2} /* not primitive too */};
    singular.rays[2] = {-1, -1};
    singular.max_cones = {{0, 1}, {1, 2}, {0, 2}};
    bool found_det = false;
    for (const auto& v : validate_fan(singular))
        if (v.find("not unimodular") != std::string::npos) found_det = true;
    CHECK(found_det);
}

TEST_CASE("stellar subdivision") {
    const Fan f = projective_space_fan(2);
    const Fan b1 = blow_up(f, 0);
    CHECK(b1.rays.size() == 4);
    CHECK(b1.max_cones.size() == 4);
    CHECK(validate_fan(b1).empty());

    // three distinct blow-ups: 6 rays, 6 cones (the hexagon)
    Fan b3 = f;
    for (int c = 2; c >= 0; --c) b3 = blow_up(b3, c);
    CHECK(b3.rays.size() == 6);
    CHECK(b3.max_cones.size() == 6);
    CHECK(validate_fan(b3).empty());

    // the subdivided cone is gone afterwards
    std::vector<std::vector<long long>> cone0_rays;
    for (int idx : f.max_cones[0]) cone0_rays.push_back(f.rays[idx]);
    CHECK(find_max_cone(f, cone0_rays).has_value());
    CHECK_FALSE(find_max_cone(b1, cone0_rays).has_value());

    CHECK_THROWS_AS(blow_up(f, 3), ValidationError);
    CHECK_THROWS_AS(blow_up(f, -1), ValidationError);
}

TEST_CASE("fixed point weights") {
    // cone i of projective_space_fan omits ray i
    const auto w1 = fixed_point_weights(projective_space_fan(1));
    REQUIRE(w1.per_cone.size() == 2);
    CHECK(w1.per_cone[0][0][0] == -1); // cone {1}: ray (-1)
    CHECK(w1.per_cone[1][0][0] == 1);  // cone {0}: ray (+1)

    const Fan f2 = projective_space_fan(2);
    const auto w2 = fixed_point_weights(f2);
    // cone {0,1} = (e1, e2) sits at index 2: dual basis is the identity
    CHECK(w2.per_cone[2][0] == std::vector<Integer>{1, 0});
    CHECK(w2.per_cone[2][1] == std::vector<Integer>{0, 1});
    // cone {1,2} = (e2, -e1-e2) sits at index 0: rows of the inverse of
    // the matrix with those rays as columns
    CHECK(w2.per_cone[0][0] == std::vector<Integer>{-1, 1});
    CHECK(w2.per_cone[0][1] == std::vector<Integer>{-1, 0});
    // every weight row pairs to the Kronecker delta with its cone's rays
    for (size_t ci = 0; ci < f2.max_cones.size(); ++ci)
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) {
                Integer pair = 0;
                for (int t = 0; t < 2; ++t)
                    pair += w2.per_cone[ci][r][t] * f2.rays[f2.max_cones[ci][c]][t];
                CHECK(pair == (r == c ? 1 : 0));
            }
}

TEST_CASE("localization reproduces closed-form Chern data") {
    CHECK(chern_number(toric_chern_vector(projective_space_fan(1)), Partition::single(1)) == 2);
    for (int n = 1; n <= 4; ++n)
        CHECK(toric_chern_vector(projective_space_fan(n)) == cp_chern(n));
}

TEST_CASE("triple blow-up of the plane") {
    Fan b3 = projective_space_fan(2);
    for (int c = 2; c >= 0; --c) b3 = blow_up(b3, c);
    const ChernVector v = toric_chern_vector(b3);
    CHECK(milnor_number(v) == -6);
    CHECK(chern_number(v, Partition::single(2)) == 6);
    CHECK(chern_number(v, Partition({1, 1})) == 6);
}

TEST_CASE("blow-up shifts the milnor number by the fixed amount") {
    for (int n = 2; n <= 4; ++n) {
        const Fan f = projective_space_fan(n);
        const Integer before = milnor_number(toric_chern_vector(f));
        const int shift = n + (n % 2 == 0 ? 1 : -1);
        for (size_t c = 0; c < f.max_cones.size(); ++c) {
            const Integer after =
                milnor_number(toric_chern_vector(blow_up(f, static_cast<int>(c))));
            CHECK(after == before - shift);
        }
    }
}

TEST_CASE("top Chern number counts the fixed points") {
    std::vector<Fan> corpus = {projective_space_fan(1), projective_space_fan(2),
                               projective_space_fan(3), projective_space_fan(4)};
    corpus.push_back(blow_up(projective_space_fan(2), 1));
    corpus.push_back(blow_up(blow_up(projective_space_fan(3), 0), 0));
    for (const Fan& f : corpus) {
        const ChernVector v = toric_chern_vector(f);
        CHECK(chern_number(v, Partition::single(f.rank)) == Integer(f.max_cones.size()));
    }
}

TEST_CASE("result does not depend on the generic point") {
    const Fan f = blow_up(projective_space_fan(3), 2);
    const ChernVector a = toric_chern_vector_at(f, {Integer(7), Integer(-3), Integer(11)});
    const ChernVector b = toric_chern_vector_at(f, {Integer(-5), Integer(13), Integer(2)});
    CHECK(a == b);
    CHECK(a == toric_chern_vector(f));
}

TEST_CASE("degenerate evaluation points are rejected") {
    const Fan f = projective_space_fan(2);
    CHECK_THROWS_AS(toric_chern_vector_at(f, {Integer(0), Integer(1)}), ValidationError);
    // (1,1) annihilates the weight (1,-1)... pick one that pairs to zero
    CHECK_THROWS_AS(toric_chern_vector_at(f, {Integer(1), Integer(1)}), ValidationError);
}

TEST_CASE("fan JSON round-trip is canonical") {
    Fan b = blow_up(projective_space_fan(2), 0);
    const std::string text = fan_to_json(b);
    const Fan parsed = fan_from_json(text);
    CHECK(parsed == b);
    CHECK(fan_to_json(parsed) == text);
    CHECK_THROWS_AS(fan_from_json("{"), ValidationError);
    CHECK_THROWS_AS(fan_from_json("{\"rank\": 2}"), ValidationError);
}

TEST_CASE("blown up projective fans used by BlCP") {
    const Fan f = blown_up_projective_fan(2, 3);
    CHECK(f.rays.size() == 6);
    CHECK(validate_fan(f).empty());
    CHECK_THROWS_AS(blown_up_projective_fan(2, 4), ValidationError);
}
