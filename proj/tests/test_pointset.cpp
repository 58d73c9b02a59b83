#include "doctest.h"

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "polycomb/pointset.hpp"

using namespace polycomb;

namespace {

std::vector<Int> iv(std::initializer_list<long> vals) {
    std::vector<Int> v;
    for (long x : vals) v.emplace_back(x);
    return v;
}

}  // namespace

TEST_CASE("PointSet validation") {
    CHECK_THROWS_AS(PointSet(0, {}), ValidationError);
    CHECK_THROWS_AS(PointSet(2, {iv({1, 2, 3})}), ValidationError);     // wrong length
    CHECK_THROWS_AS(PointSet(2, {iv({1, 2}), iv({1, 2})}), ValidationError);  // duplicate
    const PointSet ok(2, {iv({1, 2}), iv({2, 1})});
    CHECK(ok.size() == 2);
    CHECK(ok.points[0] == iv({1, 2}));  // input order preserved
}

TEST_CASE("GSpec") {
    const GSpec id = GSpec::identity();
    CHECK(id(5) == 5);
    CHECK(id.is_identity());
    const GSpec g = GSpec::affine(2, 1);
    CHECK(g(1) == 3);
    CHECK(g(4) == 9);
    CHECK(!g.is_identity());
    CHECK_THROWS_AS(GSpec::affine(0, 3), ValidationError);
    CHECK_THROWS_AS(GSpec::affine(2, -1), ValidationError);
}

TEST_CASE("gen_cyclic emits the moment curve in index order") {
    const PointSet x = gen_cyclic(3, 3);
    REQUIRE(x.size() == 3);
    CHECK(x.dim == 3);
    CHECK(x.points[0] == iv({1, 1, 1}));
    CHECK(x.points[1] == iv({2, 4, 8}));
    CHECK(x.points[2] == iv({3, 9, 27}));

    const PointSet y = gen_cyclic(2, 2, GSpec::affine(2, 1));
    CHECK(y.points[0] == iv({3, 9}));
    CHECK(y.points[1] == iv({5, 25}));

    CHECK_THROWS_AS(gen_cyclic(0, 3), ValidationError);
    CHECK(gen_cyclic(1, 1).points[0] == iv({1}));
}

TEST_CASE("point numbering and moment vectors") {
    CHECK(point_number(iv({0, 0, 0})) == 0);
    CHECK(point_number(iv({1, 0, 0})) == 1);  // x_1 is the least significant bit
    CHECK(point_number(iv({0, 1, 0})) == 2);
    CHECK(point_number(iv({1, 1, 1})) == 7);
    CHECK_THROWS_AS(point_number(iv({0, 2})), ValidationError);
    CHECK(moment_vector(iv({0, 1})) == iv({2, 4}));
    CHECK(moment_vector(iv({1, 1})) == iv({3, 9}));
    CHECK(moment_vector(iv({0, 0})) == iv({0, 0}));
}

TEST_CASE("perturbation parameters") {
    CHECK(PerturbParams::for_dim(2).k_exponent == 8);
    CHECK(PerturbParams::for_dim(3).k_exponent == 27);
    // d = 2: (2^2-1)^3 = 27, so the smallest exponent with 2^k > 27 is 5.
    CHECK(minimal_valid_k_exponent(2) == 5);
    CHECK(PerturbParams::minimal_valid(2).K() == 32);
    CHECK(PerturbParams{2, 5}.is_valid());
    CHECK(!PerturbParams{2, 4}.is_valid());
    CHECK_THROWS_AS((PerturbParams{2, 4}.validate()), ValidationError);
    // d = 3: (2^3-1)^6 = 117649, 2^17 = 131072 is the first power above it.
    CHECK(minimal_valid_k_exponent(3) == 17);
}

TEST_CASE("cyclic perturbation of the square") {
    const PointSet sq(2, {iv({0, 0}), iv({1, 0}), iv({0, 1}), iv({1, 1})});
    const PointSet y = cyclic_perturb(sq);  // default K = 2^8
    REQUIRE(y.size() == 4);
    CHECK(y.points[0] == iv({0, 0}));
    CHECK(y.points[1] == iv({257, 1}));    // 256*(1,0) + (1,1)
    CHECK(y.points[2] == iv({2, 260}));    // 256*(0,1) + (2,4)
    CHECK(y.points[3] == iv({259, 265}));  // 256*(1,1) + (3,9)

    const PointSet z = cyclic_perturb(sq, PerturbParams::minimal_valid(2));
    CHECK(z.points[3] == iv({35, 41}));  // 32*(1,1) + (3,9)

    CHECK_THROWS_AS(cyclic_perturb(PointSet(2, {iv({2, 0})})), ValidationError);
    CHECK_THROWS_AS(cyclic_perturb(sq, PerturbParams{3, 27}), ValidationError);
    CHECK_THROWS_AS(cyclic_perturb(sq, PerturbParams{2, 4}), ValidationError);
}

TEST_CASE("round_perturbed_value rounds to nearest, ties toward zero") {
    const PerturbParams p{2, 5};  // K = 32
    CHECK(round_perturbed_value(Int(0), p) == 0);
    CHECK(round_perturbed_value(Int(64), p) == 2);
    CHECK(round_perturbed_value(Int(65), p) == 2);
    CHECK(round_perturbed_value(Int(79), p) == 2);
    CHECK(round_perturbed_value(Int(80), p) == 2);   // exactly 2.5 -> toward zero
    CHECK(round_perturbed_value(Int(81), p) == 3);
    CHECK(round_perturbed_value(Int(-80), p) == -2);
    CHECK(round_perturbed_value(Int(-81), p) == -3);
}

TEST_CASE("encoding size") {
    const PointSet cube(3, {iv({0, 0, 0}), iv({1, 0, 0}), iv({0, 1, 0}), iv({1, 1, 0}),
                            iv({0, 0, 1}), iv({1, 0, 1}), iv({0, 1, 1}), iv({1, 1, 1})});
    CHECK(encoding_size(cube) == 1);
    // Perturbed cube with K = 2^27: largest coordinate is 2^27 + 343.
    CHECK(encoding_size(cyclic_perturb(cube)) == 28);
    CHECK(encoding_size(cube, iv({-9, 2, 0})) == 4);
    const PointSet origin(2, {iv({0, 0})});
    CHECK(encoding_size(origin) == 1);  // all-zero still needs one bit
    CHECK_THROWS_AS(encoding_size(cube, iv({1, 2})), ValidationError);
}

TEST_CASE("gen_bqp lists lifted 0/1 assignments in counter order") {
    const PointSet b2 = gen_bqp(2);
    REQUIRE(b2.size() == 4);
    CHECK(b2.dim == 3);  // x_11, x_22, x_12
    CHECK(b2.points[0] == iv({0, 0, 0}));
    CHECK(b2.points[1] == iv({1, 0, 0}));
    CHECK(b2.points[2] == iv({0, 1, 0}));
    CHECK(b2.points[3] == iv({1, 1, 1}));

    const PointSet b3 = gen_bqp(3);
    REQUIRE(b3.size() == 8);
    CHECK(b3.dim == 6);  // x_11, x_22, x_33, x_12, x_13, x_23
    CHECK(b3.points[5] == iv({1, 0, 1, 0, 1, 0}));  // diag (1,0,1): pairs 12=0, 13=1, 23=0
    CHECK(b3.points[7] == iv({1, 1, 1, 1, 1, 1}));

    CHECK_THROWS_AS(gen_bqp(13), ResourceError);
    CHECK_THROWS_AS(gen_bqp(5, 4), ResourceError);
    CHECK_THROWS_AS(gen_bqp(0), ValidationError);
}

TEST_CASE("clique objective encodes cliques as maxima") {
    const Graph k3 = Graph::complete(3);
    CHECK(clique_objective(k3) == iv({1, 1, 1, 0, 0, 0}));
    const Graph path(3, {{0, 1}, {1, 2}});  // edge 0-2 missing
    CHECK(clique_objective(path) == iv({1, 1, 1, 0, -2, 0}));
    const Graph empty2(2, {});
    CHECK(clique_objective(empty2) == iv({1, 1, -2}));
}

TEST_CASE("simplex extension: exact d=3 vertex list") {
    const PointSet x = gen_simplex_extension(3);
    REQUIRE(x.size() == 11);  // 2^4 - 2 - 3
    const std::set<std::vector<Int>> got(x.points.begin(), x.points.end());
    const std::set<std::vector<Int>> want = {
        iv({6, 6, 6}),                                  // k=1: no small coords
        iv({3, 6, 6}), iv({6, 3, 6}), iv({6, 6, 3}),    // k=2: one coord at L/2
        iv({6, 0, 0}), iv({0, 6, 0}), iv({0, 0, 6}),    // k=3: basis vectors * L
        iv({-2, -2, -2}),                               // mirror of (6,6,6)
        iv({-3, 0, 0}), iv({0, -3, 0}), iv({0, 0, -3})  // mirrors of k=2 group
    };
    CHECK(got == want);
}

TEST_CASE("simplex extension: counts and glue symmetry for d=4,5") {
    for (std::size_t d : {std::size_t{4}, std::size_t{5}}) {
        const PointSet x = gen_simplex_extension(d);
        CHECK(x.dim == d);
        CHECK(x.size() == (std::size_t{1} << (d + 1)) - 2 - d);
        // The d scaled basis vectors lie on the gluing hyperplane sum = L;
        // every other vertex appears in an upper/lower mirror pair.
        const Int L = Int(d) * factorial(d - 1);
        std::size_t on_hyperplane = 0;
        for (const auto& p : x.points) {
            Int s = 0;
            for (const Int& v : p) s += v;
            if (s == L) ++on_hyperplane;
        }
        CHECK(on_hyperplane == d);
        CHECK((x.size() - d) % 2 == 0);
    }
    CHECK_THROWS_AS(gen_simplex_extension(2), ValidationError);
}
