#include <doctest.h>

#include <map>
#include <numeric>
#include <random>

#include "dsm/constructions.hpp"
#include "dsm/extremality.hpp"
#include "dsm/matrix.hpp"

using namespace dsm;

namespace {

UMatrix half_half() {
    return UMatrix::from_rows({{Rational(1), Rational(1)}, {Rational(1), Rational(1)}});
}

}  // namespace

TEST_CASE("support graph mirrors the support") {
    const BipartiteSupportGraph G = support_graph(gallery(GalleryId::T_4x6));
    CHECK(G.rows == 4);
    CHECK(G.cols == 6);
    CHECK(G.edges.size() == 9);
    CHECK(G.edges == support(gallery(GalleryId::T_4x6)));

    CHECK(support_graph(UMatrix(2, 3)).edges.empty());
    CHECK(support_graph(build_E(2, 1)).edges == SupportSet{{0, 0}, {1, 1}});
}

TEST_CASE("find_cycle locates the 2x2 positive block of the non-extremal 3x4 example") {
    const auto cycle = find_cycle(support_graph(gallery(GalleryId::F_3x4_nonextremal)));
    REQUIRE(cycle.has_value());
    CHECK(cycle->cells == std::vector<Cell>{{1, 1}, {2, 1}, {2, 2}, {1, 2}});
    CHECK(cycle->str() == "(2,2) (3,2) (3,3) (2,3)");
}

TEST_CASE("find_cycle is none on trees and forests") {
    CHECK(!find_cycle(support_graph(gallery(GalleryId::T_4x6))));
    CHECK(!find_cycle(support_graph(build_E(3, 2))));
    CHECK(!find_cycle(support_graph(UMatrix(4, 4))));
}

TEST_CASE("find_cycle on an interior point") {
    const auto cycle = find_cycle(support_graph(half_half()));
    REQUIRE(cycle.has_value());
    CHECK(cycle->cells == std::vector<Cell>{{0, 0}, {1, 0}, {1, 1}, {0, 1}});
}

TEST_CASE("is_extremal on the paper examples") {
    CHECK(is_extremal(gallery(GalleryId::T_4x6)));
    CHECK(!is_extremal(gallery(GalleryId::F_3x4_nonextremal)));
    CHECK(is_extremal(gallery(GalleryId::MIN_4x5_A)));
    CHECK(is_extremal(gallery(GalleryId::MIN_4x5_B)));
    CHECK_THROWS_AS(is_extremal(UMatrix(2, 2)), std::invalid_argument);
}

TEST_CASE("build_F is extremal across a sweep") {
    for (long long n = 2; n <= 20; ++n) {
        for (long long m = n; m <= 20; ++m) {
            CHECK(is_extremal(build_F(n, m)));
        }
    }
}

TEST_CASE("split_on_cycle at the interior point of M(2,2)") {
    const UMatrix M = half_half();
    const auto cycle = find_cycle(support_graph(M));
    REQUIRE(cycle.has_value());
    const CycleSplit split = split_on_cycle(M, *cycle);
    CHECK(split.lambda == Rational(1, 2));
    CHECK(split.plus == UMatrix::from_rows({{Rational(2), Rational(0)},
                                            {Rational(0), Rational(2)}}));
    CHECK(split.minus == UMatrix::from_rows({{Rational(0), Rational(2)},
                                             {Rational(2), Rational(0)}}));
}

TEST_CASE("split_on_cycle on the non-extremal 3x4 example") {
    const UMatrix M = gallery(GalleryId::F_3x4_nonextremal);
    const auto cycle = find_cycle(support_graph(M));
    REQUIRE(cycle.has_value());
    const CycleSplit split = split_on_cycle(M, *cycle);

    // Worked by hand on the positive block ((2,2),(1,1)): both steps are 1.
    CHECK(split.plus == UMatrix::from_rows({{Rational(3), Rational(0), Rational(0), Rational(1)},
                                            {Rational(0), Rational(3), Rational(1), Rational(0)},
                                            {Rational(0), Rational(0), Rational(2), Rational(2)}}));
    CHECK(split.minus == UMatrix::from_rows({{Rational(3), Rational(0), Rational(0), Rational(1)},
                                             {Rational(0), Rational(1), Rational(3), Rational(0)},
                                             {Rational(0), Rational(2), Rational(0), Rational(2)}}));
    CHECK(split.lambda == Rational(1, 2));

    for (const UMatrix* half : {&split.plus, &split.minus}) {
        CHECK(validate(*half).is_member);
        CHECK(support(*half).size() <= 6);
        // Support strictly shrinks on both sides.
        for (const Cell& c : support(*half)) {
            CHECK(!M.at(c.first, c.second).is_zero());
        }
        CHECK(support(*half).size() < support(M).size());
    }

    // Recombination: M = lambda*plus + (1-lambda)*minus, exactly.
    for (int i = 0; i < M.rows(); ++i) {
        for (int j = 0; j < M.cols(); ++j) {
            const Rational mixed = split.lambda * split.plus.at(i, j) +
                                   (Rational(1) - split.lambda) * split.minus.at(i, j);
            CHECK(mixed == M.at(i, j));
        }
    }
}

TEST_CASE("split_on_cycle rejects bad witnesses") {
    const UMatrix M = half_half();
    CycleWitness w;
    w.cells = {{0, 0}, {1, 0}};
    CHECK_THROWS_AS(split_on_cycle(M, w), std::invalid_argument);
    w.cells = {{0, 0}, {1, 0}, {1, 1}, {0, 0}};
    CHECK_THROWS_AS(split_on_cycle(M, w), std::invalid_argument);
    w.cells = {{0, 0}, {1, 1}, {1, 0}, {0, 1}};  // does not alternate
    CHECK_THROWS_AS(split_on_cycle(M, w), std::invalid_argument);

    UMatrix with_zero(2, 2);
    with_zero.at(0, 0) = Rational(2);
    with_zero.at(1, 1) = Rational(2);
    w.cells = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    CHECK_THROWS_AS(split_on_cycle(with_zero, w), std::invalid_argument);
}

TEST_CASE("decompose on extremal input is the single term (1, M)") {
    const ConvexDecomposition d = decompose(gallery(GalleryId::T_4x6));
    REQUIRE(d.terms.size() == 1);
    CHECK(d.terms[0].first == Rational(1));
    CHECK(d.terms[0].second == gallery(GalleryId::T_4x6));
}

TEST_CASE("decompose the interior point of M(2,2)") {
    const ConvexDecomposition d = decompose(half_half());
    REQUIRE(d.terms.size() == 2);
    CHECK(d.terms[0].first == Rational(1, 2));
    CHECK(d.terms[1].first == Rational(1, 2));
}

TEST_CASE("decompose the non-extremal 3x4 example and recombine") {
    const UMatrix M = gallery(GalleryId::F_3x4_nonextremal);
    const ConvexDecomposition d = decompose(M);
    CHECK(d.terms.size() >= 2);

    Rational coeff_sum(0);
    UMatrix mixed(M.rows(), M.cols());
    for (const auto& [coeff, term] : d.terms) {
        CHECK(coeff > Rational(0));
        CHECK(coeff <= Rational(1));
        CHECK(validate(term).is_member);
        CHECK(is_extremal(term));
        coeff_sum += coeff;
        for (int i = 0; i < M.rows(); ++i) {
            for (int j = 0; j < M.cols(); ++j) {
                mixed.at(i, j) += coeff * term.at(i, j);
            }
        }
    }
    CHECK(coeff_sum == Rational(1));
    CHECK(mixed == M);

    CHECK_THROWS_AS(decompose(UMatrix(2, 2)), std::invalid_argument);
}

TEST_CASE("decompose is deterministic") {
    const UMatrix M = gallery(GalleryId::F_3x4_nonextremal);
    const ConvexDecomposition a = decompose(M);
    const ConvexDecomposition b = decompose(M);
    REQUIRE(a.terms.size() == b.terms.size());
    for (size_t k = 0; k < a.terms.size(); ++k) {
        CHECK(a.terms[k].first == b.terms[k].first);
        CHECK(a.terms[k].second == b.terms[k].second);
    }
}

TEST_CASE("subsupport_witness") {
    const auto witness = subsupport_witness(gallery(GalleryId::F_3x4_nonextremal));
    REQUIRE(witness.has_value());
    CHECK(validate(*witness).is_member);
    CHECK(support(*witness).size() <= 6);
    // Strict containment in the source support.
    const SupportSet original = support(gallery(GalleryId::F_3x4_nonextremal));
    for (const Cell& c : support(*witness)) {
        CHECK(original.count(c) == 1);
    }
    CHECK(support(*witness).size() < original.size());

    CHECK(!subsupport_witness(gallery(GalleryId::MIN_4x5_A)));
    CHECK(!subsupport_witness(build_F(5, 7)));
    CHECK_THROWS_AS(subsupport_witness(UMatrix(3, 3)), std::invalid_argument);
}

TEST_CASE("is_extremal equals (subsupport_witness == none) on assorted members") {
    std::vector<UMatrix> members = {
        gallery(GalleryId::T_4x6), gallery(GalleryId::F_3x4_nonextremal),
        gallery(GalleryId::MIN_4x5_A), build_F(4, 7), half_half()};
    for (const UMatrix& M : members) {
        CHECK(is_extremal(M) == !subsupport_witness(M).has_value());
    }
}

TEST_CASE("birkhoff cross-check agrees on square members, extremal or not") {
    CHECK(is_extremal(half_half()) == scale_check_birkhoff(half_half()));

    UMatrix shift(4, 4);
    for (int i = 0; i < 4; ++i) shift.at(i, (i + 1) % 4) = Rational(4);
    CHECK(is_extremal(shift) == scale_check_birkhoff(shift));
    CHECK(is_extremal(shift));

    // Interior blend of two permutation members.
    UMatrix blend(4, 4);
    for (int i = 0; i < 4; ++i) {
        blend.at(i, (i + 1) % 4) = Rational(2);
        blend.at(i, (i + 2) % 4) = Rational(2);
    }
    CHECK(is_extremal(blend) == scale_check_birkhoff(blend));
    CHECK(!is_extremal(blend));
}

TEST_CASE("extremal tree arithmetic: support size n+m-c with balanced components") {
    // Components of the support forest, via a little union-find over nodes.
    const auto component_stats = [](const UMatrix& M) {
        const int n = M.rows(), m = M.cols();
        std::vector<int> root(n + m);
        for (int v = 0; v < n + m; ++v) root[v] = v;
        const auto find = [&](int v) {
            while (root[v] != v) v = root[v] = root[root[v]];
            return v;
        };
        for (const Cell& c : support(M)) {
            root[find(c.first)] = find(n + c.second);
        }
        std::map<int, std::pair<int, int>> comps;  // root -> (rows, cols)
        for (int v = 0; v < n + m; ++v) {
            auto& [rows, cols] = comps[find(v)];
            (v < n ? rows : cols)++;
        }
        return comps;
    };

    for (const UMatrix& M : {gallery(GalleryId::T_4x6), build_F(4, 6), build_F(6, 9),
                             build_Y(6, 9), gallery(GalleryId::MIN_4x5_B)}) {
        REQUIRE(is_extremal(M));
        const auto comps = component_stats(M);
        const long long n = M.rows(), m = M.cols();
        const long long c = static_cast<long long>(comps.size());
        CHECK(static_cast<long long>(support(M).size()) == n + m - c);
        CHECK(static_cast<long long>(support(M).size()) <= n + m - 1);
        CHECK(static_cast<long long>(support(M).size()) >= s_formula(n, m));
        long long g = std::gcd(n, m);
        CHECK(c <= g);
        for (const auto& entry : comps) {
            CHECK(m * entry.second.first == n * entry.second.second);
        }
    }
}

TEST_CASE("dot export") {
    const std::string tree = to_dot(gallery(GalleryId::T_4x6));
    CHECK(tree.find("graph support {") == 0);
    CHECK(tree.find("x1 [shape=box]") != std::string::npos);
    CHECK(tree.find("y6 [shape=circle]") != std::string::npos);
    CHECK(tree.find("x1 -- y1 [label=\"2\"]") != std::string::npos);
    CHECK(tree.find("color=red") == std::string::npos);

    const std::string cyclic = to_dot(gallery(GalleryId::F_3x4_nonextremal));
    CHECK(cyclic.find("color=red") != std::string::npos);

    const std::string isolated = to_dot(UMatrix(2, 2));
    CHECK(isolated.find("x2") != std::string::npos);
    CHECK(isolated.find("--") == std::string::npos);
}
