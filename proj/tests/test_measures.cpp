#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ent/measures.hpp"
#include "ent/qstate.hpp"

#include <cmath>
#include <random>

using namespace ent;

namespace {

PureState bell_pair() {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(4);
    v(0) = v(3) = 1.0 / std::sqrt(2.0);
    return make_pure_state(2, v);
}

DensityMatrix pure_density(const PureState& s) {
    DensityMatrix rho;
    rho.m = s.amp * s.amp.adjoint();
    return rho;
}

}  // namespace

TEST_CASE("one_to_other_concurrence fixed values") {
    CHECK(one_to_other_concurrence(named_state(NamedState::ghz3), 1u) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(one_to_other_concurrence(named_state(NamedState::product3), 1u) ==
          doctest::Approx(0.0).epsilon(1e-12));
    CHECK(one_to_other_concurrence(named_state(NamedState::w3), 1u) ==
          doctest::Approx(std::sqrt(8.0 / 9.0)).epsilon(1e-12));
}

TEST_CASE("one_to_other_concurrence is symmetric in the bipartition") {
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        const PureState s = random_pure_state(seed, 3);
        for (unsigned m : {1u, 2u, 4u, 3u, 5u, 6u})
            CHECK(one_to_other_concurrence(s, m) ==
                  doctest::Approx(one_to_other_concurrence(s, 7u & ~m))
                      .epsilon(1e-12));
    }
}

TEST_CASE("one_to_other_concurrence agrees with the purity formula") {
    // independent route: sqrt(2 (1 - Tr rho^2)) via the partial trace
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        const PureState s = random_pure_state(seed, 3);
        for (unsigned m : {1u, 2u, 4u}) {
            const DensityMatrix rho = reduced_density(s, m);
            const double purity = (rho.m * rho.m).trace().real();
            const double oracle = std::sqrt(std::max(0.0, 2.0 * (1.0 - purity)));
            CHECK(one_to_other_concurrence(s, m) ==
                  doctest::Approx(oracle).epsilon(1e-9));
        }
    }
}

TEST_CASE("one_to_other_concurrence rejects invalid bipartitions") {
    const PureState s = named_state(NamedState::ghz3);
    CHECK_THROWS_AS(one_to_other_concurrence(s, 0u), std::invalid_argument);
    CHECK_THROWS_AS(one_to_other_concurrence(s, 7u), std::invalid_argument);
}

TEST_CASE("wootters_concurrence fixed values") {
    CHECK(wootters_concurrence(pure_density(bell_pair())) ==
          doctest::Approx(1.0).epsilon(1e-12));
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(4);
    v(0) = 1.0;
    CHECK(wootters_concurrence(pure_density(make_pure_state(2, v))) ==
          doctest::Approx(0.0).epsilon(1e-12));
    CHECK(wootters_concurrence(
              reduced_density(named_state(NamedState::w3), 6u)) ==
          doctest::Approx(2.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("wootters routes agree on random reductions") {
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        const DensityMatrix rho =
            reduced_density(random_pure_state(seed, 3), seed % 2 ? 3u : 6u);
        const auto a = wootters_lambdas(rho);
        const auto b = wootters_lambdas_spectral(rho);
        for (int i = 0; i < 4; ++i)
            CHECK(a[i] == doctest::Approx(b[i]).epsilon(1e-7));
        CHECK(a[0] >= a[1]);
        CHECK(a[1] >= a[2]);
        CHECK(a[2] >= a[3]);
    }
}

TEST_CASE("wootters_concurrence rejects invalid input") {
    DensityMatrix bad;
    bad.m = Eigen::MatrixXcd::Identity(4, 4);
    bad.m(0, 0) = -0.5;  // not positive semidefinite
    CHECK_THROWS_AS(wootters_concurrence(bad), std::invalid_argument);
    DensityMatrix two;
    two.m = Eigen::MatrixXcd::Identity(2, 2) * 0.5;
    CHECK_THROWS_AS(wootters_concurrence(two), std::invalid_argument);
}

TEST_CASE("concurrence_of_assistance fixed values and ordering") {
    CHECK(concurrence_of_assistance(pure_density(bell_pair())) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(concurrence_of_assistance(
              reduced_density(named_state(NamedState::ghz3), 6u)) ==
          doctest::Approx(1.0).epsilon(1e-12));
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        const DensityMatrix rho =
            reduced_density(random_pure_state(seed, 3), 6u);
        CHECK(concurrence_of_assistance(rho) >=
              wootters_concurrence(rho) - 1e-12);
    }
}

TEST_CASE("three_tangle fixed values") {
    CHECK(three_tangle(named_state(NamedState::ghz3)) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(three_tangle(named_state(NamedState::w3)) ==
          doctest::Approx(0.0).epsilon(1e-8));
    CHECK(three_tangle(named_state(NamedState::product3)) ==
          doctest::Approx(0.0).epsilon(1e-12));
    double raw = 1.0;
    three_tangle(named_state(NamedState::w3), 0, &raw);
    CHECK(std::abs(raw) < 1e-8);  // may be slightly negative before clamping
}

TEST_CASE("three_tangle routes agree") {
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        const PureState s = random_pure_state(seed, 3);
        const double hyperdet = three_tangle_hyperdet(s);
        for (int pivot = 0; pivot < 3; ++pivot)
            CHECK(three_tangle(s, pivot) ==
                  doctest::Approx(hyperdet).epsilon(1e-8));
        for (unsigned pair : {3u, 5u, 6u})
            CHECK(three_tangle_assist(s, pair) ==
                  doctest::Approx(hyperdet).epsilon(1e-8));
    }
}

TEST_CASE("perimeter fixed values and reformulation") {
    CHECK(perimeter(named_state(NamedState::ghz3)) ==
          doctest::Approx(3.0).epsilon(1e-12));
    CHECK(perimeter(named_state(NamedState::product3)) ==
          doctest::Approx(0.0).epsilon(1e-12));
    CHECK(perimeter(named_state(NamedState::w3)) ==
          doctest::Approx(8.0 / 3.0).epsilon(1e-12));
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        const PureState s = random_pure_state(seed, 3);
        CHECK(perimeter(s) ==
              doctest::Approx(perimeter_via_tangle(s)).epsilon(1e-9));
    }
}

TEST_CASE("concurrence_fill fixed values") {
    CHECK(concurrence_fill(named_state(NamedState::ghz3)) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(concurrence_fill(named_state(NamedState::bisep_a)) ==
          doctest::Approx(0.0).epsilon(1e-7));
    CHECK(concurrence_fill(named_state(NamedState::w3)) ==
          doctest::Approx(8.0 / 9.0).epsilon(1e-12));
}

TEST_CASE("concurrence_fill routes agree") {
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        const PureState s = random_pure_state(seed, 3);
        const double f = concurrence_fill(s);
        CHECK(f >= 0.0);
        CHECK(f <= 1.0 + 1e-10);
        CHECK(fill_via_tangle(s) == doctest::Approx(f).epsilon(1e-9));
        CHECK(fill_via_assistance(s) == doctest::Approx(f).epsilon(1e-9));
    }
}

TEST_CASE("triangle inequality on random states") {
    for (std::uint64_t seed = 1; seed <= 500; ++seed) {
        const PureState s = random_pure_state(seed, 3);
        double c2[3];
        for (int p = 0; p < 3; ++p) {
            const double c = one_to_other_concurrence(s, 1u << p);
            c2[p] = c * c;
        }
        for (int p = 0; p < 3; ++p)
            CHECK(c2[p] <= c2[(p + 1) % 3] + c2[(p + 2) % 3] + 1e-10);
    }
}

TEST_CASE("g_quantity fixed values and identity") {
    CHECK(g_quantity(named_state(NamedState::ghz3), 6u) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(g_quantity(named_state(NamedState::product3), 6u) ==
          doctest::Approx(0.0).epsilon(1e-12));
    CHECK(g_quantity(named_state(NamedState::w3), 6u) ==
          doctest::Approx(8.0 / 9.0).epsilon(1e-12));
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        const PureState s = random_pure_state(seed, 3);
        const double c = one_to_other_concurrence(s, 1u);
        CHECK(g_quantity(s, 6u) ==
              doctest::Approx(perimeter(s) - 2.0 * c * c).epsilon(1e-9));
        // tau + 2 C^2(rho_jk) route
        const double cw = wootters_concurrence(reduced_density(s, 6u));
        CHECK(g_quantity(s, 6u) ==
              doctest::Approx(three_tangle_hyperdet(s) + 2.0 * cw * cw)
                  .epsilon(1e-8));
    }
}

TEST_CASE("side_product_s fixed values") {
    CHECK(side_product_s(named_state(NamedState::ghz3)) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(side_product_s(named_state(NamedState::bisep_a)) ==
          doctest::Approx(0.0).epsilon(1e-12));
    CHECK(side_product_s(named_state(NamedState::w3)) ==
          doctest::Approx(std::pow(8.0 / 9.0, 0.75)).epsilon(1e-12));
}

TEST_CASE("nqubit_s reduces to side_product_s for n=3") {
    CHECK(nqubit_s(named_state(NamedState::ghz3)) ==
          doctest::Approx(1.0).epsilon(1e-12));
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        const PureState s = random_pure_state(seed, 3);
        CHECK(nqubit_s(s) == doctest::Approx(side_product_s(s)).epsilon(1e-12));
    }
}

TEST_CASE("nqubit_s on four qubits") {
    CHECK(nqubit_s(named_state(NamedState::ghz4)) ==
          doctest::Approx(1.0).epsilon(1e-12));
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(16);
    v(0) = 1.0;
    CHECK(nqubit_s(make_pure_state(4, v)) ==
          doctest::Approx(0.0).epsilon(1e-12));
    Eigen::VectorXcd two = Eigen::VectorXcd::Zero(4);
    two(0) = 1.0;
    CHECK_THROWS_AS(nqubit_s(make_pure_state(2, two)), std::invalid_argument);
}

TEST_CASE("acin_cbc_squared closed form") {
    AcinParams ghz;
    ghz.l = {1.0 / std::sqrt(2.0), 0.0, 0.0, 0.0, 1.0 / std::sqrt(2.0)};
    CHECK(acin_cbc_squared(ghz) == doctest::Approx(0.0).epsilon(1e-12));

    AcinParams mid;
    mid.l = {0.0, 0.0, 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0), 0.0};
    CHECK(acin_cbc_squared(mid) == doctest::Approx(1.0).epsilon(1e-12));

    AcinParams main_case;
    const double l1 = 0.096, l2 = 0.238, l3 = 0.173;
    main_case.l = {std::sqrt(1.0 - l1 * l1 - l2 * l2 - l3 * l3), l1, l2, l3,
                   0.0};
    const double cw =
        wootters_concurrence(reduced_density(acin_state(main_case), 6u));
    CHECK(acin_cbc_squared(main_case) ==
          doctest::Approx(cw * cw).epsilon(1e-9));
}

TEST_CASE("acin_cbc_squared matches the Wootters route with a phase") {
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        std::mt19937_64 rng(seed);
        std::normal_distribution<double> gauss;
        AcinParams p;
        double nrm = 0.0;
        for (double& l : p.l) {
            l = std::abs(gauss(rng));
            nrm += l * l;
        }
        for (double& l : p.l) l /= std::sqrt(nrm);
        p.phi = std::uniform_real_distribution<double>(0.0, M_PI)(rng);
        const double cw =
            wootters_concurrence(reduced_density(acin_state(p), 6u));
        CHECK(acin_cbc_squared(p) == doctest::Approx(cw * cw).epsilon(1e-9));
    }
}

TEST_CASE("parse_measure grammar") {
    CHECK(parse_measure("fill").tag == MeasureTag::fill);
    CHECK(parse_measure("fill").exponent == 1.0);
    CHECK(parse_measure("fill^1/2").exponent == 0.5);
    CHECK(parse_measure("fill^1/4").exponent == 0.25);
    CHECK(parse_measure("perimeter").tag == MeasureTag::perimeter);
    CHECK(parse_measure("tangle").tag == MeasureTag::tangle);
    CHECK(parse_measure("s").tag == MeasureTag::side_product_s);
    CHECK(parse_measure("nqubit-s").tag == MeasureTag::nqubit_s);
    CHECK(parse_measure("g:BC").tag == MeasureTag::g_quantity);
    CHECK(*parse_measure("g:BC").context == 6u);
    CHECK(parse_measure("c:BC").tag == MeasureTag::wootters);
    CHECK(parse_measure("c2:BC").exponent == 2.0);
    CHECK(parse_measure("ca:BC").tag == MeasureTag::assistance);
    CHECK(parse_measure("concurrence:A|BC").tag == MeasureTag::one_to_other);
    CHECK(*parse_measure("concurrence:A|BC").context == 1u);

    CHECK_THROWS_AS(parse_measure("nope"), std::invalid_argument);
    CHECK_THROWS_AS(parse_measure("concurrence:ABC"), std::invalid_argument);
    CHECK_THROWS_AS(parse_measure("g:A"), std::invalid_argument);
    CHECK_THROWS_AS(parse_measure("fill^0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_measure("fill^-1"), std::invalid_argument);
}

TEST_CASE("measure ids round-trip through str") {
    for (const char* id : {"fill", "fill^1/2", "fill^1/4", "perimeter",
                           "tangle", "s", "nqubit-s", "g:BC", "c:BC", "c2:BC",
                           "ca:BC", "concurrence:A|BC"}) {
        const MeasureId m = parse_measure(id);
        CHECK(m.str() == id);
    }
}

TEST_CASE("evaluate applies the exponent") {
    const PureState ghz = named_state(NamedState::ghz3);
    CHECK(evaluate(parse_measure("fill^1/2"), ghz) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(evaluate(parse_measure("tangle"), named_state(NamedState::w3)) ==
          doctest::Approx(0.0).epsilon(1e-8));
    CHECK(evaluate(parse_measure("fill^1/4"),
                   named_state(NamedState::bisep_a)) ==
          doctest::Approx(0.0).epsilon(1e-4));

    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const PureState s = random_pure_state(seed, 3);
        const double f = evaluate(parse_measure("fill"), s);
        const double f2 = evaluate(parse_measure("fill^1/2"), s);
        const double f4 = evaluate(parse_measure("fill^1/4"), s);
        CHECK(f4 >= f2 - 1e-12);
        CHECK(f2 >= f - 1e-12);
    }
}

TEST_CASE("measures are permutation invariant") {
    // relabeling parties = permuting amplitude index bits
    auto permute = [](const PureState& s, int perm[3]) {
        Eigen::VectorXcd v(8);
        for (int i = 0; i < 8; ++i) {
            const int bits[3] = {(i >> 2) & 1, (i >> 1) & 1, i & 1};
            const int j = (bits[perm[0]] << 2) | (bits[perm[1]] << 1) |
                          bits[perm[2]];
            v(j) = s.amp(i);
        }
        return make_pure_state(3, v);
    };
    int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                       {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const PureState s = random_pure_state(seed, 3);
        for (auto& perm : perms) {
            const PureState t = permute(s, perm);
            CHECK(concurrence_fill(t) ==
                  doctest::Approx(concurrence_fill(s)).epsilon(1e-10));
            CHECK(perimeter(t) ==
                  doctest::Approx(perimeter(s)).epsilon(1e-10));
            CHECK(three_tangle_hyperdet(t) ==
                  doctest::Approx(three_tangle_hyperdet(s)).epsilon(1e-10));
            CHECK(side_product_s(t) ==
                  doctest::Approx(side_product_s(s)).epsilon(1e-10));
        }
    }
}

TEST_CASE("party string helpers") {
    CHECK(parties_from_string("A") == 1u);
    CHECK(parties_from_string("BC") == 6u);
    CHECK(parties_to_string(5u, 3) == "AC");
    CHECK_THROWS_AS(parties_from_string(""), std::invalid_argument);
    CHECK_THROWS_AS(parties_from_string("x"), std::invalid_argument);
}
