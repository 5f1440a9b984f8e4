#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "qsym/errors.hpp"
#include "qsym/involution.hpp"

using namespace qsym;

namespace {

QRat q(long k = 1) { return QRat::q_pow(k); }

std::vector<int> id_perm(int n) {
    std::vector<int> d(n);
    std::iota(d.begin(), d.end(), 0);
    return d;
}

// (ad_r x_i) b written out from t_i^-1 b x_i - t_i^-1 x_i b
Element adr_x_direct(const Algebra& a, int i, const Element& b) {
    return a.mul({a.t(i, -1), b, a.x(i)}) - a.mul({a.t(i, -1), a.x(i), b});
}

}  // namespace

TEST_CASE("A1 split") {
    RootDatum rd = cartan_init("A1");
    Algebra a(rd);
    ThetaData th = validate_satake(rd, {}, {0});
    CHECK(th.p == std::vector<int>{0});
    CHECK(th.pi_star == std::vector<int>{0});
    CHECK(th.seq[0].empty());
    CHECK(th.m[0] == 0);
    CHECK(th.odd_fixed_points().empty());
    CHECK(theta_tilde_y(th, a, 0) == a.mul(a.t(0, -1), a.x(0)));
    CHECK(theta_tilde_torus(th, {0}) == Vec{0});
    CHECK(theta_tilde_torus(th, {1}) == Vec{1});
    CHECK(theta_tilde_torus(th, {-3}) == Vec{-3});
}

TEST_CASE("A2 with the diagram flip") {
    RootDatum rd = cartan_init("A2");
    Algebra a(rd);
    ThetaData th = validate_satake(rd, {}, {1, 0});
    CHECK(th.p == std::vector<int>{1, 0});
    CHECK(th.pi_star == std::vector<int>{0});
    CHECK(th.seq[0].empty());
    CHECK(theta_tilde_y(th, a, 0) == a.mul(a.t(1, -1), a.x(1)));
    CHECK(theta_tilde_y(th, a, 1) == a.mul(a.t(0, -1), a.x(0)));
    CHECK(a.str(theta_tilde_y(th, a, 0)) == "t2^-1 x2");
}

TEST_CASE("A2 with pi_Theta = {a1}") {
    RootDatum rd = cartan_init("A2");
    Algebra a(rd);
    ThetaData th = validate_satake(rd, {0}, id_perm(2));
    CHECK(th.p[1] == 1);
    CHECK(th.pi_star == std::vector<int>{1});
    CHECK(admissible_sequence(th, 1) == RaisingSequence{{0, 1}});
    CHECK(sequence_str(th.seq[1]) == "(1) (1)");
    CHECK(th.m[1] == 1);
    // p(2) = 2 with m(2) odd: this datum fails the involution parity condition
    CHECK(th.odd_fixed_points() == std::vector<int>{1});

    Element got = theta_tilde_y(th, a, 1);
    Element want = adr_x_direct(a, 0, a.mul(a.t(1, -1), a.x(1)));
    CHECK(got == want);
    Element closed = a.mul(a.torus({-1, -1}), a.mul(a.x(1), a.x(0)) - a.mul(a.x(0), a.x(1)).scaled(q(-1)));
    CHECK(got == closed);
    CHECK(a.weight(got) == Vec{1, 1});
    CHECK_THROWS_AS(theta_tilde_y(th, a, 0), ArgumentError);
    CHECK(theta_tilde_torus(th, {1, 0}) == Vec{-1, 0});
}

TEST_CASE("A3 with pi_Theta = {a2} and the flip") {
    RootDatum rd = cartan_init("A3");
    Algebra a(rd);
    ThetaData th = validate_satake(rd, {1}, {2, 1, 0});
    CHECK(th.p == std::vector<int>{2, 1, 0});
    CHECK(th.pi_star == std::vector<int>{0});
    CHECK(th.seq[0] == RaisingSequence{{1, 1}});
    CHECK(th.odd_fixed_points().empty());
    Element b1 = theta_tilde_y(th, a, 0);
    CHECK(b1 == adr_x_direct(a, 1, a.mul(a.t(2, -1), a.x(2))));
    Element b3 = theta_tilde_y(th, a, 2);
    CHECK(b3 == -adr_x_direct(a, 1, a.mul(a.t(0, -1), a.x(0))));
    CHECK(a.weight(b1) == Vec{0, 1, 1});
    CHECK(a.weight(b3) == Vec{1, 1, 0});
}

TEST_CASE("rejected data") {
    RootDatum a2 = cartan_init("A2");
    CHECK_THROWS_AS(validate_satake(a2, {0}, {1, 0}), ValidationError);
    CHECK_THROWS_AS(validate_satake(a2, {0, 0}, id_perm(2)), ValidationError);
    CHECK_THROWS_AS(validate_satake(a2, {}, {0, 0}), ValidationError);
}

TEST_CASE("sequence properties over all subsets") {
    for (std::string label : {"A1", "A2", "A3", "B2", "G2", "A1xA1", "B3", "C3"}) {
        RootDatum rd = cartan_init(label);
        Algebra alg(rd);
        std::vector<std::vector<int>> ds{id_perm(rd.n)};
        try {
            ds.push_back(diagram_flip(rd));
        } catch (const ValidationError&) {
        }
        for (int mask = 0; mask < (1 << rd.n); ++mask) {
            std::vector<int> pt;
            for (int i = 0; i < rd.n; ++i)
                if (mask >> i & 1) pt.push_back(i);
            for (const auto& d : ds) {
                ThetaData th;
                try {
                    th = validate_satake(rd, pt, d);
                } catch (const ValidationError&) {
                    continue;
                }
                CAPTURE(label);
                CAPTURE(mask);
                for (int i = 0; i < rd.n; ++i) {
                    if (th.in_theta[i]) {
                        CHECK(th.theta.apply(rd.simple(i)) == rd.simple(i));
                        continue;
                    }
                    CHECK(th.p[th.p[i]] == i);
                    CHECK(th.in_star(i) != (th.p[i] != i && th.in_star(th.p[i])));
                    RaisingSequence s = sequence_for(th, i);
                    Vec sum = rd.simple(th.p[i]);
                    for (auto [j, k] : s) {
                        CHECK(th.in_theta[j]);
                        CHECK(k > 0);
                        sum = vadd(sum, vscale(rd.simple(j), k));
                    }
                    CHECK(sum == th.theta.apply(vscale(rd.simple(i), -1)));
                    if (ht(sum) <= 3) {
                        Element b = theta_tilde_y(th, alg, i);
                        CHECK(alg.weight(b) == vscale(th.theta.apply(rd.simple(i)), -1));
                        for (const auto& [w, c] : b) {
                            CHECK(w.y.empty());
                            CHECK_NOTHROW(specialize_q1(c));
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("parity of m(i) on genuine involutions") {
    struct Case {
        std::string label;
        std::vector<int> pt;
        std::vector<int> d;
    };
    std::vector<Case> cases{{"A1", {}, {0}},          {"A2", {}, {0, 1}},        {"A2", {}, {1, 0}},
                            {"A3", {1}, {2, 1, 0}},    {"A3", {0, 2}, {0, 1, 2}}, {"B2", {}, {0, 1}},
                            {"B2", {1}, {0, 1}},       {"A1xA1", {}, {1, 0}},     {"C3", {0, 2}, {0, 1, 2}}};
    for (const auto& c : cases) {
        CAPTURE(c.label);
        ThetaData th = validate_satake(cartan_init(c.label), c.pt, c.d);
        CHECK(th.odd_fixed_points().empty());
    }
}
