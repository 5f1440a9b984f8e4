#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qsym/classical.hpp"
#include "qsym/errors.hpp"

using namespace qsym;

namespace {

std::shared_ptr<const Algebra> algebra(const std::string& label) {
    static std::map<std::string, std::shared_ptr<const Algebra>> cache;
    auto& p = cache[label];
    if (!p) p = std::make_shared<const Algebra>(cartan_init(label));
    return p;
}

}  // namespace

TEST_CASE("matrix realization") {
    ClassicalLie sl2(cartan_init("A1"));
    CHECK(sl2.dim() == 3);
    CHECK(ClassicalLie::bracket(sl2.e(0), sl2.f(0)) == sl2.h(0));
    CHECK(ClassicalLie::bracket(sl2.h(0), sl2.e(0)) == sl2.from_coords({2, 0, 0}));
    CHECK_THROWS_AS(sl2.coords(identity_matrix<mpq_class>(2)), ValidationError);

    for (std::string label : {"A2", "A3", "A1xA1", "A1xA2"}) {
        RootDatum rd = cartan_init(label);
        ClassicalLie g(rd);
        CHECK(g.dim() == 2 * static_cast<int>(rd.positive_roots.size()) + rd.n);
        for (int i = 0; i < rd.n; ++i)
            for (int j = 0; j < rd.n; ++j) {
                QMat hb = ClassicalLie::bracket(g.h(i), g.e(j));
                CHECK(hb == g.from_coords([&] {
                    QVec v(g.dim(), mpq_class(0));
                    v = g.coords(g.e(j));
                    for (auto& c : v) c *= rd.cartan[i][j];
                    return v;
                }()));
                QMat ef = ClassicalLie::bracket(g.e(i), g.f(j));
                CHECK(ef == (i == j ? g.h(i) : QMat(g.size(), QVec(g.size(), mpq_class(0)))));
            }
        for (int k = 0; k < g.dim(); ++k) {
            QVec v(g.dim(), mpq_class(0));
            v[k] = 1;
            CHECK(g.coords(g.basis(k)) == v);
        }
    }
    CHECK_THROWS_AS(ClassicalLie(cartan_init("B2")), ArgumentError);
}

TEST_CASE("classical involutions") {
    struct Case {
        std::string label;
        std::vector<int> pt, d;
        bool involution;
    };
    for (const auto& c : std::vector<Case>{{"A1", {}, {0}, true},
                                           {"A2", {}, {0, 1}, true},
                                           {"A2", {}, {1, 0}, true},
                                           {"A1xA1", {}, {1, 0}, true},
                                           {"A3", {1}, {2, 1, 0}, true},
                                           {"A3", {}, {2, 1, 0}, true},
                                           {"A3", {0, 2}, {0, 1, 2}, true},
                                           {"A2", {0}, {0, 1}, false}}) {
        CAPTURE(c.label);
        CAPTURE(c.pt.size());
        RootDatum rd = cartan_init(c.label);
        ThetaData th = validate_satake(rd, c.pt, c.d);
        ClassicalLie g(rd);
        ClassicalInvolution t = classical_theta(g, th);
        CHECK(t.automorphism);
        CHECK(t.involution == c.involution);
        if (!c.involution) {
            // theta^2(f2) = -f2
            QVec f2 = g.coords(g.f(1));
            QVec back = t.apply(t.apply(f2));
            for (auto& v : f2) v = -v;
            CHECK(back == f2);
        }
    }
    ClassicalLie sl2(cartan_init("A1"));
    ClassicalInvolution t = classical_theta(sl2, validate_satake(cartan_init("A1"), {}, {0}));
    CHECK(t.apply(sl2.coords(sl2.e(0))) == sl2.coords(sl2.f(0)));
    CHECK(t.apply(sl2.coords(sl2.h(0))) == sl2.coords(QMat{{-1, 0}, {0, 1}}));
}

TEST_CASE("specialization of catalog pairs") {
    struct Case {
        std::string name, label;
        std::vector<int> pt, d;
        PairParams params;
        bool ok;
    };
    PairParams c3, s1, s1q;
    c3.c[0] = QRat::q();
    s1.s[0] = QRat::q() - QRat(1);
    s1q.s[0] = QRat::q();
    std::vector<Case> cases{{"P1", "A1", {}, {0}, {}, true},      {"P2", "A2", {}, {0, 1}, {}, true},
                            {"P3", "A2", {}, {1, 0}, {}, true},   {"P4", "A2", {0}, {0, 1}, {}, false},
                            {"P5", "A1xA1", {}, {1, 0}, {}, true}, {"P3c", "A2", {}, {1, 0}, c3, true},
                            {"P1s", "A1", {}, {0}, s1, true},     {"P1q", "A1", {}, {0}, s1q, true}};
    for (const auto& c : cases) {
        CAPTURE(c.name);
        auto a = algebra(c.label);
        PairPresentation pr = build_pair(validate_satake(a->root(), c.pt, c.d), a, c.params);
        SpecializationReport r = specialize_pair(pr);
        CHECK(r.ok == c.ok);
        for (const auto& it : r.items) {
            CHECK(it.poles_ok);
            CHECK(it.in_g);
            CHECK(it.tip_ok);
        }
        if (c.name == "P1") CHECK(r.items[0].image == "e1 + f1");
        if (c.name == "P1q") CHECK(r.items[0].image == "e1 + f1 + 1");
        if (c.name == "P3") CHECK(r.items[0].image == "e2 + f1");
        if (c.name == "P4") {
            CHECK(r.items[0].fixed);
            CHECK(!r.items[1].fixed);
            CHECK(!r.theta_involution);
        }
    }
}
