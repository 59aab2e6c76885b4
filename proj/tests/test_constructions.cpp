#include "smlab/constructions.hpp"
#include "smlab/classify.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <set>

using namespace smlab;

TEST_CASE("idealization ring") {
    auto z12 = make_zn(12);
    auto m4 = make_cyclic_module(4, finite_base(z12));
    auto ext = idealization_ring(z12, m4);
    CHECK(ext->order == 48);
    CHECK(ext->nilradical_set.size() == 8);  // {0,6}(+)Z4

    // nilradical identity sqrt(0_{R(+)M}) = sqrt(0)(+)M, element by element
    for (int e = 0; e < ext->order; ++e) {
        auto [a, x] = ext->pairs[e];
        CHECK(ext->nilradical_set.contains(e) == z12->nilradical_set.contains(a));
    }
}

TEST_CASE("idealization nilradical identity across instances") {
    struct Case { long long n, k; };
    for (Case c : {Case{4, 2}, Case{4, 4}, Case{6, 3}, Case{9, 3}, Case{8, 2}}) {
        auto r = make_zn(c.n);
        auto m = make_cyclic_module(c.k, finite_base(r));
        auto ext = idealization_ring(r, m);
        for (int e = 0; e < ext->order; ++e)
            CHECK(ext->nilradical_set.contains(e) ==
                  r->nilradical_set.contains(ext->pairs[e].first));
    }
}

TEST_CASE("ideal embedding legality is exactly IM in N") {
    auto z12 = make_zn(12);
    auto m4 = make_cyclic_module(4, finite_base(z12));
    auto ext = idealization_ring(z12, m4);

    Ideal i2 = make_ideal(z12, {2});
    Submodule n2 = make_submodule(m4, {2});
    CHECK(idealization_ideal_legal(i2, n2));  // 2*Z4 = <2> subset of <2>
    Ideal emb = idealization_ideal(ext, i2, n2);
    CHECK(emb.members.size() == i2.members.size() * n2.members.size());

    Ideal unit = unit_ideal(z12);
    CHECK_FALSE(idealization_ideal_legal(unit, n2));  // 1*M = M not in <2>
    CHECK_THROWS_AS(idealization_ideal(ext, unit, n2), input_error);

    // both directions: legality of every (I, N) pair equals the containment scan
    for (const Ideal& i : enumerate_ideals(z12))
        for (const Submodule& n : enumerate_submodules(m4)) {
            bool contained = true;
            for (int a : i.members.items())
                for (int x = 0; x < m4->order; ++x)
                    if (!n.contains(m4->act(a, x))) contained = false;
            CHECK(idealization_ideal_legal(i, n) == contained);
        }
}

TEST_CASE("duplication ring and module") {
    auto z8 = make_zn(8);
    Ideal j4 = make_ideal(z8, {4});
    auto dup = duplicate_ring(z8, j4);
    CHECK(dup->order == 16);  // |R| * |J|
    auto m8 = ring_as_module(z8);
    auto dmod = duplicate_module(dup, m8, j4);
    CHECK(dmod->order == 16);  // pairs (m, m') with m - m' in 4*Z8

    // J = 0 collapses to the diagonal copy
    auto dup0 = duplicate_ring(z8, zero_ideal(z8));
    CHECK(dup0->order == 8);
    auto dmod0 = duplicate_module(dup0, m8, zero_ideal(z8));
    CHECK(dmod0->order == 8);

    // N join J for N = {0} is a submodule made of pairs (0, m), m in JM
    Submodule zn = dup_submodule(zero_submodule(m8), dmod);
    CHECK(zn.members.size() == 2);  // (0,0) and (0,4)
}

TEST_CASE("duplication annihilator formula") {
    auto z8 = make_zn(8);
    Ideal j4 = make_ideal(z8, {4});
    auto m2 = make_cyclic_module(2, finite_base(z8));
    auto dup = duplicate_ring(z8, j4);
    auto dmod = duplicate_module(dup, m2, j4);

    ScalarSet annM = ann_module(m2);
    ScalarSet annD = ann_module(dmod);
    // Ann_{R join J}(M join J) = {(r, r+j) : r in Ann(M), j in Ann(M) cap J}
    for (int e = 0; e < dup->order; ++e) {
        auto [a, b] = dup->pairs[e];
        int j = z8->sub(b, a);
        bool expect = annM.contains_rep(a) && annM.contains_rep(j) && j4.contains(j);
        CHECK(annD.contains_rep(e) == expect);
    }

    // faithfulness equivalence: M join J faithful iff M faithful
    auto m8 = ring_as_module(z8);
    auto dm8 = duplicate_module(dup, m8, j4);
    CHECK(ann_module(m8).is_zero());
    CHECK(ann_module(dm8).is_zero());
    CHECK_FALSE(ann_module(m2).is_zero());
    CHECK_FALSE(ann_module(dmod).is_zero());
}

TEST_CASE("amalgam ring and module") {
    auto z8 = make_zn(8);
    auto z4 = make_zn(4);
    auto f = reduce_hom(z8, z4);
    Ideal j2 = make_ideal(z4, {2});
    auto amal = amalgam_ring(f, j2);
    CHECK(amal->order == 16);  // |R1| * |J|

    auto m8 = ring_as_module(z8);
    auto m2 = make_cyclic_module(2, finite_base(z4));
    auto phi = make_semilinear_hom(f, m8, m2, [&] {
        std::vector<int> v(8);
        for (int i = 0; i < 8; ++i) v[i] = i % 2;
        return v;
    }());
    auto amod = amalgam_module(amal, phi, j2);
    CHECK(amod->order == 8);  // JM2 = 0 so |M1| * 1

    // J = {0} gives a ring isomorphic to R1 through the first projection
    auto amal0 = amalgam_ring(f, zero_ideal(z4));
    CHECK(amal0->order == 8);
    for (int e = 0; e < amal0->order; ++e)
        for (int e2 = 0; e2 < amal0->order; ++e2)
            CHECK(amal0->pairs[amal0->mul(e, e2)].first ==
                  z8->mul(amal0->pairs[e].first, amal0->pairs[e2].first));
}

TEST_CASE("amalgam with identities reproduces duplication") {
    auto z4 = make_zn(4);
    Ideal j2 = make_ideal(z4, {2});
    auto dup = duplicate_ring(z4, j2);

    auto id = identity_hom(z4);
    auto amal = amalgam_ring(id, j2);
    REQUIRE(amal->order == dup->order);

    // compare the two rings element-wise through their (a, b) pair encodings
    auto find_pair = [&](const RingPtr& r, std::pair<int, int> p) {
        for (int e = 0; e < r->order; ++e)
            if (r->pairs[e] == p) return e;
        return -1;
    };
    for (int x = 0; x < dup->order; ++x)
        for (int y = 0; y < dup->order; ++y) {
            int ax = find_pair(amal, dup->pairs[x]);
            int ay = find_pair(amal, dup->pairs[y]);
            REQUIRE(ax >= 0);
            REQUIRE(ay >= 0);
            CHECK(amal->pairs[amal->mul(ax, ay)] == dup->pairs[dup->mul(x, y)]);
            CHECK(amal->pairs[amal->add(ax, ay)] == dup->pairs[dup->add(x, y)]);
        }

    // module side: M join J equals M1 join^id J M1
    auto m4 = ring_as_module(z4);
    auto dmod = duplicate_module(dup, m4, j2);
    auto phi = make_semilinear_hom(id, m4, m4, [&] {
        std::vector<int> v(4);
        for (int i = 0; i < 4; ++i) v[i] = i;
        return v;
    }());
    auto amod = amalgam_module(amal, phi, j2);
    CHECK(amod->order == dmod->order);
    std::set<std::pair<int, int>> dpairs(dmod->pairs.begin(), dmod->pairs.end());
    std::set<std::pair<int, int>> apairs(amod->pairs.begin(), amod->pairs.end());
    CHECK(dpairs == apairs);
}

TEST_CASE("amalgam nilradical lemma") {
    auto z8 = make_zn(8);
    auto z4 = make_zn(4);
    auto f = reduce_hom(z8, z4);

    // J = <2> in Z4 is nilpotent: equality must hold
    Ideal j2 = make_ideal(z4, {2});
    auto a1 = amalgam_ring(f, j2);
    bool eq1 = true;
    for (int e = 0; e < a1->order; ++e) {
        bool lhs = a1->nilradical_set.contains(e);
        bool rhs = z8->nilradical_set.contains(a1->pairs[e].first);
        if (lhs != rhs) eq1 = false;
    }
    CHECK(eq1);

    // J = Z6 not inside sqrt(0) of Z6: equality must fail
    auto z6 = make_zn(6);
    auto idh = identity_hom(z6);
    auto a2 = amalgam_ring(idh, unit_ideal(z6));
    bool eq2 = true;
    for (int e = 0; e < a2->order; ++e) {
        bool lhs = a2->nilradical_set.contains(e);
        bool rhs = z6->nilradical_set.contains(a2->pairs[e].first);
        if (lhs != rhs) eq2 = false;
    }
    CHECK_FALSE(eq2);
}
