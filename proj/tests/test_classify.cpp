#include "smlab/classify.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <numeric>

using namespace smlab;

TEST_CASE("ideal classification in Z12") {
    auto z12 = make_zn(12);
    PropertyVector p2 = classify_ideal(z12, make_ideal(z12, {2}));
    CHECK(p2.semi_n == true);
    CHECK(p2.n_sub == false);

    PropertyVector p4 = classify_ideal(z12, make_ideal(z12, {4}));
    CHECK(p4.semi_n == false);  // 2^2 in <4>, 2 not nilpotent, 2 not in <4>

    for (long long n : {4, 6, 9, 12}) {
        auto r = make_zn(n);
        PropertyVector pz = classify_ideal(r, zero_ideal(r));
        CHECK(pz.semi_n == true);  // zero ideal is always semi n
    }
}

TEST_CASE("submodule classification over Z") {
    auto m12 = make_cyclic_module(12, integer_base());
    Submodule n4 = make_submodule(m12, {4});
    PropertyVector pv = classify_submodule(n4);
    CHECK(pv.semi_n == true);
    CHECK(pv.n_sub == false);
    CHECK(pv.r_sub == true);
    CHECK(pv.semi_r == true);
    CHECK(pv.primary == true);  // (N:M) = 4Z, sqrt = 2Z; rm in <4>, r not in 2Z => m in <4>
    CHECK(pv.prime == false);

    // every proper submodule of the Z-module Z_12: semi_n, never n_sub
    for (const Submodule& n : enumerate_submodules(m12)) {
        if (!n.is_proper()) continue;
        PropertyVector p = classify_submodule(n);
        CHECK(p.semi_n == true);
        CHECK(p.n_sub == false);
    }
}

TEST_CASE("n-submodules over finite base") {
    auto z12 = make_zn(12);
    auto m4 = make_cyclic_module(4, finite_base(z12));
    Submodule n2 = make_submodule(m4, {2});
    PropertyVector pv = classify_submodule(n2);
    CHECK(pv.n_sub == true);  // sqrt(Ann) = <2>, qualifying r odd hence invertible mod 4
    CHECK(pv.semi_n == true);
}

TEST_CASE("zero submodule is always semi n") {
    for (long long n : {6, 8, 12}) {
        auto m = make_cyclic_module(n, integer_base());
        CHECK(is_semi_n_submodule(zero_submodule(m)));
        auto r = make_zn(n);
        CHECK(is_semi_n_submodule(zero_submodule(ring_as_module(r))));
    }
}

TEST_CASE("diagram implications on sample modules") {
    std::vector<ModulePtr> mods = {
        make_cyclic_module(12, integer_base()),
        ring_as_module(make_zn(12)),
        ring_as_module(make_zn(8)),
        make_cyclic_module(4, finite_base(make_zn(12))),
        product_module(make_cyclic_module(2, integer_base()),
                       make_cyclic_module(4, integer_base())),
    };
    for (const ModulePtr& m : mods) {
        for (const Submodule& n : enumerate_submodules(m)) {
            if (!n.is_proper()) continue;
            PropertyVector p = classify_submodule(n);
            CHECK((!*p.prime || *p.semiprime));
            CHECK((!*p.semiprime || *p.semi_n));
            CHECK((!*p.semi_n || *p.semi_r));
            CHECK((!*p.n_sub || *p.semi_n));
            CHECK((!*p.n_sub || *p.r_sub));
            CHECK((!*p.r_sub || *p.semi_r));
        }
    }
}

TEST_CASE("sqrt-colon decomposition") {
    auto z12 = make_zn(12);
    auto r12 = ring_as_module(z12);
    Submodule n2 = make_submodule(r12, {2});
    auto res = sqrt_colon_decomposition_holds(n2, 1);
    REQUIRE(res.has_value());
    CHECK(*res == true);

    auto zres = sqrt_colon_decomposition_holds(zero_submodule(r12), 1);
    REQUIRE(zres.has_value());
    CHECK(*zres == true);

    // eligible m must have zero annihilator
    CHECK_FALSE(sqrt_colon_decomposition_holds(n2, 2).has_value());
}

TEST_CASE("rad of a submodule") {
    auto m12 = make_cyclic_module(12, integer_base());
    Submodule n4 = make_submodule(m12, {4});
    Submodule expect2 = make_submodule(m12, {2});
    CHECK(rad_submodule(n4).members == expect2.members);
    CHECK(rad_submodule(full_submodule(m12)).members.size() == 12);
}

TEST_CASE("ideal/submodule bridge for semi_n") {
    for (long long n : {4, 6, 8, 9, 12}) {
        auto r = make_zn(n);
        auto m = ring_as_module(r);
        auto ideals = enumerate_ideals(r);
        auto subs = enumerate_submodules(m);
        REQUIRE(ideals.size() == subs.size());
        for (std::size_t i = 0; i < ideals.size(); ++i) {
            if (!ideals[i].is_proper()) continue;
            CHECK(is_semi_n_ideal(ideals[i]) == is_semi_n_submodule(subs[i]));
        }
    }
}

TEST_CASE("mutations change predicate verdicts") {
    // Every mutation must observably change is_semi_n_submodule or
    // is_n_submodule somewhere on a small reference family.
    std::vector<ModulePtr> mods = {
        ring_as_module(make_zn(12)),
        ring_as_module(make_zn(8)),
        make_cyclic_module(4, finite_base(make_zn(12))),
        make_cyclic_module(12, integer_base()),
    };
    auto verdicts = [&] {
        std::vector<bool> out;
        for (const ModulePtr& m : mods)
            for (const Submodule& n : enumerate_submodules(m)) {
                if (!n.is_proper()) continue;
                out.push_back(is_semi_n_submodule(n));
                out.push_back(is_n_submodule(n));
            }
        return out;
    };
    std::vector<bool> baseline = verdicts();
    for (Mutation mu : {Mutation::semi_n_drop_nilpotent_guard, Mutation::semi_n_drop_ann_guard,
                        Mutation::semi_n_forall_to_exists, Mutation::semi_n_conclude_membership,
                        Mutation::n_drop_radical_guard, Mutation::n_forall_to_exists}) {
        MutationGuard guard(mu);
        INFO(mutation_name(mu));
        CHECK(verdicts() != baseline);
    }
    CHECK(verdicts() == baseline);  // guard restored the unmutated predicates
}

TEST_CASE("multiplication, faithful, torsion-free flags") {
    auto m12 = make_cyclic_module(12, integer_base());
    CHECK(is_multiplication_module(m12));
    CHECK_FALSE(is_faithful_module(m12));  // Ann = 12Z != 0

    auto z12 = make_zn(12);
    auto r12 = ring_as_module(z12);
    CHECK(is_multiplication_module(r12));
    CHECK(is_faithful_module(r12));

    auto z2 = make_zn(2);
    auto v2 = product_module(ring_as_module(z2), ring_as_module(z2));
    CHECK_FALSE(is_multiplication_module(v2));  // lines of F2^2 are not IM
    CHECK(is_torsion_free(v2));
}
