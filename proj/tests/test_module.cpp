#include "smlab/module.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <vector>

using namespace smlab;

namespace {

// Independent submodule-count oracle: close every generating set of size
// <= 2 under addition and scalar action, collect the distinct subsets.
// Valid whenever every submodule is 2-generated (true for M = C_a x C_b).
int two_generator_submodule_count(const ModulePtr& mod) {
    std::set<std::vector<int>> seen;
    auto close = [&](std::vector<int> gens) {
        ElemSet s(mod->order);
        s.insert(mod->zero);
        std::vector<int> frontier{mod->zero};
        for (int g : gens)
            if (s.insert(g)) frontier.push_back(g);
        for (std::size_t i = 0; i < frontier.size(); ++i) {
            for (std::size_t j = 0; j <= i; ++j) {
                int v = mod->add(frontier[i], frontier[j]);
                if (s.insert(v)) frontier.push_back(v);
            }
            for (int r = 0; r < mod->scalar_count(); ++r) {
                int v = mod->act(r, frontier[i]);
                if (s.insert(v)) frontier.push_back(v);
            }
        }
        seen.insert(s.items());
    };
    for (int a = 0; a < mod->order; ++a) {
        close({a});
        for (int b = a + 1; b < mod->order; ++b) close({a, b});
    }
    return static_cast<int>(seen.size());
}

}  // namespace

TEST_CASE("cyclic modules over Z") {
    auto m12 = make_cyclic_module(12, integer_base());
    CHECK(m12->order == 12);
    CHECK(m12->exponent == 12);
    CHECK(enumerate_submodules(m12).size() == 6);

    auto m1 = make_cyclic_module(1, integer_base());
    CHECK(m1->is_zero_module());
    CHECK(enumerate_submodules(m1).size() == 1);

    // finite Z-modules are all torsion
    CHECK(torsion_elements(m12).size() == 12);
    CHECK_FALSE(is_torsion_free(m12));
}

TEST_CASE("cyclic modules over Z_n") {
    auto z12 = make_zn(12);
    auto m4 = make_cyclic_module(4, finite_base(z12));
    CHECK(m4->order == 4);
    CHECK_THROWS_AS(make_cyclic_module(5, finite_base(z12)), input_error);
}

TEST_CASE("annihilators") {
    auto m12 = make_cyclic_module(12, integer_base());
    CHECK(ann_elem(m12, 4).gen == 3);   // order of 4 mod 12 is 3
    CHECK(ann_module(m12).gen == 12);   // exponent

    auto z12 = make_zn(12);
    auto r12 = ring_as_module(z12);
    CHECK(ann_elem(r12, 1).is_zero());  // faithful cyclic generator
    CHECK(ann_module(r12).is_zero());
}

TEST_CASE("colon operations") {
    auto m12 = make_cyclic_module(12, integer_base());
    Submodule n4 = make_submodule(m12, {4});
    CHECK(colon_ring(n4).gen == 4);  // r Z12 in <4> iff 4 | r

    // (N :_M R) = N via the scalar-set of the whole base
    auto z12 = make_zn(12);
    auto r12 = ring_as_module(z12);
    Submodule n2 = make_submodule(r12, {2});
    ScalarSet all{r12->base, [&] {
                      ElemSet s(12);
                      for (int i = 0; i < 12; ++i) s.insert(i);
                      return s;
                  }(),
                  0};
    CHECK(colon_module(n2, all).members == n2.members);

    // (<2bar> :_{Z4} <2>) over Z12-module Z4 is all of Z4
    auto m4 = make_cyclic_module(4, finite_base(z12));
    Submodule nb = make_submodule(m4, {2});
    ScalarSet two{m4->base, ideal_closure(*z12, {2}), 0};
    CHECK(colon_module(nb, two).members.size() == 4);
}

TEST_CASE("torsion sets") {
    auto z6 = make_zn(6);
    auto m6 = ring_as_module(z6);
    CHECK(torsion_elements(m6).items() == std::vector<int>{0, 2, 3, 4});

    auto zero = make_cyclic_module(1, integer_base());
    CHECK(torsion_elements(zero).size() == 1);

    // vector spaces are torsion-free... but have zero divisors acting? No:
    // a field acts regularly, so T(V) = {0}.
    auto z5 = make_zn(5);
    auto v = ring_as_module(z5);
    CHECK(is_torsion_free(v));
}

TEST_CASE("submodule enumeration matches 2-generator oracle") {
    auto z6 = make_zn(6);
    auto m66 = product_module(ring_as_module(z6), ring_as_module(z6));
    CHECK((int)enumerate_submodules(m66).size() == two_generator_submodule_count(m66));

    auto m22 = product_module(make_cyclic_module(2, integer_base()),
                              make_cyclic_module(2, integer_base()));
    CHECK(enumerate_submodules(m22).size() == 5);
    CHECK((int)enumerate_submodules(m22).size() == two_generator_submodule_count(m22));

    auto m24 = product_module(make_cyclic_module(2, integer_base()),
                              make_cyclic_module(4, integer_base()));
    CHECK((int)enumerate_submodules(m24).size() == two_generator_submodule_count(m24));
}

TEST_CASE("ring-as-module submodules are the ideals") {
    for (long long n : {4, 6, 12, 16}) {
        auto r = make_zn(n);
        auto m = ring_as_module(r);
        auto subs = enumerate_submodules(m);
        auto ideals = enumerate_ideals(r);
        REQUIRE(subs.size() == ideals.size());
        for (std::size_t i = 0; i < subs.size(); ++i)
            CHECK(subs[i].members == ideals[i].members);
    }
}

TEST_CASE("quotient modules and homs") {
    auto m12 = make_cyclic_module(12, integer_base());
    auto [q, proj] = quotient_module(m12, make_submodule(m12, {6}));
    CHECK(q->order == 6);
    CHECK(proj.is_surjective());

    Submodule n4 = make_submodule(m12, {4});
    Submodule img = proj.image(n4);
    CHECK(img.members.size() == 3);

    ModuleHom id = make_module_hom(m12, m12, [&] {
        std::vector<int> v(m12->order);
        for (int i = 0; i < m12->order; ++i) v[i] = i;
        return v;
    }());
    CHECK(id.kernel().is_zero());
    CHECK(id.is_isomorphism());

    // ill-defined generator image: 1 in Z4 -> 1 in Z3 breaks 4*1=0
    auto m4 = make_cyclic_module(4, integer_base());
    auto m3 = make_cyclic_module(3, integer_base());
    CHECK_THROWS_AS(hom_from_generator_images(m4, m3, {1}, {1}), input_error);
}

TEST_CASE("localization over the integers") {
    auto m12 = make_cyclic_module(12, integer_base());
    CHECK(localize(m12, {2}).first->order == 3);
    CHECK(localize(m12, {1}).first->order == 12);
    CHECK(localize(m12, {6}).first->order == 1);
    CHECK_THROWS_AS(localize(m12, {0}), input_error);

    auto z12 = make_zn(12);
    auto r12 = ring_as_module(z12);
    CHECK_THROWS_AS(localize(r12, {5}), input_error);  // finite base not allowed
}
