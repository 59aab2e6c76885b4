#include "smlab/ring.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <numeric>

using namespace smlab;

namespace {

std::vector<int> set_items(const ElemSet& s) { return s.items(); }

int divisor_count(int n) {
    int c = 0;
    for (int d = 1; d <= n; ++d)
        if (n % d == 0) ++c;
    return c;
}

}  // namespace

TEST_CASE("make_zn basics") {
    auto z1 = make_zn(1);
    CHECK(z1->order == 1);
    CHECK(z1->zero == z1->one);

    auto z12 = make_zn(12);
    CHECK(z12->order == 12);
    CHECK(set_items(z12->nilradical_set) == std::vector<int>{0, 6});

    auto z4 = make_zn(4);
    CHECK(set_items(z4->units_set) == std::vector<int>{1, 3});
    CHECK(set_items(z4->zdiv_set) == std::vector<int>{0, 2});

    CHECK(set_items(z12->units_set) == std::vector<int>{1, 5, 7, 11});

    CHECK_THROWS_AS(make_zn(0), input_error);
    CHECK_THROWS_AS(make_zn(-3), input_error);
    CHECK_THROWS_AS(make_zn(100000), capacity_error);
}

TEST_CASE("units and zero divisors partition every ring") {
    for (long long n : {1, 2, 4, 6, 12, 16, 30}) {
        auto r = make_zn(n);
        for (int a = 0; a < r->order; ++a)
            CHECK(r->is_unit(a) != r->is_zero_divisor(a));
    }
}

TEST_CASE("annihilator of ring elements") {
    auto z12 = make_zn(12);
    CHECK(set_items(z12->ann_elem(4)) == std::vector<int>{0, 3, 6, 9});
    CHECK(set_items(z12->ann_elem(1)) == std::vector<int>{0});
    CHECK(z12->ann_elem(0).size() == 12);
}

TEST_CASE("ideal enumeration matches divisor-count oracle") {
    for (int n = 1; n <= 24; ++n) {
        auto r = make_zn(n);
        CHECK((int)enumerate_ideals(r).size() == divisor_count(n));
    }
    auto z2xz2 = product_ring(make_zn(2), make_zn(2));
    CHECK(enumerate_ideals(z2xz2).size() == 4);
    auto z5 = make_zn(5);
    CHECK(enumerate_ideals(z5).size() == 2);
}

TEST_CASE("ideal arithmetic") {
    auto z12 = make_zn(12);
    Ideal i4 = make_ideal(z12, {4});
    Ideal i2 = make_ideal(z12, {2});
    Ideal i3 = make_ideal(z12, {3});
    Ideal i6 = make_ideal(z12, {6});

    CHECK(ideal_radical(i4).members == i2.members);
    CHECK(ideal_product(i2, i3).members == i6.members);
    CHECK(ideal_intersect(i2, i3).members == i6.members);
    CHECK(ideal_residual(i4, unit_ideal(z12)).members == i4.members);

    // radical laws: sqrt(sqrt(I)) = sqrt(I), sqrt(0) subset of sqrt(I)
    for (const Ideal& i : enumerate_ideals(z12)) {
        Ideal ri = ideal_radical(i);
        CHECK(ideal_radical(ri).members == ri.members);
        CHECK(i.members.subset_of(ri.members));
        CHECK(z12->nilradical_set.subset_of(ri.members));
    }
}

TEST_CASE("quotient ring") {
    auto z12 = make_zn(12);
    auto q = quotient_ring(z12, make_ideal(z12, {4}));
    CHECK(q->order == 4);
    // Z12/<4> is isomorphic to Z4: nilpotents form a 2-element set.
    CHECK(q->nilradical_set.size() == 2);

    auto q6 = quotient_ring(z12, make_ideal(z12, {6}));
    CHECK(q6->order == 6);
    CHECK(q6->nilradical_set.size() == 1);
}

TEST_CASE("product ring structure") {
    auto p = product_ring(make_zn(2), make_zn(4));
    CHECK(p->order == 8);
    CHECK(p->nilradical_set.size() == 2);  // {0}x{0,2}
    CHECK(p->units_set.size() == 2);       // {1}x{1,3}
}

TEST_CASE("ring homomorphisms") {
    auto z12 = make_zn(12);
    auto z6 = make_zn(6);
    auto f = reduce_hom(z12, z6);
    CHECK(f->is_surjective());
    CHECK_FALSE(f->is_injective());
    CHECK((*f)(7) == 1);

    auto id = identity_hom(z6);
    CHECK(id->is_isomorphism());

    // x -> 0 is not unital, hence rejected
    std::vector<int> zero_map(12, 0);
    CHECK_THROWS_AS(make_ring_hom(z12, z6, zero_map), input_error);
    // Z12 -> Z5 cannot reduce (5 does not divide 12)
    CHECK_THROWS_AS(reduce_hom(z12, make_zn(5)), input_error);
}
