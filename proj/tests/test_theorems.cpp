#include "smlab/report.hpp"
#include "smlab/theorems.hpp"
#include "smlab/workspace.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

using namespace smlab;

namespace {
const InstanceCatalog& standard_catalog() {
    static const InstanceCatalog cat = default_catalog(CapsLevel::standard);
    return cat;
}
}  // namespace

TEST_CASE("full suite passes on the standard catalog") {
    auto reports = check_all(standard_catalog(), 7);
    REQUIRE(reports.size() == 43);
    for (const CheckReport& r : reports) {
        INFO(r.theorem << "\n" << r.witness);
        CHECK(r.status == CheckReport::Status::pass);
        CHECK(r.hypothesis_satisfied + r.vacuous == r.instances_scanned);
        CHECK(r.hypothesis_satisfied > 0);  // nothing is wholly vacuous here
    }
    CHECK(std::is_sorted(reports.begin(), reports.end(),
                         [](const CheckReport& a, const CheckReport& b) {
                             return a.theorem < b.theorem;
                         }));
}

TEST_CASE("full suite passes on the minimal and large catalogs") {
    for (CapsLevel lvl : {CapsLevel::minimal, CapsLevel::large}) {
        auto cat = default_catalog(lvl);
        for (const CheckReport& r : check_all(cat, 7)) {
            INFO(caps_level_name(lvl) << " " << r.theorem << "\n" << r.witness);
            CHECK(r.status != CheckReport::Status::fail);
        }
    }
}

TEST_CASE("reports are byte-stable") {
    std::string a = reports_to_json(check_all(standard_catalog(), 7), 7).dump(2);
    std::string b = reports_to_json(check_all(standard_catalog(), 7), 7).dump(2);
    CHECK(a == b);
    // a different lemma-int seed still passes but is allowed to differ
    auto r1 = check_theorem("lemma-int", standard_catalog(), 1);
    CHECK(r1.status == CheckReport::Status::pass);
    CHECK(r1.seed == 1);
}

TEST_CASE("unknown theorem id is an input error") {
    CHECK_THROWS_AS(check_theorem("thm-nonexistent", standard_catalog()), input_error);
}

TEST_CASE("finite analogue of the idealization remark") {
    // In Z12(+)Z4: I = <2> semi n-ideal, N = <2bar> n-submodule, IM in N,
    // sqrt(Ann(M)) != sqrt(0), yet I(+)N is not a semi n-ideal.
    auto z12 = make_zn(12);
    auto m4 = make_cyclic_module(4, finite_base(z12));
    Ideal i2 = make_ideal(z12, {2});
    Submodule n2 = make_submodule(m4, {2});

    CHECK(is_semi_n_ideal(i2));
    CHECK(is_n_submodule(n2));
    REQUIRE(idealization_ideal_legal(i2, n2));
    CHECK(m4->sqrt_ann_cache.members != z12->nilradical_set);

    auto ext = idealization_ring(z12, m4);
    Ideal emb = idealization_ideal(ext, i2, n2);
    CHECK_FALSE(is_semi_n_ideal(emb));

    CheckReport rep = check_theorem("remark-Ide", standard_catalog());
    CHECK(rep.status == CheckReport::Status::pass);
    CHECK(rep.hypothesis_satisfied >= 1);
    CHECK(rep.witness.find("zn 12") != std::string::npos);
}

TEST_CASE("idealization converse has a nonvacuous instance") {
    // R = Z4, M = Z4: sqrt(Ann) = sqrt(0) = <2>, I = <2>, N = <2>
    auto z4 = make_zn(4);
    auto m4 = make_cyclic_module(4, finite_base(z4));
    CHECK(m4->sqrt_ann_cache.members == z4->nilradical_set);
    Ideal i2 = make_ideal(z4, {2});
    Submodule n2 = make_submodule(m4, {2});
    CHECK(is_semi_n_ideal(i2));
    CHECK(is_n_submodule(n2));
    auto ext = idealization_ring(z4, m4);
    CHECK(is_semi_n_ideal(idealization_ideal(ext, i2, n2)));

    CheckReport rep = check_theorem("thm-Ide-conv", standard_catalog());
    CHECK(rep.status == CheckReport::Status::pass);
    CHECK(rep.hypothesis_satisfied >= 1);
}

TEST_CASE("failing checkers carry replayable witnesses") {
    MutationGuard guard(Mutation::semi_n_conclude_membership);
    auto reports = check_all(standard_catalog());
    bool found_fail = false;
    for (const CheckReport& r : reports) {
        if (r.status != CheckReport::Status::fail) continue;
        found_fail = true;
        REQUIRE_FALSE(r.witness.empty());
        // the witness must parse as a workspace fragment
        CHECK_NOTHROW(parse_workspace(r.witness));
    }
    CHECK(found_fail);
}

TEST_CASE("search for separating submodules") {
    SeparatingResult r = search_separating("semi_n", "n_sub", standard_catalog());
    REQUIRE(r.found);
    Workspace ws = parse_workspace(r.witness);
    REQUIRE(ws.submodules.size() == 1);
    const Submodule& n = ws.submodules.begin()->second;
    CHECK(is_semi_n_submodule(n));
    CHECK_FALSE(is_n_submodule(n));

    CHECK_FALSE(search_separating("semi_n", "semi_n", standard_catalog()).found);
    CHECK_THROWS_AS(search_separating("bogus", "semi_n", standard_catalog()), input_error);

    // whether semi_r splits from semi_n at this scale is recorded, not asserted
    SeparatingResult open = search_separating("semi_r", "semi_n", standard_catalog());
    if (open.found) {
        Workspace w2 = parse_workspace(open.witness);
        const Submodule& n2 = w2.submodules.begin()->second;
        CHECK((is_semi_r_submodule(n2) && !is_semi_n_submodule(n2)));
    }
}

TEST_CASE("JSON report schema") {
    auto rep = check_theorem("diagram", standard_catalog(), 7);
    ordered_json j = report_to_json(rep);
    const char* keys[] = {"theorem",    "instances_scanned", "hypothesis_satisfied",
                          "vacuous",    "status",            "witness",
                          "wall_time_ms", "seed"};
    std::size_t k = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++k) {
        REQUIRE(k < std::size(keys));
        CHECK(it.key() == keys[k]);
    }
    CHECK(k == std::size(keys));
    CHECK(j["status"] == "pass");
    CHECK(j["wall_time_ms"] == 0);
    CHECK(j["seed"] == 7);

    ordered_json all = reports_to_json(check_all(standard_catalog(), 7), 7);
    CHECK(all["summary"]["all_pass"] == true);
    CHECK(all["summary"]["total"] == 43);
    CHECK(all["summary"]["wholly_vacuous"].empty());
}
